use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{quotient_invariants, AbGroup, IntMatrix, LatticeBasis, RowSolver};

/// Strictly increasing `k`-tuples from `0..n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Nondecreasing `k`-tuples from `0..n`, lexicographic.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All `k`-tuples from `0..n`, lexicographic (the Kronecker order).
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FunctorTag {
    Tensor2,
    Tensor3,
    Sp2,
    Sp3,
    Lambda2,
    Lambda3,
    Lie3,
    Ls3,
}

impl FunctorTag {
    pub const ALL: [FunctorTag; 8] = [
        FunctorTag::Tensor2,
        FunctorTag::Tensor3,
        FunctorTag::Sp2,
        FunctorTag::Sp3,
        FunctorTag::Lambda2,
        FunctorTag::Lambda3,
        FunctorTag::Lie3,
        FunctorTag::Ls3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctorTag::Tensor2 => "TENSOR2",
            FunctorTag::Tensor3 => "TENSOR3",
            FunctorTag::Sp2 => "SP2",
            FunctorTag::Sp3 => "SP3",
            FunctorTag::Lambda2 => "LAMBDA2",
            FunctorTag::Lambda3 => "LAMBDA3",
            FunctorTag::Lie3 => "LIE3",
            FunctorTag::Ls3 => "LS3",
        }
    }
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctorTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "functor",
                name: s.to_string(),
            })
    }
}

/// A functor evaluated on `Z^rank`: labelled generators and the group they
/// generate. All tags except `LS3` give free groups on the labels; `LS3` is
/// presented on the generators of `SP² ⊗ Z^rank`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeFunctorValue {
    pub generators: Vec<String>,
    pub group: AbGroup,
}

fn label(ix: &[usize], sep: &str) -> String {
    ix.iter()
        .map(|i| format!("e{}", i + 1))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Weight-3 basic brackets `[[e_j, e_i], e_k]` (`j > i ≤ k`), 0-based.
pub fn lie3_basis(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in i..n {
                out.push((j, i, k));
            }
        }
    }
    out
}

/// `ι: L³ → ⊗³` as a row-convention matrix (`#brackets × n³`), using
/// `[[a,b],c] ↦ (ab − ba)c − c(ab − ba)`.
pub fn lie3_embedding(n: usize) -> IntMatrix {
    let basis = lie3_basis(n);
    let mut m = IntMatrix::zeros(basis.len(), n * n * n);
    let at = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    for (r, &(j, i, k)) in basis.iter().enumerate() {
        m[(r, at(j, i, k))] += 1;
        m[(r, at(i, j, k))] -= 1;
        m[(r, at(k, j, i))] -= 1;
        m[(r, at(k, i, j))] += 1;
    }
    m
}

/// Matrix of `SP³ → SP² ⊗ A`, `abc ↦ ab⊗c + ac⊗b + bc⊗a`, column convention.
pub fn ls3_presentation(n: usize) -> IntMatrix {
    let sp2 = multisets(n, 2);
    let sp3 = multisets(n, 3);
    let idx: HashMap<Vec<usize>, usize> = sp2.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = IntMatrix::zeros(sp2.len() * n, sp3.len());
    for (col, t) in sp3.iter().enumerate() {
        for drop in 0..3 {
            let mut pair = t.clone();
            let c = pair.remove(drop);
            m[(idx[&pair] * n + c, col)] += 1;
        }
    }
    m
}

pub fn functor_on_free(tag: FunctorTag, rank: usize) -> FreeFunctorValue {
    let free = |labels: Vec<String>| FreeFunctorValue {
        group: AbGroup::free(labels.len()),
        generators: labels,
    };
    match tag {
        FunctorTag::Tensor2 => free(tuples(rank, 2).iter().map(|t| label(t, "⊗")).collect()),
        FunctorTag::Tensor3 => free(tuples(rank, 3).iter().map(|t| label(t, "⊗")).collect()),
        FunctorTag::Sp2 => free(multisets(rank, 2).iter().map(|t| label(t, "")).collect()),
        FunctorTag::Sp3 => free(multisets(rank, 3).iter().map(|t| label(t, "")).collect()),
        FunctorTag::Lambda2 => free(subsets(rank, 2).iter().map(|t| label(t, "∧")).collect()),
        FunctorTag::Lambda3 => free(subsets(rank, 3).iter().map(|t| label(t, "∧")).collect()),
        FunctorTag::Lie3 => free(
            lie3_basis(rank)
                .iter()
                .map(|&(j, i, k)| format!("[[e{},e{}],e{}]", j + 1, i + 1, k + 1))
                .collect(),
        ),
        FunctorTag::Ls3 => {
            let mut generators = Vec::new();
            for s in multisets(rank, 2) {
                for c in 0..rank {
                    generators.push(format!("{}⊗e{}", label(&s, ""), c + 1));
                }
            }
            let pres = ls3_presentation(rank);
            let rel = LatticeBasis::from_generators(pres.rows(), pres.transpose().row_vecs());
            let group = quotient_invariants(&LatticeBasis::full(pres.rows()), &rel)
                .expect("relations lie in the ambient lattice");
            FreeFunctorValue { generators, group }
        }
    }
}

/// Image of `Π_t (M e_{a_t})` in the symmetric power, as multiset coefficients.
fn sym_image(m: &IntMatrix, a: &[usize]) -> HashMap<Vec<usize>, BigInt> {
    let mut acc: HashMap<Vec<usize>, BigInt> = HashMap::from([(Vec::new(), BigInt::one())]);
    for &src in a {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (mono, c) in &acc {
            for p in 0..m.rows() {
                let x = &m[(p, src)];
                if x.is_zero() {
                    continue;
                }
                let mut mono2 = mono.clone();
                mono2.push(p);
                mono2.sort_unstable();
                *next.entry(mono2).or_default() += c * x;
            }
        }
        acc = next;
    }
    acc
}

fn minor(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
    let sub = IntMatrix::from_rows(
        cols.len(),
        rows.iter()
            .map(|&r| cols.iter().map(|&c| m[(r, c)].clone()).collect())
            .collect(),
    );
    sub.determinant()
}

/// The induced map `F(M) : F(Z^a) → F(Z^b)` for `M : Z^a → Z^b` (`b × a`).
///
/// For `LS3` the result is the map on the presenting module `SP² ⊗ A`, which
/// preserves the relations and so descends to the quotient.
pub fn functor_on_map(tag: FunctorTag, m: &IntMatrix) -> IntMatrix {
    let (b, a) = (m.rows(), m.cols());
    match tag {
        FunctorTag::Tensor2 => m.kronecker(m),
        FunctorTag::Tensor3 => m.kronecker(m).kronecker(m),
        FunctorTag::Sp2 | FunctorTag::Sp3 => {
            let k = if tag == FunctorTag::Sp2 { 2 } else { 3 };
            let src = multisets(a, k);
            let dst = multisets(b, k);
            let idx: HashMap<&Vec<usize>, usize> = dst.iter().enumerate().map(|(i, s)| (s, i)).collect();
            let mut out = IntMatrix::zeros(dst.len(), src.len());
            for (col, s) in src.iter().enumerate() {
                for (mono, c) in sym_image(m, s) {
                    out[(idx[&mono], col)] += c;
                }
            }
            out
        }
        FunctorTag::Lambda2 | FunctorTag::Lambda3 => {
            let k = if tag == FunctorTag::Lambda2 { 2 } else { 3 };
            let src = subsets(a, k);
            let dst = subsets(b, k);
            let mut out = IntMatrix::zeros(dst.len(), src.len());
            for (col, s) in src.iter().enumerate() {
                for (row, t) in dst.iter().enumerate() {
                    out[(row, col)] = minor(m, t, s);
                }
            }
            out
        }
        FunctorTag::Lie3 => {
            let src = lie3_embedding(a);
            let dst = lie3_embedding(b);
            let t3 = m.kronecker(m).kronecker(m);
            let solver = RowSolver::new(&dst);
            let mut out = IntMatrix::zeros(dst.rows(), src.rows());
            for col in 0..src.rows() {
                let image = t3.apply_col(src.row(col));
                let coords = solver
                    .solve(&image)
                    .expect("widths agree")
                    .expect("brackets map to brackets");
                for (row, c) in coords.into_iter().enumerate() {
                    out[(row, col)] = c;
                }
            }
            out
        }
        FunctorTag::Ls3 => functor_on_map(FunctorTag::Sp2, m).kronecker(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(tuples(2, 2).len(), 4);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(multisets(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn examples() {
        assert_eq!(
            functor_on_map(FunctorTag::Sp2, &IntMatrix::identity(2)),
            IntMatrix::identity(3)
        );
        let d = IntMatrix::from_i64_rows(&[&[9, 0], &[0, 3]]);
        assert_eq!(
            functor_on_map(FunctorTag::Lambda2, &d),
            IntMatrix::from_i64_rows(&[&[27]])
        );
        let lie = functor_on_free(FunctorTag::Lie3, 2);
        assert_eq!(lie.generators, vec!["[[e2,e1],e1]", "[[e2,e1],e2]"]);
    }

    #[test]
    fn ls3_free_ranks() {
        for m in 1..=4usize {
            let v = functor_on_free(FunctorTag::Ls3, m);
            let expect = m * m * (m + 1) / 2 - (m + 2) * (m + 1) * m / 6;
            assert_eq!(v.group.free_rank(), expect, "m = {m}");
            assert!(v.group.torsion_factors().all(|t| *t == BigInt::from(3)));
        }
    }

    #[test]
    fn parse_tags() {
        assert_eq!("sp2".parse::<FunctorTag>().unwrap(), FunctorTag::Sp2);
        assert!("GAMMA2".parse::<FunctorTag>().is_err());
    }
}
