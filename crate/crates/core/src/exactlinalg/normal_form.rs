use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, LatticeBasis};

/// Incremental row-echelon basis over the integers.
///
/// Vectors are folded in one at a time with extended-gcd row operations, so
/// the builder never materializes the full generator matrix. `finish` reduces
/// the entries above each pivot and yields the canonical Hermite normal form.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    width: usize,
    pivots: BTreeMap<usize, Vec<BigInt>>,
}

impl EchelonBuilder {
    pub fn new(width: usize) -> Self {
        EchelonBuilder {
            width,
            pivots: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Folds `v` into the span. Returns `true` when the span grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        let mut grew = false;
        let mut start = 0;
        loop {
            let Some(c) = (start..self.width).find(|&c| !v[c].is_zero()) else {
                return grew;
            };
            match self.pivots.get_mut(&c) {
                None => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.pivots.insert(c, v);
                    return true;
                }
                Some(p) => {
                    let (q, r) = v[c].div_mod_floor(&p[c]);
                    if r.is_zero() {
                        axpy(&mut v, &-q, p, c);
                    } else {
                        // p' = s p + t v,  v' = (p_c/g) v - (v_c/g) p; unimodular.
                        let e = p[c].extended_gcd(&v[c]);
                        let pc = &p[c] / &e.gcd;
                        let vc = &v[c] / &e.gcd;
                        let mut np = Vec::with_capacity(self.width);
                        let mut nv = Vec::with_capacity(self.width);
                        for k in 0..self.width {
                            np.push(&e.x * &p[k] + &e.y * &v[k]);
                            nv.push(&pc * &v[k] - &vc * &p[k]);
                        }
                        if np[c].is_negative() {
                            np.iter_mut().for_each(|x| *x = -std::mem::take(x));
                        }
                        *p = np;
                        v = nv;
                        grew = true;
                    }
                }
            }
            start = c + 1;
        }
    }

    /// Reduces `v` against the current pivots. Returns the remainder; `v` is in
    /// the span iff the remainder is zero.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut v = v.to_vec();
        for (&c, p) in &self.pivots {
            if v[c].is_zero() {
                continue;
            }
            let (q, _) = v[c].div_mod_floor(&p[c]);
            if !q.is_zero() {
                axpy(&mut v, &-q, p, c);
            }
        }
        v
    }

    pub fn finish(self) -> LatticeBasis {
        let width = self.width;
        let mut rows: Vec<(usize, Vec<BigInt>)> = self.pivots.into_iter().collect();
        // top-down: row i only touches columns right of its own pivot, so
        // columns fixed by earlier passes stay fixed
        for i in 0..rows.len() {
            let (c, pivot) = rows[i].clone();
            for row in rows.iter_mut().take(i) {
                let q = row.1[c].div_floor(&pivot[c]);
                if !q.is_zero() {
                    axpy(&mut row.1, &-q, &pivot, c);
                }
            }
        }
        LatticeBasis::from_hnf_rows(width, rows.into_iter().map(|(_, r)| r).collect())
    }
}

/// v[k] += a * p[k] for k >= from (entries before `from` are zero in `p`).
fn axpy(v: &mut [BigInt], a: &BigInt, p: &[BigInt], from: usize) {
    for k in from..v.len() {
        if !p[k].is_zero() {
            v[k] += a * &p[k];
        }
    }
}

/// Canonical Hermite normal form of the row span of `m`.
pub fn hermite_normal_form(m: &IntMatrix) -> LatticeBasis {
    let mut b = EchelonBuilder::new(m.cols());
    for r in 0..m.rows() {
        b.insert(m.row(r).to_vec());
    }
    b.finish()
}

/// Basis of the left kernel `{v : v·m = 0}`, as rows in Hermite normal form.
pub fn left_kernel(m: &IntMatrix) -> LatticeBasis {
    let (rows, cols) = (m.rows(), m.cols());
    let mut b = EchelonBuilder::new(cols + rows);
    for r in 0..rows {
        let mut v = m.row(r).to_vec();
        v.extend((0..rows).map(|k| if k == r { BigInt::one() } else { BigInt::zero() }));
        b.insert(v);
    }
    project_tail(b.finish(), cols)
}

/// Rows of `l` whose first `head` coordinates vanish, restricted to the tail.
pub(crate) fn project_tail(l: LatticeBasis, head: usize) -> LatticeBasis {
    let width = l.ambient_rank() - head;
    let mut b = EchelonBuilder::new(width);
    for row in l.basis() {
        if row[..head].iter().all(Zero::is_zero) {
            b.insert(row[head..].to_vec());
        }
    }
    b.finish()
}

/// Result of [`smith_normal_form`]: `left · m · right` is diagonal.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// `min(rows, cols)` diagonal entries, nonnegative, each dividing the next.
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pr, pc)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        left.swap_rows(t, pr);
        a.swap_cols(t, pc);
        right.swap_cols(t, pc);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest leftover in row/column t onto the diagonal
                let mut best: Option<(usize, usize)> = None;
                let mut best_abs = a[(t, t)].abs();
                for i in t + 1..rows {
                    let v = a[(i, t)].abs();
                    if !v.is_zero() && v < best_abs {
                        best_abs = v;
                        best = Some((i, t));
                    }
                }
                for j in t + 1..cols {
                    let v = a[(t, j)].abs();
                    if !v.is_zero() && v < best_abs {
                        best_abs = v;
                        best = Some((t, j));
                    }
                }
                if let Some((i, j)) = best {
                    if i != t {
                        a.swap_rows(t, i);
                        left.swap_rows(t, i);
                    }
                    if j != t {
                        a.swap_cols(t, j);
                        right.swap_cols(t, j);
                    }
                }
                continue;
            }
            // divisibility of the trailing block
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diag = (0..n).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diag, left, right }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| &v < b) {
                best = Some(((i, j), v));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Nonzero Smith invariants of `m` (the elementary divisors, including 1s).
pub fn elementary_divisors(m: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(m)
        .diag
        .into_iter()
        .filter(|d| !d.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_reduces_above_every_pivot() {
        let m = IntMatrix::from_i64_rows(&[&[1, 3, 0], &[0, -1, -1], &[-1, 0, 5]]);
        let h = hermite_normal_form(&m);
        assert_eq!(h.basis(), &[ints(&[1, 0, 1]), ints(&[0, 1, 1]), ints(&[0, 0, 2])]);
        assert_eq!(hermite_normal_form(&h.to_matrix()), h);
    }

    #[test]
    fn hnf_examples() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[3, 0]]);
        assert_eq!(hermite_normal_form(&m).basis(), &[ints(&[1, 0])]);

        let id = IntMatrix::identity(2);
        assert_eq!(hermite_normal_form(&id).basis(), &[ints(&[1, 0]), ints(&[0, 1])]);

        // by hand: (9,0),(3,3) -> gcd on col 0 gives (3,3), (0,-9)+... ; with (0,3) the span is 3Z x 3Z
        let m = IntMatrix::from_i64_rows(&[&[9, 0], &[0, 3], &[3, 3]]);
        assert_eq!(hermite_normal_form(&m).basis(), &[ints(&[3, 0]), ints(&[0, 3])]);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let m = IntMatrix::from_i64_rows(&[&[1, 7], &[0, 3]]);
        assert_eq!(hermite_normal_form(&m).basis(), &[ints(&[1, 1]), ints(&[0, 3])]);
    }

    #[test]
    fn snf_examples() {
        let d = |v: &[i64]| IntMatrix::diagonal(v.len(), v.len(), &ints(v));
        assert_eq!(smith_normal_form(&d(&[2, 3])).diag, ints(&[1, 6]));
        assert_eq!(smith_normal_form(&IntMatrix::zeros(2, 3)).diag, ints(&[0, 0]));
        assert_eq!(smith_normal_form(&d(&[9, 3])).diag, ints(&[3, 9]));
    }

    #[test]
    fn snf_transforms_diagonalize() {
        let m = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diag, ints(&[2, 6, 12]));
        let d = s.left.mul(&m).mul(&s.right);
        assert_eq!(d, IntMatrix::diagonal(3, 3, &s.diag));
        assert_eq!(s.left.determinant().abs(), BigInt::one());
        assert_eq!(s.right.determinant().abs(), BigInt::one());
    }

    #[test]
    fn left_kernel_basic() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4], &[0, 1]]);
        let k = left_kernel(&m);
        assert_eq!(k.basis(), &[ints(&[2, -1, 0])]);
    }
}
