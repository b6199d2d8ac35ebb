use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::complex::{koszul_sp, Resolution};
use super::free::lie3_embedding;
use crate::error::{Error, Result};
use crate::exactlinalg::{
    lattice_preimage, quotient_invariants, AbGroup, IntMatrix, LatticeBasis, RowSolver,
};

/// `(L_0 SP², L_1 SP²)` of the resolved group.
pub fn l_sp2(res: &Resolution) -> (AbGroup, AbGroup) {
    let c = koszul_sp(2, res).expect("Koszul differentials compose to zero");
    (c.homology(0), c.homology(1))
}

/// `(L_0 SP³, L_1 SP³, L_2 SP³)` of the resolved group.
pub fn l_sp3(res: &Resolution) -> (AbGroup, AbGroup, AbGroup) {
    let c = koszul_sp(3, res).expect("Koszul differentials compose to zero");
    (c.homology(0), c.homology(1), c.homology(2))
}

/// `L_2 𝔏ₛ³`, as `ι⁻¹(R̄⊗R̄⊗F̄) / L³(R̄)` inside `L³(F̄)`.
pub fn l2_ls3(res: &Resolution) -> AbGroup {
    let n = res.p0_rank();
    let iota = lie3_embedding(n);
    if iota.rows() == 0 {
        return AbGroup::trivial();
    }
    // R̄ is spanned by the columns of M
    let rbar: Vec<Vec<BigInt>> = (0..res.p1_rank()).map(|t| res.map().column(t)).collect();
    let mut rrf = Vec::new();
    for a in &rbar {
        for b in &rbar {
            for c in 0..n {
                let mut v = vec![BigInt::zero(); n * n * n];
                for (p, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (q, y) in b.iter().enumerate() {
                        if !y.is_zero() {
                            v[(p * n + q) * n + c] += x * y;
                        }
                    }
                }
                rrf.push(v);
            }
        }
    }
    let rrf = LatticeBasis::from_generators(n * n * n, rrf);
    let kernel = lattice_preimage(&iota, &rrf).expect("widths agree");

    // L³(R̄): basic brackets of R̄'s basis, written in L³(F̄) coordinates
    let k = rbar.len();
    let m = IntMatrix::from_rows(k, (0..n).map(|p| rbar.iter().map(|col| col[p].clone()).collect()).collect());
    let t3 = m.kronecker(&m).kronecker(&m);
    let solver = RowSolver::new(&iota);
    let src = lie3_embedding(k);
    let mut lr = Vec::with_capacity(src.rows());
    for r in 0..src.rows() {
        let image = t3.apply_col(src.row(r));
        lr.push(
            solver
                .solve(&image)
                .expect("widths agree")
                .expect("brackets of R̄ lie in L³(F̄)"),
        );
    }
    let lr = LatticeBasis::from_generators(iota.rows(), lr);
    quotient_invariants(&kernel, &lr).expect("L³(R̄) lies in the kernel")
}

pub fn tor(a: &AbGroup, b: &AbGroup) -> AbGroup {
    a.tor(b)
}

/// `L₁SP³(A)` from the presentation `(L₁SP²(A) ⊗ A) / Jac`.
///
/// `L₁SP²(A)` is generated by `β_{ij}` (`i < j`) of order `gcd(d_i, d_j)`,
/// so the tensor has generators `β_{ij} ⊗ a_k` of order `gcd(d_i, d_j, d_k)`.
/// For every `h` dividing the exponent of `A`, the `h`-torsion is generated
/// by `u_p = (d_p / gcd(d_p, h)) a_p`, and every triple of these contributes
/// `β_h(x,y)⊗z − β_h(x,z)⊗y + β_h(y,z)⊗x`. Free summands are split off with
/// `L₁SP³(A ⊕ Z^r) = L₁SP³(A) ⊕ L₁SP²(A)^r`.
pub fn jean_l1sp3(a: &AbGroup) -> AbGroup {
    let d: Vec<BigInt> = a.torsion_factors().cloned().collect();
    let free = a.free_rank();
    let finite = jean_finite(&d);
    if free == 0 {
        return finite;
    }
    let (_, l1sp2) = l_sp2(&Resolution::from_orders(&d));
    (0..free).fold(finite, |acc, _| acc.direct_sum(&l1sp2))
}

fn jean_finite(d: &[BigInt]) -> AbGroup {
    let n = d.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pair_index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let width = pairs.len() * n;
    if width == 0 {
        return AbGroup::trivial();
    }
    let gen = |p: usize, k: usize| p * n + k;

    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for k in 0..n {
            let mut v = vec![BigInt::zero(); width];
            v[gen(p, k)] = d[i].gcd(&d[j]).gcd(&d[k]);
            relations.push(v);
        }
    }

    // β_h(u a_i, w a_j) as a multiple of β_{ij}, with sign for i > j
    let beta = |h: &BigInt, i: usize, u: &BigInt, j: usize, w: &BigInt| -> Option<(usize, BigInt)> {
        if i == j {
            return None;
        }
        let (i, u, j, w, sign) = if i < j {
            (i, u, j, w, BigInt::one())
        } else {
            (j, w, i, u, -BigInt::one())
        };
        let g = d[i].gcd(&d[j]);
        let c = h * w / &d[j];
        let num = c * u * &g;
        let (q, r) = num.div_rem(&d[i]);
        debug_assert!(r.is_zero(), "β coordinates are integral");
        Some((pair_index[&(i, j)], sign * q))
    };

    let exponent = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x));
    let divisors: Vec<BigInt> = divisors_of(&exponent);
    for h in &divisors {
        let u: Vec<BigInt> = d.iter().map(|dp| dp / dp.gcd(h)).collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut v = vec![BigInt::zero(); width];
                    let terms = [
                        (x, y, z, BigInt::one()),
                        (x, z, y, -BigInt::one()),
                        (y, z, x, BigInt::one()),
                    ];
                    for (a1, a2, a3, s) in terms {
                        if let Some((p, c)) = beta(h, a1, &u[a1], a2, &u[a2]) {
                            v[gen(p, a3)] += s * c * &u[a3];
                        }
                    }
                    if v.iter().any(|e| !e.is_zero()) {
                        relations.push(v);
                    }
                }
            }
        }
    }
    let rel = LatticeBasis::from_generators(width, relations);
    quotient_invariants(&LatticeBasis::full(width), &rel).expect("relations lie in the ambient lattice")
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= *n {
        if n.is_multiple_of(&k) {
            out.push(k.clone());
            let other = n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out.sort();
    out
}

/// An extension `0 → sub → X → quo → 0` whose middle term is not determined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsRecord {
    pub sub: AbGroup,
    pub quo: AbGroup,
    /// `|sub|·|quo|`, or `None` when a contributing term is not computed.
    pub order: Option<BigInt>,
    /// Set when the `Tor₁(A, A, Z/2)` contribution is present but not computed.
    pub triple_torsion_uncomputed: bool,
}

impl BoundsRecord {
    pub fn extension(&self) -> &'static str {
        "unresolved"
    }
}

/// Either an exact identification or the bounds that the known exact
/// sequences give.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gated {
    Exact(AbGroup),
    Bounds(BoundsRecord),
}

fn extension_order(a: &AbGroup, b: &AbGroup) -> Option<BigInt> {
    Some(a.order()? * b.order()?)
}

/// `H₅ K(A, 2)`.
pub fn h5(a: &AbGroup) -> Gated {
    let (_, l1) = l_sp2(&Resolution::from_group(a));
    if !a.has_torsion_at(2) {
        return Gated::Exact(l1);
    }
    let quo = a.tor(&AbGroup::cyclic(2));
    Gated::Bounds(BoundsRecord {
        order: extension_order(&l1, &quo),
        sub: l1,
        quo,
        triple_torsion_uncomputed: false,
    })
}

/// `H₇ K(A, 2)`.
pub fn h7(a: &AbGroup) -> Gated {
    let (_, l1, _) = l_sp3(&Resolution::from_group(a));
    let two = a.has_torsion_at(2);
    if !two && !a.has_torsion_at(3) {
        return Gated::Exact(l1);
    }
    let quo = a.tor(&AbGroup::cyclic(3));
    Gated::Bounds(BoundsRecord {
        order: if two { None } else { extension_order(&l1, &quo) },
        sub: l1,
        quo,
        triple_torsion_uncomputed: two,
    })
}

/// Value of a named derived-functor entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FunctorValue {
    Group(AbGroup),
    Gated(Gated),
}

/// The derived-functor table for `A`, in a fixed order.
pub fn derived_table(a: &AbGroup) -> Vec<(&'static str, FunctorValue)> {
    use FunctorValue::{Gated as G, Group};
    let res = Resolution::from_group(a);
    let (sp2_0, sp2_1) = l_sp2(&res);
    let (sp3_0, sp3_1, sp3_2) = l_sp3(&res);
    vec![
        ("SP2(A)", Group(sp2_0)),
        ("SP3(A)", Group(sp3_0)),
        ("L1SP2", Group(sp2_1)),
        ("L1SP3", Group(sp3_1)),
        ("L2SP3", Group(sp3_2)),
        ("L2LS3", Group(l2_ls3(&res))),
        ("Tor(A,Z/2)", Group(a.tor(&AbGroup::cyclic(2)))),
        ("Tor(A,Z/3)", Group(a.tor(&AbGroup::cyclic(3)))),
        ("H5K(A,2)", G(h5(a))),
        ("H7K(A,2)", G(h7(a))),
    ]
}

/// Looks up one group-valued entry of [`derived_table`] by name.
pub fn functor_value(a: &AbGroup, name: &str) -> Result<AbGroup> {
    let unknown = || Error::Unknown {
        kind: "functor value",
        name: name.to_string(),
    };
    match derived_table(a).into_iter().find(|(n, _)| *n == name) {
        Some((_, FunctorValue::Group(g))) => Ok(g),
        Some((_, FunctorValue::Gated(Gated::Exact(g)))) => Ok(g),
        Some((_, FunctorValue::Gated(Gated::Bounds(_)))) => Err(Error::Internal(format!(
            "{name} is only bounded for this group"
        ))),
        None => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[i64]) -> AbGroup {
        AbGroup::from_cyclic_orders(v.iter().map(|&x| BigInt::from(x)))
    }

    fn res(v: &[i64]) -> Resolution {
        Resolution::from_group(&g(v))
    }

    #[test]
    fn l_sp2_examples() {
        assert_eq!(l_sp2(&res(&[9, 3])).1, g(&[3]));
        for l in [0, 2, 3, 4, 5, 8, 9, 27] {
            assert!(l_sp2(&res(&[l])).1.is_trivial(), "{l}");
        }
        assert!(l_sp2(&res(&[0, 0, 0])).1.is_trivial());
    }

    #[test]
    fn l_sp3_examples() {
        let (_, l1, l2) = l_sp3(&res(&[9, 3]));
        assert_eq!(l1, g(&[3, 3]));
        assert!(l2.is_trivial());
        assert_eq!(l_sp3(&res(&[25, 5])).1, g(&[5, 5]));
        assert!(l_sp3(&res(&[27])).1.is_trivial());
    }

    #[test]
    fn l2_ls3_examples() {
        assert_eq!(l2_ls3(&res(&[9, 3])), g(&[3, 3]));
        assert_eq!(l2_ls3(&res(&[6, 2])), g(&[2, 2]));
        assert!(l2_ls3(&res(&[9])).is_trivial());
        assert!(l2_ls3(&res(&[0, 0])).is_trivial());
    }

    #[test]
    fn tor_examples() {
        assert_eq!(tor(&g(&[4, 0]), &g(&[6])), g(&[2]));
        assert_eq!(tor(&g(&[9, 3]), &g(&[3])), g(&[3, 3]));
    }

    #[test]
    fn jean_matches_koszul() {
        for v in [&[9i64, 3][..], &[3, 3, 3], &[4, 2], &[8, 4, 2], &[27, 9, 3], &[6, 6, 2], &[5]] {
            assert_eq!(jean_l1sp3(&g(v)), l_sp3(&res(v)).1, "{v:?}");
        }
        assert!(jean_l1sp3(&g(&[7])).is_trivial());
    }

    #[test]
    fn jean_with_free_summand() {
        assert_eq!(jean_l1sp3(&g(&[9, 3, 0])), l_sp3(&res(&[9, 3, 0])).1);
    }

    #[test]
    fn gated_examples() {
        assert_eq!(h7(&g(&[25, 5])), Gated::Exact(g(&[5, 5])));
        match h7(&g(&[9, 3])) {
            Gated::Bounds(b) => {
                assert_eq!(b.sub, g(&[3, 3]));
                assert_eq!(b.quo, g(&[3, 3]));
                assert_eq!(b.order, Some(BigInt::from(81)));
                assert!(!b.triple_torsion_uncomputed);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(h5(&g(&[9, 3])), Gated::Exact(g(&[3])));
        match h7(&g(&[4, 2])) {
            Gated::Bounds(b) => {
                assert_eq!(b.order, None);
                assert!(b.triple_torsion_uncomputed);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(h5(&g(&[4, 2])), Gated::Bounds(_)));
    }

    #[test]
    fn table_lookup() {
        assert_eq!(functor_value(&g(&[9, 3]), "L1SP3").unwrap(), g(&[3, 3]));
        assert!(functor_value(&g(&[9, 3]), "nope").is_err());
        assert!(functor_value(&g(&[9, 3]), "H7K(A,2)").is_err());
    }
}
