mod common;

use gdslab::exactlinalg::{
    hermite_normal_form, lattice_preimage, smith_normal_form, IntMatrix, LatticeBasis,
};
use gdslab::freering::{deviation, left_partial, right_partial, GroupWord, RingContext, RingElement};
use gdslab::functors::{functor_on_map, FunctorTag};
use gdslab::nilpotent::FreeNilpotent;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const RANK: usize = 3;

fn word_strategy(rank: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((1..=rank, -3i64..=3), 1..6).prop_map(|lits| {
        lits.into_iter().fold(GroupWord::identity(), |w, (g, k)| {
            w.concat(&GroupWord::generator_pow(g, if k == 0 { 1 } else { k }))
        })
    })
}

fn gamma2_strategy(rank: usize) -> impl Strategy<Value = GroupWord> {
    (word_strategy(rank), word_strategy(rank)).prop_map(|(a, b)| GroupWord::commutator(&a, &b))
}

fn matrix_strategy(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, rows * cols).prop_map(move |v| {
        IntMatrix::from_rows(
            cols,
            v.chunks(cols.max(1))
                .take(rows)
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    })
}

fn ctx() -> RingContext {
    RingContext::new(RANK, 4).unwrap()
}

fn nil() -> &'static FreeNilpotent {
    use std::sync::OnceLock;
    static N: OnceLock<FreeNilpotent> = OnceLock::new();
    N.get_or_init(|| FreeNilpotent::new(RANK).unwrap())
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fox_reconstruction(w in word_strategy(RANK)) {
        let c = ctx();
        let u = deviation(c, &w).unwrap();
        let mut left = RingElement::zero(c);
        let mut right = RingElement::zero(c);
        for i in 1..=RANK {
            let y = RingElement::y(c, i).unwrap();
            left = &left + &(&left_partial(&u, i).unwrap() * &y);
            right = &right + &(&y * &right_partial(&u, i).unwrap());
        }
        prop_assert_eq!(&left, &u);
        prop_assert_eq!(&right, &u);
    }

    #[test]
    fn deviation_is_multiplicative(a in word_strategy(RANK), b in word_strategy(RANK)) {
        let c = ctx();
        let (da, db) = (deviation(c, &a).unwrap(), deviation(c, &b).unwrap());
        let dab = deviation(c, &a.concat(&b)).unwrap();
        prop_assert_eq!(dab, &(&da + &db) + &(&da * &db));
    }

    #[test]
    fn inverse_word_is_ring_inverse(w in word_strategy(RANK)) {
        let c = ctx();
        let u = w.evaluate(c).unwrap();
        prop_assert_eq!(w.inverse().evaluate(c).unwrap(), u.inverse().unwrap());
        prop_assert_eq!(&u * &w.inverse().evaluate(c).unwrap(), RingElement::one(c));
    }

    #[test]
    fn word_log_is_additive_on_gamma2(a in gamma2_strategy(RANK), b in gamma2_strategy(RANK)) {
        let n = nil();
        let la = n.word_log(&a).unwrap();
        let lb = n.word_log(&b).unwrap();
        let lab = n.word_log(&a.concat(&b)).unwrap();
        prop_assert_eq!(lab.coords().to_vec(), add(la.coords(), lb.coords()));
        let inv = n.word_log(&a.inverse()).unwrap();
        prop_assert!(add(la.coords(), inv.coords()).iter().all(Zero::is_zero));
    }

    #[test]
    fn jacobi_in_coordinates(
        x in word_strategy(RANK),
        y in word_strategy(RANK),
        z in word_strategy(RANK),
    ) {
        let c = GroupWord::commutator;
        let j = c(&c(&x, &y), &z).concat(&c(&c(&y, &z), &x)).concat(&c(&c(&z, &x), &y));
        prop_assert!(nil().word_log(&j).unwrap().coords().iter().all(Zero::is_zero));
    }

    #[test]
    fn conjugation_closure_is_normal(ws in prop::collection::vec(gamma2_strategy(RANK), 1..3)) {
        let n = nil();
        let l = n.closure_from_words(&ws, 4).unwrap();
        prop_assert!(n.is_conjugation_closed(&l).unwrap());
        for w in &ws {
            for g in 1..=RANK {
                let conj = w.conjugate_by(&GroupWord::generator(g));
                prop_assert!(l.contains_vector(n.word_log(&conj).unwrap().coords()).unwrap());
            }
        }
    }

    #[test]
    fn smith_form_is_sound(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix_strategy(r, c, 9))) {
        let s = smith_normal_form(&m);
        prop_assert!(s.left.determinant().abs().is_one());
        prop_assert!(s.right.determinant().abs().is_one());
        let d = s.left.mul(&m).mul(&s.right);
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                let want = if r == c { s.diag[r].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(r, c)], &want);
            }
        }
        for w in s.diag.windows(2) {
            prop_assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero() && !w[0].is_zero());
        }
    }

    #[test]
    fn hnf_is_idempotent(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix_strategy(r, c, 9))) {
        let h = hermite_normal_form(&m);
        prop_assert_eq!(hermite_normal_form(&h.to_matrix()), h.clone());
        for row in m.row_vecs() {
            prop_assert!(h.contains_vector(&row).unwrap());
        }
    }

    #[test]
    fn preimage_is_exact(
        phi in matrix_strategy(3, 3, 4),
        gens in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..3),
        probe in prop::collection::vec(-4i64..=4, 3),
    ) {
        let l = LatticeBasis::from_generators(3, gens.iter().map(|g| common::ints(g)));
        let pre = lattice_preimage(&phi, &l).unwrap();
        for row in pre.basis() {
            prop_assert!(l.contains_vector(&phi.apply_row(row)).unwrap());
        }
        let v = common::ints(&probe);
        prop_assert_eq!(pre.contains_vector(&v).unwrap(), l.contains_vector(&phi.apply_row(&v)).unwrap());
    }

    #[test]
    fn functors_respect_composition(
        a in matrix_strategy(2, 3, 3),
        b in matrix_strategy(3, 2, 3),
    ) {
        for tag in [FunctorTag::Sp2, FunctorTag::Sp3, FunctorTag::Lambda2, FunctorTag::Lie3, FunctorTag::Tensor2] {
            let ab = functor_on_map(tag, &a.mul(&b));
            prop_assert_eq!(&ab, &functor_on_map(tag, &a).mul(&functor_on_map(tag, &b)), "{}", tag);
            let id = IntMatrix::identity(3);
            prop_assert_eq!(functor_on_map(tag, &id), IntMatrix::identity(functor_on_map(tag, &id).rows()));
        }
    }
}
