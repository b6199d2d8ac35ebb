//! Generator sets checked directly against computed dimension lattices.

use gdslab::dimsub::{verify_theorem, DimensionSolver, Status, TheoremId};
use gdslab::freering::{DivisorTuple, GroupWord, IdealExpr};
use gdslab::nilpotent::FreeNilpotent;
use num_bigint::BigInt;
use num_integer::Integer;

const POOL: [u64; 8] = [2, 3, 4, 5, 8, 9, 25, 27];

fn chains(max_rank: usize) -> Vec<DivisorTuple> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..max_rank {
        let mut next = Vec::new();
        for p in &layer {
            for &d in &POOL {
                let mut c = p.clone();
                c.push(d);
                if let Ok(t) = DivisorTuple::from_u64(&c) {
                    out.push(t);
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    out
}

fn bracket3(j: usize, i: usize, k: usize) -> GroupWord {
    let x = GroupWord::generator;
    GroupWord::commutator(&GroupWord::commutator(&x(j), &x(i)), &x(k))
}

/// `[[x_j,x_i],x_k]` raised to `lcm(e_ie_j, e_ie_k, e_je_k)` for `k > i` and to
/// `e_i²` for `k = i`.
fn r2f_words(e: &DivisorTuple) -> Vec<GroupWord> {
    let m = e.rank();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in i..=m {
                let (a, b, c) = (e.e(i), e.e(j), e.e(k));
                let exp: BigInt = if k == i {
                    a * a
                } else {
                    (a * b).lcm(&(a * c)).lcm(&(b * c))
                };
                out.push(bracket3(j, i, k).pow(exp));
            }
        }
    }
    out
}

#[test]
fn r2f_with_square_exponent_matches() {
    let expr = IdealExpr::parse("r*r*f").unwrap();
    let nils: Vec<FreeNilpotent> = (1..=3).map(|m| FreeNilpotent::new(m).unwrap()).collect();
    for e in chains(3) {
        let nil = &nils[e.rank() - 1];
        let mut s = DimensionSolver::new(nil, &e).unwrap();
        let computed = s.lattice(&expr, 4).unwrap();
        let claimed = nil.closure_from_words(&r2f_words(&e), 4).unwrap();
        assert_eq!(claimed, computed, "e = {e}");
    }
}

#[test]
fn r2f_as_stated_fails_exactly_when_chain_is_strict() {
    for e in chains(3) {
        let r = verify_theorem(TheoremId::R2fGens, &e).unwrap();
        let strict = (1..e.rank()).any(|i| e.e(i) != e.e(i + 1));
        assert_eq!(r.status == Status::Fail, strict, "e = {e}");
        if strict {
            assert!(r.witness.is_some());
        }
    }
}
