#![allow(dead_code)]

use gdslab::exactlinalg::IntMatrix;
use gdslab::freering::GroupWord;
use num_bigint::BigInt;
use rand::Rng;

/// A product of generator powers `x_g^k` with `g <= rank`, `|k| <= 3`.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> GroupWord {
    let mut w = GroupWord::identity();
    for _ in 0..len {
        let g = rng.gen_range(1..=rank);
        let mut k: i64 = rng.gen_range(-3..=3);
        if k == 0 {
            k = 1;
        }
        w = w.concat(&GroupWord::generator_pow(g, k));
    }
    w
}

/// A word in `γ₂(F)`: a product of commutators of random words.
pub fn random_gamma2<R: Rng>(rng: &mut R, rank: usize) -> GroupWord {
    let mut w = GroupWord::identity();
    for _ in 0..rng.gen_range(1..=2) {
        let (la, lb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random_word(rng, rank, la);
        let b = random_word(rng, rank, lb);
        w = w.concat(&GroupWord::commutator(&a, &b));
    }
    w
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_rows(
        cols,
        (0..rows)
            .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
            .collect(),
    )
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
