use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::basis::CommutatorBasis;
use crate::error::{Error, Result};
use crate::exactlinalg::{EchelonBuilder, IntMatrix, LatticeBasis, RowSolver};
use crate::freering::{check_word, deviation, GroupWord, RingContext};

/// Exponents of an element of `γ₂(F)/γ₄(F)` over the basic commutators,
/// weight-2 block first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LogVector {
    coords: Vec<BigInt>,
    weight2_len: usize,
}

impl LogVector {
    pub fn new(coords: Vec<BigInt>, weight2_len: usize) -> Self {
        assert!(weight2_len <= coords.len());
        LogVector {
            coords,
            weight2_len,
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn weight2(&self) -> &[BigInt] {
        &self.coords[..self.weight2_len]
    }

    pub fn weight3(&self) -> &[BigInt] {
        &self.coords[self.weight2_len..]
    }
}

impl fmt::Display for LogVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "({} ; {})", join(self.weight2()), join(self.weight3()))
    }
}

/// Coordinates on the free nilpotent group of class 3 and rank `m`.
///
/// `Φ_n` sends each basic commutator to its deviation in `Z[F]/f^n`; at
/// level 3 only the weight-2 block is used, since weight-3 deviations vanish.
/// Both maps are injective, so a word in `γ₂(F)` has a unique log.
#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    basis: CommutatorBasis,
    ctx3: RingContext,
    ctx4: RingContext,
    phi3: IntMatrix,
    phi4: IntMatrix,
    solver4: RowSolver,
    /// `corrections[2(j-1) + s]`: conjugation by `x_j` (`s = 0`) or `x_j⁻¹` (`s = 1`)
    corrections: Vec<IntMatrix>,
}

impl FreeNilpotent {
    pub fn new(m: usize) -> Result<Self> {
        let basis = CommutatorBasis::new(m)?;
        let ctx3 = RingContext::new(m, 3)?;
        let ctx4 = RingContext::new(m, 4)?;
        let rows = |ctx: RingContext, n: usize| -> Result<IntMatrix> {
            let r = (0..n)
                .map(|k| Ok(deviation(ctx, &basis.word(k))?.to_dense()))
                .collect::<Result<Vec<_>>>()?;
            Ok(IntMatrix::from_rows(ctx.dimension(), r))
        };
        let phi3 = rows(ctx3, basis.weight2_len())?;
        let phi4 = rows(ctx4, basis.len())?;
        let solver4 = RowSolver::new(&phi4);
        let mut nil = FreeNilpotent {
            basis,
            ctx3,
            ctx4,
            phi3,
            phi4,
            solver4,
            corrections: Vec::new(),
        };
        let n = nil.basis.len();
        for j in 1..=m {
            for s in [1i64, -1] {
                let g = GroupWord::generator_pow(j, s);
                let mut c = IntMatrix::zeros(n, n);
                for k in 0..nil.basis.weight2_len() {
                    let w = nil.basis.word(k);
                    let moved = nil.word_log(&w.conjugate_by(&g))?;
                    let base = nil.word_log(&w)?;
                    for (col, (a, b)) in moved.coords().iter().zip(base.coords()).enumerate() {
                        c[(k, col)] = a - b;
                    }
                }
                nil.corrections.push(c);
            }
        }
        Ok(nil)
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &CommutatorBasis {
        &self.basis
    }

    pub fn context(&self, level: usize) -> Result<RingContext> {
        match level {
            3 => Ok(self.ctx3),
            4 => Ok(self.ctx4),
            _ => Err(Error::UnsupportedLevel(level)),
        }
    }

    /// `Φ` at `level` (rows: basic commutators; columns: monomials).
    pub fn phi(&self, level: usize) -> Result<&IntMatrix> {
        match level {
            3 => Ok(&self.phi3),
            4 => Ok(&self.phi4),
            _ => Err(Error::UnsupportedLevel(level)),
        }
    }

    /// Number of log coordinates at `level`.
    pub fn log_dim(&self, level: usize) -> Result<usize> {
        match level {
            3 => Ok(self.basis.weight2_len()),
            4 => Ok(self.basis.len()),
            _ => Err(Error::UnsupportedLevel(level)),
        }
    }

    /// Log of a word in `γ₂(F)` modulo `γ₄(F)`.
    pub fn word_log(&self, w: &GroupWord) -> Result<LogVector> {
        check_word(self.ctx4, w)?;
        let d = deviation(self.ctx4, w)?.to_dense();
        if self.ctx4.degree_range(1).any(|i| !d[i].is_zero()) {
            return Err(Error::NotInGamma2);
        }
        let v = self
            .solver4
            .solve(&d)?
            .ok_or_else(|| Error::Internal(format!("deviation of {w} is outside the image of phi")))?;
        Ok(LogVector::new(v, self.basis.weight2_len()))
    }

    /// Matrix `C` with `log(g⁻¹hg) = log(h) + log(h)·C` for `g = x_j^{sign}`.
    pub fn correction(&self, j: usize, inverse: bool) -> &IntMatrix {
        &self.corrections[2 * (j - 1) + usize::from(inverse)]
    }

    /// Closes a level-4 lattice under conjugation by every `x_j^{±1}`.
    pub fn close_under_conjugation(&self, l: &LatticeBasis) -> LatticeBasis {
        let mut b = EchelonBuilder::new(l.ambient_rank());
        for r in l.basis() {
            b.insert(r.clone());
        }
        loop {
            let current = b.clone().finish();
            let mut grew = false;
            for c in &self.corrections {
                for r in current.basis() {
                    grew |= b.insert(c.apply_row(r));
                }
            }
            if !grew {
                return b.finish();
            }
        }
    }

    /// Whether a level-4 lattice is normal, i.e. stable under every correction.
    pub fn is_conjugation_closed(&self, l: &LatticeBasis) -> Result<bool> {
        for c in &self.corrections {
            for r in l.basis() {
                if !l.contains_vector(&c.apply_row(r))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The lattice of the normal subgroup generated by `words` modulo
    /// `γ_level(F)`.
    pub fn closure_from_words(&self, words: &[GroupWord], level: usize) -> Result<LatticeBasis> {
        let dim4 = self.basis.len();
        let mut logs = Vec::with_capacity(words.len());
        for w in words {
            logs.push(self.word_log(w)?.into_coords());
        }
        let l = LatticeBasis::from_generators(dim4, logs);
        match level {
            3 => Ok(l.project(0..self.basis.weight2_len())),
            4 => Ok(self.close_under_conjugation(&l)),
            _ => Err(Error::UnsupportedLevel(level)),
        }
    }
}

/// Log of `w` over the rank-`m` basic commutators.
pub fn word_log(m: usize, w: &GroupWord) -> Result<LogVector> {
    FreeNilpotent::new(m)?.word_log(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn log(nil: &FreeNilpotent, s: &str) -> Vec<BigInt> {
        nil.word_log(&GroupWord::parse(s).unwrap()).unwrap().into_coords()
    }

    #[test]
    fn word_log_examples() {
        let nil = FreeNilpotent::new(2).unwrap();
        assert_eq!(log(&nil, "[x2,x1]"), ints(&[1, 0, 0]));
        assert_eq!(log(&nil, "[x2,x1]^2[[x2,x1],x1]^-3"), ints(&[2, -3, 0]));
        assert_eq!(log(&nil, "x1^-1[x2,x1]x1"), ints(&[1, 1, 0]));
        assert_eq!(log(&nil, "[x1,x2]"), ints(&[-1, 0, 0]));
        assert_eq!(log(&nil, "[x1^9,x2^3]")[0], BigInt::from(-27));
    }

    #[test]
    fn rejects_weight_one() {
        let nil = FreeNilpotent::new(2).unwrap();
        assert_eq!(
            nil.word_log(&GroupWord::parse("x1").unwrap()),
            Err(Error::NotInGamma2)
        );
        assert!(matches!(
            nil.word_log(&GroupWord::parse("[x1,x3]").unwrap()),
            Err(Error::InvalidGenerator { .. })
        ));
    }

    #[test]
    fn words_in_gamma4_vanish() {
        let nil = FreeNilpotent::new(3).unwrap();
        let z = vec![BigInt::zero(); nil.basis().len()];
        assert_eq!(log(&nil, "[[x2,x1],[x3,x1]]"), z);
        assert_eq!(log(&nil, "[[[x2,x1],x1],x3]"), z);
    }

    #[test]
    fn correction_matches_conjugation() {
        let nil = FreeNilpotent::new(3).unwrap();
        let w = GroupWord::parse("[x3,x1]^2[x2,x1]^-1").unwrap();
        let v = nil.word_log(&w).unwrap().into_coords();
        for j in 1..=3 {
            for inv in [false, true] {
                let g = GroupWord::generator_pow(j, if inv { -1 } else { 1 });
                let moved = nil.word_log(&w.conjugate_by(&g)).unwrap().into_coords();
                let delta = nil.correction(j, inv).apply_row(&v);
                let expect: Vec<BigInt> = v.iter().zip(&delta).map(|(a, b)| a + b).collect();
                assert_eq!(moved, expect);
            }
        }
    }
}
