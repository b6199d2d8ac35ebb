use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlinalg::{lattice_preimage, quotient_invariants, AbGroup, LatticeBasis};
use crate::freering::{check_word, deviation, DivisorTuple, GroupWord, IdealEvaluator, IdealExpr};
use crate::nilpotent::{FreeNilpotent, SubgroupSpec};

/// `D(n, 𝔞)` for a divisor tuple, an ideal expression and a level `n ∈ {3, 4}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionProblem {
    divisors: DivisorTuple,
    ideal: IdealExpr,
    level: usize,
}

impl DimensionProblem {
    pub fn new(divisors: DivisorTuple, ideal: IdealExpr, level: usize) -> Result<Self> {
        if !(3..=4).contains(&level) {
            return Err(Error::UnsupportedLevel(level));
        }
        Ok(DimensionProblem {
            divisors,
            ideal,
            level,
        })
    }

    pub fn parse(divisors: &str, ideal: &str, level: usize) -> Result<Self> {
        Self::new(DivisorTuple::parse(divisors)?, IdealExpr::parse(ideal)?, level)
    }

    pub fn divisors(&self) -> &DivisorTuple {
        &self.divisors
    }

    pub fn ideal(&self) -> &IdealExpr {
        &self.ideal
    }

    pub fn level(&self) -> usize {
        self.level
    }
}

/// Caches the ideal lattices of one divisor tuple at both levels.
pub struct DimensionSolver<'a> {
    nil: &'a FreeNilpotent,
    divisors: DivisorTuple,
    ev3: IdealEvaluator,
    ev4: IdealEvaluator,
}

impl<'a> DimensionSolver<'a> {
    pub fn new(nil: &'a FreeNilpotent, divisors: &DivisorTuple) -> Result<Self> {
        if divisors.rank() != nil.rank() {
            return Err(Error::DimensionMismatch {
                expected: nil.rank(),
                found: divisors.rank(),
            });
        }
        Ok(DimensionSolver {
            nil,
            divisors: divisors.clone(),
            ev3: IdealEvaluator::new(nil.context(3)?, divisors)?,
            ev4: IdealEvaluator::new(nil.context(4)?, divisors)?,
        })
    }

    pub fn nilpotent(&self) -> &'a FreeNilpotent {
        self.nil
    }

    pub fn divisors(&self) -> &DivisorTuple {
        &self.divisors
    }

    fn evaluator(&mut self, level: usize) -> Result<&mut IdealEvaluator> {
        match level {
            3 => Ok(&mut self.ev3),
            4 => Ok(&mut self.ev4),
            _ => Err(Error::UnsupportedLevel(level)),
        }
    }

    /// `(𝔞 + 𝔣ⁿ)/𝔣ⁿ` as a lattice of ring coordinates.
    pub fn ideal_lattice(&mut self, ideal: &IdealExpr, level: usize) -> Result<LatticeBasis> {
        self.evaluator(level)?.eval(ideal)
    }

    /// Whether `𝔞 ⊆ 𝔣² + 𝔣ⁿ`, in which case `D(n, 𝔞) ≤ γ₂(F)`.
    pub fn ideal_in_f2(&mut self, ideal: &IdealExpr, level: usize) -> Result<bool> {
        let ctx = self.nil.context(level)?;
        let l = self.ideal_lattice(ideal, level)?;
        let low = ctx.offset(2);
        Ok(l.basis().iter().all(|r| r[..low].iter().all(Zero::is_zero)))
    }

    pub fn lattice(&mut self, ideal: &IdealExpr, level: usize) -> Result<LatticeBasis> {
        let l = self.ideal_lattice(ideal, level)?;
        lattice_preimage(self.nil.phi(level)?, &l)
    }

    /// Ring-side membership of `w` in `1 + 𝔞 + 𝔣ⁿ`, without going through `Φ`.
    pub fn contains_word(&mut self, w: &GroupWord, ideal: &IdealExpr, level: usize) -> Result<bool> {
        let ctx = self.nil.context(level)?;
        check_word(ctx, w)?;
        let d = deviation(ctx, w)?.to_dense();
        self.ideal_lattice(ideal, level)?.contains_vector(&d)
    }

    pub fn subgroup(&self, spec: &SubgroupSpec) -> Result<LatticeBasis> {
        self.nil.subgroup_lattice(&self.divisors, spec)
    }
}

/// `D(n, 𝔞) ∩ γ₂(F)` modulo `γ_n(F)` in log coordinates.
pub fn dimension_lattice(p: &DimensionProblem) -> Result<LatticeBasis> {
    let nil = FreeNilpotent::new(p.divisors.rank())?;
    DimensionSolver::new(&nil, &p.divisors)?.lattice(&p.ideal, p.level)
}

/// Invariant factors of `num / den`, refusing to intersect when `den ⊄ num`.
pub fn lattice_quotient(num: &LatticeBasis, den: &LatticeBasis) -> Result<AbGroup> {
    if let Some(witness) = num.first_outside(den)? {
        return Err(Error::DenominatorNotContained { witness });
    }
    quotient_invariants(num, den)
}

pub fn quotient(p: &DimensionProblem, denom: &SubgroupSpec) -> Result<AbGroup> {
    if denom.tag.level() != p.level {
        return Err(Error::DimensionMismatch {
            expected: p.level,
            found: denom.tag.level(),
        });
    }
    let nil = FreeNilpotent::new(p.divisors.rank())?;
    let mut solver = DimensionSolver::new(&nil, &p.divisors)?;
    let num = solver.lattice(&p.ideal, p.level)?;
    lattice_quotient(&num, &solver.subgroup(denom)?)
}

/// The triple brackets `[[x_j, x_i], x_k]^{e_i}`, `j > i`, every `k`.
pub fn q_generators(e: &DivisorTuple) -> Vec<GroupWord> {
    let m = e.rank();
    let x = |i: usize| GroupWord::generator(i);
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in 1..=m {
                let w = GroupWord::commutator(&GroupWord::commutator(&x(j), &x(i)), &x(k));
                out.push(w.pow(e.e(i).clone()));
            }
        }
    }
    out
}

/// Lattice of `⟨[[x_j,x_i],x_k]^{e_i}⟩γ₄(F)` at level 4.
pub fn q_lattice(nil: &FreeNilpotent, e: &DivisorTuple) -> Result<LatticeBasis> {
    let logs = q_generators(e)
        .iter()
        .map(|w| Ok(nil.word_log(w)?.into_coords()))
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    Ok(LatticeBasis::from_generators(nil.basis().len(), logs))
}

/// `⟨[[x_j,x_i],x_k]^{e_i}⟩γ₄(F) / [R,R,F]γ₄(F)`.
pub fn q_group(e: &DivisorTuple) -> Result<AbGroup> {
    let nil = FreeNilpotent::new(e.rank())?;
    let den = nil.subgroup_lattice(e, &crate::nilpotent::SubgroupTag::RRFModG4.into())?;
    lattice_quotient(&q_lattice(&nil, e)?, &den)
}
