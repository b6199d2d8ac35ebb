use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::logs::FreeNilpotent;
use crate::error::{Error, Result};
use crate::exactlinalg::LatticeBasis;
use crate::freering::{DivisorTuple, GroupWord};

/// Denominator subgroups, named by their CLI tags.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SubgroupTag {
    /// `γ₂(R)γ₃(F)`
    G2RModG3,
    /// `γ₂(S)γ₃(F)`
    G2SModG3,
    /// `γ₂(S)γ₄(F)`
    G2SModG4,
    /// `[R,R,F]γ₄(F)`
    RRFModG4,
    /// `γ₃(R)γ₄(F)`
    G3RModG4,
    /// `[γ₂(R),F]γ₄(F)`
    G2RFModG4,
    /// `[R,γ₂(F)]γ₄(F)`
    RG2FModG4,
    /// `[R,F]γ₄(F)`, which also represents `Rγ₄(F) ∩ γ₂(F)`
    RFModG4,
}

impl SubgroupTag {
    pub const ALL: [SubgroupTag; 8] = [
        SubgroupTag::G2RModG3,
        SubgroupTag::G2SModG3,
        SubgroupTag::G2SModG4,
        SubgroupTag::RRFModG4,
        SubgroupTag::G3RModG4,
        SubgroupTag::G2RFModG4,
        SubgroupTag::RG2FModG4,
        SubgroupTag::RFModG4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SubgroupTag::G2RModG3 => "g2R.g3",
            SubgroupTag::G2SModG3 => "g2S.g3",
            SubgroupTag::G2SModG4 => "g2S.g4",
            SubgroupTag::RRFModG4 => "RRF.g4",
            SubgroupTag::G3RModG4 => "g3R.g4",
            SubgroupTag::G2RFModG4 => "g2RF.g4",
            SubgroupTag::RG2FModG4 => "Rg2F.g4",
            SubgroupTag::RFModG4 => "RF.g4",
        }
    }

    /// The `n` of the `γ_n(F)` the subgroup is taken modulo.
    pub fn level(self) -> usize {
        match self {
            SubgroupTag::G2RModG3 | SubgroupTag::G2SModG3 => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubgroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "subgroup",
                name: s.to_string(),
            })
    }
}

/// A denominator subgroup plus optional extra normal generators in `γ₂(F)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupSpec {
    pub tag: SubgroupTag,
    pub extra: Vec<GroupWord>,
}

impl SubgroupSpec {
    pub fn new(tag: SubgroupTag) -> Self {
        SubgroupSpec {
            tag,
            extra: Vec::new(),
        }
    }

    pub fn with_extra(tag: SubgroupTag, extra: Vec<GroupWord>) -> Self {
        SubgroupSpec { tag, extra }
    }
}

impl From<SubgroupTag> for SubgroupSpec {
    fn from(tag: SubgroupTag) -> Self {
        SubgroupSpec::new(tag)
    }
}

fn comm(a: &GroupWord, b: &GroupWord) -> GroupWord {
    GroupWord::commutator(a, b)
}

/// `x_i^{e_i}` for every `i` with `e_i ≠ 0`.
pub fn relator_words(e: &DivisorTuple) -> Vec<GroupWord> {
    (1..=e.rank())
        .filter(|&i| !e.e(i).is_zero())
        .map(|i| GroupWord::generator_pow(i, e.e(i).clone()))
        .collect()
}

/// Finite normal generating family of the subgroup (modulo its `γ_n`).
pub fn seed_words(tag: SubgroupTag, e: &DivisorTuple) -> Vec<GroupWord> {
    let m = e.rank();
    let x: Vec<GroupWord> = (1..=m).map(GroupWord::generator).collect();
    let p = relator_words(e);
    let basic2: Vec<GroupWord> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .map(|(a, b)| comm(&x[b], &x[a]))
        .collect();
    let mut out = Vec::new();
    match tag {
        SubgroupTag::G2RModG3 => {
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    out.push(comm(&p[i], &p[j]));
                }
            }
        }
        SubgroupTag::G2SModG3 | SubgroupTag::G2SModG4 => {
            let gens: Vec<GroupWord> = p.iter().chain(&basic2).cloned().collect();
            for (a, s) in gens.iter().enumerate() {
                for t in &gens[a + 1..] {
                    let st = comm(s, t);
                    for u in &gens {
                        out.push(comm(&st, u));
                    }
                    out.push(st);
                }
            }
        }
        SubgroupTag::RRFModG4 => {
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    for xk in &x {
                        out.push(comm(&comm(&p[i], &p[j]), xk));
                    }
                }
            }
        }
        SubgroupTag::G3RModG4 => {
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    for pk in &p {
                        out.push(comm(&comm(&p[i], &p[j]), pk));
                    }
                }
            }
        }
        SubgroupTag::G2RFModG4 => {
            // conjugates of the relators are themselves generators of R
            let mut r = p.clone();
            for pi in &p {
                for xl in &x {
                    r.push(pi.conjugate_by(xl));
                }
            }
            for i in 0..r.len() {
                for j in i + 1..r.len() {
                    for xk in &x {
                        out.push(comm(&comm(&r[i], &r[j]), xk));
                    }
                }
            }
        }
        SubgroupTag::RG2FModG4 => {
            for pi in &p {
                for c in &basic2 {
                    out.push(comm(pi, c));
                }
            }
        }
        SubgroupTag::RFModG4 => {
            for pi in &p {
                for xj in &x {
                    for (a, b) in [
                        (pi.clone(), xj.clone()),
                        (pi.inverse(), xj.clone()),
                        (pi.clone(), xj.inverse()),
                        (pi.inverse(), xj.inverse()),
                    ] {
                        out.push(comm(&a, &b));
                    }
                }
            }
        }
    }
    out
}

impl FreeNilpotent {
    /// Lattice of `H ∩ γ₂(F)` modulo `γ_n(F)` in log coordinates, where `n` is
    /// the tag's level (weight-2 block only at level 3).
    pub fn subgroup_lattice(&self, e: &DivisorTuple, spec: &SubgroupSpec) -> Result<LatticeBasis> {
        if e.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: e.rank(),
            });
        }
        let mut words = seed_words(spec.tag, e);
        words.extend(spec.extra.iter().cloned());
        self.closure_from_words(&words, spec.tag.level())
    }
}

pub fn subgroup_lattice(e: &DivisorTuple, spec: &SubgroupSpec) -> Result<LatticeBasis> {
    FreeNilpotent::new(e.rank())?.subgroup_lattice(e, spec)
}
