use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::free::{multisets, subsets};
use crate::error::{Error, Result};
use crate::exactlinalg::{smith_normal_form, AbGroup, IntMatrix};
use crate::freering::DivisorTuple;

/// Two-term free resolution `0 → P1 --M--> P0 → A → 0` with diagonal `M`.
///
/// Maps between free modules use the column convention: a map
/// `Z^a → Z^b` is a `b × a` matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Resolution {
    map: IntMatrix,
    /// for each column of `map`, the `P0` coordinate it hits
    support: Vec<usize>,
    target: AbGroup,
}

impl Resolution {
    /// Resolution of `⊕ Z/d_i` (0 meaning `Z`) with one `P0` generator per entry.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let support: Vec<usize> = (0..orders.len()).filter(|&i| !orders[i].is_zero()).collect();
        let mut map = IntMatrix::zeros(orders.len(), support.len());
        for (col, &i) in support.iter().enumerate() {
            map[(i, col)] = orders[i].clone();
        }
        Resolution {
            map,
            support,
            target: AbGroup::from_cyclic_orders(orders.iter().cloned()),
        }
    }

    pub fn from_divisors(e: &DivisorTuple) -> Self {
        Self::from_orders(e.entries())
    }

    pub fn from_group(a: &AbGroup) -> Self {
        Self::from_orders(a.invariant_factors())
    }

    pub fn p0_rank(&self) -> usize {
        self.map.rows()
    }

    pub fn p1_rank(&self) -> usize {
        self.map.cols()
    }

    pub fn map(&self) -> &IntMatrix {
        &self.map
    }

    pub fn target(&self) -> &AbGroup {
        &self.target
    }

    /// `P0` coordinate of the image of the `t`-th `P1` generator.
    pub fn support(&self) -> &[usize] {
        &self.support
    }
}

/// A bounded chain complex `C_n → … → C_0` of free abelian groups.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    /// `diffs[k - 1]` is `d_k : C_k → C_{k-1}` (a `dim C_{k-1} × dim C_k` matrix)
    diffs: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len() {
            return Err(Error::Internal("chain complex length mismatch".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != dims[k] || d.cols() != dims[k + 1] {
                return Err(Error::Internal(format!("differential d{} has wrong shape", k + 1)));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k - 1].mul(&diffs[k]).is_zero() {
                return Err(Error::Internal(format!("d{} ∘ d{} ≠ 0", k, k + 1)));
            }
        }
        Ok(ChainComplex { dims, diffs })
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims[k]
    }

    pub fn differential(&self, k: usize) -> Option<&IntMatrix> {
        k.checked_sub(1).and_then(|i| self.diffs.get(i))
    }

    /// `H_k = ker d_k / im d_{k+1}`.
    pub fn homology(&self, k: usize) -> AbGroup {
        if k >= self.dims.len() {
            return AbGroup::trivial();
        }
        let rank_out = self
            .differential(k)
            .map_or(0, |d| smith_normal_form(d).rank());
        let (rank_in, torsion) = match self.differential(k + 1) {
            None => (0, Vec::new()),
            Some(d) => {
                let s = smith_normal_form(d);
                let t: Vec<BigInt> = s
                    .diag
                    .iter()
                    .filter(|x| !x.is_zero() && !x.is_one())
                    .cloned()
                    .collect();
                (s.rank(), t)
            }
        };
        let free = self.dims[k] - rank_out - rank_in;
        AbGroup::from_cyclic_orders(
            torsion
                .into_iter()
                .chain(std::iter::repeat_n(BigInt::zero(), free)),
        )
    }
}

/// A basis element of `Λ^k P1 ⊗ SP^{n-k} P0`: exterior indices and a multiset.
type KoszulKey = (Vec<usize>, Vec<usize>);

/// Koszul complex `Λ^k P1 ⊗ SP^{n-k} P0` computing `L_k SP^n` of the
/// resolved group.
pub fn koszul_sp(n: usize, res: &Resolution) -> Result<ChainComplex> {
    let (p1, p0) = (res.p1_rank(), res.p0_rank());
    let m = res.map();
    let bases: Vec<Vec<(Vec<usize>, Vec<usize>)>> = (0..=n)
        .map(|k| {
            let mut b = Vec::new();
            for s in subsets(p1, k) {
                for q in multisets(p0, n - k) {
                    b.push((s.clone(), q));
                }
            }
            b
        })
        .collect();
    let index: Vec<HashMap<KoszulKey, usize>> = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect())
        .collect();

    let mut diffs = Vec::new();
    for k in 1..=n {
        let mut d = IntMatrix::zeros(bases[k - 1].len(), bases[k].len());
        for (col, (s, q)) in bases[k].iter().enumerate() {
            for t in 0..s.len() {
                let sign = if t % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let mut rest = s.clone();
                let a = rest.remove(t);
                for p in 0..p0 {
                    let c = &m[(p, a)];
                    if c.is_zero() {
                        continue;
                    }
                    let mut q2 = q.clone();
                    q2.push(p);
                    q2.sort_unstable();
                    let row = index[k - 1][&(rest.clone(), q2)];
                    d[(row, col)] += &sign * c;
                }
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(bases.iter().map(Vec::len).collect(), diffs)
}
