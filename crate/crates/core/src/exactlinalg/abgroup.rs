use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Finitely generated abelian group `Z/d_1 ⊕ … ⊕ Z/d_k` in canonical form:
/// `d_1 | d_2 | …`, no factor equal to 1, `0` (a copy of `Z`) listed last.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AbGroup {
    invariant_factors: Vec<BigInt>,
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbGroup {
            invariant_factors: vec![BigInt::zero(); rank],
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders([order.into()])
    }

    /// Normalizes any direct sum of cyclic groups (`0` meaning `Z`).
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let mut v: Vec<BigInt> = orders
            .into_iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        // pairwise (gcd, lcm) sweeps converge to the divisibility chain
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                let g = v[i].gcd(&v[j]);
                let l = if v[i].is_zero() || v[j].is_zero() {
                    BigInt::zero()
                } else {
                    v[i].lcm(&v[j])
                };
                v[i] = g;
                v[j] = l;
            }
        }
        v.retain(|d| !d.is_one());
        AbGroup {
            invariant_factors: v,
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion_factors(&self) -> impl Iterator<Item = &BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    pub fn has_torsion_at(&self, p: u32) -> bool {
        let p = BigInt::from(p);
        self.torsion_factors().any(|d| d.is_multiple_of(&p))
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        Self::from_cyclic_orders(
            self.invariant_factors
                .iter()
                .chain(&other.invariant_factors)
                .cloned(),
        )
    }

    /// `A ⊗ B`: `Z/a ⊗ Z/b = Z/gcd(a,b)` with `gcd(a,0) = a`.
    pub fn tensor(&self, other: &AbGroup) -> AbGroup {
        let mut out = Vec::new();
        for a in &self.invariant_factors {
            for b in &other.invariant_factors {
                out.push(a.gcd(b));
            }
        }
        Self::from_cyclic_orders(out)
    }

    /// `Tor(A, B)`: `Z/gcd(a,b)` over pairs of finite factors.
    pub fn tor(&self, other: &AbGroup) -> AbGroup {
        let mut out = Vec::new();
        for a in self.torsion_factors() {
            for b in other.torsion_factors() {
                out.push(a.gcd(b));
            }
        }
        Self::from_cyclic_orders(out)
    }

    /// Whether `self` is isomorphic to a subgroup of `other`.
    ///
    /// Aligning both chains at the top, every factor of `self` must divide the
    /// corresponding factor of `other` (a `0` factor is divisible by anything,
    /// and a `0` in `self` needs a `0` in `other`).
    pub fn embeds_in(&self, other: &AbGroup) -> bool {
        let a = &self.invariant_factors;
        let b = &other.invariant_factors;
        if a.len() > b.len() {
            return false;
        }
        let off = b.len() - a.len();
        a.iter().zip(&b[off..]).all(|(x, y)| {
            if y.is_zero() {
                true
            } else {
                !x.is_zero() && y.is_multiple_of(x)
            }
        })
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.invariant_factors.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
