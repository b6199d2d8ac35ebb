use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 6;
pub const MAX_DEGREE: usize = 5;

/// The truncated ring `Z⟨y_1,…,y_m⟩ / (monomials of degree ≥ N)` with
/// `y_i = x_i - 1`, which is `Z[F]/f^N` for `F` free on `x_1,…,x_m`.
///
/// Monomials are words over `1..=m` of length `< N`, ordered by length and
/// then lexicographically; a word's position in that order is its index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingContext {
    rank: usize,
    degree: usize,
}

impl RingContext {
    pub fn new(rank: usize, degree: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::RankOutOfRange(rank));
        }
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        Ok(RingContext { rank, degree })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn truncation_degree(&self) -> usize {
        self.degree
    }

    /// Number of monomials of length exactly `d`.
    fn count(&self, d: usize) -> usize {
        self.rank.pow(d as u32)
    }

    /// Index of the first monomial of length `d`.
    pub fn offset(&self, d: usize) -> usize {
        (0..d).map(|k| self.count(k)).sum()
    }

    pub fn dimension(&self) -> usize {
        self.offset(self.degree)
    }

    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        self.offset(d)..self.offset(d + 1)
    }

    /// Index of a word (letters 1-based); `None` if it is truncated away.
    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        if word.len() >= self.degree {
            return None;
        }
        let mut r = 0;
        for &l in word {
            debug_assert!(l >= 1 && l <= self.rank);
            r = r * self.rank + (l - 1);
        }
        Some(self.offset(word.len()) + r)
    }

    pub fn word_of(&self, index: usize) -> Vec<usize> {
        let mut d = 0;
        while index >= self.offset(d + 1) {
            d += 1;
        }
        let mut r = index - self.offset(d);
        let mut w = vec![0; d];
        for slot in w.iter_mut().rev() {
            *slot = r % self.rank + 1;
            r /= self.rank;
        }
        w
    }

    pub fn degree_of(&self, index: usize) -> usize {
        (0..self.degree).find(|&d| index < self.offset(d + 1)).unwrap_or(self.degree)
    }

    /// Index of the concatenation of the monomials at `a` and `b`.
    fn concat(&self, a: usize, b: usize) -> Option<usize> {
        let (da, db) = (self.degree_of(a), self.degree_of(b));
        if da + db >= self.degree {
            return None;
        }
        let ra = a - self.offset(da);
        let rb = b - self.offset(db);
        Some(self.offset(da + db) + ra * self.count(db) + rb)
    }

    pub fn monomial_name(&self, index: usize) -> String {
        let w = self.word_of(index);
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|l| format!("y{l}")).collect()
    }

    pub fn check_generator(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.rank {
            return Err(Error::InvalidGenerator {
                index,
                rank: self.rank,
            });
        }
        Ok(())
    }
}

/// Element of a truncated free group ring; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    ctx: RingContext,
    coeffs: BTreeMap<usize, BigInt>,
}

impl RingElement {
    pub fn zero(ctx: RingContext) -> Self {
        RingElement {
            ctx,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: RingContext, c: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(ctx);
        e.add_term(0, c.into());
        e
    }

    pub fn one(ctx: RingContext) -> Self {
        Self::constant(ctx, 1)
    }

    /// The monomial `y_{w_1} … y_{w_d}` (zero if truncated).
    pub fn monomial(ctx: RingContext, word: &[usize]) -> Result<Self> {
        for &l in word {
            ctx.check_generator(l)?;
        }
        let mut e = Self::zero(ctx);
        if let Some(i) = ctx.index_of(word) {
            e.add_term(i, BigInt::one());
        }
        Ok(e)
    }

    /// `y_i = x_i - 1`.
    pub fn y(ctx: RingContext, i: usize) -> Result<Self> {
        Self::monomial(ctx, &[i])
    }

    pub fn from_dense(ctx: RingContext, v: &[BigInt]) -> Self {
        assert_eq!(v.len(), ctx.dimension());
        let coeffs = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        RingElement { ctx, coeffs }
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.ctx.dimension()];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, word: &[usize]) -> BigInt {
        self.ctx
            .index_of(word)
            .and_then(|i| self.coeffs.get(&i).cloned())
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.get(&0).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.keys().next().map(|&i| self.ctx.degree_of(i))
    }

    fn add_term(&mut self, index: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous(&self, d: usize) -> RingElement {
        let range = self.ctx.degree_range(d);
        RingElement {
            ctx: self.ctx,
            coeffs: self
                .coeffs
                .range(range)
                .map(|(&i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> RingElement {
        if k.is_zero() {
            return Self::zero(self.ctx);
        }
        RingElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * k)).collect(),
        }
    }

    fn same_ctx(&self, other: &RingElement) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    /// Truncated noncommutative product.
    pub fn multiply(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ctx(other)?;
        let mut out = Self::zero(self.ctx);
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                if let Some(ab) = self.ctx.concat(a, b) {
                    out.add_term(ab, ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> RingElement {
        let mut out = Self::one(self.ctx);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// `(1 + self)^n` for `self` in the augmentation ideal, any integer `n`.
    ///
    /// `self` is nilpotent, so the binomial series terminates below the
    /// truncation degree and holds for negative exponents as well.
    pub fn unipotent_power(&self, n: &BigInt) -> Result<RingElement> {
        if !self.constant_term().is_zero() {
            return Err(Error::NotInAugmentation);
        }
        let mut out = Self::one(self.ctx);
        let mut term = Self::one(self.ctx);
        let mut binom = BigInt::one();
        for k in 1..self.ctx.degree {
            term = &term * self;
            if term.is_zero() {
                break;
            }
            // C(n, k) = C(n, k-1) · (n - k + 1) / k, exact at every step
            binom = binom * (n - BigInt::from(k - 1)) / BigInt::from(k);
            out = &out + &term.scale(&binom);
        }
        Ok(out)
    }

    /// Inverse of a unit with constant term ±1.
    pub fn inverse(&self) -> Result<RingElement> {
        let c = self.constant_term();
        if !c.abs().is_one() {
            return Err(Error::NotInAugmentation);
        }
        // self = c(1 + u)  =>  self^{-1} = c(1 + u)^{-1}
        let u = &self.scale(&c) - &Self::one(self.ctx);
        Ok(u.unipotent_power(&BigInt::from(-1))?.scale(&c))
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring context mismatch")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.try_add(&-rhs).expect("ring context mismatch")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.multiply(rhs).expect("ring context mismatch")
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.coeffs {
            let name = self.ctx.monomial_name(i);
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}{name}")?;
            }
        }
        Ok(())
    }
}

/// `t(x_i, e) = 1 + x_i + … + x_i^{e-1}` expanded in `y_i`; zero when `e = 0`.
pub fn t_polynomial(ctx: RingContext, i: usize, e: &BigInt) -> Result<RingElement> {
    ctx.check_generator(i)?;
    if e.is_negative() {
        return Err(Error::Internal("t_polynomial needs e >= 0".into()));
    }
    // sum_{k<e} (1+y)^k = sum_j C(e, j+1) y^j
    let mut out = RingElement::zero(ctx);
    let mut binom = BigInt::one();
    let mut word = Vec::new();
    for j in 0..ctx.degree {
        binom = binom * (e - BigInt::from(j)) / BigInt::from(j + 1);
        if binom.is_zero() {
            break;
        }
        out.add_term(ctx.index_of(&word).expect("degree in range"), binom.clone());
        word.push(i);
    }
    Ok(out)
}

/// Fox derivative `_x u`: the coefficient in `u = Σ_i (_{x_i}u)·y_i`.
pub fn left_partial(u: &RingElement, i: usize) -> Result<RingElement> {
    partial(u, i, true)
}

/// Fox derivative `u_x`: the coefficient in `u = Σ_i y_i·(u_{x_i})`.
pub fn right_partial(u: &RingElement, i: usize) -> Result<RingElement> {
    partial(u, i, false)
}

fn partial(u: &RingElement, i: usize, strip_trailing: bool) -> Result<RingElement> {
    let ctx = u.ctx;
    ctx.check_generator(i)?;
    if !u.constant_term().is_zero() {
        return Err(Error::NotInAugmentation);
    }
    let mut out = RingElement::zero(ctx);
    for (&idx, c) in &u.coeffs {
        let w = ctx.word_of(idx);
        let (letter, rest) = if strip_trailing {
            (w[w.len() - 1], &w[..w.len() - 1])
        } else {
            (w[0], &w[1..])
        };
        if letter == i {
            out.add_term(ctx.index_of(rest).expect("shorter word fits"), c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, n: usize) -> RingContext {
        RingContext::new(m, n).unwrap()
    }

    fn mono(c: RingContext, w: &[usize]) -> RingElement {
        RingElement::monomial(c, w).unwrap()
    }

    #[test]
    fn indexing_round_trip() {
        let c = ctx(3, 4);
        assert_eq!(c.dimension(), 1 + 3 + 9 + 27);
        for i in 0..c.dimension() {
            assert_eq!(c.index_of(&c.word_of(i)), Some(i));
        }
        assert_eq!(c.index_of(&[1, 1, 1, 1]), None);
    }

    #[test]
    fn products() {
        let c = ctx(2, 4);
        assert_eq!(&mono(c, &[1]) * &mono(c, &[2]), mono(c, &[1, 2]));
        assert!((&mono(c, &[1, 2]) * &mono(c, &[1, 2])).is_zero());
        let x = &RingElement::one(c) + &mono(c, &[1]);
        let xinv = x.inverse().unwrap();
        assert_eq!(&x * &xinv, RingElement::one(c));
        assert_eq!(xinv.to_string(), "1 - y1 + y1y1 - y1y1y1");
    }

    #[test]
    fn mismatched_contexts() {
        let a = mono(ctx(2, 3), &[1]);
        let b = mono(ctx(2, 4), &[1]);
        assert_eq!(a.multiply(&b), Err(Error::ContextMismatch));
    }

    #[test]
    fn t_polynomial_examples() {
        let c = ctx(2, 3);
        let t = t_polynomial(c, 1, &BigInt::from(3)).unwrap();
        let expect = &(&RingElement::constant(c, 3) + &mono(c, &[1]).scale(&BigInt::from(3)))
            + &mono(c, &[1, 1]);
        assert_eq!(t, expect);
        assert!(t_polynomial(c, 1, &BigInt::zero()).unwrap().is_zero());
        assert_eq!(t_polynomial(c, 2, &BigInt::one()).unwrap(), RingElement::one(c));
    }

    #[test]
    fn partials() {
        let c = ctx(2, 3);
        let u = mono(c, &[1, 2]);
        assert_eq!(left_partial(&u, 2).unwrap(), mono(c, &[1]));
        assert_eq!(right_partial(&u, 1).unwrap(), mono(c, &[2]));
        assert!(left_partial(&u, 1).unwrap().is_zero());
        assert_eq!(
            left_partial(&RingElement::one(c), 1),
            Err(Error::NotInAugmentation)
        );
    }

    #[test]
    fn unipotent_power_negative() {
        let c = ctx(1, 4);
        let y = mono(c, &[1]);
        let inv = y.unipotent_power(&BigInt::from(-3)).unwrap();
        // (1+y)^-3 = 1 - 3y + 6y^2 - 10y^3
        assert_eq!(inv.to_string(), "1 - 3y1 + 6y1y1 - 10y1y1y1");
    }
}
