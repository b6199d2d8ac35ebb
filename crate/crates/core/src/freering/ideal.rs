use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::divisors::DivisorTuple;
use super::ring::{RingContext, RingElement};
use super::word::{check_word, deviation, GroupWord};
use crate::error::{Error, Result};
use crate::exactlinalg::{EchelonBuilder, LatticeBasis};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Atom {
    /// `f`: the augmentation ideal.
    Augmentation,
    /// `r`: the span of `{w - 1 : w ∈ R}`.
    RSpan,
    /// `s`: the span of `{w - 1 : w ∈ S}`.
    SSpan,
    /// `Z`: the whole ring.
    FullRing,
}

impl Atom {
    pub fn symbol(self) -> char {
        match self {
            Atom::Augmentation => 'f',
            Atom::RSpan => 'r',
            Atom::SSpan => 's',
            Atom::FullRing => 'Z',
        }
    }

    fn from_symbol(c: u8) -> Option<Atom> {
        Some(match c {
            b'f' => Atom::Augmentation,
            b'r' => Atom::RSpan,
            b's' => Atom::SSpan,
            b'Z' => Atom::FullRing,
            _ => return None,
        })
    }
}

/// A sum of products of atoms, e.g. `r*r*f + r*f*r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IdealExpr {
    terms: Vec<Vec<Atom>>,
}

impl IdealExpr {
    pub fn parse(text: &str) -> Result<Self> {
        parse_ideal_expr(text)
    }

    pub fn product(atoms: Vec<Atom>) -> Self {
        assert!(!atoms.is_empty(), "empty product");
        IdealExpr { terms: vec![atoms] }
    }

    pub fn terms(&self) -> &[Vec<Atom>] {
        &self.terms
    }

    pub fn is_single_product(&self) -> bool {
        self.terms.len() == 1
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|p| {
                p.iter()
                    .map(|a| a.symbol().to_string())
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn parse_ideal_expr(text: &str) -> Result<IdealExpr> {
    let src = text.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < src.len() && src[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let err = |offset: usize, message: String| Err(Error::Parse { offset, message });

    let mut terms = Vec::new();
    let mut product = Vec::new();
    loop {
        skip(&mut pos);
        match src.get(pos) {
            None => return err(pos, "expected an atom (f, r, s or Z), found end of input".into()),
            Some(&c) => match Atom::from_symbol(c) {
                Some(a) => product.push(a),
                None if c == b'*' || c == b'+' => {
                    return err(pos, format!("expected an atom before '{}'", c as char))
                }
                None => {
                    let ch = text[pos..].chars().next().expect("in bounds");
                    return err(pos, format!("unknown atom '{ch}'"));
                }
            },
        }
        pos += 1;
        skip(&mut pos);
        match src.get(pos) {
            None => {
                terms.push(std::mem::take(&mut product));
                return Ok(IdealExpr { terms });
            }
            Some(b'*') => {}
            Some(b'+') => terms.push(std::mem::take(&mut product)),
            Some(_) => return err(pos, "expected '*', '+' or end of input".into()),
        }
        pos += 1;
    }
}

/// Evaluates ideal expressions for one `(context, divisors)` pair, caching
/// atom lattices and product prefixes.
pub struct IdealEvaluator {
    ctx: RingContext,
    divisors: DivisorTuple,
    atoms: HashMap<Atom, LatticeBasis>,
    products: HashMap<Vec<Atom>, LatticeBasis>,
}

impl IdealEvaluator {
    pub fn new(ctx: RingContext, divisors: &DivisorTuple) -> Result<Self> {
        if ctx.rank() != divisors.rank() {
            return Err(Error::DimensionMismatch {
                expected: ctx.rank(),
                found: divisors.rank(),
            });
        }
        Ok(IdealEvaluator {
            ctx,
            divisors: divisors.clone(),
            atoms: HashMap::new(),
            products: HashMap::new(),
        })
    }

    pub fn context(&self) -> RingContext {
        self.ctx
    }

    pub fn atom(&mut self, a: Atom) -> Result<LatticeBasis> {
        if let Some(l) = self.atoms.get(&a) {
            return Ok(l.clone());
        }
        let ctx = self.ctx;
        let dim = ctx.dimension();
        let l = match a {
            Atom::FullRing => LatticeBasis::full(dim),
            Atom::Augmentation => LatticeBasis::from_generators(
                dim,
                (1..dim).map(|i| {
                    let mut v = vec![BigInt::zero(); dim];
                    v[i] = 1.into();
                    v
                }),
            ),
            Atom::RSpan => closure(ctx, &relator_seeds(ctx, &self.divisors, false)?)?,
            Atom::SSpan => closure(ctx, &relator_seeds(ctx, &self.divisors, true)?)?,
        };
        self.atoms.insert(a, l.clone());
        Ok(l)
    }

    pub fn product(&mut self, atoms: &[Atom]) -> Result<LatticeBasis> {
        assert!(!atoms.is_empty());
        if let Some(l) = self.products.get(atoms) {
            return Ok(l.clone());
        }
        let l = if atoms.len() == 1 {
            self.atom(atoms[0])?
        } else {
            let head = self.product(&atoms[..atoms.len() - 1])?;
            let last = self.atom(atoms[atoms.len() - 1])?;
            lattice_product(self.ctx, &head, &last)
        };
        self.products.insert(atoms.to_vec(), l.clone());
        Ok(l)
    }

    pub fn eval(&mut self, expr: &IdealExpr) -> Result<LatticeBasis> {
        let mut acc = LatticeBasis::zero(self.ctx.dimension());
        for t in &expr.terms {
            acc = acc.sum(&self.product(t)?)?;
        }
        Ok(acc)
    }
}

/// Lattice of `expr` in the monomial coordinates of `ctx`.
pub fn eval_ideal(ctx: RingContext, e: &DivisorTuple, expr: &IdealExpr) -> Result<LatticeBasis> {
    IdealEvaluator::new(ctx, e)?.eval(expr)
}

/// Whether `w ∈ D(level, expr)`, i.e. `w - 1 ∈ expr + f^level`.
pub fn membership(e: &DivisorTuple, w: &GroupWord, expr: &IdealExpr, level: usize) -> Result<bool> {
    if !(3..=4).contains(&level) {
        return Err(Error::UnsupportedLevel(level));
    }
    let ctx = RingContext::new(e.rank(), level)?;
    check_word(ctx, w)?;
    let l = eval_ideal(ctx, e, expr)?;
    l.contains_vector(&deviation(ctx, w)?.to_dense())
}

fn relator_seeds(ctx: RingContext, e: &DivisorTuple, with_gamma2: bool) -> Result<Vec<RingElement>> {
    let mut seeds = Vec::new();
    for i in 1..=ctx.rank() {
        let ei = e.e(i);
        if ei.is_zero() {
            continue;
        }
        let p = GroupWord::generator_pow(i, ei.clone());
        seeds.push(deviation(ctx, &p)?);
        seeds.push(deviation(ctx, &p.inverse())?);
    }
    if with_gamma2 {
        for a in 1..=ctx.rank() {
            for b in a + 1..=ctx.rank() {
                let c = GroupWord::commutator(&GroupWord::generator(a), &GroupWord::generator(b));
                seeds.push(deviation(ctx, &c)?);
                seeds.push(deviation(ctx, &c.inverse())?);
            }
        }
    }
    Ok(seeds)
}

/// One closure round: conjugates by `x_j^{±1}` and pairwise products of `basis`.
fn closure_candidates(ctx: RingContext, basis: &[RingElement]) -> Result<Vec<RingElement>> {
    let mut out = Vec::new();
    for j in 1..=ctx.rank() {
        let g = &RingElement::one(ctx) + &RingElement::y(ctx, j)?;
        let gi = g.inverse()?;
        for t in basis {
            out.push(&(&g * t) * &gi);
            out.push(&(&gi * t) * &g);
        }
    }
    for a in basis {
        for b in basis {
            let p = a * b;
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Smallest lattice containing `seeds` that is closed under conjugation by
/// the generators and under products.
fn closure(ctx: RingContext, seeds: &[RingElement]) -> Result<LatticeBasis> {
    let mut b = EchelonBuilder::new(ctx.dimension());
    for s in seeds {
        b.insert(s.to_dense());
    }
    loop {
        let current = elements(ctx, &b.clone().finish());
        let mut grew = false;
        for c in closure_candidates(ctx, &current)? {
            grew |= b.insert(c.to_dense());
        }
        if !grew {
            return Ok(b.finish());
        }
    }
}

/// Whether `l` is stable under one more closure round.
pub fn is_closed(ctx: RingContext, l: &LatticeBasis) -> Result<bool> {
    for c in closure_candidates(ctx, &elements(ctx, l))? {
        if !l.contains_vector(&c.to_dense())? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn elements(ctx: RingContext, l: &LatticeBasis) -> Vec<RingElement> {
    l.basis()
        .iter()
        .map(|r| RingElement::from_dense(ctx, r))
        .collect()
}

/// Span of all products `a·b` with `a ∈ A`, `b ∈ B`.
pub fn lattice_product(ctx: RingContext, a: &LatticeBasis, b: &LatticeBasis) -> LatticeBasis {
    let ea = elements(ctx, a);
    let eb = elements(ctx, b);
    let mut builder = EchelonBuilder::new(ctx.dimension());
    for x in &ea {
        for y in &eb {
            let p = x * y;
            if !p.is_zero() {
                builder.insert(p.to_dense());
            }
        }
    }
    builder.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn parse_offset(s: &str) -> usize {
        match IdealExpr::parse(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        }
    }

    #[test]
    fn parse_examples() {
        let e = IdealExpr::parse("f*r*f").unwrap();
        assert_eq!(e.terms(), &[vec![Atom::Augmentation, Atom::RSpan, Atom::Augmentation]]);
        let e = IdealExpr::parse("r*r*f + r*f*r + f*r*r").unwrap();
        assert_eq!(e.terms().len(), 3);
        assert_eq!(e.to_string(), "r*r*f + r*f*r + f*r*r");
        assert_eq!(IdealExpr::parse(" s * s * Z ").unwrap().to_string(), "s*s*Z");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_offset("f**r"), 2);
        assert_eq!(parse_offset(""), 0);
        assert_eq!(parse_offset("f+"), 2);
        assert_eq!(parse_offset("+f"), 0);
        assert_eq!(parse_offset("f*q"), 2);
        assert_eq!(parse_offset("f r"), 2);
        assert_eq!(parse_offset("(f)"), 0);
    }

    #[test]
    fn r_for_cyclic_three() {
        let ctx = RingContext::new(1, 3).unwrap();
        let e = DivisorTuple::from_u64(&[3]).unwrap();
        let r = eval_ideal(ctx, &e, &IdealExpr::parse("r").unwrap()).unwrap();
        let expect = LatticeBasis::from_generators(3, [ints(&[0, 3, 3]), ints(&[0, 0, 9])]);
        assert_eq!(r, expect);
        assert!(is_closed(ctx, &r).unwrap());
        let fr = eval_ideal(ctx, &e, &IdealExpr::parse("f*r").unwrap()).unwrap();
        assert_eq!(fr, LatticeBasis::from_generators(3, [ints(&[0, 0, 3])]));
    }

    #[test]
    fn f_is_all_positive_degree() {
        let ctx = RingContext::new(2, 3).unwrap();
        let e = DivisorTuple::from_u64(&[4, 2]).unwrap();
        let f = eval_ideal(ctx, &e, &IdealExpr::parse("f").unwrap()).unwrap();
        assert_eq!(f.rank(), 6);
        assert!(!f.contains_vector(&ints(&[1, 0, 0, 0, 0, 0, 0])).unwrap());
    }

    #[test]
    fn membership_examples() {
        let e = DivisorTuple::from_u64(&[9, 3]).unwrap();
        let rf = IdealExpr::parse("r*f").unwrap();
        let w9 = GroupWord::parse("[x2,x1]^9").unwrap();
        let w3 = GroupWord::parse("[x2,x1]^3").unwrap();
        assert!(membership(&e, &w9, &rf, 3).unwrap());
        assert!(!membership(&e, &w3, &rf, 3).unwrap());
        let r = IdealExpr::parse("r").unwrap();
        for n in [3, 4] {
            assert!(membership(&e, &GroupWord::parse("x1^9").unwrap(), &r, n).unwrap());
        }
        assert_eq!(
            membership(&e, &w9, &rf, 5),
            Err(Error::UnsupportedLevel(5))
        );
    }

    #[test]
    fn rank_mismatch() {
        let ctx = RingContext::new(3, 3).unwrap();
        let e = DivisorTuple::from_u64(&[9, 3]).unwrap();
        assert!(matches!(
            eval_ideal(ctx, &e, &IdealExpr::parse("r").unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn span_versus_ideal() {
        // r*r is strictly smaller than r*r*Z in general
        let ctx = RingContext::new(2, 4).unwrap();
        let e = DivisorTuple::from_u64(&[2, 2]).unwrap();
        let mut ev = IdealEvaluator::new(ctx, &e).unwrap();
        let rr = ev.eval(&IdealExpr::parse("r*r").unwrap()).unwrap();
        let rrz = ev.eval(&IdealExpr::parse("r*r*Z").unwrap()).unwrap();
        assert!(rrz.contains_lattice(&rr).unwrap());
        assert!(is_closed(ctx, &ev.atom(Atom::SSpan).unwrap()).unwrap());
    }
}
