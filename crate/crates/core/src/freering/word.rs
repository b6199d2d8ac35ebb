use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{RingContext, RingElement};
use crate::error::{Error, Result};

/// One factor of a [`GroupWord`], carrying its own integer exponent.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Literal {
    /// `x_index ^ exp`
    Generator { index: usize, exp: BigInt },
    /// `[left, right] ^ exp` with `[a,b] = a⁻¹b⁻¹ab`
    Commutator {
        left: GroupWord,
        right: GroupWord,
        exp: BigInt,
    },
    /// `(word) ^ exp`
    Power { word: GroupWord, exp: BigInt },
}

impl Literal {
    fn exp(&self) -> &BigInt {
        match self {
            Literal::Generator { exp, .. }
            | Literal::Commutator { exp, .. }
            | Literal::Power { exp, .. } => exp,
        }
    }

    fn with_exp(&self, e: BigInt) -> Literal {
        match self {
            Literal::Generator { index, .. } => Literal::Generator { index: *index, exp: e },
            Literal::Commutator { left, right, .. } => Literal::Commutator {
                left: left.clone(),
                right: right.clone(),
                exp: e,
            },
            Literal::Power { word, .. } => Literal::Power {
                word: word.clone(),
                exp: e,
            },
        }
    }
}

/// An element of the free group, kept as an unreduced product of literals.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GroupWord {
    literals: Vec<Literal>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    pub fn generator(index: usize) -> Self {
        Self::generator_pow(index, BigInt::one())
    }

    pub fn generator_pow(index: usize, exp: impl Into<BigInt>) -> Self {
        Self::from_literal(Literal::Generator {
            index,
            exp: exp.into(),
        })
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> Self {
        Self::from_literal(Literal::Commutator {
            left: a.clone(),
            right: b.clone(),
            exp: BigInt::one(),
        })
    }

    fn from_literal(l: Literal) -> Self {
        if l.exp().is_zero() {
            return Self::identity();
        }
        GroupWord { literals: vec![l] }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn is_identity_word(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn pow(&self, n: impl Into<BigInt>) -> Self {
        let n = n.into();
        match self.literals.as_slice() {
            [] => Self::identity(),
            [l] => Self::from_literal(l.with_exp(l.exp() * n)),
            _ => Self::from_literal(Literal::Power {
                word: self.clone(),
                exp: n,
            }),
        }
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            literals: self
                .literals
                .iter()
                .rev()
                .map(|l| l.with_exp(-l.exp()))
                .collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut literals = self.literals.clone();
        literals.extend(other.literals.iter().cloned());
        GroupWord { literals }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &GroupWord) -> Self {
        g.inverse().concat(self).concat(g)
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_generator(&self) -> usize {
        self.literals
            .iter()
            .map(|l| match l {
                Literal::Generator { index, .. } => *index,
                Literal::Commutator { left, right, .. } => {
                    left.max_generator().max(right.max_generator())
                }
                Literal::Power { word, .. } => word.max_generator(),
            })
            .max()
            .unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Self> {
        WordParser::new(text).parse_all()
    }

    /// The truncated image of the word in `ctx` (a unit with constant term 1).
    pub fn evaluate(&self, ctx: RingContext) -> Result<RingElement> {
        let mut acc = RingElement::one(ctx);
        for l in &self.literals {
            let base = match l {
                Literal::Generator { index, .. } => {
                    &RingElement::one(ctx) + &RingElement::y(ctx, *index)?
                }
                Literal::Commutator { left, right, .. } => {
                    let a = left.evaluate(ctx)?;
                    let b = right.evaluate(ctx)?;
                    let ai = a.inverse()?;
                    let bi = b.inverse()?;
                    &(&(&ai * &bi) * &a) * &b
                }
                Literal::Power { word, .. } => word.evaluate(ctx)?,
            };
            let u = &base - &RingElement::one(ctx);
            acc = &acc * &u.unipotent_power(l.exp())?;
        }
        Ok(acc)
    }
}

/// `trunc(w − 1)`.
pub fn deviation(ctx: RingContext, w: &GroupWord) -> Result<RingElement> {
    Ok(&w.evaluate(ctx)? - &RingElement::one(ctx))
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return write!(f, "1");
        }
        for l in &self.literals {
            match l {
                Literal::Generator { index, .. } => write!(f, "x{index}")?,
                Literal::Commutator { left, right, .. } => write!(f, "[{left},{right}]")?,
                Literal::Power { word, .. } => write!(f, "({word})")?,
            }
            if !l.exp().is_one() {
                write!(f, "^{}", l.exp())?;
            }
        }
        Ok(())
    }
}

struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> WordParser<'a> {
    fn new(text: &'a str) -> Self {
        WordParser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn parse_all(mut self) -> Result<GroupWord> {
        let w = self.word()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(w)
    }

    fn word(&mut self) -> Result<GroupWord> {
        let mut literals = Vec::new();
        let mut factors = 0;
        while matches!(self.peek(), Some(b'x' | b'[' | b'(')) {
            let mut w = self.factor()?;
            literals.append(&mut w.literals);
            factors += 1;
        }
        if factors == 0 {
            return self.err("expected a generator, commutator or parenthesized word");
        }
        Ok(GroupWord { literals })
    }

    fn factor(&mut self) -> Result<GroupWord> {
        let atom = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let index = self.digits()?;
                if index == 0 {
                    self.pos = start;
                    return self.err("generator indices start at 1");
                }
                GroupWord::generator(index)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(b',')?;
                let b = self.word()?;
                self.expect(b']')?;
                GroupWord::commutator(&a, &b)
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                GroupWord::from_literal(Literal::Power {
                    word: w,
                    exp: BigInt::one(),
                })
            }
            _ => return self.err("expected a generator, commutator or parenthesized word"),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_int()?;
            return Ok(atom.pow(e));
        }
        Ok(atom)
    }

    fn digits(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("generator index too large")
        })
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let negative = match self.src.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer exponent");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: BigInt = s.parse().expect("digits parse");
        Ok(if negative { -v } else { v })
    }
}

/// Checks that every generator index in `w` is valid for `ctx`.
pub fn check_word(ctx: RingContext, w: &GroupWord) -> Result<()> {
    let m = w.max_generator();
    if m > ctx.rank() {
        return Err(Error::InvalidGenerator {
            index: m,
            rank: ctx.rank(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: usize, n: usize) -> RingContext {
        RingContext::new(m, n).unwrap()
    }

    #[test]
    fn deviation_examples() {
        let c = ctx(2, 4);
        let x1 = GroupWord::generator(1);
        assert_eq!(deviation(c, &x1).unwrap().to_string(), "y1");
        assert_eq!(
            deviation(c, &x1.inverse()).unwrap().to_string(),
            "-y1 + y1y1 - y1y1y1"
        );
        let w = GroupWord::parse("[x2,x1]").unwrap();
        assert_eq!(deviation(ctx(2, 3), &w).unwrap().to_string(), "-y1y2 + y2y1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["x1", "x1^-3x2", "[x2,x1]^9", "[[x2,x1],x1]^-3", "(x1x2)^4x3", "[x1^9,x2^3]"] {
            let w = GroupWord::parse(s).unwrap();
            assert_eq!(GroupWord::parse(&w.to_string()).unwrap(), w, "{s}");
        }
        assert_eq!(GroupWord::parse("x1^2").unwrap().to_string(), "x1^2");
        assert_eq!(GroupWord::parse(" x1 ^ -2 ").unwrap().to_string(), "x1^-2");
    }

    #[test]
    fn parse_errors() {
        let offset = |s: &str| match GroupWord::parse(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("y1"), 0);
        assert_eq!(offset("x"), 1);
        assert_eq!(offset("x0"), 1);
        assert_eq!(offset("[x1 x2]"), 6);
        assert_eq!(offset("x1^"), 3);
        assert_eq!(offset("x1)"), 2);
    }

    #[test]
    fn invalid_generator() {
        let w = GroupWord::parse("x3").unwrap();
        assert!(matches!(
            deviation(ctx(2, 3), &w),
            Err(Error::InvalidGenerator { index: 3, rank: 2 })
        ));
        assert!(check_word(ctx(2, 3), &w).is_err());
    }

    #[test]
    fn power_of_product() {
        let c = ctx(2, 4);
        let w = GroupWord::parse("(x1x2)^2").unwrap();
        let v = GroupWord::parse("x1x2x1x2").unwrap();
        assert_eq!(deviation(c, &w).unwrap(), deviation(c, &v).unwrap());
        let inv = GroupWord::parse("(x1x2)^-1").unwrap();
        let v = GroupWord::parse("x2^-1x1^-1").unwrap();
        assert_eq!(deviation(c, &inv).unwrap(), deviation(c, &v).unwrap());
    }
}
