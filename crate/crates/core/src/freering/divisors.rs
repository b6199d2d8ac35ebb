use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::MAX_RANK;
use crate::error::{Error, Result};
use crate::exactlinalg::AbGroup;

/// Exponents `(e_1, …, e_m)` of the relators `x_i^{e_i}`, with `e_{i+1} | e_i`.
///
/// `0 | x` holds only for `x = 0`, so zeros occupy the leading positions.
/// The tuple encodes `G_ab = ⊕ Z/e_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DivisorTuple {
    entries: Vec<BigInt>,
}

impl DivisorTuple {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() || entries.len() > MAX_RANK {
            return Err(Error::RankOutOfRange(entries.len()));
        }
        if let Some(p) = entries.iter().position(Signed::is_negative) {
            return Err(Error::DivisorChain(format!(
                "entry {} is negative ({})",
                p + 1,
                entries[p]
            )));
        }
        for i in 0..entries.len() - 1 {
            let (a, b) = (&entries[i], &entries[i + 1]);
            let divides = if b.is_zero() { a.is_zero() } else { a.is_multiple_of(b) };
            if !divides {
                return Err(Error::DivisorChain(format!(
                    "e{} = {} does not divide e{} = {}",
                    i + 2,
                    b,
                    i + 1,
                    a
                )));
            }
        }
        Ok(DivisorTuple { entries })
    }

    pub fn from_u64(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// Puts zeros first and the rest in descending order, then validates.
    pub fn canonicalize(mut entries: Vec<BigInt>) -> Result<Self> {
        entries.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            _ => b.cmp(a),
        });
        Self::new(entries)
    }

    /// Parses a comma-separated list such as `"9,3"`.
    pub fn parse_entries(text: &str) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let trimmed = part.trim();
            let lead = part.len() - part.trim_start().len();
            let v: BigInt = trimmed.parse().map_err(|_| Error::Parse {
                offset: offset + lead,
                message: format!("'{trimmed}' is not an integer"),
            })?;
            out.push(v);
            offset += part.len() + 1;
        }
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(Self::parse_entries(text)?)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `e_i` with `i` 1-based.
    pub fn e(&self, i: usize) -> &BigInt {
        &self.entries[i - 1]
    }

    pub fn abelianization(&self) -> AbGroup {
        AbGroup::from_cyclic_orders(self.entries.iter().cloned())
    }

    pub fn has_even_entry(&self) -> bool {
        self.entries.iter().any(|e| !e.is_zero() && e.is_even())
    }

    /// True when every entry is odd or zero (`G_ab` is 2-torsion-free).
    pub fn is_odd_or_zero(&self) -> bool {
        !self.has_even_entry()
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(One::is_one)
    }
}

impl fmt::Display for DivisorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_validation() {
        assert!(DivisorTuple::parse("9,3").is_ok());
        assert!(DivisorTuple::parse("0,0,5").is_ok());
        assert!(DivisorTuple::parse("0,4,2").is_ok());
        let e = DivisorTuple::parse("3,9").unwrap_err();
        assert!(e.to_string().contains("divisor chain violated"));
        assert!(DivisorTuple::parse("4,0").is_err());
        assert!(DivisorTuple::parse("-3").is_err());
        assert!(matches!(DivisorTuple::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            DivisorTuple::parse("9, x"),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert_eq!(
            DivisorTuple::parse("1,1,1,1,1,1,1"),
            Err(Error::RankOutOfRange(7))
        );
    }

    #[test]
    fn canonical_order() {
        let t = DivisorTuple::canonicalize(DivisorTuple::parse_entries("3,0,9").unwrap()).unwrap();
        assert_eq!(t.to_string(), "0,9,3");
        assert!(DivisorTuple::canonicalize(DivisorTuple::parse_entries("2,3").unwrap()).is_err());
    }

    #[test]
    fn abelianization() {
        let t = DivisorTuple::parse("0,9,3").unwrap();
        assert_eq!(t.abelianization().to_string(), "[3,9,0]");
        assert!(t.is_odd_or_zero());
        assert!(DivisorTuple::parse("4,2").unwrap().has_even_entry());
    }
}
