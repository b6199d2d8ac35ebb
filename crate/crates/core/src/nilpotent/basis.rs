use crate::error::{Error, Result};
use crate::freering::{GroupWord, MAX_RANK};

/// Basic commutators of weights 2 and 3 on `x_1, …, x_m`.
///
/// Weight 2: `[x_j, x_i]` with `j > i`, ordered by `(i, j)`.
/// Weight 3: `[[x_j, x_i], x_k]` with `j > i ≤ k`, ordered by `(i, j, k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommutatorBasis {
    rank: usize,
    weight2: Vec<(usize, usize)>,
    weight3: Vec<(usize, usize, usize)>,
}

impl CommutatorBasis {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::RankOutOfRange(rank));
        }
        let mut weight2 = Vec::new();
        let mut weight3 = Vec::new();
        for i in 1..=rank {
            for j in i + 1..=rank {
                weight2.push((j, i));
                for k in i..=rank {
                    weight3.push((j, i, k));
                }
            }
        }
        Ok(CommutatorBasis {
            rank,
            weight2,
            weight3,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight2(&self) -> &[(usize, usize)] {
        &self.weight2
    }

    pub fn weight3(&self) -> &[(usize, usize, usize)] {
        &self.weight3
    }

    pub fn weight2_len(&self) -> usize {
        self.weight2.len()
    }

    pub fn weight3_len(&self) -> usize {
        self.weight3.len()
    }

    pub fn len(&self) -> usize {
        self.weight2.len() + self.weight3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position of `[x_j, x_i]` (`j > i`) in the weight-2 block.
    pub fn index2(&self, j: usize, i: usize) -> Option<usize> {
        self.weight2.iter().position(|&p| p == (j, i))
    }

    /// Position of `[[x_j, x_i], x_k]` in the weight-3 block (not offset).
    pub fn index3(&self, j: usize, i: usize, k: usize) -> Option<usize> {
        self.weight3.iter().position(|&p| p == (j, i, k))
    }

    /// The `n`-th basis element (weight-2 block first) as a word.
    pub fn word(&self, n: usize) -> GroupWord {
        let g = GroupWord::generator;
        if n < self.weight2.len() {
            let (j, i) = self.weight2[n];
            GroupWord::commutator(&g(j), &g(i))
        } else {
            let (j, i, k) = self.weight3[n - self.weight2.len()];
            GroupWord::commutator(&GroupWord::commutator(&g(j), &g(i)), &g(k))
        }
    }

    pub fn name(&self, n: usize) -> String {
        self.word(n).to_string()
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len()).map(|n| self.name(n)).collect()
    }
}

pub fn basic_commutators(m: usize) -> Result<CommutatorBasis> {
    CommutatorBasis::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for m in 1..=6 {
            let b = basic_commutators(m).unwrap();
            assert_eq!(b.weight2_len(), m * (m - 1) / 2);
            assert_eq!(b.weight3_len(), (m * m * m - m) / 3);
        }
        assert!(basic_commutators(0).is_err());
        assert!(basic_commutators(7).is_err());
    }

    #[test]
    fn rank_two_names() {
        let b = basic_commutators(2).unwrap();
        assert_eq!(b.names(), vec!["[x2,x1]", "[[x2,x1],x1]", "[[x2,x1],x2]"]);
        assert!(basic_commutators(1).unwrap().is_empty());
    }
}
