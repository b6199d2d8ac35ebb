use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::normal_form::{project_tail, smith_normal_form, EchelonBuilder};
use super::{AbGroup, IntMatrix};
use crate::error::{Error, Result};

/// A subgroup of `Z^n` stored as its row Hermite normal form.
///
/// The stored basis is canonical, so two lattices are equal exactly when
/// their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeBasis {
    ambient_rank: usize,
    basis: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub(crate) fn from_hnf_rows(ambient_rank: usize, basis: Vec<Vec<BigInt>>) -> Self {
        LatticeBasis {
            ambient_rank,
            basis,
        }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self::from_hnf_rows(ambient_rank, Vec::new())
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self::from_hnf_rows(ambient_rank, IntMatrix::identity(ambient_rank).row_vecs())
    }

    pub fn from_generators<I>(ambient_rank: usize, generators: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut b = EchelonBuilder::new(ambient_rank);
        for g in generators {
            b.insert(g);
        }
        b.finish()
    }

    /// Diagonal lattice `d_1 Z ⊕ … ⊕ d_n Z`.
    pub fn diagonal(d: &[BigInt]) -> Self {
        let n = d.len();
        Self::from_generators(
            n,
            (0..n).map(|i| {
                let mut v = vec![BigInt::zero(); n];
                v[i] = d[i].clone();
                v
            }),
        )
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.ambient_rank, self.basis.clone())
    }

    fn builder(&self) -> EchelonBuilder {
        let mut b = EchelonBuilder::new(self.ambient_rank);
        for r in &self.basis {
            b.insert(r.clone());
        }
        b
    }

    fn check_width(&self, n: usize) -> Result<()> {
        if n != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: n,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` with respect to the stored basis, by triangular solve.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_width(v.len())?;
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let c = leading(row).expect("HNF rows are nonzero");
            let (q, r) = rest[c].div_rem(&row[c]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for k in c..self.ambient_rank {
                    if !row[k].is_zero() {
                        rest[k] -= &q * &row[k];
                    }
                }
            }
            coeffs.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coeffs))
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// First basis vector of `other` outside `self`, if any.
    pub fn first_outside(&self, other: &LatticeBasis) -> Result<Option<Vec<BigInt>>> {
        self.check_width(other.ambient_rank)?;
        for row in &other.basis {
            if !self.contains_vector(row)? {
                return Ok(Some(row.clone()));
            }
        }
        Ok(None)
    }

    pub fn contains_lattice(&self, other: &LatticeBasis) -> Result<bool> {
        Ok(self.first_outside(other)?.is_none())
    }

    pub fn sum(&self, other: &LatticeBasis) -> Result<LatticeBasis> {
        self.check_width(other.ambient_rank)?;
        let mut b = self.builder();
        for r in &other.basis {
            b.insert(r.clone());
        }
        Ok(b.finish())
    }

    pub fn intersect(&self, other: &LatticeBasis) -> Result<LatticeBasis> {
        self.check_width(other.ambient_rank)?;
        let coeffs = lattice_preimage(&self.to_matrix(), other)?;
        Ok(coeffs.image(&self.to_matrix()))
    }

    /// Image `{v·phi}` of the lattice under a row-convention map.
    pub fn image(&self, phi: &IntMatrix) -> LatticeBasis {
        assert_eq!(phi.rows(), self.ambient_rank);
        Self::from_generators(phi.cols(), self.basis.iter().map(|r| phi.apply_row(r)))
    }

    /// Projection onto the coordinates in `range`.
    pub fn project(&self, range: std::ops::Range<usize>) -> LatticeBasis {
        Self::from_generators(range.len(), self.basis.iter().map(|r| r[range.clone()].to_vec()))
    }

    /// Embeds into a larger ambient space, placing the coordinates at `offset`.
    pub fn embed(&self, ambient_rank: usize, offset: usize) -> LatticeBasis {
        assert!(offset + self.ambient_rank <= ambient_rank);
        Self::from_generators(
            ambient_rank,
            self.basis.iter().map(|r| {
                let mut v = vec![BigInt::zero(); ambient_rank];
                v[offset..offset + r.len()].clone_from_slice(r);
                v
            }),
        )
    }
}

fn leading(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Row-convention map `phi: Z^a -> Z^b` (an `a × b` matrix, `v ↦ v·phi`).
/// Returns `{v ∈ Z^a : v·phi ∈ L}`.
///
/// Stacks `phi` over the basis of `L`, tagging only the `phi` rows with an
/// identity block; the kernel of the stacked map, projected to the tag block,
/// is the preimage.
pub fn lattice_preimage(phi: &IntMatrix, l: &LatticeBasis) -> Result<LatticeBasis> {
    if phi.cols() != l.ambient_rank() {
        return Err(Error::DimensionMismatch {
            expected: l.ambient_rank(),
            found: phi.cols(),
        });
    }
    let (a, b) = (phi.rows(), phi.cols());
    let mut eb = EchelonBuilder::new(b + a);
    for r in 0..a {
        let mut v = phi.row(r).to_vec();
        v.extend((0..a).map(|k| if k == r { BigInt::one() } else { BigInt::zero() }));
        eb.insert(v);
    }
    for row in l.basis() {
        let mut v = row.clone();
        v.extend(std::iter::repeat_n(BigInt::zero(), a));
        eb.insert(v);
    }
    Ok(project_tail(eb.finish(), b))
}

/// Solves `v · phi = d` over the integers for a fixed `phi`.
///
/// Keeps the Hermite form of `[phi | I]`; reducing `(d, 0)` against the rows
/// pivoting inside the `phi` block leaves `(0, -v)`.
#[derive(Clone, Debug)]
pub struct RowSolver {
    cols: usize,
    hnf: LatticeBasis,
}

impl RowSolver {
    pub fn new(phi: &IntMatrix) -> Self {
        let (a, b) = (phi.rows(), phi.cols());
        let mut eb = EchelonBuilder::new(b + a);
        for r in 0..a {
            let mut v = phi.row(r).to_vec();
            v.extend((0..a).map(|k| if k == r { BigInt::one() } else { BigInt::zero() }));
            eb.insert(v);
        }
        RowSolver {
            cols: b,
            hnf: eb.finish(),
        }
    }

    /// Some integer solution `v`, or `None` when `d` is outside the image.
    pub fn solve(&self, d: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if d.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: d.len(),
            });
        }
        let width = self.hnf.ambient_rank();
        let mut rest = d.to_vec();
        rest.resize(width, BigInt::zero());
        for row in self.hnf.basis() {
            let c = leading(row).expect("HNF rows are nonzero");
            if c >= self.cols {
                break;
            }
            let (q, r) = rest[c].div_rem(&row[c]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for k in c..width {
                    if !row[k].is_zero() {
                        rest[k] -= &q * &row[k];
                    }
                }
            }
        }
        if rest[..self.cols].iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        Ok(Some(rest[self.cols..].iter().map(|x| -x).collect()))
    }
}

pub fn lattice_member(l: &LatticeBasis, v: &[BigInt]) -> Result<bool> {
    l.contains_vector(v)
}

/// Invariant factors of `a / b`; fails when `b ⊄ a`.
pub fn quotient_invariants(a: &LatticeBasis, b: &LatticeBasis) -> Result<AbGroup> {
    a.check_width(b.ambient_rank)?;
    let mut rows = Vec::with_capacity(b.rank());
    for row in b.basis() {
        match a.coordinates(row)? {
            Some(c) => rows.push(c),
            None => {
                return Err(Error::NotSublattice {
                    witness: row.clone(),
                })
            }
        }
    }
    let coords = IntMatrix::from_rows(a.rank(), rows);
    let snf = smith_normal_form(&coords);
    let mut orders: Vec<BigInt> = snf.diag.iter().filter(|d| !d.is_zero()).cloned().collect();
    let free = a.rank() - orders.len();
    orders.extend(std::iter::repeat_n(BigInt::zero(), free));
    Ok(AbGroup::from_cyclic_orders(orders))
}
