use num_bigint::BigInt;
use num_traits::Zero;

use crate::{primitive_integer_vector, LinalgError, Matrix, Rational, Result};

/// A linear subspace of `Q^n`, stored by its reduced row echelon basis.
///
/// The RREF basis is unique, so two subspaces are equal exactly when their
/// representations are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.cols(), &rows).expect("rows come from the same matrix"),
        }
    }

    /// Span of the coordinate vectors `e_i` for `i` in `indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = num_traits::One::one();
                v
            })
            .collect();
        Self::span(ambient, &vectors).expect("coordinate vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as rows (canonical RREF).
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    /// Basis rows scaled to primitive integer vectors.
    pub fn integer_basis(&self) -> Vec<Vec<BigInt>> {
        self.basis().iter().map(|v| primitive_integer_vector(v)).collect()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        // Reduce v against the RREF rows using the pivot columns.
        let mut r = v.to_vec();
        for row in self.basis() {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("RREF rows are nonzero");
            if r[pivot].is_zero() {
                continue;
            }
            let factor = r[pivot].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        self.ambient == other.ambient && other.basis().iter().all(|v| self.contains(v))
    }

    /// `S1 + S2`.
    pub fn sum_span(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Annihilator with respect to the standard pairing.
    pub fn annihilator(&self) -> Self {
        self.basis.kernel()
    }

    /// `S1 ∩ S2`, computed as the annihilator of `ann(S1) + ann(S2)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let ann = self.annihilator().sum_span(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    /// Coordinates of `v` with respect to the RREF basis, if `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        // For RREF rows the coordinate on row i is the entry of v at its pivot.
        Some(
            self.basis()
                .iter()
                .map(|row| {
                    let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
                    v[pivot].clone()
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn self_intersection() {
        let s = Subspace::span(3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn complementary_coordinates_meet_in_zero() {
        let a = Subspace::coordinate(4, &[0, 1]);
        let b = Subspace::coordinate(4, &[2, 3]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.sum_span(&b).unwrap(), Subspace::full(4));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(
            a.intersect(&b),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(3, &[v(&[2, 4, 0]), v(&[0, 0, 5])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 2, -1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.integer_basis().len(), 2);
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let s = Subspace::span(3, &[v(&[1, 0, 1]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(s.coordinates(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(s.coordinates(&v(&[1, 0, 0])), None);
    }
}
