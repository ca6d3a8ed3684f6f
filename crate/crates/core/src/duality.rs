//! Cartan duality and compact duality by sign twists on adapted bases.
//!
//! For an involution with `g = h ⊕ q`, the dual `h ⊕ iq` has brackets
//! `[h, h]` unchanged, `[h, iy] = i[h, y]` (same coefficients on the `iq`
//! basis) and `[ix, iy] = -[x, y]`. In a basis of joint eigenvectors this is
//! exactly: negate `c[i][j][k]` iff basis vectors `i` and `j` both lie in `q`.
//! Involutions commuting with the split act diagonally there and extend
//! complex-linearly, so their adapted matrices carry over unchanged.

use num_traits::One;
use qlinalg::{Matrix, Rational, Subspace};

use crate::{Automorphism, CoreError, LieAlgebra, Result};

/// Joint ±1 eigenbasis of a commuting family of involutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedBasis {
    /// Columns are the new basis vectors in old coordinates.
    pub change: Matrix,
    /// `signs[f][i]`: eigenvalue of involution `f` on new basis vector `i`.
    pub signs: Vec<Vec<i8>>,
}

impl AdaptedBasis {
    pub fn dim(&self) -> usize {
        self.change.cols()
    }

    /// Sizes of the consecutive blocks of equal sign patterns.
    pub fn block_dims(&self) -> Vec<usize> {
        let n = self.dim();
        let pattern = |i: usize| self.signs.iter().map(|s| s[i]).collect::<Vec<_>>();
        let mut dims: Vec<usize> = Vec::new();
        for i in 0..n {
            if i > 0 && pattern(i) == pattern(i - 1) {
                *dims.last_mut().expect("nonempty") += 1;
            } else {
                dims.push(1);
            }
        }
        dims
    }

    /// Diagonal matrix of involution `f` in the adapted basis.
    pub fn diagonal(&self, f: usize) -> Matrix {
        sign_matrix(&self.signs[f])
    }

    /// Adapted coordinates of a vector given in the original basis.
    pub fn coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        self.change
            .solve(v)
            .expect("square system")
            .expect("change of basis is invertible")
    }
}

/// Simultaneous diagonalization by iterated eigenspace splitting. Blocks are
/// ordered by sign pattern with `+` before `-`, each with its RREF basis.
pub fn adapt_basis(g: &LieAlgebra, family: &[Automorphism]) -> Result<AdaptedBasis> {
    let n = g.dim();
    for (i, a) in family.iter().enumerate() {
        if a.dim() != n {
            return Err(CoreError::AlgebraMismatch {
                expected: n,
                found: a.dim(),
            });
        }
        if !a.is_involution() {
            return Err(CoreError::NotInvolutive);
        }
        if family[..i].iter().any(|b| !a.commutes_with(b)) {
            return Err(CoreError::NotCommuting);
        }
    }
    let mut blocks: Vec<(Vec<i8>, Subspace)> = vec![(Vec::new(), Subspace::full(n))];
    for a in family {
        let (plus, minus) = a.eigensplit()?;
        let mut next = Vec::new();
        for (pattern, block) in blocks {
            for (sign, part) in [(1i8, &plus), (-1i8, &minus)] {
                let piece = block.intersect(part)?;
                if !piece.is_zero() {
                    let mut p = pattern.clone();
                    p.push(sign);
                    next.push((p, piece));
                }
            }
        }
        blocks = next;
    }
    let mut columns = Vec::with_capacity(n);
    let mut signs = vec![Vec::with_capacity(n); family.len()];
    for (pattern, block) in &blocks {
        for v in block.basis() {
            columns.push(v);
            for (f, s) in pattern.iter().enumerate() {
                signs[f].push(*s);
            }
        }
    }
    Ok(AdaptedBasis {
        change: Matrix::from_columns(n, &columns)?,
        signs,
    })
}

/// A dual algebra with its transported involutions.
#[derive(Debug, Clone)]
pub struct DualResult {
    pub algebra: LieAlgebra,
    /// Transported involutions, in the order of the input family.
    pub involutions: Vec<Automorphism>,
    pub basis: AdaptedBasis,
    /// The original algebra expressed in the adapted basis.
    pub adapted: LieAlgebra,
}

fn twist(g: &LieAlgebra, family: &[Automorphism]) -> Result<DualResult> {
    let basis = adapt_basis(g, family)?;
    let adapted = g.change_basis(&basis.change)?.without_realization();
    let minus: Vec<bool> = basis.signs[0].iter().map(|&s| s < 0).collect();
    let labels = adapted
        .labels()
        .iter()
        .zip(&minus)
        .map(|(l, &m)| if m { format!("i{l}") } else { l.clone() })
        .collect();
    let algebra = adapted.sign_twisted(&minus, labels)?;
    let involutions = (0..family.len())
        .map(|f| Automorphism::certify(&algebra, basis.diagonal(f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DualResult {
        algebra,
        involutions,
        basis,
        adapted,
    })
}

/// `g^c = h ⊕ iq` for `tau`, transporting `tau` and the `extra` involutions.
pub fn cartan_dual(g: &LieAlgebra, tau: &Automorphism, extra: &[Automorphism]) -> Result<DualResult> {
    let mut family = vec![tau.clone()];
    family.extend_from_slice(extra);
    twist(g, &family)
}

/// `B_theta(x, y) = -kappa(x, theta y)` is positive definite.
pub fn is_cartan_involution(g: &LieAlgebra, theta: &Automorphism) -> Result<bool> {
    let k = g.killing();
    if k.rank() != g.dim() {
        return Err(CoreError::NotSemisimple);
    }
    if !theta.is_involution() {
        return Ok(false);
    }
    let b = -&(&k * theta.matrix());
    if !b.is_symmetric() {
        return Ok(false);
    }
    let s = b.signature()?;
    Ok(s.pos == g.dim())
}

/// `g^r = k ⊕ ip` for a Cartan involution `theta` commuting with `tau`, `sigma`.
/// The transported involutions are returned as `[theta^r, tau^r, sigma^r]`.
pub fn compact_dual(
    g: &LieAlgebra,
    theta: &Automorphism,
    tau: &Automorphism,
    sigma: &Automorphism,
) -> Result<DualResult> {
    if !is_cartan_involution(g, theta)? {
        return Err(CoreError::NotCartan);
    }
    if !theta.commutes_with(tau) || !theta.commutes_with(sigma) {
        return Err(CoreError::NotCommuting);
    }
    twist(g, &[theta.clone(), tau.clone(), sigma.clone()])
}

/// Identity for compact algebras; `x -> -x^T` from the matrix realization
/// when it is a Cartan involution; nothing otherwise.
pub fn canonical_cartan_involution(g: &LieAlgebra) -> Option<Automorphism> {
    let k = g.killing();
    if k.rank() != g.dim() {
        return None;
    }
    if (-&k).signature().ok()?.pos == g.dim() {
        return Some(Automorphism::identity(g));
    }
    let r = g.realization()?;
    let n = g.dim();
    let mut columns = Vec::with_capacity(n);
    for m in r.matrices() {
        columns.push(r.coordinates(&-&m.transpose())?);
    }
    let theta = Automorphism::certify(g, Matrix::from_columns(n, &columns).ok()?).ok()?;
    is_cartan_involution(g, &theta).ok()?.then_some(theta)
}

/// `-kappa` positive definite.
pub fn is_compact(g: &LieAlgebra) -> bool {
    let s = g.killing_signature();
    s.neg == g.dim()
}

pub(crate) fn sign_matrix(signs: &[i8]) -> Matrix {
    Matrix::from_diagonal(
        &signs
            .iter()
            .map(|&s| if s < 0 { -Rational::one() } else { Rational::one() })
            .collect::<Vec<_>>(),
    )
}
