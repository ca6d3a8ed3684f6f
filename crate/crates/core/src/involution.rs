//! Automorphisms, commuting involution pairs and the element dichotomy.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use qlinalg::{sturm_count, Bound, Matrix, Rational, Subspace};
use serde::{Deserialize, Serialize};

use crate::ideals::simple_ideals;
use crate::{CoreError, Element, LieAlgebra, Result};

/// An invertible linear map of `g` preserving the bracket, certified on all
/// basis pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    matrix: Matrix,
}

impl Automorphism {
    pub fn certify(g: &LieAlgebra, a: Matrix) -> Result<Self> {
        let n = g.dim();
        if a.rows() != n || a.cols() != n {
            return Err(CoreError::AlgebraMismatch {
                expected: n,
                found: a.rows(),
            });
        }
        if a.rank() != n {
            return Err(CoreError::NotInvertible);
        }
        let images: Vec<Vec<Rational>> = (0..n).map(|j| a.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = a.mul_vec(&g.bracket_vec(&g.unit(i), &g.unit(j)));
                let rhs = g.bracket_vec(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(CoreError::BracketNotPreserved(
                        g.labels()[i].clone(),
                        g.labels()[j].clone(),
                    ));
                }
            }
        }
        Ok(Self { matrix: a })
    }

    pub fn identity(g: &LieAlgebra) -> Self {
        Self {
            matrix: Matrix::identity(g.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    pub fn is_involution(&self) -> bool {
        (&self.matrix * &self.matrix).is_identity()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        &self.matrix * &other.matrix == &other.matrix * &self.matrix
    }

    /// `self ∘ other`; the composite of automorphisms is an automorphism.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            matrix: &self.matrix * &other.matrix,
        }
    }

    /// `(plus, minus)` eigenspaces of an involution.
    pub fn eigensplit(&self) -> Result<(Subspace, Subspace)> {
        if !self.is_involution() {
            return Err(CoreError::NotInvolutive);
        }
        let id = Matrix::identity(self.dim());
        Ok(((&self.matrix - &id).kernel(), (&self.matrix + &id).kernel()))
    }

    pub fn fixed_space(&self) -> Result<Subspace> {
        Ok(self.eigensplit()?.0)
    }
}

/// `h_l ⊕ h_m ⊕ q_l ⊕ q_m`: the joint eigenspaces of two commuting involutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadDecomposition {
    pub h_l: Subspace,
    pub h_m: Subspace,
    pub q_l: Subspace,
    pub q_m: Subspace,
}

impl QuadDecomposition {
    /// Dimensions in the order `(h_l, h_m, q_l, q_m)`.
    pub fn dims(&self) -> [usize; 4] {
        [self.h_l.dim(), self.h_m.dim(), self.q_l.dim(), self.q_m.dim()]
    }

    /// Parts with their `Z/2 x Z/2` grading `(tau sign, sigma sign)`, 0 for +.
    pub fn graded(&self) -> [(&Subspace, (u8, u8)); 4] {
        [
            (&self.h_l, (0, 0)),
            (&self.h_m, (0, 1)),
            (&self.q_l, (1, 0)),
            (&self.q_m, (1, 1)),
        ]
    }

    /// All sixteen inclusions `[X, Y] ⊆ Z` dictated by the grading.
    pub fn bracket_laws_hold(&self, g: &LieAlgebra) -> Result<bool> {
        let parts = self.graded();
        for (x, gx) in parts {
            for (y, gy) in parts {
                let target = parts
                    .iter()
                    .find(|(_, gz)| *gz == (gx.0 ^ gy.0, gx.1 ^ gy.1))
                    .expect("grading is a group")
                    .0;
                if !target.contains_subspace(&g.bracket_span(x, y)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `(g, tau, sigma)` with commuting involutive automorphisms.
#[derive(Debug, Clone)]
pub struct CommutingTriple {
    algebra: Arc<LieAlgebra>,
    tau: Automorphism,
    sigma: Automorphism,
}

impl CommutingTriple {
    pub fn new(algebra: Arc<LieAlgebra>, tau: Automorphism, sigma: Automorphism) -> Result<Self> {
        let n = algebra.dim();
        for a in [&tau, &sigma] {
            if a.dim() != n {
                return Err(CoreError::AlgebraMismatch {
                    expected: n,
                    found: a.dim(),
                });
            }
            if !a.is_involution() {
                return Err(CoreError::NotInvolutive);
            }
        }
        if !tau.commutes_with(&sigma) {
            return Err(CoreError::NotCommuting);
        }
        Ok(Self { algebra, tau, sigma })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn tau(&self) -> &Automorphism {
        &self.tau
    }

    pub fn sigma(&self) -> &Automorphism {
        &self.sigma
    }

    /// The same algebra with the roles of the involutions exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            tau: self.sigma.clone(),
            sigma: self.tau.clone(),
        }
    }

    pub fn quad_decompose(&self) -> QuadDecomposition {
        let (h, q) = self.tau.eigensplit().expect("checked involutive");
        let (l, m) = self.sigma.eigensplit().expect("checked involutive");
        let cap = |a: &Subspace, b: &Subspace| a.intersect(b).expect("same ambient");
        QuadDecomposition {
            h_l: cap(&h, &l),
            h_m: cap(&h, &m),
            q_l: cap(&q, &l),
            q_m: cap(&q, &m),
        }
    }

    /// `g^{-tau} ∩ g^{-sigma}`.
    pub fn q_m(&self) -> Subspace {
        let (_, q) = self.tau.eigensplit().expect("checked involutive");
        let (_, m) = self.sigma.eigensplit().expect("checked involutive");
        q.intersect(&m).expect("same ambient")
    }

    /// Dissecting iff `dim q_m = 1`; the dimension is returned as witness.
    pub fn is_dissecting(&self) -> (bool, usize) {
        let d = self.q_m().dim();
        (d == 1, d)
    }
}

/// Spectral type of an element through `ad x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementType {
    Zero,
    Elliptic,
    Hyperbolic,
    Nilpotent,
    Mixed,
    Indeterminate,
}

impl ElementType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ElementType::Zero => "zero",
            ElementType::Elliptic => "elliptic",
            ElementType::Hyperbolic => "hyperbolic",
            ElementType::Nilpotent => "nilpotent",
            ElementType::Mixed => "mixed",
            ElementType::Indeterminate => "indeterminate",
        }
    }

    /// Image under Cartan duality of an element of `q` (multiplication by i).
    pub fn dual(&self) -> Self {
        match self {
            ElementType::Elliptic => ElementType::Hyperbolic,
            ElementType::Hyperbolic => ElementType::Elliptic,
            other => *other,
        }
    }
}

impl fmt::Display for ElementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies `x` by the minimal polynomial of `ad x`.
///
/// For squarefree `m(t) = t^e r(t)` with `r(0) != 0`, the roots of `r` on the
/// real axis are counted by Sturm, and the roots on the imaginary axis come in
/// pairs `±iμ` whose squares are the negative roots of the root-square
/// polynomial. Both counts are exact, so roots off the axes are detected
/// without approximating them.
pub fn classify_element(g: &LieAlgebra, x: &Element) -> Result<ElementType> {
    let a = g.ad(x)?;
    if a.is_zero() {
        return Ok(ElementType::Zero);
    }
    let m = a.min_poly()?;
    if m.is_monomial_power() {
        return Ok(ElementType::Nilpotent);
    }
    if !m.is_squarefree()? {
        return Ok(ElementType::Mixed);
    }
    let (r, _) = m.strip_zero_roots();
    let d = r.degree().expect("nonzero");
    let real = sturm_count(&r, &Bound::NegInf, &Bound::PosInf)?;
    let squares = r.root_square_poly().squarefree_part()?;
    let imaginary = 2 * sturm_count(&squares, &Bound::NegInf, &Bound::Finite(Rational::zero()))?;
    Ok(if real == d {
        ElementType::Hyperbolic
    } else if imaginary == d {
        ElementType::Elliptic
    } else if real + imaginary == d {
        ElementType::Mixed
    } else {
        ElementType::Indeterminate
    })
}

/// `g^tau` with its induced structure constants.
pub fn fixed_algebra(g: &LieAlgebra, tau: &Automorphism) -> Result<LieAlgebra> {
    g.subalgebra(&tau.fixed_space()?)
}

/// Whether `g` has no `tau`-invariant ideals besides `0` and `g`, with `q ≠ 0`.
///
/// Supported for semisimple `g` and for the one-dimensional abelian algebra.
pub fn is_irreducible_pair(g: &LieAlgebra, tau: &Automorphism) -> Result<bool> {
    let n = g.dim();
    if !tau.is_involution() {
        return Err(CoreError::NotInvolutive);
    }
    if n == 1 && g.is_abelian() {
        return Ok(tau.matrix()[(0, 0)] == -Rational::one());
    }
    if !g.is_semisimple() {
        return Err(CoreError::Unsupported(
            "irreducibility is decided only for semisimple or one-dimensional algebras".into(),
        ));
    }
    let (_, q) = tau.eigensplit()?;
    if q.is_zero() {
        return Ok(false);
    }
    let ideals = simple_ideals(g)?;
    // tau permutes the simple ideals; the pair is irreducible iff one orbit.
    let image = |s: &Subspace| {
        let vectors: Vec<Vec<Rational>> = s.basis().iter().map(|v| tau.apply(v)).collect();
        Subspace::span(n, &vectors).expect("same ambient")
    };
    match ideals.as_slice() {
        [_] => Ok(true),
        [a, b] => Ok(image(a) == *b),
        _ => Ok(false),
    }
}
