//! Concrete algebras, involutions and embeddings.
//!
//! `so(p,q)` uses the basis `B_ij = E_ij - ε_i ε_j E_ji` for `i < j` in
//! lexicographic order, labeled `B{i}_{j}` with 1-based indices, where
//! `ε_k = +1` for `k <= p` and `-1` otherwise.

use std::fmt;

use num_traits::{One, Signed, Zero};
use qlinalg::{int, rat, Inertia, Matrix, Rational};

use crate::duality::sign_matrix;
use crate::{Automorphism, CoreError, LieAlgebra, Result};

/// The form `β_{p,q}` with Gram matrix `diag(+1 x p, -1 x q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignatureForm {
    pub p: usize,
    pub q: usize,
}

impl SignatureForm {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(CoreError::InvalidArgument("form needs p + q >= 1".into()));
        }
        Ok(Self { p, q })
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn epsilon(&self, k: usize) -> i8 {
        if k < self.p {
            1
        } else {
            -1
        }
    }

    pub fn matrix(&self) -> Matrix {
        sign_matrix(&(0..self.dim()).map(|k| self.epsilon(k)).collect::<Vec<_>>())
    }

    pub fn beta(&self, x: &[Rational], y: &[Rational]) -> Rational {
        x.iter()
            .zip(y)
            .enumerate()
            .map(|(k, (a, b))| if self.epsilon(k) > 0 { a * b } else { -(a * b) })
            .sum()
    }
}

/// A ±1 vector `γ` that is not constant; `Ad(diag γ)` is a nontrivial involution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(CoreError::InvalidArgument("sign vector entries must be ±1".into()));
        }
        if signs.windows(2).all(|w| w[0] == w[1]) {
            return Err(CoreError::InvalidArgument(
                "constant sign vector induces the identity".into(),
            ));
        }
        Ok(Self(signs))
    }

    /// The single-flip vector `r_j` (1-based) of length `n`.
    pub fn reflection(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(CoreError::InvalidArgument(format!("reflection index {j} out of range 1..={n}")));
        }
        Self::new((1..=n).map(|k| if k == j { -1 } else { 1 }).collect())
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Representative of `{γ, -γ}` with first entry `+1`.
    pub fn canonical(&self) -> Self {
        if self.0[0] < 0 {
            Self(self.0.iter().map(|s| -s).collect())
        } else {
            self.clone()
        }
    }

    /// The axis (0-based) on which `γ` differs from all other entries, if unique.
    pub fn flipped_axis(&self) -> Option<usize> {
        let minus: Vec<usize> = (0..self.len()).filter(|&k| self.0[k] < 0).collect();
        let plus: Vec<usize> = (0..self.len()).filter(|&k| self.0[k] > 0).collect();
        match (minus.as_slice(), plus.as_slice()) {
            ([k], _) | (_, [k]) => Some(*k),
            _ => None,
        }
    }

    /// All `2^(n-1) - 1` canonical classes, in lexicographic order with `+` first.
    pub fn all_classes(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n - 1)) {
            let signs: Vec<i8> = std::iter::once(1)
                .chain((0..n - 1).rev().map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }))
                .collect();
            if let Ok(s) = Self::new(signs) {
                out.push(s);
            }
        }
        out
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// `so(p,q)`, realized by `n x n` matrices preserving `β_{p,q}`.
pub fn so(p: usize, q: usize) -> Result<LieAlgebra> {
    let n = p + q;
    if n < 2 {
        return Err(CoreError::InvalidArgument("so(p,q) needs p + q >= 2".into()));
    }
    let form = SignatureForm::new(p, q)?;
    let mut labels = Vec::new();
    let mut matrices = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(i, j)] = Rational::one();
            m[(j, i)] = int(-(form.epsilon(i) * form.epsilon(j)) as i64);
            labels.push(format!("B{}_{}", i + 1, j + 1));
            matrices.push(m);
        }
    }
    LieAlgebra::from_matrices(labels, matrices, form.matrix())
}

/// `(p, q)` read off a diagonal ±1 realization form.
pub fn form_signature(g: &LieAlgebra) -> Option<(usize, usize)> {
    let form = g.realization()?.form();
    let n = form.rows();
    let mut p = 0;
    for i in 0..n {
        for j in 0..n {
            let x = &form[(i, j)];
            if i != j && !x.is_zero() {
                return None;
            }
        }
        let d = &form[(i, i)];
        if d.is_one() {
            p += 1;
        } else if *d != -Rational::one() {
            return None;
        }
    }
    Some((p, n - p))
}

/// `Ad(w): x -> w x w^{-1}` on the realization, as an automorphism of `g`.
pub fn conjugation(g: &LieAlgebra, w: &Matrix) -> Result<Automorphism> {
    let r = g
        .realization()
        .ok_or_else(|| CoreError::Unsupported("conjugation needs a matrix realization".into()))?;
    let inv = w.inverse().map_err(|_| CoreError::NotInvertible)?;
    let mut columns = Vec::with_capacity(g.dim());
    for m in r.matrices() {
        let image = &(w * m) * &inv;
        columns.push(r.coordinates(&image).ok_or_else(|| {
            CoreError::InvalidArgument("conjugation does not preserve the algebra".into())
        })?);
    }
    Automorphism::certify(g, Matrix::from_columns(g.dim(), &columns)?)
}

/// `Ad(diag γ)` on a realized `so(p,q)`; `γ` and `-γ` give the same map.
pub fn signature_involution(g: &LieAlgebra, s: &SignVector) -> Result<Automorphism> {
    let (p, q) = form_signature(g).ok_or_else(|| CoreError::Unsupported("not a realized so(p,q)".into()))?;
    if s.len() != p + q {
        return Err(CoreError::InvalidArgument(format!(
            "sign vector has length {}, expected {}",
            s.len(),
            p + q
        )));
    }
    conjugation(g, &sign_matrix(s.signs()))
}

/// `x -> r_j x r_j` with `r_j` the reflection in the `j`-th axis (1-based).
pub fn reflection_involution(g: &LieAlgebra, j: usize) -> Result<Automorphism> {
    let (p, q) = form_signature(g).ok_or_else(|| CoreError::Unsupported("not a realized so(p,q)".into()))?;
    signature_involution(g, &SignVector::reflection(p + q, j)?)
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn sl2_basis() -> [Matrix; 3] {
    [
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    ]
}

/// `sl2(R)` on `{h, e, f}`; the realization preserves the symplectic form.
pub fn sl2r() -> LieAlgebra {
    LieAlgebra::from_matrices(
        names(&["h", "e", "f"]),
        sl2_basis().to_vec(),
        Matrix::from_i64(&[&[0, 1], &[-1, 0]]),
    )
    .expect("sl2 realization is consistent")
}

/// `su(2)` on `{u1, u2, u3}` with `[u1, u2] = 2 u3` cyclically. In `2 x 2`
/// complex matrices `u_k = -i σ_k` (Pauli matrices); only the structure
/// constants are stored.
pub fn su2() -> LieAlgebra {
    let two = int(2);
    LieAlgebra::from_brackets(
        names(&["u1", "u2", "u3"]),
        &[(0, 1, 2, two.clone()), (1, 2, 0, two.clone()), (2, 0, 1, two)],
    )
    .expect("su2 brackets are valid")
}

/// Realification of a complex `2 x 2` matrix `A + iB` as `[[A, -B], [B, A]]`.
fn realify(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(4, 4, |r, c| match (r < 2, c < 2) {
        (true, true) | (false, false) => a[(r % 2, c % 2)].clone(),
        (true, false) => -b[(r % 2, c % 2)].clone(),
        (false, true) => b[(r % 2, c % 2)].clone(),
    })
}

/// `sl2(C)` as a 6-dimensional real algebra on `{h, e, f, ih, ie, if}`.
pub fn sl2c_real() -> LieAlgebra {
    let zero = Matrix::zeros(2, 2);
    let basis = sl2_basis();
    let matrices = basis
        .iter()
        .map(|m| realify(m, &zero))
        .chain(basis.iter().map(|m| realify(&zero, m)))
        .collect();
    let form = Matrix::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    LieAlgebra::from_matrices(names(&["h", "e", "f", "ih", "ie", "if"]), matrices, form)
        .expect("sl2(C) realization is consistent")
}

/// Complex conjugation of `sl2(C)` fixing the real form `sl2(R)`.
pub fn sl2c_conjugation(g: &LieAlgebra) -> Result<Automorphism> {
    Automorphism::certify(g, sign_matrix(&[1, 1, 1, -1, -1, -1]))
}

/// Size of each half if `g` is `g1 ⊕ g1` with identical halves.
fn half_dim(gg: &LieAlgebra) -> Result<usize> {
    let n = gg.dim();
    let d = n / 2;
    let mismatch = || CoreError::InvalidArgument("algebra is not a sum of two identical summands".into());
    if n == 0 || !n.is_multiple_of(2) {
        return Err(mismatch());
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = gg.structure_constant(i, j, k);
                let same_block = (i < d) == (j < d) && (j < d) == (k < d);
                if !same_block && !c.is_zero() {
                    return Err(mismatch());
                }
                if i < d && j < d && k < d && c != gg.structure_constant(i + d, j + d, k + d) {
                    return Err(mismatch());
                }
            }
        }
    }
    Ok(d)
}

fn block_swap(d: usize, s: &Matrix, swap: bool) -> Matrix {
    Matrix::from_fn(2 * d, 2 * d, |r, c| {
        let (br, bc) = (r / d, c / d);
        let hit = if swap { br != bc } else { br == bc };
        if hit {
            s[(r % d, c % d)].clone()
        } else {
            Rational::zero()
        }
    })
}

/// `(x, y) -> (y, x)`.
pub fn flip(gg: &LieAlgebra) -> Result<Automorphism> {
    let d = half_dim(gg)?;
    Automorphism::certify(gg, block_swap(d, &Matrix::identity(d), true))
}

/// `(x, y) -> (σ1 y, σ1 x)`.
pub fn swap_twist(gg: &LieAlgebra, sigma1: &Automorphism) -> Result<Automorphism> {
    let d = half_dim(gg)?;
    check_half(d, sigma1)?;
    Automorphism::certify(gg, block_swap(d, sigma1.matrix(), true))
}

/// `(x, y) -> (σ1 x, σ1 y)`.
pub fn componentwise(gg: &LieAlgebra, sigma1: &Automorphism) -> Result<Automorphism> {
    let d = half_dim(gg)?;
    check_half(d, sigma1)?;
    Automorphism::certify(gg, block_swap(d, sigma1.matrix(), false))
}

fn check_half(d: usize, sigma1: &Automorphism) -> Result<()> {
    if sigma1.dim() != d {
        return Err(CoreError::AlgebraMismatch {
            expected: d,
            found: sigma1.dim(),
        });
    }
    if !sigma1.is_involution() {
        return Err(CoreError::NotInvolutive);
    }
    Ok(())
}

/// The two involutions of `sl2(R)`: `x -> -x^T` and `x -> I11 x I11`.
#[derive(Debug, Clone)]
pub struct Sl2Involutions {
    pub neg_transpose: Automorphism,
    pub conj_i11: Automorphism,
}

pub fn sl2_involutions() -> Sl2Involutions {
    let g = sl2r();
    let neg_transpose = Matrix::from_i64(&[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]);
    let conj_i11 = Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
    Sl2Involutions {
        neg_transpose: Automorphism::certify(&g, neg_transpose).expect("automorphism"),
        conj_i11: Automorphism::certify(&g, conj_i11).expect("automorphism"),
    }
}

/// Conjugation by `I11 = diag(1, -1)` on `su(2)`: `u1 -> u1`, `u2 -> -u2`, `u3 -> -u3`.
pub fn su2_involution_i11() -> Automorphism {
    Automorphism::certify(&su2(), sign_matrix(&[1, -1, -1])).expect("automorphism")
}

/// A representation `ρ: g1 ⊕ g2 -> gl(V)` together with a form `β` on `V`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub source: LieAlgebra,
    /// `ρ(b_i)` for each basis vector of the source.
    pub images: Vec<Matrix>,
    /// Gram matrix of `β` on `V`.
    pub form: Matrix,
}

impl Embedding {
    fn image(&self, coords: &[Rational]) -> Matrix {
        let n = self.form.rows();
        coords
            .iter()
            .zip(&self.images)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (c, m)| &acc + &m.scale(c))
    }

    /// `ρ[u, v] = [ρu, ρv]` on all basis pairs.
    pub fn is_homomorphism(&self) -> bool {
        let g = &self.source;
        (0..g.dim()).all(|i| {
            (0..g.dim()).all(|j| {
                self.image(&g.bracket_vec(&g.unit(i), &g.unit(j))) == self.images[i].commutator(&self.images[j])
            })
        })
    }

    pub fn rank(&self) -> usize {
        let flat: Vec<Vec<Rational>> = self.images.iter().map(|m| m.entries().to_vec()).collect();
        Matrix::from_rows(self.form.rows().pow(2), &flat)
            .expect("flattened images")
            .rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    /// Every image is `β`-antisymmetric: `ρ(u)^T β + β ρ(u) = 0`.
    pub fn preserves_form(&self) -> bool {
        self.images
            .iter()
            .all(|m| (&(&m.transpose() * &self.form) + &(&self.form * m)).is_zero())
    }

    pub fn form_signature(&self) -> Inertia {
        self.form.signature().expect("Gram matrix is symmetric")
    }
}

/// Matrix of the linear map `f` on a space with `dim` coordinates.
fn linear_map(dim: usize, f: impl Fn(&[Rational]) -> Vec<Rational>) -> Matrix {
    let columns: Vec<Vec<Rational>> = (0..dim)
        .map(|j| {
            let mut e = vec![Rational::zero(); dim];
            e[j] = Rational::one();
            f(&e)
        })
        .collect();
    Matrix::from_columns(dim, &columns).expect("columns of length dim")
}

fn as_2x2(v: &[Rational]) -> Matrix {
    Matrix::from_rows(2, &[v[..2].to_vec(), v[2..].to_vec()]).expect("2x2")
}

/// `ρ(a, b) X = aX - Xb` on `V = M2(R)` with `β(X, Y) = (tr X tr Y - tr XY) / 2`.
pub fn embed_sl2sl2_to_so22() -> Embedding {
    let source = LieAlgebra::direct_sum(&sl2r(), &sl2r());
    let basis = sl2_basis();
    let left = basis.iter().map(|a| linear_map(4, |x| (a * &as_2x2(x)).entries().to_vec()));
    let right = basis
        .iter()
        .map(|b| linear_map(4, |x| (-&(&as_2x2(x) * b)).entries().to_vec()));
    let images = left.chain(right).collect();
    let form = Matrix::from_fn(4, 4, |i, j| {
        let mut x = vec![Rational::zero(); 4];
        let mut y = vec![Rational::zero(); 4];
        x[i] = Rational::one();
        y[j] = Rational::one();
        let (x, y) = (as_2x2(&x), as_2x2(&y));
        (x.trace() * y.trace() - (&x * &y).trace()) * rat(1, 2)
    });
    Embedding { source, images, form }
}

/// Quaternion product on coordinates `(1, i, j, k)`.
fn quaternion_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let (a1, b1, c1, d1) = (&x[0], &x[1], &x[2], &x[3]);
    let (a2, b2, c2, d2) = (&y[0], &y[1], &y[2], &y[3]);
    vec![
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// `ρ(a, b) x = ax - xb` on the quaternions, with `u1, u2, u3 -> i, j, k` and
/// `β(x, y) = Re(x ȳ)`.
pub fn embed_su2su2_to_so4() -> Embedding {
    let source = LieAlgebra::direct_sum(&su2(), &su2());
    let units: Vec<Vec<Rational>> = (1..4)
        .map(|k| {
            let mut v = vec![Rational::zero(); 4];
            v[k] = Rational::one();
            v
        })
        .collect();
    let left = units.iter().map(|a| linear_map(4, |x| quaternion_mul(a, x)));
    let right = units.iter().map(|b| {
        linear_map(4, |x| quaternion_mul(x, b).into_iter().map(|c| -c).collect())
    });
    let images = left.chain(right).collect();
    Embedding {
        source,
        images,
        form: Matrix::identity(4),
    }
}

/// For anisotropic orthogonal `x, y`: the dimension of `{x, y}^⊥` (the tangent
/// space of the fixed hypersurface at `x`) and the sign of `β(y, y)`.
pub fn quadric_reflection_data(form: &SignatureForm, x: &[Rational], y: &[Rational]) -> Result<(usize, i8)> {
    let n = form.dim();
    if x.len() != n || y.len() != n {
        return Err(CoreError::AlgebraMismatch {
            expected: n,
            found: x.len().max(y.len()),
        });
    }
    let bxx = form.beta(x, x);
    let byy = form.beta(y, y);
    if bxx.is_zero() || byy.is_zero() {
        return Err(CoreError::InvalidArgument("isotropic vector".into()));
    }
    if !form.beta(x, y).is_zero() {
        return Err(CoreError::InvalidArgument("vectors are not orthogonal".into()));
    }
    let j = form.matrix();
    let constraints = Matrix::from_rows(n, &[j.mul_vec(x), j.mul_vec(y)])?;
    let sign = if byy.is_positive() { 1 } else { -1 };
    Ok((constraints.kernel().dim(), sign))
}
