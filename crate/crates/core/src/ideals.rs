//! Centroid and the decomposition of a semisimple algebra into simple ideals.

use num_traits::{Signed, Zero};
use qlinalg::{factor_rational, int, Matrix, Polynomial, Rational, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{CoreError, LieAlgebra, Result};

const GENERIC_SEED: u64 = 0x5eed_c3a7;
const GENERIC_ATTEMPTS: usize = 64;

/// Linear maps commuting with every `ad x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centroid {
    basis: Vec<Matrix>,
}

impl Centroid {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// The centroid as a subspace of `Q^(n*n)` (row-major flattening).
    pub fn as_subspace(&self, n: usize) -> Subspace {
        let flat: Vec<Vec<Rational>> = self.basis.iter().map(|m| m.entries().to_vec()).collect();
        Subspace::span(n * n, &flat).expect("flattened maps have length n*n")
    }
}

/// Indices of basis vectors that generate `g` as a Lie algebra, chosen greedily.
fn generating_set(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let mut gens: Vec<usize> = Vec::new();
    let mut generated = Subspace::zero(n);
    for i in 0..n {
        if generated.dim() == n {
            break;
        }
        if generated.contains(&g.unit(i)) {
            continue;
        }
        gens.push(i);
        // Smallest subspace containing the generators and stable under their ad.
        let mut s = Subspace::coordinate(n, &gens);
        loop {
            let mut vectors = s.basis();
            for &x in &gens {
                for v in s.basis() {
                    vectors.push(g.bracket_vec(&g.unit(x), &v));
                }
            }
            let next = Subspace::span(n, &vectors).expect("same ambient");
            if next.dim() == s.dim() {
                break;
            }
            s = next;
        }
        generated = s;
    }
    gens
}

/// Linear map `F -> F A - A F` on row-major flattened `n x n` matrices.
fn commutator_system(a: &Matrix) -> Matrix {
    let n = a.rows();
    let mut m = Matrix::zeros(n * n, n * n);
    for r in 0..n {
        for c in 0..n {
            let row = r * n + c;
            for b in 0..n {
                // (F A)[r][c] = sum_b F[r][b] A[b][c]
                if !a[(b, c)].is_zero() {
                    m[(row, r * n + b)] += &a[(b, c)];
                }
                // (A F)[r][c] = sum_b A[r][b] F[b][c]
                if !a[(r, b)].is_zero() {
                    m[(row, b * n + c)] -= &a[(r, b)];
                }
            }
        }
    }
    m
}

pub fn centroid(g: &LieAlgebra) -> Centroid {
    let n = g.dim();
    let gens = generating_set(g);
    let mut basis: Vec<Matrix> = match gens.first() {
        None => {
            // Abelian with no generators only when dim = 0.
            return Centroid { basis: Vec::new() };
        }
        Some(&first) => commutator_system(&g.ad_vec(&g.unit(first)))
            .kernel()
            .basis()
            .into_iter()
            .map(|v| Matrix::from_rows(n, &v.chunks(n).map(<[Rational]>::to_vec).collect::<Vec<_>>()).expect("n columns"))
            .collect(),
    };
    for &x in gens.iter().skip(1) {
        let a = g.ad_vec(&g.unit(x));
        let columns: Vec<Vec<Rational>> = basis
            .iter()
            .map(|f| (&(f * &a) - &(&a * f)).entries().to_vec())
            .collect();
        if columns.is_empty() {
            break;
        }
        let system = Matrix::from_columns(n * n, &columns).expect("columns have length n*n");
        basis = system
            .kernel()
            .basis()
            .iter()
            .map(|coef| {
                coef.iter()
                    .zip(&basis)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(Matrix::zeros(n, n), |acc, (c, f)| &acc + &f.scale(c))
            })
            .collect();
    }
    Centroid { basis }
}

/// A deterministic pseudo-random element of the centroid whose minimal
/// polynomial has degree equal to the centroid dimension.
pub fn generic_centroid_element(g: &LieAlgebra, c: &Centroid) -> Result<(Matrix, Polynomial)> {
    let n = g.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(GENERIC_SEED);
    for _ in 0..GENERIC_ATTEMPTS {
        let element = c
            .basis
            .iter()
            .fold(Matrix::zeros(n, n), |acc, f| &acc + &f.scale(&int(rng.gen_range(-7..=7))));
        let mu = element.min_poly()?;
        if mu.degree() == Some(c.dim()) {
            return Ok((element, mu));
        }
    }
    Err(CoreError::Unsupported(
        "no generic centroid element found; centroid is not a product of fields".into(),
    ))
}

fn is_negative_discriminant_quadratic(f: &Polynomial) -> bool {
    if f.degree() != Some(2) {
        return false;
    }
    let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
    (&b * &b - int(4) * a * c).is_negative()
}

/// Simple ideals of a semisimple algebra, ordered by their first pivot.
pub fn simple_ideals(g: &LieAlgebra) -> Result<Vec<Subspace>> {
    if !g.is_semisimple() {
        return Err(CoreError::NotSemisimple);
    }
    let n = g.dim();
    let c = centroid(g);
    if c.dim() <= 1 {
        return Ok(vec![Subspace::full(n)]);
    }
    let (element, mu) = generic_centroid_element(g, &c)?;
    let factors = factor_rational(&mu)?;
    let mut ideals = Vec::new();
    for (f, k) in factors.factors {
        if k != 1 {
            return Err(CoreError::NotSemisimple);
        }
        if f.degree() != Some(1) && !is_negative_discriminant_quadratic(&f) {
            return Err(CoreError::IrrationalSplit);
        }
        ideals.push(f.eval_matrix(&element).kernel());
    }
    ideals.sort_by_key(first_pivot);
    Ok(ideals)
}

fn first_pivot(s: &Subspace) -> usize {
    s.basis()
        .first()
        .and_then(|v| v.iter().position(|x| !x.is_zero()))
        .unwrap_or(usize::MAX)
}

/// Simple real algebra carrying a complex structure commuting with `ad g`.
pub fn is_complex_simple(g: &LieAlgebra) -> Result<bool> {
    if simple_ideals(g)?.len() != 1 {
        return Err(CoreError::NotSimple);
    }
    let c = centroid(g);
    if c.dim() != 2 {
        return Ok(false);
    }
    let n = g.dim();
    let identity = Matrix::identity(n);
    let non_scalar = c
        .basis
        .iter()
        .find(|f| Subspace::span(n * n, &[f.entries().to_vec(), identity.entries().to_vec()]).is_ok_and(|s| s.dim() == 2))
        .expect("two-dimensional centroid has a non-scalar element");
    let mu = non_scalar.min_poly()?;
    let irreducible = factor_rational(&mu)?.factors.len() == 1;
    Ok(irreducible && is_negative_discriminant_quadratic(&mu))
}
