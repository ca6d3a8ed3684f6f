use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::{int, LinalgError, Matrix, Rational, Result};

/// Univariate polynomial over `Q`, coefficients in ascending degree order.
///
/// Canonical form has no trailing zero coefficients; the zero polynomial has
/// an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self { coeffs }
    }

    /// `t - root`.
    pub fn linear(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.leading_coeff().recip();
        self.scale(&lc)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at a square matrix by Horner's scheme.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff `gcd(p, p')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(LinalgError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).is_constant())
    }

    /// Product of the distinct monic irreducible factors, `p / gcd(p, p')`
    /// made monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(LinalgError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// `f_i` with `p = lc(p) * prod f_i^i`. Only nonconstant factors are
    /// returned.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(LinalgError::ZeroPolynomial);
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut a = f.div_rem(&g).0;
        let mut b = df.div_rem(&g).0;
        let mut out = Vec::new();
        let mut k = 1;
        loop {
            let c = &b - &a.derivative();
            if c.is_zero() {
                if !a.is_constant() {
                    out.push((a.monic(), k));
                }
                break;
            }
            let d = a.gcd(&c);
            if !d.is_constant() {
                out.push((d.clone(), k));
            }
            a = a.div_rem(&d).0;
            b = c.div_rem(&d).0;
            k += 1;
        }
        Ok(out)
    }

    /// Polynomial whose roots are the squares of the roots of `self`:
    /// the resultant `Res_t(p(t), s - t^2)` as a polynomial in `s`.
    ///
    /// Writing `p(t) = E(t^2) + t O(t^2)`, the resultant equals
    /// `(-1)^n (E(s)^2 - s O(s)^2)` with `n = deg p`; the degree is preserved.
    pub fn root_square_poly(&self) -> Self {
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        let even = Self::new(self.coeffs.iter().step_by(2).cloned().collect());
        let odd = Self::new(self.coeffs.iter().skip(1).step_by(2).cloned().collect());
        let r = &(&even * &even) - &(&Self::monomial(1) * &(&odd * &odd));
        if n % 2 == 1 {
            -&r
        } else {
            r
        }
    }

    /// True iff `t` divides the polynomial.
    pub fn has_zero_root(&self) -> bool {
        !self.is_zero() && self.coeffs[0].is_zero()
    }

    /// Strips all factors of `t`, returning the quotient and the power removed.
    pub fn strip_zero_roots(&self) -> (Self, usize) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (Self::new(self.coeffs[k..].to_vec()), k)
    }

    /// Polynomial equal to `t^k` for some `k >= 1` up to a nonzero constant.
    pub fn is_monomial_power(&self) -> bool {
        match self.degree() {
            Some(d) if d >= 1 => self.coeffs[..d].iter().all(Zero::is_zero),
            _ => false,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn squarefree_examples() {
        assert!(p(&[-1, 0, 1]).is_squarefree().unwrap());
        assert!(!p(&[0, 0, 1]).is_squarefree().unwrap());
        assert_eq!(Polynomial::zero().is_squarefree(), Err(LinalgError::ZeroPolynomial));
        // t(t - 1)(t + 1) and t(t^2 + 1)
        assert!(p(&[0, -1, 0, 1]).is_squarefree().unwrap());
        assert!(p(&[0, 1, 0, 1]).is_squarefree().unwrap());
    }

    #[test]
    fn root_square_examples() {
        assert_eq!(p(&[-2, 0, 1]).root_square_poly(), p(&[4, -4, 1]));
        assert_eq!(p(&[1, 0, 1]).root_square_poly(), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 1]).root_square_poly(), p(&[0, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // (t - 1)^2 (t + 2)^3 t
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1]).pow(3)) * &p(&[0, 1]);
        let dec = f.scale(&rat(3, 2)).squarefree_decomposition().unwrap();
        assert_eq!(
            dec,
            vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 2), (p(&[2, 1]), 3)]
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[2, 2])), p(&[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "t^3 - t");
        assert_eq!(p(&[4, 0, 1]).to_string(), "t^2 + 4");
        assert_eq!(Polynomial::new(vec![rat(-1, 2)]).to_string(), "-1/2");
    }
}
