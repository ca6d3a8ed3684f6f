use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::{LinalgError, Polynomial, Rational, Result};

/// Interval endpoint for root counting; infinities are symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn rank(&self) -> u8 {
        match self {
            Bound::NegInf => 0,
            Bound::Finite(_) => 1,
            Bound::PosInf => 2,
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl From<Rational> for Bound {
    fn from(x: Rational) -> Self {
        Bound::Finite(x)
    }
}

/// Negated-remainder sequence `p, p', -rem(p, p'), ...`.
fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

/// Sign of `q` at the bound, as -1, 0 or 1.
fn sign_at(q: &Polynomial, at: &Bound) -> i8 {
    let Some(d) = q.degree() else {
        return 0;
    };
    let lc_sign = if q.leading_coeff().is_positive() { 1 } else { -1 };
    match at {
        Bound::PosInf => lc_sign,
        Bound::NegInf => {
            if d % 2 == 0 {
                lc_sign
            } else {
                -lc_sign
            }
        }
        Bound::Finite(x) => {
            let v = q.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

fn variations(seq: &[Polynomial], at: &Bound) -> usize {
    let signs: Vec<i8> = seq.iter().map(|q| sign_at(q, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a squarefree `p` in `(a, b]`.
pub fn sturm_count(p: &Polynomial, a: &Bound, b: &Bound) -> Result<usize> {
    if !p.is_squarefree()? {
        return Err(LinalgError::NotSquarefree);
    }
    if a >= b {
        return Err(LinalgError::EmptyInterval);
    }
    let seq = sturm_sequence(p);
    let va = variations(&seq, a);
    let vb = variations(&seq, b);
    Ok(va.saturating_sub(vb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn whole_line_examples() {
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
    }

    #[test]
    fn half_open_interval() {
        let f = p(&[0, -1, 0, 1]);
        assert_eq!(sturm_count(&f, &Bound::Finite(int(0)), &Bound::PosInf).unwrap(), 1);
        // Right endpoint is included, left is not.
        assert_eq!(sturm_count(&f, &Bound::NegInf, &Bound::Finite(int(0))).unwrap(), 2);
        assert_eq!(sturm_count(&f, &Bound::Finite(int(-1)), &Bound::Finite(int(1))).unwrap(), 2);
        assert_eq!(
            sturm_count(&f, &Bound::Finite(rat(-1, 2)), &Bound::Finite(rat(1, 2))).unwrap(),
            1
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            sturm_count(&p(&[0, 0, 1]), &Bound::NegInf, &Bound::PosInf),
            Err(LinalgError::NotSquarefree)
        );
        assert_eq!(
            sturm_count(&p(&[-1, 1]), &Bound::PosInf, &Bound::NegInf),
            Err(LinalgError::EmptyInterval)
        );
    }
}
