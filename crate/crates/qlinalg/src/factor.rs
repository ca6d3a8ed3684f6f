//! Factorization of univariate polynomials over `Q`.
//!
//! Squarefree decomposition (Yun) followed by Zassenhaus on each primitive
//! integer part: factor modulo a small prime, Hensel-lift to a modulus above
//! a Mignotte-style coefficient bound, then recombine lifted factors by
//! subset search with trial division over `Z`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{LinalgError, Polynomial, Rational, Result};

/// `unit * prod factor^multiplicity`, factors monic and irreducible over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::constant(self.unit.clone()), |acc, (f, k)| {
                &acc * &f.pow(*k)
            })
    }

    pub fn distinct_factors(&self) -> impl Iterator<Item = &Polynomial> {
        self.factors.iter().map(|(f, _)| f)
    }
}

pub fn factor_rational(p: &Polynomial) -> Result<Factorization> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (part, k) in p.squarefree_decomposition()? {
        for f in zassenhaus(&to_primitive(&part)) {
            factors.push((from_integer(&f).monic(), k));
        }
    }
    factors.sort_by(|(a, ka), (b, kb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ka.cmp(kb))
    });
    Ok(Factorization {
        unit: p.leading_coeff(),
        factors,
    })
}

type ZPoly = Vec<BigInt>;

fn trim_z(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

/// Primitive integer polynomial with positive leading coefficient.
fn to_primitive(p: &Polynomial) -> ZPoly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive_part(ints)
}

fn primitive_part(f: ZPoly) -> ZPoly {
    let f = trim_z(f);
    let content = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return f;
    }
    let sign = if f.last().is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    f.into_iter().map(|c| c / &content * &sign).collect()
}

fn from_integer(f: &[BigInt]) -> Polynomial {
    Polynomial::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Exact quotient `f / g` over `Z`, if `g` divides `f`.
fn exact_div(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let (q, r) = from_integer(f).div_rem(&from_integer(g));
    if !r.is_zero() || !q.coeffs().iter().all(|c| c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible factors over `Z` of a squarefree primitive polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let f = trim_z(f.to_vec());
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(zassenhaus(&f[1..]));
        return out;
    }
    let lc = f[n].clone();

    // Among a few admissible primes, keep the one with the fewest modular factors.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = FpPoly::from_z(&f, p);
        let fp = fp.monic();
        if fp.gcd(&fp.derivative()).degree() != Some(0) {
            continue;
        }
        let factors = fp.factor_squarefree_monic();
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == 3 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps the polynomial squarefree");
    if modular.len() == 1 {
        return vec![f];
    }

    // Coefficients of any factor are bounded by |lc| 2^n ||f||_2.
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    let bound = lc.abs() * (BigInt::one() << n) * norm;
    let limit = bound * 2 + 1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= limit {
        modulus *= &pb;
        k += 1;
    }

    let lifted = multifactor_lift(&f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn sym_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim_z(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), size) {
            let lc = f.last().expect("nonzero").clone();
            let mut g = vec![lc];
            for &i in &subset {
                g = zmod(&zmul(&g, &lifted[i]), modulus);
            }
            let g: ZPoly = g.iter().map(|c| sym_mod(c, modulus)).collect();
            let g = primitive_part(g);
            if let Some(q) = exact_div(&f, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                f = primitive_part(q);
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Lifts `f = lc * prod g_i (mod p)` to the same shape modulo `p^k`, with
/// monic lifted factors.
fn multifactor_lift(f: &[BigInt], modular: &[FpPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let m = BigInt::from(p).pow(k);
    let mut target = zmod(f, &m);
    let mut out = Vec::new();
    for i in 0..modular.len() - 1 {
        let g0 = modular[i].clone();
        let rest = modular[i + 1..]
            .iter()
            .fold(FpPoly::constant(1, p), |acc, g| acc.mul(g));
        let lc_mod_p = (target.last().expect("nonzero") % BigInt::from(p))
            .to_u64()
            .expect("reduced residue");
        let h0 = rest.scale(lc_mod_p);
        let (g, h) = hensel_two(&target, &g0, &h0, p, k);
        out.push(g);
        target = h;
    }
    let lc = target.last().expect("nonzero").clone();
    let inv = mod_inverse(&lc, &m);
    out.push(zmod(&target.iter().map(|c| c * &inv).collect::<ZPoly>(), &m));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Linear Hensel lifting of `f ≡ g0 h0 (mod p)` to modulus `p^k`.
/// `g0` is monic; the lifted `h` keeps the leading coefficient of `f`.
fn hensel_two(f: &[BigInt], g0: &FpPoly, h0: &FpPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (_, _, t) = g0.ext_gcd(h0);
    let mut g = g0.to_z();
    let mut h = h0.to_z();
    // Fix the leading coefficient of h to that of f exactly.
    let last = h.len() - 1;
    h[last] = f.last().expect("nonzero").clone();
    let pb = BigInt::from(p);
    let mut q = pb.clone();
    for _ in 1..k {
        let gh = zmul(&g, &h);
        let len = f.len().max(gh.len());
        let e: ZPoly = (0..len)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                a - b
            })
            .collect();
        let e: Vec<BigInt> = e
            .iter()
            .map(|c| {
                debug_assert!((c % &q).is_zero());
                c / &q
            })
            .collect();
        let ep = FpPoly::from_z(&e, p);
        let (_, sigma) = t.mul(&ep).div_rem(g0);
        let (tau, rem) = ep.sub(&sigma.mul(h0)).div_rem(g0);
        debug_assert!(rem.is_zero());
        g = add_scaled(&g, &sigma.to_z(), &q);
        h = add_scaled(&h, &tau.to_z(), &q);
        q *= &pb;
    }
    (zmod(&g, &q), zmod(&h, &q))
}

fn add_scaled(a: &[BigInt], b: &[BigInt], q: &BigInt) -> ZPoly {
    let len = a.len().max(b.len());
    trim_z(
        (0..len)
            .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default() * q)
            .collect(),
    )
}

/// Dense polynomial over `F_p`, ascending coefficients, `p < 2^32`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct FpPoly {
    c: Vec<u64>,
    p: u64,
}

impl FpPoly {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { c, p }
    }

    fn constant(x: u64, p: u64) -> Self {
        Self::new(vec![x % p], p)
    }

    fn from_z(f: &[BigInt], p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(
            f.iter()
                .map(|x| x.mod_floor(&pb).to_u64().expect("residue fits"))
                .collect(),
            p,
        )
    }

    fn to_z(&self) -> ZPoly {
        self.c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    fn scale(&self, s: u64) -> Self {
        Self::new(self.c.iter().map(|&x| x * (s % self.p) % self.p).collect(), self.p)
    }

    fn monic(&self) -> Self {
        match self.c.last() {
            Some(&lc) => self.scale(self.inv(lc)),
            None => self.clone(),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            (0..n)
                .map(|i| (self.c.get(i).unwrap_or(&0) + self.p - o.c.get(i).unwrap_or(&0)) % self.p)
                .collect(),
            self.p,
        )
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(Vec::new(), self.p);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Self::new(out, self.p)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = self.inv(*d.c.last().expect("nonzero"));
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::new(Vec::new(), self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd] * inv % self.p;
            if c == 0 {
                continue;
            }
            for (j, &x) in d.c.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - c * x % self.p) % self.p;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q, self.p), Self::new(r, self.p))
    }

    fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::constant(1, p), Self::new(Vec::new(), p));
        let (mut t0, mut t1) = (Self::new(Vec::new(), p), Self::constant(1, p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.c.last().expect("nonzero gcd"));
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &x)| (k as u64 % self.p) * x % self.p)
                .collect(),
            self.p,
        )
    }

    fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::constant(1, self.p);
        let base = self.div_rem(m).1;
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).div_rem(m).1;
            if e.bit(i) {
                result = result.mul(&base).div_rem(m).1;
            }
        }
        result
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    fn factor_squarefree_monic(&self) -> Vec<FpPoly> {
        let p = self.p;
        let x = Self::new(vec![0, 1], p);
        let pe = BigUint::from(p);
        let mut f = self.clone();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 1;
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        while f.degree().unwrap_or(0) >= 2 * d {
            h = h.pow_mod(&pe, &f);
            let g = h.sub(&x).gcd(&f);
            if g.degree() != Some(0) {
                out.extend(g.equal_degree_split(d, &mut rng));
                f = f.div_rem(&g).0;
                h = h.div_rem(&f).1;
            }
            d += 1;
        }
        if f.degree().unwrap_or(0) > 0 {
            out.push(f.monic());
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
    fn equal_degree_split(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let n = self.degree().expect("nonzero");
        if n == d {
            return vec![self.monic()];
        }
        let p = self.p;
        let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a = Self::new((0..n).map(|_| rng.gen_range(0..p)).collect(), p);
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = a.pow_mod(&exp, self).sub(&Self::constant(1, p));
            let c = b.gcd(self);
            let dc = c.degree().unwrap_or(0);
            if dc > 0 && dc < n {
                let mut out = c.equal_degree_split(d, rng);
                out.extend(self.div_rem(&c).0.equal_degree_split(d, rng));
                return out;
            }
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}
