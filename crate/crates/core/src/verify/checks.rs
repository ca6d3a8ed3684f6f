//! Instance checks of the structural facts about dissecting triples.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use qlinalg::{primitive_integer_vector, Rational, Subspace};

use crate::catalog::{
    componentwise, sl2_involutions, sl2c_conjugation, sl2c_real, sl2r, su2, su2_involution_i11, swap_twist,
};
use crate::duality::{canonical_cartan_involution, cartan_dual, compact_dual};
use crate::ideals::{centroid, is_complex_simple, simple_ideals};
use crate::involution::{classify_element, fixed_algebra, is_irreducible_pair};
use crate::verify::report::format_vector;
use crate::{catalog, Automorphism, CommutingTriple, CoreError, Element, ElementType, LieAlgebra, Result, VerificationReport};

/// Primitive integer generator of `q_m` for a dissecting triple.
pub fn x0_vector(t: &CommutingTriple) -> Result<Vec<BigInt>> {
    let qm = t.q_m();
    if qm.dim() != 1 {
        return Err(CoreError::Precondition(format!("triple is not dissecting (dim q_m = {})", qm.dim())));
    }
    Ok(primitive_integer_vector(&qm.basis()[0]))
}

fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// `x0` and its spectral type.
pub fn x0_type(t: &CommutingTriple) -> Result<(Vec<BigInt>, ElementType)> {
    let x0 = x0_vector(t)?;
    let ty = classify_element(t.algebra(), &Element::new(to_rational(&x0)))?;
    Ok((x0, ty))
}

/// `g^{στ} = h_l ⊕ R x0`, `x0` central there with `h_l` an ideal, and `x0`
/// elliptic or hyperbolic.
pub fn check_lemma_x0(t: &CommutingTriple) -> Result<VerificationReport> {
    let g = t.algebra();
    let (x0, ty) = x0_type(t)?;
    let quad = t.quad_decompose();
    let mut r = VerificationReport::new("lemma_x0");
    r.note("x0", format_vector(&x0));
    r.note("x0_type", ty);
    let fixed = t.sigma().compose(t.tau()).fixed_space()?;
    let expected = quad.h_l.sum_span(&quad.q_m)?;
    r.require(fixed == expected, "fixed space of sigma tau differs from h_l + q_m");
    let x = to_rational(&x0);
    let central = quad
        .h_l
        .basis()
        .iter()
        .all(|h| g.bracket_vec(h, &x).iter().all(Zero::is_zero));
    r.require(central, "x0 does not commute with h_l");
    r.require(
        quad.h_l.contains_subspace(&g.bracket_span(&fixed, &quad.h_l)?),
        "h_l is not an ideal of the fixed algebra of sigma tau",
    );
    r.require(
        matches!(ty, ElementType::Elliptic | ElementType::Hyperbolic),
        format!("x0 is {ty}"),
    );
    Ok(r)
}

/// `z_g(q_m) = h_l ⊕ q_m` and `q_m` maximal abelian in `q`.
pub fn check_ha_cent(t: &CommutingTriple) -> Result<VerificationReport> {
    let g = t.algebra();
    let (dissecting, d) = t.is_dissecting();
    if !dissecting {
        return Err(CoreError::Precondition(format!("triple is not dissecting (dim q_m = {d})")));
    }
    if !g.is_semisimple() {
        return Err(CoreError::Precondition("algebra is not semisimple".into()));
    }
    if !is_irreducible_pair(g, t.tau())? {
        return Err(CoreError::Precondition("(g, tau) is not irreducible".into()));
    }
    let quad = t.quad_decompose();
    let (_, q) = t.tau().eigensplit()?;
    let z = g.centralizer(&quad.q_m)?;
    let mut r = VerificationReport::new("ha_cent");
    r.note("centralizer_dim", z.dim());
    r.require(z == quad.h_l.sum_span(&quad.q_m)?, "centralizer of q_m differs from h_l + q_m");
    r.require(z.intersect(&q)? == quad.q_m, "q_m is not maximal abelian in q");
    Ok(r)
}

/// Rational square root of a nonnegative rational, if it exists.
fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// For hyperbolic `x0`: the minimal polynomial of `ad x0` is `t(t^2 - λ^2)`
/// with a single rational `λ > 0`.
pub fn check_rank1_spectrum(t: &CommutingTriple) -> Result<VerificationReport> {
    let (x0, ty) = x0_type(t)?;
    if ty != ElementType::Hyperbolic {
        return Err(CoreError::Precondition(format!("x0 is {ty}, not hyperbolic")));
    }
    let mu = t.algebra().ad_vec(&to_rational(&x0)).min_poly()?;
    let mut r = VerificationReport::new("rank1_spectrum");
    r.note("min_poly", &mu);
    let c = -mu.coeff(1);
    let shape = mu.degree() == Some(3) && mu.coeff(0).is_zero() && mu.coeff(2).is_zero() && c.is_positive();
    match rational_sqrt(&c).filter(|_| shape) {
        Some(lambda) => r.note("lambda", lambda),
        None => r.fail("minimal polynomial is not t^3 - lambda^2 t with rational lambda"),
    }
    Ok(r)
}

/// Dissecting status is preserved by Cartan and compact duality, the compact
/// dual is compact, Cartan duality is an involution, and `x0` swaps type.
pub fn check_duality_transport(t: &CommutingTriple) -> Result<VerificationReport> {
    let g = t.algebra();
    let theta = canonical_cartan_involution(g)
        .filter(|th| th.commutes_with(t.tau()) && th.commutes_with(t.sigma()))
        .ok_or_else(|| CoreError::Precondition("no commuting Cartan involution available".into()))?;
    let mut r = VerificationReport::new("duality_transport");
    let (base, d) = t.is_dissecting();
    r.note("dim_qm", d);

    let cd = cartan_dual(g, t.tau(), std::slice::from_ref(t.sigma()))?;
    let tc = CommutingTriple::new(
        Arc::new(cd.algebra.clone()),
        cd.involutions[0].clone(),
        cd.involutions[1].clone(),
    )?;
    let (dual_d, dual_dim) = tc.is_dissecting();
    r.note("cartan_dual_dim_qm", dual_dim);
    r.note("cartan_dual_killing", cd.algebra.killing_signature());
    r.require(dual_d == base, "Cartan dual changes dissecting status");

    let twice = cartan_dual(&cd.algebra, &cd.involutions[0], &cd.involutions[1..])?;
    r.require(
        twice.algebra.same_structure(&cd.adapted),
        "Cartan duality applied twice does not restore the structure constants",
    );

    if base {
        let (x0, ty) = x0_type(t)?;
        let y = cd.basis.coordinates(&to_rational(&x0));
        let dual_ty = classify_element(&cd.algebra, &Element::new(y))?;
        r.note("x0_type", ty);
        r.note("dual_x0_type", dual_ty);
        r.require(dual_ty == ty.dual(), format!("x0 is {ty} but its dual is {dual_ty}"));
    }

    let rd = compact_dual(g, &theta, t.tau(), t.sigma())?;
    let sig = rd.algebra.killing_signature();
    r.note("compact_dual_killing", sig);
    r.require(sig.neg == g.dim(), "compact dual is not compact");
    let tr = CommutingTriple::new(
        Arc::new(rd.algebra.clone()),
        rd.involutions[1].clone(),
        rd.involutions[2].clone(),
    )?;
    let (compact_d, compact_dim) = tr.is_dissecting();
    r.note("compact_dual_dim_qm", compact_dim);
    r.require(compact_d == base, "compact dual changes dissecting status");
    Ok(r)
}

/// The flip-family triples `(g1 ⊕ g1, flip, swap_twist σ1)` with the
/// expected type of `x0`, and the componentwise variants.
pub fn flip_family() -> Vec<FlipCase> {
    let sl2 = sl2_involutions();
    vec![
        FlipCase::new("su2/I11", su2(), su2_involution_i11(), ElementType::Elliptic),
        FlipCase::new("sl2R/neg_transpose", sl2r(), sl2.neg_transpose, ElementType::Elliptic),
        FlipCase::new("sl2R/conj_I11", sl2r(), sl2.conj_i11, ElementType::Hyperbolic),
    ]
}

pub struct FlipCase {
    pub name: &'static str,
    pub factor: LieAlgebra,
    pub sigma1: Automorphism,
    pub expected: ElementType,
}

impl FlipCase {
    fn new(name: &'static str, factor: LieAlgebra, sigma1: Automorphism, expected: ElementType) -> Self {
        Self {
            name,
            factor,
            sigma1,
            expected,
        }
    }

    pub fn algebra(&self) -> LieAlgebra {
        LieAlgebra::direct_sum(&self.factor, &self.factor)
    }

    /// `(g1 ⊕ g1, flip, swap_twist σ1)`.
    pub fn twisted(&self) -> Result<CommutingTriple> {
        let gg = self.algebra();
        let tau = catalog::flip(&gg)?;
        let sigma = swap_twist(&gg, &self.sigma1)?;
        CommutingTriple::new(Arc::new(gg), tau, sigma)
    }

    /// `(g1 ⊕ g1, flip, σ1 × σ1)`.
    pub fn componentwise(&self) -> Result<CommutingTriple> {
        let gg = self.algebra();
        let tau = catalog::flip(&gg)?;
        let sigma = componentwise(&gg, &self.sigma1)?;
        CommutingTriple::new(Arc::new(gg), tau, sigma)
    }
}

pub fn check_flip_family() -> VerificationReport {
    let mut r = VerificationReport::new("flip_family");
    for case in flip_family() {
        if let Err(e) = flip_case(&case, &mut r) {
            r.fail(format!("{}: {e}", case.name));
        }
    }
    r
}

fn flip_case(case: &FlipCase, r: &mut VerificationReport) -> Result<()> {
    let name = case.name;
    let fixed_dim = case.sigma1.fixed_space()?.dim();
    let minus_dim = case.factor.dim() - fixed_dim;

    let t = case.twisted()?;
    let (d, dim) = t.is_dissecting();
    r.note(&format!("{name}.dim_qm"), dim);
    r.require(d && dim == fixed_dim && fixed_dim == 1, format!("{name}: twisted triple has dim q_m = {dim}"));
    r.require(
        is_irreducible_pair(t.algebra(), t.tau())?,
        format!("{name}: flip pair is not irreducible"),
    );
    let (_, ty) = x0_type(&t)?;
    r.note(&format!("{name}.x0_type"), ty);
    r.require(ty == case.expected, format!("{name}: x0 is {ty}, expected {}", case.expected));

    let c = case.componentwise()?;
    let (cd, cdim) = c.is_dissecting();
    r.note(&format!("{name}.componentwise_dim_qm"), cdim);
    r.require(
        !cd && cdim == minus_dim && minus_dim == 2,
        format!("{name}: componentwise triple has dim q_m = {cdim}"),
    );
    Ok(())
}

/// `(sl2(C), conjugation fixing sl2(R), Cartan involution)`.
pub fn complex_case_triple() -> Result<CommutingTriple> {
    let g = sl2c_real();
    let tau = sl2c_conjugation(&g)?;
    let sigma = canonical_cartan_involution(&g)
        .ok_or_else(|| CoreError::Precondition("sl2(C) has no canonical Cartan involution".into()))?;
    CommutingTriple::new(Arc::new(g), tau, sigma)
}

pub fn check_complex_case() -> VerificationReport {
    let mut r = VerificationReport::new("complex_case");
    if let Err(e) = complex_case(&mut r) {
        r.fail(format!("error: {e}"));
    }
    r
}

fn complex_case(r: &mut VerificationReport) -> Result<()> {
    let t = complex_case_triple()?;
    let g = t.algebra();
    let c = centroid(g);
    r.note("centroid_dim", c.dim());
    r.require(c.dim() == 2, "centroid of sl2(C) is not two-dimensional");
    r.require(is_complex_simple(g)?, "sl2(C) is not complex simple");
    r.require(is_irreducible_pair(g, t.tau())?, "(sl2(C), tau) is not irreducible");
    let (d, dim) = t.is_dissecting();
    r.note("dim_qm", dim);
    r.require(d, "complex case is not dissecting");

    let theta = canonical_cartan_involution(g).expect("constructed above");
    let rd = compact_dual(g, &theta, t.tau(), t.sigma())?;
    let sig = rd.algebra.killing_signature();
    r.note("compact_dual_killing", sig);
    r.require(sig.neg == g.dim(), "compact dual is not compact");
    let ideals = simple_ideals(&rd.algebra)?;
    let dims: Vec<usize> = ideals.iter().map(Subspace::dim).collect();
    r.note("compact_dual_ideal_dims", format_vector(&dims));
    r.require(dims == [3, 3], "compact dual does not split into two 3-dimensional ideals");
    for ideal in &ideals {
        let s = rd.algebra.subalgebra(ideal)?.killing_signature();
        r.require(s.neg == 3, "a simple ideal of the compact dual is not compact");
    }
    let fixed = fixed_algebra(g, t.tau())?;
    r.note("fixed_killing", fixed.killing_signature());
    Ok(())
}

/// Killing signature of `so(p,q)` against `(pq, p(p-1)/2 + q(q-1)/2, 0)`.
pub fn check_so_killing(p: usize, q: usize) -> VerificationReport {
    let mut r = VerificationReport::new("so_killing_signature").param("algebra", format!("so({p},{q})"));
    match catalog::so(p, q) {
        Ok(g) => {
            let s = g.killing_signature();
            let expected = qlinalg::Inertia::new(p * q, p * p.saturating_sub(1) / 2 + q * q.saturating_sub(1) / 2, 0);
            r.note("signature", s);
            // so(1,1) and so(2) are abelian, where the form vanishes.
            let expected = if p + q == 2 { qlinalg::Inertia::new(0, 0, 1) } else { expected };
            r.note("expected", expected);
            r.require(s == expected, "Killing signature differs from the formula");
        }
        Err(e) => r.fail(e),
    }
    r
}

/// Every catalog algebra passes antisymmetry, Jacobi and realization checks.
pub fn check_catalog(max_n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("catalog_validity").param("max_n", max_n);
    let mut algebras: Vec<(String, Result<LieAlgebra>)> = vec![
        ("sl2R".into(), Ok(sl2r())),
        ("su2".into(), Ok(su2())),
        ("sl2C".into(), Ok(sl2c_real())),
    ];
    for n in 2..=max_n {
        for q in 0..=n {
            algebras.push((format!("so({},{q})", n - q), catalog::so(n - q, q)));
        }
    }
    let mut count = 0;
    for (name, g) in algebras {
        match g.and_then(|g| g.validate().map(|_| g)) {
            Ok(_) => count += 1,
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    r.note("algebras_checked", count);
    r
}

/// Both `ρ` maps are injective homomorphisms into `β`-antisymmetric matrices
/// with the expected `β` signatures.
pub fn check_embeddings() -> VerificationReport {
    let mut r = VerificationReport::new("embeddings");
    for (name, e, expected) in [
        ("sl2+sl2 -> so(2,2)", catalog::embed_sl2sl2_to_so22(), qlinalg::Inertia::new(2, 2, 0)),
        ("su2+su2 -> so(4)", catalog::embed_su2su2_to_so4(), qlinalg::Inertia::new(4, 0, 0)),
    ] {
        let sig = e.form_signature();
        r.note(&format!("{name}.rank"), e.rank());
        r.note(&format!("{name}.beta_signature"), sig);
        r.require(e.is_homomorphism(), format!("{name}: not a homomorphism"));
        r.require(e.is_injective(), format!("{name}: not injective"));
        r.require(e.preserves_form(), format!("{name}: image not beta-antisymmetric"));
        r.require(sig == expected, format!("{name}: beta signature {sig}"));
    }
    r
}
