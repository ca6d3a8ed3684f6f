use std::sync::Arc;

use dissect_core::catalog::{
    componentwise, flip, reflection_involution, signature_involution, sl2_involutions, sl2c_real, sl2r, so, su2,
    su2_involution_i11, swap_twist, SignVector,
};
use dissect_core::involution::{classify_element, fixed_algebra, is_irreducible_pair};
use dissect_core::{Automorphism, CommutingTriple, Element, ElementType, LieAlgebra};
use proptest::prelude::*;
use qlinalg::{int, Inertia, Matrix, Rational};

fn signs(v: &[i8]) -> SignVector {
    SignVector::new(v.to_vec()).unwrap()
}

fn triple(g: &Arc<LieAlgebra>, t: &SignVector, s: &SignVector) -> CommutingTriple {
    let tau = signature_involution(g, t).unwrap();
    let sigma = signature_involution(g, s).unwrap();
    CommutingTriple::new(Arc::clone(g), tau, sigma).unwrap()
}

/// `B_ij` has eigenvalue `γ_i γ_j` under `Ad(diag γ)`; count basis vectors by
/// their pair of eigenvalues.
fn quad_dims_oracle(t: &[i8], s: &[i8]) -> [usize; 4] {
    let mut dims = [0; 4];
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let a = t[i] * t[j] < 0;
            let b = s[i] * s[j] < 0;
            dims[2 * a as usize + b as usize] += 1;
        }
    }
    dims
}

fn element(v: &[i64]) -> Element {
    Element::new(v.iter().map(|&x| int(x)).collect())
}

#[test]
fn certification() {
    let g = sl2r();
    assert!(Automorphism::certify(&g, Matrix::identity(3)).is_ok());
    assert!(Automorphism::certify(&g, -&Matrix::identity(3)).is_err());
    let h = so(2, 3).unwrap();
    assert!(reflection_involution(&h, 1).is_ok());
}

#[test]
fn eigensplits() {
    let g = sl2r();
    let (plus, minus) = Automorphism::identity(&g).eigensplit().unwrap();
    assert_eq!((plus.dim(), minus.dim()), (3, 0));
    for n in 3..=5 {
        let g = so(n, 0).unwrap();
        let (_, minus) = reflection_involution(&g, 1).unwrap().eigensplit().unwrap();
        assert_eq!(minus.dim(), n - 1);
    }
    let g = so(2, 3).unwrap();
    let (_, minus) = reflection_involution(&g, 5).unwrap().eigensplit().unwrap();
    assert_eq!(minus.dim(), 4);
    let gg = LieAlgebra::direct_sum(&sl2r(), &sl2r());
    let (plus, _) = flip(&gg).unwrap().eigensplit().unwrap();
    assert_eq!(plus.dim(), 3);
    let diag: Vec<Rational> = [1, 0, 0, 1, 0, 0].iter().map(|&x| int(x)).collect();
    assert!(plus.contains(&diag));
}

#[test]
fn signature_involution_identities() {
    let g = so(4, 0).unwrap();
    let a = signature_involution(&g, &signs(&[-1, 1, 1, 1])).unwrap();
    assert_eq!(a, reflection_involution(&g, 1).unwrap());
    let b = signature_involution(&g, &signs(&[1, -1, -1, -1])).unwrap();
    assert_eq!(a, b);
    let c = signature_involution(&g, &signs(&[-1, -1, 1, 1])).unwrap();
    assert_eq!(c.fixed_space().unwrap().dim(), 2);
    assert_eq!(a.fixed_space().unwrap().dim(), 3);
    for k in 2..=4 {
        assert!(a.commutes_with(&reflection_involution(&g, k).unwrap()));
    }
}

#[test]
fn quad_decomposition_examples() {
    let g = Arc::new(so(2, 3).unwrap());
    let t = triple(&g, &SignVector::reflection(5, 1).unwrap(), &SignVector::reflection(5, 5).unwrap());
    let quad = t.quad_decompose();
    assert_eq!(quad.dims(), [3, 3, 3, 1]);
    assert!(quad.bracket_laws_hold(&g).unwrap());
    assert_eq!(t.is_dissecting(), (true, 1));

    let g = Arc::new(so(4, 0).unwrap());
    let t = triple(&g, &SignVector::reflection(4, 1).unwrap(), &signs(&[-1, -1, 1, 1]));
    assert_eq!(t.is_dissecting(), (false, 2));

    let id = Automorphism::identity(&g);
    let t = CommutingTriple::new(Arc::clone(&g), id.clone(), id).unwrap();
    assert_eq!(t.quad_decompose().dims(), [6, 0, 0, 0]);

    let g = Arc::new(so(3, 0).unwrap());
    let r1 = reflection_involution(&g, 1).unwrap();
    let t = CommutingTriple::new(Arc::clone(&g), r1.clone(), r1).unwrap();
    assert_eq!(t.is_dissecting(), (false, 2));
}

#[test]
fn non_commuting_pair_is_rejected() {
    let g = Arc::new(so(3, 0).unwrap());
    let swap12 = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let a = dissect_core::catalog::conjugation(&g, &swap12).unwrap();
    assert!(a.is_involution());
    let r1 = reflection_involution(&g, 1).unwrap();
    assert!(!a.commutes_with(&r1));
    assert!(CommutingTriple::new(Arc::clone(&g), a, r1).is_err());
    let not_involutive = Automorphism::certify(&sl2r(), Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]).scale(&int(1)));
    assert!(not_involutive.is_err());
}

#[test]
fn flip_family_dimensions() {
    let gg = Arc::new(LieAlgebra::direct_sum(&su2(), &su2()));
    let s1 = su2_involution_i11();
    let t = CommutingTriple::new(Arc::clone(&gg), flip(&gg).unwrap(), swap_twist(&gg, &s1).unwrap()).unwrap();
    assert_eq!(t.is_dissecting(), (true, 1));
    let c = CommutingTriple::new(Arc::clone(&gg), flip(&gg).unwrap(), componentwise(&gg, &s1).unwrap()).unwrap();
    assert_eq!(c.is_dissecting(), (false, 2));
    let id = Automorphism::identity(&su2());
    assert_eq!(swap_twist(&gg, &id).unwrap(), flip(&gg).unwrap());
}

#[test]
fn element_types() {
    let g = sl2r();
    assert_eq!(classify_element(&g, &element(&[0, 0, 0])).unwrap(), ElementType::Zero);
    assert_eq!(classify_element(&g, &element(&[0, 1, 0])).unwrap(), ElementType::Nilpotent);
    assert_eq!(classify_element(&g, &element(&[1, 0, 0])).unwrap(), ElementType::Hyperbolic);
    assert_eq!(classify_element(&g, &element(&[0, 1, -1])).unwrap(), ElementType::Elliptic);
    // h + e is conjugate to h.
    assert_eq!(classify_element(&g, &element(&[1, 1, 0])).unwrap(), ElementType::Hyperbolic);

    let boost = so(1, 3).unwrap();
    let x = boost.basis_element(2); // B1_4
    assert_eq!(boost.labels()[2], "B1_4");
    assert_eq!(boost.ad(&x).unwrap().min_poly().unwrap(), qlinalg::Polynomial::from_i64(&[0, -1, 0, 1]));
    assert_eq!(classify_element(&boost, &x).unwrap(), ElementType::Hyperbolic);

    let rot = so(3, 0).unwrap();
    assert_eq!(classify_element(&rot, &rot.basis_element(0)).unwrap(), ElementType::Elliptic);

    // Two commuting rotations in so(2,2) form a compact torus element.
    let g = so(2, 2).unwrap();
    assert_eq!(g.labels()[0], "B1_2");
    assert_eq!(g.labels()[5], "B3_4");
    let mut v = vec![0i64; 6];
    v[0] = 1;
    v[5] = 1;
    assert_eq!(classify_element(&g, &element(&v)).unwrap(), ElementType::Elliptic);
}

#[test]
fn mixed_element_in_a_direct_sum() {
    // (h, e - f): ad spectrum {0, ±2} on one side and {0, ±2i} on the other.
    let gg = LieAlgebra::direct_sum(&sl2r(), &sl2r());
    let x = element(&[1, 0, 0, 0, 1, -1]);
    let mu = gg.ad(&x).unwrap().min_poly().unwrap();
    assert_eq!(mu, qlinalg::Polynomial::from_i64(&[0, -16, 0, 0, 0, 1]));
    assert_eq!(classify_element(&gg, &x).unwrap(), ElementType::Mixed);
    // Nilpotent plus nonzero semisimple part.
    let y = element(&[1, 0, 0, 0, 1, 0]);
    assert_eq!(classify_element(&gg, &y).unwrap(), ElementType::Mixed);
}

#[test]
fn fixed_algebras() {
    for n in 3..=5 {
        let g = so(n, 0).unwrap();
        let h = fixed_algebra(&g, &reflection_involution(&g, 1).unwrap()).unwrap();
        assert_eq!(h.killing_signature(), so(n - 1, 0).unwrap().killing_signature());
    }
    let gg = LieAlgebra::direct_sum(&sl2r(), &sl2r());
    let d = fixed_algebra(&gg, &flip(&gg).unwrap()).unwrap();
    assert_eq!(d.dim(), 3);
    assert_eq!(d.killing_signature().dim(), 3);
    assert_eq!(d.killing_signature().null, 0);
    let i = sl2_involutions();
    let k = fixed_algebra(&sl2r(), &i.neg_transpose).unwrap();
    assert_eq!(k.dim(), 1);
    let gen = i.neg_transpose.fixed_space().unwrap();
    assert!(gen.contains(&[int(0), int(1), int(-1)]));
}

#[test]
fn irreducibility() {
    let g = sl2r();
    let i = sl2_involutions();
    assert!(is_irreducible_pair(&g, &i.neg_transpose).unwrap());
    assert!(is_irreducible_pair(&g, &i.conj_i11).unwrap());
    assert!(!is_irreducible_pair(&g, &Automorphism::identity(&g)).unwrap());
    let gg = LieAlgebra::direct_sum(&sl2r(), &sl2r());
    assert!(is_irreducible_pair(&gg, &flip(&gg).unwrap()).unwrap());
    assert!(!is_irreducible_pair(&gg, &componentwise(&gg, &i.conj_i11).unwrap()).unwrap());
    let c = sl2c_real();
    let tau = dissect_core::catalog::sl2c_conjugation(&c).unwrap();
    assert!(is_irreducible_pair(&c, &tau).unwrap());
}

#[test]
fn sl2_involution_generators() {
    let i = sl2_involutions();
    let g = sl2r();
    for (a, expected) in [(&i.neg_transpose, ElementType::Elliptic), (&i.conj_i11, ElementType::Hyperbolic)] {
        let fixed = a.fixed_space().unwrap();
        assert_eq!(fixed.dim(), 1);
        let x = Element::new(fixed.basis()[0].clone());
        assert_eq!(classify_element(&g, &x).unwrap(), expected);
    }
    let s = su2_involution_i11();
    let fixed = s.fixed_space().unwrap();
    assert_eq!(fixed.dim(), 1);
    assert_eq!(
        classify_element(&su2(), &Element::new(fixed.basis()[0].clone())).unwrap(),
        ElementType::Elliptic
    );
}

#[test]
fn element_type_names_and_duals() {
    assert_eq!(ElementType::Hyperbolic.to_string(), "hyperbolic");
    assert_eq!(ElementType::Elliptic.dual(), ElementType::Hyperbolic);
    assert_eq!(ElementType::Hyperbolic.dual(), ElementType::Elliptic);
    assert_eq!(ElementType::Nilpotent.dual(), ElementType::Nilpotent);
}

fn sign_vec(n: usize) -> impl Strategy<Value = Vec<i8>> {
    proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n)
        .prop_filter("nonconstant", |v| v.iter().any(|&s| s != v[0]))
}

fn signature_case() -> impl Strategy<Value = (usize, usize, Vec<i8>, Vec<i8>)> {
    (3usize..=5)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, q)| (Just(n - q), Just(q), sign_vec(n), sign_vec(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn quad_dims_match_sign_count((p, q, t, s) in signature_case()) {
        let g = Arc::new(so(p, q).unwrap());
        let tr = triple(&g, &signs(&t), &signs(&s));
        let quad = tr.quad_decompose();
        prop_assert_eq!(quad.dims(), quad_dims_oracle(&t, &s));
        prop_assert_eq!(quad.dims().iter().sum::<usize>(), g.dim());
        prop_assert!(quad.bracket_laws_hold(&g).unwrap());
        prop_assert_eq!(tr.is_dissecting().0, tr.swapped().is_dissecting().0);
    }

    #[test]
    fn involutions_are_certified_and_involutive((p, q, t, _s) in signature_case()) {
        let g = so(p, q).unwrap();
        let a = signature_involution(&g, &signs(&t)).unwrap();
        prop_assert!(a.is_involution());
        let (plus, minus) = a.eigensplit().unwrap();
        prop_assert_eq!(plus.dim() + minus.dim(), g.dim());
        // The fixed part is a subalgebra, the minus part is a module for it.
        prop_assert!(g.is_subalgebra(&plus).unwrap());
        prop_assert!(minus.contains_subspace(&g.bracket_span(&plus, &minus).unwrap()));
        prop_assert!(plus.contains_subspace(&g.bracket_span(&minus, &minus).unwrap()));
    }

    #[test]
    fn reflection_pair_generator_type(n in 3usize..=6, q_seed in 0usize..=6, i in 0usize..6, j in 0usize..6) {
        let q = q_seed % (n + 1);
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let p = n - q;
        let g = Arc::new(so(p, q).unwrap());
        let tr = triple(&g, &SignVector::reflection(n, i + 1).unwrap(), &SignVector::reflection(n, j + 1).unwrap());
        prop_assert_eq!(tr.is_dissecting(), (true, 1));
        let x = Element::new(tr.q_m().basis()[0].clone());
        let eps = |k: usize| if k < p { 1 } else { -1 };
        let expected = if eps(i) * eps(j) > 0 { ElementType::Elliptic } else { ElementType::Hyperbolic };
        prop_assert_eq!(classify_element(&g, &x).unwrap(), expected);
    }
}

#[test]
fn killing_of_fixed_algebra_of_reflection_in_so_2_3() {
    let g = so(2, 3).unwrap();
    let h = fixed_algebra(&g, &reflection_involution(&g, 5).unwrap()).unwrap();
    assert_eq!(h.killing_signature(), Inertia::new(4, 2, 0));
}
