use dissect_core::catalog::{sl2c_real, sl2r, so, su2};
use dissect_core::ideals::{centroid, is_complex_simple, simple_ideals};
use dissect_core::{Element, LieAlgebra};
use proptest::prelude::*;
use qlinalg::{int, Inertia, Matrix, Polynomial, Rational, Subspace};

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::default(); n];
    v[i] = int(1);
    v
}

fn e(g: &LieAlgebra, i: usize) -> Element {
    g.basis_element(i)
}

/// `κ(X, Y) = (n - 2) tr(XY)` on `so(p,q)` in its defining representation.
fn so_killing_oracle(p: usize, q: usize) -> Matrix {
    let g = so(p, q).unwrap();
    let mats = g.realization().unwrap().matrices().to_vec();
    let c = int((p + q) as i64 - 2);
    Matrix::from_fn(g.dim(), g.dim(), |i, j| &c * (&mats[i] * &mats[j]).trace())
}

#[test]
fn sl2_brackets_match_matrix_commutators() {
    let g = sl2r();
    let he = g.bracket(&e(&g, 0), &e(&g, 1)).unwrap();
    assert_eq!(he.coords(), &[int(0), int(2), int(0)]);
    let ef = g.bracket(&e(&g, 1), &e(&g, 2)).unwrap();
    assert_eq!(ef.coords(), &[int(1), int(0), int(0)]);
    let hh = g.bracket(&e(&g, 0), &e(&g, 0)).unwrap();
    assert!(hh.is_zero());
}

#[test]
fn su2_bracket_cycles() {
    let g = su2();
    let b = g.bracket(&e(&g, 0), &e(&g, 1)).unwrap();
    assert_eq!(b.coords(), &[int(0), int(0), int(2)]);
}

#[test]
fn ad_spectra() {
    let g = sl2r();
    let ad_h = g.ad(&e(&g, 0)).unwrap();
    assert_eq!(ad_h, Matrix::from_diagonal(&[int(0), int(2), int(-2)]));
    assert!(g.ad(&Element::new(vec![int(0); 3])).unwrap().is_zero());

    let k = su2();
    let mu = k.ad(&e(&k, 0)).unwrap().min_poly().unwrap();
    assert_eq!(mu, Polynomial::from_i64(&[0, 4, 0, 1]));
}

#[test]
fn killing_of_so_matches_trace_formula() {
    for n in 3..=6 {
        for q in 0..=n {
            let g = so(n - q, q).unwrap();
            assert_eq!(g.killing(), so_killing_oracle(n - q, q), "so({},{q})", n - q);
        }
    }
}

#[test]
fn killing_signatures() {
    assert_eq!(so(3, 0).unwrap().killing_signature(), Inertia::new(0, 3, 0));
    assert_eq!(so(2, 3).unwrap().killing_signature(), Inertia::new(6, 4, 0));
    assert_eq!(so(1, 2).unwrap().killing_signature(), Inertia::new(2, 1, 0));
    assert_eq!(sl2r().killing_signature(), Inertia::new(2, 1, 0));
    assert_eq!(su2().killing_signature(), Inertia::new(0, 3, 0));
    assert!(LieAlgebra::abelian(3).killing().is_zero());
    let ss = LieAlgebra::direct_sum(&su2(), &su2());
    assert_eq!(ss.killing_signature(), Inertia::new(0, 6, 0));
}

#[test]
fn direct_sum_killing_is_block_diagonal() {
    let (a, b) = (sl2r(), su2());
    let s = LieAlgebra::direct_sum(&a, &b);
    assert_eq!(s.dim(), 6);
    let (ka, kb, ks) = (a.killing(), b.killing(), s.killing());
    for i in 0..6 {
        for j in 0..6 {
            let expected = match (i < 3, j < 3) {
                (true, true) => ka[(i, j)].clone(),
                (false, false) => kb[(i - 3, j - 3)].clone(),
                _ => int(0),
            };
            assert_eq!(ks[(i, j)], expected);
        }
    }
}

#[test]
fn semisimplicity() {
    assert!(!LieAlgebra::abelian(1).is_semisimple());
    assert!(sl2r().is_semisimple());
    assert!(so(4, 0).unwrap().is_semisimple());
}

#[test]
fn center_centralizer_derived() {
    let g = sl2r();
    assert!(g.center().is_zero());
    let all = Subspace::full(3);
    assert_eq!(g.centralizer(&all).unwrap(), g.center());
    assert_eq!(so(3, 0).unwrap().derived().dim(), 3);
    let ab = LieAlgebra::abelian(2);
    assert_eq!(ab.center().dim(), 2);
    assert!(ab.derived().is_zero());
}

#[test]
fn catalog_algebras_validate() {
    for g in [sl2r(), su2(), sl2c_real()] {
        g.validate().unwrap();
    }
    for n in 2..=6 {
        for q in 0..=n {
            let g = so(n - q, q).unwrap();
            g.validate().unwrap();
            assert_eq!(g.dim(), n * (n - 1) / 2);
        }
    }
}

#[test]
fn bad_structure_constants_are_rejected() {
    // [x, y] = x, [y, z] = x, [z, x] = y fails Jacobi.
    let r = LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        &[(0, 1, 0, int(1)), (1, 2, 0, int(1)), (2, 0, 1, int(1))],
    );
    assert!(r.is_err());
    let mut c = vec![int(0); 8];
    c[1] = int(1); // [e0, e0] = e1
    assert!(LieAlgebra::from_dense(vec!["a".into(), "b".into()], &c).is_err());
}

#[test]
fn change_basis_identity_and_permutation() {
    let g = so(2, 1).unwrap();
    let same = g.change_basis(&Matrix::identity(3)).unwrap();
    assert!(same.same_structure(&g));
    let perm = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
    let h = g.change_basis(&perm).unwrap();
    h.validate().unwrap();
    assert_eq!(h.labels(), &["B2_3", "B1_2", "B1_3"]);
    assert_eq!(h.killing_signature(), g.killing_signature());
}

#[test]
fn centroid_dimensions() {
    assert_eq!(centroid(&sl2r()).dim(), 1);
    assert_eq!(centroid(&sl2c_real()).dim(), 2);
    assert_eq!(centroid(&LieAlgebra::direct_sum(&sl2r(), &sl2r())).dim(), 2);
    assert_eq!(centroid(&so(4, 0).unwrap()).dim(), 2);
}

#[test]
fn centroid_elements_commute_with_ad() {
    let g = sl2c_real();
    let c = centroid(&g);
    for m in c.basis() {
        for i in 0..g.dim() {
            let ad = g.ad_vec(&unit(6, i));
            assert_eq!(m * &ad, &ad * m);
        }
    }
}

#[test]
fn simple_ideal_splitting() {
    let ideals = simple_ideals(&sl2r()).unwrap();
    assert_eq!(ideals, vec![Subspace::full(3)]);

    let g = so(4, 0).unwrap();
    let ideals = simple_ideals(&g).unwrap();
    assert_eq!(ideals.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 3]);
    for s in &ideals {
        assert!(g.is_ideal(s).unwrap());
        assert_eq!(g.subalgebra(s).unwrap().killing_signature(), Inertia::new(0, 3, 0));
    }
    assert!(ideals[0].intersect(&ideals[1]).unwrap().is_zero());

    assert_eq!(simple_ideals(&sl2c_real()).unwrap().len(), 1);
}

#[test]
fn complex_simplicity() {
    assert!(!is_complex_simple(&sl2r()).unwrap());
    assert!(!is_complex_simple(&su2()).unwrap());
    assert!(is_complex_simple(&sl2c_real()).unwrap());
}

fn invertible_3x3() -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, 9)
        .prop_map(|v| Matrix::from_fn(3, 3, |r, c| int(v[3 * r + c])))
        .prop_filter("invertible", |m| m.rank() == 3)
}

fn small_vec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(-4i64..=4, n).prop_map(|v| v.into_iter().map(int).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn killing_signature_is_basis_independent(p in invertible_3x3()) {
        for g in [so(3, 0).unwrap(), so(1, 2).unwrap(), su2()] {
            let h = g.change_basis(&p).unwrap();
            prop_assert!(h.validate().is_ok());
            prop_assert_eq!(h.killing_signature(), g.killing_signature());
        }
    }

    #[test]
    fn change_basis_is_a_homomorphism(p in invertible_3x3(), x in small_vec(3), y in small_vec(3)) {
        // The new basis vector i is column i of p, so old coordinates are p * new.
        let g = sl2r();
        let h = g.change_basis(&p).unwrap();
        let lhs = p.mul_vec(&h.bracket_vec(&x, &y));
        let rhs = g.bracket_vec(&p.mul_vec(&x), &p.mul_vec(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_antisymmetric_and_jacobi(x in small_vec(6), y in small_vec(6), z in small_vec(6)) {
        let g = sl2c_real();
        let neg: Vec<Rational> = g.bracket_vec(&y, &x).into_iter().map(|c| -c).collect();
        prop_assert_eq!(g.bracket_vec(&x, &y), neg);
        let t1 = g.bracket_vec(&x, &g.bracket_vec(&y, &z));
        let t2 = g.bracket_vec(&y, &g.bracket_vec(&z, &x));
        let t3 = g.bracket_vec(&z, &g.bracket_vec(&x, &y));
        for k in 0..6 {
            prop_assert_eq!(&t1[k] + &t2[k] + &t3[k], int(0));
        }
    }

    #[test]
    fn killing_is_invariant(x in small_vec(6), y in small_vec(6), z in small_vec(6)) {
        // κ([x, y], z) = κ(x, [y, z])
        let g = so(3, 1).unwrap();
        let k = g.killing();
        let form = |a: &[Rational], b: &[Rational]| {
            let kb = k.mul_vec(b);
            a.iter().zip(&kb).fold(int(0), |acc, (u, v)| acc + u * v)
        };
        prop_assert_eq!(form(&g.bracket_vec(&x, &y), &z), form(&x, &g.bracket_vec(&y, &z)));
    }
}
