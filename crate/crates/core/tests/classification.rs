use std::sync::Arc;

use dissect_core::catalog::{
    embed_sl2sl2_to_so22, embed_su2su2_to_so4, quadric_reflection_data, signature_involution, so, SignVector,
    SignatureForm,
};
use dissect_core::verify::enumerate::{classify, descriptor};
use dissect_core::verify::{
    check_duality_transport, check_ha_cent, check_lemma_x0, check_rank1_spectrum, enumerate_dissecting,
    equivalent_triples, paper_suite, x0_vector,
};
use dissect_core::{CommutingTriple, ElementType, TripleRecord};
use qlinalg::{int, Inertia, Matrix, Rational};

fn reflection_triple(p: usize, q: usize, i: usize, j: usize) -> CommutingTriple {
    let n = p + q;
    let g = Arc::new(so(p, q).unwrap());
    let tau = signature_involution(&g, &SignVector::reflection(n, i).unwrap()).unwrap();
    let sigma = signature_involution(&g, &SignVector::reflection(n, j).unwrap()).unwrap();
    CommutingTriple::new(g, tau, sigma).unwrap()
}

fn record(algebra: &str, tau: &str, sigma: &str) -> TripleRecord {
    TripleRecord {
        algebra: algebra.into(),
        tau: tau.into(),
        sigma: sigma.into(),
        dims: [0; 4],
        dissecting: true,
        x0_type: None,
        class: None,
    }
}

/// Number of index pairs flipped by both sign vectors: the dimension of `q_m`.
fn qm_dim_oracle(t: &[i8], s: &[i8]) -> usize {
    let n = t.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| t[i] * t[j] < 0 && s[i] * s[j] < 0)
        .count()
}

#[test]
fn sign_classes() {
    for n in 2..=7 {
        let classes = SignVector::all_classes(n);
        assert_eq!(classes.len(), (1 << (n - 1)) - 1);
        assert!(classes.iter().all(|c| c.signs()[0] == 1 && *c == c.canonical()));
        let mut sorted = classes.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), classes.len());
    }
    let r2 = SignVector::reflection(4, 2).unwrap();
    assert_eq!(r2.to_string(), "+-++");
    assert_eq!(r2.flipped_axis(), Some(1));
    assert_eq!(SignVector::reflection(4, 1).unwrap().canonical().to_string(), "+---");
    assert_eq!(SignVector::reflection(4, 1).unwrap().canonical().flipped_axis(), Some(0));
    assert!(SignVector::new(vec![1, 1, 1]).is_err());
    assert_eq!(SignVector::new(vec![1, 1, -1, -1]).unwrap().flipped_axis(), None);
}

#[test]
fn quadric_reflections() {
    let e = |n: usize, k: usize| -> Vec<Rational> { (0..n).map(|i| int((i == k) as i64)).collect() };
    let f40 = SignatureForm::new(4, 0).unwrap();
    assert_eq!(quadric_reflection_data(&f40, &e(4, 0), &e(4, 1)).unwrap(), (2, 1));
    let f13 = SignatureForm::new(1, 3).unwrap();
    assert_eq!(quadric_reflection_data(&f13, &e(4, 0), &e(4, 3)).unwrap(), (2, -1));
    let f22 = SignatureForm::new(2, 2).unwrap();
    assert_eq!(quadric_reflection_data(&f22, &e(4, 0), &e(4, 1)).unwrap(), (2, 1));
    let null: Vec<Rational> = [1, 0, 1, 0].iter().map(|&x| int(x)).collect();
    assert!(quadric_reflection_data(&f22, &null, &e(4, 1)).is_err());
}

#[test]
fn embeddings() {
    let a = embed_sl2sl2_to_so22();
    assert!(a.is_homomorphism() && a.is_injective() && a.preserves_form());
    assert_eq!(a.rank(), 6);
    assert_eq!(a.form_signature(), Inertia::new(2, 2, 0));
    let b = embed_su2su2_to_so4();
    assert!(b.is_homomorphism() && b.is_injective() && b.preserves_form());
    assert_eq!(b.form_signature(), Inertia::new(4, 0, 0));
}

#[test]
fn so3_dissecting_pairs_are_the_reflection_pairs() {
    let records = enumerate_dissecting(3, 0).unwrap();
    assert_eq!(records.len(), 3);
    assert!(records.iter().all(|r| r.dissecting));
    let names: Vec<(String, String)> = records.iter().map(|r| (r.tau.clone(), r.sigma.clone())).collect();
    assert_eq!(
        names,
        vec![
            ("r3".to_string(), "r2".to_string()),
            ("r3".to_string(), "r1".to_string()),
            ("r2".to_string(), "r1".to_string()),
        ]
    );
}

#[test]
fn enumeration_matches_sign_count_oracle() {
    for n in 2..=5 {
        for q in 0..=n {
            let c = classify(n - q, q, 6, 1).unwrap();
            let k = c.classes.len();
            assert_eq!(c.pairs.len(), k * (k - 1) / 2);
            for pair in &c.pairs {
                let (t, s) = (c.classes[pair.tau].signs(), c.classes[pair.sigma].signs());
                assert_eq!(pair.record.dims[3], qm_dim_oracle(t, s));
                assert_eq!(pair.record.dims.iter().sum::<usize>(), n * (n - 1) / 2);
                assert_eq!(pair.record.dissecting, pair.record.dims[3] == 1);
                assert_eq!(pair.record.x0_type.is_some(), pair.record.dissecting);
                assert_eq!(pair.record.class.is_some(), pair.record.dissecting);
            }
            assert_eq!(c.dissecting_pairs(), c.reflection_pairs(), "so({},{q})", n - q);
        }
    }
}

#[test]
fn enumeration_spot_checks() {
    let c = classify(4, 0, 6, 1).unwrap();
    let r1 = SignVector::reflection(4, 1).unwrap().canonical();
    let d = SignVector::new(vec![1, 1, -1, -1]).unwrap();
    let pair = c
        .pairs
        .iter()
        .find(|p| {
            let (a, b) = (&c.classes[p.tau], &c.classes[p.sigma]);
            (*a == r1 && *b == d) || (*a == d && *b == r1)
        })
        .unwrap();
    assert!(!pair.record.dissecting);
    assert_eq!(pair.record.dims[3], 2);

    let records = enumerate_dissecting(2, 3).unwrap();
    let r = records
        .iter()
        .find(|r| {
            (r.tau == "r1" && r.sigma == "r5") || (r.tau == "r5" && r.sigma == "r1")
        })
        .unwrap();
    assert!(r.dissecting);
    assert_eq!(r.x0_type, Some(ElementType::Hyperbolic));
    assert_eq!(descriptor(&SignVector::new(vec![1, 1, -1, -1, 1]).unwrap()), "++--+");
}

#[test]
fn enumeration_bound_is_enforced() {
    assert!(classify(5, 3, 6, 1).is_err());
    assert!(classify(1, 0, 6, 1).is_err());
    assert!(enumerate_dissecting(4, 3).is_err());
}

#[test]
fn parallel_and_sequential_runs_agree() {
    let a = classify(3, 2, 6, 1).unwrap().records();
    let b = classify(3, 2, 6, 0).unwrap().records();
    let c = classify(3, 2, 6, 3).unwrap().records();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn equivalence_witnesses() {
    let same = equivalent_triples(&record("so(4,0)", "r1", "r2"), &record("so(4,0)", "r1", "r2")).unwrap();
    assert_eq!(same.permutation, vec![1, 2, 3, 4]);
    assert_eq!(same.matrix, Matrix::identity(4));

    let w = equivalent_triples(&record("so(4,0)", "r1", "r2"), &record("so(4,0)", "r3", "r4")).unwrap();
    assert_eq!(w.permutation, vec![3, 4, 1, 2]);
    // W r_1 W^{-1} = r_3 and W r_2 W^{-1} = r_4 as matrices.
    let winv = w.matrix.inverse().unwrap();
    let diag = |v: &[i64]| Matrix::from_diagonal(&v.iter().map(|&x| int(x)).collect::<Vec<_>>());
    assert_eq!(&(&w.matrix * &diag(&[-1, 1, 1, 1])) * &winv, diag(&[1, 1, -1, 1]));
    assert_eq!(&(&w.matrix * &diag(&[1, -1, 1, 1])) * &winv, diag(&[1, 1, 1, -1]));

    assert!(equivalent_triples(&record("so(2,3)", "r1", "r2"), &record("so(2,3)", "r1", "r5")).is_none());
    assert!(equivalent_triples(&record("so(2,3)", "r1", "r2"), &record("so(3,2)", "r1", "r2")).is_none());
    assert!(equivalent_triples(&record("so(2,3)", "r4", "r5"), &record("so(2,3)", "r5", "r3")).is_some());
}

#[test]
fn classes_follow_flipped_axis_signs() {
    for (p, q) in [(3, 0), (2, 1), (2, 2), (3, 2), (4, 1), (3, 3)] {
        let c = classify(p, q, 6, 0).unwrap();
        let by_key = dissect_core::verify::enumerate::classes_by_axis_signs(&c);
        for ids in by_key.values() {
            assert_eq!(ids.len(), 1, "so({p},{q})");
        }
        let distinct: std::collections::BTreeSet<_> = by_key.values().flatten().collect();
        assert_eq!(distinct.len(), by_key.len());
    }
}

#[test]
fn lemma_x0_examples() {
    for (p, q, i, j, ty) in [
        (5, 0, 1, 5, ElementType::Elliptic),
        (1, 4, 1, 2, ElementType::Hyperbolic),
        (2, 2, 1, 3, ElementType::Hyperbolic),
    ] {
        let t = reflection_triple(p, q, i, j);
        let r = check_lemma_x0(&t).unwrap();
        assert!(r.passed, "{:?}", r.witness);
        assert_eq!(r.witness["x0_type"], ty.to_string());
    }
    let g = Arc::new(so(4, 0).unwrap());
    let t = CommutingTriple::new(
        Arc::clone(&g),
        signature_involution(&g, &SignVector::reflection(4, 1).unwrap()).unwrap(),
        signature_involution(&g, &SignVector::new(vec![-1, -1, 1, 1]).unwrap()).unwrap(),
    )
    .unwrap();
    assert!(check_lemma_x0(&t).is_err());
    assert!(check_ha_cent(&t).is_err());
}

#[test]
fn x0_is_a_primitive_basis_generator() {
    let t = reflection_triple(2, 3, 1, 5);
    let x0 = x0_vector(&t).unwrap();
    let labels = t.algebra().labels();
    let k = labels.iter().position(|l| l == "B1_5").unwrap();
    for (i, c) in x0.iter().enumerate() {
        assert_eq!(c.to_string(), if i == k { "1" } else { "0" });
    }
}

#[test]
fn ha_cent_examples() {
    for (p, q) in [(1, 4), (5, 0), (2, 2)] {
        let r = check_ha_cent(&reflection_triple(p, q, 1, 2)).unwrap();
        assert!(r.passed, "{:?}", r.witness);
    }
}

#[test]
fn rank1_spectrum_examples() {
    let r = check_rank1_spectrum(&reflection_triple(1, 2, 1, 2)).unwrap();
    assert!(r.passed);
    assert_eq!(r.witness["lambda"], "1");
    assert!(check_rank1_spectrum(&reflection_triple(1, 4, 1, 3)).unwrap().passed);
    assert!(check_rank1_spectrum(&reflection_triple(5, 0, 1, 5)).is_err());
}

#[test]
fn duality_transport_examples() {
    let r = check_duality_transport(&reflection_triple(2, 3, 1, 5)).unwrap();
    assert!(r.passed, "{:?}", r.witness);
    assert_eq!(r.witness["compact_dual_killing"], "(0,10,0)");
    assert_eq!(r.witness["dual_x0_type"], "elliptic");
    let r = check_duality_transport(&reflection_triple(4, 0, 1, 4)).unwrap();
    assert!(r.passed);
    assert_eq!(r.witness["compact_dual_killing"], "(0,6,0)");
}

#[test]
fn small_suite_passes_and_is_deterministic() {
    let a = paper_suite(3, 1);
    let b = paper_suite(3, 0);
    assert_eq!(a, b);
    for r in &a {
        assert!(r.passed, "{} {:?} {:?}", r.name, r.parameters, r.witness);
    }
    let names: Vec<&str> = a.iter().map(|r| r.name.as_str()).collect();
    for needed in ["flip_family", "complex_case", "embeddings", "catalog_validity", "equal_involutions"] {
        assert!(names.contains(&needed), "{needed}");
    }
    let failing = paper_suite(8, 1);
    assert_eq!(failing.len(), 1);
    assert!(!failing[0].passed && failing[0].witness.contains_key("reason"));
}
