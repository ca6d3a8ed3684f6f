//! The full battery of checks, in a fixed order.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::catalog::{signature_involution, so, SignVector};
use crate::ideals::is_complex_simple;
use crate::involution::is_irreducible_pair;
use crate::verify::checks::{
    check_catalog, check_complex_case, check_duality_transport, check_embeddings, check_flip_family, check_ha_cent,
    check_rank1_spectrum, check_so_killing, complex_case_triple, flip_family, x0_type,
};
use crate::verify::enumerate::{classes_by_axis_signs, classify, Classification, PairOutcome};
use crate::{CommutingTriple, ElementType, Result, VerificationReport};

/// Largest `p + q` the suite accepts.
pub const MAX_SUITE_N: usize = 7;

/// Signature pairs `(p, q)` with `p >= q` and `2 <= p + q <= max_n`.
pub fn canonical_signatures(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for q in 0..=n / 2 {
            out.push((n - q, q));
        }
    }
    out
}

fn pair_name(pair: &PairOutcome) -> String {
    format!("({}, {})", pair.record.tau, pair.record.sigma)
}

/// Runs `check` on every dissecting pair, folding the outcomes into one
/// report. `Ok(None)` from `check` means its preconditions do not hold.
fn over_dissecting(
    c: &Classification,
    name: &str,
    check: impl Fn(&CommutingTriple) -> Result<Option<VerificationReport>>,
) -> VerificationReport {
    let mut r = VerificationReport::new(name).param("algebra", format!("so({},{})", c.p, c.q));
    let (mut checked, mut skipped) = (0usize, 0usize);
    for pair in c.dissecting() {
        let label = pair_name(pair);
        match check(&c.triple(pair)) {
            Ok(Some(sub)) => {
                checked += 1;
                if !sub.passed {
                    let reason = sub.witness.get("reason").cloned().unwrap_or_default();
                    r.fail(format!("{label}: {reason}"));
                    for (k, v) in sub.witness {
                        r.note(&format!("{label}.{k}"), v);
                    }
                }
            }
            Ok(None) => skipped += 1,
            Err(e) => r.fail(format!("{label}: {e}")),
        }
    }
    r.note("checked", checked);
    r.note("skipped", skipped);
    r
}

fn closure_report(c: &Classification) -> VerificationReport {
    let mut r = VerificationReport::new("classification_closure").param("algebra", format!("so({},{})", c.p, c.q));
    let found = c.dissecting_pairs();
    let predicted = c.reflection_pairs();
    r.note("pairs", c.pairs.len());
    r.note("dissecting", found.len());
    r.note("reflection_pairs", predicted.len());
    let show = |s: BTreeSet<&(usize, usize)>| {
        s.into_iter()
            .map(|&(a, b)| format!("({}, {})", c.classes[a], c.classes[b]))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let extra: BTreeSet<_> = found.difference(&predicted).collect();
    let missing: BTreeSet<_> = predicted.difference(&found).collect();
    if !extra.is_empty() {
        r.note("dissecting_non_reflection", show(extra));
    }
    if !missing.is_empty() {
        r.note("reflection_not_dissecting", show(missing));
    }
    r.require(found == predicted, "dissecting pairs differ from distinct-reflection pairs");
    r
}

fn symmetry_report(c: &Classification) -> VerificationReport {
    let mut r = VerificationReport::new("dissecting_symmetry").param("algebra", format!("so({},{})", c.p, c.q));
    for pair in &c.pairs {
        if pair.swapped_dissecting != pair.record.dissecting {
            r.fail(format!("{} changes status when swapped", pair_name(pair)));
        }
    }
    r
}

fn lemma_report(c: &Classification) -> VerificationReport {
    // The enumeration already ran this check on each dissecting pair.
    let mut r = VerificationReport::new("lemma_x0").param("algebra", format!("so({},{})", c.p, c.q));
    let mut checked = 0usize;
    for pair in c.dissecting() {
        match &pair.lemma_x0 {
            Some(sub) => {
                checked += 1;
                if !sub.passed {
                    let reason = sub.witness.get("reason").cloned().unwrap_or_default();
                    r.fail(format!("{}: {reason}", pair_name(pair)));
                }
            }
            None => r.fail(format!("{}: lemma check missing", pair_name(pair))),
        }
    }
    r.note("checked", checked);
    r
}

fn classes_report(c: &Classification) -> VerificationReport {
    let mut r = VerificationReport::new("equivalence_classes").param("algebra", format!("so({},{})", c.p, c.q));
    r.note("witness_family", "block-preserving signed permutations (not all of Aut(g))");
    let by_key = classes_by_axis_signs(c);
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let sign = |s: i8| if s > 0 { '+' } else { '-' };
    for ((a, b), ids) in &by_key {
        let key = format!("{}{}", sign(*a), sign(*b));
        r.note(&format!("axes{key}"), ids.iter().cloned().collect::<Vec<_>>().join(","));
        r.require(ids.len() == 1, format!("axis signs {key} span several classes"));
        for id in ids {
            r.require(seen.insert(id.clone()), format!("class {id} spans several axis-sign pairs"));
        }
    }
    let unclassified = c.dissecting().filter(|p| p.record.class.is_none()).count();
    r.require(unclassified == 0, "a dissecting record has no class");
    r.note("classes", seen.len());
    r
}

/// `x0` hyperbolic: the rank-one spectrum check applies.
fn rank1(t: &CommutingTriple) -> Result<Option<VerificationReport>> {
    let (_, ty) = x0_type(t)?;
    if ty != ElementType::Hyperbolic {
        return Ok(None);
    }
    check_rank1_spectrum(t).map(Some)
}

fn ha_cent(t: &CommutingTriple) -> Result<Option<VerificationReport>> {
    let g = t.algebra();
    if !g.is_semisimple() || !is_irreducible_pair(g, t.tau())? {
        return Ok(None);
    }
    check_ha_cent(t).map(Some)
}

fn transport(t: &CommutingTriple) -> Result<Option<VerificationReport>> {
    check_duality_transport(t).map(Some)
}

/// Every report for one `so(p,q)`.
pub fn signature_reports(p: usize, q: usize, jobs: usize) -> Vec<VerificationReport> {
    let mut out = vec![check_so_killing(p, q)];
    let c = match classify(p, q, MAX_SUITE_N, jobs) {
        Ok(c) => c,
        Err(e) => {
            out.push(
                VerificationReport::errored("classification_closure", e).param("algebra", format!("so({p},{q})")),
            );
            return out;
        }
    };
    out.extend(classification_reports(&c));
    out
}

/// The checks that run on top of a finished classification.
pub fn classification_reports(c: &Classification) -> Vec<VerificationReport> {
    vec![
        closure_report(c),
        symmetry_report(c),
        lemma_report(c),
        over_dissecting(c, "ha_cent", ha_cent),
        over_dissecting(c, "rank1_spectrum", rank1),
        over_dissecting(c, "duality_transport", transport),
        classes_report(c),
    ]
}

/// Duality transport for the flip-family and complex-case triples.
pub fn check_special_transport() -> VerificationReport {
    let mut r = VerificationReport::new("duality_transport_special");
    let mut triples: Vec<(String, Result<CommutingTriple>)> = Vec::new();
    for case in flip_family() {
        triples.push((format!("{}.twisted", case.name), case.twisted()));
        triples.push((format!("{}.componentwise", case.name), case.componentwise()));
    }
    triples.push(("sl2C".into(), complex_case_triple()));
    for (name, t) in triples {
        match t.and_then(|t| check_duality_transport(&t)) {
            Ok(sub) => {
                for (k, v) in &sub.witness {
                    r.note(&format!("{name}.{k}"), v);
                }
                if !sub.passed {
                    r.fail(format!("{name}: {}", sub.witness.get("reason").cloned().unwrap_or_default()));
                }
            }
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    r
}

/// `(g, τ, τ)` is never dissecting on the semisimple catalog.
pub fn check_equal_involutions(max_n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("equal_involutions").param("max_n", max_n);
    let mut count = 0usize;
    let mut record = |name: String, t: Result<CommutingTriple>| match t {
        Ok(t) => {
            count += 1;
            let (d, dim) = t.is_dissecting();
            if d {
                r.fail(format!("{name}: (g, tau, tau) has dim q_m = {dim}"));
            }
        }
        Err(e) => r.fail(format!("{name}: {e}")),
    };
    for (p, q) in canonical_signatures(max_n).into_iter().filter(|&(p, q)| p + q >= 3) {
        let g = match so(p, q) {
            Ok(g) => Arc::new(g),
            Err(e) => {
                record(format!("so({p},{q})"), Err(e));
                continue;
            }
        };
        for s in SignVector::all_classes(p + q) {
            let t = signature_involution(&g, &s)
                .and_then(|tau| CommutingTriple::new(Arc::clone(&g), tau.clone(), tau));
            record(format!("so({p},{q}).{s}"), t);
        }
    }
    for case in flip_family() {
        let t = case.twisted();
        record(
            format!("{}.tau", case.name),
            t.and_then(|t| CommutingTriple::new(t.algebra_arc().clone(), t.tau().clone(), t.tau().clone())),
        );
    }
    record(
        "sl2C.tau".into(),
        complex_case_triple().and_then(|t| CommutingTriple::new(t.algebra_arc().clone(), t.tau().clone(), t.tau().clone())),
    );
    r.note("checked", count);
    r
}

/// Complex simplicity of `sl2(C)` on its own.
fn check_sl2c_simple() -> VerificationReport {
    let mut r = VerificationReport::new("sl2c_complex_simple");
    match complex_case_triple().and_then(|t| is_complex_simple(t.algebra())) {
        Ok(b) => r.require(b, "sl2(C) is not complex simple"),
        Err(e) => r.fail(e),
    }
    r
}

/// All checks over `so(p,q)` with `p >= q`, `p + q <= max_n`, then the
/// flip family, the complex case, the embeddings and the catalog.
pub fn paper_suite(max_n: usize, jobs: usize) -> Vec<VerificationReport> {
    if max_n > MAX_SUITE_N {
        return vec![VerificationReport::errored(
            "suite",
            format!("max_n = {max_n} exceeds the supported bound {MAX_SUITE_N}"),
        )
        .param("max_n", max_n)];
    }
    let mut out = Vec::new();
    for (p, q) in canonical_signatures(max_n) {
        out.extend(signature_reports(p, q, jobs));
    }
    out.push(check_equal_involutions(max_n));
    out.push(check_flip_family());
    out.push(check_complex_case());
    out.push(check_sl2c_simple());
    out.push(check_special_transport());
    out.push(check_embeddings());
    out.push(check_catalog(max_n));
    out
}
