//! Executes a validated input script against the core library.

use std::collections::HashMap;
use std::sync::Arc;

use dissect_core::catalog::{self, so, SignVector};
use dissect_core::duality::{canonical_cartan_involution, cartan_dual, compact_dual, DualResult};
use dissect_core::verify::enumerate::classify;
use dissect_core::verify::{check_lemma_x0, classification_reports, paper_suite, x0_type, MAX_SUITE_N};
use dissect_core::{Automorphism, CommutingTriple, LieAlgebra, VerificationReport};
use qlinalg::{int, Matrix};
use sha2::{Digest, Sha256};

use crate::ast::{AlgebraDef, Command, DualKind, InvolutionDef, SpecFile, Stmt};
use crate::printer::print_spec;
use crate::report::ReportDocument;

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Worker threads for pair evaluation; 0 picks a default, 1 is sequential.
    pub jobs: usize,
}

type Bound<T> = Result<T, String>;

#[derive(Default)]
struct Env {
    algebras: HashMap<String, Bound<Arc<LieAlgebra>>>,
    involutions: HashMap<String, (String, Bound<Automorphism>)>,
}

impl Env {
    fn algebra(&self, name: &str) -> Bound<Arc<LieAlgebra>> {
        match self.algebras.get(name) {
            Some(Ok(g)) => Ok(Arc::clone(g)),
            Some(Err(e)) => Err(format!("algebra '{name}' is unavailable: {e}")),
            None => Err(format!("unbound algebra '{name}'")),
        }
    }

    fn involution(&self, name: &str) -> Bound<(String, Automorphism)> {
        match self.involutions.get(name) {
            Some((on, Ok(a))) => Ok((on.clone(), a.clone())),
            Some((_, Err(e))) => Err(format!("involution '{name}' is unavailable: {e}")),
            None => Err(format!("unbound involution '{name}'")),
        }
    }
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Runs `spec`; the digest is taken over its canonical printed form.
pub fn run(spec: &SpecFile, opts: &RunOptions) -> ReportDocument {
    run_with_digest(spec, opts, sha256_hex(&print_spec(spec)))
}

pub fn run_with_digest(spec: &SpecFile, opts: &RunOptions, digest: String) -> ReportDocument {
    let mut env = Env::default();
    let mut doc = ReportDocument::new(digest);
    for stmt in &spec.stmts {
        match stmt {
            Stmt::Algebra { name, def } => {
                let g = build_algebra(def, &env).map(Arc::new).map_err(|e| e.to_string());
                if let Err(e) = &g {
                    doc.reports
                        .push(VerificationReport::errored("algebra", e).param("name", name));
                }
                env.algebras.insert(name.clone(), g);
            }
            Stmt::Involution { name, on, def } => {
                let a = build_involution(def, on, &env);
                if let Err(e) = &a {
                    doc.reports.push(
                        VerificationReport::errored("involution", e)
                            .param("name", name)
                            .param("algebra", on),
                    );
                }
                env.involutions.insert(name.clone(), (on.clone(), a));
            }
            Stmt::Command(c) => run_command(c, &env, opts, &mut doc),
        }
    }
    doc.finish();
    doc
}

fn build_algebra(def: &AlgebraDef, env: &Env) -> Result<LieAlgebra, String> {
    let g = match def {
        AlgebraDef::So(p, q) => so(*p, *q).map_err(|e| e.to_string())?,
        AlgebraDef::Sl2R => catalog::sl2r(),
        AlgebraDef::Su2 => catalog::su2(),
        AlgebraDef::Sl2C => catalog::sl2c_real(),
        AlgebraDef::Sum(a, b) => LieAlgebra::direct_sum(&*env.algebra(a)?, &*env.algebra(b)?),
        AlgebraDef::Constants(rows) => {
            let dim = rows.iter().map(|b| b.i.max(b.j).max(b.k)).max().unwrap_or(0);
            let labels = (1..=dim).map(|i| format!("e{i}")).collect();
            let entries: Vec<_> = rows.iter().map(|b| (b.i - 1, b.j - 1, b.k - 1, b.c.clone())).collect();
            LieAlgebra::from_brackets(labels, &entries).map_err(|e| e.to_string())?
        }
    };
    Ok(g)
}

fn build_involution(def: &InvolutionDef, on: &str, env: &Env) -> Bound<Automorphism> {
    let g = env.algebra(on)?;
    let a = match def {
        InvolutionDef::Reflect(j) => catalog::reflection_involution(&g, *j),
        InvolutionDef::Signs(s) => {
            SignVector::new(s.clone()).and_then(|s| catalog::signature_involution(&g, &s))
        }
        InvolutionDef::Flip => catalog::flip(&g),
        InvolutionDef::SwapTwist(s) => {
            let (_, s1) = env.involution(s)?;
            catalog::swap_twist(&g, &s1)
        }
        InvolutionDef::Matrix(rows) => Matrix::from_rows(g.dim(), rows)
            .map_err(Into::into)
            .and_then(|m| Automorphism::certify(&g, m))
            .and_then(|a| {
                if a.is_involution() {
                    Ok(a)
                } else {
                    Err(dissect_core::CoreError::NotInvolutive)
                }
            }),
    };
    a.map_err(|e| e.to_string())
}

fn run_command(c: &Command, env: &Env, opts: &RunOptions, doc: &mut ReportDocument) {
    match c {
        Command::CheckDissecting { tau, sigma } => {
            let base = VerificationReport::new("check_dissecting").param("tau", tau).param("sigma", sigma);
            doc.reports.push(check_dissecting(base, env, tau, sigma));
        }
        Command::Dual { kind, algebra, with } => {
            let name = match kind {
                DualKind::Cartan => "dual_cartan",
                DualKind::Compact => "dual_compact",
            };
            let mut base = VerificationReport::new(name).param("algebra", algebra);
            if !with.is_empty() {
                base = base.param("with", with.join(","));
            }
            doc.reports.push(dual(base, env, *kind, algebra, with));
        }
        Command::Classify { p, q } => match classify(*p, *q, MAX_SUITE_N, opts.jobs) {
            Ok(c) => {
                doc.records.extend(c.records());
                doc.reports.push(dissect_core::verify::check_so_killing(*p, *q));
                doc.reports.extend(classification_reports(&c));
            }
            Err(e) => doc.reports.push(
                VerificationReport::errored("classify", e).param("algebra", format!("so({p},{q})")),
            ),
        },
        Command::VerifyPaper { max_n } => doc.reports.extend(paper_suite(*max_n, opts.jobs)),
    }
}

fn check_dissecting(mut r: VerificationReport, env: &Env, tau: &str, sigma: &str) -> VerificationReport {
    let result = (|| -> Bound<()> {
        let (on, t) = env.involution(tau)?;
        let (_, s) = env.involution(sigma)?;
        r.parameters.insert("algebra".into(), on.clone());
        let g = env.algebra(&on)?;
        let triple = CommutingTriple::new(g, t, s).map_err(|e| e.to_string())?;
        let quad = triple.quad_decompose();
        let dims = quad.dims();
        r.note("dims", format!("{dims:?}"));
        r.note("dim_qm", dims[3]);
        r.note("q_m", integer_rows(&quad.q_m));
        let dissecting = dims[3] == 1;
        r.note("dissecting", dissecting);
        if !dissecting {
            r.fail(format!("not dissecting: dim q_m = {}", dims[3]));
            return Ok(());
        }
        let (x0, ty) = x0_type(&triple).map_err(|e| e.to_string())?;
        r.note("x0", format!("[{}]", x0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")));
        r.note("x0_type", ty);
        let lemma = check_lemma_x0(&triple).map_err(|e| e.to_string())?;
        r.note("lemma_x0", if lemma.passed { "pass" } else { "fail" });
        if !lemma.passed {
            r.fail(format!(
                "lemma_x0: {}",
                lemma.witness.get("reason").cloned().unwrap_or_default()
            ));
        }
        Ok(())
    })();
    if let Err(e) = result {
        r.fail(format!("error: {e}"));
    }
    r
}

/// RREF basis of a subspace as primitive integer rows.
fn integer_rows(s: &qlinalg::Subspace) -> String {
    let rows: Vec<String> = s
        .integer_basis()
        .iter()
        .map(|v| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Nonzero `[b_i, b_j]` for `i < j`, as `[x,y]=c*z+...` terms.
fn structure_summary(g: &LieAlgebra) -> String {
    let labels = g.labels();
    let n = g.dim();
    let mut parts = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let terms: Vec<String> = (0..n)
                .filter_map(|k| {
                    let c = g.structure_constant(i, j, k);
                    (c != int(0)).then(|| format!("{c}*{}", labels[k]))
                })
                .collect();
            if !terms.is_empty() {
                parts.push(format!("[{},{}]={}", labels[i], labels[j], terms.join("+")));
            }
        }
    }
    parts.join("; ")
}

fn transported_status(r: &mut VerificationReport, d: &DualResult, original: Option<&CommutingTriple>, offset: usize) -> Bound<()> {
    let Some(t) = original else { return Ok(()) };
    let dual = CommutingTriple::new(
        Arc::new(d.algebra.clone()),
        d.involutions[offset].clone(),
        d.involutions[offset + 1].clone(),
    )
    .map_err(|e| e.to_string())?;
    let (a, da) = t.is_dissecting();
    let (b, db) = dual.is_dissecting();
    r.note("dim_qm", da);
    r.note("dual_dim_qm", db);
    r.require(a == b, "duality changes dissecting status");
    Ok(())
}

fn dual(mut r: VerificationReport, env: &Env, kind: DualKind, algebra: &str, with: &[String]) -> VerificationReport {
    let result = (|| -> Bound<()> {
        let g = env.algebra(algebra)?;
        let invs = with
            .iter()
            .map(|w| env.involution(w).map(|(_, a)| a))
            .collect::<Bound<Vec<_>>>()?;
        let pair = if invs.len() >= 2 {
            Some(CommutingTriple::new(Arc::clone(&g), invs[0].clone(), invs[1].clone()).map_err(|e| e.to_string())?)
        } else {
            None
        };
        let d = match kind {
            DualKind::Cartan => {
                let d = cartan_dual(&g, &invs[0], &invs[1..]).map_err(|e| e.to_string())?;
                let twice = cartan_dual(&d.algebra, &d.involutions[0], &d.involutions[1..]).map_err(|e| e.to_string())?;
                r.require(
                    twice.algebra.same_structure(&d.adapted),
                    "dualizing twice does not restore the structure constants",
                );
                transported_status(&mut r, &d, pair.as_ref(), 0)?;
                d
            }
            DualKind::Compact => {
                let theta = canonical_cartan_involution(&g)
                    .ok_or_else(|| format!("'{algebra}' has no canonical Cartan involution"))?;
                let id = Automorphism::identity(&g);
                let tau = invs.first().unwrap_or(&id);
                let sigma = invs.get(1).unwrap_or(tau);
                let d = compact_dual(&g, &theta, tau, sigma).map_err(|e| e.to_string())?;
                let sig = d.algebra.killing_signature();
                r.require(sig.neg == g.dim(), "compact dual is not compact");
                transported_status(&mut r, &d, pair.as_ref(), 1)?;
                d
            }
        };
        r.note("killing", g.killing_signature());
        r.note("dual_killing", d.algebra.killing_signature());
        r.note("dual_labels", d.algebra.labels().join(","));
        r.note("dual_brackets", structure_summary(&d.algebra));
        r.note("blocks", format!("{:?}", d.basis.block_dims()));
        Ok(())
    })();
    if let Err(e) = result {
        r.fail(format!("error: {e}"));
    }
    r
}
