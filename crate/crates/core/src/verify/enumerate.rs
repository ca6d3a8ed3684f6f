//! Exhaustive runs over pairs of signature involutions on `so(p,q)`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::One;
use qlinalg::{Matrix, Rational};
use rayon::prelude::*;

use crate::catalog::{signature_involution, so, SignVector};
use crate::verify::checks::{check_lemma_x0, x0_type};
use crate::{Automorphism, CommutingTriple, CoreError, LieAlgebra, Result, TripleRecord, VerificationReport};

/// Default bound on `p + q` for enumeration.
pub const DEFAULT_MAX_N: usize = 6;

/// Everything a classification run computes for one `so(p,q)`.
#[derive(Debug, Clone)]
pub struct Classification {
    pub p: usize,
    pub q: usize,
    pub algebra: Arc<LieAlgebra>,
    pub classes: Vec<SignVector>,
    pub involutions: Vec<Automorphism>,
    /// One entry per unordered pair of distinct classes, sorted by class index.
    pub pairs: Vec<PairOutcome>,
}

#[derive(Debug, Clone)]
pub struct PairOutcome {
    /// Indices into `classes`.
    pub tau: usize,
    pub sigma: usize,
    pub record: TripleRecord,
    /// Dissecting status with the roles of the involutions exchanged.
    pub swapped_dissecting: bool,
    pub lemma_x0: Option<VerificationReport>,
}

impl Classification {
    pub fn triple(&self, pair: &PairOutcome) -> CommutingTriple {
        CommutingTriple::new(
            Arc::clone(&self.algebra),
            self.involutions[pair.tau].clone(),
            self.involutions[pair.sigma].clone(),
        )
        .expect("signature involutions commute")
    }

    pub fn records(&self) -> Vec<TripleRecord> {
        self.pairs.iter().map(|p| p.record.clone()).collect()
    }

    pub fn dissecting(&self) -> impl Iterator<Item = &PairOutcome> {
        self.pairs.iter().filter(|p| p.record.dissecting)
    }

    /// Index pairs that the classification predicts to be dissecting:
    /// both classes are single reflections.
    pub fn reflection_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.pairs
            .iter()
            .filter(|p| {
                self.classes[p.tau].flipped_axis().is_some() && self.classes[p.sigma].flipped_axis().is_some()
            })
            .map(|p| (p.tau, p.sigma))
            .collect()
    }

    pub fn dissecting_pairs(&self) -> BTreeSet<(usize, usize)> {
        self.dissecting().map(|p| (p.tau, p.sigma)).collect()
    }
}

/// Human-readable descriptor of a signature involution class: `r{j}` for a
/// reflection, otherwise the canonical sign string.
pub fn descriptor(s: &SignVector) -> String {
    match s.flipped_axis() {
        Some(k) if s.len() > 2 => format!("r{}", k + 1),
        _ => s.to_string(),
    }
}

fn run_parallel<T: Send, R: Send>(jobs: usize, items: Vec<T>, f: impl Fn(T) -> R + Sync + Send) -> Vec<R> {
    if jobs == 1 {
        return items.into_iter().map(f).collect();
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if jobs > 1 {
        builder = builder.num_threads(jobs);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| items.into_par_iter().map(&f).collect()),
        Err(_) => items.into_iter().map(f).collect(),
    }
}

fn evaluate(g: &Arc<LieAlgebra>, classes: &[SignVector], involutions: &[Automorphism], a: usize, b: usize, name: &str) -> Result<PairOutcome> {
    let t = CommutingTriple::new(Arc::clone(g), involutions[a].clone(), involutions[b].clone())?;
    let quad = t.quad_decompose();
    let dims = quad.dims();
    let dissecting = dims[3] == 1;
    let swapped_dissecting = t.swapped().is_dissecting().0;
    let (x0_ty, lemma) = if dissecting {
        let (_, ty) = x0_type(&t)?;
        (Some(ty), Some(check_lemma_x0(&t)?))
    } else {
        (None, None)
    };
    Ok(PairOutcome {
        tau: a,
        sigma: b,
        record: TripleRecord {
            algebra: name.to_string(),
            tau: descriptor(&classes[a]),
            sigma: descriptor(&classes[b]),
            dims,
            dissecting,
            x0_type: x0_ty,
            class: None,
        },
        swapped_dissecting,
        lemma_x0: lemma,
    })
}

/// Runs every unordered pair of distinct signature-involution classes on
/// `so(p,q)`. `jobs = 0` uses all cores, `1` runs sequentially.
pub fn classify(p: usize, q: usize, max_n: usize, jobs: usize) -> Result<Classification> {
    let n = p + q;
    if n < 2 || n > max_n {
        return Err(CoreError::InvalidArgument(format!(
            "p + q = {n} outside the supported range 2..={max_n}"
        )));
    }
    let g = Arc::new(so(p, q)?);
    let classes = SignVector::all_classes(n);
    let involutions = classes
        .iter()
        .map(|s| signature_involution(&g, s))
        .collect::<Result<Vec<_>>>()?;
    let name = format!("so({p},{q})");
    let mut items = Vec::new();
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            items.push((a, b));
        }
    }
    let results = run_parallel(jobs, items, |(a, b)| evaluate(&g, &classes, &involutions, a, b, &name));
    let mut pairs = results.into_iter().collect::<Result<Vec<_>>>()?;
    pairs.sort_by_key(|o| (o.tau, o.sigma));
    let mut c = Classification {
        p,
        q,
        algebra: g,
        classes,
        involutions,
        pairs,
    };
    assign_classes(&mut c);
    Ok(c)
}

/// Classification records only.
pub fn enumerate_dissecting(p: usize, q: usize) -> Result<Vec<TripleRecord>> {
    Ok(classify(p, q, DEFAULT_MAX_N, 1)?.records())
}

/// A block-preserving permutation `π` (1-based images) and its matrix `W`
/// with `W e_i = e_{π(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub permutation: Vec<usize>,
    pub matrix: Matrix,
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// `γ'` with `γ'_{π(i)} = γ_i`, i.e. `W diag(γ) W^{-1}`.
fn permute(s: &SignVector, pi: &[usize]) -> SignVector {
    let mut out = vec![0i8; s.len()];
    for (i, &img) in pi.iter().enumerate() {
        out[img] = s.signs()[i];
    }
    SignVector::new(out).expect("permutation keeps a nonconstant vector").canonical()
}

/// Searches block-preserving permutations, in lexicographic order of
/// `(π(1), ..., π(n))`, for `W` with `Ad W` carrying `(τ1, σ1)` to `(τ2, σ2)`.
pub fn find_witness(p: usize, q: usize, pair1: (&SignVector, &SignVector), pair2: (&SignVector, &SignVector)) -> Option<Witness> {
    let n = p + q;
    let first: Vec<usize> = (0..p).collect();
    let second: Vec<usize> = (p..n).collect();
    let (t1, s1) = pair1;
    let (t2, s2) = (pair2.0.canonical(), pair2.1.canonical());
    for a in permutations(&first) {
        for b in permutations(&second) {
            let pi: Vec<usize> = a.iter().chain(&b).copied().collect();
            if permute(t1, &pi) == t2 && permute(s1, &pi) == s2 {
                let matrix = Matrix::from_fn(n, n, |r, c| {
                    if pi[c] == r {
                        Rational::one()
                    } else {
                        Rational::default()
                    }
                });
                return Some(Witness {
                    permutation: pi.iter().map(|x| x + 1).collect(),
                    matrix,
                });
            }
        }
    }
    None
}

fn parse_algebra(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("so(")?.strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

fn parse_descriptor(d: &str, n: usize) -> Option<SignVector> {
    if let Some(j) = d.strip_prefix('r') {
        return SignVector::reflection(n, j.parse().ok()?).ok().map(|s| s.canonical());
    }
    let signs = d
        .chars()
        .map(|c| match c {
            '+' => Some(1),
            '-' => Some(-1),
            _ => None,
        })
        .collect::<Option<Vec<i8>>>()?;
    SignVector::new(signs).ok()
}

/// Equivalence of two records on the same `so(p,q)` under block-preserving
/// signed permutations. Signs of `W` are fixed to `+1`: they commute with
/// every diagonal involution and cannot affect the search.
pub fn equivalent_triples(t1: &TripleRecord, t2: &TripleRecord) -> Option<Witness> {
    let (p, q) = parse_algebra(&t1.algebra)?;
    if parse_algebra(&t2.algebra)? != (p, q) {
        return None;
    }
    let n = p + q;
    let v = |d: &str| parse_descriptor(d, n);
    find_witness(p, q, (&v(&t1.tau)?, &v(&t1.sigma)?), (&v(&t2.tau)?, &v(&t2.sigma)?))
}

fn assign_classes(c: &mut Classification) {
    let mut reps: Vec<(SignVector, SignVector)> = Vec::new();
    for pair in c.pairs.iter_mut().filter(|p| p.record.dissecting) {
        let t = &c.classes[pair.tau];
        let s = &c.classes[pair.sigma];
        let found = reps
            .iter()
            .position(|(rt, rs)| find_witness(c.p, c.q, (t, s), (rt, rs)).is_some());
        let id = match found {
            Some(i) => i,
            None => {
                reps.push((t.clone(), s.clone()));
                reps.len() - 1
            }
        };
        pair.record.class = Some(format!("C{}", id + 1));
    }
}

/// Signs `(ε_i, ε_j)` of the axes flipped by a reflection pair.
pub fn flipped_axis_signs(c: &Classification, pair: &PairOutcome) -> Option<(i8, i8)> {
    let eps = |k: usize| if k < c.p { 1 } else { -1 };
    let i = c.classes[pair.tau].flipped_axis()?;
    let j = c.classes[pair.sigma].flipped_axis()?;
    Some((eps(i), eps(j)))
}

/// Class ids of dissecting records grouped by flipped-axis signs.
pub fn classes_by_axis_signs(c: &Classification) -> BTreeMap<(i8, i8), BTreeSet<String>> {
    let mut out: BTreeMap<(i8, i8), BTreeSet<String>> = BTreeMap::new();
    for pair in c.dissecting() {
        if let (Some(key), Some(class)) = (flipped_axis_signs(c, pair), &pair.record.class) {
            out.entry(key).or_default().insert(class.clone());
        }
    }
    out
}
