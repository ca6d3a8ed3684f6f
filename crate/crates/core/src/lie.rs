//! Real Lie algebras given by rational structure constants on a labeled basis.

use num_traits::{One, Zero};
use qlinalg::{Inertia, Matrix, Rational, Subspace};

use crate::{CoreError, Result};

/// Sparse coordinate vector: `(basis index, coefficient)` with nonzero coefficients.
type Sparse = Vec<(usize, Rational)>;

/// Faithful matrix realization: one `n x n` matrix per basis vector, all
/// antisymmetric with respect to `form` (`x^T J + J x = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    matrices: Vec<Matrix>,
    form: Matrix,
    // Entry positions that determine coordinates, and the inverse of the
    // transposed submatrix at those positions.
    pivots: Vec<usize>,
    inverse: Matrix,
}

impl Realization {
    pub fn new(matrices: Vec<Matrix>, form: Matrix) -> Result<Self> {
        let n = form.rows();
        if !form.is_square() {
            return Err(CoreError::BadRealization("form is not square".into()));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(CoreError::BadRealization(format!("matrix {i} has the wrong size")));
            }
            if !(&(&m.transpose() * &form) + &(&form * m)).is_zero() {
                return Err(CoreError::BadRealization(format!(
                    "matrix {i} does not preserve the form"
                )));
            }
        }
        let flat: Vec<Vec<Rational>> = matrices.iter().map(|m| m.entries().to_vec()).collect();
        let stacked = Matrix::from_rows(n * n, &flat)?;
        let (_, pivots) = stacked.rref();
        if pivots.len() != matrices.len() {
            return Err(CoreError::BadRealization("matrices are linearly dependent".into()));
        }
        let sub = Matrix::from_fn(matrices.len(), matrices.len(), |a, b| stacked[(b, pivots[a])].clone());
        let inverse = sub.inverse()?;
        Ok(Self {
            matrices,
            form,
            pivots,
            inverse,
        })
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    /// Size `n` of the realizing matrices.
    pub fn size(&self) -> usize {
        self.form.rows()
    }

    pub fn realize(&self, coords: &[Rational]) -> Matrix {
        let n = self.size();
        let mut out = Matrix::zeros(n, n);
        for (c, m) in coords.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// Coordinates of `x` in the realized basis, if `x` lies in the span.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vec<Rational>> {
        if x.rows() != self.size() || x.cols() != self.size() {
            return None;
        }
        let entries: Vec<Rational> = self.pivots.iter().map(|&p| x.entries()[p].clone()).collect();
        let coords = self.inverse.mul_vec(&entries);
        (self.realize(&coords) == *x).then_some(coords)
    }
}

/// An element of a Lie algebra, as a coordinate vector on its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Finite-dimensional Lie algebra over `Q` with
/// `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<Sparse>,
    realization: Option<Realization>,
    summands: Vec<usize>,
}

fn sparse_of(v: &[Rational]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

impl LieAlgebra {
    /// Builds and validates an algebra from the dense tensor `c`, flattened as
    /// `c[(i * dim + j) * dim + k]`.
    pub fn from_dense(labels: Vec<String>, c: &[Rational]) -> Result<Self> {
        let n = labels.len();
        if c.len() != n * n * n {
            return Err(CoreError::InvalidArgument(format!(
                "expected {} structure constants, got {}",
                n * n * n,
                c.len()
            )));
        }
        let table = (0..n * n)
            .map(|ij| sparse_of(&c[ij * n..(ij + 1) * n]))
            .collect();
        Self::from_table(labels, table, None)
    }

    /// Builds an algebra from a list of bracket entries `(i, j, k, value)`
    /// meaning `[b_i, b_j]` has coefficient `value` on `b_k` (0-based).
    /// Entries for `[b_j, b_i]` are filled in by antisymmetry; an explicit
    /// entry that contradicts antisymmetry is an error.
    pub fn from_brackets(labels: Vec<String>, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let n = labels.len();
        let mut dense: Vec<Option<Rational>> = vec![None; n * n * n];
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(CoreError::InvalidArgument(format!(
                    "bracket index out of range in ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if i == j && !v.is_zero() {
                return Err(CoreError::NotAntisymmetric { i, j, k });
            }
            for (idx, val) in [((i * n + j) * n + k, v.clone()), ((j * n + i) * n + k, -v.clone())] {
                match &dense[idx] {
                    Some(old) if *old != val => return Err(CoreError::NotAntisymmetric { i, j, k }),
                    _ => dense[idx] = Some(val),
                }
            }
        }
        let c: Vec<Rational> = dense.into_iter().map(Option::unwrap_or_default).collect();
        Self::from_dense(labels, &c)
    }

    /// Builds the algebra spanned by the given matrices, which must be closed
    /// under the commutator and preserve `form`.
    pub fn from_matrices(labels: Vec<String>, matrices: Vec<Matrix>, form: Matrix) -> Result<Self> {
        if labels.len() != matrices.len() {
            return Err(CoreError::InvalidArgument("one label per matrix is required".into()));
        }
        let realization = Realization::new(matrices, form)?;
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let m = &realization.matrices[i];
                let comm = m.commutator(&realization.matrices[j]);
                let coords = realization
                    .coordinates(&comm)
                    .ok_or_else(|| CoreError::BadRealization(format!("[{}, {}] leaves the span", labels[i], labels[j])))?;
                table.push(sparse_of(&coords));
            }
        }
        Self::from_table(labels, table, Some(realization))
    }

    /// The `dim`-dimensional abelian algebra.
    pub fn abelian(dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("a{i}")).collect();
        Self::from_table(labels, vec![Vec::new(); dim * dim], None).expect("abelian algebra is valid")
    }

    fn from_table(labels: Vec<String>, table: Vec<Sparse>, realization: Option<Realization>) -> Result<Self> {
        let n = labels.len();
        let g = Self {
            labels,
            table,
            realization,
            summands: vec![n],
        };
        g.validate()?;
        Ok(g)
    }

    /// Exact antisymmetry and Jacobi checks on all basis pairs and triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let a = self.bracket_basis(i, j);
                let b = self.bracket_basis(j, i);
                let mut sum = vec![Rational::zero(); n];
                for (k, v) in a.iter().chain(b) {
                    sum[*k] += v;
                }
                if let Some(k) = sum.iter().position(|x| !x.is_zero()) {
                    return Err(CoreError::NotAntisymmetric { i, j, k });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut sum = vec![Rational::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, v) in self.bracket_basis(a, b) {
                            for (l, w) in self.bracket_basis(*m, c) {
                                sum[*l] += v * w;
                            }
                        }
                    }
                    if sum.iter().any(|x| !x.is_zero()) {
                        return Err(CoreError::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        if let Some(r) = &self.realization {
            for i in 0..n {
                for j in i + 1..n {
                    let comm = r.matrices[i].commutator(&r.matrices[j]);
                    if comm != r.realize(&self.bracket_vec(&self.unit(i), &self.unit(j))) {
                        return Err(CoreError::BadRealization(format!(
                            "commutator of {} and {} disagrees with the structure constants",
                            self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    /// Dimensions of the direct summands this algebra was assembled from.
    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    }

    /// Dense structure tensor, flattened as `c[(i * dim + j) * dim + k]`.
    pub fn structure_constants(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n * n * n];
        for (ij, row) in self.table.iter().enumerate() {
            for (k, v) in row {
                out[ij * n + k] = v.clone();
            }
        }
        out
    }

    /// True iff both algebras have identical structure constants on their bases.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }

    pub(crate) fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub(crate) fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::new(self.unit(i))
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element> {
        self.check_len(coords.len())?;
        Ok(Element::new(coords))
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(CoreError::AlgebraMismatch {
                expected: self.dim(),
                found,
            });
        }
        Ok(())
    }

    /// Bracket of coordinate vectors; both must have length `dim`.
    pub fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(x.len(), self.dim());
        debug_assert_eq!(y.len(), self.dim());
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, v) in self.bracket_basis(i, j) {
                    out[*k] += &ab * v;
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_len(x.coords.len())?;
        self.check_len(y.coords.len())?;
        Ok(Element::new(self.bracket_vec(&x.coords, &y.coords)))
    }

    /// Matrix of `ad x` acting on coordinate columns: `ad(x)[k][j] = sum_i x_i c[i][j][k]`.
    pub fn ad_vec(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for j in 0..n {
                for (k, v) in self.bracket_basis(i, j) {
                    m[(*k, j)] += a * v;
                }
            }
        }
        m
    }

    pub fn ad(&self, x: &Element) -> Result<Matrix> {
        self.check_len(x.coords.len())?;
        Ok(self.ad_vec(&x.coords))
    }

    /// `kappa(x, y) = tr(ad x ad y)` on the basis.
    pub fn killing(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_vec(&self.unit(i))).collect();
        let mut k = Matrix::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let mut t = Rational::zero();
                for r in 0..n {
                    for c in 0..n {
                        let x = &ads[a][(r, c)];
                        if !x.is_zero() {
                            let y = &ads[b][(c, r)];
                            if !y.is_zero() {
                                t += x * y;
                            }
                        }
                    }
                }
                k[(a, b)] = t.clone();
                k[(b, a)] = t;
            }
        }
        k
    }

    pub fn killing_signature(&self) -> Inertia {
        self.killing().signature().expect("Killing form is symmetric")
    }

    /// Cartan's criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.killing().rank() == self.dim()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        self.check_len(s.ambient_dim())
    }

    /// `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for v in s.basis() {
            stacked = stacked.vstack(&self.ad_vec(&v))?;
        }
        Ok(stacked.kernel())
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim())).expect("full space has ambient dim")
    }

    /// Span of `[a, b]` for `a` in `s1`, `b` in `s2`.
    pub fn bracket_span(&self, s1: &Subspace, s2: &Subspace) -> Result<Subspace> {
        self.check_subspace(s1)?;
        self.check_subspace(s2)?;
        let mut vectors = Vec::new();
        for a in s1.basis() {
            for b in s2.basis() {
                let v = self.bracket_vec(&a, &b);
                if v.iter().any(|x| !x.is_zero()) {
                    vectors.push(v);
                }
            }
        }
        Ok(Subspace::span(self.dim(), &vectors)?)
    }

    /// `[g, g]`.
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_span(&full, &full).expect("same ambient")
    }

    /// `[g, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        let full = Subspace::full(self.dim());
        Ok(s.contains_subspace(&self.bracket_span(&full, s)?))
    }

    /// `[S, S] ⊆ S`.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        Ok(s.contains_subspace(&self.bracket_span(s, s)?))
    }

    /// Structure constants of a subalgebra in the RREF basis of `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Self> {
        self.check_subspace(s)?;
        let basis = s.basis();
        let m = basis.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &basis {
            for b in &basis {
                let coords = s
                    .coordinates(&self.bracket_vec(a, b))
                    .ok_or(CoreError::NotSubalgebra)?;
                table.push(sparse_of(&coords));
            }
        }
        let labels = basis.iter().enumerate().map(|(i, v)| self.vector_label(v, i)).collect();
        let realization = match &self.realization {
            Some(r) => Some(Realization::new(
                basis.iter().map(|v| r.realize(v)).collect(),
                r.form.clone(),
            )?),
            None => None,
        };
        Self::from_table(labels, table, realization)
    }

    /// Label of a basis vector if it is a coordinate vector, otherwise `y{i+1}`.
    fn vector_label(&self, v: &[Rational], i: usize) -> String {
        let nz: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
        match nz.as_slice() {
            [k] if v[*k].is_one() => self.labels[*k].clone(),
            _ => format!("y{}", i + 1),
        }
    }

    /// New algebra whose `j`-th basis vector is column `j` of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(CoreError::AlgebraMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p.inverse().map_err(|_| CoreError::NotInvertible)?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &cols {
            for b in &cols {
                table.push(sparse_of(&inv.mul_vec(&self.bracket_vec(a, b))));
            }
        }
        let labels = cols.iter().enumerate().map(|(i, v)| self.vector_label(v, i)).collect();
        let realization = match &self.realization {
            Some(r) => Some(Realization::new(
                cols.iter().map(|v| r.realize(v)).collect(),
                r.form.clone(),
            )?),
            None => None,
        };
        let mut g = Self::from_table(labels, table, realization)?;
        if p.is_identity() {
            g.summands = self.summands.clone();
        }
        Ok(g)
    }

    /// Same structure constants with new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        self.check_len(labels.len())?;
        let mut g = self.clone();
        g.labels = labels;
        Ok(g)
    }

    /// Same algebra without the matrix realization.
    pub fn without_realization(&self) -> Self {
        let mut g = self.clone();
        g.realization = None;
        g
    }

    /// Algebra with structure constants negated exactly when both basis
    /// vectors satisfy `minus`; used for the duality constructions.
    pub(crate) fn sign_twisted(&self, minus: &[bool], labels: Vec<String>) -> Result<Self> {
        let n = self.dim();
        let table = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let row = self.table[ij].clone();
                if minus[i] && minus[j] {
                    row.into_iter().map(|(k, v)| (k, -v)).collect()
                } else {
                    row
                }
            })
            .collect();
        Self::from_table(labels, table, None)
    }

    /// `g1 ⊕ g2` with block structure constants and vanishing cross brackets.
    pub fn direct_sum(g1: &Self, g2: &Self) -> Self {
        let (n1, n2) = (g1.dim(), g2.dim());
        let n = n1 + n2;
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                table[i * n + j] = g1.bracket_basis(i, j).to_vec();
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                table[(n1 + i) * n + n1 + j] = g2
                    .bracket_basis(i, j)
                    .iter()
                    .map(|(k, v)| (n1 + k, v.clone()))
                    .collect();
            }
        }
        let labels = g1
            .labels
            .iter()
            .map(|l| format!("{l}.1"))
            .chain(g2.labels.iter().map(|l| format!("{l}.2")))
            .collect();
        let realization = match (&g1.realization, &g2.realization) {
            (Some(r1), Some(r2)) => {
                let (s1, s2) = (r1.size(), r2.size());
                let embed = |m: &Matrix, off: usize| {
                    Matrix::from_fn(s1 + s2, s1 + s2, |a, b| {
                        if a >= off && b >= off && a - off < m.rows() && b - off < m.cols() {
                            m[(a - off, b - off)].clone()
                        } else {
                            Rational::zero()
                        }
                    })
                };
                let matrices = r1
                    .matrices
                    .iter()
                    .map(|m| embed(m, 0))
                    .chain(r2.matrices.iter().map(|m| embed(m, s1)))
                    .collect();
                let form = &embed(&r1.form, 0) + &embed(&r2.form, s1);
                Some(Realization::new(matrices, form).expect("block realization is consistent"))
            }
            _ => None,
        };
        let summands = g1.summands.iter().chain(&g2.summands).copied().collect();
        Self {
            labels,
            table,
            realization,
            summands,
        }
    }
}
