use super::field::{Field, FieldKind, PrimeField, Rationals, Scalar};
use crate::error::{Error, Result};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c·b` for sparse vectors.
pub fn axpy<F: Field>(field: &F, a: &[(usize, F::Elem)], c: &F::Elem, b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = field.mul(c, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            field.add_mul_assign(&mut v, c, &b[j].1);
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Dense → sparse, dropping zeros.
pub fn sparsify<F: Field>(field: &F, dense: &[F::Elem]) -> SparseVec<F::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, e)| !field.is_zero(e))
        .map(|(i, e)| (i, e.clone()))
        .collect()
}

/// Sparse → dense of length `n`.
pub fn densify<F: Field>(field: &F, n: usize, v: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, e) in v {
        out[*i] = e.clone();
    }
    out
}

/// Standard dot product of two dense vectors.
pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !field.is_zero(x) && !field.is_zero(y) {
            field.add_mul_assign(&mut acc, x, y);
        }
    }
    acc
}

/// Row-major sparse matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(field: F, nrows: usize, ncols: usize) -> Self {
        SparseMatrix { field, nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let one = field.one();
        let rows = (0..n).map(|i| vec![(i, one.clone())]).collect();
        SparseMatrix { field, nrows: n, ncols: n, rows }
    }

    /// Builds from `(row, col, value)` triples. Repeated positions are summed
    /// and zeros dropped, so the stored form never has duplicates or zeros.
    pub fn from_triples(field: F, nrows: usize, ncols: usize, triples: impl IntoIterator<Item = (usize, usize, F::Elem)>) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triples {
            if r >= nrows || c >= ncols {
                return Err(Error::DimensionMismatch(format!("entry ({r},{c}) outside {nrows}x{ncols}")));
            }
            buckets[r].push((c, v));
        }
        let rows = buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by_key(|e| e.0);
                let mut out: SparseVec<F::Elem> = Vec::with_capacity(b.len());
                for (c, v) in b {
                    match out.last_mut() {
                        Some(last) if last.0 == c => last.1 = field.add(&last.1, &v),
                        _ => out.push((c, v)),
                    }
                }
                out.retain(|(_, v)| !field.is_zero(v));
                out
            })
            .collect();
        Ok(SparseMatrix { field, nrows, ncols, rows })
    }

    /// Builds from sparse rows that are already sorted and zero-free.
    pub fn from_rows(field: F, ncols: usize, rows: Vec<SparseVec<F::Elem>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0) && r.iter().all(|(c, v)| *c < ncols && !field.is_zero(v))));
        SparseMatrix { field, nrows: rows.len(), ncols, rows }
    }

    pub fn from_dense(field: F, ncols: usize, dense: &[Vec<F::Elem>]) -> Self {
        let rows = dense.iter().map(|r| sparsify(&field, r)).collect();
        SparseMatrix { field, nrows: dense.len(), ncols, rows }
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(field: F, nrows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut rows: Vec<SparseVec<F::Elem>> = vec![Vec::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            for (i, e) in col.iter().enumerate() {
                if !field.is_zero(e) {
                    rows[i].push((j, e.clone()));
                }
            }
        }
        SparseMatrix { field, nrows, ncols: cols.len(), rows }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nrows(&self) -> usize {
        self.nrows
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }
    pub fn row(&self, i: usize) -> &[(usize, F::Elem)] {
        &self.rows[i]
    }
    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.rows[r][i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn push_row(&mut self, row: SparseVec<F::Elem>) {
        self.rows.push(row);
        self.nrows += 1;
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &F::Elem)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.ncols];
        for (r, c, v) in self.triples() {
            rows[c].push((r, v.clone()));
        }
        SparseMatrix { field: self.field.clone(), nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        self.rows.iter().map(|r| densify(&self.field, self.ncols, r)).collect()
    }

    /// Column `j` as a dense vector.
    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(x.len(), self.ncols, "vector length mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut acc = self.field.zero();
                for (c, v) in row {
                    if !self.field.is_zero(&x[*c]) {
                        self.field.add_mul_assign(&mut acc, v, &x[*c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix<F>) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let f = &self.field;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: SparseVec<F::Elem> = Vec::new();
                for (k, a) in row {
                    acc = axpy(f, &acc, a, &other.rows[*k]);
                }
                acc
            })
            .collect();
        Ok(SparseMatrix { field: f.clone(), nrows: self.nrows, ncols: other.ncols, rows })
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &F::Elem, other: &SparseMatrix<F>) -> Result<Self> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch("shape mismatch in matrix sum".into()));
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| axpy(&self.field, a, c, b)).collect();
        Ok(SparseMatrix { field: self.field.clone(), nrows: self.nrows, ncols: self.ncols, rows })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &SparseMatrix<F>) -> Result<Self> {
        if self.ncols != other.ncols {
            return Err(Error::DimensionMismatch("column counts differ in vstack".into()));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(SparseMatrix { field: self.field.clone(), nrows: rows.len(), ncols: self.ncols, rows })
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &SparseMatrix<F>) -> Result<Self> {
        if self.nrows != other.nrows {
            return Err(Error::DimensionMismatch("row counts differ in hstack".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(c, v)| (c + self.ncols, v.clone())));
                r
            })
            .collect();
        Ok(SparseMatrix { field: self.field.clone(), nrows: self.nrows, ncols: self.ncols + other.ncols, rows })
    }

    /// Restriction to the given columns, renumbered in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.ncols];
        for (i, c) in cols.iter().enumerate() {
            pos[*c] = i;
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out: SparseVec<F::Elem> = r.iter().filter(|(c, _)| pos[*c] != usize::MAX).map(|(c, v)| (pos[*c], v.clone())).collect();
                out.sort_by_key(|e| e.0);
                out
            })
            .collect();
        SparseMatrix { field: self.field.clone(), nrows: self.nrows, ncols: cols.len(), rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows == self.ncols && self.transpose() == *self
    }

    /// Entries as detached scalars, row-major.
    pub fn to_scalar_rows(&self) -> Vec<Vec<Scalar>> {
        self.to_dense().iter().map(|r| r.iter().map(|e| self.field.to_scalar(e)).collect()).collect()
    }
}

/// A matrix whose field is chosen at runtime from its entries.
#[derive(Clone, Debug)]
pub enum AnyMatrix {
    Rational(SparseMatrix<Rationals>),
    Prime(SparseMatrix<PrimeField>),
}

impl AnyMatrix {
    /// Builds from detached scalars. All entries must live in one field;
    /// an all-zero input is read as rational.
    pub fn from_scalar_triples(nrows: usize, ncols: usize, triples: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut kind: Option<FieldKind> = None;
        for (_, _, s) in triples {
            let k = s.kind();
            match kind {
                None => kind = Some(k),
                Some(prev) if prev != k => {
                    return Err(Error::MixedField(format!("entries over {prev} and {k}")));
                }
                _ => {}
            }
        }
        match kind.unwrap_or(FieldKind::Rational) {
            FieldKind::Rational => {
                let t = triples.iter().map(|(r, c, s)| match s {
                    Scalar::Rational(q) => (*r, *c, q.clone()),
                    Scalar::Prime { .. } => unreachable!(),
                });
                Ok(AnyMatrix::Rational(SparseMatrix::from_triples(Rationals, nrows, ncols, t)?))
            }
            FieldKind::Prime(p) => {
                let f = PrimeField::new(p)?;
                let t = triples.iter().map(|(r, c, s)| match s {
                    Scalar::Prime { value, .. } => (*r, *c, *value),
                    Scalar::Rational(_) => unreachable!(),
                });
                Ok(AnyMatrix::Prime(SparseMatrix::from_triples(f, nrows, ncols, t)?))
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => super::rank(m),
            AnyMatrix::Prime(m) => super::rank(m),
        }
    }
}
