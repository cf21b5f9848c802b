//! Reduced row echelon forms. Large inputs go through sparse elimination with
//! rows fed in order of increasing fill; small ones through dense
//! Gauss–Jordan. Both produce the same (unique) RREF.

use super::dense;
use super::field::Field;
use super::sparse::{axpy, SparseMatrix, SparseVec};

/// Below this size in both dimensions elimination runs densely.
pub const DENSE_CUTOFF: usize = 200;

/// A matrix in reduced row echelon form: every row has leading coefficient 1
/// at its pivot column, and pivot columns are zero in all other rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivots: Vec<usize>,
    /// `pivot_row[c]` = index of the row with pivot `c`.
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Rref<F> {
    pub(crate) fn from_reduced_rows(field: F, ncols: usize, mut rows: Vec<SparseVec<F::Elem>>) -> Self {
        rows.sort_by_key(|r| r[0].0);
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut pivot_row = vec![None; ncols];
        for (i, p) in pivots.iter().enumerate() {
            pivot_row[*p] = Some(i);
        }
        Rref { field, ncols, rows, pivots, pivot_row }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivot_row[col]
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| self.pivot_row[*c].is_none()).collect()
    }

    /// Reduces `v` against the row space; the remainder is zero on every
    /// pivot column, and is zero iff `v` lies in the row space.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut out = v.to_vec();
        // Rows are fully reduced, so one pass over v's own pivot entries
        // suffices; subtracting a row never creates entries at other pivots.
        let hits: Vec<(usize, F::Elem)> = v.iter().filter_map(|(c, e)| self.pivot_row[*c].map(|r| (r, e.clone()))).collect();
        for (r, e) in hits {
            out = axpy(&self.field, &out, &self.field.neg(&e), &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of the right kernel of the original matrix, one vector per free
    /// column `f`: `e_f − Σ row_i[f]·e_{pivot_i}`.
    pub fn kernel_vectors(&self) -> Vec<SparseVec<F::Elem>> {
        let f = &self.field;
        let free = self.free_columns();
        let mut by_free: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.ncols];
        for (i, row) in self.rows.iter().enumerate() {
            for (c, e) in row.iter().skip(1) {
                by_free[*c].push((self.pivots[i], f.neg(e)));
            }
        }
        free.into_iter()
            .map(|c| {
                let mut v = std::mem::take(&mut by_free[c]);
                v.push((c, f.one()));
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }

    pub fn to_matrix(&self) -> SparseMatrix<F> {
        SparseMatrix::from_rows(self.field.clone(), self.ncols, self.rows.clone())
    }
}

/// Reduced row echelon form of `m`.
pub fn rref<F: Field>(m: &SparseMatrix<F>) -> Rref<F> {
    if m.nrows() < DENSE_CUTOFF && m.ncols() < DENSE_CUTOFF {
        dense_rref(m)
    } else {
        sparse_rref(m)
    }
}

/// Dense Gauss–Jordan path.
pub fn dense_rref<F: Field>(m: &SparseMatrix<F>) -> Rref<F> {
    let field = m.field().clone();
    let mut a = m.to_dense();
    dense::gauss_jordan(&field, &mut a, m.ncols());
    let rows = a.iter().map(|r| super::sparse::sparsify(&field, r)).filter(|r| !r.is_empty()).collect();
    Rref::from_reduced_rows(field, m.ncols(), rows)
}

/// Sparse elimination path.
pub fn sparse_rref<F: Field>(m: &SparseMatrix<F>) -> Rref<F> {
    let field = m.field().clone();
    let ncols = m.ncols();
    let mut order: Vec<usize> = (0..m.nrows()).filter(|&i| !m.row(i).is_empty()).collect();
    // Sparse rows first: a cheap stand-in for Markowitz pivot selection that
    // keeps fill-in low on the near-diagonal relation matrices seen here.
    order.sort_by_key(|&i| (m.row(i).len(), i));

    let mut rows: Vec<SparseVec<F::Elem>> = Vec::new();
    let mut pivot_of: Vec<Option<usize>> = vec![None; ncols];
    for i in order {
        let mut v = m.row(i).to_vec();
        let mut pos = 0;
        while pos < v.len() {
            let c = v[pos].0;
            match pivot_of[c] {
                Some(r) => {
                    let coef = field.neg(&v[pos].1);
                    v = axpy(&field, &v, &coef, &rows[r]);
                    // entries before `pos` are untouched: rows[r] starts at c
                }
                None => pos += 1,
            }
        }
        if v.is_empty() {
            continue;
        }
        let inv = field.inv(&v[0].1).expect("nonzero leading entry");
        for e in v.iter_mut() {
            e.1 = field.mul(&e.1, &inv);
        }
        pivot_of[v[0].0] = Some(rows.len());
        rows.push(v);
    }

    // Back substitution, highest pivot first, so each row only meets rows
    // that are already fully reduced.
    let mut idx: Vec<usize> = (0..rows.len()).collect();
    idx.sort_by_key(|&r| std::cmp::Reverse(rows[r][0].0));
    for &r in &idx {
        let hits: Vec<(usize, F::Elem)> = rows[r]
            .iter()
            .skip(1)
            .filter_map(|(c, e)| pivot_of[*c].map(|pr| (pr, e.clone())))
            .collect();
        if hits.is_empty() {
            continue;
        }
        let mut v = rows[r].clone();
        for (pr, e) in hits {
            v = axpy(&field, &v, &field.neg(&e), &rows[pr]);
        }
        rows[r] = v;
    }
    Rref::from_reduced_rows(field, ncols, rows)
}

/// Exact rank.
pub fn rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    rref(m).rank()
}
