//! Graded face modules `A^k(Δ, Γ) = M_k / Θ·M_{k−1}` where `M_k` is spanned
//! by the degree-k monomials supported on faces of Δ that are not in Γ.

use std::collections::HashMap;

use super::monomial::{monomials_with_support, Monomial};
use crate::complex::RelativeComplex;
use crate::error::{Error, Result};
use crate::exactla::{rref, Field, Rref, SparseMatrix, SparseVec};
use crate::realization::Realization;

/// Guardrail on the number of monomials in one degree.
pub const MONOMIAL_CAP: usize = 500_000;

/// One graded piece: the spanning monomials, the relation space, and the
/// quotient basis (a subset of the monomials).
#[derive(Clone, Debug)]
pub struct Piece<F: Field> {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: Rref<F>,
    basis: Vec<usize>,
    basis_pos: Vec<Option<usize>>,
}

impl<F: Field> Piece<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_monomials(&self) -> usize {
        self.monomials.len()
    }
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }
    /// The monomials whose classes form the basis, in basis order.
    pub fn basis_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.basis.iter().map(|&i| &self.monomials[i])
    }
    pub fn basis_monomial(&self, b: usize) -> &Monomial {
        &self.monomials[self.basis[b]]
    }
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// Normal form of the monomial with index `j` over the quotient basis.
    pub fn normal_form_index(&self, field: &F, j: usize) -> SparseVec<F::Elem> {
        if let Some(b) = self.basis_pos[j] {
            return vec![(b, field.one())];
        }
        let r = self.relations.pivot_row(j).expect("non-basis monomials are pivots");
        let mut out: SparseVec<F::Elem> = self.relations.rows()[r]
            .iter()
            .skip(1)
            .map(|(c, e)| (self.basis_pos[*c].expect("RREF rows vanish on other pivots"), field.neg(e)))
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }

    /// Normal form of an arbitrary monomial; zero when it is not in `M_k`.
    pub fn normal_form(&self, field: &F, m: &Monomial) -> SparseVec<F::Elem> {
        match self.index.get(m) {
            Some(&j) => self.normal_form_index(field, j),
            None => Vec::new(),
        }
    }
}

/// The graded module of a relative pair under a fixed realization.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    field: F,
    pair: RelativeComplex,
    realization: Realization<F>,
    pieces: Vec<Piece<F>>,
}

impl<F: Field> GradedModule<F> {
    /// Builds degrees `0..=top`.
    pub fn build(pair: RelativeComplex, realization: &Realization<F>, top: usize) -> Result<Self> {
        let n = pair.delta.ground_size();
        if realization.num_vertices() < n {
            return Err(Error::DimensionMismatch(format!("realization has {} vertices, complex has {n}", realization.num_vertices())));
        }
        let field = realization.field().clone();
        let mut pieces: Vec<Piece<F>> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let monomials = monomials_with_support(pair.faces(), k);
            if monomials.len() > MONOMIAL_CAP {
                return Err(Error::Limit(format!("{} monomials in degree {k} exceed the cap of {MONOMIAL_CAP}", monomials.len())));
            }
            let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows: Vec<SparseVec<F::Elem>> = Vec::new();
            if k > 0 {
                for m in pieces[k - 1].monomials.iter() {
                    for i in 0..realization.dim() {
                        let mut row: SparseVec<F::Elem> = Vec::new();
                        for v in 0..n {
                            let c = &realization.coord(v)[i];
                            if field.is_zero(c) {
                                continue;
                            }
                            if let Some(&j) = index.get(&m.times_var(v)) {
                                row.push((j, c.clone()));
                            }
                        }
                        if !row.is_empty() {
                            row.sort_by_key(|e| e.0);
                            rows.push(row);
                        }
                    }
                }
            }
            let relations = rref(&SparseMatrix::from_rows(field.clone(), monomials.len(), rows));
            let basis = relations.free_columns();
            let mut basis_pos = vec![None; monomials.len()];
            for (b, &j) in basis.iter().enumerate() {
                basis_pos[j] = Some(b);
            }
            pieces.push(Piece { monomials, index, relations, basis, basis_pos });
        }
        Ok(GradedModule { field, pair, realization: realization.clone(), pieces })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn pair(&self) -> &RelativeComplex {
        &self.pair
    }
    pub fn realization(&self) -> &Realization<F> {
        &self.realization
    }
    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }
    pub fn piece(&self, k: usize) -> &Piece<F> {
        &self.pieces[k]
    }
    pub fn dim(&self, k: usize) -> usize {
        self.pieces.get(k).map_or(0, Piece::dim)
    }
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Piece::dim).collect()
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if k > self.top() {
            return Err(Error::InvalidParameter(format!("degree {k} beyond the built range 0..={}", self.top())));
        }
        Ok(())
    }

    /// Matrix of multiplication by the linear form `Σ form_v x_v` from
    /// degree k of `self` into degree k+1 of `target`. Pass `self` as target
    /// for the endomorphism of the module.
    pub fn linear_map_into(&self, k: usize, form: &[F::Elem], target: &GradedModule<F>) -> Result<SparseMatrix<F>> {
        self.check_degree(k)?;
        target.check_degree(k + 1)?;
        let f = &self.field;
        let src = &self.pieces[k];
        let tgt = &target.pieces[k + 1];
        let mut triples = Vec::new();
        for (b, m) in src.basis_monomials().enumerate() {
            for (v, c) in form.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                for (i, e) in tgt.normal_form(f, &m.times_var(v)) {
                    triples.push((i, b, f.mul(c, &e)));
                }
            }
        }
        SparseMatrix::from_triples(f.clone(), tgt.dim(), src.dim(), triples)
    }

    pub fn linear_map(&self, k: usize, form: &[F::Elem]) -> Result<SparseMatrix<F>> {
        self.linear_map_into(k, form, self)
    }

    /// Multiplication by a single variable `x_v`.
    pub fn variable_map(&self, k: usize, v: usize) -> Result<SparseMatrix<F>> {
        let mut form = vec![self.field.zero(); self.pair.delta.ground_size()];
        form[v] = self.field.one();
        self.linear_map(k, &form)
    }

    /// `form^p` from degree k to degree k+p, as a product of one-step maps.
    pub fn power_map(&self, k: usize, form: &[F::Elem], p: usize) -> Result<SparseMatrix<F>> {
        self.check_degree(k + p)?;
        let mut acc = SparseMatrix::identity(self.field.clone(), self.dim(k));
        for j in k..k + p {
            acc = self.linear_map(j, form)?.mul(&acc)?;
        }
        Ok(acc)
    }

    /// The map sending each monomial to itself (or to zero when it is not a
    /// spanning monomial of the target) in degree k. Well defined whenever
    /// the target's relations are images of the source's, e.g. for restriction
    /// to a subcomplex or passing from `(Δ, Γ)` to `Δ`.
    pub fn monomial_map_into(&self, k: usize, target: &GradedModule<F>) -> Result<SparseMatrix<F>> {
        self.check_degree(k)?;
        target.check_degree(k)?;
        let f = &self.field;
        let tgt = &target.pieces[k];
        let mut triples = Vec::new();
        for (b, m) in self.pieces[k].basis_monomials().enumerate() {
            for (i, e) in tgt.normal_form(f, m) {
                triples.push((i, b, e));
            }
        }
        SparseMatrix::from_triples(f.clone(), tgt.dim(), self.dim(k), triples)
    }

    /// Class of a polynomial given as (monomial, coefficient) pairs.
    pub fn class_of(&self, k: usize, poly: &[(Monomial, F::Elem)]) -> Vec<F::Elem> {
        let f = &self.field;
        let piece = &self.pieces[k];
        let mut out = vec![f.zero(); piece.dim()];
        for (m, c) in poly {
            for (i, e) in piece.normal_form(f, m) {
                f.add_mul_assign(&mut out[i], c, &e);
            }
        }
        out
    }

    /// Class of a linear form in degree 1.
    pub fn linear_class(&self, form: &[F::Elem]) -> Vec<F::Elem> {
        let poly: Vec<(Monomial, F::Elem)> = form.iter().enumerate().map(|(v, c)| (Monomial::from_vars(vec![v as u8]), c.clone())).collect();
        self.class_of(1, &poly)
    }
}
