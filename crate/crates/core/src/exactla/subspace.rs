use super::echelon::{rref, Rref};
use super::field::Field;
use super::sparse::{densify, sparsify, SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// A linear subspace of `F^n`, stored by the RREF of a spanning set. The
/// representation is canonical, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Rref<F>,
}

impl<F: Field> Subspace<F> {
    pub fn span(field: F, ambient: usize, vectors: Vec<SparseVec<F::Elem>>) -> Self {
        let m = SparseMatrix::from_rows(field, ambient, vectors);
        Subspace { ambient, basis: rref(&m) }
    }

    pub fn span_dense(field: F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        let rows = vectors.iter().map(|v| sparsify(&field, v)).collect();
        Self::span(field, ambient, rows)
    }

    pub fn zero(field: F, ambient: usize) -> Self {
        Self::span(field, ambient, Vec::new())
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let one = field.one();
        Self::span(field, ambient, (0..ambient).map(|i| vec![(i, one.clone())]).collect())
    }

    /// Row space of `m`.
    pub fn row_space(m: &SparseMatrix<F>) -> Self {
        Subspace { ambient: m.ncols(), basis: rref(m) }
    }

    /// Column space of `m`.
    pub fn column_space(m: &SparseMatrix<F>) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
    pub fn echelon(&self) -> &Rref<F> {
        &self.basis
    }
    pub fn basis(&self) -> &[SparseVec<F::Elem>] {
        self.basis.rows()
    }

    pub fn basis_dense(&self) -> Vec<Vec<F::Elem>> {
        self.basis.rows().iter().map(|r| densify(self.field(), self.ambient, r)).collect()
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.basis.contains(v)
    }

    pub fn contains_dense(&self, v: &[F::Elem]) -> bool {
        self.contains(&sparsify(self.field(), v))
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && self.basis().iter().all(|b| other.contains(b))
    }

    /// Indices complementary to the pivots: a basis of the quotient
    /// `F^n / self` is given by the images of these unit vectors.
    pub fn complement_indices(&self) -> Vec<usize> {
        self.basis.free_columns()
    }

    /// Coordinates of the class of `v` in `F^n / self`, over the basis from
    /// [`complement_indices`](Self::complement_indices).
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let rem = densify(self.field(), self.ambient, &self.basis.reduce(&sparsify(self.field(), v)));
        self.complement_indices().into_iter().map(|c| rem[c].clone()).collect()
    }

    /// Coordinates of `v ∈ self` over the RREF basis, or `None` if `v ∉ self`.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains_dense(v) {
            return None;
        }
        Some(self.basis.pivots().iter().map(|p| v[*p].clone()).collect())
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!("ambient {} vs {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Self> {
        self.check_ambient(other)?;
        let mut rows = self.basis().to_vec();
        rows.extend(other.basis().iter().cloned());
        Ok(Self::span(self.field().clone(), self.ambient, rows))
    }

    /// Linear functionals vanishing on `self`, as a subspace of the dual.
    pub fn annihilator(&self) -> Self {
        let field = self.field().clone();
        let ker = self.basis.kernel_vectors();
        Self::span(field, self.ambient, ker)
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{x : a^T G x = 0 for all a ∈ self}`.
    pub fn orthogonal_complement(&self, gram: &SparseMatrix<F>) -> Result<Self> {
        if gram.nrows() != self.ambient || gram.ncols() != self.ambient {
            return Err(Error::DimensionMismatch("gram matrix does not match ambient dimension".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidParameter("gram matrix is not symmetric".into()));
        }
        let a = SparseMatrix::from_rows(self.field().clone(), self.ambient, self.basis().to_vec());
        Ok(kernel(&a.mul(gram)?))
    }

    /// Image under the linear map `m` (acting on column vectors).
    pub fn image(&self, m: &SparseMatrix<F>) -> Result<Self> {
        if m.ncols() != self.ambient {
            return Err(Error::DimensionMismatch("map domain differs from ambient space".into()));
        }
        let field = self.field().clone();
        let vecs = self.basis_dense().iter().map(|b| sparsify(&field, &m.mul_vec(b))).collect();
        Ok(Self::span(field, m.nrows(), vecs))
    }

    /// Preimage of `target` under `m`.
    pub fn preimage(m: &SparseMatrix<F>, target: &Subspace<F>) -> Result<Self> {
        if m.nrows() != target.ambient {
            return Err(Error::DimensionMismatch("map codomain differs from target ambient".into()));
        }
        // x ∈ preimage iff every annihilating functional of target kills m·x
        let ann = target.annihilator();
        let f = SparseMatrix::from_rows(m.field().clone(), target.ambient, ann.basis().to_vec());
        Ok(kernel(&f.mul(m)?))
    }
}

/// Right null space of `m`.
pub fn kernel<F: Field>(m: &SparseMatrix<F>) -> Subspace<F> {
    let e = rref(m);
    Subspace::span(m.field().clone(), m.ncols(), e.kernel_vectors())
}

/// Image (column space) of `m`.
pub fn image<F: Field>(m: &SparseMatrix<F>) -> Subspace<F> {
    Subspace::column_space(m)
}
