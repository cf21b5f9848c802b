use super::socle::Gorenstein;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use super::monomial::Monomial;
use crate::exactla::{kernel, sparse::{densify, sparsify}, Field, SparseMatrix, SparseVec, Subspace};

/// Classes in `B^k` of all degree-k monomials supported on faces.
pub fn monomial_classes<F: Field>(ring: &Gorenstein<F>, k: usize) -> Vec<(Monomial, SparseVec<F::Elem>)> {
    let f = ring.field();
    let piece = ring.algebra().module().piece(k);
    piece
        .monomials()
        .iter()
        .enumerate()
        .map(|(j, m)| {
            let nf = densify(f, piece.dim(), &piece.normal_form_index(f, j));
            (m.clone(), sparsify(f, &ring.reduce(k, &nf)))
        })
        .collect()
}

/// The squarefree monomial ideal `K^*(Σ, Δ′)`: the kernel of restriction to
/// a subcomplex Δ′, spanned by the classes of monomials whose support is not
/// a face of Δ′. Stored per degree as a subspace of `B^k`.
#[derive(Clone, Debug)]
pub struct MonomialIdeal<F: Field> {
    sub: SimplicialComplex,
    spaces: Vec<Subspace<F>>,
}

impl<F: Field> MonomialIdeal<F> {
    pub fn new(ring: &Gorenstein<F>, sub: &SimplicialComplex) -> Result<Self> {
        let alg = ring.algebra();
        if !sub.is_subcomplex_of(alg.complex()) {
            return Err(Error::NotSubcomplex("Δ′ must be a subcomplex of the ambient complex on its ground set".into()));
        }
        let f = ring.field().clone();
        let spaces = (0..=ring.top())
            .map(|k| {
                let gens = monomial_classes(ring, k).into_iter().filter(|(m, _)| !sub.is_face(m.support())).map(|(_, v)| v).collect();
                Subspace::span(f.clone(), ring.dim(k), gens)
            })
            .collect();
        Ok(MonomialIdeal { sub: sub.clone(), spaces })
    }

    pub fn subcomplex(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn space(&self, k: usize) -> &Subspace<F> {
        &self.spaces[k]
    }

    /// κ_k = dim K^k.
    pub fn kappa(&self, k: usize) -> usize {
        self.spaces.get(k).map_or(0, Subspace::dim)
    }

    pub fn kappas(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// `Ann(K)^k = {a ∈ B^k : a·K^j = 0 for all j ≤ d − k}`.
    pub fn annihilator(&self, ring: &Gorenstein<F>, k: usize) -> Result<Subspace<F>> {
        let f = ring.field().clone();
        let mut stacked = SparseMatrix::zeros(f.clone(), 0, ring.dim(k));
        let d = ring.d().min(ring.top());
        for j in 0..=d.saturating_sub(k) {
            for y in self.spaces[j].basis_dense() {
                // rows: coordinates of a·y as a ranges over the basis of B^k
                let cols: Vec<Vec<F::Elem>> = ring.basis(k).iter().map(|a| ring.mul(a, k, &y, j)).collect::<Result<_>>()?;
                stacked = stacked.vstack(&SparseMatrix::from_columns(f.clone(), ring.dim(k + j), &cols))?;
            }
        }
        Ok(kernel(&stacked))
    }
}
