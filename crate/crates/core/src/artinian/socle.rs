use super::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel, Field, SparseMatrix, Subspace};

/// The quotient `B^* = A^* / Soc°` by the interior socle
/// (`Soc^k = ∩_v ker x_v` for `k < d`, and `Soc°^d = 0`).
///
/// For homology spheres the interior socle vanishes and `B = A`; the
/// [`assume_gorenstein`](Self::assume_gorenstein) constructor skips the
/// socle computation in that case and permits partially built algebras.
#[derive(Clone, Debug)]
pub struct Gorenstein<F: Field> {
    alg: GradedAlgebra<F>,
    socle: Vec<Subspace<F>>,
    comp: Vec<Vec<usize>>,
}

impl<F: Field> Gorenstein<F> {
    /// Computes the interior socle and the quotient. Needs degrees `0..=d`.
    pub fn new(alg: GradedAlgebra<F>) -> Result<Self> {
        let d = alg.d();
        if alg.top() < d {
            return Err(Error::InvalidParameter("socle quotient needs the algebra built through degree d".into()));
        }
        let f = alg.field().clone();
        let verts = alg.complex().vertices();
        let mut socle = Vec::with_capacity(d + 1);
        for k in 0..=d {
            if k == d {
                socle.push(Subspace::zero(f.clone(), alg.dim(d)));
                continue;
            }
            let mut stacked = SparseMatrix::zeros(f.clone(), 0, alg.dim(k));
            for &v in &verts {
                stacked = stacked.vstack(&alg.variable_map(k, v)?)?;
            }
            socle.push(kernel(&stacked));
        }
        let comp = socle.iter().map(Subspace::complement_indices).collect();
        Ok(Gorenstein { alg, socle, comp })
    }

    /// Treats `A` as its own Gorenstein quotient (no socle computation).
    pub fn assume_gorenstein(alg: GradedAlgebra<F>) -> Self {
        let f = alg.field().clone();
        let socle: Vec<Subspace<F>> = (0..=alg.top()).map(|k| Subspace::zero(f.clone(), alg.dim(k))).collect();
        let comp = socle.iter().map(Subspace::complement_indices).collect();
        Gorenstein { alg, socle, comp }
    }

    pub fn algebra(&self) -> &GradedAlgebra<F> {
        &self.alg
    }
    pub fn field(&self) -> &F {
        self.alg.field()
    }
    pub fn d(&self) -> usize {
        self.alg.d()
    }
    pub fn top(&self) -> usize {
        self.alg.top()
    }
    pub fn n(&self) -> usize {
        self.alg.n()
    }

    /// `Soc°^k` inside `A^k`.
    pub fn socle(&self, k: usize) -> &Subspace<F> {
        &self.socle[k]
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.comp.get(k).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.comp.iter().map(Vec::len).collect()
    }

    /// `A^k → B^k`.
    pub fn reduce(&self, k: usize, a: &[F::Elem]) -> Vec<F::Elem> {
        self.socle[k].quotient_coords(a)
    }

    /// A representative in `A^k` of a class in `B^k`.
    pub fn lift(&self, k: usize, b: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = vec![f.zero(); self.alg.dim(k)];
        for (i, &c) in self.comp[k].iter().enumerate() {
            out[c] = b[i].clone();
        }
        out
    }

    pub fn mul(&self, a: &[F::Elem], i: usize, b: &[F::Elem], j: usize) -> Result<Vec<F::Elem>> {
        let p = self.alg.mul(&self.lift(i, a), i, &self.lift(j, b), j)?;
        Ok(self.reduce(i + j, &p))
    }

    pub fn linear(&self, form: &[F::Elem]) -> Vec<F::Elem> {
        self.reduce(1, &self.alg.linear(form))
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.reduce(0, &self.alg.one())
    }

    /// Conjugates an `A`-level map `A^i → A^j` to `B^i → B^j`.
    fn descend(&self, m: &SparseMatrix<F>, i: usize, j: usize) -> Result<SparseMatrix<F>> {
        if self.socle[i].is_zero() && self.socle[j].is_zero() {
            return Ok(m.clone());
        }
        let f = self.field();
        let cols: Vec<Vec<F::Elem>> = (0..self.dim(i))
            .map(|b| {
                let mut e = vec![f.zero(); self.dim(i)];
                e[b] = f.one();
                self.reduce(j, &m.mul_vec(&self.lift(i, &e)))
            })
            .collect();
        Ok(SparseMatrix::from_columns(f.clone(), self.dim(j), &cols))
    }

    pub fn linear_map(&self, k: usize, form: &[F::Elem]) -> Result<SparseMatrix<F>> {
        self.descend(&self.alg.linear_map(k, form)?, k, k + 1)
    }

    pub fn variable_map(&self, k: usize, v: usize) -> Result<SparseMatrix<F>> {
        self.descend(&self.alg.variable_map(k, v)?, k, k + 1)
    }

    /// `form^p : B^k → B^{k+p}`.
    pub fn power_map(&self, k: usize, form: &[F::Elem], p: usize) -> Result<SparseMatrix<F>> {
        let mut acc = SparseMatrix::identity(self.field().clone(), self.dim(k));
        for j in k..k + p {
            acc = self.linear_map(j, form)?.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Degree map on `B^d = A^d`.
    pub fn degree(&self, u: &[F::Elem]) -> Result<F::Elem> {
        self.alg.degree(&self.lift(self.d(), u))
    }

    /// Unit vectors of `B^k`.
    pub fn basis(&self, k: usize) -> Vec<Vec<F::Elem>> {
        let f = self.field();
        (0..self.dim(k))
            .map(|b| {
                let mut e = vec![f.zero(); self.dim(k)];
                e[b] = f.one();
                e
            })
            .collect()
    }
}
