use super::graded::GradedModule;
use super::monomial::Monomial;
use crate::complex::{face_vertices, Face, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{dense::determinant, Field, SparseMatrix};
use crate::realization::Realization;

/// The Artinian reduction `A^*(Δ) = F[Δ] / Θ F[Δ]` of a face ring.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F: Field> {
    complex: SimplicialComplex,
    module: GradedModule<F>,
}

impl<F: Field> GradedAlgebra<F> {
    /// Full build, degrees `0..=d` with `d = dim Δ + 1`; requires a proper
    /// realization in `R^d`.
    pub fn build(c: &SimplicialComplex, r: &Realization<F>) -> Result<Self> {
        let d = (c.dim() + 1).max(0) as usize;
        if r.dim() != d {
            return Err(Error::InvalidParameter(format!("realization lives in R^{}, expected R^{d}", r.dim())));
        }
        Self::build_to(c, r, d)
    }

    /// Builds degrees `0..=top` for a proper realization in any dimension.
    pub fn build_to(c: &SimplicialComplex, r: &Realization<F>, top: usize) -> Result<Self> {
        r.require_proper(c)?;
        let module = GradedModule::build(RelativeComplex::absolute(c.clone()), r, top)?;
        Ok(GradedAlgebra { complex: c.clone(), module })
    }

    pub fn field(&self) -> &F {
        self.module.field()
    }
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }
    pub fn realization(&self) -> &Realization<F> {
        self.module.realization()
    }
    pub fn module(&self) -> &GradedModule<F> {
        &self.module
    }
    /// Number of parameters, which is the socle degree for spheres.
    pub fn d(&self) -> usize {
        self.realization().dim()
    }
    pub fn top(&self) -> usize {
        self.module.top()
    }
    pub fn dim(&self, k: usize) -> usize {
        self.module.dim(k)
    }
    pub fn dims(&self) -> Vec<usize> {
        self.module.dims()
    }
    pub fn n(&self) -> usize {
        self.complex.ground_size()
    }

    pub fn one(&self) -> Vec<F::Elem> {
        self.module.class_of(0, &[(Monomial::one(), self.field().one())])
    }

    pub fn var(&self, v: usize) -> Vec<F::Elem> {
        self.monomial_class(&Monomial::from_vars(vec![v as u8]))
    }

    pub fn monomial_class(&self, m: &Monomial) -> Vec<F::Elem> {
        self.module.class_of(m.degree(), &[(m.clone(), self.field().one())])
    }

    /// Class of `Σ form_v x_v` in degree one.
    pub fn linear(&self, form: &[F::Elem]) -> Vec<F::Elem> {
        self.module.linear_class(form)
    }

    /// Product of `a ∈ A^i` and `b ∈ A^j`.
    pub fn mul(&self, a: &[F::Elem], i: usize, b: &[F::Elem], j: usize) -> Result<Vec<F::Elem>> {
        if i + j > self.top() {
            return Err(Error::InvalidParameter(format!("product degree {} exceeds {}", i + j, self.top())));
        }
        if a.len() != self.dim(i) || b.len() != self.dim(j) {
            return Err(Error::DimensionMismatch("coordinate vector length".into()));
        }
        let f = self.field();
        let (pa, pb, pc) = (self.module.piece(i), self.module.piece(j), self.module.piece(i + j));
        let mut out = vec![f.zero(); pc.dim()];
        for (s, x) in a.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            let ms = pa.basis_monomial(s);
            for (t, y) in b.iter().enumerate().filter(|(_, y)| !f.is_zero(y)) {
                let xy = f.mul(x, y);
                for (c, e) in pc.normal_form(f, &ms.times(pb.basis_monomial(t))) {
                    f.add_mul_assign(&mut out[c], &xy, &e);
                }
            }
        }
        Ok(out)
    }

    pub fn linear_map(&self, k: usize, form: &[F::Elem]) -> Result<SparseMatrix<F>> {
        self.module.linear_map(k, form)
    }

    pub fn variable_map(&self, k: usize, v: usize) -> Result<SparseMatrix<F>> {
        self.module.variable_map(k, v)
    }

    pub fn power_map(&self, k: usize, form: &[F::Elem], p: usize) -> Result<SparseMatrix<F>> {
        self.module.power_map(k, form, p)
    }

    /// The reference facet: lexicographically least by sorted vertex list.
    pub fn reference_facet(&self) -> Face {
        *self
            .complex
            .facets()
            .iter()
            .min_by_key(|f| face_vertices(**f).collect::<Vec<_>>())
            .expect("nonempty complex")
    }

    /// Scale `s` with `deg(u) = s·u_0` on the one-dimensional top degree.
    ///
    /// The generator is normalised so that the reference facet σ₀ satisfies
    /// `deg(x^{σ₀}) = 1/|det V_{σ₀}|` over ℚ (and `1/det V_{σ₀}` over prime
    /// fields, which carry no sign).
    pub fn degree_scale(&self) -> Result<F::Elem> {
        let d = self.d();
        if self.top() < d || self.dim(d) != 1 {
            return Err(Error::Unsupported(format!(
                "degree map needs a one-dimensional top degree; dim A^{d} = {}",
                self.dim(d)
            )));
        }
        let f = self.field();
        let sigma = self.reference_facet();
        let m = self.realization().face_matrix(sigma);
        if m.ncols() != d {
            return Err(Error::Unsupported("reference facet does not span the parameter space".into()));
        }
        let mut det = determinant(f, &m.to_dense());
        if f.sign(&det) == Some(-1) {
            det = f.neg(&det);
        }
        let c = self.monomial_class(&Monomial::of_face(sigma))[0].clone();
        let denom = f.mul(&c, &det);
        f.inv(&denom).ok_or_else(|| Error::Unsupported("reference facet monomial vanishes in top degree".into()))
    }

    /// The degree map on `A^d`.
    pub fn degree(&self, u: &[F::Elem]) -> Result<F::Elem> {
        let s = self.degree_scale()?;
        Ok(self.field().mul(&s, &u[0]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_crosspolytope, boundary_simplex, crosspolytope_coordinates};
    use crate::exactla::{PrimeField, Rationals};
    use crate::realization::random_realization;

    fn p() -> PrimeField {
        PrimeField::new(2_147_483_647).unwrap()
    }

    #[test]
    fn tetrahedron_dims() {
        let t = boundary_simplex(3);
        let (r, _) = random_realization(&t, 3, &p(), 1, 0).unwrap();
        assert_eq!(GradedAlgebra::build(&t, &r).unwrap().dims(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn crosspolytope_dims() {
        let o = boundary_crosspolytope(3);
        let (r, _) = random_realization(&o, 3, &p(), 2, 0).unwrap();
        assert_eq!(GradedAlgebra::build(&o, &r).unwrap().dims(), vec![1, 3, 3, 1]);
        let c = boundary_crosspolytope(4);
        let (r, _) = random_realization(&c, 4, &p(), 2, 0).unwrap();
        assert_eq!(GradedAlgebra::build(&c, &r).unwrap().dims(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn unit_and_nonface_products() {
        let o = boundary_crosspolytope(3);
        let (r, _) = random_realization(&o, 3, &Rationals, 5, 100).unwrap();
        let a = GradedAlgebra::build(&o, &r).unwrap();
        let x = a.var(0);
        assert_eq!(a.mul(&a.one(), 0, &x, 1).unwrap(), x);
        // vertices 1 and 2 are antipodal, so x_1 x_2 = 0
        let y = a.var(1);
        assert!(a.mul(&x, 1, &y, 1).unwrap().iter().all(|e| Rationals.is_zero(e)));
    }

    #[test]
    fn reference_facet_has_degree_one_over_det() {
        let o = boundary_crosspolytope(3);
        let r = Realization::from_integers(Rationals, &crosspolytope_coordinates(3)).unwrap();
        let a = GradedAlgebra::build(&o, &r).unwrap();
        let sigma = a.reference_facet();
        let u = a.monomial_class(&Monomial::of_face(sigma));
        assert_eq!(a.degree(&u).unwrap(), Rationals.one());
        assert!(Rationals.is_zero(&a.degree(&[Rationals.zero()]).unwrap()));
    }

    #[test]
    fn improper_realization_rejected() {
        let t = boundary_simplex(3);
        let r = Realization::from_integers(Rationals, &[vec![1, 0, 0], vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(matches!(GradedAlgebra::build(&t, &r), Err(Error::Improper(_))));
    }
}
