//! Artinian reductions of face rings and their quotients.

mod algebra;
mod graded;
mod ideal;
mod monomial;
mod socle;

pub use algebra::GradedAlgebra;
pub use graded::{GradedModule, Piece, MONOMIAL_CAP};
pub use ideal::{monomial_classes, MonomialIdeal};
pub use monomial::{monomials_with_support, Monomial};
pub use socle::Gorenstein;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_crosspolytope, boundary_simplex, moebius_torus_7, SimplicialComplex};
    use crate::exactla::{Field, PrimeField, Rationals};
    use crate::realization::{random_realization, special_realization_bad_reduction};

    fn fp() -> PrimeField {
        PrimeField::new(2_147_483_647).unwrap()
    }

    #[test]
    fn bad_reduction_kappas() {
        let (s, r, d) = special_realization_bad_reduction(&Rationals);
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&s, &r).unwrap());
        assert_eq!(ring.dims(), vec![1, 5, 5, 1]);
        let k = MonomialIdeal::new(&ring, &d).unwrap();
        assert_eq!(k.kappa(1), 3);
        assert_eq!(k.kappa(2), 2);
    }

    #[test]
    fn torus_socle() {
        let t = moebius_torus_7();
        let (r, _) = random_realization(&t, 3, &fp(), 3, 0).unwrap();
        let alg = GradedAlgebra::build(&t, &r).unwrap();
        assert_eq!(alg.dim(2), 10);
        let ring = Gorenstein::new(alg).unwrap();
        assert_eq!(ring.socle_dims(), vec![0, 0, 6, 0]);
        assert_eq!(ring.dims(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn sphere_socle_vanishes() {
        let o = boundary_crosspolytope(3);
        let (r, _) = random_realization(&o, 3, &fp(), 3, 0).unwrap();
        let ring = Gorenstein::new(GradedAlgebra::build(&o, &r).unwrap()).unwrap();
        assert_eq!(ring.socle_dims(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn trivial_ideals() {
        let o = boundary_crosspolytope(3);
        let (r, _) = random_realization(&o, 3, &fp(), 4, 0).unwrap();
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&o, &r).unwrap());
        assert_eq!(MonomialIdeal::new(&ring, &o).unwrap().kappas(), vec![0, 0, 0, 0]);
        let empty = o.sibling(vec![0]);
        let k = MonomialIdeal::new(&ring, &empty).unwrap();
        assert_eq!(k.kappas(), vec![0, 3, 3, 1]);
        // annihilator of the maximal ideal lives in the top degree only
        for deg in 0..3 {
            assert!(k.annihilator(&ring, deg).unwrap().is_zero());
        }
        assert_eq!(k.annihilator(&ring, 3).unwrap().dim(), 1);
        let zero = MonomialIdeal::new(&ring, &o).unwrap();
        assert!(zero.annihilator(&ring, 1).unwrap().is_full());
    }

    #[test]
    fn foreign_subcomplex_rejected() {
        let o = boundary_crosspolytope(3);
        let (r, _) = random_realization(&o, 3, &fp(), 4, 0).unwrap();
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&o, &r).unwrap());
        let other = SimplicialComplex::from_facets(&[vec!["1", "2"]]).unwrap();
        assert!(MonomialIdeal::new(&ring, &other).is_err());
        let _ = boundary_simplex(3);
        let _ = fp().one();
    }
}
