use nalgebra::DMatrix;
use rand::Rng;
use serde::Serialize;

use crate::artinian::Gorenstein;
use crate::error::{Error, Result};
use crate::exactla::{image, kernel, Field, SparseMatrix, Subspace};
use crate::report::Verdict;

/// Float tolerance for the monotonicity of principal angles.
pub const ANGLE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct PerturbationReport {
    /// `β(ker α) ∩ im α = 0`.
    pub transversal: bool,
    /// `β^{-1}(im α) + ker α = X`.
    pub dual_transversal: bool,
    pub expected_kernel_dim: Option<usize>,
    pub expected_image_dim: Option<usize>,
    pub samples: usize,
    /// Sampled ε at which a predicted identity failed.
    pub exceptions: Vec<String>,
    pub verdict: Verdict,
}

/// Perturbation lemma on concrete maps: under transversality the kernel of
/// `α + εβ` is `ker α ∩ ker β`, and under the dual condition its image is
/// `im α + im β`, for all but finitely many ε. Each sampled ε is tested.
pub fn perturbation_check<F: Field, R: Rng + ?Sized>(alpha: &SparseMatrix<F>, beta: &SparseMatrix<F>, samples: usize, rng: &mut R, bound: u64) -> Result<PerturbationReport> {
    if alpha.nrows() != beta.nrows() || alpha.ncols() != beta.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "α is {}×{}, β is {}×{}",
            alpha.nrows(),
            alpha.ncols(),
            beta.nrows(),
            beta.ncols()
        )));
    }
    let f = alpha.field();
    let ker_a = kernel(alpha);
    let im_a = image(alpha);
    let transversal = ker_a.image(beta)?.intersect(&im_a)?.is_zero();
    let dual_transversal = Subspace::preimage(beta, &im_a)?.sum(&ker_a)?.is_full();
    let want_ker = if transversal { Some(ker_a.intersect(&kernel(beta))?) } else { None };
    let want_im = if dual_transversal { Some(im_a.sum(&image(beta))?) } else { None };
    let mut exceptions = Vec::new();
    if transversal || dual_transversal {
        for _ in 0..samples {
            let eps = loop {
                let e = f.sample(rng, bound);
                if !f.is_zero(&e) {
                    break e;
                }
            };
            let m = alpha.add_scaled(&eps, beta)?;
            let ker_ok = want_ker.as_ref().is_none_or(|w| &kernel(&m) == w);
            let im_ok = want_im.as_ref().is_none_or(|w| &image(&m) == w);
            if !(ker_ok && im_ok) {
                exceptions.push(f.to_scalar(&eps).to_string());
            }
        }
    }
    let verdict = if !(transversal || dual_transversal) { Verdict::Skipped } else { Verdict::from_bool(exceptions.is_empty()) };
    Ok(PerturbationReport {
        transversal,
        dual_transversal,
        expected_kernel_dim: want_ker.map(|w| w.dim()),
        expected_image_dim: want_im.map(|w| w.dim()),
        samples,
        exceptions,
        verdict,
    })
}

/// Random `rows × cols` integer matrix of rank at most `r`: the product of
/// random `rows × r` and `r × cols` factors with entries in `[−bound, bound]`.
pub fn random_low_rank<F: Field, R: Rng + ?Sized>(field: &F, rows: usize, cols: usize, r: usize, rng: &mut R, bound: u64) -> SparseMatrix<F> {
    let mut draw = |m: usize, n: usize| {
        let dense: Vec<Vec<F::Elem>> = (0..m).map(|_| (0..n).map(|_| field.sample(rng, bound)).collect()).collect();
        SparseMatrix::from_dense(field.clone(), n, &dense)
    };
    let a = draw(rows, r);
    let b = draw(r, cols);
    a.mul(&b).expect("compatible factors")
}

fn to_float<F: Field>(field: &F, vs: &[Vec<F::Elem>], n: usize) -> Result<DMatrix<f64>> {
    let mut m = DMatrix::zeros(n, vs.len());
    for (j, v) in vs.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            m[(i, j)] = field.to_f64(x).ok_or_else(|| Error::Unsupported("principal angles need a characteristic-zero field".into()))?;
        }
    }
    Ok(m)
}

fn orthonormal(m: DMatrix<f64>) -> DMatrix<f64> {
    if m.ncols() == 0 {
        return m;
    }
    let cols = m.ncols();
    m.qr().q().columns(0, cols).into_owned()
}

/// Largest principal angle (radians) between two subspaces of equal
/// dimension, computed in floating point.
pub fn principal_angle<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<f64> {
    if a.ambient() != b.ambient() || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!("subspaces of dimension {} and {}", a.dim(), b.dim())));
    }
    if a.dim() == 0 {
        return Ok(0.0);
    }
    let n = a.ambient();
    let qa = orthonormal(to_float(a.field(), &a.basis_dense(), n)?);
    let qb = orthonormal(to_float(b.field(), &b.basis_dense(), n)?);
    // ‖(I − Q_b Q_bᵀ) Q_a‖₂ = sin of the largest angle
    let resid = &qa - &qb * (qb.transpose() * &qa);
    let s = resid.singular_values().max().min(1.0);
    Ok(s.asin())
}

#[derive(Clone, Debug, Serialize)]
pub struct ApproximationReport {
    pub degree: usize,
    pub epsilons: Vec<String>,
    pub limit_dim: usize,
    pub kernel_dims: Vec<usize>,
    pub angles: Vec<f64>,
    pub dual_condition: bool,
    pub monotone: bool,
    pub verdict: Verdict,
}

/// Approximation lemma along a decaying element: with `α = x_{order[0]}`,
/// `β = Σ_{i≥1} ratio^{−(i−1)} x_{order[i]}` and `ε_t = ratio^{−t}` for
/// `t = 1, 2, 3`, the kernels of `α + ε_t β : B^j → B^{j+1}` approach
/// `ker α ∩ β^{-1}(im α)`; the largest principal angle must not increase.
pub fn approximation_check<F: Field>(ring: &Gorenstein<F>, order: &[usize], ratio: &F::Elem, j: usize) -> Result<ApproximationReport> {
    let f = ring.field();
    let (&first, tail) = order.split_first().ok_or_else(|| Error::InvalidParameter("empty vertex order".into()))?;
    let beta_form = super::decaying_element(f, ring.n(), tail, ratio)?;
    let alpha = ring.variable_map(j, first)?;
    let beta = ring.linear_map(j, &beta_form)?;
    let ker_a = kernel(&alpha);
    let im_a = image(&alpha);
    let pre = Subspace::preimage(&beta, &im_a)?;
    let dual_condition = pre.sum(&ker_a)?.is_full();
    let limit = ker_a.intersect(&pre)?;
    let inv = f.inv(ratio).expect("nonzero ratio");
    let mut eps = f.one();
    let (mut epsilons, mut kernel_dims, mut angles) = (Vec::new(), Vec::new(), Vec::new());
    let mut dims_ok = true;
    for _ in 0..3 {
        eps = f.mul(&eps, &inv);
        let k = kernel(&alpha.add_scaled(&eps, &beta)?);
        epsilons.push(f.to_scalar(&eps).to_string());
        kernel_dims.push(k.dim());
        if k.dim() == limit.dim() {
            angles.push(principal_angle(&k, &limit)?);
        } else {
            dims_ok = false;
        }
    }
    let monotone = dims_ok && angles.windows(2).all(|w| w[1] <= w[0] + ANGLE_TOLERANCE);
    let verdict = if dual_condition { Verdict::from_bool(monotone) } else { Verdict::Skipped };
    Ok(ApproximationReport { degree: j, epsilons, limit_dim: limit.dim(), kernel_dims, angles, dual_condition, monotone, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artinian::GradedAlgebra;
    use crate::complex::{l_decomposition, stacked_sphere};
    use crate::exactla::Rationals;
    use crate::realization::random_realization;
    use rand::SeedableRng;

    fn diag(v: &[i64]) -> SparseMatrix<Rationals> {
        let q = Rationals;
        let rows: Vec<Vec<_>> = (0..v.len()).map(|i| (0..v.len()).map(|j| if i == j { q.from_i64(v[i]) } else { q.zero() }).collect()).collect();
        SparseMatrix::from_dense(q, v.len(), &rows)
    }

    #[test]
    fn diagonal_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let rep = perturbation_check(&diag(&[1, 0]), &diag(&[0, 1]), 5, &mut rng, 100).unwrap();
        assert!(rep.transversal);
        assert_eq!(rep.expected_kernel_dim, Some(0));
        assert!(rep.verdict.is_pass());
        let a = diag(&[1, 0, 2]);
        let rep = perturbation_check(&a, &a, 5, &mut rng, 100).unwrap();
        assert!(rep.transversal);
        assert_eq!(rep.expected_kernel_dim, Some(1));
        assert!(rep.verdict.is_pass());
    }

    #[test]
    fn low_rank_pairs_are_transversal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let q = Rationals;
        let a = random_low_rank(&q, 6, 6, 2, &mut rng, 20);
        let b = random_low_rank(&q, 6, 6, 3, &mut rng, 20);
        assert_eq!(crate::exactla::rank(&a), 2);
        let rep = perturbation_check(&a, &b, 5, &mut rng, 1000).unwrap();
        assert!(rep.transversal);
        assert_eq!(rep.expected_kernel_dim, Some(1));
        assert!(rep.verdict.is_pass(), "{rep:?}");
    }

    #[test]
    fn shape_mismatch() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(perturbation_check(&diag(&[1]), &diag(&[1, 1]), 1, &mut rng, 10).is_err());
    }

    #[test]
    fn angles_decrease_on_stacked_sphere() {
        let s = stacked_sphere(2, 3, 5).unwrap();
        let order = l_decomposition(&s).unwrap().unwrap();
        let (r, _) = random_realization(&s, 3, &Rationals, 8, 20).unwrap();
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&s, &r).unwrap());
        let rep = approximation_check(&ring, &order, &Rationals.from_i64(10), 2).unwrap();
        assert!(rep.dual_condition);
        assert!(rep.verdict.is_pass(), "{rep:?}");
        assert!(rep.angles[2] < rep.angles[0]);
    }

    #[test]
    fn single_vertex_kernel_is_exact() {
        let s = stacked_sphere(2, 2, 1).unwrap();
        let (r, _) = random_realization(&s, 3, &Rationals, 8, 20).unwrap();
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&s, &r).unwrap());
        let rep = approximation_check(&ring, &[0], &Rationals.from_i64(10), 2).unwrap();
        assert!(rep.angles.iter().all(|&a| a < 1e-9), "{:?}", rep.angles);
    }
}
