//! Kazhdan's example: expansion of ideals without an injective map.
//!
//! On `X = F^n` let `α(e_i) = (−1)^i e_i` (1-based), let `Y` be `Λ²X` modulo
//! the `e_i ∧ e_j` with `i − j` even, and `δ(x′, x″) = π(x′ ∧ αx″)`. In the
//! basis `e_i ∧ e_j` (i < j, j − i odd) the coordinates are
//! `(−1)^j (x′_i x″_j + x′_j x″_i)`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{sparse::sparsify, Field, Subspace};
use crate::report::Verdict;

/// `δ(x′, x″)` in the basis of `Y`.
pub fn kazhdan_delta<F: Field>(field: &F, x1: &[F::Elem], x2: &[F::Elem]) -> Vec<F::Elem> {
    let n = x1.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1..=n).step_by(2) {
            let s = field.add(&field.mul(&x1[i - 1], &x2[j - 1]), &field.mul(&x1[j - 1], &x2[i - 1]));
            out.push(if j % 2 == 0 { s } else { field.neg(&s) });
        }
    }
    out
}

fn alpha<F: Field>(field: &F, x: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().enumerate().map(|(i, e)| if (i + 1) % 2 == 0 { e.clone() } else { field.neg(e) }).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct KazhdanReport {
    pub n: usize,
    pub y_dim: usize,
    pub vector_samples: usize,
    pub symmetric: bool,
    pub vanishes_on_alpha: bool,
    /// `(dim X′, dim δ(X′, X′))` per sampled subspace.
    pub expansion: Vec<(usize, usize)>,
    pub expanding: bool,
    pub verdict: Verdict,
}

/// Symmetry and `δ(x, αx) = 0` on random vectors, and expansion
/// `dim δ(X′, X′) > dim X′` on random subspaces of dimension 2..=max_dim.
pub fn kazhdan_example<F: Field, R: Rng + ?Sized>(field: &F, n: usize, vector_samples: usize, subspaces: usize, max_dim: usize, rng: &mut R, bound: u64) -> Result<KazhdanReport> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("Kazhdan's example needs even n ≥ 4, got {n}")));
    }
    if max_dim < 2 || max_dim > n / 2 {
        return Err(Error::InvalidParameter(format!("subspace dimension must lie in 2..={}", n / 2)));
    }
    let rand_vec = |rng: &mut R| (0..n).map(|_| field.sample(rng, bound)).collect::<Vec<_>>();
    let mut symmetric = true;
    let mut vanishes = true;
    for _ in 0..vector_samples {
        let (x, y) = (rand_vec(rng), rand_vec(rng));
        symmetric &= kazhdan_delta(field, &x, &y) == kazhdan_delta(field, &y, &x);
        vanishes &= kazhdan_delta(field, &x, &alpha(field, &x)).iter().all(|e| field.is_zero(e));
    }
    let y_dim = kazhdan_delta(field, &vec![field.zero(); n], &vec![field.zero(); n]).len();
    let mut expansion = Vec::new();
    for s in 0..subspaces {
        let m = 2 + s % (max_dim - 1);
        let basis: Vec<Vec<F::Elem>> = (0..m).map(|_| rand_vec(rng)).collect();
        let mut products = Vec::new();
        for a in 0..m {
            for b in a..m {
                products.push(sparsify(field, &kazhdan_delta(field, &basis[a], &basis[b])));
            }
        }
        let dim_x = Subspace::span(field.clone(), n, basis.iter().map(|v| sparsify(field, v)).collect()).dim();
        expansion.push((dim_x, Subspace::span(field.clone(), y_dim, products).dim()));
    }
    let expanding = expansion.iter().all(|&(a, b)| b > a);
    Ok(KazhdanReport {
        n,
        y_dim,
        vector_samples,
        symmetric,
        vanishes_on_alpha: vanishes,
        expansion,
        expanding,
        verdict: Verdict::from_bool(symmetric && vanishes && expanding),
    })
}
