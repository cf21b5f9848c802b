//! Stress spaces (the Weil duals of the Artinian reductions), Minkowski
//! weights, the cone lemmas, and the partition of unity.
//!
//! A degree-k stress is a coefficient vector `c` on the degree-k monomials
//! supported on the (relative) complex that every parameter form annihilates
//! when it acts by differentiation: for each `θ_i = Σ_v V_{iv} x_v` and each
//! monomial `m′` of degree `k − 1`,
//!
//! ```text
//!     Σ_v V_{iv} · (m′_v + 1) · c(m′ + e_v) = 0.
//! ```
//!
//! Up to the exponent weights this is the transpose of the relation matrix
//! used for `A^k`, so `dim A_k = dim A^k`.

use std::collections::HashMap;

use serde::Serialize;

use crate::artinian::{monomials_with_support, GradedModule, Monomial};
use crate::complex::{betti, face_size, face_vertices, is_homology_manifold, Face, ManifoldKind, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{kernel, rank, sparse::sparsify, Field, Rationals, SparseMatrix, SparseVec, Subspace};
use crate::realization::Realization;
use crate::report::Verdict;

/// The stress space `A_k(Ψ)` of a relative complex in one degree.
#[derive(Clone, Debug)]
pub struct StressSpace<F: Field> {
    pair: RelativeComplex,
    k: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    space: Subspace<F>,
}

impl<F: Field> StressSpace<F> {
    pub fn degree(&self) -> usize {
        self.k
    }
    pub fn pair(&self) -> &RelativeComplex {
        &self.pair
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }
    pub fn basis(&self) -> Vec<Vec<F::Elem>> {
        self.space.basis_dense()
    }

    /// Positions of the squarefree monomials, with their supports.
    pub fn squarefree_positions(&self) -> Vec<(usize, Face)> {
        self.monomials.iter().enumerate().filter(|(_, m)| m.is_squarefree()).map(|(i, m)| (i, m.support())).collect()
    }
}

fn stress_matrix<F: Field>(pair: &RelativeComplex, r: &Realization<F>, k: usize, cols: &HashMap<Monomial, usize>, ncols: usize) -> Result<SparseMatrix<F>> {
    let f = r.field();
    let mut triples = Vec::new();
    if k == 0 {
        return Ok(SparseMatrix::zeros(f.clone(), 0, ncols));
    }
    let lower = monomials_with_support(pair.faces(), k - 1);
    for (row, m) in lower.iter().enumerate() {
        for i in 0..r.dim() {
            for v in 0..pair.delta.ground_size() {
                let c = &r.coord(v)[i];
                if f.is_zero(c) {
                    continue;
                }
                if let Some(&j) = cols.get(&m.times_var(v)) {
                    let e = f.from_i64(m.exponent(v) as i64 + 1);
                    triples.push((row * r.dim() + i, j, f.mul(c, &e)));
                }
            }
        }
    }
    SparseMatrix::from_triples(f.clone(), lower.len() * r.dim(), ncols, triples)
}

/// `A_k(Ψ)` as the kernel of the differential action of the parameters.
pub fn stress_space<F: Field>(pair: &RelativeComplex, r: &Realization<F>, k: usize) -> Result<StressSpace<F>> {
    r.require_proper(&pair.delta)?;
    let monomials = monomials_with_support(pair.faces(), k);
    let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let m = stress_matrix(pair, r, k, &index, monomials.len())?;
    let space = kernel(&m);
    Ok(StressSpace { pair: pair.clone(), k, monomials, index, space })
}

/// Stress space of an absolute complex.
pub fn stress_space_of<F: Field>(c: &SimplicialComplex, r: &Realization<F>, k: usize) -> Result<StressSpace<F>> {
    stress_space(&RelativeComplex::absolute(c.clone()), r, k)
}

/// Action of `x_v` (i.e. `∂/∂x_v`) on a degree-k stress, as a coefficient
/// vector on the degree-(k−1) monomials of `target`.
pub fn differentiate<F: Field>(field: &F, s: &StressSpace<F>, c: &[F::Elem], v: usize, target: &StressSpace<F>) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); target.monomials.len()];
    for (j, m) in s.monomials.iter().enumerate() {
        if field.is_zero(&c[j]) {
            continue;
        }
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if let Some(t) = target.index_of(&m.divide_var(v).expect("x_v divides m")) {
            field.add_mul_assign(&mut out[t], &c[j], &field.from_i64(e as i64));
        }
    }
    out
}

/// The space of Minkowski weights on faces with `k` vertices.
#[derive(Clone, Debug)]
pub struct MinkowskiSpace<F: Field> {
    k: usize,
    faces: Vec<Face>,
    space: Subspace<F>,
}

/// A single balanced weighting of the faces with `k` vertices.
#[derive(Clone, Debug)]
pub struct MinkowskiWeight<F: Field> {
    pub k: usize,
    pub faces: Vec<Face>,
    pub values: Vec<F::Elem>,
}

impl<F: Field> MinkowskiSpace<F> {
    pub fn degree(&self) -> usize {
        self.k
    }
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }
    pub fn weights(&self) -> Vec<MinkowskiWeight<F>> {
        self.space.basis_dense().into_iter().map(|values| MinkowskiWeight { k: self.k, faces: self.faces.clone(), values }).collect()
    }
}

fn balancing_matrix<F: Field>(pair: &RelativeComplex, r: &Realization<F>, k: usize, faces: &[Face]) -> Result<SparseMatrix<F>> {
    let f = r.field();
    let pos: HashMap<Face, usize> = faces.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut rows: Vec<SparseVec<F::Elem>> = Vec::new();
    if k == 0 {
        return Ok(SparseMatrix::zeros(f.clone(), 0, faces.len()));
    }
    let taus: Vec<Face> = pair.faces().filter(|&t| face_size(t) == k - 1).collect();
    for tau in taus {
        // functionals vanishing on span(τ): the constraint is taken modulo span(τ)
        let forms = kernel(&r.face_matrix(tau).transpose()).basis_dense();
        for w in &forms {
            let mut row = Vec::new();
            for v in 0..pair.delta.ground_size() {
                if tau >> v & 1 == 1 {
                    continue;
                }
                if let Some(&j) = pos.get(&(tau | 1 << v)) {
                    let val = crate::exactla::sparse::dot(f, w, r.coord(v));
                    if !f.is_zero(&val) {
                        row.push((j, val));
                    }
                }
            }
            if !row.is_empty() {
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
    }
    Ok(SparseMatrix::from_rows(f.clone(), faces.len(), rows))
}

/// Weights on the `k`-vertex faces of Ψ satisfying the Minkowski balancing
/// condition at every `(k−1)`-vertex face τ: `Σ_{σ ⊃ τ} c(σ) v_{σ∖τ} ∈ span(τ)`.
/// The condition is imposed through the functionals vanishing on `span(τ)`,
/// so no choice of complement is involved.
pub fn minkowski_weights<F: Field>(pair: &RelativeComplex, r: &Realization<F>, k: usize) -> Result<MinkowskiSpace<F>> {
    r.require_proper(&pair.delta)?;
    let faces: Vec<Face> = pair.faces().filter(|&s| face_size(s) == k).collect();
    let m = balancing_matrix(pair, r, k, &faces)?;
    Ok(MinkowskiSpace { k, faces, space: kernel(&m) })
}

/// Exact balancing test for one weighting.
pub fn is_balanced<F: Field>(pair: &RelativeComplex, r: &Realization<F>, w: &MinkowskiWeight<F>) -> Result<bool> {
    let m = balancing_matrix(pair, r, w.k, &w.faces)?;
    Ok(m.mul_vec(&w.values).iter().all(|x| r.field().is_zero(x)))
}

/// Face → value map with faces rendered as comma-joined labels.
pub fn weight_json<F: Field>(field: &F, c: &SimplicialComplex, w: &MinkowskiWeight<F>) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = w
        .faces
        .iter()
        .zip(&w.values)
        .map(|(&s, x)| (c.face_labels(s).join(","), serde_json::Value::String(field.to_scalar(x).to_string())))
        .collect();
    serde_json::Value::Object(map)
}

#[derive(Clone, Debug, Serialize)]
pub struct SquarefreeReport {
    pub k: usize,
    pub stress_dim: usize,
    pub weight_dim: usize,
    pub restriction_rank: usize,
    /// Whether every restricted stress is balanced.
    pub balanced: bool,
    pub verdict: Verdict,
    pub diagnostic: Option<String>,
}

/// Checks that restricting stresses to their squarefree part is an
/// isomorphism onto the Minkowski weights.
pub fn squarefree_restriction_check<F: Field>(pair: &RelativeComplex, r: &Realization<F>, k: usize) -> Result<SquarefreeReport> {
    if let Some(bad) = r.first_improper_face(&pair.delta) {
        return Ok(SquarefreeReport {
            k,
            stress_dim: 0,
            weight_dim: 0,
            restriction_rank: 0,
            balanced: false,
            verdict: Verdict::Skipped,
            diagnostic: Some(format!("realization is not proper at face {:?}", pair.delta.face_labels(bad))),
        });
    }
    let f = r.field();
    let s = stress_space(pair, r, k)?;
    let w = minkowski_weights(pair, r, k)?;
    let pos: HashMap<Face, usize> = w.faces.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let sq = s.squarefree_positions();
    let restricted: Vec<Vec<F::Elem>> = s
        .basis()
        .iter()
        .map(|c| {
            let mut out = vec![f.zero(); w.faces.len()];
            for &(j, face) in &sq {
                out[pos[&face]] = c[j].clone();
            }
            out
        })
        .collect();
    let restriction_rank = Subspace::span(f.clone(), w.faces.len(), restricted.iter().map(|v| sparsify(f, v)).collect()).dim();
    let balanced = restricted.iter().all(|v| w.space.contains_dense(v));
    let ok = balanced && restriction_rank == s.dim() && s.dim() == w.dim();
    Ok(SquarefreeReport {
        k,
        stress_dim: s.dim(),
        weight_dim: w.dim(),
        restriction_rank,
        balanced,
        verdict: Verdict::from_bool(ok),
        diagnostic: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeLemmaReport {
    pub vertex: String,
    pub k: usize,
    pub link_dim: usize,
    pub star_dim: usize,
    pub open_star_dim: usize,
    /// Rank of `x_v : A_{k+1}(St°_v) → A_k(St_v)`.
    pub xv_rank: usize,
    pub verdict: Verdict,
}

/// Cone lemma I (`A_k(Lk_v) ≅ A_k(St_v)`, the link realized by projecting
/// along `v`) and cone lemma II (`x_v : A_{k+1}(St°_v) → A_k(St_v)` is an
/// isomorphism), checked on stress spaces.
pub fn cone_lemma_check<F: Field>(c: &SimplicialComplex, r: &Realization<F>, v: usize, k: usize) -> Result<ConeLemmaReport> {
    let vf: Face = 1 << v;
    if !c.is_face(vf) || v >= c.ground_size() {
        return Err(Error::NotAFace(format!("vertex index {v}")));
    }
    let f = r.field();
    let star = c.star(vf)?;
    let link = c.link(vf)?;
    let lr = r.link_realization(vf)?;
    let link_dim = stress_space_of(&link, &lr, k)?.dim();
    let st = stress_space_of(&star, r, k)?;
    let open = stress_space(&c.open_star(vf)?, r, k + 1)?;
    let images: Vec<SparseVec<F::Elem>> = open.basis().iter().map(|s| sparsify(f, &differentiate(f, &open, s, v, &st))).collect();
    let img = Subspace::span(f.clone(), st.monomials.len(), images);
    let xv_rank = img.dim();
    let contained = img.is_subspace_of(st.space());
    let ok = contained && link_dim == st.dim() && xv_rank == open.dim() && xv_rank == st.dim();
    Ok(ConeLemmaReport {
        vertex: c.label(v).to_string(),
        k,
        link_dim,
        star_dim: st.dim(),
        open_star_dim: open.dim(),
        xv_rank,
        verdict: Verdict::from_bool(ok),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub k: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    /// `C(d, k) · b̃_{k−1}` for closed homology manifolds; absent otherwise,
    /// where injectivity (Cohen–Macaulay) is tested.
    pub expected_kernel_dim: Option<usize>,
    pub verdict: Verdict,
}

/// The restriction map `A^k(Δ) → ⊕_v A^k(St_v Δ)` stacked over vertices.
pub fn partition_map<F: Field>(module: &GradedModule<F>, c: &SimplicialComplex, k: usize) -> Result<SparseMatrix<F>> {
    let r = module.realization();
    let mut stacked = SparseMatrix::zeros(module.field().clone(), 0, module.dim(k));
    for v in c.vertices() {
        let star = c.star(1 << v)?;
        let sm = GradedModule::build(RelativeComplex::absolute(star), r, k)?;
        stacked = stacked.vstack(&module.monomial_map_into(k, &sm)?)?;
    }
    Ok(stacked)
}

/// Injectivity of the partition map in degree `k < d`. On a closed homology
/// manifold the kernel is instead compared with `(H^{k−1})^{C(d,k)}`, which
/// vanishes for spheres.
pub fn partition_of_unity_check<F: Field>(c: &SimplicialComplex, r: &Realization<F>, k: usize) -> Result<PartitionReport> {
    let d = r.dim();
    if k >= d {
        return Err(Error::InvalidParameter(format!("partition of unity needs k < d = {d}")));
    }
    r.require_proper(c)?;
    let module = GradedModule::build(RelativeComplex::absolute(c.clone()), r, k)?;
    let m = partition_map(&module, c, k)?;
    let rk = rank(&m);
    let kernel_dim = module.dim(k) - rk;
    let expected = (is_homology_manifold(c, &Rationals) == ManifoldKind::Closed).then(|| {
        let b = betti(c, &Rationals).get(k).copied().unwrap_or(0);
        num_integer::binomial(d, k) * b
    });
    Ok(PartitionReport {
        k,
        source_dim: module.dim(k),
        target_dim: m.nrows(),
        rank: rk,
        kernel_dim,
        expected_kernel_dim: expected,
        verdict: Verdict::from_bool(kernel_dim == expected.unwrap_or(0)),
    })
}

/// Vertex labels of a face, for reports.
pub fn face_label_list(c: &SimplicialComplex, s: Face) -> Vec<String> {
    face_vertices(s).map(|v| c.label(v).to_string()).collect()
}
