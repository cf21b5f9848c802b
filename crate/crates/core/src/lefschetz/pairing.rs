use serde::Serialize;

use super::certify::{sample_ring, SampleOptions};
use crate::artinian::{Gorenstein, MonomialIdeal};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exactla::{rank, sparse::sparsify, Field, SparseMatrix, Subspace};
use crate::realization::random_linear_form;
use crate::report::{matrix_strings, scalar_strings, Verdict};
use crate::seeds;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairingKind {
    Poincare,
    HodgeRiemann,
    BiasedPd,
    HallLaman,
}

/// Counts of positive, negative and zero squares of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Where a sampled ring and element came from.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub field: String,
    pub seed: u64,
    pub trial: usize,
    pub theta_seed: u64,
    pub ell_seed: Option<u64>,
    pub ell: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub kind: PairingKind,
    pub k: usize,
    pub dual_degree: usize,
    /// "full", "ideal:<labels>" or "annihilator:<labels>".
    pub restriction: String,
    /// Dimension of the (first) restricted factor.
    pub subspace_dim: usize,
    pub gram: Vec<Vec<String>>,
    pub rank: usize,
    /// Pass = nondegenerate (in the first factor for asymmetric pairings).
    pub verdict: Verdict,
    pub signature: Option<Signature>,
    pub provenance: Option<Provenance>,
    pub notes: Vec<String>,
}

impl PairingReport {
    pub fn is_nondegenerate(&self) -> bool {
        self.verdict.is_pass()
    }
}

/// `G[i][j] = deg(a_i · b_j)` for `a_i ∈ B^i`, `b_j ∈ B^j`, `i + j = d`.
pub fn gram_matrix<F: Field>(ring: &Gorenstein<F>, rows: &[Vec<F::Elem>], i: usize, cols: &[Vec<F::Elem>], j: usize) -> Result<SparseMatrix<F>> {
    if i + j != ring.d() {
        return Err(Error::InvalidParameter(format!("pairing degrees {i} + {j} differ from d = {}", ring.d())));
    }
    let f = ring.field();
    let mut dense = Vec::with_capacity(rows.len());
    for a in rows {
        let mut row = Vec::with_capacity(cols.len());
        for b in cols {
            row.push(ring.degree(&ring.mul(a, i, b, j)?)?);
        }
        dense.push(row);
    }
    Ok(SparseMatrix::from_dense(f.clone(), cols.len(), &dense))
}

/// Signature of a symmetric matrix by congruence diagonalisation. `None`
/// over unordered fields.
pub fn signature<F: Field>(m: &SparseMatrix<F>) -> Option<Signature> {
    let f = m.field();
    let n = m.nrows();
    let mut a = m.to_dense();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let piv = active.iter().copied().find(|&i| !f.is_zero(&a[i][i]));
        let p = match piv {
            Some(p) => p,
            None => {
                // all diagonal entries vanish: fold an off-diagonal entry in
                let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j))).find(|&(i, j)| i != j && !f.is_zero(&a[i][j]));
                let Some((i, j)) = pair else { break };
                // row/column i += row/column j
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] = f.add(&a[i][c], &v);
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] = f.add(&a[r][i], &v);
                }
                i
            }
        };
        let d = a[p][p].clone();
        match f.sign(&d)? {
            1 => pos += 1,
            _ => neg += 1,
        }
        let dinv = f.inv(&d).expect("nonzero pivot");
        active.retain(|&i| i != p);
        for &i in &active {
            let c = f.mul(&a[i][p], &dinv);
            if f.is_zero(&c) {
                continue;
            }
            for &j in &active {
                let v = f.mul(&c, &a[p][j]);
                a[i][j] = f.sub(&a[i][j], &v);
            }
        }
        for &i in &active {
            a[i][p] = f.zero();
            a[p][i] = f.zero();
        }
    }
    Some(Signature { positive: pos, negative: neg, zero: n - pos - neg })
}

/// The Poincaré pairing `B^k × B^{d−k} → B^d ≅ F`.
pub fn poincare_pairing<F: Field>(ring: &Gorenstein<F>, k: usize) -> Result<PairingReport> {
    let d = ring.d();
    if k > d {
        return Err(Error::InvalidParameter(format!("degree {k} exceeds d = {d}")));
    }
    let g = gram_matrix(ring, &ring.basis(k), k, &ring.basis(d - k), d - k)?;
    let rk = rank(&g);
    let ok = rk == ring.dim(k) && rk == ring.dim(d - k);
    Ok(PairingReport {
        kind: PairingKind::Poincare,
        k,
        dual_degree: d - k,
        restriction: "full".into(),
        subspace_dim: ring.dim(k),
        gram: matrix_strings(&g),
        rank: rk,
        verdict: Verdict::from_bool(ok),
        signature: None,
        provenance: None,
        notes: Vec::new(),
    })
}

/// `Q_{ℓ,k}(a, b) = deg(a · b · ℓ^{d−2k})` restricted to `sub ⊆ B^k`.
pub fn hodge_riemann_form<F: Field>(ring: &Gorenstein<F>, ell: &[F::Elem], k: usize, sub: &Subspace<F>, restriction: &str) -> Result<PairingReport> {
    let d = ring.d();
    if 2 * k > d {
        return Err(Error::InvalidParameter(format!("Hodge–Riemann form needs 2k ≤ d, got k = {k}, d = {d}")));
    }
    if sub.ambient() != ring.dim(k) {
        return Err(Error::DimensionMismatch("restriction subspace lives in a different degree".into()));
    }
    let p = ring.power_map(k, ell, d - 2 * k)?;
    let basis = sub.basis_dense();
    let images: Vec<Vec<F::Elem>> = basis.iter().map(|b| p.mul_vec(b)).collect();
    let g = gram_matrix(ring, &basis, k, &images, d - k)?;
    let rk = rank(&g);
    let mut notes = Vec::new();
    if basis.is_empty() {
        notes.push("restriction is the zero subspace; trivially nondegenerate".into());
    }
    Ok(PairingReport {
        kind: PairingKind::HodgeRiemann,
        k,
        dual_degree: d - k,
        restriction: restriction.into(),
        subspace_dim: basis.len(),
        rank: rk,
        verdict: Verdict::from_bool(rk == basis.len()),
        signature: signature(&g),
        gram: matrix_strings(&g),
        provenance: None,
        notes,
    })
}

fn describe(c: &SimplicialComplex) -> String {
    let facets: Vec<String> = c.facets().iter().map(|&f| c.face_labels(f).join(",")).collect();
    format!("{{{}}}", facets.join("|"))
}

/// Biased Poincaré duality: `K^k × K^{d−k} → F` is nondegenerate in the
/// first factor. The verdict is cross-checked against `K^k ∩ Ann(K)^k = 0`.
pub fn biased_pd<F: Field>(ring: &Gorenstein<F>, ideal: &MonomialIdeal<F>, k: usize) -> Result<PairingReport> {
    let d = ring.d();
    if k > d {
        return Err(Error::InvalidParameter(format!("degree {k} exceeds d = {d}")));
    }
    let rows = ideal.space(k).basis_dense();
    let cols = ideal.space(d - k).basis_dense();
    let g = gram_matrix(ring, &rows, k, &cols, d - k)?;
    let rk = rank(&g);
    let ok = rk == rows.len();
    let meet = ideal.space(k).intersect(&ideal.annihilator(ring, k)?)?;
    let mut notes = vec![format!("κ_{k} = {}, κ_{} = {}", rows.len(), d - k, cols.len())];
    if meet.is_zero() != ok {
        notes.push("annihilator cross-check disagrees with the Gram rank".into());
    }
    Ok(PairingReport {
        kind: PairingKind::BiasedPd,
        k,
        dual_degree: d - k,
        restriction: format!("ideal:{}", describe(ideal.subcomplex())),
        subspace_dim: rows.len(),
        gram: matrix_strings(&g),
        rank: rk,
        verdict: Verdict::from_bool(ok),
        signature: None,
        provenance: None,
        notes,
    })
}

/// Hall–Laman relations at Δ′: `Q_{ℓ,k}` is nondegenerate on `K^k` and on
/// `Ann(K)^k`. Returns the two reports.
pub fn hall_laman<F: Field>(ring: &Gorenstein<F>, ideal: &MonomialIdeal<F>, ell: &[F::Elem], k: usize) -> Result<[PairingReport; 2]> {
    let desc = describe(ideal.subcomplex());
    let mut on_ideal = hodge_riemann_form(ring, ell, k, ideal.space(k), &format!("ideal:{desc}"))?;
    let mut on_ann = hodge_riemann_form(ring, ell, k, &ideal.annihilator(ring, k)?, &format!("annihilator:{desc}"))?;
    on_ideal.kind = PairingKind::HallLaman;
    on_ann.kind = PairingKind::HallLaman;
    Ok([on_ideal, on_ann])
}

#[derive(Clone, Debug, Serialize)]
pub struct KappaReport {
    pub k: usize,
    pub kappa_k: usize,
    pub kappa_k1: usize,
    /// Rank of `ℓ· : K^k → K^{k+1}`.
    pub ell_rank_on_ideal: usize,
    /// Rank of `ℓ· : B^k → B^{k+1}`.
    pub ell_rank: usize,
    pub source_dim: usize,
    pub monotone: bool,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Middle monotonicity `κ_k ≤ κ_{k+1}` for `d = 2k + 1`, together with the
/// rank of ℓ on `K^k` that explains it: when ℓ is injective on `B^k` it is
/// injective on `K^k`, and `ℓ K^k ⊆ K^{k+1}`.
pub fn kappa_monotonicity<F: Field>(ring: &Gorenstein<F>, ideal: &MonomialIdeal<F>, k: usize, ell: &[F::Elem]) -> Result<KappaReport> {
    let d = ring.d();
    let f = ring.field();
    let mut notes = Vec::new();
    if d != 2 * k + 1 {
        notes.push(format!("middle monotonicity is stated for d = 2k + 1; here d = {d}"));
    }
    let m = ring.linear_map(k, ell)?;
    let imgs: Vec<_> = ideal.space(k).basis_dense().iter().map(|b| sparsify(f, &m.mul_vec(b))).collect();
    let img = Subspace::span(f.clone(), ring.dim(k + 1), imgs);
    if !img.is_subspace_of(ideal.space(k + 1)) {
        notes.push("ℓ·K^k is not contained in K^{k+1}".into());
    }
    let (kk, kk1) = (ideal.kappa(k), ideal.kappa(k + 1));
    let ell_rank = rank(&m);
    if ell_rank < ring.dim(k) {
        notes.push("ℓ is not injective on B^k: Lefschetz fails for this element".into());
    }
    Ok(KappaReport {
        k,
        kappa_k: kk,
        kappa_k1: kk1,
        ell_rank_on_ideal: img.dim(),
        ell_rank,
        source_dim: ring.dim(k),
        monotone: kk <= kk1,
        verdict: Verdict::from_bool(kk <= kk1),
        notes,
    })
}

fn sub_on_ground(c: &SimplicialComplex, sub: &SimplicialComplex) -> Result<()> {
    if !sub.is_subcomplex_of(c) {
        return Err(Error::NotSubcomplex("Δ′ is not a subcomplex".into()));
    }
    Ok(())
}

/// Biased Poincaré duality for sampled reductions; returns the first
/// nondegenerate report, or the last one if none was found.
pub fn biased_pd_check<F: Field>(c: &SimplicialComplex, sub: &SimplicialComplex, field: &F, k: usize, opts: &SampleOptions) -> Result<PairingReport> {
    sub_on_ground(c, sub)?;
    let mut last = None;
    for t in 0..opts.trials.max(1) {
        let (ring, prov) = sample_ring(c, field, opts, t, None)?;
        let ideal = MonomialIdeal::new(&ring, sub)?;
        let mut rep = biased_pd(&ring, &ideal, k)?;
        rep.provenance = Some(prov);
        if rep.verdict.is_pass() {
            return Ok(rep);
        }
        last = Some(rep);
    }
    Ok(last.expect("at least one trial"))
}

/// Hall–Laman relations for sampled reductions and ℓ.
pub fn hall_laman_check<F: Field>(c: &SimplicialComplex, sub: &SimplicialComplex, field: &F, k: usize, opts: &SampleOptions) -> Result<[PairingReport; 2]> {
    sub_on_ground(c, sub)?;
    let mut last = None;
    for t in 0..opts.trials.max(1) {
        let (ring, mut prov) = sample_ring(c, field, opts, t, None)?;
        let ell_seed = seeds::derive(opts.seed, "ell", t as u64);
        let ell = random_linear_form(field, c.ground_size(), &mut seeds::rng(opts.seed, "ell", t as u64), opts.bound);
        prov.ell_seed = Some(ell_seed);
        prov.ell = Some(scalar_strings(field, &ell));
        let ideal = MonomialIdeal::new(&ring, sub)?;
        let mut reps = hall_laman(&ring, &ideal, &ell, k)?;
        for r in reps.iter_mut() {
            r.provenance = Some(prov.clone());
        }
        if reps.iter().all(|r| r.verdict.is_pass()) {
            return Ok(reps);
        }
        last = Some(reps);
    }
    Ok(last.expect("at least one trial"))
}
