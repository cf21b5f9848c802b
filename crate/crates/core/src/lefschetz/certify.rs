use serde::Serialize;

use super::pairing::Provenance;
use crate::artinian::{GradedAlgebra, GradedModule, Gorenstein};
use crate::complex::{face_vertices, is_homology_manifold, is_homology_sphere, l_decomposition, ManifoldKind, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{rank, Field, Rationals};
use crate::realization::{random_linear_form, random_realization, Realization, DEFAULT_BOUND};
use crate::report::{scalar_strings, Verdict};
use crate::seeds;

/// Seed, retry count and coordinate bound for sampled checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub seed: u64,
    pub trials: usize,
    pub bound: u64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { seed: 0, trials: 5, bound: DEFAULT_BOUND }
    }
}

impl SampleOptions {
    pub fn new(seed: u64, trials: usize) -> Self {
        SampleOptions { seed, trials, ..Default::default() }
    }
}

/// Which algebra the check runs in: `A` for spheres, the Gorenstein
/// quotient `B` for other closed manifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    A,
    B,
}

fn variant_of(c: &SimplicialComplex) -> Result<Variant> {
    if is_homology_sphere(c, &Rationals) {
        Ok(Variant::A)
    } else if is_homology_manifold(c, &Rationals) == ManifoldKind::Closed {
        Ok(Variant::B)
    } else {
        Err(Error::Unsupported("Lefschetz checks need a homology sphere or a closed homology manifold".into()))
    }
}

/// Draws the realization for trial `t` and builds the ring. For spheres the
/// build can stop at degree `top`; manifolds always get the full build and
/// the socle quotient.
pub fn sample_ring<F: Field>(c: &SimplicialComplex, field: &F, opts: &SampleOptions, t: usize, top: Option<usize>) -> Result<(Gorenstein<F>, Provenance)> {
    let d = (c.dim() + 1) as usize;
    let theta_seed = seeds::derive(opts.seed, "theta", t as u64);
    let (r, _) = random_realization(c, d, field, theta_seed, opts.bound)?;
    let ring = ring_for(c, &r, top)?;
    let prov = Provenance { field: field.kind().to_string(), seed: opts.seed, trial: t, theta_seed, ell_seed: None, ell: None };
    Ok((ring, prov))
}

/// The ring a check runs in for a given realization: `A` (truncated at
/// `top`) for spheres, `B` for other closed manifolds.
pub fn ring_for<F: Field>(c: &SimplicialComplex, r: &Realization<F>, top: Option<usize>) -> Result<Gorenstein<F>> {
    match variant_of(c)? {
        Variant::A => {
            let d = r.dim();
            Ok(Gorenstein::assume_gorenstein(GradedAlgebra::build_to(c, r, top.unwrap_or(d).min(d))?))
        }
        Variant::B => Gorenstein::new(GradedAlgebra::build(c, r)?),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzCertificate {
    pub f_vector: Vec<usize>,
    pub field: String,
    pub seed: u64,
    /// Index of the witnessing trial (or of the last trial on failure).
    pub trial: usize,
    pub trials_run: usize,
    pub theta_seed: Option<u64>,
    pub ell_seed: u64,
    pub variant: Variant,
    pub k: usize,
    pub power: usize,
    pub ell: Vec<String>,
    pub rank: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Rank of `ℓ^{d−2k} : B^k → B^{d−k}`.
pub fn lefschetz_rank<F: Field>(ring: &Gorenstein<F>, ell: &[F::Elem], k: usize) -> Result<usize> {
    let d = ring.d();
    if 2 * k > d {
        return Err(Error::InvalidParameter(format!("Lefschetz maps need 2k ≤ d, got k = {k}, d = {d}")));
    }
    Ok(rank(&ring.power_map(k, ell, d - 2 * k)?))
}

/// Generic Lefschetz: samples a realization and ℓ per trial until
/// `ℓ^{d−2k} : A^k → A^{d−k}` (or the `B` version) is an isomorphism.
pub fn lefschetz_check<F: Field>(c: &SimplicialComplex, field: &F, k: usize, opts: &SampleOptions) -> Result<LefschetzCertificate> {
    let variant = variant_of(c)?;
    let d = (c.dim() + 1) as usize;
    if 2 * k > d {
        return Err(Error::InvalidParameter(format!("Lefschetz maps need 2k ≤ d, got k = {k}, d = {d}")));
    }
    let trials = opts.trials.max(1);
    let mut cert = None;
    for t in 0..trials {
        let (ring, prov) = sample_ring(c, field, opts, t, Some(d - k))?;
        let ell_seed = seeds::derive(opts.seed, "ell", t as u64);
        let ell = random_linear_form(field, c.ground_size(), &mut seeds::rng(opts.seed, "ell", t as u64), opts.bound);
        let rk = lefschetz_rank(&ring, &ell, k)?;
        let ok = rk == ring.dim(k) && rk == ring.dim(d - k);
        let c_ = LefschetzCertificate {
            f_vector: c.f_vector(),
            field: field.kind().to_string(),
            seed: opts.seed,
            trial: t,
            trials_run: t + 1,
            theta_seed: Some(prov.theta_seed),
            ell_seed,
            variant,
            k,
            power: d - 2 * k,
            ell: scalar_strings(field, &ell),
            rank: rk,
            source_dim: ring.dim(k),
            target_dim: ring.dim(d - k),
            verdict: Verdict::from_bool(ok),
            notes: Vec::new(),
        };
        cert = Some(c_);
        if ok {
            break;
        }
    }
    let mut cert = cert.expect("at least one trial");
    if !cert.verdict.is_pass() {
        cert.notes.push(format!("no witness found in {trials} trials"));
    }
    Ok(cert)
}

/// Lefschetz check for a fixed ring: only ℓ is sampled. Returns one
/// certificate per trial (no early exit), so systematic failure of a
/// particular reduction can be recorded.
pub fn lefschetz_check_fixed<F: Field>(ring: &Gorenstein<F>, k: usize, opts: &SampleOptions) -> Result<Vec<LefschetzCertificate>> {
    let d = ring.d();
    let f = ring.field();
    let mut out = Vec::new();
    for t in 0..opts.trials.max(1) {
        let ell_seed = seeds::derive(opts.seed, "ell", t as u64);
        let ell = random_linear_form(f, ring.n(), &mut seeds::rng(opts.seed, "ell", t as u64), opts.bound);
        let rk = lefschetz_rank(ring, &ell, k)?;
        out.push(LefschetzCertificate {
            f_vector: ring.algebra().complex().f_vector(),
            field: f.kind().to_string(),
            seed: opts.seed,
            trial: t,
            trials_run: t + 1,
            theta_seed: None,
            ell_seed,
            variant: Variant::A,
            k,
            power: d - 2 * k,
            ell: scalar_strings(f, &ell),
            rank: rk,
            source_dim: ring.dim(k),
            target_dim: ring.dim(d - k),
            verdict: Verdict::from_bool(rk == ring.dim(k) && rk == ring.dim(d - k)),
            notes: vec!["fixed realization".into()],
        });
    }
    Ok(out)
}

/// Regenerates the realization and ℓ recorded in a certificate.
pub fn witness<F: Field>(c: &SimplicialComplex, field: &F, cert: &LefschetzCertificate, bound: u64) -> Result<(Realization<F>, Vec<F::Elem>)> {
    let theta = cert.theta_seed.ok_or_else(|| Error::InvalidParameter("certificate has no realization seed".into()))?;
    let d = (c.dim() + 1) as usize;
    let (r, _) = random_realization(c, d, field, theta, bound)?;
    let ell = random_linear_form(field, c.ground_size(), &mut seeds::rng(cert.seed, "ell", cert.trial as u64), bound);
    Ok((r, ell))
}

/// `ℓ = Σ_i ratio^{−i} x_{order[i]}`. Over ordered fields `|ratio| > 1` is
/// required; over prime fields, where decay has no meaning, only
/// `ratio ∉ {0, ±1}`.
pub fn decaying_element<F: Field>(field: &F, n: usize, order: &[usize], ratio: &F::Elem) -> Result<Vec<F::Elem>> {
    let one = field.one();
    let sq = field.sub(&field.mul(ratio, ratio), &one);
    let ok = match field.sign(&sq) {
        Some(s) => s > 0,
        None => !field.is_zero(ratio) && !field.is_zero(&sq),
    };
    if !ok {
        return Err(Error::InvalidParameter("decaying elements need |ratio| > 1".into()));
    }
    let inv = field.inv(ratio).expect("nonzero ratio");
    let mut ell = vec![field.zero(); n];
    let mut eps = one;
    for &v in order {
        if v >= n {
            return Err(Error::InvalidParameter(format!("vertex index {v} out of range")));
        }
        ell[v] = eps.clone();
        eps = field.mul(&eps, &inv);
    }
    Ok(ell)
}

/// Relative Lefschetz on one ball of the decomposition:
/// `A^k(Δ, ∂Δ) → A^{d−k}(Δ, ∂Δ) → A^{d−k}(Δ)`.
#[derive(Clone, Debug, Serialize)]
pub struct BallStep {
    pub removed: Vec<String>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct LDecompositionReport {
    pub order: Vec<String>,
    pub ratio: String,
    pub certificate: LefschetzCertificate,
    pub balls: Vec<BallStep>,
    pub verdict: Verdict,
}

fn ball_step<F: Field>(ball: &SimplicialComplex, r: &Realization<F>, ell: &[F::Elem], k: usize) -> Result<(usize, usize, usize)> {
    let d = r.dim();
    let top = d - k;
    let rel = GradedModule::build(RelativeComplex::new(ball.clone(), ball.boundary())?, r, top)?;
    let abs = GradedModule::build(RelativeComplex::absolute(ball.clone()), r, top)?;
    let p = rel.power_map(k, ell, d - 2 * k)?;
    let incl = rel.monomial_map_into(top, &abs)?;
    let rk = rank(&incl.mul(&p)?);
    Ok((rel.dim(k), abs.dim(top), rk))
}

/// Lefschetz for an L-decomposable sphere with ℓ decaying along the
/// decomposition, plus the relative Lefschetz isomorphism on every ball
/// `Σ − v₁ − … − v_j` of the decomposition.
pub fn l_decomposable_lefschetz<F: Field>(c: &SimplicialComplex, field: &F, k: usize, ratio: &F::Elem, opts: &SampleOptions) -> Result<LDecompositionReport> {
    if !is_homology_sphere(c, &Rationals) {
        return Err(Error::Unsupported("L-decomposable Lefschetz is checked on spheres".into()));
    }
    let order = l_decomposition(c)?.ok_or_else(|| Error::InvalidParameter("complex is not L-decomposable".into()))?;
    let d = (c.dim() + 1) as usize;
    if 2 * k > d {
        return Err(Error::InvalidParameter(format!("Lefschetz maps need 2k ≤ d, got k = {k}, d = {d}")));
    }
    let mut full_order = order.clone();
    let mut rest = c.clone();
    for &v in &order {
        rest = rest.deletion(1 << v)?;
    }
    full_order.extend(face_vertices(rest.vertex_set()));
    let ell = decaying_element(field, c.ground_size(), &full_order, ratio)?;
    let mut last = None;
    for t in 0..opts.trials.max(1) {
        let (ring, prov) = sample_ring(c, field, opts, t, Some(d - k))?;
        let r = ring.algebra().realization().clone();
        let rk = lefschetz_rank(&ring, &ell, k)?;
        let ok = rk == ring.dim(k) && rk == ring.dim(d - k);
        let mut balls = Vec::new();
        let mut ball = c.clone();
        let mut removed = Vec::new();
        for &v in &order {
            ball = ball.deletion(1 << v)?;
            removed.push(c.label(v).to_string());
            let (s, tgt, brk) = ball_step(&ball, &r, &ell, k)?;
            balls.push(BallStep { removed: removed.clone(), source_dim: s, target_dim: tgt, rank: brk, verdict: Verdict::from_bool(brk == s && s == tgt) });
        }
        let all = ok && balls.iter().all(|b| b.verdict.is_pass());
        let cert = LefschetzCertificate {
            f_vector: c.f_vector(),
            field: field.kind().to_string(),
            seed: opts.seed,
            trial: t,
            trials_run: t + 1,
            theta_seed: Some(prov.theta_seed),
            ell_seed: 0,
            variant: Variant::A,
            k,
            power: d - 2 * k,
            ell: scalar_strings(field, &ell),
            rank: rk,
            source_dim: ring.dim(k),
            target_dim: ring.dim(d - k),
            verdict: Verdict::from_bool(ok),
            notes: vec!["ℓ decays along the decomposition order".into()],
        };
        let rep = LDecompositionReport {
            order: full_order.iter().map(|&v| c.label(v).to_string()).collect(),
            ratio: field.to_scalar(ratio).to_string(),
            certificate: cert,
            balls,
            verdict: Verdict::from_bool(all),
        };
        if all {
            return Ok(rep);
        }
        last = Some(rep);
    }
    Ok(last.expect("at least one trial"))
}
