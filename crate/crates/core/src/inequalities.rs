//! Face-number inequalities: f/h/g-vectors, the Macaulay test, GKS with its
//! κ re-derivation, Kühnel's bounds, the crossing-number bound and the
//! homological complexity norms of induced subcomplexes.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use rand::seq::index::sample as sample_indices;
use serde::Serialize;

use crate::artinian::{monomial_classes, Gorenstein, GradedAlgebra};
use crate::complex::{betti, face_size, face_vertices, is_homology_manifold, is_homology_sphere, subfaces, Face, ManifoldKind, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{Field, Rationals, SparseVec, Subspace};
use crate::lefschetz::{witness, LefschetzCertificate};
use crate::realization::{random_realization, Realization};
use crate::report::Verdict;
use crate::seeds;

fn binom_i(n: i64, k: i64) -> i64 {
    if k < 0 || n < k || n < 0 {
        0
    } else {
        binomial(n, k)
    }
}

fn binom_big(n: i64, k: u64) -> BigUint {
    if n < 0 || (n as u64) < k {
        BigUint::from(0u32)
    } else {
        binomial(BigUint::from(n as u64), BigUint::from(k))
    }
}

/// `h_k = Σ_i (−1)^{k−i} C(d−i, k−i) f_{i−1}`. Accepts `(f_0, …, f_{d−1})`
/// with `f_{−1} = 1` implied, or `(f_{−1}, f_0, …, f_{d−1})`.
pub fn f_to_h(f: &[i64], d: usize) -> Result<Vec<i64>> {
    let full: Vec<i64> = match f.len() {
        l if l == d => std::iter::once(1).chain(f.iter().copied()).collect(),
        l if l == d + 1 => f.to_vec(),
        l => return Err(Error::DimensionMismatch(format!("f-vector of length {l} for d = {d}"))),
    };
    let d = d as i64;
    Ok((0..=d)
        .map(|k| (0..=k).map(|i| if (k - i) % 2 == 0 { 1 } else { -1 } * binom_i(d - i, k - i) * full[i as usize]).sum())
        .collect())
}

/// Inverse of [`f_to_h`]: returns `(f_{−1}, f_0, …, f_{d−1})`.
pub fn h_to_f(h: &[i64], d: usize) -> Result<Vec<i64>> {
    if h.len() != d + 1 {
        return Err(Error::DimensionMismatch(format!("h-vector of length {} for d = {d}", h.len())));
    }
    let d = d as i64;
    Ok((0..=d).map(|k| (0..=k).map(|i| binom_i(d - i, k - i) * h[i as usize]).sum()).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct GVector {
    /// `g_i = dim B^i − rank(ℓ : B^{i−1} → B^i)` for `i ≤ d/2`.
    pub g: Vec<i64>,
    /// `dim B^i − dim B^{i−1}`; the h-vector differences for spheres.
    pub differences: Vec<i64>,
    pub agrees: bool,
}

/// Primitive Betti numbers computed with the witness of a passing certificate.
pub fn g_vector<F: Field>(c: &SimplicialComplex, field: &F, cert: &LefschetzCertificate, bound: u64) -> Result<GVector> {
    if !cert.verdict.is_pass() {
        return Err(Error::InvalidParameter("g-vector needs a passing Lefschetz certificate".into()));
    }
    let d = (c.dim() + 1) as usize;
    let (r, ell) = witness(c, field, cert, bound)?;
    let ring = crate::lefschetz::ring_for(c, &r, Some(d / 2))?;
    let mut g = vec![ring.dim(0) as i64];
    let mut differences = vec![ring.dim(0) as i64];
    for i in 1..=d / 2 {
        let rk = crate::exactla::rank(&ring.linear_map(i - 1, &ell)?);
        g.push(ring.dim(i) as i64 - rk as i64);
        differences.push(ring.dim(i) as i64 - ring.dim(i - 1) as i64);
    }
    Ok(GVector { agrees: g == differences, g, differences })
}

/// Greedy `i`-th Macaulay representation `a = Σ_j C(a_j, j)`, as `(a_j, j)`
/// pairs with `a_i > a_{i−1} > … ≥ a_j ≥ j ≥ 1`.
pub fn macaulay_representation(a: u64, i: usize) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut rest = a as u128;
    let mut j = i;
    while rest > 0 && j >= 1 {
        let mut top = j as u64;
        while binomial(top as u128 + 1, j as u128) <= rest {
            top += 1;
        }
        rest -= binomial(top as u128, j as u128);
        out.push((top, j));
        j -= 1;
    }
    out
}

/// `a^{<i>} = Σ_j C(a_j + 1, j + 1)`, the largest value that may follow `a`
/// in degree `i + 1` of an M-sequence.
pub fn macaulay_bound(a: u64, i: usize) -> u128 {
    macaulay_representation(a, i).iter().map(|&(t, j)| binomial(t as u128 + 1, j as u128 + 1)).sum()
}

/// Whether `g` is an M-sequence: `g_0 = 1`, entries nonnegative and
/// `g_{i+1} ≤ g_i^{<i>}` for `i ≥ 1`.
pub fn is_m_sequence(g: &[i64]) -> bool {
    if g.first() != Some(&1) || g.iter().any(|&x| x < 0) {
        return false;
    }
    (1..g.len().saturating_sub(1)).all(|i| g[i + 1] as u128 <= macaulay_bound(g[i] as u64, i))
}

/// Chain of estimates that re-derives GKS from middle monotonicity:
/// `f_k − (k+1) f_{k−1} ≤ a_{k+1} ≤ a_k ≤ f_{k−1}` with `a_j = dim A^j(Δ)`.
#[derive(Clone, Debug, Serialize)]
pub struct KappaChain {
    pub k: usize,
    pub kappa_k: usize,
    pub kappa_k1: usize,
    pub a_k: usize,
    pub a_k1: usize,
    pub monotone: bool,
    pub upper: bool,
    pub lower: bool,
    pub derived: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GksReport {
    pub d: usize,
    pub f_d: i64,
    pub f_d_minus_1: i64,
    /// `(d + 2) f_{d−1}` plus the manifold correction, if any.
    pub bound: i64,
    pub betti_correction: i64,
    pub slack: i64,
    pub verdict: Verdict,
    pub chain: Option<KappaChain>,
    /// Whether the κ chain (when present) and the direct count agree.
    pub agrees: Option<bool>,
}

fn f_at(f: &[usize], i: i64) -> i64 {
    if i == -1 {
        1
    } else {
        f.get(i as usize).map_or(0, |&x| x as i64)
    }
}

/// `f_d(Δ) ≤ (d + 2) f_{d−1}(Δ)` for a complex of dimension at most `d`.
pub fn gks_check(delta: &SimplicialComplex, d: usize) -> Result<GksReport> {
    gks_with_correction(delta, d, 0)
}

fn gks_with_correction(delta: &SimplicialComplex, d: usize, correction: i64) -> Result<GksReport> {
    if delta.dim() > d as i32 {
        return Err(Error::DimensionMismatch(format!("complex of dimension {} exceeds d = {d}", delta.dim())));
    }
    let f = delta.f_vector();
    let (fd, fd1) = (f_at(&f, d as i64), if delta.is_void() { 0 } else { f_at(&f, d as i64 - 1) });
    let bound = (d as i64 + 2) * fd1 + correction;
    Ok(GksReport {
        d,
        f_d: fd,
        f_d_minus_1: fd1,
        bound,
        betti_correction: correction,
        slack: bound - fd,
        verdict: Verdict::from_bool(fd <= bound),
        chain: None,
        agrees: None,
    })
}

/// `f_d(Δ) ≤ (d + 2) f_{d−1}(Δ) + C(2d+1, d) b_d(M)` for Δ inside a closed
/// 2d-manifold M.
pub fn gks_manifold_bound(delta: &SimplicialComplex, m: &SimplicialComplex, d: usize) -> Result<GksReport> {
    if !delta.is_subcomplex_of(m) {
        return Err(Error::NotSubcomplex("Δ is not a subcomplex of M".into()));
    }
    if m.dim() != 2 * d as i32 {
        return Err(Error::DimensionMismatch(format!("M has dimension {}, expected {}", m.dim(), 2 * d)));
    }
    if is_homology_manifold(m, &Rationals) != ManifoldKind::Closed {
        return Err(Error::Unsupported("M is not a closed homology manifold".into()));
    }
    let b = betti(m, &Rationals);
    let bd = b.get(d + 1).copied().unwrap_or(0) as i64;
    gks_with_correction(delta, d, binom_i(2 * d as i64 + 1, d as i64) * bd)
}

/// A 2k-sphere with a fixed realization and the classes of all monomials of
/// degrees k and k + 1, from which κ of any subcomplex is a rank.
pub struct GksAmbient<F: Field> {
    k: usize,
    sphere: SimplicialComplex,
    ring: Gorenstein<F>,
    classes: [Vec<(Face, SparseVec<F::Elem>)>; 2],
}

impl<F: Field> GksAmbient<F> {
    pub fn new(sphere: &SimplicialComplex, r: &Realization<F>) -> Result<Self> {
        let dim = sphere.dim();
        if dim < 0 || dim % 2 == 1 || !is_homology_sphere(sphere, &Rationals) {
            return Err(Error::Unsupported("the κ derivation needs an even-dimensional homology sphere".into()));
        }
        let k = dim as usize / 2;
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build_to(sphere, r, k + 1)?);
        let cls = |j| monomial_classes(&ring, j).into_iter().map(|(m, v)| (m.support(), v)).collect();
        let classes = [cls(k), cls(k + 1)];
        Ok(GksAmbient { k, sphere: sphere.clone(), ring, classes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn kappa(&self, which: usize, is_face: &dyn Fn(Face) -> bool) -> usize {
        let j = self.k + which;
        let gens = self.classes[which].iter().filter(|(s, _)| !is_face(*s)).map(|(_, v)| v.clone()).collect();
        Subspace::span(self.ring.field().clone(), self.ring.dim(j), gens).dim()
    }

    fn chain_for(&self, is_face: &dyn Fn(Face) -> bool, f_km1: i64, f_k: i64) -> KappaChain {
        let k = self.k;
        let (kk, kk1) = (self.kappa(0, is_face), self.kappa(1, is_face));
        let (a_k, a_k1) = (self.ring.dim(k) - kk, self.ring.dim(k + 1) - kk1);
        let monotone = kk <= kk1;
        let upper = a_k as i64 <= f_km1;
        let lower = a_k1 as i64 >= f_k - (k as i64 + 1) * f_km1;
        KappaChain { k, kappa_k: kk, kappa_k1: kk1, a_k, a_k1, monotone, upper, lower, derived: monotone && upper && lower }
    }

    /// GKS for a subcomplex, with the κ chain attached.
    pub fn check(&self, delta: &SimplicialComplex) -> Result<GksReport> {
        if !delta.is_subcomplex_of(&self.sphere) {
            return Err(Error::NotSubcomplex("Δ is not a subcomplex of the ambient sphere".into()));
        }
        let mut rep = gks_check(delta, self.k)?;
        let chain = self.chain_for(&|s| delta.is_face(s), rep.f_d_minus_1, rep.f_d);
        rep.agrees = Some(chain.derived == rep.verdict.is_pass());
        rep.chain = Some(chain);
        Ok(rep)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GksSweepReport {
    pub k: usize,
    pub subcomplexes: usize,
    pub violations: usize,
    pub chain_failures: usize,
    pub disagreements: usize,
    pub min_slack: i64,
    pub verdict: Verdict,
}

/// Cap on the number of subcomplexes a sweep may enumerate.
pub const SWEEP_CAP: usize = 1 << 20;

/// GKS with κ derivation on every subcomplex of a 2k-sphere generated by
/// k-faces and (k−1)-faces (for k = 1: every subgraph, isolated vertices
/// included).
pub fn gks_sweep<F: Field>(sphere: &SimplicialComplex, field: &F, seed: u64, bound: u64) -> Result<GksSweepReport> {
    let dim = sphere.dim().max(0) as usize;
    let (r, _) = random_realization(sphere, dim + 1, field, seed, bound)?;
    let amb = GksAmbient::new(sphere, &r)?;
    let k = amb.k;
    let tops: Vec<Face> = sphere.faces_of_size(k + 1).collect();
    let lows: Vec<Face> = sphere.faces_of_size(k).collect();
    if tops.len() > 24 || lows.len() > 24 {
        return Err(Error::Limit(format!("{} k-faces and {} (k−1)-faces are too many to enumerate", tops.len(), lows.len())));
    }
    let mut rep = GksSweepReport { k, subcomplexes: 0, violations: 0, chain_failures: 0, disagreements: 0, min_slack: i64::MAX, verdict: Verdict::Pass };
    for s in 0u64..1 << tops.len() {
        let chosen: Vec<Face> = (0..tops.len()).filter(|i| s >> i & 1 == 1).map(|i| tops[i]).collect();
        let covered: Vec<bool> = lows.iter().map(|&l| chosen.iter().any(|&t| t & l == l)).collect();
        let free: Vec<usize> = (0..lows.len()).filter(|&i| !covered[i]).collect();
        rep.subcomplexes += 1 << free.len();
        if rep.subcomplexes > SWEEP_CAP {
            return Err(Error::Limit(format!("more than {SWEEP_CAP} subcomplexes")));
        }
        for e in 0u64..1 << free.len() {
            let mut low_in: Vec<bool> = covered.clone();
            for (b, &i) in free.iter().enumerate() {
                if e >> b & 1 == 1 {
                    low_in[i] = true;
                }
            }
            let gens: Vec<Face> = chosen.iter().copied().chain((0..lows.len()).filter(|&i| low_in[i]).map(|i| lows[i])).collect();
            let is_face = |f: Face| {
                let sz = face_size(f);
                if sz > k + 1 {
                    false
                } else {
                    gens.iter().any(|&g| g & f == f) || (gens.is_empty() && f == 0)
                }
            };
            let f_k = chosen.len() as i64;
            let f_km1 = if k == 0 { 1 } else { low_in.iter().filter(|&&b| b).count() as i64 };
            let slack = (k as i64 + 2) * f_km1 - f_k;
            let chain = amb.chain_for(&is_face, f_km1, f_k);
            rep.min_slack = rep.min_slack.min(slack);
            rep.violations += usize::from(slack < 0);
            rep.chain_failures += usize::from(!chain.derived);
            rep.disagreements += usize::from(chain.derived != (slack >= 0));
        }
    }
    rep.verdict = Verdict::from_bool(rep.violations == 0 && rep.chain_failures == 0 && rep.disagreements == 0);
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct KuhnelTerm {
    pub j: usize,
    pub betti: usize,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct KuhnelReport {
    pub n: usize,
    pub d: usize,
    pub terms: Vec<KuhnelTerm>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// `C(d+1, j) b_{j−1} ≤ C(n−d+j−2, j)` for `1 ≤ j ≤ d/2`, with `b` the
/// reduced Betti numbers `b̃_{−1}, b̃_0, …`.
pub fn kuhnel_bound(n: usize, d: usize, reduced_betti: &[usize]) -> Vec<KuhnelTerm> {
    (1..=d / 2)
        .map(|j| {
            let b = reduced_betti.get(j).copied().unwrap_or(0);
            let lhs = binom_big(d as i64 + 1, j as u64) * BigUint::from(b);
            let rhs = binom_big(n as i64 - d as i64 + j as i64 - 2, j as u64);
            KuhnelTerm { j, betti: b, verdict: Verdict::from_bool(lhs <= rhs), lhs: lhs.to_string(), rhs: rhs.to_string() }
        })
        .collect()
}

/// Kühnel's Betti-number bounds for a closed (d−1)-manifold on its vertices.
pub fn kuhnel_check(m: &SimplicialComplex) -> KuhnelReport {
    let d = (m.dim() + 1).max(0) as usize;
    let n = m.num_vertices();
    let mut notes = Vec::new();
    if is_homology_manifold(m, &Rationals) != ManifoldKind::Closed {
        notes.push("not a closed homology manifold".into());
        return KuhnelReport { n, d, terms: Vec::new(), verdict: Verdict::Skipped, notes };
    }
    let terms = kuhnel_bound(n, d, &betti(m, &Rationals));
    if terms.is_empty() {
        notes.push("no j with 1 ≤ j ≤ d/2".into());
    }
    let verdict = Verdict::from_bool(terms.iter().all(|t| t.verdict.is_pass()));
    KuhnelReport { n, d, terms, verdict, notes }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompleteBoundReport {
    pub n: usize,
    pub k: usize,
    pub betti: usize,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
}

/// `C(n−k−1, k+1) ≤ C(2k+1, k+1) b_k(M)`: how many vertices a complete
/// k-complex tamely embedded in M can have.
pub fn kuhnel_complete_bound(n: usize, k: usize, b_k: usize) -> CompleteBoundReport {
    let lhs = binom_big(n as i64 - k as i64 - 1, k as u64 + 1);
    let rhs = binom_big(2 * k as i64 + 1, k as u64 + 1) * BigUint::from(b_k);
    CompleteBoundReport { n, k, betti: b_k, verdict: Verdict::from_bool(lhs <= rhs), lhs: lhs.to_string(), rhs: rhs.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum CrossingBound {
    /// Exact lower bound on the d-th crossing number, as `p/q`.
    Bound(String),
    NotApplicable,
}

/// `cr_d ≥ f_d^{d+2} / ((d+3)^{d+2} f_{d−1}^{d+1})` when `f_d > (d+3) f_{d−1}`.
pub fn crossing_bound(f_d: u64, f_dm1: u64, d: usize) -> Option<BigRational> {
    let (fd, fd1) = (BigInt::from(f_d), BigInt::from(f_dm1));
    let c = BigInt::from(d as u64 + 3);
    if f_dm1 == 0 || fd <= &c * &fd1 {
        return None;
    }
    let e = d as u32 + 2;
    Some(BigRational::new(num_traits::pow(fd, e as usize), num_traits::pow(c, e as usize) * num_traits::pow(fd1, e as usize - 1)))
}

pub fn crossing_report(f_d: u64, f_dm1: u64, d: usize) -> CrossingBound {
    match crossing_bound(f_d, f_dm1, d) {
        Some(b) => CrossingBound::Bound(b.to_string()),
        None => CrossingBound::NotApplicable,
    }
}

#[derive(Clone, Copy, Debug)]
pub struct NormOptions {
    pub m_cap: usize,
    pub sample_budget: usize,
    pub seed: u64,
    /// Exhaustive enumeration up to this many vertices.
    pub exhaustive_up_to: usize,
}

impl Default for NormOptions {
    fn default() -> Self {
        NormOptions { m_cap: usize::MAX, sample_budget: 4096, seed: 0, exhaustive_up_to: 18 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexityNorms {
    pub k: usize,
    pub n: usize,
    pub exact: bool,
    /// `|Σ|_{k−1,1,m}` for `m = 0..=m_cap`; estimates when sampling.
    pub one_norm: Vec<f64>,
    /// Subsets examined per m.
    pub examined: Vec<u64>,
    /// `|Σ|_{k−1,∞}` (a lower bound when sampling).
    pub inf_norm: usize,
    pub g_k: Option<i64>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

fn induced_betti(c: &SimplicialComplex, w: Face, k: usize) -> usize {
    betti(&c.induced(w), &Rationals).get(k).copied().unwrap_or(0)
}

/// 1-norms and ∞-norm of `b̃_{k−1}` over induced subcomplexes, compared
/// with `g_k` when given.
pub fn complexity_norms(c: &SimplicialComplex, k: usize, g_k: Option<i64>, opts: &NormOptions) -> Result<ComplexityNorms> {
    let verts = c.vertices();
    let n = verts.len();
    let mcap = opts.m_cap.min(n);
    let exact = n <= opts.exhaustive_up_to;
    let mut sums = vec![0u64; mcap + 1];
    let mut examined = vec![0u64; mcap + 1];
    let mut inf = 0usize;
    let to_face = |bits: u64| -> Face { face_vertices(bits).map(|i| verts[i]).fold(0, |acc, v| acc | 1 << v) };
    if exact {
        let total = 1u64 << n;
        let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(64) as u64;
        let block = total.div_ceil(workers);
        let parts: Vec<(Vec<u64>, Vec<u64>, usize)> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|b| {
                    let to_face = &to_face;
                    s.spawn(move || {
                        let (mut su, mut ex, mut mx) = (vec![0u64; mcap + 1], vec![0u64; mcap + 1], 0usize);
                        for bits in b * block..((b + 1) * block).min(total) {
                            let m = bits.count_ones() as usize;
                            let x = induced_betti(c, to_face(bits), k);
                            mx = mx.max(x);
                            if m <= mcap {
                                su[m] += x as u64;
                                ex[m] += 1;
                            }
                        }
                        (su, ex, mx)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for (su, ex, mx) in parts {
            for m in 0..=mcap {
                sums[m] += su[m];
                examined[m] += ex[m];
            }
            inf = inf.max(mx);
        }
    } else {
        let per = (opts.sample_budget / (mcap + 1)).max(1);
        for m in 0..=mcap {
            let mut rng = seeds::rng(opts.seed, "norms", m as u64);
            for _ in 0..per {
                let bits = sample_indices(&mut rng, n, m).into_iter().fold(0u64, |acc, i| acc | 1 << i);
                let x = induced_betti(c, to_face(bits), k);
                inf = inf.max(x);
                sums[m] += x as u64;
                examined[m] += 1;
            }
        }
    }
    let one_norm = (0..=mcap)
        .map(|m| {
            if exact {
                sums[m] as f64
            } else {
                sums[m] as f64 / examined[m].max(1) as f64 * binom_big(n as i64, m as u64).to_string().parse::<f64>().unwrap_or(f64::INFINITY)
            }
        })
        .collect();
    let mut notes = Vec::new();
    let d = (c.dim() + 1).max(0) as usize;
    if 2 * k > d {
        notes.push(format!("the ∞-norm bound is stated for k ≤ d/2; here k = {k}, d = {d}"));
    }
    if !exact {
        notes.push(format!("sampled: {} subsets per size", (opts.sample_budget / (mcap + 1)).max(1)));
    }
    let verdict = match g_k {
        Some(g) => Verdict::from_bool(inf as i64 <= g),
        None => Verdict::Skipped,
    };
    Ok(ComplexityNorms { k, n, exact, one_norm, examined, inf_norm: inf, g_k, verdict, notes })
}

/// One CSV line of an inequality report.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityRow {
    pub instance: String,
    pub check: String,
    pub parameter: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
}

impl GksReport {
    pub fn row(&self, instance: &str) -> InequalityRow {
        InequalityRow { instance: instance.into(), check: "gks".into(), parameter: format!("d={}", self.d), lhs: self.f_d.to_string(), rhs: self.bound.to_string(), verdict: self.verdict }
    }
}

impl KuhnelReport {
    pub fn rows(&self, instance: &str) -> Vec<InequalityRow> {
        self.terms
            .iter()
            .map(|t| InequalityRow { instance: instance.into(), check: "kuhnel".into(), parameter: format!("j={}", t.j), lhs: t.lhs.clone(), rhs: t.rhs.clone(), verdict: t.verdict })
            .collect()
    }
}

/// All faces of `c` that are generated by `gens` (used by tests and the CLI
/// to build explicit subcomplexes).
pub fn closure(c: &SimplicialComplex, gens: &[Face]) -> SimplicialComplex {
    let mut fs: Vec<Face> = gens.iter().flat_map(|&g| subfaces(g)).collect();
    fs.sort_unstable();
    fs.dedup();
    c.sibling(fs)
}
