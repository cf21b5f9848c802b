//! Acceptance suite: one line per criterion, with wall-clock against its
//! budget. Exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use stresslab::artinian::{Gorenstein, GradedAlgebra, MonomialIdeal};
use stresslab::complex::{
    betti, boundary_crosspolytope, boundary_simplex, cycle, cyclic_polytope_boundary, icosahedron, is_homology_sphere, l_decomposition, moebius_torus_7,
    stacked_sphere, RelativeComplex, SimplicialComplex,
};
use stresslab::exactla::{random_prime_near_2_31, Field, PrimeField, Rationals};
use stresslab::inequalities::{crossing_bound, gks_sweep, kuhnel_check};
use stresslab::lefschetz::{
    approximation_check, biased_pd, hall_laman_check, kappa_monotonicity, kazhdan_example, l_decomposable_lefschetz, lefschetz_check, lefschetz_rank,
    perturbation_check, poincare_pairing, random_low_rank, ring_for, sample_ring, witness, SampleOptions,
};
use stresslab::realization::{random_linear_form, random_realization, special_realization_bad_reduction, Realization, DEFAULT_BOUND};
use stresslab::rigidity::{graphs_up_to_isomorphism, is_laman, is_laman_by_subsets, lefschetz_rigidity_check, pebble_game, sample_graphs, Graph};
use stresslab::seeds;
use stresslab::stress::{cone_lemma_check, minkowski_weights, partition_of_unity_check, stress_space_of};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e(err: impl std::fmt::Display) -> String {
    err.to_string()
}

/// The field `fp:random` draws for a seed.
fn fp(seed: u64) -> PrimeField {
    PrimeField::new(random_prime_near_2_31(&mut seeds::rng(seed, "prime", 0))).expect("prime")
}

fn dim_d(c: &SimplicialComplex) -> usize {
    (c.dim() + 1) as usize
}

fn bad_reduction() -> Outcome {
    let q = Rationals;
    let (sigma, r, delta) = special_realization_bad_reduction(&q);
    let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&sigma, &r).map_err(e)?);
    let ideal = MonomialIdeal::new(&ring, &delta).map_err(e)?;
    for t in 0..10 {
        let ell = random_linear_form(&q, ring.n(), &mut seeds::rng(0, "ell", t), DEFAULT_BOUND);
        let rep = kappa_monotonicity(&ring, &ideal, 1, &ell).map_err(e)?;
        ensure((rep.kappa_k, rep.kappa_k1) == (3, 2), format!("κ = ({}, {})", rep.kappa_k, rep.kappa_k1))?;
        ensure(!rep.monotone && !rep.verdict.is_pass(), "monotonicity not flagged")?;
        let rk = lefschetz_rank(&ring, &ell, 1).map_err(e)?;
        ensure(rk < ring.dim(1) && rep.ell_rank < rep.source_dim, format!("ℓ {t} is injective on A^1"))?;
    }
    Ok("κ_1 = 3, κ_2 = 2; 10/10 ℓ singular on A^1 → A^2".into())
}

fn circle_biased_pd() -> Outcome {
    let q = Rationals;
    let c = cycle(4);
    let delta = c.sibling(vec![0b0001, 0b0100]);
    let mut out = Vec::new();
    for (coords, want) in [(vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]], false), (vec![vec![1, 0], vec![0, 1], vec![-1, 2], vec![0, -1]], true)] {
        let r = Realization::from_integers(q, &coords).map_err(e)?;
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&c, &r).map_err(e)?);
        let rep = biased_pd(&ring, &MonomialIdeal::new(&ring, &delta).map_err(e)?, 1).map_err(e)?;
        ensure(rep.is_nondegenerate() == want, format!("nondegenerate = {} for {coords:?}", rep.is_nondegenerate()))?;
        out.push(if want { "skew: nondegenerate" } else { "collinear: degenerate" });
    }
    Ok(out.join(", "))
}

fn poincare_suite() -> Outcome {
    let mut corpus: Vec<(String, SimplicialComplex)> = (1..=5).map(|d| (format!("∂Δ^{d}"), boundary_simplex(d))).collect();
    corpus.extend((1..=4).map(|d| (format!("∂♦^{d}"), boundary_crosspolytope(d))));
    corpus.push(("icosahedron".into(), icosahedron()));
    corpus.push(("∂C(7,4)".into(), cyclic_polytope_boundary(7, 4).map_err(e)?));
    let mut pairings = 0;
    for seed in 0..3 {
        let f = fp(seed);
        for (name, c) in &corpus {
            let (ring, _) = sample_ring(c, &f, &SampleOptions::new(seed, 1), 0, None).map_err(e)?;
            for k in 0..=ring.d() {
                let rep = poincare_pairing(&ring, k).map_err(e)?;
                ensure(rep.rank == ring.dim(k) && rep.verdict.is_pass(), format!("{name} seed {seed} k={k}: rank {} of {}", rep.rank, ring.dim(k)))?;
                pairings += 1;
            }
        }
    }
    Ok(format!("{} complexes × 3 seeds, {pairings} full-rank Gram matrices", corpus.len()))
}

fn generic_lefschetz() -> Outcome {
    let f = fp(0);
    let opts = SampleOptions::new(0, 5);
    let c74 = cyclic_polytope_boundary(7, 4).map_err(e)?;
    let cross = boundary_crosspolytope(4);
    let cases = [("icosahedron", icosahedron(), 1, 9), ("∂C(7,4)", c74.clone(), 1, 3), ("∂C(7,4)", c74, 2, 6), ("∂♦⁴", cross.clone(), 1, 4), ("∂♦⁴", cross, 2, 6)];
    let mut out = Vec::new();
    for (name, c, k, want) in cases {
        let cert = lefschetz_check(&c, &f, k, &opts).map_err(e)?;
        ensure(cert.verdict.is_pass() && cert.rank == want, format!("{name} k={k}: rank {} (want {want})", cert.rank))?;
        let (r, ell) = witness(&c, &Rationals, &cert, opts.bound).map_err(e)?;
        let ring = ring_for(&c, &r, Some(dim_d(&c) - k)).map_err(e)?;
        let rk = lefschetz_rank(&ring, &ell, k).map_err(e)?;
        ensure(rk == want, format!("{name} k={k}: rank {rk} over ℚ"))?;
        out.push(format!("{name} k={k} rank {want} (trial {})", cert.trial));
    }
    Ok(format!("{}; all re-certified over ℚ", out.join(", ")))
}

fn hall_laman_instances() -> Outcome {
    let f = fp(0);
    let c = boundary_crosspolytope(4);
    let mut forms = 0;
    for v in c.vertices() {
        let star = c.star(1 << v).map_err(e)?;
        let reps = hall_laman_check(&c, &star, &f, 1, &SampleOptions::new(0, 5)).map_err(e)?;
        for rep in &reps {
            ensure(rep.is_nondegenerate(), format!("vertex {v} {}: rank {} of {}", rep.restriction, rep.rank, rep.subspace_dim))?;
            forms += 1;
        }
    }
    Ok(format!("{forms} restricted forms on ∂♦⁴ (8 stars and annihilators) nondegenerate"))
}

fn l_decomposable() -> Outcome {
    let f = fp(0);
    let ratio = f.from_i64(10);
    let mut sizes = Vec::new();
    for i in 0..20u64 {
        let c = stacked_sphere(3, (i % 8) as usize, i).map_err(e)?;
        ensure(c.vertices().len() <= 12, "stacked sphere too large")?;
        let rep = l_decomposable_lefschetz(&c, &f, 1, &ratio, &SampleOptions::new(i, 5)).map_err(e)?;
        ensure(rep.verdict.is_pass(), format!("stacked sphere {i}: rank {} of {}", rep.certificate.rank, rep.certificate.source_dim))?;
        sizes.push(c.vertices().len());
    }
    Ok(format!("20 stacked 3-spheres ({}–{} vertices) pass with decaying ℓ", sizes.iter().min().unwrap(), sizes.iter().max().unwrap()))
}

fn weil_cone_partition() -> Outcome {
    let f = fp(0);
    let corpus: Vec<(&str, SimplicialComplex)> = vec![
        ("∂Δ²", boundary_simplex(2)),
        ("∂Δ³", boundary_simplex(3)),
        ("∂Δ⁴", boundary_simplex(4)),
        ("octahedron", boundary_crosspolytope(3)),
        ("∂♦⁴", boundary_crosspolytope(4)),
        ("icosahedron", icosahedron()),
        ("∂C(7,4)", cyclic_polytope_boundary(7, 4).map_err(e)?),
        ("stacked", stacked_sphere(3, 3, 1).map_err(e)?),
        ("cycle", cycle(5)),
        ("torus", moebius_torus_7()),
    ];
    let (mut degrees, mut cones, mut partitions) = (0, 0, 0);
    for (name, c) in &corpus {
        let d = dim_d(c);
        let (r, _) = random_realization(c, d, &f, seeds::derive(0, "theta", 0), DEFAULT_BOUND).map_err(e)?;
        let alg = GradedAlgebra::build(c, &r).map_err(e)?;
        let pair = RelativeComplex::absolute(c.clone());
        for k in 0..=d {
            let (a, s, m) = (alg.dim(k), stress_space_of(c, &r, k).map_err(e)?.dim(), minkowski_weights(&pair, &r, k).map_err(e)?.dim());
            ensure(a == s && s == m, format!("{name} k={k}: A {a}, stresses {s}, weights {m}"))?;
            degrees += 1;
        }
        for v in c.vertices() {
            for k in 0..d {
                let rep = cone_lemma_check(c, &r, v, k).map_err(e)?;
                ensure(rep.verdict.is_pass(), format!("{name} cone lemma at {} k={k}", rep.vertex))?;
                cones += 1;
            }
        }
        let sphere = is_homology_sphere(c, &Rationals);
        for k in 0..d {
            let rep = partition_of_unity_check(c, &r, k).map_err(e)?;
            if sphere {
                ensure(rep.kernel_dim == 0 && rep.verdict.is_pass(), format!("{name} partition of unity k={k}: kernel {}", rep.kernel_dim))?;
            } else {
                // closed non-sphere: the kernel is the cohomology part (H^{k−1})^{C(d,k)}
                let b = betti(c, &Rationals);
                let want = if k == 0 { 0 } else { num_integer::binomial(d, k) * b[k] };
                ensure(rep.kernel_dim == want && rep.verdict.is_pass(), format!("{name} partition k={k}: kernel {} vs {want}", rep.kernel_dim))?;
            }
            partitions += 1;
        }
    }
    Ok(format!("{degrees} degrees with dim A^k = dim A_k = dim 𝓜_k, {cones} cone lemmas, {partitions} partition maps"))
}

fn manifold_socle() -> Outcome {
    let f = fp(0);
    let t = moebius_torus_7();
    let (r, _) = random_realization(&t, 3, &f, seeds::derive(0, "theta", 0), DEFAULT_BOUND).map_err(e)?;
    let alg = GradedAlgebra::build(&t, &r).map_err(e)?;
    let a2 = alg.dim(2);
    let ring = Gorenstein::new(alg).map_err(e)?;
    let soc = ring.socle_dims();
    let b1 = betti(&t, &Rationals)[2];
    let (bd1, bd2) = (ring.dim(1), ring.dim(2));
    ensure(a2 == 10, format!("dim A^2 = {a2}"))?;
    ensure(soc[2] == 6 && soc[2] == 3 * b1, format!("dim Soc°^2 = {} vs 3·b_1 = {}", soc[2], 3 * b1))?;
    ensure(bd1 == 4 && bd2 == 4, format!("dim B^1 = {bd1}, dim B^2 = {bd2}"))?;
    for k in 0..=ring.d() {
        let rep = poincare_pairing(&ring, k).map_err(e)?;
        ensure(rep.is_nondegenerate(), format!("B pairing degenerate at k={k}"))?;
    }
    Ok("dim A^2 = 10, dim Soc°^2 = 6 = 3·b_1, dim B^1 = dim B^2 = 4, B pairing perfect".into())
}

fn rigidity_bridge() -> Outcome {
    let f = fp(0);
    let mut total = 0;
    let mut laman = 0;
    for n in 2..=8 {
        let e_ = 2 * n - 3;
        let graphs: Vec<Graph> = if n <= 6 { graphs_up_to_isomorphism(n, e_).map_err(e)? } else { sample_graphs(n, e_, 500, n as u64).map_err(e)? };
        for g in &graphs {
            let sub = is_laman_by_subsets(g).map_err(e)?;
            ensure(is_laman(g) == sub, format!("pebble game disagrees on {}", g.to_edge_list()))?;
            ensure(pebble_game(g).is_empty() == sub, format!("pebble rejection disagrees on {}", g.to_edge_list()))?;
            let rep = lefschetz_rigidity_check(g, &f, 0, 5).map_err(e)?;
            ensure(rep.bridge.is_pass(), format!("bridge fails on {}: laman {} rank {} iso {}", g.to_edge_list(), rep.laman, rep.rigidity_rank, rep.iso))?;
            total += 1;
            laman += sub as usize;
        }
    }
    Ok(format!("{total} graphs (n ≤ 6 all classes, n = 7, 8 sampled 500 each), {laman} Laman; all three notions agree"))
}

fn two_tetrahedra() -> SimplicialComplex {
    let mut facets = Vec::new();
    for p in ["a", "b"] {
        for skip in 1..=4 {
            facets.push((1..=4).filter(|&i| i != skip).map(|i| format!("{p}{i}")).collect::<Vec<_>>());
        }
    }
    SimplicialComplex::from_facets(&facets).expect("valid facets")
}

fn inequality_suite() -> Outcome {
    let f = fp(0);
    let spheres = [("∂Δ³", boundary_simplex(3)), ("octahedron", boundary_crosspolytope(3)), ("stacked-5", stacked_sphere(2, 1, 0).map_err(e)?), ("stacked-6", stacked_sphere(2, 2, 3).map_err(e)?)];
    let mut swept = 0;
    for (name, s) in &spheres {
        let rep = gks_sweep(s, &f, 0, DEFAULT_BOUND).map_err(e)?;
        ensure(rep.verdict.is_pass() && rep.violations == 0 && rep.disagreements == 0, format!("{name}: {rep:?}"))?;
        swept += rep.subcomplexes;
    }
    let rep = kuhnel_check(&two_tetrahedra());
    let t = rep.terms.first().ok_or("no Kühnel terms")?;
    ensure(t.lhs == "4" && t.rhs == "4" && t.verdict.is_pass(), format!("Kühnel {} ≤ {}", t.lhs, t.rhs))?;
    let mut rng = seeds::rng(0, "crossing", 0);
    for _ in 0..200 {
        let (d, fd1) = (rng.gen_range(1..5usize), rng.gen_range(1..60u64));
        let fd = rng.gen_range(0..(d as u64 + 6) * fd1);
        let c = d as u64 + 3;
        let want = (fd > c * fd1).then(|| BigRational::new(BigInt::from(fd).pow(d as u32 + 2), BigInt::from(c).pow(d as u32 + 2) * BigInt::from(fd1).pow(d as u32 + 1)));
        ensure(crossing_bound(fd, fd1, d) == want, format!("crossing bound for ({fd}, {fd1}, {d})"))?;
    }
    let ex = crossing_bound(100, 10, 1).ok_or("crossing example not applicable")?;
    ensure(ex == BigRational::new(625.into(), 4.into()), format!("crossing example {ex}"))?;
    Ok(format!("GKS on {swept} subcomplexes of 4 spheres with κ agreement, Kühnel 4 ≤ 4, crossing bounds exact (100,10,1 → 625/4)"))
}

fn perturbation_approximation() -> Outcome {
    let q = Rationals;
    let (mut pairs, mut redraws) = (0, 0);
    for i in 0..200u64 {
        let mut rng = seeds::rng(0, "perturbation", i);
        loop {
            let n = rng.gen_range(3..=8);
            let (ra, rb) = (rng.gen_range(1..n), rng.gen_range(1..n));
            let a = random_low_rank(&q, n, n, ra, &mut rng, 20);
            let b = random_low_rank(&q, n, n, rb, &mut rng, 20);
            let rep = perturbation_check(&a, &b, 5, &mut rng, DEFAULT_BOUND).map_err(e)?;
            if !rep.transversal {
                redraws += 1;
                continue;
            }
            ensure(rep.verdict.is_pass(), format!("pair {i}: {:?}", rep.exceptions))?;
            pairs += 1;
            break;
        }
    }
    let mut runs = 0;
    for seed in 0..5u64 {
        let c = stacked_sphere(3, 2 + seed as usize, seed).map_err(e)?;
        let order = l_decomposition(&c).map_err(e)?.ok_or("stacked sphere without L-decomposition")?;
        let (r, _) = random_realization(&c, 4, &q, seeds::derive(seed, "theta", 0), 20).map_err(e)?;
        let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(&c, &r).map_err(e)?);
        for ratio in [10, 100, 1000] {
            let rep = approximation_check(&ring, &order, &q.from_i64(ratio), 3).map_err(e)?;
            ensure(rep.verdict.is_pass(), format!("stacked {seed} ratio {ratio}: angles {:?}, kernels {:?}", rep.angles, rep.kernel_dims))?;
            runs += 1;
        }
    }
    Ok(format!("{pairs} transversal pairs × 5 ε ({redraws} redraws); {runs} monotone angle sequences"))
}

fn kazhdan() -> Outcome {
    let rep = kazhdan_example(&Rationals, 8, 100, 50, 4, &mut seeds::rng(0, "kazhdan", 0), DEFAULT_BOUND).map_err(e)?;
    ensure(rep.symmetric && rep.vanishes_on_alpha, "symmetry or δ(x, αx) = 0 fails")?;
    ensure(rep.expanding && rep.expansion.len() == 50 && rep.expansion.iter().all(|&(a, b)| b > a), format!("expansion {:?}", rep.expansion))?;
    ensure(rep.verdict.is_pass(), "verdict")?;
    Ok("n = 8: 100 vectors symmetric and isotropic, 50 subspaces expand".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("bad-reduction fixture", 2, bad_reduction),
        ("circle biased Poincaré duality", 1, circle_biased_pd),
        ("Poincaré duality suite", 30, poincare_suite),
        ("generic Lefschetz", 60, generic_lefschetz),
        ("Hall–Laman instances", 60, hall_laman_instances),
        ("L-decomposable Lefschetz", 120, l_decomposable),
        ("Weil duality, cone lemmas, partition of unity", 60, weil_cone_partition),
        ("manifold socle", 5, manifold_socle),
        ("rigidity bridge", 120, rigidity_bridge),
        ("inequality suite", 30, inequality_suite),
        ("perturbation and approximation", 60, perturbation_approximation),
        ("Kazhdan example", 10, kazhdan),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        let res = match res {
            Ok(msg) if took > Duration::from_secs(*budget) => Err(format!("{msg}; over the {budget} s budget")),
            r => r,
        };
        let (tag, msg) = match &res {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        failed += res.is_err() as usize;
        println!("criterion {:>2} {tag} {name} [{:.2} s / {budget} s]: {msg}", i + 1, took.as_secs_f64());
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
