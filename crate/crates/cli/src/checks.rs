use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use stresslab::artinian::{Gorenstein, GradedAlgebra, MonomialIdeal};
use stresslab::complex::{l_decomposition, SimplicialComplex};
use stresslab::exactla::{elem_from_scalar, Field, Rationals, Scalar};
use stresslab::inequalities::{crossing_report, g_vector, gks_check, gks_manifold_bound, gks_sweep, is_m_sequence, kuhnel_check, CrossingBound, GksAmbient};
use stresslab::lefschetz::{
    approximation_check, biased_pd, biased_pd_check, hall_laman, hall_laman_check, kappa_monotonicity, kazhdan_example, l_decomposable_lefschetz,
    lefschetz_check, lefschetz_check_fixed, perturbation_check, poincare_pairing, random_low_rank, ring_for, sample_ring, SampleOptions,
};
use stresslab::realization::{random_linear_form, random_realization, Realization, DEFAULT_BOUND};
use stresslab::report::{scalar_strings, Verdict};
use stresslab::rigidity::{
    generic_rigidity_rank, graphs_up_to_isomorphism, is_laman_by_subsets, lefschetz_rigidity_check, pebble_game, sample_graphs, Graph,
};
use stresslab::stress::{cone_lemma_check, partition_of_unity_check};
use stresslab::seeds;

use crate::input::{load_input, subcomplex, Digest, Input};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Pd,
    Lefschetz,
    HallLaman,
    BiasedPd,
    Kappa,
    Gks,
    Kuhnel,
    Crossing,
    Laman,
    Socle,
    Partition,
    Cone,
    MSequence,
    Kazhdan,
    Perturbation,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Pd => "pd",
            CheckName::Lefschetz => "lefschetz",
            CheckName::HallLaman => "hall-laman",
            CheckName::BiasedPd => "biased-pd",
            CheckName::Kappa => "kappa",
            CheckName::Gks => "gks",
            CheckName::Kuhnel => "kuhnel",
            CheckName::Crossing => "crossing",
            CheckName::Laman => "laman",
            CheckName::Socle => "socle",
            CheckName::Partition => "partition",
            CheckName::Cone => "cone",
            CheckName::MSequence => "m-sequence",
            CheckName::Kazhdan => "kazhdan",
            CheckName::Perturbation => "perturbation",
        }
    }
}

/// Flags shared by all checks.
#[derive(Clone, Debug)]
pub struct Settings {
    pub check: CheckName,
    pub seed: u64,
    pub trials: usize,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub subcomplex: Option<String>,
    pub ambient: Option<String>,
    pub vertex: Option<String>,
    pub ratio: String,
    pub sweep: bool,
    pub decaying: bool,
    pub n: usize,
    pub count: usize,
}

impl Settings {
    fn opts(&self) -> SampleOptions {
        SampleOptions::new(self.seed, self.trials)
    }
}

/// One line of the report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub parameter: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
    pub report: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

fn row(check: CheckName, instance: &str, parameter: impl Into<String>, lhs: impl ToString, rhs: impl ToString, verdict: Verdict, report: &impl Serialize) -> CheckResult {
    CheckResult {
        check: check.as_str().into(),
        instance: instance.into(),
        parameter: parameter.into(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        verdict,
        report: serde_json::to_value(report).expect("reports serialize"),
        wall_ms: None,
    }
}

/// A unit of work for one check.
#[derive(Clone, Debug)]
pub enum Item {
    Complex(Input),
    Graph(String, Graph),
    Numbers(Vec<i64>),
    /// Checks that generate their own instances.
    Generated,
}

impl Item {
    pub fn name(&self) -> String {
        match self {
            Item::Complex(i) => i.name.clone(),
            Item::Graph(n, _) => n.clone(),
            Item::Numbers(v) => v.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
            Item::Generated => "generated".into(),
        }
    }
}

/// Turns the positional inputs into work items and collects input digests.
pub fn items(s: &Settings, inputs: &[String], coords: Option<&std::path::Path>) -> Result<(Vec<Item>, Vec<Digest>)> {
    let numeric = !inputs.is_empty() && inputs.iter().all(|x| x.parse::<i64>().is_ok());
    let mut digests = Vec::new();
    let items = match s.check {
        CheckName::Crossing | CheckName::MSequence if numeric => vec![Item::Numbers(inputs.iter().map(|x| x.parse().expect("checked")).collect())],
        CheckName::Kazhdan => {
            if !inputs.is_empty() {
                bail!("kazhdan takes no inputs; use --n");
            }
            vec![Item::Generated]
        }
        CheckName::Laman if inputs.is_empty() => vec![Item::Generated],
        CheckName::Laman => inputs
            .iter()
            .map(|p| {
                let (g, dg) = crate::input::load_graph(p)?;
                digests.push(dg);
                Ok(Item::Graph(p.clone(), g))
            })
            .collect::<Result<_>>()?,
        CheckName::Perturbation if inputs.is_empty() => vec![Item::Generated],
        _ => {
            if inputs.is_empty() {
                bail!("{} needs at least one input complex", s.check.as_str());
            }
            inputs
                .iter()
                .map(|p| {
                    let i = load_input(p, coords)?;
                    digests.extend(i.digests.iter().cloned());
                    Ok(Item::Complex(i))
                })
                .collect::<Result<_>>()?
        }
    };
    Ok((items, digests))
}

fn dim_d(c: &SimplicialComplex) -> usize {
    (c.dim() + 1).max(0) as usize
}

fn realization<F: Field>(s: &Settings, input: &Input, field: &F) -> Result<Realization<F>> {
    match &input.coords {
        Some(src) => src.realize(&input.complex, field),
        None => Ok(random_realization(&input.complex, dim_d(&input.complex), field, seeds::derive(s.seed, "theta", 0), DEFAULT_BOUND)?.0),
    }
}

fn fixed_ring<F: Field>(input: &Input, field: &F) -> Result<Option<Gorenstein<F>>> {
    match &input.coords {
        Some(src) => {
            let r = src.realize(&input.complex, field)?;
            r.require_proper(&input.complex)?;
            Ok(Some(ring_for(&input.complex, &r, None)?))
        }
        None => Ok(None),
    }
}

fn ell_for<F: Field>(s: &Settings, field: &F, n: usize, t: usize) -> Vec<F::Elem> {
    random_linear_form(field, n, &mut seeds::rng(s.seed, "ell", t as u64), DEFAULT_BOUND)
}

fn sub_of(input: &Input, s: &Settings) -> Result<SimplicialComplex> {
    let spec = s.subcomplex.as_deref().ok_or_else(|| anyhow!("{} needs --subcomplex", s.check.as_str()))?;
    Ok(subcomplex(&input.complex, spec)?.0)
}

/// Relabels `src` onto the ground set of `target`.
fn transplant(target: &SimplicialComplex, src: &SimplicialComplex) -> Result<SimplicialComplex> {
    let faces = src.facets().iter().map(|&f| target.face_of_labels(&src.face_labels(f))).collect::<stresslab::Result<Vec<_>>>()?;
    let out = target.sibling(faces);
    if !out.is_subcomplex_of(target) {
        bail!("input is not a subcomplex of the ambient complex");
    }
    Ok(out)
}

fn ratio<F: Field>(s: &Settings, field: &F) -> Result<F::Elem> {
    Ok(elem_from_scalar(field, &Scalar::parse(&s.ratio).with_context(|| format!("bad --ratio {:?}", s.ratio))?)?)
}

/// Runs the selected check on one item.
pub fn run<F: Field>(s: &Settings, item: &Item, field: &F) -> Result<Vec<CheckResult>> {
    let ck = s.check;
    let name = item.name();
    let mut out = Vec::new();
    match (ck, item) {
        (CheckName::Pd, Item::Complex(input)) => {
            let ring = match fixed_ring(input, field)? {
                Some(r) => r,
                None => sample_ring(&input.complex, field, &s.opts(), 0, None)?.0,
            };
            for k in 0..=ring.d() {
                let rep = poincare_pairing(&ring, k)?;
                out.push(row(ck, &name, format!("k={k}"), rep.rank, ring.dim(k), rep.verdict, &rep));
            }
        }
        (CheckName::Lefschetz, Item::Complex(input)) => {
            let d = dim_d(&input.complex);
            let ks: Vec<usize> = s.k.map_or_else(|| (0..=d / 2).collect(), |k| vec![k]);
            let fixed = fixed_ring(input, field)?;
            for k in ks {
                if s.decaying {
                    let rep = l_decomposable_lefschetz(&input.complex, field, k, &ratio(s, field)?, &s.opts())?;
                    out.push(row(ck, &name, format!("k={k},decaying"), rep.certificate.rank, rep.certificate.source_dim, rep.verdict, &rep));
                } else if let Some(ring) = &fixed {
                    let certs = lefschetz_check_fixed(ring, k, &s.opts())?;
                    let best = certs.iter().find(|c| c.verdict.is_pass()).unwrap_or(certs.last().expect("one trial"));
                    let v = Verdict::from_bool(best.verdict.is_pass());
                    out.push(row(ck, &name, format!("k={k}"), best.rank, best.source_dim, v, &certs));
                } else {
                    let cert = lefschetz_check(&input.complex, field, k, &s.opts())?;
                    out.push(row(ck, &name, format!("k={k}"), cert.rank, cert.source_dim, cert.verdict, &cert));
                }
            }
        }
        (CheckName::HallLaman, Item::Complex(input)) => {
            let sub = sub_of(input, s)?;
            let k = s.k.unwrap_or(1);
            let reps = match fixed_ring(input, field)? {
                Some(ring) => {
                    let ideal = MonomialIdeal::new(&ring, &sub)?;
                    let mut last = None;
                    for t in 0..s.trials.max(1) {
                        let reps = hall_laman(&ring, &ideal, &ell_for(s, field, ring.n(), t), k)?;
                        let ok = reps.iter().all(|r| r.verdict.is_pass());
                        last = Some(reps);
                        if ok {
                            break;
                        }
                    }
                    last.expect("one trial")
                }
                None => hall_laman_check(&input.complex, &sub, field, k, &s.opts())?,
            };
            for rep in &reps {
                out.push(row(ck, &name, format!("k={k},{}", rep.restriction), rep.rank, rep.subspace_dim, rep.verdict, rep));
            }
        }
        (CheckName::BiasedPd, Item::Complex(input)) => {
            let sub = sub_of(input, s)?;
            let k = s.k.unwrap_or(1);
            let rep = match fixed_ring(input, field)? {
                Some(ring) => biased_pd(&ring, &MonomialIdeal::new(&ring, &sub)?, k)?,
                None => biased_pd_check(&input.complex, &sub, field, k, &s.opts())?,
            };
            out.push(row(ck, &name, format!("k={k},{}", rep.restriction), rep.rank, rep.subspace_dim, rep.verdict, &rep));
        }
        (CheckName::Kappa, Item::Complex(input)) => {
            let sub = sub_of(input, s)?;
            let k = s.k.unwrap_or(dim_d(&input.complex).saturating_sub(1) / 2);
            let fixed = fixed_ring(input, field)?;
            let mut reps = Vec::new();
            for t in 0..s.trials.max(1) {
                let ring = match &fixed {
                    Some(r) => r.clone(),
                    None => sample_ring(&input.complex, field, &s.opts(), t, None)?.0,
                };
                let ideal = MonomialIdeal::new(&ring, &sub)?;
                let ell = ell_for(s, field, ring.n(), t);
                let mut rep = serde_json::to_value(kappa_monotonicity(&ring, &ideal, k, &ell)?)?;
                rep["ell"] = json!(scalar_strings(field, &ell));
                reps.push(rep);
            }
            let first = &reps[0];
            let all = reps.iter().all(|r| r["monotone"] == json!(true));
            out.push(row(ck, &name, format!("k={k}"), &first["kappa_k"], &first["kappa_k1"], Verdict::from_bool(all), &reps));
        }
        (CheckName::Gks, Item::Complex(input)) => {
            let c = &input.complex;
            if s.sweep {
                let rep = gks_sweep(c, field, seeds::derive(s.seed, "theta", 0), DEFAULT_BOUND)?;
                out.push(row(ck, &name, format!("sweep,k={}", rep.k), rep.subcomplexes - rep.violations, rep.subcomplexes, rep.verdict, &rep));
            } else if let Some(spec) = &s.subcomplex {
                let (delta, _) = subcomplex(c, spec)?;
                let amb = GksAmbient::new(c, &realization(s, input, field)?)?;
                let rep = amb.check(&delta)?;
                let v = rep.verdict.and(Verdict::from_bool(rep.agrees == Some(true)));
                out.push(row(ck, &name, format!("d={},{spec}", rep.d), rep.f_d, rep.bound, v, &rep));
            } else if let Some(amb) = &s.ambient {
                let m = load_input(amb, None)?.complex;
                let d = s.d.unwrap_or(dim_d(&m) / 2);
                let rep = gks_manifold_bound(&transplant(&m, c)?, &m, d)?;
                out.push(row(ck, &name, format!("d={d},ambient"), rep.f_d, rep.bound, rep.verdict, &rep));
            } else {
                let d = s.d.unwrap_or(c.dim().max(0) as usize);
                let rep = gks_check(c, d)?;
                out.push(row(ck, &name, format!("d={d}"), rep.f_d, rep.bound, rep.verdict, &rep));
            }
        }
        (CheckName::Kuhnel, Item::Complex(input)) => {
            let rep = kuhnel_check(&input.complex);
            if rep.terms.is_empty() {
                out.push(row(ck, &name, "", "", "", rep.verdict, &rep));
            }
            for t in &rep.terms {
                out.push(row(ck, &name, format!("j={}", t.j), &t.lhs, &t.rhs, t.verdict, &rep));
            }
        }
        (CheckName::Crossing, _) => {
            let (fd, fd1, d) = match item {
                Item::Numbers(v) if v.len() == 3 && v.iter().all(|&x| x >= 0) => (v[0] as u64, v[1] as u64, v[2] as usize),
                Item::Numbers(_) => bail!("crossing takes three non-negative numbers: f_d f_(d-1) d"),
                Item::Complex(input) => {
                    let f = input.complex.f_vector();
                    let d = s.d.unwrap_or(input.complex.dim().max(0) as usize);
                    let at = |i: i64| if i < 0 { 1 } else { f.get(i as usize).copied().unwrap_or(0) as u64 };
                    (at(d as i64), at(d as i64 - 1), d)
                }
                _ => unreachable!("crossing items are numbers or complexes"),
            };
            let rep = crossing_report(fd, fd1, d);
            let (rhs, v) = match &rep {
                CrossingBound::Bound(b) => (b.clone(), Verdict::Pass),
                CrossingBound::NotApplicable => ("not_applicable".to_string(), Verdict::Skipped),
            };
            let report = json!({ "f_d": fd, "f_d_minus_1": fd1, "d": d, "bound": rep });
            out.push(row(ck, &name, format!("d={d}"), fd, rhs, v, &report));
        }
        (CheckName::Laman, Item::Graph(_, g)) => out.push(laman_row(s, &name, g, field)?),
        (CheckName::Laman, Item::Generated) => {
            let n = s.n;
            let e = 2 * n - 3;
            let (graphs, mode) = if n <= 6 { (graphs_up_to_isomorphism(n, e)?, "isomorphism classes") } else { (sample_graphs(n, e, s.count, s.seed)?, "sample") };
            let mut rows = Vec::new();
            for g in &graphs {
                rows.push(laman_row(s, &g.to_edge_list(), g, field)?);
            }
            let ok = rows.iter().filter(|r| r.verdict.is_pass()).count();
            let laman = rows.iter().filter(|r| r.report["laman"] == json!(true)).count();
            let report = json!({ "n": n, "e": e, "mode": mode, "graphs": graphs.len(), "laman": laman, "agreeing": ok });
            out.push(row(ck, &format!("n={n}"), format!("e={e}"), ok, graphs.len(), Verdict::from_bool(ok == graphs.len()), &report));
        }
        (CheckName::Socle, Item::Complex(input)) => {
            let r = realization(s, input, field)?;
            let alg = GradedAlgebra::build(&input.complex, &r)?;
            let a_dims = alg.dims();
            let ring = Gorenstein::new(alg)?;
            let mut pd = Vec::new();
            let mut v = Verdict::Pass;
            for k in 0..=ring.d() {
                let rep = poincare_pairing(&ring, k)?;
                v = v.and(rep.verdict);
                pd.push(json!({ "k": k, "rank": rep.rank, "dim": ring.dim(k), "verdict": rep.verdict }));
            }
            let report = json!({ "a_dims": a_dims, "socle_dims": ring.socle_dims(), "b_dims": ring.dims(), "pairings": pd });
            out.push(row(ck, &name, "", format!("{:?}", ring.socle_dims()), format!("{:?}", ring.dims()), v, &report));
        }
        (CheckName::Partition, Item::Complex(input)) => {
            let r = realization(s, input, field)?;
            let ks: Vec<usize> = s.k.map_or_else(|| (0..r.dim()).collect(), |k| vec![k]);
            for k in ks {
                let rep = partition_of_unity_check(&input.complex, &r, k)?;
                out.push(row(ck, &name, format!("k={k}"), rep.kernel_dim, rep.expected_kernel_dim.unwrap_or(0), rep.verdict, &rep));
            }
        }
        (CheckName::Cone, Item::Complex(input)) => {
            let c = &input.complex;
            let r = realization(s, input, field)?;
            let verts = match &s.vertex {
                Some(l) => vec![c.index_of(l).ok_or_else(|| anyhow!("unknown vertex {l:?}"))?],
                None => c.vertices(),
            };
            let ks: Vec<usize> = s.k.map_or_else(|| (0..r.dim()).collect(), |k| vec![k]);
            for v in verts {
                for &k in &ks {
                    let rep = cone_lemma_check(c, &r, v, k)?;
                    out.push(row(ck, &name, format!("v={},k={k}", rep.vertex), rep.xv_rank, rep.star_dim, rep.verdict, &rep));
                }
            }
        }
        (CheckName::MSequence, Item::Numbers(g)) => {
            let ok = is_m_sequence(g);
            out.push(row(ck, &name, "", format!("{g:?}"), "m-sequence", Verdict::from_bool(ok), &json!({ "g": g, "m_sequence": ok })));
        }
        (CheckName::MSequence, Item::Complex(input)) => {
            let d = dim_d(&input.complex);
            let cert = lefschetz_check(&input.complex, field, s.k.unwrap_or(d / 2), &s.opts())?;
            if !cert.verdict.is_pass() {
                out.push(row(ck, &name, "", "", "", Verdict::Fail, &json!({ "certificate": cert, "note": "no Lefschetz witness" })));
            } else {
                let gv = g_vector(&input.complex, field, &cert, DEFAULT_BOUND)?;
                let ok = is_m_sequence(&gv.g) && gv.agrees;
                let report = json!({ "g_vector": gv, "m_sequence": is_m_sequence(&gv.g), "certificate": cert });
                out.push(row(ck, &name, "", format!("{:?}", gv.g), format!("{:?}", gv.differences), Verdict::from_bool(ok), &report));
            }
        }
        (CheckName::Kazhdan, Item::Generated) => {
            let n = s.n;
            let mut rng = seeds::rng(s.seed, "kazhdan", 0);
            let rep = kazhdan_example(field, n, 100, 50, (n / 2).min(4), &mut rng, DEFAULT_BOUND)?;
            out.push(row(ck, &format!("n={n}"), "", rep.n, rep.y_dim, rep.verdict, &rep));
        }
        (CheckName::Perturbation, Item::Generated) => out.push(perturbation_batch(s, field)?),
        (CheckName::Perturbation, Item::Complex(input)) => {
            let c = &input.complex;
            let order = l_decomposition(c)?.ok_or_else(|| anyhow!("{name} is not L-decomposable"))?;
            let d = dim_d(c);
            if d < 2 {
                bail!("approximation check needs dimension at least 1");
            }
            let q = Rationals;
            let (r, _) = random_realization(c, d, &q, seeds::derive(s.seed, "theta", 0), 20)?;
            let ring = Gorenstein::assume_gorenstein(GradedAlgebra::build(c, &r)?);
            let rep = approximation_check(&ring, &order, &ratio(s, &q)?, d - 1)?;
            let last = rep.angles.last().copied().unwrap_or(f64::NAN);
            out.push(row(ck, &name, format!("j={}", d - 1), format!("{last:e}"), format!("{:e}", rep.angles.first().copied().unwrap_or(f64::NAN)), rep.verdict, &rep));
        }
        (_, item) => bail!("{} does not accept input {:?}", ck.as_str(), item.name()),
    }
    Ok(out)
}

fn laman_row<F: Field>(s: &Settings, name: &str, g: &Graph, field: &F) -> Result<CheckResult> {
    let n = g.n();
    let e = g.num_edges();
    let rejected = pebble_game(g);
    let independent = rejected.is_empty();
    let oracle = if n <= 14 { Some(is_laman_by_subsets(g)?) } else { None };
    let laman = independent && n >= 2 && e == 2 * n - 3;
    let oracle_ok = oracle.is_none_or(|o| o == laman);
    let mut report = json!({ "n": n, "e": e, "laman": laman, "rejected_edges": rejected, "subset_oracle": oracle });
    let v = if n >= 2 && e == 2 * n - 3 {
        let b = lefschetz_rigidity_check(g, field, s.seed, s.trials)?;
        let v = b.bridge.and(Verdict::from_bool(oracle_ok));
        report["bridge"] = serde_json::to_value(&b)?;
        v
    } else {
        let gr = generic_rigidity_rank(g, field, s.seed, s.trials);
        // generic independence of the edges ⟺ full row rank
        let v = Verdict::from_bool((gr.rank == e) == independent && oracle_ok);
        report["rigidity"] = json!({ "rank": gr.rank, "max_rank": gr.max_rank, "trials_run": gr.trials_run });
        v
    };
    Ok(row(CheckName::Laman, name, format!("n={n},e={e}"), laman, oracle.map_or("-".into(), |o| o.to_string()), v, &report))
}

/// Random pairs `α, β` of low-rank square matrices, redrawn until
/// `β(ker α) ∩ im α = 0`, each tested at five random ε.
fn perturbation_batch<F: Field>(s: &Settings, field: &F) -> Result<CheckResult> {
    use rand::Rng;
    let mut passed = 0;
    let mut redraws = 0;
    let mut failures = Vec::new();
    for i in 0..s.count {
        let mut rng = seeds::rng(s.seed, "perturbation", i as u64);
        loop {
            let n = rng.gen_range(3..=8);
            let (ra, rb) = (rng.gen_range(1..n), rng.gen_range(1..n));
            let a = random_low_rank(field, n, n, ra, &mut rng, 20);
            let b = random_low_rank(field, n, n, rb, &mut rng, 20);
            let rep = perturbation_check(&a, &b, 5, &mut rng, DEFAULT_BOUND)?;
            if !rep.transversal {
                redraws += 1;
                continue;
            }
            if rep.verdict.is_pass() {
                passed += 1;
            } else {
                failures.push(json!({ "pair": i, "n": n, "ranks": [ra, rb], "report": rep }));
            }
            break;
        }
    }
    let report = json!({ "pairs": s.count, "passed": passed, "redraws": redraws, "failures": failures });
    Ok(row(CheckName::Perturbation, "random-pairs", format!("count={}", s.count), passed, s.count, Verdict::from_bool(passed == s.count), &report))
}
