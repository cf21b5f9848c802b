//! Laman graphs, planar frameworks, Henneberg moves, and the bridge between
//! infinitesimal rigidity and the Lefschetz map `A^1(G) → A^2(G)`.
//!
//! A graph `G` is treated as a 1-dimensional complex (isolated vertices
//! included) and realized linearly in ℝ², i.e. with two linear parameters.
//! Then `dim A^1 = n − 2`, and the degree-two relations `θ_i x_v` always
//! carry one syzygy (`Σ_v (p_{v,2} θ_1 − p_{v,1} θ_2) x_v = 0`), so
//! `dim A^2 = n + e − (2n − 1) + s` where `s` counts further dependencies.
//! For `e = 2n − 3` the two dimensions agree exactly when `s = 0`, which is
//! the linear counterpart of "no stress beyond the trivial ones". The check
//! validates this dictionary against the rigidity matrix on every input.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use rand::Rng;
use serde::Serialize;

use crate::artinian::GradedAlgebra;
use crate::complex::{face_from, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{rank, Field, SparseMatrix};
use crate::realization::{random_linear_form, random_realization};
use crate::report::Verdict;
use crate::seeds;

/// Coordinate box for generic frameworks.
pub const COORD_BOUND: u64 = 10_000;

/// Simple undirected graph on labelled vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Vertices labelled `1..=n`. Edges are normalised to `u < v`; loops and
    /// repeated edges are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::new();
        let mut es = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {}", labels[u])));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidParameter(format!("repeated edge {}–{}", labels[e.0], labels[e.1])));
            }
            es.push(e);
        }
        es.sort_unstable();
        Ok(Graph { labels, edges: es })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The graph as a 1-complex: edges plus isolated vertices as facets.
    pub fn to_complex(&self) -> SimplicialComplex {
        let mut facets: Vec<u64> = self.edges.iter().map(|&(u, v)| face_from([u, v])).collect();
        facets.extend((0..self.n()).map(|v| face_from([v])));
        SimplicialComplex::with_ground(Arc::new(self.labels.clone()), facets)
    }

    /// "u v" per line; `#` starts a comment. Vertices are the labels seen,
    /// sorted numerically when all are integers.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse(format!("line {}: expected two vertex labels", lineno + 1)));
            }
            pairs.push((toks[0].to_string(), toks[1].to_string()));
        }
        let mut labels: Vec<String> = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect::<BTreeSet<_>>().into_iter().collect();
        if labels.iter().all(|l| l.parse::<i64>().is_ok()) {
            labels.sort_by_key(|l| l.parse::<i64>().expect("checked"));
        }
        let idx = |s: &str| labels.iter().position(|l| l == s).expect("collected");
        let edges: Vec<_> = pairs.iter().map(|(a, b)| (idx(a), idx(b))).collect();
        Self::with_labels(labels.clone(), &edges).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_edge_list(&self) -> String {
        self.edges.iter().map(|&(u, v)| format!("{} {}\n", self.labels[u], self.labels[v])).collect()
    }
}

/// (2,3) pebble game: the maximal set of independent edges, in input order.
/// Returns the indices of rejected edges.
pub fn pebble_game(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut pebbles = vec![2u8; n];
    // out[v]: heads of edges directed away from v
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut rejected = Vec::new();

    // Moves one pebble to `root` along a directed path avoiding `blocked`.
    fn fetch(root: usize, blocked: usize, pebbles: &mut [u8], out: &mut [Vec<usize>]) -> bool {
        let n = pebbles.len();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        seen[blocked] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &y in &out[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                if pebbles[y] > 0 {
                    // reverse the path root → … → y
                    pebbles[y] -= 1;
                    pebbles[root] += 1;
                    let mut cur = y;
                    while cur != root {
                        let p = parent[cur];
                        let pos = out[p].iter().position(|&z| z == cur).expect("edge on path");
                        out[p].swap_remove(pos);
                        out[cur].push(p);
                        cur = p;
                    }
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    for (i, &(u, v)) in g.edges.iter().enumerate() {
        while pebbles[u] < 2 && fetch(u, v, &mut pebbles, &mut out) {}
        while pebbles[v] < 2 && fetch(v, u, &mut pebbles, &mut out) {}
        if pebbles[u] + pebbles[v] >= 4 {
            pebbles[u] -= 1;
            out[u].push(v);
        } else {
            rejected.push(i);
        }
    }
    rejected
}

fn laman_count(g: &Graph) -> bool {
    match g.n() {
        0 => false,
        1 => g.num_edges() == 0,
        n => g.num_edges() == 2 * n - 3,
    }
}

/// Laman: `e = 2n − 3` and every subgraph on `x ≥ 2` vertices spans at most
/// `2x − 3` edges, decided by the pebble game.
pub fn is_laman(g: &Graph) -> bool {
    laman_count(g) && pebble_game(g).is_empty()
}

/// Exhaustive hereditary count over all vertex subsets (test oracle).
pub fn is_laman_by_subsets(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > 20 {
        return Err(Error::Limit(format!("subset oracle limited to 20 vertices, got {n}")));
    }
    if !laman_count(g) {
        return Ok(false);
    }
    let masks: Vec<u32> = g.edges.iter().map(|&(u, v)| 1 << u | 1 << v).collect();
    Ok((0u32..1 << n).filter(|w| w.count_ones() >= 2).all(|w| masks.iter().filter(|&&m| m & w == m).count() as i64 <= 2 * w.count_ones() as i64 - 3))
}

/// A graph with planar coordinates per vertex.
#[derive(Clone, Debug)]
pub struct Framework<F: Field> {
    pub graph: Graph,
    pub coords: Vec<[F::Elem; 2]>,
}

impl<F: Field> Framework<F> {
    pub fn new(graph: Graph, coords: Vec<[F::Elem; 2]>) -> Result<Self> {
        if coords.len() != graph.n() {
            return Err(Error::DimensionMismatch(format!("{} coordinates for {} vertices", coords.len(), graph.n())));
        }
        if let Some(&(u, v)) = graph.edges.iter().find(|&&(u, v)| coords[u] == coords[v]) {
            return Err(Error::InvalidParameter(format!("edge {}–{} has coincident endpoints", graph.labels[u], graph.labels[v])));
        }
        Ok(Framework { graph, coords })
    }

    /// `e × 2n`: row `uv` holds `p_u − p_v` in u's block and `p_v − p_u` in v's.
    pub fn rigidity_matrix(&self, field: &F) -> SparseMatrix<F> {
        let mut triples = Vec::new();
        for (r, &(u, v)) in self.graph.edges.iter().enumerate() {
            for c in 0..2 {
                let diff = field.sub(&self.coords[u][c], &self.coords[v][c]);
                triples.push((r, 2 * u + c, diff.clone()));
                triples.push((r, 2 * v + c, field.neg(&diff)));
            }
        }
        SparseMatrix::from_triples(field.clone(), self.graph.num_edges(), 2 * self.graph.n(), triples).expect("indices in range")
    }
}

pub fn rigidity_rank<F: Field>(fw: &Framework<F>, field: &F) -> usize {
    rank(&fw.rigidity_matrix(field))
}

/// Integer coordinates in `[−bound, bound]`, redrawn until every edge has
/// distinct endpoints. Returns the framework and the number of redraws.
pub fn random_framework<F: Field, R: Rng + ?Sized>(g: &Graph, field: &F, rng: &mut R, bound: u64) -> (Framework<F>, usize) {
    let mut redraws = 0;
    loop {
        let coords: Vec<[F::Elem; 2]> = (0..g.n()).map(|_| [field.sample(rng, bound), field.sample(rng, bound)]).collect();
        if let Ok(fw) = Framework::new(g.clone(), coords) {
            return (fw, redraws);
        }
        redraws += 1;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericRank {
    pub rank: usize,
    pub max_rank: usize,
    pub trials_run: usize,
    /// Log of degenerate draws that were resampled.
    pub resampled: Vec<String>,
}

/// Rigidity rank for random coordinates, resampling (up to `trials` draws)
/// while the rank stays below `min(e, 2n − 3)`.
pub fn generic_rigidity_rank<F: Field>(g: &Graph, field: &F, seed: u64, trials: usize) -> GenericRank {
    let n = g.n();
    let max_rank = if n < 2 { 0 } else { g.num_edges().min(2 * n - 3) };
    let mut best = 0;
    let mut resampled = Vec::new();
    let mut t = 0;
    while t < trials.max(1) {
        let (fw, redraws) = random_framework(g, field, &mut seeds::rng(seed, "framework", t as u64), COORD_BOUND);
        if redraws > 0 {
            resampled.push(format!("trial {t}: {redraws} draws with coincident endpoints"));
        }
        let r = rigidity_rank(&fw, field);
        best = best.max(r);
        t += 1;
        if best == max_rank {
            break;
        }
        resampled.push(format!("trial {t}: rank {r} below {max_rank}"));
    }
    GenericRank { rank: best, max_rank, trials_run: t, resampled }
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityBridgeReport {
    pub n: usize,
    pub e: usize,
    pub laman: bool,
    pub rigidity_rank: usize,
    pub rigid: bool,
    pub a1: usize,
    pub a2: usize,
    pub lefschetz_rank: usize,
    pub trials_run: usize,
    pub iso: bool,
    /// Pass when ℓ· : A^1 → A^2 is an isomorphism for some sample.
    pub lefschetz: Verdict,
    /// Pass when Laman, rigidity and the Lefschetz isomorphism agree.
    pub bridge: Verdict,
    pub notes: Vec<String>,
}

/// Builds `A^*(G)` for sampled planar realizations and ℓ, tests
/// `ℓ· : A^1 → A^2`, and cross-checks against Laman and the rigidity rank.
pub fn lefschetz_rigidity_check<F: Field>(g: &Graph, field: &F, seed: u64, trials: usize) -> Result<RigidityBridgeReport> {
    let n = g.n();
    if n < 2 || g.num_edges() != 2 * n - 3 {
        return Err(Error::InvalidParameter(format!("need e = 2n − 3 with n ≥ 2; got n = {n}, e = {}", g.num_edges())));
    }
    let c = g.to_complex();
    let mut best = (0, 0, 0);
    let mut iso = false;
    let mut t = 0;
    while t < trials.max(1) && !iso {
        let (r, _) = random_realization(&c, 2, field, seeds::derive(seed, "theta", t as u64), COORD_BOUND)?;
        let alg = GradedAlgebra::build(&c, &r)?;
        let ell = random_linear_form(field, n, &mut seeds::rng(seed, "ell", t as u64), COORD_BOUND);
        let rk = rank(&alg.linear_map(1, &ell)?);
        let (a1, a2) = (alg.dim(1), alg.dim(2));
        iso = rk == a1 && rk == a2;
        if t == 0 || iso || rk > best.0 {
            best = (rk, a1, a2);
        }
        t += 1;
    }
    let laman = is_laman(g);
    let gr = generic_rigidity_rank(g, field, seed, trials);
    let rigid = gr.rank == 2 * n - 3;
    let mut notes = gr.resampled;
    if best.1 != n - 2 {
        notes.push(format!("dim A^1 = {} differs from n − 2", best.1));
    }
    Ok(RigidityBridgeReport {
        n,
        e: g.num_edges(),
        laman,
        rigidity_rank: gr.rank,
        rigid,
        a1: best.1,
        a2: best.2,
        lefschetz_rank: best.0,
        trials_run: t,
        iso,
        lefschetz: Verdict::from_bool(iso),
        bridge: Verdict::from_bool(laman == rigid && rigid == iso),
        notes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HennebergMove {
    /// New vertex joined to `a` and `b`.
    One { a: usize, b: usize },
    /// Edge `ab` is split by a new vertex that is also joined to `c`.
    Two { a: usize, b: usize, c: usize },
}

/// Applies a Henneberg move; the new vertex gets the next free integer label.
pub fn henneberg(g: &Graph, mv: HennebergMove) -> Result<Graph> {
    let n = g.n();
    let mut label = n + 1;
    while g.labels.contains(&label.to_string()) {
        label += 1;
    }
    let mut labels = g.labels.clone();
    labels.push(label.to_string());
    let mut edges = g.edges.clone();
    match mv {
        HennebergMove::One { a, b } => {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidParameter("move 1 needs two distinct existing vertices".into()));
            }
            edges.extend([(a, n), (b, n)]);
        }
        HennebergMove::Two { a, b, c } => {
            let e = (a.min(b), a.max(b));
            let pos = edges.iter().position(|&x| x == e).ok_or_else(|| Error::InvalidParameter("move 2 needs an existing edge".into()))?;
            if c >= n || c == a || c == b {
                return Err(Error::InvalidParameter("move 2 needs a third existing vertex".into()));
            }
            edges.remove(pos);
            edges.extend([(a, n), (b, n), (c, n)]);
        }
    }
    Graph::with_labels(labels, &edges)
}

/// A random sequence of Henneberg moves starting from a single edge.
pub fn random_henneberg<R: Rng + ?Sized>(steps: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(2, &[(0, 1)]).expect("edge");
    for _ in 0..steps {
        let n = g.n();
        let mv = if n >= 3 && rng.gen_bool(0.5) {
            let (a, b) = g.edges[rng.gen_range(0..g.num_edges())];
            let others: Vec<usize> = (0..n).filter(|&x| x != a && x != b).collect();
            HennebergMove::Two { a, b, c: others[rng.gen_range(0..others.len())] }
        } else {
            let a = rng.gen_range(0..n);
            let b = (a + 1 + rng.gen_range(0..n - 1)) % n;
            HennebergMove::One { a, b }
        };
        g = henneberg(&g, mv).expect("valid move");
    }
    g
}

fn canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut es: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
            es.sort_unstable();
            es
        })
        .min()
        .unwrap_or_default()
}

/// All graphs on `n ≤ 7` vertices with `e` edges, one per isomorphism class.
pub fn graphs_up_to_isomorphism(n: usize, e: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::Limit(format!("isomorphism-class enumeration is limited to 7 vertices, got {n}")));
    }
    let all: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for es in all.iter().copied().combinations(e) {
        let canon = canonical(n, &es);
        if seen.insert(canon.clone()) {
            out.push(Graph::new(n, &canon)?);
        }
    }
    Ok(out)
}

/// `count` uniformly random labelled graphs with `n` vertices and `e` edges.
pub fn sample_graphs(n: usize, e: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    let all: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    if e > all.len() {
        return Err(Error::InvalidParameter(format!("{e} edges exceed the {} pairs on {n} vertices", all.len())));
    }
    let mut rng = seeds::rng(seed, "graphs", n as u64);
    (0..count)
        .map(|_| {
            let es: Vec<_> = rand::seq::index::sample(&mut rng, all.len(), e).into_iter().map(|i| all[i]).collect();
            Graph::new(n, &es)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};
    use rand::SeedableRng;

    fn g(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::new(n, &es.iter().map(|&(u, v)| (u - 1, v - 1)).collect::<Vec<_>>()).unwrap()
    }

    fn k4_plus_path() -> Graph {
        g(6, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 1)])
    }

    fn fp() -> PrimeField {
        PrimeField::new(2_147_483_647).unwrap()
    }

    #[test]
    fn laman_examples() {
        let tri = g(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(is_laman(&tri));
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert!(!is_laman(&k4));
        let h = k4_plus_path();
        assert_eq!(h.num_edges(), 2 * 6 - 3);
        assert!(!is_laman(&h));
        assert!(!is_laman_by_subsets(&h).unwrap());
        assert_eq!(pebble_game(&h).len(), 1);
    }

    #[test]
    fn graph_validation_and_io() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
        let h = k4_plus_path();
        let back = Graph::parse_edge_list(&h.to_edge_list()).unwrap();
        assert_eq!(back, h);
        assert!(Graph::parse_edge_list("1 2 3\n").is_err());
        assert_eq!(Graph::parse_edge_list("# c\n10 2\n2 1\n").unwrap().labels(), &["1", "2", "10"]);
    }

    #[test]
    fn rigidity_ranks() {
        let q = Rationals;
        let tri = g(3, &[(1, 2), (2, 3), (1, 3)]);
        let fw = Framework::new(tri.clone(), vec![[q.from_i64(0), q.from_i64(0)], [q.from_i64(3), q.from_i64(1)], [q.from_i64(1), q.from_i64(5)]]).unwrap();
        assert_eq!(rigidity_rank(&fw, &q), 3);
        let line = Framework::new(tri, vec![[q.from_i64(0), q.from_i64(0)], [q.from_i64(1), q.from_i64(1)], [q.from_i64(2), q.from_i64(2)]]).unwrap();
        assert_eq!(rigidity_rank(&line, &q), 2);
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(generic_rigidity_rank(&c4, &q, 1, 3).rank, 4);
        let pt = [q.zero(), q.zero()];
        assert!(Framework::<Rationals>::new(g(2, &[(1, 2)]), vec![pt.clone(), pt]).is_err());
    }

    #[test]
    fn bridge_examples() {
        let tri = g(3, &[(1, 2), (2, 3), (1, 3)]);
        let rep = lefschetz_rigidity_check(&tri, &Rationals, 1, 3).unwrap();
        assert_eq!((rep.a1, rep.a2, rep.lefschetz_rank), (1, 1, 1));
        assert!(rep.iso && rep.bridge.is_pass());
        let rep = lefschetz_rigidity_check(&k4_plus_path(), &fp(), 2, 5).unwrap();
        assert!(!rep.iso && !rep.rigid && !rep.laman);
        assert_eq!(rep.trials_run, 5);
        assert!(rep.bridge.is_pass());
        assert!(lefschetz_rigidity_check(&g(4, &[(1, 2)]), &fp(), 0, 1).is_err());
    }

    #[test]
    fn henneberg_moves() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let tri = henneberg(&edge, HennebergMove::One { a: 0, b: 1 }).unwrap();
        assert_eq!(tri.num_edges(), 3);
        let k4e = henneberg(&tri, HennebergMove::One { a: 0, b: 1 }).unwrap();
        assert_eq!((k4e.n(), k4e.num_edges()), (4, 5));
        assert!(is_laman(&k4e));
        assert!(henneberg(&tri, HennebergMove::Two { a: 0, b: 1, c: 1 }).is_err());
        assert!(henneberg(&edge, HennebergMove::One { a: 0, b: 0 }).is_err());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let g6 = random_henneberg(4, &mut rng);
        let rep = lefschetz_rigidity_check(&g6, &fp(), 3, 3).unwrap();
        assert!(rep.laman && rep.rigid && rep.iso);
    }

    #[test]
    fn enumeration_counts() {
        // one Laman class on 4 vertices (K4 minus an edge), three on 5
        assert_eq!(graphs_up_to_isomorphism(4, 5).unwrap().len(), 1);
        let five = graphs_up_to_isomorphism(5, 7).unwrap();
        assert_eq!(five.iter().filter(|g| is_laman(g)).count(), 3);
        assert_eq!(graphs_up_to_isomorphism(4, 3).unwrap().len(), 3);
        assert_eq!(sample_graphs(7, 11, 10, 1).unwrap().len(), 10);
    }
}
