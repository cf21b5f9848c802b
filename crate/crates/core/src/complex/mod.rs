//! Finite abstract simplicial complexes over a labelled ground set.
//!
//! Faces are bitmasks over ground-set indices, so a ground set holds at most
//! 64 vertices. Subcomplexes keep their parent's ground set, which lets
//! faces be compared across a pair without relabelling.

mod decompose;
mod generate;
mod homology;
mod io;
mod ops;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

pub use decompose::l_decomposition;
pub use generate::*;
pub use homology::{betti, is_homology_manifold, is_homology_sphere, link_betti_profile, ManifoldKind};
pub use io::{parse_facet_json, parse_facet_list, write_facet_list};

use crate::error::{Error, Result};

/// A face as a set of ground-set indices.
pub type Face = u64;

pub const MAX_VERTICES: usize = 64;

/// Iterates the indices in a face, ascending.
pub fn face_vertices(face: Face) -> impl Iterator<Item = usize> {
    let mut rest = face;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(v)
    })
}

pub fn face_size(face: Face) -> usize {
    face.count_ones() as usize
}

pub fn face_from(vertices: impl IntoIterator<Item = usize>) -> Face {
    vertices.into_iter().fold(0, |acc, v| acc | (1u64 << v))
}

/// Enumerates all subsets of `face`, including the empty set and `face`.
pub fn subfaces(face: Face) -> impl Iterator<Item = Face> {
    let mut sub = face;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & face;
        }
        Some(cur)
    })
}

/// Orders labels numerically when they are integers, otherwise lexically;
/// integers come first.
fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    }
}

/// A simplicial complex given by its facets.
///
/// The empty face belongs to every complex except the void complex, which
/// has no faces at all. `{∅}` (a single empty facet) is the (−1)-sphere.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Arc<Vec<String>>,
    facets: Vec<Face>,
    faces: Arc<Vec<Face>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<&str>> = self.facets.iter().map(|&s| self.face_labels(s)).collect();
        f.debug_struct("SimplicialComplex").field("facets", &facets).finish()
    }
}

impl SimplicialComplex {
    /// Builds a complex from labelled facets; containment is pruned. An
    /// empty list gives `{∅}`.
    pub fn from_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = facets.iter().flatten().map(|s| s.as_ref().to_string()).collect();
        if labels.iter().any(|l| l.is_empty()) {
            return Err(Error::InvalidParameter("empty vertex label".into()));
        }
        labels.sort_by(|a, b| label_order(a, b));
        labels.dedup();
        if labels.len() > MAX_VERTICES {
            return Err(Error::Limit(format!("{} vertices exceed the limit of {MAX_VERTICES}", labels.len())));
        }
        let index = |s: &str| labels.iter().position(|l| l == s).expect("label collected");
        let masks: Vec<Face> = if facets.is_empty() {
            vec![0]
        } else {
            facets.iter().map(|f| face_from(f.iter().map(|s| index(s.as_ref())))).collect()
        };
        Ok(Self::with_ground(Arc::new(labels), masks))
    }

    /// Builds on an explicit ground set. Facets are pruned to an antichain.
    pub fn with_ground(labels: Arc<Vec<String>>, facets: Vec<Face>) -> Self {
        assert!(labels.len() <= MAX_VERTICES, "ground set too large");
        let mut fs = facets;
        fs.sort_by_key(|f| (std::cmp::Reverse(face_size(*f)), *f));
        fs.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(fs.len());
        for f in fs {
            if !kept.iter().any(|k| k & f == f) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        let mut set: HashSet<Face> = HashSet::new();
        for &f in &kept {
            for s in subfaces(f) {
                set.insert(s);
            }
        }
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort_by_key(|f| (face_size(*f), *f));
        SimplicialComplex { labels, facets: kept, faces: Arc::new(faces) }
    }

    /// Ground set `1..=n` labelled by integers.
    pub fn numbered(n: usize, facets: Vec<Face>) -> Self {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::with_ground(Arc::new(labels), facets)
    }

    /// The complex with no faces.
    pub fn void(labels: Arc<Vec<String>>) -> Self {
        Self::with_ground(labels, Vec::new())
    }

    /// A sibling complex on the same ground set.
    pub fn sibling(&self, facets: Vec<Face>) -> Self {
        Self::with_ground(self.labels.clone(), facets)
    }

    pub fn labels(&self) -> &Arc<Vec<String>> {
        &self.labels
    }
    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn face_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let mut f = 0;
        for l in labels {
            let v = self.index_of(l.as_ref()).ok_or_else(|| Error::NotAFace(format!("unknown vertex {:?}", l.as_ref())))?;
            f |= 1 << v;
        }
        Ok(f)
    }

    pub fn face_labels(&self, face: Face) -> Vec<&str> {
        face_vertices(face).map(|v| self.labels[v].as_str()).collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// All faces, sorted by size then bitmask (the empty face first).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_size(&self, k: usize) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied().filter(move |f| face_size(*f) == k)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `−1` for `{∅}` and `−2` for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| face_size(*f) as i32 - 1).max().unwrap_or(-2)
    }

    /// Vertices present in some face.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    pub fn vertices(&self) -> Vec<usize> {
        face_vertices(self.vertex_set()).collect()
    }

    pub fn num_vertices(&self) -> usize {
        face_size(self.vertex_set())
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| f & face == face)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| face_size(w[0]) == face_size(w[1]))
    }

    /// `f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        if d < 0 {
            return Vec::new();
        }
        let mut f = vec![0; d as usize + 1];
        for &s in self.faces.iter() {
            if s != 0 {
                f[face_size(s) - 1] += 1;
            }
        }
        f
    }

    /// Unreduced Euler characteristic `Σ (−1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.labels == other.labels && self.facets.iter().all(|f| other.is_face(*f))
    }

    /// Subcomplex induced on a vertex set.
    pub fn induced(&self, w: Face) -> Self {
        self.sibling(self.facets.iter().map(|f| f & w).collect())
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: i32) -> Self {
        let fs = self.faces.iter().copied().filter(|f| face_size(*f) as i32 - 1 <= k).collect();
        self.sibling(fs)
    }

    /// Codimension-one faces lying in exactly one facet (the boundary of a
    /// pseudomanifold with boundary). Void when there are none.
    pub fn boundary(&self) -> Self {
        let mut count: std::collections::HashMap<Face, usize> = std::collections::HashMap::new();
        for &f in &self.facets {
            for v in face_vertices(f) {
                *count.entry(f & !(1 << v)).or_default() += 1;
            }
        }
        if self.facets == [0] {
            return self.sibling(Vec::new());
        }
        let fs = count.into_iter().filter(|(_, c)| *c == 1).map(|(f, _)| f).collect();
        self.sibling(fs)
    }

    /// Relabels onto a fresh ground set consisting only of its vertices, in order.
    pub fn compact(&self) -> Self {
        let verts = self.vertices();
        let labels: Vec<String> = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let pos = |v: usize| verts.iter().position(|&u| u == v).expect("vertex present");
        let fs = self.facets.iter().map(|&f| face_from(face_vertices(f).map(pos))).collect();
        Self::with_ground(Arc::new(labels), fs)
    }
}

/// A pair `(Δ, Γ)` with `Γ ⊆ Δ`; its faces are those of Δ not in Γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeComplex {
    pub delta: SimplicialComplex,
    pub gamma: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(delta: SimplicialComplex, gamma: SimplicialComplex) -> Result<Self> {
        if !gamma.is_subcomplex_of(&delta) {
            return Err(Error::NotSubcomplex("relative pair requires Γ ⊆ Δ".into()));
        }
        Ok(RelativeComplex { delta, gamma })
    }

    /// The absolute complex Δ as the pair `(Δ, void)`.
    pub fn absolute(delta: SimplicialComplex) -> Self {
        let gamma = SimplicialComplex::void(delta.labels().clone());
        RelativeComplex { delta, gamma }
    }

    pub fn contains(&self, face: Face) -> bool {
        self.delta.is_face(face) && !self.gamma.is_face(face)
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.delta.faces().iter().copied().filter(|f| !self.gamma.is_face(*f))
    }
}
