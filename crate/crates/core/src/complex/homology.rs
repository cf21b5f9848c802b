use std::collections::HashMap;

use super::{face_size, face_vertices, SimplicialComplex};
use crate::exactla::{rank, Field, SparseMatrix};

/// Reduced Betti numbers `b̃_{−1}, b̃_0, …, b̃_dim` over `field`, from ranks
/// of the augmented boundary matrices. Empty for the void complex.
pub fn betti<F: Field>(c: &SimplicialComplex, field: &F) -> Vec<usize> {
    let dim = c.dim();
    if dim < -1 {
        return Vec::new();
    }
    let top = (dim + 1) as usize; // sizes 0..=top
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in c.faces() {
        by_size[face_size(f)].push(f);
    }
    let index: Vec<HashMap<u64, usize>> = by_size.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect()).collect();
    // ranks[s] = rank of ∂ from size-s chains to size-(s−1) chains
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let mut triples = Vec::new();
        for (j, &f) in by_size[s].iter().enumerate() {
            for (pos, v) in face_vertices(f).enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let g = f & !(1 << v);
                triples.push((index[s - 1][&g], j, field.from_i64(sign)));
            }
        }
        let m = SparseMatrix::from_triples(field.clone(), by_size[s - 1].len(), by_size[s].len(), triples).expect("indices in range");
        ranks[s] = rank(&m);
    }
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// Whether `b` is the reduced homology of a sphere of dimension `dim`.
fn is_sphere_profile(b: &[usize], dim: i32) -> bool {
    b.len() as i32 == dim + 2 && b.iter().enumerate().all(|(i, &x)| x == usize::from(i as i32 == dim + 1))
}

fn is_acyclic(b: &[usize]) -> bool {
    b.iter().all(|&x| x == 0)
}

/// Classification of a complex as a homology manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ManifoldKind {
    /// Every face link is a homology sphere of the right dimension.
    Closed,
    /// Every face link is a homology sphere or acyclic, and some are acyclic.
    WithBoundary,
    NotAManifold,
}

/// Reduced Betti vectors of the links of all nonempty faces.
pub fn link_betti_profile<F: Field>(c: &SimplicialComplex, field: &F) -> Vec<(u64, Vec<usize>)> {
    c.faces()
        .iter()
        .filter(|f| **f != 0)
        .map(|&f| (f, betti(&c.link(f).expect("face"), field)))
        .collect()
}

/// Homology-manifold test: pure, and each link of a nonempty face σ is a
/// homology sphere of dimension `dim − |σ|` (interior) or acyclic (boundary).
pub fn is_homology_manifold<F: Field>(c: &SimplicialComplex, field: &F) -> ManifoldKind {
    if c.is_void() || !c.is_pure() {
        return ManifoldKind::NotAManifold;
    }
    let dim = c.dim();
    let mut boundary = false;
    for &f in c.faces() {
        if f == 0 {
            continue;
        }
        let link = c.link(f).expect("face");
        let ld = dim - face_size(f) as i32;
        if link.dim() != ld {
            return ManifoldKind::NotAManifold;
        }
        let b = betti(&link, field);
        if is_sphere_profile(&b, ld) {
            continue;
        }
        if is_acyclic(&b) {
            boundary = true;
            continue;
        }
        return ManifoldKind::NotAManifold;
    }
    if boundary {
        ManifoldKind::WithBoundary
    } else {
        ManifoldKind::Closed
    }
}

/// A closed homology manifold with the homology of a sphere.
pub fn is_homology_sphere<F: Field>(c: &SimplicialComplex, field: &F) -> bool {
    is_homology_manifold(c, field) == ManifoldKind::Closed && is_sphere_profile(&betti(c, field), c.dim())
}
