//! L-decomposability search.
//!
//! A complex is L-decomposable if it is a simplex, or some vertex v has
//!  * a deletion Δ − v that is L-decomposable of the same dimension, and
//!  * a link whose boundary is void or L-decomposable of one dimension less.
//!
//! The search additionally keeps every intermediate deletion a homology
//! manifold (possibly with boundary), so the chain Σ ⊃ Σ − v₁ ⊃ … runs
//! through balls when Σ is a sphere.

use std::collections::HashMap;

use super::homology::{is_homology_manifold, ManifoldKind};
use super::{face_vertices, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::Rationals;

/// Searches for an L-decomposition. Returns the vertex removal order, or
/// `None` when no decomposition exists.
pub fn l_decomposition(c: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    if !c.is_pure() {
        return Err(Error::InvalidParameter("L-decomposition requires a pure complex".into()));
    }
    let mut memo = HashMap::new();
    Ok(search(c, &mut memo))
}

type Memo = HashMap<Vec<Face>, Option<Vec<usize>>>;

fn is_simplex(c: &SimplicialComplex) -> bool {
    c.facets().len() == 1
}

fn search(c: &SimplicialComplex, memo: &mut Memo) -> Option<Vec<usize>> {
    if is_simplex(c) {
        return Some(Vec::new());
    }
    if c.is_void() {
        return None;
    }
    if let Some(hit) = memo.get(c.facets()) {
        return hit.clone();
    }
    let dim = c.dim();
    let mut found = None;
    for v in face_vertices(c.vertex_set()) {
        let del = c.deletion(1 << v).expect("vertex is a face");
        if del.is_void() || !del.is_pure() || del.dim() != dim {
            continue;
        }
        if is_homology_manifold(&del, &Rationals) == ManifoldKind::NotAManifold {
            continue;
        }
        let link = c.link(1 << v).expect("vertex is a face");
        let bd = link.boundary();
        if !bd.is_void() && (bd.dim() != link.dim() - 1 || !bd.is_pure() || search(&bd, memo).is_none()) {
            continue;
        }
        if let Some(mut rest) = search(&del, memo) {
            rest.insert(0, v);
            found = Some(rest);
            break;
        }
    }
    memo.insert(c.facets().to_vec(), found.clone());
    found
}
