use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{face_from, face_vertices, Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

fn k_subsets(n: usize, k: usize) -> Vec<Face> {
    (0u64..(1u64 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// ∂Δ^d: all d-subsets of d+1 vertices, a (d−1)-sphere.
pub fn boundary_simplex(d: usize) -> SimplicialComplex {
    assert!((1..MAX_VERTICES).contains(&d), "dimension out of range");
    SimplicialComplex::numbered(d + 1, k_subsets(d + 1, d))
}

/// Boundary of the d-dimensional cross-polytope on 2d vertices. Vertex
/// `2i−1` sits at `+e_i` and `2i` at `−e_i`.
pub fn boundary_crosspolytope(d: usize) -> SimplicialComplex {
    assert!((1..=MAX_VERTICES / 2).contains(&d), "dimension out of range");
    let facets = (0u64..(1u64 << d))
        .map(|signs| face_from((0..d).map(|i| 2 * i + ((signs >> i) & 1) as usize)))
        .collect();
    SimplicialComplex::numbered(2 * d, facets)
}

/// Integer coordinates of the cross-polytope vertices, matching
/// [`boundary_crosspolytope`].
pub fn crosspolytope_coordinates(d: usize) -> Vec<Vec<i64>> {
    (0..2 * d)
        .map(|v| {
            let mut c = vec![0; d];
            c[v / 2] = if v % 2 == 0 { 1 } else { -1 };
            c
        })
        .collect()
}

/// Boundary of the cyclic d-polytope on n vertices, via Gale's evenness
/// condition: a d-set S is a facet iff any two non-members are separated by
/// an even number of members.
pub fn cyclic_polytope_boundary(n: usize, d: usize) -> Result<SimplicialComplex> {
    if d < 2 || n <= d || n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("cyclic polytope needs n > d >= 2, got n={n}, d={d}")));
    }
    let facets = k_subsets(n, d)
        .into_iter()
        .filter(|&s| {
            let outside: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 0).collect();
            outside.windows(2).all(|w| {
                let between = (w[0] + 1..w[1]).filter(|i| s >> i & 1 == 1).count();
                between % 2 == 0
            })
        })
        .collect();
    Ok(SimplicialComplex::numbered(n, facets))
}

/// The 7-vertex triangulation of the torus.
pub fn moebius_torus_7() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(face_from([i, (i + 1) % 7, (i + 3) % 7]));
        facets.push(face_from([i, (i + 2) % 7, (i + 3) % 7]));
    }
    SimplicialComplex::numbered(7, facets)
}

/// The boundary of the icosahedron: apex 1, upper ring 2–6, lower ring 7–11,
/// apex 12.
pub fn icosahedron() -> SimplicialComplex {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push(face_from([0, up(i), up(i + 1)]));
        facets.push(face_from([11, lo(i), lo(i + 1)]));
        facets.push(face_from([up(i), up(i + 1), lo(i)]));
        facets.push(face_from([up(i + 1), lo(i), lo(i + 1)]));
    }
    SimplicialComplex::numbered(12, facets)
}

/// The n-cycle, a triangulated circle.
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!((3..=MAX_VERTICES).contains(&n), "cycle length out of range");
    SimplicialComplex::numbered(n, (0..n).map(|i| face_from([i, (i + 1) % n])).collect())
}

/// A stacked d-sphere: starting from ∂Δ^{d+1}, each step replaces a random
/// facet by the cone over its boundary from a new vertex. Has
/// `d + 2 + steps` vertices.
pub fn stacked_sphere(d: usize, steps: usize, seed: u64) -> Result<SimplicialComplex> {
    let n = d + 2 + steps;
    if d == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("stacked sphere with d={d}, steps={steps}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut facets: Vec<Face> = k_subsets(d + 2, d + 1);
    for step in 0..steps {
        let new = 1u64 << (d + 2 + step);
        let f = facets.swap_remove(rng.gen_range(0..facets.len()));
        facets.extend(face_vertices(f).map(|v| (f & !(1 << v)) | new));
    }
    Ok(SimplicialComplex::numbered(n, facets))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_counts() {
        assert_eq!(boundary_simplex(3).f_vector(), vec![4, 6, 4]);
        assert_eq!(boundary_crosspolytope(3).f_vector(), vec![6, 12, 8]);
        assert_eq!(boundary_crosspolytope(4).f_vector(), vec![8, 24, 32, 16]);
        assert_eq!(icosahedron().f_vector(), vec![12, 30, 20]);
        assert_eq!(moebius_torus_7().f_vector(), vec![7, 21, 14]);
        assert_eq!(moebius_torus_7().euler_characteristic(), 0);
    }

    #[test]
    fn cyclic_polytope_counts() {
        assert_eq!(cyclic_polytope_boundary(7, 4).unwrap().f_vector(), vec![7, 21, 28, 14]);
        assert_eq!(cyclic_polytope_boundary(6, 3).unwrap().f_vector(), vec![6, 12, 8]);
        assert!(cyclic_polytope_boundary(4, 4).is_err());
    }

    #[test]
    fn stacked_sphere_is_deterministic() {
        let a = stacked_sphere(3, 5, 9).unwrap();
        assert_eq!(a, stacked_sphere(3, 5, 9).unwrap());
        assert_eq!(a.num_vertices(), 10);
        assert_eq!(a.facets().len(), 5 + 3 * 5);
    }
}
