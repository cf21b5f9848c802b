//! Vertex coordinates, properness, and the induced linear system of parameters.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Deserialize;

use crate::complex::{boundary_simplex, face_size, face_vertices, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactla::{elem_from_scalar, kernel, rank, Field, Scalar, SparseMatrix};
use crate::seeds;

/// Default coordinate bound for sampling over ℚ.
pub const DEFAULT_BOUND: u64 = 1_000_000;

/// How many fresh samples to draw before giving up on properness.
pub const MAX_ATTEMPTS: usize = 64;

/// Coordinates `V ∈ F^{l×n}`: one column per ground-set vertex. The rows
/// are the linear forms `θ_i = Σ_v V[i][v] x_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization<F: Field> {
    field: F,
    l: usize,
    coords: Vec<Vec<F::Elem>>,
}

impl<F: Field> Realization<F> {
    pub fn new(field: F, l: usize, coords: Vec<Vec<F::Elem>>) -> Result<Self> {
        if let Some(bad) = coords.iter().position(|c| c.len() != l) {
            return Err(Error::DimensionMismatch(format!("vertex {bad} has {} coordinates, expected {l}", coords[bad].len())));
        }
        Ok(Realization { field, l, coords })
    }

    pub fn from_integers(field: F, coords: &[Vec<i64>]) -> Result<Self> {
        let l = coords.first().map_or(0, Vec::len);
        let c = coords.iter().map(|p| p.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::new(field, l, c)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    /// Target dimension l.
    pub fn dim(&self) -> usize {
        self.l
    }
    pub fn num_vertices(&self) -> usize {
        self.coords.len()
    }
    pub fn coord(&self, v: usize) -> &[F::Elem] {
        &self.coords[v]
    }
    pub fn coords(&self) -> &[Vec<F::Elem>] {
        &self.coords
    }

    /// The l×n coordinate matrix.
    pub fn matrix(&self) -> SparseMatrix<F> {
        SparseMatrix::from_columns(self.field.clone(), self.l, &self.coords)
    }

    /// The l×|σ| matrix of the columns of σ.
    pub fn face_matrix(&self, sigma: Face) -> SparseMatrix<F> {
        let cols: Vec<Vec<F::Elem>> = face_vertices(sigma).map(|v| self.coords[v].clone()).collect();
        SparseMatrix::from_columns(self.field.clone(), self.l, &cols)
    }

    /// Rank of the vectors of σ.
    pub fn face_rank(&self, sigma: Face) -> usize {
        rank(&self.face_matrix(sigma))
    }

    /// Properness on Δ: every face with at most l vertices has linearly
    /// independent vertex vectors.
    pub fn is_proper(&self, c: &SimplicialComplex) -> bool {
        self.first_improper_face(c).is_none()
    }

    pub fn first_improper_face(&self, c: &SimplicialComplex) -> Option<Face> {
        if c.ground_size() > self.coords.len() {
            return Some(c.vertex_set());
        }
        c.faces().iter().copied().filter(|f| face_size(*f) <= self.l).find(|&f| self.face_rank(f) != face_size(f))
    }

    pub fn require_proper(&self, c: &SimplicialComplex) -> Result<()> {
        match self.first_improper_face(c) {
            None => Ok(()),
            Some(f) => Err(Error::Improper(format!("face {:?} has dependent vertex vectors", c.face_labels(f)))),
        }
    }

    /// Coordinates as detached scalars, keyed by label.
    pub fn to_labelled(&self, c: &SimplicialComplex) -> BTreeMap<String, Vec<Scalar>> {
        (0..c.ground_size())
            .map(|v| (c.label(v).to_string(), self.coords[v].iter().map(|e| self.field.to_scalar(e)).collect()))
            .collect()
    }

    /// Projection along `direction` together with the height functional.
    ///
    /// The projected coordinates are `(w_1·p, …, w_{l−1}·p)` for the
    /// canonical basis `w_j` of the forms vanishing on `direction`; the height
    /// is the coordinate `p_j` at the first index where `direction_j ≠ 0`.
    /// Since `[w; e_j]` is invertible, projection and height determine `V`.
    pub fn project_and_height(&self, c: &SimplicialComplex, direction: &[F::Elem]) -> Result<ProjectionData<F>> {
        if direction.len() != self.l {
            return Err(Error::DimensionMismatch("direction length differs from target dimension".into()));
        }
        let Some(j) = direction.iter().position(|x| !self.field.is_zero(x)) else {
            return Err(Error::InvalidParameter("projection direction must be nonzero".into()));
        };
        let forms = annihilating_forms(&self.field, direction);
        let coords = self
            .coords
            .iter()
            .map(|p| forms.iter().map(|w| crate::exactla::sparse::dot(&self.field, w, p)).collect())
            .collect();
        let projection = Realization::new(self.field.clone(), self.l - 1, coords)?;
        let heights = self.coords.iter().map(|p| p[j].clone()).collect();
        let proper = projection.is_proper(c);
        Ok(ProjectionData { projection, forms, height_index: j, heights, proper })
    }

    /// Realization of the link of σ: project along span(σ) using the forms
    /// that vanish on it.
    pub fn link_realization(&self, sigma: Face) -> Result<Realization<F>> {
        let forms = kernel(&self.face_matrix(sigma).transpose()).basis_dense();
        let coords = self
            .coords
            .iter()
            .map(|p| forms.iter().map(|w| crate::exactla::sparse::dot(&self.field, w, p)).collect())
            .collect();
        Realization::new(self.field.clone(), forms.len(), coords)
    }
}

/// Basis of the linear forms vanishing on a vector, in canonical order.
fn annihilating_forms<F: Field>(field: &F, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let m = SparseMatrix::from_dense(field.clone(), v.len(), &[v.to_vec()]);
    kernel(&m).basis_dense()
}

/// A general-position projection to a hyperplane plus a height per vertex.
#[derive(Clone, Debug)]
pub struct ProjectionData<F: Field> {
    pub projection: Realization<F>,
    /// The forms defining the projection (each vanishes on the direction).
    pub forms: Vec<Vec<F::Elem>>,
    pub height_index: usize,
    pub heights: Vec<F::Elem>,
    pub proper: bool,
}

/// Samples integer coordinates uniformly in `[−bound, bound]` (or uniformly
/// from the whole prime field) until the realization is proper on `c`.
/// Returns the realization and the number of rejected samples.
pub fn random_realization<F: Field>(c: &SimplicialComplex, l: usize, field: &F, seed: u64, bound: u64) -> Result<(Realization<F>, usize)> {
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = seeds::rng(seed, "realization", attempt as u64);
        let coords = (0..c.ground_size()).map(|_| (0..l).map(|_| field.sample(&mut rng, bound)).collect()).collect();
        let r = Realization::new(field.clone(), l, coords)?;
        if r.is_proper(c) {
            return Ok((r, attempt));
        }
    }
    Err(Error::Improper(format!("no proper realization in R^{l} found after {MAX_ATTEMPTS} samples")))
}

/// A random linear form `Σ c_v x_v` with integer coefficients.
pub fn random_linear_form<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R, bound: u64) -> Vec<F::Elem> {
    (0..n).map(|_| field.sample(rng, bound)).collect()
}

/// The tetrahedron boundary subdivided at every triangle, with the original
/// vertices placed in the plane `z = 0` and the new ones off it.
///
/// Returns the sphere Σ′ (vertices `1..4` and `1'..4'`, where `i'` subdivides
/// the triangle opposite `i`), its fixed realization, and the subcomplex
/// Δ = Σ ∩ Σ′ (the graph of the tetrahedron).
pub fn special_realization_bad_reduction<F: Field>(field: &F) -> (SimplicialComplex, Realization<F>, SimplicialComplex) {
    let tet = boundary_simplex(3);
    let mut sigma = tet.clone();
    for i in 0..4 {
        let opposite = 0b1111 & !(1u64 << i);
        sigma = sigma.stellar_subdivide_labeled(opposite, &format!("{}'", i + 1)).expect("triangle of the tetrahedron");
    }
    let coords: [[i64; 3]; 8] = [[2, 1, 0], [-1, 3, 0], [-2, -3, 0], [3, -2, 0], [1, 2, 5], [-3, 1, 4], [2, -1, -3], [-1, -2, 6]];
    let coords: Vec<Vec<i64>> = coords.iter().map(|c| c.to_vec()).collect();
    let r = Realization::from_integers(field.clone(), &coords).expect("consistent coordinates");
    let delta = sigma.sibling(tet.skeleton(1).facets().to_vec());
    (sigma, r, delta)
}

#[derive(Deserialize)]
struct CoordinateJson {
    vertices: BTreeMap<String, Vec<serde_json::Value>>,
}

/// Parses `{"vertices": {"label": ["p/q", ...]}}` against the ground set of `c`.
pub fn parse_coordinates<F: Field>(text: &str, c: &SimplicialComplex, field: &F) -> Result<Realization<F>> {
    let doc: CoordinateJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut coords: Vec<Option<Vec<F::Elem>>> = vec![None; c.ground_size()];
    let mut l = None;
    for (label, vals) in &doc.vertices {
        let v = c.index_of(label).ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))?;
        let p = vals
            .iter()
            .map(|x| {
                let s = match x {
                    serde_json::Value::String(s) => Scalar::parse(s)?,
                    serde_json::Value::Number(n) => Scalar::parse(&n.to_string())?,
                    other => return Err(Error::Parse(format!("bad coordinate {other}"))),
                };
                elem_from_scalar(field, &s)
            })
            .collect::<Result<Vec<_>>>()?;
        if *l.get_or_insert(p.len()) != p.len() {
            return Err(Error::DimensionMismatch(format!("vertex {label:?} has {} coordinates", p.len())));
        }
        coords[v] = Some(p);
    }
    let l = l.unwrap_or(0);
    let coords = coords
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::Parse(format!("missing coordinates for vertex {:?}", c.label(v)))))
        .collect::<Result<Vec<_>>>()?;
    Realization::new(field.clone(), l, coords)
}

/// Renders the coordinate JSON format.
pub fn coordinates_json<F: Field>(r: &Realization<F>, c: &SimplicialComplex) -> serde_json::Value {
    let map: serde_json::Map<String, serde_json::Value> = r
        .to_labelled(c)
        .into_iter()
        .map(|(k, v)| (k, serde_json::Value::Array(v.iter().map(|s| serde_json::Value::String(s.to_string())).collect())))
        .collect();
    serde_json::json!({ "vertices": map })
}
