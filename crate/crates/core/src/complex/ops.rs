use std::sync::Arc;

use super::{face_size, face_vertices, Face, RelativeComplex, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

impl SimplicialComplex {
    fn require_face(&self, sigma: Face) -> Result<()> {
        if self.is_face(sigma) {
            Ok(())
        } else {
            Err(Error::NotAFace(format!("{:?}", self.face_labels(sigma))))
        }
    }

    /// Closed star: faces τ with τ ∪ σ a face.
    pub fn star(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        Ok(self.sibling(self.facets().iter().copied().filter(|f| f & sigma == sigma).collect()))
    }

    /// Link: faces τ disjoint from σ with τ ∪ σ a face.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        Ok(self.sibling(self.facets().iter().copied().filter(|f| f & sigma == sigma).map(|f| f & !sigma).collect()))
    }

    /// Deletion Δ − σ: the largest subcomplex not containing σ.
    pub fn deletion(&self, sigma: Face) -> Result<Self> {
        self.require_face(sigma)?;
        if sigma == 0 {
            return Ok(self.sibling(Vec::new()));
        }
        let mut fs = Vec::new();
        for &f in self.facets() {
            if f & sigma == sigma {
                fs.extend(face_vertices(sigma).map(|v| f & !(1 << v)));
            } else {
                fs.push(f);
            }
        }
        Ok(self.sibling(fs))
    }

    /// Open star of σ as the pair (St_σ, St_σ − σ).
    pub fn open_star(&self, sigma: Face) -> Result<RelativeComplex> {
        let st = self.star(sigma)?;
        let rest = st.deletion(sigma)?;
        RelativeComplex::new(st, rest)
    }

    /// Stellar subdivision at σ with a fresh vertex named `label`.
    pub fn stellar_subdivide_labeled(&self, sigma: Face, label: &str) -> Result<Self> {
        self.require_face(sigma)?;
        if face_size(sigma) < 2 {
            return Err(Error::InvalidParameter(
                "stellar subdivision needs a face of positive dimension; subdividing a vertex changes nothing".into(),
            ));
        }
        if self.index_of(label).is_some() {
            return Err(Error::InvalidParameter(format!("vertex {label:?} already exists")));
        }
        if self.ground_size() >= MAX_VERTICES {
            return Err(Error::Limit("no room for a new vertex".into()));
        }
        let mut labels = self.labels().as_ref().clone();
        labels.push(label.to_string());
        let new = 1u64 << (labels.len() - 1);
        let mut fs: Vec<Face> = self.deletion(sigma)?.facets().to_vec();
        for &f in self.facets().iter().filter(|f| *f & sigma == sigma) {
            for v in face_vertices(sigma) {
                fs.push((f & !(1 << v)) | new);
            }
        }
        Ok(SimplicialComplex::with_ground(Arc::new(labels), fs))
    }

    /// Stellar subdivision at σ; the new vertex is named after σ.
    pub fn stellar_subdivide(&self, sigma: Face) -> Result<Self> {
        let mut label = format!("[{}]", self.face_labels(sigma).join(","));
        while self.index_of(&label).is_some() {
            label.push('\'');
        }
        self.stellar_subdivide_labeled(sigma, &label)
    }

    /// Free join. Labels shared by both sides are disambiguated with `a:`/`b:` prefixes.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let left: Vec<String> = self.vertices().iter().map(|&v| self.label(v).to_string()).collect();
        let right: Vec<String> = other.vertices().iter().map(|&v| other.label(v).to_string()).collect();
        let clash = left.iter().any(|l| right.contains(l));
        let (left, right): (Vec<String>, Vec<String>) = if clash {
            (left.iter().map(|l| format!("a:{l}")).collect(), right.iter().map(|l| format!("b:{l}")).collect())
        } else {
            (left, right)
        };
        if left.len() + right.len() > MAX_VERTICES {
            return Err(Error::Limit("join has too many vertices".into()));
        }
        let mut facets = Vec::new();
        for &f in self.facets() {
            for &g in other.facets() {
                let mut fv: Vec<String> = face_vertices(f).map(|v| left[self.vertices().iter().position(|&u| u == v).unwrap()].clone()).collect();
                fv.extend(face_vertices(g).map(|v| right[other.vertices().iter().position(|&u| u == v).unwrap()].clone()));
                facets.push(fv);
            }
        }
        if facets.iter().all(|f| f.is_empty()) {
            let fs = if facets.is_empty() { vec![] } else { vec![0] };
            return Ok(SimplicialComplex::with_ground(Arc::new(Vec::new()), fs));
        }
        SimplicialComplex::from_facets(&facets)
    }

    /// Suspension: join with two new points.
    pub fn suspension(&self) -> Result<Self> {
        let mut n = "n".to_string();
        let mut s = "s".to_string();
        while self.index_of(&n).is_some() || self.index_of(&s).is_some() {
            n.push('\'');
            s.push('\'');
        }
        let poles = SimplicialComplex::from_facets(&[vec![n], vec![s]])?;
        self.join(&poles)
    }

    pub fn iterated_suspension(&self, times: usize) -> Result<Self> {
        let mut c = self.clone();
        for _ in 0..times {
            c = c.suspension()?;
        }
        Ok(c)
    }
}
