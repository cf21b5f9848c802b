use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use sha2::{Digest as _, Sha256};
use stresslab::complex::{
    boundary_crosspolytope, boundary_simplex, cycle, cyclic_polytope_boundary, face_from, icosahedron, moebius_torus_7, parse_facet_json, parse_facet_list,
    stacked_sphere, write_facet_list, SimplicialComplex,
};
use stresslab::exactla::{random_prime_near_2_31, Field, PrimeField};
use stresslab::realization::{coordinates_json, parse_coordinates, special_realization_bad_reduction, Realization};
use stresslab::rigidity::Graph;
use stresslab::seeds;

#[derive(Clone, Debug, Serialize)]
pub struct Digest {
    pub name: String,
    pub sha256: String,
}

pub fn digest(name: &str, bytes: &[u8]) -> Digest {
    Digest { name: name.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Q,
    Fp(u64),
}

impl FieldChoice {
    /// `q`, `fp:<prime>` or `fp:random` (a prime near 2^31 drawn from the seed).
    pub fn parse(s: &str, seed: u64) -> Result<Self> {
        match s {
            "q" => Ok(FieldChoice::Q),
            "fp:random" => Ok(FieldChoice::Fp(random_prime_near_2_31(&mut seeds::rng(seed, "prime", 0)))),
            _ => {
                let p = s.strip_prefix("fp:").ok_or_else(|| anyhow!("unknown field {s:?}; use q, fp:<prime> or fp:random"))?;
                let p: u64 = p.parse().with_context(|| format!("bad prime {p:?}"))?;
                PrimeField::new(p)?;
                Ok(FieldChoice::Fp(p))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldChoice::Q => "q".into(),
            FieldChoice::Fp(p) => format!("fp:{p}"),
        }
    }
}

/// Where a fixed realization comes from, if any.
#[derive(Clone, Debug)]
pub enum CoordSource {
    Json(String),
    BadReduction,
}

impl CoordSource {
    pub fn realize<F: Field>(&self, c: &SimplicialComplex, field: &F) -> Result<Realization<F>> {
        match self {
            CoordSource::Json(text) => Ok(parse_coordinates(text, c, field)?),
            CoordSource::BadReduction => Ok(special_realization_bad_reduction(field).1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub complex: SimplicialComplex,
    pub coords: Option<CoordSource>,
    pub digests: Vec<Digest>,
}

fn num(params: &[&str], i: usize, what: &str) -> Result<usize> {
    params.get(i).ok_or_else(|| anyhow!("missing parameter {what}"))?.parse().with_context(|| format!("bad {what}"))
}

/// Corpus generators, shared by `gen` and built-in check inputs.
pub fn generate(kind: &str, params: &[&str]) -> Result<SimplicialComplex> {
    Ok(match kind {
        "boundary_simplex" | "simplex" => boundary_simplex(num(params, 0, "d")?),
        "boundary_crosspolytope" | "crosspolytope" => boundary_crosspolytope(num(params, 0, "d")?),
        "octahedron" => boundary_crosspolytope(3),
        "cyclic" | "cyclic_polytope_boundary" => cyclic_polytope_boundary(num(params, 0, "n")?, num(params, 1, "d")?)?,
        "moebius_torus_7" | "torus" => moebius_torus_7(),
        "icosahedron" => icosahedron(),
        "stacked_sphere" | "stacked" => stacked_sphere(num(params, 0, "d")?, num(params, 1, "steps")?, num(params, 2, "seed")? as u64)?,
        "cycle" | "circle" => cycle(num(params, 0, "n")?),
        "bad_reduction" => special_realization_bad_reduction(&stresslab::exactla::Rationals).0,
        _ => bail!("unknown generator {kind:?}"),
    })
}

/// A facet file (`.json` for the JSON form) or a built-in `kind[:p1:p2…]`.
pub fn load_input(spec: &str, coords: Option<&Path>) -> Result<Input> {
    let (complex, mut digests, mut source) = if Path::new(spec).is_file() {
        let bytes = std::fs::read(spec).with_context(|| format!("reading {spec}"))?;
        let text = String::from_utf8(bytes.clone()).with_context(|| format!("{spec} is not UTF-8"))?;
        let c = if spec.ends_with(".json") { parse_facet_json(&text) } else { parse_facet_list(&text) }.with_context(|| format!("parsing {spec}"))?;
        (c, vec![digest(spec, &bytes)], None)
    } else {
        let mut parts = spec.split(':');
        let kind = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        let c = generate(kind, &params).with_context(|| format!("{spec:?} is neither a file nor a built-in complex"))?;
        let src = (kind == "bad_reduction").then_some(CoordSource::BadReduction);
        let d = digest(spec, write_facet_list(&c).as_bytes());
        (c, vec![d], src)
    };
    if let Some(p) = coords {
        let bytes = std::fs::read(p).with_context(|| format!("reading {}", p.display()))?;
        let text = String::from_utf8(bytes.clone()).context("coordinate file is not UTF-8")?;
        // validate now so that malformed files are input errors
        parse_coordinates(&text, &complex, &stresslab::exactla::Rationals).with_context(|| format!("parsing {}", p.display()))?;
        digests.push(digest(&p.display().to_string(), &bytes));
        source = Some(CoordSource::Json(text));
    }
    Ok(Input { name: spec.to_string(), complex, coords: source, digests })
}

pub fn load_graph(spec: &str) -> Result<(Graph, Digest)> {
    let bytes = std::fs::read(spec).with_context(|| format!("reading {spec}"))?;
    let text = String::from_utf8(bytes.clone()).with_context(|| format!("{spec} is not UTF-8"))?;
    Ok((Graph::parse_edge_list(&text).with_context(|| format!("parsing {spec}"))?, digest(spec, &bytes)))
}

fn vertex(c: &SimplicialComplex, label: &str) -> Result<usize> {
    c.index_of(label).ok_or_else(|| anyhow!("unknown vertex {label:?}"))
}

/// Named subcomplexes: `full`, `empty`, `star:<v>`, `vertices:<a,b,…>`,
/// `antipodal` / `adjacent` (first vertex with the opposite / next vertex of
/// a cycle), `intersection` (the bad-reduction Δ), or a facet file on the
/// same labels.
pub fn subcomplex(c: &SimplicialComplex, spec: &str) -> Result<(SimplicialComplex, Option<Digest>)> {
    let verts = c.vertices();
    let sub = match spec {
        "full" => c.clone(),
        "empty" => c.sibling(vec![0]),
        "intersection" => {
            let (sigma, _, delta) = special_realization_bad_reduction(&stresslab::exactla::Rationals);
            if sigma != *c {
                bail!("`intersection` is only defined for the bad_reduction complex");
            }
            delta
        }
        "antipodal" | "adjacent" => {
            if verts.len() < 3 || c.dim() != 1 {
                bail!("`{spec}` needs a cycle");
            }
            let other = if spec == "antipodal" { verts[verts.len() / 2] } else { verts[1] };
            c.sibling(vec![face_from([verts[0]]), face_from([other])])
        }
        _ if spec.starts_with("star:") => c.star(1 << vertex(c, &spec[5..])?)?,
        _ if spec.starts_with("vertices:") => {
            let vs = spec[9..].split(',').map(|l| vertex(c, l.trim()).map(|v| face_from([v]))).collect::<Result<Vec<_>>>()?;
            c.sibling(vs)
        }
        _ => {
            let bytes = std::fs::read(spec).with_context(|| format!("{spec:?} is neither a named subcomplex nor a readable file"))?;
            let text = String::from_utf8(bytes.clone()).context("subcomplex file is not UTF-8")?;
            let parsed = parse_facet_list(&text)?;
            let faces = parsed.facets().iter().map(|&f| c.face_of_labels(&parsed.face_labels(f))).collect::<stresslab::Result<Vec<_>>>()?;
            let sub = c.sibling(faces);
            if !sub.is_subcomplex_of(c) {
                bail!("{spec} is not a subcomplex of the input");
            }
            return Ok((sub, Some(digest(spec, &bytes))));
        }
    };
    Ok((sub, None))
}

/// Files written by `gen`: the facet list, plus coordinates for
/// `bad_reduction`.
pub fn gen_files(kind: &str, params: &[&str]) -> Result<(String, Option<String>)> {
    let c = generate(kind, params)?;
    let coords = (kind == "bad_reduction").then(|| {
        let (sigma, r, _) = special_realization_bad_reduction(&stresslab::exactla::Rationals);
        serde_json::to_string_pretty(&coordinates_json(&r, &sigma)).expect("serializable")
    });
    Ok((write_facet_list(&c), coords))
}
