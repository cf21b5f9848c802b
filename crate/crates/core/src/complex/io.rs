use serde::Deserialize;

use super::SimplicialComplex;
use crate::error::{Error, Result};

/// Parses the facet-list text format: one facet per line, vertices separated
/// by whitespace, `#` starting a comment line. Blank lines are skipped.
pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
    let facets: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
        .collect();
    SimplicialComplex::from_facets(&facets)
}

#[derive(Deserialize)]
struct FacetJson {
    facets: Vec<Vec<serde_json::Value>>,
}

/// Parses `{"facets": [[...], ...]}`; vertices may be strings or integers.
pub fn parse_facet_json(text: &str) -> Result<SimplicialComplex> {
    let doc: FacetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let facets = doc
        .facets
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => Ok(s.clone()),
                    serde_json::Value::Number(n) => Ok(n.to_string()),
                    other => Err(Error::Parse(format!("bad vertex {other}"))),
                })
                .collect::<Result<Vec<String>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(&facets)
}

/// Renders the facet-list text format.
pub fn write_facet_list(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for &f in c.facets() {
        out.push_str(&c.face_labels(f).join(" "));
        out.push('\n');
    }
    out
}
