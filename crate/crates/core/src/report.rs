//! Verdicts and small serialization helpers shared by the checks.

use serde::{Deserialize, Serialize};

use crate::exactla::{Field, SparseMatrix};

/// Outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The hypotheses were not met, so nothing was tested.
    Skipped,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }

    /// `Pass` only if both are `Pass`; `Fail` dominates `Skipped`.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Skipped, _) | (_, Verdict::Skipped) => Verdict::Skipped,
            _ => Verdict::Pass,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Elements rendered as strings ("p/q" or "v mod p").
pub fn scalar_strings<F: Field>(field: &F, v: &[F::Elem]) -> Vec<String> {
    v.iter().map(|e| field.to_scalar(e).to_string()).collect()
}

/// Dense rendering of a matrix as rows of scalar strings.
pub fn matrix_strings<F: Field>(m: &SparseMatrix<F>) -> Vec<Vec<String>> {
    m.to_scalar_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}
