//! Three-valued verdicts with witnesses.

use std::fmt;

use crate::linalg::{vector, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    /// Only produced by the randomized freeness search.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Concrete evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Index(usize),
    Pair(usize, usize),
    Triple(usize, usize, usize),
    Vector(Vec<Scalar>),
    /// Columns are the certifying vectors (e.g. a free basis).
    Certificate(Matrix),
    Dimension { expected: usize, found: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Index(i) => write!(f, "e{i}"),
            Witness::Pair(i, j) => write!(f, "(e{i}, e{j})"),
            Witness::Triple(i, j, k) => write!(f, "(e{i}, e{j}, e{k})"),
            Witness::Vector(v) => f.write_str(&vector::format(v)),
            Witness::Certificate(m) => {
                let cols: Vec<String> = m.columns().iter().map(|c| vector::format(c)).collect();
                write!(f, "[{}]", cols.join(" "))
            }
            Witness::Dimension { expected, found } => write!(f, "dim {found} (expected {expected})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl CheckResult {
    pub fn yes(detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::Yes,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn yes_with(witness: Witness, detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::Yes,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    /// A "no" always carries its witness.
    pub fn no(witness: Witness, detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::No,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    pub fn inconclusive(detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::Inconclusive,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.verdict == Verdict::No
    }

    /// Turns a failed check into an error, passing successes through.
    pub fn into_result(self) -> crate::Result<()> {
        if self.is_yes() {
            Ok(())
        } else {
            Err(crate::Error::Axiom(self))
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " [witness {w}]")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}
