//! Identity registry and the exact decision procedure.
//!
//! An identity with a repeated variable is polarized: each occurrence becomes
//! its own slot and the residual is summed over all ways of distributing the
//! variable's slot vectors. Over a field of characteristic 0 the polarized
//! form vanishes on all basis tuples iff the identity holds for all vectors.

mod audit;
mod classify;
mod context;
mod engine;
mod registry;

use std::fmt;

pub use audit::{audit, Violation};
pub use classify::{classify, classify_with, Classification, PropertyFlags};
pub use context::Context;
pub use engine::{decide, first_failure, polarized_residual, Clause, Failure};
pub use registry::{IdentityId, Requirement};

use crate::error::Error;
use crate::linear::{LinearMap, MultilinearMap, Vector};
use crate::structures::Structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check. A failing report always carries the
/// lexicographically first failing basis tuple and the nonzero residual there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub code: Option<String>,
    pub verdict: Verdict,
    pub witness: Option<Vec<usize>>,
    pub residual: Option<Vector>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn pass(id: &str, code: Option<&str>) -> Self {
        CheckReport {
            id: id.to_string(),
            code: code.map(str::to_string),
            verdict: Verdict::Pass,
            witness: None,
            residual: None,
            notes: Vec::new(),
        }
    }

    fn from_outcome(id: &str, code: Option<&str>, failure: Option<Failure>) -> Self {
        let mut report = CheckReport::pass(id, code);
        if let Some(f) = failure {
            report.verdict = Verdict::Fail;
            report.notes.push(format!("clause {} fails at slots ({})", f.clause, f.slots.join(", ")));
            report.witness = Some(f.witness);
            report.residual = Some(f.residual);
        }
        report
    }

    fn not_applicable(id: &str, code: Option<&str>, reason: String) -> Self {
        let mut report = CheckReport::pass(id, code);
        report.verdict = Verdict::NotApplicable;
        report.notes.push(reason);
        report
    }

    /// One line: id, verdict, and witness/residual or reason.
    pub fn summary(&self) -> String {
        let mut s = match &self.code {
            Some(code) => format!("{code} {}: {}", self.id, self.verdict),
            None => format!("{}: {}", self.id, self.verdict),
        };
        if let (Some(w), Some(r)) = (&self.witness, &self.residual) {
            s.push_str(&format!(" at {w:?}, residual {r}"));
        }
        if !self.notes.is_empty() {
            s.push_str(&format!(" ({})", self.notes.join("; ")));
        }
        s
    }
}

/// Checks one identity against a structure.
pub fn check(structure: &Structure, id: IdentityId) -> CheckReport {
    check_in(&Context::new(structure), id)
}

/// Like [`check`], with the identity given by name or code.
pub fn check_by_name(structure: &Structure, name: &str) -> Result<CheckReport, Error> {
    Ok(check(structure, IdentityId::from_name(name)?))
}

pub(crate) fn check_in(ctx: &Context, id: IdentityId) -> CheckReport {
    if let Some(req) = id.missing_requirement(ctx) {
        return CheckReport::not_applicable(id.name(), Some(id.code()), format!("requires {}", req.name()));
    }
    let clauses = id.clauses(ctx);
    CheckReport::from_outcome(id.name(), Some(id.code()), decide(&clauses, ctx.dim()))
}

/// Decides whether `m ∘ (maps[0] ⊗ ... ⊗ maps[k-1])` is alternating. An empty
/// `maps` slice means no precomposition.
pub fn check_alternating(m: &MultilinearMap, maps: &[&LinearMap]) -> Result<CheckReport, Error> {
    let composite;
    let target = if maps.is_empty() {
        m
    } else {
        composite = m.precompose(maps)?;
        &composite
    };
    let clauses = registry::alternating_clauses(target);
    Ok(CheckReport::from_outcome("alternating", None, decide(&clauses, m.dim())))
}

/// Decides whether `f` is a morphism from `source` to `target`. The map
/// conditions `f∘α = α̃∘f`, `f∘β = β̃∘f` are skipped for plain Akivis algebras.
pub fn check_morphism(f: &LinearMap, source: &Structure, target: &Structure) -> Result<CheckReport, Error> {
    let dim = source.dim();
    for d in [f.dim(), target.dim()] {
        if d != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: d });
        }
    }
    if source.kind() != target.kind() {
        return Err(Error::KindMismatch(source.kind().to_string(), target.kind().to_string()));
    }
    let (sa, sb) = source.maps();
    let (ta, tb) = target.maps();
    let mut clauses: Vec<Clause> = Vec::new();
    if !matches!(source, Structure::Akivis(_)) {
        for (label, s, t) in [("alpha", sa, ta), ("beta", sb, tb)] {
            clauses.push(Clause::linear(label, &["x"], move |v: &[Vector]| {
                f.apply_unchecked(&s.apply_unchecked(&v[0])) - t.apply_unchecked(&f.apply_unchecked(&v[0]))
            }));
        }
    }
    let (sbin, tbin) = (source.binary(), target.binary());
    clauses.push(Clause::linear("binary", &["x", "y"], move |v: &[Vector]| {
        let lhs = f.apply_unchecked(&sbin.eval_unchecked(&[&v[0], &v[1]]));
        let (fx, fy) = (f.apply_unchecked(&v[0]), f.apply_unchecked(&v[1]));
        lhs - tbin.eval_unchecked(&[&fx, &fy])
    }));
    if let (Some(st), Some(tt)) = (source.triple(), target.triple()) {
        clauses.push(Clause::linear("triple", &["x", "y", "z"], move |v: &[Vector]| {
            let lhs = f.apply_unchecked(&st.eval_unchecked(&[&v[0], &v[1], &v[2]]));
            let fv: Vec<Vector> = v.iter().map(|x| f.apply_unchecked(x)).collect();
            lhs - tt.eval_unchecked(&[&fv[0], &fv[1], &fv[2]])
        }));
    }
    Ok(CheckReport::from_outcome("morphism", None, decide(&clauses, dim)))
}

#[cfg(test)]
mod tests;
