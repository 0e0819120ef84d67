//! Machine-checkable records of verified inequality and equality instances.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Equality,
    Violated,
}

/// The relation a certificate asserts between `lhs` and `rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `lhs ≤ rhs`; equality within `tol` is reported as [`Verdict::Equality`].
    #[serde(rename = "le")]
    AtMost,
    /// `lhs = rhs` within `tol`.
    #[serde(rename = "eq")]
    Equal,
}

/// A named boolean side condition attached to a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub statement: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub inputs: Value,
    pub lhs: f64,
    pub rhs: f64,
    pub tol: f64,
    pub relation: Relation,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub witness: Value,
}

impl Certificate {
    /// Certificate for `lhs ≤ rhs` with absolute tolerance `tol`.
    pub fn at_most(statement: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::build(statement.into(), lhs, rhs, tol, Relation::AtMost)
    }

    /// Certificate for `lhs = rhs` with absolute tolerance `tol`.
    pub fn equal(statement: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::build(statement.into(), lhs, rhs, tol, Relation::Equal)
    }

    fn build(statement: String, lhs: f64, rhs: f64, tol: f64, relation: Relation) -> Self {
        Self {
            statement,
            inputs: Value::Null,
            lhs,
            rhs,
            tol,
            relation,
            verdict: verdict_for(relation, lhs, rhs, tol),
            checks: Vec::new(),
            witness: Value::Null,
        }
    }

    pub fn with_inputs(mut self, inputs: Value) -> Self {
        self.inputs = inputs;
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }

    pub fn with_check(mut self, name: impl Into<String>, ok: bool) -> Self {
        self.checks.push(Check {
            name: name.into(),
            ok,
        });
        self
    }

    pub fn gap(&self) -> f64 {
        self.rhs - self.lhs
    }

    /// Whether the asserted relation and every side check hold.
    pub fn passed(&self) -> bool {
        let relation_ok = match self.relation {
            Relation::AtMost => self.verdict != Verdict::Violated,
            Relation::Equal => self.verdict == Verdict::Equality,
        };
        relation_ok && self.checks.iter().all(|c| c.ok)
    }

    /// Collapses a batch into its worst member: the largest `lhs - rhs` for
    /// inequalities, the largest `|lhs - rhs|` for equalities. Failed side
    /// checks from any member are carried over.
    pub fn worst_of(statement: impl Into<String>, items: &[Certificate]) -> Option<Certificate> {
        let key = |c: &Certificate| match c.relation {
            Relation::AtMost => c.lhs - c.rhs,
            Relation::Equal => (c.lhs - c.rhs).abs(),
        };
        let (index, worst) = items
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| key(a).total_cmp(&key(b)))?;
        let mut out = worst.clone();
        out.statement = statement.into();
        let mut failed: Vec<Check> = Vec::new();
        for (i, item) in items.iter().enumerate() {
            for c in item.checks.iter().filter(|c| !c.ok) {
                failed.push(Check {
                    name: format!("{}[{i}]", c.name),
                    ok: false,
                });
            }
        }
        out.checks.retain(|c| c.ok);
        out.checks.extend(failed);
        out.witness = json!({
            "count": items.len(),
            "worst_index": index,
            "equalities": items.iter().filter(|c| c.verdict == Verdict::Equality).count(),
            "violations": items.iter().filter(|c| c.verdict == Verdict::Violated).count(),
            "worst": worst.witness,
        });
        Some(out)
    }
}

fn verdict_for(relation: Relation, lhs: f64, rhs: f64, tol: f64) -> Verdict {
    let diff = lhs - rhs;
    if !diff.is_finite() {
        return Verdict::Violated;
    }
    if diff.abs() <= tol {
        return Verdict::Equality;
    }
    match relation {
        Relation::AtMost if diff < 0.0 => Verdict::Holds,
        _ => Verdict::Violated,
    }
}
