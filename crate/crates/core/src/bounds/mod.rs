//! Upper bounds on code sizes: closed forms, relations between parameter points,
//! a fixpoint engine combining both, and an auditor that checks relations
//! against exact values.
//!
//! Every bound is an exact rational. It is floored once, when a [`BoundResult`]
//! is built, and floored values are what later relations consume.

mod audit;
mod closed;
mod engine;
mod relations;
mod table;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{floor, render_rational, ExactInt, ExactRational};
use crate::structures::ParamKey;

pub use audit::{audit_inequality, audit_reversed, AuditGrid, AuditReport, Counterexample, Direction, Verdict};
pub use closed::{closed_form_bound, closed_forms_for, ClosedForm};
pub use engine::{best_bound, replay, Grid, GridBounds, Mode, DEFAULT_GRID_CAP};
pub use relations::{relation_bound, Instance, Relation};
pub use table::Table;

/// How a trace step obtained its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// `q^n`, `C(n, w)` or the vertex count of a doubly graph.
    Trivial,
    /// A value supplied by the caller.
    Given,
    Closed(ClosedForm),
    Relation(Relation),
}

impl Method {
    pub fn cite(&self) -> &'static str {
        match self {
            Method::Trivial => "vertex count",
            Method::Given => "supplied operand",
            Method::Closed(c) => c.cite(),
            Method::Relation(r) => r.cite(),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Trivial => f.write_str("trivial"),
            Method::Given => f.write_str("given"),
            Method::Closed(c) => c.fmt(f),
            Method::Relation(r) => r.fmt(f),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One evaluation in a derivation. `operands` are 1-based indices of earlier steps
/// whose floored values fed this one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub method: Method,
    pub cite: &'static str,
    #[serde(serialize_with = "crate::serde_util::int")]
    pub value: ExactInt,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub rational: ExactRational,
    pub params: ParamKey,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub operands: Vec<usize>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// An upper bound on the size of the code family described by `params`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundResult {
    pub params: ParamKey,
    pub method: Method,
    pub rational: ExactRational,
    pub value: ExactInt,
    pub trace: Vec<TraceStep>,
}

impl BoundResult {
    /// A single-step result.
    pub(crate) fn single(params: ParamKey, method: Method, rational: ExactRational, note: String) -> Self {
        let value = floor(&rational);
        let step = TraceStep {
            step: 1,
            method,
            cite: method.cite(),
            value: value.clone(),
            rational: rational.clone(),
            params,
            operands: vec![],
            note,
        };
        BoundResult {
            params,
            method,
            rational,
            value,
            trace: vec![step],
        }
    }

    /// The note attached to the final step.
    pub fn note(&self) -> &str {
        self.trace.last().map_or("", |s| s.note.as_str())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.params.family_name(),
            "params": self.params.fields_json(),
            "method": self.method.to_string(),
            "rational": render_rational(&self.rational),
            "value": self.value.to_string(),
            "trace": self.trace,
        })
    }
}

impl Serialize for BoundResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// The number of vertices of the graph whose clique number is the quantity.
pub fn trivial_cap(params: ParamKey) -> Result<ExactInt> {
    use crate::exactnum::{binomial, pow};
    params.validate()?;
    Ok(match params {
        ParamKey::Unrestricted { q, n, .. } => pow(q as u64, n),
        ParamKey::ConstantWeight { n, w, .. } => binomial(n as u64, w as i64),
        ParamKey::DoublyConstant { w1, n1, w2, n2, .. } => {
            binomial(n1 as u64, w1 as i64) * binomial(n2 as u64, w2 as i64)
        }
        ParamKey::DoublyBounded { w1, n1, w2, n2, .. } => (0..=w1 as i64)
            .map(|i| binomial(n1 as u64, i) * binomial(n2 as u64, (w1 + w2) as i64 - i))
            .sum(),
    })
}

pub(crate) fn trivial_bound(params: ParamKey) -> Result<BoundResult> {
    let cap = trivial_cap(params)?;
    Ok(BoundResult::single(params, Method::Trivial, ExactRational::from_integer(cap), String::new()))
}

pub(crate) fn mismatch(method: impl fmt::Display, params: ParamKey) -> Error {
    Error::inapplicable(method, format!("not defined for {params}"))
}
