//! Checks relations against exact values at every point of a small grid.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{from_int, ExactRational};
use crate::oracles::{exact_code_size, OracleConfig};
use crate::structures::ParamKey;

use super::relations::Relation;

/// Target points to audit: code points `(q, n, d)`, constant-weight points
/// `(n, d, w)` with even `d`, and doubly-constant-weight points with
/// `n1 + n2 <= n_max` and `w1 + w2 <= w_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditGrid {
    pub q_values: Vec<u32>,
    pub n_max: u32,
    pub d_values: Vec<u32>,
    pub w_max: u32,
}

impl Default for AuditGrid {
    fn default() -> Self {
        AuditGrid {
            q_values: vec![2],
            n_max: 8,
            d_values: vec![2, 3, 4],
            w_max: 4,
        }
    }
}

impl AuditGrid {
    pub fn targets(&self, relation: Relation) -> Vec<ParamKey> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            for &d in &self.d_values {
                match relation.target_family() {
                    "code" => {
                        for &q in &self.q_values {
                            out.push(ParamKey::Unrestricted { q, n, d });
                        }
                    }
                    "constant_weight" => {
                        for w in 0..=n.min(self.w_max) {
                            out.push(ParamKey::ConstantWeight { n, d, w });
                        }
                    }
                    _ => {
                        for n1 in 1..n {
                            let n2 = n - n1;
                            for w1 in 0..=n1 {
                                for w2 in 0..=n2 {
                                    if w1 + w2 <= self.w_max {
                                        out.push(ParamKey::DoublyConstant { w1, n1, w2, n2, d });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.retain(|k| k.validate().is_ok());
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

/// `Printed` checks `X(p) <= c · X(p')`; `Reversed` checks `X(p') <= X(p) / c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Printed,
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// The point on the left-hand side of the checked inequality.
    pub params: ParamKey,
    pub inequality: String,
    pub lhs_exact: usize,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub rhs_value: ExactRational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub inequality: Relation,
    pub direction: Direction,
    pub grid: AuditGrid,
    pub verdict: Verdict,
    pub instances_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Points whose exact value could not be established within the oracle limits.
    pub unknown: Vec<ParamKey>,
}

struct Exact<'a> {
    config: &'a OracleConfig,
    cache: HashMap<ParamKey, Option<usize>>,
}

impl Exact<'_> {
    fn get(&mut self, k: ParamKey) -> Result<Option<usize>> {
        if let Some(v) = self.cache.get(&k) {
            return Ok(*v);
        }
        let v = match exact_code_size(k, self.config) {
            Ok(r) => Some(r.value),
            Err(Error::Timeout(_) | Error::VertexCap { .. }) => None,
            Err(e) => return Err(e),
        };
        self.cache.insert(k, v);
        Ok(v)
    }
}

/// Audits `relation` as stated.
pub fn audit_inequality(relation: Relation, grid: &AuditGrid, config: &OracleConfig) -> Result<AuditReport> {
    audit(relation, grid, config, Direction::Printed)
}

/// Audits `relation` with the roles of its two points swapped.
pub fn audit_reversed(relation: Relation, grid: &AuditGrid, config: &OracleConfig) -> Result<AuditReport> {
    audit(relation, grid, config, Direction::Reversed)
}

fn audit(relation: Relation, grid: &AuditGrid, config: &OracleConfig, direction: Direction) -> Result<AuditReport> {
    let mut exact = Exact {
        config,
        cache: HashMap::new(),
    };
    let mut counterexamples = Vec::new();
    let mut unknown = Vec::new();
    let mut checked = 0;
    for target in grid.targets(relation) {
        for inst in relation.instances(target)? {
            let lhs_point = match direction {
                Direction::Printed => target,
                Direction::Reversed => match inst.operand {
                    Some(o) if inst.coefficient > from_int(0) => o,
                    _ => continue,
                },
            };
            let Some(lhs) = exact.get(lhs_point)? else {
                unknown.push(lhs_point);
                continue;
            };
            let rhs = match direction {
                Direction::Printed => match inst.operand {
                    Some(o) => match exact.get(o)? {
                        Some(v) => inst.evaluate(Some(&from_int(v))),
                        None => {
                            unknown.push(o);
                            continue;
                        }
                    },
                    None => inst.evaluate(None),
                },
                Direction::Reversed => match exact.get(target)? {
                    Some(v) => from_int(v) / &inst.coefficient,
                    None => {
                        unknown.push(target);
                        continue;
                    }
                },
            };
            checked += 1;
            if from_int(lhs) > rhs {
                let inequality = match direction {
                    Direction::Printed => inst.describe(target),
                    Direction::Reversed => format!(
                        "{lhs_point} <= {target} / {}",
                        crate::exactnum::render_rational(&inst.coefficient)
                    ),
                };
                counterexamples.push(Counterexample {
                    params: lhs_point,
                    inequality,
                    lhs_exact: lhs,
                    rhs_value: rhs,
                });
            }
        }
    }
    unknown.sort();
    unknown.dedup();
    let verdict = if !counterexamples.is_empty() {
        Verdict::Fails
    } else if !unknown.is_empty() {
        Verdict::Unknown
    } else {
        Verdict::Holds
    };
    Ok(AuditReport {
        inequality: relation,
        direction,
        grid: grid.clone(),
        verdict,
        instances_checked: checked,
        counterexamples,
        unknown,
    })
}
