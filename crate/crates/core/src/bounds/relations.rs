//! Inequalities of the form `X(p) <= c · X(p')` between parameter points, each
//! obtained from a homomorphism between the corresponding graphs.
//!
//! A relation expands at a target point into [`Instance`]s, one per choice of its
//! free parameters (for example the weight `w` in Bassalygo-Elias). Some instances
//! need no operand: their right-hand side is a plain number.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, floor, from_int, pow, ratio, ExactRational};
use crate::structures::ParamKey;

use super::{mismatch, BoundResult, Method, TraceStep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `A(n,d) <= 2^n / C(n,w) · A(n,d,w)`.
    BassalygoElias,
    /// `A(n,d,w) <= (n-w+1)/w · A(n,d+2,w-1)`.
    CwShrink,
    /// `A(n,d,w) <= (n+1)/(w+1) · A(n+1,d+2,w+1)`.
    CwGrow,
    /// `A(n,d,w) <= n/w · A(n-1,d,w-1)`.
    JohnsonDown,
    /// `A(n,d,w) <= n/(n-w) · A(n-1,d,w)`.
    JohnsonUp,
    /// `A_q(n,d) <= (1/q) · A_q(n+1,d+1)`.
    QaryExtend,
    /// `A_q(n,d) <= q · A_q(n-1,d)`.
    QaryShorten,
    /// `A_q(n,d) <= (q/(q-1))^n · A_{q-1}(n,d)`.
    QaryAlphabet,
    /// `A(n,d,w) <= C(n,w) / (C(n1,w1) C(n2,w2)) · T(w1,n1,w2,n2,d)`.
    DoublyEliasCw,
    /// `A(n,d) <= 2^n / Σ_{i≤w1} C(n1,i) C(n2,w1+w2-i) · T'(w1,n1,w2,n2,d)`.
    DoublyEliasUnrestricted,
    /// `T(w1,n1,w2,n2,d) <= C(n2,w2) · A(n1,d-2w2,w1)` and the mirror image.
    TBlockFix,
    /// The four weight-shift recursions on `T` at distance `d + 2`.
    TRecursions,
}

impl Relation {
    pub const ALL: [Relation; 12] = [
        Relation::BassalygoElias,
        Relation::CwShrink,
        Relation::CwGrow,
        Relation::JohnsonDown,
        Relation::JohnsonUp,
        Relation::QaryExtend,
        Relation::QaryShorten,
        Relation::QaryAlphabet,
        Relation::DoublyEliasCw,
        Relation::DoublyEliasUnrestricted,
        Relation::TBlockFix,
        Relation::TRecursions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Relation::BassalygoElias => "bassalygo_elias",
            Relation::CwShrink => "cw_shrink",
            Relation::CwGrow => "cw_grow",
            Relation::JohnsonDown => "johnson_down",
            Relation::JohnsonUp => "johnson_up",
            Relation::QaryExtend => "qary_extend",
            Relation::QaryShorten => "qary_shorten",
            Relation::QaryAlphabet => "qary_alphabet",
            Relation::DoublyEliasCw => "doubly_elias_cw",
            Relation::DoublyEliasUnrestricted => "doubly_elias_unrestricted",
            Relation::TBlockFix => "t_block_fix",
            Relation::TRecursions => "t_recursions",
        }
    }

    pub fn cite(&self) -> &'static str {
        match self {
            Relation::BassalygoElias => "Bassalygo-Elias inequality",
            Relation::CwShrink | Relation::CwGrow => "no-homomorphism lemma, weight-shift map",
            Relation::JohnsonDown | Relation::JohnsonUp => "Johnson inequality",
            Relation::QaryExtend | Relation::QaryShorten => "no-homomorphism lemma, length change",
            Relation::QaryAlphabet => "no-homomorphism lemma, alphabet inclusion",
            Relation::DoublyEliasCw => "Levenshtein doubly-constant-weight inequality",
            Relation::DoublyEliasUnrestricted => "no-homomorphism lemma, bounded first block",
            Relation::TBlockFix => "fixing one block of a doubly-constant-weight code",
            Relation::TRecursions => "no-homomorphism lemma, doubly-constant-weight shifts",
        }
    }

    pub fn parse(s: &str) -> Option<Relation> {
        Relation::ALL.into_iter().find(|r| r.name() == s)
    }

    /// Relations that hold on every oracle-checkable point. The rest are kept as
    /// stated but refuted or unconfirmed by small cases, and only the
    /// paper-faithful engine mode uses them.
    pub fn is_certified(&self) -> bool {
        !matches!(
            self,
            Relation::CwShrink | Relation::CwGrow | Relation::QaryExtend | Relation::TRecursions
        )
    }

    /// The family of the left-hand side.
    pub fn target_family(&self) -> &'static str {
        match self {
            Relation::BassalygoElias | Relation::DoublyEliasUnrestricted => "code",
            Relation::QaryExtend | Relation::QaryShorten | Relation::QaryAlphabet => "code",
            Relation::CwShrink
            | Relation::CwGrow
            | Relation::JohnsonDown
            | Relation::JohnsonUp
            | Relation::DoublyEliasCw => "constant_weight",
            Relation::TBlockFix | Relation::TRecursions => "doubly_constant",
        }
    }

    /// All instances at `target`. Empty when the relation's family matches but no
    /// choice of free parameters is valid.
    pub fn instances(&self, target: ParamKey) -> Result<Vec<Instance>> {
        target.validate()?;
        if target.family_name() != self.target_family() {
            return Err(mismatch(self, target));
        }
        let mut out = Vec::new();
        let mut push = |coefficient: ExactRational, operand: Option<ParamKey>, label: String| {
            if operand.is_none_or(|k| k.validate().is_ok()) {
                out.push(Instance {
                    coefficient,
                    operand,
                    label,
                });
            }
        };
        let r = |a: crate::exactnum::ExactInt, b: crate::exactnum::ExactInt| ratio(a, b).expect("nonzero");
        let c = |n: u32, k: i64| binomial(n as u64, k);
        match (*self, target) {
            (Relation::BassalygoElias, ParamKey::Unrestricted { q, n, d }) => {
                if q == 2 {
                    let de = d + d % 2;
                    for w in 0..=n {
                        push(
                            r(pow(2, n), c(n, w as i64)),
                            Some(ParamKey::ConstantWeight { n, d: de, w }),
                            format!("w = {w}"),
                        );
                    }
                }
            }
            (Relation::CwShrink, ParamKey::ConstantWeight { n, d, w }) if w >= 1 => push(
                r((n - w + 1).into(), w.into()),
                Some(ParamKey::ConstantWeight { n, d: d + 2, w: w - 1 }),
                String::new(),
            ),
            (Relation::CwGrow, ParamKey::ConstantWeight { n, d, w }) => push(
                r((n + 1).into(), (w + 1).into()),
                Some(ParamKey::ConstantWeight { n: n + 1, d: d + 2, w: w + 1 }),
                String::new(),
            ),
            (Relation::JohnsonDown, ParamKey::ConstantWeight { n, d, w }) if w >= 1 => push(
                r(n.into(), w.into()),
                Some(ParamKey::ConstantWeight { n: n - 1, d, w: w - 1 }),
                String::new(),
            ),
            (Relation::JohnsonUp, ParamKey::ConstantWeight { n, d, w }) if w < n => push(
                r(n.into(), (n - w).into()),
                Some(ParamKey::ConstantWeight { n: n - 1, d, w }),
                String::new(),
            ),
            (Relation::QaryExtend, ParamKey::Unrestricted { q, n, d }) => push(
                r(1.into(), q.into()),
                Some(ParamKey::Unrestricted { q, n: n + 1, d: d + 1 }),
                String::new(),
            ),
            (Relation::QaryShorten, ParamKey::Unrestricted { q, n, d }) if d < n => push(
                from_int(q),
                Some(ParamKey::Unrestricted { q, n: n - 1, d }),
                String::new(),
            ),
            (Relation::QaryAlphabet, ParamKey::Unrestricted { q, n, d }) if q >= 3 => push(
                r(pow(q as u64, n), pow(q as u64 - 1, n)),
                Some(ParamKey::Unrestricted { q: q - 1, n, d }),
                String::new(),
            ),
            (Relation::DoublyEliasCw, ParamKey::ConstantWeight { n, d, w }) => {
                for n1 in 1..n {
                    let n2 = n - n1;
                    for w1 in w.saturating_sub(n2)..=w.min(n1) {
                        let w2 = w - w1;
                        push(
                            r(c(n, w as i64), c(n1, w1 as i64) * c(n2, w2 as i64)),
                            Some(ParamKey::DoublyConstant { w1, n1, w2, n2, d }),
                            format!("n1 = {n1}, w1 = {w1}"),
                        );
                    }
                }
            }
            (Relation::DoublyEliasUnrestricted, ParamKey::Unrestricted { q, n, d }) => {
                if q == 2 {
                    for n1 in 1..n {
                        let n2 = n - n1;
                        for w1 in 0..=n1 {
                            for w2 in 0..=n2 {
                                let den: crate::exactnum::ExactInt = (0..=w1 as i64)
                                    .map(|i| c(n1, i) * c(n2, (w1 + w2) as i64 - i))
                                    .sum();
                                push(
                                    r(pow(2, n), den),
                                    Some(ParamKey::DoublyBounded { w1, n1, w2, n2, d }),
                                    format!("n1 = {n1}, w1 = {w1}, w2 = {w2}"),
                                );
                            }
                        }
                    }
                }
            }
            (Relation::TBlockFix, ParamKey::DoublyConstant { w1, n1, w2, n2, d }) => {
                // T <= C(n_b, w_b) · A(n_a, d - 2 w_b, w_a), with A(n, d', w) = C(n, w) for d' <= 2
                // and an odd constant-weight distance rounded up to the next even one.
                for (label, (na, wa), (nb, wb)) in [("first block", (n1, w1), (n2, w2)), ("second block", (n2, w2), (n1, w1))] {
                    if d < 2 * wb {
                        continue;
                    }
                    let reduced = d - 2 * wb;
                    let fixed = c(nb, wb as i64);
                    if reduced <= 2 {
                        push(
                            from_int(fixed * c(na, wa as i64)),
                            None,
                            format!("{label}, d - 2w = {reduced}"),
                        );
                    } else {
                        push(
                            from_int(fixed),
                            Some(ParamKey::ConstantWeight { n: na, d: reduced + reduced % 2, w: wa }),
                            format!("{label}, d - 2w = {reduced}"),
                        );
                    }
                }
            }
            (Relation::TRecursions, ParamKey::DoublyConstant { w1, n1, w2, n2, d }) => {
                if w1 >= 1 {
                    push(
                        r((n1 - w1 + 1).into(), w1.into()),
                        Some(ParamKey::DoublyConstant { w1: w1 - 1, n1, w2, n2, d: d + 2 }),
                        "w1 - 1".into(),
                    );
                }
                push(
                    r((n1 + 1).into(), (w1 + 1).into()),
                    Some(ParamKey::DoublyConstant { w1: w1 + 1, n1: n1 + 1, w2, n2, d: d + 2 }),
                    "w1 + 1, n1 + 1".into(),
                );
                if w2 >= 1 {
                    push(
                        r((n2 - w2 + 1).into(), w2.into()),
                        Some(ParamKey::DoublyConstant { w1, n1, w2: w2 - 1, n2, d: d + 2 }),
                        "w2 - 1".into(),
                    );
                }
                push(
                    r((n2 + 1).into(), (w2 + 1).into()),
                    Some(ParamKey::DoublyConstant { w1, n1, w2: w2 + 1, n2: n2 + 1, d: d + 2 }),
                    "w2 + 1, n2 + 1".into(),
                );
            }
            _ => {}
        }
        Ok(out)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `target <= coefficient · operand`, or `target <= coefficient` without an operand.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub coefficient: ExactRational,
    pub operand: Option<ParamKey>,
    pub label: String,
}

impl Instance {
    pub fn evaluate(&self, operand_value: Option<&ExactRational>) -> ExactRational {
        match operand_value {
            Some(v) => &self.coefficient * v,
            None => self.coefficient.clone(),
        }
    }

    pub fn describe(&self, target: ParamKey) -> String {
        let c = crate::exactnum::render_rational(&self.coefficient);
        let rhs = match self.operand {
            Some(k) => format!("{c} * {k}"),
            None => c,
        };
        if self.label.is_empty() {
            format!("{target} <= {rhs}")
        } else {
            format!("{target} <= {rhs} ({})", self.label)
        }
    }
}

/// Best bound the relation gives at `params` from caller-supplied operand bounds.
///
/// Instances whose operand is absent from `operands` are skipped; if every
/// instance needs a missing operand the call fails with
/// [`Error::MissingOperand`]. The trace lists each used operand as a supplied step.
pub fn relation_bound(
    relation: Relation,
    params: ParamKey,
    operands: &HashMap<ParamKey, ExactRational>,
) -> Result<BoundResult> {
    let instances = relation.instances(params)?;
    if instances.is_empty() {
        return Err(Error::inapplicable(relation, format!("no valid instance at {params}")));
    }
    let mut best: Option<(ExactRational, &Instance)> = None;
    let mut missing = None;
    for inst in &instances {
        let v = match inst.operand {
            Some(k) => match operands.get(&k) {
                Some(v) => inst.evaluate(Some(v)),
                None => {
                    missing.get_or_insert(k);
                    continue;
                }
            },
            None => inst.evaluate(None),
        };
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, inst));
        }
    }
    let Some((rational, inst)) = best else {
        return Err(Error::MissingOperand(missing.expect("instances nonempty").to_string()));
    };
    let mut trace = Vec::new();
    if let Some(k) = inst.operand {
        let v = operands[&k].clone();
        trace.push(TraceStep {
            step: 1,
            method: Method::Given,
            cite: Method::Given.cite(),
            value: floor(&v),
            rational: v,
            params: k,
            operands: vec![],
            note: String::new(),
        });
    }
    let method = Method::Relation(relation);
    let value = floor(&rational);
    trace.push(TraceStep {
        step: trace.len() + 1,
        method,
        cite: relation.cite(),
        value: value.clone(),
        rational: rational.clone(),
        params,
        operands: if trace.is_empty() { vec![] } else { vec![1] },
        note: inst.describe(params),
    });
    Ok(BoundResult {
        params,
        method,
        rational,
        value,
        trace,
    })
}
