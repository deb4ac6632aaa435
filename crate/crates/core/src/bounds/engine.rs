//! Fixpoint combination of closed forms and relations over a box of parameters.
//!
//! Every point starts at its best closed form (or the vertex-count cap). Sweeps in
//! ascending `n`, then `d`, then `w` apply every relation instance whose operand
//! lies in the box, until a full sweep lowers nothing. Values are nonincreasing
//! nonnegative integers, so this terminates.
//!
//! Each improvement is logged with a pointer to the log entry of its operand at
//! that moment, so a derivation is a chain of strictly earlier entries and always
//! replays, even when relations form cycles.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{floor, from_int, ExactInt, ExactRational};
use crate::structures::ParamKey;

use super::closed::closed_form_bound;
use super::relations::Relation;
use super::{closed_forms_for, trivial_bound, trivial_cap, BoundResult, Method, TraceStep};

pub const DEFAULT_GRID_CAP: usize = 50_000;

/// The parameter box: every code, constant-weight and doubly-constant-weight point
/// with total length at most `n_max`, alphabet sizes `2..=q_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub n_max: u32,
    pub q_max: u32,
    pub cap: usize,
}

impl Grid {
    pub fn new(n_max: u32, q_max: u32) -> Self {
        Grid {
            n_max,
            q_max,
            cap: DEFAULT_GRID_CAP,
        }
    }

    /// The smallest box holding `params`.
    pub fn around(params: ParamKey) -> Self {
        match params {
            ParamKey::Unrestricted { q, n, .. } => Grid::new(n, q),
            ParamKey::ConstantWeight { n, .. } => Grid::new(n, 2),
            ParamKey::DoublyConstant { n1, n2, .. } | ParamKey::DoublyBounded { n1, n2, .. } => Grid::new(n1 + n2, 2),
        }
    }

    pub fn contains(&self, k: &ParamKey) -> bool {
        match *k {
            ParamKey::Unrestricted { q, n, d } => q <= self.q_max && n <= self.n_max && n >= 1 && d >= 1 && d <= n,
            ParamKey::ConstantWeight { n, d, w } => {
                n >= 1 && n <= self.n_max && w <= n && d >= 2 && d <= 2 * n && d % 2 == 0
            }
            ParamKey::DoublyConstant { w1, n1, w2, n2, d } | ParamKey::DoublyBounded { w1, n1, w2, n2, d } => {
                n1 >= 1 && n2 >= 1 && n1 + n2 <= self.n_max && w1 <= n1 && w2 <= n2 && d >= 1 && d <= n1 + n2
            }
        }
    }

    /// All points, in sweep order.
    pub fn points(&self) -> Result<Vec<ParamKey>> {
        let mut pts = Vec::new();
        for n in 1..=self.n_max {
            for q in 2..=self.q_max {
                for d in 1..=n {
                    pts.push(ParamKey::Unrestricted { q, n, d });
                }
            }
            for w in 0..=n {
                for d in (2..=2 * n).step_by(2) {
                    pts.push(ParamKey::ConstantWeight { n, d, w });
                }
            }
            for n1 in 1..n {
                let n2 = n - n1;
                for w1 in 0..=n1 {
                    for w2 in 0..=n2 {
                        for d in 1..=n {
                            pts.push(ParamKey::DoublyConstant { w1, n1, w2, n2, d });
                            pts.push(ParamKey::DoublyBounded { w1, n1, w2, n2, d });
                        }
                    }
                }
            }
            if pts.len() > self.cap {
                return Err(Error::GridTooLarge {
                    points: pts.len(),
                    cap: self.cap,
                });
            }
        }
        pts.sort_by_key(sweep_key);
        Ok(pts)
    }
}

fn sweep_key(k: &ParamKey) -> (u32, u32, u32, u8, u32, u32) {
    match *k {
        ParamKey::Unrestricted { q, n, d } => (n, d, 0, 0, q, 0),
        ParamKey::ConstantWeight { n, d, w } => (n, d, w, 1, 0, 0),
        ParamKey::DoublyConstant { w1, n1, w2, n2, d } => (n1 + n2, d, w1 + w2, 2, n1, w1 * 64 + w2),
        ParamKey::DoublyBounded { w1, n1, w2, n2, d } => (n1 + n2, d, w1 + w2, 3, n1, w1 * 64 + w2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Only relations that survive the audit.
    Certified,
    /// Every relation as stated, including refuted ones.
    PaperFaithful,
}

impl Mode {
    fn allows(&self, r: Relation) -> bool {
        match self {
            Mode::Certified => r.is_certified(),
            Mode::PaperFaithful => true,
        }
    }
}

struct Entry {
    point: usize,
    method: Method,
    rational: ExactRational,
    value: ExactInt,
    operand: Option<usize>,
    note: String,
}

struct Link {
    relation: Relation,
    coefficient: ExactRational,
    operand: Option<usize>,
    note: String,
}

/// Best bound at `params` inside `grid`.
pub fn best_bound(params: ParamKey, grid: &Grid, mode: Mode) -> Result<BoundResult> {
    params.validate()?;
    if !grid.contains(&params) {
        return Err(Error::domain(format!("{params} lies outside the grid")));
    }
    GridBounds::solve(grid, mode)?.bound(params)
}

/// Final bounds at every point of a grid, with the derivation log behind them.
pub struct GridBounds {
    points: Vec<ParamKey>,
    index: HashMap<ParamKey, usize>,
    log: Vec<Entry>,
    current: Vec<usize>,
}

impl GridBounds {
    pub fn solve(grid: &Grid, mode: Mode) -> Result<Self> {
    let points = grid.points()?;
    let index: HashMap<ParamKey, usize> = points.iter().enumerate().map(|(i, k)| (*k, i)).collect();

    let mut log: Vec<Entry> = Vec::new();
    let mut current: Vec<usize> = Vec::with_capacity(points.len());
    for (i, &k) in points.iter().enumerate() {
        let mut best = trivial_bound(k)?;
        for c in closed_forms_for(k) {
            if c.value < best.value {
                best = c;
            }
        }
        current.push(log.len());
        log.push(Entry {
            point: i,
            method: best.method,
            rational: best.rational,
            value: best.value,
            operand: None,
            note: best.trace.pop().map(|s| s.note).unwrap_or_default(),
        });
    }

    let mut links: Vec<Vec<Link>> = Vec::with_capacity(points.len());
    for &k in &points {
        let mut mine = Vec::new();
        for r in Relation::ALL.into_iter().filter(|r| mode.allows(*r)) {
            let Ok(instances) = r.instances(k) else { continue };
            for inst in instances {
                let operand = match inst.operand {
                    Some(o) => match index.get(&o) {
                        Some(&j) => Some(j),
                        None => continue,
                    },
                    None => None,
                };
                mine.push(Link {
                    relation: r,
                    note: inst.describe(k),
                    coefficient: inst.coefficient,
                    operand,
                });
            }
        }
        links.push(mine);
    }

    loop {
        let mut changed = false;
        for i in 0..points.len() {
            for link in &links[i] {
                let (rational, operand) = match link.operand {
                    Some(j) => {
                        let e = current[j];
                        (&link.coefficient * from_int(log[e].value.clone()), Some(e))
                    }
                    None => (link.coefficient.clone(), None),
                };
                let value = floor(&rational);
                if value < log[current[i]].value {
                    current[i] = log.len();
                    log.push(Entry {
                        point: i,
                        method: Method::Relation(link.relation),
                        rational,
                        value,
                        operand,
                        note: link.note.clone(),
                    });
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(GridBounds {
        points,
        index,
        log,
        current,
    })
    }

    pub fn points(&self) -> &[ParamKey] {
        &self.points
    }

    /// The floored bound at `params` without building a trace.
    pub fn value(&self, params: &ParamKey) -> Option<&ExactInt> {
        self.index.get(params).map(|&i| &self.log[self.current[i]].value)
    }

    pub fn bound(&self, params: ParamKey) -> Result<BoundResult> {
    let Some(&i) = self.index.get(&params) else {
        return Err(Error::domain(format!("{params} lies outside the grid")));
    };
    let (points, log) = (&self.points, &self.log);
    let root = self.current[i];
    let mut needed = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(e) = stack.pop() {
        if needed.insert(e) {
            stack.extend(log[e].operand);
        }
    }
    let renumber: HashMap<usize, usize> = needed.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
    let trace: Vec<TraceStep> = needed
        .iter()
        .map(|&e| {
            let entry = &log[e];
            TraceStep {
                step: renumber[&e],
                method: entry.method,
                cite: entry.method.cite(),
                value: entry.value.clone(),
                rational: entry.rational.clone(),
                params: points[entry.point],
                operands: entry.operand.map(|o| renumber[&o]).into_iter().collect(),
                note: entry.note.clone(),
            }
        })
        .collect();
    let last = &log[root];
    Ok(BoundResult {
        params,
        method: last.method,
        rational: last.rational.clone(),
        value: last.value.clone(),
        trace,
    })
    }
}

/// Recomputes every trace step from its method and operands and checks that the
/// recorded values come out again.
pub fn replay(result: &BoundResult) -> Result<()> {
    let bad = |i: usize, why: &str| Error::domain(format!("trace step {i} does not replay: {why}"));
    let mut values: Vec<ExactInt> = Vec::new();
    for (i, s) in result.trace.iter().enumerate() {
        if s.step != i + 1 || s.operands.iter().any(|&o| o == 0 || o > i) {
            return Err(bad(i + 1, "operands must refer to earlier steps"));
        }
        let rational = match s.method {
            Method::Given => s.rational.clone(),
            Method::Trivial => from_int(trivial_cap(s.params)?),
            Method::Closed(c) => closed_form_bound(c, s.params)?.rational,
            Method::Relation(r) => {
                let inst = r
                    .instances(s.params)?
                    .into_iter()
                    .find(|inst| inst.describe(s.params) == s.note)
                    .ok_or_else(|| bad(i + 1, "no matching relation instance"))?;
                match (inst.operand, s.operands.as_slice()) {
                    (None, []) => inst.evaluate(None),
                    (Some(k), [o]) if result.trace[o - 1].params == k => {
                        inst.evaluate(Some(&from_int(values[o - 1].clone())))
                    }
                    _ => return Err(bad(i + 1, "operand does not match the relation")),
                }
            }
        };
        if rational != s.rational || floor(&rational) != s.value {
            return Err(bad(i + 1, "value differs"));
        }
        values.push(s.value.clone());
    }
    match result.trace.last() {
        Some(s) if s.value == result.value && s.params == result.params && floor(&result.rational) == result.value => Ok(()),
        _ => Err(Error::domain("trace does not end at the reported bound")),
    }
}
