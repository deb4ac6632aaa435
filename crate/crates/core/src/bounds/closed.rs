//! Closed-form bounds. Each one is `|V| / s` where `s` is the size of an explicit
//! anticode (or intersecting family) in the corresponding vertex-transitive graph.

use std::fmt;

use serde::Serialize;

use crate::anticodes::{constant_weight_r, diametric_r, m_family_size, m_value, n_family_size, n_value};
use crate::error::{Error, Result};
use crate::exactnum::{ball_size, binomial, pow, ratio, ExactInt};
use crate::structures::ParamKey;

use super::{mismatch, BoundResult, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    /// `q^{n-d+1}`.
    Singleton,
    /// `q^n / |B(n, ⌊(d-1)/2⌋)|`.
    Hamming,
    /// `2^{n-1} / Σ_{i≤(d-2)/2} C(n-1, i)` for even `d`.
    ImprovedBinary,
    /// `q^{t+2r} / Σ_{i≤r} C(t+2r, i)(q-1)^i` with `r = ⌊min{(n-t)/2, (t-1)/(q-2)}⌋`.
    DiametricQary,
    /// `q^{n-1} / Σ_{i≤(d-2)/2} C(n-1, i)(q-1)^i` for even `d` and `(q-1)^{n-t-1} <= t`.
    QaryRefined,
    /// `C(n, w) / C(n-t, w-t)` with `t = w - δ + 1`.
    EkrConstantWeight,
    /// `C(n, w) / Σ_{i≥t+r} C(t+2r, i) C(n-t-2r, w-i)` with
    /// `r = max{0, ⌈δ(w-δ)/(n-d) - 1⌉}`.
    AkConstantWeight,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 7] = [
        ClosedForm::Singleton,
        ClosedForm::Hamming,
        ClosedForm::ImprovedBinary,
        ClosedForm::DiametricQary,
        ClosedForm::QaryRefined,
        ClosedForm::EkrConstantWeight,
        ClosedForm::AkConstantWeight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClosedForm::Singleton => "singleton",
            ClosedForm::Hamming => "hamming",
            ClosedForm::ImprovedBinary => "improved_binary",
            ClosedForm::DiametricQary => "diametric_qary",
            ClosedForm::QaryRefined => "qary_refined",
            ClosedForm::EkrConstantWeight => "ekr_constant_weight",
            ClosedForm::AkConstantWeight => "ak_constant_weight",
        }
    }

    pub fn cite(&self) -> &'static str {
        match self {
            ClosedForm::Singleton => "Singleton bound",
            ClosedForm::Hamming => "Hamming bound",
            ClosedForm::ImprovedBinary => "Kleitman anticode, odd n-t",
            ClosedForm::DiametricQary => "diametric theorem",
            ClosedForm::QaryRefined => "diametric theorem, n close to t",
            ClosedForm::EkrConstantWeight => "Erdos-Ko-Rado",
            ClosedForm::AkConstantWeight => "Ahlswede-Khachatrian complete intersection theorem",
        }
    }

    pub fn parse(s: &str) -> Option<ClosedForm> {
        ClosedForm::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Whether the method is defined for this family at all (side conditions aside).
    pub fn family_matches(&self, params: &ParamKey) -> bool {
        match self {
            ClosedForm::Singleton
            | ClosedForm::Hamming
            | ClosedForm::ImprovedBinary
            | ClosedForm::DiametricQary
            | ClosedForm::QaryRefined => matches!(params, ParamKey::Unrestricted { .. }),
            ClosedForm::EkrConstantWeight | ClosedForm::AkConstantWeight => {
                matches!(params, ParamKey::ConstantWeight { .. })
            }
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn side(method: ClosedForm, reason: impl Into<String>) -> Error {
    Error::inapplicable(method, reason)
}

/// Evaluates one closed-form bound.
pub fn closed_form_bound(method: ClosedForm, params: ParamKey) -> Result<BoundResult> {
    params.validate()?;
    if !method.family_matches(&params) {
        return Err(mismatch(method, params));
    }
    let (num, den, note): (ExactInt, ExactInt, String) = match (method, params) {
        (ClosedForm::Singleton, ParamKey::Unrestricted { q, n, d }) => {
            (pow(q as u64, n - d + 1), 1.into(), format!("t = {}", n - d + 1))
        }
        (ClosedForm::Hamming, ParamKey::Unrestricted { q, n, d }) => {
            let e = (d - 1) / 2;
            (pow(q as u64, n), ball_size(q as u64, n as u64, e as i64), format!("e = {e}"))
        }
        (ClosedForm::ImprovedBinary, ParamKey::Unrestricted { q, n, d }) => {
            if q != 2 || d % 2 != 0 {
                return Err(side(method, "needs q = 2 and even d"));
            }
            let m = (d - 2) / 2;
            let den = (0..=m as i64).map(|i| binomial(n as u64 - 1, i)).sum();
            (pow(2, n - 1), den, format!("sum limit (d-2)/2 = {m}"))
        }
        (ClosedForm::DiametricQary, ParamKey::Unrestricted { q, n, d }) => {
            if q < 3 {
                return Err(side(method, "needs q >= 3"));
            }
            let t = n - d + 1;
            let r = diametric_r(q, n, t).expect("q >= 3 and 1 <= t <= n");
            let len = t + 2 * r;
            let den = ball_size(q as u64, len as u64, r as i64);
            let best = n_value(q, n, t)?;
            let attained = n_family_size(q, n, t, r) == best.value;
            let note = format!(
                "t = {t}, r = {r}; r attains the anticode maximum {}: {}{}",
                best.value,
                if attained { "yes" } else { "no" },
                if attained { String::new() } else { format!(" (maximum at r = {})", best.optimal_r) }
            );
            (pow(q as u64, len), den, note)
        }
        (ClosedForm::QaryRefined, ParamKey::Unrestricted { q, n, d }) => {
            if d % 2 != 0 || d < 2 {
                return Err(side(method, "sum limit (d-2)/2 is an integer only for even d"));
            }
            let t = n - d + 1;
            if pow(q as u64 - 1, n - t - 1) > ExactInt::from(t) {
                return Err(side(method, format!("needs (q-1)^(n-t-1) <= t, t = {t}")));
            }
            let m = (d - 2) / 2;
            let den = ball_size(q as u64, n as u64 - 1, m as i64);
            let note = format!("t = {t}; stated condition reads 'd odd', evaluated for even d");
            (pow(q as u64, n - 1), den, note)
        }
        (ClosedForm::EkrConstantWeight, ParamKey::ConstantWeight { n, d, w }) => {
            let t = cw_threshold(method, d, w)?;
            let den = binomial(n as u64 - t as u64, (w - t) as i64);
            (binomial(n as u64, w as i64), den, format!("t = w - d/2 + 1 = {t}"))
        }
        (ClosedForm::AkConstantWeight, ParamKey::ConstantWeight { n, d, w }) => {
            let t = cw_threshold(method, d, w)?;
            let best = m_value(n, w, t)?;
            let stated_r = constant_weight_r(n, d, w);
            let (r, note) = match stated_r {
                Some(r) if m_family_size(n, w, t, r) > ExactInt::from(0) => {
                    let attained = m_family_size(n, w, t, r) == best.value;
                    let note = format!(
                        "t = {t}, r = {r}; r attains the intersecting-family maximum {}: {}{}",
                        best.value,
                        if attained { "yes" } else { "no" },
                        if attained { String::new() } else { format!(" (maximum at r = {})", best.optimal_r) }
                    );
                    (r, note)
                }
                Some(r) => (
                    best.optimal_r,
                    format!("t = {t}; r = {r} gives an empty family, using the maximising r = {}", best.optimal_r),
                ),
                None => (
                    best.optimal_r,
                    format!("t = {t}; r undefined at n = d, using the maximising r = {}", best.optimal_r),
                ),
            };
            (binomial(n as u64, w as i64), m_family_size(n, w, t, r), note)
        }
        _ => unreachable!("family checked above"),
    };
    let rational = ratio(num, den)?;
    Ok(BoundResult::single(params, Method::Closed(method), rational, note))
}

/// `t = w - δ + 1`, required to lie in `[1, w]`.
fn cw_threshold(method: ClosedForm, d: u32, w: u32) -> Result<u32> {
    let delta = d / 2;
    if delta < 1 || delta > w {
        return Err(side(method, format!("needs 1 <= d/2 <= w, got d = {d}, w = {w}")));
    }
    Ok(w - delta + 1)
}

/// Every closed form that evaluates at `params`, in declaration order.
pub fn closed_forms_for(params: ParamKey) -> Vec<BoundResult> {
    ClosedForm::ALL
        .into_iter()
        .filter_map(|m| closed_form_bound(m, params).ok())
        .collect()
}
