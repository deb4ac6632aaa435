use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of one code-size quantity.
///
/// * `Unrestricted` is `A_q(n, d)`.
/// * `ConstantWeight` is the binary `A(n, d, w)`; `d` is always even.
/// * `DoublyConstant` is `T(w1, n1, w2, n2, d)`: length `n1 + n2`, weight `w1 + w2`,
///   exactly `w1` ones in the first block.
/// * `DoublyBounded` is `T'`: as above but at most `w1` ones in the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ParamKey {
    #[serde(rename = "code")]
    Unrestricted { q: u32, n: u32, d: u32 },
    ConstantWeight { n: u32, d: u32, w: u32 },
    DoublyConstant { w1: u32, n1: u32, w2: u32, n2: u32, d: u32 },
    DoublyBounded { w1: u32, n1: u32, w2: u32, n2: u32, d: u32 },
}

impl ParamKey {
    pub fn code(q: u32, n: u32, d: u32) -> Result<Self> {
        let k = ParamKey::Unrestricted { q, n, d };
        k.validate()?;
        Ok(k)
    }

    pub fn constant_weight(n: u32, d: u32, w: u32) -> Result<Self> {
        let k = ParamKey::ConstantWeight { n, d, w };
        k.validate()?;
        Ok(k)
    }

    pub fn doubly(w1: u32, n1: u32, w2: u32, n2: u32, d: u32, bounded: bool) -> Result<Self> {
        let k = if bounded {
            ParamKey::DoublyBounded { w1, n1, w2, n2, d }
        } else {
            ParamKey::DoublyConstant { w1, n1, w2, n2, d }
        };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ParamKey::Unrestricted { q, n, d } => {
                if q < 2 {
                    return Err(Error::domain(format!("q = {q} must be at least 2")));
                }
                if d < 1 || d > n {
                    return Err(Error::domain(format!("need 1 <= d <= n, got n={n} d={d}")));
                }
            }
            ParamKey::ConstantWeight { n, d, w } => {
                if d % 2 != 0 {
                    return Err(Error::domain(format!(
                        "constant-weight distance must be even, got d={d}"
                    )));
                }
                if w > n {
                    return Err(Error::domain(format!("need w <= n, got n={n} w={w}")));
                }
            }
            ParamKey::DoublyConstant { w1, n1, w2, n2, .. }
            | ParamKey::DoublyBounded { w1, n1, w2, n2, .. } => {
                if w1 > n1 || w2 > n2 {
                    return Err(Error::domain(format!(
                        "need w1 <= n1 and w2 <= n2, got ({w1},{n1},{w2},{n2})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            ParamKey::Unrestricted { .. } => "code",
            ParamKey::ConstantWeight { .. } => "constant_weight",
            ParamKey::DoublyConstant { .. } => "doubly_constant",
            ParamKey::DoublyBounded { .. } => "doubly_bounded",
        }
    }

    pub fn distance(&self) -> u32 {
        match *self {
            ParamKey::Unrestricted { d, .. }
            | ParamKey::ConstantWeight { d, .. }
            | ParamKey::DoublyConstant { d, .. }
            | ParamKey::DoublyBounded { d, .. } => d,
        }
    }

    /// `t = n - d + 1`, the agreement threshold of anticodes in `H_q(n, d)`.
    pub fn t_unrestricted(&self) -> Option<i64> {
        match *self {
            ParamKey::Unrestricted { n, d, .. } => Some(n as i64 - d as i64 + 1),
            _ => None,
        }
    }

    /// `t = w - δ + 1` with `d = 2δ`, the intersection threshold in `K(n, 2δ, w)`.
    pub fn t_cw(&self) -> Option<i64> {
        match *self {
            ParamKey::ConstantWeight { d, w, .. } => Some(w as i64 - (d / 2) as i64 + 1),
            _ => None,
        }
    }

    /// The parameter fields as a JSON object, without the family tag.
    pub fn fields_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("ParamKey serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("family");
        }
        v
    }
}

impl fmt::Display for ParamKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamKey::Unrestricted { q, n, d } => write!(f, "A_{q}({n},{d})"),
            ParamKey::ConstantWeight { n, d, w } => write!(f, "A({n},{d},{w})"),
            ParamKey::DoublyConstant { w1, n1, w2, n2, d } => {
                write!(f, "T({w1},{n1},{w2},{n2},{d})")
            }
            ParamKey::DoublyBounded { w1, n1, w2, n2, d } => {
                write!(f, "T'({w1},{n1},{w2},{n2},{d})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ParamKey::code(2, 8, 4).is_ok());
        assert!(ParamKey::code(1, 8, 4).is_err());
        assert!(ParamKey::code(2, 3, 4).is_err());
        assert!(ParamKey::code(2, 3, 0).is_err());
        assert!(ParamKey::constant_weight(8, 3, 3).is_err());
        assert!(ParamKey::constant_weight(3, 2, 4).is_err());
        assert!(ParamKey::constant_weight(8, 0, 3).is_ok());
        assert!(ParamKey::doubly(3, 2, 1, 2, 2, false).is_err());
    }

    #[test]
    fn separate_thresholds() {
        let k = ParamKey::code(2, 8, 4).unwrap();
        assert_eq!(k.t_unrestricted(), Some(5));
        assert_eq!(k.t_cw(), None);
        let c = ParamKey::constant_weight(7, 4, 4).unwrap();
        assert_eq!(c.t_cw(), Some(3));
    }

    #[test]
    fn json_shape() {
        let k = ParamKey::code(2, 8, 4).unwrap();
        let v = serde_json::to_value(k).unwrap();
        assert_eq!(v["family"], "code");
        assert_eq!(k.fields_json(), serde_json::json!({"q": 2, "n": 8, "d": 4}));
        let back: ParamKey = serde_json::from_value(v).unwrap();
        assert_eq!(back, k);
    }
}
