use serde::Serializer;

use crate::exactnum::{render_rational, ExactInt, ExactRational};

pub(crate) fn int<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn rational<S: Serializer>(v: &ExactRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&render_rational(v))
}
