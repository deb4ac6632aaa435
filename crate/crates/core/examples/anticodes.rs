//! Largest anticodes and intersecting families in closed form, against search.

use codebounds::anticodes::{m_value, n_value, witness_family, WitnessFamily};
use codebounds::oracles::{exhaustive_extremal_family, ExtremalKind, OracleConfig};

fn main() -> codebounds::Result<()> {
    let config = OracleConfig::default();
    println!("words pairwise agreeing in >= t places:");
    for (q, n, t) in [(2, 6, 2), (2, 7, 3), (3, 4, 2), (3, 5, 3), (4, 4, 2)] {
        let v = n_value(q, n, t)?;
        let found = exhaustive_extremal_family(ExtremalKind::N { q, n, t }, &config)?.value;
        println!("  N_{q}({n},{t}) = {:<4} search {found:<4} {}", v.value, v.witness_description);
    }
    println!("w-sets pairwise meeting in >= t elements:");
    for (n, w, t) in [(8, 3, 1), (6, 3, 2), (8, 4, 2), (9, 4, 2)] {
        let v = m_value(n, w, t)?;
        let found = exhaustive_extremal_family(ExtremalKind::M { n, w, t }, &config)?.value;
        println!("  M({n},{w},{t}) = {:<4} search {found:<4} {}", v.value, v.witness_description);
    }
    let ball = witness_family(WitnessFamily::BallB { q: 2, n: 5, r: 1 })?;
    let shown: Vec<String> = ball.iter().map(ToString::to_string).collect();
    println!("radius-1 ball in length 5: {}", shown.join(" "));
    Ok(())
}
