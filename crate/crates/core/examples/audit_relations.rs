//! Checks each relation against exact values on a small grid.

use std::time::Duration;

use codebounds::bounds::{audit_inequality, AuditGrid, Relation};
use codebounds::exactnum::render_rational;
use codebounds::oracles::OracleConfig;

fn main() -> codebounds::Result<()> {
    let grid = AuditGrid {
        n_max: 7,
        ..AuditGrid::default()
    };
    let config = OracleConfig {
        timeout: Duration::from_secs(20),
        ..OracleConfig::default()
    };
    for r in Relation::ALL {
        let rep = audit_inequality(r, &grid, &config)?;
        print!("{:<26} {:<8} {:>4} checked", r.name(), format!("{:?}", rep.verdict), rep.instances_checked);
        match rep.counterexamples.first() {
            Some(c) => println!("  e.g. {}: exact {} > {}", c.inequality, c.lhs_exact, render_rational(&c.rhs_value)),
            None => println!(),
        }
    }
    Ok(())
}
