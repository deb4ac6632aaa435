//! Every closed-form bound that applies at a few parameter points.

use codebounds::bounds::closed_forms_for;
use codebounds::exactnum::render_rational;
use codebounds::structures::ParamKey;

fn main() -> codebounds::Result<()> {
    for key in [
        ParamKey::code(2, 8, 4)?,
        ParamKey::code(2, 7, 3)?,
        ParamKey::code(3, 4, 3)?,
        ParamKey::code(4, 6, 4)?,
        ParamKey::constant_weight(7, 4, 4)?,
        ParamKey::constant_weight(10, 6, 4)?,
    ] {
        println!("{key}");
        for b in closed_forms_for(key) {
            println!("  {:<20} {:>6}  = floor({})  {}", b.method.to_string(), b.value, render_rational(&b.rational), b.note());
        }
    }
    Ok(())
}
