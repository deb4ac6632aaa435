//! The fixpoint engine: best bounds over a grid, their derivations, and replay.

use codebounds::bounds::{best_bound, replay, Grid, GridBounds, Mode};
use codebounds::structures::ParamKey;

fn main() -> codebounds::Result<()> {
    let key = ParamKey::constant_weight(8, 4, 3)?;
    let b = best_bound(key, &Grid::new(8, 2), Mode::Certified)?;
    println!("{key} <= {} by {}", b.value, b.method);
    for s in &b.trace {
        println!("  {}. {:<22} {:<14} {:>4}  {}", s.step, s.params.to_string(), s.method.to_string(), s.value, s.note);
    }
    replay(&b)?;
    println!("trace replays");

    let grid = Grid::new(9, 2);
    let certified = GridBounds::solve(&grid, Mode::Certified)?;
    let faithful = GridBounds::solve(&grid, Mode::PaperFaithful)?;
    println!("A_2(n,3) for n = 3..=9, certified vs all relations as stated:");
    for n in 3..=9 {
        let k = ParamKey::code(2, n, 3)?;
        println!("  n = {n}: {:>4} {:>4}", certified.value(&k).unwrap(), faithful.value(&k).unwrap());
    }
    println!("{}", serde_json::to_string(&certified.bound(ParamKey::code(2, 9, 4)?)?).expect("serializes"));
    Ok(())
}
