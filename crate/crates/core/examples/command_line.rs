//! Drives the command-line front end in-process.

use codebounds::cli::run;

fn main() {
    for line in [
        "bound --family code --q 2 --n 8 --d 4 --method all --format md",
        "exact --family code --q 3 --n 4 --d 3",
        "table --q 2 --d 4 --n-max 8 --certified",
        "audit --relation cw_shrink --n-max 5",
        "bound --q 2 --n 4 --d 9",
    ] {
        let out = run(std::iter::once("codebounds").chain(line.split_whitespace()));
        println!("$ codebounds {line}   (exit {})", out.code);
        print!("{}{}", out.stdout, out.stderr);
        println!();
    }
}
