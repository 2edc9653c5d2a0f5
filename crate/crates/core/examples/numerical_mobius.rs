//! Möbius values of <2,3> by every route, side by side.

use semigroup_mobius::formulas::mobius_deddens;
use semigroup_mobius::mobius::{chain_counts_up_to, mobius_range};
use semigroup_mobius::semigroup::Semigroup;
use semigroup_mobius::series::mobius_series;
use semigroup_mobius::{IntVec, Result};

fn main() -> Result<()> {
    let s = Semigroup::numerical(&[2, 3])?;
    let bound = 16;
    let oracle = chain_counts_up_to(&s, bound)?;
    let recursion = mobius_range(&s, bound)?;
    let series = mobius_series(&s, bound)?;

    println!("x   chains (c_0, c_1, ...)             oracle  recursion  series  deddens");
    for profile in &oracle {
        let x = &profile.x;
        let counts: Vec<String> = profile.counts.iter().map(|c| c.to_string()).collect();
        let deddens = mobius_deddens(&2.into(), &3.into(), &x.entries()[0])?;
        println!(
            "{:<3} {:<34} {:>6}  {:>9}  {:>6}  {:>7}",
            x.to_string(),
            counts.join(","),
            profile.alternating_sum(),
            recursion.get(x).cloned().unwrap_or_default(),
            series.coefficient(x),
            deddens
        );
    }

    // gaps of <2,3> are not comparable to 0, so μ vanishes there
    println!("μ(1) = {}", series.coefficient(&IntVec::scalar(1)));
    Ok(())
}
