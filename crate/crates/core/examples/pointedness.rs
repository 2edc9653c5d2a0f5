//! Grading certificates for pointed semigroups and dependency witnesses
//! for the rest.

use semigroup_mobius::semigroup::{Pointedness, Semigroup};
use semigroup_mobius::Result;

fn main() -> Result<()> {
    let cases: [(&str, Semigroup); 4] = [
        ("<(1,1),(1,-1),(0,1)>", Semigroup::from_i64_rows(2, &[&[1, 1], &[1, -1], &[0, 1]])?),
        ("<(1,0,0),(-1,1,0),(0,-1,1)>", Semigroup::from_i64_rows(3, &[&[1, 0, 0], &[-1, 1, 0], &[0, -1, 1]])?),
        ("<(1,2),(2,-1),(-3,-1)>", Semigroup::from_i64_rows(2, &[&[1, 2], &[2, -1], &[-3, -1]])?),
        ("<2,-3>", Semigroup::numerical(&[2, -3])?),
    ];
    for (name, s) in &cases {
        match s.certify_pointed() {
            Pointedness::Pointed(g) => {
                let degrees: Vec<String> = s.generators().iter().map(|a| g.degree(a).to_string()).collect();
                println!("{name}: pointed, w = ({}), generator degrees {}", g.w(), degrees.join(","));
                println!("  elements per degree up to 6: {:?}", s.slab(6)?.graded_counts());
            }
            Pointedness::NotPointed(w) => {
                let c: Vec<String> = w.coefficients.iter().map(|c| c.to_string()).collect();
                println!("{name}: not pointed, {} · generators = 0", c.join(","));
            }
        }
    }
    Ok(())
}
