//! Denumerants by dynamic programming and by inverting Π(1 - t^b).

use semigroup_mobius::formulas::DenumerantBasis;
use semigroup_mobius::series::{binomial_product, invert_series};
use semigroup_mobius::{IntVec, Result};

fn main() -> Result<()> {
    let basis = DenumerantBasis::numerical(&[12, 18])?;
    let table = basis.denumerant_table(120)?;
    let generating = invert_series(&binomial_product(basis.basis(), basis.grading(), 120)?)?;
    println!("B = (12, 18): tables agree up to 120: {}", table == generating);
    for (b, count) in table.terms() {
        print!("d({b})={count} ");
    }
    println!();

    let coins = DenumerantBasis::numerical(&[1, 5, 10, 25, 50])?;
    println!("ways to make 100 from (1,5,10,25,50): {}", coins.denumerant(&IntVec::scalar(100))?);

    let plane = DenumerantBasis::new(2, vec![IntVec::from_i64s(&[1, 0]), IntVec::from_i64s(&[0, 1]), IntVec::from_i64s(&[1, 1])])?;
    println!("representations of (3,3) in ((1,0),(0,1),(1,1)): {}", plane.denumerant(&IntVec::from_i64s(&[3, 3]))?);
    Ok(())
}
