//! Truncated Hilbert series and their inverses, including a semigroup of
//! Z^2 that is pointed but not contained in N^2.

use semigroup_mobius::semigroup::Semigroup;
use semigroup_mobius::series::{hilbert_series, invert_series, series_mul};
use semigroup_mobius::Result;

fn show(name: &str, s: &Semigroup, bound: u64) -> Result<()> {
    let h = hilbert_series(s, bound)?;
    let g = invert_series(&h)?;
    println!("{name}: grading w = ({}), degree <= {bound}", h.grading());
    println!("  |supp H| = {}, |supp G| = {}", h.support_len(), g.support_len());
    for (b, c) in g.terms().into_iter().take(12) {
        println!("  μ({b}) = {c}");
    }
    let product = series_mul(&h, &g)?;
    println!("  H·G = 1 up to degree {bound}: {}", product.is_one());
    Ok(())
}

fn main() -> Result<()> {
    show("N^2", &Semigroup::free(2)?, 4)?;
    show("<(1,1),(1,-1),(0,1)>", &Semigroup::from_i64_rows(2, &[&[1, 1], &[1, -1], &[0, 1]])?, 6)?;
    show("<3,5,7>", &Semigroup::numerical(&[3, 5, 7])?, 30)?;
    Ok(())
}
