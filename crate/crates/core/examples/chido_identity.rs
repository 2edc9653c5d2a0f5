//! Coefficient identities that follow from multiplying H_S by binomials.

use semigroup_mobius::semigroup::{detect_three_gen_ci, Semigroup};
use semigroup_mobius::series::{ci_rational_form_check, verify_chido};
use semigroup_mobius::{IntVec, Result};

fn main() -> Result<()> {
    let s = Semigroup::numerical(&[2, 3])?;
    let r = verify_chido(&s, &[IntVec::scalar(2)], 40)?;
    println!("<2,3>, (1 - t^2): {} points checked, {} violations", r.checked, r.violations.len());

    let s = Semigroup::numerical(&[4, 6, 9])?;
    let ci = detect_three_gen_ci(&s)?.expect("<4,6,9> is a complete intersection");
    let betti = [IntVec::scalar(ci.betti_degrees.0.clone()), IntVec::scalar(ci.betti_degrees.1.clone())];
    let r = verify_chido(&s, &betti, 60)?;
    println!("<4,6,9>, Betti degrees {} and {}: {} points checked, passed = {}", betti[0], betti[1], r.checked, r.passed());
    let r = ci_rational_form_check(&s, &betti, 60)?;
    println!("H·(1-t^4)(1-t^6)(1-t^9) = (1-t^12)(1-t^18): {}", r.passed());

    let s = Semigroup::numerical(&[3, 5, 7])?;
    let r = ci_rational_form_check(&s, &[IntVec::scalar(10), IntVec::scalar(12)], 60)?;
    match r.violations.first() {
        Some((x, diff)) => println!("<3,5,7> is not a complete intersection: first difference at t^{x} ({diff})"),
        None => println!("<3,5,7> unexpectedly passed"),
    }
    Ok(())
}
