//! Smith normal form, saturation, and rebuilding a semigroup from its
//! lattice of relations.

use semigroup_mobius::lattice::{saturation, smith_normal_form, LatticeBasis};
use semigroup_mobius::recognition::{recognize, round_trip_check};
use semigroup_mobius::semigroup::Semigroup;
use semigroup_mobius::{IntVec, Result};

fn main() -> Result<()> {
    let s = Semigroup::numerical(&[15, 10, 6])?;
    let relations = s.lattice_of_relations();
    println!("relations of {s}: {}", relations.generators());
    let (u, d, v) = smith_normal_form(relations.generators());
    println!("U·L·V = D with");
    println!("U = {u}");
    println!("D = {d}");
    println!("V = {v}");

    let r = recognize(&relations);
    println!("saturated {}, rebuilt semigroup {:?}", r.saturated, r.semigroup.as_ref().map(|s| s.to_string()));
    let report = round_trip_check(&s, 30)?;
    println!("round trip up to degree 30: {} ({} elements)", report.passed(), report.elements.0);

    let torsion = LatticeBasis::new(2, vec![IntVec::from_i64s(&[2, -2])])?;
    let r = recognize(&torsion);
    println!("<(2,-2)>: saturated {}, elementary divisors {:?}", r.saturated, r.elementary_divisors);
    println!("Sat(<(2,-2)>) = {}", saturation(&torsion).generators());
    Ok(())
}
