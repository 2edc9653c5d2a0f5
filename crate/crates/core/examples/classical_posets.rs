//! Divisor lattices and multisets as semigroup posets of N^m.

use std::collections::HashMap;

use num_bigint::BigInt;
use semigroup_mobius::recognition::{
    classical_mobius, divisibility_adapter, fragment_consistency_check, multiset_mobius, PosetFragment,
};
use semigroup_mobius::semigroup::Semigroup;
use semigroup_mobius::Result;

fn main() -> Result<()> {
    let values: Vec<BigInt> = [2, 4, 6, 12].iter().map(|&v| BigInt::from(v)).collect();
    let psi = divisibility_adapter(&values)?;
    println!("primes {:?}", psi.primes.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    for (v, e) in &psi.vectors {
        println!("  ψ({v}) = ({e})");
    }

    let row: Vec<String> = (1..=30).map(|b| classical_mobius(&1.into(), &b.into()).map(|m| m.to_string())).collect::<Result<_>>()?;
    println!("μ(1, n) for n = 1..30: {}", row.join(" "));

    let fragment = PosetFragment {
        elements: vec!["2".into(), "4".into(), "6".into(), "12".into()],
        covers: vec![("2".into(), "4".into()), ("2".into(), "6".into()), ("4".into(), "12".into()), ("6".into(), "12".into())],
        root: "2".into(),
    };
    let base = psi.get(&values[0]).expect("2 was mapped").clone();
    let assignments: HashMap<String, _> = psi.vectors.iter().map(|(v, e)| (v.to_string(), e - &base)).collect();
    let report = fragment_consistency_check(&fragment, &assignments, &Semigroup::free(2)?)?;
    println!("divisors of 12 above 2 embed into N^2: {} ({} pairs)", report.passed(), report.pairs_checked);

    let ground: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
    let s: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
    let doubled: Vec<String> = vec!["a".into(), "a".into()];
    println!("μ(∅, {{a,b,c}}) = {}", multiset_mobius(&ground, &[], &s)?);
    println!("μ(∅, {{a,a}}) = {}", multiset_mobius(&ground, &[], &doubled)?);
    Ok(())
}
