//! Family detection and closed forms, checked against chain counting.

use semigroup_mobius::formulas::{ClosedEvaluator, ClosedForm};
use semigroup_mobius::mobius::chain_counts_up_to;
use semigroup_mobius::semigroup::Semigroup;
use semigroup_mobius::Result;

fn main() -> Result<()> {
    let corpus = [
        Semigroup::free(2)?,
        Semigroup::numerical(&[3, 7])?,
        Semigroup::numerical(&[15, 10, 6])?,
        Semigroup::numerical(&[4, 6, 9])?,
        Semigroup::numerical(&[4, 5, 6])?,
        Semigroup::numerical(&[3, 5, 7])?,
    ];
    for s in &corpus {
        let eval = ClosedEvaluator::new(s);
        let bound = if s.dim() == 1 { 90 } else { 6 };
        let mut agree = 0;
        let mut nonzero = Vec::new();
        for profile in chain_counts_up_to(s, bound)? {
            let oracle = profile.alternating_sum();
            if let ClosedForm::Value { value, .. } = eval.eval(&profile.x)? {
                assert_eq!(value, oracle, "closed form disagrees at {}", profile.x);
                agree += 1;
            }
            if nonzero.len() < 8 && oracle != 0.into() {
                nonzero.push(format!("μ({})={}", profile.x, oracle));
            }
        }
        println!("{s}: family {}, {agree} values match the oracle", eval.family().name());
        println!("  {}", nonzero.join(" "));
    }
    Ok(())
}
