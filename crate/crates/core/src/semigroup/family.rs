//! Detection of the semigroup families that admit closed-form Möbius
//! functions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Semigroup;
use crate::error::{Error, Result};

/// `a_i = Π_{j≠i} b_j` with pairwise coprime `b_i >= 2`; the unique Betti
/// element is `Π b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueBetti {
    pub factors: Vec<BigInt>,
    pub betti: BigInt,
}

/// Three-generated complete intersection `<a_1, a_2, a_3>` with
/// `d·a_1 = γ_2 a_2 + γ_3 a_3`, `d = gcd(a_2, a_3) >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeGenCi {
    /// Input positions of the distinguished generator and the other two.
    pub order: [usize; 3],
    /// Generators in the order `(a_1, a_2, a_3)`.
    pub generators: [BigInt; 3],
    pub d: BigInt,
    pub gammas: (BigInt, BigInt),
    /// `(d·a_1, a_2·a_3/d)`
    pub betti_degrees: (BigInt, BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `S = N^m` (the canonical basis is among the generators and every
    /// generator is nonnegative).
    FreeCommutative,
    TwoGenNumerical { a: BigInt, b: BigInt },
    UniqueBetti(UniqueBetti),
    ThreeGenCi(Box<ThreeGenCi>),
    None,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::FreeCommutative => "free",
            Family::TwoGenNumerical { .. } => "deddens",
            Family::UniqueBetti(_) => "unique-betti",
            Family::ThreeGenCi(_) => "three-gen-ci",
            Family::None => "none",
        }
    }
}

/// First matching family in the order free, two-generated numerical,
/// unique Betti element, three-generated complete intersection.
pub fn detect_family(s: &Semigroup) -> Family {
    if is_free(s) {
        return Family::FreeCommutative;
    }
    let Ok(gens) = s.numerical_generators() else {
        return Family::None;
    };
    if gens.len() == 2 {
        return Family::TwoGenNumerical { a: gens[0].clone(), b: gens[1].clone() };
    }
    if let Ok(Some(ub)) = detect_unique_betti_numerical(s) {
        return Family::UniqueBetti(ub);
    }
    if let Ok(Some(ci)) = detect_three_gen_ci(s) {
        return Family::ThreeGenCi(Box::new(ci));
    }
    Family::None
}

fn is_free(s: &Semigroup) -> bool {
    let m = s.dim();
    let has_basis = (0..m).all(|i| {
        s.generators().iter().any(|g| *g == crate::vector::IntVec::unit(m, i))
    });
    has_basis && s.generators().iter().all(|g| g.is_nonnegative())
}

pub fn detect_unique_betti_numerical(s: &Semigroup) -> Result<Option<UniqueBetti>> {
    let gens = s.numerical_generators()?;
    let n = gens.len();
    if n < 2 {
        return Ok(None);
    }
    let factors: Vec<BigInt> = (0..n)
        .map(|i| {
            gens.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(BigInt::zero(), |acc, (_, a)| acc.gcd(a))
        })
        .collect();
    let two = BigInt::from(2);
    if factors.iter().any(|b| *b < two) {
        return Ok(None);
    }
    for i in 0..n {
        for j in i + 1..n {
            if !factors[i].gcd(&factors[j]).is_one() {
                return Ok(None);
            }
        }
    }
    for (i, a) in gens.iter().enumerate() {
        let product: BigInt =
            factors.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, b)| b).product();
        if product != *a {
            return Ok(None);
        }
    }
    let betti = factors.iter().product();
    Ok(Some(UniqueBetti { factors, betti }))
}

/// Lexicographically smallest `(x, y) ∈ N^2` with `x·p + y·q = target`.
pub(crate) fn two_gen_representation(
    target: &BigInt,
    p: &BigInt,
    q: &BigInt,
) -> Option<(BigInt, BigInt)> {
    if target.is_negative() {
        return None;
    }
    let mut x = BigInt::zero();
    let mut rest = target.clone();
    while !rest.is_negative() {
        if rest.is_multiple_of(q) {
            return Some((x, rest / q));
        }
        x += 1;
        rest -= p;
    }
    None
}

/// Herzog's criterion for `<a_1, a_2, a_3>`: tries each generator as the
/// distinguished one, in input order.
pub fn detect_three_gen_ci(s: &Semigroup) -> Result<Option<ThreeGenCi>> {
    let gens = s.numerical_generators()?;
    if gens.len() != 3 {
        return Ok(None);
    }
    let others = |k: usize| -> (usize, usize) {
        match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    };
    for k in 0..3 {
        let (i, j) = others(k);
        if two_gen_representation(&gens[k], &gens[i], &gens[j]).is_some() {
            return Err(Error::NotMinimalGenerators(gens[k].clone()));
        }
    }
    for k in 0..3 {
        let (i, j) = others(k);
        let d = gens[i].gcd(&gens[j]);
        if d < BigInt::from(2) {
            continue;
        }
        let target = &d * &gens[k];
        if let Some(gammas) = two_gen_representation(&target, &gens[i], &gens[j]) {
            let betti_degrees = (target, &gens[i] * &gens[j] / &d);
            return Ok(Some(ThreeGenCi {
                order: [k, i, j],
                generators: [gens[k].clone(), gens[i].clone(), gens[j].clone()],
                d,
                gammas,
                betti_degrees,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn herzog_examples() {
        let ci = detect_three_gen_ci(&Semigroup::numerical(&[4, 6, 9]).unwrap()).unwrap().unwrap();
        assert_eq!(ci.order, [0, 1, 2]);
        assert_eq!(ci.d, 3.into());
        assert_eq!(ci.gammas, (2.into(), 0.into()));
        assert_eq!(ci.betti_degrees, (12.into(), 18.into()));

        let ci = detect_three_gen_ci(&Semigroup::numerical(&[4, 5, 6]).unwrap()).unwrap().unwrap();
        assert_eq!(ci.generators, [5.into(), 4.into(), 6.into()]);
        assert_eq!(ci.d, 2.into());
        assert_eq!(ci.gammas, (1.into(), 1.into()));
        assert_eq!(ci.betti_degrees, (10.into(), 12.into()));

        assert_eq!(detect_three_gen_ci(&Semigroup::numerical(&[3, 5, 7]).unwrap()).unwrap(), None);
    }

    #[test]
    fn herzog_preconditions() {
        assert_eq!(
            detect_three_gen_ci(&Semigroup::numerical(&[2, 3, 5]).unwrap()),
            Err(Error::NotMinimalGenerators(5.into()))
        );
        assert!(matches!(
            detect_three_gen_ci(&Semigroup::numerical(&[4, 6, 8]).unwrap()),
            Err(Error::NotNumerical(_))
        ));
        assert_eq!(detect_three_gen_ci(&Semigroup::numerical(&[3, 5]).unwrap()).unwrap(), None);
    }

    #[test]
    fn unique_betti_examples() {
        let ub = detect_unique_betti_numerical(&Semigroup::numerical(&[15, 10, 6]).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(ub.factors, big(&[2, 3, 5]));
        assert_eq!(ub.betti, 30.into());

        let ub = detect_unique_betti_numerical(&Semigroup::numerical(&[2, 3]).unwrap()).unwrap().unwrap();
        assert_eq!(ub.factors, big(&[3, 2]));
        assert_eq!(ub.betti, 6.into());

        assert_eq!(detect_unique_betti_numerical(&Semigroup::numerical(&[4, 6, 9]).unwrap()).unwrap(), None);
    }

    #[test]
    fn both_families_share_betti_degrees() {
        let s = Semigroup::numerical(&[15, 10, 6]).unwrap();
        let ub = detect_unique_betti_numerical(&s).unwrap().unwrap();
        let ci = detect_three_gen_ci(&s).unwrap().unwrap();
        assert_eq!(ci.betti_degrees, (ub.betti.clone(), ub.betti));
    }

    #[test]
    fn family_dispatch_order() {
        assert_eq!(detect_family(&Semigroup::free(2).unwrap()), Family::FreeCommutative);
        assert_eq!(detect_family(&Semigroup::numerical(&[1, 5]).unwrap()), Family::FreeCommutative);
        assert_eq!(detect_family(&Semigroup::numerical(&[2, 3]).unwrap()).name(), "deddens");
        assert_eq!(detect_family(&Semigroup::numerical(&[15, 10, 6]).unwrap()).name(), "unique-betti");
        assert_eq!(detect_family(&Semigroup::numerical(&[4, 6, 9]).unwrap()).name(), "three-gen-ci");
        assert_eq!(detect_family(&Semigroup::numerical(&[3, 5, 7]).unwrap()), Family::None);
        assert_eq!(detect_family(&Semigroup::numerical(&[4, 6]).unwrap()), Family::None);
    }
}
