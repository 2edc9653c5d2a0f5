//! Closed forms for `μ_S` on the families that admit one, and the
//! denumerant counts they are built from.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::semigroup::{degree_bound, detect_family, detect_unique_betti_numerical, Family, Semigroup, ThreeGenCi};
use crate::series::TruncatedSeries;
use crate::vector::IntVec;

/// A tuple `B = (b_1, ..., b_k)` spanning a pointed semigroup; repeated
/// entries count as distinct parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenumerantBasis {
    basis: Vec<IntVec>,
    grading: IntVec,
}

impl DenumerantBasis {
    pub fn new(dim: usize, basis: Vec<IntVec>) -> Result<Self> {
        let grading = Semigroup::new(dim, basis.clone())?.grading()?.w().clone();
        Ok(DenumerantBasis { basis, grading })
    }

    pub fn numerical(basis: &[i64]) -> Result<Self> {
        Self::new(1, basis.iter().map(|&b| IntVec::scalar(b)).collect())
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn grading(&self) -> &IntVec {
        &self.grading
    }

    pub fn dim(&self) -> usize {
        self.grading.dim()
    }

    /// `d_B(b)` for every `b` of degree at most `bound`, as a series.
    pub fn denumerant_table(&self, bound: u64) -> Result<TruncatedSeries> {
        let table = self.knapsack(bound)?;
        TruncatedSeries::from_terms(self.grading.clone(), bound, table)
    }

    /// Number of `x ∈ N^k` with `Σ x_i b_i = b`.
    pub fn denumerant(&self, b: &IntVec) -> Result<BigInt> {
        if b.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: b.dim() });
        }
        let deg = self.grading.dot(b);
        if deg.is_negative() {
            return Ok(BigInt::zero());
        }
        Ok(self.knapsack(degree_bound(&deg)?)?.remove(b).unwrap_or_default())
    }

    fn knapsack(&self, bound: u64) -> Result<HashMap<IntVec, BigInt>> {
        let slab = Semigroup::new(self.dim(), self.basis.clone())?
            .with_grading(self.grading.clone())?
            .slab(bound)?;
        let mut counts: Vec<BigInt> = vec![BigInt::zero(); slab.len()];
        counts[0] = BigInt::one();
        for c in &self.basis {
            for (i, y) in slab.elements().iter().enumerate() {
                if let Some(j) = slab.index_of(&(y - c)) {
                    let prev = counts[j].clone();
                    counts[i] += prev;
                }
            }
        }
        Ok(slab.elements().iter().cloned().zip(counts).filter(|(_, c)| !c.is_zero()).collect())
    }
}

/// `μ` of `N^m` with the canonical basis.
pub fn mobius_free(x: &IntVec) -> BigInt {
    let mut ones = 0usize;
    for c in x.entries() {
        if c.is_one() {
            ones += 1;
        } else if !c.is_zero() {
            return BigInt::zero();
        }
    }
    if ones.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() }
}

/// `μ` of `<a, b>` for coprime `a, b`.
pub fn mobius_deddens(a: &BigInt, b: &BigInt, x: &BigInt) -> Result<BigInt> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidArgument(format!("generators must be positive, got {a} and {b}")));
    }
    if !a.gcd(b).is_one() || a == b {
        return Err(Error::NotCoprime(a.clone(), b.clone()));
    }
    if a.is_one() || b.is_one() {
        return Ok(if x.is_zero() {
            BigInt::one()
        } else if x.is_one() {
            -BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    if x.is_negative() {
        return Ok(BigInt::zero());
    }
    let r = x.mod_floor(&(a * b));
    Ok(if r.is_zero() || r == a + b {
        BigInt::one()
    } else if &r == a || &r == b {
        -BigInt::one()
    } else {
        BigInt::zero()
    })
}

/// `C(n, k)` by the multiplicative formula; zero outside `0 <= k <= n`.
pub fn binomial(n: &BigInt, k: &BigInt) -> BigInt {
    if k.is_negative() || k > n {
        return BigInt::zero();
    }
    let k = if n - k < *k { n - k } else { k.clone() };
    let mut acc = BigInt::one();
    let mut i = BigInt::zero();
    while i < k {
        acc = acc * (n - &i) / (&i + 1);
        i += 1;
    }
    acc
}

/// `μ` of a semigroup with unique Betti element `betti`:
/// `Σ_A (-1)^{|A|} C(k_A + n - d - 1, k_A)` over the generator subsets `A`
/// with `x - Σ_{i∈A} a_i = k_A · betti`, `k_A ∈ N`.
pub fn mobius_unique_betti(s: &Semigroup, betti: &IntVec, x: &IntVec) -> Result<BigInt> {
    if betti.dim() != s.dim() || x.dim() != s.dim() {
        let found = if betti.dim() != s.dim() { betti.dim() } else { x.dim() };
        return Err(Error::DimensionMismatch { expected: s.dim(), found });
    }
    let n = s.len();
    let d = s.rank();
    if n <= d {
        return Err(Error::BadFamilyData(format!("{n} generators of rank {d} have no relations")));
    }
    if betti.is_zero() || !s.contains(betti)? {
        return Err(Error::BadFamilyData(format!("{betti} is not a nonzero element of the semigroup")));
    }
    let numerical = s.dim() == 1;
    if numerical {
        match detect_unique_betti_numerical(s)? {
            Some(ub) if IntVec::scalar(ub.betti.clone()) == *betti => {}
            Some(ub) => {
                return Err(Error::BadFamilyData(format!("the Betti element is {}, not {betti}", ub.betti)));
            }
            None => return Err(Error::BadFamilyData("no unique Betti element".into())),
        }
    }
    if n >= usize::BITS as usize {
        return Err(Error::InvalidArgument(format!("{n} generators is too many subsets")));
    }
    let extra = BigInt::from(n - d) - 1;
    let mut total = BigInt::zero();
    let mut contributing = 0usize;
    for mask in 0usize..1 << n {
        let mut rest = x.clone();
        for (i, a) in s.generators().iter().enumerate() {
            if mask >> i & 1 == 1 {
                rest = &rest - a;
            }
        }
        let k = if rest.is_zero() {
            BigInt::zero()
        } else {
            match rest.multiple_of(betti) {
                Some(k) if k.is_positive() => k,
                _ => continue,
            }
        };
        contributing += 1;
        let term = binomial(&(&k + &extra), &k);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if numerical && contributing > 1 {
        return Err(Error::BadFamilyData(format!("{contributing} subsets contribute at {x}")));
    }
    Ok(total)
}

/// The unique `α ∈ {0, ..., d-1}` with `α·a1 ≡ x (mod d)`.
pub fn alpha(x: &BigInt, a1: &BigInt, d: &BigInt) -> Result<BigInt> {
    if *d < BigInt::from(2) {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {d}")));
    }
    let eg = a1.mod_floor(d).extended_gcd(d);
    if !eg.gcd.is_one() {
        return Err(Error::NotInvertible(a1.clone(), d.clone()));
    }
    Ok((x * eg.x).mod_floor(d))
}

/// `μ` of a three-generated complete intersection: zero when `α(x) >= 2`,
/// otherwise `(-1)^α (d_B(x') - d_B(x'-a_2) - d_B(x'-a_3) + d_B(x'-a_2-a_3))`
/// with `x' = x - α(x) a_1` and `B = (d a_1, a_2 a_3 / d)`.
pub fn mobius_three_gen_ci(data: &ThreeGenCi, x: &BigInt) -> Result<BigInt> {
    let [a1, a2, a3] = &data.generators;
    let d = &data.d;
    let (g2, g3) = &data.gammas;
    if a2.gcd(a3) != *d || g2.is_negative() || g3.is_negative() || d * a1 != g2 * a2 + g3 * a3 {
        return Err(Error::BadFamilyData(format!("inconsistent complete intersection data for <{a1},{a2},{a3}>")));
    }
    let al = alpha(x, a1, d)?;
    if al >= BigInt::from(2) {
        return Ok(BigInt::zero());
    }
    let xp = x - &al * a1;
    if xp.is_negative() {
        return Ok(BigInt::zero());
    }
    let basis = DenumerantBasis::new(1, vec![IntVec::scalar(d * a1), IntVec::scalar(a2 * a3 / d)])?;
    let table = basis.denumerant_table(degree_bound(&xp)?)?;
    let at = |v: BigInt| table.coefficient(&IntVec::scalar(v));
    let sum = at(xp.clone()) - at(&xp - a2) - at(&xp - a3) + at(&xp - a2 - a3);
    Ok(if al.is_zero() { sum } else { -sum })
}

/// Result of the closed-form dispatcher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Value { value: BigInt, family: &'static str },
    Unsupported,
}

/// Detects the family of `S` once and evaluates its closed form.
#[derive(Clone, Debug)]
pub struct ClosedEvaluator {
    family: Family,
}

impl ClosedEvaluator {
    pub fn new(s: &Semigroup) -> Self {
        ClosedEvaluator { family: detect_family(s) }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn is_supported(&self) -> bool {
        self.family != Family::None
    }

    pub fn eval(&self, x: &IntVec) -> Result<ClosedForm> {
        let scalar = || -> Result<&BigInt> {
            match x.entries() {
                [v] => Ok(v),
                _ => Err(Error::DimensionMismatch { expected: 1, found: x.dim() }),
            }
        };
        let value = match &self.family {
            Family::FreeCommutative => mobius_free(x),
            Family::TwoGenNumerical { a, b } => mobius_deddens(a, b, scalar()?)?,
            Family::UniqueBetti(ub) => unique_betti_numerical(&ub.factors, &ub.betti, scalar()?),
            Family::ThreeGenCi(ci) => mobius_three_gen_ci(ci, scalar()?)?,
            Family::None => return Ok(ClosedForm::Unsupported),
        };
        Ok(ClosedForm::Value { value, family: self.family.name() })
    }
}

/// Dispatches to the first family formula that applies to `S`.
pub fn mobius_closed(s: &Semigroup, x: &IntVec) -> Result<ClosedForm> {
    ClosedEvaluator::new(s).eval(x)
}

/// Numerical specialisation with detected data: `a_i = betti / b_i`, rank 1.
fn unique_betti_numerical(factors: &[BigInt], betti: &BigInt, x: &BigInt) -> BigInt {
    let n = factors.len();
    let extra = BigInt::from(n) - 2;
    let mut total = BigInt::zero();
    for mask in 0usize..1 << n {
        let used: BigInt = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| betti / &factors[i]).sum();
        let rest = x - used;
        if rest.is_negative() || !rest.is_multiple_of(betti) {
            continue;
        }
        let k = rest / betti;
        let term = binomial(&(&k + &extra), &k);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
