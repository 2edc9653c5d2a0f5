//! Formal series in `t_1..t_m` truncated by a strictly positive grading.
//!
//! A [`TruncatedSeries`] stores the coefficients of all monomials `t^b` with
//! `w·b <= bound`; everything above the bound is unknown and discarded. The
//! Hilbert series `H_S = Σ_{b ∈ S} t^b`, the Möbius series `G_S` with
//! `H_S·G_S = 1`, and finite products `Π (1 - t^c)` all live here.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::mobius::mobius_range;
use crate::semigroup::Semigroup;
use crate::vector::IntVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    grading: IntVec,
    bound: u64,
    coeffs: HashMap<IntVec, BigInt>,
}

impl TruncatedSeries {
    /// Builds a series, dropping zero coefficients and terms above the bound.
    pub fn from_terms(
        grading: IntVec,
        bound: u64,
        terms: impl IntoIterator<Item = (IntVec, BigInt)>,
    ) -> Result<Self> {
        let mut s = TruncatedSeries { grading, bound, coeffs: HashMap::new() };
        let limit = BigInt::from(bound);
        for (b, c) in terms {
            if b.dim() != s.dim() {
                return Err(Error::DimensionMismatch { expected: s.dim(), found: b.dim() });
            }
            if s.grading.dot(&b) <= limit {
                s.add_term(b, &c);
            }
        }
        Ok(s)
    }

    pub fn one(grading: IntVec, bound: u64) -> Self {
        let zero = IntVec::zeros(grading.dim());
        TruncatedSeries { grading, bound, coeffs: HashMap::from([(zero, BigInt::one())]) }
    }

    fn add_term(&mut self, b: IntVec, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let sum = self.coeffs.remove(&b).unwrap_or_default() + c;
        if !sum.is_zero() {
            self.coeffs.insert(b, sum);
        }
    }

    pub fn dim(&self) -> usize {
        self.grading.dim()
    }

    pub fn grading(&self) -> &IntVec {
        &self.grading
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn degree(&self, b: &IntVec) -> BigInt {
        self.grading.dot(b)
    }

    pub fn coefficient(&self, b: &IntVec) -> BigInt {
        self.coeffs.get(b).cloned().unwrap_or_default()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coefficient(&IntVec::zeros(self.dim())).is_one()
    }

    /// Nonzero terms ascending by degree, then lexicographically.
    pub fn terms(&self) -> Vec<(IntVec, BigInt)> {
        let mut keyed: Vec<(BigInt, &IntVec, &BigInt)> =
            self.coeffs.iter().map(|(b, c)| (self.degree(b), b, c)).collect();
        keyed.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        keyed.into_iter().map(|(_, b, c)| (b.clone(), c.clone())).collect()
    }

    /// The same series cut down to a smaller bound.
    pub fn truncate(&self, bound: u64) -> TruncatedSeries {
        let limit = BigInt::from(bound);
        TruncatedSeries {
            grading: self.grading.clone(),
            bound: bound.min(self.bound),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(b, _)| self.degree(b) <= limit)
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_compatible(&self, other: &TruncatedSeries) -> Result<()> {
        if self.grading != other.grading {
            return Err(Error::GradingMismatch);
        }
        Ok(())
    }
}

/// `H_S` up to degree `bound`.
pub fn hilbert_series(s: &Semigroup, bound: u64) -> Result<TruncatedSeries> {
    let slab = s.slab(bound)?;
    TruncatedSeries::from_terms(
        slab.grading().w().clone(),
        bound,
        slab.elements().iter().map(|b| (b.clone(), BigInt::one())),
    )
}

/// Convolution up to `min(bound_a, bound_b)`. Both inputs must be complete
/// below their bounds and carry only terms of nonnegative degree.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.check_compatible(b)?;
    let bound = a.bound.min(b.bound);
    let limit = BigInt::from(bound);
    let mut out = TruncatedSeries { grading: a.grading.clone(), bound, coeffs: HashMap::new() };
    let a_terms: Vec<(BigInt, &IntVec, &BigInt)> =
        a.coeffs.iter().map(|(k, c)| (a.degree(k), k, c)).collect();
    let b_terms: Vec<(BigInt, &IntVec, &BigInt)> =
        b.coeffs.iter().map(|(k, c)| (b.degree(k), k, c)).collect();
    for (da, ka, ca) in &a_terms {
        for (db, kb, cb) in &b_terms {
            if da + db > limit {
                continue;
            }
            let key = *ka + *kb;
            *out.coeffs.entry(key).or_insert_with(BigInt::zero) += *ca * *cb;
        }
    }
    out.coeffs.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// The two-term series `1 - t^c`; `c` must have positive degree.
pub fn binomial_factor(c: &IntVec, grading: &IntVec, bound: u64) -> Result<TruncatedSeries> {
    if c.dim() != grading.dim() {
        return Err(Error::DimensionMismatch { expected: grading.dim(), found: c.dim() });
    }
    if !grading.dot(c).is_positive() {
        return Err(Error::NonPositiveDegreeFactor(c.clone()));
    }
    TruncatedSeries::from_terms(
        grading.clone(),
        bound,
        [(IntVec::zeros(c.dim()), BigInt::one()), (c.clone(), -BigInt::one())],
    )
}

/// `Π (1 - t^{c_i})` truncated at `bound`.
pub fn binomial_product(cs: &[IntVec], grading: &IntVec, bound: u64) -> Result<TruncatedSeries> {
    cs.iter().try_fold(TruncatedSeries::one(grading.clone(), bound), |acc, c| {
        series_mul(&acc, &binomial_factor(c, grading, bound)?)
    })
}

/// The unique `G` with `H·G = 1` up to the bound, solved degree by degree:
/// `g_0 = 1` and `g_b = -Σ_{0 ≠ s ∈ supp H} h_s g_{b-s}`.
pub fn invert_series(h: &TruncatedSeries) -> Result<TruncatedSeries> {
    let zero = IntVec::zeros(h.dim());
    let constant = h.coefficient(&zero);
    if !constant.is_one() {
        return Err(Error::NonUnitConstantTerm(constant));
    }
    let mut steps: Vec<(BigInt, &IntVec, &BigInt)> = Vec::new();
    for (s, c) in &h.coeffs {
        if s.is_zero() {
            continue;
        }
        let d = h.degree(s);
        if !d.is_positive() {
            return Err(Error::NonPositiveDegreeTerm(s.clone()));
        }
        steps.push((d, s, c));
    }
    steps.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));

    // the support of G lies in the monoid generated by supp(H) \ {0}
    let limit = BigInt::from(h.bound);
    let mut candidates: HashSet<IntVec> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero.clone()];
    while let Some(y) = frontier.pop() {
        for (_, s, _) in &steps {
            let z = &y + *s;
            if h.degree(&z) <= limit && !candidates.contains(&z) {
                candidates.insert(z.clone());
                frontier.push(z);
            }
        }
    }
    let mut order: Vec<(BigInt, IntVec)> = candidates.into_iter().map(|b| (h.degree(&b), b)).collect();
    order.sort();

    let mut g: HashMap<IntVec, BigInt> = HashMap::new();
    for (deg, b) in order {
        if b.is_zero() {
            g.insert(b, BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for (ds, s, hs) in &steps {
            if *ds > deg {
                break;
            }
            if let Some(prev) = g.get(&(&b - *s)) {
                acc += *hs * prev;
            }
        }
        if !acc.is_zero() {
            g.insert(b, -acc);
        }
    }
    Ok(TruncatedSeries { grading: h.grading.clone(), bound: h.bound, coeffs: g })
}

/// `G_S = 1 / H_S` up to `bound`; its coefficients are the values of `μ_S`.
pub fn mobius_series(s: &Semigroup, bound: u64) -> Result<TruncatedSeries> {
    invert_series(&hilbert_series(s, bound)?)
}

/// Outcome of a coefficient identity check over a finite range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub checked: usize,
    pub violations: Vec<(IntVec, BigInt)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `Σ_b f_b μ(x - b) = 0` off the subset sums of `cs`, where
/// `Σ f_b t^b = Π (1 - t^{c_i}) · H_S`.
///
/// Only `x` of degree at most `bound - Σ w·c_i` are checked. Every `x` whose
/// sum can be nonzero lies in `S + Δ`; those are the points enumerated.
pub fn verify_chido(s: &Semigroup, cs: &[IntVec], bound: u64) -> Result<IdentityReport> {
    let grading = s.grading()?.w().clone();
    let product = binomial_product(cs, &grading, bound)?;
    let f = series_mul(&product, &hilbert_series(s, bound)?)?;
    let mu = mobius_range(s, bound)?;

    let shift: BigInt = cs.iter().map(|c| grading.dot(c)).sum();
    let check_limit = BigInt::from(bound) - shift;

    let mut delta: Vec<IntVec> = vec![IntVec::zeros(s.dim())];
    for c in cs {
        let shifted: Vec<IntVec> = delta.iter().map(|d| d + c).collect();
        delta.extend(shifted);
    }
    let delta_set: HashSet<IntVec> = delta.iter().cloned().collect();

    let f_terms = f.terms();
    let mut targets: Vec<(BigInt, IntVec)> = Vec::new();
    let mut seen = HashSet::new();
    if !check_limit.is_negative() {
        let slab = s.slab(u64::try_from(&check_limit).expect("nonnegative and at most bound"))?;
        for e in slab.elements() {
            for d in &delta_set {
                let x = e + d;
                let dx = grading.dot(&x);
                if dx <= check_limit && !delta_set.contains(&x) && seen.insert(x.clone()) {
                    targets.push((dx, x));
                }
            }
        }
    }
    targets.sort();

    let mut violations = Vec::new();
    for (_, x) in &targets {
        let sum: BigInt = f_terms
            .iter()
            .filter_map(|(b, fb)| mu.get(&(x - b)).map(|m| fb * m))
            .sum();
        if !sum.is_zero() {
            violations.push((x.clone(), sum));
        }
    }
    Ok(IdentityReport { identity: "chido", checked: targets.len(), violations })
}

/// Checks `H_S · Π(1 - t^{a_i}) = Π(1 - t^{b_j})` up to `bound`; the first
/// mismatching coefficient (by degree, then lexicographically) is reported.
pub fn ci_rational_form_check(
    s: &Semigroup,
    betti_degrees: &[IntVec],
    bound: u64,
) -> Result<IdentityReport> {
    let grading = s.grading()?.w().clone();
    let lhs = series_mul(&hilbert_series(s, bound)?, &binomial_product(s.generators(), &grading, bound)?)?;
    let rhs = binomial_product(betti_degrees, &grading, bound)?;
    let mut keys: Vec<(BigInt, IntVec)> = lhs
        .coeffs
        .keys()
        .chain(rhs.coeffs.keys())
        .map(|b| (grading.dot(b), b.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let first = keys.iter().find_map(|(_, b)| {
        let diff = lhs.coefficient(b) - rhs.coefficient(b);
        (!diff.is_zero()).then(|| (b.clone(), diff))
    });
    Ok(IdentityReport { identity: "ciform", checked: keys.len(), violations: first.into_iter().collect() })
}

/// Checks `H_S · G_S = 1` up to `bound`, with `G_S` from series inversion.
pub fn verify_genfunmob(s: &Semigroup, bound: u64) -> Result<IdentityReport> {
    let h = hilbert_series(s, bound)?;
    let g = invert_series(&h)?;
    let mut diff = series_mul(&h, &g)?;
    diff.add_term(IntVec::zeros(s.dim()), &-BigInt::one());
    Ok(IdentityReport { identity: "genfunmob", checked: g.support_len(), violations: diff.terms() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar_series(bound: u64, coeffs: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_terms(
            IntVec::scalar(1),
            bound,
            coeffs.iter().map(|&(b, c)| (IntVec::scalar(b), BigInt::from(c))),
        )
        .unwrap()
    }

    fn scalar_terms(s: &TruncatedSeries) -> Vec<(i64, i64)> {
        s.terms()
            .into_iter()
            .map(|(b, c)| (i64::try_from(&b.entries()[0]).unwrap(), i64::try_from(&c).unwrap()))
            .collect()
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_series(&Semigroup::numerical(&[2, 3]).unwrap(), 6).unwrap();
        assert_eq!(scalar_terms(&h), vec![(0, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1)]);
        let h = hilbert_series(&Semigroup::free(2).unwrap(), 1).unwrap();
        assert_eq!(h.support_len(), 3);
        assert!(hilbert_series(&Semigroup::numerical(&[4, 6, 9]).unwrap(), 0).unwrap().is_one());
    }

    #[test]
    fn multiplication_examples() {
        let p = series_mul(&scalar_series(2, &[(0, 1), (1, 1)]), &scalar_series(2, &[(0, 1), (1, -1)])).unwrap();
        assert_eq!(scalar_terms(&p), vec![(0, 1), (2, -1)]);

        let h = hilbert_series(&Semigroup::numerical(&[2, 3]).unwrap(), 5).unwrap();
        let p = series_mul(&h, &scalar_series(5, &[(0, 1), (2, -1)])).unwrap();
        assert_eq!(scalar_terms(&p), vec![(0, 1), (3, 1)]);

        let one = TruncatedSeries::one(IntVec::scalar(1), 5);
        assert_eq!(series_mul(&h, &one).unwrap(), h);
    }

    #[test]
    fn mismatched_gradings_rejected() {
        let a = TruncatedSeries::one(IntVec::scalar(1), 3);
        let b = TruncatedSeries::one(IntVec::scalar(2), 3);
        assert_eq!(series_mul(&a, &b), Err(Error::GradingMismatch));
    }

    #[test]
    fn binomial_factors() {
        let f = binomial_factor(&IntVec::scalar(2), &IntVec::scalar(1), 10).unwrap();
        assert_eq!(scalar_terms(&f), vec![(0, 1), (2, -1)]);
        let f = binomial_factor(&IntVec::unit(2, 0), &IntVec::from_i64s(&[1, 1]), 10).unwrap();
        assert_eq!(f.coefficient(&IntVec::unit(2, 0)), BigInt::from(-1));
        assert!(matches!(
            binomial_factor(&IntVec::from_i64s(&[1, -1]), &IntVec::from_i64s(&[1, 1]), 10),
            Err(Error::NonPositiveDegreeFactor(_))
        ));
    }

    #[test]
    fn inversion_examples() {
        let g = invert_series(&hilbert_series(&Semigroup::free(2).unwrap(), 2).unwrap()).unwrap();
        let want = TruncatedSeries::from_terms(
            IntVec::from_i64s(&[1, 1]),
            2,
            [(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], 1)]
                .iter()
                .map(|(b, c)| (IntVec::from_i64s(*b), BigInt::from(*c))),
        )
        .unwrap();
        assert_eq!(g, want);

        let g = mobius_series(&Semigroup::numerical(&[2, 3]).unwrap(), 7).unwrap();
        assert_eq!(scalar_terms(&g), vec![(0, 1), (2, -1), (3, -1), (5, 1), (6, 1)]);

        let one = TruncatedSeries::one(IntVec::scalar(1), 9);
        assert_eq!(invert_series(&one).unwrap(), one);

        assert_eq!(
            invert_series(&scalar_series(3, &[(0, 2), (1, 1)])),
            Err(Error::NonUnitConstantTerm(2.into()))
        );
    }

    #[test]
    fn mobius_series_examples() {
        let g = mobius_series(&Semigroup::numerical(&[1]).unwrap(), 3).unwrap();
        assert_eq!(scalar_terms(&g), vec![(0, 1), (1, -1)]);
        let g = mobius_series(&Semigroup::numerical(&[15, 10, 6]).unwrap(), 30).unwrap();
        assert_eq!(g.coefficient(&IntVec::scalar(30)), BigInt::from(2));
    }

    #[test]
    fn chido_examples() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        let r = verify_chido(&s, &[IntVec::scalar(2)], 40).unwrap();
        assert!(r.passed());
        assert!(r.checked > 30);
        let r = verify_chido(&s, &[], 20).unwrap();
        assert!(r.passed());
        let s = Semigroup::numerical(&[4, 6, 9]).unwrap();
        assert!(verify_chido(&s, &[IntVec::scalar(12), IntVec::scalar(18)], 60).unwrap().passed());
    }

    #[test]
    fn ci_form_examples() {
        let d = |xs: &[i64]| xs.iter().map(|&x| IntVec::scalar(x)).collect::<Vec<_>>();
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert!(ci_rational_form_check(&s, &d(&[6]), 40).unwrap().passed());
        let s = Semigroup::numerical(&[4, 6, 9]).unwrap();
        assert!(ci_rational_form_check(&s, &d(&[12, 18]), 60).unwrap().passed());
        let s = Semigroup::numerical(&[3, 5, 7]).unwrap();
        let r = ci_rational_form_check(&s, &d(&[15, 21]), 40).unwrap();
        assert!(!r.passed());
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn genfunmob_holds_for_small_cases() {
        assert!(verify_genfunmob(&Semigroup::numerical(&[3, 5, 7]).unwrap(), 40).unwrap().passed());
        assert!(verify_genfunmob(&Semigroup::free(3).unwrap(), 6).unwrap().passed());
    }
}
