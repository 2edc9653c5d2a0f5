//! Pointedness certificates by Fourier–Motzkin elimination.
//!
//! `S = <a_1,...,a_n>` is pointed iff some `w` has `w·a_i >= 1` for every
//! generator. The system is solved exactly over the rationals; every derived
//! inequality remembers the nonnegative combination of generator rows that
//! produced it, so an infeasible system yields `Σ c_i a_i = 0` with `c >= 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::vector::IntVec;

#[derive(Clone, Debug)]
struct Inequality {
    /// `coeffs · w >= rhs`
    coeffs: Vec<BigRational>,
    rhs: BigRational,
    /// multipliers of the original rows `a_i · w >= 1`
    combination: Vec<BigRational>,
}

pub(super) enum ConeOutcome {
    Grading(IntVec),
    Dependency(Vec<BigInt>),
}

pub(super) fn solve(dim: usize, generators: &[IntVec]) -> ConeOutcome {
    let n = generators.len();
    let mut system: Vec<Inequality> = generators
        .iter()
        .enumerate()
        .map(|(i, a)| Inequality {
            coeffs: a.entries().iter().map(|c| BigRational::from_integer(c.clone())).collect(),
            rhs: BigRational::one(),
            combination: (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect(),
        })
        .collect();

    // levels[k] holds the system in variables w_0..=w_k, before w_k is eliminated
    let mut levels: Vec<Vec<Inequality>> = vec![Vec::new(); dim];
    for k in (0..dim).rev() {
        levels[k] = system.clone();
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in system {
            if ineq.coeffs[k].is_positive() {
                lower.push(ineq);
            } else if ineq.coeffs[k].is_negative() {
                upper.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for lo in &lower {
            for up in &upper {
                // (-up_k) * lo + lo_k * up cancels w_k
                let (p, q) = (-&up.coeffs[k], lo.coeffs[k].clone());
                rest.push(Inequality {
                    coeffs: combine(&lo.coeffs, &p, &up.coeffs, &q),
                    rhs: &lo.rhs * &p + &up.rhs * &q,
                    combination: combine(&lo.combination, &p, &up.combination, &q),
                });
            }
        }
        system = rest;
    }

    // all variables gone: each row reads 0 >= rhs
    if let Some(bad) = system.iter().find(|ineq| ineq.rhs.is_positive()) {
        return ConeOutcome::Dependency(integer_direction(&bad.combination));
    }

    let mut w: Vec<BigRational> = Vec::with_capacity(dim);
    for (k, level) in levels.iter().enumerate() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for ineq in level {
            let c = &ineq.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let partial: BigRational = ineq.coeffs[..k].iter().zip(&w).map(|(a, b)| a * b).sum();
            let bound = (&ineq.rhs - partial) / c;
            if c.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        w.push(pick_value(lo, hi));
    }
    let denominators = w.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    ConeOutcome::Grading(IntVec::new(
        w.iter().map(|r| (r * BigRational::from_integer(denominators.clone())).to_integer()).collect(),
    ))
}

fn combine(a: &[BigRational], p: &BigRational, b: &[BigRational], q: &BigRational) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x * p + y * q).collect()
}

/// The integer closest to zero in `[lo, hi]` if there is one, else an endpoint.
fn pick_value(lo: Option<BigRational>, hi: Option<BigRational>) -> BigRational {
    let zero = BigRational::zero();
    match (lo, hi) {
        (None, None) => zero,
        (Some(l), None) => {
            if l <= zero { zero } else { l.ceil() }
        }
        (None, Some(h)) => {
            if h >= zero { zero } else { h.floor() }
        }
        (Some(l), Some(h)) => {
            let candidate = if l > zero {
                l.ceil()
            } else if h < zero {
                h.floor()
            } else {
                zero
            };
            if candidate >= l && candidate <= h { candidate } else { l }
        }
    }
}

fn integer_direction(rational: &[BigRational]) -> Vec<BigInt> {
    let den = rational.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> =
        rational.iter().map(|r| (r * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}
