//! First-principles routes to `μ_S`: alternating chain counts over the
//! interval `[0, x]`, and the convolution recursion
//! `Σ_{y ∈ [0,x]} μ(y) = 0` for `x ≠ 0`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::semigroup::{degree_bound, Semigroup};
use crate::vector::IntVec;

/// Which route produced a Möbius value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Recursion,
    Series,
    Closed(&'static str),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Oracle => f.write_str("oracle"),
            Method::Recursion => f.write_str("recursion"),
            Method::Series => f.write_str("series"),
            Method::Closed(family) => write!(f, "closed:{family}"),
        }
    }
}

/// `counts[l]` is the number of chains of length `l` from 0 to `x`.
/// Trailing zeros are trimmed, so the profile of an `x ∉ S` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainProfile {
    pub x: IntVec,
    pub counts: Vec<BigInt>,
}

impl ChainProfile {
    pub fn alternating_sum(&self) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .map(|(l, c)| if l % 2 == 0 { c.clone() } else { -c })
            .sum()
    }
}

/// Chain counts from `elements[0]` to every element of a finite poset.
///
/// `elements` must be listed in a linear extension of the order and
/// `less(a, b)` must be the strict order. Entry `k` of the result holds
/// `c_l(elements[0], elements[k])` for `l = 0, 1, ...`.
pub fn chain_profiles<T>(elements: &[T], less: impl Fn(&T, &T) -> bool) -> Vec<Vec<BigInt>> {
    let mut profiles: Vec<Vec<BigInt>> = Vec::with_capacity(elements.len());
    for (k, e) in elements.iter().enumerate() {
        if k == 0 {
            profiles.push(vec![BigInt::one()]);
            continue;
        }
        let mut acc: Vec<BigInt> = vec![BigInt::zero()];
        for (j, below) in elements[..k].iter().enumerate() {
            if profiles[j].is_empty() || !less(below, e) {
                continue;
            }
            add_shifted(&mut acc, &profiles[j]);
        }
        trim(&mut acc);
        profiles.push(acc);
    }
    profiles
}

fn add_shifted(acc: &mut Vec<BigInt>, profile: &[BigInt]) {
    if acc.len() < profile.len() + 1 {
        acc.resize(profile.len() + 1, BigInt::zero());
    }
    for (l, c) in profile.iter().enumerate() {
        acc[l + 1] += c;
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Chain counts `c_l(0, x)` by dynamic programming over the interval.
pub fn chain_counts(s: &Semigroup, x: &IntVec) -> Result<ChainProfile> {
    let deg = s.degree(x)?;
    if deg < BigInt::zero() {
        return Ok(ChainProfile { x: x.clone(), counts: Vec::new() });
    }
    let slab = s.slab(degree_bound(&deg)?)?;
    let interval = slab.interval(x);
    if interval.is_empty() {
        return Ok(ChainProfile { x: x.clone(), counts: Vec::new() });
    }
    let profiles = chain_profiles(&interval, |a, b| a != b && slab.contains(&(b - a)));
    let counts = profiles.last().cloned().unwrap_or_default();
    Ok(ChainProfile { x: x.clone(), counts })
}

/// `μ(x) = Σ_l (-1)^l c_l(0, x)`.
pub fn mobius_oracle(s: &Semigroup, x: &IntVec) -> Result<BigInt> {
    Ok(chain_counts(s, x)?.alternating_sum())
}

/// Chain profiles of every `x ∈ S` with `w·x <= bound`, sharing the
/// dynamic program across targets (`c_l(0, y)` does not depend on the
/// interval it is embedded in).
pub fn chain_counts_up_to(s: &Semigroup, bound: u64) -> Result<Vec<ChainProfile>> {
    let slab = s.slab(bound)?;
    let elements = slab.elements();
    let degrees = slab.degrees();
    let limit = BigInt::from(bound);
    let mut profiles: Vec<Vec<BigInt>> = vec![vec![BigInt::zero()]; elements.len()];
    if !profiles.is_empty() {
        profiles[0] = vec![BigInt::one()];
    }
    for z in 0..elements.len() {
        trim(&mut profiles[z]);
        let source = profiles[z].clone();
        for (step, step_deg) in elements.iter().zip(degrees).skip(1) {
            if &degrees[z] + step_deg > limit {
                break;
            }
            let y = slab.index_of(&(&elements[z] + step)).expect("sum lies in the slab");
            add_shifted(&mut profiles[y], &source);
        }
    }
    Ok(elements
        .iter()
        .zip(profiles)
        .map(|(x, counts)| ChainProfile { x: x.clone(), counts })
        .collect())
}

/// Memoized values of `μ_S`, each tagged with the route that produced it.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    semigroup: Semigroup,
    values: HashMap<IntVec, (BigInt, Method)>,
}

impl MobiusTable {
    pub fn new(s: &Semigroup) -> Self {
        let mut values = HashMap::new();
        values.insert(IntVec::zeros(s.dim()), (BigInt::one(), Method::Recursion));
        MobiusTable { semigroup: s.clone(), values }
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn get(&self, x: &IntVec) -> Option<&BigInt> {
        self.values.get(x).map(|(v, _)| v)
    }

    pub fn method(&self, x: &IntVec) -> Option<Method> {
        self.values.get(x).map(|(_, m)| *m)
    }

    pub fn insert(&mut self, x: IntVec, value: BigInt, method: Method) {
        self.values.insert(x, (value, method));
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries ascending by degree, then lexicographically.
    pub fn sorted_entries(&self) -> Result<Vec<(IntVec, BigInt, Method)>> {
        let grading = self.semigroup.grading()?;
        let mut entries: Vec<(BigInt, IntVec, BigInt, Method)> = self
            .values
            .iter()
            .map(|(x, (v, m))| (grading.degree(x), x.clone(), v.clone(), *m))
            .collect();
        entries.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        Ok(entries.into_iter().map(|(_, x, v, m)| (x, v, m)).collect())
    }
}

/// `μ(x) = -Σ_{y ∈ [0,x], y ≠ x} μ(y)`, evaluated over the interval in
/// increasing degree and recorded in `table`.
pub fn mobius_recursive(s: &Semigroup, x: &IntVec, table: &mut MobiusTable) -> Result<BigInt> {
    if table.semigroup != *s {
        return Err(Error::TableMismatch);
    }
    let deg = s.degree(x)?;
    if let Some(v) = table.get(x) {
        return Ok(v.clone());
    }
    if deg < BigInt::zero() {
        return Ok(BigInt::zero());
    }
    let slab = s.slab(degree_bound(&deg)?)?;
    let interval = slab.interval(x);
    if interval.is_empty() {
        table.insert(x.clone(), BigInt::zero(), Method::Recursion);
        return Ok(BigInt::zero());
    }
    for (k, y) in interval.iter().enumerate() {
        if table.get(y).is_some() {
            continue;
        }
        // every z < y in S lies in [0, x] and precedes y
        let sum: BigInt = interval[..k]
            .iter()
            .filter(|z| slab.contains(&(y - *z)))
            .map(|z| table.get(z).expect("earlier interval elements are resolved").clone())
            .sum();
        table.insert(y.clone(), -sum, Method::Recursion);
    }
    Ok(table.get(x).expect("x is the top of its interval").clone())
}

/// `μ(x)` for every `x ∈ S` with `w·x <= bound`, in one sweep: once `μ(y)`
/// is known it is pushed onto every `y + s` of the slab.
pub fn mobius_range(s: &Semigroup, bound: u64) -> Result<MobiusTable> {
    let slab = s.slab(bound)?;
    let elements = slab.elements();
    let degrees = slab.degrees();
    let limit = BigInt::from(bound);
    let mut partial: Vec<BigInt> = vec![BigInt::zero(); elements.len()];
    let mut table = MobiusTable::new(s);
    for y in 0..elements.len() {
        let mu = if y == 0 { BigInt::one() } else { -&partial[y] };
        if !mu.is_zero() {
            for (step, step_deg) in elements.iter().zip(degrees) {
                if &degrees[y] + step_deg > limit {
                    break;
                }
                let target = slab.index_of(&(&elements[y] + step)).expect("sum lies in the slab");
                if target != y {
                    partial[target] += &mu;
                }
            }
        }
        table.insert(elements[y].clone(), mu, Method::Recursion);
    }
    Ok(table)
}
