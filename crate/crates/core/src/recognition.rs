//! Recognising semigroup posets from relation lattices, and adapters that
//! place classical posets (divisors, multisets) inside `N^m`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::formulas::mobius_free;
use crate::lattice::{is_saturated, quotient_with_section, IntMatrix, LatticeBasis};
use crate::mobius::mobius_range;
use crate::semigroup::Semigroup;
use crate::vector::IntVec;

#[derive(Clone, Debug)]
pub struct RecognitionResult {
    pub saturated: bool,
    pub elementary_divisors: Vec<BigInt>,
    /// `n - rank(L)`
    pub ambient_dim: usize,
    /// `<ρe_1, ..., ρe_n>`; absent for non-saturated input and when the
    /// quotient is trivial.
    pub semigroup: Option<Semigroup>,
    /// `ρ: Z^n -> Z^m` with kernel `L`, for saturated input.
    pub generator_map: Option<IntMatrix>,
    /// Integer section `σ` of `ρ` (`ρσ = I`).
    pub section: Option<IntMatrix>,
    pub pointed: Option<bool>,
}

/// Builds the semigroup `<ρe_1, ..., ρe_n>` of a saturated lattice `L`.
pub fn recognize(l: &LatticeBasis) -> RecognitionResult {
    let elementary_divisors = l.elementary_divisors();
    let saturated = is_saturated(l);
    let ambient_dim = l.ambient_rank() - l.rank();
    let mut result = RecognitionResult {
        saturated,
        elementary_divisors,
        ambient_dim,
        semigroup: None,
        generator_map: None,
        section: None,
        pointed: None,
    };
    if !saturated {
        return result;
    }
    let (rho, section) = quotient_with_section(l).expect("saturated lattices have a quotient map");
    let images: Vec<IntVec> =
        (0..rho.ncols()).map(|i| rho.column(i)).filter(|a| !a.is_zero()).collect();
    if ambient_dim > 0 && !images.is_empty() {
        let s = Semigroup::new(ambient_dim, images).expect("columns of ρ have length m");
        result.pointed = Some(s.is_pointed());
        result.semigroup = Some(s);
    }
    result.generator_map = Some(rho);
    result.section = Some(section);
    result
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripReport {
    pub bound: u64,
    /// Elements of degree at most `bound` on each side.
    pub elements: (usize, usize),
    pub counts_match: bool,
    pub mobius_match: bool,
    /// Whether the rebuilt semigroup certifies pointedness on its own.
    pub image_pointed: bool,
    pub mismatch: Option<String>,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.counts_match && self.mobius_match && self.image_pointed && self.mismatch.is_none()
    }
}

/// Rebuilds `S'` from the relation lattice of `S` and compares graded
/// element counts and Möbius values up to `bound`.
///
/// `T = A·σ` maps `S'` onto `S` (`A` the generator matrix); `S'` is graded
/// by `Tᵀw` so that degrees correspond.
pub fn round_trip_check(s: &Semigroup, bound: u64) -> Result<RoundTripReport> {
    let w = s.grading()?.w().clone();
    let recognized = recognize(&s.lattice_of_relations());
    let fail = |message: String| RoundTripReport {
        bound,
        elements: (0, 0),
        counts_match: false,
        mobius_match: false,
        image_pointed: false,
        mismatch: Some(message),
    };
    let (Some(image), Some(section)) = (recognized.semigroup, recognized.section) else {
        return Ok(fail("relation lattice did not yield a semigroup".into()));
    };
    let transport = s.generator_matrix().mul(&section)?;
    let image_pointed = image.is_pointed();
    let w_image = transport.transpose().mul_vec(&w)?;
    let image = image.with_grading(w_image)?;

    let slab = s.slab(bound)?;
    let image_slab = image.slab(bound)?;
    let counts_match = slab.graded_counts() == image_slab.graded_counts();

    let mu = mobius_range(s, bound)?;
    let mu_image = mobius_range(&image, bound)?;
    let mut mismatch = None;
    for y in image_slab.elements() {
        let x = transport.mul_vec(y)?;
        let (left, right) = (mu_image.get(y), mu.get(&x));
        if left != right {
            mismatch = Some(format!("μ'({y}) = {left:?} but μ({x}) = {right:?}"));
            break;
        }
    }
    let mobius_match = mismatch.is_none() && mu.len() == mu_image.len();
    Ok(RoundTripReport {
        bound,
        elements: (slab.len(), image_slab.len()),
        counts_match,
        mobius_match,
        image_pointed,
        mismatch,
    })
}

/// Exponent vectors of positive integers over the primes that divide them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityMap {
    /// Occurring primes, increasing.
    pub primes: Vec<BigInt>,
    pub vectors: Vec<(BigInt, IntVec)>,
}

impl DivisibilityMap {
    pub fn dim(&self) -> usize {
        self.primes.len()
    }

    pub fn get(&self, value: &BigInt) -> Option<&IntVec> {
        self.vectors.iter().find(|(v, _)| v == value).map(|(_, psi)| psi)
    }
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        out.push((rest, 1));
    }
    out
}

/// `ψ(p_1^{α_1} ... p_m^{α_m}) = (α_1, ..., α_m)`.
pub fn divisibility_adapter(values: &[BigInt]) -> Result<DivisibilityMap> {
    if let Some(v) = values.iter().find(|v| !v.is_positive()) {
        return Err(Error::InvalidArgument(format!("{v} is not a positive integer")));
    }
    let factored: Vec<Vec<(BigInt, u32)>> = values.iter().map(factorize).collect();
    let mut primes: Vec<BigInt> = factored.iter().flatten().map(|(p, _)| p.clone()).collect();
    primes.sort();
    primes.dedup();
    let vectors = values
        .iter()
        .zip(&factored)
        .map(|(v, f)| {
            let exps = primes
                .iter()
                .map(|p| f.iter().find(|(q, _)| q == p).map_or_else(BigInt::zero, |(_, e)| BigInt::from(*e)))
                .collect();
            (v.clone(), IntVec::new(exps))
        })
        .collect();
    Ok(DivisibilityMap { primes, vectors })
}

/// `μ(a, b)` in the divisor lattice.
pub fn classical_mobius(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidArgument(format!("{a} and {b} must be positive")));
    }
    if !b.is_multiple_of(a) {
        return Err(Error::NotDivisible(a.clone(), b.clone()));
    }
    let map = divisibility_adapter(&[a.clone(), b.clone()])?;
    let (Some(pa), Some(pb)) = (map.get(a), map.get(b)) else {
        unreachable!("both values were mapped");
    };
    Ok(mobius_free(&(pb - pa)))
}

/// Multiplicity vectors of multisets over `ground`.
pub fn multiset_adapter(ground: &[String], multisets: &[Vec<String>]) -> Result<Vec<IntVec>> {
    let position: HashMap<&str, usize> = ground.iter().enumerate().map(|(i, d)| (d.as_str(), i)).collect();
    multisets
        .iter()
        .map(|ms| {
            let mut counts = vec![BigInt::zero(); ground.len()];
            for label in ms {
                let i = position.get(label.as_str()).ok_or_else(|| Error::UnknownLabel(label.clone()))?;
                counts[*i] += 1;
            }
            Ok(IntVec::new(counts))
        })
        .collect()
}

/// `μ(T, S)` in the poset of multisets ordered by inclusion.
pub fn multiset_mobius(ground: &[String], t: &[String], s: &[String]) -> Result<BigInt> {
    let psi = multiset_adapter(ground, &[t.to_vec(), s.to_vec()])?;
    let diff = &psi[1] - &psi[0];
    Ok(if diff.is_nonnegative() { mobius_free(&diff) } else { BigInt::zero() })
}

fn label<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<String, D::Error> {
    Ok(match serde_json::Value::deserialize(d)? {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    })
}

fn labels<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<String>, D::Error> {
    let raw: Vec<serde_json::Value> = Vec::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|v| match v {
            serde_json::Value::String(s) => s,
            other => other.to_string(),
        })
        .collect())
}

fn label_pairs<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(String, String)>, D::Error> {
    let raw: Vec<(serde_json::Value, serde_json::Value)> = Vec::deserialize(d)?;
    let text = |v: serde_json::Value| match v {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    };
    Ok(raw.into_iter().map(|(a, b)| (text(a), text(b))).collect())
}

/// A finite piece of `P_x`: labels, cover pairs `(lower, upper)`, and the
/// root `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFragment {
    #[serde(deserialize_with = "labels")]
    pub elements: Vec<String>,
    #[serde(deserialize_with = "label_pairs")]
    pub covers: Vec<(String, String)>,
    #[serde(deserialize_with = "label")]
    pub root: String,
}

/// The JSON fragment file: a fragment plus an optional assignment into `Z^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FragmentFile {
    #[serde(flatten)]
    pub fragment: PosetFragment,
    #[serde(default)]
    pub assignments: Option<BTreeMap<String, IntVec>>,
}

impl FragmentFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { offset: 0, message: e.to_string() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentReport {
    pub elements: usize,
    pub pairs_checked: usize,
    pub root_is_zero: bool,
    /// Labels whose image is not in `S`.
    pub outside: Vec<String>,
    /// `(u, v)` where exactly one of `u <= v` and `ψ(u) <=_S ψ(v)` holds.
    pub order_violations: Vec<(String, String)>,
    pub root_covers: usize,
    pub generators: usize,
}

impl FragmentReport {
    pub fn passed(&self) -> bool {
        self.root_is_zero && self.outside.is_empty() && self.order_violations.is_empty()
    }

    pub fn covers_match(&self) -> bool {
        self.root_covers == self.generators
    }
}

/// Checks that `ψ` embeds the fragment into `(S, <=_S)`: order preserved
/// and reflected on every pair, root at 0, and all images in `S`.
pub fn fragment_consistency_check(
    f: &PosetFragment,
    assignments: &HashMap<String, IntVec>,
    s: &Semigroup,
) -> Result<FragmentReport> {
    let index: HashMap<&str, usize> = f.elements.iter().enumerate().map(|(i, e)| (e.as_str(), i)).collect();
    if index.len() != f.elements.len() {
        return Err(Error::InvalidFragment("duplicate element labels".into()));
    }
    let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
    let root = lookup(&f.root)?;
    let n = f.elements.len();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in &f.covers {
        up[lookup(a)?].push(lookup(b)?);
    }

    // Kahn's algorithm: topological order or a cycle
    let mut indegree = vec![0usize; n];
    for targets in &up {
        for &t in targets {
            indegree[t] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(i) = queue.pop_front() {
        topo.push(i);
        for &t in &up[i] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                queue.push_back(t);
            }
        }
    }
    if topo.len() != n {
        return Err(Error::InvalidFragment("cover relation has a cycle".into()));
    }

    // above[i] = all j with i <= j
    let mut above: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for &i in topo.iter().rev() {
        let mut set = HashSet::from([i]);
        for &t in &up[i] {
            set.extend(above[t].iter().copied());
        }
        above[i] = set;
    }
    if above[root].len() != n {
        let missing = (0..n).find(|j| !above[root].contains(j)).expect("some element is unreachable");
        return Err(Error::InvalidFragment(format!("{} is not above the root", f.elements[missing])));
    }

    let mut psi = Vec::with_capacity(n);
    for e in &f.elements {
        let v = assignments.get(e).ok_or_else(|| Error::IncompleteAssignment(e.clone()))?;
        if v.dim() != s.dim() {
            return Err(Error::DimensionMismatch { expected: s.dim(), found: v.dim() });
        }
        psi.push(v);
    }

    let mut outside = Vec::new();
    for (e, v) in f.elements.iter().zip(&psi) {
        if !s.contains(v)? {
            outside.push(e.clone());
        }
    }
    let mut order_violations = Vec::new();
    let mut pairs_checked = 0;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            pairs_checked += 1;
            let in_fragment = above[u].contains(&v);
            let in_semigroup = s.contains(&(psi[v] - psi[u]))?;
            if in_fragment != in_semigroup {
                order_violations.push((f.elements[u].clone(), f.elements[v].clone()));
            }
        }
    }
    Ok(FragmentReport {
        elements: n,
        pairs_checked,
        root_is_zero: psi[root].is_zero(),
        outside,
        order_violations,
        root_covers: up[root].len(),
        generators: s.len(),
    })
}
