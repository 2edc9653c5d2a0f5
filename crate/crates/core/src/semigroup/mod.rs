//! Finitely generated semigroups `S = <a_1,...,a_n>` of Z^m: pointedness,
//! membership, graded enumeration, intervals and relation lattices.

mod cone;
mod family;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, IntMatrix, LatticeBasis};
use crate::vector::IntVec;

pub use family::{
    detect_family, detect_three_gen_ci, detect_unique_betti_numerical, Family, ThreeGenCi,
    UniqueBetti,
};

/// A functional `w` with `w·a_i >= 1` on every generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingCertificate {
    w: IntVec,
}

impl GradingCertificate {
    pub fn w(&self) -> &IntVec {
        &self.w
    }

    pub fn degree(&self, x: &IntVec) -> BigInt {
        self.w.dot(x)
    }
}

/// Nonnegative integers `c`, not all zero, with `Σ c_i a_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPointedWitness {
    pub coefficients: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pointedness {
    Pointed(GradingCertificate),
    NotPointed(NonPointedWitness),
}

#[derive(Clone, Debug)]
pub struct Semigroup {
    dim: usize,
    generators: Vec<IntVec>,
    pointedness: OnceLock<Pointedness>,
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl Eq for Semigroup {}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.dim)?;
        for (i, g) in self.generators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { " | " })?;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl Semigroup {
    /// Validates and deduplicates the generators (first occurrence wins).
    pub fn new(dim: usize, generators: Vec<IntVec>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("ambient dimension must be positive".into()));
        }
        let mut seen = HashSet::new();
        let mut gens = Vec::with_capacity(generators.len());
        for (index, g) in generators.into_iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
            if seen.insert(g.clone()) {
                gens.push(g);
            }
        }
        Ok(Semigroup { dim, generators: gens, pointedness: OnceLock::new() })
    }

    /// `<a_1,...,a_n> ⊂ Z`.
    pub fn numerical(generators: &[i64]) -> Result<Self> {
        Self::new(1, generators.iter().map(|&a| IntVec::scalar(a)).collect())
    }

    pub fn from_i64_rows(dim: usize, generators: &[&[i64]]) -> Result<Self> {
        Self::new(dim, generators.iter().map(|g| IntVec::from_i64s(g)).collect())
    }

    /// `N^m` with its canonical basis.
    pub fn free(dim: usize) -> Result<Self> {
        Self::new(dim, (0..dim).map(|i| IntVec::unit(dim, i)).collect())
    }

    /// Installs a caller-chosen grading after checking it is strictly
    /// positive on every generator.
    pub fn with_grading(self, w: IntVec) -> Result<Self> {
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: w.dim() });
        }
        if let Some(g) = self.generators.iter().find(|g| w.dot(g) < BigInt::one()) {
            return Err(Error::InvalidGrading { w, generator: g.clone() });
        }
        let pointedness = OnceLock::new();
        let _ = pointedness.set(Pointedness::Pointed(GradingCertificate { w }));
        Ok(Semigroup { pointedness, ..self })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Either a grading certificate or a nonnegative dependency among the
    /// generators. Computed once and cached.
    pub fn certify_pointed(&self) -> &Pointedness {
        self.pointedness.get_or_init(|| match cone::solve(self.dim, &self.generators) {
            cone::ConeOutcome::Grading(w) => Pointedness::Pointed(GradingCertificate { w }),
            cone::ConeOutcome::Dependency(coefficients) => {
                Pointedness::NotPointed(NonPointedWitness { coefficients })
            }
        })
    }

    pub fn grading(&self) -> Result<&GradingCertificate> {
        match self.certify_pointed() {
            Pointedness::Pointed(cert) => Ok(cert),
            Pointedness::NotPointed(w) => Err(Error::NotPointed { witness: w.coefficients.clone() }),
        }
    }

    pub fn is_pointed(&self) -> bool {
        matches!(self.certify_pointed(), Pointedness::Pointed(_))
    }

    pub fn degree(&self, x: &IntVec) -> Result<BigInt> {
        self.check_dim(x)?;
        Ok(self.grading()?.degree(x))
    }

    fn check_dim(&self, x: &IntVec) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        Ok(())
    }

    /// `m × n` matrix with the generators as columns.
    pub fn generator_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim, &self.generators).expect("generators have length dim")
    }

    /// Dimension of the rational span of the generators.
    pub fn rank(&self) -> usize {
        LatticeBasis::from_matrix(self.generator_matrix().transpose()).rank()
    }

    pub fn contains(&self, x: &IntVec) -> Result<bool> {
        Ok(self.representation(x)?.is_some())
    }

    /// Some `c ∈ N^n` with `Σ c_i a_i = x`, found by a breadth-first search
    /// downward from `x`. Each step lowers the degree by at least one, so
    /// the visited set is finite.
    pub fn representation(&self, x: &IntVec) -> Result<Option<Vec<BigInt>>> {
        self.check_dim(x)?;
        let grading = self.grading()?;
        let n = self.generators.len();
        if grading.degree(x).is_negative() {
            return Ok(None);
        }
        let mut parent: HashMap<IntVec, Option<(IntVec, usize)>> = HashMap::new();
        parent.insert(x.clone(), None);
        let mut queue = VecDeque::from([x.clone()]);
        let mut reached_zero = x.is_zero();
        while !reached_zero {
            let Some(y) = queue.pop_front() else { break };
            for (i, a) in self.generators.iter().enumerate() {
                let z = &y - a;
                if grading.degree(&z).is_negative() || parent.contains_key(&z) {
                    continue;
                }
                parent.insert(z.clone(), Some((y.clone(), i)));
                if z.is_zero() {
                    reached_zero = true;
                    break;
                }
                queue.push_back(z);
            }
        }
        if !reached_zero {
            return Ok(None);
        }
        let mut coeffs = vec![BigInt::zero(); n];
        let mut cur = IntVec::zeros(self.dim);
        while let Some(Some((up, i))) = parent.get(&cur) {
            coeffs[*i] += 1;
            cur = up.clone();
        }
        Ok(Some(coeffs))
    }

    /// All `b ∈ S` with `w·b <= bound`, ascending by degree then
    /// lexicographically.
    pub fn enumerate_up_to(&self, bound: u64) -> Result<Vec<IntVec>> {
        Ok(self.slab(bound)?.elements)
    }

    pub fn slab(&self, bound: u64) -> Result<Slab> {
        let grading = self.grading()?.clone();
        let limit = BigInt::from(bound);
        let zero = IntVec::zeros(self.dim);
        let mut seen: HashSet<IntVec> = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(y) = frontier.pop() {
            for a in &self.generators {
                let z = &y + a;
                if grading.degree(&z) <= limit && !seen.contains(&z) {
                    seen.insert(z.clone());
                    frontier.push(z);
                }
            }
        }
        Ok(Slab::from_elements(grading, bound, seen.into_iter().collect()))
    }

    /// `[0, x] = {s ∈ S : x - s ∈ S}`, sorted like [`Semigroup::enumerate_up_to`].
    pub fn interval(&self, x: &IntVec) -> Result<Vec<IntVec>> {
        self.check_dim(x)?;
        let deg = self.grading()?.degree(x);
        if deg.is_negative() {
            return Ok(Vec::new());
        }
        let slab = self.slab(degree_bound(&deg)?)?;
        Ok(slab.interval(x))
    }

    /// `ker(Z^n -> Z^m, α ↦ Σ α_i a_i)`.
    pub fn lattice_of_relations(&self) -> LatticeBasis {
        integer_kernel(&self.generator_matrix())
    }

    /// The positive scalar generators when `m = 1`, all generators are
    /// positive and their gcd is one.
    pub fn numerical_generators(&self) -> Result<Vec<BigInt>> {
        if self.dim != 1 {
            return Err(Error::NotNumerical(format!("ambient dimension is {}", self.dim)));
        }
        let gens: Vec<BigInt> = self.generators.iter().map(|g| g.entries()[0].clone()).collect();
        if let Some(g) = gens.iter().find(|g| !g.is_positive()) {
            return Err(Error::NotNumerical(format!("generator {g} is not positive")));
        }
        let g = gens.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if !g.is_one() {
            return Err(Error::NotNumerical(format!("generators have gcd {g}")));
        }
        Ok(gens)
    }
}

pub(crate) fn degree_bound(deg: &BigInt) -> Result<u64> {
    u64::try_from(deg).map_err(|_| Error::InvalidArgument(format!("degree {deg} out of range")))
}

/// The finite set `{b ∈ S : w·b <= bound}` with an index for membership
/// queries. Immutable once built.
#[derive(Clone, Debug)]
pub struct Slab {
    grading: GradingCertificate,
    bound: u64,
    elements: Vec<IntVec>,
    degrees: Vec<BigInt>,
    index: HashMap<IntVec, usize>,
}

impl Slab {
    fn from_elements(grading: GradingCertificate, bound: u64, elements: Vec<IntVec>) -> Slab {
        let mut keyed: Vec<(BigInt, IntVec)> =
            elements.into_iter().map(|e| (grading.degree(&e), e)).collect();
        keyed.sort();
        let (degrees, elements): (Vec<BigInt>, Vec<IntVec>) = keyed.into_iter().unzip();
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Slab { grading, bound, elements, degrees, index }
    }

    pub fn grading(&self) -> &GradingCertificate {
        &self.grading
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn elements(&self) -> &[IntVec] {
        &self.elements
    }

    pub fn degrees(&self) -> &[BigInt] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &IntVec) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Membership, exact for any `x` of degree at most the bound.
    pub fn contains(&self, x: &IntVec) -> bool {
        self.index.contains_key(x)
    }

    /// `[0, x]` for `x` within the slab; empty when `x ∉ S`.
    pub fn interval(&self, x: &IntVec) -> Vec<IntVec> {
        if !self.contains(x) {
            return Vec::new();
        }
        let deg = self.grading.degree(x);
        self.elements
            .iter()
            .zip(&self.degrees)
            .take_while(|(_, d)| **d <= deg)
            .filter(|(s, _)| self.contains(&(x - s)))
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// Count of elements of each degree `0..=bound`.
    pub fn graded_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.bound as usize + 1];
        for d in &self.degrees {
            counts[usize::try_from(d).expect("slab degrees lie in 0..=bound")] += 1;
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<IntVec> {
        xs.iter().map(|&x| IntVec::scalar(x)).collect()
    }

    #[test]
    fn construction() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert_eq!((s.len(), s.dim()), (2, 1));
        let n2 = Semigroup::from_i64_rows(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(n2, Semigroup::free(2).unwrap());
        assert_eq!(Semigroup::numerical(&[0]), Err(Error::ZeroGenerator { index: 0 }));
        assert!(matches!(
            Semigroup::new(2, vec![IntVec::scalar(1)]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert_eq!(Semigroup::numerical(&[3, 2, 3]).unwrap().len(), 2);
    }

    #[test]
    fn pointed_certificates() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert_eq!(s.grading().unwrap().w(), &IntVec::scalar(1));

        let s = Semigroup::from_i64_rows(2, &[&[1, 0], &[-1, 0]]).unwrap();
        match s.certify_pointed() {
            Pointedness::NotPointed(w) => assert_eq!(w.coefficients, vec![1.into(), 1.into()]),
            other => panic!("expected witness, got {other:?}"),
        }
        assert!(matches!(s.contains(&IntVec::from_i64s(&[1, 0])), Err(Error::NotPointed { .. })));

        let s = Semigroup::from_i64_rows(2, &[&[1, 1], &[1, -1], &[0, 1]]).unwrap();
        let w = s.grading().unwrap().w().clone();
        assert_eq!(w, IntVec::from_i64s(&[2, 1]));
        assert!(s.generators().iter().all(|a| w.dot(a) >= BigInt::one()));
    }

    #[test]
    fn witness_for_hidden_dependency() {
        // (1,2) + (2,-1) + (-3,-1) = 0
        let s = Semigroup::from_i64_rows(2, &[&[1, 2], &[2, -1], &[-3, -1]]).unwrap();
        let Pointedness::NotPointed(w) = s.certify_pointed() else { panic!("should not be pointed") };
        let sum = s
            .generators()
            .iter()
            .zip(&w.coefficients)
            .fold(IntVec::zeros(2), |acc, (a, c)| &acc + &a.scale(c));
        assert!(sum.is_zero());
        assert!(w.coefficients.iter().all(|c| !c.is_negative()));
        assert!(w.coefficients.iter().any(|c| c.is_positive()));
    }

    #[test]
    fn user_grading_validated() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert!(s.clone().with_grading(IntVec::scalar(5)).is_ok());
        assert!(matches!(s.with_grading(IntVec::scalar(0)), Err(Error::InvalidGrading { .. })));
    }

    #[test]
    fn membership() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert!(!s.contains(&IntVec::scalar(1)).unwrap());
        let rep = s.representation(&IntVec::scalar(7)).unwrap().unwrap();
        assert_eq!(&rep[0] * 2 + &rep[1] * 3, BigInt::from(7));
        assert_eq!(s.representation(&IntVec::scalar(0)).unwrap(), Some(vec![0.into(), 0.into()]));
        assert!(!s.contains(&IntVec::scalar(-4)).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert_eq!(s.enumerate_up_to(6).unwrap(), ints(&[0, 2, 3, 4, 5, 6]));
        let n2 = Semigroup::free(2).unwrap();
        let e = n2.enumerate_up_to(1).unwrap();
        assert_eq!(e, vec![IntVec::from_i64s(&[0, 0]), IntVec::from_i64s(&[0, 1]), IntVec::from_i64s(&[1, 0])]);
        let s = Semigroup::numerical(&[4, 6, 9]).unwrap();
        assert_eq!(s.enumerate_up_to(13).unwrap(), ints(&[0, 4, 6, 8, 9, 10, 12, 13]));
    }

    #[test]
    fn interval_examples() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        assert_eq!(s.interval(&IntVec::scalar(7)).unwrap(), ints(&[0, 2, 3, 4, 5, 7]));
        assert_eq!(s.interval(&IntVec::scalar(0)).unwrap(), ints(&[0]));
        assert!(s.interval(&IntVec::scalar(1)).unwrap().is_empty());
        let n2 = Semigroup::free(2).unwrap();
        let i = n2.interval(&IntVec::from_i64s(&[1, 1])).unwrap();
        assert_eq!(i.len(), 4);
    }

    #[test]
    fn relation_lattices() {
        let s = Semigroup::numerical(&[2, 3]).unwrap();
        let l = s.lattice_of_relations();
        assert!(l.same_span(&LatticeBasis::new(2, vec![IntVec::from_i64s(&[3, -2])]).unwrap()).unwrap());
        assert_eq!(Semigroup::free(2).unwrap().lattice_of_relations().generators().nrows(), 0);
        let l = Semigroup::numerical(&[15, 10, 6]).unwrap().lattice_of_relations();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&IntVec::from_i64s(&[2, -3, 0])).unwrap());
        assert!(l.contains(&IntVec::from_i64s(&[0, 3, -5])).unwrap());
    }

    #[test]
    fn numerical_checks() {
        assert!(Semigroup::numerical(&[4, 6]).unwrap().numerical_generators().is_err());
        assert!(Semigroup::numerical(&[-2, 3]).unwrap().numerical_generators().is_err());
        assert!(Semigroup::free(2).unwrap().numerical_generators().is_err());
        assert_eq!(Semigroup::numerical(&[3, 5]).unwrap().numerical_generators().unwrap().len(), 2);
    }
}
