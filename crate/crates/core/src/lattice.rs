//! Exact integer linear algebra: Smith normal form, integer kernels,
//! saturation of subgroups of Z^n and the quotient isomorphism
//! Z^n / L -> Z^m for saturated L.
//!
//! All arithmetic is on [`BigInt`]; nothing here ever rounds.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vector::IntVec;

/// A rectangular integer matrix. The column count is kept explicitly so
/// that matrices with zero rows still know their width.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn from_rows(ncols: usize, rows: Vec<IntVec>) -> Result<Self> {
        let rows: Vec<Vec<BigInt>> = rows.into_iter().map(IntVec::into_entries).collect();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::RaggedMatrix { row: i, expected: ncols, found: r.len() });
            }
        }
        Ok(IntMatrix { ncols, rows })
    }

    pub fn from_i64_rows(ncols: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(ncols, rows.iter().map(|r| IntVec::from_i64s(r)).collect())
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { ncols, rows: vec![vec![BigInt::zero(); ncols]; nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, cols: &[IntVec]) -> Result<Self> {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.dim() != nrows {
                return Err(Error::DimensionMismatch { expected: nrows, found: c.dim() });
            }
            for i in 0..nrows {
                m.rows[i][j] = c.entries()[i].clone();
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec::new(self.rows[i].clone())
    }

    pub fn column(&self, j: usize) -> IntVec {
        IntVec::new(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.nrows()).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                t.rows[j][i] = a.clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.nrows() });
        }
        let mut out = Self::zeros(self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    out.rows[i][j] += a * &other.rows[k][j];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &IntVec) -> Result<IntVec> {
        if v.dim() != self.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: v.dim() });
        }
        Ok(IntVec::new(self.rows.iter().map(|r| IntVec::new(r.clone()).dot(v)).collect()))
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, a)| i == j || a.is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(Error::DimensionMismatch { expected: n, found: self.ncols });
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { sign } else { sign * &a[n - 1][n - 1] })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}", IntVec::new(r.clone()))?;
        }
        f.write_str("]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vecs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<IntVec>::deserialize(deserializer)?;
        let ncols = rows.first().map_or(0, IntVec::dim);
        IntMatrix::from_rows(ncols, rows).map_err(serde::de::Error::custom)
    }
}

/// A subgroup of Z^n given by generating rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeBasis {
    ambient_rank: usize,
    generators: IntMatrix,
}

impl LatticeBasis {
    pub fn new(ambient_rank: usize, generators: Vec<IntVec>) -> Result<Self> {
        let generators = IntMatrix::from_rows(ambient_rank, generators)?;
        Ok(LatticeBasis { ambient_rank, generators })
    }

    pub fn from_matrix(generators: IntMatrix) -> Self {
        LatticeBasis { ambient_rank: generators.ncols(), generators }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        LatticeBasis { ambient_rank, generators: IntMatrix::zeros(0, ambient_rank) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        SmithForm::compute(&self.generators).rank
    }

    /// Whether `v` lies in the span of the generators.
    pub fn contains(&self, v: &IntVec) -> Result<bool> {
        if v.dim() != self.ambient_rank {
            return Err(Error::DimensionMismatch { expected: self.ambient_rank, found: v.dim() });
        }
        Ok(SmithForm::compute(&self.generators).row_span_contains(v))
    }

    /// Mutual membership of generators.
    pub fn same_span(&self, other: &LatticeBasis) -> Result<bool> {
        if self.ambient_rank != other.ambient_rank {
            return Ok(false);
        }
        let mine = SmithForm::compute(&self.generators);
        let theirs = SmithForm::compute(&other.generators);
        Ok(other.generators.row_vecs().iter().all(|v| mine.row_span_contains(v))
            && self.generators.row_vecs().iter().all(|v| theirs.row_span_contains(v)))
    }

    /// Nonzero elementary divisors of the generator matrix.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        SmithForm::compute(&self.generators).divisors()
    }
}

/// Smith normal form together with its transforms and the inverse of the
/// column transform.
#[derive(Clone, Debug)]
pub(crate) struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn compute(m: &IntMatrix) -> SmithForm {
        let (nr, nc) = (m.nrows(), m.ncols());
        let mut a = m.rows.clone();
        let mut u = IntMatrix::identity(nr).rows;
        let mut v = IntMatrix::identity(nc).rows;
        let mut v_inv = IntMatrix::identity(nc).rows;

        let mut t = 0;
        while t < nr.min(nc) {
            // minimal-magnitude pivot limits coefficient growth
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            swap_rows(&mut a, &mut u, t, pi);
            swap_cols(&mut a, &mut v, &mut v_inv, t, pj);

            loop {
                let mut clean = true;
                for i in t + 1..nr {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = &a[i][t] / &a[t][t];
                    sub_row(&mut a, &mut u, i, t, &q);
                    if !a[i][t].is_zero() {
                        swap_rows(&mut a, &mut u, t, i);
                        clean = false;
                    }
                }
                for j in t + 1..nc {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = &a[t][j] / &a[t][t];
                    sub_col(&mut a, &mut v, &mut v_inv, j, t, &q);
                    if !a[t][j].is_zero() {
                        swap_cols(&mut a, &mut v, &mut v_inv, t, j);
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // enforce the divisibility chain
                let offender = (t + 1..nr).find(|&i| {
                    (t + 1..nc).any(|j| !a[i][j].is_multiple_of(&a[t][t]))
                });
                match offender {
                    Some(i) => add_row(&mut a, &mut u, t, i),
                    None => break,
                }
            }
            if a[t][t].is_negative() {
                for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                    *x = -&*x;
                }
            }
            t += 1;
        }

        SmithForm {
            u: IntMatrix { ncols: nr, rows: u },
            d: IntMatrix { ncols: nc, rows: a },
            v: IntMatrix { ncols: nc, rows: v },
            v_inv: IntMatrix { ncols: nc, rows: v_inv },
            rank: t,
        }
    }

    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.rows[i][i].clone()).collect()
    }

    /// `v = y·M` is solvable over Z iff `(v·V)_i` is divisible by `d_i` for
    /// `i < rank` and vanishes beyond.
    pub fn row_span_contains(&self, v: &IntVec) -> bool {
        let vv = self.v.transpose().mul_vec(v).expect("dimension checked by caller");
        vv.entries().iter().enumerate().all(|(i, c)| {
            if i < self.rank {
                c.is_multiple_of(&self.d.rows[i][i])
            } else {
                c.is_zero()
            }
        })
    }
}

fn swap_rows(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        a.swap(i, j);
        u.swap(i, j);
    }
}

fn swap_cols(
    a: &mut [Vec<BigInt>],
    v: &mut [Vec<BigInt>],
    v_inv: &mut [Vec<BigInt>],
    i: usize,
    j: usize,
) {
    if i == j {
        return;
    }
    for r in a.iter_mut().chain(v.iter_mut()) {
        r.swap(i, j);
    }
    v_inv.swap(i, j);
}

/// row_i -= q * row_t
fn sub_row(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    for m in [a, u] {
        let src = m[t].clone();
        for (x, s) in m[i].iter_mut().zip(&src) {
            *x -= q * s;
        }
    }
}

/// row_t += row_i
fn add_row(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], t: usize, i: usize) {
    for m in [a, u] {
        let src = m[i].clone();
        for (x, s) in m[t].iter_mut().zip(&src) {
            *x += s;
        }
    }
}

/// col_j -= q * col_t, with the matching inverse row operation on `v_inv`.
fn sub_col(
    a: &mut [Vec<BigInt>],
    v: &mut [Vec<BigInt>],
    v_inv: &mut [Vec<BigInt>],
    j: usize,
    t: usize,
    q: &BigInt,
) {
    for r in a.iter_mut().chain(v.iter_mut()) {
        let s = q * &r[t];
        r[j] -= s;
    }
    let src = v_inv[j].clone();
    for (x, s) in v_inv[t].iter_mut().zip(&src) {
        *x += q * s;
    }
}

/// Smith normal form `U·M·V = D` with `U`, `V` unimodular and
/// `d_1 | d_2 | ...`, all `d_i >= 0`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = SmithForm::compute(m);
    (s.u, s.d, s.v)
}

/// Basis of `{v in Z^n : A·v = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> LatticeBasis {
    let s = SmithForm::compute(a);
    let n = a.ncols();
    let rows = (s.rank..n).map(|j| s.v.column(j)).collect();
    LatticeBasis::new(n, rows).expect("kernel columns have length n")
}

/// Basis of `Sat(L) = {γ : dγ ∈ L for some d > 0}`: the generator SNF with
/// every nonzero elementary divisor replaced by 1.
pub fn saturation(l: &LatticeBasis) -> LatticeBasis {
    let s = SmithForm::compute(&l.generators);
    let rows = (0..s.rank).map(|i| s.v_inv.row(i)).collect();
    LatticeBasis::new(l.ambient_rank, rows).expect("rows of V^-1 have length n")
}

pub fn is_saturated(l: &LatticeBasis) -> bool {
    l.elementary_divisors().iter().all(One::is_one)
}

/// Matrix of a group isomorphism `ρ: Z^n / L -> Z^m`, `m = n - rank(L)`,
/// as an `m × n` matrix acting on column vectors.
pub fn quotient_iso(l: &LatticeBasis) -> Result<IntMatrix> {
    quotient_with_section(l).map(|(rho, _)| rho)
}

/// `ρ` together with an integer section `σ` (`n × m`, `ρ·σ = I`).
pub fn quotient_with_section(l: &LatticeBasis) -> Result<(IntMatrix, IntMatrix)> {
    let s = SmithForm::compute(&l.generators);
    let divisors = s.divisors();
    if !divisors.iter().all(One::is_one) {
        return Err(Error::NotSaturated { divisors });
    }
    let n = l.ambient_rank;
    let rho_rows: Vec<IntVec> = (s.rank..n).map(|j| s.v.column(j)).collect();
    let rho = IntMatrix::from_rows(n, rho_rows)?;
    let section_cols: Vec<IntVec> = (s.rank..n).map(|j| s.v_inv.row(j)).collect();
    let section = IntMatrix::from_columns(n, &section_cols)?;
    Ok((rho, section))
}
