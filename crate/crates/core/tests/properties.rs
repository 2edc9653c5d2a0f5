use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use semigroup_mobius::formulas::{
    alpha, mobius_deddens, mobius_three_gen_ci, mobius_unique_betti, DenumerantBasis,
};
use semigroup_mobius::lattice::{
    integer_kernel, is_saturated, quotient_with_section, saturation, smith_normal_form, IntMatrix, LatticeBasis,
};
use semigroup_mobius::mobius::{chain_counts, chain_counts_up_to, chain_profiles, mobius_range};
use semigroup_mobius::recognition::{classical_mobius, multiset_mobius, recognize};
use semigroup_mobius::semigroup::{detect_three_gen_ci, Semigroup};
use semigroup_mobius::series::{binomial_product, invert_series, mobius_series};
use semigroup_mobius::IntVec;

fn matrix(rows: &[Vec<i64>], ncols: usize) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMatrix::from_i64_rows(ncols, &refs).unwrap()
}

fn small_matrix() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| (prop::collection::vec(prop::collection::vec(-9i64..=9, c), r), Just(c)))
}

fn numerical_gens() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=13, 2..=4).prop_filter("gcd 1", |g| g.iter().fold(0, |a, b| a.gcd(b)) == 1)
}

fn oracle_map(s: &Semigroup, bound: u64) -> HashMap<IntVec, BigInt> {
    chain_counts_up_to(s, bound).unwrap().into_iter().map(|p| (p.x.clone(), p.alternating_sum())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalisation((rows, c) in small_matrix()) {
        let m = matrix(&rows, c);
        let (u, d, v) = smith_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), d.clone());
        prop_assert!(d.is_diagonal());
        prop_assert!(u.determinant().unwrap().magnitude().is_one());
        prop_assert!(v.determinant().unwrap().magnitude().is_one());
        let diag: Vec<BigInt> = (0..d.nrows().min(d.ncols())).map(|i| d.get(i, i).clone()).collect();
        for w in diag.windows(2) {
            prop_assert!(w[0] >= BigInt::zero());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn saturation_contains_l_and_is_idempotent((rows, c) in small_matrix()) {
        let l = LatticeBasis::from_matrix(matrix(&rows, c));
        let sat = saturation(&l);
        prop_assert!(is_saturated(&sat));
        prop_assert_eq!(sat.rank(), l.rank());
        for row in l.generators().row_vecs() {
            prop_assert!(sat.contains(&row).unwrap());
        }
        prop_assert!(saturation(&sat).same_span(&sat).unwrap());
    }

    #[test]
    fn kernels_are_saturated_and_annihilated((rows, c) in small_matrix()) {
        let a = matrix(&rows, c);
        let k = integer_kernel(&a);
        prop_assert!(is_saturated(&k));
        for v in k.generators().row_vecs() {
            prop_assert!(a.mul_vec(&v).unwrap().is_zero());
        }
        let (rho, section) = quotient_with_section(&k).unwrap();
        prop_assert_eq!(rho.mul(&section).unwrap(), IntMatrix::identity(rho.nrows()));
        for v in k.generators().row_vecs() {
            prop_assert!(rho.mul_vec(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn alpha_subtraction_law(x in -500i64..500, y in -500i64..500, a1 in 1i64..40, d in 2i64..12) {
        prop_assume!(a1.gcd(&d) == 1);
        let (a1, d) = (BigInt::from(a1), BigInt::from(d));
        let ax = alpha(&x.into(), &a1, &d).unwrap();
        let ay = alpha(&y.into(), &a1, &d).unwrap();
        let diff = alpha(&(x - y).into(), &a1, &d).unwrap();
        let want = if ax >= ay { &ax - &ay } else { &d + &ax - &ay };
        prop_assert_eq!(diff, want);
    }

    #[test]
    fn routes_agree_on_numerical_semigroups(gens in numerical_gens()) {
        let s = Semigroup::numerical(&gens).unwrap();
        let oracle = oracle_map(&s, 40);
        let range = mobius_range(&s, 40).unwrap();
        let series = mobius_series(&s, 40).unwrap();
        for x in s.enumerate_up_to(40).unwrap() {
            prop_assert_eq!(Some(&oracle[&x]), range.get(&x));
            prop_assert_eq!(oracle[&x].clone(), series.coefficient(&x));
        }
    }

    #[test]
    fn routes_agree_in_the_plane(gens in prop::collection::vec((-3i64..=3, -3i64..=3), 2..=4)) {
        let rows: Vec<[i64; 2]> = gens.iter().map(|&(a, b)| [a, b]).filter(|r| *r != [0, 0]).collect();
        prop_assume!(!rows.is_empty());
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let s = Semigroup::from_i64_rows(2, &refs).unwrap();
        prop_assume!(s.is_pointed());
        let bound = 8;
        let oracle = oracle_map(&s, bound);
        let range = mobius_range(&s, bound).unwrap();
        let series = mobius_series(&s, bound).unwrap();
        for x in s.enumerate_up_to(bound).unwrap() {
            prop_assert_eq!(Some(&oracle[&x]), range.get(&x));
            prop_assert_eq!(oracle[&x].clone(), series.coefficient(&x));
        }
    }

    #[test]
    fn intervals_are_translation_invariant(gens in numerical_gens(), y in 0usize..20, x in 0usize..30) {
        let s = Semigroup::numerical(&gens).unwrap();
        let members = s.enumerate_up_to(60).unwrap();
        let (y, x) = (&members[y.min(members.len() - 1)], &members[x.min(members.len() - 1)]);
        let shifted: Vec<IntVec> = s.interval(x).unwrap().iter().map(|b| y + b).collect();
        let less = |a: &IntVec, b: &IntVec| a != b && s.contains(&(b - a)).unwrap();
        let profiles = chain_profiles(&shifted, less);
        let mut direct = chain_counts(&s, x).unwrap().counts;
        let mut moved = profiles.last().unwrap().clone();
        while moved.last().is_some_and(|c| c.is_zero()) {
            moved.pop();
        }
        while direct.last().is_some_and(|c| c.is_zero()) {
            direct.pop();
        }
        prop_assert_eq!(moved, direct);
    }

    #[test]
    fn deddens_is_the_unique_betti_specialisation(a in 2i64..15, b in 2i64..15, x in -5i64..250) {
        prop_assume!(a != b && a.gcd(&b) == 1);
        let s = Semigroup::numerical(&[a, b]).unwrap();
        let via_betti = mobius_unique_betti(&s, &IntVec::scalar(a * b), &IntVec::scalar(x)).unwrap();
        prop_assert_eq!(mobius_deddens(&a.into(), &b.into(), &x.into()).unwrap(), via_betti);
    }

    #[test]
    fn denumerants_match_the_generating_function(basis in prop::collection::vec(1i64..12, 1..=3)) {
        let b = DenumerantBasis::numerical(&basis).unwrap();
        let table = b.denumerant_table(60).unwrap();
        let series = invert_series(&binomial_product(b.basis(), b.grading(), 60).unwrap()).unwrap();
        prop_assert_eq!(table, series);
    }

    #[test]
    fn glued_complete_intersections_match_the_oracle(
        p in 2i64..7, q in 2i64..7, d in 2i64..5, g2 in 0i64..4, g3 in 0i64..4,
    ) {
        prop_assume!(p < q && p.gcd(&q) == 1);
        let a1 = g2 * p + g3 * q;
        prop_assume!(a1 >= 2 && a1.gcd(&d) == 1);
        let s = Semigroup::numerical(&[a1, d * p, d * q]).unwrap();
        let ci = match detect_three_gen_ci(&s) {
            Ok(Some(ci)) => ci,
            _ => return Err(TestCaseError::reject("generators not minimal")),
        };
        let oracle = oracle_map(&s, 90);
        for x in 0..=90i64 {
            let want = oracle.get(&IntVec::scalar(x)).cloned().unwrap_or_default();
            prop_assert_eq!(mobius_three_gen_ci(&ci, &x.into()).unwrap(), want, "x = {}", x);
        }
    }

    #[test]
    fn recognition_inverts_relation_lattices(gens in numerical_gens()) {
        let s = Semigroup::numerical(&gens).unwrap();
        let l = s.lattice_of_relations();
        let r = recognize(&l);
        prop_assert!(r.saturated);
        let image = r.semigroup.unwrap();
        prop_assert!(image.lattice_of_relations().same_span(&l).unwrap());
    }

    #[test]
    fn non_saturated_lattices_yield_no_semigroup(
        (rows, c) in small_matrix(), k in 2i64..5,
    ) {
        let scaled: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v * k).collect()).collect();
        let l = LatticeBasis::from_matrix(matrix(&scaled, c));
        prop_assume!(l.rank() > 0);
        let r = recognize(&l);
        prop_assert!(!r.saturated);
        prop_assert!(r.semigroup.is_none());
    }
}

/// Chain counts of the divisor interval `[a, b]` by direct enumeration.
fn divisor_mobius(a: u64, b: u64) -> BigInt {
    let divs: Vec<u64> = (a..=b).filter(|d| d % a == 0 && b.is_multiple_of(*d)).collect();
    let profiles = chain_profiles(&divs, |x, y| x != y && y % x == 0);
    profiles
        .last()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(l, c)| if l % 2 == 0 { c.clone() } else { -c })
        .sum()
}

#[test]
fn classical_mobius_matches_divisor_chains() {
    for b in 1..=200u64 {
        for a in (1..=b).filter(|a| b % a == 0) {
            assert_eq!(classical_mobius(&a.into(), &b.into()).unwrap(), divisor_mobius(a, b), "({a},{b})");
        }
    }
}

/// All multisets over `{0,1,2}` of size at most 4, as multiplicity triples.
fn small_multisets() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..=4 {
        for j in 0..=4 - i {
            for k in 0..=4 - i - j {
                out.push([i, j, k]);
            }
        }
    }
    out
}

#[test]
fn multiset_mobius_matches_inclusion_chains() {
    let ground: Vec<String> = ["d1", "d2", "d3"].iter().map(|s| s.to_string()).collect();
    let as_labels = |m: &[usize; 3]| -> Vec<String> {
        m.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(ground[i].clone(), k)).collect()
    };
    let all = small_multisets();
    let sub = |a: &[usize; 3], b: &[usize; 3]| a.iter().zip(b).all(|(x, y)| x <= y);
    for t in &all {
        for s in all.iter().filter(|s| sub(t, s)) {
            let mut between: Vec<[usize; 3]> = all.iter().filter(|m| sub(t, m) && sub(m, s)).copied().collect();
            between.sort_by_key(|m| m.iter().sum::<usize>());
            let profiles = chain_profiles(&between, |x, y| x != y && sub(x, y));
            let idx = between.iter().position(|m| m == s).unwrap();
            let expected: BigInt = profiles[idx]
                .iter()
                .enumerate()
                .map(|(l, c)| if l % 2 == 0 { c.clone() } else { -c })
                .sum();
            assert_eq!(multiset_mobius(&ground, &as_labels(t), &as_labels(s)).unwrap(), expected, "{t:?} {s:?}");
        }
    }
}
