mod common;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use kuramoto_core::counting::{
    conjectured_max, conjectured_ratio, even_count, odd_count, special_case_model, upper_bound, Parity,
};
use kuramoto_core::{solve, Algorithm, SolverConfig, DEFAULT_SUM_TOL};

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn solved(n: usize, q: &BigRational, parity: Parity) -> BigUint {
    let model = special_case_model(n, q, parity).unwrap();
    let rep = solve(&model, Algorithm::Optimized, DEFAULT_SUM_TOL, &SolverConfig::default()).unwrap();
    BigUint::from(rep.count())
}

#[test]
fn even_family_counts_match_the_solver_in_every_band() {
    for n in [2usize, 4, 6, 8] {
        for twice in (1..=n + 1).step_by(2) {
            let q = q(twice as i64, 2);
            assert_eq!(solved(n, &q, Parity::Even), even_count(n, &q).unwrap().count, "n={n} q={q}");
        }
    }
}

#[test]
fn odd_family_counts_match_the_solver() {
    for n in [3usize, 5, 7] {
        for tenths in 1..=3 {
            let q = q(tenths, 10);
            assert_eq!(solved(n, &q, Parity::Odd), odd_count(n, &q).unwrap().count, "n={n} q={q}");
        }
    }
}

#[test]
fn even_count_changes_exactly_at_integers() {
    for n in (2usize..=16).step_by(2) {
        let eps = q(1, 1000);
        for l in 1..=(n / 2) as i64 {
            let below = even_count(n, &(q(l, 1) - &eps)).unwrap().count;
            let above = even_count(n, &(q(l, 1) + &eps)).unwrap().count;
            assert!(above < below, "n={n} ℓ={l}");
        }
        assert_eq!(even_count(n, &q(n as i64 + 1, 2)).unwrap().count, BigUint::from(0u8));
    }
}

proptest! {
    #![proptest_config(common::config(500))]

    #[test]
    fn even_count_is_constant_between_integers(half in 1usize..=10, num in 1i64..4000) {
        let n = 2 * half;
        let x = q(num, 997);
        prop_assume!(!x.is_integer());
        let mid = x.floor() + q(1, 2);
        prop_assert_eq!(even_count(n, &x).unwrap().count, even_count(n, &mid).unwrap().count);
    }

    #[test]
    fn counts_never_exceed_the_upper_bound(half in 1usize..=20, num in 1i64..4000) {
        let n = 2 * half;
        prop_assert!(even_count(n, &q(num, 997)).unwrap().count <= BigUint::one() << n);
        prop_assert!(conjectured_max(n).count <= upper_bound(n));
        prop_assert!(conjectured_max(n + 1).count <= upper_bound(n + 1));
    }
}

#[test]
fn conjectured_ratio_is_at_least_one_minus_inverse_root_n() {
    for n in 2..=64usize {
        // ratio ≥ 1 − 1/√n  ⇔  n·(1 − ratio)² ≤ 1
        let gap = BigRational::one() - conjectured_ratio(n);
        let lhs = &gap * &gap * BigRational::from_integer(BigInt::from(n));
        assert!(lhs <= BigRational::one(), "n={n}");
    }
}

#[test]
fn conjectured_ratio_increases_along_even_n_from_six() {
    // 2 → 4 → 6 decreases (1, 5/7, 22/31); monotone from there on
    assert!(conjectured_ratio(4) < conjectured_ratio(2));
    assert!(conjectured_ratio(6) < conjectured_ratio(4));
    for n in (6..=62usize).step_by(2) {
        assert!(conjectured_ratio(n) <= conjectured_ratio(n + 2), "n={n}");
    }
}

#[test]
fn conjectured_ratio_tends_to_one() {
    let bar = q(19, 20);
    assert!(conjectured_ratio(254) < bar);
    assert!((255..=400).all(|n| conjectured_ratio(n) >= bar));
}

#[test]
fn the_four_oscillator_even_family_attains_the_conjectured_maximum() {
    assert_eq!(solved(4, &q(1, 2), Parity::Even), conjectured_max(4).count);
    assert_eq!(solved(3, &q(1, 5), Parity::Odd), conjectured_max(3).count);
}
