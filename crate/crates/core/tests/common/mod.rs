#![allow(dead_code)]

use kuramoto_core::conjugate::g_eval;
use kuramoto_core::model::angle_diff;
use kuramoto_core::{Equilibrium, ModelInput, NormalizedModel};
use proptest::prelude::*;
use rand::Rng;

/// Proptest settings without on-disk failure persistence.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn assemble(mut omega: Vec<f64>, mut k: Vec<f64>, ic4: bool) -> ModelInput {
    let n = omega.len();
    let mean = omega.iter().sum::<f64>() / n as f64;
    omega.iter_mut().for_each(|w| *w -= mean);
    if ic4 {
        // largest k to smallest |ω| keeps |ω/k| and k in opposite orders
        let mut by_w: Vec<usize> = (0..n).collect();
        by_w.sort_by(|&a, &b| omega[a].abs().total_cmp(&omega[b].abs()));
        k.sort_by(|a, b| b.total_cmp(a));
        let mut assigned = vec![0.0; n];
        for (rank, &i) in by_w.iter().enumerate() {
            assigned[i] = k[rank];
        }
        k = assigned;
    }
    ModelInput::new(omega, k).unwrap()
}

/// Models with `n` in `2..=max_n`, `ω` in `[−1, 1]` shifted to zero sum and
/// `k` in `[0.5, 2.5]`.
pub fn models(max_n: usize, ic4: bool) -> impl Strategy<Value = ModelInput> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(-1.0f64..1.0, n),
                prop::collection::vec(0.5f64..2.5, n),
            )
        })
        .prop_map(move |(w, k)| assemble(w, k, ic4))
}

/// Random model with zero frequency sum. With `ic4`, couplings are
/// reassigned so they are nonincreasing after sorting by `|ω/k|`.
pub fn random_model<R: Rng>(rng: &mut R, n: usize, ic4: bool) -> ModelInput {
    let omega: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let k: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..2.5)).collect();
    assemble(omega, k, ic4)
}

/// Equal as sets of angle vectors, componentwise within `tol` on the circle.
pub fn same_angle_sets(a: &[Equilibrium], b: &[Equilibrium], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let close = |x: &Equilibrium, y: &Equilibrium| {
        x.theta
            .iter()
            .zip(&y.theta)
            .all(|(s, t)| angle_diff(*s, *t).abs() <= tol)
    };
    let mut used = vec![false; b.len()];
    for x in a {
        match (0..b.len()).find(|&j| !used[j] && close(x, &b[j])) {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

fn solve_dense(mut a: Vec<Vec<f64>>, mut y: Vec<f64>) -> Vec<f64> {
    let n = y.len();
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        a.swap(c, p);
        y.swap(c, p);
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for j in c..n {
                a[r][j] -= f * a[c][j];
            }
            y[r] -= f * y[c];
        }
    }
    let mut x = vec![0.0; n];
    for c in (0..n).rev() {
        let s: f64 = (c + 1..n).map(|j| a[c][j] * x[j]).sum();
        x[c] = (y[c] - s) / a[c][c];
    }
    x
}

/// Monomial coefficients (constant first) of the polynomial of degree
/// `degree` interpolating `g` at Chebyshev nodes on `[0, span]`.
pub fn g_coefficients(m: &NormalizedModel, degree: usize, span: f64) -> Vec<f64> {
    let d = degree + 1;
    let nodes: Vec<f64> = (0..d)
        .map(|i| 0.5 * (1.0 - ((2 * i + 1) as f64 * std::f64::consts::PI / (2 * d) as f64).cos()))
        .collect();
    let a: Vec<Vec<f64>> = nodes
        .iter()
        .map(|t| (0..d).map(|j| t.powi(j as i32)).collect())
        .collect();
    let y: Vec<f64> = nodes.iter().map(|t| g_eval(t * span, m).unwrap().value).collect();
    let c = solve_dense(a, y);
    c.iter().enumerate().map(|(j, cj)| cj / span.powi(j as i32)).collect()
}
