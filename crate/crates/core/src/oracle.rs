//! Reference solver without interval certification or pruning: dense
//! sampling, sign-change bisection and a tangency probe. Used to cross-check
//! the certified pipeline on small models.

use rayon::prelude::*;

use crate::conjugate::{Conjugates, SignPattern};
use crate::error::{Error, Result};
use crate::model::{residual, Equilibrium, NormalizedModel};
use crate::solver::{deduplicate, reconstruct_theta};

pub const ORACLE_MAX_N: usize = 10;

/// Tangency probe threshold on `|f_σ|`.
pub const CLUSTER_THRESHOLD: f64 = 1e-8;

pub fn default_grid(n: usize) -> usize {
    if n <= 6 {
        100_000
    } else {
        10_000
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleRoots {
    /// Sign-change roots refined by bisection.
    pub roots: Vec<f64>,
    /// Local minima of `|f_σ|` below [`CLUSTER_THRESHOLD`] without a sign
    /// change: suspected even-multiplicity roots.
    pub suspected_clusters: Vec<f64>,
}

impl OracleRoots {
    pub fn all(&self) -> impl Iterator<Item = f64> + '_ {
        self.roots.iter().chain(&self.suspected_clusters).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty() && self.suspected_clusters.is_empty()
    }
}

/// Search range shared by every pattern: `[(ω_n/k_n)², ((1/n)Σk)²]`.
///
/// Deliberately independent of the per-pattern bracket so that the oracle can
/// audit bracket-based pruning.
pub fn search_range(m: &NormalizedModel) -> (f64, f64) {
    let lo = m.boundary();
    let s = m.k.iter().sum::<f64>() / m.n() as f64;
    let hi = s * s;
    (lo.next_down(), hi.next_up())
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, fa: f64, tol: f64) -> f64 {
    let mut fa_sign = fa.signum();
    while b - a > tol {
        let c = 0.5 * (a + b);
        if c <= a || c >= b {
            break;
        }
        let fc = f(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fa_sign {
            a = c;
            fa_sign = fc.signum();
        } else {
            b = c;
        }
    }
    0.5 * (a + b)
}

fn minimise_abs<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    // golden-section search on |f|
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c).abs(), f(d).abs());
    for _ in 0..200 {
        if b - a <= 1e-15 * b.abs().max(1.0) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c).abs();
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d).abs();
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Approximate positive roots of `f_σ` by uniform sampling on
/// [`search_range`] with `grid_points` samples.
pub fn brute_force_roots(sigma: &SignPattern, m: &NormalizedModel, grid_points: usize) -> OracleRoots {
    let conj = Conjugates::new(m);
    brute_force_roots_with(&conj, sigma, grid_points)
}

fn brute_force_roots_with(conj: &Conjugates<'_>, sigma: &SignPattern, grid_points: usize) -> OracleRoots {
    assert!(grid_points >= 2);
    let branch = conj.branch(sigma);
    let f = |r: f64| branch.eval(r.max(conj.model.boundary())).unwrap_or(f64::NAN);
    let (lo, hi) = search_range(conj.model);
    let mut out = OracleRoots::default();
    if !(lo < hi) {
        return out;
    }
    let tol = 1e-12 * hi.max(1.0);
    let step = (hi - lo) / (grid_points - 1) as f64;
    let xs: Vec<f64> = (0..grid_points).map(|i| lo + step * i as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();

    for i in 0..grid_points {
        if fs[i] == 0.0 {
            out.roots.push(xs[i]);
            continue;
        }
        if i + 1 < grid_points && fs[i + 1] != 0.0 && fs[i].signum() != fs[i + 1].signum() {
            out.roots.push(bisect(&f, xs[i], xs[i + 1], fs[i], tol));
        }
    }

    for i in 1..grid_points.saturating_sub(1) {
        let (a, b, c) = (fs[i - 1].abs(), fs[i].abs(), fs[i + 1].abs());
        let no_change = fs[i - 1].signum() == fs[i].signum() && fs[i].signum() == fs[i + 1].signum();
        if !(no_change && b <= a && b <= c && b > 0.0) {
            continue;
        }
        let (x, v) = minimise_abs(&f, xs[i - 1], xs[i + 1]);
        if v < CLUSTER_THRESHOLD && !out.roots.iter().any(|r| (r - x).abs() <= 2.0 * step) {
            out.suspected_clusters.push(x);
        }
    }
    out
}

/// Every equilibrium found by the oracle, over all `2ⁿ` patterns with no
/// pruning. Results are never marked certified.
pub fn brute_force_equilibria(m: &NormalizedModel, grid_points: usize) -> Result<Vec<Equilibrium>> {
    let n = m.n();
    if n > ORACLE_MAX_N {
        return Err(Error::SizeLimit { n, max: ORACLE_MAX_N });
    }
    let conj = Conjugates::new(m);
    let input = m.to_input();
    let found: Vec<Vec<Equilibrium>> = (0..1u64 << n)
        .into_par_iter()
        .map(|code| {
            let sigma = SignPattern::from_code(code, n);
            let roots = brute_force_roots_with(&conj, &sigma, grid_points);
            roots
                .all()
                .filter_map(|r| {
                    let theta = reconstruct_theta(r, &sigma, m).ok()?;
                    let theta = m.denormalize(&theta);
                    let resid = residual(&theta, &input);
                    Some(Equilibrium {
                        theta,
                        r,
                        sigma: SignPattern::from_signs(m.denormalize(sigma.signs())),
                        residual: resid,
                        certified: false,
                    })
                })
                .collect()
        })
        .collect();
    Ok(deduplicate(found.into_iter().flatten().collect(), 1e-6, &m.k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelInput;

    fn example() -> NormalizedModel {
        ModelInput::new(vec![4.0, -4.0], vec![5.0, 2.0]).unwrap().normalize()
    }

    #[test]
    fn worked_example_patterns() {
        let m = example();
        let r = brute_force_roots(&SignPattern::from_signs(vec![1, 1]), &m, 10_000);
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0] - 10.25).abs() < 1e-9);
        assert!(brute_force_roots(&SignPattern::from_signs(vec![-1, 1]), &m, 10_000).is_empty());
        assert_eq!(brute_force_equilibria(&m, 10_000).unwrap().len(), 2);
    }

    #[test]
    fn tangency_is_reported_as_cluster() {
        // n = 2 symmetric family at q = 1: double root at R = 2
        let m = ModelInput::new(vec![2.0, -2.0], vec![2.0, 2.0]).unwrap().normalize();
        let r = brute_force_roots(&SignPattern::from_signs(vec![1, 1]), &m, 100_000);
        assert!(r.roots.is_empty() || r.roots.iter().all(|x| (x - 2.0).abs() < 1e-3));
        let all: Vec<f64> = r.all().collect();
        assert!(!all.is_empty());
        assert!(all.iter().all(|x| (x - 2.0).abs() < 1e-3), "{r:?}");
    }

    #[test]
    fn size_limit() {
        let m = ModelInput::new(vec![1.0; 11], vec![1.0; 11]).unwrap().normalize();
        assert!(matches!(brute_force_equilibria(&m, 1000), Err(Error::SizeLimit { .. })));
    }
}
