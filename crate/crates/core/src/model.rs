//! Model parameters, input-condition checks, the sorted working form of a
//! model, and the equilibrium record with its residual and phase-shift
//! normalisation.

use std::f64::consts::PI;
use std::fmt;

use crate::conjugate::SignPattern;
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Default relative tolerance on `Σω = 0`.
pub const DEFAULT_SUM_TOL: f64 = 1e-9;

/// Raw parameters: natural frequencies `omega` and coupling amplitudes `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelInput {
    pub omega: Vec<f64>,
    pub k: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    /// Frequencies sum to zero within tolerance.
    pub ic1: bool,
    /// Some frequency is nonzero.
    pub ic2: bool,
    /// All couplings are positive (the ordering is produced by normalisation).
    pub ic3: bool,
    /// Couplings are nonincreasing once sorted by `|ω/k|`.
    pub ic4: bool,
    pub omega_sum: f64,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.ic1 && self.ic2 && self.ic3
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "ok" } else { "FAILED" };
        write!(
            f,
            "IC1 (sum of omega = 0, got {:e}): {}; IC2 (omega nonzero): {}; IC3 (k > 0): {}; IC4 (k nonincreasing after sort): {}",
            self.omega_sum,
            mark(self.ic1),
            mark(self.ic2),
            mark(self.ic3),
            if self.ic4 { "yes" } else { "no" }
        )
    }
}

impl ModelInput {
    pub fn new(omega: Vec<f64>, k: Vec<f64>) -> Result<Self> {
        if omega.len() != k.len() {
            return Err(Error::LengthMismatch {
                omega: omega.len(),
                k: k.len(),
            });
        }
        if omega.len() < 2 {
            return Err(Error::TooFew(omega.len()));
        }
        Ok(ModelInput { omega, k })
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }

    pub fn validate(&self, sum_tol: f64) -> ValidationReport {
        let sum: f64 = self.omega.iter().sum();
        let norm = self.omega.iter().fold(0.0f64, |m, w| m.max(w.abs()));
        let ic1 = sum.abs() <= sum_tol * norm.max(1.0);
        let ic2 = self.omega.iter().any(|&w| w != 0.0);
        let ic3 = self.k.iter().all(|&k| k > 0.0 && k.is_finite()) && self.omega.iter().all(|w| w.is_finite());
        let ic4 = ic3 && sorted_order(&self.omega, &self.k).windows(2).all(|p| self.k[p[0]] >= self.k[p[1]]);
        ValidationReport {
            ic1,
            ic2,
            ic3,
            ic4,
            omega_sum: sum,
        }
    }

    /// Validates with `sum_tol` and normalises, or reports which condition failed.
    pub fn checked(&self, sum_tol: f64) -> Result<NormalizedModel> {
        let report = self.validate(sum_tol);
        if !report.is_valid() {
            return Err(Error::Invalid(report.to_string()));
        }
        Ok(self.normalize())
    }

    /// Copy with the mean frequency subtracted, forcing `Σω ≈ 0`.
    pub fn with_mean_removed(&self) -> ModelInput {
        let mean = self.omega.iter().sum::<f64>() / self.n() as f64;
        ModelInput {
            omega: self.omega.iter().map(|w| w - mean).collect(),
            k: self.k.clone(),
        }
    }

    pub fn normalize(&self) -> NormalizedModel {
        let perm = sorted_order(&self.omega, &self.k);
        let omega: Vec<f64> = perm.iter().map(|&i| self.omega[i]).collect();
        let k: Vec<f64> = perm.iter().map(|&i| self.k[i]).collect();
        let ic4 = k.windows(2).all(|p| p[0] >= p[1]);
        NormalizedModel { omega, k, perm, ic4 }
    }

    pub fn negated(&self) -> ModelInput {
        ModelInput {
            omega: self.omega.iter().map(|w| -w).collect(),
            k: self.k.clone(),
        }
    }
}

/// Stable ascending order of `|ω/k|`.
fn sorted_order(omega: &[f64], k: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..omega.len()).collect();
    idx.sort_by(|&a, &b| (omega[a] / k[a]).abs().total_cmp(&(omega[b] / k[b]).abs()));
    idx
}

/// Model with oscillators sorted so that `|ω₁/k₁| ≤ … ≤ |ω_n/k_n|`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedModel {
    pub omega: Vec<f64>,
    pub k: Vec<f64>,
    /// `perm[i]` is the original index of sorted oscillator `i`.
    pub perm: Vec<usize>,
    pub ic4: bool,
}

impl NormalizedModel {
    pub fn n(&self) -> usize {
        self.omega.len()
    }

    /// Domain boundary `(ω_n/k_n)²` in floating point.
    pub fn boundary(&self) -> f64 {
        let n = self.n();
        let r = self.omega[n - 1] / self.k[n - 1];
        r * r
    }

    /// Rigorous enclosure of the domain boundary.
    pub fn boundary_interval(&self) -> Interval {
        let n = self.n();
        Interval::point(self.omega[n - 1]).div(Interval::point(self.k[n - 1])).sqr()
    }

    /// Reorders a sorted-index vector back to the original indexing.
    pub fn denormalize<T: Clone>(&self, sorted: &[T]) -> Vec<T> {
        let mut out = sorted.to_vec();
        for (i, &orig) in self.perm.iter().enumerate() {
            out[orig] = sorted[i].clone();
        }
        out
    }

    pub fn to_input(&self) -> ModelInput {
        ModelInput {
            omega: self.denormalize(&self.omega),
            k: self.denormalize(&self.k),
        }
    }
}

/// An equilibrium in the phase-shift normal form, in original indexing.
#[derive(Clone, Debug, PartialEq)]
pub struct Equilibrium {
    pub theta: Vec<f64>,
    /// Squared order parameter.
    pub r: f64,
    pub sigma: SignPattern,
    pub residual: f64,
    pub certified: bool,
}

/// Reduces an angle to `(-π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Signed distance between two angles on the circle, in `(-π, π]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    wrap_angle(a - b)
}

/// `max_ν |ω_ν − (1/n) Σ_μ k_ν k_μ sin(θ_ν − θ_μ)|`.
pub fn residual(theta: &[f64], input: &ModelInput) -> f64 {
    assert_eq!(theta.len(), input.n());
    let n = input.n() as f64;
    (0..input.n())
        .map(|v| {
            let coupling: f64 = (0..input.n())
                .map(|m| input.k[v] * input.k[m] * (theta[v] - theta[m]).sin())
                .sum();
            (input.omega[v] - coupling / n).abs()
        })
        .fold(0.0, f64::max)
}

/// Rotates `theta` so that `Σ k_μ e^{iθ_μ}` is real and positive.
pub fn oc1_shift(theta: &[f64], k: &[f64]) -> Result<Vec<f64>> {
    assert_eq!(theta.len(), k.len());
    let (re, im) = theta
        .iter()
        .zip(k)
        .fold((0.0, 0.0), |(re, im), (t, k)| (re + k * t.cos(), im + k * t.sin()));
    let scale: f64 = k.iter().sum();
    if re.hypot(im) <= 1e-12 * scale {
        return Err(Error::ZeroOrderParameter);
    }
    let phi = -im.atan2(re);
    Ok(theta.iter().map(|t| wrap_angle(t + phi)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(omega: &[f64], k: &[f64]) -> ModelInput {
        ModelInput::new(omega.to_vec(), k.to_vec()).unwrap()
    }

    #[test]
    fn validate_worked_example() {
        let r = input(&[4.0, -4.0], &[5.0, 2.0]).validate(DEFAULT_SUM_TOL);
        assert!(r.ic1 && r.ic2 && r.ic3 && r.ic4);
    }

    #[test]
    fn validate_failures() {
        let r = input(&[0.0, 0.0], &[1.0, 1.0]).validate(DEFAULT_SUM_TOL);
        assert!(!r.ic2 && !r.is_valid());
        let r = input(&[1.0, -0.5], &[1.0, 1.0]).validate(DEFAULT_SUM_TOL);
        assert!(!r.ic1);
        let r = input(&[1.0, -1.0], &[1.0, 0.0]).validate(DEFAULT_SUM_TOL);
        assert!(!r.ic3);
        assert!(matches!(ModelInput::new(vec![1.0], vec![1.0]), Err(Error::TooFew(1))));
        assert!(matches!(
            ModelInput::new(vec![1.0, -1.0], vec![1.0]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn normalize_sorts_and_records_perm() {
        let m = input(&[-4.0, 4.0], &[2.0, 5.0]).normalize();
        assert_eq!(m.omega, vec![4.0, -4.0]);
        assert_eq!(m.k, vec![5.0, 2.0]);
        assert_eq!(m.perm, vec![1, 0]);
        assert!(m.ic4);
        assert_eq!(m.to_input(), input(&[-4.0, 4.0], &[2.0, 5.0]));
    }

    #[test]
    fn normalize_identity_and_stable_ties() {
        let m = input(&[4.0, -4.0], &[5.0, 2.0]).normalize();
        assert_eq!(m.perm, vec![0, 1]);
        let m = input(&[1.0, -2.0, -1.0, 2.0], &[1.0, 1.0, 1.0, 1.0]).normalize();
        assert_eq!(m.perm, vec![0, 2, 1, 3]);
    }

    #[test]
    fn ic4_flag_detects_increasing_k() {
        let m = input(&[1.0, -1.25, 2.0, -1.75], &[2.2, 1.86, 2.1, 1.8]).normalize();
        assert_eq!(m.perm, vec![0, 1, 2, 3]);
        assert!(!m.ic4);
    }

    #[test]
    fn mean_removal_repairs_sum() {
        let fixed = input(&[1.0, -0.5], &[1.0, 1.0]).with_mean_removed();
        assert!(fixed.validate(DEFAULT_SUM_TOL).ic1);
    }

    #[test]
    fn residual_of_published_angles() {
        let r = residual(&[0.2526, -0.6747], &input(&[4.0, -4.0], &[5.0, 2.0]));
        assert!(r < 5e-4, "{r}");
    }

    #[test]
    fn residual_trivial_solution_is_zero() {
        let r = residual(&[0.7; 5], &input(&[0.0; 5], &[1.0, 2.0, 3.0, 4.0, 5.0]));
        assert_eq!(r, 0.0);
    }

    #[test]
    fn wrap_convention() {
        assert_eq!(wrap_angle(-PI), PI);
        assert_eq!(wrap_angle(PI), PI);
        assert!((wrap_angle(3.0 * PI) - PI).abs() < 1e-15);
        assert_eq!(wrap_angle(0.0), 0.0);
    }

    #[test]
    fn oc1_shift_cases() {
        let t = oc1_shift(&[0.0, 0.0], &[1.0, 1.0]).unwrap();
        assert_eq!(t, vec![0.0, 0.0]);
        let t = oc1_shift(&[PI / 2.0, PI / 2.0], &[1.0, 1.0]).unwrap();
        assert!(t.iter().all(|x| x.abs() < 1e-15));
        assert_eq!(oc1_shift(&[0.0, PI], &[1.0, 1.0]), Err(Error::ZeroOrderParameter));
    }
}
