//! Sound tests that rule out sign patterns without solving, and the
//! sequential skip rule for models with nonincreasing couplings.
//!
//! Every test here is evaluated with outward rounding so that a pattern is
//! only eliminated when the elimination holds for the exact data.

use crate::conjugate::SignPattern;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::model::NormalizedModel;

/// Interval that holds every positive root of `f_σ`:
/// `[(ω_n/k_n)², ((1/n) Σ_{σ_μ=+1} k_μ)²]`, widened by one ulp on each side.
/// Empty when the lower end exceeds the upper end.
pub fn root_bracket(sigma: &SignPattern, m: &NormalizedModel) -> Interval {
    let lower = m.boundary_interval();
    let plus = sigma
        .signs()
        .iter()
        .zip(&m.k)
        .filter(|(s, _)| **s > 0)
        .fold(Interval::point(0.0), |acc, (_, &k)| acc + Interval::point(k));
    let upper = plus.div(Interval::point(m.n() as f64)).sqr();
    if lower.lo() > upper.hi() {
        return Interval::EMPTY;
    }
    Interval::new(lower.lo(), upper.hi()).widen_ulp()
}

/// `true` when every partial sum `s_ℓ = Σ_{μ≤ℓ} σ_μ k_μ` is `≤ 0`; then `f_σ`
/// has no positive root.
pub fn partial_sum_prune(sigma: &SignPattern, m: &NormalizedModel) -> bool {
    let mut s = Interval::point(0.0);
    for (mu, &k) in m.k.iter().enumerate() {
        s = if sigma.get(mu) > 0.0 {
            s + Interval::point(k)
        } else {
            s - Interval::point(k)
        };
        if s.hi() > 0.0 {
            return false;
        }
    }
    true
}

/// Swap test: if `f_σ` is rootless with `σ_μ = +1`, `σ_ν = −1`, and the two
/// inequalities `(k_μ² − k_ν²) B ≥ ω_μ² − ω_ν²` hold for `B` the domain
/// boundary and `B = ((1/n)Σk)²`, then the pattern with `μ` and `ν` swapped
/// is rootless too. `mu`, `nu` are 0-based sorted indices.
pub fn swap_condition(m: &NormalizedModel, mu: usize, nu: usize) -> bool {
    let dk = Interval::point(m.k[mu]).sqr() - Interval::point(m.k[nu]).sqr();
    let dw = Interval::point(m.omega[mu]).sqr() - Interval::point(m.omega[nu]).sqr();
    let low = m.boundary_interval();
    let total = m
        .k
        .iter()
        .fold(Interval::point(0.0), |acc, &k| acc + Interval::point(k));
    let high = total.div(Interval::point(m.n() as f64)).sqr();
    // both products are linear in B, so checking the endpoints of the
    // enclosures is enough
    let holds = |b: Interval| {
        let lhs = dk * b;
        lhs.lo() >= dw.hi()
    };
    holds(low) && holds(high)
}

/// Patterns implied rootless by [`swap_condition`] from a rootless `sigma`.
pub fn swap_implied(sigma: &SignPattern, m: &NormalizedModel) -> Vec<SignPattern> {
    let n = m.n();
    let mut out = Vec::new();
    for mu in 0..n {
        if sigma.get(mu) < 0.0 {
            continue;
        }
        for nu in 0..n {
            if sigma.get(nu) > 0.0 || !swap_condition(m, mu, nu) {
                continue;
            }
            out.push(sigma.with_sign(mu, -1).with_sign(nu, 1));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Skip {
    /// Next code that still needs to be examined.
    Next(u64),
    /// Every remaining smaller code is rootless.
    Terminate,
}

/// Next code to visit after `iota` was shown to be rootless, for a model
/// whose sorted couplings are nonincreasing.
///
/// With no `−1` or a single `−1`, all smaller codes are rootless. Otherwise,
/// with `ℓ` the position of the second-to-last `−1`, every code that keeps
/// positions `1..=ℓ` and lowers the tail is rootless, so the walk resumes just
/// below the code with the tail cleared.
pub fn skip_decrement(iota: u64, n: usize, ic4: bool) -> Result<Skip> {
    if !ic4 {
        return Err(Error::SkipWithoutIc4);
    }
    assert!(n >= 1 && n <= crate::conjugate::MAX_OSCILLATORS);
    let full = (1u64 << n) - 1;
    assert!(iota <= full);
    let zeros = full & !iota;
    if zeros.count_ones() <= 1 {
        return Ok(Skip::Terminate);
    }
    // lowest zero bit is the last −1; the next one up is the penultimate
    let last = zeros.trailing_zeros();
    let rest = zeros & !(1u64 << last);
    let penultimate = rest.trailing_zeros();
    let kept = iota & !((1u64 << penultimate) - 1);
    Ok(match kept.checked_sub(1) {
        Some(next) => Skip::Next(next),
        None => Skip::Terminate,
    })
}
