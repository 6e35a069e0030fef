//! Closed-form equilibrium counts and bounds, in exact integer arithmetic,
//! and the symmetric parameter families they describe.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::model::ModelInput;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Theorem,
    Conjecture,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub n: usize,
    pub q: Option<BigRational>,
    pub count: BigUint,
    /// A tangential root is counted twice where the formula says so.
    pub multiplicity_counted: bool,
    pub basis: Basis,
}

impl CountReport {
    /// `true` when the count includes a double root, so it may exceed the
    /// number of distinct equilibria (even family at integer `q`).
    pub fn has_tangency(&self) -> bool {
        self.multiplicity_counted && self.q.as_ref().is_some_and(|q| q.is_integer())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn pow2(n: usize) -> BigUint {
    BigUint::one() << n
}

/// `2ⁿ − 2`: the bound on the number of equilibria, and the generic number of
/// complex solutions modulo shift.
pub fn upper_bound(n: usize) -> BigUint {
    assert!(n >= 2);
    pow2(n) - BigUint::from(2u8)
}

/// `2ⁿ − Σ_{−q<ℓ<q} C(n, n/2+ℓ)` for `ω = (nq,…,nq,−nq,…,−nq)`, `k = (n,…,n)`,
/// counting a tangential root at integer `q` twice.
pub fn even_count(n: usize, q: &BigRational) -> Result<CountReport> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Parity(n));
    }
    if !q.is_positive() {
        return Err(Error::Range {
            q: q.to_string(),
            bound: 0.0,
        });
    }
    let half = (n / 2) as i64;
    // integers ℓ with −q < ℓ < q
    let ceil = q.ceil().to_integer();
    let reach = (ceil - BigInt::one()).to_i64().unwrap_or(i64::MAX).min(half);
    let mut excluded = BigUint::zero();
    for l in -reach..=reach {
        excluded += binomial(n as u64, (half + l) as u64);
    }
    Ok(CountReport {
        n,
        q: Some(q.clone()),
        count: pow2(n) - excluded,
        multiplicity_counted: true,
        basis: Basis::Theorem,
    })
}

/// `2ⁿ − C(n, n/2)`, attained by the even family for every `0 < q < 1`.
pub fn even_max(n: usize) -> Result<BigUint> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Parity(n));
    }
    Ok(pow2(n) - binomial(n as u64, (n / 2) as u64))
}

/// Exact test of `0 < q < q₀` with `q₀ = √(414 − 66√33)/16`.
pub fn below_q0(q: &BigRational) -> bool {
    if !q.is_positive() {
        return false;
    }
    // q < q₀  ⇔  256q² < 414 − 66√33  ⇔  66√33 < 414 − 256q²
    let rhs = BigRational::from_integer(414.into()) - BigRational::from_integer(256.into()) * q * q;
    if !rhs.is_positive() {
        return false;
    }
    BigRational::from_integer((66 * 66 * 33).into()) < &rhs * &rhs
}

/// `2ⁿ − C(n−1, (n−1)/2)` for `ω = (nq,…,nq,−nq,…,−nq,0)`, `k = (n,…,n)`,
/// valid for `0 < q < q₀`.
pub fn odd_count(n: usize, q: &BigRational) -> Result<CountReport> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Parity(n));
    }
    if !below_q0(q) {
        return Err(Error::Range {
            q: q.to_string(),
            bound: constants().q0,
        });
    }
    Ok(CountReport {
        n,
        q: Some(q.clone()),
        count: pow2(n) - binomial((n - 1) as u64, ((n - 1) / 2) as u64),
        multiplicity_counted: false,
        basis: Basis::Theorem,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Constants {
    pub q0: f64,
    pub r0: f64,
}

impl Constants {
    /// `R₀ + √R₀ − 2√(R₀ − q₀²)`, zero in exact arithmetic.
    pub fn identity_residual(&self) -> f64 {
        self.r0 + self.r0.sqrt() - 2.0 * (self.r0 - self.q0 * self.q0).sqrt()
    }
}

/// `q₀ = √(414 − 66√33)/16` and `R₀ = (21 − 3√33)/8`.
pub fn constants() -> Constants {
    let s = 33f64.sqrt();
    let c = Constants {
        q0: (414.0 - 66.0 * s).sqrt() / 16.0,
        r0: (21.0 - 3.0 * s) / 8.0,
    };
    debug_assert!(c.identity_residual().abs() <= 1e-12);
    c
}

/// Conjectured maximum number of equilibria for `n` oscillators.
pub fn conjectured_max(n: usize) -> CountReport {
    assert!(n >= 2);
    let count = if n % 2 == 0 {
        pow2(n) - binomial(n as u64, (n / 2) as u64)
    } else {
        pow2(n) - binomial((n - 1) as u64, ((n - 1) / 2) as u64)
    };
    CountReport {
        n,
        q: None,
        count,
        multiplicity_counted: false,
        basis: Basis::Conjecture,
    }
}

/// `conjectured_max(n) / (2ⁿ − 2)` as an exact fraction.
pub fn conjectured_ratio(n: usize) -> BigRational {
    BigRational::new(
        BigInt::from(conjectured_max(n).count),
        BigInt::from(upper_bound(n)),
    )
}

fn rational_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

/// The symmetric family: `k = (n,…,n)` and `ω` with `⌊n/2⌋` entries `nq`,
/// `⌊n/2⌋` entries `−nq`, and a trailing `0` when `n` is odd.
pub fn special_case_model(n: usize, q: &BigRational, parity: Parity) -> Result<ModelInput> {
    let odd = n.is_odd();
    match parity {
        Parity::Even if odd || n < 2 => return Err(Error::Parity(n)),
        Parity::Odd if !odd || n < 3 => return Err(Error::Parity(n)),
        _ => {}
    }
    let a = rational_to_f64(&(q * BigRational::from_integer(BigInt::from(n))));
    let half = n / 2;
    let mut omega = vec![a; half];
    omega.extend(std::iter::repeat(-a).take(half));
    if odd {
        omega.push(0.0);
    }
    ModelInput::new(omega, vec![n as f64; n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(upper_bound(2), u(2));
        assert_eq!(upper_bound(4), u(14));
        assert_eq!(upper_bound(10), u(1022));
        assert_eq!(upper_bound(12), u(4094));
    }

    #[test]
    fn even_counts() {
        assert_eq!(even_count(4, &q(1, 2)).unwrap().count, u(10));
        assert_eq!(even_count(4, &q(3, 2)).unwrap().count, u(2));
        assert_eq!(even_count(4, &q(5, 2)).unwrap().count, u(0));
        assert_eq!(even_count(3, &q(1, 2)), Err(Error::Parity(3)));
        // integer q keeps the tangential pair
        let r = even_count(4, &q(1, 1)).unwrap();
        assert_eq!(r.count, u(10));
        assert!(r.has_tangency());
        assert!(!even_count(4, &q(1, 2)).unwrap().has_tangency());
    }

    #[test]
    fn even_maxima() {
        assert_eq!(even_max(2).unwrap(), u(2));
        assert_eq!(even_max(4).unwrap(), u(10));
        assert_eq!(even_max(6).unwrap(), u(44));
        assert_eq!(even_max(5), Err(Error::Parity(5)));
    }

    #[test]
    fn odd_counts() {
        assert_eq!(odd_count(3, &q(1, 5)).unwrap().count, u(6));
        assert_eq!(odd_count(5, &q(3, 10)).unwrap().count, u(26));
        assert!(matches!(odd_count(3, &q(2, 5)), Err(Error::Range { .. })));
        assert_eq!(odd_count(4, &q(1, 5)), Err(Error::Parity(4)));
    }

    #[test]
    fn q0_boundary_is_exact() {
        let c = constants();
        assert!(below_q0(&q(3690, 10000)));
        assert!(!below_q0(&q(3691, 10000)));
        assert!(c.q0 > 0.3690 && c.q0 < 0.3691);
    }

    #[test]
    fn constants_values() {
        let c = constants();
        assert_eq!(format!("{:.4}", c.q0), "0.3690");
        assert_eq!(format!("{:.4}", c.r0), "0.4708");
        assert!(c.identity_residual().abs() <= 1e-12);
    }

    #[test]
    fn conjectured_values() {
        assert_eq!(conjectured_max(4).count, u(10));
        assert_eq!(conjectured_max(3).count, u(6));
        assert_eq!(conjectured_max(7).count, u(108));
        assert_eq!(conjectured_max(2).count, u(2));
        assert_eq!(conjectured_max(7).basis, Basis::Conjecture);
    }

    #[test]
    fn family_constructions() {
        let m = special_case_model(4, &q(1, 2), Parity::Even).unwrap();
        assert_eq!(m.omega, vec![2.0, 2.0, -2.0, -2.0]);
        assert_eq!(m.k, vec![4.0; 4]);
        let m = special_case_model(3, &q(1, 5), Parity::Odd).unwrap();
        assert_eq!(m.omega, vec![0.6, -0.6, 0.0]);
        assert_eq!(m.k, vec![3.0; 3]);
        assert_eq!(m.omega.iter().sum::<f64>(), 0.0);
        assert!(special_case_model(4, &q(1, 2), Parity::Odd).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), u(6));
        assert_eq!(binomial(40, 20), u(137846528820));
        assert_eq!(binomial(3, 5), u(0));
    }
}
