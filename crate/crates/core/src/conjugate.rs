//! Sign patterns and the decoupled radical functions
//! `f_σ(R) = −R + (1/n) Σ σ_μ √(k_μ² R − ω_μ²)`,
//! in point, derivative and interval form, plus the conjugate product `g`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::model::NormalizedModel;

/// Largest number of oscillators whose patterns fit a `u64` code.
pub const MAX_OSCILLATORS: usize = 63;

/// Largest `n` accepted by [`g_eval`].
pub const G_EVAL_MAX_N: usize = 12;

/// A vector of signs in `{−1, +1}ⁿ`.
///
/// The integer code reads the pattern as a binary number with `σ₁` as the
/// most significant bit and `+1 ↦ 1`, `−1 ↦ 0`; so `(−1,…,−1) ↦ 0` and
/// `(+1,…,+1) ↦ 2ⁿ − 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignPattern {
    signs: Vec<i8>,
}

impl SignPattern {
    pub fn from_signs(signs: Vec<i8>) -> Self {
        assert!(signs.len() <= MAX_OSCILLATORS);
        assert!(signs.iter().all(|&s| s == 1 || s == -1), "signs must be ±1");
        SignPattern { signs }
    }

    pub fn from_code(code: u64, n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_OSCILLATORS);
        assert!(code < (1u64 << n), "code {code} out of range for n = {n}");
        let signs = (0..n)
            .map(|mu| if code >> (n - 1 - mu) & 1 == 1 { 1 } else { -1 })
            .collect();
        SignPattern { signs }
    }

    pub fn all_plus(n: usize) -> Self {
        SignPattern { signs: vec![1; n] }
    }

    pub fn code(&self) -> u64 {
        self.signs
            .iter()
            .fold(0u64, |acc, &s| (acc << 1) | u64::from(s == 1))
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn get(&self, mu: usize) -> f64 {
        f64::from(self.signs[mu])
    }

    pub fn minus_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }

    /// Same pattern with every sign reversed.
    pub fn negated(&self) -> Self {
        SignPattern {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    pub fn with_sign(&self, mu: usize, s: i8) -> Self {
        let mut signs = self.signs.clone();
        signs[mu] = s;
        SignPattern::from_signs(signs)
    }
}

impl fmt::Debug for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *s > 0 { "+1" } else { "-1" })?;
        }
        write!(f, ")")
    }
}

/// Per-model constants shared by all branches: squared couplings and
/// frequencies as exact-ish floats and as rigorous enclosures.
#[derive(Clone, Debug)]
pub struct Conjugates<'a> {
    pub model: &'a NormalizedModel,
    k2: Vec<f64>,
    w2: Vec<f64>,
    k2_iv: Vec<Interval>,
    w2_iv: Vec<Interval>,
    boundary: Interval,
}

impl<'a> Conjugates<'a> {
    pub fn new(model: &'a NormalizedModel) -> Self {
        Conjugates {
            model,
            k2: model.k.iter().map(|k| k * k).collect(),
            w2: model.omega.iter().map(|w| w * w).collect(),
            k2_iv: model.k.iter().map(|&k| Interval::point(k).sqr()).collect(),
            w2_iv: model.omega.iter().map(|&w| Interval::point(w).sqr()).collect(),
            boundary: model.boundary_interval(),
        }
    }

    pub fn branch<'b>(&'b self, sigma: &'b SignPattern) -> Branch<'b, 'a> {
        assert_eq!(sigma.n(), self.model.n());
        Branch { c: self, sigma }
    }

    pub fn boundary(&self) -> Interval {
        self.boundary
    }

    fn radicand(&self, mu: usize, r: f64) -> Result<f64> {
        let kr = self.k2[mu] * r;
        let rad = kr - self.w2[mu];
        if rad >= 0.0 {
            return Ok(rad);
        }
        // exact-zero radicands at the boundary come back slightly negative
        let clip = 4.0 * f64::EPSILON * kr.abs().max(self.w2[mu]);
        if rad >= -clip {
            Ok(0.0)
        } else {
            Err(Error::Domain {
                r,
                boundary: self.model.boundary(),
            })
        }
    }
}

/// `f_σ` for one fixed sign pattern.
#[derive(Clone, Copy, Debug)]
pub struct Branch<'b, 'a> {
    c: &'b Conjugates<'a>,
    sigma: &'b SignPattern,
}

impl Branch<'_, '_> {
    pub fn eval(&self, r: f64) -> Result<f64> {
        let n = self.c.model.n();
        let mut sum = 0.0;
        for mu in 0..n {
            sum += self.sigma.get(mu) * self.c.radicand(mu, r)?.sqrt();
        }
        Ok(-r + sum / n as f64)
    }

    pub fn deriv(&self, r: f64) -> Result<f64> {
        let n = self.c.model.n();
        let mut sum = 0.0;
        for mu in 0..n {
            let rad = self.c.radicand(mu, r)?;
            if rad <= 0.0 {
                return Err(Error::Domain {
                    r,
                    boundary: self.c.model.boundary(),
                });
            }
            sum += self.sigma.get(mu) * self.c.k2[mu] / (2.0 * rad.sqrt());
        }
        Ok(-1.0 + sum / n as f64)
    }

    fn clip_to_domain(&self, x: Interval) -> Result<Interval> {
        let x = x.intersect(Interval::new(self.c.boundary.lo(), f64::INFINITY));
        if x.is_empty() {
            Err(Error::EmptyDomain)
        } else {
            Ok(x)
        }
    }

    /// Enclosure of `f_σ` over `x ∩ domain`.
    pub fn eval_interval(&self, x: Interval) -> Result<Interval> {
        let x = self.clip_to_domain(x)?;
        Ok(self.eval_clipped(x))
    }

    fn eval_clipped(&self, x: Interval) -> Interval {
        let n = self.c.model.n();
        let mut sum = Interval::point(0.0);
        for mu in 0..n {
            let root = (self.c.k2_iv[mu] * x - self.c.w2_iv[mu]).sqrt();
            sum = if self.sigma.signs[mu] > 0 { sum + root } else { sum - root };
        }
        -x + sum.div(Interval::point(n as f64))
    }

    /// Enclosure of `f_σ'` over `x ∩ domain`. Unbounded above or below when
    /// `x` touches a vanishing radicand.
    pub fn deriv_interval(&self, x: Interval) -> Result<Interval> {
        let x = self.clip_to_domain(x)?;
        Ok(self.deriv_clipped(x))
    }

    fn deriv_clipped(&self, x: Interval) -> Interval {
        let n = self.c.model.n();
        let mut sum = Interval::point(0.0);
        for mu in 0..n {
            let root = (self.c.k2_iv[mu] * x - self.c.w2_iv[mu]).sqrt();
            let term = if root.lo() <= 0.0 {
                let lo = self.c.k2_iv[mu].lo() / (2.0 * root.hi());
                Interval::new(lo.next_down().max(0.0), f64::INFINITY)
            } else {
                self.c.k2_iv[mu].div(root.scale(2.0))
            };
            sum = if self.sigma.signs[mu] > 0 { sum + term } else { sum - term };
        }
        Interval::point(-1.0) + sum.div(Interval::point(n as f64))
    }

    /// Interval extensions that treat points outside the domain as empty,
    /// for use with the interval Newton solver.
    pub fn f_ext(&self) -> impl Fn(Interval) -> Interval + '_ {
        move |x| self.clip_to_domain(x).map(|x| self.eval_clipped(x)).unwrap_or(Interval::EMPTY)
    }

    pub fn df_ext(&self) -> impl Fn(Interval) -> Interval + '_ {
        move |x| {
            self.clip_to_domain(x)
                .map(|x| self.deriv_clipped(x))
                .unwrap_or(Interval::ENTIRE)
        }
    }
}

pub fn f_sigma_eval(r: f64, sigma: &SignPattern, m: &NormalizedModel) -> Result<f64> {
    Conjugates::new(m).branch(sigma).eval(r)
}

pub fn f_sigma_deriv(r: f64, sigma: &SignPattern, m: &NormalizedModel) -> Result<f64> {
    Conjugates::new(m).branch(sigma).deriv(r)
}

pub fn f_sigma_interval(x: Interval, sigma: &SignPattern, m: &NormalizedModel) -> Result<Interval> {
    Conjugates::new(m).branch(sigma).eval_interval(x)
}

pub fn f_sigma_deriv_interval(x: Interval, sigma: &SignPattern, m: &NormalizedModel) -> Result<Interval> {
    Conjugates::new(m).branch(sigma).deriv_interval(x)
}

/// Value of `g(R) = ∏_σ f_σ(R)` with principal complex square roots.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GValue {
    pub value: f64,
    /// `|Im|` of the product; conjugate factors pair up, so this is rounding noise.
    pub imaginary_residue: f64,
}

/// Evaluates the conjugate product `g` at any real `R`. Validation aid only.
pub fn g_eval(r: f64, m: &NormalizedModel) -> Result<GValue> {
    let n = m.n();
    if n > G_EVAL_MAX_N {
        return Err(Error::SizeLimit {
            n,
            max: G_EVAL_MAX_N,
        });
    }
    let roots: Vec<Complex64> = m
        .k
        .iter()
        .zip(&m.omega)
        .map(|(k, w)| Complex64::new(k * k * r - w * w, 0.0).sqrt())
        .collect();
    let inv_n = 1.0 / n as f64;
    let mut prod = Complex64::new(1.0, 0.0);
    for code in 0..(1u64 << n) {
        let mut s = Complex64::new(0.0, 0.0);
        for (mu, root) in roots.iter().enumerate() {
            if code >> (n - 1 - mu) & 1 == 1 {
                s += root;
            } else {
                s -= root;
            }
        }
        prod *= s * inv_n - r;
    }
    Ok(GValue {
        value: prod.re,
        imaginary_residue: prod.im.abs(),
    })
}
