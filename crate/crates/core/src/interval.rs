//! Outward-rounded interval arithmetic over `f64` and an interval Newton
//! root isolator for smooth univariate functions.
//!
//! Endpoints are pushed one representable value outward after every
//! round-to-nearest operation, so every result encloses the exact real image
//! of its operands without touching the hardware rounding mode.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Closed interval `[lo, hi]` with extended-real endpoints.
///
/// The empty set is the single value [`Interval::EMPTY`]; every other value
/// satisfies `lo <= hi`.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    if x.is_nan() {
        f64::NEG_INFINITY
    } else {
        x.next_down()
    }
}

#[inline]
fn up(x: f64) -> f64 {
    if x.is_nan() {
        f64::INFINITY
    } else {
        x.next_up()
    }
}

/// Endpoint product with the interval convention `0 * inf = 0`.
#[inline]
fn mul_ep(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        0.0
    } else {
        a * b
    }
}

impl Interval {
    pub const EMPTY: Interval = Interval {
        lo: f64::INFINITY,
        hi: f64::NEG_INFINITY,
    };

    pub const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    /// Panics if `lo > hi` or either endpoint is NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "invalid interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn try_new(lo: f64, hi: f64) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(x: f64) -> Self {
        Self::new(x, x)
    }

    /// Smallest interval that certainly contains the real number `x` denotes
    /// after it went through one round-to-nearest step.
    pub fn around(x: f64) -> Self {
        Interval { lo: down(x), hi: up(x) }
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn is_empty(self) -> bool {
        !(self.lo <= self.hi)
    }

    pub fn is_bounded(self) -> bool {
        !self.is_empty() && self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn width(self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            self.hi - self.lo
        }
    }

    pub fn mid(self) -> f64 {
        debug_assert!(self.is_bounded());
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(self) -> bool {
        self.contains(0.0)
    }

    pub fn subset_of(self, other: Interval) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }

    /// `self ⊂ interior(other)`.
    pub fn interior_of(self, other: Interval) -> bool {
        !self.is_empty() && other.lo < self.lo && self.hi < other.hi
    }

    pub fn intersect(self, other: Interval) -> Interval {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Interval { lo, hi }
        } else {
            Self::EMPTY
        }
    }

    pub fn hull(self, other: Interval) -> Interval {
        if self.is_empty() {
            return other;
        }
        if other.is_empty() {
            return self;
        }
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Widens both endpoints by one representable value.
    pub fn widen_ulp(self) -> Interval {
        if self.is_empty() {
            return self;
        }
        Interval {
            lo: down(self.lo),
            hi: up(self.hi),
        }
    }

    pub fn recip(self) -> Interval {
        Interval::point(1.0).div(self)
    }

    /// Interval quotient. Returns [`Interval::ENTIRE`] when the divisor
    /// contains zero.
    pub fn div(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Self::EMPTY;
        }
        if rhs.contains_zero() {
            return Self::ENTIRE;
        }
        let q = [
            self.lo / rhs.lo,
            self.lo / rhs.hi,
            self.hi / rhs.lo,
            self.hi / rhs.hi,
        ];
        if q.iter().any(|x| x.is_nan()) {
            return Self::ENTIRE;
        }
        let lo = q.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = q.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: down(lo), hi: up(hi) }
    }

    /// Enclosure of `√(self ∩ [0, ∞))`; empty when `self` is entirely negative.
    pub fn sqrt(self) -> Interval {
        if self.is_empty() || self.hi < 0.0 {
            return Self::EMPTY;
        }
        let lo = if self.lo <= 0.0 {
            0.0
        } else {
            down(self.lo.sqrt()).max(0.0)
        };
        Interval { lo, hi: up(self.hi.sqrt()) }
    }

    pub fn sqr(self) -> Interval {
        if self.is_empty() {
            return self;
        }
        let a = self.lo.abs();
        let b = self.hi.abs();
        let (small, large) = if a <= b { (a, b) } else { (b, a) };
        let lo = if self.contains_zero() {
            0.0
        } else {
            down(small * small).max(0.0)
        };
        Interval { lo, hi: up(large * large) }
    }

    /// Multiplication by an exactly representable scalar.
    pub fn scale(self, c: f64) -> Interval {
        self * Interval::point(c)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Interval::EMPTY;
        }
        Interval {
            lo: down(self.lo + rhs.lo),
            hi: up(self.hi + rhs.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        self + (-rhs)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        if self.is_empty() {
            return self;
        }
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        if self.is_empty() || rhs.is_empty() {
            return Interval::EMPTY;
        }
        // a product with a zero factor is exact and needs no nudge
        let pairs = [(self.lo, rhs.lo), (self.lo, rhs.hi), (self.hi, rhs.lo), (self.hi, rhs.hi)];
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (a, b) in pairs {
            let p = mul_ep(a, b);
            let exact = a == 0.0 || b == 0.0;
            lo = lo.min(if exact { p } else { down(p) });
            hi = hi.max(if exact { p } else { up(p) });
        }
        Interval { lo, hi }
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Self {
        Interval::point(x)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "[empty]")
        } else {
            write!(f, "[{:e}, {:e}]", self.lo, self.hi)
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Binary operation selector for [`binary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
}

pub fn binary(op: BinaryOp, a: Interval, b: Interval) -> Interval {
    match op {
        BinaryOp::Add => a + b,
        BinaryOp::Sub => a - b,
        BinaryOp::Mul => a * b,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootStatus {
    /// The Newton operator mapped the isolator into its own interior with a
    /// derivative enclosure excluding zero: exactly one root inside.
    CertifiedUnique,
    /// Could not be resolved below the width tolerance; may hold zero, one or
    /// several roots (typically an even-multiplicity root).
    UnverifiedCluster,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Enclosure {
    pub isolator: Interval,
    pub status: RootStatus,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonConfig {
    /// Relative width tolerance, scaled by `max(1, |hi|)` of the search domain.
    pub width_tol: f64,
    /// Maximum number of subdivision / contraction steps along one branch.
    pub max_depth: usize,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        NewtonConfig {
            width_tol: 1e-12,
            max_depth: 4096,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootSearch {
    /// Disjoint isolators sorted by lower endpoint.
    pub roots: Vec<Enclosure>,
    /// Set when some branch hit `max_depth`; its box is reported as a cluster.
    pub depth_exceeded: bool,
    /// Number of boxes processed.
    pub boxes: usize,
}

/// Bisection point, kept slightly off-centre so that roots at "round"
/// numbers do not land on a box boundary.
fn split_point(x: Interval) -> f64 {
    let t = x.lo + 0.4990234375 * (x.hi - x.lo);
    t.clamp(x.lo, x.hi)
}

/// The interval Newton operator `N(X) = m - f(m)/F'(X)` with `m` the
/// midpoint of `x` and `dx` an enclosure of `f'` on `x`.
pub fn newton_operator<F>(f: &F, x: Interval, dx: Interval) -> Interval
where
    F: Fn(Interval) -> Interval,
{
    let m = Interval::point(x.mid());
    m - f(m).div(dx)
}

/// `N(X)` and `N(X) ∩ X`.
fn newton_step<F>(f: &F, x: Interval, dx: Interval) -> (Interval, Interval)
where
    F: Fn(Interval) -> Interval,
{
    let n = newton_operator(f, x, dx);
    (n, n.intersect(x))
}

/// Isolates every root of `f` in the bounded interval `domain`.
///
/// `f` and `df` must be interval extensions of a C¹ function and its
/// derivative. Boxes on which `f` provably has no zero are discarded; boxes
/// whose derivative enclosure contains zero or is unbounded are bisected.
pub fn newton_all_roots<F, D>(f: F, df: D, domain: Interval, cfg: &NewtonConfig) -> RootSearch
where
    F: Fn(Interval) -> Interval,
    D: Fn(Interval) -> Interval,
{
    let mut out = RootSearch::default();
    if !domain.is_bounded() {
        return out;
    }
    let tol = cfg.width_tol * domain.hi.abs().max(domain.lo.abs()).max(1.0);
    let mut found: Vec<Enclosure> = Vec::new();
    let mut stack = vec![(domain, 0usize)];

    while let Some((x, depth)) = stack.pop() {
        out.boxes += 1;
        let fx = f(x);
        if fx.is_empty() || !fx.contains_zero() {
            continue;
        }
        if depth >= cfg.max_depth {
            out.depth_exceeded = true;
            found.push(Enclosure {
                isolator: x,
                status: RootStatus::UnverifiedCluster,
            });
            continue;
        }
        let dx = df(x);
        if dx.is_bounded() && !dx.contains_zero() {
            // mean-value form: tighter than the natural extension on small boxes
            let m = x.mid();
            let mv = f(Interval::point(m)) + dx * (x - Interval::point(m));
            if !mv.contains_zero() {
                continue;
            }
            let (n, nx) = newton_step(&f, x, dx);
            if nx.is_empty() {
                continue;
            }
            if n.interior_of(x) {
                found.push(Enclosure {
                    isolator: contract(&f, &df, nx, tol),
                    status: RootStatus::CertifiedUnique,
                });
                continue;
            }
            if x.width() <= tol {
                found.push(Enclosure {
                    isolator: nx,
                    status: RootStatus::UnverifiedCluster,
                });
                continue;
            }
            if nx.width() < 0.5 * x.width() {
                stack.push((nx, depth + 1));
                continue;
            }
            let s = split_point(nx);
            stack.push((Interval::new(s, nx.hi), depth + 1));
            stack.push((Interval::new(nx.lo, s), depth + 1));
            continue;
        }
        if x.width() <= tol {
            found.push(Enclosure {
                isolator: x,
                status: RootStatus::UnverifiedCluster,
            });
            continue;
        }
        let s = split_point(x);
        if s <= x.lo || s >= x.hi {
            found.push(Enclosure {
                isolator: x,
                status: RootStatus::UnverifiedCluster,
            });
            continue;
        }
        stack.push((Interval::new(s, x.hi), depth + 1));
        stack.push((Interval::new(x.lo, s), depth + 1));
    }

    out.roots = merge(found, &f, &df);
    out
}

/// Iterates the Newton operator on a certified box until it is narrower than
/// `tol` or stops shrinking.
fn contract<F, D>(f: &F, df: &D, mut x: Interval, tol: f64) -> Interval
where
    F: Fn(Interval) -> Interval,
    D: Fn(Interval) -> Interval,
{
    while x.width() > tol {
        let dx = df(x);
        if !dx.is_bounded() || dx.contains_zero() {
            break;
        }
        let (_, nx) = newton_step(f, x, dx);
        if nx.is_empty() || nx.width() >= x.width() {
            break;
        }
        x = nx;
    }
    x
}

/// Sorts isolators and merges touching ones. Two certified boxes that meet
/// hold the same root (the derivative keeps one sign across both), so they are
/// intersected; anything touching a cluster is absorbed into the cluster.
fn merge<F, D>(mut found: Vec<Enclosure>, f: &F, df: &D) -> Vec<Enclosure>
where
    F: Fn(Interval) -> Interval,
    D: Fn(Interval) -> Interval,
{
    found.sort_by(|a, b| a.isolator.lo.total_cmp(&b.isolator.lo));
    let mut out: Vec<Enclosure> = Vec::with_capacity(found.len());
    for e in found {
        if let Some(last) = out.last_mut() {
            if e.isolator.lo <= last.isolator.hi {
                use RootStatus::*;
                *last = match (last.status, e.status) {
                    (CertifiedUnique, CertifiedUnique) => {
                        let both = last.isolator.intersect(e.isolator);
                        Enclosure {
                            isolator: if both.is_empty() {
                                last.isolator.hull(e.isolator)
                            } else {
                                both
                            },
                            status: CertifiedUnique,
                        }
                    }
                    _ => Enclosure {
                        isolator: last.isolator.hull(e.isolator),
                        status: UnverifiedCluster,
                    },
                };
                continue;
            }
        }
        out.push(e);
    }
    // A cluster that straddled a bisection point of a simple root may still
    // be certifiable once the pieces are joined.
    for e in out.iter_mut() {
        if e.status == RootStatus::UnverifiedCluster {
            let x = e.isolator;
            let dx = df(x);
            if dx.is_bounded() && !dx.contains_zero() {
                let (n, _) = newton_step(f, x, dx);
                if n.interior_of(x) {
                    e.status = RootStatus::CertifiedUnique;
                }
            }
        }
    }
    out
}
