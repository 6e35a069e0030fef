mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use kuramoto_core::interval::{newton_all_roots, newton_operator, NewtonConfig, RootStatus};
use kuramoto_core::Interval;

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

fn holds(iv: Interval, x: &BigRational) -> bool {
    (iv.lo() == f64::NEG_INFINITY || exact(iv.lo()) <= *x) && (iv.hi() == f64::INFINITY || *x <= exact(iv.hi()))
}

/// Interval with f64 endpoints and an exact rational point inside it.
fn interval_and_point() -> impl Strategy<Value = (Interval, BigRational)> {
    (-1e6f64..1e6, 0.0f64..1e3, 0u32..=64).prop_map(|(lo, w, t)| {
        let iv = Interval::new(lo, lo + w);
        let x = exact(iv.lo()) + (exact(iv.hi()) - exact(iv.lo())) * BigRational::new(t.into(), 64.into());
        (iv, x)
    })
}

fn enclose(q: &BigRational) -> Interval {
    let mut iv = Interval::around(q.to_f64().unwrap());
    while !holds(iv, q) {
        iv = iv.widen_ulp();
    }
    iv
}

proptest! {
    #![proptest_config(common::config(100_000))]

    #[test]
    fn operations_contain_the_exact_result((a, x) in interval_and_point(), (b, y) in interval_and_point()) {
        prop_assert!(holds(a + b, &(&x + &y)));
        prop_assert!(holds(a - b, &(&x - &y)));
        prop_assert!(holds(a * b, &(&x * &y)));
        prop_assert!(holds(a.sqr(), &(&x * &x)));
        prop_assert!(holds(-a, &-&x));
        if !b.contains_zero() {
            prop_assert!(holds(a.div(b), &(&x / &y)));
        }
        if !x.is_negative() {
            // √x ∈ S  ⇔  lo² ≤ x ≤ hi² for a nonnegative enclosure S
            let s = a.sqrt();
            prop_assert!(s.lo() >= 0.0);
            prop_assert!(exact(s.lo()) * exact(s.lo()) <= x);
            prop_assert!(exact(s.hi()) * exact(s.hi()) >= x);
        }
    }
}

/// `(X − r₁)(X − r₂)(X − r₃)` in expanded form with exact coefficients.
struct Cubic {
    roots: Vec<BigRational>,
    e: [Interval; 3],
}

impl Cubic {
    fn new(mut roots: Vec<BigRational>) -> Self {
        roots.sort();
        let (a, b, c) = (&roots[0], &roots[1], &roots[2]);
        let e1 = a + b + c;
        let e2 = a * b + a * c + b * c;
        let e3 = a * b * c;
        Cubic {
            e: [enclose(&e1), enclose(&e2), enclose(&e3)],
            roots,
        }
    }

    fn f(&self, x: Interval) -> Interval {
        let [e1, e2, e3] = self.e;
        ((x - e1) * x + e2) * x - e3
    }

    fn df(&self, x: Interval) -> Interval {
        let (e1, e2) = (self.e[0], self.e[1]);
        (x * Interval::point(3.0) - e1.scale(2.0)) * x + e2
    }
}

fn well_separated_roots() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-320i64..320, 1i64..=8), 3)
        .prop_map(|v| {
            v.into_iter()
                .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q * 8)))
                .collect::<Vec<_>>()
        })
        .prop_filter("roots at least 1/32 apart", |r| {
            let gap = BigRational::new(1.into(), 32.into());
            (0..3).all(|i| (0..i).all(|j| (&r[i] - &r[j]).abs() >= gap))
        })
}

proptest! {
    #![proptest_config(common::config(500))]

    #[test]
    fn newton_finds_every_cubic_root(roots in well_separated_roots()) {
        let c = Cubic::new(roots);
        let lo = c.roots[0].to_f64().unwrap() - 1.0;
        let hi = c.roots[2].to_f64().unwrap() + 1.0;
        let res = newton_all_roots(|x| c.f(x), |x| c.df(x), Interval::new(lo, hi), &NewtonConfig::default());
        prop_assert!(!res.depth_exceeded);
        for r in &c.roots {
            prop_assert!(res.roots.iter().any(|e| holds(e.isolator, r)), "root {r} missed: {:?}", res.roots);
        }
        for e in &res.roots {
            if e.status == RootStatus::CertifiedUnique {
                let inside = c.roots.iter().filter(|r| holds(e.isolator, r)).count();
                prop_assert_eq!(inside, 1);
            }
        }
        prop_assert!(res.roots.iter().all(|e| e.status == RootStatus::CertifiedUnique));
    }

    #[test]
    fn certified_newton_steps_strictly_shrink(roots in well_separated_roots(), which in 0usize..3) {
        let c = Cubic::new(roots);
        let r = c.roots[which].to_f64().unwrap();
        let mut x = Interval::new(r - 1.0 / 256.0, r + 1.0 / 256.0);
        let dx = c.df(x);
        prop_assume!(!dx.contains_zero());
        let n = newton_operator(&|x| c.f(x), x, dx);
        prop_assume!(n.interior_of(x));
        while x.width() > 1e-10 {
            let dx = c.df(x);
            let next = newton_operator(&|x| c.f(x), x, dx).intersect(x);
            prop_assert!(next.width() < x.width(), "{x:?} -> {next:?}");
            prop_assert!(holds(next, &c.roots[which]));
            x = next;
        }
    }
}

#[test]
fn empty_propagates_and_zero_divisor_is_entire() {
    let a = Interval::new(1.0, 2.0);
    assert!((a + Interval::EMPTY).is_empty());
    assert!((Interval::EMPTY * a).is_empty());
    assert_eq!(a.div(Interval::new(-1.0, 1.0)), Interval::ENTIRE);
    assert!(BigRational::zero() <= exact(Interval::new(-1.0, 4.0).sqrt().lo()));
}
