use kuramoto_core::{solve, Algorithm, ModelInput, SolverConfig, DEFAULT_SUM_TOL};
use rayon::prelude::*;

use crate::failure::{Failure, Outcome};

#[derive(Clone, Copy, Debug)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub step: f64,
}

impl Grid {
    fn check(&self) -> Outcome<()> {
        let inside = |v: f64| v.is_finite() && (-1.0..=1.0).contains(&v);
        let ok = [self.x_min, self.x_max, self.y_min, self.y_max].into_iter().all(inside)
            && self.x_min <= self.x_max
            && self.y_min <= self.y_max
            && self.step.is_finite()
            && self.step > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Failure::Invalid(format!(
                "grid must lie in [-1,1]^2 with min <= max and step > 0 (got {self:?})"
            )))
        }
    }
}

fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    // rounding to 12 decimals keeps printed coordinates tidy
    (0..count).map(|i| ((lo + i as f64 * step) * 1e12).round() / 1e12).collect()
}

/// Number of equilibria for `ω = (ω₁, ω₂, −ω₁−ω₂)` and `k = (1, 1, 1)`, or
/// `None` when all frequencies vanish.
pub fn count_at(w1: f64, w2: f64) -> Option<usize> {
    let input = ModelInput::new(vec![w1, w2, -(w1 + w2)], vec![1.0; 3]).ok()?;
    let cfg = SolverConfig {
        parallel: false,
        ..SolverConfig::default()
    };
    solve(&input, Algorithm::Optimized, DEFAULT_SUM_TOL, &cfg).ok().map(|r| r.count())
}

/// CSV with header `omega1,omega2,count`; `NA` where the model is degenerate.
pub fn run(grid: Grid) -> Outcome<String> {
    grid.check()?;
    let xs = axis(grid.x_min, grid.x_max, grid.step);
    let ys = axis(grid.y_min, grid.y_max, grid.step);
    let rows: Vec<String> = xs
        .par_iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| {
                    let c = count_at(x, y).map_or_else(|| "NA".to_string(), |c| c.to_string());
                    format!("{x},{y},{c}\n")
                })
                .collect()
        })
        .collect();
    Ok(std::iter::once("omega1,omega2,count\n".to_string()).chain(rows).collect())
}
