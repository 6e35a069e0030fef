use std::time::Instant;

use kuramoto_core::fixtures::{self, Fixture};
use kuramoto_core::oracle::ORACLE_MAX_N;
use kuramoto_core::solver::BASIC_MAX_N;
use kuramoto_core::DEFAULT_SUM_TOL;

use crate::failure::{Failure, Outcome};
use crate::solve::{self, Method};

#[derive(Debug)]
pub struct BenchRow {
    pub fixture: String,
    pub n: usize,
    pub method: Method,
    pub count: usize,
    pub median_s: f64,
}

/// Fixtures named by `list`: `table1`, `all`, or a comma-separated list.
pub fn select(list: &str) -> Outcome<Vec<Fixture>> {
    match list {
        "all" => Ok(fixtures::all()),
        "table1" => Ok((3..=12).map(fixtures::table1).collect()),
        list => list.split(',').map(|n| crate::input::fixture(n.trim())).collect(),
    }
}

/// Methods that are run on an instance of size `n`; the exhaustive ones
/// are skipped above their size limits.
pub fn methods_for(n: usize, wanted: &[Method]) -> Vec<Method> {
    wanted
        .iter()
        .copied()
        .filter(|m| match m {
            Method::Basic => n <= BASIC_MAX_N.min(20),
            Method::Oracle => n <= ORACLE_MAX_N,
            Method::Optimized => true,
        })
        .collect()
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    }
}

pub fn run(set: &[Fixture], wanted: &[Method], repetitions: usize) -> Outcome<Vec<BenchRow>> {
    if repetitions == 0 {
        return Err(Failure::Invalid("repetitions must be positive".into()));
    }
    let mut rows = Vec::new();
    for f in set {
        for method in methods_for(f.input.n(), wanted) {
            let mut times = Vec::with_capacity(repetitions);
            let mut count = 0;
            for _ in 0..repetitions {
                let t = Instant::now();
                count = solve::run(&f.input, method, DEFAULT_SUM_TOL)?.count;
                times.push(t.elapsed().as_secs_f64());
            }
            rows.push(BenchRow {
                fixture: f.name.clone(),
                n: f.input.n(),
                method,
                count,
                median_s: median(times),
            });
        }
    }
    Ok(rows)
}

pub fn render(rows: &[BenchRow]) -> String {
    let mut s = format!("{:<12} {:>3} {:<10} {:>6} {:>12}\n", "fixture", "n", "algorithm", "count", "median_s");
    for r in rows {
        s += &format!(
            "{:<12} {:>3} {:<10} {:>6} {:>12.6}\n",
            r.fixture,
            r.n,
            r.method.name(),
            r.count,
            r.median_s
        );
    }
    s
}
