use std::time::Instant;

use kuramoto_core::oracle::{brute_force_equilibria, default_grid};
use kuramoto_core::{solve, Algorithm, Equilibrium, ModelInput, SolverConfig};
use serde::Serialize;

use crate::failure::{Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Basic,
    Optimized,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Basic => "basic",
            Method::Optimized => "optimized",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Serialize)]
pub struct EquilibriumOut {
    pub theta: Vec<f64>,
    #[serde(rename = "R")]
    pub r: f64,
    pub sigma: Vec<i8>,
    pub residual: f64,
    pub certified: bool,
}

#[derive(Serialize)]
pub struct SolveOut {
    pub n: usize,
    pub algorithm: &'static str,
    pub count: usize,
    pub equilibria: Vec<EquilibriumOut>,
    pub patterns_visited: u64,
    pub warnings: Vec<String>,
    pub wall_time_s: f64,
}

impl From<&Equilibrium> for EquilibriumOut {
    fn from(e: &Equilibrium) -> Self {
        EquilibriumOut {
            theta: e.theta.clone(),
            r: e.r,
            sigma: e.sigma.signs().to_vec(),
            residual: e.residual,
            certified: e.certified,
        }
    }
}

/// Validates `input` against `sum_tol` and runs the chosen method.
pub fn run(input: &ModelInput, method: Method, sum_tol: f64) -> Outcome<SolveOut> {
    let report = input.validate(sum_tol);
    if !report.is_valid() {
        return Err(Failure::Invalid(report.to_string()));
    }
    let cfg = SolverConfig::default();
    let start = Instant::now();
    let (eqs, visited, warnings) = match method {
        Method::Basic | Method::Optimized => {
            let algo = if method == Method::Basic { Algorithm::Basic } else { Algorithm::Optimized };
            let rep = solve(input, algo, sum_tol, &cfg).map_err(|e| Failure::Invalid(e.to_string()))?;
            let warnings = rep.warnings.iter().map(|w| format!("{w:?}")).collect();
            (rep.equilibria, rep.patterns_visited, warnings)
        }
        Method::Oracle => {
            let m = input.normalize();
            let mut eqs = brute_force_equilibria(&m, default_grid(m.n())).map_err(|e| Failure::Invalid(e.to_string()))?;
            eqs.sort_by(|a, b| b.sigma.code().cmp(&a.sigma.code()).then(b.r.total_cmp(&a.r)));
            (eqs, 1u64 << m.n(), Vec::new())
        }
    };
    let wall = start.elapsed().as_secs_f64();
    Ok(SolveOut {
        n: input.n(),
        algorithm: method.name(),
        count: eqs.len(),
        equilibria: eqs.iter().map(EquilibriumOut::from).collect(),
        patterns_visited: visited,
        warnings,
        wall_time_s: wall,
    })
}

pub fn to_json(out: &SolveOut) -> String {
    serde_json::to_string_pretty(out).expect("serialisable")
}

/// One row per equilibrium: `R,residual,certified,sigma_1..,theta_1..`.
pub fn to_csv(out: &SolveOut) -> String {
    let mut s = String::from("R,residual,certified");
    for i in 1..=out.n {
        s += &format!(",sigma_{i}");
    }
    for i in 1..=out.n {
        s += &format!(",theta_{i}");
    }
    s.push('\n');
    for e in &out.equilibria {
        s += &format!("{},{},{}", e.r, e.residual, e.certified);
        for x in &e.sigma {
            s += &format!(",{x}");
        }
        for x in &e.theta {
            s += &format!(",{x}");
        }
        s.push('\n');
    }
    s
}
