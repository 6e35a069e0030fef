//! Equilibrium location: per-pattern root isolation, angle reconstruction,
//! deduplication and residual checks, in an exhaustive and a pruned driver.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::conjugate::{Conjugates, SignPattern, MAX_OSCILLATORS};
use crate::error::{Error, Result};
use crate::interval::{newton_all_roots, Interval, NewtonConfig, RootStatus};
use crate::model::{angle_diff, residual, Equilibrium, ModelInput, NormalizedModel};
use crate::prune::{partial_sum_prune, root_bracket, skip_decrement, Skip};

/// Largest `n` for which the exhaustive driver is allowed to run.
pub const BASIC_MAX_N: usize = 30;

/// Slack on `|sin θ| ≤ 1` before a candidate root is rejected.
pub const SINE_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Basic,
    Optimized,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    pub newton: NewtonConfig,
    /// Componentwise tolerance, in radians, for merging duplicate equilibria.
    pub angle_tol: f64,
    /// Keep a per-pattern outcome table in the report.
    pub record_patterns: bool,
    /// Evaluate independent patterns on the rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            newton: NewtonConfig::default(),
            angle_tol: 1e-7,
            record_patterns: false,
            parallel: true,
        }
    }
}

/// A root of `f_σ` with its isolating interval.
#[derive(Clone, Debug, PartialEq)]
pub struct RootRecord {
    pub isolator: Interval,
    pub status: RootStatus,
    /// Pattern in sorted indexing.
    pub sigma: SignPattern,
}

impl RootRecord {
    pub fn r(&self) -> f64 {
        self.isolator.mid()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    BracketEmpty,
    PartialSumPruned,
    /// `f_σ` was solved on its bracket and has no root there.
    NoRoots,
    /// Number of isolated roots.
    Roots(usize),
}

impl Verdict {
    pub fn is_rootless(self) -> bool {
        !matches!(self, Verdict::Roots(_))
    }
}

/// What happened to one sign pattern; `code` is in sorted indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternOutcome {
    pub code: u64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Warning {
    DepthExceeded { code: u64 },
    SineOverflow { code: u64, r: f64 },
    Residual { code: u64, r: f64, residual: f64 },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SolveReport {
    /// Ordered by pattern code (original indexing) descending, then `R` descending.
    pub equilibria: Vec<Equilibrium>,
    pub patterns_visited: u64,
    pub outcomes: Vec<PatternOutcome>,
    pub warnings: Vec<Warning>,
    /// Candidates before deduplication.
    pub raw_candidates: usize,
}

impl SolveReport {
    pub fn count(&self) -> usize {
        self.equilibria.len()
    }
}

/// Validates, normalises and solves with the chosen driver.
pub fn solve(input: &ModelInput, algorithm: Algorithm, sum_tol: f64, cfg: &SolverConfig) -> Result<SolveReport> {
    let m = input.checked(sum_tol)?;
    match algorithm {
        Algorithm::Basic => solve_basic(&m, cfg),
        Algorithm::Optimized => solve_optimized(&m, cfg),
    }
}

/// Angles `θ` (sorted indexing) with `sin θ_ν = ω_ν/(k_ν√R)` and
/// `sign cos θ_ν = σ_ν`, each in `(−π, π]`.
pub fn reconstruct_theta(r: f64, sigma: &SignPattern, m: &NormalizedModel) -> Result<Vec<f64>> {
    let sqrt_r = r.sqrt();
    let mut theta = Vec::with_capacity(m.n());
    for mu in 0..m.n() {
        let (w, k) = (m.omega[mu], m.k[mu]);
        let s = w / (k * sqrt_r);
        if !(s.abs() <= 1.0 + SINE_SLACK) {
            return Err(Error::SineOverflow(s));
        }
        // atan2 form of the arcsin branch rule, with sine and cosine both
        // scaled by k√R; the radicand is accurate near |s| = 1
        let c = (k * k * r - w * w).max(0.0).sqrt();
        let w = w + 0.0; // −0 would select −π
        let t = if sigma.get(mu) > 0.0 {
            w.atan2(c)
        } else {
            w.atan2(-c)
        };
        theta.push(if t == -std::f64::consts::PI { std::f64::consts::PI } else { t });
    }
    Ok(theta)
}

/// Merges equilibria whose angles agree within `angle_tol` on the circle,
/// preferring certified ones and then the smaller pattern code.
pub fn deduplicate(mut eqs: Vec<Equilibrium>, angle_tol: f64, k: &[f64]) -> Vec<Equilibrium> {
    if eqs.len() < 2 {
        return eqs;
    }
    // √R = (1/n)Σ k cos θ, so equal angles force nearby √R
    let mean_k = k.iter().sum::<f64>() / k.len() as f64;
    eqs.sort_by(|a, b| a.r.total_cmp(&b.r).then(a.sigma.code().cmp(&b.sigma.code())));
    let mut keep: Vec<Equilibrium> = Vec::with_capacity(eqs.len());
    for e in eqs {
        let root = e.r.sqrt();
        let window = mean_k * angle_tol + 1e-9 * (1.0 + root);
        let mut merged = false;
        for kept in keep.iter_mut().rev() {
            if root - kept.r.sqrt() > window {
                break;
            }
            let same = kept
                .theta
                .iter()
                .zip(&e.theta)
                .all(|(a, b)| angle_diff(*a, *b).abs() <= angle_tol);
            if same {
                let better = (e.certified && !kept.certified)
                    || (e.certified == kept.certified && e.sigma.code() < kept.sigma.code());
                if better {
                    *kept = e.clone();
                }
                merged = true;
                break;
            }
        }
        if !merged {
            keep.push(e);
        }
    }
    keep
}

fn output_order(a: &Equilibrium, b: &Equilibrium) -> Ordering {
    b.sigma
        .code()
        .cmp(&a.sigma.code())
        .then(b.r.total_cmp(&a.r))
}

/// Residual bound used to accept an equilibrium as verified.
pub fn residual_bound(omega: &[f64]) -> f64 {
    1e-8 * (1.0 + omega.iter().fold(0.0f64, |m, w| m.max(w.abs())))
}

struct PatternResult {
    code: u64,
    verdict: Verdict,
    records: Vec<RootRecord>,
    depth_exceeded: bool,
}

fn solve_pattern(conj: &Conjugates<'_>, code: u64, use_partial_sums: bool, cfg: &NewtonConfig) -> PatternResult {
    let m = conj.model;
    let sigma = SignPattern::from_code(code, m.n());
    let done = |verdict| PatternResult {
        code,
        verdict,
        records: Vec::new(),
        depth_exceeded: false,
    };
    let bracket = root_bracket(&sigma, m);
    if bracket.is_empty() {
        return done(Verdict::BracketEmpty);
    }
    if use_partial_sums && partial_sum_prune(&sigma, m) {
        return done(Verdict::PartialSumPruned);
    }
    let branch = conj.branch(&sigma);
    let search = newton_all_roots(branch.f_ext(), branch.df_ext(), bracket, cfg);
    let records: Vec<RootRecord> = search
        .roots
        .into_iter()
        .filter(|e| e.isolator.hi() > 0.0)
        .map(|e| RootRecord {
            isolator: e.isolator,
            status: e.status,
            sigma: sigma.clone(),
        })
        .collect();
    PatternResult {
        code,
        verdict: if records.is_empty() {
            Verdict::NoRoots
        } else {
            Verdict::Roots(records.len())
        },
        records,
        depth_exceeded: search.depth_exceeded,
    }
}

struct Assembler<'a> {
    m: &'a NormalizedModel,
    input: ModelInput,
    bound: f64,
    cfg: SolverConfig,
    report: SolveReport,
    candidates: Vec<Equilibrium>,
}

impl<'a> Assembler<'a> {
    fn new(m: &'a NormalizedModel, cfg: &SolverConfig) -> Self {
        let input = m.to_input();
        let bound = residual_bound(&input.omega);
        Assembler {
            m,
            input,
            bound,
            cfg: *cfg,
            report: SolveReport::default(),
            candidates: Vec::new(),
        }
    }

    fn absorb(&mut self, res: PatternResult) {
        self.report.patterns_visited += 1;
        if self.cfg.record_patterns {
            self.report.outcomes.push(PatternOutcome {
                code: res.code,
                verdict: res.verdict,
            });
        }
        if res.depth_exceeded {
            self.report.warnings.push(Warning::DepthExceeded { code: res.code });
        }
        for rec in res.records {
            let r = rec.r();
            let theta = match reconstruct_theta(r, &rec.sigma, self.m) {
                Ok(t) => t,
                Err(_) => {
                    self.report.warnings.push(Warning::SineOverflow { code: res.code, r });
                    continue;
                }
            };
            let theta = self.m.denormalize(&theta);
            let sigma = SignPattern::from_signs(self.m.denormalize(rec.sigma.signs()));
            let resid = residual(&theta, &self.input);
            let ok = resid <= self.bound;
            if !ok {
                self.report.warnings.push(Warning::Residual {
                    code: res.code,
                    r,
                    residual: resid,
                });
            }
            self.candidates.push(Equilibrium {
                theta,
                r,
                sigma,
                residual: resid,
                certified: ok && rec.status == RootStatus::CertifiedUnique,
            });
        }
    }

    fn finish(mut self) -> SolveReport {
        self.report.raw_candidates = self.candidates.len();
        let mut eqs = deduplicate(self.candidates, self.cfg.angle_tol, &self.m.k);
        eqs.sort_by(output_order);
        self.report.equilibria = eqs;
        self.report
    }
}

fn check_size(m: &NormalizedModel, max: usize) -> Result<()> {
    if m.n() > max {
        return Err(Error::SizeLimit { n: m.n(), max });
    }
    Ok(())
}

fn solve_all_patterns(m: &NormalizedModel, cfg: &SolverConfig, use_partial_sums: bool) -> Result<SolveReport> {
    check_size(m, BASIC_MAX_N)?;
    let conj = Conjugates::new(m);
    let total = 1u64 << m.n();
    let results: Vec<PatternResult> = if cfg.parallel {
        (0..total)
            .into_par_iter()
            .map(|i| total - 1 - i)
            .map(|code| solve_pattern(&conj, code, use_partial_sums, &cfg.newton))
            .collect()
    } else {
        (0..total)
            .rev()
            .map(|code| solve_pattern(&conj, code, use_partial_sums, &cfg.newton))
            .collect()
    };
    let mut asm = Assembler::new(m, cfg);
    for res in results {
        asm.absorb(res);
    }
    Ok(asm.finish())
}

/// Solves every sign pattern on its root bracket.
pub fn solve_basic(m: &NormalizedModel, cfg: &SolverConfig) -> Result<SolveReport> {
    solve_all_patterns(m, cfg, false)
}

/// Descends through pattern codes from `2ⁿ − 1`, pruning with brackets and
/// partial sums and, when couplings are nonincreasing after sorting, jumping
/// past whole blocks of provably rootless patterns. Without that ordering it
/// falls back to per-pattern pruning over all codes.
pub fn solve_optimized(m: &NormalizedModel, cfg: &SolverConfig) -> Result<SolveReport> {
    check_size(m, MAX_OSCILLATORS)?;
    if !m.ic4 {
        return solve_all_patterns(m, cfg, true);
    }
    let n = m.n();
    let conj = Conjugates::new(m);
    let mut asm = Assembler::new(m, cfg);
    let mut iota = (1u64 << n) - 1;
    loop {
        let res = solve_pattern(&conj, iota, true, &cfg.newton);
        let rootless = res.verdict.is_rootless();
        asm.absorb(res);
        if rootless {
            match skip_decrement(iota, n, true)? {
                Skip::Next(next) => iota = next,
                Skip::Terminate => break,
            }
        } else if iota == 0 {
            break;
        } else {
            iota -= 1;
        }
    }
    Ok(asm.finish())
}
