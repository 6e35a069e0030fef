use kuramoto_core::counting::{conjectured_max, even_count, odd_count, upper_bound, Basis, CountReport};
use num_rational::BigRational;

use crate::failure::{Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Even,
    Odd,
}

fn basis(r: &CountReport) -> &'static str {
    match r.basis {
        Basis::Theorem => "theorem",
        Basis::Conjecture => "conjecture",
    }
}

/// Text table of the closed-form counts for `n`.
pub fn run(n: usize, q: Option<&BigRational>, family: Option<Family>) -> Outcome<String> {
    if n < 2 {
        return Err(Failure::Invalid(format!("n must be at least 2 (got {n})")));
    }
    let max = conjectured_max(n);
    let mut out = format!(
        "n                {n}\nupper_bound      {}\nconjectured_max  {} ({})\n",
        upper_bound(n),
        max.count,
        basis(&max)
    );
    let family = match (q, family) {
        (None, None) => return Ok(out),
        (Some(_), Some(f)) => f,
        (Some(_), None) => {
            if n % 2 == 0 {
                Family::Even
            } else {
                Family::Odd
            }
        }
        (None, Some(_)) => return Err(Failure::Invalid("--family needs --q".into())),
    };
    let q = q.expect("checked above");
    let rep = match family {
        Family::Even => even_count(n, q),
        Family::Odd => odd_count(n, q),
    }
    .map_err(|e| Failure::Invalid(e.to_string()))?;
    let name = if family == Family::Even { "even_count" } else { "odd_count" };
    out += &format!("{name}(q={q})  {} ({}", rep.count, basis(&rep));
    if rep.has_tangency() {
        out += ", includes a double root counted twice";
    }
    out += ")\n";
    Ok(out)
}
