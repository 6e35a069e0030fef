//! Reference instances with known equilibrium counts.
//!
//! Power-flow instances are stated with pairwise coupling `k_ν k_μ` and no
//! `1/n` factor; they are converted here by scaling `k` by `√n`.

use crate::model::ModelInput;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub input: ModelInput,
    /// Known number of equilibria.
    pub expected: usize,
}

/// Bus injections and voltage magnitudes of the four-bus network.
pub const FOURBUS_P: [f64; 4] = [1.00, -1.25, 2.00, -1.75];
pub const FOURBUS_V: [f64; 4] = [1.10, 0.93, 1.05, 0.90];

pub const N18_OMEGA: [f64; 18] = [
    0.1000, -0.1000, -0.1415, -0.1429, 0.1500, 0.2000, -0.4142, 0.7000, -0.8500, 1.4142, 2.3000,
    3.1415, -3.1904, -3.5000, 4.3333, -5.0000, -6.0000, 7.0000,
];

pub const N60_OMEGA: [f64; 60] = [
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 20.0, -20.0, 40.0, -60.0, 60.0, 60.0, 80.0, -80.0,
    -100.0, -100.0, 120.0, -160.0, -160.0, -200.0, 240.0, -280.0, -300.0, 300.0, -360.0, 360.0,
    -380.0, 420.0, 420.0, -420.0, -460.0, 460.0, 500.0, 520.0, 540.0, -560.0, -600.0, -620.0,
    620.0, -640.0, 660.0, 660.0, 660.0, 680.0, -720.0, 780.0, -800.0, 820.0, -820.0, -840.0,
    -840.0, -880.0, 920.0, -980.0, -980.0, -1080.0, 3500.0,
];

/// Equilibrium counts of the evenly spaced family, `n = 3..=12`.
pub const TABLE1_COUNTS: [usize; 10] = [2, 2, 4, 4, 4, 4, 4, 4, 8, 8];

fn unnormalized(omega: Vec<f64>, k: Vec<f64>) -> ModelInput {
    let s = (omega.len() as f64).sqrt();
    ModelInput::new(omega, k.into_iter().map(|x| x * s).collect()).expect("fixture is well formed")
}

pub fn ex31() -> Fixture {
    Fixture {
        name: "ex31".into(),
        input: ModelInput::new(vec![4.0, -4.0], vec![5.0, 2.0]).unwrap(),
        expected: 2,
    }
}

/// `ω = P`, pairwise coupling `2|V_ν|·2|V_μ|`.
pub fn fourbus() -> Fixture {
    Fixture {
        name: "fourbus".into(),
        input: unnormalized(FOURBUS_P.to_vec(), FOURBUS_V.iter().map(|v| 2.0 * v.abs()).collect()),
        expected: 8,
    }
}

/// `ω_μ = −1 + (2μ−1)/n`, `k = √1.5`.
pub fn table1(n: usize) -> Fixture {
    assert!((3..=12).contains(&n));
    let omega = (1..=n).map(|mu| -1.0 + (2 * mu - 1) as f64 / n as f64).collect();
    Fixture {
        name: format!("table1-n{n}"),
        input: ModelInput::new(omega, vec![1.5f64.sqrt(); n]).unwrap(),
        expected: TABLE1_COUNTS[n - 3],
    }
}

/// Unit pairwise coupling.
pub fn n18() -> Fixture {
    Fixture {
        name: "n18".into(),
        input: unnormalized(N18_OMEGA.to_vec(), vec![1.0; 18]),
        expected: 8538,
    }
}

pub fn n60() -> Fixture {
    Fixture {
        name: "n60".into(),
        input: ModelInput::new(N60_OMEGA.to_vec(), vec![60.0; 60]).unwrap(),
        expected: 2,
    }
}

pub fn names() -> Vec<String> {
    let mut v = vec!["ex31".to_string(), "fourbus".to_string()];
    v.extend((3..=12).map(|n| format!("table1-n{n}")));
    v.push("n18".into());
    v.push("n60".into());
    v
}

pub fn by_name(name: &str) -> Option<Fixture> {
    match name {
        "ex31" => Some(ex31()),
        "fourbus" => Some(fourbus()),
        "n18" => Some(n18()),
        "n60" => Some(n60()),
        _ => {
            let n: usize = name.strip_prefix("table1-n")?.parse().ok()?;
            (3..=12).contains(&n).then(|| table1(n))
        }
    }
}

/// Every fixture, including the expensive ones.
pub fn all() -> Vec<Fixture> {
    names().iter().filter_map(|n| by_name(n)).collect()
}
