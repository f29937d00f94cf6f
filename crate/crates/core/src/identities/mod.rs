//! Named, parameterized identity checks with line-oriented reports.
//!
//! Each check evaluates both sides by separate code paths and compares
//! them exactly. A failing report carries the smallest failing input it
//! found, printed in the crate's text formats.

mod checks;
mod models;

use std::fmt;
use std::str::FromStr;

use crate::algebra_core::scalar::{int, parse_rational, Rational};
use crate::combinatorics::Conventions;
use crate::error::{Error, Result};

pub use models::ModelKind;

/// Every check id, in suite order.
pub const CHECKS: [&str; 13] = [
    "thm1",
    "prop21",
    "cor22",
    "iota_power",
    "bs_partition",
    "bs_records",
    "bs_commutative",
    "keyeq2",
    "texp_eq22",
    "mps_vs_magnus",
    "prod_exp",
    "sharp",
    "bch",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: String,
    pub params: Vec<(String, String)>,
    pub stats: Vec<(String, String)>,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Looks up a parameter or statistic by key.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.iter().chain(&self.stats).find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}", self.id)?;
        for (k, v) in self.params.iter().chain(&self.stats) {
            write!(f, " {k}={v}")?;
        }
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  input={}\n  lhs={}\n  rhs={}", cx.input, cx.lhs, cx.rhs)?;
        }
        Ok(())
    }
}

/// Inputs shared by all checks; unset fields take per-check defaults.
#[derive(Clone, Debug)]
pub struct CheckParams {
    pub n: Option<usize>,
    pub model: Option<ModelKind>,
    pub seed: u64,
    pub samples: Option<usize>,
    /// Weight of the sequence model.
    pub weight: Rational,
    pub conventions: Conventions,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            n: None,
            model: None,
            seed: 0,
            samples: None,
            weight: int(2),
            conventions: Conventions::standard(),
        }
    }
}

impl CheckParams {
    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn model(mut self, m: ModelKind) -> Self {
        self.model = Some(m);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn samples(mut self, s: usize) -> Self {
        self.samples = Some(s);
        self
    }

    pub fn weight(mut self, w: Rational) -> Self {
        self.weight = w;
        self
    }

    pub fn conventions(mut self, c: Conventions) -> Self {
        self.conventions = c;
        self
    }
}

/// Runs one check.
pub fn verify(id: &str, params: &CheckParams) -> Result<CheckReport> {
    match id {
        "thm1" => checks::thm1(params),
        "prop21" => checks::prop21(params),
        "cor22" => checks::cor22(params),
        "iota_power" => checks::iota_power(params),
        "bs_partition" => checks::bs_partition(params),
        "bs_records" => checks::bs_records(params),
        "bs_commutative" => checks::bs_commutative(params),
        "keyeq2" => checks::keyeq2(params),
        "texp_eq22" => checks::texp_eq22(params),
        "mps_vs_magnus" => checks::mps_vs_magnus(params),
        "prod_exp" => checks::prod_exp(params),
        "sharp" => checks::sharp(params),
        "bch" => checks::bch(params),
        _ => Err(Error::UnknownCheck(id.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteLevel {
    Quick,
    Full,
}

impl FromStr for SuiteLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(SuiteLevel::Quick),
            "full" => Ok(SuiteLevel::Full),
            _ => Err(Error::OutOfRange(format!("unknown suite level `{s}`"))),
        }
    }
}

/// The checks a suite runs, with their parameters.
pub fn suite_plan(level: SuiteLevel, seed: u64) -> Vec<(&'static str, CheckParams)> {
    let p = || CheckParams::default().seed(seed);
    match level {
        SuiteLevel::Quick => vec![
            ("thm1", p().n(3)),
            ("prop21", p().n(3).samples(3)),
            ("cor22", p().n(3).samples(3)),
            ("iota_power", p().n(3)),
            ("bs_partition", p().n(3)),
            ("bs_records", p().n(3)),
            ("bs_commutative", p().n(3)),
            ("keyeq2", p().n(3)),
            ("texp_eq22", p().n(2).samples(1)),
            ("mps_vs_magnus", p().n(2).samples(1)),
            ("prod_exp", p().n(3)),
            ("sharp", p().n(3)),
            ("bch", p().n(3)),
        ],
        SuiteLevel::Full => vec![
            ("thm1", p().n(4)),
            ("thm1", p().n(5).samples(100)),
            ("prop21", p().n(4).samples(10)),
            ("prop21", p().n(4).model(ModelKind::MatrixPoly).samples(3)),
            ("prop21", p().n(4).model(ModelKind::MatrixSeq).samples(3)),
            ("cor22", p().n(4).samples(20)),
            ("iota_power", p().n(5)),
            ("bs_partition", p().n(4)),
            ("bs_partition", p().n(4).model(ModelKind::LaurentPole)),
            ("bs_records", p().n(4)),
            ("bs_commutative", p().n(5)),
            ("keyeq2", p().n(5)),
            ("texp_eq22", p().n(4).samples(2)),
            ("mps_vs_magnus", p().n(4).samples(2)),
            ("prod_exp", p().n(5)),
            ("sharp", p().n(5)),
            ("bch", p().n(3)),
        ],
    }
}

pub fn run_suite(level: SuiteLevel, seed: u64) -> Vec<CheckReport> {
    run_suite_with(level, seed, &Conventions::standard())
}

/// Runs a suite under the given conventions; errors become failing reports.
pub fn run_suite_with(level: SuiteLevel, seed: u64, conventions: &Conventions) -> Vec<CheckReport> {
    suite_plan(level, seed)
        .into_iter()
        .map(|(id, p)| {
            let p = p.conventions(conventions.clone());
            verify(id, &p).unwrap_or_else(|e| CheckReport {
                id: id.to_string(),
                params: vec![("error".into(), e.to_string())],
                stats: Vec::new(),
                status: Status::Fail,
                counterexample: None,
            })
        })
        .collect()
}

/// Parses a weight given as a rational.
pub fn parse_weight(s: &str) -> Result<Rational> {
    parse_rational(s)
}
