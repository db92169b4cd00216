//! Verification suites run over every semigroup up to a genus bound, with
//! report serialization and witness replay.

mod lab;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;
use crate::tree::enumerate_up_to_genus;

pub use lab::{ClassData, Lab};
pub use report::{emit_report, ReportFormat};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unsupported report format {0:?}")]
    UnsupportedFormat(String),
    #[error("jobs must be positive")]
    NoJobs,
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

macro_rules! suites {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// A named property suite.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Suite {
            $($variant),*
        }

        impl Suite {
            /// The registry, in the order the `all` meta-suite runs it.
            pub const ALL: &'static [Suite] = &[$(Suite::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Suite::$variant => $name),*
                }
            }
        }

        impl FromStr for Suite {
            type Err = HarnessError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(Suite::$variant),)*
                    _ => Err(HarnessError::UnknownSuite(s.to_string())),
                }
            }
        }
    };
}

suites! {
    SemigroupFacts => "semigroupFacts",
    ColonAdjunction => "colonAdjunction",
    Biduality => "biduality",
    SyzygyExactness => "syzygyExactness",
    TraceFacts => "traceFacts",
    ConductorStableAnn => "conductorStableAnn",
    WangLowerBound => "wangLowerBound",
    LemmaChain => "lemmaChain",
    PropSyzygyStability => "propSyzygyStability",
    CocohomDuality => "cocohomDuality",
    TraceContainment => "traceContainment",
    TraceCriterion => "traceCriterion",
    UlrichFacts => "ulrichFacts",
    CanredFacts => "canredFacts",
    AgClosure => "agClosure",
    TheoremB => "theoremB",
    MedShadow => "medShadow",
    FarFlung => "farFlung",
    Multiplicity3 => "multiplicity3",
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One suite or the whole registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Suite),
    All,
}

impl Selection {
    pub fn name(self) -> &'static str {
        match self {
            Selection::One(s) => s.name(),
            Selection::All => "all",
        }
    }

    pub fn suites(self) -> &'static [Suite] {
        match self {
            Selection::One(s) => std::slice::from_ref(&Suite::ALL[s as usize]),
            Selection::All => Suite::ALL,
        }
    }
}

impl FromStr for Selection {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(Selection::All)
        } else {
            s.parse().map(Selection::One)
        }
    }
}

/// A failed (or, for informational findings, noteworthy) check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub semigroup: String,
    pub ideals: Vec<String>,
    /// `suite/check`.
    pub check: String,
    pub details: String,
}

impl Witness {
    pub fn suite(&self) -> Result<Suite, HarnessError> {
        let (suite, _) = self
            .check
            .split_once('/')
            .ok_or_else(|| HarnessError::MalformedWitness(self.check.clone()))?;
        suite.parse()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub genus_range: (usize, usize),
    pub semigroups_checked: usize,
    pub checks_executed: u64,
    pub violations: Vec<Witness>,
    pub informational: Vec<Witness>,
    #[serde(rename = "wall_time_ms", serialize_with = "millis")]
    pub wall_time: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_u64(d.as_millis() as u64)
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Outcome of the checks of some suites on one semigroup.
#[derive(Debug, Default)]
pub(crate) struct Findings {
    semigroup: String,
    suite: &'static str,
    pub checks: u64,
    pub violations: Vec<Witness>,
    pub informational: Vec<Witness>,
}

impl Findings {
    fn new(s: &NumericalSemigroup) -> Self {
        Findings {
            semigroup: s.to_string(),
            ..Default::default()
        }
    }

    fn witness(&self, check: &str, ideals: &[&crate::ideal::RelativeIdeal], details: String) -> Witness {
        Witness {
            semigroup: self.semigroup.clone(),
            ideals: ideals.iter().map(|e| e.to_string()).collect(),
            check: format!("{}/{}", self.suite, check),
            details,
        }
    }

    /// Records a check; a failure becomes a violation.
    pub fn check(
        &mut self,
        check: &str,
        ok: bool,
        ideals: &[&crate::ideal::RelativeIdeal],
        details: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if !ok {
            let w = self.witness(check, ideals, details());
            self.violations.push(w);
        }
    }

    /// Records a finding that is reported but never fails the suite.
    pub fn note(&mut self, check: &str, ideals: &[&crate::ideal::RelativeIdeal], details: String) {
        let w = self.witness(check, ideals, details);
        self.informational.push(w);
    }
}

/// Runs the selected suites on one semigroup.
pub(crate) fn check_semigroup(selection: Selection, s: &NumericalSemigroup) -> Findings {
    let lab = Lab::new(s);
    let mut findings = Findings::new(s);
    for &suite in selection.suites() {
        findings.suite = suite.name();
        suites::run(suite, &lab, &mut findings);
    }
    findings
}

/// Runs `suite` over every semigroup of genus `0..=genus_max`.
///
/// Semigroups are checked in parallel on `jobs` threads and merged in
/// enumeration order, so the report does not depend on `jobs`. With
/// `fail_fast` the run stops after the first semigroup with a violation.
pub fn run_suite(
    suite: &str,
    genus_max: usize,
    jobs: usize,
    fail_fast: bool,
) -> Result<SuiteReport, HarnessError> {
    let selection: Selection = suite.parse()?;
    if jobs == 0 {
        return Err(HarnessError::NoJobs);
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let semigroups = enumerate_up_to_genus(genus_max);

    let mut report = SuiteReport {
        suite: selection.name().to_string(),
        genus_range: (0, genus_max),
        semigroups_checked: 0,
        checks_executed: 0,
        violations: Vec::new(),
        informational: Vec::new(),
        wall_time: Duration::ZERO,
    };
    let merge = |f: Findings, report: &mut SuiteReport| {
        report.semigroups_checked += 1;
        report.checks_executed += f.checks;
        report.violations.extend(f.violations);
        report.informational.extend(f.informational);
    };

    if selection.suites().contains(&Suite::SemigroupFacts) {
        let mut f = Findings {
            semigroup: String::from("*"),
            suite: Suite::SemigroupFacts.name(),
            ..Default::default()
        };
        suites::enumeration_cross_check(genus_max, &mut f);
        report.checks_executed += f.checks;
        report.violations.extend(f.violations);
    }

    let chunk = if fail_fast { jobs * 4 } else { semigroups.len().max(1) };
    'outer: for batch in semigroups.chunks(chunk) {
        let results: Vec<Findings> =
            pool.install(|| batch.par_iter().map(|s| check_semigroup(selection, s)).collect());
        for f in results {
            let failed = !f.violations.is_empty();
            merge(f, &mut report);
            if fail_fast && failed {
                break 'outer;
            }
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Re-runs the check that produced `w`; true when the same violation (same
/// check, same ideals) appears again.
pub fn replay(w: &Witness) -> Result<bool, HarnessError> {
    let suite = w.suite()?;
    let s: NumericalSemigroup = w
        .semigroup
        .parse()
        .map_err(|e| HarnessError::MalformedWitness(format!("{e}")))?;
    let f = check_semigroup(Selection::One(suite), &s);
    Ok(f
        .violations
        .iter()
        .any(|v| v.check == w.check && v.ideals == w.ideals))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        assert_eq!(Suite::ALL.len(), 19);
        for &s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(Selection::One(s).suites(), &[s]);
        }
        assert!(matches!("nope".parse::<Selection>(), Err(HarnessError::UnknownSuite(_))));
        assert_eq!("all".parse::<Selection>().unwrap().suites().len(), 19);
    }

    #[test]
    fn naturals_alone_at_genus_zero() {
        let r = run_suite("lemmaChain", 0, 1, false).unwrap();
        assert_eq!(r.semigroups_checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn unknown_suite_and_zero_jobs() {
        assert!(matches!(run_suite("x", 1, 1, false), Err(HarnessError::UnknownSuite(_))));
        assert!(matches!(run_suite("all", 1, 0, false), Err(HarnessError::NoJobs)));
    }

    #[test]
    fn replay_rejects_malformed() {
        let w = Witness {
            semigroup: "3,5,7".into(),
            ideals: vec![],
            check: "nocheck".into(),
            details: String::new(),
        };
        assert!(replay(&w).is_err());
        let w = Witness { check: "theoremB/categoryIsConductor".into(), ..w };
        assert!(!replay(&w).unwrap());
    }
}
