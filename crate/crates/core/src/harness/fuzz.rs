//! Batch runner: generates a profile's triangles and runs the identity
//! suite on each, in parallel but with index-ordered, reproducible output.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::generator::{random_triangle, FuzzProfile};
use super::suite::{check_identity_suite, SuiteReport};
use crate::error::{Error, Result};
use crate::numeric::ToleranceProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" | "rational" => Ok(Backend::Exact),
            "float" | "f64" => Ok(Backend::Float),
            other => Err(Error::Parse(format!("unknown backend `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseOutcome {
    pub index: usize,
    pub passed: bool,
    pub failed_checks: Vec<&'static str>,
    pub conditioning: f64,
    pub max_normalized_residual: f64,
    pub feuerbach_max_normalized_residual: f64,
    /// Every Feuerbach residual is exactly zero.
    pub exact_zero: bool,
}

impl CaseOutcome {
    fn from_report(index: usize, report: &SuiteReport) -> Self {
        CaseOutcome {
            index,
            passed: report.passed(),
            failed_checks: report.failures(),
            conditioning: report.conditioning,
            max_normalized_residual: report.max_normalized_residual(),
            feuerbach_max_normalized_residual: report.feuerbach_max_normalized_residual,
            exact_zero: report.feuerbach_max_normalized_residual == 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub profile: FuzzProfile,
    pub backend: Backend,
    pub count: usize,
    pub passed: usize,
    pub exact_zero_count: usize,
    pub max_normalized_residual: f64,
    pub mean_normalized_residual: f64,
    pub max_feuerbach_residual: f64,
    pub max_conditioning: f64,
    pub failed_indices: Vec<usize>,
    pub failures_by_check: BTreeMap<&'static str, usize>,
    #[serde(skip)]
    pub cases: Vec<CaseOutcome>,
}

impl FuzzSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.count
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "profile {} backend {} seed {}: {}/{} passed",
            self.profile.kind, self.backend, self.profile.seed, self.passed, self.count
        )?;
        match self.backend {
            Backend::Exact => writeln!(f, "{}/{} exact-zero", self.exact_zero_count, self.count)?,
            Backend::Float => writeln!(
                f,
                "max normalized residual {:e} (feuerbach {:e}), mean {:e}",
                self.max_normalized_residual, self.max_feuerbach_residual, self.mean_normalized_residual
            )?,
        }
        for (name, n) in &self.failures_by_check {
            writeln!(f, "  {name}: {n} failures")?;
        }
        Ok(())
    }
}

/// Float tolerance for one case: the relative bound grows with the side
/// conditioning, since cancellation in `s − a` costs that many digits.
pub fn float_tolerance(base: &ToleranceProfile, conditioning: f64) -> Result<ToleranceProfile> {
    ToleranceProfile::new(base.rel_eps() * conditioning.max(1.0), base.abs_eps())
}

pub fn run_case(
    profile: &FuzzProfile,
    backend: Backend,
    tol: &ToleranceProfile,
    index: usize,
) -> Result<CaseOutcome> {
    let case = random_triangle(profile, index)?;
    let report = match backend {
        Backend::Exact => check_identity_suite(&case.sides, &case.triangle, tol)?,
        Backend::Float => {
            let f = case.to_f64()?;
            let tol = float_tolerance(tol, f.sides.conditioning())?;
            check_identity_suite(&f.sides, &f.triangle, &tol)?
        }
    };
    Ok(CaseOutcome::from_report(index, &report))
}

/// Runs `profile.count` cases. Results do not depend on thread scheduling.
pub fn run_fuzz(profile: &FuzzProfile, backend: Backend, tol: &ToleranceProfile) -> Result<FuzzSummary> {
    let cases: Vec<CaseOutcome> = (0..profile.count)
        .into_par_iter()
        .map(|i| run_case(profile, backend, tol, i))
        .collect::<Result<_>>()?;

    let mut failures_by_check = BTreeMap::new();
    for c in &cases {
        for name in &c.failed_checks {
            *failures_by_check.entry(*name).or_insert(0) += 1;
        }
    }
    let fold_max = |f: fn(&CaseOutcome) -> f64| cases.iter().map(f).fold(0.0, f64::max);
    Ok(FuzzSummary {
        profile: *profile,
        backend,
        count: cases.len(),
        passed: cases.iter().filter(|c| c.passed).count(),
        exact_zero_count: cases.iter().filter(|c| c.exact_zero).count(),
        max_normalized_residual: fold_max(|c| c.max_normalized_residual),
        mean_normalized_residual: cases.iter().map(|c| c.max_normalized_residual).sum::<f64>()
            / cases.len() as f64,
        max_feuerbach_residual: fold_max(|c| c.feuerbach_max_normalized_residual),
        max_conditioning: fold_max(|c| c.conditioning),
        failed_indices: cases.iter().filter(|c| !c.passed).map(|c| c.index).collect(),
        failures_by_check,
        cases,
    })
}
