//! Seeded triangle generation, an independent Cartesian construction of
//! every center, and the identity suite that ties kernel formulas to it.

mod fuzz;
mod generator;
mod oracle;
mod suite;

pub use fuzz::{float_tolerance, run_case, run_fuzz, Backend, CaseOutcome, FuzzSummary};
pub use generator::{random_coordinate_case, random_triangle, CoordinateCase, FuzzCase, FuzzProfile, ProfileKind};
pub use oracle::{cartesian_oracle, OracleResult, PointLabel};
pub use suite::{check_identity_suite, IdentityCheck, SuiteReport};
