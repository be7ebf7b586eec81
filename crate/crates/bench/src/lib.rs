//! Fixtures shared by the criterion benches.

use feuerbach_core::harness::{random_triangle, FuzzCase, FuzzProfile, ProfileKind};
use feuerbach_core::Rational;

pub const SEED: u64 = 2024;

pub fn profile(kind: ProfileKind, count: usize) -> FuzzProfile {
    FuzzProfile::new(kind, 1000, count, SEED).expect("valid profile")
}

/// The first `count` triangles of a profile, exact and rounded to floats.
pub fn cases(kind: ProfileKind, count: usize) -> Vec<(FuzzCase<Rational>, FuzzCase<f64>)> {
    let p = profile(kind, count);
    (0..count)
        .map(|i| {
            let exact = random_triangle(&p, i).expect("index in range");
            let float = exact.to_f64().expect("representable");
            (exact, float)
        })
        .collect()
}
