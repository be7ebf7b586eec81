use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::triangle::{Point2, SideLengths, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    Generic,
    Isoceles,
    NearDegenerate,
    NearEquilateral,
    RightAngled,
}

impl ProfileKind {
    pub const ALL: [ProfileKind; 5] = [
        ProfileKind::Generic,
        ProfileKind::Isoceles,
        ProfileKind::NearDegenerate,
        ProfileKind::NearEquilateral,
        ProfileKind::RightAngled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProfileKind::Generic => "generic",
            ProfileKind::Isoceles => "isoceles",
            ProfileKind::NearDegenerate => "near-degenerate",
            ProfileKind::NearEquilateral => "near-equilateral",
            ProfileKind::RightAngled => "right-angled",
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProfileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "generic" => Ok(ProfileKind::Generic),
            "isoceles" | "isosceles" => Ok(ProfileKind::Isoceles),
            "near-degenerate" => Ok(ProfileKind::NearDegenerate),
            "near-equilateral" => Ok(ProfileKind::NearEquilateral),
            "right-angled" | "right" => Ok(ProfileKind::RightAngled),
            _ => Err(Error::InvalidProfile(format!("unknown profile {s:?}"))),
        }
    }
}

/// Parameters of a deterministic batch of random triangles.
///
/// `magnitude_bound` caps the integers used for the height and the slope
/// parameters of the generic, isoceles and right-angled families. The
/// near-equilateral and near-degenerate families need finer rationals to
/// reach their target shapes and only use it for the height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FuzzProfile {
    pub kind: ProfileKind,
    pub magnitude_bound: u32,
    pub count: usize,
    pub seed: u64,
}

impl FuzzProfile {
    pub fn new(kind: ProfileKind, magnitude_bound: u32, count: usize, seed: u64) -> Result<Self> {
        if count < 1 {
            return Err(Error::InvalidProfile("count must be at least 1".into()));
        }
        if magnitude_bound < 2 {
            return Err(Error::InvalidProfile("magnitude bound must be at least 2".into()));
        }
        Ok(FuzzProfile { kind, magnitude_bound, count, seed })
    }
}

/// A generated triangle: exact side lengths together with a rational
/// placement `C = (0, 0)`, `B = (a, 0)`, `A` in the upper half-plane.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzCase<S> {
    pub index: usize,
    pub sides: SideLengths<S>,
    pub triangle: Triangle<S>,
}

impl FuzzCase<Rational> {
    /// Rounds every coordinate and side to the nearest `f64`.
    pub fn to_f64(&self) -> Result<FuzzCase<f64>> {
        let [a, b, c] = self.sides.as_array().map(|x| x.to_f64());
        let [pa, pb, pc] = self.triangle.vertices().clone().map(|p| p.to_f64());
        Ok(FuzzCase {
            index: self.index,
            sides: SideLengths::new(a, b, c)?,
            triangle: Triangle::new(pa, pb, pc)?,
        })
    }
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

/// Legs and hypotenuse of a rational right triangle with unit leg, from the
/// slope parameter `t = m/n`: the other leg is `(1/t − t)/2` and the
/// hypotenuse `(1/t + t)/2`.
fn unit_right_triangle(m: i64, n: i64) -> (Rational, Rational) {
    let den = 2 * m * n;
    (ratio(n * n - m * m, den), ratio(n * n + m * m, den))
}

/// Glues two rational right triangles of common height `h` along the
/// altitude from `A`. The result has rational sides and rational vertices;
/// every such triangle arises this way.
fn glue(h: &Rational, t1: (i64, i64), t2: (i64, i64)) -> Option<(SideLengths<Rational>, Triangle<Rational>)> {
    let (f1, g1) = unit_right_triangle(t1.0, t1.1);
    let (f2, g2) = unit_right_triangle(t2.0, t2.1);
    let p = h * &f1;
    let q = h * &f2;
    let a = &p + &q;
    if a <= Rational::zero() {
        return None;
    }
    let b = h * &g1;
    let c = h * &g2;
    let sides = SideLengths::new(a.clone(), b, c).ok()?;
    let tri = Triangle::new(
        Point2::new(p, h.clone()),
        Point2::new(a, Rational::zero()),
        Point2::origin(),
    )
    .ok()?;
    Some((sides, tri))
}

fn random_height(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    ratio(rng.gen_range(1..=bound), rng.gen_range(1..=bound))
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> i64 {
    (lo.ln() + rng.gen::<f64>() * (hi.ln() - lo.ln())).exp().round() as i64
}

fn near_equilateral_slope(rng: &mut ChaCha8Rng) -> (i64, i64) {
    let n: i64 = rng.gen_range(100_000..=200_000);
    let m = (n as f64 / 3f64.sqrt()).round() as i64 + rng.gen_range(-2..=2);
    (m, n)
}

const MAX_CONDITIONING: f64 = 1e6;

fn candidate(kind: ProfileKind, bound: i64, rng: &mut ChaCha8Rng) -> Option<(SideLengths<Rational>, Triangle<Rational>)> {
    let h = random_height(rng, bound);
    // max side / min side ≤ 1 + 10⁻³
    let near_equilateral_spread = ratio(1001, 1000);
    match kind {
        ProfileKind::Generic => {
            let t1 = (rng.gen_range(1..=bound), rng.gen_range(1..=bound));
            let t2 = (rng.gen_range(1..=bound), rng.gen_range(1..=bound));
            glue(&h, t1, t2)
        }
        ProfileKind::Isoceles => {
            let n = rng.gen_range(2..=bound);
            let t = (rng.gen_range(1..n), n);
            glue(&h, t, t)
        }
        ProfileKind::RightAngled => {
            // t1 = 1 puts A straight above C
            let n = rng.gen_range(2..=bound);
            glue(&h, (1, 1), (rng.gen_range(1..n), n))
        }
        ProfileKind::NearEquilateral => {
            let (sides, tri) = glue(&h, near_equilateral_slope(rng), near_equilateral_slope(rng))?;
            let [a, b, c] = sides.as_array();
            let max = a.clone().max(b.clone()).max(c.clone());
            let min = a.min(b).min(c);
            (max <= &min * &near_equilateral_spread).then_some((sides, tri))
        }
        ProfileKind::NearDegenerate => {
            let found = if rng.gen_bool(0.5) {
                // flat: A close to the interior of BC
                let n1 = log_uniform(rng, 3.0, 1000.0);
                let n2 = log_uniform(rng, 3.0, 1000.0);
                glue(&h, (1, n1), (1, n2))
            } else {
                // needle: BC short relative to the other two sides
                let n1 = log_uniform(rng, 4.0, 300.0);
                let gap = rng.gen_range(1..=(n1 / 3).max(1));
                glue(&h, (1, n1), (n1 - gap, 1))
            };
            let (sides, tri) = found?;
            let k = sides.conditioning();
            (k.is_finite() && k <= MAX_CONDITIONING).then_some((sides, tri))
        }
    }
}

/// The `index`-th triangle of `profile`. Each index draws from its own
/// ChaCha stream, so cases are independent of evaluation order.
pub fn random_triangle(profile: &FuzzProfile, index: usize) -> Result<FuzzCase<Rational>> {
    if index >= profile.count {
        return Err(Error::InvalidProfile(format!(
            "index {index} out of range for count {}",
            profile.count
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
    rng.set_stream(index as u64);
    let bound = i64::from(profile.magnitude_bound);
    loop {
        if let Some((sides, triangle)) = candidate(profile.kind, bound, &mut rng) {
            return Ok(FuzzCase { index, sides, triangle });
        }
    }
}

/// A triangle with rational vertices, whose sides are usually irrational,
/// plus two rational points. Enough for identities that only need squared
/// side lengths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoordinateCase {
    pub index: usize,
    pub triangle: Triangle<Rational>,
    pub x: Point2<Rational>,
    pub y: Point2<Rational>,
}

fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> Point2<Rational> {
    let mut coord = || ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
    Point2::new(coord(), coord())
}

/// The `index`-th coordinate case for `seed`; coordinates are `p/q` with
/// `|p|, q ≤ bound`. Collinear draws are skipped.
pub fn random_coordinate_case(seed: u64, bound: u32, index: usize) -> Result<CoordinateCase> {
    if bound < 2 {
        return Err(Error::InvalidProfile("magnitude bound must be at least 2".into()));
    }
    let bound = i64::from(bound);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x636f_6f72_6473);
    rng.set_stream(index as u64);
    loop {
        let [a, b, c] = [(); 3].map(|_| random_point(&mut rng, bound));
        if let Ok(triangle) = Triangle::new(a, b, c) {
            let x = random_point(&mut rng, bound);
            let y = random_point(&mut rng, bound);
            return Ok(CoordinateCase { index, triangle, x, y });
        }
    }
}
