//! Triangle descriptions, barycentric coordinates and the side-length metrics.
//!
//! Side lengths are the canonical input: `a = |BC|`, `b = |CA|`, `c = |AB|`.
//! Everything the tangency computation needs (squared radii, the mixed
//! products `R·r` and `R·r_a`) is a rational function of `(a, b, c)`, so the
//! exact backend never has to take a square root.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{Scalar, ToleranceProfile};

/// Positional vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    /// Cyclic successor `A -> B -> C -> A`.
    pub fn next(self) -> Vertex {
        match self {
            Vertex::A => Vertex::B,
            Vertex::B => Vertex::C,
            Vertex::C => Vertex::A,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> char {
        match self {
            Vertex::A => 'A',
            Vertex::B => 'B',
            Vertex::C => 'C',
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Unordered vertex pair; the side joining it is opposite [`VertexPair::opposite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexPair {
    AB,
    BC,
    CA,
}

impl VertexPair {
    pub const ALL: [VertexPair; 3] = [VertexPair::AB, VertexPair::BC, VertexPair::CA];

    pub fn opposite(self) -> Vertex {
        match self {
            VertexPair::AB => Vertex::C,
            VertexPair::BC => Vertex::A,
            VertexPair::CA => Vertex::B,
        }
    }

    pub fn vertices(self) -> (Vertex, Vertex) {
        match self {
            VertexPair::AB => (Vertex::A, Vertex::B),
            VertexPair::BC => (Vertex::B, Vertex::C),
            VertexPair::CA => (Vertex::C, Vertex::A),
        }
    }
}

/// Reorders an `(A, B, C)`-indexed triple so that `v` comes first, keeping the cyclic order.
pub fn rotate3<T: Clone>(items: &[T; 3], v: Vertex) -> [T; 3] {
    let i = v.index();
    [items[i].clone(), items[(i + 1) % 3].clone(), items[(i + 2) % 3].clone()]
}

/// Inverse of [`rotate3`].
pub fn unrotate3<T: Clone>(items: &[T; 3], v: Vertex) -> [T; 3] {
    let i = v.index();
    let mut out = items.clone();
    for (k, item) in items.iter().enumerate() {
        out[(i + k) % 3] = item.clone();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(S::zero(), S::zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Self) -> S {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn scale(&self, k: &S) -> Self {
        Point2::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        Point2::new(
            (self.x.clone() + other.x.clone()).half(),
            (self.y.clone() + other.y.clone()).half(),
        )
    }

    pub fn dist_sq(&self, other: &Self) -> S {
        (other.clone() - self.clone()).norm_sq()
    }

    pub fn close_to(&self, other: &Self, tol: &ToleranceProfile) -> bool {
        self.x.close_to(&other.x, tol) && self.y.close_to(&other.y, tol)
    }

    pub fn to_f64(&self) -> Point2<f64> {
        Point2::new(self.x.to_f64(), self.y.to_f64())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<S: Scalar> Add for Point2<S> {
    type Output = Point2<S>;
    fn add(self, rhs: Self) -> Self {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for Point2<S> {
    type Output = Point2<S>;
    fn sub(self, rhs: Self) -> Self {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> fmt::Display for Point2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn sorted_desc<S: Scalar>(mut v: [S; 3]) -> [S; 3] {
    v.sort_by(|p, q| q.partial_cmp(p).unwrap_or(Ordering::Equal));
    v
}

/// Side lengths `(a, b, c)` of a non-degenerate triangle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideLengths<S> {
    a: S,
    b: S,
    c: S,
}

impl<S: Scalar> SideLengths<S> {
    /// Rejects nonpositive sides and any non-strict triangle inequality. The
    /// error message names the inequality, e.g. `degenerate: a + b = c`.
    pub fn new(a: S, b: S, c: S) -> Result<Self> {
        for (name, v) in [('a', &a), ('b', &b), ('c', &c)] {
            if !v.is_finite() {
                return Err(Error::NonFinite(v.to_string()));
            }
            if v.sign() != Ordering::Greater {
                return Err(Error::NonPositiveSide(name));
            }
        }
        let checks = [
            ("a + b", "c", a.clone() + b.clone(), &c),
            ("b + c", "a", b.clone() + c.clone(), &a),
            ("c + a", "b", c.clone() + a.clone(), &b),
        ];
        for (lhs_name, rhs_name, lhs, rhs) in checks {
            match lhs.partial_cmp(rhs) {
                Some(Ordering::Greater) => {}
                Some(Ordering::Equal) => {
                    return Err(Error::TriangleInequality(format!(
                        "degenerate: {lhs_name} = {rhs_name}"
                    )))
                }
                _ => {
                    return Err(Error::TriangleInequality(format!(
                        "violated: {lhs_name} < {rhs_name}"
                    )))
                }
            }
        }
        Ok(SideLengths { a, b, c })
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn b(&self) -> &S {
        &self.b
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    /// Length of the side opposite `v`.
    pub fn opposite(&self, v: Vertex) -> &S {
        match v {
            Vertex::A => &self.a,
            Vertex::B => &self.b,
            Vertex::C => &self.c,
        }
    }

    pub fn as_array(&self) -> [S; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// Relabels so that `v` plays the role of `A`: for `B` this is `(b, c, a)`.
    pub fn rotated(&self, v: Vertex) -> SideLengths<S> {
        let [a, b, c] = rotate3(&self.as_array(), v);
        SideLengths { a, b, c }
    }

    pub fn squared(&self) -> SquaredSides<S> {
        SquaredSides {
            a2: self.a.square(),
            b2: self.b.square(),
            c2: self.c.square(),
        }
    }

    pub fn scaled(&self, k: &S) -> Result<SideLengths<S>> {
        SideLengths::new(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.c.clone() * k.clone(),
        )
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    /// `s - x` for the side `x` opposite `v`, computed without forming `s` first.
    pub fn semiperimeter_excess(&self, v: Vertex) -> S {
        let [x, y, z] = rotate3(&self.as_array(), v);
        (y + z - x).half()
    }

    /// `max(a, b, c) / min(s - a, s - b, s - c)`.
    pub fn conditioning(&self) -> f64 {
        let max = sorted_desc(self.as_array())[0].to_f64();
        let min = Vertex::ALL
            .iter()
            .map(|&v| self.semiperimeter_excess(v).to_f64())
            .fold(f64::INFINITY, f64::min);
        max / min
    }

    pub fn to_f64(&self) -> SideLengths<f64> {
        SideLengths {
            a: self.a.to_f64(),
            b: self.b.to_f64(),
            c: self.c.to_f64(),
        }
    }
}

/// Squared side lengths. Enough for every quantity that depends only on
/// `a², b², c²` (circumradius, vertex-to-center distances, formula for `|XY|²`),
/// which is what a rational-coordinate triangle provides exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquaredSides<S> {
    a2: S,
    b2: S,
    c2: S,
}

impl<S: Scalar> SquaredSides<S> {
    pub fn new(a2: S, b2: S, c2: S) -> Result<Self> {
        for (name, v) in [('a', &a2), ('b', &b2), ('c', &c2)] {
            if !v.is_finite() {
                return Err(Error::NonFinite(v.to_string()));
            }
            if v.sign() != Ordering::Greater {
                return Err(Error::NonPositiveSide(name));
            }
        }
        let sides = SquaredSides { a2, b2, c2 };
        if sides.area_sq_x16().sign() != Ordering::Greater {
            return Err(Error::TriangleInequality(
                "degenerate: squared sides admit no positive area".into(),
            ));
        }
        Ok(sides)
    }

    pub fn a2(&self) -> &S {
        &self.a2
    }

    pub fn b2(&self) -> &S {
        &self.b2
    }

    pub fn c2(&self) -> &S {
        &self.c2
    }

    pub fn opposite(&self, v: Vertex) -> &S {
        match v {
            Vertex::A => &self.a2,
            Vertex::B => &self.b2,
            Vertex::C => &self.c2,
        }
    }

    pub fn rotated(&self, v: Vertex) -> SquaredSides<S> {
        let [a2, b2, c2] = rotate3(&[self.a2.clone(), self.b2.clone(), self.c2.clone()], v);
        SquaredSides { a2, b2, c2 }
    }

    /// `16 K² = 4a²b² − (a² + b² − c²)²`.
    pub fn area_sq_x16(&self) -> S {
        let four = S::from_i64(4);
        let t = self.a2.clone() + self.b2.clone() - self.c2.clone();
        four * self.a2.clone() * self.b2.clone() - t.square()
    }

    /// `R² = a²b²c² / (16 K²)`.
    pub fn circumradius_sq(&self) -> S {
        self.a2.clone() * self.b2.clone() * self.c2.clone() / self.area_sq_x16()
    }
}

/// Barycentric coordinates `(α, β, γ)` with `α + β + γ = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Barycentric<S> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
}

impl<S: Scalar> Barycentric<S> {
    pub fn new(alpha: S, beta: S, gamma: S) -> Result<Self> {
        Self::with_tolerance(alpha, beta, gamma, &ToleranceProfile::default())
    }

    /// Exact sum check for rationals; `tol` applies to floats only.
    pub fn with_tolerance(alpha: S, beta: S, gamma: S, tol: &ToleranceProfile) -> Result<Self> {
        let x = Barycentric { alpha, beta, gamma };
        x.check_sum(tol)?;
        Ok(x)
    }

    pub(crate) fn check_sum(&self, tol: &ToleranceProfile) -> Result<()> {
        let sum = self.sum();
        if sum.close_to(&S::one(), tol) {
            Ok(())
        } else {
            Err(Error::BarycentricSum(sum.to_string()))
        }
    }

    /// Coordinates computed in the frame where `v` plays the role of `A`,
    /// mapped back to the `(A, B, C)` frame.
    pub(crate) fn from_rotated(v: Vertex, coords: [S; 3]) -> Self {
        let [alpha, beta, gamma] = unrotate3(&coords, v);
        Barycentric { alpha, beta, gamma }
    }

    pub fn sum(&self) -> S {
        self.alpha.clone() + self.beta.clone() + self.gamma.clone()
    }

    pub fn weight(&self, v: Vertex) -> &S {
        match v {
            Vertex::A => &self.alpha,
            Vertex::B => &self.beta,
            Vertex::C => &self.gamma,
        }
    }

    pub fn as_array(&self) -> [S; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn close_to(&self, other: &Self, tol: &ToleranceProfile) -> bool {
        self.alpha.close_to(&other.alpha, tol)
            && self.beta.close_to(&other.beta, tol)
            && self.gamma.close_to(&other.gamma, tol)
    }
}

impl<S: Scalar> fmt::Display for Barycentric<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Semiperimeter, area and radii of a triangle, all in squared or product
/// form so they stay rational in `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleMetrics<S> {
    pub s: S,
    #[serde(rename = "K_sq")]
    pub area_sq: S,
    #[serde(rename = "R_sq")]
    pub circumradius_sq: S,
    #[serde(rename = "r_sq")]
    pub inradius_sq: S,
    #[serde(rename = "rA_sq")]
    pub exradius_a_sq: S,
    #[serde(rename = "rB_sq")]
    pub exradius_b_sq: S,
    #[serde(rename = "rC_sq")]
    pub exradius_c_sq: S,
    /// `R·r = abc / 4s`
    #[serde(rename = "Rr")]
    pub circum_in: S,
    /// `R·r_a = abc / 4(s − a)`
    #[serde(rename = "RrA")]
    pub circum_ex_a: S,
    #[serde(rename = "RrB")]
    pub circum_ex_b: S,
    #[serde(rename = "RrC")]
    pub circum_ex_c: S,
}

impl<S: Scalar> TriangleMetrics<S> {
    pub fn exradius_sq(&self, v: Vertex) -> &S {
        match v {
            Vertex::A => &self.exradius_a_sq,
            Vertex::B => &self.exradius_b_sq,
            Vertex::C => &self.exradius_c_sq,
        }
    }

    pub fn circum_ex(&self, v: Vertex) -> &S {
        match v {
            Vertex::A => &self.circum_ex_a,
            Vertex::B => &self.circum_ex_b,
            Vertex::C => &self.circum_ex_c,
        }
    }

    /// Squared nine-point radius, `R²/4`.
    pub fn nine_point_radius_sq(&self) -> S {
        self.circumradius_sq.clone() / S::from_i64(4)
    }
}

pub fn semiperimeter<S: Scalar>(sides: &SideLengths<S>) -> S {
    (sides.a.clone() + sides.b.clone() + sides.c.clone()).half()
}

/// Heron's formula in the sorted-operand form
/// `16K² = (a+(b+c))(c−(a−b))(c+(a−b))(a+(b−c))` with `a ≥ b ≥ c`.
/// Algebraically identical to `s(s−a)(s−b)(s−c)`, so it is exact for
/// rationals, and it keeps full relative accuracy in floating point for
/// needle-like triangles.
pub fn area_sq<S: Scalar>(sides: &SideLengths<S>) -> S {
    let [a, b, c] = sorted_desc(sides.as_array());
    let p1 = a.clone() + (b.clone() + c.clone());
    let p2 = c.clone() - (a.clone() - b.clone());
    let p3 = c.clone() + (a.clone() - b.clone());
    let p4 = a + (b - c);
    p1 * p2 * p3 * p4 / S::from_i64(16)
}

pub fn metrics<S: Scalar>(sides: &SideLengths<S>) -> TriangleMetrics<S> {
    let s = semiperimeter(sides);
    let k_sq = area_sq(sides);
    let abc = sides.a.clone() * sides.b.clone() * sides.c.clone();
    let four = S::from_i64(4);
    let excess = Vertex::ALL.map(|v| sides.semiperimeter_excess(v));
    let [ex_a, ex_b, ex_c] = excess.clone().map(|e| k_sq.clone() / e.square());
    let [rr_a, rr_b, rr_c] = excess.map(|e| abc.clone() / (four.clone() * e));
    TriangleMetrics {
        circumradius_sq: abc.square() / (S::from_i64(16) * k_sq.clone()),
        inradius_sq: k_sq.clone() / s.square(),
        exradius_a_sq: ex_a,
        exradius_b_sq: ex_b,
        exradius_c_sq: ex_c,
        circum_in: abc.clone() / (four * s.clone()),
        circum_ex_a: rr_a,
        circum_ex_b: rr_b,
        circum_ex_c: rr_c,
        area_sq: k_sq,
        s,
    }
}

/// Barycentric coordinates `(0, |CX|/a, |BX|/a)` of a point `X` on side `BC`.
/// Endpoints (`|BX| = 0` or `|CX| = 0`) are accepted.
pub fn point_on_side<S: Scalar>(
    dist_bx: &S,
    dist_cx: &S,
    sides: &SideLengths<S>,
    tol: &ToleranceProfile,
) -> Result<Barycentric<S>> {
    if dist_bx.sign() == Ordering::Less || dist_cx.sign() == Ordering::Less {
        return Err(Error::NegativeDistance);
    }
    let a = sides.a();
    let total = dist_bx.clone() + dist_cx.clone();
    if !total.close_to(a, tol) {
        return Err(Error::SideSplit {
            bx: dist_bx.to_string(),
            cx: dist_cx.to_string(),
            a: a.to_string(),
        });
    }
    Ok(Barycentric {
        alpha: S::zero(),
        beta: dist_cx.clone() / a.clone(),
        gamma: dist_bx.clone() / a.clone(),
    })
}

/// `|XY|² = α|AY|² + β|BY|² + γ|CY|² − (βγa² + γαb² + αβc²)`.
pub fn barycentric_distance_sq<S: Scalar>(
    x: &Barycentric<S>,
    d_ay_sq: &S,
    d_by_sq: &S,
    d_cy_sq: &S,
    sides: &SquaredSides<S>,
    tol: &ToleranceProfile,
) -> Result<S> {
    x.check_sum(tol)?;
    Ok(formula_distance_sq(x, d_ay_sq, d_by_sq, d_cy_sq, sides))
}

/// [`barycentric_distance_sq`] for coordinates already known to sum to 1.
pub(crate) fn formula_distance_sq<S: Scalar>(
    x: &Barycentric<S>,
    d_ay_sq: &S,
    d_by_sq: &S,
    d_cy_sq: &S,
    sides: &SquaredSides<S>,
) -> S {
    let (al, be, ga) = (&x.alpha, &x.beta, &x.gamma);
    let weighted = al.clone() * d_ay_sq.clone()
        + be.clone() * d_by_sq.clone()
        + ga.clone() * d_cy_sq.clone();
    let correction = be.clone() * ga.clone() * sides.a2.clone()
        + ga.clone() * al.clone() * sides.b2.clone()
        + al.clone() * be.clone() * sides.c2.clone();
    weighted - correction
}

/// A triangle placed in the plane.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Triangle<S> {
    vertices: [Point2<S>; 3],
}

impl<S: Scalar> Triangle<S> {
    pub fn new(a: Point2<S>, b: Point2<S>, c: Point2<S>) -> Result<Self> {
        for p in [&a, &b, &c] {
            if !p.is_finite() {
                return Err(Error::NonFinite(p.to_string()));
            }
        }
        let t = Triangle { vertices: [a, b, c] };
        if t.orientation().is_zero() {
            return Err(Error::Collinear);
        }
        Ok(t)
    }

    /// Places `C` at the origin, `B = (a, 0)` and `A` above the x-axis.
    /// `None` when the height of `A` has no representation (an irrational
    /// root in the exact backend).
    pub fn from_sides(sides: &SideLengths<S>) -> Option<Self> {
        let sq = sides.squared();
        let a = sides.a().clone();
        let p = (sq.a2.clone() + sq.b2.clone() - sq.c2.clone()) / (a.clone() + a.clone());
        let h = (sq.b2.clone() - p.square()).sqrt_checked()?;
        Triangle::new(Point2::new(p, h), Point2::new(a, S::zero()), Point2::new(S::zero(), S::zero())).ok()
    }

    pub fn vertex(&self, v: Vertex) -> &Point2<S> {
        &self.vertices[v.index()]
    }

    pub fn vertices(&self) -> &[Point2<S>; 3] {
        &self.vertices
    }

    /// `(A − C) × (B − C)`; twice the signed area.
    pub fn orientation(&self) -> S {
        let [a, b, c] = &self.vertices;
        (a.clone() - c.clone()).cross(&(b.clone() - c.clone()))
    }

    pub fn squared_sides(&self) -> SquaredSides<S> {
        let [a, b, c] = &self.vertices;
        SquaredSides {
            a2: b.dist_sq(c),
            b2: c.dist_sq(a),
            c2: a.dist_sq(b),
        }
    }

    /// Side lengths, when all three roots are representable (always for
    /// floats, perfect squares only for rationals).
    pub fn side_lengths(&self) -> Option<SideLengths<S>> {
        let sq = self.squared_sides();
        let a = sq.a2.sqrt_checked()?;
        let b = sq.b2.sqrt_checked()?;
        let c = sq.c2.sqrt_checked()?;
        SideLengths::new(a, b, c).ok()
    }

    pub fn to_f64(&self) -> Triangle<f64> {
        Triangle {
            vertices: self.vertices.clone().map(|p| p.to_f64()),
        }
    }

    /// Checks that `|BC|, |CA|, |AB|` match `sides` (exactly, or within `tol`
    /// on the squared lengths for floats).
    pub fn check_realizes(&self, sides: &SideLengths<S>, tol: &ToleranceProfile) -> Result<()> {
        let have = self.squared_sides();
        let want = sides.squared();
        for v in Vertex::ALL {
            if !have.opposite(v).close_to(want.opposite(v), tol) {
                return Err(Error::EmbeddingMismatch(format!(
                    "side opposite {v}: squared length {} vs {}",
                    have.opposite(v),
                    want.opposite(v)
                )));
            }
        }
        Ok(())
    }
}

/// `αA + βB + γC`.
pub fn barycentric_to_cartesian<S: Scalar>(x: &Barycentric<S>, tri: &Triangle<S>) -> Point2<S> {
    let [a, b, c] = tri.vertices();
    a.scale(&x.alpha) + b.scale(&x.beta) + c.scale(&x.gamma)
}

/// Solves `X − C = α(A − C) + β(B − C)` by Cramer's rule and sets `γ = 1 − α − β`.
pub fn cartesian_to_barycentric<S: Scalar>(p: &Point2<S>, tri: &Triangle<S>) -> Result<Barycentric<S>> {
    let [a, b, c] = tri.vertices();
    let u = a.clone() - c.clone();
    let v = b.clone() - c.clone();
    let w = p.clone() - c.clone();
    let det = u.cross(&v);
    if det.is_zero() {
        return Err(Error::Collinear);
    }
    let alpha = w.cross(&v) / det.clone();
    let beta = u.cross(&w) / det;
    let gamma = S::one() - alpha.clone() - beta.clone();
    Ok(Barycentric { alpha, beta, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn z(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn sides(a: i64, b: i64, c: i64) -> SideLengths<Rational> {
        SideLengths::new(z(a), z(b), z(c)).unwrap()
    }

    fn pt(x: Rational, y: Rational) -> Point2<Rational> {
        Point2::new(x, y)
    }

    fn right_345() -> Triangle<Rational> {
        Triangle::new(pt(z(0), z(4)), pt(z(3), z(0)), pt(z(0), z(0))).unwrap()
    }

    fn tol() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    #[test]
    fn semiperimeter_examples() {
        assert_eq!(semiperimeter(&sides(3, 4, 5)), z(6));
        assert_eq!(semiperimeter(&sides(1, 1, 1)), q(3, 2));
        assert_eq!(semiperimeter(&sides(2, 3, 4)), q(9, 2));
    }

    #[test]
    fn metrics_345() {
        let m = metrics(&sides(3, 4, 5));
        assert_eq!(m.s, z(6));
        assert_eq!(m.area_sq, z(36));
        assert_eq!(m.circumradius_sq, q(25, 4));
        assert_eq!(m.inradius_sq, z(1));
        assert_eq!(m.exradius_a_sq, z(4));
        assert_eq!(m.exradius_b_sq, z(9));
        assert_eq!(m.exradius_c_sq, z(36));
        assert_eq!(m.circum_in, q(5, 2));
        // R·r_a = (5/2)·2
        assert_eq!(m.circum_ex_a, z(5));
    }

    #[test]
    fn metrics_equilateral_and_isoceles() {
        let m = metrics(&sides(1, 1, 1));
        assert_eq!(m.s, q(3, 2));
        assert_eq!(m.area_sq, q(3, 16));
        assert_eq!(m.circumradius_sq, q(1, 3));
        assert_eq!(m.inradius_sq, q(1, 12));
        let m = metrics(&sides(2, 2, 3));
        assert_eq!(m.s, q(7, 2));
        assert_eq!(m.area_sq, q(63, 16));
    }

    #[test]
    fn heron_forms_agree() {
        for (a, b, c) in [(3, 4, 5), (2, 3, 4), (7, 8, 13), (5, 5, 9), (13, 14, 15)] {
            let sd = sides(a, b, c);
            let s = semiperimeter(&sd);
            let direct = s.clone() * (s.clone() - z(a)) * (s.clone() - z(b)) * (s - z(c));
            assert_eq!(area_sq(&sd), direct);
            assert_eq!(area_sq(&sd) * z(16), sd.squared().area_sq_x16());
        }
    }

    #[test]
    fn triangle_inequality_messages() {
        let err = SideLengths::new(z(1), z(2), z(3)).unwrap_err();
        assert_eq!(err.to_string(), "degenerate: a + b = c");
        let err = SideLengths::new(z(1), z(1), z(5)).unwrap_err();
        assert_eq!(err.to_string(), "violated: a + b < c");
        let err = SideLengths::new(z(5), z(1), z(1)).unwrap_err();
        assert_eq!(err.to_string(), "violated: b + c < a");
        let err = SideLengths::new(z(1), z(3), z(2)).unwrap_err();
        assert_eq!(err.to_string(), "degenerate: c + a = b");
        assert_eq!(SideLengths::new(z(0), z(1), z(1)), Err(Error::NonPositiveSide('a')));
        assert!(SideLengths::new(1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn equilateral_is_accepted() {
        assert!(sides(1, 1, 1).is_equilateral());
        assert!(!sides(2, 2, 3).is_equilateral());
    }

    #[test]
    fn point_on_side_examples() {
        let sd = sides(3, 4, 5);
        let mid = point_on_side(&q(3, 2), &q(3, 2), &sd, &tol()).unwrap();
        assert_eq!(mid, Barycentric::new(z(0), q(1, 2), q(1, 2)).unwrap());
        let at_c = point_on_side(&z(3), &z(0), &sd, &tol()).unwrap();
        assert_eq!(at_c.as_array(), [z(0), z(0), z(1)]);
        let x = point_on_side(&z(1), &z(2), &sd, &tol()).unwrap();
        assert_eq!(x.as_array(), [z(0), q(2, 3), q(1, 3)]);
        assert_eq!(barycentric_to_cartesian(&x, &right_345()), pt(z(2), z(0)));
    }

    #[test]
    fn point_on_side_errors() {
        let sd = sides(3, 4, 5);
        assert!(matches!(
            point_on_side(&z(1), &z(1), &sd, &tol()),
            Err(Error::SideSplit { .. })
        ));
        assert_eq!(point_on_side(&z(-1), &z(4), &sd, &tol()), Err(Error::NegativeDistance));
    }

    #[test]
    fn distance_formula_examples() {
        let sd = sides(3, 4, 5);
        let sq = sd.squared();
        // X = A returns |AY|²
        let xa = Barycentric::new(z(1), z(0), z(0)).unwrap();
        assert_eq!(barycentric_distance_sq(&xa, &z(7), &z(11), &z(13), &sq, &tol()).unwrap(), z(7));
        // X = incenter, Y = nine-point center
        let xi = Barycentric::new(q(1, 4), q(1, 3), q(5, 12)).unwrap();
        let d = barycentric_distance_sq(&xi, &q(153, 16), &q(97, 16), &q(25, 16), &sq, &tol()).unwrap();
        assert_eq!(d, q(1, 16));
        // X = B, Y = C
        let xb = Barycentric::new(z(0), z(1), z(0)).unwrap();
        let d = barycentric_distance_sq(&xb, &z(16), &z(9), &z(0), &sq, &tol()).unwrap();
        assert_eq!(d, z(9));
    }

    #[test]
    fn distance_formula_rejects_bad_sum() {
        let bad = Barycentric { alpha: z(1), beta: z(1), gamma: z(0) };
        let sq = sides(3, 4, 5).squared();
        assert!(matches!(
            barycentric_distance_sq(&bad, &z(1), &z(1), &z(1), &sq, &tol()),
            Err(Error::BarycentricSum(_))
        ));
        assert!(Barycentric::new(z(1), z(1), z(1)).is_err());
    }

    #[test]
    fn cartesian_conversions() {
        let t = right_345();
        let a = Barycentric::new(z(1), z(0), z(0)).unwrap();
        assert_eq!(barycentric_to_cartesian(&a, &t), pt(z(0), z(4)));
        let g = Barycentric::new(q(1, 3), q(1, 3), q(1, 3)).unwrap();
        assert_eq!(barycentric_to_cartesian(&g, &t), pt(z(1), q(4, 3)));
        let ea = Barycentric::new(q(-1, 2), q(2, 3), q(5, 6)).unwrap();
        assert_eq!(barycentric_to_cartesian(&ea, &t), pt(z(2), z(-2)));

        assert_eq!(cartesian_to_barycentric(&pt(z(0), z(0)), &t).unwrap().as_array(), [z(0), z(0), z(1)]);
        assert_eq!(cartesian_to_barycentric(&pt(z(1), q(4, 3)), &t).unwrap(), g);
        assert_eq!(cartesian_to_barycentric(&pt(z(2), z(-2)), &t).unwrap(), ea);
    }

    #[test]
    fn collinear_vertices_rejected() {
        let r = Triangle::new(pt(z(0), z(0)), pt(z(1), z(1)), pt(z(2), z(2)));
        assert_eq!(r, Err(Error::Collinear));
    }

    #[test]
    fn triangle_side_lengths() {
        let t = right_345();
        assert_eq!(t.side_lengths().unwrap(), sides(3, 4, 5));
        t.check_realizes(&sides(3, 4, 5), &tol()).unwrap();
        assert!(t.check_realizes(&sides(3, 5, 4), &tol()).is_err());
        let skew = Triangle::new(pt(z(0), z(1)), pt(z(1), z(0)), pt(z(0), z(0))).unwrap();
        assert!(skew.side_lengths().is_none());
        assert!(skew.to_f64().side_lengths().is_some());
    }

    #[test]
    fn rotation_relabels_sides() {
        let sd = sides(3, 4, 5);
        assert_eq!(sd.rotated(Vertex::B).as_array(), [z(4), z(5), z(3)]);
        assert_eq!(sd.rotated(Vertex::C).as_array(), [z(5), z(3), z(4)]);
        for v in Vertex::ALL {
            assert_eq!(unrotate3(&rotate3(&[1, 2, 3], v), v), [1, 2, 3]);
        }
        assert_eq!(sd.semiperimeter_excess(Vertex::A), z(3));
        assert_eq!(sd.semiperimeter_excess(Vertex::C), z(1));
    }

    #[test]
    fn squared_sides_metrics() {
        let sq = right_345().squared_sides();
        assert_eq!(sq.circumradius_sq(), q(25, 4));
        assert!(SquaredSides::new(z(1), z(4), z(9)).is_err());
    }

    #[test]
    fn float_heron_keeps_precision_on_needles() {
        // a = b = 1, c tiny: K ≈ c/2
        let c = 1e-9;
        let sd = SideLengths::new(1.0, 1.0, c).unwrap();
        let k = area_sq(&sd).sqrt();
        let exact = c / 2.0 * (1.0 - c * c / 4.0f64).sqrt();
        assert!((k - exact).abs() / exact < 1e-12);
    }

    #[test]
    fn placement_from_sides() {
        let t = Triangle::from_sides(&SideLengths::new(z(3), z(4), z(5)).unwrap()).unwrap();
        assert_eq!(t.vertices(), &[Point2::new(z(0), z(4)), Point2::new(z(3), z(0)), Point2::origin()]);
        // height √3/2 is irrational
        assert!(Triangle::from_sides(&SideLengths::new(z(1), z(1), z(1)).unwrap()).is_none());
        let f = Triangle::from_sides(&SideLengths::new(1.0, 1.0, 1.0).unwrap()).unwrap();
        assert!((f.vertex(Vertex::A).y - 3f64.sqrt() / 2.0).abs() < 1e-15);
    }
}
