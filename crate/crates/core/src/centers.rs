//! Classical triangle centers.
//!
//! Centroid, incenter and excenters have closed barycentric forms in the side
//! lengths. The circumcenter is computed in Cartesian form from the
//! perpendicular bisectors; orthocenter and nine-point center are derived
//! from it along the Euler line.

use serde::Serialize;

use crate::error::Result;
use crate::numeric::{Scalar, ToleranceProfile};
use crate::triangle::{
    barycentric_to_cartesian, point_on_side, semiperimeter, Barycentric, Point2, SideLengths,
    SquaredSides, Triangle, Vertex, VertexPair,
};

/// `(1/3, 1/3, 1/3)`.
pub fn centroid_barycentric<S: Scalar>() -> Barycentric<S> {
    let third = S::one() / S::from_i64(3);
    Barycentric {
        alpha: third.clone(),
        beta: third.clone(),
        gamma: third,
    }
}

/// `(a/2s, b/2s, c/2s)`.
pub fn incenter_barycentric<S: Scalar>(sides: &SideLengths<S>) -> Barycentric<S> {
    let two_s = semiperimeter(sides) * S::from_i64(2);
    let [alpha, beta, gamma] = sides.as_array().map(|x| x / two_s.clone());
    Barycentric { alpha, beta, gamma }
}

/// Foot of the internal bisector from `v` on the opposite side.
///
/// For `v = A` the bisector meets `BC` at `F` with `|BF| = ac/(b + c)`, so
/// by the point-on-side rule `F = (0, b/(b + c), c/(b + c))`.
pub fn bisector_foot_barycentric<S: Scalar>(
    sides: &SideLengths<S>,
    v: Vertex,
    tol: &ToleranceProfile,
) -> Result<Barycentric<S>> {
    let rot = sides.rotated(v);
    let (a, b, c) = (rot.a().clone(), rot.b().clone(), rot.c().clone());
    let bf = a.clone() * c.clone() / (b.clone() + c.clone());
    let cf = a.clone() * b.clone() / (b + c);
    let local = point_on_side(&bf, &cf, &rot, tol)?;
    Ok(Barycentric::from_rotated(v, local.as_array()))
}

/// Excenter opposite `v`; for `A` this is `(−a, b, c) / 2(s − a)`.
pub fn excenter_barycentric<S: Scalar>(sides: &SideLengths<S>, v: Vertex) -> Barycentric<S> {
    let rot = sides.rotated(v);
    let denom = sides.semiperimeter_excess(v) * S::from_i64(2);
    let coords = [
        -rot.a().clone() / denom.clone(),
        rot.b().clone() / denom.clone(),
        rot.c().clone() / denom,
    ];
    Barycentric::from_rotated(v, coords)
}

/// Intersection of the perpendicular bisectors of `CA` and `CB`, solved
/// relative to `C`:
/// `O − C = (|u|² v_y − |v|² u_y, |v|² u_x − |u|² v_x) / 2(u × v)` with
/// `u = A − C`, `v = B − C`.
pub fn circumcenter_cartesian<S: Scalar>(tri: &Triangle<S>) -> Point2<S> {
    let c = tri.vertex(Vertex::C);
    let u = tri.vertex(Vertex::A).clone() - c.clone();
    let v = tri.vertex(Vertex::B).clone() - c.clone();
    let d = S::from_i64(2) * u.cross(&v);
    let uu = u.norm_sq();
    let vv = v.norm_sq();
    let x = (uu.clone() * v.y.clone() - vv.clone() * u.y.clone()) / d.clone();
    let y = (vv * u.x.clone() - uu * v.x.clone()) / d;
    c.clone() + Point2::new(x, y)
}

pub fn centroid_cartesian<S: Scalar>(tri: &Triangle<S>) -> Point2<S> {
    barycentric_to_cartesian(&centroid_barycentric(), tri)
}

/// `H = O + 3(G − O)`.
pub fn orthocenter_from_euler<S: Scalar>(circumcenter: &Point2<S>, centroid: &Point2<S>) -> Point2<S> {
    let og = centroid.clone() - circumcenter.clone();
    circumcenter.clone() + og.scale(&S::from_i64(3))
}

/// Midpoint of `OH`.
pub fn nine_point_center<S: Scalar>(circumcenter: &Point2<S>, orthocenter: &Point2<S>) -> Point2<S> {
    circumcenter.midpoint(orthocenter)
}

/// `|VN|²` for vertex `v`; for `A`, `4|AN|² = R² − a² + b² + c²`.
pub fn vertex_to_ninepoint_dist_sq<S: Scalar>(sides: &SquaredSides<S>, v: Vertex) -> S {
    let rot = sides.rotated(v);
    (sides.circumradius_sq() - rot.a2().clone() + rot.b2().clone() + rot.c2().clone())
        / S::from_i64(4)
}

/// `(P − O)·(Q − O) = R² − ½x²` where `x` is the side joining `P` and `Q`.
pub fn circumdot<S: Scalar>(sides: &SquaredSides<S>, pair: VertexPair) -> S {
    sides.circumradius_sq() - sides.opposite(pair.opposite()).half()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BarycentricCenters<S> {
    #[serde(rename = "G")]
    pub centroid: Barycentric<S>,
    #[serde(rename = "I")]
    pub incenter: Barycentric<S>,
    #[serde(rename = "Ea")]
    pub excenter_a: Barycentric<S>,
    #[serde(rename = "Eb")]
    pub excenter_b: Barycentric<S>,
    #[serde(rename = "Ec")]
    pub excenter_c: Barycentric<S>,
}

impl<S: Scalar> BarycentricCenters<S> {
    pub fn excenter(&self, v: Vertex) -> &Barycentric<S> {
        match v {
            Vertex::A => &self.excenter_a,
            Vertex::B => &self.excenter_b,
            Vertex::C => &self.excenter_c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CartesianCenters<S> {
    #[serde(rename = "O")]
    pub circumcenter: Point2<S>,
    #[serde(rename = "G")]
    pub centroid: Point2<S>,
    #[serde(rename = "H")]
    pub orthocenter: Point2<S>,
    #[serde(rename = "N")]
    pub nine_point: Point2<S>,
    #[serde(rename = "I")]
    pub incenter: Point2<S>,
    #[serde(rename = "Ea")]
    pub excenter_a: Point2<S>,
    #[serde(rename = "Eb")]
    pub excenter_b: Point2<S>,
    #[serde(rename = "Ec")]
    pub excenter_c: Point2<S>,
}

impl<S: Scalar> CartesianCenters<S> {
    pub fn excenter(&self, v: Vertex) -> &Point2<S> {
        match v {
            Vertex::A => &self.excenter_a,
            Vertex::B => &self.excenter_b,
            Vertex::C => &self.excenter_c,
        }
    }
}

/// All centers of one triangle. Cartesian positions exist only when an
/// embedding was supplied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterSet<S> {
    pub barycentric: BarycentricCenters<S>,
    pub cartesian: Option<CartesianCenters<S>>,
}

pub fn compute_centers<S: Scalar>(sides: &SideLengths<S>, embedding: Option<&Triangle<S>>) -> CenterSet<S> {
    let barycentric = BarycentricCenters {
        centroid: centroid_barycentric(),
        incenter: incenter_barycentric(sides),
        excenter_a: excenter_barycentric(sides, Vertex::A),
        excenter_b: excenter_barycentric(sides, Vertex::B),
        excenter_c: excenter_barycentric(sides, Vertex::C),
    };
    let cartesian = embedding.map(|tri| {
        let circumcenter = circumcenter_cartesian(tri);
        let centroid = barycentric_to_cartesian(&barycentric.centroid, tri);
        let orthocenter = orthocenter_from_euler(&circumcenter, &centroid);
        let nine_point = nine_point_center(&circumcenter, &orthocenter);
        CartesianCenters {
            incenter: barycentric_to_cartesian(&barycentric.incenter, tri),
            excenter_a: barycentric_to_cartesian(&barycentric.excenter_a, tri),
            excenter_b: barycentric_to_cartesian(&barycentric.excenter_b, tri),
            excenter_c: barycentric_to_cartesian(&barycentric.excenter_c, tri),
            circumcenter,
            centroid,
            orthocenter,
            nine_point,
        }
    });
    CenterSet { barycentric, cartesian }
}
