//! Cartesian construction of the classical centers from their defining
//! properties: perpendicular bisectors, medians, altitudes and angle
//! bisectors intersected as lines. Nothing here calls into `centers` or the
//! barycentric formulas, so the kernel cannot confirm itself.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Scalar;
use crate::triangle::{Point2, Triangle, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PointLabel {
    A,
    B,
    C,
    O,
    G,
    H,
    N,
    I,
    Ea,
    Eb,
    Ec,
}

impl PointLabel {
    pub fn excenter(v: Vertex) -> PointLabel {
        match v {
            Vertex::A => PointLabel::Ea,
            Vertex::B => PointLabel::Eb,
            Vertex::C => PointLabel::Ec,
        }
    }

    pub fn vertex(v: Vertex) -> PointLabel {
        match v {
            Vertex::A => PointLabel::A,
            Vertex::B => PointLabel::B,
            Vertex::C => PointLabel::C,
        }
    }
}

struct Line<S> {
    through: Point2<S>,
    dir: Point2<S>,
}

fn perp<S: Scalar>(v: &Point2<S>) -> Point2<S> {
    Point2::new(-v.y.clone(), v.x.clone())
}

fn intersect<S: Scalar>(l1: &Line<S>, l2: &Line<S>) -> Option<Point2<S>> {
    let denom = l1.dir.cross(&l2.dir);
    if denom.is_zero() {
        return None;
    }
    let t = (l2.through.clone() - l1.through.clone()).cross(&l2.dir) / denom;
    Some(l1.through.clone() + l1.dir.scale(&t))
}

fn perpendicular_bisector<S: Scalar>(p: &Point2<S>, q: &Point2<S>) -> Line<S> {
    Line {
        through: p.midpoint(q),
        dir: perp(&(q.clone() - p.clone())),
    }
}

fn circumcenter_of<S: Scalar>(p: &Point2<S>, q: &Point2<S>, r: &Point2<S>) -> Option<Point2<S>> {
    intersect(&perpendicular_bisector(p, q), &perpendicular_bisector(q, r))
}

/// Orthogonal projection of `p` onto the line through `q` and `r`.
fn foot<S: Scalar>(p: &Point2<S>, q: &Point2<S>, r: &Point2<S>) -> Point2<S> {
    let d = r.clone() - q.clone();
    let t = (p.clone() - q.clone()).dot(&d) / d.norm_sq();
    q.clone() + d.scale(&t)
}

/// Squared distance from `p` to the line through `q` and `r`.
pub(crate) fn line_dist_sq<S: Scalar>(p: &Point2<S>, q: &Point2<S>, r: &Point2<S>) -> S {
    let d = r.clone() - q.clone();
    (p.clone() - q.clone()).cross(&d).square() / d.norm_sq()
}

/// Independently constructed centers and nine-point data of one triangle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult<S> {
    pub triangle: Triangle<S>,
    pub circumcenter: Point2<S>,
    pub centroid: Point2<S>,
    pub orthocenter: Point2<S>,
    /// Circumcenter of the side-midpoint triangle.
    pub nine_point: Point2<S>,
    /// Needs rational side lengths in the exact backend.
    pub incenter: Option<Point2<S>>,
    pub excenters: Option<[Point2<S>; 3]>,
    /// Midpoints of the sides opposite `A`, `B`, `C`.
    pub midpoints: [Point2<S>; 3],
    /// Feet of the altitudes from `A`, `B`, `C`.
    pub altitude_feet: [Point2<S>; 3],
    pub circumradius_sq: S,
    pub nine_point_radius_sq: S,
}

impl<S: Scalar> OracleResult<S> {
    pub fn point(&self, label: PointLabel) -> Option<&Point2<S>> {
        let tri = &self.triangle;
        match label {
            PointLabel::A => Some(tri.vertex(Vertex::A)),
            PointLabel::B => Some(tri.vertex(Vertex::B)),
            PointLabel::C => Some(tri.vertex(Vertex::C)),
            PointLabel::O => Some(&self.circumcenter),
            PointLabel::G => Some(&self.centroid),
            PointLabel::H => Some(&self.orthocenter),
            PointLabel::N => Some(&self.nine_point),
            PointLabel::I => self.incenter.as_ref(),
            PointLabel::Ea => self.excenters.as_ref().map(|e| &e[0]),
            PointLabel::Eb => self.excenters.as_ref().map(|e| &e[1]),
            PointLabel::Ec => self.excenters.as_ref().map(|e| &e[2]),
        }
    }

    /// Every constructed point, in label order.
    pub fn points(&self) -> Vec<(PointLabel, &Point2<S>)> {
        use PointLabel::*;
        [A, B, C, O, G, H, N, I, Ea, Eb, Ec]
            .into_iter()
            .filter_map(|l| self.point(l).map(|p| (l, p)))
            .collect()
    }

    /// Squared distances between all pairs of constructed points.
    pub fn pairwise_dist_sq(&self) -> Vec<(PointLabel, PointLabel, S)> {
        let pts = self.points();
        let mut out = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
        for (i, (l1, p1)) in pts.iter().enumerate() {
            for (l2, p2) in &pts[i + 1..] {
                out.push((*l1, *l2, p1.dist_sq(p2)));
            }
        }
        out
    }
}

pub fn cartesian_oracle<S: Scalar>(tri: &Triangle<S>) -> Result<OracleResult<S>> {
    let [a, b, c] = tri.vertices().clone();
    let circumcenter = circumcenter_of(&a, &b, &c).ok_or(Error::Collinear)?;
    let midpoints = [b.midpoint(&c), c.midpoint(&a), a.midpoint(&b)];

    let median_a = Line { through: a.clone(), dir: midpoints[0].clone() - a.clone() };
    let median_b = Line { through: b.clone(), dir: midpoints[1].clone() - b.clone() };
    let centroid = intersect(&median_a, &median_b).ok_or(Error::Collinear)?;

    let altitude_a = Line { through: a.clone(), dir: perp(&(c.clone() - b.clone())) };
    let altitude_b = Line { through: b.clone(), dir: perp(&(a.clone() - c.clone())) };
    let orthocenter = intersect(&altitude_a, &altitude_b).ok_or(Error::Collinear)?;

    let nine_point =
        circumcenter_of(&midpoints[0], &midpoints[1], &midpoints[2]).ok_or(Error::Collinear)?;
    let altitude_feet = [foot(&a, &b, &c), foot(&b, &c, &a), foot(&c, &a, &b)];

    let lengths = [b.dist_sq(&c), c.dist_sq(&a), a.dist_sq(&b)]
        .map(|sq| sq.sqrt_checked());
    let (incenter, excenters) = match lengths {
        [Some(la), Some(lb), Some(lc)] => {
            // unit vectors along the sides leaving each vertex
            let u_ab = (b.clone() - a.clone()).scale(&(S::one() / lc.clone()));
            let u_ac = (c.clone() - a.clone()).scale(&(S::one() / lb.clone()));
            let u_bc = (c.clone() - b.clone()).scale(&(S::one() / la.clone()));
            let u_ba = u_ab.scale(&-S::one());
            let u_ca = u_ac.scale(&-S::one());
            let u_cb = u_bc.scale(&-S::one());

            let internal = |p: &Point2<S>, u: &Point2<S>, v: &Point2<S>| Line {
                through: p.clone(),
                dir: u.clone() + v.clone(),
            };
            let external = |p: &Point2<S>, u: &Point2<S>, v: &Point2<S>| Line {
                through: p.clone(),
                dir: u.clone() - v.clone(),
            };
            let bis_a = internal(&a, &u_ab, &u_ac);
            let bis_b = internal(&b, &u_ba, &u_bc);
            let bis_c = internal(&c, &u_ca, &u_cb);
            let ext_a = external(&a, &u_ab, &u_ac);
            let ext_b = external(&b, &u_ba, &u_bc);

            let incenter = intersect(&bis_a, &bis_b).ok_or(Error::Collinear)?;
            let ea = intersect(&bis_a, &ext_b).ok_or(Error::Collinear)?;
            let eb = intersect(&bis_b, &ext_a).ok_or(Error::Collinear)?;
            let ec = intersect(&bis_c, &ext_a).ok_or(Error::Collinear)?;
            (Some(incenter), Some([ea, eb, ec]))
        }
        _ => (None, None),
    };

    Ok(OracleResult {
        triangle: tri.clone(),
        circumradius_sq: circumcenter.dist_sq(&a),
        nine_point_radius_sq: nine_point.dist_sq(&midpoints[0]),
        circumcenter,
        centroid,
        orthocenter,
        nine_point,
        incenter,
        excenters,
        midpoints,
        altitude_feet,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Rational, ToleranceProfile};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn z(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn pt(x: Rational, y: Rational) -> Point2<Rational> {
        Point2::new(x, y)
    }

    #[test]
    fn right_345_placement() {
        let tri = Triangle::new(pt(z(0), z(4)), pt(z(3), z(0)), pt(z(0), z(0))).unwrap();
        let o = cartesian_oracle(&tri).unwrap();
        assert_eq!(o.incenter.clone().unwrap(), pt(z(1), z(1)));
        assert_eq!(o.circumcenter, pt(q(3, 2), z(2)));
        assert_eq!(o.orthocenter, pt(z(0), z(0)));
        assert_eq!(o.nine_point, pt(q(3, 4), z(1)));
        assert_eq!(o.nine_point_radius_sq, q(25, 16));
        assert_eq!(o.centroid, pt(z(1), q(4, 3)));
        assert_eq!(o.excenters.clone().unwrap()[0], pt(z(2), z(-2)));
        assert_eq!(o.nine_point, o.circumcenter.midpoint(&o.orthocenter));
        assert_eq!(o.points().len(), 11);
        assert_eq!(o.pairwise_dist_sq().len(), 55);
        let ni = o
            .pairwise_dist_sq()
            .into_iter()
            .find(|(l1, l2, _)| (*l1, *l2) == (PointLabel::N, PointLabel::I))
            .unwrap();
        assert_eq!(ni.2, q(1, 16));
    }

    #[test]
    fn excenters_lie_on_external_bisectors_of_all_vertices() {
        let tri = Triangle::new(pt(z(0), z(4)), pt(z(3), z(0)), pt(z(0), z(0))).unwrap();
        let o = cartesian_oracle(&tri).unwrap();
        let [ea, eb, ec] = o.excenters.unwrap();
        // (-3, 3): equidistant from CA (x = 0), BC (y = 0) and AB
        assert_eq!(eb, pt(z(-3), z(3)));
        assert_eq!(ec, pt(z(6), z(6)));
        assert_eq!(ea, pt(z(2), z(-2)));
    }

    #[test]
    fn equilateral_centers_coincide() {
        let h = 3f64.sqrt() / 2.0;
        let tri = Triangle::new(Point2::new(0.5, h), Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)).unwrap();
        let o = cartesian_oracle(&tri).unwrap();
        let tol = ToleranceProfile::default();
        let i = o.incenter.clone().unwrap();
        for p in [&o.circumcenter, &o.centroid, &o.orthocenter, &o.nine_point] {
            assert!(p.close_to(&i, &tol), "{p} vs {i}");
        }
    }

    #[test]
    fn irrational_sides_skip_bisector_centers() {
        let tri = Triangle::new(pt(z(0), z(1)), pt(z(1), z(0)), pt(z(0), z(0))).unwrap();
        let o = cartesian_oracle(&tri).unwrap();
        assert!(o.incenter.is_none() && o.excenters.is_none());
        assert_eq!(o.points().len(), 7);
    }
}
