//! Runs every kernel identity against the Cartesian oracle for one triangle.

use serde::Serialize;

use super::oracle::{cartesian_oracle, line_dist_sq, OracleResult, PointLabel};
use crate::centers::{
    bisector_foot_barycentric, circumdot, compute_centers, vertex_to_ninepoint_dist_sq,
    CartesianCenters,
};
use crate::error::Result;
use crate::feuerbach::{classify_tangency, feuerbach_report, Circle, CircleKind, FeuerbachReport, TangencyKind};
use crate::numeric::{Scalar, ToleranceProfile};
use crate::triangle::{
    barycentric_to_cartesian, cartesian_to_barycentric, metrics, point_on_side, Barycentric,
    Point2, SideLengths, Triangle, TriangleMetrics, Vertex, VertexPair,
};

/// Outcome of one named identity, aggregated over all its evaluations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    pub evaluations: usize,
    /// Largest `|lhs − rhs| / scale` seen; always 0 in the exact backend when passing.
    pub max_normalized_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub equilateral: bool,
    pub conditioning: f64,
    pub checks: Vec<IdentityCheck>,
    /// Largest Feuerbach residual divided by `R²/4`.
    pub feuerbach_max_normalized_residual: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_normalized_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_normalized_residual).fold(0.0, f64::max)
    }
}

struct Checker {
    tol: ToleranceProfile,
    exact: bool,
    checks: Vec<IdentityCheck>,
}

impl Checker {
    fn entry(&mut self, name: &'static str) -> &mut IdentityCheck {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(IdentityCheck {
            name,
            passed: true,
            evaluations: 0,
            max_normalized_residual: 0.0,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// `lhs = rhs`, judged exactly or against `scale` (a magnitude of the
    /// compared quantities, as f64).
    fn equal<S: Scalar>(&mut self, name: &'static str, lhs: &S, rhs: &S, scale: f64) {
        let residual = lhs.clone() - rhs.clone();
        let r = residual.to_f64().abs();
        let normalized = if scale > 0.0 { r / scale } else { r };
        let ok = if self.exact {
            residual.is_zero()
        } else {
            r.is_finite() && r <= self.tol.abs_eps() + self.tol.rel_eps() * scale
        };
        let e = self.entry(name);
        e.evaluations += 1;
        e.passed &= ok;
        if normalized.is_nan() {
            e.max_normalized_residual = f64::INFINITY;
        } else {
            e.max_normalized_residual = e.max_normalized_residual.max(normalized);
        }
    }

    fn zero<S: Scalar>(&mut self, name: &'static str, value: &S, scale: f64) {
        self.equal(name, value, &S::zero(), scale);
    }

    fn points<S: Scalar>(&mut self, name: &'static str, p: &Point2<S>, q: &Point2<S>, scale: f64) {
        self.equal(name, &p.x, &q.x, scale);
        self.equal(name, &p.y, &q.y, scale);
    }

    fn holds(&mut self, name: &'static str, ok: bool) {
        let e = self.entry(name);
        e.evaluations += 1;
        e.passed &= ok;
    }
}

/// Checks the kernel identities of one triangle against the Cartesian
/// oracle. `embedding` must realize `sides` (exactly for rationals, within
/// `tol` for floats); otherwise [`Error::EmbeddingMismatch`] is returned.
pub fn check_identity_suite<S: Scalar>(
    sides: &SideLengths<S>,
    embedding: &Triangle<S>,
    tol: &ToleranceProfile,
) -> Result<SuiteReport> {
    embedding.check_realizes(sides, tol)?;
    let oracle = cartesian_oracle(embedding)?;
    let m = metrics(sides);
    let centers = compute_centers(sides, Some(embedding));
    let cart = centers.cartesian.as_ref().expect("embedding supplied");
    let report = feuerbach_report(sides, tol);

    // length scale: extent of the vertices plus the circumradius
    let extent = embedding
        .vertices()
        .iter()
        .map(|p| p.x.to_f64().abs().max(p.y.to_f64().abs()))
        .fold(0.0, f64::max);
    let len = extent + m.circumradius_sq.to_f64().sqrt();
    let area = len * len;

    let mut ck = Checker { tol: *tol, exact: S::EXACT, checks: Vec::new() };
    check_metrics(&mut ck, sides, embedding, &m, &oracle);
    check_coordinates(&mut ck, sides, embedding, &oracle, len, area, tol)?;
    check_centers(&mut ck, sides, embedding, &m, cart, &oracle, len, area);
    check_feuerbach(&mut ck, sides, &m, &report, &oracle, area, tol)?;
    check_nine_point(&mut ck, &m, &oracle, area);

    Ok(SuiteReport {
        equilateral: report.equilateral,
        conditioning: sides.conditioning(),
        feuerbach_max_normalized_residual: report.max_normalized_residual(),
        checks: ck.checks,
    })
}

fn check_metrics<S: Scalar>(
    ck: &mut Checker,
    sides: &SideLengths<S>,
    tri: &Triangle<S>,
    m: &TriangleMetrics<S>,
    oracle: &OracleResult<S>,
) {
    let k_sq = &m.area_sq;
    let scale = k_sq.to_f64().abs();
    // (2K)² from the coordinates
    let orient_sq = tri.orientation().square() / S::from_i64(4);
    ck.equal("metrics_area", k_sq, &orient_sq, scale);

    let abc = sides.a().clone() * sides.b().clone() * sides.c().clone();
    let lhs = S::from_i64(16) * m.circumradius_sq.clone() * k_sq.clone();
    let rhs = abc.square();
    ck.equal("metrics_circumradius", &lhs, &rhs, rhs.to_f64());
    ck.equal(
        "metrics_circumradius",
        &m.circumradius_sq,
        &oracle.circumradius_sq,
        m.circumradius_sq.to_f64(),
    );

    ck.equal("metrics_inradius", &(m.inradius_sq.clone() * m.s.square()), k_sq, scale);
    ck.equal(
        "metrics_circum_products",
        &m.circum_in.square(),
        &(m.circumradius_sq.clone() * m.inradius_sq.clone()),
        m.circum_in.square().to_f64(),
    );
    for v in Vertex::ALL {
        let ex = sides.semiperimeter_excess(v);
        ck.equal("metrics_exradii", &(m.exradius_sq(v).clone() * ex.square()), k_sq, scale);
        let prod = m.circum_ex(v).square();
        ck.equal(
            "metrics_circum_products",
            &prod,
            &(m.circumradius_sq.clone() * m.exradius_sq(v).clone()),
            prod.to_f64(),
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn check_coordinates<S: Scalar>(
    ck: &mut Checker,
    sides: &SideLengths<S>,
    tri: &Triangle<S>,
    oracle: &OracleResult<S>,
    len: f64,
    area: f64,
    tol: &ToleranceProfile,
) -> Result<()> {
    let sq = tri.squared_sides();
    let pts = oracle.points();
    let bary: Vec<(PointLabel, Barycentric<S>)> = pts
        .iter()
        .map(|(l, p)| cartesian_to_barycentric(p, tri).map(|b| (*l, b)))
        .collect::<Result<_>>()?;

    for ((_, p), (_, b)) in pts.iter().zip(&bary) {
        ck.equal("barycentric_sum", &b.sum(), &S::one(), 1.0);
        ck.points("barycentric_roundtrip", &barycentric_to_cartesian(b, tri), p, len);
    }

    for ((lx, px), (_, bx)) in pts.iter().zip(&bary) {
        for (ly, py) in &pts {
            if lx == ly {
                continue;
            }
            let [da, db, dc] = Vertex::ALL.map(|v| tri.vertex(v).dist_sq(py));
            let via_formula = crate::triangle::barycentric_distance_sq(bx, &da, &db, &dc, &sq, tol)?;
            ck.equal("distance_formula", &via_formula, &px.dist_sq(py), area);
        }
    }

    for v in Vertex::ALL {
        let rot = sides.rotated(v);
        let half = rot.a().half();
        let local = point_on_side(&half, &half, &rot, tol)?;
        let mid = Barycentric::from_rotated(v, local.as_array());
        ck.holds("point_on_side", mid.weight(v).is_zero());
        ck.points("point_on_side", &barycentric_to_cartesian(&mid, tri), &oracle.midpoints[v.index()], len);

        let foot = bisector_foot_barycentric(sides, v, tol)?;
        let others_nonneg = Vertex::ALL
            .iter()
            .filter(|&&w| w != v)
            .all(|&w| foot.weight(w).sign() != std::cmp::Ordering::Less);
        ck.holds("bisector_foot", foot.weight(v).is_zero() && others_nonneg);
        if let Some(incenter) = &oracle.incenter {
            // the foot lies on the line through the vertex and the incenter
            let f = barycentric_to_cartesian(&foot, tri);
            let vert = tri.vertex(v).clone();
            let cross = (f - vert.clone()).cross(&(incenter.clone() - vert));
            ck.zero("bisector_foot", &cross, area);
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn check_centers<S: Scalar>(
    ck: &mut Checker,
    sides: &SideLengths<S>,
    tri: &Triangle<S>,
    m: &TriangleMetrics<S>,
    cart: &CartesianCenters<S>,
    oracle: &OracleResult<S>,
    len: f64,
    area: f64,
) {
    let (o, g, h) = (&oracle.circumcenter, &oracle.centroid, &oracle.orthocenter);
    let three_og = (g.clone() - o.clone()).scale(&S::from_i64(3));
    ck.points("euler_vector", &(h.clone() - o.clone()), &three_og, len);
    ck.equal("euler_ratio", &g.dist_sq(h), &(S::from_i64(4) * o.dist_sq(g)), area);

    let [a, b, c] = tri.vertices().clone();
    let kh = &cart.orthocenter;
    ck.zero("altitude_property", &(kh.clone() - a.clone()).dot(&(b.clone() - c.clone())), area);
    ck.zero("altitude_property", &(kh.clone() - b.clone()).dot(&(a.clone() - c.clone())), area);

    ck.points("kernel_centers_match_oracle", &cart.circumcenter, o, len);
    ck.points("kernel_centers_match_oracle", &cart.centroid, g, len);
    ck.points("kernel_centers_match_oracle", kh, h, len);
    ck.points("kernel_centers_match_oracle", &cart.nine_point, &oracle.nine_point, len);
    ck.points("nine_point_center_is_oh_midpoint", &oracle.nine_point, &o.midpoint(h), len);

    if let Some(incenter) = &oracle.incenter {
        ck.points("kernel_centers_match_oracle", &cart.incenter, incenter, len);
        for v in Vertex::ALL {
            let (p, q) = (tri.vertex(v.next()), tri.vertex(v.next().next()));
            ck.equal("incircle_equidistance", &line_dist_sq(incenter, p, q), &m.inradius_sq, area);
        }
    }
    if let Some(excenters) = &oracle.excenters {
        for v in Vertex::ALL {
            let e = &excenters[v.index()];
            ck.points("kernel_centers_match_oracle", cart.excenter(v), e, len);
            for w in Vertex::ALL {
                let (p, q) = (tri.vertex(w.next()), tri.vertex(w.next().next()));
                ck.equal("excircle_equidistance", &line_dist_sq(e, p, q), m.exradius_sq(v), area);
            }
        }
    }

    let sq = sides.squared();
    for v in Vertex::ALL {
        let direct = tri.vertex(v).dist_sq(&oracle.nine_point);
        ck.equal("vertex_ninepoint_distance", &vertex_to_ninepoint_dist_sq(&sq, v), &direct, area);
    }
    for pair in VertexPair::ALL {
        let (p, q) = pair.vertices();
        let direct = (tri.vertex(p).clone() - o.clone()).dot(&(tri.vertex(q).clone() - o.clone()));
        ck.equal("circumdot", &circumdot(&sq, pair), &direct, area);
    }
}

fn check_feuerbach<S: Scalar>(
    ck: &mut Checker,
    sides: &SideLengths<S>,
    m: &TriangleMetrics<S>,
    report: &FeuerbachReport<S>,
    oracle: &OracleResult<S>,
    area: f64,
    tol: &ToleranceProfile,
) -> Result<()> {
    let nine_sq = m.nine_point_radius_sq();
    let nine_f = nine_sq.to_f64();
    for e in &report.entries {
        ck.zero("feuerbach_residuals", &e.residual, nine_f);
    }
    ck.holds("feuerbach_kinds", report.all_hold());

    let nine = Circle::new(oracle.nine_point.clone(), oracle.nine_point_radius_sq.clone())?;
    let mut tangent = Vec::new();
    if let Some(i) = &oracle.incenter {
        tangent.push((CircleKind::Incircle, i.clone(), m.inradius_sq.clone()));
    }
    if let Some(ex) = &oracle.excenters {
        for v in Vertex::ALL {
            tangent.push((CircleKind::excircle(v), ex[v.index()].clone(), m.exradius_sq(v).clone()));
        }
    }
    for (kind, center, radius_sq) in tangent {
        let entry = report.entry(kind);
        ck.equal("feuerbach_oracle_distances", &entry.center_dist_sq, &center.dist_sq(&oracle.nine_point), area);
        let circle = Circle::new(center, radius_sq)?;
        let fwd = classify_tangency(&circle, &nine, tol);
        let back = classify_tangency(&nine, &circle, tol);
        let expected_ok = |k: TangencyKind| {
            k == kind.expected()
                || (kind == CircleKind::Incircle && k == TangencyKind::Coincident)
        };
        match (fwd, back) {
            (Ok(f), Ok(b)) => {
                ck.holds("feuerbach_oracle_classification", expected_ok(f.kind));
                ck.holds("classification_symmetric", f.kind == b.kind);
            }
            // irrational radius product: only possible for inconsistent input
            _ => ck.holds("feuerbach_oracle_classification", false),
        }
    }

    let lambda = S::from_i64(3) / S::from_i64(2);
    let lambda_sq = lambda.square();
    let scaled = feuerbach_report(&sides.scaled(&lambda)?, tol);
    for (e, s) in report.entries.iter().zip(&scaled.entries) {
        ck.equal(
            "scale_covariance",
            &s.center_dist_sq,
            &(e.center_dist_sq.clone() * lambda_sq.clone()),
            area * lambda_sq.to_f64(),
        );
        ck.zero("scale_covariance", &s.residual, nine_f * lambda_sq.to_f64());
        ck.holds("scale_covariance", s.kind == e.kind);
    }

    // relabel B as A: the new exA is the old exB
    let rotated = feuerbach_report(&sides.rotated(Vertex::B), tol);
    // swap b and c: exB and exC trade places
    let [a, b, c] = sides.as_array();
    let swapped = feuerbach_report(&SideLengths::new(a, c, b)?, tol);
    let pairs = [
        (CircleKind::Incircle, CircleKind::Incircle, CircleKind::Incircle),
        (CircleKind::ExcircleA, CircleKind::ExcircleB, CircleKind::ExcircleA),
        (CircleKind::ExcircleB, CircleKind::ExcircleC, CircleKind::ExcircleC),
        (CircleKind::ExcircleC, CircleKind::ExcircleA, CircleKind::ExcircleB),
    ];
    for (new, old_rot, old_swap) in pairs {
        let r = rotated.entry(new);
        let s = swapped.entry(new);
        ck.equal("permutation_equivariance", &r.center_dist_sq, &report.entry(old_rot).center_dist_sq, area);
        ck.holds("permutation_equivariance", r.kind == report.entry(old_rot).kind);
        ck.equal("permutation_equivariance", &s.center_dist_sq, &report.entry(old_swap).center_dist_sq, area);
        ck.holds("permutation_equivariance", s.kind == report.entry(old_swap).kind);
    }
    Ok(())
}

fn check_nine_point<S: Scalar>(ck: &mut Checker, m: &TriangleMetrics<S>, oracle: &OracleResult<S>, area: f64) {
    let nine_sq = m.nine_point_radius_sq();
    ck.equal("nine_point_radius", &oracle.nine_point_radius_sq, &nine_sq, nine_sq.to_f64());
    for p in oracle.midpoints.iter().chain(&oracle.altitude_feet) {
        ck.equal("nine_point_membership", &p.dist_sq(&oracle.nine_point), &nine_sq, area);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numeric::Rational;

    fn z(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn canonical_345_all_exact() {
        let sides = SideLengths::new(z(3), z(4), z(5)).unwrap();
        let tri = Triangle::new(
            Point2::new(z(0), z(4)),
            Point2::new(z(3), z(0)),
            Point2::new(z(0), z(0)),
        )
        .unwrap();
        let r = check_identity_suite(&sides, &tri, &ToleranceProfile::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.max_normalized_residual(), 0.0);
        assert!(!r.equilateral);
        for name in [
            "distance_formula",
            "euler_vector",
            "kernel_centers_match_oracle",
            "feuerbach_oracle_classification",
            "nine_point_membership",
            "incircle_equidistance",
            "excircle_equidistance",
        ] {
            assert!(r.check(name).unwrap().evaluations > 0, "{name}");
        }
    }

    #[test]
    fn mismatched_embedding_rejected() {
        let sides = SideLengths::new(z(3), z(5), z(4)).unwrap();
        let tri = Triangle::new(
            Point2::new(z(0), z(4)),
            Point2::new(z(3), z(0)),
            Point2::new(z(0), z(0)),
        )
        .unwrap();
        let err = check_identity_suite(&sides, &tri, &ToleranceProfile::default()).unwrap_err();
        assert!(matches!(err, Error::EmbeddingMismatch(_)));
    }

    #[test]
    fn equilateral_float_passes_with_flag() {
        let h = 3f64.sqrt() / 2.0;
        let sides = SideLengths::new(1.0, 1.0, 1.0).unwrap();
        let tri = Triangle::new(Point2::new(0.5, h), Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)).unwrap();
        let r = check_identity_suite(&sides, &tri, &ToleranceProfile::default()).unwrap();
        assert!(r.equilateral);
        assert!(r.passed(), "{:?}", r.failures());
    }
}
