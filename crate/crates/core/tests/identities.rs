//! Property tests over arbitrary rational input, beyond the Heronian
//! triangles the fuzz profiles produce.

use feuerbach_core::centers::{circumdot, compute_centers, vertex_to_ninepoint_dist_sq};
use feuerbach_core::harness::cartesian_oracle;
use feuerbach_core::triangle::{barycentric_distance_sq, cartesian_to_barycentric};
use feuerbach_core::*;
use proptest::prelude::*;

fn tol() -> ToleranceProfile {
    ToleranceProfile::default()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

prop_compose! {
    fn rational_sides()(a in 1i64..200, b in 1i64..200, da in 1i64..20, db in 1i64..20)
        (c in ((a * db - b * da).abs() + 1)..(a * db + b * da), a in Just(a), b in Just(b), da in Just(da), db in Just(db))
        -> SideLengths<Rational>
    {
        // common denominator da·db keeps c strictly inside the triangle inequality
        SideLengths::new(q(a, da), q(b, db), q(c, da * db)).unwrap()
    }
}

fn coord() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn point() -> impl Strategy<Value = Point2<Rational>> {
    (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle<Rational>> {
    (point(), point(), point()).prop_filter_map("collinear", |(a, b, c)| Triangle::new(a, b, c).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn feuerbach_residuals_vanish_for_any_rational_sides(sides in rational_sides()) {
        let report = feuerbach_report(&sides, &tol());
        prop_assert!(report.all_residuals_zero());
        prop_assert!(report.all_hold());
        if !report.equilateral {
            prop_assert_eq!(report.entry(CircleKind::Incircle).kind, TangencyKind::InternalTangent);
        }
    }

    #[test]
    fn scaling_sides_scales_distances(sides in rational_sides(), n in 1i64..9, d in 1i64..9) {
        let lambda = q(n, d);
        let base = feuerbach_report(&sides, &tol());
        let scaled = feuerbach_report(&sides.scaled(&lambda).unwrap(), &tol());
        for (b, s) in base.entries.iter().zip(&scaled.entries) {
            prop_assert_eq!(&s.center_dist_sq, &(&b.center_dist_sq * &lambda.square()));
            prop_assert_eq!(s.kind, b.kind);
        }
    }

    #[test]
    fn relabeling_permutes_excircles(sides in rational_sides()) {
        let [a, b, c] = sides.as_array();
        let base = feuerbach_report(&sides, &tol());
        let swapped = feuerbach_report(&SideLengths::new(b.clone(), a.clone(), c.clone()).unwrap(), &tol());
        prop_assert_eq!(
            &swapped.entry(CircleKind::ExcircleA).center_dist_sq,
            &base.entry(CircleKind::ExcircleB).center_dist_sq
        );
        prop_assert_eq!(
            &swapped.entry(CircleKind::Incircle).center_dist_sq,
            &base.entry(CircleKind::Incircle).center_dist_sq
        );
    }

    #[test]
    fn float_backend_tracks_exact(sides in rational_sides()) {
        let exact = feuerbach_report(&sides, &tol());
        let [a, b, c] = sides.as_array().map(|x| x.to_f64());
        let float = feuerbach_report(&SideLengths::new(a, b, c).unwrap(), &tol());
        let k = sides.conditioning();
        for (e, f) in exact.entries.iter().zip(&float.entries) {
            let want = e.center_dist_sq.to_f64();
            let scale = want.abs() + exact.metrics.circumradius_sq.to_f64();
            prop_assert!((f.center_dist_sq - want).abs() <= 1e-12 * k.max(1.0) * scale);
        }
    }

    #[test]
    fn distance_formula_matches_cartesian(tri in triangle(), x in point(), y in point()) {
        let bx = cartesian_to_barycentric(&x, &tri).unwrap();
        let [da, db, dc] = tri.vertices().clone().map(|v| v.dist_sq(&y));
        let got = barycentric_distance_sq(&bx, &da, &db, &dc, &tri.squared_sides(), &tol()).unwrap();
        prop_assert_eq!(got, x.dist_sq(&y));
    }

    #[test]
    fn squared_side_identities_match_oracle(tri in triangle()) {
        let sq = tri.squared_sides();
        let oracle = cartesian_oracle(&tri).unwrap();
        prop_assert_eq!(sq.circumradius_sq(), oracle.circumradius_sq.clone());
        for v in Vertex::ALL {
            prop_assert_eq!(vertex_to_ninepoint_dist_sq(&sq, v), tri.vertex(v).dist_sq(&oracle.nine_point));
        }
        for pair in VertexPair::ALL {
            let (p, r) = pair.vertices();
            let o = &oracle.circumcenter;
            let direct = (tri.vertex(p).clone() - o.clone()).dot(&(tri.vertex(r).clone() - o.clone()));
            prop_assert_eq!(circumdot(&sq, pair), direct);
        }
    }

    #[test]
    fn euler_line_and_nine_points(tri in triangle()) {
        let o = cartesian_oracle(&tri).unwrap();
        let three = Rational::from_integer(3);
        prop_assert_eq!(o.orthocenter.clone() - o.circumcenter.clone(), (o.centroid.clone() - o.circumcenter.clone()).scale(&three));
        prop_assert_eq!(o.centroid.dist_sq(&o.orthocenter), &o.circumcenter.dist_sq(&o.centroid) * &Rational::from_integer(4));
        prop_assert_eq!(o.nine_point.clone(), o.circumcenter.midpoint(&o.orthocenter));
        let r9 = &o.circumradius_sq / &Rational::from_integer(4);
        for p in o.midpoints.iter().chain(&o.altitude_feet) {
            prop_assert_eq!(p.dist_sq(&o.nine_point), r9.clone());
        }
    }

    #[test]
    fn heronian_embeddings_pass_the_suite(h in 1i64..30, m1 in 1i64..15, n1 in 1i64..15, m2 in 1i64..15, n2 in 1i64..15) {
        // a = h(f1 + f2), b = h·g1, c = h·g2 from two rational right triangles
        let leg = |m: i64, n: i64| (q(n * n - m * m, 2 * m * n), q(n * n + m * m, 2 * m * n));
        let (f1, g1) = leg(m1, n1);
        let (f2, g2) = leg(m2, n2);
        let h = Rational::from_integer(h);
        let a = &h * &(&f1 + &f2);
        prop_assume!(a > Rational::zero());
        let sides = SideLengths::new(a.clone(), &h * &g1, &h * &g2).unwrap();
        let tri = Triangle::new(
            Point2::new(&h * &f1, h.clone()),
            Point2::new(a, Rational::zero()),
            Point2::new(Rational::zero(), Rational::zero()),
        ).unwrap();
        let report = harness::check_identity_suite(&sides, &tri, &tol()).unwrap();
        prop_assert!(report.passed(), "{:?}", report.failures());
        let centers = compute_centers(&sides, Some(&tri));
        prop_assert!(centers.cartesian.is_some());
    }
}
