//! Tangency of the nine-point circle with the incircle and excircles.
//!
//! Center distances are obtained from the barycentric distance formula with
//! the vertex-to-nine-point-center distances, never from Cartesian
//! positions. The predicted squared distances `(R/2 − r)²` and
//! `(R/2 + r_x)²` are expanded to `R²/4 + r² − Rr` and
//! `R²/4 + r_x² + Rr_x`, so every quantity stays rational in the side
//! lengths and the residuals are exact zeros in the rational backend.

use std::fmt;

use serde::Serialize;

use crate::centers::{excenter_barycentric, incenter_barycentric, vertex_to_ninepoint_dist_sq};
use crate::error::{Error, Result};
use crate::numeric::{negligible, Scalar, ToleranceProfile};
use crate::triangle::{formula_distance_sq, metrics, Barycentric, Point2, SideLengths, TriangleMetrics, Vertex};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Circle<S> {
    pub center: Point2<S>,
    pub radius_sq: S,
}

impl<S: Scalar> Circle<S> {
    pub fn new(center: Point2<S>, radius_sq: S) -> Result<Self> {
        if radius_sq.sign() != std::cmp::Ordering::Greater {
            return Err(Error::NonPositiveRadius);
        }
        Ok(Circle { center, radius_sq })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TangencyKind {
    InternalTangent,
    ExternalTangent,
    Coincident,
    NotTangent,
}

impl fmt::Display for TangencyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TangencyKind::InternalTangent => "internal",
            TangencyKind::ExternalTangent => "external",
            TangencyKind::Coincident => "coincident",
            TangencyKind::NotTangent => "not-tangent",
        })
    }
}

/// Classified relationship of two circles.
///
/// `lhs` is the squared center distance and `rhs` the squared radius
/// combination it was matched against: `(r₁ − r₂)²` for internal tangency,
/// `(r₁ + r₂)²` for external, `0` for coincident centers. For `NotTangent`,
/// `rhs` is whichever candidate came closer; both candidate residuals are
/// always carried.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangencyReport<S> {
    pub kind: TangencyKind,
    pub lhs: S,
    pub rhs: S,
    pub residual: S,
    pub internal_residual: S,
    pub external_residual: S,
}

/// Classification from squared data. `radius_product` must equal `r₁r₂`.
pub fn classify_squares<S: Scalar>(
    center_dist_sq: &S,
    r1_sq: &S,
    r2_sq: &S,
    radius_product: &S,
    tol: &ToleranceProfile,
) -> TangencyReport<S> {
    let two_rr = radius_product.clone() * S::from_i64(2);
    let radii = r1_sq.clone() + r2_sq.clone();
    let internal_rhs = radii.clone() - two_rr.clone();
    let external_rhs = radii.clone() + two_rr;
    let internal_residual = center_dist_sq.clone() - internal_rhs.clone();
    let external_residual = center_dist_sq.clone() - external_rhs.clone();
    let scale = radii + center_dist_sq.abs();

    let internal_ok = negligible(&internal_residual, &scale, tol);
    let external_ok = negligible(&external_residual, &scale, tol);
    let internal_nearer = internal_residual.abs() <= external_residual.abs();
    // When 4·r₁r₂ drops below the tolerance both tests pass; the nearer wins.
    let (kind, rhs, residual) = if negligible(center_dist_sq, &scale, tol) {
        (TangencyKind::Coincident, S::zero(), center_dist_sq.clone())
    } else if internal_ok && (!external_ok || internal_nearer) {
        (TangencyKind::InternalTangent, internal_rhs, internal_residual.clone())
    } else if external_ok {
        (TangencyKind::ExternalTangent, external_rhs, external_residual.clone())
    } else if internal_nearer {
        (TangencyKind::NotTangent, internal_rhs, internal_residual.clone())
    } else {
        (TangencyKind::NotTangent, external_rhs, external_residual.clone())
    };
    TangencyReport {
        kind,
        lhs: center_dist_sq.clone(),
        rhs,
        residual,
        internal_residual,
        external_residual,
    }
}

/// Classifies two circles by comparing `d²` with `(r₁ ± r₂)²`.
///
/// In the exact backend this needs `r₁r₂ = √(r₁²r₂²)` to be rational and
/// fails with [`Error::IrrationalRadiusProduct`] otherwise.
pub fn classify_tangency<S: Scalar>(
    c1: &Circle<S>,
    c2: &Circle<S>,
    tol: &ToleranceProfile,
) -> Result<TangencyReport<S>> {
    for c in [c1, c2] {
        if c.radius_sq.sign() != std::cmp::Ordering::Greater {
            return Err(Error::NonPositiveRadius);
        }
    }
    let product = (c1.radius_sq.clone() * c2.radius_sq.clone())
        .sqrt_checked()
        .ok_or(Error::IrrationalRadiusProduct)?;
    let d_sq = c1.center.dist_sq(&c2.center);
    Ok(classify_squares(&d_sq, &c1.radius_sq, &c2.radius_sq, &product, tol))
}

/// Squared center distance, its predicted value, and their difference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangencyTerms<S> {
    pub center_dist_sq: S,
    pub predicted_sq: S,
    pub residual: S,
}

fn center_to_ninepoint_dist_sq<S: Scalar>(x: &Barycentric<S>, sides: &SideLengths<S>) -> S {
    let sq = sides.squared();
    let [da, db, dc] = Vertex::ALL.map(|v| vertex_to_ninepoint_dist_sq(&sq, v));
    formula_distance_sq(x, &da, &db, &dc, &sq)
}

pub fn incircle_ninepoint_terms<S: Scalar>(sides: &SideLengths<S>, m: &TriangleMetrics<S>) -> TangencyTerms<S> {
    let center_dist_sq = center_to_ninepoint_dist_sq(&incenter_barycentric(sides), sides);
    let predicted_sq = m.nine_point_radius_sq() + m.inradius_sq.clone() - m.circum_in.clone();
    TangencyTerms {
        residual: center_dist_sq.clone() - predicted_sq.clone(),
        center_dist_sq,
        predicted_sq,
    }
}

pub fn excircle_ninepoint_terms<S: Scalar>(
    sides: &SideLengths<S>,
    m: &TriangleMetrics<S>,
    v: Vertex,
) -> TangencyTerms<S> {
    let center_dist_sq = center_to_ninepoint_dist_sq(&excenter_barycentric(sides, v), sides);
    let predicted_sq = m.nine_point_radius_sq() + m.exradius_sq(v).clone() + m.circum_ex(v).clone();
    TangencyTerms {
        residual: center_dist_sq.clone() - predicted_sq.clone(),
        center_dist_sq,
        predicted_sq,
    }
}

/// `|IN|² − (R/2 − r)²`.
pub fn incircle_ninepoint_residual<S: Scalar>(sides: &SideLengths<S>) -> S {
    incircle_ninepoint_terms(sides, &metrics(sides)).residual
}

/// `|E_vN|² − (R/2 + r_v)²`.
pub fn excircle_ninepoint_residual<S: Scalar>(sides: &SideLengths<S>, v: Vertex) -> S {
    excircle_ninepoint_terms(sides, &metrics(sides), v).residual
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CircleKind {
    #[serde(rename = "incircle")]
    Incircle,
    #[serde(rename = "exA")]
    ExcircleA,
    #[serde(rename = "exB")]
    ExcircleB,
    #[serde(rename = "exC")]
    ExcircleC,
}

impl CircleKind {
    pub const ALL: [CircleKind; 4] = [
        CircleKind::Incircle,
        CircleKind::ExcircleA,
        CircleKind::ExcircleB,
        CircleKind::ExcircleC,
    ];

    pub fn excircle(v: Vertex) -> CircleKind {
        match v {
            Vertex::A => CircleKind::ExcircleA,
            Vertex::B => CircleKind::ExcircleB,
            Vertex::C => CircleKind::ExcircleC,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CircleKind::Incircle => "incircle",
            CircleKind::ExcircleA => "exA",
            CircleKind::ExcircleB => "exB",
            CircleKind::ExcircleC => "exC",
        }
    }

    /// Relationship to the nine-point circle in a non-equilateral triangle.
    pub fn expected(self) -> TangencyKind {
        match self {
            CircleKind::Incircle => TangencyKind::InternalTangent,
            _ => TangencyKind::ExternalTangent,
        }
    }
}

/// One circle's tangency with the nine-point circle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeuerbachEntry<S> {
    pub circle: CircleKind,
    pub kind: TangencyKind,
    pub center_dist_sq: S,
    pub predicted_sq: S,
    /// `center_dist_sq − predicted_sq`
    pub residual: S,
    /// `|residual| / (R²/4)`
    pub normalized_residual: f64,
    pub classification: TangencyReport<S>,
}

impl<S: Scalar> FeuerbachEntry<S> {
    /// The entry shows the expected tangency. A coincident incircle also
    /// counts: `d = |r1 − r2| = 0` is the degenerate internal case. Exactly
    /// that happens only for equilateral input; in floats it also covers
    /// triangles whose radii agree to within the tolerance.
    pub fn holds(&self) -> bool {
        self.kind == self.circle.expected()
            || (self.circle == CircleKind::Incircle && self.kind == TangencyKind::Coincident)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeuerbachReport<S> {
    pub metrics: TriangleMetrics<S>,
    /// Set for equilateral input, where the incircle and nine-point circle coincide.
    pub equilateral: bool,
    pub entries: Vec<FeuerbachEntry<S>>,
}

impl<S: Scalar> FeuerbachReport<S> {
    pub fn entry(&self, circle: CircleKind) -> &FeuerbachEntry<S> {
        self.entries
            .iter()
            .find(|e| e.circle == circle)
            .expect("report holds all four circles")
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds())
    }

    pub fn max_normalized_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.normalized_residual).fold(0.0, f64::max)
    }

    pub fn all_residuals_zero(&self) -> bool {
        self.entries.iter().all(|e| e.residual.is_zero())
    }
}

pub fn feuerbach_report<S: Scalar>(sides: &SideLengths<S>, tol: &ToleranceProfile) -> FeuerbachReport<S> {
    let m = metrics(sides);
    let nine_sq = m.nine_point_radius_sq();
    let nine_f = nine_sq.to_f64();
    let make_entry = |circle: CircleKind, terms: TangencyTerms<S>, radius_sq: &S, circum_product: &S| {
        // r_nine · r = (R/2)·r
        let product = circum_product.half();
        let classification = classify_squares(&terms.center_dist_sq, &nine_sq, radius_sq, &product, tol);
        FeuerbachEntry {
            circle,
            kind: classification.kind,
            normalized_residual: terms.residual.to_f64().abs() / nine_f,
            center_dist_sq: terms.center_dist_sq,
            predicted_sq: terms.predicted_sq,
            residual: terms.residual,
            classification,
        }
    };
    let mut entries = Vec::with_capacity(4);
    entries.push(make_entry(
        CircleKind::Incircle,
        incircle_ninepoint_terms(sides, &m),
        &m.inradius_sq,
        &m.circum_in,
    ));
    for v in Vertex::ALL {
        entries.push(make_entry(
            CircleKind::excircle(v),
            excircle_ninepoint_terms(sides, &m, v),
            m.exradius_sq(v),
            m.circum_ex(v),
        ));
    }
    FeuerbachReport {
        equilateral: sides.is_equilateral(),
        metrics: m,
        entries,
    }
}
