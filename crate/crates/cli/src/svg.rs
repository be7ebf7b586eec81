//! Schematic SVG figure: triangle, classical centers, Euler segment and the
//! five circles, fitted into a 1000×1000 viewBox with the y axis pointing up.

use std::fmt::Write;

use feuerbach_core::{compute_centers, metrics, Scalar, Vertex};

use crate::Problem;

pub const SIZE: f64 = 1000.0;
const MARGIN: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub vertices: [(f64, f64); 3],
    /// O, G, H, N, I in that order.
    pub centers: [(&'static str, (f64, f64)); 5],
    pub nine_point: Circle,
    pub incircle: Circle,
    pub excircles: [Circle; 3],
    /// Draw the incircle and nine-point circle as one.
    pub equilateral: bool,
}

fn xy<S: Scalar>(p: &feuerbach_core::Point2<S>) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

impl Figure {
    /// `None` without a planar placement.
    pub fn from_problem<S: Scalar>(p: &Problem<S>) -> Option<Figure> {
        let tri = p.embedding.as_ref()?;
        let centers = compute_centers(&p.sides, Some(tri)).cartesian?;
        let m = metrics(&p.sides);
        let circle = |c: (f64, f64), r_sq: &S| Circle { cx: c.0, cy: c.1, r: r_sq.to_f64().sqrt() };
        Some(Figure {
            vertices: tri.vertices().clone().map(|v| xy(&v)),
            centers: [
                ("O", xy(&centers.circumcenter)),
                ("G", xy(&centers.centroid)),
                ("H", xy(&centers.orthocenter)),
                ("N", xy(&centers.nine_point)),
                ("I", xy(&centers.incenter)),
            ],
            nine_point: circle(xy(&centers.nine_point), &m.nine_point_radius_sq()),
            incircle: circle(xy(&centers.incenter), &m.inradius_sq),
            excircles: Vertex::ALL.map(|v| circle(xy(centers.excenter(v)), m.exradius_sq(v))),
            equilateral: p.sides.is_equilateral(),
        })
    }

    fn circles(&self) -> impl Iterator<Item = &Circle> {
        [&self.nine_point, &self.incircle].into_iter().chain(&self.excircles)
    }

    pub fn render(&self) -> String {
        let view = Viewport::fit(self);
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n",
        );
        out.push_str("<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n");

        out.push_str("<g id=\"excircles\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\">\n");
        for (v, c) in Vertex::ALL.iter().zip(&self.excircles) {
            let id = format!("excircle-{}", v.label().to_ascii_lowercase());
            view.circle(&mut out, &id, c, "");
        }
        out.push_str("</g>\n");

        if self.equilateral {
            view.circle(&mut out, "incircle", &self.incircle, " class=\"coincident\" fill=\"none\" stroke=\"#7a2e9e\" stroke-width=\"2\"");
        } else {
            view.circle(&mut out, "ninepoint", &self.nine_point, " fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\"");
            view.circle(&mut out, "incircle", &self.incircle, " fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"2\"");
        }

        let pts: Vec<String> = self
            .vertices
            .iter()
            .map(|&p| {
                let (x, y) = view.map(p);
                format!("{},{}", num(x), num(y))
            })
            .collect();
        writeln!(
            out,
            "<polygon id=\"triangle\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
            pts.join(" ")
        )
        .unwrap();

        let (o, h) = (view.map(self.centers[0].1), view.map(self.centers[2].1));
        if (o.0 - h.0).hypot(o.1 - h.1) > 1e-6 {
            writeln!(
                out,
                "<line id=\"euler\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>",
                num(o.0),
                num(o.1),
                num(h.0),
                num(h.1)
            )
            .unwrap();
        }

        out.push_str("<g id=\"labels\" font-family=\"sans-serif\" font-size=\"18\">\n");
        for (v, &p) in Vertex::ALL.iter().zip(&self.vertices) {
            let (x, y) = view.map(p);
            writeln!(out, "<text x=\"{}\" y=\"{}\">{}</text>", num(x + 6.0), num(y - 6.0), v.label()).unwrap();
        }
        out.push_str("</g>\n");

        out.push_str("<g id=\"centers\" font-family=\"sans-serif\" font-size=\"16\">\n");
        for (label, p) in &self.centers {
            let (x, y) = view.map(*p);
            writeln!(
                out,
                "<circle id=\"center-{label}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/><text x=\"{}\" y=\"{}\">{label}</text>",
                num(x),
                num(y),
                num(x + 6.0),
                num(y + 16.0)
            )
            .unwrap();
        }
        out.push_str("</g>\n");

        if self.equilateral {
            out.push_str(
                "<text id=\"annotation\" x=\"20\" y=\"30\" font-family=\"sans-serif\" font-size=\"18\">equilateral: incircle and nine-point circle coincide</text>\n",
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Fixed three decimals, never `-0.000`.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Uniform scale plus translation onto the viewBox, flipping y.
#[derive(Debug, Clone, Copy)]
pub struct Viewport {
    pub scale: f64,
    min: (f64, f64),
    offset: (f64, f64),
}

impl Viewport {
    pub fn fit(fig: &Figure) -> Viewport {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut include = |x: f64, y: f64| {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        };
        for &(x, y) in &fig.vertices {
            include(x, y);
        }
        for c in fig.circles() {
            include(c.cx - c.r, c.cy - c.r);
            include(c.cx + c.r, c.cy + c.r);
        }
        let (w, h) = (hi.0 - lo.0, hi.1 - lo.1);
        let inner = SIZE - 2.0 * MARGIN;
        let scale = inner / w.max(h);
        Viewport {
            scale,
            min: lo,
            offset: (MARGIN + (inner - w * scale) / 2.0, MARGIN + (inner - h * scale) / 2.0),
        }
    }

    pub fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let sx = self.offset.0 + (x - self.min.0) * self.scale;
        let sy = self.offset.1 + (y - self.min.1) * self.scale;
        (sx, SIZE - sy)
    }

    fn circle(&self, out: &mut String, id: &str, c: &Circle, attrs: &str) {
        let (x, y) = self.map((c.cx, c.cy));
        writeln!(
            out,
            "<circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{}\"{attrs}/>",
            num(x),
            num(y),
            num(c.r * self.scale)
        )
        .unwrap();
    }
}
