//! SVG rendering of a point set and its annuli.

use std::fmt::Write as _;

use annulus_core::{Annulus, AnnulusSolution, Point, PointSet};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

const SHADES: [&str; 4] = ["#4c72b0", "#dd8452", "#55a868", "#c44e52"];

fn boundaries(a: &Annulus) -> (Vec<Point>, Vec<Point>) {
    match a {
        Annulus::Square(s) => (square(s.center, s.r_out), square(s.center, s.r_in)),
        Annulus::Rect(r) => {
            let (x1, x2, y1, y2) = r.inner_rect();
            (rect(r.x1, r.x2, r.y1, r.y2), rect(x1, x2, y1, y2))
        }
        Annulus::Tri(t) => (t.outer_vertices().to_vec(), t.inner_vertices().to_vec()),
    }
}

fn square(c: Point, r: f64) -> Vec<Point> {
    rect(c.x - r, c.x + r, c.y - r, c.y + r)
}

fn rect(x1: f64, x2: f64, y1: f64, y2: f64) -> Vec<Point> {
    vec![
        Point::new(x1, y1),
        Point::new(x2, y1),
        Point::new(x2, y2),
        Point::new(x1, y2),
    ]
}

fn polygon(out: &mut String, pts: &[Point], fill: &str, opacity: f64, stroke: &str, sw: f64) {
    let coords: Vec<String> = pts.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
    let _ = writeln!(
        out,
        r#"    <polygon points="{}" fill="{fill}" fill-opacity="{opacity}" stroke="{stroke}" stroke-width="{sw}"/>"#,
        coords.join(" ")
    );
}

/// Points are colored by class; each annulus gets an outer and an inner
/// polygon, with the region between them shaded.
pub fn render(ps: &PointSet, solutions: &[AnnulusSolution]) -> String {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: Point| {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    };
    ps.points().iter().for_each(|p| grow(p.point()));
    for s in solutions {
        boundaries(&s.annulus).0.into_iter().for_each(&mut grow);
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let pad = 0.05 * span;
    let (w, h) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad);
    let dot = 0.008 * span;
    let sw = 0.002 * span;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {w} {h}" width="800" height="{}">"#,
        lo.x - pad,
        -(hi.y + pad),
        (800.0 * h / w).round().max(1.0)
    );
    // flip y so the picture matches the usual axes
    let _ = writeln!(out, r#"  <g transform="scale(1,-1)">"#);
    for (i, s) in solutions.iter().enumerate() {
        let (outer, inner) = boundaries(&s.annulus);
        let shade = SHADES[i % SHADES.len()];
        polygon(&mut out, &outer, shade, 0.3, shade, sw);
        polygon(&mut out, &inner, "#ffffff", 1.0, shade, sw);
    }
    for p in ps.points() {
        let fill = PALETTE[(p.color as usize - 1) % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"    <circle cx="{}" cy="{}" r="{dot}" fill="{fill}"/>"#,
            p.x, p.y
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use annulus_core::cssa::solve_cssa;
    use annulus_core::{ColoredPoint, PointSet};

    #[test]
    fn element_counts() {
        let ps = PointSet::new(
            vec![
                ColoredPoint::new(0.0, 0.0, 1),
                ColoredPoint::new(1.0, 1.0, 2),
                ColoredPoint::new(2.0, 2.0, 3),
            ],
            3,
        )
        .unwrap();
        let svg = render(&ps, &[solve_cssa(&ps)]);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
