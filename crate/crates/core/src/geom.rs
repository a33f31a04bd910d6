//! Points, colored point sets, the three annulus shapes and their containment
//! predicates, and the rigid plane transforms used to reduce symmetric cases to
//! a single canonical orientation.

use std::fmt;

use crate::error::Error;

/// Default absolute tolerance for geometric comparisons.
pub const EPS: f64 = 1e-9;

pub(crate) const SQRT3: f64 = 1.732_050_807_568_877_2;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point labelled with a color in `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColoredPoint {
    pub x: f64,
    pub y: f64,
    pub color: u32,
}

impl ColoredPoint {
    pub const fn new(x: f64, y: f64, color: u32) -> Self {
        ColoredPoint { x, y, color }
    }

    pub fn point(&self) -> Point {
        Point::new(self.x, self.y)
    }

    /// Zero-based slot for color-indexed arrays.
    #[inline]
    pub(crate) fn slot(&self) -> usize {
        self.color as usize - 1
    }
}

impl fmt::Display for ColoredPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) c{}", self.x, self.y, self.color)
    }
}

/// A validated set of colored points: non-empty, finite coordinates, every
/// color of `1..=k` present at least once.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<ColoredPoint>,
    k: u32,
}

impl PointSet {
    pub fn new(points: Vec<ColoredPoint>, k: u32) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::NoColors);
        }
        if points.is_empty() {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; k as usize];
        for (index, p) in points.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if p.color == 0 || p.color > k {
                return Err(Error::ColorOutOfRange {
                    index,
                    color: p.color,
                    k,
                });
            }
            seen[p.slot()] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MissingColor(missing as u32 + 1));
        }
        Ok(PointSet { points, k })
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Applies `f` to every coordinate pair, keeping colors.
    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> PointSet {
        let points = self
            .points
            .iter()
            .map(|p| {
                let q = f(p.point());
                ColoredPoint::new(q.x, q.y, p.color)
            })
            .collect();
        PointSet { points, k: self.k }
    }

    /// Adds a point; the color must already be in range.
    pub fn with_point(&self, p: ColoredPoint) -> Result<PointSet, Error> {
        let mut points = self.points.clone();
        points.push(p);
        PointSet::new(points, self.k)
    }
}

/// Chebyshev distance.
#[inline]
pub fn linf_distance(p: Point, q: Point) -> f64 {
    (p.x - q.x).abs().max((p.y - q.y).abs())
}

/// Axis-parallel square annulus: `r_in <= d_inf(center, s) <= r_out`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareAnnulus {
    pub center: Point,
    pub r_out: f64,
    pub r_in: f64,
}

impl SquareAnnulus {
    pub fn width(&self) -> f64 {
        self.r_out - self.r_in
    }

    pub fn contains(&self, s: Point, eps: f64) -> bool {
        let d = linf_distance(self.center, s);
        d >= self.r_in - eps && d <= self.r_out + eps
    }

    /// Open annular interior: strictly between the two squares.
    pub fn interior_contains(&self, s: Point, eps: f64) -> bool {
        let d = linf_distance(self.center, s);
        d > self.r_in + eps && d < self.r_out - eps
    }
}

/// Axis-parallel rectangular annulus given by its outer rectangle and a
/// uniform inset. The inner rectangle is the open set inset by `width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectAnnulus {
    pub x1: f64,
    pub x2: f64,
    pub y1: f64,
    pub y2: f64,
    pub width: f64,
}

impl RectAnnulus {
    pub fn in_outer(&self, s: Point, eps: f64) -> bool {
        s.x >= self.x1 - eps && s.x <= self.x2 + eps && s.y >= self.y1 - eps && s.y <= self.y2 + eps
    }

    /// Inward distance from the outer boundary.
    pub fn depth(&self, s: Point) -> f64 {
        (s.x - self.x1)
            .min(self.x2 - s.x)
            .min(s.y - self.y1)
            .min(self.y2 - s.y)
    }

    pub fn contains(&self, s: Point, eps: f64) -> bool {
        self.in_outer(s, eps) && self.depth(s) <= self.width + eps
    }

    pub fn interior_contains(&self, s: Point, eps: f64) -> bool {
        let d = self.depth(s);
        d > eps && d < self.width - eps
    }

    pub fn inner_is_empty(&self) -> bool {
        2.0 * self.width >= self.x2 - self.x1 || 2.0 * self.width >= self.y2 - self.y1
    }

    /// Corners of the inner rectangle (collapsed to the center line when empty).
    pub fn inner_rect(&self) -> (f64, f64, f64, f64) {
        let cx = 0.5 * (self.x1 + self.x2);
        let cy = 0.5 * (self.y1 + self.y2);
        let ix1 = (self.x1 + self.width).min(cx);
        let ix2 = (self.x2 - self.width).max(cx);
        let iy1 = (self.y1 + self.width).min(cy);
        let iy2 = (self.y2 - self.width).max(cy);
        (ix1, ix2, iy1, iy2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriOrientation {
    ApexUp,
    ApexDown,
}

/// Equilateral-triangle annulus with a horizontal base. For `ApexUp` the apex
/// lies above the base line (`base_y <= apex.y`); `ApexDown` is the mirror
/// image in `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriAnnulus {
    pub apex: Point,
    pub base_y: f64,
    pub width: f64,
    pub orientation: TriOrientation,
}

/// Signed inward distances of `s` to the base, left and right edges of the
/// apex-up triangle with apex `v` and base line `base_y`.
#[inline]
pub(crate) fn tri_edge_distances(v: Point, base_y: f64, s: Point) -> (f64, f64, f64) {
    let drop = v.y - s.y;
    let run = SQRT3 * (s.x - v.x);
    (s.y - base_y, 0.5 * (drop + run), 0.5 * (drop - run))
}

impl TriAnnulus {
    /// Height of the outer triangle.
    pub fn height(&self) -> f64 {
        match self.orientation {
            TriOrientation::ApexUp => self.apex.y - self.base_y,
            TriOrientation::ApexDown => self.base_y - self.apex.y,
        }
    }

    // Everything is evaluated in the apex-up frame.
    fn canonical(&self, s: Point) -> (Point, f64, Point) {
        match self.orientation {
            TriOrientation::ApexUp => (self.apex, self.base_y, s),
            TriOrientation::ApexDown => (
                Point::new(self.apex.x, -self.apex.y),
                -self.base_y,
                Point::new(s.x, -s.y),
            ),
        }
    }

    pub fn in_outer(&self, s: Point, eps: f64) -> bool {
        let (v, b, s) = self.canonical(s);
        let (db, dl, dr) = tri_edge_distances(v, b, s);
        db >= -eps && dl >= -eps && dr >= -eps
    }

    /// Inward distance to the nearest outer edge.
    pub fn depth(&self, s: Point) -> f64 {
        let (v, b, s) = self.canonical(s);
        let (db, dl, dr) = tri_edge_distances(v, b, s);
        db.min(dl).min(dr)
    }

    pub fn contains(&self, s: Point, eps: f64) -> bool {
        self.in_outer(s, eps) && self.depth(s) <= self.width + eps
    }

    pub fn interior_contains(&self, s: Point, eps: f64) -> bool {
        let d = self.depth(s);
        d > eps && d < self.width - eps
    }

    pub fn outer_vertices(&self) -> [Point; 3] {
        self.vertices_at(0.0)
    }

    /// Vertices of the inner triangle (collapsed onto the centroid when the
    /// width exceeds the inradius).
    pub fn inner_vertices(&self) -> [Point; 3] {
        self.vertices_at(self.width.min(self.height() / 3.0))
    }

    fn vertices_at(&self, inset: f64) -> [Point; 3] {
        let h = self.height();
        // apex moves by twice the inset, base rises by the inset
        let sign = match self.orientation {
            TriOrientation::ApexUp => 1.0,
            TriOrientation::ApexDown => -1.0,
        };
        let top = self.apex.y - sign * 2.0 * inset;
        let base = self.base_y + sign * inset;
        let half = (h - 3.0 * inset) / SQRT3;
        [
            Point::new(self.apex.x, top),
            Point::new(self.apex.x - half, base),
            Point::new(self.apex.x + half, base),
        ]
    }

    pub fn outer_centroid(&self) -> Point {
        centroid(&self.outer_vertices())
    }

    pub fn inner_centroid(&self) -> Point {
        centroid(&self.inner_vertices())
    }
}

fn centroid(v: &[Point; 3]) -> Point {
    Point::new(
        (v[0].x + v[1].x + v[2].x) / 3.0,
        (v[0].y + v[1].y + v[2].y) / 3.0,
    )
}

/// Any of the three annulus shapes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Annulus {
    Square(SquareAnnulus),
    Rect(RectAnnulus),
    Tri(TriAnnulus),
}

impl Annulus {
    pub fn width(&self) -> f64 {
        match self {
            Annulus::Square(a) => a.width(),
            Annulus::Rect(a) => a.width,
            Annulus::Tri(a) => a.width,
        }
    }

    pub fn contains(&self, s: Point, eps: f64) -> bool {
        match self {
            Annulus::Square(a) => a.contains(s, eps),
            Annulus::Rect(a) => a.contains(s, eps),
            Annulus::Tri(a) => a.contains(s, eps),
        }
    }

    pub fn interior_contains(&self, s: Point, eps: f64) -> bool {
        match self {
            Annulus::Square(a) => a.interior_contains(s, eps),
            Annulus::Rect(a) => a.interior_contains(s, eps),
            Annulus::Tri(a) => a.interior_contains(s, eps),
        }
    }

    /// Inward distance from the outer boundary; the inner boundary sits at
    /// depth `width()`.
    pub fn depth(&self, s: Point) -> f64 {
        match self {
            Annulus::Square(a) => a.r_out - linf_distance(a.center, s),
            Annulus::Rect(a) => a.depth(s),
            Annulus::Tri(a) => a.depth(s),
        }
    }

    /// Which boundaries `s` lies on, as `(outer, inner)`.
    pub fn on_boundary(&self, s: Point, eps: f64) -> (bool, bool) {
        let d = self.depth(s);
        let outer = d.abs() <= eps && self.contains(s, eps);
        let inner = (d - self.width()).abs() <= eps;
        (outer, inner)
    }

    /// Re-expresses the annulus after applying `t` to the plane. Returns
    /// `None` when `t` takes a fixed-orientation triangle out of its family.
    pub fn transformed(&self, t: Transform) -> Option<Annulus> {
        match self {
            Annulus::Square(a) => Some(Annulus::Square(SquareAnnulus {
                center: t.apply(a.center),
                ..*a
            })),
            Annulus::Rect(a) => {
                let p = t.apply(Point::new(a.x1, a.y1));
                let q = t.apply(Point::new(a.x2, a.y2));
                Some(Annulus::Rect(RectAnnulus {
                    x1: p.x.min(q.x),
                    x2: p.x.max(q.x),
                    y1: p.y.min(q.y),
                    y2: p.y.max(q.y),
                    width: a.width,
                }))
            }
            Annulus::Tri(a) => {
                let orientation = match t {
                    Transform::Identity => a.orientation,
                    Transform::Rotate180 | Transform::ReflectY => match a.orientation {
                        TriOrientation::ApexUp => TriOrientation::ApexDown,
                        TriOrientation::ApexDown => TriOrientation::ApexUp,
                    },
                    Transform::Rotate90 | Transform::Rotate270 => return None,
                };
                let base = t.apply(Point::new(a.apex.x, a.base_y));
                Some(Annulus::Tri(TriAnnulus {
                    apex: t.apply(a.apex),
                    base_y: base.y,
                    width: a.width,
                    orientation,
                }))
            }
        }
    }
}

/// Rigid motions about the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    /// `(x, y) -> (x, -y)`
    ReflectY,
}

impl Transform {
    pub fn apply(self, p: Point) -> Point {
        match self {
            Transform::Identity => p,
            Transform::Rotate90 => Point::new(-p.y, p.x),
            Transform::Rotate180 => Point::new(-p.x, -p.y),
            Transform::Rotate270 => Point::new(p.y, -p.x),
            Transform::ReflectY => Point::new(p.x, -p.y),
        }
    }

    pub fn inverse(self) -> Transform {
        match self {
            Transform::Rotate90 => Transform::Rotate270,
            Transform::Rotate270 => Transform::Rotate90,
            t => t,
        }
    }
}

pub fn transform(ps: &PointSet, t: Transform) -> PointSet {
    ps.map_points(|p| t.apply(p))
}

/// Maps an annulus found in the `t`-transformed plane back to the original one.
pub fn inverse_map(annulus: &Annulus, t: Transform) -> Option<Annulus> {
    annulus.transformed(t.inverse())
}

/// True iff every color in `1..=k` has at least one point accepted by `member`.
pub fn is_color_spanning(member: impl Fn(&ColoredPoint) -> bool, ps: &PointSet) -> bool {
    let mut seen = vec![false; ps.k() as usize];
    let mut missing = ps.k() as usize;
    for p in ps.points() {
        if !seen[p.slot()] && member(p) {
            seen[p.slot()] = true;
            missing -= 1;
            if missing == 0 {
                return true;
            }
        }
    }
    false
}

/// Which characterization produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Two witnesses on parallel (or slant) sides of the outer boundary.
    OuterDefined,
    /// Two witnesses on parallel sides of the inner boundary.
    InnerDefined,
    /// A single witness at the apex of the outer triangle.
    ApexCorollary,
    /// Fewer than two colors, or an empty inner region by construction.
    Degenerate,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::OuterDefined => "outer-defined",
            CaseTag::InnerDefined => "inner-defined",
            CaseTag::ApexCorollary => "apex-corollary",
            CaseTag::Degenerate => "degenerate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Square,
    Rect,
    TriUp,
    TriDown,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::Square => "square",
            Shape::Rect => "rect",
            Shape::TriUp => "tri-up",
            Shape::TriDown => "tri-down",
        };
        f.write_str(s)
    }
}

/// A solver result.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnulusSolution {
    pub shape: Shape,
    pub annulus: Annulus,
    pub width: f64,
    pub witnesses: Vec<ColoredPoint>,
    pub case_tag: CaseTag,
}

impl AnnulusSolution {
    pub fn is_color_spanning(&self, ps: &PointSet, eps: f64) -> bool {
        is_color_spanning(|p| self.annulus.contains(p.point(), eps), ps)
    }
}

/// Boundary points whose color has no point in the open interior, keeping the
/// first such point per color on each boundary. A point on a boundary whose
/// color also occurs in the interior is not needed for the annulus to span.
pub fn defining_points(annulus: &Annulus, ps: &PointSet, eps: f64) -> Vec<ColoredPoint> {
    let k = ps.k() as usize;
    let mut in_int = vec![false; k + 1];
    for p in ps.points() {
        if annulus.interior_contains(p.point(), eps) {
            in_int[p.color as usize] = true;
        }
    }
    let mut seen = vec![[false; 2]; k + 1];
    let mut out = Vec::new();
    for p in ps.points() {
        let c = p.color as usize;
        if in_int[c] {
            continue;
        }
        let (o, i) = annulus.on_boundary(p.point(), eps);
        let mut keep = false;
        for (side, on) in [o, i].into_iter().enumerate() {
            if on && !seen[c][side] {
                seen[c][side] = true;
                keep = true;
            }
        }
        if keep {
            out.push(*p);
        }
    }
    out
}

/// Strictly narrower beyond rounding. Solvers keep the first optimum they
/// meet in enumeration order, and chunked searches merge in chunk order under
/// the same rule, so the result does not depend on the thread count.
pub(crate) fn narrower(a: f64, b: f64) -> bool {
    a < b - 1e-12 * (1.0 + b.abs())
}

/// Oracle candidate order: width first (equal within a relative 1e-12), then
/// the remaining keys lexicographically.
pub(crate) fn lex_less(a: &[f64], b: &[f64]) -> bool {
    let tol = 1e-12 * (1.0 + a[0].abs() + b[0].abs());
    if a[0] < b[0] - tol {
        return true;
    }
    if a[0] > b[0] + tol {
        return false;
    }
    for (x, y) in a[1..].iter().zip(&b[1..]) {
        if x != y {
            return x < y;
        }
    }
    false
}
