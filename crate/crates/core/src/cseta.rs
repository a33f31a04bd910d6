//! Minimum-width color-spanning equilateral-triangle annulus with a
//! horizontal base.
//!
//! Two points on the slanted edges of the outer triangle fix its apex; what
//! remains is the base line. Sweeping the base downward through the points
//! of the downward wedge at that apex, the width of the best annulus with
//! that outer triangle is `max_i min(G[i], H[i] - base)`, where `G[i]` is
//! half the smallest vertical drop from the apex to the slant line through a
//! color-`i` point (its distance to the nearer slanted edge) and `H[i]` is
//! the lowest color-`i` point seen so far. Apex-down triangles are handled by
//! reflecting the input in the x-axis.

use crate::config::{chunked, Config};
use crate::error::Error;
use crate::geom::{
    defining_points, inverse_map, narrower, transform, tri_edge_distances, Annulus,
    AnnulusSolution, CaseTag, ColoredPoint, Point, PointSet, Shape, Transform, TriAnnulus,
    TriOrientation, SQRT3,
};

/// Downward wedge below `apex`, bounded by the 60 and 120 degree lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wedge {
    pub apex: Point,
    /// Contact on the left (60 degree) line.
    pub p: usize,
    /// Contact on the right (120 degree) line; equal to `p` when the contact
    /// is the apex itself.
    pub q: usize,
}

impl Wedge {
    /// Closed membership with tolerance `eps`.
    pub fn contains(&self, s: Point, eps: f64) -> bool {
        slant(self.apex, s) >= -eps
    }
}

/// Twice the distance from `s` to the nearer slanted line through `v`;
/// negative outside the wedge.
#[inline]
fn slant(v: Point, s: Point) -> f64 {
    (v.y - s.y) - SQRT3 * (s.x - v.x).abs()
}

/// Apex where the 60 degree line through `p` meets the 120 degree line
/// through `q`.
pub fn wedge_apex(p: &ColoredPoint, q: &ColoredPoint) -> Point {
    if p.x == q.x && p.y == q.y {
        return p.point();
    }
    let vx = 0.5 * (p.x + q.x) + (q.y - p.y) / (2.0 * SQRT3);
    Point::new(vx, p.y + SQRT3 * (vx - p.x))
}

/// The wedge for `p` on the left and `q` on the right line, or `None` if
/// one of them would sit above the apex.
pub fn wedge(ps: &PointSet, p: usize, q: usize) -> Option<Wedge> {
    let (a, b) = (&ps.points()[p], &ps.points()[q]);
    if p != q && (a.x >= b.x || (b.y - a.y).abs() > SQRT3 * (b.x - a.x)) {
        return None;
    }
    Some(Wedge {
        apex: wedge_apex(a, b),
        p,
        q,
    })
}

/// Distance from `s` to the boundary of the apex-up triangle with apex `v`
/// and base line `base_y`. A point lies in the annulus of width `w` with
/// that outer triangle iff this is at most `w`.
pub fn mu(v: Point, base_y: f64, s: &ColoredPoint) -> Result<f64, Error> {
    let (db, dl, dr) = tri_edge_distances(v, base_y, s.point());
    let m = db.min(dl).min(dr);
    if m < -crate::geom::EPS {
        return Err(Error::OutsideTriangle { s: s.point() });
    }
    Ok(m.max(0.0))
}

/// Per-color minima over the points above the sweep line.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorTracker {
    /// Smallest distance to a slanted edge.
    pub g: Vec<f64>,
    /// Lowest y.
    pub h: Vec<f64>,
    g_arg: Vec<usize>,
    h_arg: Vec<usize>,
    missing: usize,
}

impl ColorTracker {
    pub fn new(k: usize) -> Self {
        ColorTracker {
            g: vec![f64::INFINITY; k],
            h: vec![f64::INFINITY; k],
            g_arg: vec![usize::MAX; k],
            h_arg: vec![usize::MAX; k],
            missing: k,
        }
    }

    pub fn reset(&mut self) {
        self.g.iter_mut().for_each(|x| *x = f64::INFINITY);
        self.h.iter_mut().for_each(|x| *x = f64::INFINITY);
        self.missing = self.g.len();
    }

    pub fn insert(&mut self, slot: usize, half_slant: f64, y: f64, idx: usize) {
        if self.h[slot] == f64::INFINITY {
            self.missing -= 1;
        }
        if half_slant < self.g[slot] {
            self.g[slot] = half_slant;
            self.g_arg[slot] = idx;
        }
        if y <= self.h[slot] {
            self.h[slot] = y;
            self.h_arg[slot] = idx;
        }
    }

    pub fn is_spanning(&self) -> bool {
        self.missing == 0
    }

    /// Width with the base at `base`, and the point that fixes it.
    pub fn width(&self, base: f64) -> (f64, usize) {
        let mut best = (f64::NEG_INFINITY, usize::MAX);
        for i in 0..self.g.len() {
            let b = (self.h[i] - base).max(0.0);
            let (w, arg) = if self.g[i] <= b {
                (self.g[i], self.g_arg[i])
            } else {
                (b, self.h_arg[i])
            };
            if w > best.0 {
                best = (w, arg);
            }
        }
        best
    }
}

struct Scratch {
    tracker: ColorTracker,
    inside: Vec<usize>,
}

/// Best annulus whose outer triangle has its apex at the wedge vertex.
pub fn solve_wedge(w: &Wedge, ps: &PointSet) -> Option<TriAnnulus> {
    let cfg = Config::default();
    let order = y_order(ps);
    let mut scratch = Scratch {
        tracker: ColorTracker::new(ps.k() as usize),
        inside: Vec::new(),
    };
    sweep(w, ps, &order, &cfg, &mut scratch)
}

fn y_order(ps: &PointSet) -> Vec<usize> {
    let pts = ps.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[b].y.total_cmp(&pts[a].y).then(a.cmp(&b)));
    order
}

fn sweep(
    w: &Wedge,
    ps: &PointSet,
    order: &[usize],
    cfg: &Config,
    scratch: &mut Scratch,
) -> Option<TriAnnulus> {
    let pts = ps.points();
    let eps = cfg.slack();
    let v = w.apex;
    scratch.inside.clear();
    scratch.inside.extend(
        order
            .iter()
            .copied()
            .filter(|&i| slant(v, pts[i].point()) >= -eps),
    );
    let top = pts[w.p].y.min(pts[w.q].y);
    let tracker = &mut scratch.tracker;
    tracker.reset();

    let mut best: Option<TriAnnulus> = None;
    let inside = &scratch.inside;
    let mut j = 0;
    while j < inside.len() {
        let y = pts[inside[j]].y;
        while j < inside.len() && pts[inside[j]].y == y {
            let i = inside[j];
            tracker.insert(
                pts[i].slot(),
                0.5 * slant(v, pts[i].point()).max(0.0),
                pts[i].y,
                i,
            );
            j += 1;
        }
        if y > top || !tracker.is_spanning() {
            continue;
        }
        let (width, _) = tracker.width(y);
        if cfg.verify {
            check_tracker(ps, &inside[..j], v, y, width);
        }
        if best.as_ref().is_none_or(|b| width < b.width) {
            best = Some(TriAnnulus {
                apex: v,
                base_y: y,
                width,
                orientation: TriOrientation::ApexUp,
            });
        }
    }
    best
}

fn check_tracker(ps: &PointSet, above: &[usize], v: Point, base: f64, width: f64) {
    let mut per_color = vec![f64::INFINITY; ps.k() as usize];
    for &i in above {
        let s = &ps.points()[i];
        let m = mu(v, base, s).unwrap_or(0.0);
        per_color[s.slot()] = per_color[s.slot()].min(m);
    }
    let direct = per_color.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    assert!(
        (direct - width).abs() <= 1e-9 * (1.0 + direct.abs()),
        "tracker width {width} differs from direct {direct}"
    );
}

#[derive(Debug, Clone)]
struct Best {
    annulus: TriAnnulus,
    case: CaseTag,
}

fn improves(new: &Best, old: &Option<Best>) -> bool {
    old.as_ref()
        .is_none_or(|old| narrower(new.annulus.width, old.annulus.width))
}

pub fn solve_cseta(ps: &PointSet) -> AnnulusSolution {
    solve_cseta_with(ps, &Config::default())
}

pub fn solve_cseta_with(ps: &PointSet, cfg: &Config) -> AnnulusSolution {
    let mut best: Option<Best> = None;
    for t in [Transform::Identity, Transform::ReflectY] {
        let local = transform(ps, t);
        let order = y_order(&local);
        let n = local.len();
        let results = chunked(n, cfg.threads, |range| {
            let mut scratch = Scratch {
                tracker: ColorTracker::new(local.k() as usize),
                inside: Vec::with_capacity(n),
            };
            let pts = local.points();
            let mut found: Option<Best> = None;
            for p in range {
                for q in 0..n {
                    if p != q && pts[p].color == pts[q].color {
                        continue;
                    }
                    let Some(w) = wedge(&local, p, q) else {
                        continue;
                    };
                    let Some(tri) = sweep(&w, &local, &order, cfg, &mut scratch) else {
                        continue;
                    };
                    let Some(Annulus::Tri(annulus)) = inverse_map(&Annulus::Tri(tri), t) else {
                        unreachable!()
                    };
                    let cand = Best {
                        annulus,
                        case: if p == q {
                            CaseTag::ApexCorollary
                        } else {
                            CaseTag::OuterDefined
                        },
                    };
                    if improves(&cand, &found) {
                        found = Some(cand);
                    }
                }
            }
            found
        });
        for b in results.into_iter().flatten() {
            if improves(&b, &best) {
                best = Some(b);
            }
        }
    }
    let best = best.expect("the apex wedge at the topmost point contains every point");
    AnnulusSolution {
        shape: match best.annulus.orientation {
            TriOrientation::ApexUp => Shape::TriUp,
            TriOrientation::ApexDown => Shape::TriDown,
        },
        width: best.annulus.width,
        annulus: Annulus::Tri(best.annulus),
        witnesses: defining_points(&Annulus::Tri(best.annulus), ps, cfg.eps),
        case_tag: best.case,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::EPS;

    fn ps(pts: &[(f64, f64, u32)], k: u32) -> PointSet {
        PointSet::new(
            pts.iter()
                .map(|&(x, y, c)| ColoredPoint::new(x, y, c))
                .collect(),
            k,
        )
        .unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn apex_examples() {
        let v = wedge_apex(
            &ColoredPoint::new(0.0, 0.0, 1),
            &ColoredPoint::new(2.0, 0.0, 2),
        );
        assert!(close(v.x, 1.0) && close(v.y, SQRT3));
        let a = ColoredPoint::new(1.0, SQRT3, 1);
        assert_eq!(wedge_apex(&a, &a), a.point());
        // q on the 60 degree line through p: the apex is q
        let q = ColoredPoint::new(1.0, SQRT3, 2);
        let v = wedge_apex(&ColoredPoint::new(0.0, 0.0, 1), &q);
        assert!(close(v.x, 1.0) && close(v.y, SQRT3));
    }

    #[test]
    fn degenerate_wedges_rejected() {
        let inst = ps(&[(0.0, 0.0, 1), (1.0, 5.0, 2), (-1.0, 0.0, 2)], 2);
        assert!(wedge(&inst, 0, 1).is_none());
        assert!(wedge(&inst, 0, 2).is_none());
        assert!(wedge(&inst, 2, 0).is_some());
    }

    #[test]
    fn mu_examples() {
        let v = Point::new(1.0, SQRT3);
        assert_eq!(mu(v, 0.0, &ColoredPoint::new(0.0, 0.0, 1)).unwrap(), 0.0);
        let c = mu(v, 0.0, &ColoredPoint::new(1.0, 1.0 / SQRT3, 1)).unwrap();
        assert!(close(c, 1.0 / SQRT3));
        let m = mu(Point::new(0.0, 10.0), 0.0, &ColoredPoint::new(0.0, 9.0, 1)).unwrap();
        assert!(close(m, 0.5));
        assert!(mu(v, 0.0, &ColoredPoint::new(5.0, 0.0, 1)).is_err());
    }

    #[test]
    fn tracker_width() {
        let mut t = ColorTracker::new(2);
        t.insert(0, 1.0, 5.0, 0);
        assert!(!t.is_spanning());
        t.insert(1, 3.0, 2.0, 1);
        assert!(t.is_spanning());
        // color 0: min(1, 5 - 0) = 1; color 1: min(3, 2 - 0) = 2
        assert_eq!(t.width(0.0), (2.0, 1));
        assert_eq!(t.width(1.5), (1.0, 0));
    }

    #[test]
    fn wedge_examples() {
        let inst = ps(&[(0.0, 0.0, 1), (2.0, 0.0, 2), (1.0, -1.0, 3)], 3);
        let w = wedge(&inst, 0, 1).unwrap();
        let t = solve_wedge(&w, &inst).unwrap();
        assert!(t.width.abs() < 1e-12);
        assert_eq!(t.base_y, -1.0);
    }

    #[test]
    fn examples() {
        let verts = ps(&[(0.0, 0.0, 1), (2.0, 0.0, 2), (1.0, SQRT3, 3)], 3);
        assert!(solve_cseta(&verts).width.abs() < 1e-12);

        let with_centroid = ps(
            &[
                (0.0, 0.0, 1),
                (2.0, 0.0, 2),
                (1.0, SQRT3, 3),
                (1.0, 1.0 / SQRT3, 4),
            ],
            4,
        );
        let sol = solve_cseta_with(&with_centroid, &Config::verifying());
        assert!(sol.width <= 1.0 / SQRT3 + 1e-9);
        assert!(sol.is_color_spanning(&with_centroid, EPS));

        let two = ps(&[(0.0, 0.0, 1), (5.0, -2.0, 2)], 2);
        assert!(solve_cseta(&two).width.abs() < 1e-12);
    }

    #[test]
    fn apex_distance_twice_width() {
        let inst = ps(
            &[
                (0.0, 0.0, 1),
                (4.0, 0.0, 2),
                (2.0, 3.0, 3),
                (2.0, 1.0, 4),
                (1.0, 0.5, 4),
            ],
            4,
        );
        let sol = solve_cseta(&inst);
        let Annulus::Tri(t) = sol.annulus else {
            panic!()
        };
        let (o, i) = (t.outer_vertices()[0], t.inner_vertices()[0]);
        let d = ((o.x - i.x).powi(2) + (o.y - i.y).powi(2)).sqrt();
        assert!((d - 2.0 * t.width).abs() < 1e-9);
    }
}
