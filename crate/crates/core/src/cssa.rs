//! Minimum-width color-spanning axis-parallel square annulus.
//!
//! Some optimal annulus has two differently colored points on a pair of
//! parallel sides of its outer or its inner square. Fixing such a pair `p`
//! (top) and `q` (bottom) fixes the radius of that square to half their
//! vertical separation and confines the center to a horizontal segment. Along
//! that segment every point contributes a Chebyshev distance profile:
//!
//! * outer pair: each remaining color must keep a point inside the outer
//!   square, and the inner radius can grow up to the distance of the nearest
//!   among the per-color farthest usable points. That is the maximum of a
//!   lower envelope of per-color upper envelopes.
//! * inner pair: dually, each color needs a point outside the inner square
//!   and the outer radius must reach the farthest among the per-color nearest
//!   usable points, which is the minimum of an upper envelope of per-color
//!   lower envelopes.
//!
//! Pairs on vertical sides are handled by running the same code on the point
//! set rotated by 90 degrees.

use crate::config::{chunked, Config};
use crate::envelope::{
    clip_superlevel, clipped_upper_envelope, extremum, farthest_of, lower_envelope,
    nearest_envelope, profile, upper_envelope, CenterSegment, Envelope, IncrementalUpper, Mode,
};
use crate::geom::{
    defining_points, inverse_map, linf_distance, narrower, transform, Annulus, AnnulusSolution,
    CaseTag, ColoredPoint, Point, PointSet, Shape, SquareAnnulus, Transform,
};

/// A bi-colored pair pinned to the top and bottom sides of a square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCandidate {
    pub p: ColoredPoint,
    pub q: ColoredPoint,
    pub delta: f64,
    /// Admissible centers.
    pub segment: CenterSegment,
    /// Union of all squares of radius `delta / 2` centered on `segment`:
    /// `(x1, x2, y1, y2)`.
    pub bounds: (f64, f64, f64, f64),
}

impl PairCandidate {
    pub fn radius(&self) -> f64 {
        0.5 * self.delta
    }

    fn in_bounds(&self, s: &ColoredPoint, eps: f64) -> bool {
        let (x1, x2, y1, y2) = self.bounds;
        s.x >= x1 - eps && s.x <= x2 + eps && s.y >= y1 - eps && s.y <= y2 + eps
    }
}

/// The center segment and bounding rectangle for `p` on top and `q` on the
/// bottom of a square, or `None` when no square has both on those sides.
pub fn pair_candidate(p: &ColoredPoint, q: &ColoredPoint) -> Option<PairCandidate> {
    let delta = p.y - q.y;
    let dx = (p.x - q.x).abs();
    if delta < 0.0 || dx > delta {
        return None;
    }
    let cap = 0.5 * delta;
    let lo = p.x.max(q.x) - cap;
    let hi = p.x.min(q.x) + cap;
    let cy = 0.5 * (p.y + q.y);
    Some(PairCandidate {
        p: *p,
        q: *q,
        delta,
        segment: CenterSegment::new(cy, lo, hi.max(lo)),
        bounds: (lo - cap, hi.max(lo) + cap, q.y, p.y),
    })
}

/// Best annulus found for one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairResult {
    pub center: Point,
    pub r_out: f64,
    pub r_in: f64,
    /// Index of the point fixing the free radius, if any.
    pub witness: Option<usize>,
}

impl PairResult {
    pub fn width(&self) -> f64 {
        self.r_out - self.r_in
    }
}

#[derive(Default)]
struct Scratch {
    items: Vec<(u32, f64, f64, usize)>,
    group: Vec<(f64, f64, usize)>,
    seen: Vec<bool>,
}

fn spans_in(
    ps: &PointSet,
    scratch: &mut Scratch,
    mut member: impl FnMut(&ColoredPoint) -> bool,
) -> bool {
    scratch.seen.clear();
    scratch.seen.resize(ps.k() as usize, false);
    let mut missing = ps.k() as usize;
    for s in ps.points() {
        if !scratch.seen[s.color as usize - 1] && member(s) {
            scratch.seen[s.color as usize - 1] = true;
            missing -= 1;
        }
    }
    missing == 0
}

/// Outer pair: `p`, `q` on the outer square. Returns the best center on the
/// segment and the resulting radii, or `None` if no center works.
pub fn solve_pair_outer(cand: &PairCandidate, ps: &PointSet, cfg: &Config) -> Option<PairResult> {
    solve_pair_outer_bounded(cand, ps, cfg, f64::INFINITY, &mut Scratch::default())
}

fn solve_pair_outer_bounded(
    cand: &PairCandidate,
    ps: &PointSet,
    cfg: &Config,
    bound: f64,
    scratch: &mut Scratch,
) -> Option<PairResult> {
    let eps = cfg.slack();
    if !spans_in(ps, scratch, |s| cand.in_bounds(s, eps)) {
        return None;
    }
    let cap = cand.radius();
    let reach = cap + eps;
    let c = cand.segment;
    let (cp, cq) = (cand.p.color, cand.q.color);

    // points that can rise to within `bound` of the outer square somewhere on C
    let floor = cap - bound - eps;
    scratch.items.clear();
    for (i, s) in ps.points().iter().enumerate() {
        if s.color == cp || s.color == cq || !cand.in_bounds(s, eps) {
            continue;
        }
        let dy = (s.y - c.cy).abs();
        if dy > reach {
            continue;
        }
        let far = (c.lo - s.x).abs().max((c.hi - s.x).abs()).max(dy);
        if far < floor {
            continue;
        }
        scratch.items.push((s.color, s.x, dy, i));
    }
    scratch
        .items
        .sort_by(|a, b| a.0.cmp(&b.0).then(a.3.cmp(&b.3)));

    let others = (1..=ps.k()).filter(|&i| i != cp && i != cq).count();
    let mut envs: Vec<Envelope> = Vec::with_capacity(others);
    let mut start = 0;
    while start < scratch.items.len() {
        let color = scratch.items[start].0;
        let mut end = start;
        while end < scratch.items.len() && scratch.items[end].0 == color {
            end += 1;
        }
        let group = &scratch.items[start..end];
        let covers = group
            .iter()
            .all(|&(_, sx, _, _)| sx - reach <= c.lo && sx + reach >= c.hi);
        let env = if covers {
            let mut inc = IncrementalUpper::new(&c);
            for &(_, sx, dy, i) in group {
                inc.insert(sx, dy, i);
            }
            inc.to_envelope()
        } else {
            scratch.group.clear();
            scratch
                .group
                .extend(group.iter().map(|&(_, sx, dy, i)| (sx, dy, i)));
            clipped_upper_envelope(&mut scratch.group, &c, reach)
        };
        if cfg.verify {
            check_against_generic(&env, group, ps, &c, cap, eps);
        }
        if env.is_empty() {
            return None;
        }
        envs.push(env);
        start = end;
    }
    if envs.len() < others {
        return None;
    }

    let (cx, v, witness) = if envs.is_empty() {
        (c.lo, cap, None)
    } else {
        let gamma = lower_envelope(&envs);
        let (cx, v) = extremum(&gamma, Mode::Max)?;
        let src = gamma
            .pieces()
            .iter()
            .find(|p| p.x0 <= cx && cx <= p.x1)
            .map(|p| p.source);
        (cx, v, src)
    };
    let r_in = v.min(cap).max(0.0);
    Some(PairResult {
        center: Point::new(cx, c.cy),
        r_out: cap,
        r_in,
        witness,
    })
}

fn check_against_generic(
    env: &Envelope,
    group: &[(u32, f64, f64, usize)],
    ps: &PointSet,
    c: &CenterSegment,
    cap: f64,
    eps: f64,
) {
    let profiles: Vec<_> = group
        .iter()
        .map(|&(_, _, _, i)| {
            crate::envelope::clip_sublevel(&profile(i, &ps.points()[i], c), cap, eps)
        })
        .collect();
    let generic = upper_envelope(&profiles);
    for j in 0..=32 {
        let x = c.lo + (c.hi - c.lo) * j as f64 / 32.0;
        let (a, b) = (env.value_at(x), generic.value_at(x));
        match (a, b) {
            (Some(a), Some(b)) => assert!(
                (a - b).abs() < 1e-9,
                "per-color envelope mismatch at {x}: {a} vs {b}"
            ),
            (None, None) => {}
            _ => panic!("per-color envelope domain mismatch at {x}: {a:?} vs {b:?}"),
        }
    }
}

/// Inner pair: `p`, `q` on the inner square. The outer radius is the
/// smallest that keeps a point of every color at distance in
/// `[delta / 2, r_out]`.
pub fn solve_pair_inner(cand: &PairCandidate, ps: &PointSet, cfg: &Config) -> Option<PairResult> {
    solve_pair_inner_bounded(cand, ps, cfg, f64::INFINITY)
}

fn solve_pair_inner_bounded(
    cand: &PairCandidate,
    ps: &PointSet,
    cfg: &Config,
    bound: f64,
) -> Option<PairResult> {
    let eps = cfg.slack();
    let cap = cand.radius();
    let c = cand.segment;
    let (cp, cq) = (cand.p.color, cand.q.color);
    let ceiling = cap + bound + eps;
    let reach = cap - eps;

    let k = ps.k() as usize;
    let mut per_color: Vec<Vec<_>> = vec![Vec::new(); k];
    for (i, s) in ps.points().iter().enumerate() {
        if s.color == cp || s.color == cq {
            continue;
        }
        let dy = (s.y - c.cy).abs();
        let gap = if s.x < c.lo {
            c.lo - s.x
        } else if s.x > c.hi {
            s.x - c.hi
        } else {
            0.0
        };
        if gap.max(dy) > ceiling {
            continue;
        }
        // strictly inside the inner square for every center on C
        if dy < reach && s.x - reach > c.lo && s.x + reach < c.hi {
            continue;
        }
        let prof = clip_superlevel(&profile(i, s, &c), cap, eps);
        if !prof.feasible.is_empty() {
            per_color[s.slot()].push(prof);
        }
    }

    let mut envs = Vec::new();
    for (slot, profiles) in per_color.iter().enumerate() {
        let color = slot as u32 + 1;
        if color == cp || color == cq {
            continue;
        }
        if profiles.is_empty() {
            return None;
        }
        envs.push(nearest_envelope(profiles));
    }

    let (cx, v, witness) = if envs.is_empty() {
        (c.lo, cap, None)
    } else {
        let top = farthest_of(envs);
        let (cx, v) = extremum(&top, Mode::Min)?;
        let src = top
            .pieces()
            .iter()
            .find(|p| p.x0 <= cx && cx <= p.x1)
            .map(|p| p.source);
        (cx, v, src)
    };
    Some(PairResult {
        center: Point::new(cx, c.cy),
        r_out: v.max(cap),
        r_in: cap,
        witness,
    })
}

#[derive(Debug, Clone)]
struct Best {
    width: f64,
    annulus: SquareAnnulus,
    case: CaseTag,
}

fn improves(new: &Best, old: &Option<Best>) -> bool {
    old.as_ref()
        .is_none_or(|old| narrower(new.width, old.width))
}

pub fn solve_cssa(ps: &PointSet) -> AnnulusSolution {
    solve_cssa_with(ps, &Config::default())
}

pub fn solve_cssa_with(ps: &PointSet, cfg: &Config) -> AnnulusSolution {
    if ps.k() <= 2 {
        return two_color_square(ps);
    }
    let mut best: Option<Best> = None;
    for t in [Transform::Identity, Transform::Rotate90] {
        let local = transform(ps, t);
        let mut order: Vec<usize> = (0..local.len()).collect();
        order.sort_by(|&a, &b| {
            let (pa, pb) = (&local.points()[a], &local.points()[b]);
            pb.y.total_cmp(&pa.y).then(a.cmp(&b))
        });
        let results = chunked(order.len(), cfg.threads, |range| {
            scan_pairs(
                &local,
                &order,
                range,
                t,
                cfg,
                best.as_ref().map_or(f64::INFINITY, |b| b.width),
            )
        });
        for b in results.into_iter().flatten() {
            if improves(&b, &best) {
                best = Some(b);
            }
        }
        if best.as_ref().is_some_and(|b| b.width <= 0.0) {
            break;
        }
    }
    let best = best.expect("a point set with at least three colors always admits a square annulus");
    AnnulusSolution {
        shape: Shape::Square,
        annulus: Annulus::Square(best.annulus),
        width: best.width,
        witnesses: defining_points(&Annulus::Square(best.annulus), ps, cfg.eps),
        case_tag: best.case,
    }
}

fn scan_pairs(
    local: &PointSet,
    order: &[usize],
    range: std::ops::Range<usize>,
    t: Transform,
    cfg: &Config,
    start_bound: f64,
) -> Option<Best> {
    let pts = local.points();
    let mut best: Option<Best> = None;
    let mut scratch = Scratch::default();
    let mut bound = start_bound;
    for a in range {
        let pi = order[a];
        let p = &pts[pi];
        for &qi in &order[a + 1..] {
            let q = &pts[qi];
            if q.color == p.color {
                continue;
            }
            if q.y == p.y && q.x != p.x {
                continue;
            }
            let Some(cand) = pair_candidate(p, q) else {
                continue;
            };
            let outer = solve_pair_outer_bounded(&cand, local, cfg, bound, &mut scratch);
            let inner = solve_pair_inner_bounded(&cand, local, cfg, bound);
            for (res, case) in [
                (outer, CaseTag::OuterDefined),
                (inner, CaseTag::InnerDefined),
            ] {
                let Some(res) = res else { continue };
                let sq = SquareAnnulus {
                    center: res.center,
                    r_out: res.r_out,
                    r_in: res.r_in,
                };
                let Some(Annulus::Square(annulus)) = inverse_map(&Annulus::Square(sq), t) else {
                    unreachable!()
                };
                let cand_best = Best {
                    width: res.width(),
                    annulus,
                    case,
                };
                if improves(&cand_best, &best) {
                    bound = bound.min(cand_best.width);
                    best = Some(cand_best);
                }
            }
            if bound <= 0.0 {
                return best;
            }
        }
    }
    best
}

/// One or two colors: a square through one point of each color.
fn two_color_square(ps: &PointSet) -> AnnulusSolution {
    let first = |c: u32| ps.points().iter().position(|p| p.color == c).unwrap();
    let a = first(1);
    let pa = ps.points()[a];
    let (center, r, witnesses) = if ps.k() == 1 {
        (pa.point(), 0.0, vec![pa])
    } else {
        let pb = ps.points()[first(2)];
        let m = Point::new(0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y));
        (m, linf_distance(m, pa.point()), vec![pa, pb])
    };
    AnnulusSolution {
        shape: Shape::Square,
        annulus: Annulus::Square(SquareAnnulus {
            center,
            r_out: r,
            r_in: r,
        }),
        width: 0.0,
        witnesses,
        case_tag: CaseTag::Degenerate,
    }
}

/// Square-annulus width for a fixed center: the narrowest window of Chebyshev
/// distances containing every color.
pub fn width_at_center(ps: &PointSet, center: Point) -> (f64, f64, f64) {
    let mut d: Vec<(f64, usize)> = ps
        .points()
        .iter()
        .map(|p| (linf_distance(center, p.point()), p.color as usize - 1))
        .collect();
    d.sort_by(|a, b| a.0.total_cmp(&b.0));
    let k = ps.k() as usize;
    let mut count = vec![0usize; k];
    let mut have = 0;
    let mut best = (f64::INFINITY, 0.0, 0.0);
    let mut lo = 0;
    for hi in 0..d.len() {
        if count[d[hi].1] == 0 {
            have += 1;
        }
        count[d[hi].1] += 1;
        while have == k {
            let w = d[hi].0 - d[lo].0;
            if w < best.0 {
                best = (w, d[lo].0, d[hi].0);
            }
            count[d[lo].1] -= 1;
            if count[d[lo].1] == 0 {
                have -= 1;
            }
            lo += 1;
        }
    }
    best
}
