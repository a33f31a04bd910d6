//! Minimum-width color-spanning axis-parallel rectangular annulus.
//!
//! An optimal annulus has two differently colored points on a pair of
//! similar sides, so its width is a coordinate difference. For a point `p`
//! on the top of the outer rectangle the decision "is there a color-spanning
//! annulus of width `delta`" is answered by fixing the bottom line and the
//! left side and sweeping the right side with a color-count array. The
//! smallest feasible `delta` for `p` is found by binary search over the
//! differences `y(p) - y(q)`. The other three sides are covered by running
//! the same search on rotated copies of the input.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::config::{chunked, Config};
use crate::geom::{
    defining_points, inverse_map, narrower, transform, Annulus, AnnulusSolution, CaseTag,
    ColoredPoint, PointSet, RectAnnulus, Shape, Transform,
};

/// Color counts for the annulus currently under the sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepState {
    /// Points of each color inside the annulus.
    pub d: Vec<u32>,
    /// Number of colors with no point inside.
    pub z: usize,
    /// Next position of the right sweep line in the strip's x-order.
    pub l1: usize,
    /// Next position of the trailing line that evicts points entering the
    /// inner rectangle.
    pub l2: usize,
}

impl SweepState {
    pub fn new(k: usize) -> Self {
        SweepState {
            d: vec![0; k],
            z: k,
            l1: 0,
            l2: 0,
        }
    }

    pub fn reset(&mut self, start: usize) {
        self.d.iter_mut().for_each(|c| *c = 0);
        self.z = self.d.len();
        self.l1 = start;
        self.l2 = start;
    }

    pub fn enter(&mut self, slot: usize) {
        if self.d[slot] == 0 {
            self.z -= 1;
        }
        self.d[slot] += 1;
    }

    pub fn leave(&mut self, slot: usize) {
        self.d[slot] -= 1;
        if self.d[slot] == 0 {
            self.z += 1;
        }
    }

    pub fn is_spanning(&self) -> bool {
        self.z == 0
    }
}

/// Counters gathered while solving.
#[derive(Debug, Default)]
pub struct CsraStats {
    /// Decision-procedure invocations.
    pub decisions: AtomicUsize,
    /// Candidate lists where feasibility was not monotone in `delta`. Only
    /// checked with [`Config::verify`].
    pub violations: AtomicUsize,
}

impl CsraStats {
    pub fn decisions(&self) -> usize {
        self.decisions.load(Ordering::Relaxed)
    }

    pub fn violations(&self) -> usize {
        self.violations.load(Ordering::Relaxed)
    }
}

/// Point set with the sort orders the decision procedure needs.
pub struct Prepared<'a> {
    ps: &'a PointSet,
    /// Indices by decreasing y.
    by_y: Vec<usize>,
    /// Indices by increasing x.
    by_x: Vec<usize>,
    slack: f64,
    verify: bool,
}

impl<'a> Prepared<'a> {
    pub fn new(ps: &'a PointSet, cfg: &Config) -> Self {
        let pts = ps.points();
        let mut by_y: Vec<usize> = (0..pts.len()).collect();
        by_y.sort_by(|&a, &b| pts[b].y.total_cmp(&pts[a].y).then(a.cmp(&b)));
        let mut by_x: Vec<usize> = (0..pts.len()).collect();
        by_x.sort_by(|&a, &b| pts[a].x.total_cmp(&pts[b].x).then(a.cmp(&b)));
        Prepared {
            ps,
            by_y,
            by_x,
            slack: cfg.slack(),
            verify: cfg.verify,
        }
    }
}

struct Scratch {
    state: SweepState,
    strip: Vec<usize>,
    seen: Vec<u32>,
}

impl Scratch {
    fn new(k: usize) -> Self {
        Scratch {
            state: SweepState::new(k),
            strip: Vec::new(),
            seen: vec![0; k],
        }
    }
}

/// Is there a color-spanning annulus of width `y(p) - y(q)` whose outer top
/// passes through `p`?
pub fn exists_csra_top(p: &ColoredPoint, q: &ColoredPoint, ps: &PointSet) -> Option<RectAnnulus> {
    let cfg = Config::default();
    let prep = Prepared::new(ps, &cfg);
    let pi = ps.points().iter().position(|s| s == p)?;
    let delta = p.y - q.y;
    if delta < 0.0 {
        return None;
    }
    decide(&prep, pi, delta, &mut Scratch::new(ps.k() as usize))
}

fn decide(prep: &Prepared, pi: usize, delta: f64, scratch: &mut Scratch) -> Option<RectAnnulus> {
    let pts = prep.ps.points();
    let k = prep.ps.k() as usize;
    let p = pts[pi];
    let yp = p.y;
    let band = delta + prep.slack;

    // strip [y(s), y(p)]: first prefix below h_p that holds every color
    let top = prep.by_y.partition_point(|&i| pts[i].y > yp);
    let seen = &mut scratch.seen;
    seen.iter_mut().for_each(|c| *c = 0);
    let mut have = 0;
    let mut s_pos = None;
    for (pos, &i) in prep.by_y.iter().enumerate().skip(top) {
        let slot = pts[i].color as usize - 1;
        if seen[slot] == 0 {
            have += 1;
        }
        seen[slot] += 1;
        if have == k {
            s_pos = Some(pos);
            break;
        }
    }
    let s_pos = s_pos?;
    let ys = pts[prep.by_y[s_pos]].y;
    if yp - ys <= 2.0 * delta + prep.slack {
        // every strip point is within delta of the top or the bottom
        let (mut x1, mut x2) = (f64::INFINITY, f64::NEG_INFINITY);
        for &i in &prep.by_y[top..] {
            if pts[i].y < ys {
                break;
            }
            x1 = x1.min(pts[i].x);
            x2 = x2.max(pts[i].x);
        }
        return Some(RectAnnulus {
            x1,
            x2,
            y1: ys,
            y2: yp,
            width: delta,
        });
    }

    // bottom lines: distinct y at or below y(s)
    let mut pos = s_pos;
    while pos > top && pts[prep.by_y[pos - 1]].y == ys {
        pos -= 1;
    }
    let mut last_y1 = f64::NAN;
    for &ri in &prep.by_y[pos..] {
        let y1 = pts[ri].y;
        if y1 == last_y1 {
            continue;
        }
        last_y1 = y1;
        scratch.strip.clear();
        scratch.strip.extend(
            prep.by_x
                .iter()
                .copied()
                .filter(|&i| pts[i].y >= y1 && pts[i].y <= yp),
        );
        if !band_colors_suffice(pts, &scratch.strip, yp, y1, band, &mut scratch.seen, k) {
            continue;
        }
        if let Some(r) = sweep_strip(prep, &p, y1, band, delta, scratch) {
            return Some(r);
        }
    }
    None
}

/// Necessary condition for a strip: colors in the top and bottom bands plus
/// two x-windows of width `delta` over the middle must reach `k`.
fn band_colors_suffice(
    pts: &[ColoredPoint],
    strip: &[usize],
    yp: f64,
    y1: f64,
    band: f64,
    seen: &mut [u32],
    k: usize,
) -> bool {
    seen.iter_mut().for_each(|c| *c = 0);
    let mut have = 0;
    for &i in strip {
        let s = &pts[i];
        if yp - s.y <= band || s.y - y1 <= band {
            let slot = s.color as usize - 1;
            if seen[slot] == 0 {
                have += 1;
                seen[slot] = 1;
            }
        }
    }
    if have == k {
        return true;
    }
    // best window over middle points of colors not already banded
    let mut count = vec![0u32; k];
    let mut distinct = 0;
    let mut best = 0;
    let mut lo = 0;
    let mid: Vec<usize> = strip
        .iter()
        .copied()
        .filter(|&i| seen[pts[i].color as usize - 1] == 0)
        .collect();
    for hi in 0..mid.len() {
        let c = pts[mid[hi]].color as usize - 1;
        if count[c] == 0 {
            distinct += 1;
        }
        count[c] += 1;
        while pts[mid[hi]].x - pts[mid[lo]].x > band {
            let c = pts[mid[lo]].color as usize - 1;
            count[c] -= 1;
            if count[c] == 0 {
                distinct -= 1;
            }
            lo += 1;
        }
        best = best.max(distinct);
    }
    have + 2 * best >= k
}

fn sweep_strip(
    prep: &Prepared,
    p: &ColoredPoint,
    y1: f64,
    band: f64,
    delta: f64,
    scratch: &mut Scratch,
) -> Option<RectAnnulus> {
    let pts = prep.ps.points();
    let strip = &scratch.strip;
    let yp = p.y;
    let state = &mut scratch.state;
    let mut start = 0;
    while start < strip.len() {
        let x1 = pts[strip[start]].x;
        if x1 > p.x {
            break;
        }
        state.reset(start);
        while state.l1 < strip.len() {
            // L1: admit every point at the next abscissa
            let x2 = pts[strip[state.l1]].x;
            while state.l1 < strip.len() && pts[strip[state.l1]].x == x2 {
                state.enter(pts[strip[state.l1]].color as usize - 1);
                state.l1 += 1;
            }
            // L2: evict points now deep enough to sit in the open inner rectangle
            while state.l2 < state.l1 && x2 - pts[strip[state.l2]].x > band {
                let d = &pts[strip[state.l2]];
                if d.x - x1 > band && yp - d.y > band && d.y - y1 > band {
                    state.leave(d.color as usize - 1);
                }
                state.l2 += 1;
            }
            if prep.verify {
                check_state(pts, strip, start, state, x1, x2, y1, yp, band);
            }
            if x2 >= p.x && state.is_spanning() {
                return Some(RectAnnulus {
                    x1,
                    x2,
                    y1,
                    y2: yp,
                    width: delta,
                });
            }
        }
        while start < strip.len() && pts[strip[start]].x == x1 {
            start += 1;
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn check_state(
    pts: &[ColoredPoint],
    strip: &[usize],
    start: usize,
    state: &SweepState,
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    band: f64,
) {
    let mut d = vec![0u32; state.d.len()];
    for &i in &strip[start..state.l1] {
        let s = &pts[i];
        if s.x - x1 <= band || x2 - s.x <= band || y2 - s.y <= band || s.y - y1 <= band {
            d[s.color as usize - 1] += 1;
        }
    }
    let z = d.iter().filter(|&&c| c == 0).count();
    assert_eq!(d, state.d, "sweep counts diverged");
    assert_eq!(z, state.z, "missing-color counter diverged");
}

/// Smallest feasible width with `p` on the outer top, restricted to widths
/// below `bound`. Returns the width, the annulus and the partner `q` (None
/// for width 0).
pub fn min_width_for_p(
    prep: &Prepared,
    pi: usize,
    bound: f64,
    stats: &CsraStats,
) -> Option<(f64, RectAnnulus, Option<usize>)> {
    let pts = prep.ps.points();
    let p = pts[pi];
    let mut cands: Vec<(f64, Option<usize>)> = vec![(0.0, None)];
    for (qi, q) in pts.iter().enumerate() {
        if q.y < p.y && q.color != p.color {
            cands.push((p.y - q.y, Some(qi)));
        }
    }
    cands.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    cands.dedup_by(|a, b| a.0 == b.0);
    if bound.is_finite() {
        let tol = 1e-12 * (1.0 + bound.abs());
        cands.retain(|c| c.0 < bound - tol);
    }
    if cands.is_empty() {
        return None;
    }

    let mut scratch = Scratch::new(prep.ps.k() as usize);
    let mut run = |delta: f64| {
        stats.decisions.fetch_add(1, Ordering::Relaxed);
        decide(prep, pi, delta, &mut scratch)
    };

    let last = cands.len() - 1;
    let found = run(cands[last].0)?;
    // first feasible index in [lo, hi]; hi is known feasible
    let (mut lo, mut hi) = (0, last);
    let mut best = found;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match run(cands[mid].0) {
            Some(r) => {
                hi = mid;
                best = r;
            }
            None => lo = mid + 1,
        }
    }

    if prep.verify {
        let linear: Vec<Option<RectAnnulus>> = cands.iter().map(|c| run(c.0)).collect();
        let first = linear.iter().position(Option::is_some);
        let monotone = first.is_none_or(|f| linear[f..].iter().all(Option::is_some));
        if !monotone || first != Some(hi) {
            stats.violations.fetch_add(1, Ordering::Relaxed);
            let f = first?;
            return Some((cands[f].0, linear[f]?, cands[f].1));
        }
    }
    Some((cands[hi].0, best, cands[hi].1))
}

#[derive(Debug, Clone)]
struct Best {
    annulus: RectAnnulus,
    case: CaseTag,
}

fn improves(new: &Best, old: &Option<Best>) -> bool {
    old.as_ref()
        .is_none_or(|old| narrower(new.annulus.width, old.annulus.width))
}

pub fn solve_csra(ps: &PointSet) -> AnnulusSolution {
    solve_csra_with(ps, &Config::default())
}

pub fn solve_csra_with(ps: &PointSet, cfg: &Config) -> AnnulusSolution {
    solve_csra_stats(ps, cfg, &CsraStats::default())
}

pub fn solve_csra_stats(ps: &PointSet, cfg: &Config, stats: &CsraStats) -> AnnulusSolution {
    let mut best: Option<Best> = None;
    for t in [
        Transform::Identity,
        Transform::Rotate90,
        Transform::Rotate180,
        Transform::Rotate270,
    ] {
        let local = transform(ps, t);
        let prep = Prepared::new(&local, cfg);
        let bound = best.as_ref().map_or(f64::INFINITY, |b| b.annulus.width);
        let results = chunked(local.len(), cfg.threads, |range| {
            let mut bound = bound;
            let mut local_best: Option<Best> = None;
            for pi in range {
                let Some((_, rect, _)) = min_width_for_p(&prep, pi, bound, stats) else {
                    continue;
                };
                let Some(Annulus::Rect(annulus)) = inverse_map(&Annulus::Rect(rect), t) else {
                    unreachable!()
                };
                let case = if rect.inner_is_empty() {
                    CaseTag::Degenerate
                } else {
                    CaseTag::OuterDefined
                };
                let cand = Best { annulus, case };
                if improves(&cand, &local_best) {
                    bound = bound.min(cand.annulus.width);
                    local_best = Some(cand);
                }
                if bound <= 0.0 {
                    break;
                }
            }
            local_best
        });
        for b in results.into_iter().flatten() {
            if improves(&b, &best) {
                best = Some(b);
            }
        }
        if best.as_ref().is_some_and(|b| b.annulus.width <= 0.0) {
            break;
        }
    }
    let best = best.expect("a single point already spans its own color, so some strip succeeds");
    AnnulusSolution {
        shape: Shape::Rect,
        width: best.annulus.width,
        annulus: Annulus::Rect(best.annulus),
        witnesses: defining_points(&Annulus::Rect(best.annulus), ps, cfg.eps),
        case_tag: best.case,
    }
}
