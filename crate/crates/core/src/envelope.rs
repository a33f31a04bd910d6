//! Piecewise-linear partial functions over a horizontal center segment.
//!
//! A [`DistanceProfile`] is the Chebyshev distance from a fixed point to a
//! center sliding along the segment: a flat-bottomed V with slopes in
//! `{-1, 0, +1}`. Profiles can be clipped to their sub-level set (the point
//! must stay inside the outer square) or super-level set (it must stay outside
//! the inner square), which turns them into partial functions.
//!
//! An [`Envelope`] is a sorted list of closed linear pieces. Pieces may touch,
//! and a jump is represented by two pieces sharing an endpoint. The value at a
//! point covered by several pieces is resolved by the envelope's [`Sense`]:
//! the maximum for upper semicontinuous functions, the minimum for lower
//! semicontinuous ones. With that convention, an undefined argument behaves as
//! `-inf` (upper) or `+inf` (lower), so a pointwise maximum of upper
//! envelopes is defined wherever any input is, while a pointwise minimum is
//! defined only where all inputs are. Extrema of the matching kind are always
//! attained at piece endpoints.

use crate::geom::ColoredPoint;

/// The horizontal segment of admissible annulus centers `[lo, hi] x {cy}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterSegment {
    pub cy: f64,
    pub lo: f64,
    pub hi: f64,
}

impl CenterSegment {
    pub fn new(cy: f64, lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        CenterSegment { cy, lo, hi }
    }

    pub fn is_point(&self) -> bool {
        self.lo >= self.hi
    }
}

/// `f(cx) = max(|cx - sx|, dy)` on `domain`, restricted to `feasible`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceProfile {
    pub source: usize,
    pub sx: f64,
    pub dy: f64,
    pub domain: (f64, f64),
    /// Sorted disjoint closed sub-intervals of `domain` where the profile is
    /// defined. A sub-level clip leaves at most one, a super-level clip two.
    pub feasible: Vec<(f64, f64)>,
}

/// Builds the distance profile of `s` along `c`.
pub fn profile(source: usize, s: &ColoredPoint, c: &CenterSegment) -> DistanceProfile {
    DistanceProfile {
        source,
        sx: s.x,
        dy: (c.cy - s.y).abs(),
        domain: (c.lo, c.hi),
        feasible: vec![(c.lo, c.hi)],
    }
}

impl DistanceProfile {
    #[inline]
    pub fn value(&self, cx: f64) -> f64 {
        (cx - self.sx).abs().max(self.dy)
    }

    pub fn is_defined_at(&self, cx: f64) -> bool {
        self.feasible.iter().any(|&(a, b)| a <= cx && cx <= b)
    }

    fn restrict(&self, keep: &[(f64, f64)]) -> DistanceProfile {
        let mut feasible = Vec::new();
        for &(a, b) in &self.feasible {
            for &(c, d) in keep {
                let lo = a.max(c);
                let hi = b.min(d);
                if lo <= hi {
                    feasible.push((lo, hi));
                }
            }
        }
        feasible.sort_by(|u, v| u.0.total_cmp(&v.0));
        DistanceProfile {
            feasible,
            ..self.clone()
        }
    }
}

/// Restricts `p` to `{cx : value(cx) <= cap + eps}`, a single interval.
pub fn clip_sublevel(p: &DistanceProfile, cap: f64, eps: f64) -> DistanceProfile {
    let reach = cap + eps;
    if p.dy > reach {
        return p.restrict(&[]);
    }
    p.restrict(&[(p.sx - reach, p.sx + reach)])
}

/// Restricts `p` to `{cx : value(cx) >= cap - eps}`, at most two intervals.
pub fn clip_superlevel(p: &DistanceProfile, cap: f64, eps: f64) -> DistanceProfile {
    let reach = cap - eps;
    if p.dy >= reach {
        return p.clone();
    }
    p.restrict(&[
        (f64::NEG_INFINITY, p.sx - reach),
        (p.sx + reach, f64::INFINITY),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    /// Upper semicontinuous: coincident pieces resolve to their maximum.
    Upper,
    /// Lower semicontinuous: coincident pieces resolve to their minimum.
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Max,
    Min,
}

/// A closed linear piece `y0 + slope * (x - x0)` on `[x0, x1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub slope: f64,
    pub source: usize,
}

impl Piece {
    #[inline]
    pub fn value(&self, x: f64) -> f64 {
        self.y0 + self.slope * (x - self.x0)
    }

    #[inline]
    pub fn y1(&self) -> f64 {
        self.value(self.x1)
    }

    pub fn is_point(&self) -> bool {
        self.x0 >= self.x1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Envelope {
    pieces: Vec<Piece>,
    sense: Sense,
}

#[inline]
fn tie_tol(a: f64, b: f64) -> f64 {
    1e-12 * (1.0 + a.abs() + b.abs())
}

impl Envelope {
    pub fn empty(sense: Sense) -> Self {
        Envelope {
            pieces: Vec::new(),
            sense,
        }
    }

    /// Wraps pieces that are already sorted and non-overlapping.
    pub fn from_pieces(pieces: Vec<Piece>, sense: Sense) -> Self {
        debug_assert!(pieces.windows(2).all(|w| w[0].x1 <= w[1].x0));
        Envelope { pieces, sense }
    }

    pub fn constant(lo: f64, hi: f64, value: f64, source: usize, sense: Sense) -> Self {
        Envelope::from_pieces(
            vec![Piece {
                x0: lo,
                x1: hi,
                y0: value,
                slope: 0.0,
                source,
            }],
            sense,
        )
    }

    /// The profile as an envelope with the given resolution sense.
    pub fn from_profile(p: &DistanceProfile, sense: Sense) -> Self {
        let mut pieces = Vec::new();
        let left_knee = p.sx - p.dy;
        let right_knee = p.sx + p.dy;
        for &(a, b) in &p.feasible {
            if a == b {
                pieces.push(Piece {
                    x0: a,
                    x1: a,
                    y0: p.value(a),
                    slope: 0.0,
                    source: p.source,
                });
                continue;
            }
            let mut push = |x0: f64, x1: f64, slope: f64| {
                if x0 < x1 {
                    pieces.push(Piece {
                        x0,
                        x1,
                        y0: p.value(x0),
                        slope,
                        source: p.source,
                    });
                }
            };
            push(a, b.min(left_knee), -1.0);
            push(a.max(left_knee), b.min(right_knee), 0.0);
            push(a.max(right_knee), b, 1.0);
        }
        Envelope { pieces, sense }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Value at `x`, or `None` where undefined.
    pub fn value_at(&self, x: f64) -> Option<f64> {
        // first piece that could cover x
        let start = self.pieces.partition_point(|p| p.x1 < x);
        let mut best: Option<f64> = None;
        for p in &self.pieces[start..] {
            if p.x0 > x {
                break;
            }
            let v = p.value(x);
            best = Some(match (best, self.sense) {
                (None, _) => v,
                (Some(b), Sense::Upper) => b.max(v),
                (Some(b), Sense::Lower) => b.min(v),
            });
        }
        best
    }

    /// Vertices `(x, value)` in order, including both sides of jumps.
    pub fn breakpoints(&self) -> Vec<(f64, f64)> {
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(self.pieces.len() + 1);
        for p in &self.pieces {
            for v in [(p.x0, p.y0), (p.x1, p.y1())] {
                match out.last() {
                    Some(&(x, y)) if x == v.0 && (y - v.1).abs() <= tie_tol(y, v.1) => {}
                    _ => out.push(v),
                }
            }
        }
        out
    }

    /// Number of maximal runs of collinear, continuous pieces.
    pub fn segment_count(&self) -> usize {
        let mut count = 0;
        let mut prev: Option<&Piece> = None;
        for p in &self.pieces {
            if p.is_point() {
                continue;
            }
            let continues = prev.is_some_and(|q| {
                q.x1 == p.x0 && q.slope == p.slope && (q.y1() - p.y0).abs() <= tie_tol(q.y1(), p.y0)
            });
            if !continues {
                count += 1;
            }
            prev = Some(p);
        }
        count
    }

    /// Sequence of sources along the envelope with consecutive repeats merged.
    pub fn source_runs(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for p in &self.pieces {
            if out.last() != Some(&p.source) {
                out.push(p.source);
            }
        }
        out
    }

    /// Re-labels every piece's source through `f`.
    pub fn map_sources(mut self, f: impl Fn(usize) -> usize) -> Self {
        for p in &mut self.pieces {
            p.source = f(p.source);
        }
        self
    }

    fn covering(&self, from: &mut usize, xl: f64, xr: f64) -> Option<Piece> {
        while *from < self.pieces.len() && self.pieces[*from].x1 <= xl {
            *from += 1;
        }
        // skip a degenerate piece sitting exactly at xl
        let mut i = *from;
        while i < self.pieces.len() && self.pieces[i].x0 <= xl {
            let p = self.pieces[i];
            if p.x1 >= xr && p.x0 < p.x1 {
                return Some(p);
            }
            i += 1;
        }
        None
    }
}

/// Pointwise `op` of two envelopes with the same sense.
pub fn combine(a: &Envelope, b: &Envelope, op: Op) -> Envelope {
    assert_eq!(
        a.sense, b.sense,
        "cannot combine envelopes of different sense"
    );
    let sense = a.sense;
    // an undefined argument is -inf for upper envelopes and +inf for lower
    let absorbing = matches!(
        (sense, op),
        (Sense::Upper, Op::Min) | (Sense::Lower, Op::Max)
    );
    let sign = match op {
        Op::Max => 1.0,
        Op::Min => -1.0,
    };

    let mut xs: Vec<f64> = Vec::with_capacity(2 * (a.pieces.len() + b.pieces.len()));
    for p in a.pieces.iter().chain(&b.pieces) {
        xs.push(p.x0);
        xs.push(p.x1);
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();

    // pieces for each open elementary interval (xs[j], xs[j+1])
    let mut spans: Vec<(usize, usize)> = Vec::with_capacity(xs.len());
    let mut body: Vec<Piece> = Vec::with_capacity(xs.len() + 4);
    let (mut ia, mut ib) = (0usize, 0usize);
    for w in xs.windows(2) {
        let (xl, xr) = (w[0], w[1]);
        let start = body.len();
        let pa = a.covering(&mut ia, xl, xr);
        let pb = b.covering(&mut ib, xl, xr);
        match (pa, pb) {
            (Some(pa), Some(pb)) => {
                let dl = sign * (pa.value(xl) - pb.value(xl));
                let dr = sign * (pa.value(xr) - pb.value(xr));
                let sl = signum_tol(dl, tie_tol(pa.value(xl), pb.value(xl)));
                let sr = signum_tol(dr, tie_tol(pa.value(xr), pb.value(xr)));
                let pick = |p: Piece, x0: f64, x1: f64| Piece {
                    x0,
                    x1,
                    y0: p.value(x0),
                    slope: p.slope,
                    source: p.source,
                };
                if sl == 0 && sr == 0 {
                    let w = if pa.source <= pb.source { pa } else { pb };
                    body.push(pick(w, xl, xr));
                } else if sl >= 0 && sr >= 0 {
                    body.push(pick(pa, xl, xr));
                } else if sl <= 0 && sr <= 0 {
                    body.push(pick(pb, xl, xr));
                } else {
                    let xc = (xl + (xr - xl) * dl / (dl - dr)).clamp(xl, xr);
                    let (first, second) = if sl > 0 { (pa, pb) } else { (pb, pa) };
                    if xc > xl {
                        body.push(pick(first, xl, xc));
                    }
                    if xc < xr {
                        body.push(pick(second, xc, xr));
                    }
                }
            }
            (Some(p), None) | (None, Some(p)) if !absorbing => body.push(Piece {
                x0: xl,
                x1: xr,
                y0: p.value(xl),
                slope: p.slope,
                source: p.source,
            }),
            _ => {}
        }
        spans.push((start, body.len()));
    }

    let better = |u: f64, v: f64| match sense {
        Sense::Upper => u > v + tie_tol(u, v),
        Sense::Lower => u < v - tie_tol(u, v),
    };

    let mut out: Vec<Piece> = Vec::with_capacity(body.len() + 4);
    for (j, &x) in xs.iter().enumerate() {
        let va = a.value_at(x);
        let vb = b.value_at(x);
        let point = match (va, vb) {
            (Some(u), Some(v)) => {
                let su = a.source_at(x);
                let sv = b.source_at(x);
                let d = sign * (u - v);
                if d.abs() <= tie_tol(u, v) {
                    Some(if su <= sv { (u, su) } else { (v, sv) })
                } else if d > 0.0 {
                    Some((u, su))
                } else {
                    Some((v, sv))
                }
            }
            (Some(u), None) if !absorbing => Some((u, a.source_at(x))),
            (None, Some(v)) if !absorbing => Some((v, b.source_at(x))),
            _ => None,
        };
        let left = if j > 0 {
            let (s, e) = spans[j - 1];
            (e > s).then(|| body[e - 1].y1())
        } else {
            None
        };
        let right = spans.get(j).and_then(|&(s, e)| (e > s).then(|| body[s].y0));
        if let Some((v, src)) = point {
            let needed = match (left, right) {
                (None, None) => true,
                (Some(l), None) => better(v, l),
                (None, Some(r)) => better(v, r),
                (Some(l), Some(r)) => better(v, l) && better(v, r),
            };
            if needed {
                out.push(Piece {
                    x0: x,
                    x1: x,
                    y0: v,
                    slope: 0.0,
                    source: src,
                });
            }
        }
        if let Some(&(s, e)) = spans.get(j) {
            out.extend_from_slice(&body[s..e]);
        }
    }
    Envelope {
        pieces: simplify(out),
        sense,
    }
}

impl Envelope {
    fn source_at(&self, x: f64) -> usize {
        let start = self.pieces.partition_point(|p| p.x1 < x);
        let mut best: Option<(f64, usize)> = None;
        for p in &self.pieces[start..] {
            if p.x0 > x {
                break;
            }
            let v = p.value(x);
            best = match best {
                None => Some((v, p.source)),
                Some((bv, bs)) => {
                    let d = match self.sense {
                        Sense::Upper => v - bv,
                        Sense::Lower => bv - v,
                    };
                    if d > tie_tol(v, bv) || (d.abs() <= tie_tol(v, bv) && p.source < bs) {
                        Some((v, p.source))
                    } else {
                        Some((bv, bs))
                    }
                }
            };
        }
        best.map_or(usize::MAX, |b| b.1)
    }
}

#[inline]
fn signum_tol(d: f64, tol: f64) -> i8 {
    if d > tol {
        1
    } else if d < -tol {
        -1
    } else {
        0
    }
}

// Merges touching collinear pieces from the same source.
fn simplify(pieces: Vec<Piece>) -> Vec<Piece> {
    let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        if let Some(q) = out.last_mut() {
            if !q.is_point()
                && !p.is_point()
                && q.source == p.source
                && q.slope == p.slope
                && q.x1 == p.x0
                && (q.y1() - p.y0).abs() <= tie_tol(q.y1(), p.y0)
            {
                q.x1 = p.x1;
                continue;
            }
        }
        out.push(p);
    }
    out
}

/// Balanced pairwise reduction of `envs` under `op`.
pub fn combine_all(mut envs: Vec<Envelope>, op: Op, sense: Sense) -> Envelope {
    if envs.is_empty() {
        return Envelope::empty(sense);
    }
    while envs.len() > 1 {
        let mut next = Vec::with_capacity(envs.len().div_ceil(2));
        let mut it = envs.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(combine(&a, &b, op)),
                None => next.push(a),
            }
        }
        envs = next;
    }
    envs.pop().unwrap()
}

/// Pointwise maximum of (possibly clipped) profiles; defined wherever at
/// least one profile is.
pub fn upper_envelope(profiles: &[DistanceProfile]) -> Envelope {
    let envs = profiles
        .iter()
        .map(|p| Envelope::from_profile(p, Sense::Upper))
        .collect();
    combine_all(envs, Op::Max, Sense::Upper)
}

/// Pointwise minimum of upper envelopes; undefined wherever any input is.
pub fn lower_envelope(envelopes: &[Envelope]) -> Envelope {
    assert!(envelopes.iter().all(|e| e.sense == Sense::Upper));
    combine_all(envelopes.to_vec(), Op::Min, Sense::Upper)
}

/// Pointwise minimum of super-level clipped profiles (nearest usable point);
/// defined wherever at least one profile is.
pub fn nearest_envelope(profiles: &[DistanceProfile]) -> Envelope {
    let envs = profiles
        .iter()
        .map(|p| Envelope::from_profile(p, Sense::Lower))
        .collect();
    combine_all(envs, Op::Min, Sense::Lower)
}

/// Pointwise maximum of lower-sense envelopes; undefined wherever any input is.
pub fn farthest_of(envelopes: Vec<Envelope>) -> Envelope {
    assert!(envelopes.iter().all(|e| e.sense == Sense::Lower));
    combine_all(envelopes, Op::Max, Sense::Lower)
}

/// Global maximum or minimum over the defined domain, ties toward smaller x.
pub fn extremum(e: &Envelope, mode: Mode) -> Option<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for p in &e.pieces {
        for (x, v) in [(p.x0, p.y0), (p.x1, p.y1())] {
            let replace = match best {
                None => true,
                Some((bx, bv)) => {
                    let tol = tie_tol(v, bv);
                    let gain = match mode {
                        Mode::Max => v - bv,
                        Mode::Min => bv - v,
                    };
                    gain > tol || (gain.abs() <= tol && x < bx && gain >= 0.0)
                }
            };
            if replace {
                best = Some((x, v));
            }
        }
    }
    best
}

/// Constant-space upper envelope of unclipped profiles on a fixed segment:
/// `max(cx - min sx, max sx - cx, max dy)`, at most three segments.
#[derive(Debug, Clone, Copy)]
pub struct IncrementalUpper {
    lo: f64,
    hi: f64,
    min_sx: Option<(f64, usize)>,
    max_sx: Option<(f64, usize)>,
    max_dy: Option<(f64, usize)>,
}

impl IncrementalUpper {
    pub fn new(c: &CenterSegment) -> Self {
        IncrementalUpper {
            lo: c.lo,
            hi: c.hi,
            min_sx: None,
            max_sx: None,
            max_dy: None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.min_sx.is_none()
    }

    pub fn insert(&mut self, sx: f64, dy: f64, source: usize) {
        let better = |cur: Option<(f64, usize)>, v: f64, lower: bool| match cur {
            None => true,
            Some((c, s)) => {
                if lower {
                    v < c || (v == c && source < s)
                } else {
                    v > c || (v == c && source < s)
                }
            }
        };
        if better(self.min_sx, sx, true) {
            self.min_sx = Some((sx, source));
        }
        if better(self.max_sx, sx, false) {
            self.max_sx = Some((sx, source));
        }
        if better(self.max_dy, dy, false) {
            self.max_dy = Some((dy, source));
        }
    }

    pub fn insert_profile(&mut self, p: &DistanceProfile) {
        self.insert(p.sx, p.dy, p.source);
    }

    pub fn value(&self, cx: f64) -> Option<f64> {
        let (a, _) = self.min_sx?;
        let (b, _) = self.max_sx?;
        let (c, _) = self.max_dy?;
        Some((cx - a).max(b - cx).max(c))
    }

    pub fn to_envelope(&self) -> Envelope {
        let mut pieces = Vec::with_capacity(3);
        if let (Some(a), Some(b), Some(c)) = (self.min_sx, self.max_sx, self.max_dy) {
            three_line_pieces(self.lo, self.hi, a, b, c, &mut pieces);
        }
        Envelope {
            pieces,
            sense: Sense::Upper,
        }
    }
}

// Pieces of max(x - a, b - x, c) on [lo, hi]; a <= b.
fn three_line_pieces(
    lo: f64,
    hi: f64,
    (a, sa): (f64, usize),
    (b, sb): (f64, usize),
    (c, sc): (f64, usize),
    out: &mut Vec<Piece>,
) {
    let value = |x: f64| (x - a).max(b - x).max(c);
    if lo >= hi {
        out.push(Piece {
            x0: lo,
            x1: lo,
            y0: value(lo),
            slope: 0.0,
            source: if c >= (lo - a).max(b - lo) {
                sc
            } else if b - lo >= lo - a {
                sb
            } else {
                sa
            },
        });
        return;
    }
    // decreasing part ends where b - x meets max(c, x - a)
    let (k1, k2) = if c >= 0.5 * (b - a) {
        (b - c, a + c)
    } else {
        let m = 0.5 * (a + b);
        (m, m)
    };
    let mut push = |x0: f64, x1: f64, slope: f64, source: usize| {
        let x0 = x0.max(lo);
        let x1 = x1.min(hi);
        if x0 < x1 {
            out.push(Piece {
                x0,
                x1,
                y0: value(x0),
                slope,
                source,
            });
        }
    };
    push(lo, k1, -1.0, sb);
    push(k1, k2, 0.0, sc);
    push(k2, hi, 1.0, sa);
}

/// Upper envelope of sub-level clipped profiles on `c`, computed with a
/// sliding window over the sources sorted by `sx`. `items` holds
/// `(sx, dy, source)`; a source is usable at `cx` iff `|cx - sx| <= reach`.
pub fn clipped_upper_envelope(
    items: &mut [(f64, f64, usize)],
    c: &CenterSegment,
    reach: f64,
) -> Envelope {
    items.sort_by(|u, v| u.0.total_cmp(&v.0).then(u.2.cmp(&v.2)));
    let mut pieces = Vec::new();
    if c.is_point() {
        let x = c.lo;
        // (min sx, max sx, max dy), each with its source
        type Extremes = ((f64, usize), (f64, usize), (f64, usize));
        let mut acc: Option<Extremes> = None;
        for &(sx, dy, s) in items.iter() {
            if (x - sx).abs() > reach || dy > reach {
                continue;
            }
            acc = Some(match acc {
                None => ((sx, s), (sx, s), (dy, s)),
                Some((a, b, cc)) => (
                    if sx < a.0 { (sx, s) } else { a },
                    if sx > b.0 { (sx, s) } else { b },
                    if dy > cc.0 { (dy, s) } else { cc },
                ),
            });
        }
        if let Some((a, b, cc)) = acc {
            three_line_pieces(x, x, a, b, cc, &mut pieces);
        }
        return Envelope {
            pieces,
            sense: Sense::Upper,
        };
    }

    let mut xs: Vec<f64> = Vec::with_capacity(2 * items.len() + 2);
    xs.push(c.lo);
    xs.push(c.hi);
    for &(sx, _, _) in items.iter() {
        for x in [sx - reach, sx + reach] {
            if x > c.lo && x < c.hi {
                xs.push(x);
            }
        }
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();

    let n = items.len();
    let (mut head, mut tail) = (0usize, 0usize);
    // indices into items with decreasing dy
    let mut deque = std::collections::VecDeque::<usize>::new();
    for w in xs.windows(2) {
        let (xl, xr) = (w[0], w[1]);
        let m = 0.5 * (xl + xr);
        while tail < n && items[tail].0 - reach <= m {
            let dy = items[tail].1;
            while deque.back().is_some_and(|&j| items[j].1 <= dy) {
                deque.pop_back();
            }
            deque.push_back(tail);
            tail += 1;
        }
        while head < tail && items[head].0 + reach < m {
            head += 1;
        }
        while deque.front().is_some_and(|&j| j < head) {
            deque.pop_front();
        }
        if head == tail {
            continue;
        }
        let a = (items[head].0, items[head].2);
        let b = (items[tail - 1].0, items[tail - 1].2);
        let j = *deque.front().unwrap();
        let cc = (items[j].1, items[j].2);
        three_line_pieces(xl, xr, a, b, cc, &mut pieces);
    }
    Envelope {
        pieces: simplify(pieces),
        sense: Sense::Upper,
    }
}
