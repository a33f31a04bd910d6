use annulus_core::cssa::pair_candidate;
use annulus_core::envelope::{
    clip_sublevel, clip_superlevel, farthest_of, lower_envelope, nearest_envelope, profile,
    upper_envelope, CenterSegment, DistanceProfile, IncrementalUpper,
};
use annulus_core::ColoredPoint;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = f64> {
    -50.0..50.0f64
}

/// A pair with `p` above `q` close enough in x to share a square, plus two
/// more points inside the pair's bounding rectangle given as fractions.
fn pair_and_two() -> impl Strategy<Value = (ColoredPoint, ColoredPoint, [(f64, f64); 2])> {
    (
        coord(),
        coord(),
        0.5..30.0f64,
        -1.0..1.0f64,
        [(0.0..1.0f64, 0.0..1.0f64), (0.0..1.0f64, 0.0..1.0f64)],
    )
        .prop_map(|(x, y, delta, t, rs)| {
            let q = ColoredPoint::new(x, y, 1);
            let p = ColoredPoint::new(x + t * delta, y + delta, 2);
            (p, q, rs)
        })
}

fn samples(c: &CenterSegment, m: usize) -> Vec<f64> {
    (0..m)
        .map(|i| c.lo + (c.hi - c.lo) * (i as f64 + 0.5) / m as f64)
        .collect()
}

fn direct_max(ps: &[DistanceProfile], x: f64) -> Option<f64> {
    ps.iter()
        .filter(|p| p.is_defined_at(x))
        .map(|p| p.value(x))
        .reduce(f64::max)
}

fn direct_min(ps: &[DistanceProfile], x: f64) -> Option<f64> {
    ps.iter()
        .filter(|p| p.is_defined_at(x))
        .map(|p| p.value(x))
        .reduce(f64::min)
}

fn close(a: Option<f64>, b: Option<f64>) -> bool {
    match (a, b) {
        (Some(a), Some(b)) => (a - b).abs() <= 1e-9 * (1.0 + a.abs()),
        (None, None) => true,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn two_profiles_in_bounds_cross_once((p, q, rs) in pair_and_two()) {
        let cand = pair_candidate(&p, &q).unwrap();
        let (x1, x2, y1, y2) = cand.bounds;
        let pts: Vec<ColoredPoint> =
            rs.iter().map(|&(u, v)| ColoredPoint::new(x1 + u * (x2 - x1), y1 + v * (y2 - y1), 3)).collect();
        let profs: Vec<DistanceProfile> =
            pts.iter().enumerate().map(|(i, s)| profile(i, s, &cand.segment)).collect();
        let env = upper_envelope(&profs);
        prop_assert!(env.source_runs().len() <= 2, "runs {:?}", env.source_runs());
        let mut changes = 0;
        let mut last = 0.0f64;
        for x in samples(&cand.segment, 400) {
            let d = profs[0].value(x) - profs[1].value(x);
            if d.abs() > 1e-9 {
                if last != 0.0 && d.signum() != last {
                    changes += 1;
                }
                last = d.signum();
            }
        }
        prop_assert!(changes <= 1);
    }

    #[test]
    fn incremental_upper_has_three_segments(
        pts in prop::collection::vec((coord(), coord()), 1..40),
        cy in coord(),
        lo in coord(),
        len in 0.1..60.0f64,
    ) {
        let c = CenterSegment::new(cy, lo, lo + len);
        let mut inc = IncrementalUpper::new(&c);
        let mut profs = Vec::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            let pr = profile(i, &ColoredPoint::new(x, y, 1), &c);
            inc.insert_profile(&pr);
            profs.push(pr);
            let env = inc.to_envelope();
            prop_assert!(env.segment_count() <= 3, "{} segments", env.segment_count());
            prop_assert!(upper_envelope(&profs).segment_count() <= 3);
        }
        for x in samples(&c, 100) {
            prop_assert!(close(inc.value(x), direct_max(&profs, x)));
        }
    }

    #[test]
    fn lower_envelope_color_runs(
        pts in prop::collection::vec((coord(), coord(), 0..6usize), 6..60),
        cy in coord(),
        lo in coord(),
        len in 0.1..60.0f64,
    ) {
        let c = CenterSegment::new(cy, lo, lo + len);
        let mut per_color: Vec<Vec<DistanceProfile>> = vec![Vec::new(); 6];
        for (i, &(x, y, col)) in pts.iter().enumerate() {
            per_color[col].push(profile(i, &ColoredPoint::new(x, y, col as u32 + 1), &c));
        }
        let colors: Vec<usize> = (0..6).filter(|&i| !per_color[i].is_empty()).collect();
        let color_of: Vec<usize> = pts.iter().map(|p| p.2).collect();
        let gammas: Vec<_> = colors.iter().map(|&i| upper_envelope(&per_color[i])).collect();
        let m = gammas.len();
        let lower = lower_envelope(&gammas).map_sources(|s| color_of[s]);
        prop_assert!(lower.source_runs().len() < 2 * m, "runs {:?} for {} colors", lower.source_runs(), m);
    }

    #[test]
    fn envelopes_agree_with_direct_evaluation(
        pts in prop::collection::vec((coord(), coord(), 0..4usize), 4..30),
        cy in coord(),
        lo in coord(),
        len in 0.1..60.0f64,
        cap in 1.0..60.0f64,
    ) {
        let c = CenterSegment::new(cy, lo, lo + len);
        let color_of: Vec<usize> = pts.iter().map(|p| p.2).collect();
        let base: Vec<DistanceProfile> = pts
            .iter()
            .enumerate()
            .map(|(i, &(x, y, col))| profile(i, &ColoredPoint::new(x, y, col as u32 + 1), &c))
            .collect();
        let sub: Vec<_> = base.iter().map(|p| clip_sublevel(p, cap, 0.0)).collect();
        let sup: Vec<_> = base.iter().map(|p| clip_superlevel(p, cap, 0.0)).collect();
        let by_color = |ps: &[DistanceProfile]| -> Vec<Vec<DistanceProfile>> {
            (0..4).map(|col| ps.iter().filter(|p| color_of[p.source] == col).cloned().collect()).collect()
        };
        let sub_c = by_color(&sub);
        let sup_c = by_color(&sup);

        let up_all = upper_envelope(&base);
        let up_sub = upper_envelope(&sub);
        let near = nearest_envelope(&sup);
        let gammas: Vec<_> = sub_c.iter().map(|g| upper_envelope(g)).collect();
        let low = lower_envelope(&gammas);
        let nears: Vec<_> = sup_c.iter().map(|g| nearest_envelope(g)).collect();
        let far = farthest_of(nears);

        for x in samples(&c, 1000) {
            prop_assert!(close(up_all.value_at(x), direct_max(&base, x)), "upper at {}", x);
            prop_assert!(close(up_sub.value_at(x), direct_max(&sub, x)), "clipped upper at {}", x);
            prop_assert!(close(near.value_at(x), direct_min(&sup, x)), "nearest at {}", x);
            let per: Vec<Option<f64>> = sub_c.iter().map(|g| direct_max(g, x)).collect();
            let want = if per.iter().all(Option::is_some) {
                per.iter().flatten().copied().reduce(f64::min)
            } else {
                None
            };
            prop_assert!(close(low.value_at(x), want), "lower at {}", x);
            let per: Vec<Option<f64>> = sup_c.iter().map(|g| direct_min(g, x)).collect();
            let want = if per.iter().all(Option::is_some) {
                per.iter().flatten().copied().reduce(f64::max)
            } else {
                None
            };
            prop_assert!(close(far.value_at(x), want), "farthest at {}", x);
        }
    }
}
