mod common;

use annulus_core::cseta::{mu, solve_cseta};
use annulus_core::csra::solve_csra;
use annulus_core::cssa::solve_cssa;
use annulus_core::geom::transform;
use annulus_core::oracle::{
    cseta_candidates, interior_has_witness_color, perturbation_check, CandidateSet,
};
use annulus_core::{
    Annulus, AnnulusSolution, ColoredPoint, Config, Point, PointSet, Shape, Transform, TriAnnulus,
    TriOrientation,
};
use common::{dump, instance, DISTS};
use proptest::prelude::*;

type Solver = fn(&PointSet) -> AnnulusSolution;

const SOLVERS: [(&str, Solver); 3] = [
    ("square", solve_cssa),
    ("rect", solve_csra),
    ("tri", solve_cseta),
];

fn small_instance() -> impl Strategy<Value = PointSet> {
    (any::<u64>(), 4..14usize, 2..6u32, 0..3usize)
        .prop_map(|(seed, n, k, d)| instance(seed, n.max(k as usize), k, DISTS[d]))
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

fn mirror_x(ps: &PointSet) -> PointSet {
    ps.map_points(|p| Point::new(-p.x, p.y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn translation_and_scale_equivariance(ps in small_instance(), dx in -100.0..100.0f64, dy in -100.0..100.0f64, s in prop::sample::select(vec![0.25, 0.5, 2.0, 4.0, 8.0])) {
        let shifted = ps.map_points(|p| Point::new(p.x + dx, p.y + dy));
        let scaled = ps.map_points(|p| Point::new(p.x * s, p.y * s));
        for (name, solve) in SOLVERS {
            let w = solve(&ps).width;
            let wt = solve(&shifted).width;
            // translation rounds coordinates, so compare at the input's scale
            prop_assert!((w - wt).abs() <= 1e-9 * (1.0 + dx.abs() + dy.abs()), "{name}: {w} vs {wt} translated\n{}", dump(&ps));
            prop_assert!(same(s * w, solve(&scaled).width), "{name}: scale {s}\n{}", dump(&ps));
        }
    }

    #[test]
    fn square_and_rect_invariant_under_symmetries(ps in small_instance()) {
        for (name, solve) in &SOLVERS[..2] {
            let w = solve(&ps).width;
            for t in [Transform::Rotate90, Transform::Rotate180, Transform::Rotate270, Transform::ReflectY] {
                let wt = solve(&transform(&ps, t)).width;
                prop_assert!(same(w, wt), "{name} under {t:?}: {w} vs {wt}\n{}", dump(&ps));
            }
            prop_assert!(same(w, solve(&mirror_x(&ps)).width), "{name} mirrored\n{}", dump(&ps));
        }
    }

    #[test]
    fn tri_invariant_under_its_symmetries(ps in small_instance()) {
        let w = solve_cseta(&ps).width;
        for t in [Transform::Rotate180, Transform::ReflectY] {
            prop_assert!(same(w, solve_cseta(&transform(&ps, t)).width), "{t:?}\n{}", dump(&ps));
        }
        prop_assert!(same(w, solve_cseta(&mirror_x(&ps)).width), "mirrored\n{}", dump(&ps));
    }

    #[test]
    fn adding_a_point_never_widens(ps in small_instance(), x in 0.0..20.0f64, y in 0.0..20.0f64, c in 1..6u32) {
        let extra = ColoredPoint::new((x * 2.0).round() / 2.0, (y * 2.0).round() / 2.0, 1 + (c - 1) % ps.k());
        let more = ps.with_point(extra).unwrap();
        for (name, solve) in SOLVERS {
            let (a, b) = (solve(&ps).width, solve(&more).width);
            prop_assert!(b <= a + 1e-9, "{name}: {a} -> {b} after adding {extra}\n{}", dump(&ps));
        }
    }

    #[test]
    fn solutions_are_well_formed(ps in small_instance()) {
        for (name, solve) in SOLVERS {
            let sol = solve(&ps);
            prop_assert!(sol.width >= 0.0);
            prop_assert!(same(sol.width, sol.annulus.width()));
            prop_assert!(sol.is_color_spanning(&ps, 1e-9), "{name} not spanning\n{}", dump(&ps));
            prop_assert!(!sol.witnesses.is_empty(), "{name} no witnesses");
            prop_assert!(!interior_has_witness_color(&sol, &ps, 1e-9), "{name}: witness color inside\n{}", dump(&ps));
            if sol.width > 1e-9 {
                let on = |side: fn((bool, bool)) -> bool| sol.witnesses.iter().any(|w| side(sol.annulus.on_boundary(w.point(), 1e-9)));
                prop_assert!(on(|b| b.0) && on(|b| b.1), "{name}: a boundary has no defining point\n{}", dump(&ps));
            }
            match sol.annulus {
                Annulus::Square(a) => prop_assert!(a.r_in >= -1e-12 && a.r_in <= a.r_out),
                Annulus::Rect(r) => {
                    let (a, b, c, d) = r.inner_rect();
                    if !r.inner_is_empty() {
                        prop_assert!(same(a + b, r.x1 + r.x2) && same(c + d, r.y1 + r.y2), "{name}: not co-centric");
                    }
                }
                Annulus::Tri(t) => {
                    let (o, i) = (t.outer_centroid(), t.inner_centroid());
                    prop_assert!(same(o.x, i.x) && same(o.y, i.y), "tri: not co-centric");
                    if 3.0 * t.width <= t.height() {
                        let gap = (t.outer_vertices()[0].y - t.inner_vertices()[0].y).abs();
                        prop_assert!(same(gap, 2.0 * t.width), "tri: apex gap {gap} for width {}", t.width);
                    }
                    let want = match t.orientation {
                        TriOrientation::ApexUp => Shape::TriUp,
                        TriOrientation::ApexDown => Shape::TriDown,
                    };
                    prop_assert_eq!(sol.shape, want);
                }
            }
        }
    }

    #[test]
    fn no_nearby_shape_does_better(ps in small_instance()) {
        for (name, solve) in SOLVERS {
            let sol = solve(&ps);
            prop_assert!(perturbation_check(&sol, &ps, 100, 0.05), "{name}\n{}", dump(&ps));
        }
    }

    #[test]
    fn apex_down_is_mirrored_apex_up(ps in small_instance()) {
        let best = |ps: &PointSet, o: TriOrientation| {
            let mut set = CandidateSet::recording();
            cseta_candidates(ps, &Config::default(), &mut set);
            set.candidates
                .iter()
                .filter(|c| matches!(c.annulus, Annulus::Tri(t) if t.orientation == o))
                .map(|c| c.annulus.width())
                .fold(f64::INFINITY, f64::min)
        };
        let flipped = transform(&ps, Transform::ReflectY);
        prop_assert!(same(best(&ps, TriOrientation::ApexDown), best(&flipped, TriOrientation::ApexUp)));
        prop_assert!(same(best(&ps, TriOrientation::ApexUp), best(&flipped, TriOrientation::ApexDown)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn mu_matches_containment(
        vx in -10.0..10.0f64,
        vy in -10.0..10.0f64,
        h in 0.0..20.0f64,
        w in 0.0..8.0f64,
        sx in -25.0..25.0f64,
        sy in -35.0..15.0f64,
    ) {
        let tri = TriAnnulus { apex: Point::new(vx, vy), base_y: vy - h, width: w, orientation: TriOrientation::ApexUp };
        let s = ColoredPoint::new(sx, sy, 1);
        match mu(tri.apex, tri.base_y, &s) {
            Ok(m) => prop_assert_eq!(m <= w, tri.contains(s.point(), 0.0)),
            Err(_) => prop_assert!(!tri.in_outer(s.point(), 0.0)),
        }
    }
}

#[test]
fn thread_count_does_not_change_solutions() {
    use annulus_core::cseta::solve_cseta_with;
    use annulus_core::csra::solve_csra_with;
    use annulus_core::cssa::solve_cssa_with;
    let with: [fn(&PointSet, &Config) -> AnnulusSolution; 3] =
        [solve_cssa_with, solve_csra_with, solve_cseta_with];
    for seed in 0..60u64 {
        let ps = instance(
            seed,
            10 + seed as usize % 20,
            2 + seed as u32 % 5,
            DISTS[seed as usize % 3],
        );
        for solve in with {
            let one = solve(&ps, &Config::default());
            for threads in [2, 3, 5] {
                assert_eq!(
                    one,
                    solve(&ps, &Config::default().with_threads(threads)),
                    "seed {seed}\n{}",
                    dump(&ps)
                );
            }
        }
    }
}
