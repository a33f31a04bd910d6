mod common;

use annulus_core::cssa::{solve_cssa, solve_cssa_with};
use annulus_core::oracle::oracle_cssa;
use annulus_core::Config;
use common::{dump, instance, DISTS};

#[test]
fn solver_matches_oracle() {
    let mut seed = 0;
    for dist in DISTS {
        for _ in 0..70 {
            seed += 1;
            let n = 4 + (seed as usize * 7) % 17;
            let k = 2 + (seed as u32 * 3) % 5;
            let ps = instance(seed, n.max(k as usize), k, dist);
            let got = solve_cssa_with(&ps, &Config::verifying());
            let want = oracle_cssa(&ps);
            assert!(
                (got.width - want.width).abs() <= 1e-9,
                "seed {seed} {dist:?}: solver {} oracle {}\n{}",
                got.width,
                want.width,
                dump(&ps)
            );
            assert!(
                got.is_color_spanning(&ps, 1e-9),
                "seed {seed}\n{}",
                dump(&ps)
            );
        }
    }
}

#[test]
fn default_config_matches_verifying() {
    for seed in 500..540 {
        let ps = instance(seed, 15, 4, DISTS[seed as usize % 3]);
        let a = solve_cssa(&ps);
        let b = solve_cssa_with(&ps, &Config::verifying());
        assert_eq!(a.width, b.width, "seed {seed}");
    }
}
