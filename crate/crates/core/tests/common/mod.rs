#![allow(dead_code)]

use annulus_core::{ColoredPoint, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub enum Dist {
    Uniform,
    Clustered,
    Collinear,
}

pub const DISTS: [Dist; 3] = [Dist::Uniform, Dist::Clustered, Dist::Collinear];

/// Random instance with every color present. Coordinates are rounded to a
/// coarse grid for the uniform and clustered cases so that exact ties occur.
pub fn instance(seed: u64, n: usize, k: u32, dist: Dist) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers: Vec<(f64, f64)> = (0..k)
        .map(|_| (rng.gen_range(0.0..20.0), rng.gen_range(0.0..20.0)))
        .collect();
    let (dx, dy) = (rng.gen_range(0.2..1.0), rng.gen_range(-1.0..1.0));
    let pts = (0..n)
        .map(|i| {
            let color = if (i as u32) < k {
                i as u32 + 1
            } else {
                rng.gen_range(1..=k)
            };
            let (x, y) = match dist {
                Dist::Uniform => (
                    rng.gen_range(0..40) as f64 * 0.5,
                    rng.gen_range(0..40) as f64 * 0.5,
                ),
                Dist::Clustered => {
                    let (cx, cy) = centers[rng.gen_range(0..k as usize)];
                    (
                        (cx + rng.gen_range(-2.0f64..2.0)).round(),
                        (cy + rng.gen_range(-2.0f64..2.0)).round(),
                    )
                }
                Dist::Collinear => {
                    let t = rng.gen_range(0.0..20.0);
                    (
                        t * dx + rng.gen_range(-1e-6..1e-6),
                        t * dy + rng.gen_range(-1e-6..1e-6),
                    )
                }
            };
            ColoredPoint::new(x, y, color)
        })
        .collect();
    PointSet::new(pts, k).unwrap()
}

/// Plain-text dump for triage of a failing case.
pub fn dump(ps: &PointSet) -> String {
    let mut s = format!("k={}\n", ps.k());
    for p in ps.points() {
        s.push_str(&format!("{} {} {}\n", p.x, p.y, p.color));
    }
    s
}
