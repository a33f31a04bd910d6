//! Seeded random instances.

use std::str::FromStr;

use annulus_core::{ColoredPoint, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dist {
    /// Uniform in `[0, 1000]^2`.
    Uniform,
    /// One Gaussian blob per color class.
    Clustered,
    /// Points on a line, jittered by at most 1e-6.
    Collinear,
}

impl FromStr for Dist {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Dist::Uniform),
            "clustered" => Ok(Dist::Clustered),
            "collinear" => Ok(Dist::Collinear),
            _ => Err(format!(
                "unknown distribution `{s}` (uniform, clustered, collinear)"
            )),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("need n >= k to place every color (n={n}, k={k})")]
    TooFewPoints { n: usize, k: u32 },
    #[error("k must be at least 1")]
    NoColors,
}

/// The first `k` points take colors `1..=k` in order; the rest are drawn
/// uniformly.
pub fn generate(n: usize, k: u32, seed: u64, dist: Dist) -> Result<PointSet, GenError> {
    if k == 0 {
        return Err(GenError::NoColors);
    }
    if n < k as usize {
        return Err(GenError::TooFewPoints { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blobs: Vec<(f64, f64)> = (0..k)
        .map(|_| (rng.gen_range(100.0..900.0), rng.gen_range(100.0..900.0)))
        .collect();
    let spread = Normal::new(0.0, 40.0).expect("positive deviation");
    let slope = rng.gen_range(-2.0..2.0);
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let color = if i < k as usize {
            i as u32 + 1
        } else {
            rng.gen_range(1..=k)
        };
        let (x, y) = match dist {
            Dist::Uniform => (rng.gen_range(0.0..=1000.0), rng.gen_range(0.0..=1000.0)),
            Dist::Clustered => {
                let (cx, cy) = blobs[color as usize - 1];
                (cx + spread.sample(&mut rng), cy + spread.sample(&mut rng))
            }
            Dist::Collinear => {
                let t: f64 = rng.gen_range(0.0..=1000.0);
                (
                    t + rng.gen_range(-1e-6..=1e-6),
                    500.0 + slope * (t - 500.0) + rng.gen_range(-1e-6..=1e-6),
                )
            }
        };
        points.push(ColoredPoint::new(x, y, color));
    }
    Ok(PointSet::new(points, k).expect("every color is placed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::serialize;

    #[test]
    fn deterministic() {
        for dist in [Dist::Uniform, Dist::Clustered, Dist::Collinear] {
            let a = serialize(&generate(10, 3, 7, dist).unwrap());
            let b = serialize(&generate(10, 3, 7, dist).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn colors_and_sizes() {
        let ps = generate(5, 5, 1, Dist::Uniform).unwrap();
        let mut colors: Vec<u32> = ps.points().iter().map(|p| p.color).collect();
        colors.sort();
        assert_eq!(colors, vec![1, 2, 3, 4, 5]);
        assert_eq!(
            generate(3, 5, 1, Dist::Uniform).unwrap_err(),
            GenError::TooFewPoints { n: 3, k: 5 }
        );
    }

    #[test]
    fn collinear_jitter_is_tiny() {
        let ps = generate(50, 4, 3, Dist::Collinear).unwrap();
        let pts = ps.points();
        let a = *pts.iter().min_by(|p, q| p.x.total_cmp(&q.x)).unwrap();
        let b = *pts.iter().max_by(|p, q| p.x.total_cmp(&q.x)).unwrap();
        let (dx, dy) = (b.x - a.x, b.y - a.y);
        let len = (dx * dx + dy * dy).sqrt();
        for p in pts {
            let off = ((p.x - a.x) * dy - (p.y - a.y) * dx).abs() / len;
            assert!(off < 1e-5, "{off}");
        }
    }
}
