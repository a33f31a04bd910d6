//! Timing runs for the empirical scaling check.

use std::time::Instant;

use annulus_core::{cseta, csra, cssa, PointSet};

use crate::gen::{generate, Dist};
use crate::ShapeArg;

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub shape: &'static str,
    pub n: usize,
    pub k: u32,
    pub median_seconds: f64,
}

pub fn solve_once(shape: ShapeArg, ps: &PointSet) -> f64 {
    match shape {
        ShapeArg::Square => cssa::solve_cssa(ps).width,
        ShapeArg::Rect => csra::solve_csra(ps).width,
        ShapeArg::Tri => cseta::solve_cseta(ps).width,
        ShapeArg::All => unreachable!("bench runs one shape at a time"),
    }
}

/// Median wall time over `reps` uniform instances (seeds `seed..seed+reps`)
/// per size.
pub fn run(
    shape: ShapeArg,
    sizes: &[usize],
    k: u32,
    reps: usize,
    seed: u64,
) -> anyhow::Result<Vec<Row>> {
    anyhow::ensure!(reps > 0, "reps must be positive");
    let mut rows = Vec::new();
    for &n in sizes {
        let mut times = Vec::with_capacity(reps);
        for r in 0..reps as u64 {
            let ps = generate(n, k, seed + r, Dist::Uniform)?;
            let t = Instant::now();
            std::hint::black_box(solve_once(shape, &ps));
            times.push(t.elapsed().as_secs_f64());
        }
        times.sort_by(f64::total_cmp);
        let m = times.len();
        let median = if m % 2 == 1 {
            times[m / 2]
        } else {
            0.5 * (times[m / 2 - 1] + times[m / 2])
        };
        rows.push(Row {
            shape: shape.name(),
            n,
            k,
            median_seconds: median,
        });
    }
    Ok(rows)
}

/// Least-squares slope of `ln t` against `ln n`.
pub fn loglog_slope(rows: &[Row]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.median_seconds > 0.0)
        .map(|r| ((r.n as f64).ln(), r.median_seconds.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn csv(rows: &[Row]) -> String {
    let mut out = String::from("shape,n,k,median_seconds\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{:.6}\n",
            r.shape, r.n, r.k, r.median_seconds
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_cubic() {
        let rows: Vec<Row> = [100, 200, 400]
            .iter()
            .map(|&n| Row {
                shape: "square",
                n,
                k: 8,
                median_seconds: 1e-9 * (n as f64).powi(3),
            })
            .collect();
        assert!((loglog_slope(&rows).unwrap() - 3.0).abs() < 1e-9);
        assert!(loglog_slope(&rows[..1]).is_none());
    }

    #[test]
    fn rows_per_size() {
        let rows = run(ShapeArg::Square, &[10, 20, 30], 3, 1, 0).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(csv(&rows).lines().count(), 4);
        assert!(run(ShapeArg::Square, &[10], 3, 0, 0).is_err());
    }
}
