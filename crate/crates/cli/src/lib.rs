//! Front end for the annulus solvers: instance files, generators, reports,
//! SVG output and timing.

use std::fmt::Write as _;

use annulus_core::{cseta, csra, cssa, oracle, Annulus, AnnulusSolution, Config, PointSet};

pub mod bench;
pub mod gen;
pub mod instance;
pub mod svg;

/// Largest instance `--verify` will hand to the brute-force oracles.
pub const VERIFY_MAX_N: usize = 25;

/// Absolute tolerance for `--verify` width comparisons.
pub const VERIFY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ShapeArg {
    Square,
    Rect,
    Tri,
    All,
}

impl ShapeArg {
    pub fn name(self) -> &'static str {
        match self {
            ShapeArg::Square => "square",
            ShapeArg::Rect => "rect",
            ShapeArg::Tri => "tri",
            ShapeArg::All => "all",
        }
    }

    pub fn expand(self) -> Vec<ShapeArg> {
        match self {
            ShapeArg::All => vec![ShapeArg::Square, ShapeArg::Rect, ShapeArg::Tri],
            s => vec![s],
        }
    }
}

pub fn solve(shape: ShapeArg, ps: &PointSet, cfg: &Config) -> AnnulusSolution {
    match shape {
        ShapeArg::Square => cssa::solve_cssa_with(ps, cfg),
        ShapeArg::Rect => csra::solve_csra_with(ps, cfg),
        ShapeArg::Tri => cseta::solve_cseta_with(ps, cfg),
        ShapeArg::All => panic!("expand `all` before solving"),
    }
}

pub fn oracle(shape: ShapeArg, ps: &PointSet, cfg: &Config) -> AnnulusSolution {
    match shape {
        ShapeArg::Square => oracle::oracle_cssa_with(ps, cfg),
        ShapeArg::Rect => oracle::oracle_csra_with(ps, cfg),
        ShapeArg::Tri => oracle::oracle_cseta_with(ps, cfg),
        ShapeArg::All => panic!("expand `all` before solving"),
    }
}

/// Solver/oracle disagreement found by `--verify`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub shape: ShapeArg,
    pub solver: f64,
    pub oracle: f64,
}

pub fn verify(
    shape: ShapeArg,
    ps: &PointSet,
    sol: &AnnulusSolution,
    cfg: &Config,
) -> Result<(), Mismatch> {
    let want = oracle(shape, ps, cfg).width;
    if (sol.width - want).abs() > VERIFY_TOL {
        return Err(Mismatch {
            shape,
            solver: sol.width,
            oracle: want,
        });
    }
    Ok(())
}

fn pt(x: f64, y: f64) -> String {
    format!("({x}, {y})")
}

pub fn report(shape: ShapeArg, sol: &AnnulusSolution) -> String {
    let mut out = format!("{}: width {:.12}\n", shape.name(), sol.width);
    let _ = writeln!(out, "  case {} ({})", sol.case_tag, sol.shape);
    let _ = match sol.annulus {
        Annulus::Square(s) => writeln!(
            out,
            "  center {} r_out {} r_in {}",
            pt(s.center.x, s.center.y),
            s.r_out,
            s.r_in
        ),
        Annulus::Rect(r) => writeln!(
            out,
            "  outer [{}, {}] x [{}, {}] inset {}",
            r.x1, r.x2, r.y1, r.y2, r.width
        ),
        Annulus::Tri(t) => writeln!(
            out,
            "  apex {} base y={} height {} orientation {:?}",
            pt(t.apex.x, t.apex.y),
            t.base_y,
            t.height(),
            t.orientation
        ),
    };
    let ws: Vec<String> = sol
        .witnesses
        .iter()
        .map(|w| format!("{} c{}", pt(w.x, w.y), w.color))
        .collect();
    let _ = writeln!(out, "  witnesses {}", ws.join(", "));
    out
}

/// `Config` for the CLI: `ANNULUS_EPS` overrides the tolerance.
pub fn config_from_env(threads: usize) -> anyhow::Result<Config> {
    let mut cfg = Config::default().with_threads(threads);
    if let Ok(v) = std::env::var("ANNULUS_EPS") {
        let eps: f64 = v
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("ANNULUS_EPS must be a number, got `{v}`"))?;
        anyhow::ensure!(
            eps.is_finite() && eps >= 0.0,
            "ANNULUS_EPS must be finite and non-negative"
        );
        cfg = cfg.with_eps(eps);
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use annulus_core::ColoredPoint;

    #[test]
    fn report_width_format() {
        let ps = PointSet::new(
            vec![
                ColoredPoint::new(0.0, 0.0, 1),
                ColoredPoint::new(2.0, 0.0, 2),
                ColoredPoint::new(0.0, 2.0, 3),
                ColoredPoint::new(2.0, 2.0, 4),
            ],
            4,
        )
        .unwrap();
        let cfg = Config::default();
        let sol = solve(ShapeArg::Square, &ps, &cfg);
        assert!(report(ShapeArg::Square, &sol).starts_with("square: width 0.000000000000\n"));
        assert!(verify(ShapeArg::Square, &ps, &sol, &cfg).is_ok());
    }
}
