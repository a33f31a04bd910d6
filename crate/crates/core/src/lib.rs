//! Minimum-width color-spanning annuli for colored planar point sets.
//!
//! Three annulus shapes are supported: axis-parallel squares ([`cssa`]),
//! axis-parallel rectangles ([`csra`]) and equilateral triangles with a
//! horizontal base ([`cseta`]). Each solver has a brute-force counterpart in
//! [`oracle`] that enumerates the finite families of boundary configurations
//! an optimum must belong to.
//!
//! ```
//! use annulus_core::{ColoredPoint, PointSet, cssa::solve_cssa};
//!
//! let ps = PointSet::new(
//!     vec![
//!         ColoredPoint::new(0.0, 0.0, 1),
//!         ColoredPoint::new(1.0, 1.0, 2),
//!         ColoredPoint::new(2.0, 2.0, 3),
//!     ],
//!     3,
//! )
//! .unwrap();
//! let sol = solve_cssa(&ps);
//! assert!((sol.width - 1.0).abs() < 1e-9);
//! ```

pub mod config;
pub mod cseta;
pub mod csra;
pub mod cssa;
pub mod envelope;
mod error;
pub mod geom;
pub mod oracle;

pub use config::Config;
pub use error::Error;
pub use geom::{
    linf_distance, Annulus, AnnulusSolution, CaseTag, ColoredPoint, Point, PointSet, RectAnnulus,
    Shape, SquareAnnulus, Transform, TriAnnulus, TriOrientation,
};
