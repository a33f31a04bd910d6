use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point set is empty")]
    Empty,
    #[error("color count k must be at least 1")]
    NoColors,
    #[error("point {index} has color {color}, outside 1..={k}")]
    ColorOutOfRange { index: usize, color: u32, k: u32 },
    #[error("color {0} has no points")]
    MissingColor(u32),
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("point {s} lies outside the wedge or below the base line")]
    OutsideTriangle { s: crate::geom::Point },
}
