//! Graded homotopy strings and bands of a skew-gentle algebra, and the graded
//! curves on its orbifold dissection that they correspond to.

mod curve;
mod enumerate;
mod word;

use thiserror::Error;

pub use curve::{
    curve_segments, curve_to_word, equivalent, reduce_curve, word_to_curve, CurveEnd, CurveKind, EndKind,
    GradedCurve, Segment,
};
pub use enumerate::{enumerate_bands, enumerate_strings, homotopy_letters};
pub use word::{
    classify_symmetry, grading_from, turning_points, validate_word, HomotopyWord, Letter, WordIssue, WordKind,
    WordReport, WordSymmetry,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("invalid word: {0}")]
    Invalid(String),
    #[error("invalid curve: {0}")]
    Curve(String),
    #[error("the crossings fit {0} different walks; give the segments explicitly")]
    Ambiguous(usize),
    #[error("the curve is contractible")]
    Contractible,
    #[error("invalid curve document: {0}")]
    Schema(String),
}

/// Equality of graded words up to inversion, and up to rotation for bands.
pub fn same_word(a: &HomotopyWord, b: &HomotopyWord) -> bool {
    if a.kind != b.kind || a.trivial != b.trivial {
        return false;
    }
    if a.trivial.is_some() {
        return a.grading == b.grading;
    }
    if !a.is_band() {
        return a == b || *a == b.inverse();
    }
    let r = a.letters.len();
    if r != b.letters.len() {
        return false;
    }
    let inv = b.inverse();
    (0..r).any(|m| b.rotated(m) == *a || inv.rotated(m) == *a)
}
