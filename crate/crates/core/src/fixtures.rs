//! Small named skew-gentle triples used by tests, the CLI and documentation.

use crate::algebra_core::{presentation, AlgebraPresentation};

/// Linear A4 quiver `4 → 3 → 2 → 1` without relations, vertex 1 special.
pub fn e1() -> AlgebraPresentation {
    presentation(
        &["1", "2", "3", "4"],
        &[("a1", "4", "3"), ("a2", "3", "2"), ("a3", "2", "1")],
        &[],
        &["1"],
    )
    .expect("fixture is valid")
}

/// `3 → 2 → 1` with the relation through vertex 2; vertices 3 and 2 special.
pub fn e2() -> AlgebraPresentation {
    presentation(&["1", "2", "3"], &[("a1", "3", "2"), ("a2", "2", "1")], &[("a1", "a2")], &["3", "2"])
        .expect("fixture is valid")
}

/// Four vertices, two relations, vertex 4 special.
pub fn e3() -> AlgebraPresentation {
    presentation(
        &["1", "2", "3", "4"],
        &[("a1", "3", "1"), ("a2", "1", "2"), ("a4", "3", "2"), ("a3", "2", "4")],
        &[("a1", "a2"), ("a4", "a3")],
        &["4"],
    )
    .expect("fixture is valid")
}

/// Oriented 3-cycle with all relations, vertex 2 special.
pub fn e4() -> AlgebraPresentation {
    presentation(
        &["1", "2", "3"],
        &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "1")],
        &[("a1", "a2"), ("a2", "a3"), ("a3", "a1")],
        &["2"],
    )
    .expect("fixture is valid")
}

/// The 3-cycle with one relation dropped: `a3 a1` may be composed.
pub fn e4_open() -> AlgebraPresentation {
    presentation(
        &["1", "2", "3"],
        &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "1")],
        &[("a1", "a2"), ("a2", "a3")],
        &["2"],
    )
    .expect("fixture is valid")
}

/// `1 → 2 → 3 → 4` with both relations and the two middle vertices special.
pub fn chain_two_special() -> AlgebraPresentation {
    presentation(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
        &[("a", "b"), ("b", "c")],
        &["2", "3"],
    )
    .expect("fixture is valid")
}

/// All named fixtures.
pub fn all() -> Vec<(&'static str, AlgebraPresentation)> {
    vec![
        ("e1", e1()),
        ("e2", e2()),
        ("e3", e3()),
        ("e4", e4()),
        ("e4-open", e4_open()),
        ("chain", chain_two_special()),
    ]
}

pub fn by_name(name: &str) -> Option<AlgebraPresentation> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, p)| p)
}
