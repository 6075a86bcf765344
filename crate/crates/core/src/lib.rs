//! Skew-gentle algebras: admissible presentations, Groebner certificates,
//! orbifold dissections, graded curves and derived invariants.

pub mod algebra_core;
pub mod groebner;
pub mod fixtures;
pub mod surface;
pub mod strings_curves;
pub mod complexes;
pub mod invariants;
pub mod corpus;
pub mod cli;
