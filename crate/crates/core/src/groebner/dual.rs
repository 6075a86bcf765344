use std::collections::BTreeSet;

use num_traits::One;

use super::linalg::{orthogonal_complement, rref};
use super::path::{Coeff, Path, PathCombination};
use super::GroebnerError;
use crate::algebra_core::{AdmissiblePresentation, Split};

/// Quadratic dual of an admissible presentation, realised over the split
/// quiver of the opposite base quiver.
///
/// The dual relation space is the orthogonal complement of the length-two part
/// of I^sg, transported to Q^op by `x1 x2 ↦ x2^op x1^op`. Arrows of the
/// opposite quiver leaving a minus vertex are then negated so that the
/// commutativity relations come out in the same signed form as lifted ones.
pub fn quadratic_dual(a: &AdmissiblePresentation) -> Result<AdmissiblePresentation, GroebnerError> {
    if a.relations.iter().any(|r| !r.is_homogeneous(2)) {
        return Err(GroebnerError::NotQuadratic);
    }
    let q = &a.quiver;
    let mut universe = BTreeSet::new();
    for x in 0..q.arrow_count() {
        for &y in q.out_arrows(q.target(x)) {
            universe.insert(Path { start: q.source(x), end: q.target(y), arrows: vec![x, y] });
        }
    }
    let complement = orthogonal_complement(&a.relations, &universe);

    let mut out = AdmissiblePresentation::build(&a.base.opposite(), &[], &a.special);
    let op = &out.quiver;
    // Split vertices are created in the same order for Q and Q^op.
    let op_arrow = |x: usize| -> usize {
        let base_arrow = a.arrow_origin[x];
        out.lift_arrow(base_arrow, q.target(x), q.source(x)).expect("every split arrow has an opposite")
    };
    let sign = |y: usize| -> Coeff {
        if out.split_of(op.source(y)) == Split::Minus {
            -Coeff::one()
        } else {
            Coeff::one()
        }
    };
    let transported: Vec<PathCombination> = complement
        .iter()
        .map(|r| {
            r.map_paths(|p| {
                let y1 = op_arrow(p.arrows[1]);
                let y2 = op_arrow(p.arrows[0]);
                let path = Path { start: p.end, end: p.start, arrows: vec![y1, y2] };
                (sign(y1) * sign(y2), path)
            })
        })
        .collect();
    out.relations = rref(&transported);
    Ok(out)
}
