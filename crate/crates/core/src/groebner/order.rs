use std::cmp::Ordering;

use super::path::Path;
use crate::algebra_core::{AdmissiblePresentation, Quiver, Split};

/// Length-lexicographic order on paths driven by a key per arrow.
///
/// Longer paths are larger; paths of equal length compare arrow by arrow from
/// the left. Keys are `(base arrow rank, tie rank)`; the tie rank separates the
/// split copies of one base arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleOrder {
    keys: Vec<(usize, u8)>,
}

impl AdmissibleOrder {
    /// Arrows ranked by declaration order.
    pub fn length_lex(q: &Quiver) -> Self {
        AdmissibleOrder { keys: (0..q.arrow_count()).map(|a| (a, 0)).collect() }
    }

    /// The order induced on the split quiver by the declaration order of the
    /// base arrows, with the split tie-break
    /// `(+,+) > (-,-) > (+,-) > (-,+)` when both ends are split and
    /// `+ > -` when only one end is.
    pub fn for_presentation(a: &AdmissiblePresentation) -> Self {
        let keys = (0..a.quiver.arrow_count())
            .map(|x| {
                let s = a.split_of(a.quiver.source(x));
                let t = a.split_of(a.quiver.target(x));
                (a.arrow_origin[x], tie_rank(s, t))
            })
            .collect();
        AdmissibleOrder { keys }
    }

    pub fn arrow_key(&self, a: usize) -> (usize, u8) {
        self.keys[a]
    }

    pub fn compare(&self, p: &Path, q: &Path) -> Ordering {
        p.len()
            .cmp(&q.len())
            .then_with(|| {
                for (x, y) in p.arrows.iter().zip(&q.arrows) {
                    let o = self.keys[*x].cmp(&self.keys[*y]);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
            .then_with(|| p.start.cmp(&q.start))
            .then_with(|| p.end.cmp(&q.end))
    }

    pub fn greater(&self, p: &Path, q: &Path) -> bool {
        self.compare(p, q) == Ordering::Greater
    }
}

fn tie_rank(s: Split, t: Split) -> u8 {
    use Split::*;
    match (s, t) {
        (Plus, Plus) => 3,
        (Minus, Minus) => 2,
        (Plus, Minus) => 1,
        (Minus, Plus) => 0,
        (Plus, Plain) | (Plain, Plus) => 1,
        (Minus, Plain) | (Plain, Minus) => 0,
        (Plain, Plain) => 0,
    }
}
