//! Exact linear algebra on spans of path combinations.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::path::{Coeff, Path, PathCombination};

/// Reduced row echelon basis of the span of `rows`, pivoting on the largest
/// path of each row in the natural path order. The result is canonical for the
/// subspace, so two families span the same space iff their bases are equal.
pub fn rref(rows: &[PathCombination]) -> Vec<PathCombination> {
    let mut basis: Vec<(Path, PathCombination)> = Vec::new();
    for row in rows {
        let mut r = row.clone();
        for (pivot, b) in &basis {
            let c = r.coeff_of(pivot);
            if !c.is_zero() {
                r = r.sub(&b.scale(&c));
            }
        }
        let Some(pivot) = r.paths().next_back().cloned() else { continue };
        let lead = r.coeff_of(&pivot);
        let r = r.scale(&(Coeff::one() / lead));
        for (_, b) in basis.iter_mut() {
            let c = b.coeff_of(&pivot);
            if !c.is_zero() {
                *b = b.sub(&r.scale(&c));
            }
        }
        basis.push((pivot, r));
    }
    basis.sort_by(|a, b| a.0.cmp(&b.0));
    basis.into_iter().map(|(_, b)| b).collect()
}

pub fn same_span(a: &[PathCombination], b: &[PathCombination]) -> bool {
    rref(a) == rref(b)
}

/// Whether `x` lies in the span of the echelon basis `basis` (as returned by `rref`).
pub fn in_span(basis: &[PathCombination], x: &PathCombination) -> bool {
    let mut r = x.clone();
    for b in basis {
        let Some(pivot) = b.paths().next_back() else { continue };
        let c = r.coeff_of(pivot);
        if !c.is_zero() {
            r = r.sub(&b.scale(&c));
        }
    }
    r.is_zero()
}

/// Basis of the orthogonal complement of span(`rows`) inside the space spanned
/// by `universe`, for the pairing that makes distinct paths orthonormal.
pub fn orthogonal_complement(rows: &[PathCombination], universe: &BTreeSet<Path>) -> Vec<PathCombination> {
    let basis = rref(rows);
    let pivots: Vec<Path> = basis.iter().filter_map(|b| b.paths().next_back().cloned()).collect();
    let mut out = Vec::new();
    for free in universe {
        if pivots.contains(free) {
            continue;
        }
        // Setting the free coordinate to 1 and every other free coordinate to 0
        // forces pivot coordinates to minus the free column of the echelon form.
        let mut terms = vec![(Coeff::one(), free.clone())];
        for (b, pivot) in basis.iter().zip(&pivots) {
            let c = b.coeff_of(free);
            if !c.is_zero() {
                terms.push((-c, pivot.clone()));
            }
        }
        out.push(PathCombination::from_terms(terms).expect("complement vectors live in one block"));
    }
    out
}
