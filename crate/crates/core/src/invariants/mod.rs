//! Derived invariants read off the dissection: the singularity category
//! factors, the Gorenstein dimension and the q-Cartan determinant.

mod qpoly;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use qpoly::{determinant, QPolynomial};

use crate::algebra_core::{admissible_presentation, relation_successor, AdmissiblePresentation, AlgebraError, AlgebraPresentation};
use crate::groebner::{certify_strong_koszul, longest_normal_path, normal_form_count, GroebnerBasis, GroebnerError};
use crate::surface::{dissection, OrbifoldDissection, SurfaceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("the algebra is infinite-dimensional")]
    InfiniteDimensional,
    #[error("the Groebner basis is not certified")]
    Uncertified,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Sizes of the interior polygons, degenerate ones included, in increasing
/// order. Each contributes a factor `D^b(K-mod)/[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityProfile {
    pub sizes: Vec<usize>,
}

impl SingularityProfile {
    /// Number of interior polygons with `k` edges, for each `k` that occurs.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &k in &self.sizes {
            *out.entry(k).or_insert(0) += 1;
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.sizes.is_empty()
    }
}

pub fn singularity_profile(d: &OrbifoldDissection) -> SingularityProfile {
    let mut sizes: Vec<usize> = d.polygons.interior().map(|p| p.size()).collect();
    sizes.sort_unstable();
    SingularityProfile { sizes }
}

/// Lengths of the cycles `α1…αn` of the gentle algebra with every `αiαi+1`
/// and `αnα1` a relation, one per cyclic class, sorted.
pub fn saturated_cycles(lambda: &AlgebraPresentation) -> Vec<usize> {
    let q = lambda.quiver();
    let rel = |a: usize, b: usize| lambda.is_relation(a, b);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..q.arrow_count() {
        if seen.contains(&a) {
            continue;
        }
        let mut cycle = vec![a];
        let mut cur = a;
        let closed = loop {
            match relation_successor(q, &rel, cur) {
                Some(b) if b == a => break true,
                Some(b) if cycle.contains(&b) || cycle.len() > q.arrow_count() => break false,
                Some(b) => {
                    cycle.push(b);
                    cur = b;
                }
                None => break false,
            }
        };
        if closed {
            seen.extend(cycle.iter().copied());
            out.push(cycle.len());
        }
    }
    out.sort_unstable();
    out
}

/// Largest number of internal edges of a boundary polygon, minus one (and 0
/// when no boundary polygon has two internal edges).
pub fn gorenstein_dimension(d: &OrbifoldDissection) -> usize {
    d.polygons.boundary().map(|p| p.internal_edges.saturating_sub(1)).max().unwrap_or(0)
}

/// Longest path `α1…αn` of the gentle algebra with every `αiαi+1` a relation
/// that does not lie on a saturated cycle.
pub fn longest_saturated_path(lambda: &AlgebraPresentation) -> usize {
    let q = lambda.quiver();
    let rel = |a: usize, b: usize| lambda.is_relation(a, b);
    let has_pred = |b: usize| q.in_arrows(q.source(b)).iter().any(|&a| rel(a, b));
    let mut best = 0;
    for a in 0..q.arrow_count() {
        if has_pred(a) {
            continue;
        }
        let mut len = 1;
        let mut cur = a;
        while let Some(b) = relation_successor(q, &rel, cur) {
            len += 1;
            cur = b;
            if len > q.arrow_count() {
                break;
            }
        }
        best = best.max(len);
    }
    best
}

pub type QMatrix = Vec<Vec<QPolynomial>>;

/// `c_ij(q) = Σ_n dim (paths i → j of length n in normal form) q^n`.
pub fn q_cartan(a: &AdmissiblePresentation, g: &GroebnerBasis) -> Result<QMatrix, InvariantError> {
    if !g.certified {
        return Err(InvariantError::Uncertified);
    }
    let bound = longest_normal_path(a, g).ok_or(InvariantError::InfiniteDimensional)?;
    let n = a.quiver.vertex_count();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ok(QPolynomial::from_counts(&normal_form_count(a, g, i, j, Some(bound))?)))
                .collect()
        })
        .collect()
}

/// `∏_k (1 − (−q)^k)^{c_k}`.
pub fn product_formula(profile: &SingularityProfile) -> QPolynomial {
    profile.counts().iter().fold(QPolynomial::one(), |acc, (&k, &c)| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let factor = &QPolynomial::one() - &QPolynomial::monomial(sign, k);
        &acc * &factor.pow(c)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanReport {
    pub matrix: QMatrix,
    pub det: QPolynomial,
    pub product: QPolynomial,
    pub gentle_det: QPolynomial,
    pub matches_product: bool,
    pub matches_gentle: bool,
}

impl CartanReport {
    pub fn all_match(&self) -> bool {
        self.matches_product && self.matches_gentle
    }
}

fn certified(a: &AdmissiblePresentation) -> Result<GroebnerBasis, InvariantError> {
    let (_, g) = certify_strong_koszul(a);
    if g.certified {
        Ok(g)
    } else {
        Err(InvariantError::Uncertified)
    }
}

/// Determinant of the q-Cartan matrix of the split algebra, compared with
/// the product over interior polygons and with the determinant for the
/// underlying gentle algebra.
pub fn cartan_determinant_check(p: &AlgebraPresentation) -> Result<CartanReport, InvariantError> {
    let a = admissible_presentation(p)?;
    let matrix = q_cartan(&a, &certified(&a)?)?;
    let det = determinant(&matrix);
    let product = product_formula(&singularity_profile(&dissection(p)?));
    let lambda = p.gentle_part();
    let la = admissible_presentation(&lambda)?;
    let gentle_det = determinant(&q_cartan(&la, &certified(&la)?)?);
    Ok(CartanReport {
        matches_product: det == product,
        matches_gentle: det == gentle_det,
        matrix,
        det,
        product,
        gentle_det,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub profile: SingularityProfile,
    pub saturated_cycles: Vec<usize>,
    pub gorenstein: usize,
    pub gorenstein_oracle: usize,
    /// `None` for infinite-dimensional algebras.
    pub cartan: Option<CartanReport>,
}

pub fn invariant_report(p: &AlgebraPresentation) -> Result<InvariantReport, InvariantError> {
    let d = dissection(p)?;
    let lambda = p.gentle_part();
    let cartan = match cartan_determinant_check(p) {
        Ok(c) => Some(c),
        Err(InvariantError::InfiniteDimensional) => None,
        Err(e) => return Err(e),
    };
    Ok(InvariantReport {
        profile: singularity_profile(&d),
        saturated_cycles: saturated_cycles(&lambda),
        gorenstein: gorenstein_dimension(&d),
        gorenstein_oracle: longest_saturated_path(&lambda),
        cartan,
    })
}

impl InvariantReport {
    pub fn to_json(&self) -> Value {
        let cartan = self.cartan.as_ref().map(|c| {
            json!({
                "matrix": c.matrix,
                "det": c.det,
                "product": c.product,
                "gentle_det": c.gentle_det,
                "match": c.all_match(),
            })
        });
        json!({
            "profile": self.profile.sizes,
            "saturated_cycles": self.saturated_cycles,
            "gorenstein": self.gorenstein,
            "gorenstein_oracle": self.gorenstein_oracle,
            "cartan": cartan,
        })
    }
}
