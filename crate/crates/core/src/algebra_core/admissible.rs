use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use super::{validate_skew_gentle, AlgebraError, AlgebraPresentation, Arrow, Quiver};
use crate::groebner::linalg::{in_span, rref, same_span};
use crate::groebner::path::{Coeff, Path, PathCombination};

/// Copy of a vertex in the split quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Split {
    Plain,
    Plus,
    Minus,
}

impl Split {
    pub fn suffix(self) -> &'static str {
        match self {
            Split::Plain => "",
            Split::Plus => "+",
            Split::Minus => "-",
        }
    }

    /// Sign attached to a middle vertex in a binomial relation.
    pub fn sign(self) -> Coeff {
        if self == Split::Minus {
            -Coeff::one()
        } else {
            Coeff::one()
        }
    }
}

/// The quadratic presentation KQ^sg/I^sg of a skew-gentle algebra, together with
/// the bookkeeping linking split vertices and arrows back to the base quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePresentation {
    pub quiver: Quiver,
    pub relations: Vec<PathCombination>,
    pub base: Quiver,
    pub special: BTreeSet<usize>,
    /// Split vertex -> (base vertex, copy).
    pub vertex_origin: Vec<(usize, Split)>,
    /// Split arrow -> base arrow.
    pub arrow_origin: Vec<usize>,
    splits: Vec<Vec<usize>>,
    lifts: BTreeMap<(usize, usize, usize), usize>,
}

impl AdmissiblePresentation {
    /// Builds the split quiver of `base` over `special` with the given relations
    /// (arrow index pairs of the base) lifted by the sign rule. No validation.
    pub fn build(base: &Quiver, relations: &[(usize, usize)], special: &BTreeSet<usize>) -> Self {
        let mut vertices = Vec::new();
        let mut vertex_origin = Vec::new();
        let mut splits = vec![Vec::new(); base.vertex_count()];
        for v in 0..base.vertex_count() {
            let copies: &[Split] = if special.contains(&v) { &[Split::Plus, Split::Minus] } else { &[Split::Plain] };
            for &c in copies {
                splits[v].push(vertices.len());
                vertices.push(format!("{}{}", base.vertex_name(v), c.suffix()));
                vertex_origin.push((v, c));
            }
        }
        let mut arrows = Vec::new();
        let mut arrow_origin = Vec::new();
        let mut lifts = BTreeMap::new();
        for a in 0..base.arrow_count() {
            let (s, t) = (base.source(a), base.target(a));
            let split_end = special.contains(&s) || special.contains(&t);
            for &i in &splits[s] {
                for &j in &splits[t] {
                    let name = if split_end {
                        format!("({},{},{})", vertices[i], base.arrow_name(a), vertices[j])
                    } else {
                        base.arrow_name(a).to_string()
                    };
                    lifts.insert((a, i, j), arrows.len());
                    arrows.push(Arrow { name, source: vertices[i].clone(), target: vertices[j].clone() });
                    arrow_origin.push(a);
                }
            }
        }
        let quiver = Quiver::new(vertices, arrows).expect("split quiver is well formed");
        let mut out = AdmissiblePresentation {
            quiver,
            relations: Vec::new(),
            base: base.clone(),
            special: special.clone(),
            vertex_origin,
            arrow_origin,
            splits,
            lifts,
        };
        let rels = relations.iter().flat_map(|&(a, b)| out.lift_relation(a, b)).collect();
        out.relations = rels;
        out
    }

    /// Split copies of a base vertex: `[i]`, or `[i+, i-]` when special.
    pub fn copies(&self, v: usize) -> &[usize] {
        &self.splits[v]
    }

    /// The split arrow `(i, a, j)`.
    pub fn lift_arrow(&self, a: usize, i: usize, j: usize) -> Option<usize> {
        self.lifts.get(&(a, i, j)).copied()
    }

    pub fn split_of(&self, v: usize) -> Split {
        self.vertex_origin[v].1
    }

    /// Generators of I^sg coming from one relation `ab` of the base.
    pub fn lift_relation(&self, a: usize, b: usize) -> Vec<PathCombination> {
        let base = &self.base;
        let mut out = Vec::new();
        for &i in self.copies(base.source(a)) {
            for &k in self.copies(base.target(b)) {
                let terms = self.copies(base.target(a)).iter().map(|&j| {
                    let x = self.lifts[&(a, i, j)];
                    let y = self.lifts[&(b, j, k)];
                    (self.split_of(j).sign(), Path { start: i, end: k, arrows: vec![x, y] })
                });
                out.push(PathCombination::from_terms(terms).expect("lifted relation is uniform"));
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.display(&self.quiver)).collect()
    }

    pub fn to_json(&self) -> Value {
        let rels: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                let terms: Vec<Value> = r
                    .terms()
                    .map(|(p, c)| {
                        json!({
                            "coeff": c.to_string(),
                            "path": p.arrows.iter().map(|&a| self.quiver.arrow_name(a)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                json!({ "terms": terms, "text": r.display(&self.quiver) })
            })
            .collect();
        json!({
            "vertices": self.quiver.vertices(),
            "arrows": self.quiver.arrows(),
            "relations": rels,
        })
    }
}

/// The admissible presentation of a skew-gentle triple.
pub fn admissible_presentation(p: &AlgebraPresentation) -> Result<AdmissiblePresentation, AlgebraError> {
    let report = validate_skew_gentle(p);
    if !report.is_valid() {
        let why: Vec<String> = report.failures().iter().map(|c| format!("{} {:?}", c.axiom, c.offenders)).collect();
        return Err(AlgebraError::NotSkewGentle(why.join("; ")));
    }
    Ok(AdmissiblePresentation::build(p.quiver(), p.relations(), &p.special_set()))
}

/// Recovers the skew-gentle triple whose admissible presentation spans the same
/// relation space as `a`. Fails when no such triple exists.
pub fn collapse(a: &AdmissiblePresentation) -> Result<AlgebraPresentation, AlgebraError> {
    let basis = rref(&a.relations);
    let base = &a.base;
    let mut rels = Vec::new();
    for x in 0..base.arrow_count() {
        for &y in base.out_arrows(base.target(x)) {
            if a.lift_relation(x, y).iter().all(|g| in_span(&basis, g)) {
                rels.push((x, y));
            }
        }
    }
    let rebuilt = AdmissiblePresentation::build(base, &rels, &a.special);
    if !same_span(&rebuilt.relations, &a.relations) {
        return Err(AlgebraError::NotSkewGentle(
            "relation space is not the lift of any set of quadratic monomials".into(),
        ));
    }
    AlgebraPresentation::from_indices(base.clone(), rels, a.special.iter().copied().collect())
}
