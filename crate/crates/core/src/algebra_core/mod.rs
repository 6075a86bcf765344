//! Quivers, skew-gentle triples and their admissible presentations.

mod admissible;
mod canonical;
mod threads;
mod validate;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

pub use admissible::{admissible_presentation, collapse, AdmissiblePresentation, Split};
pub use canonical::{canonical_form, is_isomorphic};
pub use threads::{free_successor, relation_successor, threads, Thread, ThreadSet};
pub use validate::{validate_gentle, validate_skew_gentle, AxiomCheck, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    DanglingArrow { arrow: String, vertex: String },
    #[error("relation references unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{0}{1}` is not a composable path")]
    NotComposable(String, String),
    #[error("special vertex `{0}` is not a vertex of the quiver")]
    UnknownSpecial(String),
    #[error("not a skew-gentle presentation: {0}")]
    NotSkewGentle(String),
    #[error("malformed presentation: {0}")]
    Schema(String),
}

/// An arrow of a quiver, referring to its endpoints by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A finite quiver with opaque string ids. Indices into `vertices` and
/// `arrows` are used everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vindex: BTreeMap<String, usize>,
    aindex: BTreeMap<String, usize>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    outs: Vec<Vec<usize>>,
    ins: Vec<Vec<usize>>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        let mut vindex = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateVertex(v.clone()));
            }
        }
        let mut aindex = BTreeMap::new();
        let mut src = Vec::with_capacity(arrows.len());
        let mut tgt = Vec::with_capacity(arrows.len());
        let mut outs = vec![Vec::new(); vertices.len()];
        let mut ins = vec![Vec::new(); vertices.len()];
        for (k, a) in arrows.iter().enumerate() {
            if aindex.insert(a.name.clone(), k).is_some() {
                return Err(AlgebraError::DuplicateArrow(a.name.clone()));
            }
            let lookup = |v: &String| {
                vindex.get(v).copied().ok_or_else(|| AlgebraError::DanglingArrow {
                    arrow: a.name.clone(),
                    vertex: v.clone(),
                })
            };
            let s = lookup(&a.source)?;
            let t = lookup(&a.target)?;
            src.push(s);
            tgt.push(t);
            outs[s].push(k);
            ins[t].push(k);
        }
        Ok(Quiver { vertices, arrows, vindex, aindex, src, tgt, outs, ins })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vindex.get(id).copied()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.aindex.get(name).copied()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrows[a].name
    }

    pub fn source(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn target(&self, a: usize) -> usize {
        self.tgt[a]
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.outs[v]
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.ins[v]
    }

    pub fn is_loop(&self, a: usize) -> bool {
        self.src[a] == self.tgt[a]
    }

    /// The opposite quiver. Arrow `x` becomes `x^op`, and `x^op` becomes `x`
    /// again, so taking the opposite twice gives back the same names.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: op_name(&a.name), source: a.target.clone(), target: a.source.clone() })
            .collect();
        Quiver::new(self.vertices.clone(), arrows).expect("opposite of a valid quiver is valid")
    }
}

/// Name of the opposite arrow.
pub fn op_name(name: &str) -> String {
    match name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{name}^op"),
    }
}

/// A skew-gentle triple (Q', I', Sp) together with the implicit special loops.
///
/// Relations are stored as ordered arrow pairs `(a, b)` meaning the path `ab`.
/// The idempotent relations of the special loops are never stored; the loop at
/// a special vertex `i` is called `eps_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: Vec<(usize, usize)>,
    relset: BTreeSet<(usize, usize)>,
    special: Vec<usize>,
}

impl AlgebraPresentation {
    /// Builds a presentation from arrow-name relation pairs and special vertex ids.
    /// Duplicate relations are dropped; duplicate special vertices are kept so that
    /// validation can report them.
    pub fn new(
        quiver: Quiver,
        relations: &[(String, String)],
        special: &[String],
    ) -> Result<Self, AlgebraError> {
        let mut rels = Vec::new();
        for (a, b) in relations {
            let ia = quiver.arrow_index(a).ok_or_else(|| AlgebraError::UnknownArrow(a.clone()))?;
            let ib = quiver.arrow_index(b).ok_or_else(|| AlgebraError::UnknownArrow(b.clone()))?;
            rels.push((ia, ib));
        }
        let mut sp = Vec::new();
        for s in special {
            sp.push(quiver.vertex_index(s).ok_or_else(|| AlgebraError::UnknownSpecial(s.clone()))?);
        }
        Self::from_indices(quiver, rels, sp)
    }

    pub fn from_indices(
        quiver: Quiver,
        relations: Vec<(usize, usize)>,
        special: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        let mut relset = BTreeSet::new();
        let mut rels = Vec::new();
        for (a, b) in relations {
            if quiver.target(a) != quiver.source(b) {
                return Err(AlgebraError::NotComposable(
                    quiver.arrow_name(a).to_string(),
                    quiver.arrow_name(b).to_string(),
                ));
            }
            if relset.insert((a, b)) {
                rels.push((a, b));
            }
        }
        Ok(AlgebraPresentation { quiver, relations: rels, relset, special })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Relations in input order, de-duplicated.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    pub fn is_relation(&self, a: usize, b: usize) -> bool {
        self.relset.contains(&(a, b))
    }

    /// Special vertices as given, possibly with repetitions.
    pub fn special_list(&self) -> &[usize] {
        &self.special
    }

    pub fn special_set(&self) -> BTreeSet<usize> {
        self.special.iter().copied().collect()
    }

    pub fn is_special(&self, v: usize) -> bool {
        self.special.contains(&v)
    }

    /// Special loops as (vertex, loop name) pairs.
    pub fn special_loops(&self) -> Vec<(usize, String)> {
        self.special_set().into_iter().map(|v| (v, loop_name(self.quiver.vertex_name(v)))).collect()
    }

    pub fn relation_names(&self) -> Vec<(String, String)> {
        self.relations
            .iter()
            .map(|&(a, b)| (self.quiver.arrow_name(a).to_string(), self.quiver.arrow_name(b).to_string()))
            .collect()
    }

    /// The gentle algebra obtained by deleting the special loops.
    pub fn gentle_part(&self) -> AlgebraPresentation {
        AlgebraPresentation::from_indices(self.quiver.clone(), self.relations.clone(), Vec::new())
            .expect("relations already checked")
    }

    /// The same triple with a different special set.
    pub fn with_special(&self, special: Vec<usize>) -> AlgebraPresentation {
        AlgebraPresentation::from_indices(self.quiver.clone(), self.relations.clone(), special)
            .expect("relations already checked")
    }

    /// Relations of the auxiliary gentle algebra A+: drop every relation whose
    /// middle vertex is special.
    pub fn plus_relations(&self) -> Vec<(usize, usize)> {
        self.relations
            .iter()
            .copied()
            .filter(|&(a, _)| !self.is_special(self.quiver.target(a)))
            .collect()
    }

    pub fn from_json_str(text: &str) -> Result<Self, AlgebraError> {
        let value: Value = serde_json::from_str(text).map_err(|e| AlgebraError::Schema(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<Self, AlgebraError> {
        let obj = value.as_object().ok_or_else(|| AlgebraError::Schema("expected a JSON object".into()))?;
        let vertices = obj
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::Schema("missing `vertices` array".into()))?
            .iter()
            .map(id_of)
            .collect::<Result<Vec<_>, _>>()?;
        let mut arrows = Vec::new();
        if let Some(list) = obj.get("arrows") {
            let list = list.as_array().ok_or_else(|| AlgebraError::Schema("`arrows` must be an array".into()))?;
            for a in list {
                let field = |k: &str| {
                    a.get(k)
                        .ok_or_else(|| AlgebraError::Schema(format!("arrow without `{k}`")))
                        .and_then(id_of)
                };
                arrows.push(Arrow { name: field("name")?, source: field("source")?, target: field("target")? });
            }
        }
        let mut relations = Vec::new();
        if let Some(list) = obj.get("relations") {
            let list =
                list.as_array().ok_or_else(|| AlgebraError::Schema("`relations` must be an array".into()))?;
            for r in list {
                let pair = r
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| AlgebraError::Schema("each relation must be a pair of arrow names".into()))?;
                relations.push((id_of(&pair[0])?, id_of(&pair[1])?));
            }
        }
        let mut special = Vec::new();
        if let Some(list) = obj.get("special") {
            let list = list.as_array().ok_or_else(|| AlgebraError::Schema("`special` must be an array".into()))?;
            for s in list {
                special.push(id_of(s)?);
            }
        }
        let quiver = Quiver::new(vertices, arrows)?;
        AlgebraPresentation::new(quiver, &relations, &special)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.quiver.vertices(),
            "arrows": self.quiver.arrows(),
            "relations": self.relation_names().into_iter().map(|(a, b)| vec![a, b]).collect::<Vec<_>>(),
            "special": self.special.iter().map(|&v| self.quiver.vertex_name(v)).collect::<Vec<_>>(),
        })
    }
}

/// Name of the special loop at vertex `id`.
pub fn loop_name(id: &str) -> String {
    format!("eps_{id}")
}

fn id_of(v: &Value) -> Result<String, AlgebraError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(AlgebraError::Schema(format!("expected a string id, found {other}"))),
    }
}

/// The two gentle algebras attached to a skew-gentle triple: Λ (special loops
/// deleted) and A+ (relations through special vertices removed as well).
pub fn derived_presentations(p: &AlgebraPresentation) -> (AlgebraPresentation, AlgebraPresentation) {
    let lambda = p.gentle_part();
    let plus = AlgebraPresentation::from_indices(p.quiver.clone(), p.plus_relations(), Vec::new())
        .expect("subset of valid relations");
    (lambda, plus)
}

/// Convenience constructor used by fixtures and tests: arrows as
/// `(name, source, target)` triples and relations as name pairs.
pub fn presentation(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[(&str, &str)],
    special: &[&str],
) -> Result<AlgebraPresentation, AlgebraError> {
    let quiver = Quiver::new(
        vertices.iter().map(|s| s.to_string()).collect(),
        arrows
            .iter()
            .map(|(n, s, t)| Arrow { name: n.to_string(), source: s.to_string(), target: t.to_string() })
            .collect(),
    )?;
    let rels: Vec<(String, String)> = relations.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    let sp: Vec<String> = special.iter().map(|s| s.to_string()).collect();
    AlgebraPresentation::new(quiver, &rels, &sp)
}
