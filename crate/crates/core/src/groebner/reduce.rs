use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use super::order::AdmissibleOrder;
use super::path::{Coeff, Path, PathCombination};
use super::GroebnerError;
use crate::algebra_core::{AdmissiblePresentation, Quiver};

/// The largest path with nonzero coefficient.
pub fn tip(x: &PathCombination, ord: &AdmissibleOrder) -> Result<Path, GroebnerError> {
    leading_term(x, ord).map(|(p, _)| p)
}

/// Tip together with its coefficient.
pub fn leading_term(x: &PathCombination, ord: &AdmissibleOrder) -> Result<(Path, Coeff), GroebnerError> {
    x.terms()
        .max_by(|a, b| ord.compare(a.0, b.0))
        .map(|(p, c)| (p.clone(), c.clone()))
        .ok_or(GroebnerError::ZeroTip)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleReduction {
    Reduced { result: PathCombination, generator: usize, left: Path, right: Path },
    Irreducible,
}

fn sorted_desc<'a>(x: &'a PathCombination, ord: &AdmissibleOrder) -> Vec<(&'a Path, &'a Coeff)> {
    let mut terms: Vec<_> = x.terms().collect();
    terms.sort_by(|a, b| ord.compare(b.0, a.0));
    terms
}

/// One simple reduction `λx − λ_p r h s`, applied to the largest term of `x`
/// divisible by some tip, using the first generator whose tip divides it.
pub fn simple_reduce(x: &PathCombination, h: &[PathCombination], ord: &AdmissibleOrder) -> SimpleReduction {
    let tips: Vec<Option<(Path, Coeff)>> = h.iter().map(|g| leading_term(g, ord).ok()).collect();
    simple_reduce_with(x, h, &tips, ord)
}

fn simple_reduce_with(
    x: &PathCombination,
    h: &[PathCombination],
    tips: &[Option<(Path, Coeff)>],
    ord: &AdmissibleOrder,
) -> SimpleReduction {
    for (p, lp) in sorted_desc(x, ord) {
        for (k, t) in tips.iter().enumerate() {
            let Some((t, lambda)) = t else { continue };
            if t.is_trivial() {
                continue;
            }
            if let Some(&pos) = p.occurrences(t).first() {
                let left = Path { start: p.start, end: t.start, arrows: p.arrows[..pos].to_vec() };
                let right = Path { start: t.end, end: p.end, arrows: p.arrows[pos + t.len()..].to_vec() };
                let result = x.scale(lambda).sub(&h[k].sandwich(&left, &right).scale(lp));
                return SimpleReduction::Reduced { result, generator: k, left, right };
            }
        }
    }
    SimpleReduction::Irreducible
}

/// Iteration ceiling for `complete_reduce`: terms × degree × generators.
pub fn reduction_ceiling(x: &PathCombination, h: &[PathCombination]) -> usize {
    let degree = x.paths().map(Path::len).max().unwrap_or(0);
    x.len().max(1) * degree.max(1) * h.len().max(1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteReduction {
    pub result: PathCombination,
    pub trace: Vec<String>,
    pub steps: usize,
}

/// Simple reductions until the element is zero or irreducible. The leading
/// coefficient is normalised to 1 after every step.
pub fn complete_reduce(
    x: &PathCombination,
    h: &[PathCombination],
    ord: &AdmissibleOrder,
    q: &Quiver,
) -> Result<CompleteReduction, GroebnerError> {
    let ceiling = reduction_ceiling(x, h);
    let tips: Vec<Option<(Path, Coeff)>> = h.iter().map(|g| leading_term(g, ord).ok()).collect();
    let mut cur = x.clone();
    let mut trace = Vec::new();
    let mut steps = 0;
    while !cur.is_zero() {
        match simple_reduce_with(&cur, h, &tips, ord) {
            SimpleReduction::Irreducible => break,
            SimpleReduction::Reduced { result, generator, left, right } => {
                steps += 1;
                if steps > ceiling {
                    return Err(GroebnerError::CeilingExceeded(ceiling));
                }
                cur = normalise(&result, ord);
                trace.push(format!(
                    "by g{generator} with ({}, {}): {}",
                    left.display(q),
                    right.display(q),
                    cur.display(q)
                ));
            }
        }
    }
    Ok(CompleteReduction { result: cur, trace, steps })
}

fn normalise(x: &PathCombination, ord: &AdmissibleOrder) -> PathCombination {
    match leading_term(x, ord) {
        Ok((_, c)) => x.scale(&(Coeff::one() / c)),
        Err(_) => x.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub m: Path,
    pub n: Path,
    pub relation: PathCombination,
}

/// All overlap relations `μ_t·x·m − λ_s·n·y` with `tip(x)·m = n·tip(y)`,
/// `m`, `n` nontrivial and shorter than `tip(x)`.
pub fn overlap(x: &PathCombination, y: &PathCombination, ord: &AdmissibleOrder) -> Vec<Overlap> {
    let (Ok((s, ls)), Ok((t, mt))) = (leading_term(x, ord), leading_term(y, ord)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for k in 1..s.len() {
        let shared = s.len() - k;
        if shared >= t.len() || s.arrows[k..] != t.arrows[..shared] {
            continue;
        }
        let n = Path { start: s.start, end: t.start, arrows: s.arrows[..k].to_vec() };
        let m = Path { start: s.end, end: t.end, arrows: t.arrows[shared..].to_vec() };
        if m.len() >= s.len() {
            continue;
        }
        let e_start = Path::trivial(s.start);
        let e_end = Path::trivial(t.end);
        let relation = x.sandwich(&e_start, &m).scale(&mt).sub(&y.sandwich(&n, &e_end).scale(&ls));
        out.push(Overlap { m, n, relation });
    }
    out
}

/// A set of uniform generators with the order used for their tips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<PathCombination>,
    pub order: AdmissibleOrder,
    /// Set only when every overlap completely reduces to zero.
    pub certified: bool,
}

impl GroebnerBasis {
    pub fn tips(&self) -> Vec<Path> {
        self.generators.iter().filter_map(|g| tip(g, &self.order).ok()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapRecord {
    pub pair: (usize, usize),
    pub overlap: String,
    pub trace: Vec<String>,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub basis: Vec<String>,
    pub overlaps: Vec<OverlapRecord>,
    pub certified: bool,
    /// Why certification failed, if it did.
    pub failure: Option<String>,
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis,
            "overlaps": self.overlaps.iter().map(|o| json!({
                "pair": [o.pair.0, o.pair.1],
                "overlap": o.overlap,
                "trace": o.trace,
                "result": o.result,
            })).collect::<Vec<_>>(),
            "certified": self.certified,
            "failure": self.failure,
        })
    }
}

/// Takes the stored generators of I^sg as a candidate basis, forms every
/// overlap relation and reduces it completely. Certified iff all reach zero.
pub fn certify_strong_koszul(a: &AdmissiblePresentation) -> (Certificate, GroebnerBasis) {
    let ord = AdmissibleOrder::for_presentation(a);
    let q = &a.quiver;
    let gens = a.relations.clone();
    let basis: Vec<String> = gens.iter().map(|g| g.display(q)).collect();
    let mut failure = None;
    if gens.iter().any(|g| !g.is_homogeneous(2)) {
        failure = Some("generators are not quadratic".to_string());
    }
    let tips: Vec<Path> = gens.iter().filter_map(|g| tip(g, &ord).ok()).collect();
    let distinct: BTreeSet<&Path> = tips.iter().collect();
    if failure.is_none() && distinct.len() != tips.len() {
        failure = Some("two generators share a tip".to_string());
    }
    let mut overlaps = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            for o in overlap(x, y, &ord) {
                let text = o.relation.display(q);
                match complete_reduce(&o.relation, &gens, &ord, q) {
                    Ok(r) => {
                        if !r.result.is_zero() && failure.is_none() {
                            failure = Some(format!("overlap of g{i} and g{j} reduces to {}", r.result.display(q)));
                        }
                        overlaps.push(OverlapRecord {
                            pair: (i, j),
                            overlap: text,
                            trace: r.trace,
                            result: r.result.display(q),
                        });
                    }
                    Err(e) => {
                        if failure.is_none() {
                            failure = Some(format!("overlap of g{i} and g{j}: {e}"));
                        }
                        overlaps.push(OverlapRecord {
                            pair: (i, j),
                            overlap: text,
                            trace: Vec::new(),
                            result: e.to_string(),
                        });
                    }
                }
            }
        }
    }
    let certified = failure.is_none();
    (
        Certificate { basis, overlaps, certified, failure },
        GroebnerBasis { generators: gens, order: ord, certified },
    )
}

/// State of the tip-avoiding automaton: current vertex and the last arrows
/// read (at most max-tip-length − 1 of them).
type State = (usize, Vec<usize>);

struct Automaton {
    edges: BTreeMap<State, Vec<State>>,
}

impl Automaton {
    fn build(q: &Quiver, tips: &[Path], start: usize) -> (Self, State) {
        let keep = tips.iter().map(Path::len).max().unwrap_or(1).saturating_sub(1);
        let init: State = (start, Vec::new());
        let mut edges: BTreeMap<State, Vec<State>> = BTreeMap::new();
        let mut stack = vec![init.clone()];
        while let Some(st) = stack.pop() {
            if edges.contains_key(&st) {
                continue;
            }
            let mut next = Vec::new();
            for &a in q.out_arrows(st.0) {
                let mut word = st.1.clone();
                word.push(a);
                let forbidden =
                    tips.iter().any(|t| !t.is_trivial() && t.len() <= word.len() && word.ends_with(&t.arrows));
                if forbidden {
                    continue;
                }
                let cut = word.len().saturating_sub(keep);
                let ns: State = (q.target(a), word[cut..].to_vec());
                next.push(ns.clone());
                stack.push(ns);
            }
            edges.insert(st, next);
        }
        (Automaton { edges }, init)
    }

    /// States that can reach a state at vertex `j`.
    fn coreachable(&self, j: usize) -> BTreeSet<State> {
        let mut good: BTreeSet<State> = self.edges.keys().filter(|s| s.0 == j).cloned().collect();
        loop {
            let before = good.len();
            for (s, next) in &self.edges {
                if !good.contains(s) && next.iter().any(|n| good.contains(n)) {
                    good.insert(s.clone());
                }
            }
            if good.len() == before {
                return good;
            }
        }
    }

    fn has_cycle(&self, within: &BTreeSet<State>) -> bool {
        // Kahn's algorithm on the induced subgraph.
        let mut indeg: BTreeMap<&State, usize> = within.iter().map(|s| (s, 0)).collect();
        for s in within {
            for n in &self.edges[s] {
                if let Some(d) = indeg.get_mut(n) {
                    *d += 1;
                }
            }
        }
        let mut queue: Vec<&State> = indeg.iter().filter(|(_, &d)| d == 0).map(|(s, _)| *s).collect();
        let mut removed = 0;
        while let Some(s) = queue.pop() {
            removed += 1;
            for n in &self.edges[s] {
                if let Some(d) = indeg.get_mut(n) {
                    *d -= 1;
                    if *d == 0 {
                        queue.push(n);
                    }
                }
            }
        }
        removed != within.len()
    }
}

/// Number of tip-free paths from `i` to `j` in each degree `0..=bound`.
/// With `bound = None` the longest such path fixes the bound, and an infinite
/// family of tip-free paths is reported as an error.
pub fn normal_form_count(
    a: &AdmissiblePresentation,
    g: &GroebnerBasis,
    i: usize,
    j: usize,
    bound: Option<usize>,
) -> Result<Vec<u64>, GroebnerError> {
    let q = &a.quiver;
    let tips = g.tips();
    let (auto, init) = Automaton::build(q, &tips, i);
    let bound = match bound {
        Some(b) => b,
        None => {
            let live = auto.coreachable(j);
            if auto.has_cycle(&live) {
                return Err(GroebnerError::InfiniteDimensional);
            }
            live.len()
        }
    };
    let mut counts = vec![0u64; bound + 1];
    let mut layer: BTreeMap<State, u64> = BTreeMap::from([(init, 1)]);
    for count in counts.iter_mut() {
        *count = layer.iter().filter(|(s, _)| s.0 == j).map(|(_, c)| *c).sum();
        let mut next: BTreeMap<State, u64> = BTreeMap::new();
        for (s, c) in &layer {
            for n in &auto.edges[s] {
                *next.entry(n.clone()).or_insert(0) += c;
            }
        }
        layer = next;
    }
    if bound > 0 {
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
    }
    Ok(counts)
}

/// Length of the longest tip-free path, or `None` when there is no bound.
pub fn longest_normal_path(a: &AdmissiblePresentation, g: &GroebnerBasis) -> Option<usize> {
    let tips = g.tips();
    let mut best = 0;
    for i in 0..a.quiver.vertex_count() {
        let (auto, init) = Automaton::build(&a.quiver, &tips, i);
        let all: BTreeSet<State> = auto.edges.keys().cloned().collect();
        if auto.has_cycle(&all) {
            return None;
        }
        // Longest path in a DAG by repeated relaxation from the initial state.
        let mut depth: BTreeMap<State, usize> = BTreeMap::from([(init, 0)]);
        let mut frontier: Vec<State> = depth.keys().cloned().collect();
        while let Some(s) = frontier.pop() {
            let d = depth[&s];
            for n in &auto.edges[&s] {
                if depth.get(n).is_none_or(|&old| old < d + 1) {
                    depth.insert(n.clone(), d + 1);
                    frontier.push(n.clone());
                }
            }
        }
        best = best.max(depth.values().copied().max().unwrap_or(0));
    }
    Some(best)
}

/// Whether KQ/⟨tips⟩ (hence the algebra) is finite-dimensional.
pub fn is_finite_dimensional(a: &AdmissiblePresentation, g: &GroebnerBasis) -> bool {
    longest_normal_path(a, g).is_some()
}
