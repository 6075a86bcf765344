use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GroebnerError;
use crate::algebra_core::Quiver;

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// A path in a quiver: a start vertex and a composable arrow sequence.
/// Trivial paths have no arrows and `start == end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path { start: q.source(a), end: q.target(a), arrows: vec![a] }
    }

    /// Builds a path from arrows, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Self> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if q.target(w[0]) != q.source(w[1]) {
                return None;
            }
        }
        Some(Path { start: q.source(first), end: q.target(*arrows.last()?), arrows: arrows.to_vec() })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `other`, or `None` when they do not compose.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, end: other.end, arrows })
    }

    /// Positions at which `sub` (nontrivial) occurs as a block of arrows.
    pub fn occurrences(&self, sub: &Path) -> Vec<usize> {
        if sub.is_trivial() || sub.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - sub.len()).filter(|&i| self.arrows[i..i + sub.len()] == sub.arrows[..]).collect()
    }

    /// The sub-path made of arrows `from..to`.
    pub fn slice(&self, q: &Quiver, from: usize, to: usize) -> Path {
        if from == to {
            let v = if from == 0 { self.start } else { q.target(self.arrows[from - 1]) };
            return Path::trivial(v);
        }
        Path { start: q.source(self.arrows[from]), end: q.target(self.arrows[to - 1]), arrows: self.arrows[from..to].to_vec() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e({})", q.vertex_name(self.start))
        } else {
            self.arrows.iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>().join(".")
        }
    }
}

/// A finite K-linear combination of paths sharing one source and one target.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCombination {
    terms: BTreeMap<Path, Coeff>,
}

impl PathCombination {
    pub fn zero() -> Self {
        PathCombination { terms: BTreeMap::new() }
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_term(Coeff::one(), p)
    }

    pub fn from_term(c: Coeff, p: Path) -> Self {
        let mut x = Self::zero();
        x.add_term(c, p);
        x
    }

    /// Builds a combination, merging repeated paths. Fails when the paths do
    /// not share endpoints.
    pub fn from_terms(terms: impl IntoIterator<Item = (Coeff, Path)>) -> Result<Self, GroebnerError> {
        let mut x = Self::zero();
        for (c, p) in terms {
            if let Some((q, _)) = x.terms.iter().next() {
                if q.start != p.start || q.end != p.end {
                    return Err(GroebnerError::NotUniform);
                }
            }
            x.add_term(c, p);
        }
        Ok(x)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Coeff)> {
        self.terms.iter()
    }

    pub fn paths(&self) -> impl DoubleEndedIterator<Item = &Path> {
        self.terms.keys()
    }

    pub fn coeff_of(&self, p: &Path) -> Coeff {
        self.terms.get(p).cloned().unwrap_or_else(Coeff::zero)
    }

    /// (source, target) of a nonzero combination.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.keys().next().map(|p| (p.start, p.end))
    }

    /// Every term has exactly this length.
    pub fn is_homogeneous(&self, len: usize) -> bool {
        self.terms.keys().all(|p| p.len() == len)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn add_term(&mut self, c: Coeff, p: Path) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PathCombination { terms: self.terms.iter().map(|(p, k)| (p.clone(), k * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for (p, c) in &other.terms {
            x.add_term(c.clone(), p.clone());
        }
        x
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coeff::one()))
    }

    /// `r · self · s`; terms that do not compose are dropped.
    pub fn sandwich(&self, r: &Path, s: &Path) -> Self {
        let mut x = Self::zero();
        for (p, c) in &self.terms {
            if let Some(rp) = r.concat(p) {
                if let Some(rps) = rp.concat(s) {
                    x.add_term(c.clone(), rps);
                }
            }
        }
        x
    }

    /// Product in the path algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let mut x = Self::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if let Some(pq) = p.concat(q) {
                    x.add_term(c * d, pq);
                }
            }
        }
        x
    }

    /// Applies `f` to each path (e.g. renaming arrows) and multiplies by the sign it returns.
    pub fn map_paths(&self, mut f: impl FnMut(&Path) -> (Coeff, Path)) -> Self {
        let mut x = Self::zero();
        for (p, c) in &self.terms {
            let (k, q) = f(p);
            x.add_term(c * k, q);
        }
        x
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Largest paths first reads more naturally for relations.
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                let _ = write!(out, "{abs} ");
            }
            out.push_str(&p.display(q));
        }
        out
    }
}
