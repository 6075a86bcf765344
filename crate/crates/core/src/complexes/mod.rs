//! Complexes of projective modules over the split algebra attached to graded
//! homotopy strings and bands.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra_core::{AdmissiblePresentation, AlgebraPresentation, Split};
use crate::groebner::{complete_reduce, Coeff, GroebnerBasis, GroebnerError, Path, PathCombination};
use crate::strings_curves::{classify_symmetry, turning_points, validate_word, HomotopyWord, Letter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid band parameter: {0}")]
    InvalidParameter(String),
    #[error("expected a {0}")]
    WrongKind(&'static str),
    #[error("the Groebner basis is not certified")]
    Uncertified,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Parameter of a band complex: a monic polynomial for asymmetric bands,
/// multiplicities of the four half-summands for symmetric ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BandParameter {
    /// Coefficients from the constant term up; the leading one must be 1.
    Polynomial { coefficients: Vec<Coeff>, irreducible_power: bool },
    Dimidiate { l: usize, l_prime: usize, m: usize, m_prime: usize },
}

impl BandParameter {
    pub fn polynomial(coefficients: Vec<Coeff>) -> Self {
        BandParameter::Polynomial { coefficients, irreducible_power: false }
    }

    pub fn validate(&self) -> Result<(), ComplexError> {
        match self {
            BandParameter::Polynomial { coefficients, .. } => {
                if coefficients.len() < 2 {
                    return Err(ComplexError::InvalidParameter("degree must be at least 1".into()));
                }
                if !coefficients.last().expect("nonempty").is_one() {
                    return Err(ComplexError::InvalidParameter("polynomial must be monic".into()));
                }
                if coefficients[0].is_zero() {
                    return Err(ComplexError::InvalidParameter("0 is a root".into()));
                }
                let at_one = coefficients.iter().fold(Coeff::zero(), |acc, c| acc + c);
                if at_one.is_zero() {
                    return Err(ComplexError::InvalidParameter("1 is a root".into()));
                }
                Ok(())
            }
            BandParameter::Dimidiate { l, l_prime, m, m_prime } => {
                if l + l_prime + m + m_prime == 0 {
                    return Err(ComplexError::InvalidParameter("all multiplicities are zero".into()));
                }
                Ok(())
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            BandParameter::Polynomial { coefficients, .. } => coefficients.len() - 1,
            BandParameter::Dimidiate { .. } => 1,
        }
    }

    /// Companion matrix: ones below the diagonal, minus the coefficients in
    /// the last column.
    pub fn companion(&self) -> Vec<Vec<Coeff>> {
        let n = self.degree();
        let mut c = vec![vec![Coeff::zero(); n]; n];
        if let BandParameter::Polynomial { coefficients, .. } = self {
            for i in 0..n {
                if i > 0 {
                    c[i][i - 1] = Coeff::one();
                }
                c[i][n - 1] = -coefficients[i].clone();
            }
        }
        c
    }
}

/// One indecomposable projective `P(vertex)` in the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub degree: i64,
    /// Vertex of the split quiver.
    pub vertex: usize,
    /// Letter boundary of the word the summand sits at.
    pub position: usize,
    /// Index among the copies at that position and vertex.
    pub copy: usize,
}

/// A map `P(from) → P(to)` given by a combination of paths from the
/// source vertex to the target vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapEntry {
    pub from: usize,
    pub to: usize,
    pub value: PathCombination,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveComplex {
    pub summands: Vec<Summand>,
    /// `None` when only the terms are known.
    pub differential: Option<Vec<MapEntry>>,
    /// Total shift applied since construction.
    pub offset: i64,
    /// The two halves of the complex of a symmetric string.
    pub dimidiate: Vec<ProjectiveComplex>,
    pub note: Option<String>,
}

const RANKS_ONLY: &str = "symmetric word: terms only, differentials not computed";

impl ProjectiveComplex {
    fn terms_only(summands: Vec<Summand>) -> Self {
        ProjectiveComplex {
            summands,
            differential: None,
            offset: 0,
            dimidiate: Vec::new(),
            note: Some(RANKS_ONLY.to_string()),
        }
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.summands.iter().map(|s| s.degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn to_json(&self, a: &AdmissiblePresentation) -> Value {
        let q = &a.quiver;
        let terms: BTreeMap<String, Vec<&str>> = self.degrees().into_iter().map(|d| {
            let names = self.summands.iter().filter(|s| s.degree == d).map(|s| q.vertex_name(s.vertex)).collect();
            (d.to_string(), names)
        }).collect();
        let differential = self.differential.as_ref().map(|entries| {
            entries
                .iter()
                .map(|e| json!({ "from": e.from, "to": e.to, "value": e.value.display(q) }))
                .collect::<Vec<_>>()
        });
        json!({
            "terms": terms,
            "summands": self.summands.iter().map(|s| json!({
                "degree": s.degree, "vertex": q.vertex_name(s.vertex), "position": s.position, "copy": s.copy,
            })).collect::<Vec<_>>(),
            "differential": differential,
            "offset": self.offset,
            "dimidiate": self.dimidiate.iter().map(|c| c.to_json(a)).collect::<Vec<_>>(),
            "note": self.note,
        })
    }
}

/// `new^j = old^{j-m}`: every term moves up by `m` degrees.
pub fn shift(c: &ProjectiveComplex, m: i64) -> ProjectiveComplex {
    let mut out = c.clone();
    for s in &mut out.summands {
        s.degree += m;
    }
    out.offset += m;
    out.dimidiate = c.dimidiate.iter().map(|d| shift(d, m)).collect();
    out
}

/// Multiplicity of each split vertex in each degree.
pub fn graded_dimension_vector(c: &ProjectiveComplex, a: &AdmissiblePresentation) -> BTreeMap<i64, BTreeMap<String, usize>> {
    let mut out: BTreeMap<i64, BTreeMap<String, usize>> = BTreeMap::new();
    for s in &c.summands {
        *out.entry(s.degree).or_default().entry(a.quiver.vertex_name(s.vertex).to_string()).or_default() += 1;
    }
    out
}

type Matrix = Vec<Vec<PathCombination>>;

/// Lift of a base arrow: entry `(i, j)` is `±(i, a, j)`, negative when `j`
/// is a minus copy.
fn lift_arrow(a: &AdmissiblePresentation, arrow: usize) -> Matrix {
    let base = &a.base;
    let (s, t) = (base.source(arrow), base.target(arrow));
    a.copies(s)
        .iter()
        .map(|&i| {
            a.copies(t)
                .iter()
                .map(|&j| {
                    let x = a.lift_arrow(arrow, i, j).expect("every copy pair is lifted");
                    PathCombination::from_term(a.split_of(j).sign(), Path { start: i, end: j, arrows: vec![x] })
                })
                .collect()
        })
        .collect()
}

fn mat_mul(x: &Matrix, y: &Matrix) -> Matrix {
    let inner = y.len();
    let cols = y.first().map_or(0, Vec::len);
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|k| (0..inner).fold(PathCombination::zero(), |acc, j| acc.add(&row[j].mul(&y[j][k]))))
                .collect()
        })
        .collect()
}

/// Lift of a letter's path. A letter of A+ running through a special vertex
/// uses the idempotent of that vertex's plus copy there.
fn lift_path(a: &AdmissiblePresentation, arrows: &[usize]) -> Matrix {
    let base = &a.base;
    let mut m = lift_arrow(a, arrows[0]);
    for &next in &arrows[1..] {
        let mid = base.source(next);
        if a.special.contains(&mid) {
            for row in &mut m {
                for (j, &copy) in a.copies(mid).iter().enumerate() {
                    if a.split_of(copy) != Split::Plus {
                        row[j] = PathCombination::zero();
                    }
                }
            }
        }
        m = mat_mul(&m, &lift_arrow(a, next));
    }
    m
}

fn check_word(w: &HomotopyWord, p: &AlgebraPresentation) -> Result<(), ComplexError> {
    let report = validate_word(w, p);
    if report.valid {
        Ok(())
    } else {
        Err(ComplexError::InvalidWord(report.issues.iter().map(|i| i.clause.clone()).collect::<Vec<_>>().join("; ")))
    }
}

/// Summand indices per (position, copy), in split-vertex order.
struct Layout {
    summands: Vec<Summand>,
    index: BTreeMap<(usize, usize), Vec<usize>>,
}

fn layout(a: &AdmissiblePresentation, vertices: &[usize], degrees: &[i64], copies: usize) -> Layout {
    let mut summands = Vec::new();
    let mut index = BTreeMap::new();
    for (pos, (&v, &d)) in vertices.iter().zip(degrees).enumerate() {
        for copy in 0..copies {
            let ids: Vec<usize> = a
                .copies(v)
                .iter()
                .map(|&u| {
                    summands.push(Summand { degree: d, vertex: u, position: pos, copy });
                    summands.len() - 1
                })
                .collect();
            index.insert((pos, copy), ids);
        }
    }
    Layout { summands, index }
}

/// Maps contributed by letter `k`, which joins positions `k` and `k + 1`
/// (cyclically for bands). `twist` multiplies copy `s` to copy `t`.
fn letter_maps(
    a: &AdmissiblePresentation,
    lay: &Layout,
    letter: &Letter,
    k: usize,
    next: usize,
    copies: usize,
    twist: Option<&Vec<Vec<Coeff>>>,
    out: &mut Vec<MapEntry>,
) {
    let lift = lift_path(a, &letter.arrows);
    let (src, tgt) = if letter.inverse { (next, k) } else { (k, next) };
    for s in 0..copies {
        for t in 0..copies {
            let scalar = match twist {
                Some(c) => c[s][t].clone(),
                None if s == t => Coeff::one(),
                None => Coeff::zero(),
            };
            if scalar.is_zero() {
                continue;
            }
            let from = &lay.index[&(src, s)];
            let to = &lay.index[&(tgt, t)];
            for (i, &f) in from.iter().enumerate() {
                for (j, &g) in to.iter().enumerate() {
                    let value = lift[i][j].scale(&scalar);
                    if !value.is_zero() {
                        out.push(MapEntry { from: f, to: g, value });
                    }
                }
            }
        }
    }
}

/// The complex `P_σ` of a finite graded string: `P(v_i)` in degree `μ_i`,
/// one map per letter along its path, from the path's source to its target.
/// Symmetric strings get their terms and the two halves only.
pub fn string_complex(w: &HomotopyWord, p: &AlgebraPresentation, a: &AdmissiblePresentation) -> Result<ProjectiveComplex, ComplexError> {
    if w.is_band() || !w.left_period.is_empty() || !w.right_period.is_empty() {
        return Err(ComplexError::WrongKind("finite string"));
    }
    check_word(w, p)?;
    let vertices = w.positions(p.quiver());
    let lay = layout(a, &vertices, &w.grading, 1);
    if classify_symmetry(w, p).is_symmetric() {
        let mid = w.letters.len() / 2;
        let halves = [Split::Plus, Split::Minus]
            .into_iter()
            .map(|side| {
                let summands = lay
                    .summands
                    .iter()
                    .filter(|s| s.position < mid || s.position == mid && a.split_of(s.vertex) == side)
                    .cloned()
                    .collect();
                ProjectiveComplex::terms_only(summands)
            })
            .collect();
        let mut c = ProjectiveComplex::terms_only(lay.summands);
        c.dimidiate = halves;
        return Ok(c);
    }
    let mut entries = Vec::new();
    for (k, l) in w.letters.iter().enumerate() {
        letter_maps(a, &lay, l, k, k + 1, 1, None, &mut entries);
    }
    Ok(ProjectiveComplex { summands: lay.summands, differential: Some(entries), offset: 0, dimidiate: Vec::new(), note: None })
}

/// The complex of a graded band. Asymmetric bands take a monic polynomial:
/// every term is repeated `deg p` times and the last letter carries the
/// companion matrix. Symmetric bands take the four multiplicities and give
/// the terms of the corresponding half.
pub fn band_complex(
    w: &HomotopyWord,
    p: &AlgebraPresentation,
    a: &AdmissiblePresentation,
    param: &BandParameter,
) -> Result<ProjectiveComplex, ComplexError> {
    if !w.is_band() {
        return Err(ComplexError::WrongKind("band"));
    }
    check_word(w, p)?;
    param.validate()?;
    let symmetry = classify_symmetry(w, p);
    match (param, symmetry.is_symmetric()) {
        (BandParameter::Polynomial { .. }, false) => {}
        (BandParameter::Dimidiate { l, l_prime, m, m_prime }, true) => {
            return Ok(symmetric_band_terms(w, p, a, [*l, *l_prime, *m, *m_prime]));
        }
        (BandParameter::Polynomial { .. }, true) => {
            return Err(ComplexError::InvalidParameter("a symmetric band takes multiplicities".into()))
        }
        (BandParameter::Dimidiate { .. }, false) => {
            return Err(ComplexError::InvalidParameter("an asymmetric band takes a polynomial".into()))
        }
    }
    let r = w.letters.len();
    let n = param.degree();
    let vertices = &w.positions(p.quiver())[..r];
    let lay = layout(a, vertices, &w.grading[..r], n);
    let companion = param.companion();
    let mut entries = Vec::new();
    for (k, l) in w.letters.iter().enumerate() {
        let twist = (k + 1 == r).then_some(&companion);
        letter_maps(a, &lay, l, k, (k + 1) % r, n, twist, &mut entries);
    }
    Ok(ProjectiveComplex { summands: lay.summands, differential: Some(entries), offset: 0, dimidiate: Vec::new(), note: None })
}

/// Rotation used for a symmetric band: start at its first position that is
/// not a turning point (the first turning point if every position is one).
pub fn symmetric_band_shape(w: &HomotopyWord) -> (usize, usize, usize) {
    let len = w.letters.len();
    let turns = turning_points(w);
    let p0 = (0..len).find(|i| !turns.contains(i)).unwrap_or(turns.first().copied().unwrap_or(0));
    let rotated: Vec<usize> = turns.iter().map(|&t| (t + len - p0) % len).collect();
    let r = rotated.iter().copied().min().unwrap_or(0);
    (p0, r, len / 2 - r)
}

fn symmetric_band_terms(w: &HomotopyWord, p: &AlgebraPresentation, a: &AdmissiblePresentation, mult: [usize; 4]) -> ProjectiveComplex {
    let [l, l2, m, m2] = mult;
    let (p0, r, s) = symmetric_band_shape(w);
    let rot = w.rotated(p0);
    let vertices = rot.positions(p.quiver());
    let mut summands = Vec::new();
    let mut push = |pos: usize, v: usize, count: usize| {
        for copy in 0..count {
            summands.push(Summand { degree: rot.grading[pos], vertex: v, position: pos, copy });
        }
    };
    let split = |v: usize, side: Split| a.copies(v).iter().copied().find(|&u| a.split_of(u) == side).unwrap_or(a.copies(v)[0]);
    for pos in 0..r {
        for &u in a.copies(vertices[pos]) {
            push(pos, u, l + l2);
        }
    }
    push(r, split(vertices[r], Split::Plus), l);
    push(r, split(vertices[r], Split::Minus), l2);
    for pos in 2 * r + 1..2 * r + s {
        for &u in a.copies(vertices[pos]) {
            push(pos, u, m + m2);
        }
    }
    let t = (2 * r + s) % w.letters.len();
    push(t, split(vertices[t], Split::Plus), m);
    push(t, split(vertices[t], Split::Minus), m2);
    ProjectiveComplex::terms_only(summands)
}

/// Whether `d ∘ d` vanishes in the algebra: every entry of the square is
/// reduced by the certified Groebner basis and must reach zero.
pub fn square_is_zero(c: &ProjectiveComplex, a: &AdmissiblePresentation, g: &GroebnerBasis) -> Result<Option<bool>, ComplexError> {
    let Some(entries) = &c.differential else { return Ok(None) };
    if !g.certified {
        return Err(ComplexError::Uncertified);
    }
    let mut out_of: BTreeMap<usize, Vec<&MapEntry>> = BTreeMap::new();
    for e in entries {
        out_of.entry(e.from).or_default().push(e);
    }
    let mut square: BTreeMap<(usize, usize), PathCombination> = BTreeMap::new();
    for e in entries {
        for f in out_of.get(&e.to).into_iter().flatten() {
            let slot = square.entry((e.from, f.to)).or_insert_with(PathCombination::zero);
            *slot = slot.add(&e.value.mul(&f.value));
        }
    }
    for x in square.values() {
        if x.is_zero() {
            continue;
        }
        if !complete_reduce(x, &g.generators, &g.order, &a.quiver)?.result.is_zero() {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}
