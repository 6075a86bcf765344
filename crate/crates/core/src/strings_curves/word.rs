use serde::Serialize;

use super::WordError;
use crate::algebra_core::{AlgebraPresentation, Quiver};

/// A homotopy letter: a nonzero path of the auxiliary gentle algebra A+, read
/// forwards (direct) or backwards (inverse). Arrows are stored in path order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrows: Vec<usize>,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrows: Vec<usize>) -> Self {
        Letter { arrows, inverse: false }
    }

    pub fn inverse_of(arrows: Vec<usize>) -> Self {
        Letter { arrows, inverse: true }
    }

    /// Vertex where the letter is entered when reading the word.
    pub fn start(&self, q: &Quiver) -> usize {
        if self.inverse {
            q.target(*self.arrows.last().expect("letters are nonempty"))
        } else {
            q.source(self.arrows[0])
        }
    }

    pub fn end(&self, q: &Quiver) -> usize {
        if self.inverse {
            q.source(self.arrows[0])
        } else {
            q.target(*self.arrows.last().expect("letters are nonempty"))
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter { arrows: self.arrows.clone(), inverse: !self.inverse }
    }

    /// Vertices passed strictly inside the path.
    pub fn inner_vertices(&self, q: &Quiver) -> Vec<usize> {
        self.arrows[..self.arrows.len() - 1].iter().map(|&a| q.target(a)).collect()
    }

    pub fn display(&self, q: &Quiver) -> String {
        let body: Vec<&str> = self.arrows.iter().map(|&a| q.arrow_name(a)).collect();
        format!("{}{}", body.join("."), if self.inverse { "~" } else { "" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordKind {
    Finite,
    RightInfinite,
    LeftInfinite,
    TwoSidedInfinite,
    Band,
}

/// A graded homotopy string or band.
///
/// `letters` is the finite body. Infinite words repeat `left_period` to the
/// left and `right_period` to the right of the body. `grading` holds μ at the
/// body's letter boundaries, so it has one entry more than there are letters;
/// for a band the last entry equals the first. The trivial word `e_x` has no
/// letters, `trivial = Some(x)` and a single grading value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomotopyWord {
    pub kind: WordKind,
    pub letters: Vec<Letter>,
    pub left_period: Vec<Letter>,
    pub right_period: Vec<Letter>,
    pub trivial: Option<usize>,
    pub grading: Vec<i64>,
}

fn step(l: &Letter) -> i64 {
    if l.inverse {
        -1
    } else {
        1
    }
}

impl HomotopyWord {
    pub fn trivial(vertex: usize, degree: i64) -> Self {
        HomotopyWord {
            kind: WordKind::Finite,
            letters: Vec::new(),
            left_period: Vec::new(),
            right_period: Vec::new(),
            trivial: Some(vertex),
            grading: vec![degree],
        }
    }

    /// A finite string graded from `start`.
    pub fn string(letters: Vec<Letter>, start: i64) -> Self {
        let grading = grading_from(&letters, start);
        HomotopyWord {
            kind: WordKind::Finite,
            letters,
            left_period: Vec::new(),
            right_period: Vec::new(),
            trivial: None,
            grading,
        }
    }

    pub fn band(letters: Vec<Letter>, start: i64) -> Self {
        let grading = grading_from(&letters, start);
        HomotopyWord {
            kind: WordKind::Band,
            letters,
            left_period: Vec::new(),
            right_period: Vec::new(),
            trivial: None,
            grading,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial.is_some()
    }

    pub fn is_band(&self) -> bool {
        self.kind == WordKind::Band
    }

    /// Vertices at the letter boundaries of the body (for a band the last
    /// one repeats the first).
    pub fn positions(&self, q: &Quiver) -> Vec<usize> {
        if let Some(x) = self.trivial {
            return vec![x];
        }
        let mut out = vec![self.letters[0].start(q)];
        out.extend(self.letters.iter().map(|l| l.end(q)));
        out
    }

    /// The word read backwards, grading reversed.
    pub fn inverse(&self) -> HomotopyWord {
        let flip = |ls: &[Letter]| ls.iter().rev().map(Letter::inverted).collect::<Vec<_>>();
        let kind = match self.kind {
            WordKind::RightInfinite => WordKind::LeftInfinite,
            WordKind::LeftInfinite => WordKind::RightInfinite,
            k => k,
        };
        HomotopyWord {
            kind,
            letters: flip(&self.letters),
            left_period: flip(&self.right_period),
            right_period: flip(&self.left_period),
            trivial: self.trivial,
            grading: self.grading.iter().rev().copied().collect(),
        }
    }

    /// Grading shifted by `m`: μ[m] = μ + m.
    pub fn shifted(&self, m: i64) -> HomotopyWord {
        let mut w = self.clone();
        for g in &mut w.grading {
            *g += m;
        }
        w
    }

    /// Band rotated to start at letter `m`, grading rotated along.
    pub fn rotated(&self, m: usize) -> HomotopyWord {
        let r = self.letters.len();
        if r == 0 || !self.is_band() {
            return self.clone();
        }
        let m = m % r;
        let mut letters = self.letters.clone();
        letters.rotate_left(m);
        let mut grading: Vec<i64> = self.grading[..r].to_vec();
        grading.rotate_left(m);
        grading.push(grading[0]);
        HomotopyWord { letters, grading, ..self.clone() }
    }

    pub fn direct_count(&self) -> usize {
        self.letters.iter().filter(|l| !l.inverse).count()
    }

    pub fn display(&self, q: &Quiver) -> String {
        let grading: Vec<String> = self.grading.iter().map(i64::to_string).collect();
        let grading = format!("({})", grading.join(","));
        if let Some(x) = self.trivial {
            return format!("e({}) {grading}", q.vertex_name(x));
        }
        let join = |ls: &[Letter]| ls.iter().map(|l| l.display(q)).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if !self.left_period.is_empty() {
            parts.push(format!("{{{}}}*", join(&self.left_period)));
        }
        if !self.letters.is_empty() {
            parts.push(join(&self.letters));
        }
        if !self.right_period.is_empty() {
            parts.push(format!("{{{}}}*", join(&self.right_period)));
        }
        let prefix = if self.is_band() { "band:" } else { "" };
        format!("{prefix}{} {grading}", parts.join(","))
    }

    /// Parses the text format: comma-separated letters, arrows inside a
    /// letter joined by `.`, inverse letters suffixed `~`, an optional grading
    /// `(μ0,μ1,...)`, `e(x)` for a trivial word, `band:` for bands and
    /// `{...}*` for a repeated block at either end.
    pub fn parse(text: &str, q: &Quiver) -> Result<HomotopyWord, WordError> {
        let text = text.trim();
        let (is_band, text) = match text.strip_prefix("band:") {
            Some(rest) => (true, rest.trim()),
            None => (false, text),
        };
        let (body, grading) = split_grading(text)?;
        if let Some(inner) = body.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
            let v = q.vertex_index(inner.trim()).ok_or_else(|| WordError::Parse(format!("unknown vertex `{inner}`")))?;
            let degree = match grading.as_deref() {
                Some([d]) => *d,
                None => 0,
                Some(_) => return Err(WordError::Parse("a trivial word has one grading value".into())),
            };
            return Ok(HomotopyWord::trivial(v, degree));
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut letters = Vec::new();
        let mut rest = body;
        if let Some(r) = rest.strip_prefix('{') {
            let close = r.find("}*").ok_or_else(|| WordError::Parse("unclosed `{`".into()))?;
            left = parse_letters(&r[..close], q)?;
            rest = r[close + 2..].trim_start_matches(',').trim();
        }
        if let Some(open) = rest.find('{') {
            let r = &rest[open + 1..];
            let close = r.find("}*").ok_or_else(|| WordError::Parse("unclosed `{`".into()))?;
            right = parse_letters(&r[..close], q)?;
            rest = rest[..open].trim_end_matches(',').trim();
        }
        if !rest.is_empty() {
            letters = parse_letters(rest, q)?;
        }
        let kind = match (is_band, left.is_empty(), right.is_empty()) {
            (true, true, true) => WordKind::Band,
            (true, _, _) => return Err(WordError::Parse("a band has no infinite ends".into())),
            (false, true, true) => WordKind::Finite,
            (false, true, false) => WordKind::RightInfinite,
            (false, false, true) => WordKind::LeftInfinite,
            (false, false, false) => WordKind::TwoSidedInfinite,
        };
        if letters.is_empty() && left.is_empty() && right.is_empty() {
            return Err(WordError::Parse("empty word".into()));
        }
        let grading = match grading {
            Some(g) => g,
            None => grading_from(&letters, 0),
        };
        Ok(HomotopyWord { kind, letters, left_period: left, right_period: right, trivial: None, grading })
    }
}

fn split_grading(text: &str) -> Result<(&str, Option<Vec<i64>>), WordError> {
    let text = text.trim();
    if !text.ends_with(')') || text.ends_with("e(") {
        return Ok((text, None));
    }
    let open = text.rfind('(').ok_or_else(|| WordError::Parse("unbalanced parenthesis".into()))?;
    let before = text[..open].trim_end();
    // `e(x)` without grading ends in `)` too.
    if before.ends_with('e') && !before.contains(' ') && before.len() == 1 {
        return Ok((text, None));
    }
    let values = text[open + 1..text.len() - 1]
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| WordError::Parse(format!("bad grading value `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((before, Some(values)))
}

fn parse_letters(text: &str, q: &Quiver) -> Result<Vec<Letter>, WordError> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (body, inverse) = match tok.strip_suffix('~') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let arrows = body
                .split('.')
                .map(|n| q.arrow_index(n.trim()).ok_or_else(|| WordError::Parse(format!("unknown arrow `{n}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            if arrows.is_empty() {
                return Err(WordError::Parse("empty letter".into()));
            }
            Ok(Letter { arrows, inverse })
        })
        .collect()
}

/// μ along a letter sequence: +1 across direct letters, −1 across inverse.
pub fn grading_from(letters: &[Letter], start: i64) -> Vec<i64> {
    let mut out = vec![start];
    for l in letters {
        out.push(out.last().copied().unwrap_or(start) + step(l));
    }
    out
}

/// The auxiliary algebra A+ relation test and special set used by the word
/// rules.
pub(crate) struct WordRules<'a> {
    pub p: &'a AlgebraPresentation,
    plus: Vec<(usize, usize)>,
}

impl<'a> WordRules<'a> {
    pub fn new(p: &'a AlgebraPresentation) -> Self {
        WordRules { p, plus: p.plus_relations() }
    }

    pub fn j(&self, a: usize, b: usize) -> bool {
        self.plus.contains(&(a, b))
    }

    /// Whether the direct path is nonzero in A+.
    pub fn path_ok(&self, arrows: &[usize]) -> bool {
        let q = self.p.quiver();
        !arrows.is_empty() && arrows.windows(2).all(|w| q.target(w[0]) == q.source(w[1]) && !self.j(w[0], w[1]))
    }

    /// The juncture rule between consecutive letters.
    pub fn juncture_ok(&self, x: &Letter, y: &Letter) -> bool {
        let q = self.p.quiver();
        let v = x.end(q);
        if v != y.start(q) {
            return false;
        }
        if self.p.is_special(v) {
            return true;
        }
        let x_last = *x.arrows.last().expect("nonempty");
        let x_first = x.arrows[0];
        let y_first = y.arrows[0];
        let y_last = *y.arrows.last().expect("nonempty");
        match (x.inverse, y.inverse) {
            (false, false) => self.j(x_last, y_first),
            (true, true) => self.j(y_last, x_first),
            (false, true) => x_last != y_last,
            (true, false) => x_first != y_first,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordIssue {
    /// Letter index (or juncture after that letter) where the clause fails.
    pub position: usize,
    pub clause: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordReport {
    pub valid: bool,
    pub issues: Vec<WordIssue>,
}

/// Checks letters, junctures, grading and, for bands, balance, primitivity
/// and the cyclic juncture.
pub fn validate_word(w: &HomotopyWord, p: &AlgebraPresentation) -> WordReport {
    let rules = WordRules::new(p);
    let q = p.quiver();
    let mut issues = Vec::new();

    if let Some(x) = w.trivial {
        if x >= q.vertex_count() {
            push(&mut issues, 0, "unknown vertex");
        }
        if !w.letters.is_empty() || w.grading.len() != 1 || w.kind != WordKind::Finite {
            push(&mut issues, 0, "a trivial word has no letters and one grading value");
        }
        return WordReport { valid: issues.is_empty(), issues };
    }
    let all: Vec<&Letter> = w.left_period.iter().chain(&w.letters).chain(&w.right_period).collect();
    for (i, l) in all.iter().enumerate() {
        if l.arrows.iter().any(|&a| a >= q.arrow_count()) {
            push(&mut issues, i, "unknown arrow");
            return WordReport { valid: false, issues };
        }
        if !rules.path_ok(&l.arrows) {
            push(&mut issues, i, "letter is not a nonzero path");
        }
    }
    if !issues.is_empty() {
        return WordReport { valid: false, issues };
    }
    for i in 1..all.len() {
        if !rules.juncture_ok(all[i - 1], all[i]) {
            push(&mut issues, i - 1, "juncture");
        }
    }
    let periodic_ok = |period: &[Letter]| period.is_empty() || rules.juncture_ok(&period[period.len() - 1], &period[0]);
    if !periodic_ok(&w.left_period) || !periodic_ok(&w.right_period) {
        push(&mut issues, all.len(), "a repeated block does not compose with itself");
    }
    let expected_kind = match (w.left_period.is_empty(), w.right_period.is_empty()) {
        (true, true) => None,
        (true, false) => Some(WordKind::RightInfinite),
        (false, true) => Some(WordKind::LeftInfinite),
        (false, false) => Some(WordKind::TwoSidedInfinite),
    };
    match (w.kind, expected_kind) {
        (WordKind::Finite | WordKind::Band, None) => {}
        (k, Some(e)) if k == e => {}
        _ => push(&mut issues, 0, "kind does not match the periodic parts"),
    }
    if w.letters.is_empty() && expected_kind.is_none() {
        push(&mut issues, 0, "empty word");
    }
    if w.grading.len() != w.letters.len() + 1 {
        push(&mut issues, 0, "grading length must be one more than the number of letters");
    } else {
        for (i, l) in w.letters.iter().enumerate() {
            if w.grading[i + 1] - w.grading[i] != step(l) {
                push(&mut issues, i, "grading step");
            }
        }
    }
    if w.kind == WordKind::Band && !w.letters.is_empty() {
        let r = w.letters.len();
        if !rules.juncture_ok(&w.letters[r - 1], &w.letters[0]) {
            push(&mut issues, r - 1, "cyclic juncture");
        }
        if 2 * w.direct_count() != r {
            push(&mut issues, 0, "a band needs as many direct as inverse letters");
        }
        if w.grading.first() != w.grading.last() {
            push(&mut issues, r, "grading does not close up");
        }
        if is_proper_power(&w.letters) {
            push(&mut issues, 0, "a band must not be a proper power");
        }
    }
    // Infinite ends must wind around a puncture: one repeated block, all
    // letters in one direction.
    for period in [&w.left_period, &w.right_period] {
        if !period.is_empty() && period.iter().any(|l| l.inverse != period[0].inverse) {
            push(&mut issues, 0, "a repeated block must keep one direction");
        }
    }
    WordReport { valid: issues.is_empty(), issues }
}

fn push(issues: &mut Vec<WordIssue>, position: usize, clause: &str) {
    issues.push(WordIssue { position, clause: clause.to_string() });
}

pub(crate) fn is_proper_power<T: PartialEq>(xs: &[T]) -> bool {
    let n = xs.len();
    (1..n).any(|d| n % d == 0 && (0..n).all(|i| xs[i] == xs[i % d]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "class")]
pub enum WordSymmetry {
    Asymmetric,
    /// A string equal to its inverse.
    SymmetricString,
    /// A band equal to its inverse rotated by `rotation` letters.
    SymmetricBand { rotation: usize },
}

impl WordSymmetry {
    pub fn is_symmetric(&self) -> bool {
        !matches!(self, WordSymmetry::Asymmetric)
    }
}

/// String: σ = σ̄ (a trivial word only at a special vertex). Band: σ = σ̄[m]
/// for some rotation m.
pub fn classify_symmetry(w: &HomotopyWord, p: &AlgebraPresentation) -> WordSymmetry {
    if let Some(x) = w.trivial {
        return if p.is_special(x) { WordSymmetry::SymmetricString } else { WordSymmetry::Asymmetric };
    }
    if w.kind != WordKind::Finite && w.kind != WordKind::Band {
        return WordSymmetry::Asymmetric;
    }
    let inv = w.inverse();
    if w.kind == WordKind::Finite {
        return if inv.letters == w.letters { WordSymmetry::SymmetricString } else { WordSymmetry::Asymmetric };
    }
    let r = w.letters.len();
    for m in 0..r {
        let mut rot = inv.letters.clone();
        rot.rotate_left(m);
        if rot == w.letters {
            return WordSymmetry::SymmetricBand { rotation: m };
        }
    }
    WordSymmetry::Asymmetric
}

/// Junctures `i` (between letters `i-1` and `i`, cyclically) where the word
/// turns back on itself, `σ_i = σ̄_{i-1}`.
pub fn turning_points(w: &HomotopyWord) -> Vec<usize> {
    let r = w.letters.len();
    if r == 0 {
        return Vec::new();
    }
    let cyclic = w.is_band();
    (0..=r)
        .filter(|&i| {
            let (prev, next) = if cyclic {
                if i == r {
                    return false;
                }
                ((i + r - 1) % r, i)
            } else {
                if i == 0 || i == r {
                    return false;
                }
                (i - 1, i)
            };
            w.letters[next] == w.letters[prev].inverted()
        })
        .collect()
}
