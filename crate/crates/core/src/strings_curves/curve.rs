use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::word::{grading_from, HomotopyWord, Letter, WordKind};
use super::WordError;
use crate::algebra_core::AlgebraPresentation;
use crate::surface::{Corner, RibbonComplex, VertexKind};

/// A piece of curve inside the region of one dissection vertex: it enters
/// at position `from` and turns `steps` corners around the vertex (positive
/// in the cyclic order, negative against it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub vertex: usize,
    pub from: usize,
    pub steps: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Arc,
    Closed,
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndKind {
    Marked,
    Orbifold,
    Puncture,
}

/// Where an arc ends: the label of the region it ends in, or for an end
/// spiralling into a puncture the edges crossed on each turn.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveEnd {
    pub kind: EndKind,
    pub reference: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub period: Vec<usize>,
}

/// A graded curve given by the edges it crosses and the grading at each
/// crossing. Arcs have one crossing more than segments; closed curves have as
/// many, and their grading repeats the first value at the end. An infinite
/// curve lists one turn of each spiralling end inside `crossings` as well;
/// `left_turn` and `right_turn` count the segments of those turns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCurve {
    pub kind: CurveKind,
    pub crossings: Vec<usize>,
    pub grading: Vec<i64>,
    #[serde(default)]
    pub ends: Vec<CurveEnd>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segments: Option<Vec<Segment>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub left_turn: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub right_turn: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl GradedCurve {
    pub fn shifted(&self, m: i64) -> GradedCurve {
        let mut c = self.clone();
        for f in &mut c.grading {
            *f += m;
        }
        c
    }

    /// Crossings with edge names, for display and JSON.
    pub fn to_json(&self, r: &RibbonComplex) -> Value {
        let mut v = serde_json::to_value(self).expect("curve serialises");
        v["crossing_names"] = self.crossings.iter().map(|&e| Value::from(r.edge_name(e))).collect();
        v
    }

    pub fn from_json(value: &Value) -> Result<GradedCurve, WordError> {
        serde_json::from_value(value.clone()).map_err(|e| WordError::Schema(e.to_string()))
    }
}

/// Position arithmetic inside one dissection vertex.
pub(crate) struct Walker<'a> {
    pub r: &'a RibbonComplex,
    corner_of: HashMap<String, (usize, usize)>,
}

impl<'a> Walker<'a> {
    pub fn new(r: &'a RibbonComplex) -> Self {
        let mut corner_of = HashMap::new();
        for (v, vert) in r.vertices().iter().enumerate() {
            if vert.kind == VertexKind::Orbifold {
                continue;
            }
            for (k, c) in vert.corners.iter().enumerate() {
                if let Corner::Arrow(a) = c {
                    corner_of.insert(a.clone(), (v, k));
                }
            }
        }
        Walker { r, corner_of }
    }

    fn size(&self, v: usize) -> usize {
        self.r.vertex(v).halves.len()
    }

    fn half(&self, v: usize, k: usize) -> usize {
        self.r.vertex(v).halves[k]
    }

    /// End position of a segment, if it stays clear of the gap.
    pub fn target(&self, s: &Segment) -> Option<usize> {
        let n = self.size(s.vertex) as i64;
        match self.r.vertex(s.vertex).kind {
            VertexKind::Marked => {
                let t = s.from as i64 + s.steps;
                (0..n).contains(&t).then_some(t as usize)
            }
            VertexKind::Puncture => Some((s.from as i64 + s.steps).rem_euclid(n) as usize),
            VertexKind::Orbifold => None,
        }
    }

    pub fn from_half(&self, s: &Segment) -> usize {
        self.half(s.vertex, s.from)
    }

    pub fn exit_half(&self, s: &Segment) -> Option<usize> {
        self.target(s).map(|t| self.half(s.vertex, t))
    }

    /// Where the curve continues after leaving through half `h`: across an
    /// ordinary edge, or back from an orbifold point into the same corner.
    pub fn continue_at(&self, h: usize) -> usize {
        if self.r.is_special_edge(self.r.edge_of(h)) {
            h
        } else {
            self.r.iota(h)
        }
    }

    /// Arrow names passed by a segment, in the order walked.
    fn corners_passed(&self, s: &Segment) -> Option<Vec<String>> {
        let vert = self.r.vertex(s.vertex);
        let n = vert.halves.len() as i64;
        let mut out = Vec::new();
        for i in 0..s.steps.abs() {
            let k = if s.steps > 0 { s.from as i64 + i } else { s.from as i64 - 1 - i };
            match &vert.corners[k.rem_euclid(n) as usize] {
                Corner::Arrow(a) => out.push(a.clone()),
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn segment_of_letter(&self, l: &Letter, p: &AlgebraPresentation) -> Result<Segment, WordError> {
        let q = p.quiver();
        let name = |a: usize| q.arrow_name(a).to_string();
        let &(v, k) = self
            .corner_of
            .get(q.arrow_name(l.arrows[0]))
            .ok_or_else(|| WordError::Curve(format!("arrow `{}` is not a corner", name(l.arrows[0]))))?;
        let m = l.arrows.len() as i64;
        let seg = if l.inverse {
            let n = self.size(v) as i64;
            let from = match self.r.vertex(v).kind {
                VertexKind::Puncture => (k as i64 + m).rem_euclid(n) as usize,
                _ => k + l.arrows.len(),
            };
            Segment { vertex: v, from, steps: -m }
        } else {
            Segment { vertex: v, from: k, steps: m }
        };
        let mut walked = self.corners_passed(&seg).filter(|_| self.target(&seg).is_some()).ok_or_else(|| {
            WordError::Curve(format!("letter `{}` leaves its vertex", l.display(q)))
        })?;
        if l.inverse {
            walked.reverse();
        }
        if walked != l.arrows.iter().map(|&a| name(a)).collect::<Vec<_>>() {
            return Err(WordError::Curve(format!("letter `{}` is not a run of consecutive corners", l.display(q))));
        }
        Ok(seg)
    }

    pub fn letter_of_segment(&self, s: &Segment, p: &AlgebraPresentation) -> Result<Letter, WordError> {
        let q = p.quiver();
        let mut names = self
            .corners_passed(s)
            .filter(|_| self.target(s).is_some())
            .ok_or_else(|| WordError::Curve("segment crosses a gap".into()))?;
        if s.steps < 0 {
            names.reverse();
        }
        let arrows = names
            .iter()
            .map(|a| q.arrow_index(a).ok_or_else(|| WordError::Curve(format!("unknown arrow `{a}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Letter { arrows, inverse: s.steps < 0 })
    }

    fn end_beyond(&self, h: usize) -> CurveEnd {
        let e = self.r.edge_of(h);
        if let Some(o) = self.r.orbifold_half(e) {
            let v = self.r.owner(o).0;
            return CurveEnd { kind: EndKind::Orbifold, reference: self.r.vertex(v).label.clone(), period: Vec::new() };
        }
        let v = self.r.owner(self.r.iota(h)).0;
        let kind = match self.r.vertex(v).kind {
            VertexKind::Puncture => EndKind::Puncture,
            _ => EndKind::Marked,
        };
        CurveEnd { kind, reference: self.r.vertex(v).label.clone(), period: Vec::new() }
    }

    /// Checks that consecutive segments join up and returns the crossings:
    /// the entry edge of the first segment and the exit edge of each one. For
    /// a closed curve the last exit must lead back to the first entry, and it
    /// is not listed again.
    pub fn crossings(&self, segs: &[Segment], closed: bool) -> Result<Vec<usize>, WordError> {
        let mut out = Vec::with_capacity(segs.len() + 1);
        for s in segs {
            if s.vertex >= self.r.vertex_count() || s.from >= self.size(s.vertex) {
                return Err(WordError::Curve("segment outside the dissection".into()));
            }
            if self.r.vertex(s.vertex).kind == VertexKind::Orbifold {
                return Err(WordError::Curve("segment at an orbifold point".into()));
            }
        }
        out.push(self.r.edge_of(self.from_half(&segs[0])));
        for (i, s) in segs.iter().enumerate() {
            let h = self.exit_half(s).ok_or_else(|| WordError::Curve(format!("segment {i} crosses a gap")))?;
            let next = self.continue_at(h);
            let expected = if i + 1 < segs.len() {
                Some(self.from_half(&segs[i + 1]))
            } else if closed {
                Some(self.from_half(&segs[0]))
            } else {
                None
            };
            if let Some(e) = expected {
                if e != next {
                    return Err(WordError::Curve(format!("segments {i} and {} do not meet", (i + 1) % segs.len())));
                }
            }
            if i + 1 < segs.len() || !closed {
                out.push(self.r.edge_of(h));
            }
        }
        Ok(out)
    }
}

/// The graded curve of a homotopy word in the dissection of `p`.
pub fn word_to_curve(w: &HomotopyWord, p: &AlgebraPresentation, r: &RibbonComplex) -> Result<GradedCurve, WordError> {
    let report = super::validate_word(w, p);
    if !report.valid {
        return Err(WordError::Invalid(report.issues.iter().map(|i| i.clause.clone()).collect::<Vec<_>>().join("; ")));
    }
    let walker = Walker::new(r);
    if let Some(x) = w.trivial {
        let ends = [2 * x, 2 * x + 1]
            .into_iter()
            .map(|h| {
                let v = r.owner(h).0;
                let kind = match r.vertex(v).kind {
                    VertexKind::Orbifold => EndKind::Orbifold,
                    VertexKind::Puncture => EndKind::Puncture,
                    VertexKind::Marked => EndKind::Marked,
                };
                CurveEnd { kind, reference: r.vertex(v).label.clone(), period: Vec::new() }
            })
            .collect();
        return Ok(GradedCurve {
            kind: CurveKind::Arc,
            crossings: vec![x],
            grading: w.grading.clone(),
            ends,
            segments: Some(Vec::new()),
            left_turn: 0,
            right_turn: 0,
        });
    }
    let letters: Vec<&Letter> = w.left_period.iter().chain(&w.letters).chain(&w.right_period).collect();
    let segs = letters.iter().map(|l| walker.segment_of_letter(l, p)).collect::<Result<Vec<_>, _>>()?;
    let closed = w.kind == WordKind::Band;
    let crossings = walker.crossings(&segs, closed)?;
    let left_steps: i64 = w.left_period.iter().map(|l| if l.inverse { -1 } else { 1 }).sum();
    let all: Vec<Letter> = letters.iter().map(|&l| l.clone()).collect();
    let grading = if closed { w.grading.clone() } else { grading_from(&all, w.grading[0] - left_steps) };
    let kind = match w.kind {
        WordKind::Band => CurveKind::Closed,
        WordKind::Finite => CurveKind::Arc,
        _ => CurveKind::Infinite,
    };
    let mut ends = Vec::new();
    if !closed {
        let mut start = walker.end_beyond(walker.from_half(&segs[0]));
        let last = segs.last().expect("nonempty");
        let mut finish = walker.end_beyond(walker.exit_half(last).expect("checked by crossings"));
        let lp = w.left_period.len();
        let rp = w.right_period.len();
        if lp > 0 {
            start = CurveEnd {
                kind: EndKind::Puncture,
                reference: String::new(),
                period: crossings[..lp].to_vec(),
            };
        }
        if rp > 0 {
            finish = CurveEnd {
                kind: EndKind::Puncture,
                reference: String::new(),
                period: crossings[crossings.len() - rp..].to_vec(),
            };
        }
        ends = vec![start, finish];
    }
    Ok(GradedCurve {
        kind,
        crossings,
        grading,
        ends,
        segments: Some(segs),
        left_turn: w.left_period.len(),
        right_turn: w.right_period.len(),
    })
}

/// Segments of a curve: the stored witness if present, otherwise the unique
/// walk matching the crossings, the grading steps and the end labels.
pub fn curve_segments(c: &GradedCurve, r: &RibbonComplex) -> Result<Vec<Segment>, WordError> {
    let walker = Walker::new(r);
    if let Some(segs) = &c.segments {
        if segs.is_empty() {
            return Ok(Vec::new());
        }
        let closed = c.kind == CurveKind::Closed;
        let crossings = walker.crossings(segs, closed)?;
        if crossings != c.crossings {
            return Err(WordError::Curve("stored segments do not match the crossings".into()));
        }
        return Ok(segs.clone());
    }
    if c.kind == CurveKind::Infinite {
        return Err(WordError::Curve("an infinite curve needs its segments".into()));
    }
    if c.kind == CurveKind::Arc && c.crossings.len() == 1 {
        return Ok(Vec::new());
    }
    let sols = reconstruct(&walker, c)?;
    match sols.len() {
        0 => Err(WordError::Curve("no walk realises these crossings".into())),
        1 => Ok(sols.into_iter().next().expect("one solution")),
        n => Err(WordError::Ambiguous(n)),
    }
}

fn reconstruct(walker: &Walker, c: &GradedCurve) -> Result<Vec<Vec<Segment>>, WordError> {
    let r = walker.r;
    let closed = c.kind == CurveKind::Closed;
    let x = &c.crossings;
    if x.is_empty() || x.iter().any(|&e| e >= r.edge_count()) {
        return Err(WordError::Curve("crossing outside the dissection".into()));
    }
    let count = if closed { x.len() } else { x.len() - 1 };
    if c.grading.len() != count + 1 {
        return Err(WordError::Curve("grading length does not match the crossings".into()));
    }
    let mut sols = Vec::new();
    for h0 in [2 * x[0], 2 * x[0] + 1] {
        if r.kind_at(h0) == VertexKind::Orbifold {
            continue;
        }
        if !closed && c.ends.len() == 2 {
            let start = walker.end_beyond(h0);
            if start.kind != c.ends[0].kind || start.reference != c.ends[0].reference {
                continue;
            }
        }
        let mut path = Vec::new();
        search(walker, c, h0, 0, count, closed, &mut path, &mut sols);
    }
    Ok(sols)
}

#[allow(clippy::too_many_arguments)]
fn search(
    walker: &Walker,
    c: &GradedCurve,
    from_half: usize,
    i: usize,
    count: usize,
    closed: bool,
    path: &mut Vec<Segment>,
    sols: &mut Vec<Vec<Segment>>,
) {
    let r = walker.r;
    if i == count {
        let ok = if closed {
            walker.continue_at(walker.exit_half(path.last().expect("nonempty")).expect("valid")) == walker.from_half(&path[0])
        } else if c.ends.len() == 2 {
            let last = path.last().expect("nonempty");
            let end = walker.end_beyond(walker.exit_half(last).expect("valid"));
            end.kind == c.ends[1].kind && end.reference == c.ends[1].reference
        } else {
            true
        };
        if ok {
            sols.push(path.clone());
        }
        return;
    }
    let (v, k) = r.owner(from_half);
    let n = r.vertex(v).halves.len() as i64;
    let next_edge = c.crossings[(i + 1) % c.crossings.len()];
    let dir = c.grading[i + 1] - c.grading[i];
    let mut candidates = Vec::new();
    for (t, &h) in r.vertex(v).halves.iter().enumerate() {
        if r.edge_of(h) != next_edge {
            continue;
        }
        let t = t as i64;
        let k = k as i64;
        match (r.vertex(v).kind, dir) {
            (VertexKind::Marked, d) => {
                let s = t - k;
                if s.signum() == d {
                    candidates.push(s);
                }
            }
            (VertexKind::Puncture, 0) => {
                if t == k {
                    candidates.push(0);
                }
            }
            (VertexKind::Puncture, 1) => candidates.push(match (t - k).rem_euclid(n) {
                0 => n,
                s => s,
            }),
            (VertexKind::Puncture, -1) => candidates.push(-match (k - t).rem_euclid(n) {
                0 => n,
                s => s,
            }),
            _ => {}
        }
    }
    for steps in candidates {
        let seg = Segment { vertex: v, from: k, steps };
        let Some(exit) = walker.exit_half(&seg) else { continue };
        path.push(seg);
        search(walker, c, walker.continue_at(exit), i + 1, count, closed, path, sols);
        path.pop();
    }
}

/// The homotopy word read off a curve (reduced first).
pub fn curve_to_word(c: &GradedCurve, p: &AlgebraPresentation, r: &RibbonComplex) -> Result<HomotopyWord, WordError> {
    let c = reduce_curve(c, r)?;
    let walker = Walker::new(r);
    let segs = c.segments.clone().unwrap_or_default();
    if segs.is_empty() {
        if c.kind != CurveKind::Arc || c.crossings.len() != 1 {
            return Err(WordError::Curve("a curve without segments crosses exactly one edge".into()));
        }
        return Ok(HomotopyWord::trivial(c.crossings[0], c.grading[0]));
    }
    let letters = segs.iter().map(|s| walker.letter_of_segment(s, p)).collect::<Result<Vec<_>, _>>()?;
    let (lp, rp) = (c.left_turn, c.right_turn);
    let body = letters[lp..letters.len() - rp].to_vec();
    let kind = match (c.kind, lp > 0, rp > 0) {
        (CurveKind::Closed, _, _) => WordKind::Band,
        (_, false, false) => WordKind::Finite,
        (_, false, true) => WordKind::RightInfinite,
        (_, true, false) => WordKind::LeftInfinite,
        (_, true, true) => WordKind::TwoSidedInfinite,
    };
    let grading = if c.kind == CurveKind::Closed { c.grading.clone() } else { c.grading[lp..c.grading.len() - rp].to_vec() };
    let w = HomotopyWord {
        kind,
        letters: body,
        left_period: letters[..lp].to_vec(),
        right_period: letters[letters.len() - rp..].to_vec(),
        trivial: None,
        grading,
    };
    let report = super::validate_word(&w, p);
    if !report.valid {
        return Err(WordError::Invalid(report.issues.iter().map(|i| i.clause.clone()).collect::<Vec<_>>().join("; ")));
    }
    Ok(w)
}

/// Removes bigons and spirals: a segment that turns zero corners either
/// backtracks over an ordinary edge (both crossings go and the neighbouring
/// segments merge) or spirals once around an orbifold point (one crossing
/// goes). Repeats until every segment turns.
pub fn reduce_curve(c: &GradedCurve, r: &RibbonComplex) -> Result<GradedCurve, WordError> {
    let walker = Walker::new(r);
    let mut segs = curve_segments(c, r)?;
    let closed = c.kind == CurveKind::Closed;
    // grading[j] is the value at the entry of segment j; arcs keep the final
    // exit value too, closed curves drop the repeated one until the end.
    let mut grading = c.grading.clone();
    if closed {
        grading.pop();
    }
    let (left, right) = (c.left_turn, c.right_turn);
    while let Some(i) = segs.iter().position(|s| s.steps == 0) {
        let n = segs.len();
        if i < left || i + right >= n {
            return Err(WordError::Curve("a spiralling end turns back".into()));
        }
        let h = walker.from_half(&segs[i]);
        if r.is_special_edge(r.edge_of(h)) {
            // Spiral: drop the zero segment and one of its two crossings.
            segs.remove(i);
            grading.remove(i);
            if segs.is_empty() {
                return Err(WordError::Contractible);
            }
            continue;
        }
        if closed {
            if n <= 2 {
                return Err(WordError::Contractible);
            }
            let prev = (i + n - 1) % n;
            let next = (i + 1) % n;
            segs[prev].steps += segs[next].steps;
            for j in [i.max(next), i.min(next)] {
                segs.remove(j);
                grading.remove(j);
            }
            continue;
        }
        if n == 1 {
            return Err(WordError::Contractible);
        }
        if i == 0 {
            // The curve crosses an edge and comes straight back, so the next
            // segment is only the start piece and carries no letter.
            segs.drain(0..2);
            grading.drain(0..2);
        } else if i == n - 1 {
            segs.truncate(n - 2);
            grading.truncate(grading.len() - 2);
        } else {
            segs[i - 1].steps += segs[i + 1].steps;
            segs.drain(i..i + 2);
            grading.drain(i..i + 2);
        }
        if segs.is_empty() {
            return Err(WordError::Contractible);
        }
    }
    if closed {
        grading.push(grading[0]);
    }
    if segs.is_empty() {
        return Ok(GradedCurve { segments: Some(segs), grading, ..c.clone() });
    }
    let crossings = walker.crossings(&segs, closed)?;
    let ends = if closed {
        Vec::new()
    } else {
        let start = if left > 0 { c.ends[0].clone() } else { walker.end_beyond(walker.from_half(&segs[0])) };
        let finish = if right > 0 {
            c.ends[1].clone()
        } else {
            walker.end_beyond(walker.exit_half(segs.last().expect("nonempty")).expect("valid"))
        };
        vec![start, finish]
    };
    Ok(GradedCurve { kind: c.kind, crossings, grading, ends, segments: Some(segs), left_turn: left, right_turn: right })
}

/// Same curve up to orientation (and rotation, for closed curves), compared
/// through the reduced words.
pub fn equivalent(
    a: &GradedCurve,
    b: &GradedCurve,
    p: &AlgebraPresentation,
    r: &RibbonComplex,
) -> Result<bool, WordError> {
    let wa = curve_to_word(a, p, r)?;
    let wb = curve_to_word(b, p, r)?;
    Ok(super::same_word(&wa, &wb))
}
