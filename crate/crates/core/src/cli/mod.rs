//! Command-line front end. Every subcommand reads an algebra presentation or
//! a dissection document (detected from its keys) and prints text, JSON or
//! DOT. Exit status: 0 on success, 1 when the input fails validation or a
//! check fails, 2 on I/O and schema errors.

pub mod battery;

use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra_core::{
    admissible_presentation, canonical_form, collapse, validate_skew_gentle, AlgebraError, AlgebraPresentation,
};
use crate::complexes::{band_complex, graded_dimension_vector, shift, string_complex, BandParameter, ComplexError};
use crate::corpus::corpus_generate;
use crate::fixtures;
use crate::groebner::{certify_strong_koszul, quadratic_dual, Coeff, GroebnerError};
use crate::invariants::{invariant_report, InvariantError};
use crate::strings_curves::{
    classify_symmetry, curve_to_word, word_to_curve, GradedCurve, HomotopyWord, WordError,
};
use crate::surface::{algebra_of_dissection, dissection, dual_graph, to_dot, to_dot_with_dual, OrbifoldDissection, SurfaceError};
use battery::{run_battery, BatteryBounds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "skewgentle", version, about = "Skew-gentle algebras, their orbifold dissections and derived invariants")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Input files are JSON documents; `fixture:NAME` loads a built-in example
/// (e1, e2, e3, e4, e4-open, chain).
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the skew-gentle axioms.
    Validate { input: String },
    /// Print the admissible presentation with split special vertices.
    Present { input: String },
    /// Strong-Koszul certificate and quadratic dual.
    Koszul { input: String },
    /// The orbifold dissection, its polygons and topology.
    Surface { input: String },
    /// The dual dissection, compared with the Koszul dual.
    Dual { input: String },
    /// Graded curve of a homotopy word, e.g. "a2.a3,a3~,a4~ (1,2,1,0)".
    #[command(name = "word2curve")]
    Word2Curve { input: String, word: String },
    /// Homotopy word of a curve document.
    #[command(name = "curve2word")]
    Curve2Word { input: String, curve: String },
    /// Projective complex of a string or band.
    Complex {
        input: String,
        word: String,
        /// Band polynomial, coefficients from the constant term up.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<i64>>,
        /// Multiplicities l,l',m,m' for a symmetric band.
        #[arg(long, value_delimiter = ',')]
        dimidiate: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Singularity profile, Gorenstein dimension and q-Cartan determinant.
    Invariants { input: String },
    /// Run every check over a seeded corpus and the built-in examples.
    Roundtrip {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_letters: usize,
        #[arg(long, default_value_t = 6)]
        max_arrows: usize,
    },
    /// Print a seeded corpus of algebras as a JSON array.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Io(_) | CliError::Schema(_) => 2,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotSkewGentle(_) => CliError::Validation(e.to_string()),
            _ => CliError::Schema(e.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Schema(_) | SurfaceError::Malformed(_) => CliError::Schema(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::Parse(_) | WordError::Schema(_) => CliError::Schema(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Validation(e.to_string())
    }
}

/// A parsed input document.
pub enum Input {
    Presentation(AlgebraPresentation),
    Dissection(OrbifoldDissection),
}

fn read_json(path: &str) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{path}: {e}")))
}

/// Loads a presentation (has `arrows`, or `vertices` given as names) or a
/// dissection (`vertices` given as objects).
pub fn load_input(path: &str) -> Result<Input, CliError> {
    if let Some(name) = path.strip_prefix("fixture:") {
        return fixtures::by_name(name)
            .map(Input::Presentation)
            .ok_or_else(|| CliError::Io(format!("unknown fixture `{name}`")));
    }
    let value = read_json(path)?;
    parse_input(&value)
}

pub fn parse_input(value: &Value) -> Result<Input, CliError> {
    let obj = value.as_object().ok_or_else(|| CliError::Schema("expected a JSON object".into()))?;
    let dissection_like = obj
        .get("vertices")
        .and_then(Value::as_array)
        .is_some_and(|vs| vs.first().is_some_and(Value::is_object));
    if dissection_like && !obj.contains_key("arrows") {
        return Ok(Input::Dissection(OrbifoldDissection::from_json(value)?));
    }
    if obj.contains_key("arrows") || obj.contains_key("vertices") {
        return Ok(Input::Presentation(AlgebraPresentation::from_json(value)?));
    }
    Err(CliError::Schema("neither a presentation nor a dissection document".into()))
}

fn algebra(input: &Input) -> Result<AlgebraPresentation, CliError> {
    match input {
        Input::Presentation(p) => Ok(p.clone()),
        Input::Dissection(d) => Ok(algebra_of_dissection(&d.ribbon)?),
    }
}

fn load_algebra(path: &str) -> Result<AlgebraPresentation, CliError> {
    let p = algebra(&load_input(path)?)?;
    let report = validate_skew_gentle(&p);
    if !report.is_valid() {
        let why: Vec<String> = report.failures().iter().map(|c| c.axiom.clone()).collect();
        return Err(CliError::Validation(format!("not skew-gentle: {}", why.join("; "))));
    }
    Ok(p)
}

/// Something to print: JSON, a text rendering, and optionally DOT.
struct Output {
    json: Value,
    text: String,
    dot: Option<String>,
    /// Set when the command ran but a check it reports on failed.
    failed: Option<String>,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, dot: None, failed: None }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialise")
}

fn validate_cmd(path: &str) -> Result<Output, CliError> {
    let p = algebra(&load_input(path)?)?;
    let report = validate_skew_gentle(&p);
    let json = serde_json::to_value(&report).expect("report serialises");
    let mut text = format!("class: {}\n", report.class);
    for c in &report.checks {
        let mark = if c.passed { "ok " } else { "FAIL" };
        text += &format!("  {mark} {}", c.axiom);
        if !c.offenders.is_empty() {
            text += &format!(" [{}]", c.offenders.join(", "));
        }
        text.push('\n');
    }
    let mut out = Output::new(json, text);
    if !report.is_valid() {
        out.failed = Some("input is not skew-gentle".into());
    }
    Ok(out)
}

fn present_cmd(path: &str) -> Result<Output, CliError> {
    let a = admissible_presentation(&load_algebra(path)?)?;
    let mut text = format!("vertices: {}\narrows:\n", a.quiver.vertices().join(" "));
    for arr in a.quiver.arrows() {
        text += &format!("  {}: {} -> {}\n", arr.name, arr.source, arr.target);
    }
    text += "relations:\n";
    for r in a.relation_strings() {
        text += &format!("  {r}\n");
    }
    Ok(Output::new(a.to_json(), text))
}

fn koszul_cmd(path: &str) -> Result<Output, CliError> {
    let a = admissible_presentation(&load_algebra(path)?)?;
    let (cert, _) = certify_strong_koszul(&a);
    let dual = quadratic_dual(&a)?;
    let collapsed = collapse(&dual)?;
    let json = json!({
        "certificate": cert.to_json(),
        "dual": dual.to_json(),
        "dual_presentation": collapsed.to_json(),
    });
    let mut text = format!("strong Koszul: {}\n", if cert.certified { "certified" } else { "NOT certified" });
    if let Some(f) = &cert.failure {
        text += &format!("  reason: {f}\n");
    }
    text += &format!("basis ({}):\n", cert.basis.len());
    for b in &cert.basis {
        text += &format!("  {b}\n");
    }
    text += &format!("overlaps checked: {}\n", cert.overlaps.len());
    text += "quadratic dual relations:\n";
    for r in dual.relation_strings() {
        text += &format!("  {r}\n");
    }
    let mut out = Output::new(json, text);
    if !cert.certified {
        out.failed = Some("certificate failed".into());
    }
    Ok(out)
}

fn dissection_of(input: &Input) -> Result<OrbifoldDissection, CliError> {
    match input {
        Input::Presentation(p) => Ok(dissection(p)?),
        Input::Dissection(d) => Ok(d.clone()),
    }
}

fn describe(d: &OrbifoldDissection) -> String {
    let t = &d.topology;
    let mut text = format!(
        "genus {} boundary {} punctures {} orbifold points {}\n",
        t.genus, t.boundary, t.punctures, t.orbifold
    );
    for line in d.ribbon.descriptor(true) {
        text += &format!("  {line}\n");
    }
    text += "polygons:\n";
    for p in &d.polygons.polygons {
        let sides: Vec<&str> = p.sides.iter().map(|&e| d.ribbon.edge_name(e)).collect();
        let kind = if p.boundary { "boundary" } else { "interior" };
        let deg = if p.is_degenerate() { " degenerate" } else { "" };
        text += &format!("  {kind}{deg} {}-gon: {}\n", p.size(), sides.join(" "));
    }
    text
}

fn surface_cmd(path: &str) -> Result<Output, CliError> {
    let input = load_input(path)?;
    if let Input::Presentation(p) = &input {
        load_algebra_checked(p)?;
    }
    let d = dissection_of(&input)?;
    let mut out = Output::new(d.to_json(), describe(&d));
    out.dot = Some(to_dot(&d.ribbon));
    Ok(out)
}

fn load_algebra_checked(p: &AlgebraPresentation) -> Result<(), CliError> {
    let report = validate_skew_gentle(p);
    if report.is_valid() {
        Ok(())
    } else {
        Err(CliError::Validation("not skew-gentle".into()))
    }
}

fn dual_cmd(path: &str) -> Result<Output, CliError> {
    let input = load_input(path)?;
    let p = algebra(&input)?;
    load_algebra_checked(&p)?;
    let d = dissection_of(&input)?;
    let dd = dual_graph(&d)?;
    let da = algebra_of_dissection(&dd.ribbon)?;
    let qd = collapse(&quadratic_dual(&admissible_presentation(&p)?)?)?;
    let matches = canonical_form(&da)? == canonical_form(&qd)?;
    let json = json!({
        "dual": dd.to_json(),
        "dual_algebra": da.to_json(),
        "koszul_dual": qd.to_json(),
        "match": matches,
    });
    let mut text = describe(&dd);
    text += &format!("algebra of the dual dissection matches the Koszul dual: {matches}\n");
    let mut out = Output::new(json, text);
    out.dot = Some(to_dot_with_dual(&d.ribbon, &dd.ribbon));
    if !matches {
        out.failed = Some("dual dissection and Koszul dual differ".into());
    }
    Ok(out)
}

fn word2curve_cmd(path: &str, word: &str) -> Result<Output, CliError> {
    let p = load_algebra(path)?;
    let d = dissection(&p)?;
    let w = HomotopyWord::parse(word, p.quiver())?;
    let c = word_to_curve(&w, &p, &d.ribbon)?;
    let names: Vec<&str> = c.crossings.iter().map(|&e| d.ribbon.edge_name(e)).collect();
    let grading: Vec<String> = c.grading.iter().map(i64::to_string).collect();
    let text = format!(
        "{:?} curve crossing {} with grading ({})\n",
        c.kind,
        names.join(","),
        grading.join(",")
    );
    Ok(Output::new(c.to_json(&d.ribbon), text))
}

fn curve2word_cmd(path: &str, curve: &str) -> Result<Output, CliError> {
    let p = load_algebra(path)?;
    let d = dissection(&p)?;
    let c = GradedCurve::from_json(&read_json(curve)?)?;
    let w = curve_to_word(&c, &p, &d.ribbon)?;
    let symmetry = classify_symmetry(&w, &p);
    let json = json!({
        "word": w.display(p.quiver()),
        "kind": w.kind,
        "grading": w.grading,
        "symmetry": symmetry,
    });
    Ok(Output::new(json, format!("{}\n", w.display(p.quiver()))))
}

fn complex_cmd(
    path: &str,
    word: &str,
    poly: Option<&[i64]>,
    dimidiate: Option<&[usize]>,
    by: i64,
) -> Result<Output, CliError> {
    let p = load_algebra(path)?;
    let a = admissible_presentation(&p)?;
    let w = HomotopyWord::parse(word, p.quiver())?;
    let c = if w.is_band() {
        let param = match (poly, dimidiate) {
            (Some(cs), None) => BandParameter::polynomial(cs.iter().map(|&x| Coeff::from_integer(x.into())).collect()),
            (None, Some(&[l, l_prime, m, m_prime])) => BandParameter::Dimidiate { l, l_prime, m, m_prime },
            (None, Some(_)) => return Err(CliError::Schema("--dimidiate takes four numbers".into())),
            (None, None) => BandParameter::polynomial(vec![Coeff::from_integer((-2).into()), Coeff::from_integer(1.into())]),
            (Some(_), Some(_)) => return Err(CliError::Schema("give either --poly or --dimidiate".into())),
        };
        band_complex(&w, &p, &a, &param)?
    } else {
        string_complex(&w, &p, &a)?
    };
    let c = shift(&c, by);
    let mut text = String::new();
    for (deg, counts) in graded_dimension_vector(&c, &a) {
        let terms: Vec<String> =
            counts.iter().map(|(v, n)| if *n == 1 { format!("P{v}") } else { format!("P{v}^{n}") }).collect();
        text += &format!("degree {deg}: {}\n", terms.join(" + "));
    }
    match &c.differential {
        Some(entries) => {
            for e in entries {
                let (f, t) = (&c.summands[e.from], &c.summands[e.to]);
                text += &format!(
                    "  d: P{}[{}] -> P{}[{}] by {}\n",
                    a.quiver.vertex_name(f.vertex),
                    f.position,
                    a.quiver.vertex_name(t.vertex),
                    t.position,
                    e.value.display(&a.quiver)
                );
            }
        }
        None => text += &format!("  {}\n", c.note.clone().unwrap_or_default()),
    }
    for (i, half) in c.dimidiate.iter().enumerate() {
        text += &format!("half {i}:\n");
        for (deg, counts) in graded_dimension_vector(half, &a) {
            let terms: Vec<String> = counts.keys().map(|v| format!("P{v}")).collect();
            text += &format!("  degree {deg}: {}\n", terms.join(" + "));
        }
    }
    Ok(Output::new(c.to_json(&a), text))
}

fn invariants_cmd(path: &str) -> Result<Output, CliError> {
    let p = load_algebra(path)?;
    let r = invariant_report(&p)?;
    let mut text = format!("singularity profile: {:?}\n", r.profile.sizes);
    text += &format!("saturated cycles: {:?}\n", r.saturated_cycles);
    text += &format!("Gorenstein dimension: {} (path oracle {})\n", r.gorenstein, r.gorenstein_oracle);
    match &r.cartan {
        Some(c) => {
            text += &format!("det C(q) = {}\n", c.det);
            text += &format!("product over interior polygons = {}\n", c.product);
            text += &format!("det C(q) of the gentle part = {}\n", c.gentle_det);
            text += &format!("match: {}\n", c.all_match());
        }
        None => text += "q-Cartan matrix: infinite-dimensional algebra\n",
    }
    Ok(Output::new(r.to_json(), text))
}

fn roundtrip_cmd(seed: u64, count: usize, bounds: BatteryBounds) -> Result<Output, CliError> {
    if count == 0 || bounds.max_letters == 0 || bounds.max_arrows == 0 {
        return Err(CliError::Schema("bounds must be positive".into()));
    }
    let mut inputs: Vec<(String, AlgebraPresentation)> =
        fixtures::all().into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    inputs.extend(corpus_generate(seed, count).into_iter().enumerate().map(|(i, p)| (format!("corpus-{i}"), p)));
    let t = run_battery(&inputs, bounds);
    let json = serde_json::to_value(&t).expect("tally serialises");
    let mut text = format!(
        "algebras {}\ncertified {}\nfinite-dimensional {}\ndual matches {}\nwords {} (mismatches {})\ncomplexes {} (d^2 failures {})\ndeterminant matches {}\nGorenstein matches {}\nEuler checks {}\n",
        t.algebras, t.certified, t.finite_dimensional, t.dual_match, t.words, t.word_mismatches, t.complexes,
        t.square_failures, t.determinant_match, t.gorenstein_match, t.euler_ok
    );
    for f in t.failures.iter().take(20) {
        text += &format!("FAIL {f}\n");
    }
    let mut out = Output::new(json, text);
    if !t.passed() {
        out.failed = Some(format!("{} checks failed", t.failures.len()));
    }
    Ok(out)
}

fn corpus_cmd(seed: u64, count: usize) -> Result<Output, CliError> {
    if count == 0 {
        return Err(CliError::Schema("count must be positive".into()));
    }
    let corpus = corpus_generate(seed, count);
    let json = Value::Array(corpus.iter().map(AlgebraPresentation::to_json).collect());
    let text = pretty(&json) + "\n";
    Ok(Output::new(json, text))
}

fn dispatch(cfg: &RunConfig) -> Result<Output, CliError> {
    match &cfg.command {
        Command::Validate { input } => validate_cmd(input),
        Command::Present { input } => present_cmd(input),
        Command::Koszul { input } => koszul_cmd(input),
        Command::Surface { input } => surface_cmd(input),
        Command::Dual { input } => dual_cmd(input),
        Command::Word2Curve { input, word } => word2curve_cmd(input, word),
        Command::Curve2Word { input, curve } => curve2word_cmd(input, curve),
        Command::Complex { input, word, poly, dimidiate, shift } => {
            complex_cmd(input, word, poly.as_deref(), dimidiate.as_deref(), *shift)
        }
        Command::Invariants { input } => invariants_cmd(input),
        Command::Roundtrip { seed, count, max_letters, max_arrows } => {
            roundtrip_cmd(*seed, *count, BatteryBounds { max_letters: *max_letters, max_arrows: *max_arrows })
        }
        Command::Corpus { seed, count } => corpus_cmd(*seed, *count),
    }
}

/// Runs one subcommand, writing results to `out` and diagnostics to `err`.
/// Returns the exit status.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = dispatch(cfg).and_then(|o| {
        let body = match cfg.format {
            Format::Json => pretty(&o.json) + "\n",
            Format::Text => o.text.clone(),
            Format::Dot => o
                .dot
                .clone()
                .ok_or_else(|| CliError::Schema("DOT output is only available for surface and dual".into()))?,
        };
        Ok((o, body))
    });
    match result {
        Ok((o, body)) => {
            if let Err(e) = out.write_all(body.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            match o.failed {
                Some(why) => {
                    let _ = writeln!(err, "check failed: {why}");
                    1
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
