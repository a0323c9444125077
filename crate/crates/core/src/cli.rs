//! The problem-file format and the command implementations behind the
//! `qgrass` binary.
//!
//! ```text
//! # loop and arrow
//! field: Q
//! loewy: 2
//! top: 1
//! dim: 3
//! quiver
//!   vertices: 1 2
//!   arrows: w: 1 -> 1, a: 1 -> 2
//! relations
//!   w^2
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::algebra::{AlgElement, AlgebraPresentation, ProjectiveCover, Top};
use crate::chart::chart_ideal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Subspace, Vector};
use crate::moduli::{
    check_corollary_4_5, cover_over_prime, finite_local_type_check, is_fully_invariant, orbit_dim,
    reduced_algebra, thm_4_2_condition_5, unipotent_orbit_dim, Provenance,
};
use crate::oracle::{cross_validate_chart, iso_classes, orbits, OracleScene, DEFAULT_BUDGET};
use crate::quiver::{Path, Quiver};
use crate::representation::{hom_dim, quotient_rep, submodule_rep, Representation};
use crate::skeleton::{enumerate_skeletons, Skeleton};

pub const SCHEMA_VERSION: &str = "1";

/// A parsed problem file.
#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub algebra: Arc<AlgebraPresentation>,
    pub top: Option<Top>,
    pub dim: Option<usize>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn semantic(line: usize, message: impl Into<String>) -> Error {
    Error::Semantic {
        line,
        message: message.into(),
    }
}

fn parse_field(s: &str) -> Option<Result<Field>> {
    if s == "Q" {
        return Some(Ok(Field::Rational));
    }
    let p: u32 = s.strip_prefix('F')?.parse().ok()?;
    Some(Field::prime(p))
}

#[derive(PartialEq)]
enum Block {
    Header,
    Quiver,
    Relations,
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut field = Field::Rational;
    let mut loewy: Option<usize> = None;
    let mut top_line: Option<(usize, String)> = None;
    let mut dim = None;
    let mut vertices: Option<(usize, Vec<String>)> = None;
    let mut arrows: Vec<(usize, String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, usize, String)> = Vec::new();
    let mut block = Block::Header;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let bare = trimmed.trim_end_matches(':').trim();
        if bare == "quiver" {
            block = Block::Quiver;
            continue;
        }
        if bare == "relations" {
            block = Block::Relations;
            continue;
        }
        let (key, value) = match trimmed.split_once(':') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => ("", trimmed),
        };
        // 0-based offset of the value within the line
        let value_col = indent
            + trimmed
                .find(':')
                .map(|c| c + 1 + (trimmed[c + 1..].len() - trimmed[c + 1..].trim_start().len()))
                .unwrap_or(0);
        match key {
            "field" => {
                field = parse_field(value)
                    .ok_or_else(|| parse_err(line_no, value_col + 1, format!("expected Q or F<p>, found {value:?}")))?
                    .map_err(|e| parse_err(line_no, value_col + 1, e.to_string()))?;
                block = Block::Header;
            }
            "loewy" => {
                loewy = Some(value.parse().map_err(|_| parse_err(line_no, value_col + 1, "expected a non-negative integer"))?);
                block = Block::Header;
            }
            "top" => {
                top_line = Some((line_no, value.to_string()));
                block = Block::Header;
            }
            "dim" => {
                dim = Some(value.parse().map_err(|_| parse_err(line_no, value_col + 1, "expected a non-negative integer"))?);
                block = Block::Header;
            }
            "vertices" if block == Block::Quiver => {
                vertices = Some((line_no, value.split_whitespace().map(String::from).collect()));
            }
            "arrows" if block == Block::Quiver => {
                let mut col = value_col;
                for item in value.split(',') {
                    let item_col = col + (item.len() - item.trim_start().len()) + 1;
                    col += item.len() + 1;
                    let item = item.trim();
                    if item.is_empty() {
                        continue;
                    }
                    let (name, ends) = item
                        .split_once(':')
                        .ok_or_else(|| parse_err(line_no, item_col, "expected `name: source -> target`"))?;
                    let (s, t) = ends
                        .split_once("->")
                        .ok_or_else(|| parse_err(line_no, item_col, "expected `->` between source and target"))?;
                    let name = name.trim();
                    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return Err(parse_err(line_no, item_col, format!("bad arrow name {name:?}")));
                    }
                    arrows.push((line_no, name.to_string(), s.trim().to_string(), t.trim().to_string()));
                }
            }
            _ if block == Block::Relations => {
                let mut col = indent;
                for piece in trimmed.split(',') {
                    let lead = piece.len() - piece.trim_start().len();
                    if !piece.trim().is_empty() {
                        relation_lines.push((line_no, col + lead + 1, piece.trim().to_string()));
                    }
                    col += piece.len() + 1;
                }
            }
            _ => {
                return Err(parse_err(line_no, indent + 1, format!("unexpected line {trimmed:?}")));
            }
        }
    }

    let (vline, vertex_labels) = vertices.ok_or_else(|| semantic(0, "missing `vertices:` in the quiver block"))?;
    let loewy = loewy.ok_or_else(|| semantic(0, "missing `loewy:`"))?;
    for (line, name, s, t) in &arrows {
        for v in [s, t] {
            if !vertex_labels.contains(v) {
                return Err(semantic(*line, format!("arrow {name}: unknown vertex {v}")));
            }
        }
    }
    let quiver = Quiver::new(
        vertex_labels.clone(),
        arrows.iter().map(|(_, n, s, t)| (n.clone(), s.clone(), t.clone())),
    )
    .map_err(|e| semantic(vline, e.to_string()))?;
    let relations = relation_lines
        .iter()
        .map(|(line, col, text)| parse_element(&quiver, field, text, *line, *col))
        .collect::<Result<Vec<_>>>()?;
    let top = match top_line {
        Some((line, s)) => Some(parse_top(&quiver, &s).map_err(|e| semantic(line, e.to_string()))?),
        None => None,
    };
    let algebra = AlgebraPresentation::build(quiver, relations, loewy, field)?;
    Ok(ProblemFile {
        algebra: Arc::new(algebra),
        top,
        dim,
    })
}

/// Vertex labels separated by spaces or commas; repeats give multiplicities.
pub fn parse_top(quiver: &Quiver, s: &str) -> Result<Top> {
    let vs = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let t = t.strip_prefix('S').unwrap_or(t);
            quiver
                .vertex_by_label(t)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {t}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if vs.is_empty() {
        return Err(Error::InvalidInput("empty top".into()));
    }
    Ok(Top::new(vs))
}

/// Parses one path: `*`-separated arrow names read right to left, `x^k`
/// for repeated factors, `e<label>` for a vertex.
pub fn parse_path(quiver: &Quiver, s: &str) -> Result<Path> {
    let s = s.trim();
    if let Some(label) = s.strip_prefix('e') {
        if let Some(v) = quiver.vertex_by_label(label) {
            if quiver.arrow_by_name(s).is_none() {
                return Ok(Path::vertex(v));
            }
        }
    }
    let mut arrows = Vec::new();
    for factor in s.split('*').rev() {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, k)) => (
                n.trim(),
                k.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let a = quiver
            .arrow_by_name(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown arrow {name:?}")))?;
        arrows.extend(std::iter::repeat_n(a, power));
    }
    let start = arrows
        .first()
        .map(|&a| quiver.arrow(a).source)
        .ok_or_else(|| Error::InvalidInput("empty path".into()))?;
    quiver
        .path_from_arrows(start, &arrows)
        .ok_or_else(|| Error::InvalidInput(format!("{s} is not a path: arrows do not compose")))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses a linear combination of paths such as `a1*w1 - 1/2*a2*w2`.
pub fn parse_element(quiver: &Quiver, field: Field, text: &str, line: usize, column: usize) -> Result<AlgElement> {
    // split into signed terms, remembering the column of each
    let mut terms: Vec<(bool, usize, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut start = column;
    for (i, ch) in text.char_indices() {
        if (ch == '+' || ch == '-') && !current.trim().is_empty() && !current.trim_end().ends_with('/') {
            terms.push((negative, start, current.trim().to_string()));
            current.clear();
            negative = ch == '-';
            start = column + i + 1;
        } else if (ch == '+' || ch == '-') && current.trim().is_empty() {
            if ch == '-' {
                negative = !negative;
            }
            start = column + i + 1;
        } else {
            if current.is_empty() && ch.is_whitespace() {
                start = column + i + 1;
                continue;
            }
            current.push(ch);
        }
    }
    if current.trim().is_empty() {
        return Err(parse_err(line, column + text.len(), "expected a term"));
    }
    terms.push((negative, start, current.trim().to_string()));

    let mut out = AlgElement::zero(field);
    for (neg, col, term) in terms {
        let (coef, path_text) = match term.split_once('*') {
            Some((head, rest)) if head.trim().starts_with(|c: char| c.is_ascii_digit()) => {
                let q = parse_rational(head.trim())
                    .ok_or_else(|| parse_err(line, col, format!("bad coefficient {:?}", head.trim())))?;
                (q, rest.trim().to_string())
            }
            _ if term.starts_with(|c: char| c.is_ascii_digit()) => {
                return Err(parse_err(line, col, format!("coefficient without a path in {term:?}")));
            }
            _ => (BigRational::from_integer(1.into()), term.clone()),
        };
        let c = field.from_rational(&coef).map_err(|e| parse_err(line, col, e.to_string()))?;
        let c = if neg { -&c } else { c };
        let path = parse_path(quiver, &path_text).map_err(|e| semantic(line, e.to_string()))?;
        out.add_term(path, c);
    }
    Ok(out)
}

/// Renders a problem file in canonical form; parsing it back gives the
/// same problem.
pub fn render_problem(problem: &ProblemFile) -> String {
    let a = &problem.algebra;
    let q = a.quiver();
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", field_name(a.field()));
    let _ = writeln!(out, "loewy: {}", a.loewy());
    if let Some(top) = &problem.top {
        let labels: Vec<&str> = top.vertices().iter().map(|&v| q.vertex_label(v)).collect();
        let _ = writeln!(out, "top: {}", labels.join(" "));
    }
    if let Some(d) = problem.dim {
        let _ = writeln!(out, "dim: {d}");
    }
    out.push_str("quiver\n");
    let _ = writeln!(out, "  vertices: {}", q.vertex_labels().join(" "));
    if q.num_arrows() > 0 {
        let arrows: Vec<String> = q
            .arrows()
            .iter()
            .map(|x| format!("{}: {} -> {}", x.name, q.vertex_label(x.source), q.vertex_label(x.target)))
            .collect();
        let _ = writeln!(out, "  arrows: {}", arrows.join(", "));
    }
    out.push_str("relations\n");
    for r in a.relations() {
        let _ = writeln!(out, "  {}", r.display(q));
    }
    out
}

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F{p}"),
    }
}

/// The subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Skeletons,
    Chart,
    ChartsAll,
    Layering,
    Hom,
    InvariantCheck,
    ModuliCheck,
    OrbitDims,
    Enumerate,
    CrossValidate,
    LocalType,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Skeletons,
        Command::Chart,
        Command::ChartsAll,
        Command::Layering,
        Command::Hom,
        Command::InvariantCheck,
        Command::ModuliCheck,
        Command::OrbitDims,
        Command::Enumerate,
        Command::CrossValidate,
        Command::LocalType,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Skeletons => "skeletons",
            Command::Chart => "chart",
            Command::ChartsAll => "charts-all",
            Command::Layering => "layering",
            Command::Hom => "hom",
            Command::InvariantCheck => "invariant-check",
            Command::ModuliCheck => "moduli-check",
            Command::OrbitDims => "orbit-dims",
            Command::Enumerate => "enumerate",
            Command::CrossValidate => "cross-validate",
            Command::LocalType => "local-type",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Flags shared by all commands; each command reads the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub top: Option<String>,
    pub dim: Option<usize>,
    pub skeleton: Option<String>,
    pub prune: bool,
    pub json: bool,
    pub budget: Option<u128>,
    pub field: Option<String>,
    pub q: Option<u32>,
    pub sub: Option<String>,
}

/// Rendered output. `ok` is false when a check reported a negative verdict.
#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub text: String,
    pub ok: bool,
}

/// Exit status for a command result: 0 success, 1 negative check, 2 input error.
pub fn exit_code(result: &Result<CommandOutput>) -> i32 {
    match result {
        Ok(out) if out.ok => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

struct Context {
    algebra: Arc<AlgebraPresentation>,
    options: Options,
    top: Option<Top>,
    dim: Option<usize>,
}

impl Context {
    fn quiver(&self) -> &Quiver {
        self.algebra.quiver()
    }

    fn top(&self) -> Result<Top> {
        self.top
            .clone()
            .ok_or_else(|| Error::InvalidInput("no top given (use --top or a `top:` line)".into()))
    }

    fn simple_top(&self) -> Result<usize> {
        let t = self.top()?;
        if !t.is_simple() {
            return Err(Error::InvalidInput("this command needs a simple top".into()));
        }
        Ok(t.vertices()[0])
    }

    fn dim(&self) -> Result<usize> {
        self.dim
            .ok_or_else(|| Error::InvalidInput("no dimension given (use --dim or a `dim:` line)".into()))
    }

    fn cover(&self) -> Result<ProjectiveCover> {
        ProjectiveCover::new(self.algebra.clone(), &self.top()?)
    }

    fn budget(&self) -> u128 {
        self.options.budget.unwrap_or(DEFAULT_BUDGET)
    }

    fn q(&self) -> u32 {
        match (self.options.q, self.algebra.field()) {
            (Some(q), _) => q,
            (None, Field::Prime(p)) => p,
            (None, Field::Rational) => 2,
        }
    }

    fn oracle_cover(&self) -> Result<ProjectiveCover> {
        let top = self.top()?;
        let q = self.q();
        if Field::prime(q).is_err() {
            return Err(Error::InvalidInput(format!("--q {q} is not a supported prime")));
        }
        cover_over_prime(&self.algebra, &top, q)
    }

    fn skeleton(&self) -> Result<Skeleton> {
        let text = self
            .options
            .skeleton
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("no skeleton given (use --skeleton)".into()))?;
        let paths = text
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_path(self.quiver(), s))
            .collect::<Result<Vec<_>>>()?;
        Skeleton::new(&self.algebra, &self.top()?, paths)
    }

    /// The submodule generated by `--sub`.
    fn submodule(&self, cover: &ProjectiveCover) -> Result<Subspace> {
        let text = self
            .options
            .sub
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("no submodule given (use --sub)".into()))?;
        let field = cover.field();
        let gens = text
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                let x = parse_element(self.quiver(), field, s, 0, 1)?;
                let start = x
                    .terms()
                    .next()
                    .map(|(p, _)| p.start())
                    .ok_or_else(|| Error::InvalidInput("zero generator".into()))?;
                if x.terms().any(|(p, _)| p.start() != start) {
                    return Err(Error::InvalidInput(format!("generator {s:?} mixes start vertices")));
                }
                let slot = (0..cover.top().len())
                    .find(|&s| cover.slot_vertex(s) == start)
                    .ok_or_else(|| Error::InvalidInput(format!("generator {s:?} does not start at a top vertex")))?;
                Ok(cover.embed(slot, &cover.algebra().normal_form(&x)))
            })
            .collect::<Result<Vec<Vector>>>()?;
        let c = cover.generated_submodule(gens);
        if !cover.radical_power(1).contains_subspace(&c) {
            return Err(Error::InvalidInput("the generated submodule is not contained in JP".into()));
        }
        Ok(c)
    }
}

fn count(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn strings(v: impl IntoIterator<Item = String>) -> Value {
    Value::Array(v.into_iter().map(Value::String).collect())
}

fn skeleton_json(q: &Quiver, s: &Skeleton) -> Value {
    strings(s.paths().iter().map(|p| q.path_name(p)))
}

fn render_subspace(cover: &ProjectiveCover, c: &Subspace) -> String {
    if c.dim() == 0 {
        return "0".into();
    }
    let parts: Vec<String> = c.basis().iter().map(|b| cover.render(b)).collect();
    format!("span({})", parts.join(", "))
}

/// Runs one command on a parsed problem.
pub fn run_command(problem: &ProblemFile, command: Command, options: &Options) -> Result<CommandOutput> {
    let algebra = match options.field.as_deref() {
        None => problem.algebra.clone(),
        Some(name) => {
            let f = parse_field(name)
                .ok_or_else(|| Error::InvalidInput(format!("--field expects Q or F<p>, found {name:?}")))??;
            match (problem.algebra.field(), f) {
                (a, b) if a == b => problem.algebra.clone(),
                (Field::Rational, Field::Prime(p)) => Arc::new(reduced_algebra(&problem.algebra, p)?),
                _ => {
                    return Err(Error::FieldMismatch(format!(
                        "cannot move an algebra over {} to {name}",
                        field_name(problem.algebra.field())
                    )))
                }
            }
        }
    };
    let top = match &options.top {
        Some(s) => Some(parse_top(algebra.quiver(), s)?),
        None => problem.top.clone(),
    };
    let ctx = Context {
        algebra,
        options: options.clone(),
        top,
        dim: options.dim.or(problem.dim),
    };
    let out = match command {
        Command::Skeletons => skeletons(&ctx),
        Command::Chart => chart(&ctx),
        Command::ChartsAll => charts_all(&ctx),
        Command::Layering => layering(&ctx),
        Command::Hom => hom_cmd(&ctx),
        Command::InvariantCheck => invariant_check(&ctx),
        Command::ModuliCheck => moduli_check(&ctx),
        Command::OrbitDims => orbit_dims(&ctx),
        Command::Enumerate => enumerate(&ctx),
        Command::CrossValidate => cross_validate(&ctx),
        Command::LocalType => local_type(&ctx),
    }?;
    Ok(out)
}

fn finish(ctx: &Context, command: Command, mut doc: Value, text: String, ok: bool) -> CommandOutput {
    if ctx.options.json {
        let obj = doc.as_object_mut().expect("json object");
        obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(command.name()));
        obj.insert("ok".into(), json!(ok));
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
        text.push('\n');
        CommandOutput { text, ok }
    } else {
        CommandOutput { text, ok }
    }
}

fn skeletons(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let d = ctx.dim()?;
    let list = enumerate_skeletons(&cover, d, ctx.options.prune)?;
    let q = ctx.quiver();
    let mut text = String::new();
    for s in &list {
        let _ = writeln!(text, "{}", s.display(q));
    }
    let _ = writeln!(text, "{}", count(list.len(), "skeleton"));
    let doc = json!({
        "dim": d,
        "pruned": ctx.options.prune,
        "skeletons": list.iter().map(|s| skeleton_json(q, s)).collect::<Vec<_>>(),
    });
    Ok(finish(ctx, Command::Skeletons, doc, text, true))
}

fn chart_json_and_text(ctx: &Context, cover: &ProjectiveCover, sigma: &Skeleton) -> Result<(Value, String)> {
    let q = ctx.quiver();
    let ideal = chart_ideal(cover, sigma)?;
    let mut text = String::new();
    let _ = writeln!(text, "skeleton: {}", sigma.display(q));
    let _ = writeln!(text, "variables: {}", ideal.num_variables());
    let vars: Vec<String> = (0..ideal.num_variables()).map(|i| ideal.describe_variable(q, i)).collect();
    for (i, v) in vars.iter().enumerate() {
        let _ = writeln!(text, "  X{} = {v}", i + 1);
    }
    let polys: Vec<String> = (0..ideal.polynomials().len()).map(|i| ideal.render_polynomial(i)).collect();
    let _ = writeln!(text, "polynomials: {}", polys.len());
    for p in &polys {
        let _ = writeln!(text, "  {p} = 0");
    }
    let doc = json!({
        "skeleton": skeleton_json(q, sigma),
        "variables": strings(vars),
        "polynomials": strings(polys),
    });
    Ok((doc, text))
}

fn chart(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let sigma = ctx.skeleton()?;
    if let Some(d) = ctx.dim {
        if d != sigma.dim() {
            return Err(Error::InvalidInput(format!("skeleton has {} paths, --dim is {d}", sigma.dim())));
        }
    }
    let (doc, text) = chart_json_and_text(ctx, &cover, &sigma)?;
    Ok(finish(ctx, Command::Chart, doc, text, true))
}

fn charts_all(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let d = ctx.dim()?;
    let list = enumerate_skeletons(&cover, d, true)?;
    let mut text = String::new();
    let mut docs = Vec::new();
    for (i, s) in list.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        let (doc, t) = chart_json_and_text(ctx, &cover, s)?;
        text.push_str(&t);
        docs.push(doc);
    }
    let _ = writeln!(text, "{}", count(list.len(), "chart"));
    Ok(finish(ctx, Command::ChartsAll, json!({ "dim": d, "charts": docs }), text, true))
}

fn layering(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let q = ctx.quiver();
    let m = match ctx.options.sub {
        Some(_) => quotient_rep(&cover, &ctx.submodule(&cover)?)?,
        None => Representation::of_projective(&cover),
    };
    let s = m.radical_layering(ctx.algebra.loewy());
    let shown = s.display(q).to_string();
    let doc = json!({
        "layering": shown,
        "dimension_vector": s.dim_vector(),
    });
    Ok(finish(ctx, Command::Layering, doc, format!("{shown}\n"), true))
}

fn hom_cmd(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let quiver = ctx.quiver();
    let p = Representation::of_projective(&cover);
    let jp = p.radical(quiver);
    let mut rows: Vec<(String, usize)> = vec![
        ("End(P)".into(), hom_dim(&p, &p)),
        ("Hom(P, JP)".into(), hom_dim(&p, &jp)),
    ];
    if ctx.options.sub.is_some() {
        let c = ctx.submodule(&cover)?;
        let cm = submodule_rep(&cover, &c)?;
        let m = quotient_rep(&cover, &c)?;
        let jm = m.radical(quiver);
        rows.push(("Hom(P, C)".into(), hom_dim(&p, &cm)));
        rows.push(("End(P/C)".into(), hom_dim(&m, &m)));
        rows.push(("Hom(P/C, J(P/C))".into(), hom_dim(&m, &jm)));
    }
    let mut text = String::new();
    for (k, v) in &rows {
        let _ = writeln!(text, "dim {k} = {v}");
    }
    let doc = json!({
        "dimensions": rows.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<serde_json::Map<_, _>>(),
    });
    Ok(finish(ctx, Command::Hom, doc, text, true))
}

fn invariant_check(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let c = ctx.submodule(&cover)?;
    let (inv, witness) = is_fully_invariant(&cover, &c)?;
    let shown = render_subspace(&cover, &c);
    let text = match &witness {
        None => format!("C = {shown} is fully invariant\n"),
        Some(w) => format!("C = {shown} is not fully invariant: {}\n", w.describe(&cover)),
    };
    let doc = json!({
        "submodule": shown,
        "fully_invariant": inv,
        "witness": witness.map(|w| w.describe(&cover)),
    });
    Ok(finish(ctx, Command::InvariantCheck, doc, text, inv))
}

fn moduli_check(ctx: &Context) -> Result<CommandOutput> {
    let e = ctx.simple_top()?;
    let report = check_corollary_4_5(&ctx.algebra, e, ctx.q(), ctx.budget())?;
    let q = ctx.quiver();
    let text = if report.holds {
        match report.provenance {
            Provenance::Symbolic => format!("{}: moduli space exists for all d\n", report.reason),
            Provenance::FiniteField(_) => {
                format!("{} ({}): moduli space exists for all d\n", report.reason, report.provenance)
            }
        }
    } else {
        format!("{} ({}): no moduli space for some d\n", report.reason, report.provenance)
    };
    let doc = json!({
        "holds": report.holds,
        "reason": report.reason,
        "provenance": report.provenance.to_string(),
        "witness": report.witness.as_ref().map(|w| json!({
            "lambda": w.lambda.display(q).to_string(),
            "omega": q.path_name(&w.omega),
        })),
    });
    Ok(finish(ctx, Command::ModuliCheck, doc, text, report.holds))
}

fn orbit_dims(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.cover()?;
    let c = ctx.submodule(&cover)?;
    let od = orbit_dim(&cover, &c)?;
    let ud = unipotent_orbit_dim(&cover, &c)?;
    let c5 = thm_4_2_condition_5(&cover, &c)?;
    let shown = render_subspace(&cover, &c);
    let mut text = format!("C = {shown}\norbit dimension: {od}\nunipotent orbit dimension: {ud}\n");
    let _ = writeln!(text, "mu = t + dim Hom(M, JM): {c5}");
    if !cover.top().is_simple() {
        text.push_str("direct sum of local modules: unchecked\n");
    }
    let doc = json!({
        "submodule": shown,
        "orbit_dim": od,
        "unipotent_orbit_dim": ud,
        "condition_5": c5,
        "local_summands_checked": cover.top().is_simple(),
    });
    Ok(finish(ctx, Command::OrbitDims, doc, text, true))
}

fn enumerate(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.oracle_cover()?;
    let d = ctx.dim()?;
    let budget = ctx.budget();
    let scene = OracleScene::new(cover.clone(), d, budget)?;
    let quiver = ctx.quiver();
    let part = orbits(&scene, budget)?;
    let classes = iso_classes(&scene, budget)?;
    let mut class_of = vec![0; scene.len()];
    for (k, c) in classes.iter().enumerate() {
        for &i in c {
            class_of[i] = k;
        }
    }
    let mut text = String::new();
    let _ = writeln!(text, "points: {} over F{}", scene.len(), scene.q());
    let sizes: Vec<String> = part.sizes().iter().map(|s| s.to_string()).collect();
    let _ = writeln!(
        text,
        "orbits: {} (sizes {}) [{}]",
        part.orbits.len(),
        sizes.join(", "),
        part.method.as_str()
    );
    let _ = writeln!(text, "iso classes: {}", classes.len());
    let layering_classes = scene.layering_classes();
    let _ = writeln!(text, "layering classes: {}", layering_classes.len());
    for (s, members) in &layering_classes {
        let _ = writeln!(text, "  {}: {}", s.display(quiver), count(members.len(), "point"));
    }
    let mut points = Vec::new();
    for (i, c) in scene.points().iter().enumerate() {
        let shown = render_subspace(&cover, c);
        let lay = scene.layering(i).display(quiver).to_string();
        let _ = writeln!(
            text,
            "point {i}: C = {shown}, layering {lay}, orbit {}, class {}",
            part.orbit_of[i], class_of[i]
        );
        points.push(json!({
            "submodule": shown,
            "layering": lay,
            "orbit": part.orbit_of[i],
            "iso_class": class_of[i],
        }));
    }
    let doc = json!({
        "q": scene.q(),
        "dim": d,
        "points": points,
        "orbit_sizes": part.sizes(),
        "orbit_method": part.method.as_str(),
        "iso_classes": classes.len(),
    });
    Ok(finish(ctx, Command::Enumerate, doc, text, true))
}

fn cross_validate(ctx: &Context) -> Result<CommandOutput> {
    let cover = ctx.oracle_cover()?;
    cover.top().check_squarefree(cover.algebra().quiver())?;
    let d = ctx.dim()?;
    let budget = ctx.budget();
    let scene = OracleScene::new(cover.clone(), d, budget)?;
    let quiver = ctx.quiver();
    let list = match ctx.options.skeleton {
        Some(_) => {
            let s = ctx.skeleton()?;
            vec![Skeleton::new(cover.algebra(), cover.top(), s.paths().to_vec())?]
        }
        None => enumerate_skeletons(&cover, d, true)?,
    };
    let mut text = String::new();
    let mut ok = true;
    let mut docs = Vec::new();
    for s in &list {
        let r = cross_validate_chart(&scene, s, budget)?;
        ok &= r.is_ok();
        let _ = writeln!(
            text,
            "{}: solutions {}, points {}, {}",
            s.display(quiver),
            r.solutions,
            r.oracle_points,
            if r.is_ok() { "ok" } else { "MISMATCH" }
        );
        for m in &r.mismatches {
            let _ = writeln!(text, "  {m}");
        }
        docs.push(json!({
            "skeleton": skeleton_json(quiver, s),
            "solutions": r.solutions,
            "points": r.oracle_points,
            "mismatches": r.mismatches,
        }));
    }
    let doc = json!({ "q": scene.q(), "dim": d, "charts": docs });
    Ok(finish(ctx, Command::CrossValidate, doc, text, ok))
}

fn local_type(ctx: &Context) -> Result<CommandOutput> {
    let e = ctx.simple_top()?;
    let q = ctx.q();
    let report = finite_local_type_check(&ctx.algebra, e, q, ctx.budget())?;
    let mut text = String::new();
    let mut docs = Vec::new();
    for en in &report.entries {
        let _ = writeln!(
            text,
            "d = {}: points {}, layering classes {}, iso classes {}, orbits {}, layering determines class {}, charts are orbits {}",
            en.d,
            en.points,
            en.layering_classes,
            en.iso_classes,
            en.orbits,
            en.layering_determines_iso,
            en.charts_single_orbit
        );
        if let Some(s) = &en.failing_skeleton {
            let _ = writeln!(text, "  Grass({s}) meets several orbits");
        }
        docs.push(json!({
            "d": en.d,
            "points": en.points,
            "layering_classes": en.layering_classes,
            "iso_classes": en.iso_classes,
            "orbits": en.orbits,
            "layering_determines_iso": en.layering_determines_iso,
            "charts_single_orbit": en.charts_single_orbit,
        }));
    }
    let _ = writeln!(
        text,
        "finite local type at S{}: {} ({})",
        ctx.quiver().vertex_label(e),
        report.verdict,
        report.provenance
    );
    let doc = json!({
        "q": q,
        "entries": docs,
        "verdict": report.verdict,
        "provenance": report.provenance.to_string(),
    });
    Ok(finish(ctx, Command::LocalType, doc, text, report.verdict))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LOOP: &str = "\
# loop and arrow
field: Q
loewy: 2
quiver
  vertices: 1 2
  arrows: w: 1 -> 1, a: 1 -> 2
relations
  w^2
";

    #[test]
    fn parses_and_round_trips() {
        let p = parse_problem(LOOP).unwrap();
        assert_eq!(p.algebra.quiver().num_vertices(), 2);
        assert_eq!(p.algebra.quiver().num_arrows(), 2);
        assert_eq!(p.algebra.loewy(), 2);
        let text = render_problem(&p);
        let back = parse_problem(&text).unwrap();
        assert_eq!(render_problem(&back), text);
        assert_eq!(back.algebra.basis(), p.algebra.basis());
    }

    #[test]
    fn rational_coefficients_and_commas() {
        let text = "loewy: 2\nquiver\n vertices: 1 2\n arrows: w1: 1 -> 1, w2: 1 -> 1, a: 1 -> 2\nrelations\n w1*w1, w1*w2, w2*w1, w2*w2\n a*w1 - 1/2*a*w2\n";
        let p = parse_problem(text).unwrap();
        let q = p.algebra.quiver();
        assert_eq!(p.algebra.relations()[4].display(q).to_string(), "a*w1 - 1/2*a*w2");
        let again = parse_problem(&render_problem(&p)).unwrap();
        assert_eq!(again.algebra.relations(), p.algebra.relations());
    }

    #[test]
    fn errors_carry_locations() {
        let bad = LOOP.replace("w^2", "w*b");
        assert!(matches!(parse_problem(&bad), Err(Error::Semantic { line: 8, .. })));
        let bad = LOOP.replace("loewy: 2", "loewy: two");
        assert!(matches!(parse_problem(&bad), Err(Error::Parse { line: 3, column: 8, .. })));
        let bad = LOOP.replace("w: 1 -> 1", "w: 1 -> 7");
        assert!(matches!(parse_problem(&bad), Err(Error::Semantic { line: 6, .. })));
        let bad = LOOP.replace("w^2", "a*a");
        assert!(matches!(parse_problem(&bad), Err(Error::Semantic { .. })));
    }

    #[test]
    fn empty_relations_give_hereditary_algebra() {
        let text = "loewy: 1\nquiver\n vertices: 1 2\n arrows: a: 1 -> 2\nrelations\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.algebra.dim(), 3);
        let too_small = text.replace("loewy: 1", "loewy: 0");
        assert!(matches!(parse_problem(&too_small), Err(Error::LoewyBound { .. })));
    }
}
