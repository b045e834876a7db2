//! The line-oriented workspace format.
//!
//! ```text
//! # comments run to the end of the line
//! [field]
//! prime 2
//!
//! [quiver]
//! vertices v
//! arrow x v v
//!
//! [relations]
//! x*x
//!
//! [module S]
//! dims 1
//! x []
//!
//! [module A]
//! projective v
//!
//! [subcategory X]
//! add A
//!
//! [hovey FT]
//! C all
//! W X
//! F all
//! witnesses frobenius
//!
//! [registry]
//! S, A
//! ```
//!
//! Matrices are row lists of integers, `[]` standing for any matrix with a
//! zero dimension. A morphism lists one matrix per vertex separated by `;`.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;
use std::sync::Arc;

use stabcat::exact::Conflation;
use stabcat::module::{direct_sum, parse_relation, Arrow};
use stabcat::{Algebra, Category, FieldSpec, HoveyTriple, Matrix, Module, Morphism, Subcategory, WitnessProvider, WitnessTable};

use crate::error::{CliError, CliResult};

const DEFAULT_PATH_CAP: usize = 8;
const MODULE_KEYS: [&str; 5] = ["dims", "simple", "projective", "injective", "sum"];

/// A parsed and validated workspace.
#[derive(Debug)]
pub struct Workspace {
    pub source: String,
    pub field: FieldSpec,
    pub algebra: Arc<Algebra>,
    pub modules: Vec<(String, Module)>,
    pub subcategories: Vec<(String, Subcategory)>,
    pub witnesses: Vec<(String, Arc<WitnessTable>)>,
    pub triples: Vec<HoveyTriple>,
    pub category: Category,
}

impl Workspace {
    pub fn module(&self, name: &str) -> CliResult<&Module> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m).ok_or_else(|| CliError::Unresolved(format!("module {name}")))
    }

    /// A declared subcategory, or the keywords `all` and `zero`.
    pub fn subcategory(&self, name: &str) -> CliResult<Subcategory> {
        match name {
            "all" => Ok(Subcategory::all("A")),
            "zero" => Ok(Subcategory::zero("0")),
            _ => self
                .subcategories
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, s)| s.clone())
                .ok_or_else(|| CliError::Unresolved(format!("subcategory {name}"))),
        }
    }

    /// The named triple, or the first one declared.
    pub fn triple(&self, name: Option<&str>) -> CliResult<&HoveyTriple> {
        match name {
            Some(n) => self.triples.iter().find(|t| t.name == n).ok_or_else(|| CliError::Unresolved(format!("hovey triple {n}"))),
            None => self.triples.first().ok_or_else(|| CliError::Unresolved("the workspace declares no hovey triple".into())),
        }
    }

    pub fn registry(&self) -> &[Module] {
        self.category.registry()
    }
}

pub fn parse_workspace(path: &Path) -> CliResult<Workspace> {
    let label = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: label.clone(), source })?;
    parse_workspace_str(&text, &label)
}

#[derive(Clone, Copy)]
struct Tok<'a> {
    col: usize,
    text: &'a str,
}

struct Line<'a> {
    no: usize,
    /// Column of the first character of `text`.
    col: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn tokens(&self) -> Vec<Tok<'a>> {
        let mut out = Vec::new();
        let mut start: Option<(usize, usize)> = None;
        for (ci, (bi, ch)) in self.text.char_indices().enumerate() {
            let sep = ch.is_whitespace() || ch == ',';
            match (sep, start) {
                (true, Some((b0, c0))) => {
                    out.push(Tok { col: self.col + c0, text: &self.text[b0..bi] });
                    start = None;
                }
                (false, None) => start = Some((bi, ci)),
                _ => {}
            }
        }
        if let Some((b0, c0)) = start {
            out.push(Tok { col: self.col + c0, text: &self.text[b0..] });
        }
        out
    }

    /// The text after the first token, with its column.
    fn rest(&self) -> (usize, &'a str) {
        let t = self.text;
        let first_end = t.find(char::is_whitespace).unwrap_or(t.len());
        let after = &t[first_end..];
        let trimmed = after.trim_start();
        let skipped = after.len() - trimmed.len();
        (self.col + t[..first_end + skipped].chars().count(), trimmed)
    }
}

struct Section<'a> {
    kind: &'a str,
    name: Option<Tok<'a>>,
    line: usize,
    entries: Vec<Line<'a>>,
}

struct Parser {
    path: String,
}

impl Parser {
    fn parse_err(&self, line: usize, col: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse { path: self.path.clone(), line, col, msg: msg.into() }
    }

    fn invalid(&self, line: usize, msg: impl Into<String>) -> CliError {
        CliError::Validation { path: self.path.clone(), line, msg: msg.into() }
    }

    fn sections<'a>(&self, text: &'a str) -> CliResult<Vec<Section<'a>>> {
        let mut out: Vec<Section<'a>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim_end();
            let trimmed = body.trim_start();
            if trimmed.is_empty() {
                continue;
            }
            let col = body.chars().count() - trimmed.chars().count() + 1;
            if let Some(inner) = trimmed.strip_prefix('[') {
                let Some(inner) = inner.strip_suffix(']') else {
                    return Err(self.parse_err(no, col + trimmed.chars().count(), "section header must end with ']'"));
                };
                let line = Line { no, col: col + 1, text: inner };
                let toks = line.tokens();
                let Some(kind) = toks.first() else {
                    return Err(self.parse_err(no, col, "empty section header"));
                };
                let named = matches!(kind.text, "module" | "subcategory" | "hovey" | "witness");
                let known = named || matches!(kind.text, "field" | "quiver" | "relations" | "registry");
                if !known {
                    return Err(self.parse_err(no, kind.col, format!("unknown section '{}'", kind.text)));
                }
                match (named, toks.len()) {
                    (true, 2) | (false, 1) => {}
                    (true, _) => return Err(self.parse_err(no, kind.col, format!("section '{}' takes exactly one name", kind.text))),
                    (false, _) => return Err(self.parse_err(no, toks[1].col, format!("section '{}' takes no name", kind.text))),
                }
                if !named && out.iter().any(|s| s.kind == kind.text) {
                    return Err(self.parse_err(no, kind.col, format!("duplicate section '{}'", kind.text)));
                }
                out.push(Section { kind: kind.text, name: toks.get(1).copied(), line: no, entries: Vec::new() });
            } else {
                let Some(sec) = out.last_mut() else {
                    return Err(self.parse_err(no, col, "entry outside of any section"));
                };
                sec.entries.push(Line { no, col, text: trimmed });
            }
        }
        Ok(out)
    }

    fn matrix_literal(&self, line: usize, col: usize, text: &str) -> CliResult<Vec<Vec<i64>>> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let skip = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, c: char| -> CliResult<()> {
            skip(pos);
            if chars.get(*pos) == Some(&c) {
                *pos += 1;
                Ok(())
            } else {
                Err(self.parse_err(line, col + *pos, format!("expected '{c}'")))
            }
        };
        let mut rows = Vec::new();
        expect(&mut pos, '[')?;
        skip(&mut pos);
        if chars.get(pos) == Some(&']') {
            pos += 1;
        } else {
            loop {
                expect(&mut pos, '[')?;
                let mut row = Vec::new();
                skip(&mut pos);
                if chars.get(pos) == Some(&']') {
                    pos += 1;
                } else {
                    loop {
                        skip(&mut pos);
                        let start = pos;
                        if chars.get(pos) == Some(&'-') {
                            pos += 1;
                        }
                        while pos < chars.len() && chars[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let lit: String = chars[start..pos].iter().collect();
                        let v: i64 = lit.parse().map_err(|_| self.parse_err(line, col + start, "expected an integer"))?;
                        row.push(v);
                        skip(&mut pos);
                        match chars.get(pos) {
                            Some(',') => pos += 1,
                            Some(']') => {
                                pos += 1;
                                break;
                            }
                            _ => return Err(self.parse_err(line, col + pos, "expected ',' or ']'")),
                        }
                    }
                }
                rows.push(row);
                skip(&mut pos);
                match chars.get(pos) {
                    Some(',') => pos += 1,
                    Some(']') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(self.parse_err(line, col + pos, "expected ',' or ']'")),
                }
            }
        }
        skip(&mut pos);
        if pos < chars.len() {
            return Err(self.parse_err(line, col + pos, "unexpected text after matrix"));
        }
        Ok(rows)
    }

    fn matrix(&self, field: FieldSpec, line: usize, col: usize, text: &str, (rows, cols): (usize, usize), what: &str) -> CliResult<Matrix> {
        let lit = self.matrix_literal(line, col, text)?;
        if lit.is_empty() && (rows == 0 || cols == 0) {
            return Ok(Matrix::zeros(field, rows, cols));
        }
        if lit.len() != rows || lit.iter().any(|r| r.len() != cols) {
            return Err(self.invalid(line, format!("{what} needs a {rows}x{cols} matrix")));
        }
        if rows == 0 || cols == 0 {
            return Ok(Matrix::zeros(field, rows, cols));
        }
        Matrix::from_rows(field, &lit).map_err(|e| self.invalid(line, e.to_string()))
    }

    fn morphism(&self, alg: &Algebra, line: usize, col: usize, text: &str, src: &Module, tgt: &Module) -> CliResult<Morphism> {
        let mut maps = Vec::new();
        let mut offset = 0;
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != alg.vertex_count() {
            return Err(self.parse_err(line, col, format!("expected {} vertex matrices separated by ';', found {}", alg.vertex_count(), parts.len())));
        }
        for (v, part) in parts.iter().enumerate() {
            let lead = part.chars().count() - part.trim_start().chars().count();
            let what = format!("vertex {}", alg.vertices()[v]);
            maps.push(self.matrix(alg.field(), line, col + offset + lead, part.trim(), (tgt.dim_at(v), src.dim_at(v)), &what)?);
            offset += part.chars().count() + 1;
        }
        Morphism::new(src.clone(), tgt.clone(), maps).map_err(|e| self.invalid(line, e.to_string()))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

pub fn parse_workspace_str(text: &str, label: &str) -> CliResult<Workspace> {
    let p = Parser { path: label.to_string() };
    let sections = p.sections(text)?;
    let find = |kind: &str| sections.iter().find(|s| s.kind == kind);
    let require = |kind: &str| find(kind).ok_or_else(|| p.invalid(0, format!("missing [{kind}] section")));

    let fsec = require("field")?;
    let field = match fsec.entries.as_slice() {
        [e] => {
            let toks = e.tokens();
            match toks.as_slice() {
                [k, v] if k.text == "prime" => {
                    let q: u64 = v.text.parse().map_err(|_| p.parse_err(e.no, v.col, "expected a prime"))?;
                    FieldSpec::prime(q).map_err(|err| p.invalid(e.no, err.to_string()))?
                }
                [k] if k.text == "rationals" => FieldSpec::Rationals,
                [k, ..] => return Err(p.parse_err(e.no, k.col, format!("expected 'prime P' or 'rationals', found '{}'", e.text))),
                [] => unreachable!("entries are nonempty"),
            }
        }
        _ => return Err(p.invalid(fsec.line, "[field] takes exactly one entry")),
    };

    let qsec = require("quiver")?;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut cap = DEFAULT_PATH_CAP;
    for e in &qsec.entries {
        let toks = e.tokens();
        match toks[0].text {
            "vertices" => {
                if !vertices.is_empty() {
                    return Err(p.parse_err(e.no, toks[0].col, "vertices declared twice"));
                }
                for t in &toks[1..] {
                    if !is_identifier(t.text) && !t.text.chars().all(|c| c.is_ascii_digit()) {
                        return Err(p.parse_err(e.no, t.col, format!("invalid vertex label '{}'", t.text)));
                    }
                    if vertices.iter().any(|v| v == t.text) {
                        return Err(p.parse_err(e.no, t.col, format!("duplicate vertex '{}'", t.text)));
                    }
                    vertices.push(t.text.to_string());
                }
                if vertices.is_empty() {
                    return Err(p.parse_err(e.no, toks[0].col, "at least one vertex is required"));
                }
            }
            "arrow" => {
                let [_, l, s, t] = toks.as_slice() else {
                    return Err(p.parse_err(e.no, toks[0].col, "expected 'arrow LABEL SOURCE TARGET'"));
                };
                if !is_identifier(l.text) || MODULE_KEYS.contains(&l.text) {
                    return Err(p.parse_err(e.no, l.col, format!("invalid arrow label '{}'", l.text)));
                }
                if arrows.iter().any(|a| a.label == l.text) {
                    return Err(p.parse_err(e.no, l.col, format!("duplicate arrow '{}'", l.text)));
                }
                let vi = |t: &Tok| vertices.iter().position(|v| v == t.text).ok_or_else(|| p.parse_err(e.no, t.col, format!("unknown vertex '{}'", t.text)));
                arrows.push(Arrow { label: l.text.to_string(), source: vi(s)?, target: vi(t)? });
            }
            "path-cap" => {
                let [_, v] = toks.as_slice() else {
                    return Err(p.parse_err(e.no, toks[0].col, "expected 'path-cap N'"));
                };
                cap = v.text.parse().map_err(|_| p.parse_err(e.no, v.col, "expected a number"))?;
            }
            other => return Err(p.parse_err(e.no, toks[0].col, format!("unknown key '{other}' in [quiver]"))),
        }
    }
    if vertices.is_empty() {
        return Err(p.invalid(qsec.line, "[quiver] declares no vertices"));
    }

    let mut relations = Vec::new();
    if let Some(rsec) = find("relations") {
        for e in &rsec.entries {
            relations.push(parse_relation(field, &arrows, e.text).map_err(|err| p.parse_err(e.no, e.col, err.to_string()))?);
        }
    }
    let algebra = Arc::new(Algebra::build(field, vertices, arrows, relations, cap).map_err(|err| p.invalid(qsec.line, err.to_string()))?);
    let vertex = |e: &Line, t: &Tok| algebra.vertex_index(t.text).ok_or_else(|| p.parse_err(e.no, t.col, format!("unknown vertex '{}'", t.text)));

    let mut modules: Vec<(String, Module)> = Vec::new();
    for sec in sections.iter().filter(|s| s.kind == "module") {
        let name = sec.name.expect("named section");
        if !is_identifier(name.text) || matches!(name.text, "all" | "zero") {
            return Err(p.parse_err(sec.line, name.col, format!("invalid module name '{}'", name.text)));
        }
        if modules.iter().any(|(n, _)| n == name.text) {
            return Err(p.parse_err(sec.line, name.col, format!("duplicate module '{}'", name.text)));
        }
        let Some(first) = sec.entries.first() else {
            return Err(p.invalid(sec.line, format!("module {} is empty", name.text)));
        };
        let ftoks = first.tokens();
        let built = match ftoks[0].text {
            kw @ ("simple" | "projective" | "injective") => {
                let [_, v] = ftoks.as_slice() else {
                    return Err(p.parse_err(first.no, ftoks[0].col, format!("expected '{kw} VERTEX'")));
                };
                let v = vertex(first, v)?;
                if let Some(extra) = sec.entries.get(1) {
                    return Err(p.parse_err(extra.no, extra.col, format!("'{kw}' takes no further entries")));
                }
                match kw {
                    "simple" => Module::simple(algebra.clone(), v),
                    "projective" => Module::projective(algebra.clone(), v),
                    _ => Module::injective(algebra.clone(), v),
                }
            }
            "sum" => {
                if let Some(extra) = sec.entries.get(1) {
                    return Err(p.parse_err(extra.no, extra.col, "'sum' takes no further entries"));
                }
                let mut parts = Vec::new();
                for t in &ftoks[1..] {
                    let m = modules.iter().find(|(n, _)| n == t.text).map(|(_, m)| m.clone());
                    parts.push(m.ok_or_else(|| p.parse_err(first.no, t.col, format!("unknown module '{}' (declare summands first)", t.text)))?);
                }
                if parts.is_empty() {
                    return Err(p.parse_err(first.no, ftoks[0].col, "'sum' needs at least one summand"));
                }
                direct_sum(&algebra, &parts).map_err(|err| p.invalid(first.no, err.to_string()))?.object
            }
            "dims" => {
                let mut dims = Vec::new();
                for t in &ftoks[1..] {
                    dims.push(t.text.parse::<usize>().map_err(|_| p.parse_err(first.no, t.col, "expected a dimension"))?);
                }
                if dims.len() != algebra.vertex_count() {
                    return Err(p.invalid(first.no, format!("dims lists {} entries for {} vertices", dims.len(), algebra.vertex_count())));
                }
                let mut actions: Vec<Option<Matrix>> = vec![None; algebra.arrows().len()];
                for e in &sec.entries[1..] {
                    let toks = e.tokens();
                    let key = toks[0];
                    let Some(ai) = algebra.arrow_index(key.text) else {
                        return Err(p.parse_err(e.no, key.col, format!("unknown key '{}' in module {}", key.text, name.text)));
                    };
                    if actions[ai].is_some() {
                        return Err(p.parse_err(e.no, key.col, format!("arrow '{}' given twice", key.text)));
                    }
                    let a = &algebra.arrows()[ai];
                    let (col, rest) = e.rest();
                    actions[ai] = Some(p.matrix(field, e.no, col, rest, (dims[a.target], dims[a.source]), &format!("arrow {}", a.label))?);
                }
                let mut mats = Vec::new();
                for (a, m) in algebra.arrows().iter().zip(actions) {
                    mats.push(m.ok_or_else(|| p.invalid(sec.line, format!("module {} gives no matrix for arrow {}", name.text, a.label)))?);
                }
                Module::new(algebra.clone(), dims, mats).map_err(|err| p.invalid(sec.line, format!("module {}: {}", name.text, err)))?
            }
            other => return Err(p.parse_err(first.no, ftoks[0].col, format!("unknown key '{other}' in module {}", name.text))),
        };
        modules.push((name.text.to_string(), built.with_name(name.text)));
    }
    let module_named = |e: &Line, t: &Tok| -> CliResult<Module> {
        modules.iter().find(|(n, _)| n == t.text).map(|(_, m)| m.clone()).ok_or_else(|| p.parse_err(e.no, t.col, format!("unknown module '{}'", t.text)))
    };

    let mut subcategories: Vec<(String, Subcategory)> = Vec::new();
    for sec in sections.iter().filter(|s| s.kind == "subcategory") {
        let name = sec.name.expect("named section");
        if matches!(name.text, "all" | "zero") || subcategories.iter().any(|(n, _)| n == name.text) {
            return Err(p.parse_err(sec.line, name.col, format!("subcategory name '{}' is reserved or taken", name.text)));
        }
        let [e] = sec.entries.as_slice() else {
            return Err(p.invalid(sec.line, format!("subcategory {} takes exactly one entry", name.text)));
        };
        let toks = e.tokens();
        let sub = match toks[0].text {
            "all" if toks.len() == 1 => Subcategory::all(name.text),
            "zero" if toks.len() == 1 => Subcategory::zero(name.text),
            "add" if toks.len() > 1 => {
                let gens = toks[1..].iter().map(|t| module_named(e, t)).collect::<CliResult<Vec<_>>>()?;
                Subcategory::generated(name.text, gens)
            }
            _ => return Err(p.parse_err(e.no, toks[0].col, "expected 'all', 'zero' or 'add M, N, ...'")),
        };
        subcategories.push((name.text.to_string(), sub));
    }

    let regsec = require("registry")?;
    let mut registry = Vec::new();
    let mut seen = BTreeSet::new();
    for e in &regsec.entries {
        for t in e.tokens() {
            if !seen.insert(t.text) {
                return Err(p.parse_err(e.no, t.col, format!("'{}' listed twice in the registry", t.text)));
            }
            registry.push(module_named(e, &t)?);
        }
    }
    if registry.is_empty() {
        return Err(p.invalid(regsec.line, "the registry is empty"));
    }
    let category = Category::new(algebra.clone(), registry);

    let mut witnesses: Vec<(String, Arc<WitnessTable>)> = Vec::new();
    for sec in sections.iter().filter(|s| s.kind == "witness") {
        let name = sec.name.expect("named section");
        if witnesses.iter().any(|(n, _)| n == name.text) {
            return Err(p.parse_err(sec.line, name.col, format!("duplicate witness table '{}'", name.text)));
        }
        let mut table = WitnessTable { proj: HashMap::new(), inj: HashMap::new() };
        let mut i = 0;
        while i < sec.entries.len() {
            let head = &sec.entries[i];
            let toks = head.tokens();
            let [kind, obj, x, y] = toks.as_slice() else {
                return Err(p.parse_err(head.no, toks[0].col, "expected 'proj OBJECT LEFT MIDDLE' or 'inj OBJECT MIDDLE RIGHT'"));
            };
            let (obj_m, xm, ym) = (module_named(head, obj)?, module_named(head, x)?, module_named(head, y)?);
            let (left, middle, right) = match kind.text {
                "proj" => (xm, ym, obj_m.clone()),
                "inj" => (obj_m.clone(), xm, ym),
                other => return Err(p.parse_err(head.no, kind.col, format!("unknown witness kind '{other}'"))),
            };
            let mut legs = Vec::new();
            for (key, src, tgt) in [("i", &left, &middle), ("d", &middle, &right)] {
                i += 1;
                let Some(e) = sec.entries.get(i) else {
                    return Err(p.invalid(head.no, format!("witness for {} lacks its '{key}' map", obj.text)));
                };
                let t0 = e.tokens()[0];
                if t0.text != key {
                    return Err(p.parse_err(e.no, t0.col, format!("expected '{key}'")));
                }
                let (col, rest) = e.rest();
                legs.push(p.morphism(&algebra, e.no, col, rest, src, tgt)?);
            }
            let d = legs.pop().expect("two legs");
            let c = Conflation::new(legs.pop().expect("two legs"), d).map_err(|err| p.invalid(head.no, err.to_string()))?;
            let target = if kind.text == "proj" { &mut table.proj } else { &mut table.inj };
            if target.insert(obj_m.id(), c).is_some() {
                return Err(p.parse_err(head.no, obj.col, format!("second {} witness for {}", kind.text, obj.text)));
            }
            i += 1;
        }
        witnesses.push((name.text.to_string(), Arc::new(table)));
    }

    let mut triples: Vec<HoveyTriple> = Vec::new();
    for sec in sections.iter().filter(|s| s.kind == "hovey") {
        let name = sec.name.expect("named section");
        if triples.iter().any(|t| t.name == name.text) {
            return Err(p.parse_err(sec.line, name.col, format!("duplicate hovey triple '{}'", name.text)));
        }
        let mut slots: [Option<Subcategory>; 3] = [None, None, None];
        let mut provider = None;
        for e in &sec.entries {
            let toks = e.tokens();
            let key = toks[0];
            let slot = match key.text {
                "C" => 0,
                "W" => 1,
                "F" => 2,
                "witnesses" => {
                    provider = Some(match toks.as_slice() {
                        [_, k] if k.text == "trivial" => WitnessProvider::TrivialAll,
                        [_, k] if k.text == "frobenius" => WitnessProvider::Frobenius,
                        [_, k, t] if k.text == "table" => {
                            let table = witnesses.iter().find(|(n, _)| n == t.text).map(|(_, w)| w.clone());
                            WitnessProvider::Table(table.ok_or_else(|| p.parse_err(e.no, t.col, format!("unknown witness table '{}'", t.text)))?)
                        }
                        _ => return Err(p.parse_err(e.no, key.col, "expected 'witnesses trivial', 'witnesses frobenius' or 'witnesses table NAME'")),
                    });
                    continue;
                }
                other => return Err(p.parse_err(e.no, key.col, format!("unknown key '{other}' in hovey {}", name.text))),
            };
            let [_, v] = toks.as_slice() else {
                return Err(p.parse_err(e.no, key.col, format!("expected '{} SUBCATEGORY'", key.text)));
            };
            if slots[slot].is_some() {
                return Err(p.parse_err(e.no, key.col, format!("'{}' given twice", key.text)));
            }
            let sub = match v.text {
                "all" => Subcategory::all("A"),
                "zero" => Subcategory::zero("0"),
                n => subcategories.iter().find(|(s, _)| s == n).map(|(_, s)| s.renamed(key.text)).ok_or_else(|| p.parse_err(e.no, v.col, format!("unknown subcategory '{n}'")))?,
            };
            slots[slot] = Some(sub);
        }
        let [Some(c), Some(w), Some(f)] = slots else {
            return Err(p.invalid(sec.line, format!("hovey {} needs C, W and F", name.text)));
        };
        let provider = provider.ok_or_else(|| p.invalid(sec.line, format!("hovey {} needs a 'witnesses' entry", name.text)))?;
        triples.push(HoveyTriple::new(&category, name.text, c, w, f, provider).map_err(|err| p.invalid(sec.line, err.to_string()))?);
    }

    Ok(Workspace { source: label.to_string(), field, algebra, modules, subcategories, witnesses, triples, category })
}
