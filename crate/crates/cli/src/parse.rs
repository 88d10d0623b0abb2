//! Text syntax for objects, morphisms, diagram files, assignments and
//! braid words.
//!
//! Objects use `0`, `1`, identifiers, `+` and `*` (binding tighter), both
//! left-associative. Morphisms are primitives applied to objects, e.g.
//! `delta(A,B,C)`, `gT(A,B)` or `inv(...)`, combined with `(x)` (tightest),
//! `(+)` and `;` (loosest, first-then, right-associative). The printer in
//! the core crate emits exactly this syntax.

use std::fmt;

use braidist_core::braid::{BraidWord, Crossing};
use braidist_core::diagram::{Diagram, DiagramError, Edge};
use braidist_core::expr::{beta, delta_sharp, lambda_star, MorphExpr, ObjectExpr};
use braidist_core::graded::{Assignment, GradedBasis};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: Pos, message: impl Into<String>) -> Self {
        Self {
            line: pos.line,
            column: pos.column,
            message: message.into(),
        }
    }

    /// Re-anchors an error from a single-line parse inside a larger file.
    fn shifted(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Digit(char),
    Plus,
    Star,
    LParen,
    RParen,
    Comma,
    Semi,
    SumOp,
    ProdOp,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Digit(c) => write!(f, "`{c}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Star => f.write_str("`*`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::SumOp => f.write_str("`(+)`"),
            Tok::ProdOp => f.write_str("`(x)`"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let pos = Pos { line, column };
        let c = chars[i];
        let width;
        let tok = match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {
                column += 1;
                i += 1;
                continue;
            }
            '(' if chars.get(i + 1) == Some(&'+') && chars.get(i + 2) == Some(&')') => {
                width = 3;
                Tok::SumOp
            }
            '(' if chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') => {
                width = 3;
                Tok::ProdOp
            }
            '(' => {
                width = 1;
                Tok::LParen
            }
            ')' => {
                width = 1;
                Tok::RParen
            }
            '+' => {
                width = 1;
                Tok::Plus
            }
            '*' => {
                width = 1;
                Tok::Star
            }
            ',' => {
                width = 1;
                Tok::Comma
            }
            ';' => {
                width = 1;
                Tok::Semi
            }
            c if c.is_ascii_digit() => {
                width = 1;
                Tok::Digit(c)
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                width = j - start;
                Tok::Ident(chars[start..j].iter().collect())
            }
            other => {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        out.push((tok, pos));
        i += width;
        column += width;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        let toks = lex(src)?;
        let lines: Vec<&str> = src.split('\n').collect();
        let end = Pos {
            line: lines.len(),
            column: lines.last().map_or(0, |l| l.chars().count()) + 1,
        };
        Ok(Self { toks, at: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(self.pos(), format!("expected {wanted}, found {t}")),
            None => ParseError::new(self.pos(), format!("expected {wanted}, found end of input")),
        }
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn object(&mut self) -> Result<ObjectExpr, ParseError> {
        let mut lhs = self.object_factor_chain()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.object_factor_chain()?;
            lhs = ObjectExpr::sum(lhs, rhs);
        }
        Ok(lhs)
    }

    fn object_factor_chain(&mut self) -> Result<ObjectExpr, ParseError> {
        let mut lhs = self.object_atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.object_atom()?;
            lhs = ObjectExpr::prod(lhs, rhs);
        }
        Ok(lhs)
    }

    fn object_atom(&mut self) -> Result<ObjectExpr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Digit('0')) => {
                self.bump();
                Ok(ObjectExpr::Zero)
            }
            Some(Tok::Digit('1')) => {
                self.bump();
                Ok(ObjectExpr::One)
            }
            Some(Tok::Digit(d)) => Err(ParseError::new(
                pos,
                format!("`{d}` is not an object; only 0 and 1 are"),
            )),
            Some(Tok::Ident(name)) => {
                self.bump();
                Ok(ObjectExpr::Atom(name))
            }
            // `(x)` lexes as the tensor operator on morphisms; as an object
            // it is just the atom `x` in parentheses.
            Some(Tok::ProdOp) => {
                self.bump();
                Ok(ObjectExpr::atom("x"))
            }
            Some(Tok::LParen) => {
                self.bump();
                let o = self.object()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(o)
            }
            _ => Err(self.unexpected("an object")),
        }
    }

    fn morphism(&mut self) -> Result<MorphExpr, ParseError> {
        let first = self.morph_sum()?;
        if self.peek() == Some(&Tok::Semi) {
            self.bump();
            let rest = self.morphism()?;
            return Ok(MorphExpr::comp(first, rest));
        }
        Ok(first)
    }

    fn morph_sum(&mut self) -> Result<MorphExpr, ParseError> {
        let mut lhs = self.morph_prod()?;
        while self.peek() == Some(&Tok::SumOp) {
            self.bump();
            let rhs = self.morph_prod()?;
            lhs = MorphExpr::sum(lhs, rhs);
        }
        Ok(lhs)
    }

    fn morph_prod(&mut self) -> Result<MorphExpr, ParseError> {
        let mut lhs = self.morph_atom()?;
        while self.peek() == Some(&Tok::ProdOp) {
            self.bump();
            let rhs = self.morph_atom()?;
            lhs = MorphExpr::prod(lhs, rhs);
        }
        Ok(lhs)
    }

    fn object_args(&mut self, name: &str, n: usize) -> Result<Vec<ObjectExpr>, ParseError> {
        // `id(x)` lexes as `id` followed by the `(x)` operator.
        if n == 1 && self.peek() == Some(&Tok::ProdOp) {
            self.bump();
            return Ok(vec![ObjectExpr::atom("x")]);
        }
        self.expect(Tok::LParen, &format!("`(` after `{name}`"))?;
        let mut args = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.expect(Tok::Comma, &format!("`,` (`{name}` takes {n} objects)"))?;
            }
            args.push(self.object()?);
        }
        self.expect(Tok::RParen, &format!("`)` (`{name}` takes {n} objects)"))?;
        Ok(args)
    }

    fn morph_atom(&mut self) -> Result<MorphExpr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.bump();
                let m = self.morphism()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(m)
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                if name == "inv" {
                    self.expect(Tok::LParen, "`(` after `inv`")?;
                    let m = self.morphism()?;
                    self.expect(Tok::RParen, "`)`")?;
                    return Ok(MorphExpr::inv(m));
                }
                let arity = match name.as_str() {
                    "id" | "lP" | "rP" | "lT" | "rT" | "eps" | "lstar" => 1,
                    "gP" | "gT" | "beta" => 2,
                    "aP" | "aT" | "delta" | "dsharp" => 3,
                    _ => {
                        return Err(ParseError::new(
                            pos,
                            format!("unknown morphism `{name}` (expected id, aP, lP, rP, gP, aT, lT, rT, gT, delta, eps, inv, beta, dsharp or lstar)"),
                        ))
                    }
                };
                let mut a = self.object_args(&name, arity)?.into_iter();
                let mut next = || a.next().expect("arity checked");
                Ok(match name.as_str() {
                    "id" => MorphExpr::Id(next()),
                    "lP" => MorphExpr::LambdaPlus(next()),
                    "rP" => MorphExpr::RhoPlus(next()),
                    "lT" => MorphExpr::LambdaTimes(next()),
                    "rT" => MorphExpr::RhoTimes(next()),
                    "eps" => MorphExpr::Epsilon(next()),
                    "lstar" => lambda_star(&next()),
                    "gP" => MorphExpr::GammaPlus(next(), next()),
                    "gT" => MorphExpr::GammaTimes(next(), next()),
                    "beta" => {
                        let (x, y) = (next(), next());
                        beta(&x, &y)
                    }
                    "aP" => MorphExpr::AlphaPlus(next(), next(), next()),
                    "aT" => MorphExpr::AlphaTimes(next(), next(), next()),
                    "delta" => MorphExpr::Delta(next(), next(), next()),
                    "dsharp" => {
                        let (x, y, z) = (next(), next(), next());
                        delta_sharp(&x, &y, &z)
                    }
                    _ => unreachable!(),
                })
            }
            _ => Err(self.unexpected("a morphism")),
        }
    }
}

pub fn parse_object(src: &str) -> Result<ObjectExpr, ParseError> {
    let mut p = Parser::new(src)?;
    let o = p.object()?;
    p.finish()?;
    Ok(o)
}

pub fn parse_morphism(src: &str) -> Result<MorphExpr, ParseError> {
    let mut p = Parser::new(src)?;
    let m = p.morphism()?;
    p.finish()?;
    Ok(m)
}

fn parse_degrees(list: &str, line: usize, column: usize) -> Result<GradedBasis, ParseError> {
    let trimmed = list.trim();
    if trimmed.is_empty() {
        return Ok(GradedBasis::zero());
    }
    trimmed
        .split(',')
        .map(|d| {
            d.trim().parse::<i64>().map_err(|_| {
                ParseError::new(
                    Pos { line, column },
                    format!("`{}` is not an integer degree", d.trim()),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(GradedBasis::new)
}

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// One `NAME=d1,d2,...` binding, as given on the command line. An empty
/// list assigns the zero module.
pub fn parse_binding(src: &str) -> Result<(String, GradedBasis), ParseError> {
    parse_binding_at(src, 1, '=')
}

fn parse_binding_at(
    src: &str,
    line: usize,
    sep: char,
) -> Result<(String, GradedBasis), ParseError> {
    let Some((name, degrees)) = src.split_once(sep) else {
        return Err(ParseError::new(
            Pos { line, column: 1 },
            format!("expected `NAME {sep} degrees`"),
        ));
    };
    let name = name.trim();
    if !valid_atom_name(name) {
        return Err(ParseError::new(
            Pos { line, column: 1 },
            format!("`{name}` is not an atom name"),
        ));
    }
    let column = src.find(sep).unwrap_or(0) + 2;
    Ok((name.to_string(), parse_degrees(degrees, line, column)?))
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(l, _)| l)
}

/// Assignment file: one `NAME = d1, d2, ...` per line, `#` comments.
pub fn parse_assignment(src: &str) -> Result<Assignment, ParseError> {
    let mut a = Assignment::new();
    for (i, raw) in src.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let (name, basis) = parse_binding_at(line, i + 1, '=')?;
        a.insert(name, basis);
    }
    Ok(a)
}

#[derive(Debug, Error)]
pub enum DiagramFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid diagram: {0}")]
    Diagram(#[from] DiagramError),
}

/// Diagram file:
///
/// ```text
/// diagram NegSym
/// vertices:
///   - A*B
///   - B*A
/// edges:
///   0 -> 1 : gT(A,B)
///   1 -> 0 : gT(B,A)
/// ```
pub fn parse_diagram(src: &str) -> Result<Diagram, DiagramFileError> {
    #[derive(PartialEq)]
    enum Section {
        Header,
        Vertices,
        Edges,
    }
    let mut name = None;
    let mut section = Section::Header;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let err = |column: usize, msg: String| {
            ParseError::new(
                Pos {
                    line: lineno,
                    column,
                },
                msg,
            )
        };
        if let Some(rest) = trimmed.strip_prefix("diagram") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                if name.is_some() {
                    return Err(err(indent + 1, "second `diagram` header".into()).into());
                }
                name = Some(rest.trim().to_string());
                continue;
            }
        }
        match trimmed {
            "vertices:" => {
                section = Section::Vertices;
                continue;
            }
            "edges:" => {
                section = Section::Edges;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Header => {
                return Err(err(
                    indent + 1,
                    "expected `diagram NAME`, `vertices:` or `edges:`".into(),
                )
                .into())
            }
            Section::Vertices => {
                let (body, offset) = match trimmed.strip_prefix('-') {
                    Some(b) => (b, indent + 1 + (b.len() - b.trim_start().len())),
                    None => (trimmed, indent),
                };
                let o = parse_object(body.trim()).map_err(|e| e.shifted(lineno, offset))?;
                vertices.push(o);
            }
            Section::Edges => {
                let (ends, label) = trimmed
                    .split_once(':')
                    .ok_or_else(|| err(indent + 1, "expected `SRC -> DST : MORPHISM`".into()))?;
                let (src_s, dst_s) = ends
                    .split_once("->")
                    .ok_or_else(|| err(indent + 1, "expected `SRC -> DST` before `:`".into()))?;
                let index = |s: &str| {
                    s.trim().parse::<usize>().map_err(|_| {
                        err(indent + 1, format!("`{}` is not a vertex index", s.trim()))
                    })
                };
                let (src_v, dst_v) = (index(src_s)?, index(dst_s)?);
                let label_offset =
                    indent + ends.len() + 1 + (label.len() - label.trim_start().len());
                let m =
                    parse_morphism(label.trim()).map_err(|e| e.shifted(lineno, label_offset))?;
                edges.push(Edge {
                    src: src_v,
                    dst: dst_v,
                    label: m,
                });
            }
        }
    }
    Ok(Diagram::new(
        name.unwrap_or_else(|| "diagram".into()),
        vertices,
        edges,
    )?)
}

/// Braid word such as `s1 s2 s1'` or `s1^-1 s2`; `e` or an empty string is
/// the identity. Returns the crossings; the strand count is decided by the
/// caller.
pub fn parse_braid(src: &str) -> Result<Vec<Crossing>, ParseError> {
    let mut out = Vec::new();
    let mut column = 1;
    for word in src.split(' ') {
        let pos = Pos { line: 1, column };
        column += word.chars().count() + 1;
        let w = word.trim();
        if w.is_empty() || w == "e" {
            continue;
        }
        let bad = || {
            ParseError::new(
                pos,
                format!("`{w}` is not a crossing (expected s<i>, s<i>' or s<i>^-1)"),
            )
        };
        let body = w
            .strip_prefix('s')
            .or_else(|| w.strip_prefix('σ'))
            .ok_or_else(bad)?;
        let (digits, positive) = if let Some(d) = body.strip_suffix('\'') {
            (d, false)
        } else if let Some(d) = body.strip_suffix("^-1") {
            (d, false)
        } else {
            (body, true)
        };
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(ParseError::new(pos, "crossings are numbered from 1"));
        }
        out.push(Crossing { index, positive });
    }
    Ok(out)
}

/// Builds a braid on `strands` strands, or on the fewest strands the
/// crossings need when `strands` is `None`.
pub fn braid_word(crossings: Vec<Crossing>, strands: Option<usize>) -> Result<BraidWord, String> {
    let needed = crossings.iter().map(|c| c.index + 1).max().unwrap_or(1);
    let n = strands.unwrap_or(needed);
    BraidWord::new(n, crossings).map_err(|e| e.to_string())
}
