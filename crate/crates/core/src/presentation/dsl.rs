//! Text format for presentations.
//!
//! ```text
//! algebra A2 {
//!   vertices 1 2 3;
//!   arrow alpha1: 2 -> 3;
//!   arrow beta: 3 -> 1;
//!   relations alpha2*beta, gamma*alpha1;
//! }
//! ```
//!
//! A relation is either a path `a_k*...*a_1` or a combination such as
//! `a*b*a - b*a*b` or `2 x*y + -1/3 z*w`.

use super::{AlgebraPresentation, Arrow, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linrep::Q;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    LBrace,
    RBrace,
    Semi,
    Colon,
    To,
    Comma,
    Star,
    Plus,
    Minus,
    Slash,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut col),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '{' | '}' | ';' | ':' | ',' | '*' | '+' | '/' => {
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ';' => Tok::Semi,
                    ':' => Tok::Colon,
                    ',' => Tok::Comma,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    _ => Tok::Slash,
                };
                out.push(Spanned { tok, line: l0, col: c0 });
                advance(1, &mut i, &mut col);
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    out.push(Spanned { tok: Tok::To, line: l0, col: c0 });
                    advance(2, &mut i, &mut col);
                } else {
                    out.push(Spanned { tok: Tok::Minus, line: l0, col: c0 });
                    advance(1, &mut i, &mut col);
                }
            }
            '"' => {
                let mut s = String::new();
                advance(1, &mut i, &mut col);
                loop {
                    match chars.get(i) {
                        None | Some('\n') => {
                            return Err(Error::Syntax { line: l0, col: c0, msg: "unterminated string".into() })
                        }
                        Some('"') => {
                            advance(1, &mut i, &mut col);
                            break;
                        }
                        Some('\\') if i + 1 < chars.len() => {
                            s.push(chars[i + 1]);
                            advance(2, &mut i, &mut col);
                        }
                        Some(&ch) => {
                            s.push(ch);
                            advance(1, &mut i, &mut col);
                        }
                    }
                }
                out.push(Spanned { tok: Tok::Str(s), line: l0, col: c0 });
            }
            c if is_ident_char(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                    col += 1;
                }
                out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
            }
            other => {
                return Err(Error::Syntax { line: l0, col: c0, msg: format!("unexpected character `{other}`") });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |s| (s.line, s.col))
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Syntax { line, col, msg: msg.into() })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    /// A vertex name, allowing a leading minus for negative integers.
    fn vertex_name(&mut self) -> Result<String> {
        if self.peek() == Some(&Tok::Minus) {
            if let Some(Tok::Ident(s)) = self.peek_at(1).cloned() {
                if s.starts_with(|c: char| c.is_ascii_digit()) {
                    self.pos += 2;
                    return Ok(format!("-{s}"));
                }
            }
        }
        self.ident("vertex identifier")
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected `{kw}`")),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }
}

fn is_number(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit())
}

/// Parses the DSL into a presentation.
pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    let toks = lex(text)?;
    let lines = text.lines().count().max(1);
    let end = (lines, text.lines().last().map_or(1, |l| l.chars().count() + 1));
    let mut p = Parser { toks, pos: 0, end };
    p.keyword("algebra")?;
    let label = match p.next() {
        Some(Tok::Ident(s)) | Some(Tok::Str(s)) => s,
        _ => {
            p.pos -= 1;
            return p.err("expected algebra name");
        }
    };
    p.expect(Tok::LBrace, "`{`")?;
    let mut quiver = Quiver::default();
    p.keyword("vertices")?;
    while p.peek() != Some(&Tok::Semi) {
        let v = p.vertex_name()?;
        if quiver.vertex_index(&v).is_some() {
            return Err(Error::Duplicate(v));
        }
        quiver.vertices.push(v);
    }
    p.expect(Tok::Semi, "`;`")?;
    let mut relations = Vec::new();
    let mut seen_relations = false;
    loop {
        if p.peek() == Some(&Tok::RBrace) {
            p.pos += 1;
            break;
        }
        if p.at_keyword("arrow") && !seen_relations {
            p.pos += 1;
            let name = p.ident("arrow identifier")?;
            p.expect(Tok::Colon, "`:`")?;
            let s = p.vertex_name()?;
            p.expect(Tok::To, "`->`")?;
            let t = p.vertex_name()?;
            p.expect(Tok::Semi, "`;`")?;
            if quiver.arrow_index(&name).is_some() {
                return Err(Error::Duplicate(name));
            }
            let (source, target) = (quiver.vertex(&s)?, quiver.vertex(&t)?);
            quiver.arrows.push(Arrow { name, source, target });
        } else if p.at_keyword("relations") && !seen_relations {
            p.pos += 1;
            seen_relations = true;
            if p.peek() != Some(&Tok::Semi) {
                loop {
                    relations.push(parse_relation(&mut p, &quiver)?);
                    if p.peek() == Some(&Tok::Comma) {
                        p.pos += 1;
                    } else {
                        break;
                    }
                }
            }
            p.expect(Tok::Semi, "`;` after relations")?;
        } else {
            return p.err("expected `arrow`, `relations` or `}`");
        }
    }
    if p.pos < p.toks.len() {
        return p.err("trailing input after `}`");
    }
    AlgebraPresentation::new(label, quiver, relations)
}

fn parse_coefficient(p: &mut Parser) -> Result<Option<Q>> {
    // A number followed by something other than `*` (or a path end) is a coefficient.
    let Some(Tok::Ident(s)) = p.peek().cloned() else { return Ok(None) };
    if !is_number(&s) {
        return Ok(None);
    }
    match p.peek_at(1) {
        Some(Tok::Slash) => {
            p.pos += 2;
            let d = p.ident("denominator")?;
            match Q::parse(&format!("{s}/{d}")) {
                Some(q) => Ok(Some(q)),
                None => p.err("invalid rational coefficient"),
            }
        }
        Some(Tok::Ident(_)) => {
            p.pos += 1;
            Ok(Q::parse(&s))
        }
        _ => Ok(None),
    }
}

fn parse_written_path(p: &mut Parser, q: &Quiver) -> Result<Path> {
    let mut names = vec![p.ident("arrow identifier")?];
    while p.peek() == Some(&Tok::Star) {
        p.pos += 1;
        names.push(p.ident("arrow identifier")?);
    }
    let mut arrows = Vec::with_capacity(names.len());
    for n in names.iter().rev() {
        arrows.push(q.arrow_index(n).ok_or_else(|| Error::UnknownArrow(n.clone()))?);
    }
    Path::from_arrows(q, arrows)
}

fn parse_relation(p: &mut Parser, q: &Quiver) -> Result<Relation> {
    let mut terms: Vec<(Q, Path)> = Vec::new();
    let mut sign = Q::int(1);
    if p.peek() == Some(&Tok::Minus) {
        p.pos += 1;
        sign = Q::int(-1);
    }
    loop {
        if p.peek() == Some(&Tok::Plus) || p.peek() == Some(&Tok::Minus) {
            // `+ -1/2 x*y` style: a sign directly in front of the coefficient.
            if p.peek() == Some(&Tok::Minus) {
                sign = -sign;
            }
            p.pos += 1;
        }
        let coeff = parse_coefficient(p)?.unwrap_or_else(|| Q::int(1));
        let path = parse_written_path(p, q)?;
        terms.push((&sign * &coeff, path));
        match p.peek() {
            Some(Tok::Plus) => {
                p.pos += 1;
                sign = Q::int(1);
            }
            Some(Tok::Minus) => {
                p.pos += 1;
                sign = Q::int(-1);
            }
            _ => break,
        }
    }
    if terms.len() == 1 && terms[0].0.is_one() {
        return Ok(Relation::Monomial(terms.pop().unwrap().1));
    }
    Ok(Relation::Combination(terms))
}

/// Parses a written path such as `b*a` against a quiver.
pub fn parse_path(q: &Quiver, text: &str) -> Result<Path> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: (1, text.len() + 1) };
    let path = parse_written_path(&mut p, q)?;
    if p.pos < p.toks.len() {
        return p.err("trailing input after path");
    }
    Ok(path)
}

fn ident_safe(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_ident_char)
}

fn vertex_safe(s: &str) -> bool {
    ident_safe(s) || s.strip_prefix('-').is_some_and(|r| is_number(r.split('\'').next().unwrap_or("")) && ident_safe(r))
}

/// Canonical text form: sorted vertices, arrows and relations.
pub fn serialize(p: &AlgebraPresentation) -> String {
    let c = p.canonical();
    let label = if ident_safe(&c.label) {
        c.label.clone()
    } else {
        format!("\"{}\"", c.label.replace('\\', "\\\\").replace('"', "\\\""))
    };
    let mut out = format!("algebra {label} {{\n  vertices");
    for v in &c.quiver.vertices {
        debug_assert!(vertex_safe(v), "vertex name not representable: {v}");
        out.push(' ');
        out.push_str(v);
    }
    out.push_str(";\n");
    for a in &c.quiver.arrows {
        out.push_str(&format!(
            "  arrow {}: {} -> {};\n",
            a.name, c.quiver.vertices[a.source], c.quiver.vertices[a.target]
        ));
    }
    if !c.relations.is_empty() {
        let rels: Vec<String> = c.relations.iter().map(|r| r.written(&c.quiver)).collect();
        out.push_str(&format!("  relations {};\n", rels.join(", ")));
    }
    out.push_str("}\n");
    out
}
