//! Text formats for rings, monomial ideals, variable orders, simplicial
//! complexes and Hilbert series numerators.
//!
//! ```text
//! ring     := ident ("," ident)*
//! ideal    := "0" | generator ("," generator)*
//! generator:= factor ("*" factor)*
//! factor   := "1" | ident ("^" positive-int)?
//! complex  := facet (";" facet)*
//! facet    := ident ("," ident)*
//! series   := numerator ("/" "(1 - t)" ("^" int)?)?
//! ```
//!
//! Identifiers are ASCII letters, digits, `_` and `'`, starting with a letter.
//! Whitespace separates tokens and is otherwise ignored. Every error carries
//! the byte span of the offending input.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::monomial::{Monomial, MonomialIdeal, VariableOrder, MAX_DEGREE};
use crate::series::SeriesNumerator;
use crate::stanley_reisner::{validate_complex, SimplicialComplex, Violation};

/// Byte range `start..end` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Self { start, end }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    UnknownVariable,
    BadExponent,
    EmptyGenerator,
    Syntax,
    DuplicateVariable,
}

impl ParseErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ParseErrorKind::UnknownVariable => "unknown-variable",
            ParseErrorKind::BadExponent => "bad-exponent",
            ParseErrorKind::EmptyGenerator => "empty-generator",
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::DuplicateVariable => "duplicate-variable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} error at {}..{}: {message}", kind.name(), span.start, span.end)]
pub struct ParseError {
    pub span: SourceSpan,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, span: SourceSpan, message: impl Into<String>) -> Self {
        Self {
            span,
            kind,
            message: message.into(),
        }
    }

    /// The input line with a caret underline below the span.
    pub fn annotate(&self, input: &str) -> String {
        let width = (self.span.end - self.span.start).max(1);
        format!(
            "{input}\n{}{}",
            " ".repeat(input[..self.span.start].chars().count()),
            "^".repeat(width)
        )
    }
}

/// Failure of [`parse_complex`]: bad text, or text describing an invalid complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexInputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid simplicial complex: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Punct(char),
    Other(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: SourceSpan,
}

impl Token {
    fn text(&self) -> String {
        match &self.tok {
            Tok::Ident(s) | Tok::Number(s) => s.clone(),
            Tok::Punct(c) | Tok::Other(c) => c.to_string(),
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = start + c.len_utf8();
        chars.next();
        let tok = if c.is_ascii_alphabetic() {
            while let Some(&(i, d)) = chars.peek() {
                if !is_ident_char(d) {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            Tok::Ident(text[start..end].to_string())
        } else if c.is_ascii_digit() {
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            Tok::Number(text[start..end].to_string())
        } else if ",;*^/()+-".contains(c) {
            Tok::Punct(c)
        } else {
            Tok::Other(c)
        };
        out.push(Token {
            tok,
            span: SourceSpan::new(start, end),
        });
    }
    out
}

/// Cursor over a token list, remembering the input length for end-of-input spans.
struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    len: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Self {
            tokens: lex(text),
            pos: 0,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn at_punct(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Punct(p), .. }) if *p == c)
    }

    fn eat_punct(&mut self, c: char) -> bool {
        let hit = self.at_punct(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn end_span(&self) -> SourceSpan {
        SourceSpan::new(self.len, self.len)
    }

    /// Span of the next token, or the empty span at end of input.
    fn here(&self) -> SourceSpan {
        self.peek().map_or(self.end_span(), |t| t.span)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(
                ParseErrorKind::Syntax,
                t.span,
                format!("expected {expected}, found `{}`", t.text()),
            ),
            None => ParseError::new(
                ParseErrorKind::Syntax,
                self.end_span(),
                format!("expected {expected}, found end of input"),
            ),
        }
    }

    fn expect_end(&self, expected: &str) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected(expected)),
        }
    }
}

/// An ordered list of variable names; the listing order is the default
/// variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ring {
    /// Validates each name as [`parse_ring`] would; an empty list gives the
    /// ring with no variables.
    pub fn new(names: Vec<String>) -> Result<Self, ParseError> {
        if names.is_empty() {
            return Ok(Ring {
                names,
                index: HashMap::new(),
            });
        }
        parse_ring(&names.join(","))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn variable(&self, cur: &mut Cursor) -> Result<(usize, SourceSpan), ParseError> {
        match cur.next() {
            Some(Token {
                tok: Tok::Ident(name),
                span,
            }) => self.index_of(&name).map(|i| (i, span)).ok_or_else(|| {
                ParseError::new(
                    ParseErrorKind::UnknownVariable,
                    span,
                    format!("unknown variable `{name}`"),
                )
            }),
            _ => {
                cur.pos -= 1;
                Err(cur.unexpected("a variable name"))
            }
        }
    }

    /// Renders a monomial in this ring: factors in variable order, exponent 1
    /// omitted, `1` for the constant.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        render_with(m, &self.names)
    }

    /// Renders an ideal: `0`, or generators in stored order joined by `, `.
    pub fn render_ideal(&self, ideal: &MonomialIdeal) -> String {
        render_ideal_with(ideal, &self.names)
    }

    /// The ring whose variables are listed in `order`.
    pub fn reordered(&self, order: &VariableOrder) -> Ring {
        let names = order
            .as_slice()
            .iter()
            .map(|&i| self.names[i].clone())
            .collect();
        Ring::new(names).expect("a permutation of valid names")
    }

    /// The first `n` variables.
    pub fn prefix(&self, n: usize) -> Ring {
        Ring::new(self.names[..n].to_vec()).expect("subset of valid names")
    }
}

fn render_with(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exponents()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| {
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Renders with explicit names, which may be fewer than a ring's variables
/// (for the arity-`a` rows of a Hilbert function table).
pub fn render_ideal_with(ideal: &MonomialIdeal, names: &[String]) -> String {
    if ideal.is_empty() {
        return "0".to_string();
    }
    ideal
        .generators()
        .iter()
        .map(|g| render_with(g, names))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Comma-separated identifiers; duplicates are rejected.
pub fn parse_ring(text: &str) -> Result<Ring, ParseError> {
    let mut cur = Cursor::new(text);
    let mut names: Vec<String> = Vec::new();
    let mut index = HashMap::new();
    loop {
        match cur.next() {
            Some(Token {
                tok: Tok::Ident(name),
                span,
            }) => {
                if index.contains_key(&name) {
                    return Err(ParseError::new(
                        ParseErrorKind::DuplicateVariable,
                        span,
                        format!("variable `{name}` is listed twice"),
                    ));
                }
                index.insert(name.clone(), names.len());
                names.push(name);
            }
            _ => {
                cur.pos -= 1;
                return Err(cur.unexpected("a variable name"));
            }
        }
        if !cur.eat_punct(',') {
            cur.expect_end("`,` or end of input")?;
            break;
        }
    }
    Ok(Ring { names, index })
}

fn parse_exponent(cur: &mut Cursor) -> Result<u32, ParseError> {
    let caret = cur.here();
    match cur.next() {
        Some(Token {
            tok: Tok::Number(digits),
            span,
        }) => {
            let value: u64 = digits.parse().unwrap_or(u64::MAX);
            if value == 0 || value > MAX_DEGREE {
                return Err(ParseError::new(
                    ParseErrorKind::BadExponent,
                    span,
                    format!("exponent `{digits}` must be between 1 and {MAX_DEGREE}"),
                ));
            }
            Ok(value as u32)
        }
        Some(t) => Err(ParseError::new(
            ParseErrorKind::BadExponent,
            t.span,
            format!("exponent must be a positive integer, found `{}`", t.text()),
        )),
        None => Err(ParseError::new(
            ParseErrorKind::BadExponent,
            SourceSpan::new(caret.start, caret.end),
            "missing exponent after `^`",
        )),
    }
}

fn parse_generator(cur: &mut Cursor, ring: &Ring) -> Result<Monomial, ParseError> {
    let start = cur.here().start;
    let mut exps = vec![0u64; ring.arity()];
    loop {
        match cur.peek().map(|t| t.tok.clone()) {
            Some(Tok::Number(n)) if n == "1" => {
                cur.next();
            }
            Some(Tok::Number(n)) => {
                let span = cur.here();
                return Err(ParseError::new(
                    ParseErrorKind::Syntax,
                    span,
                    format!("coefficient `{n}` is not allowed; only `1` may appear as a factor"),
                ));
            }
            _ => {
                let (var, _) = ring.variable(cur)?;
                let e = if cur.eat_punct('^') {
                    parse_exponent(cur)?
                } else {
                    1
                };
                exps[var] += u64::from(e);
            }
        }
        if !cur.eat_punct('*') {
            break;
        }
    }
    let end = cur
        .tokens
        .get(cur.pos.wrapping_sub(1))
        .map_or(start, |t| t.span.end);
    let degree: u64 = exps.iter().sum();
    if degree > MAX_DEGREE {
        return Err(ParseError::new(
            ParseErrorKind::BadExponent,
            SourceSpan::new(start, end),
            format!("generator degree {degree} exceeds {MAX_DEGREE}"),
        ));
    }
    Ok(Monomial::new(exps.into_iter().map(|e| e as u32).collect()).expect("degree checked"))
}

/// A single monomial such as `x^2*y`.
pub fn parse_monomial(text: &str, ring: &Ring) -> Result<Monomial, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(ParseError::new(
            ParseErrorKind::EmptyGenerator,
            cur.end_span(),
            "empty monomial",
        ));
    }
    let m = parse_generator(&mut cur, ring)?;
    cur.expect_end("`*` or end of input")?;
    Ok(m)
}

/// Comma-separated generators over `ring`; `0` is the zero ideal.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<MonomialIdeal, ParseError> {
    let mut cur = Cursor::new(text);
    if let [Token {
        tok: Tok::Number(n),
        ..
    }] = cur.tokens.as_slice()
    {
        if n == "0" {
            return Ok(MonomialIdeal::zero(ring.arity()));
        }
    }
    let mut gens = Vec::new();
    loop {
        let empty = match cur.peek() {
            None => true,
            Some(t) => matches!(t.tok, Tok::Punct(',')),
        };
        if empty {
            return Err(ParseError::new(
                ParseErrorKind::EmptyGenerator,
                cur.here(),
                "empty generator",
            ));
        }
        gens.push(parse_generator(&mut cur, ring)?);
        if !cur.eat_punct(',') {
            cur.expect_end("`*`, `,` or end of input")?;
            break;
        }
    }
    Ok(MonomialIdeal::new(ring.arity(), gens).expect("generators built in ring arity"))
}

/// Comma-separated variable names listing every ring variable once; the
/// listing order is the order in which variables are introduced.
pub fn parse_order(text: &str, ring: &Ring) -> Result<VariableOrder, ParseError> {
    let mut cur = Cursor::new(text);
    let mut perm = Vec::new();
    loop {
        let (var, span) = ring.variable(&mut cur)?;
        if perm.contains(&var) {
            return Err(ParseError::new(
                ParseErrorKind::DuplicateVariable,
                span,
                format!("variable `{}` is listed twice", ring.names[var]),
            ));
        }
        perm.push(var);
        if !cur.eat_punct(',') {
            cur.expect_end("`,` or end of input")?;
            break;
        }
    }
    if perm.len() != ring.arity() {
        let missing: Vec<_> = (0..ring.arity())
            .filter(|v| !perm.contains(v))
            .map(|v| ring.names[v].as_str())
            .collect();
        return Err(ParseError::new(
            ParseErrorKind::Syntax,
            cur.end_span(),
            format!("order is missing variables: {}", missing.join(", ")),
        ));
    }
    Ok(VariableOrder::new(perm).expect("checked permutation"))
}

/// Semicolon-separated facets of comma-separated vertices over `ring`,
/// validated as a simplicial complex.
pub fn parse_complex(text: &str, ring: &Ring) -> Result<SimplicialComplex, ComplexInputError> {
    let mut cur = Cursor::new(text);
    let mut facets = Vec::new();
    loop {
        let mut facet = Vec::new();
        loop {
            let (var, _) = ring.variable(&mut cur)?;
            facet.push(ring.names[var].clone());
            if !cur.eat_punct(',') {
                break;
            }
        }
        facets.push(facet);
        if !cur.eat_punct(';') {
            cur.expect_end("`,`, `;` or end of input")?;
            break;
        }
    }
    let complex = SimplicialComplex::new(ring.names.clone(), facets);
    validate_complex(&complex).map_err(ComplexInputError::Invalid)?;
    Ok(complex)
}

fn parse_int(cur: &mut Cursor, what: &str) -> Result<u64, ParseError> {
    match cur.next() {
        Some(Token {
            tok: Tok::Number(d),
            span,
        }) => d.parse().map_err(|_| {
            ParseError::new(
                ParseErrorKind::BadExponent,
                span,
                format!("`{d}` is too large"),
            )
        }),
        _ => {
            cur.pos -= 1;
            Err(cur.unexpected(what))
        }
    }
}

/// One numerator term: `c`, `t`, `t^d`, `c*t` or `c*t^d`.
fn parse_series_term(cur: &mut Cursor) -> Result<(u64, BigInt), ParseError> {
    let mut coeff = BigInt::from(1);
    let mut had_coeff = false;
    if let Some(Tok::Number(d)) = cur.peek().map(|t| t.tok.clone()) {
        cur.next();
        coeff = d.parse().expect("digits");
        had_coeff = true;
        if !cur.eat_punct('*') {
            return Ok((0, coeff));
        }
    }
    match cur.next() {
        Some(Token {
            tok: Tok::Ident(name),
            ..
        }) if name == "t" => {}
        _ => {
            cur.pos -= 1;
            let what = if had_coeff {
                "`t`"
            } else {
                "a coefficient or `t`"
            };
            return Err(cur.unexpected(what));
        }
    }
    let degree = if cur.eat_punct('^') {
        parse_int(cur, "an exponent")?
    } else {
        1
    };
    Ok((degree, coeff))
}

fn parse_polynomial(cur: &mut Cursor) -> Result<Vec<(u64, BigInt)>, ParseError> {
    let mut terms = Vec::new();
    let mut negative = cur.eat_punct('-');
    loop {
        let (d, c) = parse_series_term(cur)?;
        terms.push((d, if negative { -c } else { c }));
        if cur.eat_punct('+') {
            negative = false;
        } else if cur.eat_punct('-') {
            negative = true;
        } else {
            return Ok(terms);
        }
    }
}

/// Parses the rendering of a [`SeriesNumerator`], e.g.
/// `(1 - t^2 - t^3 + t^5)/(1 - t)^3`. Without a denominator the arity is 0.
pub fn parse_series(text: &str) -> Result<SeriesNumerator, ParseError> {
    let mut cur = Cursor::new(text);
    let terms = if cur.eat_punct('(') {
        let t = parse_polynomial(&mut cur)?;
        if !cur.eat_punct(')') {
            return Err(cur.unexpected("`)`"));
        }
        t
    } else {
        parse_polynomial(&mut cur)?
    };
    let mut arity = 0;
    if cur.eat_punct('/') {
        let open = cur.here();
        let ok = cur.eat_punct('(')
            && matches!(cur.next().map(|t| t.tok), Some(Tok::Number(n)) if n == "1")
            && cur.eat_punct('-')
            && matches!(cur.next().map(|t| t.tok), Some(Tok::Ident(n)) if n == "t")
            && cur.eat_punct(')');
        if !ok {
            return Err(ParseError::new(
                ParseErrorKind::Syntax,
                SourceSpan::new(open.start, cur.here().start.max(open.start)),
                "denominator must be `(1 - t)` optionally raised to a power",
            ));
        }
        arity = if cur.eat_punct('^') {
            parse_int(&mut cur, "an exponent")? as usize
        } else {
            1
        };
    }
    cur.expect_end("end of input")?;
    Ok(SeriesNumerator::new(arity, terms))
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
