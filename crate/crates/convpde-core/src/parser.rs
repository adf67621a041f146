//! Text forms: polynomial expressions, deterministic printing, and the
//! line-oriented `.pde` equation format.
//!
//! The expression grammar is small and LL(1):
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ['^' nat]
//! base     := rational | var | '(' expr ')'
//! rational := nat ['/' nat]
//! ```
//!
//! Whitespace is insignificant, multiplication is always explicit (no
//! juxtaposition), literals are exact rationals (no decimals), and a unary
//! minus binds to the whole leading term. Every syntax error carries the
//! byte offset where it was detected.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::pde::SecondOrderPde;
use crate::poly::BiPoly;
use crate::rational::Rational;

/// Lexical token kinds of the expression grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Integer,
    Variable,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

/// A token with its source lexeme and byte offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub lexeme: &'a str,
    pub pos: usize,
}

/// A parse failure and the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Character outside the grammar's alphabet.
    UnexpectedChar(char),
    /// Identifier that is neither declared variable.
    UnknownIdentifier(String),
    /// `^` not followed by a nonnegative integer that fits an exponent.
    MalformedExponent,
    /// `/` not followed by an integer literal.
    ExpectedDenominator,
    /// Rational literal with denominator zero.
    DivisionByZero,
    /// `(` without a matching `)`.
    UnbalancedParen,
    /// An operand (number, variable or parenthesized group) was required.
    ExpectedOperand,
    /// Input continues past a complete expression.
    TrailingInput,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "byte {}: ", self.pos)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{}`", c),
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier `{}`", s),
            ParseErrorKind::MalformedExponent => {
                write!(f, "exponent must be a nonnegative integer")
            }
            ParseErrorKind::ExpectedDenominator => write!(f, "expected integer denominator"),
            ParseErrorKind::DivisionByZero => write!(f, "denominator is zero"),
            ParseErrorKind::UnbalancedParen => write!(f, "unbalanced parenthesis"),
            ParseErrorKind::ExpectedOperand => {
                write!(f, "expected a number, variable or `(`")
            }
            ParseErrorKind::TrailingInput => write!(f, "unexpected trailing input"),
        }
    }
}

impl core::error::Error for ParseError {}

/// Error from [`VarNames::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarNameError {
    Empty,
    NotAlphabetic(String),
    NotDistinct(String),
}

impl fmt::Display for VarNameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarNameError::Empty => write!(f, "variable name is empty"),
            VarNameError::NotAlphabetic(s) => {
                write!(f, "variable name `{}` is not alphabetic", s)
            }
            VarNameError::NotDistinct(s) => {
                write!(f, "variable names must be distinct, got `{}` twice", s)
            }
        }
    }
}

impl core::error::Error for VarNameError {}

/// The two variable names of an expression, defaulting to `x` and `y`. The
/// second variable is routinely renamed to `t` for wave-form equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    first: String,
    second: String,
}

impl VarNames {
    pub fn new(first: &str, second: &str) -> Result<Self, VarNameError> {
        for name in [first, second] {
            if name.is_empty() {
                return Err(VarNameError::Empty);
            }
            if !name.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(VarNameError::NotAlphabetic(name.to_owned()));
            }
        }
        if first == second {
            return Err(VarNameError::NotDistinct(first.to_owned()));
        }
        Ok(VarNames {
            first: first.to_owned(),
            second: second.to_owned(),
        })
    }

    pub fn first(&self) -> &str {
        &self.first
    }

    pub fn second(&self) -> &str {
        &self.second
    }

    fn lookup(&self, ident: &str) -> Option<u8> {
        if ident == self.first {
            Some(0)
        } else if ident == self.second {
            Some(1)
        } else {
            None
        }
    }
}

impl Default for VarNames {
    fn default() -> Self {
        VarNames {
            first: "x".to_owned(),
            second: "y".to_owned(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token<'_>>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        let kind = match ch {
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '^' => TokenKind::Caret,
            '/' => TokenKind::Slash,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            c if c.is_ascii_digit() => {
                let mut end = pos;
                while let Some(&(p, c)) = chars.peek() {
                    if c.is_ascii_digit() {
                        end = p + c.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Integer,
                    lexeme: &text[pos..end],
                    pos,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = pos;
                while let Some(&(p, c)) = chars.peek() {
                    if c.is_ascii_alphabetic() {
                        end = p + c.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Variable,
                    lexeme: &text[pos..end],
                    pos,
                });
                continue;
            }
            other => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        let (pos, ch) = chars.next().unwrap();
        tokens.push(Token {
            kind,
            lexeme: &text[pos..pos + ch.len_utf8()],
            pos,
        });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        lexeme: "",
        pos: text.len(),
    });
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    cursor: usize,
    vars: &'a VarNames,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Token<'a> {
        self.tokens[self.cursor]
    }

    fn bump(&mut self) -> Token<'a> {
        let t = self.tokens[self.cursor];
        if t.kind != TokenKind::End {
            self.cursor += 1;
        }
        t
    }

    fn eat(&mut self, kind: TokenKind) -> bool {
        if self.peek().kind == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.peek().pos,
            kind,
        }
    }

    fn parse_expr(&mut self) -> Result<BiPoly, ParseError> {
        let negate = self.eat(TokenKind::Minus);
        let mut acc = self.parse_term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(TokenKind::Plus) {
                let t = self.parse_term()?;
                acc = &acc + &t;
            } else if self.eat(TokenKind::Minus) {
                let t = self.parse_term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.eat(TokenKind::Star) {
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.parse_base()?;
        if !self.eat(TokenKind::Caret) {
            return Ok(base);
        }
        let tok = self.peek();
        if tok.kind != TokenKind::Integer {
            return Err(self.error(ParseErrorKind::MalformedExponent));
        }
        let exp: u32 = tok
            .lexeme
            .parse()
            .map_err(|_| self.error(ParseErrorKind::MalformedExponent))?;
        self.bump();
        Ok(base.powi(exp))
    }

    fn parse_base(&mut self) -> Result<BiPoly, ParseError> {
        let tok = self.peek();
        match tok.kind {
            TokenKind::Integer => {
                self.bump();
                let numer = BigInt::from_str(tok.lexeme).expect("lexeme is all digits");
                if !self.eat(TokenKind::Slash) {
                    return Ok(BiPoly::constant(Rational::integer(numer)));
                }
                let den_tok = self.peek();
                if den_tok.kind != TokenKind::Integer {
                    return Err(self.error(ParseErrorKind::ExpectedDenominator));
                }
                let denom = BigInt::from_str(den_tok.lexeme).expect("lexeme is all digits");
                let value = Rational::new(numer, denom).map_err(|_| ParseError {
                    pos: den_tok.pos,
                    kind: ParseErrorKind::DivisionByZero,
                })?;
                self.bump();
                Ok(BiPoly::constant(value))
            }
            TokenKind::Variable => {
                self.bump();
                match self.vars.lookup(tok.lexeme) {
                    Some(0) => Ok(BiPoly::var1()),
                    Some(_) => Ok(BiPoly::var2()),
                    None => Err(ParseError {
                        pos: tok.pos,
                        kind: ParseErrorKind::UnknownIdentifier(tok.lexeme.to_owned()),
                    }),
                }
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.parse_expr()?;
                if !self.eat(TokenKind::RParen) {
                    return Err(self.error(ParseErrorKind::UnbalancedParen));
                }
                Ok(inner)
            }
            _ => Err(self.error(ParseErrorKind::ExpectedOperand)),
        }
    }
}

/// Parses an expression into a canonical polynomial.
pub fn parse_poly(text: &str, vars: &VarNames) -> Result<BiPoly, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        vars,
    };
    let poly = parser.parse_expr()?;
    if parser.peek().kind != TokenKind::End {
        return Err(parser.error(ParseErrorKind::TrailingInput));
    }
    Ok(poly)
}

/// Deterministic rendering: terms in graded-lexicographic order (total degree
/// descending, then first-variable exponent descending). Parsing the output
/// reproduces the polynomial exactly.
pub fn pretty_print(p: &BiPoly, vars: &VarNames) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, (m, coeff)) in p.terms().rev().enumerate() {
        let negative = coeff.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = coeff.abs();
        let mut pieces: Vec<String> = Vec::new();
        if abs != Rational::one() || m.is_constant() {
            pieces.push(abs.to_string());
        }
        for (deg, name) in [(m.deg1, vars.first()), (m.deg2, vars.second())] {
            if deg == 1 {
                pieces.push(name.to_owned());
            } else if deg > 1 {
                pieces.push(alloc::format!("{}^{}", name, deg));
            }
        }
        out.push_str(&pieces.join("*"));
    }
    out
}

/// Error in a `.pde` document; `line` is 1-based, 0 marks a whole-file error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdeFileError {
    pub line: usize,
    pub kind: PdeFileErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdeFileErrorKind {
    /// A non-comment line without `key = value`.
    MissingEquals,
    UnknownKey(String),
    /// The same coefficient assigned twice (possibly via an alias spelling).
    DuplicateKey(String),
    BadVarNames(VarNameError),
    /// Declared names whose derivative spellings clash with the positional
    /// `uxx`/`uxy`/`uyy` keys (e.g. `vars = y x`).
    ConflictingVarNames,
    /// A coefficient value failed to parse; position is relative to the line.
    Value(ParseError),
    /// None of `uxx`, `uxy`, `uyy` given a nonzero value.
    MissingPrincipalPart,
}

impl fmt::Display for PdeFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: ", self.line)?;
        }
        match &self.kind {
            PdeFileErrorKind::MissingEquals => write!(f, "expected `key = value`"),
            PdeFileErrorKind::UnknownKey(k) => write!(f, "unknown key `{}`", k),
            PdeFileErrorKind::DuplicateKey(k) => write!(f, "duplicate key `{}`", k),
            PdeFileErrorKind::BadVarNames(e) => write!(f, "bad vars declaration: {}", e),
            PdeFileErrorKind::ConflictingVarNames => {
                write!(f, "variable names conflict with coefficient key spellings")
            }
            PdeFileErrorKind::Value(e) => write!(f, "{}", e),
            PdeFileErrorKind::MissingPrincipalPart => {
                write!(f, "missing principal part: uxx, uxy and uyy absent or all zero")
            }
        }
    }
}

impl core::error::Error for PdeFileError {}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    A,
    B,
    C,
    D,
    E,
    F,
    Rhs,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

// Key spellings: the positional uxx/uxy/uyy/ux/uy/u always work; spellings
// derived from the declared names (utt, uxt, ut for `vars = x t`) map to the
// same slots. Swapped declarations like `vars = y x` would make the two
// schemes contradict each other and are rejected.
fn key_table(vars: &VarNames) -> Result<BTreeMap<String, Slot>, PdeFileErrorKind> {
    let mut table = BTreeMap::new();
    let mut insert = |key: String, slot: Slot| -> Result<(), PdeFileErrorKind> {
        match table.get(&key) {
            Some(&existing) if existing != slot => Err(PdeFileErrorKind::ConflictingVarNames),
            _ => {
                table.insert(key, slot);
                Ok(())
            }
        }
    };
    for (key, slot) in [
        ("uxx", Slot::A),
        ("uxy", Slot::B),
        ("uyy", Slot::C),
        ("ux", Slot::D),
        ("uy", Slot::E),
        ("u", Slot::F),
        ("rhs", Slot::Rhs),
    ] {
        insert(key.to_owned(), slot)?;
    }
    let (f, s) = (vars.first(), vars.second());
    for (key, slot) in [
        (alloc::format!("u{f}{f}"), Slot::A),
        (alloc::format!("u{f}{s}"), Slot::B),
        (alloc::format!("u{s}{f}"), Slot::B),
        (alloc::format!("u{s}{s}"), Slot::C),
        (alloc::format!("u{f}"), Slot::D),
        (alloc::format!("u{s}"), Slot::E),
    ] {
        insert(key, slot)?;
    }
    Ok(table)
}

/// Parses the `.pde` document format: one `key = value` per line, `#` starts
/// a comment, keys are `vars`, `uxx`, `uxy`, `uyy`, `ux`, `uy`, `u`, `rhs`
/// (plus spellings derived from the declared variable names). At least one
/// principal coefficient must be present and nonzero.
pub fn parse_pde_file(text: &str) -> Result<(SecondOrderPde, VarNames), PdeFileError> {
    // First pass: the vars declaration may appear anywhere.
    let mut vars: Option<VarNames> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        let Some((key, value)) = line.split_once('=') else {
            continue;
        };
        if key.trim() != "vars" {
            continue;
        }
        let lineno = idx + 1;
        if vars.is_some() {
            return Err(PdeFileError {
                line: lineno,
                kind: PdeFileErrorKind::DuplicateKey("vars".to_owned()),
            });
        }
        let names: Vec<&str> = value.split_whitespace().collect();
        let [first, second] = names[..] else {
            return Err(PdeFileError {
                line: lineno,
                kind: PdeFileErrorKind::BadVarNames(VarNameError::Empty),
            });
        };
        let parsed = VarNames::new(first, second).map_err(|e| PdeFileError {
            line: lineno,
            kind: PdeFileErrorKind::BadVarNames(e),
        })?;
        key_table(&parsed).map_err(|kind| PdeFileError { line: lineno, kind })?;
        vars = Some(parsed);
    }
    let vars = vars.unwrap_or_default();
    let table = key_table(&vars).expect("validated above or default");

    let mut polys: BTreeMap<Slot, BiPoly> = BTreeMap::new();
    let mut rhs: Option<String> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(PdeFileError {
                line: lineno,
                kind: PdeFileErrorKind::MissingEquals,
            });
        };
        let key = key.trim();
        if key == "vars" {
            continue;
        }
        let Some(&slot) = table.get(key) else {
            return Err(PdeFileError {
                line: lineno,
                kind: PdeFileErrorKind::UnknownKey(key.to_owned()),
            });
        };
        if slot == Slot::Rhs {
            if rhs.is_some() {
                return Err(PdeFileError {
                    line: lineno,
                    kind: PdeFileErrorKind::DuplicateKey(key.to_owned()),
                });
            }
            rhs = Some(value.trim().to_owned());
            continue;
        }
        if polys.contains_key(&slot) {
            return Err(PdeFileError {
                line: lineno,
                kind: PdeFileErrorKind::DuplicateKey(key.to_owned()),
            });
        }
        let value_offset = line.len() - value.len();
        let poly = parse_poly(value, &vars).map_err(|mut e| {
            e.pos += value_offset;
            PdeFileError {
                line: lineno,
                kind: PdeFileErrorKind::Value(e),
            }
        })?;
        polys.insert(slot, poly);
    }

    let mut take = |slot: Slot| polys.remove(&slot).unwrap_or_else(BiPoly::zero);
    let (a, b, c) = (take(Slot::A), take(Slot::B), take(Slot::C));
    let pde = SecondOrderPde::new(a, b, c)
        .map_err(|_| PdeFileError {
            line: 0,
            kind: PdeFileErrorKind::MissingPrincipalPart,
        })?
        .with_lower_order(take(Slot::D), take(Slot::E), take(Slot::F));
    let pde = match rhs {
        Some(note) => pde.with_rhs_note(note),
        None => pde,
    };
    Ok((pde, vars))
}
