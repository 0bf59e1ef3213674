//! Text format for integrands:
//!
//! ```text
//! integrand := "const" NUM
//!            | "poly" "[" pair ("," pair)* "]"      pair := "(" NUM "," NUM ")"
//!            | "samples" PATH
//!            | "expr" expr
//! expr      := term (("+" | "-") term)*
//! term      := factor ("*" factor)*
//! factor    := NUM | "cos" "(" INT "t" ")" | "sin" "(" INT "t" ")"
//!            | "abs" "(" expr ")" | "max" "(" expr "," expr ")"
//!            | "min" "(" expr "," expr ")" | "(" expr ")"
//! ```
//!
//! The frequency integer may be omitted ("cos(t)" means "cos(1t)"). Parsing
//! is pure; the `samples` form only names a file here, and the caller is
//! responsible for loading it and feeding the text to `SampleTable`.

use super::expr::ExprNode;
use super::Integrand;
use crate::error::{Error, Result};
use crate::euclid::convex_hull;
use crate::plane::PlanePoint;

/// Result of parsing an integrand description. `SamplesFile` defers file
/// access to the caller.
#[derive(Debug, Clone)]
pub enum IntegrandSpec {
    Ready(Integrand),
    SamplesFile(String),
}

/// Parses a full integrand description (one of the four forms above).
pub fn parse_spec(input: &str) -> Result<IntegrandSpec> {
    let mut c = Cursor::new(input);
    c.skip_ws();
    let at = c.pos;
    let word = c.ident();
    match word.as_str() {
        "const" => {
            let v = c.number()?;
            c.expect_end()?;
            Ok(IntegrandSpec::Ready(Integrand::constant(v)?))
        }
        "poly" => {
            let pts = parse_pairs(&mut c)?;
            c.expect_end()?;
            let hull = convex_hull(&pts)?;
            Ok(IntegrandSpec::Ready(Integrand::support_polygon(hull)?))
        }
        "samples" => {
            let path = input[c.pos..].trim();
            if path.is_empty() {
                return Err(c.err("expected a file path after 'samples'"));
            }
            Ok(IntegrandSpec::SamplesFile(path.to_string()))
        }
        "expr" => {
            let source = input[c.pos..].trim().to_string();
            let ast = parse_expr(&mut c)?;
            c.expect_end()?;
            Ok(IntegrandSpec::Ready(Integrand::from_expression_ast(
                source, ast,
            )?))
        }
        other => Err(Error::Parse {
            pos: at,
            msg: format!(
                "expected one of 'const', 'poly', 'samples', 'expr'; got '{other}'"
            ),
        }),
    }
}

/// Parses just an expression body (the part after the `expr` keyword).
pub fn parse_expression(input: &str) -> Result<ExprNode> {
    let mut c = Cursor::new(input);
    let ast = parse_expr(&mut c)?;
    c.expect_end()?;
    Ok(ast)
}

fn parse_pairs(c: &mut Cursor) -> Result<Vec<PlanePoint>> {
    c.expect('[')?;
    let mut pts = Vec::new();
    loop {
        c.expect('(')?;
        let x = c.number()?;
        c.expect(',')?;
        let y = c.number()?;
        c.expect(')')?;
        pts.push(PlanePoint::new(x, y));
        c.skip_ws();
        if c.eat(',') {
            continue;
        }
        c.expect(']')?;
        return Ok(pts);
    }
}

fn parse_expr(c: &mut Cursor) -> Result<ExprNode> {
    let mut node = parse_term(c)?;
    loop {
        c.skip_ws();
        if c.eat('+') {
            node = ExprNode::Add(Box::new(node), Box::new(parse_term(c)?));
        } else if c.eat('-') {
            node = ExprNode::Sub(Box::new(node), Box::new(parse_term(c)?));
        } else {
            return Ok(node);
        }
    }
}

fn parse_term(c: &mut Cursor) -> Result<ExprNode> {
    let mut node = parse_factor(c)?;
    loop {
        c.skip_ws();
        if c.eat('*') {
            node = ExprNode::Mul(Box::new(node), Box::new(parse_factor(c)?));
        } else {
            return Ok(node);
        }
    }
}

fn parse_factor(c: &mut Cursor) -> Result<ExprNode> {
    c.skip_ws();
    match c.peek() {
        Some(ch) if ch.is_ascii_digit() || ch == '.' || ch == '-' || ch == '+' => {
            Ok(ExprNode::Const(c.number()?))
        }
        Some('(') => {
            c.bump();
            let inner = parse_expr(c)?;
            c.expect(')')?;
            Ok(inner)
        }
        Some(ch) if ch.is_ascii_alphabetic() => {
            let at = c.pos;
            let name = c.ident();
            match name.as_str() {
                "cos" | "sin" => {
                    c.expect('(')?;
                    let k = c.frequency()?;
                    c.expect('t')?;
                    c.expect(')')?;
                    Ok(if name == "cos" {
                        ExprNode::Cos(k)
                    } else {
                        ExprNode::Sin(k)
                    })
                }
                "abs" => {
                    c.expect('(')?;
                    let inner = parse_expr(c)?;
                    c.expect(')')?;
                    Ok(ExprNode::Abs(Box::new(inner)))
                }
                "max" | "min" => {
                    c.expect('(')?;
                    let a = parse_expr(c)?;
                    c.expect(',')?;
                    let b = parse_expr(c)?;
                    c.expect(')')?;
                    Ok(if name == "max" {
                        ExprNode::Max(Box::new(a), Box::new(b))
                    } else {
                        ExprNode::Min(Box::new(a), Box::new(b))
                    })
                }
                other => Err(Error::Parse {
                    pos: at,
                    msg: format!("unknown function '{other}'"),
                }),
            }
        }
        Some(ch) => Err(c.err(&format!("unexpected character '{ch}'"))),
        None => Err(c.err("unexpected end of input")),
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(ch) = self.peek() {
            self.pos += ch.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(ch) if ch.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(ch) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{ch}'")))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(ch) if ch.is_ascii_alphabetic()) {
            self.bump();
        }
        self.src[start..self.pos].to_string()
    }

    /// NUM: optional sign, digits with optional fraction and exponent.
    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('+') | Some('-')) {
            self.bump();
        }
        while matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some('.') {
            self.bump();
            while matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
                self.bump();
            }
        }
        if matches!(self.peek(), Some('e') | Some('E')) {
            self.bump();
            if matches!(self.peek(), Some('+') | Some('-')) {
                self.bump();
            }
            while matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
                self.bump();
            }
        }
        let token = &self.src[start..self.pos];
        token.parse::<f64>().map_err(|_| Error::Parse {
            pos: start,
            msg: if token.is_empty() {
                "expected a number".to_string()
            } else {
                format!("invalid number '{token}'")
            },
        })
    }

    /// Frequency integer before 't'; omitted means 1.
    fn frequency(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Ok(1);
        }
        let k: u32 = self.src[start..self.pos].parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "invalid frequency".to_string(),
        })?;
        if k == 0 {
            return Err(Error::Parse {
                pos: start,
                msg: "frequency must be at least 1".to_string(),
            });
        }
        Ok(k)
    }
}
