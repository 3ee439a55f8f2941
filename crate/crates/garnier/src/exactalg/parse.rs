//! Strict infix expression grammar and the canonical printer.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' nonneg-integer)?
//! base   := integer | symbol | '(' expr ')'
//! ```
//!
//! Symbols must belong to the variable registry; anything else is rejected.
//! The printer emits one canonical form per value: numerator terms in
//! descending graded-lex order, coefficients of 1 omitted, rational constants
//! parenthesized, the factored denominator spelled as a product of powers.
//! `parse(print(e))` reproduces `e` and `print(parse(s))` is a fixed point
//! on printed output.

use super::poly::{format_q, q_is_negative, Poly, Q};
use super::ratexpr::RatExpr;
use super::vars::Var;
use num::{BigInt, One};

/// Parse failure with byte offset into the input.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
#[error("parse error at byte {at}: {msg}")]
pub struct ParseError {
    pub at: usize,
    pub msg: String,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { at: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Tok, ParseError> {
        self.skip_ws();
        let Some(&c) = self.src.get(self.pos) else {
            return Ok(Tok::End);
        };
        self.pos += 1;
        Ok(match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(text.parse::<BigInt>().unwrap())
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match Var::lookup(name) {
                    Some(v) => Tok::Sym(v),
                    None => {
                        self.pos = start;
                        return self.err(format!("unknown symbol {name:?}"));
                    }
                }
            }
            other => {
                self.pos -= 1;
                return self.err(format!("unexpected character {:?}", other as char));
            }
        })
    }

    fn peek(&mut self) -> Result<Tok, ParseError> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<RatExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.lex.peek()? {
                Tok::Plus => {
                    self.lex.next()?;
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.lex.next()?;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatExpr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.lex.peek()? {
                Tok::Star => {
                    self.lex.next()?;
                    acc = acc * self.unary()?;
                }
                Tok::Slash => {
                    self.lex.next()?;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return self.lex.err("division by zero");
                    }
                    acc = acc / d;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatExpr, ParseError> {
        if self.lex.peek()? == Tok::Minus {
            self.lex.next()?;
            return Ok(-self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<RatExpr, ParseError> {
        let base = self.base()?;
        if self.lex.peek()? == Tok::Caret {
            self.lex.next()?;
            match self.lex.next()? {
                Tok::Int(e) => {
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| ParseError { at: self.lex.pos, msg: "exponent too large".into() })?;
                    return base
                        .pow(e as i32)
                        .map_err(|e| ParseError { at: self.lex.pos, msg: e.to_string() });
                }
                _ => return self.lex.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RatExpr, ParseError> {
        match self.lex.next()? {
            Tok::Int(n) => Ok(RatExpr::constant(Q::from_integer(n))),
            Tok::Sym(v) => Ok(RatExpr::var(v)),
            Tok::LParen => {
                let e = self.expr()?;
                match self.lex.next()? {
                    Tok::RParen => Ok(e),
                    _ => self.lex.err("expected ')'"),
                }
            }
            Tok::End => self.lex.err("unexpected end of input"),
            t => self.lex.err(format!("unexpected token {t:?}")),
        }
    }
}

/// Parse a complete expression; trailing input is an error.
pub fn parse(src: &str) -> Result<RatExpr, ParseError> {
    let mut p = Parser { lex: Lexer::new(src) };
    let e = p.expr()?;
    match p.lex.next()? {
        Tok::End => Ok(e),
        t => p.lex.err(format!("trailing input: {t:?}")),
    }
}

fn print_mono(m: &super::poly::Mono) -> String {
    let mut parts = Vec::new();
    for (v, e) in m.vars() {
        if e == 1 {
            parts.push(v.name());
        } else {
            parts.push(format!("{}^{}", v.name(), e));
        }
    }
    parts.join("*")
}

/// Canonical polynomial rendering: descending graded-lex term order.
pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = q_is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff_one = mag.is_one();
        if m.is_one() {
            out.push_str(&format_q(&mag));
        } else {
            if !coeff_one {
                out.push_str(&format_q(&mag));
                out.push('*');
            }
            out.push_str(&print_mono(m));
        }
    }
    out
}

fn print_factor(f: &Poly, k: u32) -> String {
    let inner = print_poly(f);
    let needs_parens = f.num_terms() > 1 || inner.contains('*') || inner.starts_with('-');
    let base = if needs_parens { format!("({inner})") } else { inner };
    if k == 1 {
        base
    } else {
        format!("{base}^{k}")
    }
}

/// Canonical rational-expression rendering.
pub fn print_ratexpr(e: &RatExpr) -> String {
    let num = print_poly(e.numerator());
    let den = e.denominator_factors();
    if den.is_empty() {
        return num;
    }
    let parts: Vec<String> = den.iter().map(|(f, k)| print_factor(f, *k)).collect();
    let den_str = if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        format!("({})", parts.join(" * "))
    };
    format!("({num}) / {den_str}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::*;

    fn rt(src: &str) -> String {
        print_ratexpr(&parse(src).unwrap())
    }

    #[test]
    fn parse_basic() {
        let e = parse("q1 + 2*p1^2 - t/(s - 1)").unwrap();
        assert!(!e.is_zero());
        let g = parse("(q1*p1 + q2*p2 + a1)").unwrap();
        assert_eq!(g.numerator().num_terms(), 3);
    }

    #[test]
    fn rejects_unknown_symbols() {
        assert!(parse("q1 + bogus").is_err());
        assert!(parse("alpha1").is_err());
    }

    #[test]
    fn rejects_trailing_and_malformed() {
        assert!(parse("q1 q2").is_err());
        assert!(parse("(q1").is_err());
        assert!(parse("q1 +").is_err());
        assert!(parse("q1 ^ p1").is_err());
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn unary_minus() {
        let a = parse("-q1 + 1").unwrap();
        let b = parse("1 - q1").unwrap();
        assert!(a.eq_fn(&b));
        let c = parse("-(q1 - 1)").unwrap();
        assert!(c.eq_fn(&b));
    }

    #[test]
    fn printing_is_canonical_and_stable() {
        for src in [
            "q1^2 - q1*p1 + (1/2)*t - 3",
            "(q1*p1 + q2*p2 + a1) / (t*(t - 1))",
            "-q1/t",
            "0",
            "(2*q2 - 1) / ((t - s)^2 * t)",
            "u*um/(2*t)",
        ] {
            let once = rt(src);
            assert_eq!(rt(&once), once, "printer not a fixed point on {src:?}");
            assert!(parse(&once).unwrap().eq_fn(&parse(src).unwrap()));
        }
    }

    #[test]
    fn printed_leading_sign() {
        let e = parse("-2*q1 - 1").unwrap();
        assert_eq!(print_ratexpr(&e), "-2*q1 - 1");
        let f = parse("q2/(1 - t)").unwrap();
        // Denominator factors are monic: the sign moves to the numerator.
        assert_eq!(print_ratexpr(&f), "(-q2) / (t - 1)");
    }

    #[test]
    fn c_symbols_parse() {
        let e = parse("c0*q1 + c12").unwrap();
        assert!(e.mentions_any(&[Var::c(0), Var::c(12)]));
    }
}
