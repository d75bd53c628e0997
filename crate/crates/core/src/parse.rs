//! Recursive-descent parsers for element expressions and group words.
//!
//! Element grammar (rationals, `i`, `s2`/`sqrt2`/`√2`):
//!
//! ```text
//! sum     := product {("+" | "-") product}
//! product := unary {("*" | "/" | <juxtaposition>) unary}
//! unary   := ("-" | "+") unary | power
//! power   := primary ["^" integer]
//! primary := digits | "i" | "s2" | "sqrt2" | "√2" | "(" sum ")"
//! ```
//!
//! Word grammar:
//!
//! ```text
//! expr := term {"*" term}
//! term := atom ["^" integer]
//! atom := name | "(" expr ")" | "Conj(" expr "," expr ")" | "Bar(" expr ")"
//!       | "[[" elem "," elem "],[" elem "," elem "]]"
//! ```

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::catalog::WordExpr;
use crate::moebius::{Matrix, ProjPoint};
use crate::numfield::{FieldElement, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Zero-based character offset.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at column {}: {}",
            self.pos + 1,
            self.message
        )
    }
}

type PResult<T> = std::result::Result<T, ParseError>;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.err(format!("expected `{c}`, found `{got}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn expect_end(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected `{c}`")),
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .chars
            .get(start)
            .is_some_and(|c| c.is_alphabetic() || *c == '_')
        {
            return None;
        }
        let mut end = start;
        while self
            .chars
            .get(end)
            .is_some_and(|c| c.is_alphanumeric() || *c == '_')
        {
            end += 1;
        }
        self.pos = end;
        Some(self.chars[start..end].iter().collect())
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Some(s.parse().expect("ascii digits"))
    }

    fn integer(&mut self) -> PResult<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let at = self.pos;
        let Some(v) = self.digits() else {
            return self.err("expected integer exponent");
        };
        let v: i64 = v.try_into().map_err(|_| ParseError {
            pos: at,
            message: "exponent too large".into(),
        })?;
        Ok(if neg { -v } else { v })
    }
}

// ---------------------------------------------------------------- elements

fn starts_primary(c: char) -> bool {
    c.is_ascii_digit() || c == '(' || c == '√' || c == 'i' || c == 's'
}

fn elem_sum(cur: &mut Cursor) -> PResult<FieldElement> {
    let mut acc = elem_product(cur)?;
    loop {
        if cur.eat('+') {
            acc = acc + elem_product(cur)?;
        } else if cur.eat('-') {
            acc = acc - elem_product(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn elem_product(cur: &mut Cursor) -> PResult<FieldElement> {
    let mut acc = elem_unary(cur)?;
    loop {
        if cur.eat('*') {
            acc = acc * elem_unary(cur)?;
        } else if cur.peek() == Some('/') {
            cur.pos += 1;
            let at = cur.pos;
            let rhs = elem_unary(cur)?;
            acc = acc.div(&rhs).map_err(|_| ParseError {
                pos: at,
                message: "division by zero".into(),
            })?;
        } else if cur.peek().is_some_and(starts_primary) {
            acc = acc * elem_power(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn elem_unary(cur: &mut Cursor) -> PResult<FieldElement> {
    if cur.eat('-') {
        Ok(-elem_unary(cur)?)
    } else if cur.eat('+') {
        elem_unary(cur)
    } else {
        elem_power(cur)
    }
}

fn elem_power(cur: &mut Cursor) -> PResult<FieldElement> {
    let base = elem_primary(cur)?;
    if !cur.eat('^') {
        return Ok(base);
    }
    let at = cur.pos;
    let e = cur.integer()?;
    let p = base.pow(e.unsigned_abs() as u32);
    if e < 0 {
        p.inv().map_err(|_| ParseError {
            pos: at,
            message: "negative power of zero".into(),
        })
    } else {
        Ok(p)
    }
}

fn elem_primary(cur: &mut Cursor) -> PResult<FieldElement> {
    match cur.peek() {
        Some('(') => {
            cur.pos += 1;
            let v = elem_sum(cur)?;
            cur.expect(')')?;
            Ok(v)
        }
        Some('√') => {
            cur.pos += 1;
            match cur.digits() {
                Some(d) if d == BigInt::from(2) => Ok(FieldElement::sqrt2()),
                _ => cur.err("only √2 is supported"),
            }
        }
        Some(c) if c.is_ascii_digit() => {
            let d = cur.digits().expect("digit present");
            Ok(FieldElement::from_rational(Rational::from_integer(d)))
        }
        Some(c) if c.is_alphabetic() => {
            let at = cur.pos;
            let name = cur.ident().expect("alphabetic start");
            match name.as_str() {
                "i" => Ok(FieldElement::i()),
                "s2" | "sqrt2" => Ok(FieldElement::sqrt2()),
                _ => Err(ParseError {
                    pos: at,
                    message: format!("unknown symbol `{name}` (expected i, s2 or sqrt2)"),
                }),
            }
        }
        Some(c) => cur.err(format!("unexpected `{c}`")),
        None => cur.err("unexpected end of input"),
    }
}

/// Parses an element expression; accepts the canonical
/// `(p1 + p2*i + p3*s2 + p4*i*s2)` form as a special case.
pub fn parse_element(src: &str) -> crate::Result<FieldElement> {
    let mut cur = Cursor::new(src);
    let v = elem_sum(&mut cur)?;
    cur.expect_end()?;
    Ok(v)
}

/// `inf`, `∞`, or an element expression.
pub fn parse_point(src: &str) -> crate::Result<ProjPoint> {
    match src.trim() {
        "inf" | "∞" | "infinity" => Ok(ProjPoint::Infinity),
        s => Ok(ProjPoint::Finite(parse_element(s)?)),
    }
}

// ------------------------------------------------------------------- words

fn word_expr(cur: &mut Cursor) -> PResult<WordExpr> {
    let mut factors = vec![word_term(cur)?];
    while cur.eat('*') {
        factors.push(word_term(cur)?);
    }
    Ok(if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        WordExpr::Product(factors)
    })
}

fn word_term(cur: &mut Cursor) -> PResult<WordExpr> {
    let atom = word_atom(cur)?;
    if cur.eat('^') {
        let e = cur.integer()?;
        Ok(WordExpr::Power(Box::new(atom), e))
    } else {
        Ok(atom)
    }
}

fn word_atom(cur: &mut Cursor) -> PResult<WordExpr> {
    match cur.peek() {
        Some('(') => {
            cur.pos += 1;
            let e = word_expr(cur)?;
            cur.expect(')')?;
            Ok(e)
        }
        Some('[') => matrix_literal(cur),
        Some(c) if c.is_alphabetic() || c == '_' => {
            let name = cur.ident().expect("identifier start");
            match name.as_str() {
                "Conj" if cur.peek() == Some('(') => {
                    cur.pos += 1;
                    let outer = word_expr(cur)?;
                    cur.expect(',')?;
                    let inner = word_expr(cur)?;
                    cur.expect(')')?;
                    Ok(WordExpr::Conj(Box::new(outer), Box::new(inner)))
                }
                "Bar" if cur.peek() == Some('(') => {
                    cur.pos += 1;
                    let inner = word_expr(cur)?;
                    cur.expect(')')?;
                    Ok(WordExpr::Bar(Box::new(inner)))
                }
                _ => Ok(WordExpr::Name(name)),
            }
        }
        Some(c) => cur.err(format!("unexpected `{c}`")),
        None => cur.err("unexpected end of input"),
    }
}

fn matrix_literal(cur: &mut Cursor) -> PResult<WordExpr> {
    let start = cur.pos;
    cur.expect('[')?;
    cur.expect('[')?;
    let a = elem_sum(cur)?;
    cur.expect(',')?;
    let b = elem_sum(cur)?;
    cur.expect(']')?;
    cur.expect(',')?;
    cur.expect('[')?;
    let c = elem_sum(cur)?;
    cur.expect(',')?;
    let d = elem_sum(cur)?;
    cur.expect(']')?;
    cur.expect(']')?;
    match Matrix::new(a, b, c, d) {
        Ok(m) => Ok(WordExpr::Literal(m)),
        Err(_) => Err(ParseError {
            pos: start,
            message: "singular matrix literal".into(),
        }),
    }
}

pub fn parse_word(src: &str) -> crate::Result<WordExpr> {
    let mut cur = Cursor::new(src);
    let w = word_expr(&mut cur)?;
    cur.expect_end()?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> FieldElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn element_forms() {
        assert_eq!(el("1 + i"), FieldElement::from_ints(1, 1, 0, 0));
        assert_eq!(el("-i*s2"), FieldElement::from_ints(0, 0, 0, -1));
        assert_eq!(el("2i(1+6√2)"), FieldElement::from_ints(0, 2, 0, 12));
        assert_eq!(el("(1 + 4i(s2 + 1))/3"), el("1/3 + 4/3*i + 4/3*i*s2"));
        assert_eq!(el("(1 + -1*i + 0*s2 + 0*i*s2)"), el("1 - i"));
        assert_eq!(el("i^2"), FieldElement::from_int(-1));
        assert_eq!(el("s2^-2"), el("1/2"));
    }

    #[test]
    fn element_errors_carry_positions() {
        let e = parse_element("1 + q").unwrap_err();
        let crate::Error::Parse(p) = e else { panic!() };
        assert_eq!(p.pos, 4);
        let crate::Error::Parse(p) = parse_element("1/0").unwrap_err() else {
            panic!()
        };
        assert_eq!(p.message, "division by zero");
        assert!(parse_element("(1 + i").is_err());
        assert!(parse_element("1 +").is_err());
        assert!(parse_element("√3").is_err());
    }

    #[test]
    fn words() {
        let w = parse_word("r*s*r*s^-2").unwrap();
        assert_eq!(w.to_string(), "r*s*r*s^-2");
        let w = parse_word("Conj(s*r*s, r^-1)^-1").unwrap();
        assert_eq!(w.to_string(), "Conj(s*r*s, r^-1)^-1");
        let w = parse_word("Bar(Bar(s))").unwrap();
        assert!(matches!(w, WordExpr::Bar(_)));
        let w = parse_word("[[16, -25], [9, -14]]").unwrap();
        assert!(matches!(w, WordExpr::Literal(_)));
    }

    #[test]
    fn word_errors() {
        let crate::Error::Parse(p) = parse_word("r * * s").unwrap_err() else {
            panic!()
        };
        assert_eq!(p.pos, 4);
        assert!(parse_word("Conj(r s)").is_err());
        assert!(parse_word("r^x").is_err());
        assert!(parse_word("[[1,1],[1,1]]").is_err());
        assert!(parse_word("").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("inf").unwrap(), ProjPoint::Infinity);
        assert_eq!(parse_point(" 5/3 ").unwrap(), ProjPoint::Finite(el("5/3")));
    }
}
