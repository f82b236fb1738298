//! Textual forms: `a+b*i5` for `Z[√5·i]`, `c0 + c2*x^2 + ...` for the
//! delay ring, and `(num)/(den)` for fractions. Printing and parsing
//! round-trip exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{contains, RingDescriptor, RingElement, TransferFunction};
use crate::arith::{BigRat, Poly, QuadElem};
use crate::error::{Error, Result};

fn quad_int_string(re: &BigInt, im: &BigInt, m: u64) -> String {
    let mut out = String::new();
    if !re.is_zero() || im.is_zero() {
        out.push_str(&re.to_string());
    }
    if !im.is_zero() {
        if im.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = im.abs();
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(&format!("i{m}"));
    }
    out
}

pub(super) fn element_string(e: &RingElement) -> String {
    match e {
        RingElement::Quadratic(q) => quad_int_string(&q.re, &q.im, q.m),
        RingElement::Delay(p) => p.to_string(),
    }
}

pub(super) fn transfer_string(f: &TransferFunction) -> String {
    match f {
        TransferFunction::Quadratic(q) => {
            let (a1, a2, b) = f.quad_parts().expect("quadratic");
            let body = quad_int_string(&a1, &a2, q.m);
            if b.is_one() {
                body
            } else if a2.is_zero() {
                format!("{body}/{b}")
            } else {
                format!("({body})/{b}")
            }
        }
        TransferFunction::Delay { num, den } => {
            if den.is_one_poly() {
                num.to_string()
            } else {
                format!("({num})/({den})")
            }
        }
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for Poly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

fn quad_int_latex(re: &BigInt, im: &BigInt, m: u64) -> String {
    quad_int_string(re, im, m)
        .replace(&format!("*i{m}"), &format!("\\sqrt{{{m}}}i"))
        .replace(&format!("i{m}"), &format!("\\sqrt{{{m}}}i"))
}

pub(super) fn element_latex(e: &RingElement) -> String {
    match e {
        RingElement::Quadratic(q) => quad_int_latex(&q.re, &q.im, q.m),
        RingElement::Delay(p) => p.to_latex(),
    }
}

pub(super) fn transfer_latex(f: &TransferFunction) -> String {
    match f {
        TransferFunction::Quadratic(q) => {
            let (a1, a2, b) = f.quad_parts().expect("quadratic");
            let body = quad_int_latex(&a1, &a2, q.m);
            if b.is_one() {
                body
            } else {
                format!("\\frac{{{body}}}{{{b}}}")
            }
        }
        TransferFunction::Delay { num, den } => {
            if den.is_one_poly() {
                num.to_latex()
            } else {
                format!("\\frac{{{}}}{{{}}}", num.to_latex(), den.to_latex())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { column, message: message.into() }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((col, Tok::Num(digits.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/()^".contains(c) {
            out.push((col, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(err(col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: RingDescriptor,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<TransferFunction> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<TransferFunction> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.factor()?;
                acc = acc.checked_div(&d).ok_or_else(|| err(col, "division by zero"))?;
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('('))) {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<TransferFunction> {
        if self.eat('-') {
            return Ok(-&self.factor()?);
        }
        let base = self.primary()?;
        if self.eat('^') {
            let col = self.col();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| err(col, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(col, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<TransferFunction> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(constant(self.ring, BigRat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.atom(&name, col)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.col(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }

    fn atom(&self, name: &str, col: usize) -> Result<TransferFunction> {
        match self.ring {
            RingDescriptor::Quadratic { m } => {
                if name == format!("i{m}") {
                    Ok(TransferFunction::from_quad(QuadElem::from_ints(0, 1, m)))
                } else {
                    Err(err(col, format!("unknown symbol '{name}' (expected i{m})")))
                }
            }
            RingDescriptor::Delay => {
                if name == "x" {
                    Ok(TransferFunction::from_poly(Poly::x()))
                } else {
                    Err(err(col, format!("unknown symbol '{name}' (expected x)")))
                }
            }
        }
    }
}

fn constant(ring: RingDescriptor, c: BigRat) -> TransferFunction {
    match ring {
        RingDescriptor::Quadratic { m } => TransferFunction::from_quad(QuadElem::new(c, BigRat::zero(), m)),
        RingDescriptor::Delay => TransferFunction::from_poly(Poly::constant(c)),
    }
}

/// Parses an arithmetic expression over `F` (sums, products, quotients,
/// integer powers and parentheses of numbers and the ring's generator).
pub fn parse_transfer_function(ring: RingDescriptor, s: &str) -> Result<TransferFunction> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, end: s.chars().count() + 1, ring };
    let value = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(value)
}

/// Parses an element literal and checks that it lies in `A`.
pub fn parse_element(ring: RingDescriptor, s: &str) -> Result<RingElement> {
    let f = parse_transfer_function(ring, s)?;
    contains(&f).ok_or_else(|| Error::NotInRing(s.trim().to_string()))
}
