//! Element and polynomial literals.
//!
//! Elements: `+ - * /`, juxtaposition (`2i`, `3x^2`), integer powers,
//! parentheses and integer literals; the symbols are `w` on `F4`/`F8`,
//! the variable on rational functions and `i j k` on quaternions.
//!
//! Polynomials: terms `[c]*t^k` in any order, where `[c]` is an element
//! literal. A bare rational number may stand in for a bracketed one, and the
//! `*` is optional.

use crate::error::{Error, Result};
use crate::ring::{Elem, OreContext};
use crate::skewpoly::SkewPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Op(char),
}

fn lex(text: &str, offset: usize) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = offset + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_alphabetic() {
            out.push((pos, Tok::Ident(c)));
            i += 1;
        } else if "+-*/^()[]".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ctx: &'a OreContext,
}

impl<'a> Parser<'a> {
    fn new(text: &str, offset: usize, ctx: &'a OreContext) -> Result<Self> {
        Ok(Parser { toks: lex(text, offset)?, at: 0, end: offset + text.chars().count(), ctx })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            self.error(format!("expected `{op}`"))
        }
    }

    fn done(&self) -> Result<()> {
        if self.at < self.toks.len() {
            self.error("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    // expr := [+|-] term ((+|-) term)*
    fn expr(&mut self) -> Result<Elem> {
        let ctx = self.ctx;
        let mut acc = if self.eat('-') {
            ctx.neg(&self.term()?)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = ctx.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = ctx.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    // term := power ((* | / | juxtaposition) power)*
    fn term(&mut self) -> Result<Elem> {
        let ctx = self.ctx;
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = ctx.mul(&acc, &self.power()?);
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.power()?;
                let inv = ctx.checked_inv(&d).ok_or(Error::Syntax { pos, msg: "division by zero".into() })?;
                acc = ctx.mul(&acc, &inv);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                acc = ctx.mul(&acc, &self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    // power := atom [^ [-] integer]
    fn power(&mut self) -> Result<Elem> {
        let ctx = self.ctx;
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let pos = self.pos();
        let n = match self.peek() {
            Some(Tok::Num(n)) => n.clone(),
            _ => return self.error("expected an integer exponent"),
        };
        self.at += 1;
        let n: u32 = n.try_into().map_err(|_| Error::Syntax { pos, msg: "exponent too large".into() })?;
        let p = ctx.backend().pow(&base, n);
        if neg {
            ctx.checked_inv(&p).ok_or(Error::Syntax { pos, msg: "negative power of zero".into() })
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<Elem> {
        let ctx = self.ctx;
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                ctx.backend()
                    .from_rational(&BigRational::from_integer(n))
                    .ok_or(Error::Syntax { pos, msg: "literal out of range".into() })
            }
            Some(Tok::Ident(c)) => {
                self.at += 1;
                symbol(ctx, c)
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.error("expected a number, symbol or `(`"),
        }
    }
}

fn symbol(ctx: &OreContext, c: char) -> Result<Elem> {
    let b = ctx.backend();
    if b.variable() == Some(c) {
        return Ok(b.variable_elem().expect("backend has a variable"));
    }
    b.quaternion_unit(c).ok_or_else(|| Error::WrongRing(c.to_string()))
}

/// Parses an element literal such as `1+2i-3j+k/2` or `(x^2+1)/(x-1)`.
pub fn parse_element(text: &str, ctx: &OreContext) -> Result<Elem> {
    parse_element_at(text, 0, ctx)
}

fn parse_element_at(text: &str, offset: usize, ctx: &OreContext) -> Result<Elem> {
    let mut p = Parser::new(text, offset, ctx)?;
    if p.toks.is_empty() {
        return p.error("empty element");
    }
    let e = p.expr()?;
    p.done()?;
    Ok(e)
}

/// Parses a polynomial literal such as `t^2 + [1+2i]*t + [j]`. Products of
/// parenthesised factors, like `(t-[j])*(t-[i])` or `(t-[u])^2`, are
/// multiplied in the skew ring from left to right.
pub fn parse_polynomial(text: &str, ctx: &Arc<OreContext>) -> Result<SkewPoly> {
    let mut p = PolyParser { chars: text.chars().collect(), i: 0, ctx };
    p.skip_ws();
    if p.at_end() {
        return Err(p.syntax("empty polynomial"));
    }
    let f = p.sum()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("expected `+` or `-`"));
    }
    Ok(f)
}

struct PolyParser<'a> {
    chars: Vec<char>,
    i: usize,
    ctx: &'a Arc<OreContext>,
}

impl PolyParser<'_> {
    fn at_end(&self) -> bool {
        self.i >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.i += 1;
        }
    }

    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.i, msg: msg.into() }
    }

    fn sum(&mut self) -> Result<SkewPoly> {
        let mut acc = SkewPoly::zero(self.ctx);
        let mut first = true;
        loop {
            self.skip_ws();
            let neg = match self.peek() {
                Some(c @ ('+' | '-')) => {
                    self.i += 1;
                    c == '-'
                }
                _ if first => false,
                _ => return Ok(acc),
            };
            first = false;
            let term = self.product()?;
            acc = if neg { &acc - &term } else { &acc + &term };
        }
    }

    fn product(&mut self) -> Result<SkewPoly> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => self.i += 1,
                Some('[' | 't' | '(') => {}
                _ => return Ok(acc),
            }
            acc = &acc * &self.power()?;
        }
    }

    fn power(&mut self) -> Result<SkewPoly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.i += 1;
        self.skip_ws();
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let digits: String = self.chars[start..self.i].iter().collect();
        let k: usize = digits.parse().map_err(|_| Error::Syntax { pos: start, msg: "expected a nonnegative exponent".into() })?;
        Ok((0..k).fold(SkewPoly::one(self.ctx), |acc, _| &acc * &base))
    }

    fn atom(&mut self) -> Result<SkewPoly> {
        self.skip_ws();
        match self.peek() {
            Some('t') => {
                self.i += 1;
                Ok(SkewPoly::t(self.ctx))
            }
            Some('(') => {
                self.i += 1;
                let inner = self.sum()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.i += 1;
                Ok(inner)
            }
            Some('[') => {
                let start = self.i + 1;
                let mut depth = 0;
                loop {
                    match self.peek() {
                        None => return Err(self.syntax("unclosed `[`")),
                        Some('[') => depth += 1,
                        Some(']') => depth -= 1,
                        _ => {}
                    }
                    self.i += 1;
                    if depth == 0 {
                        break;
                    }
                }
                let inner: String = self.chars[start..self.i - 1].iter().collect();
                Ok(SkewPoly::constant(self.ctx, parse_element_at(&inner, start, self.ctx)?))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
                    self.i += 1;
                }
                let lit: String = self.chars[start..self.i].iter().collect();
                Ok(SkewPoly::constant(self.ctx, parse_element_at(&lit, start, self.ctx)?))
            }
            _ => Err(self.syntax("expected `t`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Backend, Quaternion};

    fn hq() -> Arc<OreContext> {
        Arc::new(OreContext::classical(Backend::Quaternions))
    }

    fn q(re: (i64, i64), i: (i64, i64), j: (i64, i64), k: (i64, i64)) -> Elem {
        let r = |(n, d): (i64, i64)| BigRational::new(n.into(), d.into());
        Elem::Quat(Quaternion::new(r(re), r(i), r(j), r(k)))
    }

    #[test]
    fn quaternion_literal() {
        let ctx = hq();
        assert_eq!(parse_element("1+2i-3j+k/2", &ctx).unwrap(), q((1, 1), (2, 1), (-3, 1), (1, 2)));
        assert_eq!(parse_element("ij", &ctx).unwrap(), parse_element("k", &ctx).unwrap());
        assert_eq!(parse_element("-3/4", &ctx).unwrap(), q((-3, 4), (0, 1), (0, 1), (0, 1)));
    }

    #[test]
    fn finite_field_reduction() {
        let ctx = OreContext::classical(Backend::f4());
        assert_eq!(parse_element("w^2+w+1", &ctx).unwrap(), Elem::Gf(0));
    }

    #[test]
    fn polynomial_literal() {
        let ctx = hq();
        let f = parse_polynomial("t^2 + [j]", &ctx).unwrap();
        assert_eq!(f.coeffs().len(), 3);
        assert_eq!(f.coeff(0), parse_element("j", &ctx).unwrap());
        let g = parse_polynomial("[j] + t^2", &ctx).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_polynomial("2t - 1/2", &ctx).unwrap().format(), "[2]*t-[1/2]");
    }

    #[test]
    fn skew_products() {
        let ctx = hq();
        let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
        // (t-j)(t-i) = t^2 - (i+j) t + ji
        assert_eq!(p("(t-[j])*(t-[i])"), p("t^2-[i+j]*t-[k]"));
        assert_eq!(p("(t+[i])(t-[i])"), p("t^2+[1]"));
        assert_eq!(p("t*[i]"), p("[i]t"));
        assert_eq!(p("(t-[1])^2"), p("t^2-[2]t+1"));
        assert!(matches!(parse_polynomial("(t-[1]", &ctx), Err(Error::Syntax { pos: 6, .. })));
    }

    #[test]
    fn errors_carry_position() {
        let ctx = hq();
        assert_eq!(parse_element("x", &ctx), Err(Error::WrongRing("x".into())));
        assert!(matches!(parse_element("1+", &ctx), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_polynomial("t^2+[1+]", &ctx), Err(Error::Syntax { pos: 7, .. })));
        assert!(matches!(parse_element("1 $", &ctx), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn round_trip_rational_functions() {
        let ctx = OreContext::classical(Backend::RationalFunctions { var: 'x' });
        for s in ["(x^2+1)/(x-1)", "-x/(x+1)", "(-3x/2)/(x^2-2)", "1/x", "3x^2/2-1"] {
            let a = parse_element(s, &ctx).unwrap();
            assert_eq!(parse_element(&ctx.fmt(&a), &ctx).unwrap(), a, "{s}");
        }
    }
}
