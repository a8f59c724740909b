//! Scalar expression grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//! Every identifier must be a declared parameter or the adjoined element.
//! Negative exponents are accepted only on parameters declared invertible.

use super::poly::Q;
use super::vars::{self, Var};
use super::{Extension, Scalar};
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{msg} at column {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub var: Var,
    pub invertible: bool,
}

/// Declared parameters plus the optional adjoined element.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamSet {
    pub params: Vec<Param>,
    pub ext: Option<Arc<Extension>>,
}

fn valid_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic()) && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

impl ParamSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, name: &str, invertible: bool) -> Result<Var, ParseError> {
        if !valid_ident(name) {
            return err(0, format!("invalid parameter name '{name}'"));
        }
        if self.lookup(name).is_some() {
            return err(0, format!("parameter '{name}' declared twice"));
        }
        let var = vars::intern(name);
        self.params.push(Param {
            name: name.to_string(),
            var,
            invertible,
        });
        Ok(var)
    }

    pub fn set_algebraic(&mut self, name: &str, minpoly: Vec<Q>) -> Result<(), ParseError> {
        if self.ext.is_some() {
            return err(0, "only one algebraic element may be declared");
        }
        if !valid_ident(name) || self.lookup(name).is_some() {
            return err(0, format!("invalid or duplicate algebraic element '{name}'"));
        }
        if minpoly.len() < 2 || !minpoly.last().unwrap().is_one() {
            return err(0, "minimal polynomial must be monic of degree at least 1");
        }
        self.ext = Some(Extension::new(name, minpoly));
        Ok(())
    }

    /// Declares the adjoined element from a textual minimal polynomial in `name`.
    pub fn set_algebraic_expr(&mut self, name: &str, minpoly: &str) -> Result<(), ParseError> {
        let mut tmp = ParamSet::new();
        let v = tmp.declare(name, false)?;
        let p = parse_scalar(minpoly, &tmp)?;
        if !p.is_polynomial() {
            return err(0, "minimal polynomial must be a polynomial");
        }
        let num = p.numerator();
        if num.vars().iter().any(|&w| w != v) {
            return err(0, "minimal polynomial must involve only the algebraic element");
        }
        let coeffs: Vec<Q> = num.coeffs_in(v).iter().map(|c| c.as_constant().unwrap()).collect();
        self.set_algebraic(name, coeffs)
    }

    pub fn lookup(&self, name: &str) -> Option<&Param> {
        self.params.iter().find(|p| p.name == name)
    }

    pub fn var(&self, name: &str) -> Option<Var> {
        self.lookup(name).map(|p| p.var)
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty() && self.ext.is_none()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    ps: &'a ParamSet,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.i += 1;
            let t = self.term()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.i;
            self.i += 1;
            let t = self.unary()?;
            acc = if c == b'*' {
                &acc * &t
            } else {
                match acc.checked_div(&t) {
                    Ok(v) => v,
                    Err(e) => return err(at, e.to_string()),
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
        if self.peek() == Some(b'-') {
            self.i += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let (base, invertible) = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.i += 1;
        let neg = if self.peek() == Some(b'-') {
            self.i += 1;
            true
        } else {
            false
        };
        let at = self.i;
        let e = self.integer()?;
        let e: i64 = e.try_into().map_err(|_| ParseError { pos: at, msg: "exponent too large".into() })?;
        if neg && !invertible {
            return err(at, "negative exponent on a base not declared invertible");
        }
        match base.pow(if neg { -e } else { e }) {
            Ok(v) => Ok(v),
            Err(e) => err(at, e.to_string()),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return err(start, "expected integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<(Scalar, bool), ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return err(self.i, "expected ')'");
                }
                self.i += 1;
                Ok((v, false))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok((Scalar::rational(Q::from_integer(n)), false))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
                    self.i += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                if let Some(p) = self.ps.lookup(name) {
                    return Ok((Scalar::param(p.var), p.invertible));
                }
                if let Some(e) = self.ps.ext.as_ref().filter(|e| e.name == name) {
                    return Ok((Scalar::algebraic(e), false));
                }
                err(start, format!("undeclared parameter '{name}'"))
            }
            Some(c) => err(self.i, format!("unexpected character '{}'", c as char)),
            None => err(self.i, "unexpected end of expression"),
        }
    }
}

pub fn parse_scalar(text: &str, ps: &ParamSet) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        s: text.as_bytes(),
        i: 0,
        ps,
    };
    if p.peek().is_none() {
        return err(0, "empty expression");
    }
    let v = p.expr()?;
    if let Some(c) = p.peek() {
        return err(p.i, format!("unexpected character '{}'", c as char));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps() -> ParamSet {
        let mut p = ParamSet::new();
        p.declare("pt_a", false).unwrap();
        p.declare("pt_q", true).unwrap();
        p
    }

    #[test]
    fn rejects_undeclared_identifier() {
        let e = parse_scalar("pt_a + zz", &ps()).unwrap_err();
        assert_eq!(e.pos, 7);
    }

    #[test]
    fn negative_exponent_needs_invertible() {
        assert!(parse_scalar("pt_q^-1", &ps()).is_ok());
        assert!(parse_scalar("pt_a^-1", &ps()).is_err());
        assert!(parse_scalar("2^-1", &ps()).is_err());
    }

    #[test]
    fn precedence_and_unary_minus() {
        let p = ps();
        assert_eq!(parse_scalar("-pt_a^2", &p).unwrap(), -parse_scalar("pt_a*pt_a", &p).unwrap());
        assert_eq!(parse_scalar("1 - 2*3", &p).unwrap(), Scalar::int(-5));
        assert_eq!(parse_scalar("1/2*4", &p).unwrap(), Scalar::int(2));
    }

    #[test]
    fn division_by_zero_reports_position() {
        assert!(parse_scalar("1/(pt_a - pt_a)", &ps()).is_err());
    }
}
