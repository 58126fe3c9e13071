//! Recursive-descent parser for polynomial and rational expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' int)?
//! atom   := int | x[i,j] | z[t] | '(' expr ')'
//! ```

use num_bigint::BigInt;

use crate::combinat::{Composition, Index};
use crate::error::{Error, Result};
use crate::exactalg::{RationalFunction, VarId, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    Var(VarId),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Div(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    pub fn to_rational_function(&self) -> Result<RationalFunction> {
        Ok(match self {
            PolyExpr::Int(n) => RationalFunction::constant(Q::from_integer(n.clone())),
            PolyExpr::Var(v) => RationalFunction::var(*v),
            PolyExpr::Neg(a) => a.to_rational_function()?.neg(),
            PolyExpr::Add(a, b) => a.to_rational_function()?.add(&b.to_rational_function()?),
            PolyExpr::Sub(a, b) => a.to_rational_function()?.sub(&b.to_rational_function()?),
            PolyExpr::Mul(a, b) => a.to_rational_function()?.mul(&b.to_rational_function()?),
            PolyExpr::Div(a, b) => a.to_rational_function()?.div(&b.to_rational_function()?)?,
            PolyExpr::Pow(a, e) => a.to_rational_function()?.pow(*e),
        })
    }
}

/// Parses `text`; variables `x[i,j]` must lie in the index set of `lambda`.
pub fn parse_expr(text: &str, lambda: &Composition) -> Result<PolyExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, lambda };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

/// [`parse_expr`] followed by evaluation in the rational function field.
pub fn parse_rational_function(text: &str, lambda: &Composition) -> Result<RationalFunction> {
    parse_expr(text, lambda)?.to_rational_function()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    lambda: &'a Composition,
}

impl Parser<'_> {
    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = PolyExpr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr> {
        if self.eat(b'-') {
            return Ok(PolyExpr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let n = self.uint()?;
            let e = u32::try_from(&n).map_err(|_| self.syntax("exponent too large"))?;
            return Ok(PolyExpr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyExpr::Int(self.uint()?)),
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn variable(&mut self) -> Result<PolyExpr> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").to_string();
        match name.as_str() {
            "x" => {
                self.expect(b'[')?;
                let i = self.small()?;
                self.expect(b',')?;
                let j = self.small()?;
                self.expect(b']')?;
                let a = Index::new(i, j);
                if i == 0 || j == 0 || !self.lambda.contains(a) {
                    return Err(Error::NameError(format!("x[{i},{j}]")));
                }
                Ok(PolyExpr::Var(VarId::X(i, j)))
            }
            "z" => {
                self.expect(b'[')?;
                let t = self.small()?;
                self.expect(b']')?;
                if t == 0 {
                    return Err(Error::NameError("z[0]".into()));
                }
                Ok(PolyExpr::Var(VarId::Param(t)))
            }
            _ => Err(Error::NameError(name)),
        }
    }

    fn small(&mut self) -> Result<u32> {
        let n = self.uint()?;
        u32::try_from(&n).map_err(|_| self.syntax("index too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Polynomial;

    fn lam() -> Composition {
        Composition::new(vec![2, 1]).unwrap()
    }

    #[test]
    fn parses_examples() {
        let l = lam();
        let f = parse_rational_function("x[1,1]+x[1,2]", &l).unwrap();
        assert_eq!(*f.as_polynomial().unwrap(), &Polynomial::x(1, 1) + &Polynomial::x(1, 2));
        let f = parse_rational_function("(x[1,1]^2 - x[1,2]^2)/(x[1,1]-x[1,2])", &l).unwrap();
        assert_eq!(f.to_string(), "x[1,1]+x[1,2]");
        assert_eq!(parse_expr("x[3,1]", &l), Err(Error::NameError("x[3,1]".into())));
        assert_eq!(parse_expr("y", &l), Err(Error::NameError("y".into())));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let l = lam();
        assert!(matches!(parse_expr("x[1,1]+", &l), Err(Error::Syntax { pos: 7, .. })));
        assert!(matches!(parse_expr("(1", &l), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("1 2", &l), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("1/0", &l).unwrap().to_rational_function(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn precedence() {
        let l = lam();
        let f = parse_rational_function("-x[1,1]^2 + 2*z[1]/3 - 1/2*x[2,1]", &l).unwrap();
        assert_eq!(f.to_string(), "-x[1,1]^2+2/3*z[1]-1/2*x[2,1]");
        let g = parse_rational_function(&f.to_string(), &l).unwrap();
        assert_eq!(f, g);
    }
}
