//! A small expression language for group orders, used by the catalog.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power (('*' | '/' | '%') power)*
//! power  := atom ('^' power)?
//! atom   := integer | name | call | '(' expr ')'
//! call   := family '(' expr (',' expr)* ')' | 'gcd' '(' expr ',' expr ')'
//! ```
//!
//! Family names may end in `+` or `-` (`Omega+(8,2)`); the sign binds to the
//! name only when a `(` follows directly. `M12` and `M24` take no arguments.
//! Division must be exact and subtraction must stay nonnegative.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::orders::{order_of, Family};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigUint),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Rem(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Gcd(Box<Expr>, Box<Expr>),
    Group(Family, Vec<Expr>),
}

pub type Bindings = BTreeMap<String, u64>;

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "{msg} at offset {} in {:?}",
            self.i,
            String::from_utf8_lossy(self.s)
        )))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat(b'%') {
                lhs = Expr::Rem(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            return Ok(Expr::Pow(Box::new(base), Box::new(self.power()?)));
        }
        Ok(base)
    }

    fn args(&mut self) -> Result<Vec<Expr>> {
        let mut out = vec![self.expr()?];
        while self.eat(b',') {
            out.push(self.expr()?);
        }
        if !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.i]).expect("ascii");
                Ok(Expr::Num(text.parse().expect("digits")))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
                    self.i += 1;
                }
                let mut name = std::str::from_utf8(&self.s[start..self.i]).expect("ascii").to_string();
                if matches!(self.s.get(self.i), Some(b'+' | b'-')) && self.s.get(self.i + 1) == Some(&b'(') {
                    name.push(self.s[self.i] as char);
                    self.i += 1;
                }
                if name == "M12" || name == "M24" {
                    return Ok(Expr::Group(name.parse()?, vec![]));
                }
                if self.s.get(self.i) == Some(&b'(') {
                    self.i += 1;
                    let args = self.args()?;
                    if name == "gcd" {
                        let [a, b]: [Expr; 2] = args
                            .try_into()
                            .map_err(|_| Error::Parse("gcd takes two arguments".into()))?;
                        return Ok(Expr::Gcd(Box::new(a), Box::new(b)));
                    }
                    let fam: Family = name.parse()?;
                    let want = fam.takes_n() as usize + fam.takes_q() as usize;
                    if args.len() != want {
                        return self.err(&format!("{fam} takes {want} argument(s)"));
                    }
                    return Ok(Expr::Group(fam, args));
                }
                Ok(Expr::Var(name))
            }
            _ => self.err("unexpected input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { s: text.as_bytes(), i: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn small(v: &BigUint, what: &str) -> Result<u32> {
    v.to_u32().ok_or_else(|| Error::InvalidArgument(format!("{what} {v} too large")))
}

impl Expr {
    pub fn eval(&self, env: &Bindings) -> Result<BigUint> {
        let bin = |a: &Expr, b: &Expr| -> Result<(BigUint, BigUint)> { Ok((a.eval(env)?, b.eval(env)?)) };
        Ok(match self {
            Expr::Num(n) => n.clone(),
            Expr::Var(v) => BigUint::from(
                *env.get(v).ok_or_else(|| Error::InvalidArgument(format!("unbound parameter {v}")))?,
            ),
            Expr::Add(a, b) => {
                let (x, y) = bin(a, b)?;
                x + y
            }
            Expr::Sub(a, b) => {
                let (x, y) = bin(a, b)?;
                if y > x {
                    return Err(Error::InvalidArgument(format!("{x} - {y} is negative")));
                }
                x - y
            }
            Expr::Mul(a, b) => {
                let (x, y) = bin(a, b)?;
                x * y
            }
            Expr::Div(a, b) => {
                let (x, y) = bin(a, b)?;
                if y.is_zero() || !(&x % &y).is_zero() {
                    return Err(Error::InvalidArgument(format!("{x} / {y} is not exact")));
                }
                x / y
            }
            Expr::Rem(a, b) => {
                let (x, y) = bin(a, b)?;
                if y.is_zero() {
                    return Err(Error::InvalidArgument(format!("{x} % 0")));
                }
                x % y
            }
            Expr::Pow(a, b) => {
                let (x, y) = bin(a, b)?;
                num_traits::pow(x, small(&y, "exponent")? as usize)
            }
            Expr::Gcd(a, b) => {
                let (x, y) = bin(a, b)?;
                x.gcd(&y)
            }
            Expr::Group(fam, args) => {
                let vals: Vec<u32> = args.iter().map(|a| small(&a.eval(env)?, "parameter")).collect::<Result<_>>()?;
                let (n, q) = match (fam.takes_n(), fam.takes_q()) {
                    (true, true) => (vals[0], vals[1]),
                    (true, false) => (vals[0], 0),
                    (false, true) => (0, vals[0]),
                    (false, false) => (0, 0),
                };
                order_of(*fam, n, q)?
            }
        })
    }
}

/// Parse and evaluate in one step.
pub fn eval_str(text: &str, env: &Bindings) -> Result<BigUint> {
    parse(text)?.eval(env)
}
