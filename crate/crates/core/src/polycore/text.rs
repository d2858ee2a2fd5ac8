//! Text format for polynomials.
//!
//! A polynomial is a sum of terms such as `3/2*x^2*y - y + 1`. Factors in a
//! term are joined by `*`; a factor is either a rational literal (`p` or
//! `p/q` in lowest terms) or a variable name with an optional `^exponent`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::polycore::{Monomial, Polynomial, Rational};

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Parses a polynomial over the named variables.
pub fn parse_polynomial<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<Polynomial> {
    let nvars = vars.len();
    let lookup = |name: &str| vars.iter().position(|v| v.as_ref() == name);
    let mut lx = Lexer { src, pos: 0 };
    let mut poly = Polynomial::zero(nvars);
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some('+') => {
                lx.bump();
                Rational::one()
            }
            Some('-') => {
                lx.bump();
                -Rational::one()
            }
            Some(_) if first => Rational::one(),
            Some(_) => return Err(lx.err("expected '+' or '-'")),
        };
        first = false;
        let mut coeff = sign;
        let mut exps = vec![0u32; nvars];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.take_while(|c| c.is_ascii_digit());
                    let lit = if lx.peek() == Some('/') {
                        lx.bump();
                        lx.skip_ws();
                        let den = lx.take_while(|c| c.is_ascii_digit());
                        if den.is_empty() {
                            return Err(lx.err("missing denominator"));
                        }
                        format!("{num}/{den}")
                    } else {
                        num.to_string()
                    };
                    coeff = &coeff * &lit.parse::<Rational>()?;
                }
                Some(c) if is_ident_start(c) => {
                    let name = lx.take_while(is_ident);
                    let idx = lookup(name).ok_or_else(|| lx.err(&format!("unknown variable {name:?}")))?;
                    let mut e = 1u32;
                    if lx.peek() == Some('^') {
                        lx.bump();
                        lx.skip_ws();
                        let digits = lx.take_while(|c| c.is_ascii_digit());
                        e = digits.parse().map_err(|_| lx.err("invalid exponent"))?;
                    }
                    exps[idx] += e;
                }
                _ => return Err(lx.err("expected a coefficient or variable")),
            }
            if lx.peek() == Some('*') {
                lx.bump();
            } else {
                break;
            }
        }
        poly.add_term(Monomial::new(exps), coeff);
    }
    Ok(poly)
}

/// Renders a polynomial, leading (graded-lex largest) term first.
pub fn format_polynomial<S: AsRef<str>>(p: &Polynomial, vars: &[S]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for (j, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[j].as_ref().to_string()),
                _ => factors.push(format!("{}^{}", vars[j].as_ref(), e)),
            }
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
    out
}
