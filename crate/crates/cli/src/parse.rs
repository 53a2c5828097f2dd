//! Ideal input files.
//!
//! ```text
//! # comment
//! flavor = symmetric
//! rank = 4
//! x[1,1] * x[2,2] - x[1,2]^2
//! 2/3 * x[1,2] * x[3,4] + x[1,3] * x[2,4]
//! ```
//!
//! `flavor` and `rank` come first; every other non-blank line is one
//! generator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use tca_lab::algebra::{SparsePolynomial, VariableSystem};
use tca_lab::rational::Q;
use tca_lab::Flavor;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct IdealFile {
    pub flavor: Flavor,
    pub rank: usize,
    pub generators: Vec<SparsePolynomial>,
}

impl IdealFile {
    pub fn system(&self) -> VariableSystem {
        VariableSystem::new(self.flavor, self.rank)
    }
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut flavor = None;
    let mut rank = None;
    let mut generators = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        if let Some((key, value)) = body.split_once('=') {
            let col = body.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
            let vcol = key.len() + 2 + value.find(|c: char| !c.is_whitespace()).unwrap_or(0);
            match key.trim() {
                "flavor" => {
                    flavor = Some(value.trim().parse::<Flavor>().map_err(|e| err(line, vcol, e.to_string()))?);
                }
                "rank" => {
                    let n: usize = value.trim().parse().map_err(|_| err(line, vcol, "rank must be a positive integer"))?;
                    if n == 0 {
                        return Err(err(line, vcol, "rank must be a positive integer"));
                    }
                    rank = Some(n);
                }
                other => return Err(err(line, col, format!("unknown setting '{other}'"))),
            }
            continue;
        }
        let (Some(f), Some(n)) = (flavor, rank) else {
            return Err(err(line, 1, "generator before 'flavor' and 'rank' are set"));
        };
        let sys = VariableSystem::new(f, n);
        generators.push(parse_polynomial_line(&sys, body, line)?);
    }
    match (flavor, rank) {
        (Some(flavor), Some(rank)) => Ok(IdealFile { flavor, rank, generators }),
        (None, _) => Err(err(last_line.max(1), 1, "missing 'flavor = …'")),
        (_, None) => Err(err(last_line.max(1), 1, "missing 'rank = …'")),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str, line: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
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
            out.push((Tok::Num(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^[],".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(err(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    sys: &'a VariableSystem,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(err(self.line, self.col(), message))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected '{c}'"))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("expected a number"),
        }
    }

    fn small(&mut self, what: &str) -> Result<u32, ParseError> {
        let col = self.col();
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| err(self.line, col, format!("{what} out of range")))
    }

    fn polynomial(&mut self) -> Result<SparsePolynomial, ParseError> {
        let mut out = SparsePolynomial::zero();
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return self.fail("expected '+' or '-'");
            };
            let t = self.term()?;
            let sign = if negative { -Q::one() } else { Q::one() };
            out.add_scaled(&t, &sign);
            first = false;
            if self.peek().is_none() {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<SparsePolynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePolynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(_)) => {
                let num = self.integer()?;
                let den = if self.eat('/') {
                    let col = self.col();
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(err(self.line, col, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(SparsePolynomial::constant(Q::new(num, den)))
            }
            Some(Tok::Ident(name)) if name == "x" => {
                let col = self.col();
                self.pos += 1;
                self.expect('[')?;
                let i = self.small("index")?;
                self.expect(',')?;
                let j = self.small("index")?;
                self.expect(']')?;
                let v = SparsePolynomial::var(self.sys, i, j).map_err(|e| err(self.line, col, e.to_string()))?;
                if self.eat('^') {
                    let e = self.small("exponent")?;
                    Ok(v.pow(e))
                } else {
                    Ok(v)
                }
            }
            Some(Tok::Ident(name)) => self.fail(format!("unknown variable '{name}' (expected x[i,j])")),
            _ => self.fail("expected a coefficient or a variable"),
        }
    }
}

/// Parses one generator line in the given variable system.
pub fn parse_polynomial_line(sys: &VariableSystem, text: &str, line: usize) -> Result<SparsePolynomial, ParseError> {
    let toks = tokenize(text, line)?;
    let mut p = Parser { toks, pos: 0, line, end_col: text.chars().count() + 1, sys };
    if p.peek().is_none() {
        return p.fail("empty polynomial");
    }
    let poly = p.polynomial()?;
    if !poly.is_homogeneous() {
        return Err(err(line, 1, "generator is not homogeneous"));
    }
    Ok(poly)
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sys = self.system();
        writeln!(f, "flavor = {}", self.flavor)?;
        writeln!(f, "rank = {}", self.rank)?;
        for g in &self.generators {
            writeln!(f, "{}", g.display(&sys))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_determinant() {
        let f = parse_ideal("# det\nflavor = symmetric\nrank = 2\nx[1,1]*x[2,2] - x[1,2]^2\n").unwrap();
        assert_eq!(f.rank, 2);
        assert_eq!(f.generators.len(), 1);
        assert_eq!(f.generators[0].display(&f.system()).to_string(), "x[1,1] * x[2,2] - x[1,2]^2");
    }

    #[test]
    fn rationals_and_signs() {
        let f = parse_ideal("flavor = alt\nrank = 4\n-1/2 * x[2,1] * x[3,4] + 3 x[1,3]*x[2,4]\n");
        // juxtaposition is not multiplication
        assert_eq!(f.unwrap_err(), err(3, 28, "expected '+' or '-'"));
        let f = parse_ideal("flavor = alt\nrank = 4\n-1/2 * x[2,1] * x[3,4] + 3 * x[1,3]*x[2,4]\n").unwrap();
        assert_eq!(
            f.generators[0].display(&f.system()).to_string(),
            "1/2 * x[1,2] * x[3,4] + 3 * x[1,3] * x[2,4]"
        );
    }

    #[test]
    fn error_positions() {
        let e = parse_ideal("flavor = symmetric\nrank = 2\nx[1,3]\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = parse_ideal("flavor = symmetric\nrank = 2\nx[1,1] * y[1,1]\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 10));
        let e = parse_ideal("flavor = symmetric\nrank = 2\nx[1,1] + x[1,1]^2\n").unwrap_err();
        assert_eq!(e.message, "generator is not homogeneous");
        let e = parse_ideal("flavour = symmetric\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
        let e = parse_ideal("flavor = symmetric\nrank = 2\n2/0 * x[1,1]\n").unwrap_err();
        assert_eq!((e.line, e.col, e.message.as_str()), (3, 3, "zero denominator"));
        let e = parse_ideal("x[1,1]\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(parse_ideal("flavor = symmetric\n").is_err());
        let e = parse_ideal("flavor = symmetric\nrank = 2\nx[1,1] $\n").unwrap_err();
        assert_eq!((e.line, e.col), (3, 8));
    }
}
