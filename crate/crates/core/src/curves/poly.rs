//! Sparse multivariate polynomials and a small expression parser for them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::Field;
use crate::error::{Error, Result};

/// A polynomial in `nvars` variables, stored as exponent vector → nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    field: K,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, K::Elem>,
}

impl<K: Field> Poly<K> {
    pub fn zero(field: &K, nvars: usize) -> Self {
        Poly { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &K, nvars: usize, c: K::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(field: &K, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(field, nvars);
        p.add_term(e, field.one());
        p
    }

    pub fn from_terms(field: &K, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, K::Elem)>) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Structural(format!(
                    "exponent vector {e:?} has length {}, expected {nvars}",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: K::Elem) {
        let k = &self.field;
        let sum = match self.terms.get(&e) {
            Some(old) => k.add(old, &c),
            None => c,
        };
        if k.is_zero(&sum) {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &K::Elem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<K::Elem> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    /// Common total degree of all terms, or `None` if not homogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let k = &self.field;
        Poly {
            field: k.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), k.neg(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        let mut out = Self::zero(k, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, k.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(&self.field, self.nvars, self.field.one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative; multiplicities are reduced in the field,
    /// so they can vanish in positive characteristic.
    pub fn partial(&self, i: usize) -> Self {
        let k = &self.field;
        let mut out = Self::zero(k, self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, k.mul(c, &k.from_i64(e[i] as i64)));
        }
        out
    }

    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        let k = &self.field;
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { names(i) } else { format!("{}^{x}", names(i)) })
                .collect();
            let coeff = k.render(c);
            parts.push(match (mono.is_empty(), k.is_one(c)) {
                (true, _) => coeff,
                (false, true) => mono.join("*"),
                (false, false) => format!("{coeff}*{}", mono.join("*")),
            });
        }
        parts.join(" + ")
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("x{i}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().expect("digits parse")));
        } else if c.is_ascii_alphabetic() {
            // a letter followed by digits: `x12`, `s`, `t`
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            out.push(Token::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    field: &'a K,
    nvars: usize,
    resolve: &'a dyn Fn(&str) -> Option<usize>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<K>> {
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Token::Num(_)) | Some(Token::Ident(_)) | Some(Token::Op('(')))
    }

    fn term(&mut self) -> Result<Poly<K>> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let divisor = self.power()?;
                let c = divisor
                    .as_constant()
                    .ok_or_else(|| Error::Parse("division is only allowed by constants".into()))?;
                let inv =
                    self.field.inv(&c).ok_or_else(|| Error::Parse("division by zero in this characteristic".into()))?;
                acc = acc.mul(&Poly::constant(self.field, self.nvars, inv));
            } else if self.starts_factor() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly<K>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(format!("expected an exponent after '^', found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<K>> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.field, self.nvars, self.field.from_bigint(&n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = (self.resolve)(&name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                Ok(Poly::var(self.field, self.nvars, i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an expression in `+ - * / ^ ( )`, integer literals and variables
/// named by `resolve`.
pub fn parse_poly<K: Field>(
    field: &K,
    nvars: usize,
    src: &str,
    resolve: &dyn Fn(&str) -> Option<usize>,
) -> Result<Poly<K>> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { field, nvars, resolve, tokens, pos: 0 };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input after position {} in {src:?}", parser.pos)));
    }
    Ok(p)
}

/// Largest `i` among variables `x<i>` appearing in `src`.
pub fn max_x_index(src: &str) -> Option<usize> {
    tokenize(src)
        .ok()?
        .into_iter()
        .filter_map(|t| match t {
            Token::Ident(name) => name.strip_prefix('x').and_then(|d| d.parse().ok()),
            _ => None,
        })
        .max()
}
