//! Integer polynomials and their textual syntax.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest degree the parser will build.
pub const MAX_PARSE_DEGREE: usize = 4096;

/// A nonzero polynomial in `Z[x]`, coefficients in ascending degree order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

fn trim(c: &mut Vec<BigInt>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(&mut out);
    out
}

fn neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

impl IntPolynomial {
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Result<Self> {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        trim(&mut c);
        if c.is_empty() {
            return Err(Error::Input("the zero polynomial is not allowed".into()));
        }
        Ok(Self { coeffs: c })
    }

    /// Parses an expression such as `x^5 - x - 1`, or a comma-separated list
    /// of coefficients in ascending degree order such as `-1,-1,0,0,0,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = if text.contains(',') {
            parse_list(text)?
        } else {
            Parser::new(text).parse_all()?
        };
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero")
    }

    pub fn derivative(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect()
    }

    /// `gcd(f, f') = 1` over `Q`, decided with a primitive remainder sequence.
    pub fn is_separable(&self) -> bool {
        if self.degree() == 0 {
            return true;
        }
        let mut d = self.derivative();
        trim(&mut d);
        primitive_gcd_degree(self.coeffs.clone(), d) == 0
    }
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn primitive_part(mut a: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&a);
    if !c.is_zero() && !c.is_one() {
        for x in &mut a {
            *x /= &c;
        }
    }
    a
}

// Pseudo-remainder of a by b (b nonzero).
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    while a.len() >= b.len() && !a.is_empty() {
        let la = a.last().expect("nonempty").clone();
        let shift = a.len() - b.len();
        for x in &mut a {
            *x *= lb;
        }
        for (i, y) in b.iter().enumerate() {
            a[i + shift] -= &la * y;
        }
        trim(&mut a);
    }
    a
}

fn primitive_gcd_degree(a: Vec<BigInt>, b: Vec<BigInt>) -> usize {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_part(pseudo_rem(a, &b));
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn parse_list(text: &str) -> Result<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut col = 1;
    for field in text.split(',') {
        let lead = field.len() - field.trim_start().len();
        let t = field.trim();
        let v: BigInt = t.parse().map_err(|_| Error::Parse {
            column: col + text[..0].len() + lead,
            message: format!("expected an integer coefficient, found {t:?}"),
        })?;
        out.push(v);
        col += field.chars().count() + 1;
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
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

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn describe(&self) -> String {
        match self.chars.get(self.pos) {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn parse_all(mut self) -> Result<Vec<BigInt>> {
        if self.peek().is_none() {
            return self.error("empty polynomial");
        }
        let p = self.expr()?;
        if self.peek().is_some() {
            return self.error(format!("unexpected {}", self.describe()));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Vec<BigInt>> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { add(&acc, &t) } else { add(&acc, &neg(&t)) };
        }
        Ok(acc)
    }

    fn starts_primary(c: char) -> bool {
        c.is_ascii_digit() || c == 'x' || c == 'X' || c == '('
    }

    fn term(&mut self) -> Result<Vec<BigInt>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = mul(&acc, &self.factor()?);
                }
                Some(c) if Self::starts_primary(c) => acc = mul(&acc, &self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<BigInt>> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(neg(&self.factor()?))
            }
            Some('+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.primary()?;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.exponent()?;
                    if base.len().saturating_sub(1) * e > MAX_PARSE_DEGREE {
                        return self.error(format!("degree exceeds {MAX_PARSE_DEGREE}"));
                    }
                    let mut out = vec![BigInt::one()];
                    for _ in 0..e {
                        out = mul(&out, &base);
                    }
                    return Ok(out);
                }
                Ok(base)
            }
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(format!("expected an exponent, found {}", self.describe()));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse::<usize>() {
            Ok(e) if e <= MAX_PARSE_DEGREE => Ok(e),
            _ => {
                self.pos = start;
                self.error(format!("exponent {digits} exceeds {MAX_PARSE_DEGREE}"))
            }
        }
    }

    fn primary(&mut self) -> Result<Vec<BigInt>> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let mut v = vec![digits.parse::<BigInt>().expect("digits")];
                trim(&mut v);
                Ok(v)
            }
            Some('x' | 'X') => {
                self.pos += 1;
                Ok(vec![BigInt::zero(), BigInt::one()])
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.error(format!("expected ')', found {}", self.describe()));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.error(format!("expected a term, found {}", self.describe())),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
