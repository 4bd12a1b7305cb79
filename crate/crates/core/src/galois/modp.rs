//! Dense polynomials over `F_p` and distinct-degree factorization.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::partition::CycleType;

/// A polynomial over `F_p`, coefficients ascending and reduced; the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ModPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

impl ModPolynomial {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, coeffs: c }
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&l) => {
                let inv = invm(l, self.p);
                Self {
                    p: self.p,
                    coeffs: self.coeffs.iter().map(|&c| mulm(c, inv, self.p)).collect(),
                }
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, i as u64 % p, p))
            .collect();
        Self::new(p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return Self::new(p, Vec::new());
        }
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % pp;
            }
        }
        Self::new(p, acc.into_iter().map(|x| x as u64).collect())
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree().expect("nonzero divisor");
        let inv = invm(d.coeffs[dd], p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::new(p, Vec::new()), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mulm(r[k + dd], inv, p);
            q[k] = c;
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - mulm(c, dc, p)) % p;
                }
            }
        }
        r.truncate(dd);
        (Self::new(p, q), Self { p, coeffs: r }.trimmed())
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

impl fmt::Debug for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.coeffs, self.p)
    }
}

/// Result of reducing an integer polynomial modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub poly: ModPolynomial,
    /// The prime divides the leading coefficient.
    pub degree_dropped: bool,
}

pub fn reduce_mod(f: &IntPolynomial, p: u64) -> Reduction {
    let pb = BigInt::from(p);
    let coeffs: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &pb) + &pb) % &pb;
            r.to_u64().expect("reduced below p")
        })
        .collect();
    let poly = ModPolynomial::new(p, coeffs);
    let degree_dropped = poly.degree() != Some(f.degree());
    Reduction {
        poly,
        degree_dropped,
    }
}

/// `p ∤ lead(f)` and `f mod p` squarefree: Dedekind's criterion then applies.
pub fn usable_prime(f: &IntPolynomial, p: u64) -> bool {
    let r = reduce_mod(f, p);
    !r.degree_dropped && r.poly.is_squarefree()
}

/// Stages of distinct-degree factorization: `(d, product of the degree-d factors)`.
pub fn ddf_components(f: &ModPolynomial) -> Result<Vec<(usize, ModPolynomial)>> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::Input("distinct-degree factorization needs positive degree".into()));
    }
    if !f.is_squarefree() {
        return Err(Error::Domain(
            "contract violation: distinct-degree factorization needs a squarefree polynomial".into(),
        ));
    }
    let p = f.p;
    let x = ModPolynomial::x(p);
    let mut rest = f.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if deg < 2 * d {
            out.push((deg, rest.clone()));
            break;
        }
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree() > Some(0) {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    Ok(out)
}

/// Degrees of the irreducible factors of a squarefree polynomial, as a cycle type.
pub fn ddf_pattern(f: &ModPolynomial) -> Result<CycleType> {
    let mut parts = Vec::new();
    for (d, g) in ddf_components(f)? {
        let e = g.degree().expect("nonzero");
        parts.extend(std::iter::repeat_n(d as u32, e / d));
    }
    CycleType::new(parts)
}
