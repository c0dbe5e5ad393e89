//! Exact bivariate Laurent polynomials in `v` and `z` with integer
//! coefficients, plus the canonical text rendering used everywhere a
//! polynomial crosses a process boundary.
//!
//! Coefficients are arbitrary-precision: the polynomials produced by the
//! cable survey grow without bound and overflow is not acceptable in an
//! exact invariant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("malformed factor `{0}`")]
    BadFactor(String),
    #[error("malformed exponent in `{0}`")]
    BadExponent(String),
}

/// Sparse Laurent polynomial in `v` and `z`. Keys are `(v_exp, z_exp)`;
/// stored coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial<C: Into<BigInt>>(coeff: C, v_exp: i32, z_exp: i32) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((v_exp, z_exp), coeff);
        }
        LaurentPoly2 { terms }
    }

    /// `(v^-1 - v) * z^-1`, the value of a 2-component unlink.
    pub fn delta() -> Self {
        Self::monomial(1, -1, -1) + Self::monomial(-1, 1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, v_exp: i32, z_exp: i32) -> BigInt {
        self.terms.get(&(v_exp, z_exp)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_z_exponent(&self) -> Option<i32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn insert_term(&mut self, key: (i32, i32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Deterministic rendering: terms sorted by z-exponent descending, then
    /// v-exponent ascending; coefficient 1 and exponent 1 are elided, and
    /// exponent-0 factors are dropped. The zero polynomial prints as `0`.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<(i32, i32)> = self.terms.keys().cloned().collect();
        keys.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut out = String::new();
        for (idx, key) in keys.iter().enumerate() {
            let coeff = &self.terms[key];
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term_text(&coeff.abs(), key.0, key.1));
        }
        out
    }

    /// Parses the canonical grammar (and tolerates extra whitespace).
    pub fn parse(text: &str) -> Result<Self, PolyParseError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let mut result = Self::zero();
        for (sign, term) in split_terms(text) {
            if term.is_empty() {
                return Err(PolyParseError::BadTerm(text.to_string()));
            }
            let mut coeff = BigInt::one();
            let mut v_exp = 0i32;
            let mut z_exp = 0i32;
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(PolyParseError::BadFactor(term.clone()));
                }
                if let Some(rest) = factor.strip_prefix('v') {
                    v_exp += parse_exponent(rest, factor)?;
                } else if let Some(rest) = factor.strip_prefix('z') {
                    z_exp += parse_exponent(rest, factor)?;
                } else if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|_| PolyParseError::BadFactor(factor.to_string()))?;
                } else {
                    return Err(PolyParseError::BadFactor(factor.to_string()));
                }
            }
            if sign < 0 {
                coeff = -coeff;
            }
            result.insert_term((v_exp, z_exp), coeff);
        }
        Ok(result)
    }
}

fn term_text(abs_coeff: &BigInt, v_exp: i32, z_exp: i32) -> String {
    let mut factors: Vec<String> = Vec::new();
    if !abs_coeff.is_one() || (v_exp == 0 && z_exp == 0) {
        factors.push(abs_coeff.to_string());
    }
    if v_exp == 1 {
        factors.push("v".to_string());
    } else if v_exp != 0 {
        factors.push(format!("v^{v_exp}"));
    }
    if z_exp == 1 {
        factors.push("z".to_string());
    } else if z_exp != 0 {
        factors.push(format!("z^{z_exp}"));
    }
    factors.join("*")
}

/// Splits `a + b - c` into signed term strings, keeping `-` that belongs to
/// an exponent (`v^-1`) inside its factor.
fn split_terms(text: &str) -> Vec<(i32, String)> {
    let mut out = Vec::new();
    let mut sign = 1i32;
    let mut cur = String::new();
    let mut prev_was_caret = false;
    for c in text.chars() {
        match c {
            '+' | '-' if !prev_was_caret => {
                let trimmed = cur.trim().to_string();
                if !trimmed.is_empty() {
                    out.push((sign, trimmed));
                    sign = 1;
                }
                if c == '-' {
                    sign = -sign;
                }
                cur = String::new();
            }
            _ => {
                prev_was_caret = c == '^';
                cur.push(c);
            }
        }
    }
    let trimmed = cur.trim().to_string();
    if !trimmed.is_empty() {
        out.push((sign, trimmed));
    }
    out
}

fn parse_exponent(rest: &str, whole: &str) -> Result<i32, PolyParseError> {
    if rest.is_empty() {
        return Ok(1);
    }
    let rest = rest.strip_prefix('^').ok_or_else(|| PolyParseError::BadFactor(whole.to_string()))?;
    rest.parse::<i32>().map_err(|_| PolyParseError::BadExponent(whole.to_string()))
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (key, coeff) in &rhs.terms {
            out.insert_term(*key, coeff.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (key, coeff) in &rhs.terms {
            out.insert_term(*key, -coeff.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $method(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical_text())
    }
}
