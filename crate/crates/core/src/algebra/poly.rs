//! Sparse univariate polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent → coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<u64, BigInt>,
}

impl Polynomial {
    pub fn monomial(coeff: impl Into<BigInt>, exp: u64) -> Self {
        let mut p = Polynomial::default();
        p.add_term(exp, coeff.into());
        p
    }

    /// `x^exp` with coefficient one.
    pub fn x_pow(exp: u64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::default();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: u64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * num_traits::pow(x.clone(), *e as usize))
            .sum()
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: u64) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(1)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> AddAssign<&'a Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &'a Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}

impl Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |a, b| a * b)
    }
}

/// Text form `c0 + c1*x^e1 + ...`, ascending exponents; unit coefficients on
/// non-constant terms are omitted and negative terms use ` - `.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{abs}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Accepts the display form plus common variants: `x`, `3x^2`, `3*x`,
    /// `-x^4`, `2 + -3*x^2`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::default();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut i = 0;
        let mut pieces = Vec::new();
        while i <= bytes.len() {
            let at_split = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start
                    && !matches!(bytes[i - 1], b'^' | b'+' | b'-' | b'*'));
            if at_split {
                pieces.push(&compact[start..i]);
                start = i;
            }
            i += 1;
        }
        for raw in pieces {
            let mut sign = 1i64;
            let mut body = raw;
            while let Some(c) = body.chars().next() {
                match c {
                    '+' => body = &body[1..],
                    '-' => {
                        sign = -sign;
                        body = &body[1..];
                    }
                    _ => break,
                }
            }
            let (e, c) = parse_term(body, sign)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

fn parse_term(body: &str, sign: i64) -> Result<(u64, BigInt)> {
    let bad = || Error::Parse(format!("bad polynomial term '{body}'"));
    if body.is_empty() {
        return Err(bad());
    }
    match body.find('x') {
        None => {
            let c: BigInt = body.parse().map_err(|_| bad())?;
            Ok((0, c * sign))
        }
        Some(pos) => {
            let coeff_part = body[..pos].trim_end_matches('*');
            let coeff: BigInt = if coeff_part.is_empty() {
                BigInt::one()
            } else {
                coeff_part.parse().map_err(|_| bad())?
            };
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                let digits = rest.strip_prefix('^').ok_or_else(bad)?;
                let digits = digits.strip_prefix('+').unwrap_or(digits);
                digits.parse::<u64>().map_err(|_| bad())?
            };
            Ok((exp, coeff * sign))
        }
    }
}

/// JSON form: `{"<exp>": coeff}` with coefficients as numbers when they fit in
/// an `i64` and as decimal strings otherwise.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = ser.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &crate::json::BigIntValue(c.clone()))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, crate::json::BigIntValue> = BTreeMap::deserialize(de)?;
        let mut p = Polynomial::default();
        for (e, c) in raw {
            let e: u64 = e
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad exponent '{e}'")))?;
            p.add_term(e, c.0);
        }
        Ok(p)
    }
}
