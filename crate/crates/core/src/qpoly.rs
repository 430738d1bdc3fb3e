//! Sparse Laurent polynomials in `q`, `t`, `z` with big-integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by the exponent triple, so iteration,
//! display and serialization all follow the lexicographic order on
//! `(e_q, e_t, e_z)`. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    Z,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::T => 't',
            Var::Z => 'z',
        }
    }
}

/// Exponent triple of a monomial `q^q t^t z^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub q: i32,
    pub t: i32,
    pub z: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0, z: 0 };

    pub fn new(q: i32, t: i32, z: i32) -> Self {
        Monomial { q, t, z }
    }

    pub fn exponent(&self, var: Var) -> i32 {
        match var {
            Var::Q => self.q,
            Var::T => self.t,
            Var::Z => self.z,
        }
    }

    pub fn single(v: Var, e: i32) -> Self {
        match v {
            Var::Q => Monomial::new(e, 0, 0),
            Var::T => Monomial::new(0, e, 0),
            Var::Z => Monomial::new(0, 0, e),
        }
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            t: self.t + other.t,
            z: self.z + other.z,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, e) in [('q', self.q), ('t', self.t), ('z', self.z)] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    /// `c * q^eq * t^et * z^ez`
    pub fn monomial(c: impl Into<BigInt>, eq: i32, et: i32, ez: i32) -> Self {
        Self::term(c, Monomial::new(eq, et, ez))
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(1, Monomial::single(v, e))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::var_pow(Var::Q, e as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// The single term of a monomial-shaped polynomial.
    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    /// The integer value if the polynomial is constant (zero counts).
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) != 0)
    }

    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.times(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution of variables by monomials.
    pub fn substitute(&self, rules: &[(Var, LaurentPoly)]) -> Result<Self> {
        let mut images: [Option<(Monomial, BigInt)>; 3] = [None, None, None];
        for (v, img) in rules {
            let (m, c) = img
                .as_monomial()
                .ok_or(Error::NonMonomialSubstitution { var: v.symbol() })?;
            images[*v as usize] = Some((m, c.clone()));
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = Monomial::ONE;
            for v in [Var::Q, Var::T, Var::Z] {
                let e = m.exponent(v);
                match &images[v as usize] {
                    None => mono = mono.times(Monomial::single(v, e)),
                    Some((img_m, img_c)) => {
                        if e < 0 && !(img_c.is_one() || (-img_c).is_one()) {
                            return Err(Error::NonIntegralSubstitution {
                                var: v.symbol(),
                                image: LaurentPoly::term(img_c.clone(), *img_m).to_string(),
                            });
                        }
                        // (±1)^(-e) == (±1)^e
                        coeff *= num_traits::pow(img_c.clone(), e.unsigned_abs() as usize);
                        mono = mono.times(Monomial::new(img_m.q * e, img_m.t * e, img_m.z * e));
                    }
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }

    /// Sets `v = 0`. Only defined when no term carries a negative power of `v`.
    pub fn at_zero(&self, v: Var) -> Result<Self> {
        if self.min_degree(v).is_some_and(|d| d < 0) {
            return Err(Error::NegativeExponentAtZero {
                var: v.symbol(),
                poly: self.to_string(),
            });
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    /// Sets `v = 1`.
    pub fn at_one(&self, v: Var) -> Self {
        self.substitute(&[(v, LaurentPoly::one())])
            .expect("1 is a monomial with unit coefficient")
    }

    /// `p(q^{-1}) * q^{deg_q p}`, for polynomials in `q` alone.
    pub fn rev_q(&self) -> Result<Self> {
        if self.uses(Var::T) || self.uses(Var::Z) || self.min_degree(Var::Q).is_some_and(|d| d < 0) {
            return Err(Error::RevQDomain(self.to_string()));
        }
        let Some(deg) = self.max_degree(Var::Q) else {
            return Ok(Self::zero());
        };
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(deg - m.q, 0, 0), c.clone()))
                .collect(),
        })
    }

    /// Collects the coefficient of `v^e` as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, e: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == e)
                .map(|(m, c)| {
                    let mut m = *m;
                    match v {
                        Var::Q => m.q = 0,
                        Var::T => m.t = 0,
                        Var::Z => m.z = 0,
                    }
                    (m, c.clone())
                })
                .collect(),
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::term(1, m)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: i32,
    t: i32,
    z: i32,
    c: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                q: m.q,
                t: m.t,
                z: m.z,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad coefficient `{}`", t.c)))?;
            p.add_term(Monomial::new(t.q, t.t, t.z), c);
        }
        Ok(p)
    }
}
