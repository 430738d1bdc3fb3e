//! Formal Schur expansions `Σ c_λ s_λ` with Laurent-polynomial coefficients,
//! and the operators acting on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{LaurentPoly, Monomial, Var};
use crate::shapes::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 · s_λ`
    pub fn basis(lambda: Partition) -> Self {
        Self::term(lambda, LaurentPoly::one())
    }

    pub fn term(lambda: Partition, c: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(lambda, &c);
        e
    }

    /// Sum of basis elements, with multiplicity.
    pub fn from_partitions<I: IntoIterator<Item = Partition>>(it: I) -> Self {
        let mut e = Self::zero();
        for p in it {
            e.add_term(p, &LaurentPoly::one());
        }
        e
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `s_λ` once.
    pub fn add_basis(&mut self, lambda: Partition) {
        self.add_term(lambda, &LaurentPoly::one());
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

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn map_coeffs<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> Self {
        let mut e = Self::zero();
        for (l, c) in &self.terms {
            e.add_term(l.clone(), &f(c));
        }
        e
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Every coefficient has nonnegative integer coefficients.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(LaurentPoly::has_nonnegative_coefficients)
    }
}

impl AddAssign<&SchurExpansion> for SchurExpansion {
    fn add_assign(&mut self, rhs: &SchurExpansion) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c);
        }
    }
}

impl SubAssign<&SchurExpansion> for SchurExpansion {
    fn sub_assign(&mut self, rhs: &SchurExpansion) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), &-c);
        }
    }
}

impl Add<&SchurExpansion> for &SchurExpansion {
    type Output = SchurExpansion;
    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut e = self.clone();
        e += rhs;
        e
    }
}

impl Sub<&SchurExpansion> for &SchurExpansion {
    type Output = SchurExpansion;
    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut e = self.clone();
        e -= rhs;
        e
    }
}

impl Add for SchurExpansion {
    type Output = SchurExpansion;
    fn add(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self += &rhs;
        self
    }
}

impl Sub for SchurExpansion {
    type Output = SchurExpansion;
    fn sub(mut self, rhs: SchurExpansion) -> SchurExpansion {
        self -= &rhs;
        self
    }
}

impl Neg for &SchurExpansion {
    type Output = SchurExpansion;
    fn neg(self) -> SchurExpansion {
        self.map_coeffs(|c| -c)
    }
}

impl std::iter::Sum for SchurExpansion {
    fn sum<I: Iterator<Item = SchurExpansion>>(iter: I) -> Self {
        iter.fold(SchurExpansion::zero(), |a, b| a + b)
    }
}

fn render_symbol(l: &Partition) -> String {
    format!("s[{l}]")
}

/// Terms in decreasing lexicographic order of the index, `s_∅` shown as `1`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (l, c) in self.terms.iter().rev() {
            let (neg, c) = match c.as_integer() {
                Some(i) if i < BigInt::from(0) => (true, -c),
                _ => (false, c.clone()),
            };
            let body = match (c.as_integer(), l.is_empty()) {
                (Some(i), true) => i.to_string(),
                (Some(i), false) if i == BigInt::from(1) => render_symbol(l),
                (Some(i), false) => format!("{i} {}", render_symbol(l)),
                (None, true) => format!("({c})"),
                (None, false) => format!("({c}) {}", render_symbol(l)),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => f.write_str(&body)?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Partition,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    terms: Vec<TermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(l, c)| TermJson {
                    lambda: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ExpansionJson::deserialize(d)?;
        let mut e = SchurExpansion::zero();
        for t in j.terms {
            e.add_term(t.lambda, &t.coeff);
        }
        Ok(e)
    }
}

/// All `μ` with `λ/μ` a vertical strip of size `k`.
pub fn vertical_strip_removals(lambda: &Partition, k: usize) -> Vec<Partition> {
    let parts = lambda.parts();
    let l = parts.len();
    let mut out = Vec::new();
    if k > l {
        return out;
    }
    let mut cur = parts.to_vec();
    fn rec(i: usize, left: usize, cur: &mut Vec<u32>, orig: &[u32], out: &mut Vec<Partition>) {
        if left == 0 {
            let mut v: Vec<u32> = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(Partition::new(v).expect("checked row by row"));
            return;
        }
        if i == orig.len() {
            return;
        }
        // rows are processed top-down (last index first) so the check
        // against the row above uses its final value
        let r = orig.len() - 1 - i;
        let above = if r + 1 < orig.len() { cur[r + 1] } else { 0 };
        if orig[r] >= 1 && orig[r] - 1 >= above {
            cur[r] -= 1;
            rec(i + 1, left - 1, cur, orig, out);
            cur[r] += 1;
        }
        if orig.len() - i > left {
            rec(i + 1, left, cur, orig, out);
        }
    }
    rec(0, k, &mut cur, parts, &mut out);
    out.sort();
    out
}

/// `e_k^⊥`: removes vertical strips of size `k`.
pub fn e_perp(k: usize, f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (l, c) in f.terms() {
        for mu in vertical_strip_removals(l, k) {
            out.add_term(mu, c);
        }
    }
    out
}

/// `ω(s_λ) = s_λ'`
pub fn omega(f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (l, c) in f.terms() {
        out.add_term(l.conjugate(), c);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeClass {
    /// `(a, 1^k)`, including `∅`.
    Hooks,
    /// `(a)`, including `∅`.
    OnePart,
    /// `V_b`: `(a, b, 1^k)`; `V_0` is the one-part class, `V_1` the hooks of
    /// length at least two.
    V(u32),
    /// `R = (a, 2, 1^k)`, the same as `V(2)`.
    TwoColumns,
    /// Length at most two (the two-variable restriction).
    AtMostTwoRows,
    Explicit(BTreeSet<Partition>),
}

impl ShapeClass {
    pub fn contains(&self, l: &Partition) -> bool {
        match self {
            ShapeClass::Hooks => l.is_hook(),
            ShapeClass::OnePart | ShapeClass::V(0) => l.len() <= 1,
            ShapeClass::V(b) => l.len() >= 2 && l.part(2) == *b && l.part(3) <= 1,
            ShapeClass::TwoColumns => ShapeClass::V(2).contains(l),
            ShapeClass::AtMostTwoRows => l.len() <= 2,
            ShapeClass::Explicit(set) => set.contains(l),
        }
    }

    /// Accepts `hooks`, `one-part`, `V<b>`, `two-column`, `two-rows`.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "hooks" => ShapeClass::Hooks,
            "one-part" | "one_part" => ShapeClass::OnePart,
            "two-column" | "two-columns" | "two_columns" | "R" => ShapeClass::TwoColumns,
            "two-rows" | "2" => ShapeClass::AtMostTwoRows,
            _ => match s.strip_prefix('V').and_then(|b| b.parse().ok()) {
                Some(b) => ShapeClass::V(b),
                None => return Err(Error::UnknownPredicate(s.to_string())),
            },
        })
    }
}

pub fn restrict(f: &SchurExpansion, class: &ShapeClass) -> SchurExpansion {
    SchurExpansion {
        terms: f
            .terms
            .iter()
            .filter(|(l, _)| class.contains(l))
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect(),
    }
}

/// `ψ(s_λ) = q^{λ_1} t^{ℓ(λ)-1}`, with `ψ(s_∅) = 1`.
pub fn psi(f: &SchurExpansion) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (l, c) in f.terms() {
        let m = if l.is_empty() {
            Monomial::ONE
        } else {
            Monomial::new(l.part(1) as i32, l.len() as i32 - 1, 0)
        };
        p += &c.mul_monomial(m);
    }
    p
}

/// Inverse of `ψ` on hook-supported expansions with integer coefficients:
/// `q^a t^k ↦ s_{(a,1^k)}`.
pub fn psi_inverse_hooks(p: &LaurentPoly) -> Result<SchurExpansion> {
    let mut e = SchurExpansion::zero();
    for (m, c) in p.terms() {
        let (a, k) = (m.exponent(Var::Q), m.exponent(Var::T));
        if a < 1 || k < 0 || m.exponent(Var::Z) != 0 {
            return Err(Error::PsiInverse(format!("{m}")));
        }
        let hook = Partition::from_arm_legs(a as i64, k as i64).expect("a >= 1, k >= 0");
        e.add_term(hook, &LaurentPoly::constant(c.clone()));
    }
    Ok(e)
}

/// `s_λ(q, t)`: zero for more than two rows, otherwise
/// `(qt)^b Σ_{i=0}^{a-b} q^i t^{a-b-i}`.
pub fn schur_two_vars(l: &Partition) -> LaurentPoly {
    if l.len() > 2 {
        return LaurentPoly::zero();
    }
    let (a, b) = (l.part(1) as i32, l.part(2) as i32);
    (0..=a - b)
        .map(|i| LaurentPoly::monomial(1, b + i, b + a - b - i, 0))
        .sum()
}

pub fn specialize2(f: &SchurExpansion) -> LaurentPoly {
    f.terms().map(|(l, c)| c * &schur_two_vars(l)).sum()
}

/// Oracle scale for [`ssyt_specialize_oracle`].
pub const SSYT_ORACLE_MAX_SIZE: u32 = 10;
pub const SSYT_ORACLE_MAX_LETTERS: u32 = 3;

/// `s_λ(x_1, .., x_m)` with `x_1, x_2, x_3 = q, t, z`, by enumerating
/// semistandard fillings.
pub fn ssyt_specialize_oracle(l: &Partition, m: u32) -> Result<LaurentPoly> {
    if m > SSYT_ORACLE_MAX_LETTERS || l.size() > SSYT_ORACLE_MAX_SIZE {
        return Err(Error::OracleScale(format!(
            "shape {l} with {m} letters (limits: size {SSYT_ORACLE_MAX_SIZE}, {SSYT_ORACLE_MAX_LETTERS} letters)"
        )));
    }
    let cells: Vec<(usize, usize)> = l
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = l.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = LaurentPoly::zero();

    fn rec(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, m: u32, out: &mut LaurentPoly) {
        if i == cells.len() {
            let mut e = [0i32; 3];
            for row in grid.iter() {
                for &v in row {
                    e[v as usize - 1] += 1;
                }
            }
            out.add_term(Monomial::new(e[0], e[1], e[2]), 1.into());
            return;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=m {
            grid[r][c] = v;
            rec(i + 1, cells, grid, m, out);
        }
        grid[r][c] = 0;
    }

    rec(0, &cells, &mut grid, m, &mut out);
    Ok(out)
}
