//! Closed formulas for hook components of `⟨E_{rn,n}, s_μ⟩`, the two-variable
//! maj formulas, the `t = 0` oracle, the inclusion–exclusion lifts and the
//! two-column formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{enumerate_t, gf_t, LatticePath, Step};
use crate::qanalog::{binom2, gauss_binomial, gauss_binomial_inv};
use crate::qpoly::{LaurentPoly, Monomial, Var};
use crate::schur::{e_perp, psi, restrict, SchurExpansion, ShapeClass};
use crate::shapes::{enumerate_syt, hook_tableaux, Partition, StdTableau};

/// Largest `n` accepted by [`hrs_t0`].
pub const HRS_MAX_N: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaStatus {
    Proven,
    Conjectural,
}

impl fmt::Display for FormulaStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaStatus::Proven => "proven",
            FormulaStatus::Conjectural => "conjectural",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookFormulaInput {
    pub n: u32,
    pub r: u32,
    pub mu: Partition,
}

impl HookFormulaInput {
    pub fn new(mu: Partition, r: u32) -> Result<Self> {
        let n = mu.size();
        if n < 2 {
            return Err(Error::OutOfRange(format!("hook formula needs n >= 2, got {n}")));
        }
        if r < 1 {
            return Err(Error::OutOfRange("r must be at least 1".into()));
        }
        Ok(HookFormulaInput { n, r, mu })
    }

    /// `r = 1` and `μ ∈ {(n), (n-1,1), (n-2,1,1), (1^n)}`.
    pub fn status(&self) -> FormulaStatus {
        let n = self.n as i64;
        let proven_shapes = [
            Partition::from_arm_legs(n, 0),
            Partition::from_arm_legs(n - 1, 1),
            Partition::from_arm_legs(n - 2, 2),
            Partition::from_arm_legs(1, n - 1),
        ];
        if self.r == 1 && proven_shapes.iter().flatten().any(|p| *p == self.mu) {
            FormulaStatus::Proven
        } else {
            FormulaStatus::Conjectural
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookFormulaOutput {
    pub expansion: SchurExpansion,
    pub status: FormulaStatus,
}

/// Descent count and major index of the conjugate tableau.
fn conj_stats(t: &StdTableau) -> (u32, u32) {
    let c = t.conjugate();
    (c.des(), c.maj())
}

/// `hook(γ) = ((r-1)C(n,2) + area + ht - maj(τ') + 1, 1^{n-2-ht})`
pub fn hook_of(n: u32, r: u32, g: &LatticePath, maj_conj: u32) -> (i64, i64) {
    let arm = (r as i64 - 1) * binom2(n as i64) + g.area() as i64 + g.ht() as i64 - maj_conj as i64 + 1;
    let legs = n as i64 - 2 - g.ht() as i64;
    (arm, legs)
}

/// `Σ_{τ ∈ SYT(μ)} Σ_{γ ∈ T_{n,des(τ')}} s_{hook(γ)}`.
pub fn hook_formula(input: &HookFormulaInput) -> Result<HookFormulaOutput> {
    let (n, r) = (input.n, input.r);
    let mut e = SchurExpansion::zero();
    for t in enumerate_syt(&input.mu)? {
        let (des_c, maj_c) = conj_stats(&t);
        for g in enumerate_t(n, des_c) {
            let (arm, legs) = hook_of(n, r, &g, maj_c);
            let hook = Partition::from_arm_legs(arm, legs).ok_or_else(|| Error::HookUnderflow {
                tableau: t.to_string(),
                path: g.word(),
                arm,
                legs,
            })?;
            e.add_basis(hook);
        }
    }
    Ok(HookFormulaOutput {
        expansion: e,
        status: input.status(),
    })
}

/// `Σ_{γ ∈ T_{n,0}} s_{((r-1)C(n,2)+area+ht+1, 1^{n-2-ht})}`
pub fn alternant_formula(n: u32, r: u32) -> SchurExpansion {
    let mut e = SchurExpansion::zero();
    for g in enumerate_t(n, 0) {
        let (arm, legs) = hook_of(n, r, &g, 0);
        e.add_basis(Partition::from_arm_legs(arm, legs).expect("arm >= 1 on T_{n,0}"));
    }
    e
}

fn two_row(a: i64, b: i64) -> Option<Partition> {
    Partition::from_signed(&[a, b])
}

fn require_hook(mu: &Partition) -> Result<()> {
    if mu.is_empty() || !mu.is_hook() {
        return Err(Error::InvalidPartition(format!("{mu} is not a hook")));
    }
    Ok(())
}

/// Two-variable maj formula for hook `μ`:
/// `Σ_τ s_{(rC(n,2)-maj τ')} + Σ_{i=2}^{des τ} s_{(rC(n,2)-maj τ'-i, 1)}`.
pub fn gl2_nabla_hooks(n: u32, r: u32, mu: &Partition) -> Result<SchurExpansion> {
    require_hook(mu)?;
    if mu.size() != n {
        return Err(Error::InvalidPartition(format!("{mu} is not a partition of {n}")));
    }
    let top = r as i64 * binom2(n as i64);
    let mut e = SchurExpansion::zero();
    for t in enumerate_syt(mu)? {
        let (_, maj_c) = conj_stats(&t);
        let base = top - maj_c as i64;
        if let Some(p) = two_row(base, 0) {
            e.add_basis(p);
        }
        for i in 2..=t.des() as i64 {
            if let Some(p) = two_row(base - i, 1) {
                e.add_basis(p);
            }
        }
    }
    Ok(e)
}

/// `Σ_{τ ∈ SYT(n-k, 1^k)} s_{(maj τ)} + Σ_{i=2}^{k} s_{(maj τ - i, 1)}`
pub fn gl2_delta_en(n: u32, k: u32) -> Result<SchurExpansion> {
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!("need 0 <= k <= n-1, got n={n} k={k}")));
    }
    let mut e = SchurExpansion::zero();
    for t in hook_tableaux(n, n - k - 1) {
        let m = t.maj() as i64;
        if let Some(p) = two_row(m, 0) {
            e.add_basis(p);
        }
        for i in 2..=k as i64 {
            if let Some(p) = two_row(m - i, 1) {
                e.add_basis(p);
            }
        }
    }
    Ok(e)
}

/// Two-row part of `Δ'_{e_k}(e_n)` paired with `s_μ`, read off paths of
/// `T_{n,des(τ')}` by height. At `k = n-1` only heights `k-2` (two rows) and
/// `k-1` (one row) contribute.
pub fn gl2_delta_mu(n: u32, k: u32, mu: &Partition) -> Result<SchurExpansion> {
    if mu.size() != n || k >= n {
        return Err(Error::OutOfRange(format!("need |μ| = n and k <= n-1, got μ={mu} n={n} k={k}")));
    }
    let k = k as i64;
    let last = k == n as i64 - 1;
    let mut e = SchurExpansion::zero();
    for t in enumerate_syt(mu)? {
        let (des_c, maj_c) = conj_stats(&t);
        for g in enumerate_t(n, des_c) {
            let ht = g.ht() as i64;
            let base = g.area() as i64 - maj_c as i64;
            let two = if last { ht == k - 2 } else { ht == k - 2 || ht == k - 1 };
            let one = if last { ht == k - 1 } else { ht == k - 1 || ht == k };
            if two {
                if let Some(p) = two_row(k - 1 + base, 1) {
                    e.add_basis(p);
                }
            }
            if one {
                if let Some(p) = two_row(k + base, 0) {
                    e.add_basis(p);
                }
            }
        }
    }
    Ok(e)
}

/// `Σ_{|τ| = n} q^{k des(τ') + C(n-k,2) - maj(τ')} [des τ, k]_q s_{shape τ}`,
/// the `t = 0` specialization of `Δ'_{e_{n-k-1}}(e_n)`.
pub fn hrs_t0(n: u32, k: u32) -> Result<SchurExpansion> {
    if n > HRS_MAX_N {
        return Err(Error::OracleScale(format!("hrs_t0 needs n <= {HRS_MAX_N}, got {n}")));
    }
    let mut e = SchurExpansion::zero();
    for shape in Partition::all(n) {
        let mut c = LaurentPoly::zero();
        for t in enumerate_syt(&shape)? {
            let (des_c, maj_c) = conj_stats(&t);
            let exp = k as i64 * des_c as i64 + binom2(n as i64 - k as i64) - maj_c as i64;
            c += &(&LaurentPoly::q_pow(exp) * &gauss_binomial(t.des() as i64, k as i64));
        }
        e.add_term(shape, &c);
    }
    Ok(e)
}

/// `q^{rC(n,2) - C(j+1,2)} [n-1, j]_{q^{-1}}`, zero for `j` out of range.
pub fn f_one_part(n: u32, r: u32, j: i64) -> LaurentPoly {
    if n == 0 || j < 0 || j > n as i64 - 1 {
        return LaurentPoly::zero();
    }
    let e = r as i64 * binom2(n as i64) - binom2(j + 1);
    &LaurentPoly::q_pow(e) * &gauss_binomial_inv(n as i64 - 1, j)
}

/// `Σ_{j=0}^{J} Σ_{k=0}^{j} (-1)^k f_{j-k}(q) q^{-k} t^j`, with `J = f.len()-1`.
pub fn lift_hooks(f: &[LaurentPoly]) -> LaurentPoly {
    alternating_lift(f, 0)
}

fn alternating_lift(f: &[LaurentPoly], from: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for j in from..f.len() {
        for k in 0..=j {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            out += &f[j - k].mul_monomial(Monomial::new(-(k as i32), j as i32, 0)).scale(&sign.into());
        }
    }
    out
}

/// Recovers `ψ(G|_{V_{b+1}})` from two-row data of `e_i^⊥ G`:
/// `f_i = ψ((e_i^⊥(G - G|_{V_b}))^{⟨2⟩}|_{V_b}) t^{-1}`, lifted by the
/// alternating sum over `j >= 1`.
pub fn lift_next_column(g: &SchurExpansion, b: u32) -> LaurentPoly {
    let vb = ShapeClass::V(b);
    let rest = g - &restrict(g, &vb);
    let top = g.support().map(|l| l.size() as usize).max().unwrap_or(0);
    let f: Vec<LaurentPoly> = (0..=top + 1)
        .map(|i| {
            let two = restrict(&e_perp(i, &rest), &ShapeClass::AtMostTwoRows);
            psi(&restrict(&two, &vb)).mul_monomial(Monomial::new(0, -1, 0))
        })
        .collect();
    alternating_lift(&f, 1)
}

/// Which identity of the alternating-sum family to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AltVariant {
    /// `Σ_k (-1)^k [n-1, j+k] q^{g_j(k) - (1+c)k} = [n-2, j-1] q^{g_j(0)}` for `1 <= j <= n-1`.
    AltToPos,
    /// The `j = 0` sum vanishes.
    Nulle,
    /// `Σ_j (...) z^{j-1} = q^d T_{n,0}(q,z)` when `g_j(0) = C(j,2) + d`.
    SommeAltPos,
    /// `Σ_j (...) z^{j-1} = q^{d+1} T_{n,0}(q,qz)` when `g_j(0) = C(j+1,2) + d`.
    SommeAltPosAreaHt,
}

impl AltVariant {
    pub const ALL: [AltVariant; 4] = [
        AltVariant::AltToPos,
        AltVariant::Nulle,
        AltVariant::SommeAltPos,
        AltVariant::SommeAltPosAreaHt,
    ];

    /// Base values `g_j(0)` of the canonical family for this variant.
    pub fn base(self, j: i64, d: i64) -> i64 {
        match self {
            AltVariant::SommeAltPos => binom2(j) + d,
            _ => binom2(j + 1) + d,
        }
    }
}

impl fmt::Display for AltVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AltVariant::AltToPos => "alt-to-pos",
            AltVariant::Nulle => "nulle",
            AltVariant::SommeAltPos => "somme-alt-pos",
            AltVariant::SommeAltPosAreaHt => "somme-alt-pos-area-ht",
        })
    }
}

/// A table `g_j(k)` with `g_j(k) - g_j(k-1) = k + j + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFamily {
    c: i64,
    rows: Vec<Vec<i64>>,
}

impl GFamily {
    /// Builds `g_j(k)` for `j, k < size` from the recursion and `g_j(0) = base(j)`.
    pub fn from_base(c: i64, size: usize, base: impl Fn(i64) -> i64) -> Self {
        let rows = (0..size as i64)
            .map(|j| {
                let mut row = vec![base(j)];
                for k in 1..size as i64 {
                    row.push(row[k as usize - 1] + k + j + c);
                }
                row
            })
            .collect();
        GFamily { c, rows }
    }

    /// Accepts an explicit table, rejecting it unless the difference
    /// condition holds everywhere.
    pub fn from_table(c: i64, rows: Vec<Vec<i64>>) -> Result<Self> {
        for (j, row) in rows.iter().enumerate() {
            for k in 1..row.len() {
                if row[k] - row[k - 1] != k as i64 + j as i64 + c {
                    return Err(Error::GFamily {
                        c,
                        j: j as i64,
                        k: k as i64,
                    });
                }
            }
        }
        Ok(GFamily { c, rows })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn get(&self, j: i64, k: i64) -> Result<i64> {
        self.rows
            .get(j as usize)
            .and_then(|r| r.get(k as usize))
            .copied()
            .ok_or_else(|| Error::OutOfRange(format!("g_{j}({k}) not tabulated")))
    }
}

fn alt_sum(n: i64, j: i64, g: &GFamily) -> Result<LaurentPoly> {
    let mut s = LaurentPoly::zero();
    for k in 0..=n - j - 1 {
        let term = &gauss_binomial(n - 1, j + k) * &LaurentPoly::q_pow(g.get(j, k)? - (1 + g.c()) * k);
        if k % 2 == 0 {
            s += &term;
        } else {
            s -= &term;
        }
    }
    Ok(s)
}

/// Checks one identity of the family with the canonical `g` (base offset 0).
pub fn alternating_identity_check(n: u32, c: i64, variant: AltVariant) -> Result<bool> {
    let g = GFamily::from_base(c, n as usize, |j| variant.base(j, 0));
    alternating_identity_check_with(n, &g, variant)
}

/// Checks one identity for an explicit `g` family. The summed variants need
/// `g_j(0) - C(j,2)` (resp. `C(j+1,2)`) independent of `j`.
pub fn alternating_identity_check_with(n: u32, g: &GFamily, variant: AltVariant) -> Result<bool> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("alternating identities need n >= 2, got {n}")));
    }
    let n = n as i64;
    match variant {
        AltVariant::AltToPos => {
            for j in 1..n {
                let rhs = &gauss_binomial(n - 2, j - 1) * &LaurentPoly::q_pow(g.get(j, 0)?);
                if alt_sum(n, j, g)? != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        AltVariant::Nulle => Ok(alt_sum(n, 0, g)?.is_zero()),
        AltVariant::SommeAltPos | AltVariant::SommeAltPosAreaHt => {
            let shift = |j: i64| if variant == AltVariant::SommeAltPos { binom2(j) } else { binom2(j + 1) };
            let d = g.get(1, 0)? - shift(1);
            for j in 1..n {
                if g.get(j, 0)? - shift(j) != d {
                    return Err(Error::OutOfRange(format!(
                        "g_j(0) offsets are not aligned for {variant} at j={j}"
                    )));
                }
            }
            let mut lhs = LaurentPoly::zero();
            for j in 1..n {
                lhs += &alt_sum(n, j, g)?.mul_monomial(Monomial::new(0, 0, j as i32 - 1));
            }
            let t = gf_t(n as u32, 0);
            let rhs = if variant == AltVariant::SommeAltPos {
                t.mul_monomial(Monomial::new(d as i32, 0, 0))
            } else {
                t.substitute(&[(Var::Z, LaurentPoly::monomial(1, 1, 0, 1))])?
                    .mul_monomial(Monomial::new(d as i32 + 1, 0, 0))
            };
            Ok(lhs == rhs)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoColumnForm {
    /// Sum over hook tableaux with `1 ∈ Des(τ)`.
    Lifted,
    /// Sum over paths of `T_{n,0}`.
    Path,
}

/// `(a, 2, 1^legs)`, `None` if not a partition.
pub fn two_column_shape(a: i64, legs: i64) -> Option<Partition> {
    if legs < 0 {
        return None;
    }
    let mut v = vec![a, 2];
    v.extend(std::iter::repeat(1).take(legs as usize));
    Partition::from_signed(&v)
}

/// The part of `⟨E_{n,n}, e_n⟩` indexed by shapes `(a, 2, 1^k)`.
pub fn two_column_formula(n: u32, form: TwoColumnForm) -> SchurExpansion {
    let mut e = SchurExpansion::zero();
    let n = n as i64;
    match form {
        TwoColumnForm::Lifted => {
            for k in 1..=n - 4 {
                for t in hook_tableaux(n as u32, k as u32) {
                    let des = t.descent_set();
                    if !des.contains(&1) {
                        continue;
                    }
                    for i in 2..=n - k - 2 {
                        let covered = (1..=i).all(|d| des.contains(&(d as u32))) && des.contains(&(n as u32 - 1));
                        if covered {
                            continue;
                        }
                        if let Some(p) = two_column_shape(t.maj() as i64 - i, k - 1) {
                            e.add_basis(p);
                        }
                    }
                }
            }
        }
        TwoColumnForm::Path => {
            for i in 2..=n - 3 {
                for g in enumerate_t(n as u32, 0) {
                    let ht = g.ht() as i64;
                    if ht < i || ht > n - 3 {
                        continue;
                    }
                    let excluded = g.starts_with(&[Step::N]) && g.trailing(Step::N) as i64 >= i - 1;
                    if excluded {
                        continue;
                    }
                    let a = g.area() as i64 + ht + 1 - i;
                    if let Some(p) = two_column_shape(a, n - 3 - ht) {
                        e.add_basis(p);
                    }
                }
            }
        }
    }
    e
}
