//! Classical q-analogues: q-integers, q-factorials, Gaussian binomials and
//! q-Pochhammer products.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::qpoly::{LaurentPoly, Var};

/// `[n]_q = 1 + q + ... + q^{n-1}`
pub fn q_int(n: u32) -> LaurentPoly {
    (0..n as i64).map(LaurentPoly::q_pow).sum()
}

/// `[n]!_q = [1]_q [2]_q ... [n]_q`
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &q_int(i))
}

fn binomial_cache() -> &'static Mutex<HashMap<(i64, i64), LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gaussian binomial `[n k]_q`, zero outside `0 <= k <= n`.
///
/// Built from the q-Pascal rule `[n k] = [n-1 k-1] + q^k [n-1 k]`, memoized
/// across calls.
pub fn gauss_binomial(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    if k == 0 || k == n {
        return LaurentPoly::one();
    }
    if let Some(p) = binomial_cache().lock().unwrap().get(&(n, k)) {
        return p.clone();
    }
    let p = gauss_binomial(n - 1, k - 1) + &LaurentPoly::q_pow(k) * &gauss_binomial(n - 1, k);
    binomial_cache().lock().unwrap().insert((n, k), p.clone());
    p
}

/// `[n k]_{q^{-1}}`
pub fn gauss_binomial_inv(n: i64, k: i64) -> LaurentPoly {
    gauss_binomial(n, k)
        .substitute(&[(Var::Q, LaurentPoly::q_pow(-1))])
        .expect("q^-1 is a unit monomial")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochhammerForm {
    /// `(-q a; q)_m = prod_{i=1}^{m} (1 + a q^i)`
    Rising,
    /// `(a; q)_m = prod_{i=0}^{m-1} (1 - a q^i)`
    Falling,
}

pub fn q_pochhammer(arg: &LaurentPoly, m: u32, form: PochhammerForm) -> Result<LaurentPoly> {
    if arg.as_monomial().is_none() {
        return Err(Error::NonMonomialSubstitution { var: 'a' });
    }
    let one = LaurentPoly::one();
    let factors = (0..m as i64).map(|i| match form {
        PochhammerForm::Rising => &one + &(arg * &LaurentPoly::q_pow(i + 1)),
        PochhammerForm::Falling => &one - &(arg * &LaurentPoly::q_pow(i)),
    });
    Ok(factors.fold(LaurentPoly::one(), |acc, f| &acc * &f))
}

/// `binom(n, 2)` style helper over signed integers, `C(m,2) = m(m-1)/2`.
pub fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}
