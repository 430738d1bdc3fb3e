//! North/east paths in the `(n-2)`-staircase: the family `T_{n,s}`, its
//! `area` and `ht` statistics, named subsets and generating functions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qanalog::binom2;
use crate::qpoly::{LaurentPoly, Monomial};

/// Longest word we store (bit-packed into a `u64`).
pub const MAX_WORD_LEN: u32 = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

/// Clamps the start height: `s >= n - 2` becomes `n - 2`. The flag reports
/// whether clamping happened.
pub fn clamp_start(n: u32, s: u32) -> (u32, bool) {
    let top = n.saturating_sub(2);
    if s > top {
        (top, true)
    } else {
        (s, false)
    }
}

/// A word over `{N, E}` together with its ambient grid `(n, s)`.
///
/// Bit `i` of `bits` is set when step `i` is north.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    n: u32,
    s: u32,
    len: u32,
    bits: u64,
}

impl LatticePath {
    /// Builds a path of `T_{n,s}` from its steps. `s` is clamped first.
    pub fn new(n: u32, s: u32, steps: &[Step]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPath(format!("T({n},{s}) is empty")));
        }
        let (s, _) = clamp_start(n, s);
        let len = n - 2 - s;
        if steps.len() as u32 != len {
            return Err(Error::InvalidPath(format!(
                "word of length {} in T({n},{s}), expected {len}",
                steps.len()
            )));
        }
        if len > MAX_WORD_LEN {
            return Err(Error::InvalidPath(format!("word length {len} exceeds {MAX_WORD_LEN}")));
        }
        let bits = steps
            .iter()
            .enumerate()
            .fold(0u64, |b, (i, &st)| if st == Step::N { b | 1 << i } else { b });
        Ok(LatticePath { n, s, len, bits })
    }

    /// Parses a word (`"NEN"`, or `"eps"` for the empty word) in `T_{n,s}`.
    pub fn parse(n: u32, s: u32, word: &str) -> Result<Self> {
        LatticePath::new(n, s, &parse_word(word)?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn step(&self, i: u32) -> Step {
        if self.bits >> i & 1 == 1 {
            Step::N
        } else {
            Step::E
        }
    }

    pub fn steps(&self) -> Vec<Step> {
        (0..self.len).map(|i| self.step(i)).collect()
    }

    pub fn word(&self) -> String {
        if self.len == 0 {
            return "eps".to_string();
        }
        self.steps()
            .iter()
            .map(|s| match s {
                Step::N => 'N',
                Step::E => 'E',
            })
            .collect()
    }

    pub fn norths(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn easts(&self) -> u32 {
        self.len - self.norths()
    }

    pub fn ht(&self) -> u32 {
        self.s + self.norths()
    }

    /// Boxes south-east of the path: full rows below the start height, plus
    /// in each row crossed by a north step the boxes right of that step.
    pub fn area(&self) -> u32 {
        let top = self.n - 2;
        let mut area: u32 = (0..self.s).map(|j| top - j).sum();
        let (mut x, mut y) = (0u32, self.s);
        for st in self.steps() {
            match st {
                Step::N => {
                    area += top - y - x;
                    y += 1;
                }
                Step::E => x += 1,
            }
        }
        area
    }

    /// Word equality, refusing to compare paths from different grids.
    pub fn same_path(&self, other: &LatticePath) -> Result<bool> {
        if (self.n, self.s) != (other.n, other.s) {
            return Err(Error::GridMismatch(self.n, self.s, other.n, other.s));
        }
        Ok(self.bits == other.bits)
    }

    /// The same word viewed in another grid of matching word length.
    pub fn reambient(&self, n: u32, s: u32) -> Result<Self> {
        LatticePath::new(n, s, &self.steps())
    }

    pub fn starts_with(&self, prefix: &[Step]) -> bool {
        prefix.len() as u32 <= self.len && prefix.iter().enumerate().all(|(i, &p)| self.step(i as u32) == p)
    }

    pub fn ends_with(&self, suffix: &[Step]) -> bool {
        let k = suffix.len() as u32;
        k <= self.len && suffix.iter().enumerate().all(|(i, &p)| self.step(self.len - k + i as u32) == p)
    }

    /// Length of the maximal run of `step` at the start.
    pub fn leading(&self, step: Step) -> u32 {
        (0..self.len).take_while(|&i| self.step(i) == step).count() as u32
    }

    /// Length of the maximal run of `step` at the end.
    pub fn trailing(&self, step: Step) -> u32 {
        (0..self.len).rev().take_while(|&i| self.step(i) == step).count() as u32
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

pub fn parse_word(word: &str) -> Result<Vec<Step>> {
    let w = word.trim();
    if w == "eps" || w.is_empty() {
        return Ok(Vec::new());
    }
    w.chars()
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            _ => Err(Error::InvalidPath(format!("bad step `{c}` in `{w}`"))),
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    n: u32,
    s: u32,
    word: String,
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PathJson {
            n: self.n,
            s: self.s,
            word: self.word(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PathJson::deserialize(d)?;
        LatticePath::parse(j.n, j.s, &j.word).map_err(serde::de::Error::custom)
    }
}

/// All of `T_{n,s}`, north-first lexicographic order. Empty for `n < 2`.
pub fn enumerate_t(n: u32, s: u32) -> Vec<LatticePath> {
    if n < 2 {
        return Vec::new();
    }
    let (s, _) = clamp_start(n, s);
    let len = n - 2 - s;
    assert!(len <= 30, "T({n},{s}) is too large to enumerate");
    // N < E lexicographically; N is bit 1, so walk the complement of a counter
    // read most-significant-step first.
    let count = 1u64 << len;
    (0..count)
        .map(|c| {
            let mut bits = 0u64;
            for i in 0..len {
                let e = c >> (len - 1 - i) & 1 == 1;
                if !e {
                    bits |= 1 << i;
                }
            }
            LatticePath { n, s, len, bits }
        })
        .collect()
}

/// `Σ_{γ ∈ T_{n,s}} q^{area} z^{ht}`
pub fn gf_t(n: u32, s: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for g in enumerate_t(n, s) {
        p.add_term(Monomial::new(g.area() as i32, 0, g.ht() as i32), 1.into());
    }
    p
}

/// The skewed sum `Σ_{γ ∈ T_{m,0}, ht ≥ j} (-qz)^{j-ht} q^{area} z^{ht}`.
pub fn hat_gf(m: u32, j: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for g in enumerate_t(m, 0) {
        let ht = g.ht() as i64;
        if ht < j as i64 {
            continue;
        }
        let d = j as i64 - ht;
        let sign = if d % 2 == 0 { 1 } else { -1 };
        p.add_term(
            Monomial::new((g.area() as i64 + d) as i32, 0, j as i32),
            sign.into(),
        );
    }
    p
}

/// Closed form of `gf_t(n, s)` in terms of `gf_t(n - s, 0)`.
pub fn gf_t_shift_factor(n: u32, s: u32) -> Monomial {
    let s = s as i64;
    let e = (n as i64 - 2 - s) * s + binom2(s + 1);
    Monomial::new(e as i32, 0, s as i32)
}

/// Named path subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathFilter {
    HeightEq(u32),
    /// `T_n^k`: at least `k` east steps.
    AtLeastKEasts(u32),
    StartsWithEast,
    /// Starts with N and ends with exactly `j` north steps.
    StartsNorthEndsExactNorths(u32),
    Prefix(Vec<Step>),
    Suffix(Vec<Step>),
}

impl PathFilter {
    pub fn matches(&self, g: &LatticePath) -> bool {
        match self {
            PathFilter::HeightEq(h) => g.ht() == *h,
            PathFilter::AtLeastKEasts(k) => g.easts() >= *k,
            PathFilter::StartsWithEast => g.starts_with(&[Step::E]),
            PathFilter::StartsNorthEndsExactNorths(j) => {
                g.starts_with(&[Step::N]) && g.trailing(Step::N) == *j
            }
            PathFilter::Prefix(p) => g.starts_with(p),
            PathFilter::Suffix(p) => g.ends_with(p),
        }
    }
}

impl FromStr for PathFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once('=') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s.trim(), None),
        };
        let int = |a: Option<&str>| -> Result<u32> {
            a.and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
        };
        Ok(match name {
            "height_eq" => PathFilter::HeightEq(int(arg)?),
            "at_least_k_easts" => PathFilter::AtLeastKEasts(int(arg)?),
            "starts_with_east" if arg.is_none() => PathFilter::StartsWithEast,
            "starts_north_ends_exact_norths" => PathFilter::StartsNorthEndsExactNorths(int(arg)?),
            "prefix" => PathFilter::Prefix(parse_word(arg.ok_or_else(|| Error::UnknownPredicate(s.into()))?)?),
            "suffix" => PathFilter::Suffix(parse_word(arg.ok_or_else(|| Error::UnknownPredicate(s.into()))?)?),
            _ => return Err(Error::UnknownPredicate(s.to_string())),
        })
    }
}

/// Paths of `T_{n,s}` satisfying every filter.
pub fn filter_paths(n: u32, s: u32, filters: &[PathFilter]) -> Vec<LatticePath> {
    enumerate_t(n, s)
        .into_iter()
        .filter(|g| filters.iter().all(|f| f.matches(g)))
        .collect()
}

/// Parses a comma-separated list of named predicates.
pub fn parse_filters(spec: &str) -> Result<Vec<PathFilter>> {
    spec.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qanalog::{gauss_binomial, q_pochhammer, PochhammerForm};
    use crate::qpoly::Var;
    use proptest::prelude::*;

    fn words(v: &[LatticePath]) -> Vec<String> {
        v.iter().map(|g| g.word()).collect()
    }

    #[test]
    fn t40_fig9() {
        let t = enumerate_t(4, 0);
        assert_eq!(words(&t), ["NN", "NE", "EN", "EE"]);
        let stats: Vec<(u32, u32)> = t.iter().map(|g| (g.area(), g.ht())).collect();
        assert_eq!(stats, [(3, 2), (2, 1), (1, 1), (0, 0)]);
    }

    #[test]
    fn nen_in_t72() {
        let g = LatticePath::parse(7, 2, "NEN").unwrap();
        assert_eq!((g.area(), g.ht()), (13, 4));
        assert_eq!(enumerate_t(7, 2).len(), 8);
    }

    #[test]
    fn empty_path_convention() {
        for n in 2..=12u32 {
            for s in [n - 2, n - 1, n + 3] {
                let t = enumerate_t(n, s);
                assert_eq!(t.len(), 1);
                assert_eq!(t[0].word(), "eps");
                assert_eq!(t[0].area() as i64, binom2(n as i64 - 1));
                assert_eq!(t[0].ht(), n - 2);
            }
        }
        assert!(enumerate_t(1, 0).is_empty());
        assert!(enumerate_t(0, 0).is_empty());
        assert_eq!(clamp_start(5, 7), (3, true));
        assert_eq!(clamp_start(5, 3), (3, false));
    }

    #[test]
    fn grid_mismatch() {
        let a = LatticePath::parse(7, 2, "NEN").unwrap();
        let b = LatticePath::parse(5, 0, "NEN").unwrap();
        assert_eq!(a.same_path(&b), Err(Error::GridMismatch(7, 2, 5, 0)));
        assert_ne!(a, b);
        assert!(a.same_path(&a).unwrap());
        assert!(LatticePath::parse(5, 0, "NE").is_err());
        assert!(LatticePath::parse(5, 0, "NXN").is_err());
    }

    #[test]
    fn gf_examples() {
        assert_eq!(gf_t(4, 0).to_string(), "1 + q*z + q^2*z + q^3*z^2");
        for n in 2..=10u32 {
            assert_eq!(
                gf_t(n, n - 2),
                LaurentPoly::monomial(1, binom2(n as i64 - 1) as i32, 0, n as i32 - 2)
            );
        }
        let z = LaurentPoly::var(Var::Z);
        assert_eq!(gf_t(5, 0), q_pochhammer(&z, 3, PochhammerForm::Rising).unwrap());
    }

    #[test]
    fn gf_twist_example() {
        let twisted = gf_t(4, 0)
            .substitute(&[(Var::Z, LaurentPoly::monomial(1, 1, 0, 1))])
            .unwrap();
        // q^3 z^2 -> q^3 (qz)^2 = q^5 z^2
        assert_eq!(twisted.to_string(), "1 + q^2*z + q^3*z + q^5*z^2");
    }

    #[test]
    fn height_slices_are_gaussian() {
        for n in 2..=12u32 {
            let g = gf_t(n, 0);
            for j in 0..=n - 2 {
                let slice = g.coefficient_of(Var::Z, j as i32);
                let expect = &LaurentPoly::q_pow(binom2(j as i64 + 1)) * &gauss_binomial(n as i64 - 2, j as i64);
                assert_eq!(slice, expect);
            }
        }
    }

    #[test]
    fn shift_bijection_pathwise() {
        for n in 2..=12u32 {
            for s in 0..=n - 2 {
                let big = enumerate_t(n, s);
                let small = enumerate_t(n - s, 0);
                assert_eq!(big.len(), small.len());
                let shift = gf_t_shift_factor(n, s);
                for (a, b) in big.iter().zip(&small) {
                    assert_eq!(a.steps(), b.steps());
                    assert_eq!(a.ht(), b.ht() + s);
                    assert_eq!(a.area(), b.area() + shift.exponent(Var::Q) as u32);
                }
            }
        }
    }

    #[test]
    fn hat_gf_values() {
        assert_eq!(hat_gf(2, 0), LaurentPoly::one());
        assert!(hat_gf(5, 0).is_zero());
        for m in 3..=9 {
            assert!(hat_gf(m, 0).is_zero());
            for j in 0..=m - 2 {
                let h = hat_gf(m, j);
                for (mono, _) in h.terms() {
                    assert_eq!(mono.exponent(Var::Z), j as i32);
                }
            }
        }
    }

    #[test]
    fn filters() {
        let e = filter_paths(7, 0, &parse_filters("starts_with_east,height_eq=3").unwrap());
        assert!(words(&e).contains(&"ENNEN".to_string()));
        let j = filter_paths(7, 0, &parse_filters("starts_north_ends_exact_norths=1,height_eq=3").unwrap());
        assert!(words(&j).contains(&"NNEEN".to_string()));
        assert!(!words(&j).contains(&"NENNN".to_string()));
        for n in 2..=10u32 {
            for k in 0..=n - 2 {
                let c = filter_paths(n, 0, &[PathFilter::AtLeastKEasts(k)]).len() as u64;
                let expect: u64 = (k..=n - 2)
                    .map(|e| (0..e as u64).fold(1u64, |a, i| a * (n as u64 - 2 - i) / (i + 1)))
                    .sum();
                assert_eq!(c, expect);
            }
        }
        assert_eq!(
            "bogus=3".parse::<PathFilter>(),
            Err(Error::UnknownPredicate("bogus=3".into()))
        );
        assert!("height_eq".parse::<PathFilter>().is_err());
        let pre = filter_paths(6, 0, &parse_filters("prefix=NNE,suffix=E").unwrap());
        assert_eq!(words(&pre), ["NNEE"]);
    }

    #[test]
    fn east_and_north_classes_partition_each_height() {
        for n in 3..=10u32 {
            for h in 0..=n - 2 {
                let slice = filter_paths(n, 0, &[PathFilter::HeightEq(h)]);
                let east = filter_paths(n, 0, &[PathFilter::HeightEq(h), PathFilter::StartsWithEast]).len();
                let north: usize = (0..=n - 2)
                    .map(|j| {
                        filter_paths(n, 0, &[PathFilter::HeightEq(h), PathFilter::StartsNorthEndsExactNorths(j)])
                            .len()
                    })
                    .sum();
                assert_eq!(east + north, slice.len());
            }
        }
    }

    proptest! {
        #[test]
        fn path_json_round_trip(n in 2u32..16, s in 0u32..16, seed in any::<u64>()) {
            let t = enumerate_t(n, s);
            let g = t[(seed % t.len() as u64) as usize];
            let j = serde_json::to_string(&g).unwrap();
            prop_assert_eq!(serde_json::from_str::<LatticePath>(&j).unwrap(), g);
            prop_assert_eq!(LatticePath::parse(n, s, &g.word()).unwrap(), g);
        }

        #[test]
        fn staircase_containment(n in 2u32..16, s in 0u32..16, seed in any::<u64>()) {
            let t = enumerate_t(n, s);
            let g = t[(seed % t.len() as u64) as usize];
            let (mut x, mut y) = (0, g.s());
            for st in g.steps() {
                match st { Step::N => y += 1, Step::E => x += 1 }
                prop_assert!(x + y <= n - 2);
            }
            prop_assert_eq!(x + y, n - 2);
            prop_assert!(y >= g.s());
            prop_assert!(g.area() as i64 <= binom2(n as i64 - 1));
        }
    }
}
