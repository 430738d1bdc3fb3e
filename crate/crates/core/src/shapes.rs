//! Partitions and standard Young tableaux (French convention: row 0 is the
//! bottom row), with descent statistics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `|λ|` for tableau enumeration.
pub const DEFAULT_SYT_BOUND: u32 = 12;

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed; it indexes the unit `s_∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from signed parts, dropping trailing zeros.
    /// Returns `None` for anything that is not a partition; formulas treat
    /// such indices as `s_μ = 0`.
    pub fn from_signed(parts: &[i64]) -> Option<Self> {
        let mut v: Vec<i64> = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        if v.iter().any(|&p| p <= 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition(v.into_iter().map(|p| p as u32).collect()))
    }

    /// `(arm, 1^legs)`, with `(0, 1^0) = ∅`. `None` when `arm < 0`,
    /// `legs < 0`, or `arm == 0` with legs.
    pub fn from_arm_legs(arm: i64, legs: i64) -> Option<Self> {
        if arm < 0 || legs < 0 || (arm == 0 && legs > 0) {
            return None;
        }
        if arm == 0 {
            return Some(Partition::empty());
        }
        let mut v = vec![arm as u32];
        v.extend(std::iter::repeat(1).take(legs as usize));
        Some(Partition(v))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&p| p > c).count() as u32)
                .collect(),
        )
    }

    pub fn is_hook(&self) -> bool {
        self.part(2) <= 1
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut denom: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.0[c as usize] - r as u32 - 1;
                denom *= (arm + leg + 1) as u128;
            }
        }
        let fact: u128 = (1..=self.size() as u128).product();
        fact / denom
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Hooks `(a, 1^{n-a})` of `n`, from `(n)` down to `(1^n)`.
    pub fn hooks_of(n: u32) -> Vec<Partition> {
        (1..=n)
            .rev()
            .map(|a| make_hook(a as i64, (n - a) as i64).expect("arm >= 1"))
            .collect()
    }
}

/// `(a, 1^k)` for `a >= 1`, `k >= 0`.
pub fn make_hook(a: i64, k: i64) -> Result<Partition> {
    if a < 1 {
        return Err(Error::HookArm(a));
    }
    if k < 0 {
        return Err(Error::InvalidPartition(format!("({a},1^{k})")));
    }
    Ok(Partition::from_arm_legs(a, k).expect("checked above"))
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Standard Young tableau stored as the cell of each entry:
/// `cells[i]` is the `(row, col)` of entry `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdTableau {
    shape: Partition,
    cells: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStats {
    pub set: BTreeSet<u32>,
    pub des: u32,
    pub maj: u32,
}

impl StdTableau {
    /// Builds a tableau from its rows, bottom row first.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::InvalidTableau(format!("row lengths of {rows:?}")))?;
        let n = shape.size() as usize;
        let mut cells = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e as usize > n || cells[e as usize - 1].is_some() {
                    return Err(Error::InvalidTableau(format!("entry {e} in {rows:?}")));
                }
                cells[e as usize - 1] = Some((r as u32, c as u32));
            }
        }
        let cells: Vec<(u32, u32)> = cells.into_iter().map(|c| c.expect("all entries placed")).collect();
        let t = StdTableau { shape, cells };
        let grid = t.rows();
        for (r, row) in grid.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                let left_ok = c == 0 || row[c - 1] < e;
                let below_ok = r == 0 || grid[r - 1][c] < e;
                if !left_ok || !below_ok {
                    return Err(Error::InvalidTableau(format!("not standard: {rows:?}")));
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> u32 {
        self.cells.len() as u32
    }

    /// `(row, col)` of entry `e` (1-based).
    pub fn cell(&self, e: u32) -> (u32, u32) {
        self.cells[e as usize - 1]
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self.shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
        for (i, &(r, c)) in self.cells.iter().enumerate() {
            rows[r as usize][c as usize] = i as u32 + 1;
        }
        rows
    }

    pub fn descent_set(&self) -> BTreeSet<u32> {
        (1..self.size())
            .filter(|&i| self.cell(i + 1).0 > self.cell(i).0)
            .collect()
    }

    pub fn des(&self) -> u32 {
        self.descent_set().len() as u32
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().iter().sum()
    }

    pub fn descent_stats(&self) -> DescentStats {
        let set = self.descent_set();
        DescentStats {
            des: set.len() as u32,
            maj: set.iter().sum(),
            set,
        }
    }

    pub fn conjugate(&self) -> StdTableau {
        StdTableau {
            shape: self.shape.conjugate(),
            cells: self.cells.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    pub fn is_hook(&self) -> bool {
        self.shape.is_hook()
    }

    /// Parses the `"1,2,4,8/3,7/5,10/6/9"` form (rows bottom to top).
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|e| e.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidTableau(s.to_string()))?;
        StdTableau::from_rows(&rows)
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join("/"))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Serialize for StdTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            shape: self.shape.clone(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StdTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let t = StdTableau::from_rows(&j.rows).map_err(serde::de::Error::custom)?;
        if t.shape != j.shape {
            return Err(serde::de::Error::custom("shape does not match rows"));
        }
        Ok(t)
    }
}

pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StdTableau>> {
    enumerate_syt_bounded(shape, DEFAULT_SYT_BOUND)
}

/// All standard tableaux of `shape`, in lexicographic order of the row
/// sequence `row(1), row(2), ...`.
pub fn enumerate_syt_bounded(shape: &Partition, bound: u32) -> Result<Vec<StdTableau>> {
    let n = shape.size();
    if n > bound {
        return Err(Error::TableauTooLarge { size: n, bound });
    }
    let lens = shape.parts();
    let mut filled = vec![0u32; lens.len()];
    let mut cells = Vec::with_capacity(n as usize);
    let mut out = Vec::new();

    fn rec(
        lens: &[u32],
        filled: &mut [u32],
        cells: &mut Vec<(u32, u32)>,
        shape: &Partition,
        out: &mut Vec<StdTableau>,
    ) {
        if cells.len() == shape.size() as usize {
            out.push(StdTableau {
                shape: shape.clone(),
                cells: cells.clone(),
            });
            return;
        }
        for r in 0..lens.len() {
            let addable = filled[r] < lens[r] && (r == 0 || filled[r - 1] > filled[r]);
            if addable {
                cells.push((r as u32, filled[r]));
                filled[r] += 1;
                rec(lens, filled, cells, shape, out);
                filled[r] -= 1;
                cells.pop();
            }
        }
    }

    rec(lens, &mut filled, &mut cells, shape, &mut out);
    Ok(out)
}

/// The unique hook-shaped tableau of size `n` whose descent set is `set`.
pub fn hook_tableau_from_descents(set: &BTreeSet<u32>, n: u32) -> Result<StdTableau> {
    if n == 0 || set.iter().any(|&d| d == 0 || d >= n) {
        return Err(Error::DescentOutOfRange {
            set: set.iter().copied().collect(),
            n,
        });
    }
    // entry i+1 sits in the first column iff i is a descent
    let mut cells = Vec::with_capacity(n as usize);
    cells.push((0, 0));
    let (mut up, mut right) = (0, 0);
    for e in 2..=n {
        if set.contains(&(e - 1)) {
            up += 1;
            cells.push((up, 0));
        } else {
            right += 1;
            cells.push((0, right));
        }
    }
    let shape = Partition::from_arm_legs((n - set.len() as u32) as i64, set.len() as i64).expect("arm >= 1");
    Ok(StdTableau { shape, cells })
}

/// Every standard tableau of the hook `(k+1, 1^{n-k-1})`, built from descent
/// sets rather than by backtracking, so no size bound applies.
pub fn hook_tableaux(n: u32, k: u32) -> Vec<StdTableau> {
    if n == 0 || k >= n {
        return Vec::new();
    }
    let legs = n - k - 1;
    let mut out: Vec<StdTableau> = (0u64..1 << (n - 1))
        .filter(|m| m.count_ones() == legs)
        .map(|m| {
            let set: BTreeSet<u32> = (1..n).filter(|i| m >> (i - 1) & 1 == 1).collect();
            hook_tableau_from_descents(&set, n).expect("subset of 1..n-1")
        })
        .collect();
    out.sort();
    out
}
