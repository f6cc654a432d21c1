//! Partitions, weights and tableaux in their matrix form.
//!
//! A row-semistandard tableau of shape `mu` and weight `alpha` is stored as the
//! `n x n` matrix `A` whose entry `a_ij` counts the letters `j` in row `i`.
//! The same matrix names the divided-power monomial
//! `1^(a_i1) ... n^(a_in)` in tensor slot `i` of `D(mu)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad entry {x:?} in {s:?}: {e}")))
        })
        .collect()
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A partition in canonical form (no trailing zeros).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{} is not weakly decreasing", join(&parts))));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// `i`-th part (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.len())).map(|i| self.part(i)).collect()
    }

    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i) + other.part(i)).collect())
    }

    pub fn scale(&self, k: u32) -> Partition {
        if k == 0 {
            return Partition::default();
        }
        Partition(self.0.iter().map(|&x| x * k).collect())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&join(&self.0))
        }
    }
}

/// A composition of fixed length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<u32>);

impl Weight {
    pub fn new(entries: Vec<u32>) -> Self {
        Weight(entries)
    }

    /// Embeds a partition as a weight of length `n`.
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        if p.len() > n {
            return Err(Error::invalid(format!("partition {p} has more than {n} parts")));
        }
        Ok(Weight(p.padded(n)))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// `alpha(s, t)`: moves `t` from entry `s + 1` to entry `s` (1-based `s`).
    pub fn raised(&self, s: usize, t: u32) -> Option<Weight> {
        if s == 0 || s >= self.0.len() || t > self.0[s] {
            return None;
        }
        let mut v = self.0.clone();
        v[s - 1] += t;
        v[s] -= t;
        Some(Weight(v))
    }

    pub fn padded(&self, n: usize) -> Weight {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        Weight(v)
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Weight(parse_list(s)?))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

/// An `n x n` nonnegative integer matrix read as a row-semistandard tableau.
///
/// Ordering is row-major lexicographic on the entries, which fixes the
/// canonical basis order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    cells: Vec<u32>,
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.cells.cmp(&other.cells))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Tableau {
    pub fn zeros(n: usize) -> Self {
        Tableau { n, cells: vec![0; n * n] }
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        Tableau { n, cells }
    }

    /// Builds a tableau from matrix rows, padding with zeros to a square.
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let n = rows.len().max(cols).max(1);
        Self::from_rows_padded(rows, n)
    }

    /// Same as [`Tableau::from_rows`] but with ambient rank at least `n`.
    pub fn from_rows_padded(rows: &[Vec<u32>], n: usize) -> Self {
        let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let n = n.max(rows.len()).max(cols);
        let mut t = Tableau::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            t.cells[i * n..i * n + row.len()].copy_from_slice(row);
        }
        t
    }

    /// Diagonal matrix of `alpha`: the monomial `e^alpha`.
    pub fn diagonal(alpha: &[u32]) -> Self {
        let n = alpha.len();
        let mut t = Tableau::zeros(n);
        for (i, &a) in alpha.iter().enumerate() {
            t.cells[i * n + i] = a;
        }
        t
    }

    /// Ambient rank.
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: u32) {
        self.cells[i * self.n + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.cells[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Shape (row sums).
    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Weight (column sums).
    pub fn col_sums(&self) -> Vec<u32> {
        let mut c = vec![0; self.n];
        for i in 0..self.n {
            for (j, x) in self.row(i).iter().enumerate() {
                c[j] += x;
            }
        }
        c
    }

    /// Row `i` written out as a weakly increasing word of 0-based letters.
    pub fn row_word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        for (j, &a) in self.row(i).iter().enumerate() {
            w.extend(std::iter::repeat(j).take(a as usize));
        }
        w
    }

    /// Columns strictly increase downwards (and rows have partition lengths).
    pub fn is_semistandard(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.pair_is_semistandard(i))
    }

    /// Column strictness between rows `i` and `i + 1` only.
    pub fn pair_is_semistandard(&self, i: usize) -> bool {
        // the k-th letter below exceeds the k-th letter above iff, for every
        // v, there are at least as many letters < v above as letters <= v below
        let (upper, lower) = (self.row(i), self.row(i + 1));
        let (mut above, mut below) = (0u64, 0u64);
        for j in 0..self.n {
            below += lower[j] as u64;
            if below > above {
                return false;
            }
            above += upper[j] as u64;
        }
        true
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    /// Number of nonzero rows, at least one.
    fn printed_rows(&self) -> usize {
        (0..self.n).rev().find(|&i| self.row(i).iter().any(|&x| x > 0)).map_or(1, |i| i + 1)
    }

    /// Exponential notation, e.g. `1^(2)2 / 2^(2)3`, for diagnostics.
    pub fn to_exponential(&self) -> String {
        (0..self.printed_rows())
            .map(|i| {
                let mut s = String::new();
                for (j, &a) in self.row(i).iter().enumerate() {
                    match a {
                        0 => {}
                        1 => s.push_str(&format!("{}", j + 1)),
                        _ => s.push_str(&format!("{}^({})", j + 1, a)),
                    }
                }
                if s.is_empty() {
                    s.push('-');
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.printed_rows()).map(|i| join(self.row(i))).collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s.split(';').map(parse_list).collect::<Result<Vec<_>>>()?;
        if rows.is_empty() || rows.iter().all(Vec::is_empty) {
            return Err(Error::Parse(format!("empty tableau {s:?}")));
        }
        Ok(Tableau::from_rows(&rows))
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn conjugate(mu: &Partition) -> Partition {
    let cols = mu.part(0) as usize;
    Partition((0..cols).map(|j| mu.parts().iter().filter(|&&x| x as usize > j).count() as u32).collect())
}

fn check_size(a: u64, b: u64) -> Result<()> {
    if a != b {
        return Err(Error::SizeMismatch { left: a, right: b });
    }
    Ok(())
}

/// Dominance on sequences of equal size: every partial sum of `a` is at most that of `b`.
pub(crate) fn dominated_by(a: &[u32], b: &[u32]) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 0..n {
        sa += a.get(i).copied().unwrap_or(0) as u64;
        sb += b.get(i).copied().unwrap_or(0) as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

/// `lambda ⊴ mu` in the dominance order.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    check_size(lambda.size(), mu.size())?;
    Ok(dominated_by(lambda.parts(), mu.parts()))
}

/// Which matrices the enumerator should visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Filling {
    All,
    UpperTriangular,
    Semistandard,
}

/// Visits every `n x n` matrix with the given row and column sums in
/// row-major lexicographic order. `rows` and `cols` must have length `n`.
pub(crate) fn for_each_table<F>(rows: &[u32], cols: &[u32], filling: Filling, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let n = rows.len();
    assert_eq!(cols.len(), n);
    if rows.iter().map(|&x| x as u64).sum::<u64>() != cols.iter().map(|&x| x as u64).sum::<u64>() {
        return ControlFlow::Continue(());
    }
    let mut cells = vec![0u32; n * n];
    let mut cap = cols.to_vec();
    let mut walker = Walker { n, rows, filling, cells: &mut cells, cap: &mut cap };
    walker.cell(0, 0, rows.first().copied().unwrap_or(0), &mut visit)
}

struct Walker<'a> {
    n: usize,
    rows: &'a [u32],
    filling: Filling,
    cells: &'a mut [u32],
    cap: &'a mut [u32],
}

impl Walker<'_> {
    fn cell<F>(&mut self, i: usize, j: usize, rem: u32, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let n = self.n;
        if j == n {
            debug_assert_eq!(rem, 0);
            if self.filling != Filling::All && self.cap[i] != 0 {
                // column i can no longer be completed by rows below
                return ControlFlow::Continue(());
            }
            if i + 1 == n {
                return visit(self.cells);
            }
            return self.cell(i + 1, 0, self.rows[i + 1], visit);
        }
        let triangular = self.filling != Filling::All;
        if triangular && j < i {
            self.cells[i * n + j] = 0;
            return self.cell(i, j + 1, rem, visit);
        }
        let later: u64 = self.cap[j + 1..].iter().map(|&x| x as u64).sum();
        let lo = (rem as u64).saturating_sub(later) as u32;
        let mut hi = rem.min(self.cap[j]);
        if self.filling == Filling::Semistandard && i > 0 {
            // prefix condition: sum_{c<=j} a_{i,c} <= sum_{c<j} a_{i-1,c}
            let above: u32 = self.cells[(i - 1) * n..(i - 1) * n + j].iter().sum();
            let here: u32 = self.cells[i * n..i * n + j].iter().sum();
            if here > above {
                return ControlFlow::Continue(());
            }
            hi = hi.min(above - here);
        }
        if lo > hi {
            return ControlFlow::Continue(());
        }
        for x in lo..=hi {
            self.cells[i * n + j] = x;
            self.cap[j] -= x;
            let flow = self.cell(i, j + 1, rem - x, visit);
            self.cap[j] += x;
            flow?;
        }
        self.cells[i * n + j] = 0;
        ControlFlow::Continue(())
    }
}

/// Collects tables, giving up once more than `cap` have been seen.
pub(crate) fn collect_tables(rows: &[u32], cols: &[u32], filling: Filling, cap: usize) -> Option<Vec<Tableau>> {
    let n = rows.len();
    let mut out = Vec::new();
    let flow = for_each_table(rows, cols, filling, |cells| {
        if out.len() >= cap {
            return ControlFlow::Break(());
        }
        out.push(Tableau::from_cells(n, cells.to_vec()));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        None
    } else {
        if filling == Filling::Semistandard {
            debug_assert!(out.iter().all(Tableau::is_semistandard));
        }
        Some(out)
    }
}

/// Visits every vector `z` with `z[i] <= bounds[i]` and `sum(z) == total`,
/// in lexicographic order.
pub(crate) fn for_each_bounded_composition<F: FnMut(&[u32])>(bounds: &[u32], total: u32, mut visit: F) {
    let mut suffix = vec![0u64; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix[i] = suffix[i + 1] + bounds[i] as u64;
    }
    if suffix[0] < total as u64 {
        return;
    }
    let mut z = vec![0u32; bounds.len()];
    compose(bounds, &suffix, 0, total, &mut z, &mut visit);
}

fn compose<F: FnMut(&[u32])>(bounds: &[u32], suffix: &[u64], i: usize, rem: u32, z: &mut [u32], visit: &mut F) {
    if i == bounds.len() {
        if rem == 0 {
            visit(z);
        }
        return;
    }
    let lo = (rem as u64).saturating_sub(suffix[i + 1]) as u32;
    let hi = rem.min(bounds[i]);
    for x in lo..=hi {
        z[i] = x;
        compose(bounds, suffix, i + 1, rem - x, z, visit);
    }
    z[i] = 0;
}

fn shape_and_weight(mu: &Partition, alpha: &Weight) -> Result<(Vec<u32>, Vec<u32>)> {
    check_size(mu.size(), alpha.size())?;
    let n = alpha.len().max(mu.len()).max(1);
    Ok((mu.padded(n), alpha.padded(n).0))
}

/// All row-semistandard tableaux of shape `mu` and weight `alpha`, as
/// matrices in canonical order. The ambient rank is `alpha.len()`.
pub fn enumerate_rsst(mu: &Partition, alpha: &Weight, upper_triangular_only: bool) -> Result<Vec<Tableau>> {
    let (rows, cols) = shape_and_weight(mu, alpha)?;
    let filling = if upper_triangular_only { Filling::UpperTriangular } else { Filling::All };
    Ok(collect_tables(&rows, &cols, filling, usize::MAX).unwrap_or_default())
}

/// Semistandard tableaux of shape `mu` and weight `alpha`, canonical order.
pub fn enumerate_sst(mu: &Partition, alpha: &Weight) -> Result<Vec<Tableau>> {
    let (rows, cols) = shape_and_weight(mu, alpha)?;
    let all = collect_tables(&rows, &cols, Filling::Semistandard, usize::MAX).unwrap_or_default();
    Ok(all.into_iter().filter(Tableau::is_semistandard).collect())
}

pub(crate) fn count_tables(rows: &[u32], cols: &[u32], filling: Filling) -> u64 {
    let mut count = 0u64;
    let _ = for_each_table(rows, cols, filling, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Kostka number `|SST_alpha(mu)|`.
pub fn kostka(mu: &Partition, alpha: &Weight) -> Result<u64> {
    let (rows, cols) = shape_and_weight(mu, alpha)?;
    Ok(count_tables(&rows, &cols, Filling::Semistandard))
}

/// Partitions of `r` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn partitions(r: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (1..=rem.min(cap)).rev() {
            cur.push(x);
            rec(rem - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Membership of `alpha` in `P(mu)`: for `i = 2..=m`,
/// `mu_1 + ... + mu_i - mu_{i-1} <= alpha_1 + ... + alpha_{i-1}`.
pub fn in_p(alpha: &Weight, mu: &Partition) -> Result<bool> {
    check_size(alpha.size(), mu.size())?;
    Ok(p_violation(alpha.entries(), mu).is_none())
}

/// First index `i` (1-based) where the `P(mu)` inequality fails.
pub(crate) fn p_violation(alpha: &[u32], mu: &Partition) -> Option<usize> {
    let m = mu.len();
    if m <= 1 {
        return None;
    }
    let mut mu_sum = mu.part(0) as u64;
    let mut alpha_sum = 0u64;
    for i in 2..=m {
        mu_sum += mu.part(i - 1) as u64;
        alpha_sum += alpha.get(i - 2).copied().unwrap_or(0) as u64;
        if mu_sum - mu.part(i - 2) as u64 > alpha_sum {
            return Some(i);
        }
    }
    None
}

/// Membership in `Λ⁺(n)_g`: `mu_{j-1} <= mu_j + mu_{j+1}` for `j = 2..=g`.
pub fn in_lambda_g(mu: &Partition, g: usize) -> Result<bool> {
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    Ok(lambda_g_violation(mu, g).is_none())
}

pub(crate) fn lambda_g_violation(mu: &Partition, g: usize) -> Option<usize> {
    (2..=g).find(|&j| mu.part(j - 2) > mu.part(j - 1) + mu.part(j))
}

/// Inserts `gamma_i` copies of `i` at the start of row `i`.
pub fn shift_tableau(t: &Tableau, gamma: &Partition) -> Result<Tableau> {
    let shape = Partition::new(t.row_sums())
        .map_err(|_| Error::invalid(format!("tableau {t} does not have partition shape")))?;
    if !t.is_semistandard() {
        return Err(Error::invalid(format!("tableau {t} is not semistandard")));
    }
    if !gamma.is_empty() && gamma.len() >= shape.len() {
        return Err(Error::invalid(format!(
            "gamma {gamma} must have fewer parts than the shape {shape}"
        )));
    }
    if p_violation(&t.col_sums(), &shape).is_some() {
        return Err(Error::invalid(format!("weight of {t} is not in P({shape})")));
    }
    let mut out = t.clone();
    for (i, &g) in gamma.parts().iter().enumerate() {
        out.set(i, i, out.get(i, i) + g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn partition_lists() {
        let all: Vec<String> = partitions(4, 4).iter().map(|p| p.to_string()).collect();
        assert_eq!(all, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(partitions(6, 3).len(), 7);
        assert_eq!(partitions(0, 2), vec![Partition::default()]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&p("4,2,1")), p("3,2,1,1"));
        assert_eq!(conjugate(&p("2")), p("1,1"));
        assert_eq!(conjugate(&p("14,10,7,3")), p("4,4,4,3,3,3,3,2,2,2,1,1,1,1"));
        assert_eq!(conjugate(&p("")), p(""));
    }

    #[test]
    fn partitions_parse_and_strip() {
        assert_eq!(p("3,1,0,0").parts(), &[3, 1]);
        assert_eq!(p("3,1,0"), p("3,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(p("11,10,7,3,3").to_string(), "11,10,7,3,3");
    }

    #[test]
    fn dominance() {
        assert!(dominates(&p("1,1"), &p("2")).unwrap());
        assert!(!dominates(&p("2"), &p("1,1")).unwrap());
        assert!(dominates(&p("11,10,7,3,3"), &p("14,10,7,3")).unwrap());
        assert!(dominates(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn rsst_examples() {
        assert_eq!(enumerate_rsst(&p("2"), &w("1,1"), false).unwrap(), vec![t("1,1")]);
        assert_eq!(enumerate_rsst(&p("1,1"), &w("1,1"), false).unwrap(), vec![t("0,1;1,0"), t("1,0;0,1")]);
        assert_eq!(enumerate_rsst(&p("1,1"), &w("1,1"), true).unwrap(), vec![t("1,0;0,1")]);
        assert!(enumerate_rsst(&p("2"), &w("1,2"), false).is_err());
    }

    #[test]
    fn sst_examples() {
        let sst = enumerate_sst(&p("6,4"), &w("4,3,0,3")).unwrap();
        assert!(sst.contains(&"4,1,0,1;0,2,0,2".parse().unwrap()));
        assert_eq!(enumerate_sst(&p("2,1"), &w("2,1")).unwrap(), vec![t("2,0;0,1")]);
        assert_eq!(enumerate_sst(&p("2,1"), &w("1,1,1")).unwrap().len(), 2);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("3,1"), &w("3,1")).unwrap(), 1);
        assert_eq!(kostka(&p("2"), &w("1,1")).unwrap(), 1);
        assert_eq!(kostka(&p("2,1"), &w("1,1,1")).unwrap(), 2);
        assert_eq!(kostka(&p("2,2"), &w("1,1,1,1")).unwrap(), 2);
    }

    #[test]
    fn p_membership() {
        assert!(in_p(&w("20,14,4,4,4,4"), &p("24,16,10")).unwrap());
        assert!(!in_p(&w("4,3,2,2"), &p("5,5,1")).unwrap());
        assert!(in_p(&w("0,5"), &p("5")).unwrap());
        assert!(in_p(&w("11,10,7,3,3"), &p("14,10,7,3")).unwrap());
        assert!(in_p(&w("1"), &p("2")).is_err());
    }

    #[test]
    fn lambda_g_membership() {
        assert!(in_lambda_g(&p("7,6,3,2"), 2).unwrap());
        assert!(!in_lambda_g(&p("7,6,3,2"), 3).unwrap());
        assert!(in_lambda_g(&p("9,1"), 1).unwrap());
        assert!(in_lambda_g(&p("9,1"), 0).is_err());
    }

    #[test]
    fn shifts() {
        assert_eq!(shift_tableau(&t("1,0;0,1"), &p("2")).unwrap(), t("3,0;0,1"));
        assert_eq!(shift_tableau(&t("1,0;0,1"), &p("")).unwrap(), t("1,0;0,1"));
        let before = enumerate_sst(&p("2,1"), &w("2,1")).unwrap();
        let after = enumerate_sst(&p("5,1"), &w("5,1")).unwrap();
        assert_eq!(before.len(), 1);
        assert_eq!(after.len(), 1);
        assert_eq!(shift_tableau(&before[0], &p("3")).unwrap(), after[0]);
        // gamma as long as the shape
        assert!(shift_tableau(&t("1,0;0,1"), &p("1,1")).is_err());
        // not semistandard
        assert!(shift_tableau(&t("0,1;1,0"), &p("1")).is_err());
    }

    #[test]
    fn bounded_compositions() {
        let mut seen = Vec::new();
        for_each_bounded_composition(&[1, 2, 0], 2, |z| seen.push(z.to_vec()));
        assert_eq!(seen, vec![vec![0, 2, 0], vec![1, 1, 0]]);
        let mut count = 0;
        for_each_bounded_composition(&[1, 1], 3, |_| count += 1);
        assert_eq!(count, 0);
        for_each_bounded_composition(&[], 0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn tableau_text_round_trip() {
        let x = t("4,1,0,1;0,2,0,2");
        assert_eq!(x.n(), 4);
        assert_eq!(x.to_string(), "4,1,0,1;0,2,0,2");
        assert_eq!(x.row_sums(), vec![6, 4, 0, 0]);
        assert_eq!(x.col_sums(), vec![4, 3, 0, 3]);
        assert!(x.is_semistandard());
        assert_eq!(x.to_exponential(), "1^(4)24 / 2^(2)4^(2)");
        assert!(!t("0,1;1,0").is_semistandard());
    }
}
