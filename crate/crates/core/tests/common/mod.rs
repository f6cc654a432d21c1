#![allow(dead_code)]

use weylhom::{Partition, Tableau};

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

pub fn exact_binom(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
}

/// All compositions of `r` into exactly `n` parts, lexicographic.
pub fn compositions(r: u32, n: usize) -> Vec<Vec<u32>> {
    fn rec(rem: u32, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rem {
            cur.push(x);
            rec(rem - x, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(r, n, &mut Vec::new(), &mut out);
    out
}

/// Semistandard tableaux of shape `mu` and content `alpha`, found by filling
/// the diagram box by box; returned as letter-count matrices, sorted.
pub fn brute_sst(mu: &[u32], alpha: &[u32]) -> Vec<Tableau> {
    let n = alpha.len().max(mu.len());
    let cells: Vec<(usize, usize)> =
        mu.iter().enumerate().flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = mu.iter().map(|&len| vec![0; len as usize]).collect();
    let mut left = alpha.to_vec();
    left.resize(n, 0);
    let mut out = Vec::new();
    fill(&cells, 0, &mut grid, &mut left, n, &mut out);
    out.sort();
    out
}

fn fill(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<u32>, n: usize, out: &mut Vec<Tableau>) {
    if k == cells.len() {
        let rows: Vec<Vec<u32>> = grid
            .iter()
            .map(|row| {
                let mut counts = vec![0u32; n];
                for &x in row {
                    counts[x] += 1;
                }
                counts
            })
            .collect();
        out.push(Tableau::from_rows_padded(&rows, n));
        return;
    }
    let (i, j) = cells[k];
    for x in 0..n {
        if left[x] == 0 || (j > 0 && grid[i][j - 1] > x) || (i > 0 && grid[i - 1][j] >= x) {
            continue;
        }
        left[x] -= 1;
        grid[i][j] = x;
        fill(cells, k + 1, grid, left, n, out);
        left[x] += 1;
    }
}

/// Partial-sum dominance `a ⊴ b` for sequences of equal total.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    let n = a.len().max(b.len());
    let (mut x, mut y) = (0u64, 0u64);
    (0..n).all(|i| {
        x += a.get(i).copied().unwrap_or(0) as u64;
        y += b.get(i).copied().unwrap_or(0) as u64;
        x <= y
    })
}
