//! Hypothesis checkers for the stability, nonvanishing and Carter–Payne
//! criteria, and the sweep `d_k = dim Hom(Δ(lambda + k nu), Δ(mu + k nu))`.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{dominated_by, lambda_g_violation, p_violation, Partition};
use crate::error::{Error, Result};
use crate::homspace::{hom_space_with, Limits};
use crate::modp::{hom_stats, lp_prime, power_divides, Prime};

/// Outcome of a hypothesis check. `failed_conditions` names every failed
/// hypothesis with the offending index or value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub applicable: bool,
    pub failed_conditions: Vec<String>,
    /// The conclusion that holds when the check is applicable.
    pub prediction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn new(failed: Vec<String>, prediction: String, note: Option<String>) -> Self {
        Verdict { applicable: failed.is_empty(), failed_conditions: failed, prediction, note }
    }
}

fn same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

/// Whether `dim Hom(Δ(lambda), Δ(mu)) = dim Hom(Δ(lambda + gamma), Δ(mu + gamma))`
/// is guaranteed: `lambda ∈ P(mu)`, `mu ∈ Λ⁺_g`, `g < m` and
/// `p^{l_p(e_s)} | gamma_s`, where `g = len(gamma)` and `m = len(mu)`.
///
/// For `g >= 2` the last part must also be divisible by
/// `p^{l_p(max(c_{g-1}, e_g))}`. Without it the equality fails, e.g. for
/// `(3,3,2), (4,2,2), gamma = (2,1)` at `p = 2` (dims 1 and 0), where
/// `e_2 = 0` puts no constraint on `gamma_2`.
pub fn check_stability(lambda: &Partition, mu: &Partition, gamma: &Partition, p: u64) -> Result<Verdict> {
    same_size(lambda, mu)?;
    let p = Prime::new(p)?;
    let g = gamma.len();
    let m = mu.len();
    let prediction = format!(
        "dim Hom(Δ({lambda}), Δ({mu})) = dim Hom(Δ({}), Δ({}))",
        lambda.add(gamma),
        mu.add(gamma)
    );
    if g == 0 {
        return Ok(Verdict::new(Vec::new(), prediction, Some("gamma = 0: nothing is shifted".into())));
    }
    let mut failed = Vec::new();
    if let Some(i) = p_violation(lambda.parts(), mu) {
        failed.push(format!("lambda in P(mu) fails at i={i}"));
    }
    if let Some(j) = lambda_g_violation(mu, g) {
        failed.push(format!("mu in Lambda+_g fails at j={j}: mu_{} > mu_{j} + mu_{}", j - 1, j + 1));
    }
    if g >= m {
        failed.push(format!("g < m fails: g={g}, m={m}"));
    }
    let stats = hom_stats(lambda, mu, g)?;
    for (s, (&e, &gs)) in stats.e.iter().zip(gamma.parts()).enumerate() {
        let s = s + 1;
        if e < 0 {
            failed.push(format!("e_{s} = {e} is negative"));
            continue;
        }
        let l = lp_prime(e as u64, p);
        if !power_divides(p, l, gs as i64) {
            failed.push(format!("gamma_{s} = {gs} not divisible by p^{l} (e_{s} = {e})"));
        }
    }
    if g >= 2 {
        let (e, c) = (stats.e[g - 1], stats.c[g - 2]);
        let gs = gamma.part(g - 1);
        if e >= 0 && c > e {
            let l = lp_prime(c as u64, p);
            if !power_divides(p, l, gs as i64) {
                failed.push(format!("gamma_{g} = {gs} not divisible by p^{l} (c_{} = {c} exceeds e_{g} = {e})", g - 1));
            }
        }
    }
    Ok(Verdict::new(failed, prediction, None))
}

/// Whether the sum of all semistandard `phi_T` is a nonzero homomorphism.
///
/// With `m = len(mu)` and `n = len(lambda)`: `lambda ⊴ mu`, `lambda ∈ P(mu)`,
/// `p^{l_p(c_s)} | lambda_s - mu_{s+1} + 1` for `s = 1..m-2`,
/// `p^{l_p(c')} | lambda_{m-1} - mu_m + 1` with `c' = min(c_{m-1}, lambda_m)`,
/// and `p^{l_p(lambda_{s+1})} | lambda_s + 1` for `s = m..n-1`. For `m = 1`
/// only the last family remains.
pub fn check_nonvanishing(lambda: &Partition, mu: &Partition, p: u64) -> Result<Verdict> {
    same_size(lambda, mu)?;
    let p = Prime::new(p)?;
    let (m, n) = (mu.len(), lambda.len());
    let lam = |i: usize| lambda.part(i - 1) as i64;
    let mu_ = |i: usize| mu.part(i - 1) as i64;
    let mut failed = Vec::new();
    if !dominated_by(lambda.parts(), mu.parts()) {
        failed.push("lambda dominated by mu fails".to_string());
    }
    if let Some(i) = p_violation(lambda.parts(), mu) {
        failed.push(format!("lambda in P(mu) fails at i={i}"));
    }
    let stats = hom_stats(lambda, mu, 1)?;
    let c = |s: usize| stats.c[s - 1];
    for s in 1..m.saturating_sub(1) {
        let value = lam(s) - mu_(s + 1) + 1;
        let l = lp_prime(c(s).max(0) as u64, p);
        if c(s) < 0 || !power_divides(p, l, value) {
            failed.push(format!("condition (1) fails at s={s}: p^{l} does not divide {value} (c_{s} = {})", c(s)));
        }
    }
    if let Some(cp) = stats.c_prime {
        let value = lam(m - 1) - mu_(m) + 1;
        let l = lp_prime(cp.max(0) as u64, p);
        if cp < 0 || !power_divides(p, l, value) {
            failed.push(format!("condition (1) fails for c' = {cp}: p^{l} does not divide {value}"));
        }
    }
    for s in m.max(1)..n {
        let value = lam(s) + 1;
        let l = lp_prime(lam(s + 1) as u64, p);
        if !power_divides(p, l, value) {
            failed.push(format!("condition (2) fails at s={s}: p^{l} does not divide {value}"));
        }
    }
    let note = (m == 1).then(|| "len(mu) = 1: the c' clause and condition (1) are vacuous".to_string());
    let prediction = format!("psi is a nonzero homomorphism Δ({lambda}) -> Δ({mu}), so the hom space is nonzero");
    Ok(Verdict::new(failed, prediction, note))
}

/// All `(i, j, q)` (1-based, `i < j`) with `mu = lambda + q e_i - q e_j` and
/// `p^{l_p(q)} | lambda_i - lambda_j + j - i + q`.
pub fn carter_payne_witnesses(lambda: &Partition, mu: &Partition, p: u64) -> Result<Vec<(usize, usize, u32)>> {
    same_size(lambda, mu)?;
    let p = Prime::new(p)?;
    let n = lambda.len().max(mu.len());
    let diff: Vec<usize> = (0..n).filter(|&i| lambda.part(i) != mu.part(i)).collect();
    let [i, j] = diff[..] else {
        return Ok(Vec::new());
    };
    if mu.part(i) < lambda.part(i) {
        return Ok(Vec::new());
    }
    let q = mu.part(i) - lambda.part(i);
    let value = lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64 + q as i64;
    if power_divides(p, lp_prime(q as u64, p), value) {
        Ok(vec![(i + 1, j + 1, q)])
    } else {
        Ok(Vec::new())
    }
}

/// `d_0, ..., d_kmax`, stopping at the first point that fails.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub values: Vec<usize>,
    pub failure: Option<(usize, Error)>,
}

pub fn sweep_dk(lambda: &Partition, mu: &Partition, nu: &Partition, p: u64, kmax: usize) -> Result<Sweep> {
    sweep_dk_with(lambda, mu, nu, p, kmax, Limits::default())
}

pub fn sweep_dk_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    p: u64,
    kmax: usize,
    limits: Limits,
) -> Result<Sweep> {
    same_size(lambda, mu)?;
    Prime::new(p)?;
    let points: Vec<Result<usize>> = (0..=kmax)
        .into_par_iter()
        .map(|k| {
            let shift = nu.scale(k as u32);
            hom_space_with(&lambda.add(&shift), &mu.add(&shift), p, limits).map(|r| r.dim)
        })
        .collect();
    let mut values = Vec::new();
    for (k, point) in points.into_iter().enumerate() {
        match point {
            Ok(d) => values.push(d),
            Err(e) => return Ok(Sweep { values, failure: Some((k, e)) }),
        }
    }
    Ok(Sweep { values, failure: None })
}
