//! `Hom_G(Δ(lambda), Δ(mu))` over F_p.
//!
//! Every homomorphism `D(lambda) -> Δ(mu)` is a combination of the maps
//! `phi_T`, `T` semistandard of shape `mu` and weight `lambda`. It factors
//! through `Δ(lambda)` exactly when it kills the image of every box map, and
//! the image of `phi_T` under each box map has a closed form, so the hom space
//! is the kernel of a matrix whose columns are indexed by those tableaux.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::combinatorics::{dominates, enumerate_sst, for_each_bounded_composition, Partition, Tableau, Weight};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::modp::{Field, Prime};
use crate::weyl::{weight_space, FormalSum, PairStraightener, StraightenContext, DEFAULT_MONOMIAL_CAP};

/// `sum_T c_T phi_T`, with `T` running over `SST_lambda(mu)` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomVector {
    pub lambda: Partition,
    pub mu: Partition,
    pub p: Prime,
    pub basis: Arc<[Tableau]>,
    pub coeffs: Vec<u32>,
}

impl HomVector {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero `(T, c_T)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, u32)> {
        self.basis.iter().zip(&self.coeffs).filter(|(_, &c)| c != 0).map(|(t, &c)| (t, c))
    }
}

/// Condition rows contributed by one box map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStats {
    pub s: usize,
    pub t: u32,
    /// Semistandard tableaux of weight `lambda(s,t)` that were reached.
    pub rows: usize,
    /// Rank of all conditions up to and including this block.
    pub rank: usize,
}

#[derive(Clone, Debug)]
pub struct HomSpaceResult {
    pub dim: usize,
    /// Reduced row echelon basis of the kernel.
    pub basis: Vec<HomVector>,
    pub blocks: Vec<BlockStats>,
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Bound on any weight space built and on pending straightening terms.
    pub monomial_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { monomial_cap: DEFAULT_MONOMIAL_CAP }
    }
}

fn check_box(t: &Tableau, s: usize, tt: u32) -> Result<Vec<u32>> {
    let n = t.n();
    let lambda = t.col_sums();
    if s == 0 || s >= n {
        return Err(Error::invalid(format!("box index s={s} outside 1..{}", n.saturating_sub(1))));
    }
    if tt == 0 || tt > lambda[s] {
        return Err(Error::invalid(format!("box order t={tt} outside 1..={}", lambda[s])));
    }
    Ok(lambda)
}

/// The image of `e^{lambda(s,t)}` under `phi_T ∘ □_{lambda,s,t}` before
/// straightening, where `lambda` is the weight of `T`.
pub fn box_image_formula(t: &Tableau, s: usize, tt: u32, p: u64) -> Result<FormalSum> {
    let field = Field::from_u64(p)?;
    check_box(t, s, tt)?;
    Ok(box_image_in(&field, t, s, tt))
}

fn box_image_in(field: &Field, t: &Tableau, s: usize, tt: u32) -> FormalSum {
    let (left, right) = (s - 1, s);
    let bounds: Vec<u32> = (0..t.n()).map(|i| t.get(i, right)).collect();
    let mut out = FormalSum::zero(field.prime());
    for_each_bounded_composition(&bounds, tt, |moved| {
        push_shifted(field, t, left, moved, &mut out);
    });
    out
}

fn push_shifted(field: &Field, t: &Tableau, left: usize, moved: &[u32], out: &mut FormalSum) {
    let mut coeff = 1;
    for (i, &z) in moved.iter().enumerate() {
        if z > 0 {
            coeff = field.mul(coeff, field.binom((t.get(i, left) + z) as u64, z as i64));
        }
    }
    if coeff == 0 {
        return;
    }
    let mut u = t.clone();
    for (i, &z) in moved.iter().enumerate() {
        u.set(i, left, t.get(i, left) + z);
        u.set(i, left + 1, t.get(i, left + 1) - z);
    }
    out.add_term(u, coeff);
}

/// The same sum for upper triangular `T` and `s < len(mu)`, enumerated over
/// `t_1..t_s` only, with `t_{s+1} = t - (t_1 + ... + t_s)` and the rest zero.
pub fn box_image_formula_triangular(t: &Tableau, s: usize, tt: u32, p: u64) -> Result<FormalSum> {
    let field = Field::from_u64(p)?;
    check_box(t, s, tt)?;
    if !t.is_upper_triangular() {
        return Err(Error::invalid(format!("{t} is not upper triangular")));
    }
    let m = t.row_sums().iter().filter(|&&x| x > 0).count();
    if s >= m {
        return Err(Error::invalid(format!("s={s} must be below the length {m} of the shape")));
    }
    let col: Vec<i64> = (0..t.n()).map(|i| t.get(i, s) as i64).collect();
    // tail[i] = a_{i+1,s+1} + ... + a_{s+1,s+1} (0-based rows i..=s)
    let mut tail = vec![0i64; s + 2];
    for i in (0..=s).rev() {
        tail[i] = tail[i + 1] + col[i];
    }
    let mut out = FormalSum::zero(field.prime());
    let mut moved = vec![0u32; t.n()];
    triangular_rec(&field, t, s, tt as i64, &col, &tail, 0, 0, &mut moved, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn triangular_rec(
    field: &Field,
    t: &Tableau,
    s: usize,
    tt: i64,
    col: &[i64],
    tail: &[i64],
    i: usize,
    tau: i64,
    moved: &mut Vec<u32>,
    out: &mut FormalSum,
) {
    if i == s {
        moved[s] = (tt - tau) as u32;
        push_shifted(field, t, s - 1, moved, out);
        moved[s] = 0;
        return;
    }
    let lo = (tt - tau - tail[i + 1]).max(0);
    let hi = col[i].min(tt - tau);
    for ti in lo..=hi {
        moved[i] = ti as u32;
        triangular_rec(field, t, s, tt, col, tail, i + 1, tau + ti, moved, out);
    }
    moved[i] = 0;
}

/// Shared setup: the basis `SST_lambda(mu)` on `n = len(lambda)` letters.
struct Setup {
    lambda: Partition,
    mu: Partition,
    field: Field,
    lam: Vec<u32>,
    basis: Arc<[Tableau]>,
}

impl Setup {
    fn new(lambda: &Partition, mu: &Partition, p: u64) -> Result<Self> {
        let field = Field::from_u64(p)?;
        let n = lambda.len().max(mu.len()).max(1);
        let lam = lambda.padded(n);
        let basis: Arc<[Tableau]> = if dominates(lambda, mu)? {
            enumerate_sst(mu, &Weight::new(lam.clone()))?.into()
        } else {
            Arc::from(Vec::new())
        };
        Ok(Setup { lambda: lambda.clone(), mu: mu.clone(), field, lam, basis })
    }

    /// Box maps with a nonvacuous condition, in sorted order.
    fn boxes(&self) -> Vec<(usize, u32)> {
        (1..self.lam.len()).flat_map(|s| (1..=self.lam[s]).map(move |t| (s, t))).collect()
    }

    fn vector(&self, coeffs: Vec<u32>) -> HomVector {
        HomVector {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
            p: self.field.prime(),
            basis: self.basis.clone(),
            coeffs,
        }
    }
}

pub fn hom_space(lambda: &Partition, mu: &Partition, p: u64) -> Result<HomSpaceResult> {
    hom_space_with(lambda, mu, p, Limits::default())
}

pub fn hom_space_with(lambda: &Partition, mu: &Partition, p: u64, limits: Limits) -> Result<HomSpaceResult> {
    let setup = Setup::new(lambda, mu, p)?;
    let k = setup.basis.len();
    if k == 0 {
        return Ok(HomSpaceResult { dim: 0, basis: Vec::new(), blocks: Vec::new() });
    }
    let field = &setup.field;
    let mut straightener = PairStraightener::with_cap(field.prime(), limits.monomial_cap);
    let mut conditions = Echelon::new(field.clone(), k);
    let mut blocks = Vec::new();
    for (s, t) in setup.boxes() {
        if conditions.is_full() {
            break;
        }
        let mut images: BTreeMap<Tableau, SparseVec> = BTreeMap::new();
        for (idx, tab) in setup.basis.iter().enumerate() {
            for (u, c) in box_image_in(field, tab, s, t).terms() {
                images.entry(u.clone()).or_default().add_scaled(&SparseVec::unit(idx as u32, 1), c, field);
            }
        }
        let rows = straightener.straighten_terms(images)?;
        let reached = rows.len();
        for (_, row) in rows {
            conditions.add_row(row.to_dense(k));
            if conditions.is_full() {
                break;
            }
        }
        blocks.push(BlockStats { s, t, rows: reached, rank: conditions.rank() });
    }
    let basis: Vec<HomVector> = conditions.kernel().into_iter().map(|v| setup.vector(v)).collect();
    Ok(HomSpaceResult { dim: basis.len(), basis, blocks })
}

/// `psi = sum of phi_T` over all `T` in `SST_lambda(mu)`.
pub fn build_psi(lambda: &Partition, mu: &Partition, p: u64) -> Result<HomVector> {
    let setup = Setup::new(lambda, mu, p)?;
    let ones = vec![1; setup.basis.len()];
    Ok(setup.vector(ones))
}

/// Whether `v` kills the image of every box map of `lambda`.
pub fn is_hom(v: &HomVector) -> Result<bool> {
    is_hom_with(v, Limits::default())
}

pub fn is_hom_with(v: &HomVector, limits: Limits) -> Result<bool> {
    let setup = Setup::new(&v.lambda, &v.mu, v.p.get() as u64)?;
    if setup.basis[..] != v.basis[..] || v.coeffs.len() != v.basis.len() {
        return Err(Error::invalid("coefficient vector is not indexed by SST_lambda(mu)"));
    }
    if v.is_zero() {
        return Ok(true);
    }
    let field = &setup.field;
    let mut straightener = PairStraightener::with_cap(field.prime(), limits.monomial_cap);
    for (s, t) in setup.boxes() {
        let mut image = FormalSum::zero(field.prime());
        for (tab, c) in v.terms() {
            image.add(&box_image_in(field, tab, s, t).scaled(c));
        }
        if !straightener.straighten(&image)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest instance the brute-force oracle accepts.
pub const ORACLE_MAX_SIZE: u64 = 6;
pub const ORACLE_MAX_LEN: usize = 3;

/// `dim Hom_G(Δ(lambda), Δ(mu))` by brute force: all weight-preserving linear
/// maps between the two modules that commute with every divided power
/// `E_i^(u)` and `F_i^(u)`.
pub fn hom_dim_oracle(lambda: &Partition, mu: &Partition, p: u64) -> Result<usize> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let field = Field::from_u64(p)?;
    let r = lambda.size();
    let n = lambda.len().max(mu.len()).max(1);
    if r > ORACLE_MAX_SIZE || n > ORACLE_MAX_LEN {
        return Err(Error::OracleCap(format!(
            "oracle is limited to size {ORACLE_MAX_SIZE} and {ORACLE_MAX_LEN} parts, got ({lambda}) and ({mu})"
        )));
    }

    let mut weights = Vec::new();
    for_each_bounded_composition(&vec![r as u32; n], r as u32, |a| weights.push(a.to_vec()));
    let mut src = BTreeMap::new();
    let mut dst = BTreeMap::new();
    for a in &weights {
        let alpha = Weight::new(a.clone());
        src.insert(a.clone(), weight_space(lambda, &alpha, p)?);
        dst.insert(a.clone(), weight_space(mu, &alpha, p)?);
    }
    // unknown (alpha, row k, column b) of the block M_alpha: Δ(lambda)_alpha -> Δ(mu)_alpha
    let mut offset = BTreeMap::new();
    let mut unknowns = 0usize;
    for a in &weights {
        offset.insert(a.clone(), unknowns);
        unknowns += dst[a].dim() * src[a].dim();
    }
    if unknowns == 0 {
        return Ok(0);
    }

    let mut system = Echelon::new(field.clone(), unknowns);
    for i in 0..n - 1 {
        for u in 1..=r as u32 {
            for raise in [true, false] {
                for a in &weights {
                    let mut b = a.clone();
                    let (from, to) = if raise { (i + 1, i) } else { (i, i + 1) };
                    if b[from] < u {
                        continue;
                    }
                    b[from] -= u;
                    b[to] += u;
                    let (s_a, s_b, d_a, d_b) = (&src[a], &src[&b], &dst[a], &dst[&b]);
                    if s_a.dim() == 0 || (s_b.dim() == 0 && d_b.dim() == 0) {
                        continue;
                    }
                    let x_src: Vec<Vec<u32>> = s_a
                        .basis()
                        .iter()
                        .map(|m| operate(&field, m, from, to, u, s_b))
                        .collect::<Result<_>>()?;
                    let x_dst: Vec<Vec<u32>> = d_a
                        .basis()
                        .iter()
                        .map(|m| operate(&field, m, from, to, u, d_b))
                        .collect::<Result<_>>()?;
                    // M_b X v_j - X M_a v_j = 0 for each basis vector v_j of Δ(lambda)_a
                    let (oa, ob) = (offset[a], offset[&b]);
                    let (wa, wb) = (s_a.dim(), s_b.dim());
                    for (j, xv) in x_src.iter().enumerate() {
                        for row in 0..d_b.dim() {
                            let mut eq = vec![0u32; unknowns];
                            for (jj, &c) in xv.iter().enumerate() {
                                if c != 0 {
                                    eq[ob + row * wb + jj] = field.add(eq[ob + row * wb + jj], c);
                                }
                            }
                            for (k, xd) in x_dst.iter().enumerate() {
                                if xd[row] != 0 {
                                    let at = oa + k * wa + j;
                                    eq[at] = field.sub(eq[at], xd[row]);
                                }
                            }
                            if eq.iter().any(|&x| x != 0) {
                                system.add_row(eq);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(unknowns - system.rank())
}

/// Moves `u` letters `from -> to` in every way across the slots of `m`, with
/// divided-power coefficients, and reduces in `target`.
fn operate(field: &Field, m: &Tableau, from: usize, to: usize, u: u32, target: &StraightenContext) -> Result<Vec<u32>> {
    let bounds: Vec<u32> = (0..m.n()).map(|slot| m.get(slot, from)).collect();
    let mut image = FormalSum::zero(field.prime());
    for_each_bounded_composition(&bounds, u, |split| {
        let mut c = 1;
        let mut x = m.clone();
        for (slot, &z) in split.iter().enumerate() {
            if z > 0 {
                c = field.mul(c, field.binom((m.get(slot, to) + z) as u64, z as i64));
                x.set(slot, from, m.get(slot, from) - z);
                x.set(slot, to, m.get(slot, to) + z);
            }
        }
        image.add_term(x, c);
    });
    target.coordinates(&image)
}
