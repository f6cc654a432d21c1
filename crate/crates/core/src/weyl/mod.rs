//! The divided-power presentation of the Weyl module `Δ(mu)`.
//!
//! Elements of `D(mu)` are sparse combinations of matrices (one row per tensor
//! slot). [`weight_space`] builds the quotient of one weight space by the
//! relation space spanned by the box maps; [`PairStraightener`] reaches the
//! same reduced forms by straightening adjacent rows inside small two-row
//! quotients, which scales to weight spaces far too large to build whole.

mod context;
mod pairs;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

pub use context::{weight_space, weight_space_with_cap, StraightenContext, DEFAULT_MONOMIAL_CAP};
pub use pairs::PairStraightener;

use crate::combinatorics::{for_each_bounded_composition, Tableau};
use crate::error::{Error, Result};
use crate::modp::{Field, Prime};

/// A sparse F_p-combination of monomials of `D(mu)` sharing one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    p: Prime,
    terms: BTreeMap<Tableau, u32>,
}

impl FormalSum {
    pub fn zero(p: Prime) -> Self {
        FormalSum { p, terms: BTreeMap::new() }
    }

    pub fn monomial(t: Tableau, p: Prime) -> Self {
        let mut s = FormalSum::zero(p);
        s.add_term(t, 1);
        s
    }

    pub fn from_terms(p: Prime, terms: impl IntoIterator<Item = (Tableau, i64)>) -> Self {
        let mut s = FormalSum::zero(p);
        for (t, c) in terms {
            s.add_term(t, c.rem_euclid(p.get() as i64) as u32);
        }
        s
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Adds `c * t`; `c` is reduced mod p.
    pub fn add_term(&mut self, t: Tableau, c: u32) {
        let p = self.p.get() as u64;
        let c = (c as u64 % p) as u32;
        if c == 0 {
            return;
        }
        debug_assert!(
            self.terms.keys().next().map_or(true, |k| k.row_sums() == t.row_sums() && k.col_sums() == t.col_sums()),
            "mixed shapes or weights in a formal sum"
        );
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let v = ((*o.get() as u64 + c as u64) % p) as u32;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&mut self, other: &FormalSum) {
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), c);
        }
    }

    pub fn scaled(&self, c: u32) -> FormalSum {
        let mut s = FormalSum::zero(self.p);
        for (t, &v) in &self.terms {
            s.add_term(t.clone(), ((v as u64 * c as u64) % self.p.get() as u64) as u32);
        }
        s
    }

    pub fn coeff(&self, t: &Tableau) -> u32 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, u32)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Slot sizes, if there is any term.
    pub fn shape(&self) -> Option<Vec<u32>> {
        self.terms.keys().next().map(Tableau::row_sums)
    }

    /// Letter multiplicities, if there is any term.
    pub fn weight(&self) -> Option<Vec<u32>> {
        self.terms.keys().next().map(Tableau::col_sums)
    }
}

/// An element of a weight space of `Δ(mu)` in the semistandard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylVector {
    pub(crate) shape: Vec<u32>,
    pub(crate) weight: Vec<u32>,
    pub(crate) p: Prime,
    pub(crate) coeffs: BTreeMap<Tableau, u32>,
}

impl WeylVector {
    pub fn shape(&self) -> &[u32] {
        &self.shape
    }

    pub fn weight(&self) -> &[u32] {
        &self.weight
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, t: &Tableau) -> u32 {
        self.coeffs.get(t).copied().unwrap_or(0)
    }

    /// Nonzero coordinates in canonical tableau order.
    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, u32)> {
        self.coeffs.iter().map(|(t, &c)| (t, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_formal_sum(&self) -> FormalSum {
        FormalSum { p: self.p, terms: self.coeffs.clone() }
    }
}

fn check_rank(t: &Tableau, slots: &[u32]) -> Result<()> {
    if t.n() != slots.len() {
        return Err(Error::invalid(format!("tableau {t} has rank {} but {} slots were given", t.n(), slots.len())));
    }
    Ok(())
}

/// `□_{mu,s,t}` on one monomial of `D(mu(s,t))`: comultiply `t` letters out of
/// slot `s` and multiply them into slot `s + 1` (1-based `s`).
///
/// `mu` is the target slot-size vector and need not be a partition.
pub fn box_apply(mu: &[u32], s: usize, t: u32, monomial: &Tableau, p: u64) -> Result<FormalSum> {
    let field = Field::from_u64(p)?;
    box_apply_in(&field, mu, s, t, monomial)
}

pub(crate) fn box_apply_in(field: &Field, mu: &[u32], s: usize, t: u32, monomial: &Tableau) -> Result<FormalSum> {
    let n = mu.len();
    check_rank(monomial, mu)?;
    if s == 0 || s >= n {
        return Err(Error::invalid(format!("box index s={s} outside 1..{}", n.saturating_sub(1))));
    }
    if t == 0 || t > mu[s] {
        return Err(Error::invalid(format!("box order t={t} outside 1..={}", mu[s])));
    }
    let mut source = mu.to_vec();
    source[s - 1] += t;
    source[s] -= t;
    if monomial.row_sums() != source {
        return Err(Error::invalid(format!("monomial {monomial} does not have slot sizes {source:?}")));
    }
    let (a, b) = (s - 1, s);
    let upper = monomial.row(a).to_vec();
    let lower = monomial.row(b).to_vec();
    let mut out = FormalSum::zero(field.prime());
    for_each_bounded_composition(&upper, t, |moved| {
        let mut coeff = 1u32;
        for (j, &z) in moved.iter().enumerate() {
            if z > 0 {
                coeff = field.mul(coeff, field.binom((lower[j] + z) as u64, z as i64));
            }
        }
        if coeff == 0 {
            return;
        }
        let mut m = monomial.clone();
        for (j, &z) in moved.iter().enumerate() {
            m.set(a, j, upper[j] - z);
            m.set(b, j, lower[j] + z);
        }
        out.add_term(m, coeff);
    });
    Ok(out)
}

/// The two-row straightening identity that removes the letter 1 from the
/// second row. Requires `a_1 + b_1 <= nu_1`; when this fails the class is zero.
pub fn two_row_identity(t: &Tableau, p: u64) -> Result<FormalSum> {
    let field = Field::from_u64(p)?;
    let n = t.n();
    let sums = t.row_sums();
    if n < 2 || sums[2..].iter().any(|&x| x != 0) {
        return Err(Error::invalid(format!("{t} is not a two-row tableau")));
    }
    let (a, b) = (t.row(0).to_vec(), t.row(1).to_vec());
    if a[0] + b[0] > sums[0] {
        return Err(Error::invalid(format!("{t} has a_1 + b_1 > nu_1; its class is zero")));
    }
    let sign = if b[0] % 2 == 1 { field.neg(1) } else { 1 };
    let mut out = FormalSum::zero(field.prime());
    let mut bounds = a.clone();
    bounds[0] = 0;
    for_each_bounded_composition(&bounds, b[0], |k| {
        let mut coeff = sign;
        for j in 1..n {
            coeff = field.mul(coeff, field.binom((b[j] + k[j]) as u64, b[j] as i64));
        }
        let mut m = t.clone();
        m.set(0, 0, a[0] + b[0]);
        m.set(1, 0, 0);
        for j in 1..n {
            m.set(0, j, a[j] - k[j]);
            m.set(1, j, b[j] + k[j]);
        }
        out.add_term(m, coeff);
    });
    Ok(out)
}

/// Expands `phi_T(x)` in `D(mu)` before projecting to `Δ(mu)`.
///
/// `x` is a combination of monomials of `D(alpha)`, where `alpha` is the
/// weight of `T`; slot `j` of each monomial is comultiplied along column `j`
/// of `T` and the pieces are multiplied row by row.
pub fn phi_expand(t: &Tableau, x: &FormalSum, p: u64) -> Result<FormalSum> {
    let field = Field::from_u64(p)?;
    phi_expand_in(&field, t, x)
}

pub(crate) fn phi_expand_in(field: &Field, t: &Tableau, x: &FormalSum) -> Result<FormalSum> {
    let n = t.n();
    let alpha = t.col_sums();
    let mut out = FormalSum::zero(field.prime());
    for (mono, c) in x.terms() {
        check_rank(mono, &alpha)?;
        if mono.row_sums() != alpha {
            return Err(Error::invalid(format!(
                "monomial {mono} is not in D({alpha:?}), the weight of {t}"
            )));
        }
        let mut acc = Tableau::zeros(n);
        split_slot(field, t, mono, 0, &mut acc, c, &mut out);
    }
    Ok(out)
}

/// Distributes slot `j` of `mono` over the rows of `t` (column `j` sizes),
/// recursing over slots, and accumulates the merged monomials.
fn split_slot(field: &Field, t: &Tableau, mono: &Tableau, j: usize, acc: &mut Tableau, coeff: u32, out: &mut FormalSum) {
    let n = t.n();
    if j == n {
        out.add_term(acc.clone(), coeff);
        return;
    }
    let sizes: Vec<u32> = (0..n).map(|i| t.get(i, j)).collect();
    split_rows(field, t, mono, j, &sizes, 0, mono.row(j).to_vec(), acc, coeff, out);
}

#[allow(clippy::too_many_arguments)]
fn split_rows(
    field: &Field,
    t: &Tableau,
    mono: &Tableau,
    j: usize,
    sizes: &[u32],
    i: usize,
    rest: Vec<u32>,
    acc: &mut Tableau,
    coeff: u32,
    out: &mut FormalSum,
) {
    let n = t.n();
    if i == n {
        debug_assert!(rest.iter().all(|&x| x == 0));
        split_slot(field, t, mono, j + 1, acc, coeff, out);
        return;
    }
    if sizes[i] == 0 {
        split_rows(field, t, mono, j, sizes, i + 1, rest, acc, coeff, out);
        return;
    }
    let mut parts = Vec::new();
    for_each_bounded_composition(&rest, sizes[i], |piece| parts.push(piece.to_vec()));
    for piece in parts {
        let mut c = coeff;
        for (l, &z) in piece.iter().enumerate() {
            if z > 0 {
                c = field.mul(c, field.binom((acc.get(i, l) + z) as u64, z as i64));
            }
        }
        if c == 0 {
            continue;
        }
        let saved = acc.row(i).to_vec();
        for (l, &z) in piece.iter().enumerate() {
            acc.set(i, l, saved[l] + z);
        }
        let rest2: Vec<u32> = rest.iter().zip(&piece).map(|(r, z)| r - z).collect();
        split_rows(field, t, mono, j, sizes, i + 1, rest2, acc, c, out);
        acc.row_mut(i).copy_from_slice(&saved);
    }
}

/// `phi_T(x)` in `Δ(mu)_beta`, where `ctx` is the weight space of the weight `beta` of `x`.
pub fn apply_phi(t: &Tableau, x: &FormalSum, ctx: &StraightenContext) -> Result<WeylVector> {
    if t.row_sums() != ctx.shape() {
        return Err(Error::invalid(format!("tableau {t} does not have shape {:?}", ctx.shape())));
    }
    if x.prime() != ctx.prime() {
        return Err(Error::invalid("characteristic mismatch"));
    }
    let expanded = phi_expand_in(ctx.field(), t, x)?;
    ctx.straighten(&expanded)
}

/// Reduces `x` to the semistandard basis using a prebuilt weight space.
pub fn straighten(ctx: &StraightenContext, x: &FormalSum) -> Result<WeylVector> {
    ctx.straighten(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn terms(s: &FormalSum) -> Vec<(String, u32)> {
        s.terms().map(|(t, c)| (t.to_string(), c)).collect()
    }

    #[test]
    fn box_examples() {
        // mu=(2,1): 1^(3) ⊗ ∅ -> 1^(2) ⊗ 1
        let r = box_apply(&[2, 1], 1, 1, &t("3,0;0,0"), 7).unwrap();
        assert_eq!(terms(&r), vec![("2,0;1,0".into(), 1)]);
        // mu=(2,2): 1^(3) ⊗ 2 -> 1^(2) ⊗ 12
        let r = box_apply(&[2, 2], 1, 1, &t("3,0;0,1"), 7).unwrap();
        assert_eq!(terms(&r), vec![("2,0;1,1".into(), 1)]);
        // mu=(1,2): 1^(2) ⊗ 1 -> 2 (1 ⊗ 1^(2))
        let r = box_apply(&[1, 2], 1, 1, &t("2,0;1,0"), 7).unwrap();
        assert_eq!(terms(&r), vec![("1,0;2,0".into(), 2)]);
        assert!(box_apply(&[1, 2], 1, 3, &t("2,0;1,0"), 7).is_err());
        assert!(box_apply(&[1, 2], 1, 1, &t("1,0;2,0"), 7).is_err());
    }

    #[test]
    fn two_row_examples() {
        let r = two_row_identity(&t("0,2;1,0"), 5).unwrap();
        assert_eq!(terms(&r), vec![("1,1;0,1".into(), 4)]);
        let r = two_row_identity(&t("1,1,0;0,1,1;0,0,0"), 5).unwrap();
        assert_eq!(terms(&r), vec![("1,1,0;0,1,1".into(), 1)]);
        let r = two_row_identity(&t("1,1,0;1,0,1;0,0,0"), 5).unwrap();
        assert_eq!(terms(&r), vec![("2,0,0;0,1,1".into(), 4)]);
        assert!(two_row_identity(&t("1,0;1,0"), 5).is_err());
    }

    #[test]
    fn phi_worked_example() {
        // T = 1^(2)2^(4) / 12^(2)3^(2), x = 2^(3) ⊗ 1^(3)2^(3) ⊗ 3^(2)
        let tab = t("2,4,0;1,2,2;0,0,0");
        let p = Prime::new(1_000_003).unwrap();
        let x = FormalSum::monomial(t("0,3,0;3,3,0;0,0,2"), p);
        let e = phi_expand(&tab, &x, 1_000_003).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e.coeff(&t("3,3,0;0,3,2;0,0,0")), 9);
        assert_eq!(e.coeff(&t("2,4,0;1,2,2;0,0,0")), 12);
        assert_eq!(e.coeff(&t("1,5,0;2,1,2;0,0,0")), 10);
        let e3 = phi_expand(&tab, &FormalSum::monomial(t("0,3,0;3,3,0;0,0,2"), Prime::new(3).unwrap()), 3).unwrap();
        assert_eq!(terms(&e3), vec![("1,5,0;2,1,2".into(), 1)]);
    }

    #[test]
    fn phi_on_highest_monomial_is_identity() {
        let tab = t("2,4,0;1,2,2;0,0,0");
        let p = Prime::new(5).unwrap();
        let x = FormalSum::monomial(Tableau::diagonal(&[3, 6, 2]), p);
        let e = phi_expand(&tab, &x, 5).unwrap();
        assert_eq!(terms(&e), vec![(tab.to_string(), 1)]);
    }
}
