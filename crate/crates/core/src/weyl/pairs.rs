use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::context::StraightenContext;
use super::{FormalSum, WeylVector};
use crate::combinatorics::Tableau;
use crate::error::{Error, Result};
use crate::linalg::Coeff;
use crate::modp::{Field, Prime};

/// Straightens monomials of `D(mu)` one adjacent pair of rows at a time.
///
/// A non-semistandard monomial has some pair of rows `i, i + 1` that is not
/// column strict. That pair, with its letters relabelled `1..k`, is a monomial
/// of a two-row module whose weight space is small; its reduced form there
/// lifts to `Δ(mu)` by reinstating the other rows, because the box maps of the
/// two-row module are box maps of `mu` acting on slots `i, i + 1`. Every term
/// of a lift is strictly higher in dominance, so processing the lowest
/// monomial first terminates.
#[derive(Debug)]
pub struct PairStraightener {
    field: Field,
    cap: usize,
    contexts: HashMap<(Vec<u32>, Vec<u32>), Arc<StraightenContext>>,
    /// `(upper, lower)` relabelled rows to the upper rows of its reduced form.
    expansions: HashMap<(Vec<u32>, Vec<u32>), Arc<Vec<(Vec<u32>, u32)>>>,
}

impl PairStraightener {
    pub fn new(p: Prime) -> Self {
        Self::with_cap(p, super::DEFAULT_MONOMIAL_CAP)
    }

    /// `cap` bounds both the pending work list and each two-row weight space.
    pub fn with_cap(p: Prime, cap: usize) -> Self {
        PairStraightener { field: Field::new(p), cap, contexts: HashMap::new(), expansions: HashMap::new() }
    }

    pub fn prime(&self) -> Prime {
        self.field.prime()
    }

    /// Number of two-row weight spaces built so far.
    pub fn cached_spaces(&self) -> usize {
        self.contexts.len()
    }

    /// Reduces `x` to the semistandard basis of its weight space in `Δ(mu)`.
    pub fn straighten(&mut self, x: &FormalSum) -> Result<WeylVector> {
        if x.prime() != self.prime() {
            return Err(Error::invalid("characteristic mismatch"));
        }
        let shape = x.shape().unwrap_or_default();
        let weight = x.weight().unwrap_or_default();
        let reduced = self.straighten_terms(x.terms().map(|(t, c)| (t.clone(), c)))?;
        Ok(WeylVector { shape, weight, p: self.prime(), coeffs: reduced.into_iter().collect() })
    }

    /// Straightens with coefficients in any F_p-module; the output is in
    /// canonical tableau order with zero coefficients dropped.
    pub(crate) fn straighten_terms<C: Coeff>(
        &mut self,
        terms: impl IntoIterator<Item = (Tableau, C)>,
    ) -> Result<Vec<(Tableau, C)>> {
        let mut pending: BTreeMap<(u64, Tableau), C> = BTreeMap::new();
        for (t, c) in terms {
            add_to(&mut pending, (dominance_key(&t), t), &c, 1, &self.field);
        }
        let mut done: BTreeMap<Tableau, C> = BTreeMap::new();
        while let Some(((key, t), c)) = pending.pop_first() {
            let Some(i) = (0..t.n().saturating_sub(1)).find(|&i| !t.pair_is_semistandard(i)) else {
                done.insert(t, c);
                continue;
            };
            let (letters, upper, lower) = relabel(&t, i);
            let expansion = self.expansion(upper, lower)?;
            for (row, v) in expansion.iter() {
                let mut u = t.clone();
                for (j, &l) in letters.iter().enumerate() {
                    let total = t.get(i, l) + t.get(i + 1, l);
                    u.set(i, l, row[j]);
                    u.set(i + 1, l, total - row[j]);
                }
                let k = dominance_key(&u);
                if k <= key {
                    return Err(Error::Internal(format!("straightening {t} produced {u}, which is not higher")));
                }
                add_to(&mut pending, (k, u), &c, *v, &self.field);
            }
            if pending.len() > self.cap {
                return Err(Error::ResourceCap { what: "pending straightening terms".to_string(), cap: self.cap });
            }
        }
        Ok(done.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn expansion(&mut self, upper: Vec<u32>, lower: Vec<u32>) -> Result<Arc<Vec<(Vec<u32>, u32)>>> {
        let key = (upper, lower);
        if let Some(e) = self.expansions.get(&key) {
            return Ok(e.clone());
        }
        let (upper, lower) = &key;
        let k = upper.len();
        let mut shape = vec![0u32; k];
        shape[0] = upper.iter().sum();
        shape[1] = lower.iter().sum();
        let weight: Vec<u32> = upper.iter().zip(lower).map(|(a, b)| a + b).collect();
        let ctx = match self.contexts.get(&(shape.clone(), weight.clone())) {
            Some(c) => c.clone(),
            None => {
                let c = Arc::new(StraightenContext::build(&shape, &weight, &self.field, self.cap)?);
                self.contexts.insert((shape, weight), c.clone());
                c
            }
        };
        let mut m = Tableau::zeros(k);
        m.row_mut(0).copy_from_slice(upper);
        m.row_mut(1).copy_from_slice(lower);
        let coords = ctx.reduce_monomial(&m)?;
        let e: Arc<Vec<_>> = Arc::new(coords.into_iter().map(|(b, v)| (ctx.basis()[b as usize].row(0).to_vec(), v)).collect());
        self.expansions.insert(key, e.clone());
        Ok(e)
    }
}

fn add_to<C: Coeff>(map: &mut BTreeMap<(u64, Tableau), C>, key: (u64, Tableau), c: &C, v: u32, f: &Field) {
    let slot = map.entry(key).or_insert_with(C::zero);
    slot.add_scaled(c, v, f);
}

/// Linear in the entries and strictly increasing when a letter moves to a
/// higher row in exchange for a larger one.
pub(crate) fn dominance_key(t: &Tableau) -> u64 {
    let n = t.n() as u64;
    let mut key = 0u64;
    for i in 0..t.n() {
        for (j, &a) in t.row(i).iter().enumerate() {
            key += a as u64 * (n - i as u64) * (n - j as u64);
        }
    }
    key
}

/// Letters used by rows `i, i + 1`, and those rows restricted to them (at
/// least two columns, so the pair is a tableau of rank two or more).
fn relabel(t: &Tableau, i: usize) -> (Vec<usize>, Vec<u32>, Vec<u32>) {
    let letters: Vec<usize> = (0..t.n()).filter(|&l| t.get(i, l) + t.get(i + 1, l) > 0).collect();
    let width = letters.len().max(2);
    let mut upper = vec![0u32; width];
    let mut lower = vec![0u32; width];
    for (j, &l) in letters.iter().enumerate() {
        upper[j] = t.get(i, l);
        lower[j] = t.get(i + 1, l);
    }
    (letters, upper, lower)
}
