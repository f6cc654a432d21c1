use std::collections::{BTreeMap, HashMap};

use super::{box_apply_in, FormalSum, WeylVector};
use crate::combinatorics::{collect_tables, Filling, Partition, Tableau, Weight};
use crate::error::{Error, Result};
use crate::modp::{Field, Prime};

/// Default limit on the number of monomials of a weight space.
pub const DEFAULT_MONOMIAL_CAP: usize = 200_000;

/// One weight space `Δ(mu)_alpha`, presented as `D(mu)_alpha` modulo the
/// images of all box maps, with every non-semistandard monomial solved for
/// in terms of the semistandard ones.
#[derive(Clone, Debug)]
pub struct StraightenContext {
    shape: Vec<u32>,
    weight: Vec<u32>,
    field: Field,
    monomials: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    /// Position in `basis` for semistandard monomials.
    basis_pos: Vec<Option<u32>>,
    basis: Vec<Tableau>,
    /// For each non-semistandard monomial, its class in basis coordinates.
    reduced: HashMap<usize, Vec<(u32, u32)>>,
    rank: usize,
}

/// Builds `Δ(mu)_alpha` over F_p with the default monomial cap.
pub fn weight_space(mu: &Partition, alpha: &Weight, p: u64) -> Result<StraightenContext> {
    weight_space_with_cap(mu, alpha, p, DEFAULT_MONOMIAL_CAP)
}

pub fn weight_space_with_cap(mu: &Partition, alpha: &Weight, p: u64, cap: usize) -> Result<StraightenContext> {
    if mu.size() != alpha.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: alpha.size() });
    }
    let field = Field::from_u64(p)?;
    let n = alpha.len().max(mu.len()).max(1);
    StraightenContext::build(&mu.padded(n), alpha.padded(n).entries(), &field, cap)
}

/// Sparse row with columns permuted so that non-semistandard monomials come first.
type Row = Vec<(u32, u32)>;

impl StraightenContext {
    pub(crate) fn build(shape: &[u32], weight: &[u32], field: &Field, cap: usize) -> Result<Self> {
        let n = shape.len();
        assert_eq!(weight.len(), n);
        let what = || format!("D({shape:?}) in weight {weight:?}");
        let monomials = collect_tables(shape, weight, Filling::All, cap)
            .ok_or_else(|| Error::ResourceCap { what: what(), cap })?;
        let index: HashMap<Tableau, usize> = monomials.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();

        let mut basis = Vec::new();
        let mut basis_pos = vec![None; monomials.len()];
        // column order: non-semistandard monomials first, in canonical order
        let mut col_of = vec![0u32; monomials.len()];
        let mut mono_of_col = Vec::with_capacity(monomials.len());
        for (i, m) in monomials.iter().enumerate() {
            if m.is_semistandard() {
                basis_pos[i] = Some(basis.len() as u32);
                basis.push(m.clone());
            } else {
                col_of[i] = mono_of_col.len() as u32;
                mono_of_col.push(i);
            }
        }
        let bound = mono_of_col.len() as u32;
        for (i, pos) in basis_pos.iter().enumerate() {
            if let Some(b) = pos {
                col_of[i] = bound + b;
                mono_of_col.push(i);
            }
        }

        let mut pivots: Vec<Option<Row>> = vec![None; bound as usize];
        let mut rank = 0usize;
        for s in 1..n {
            for t in 1..=shape[s] {
                let mut source = shape.to_vec();
                source[s - 1] += t;
                source[s] -= t;
                let generators = collect_tables(&source, weight, Filling::All, cap)
                    .ok_or_else(|| Error::ResourceCap { what: format!("D({source:?}) in weight {weight:?}"), cap })?;
                for g in generators {
                    let image = box_apply_in(field, shape, s, t, &g)?;
                    let mut row: Row = image.terms().map(|(m, c)| (col_of[index[m]], c)).collect();
                    row.sort_unstable();
                    if reduce_into(&mut pivots, row, field, bound)? {
                        rank += 1;
                    }
                }
            }
        }

        if rank != bound as usize || monomials.len() - rank != basis.len() {
            return Err(Error::Internal(format!(
                "{}: {} monomials, relation rank {rank}, but {} semistandard tableaux",
                what(),
                monomials.len(),
                basis.len()
            )));
        }

        // back-substitute so every pivot row only involves semistandard columns
        for c in (0..bound as usize).rev() {
            let row = pivots[c].take().expect("every non-semistandard column is a pivot");
            let mut acc = BTreeMap::<u32, u32>::new();
            for &(col, v) in &row {
                if col as usize == c {
                    continue;
                }
                if col < bound {
                    // x_col = -(its stored row)
                    let nv = field.neg(v);
                    for &(bc, bv) in pivots[col as usize].as_ref().expect("reduced already") {
                        let e = acc.entry(bc).or_insert(0);
                        *e = field.add(*e, field.mul(nv, bv));
                    }
                } else {
                    let e = acc.entry(col).or_insert(0);
                    *e = field.add(*e, v);
                }
            }
            pivots[c] = Some(acc.into_iter().filter(|&(_, v)| v != 0).collect());
        }
        // [m] = -(rest of its pivot row)
        let reduced = pivots
            .into_iter()
            .enumerate()
            .map(|(c, row)| {
                let row = row.unwrap();
                let coords = row.into_iter().map(|(col, v)| (col - bound, field.neg(v))).collect();
                (mono_of_col[c], coords)
            })
            .collect();

        Ok(StraightenContext {
            shape: shape.to_vec(),
            weight: weight.to_vec(),
            field: field.clone(),
            monomials,
            index,
            basis_pos,
            basis,
            reduced,
            rank,
        })
    }

    pub fn shape(&self) -> &[u32] {
        &self.shape
    }

    pub fn weight(&self) -> &[u32] {
        &self.weight
    }

    pub fn prime(&self) -> Prime {
        self.field.prime()
    }

    pub(crate) fn field(&self) -> &Field {
        &self.field
    }

    /// `dim D(mu)_alpha`.
    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    /// `dim Δ(mu)_alpha`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.rank
    }

    /// Semistandard basis in canonical order.
    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn monomials(&self) -> &[Tableau] {
        &self.monomials
    }

    /// Basis coordinates of the class of one monomial.
    pub fn reduce_monomial(&self, m: &Tableau) -> Result<Vec<(u32, u32)>> {
        let i = *self.index.get(m).ok_or_else(|| {
            Error::invalid(format!("{m} is not a monomial of D({:?}) in weight {:?}", self.shape, self.weight))
        })?;
        Ok(match self.basis_pos[i] {
            Some(b) => vec![(b, 1)],
            None => self.reduced[&i].clone(),
        })
    }

    /// Dense coordinates of `x + R` in the semistandard basis.
    pub fn coordinates(&self, x: &FormalSum) -> Result<Vec<u32>> {
        let f = &self.field;
        let mut out = vec![0u32; self.basis.len()];
        for (m, c) in x.terms() {
            for (b, v) in self.reduce_monomial(m)? {
                out[b as usize] = f.add(out[b as usize], f.mul(c, v));
            }
        }
        Ok(out)
    }

    pub fn straighten(&self, x: &FormalSum) -> Result<WeylVector> {
        if x.prime() != self.prime() {
            return Err(Error::invalid("characteristic mismatch"));
        }
        let coords = self.coordinates(x)?;
        Ok(self.vector(&coords))
    }

    pub(crate) fn vector(&self, coords: &[u32]) -> WeylVector {
        WeylVector {
            shape: self.shape.clone(),
            weight: self.weight.clone(),
            p: self.prime(),
            coeffs: coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.basis[i].clone(), c))
                .collect(),
        }
    }
}

/// Reduces `row` against the pivot rows and stores it as a new pivot if it
/// survives. Rows are kept monic with their pivot as smallest column.
fn reduce_into(pivots: &mut [Option<Row>], mut row: Row, field: &Field, bound: u32) -> Result<bool> {
    loop {
        let Some(&(lead, v)) = row.first() else {
            return Ok(false);
        };
        if lead >= bound {
            return Err(Error::Internal(
                "a relation lies in the span of semistandard monomials".to_string(),
            ));
        }
        match &pivots[lead as usize] {
            Some(prow) => {
                row = axpy(&row, prow, field.neg(v), field);
            }
            None => {
                let inv = field.inv(v);
                let monic = row.into_iter().map(|(c, x)| (c, field.mul(x, inv))).collect();
                pivots[lead as usize] = Some(monic);
                return Ok(true);
            }
        }
    }
}

/// `a + c * b` on sorted sparse rows.
fn axpy(a: &Row, b: &Row, c: u32, field: &Field) -> Row {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(b[j].1, c)));
            j += 1;
        } else {
            let v = field.add(a[i].1, field.mul(b[j].1, c));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
