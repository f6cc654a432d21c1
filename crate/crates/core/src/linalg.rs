//! Dense and sparse vectors over F_p, plus an incremental reduced row echelon form.

use crate::modp::Field;

/// Sparse vector as `(index, value)` pairs sorted by index, no zero values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec(pub Vec<(u32, u32)>);

impl SparseVec {
    pub fn unit(i: u32, c: u32) -> Self {
        if c == 0 {
            SparseVec(Vec::new())
        } else {
            SparseVec(vec![(i, c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, c: u32, f: &Field) {
        if c == 0 || other.0.is_empty() {
            return;
        }
        if self.0.is_empty() {
            self.0 = other.0.iter().map(|&(i, v)| (i, f.mul(v, c))).collect();
            return;
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, x)), Some(&&(j, y))) => {
                    if i < j {
                        out.push((i, x));
                        a.next();
                    } else if j < i {
                        out.push((j, f.mul(y, c)));
                        b.next();
                    } else {
                        let v = f.add(x, f.mul(y, c));
                        if v != 0 {
                            out.push((i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&e), None) => {
                    out.push(e);
                    a.next();
                }
                (None, Some(&&(j, y))) => {
                    out.push((j, f.mul(y, c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.0 = out;
    }

    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut v = vec![0; len];
        for &(i, x) in &self.0 {
            v[i as usize] = x;
        }
        v
    }
}

/// Coefficients carried through straightening: scalars, or vectors when a
/// whole linear map is straightened at once.
pub(crate) trait Coeff: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_scaled(&mut self, other: &Self, c: u32, f: &Field);
}

impl Coeff for u32 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_scaled(&mut self, other: &Self, c: u32, f: &Field) {
        *self = f.add(*self, f.mul(*other, c));
    }
}

impl Coeff for SparseVec {
    fn zero() -> Self {
        SparseVec::default()
    }
    fn is_zero(&self) -> bool {
        SparseVec::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, c: u32, f: &Field) {
        SparseVec::add_scaled(self, other, c, f)
    }
}

/// Rows kept in reduced row echelon form as they arrive.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    /// `(pivot column, row)`, sorted by pivot column.
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `row` against the current rows; returns whether it was independent.
    pub fn add_row(&mut self, mut row: Vec<u32>) -> bool {
        assert_eq!(row.len(), self.ncols);
        let f = &self.field;
        for (pc, prow) in &self.rows {
            let c = row[*pc];
            if c != 0 {
                let m = f.neg(c);
                for (x, &y) in row.iter_mut().zip(prow) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(y, m));
                    }
                }
            }
        }
        let Some(pivot) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(row[pivot]);
        for x in row.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, prow) in self.rows.iter_mut() {
            let c = prow[pivot];
            if c != 0 {
                let m = f.neg(c);
                for (x, &y) in prow.iter_mut().zip(&row) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(y, m));
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(pc, _)| *pc < pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Basis of the null space, itself in reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.ncols];
        for (pc, _) in &self.rows {
            is_pivot[*pc] = true;
        }
        let mut out = Echelon::new(f.clone(), self.ncols);
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.ncols];
            v[free] = 1;
            for (pc, prow) in &self.rows {
                v[*pc] = f.neg(prow[free]);
            }
            out.add_row(v);
        }
        out.rows.into_iter().map(|(_, r)| r).collect()
    }

    /// Whether `v` is annihilated by every row.
    pub fn annihilates(&self, v: &[u32]) -> bool {
        let f = &self.field;
        self.rows.iter().all(|(_, r)| r.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))) == 0)
    }
}
