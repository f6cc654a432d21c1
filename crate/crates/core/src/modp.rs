//! Prime-field arithmetic, Lucas binomials and the divisibility statistics
//! `l_p`, `c_s`, `e_s` that appear in the stability and nonvanishing criteria.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Largest modulus accepted; products of two residues must fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// Factorial tables are only built for primes up to this size.
const TABLE_LIMIT: u32 = 1 << 16;

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_PRIME {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    p: Prime,
}

impl FpScalar {
    pub fn new(value: i64, p: Prime) -> Self {
        FpScalar { value: value.rem_euclid(p.0 as i64) as u32, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) {
        assert_eq!(self.p, other.p, "mixing scalars of different characteristic");
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(FpScalar { value: pow_mod(self.value, self.p.0 - 2, self.p.0), p: self.p })
        }
    }
}

impl std::ops::Add for FpScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        FpScalar { value: ((self.value as u64 + rhs.value as u64) % self.p.0 as u64) as u32, p: self.p }
    }
}

impl std::ops::Sub for FpScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        let p = self.p.0 as u64;
        FpScalar { value: ((self.value as u64 + p - rhs.value as u64) % p) as u32, p: self.p }
    }
}

impl std::ops::Mul for FpScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        FpScalar { value: ((self.value as u64 * rhs.value as u64) % self.p.0 as u64) as u32, p: self.p }
    }
}

impl std::ops::Neg for FpScalar {
    type Output = Self;
    fn neg(self) -> Self {
        FpScalar { value: (self.p.0 - self.value) % self.p.0, p: self.p }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}

struct Tables {
    fact: Vec<u32>,
    inv_fact: Vec<u32>,
}

/// Arithmetic context for raw residues in hot loops.
///
/// Cloning is cheap; the factorial tables used by Lucas' theorem are shared.
#[derive(Clone)]
pub struct Field {
    p: Prime,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("p", &self.p).finish()
    }
}

impl Field {
    pub fn new(p: Prime) -> Self {
        let tables = (p.0 <= TABLE_LIMIT).then(|| {
            let n = p.0 as usize;
            let mut fact = vec![1u32; n];
            for i in 1..n {
                fact[i] = ((fact[i - 1] as u64 * i as u64) % p.0 as u64) as u32;
            }
            let mut inv_fact = vec![1u32; n];
            inv_fact[n - 1] = pow_mod(fact[n - 1], p.0 - 2, p.0);
            for i in (1..n).rev() {
                inv_fact[i - 1] = ((inv_fact[i] as u64 * i as u64) % p.0 as u64) as u32;
            }
            Arc::new(Tables { fact, inv_fact })
        });
        Field { p, tables }
    }

    pub fn from_u64(p: u64) -> Result<Self> {
        Ok(Field::new(Prime::new(p)?))
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p.0
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p.0 as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p.0 - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p.0 as u64) as u32
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p.0 != 0, "inverse of zero");
        pow_mod(a, self.p.0 - 2, self.p.0)
    }

    /// Reduces a signed integer.
    pub fn reduce(&self, a: i64) -> u32 {
        a.rem_euclid(self.p.0 as i64) as u32
    }

    pub fn scalar(&self, value: u32) -> FpScalar {
        FpScalar { value: value % self.p.0, p: self.p }
    }

    /// `C(a, b) mod p`, zero when `b < 0` or `b > a`, computed digit by digit.
    pub fn binom(&self, a: u64, b: i64) -> u32 {
        if b < 0 || b as u64 > a {
            return 0;
        }
        let p = self.p.0 as u64;
        let (mut a, mut b) = (a, b as u64);
        let mut acc = 1u32;
        while b > 0 {
            let (ad, bd) = ((a % p) as u32, (b % p) as u32);
            if bd > ad {
                return 0;
            }
            acc = self.mul(acc, self.small_binom(ad, bd));
            if acc == 0 {
                return 0;
            }
            a /= p;
            b /= p;
        }
        acc
    }

    fn small_binom(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => self.mul(t.fact[a as usize], self.mul(t.inv_fact[b as usize], t.inv_fact[(a - b) as usize])),
            None => {
                let b = b.min(a - b);
                let mut num = 1u32;
                let mut den = 1u32;
                for i in 0..b {
                    num = self.mul(num, a - i);
                    den = self.mul(den, i + 1);
                }
                self.mul(num, self.inv(den))
            }
        }
    }
}

/// Smallest `i` with `p^i > a`; zero for `a = 0`.
pub fn lp(a: u64, p: u64) -> Result<u32> {
    let p = Prime::new(p)?;
    Ok(lp_prime(a, p))
}

pub(crate) fn lp_prime(a: u64, p: Prime) -> u32 {
    let mut i = 0;
    let mut pow: u128 = 1;
    while pow <= a as u128 {
        pow *= p.0 as u128;
        i += 1;
    }
    i
}

/// `p^e` as a `u128`, saturating.
pub(crate) fn prime_power(p: Prime, e: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(p.0 as u128);
    }
    acc
}

/// Whether `p^e` divides `value` (any sign).
pub(crate) fn power_divides(p: Prime, e: u32, value: i64) -> bool {
    value.unsigned_abs() as u128 % prime_power(p, e) == 0
}

pub fn binom_mod(a: u64, b: i64, p: u64) -> Result<FpScalar> {
    let field = Field::from_u64(p)?;
    Ok(field.scalar(field.binom(a, b)))
}

/// The statistics `c_s`, `e_s` and `c'_{m-1}` of a pair of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomStats {
    /// `c[s-1] = sum_{i<=s} (mu_i - lambda_i)`.
    pub c: Vec<i64>,
    /// `e[s-1]` for `s = 1..=g`.
    pub e: Vec<i64>,
    pub g: usize,
    /// `min(c_{m-1}, lambda_m)`, present only when `m = len(mu) >= 2`.
    pub c_prime: Option<i64>,
}

pub fn hom_stats(lambda: &Partition, mu: &Partition, g: usize) -> Result<HomStats> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    if g == 0 {
        return Err(Error::invalid("g must be at least 1"));
    }
    let n = lambda.len().max(mu.len()).max(g + 1);
    let mut c = Vec::with_capacity(n);
    let mut acc = 0i64;
    for i in 0..n {
        acc += mu.part(i) as i64 - lambda.part(i) as i64;
        c.push(acc);
    }
    let lam = |i: usize| lambda.part(i) as i64;
    let e = if g == 1 {
        vec![lam(1).min(c[0])]
    } else {
        (1..=g)
            .map(|s| match s {
                1 => c[0],
                s if s < g => c[s - 2].max(c[s - 1]),
                _ => lam(g).min(c[g - 1]),
            })
            .collect()
    };
    let m = mu.len();
    let c_prime = (m >= 2).then(|| c[m - 2].min(lam(m - 1)));
    Ok(HomStats { c, e, g, c_prime })
}
