//! Exact arithmetic in the cyclotomic field ℚ(ζ_m).
//!
//! A [`Scalar`] is a residue modulo the cyclotomic polynomial Φ_m, stored as
//! its `φ(m)` rational coefficients in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
//! Trailing zero coefficients are trimmed, and an element whose only nonzero
//! coefficient is the constant one is stored with conductor 1. Values from
//! different conductors are lifted to the least common one before they are
//! combined or compared, and hashing goes through normalized traces, which do
//! not depend on the conductor a value happens to be stored in.

use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest supported conductor.
pub const MAX_CONDUCTOR: u32 = 360;

const PHI_INIT: OnceLock<Vec<i64>> = OnceLock::new();
static CYCLOTOMIC: [OnceLock<Vec<i64>>; MAX_CONDUCTOR as usize + 1] =
    [PHI_INIT; MAX_CONDUCTOR as usize + 1];

/// Coefficients of Φ_m, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> &'static [i64] {
    assert!(
        (1..=MAX_CONDUCTOR).contains(&m),
        "conductor {m} out of range"
    );
    CYCLOTOMIC[m as usize].get_or_init(|| {
        // t^m - 1 divided by Φ_d for every proper divisor d.
        let mut num = vec![0i64; m as usize + 1];
        num[0] = -1;
        num[m as usize] = 1;
        for d in 1..m {
            if m % d == 0 {
                num = exact_div_monic(&num, cyclotomic_polynomial(d));
            }
        }
        num
    })
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &b) in den.iter().enumerate() {
                rem[k + i] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Euler's totient, which is also the degree of Φ_m.
pub fn totient(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The conductor `m` fixed for a session: every root of unity used must have
/// order dividing `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conductor(u32);

impl Conductor {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_CONDUCTOR {
            return Err(Error::BadConductor(m));
        }
        Ok(Conductor(m))
    }

    /// Smallest conductor housing roots of unity of all the given orders.
    pub fn covering(orders: impl IntoIterator<Item = u32>) -> Result<Self> {
        let m = orders.into_iter().fold(1u32, |acc, n| acc.lcm(&n.max(1)));
        Self::new(m)
    }

    pub fn m(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> u32 {
        totient(self.0)
    }

    pub fn divides(self, n: u32) -> bool {
        n != 0 && self.0 % n == 0
    }

    /// `ζ_m^(m/n)`, a primitive `n`-th root of unity.
    pub fn primitive_root(self, n: u32) -> Result<Scalar> {
        if !self.divides(n) {
            return Err(Error::ConductorTooSmall {
                order: n,
                conductor: self.0,
            });
        }
        Ok(Scalar::root_of_unity(self.0, (self.0 / n) as i64))
    }

    pub fn zeta(self) -> Scalar {
        Scalar::root_of_unity(self.0, 1)
    }
}

/// An exact element of ℚ(ζ_m).
#[derive(Clone)]
pub struct Scalar {
    m: u32,
    c: Vec<BigRational>,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    fn canonical(m: u32, mut c: Vec<BigRational>) -> Scalar {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let m = if c.len() <= 1 { 1 } else { m };
        Scalar { m, c }
    }

    pub fn zero() -> Scalar {
        Scalar { m: 1, c: Vec::new() }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar::canonical(1, vec![q])
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn root_of_unity(m: u32, k: i64) -> Scalar {
        let k = k.rem_euclid(m as i64) as usize;
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Scalar::reduce(m, c)
    }

    /// Coefficients in the power basis of ζ_m, lowest first, trailing zeros
    /// trimmed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    /// Build from power-basis coefficients, reducing modulo Φ_m.
    pub fn from_coeffs(m: u32, c: Vec<BigRational>) -> Scalar {
        Scalar::reduce(m, c)
    }

    /// The conductor this value lives in (1 for rationals).
    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    fn reduce(m: u32, mut c: Vec<BigRational>) -> Scalar {
        if m > 1 {
            let phi = cyclotomic_polynomial(m);
            let d = phi.len() - 1;
            while c.len() > d {
                let top = c.pop().unwrap();
                if top.is_zero() {
                    continue;
                }
                let base = c.len() - d;
                for (i, &p) in phi[..d].iter().enumerate() {
                    if p != 0 {
                        c[base + i] -= &top * BigRational::from_integer(BigInt::from(p));
                    }
                }
            }
        }
        Scalar::canonical(m, c)
    }

    /// Re-express in ℚ(ζ_m); `None` unless the current conductor divides `m`.
    pub fn lift(&self, m: u32) -> Option<Scalar> {
        if self.m == m || self.c.len() <= 1 {
            return Some(self.clone());
        }
        if m == 0 || m % self.m != 0 {
            return None;
        }
        let step = (m / self.m) as usize;
        let mut c = vec![BigRational::zero(); (self.c.len() - 1) * step + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i * step] = x.clone();
        }
        Some(Scalar::reduce(m, c))
    }

    fn align<'a>(a: &'a Scalar, b: &'a Scalar) -> (u32, Cow<'a, Scalar>, Cow<'a, Scalar>) {
        if a.m == b.m || b.m == 1 {
            return (a.m, Cow::Borrowed(a), Cow::Borrowed(b));
        }
        if a.m == 1 {
            return (b.m, Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let m = num_integer::lcm(a.m, b.m);
        assert!(
            m <= MAX_CONDUCTOR,
            "scalars from conductors {} and {} need conductor {m}, above {MAX_CONDUCTOR}",
            a.m,
            b.m
        );
        let x = if a.m == m { Cow::Borrowed(a) } else { Cow::Owned(a.lift(m).unwrap()) };
        let y = if b.m == m { Cow::Borrowed(b) } else { Cow::Owned(b.lift(m).unwrap()) };
        (m, x, y)
    }

    /// `Tr(x) / φ(m)`, which is the same for every conductor holding `x`.
    fn normalized_trace(&self) -> BigRational {
        let mut t = BigRational::zero();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.m / (i as u32).gcd(&self.m);
            let mu = mobius(k);
            if mu != 0 {
                t += c * BigRational::new(BigInt::from(mu), BigInt::from(totient(k)));
            }
        }
        t
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            m: self.m,
            c: self.c.iter().map(|x| x * q).collect(),
        }
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.c.len() == 1 {
            return other.scale(&self.c[0]);
        }
        if other.c.len() == 1 {
            return self.scale(&other.c[0]);
        }
        let (m, x, y) = Scalar::align(self, other);
        let (x, y) = (x.as_ref(), y.as_ref());
        let mut prod = vec![BigRational::zero(); x.c.len() + y.c.len() - 1];
        for (i, a) in x.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::reduce(m, prod)
    }

    fn add_ref(&self, other: &Scalar, sign: bool) -> Scalar {
        let (m, x, y) = Scalar::align(self, other);
        let (x, y) = (x.as_ref(), y.as_ref());
        let n = x.c.len().max(y.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = x.c.get(i);
            let b = y.c.get(i);
            let v = match (a, b, sign) {
                (Some(a), Some(b), true) => a + b,
                (Some(a), Some(b), false) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), true) => b.clone(),
                (None, Some(b), false) => -b,
                (None, None, _) => BigRational::zero(),
            };
            c.push(v);
        }
        Scalar::canonical(m, c)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Scalar::from_rational(q.recip()));
        }
        // Solve (x · t^j mod Φ_m)_j · y = e_0 over ℚ.
        let m = self.m;
        let d = totient(m) as usize;
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        let t = Scalar::root_of_unity(m, 1);
        let mut cur = self.clone();
        for _ in 0..d {
            let mut col = cur.c.clone();
            col.resize(d, BigRational::zero());
            cols.push(col);
            cur = cur.mul_ref(&t);
        }
        // Augmented rows: row i = (cols[0][i], …, cols[d-1][i] | δ_{i0}).
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut r: Vec<BigRational> = cols.iter().map(|col| col[i].clone()).collect();
                r.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                r
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !rows[r][col].is_zero())
                .expect("nonzero element of a field is invertible");
            rows.swap(col, piv);
            let p = rows[col][col].clone();
            for x in rows[col].iter_mut() {
                *x /= &p;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                        *x -= &f * y;
                    }
                }
            }
        }
        let y: Vec<BigRational> = rows.into_iter().map(|r| r[d].clone()).collect();
        Ok(Scalar::canonical(m, y))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplicative order if this is a root of unity dividing `bound`.
    pub fn root_order(&self, bound: u32) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut cur = self.clone();
        for k in 1..=bound {
            if cur.is_one() {
                return Some(k);
            }
            cur = &cur * self;
        }
        None
    }

    /// Sign of the leading printed coefficient for rational values.
    pub(crate) fn is_negative_rational(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_negative()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.m == other.m || self.c.len() <= 1 || other.c.len() <= 1 {
            return self.c == other.c;
        }
        let (_, x, y) = Scalar::align(self, other);
        x.c == y.c
    }
}

impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.normalized_trace().hash(state);
        if self.c.len() > 1 {
            self.mul_ref(self).normalized_trace().hash(state);
        }
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Rationals render as `p` or `p/q`; other values as a polynomial in `z<m>`,
/// e.g. `-1 - z3` or `z6^2 + 1/2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                fmt_rational(&a, f)?;
                continue;
            }
            if !a.is_one() {
                fmt_rational(&a, f)?;
                write!(f, "*")?;
            }
            if k == 1 {
                write!(f, "z{}", self.m)?;
            } else {
                write!(f, "z{}^{}", self.m, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs, true)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs, false)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs, true)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs, false)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for x in self.c.iter_mut() {
            *x = -std::mem::take(x);
        }
        self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs, true);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs, false);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}
