//! Exact arithmetic in cyclotomic fields.
//!
//! A [`RootOfUnity`] is `ζ_order^num` with `ζ_k = e^{2πi/k}`; a
//! [`Cyclotomic`] is an element of `ℚ(ζ_N)` stored in the power basis
//! `1, ζ_N, …, ζ_N^{φ(N)-1}` after reduction modulo the cyclotomic
//! polynomial `Φ_N`. No floating point is involved anywhere.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::linalg::Rational;

/// `ζ_order^num`, kept reduced: `0 ≤ num < order` and `gcd(num, order) = 1`
/// (the root `1` is `0/1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u32,
    order: u32,
}

impl RootOfUnity {
    pub const ONE: Self = Self { num: 0, order: 1 };
    pub const MINUS_ONE: Self = Self { num: 1, order: 2 };

    pub fn new(num: i64, order: u32) -> Self {
        assert!(order > 0, "root of unity of order 0");
        let num = num.rem_euclid(order as i64) as u32;
        if num == 0 {
            return Self::ONE;
        }
        let g = num.gcd(&order);
        Self {
            num: num / g,
            order: order / g,
        }
    }

    /// The primitive root `ζ_k`.
    pub fn zeta(k: u32) -> Self {
        Self::new(1, k)
    }

    pub fn sign(positive: bool) -> Self {
        if positive {
            Self::ONE
        } else {
            Self::MINUS_ONE
        }
    }

    pub fn num(self) -> u32 {
        self.num
    }

    /// Multiplicative order of the root.
    pub fn order(self) -> u32 {
        self.order
    }

    pub fn pow(self, e: i64) -> Self {
        Self::new(self.num as i64 * e, self.order)
    }

    pub fn inverse(self) -> Self {
        Self::new(-(self.num as i64), self.order)
    }

    /// Exponent of this root as a power of `ζ_n`; `n` must be a multiple of
    /// the order.
    pub fn exponent_in(self, n: u32) -> u32 {
        debug_assert_eq!(n % self.order, 0);
        self.num * (n / self.order)
    }

    /// `Some(±1)` for real roots.
    pub fn as_sign(self) -> Option<i32> {
        match self.order {
            1 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl Mul for RootOfUnity {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let l = self.order.lcm(&rhs.order);
        Self::new((self.exponent_in(l) + rhs.exponent_in(l)) as i64, l)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 => write!(f, "1"),
            2 => write!(f, "-1"),
            o if self.num == 1 => write!(f, "E({o})"),
            o => write!(f, "E({o})^{}", self.num),
        }
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<[i64]>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<[i64]> {
    if let Some(p) = phi_cache().read().expect("poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let den = cyclotomic_polynomial(d);
        num = exact_divide(&num, &den);
    }
    let p: Arc<[i64]> = num.into();
    phi_cache()
        .write()
        .expect("poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An element of `ℚ(ζ_order)` in reduced power-basis form.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v))
    }

    pub fn from_rational(v: Rational) -> Self {
        Self {
            order: 1,
            coeffs: vec![v],
        }
    }

    pub fn root(r: RootOfUnity) -> Self {
        let mut counts = vec![0i64; r.order() as usize];
        counts[r.num() as usize] = 1;
        Self::from_power_counts(r.order(), &counts)
    }

    /// `Σ_e counts[e] · ζ_n^e`.
    pub fn from_power_counts(n: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), n as usize);
        let coeffs = counts.iter().map(|&c| Rational::from_integer(c)).collect();
        Self::reduced(n, coeffs)
    }

    fn reduced(order: u32, mut coeffs: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for k in (deg..coeffs.len()).rev() {
            let c = coeffs[k];
            if c.is_zero() {
                continue;
            }
            for (i, &p) in phi.iter().enumerate() {
                coeffs[k - deg + i] -= c * Rational::from_integer(p);
            }
        }
        coeffs.resize(deg.max(1), Rational::zero());
        if order != 1 && coeffs[1..].iter().all(Zero::is_zero) {
            return Self {
                order: 1,
                coeffs: vec![coeffs[0]],
            };
        }
        Self { order, coeffs }
    }

    fn lift(&self, n: u32) -> Vec<Rational> {
        debug_assert_eq!(n % self.order, 0);
        let step = (n / self.order) as usize;
        let mut out = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * step] = *c;
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (self.order == 1).then(|| self.coeffs[0])
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn scale(&self, s: Rational) -> Self {
        Self::reduced(self.order, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(n - i) % n] += c;
        }
        Self::reduced(self.order, out)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        (self - other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let l = self.order.lcm(&rhs.order);
        let mut a = self.lift(l);
        let b = rhs.lift(l);
        if b.len() > a.len() {
            a.resize(b.len(), Rational::zero());
        }
        for (x, y) in a.iter_mut().zip(&b) {
            *x += y;
        }
        Cyclotomic::reduced(l, a)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let l = self.order.lcm(&rhs.order);
        let a = self.lift(l);
        let b = rhs.lift(l);
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Cyclotomic::reduced(l, out)
    }
}

impl From<RootOfUnity> for Cyclotomic {
    fn from(r: RootOfUnity) -> Self {
        Self::root(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "E({})^{i}", self.order)?,
                (_, false) => write!(f, "{a}*E({})^{i}", self.order)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Cyclotomic {
    /// Integers serialize as JSON numbers, everything else as a string.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(self),
        }
    }
}
