//! Exact scalars and the small number-theoretic toolkit behind the waves.
//!
//! Rationals are `num_rational::BigRational`; [`GaussianRational`] adds the
//! imaginary unit for complex chamber parameters. The prime radical
//! circulator `Psi_j(s)`, the sum of `rho^s` over primitive `j`-th roots of
//! unity, is evaluated through the multiplicative rule on the prime-power
//! factorization of `j`, so it never leaves the integers.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `p / q`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat(n))
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self { re: &self.re * k, im: &self.im * k }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let n = rhs.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(Self { re: num.re / &n, im: num.im / n })
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self::real(re)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let unit = if im_abs.is_one() { alloc::string::String::new() } else { alloc::format!("{}", im_abs) };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{}{}i", sign, unit);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}i", self.re, sign, unit)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on a zero divisor; see [`GaussianRational::checked_div`].
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

/// Prime-power factorization, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactoredInteger {
    pub factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

fn factor_u64(mut n: u64) -> FactoredInteger {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    FactoredInteger { factors }
}

fn positive(n: i64) -> Result<u64> {
    if n <= 0 {
        Err(Error::NonPositive(n))
    } else {
        Ok(n as u64)
    }
}

/// Trial-division factorization.
pub fn factorize(n: i64) -> Result<FactoredInteger> {
    Ok(factor_u64(positive(n)?))
}

pub fn euler_phi(n: i64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product())
}

pub fn moebius(n: i64) -> Result<i8> {
    let f = factorize(n)?;
    if f.factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Prime radical circulator for a fixed period, with the factorization cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circulator {
    j: u64,
    // (p, p^(a-1)) for each prime power p^a exactly dividing j
    parts: Vec<(i64, i64)>,
}

impl Circulator {
    pub fn new(j: i64) -> Result<Self> {
        let f = factorize(j)?;
        let parts = f
            .factors
            .iter()
            .map(|&(p, e)| (p as i64, p.pow(e - 1) as i64))
            .collect();
        Ok(Self { j: j as u64, parts })
    }

    pub fn period(&self) -> u64 {
        self.j
    }

    /// `Psi_j(s)` for any integer `s`.
    pub fn eval(&self, s: i64) -> i64 {
        let mut acc = 1i64;
        for &(p, q) in &self.parts {
            if s.rem_euclid(q) != 0 {
                return 0;
            }
            let t = s.div_euclid(q);
            let psi_p = if t.rem_euclid(p) == 0 { p - 1 } else { -1 };
            acc *= q * psi_p;
        }
        acc
    }
}

/// `Psi_j(s) = sum of rho^s over primitive j-th roots of unity rho`.
pub fn prime_circulator(j: i64, s: i64) -> Result<i64> {
    Ok(Circulator::new(j)?.eval(s))
}

/// Product of componentwise circulators `prod_k Psi_{j_k}(s_k)`.
pub fn vector_circulator(j: &[i64], s: &[i64]) -> Result<i64> {
    if j.len() != s.len() {
        return Err(Error::LengthMismatch { expected: j.len(), found: s.len() });
    }
    let mut acc = 1i64;
    for (&jk, &sk) in j.iter().zip(s) {
        acc *= prime_circulator(jk, sk)?;
    }
    Ok(acc)
}

/// Circulators for a fixed vector period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCirculator {
    parts: Vec<Circulator>,
}

impl VectorCirculator {
    pub fn new(j: &[u64]) -> Result<Self> {
        let parts = j.iter().map(|&jk| Circulator::new(jk as i64)).collect::<Result<_>>()?;
        Ok(Self { parts })
    }

    pub fn eval(&self, s: &[i64]) -> i64 {
        let mut acc = 1;
        for (c, &sk) in self.parts.iter().zip(s) {
            acc *= c.eval(sk);
            if acc == 0 {
                break;
            }
        }
        acc
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Sorted divisors of `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
