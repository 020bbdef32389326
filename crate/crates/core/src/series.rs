//! Multivariate polynomials and total-degree truncated power series.
//!
//! [`MultiPoly`] holds polynomials in `x` (or `s`, or `alpha`) with
//! [`GaussianRational`] coefficients. [`CoeffSeries`] is a power series in
//! the `t` variables whose coefficients are such polynomials, truncated at a
//! total degree `cap`. Every generating function in this crate is a product
//! of the factor series built here.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial, BigRational, GaussianRational};

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

/// A polynomial in `vars` variables with exact complex-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Exponent, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    pub fn constant(vars: usize, c: GaussianRational) -> Self {
        Self::monomial(vec![0; vars], c)
    }

    /// The variable `x_index` (zero based).
    pub fn var(vars: usize, index: usize) -> Self {
        assert!(index < vars, "variable index {index} out of range for {vars} variables");
        let mut e = vec![0; vars];
        e[index] = 1;
        Self::monomial(e, GaussianRational::one())
    }

    pub fn monomial(exp: Exponent, c: GaussianRational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// Univariate polynomial from ascending rational coefficients.
    pub fn from_coeffs(coeffs: &[BigRational]) -> Self {
        let mut p = Self::zero(1);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], GaussianRational::real(c.clone()));
        }
        p
    }

    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, GaussianRational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> GaussianRational {
        self.terms.get(exp).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&vec![0; self.vars])
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// All coefficients have zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn add_term(&mut self, exp: Exponent, c: GaussianRational) {
        assert_eq!(exp.len(), self.vars, "exponent length does not match variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Reinterpret a constant (0-variable) polynomial in `vars` variables.
    pub fn lift(&self, vars: usize) -> Self {
        if self.vars == vars {
            return self.clone();
        }
        assert!(self.is_constant(), "only constants can change variable count");
        Self::constant(vars, self.constant_term())
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable counts");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.vars);
        }
        Self { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        self.scale(&GaussianRational::real(k.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `x_i -> subs[i]`; all substitutes share one variable count.
    pub fn compose(&self, subs: &[MultiPoly]) -> Self {
        assert_eq!(subs.len(), self.vars, "one substitute per variable");
        let new_vars = subs.first().map_or(0, MultiPoly::vars);
        let max_deg: Vec<u32> = (0..self.vars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<MultiPoly>> = subs
            .iter()
            .zip(&max_deg)
            .map(|(s, &d)| {
                let mut v = vec![MultiPoly::one(new_vars)];
                for k in 1..=d as usize {
                    let next = v[k - 1].mul(s);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(new_vars);
        for (e, c) in &self.terms {
            let mut m = Self::constant(new_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = m.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&m);
        }
        out
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &[BigRational]) -> Self {
        assert_eq!(a.len(), self.vars);
        let subs: Vec<MultiPoly> = a
            .iter()
            .enumerate()
            .map(|(i, ai)| {
                MultiPoly::var(self.vars, i)
                    .add(&MultiPoly::constant(self.vars, GaussianRational::real(ai.clone())))
            })
            .collect();
        self.compose(&subs)
    }

    /// `p(x + a)` for an integer offset.
    pub fn shift_int(&self, a: &[i64]) -> Self {
        let a: Vec<BigRational> = a.iter().map(|&v| BigRational::from_integer(v.into())).collect();
        self.shift(&a)
    }

    /// `p(k x)` with one scalar factor for every variable.
    pub fn scale_args(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let d: u32 = e.iter().sum();
            out.add_term(e.clone(), c.scale(&num_traits::pow(k.clone(), d as usize)));
        }
        out
    }

    /// Evaluate at a point.
    pub fn eval(&self, x: &[GaussianRational]) -> GaussianRational {
        assert_eq!(x.len(), self.vars);
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t = &t * &xi.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: &[i64]) -> GaussianRational {
        assert_eq!(x.len(), self.vars);
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut m = BigInt::one();
            for (&xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    m *= num_traits::pow(BigInt::from(xi), k as usize);
                }
            }
            if m.is_zero() {
                continue;
            }
            acc += &c.scale(&BigRational::from_integer(m));
        }
        acc
    }

    /// Real parts of an evaluation at an integer point; the caller knows the
    /// polynomial is real.
    pub fn eval_int_real(&self, x: &[i64]) -> BigRational {
        self.eval_int(x).re
    }

    /// Canonical text with the default variable names (`x` or `x1, x2, ...`).
    pub fn display_default(&self) -> String {
        let names = default_names("x", self.vars);
        self.display_with(&names)
    }

    /// Canonical text: graded descending monomial order, `*` between factors.
    pub fn display_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.vars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let mono = mono.join("*");
            let (negative, mag) = if c.is_real() {
                (c.re.is_negative(), GaussianRational::real(c.re.abs()))
            } else {
                (false, c.clone())
            };
            let coeff_text = if c.is_real() {
                format!("{}", mag.re)
            } else {
                format!("({})", mag)
            };
            let body = if mono.is_empty() {
                coeff_text
            } else if c.is_real() && mag.re.is_one() {
                mono
            } else {
                format!("{coeff_text}*{mono}")
            };
            match (idx, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_default())
    }
}

/// `base` for a single variable, `base1, base2, ...` otherwise.
pub fn default_names(base: &str, vars: usize) -> Vec<String> {
    if vars == 1 {
        vec![base.to_string()]
    } else {
        (1..=vars).map(|i| format!("{base}{i}")).collect()
    }
}

/// Integer linear form `c . t` in the series variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm(pub Vec<i64>);

impl LinearForm {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

/// Bernoulli numbers `B_0 ..= B_{k_max}` (with `B_1 = -1/2`).
pub fn bernoulli_numbers(k_max: u32) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(k_max as usize + 1);
    b.push(BigRational::one());
    for k in 1..=k_max {
        let mut acc = BigRational::zero();
        for (i, bi) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(k + 1, i as u32)) * bi;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(k + 1)));
    }
    b
}

/// All exponent vectors of length `n` and total degree at most `cap`,
/// ordered by total degree.
pub fn exponents_up_to(n: usize, cap: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..=cap {
        out.extend(exponents_of_degree(n, d));
    }
    out
}

/// All exponent vectors of length `n` with total degree exactly `d`, in
/// descending lexicographic order.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// `k! = prod k_i!`.
pub fn multi_factorial(k: &[u32]) -> BigInt {
    k.iter().map(|&ki| factorial(ki)).product()
}

/// Power series in `t_vars` variables, coefficients polynomials in `x_vars`
/// variables, exact for total degree `<= cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSeries {
    t_vars: usize,
    x_vars: usize,
    cap: u32,
    terms: BTreeMap<Exponent, MultiPoly>,
}

impl CoeffSeries {
    pub fn zero(t_vars: usize, x_vars: usize, cap: u32) -> Self {
        Self { t_vars, x_vars, cap, terms: BTreeMap::new() }
    }

    pub fn one(t_vars: usize, x_vars: usize, cap: u32) -> Self {
        let mut s = Self::zero(t_vars, x_vars, cap);
        s.add_term(vec![0; t_vars], MultiPoly::one(x_vars));
        s
    }

    pub fn t_vars(&self) -> usize {
        self.t_vars
    }

    pub fn x_vars(&self) -> usize {
        self.x_vars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: Exponent, p: MultiPoly) {
        assert_eq!(exp.len(), self.t_vars);
        if exp.iter().sum::<u32>() > self.cap || p.is_zero() {
            return;
        }
        let p = p.lift(self.x_vars);
        let sum = match self.terms.get(&exp) {
            Some(old) => old.add(&p),
            None => p,
        };
        if sum.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, sum);
        }
    }

    /// Raw coefficient of `t^exp`.
    pub fn raw_coefficient(&self, exp: &[u32]) -> MultiPoly {
        self.terms.get(exp).cloned().unwrap_or_else(|| MultiPoly::zero(self.x_vars))
    }

    pub fn constant_term(&self) -> MultiPoly {
        self.raw_coefficient(&vec![0; self.t_vars])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let x_vars = self.check_shape(other)?;
        let mut out = Self::zero(self.t_vars, x_vars, self.cap);
        for (e, p) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e.clone(), p.lift(x_vars));
        }
        Ok(out)
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        let mut out = Self::zero(self.t_vars, self.x_vars, self.cap);
        for (e, p) in &self.terms {
            out.add_term(e.clone(), p.scale(k));
        }
        out
    }

    fn check_shape(&self, other: &Self) -> Result<usize> {
        if self.t_vars != other.t_vars || self.cap != other.cap {
            return Err(Error::SeriesShape(format!(
                "(t_vars {}, cap {}) vs (t_vars {}, cap {})",
                self.t_vars, self.cap, other.t_vars, other.cap
            )));
        }
        match (self.x_vars, other.x_vars) {
            (a, b) if a == b => Ok(a),
            (0, b) if self.all_constant() => Ok(b),
            (a, 0) if other.all_constant() => Ok(a),
            (a, b) => Err(Error::SeriesShape(format!("x_vars {a} vs {b}"))),
        }
    }

    fn all_constant(&self) -> bool {
        self.terms.values().all(MultiPoly::is_constant)
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let x_vars = self.check_shape(other)?;
        let mut out = Self::zero(self.t_vars, x_vars, self.cap);
        for (ea, pa) in &self.terms {
            let da: u32 = ea.iter().sum();
            let pa = pa.lift(x_vars);
            for (eb, pb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da + db > self.cap {
                    continue;
                }
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, pa.mul(&pb.lift(x_vars)));
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be a nonzero constant.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.is_constant() || c0.is_zero() {
            return Err(Error::SeriesShape("constant term must be a nonzero constant".into()));
        }
        let inv_c0 = c0.constant_term().inv()?;
        let mut out = Self::zero(self.t_vars, self.x_vars, self.cap);
        let mut known: BTreeMap<Exponent, MultiPoly> = BTreeMap::new();
        for e in exponents_up_to(self.t_vars, self.cap) {
            let g = if e.iter().all(|&k| k == 0) {
                MultiPoly::constant(self.x_vars, inv_c0.clone())
            } else {
                // g_e = -(1/c0) * sum_{0 < e' <= e} f_{e'} g_{e - e'}
                let mut acc = MultiPoly::zero(self.x_vars);
                for (ef, pf) in &self.terms {
                    if ef.iter().all(|&k| k == 0) || ef.iter().zip(&e).any(|(a, b)| a > b) {
                        continue;
                    }
                    let rest: Exponent = e.iter().zip(ef).map(|(a, b)| a - b).collect();
                    if let Some(pg) = known.get(&rest) {
                        acc = acc.add(&pf.lift(self.x_vars).mul(pg));
                    }
                }
                acc.scale(&(-&inv_c0))
            };
            if !g.is_zero() {
                known.insert(e.clone(), g.clone());
                out.add_term(e, g);
            }
        }
        Ok(out)
    }

    /// `sum_k a_k u^k` for a series `u` without constant term.
    pub fn compose_univariate(coeffs: &[GaussianRational], u: &Self) -> Result<Self> {
        if !u.constant_term().is_zero() {
            return Err(Error::SeriesShape("inner series must vanish at t = 0".into()));
        }
        let mut acc = Self::zero(u.t_vars, u.x_vars, u.cap);
        for a in coeffs.iter().rev() {
            acc = acc.mul(u)?;
            let mut c = Self::zero(u.t_vars, u.x_vars, u.cap);
            c.add_term(vec![0; u.t_vars], MultiPoly::constant(u.x_vars, a.clone()));
            acc = acc.add(&c)?;
        }
        Ok(acc)
    }

    /// The series `c . t` with constant coefficients.
    pub fn linear_form(c: &LinearForm, cap: u32) -> Self {
        let n = c.0.len();
        let mut s = Self::zero(n, 0, cap);
        for (i, &ci) in c.0.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            s.add_term(e, MultiPoly::constant(0, GaussianRational::from_int(ci)));
        }
        s
    }
}

/// `u / (e^u - 1)` with `u = c . t`, truncated at `cap`.
pub fn linear_form_factor_series(c: &LinearForm, cap: u32) -> CoeffSeries {
    let coeffs: Vec<GaussianRational> = bernoulli_numbers(cap)
        .into_iter()
        .enumerate()
        .map(|(k, b)| GaussianRational::real(b / BigRational::from_integer(factorial(k as u32))))
        .collect();
    CoeffSeries::compose_univariate(&coeffs, &CoeffSeries::linear_form(c, cap))
        .expect("linear form has no constant term")
}

/// `e^{x . t}` in `x_count` variables, truncated at `cap`.
pub fn exp_linear_series(x_count: usize, cap: u32) -> CoeffSeries {
    let mut s = CoeffSeries::zero(x_count, x_count, cap);
    for e in exponents_up_to(x_count, cap) {
        let inv = BigRational::new(BigInt::one(), multi_factorial(&e));
        s.add_term(e.clone(), MultiPoly::monomial(e, GaussianRational::real(inv)));
    }
    s
}

/// `(1 - rho) / (e^{c . t} - rho)`, truncated at `cap`; `rho != 1`.
pub fn eulerian_factor_series(c: &LinearForm, rho: &BigRational, cap: u32) -> Result<CoeffSeries> {
    if rho.is_one() {
        return Err(Error::RhoEqualsOne);
    }
    let n = c.0.len();
    let exp_coeffs: Vec<GaussianRational> = (0..=cap)
        .map(|k| GaussianRational::real(BigRational::new(BigInt::one(), factorial(k))))
        .collect();
    let e = CoeffSeries::compose_univariate(&exp_coeffs, &CoeffSeries::linear_form(c, cap))?;
    let mut shifted = CoeffSeries::zero(n, 0, cap);
    shifted.add_term(vec![0; n], MultiPoly::constant(0, GaussianRational::real(-rho)));
    let denom = e.add(&shifted)?;
    let one_minus = GaussianRational::real(BigRational::one() - rho);
    Ok(denom.inverse()?.scale(&one_minus))
}

pub fn series_multiply(a: &CoeffSeries, b: &CoeffSeries) -> Result<CoeffSeries> {
    a.mul(b)
}

/// `k!` times the coefficient of `t^k`: the polynomial named by the
/// exponential generating-function convention.
pub fn extract_coefficient(series: &CoeffSeries, k: &[u32]) -> Result<MultiPoly> {
    if k.len() != series.t_vars() {
        return Err(Error::LengthMismatch { expected: series.t_vars(), found: k.len() });
    }
    let degree: u32 = k.iter().sum();
    if degree > series.cap() {
        return Err(Error::BeyondCap { degree, cap: series.cap() });
    }
    let raw = series.raw_coefficient(k);
    Ok(raw.scale_rational(&BigRational::from_integer(multi_factorial(k))))
}
