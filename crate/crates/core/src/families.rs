//! Bernoulli and Eulerian polynomials: regular, higher order, vector
//! argument, and vector argument of higher order.
//!
//! Each family is read off its exponential generating function,
//! `e^{x.t} * prod_j f(c_j . t)`, with `f(u) = u / (e^u - 1)` for Bernoulli
//! and `f(u) = (1 - rho) / (e^u - rho)` for Eulerian polynomials. The
//! returned polynomials already carry the `k!` normalization.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::numeric::BigRational;
use crate::series::{
    eulerian_factor_series, exp_linear_series, exponents_of_degree, extract_coefficient,
    linear_form_factor_series, CoeffSeries, Exponent, LinearForm, MultiPoly,
};

/// Parameters `d_1, ..., d_m` of a higher-order polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherOrderSpec {
    d: Vec<u64>,
}

impl HigherOrderSpec {
    pub fn new(d: Vec<u64>) -> Result<Self> {
        if d.contains(&0) {
            return Err(Error::InvalidParts);
        }
        Ok(Self { d })
    }

    pub fn params(&self) -> &[u64] {
        &self.d
    }

    pub fn order(&self) -> usize {
        self.d.len()
    }

    pub fn sigma(&self) -> u64 {
        self.d.iter().sum()
    }

    pub fn product(&self) -> u64 {
        self.d.iter().product()
    }

    fn as_matrix(&self) -> VectorHigherOrderSpec {
        VectorHigherOrderSpec { rows: 1, columns: self.d.iter().map(|&di| vec![di as i64]).collect() }
    }
}

/// An `l x m` nonnegative integer matrix given by its columns; `m` may be 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorHigherOrderSpec {
    rows: usize,
    columns: Vec<Vec<i64>>,
}

impl VectorHigherOrderSpec {
    pub fn from_columns(rows: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        if rows == 0 {
            return Err(Error::InvalidMatrix("at least one row required".into()));
        }
        for c in &columns {
            if c.len() != rows {
                return Err(Error::LengthMismatch { expected: rows, found: c.len() });
            }
            if c.iter().any(|&v| v < 0) {
                return Err(Error::InvalidMatrix("entries must be nonnegative".into()));
            }
        }
        Ok(Self { rows, columns })
    }

    /// Row-major construction.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let l = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidMatrix("rows have different lengths".into()));
        }
        let columns = (0..m).map(|i| rows.iter().map(|r| r[i]).collect()).collect();
        Self::from_columns(l, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// `sigma(D)`, the sum of the columns.
    pub fn sigma(&self) -> Vec<i64> {
        let mut s = vec![0; self.rows];
        for c in &self.columns {
            for (a, b) in s.iter_mut().zip(c) {
                *a += b;
            }
        }
        s
    }

    /// The matrix without its last column.
    pub fn drop_last(&self) -> Self {
        let mut columns = self.columns.clone();
        columns.pop();
        Self { rows: self.rows, columns }
    }

    /// The columns at `idx`, in that order.
    pub fn select(&self, idx: &[usize]) -> Self {
        Self { rows: self.rows, columns: idx.iter().map(|&i| self.columns[i].clone()).collect() }
    }
}

fn generating_series(x_vars: usize, cap: u32, factors: Vec<CoeffSeries>) -> Result<CoeffSeries> {
    let mut acc = CoeffSeries::one(x_vars, 0, cap);
    for f in factors {
        acc = acc.mul(&f)?;
    }
    acc.mul(&exp_linear_series(x_vars, cap))
}

fn bernoulli_factors(spec: &VectorHigherOrderSpec, cap: u32) -> Vec<CoeffSeries> {
    spec.columns.iter().map(|c| linear_form_factor_series(&LinearForm(c.clone()), cap)).collect()
}

fn eulerian_factors(spec: &VectorHigherOrderSpec, rho: &[BigRational], cap: u32) -> Result<Vec<CoeffSeries>> {
    if rho.len() != spec.cols() {
        return Err(Error::LengthMismatch { expected: spec.cols(), found: rho.len() });
    }
    spec.columns
        .iter()
        .zip(rho)
        .map(|(c, r)| eulerian_factor_series(&LinearForm(c.clone()), r, cap))
        .collect()
}

/// `B_k(x)`.
pub fn bernoulli_poly(k: u32) -> MultiPoly {
    higher_order_bernoulli(k, &HigherOrderSpec { d: vec![1] })
}

/// Frobenius' Eulerian polynomial `H_k(x, rho)`; `rho = -1` gives `E_k(x)`.
pub fn eulerian_poly(k: u32, rho: &BigRational) -> Result<MultiPoly> {
    higher_order_eulerian(k, core::slice::from_ref(rho), &HigherOrderSpec { d: vec![1] })
}

/// Norlund's `B^{(m)}_k(x | d)`. An empty spec yields `x^k`.
pub fn higher_order_bernoulli(k: u32, spec: &HigherOrderSpec) -> MultiPoly {
    vector_higher_order_bernoulli(&[k], &spec.as_matrix()).expect("scalar shapes agree")
}

/// Carlitz' `H^{(m)}_k(x, rho | d)`.
pub fn higher_order_eulerian(k: u32, rho: &[BigRational], spec: &HigherOrderSpec) -> Result<MultiPoly> {
    vector_higher_order_eulerian(&[k], rho, &spec.as_matrix())
}

/// Carlitz' vector Bernoulli polynomial `B_k(x)`, `l = k.len()` variables.
pub fn vector_bernoulli(k: &[u32]) -> Result<MultiPoly> {
    let l = k.len();
    if l == 0 {
        return Err(Error::LengthMismatch { expected: 1, found: 0 });
    }
    let spec = VectorHigherOrderSpec { rows: l, columns: vec![vec![1; l]] };
    vector_higher_order_bernoulli(k, &spec)
}

/// Vector Eulerian polynomial `H_k(x, rho)`.
pub fn vector_eulerian(k: &[u32], rho: &BigRational) -> Result<MultiPoly> {
    let l = k.len();
    if l == 0 {
        return Err(Error::LengthMismatch { expected: 1, found: 0 });
    }
    let spec = VectorHigherOrderSpec { rows: l, columns: vec![vec![1; l]] };
    vector_higher_order_eulerian(k, core::slice::from_ref(rho), &spec)
}

/// `B^{(l,m)}_n(x | D)`, a polynomial in `x_1 .. x_l`.
pub fn vector_higher_order_bernoulli(n: &[u32], spec: &VectorHigherOrderSpec) -> Result<MultiPoly> {
    if n.len() != spec.rows {
        return Err(Error::LengthMismatch { expected: spec.rows, found: n.len() });
    }
    let cap = n.iter().sum();
    let series = generating_series(spec.rows, cap, bernoulli_factors(spec, cap))?;
    extract_coefficient(&series, n)
}

/// `B^{(l,m)}_n(x | D)` for every `n` with `|n| = degree`, from one series.
pub fn vector_higher_order_bernoulli_all(
    degree: u32,
    spec: &VectorHigherOrderSpec,
) -> BTreeMap<Exponent, MultiPoly> {
    let series = generating_series(spec.rows, degree, bernoulli_factors(spec, degree))
        .expect("shapes agree by construction");
    exponents_of_degree(spec.rows, degree)
        .into_iter()
        .map(|n| {
            let p = extract_coefficient(&series, &n).expect("degree within cap");
            (n, p)
        })
        .collect()
}

/// `H^{(l,m)}_n(x, rho | D)`.
pub fn vector_higher_order_eulerian(
    n: &[u32],
    rho: &[BigRational],
    spec: &VectorHigherOrderSpec,
) -> Result<MultiPoly> {
    if n.len() != spec.rows {
        return Err(Error::LengthMismatch { expected: spec.rows, found: n.len() });
    }
    let cap = n.iter().sum();
    let series = generating_series(spec.rows, cap, eulerian_factors(spec, rho, cap)?)?;
    extract_coefficient(&series, n)
}
