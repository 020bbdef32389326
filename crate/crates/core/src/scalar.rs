//! Restricted partition function `W(s, d)` as a sum of Sylvester waves.
//!
//! The wave of period `j` is a superposition of the polynomial part of the
//! `j`-modified part list, shifted by `r . d` over the non-divisible parts
//! and multiplied by the prime radical circulator `Psi_j`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{higher_order_bernoulli, HigherOrderSpec};
use crate::numeric::{divisors, factorial, BigRational, Circulator, GaussianRational};
use crate::quasi::{ResidueTable, TermRef};
use crate::series::MultiPoly;

/// A nonempty list of positive parts, repeats allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartList(Vec<u64>);

impl PartList {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParts);
        }
        Ok(Self(parts))
    }

    /// Accepts signed input so that zero and negative parts are reported
    /// rather than wrapped.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&d| d <= 0) {
            return Err(Error::InvalidParts);
        }
        Self::new(parts.iter().map(|&d| d as u64).collect())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sigma(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }

    /// The list without its last part, `None` when a single part remains.
    pub fn drop_last(&self) -> Option<Self> {
        if self.0.len() < 2 {
            return None;
        }
        Some(Self(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Union of the divisor sets of all parts.
    pub fn periods(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.0.iter().flat_map(|&d| divisors(d)).collect();
        set.into_iter().collect()
    }
}

/// One term `poly(s) * Psi_j(s - shift)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTerm {
    pub j: u64,
    pub shift: i64,
    pub poly: MultiPoly,
}

/// Scalar quasipolynomial, terms sorted by `(j, shift)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuasiPoly1D {
    pub terms: Vec<QuasiTerm>,
}

impl QuasiPoly1D {
    /// Exact value at any integer `s`, negative allowed.
    pub fn evaluate(&self, s: i64) -> BigRational {
        let mut acc = BigRational::zero();
        let mut cache: BTreeMap<u64, Circulator> = BTreeMap::new();
        for t in &self.terms {
            let c = cache.entry(t.j).or_insert_with(|| Circulator::new(t.j as i64).expect("j >= 1"));
            let psi = c.eval(s - t.shift);
            if psi != 0 {
                acc += t.poly.eval_int_real(&[s]) * BigRational::from_integer(BigInt::from(psi));
            }
        }
        acc
    }

    pub fn canonical(&self) -> ResidueTable {
        let js: Vec<[u64; 1]> = self.terms.iter().map(|t| [t.j]).collect();
        let shifts: Vec<[i64; 1]> = self.terms.iter().map(|t| [t.shift]).collect();
        ResidueTable::from_terms(
            1,
            self.terms
                .iter()
                .enumerate()
                .map(|(i, t)| TermRef { j: &js[i], shift: &shifts[i], poly: &t.poly }),
        )
    }
}

pub fn evaluate_quasipoly(q: &QuasiPoly1D, s: i64) -> BigRational {
    q.evaluate(s)
}

/// Number of nonnegative solutions of `d . x = s`, by dynamic programming.
pub fn brute_count(s: u64, parts: &PartList) -> BigUint {
    let n = s as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for &d in parts.parts() {
        let d = d as usize;
        for v in d..=n {
            let prev = ways[v - d].clone();
            ways[v] += prev;
        }
    }
    ways.swap_remove(n)
}

/// The `j`-modified part list and its split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JModified {
    /// Divisible parts first, then `j` times each non-divisible part.
    pub modified: PartList,
    /// Number of parts divisible by `j`.
    pub omega: usize,
    /// The non-divisible parts, unscaled.
    pub nondivisible: Vec<u64>,
}

pub fn j_modified(parts: &PartList, j: u64) -> JModified {
    let (div, nondiv): (Vec<u64>, Vec<u64>) = parts.parts().iter().partition(|&&d| d % j == 0);
    let omega = div.len();
    let mut modified = div;
    modified.extend(nondiv.iter().map(|&d| d * j));
    JModified { modified: PartList(modified), omega, nondivisible: nondiv }
}

/// Polynomial part `W_1(s, d) = B^{(m)}_{m-1}(s + sigma | d) / ((m-1)! pi(d))`.
pub fn poly_part(parts: &PartList) -> MultiPoly {
    let m = parts.len() as u32;
    let spec = HigherOrderSpec::new(parts.parts().to_vec()).expect("parts are positive");
    let b = higher_order_bernoulli(m - 1, &spec);
    let denom = BigRational::from_integer(factorial(m - 1) * BigInt::from(parts.product()));
    b.shift_int(&[parts.sigma() as i64]).scale_rational(&(BigRational::one() / denom))
}

/// Multiplicities of `r . d` for `r` in `[0, j)^len(d)`.
fn shift_distribution(nondiv: &[u64], j: u64) -> BTreeMap<i64, u64> {
    let mut dist = BTreeMap::new();
    dist.insert(0i64, 1u64);
    for &d in nondiv {
        let mut next = BTreeMap::new();
        for (&s, &c) in &dist {
            for r in 0..j {
                *next.entry(s + (r * d) as i64).or_insert(0) += c;
            }
        }
        dist = next;
    }
    dist
}

/// Terms of the Sylvester wave of period `j`. A wave that vanishes
/// identically comes back with no terms.
pub fn sylvester_wave(j: u64, parts: &PartList) -> Vec<QuasiTerm> {
    assert!(j >= 1, "period must be positive");
    let jm = j_modified(parts, j);
    let base = poly_part(&jm.modified);
    let mut terms: Vec<QuasiTerm> = shift_distribution(&jm.nondivisible, j)
        .into_iter()
        .map(|(shift, count)| QuasiTerm {
            j,
            shift,
            poly: base.shift_int(&[-shift]).scale(&GaussianRational::from_int(count as i64)),
        })
        .collect();
    terms.retain(|t| !t.poly.is_zero());
    if j > 1 && (QuasiPoly1D { terms: terms.clone() }).canonical().is_zero() {
        terms.clear();
    }
    terms
}

/// `W(s, d)` as the sum of the Sylvester waves over all periods.
pub fn partition_quasipoly(parts: &PartList) -> QuasiPoly1D {
    let mut terms: Vec<QuasiTerm> = parts.periods().into_iter().flat_map(|j| sylvester_wave(j, parts)).collect();
    terms.sort_by_key(|t| (t.j, t.shift));
    QuasiPoly1D { terms }
}

/// `W(s, d)` for `s >= 0`.
pub fn count(parts: &PartList, s: i64) -> Result<BigInt> {
    if s < 0 {
        return Err(Error::NegativeArgument(s));
    }
    let v = partition_quasipoly(parts).evaluate(s);
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}
