//! Canonical form of a quasipolynomial as a table of polynomials indexed by
//! residue classes of `s`.
//!
//! A sum of terms `poly(s) * Psi_j(s - shift)` is periodic in its
//! coefficients with period `lcm(j)` per coordinate. Reducing every term to
//! one polynomial per residue class, then shrinking the period as far as the
//! table allows, gives a form in which two quasipolynomials are equal exactly
//! when their tables are structurally equal.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::numeric::{factorize, lcm_u64, GaussianRational, VectorCirculator};
use crate::series::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTable {
    vars: usize,
    periods: Vec<u64>,
    classes: BTreeMap<Vec<u64>, MultiPoly>,
}

/// One term `poly(s) * Psi_j(s - shift)`.
pub struct TermRef<'a> {
    pub j: &'a [u64],
    pub shift: &'a [i64],
    pub poly: &'a MultiPoly,
}

fn residues(periods: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &p in periods {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for prefix in &out {
            for a in 0..p {
                let mut v = prefix.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

impl ResidueTable {
    /// Build the minimal table for a sum of terms in `vars` variables.
    pub fn from_terms<'a, I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = TermRef<'a>>,
    {
        let terms: Vec<TermRef<'a>> = terms.into_iter().collect();
        let mut periods = vec![1u64; vars];
        for t in &terms {
            for (p, &jk) in periods.iter_mut().zip(t.j) {
                *p = lcm_u64(*p, jk);
            }
        }
        let circulators: Vec<VectorCirculator> =
            terms.iter().map(|t| VectorCirculator::new(t.j).expect("periods are positive")).collect();
        let mut classes = BTreeMap::new();
        for a in residues(&periods) {
            let mut acc = MultiPoly::zero(vars);
            for (t, c) in terms.iter().zip(&circulators) {
                let arg: Vec<i64> = a.iter().zip(t.shift).map(|(&ak, &sk)| ak as i64 - sk).collect();
                let psi = c.eval(&arg);
                if psi != 0 {
                    acc = acc.add(&t.poly.scale(&GaussianRational::from_int(psi)));
                }
            }
            if !acc.is_zero() {
                classes.insert(a, acc);
            }
        }
        let mut table = Self { vars, periods, classes };
        table.minimize();
        table
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    /// The polynomial valid on the residue class of `s`.
    pub fn class_of(&self, s: &[i64]) -> MultiPoly {
        let a: Vec<u64> = s.iter().zip(&self.periods).map(|(&sk, &p)| sk.rem_euclid(p as i64) as u64).collect();
        self.classes.get(&a).cloned().unwrap_or_else(|| MultiPoly::zero(self.vars))
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Vec<u64>, &MultiPoly)> {
        self.classes.iter()
    }

    pub fn eval(&self, s: &[i64]) -> GaussianRational {
        self.class_of(s).eval_int(s)
    }

    fn get(&self, a: &[u64]) -> Option<&MultiPoly> {
        self.classes.get(a)
    }

    fn minimize(&mut self) {
        if self.classes.is_empty() {
            self.periods = vec![1; self.vars];
            return;
        }
        for k in 0..self.vars {
            loop {
                let p = self.periods[k];
                let primes: Vec<u64> = factorize(p as i64).expect("period >= 1").factors.iter().map(|f| f.0).collect();
                let mut reduced = false;
                for q in primes {
                    let smaller = p / q;
                    let all = residues(&self.periods);
                    let ok = all.iter().all(|a| {
                        let mut b = a.clone();
                        b[k] %= smaller;
                        self.get(a) == self.get(&b)
                    });
                    if ok {
                        self.periods[k] = smaller;
                        self.classes.retain(|a, _| a[k] < smaller);
                        reduced = true;
                        break;
                    }
                }
                if !reduced {
                    break;
                }
            }
        }
    }
}
