//! Vector partition function `W(s, D)`: the number of `x >= 0` with `D x = s`.
//!
//! The function is written as a mixture of partial waves,
//! `W(s, D) = sum_{|n| = m - l} C_n(alpha, D) W^n(s, D)`, where each partial
//! wave `W^n` is a sum over period vectors `j` of vector Bernoulli
//! polynomials of higher order for the `j`-modified matrix, multiplied by
//! vector circulators. The coefficients `C_n` depend on a direction `alpha`;
//! the direction selects the chamber in which the mixture equals the count.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{vector_higher_order_bernoulli, vector_higher_order_bernoulli_all, VectorHigherOrderSpec};
use crate::numeric::{binomial, divisors, gcd_u64, lcm_u64, BigRational, GaussianRational, VectorCirculator};
use crate::quasi::{ResidueTable, TermRef};
use crate::series::{exponents_of_degree, multi_factorial, Exponent, MultiPoly};

/// A validated nonnegative integer `l x m` matrix of full row rank with no
/// zero column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpec {
    rows: usize,
    columns: Vec<Vec<i64>>,
}

fn rank(columns: &[Vec<i64>], rows: usize) -> usize {
    // Gaussian elimination over the rationals on the row-major matrix.
    let m = columns.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|k| columns.iter().map(|c| BigRational::from_integer(BigInt::from(c[k]))).collect())
        .collect();
    let mut r = 0;
    for col in 0..m {
        let Some(pivot) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = &a[i][col] / &a[r][col];
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

impl MatrixSpec {
    /// Row-major input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let l = rows.len();
        if l == 0 {
            return Err(Error::InvalidMatrix("at least one row required".into()));
        }
        let m = rows[0].len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidMatrix("rows must be nonempty and of equal length".into()));
        }
        if rows.iter().flatten().any(|&v| v < 0) {
            return Err(Error::InvalidMatrix("entries must be nonnegative".into()));
        }
        let columns: Vec<Vec<i64>> = (0..m).map(|i| rows.iter().map(|r| r[i]).collect()).collect();
        if let Some(i) = columns.iter().position(|c| c.iter().all(|&v| v == 0)) {
            return Err(Error::ZeroColumn(i));
        }
        let r = rank(&columns, l);
        if r < l {
            return Err(Error::RankDeficient { rank: r, rows: l });
        }
        Ok(Self { rows: l, columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &[i64] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.columns[col][row]
    }

    /// Row-major copy.
    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|k| self.columns.iter().map(|c| c[k]).collect()).collect()
    }

    pub fn sigma(&self) -> Vec<i64> {
        let mut s = vec![0; self.rows];
        for c in &self.columns {
            for (a, b) in s.iter_mut().zip(c) {
                *a += b;
            }
        }
        s
    }

    /// `m - l`, the total degree of every partial-wave index `n`.
    pub fn excess(&self) -> u32 {
        (self.cols() - self.rows) as u32
    }

    /// The matrix without its last column, if it stays of full rank.
    pub fn drop_last(&self) -> Result<Self> {
        let rows = self.to_rows();
        let trimmed: Vec<Vec<i64>> = rows.iter().map(|r| r[..r.len() - 1].to_vec()).collect();
        Self::from_rows(&trimmed)
    }

    pub fn as_spec(&self) -> VectorHigherOrderSpec {
        VectorHigherOrderSpec::from_columns(self.rows, self.columns.clone()).expect("validated matrix")
    }
}

/// Nonnegative solutions of `D x = s`, counted by bounded enumeration.
pub fn brute_vector_count(s: &[i64], d: &MatrixSpec) -> Result<BigUint> {
    if s.len() != d.rows() {
        return Err(Error::LengthMismatch { expected: d.rows(), found: s.len() });
    }
    if let Some(&neg) = s.iter().find(|&&v| v < 0) {
        return Err(Error::NegativeArgument(neg));
    }
    fn rec(col: usize, rest: &mut [i64], d: &MatrixSpec) -> u64 {
        let c = d.column(col);
        if col + 1 == d.cols() {
            // the last column must take up the remainder exactly
            let (k, &ck) = c.iter().enumerate().find(|(_, &v)| v > 0).expect("no zero column");
            if rest[k] % ck != 0 {
                return 0;
            }
            let x = rest[k] / ck;
            return u64::from(rest.iter().zip(c).all(|(&r, &v)| r == x * v));
        }
        let bound = rest
            .iter()
            .zip(c)
            .filter(|(_, &v)| v > 0)
            .map(|(&r, &v)| r / v)
            .min()
            .expect("no zero column");
        let mut total = 0;
        for x in 0..=bound {
            for (r, &v) in rest.iter_mut().zip(c) {
                *r -= x * v;
            }
            total += rec(col + 1, rest, d);
            for (r, &v) in rest.iter_mut().zip(c) {
                *r += x * v;
            }
        }
        total
    }
    let mut rest = s.to_vec();
    Ok(BigUint::from(rec(0, &mut rest, d)))
}

/// All period vectors: the `l`-th Cartesian power of the divisors of the
/// nonzero entries, in lexicographic order.
pub fn enumerate_j(d: &MatrixSpec) -> Vec<Vec<u64>> {
    let set: BTreeSet<u64> = d.columns().iter().flatten().filter(|&&v| v > 0).flat_map(|&v| divisors(v as u64)).collect();
    let base: Vec<u64> = set.into_iter().collect();
    let mut out = vec![Vec::new()];
    for _ in 0..d.rows() {
        let mut next = Vec::with_capacity(out.len() * base.len());
        for prefix in &out {
            for &b in &base {
                let mut v: Vec<u64> = prefix.clone();
                v.push(b);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Column split for one period vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JClassification {
    pub j: Vec<u64>,
    /// Number of columns with `j_k | D_ki` for every row `k`.
    pub omega: usize,
    pub divisible_cols: Vec<usize>,
    pub nondivisible_cols: Vec<usize>,
    /// Period `p_i` of each non-divisible column, in `nondivisible_cols` order.
    pub periods: Vec<u64>,
}

impl JClassification {
    /// `pi(p)`, the product of the periods.
    pub fn period_product(&self) -> u64 {
        self.periods.iter().product()
    }
}

pub fn classify_columns(d: &MatrixSpec, j: &[u64]) -> Result<JClassification> {
    if j.len() != d.rows() {
        return Err(Error::LengthMismatch { expected: d.rows(), found: j.len() });
    }
    if let Some(&bad) = j.iter().find(|&&jk| jk == 0) {
        return Err(Error::NonPositive(bad as i64));
    }
    let mut divisible_cols = Vec::new();
    let mut nondivisible_cols = Vec::new();
    let mut periods = Vec::new();
    for (i, c) in d.columns().iter().enumerate() {
        // minimal p with j_k | p * D_ki for all k
        let p = c.iter().zip(j).fold(1u64, |acc, (&v, &jk)| lcm_u64(acc, jk / gcd_u64(jk, v as u64)));
        if p == 1 {
            divisible_cols.push(i);
        } else {
            nondivisible_cols.push(i);
            periods.push(p);
        }
    }
    Ok(JClassification { j: j.to_vec(), omega: divisible_cols.len(), divisible_cols, nondivisible_cols, periods })
}

/// Divisible columns first, then each non-divisible column times its period.
pub fn j_modified_matrix(d: &MatrixSpec, class: &JClassification) -> MatrixSpec {
    let mut columns: Vec<Vec<i64>> = class.divisible_cols.iter().map(|&i| d.column(i).to_vec()).collect();
    for (&i, &p) in class.nondivisible_cols.iter().zip(&class.periods) {
        columns.push(d.column(i).iter().map(|&v| v * p as i64).collect());
    }
    MatrixSpec { rows: d.rows(), columns }
}

/// `P_m(alpha, D) = prod_i (c_i . alpha)` as a polynomial in `alpha`.
pub fn homogeneous_poly(d: &MatrixSpec) -> MultiPoly {
    let l = d.rows();
    d.columns().iter().fold(MultiPoly::one(l), |acc, c| {
        let form = c.iter().enumerate().fold(MultiPoly::zero(l), |f, (k, &v)| {
            f.add(&MultiPoly::var(l, k).scale(&GaussianRational::from_int(v)))
        });
        acc.mul(&form)
    })
}

/// `alpha^{n+1}` as a monomial coefficient vector.
fn alpha_power(n: &[u32]) -> Exponent {
    n.iter().map(|&k| k + 1).collect()
}

/// A complex direction vector selecting a chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector(pub Vec<GaussianRational>);

impl AlphaVector {
    pub fn real(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| GaussianRational::from_int(x)).collect())
    }
}

/// `C_n(alpha, D) = alpha^{n+1} / (n! P_m(alpha, D))`.
pub fn coefficient_c(n: &[u32], alpha: &AlphaVector, d: &MatrixSpec) -> Result<GaussianRational> {
    check_alpha(alpha, d)?;
    check_degree(n, d)?;
    let p = homogeneous_poly(d).eval(&alpha.0);
    if p.is_zero() {
        return Err(Error::AlphaOnZeroSet);
    }
    let num = MultiPoly::monomial(alpha_power(n), GaussianRational::one()).eval(&alpha.0);
    let nf = GaussianRational::real(BigRational::from_integer(multi_factorial(n)));
    (num).checked_div(&(&nf * &p))
}

fn check_alpha(alpha: &AlphaVector, d: &MatrixSpec) -> Result<()> {
    if alpha.0.len() != d.rows() {
        return Err(Error::LengthMismatch { expected: d.rows(), found: alpha.0.len() });
    }
    Ok(())
}

fn check_degree(n: &[u32], d: &MatrixSpec) -> Result<()> {
    if n.len() != d.rows() {
        return Err(Error::LengthMismatch { expected: d.rows(), found: n.len() });
    }
    let found: u32 = n.iter().sum();
    if found != d.excess() {
        return Err(Error::WrongDegree { expected: d.excess(), found });
    }
    Ok(())
}

/// Bernoulli factor of the partial polynomial part, `B^{(l,m)}_n(s + sigma(D) | D)`.
pub fn partial_poly_part(n: &[u32], d: &MatrixSpec) -> Result<MultiPoly> {
    check_degree(n, d)?;
    let b = vector_higher_order_bernoulli(n, &d.as_spec())?;
    Ok(b.shift_int(&d.sigma()))
}

/// One term `weight * poly(s) * Psi_j(s - shift)` of a partial wave.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveTerm {
    pub shift: Vec<i64>,
    pub weight: BigRational,
    pub poly: MultiPoly,
}

/// Partial wave `W^n_j`; the full `W^n` is the sum over `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialWave {
    pub n: Vec<u32>,
    pub j: Vec<u64>,
    pub terms: Vec<WaveTerm>,
}

/// Multiplicities of `r . D_nondiv` over `r_i in [0, p_i)`.
fn shift_distribution(d: &MatrixSpec, class: &JClassification) -> BTreeMap<Vec<i64>, u64> {
    let mut dist = BTreeMap::new();
    dist.insert(vec![0i64; d.rows()], 1u64);
    for (&i, &p) in class.nondivisible_cols.iter().zip(&class.periods) {
        let c = d.column(i);
        let mut next = BTreeMap::new();
        for (s, &cnt) in &dist {
            for r in 0..p as i64 {
                let v: Vec<i64> = s.iter().zip(c).map(|(a, b)| a + r * b).collect();
                *next.entry(v).or_insert(0) += cnt;
            }
        }
        dist = next;
    }
    dist
}

fn wave_table(l: usize, j: &[u64], terms: &[WaveTerm]) -> ResidueTable {
    let scaled: Vec<MultiPoly> = terms.iter().map(|t| t.poly.scale_rational(&t.weight)).collect();
    ResidueTable::from_terms(
        l,
        terms.iter().zip(&scaled).map(|(t, p)| TermRef { j, shift: &t.shift, poly: p }),
    )
}

fn build_terms(
    d: &MatrixSpec,
    class: &JClassification,
    modified: &MatrixSpec,
    bernoulli: &MultiPoly,
) -> Vec<WaveTerm> {
    let inv_pi = BigRational::new(BigInt::one(), BigInt::from(class.period_product()));
    let sigma_j = modified.sigma();
    let mut terms: Vec<WaveTerm> = shift_distribution(d, class)
        .into_iter()
        .map(|(shift, count)| {
            let offset: Vec<i64> = sigma_j.iter().zip(&shift).map(|(a, b)| a - b).collect();
            WaveTerm {
                weight: &inv_pi * BigRational::from_integer(BigInt::from(count)),
                poly: bernoulli.shift_int(&offset),
                shift,
            }
        })
        .filter(|t| !t.poly.is_zero())
        .collect();
    if class.j.iter().any(|&jk| jk > 1) && wave_table(d.rows(), &class.j, &terms).is_zero() {
        terms.clear();
    }
    terms
}

/// Terms of the partial wave `W^n_j`: `B_n(s + sigma(D_j) - r.D | D_j) / pi(p)`
/// times `Psi_j(s - r.D)`, summed over `r`. Identically vanishing waves come
/// back empty.
pub fn partial_wave(n: &[u32], j: &[u64], d: &MatrixSpec) -> Result<Vec<WaveTerm>> {
    check_degree(n, d)?;
    let class = classify_columns(d, j)?;
    let modified = j_modified_matrix(d, &class);
    let b = vector_higher_order_bernoulli(n, &modified.as_spec())?;
    Ok(build_terms(d, &class, &modified, &b))
}

/// All partial waves of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorWaveDecomposition {
    pub matrix: MatrixSpec,
    /// Nonvanishing `(n, j)` waves sorted by `(n, j)`.
    pub waves: Vec<PartialWave>,
}

/// How `C_n(alpha)` is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum EvalMode {
    /// Plain substitution; `P_m(alpha, D) = 0` is an error.
    #[default]
    Direct,
    /// Limit along `alpha + eps * u` as `eps -> 0`; `u` defaults to all ones.
    Limit(Option<Vec<GaussianRational>>),
}

pub fn decompose(d: &MatrixSpec) -> VectorWaveDecomposition {
    let degree = d.excess();
    let mut waves = Vec::new();
    for j in enumerate_j(d) {
        let class = classify_columns(d, &j).expect("j from the divisor set");
        let modified = j_modified_matrix(d, &class);
        for (n, b) in vector_higher_order_bernoulli_all(degree, &modified.as_spec()) {
            let terms = build_terms(d, &class, &modified, &b);
            if !terms.is_empty() {
                waves.push(PartialWave { n, j: j.clone(), terms });
            }
        }
    }
    waves.sort_by(|a, b| (&a.n, &a.j).cmp(&(&b.n, &b.j)));
    VectorWaveDecomposition { matrix: d.clone(), waves }
}

impl VectorWaveDecomposition {
    /// Every `n` with `|n| = m - l`, whether or not a wave survived.
    pub fn indices(&self) -> Vec<Vec<u32>> {
        let mut v = exponents_of_degree(self.matrix.rows(), self.matrix.excess());
        v.sort();
        v
    }

    /// Distinct `n` among the stored waves.
    pub fn distinct_n(&self) -> usize {
        self.waves.iter().map(|w| &w.n).collect::<BTreeSet<_>>().len()
    }

    /// Canonical residue table of the full partial wave `W^n`.
    pub fn partial_wave_table(&self, n: &[u32]) -> ResidueTable {
        let l = self.matrix.rows();
        let mut polys = Vec::new();
        let mut meta = Vec::new();
        for w in self.waves.iter().filter(|w| w.n == n) {
            for t in &w.terms {
                polys.push(t.poly.scale_rational(&t.weight));
                meta.push((&w.j, &t.shift));
            }
        }
        ResidueTable::from_terms(
            l,
            meta.iter().zip(&polys).map(|((j, shift), p)| TermRef { j: j.as_slice(), shift: shift.as_slice(), poly: p }),
        )
    }

    /// `W^n(s)` for each `n`, in [`Self::indices`] order.
    pub fn partial_values(&self, s: &[i64]) -> Result<Vec<(Vec<u32>, BigRational)>> {
        if s.len() != self.matrix.rows() {
            return Err(Error::LengthMismatch { expected: self.matrix.rows(), found: s.len() });
        }
        let mut values: BTreeMap<Vec<u32>, BigRational> =
            self.indices().into_iter().map(|n| (n, BigRational::zero())).collect();
        for w in &self.waves {
            let circ = VectorCirculator::new(&w.j)?;
            let acc = values.get_mut(&w.n).expect("n from indices");
            for t in &w.terms {
                let arg: Vec<i64> = s.iter().zip(&t.shift).map(|(a, b)| a - b).collect();
                let psi = circ.eval(&arg);
                if psi != 0 {
                    *acc += t.poly.eval_int_real(s) * &t.weight * BigRational::from_integer(BigInt::from(psi));
                }
            }
        }
        Ok(values.into_iter().collect())
    }

    /// `sum_n C_n(alpha, D) W^n(s, D)`, exact.
    pub fn evaluate(&self, s: &[i64], alpha: &AlphaVector, mode: &EvalMode) -> Result<GaussianRational> {
        let d = &self.matrix;
        check_alpha(alpha, d)?;
        let partials = self.partial_values(s)?;
        let p = homogeneous_poly(d);
        match mode {
            EvalMode::Direct => {
                let pv = p.eval(&alpha.0);
                if pv.is_zero() {
                    return Err(Error::AlphaOnZeroSet);
                }
                let mut acc = GaussianRational::zero();
                for (n, w) in &partials {
                    let c = coefficient_c(n, alpha, d)?;
                    acc += &c.scale(w);
                }
                Ok(acc)
            }
            EvalMode::Limit(direction) => {
                let u = match direction {
                    Some(u) => {
                        if u.len() != d.rows() {
                            return Err(Error::LengthMismatch { expected: d.rows(), found: u.len() });
                        }
                        u.clone()
                    }
                    None => vec![GaussianRational::one(); d.rows()],
                };
                let line: Vec<MultiPoly> = alpha
                    .0
                    .iter()
                    .zip(&u)
                    .map(|(a, uk)| {
                        MultiPoly::constant(1, a.clone()).add(&MultiPoly::var(1, 0).scale(uk))
                    })
                    .collect();
                let denom = p.compose(&line);
                let mut numer = MultiPoly::zero(1);
                for (n, w) in &partials {
                    let inv_nf = BigRational::new(BigInt::one(), multi_factorial(n));
                    let mono = MultiPoly::monomial(alpha_power(n), GaussianRational::real(w * inv_nf));
                    numer = numer.add(&mono.compose(&line));
                }
                let order = (0..=d.cols() as u32)
                    .find(|&k| !denom.coeff(&[k]).is_zero())
                    .ok_or(Error::DegenerateDirection)?;
                if (0..order).any(|k| !numer.coeff(&[k]).is_zero()) {
                    return Err(Error::DivergentLimit);
                }
                numer.coeff(&[order]).checked_div(&denom.coeff(&[order]))
            }
        }
    }

    /// Real part of [`Self::evaluate`], the count candidate.
    pub fn real_part(&self, s: &[i64], alpha: &AlphaVector, mode: &EvalMode) -> Result<BigRational> {
        Ok(self.evaluate(s, alpha, mode)?.re)
    }
}

/// `C(m - 1, m - l)`, the number of partial waves.
pub fn partial_wave_count(d: &MatrixSpec) -> BigInt {
    binomial(d.cols() as u32 - 1, d.excess())
}
