#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use sylvester_core::families::{
    bernoulli_poly, eulerian_poly, higher_order_bernoulli, higher_order_eulerian, vector_bernoulli,
    vector_higher_order_bernoulli, vector_higher_order_eulerian, HigherOrderSpec, VectorHigherOrderSpec,
};
use sylvester_core::numeric::{binomial, factorial, GaussianRational};
use sylvester_core::series::{exponents_up_to, multi_factorial, MultiPoly};

pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `a x + b` in one variable.
fn affine(a: BigRational, b: BigRational) -> MultiPoly {
    MultiPoly::var(1, 0).scale_rational(&a).add(&MultiPoly::constant(1, GaussianRational::real(b)))
}

fn spec(d: &[u64]) -> HigherOrderSpec {
    HigherOrderSpec::new(d.to_vec()).unwrap()
}

/// All `r` with `0 <= r_i < p_i`.
fn boxes(p: &[u64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &pi in p {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..pi as i64).map(move |r| {
                    let mut v = v.clone();
                    v.push(r);
                    v
                })
            })
            .collect();
    }
    out
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn params() -> impl Strategy<Value = Vec<u64>> {
    vec(1u64..=5, 1..=4)
}

fn matrix(rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    vec(vec(0i64..=5, rows), 1..=max_cols)
        .prop_map(|cols| cols.into_iter().map(|mut c| {
            if c.iter().all(|&v| v == 0) {
                c[0] = 1;
            }
            c
        }).collect())
}

fn matrix_any_rows(max_cols: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=3).prop_flat_map(move |l| (Just(l), matrix(l, max_cols)))
}

fn index(l: usize, max_total: u32) -> impl Strategy<Value = Vec<u32>> {
    vec(0u32..=max_total, l).prop_filter("bounded total degree", move |k| k.iter().sum::<u32>() <= max_total)
}

pub fn recursion(d: &[u64], k: u32) -> Result<(), TestCaseError> {
    let dm = *d.last().unwrap();
    let full = higher_order_bernoulli(k, &spec(d));
    let lhs = full.shift_int(&[dm as i64]).sub(&full);
    let rhs = higher_order_bernoulli(k - 1, &spec(&d[..d.len() - 1])).scale_rational(&int(k as i64 * dm as i64));
    ensure(lhs == rhs, "recursion")
}

/// `B(x | d) = (-1)^k B(sigma - x | d)`.
pub fn symmetry(d: &[u64], k: u32) -> Result<(), TestCaseError> {
    let s = spec(d);
    let b = higher_order_bernoulli(k, &s);
    let mirrored = b.compose(&[affine(int(-1), int(s.sigma() as i64))]);
    let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
    ensure(b == mirrored.scale_rational(&sign), "symmetry")
}

/// `B_k(x | D) = (-1)^{|k|} B_k(sigma(D) - x | D)`.
pub fn vector_symmetry(l: usize, cols: &[Vec<i64>], k: &[u32]) -> Result<(), TestCaseError> {
    let s = VectorHigherOrderSpec::from_columns(l, cols.to_vec()).unwrap();
    let b = vector_higher_order_bernoulli(k, &s).unwrap();
    let subs: Vec<MultiPoly> = s
        .sigma()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            MultiPoly::var(l, i).neg().add(&MultiPoly::constant(l, GaussianRational::from_int(v)))
        })
        .collect();
    let sign = if k.iter().sum::<u32>() % 2 == 0 { int(1) } else { int(-1) };
    ensure(b == b.compose(&subs).scale_rational(&sign), "vector symmetry")
}

pub fn binomial_formula(d1: &[u64], d2: &[u64], n: u32) -> Result<(), TestCaseError> {
    let x = [MultiPoly::var(2, 0)];
    let y = [MultiPoly::var(2, 1)];
    let mut lhs = MultiPoly::zero(2);
    for k in 0..=n {
        let a = higher_order_bernoulli(k, &spec(d1)).compose(&x);
        let b = higher_order_bernoulli(n - k, &spec(d2)).compose(&y);
        lhs = lhs.add(&a.mul(&b).scale_rational(&big(binomial(n, k))));
    }
    let joined: Vec<u64> = d1.iter().chain(d2).copied().collect();
    let rhs = higher_order_bernoulli(n, &spec(&joined)).compose(&[MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1))]);
    ensure(lhs == rhs, "binomial formula")
}

pub fn vector_binomial(l: usize, c1: &[Vec<i64>], c2: &[Vec<i64>], n: &[u32]) -> Result<(), TestCaseError> {
    let s1 = VectorHigherOrderSpec::from_columns(l, c1.to_vec()).unwrap();
    let s2 = VectorHigherOrderSpec::from_columns(l, c2.to_vec()).unwrap();
    let joined = VectorHigherOrderSpec::from_columns(l, c1.iter().chain(c2).cloned().collect()).unwrap();
    let xs: Vec<MultiPoly> = (0..l).map(|i| MultiPoly::var(2 * l, i)).collect();
    let ys: Vec<MultiPoly> = (0..l).map(|i| MultiPoly::var(2 * l, l + i)).collect();
    let sums: Vec<MultiPoly> = xs.iter().zip(&ys).map(|(a, b)| a.add(b)).collect();
    let mut lhs = MultiPoly::zero(2 * l);
    for k in exponents_up_to(l, n.iter().sum()) {
        if k.iter().zip(n).any(|(a, b)| a > b) {
            continue;
        }
        let rest: Vec<u32> = n.iter().zip(&k).map(|(a, b)| a - b).collect();
        let coeff: BigInt = n.iter().zip(&k).map(|(&a, &b)| binomial(a, b)).product();
        let a = vector_higher_order_bernoulli(&k, &s1).unwrap().compose(&xs);
        let b = vector_higher_order_bernoulli(&rest, &s2).unwrap().compose(&ys);
        lhs = lhs.add(&a.mul(&b).scale_rational(&big(coeff)));
    }
    let rhs = vector_higher_order_bernoulli(n, &joined).unwrap().compose(&sums);
    ensure(lhs == rhs, "vector binomial formula")
}

/// `sum_{r in [0,p)^m} B(x + (r.d)/p | d) = p^{m-k} B(p x | d)`; for `m = 1`
/// this is the single-sum form `sum_r B(x + r sigma / p | d)`.
pub fn multiplication_scaled(d: &[u64], k: u32, p: u64) -> Result<(), TestCaseError> {
    let s = spec(d);
    let b = higher_order_bernoulli(k, &s);
    let mut lhs = MultiPoly::zero(1);
    for r in boxes(&vec![p; d.len()]) {
        let dot: i64 = r.iter().zip(d).map(|(a, &b)| a * b as i64).sum();
        lhs = lhs.add(&b.shift(&[q(dot, p as i64)]));
    }
    let m = d.len() as i64;
    let factor = BigRational::from_integer(BigInt::from(p)).pow((m - k as i64) as i32);
    let rhs = b.scale_args(&int(p as i64)).scale_rational(&factor);
    ensure(lhs == rhs, "scaled multiplication formula")
}

/// `sum_{r_i < p_i} B(x + r.d | {p_i d_i}) = pi(p) B(x | d)`.
pub fn multiplication_dilated(d: &[u64], p: &[u64], k: u32) -> Result<(), TestCaseError> {
    let dilated: Vec<u64> = d.iter().zip(p).map(|(a, b)| a * b).collect();
    let b = higher_order_bernoulli(k, &spec(&dilated));
    let mut lhs = MultiPoly::zero(1);
    for r in boxes(p) {
        let dot: i64 = r.iter().zip(d).map(|(a, &b)| a * b as i64).sum();
        lhs = lhs.add(&b.shift_int(&[dot]));
    }
    let pi: u64 = p.iter().product();
    let rhs = higher_order_bernoulli(k, &spec(d)).scale_rational(&int(pi as i64));
    ensure(lhs == rhs, "dilated multiplication formula")
}

/// `sum_{r < p} B_k(x + r/p) = p^{1-|k|} B_k(p x)` with `r/p` added to every component.
pub fn vector_multiplication(k: &[u32], p: u64) -> Result<(), TestCaseError> {
    let l = k.len();
    let b = vector_bernoulli(k).unwrap();
    let mut lhs = MultiPoly::zero(l);
    for r in 0..p as i64 {
        lhs = lhs.add(&b.shift(&vec![q(r, p as i64); l]));
    }
    let total: i64 = k.iter().map(|&v| v as i64).sum();
    let factor = BigRational::from_integer(BigInt::from(p)).pow((1 - total) as i32);
    let rhs = b.scale_args(&int(p as i64)).scale_rational(&factor);
    ensure(lhs == rhs, "vector multiplication theorem")
}

/// `p^{k-1} sum_r rho^{-r} B_k(x + r/p) = k rho/(1-rho) H_{k-1}(p x, rho)` at `rho = -1`, `p = 2`.
pub fn bern_euler(k: u32) -> Result<(), TestCaseError> {
    let b = bernoulli_poly(k);
    let lhs = b.sub(&b.shift(&[q(1, 2)])).scale_rational(&q(1, 2).pow(1 - k as i32));
    let h = eulerian_poly(k - 1, &int(-1)).unwrap().scale_args(&int(2));
    let rhs = h.scale_rational(&q(-(k as i64), 2));
    ensure(lhs == rhs, "Bernoulli-Eulerian relation")
}

/// Higher-order relation at `rho_i = -1`, `p_i = 2`.
pub fn bern_euler_higher(d: &[u64], k: u32) -> Result<(), TestCaseError> {
    let m = d.len();
    let dilated: Vec<u64> = d.iter().map(|v| 2 * v).collect();
    let b = higher_order_bernoulli(k, &spec(&dilated));
    let mut lhs = MultiPoly::zero(1);
    for r in boxes(&vec![2; m]) {
        let dot: i64 = r.iter().zip(d).map(|(a, &b)| a * b as i64).sum();
        let sign = if r.iter().sum::<i64>() % 2 == 0 { 1 } else { -1 };
        lhs = lhs.add(&b.shift_int(&[dot]).scale_rational(&int(sign)));
    }
    let lhs = lhs.scale_rational(&q(1, 1 << m));
    let rhs = if (k as usize) < m {
        MultiPoly::zero(1)
    } else {
        let falling = big(factorial(k)) / big(factorial(k - m as u32));
        let prod: BigRational = d.iter().map(|&v| q(-(v as i64), 2)).product();
        higher_order_eulerian(k - m as u32, &vec![int(-1); m], &spec(d)).unwrap().scale_rational(&(falling * prod))
    };
    ensure(lhs == rhs, "higher-order Bernoulli-Eulerian relation")
}

/// Vector relation at `rho_j = -1`, `p_j = 2`, compared coefficient by
/// coefficient for `|k| <= cap`.
pub fn bern_euler_vector(l: usize, cols: &[Vec<i64>], cap: u32) -> Result<(), TestCaseError> {
    let m = cols.len();
    let dilated: Vec<Vec<i64>> = cols.iter().map(|c| c.iter().map(|v| 2 * v).collect()).collect();
    let bspec = VectorHigherOrderSpec::from_columns(l, dilated).unwrap();
    let hspec = VectorHigherOrderSpec::from_columns(l, cols.to_vec()).unwrap();
    let rho = vec![int(-1); m];
    // prod_j (c_j . t) as a polynomial in t
    let forms = cols.iter().fold(MultiPoly::one(l), |acc, c| {
        let f = c.iter().enumerate().fold(MultiPoly::zero(l), |f, (i, &v)| {
            f.add(&MultiPoly::var(l, i).scale_rational(&int(v)))
        });
        acc.mul(&f)
    });
    let scale = if m.is_multiple_of(2) { int(1) } else { int(-1) };
    for k in exponents_up_to(l, cap) {
        let b = vector_higher_order_bernoulli(&k, &bspec).unwrap();
        let mut lhs = MultiPoly::zero(l);
        for r in boxes(&vec![2; m]) {
            let mut shift = vec![0i64; l];
            for (rj, c) in r.iter().zip(cols) {
                for (s, v) in shift.iter_mut().zip(c) {
                    *s += rj * v;
                }
            }
            let sign = if r.iter().sum::<i64>() % 2 == 0 { 1 } else { -1 };
            lhs = lhs.add(&b.shift_int(&shift).scale_rational(&int(sign)));
        }
        let mut rhs = MultiPoly::zero(l);
        for (e, a) in forms.terms() {
            if e.iter().zip(&k).any(|(x, y)| x > y) {
                continue;
            }
            let rest: Vec<u32> = k.iter().zip(e).map(|(x, y)| x - y).collect();
            let h = vector_higher_order_eulerian(&rest, &rho, &hspec).unwrap();
            let w = big(multi_factorial(&k)) / big(multi_factorial(&rest));
            rhs = rhs.add(&h.scale(a).scale_rational(&(w * &scale)));
        }
        ensure(lhs == rhs, "vector Bernoulli-Eulerian relation")?;
    }
    Ok(())
}

/// Runs every identity on `cases` random instances and reports each outcome.
pub fn identity_suite(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    fn run<S: Strategy>(
        cases: u32,
        strategy: S,
        test: impl Fn(S::Value) -> Result<(), TestCaseError>,
    ) -> Result<(), String> {
        let config = Config { cases, failure_persistence: None, ..Config::default() };
        let mut runner = TestRunner::new_with_rng(config, proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ));
        runner.run(&strategy, test).map_err(|e| e.to_string())
    }
    vec![
        ("recursion", run(cases, (params(), 1u32..=5), |(d, k)| recursion(&d, k))),
        ("symmetry", run(cases, (params(), 0u32..=5), |(d, k)| symmetry(&d, k))),
        (
            "vector symmetry",
            run(
                cases,
                (1usize..=3).prop_flat_map(|l| (Just(l), matrix(l, 4), index(l, 5))),
                |(l, cols, k)| vector_symmetry(l, &cols, &k),
            ),
        ),
        (
            "binomial",
            run(cases, (vec(1u64..=5, 1..=2), vec(1u64..=5, 1..=2), 0u32..=5), |(a, b, n)| {
                binomial_formula(&a, &b, n)
            }),
        ),
        (
            "vector binomial",
            run(
                cases,
                (1usize..=3).prop_flat_map(|l| (Just(l), matrix(l, 2), matrix(l, 2), index(l, 4))),
                |(l, a, b, n)| vector_binomial(l, &a, &b, &n),
            ),
        ),
        (
            "scaled multiplication",
            run(cases, (vec(1u64..=5, 1..=3), 0u32..=5, 2u64..=3), |(d, k, p)| multiplication_scaled(&d, k, p)),
        ),
        (
            "dilated multiplication",
            run(
                cases,
                (1usize..=4).prop_flat_map(|m| (vec(1u64..=5, m), vec(2u64..=3, m), 0u32..=5)),
                |(d, p, k)| multiplication_dilated(&d, &p, k),
            ),
        ),
        (
            "vector multiplication",
            run(cases, ((1usize..=3).prop_flat_map(|l| index(l, 5)), 2u64..=3), |(k, p)| vector_multiplication(&k, p)),
        ),
        ("Bernoulli-Eulerian", run(cases, 1u32..=5, bern_euler)),
        (
            "higher-order Bernoulli-Eulerian",
            run(cases, (params(), 0u32..=5), |(d, k)| bern_euler_higher(&d, k)),
        ),
        (
            "vector Bernoulli-Eulerian",
            run(cases, matrix_any_rows(3), |(l, cols)| bern_euler_vector(l, &cols, cols.len() as u32 + 1)),
        ),
    ]
}

/// `W(s) = (-1)^{m-1} W(-s - sigma)` for the scalar quasipolynomial on `|s| <= bound`.
pub fn scalar_symmetry(parts: &[u64], bound: i64) -> Result<(), String> {
    use sylvester_core::scalar::{partition_quasipoly, PartList};
    let list = PartList::new(parts.to_vec()).map_err(|e| e.to_string())?;
    let w = partition_quasipoly(&list);
    let sigma = list.sigma() as i64;
    let sign = if parts.len() % 2 == 1 { int(1) } else { int(-1) };
    for s in -bound..=bound {
        if w.evaluate(s) != w.evaluate(-s - sigma) * &sign {
            return Err(format!("{parts:?} at s = {s}"));
        }
    }
    Ok(())
}

/// `W(s) - W(s - d_m) = W(s)` of the shorter list, on `|s| <= bound`.
pub fn scalar_recursion(parts: &[u64], bound: i64) -> Result<(), String> {
    use sylvester_core::scalar::{partition_quasipoly, PartList};
    let list = PartList::new(parts.to_vec()).map_err(|e| e.to_string())?;
    let shorter = list.drop_last().ok_or("need two parts")?;
    let (w, v) = (partition_quasipoly(&list), partition_quasipoly(&shorter));
    let dm = *parts.last().unwrap() as i64;
    for s in -bound..=bound {
        if w.evaluate(s) - w.evaluate(s - dm) != v.evaluate(s) {
            return Err(format!("{parts:?} at s = {s}"));
        }
    }
    Ok(())
}

/// `W(s, D) = (-1)^{m-l} W(-s - sigma(D), D)` for every partial wave and for
/// the mixture at a fixed generic `alpha`, on `0 <= s_k <= max`.
pub fn vector_symmetry_grid(d: &sylvester_core::vector::MatrixSpec, max: i64) -> Result<(), String> {
    use sylvester_core::vector::{decompose, AlphaVector, EvalMode};
    let dec = decompose(d);
    let l = d.rows();
    let sigma = d.sigma();
    let sign = if d.excess().is_multiple_of(2) { int(1) } else { int(-1) };
    let alpha = AlphaVector(
        (0..l).map(|k| GaussianRational::new(int(2 * k as i64 + 3), int(1 - k as i64))).collect(),
    );
    let tables: Vec<_> = dec.indices().iter().map(|n| dec.partial_wave_table(n)).collect();
    for s in boxes(&vec![max as u64 + 1; l]) {
        let mirror: Vec<i64> = s.iter().zip(&sigma).map(|(a, b)| -a - b).collect();
        for t in &tables {
            if t.eval(&s).scale(&sign) != t.eval(&mirror) {
                return Err(format!("partial wave at {s:?}"));
            }
        }
        let a = dec.evaluate(&s, &alpha, &EvalMode::Direct).map_err(|e| e.to_string())?;
        let b = dec.evaluate(&mirror, &alpha, &EvalMode::Direct).map_err(|e| e.to_string())?;
        if a.scale(&sign) != b {
            return Err(format!("mixture at {s:?}"));
        }
    }
    Ok(())
}
