//! JSON forms of polynomials, quasipolynomials, decompositions and
//! evaluation reports. Rationals are strings `"p/q"` or `"p"`.

use serde::Serialize;
use sylvester_core::numeric::GaussianRational;
use sylvester_core::scalar::QuasiPoly1D;
use sylvester_core::series::MultiPoly;
use sylvester_core::vector::VectorWaveDecomposition;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    pub re: String,
    pub im: String,
}

impl From<&GaussianRational> for Complex {
    fn from(g: &GaussianRational) -> Self {
        Self { re: g.re.to_string(), im: g.im.to_string() }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub exp: Vec<u32>,
    pub coeff: Complex,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub vars: usize,
    pub terms: Vec<Term>,
}

impl From<&MultiPoly> for Poly {
    fn from(p: &MultiPoly) -> Self {
        let terms = p.terms().map(|(e, c)| Term { exp: e.clone(), coeff: c.into() }).collect();
        Self { vars: p.vars(), terms }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct QuasiTerm {
    pub j: u64,
    pub shift: i64,
    pub poly: Poly,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Quasi {
    pub terms: Vec<QuasiTerm>,
}

impl From<&QuasiPoly1D> for Quasi {
    fn from(q: &QuasiPoly1D) -> Self {
        let mut terms: Vec<QuasiTerm> =
            q.terms.iter().map(|t| QuasiTerm { j: t.j, shift: t.shift, poly: (&t.poly).into() }).collect();
        terms.sort_by_key(|t| (t.j, t.shift));
        Self { terms }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct WaveTerm {
    pub shift: Vec<i64>,
    pub weight: String,
    pub poly: Poly,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Wave {
    pub n: Vec<u32>,
    pub j: Vec<u64>,
    pub terms: Vec<WaveTerm>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub l: usize,
    pub m: usize,
    pub matrix: Vec<Vec<i64>>,
    pub waves: Vec<Wave>,
}

impl From<&VectorWaveDecomposition> for Decomposition {
    fn from(d: &VectorWaveDecomposition) -> Self {
        let waves = d
            .waves
            .iter()
            .map(|w| Wave {
                n: w.n.clone(),
                j: w.j.clone(),
                terms: w
                    .terms
                    .iter()
                    .map(|t| WaveTerm { shift: t.shift.clone(), weight: t.weight.to_string(), poly: (&t.poly).into() })
                    .collect(),
            })
            .collect();
        Self { l: d.matrix.rows(), m: d.matrix.cols(), matrix: d.matrix.to_rows(), waves }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub s: Vec<i64>,
    pub alpha: Vec<Complex>,
    pub value: Complex,
    pub brute: Option<u64>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Count {
    pub s: i64,
    pub count: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub checked: usize,
    pub matched: usize,
    pub mismatches: Vec<Vec<i64>>,
}


pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
