//! Command layer of the `sylvester` binary: argument parsing helpers, JSON
//! formats and the three subcommands, kept free of process handling so they
//! can be tested directly.

pub mod json;
pub mod parse;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use sylvester_core::families::{
    bernoulli_poly, eulerian_poly, higher_order_bernoulli, higher_order_eulerian, vector_bernoulli, vector_eulerian,
    vector_higher_order_bernoulli, vector_higher_order_eulerian, HigherOrderSpec, VectorHigherOrderSpec,
};
use sylvester_core::numeric::BigRational;
use sylvester_core::scalar::{brute_count, count, partition_quasipoly, PartList};
use sylvester_core::series::{default_names, MultiPoly};
use sylvester_core::vector::{brute_vector_count, decompose, AlphaVector, EvalMode, MatrixSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] sylvester_core::Error),
}

/// Text for standard output and whether every oracle comparison matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub ok: bool,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Globals {
    pub json: bool,
    pub verify: bool,
    pub max_s: u64,
    pub grid: u64,
}

impl Default for Globals {
    fn default() -> Self {
        Self { json: false, verify: false, max_s: 50, grid: 12 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Bernoulli,
    Eulerian,
    HigherBernoulli,
    HigherEulerian,
    VectorBernoulli,
    VectorEulerian,
}

#[derive(Debug, Clone, Default)]
pub struct PolyArgs {
    pub k: Option<u32>,
    pub n: Option<String>,
    pub params: Option<String>,
    pub matrix: Option<String>,
    pub rho: Option<String>,
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    value.as_deref().ok_or_else(|| CliError::Usage(format!("{flag} is required")))
}

fn required_k(args: &PolyArgs) -> Result<u32, CliError> {
    args.k.ok_or_else(|| CliError::Usage("--k is required".into()))
}

fn higher_spec(args: &PolyArgs) -> Result<HigherOrderSpec, CliError> {
    let params = parse::int_list(required(&args.params, "--params")?)?;
    let params: Vec<u64> = params
        .into_iter()
        .map(|d| u64::try_from(d).map_err(|_| CliError::Usage(format!("parameter must be positive, got {d}"))))
        .collect::<Result<_, _>>()?;
    Ok(HigherOrderSpec::new(params)?)
}

/// One `rho` per factor; a single value is repeated.
fn rho_list(args: &PolyArgs, factors: usize) -> Result<Vec<BigRational>, CliError> {
    let rho = parse::rational_list(required(&args.rho, "--rho")?)?;
    match rho.len() {
        1 => Ok(vec![rho[0].clone(); factors]),
        _ => Ok(rho),
    }
}

pub fn cmd_poly(family: Family, args: &PolyArgs, globals: &Globals) -> Result<Report, CliError> {
    let poly: MultiPoly = match family {
        Family::Bernoulli => bernoulli_poly(required_k(args)?),
        Family::Eulerian => eulerian_poly(required_k(args)?, &rho_list(args, 1)?[0])?,
        Family::HigherBernoulli => higher_order_bernoulli(required_k(args)?, &higher_spec(args)?),
        Family::HigherEulerian => {
            let spec = higher_spec(args)?;
            higher_order_eulerian(required_k(args)?, &rho_list(args, spec.order())?, &spec)?
        }
        Family::VectorBernoulli | Family::VectorEulerian => {
            let n = parse::uint_list(required(&args.n, "--n")?)?;
            let spec = match &args.matrix {
                Some(m) => Some(VectorHigherOrderSpec::from_rows(&parse::matrix(m)?)?),
                None => None,
            };
            match (family, spec) {
                (Family::VectorBernoulli, Some(spec)) => vector_higher_order_bernoulli(&n, &spec)?,
                (Family::VectorBernoulli, None) => vector_bernoulli(&n)?,
                (_, Some(spec)) => vector_higher_order_eulerian(&n, &rho_list(args, spec.cols())?, &spec)?,
                (_, None) => vector_eulerian(&n, &rho_list(args, 1)?[0])?,
            }
        }
    };
    let text = if globals.json {
        json::to_string(&json::Poly::from(&poly))
    } else {
        poly.display_with(&default_names("x", poly.vars()))
    };
    Ok(Report::ok(text))
}

fn part_list(parts: &str) -> Result<PartList, CliError> {
    Ok(PartList::from_signed(&parse::int_list(parts)?)?)
}

fn mismatch_lines(checked: usize, mismatches: &[Vec<i64>], globals: &Globals) -> Report {
    let matched = checked - mismatches.len();
    let stdout = if globals.json {
        json::to_string(&json::Verification { checked, matched, mismatches: mismatches.to_vec() })
    } else if mismatches.is_empty() {
        format!("OK {matched}/{checked}")
    } else {
        let shown: Vec<String> = mismatches.iter().take(10).map(|s| format!("{s:?}")).collect();
        format!("MISMATCH {matched}/{checked}; first differences at {}", shown.join(" "))
    };
    Report { stdout, ok: mismatches.is_empty() }
}

pub fn cmd_scalar(parts: &str, s: Option<i64>, globals: &Globals) -> Result<Report, CliError> {
    let list = part_list(parts)?;
    if let Some(s) = s {
        let value = count(&list, s)?;
        let mut ok = true;
        if globals.verify {
            ok = BigInt::from(brute_count(s as u64, &list)) == value;
        }
        let stdout = if globals.json {
            json::to_string(&json::Count { s, count: value.to_string() })
        } else {
            value.to_string()
        };
        return Ok(Report { stdout, ok });
    }
    let w = partition_quasipoly(&list);
    if globals.verify {
        let mismatches: Vec<Vec<i64>> = (0..=globals.max_s)
            .filter(|&s| {
                let exact = BigRational::from_integer(BigInt::from(brute_count(s, &list)));
                w.evaluate(s as i64) != exact
            })
            .map(|s| vec![s as i64])
            .collect();
        return Ok(mismatch_lines(globals.max_s as usize + 1, &mismatches, globals));
    }
    Ok(Report::ok(json::to_string(&json::Quasi::from(&w))))
}

#[derive(Debug, Clone, Default)]
pub struct VectorArgs {
    pub matrix: String,
    pub s: Option<String>,
    pub alpha: Option<String>,
    pub limit: bool,
    pub direction: Option<String>,
}

fn grid(l: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=max).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

pub fn cmd_vector(args: &VectorArgs, globals: &Globals) -> Result<Report, CliError> {
    let d = MatrixSpec::from_rows(&parse::matrix(&args.matrix)?)?;
    let mode = if args.limit {
        EvalMode::Limit(args.direction.as_deref().map(parse::complex_list).transpose()?)
    } else if args.direction.is_some() {
        return Err(CliError::Usage("--direction requires --limit".into()));
    } else {
        EvalMode::Direct
    };
    let alpha = args.alpha.as_deref().map(parse::complex_list).transpose()?.map(AlphaVector);
    let s = args.s.as_deref().map(parse::int_list).transpose()?;
    let dec = decompose(&d);
    match (s, alpha) {
        (None, None) if !globals.verify => Ok(Report::ok(json::to_string(&json::Decomposition::from(&dec)))),
        (None, None) => Err(CliError::Usage("--verify needs --alpha".into())),
        (Some(_), None) => Err(CliError::Usage("--s needs --alpha".into())),
        (None, Some(alpha)) => {
            if !globals.verify {
                return Err(CliError::Usage("--alpha needs --s or --verify".into()));
            }
            let points = grid(d.rows(), globals.grid as i64);
            let mut mismatches = Vec::new();
            for s in &points {
                let value = dec.evaluate(s, &alpha, &mode)?;
                let brute = BigRational::from_integer(BigInt::from(brute_vector_count(s, &d)?));
                if value.re != brute {
                    mismatches.push(s.clone());
                }
            }
            Ok(mismatch_lines(points.len(), &mismatches, globals))
        }
        (Some(s), Some(alpha)) => {
            let value = dec.evaluate(&s, &alpha, &mode)?;
            let brute = if globals.verify {
                Some(brute_vector_count(&s, &d)?.to_u64().expect("enumerated counts fit in u64"))
            } else {
                None
            };
            let ok = brute.is_none_or(|b| value.re == BigRational::from_integer(b.into()));
            let stdout = if globals.json {
                json::to_string(&json::Evaluation {
                    s: s.clone(),
                    alpha: alpha.0.iter().map(Into::into).collect(),
                    value: (&value).into(),
                    brute,
                })
            } else {
                let mut text = format!("value {value}");
                if let Some(b) = brute {
                    text.push_str(&format!("\nbrute {b}"));
                }
                text
            };
            Ok(Report { stdout, ok })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vector(matrix: &str, s: Option<&str>, alpha: Option<&str>, limit: bool, g: Globals) -> Result<Report, CliError> {
        let args = VectorArgs {
            matrix: matrix.into(),
            s: s.map(Into::into),
            alpha: alpha.map(Into::into),
            limit,
            direction: None,
        };
        cmd_vector(&args, &g)
    }

    #[test]
    fn poly_examples() {
        let g = Globals::default();
        let args = PolyArgs { k: Some(2), ..Default::default() };
        assert_eq!(cmd_poly(Family::Bernoulli, &args, &g).unwrap().stdout, "x^2 - x + 1/6");
        let args = PolyArgs { n: Some("0,0".into()), matrix: Some("1,2;1,0".into()), ..Default::default() };
        assert_eq!(cmd_poly(Family::VectorBernoulli, &args, &g).unwrap().stdout, "1");
        let args = PolyArgs { k: Some(1), rho: Some("1".into()), ..Default::default() };
        let err = cmd_poly(Family::Eulerian, &args, &g).unwrap_err();
        assert_eq!(err.to_string(), "rho must not equal 1");
    }

    #[test]
    fn scalar_examples() {
        let g = Globals::default();
        assert_eq!(cmd_scalar("1,2,3", Some(6), &g).unwrap().stdout, "7");
        let v = Globals { verify: true, max_s: 100, ..g };
        assert_eq!(cmd_scalar("1,2,3", None, &v).unwrap(), Report { stdout: "OK 101/101".into(), ok: true });
        assert!(matches!(cmd_scalar("0,2", None, &g), Err(CliError::Core(_))));
        assert!(cmd_scalar("1,2", Some(-1), &g).is_err());
    }

    #[test]
    fn vector_examples() {
        let v = Globals { verify: true, ..Globals::default() };
        let r = run_vector("1,2,0;1,0,1", Some("3,5"), Some("1,0"), true, v).unwrap();
        assert_eq!(r, Report { stdout: "value 2\nbrute 2".into(), ok: true });
        let r = run_vector("1,2;1,0", Some("5,2"), Some("0,1"), true, Globals::default()).unwrap();
        assert_eq!(r.stdout, "value 0");
        let err = run_vector("1,1;2,2", None, None, false, Globals::default()).unwrap_err();
        assert!(err.to_string().starts_with("matrix rank 1 < rows 2"));
        let err = run_vector("1,2,0;1,0,1", Some("3,5"), Some("1,0"), false, Globals::default()).unwrap_err();
        assert!(err.to_string().contains("zero set"));
    }

    #[test]
    fn chamber_verification() {
        let v = Globals { verify: true, grid: 6, ..Globals::default() };
        let r = run_vector("1,2;1,0", None, Some("0,1"), true, v).unwrap();
        assert!(!r.ok);
        assert!(r.stdout.starts_with("MISMATCH 40/49"));
    }
}
