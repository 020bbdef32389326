//! Parsers for the literal arguments of the command line.

use std::str::FromStr;

use sylvester_core::numeric::{BigRational, GaussianRational};

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn items(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

pub fn int_list(text: &str) -> Result<Vec<i64>, CliError> {
    items(text).map(|s| s.parse::<i64>().map_err(|_| usage(format!("not an integer: {s:?}")))).collect()
}

pub fn uint_list(text: &str) -> Result<Vec<u32>, CliError> {
    items(text).map(|s| s.parse::<u32>().map_err(|_| usage(format!("not a nonnegative integer: {s:?}")))).collect()
}

/// Rows separated by `;`, entries by `,`.
pub fn matrix(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let rows: Vec<Vec<i64>> = text.split(';').map(int_list).collect::<Result<_, _>>()?;
    if rows.iter().any(Vec::is_empty) {
        return Err(usage(format!("empty row in matrix {text:?}")));
    }
    Ok(rows)
}

/// `p`, `p/q` or a decimal-free signed integer ratio.
pub fn rational(text: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(text.trim()).map_err(|_| usage(format!("not a rational number: {text:?}")))
}

pub fn rational_list(text: &str) -> Result<Vec<BigRational>, CliError> {
    items(text).map(rational).collect()
}

/// `re`, `im i`, `re+im i` or `re-im i`; a bare `i` stands for `1i`.
pub fn complex(text: &str) -> Result<GaussianRational, CliError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || usage(format!("not a complex number: {text:?}"));
    let Some(body) = t.strip_suffix('i') else {
        return Ok(GaussianRational::real(rational(&t)?));
    };
    let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
    let (re, im) = match split {
        Some(k) if !body[..k].ends_with('/') => (&body[..k], &body[k..]),
        _ => ("", body),
    };
    let im = match im {
        "" | "+" => BigRational::from_integer(1.into()),
        "-" => BigRational::from_integer((-1).into()),
        other => rational(other.strip_prefix('+').unwrap_or(other)).map_err(|_| bad())?,
    };
    let re = if re.is_empty() { BigRational::from_integer(0.into()) } else { rational(re).map_err(|_| bad())? };
    Ok(GaussianRational::new(re, im))
}

pub fn complex_list(text: &str) -> Result<Vec<GaussianRational>, CliError> {
    items(text).map(complex).collect()
}
