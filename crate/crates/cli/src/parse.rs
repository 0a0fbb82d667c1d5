//! Parsers for command-line values.

use num_bigint::BigInt;
use wugsnake_core::contfrac::CompanionSpec;
use wugsnake_core::exact::IntMatrix;
use wugsnake_core::json::matrix_from_json;
use wugsnake_core::Error;

pub fn ints(s: &str) -> Result<Vec<BigInt>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

pub fn small_ints(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

/// `a,b` as a pair.
pub fn pair(s: &str) -> Result<(BigInt, BigInt), Error> {
    match &ints(s)?[..] {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(Error::Parse(format!("expected two integers, got {s:?}"))),
    }
}

/// A JSON matrix such as `[[3,5],[7,12]]`.
pub fn matrix(s: &str) -> Result<IntMatrix, Error> {
    let v: serde_json::Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("matrix {s:?}: {e}")))?;
    matrix_from_json(&v)
}

/// `1,1,1;1,0,1*5`: companion coefficients separated by `;`, `*k` repeats.
pub fn companions(s: &str) -> Result<Vec<CompanionSpec>, Error> {
    let mut out = Vec::new();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (coeffs, times) = match part.split_once('*') {
            Some((c, k)) => (
                c,
                k.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad repeat in {part:?}")))?,
            ),
            None => (part, 1),
        };
        let spec = CompanionSpec::new(ints(coeffs)?)?;
        out.extend(std::iter::repeat_n(spec, times));
    }
    if out.is_empty() {
        return Err(Error::Parse("no companion matrices given".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(ints("1, 2,3").unwrap(), vec![1.into(), 2.into(), 3.into()]);
        assert!(ints("1,x").is_err());
        assert!(pair("1,2,3").is_err());
        assert_eq!(matrix("[[3,5],[7,12]]").unwrap().dim(), 2);
        assert!(matrix("[[3,5],[7]]").is_err());
    }

    #[test]
    fn companion_lists() {
        let c = companions("1,1,1;1,0,1*5").unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c[5].to_string(), "M_{1,0,1}");
        assert!(companions(" ; ").is_err());
        assert!(companions("1,1*x").is_err());
    }
}
