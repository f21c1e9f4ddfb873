//! Exact rational scalars and the numeric substrate built on them:
//! admissible random points, univariate interpolation and determinants.

mod det;
mod interp;
mod sample;

pub use det::{det_bareiss, det_exact, det_laplace};
pub use interp::{eval_poly, interpolate_univariate};
pub use sample::{sample_point, sample_point_in_range, Constraints, SamplePoint, DEFAULT_RANGE, MAX_REJECTIONS};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator, so `==` is exact equality.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q`. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Integer power with negative exponents allowed. `x` must be nonzero
/// when `n < 0`.
pub fn powi(x: &Scalar, n: i32) -> Scalar {
    if n == 0 {
        return Scalar::one();
    }
    Pow::pow(x, n)
}

pub fn inv(x: &Scalar) -> Result<Scalar> {
    if x.is_zero() {
        return Err(Error::SingularDenominator("inverse of zero".into()));
    }
    Ok(x.recip())
}

/// Checked division; `what` names the denominator in the error.
pub fn div(num: &Scalar, den: &Scalar, what: &str) -> Result<Scalar> {
    if den.is_zero() {
        return Err(Error::SingularDenominator(what.to_string()));
    }
    Ok(num / den)
}

/// Canonical text form `p/q` (integers render as `p/1`).
pub fn fmt_scalar(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn fmt_scalars(xs: &[Scalar]) -> String {
    let parts: Vec<String> = xs.iter().map(fmt_scalar).collect();
    format!("[{}]", parts.join(","))
}

/// Parses `p/q` or `p` (optional sign on the numerator or denominator).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("malformed fraction '{text}'"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::InvalidParameter(format!("zero denominator in '{text}'")));
    }
    Ok(Scalar::new(p, q))
}

/// Comma-separated list of fractions.
pub fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_scalar).collect()
}

pub fn product<I>(factors: I) -> Scalar
where
    I: IntoIterator<Item = Scalar>,
{
    factors.into_iter().fold(Scalar::one(), |acc, f| acc * f)
}
