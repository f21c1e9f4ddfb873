use std::collections::HashSet;

use num_traits::Zero;

use super::{fmt_scalar, Scalar};
use crate::error::{Error, Result};

/// Coefficients (lowest degree first, trailing zeros trimmed) of the
/// unique polynomial of degree < n through the n samples.
///
/// Newton divided differences, then expansion into the monomial basis.
/// The zero polynomial comes back as an empty vector.
pub fn interpolate_univariate(samples: &[(Scalar, Scalar)]) -> Result<Vec<Scalar>> {
    if samples.is_empty() {
        return Err(Error::NoSamples);
    }
    let mut seen = HashSet::with_capacity(samples.len());
    for (x, _) in samples {
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa(fmt_scalar(x)));
        }
    }

    let n = samples.len();
    let xs: Vec<&Scalar> = samples.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Scalar> = samples.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }

    // Horner in Newton form: p = dd[n-1]; p = p * (t - x_i) + dd[i].
    let mut coeffs = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![Scalar::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

pub fn eval_poly(coeffs: &[Scalar], t: &Scalar) -> Scalar {
    coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::{frac, int};

    fn pts(raw: &[(i64, i64)]) -> Vec<(Scalar, Scalar)> {
        raw.iter().map(|&(x, y)| (int(x), int(y))).collect()
    }

    #[test]
    fn linear_and_constant() {
        assert_eq!(interpolate_univariate(&pts(&[(1, 2), (2, 3), (3, 4)])).unwrap(), vec![int(1), int(1)]);
        assert_eq!(interpolate_univariate(&pts(&[(1, 5)])).unwrap(), vec![int(5)]);
    }

    #[test]
    fn cube_from_four_points() {
        // t^3 at 0, 1, 2, -1
        let c = interpolate_univariate(&pts(&[(0, 0), (1, 1), (2, 8), (-1, -1)])).unwrap();
        assert_eq!(c, vec![int(0), int(0), int(0), int(1)]);
    }

    #[test]
    fn zero_polynomial_is_empty() {
        assert!(interpolate_univariate(&pts(&[(1, 0), (2, 0)])).unwrap().is_empty());
    }

    #[test]
    fn rational_abscissae() {
        let poly = vec![frac(1, 3), int(-2), frac(5, 7)];
        let samples: Vec<_> = [frac(1, 2), frac(-4, 3), int(5)]
            .into_iter()
            .map(|x| {
                let y = eval_poly(&poly, &x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate_univariate(&samples).unwrap(), poly);
    }

    #[test]
    fn errors() {
        assert_eq!(interpolate_univariate(&[]), Err(Error::NoSamples));
        assert!(matches!(interpolate_univariate(&pts(&[(1, 1), (1, 2)])), Err(Error::DuplicateAbscissa(_))));
    }
}
