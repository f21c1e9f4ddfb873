use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Largest size evaluated by cofactor expansion.
const LAPLACE_MAX: usize = 4;

fn check_square(matrix: &[Vec<Scalar>]) -> Result<usize> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("determinant of an empty matrix".into()));
    }
    for (row, entries) in matrix.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::NotSquare { rows: n, row, cols: entries.len() });
        }
    }
    Ok(n)
}

/// Exact determinant: cofactor expansion up to 4×4, fraction-free
/// Bareiss elimination above that. Singular matrices give zero.
pub fn det_exact(matrix: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = check_square(matrix)?;
    if n <= LAPLACE_MAX {
        det_laplace(matrix)
    } else {
        det_bareiss(matrix)
    }
}

/// Cofactor expansion along the first row. Exponential; meant for small
/// matrices and as a cross-check of [`det_bareiss`].
pub fn det_laplace(matrix: &[Vec<Scalar>]) -> Result<Scalar> {
    check_square(matrix)?;
    let cols: Vec<usize> = (0..matrix.len()).collect();
    Ok(laplace_minor(matrix, 0, &cols))
}

fn laplace_minor(matrix: &[Vec<Scalar>], row: usize, cols: &[usize]) -> Scalar {
    if cols.len() == 1 {
        return matrix[row][cols[0]].clone();
    }
    let mut total = Scalar::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&k| k != c));
        let term = entry * laplace_minor(matrix, row + 1, &rest);
        if pos % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Bareiss elimination on the integer matrix obtained by clearing each
/// row's denominators; the row scales are divided back out at the end.
pub fn det_bareiss(matrix: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = check_square(matrix)?;
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in matrix {
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        m.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
        scale *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Scalar::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }

    let mut det = m[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    debug_assert!(scale.is_positive());
    Ok(Scalar::new(det, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::{frac, int};

    fn hilbert(n: usize) -> Vec<Vec<Scalar>> {
        (1..=n).map(|i| (1..=n).map(|j| frac(1, (i + j - 1) as i64)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_exact(&[vec![frac(7, 2)]]).unwrap(), frac(7, 2));
        let m = vec![vec![int(1), int(2)], vec![int(3), int(4)]];
        assert_eq!(det_exact(&m).unwrap(), int(-2));
        assert_eq!(det_bareiss(&m).unwrap(), int(-2));
    }

    // 3x3 Hilbert matrix by cofactor expansion by hand:
    // 1*(1/15 - 1/16) - 1/2*(1/10 - 1/12) + 1/3*(1/8 - 1/9)
    //   = 1/240 - 1/120 + 1/216 = 1/2160.
    #[test]
    fn hilbert_three() {
        assert_eq!(det_exact(&hilbert(3)).unwrap(), frac(1, 2160));
        assert_eq!(det_bareiss(&hilbert(3)).unwrap(), frac(1, 2160));
    }

    #[test]
    fn hilbert_five_both_routes() {
        // known value 1/266716800000
        let h = hilbert(5);
        assert_eq!(det_bareiss(&h).unwrap(), det_laplace(&h).unwrap());
        assert_eq!(det_exact(&h).unwrap(), frac(1, 266_716_800_000));
    }

    #[test]
    fn needs_pivoting() {
        let m = vec![vec![int(0), int(1), int(2)], vec![int(1), int(0), int(3)], vec![int(4), int(-3), int(8)]];
        assert_eq!(det_bareiss(&m).unwrap(), det_laplace(&m).unwrap());
        assert_eq!(det_laplace(&m).unwrap(), int(-2));
    }

    #[test]
    fn singular_is_zero() {
        let m = vec![
            vec![int(1), int(2), int(3), int(4), int(5)],
            vec![int(2), int(4), int(6), int(8), int(10)],
            vec![int(0), int(1), int(0), int(1), int(0)],
            vec![int(3), int(1), int(4), int(1), int(5)],
            vec![int(9), int(2), int(6), int(5), int(3)],
        ];
        assert_eq!(det_exact(&m).unwrap(), int(0));
        let zero_col = vec![vec![int(0), int(1)], vec![int(0), int(2)]];
        assert_eq!(det_bareiss(&zero_col).unwrap(), int(0));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(det_exact(&[]).is_err());
        assert!(matches!(det_exact(&[vec![int(1), int(2)], vec![int(3)]]), Err(Error::NotSquare { .. })));
    }
}
