//! Domain-wall partition function with a reflecting boundary,
//! Z_M = W_{M,M}(z|w|1,…,M), in closed determinant form.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::ModelParams;
use crate::scalarfield::{det_exact, div, powi, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainWallInput {
    pub params: ModelParams,
    pub z: Vec<Scalar>,
    pub w: Vec<Scalar>,
}

impl DomainWallInput {
    pub fn new(params: ModelParams, z: Vec<Scalar>, w: Vec<Scalar>) -> Result<Self> {
        if z.is_empty() || z.len() != w.len() {
            return Err(Error::DimensionMismatch(format!(
                "domain wall needs M >= 1 spectral parameters and inhomogeneities, got {} and {}",
                z.len(),
                w.len()
            )));
        }
        if z.iter().chain(&w).any(Zero::is_zero) {
            return Err(Error::SingularDenominator("zero spectral parameter or inhomogeneity".into()));
        }
        Ok(DomainWallInput { params, z, w })
    }

    pub fn size(&self) -> usize {
        self.z.len()
    }
}

/// (a²+a⁻² − z⁻²w − z²w⁻¹)(a²+a⁻² − z⁻²w⁻¹ − z²w)
fn quadratic(params: &ModelParams, z: &Scalar, w: &Scalar) -> Scalar {
    let c = params.a_sum();
    let z2 = z * z;
    let (z2inv, winv) = (z2.recip(), w.recip());
    (&c - &z2inv * w - &z2 * &winv) * (&c - &z2inv * &winv - &z2 * w)
}

/// Π_{i<j} (−z_i⁻¹z_j + z_i z_j⁻¹)(z_i⁻¹z_j⁻¹ − z_i z_j)
fn spectral_vandermonde(z: &[Scalar]) -> Scalar {
    let mut v = Scalar::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let (zi, zj) = (&z[i], &z[j]);
            v *= (zi / zj - zj / zi) * ((zi * zj).recip() - zi * zj);
        }
    }
    v
}

/// Everything in front of the determinant except the Π q_ij block.
fn outer_prefactor(input: &DomainWallInput) -> Result<Scalar> {
    let (a, b) = (input.params.a(), input.params.b());
    let m = input.size();
    let a2 = a * a;
    let mut num = powi(&input.params.a_diff(), m as i32);
    for (z, w) in input.z.iter().zip(&input.w) {
        let z2 = z * z;
        num *= powi(w, m as i32) * (b / w - b.recip()) * (&a2 * &z2 - (&a2 * &z2).recip());
    }
    let mut den = spectral_vandermonde(&input.z);
    for i in 0..m {
        for j in i + 1..m {
            let (wi, wj) = (&input.w[i], &input.w[j]);
            den *= (wi.recip() - wj.recip()) * (wi * wj - Scalar::one());
        }
    }
    div(&num, &den, "Vandermonde-type product (coinciding z or w)")
}

/// Z_M from the inhomogeneous determinant formula.
///
/// Row i of the determinant is multiplied through by Π_j q_ij, which
/// absorbs the matching numerator product: entries become
/// Π_{k≠j} q_ik and no quadratic factor is ever inverted. The value is
/// the same rational function as [`domain_wall_det_displayed`] and stays
/// finite where an individual q_ij vanishes.
pub fn domain_wall_det(input: &DomainWallInput) -> Result<Scalar> {
    let pre = outer_prefactor(input)?;
    let m = input.size();
    let q: Vec<Vec<Scalar>> =
        input.z.iter().map(|z| input.w.iter().map(|w| quadratic(&input.params, z, w)).collect()).collect();
    let matrix: Vec<Vec<Scalar>> = q
        .iter()
        .map(|row| {
            (0..m)
                .map(|j| row.iter().enumerate().filter(|&(k, _)| k != j).fold(Scalar::one(), |acc, (_, x)| acc * x))
                .collect()
        })
        .collect();
    Ok(pre * det_exact(&matrix)?)
}

/// Z_M evaluated literally as displayed: prefactor · Π_{i,j} q_ij ·
/// det(1/q_ij). Fails wherever some q_ij vanishes.
pub fn domain_wall_det_displayed(input: &DomainWallInput) -> Result<Scalar> {
    let pre = outer_prefactor(input)?;
    let mut numerator = Scalar::one();
    let mut matrix = Vec::with_capacity(input.size());
    for z in &input.z {
        let mut row = Vec::with_capacity(input.size());
        for w in &input.w {
            let q = quadratic(&input.params, z, w);
            row.push(div(&Scalar::one(), &q, "quadratic matrix-entry denominator")?);
            numerator *= q;
        }
        matrix.push(row);
    }
    Ok(pre * numerator * det_exact(&matrix)?)
}

/// Z_M(z|1,…,1) from the homogeneous closed form.
pub fn domain_wall_det_homogeneous(params: &ModelParams, z: &[Scalar]) -> Result<Scalar> {
    let m = z.len();
    if m == 0 {
        return Err(Error::DimensionMismatch("domain wall needs M >= 1".into()));
    }
    let (a, b) = (params.a(), params.b());
    let a2 = a * a;
    let one = Scalar::one();
    let c = params.a_sum();

    let mut num = powi(&a2, m as i32) * powi(&(b - b.recip()), m as i32);
    let den = spectral_vandermonde(z);
    let mut matrix = Vec::with_capacity(m);
    for (i, zi) in z.iter().enumerate() {
        if zi.is_zero() {
            return Err(Error::SingularDenominator(format!("z_{} = 0", i + 1)));
        }
        let z2 = zi * zi;
        let z2inv = z2.recip();
        let (left, right) = (&a2 - &z2, &one - &a2 * &z2);
        if left.is_zero() || right.is_zero() {
            return Err(Error::SingularDenominator(format!("z_{}^2 = a^(+-2)", i + 1)));
        }
        num *= div(&(&a2 * &z2 - (&a2 * &z2).recip()), &(&one - &z2inv * &z2inv), "1 - z^-4")?;
        num *= powi(&(&c - &z2inv - &z2), 2 * m as i32);
        let base = &a2 * &z2;
        let row = (1..=m as i32)
            .map(|j| {
                let p = powi(&base, j - 1);
                &p / powi(&left, 2 * j) - &p / powi(&right, 2 * j)
            })
            .collect();
        matrix.push(row);
    }
    Ok(div(&num, &den, "Vandermonde-type product (coinciding z)")? * det_exact(&matrix)?)
}
