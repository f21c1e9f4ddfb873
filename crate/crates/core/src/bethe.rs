//! Coordinate Bethe ansatz form of the wavefunction.
//!
//! Momenta are carried multiplicatively as X = e^{iK}, so negating a
//! momentum is inverting X and everything stays rational.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{ModelParams, OccupationConfig};
use crate::scalarfield::{div, fmt_scalar, fmt_scalars, powi, Scalar};
use crate::symfunc::{all_permutations, symmetric_function, SymFuncInput};
use crate::verify::{CheckContext, VerificationReport};

/// Open XXZ parametrization: momenta X_ℓ, anisotropy Δ, boundary p′ and
/// the chain length M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetheParams {
    momenta: Vec<Scalar>,
    delta: Scalar,
    pprime: Scalar,
    sites: usize,
}

impl BetheParams {
    pub fn new(momenta: Vec<Scalar>, delta: Scalar, pprime: Scalar, sites: usize) -> Result<Self> {
        if let Some(l) = momenta.iter().position(Zero::is_zero) {
            return Err(Error::InvalidParameter(format!("momentum X_{} is zero", l + 1)));
        }
        for j in 0..momenta.len() {
            for k in j + 1..momenta.len() {
                if momenta[j] == momenta[k] || (&momenta[j] * &momenta[k]).is_one() {
                    return Err(Error::InvalidParameter(format!("X_{} = X_{}^(+-1)", j + 1, k + 1)));
                }
            }
        }
        Ok(BetheParams { momenta, delta, pprime, sites })
    }

    /// Δ and p′ of the given model with explicit momenta.
    pub fn from_model(params: &ModelParams, momenta: Vec<Scalar>, sites: usize) -> Result<Self> {
        Self::new(momenta, anisotropy(params), boundary_parameter(params), sites)
    }

    pub fn momenta(&self) -> &[Scalar] {
        &self.momenta
    }

    pub fn delta(&self) -> &Scalar {
        &self.delta
    }

    pub fn pprime(&self) -> &Scalar {
        &self.pprime
    }

    pub fn sites(&self) -> usize {
        self.sites
    }
}

/// Δ = −(a²+a⁻²)/2
pub fn anisotropy(params: &ModelParams) -> Scalar {
    -params.a_sum() / Scalar::from_integer(2.into())
}

/// p′ = −(b+b⁻¹)(a²−a⁻²) / (2(b−b⁻¹))
pub fn boundary_parameter(params: &ModelParams) -> Scalar {
    let b = params.b();
    let two = Scalar::from_integer(2.into());
    -(b + b.recip()) * params.a_diff() / (two * (b - b.recip()))
}

/// X = (az − a⁻¹z⁻¹)/(az⁻¹ − a⁻¹z)
pub fn momentum(params: &ModelParams, z: &Scalar) -> Result<Scalar> {
    let a = params.a();
    if z.is_zero() {
        return Err(Error::SingularDenominator("z = 0".into()));
    }
    let den = a / z - z / a;
    div(&(a * z - (a * z).recip()), &den, "az^-1 - a^-1 z (z^2 = a^2)")
}

/// Momenta, Δ and p′ for spectral parameters z on an M-site chain.
pub fn momenta_from_spectral(params: &ModelParams, z: &[Scalar], sites: usize) -> Result<BetheParams> {
    let momenta = z.iter().map(|z| momentum(params, z)).collect::<Result<Vec<_>>>()?;
    BetheParams::from_model(params, momenta, sites)
}

/// f_{M,N}(K|x): sum over permutations and negations of the momenta.
pub fn eval_f(bp: &BetheParams, x: &OccupationConfig) -> Result<Scalar> {
    if x.sites() != bp.sites {
        return Err(Error::DimensionMismatch(format!("configuration on {} sites, chain of {}", x.sites(), bp.sites)));
    }
    let n = bp.momenta.len();
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!("{} positions, {} momenta", x.len(), n)));
    }
    let one = Scalar::one();
    let two_delta = &bp.delta + &bp.delta;
    let shift = &bp.pprime - &bp.delta;
    let signed: Vec<[Scalar; 2]> = bp.momenta.iter().map(|x| [x.clone(), x.recip()]).collect();

    let mut total = Scalar::zero();
    for perm in all_permutations(n) {
        let parity = permutation_parity(&perm);
        for signs in 0..1u64 << n {
            let y: Vec<&Scalar> = perm.iter().map(|&i| &signed[i][(signs >> i & 1) as usize]).collect();
            let mut term = Scalar::one();
            for j in 0..n {
                for k in j + 1..n {
                    term *= (&one - &two_delta * y[j] + y[j] / y[k]) * (&one - &two_delta * y[k] + y[j] * y[k]) / y[j];
                }
            }
            for (k, yk) in y.iter().enumerate() {
                term *= powi(yk, -(x.positions()[k] as i32)) * (&one + &shift * *yk);
            }
            if (parity + signs.count_ones() as usize) % 2 == 1 {
                total -= term;
            } else {
                total += term;
            }
        }
    }
    Ok(total)
}

pub(crate) fn permutation_parity(perm: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

/// Factor relating F(z|1,…,1|x) to f: everything except f itself.
pub fn coordinate_prefactor(params: &ModelParams, z: &[Scalar], sites: usize) -> Result<Scalar> {
    let a2 = params.a() * params.a();
    let b = params.b();
    let c = params.a_sum();
    let ad2 = params.a_diff() * params.a_diff();
    let n = z.len();
    let sym: Vec<Scalar> = z.iter().map(|z| z * z + (z * z).recip()).collect();

    let mut num = powi(&(b - b.recip()), n as i32);
    let mut den = Scalar::one();
    for j in 0..n {
        for k in j + 1..n {
            num *= (&c - &sym[j]) * (&c - &sym[k]);
            den *= &ad2 * (&sym[k] - &sym[j]);
        }
    }
    for (zj, sj) in z.iter().zip(&sym) {
        let z2 = zj * zj;
        num *= (&a2 * &z2).recip() - &a2 * &z2;
        num *= powi(&(&c - sj), sites as i32);
        den *= &z2 - z2.recip();
    }
    div(&num, &den, "z_j^2 + z_j^-2 coincide or z^4 = 1")
}

/// F(z|1,…,1|x) against the prefactor times f at the same point. A
/// point where two z_j² + z_j⁻² coincide is rejected as an error.
pub fn check_coordinate_relation(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &[Scalar],
    x: &OccupationConfig,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let m = x.sites();
    let lhs = symmetric_function(&SymFuncInput::new(params.clone(), z.to_vec(), vec![Scalar::one(); m], x.clone())?)?;
    let prefactor = coordinate_prefactor(params, z, m)?;
    let bp = momenta_from_spectral(params, z, m)?;
    let rhs = prefactor * eval_f(&bp, x)?;
    let summary =
        format!("a={} b={} z={} x={:?}", fmt_scalar(params.a()), fmt_scalar(params.b()), fmt_scalars(z), x.positions());
    Ok(ctx.report(
        "bethe.coordinate_relation",
        "homogeneous symmetric function equals the coordinate Bethe wavefunction times an explicit prefactor",
        summary,
        lhs,
        rhs,
        started,
    ))
}

/// (ba⁻¹z⁻¹−b⁻¹az)/(az⁻¹−a⁻¹z) and (b−b⁻¹)(1+(p′−Δ)X)/(a²−a⁻²).
pub fn boundary_identity(params: &ModelParams, z: &Scalar) -> Result<(Scalar, Scalar)> {
    let (a, b) = (params.a(), params.b());
    let x = momentum(params, z)?;
    let lhs = div(&(b / (a * z) - a * z / b), &(a / z - z / a), "az^-1 - a^-1 z")?;
    let shift = boundary_parameter(params) - anisotropy(params);
    let rhs = (b - b.recip()) * (Scalar::one() + shift * x) / params.a_diff();
    Ok((lhs, rhs))
}

/// a²z_jz_k − a⁻²z_j⁻¹z_k⁻¹ and its factorization through X_j, X_k.
pub fn pair_sum_identity(params: &ModelParams, zj: &Scalar, zk: &Scalar) -> Result<(Scalar, Scalar)> {
    let a = params.a();
    let a2 = a * a;
    let (xj, xk) = (momentum(params, zj)?, momentum(params, zk)?);
    let two_delta = anisotropy(params) * Scalar::from_integer(2.into());
    let lhs = &a2 * zj * zk - (&a2 * zj * zk).recip();
    let rhs =
        (a * zk - (a * zk).recip()) * (a / zj - zj / a) * (Scalar::one() - two_delta * &xj + div(&xj, &xk, "X_k")?)
            / params.a_diff();
    Ok((lhs, rhs))
}

/// a²z_j⁻¹z_k − a⁻²z_jz_k⁻¹ and its factorization through X_j, X_k.
pub fn pair_difference_identity(params: &ModelParams, zj: &Scalar, zk: &Scalar) -> Result<(Scalar, Scalar)> {
    let a = params.a();
    let a2 = a * a;
    let (xj, xk) = (momentum(params, zj)?, momentum(params, zk)?);
    let two_delta = anisotropy(params) * Scalar::from_integer(2.into());
    let lhs = &a2 * zk / zj - zj / (&a2 * zk);
    let rhs = (a / zk - zk / a) * (a * zj - (a * zj).recip()) * (Scalar::one() - two_delta * &xk + &xj * &xk)
        / params.a_diff();
    Ok((lhs, div(&rhs, &xj, "X_j")?))
}
