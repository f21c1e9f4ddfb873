//! Closed-form symmetric functions F_{M,N} and F̄_{M,N}: explicit sums
//! over permutations σ ∈ S_N and sign vectors τ ∈ {±1}^N.
//!
//! Each summand is a product of per-particle factors (which depend on the
//! position k, the variable σ(k) and its sign) and pairwise cross factors.
//! Both kinds are tabulated once per evaluation; the sum itself then costs
//! N + N(N−1)/2 multiplications per (σ, τ).

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{ModelParams, OccupationConfig};
use crate::scalarfield::{powi, Scalar};

/// Arguments of F_{M,N}(z|w|x) (or F̄ with x read as hole positions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncInput {
    pub params: ModelParams,
    pub z: Vec<Scalar>,
    pub w: Vec<Scalar>,
    pub x: OccupationConfig,
}

impl SymFuncInput {
    pub fn new(params: ModelParams, z: Vec<Scalar>, w: Vec<Scalar>, x: OccupationConfig) -> Result<Self> {
        let input = SymFuncInput { params, z, w, x };
        input.validate()?;
        Ok(input)
    }

    fn validate(&self) -> Result<()> {
        if self.x.sites() != self.w.len() {
            return Err(Error::DimensionMismatch(format!(
                "configuration on {} sites, {} inhomogeneities",
                self.x.sites(),
                self.w.len()
            )));
        }
        if self.x.len() != self.z.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} positions, {} spectral parameters",
                self.x.len(),
                self.z.len()
            )));
        }
        let one = Scalar::one();
        let z2: Vec<Scalar> = self.z.iter().map(|z| z * z).collect();
        for (j, s) in z2.iter().enumerate() {
            if s.is_zero() || s * s == one {
                return Err(Error::SingularDenominator(format!("z_{}^2 - z_{}^-2 = 0", j + 1, j + 1)));
            }
        }
        for j in 0..z2.len() {
            for k in j + 1..z2.len() {
                if z2[j] == z2[k] || &z2[j] * &z2[k] == one {
                    return Err(Error::SingularDenominator(format!(
                        "z_{} and z_{} coincide up to sign and inversion",
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    Primal,
    Dual,
}

/// F_{M,N}(z₁..z_N | w₁..w_M | x₁..x_N).
pub fn symmetric_function(input: &SymFuncInput) -> Result<Scalar> {
    evaluate(input, Variant::Primal)
}

/// F̄_{M,N}(z₁..z_N | w₁..w_M | x̄₁..x̄_N).
pub fn dual_symmetric_function(input: &SymFuncInput) -> Result<Scalar> {
    evaluate(input, Variant::Dual)
}

/// Number of (σ, τ) summands, N!·2^N.
pub fn summand_count(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << n
}

/// Advances `perm` to the next permutation in lexicographic order;
/// false once the last one has been passed.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).expect("successor exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    while next_permutation(&mut perm) {
        out.push(perm.clone());
    }
    out
}

struct Tables {
    /// single[k][i][s]: everything attached to position k carrying
    /// variable i with sign s (0 ⇒ τ = +1, 1 ⇒ τ = −1).
    single: Vec<Vec<[Scalar; 2]>>,
    /// cross[i][si][l][sl]: pair factor for variable i at the earlier
    /// position and variable l at the later one.
    cross: Vec<[Vec<[Scalar; 2]>; 2]>,
}

fn build_tables(input: &SymFuncInput, variant: Variant) -> Tables {
    let a = input.params.a();
    let b = input.params.b();
    let a2 = a * a;
    let a2inv = a2.recip();
    let n = input.z.len();
    let signed: Vec<[Scalar; 2]> = input.z.iter().map(|z| [z.clone(), z.recip()]).collect();

    let particle = |k: usize, u: &Scalar| -> Scalar {
        let uinv = u.recip();
        let xk = input.x.positions()[k];
        let mut f = (u * u - &uinv * &uinv).recip();
        match variant {
            Variant::Primal => {
                f *= b * &uinv / a - a * u / b;
                for (j, wj) in input.w.iter().enumerate() {
                    f *= a * &uinv - u * wj / a;
                    if j + 1 < xk {
                        f *= a * &uinv * wj - u / a;
                    } else if j + 1 > xk {
                        f *= a * u - &uinv * wj / a;
                    }
                }
            }
            Variant::Dual => {
                f *= b * a * u - (b * a * u).recip();
                for (j, wj) in input.w.iter().enumerate() {
                    f *= a * &uinv * wj - u / a;
                    if j + 1 < xk {
                        f *= a * &uinv - u * wj / a;
                    } else if j + 1 > xk {
                        f *= a * u * wj - &uinv / a;
                    }
                }
            }
        }
        f
    };

    let pair = |u: &Scalar, v: &Scalar| -> Scalar {
        let (uinv, vinv) = (u.recip(), v.recip());
        let num = (&a2 * u * v - &a2inv * &uinv * &vinv) * (&a2 * &uinv * v - &a2inv * u * &vinv);
        let den = (u * v - &uinv * &vinv) * (&uinv * v - u * &vinv);
        num / den
    };

    let single =
        (0..n).map(|k| (0..n).map(|i| [particle(k, &signed[i][0]), particle(k, &signed[i][1])]).collect()).collect();
    let cross = (0..n)
        .map(|i| {
            let row = |si: usize| -> Vec<[Scalar; 2]> {
                (0..n)
                    .map(|l| {
                        if l == i {
                            [Scalar::zero(), Scalar::zero()]
                        } else {
                            [pair(&signed[i][si], &signed[l][0]), pair(&signed[i][si], &signed[l][1])]
                        }
                    })
                    .collect()
            };
            [row(0), row(1)]
        })
        .collect();
    Tables { single, cross }
}

fn evaluate(input: &SymFuncInput, variant: Variant) -> Result<Scalar> {
    input.validate()?;
    let n = input.z.len();
    let a = input.params.a();
    let a2 = a * a;
    let a2inv = a2.recip();

    let mut prefactor = powi(&input.params.a_diff(), n as i32);
    for z in &input.z {
        let z2 = z * z;
        prefactor *= &a2inv * z2.recip() - &a2 * &z2;
    }

    let tables = build_tables(input, variant);
    let sum = all_permutations(n)
        .into_par_iter()
        .map(|perm| {
            let mut partial = Scalar::zero();
            for signs in 0..1u64 << n {
                let sign_of = |i: usize| (signs >> i & 1) as usize;
                let mut term = Scalar::one();
                for (k, &i) in perm.iter().enumerate() {
                    term *= &tables.single[k][i][sign_of(i)];
                }
                for j in 0..n {
                    let (i, si) = (perm[j], sign_of(perm[j]));
                    for &l in &perm[j + 1..] {
                        term *= &tables.cross[i][si][l][sign_of(l)];
                    }
                }
                partial += term;
            }
            partial
        })
        .reduce(Scalar::zero, |x, y| x + y);
    Ok(prefactor * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::{frac, int};

    fn input(z: Vec<Scalar>, w: Vec<Scalar>, x: Vec<usize>) -> SymFuncInput {
        let m = w.len();
        SymFuncInput::new(ModelParams::new(int(2), int(3)).unwrap(), z, w, OccupationConfig::new(m, x).unwrap())
            .unwrap()
    }

    #[test]
    fn anchor_value() {
        assert_eq!(symmetric_function(&input(vec![int(2)], vec![int(1)], vec![1])).unwrap(), frac(1275, 8));
    }

    #[test]
    fn zero_particles_gives_one() {
        let inp = input(vec![], vec![int(5), int(7)], vec![]);
        assert_eq!(symmetric_function(&inp).unwrap(), int(1));
        assert_eq!(dual_symmetric_function(&inp).unwrap(), int(1));
    }

    #[test]
    fn permutations_are_lexicographic_and_complete() {
        let perms = all_permutations(4);
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(summand_count(6), 46_080);
    }

    #[test]
    fn singular_inputs_rejected() {
        let params = ModelParams::new(int(2), int(3)).unwrap();
        let x = OccupationConfig::new(2, vec![1, 2]).unwrap();
        for z in [vec![int(1), int(3)], vec![int(3), int(-3)], vec![int(3), frac(1, 3)]] {
            assert!(matches!(
                SymFuncInput::new(params.clone(), z, vec![int(5), int(7)], x.clone()),
                Err(Error::SingularDenominator(_))
            ));
        }
    }
}
