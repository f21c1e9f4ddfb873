use bitflags::bitflags;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{fmt_scalar, fmt_scalars, frac, Scalar};
use crate::error::{Error, Result};

/// Default bound on sampled numerators and denominators.
pub const DEFAULT_RANGE: u32 = 9;

/// Rejections tolerated before [`sample_point`] gives up.
pub const MAX_REJECTIONS: u64 = 1_000_000;

bitflags! {
    /// Adjustments to the admissibility predicate of a [`SamplePoint`].
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct Constraints: u8 {
        /// Every inhomogeneity is 1; column distinctness is not required.
        const HOMOGENEOUS = 1 << 0;
        /// z_j² ≠ a² and z_j² ≠ a⁻².
        const AVOID_CROSSING = 1 << 1;
        /// Drop the quadratic determinant denominators coupling z and w.
        const SKIP_QUADRATIC = 1 << 2;
        /// Drop w_i ≠ w_j and w_i w_j ≠ 1.
        const SKIP_COLUMNS = 1 << 3;
    }
}

/// A rational parameter point (a, b, z, w) together with the seed that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePoint {
    pub a: Scalar,
    pub b: Scalar,
    pub z: Vec<Scalar>,
    pub w: Vec<Scalar>,
    pub seed: u64,
}

impl SamplePoint {
    /// First violated admissibility condition, if any.
    pub fn violation(&self, constraints: Constraints) -> Option<String> {
        let one = Scalar::one();
        let a2 = &self.a * &self.a;
        let a2inv = a2.recip();

        if self.a.is_zero() || self.b.is_zero() {
            return Some("a and b must be nonzero".into());
        }
        if let Some(j) = self.z.iter().position(Zero::is_zero) {
            return Some(format!("z_{} is zero", j + 1));
        }
        if let Some(j) = self.w.iter().position(Zero::is_zero) {
            return Some(format!("w_{} is zero", j + 1));
        }
        if &a2 * &a2 == one {
            return Some("a^4 = 1".into());
        }
        if &self.b * &self.b == one {
            return Some("b^2 = 1".into());
        }
        let z2: Vec<Scalar> = self.z.iter().map(|z| z * z).collect();
        for (j, s) in z2.iter().enumerate() {
            if s * s == one {
                return Some(format!("z_{}^4 = 1", j + 1));
            }
            if constraints.contains(Constraints::AVOID_CROSSING) && (*s == a2 || *s == a2inv) {
                return Some(format!("z_{}^2 = a^(+-2)", j + 1));
            }
        }
        for j in 0..z2.len() {
            for k in j + 1..z2.len() {
                if z2[j] == z2[k] {
                    return Some(format!("z_{} = +-z_{}", j + 1, k + 1));
                }
                if &z2[j] * &z2[k] == one {
                    return Some(format!("z_{} = +-1/z_{}", j + 1, k + 1));
                }
            }
        }

        let homogeneous = constraints.contains(Constraints::HOMOGENEOUS);
        if homogeneous {
            if let Some(j) = self.w.iter().position(|w| !w.is_one()) {
                return Some(format!("homogeneous point has w_{} != 1", j + 1));
            }
        }
        if !constraints.contains(Constraints::SKIP_QUADRATIC) {
            let cross = &a2 + &a2inv;
            for (i, s) in z2.iter().enumerate() {
                let sinv = s.recip();
                for (j, w) in self.w.iter().enumerate() {
                    let winv = w.recip();
                    if &cross - &sinv * w - s * &winv == Scalar::zero()
                        || &cross - &sinv * &winv - s * w == Scalar::zero()
                    {
                        return Some(format!("quadratic denominator vanishes at (z_{}, w_{})", i + 1, j + 1));
                    }
                }
            }
        }
        if !homogeneous && !constraints.contains(Constraints::SKIP_COLUMNS) {
            for i in 0..self.w.len() {
                for j in i + 1..self.w.len() {
                    if self.w[i] == self.w[j] {
                        return Some(format!("w_{} = w_{}", i + 1, j + 1));
                    }
                    if &self.w[i] * &self.w[j] == one {
                        return Some(format!("w_{} w_{} = 1", i + 1, j + 1));
                    }
                }
            }
        }
        None
    }

    pub fn is_admissible(&self, constraints: Constraints) -> bool {
        self.violation(constraints).is_none()
    }

    pub fn validate(&self, constraints: Constraints) -> Result<()> {
        match self.violation(constraints) {
            Some(msg) => Err(Error::InvalidParameter(format!("singular point: {msg}"))),
            None => Ok(()),
        }
    }

    /// Canonical one-line rendering used in reports.
    pub fn summary(&self) -> String {
        format!(
            "a={} b={} z={} w={}",
            fmt_scalar(&self.a),
            fmt_scalar(&self.b),
            fmt_scalars(&self.z),
            fmt_scalars(&self.w)
        )
    }
}

/// Deterministic admissible point with `n` spectral parameters and `m`
/// inhomogeneities, entries p/q with |p|, q ≤ 9.
pub fn sample_point(seed: u64, m: usize, n: usize, constraints: Constraints) -> Result<SamplePoint> {
    sample_point_in_range(seed, m, n, constraints, DEFAULT_RANGE)
}

pub fn sample_point_in_range(
    seed: u64,
    m: usize,
    n: usize,
    constraints: Constraints,
    range: u32,
) -> Result<SamplePoint> {
    if range == 0 {
        return Err(Error::InvalidParameter("sampling range must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = i64::from(range);
    let draw = |rng: &mut ChaCha8Rng| {
        let p = loop {
            let p = rng.gen_range(-bound..=bound);
            if p != 0 {
                break p;
            }
        };
        frac(p, rng.gen_range(1..=bound))
    };
    let homogeneous = constraints.contains(Constraints::HOMOGENEOUS);
    for _ in 0..MAX_REJECTIONS {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let z = (0..n).map(|_| draw(&mut rng)).collect();
        let w = if homogeneous { vec![Scalar::one(); m] } else { (0..m).map(|_| draw(&mut rng)).collect() };
        let point = SamplePoint { a, b, z, w, seed };
        if point.is_admissible(constraints) {
            return Ok(point);
        }
    }
    Err(Error::SamplingExhausted(MAX_REJECTIONS))
}
