//! Named identity checkers. Each one evaluates both sides of a claimed
//! identity at an exact point and records the outcome in a
//! [`VerificationReport`]; `passed` is exact equality, nothing else.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bethe::{self, check_coordinate_relation};
use crate::detformula::{domain_wall_det, domain_wall_det_homogeneous, DomainWallInput};
use crate::error::{Error, Result};
use crate::lattice::{dual_wavefunction_oracle, wavefunction_oracle, ModelParams, OccupationConfig};
use crate::scalarfield::{
    div, fmt_scalar, fmt_scalars, int, interpolate_univariate, sample_point, Constraints, SamplePoint, Scalar,
};
use crate::symfunc::{dual_symmetric_function, symmetric_function, SymFuncInput};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check_id: String,
    /// Short statement of the identity being checked.
    pub paper_ref: String,
    pub seed: u64,
    pub point_summary: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub passed: bool,
    pub elapsed: Duration,
}

/// Seed recorded in reports plus the mutation hook: with `corrupt_rhs`
/// set, every checker doubles its right-hand side before comparing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckContext {
    pub seed: u64,
    pub corrupt_rhs: bool,
}

impl CheckContext {
    pub fn new(seed: u64) -> Self {
        CheckContext { seed, corrupt_rhs: false }
    }

    pub fn corrupted(self) -> Self {
        CheckContext { corrupt_rhs: true, ..self }
    }

    pub(crate) fn report(
        &self,
        check_id: &str,
        claim: &str,
        point_summary: String,
        lhs: Scalar,
        rhs: Scalar,
        started: Instant,
    ) -> VerificationReport {
        let rhs = if self.corrupt_rhs { rhs * int(2) } else { rhs };
        VerificationReport {
            check_id: check_id.to_string(),
            paper_ref: claim.to_string(),
            seed: self.seed,
            point_summary,
            passed: lhs == rhs,
            lhs,
            rhs,
            elapsed: started.elapsed(),
        }
    }
}

fn summarize(params: &ModelParams, z: &[Scalar], w: &[Scalar], x: Option<&OccupationConfig>) -> String {
    let mut s =
        format!("a={} b={} z={} w={}", fmt_scalar(params.a()), fmt_scalar(params.b()), fmt_scalars(z), fmt_scalars(w));
    if let Some(x) = x {
        s.push_str(&format!(" x={:?}", x.positions()));
    }
    s
}

fn oracle(params: &ModelParams, z: &[Scalar], w: &[Scalar], x: &OccupationConfig, dual: bool) -> Result<Scalar> {
    if dual {
        dual_wavefunction_oracle(params, z, w, x)
    } else {
        wavefunction_oracle(params, z, w, x)
    }
}

/// Both sides of the single-column telescoping identity used for N = 1,
/// with the sum running over j = 1..x1−1.
pub fn lemma_sides(params: &ModelParams, z: &Scalar, w_prefix: &[Scalar], x1: usize) -> Result<(Scalar, Scalar)> {
    if x1 < 2 {
        return Err(Error::InvalidConfig(format!("x1 = {x1}, need x1 >= 2")));
    }
    if w_prefix.len() < x1 - 1 {
        return Err(Error::DimensionMismatch(format!("{} inhomogeneities, need {}", w_prefix.len(), x1 - 1)));
    }
    if z.is_zero() {
        return Err(Error::SingularDenominator("z = 0".into()));
    }
    let a = params.a();
    let (ainv, zinv) = (a.recip(), z.recip());
    let w = &w_prefix[..x1 - 1];
    // left(k) = (az⁻¹−a⁻¹zw_k)(az⁻¹w_k−a⁻¹z), right(k) = (azw_k−a⁻¹z⁻¹)(az−a⁻¹z⁻¹w_k)
    let left = |wk: &Scalar| (a * &zinv - &ainv * z * wk) * (a * &zinv * wk - &ainv * z);
    let right = |wk: &Scalar| (a * z * wk - &ainv * &zinv) * (a * z - &ainv * &zinv * wk);

    let mut sum = Scalar::zero();
    for j in 0..w.len() {
        let mut term = w[j].clone();
        for wk in &w[..j] {
            term *= left(wk);
        }
        for wk in &w[j + 1..] {
            term *= right(wk);
        }
        sum += term;
    }
    let lhs = params.a_diff() * (z * z - &zinv * &zinv) * sum;
    let rhs =
        w.iter().map(right).fold(Scalar::one(), |p, f| p * f) - w.iter().map(left).fold(Scalar::one(), |p, f| p * f);
    Ok((lhs, rhs))
}

pub fn check_lemma_identity(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &Scalar,
    w_prefix: &[Scalar],
    x1: usize,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let (lhs, rhs) = lemma_sides(params, z, w_prefix, x1)?;
    let summary = format!("{} x1={x1}", summarize(params, std::slice::from_ref(z), &w_prefix[..x1 - 1], None));
    Ok(ctx.report(
        "lemma.telescoping_sum",
        "weighted sum over a column equals the difference of the two full products",
        summary,
        lhs,
        rhs,
        started,
    ))
}

/// N = 1 closed form: W_{M,1}(z|w|x1), or W̄_{M,1}(z|w|x̄1) when `dual`.
pub fn single_particle_wavefunction(
    params: &ModelParams,
    z: &Scalar,
    w: &[Scalar],
    x1: usize,
    dual: bool,
) -> Result<Scalar> {
    let m = w.len();
    if x1 == 0 || x1 > m {
        return Err(Error::InvalidConfig(format!("position {x1} outside 1..{m}")));
    }
    let (a, b) = (params.a(), params.b());
    let (ainv, binv) = (a.recip(), b.recip());
    let a2 = a * a;
    let z2 = z * z;
    let mut sum = Scalar::zero();
    for u in [z.clone(), z.recip()] {
        let uinv = u.recip();
        let mut term = div(&Scalar::one(), &(&u * &u - &uinv * &uinv), "z^2 - z^-2")?;
        if dual {
            term *= b * a * &u - &binv * &ainv * &uinv;
        } else {
            term *= b * &ainv * &uinv - &binv * a * &u;
        }
        for (j, wj) in w.iter().enumerate() {
            let pos = j + 1;
            if dual {
                term *= a * &uinv * wj - &ainv * &u;
                if pos < x1 {
                    term *= a * &uinv - &ainv * &u * wj;
                } else if pos > x1 {
                    term *= a * &u * wj - &ainv * &uinv;
                }
            } else {
                term *= a * &uinv - &ainv * &u * wj;
                if pos < x1 {
                    term *= a * &uinv * wj - &ainv * &u;
                } else if pos > x1 {
                    term *= a * &u - &ainv * &uinv * wj;
                }
            }
        }
        sum += term;
    }
    Ok(params.a_diff() * ((&a2 * &z2).recip() - &a2 * &z2) * sum)
}

/// Brute-force wavefunction against the closed-form symmetric function.
pub fn check_wavefunction_symfunc(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &[Scalar],
    w: &[Scalar],
    x: &OccupationConfig,
    dual: bool,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let input = SymFuncInput::new(params.clone(), z.to_vec(), w.to_vec(), x.clone())?;
    let lhs = oracle(params, z, w, x, dual)?;
    let rhs = if dual { dual_symmetric_function(&input)? } else { symmetric_function(&input)? };
    let (id, claim) = if dual {
        ("dual_wavefunction.symmetric_function", "dual wavefunction equals the dual symmetric function")
    } else {
        ("wavefunction.symmetric_function", "wavefunction equals the symmetric function")
    };
    Ok(ctx.report(id, claim, summarize(params, z, w, Some(x)), lhs, rhs, started))
}

/// One of the five characterizing properties of the wavefunctions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Degree,
    Symmetry,
    Inversion,
    RecursionTop,
    Factorization,
    Initial,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Degree,
        Property::Symmetry,
        Property::Inversion,
        Property::RecursionTop,
        Property::Factorization,
        Property::Initial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Degree => "degree",
            Property::Symmetry => "symmetry",
            Property::Inversion => "inversion",
            Property::RecursionTop => "recursion_top",
            Property::Factorization => "factorization",
            Property::Initial => "initial",
        }
    }

    fn claim(self) -> &'static str {
        match self {
            Property::Degree => "polynomial of degree 2N-1 in w_M when x_N = M",
            Property::Symmetry => "symmetric under permutations of z",
            Property::Inversion => "z_i -> 1/z_i multiplies by (a^2 z_i^-2 - a^-2 z_i^2)/(a^2 z_i^2 - a^-2 z_i^-2)",
            Property::RecursionTop => "frozen column and row at the special value of w_M when x_N = M",
            Property::Factorization => "w_M column factors out when x_N != M",
            Property::Initial => "N = 1, x_1 = M closed form",
        }
    }

    /// Whether the property says anything at this configuration.
    pub fn applies(self, m: usize, x: &OccupationConfig) -> bool {
        let n = x.len();
        match self {
            Property::Degree | Property::RecursionTop => n >= 1 && x.last() == Some(m),
            Property::Symmetry => n >= 2,
            Property::Inversion => n >= 1,
            Property::Factorization => x.last() != Some(m),
            Property::Initial => n == 1 && x.last() == Some(m),
        }
    }
}

/// Runs every applicable property in `which` at the given point.
/// Properties that say nothing about `x` (e.g. factorization when
/// x_N = M) are skipped.
pub fn check_properties(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &[Scalar],
    w: &[Scalar],
    x: &OccupationConfig,
    which: &[Property],
    dual: bool,
) -> Result<Vec<VerificationReport>> {
    let m = w.len();
    if x.sites() != m || x.len() != z.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} positions on {} sites with {} z and {} w",
            x.len(),
            x.sites(),
            z.len(),
            m
        )));
    }
    let mut out = Vec::new();
    for &prop in which {
        if !prop.applies(m, x) {
            continue;
        }
        let started = Instant::now();
        let (lhs, rhs, w_used) = property_sides(params, z, w, x, prop, dual, ctx.seed)?;
        let prefix = if dual { "dual_property" } else { "property" };
        out.push(ctx.report(
            &format!("{prefix}.{}", prop.name()),
            prop.claim(),
            summarize(params, z, &w_used, Some(x)),
            lhs,
            rhs,
            started,
        ));
    }
    Ok(out)
}

fn property_sides(
    params: &ModelParams,
    z: &[Scalar],
    w: &[Scalar],
    x: &OccupationConfig,
    prop: Property,
    dual: bool,
    seed: u64,
) -> Result<(Scalar, Scalar, Vec<Scalar>)> {
    let m = w.len();
    let n = z.len();
    let a = params.a();
    let ainv = a.recip();
    let a2 = a * a;
    let wf = |z: &[Scalar], w: &[Scalar], x: &OccupationConfig| oracle(params, z, w, x, dual);
    match prop {
        Property::Degree => {
            let samples = (1..=2 * n as i64 + 2)
                .map(|t| {
                    let mut wt = w.to_vec();
                    wt[m - 1] = int(t);
                    Ok((int(t), wf(z, &wt, x)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let degree = interpolate_univariate(&samples)?.len() as i64 - 1;
            Ok((int(degree), int(2 * n as i64 - 1), w.to_vec()))
        }
        Property::Symmetry => {
            let mut rotated = z.to_vec();
            rotated.rotate_left(1);
            Ok((wf(z, w, x)?, wf(&rotated, w, x)?, w.to_vec()))
        }
        Property::Inversion => {
            let i = (seed % n as u64) as usize;
            let mut inverted = z.to_vec();
            inverted[i] = z[i].recip();
            let zi2 = &z[i] * &z[i];
            let ratio =
                div(&(&a2 / &zi2 - &zi2 / &a2), &(&a2 * &zi2 - (&a2 * &zi2).recip()), "a^2 z_i^2 - a^-2 z_i^-2")?;
            Ok((wf(&inverted, w, x)?, ratio * wf(z, w, x)?, w.to_vec()))
        }
        Property::RecursionTop => {
            let zn = &z[n - 1];
            let zn2 = zn * zn;
            let mut wr = w.to_vec();
            wr[m - 1] = if dual { (&a2 * &zn2).recip() } else { &a2 * &zn2 };
            let lhs = wf(z, &wr, x)?;
            let (b, binv) = (params.b(), params.b().recip());
            let mut pre = params.a_diff();
            if dual {
                pre *= b * a * zn - &binv * &ainv / zn;
                for zj in z {
                    pre *= a * zj - &ainv / (&a2 * zj * &zn2);
                }
                for zj in &z[..n - 1] {
                    pre *= a / zj - &ainv * zj / (&a2 * &zn2);
                }
            } else {
                pre *= b * &ainv / zn - &binv * a * zn;
                for zj in z {
                    pre *= &a2 * a * &zn2 * zj - &ainv / zj;
                }
                for zj in &z[..n - 1] {
                    pre *= &a2 * a * &zn2 / zj - &ainv * zj;
                }
            }
            for wj in &w[..m - 1] {
                pre *= (a / zn * wj - &ainv * zn) * (a / zn - &ainv * zn * wj);
            }
            let rest = if m == 1 { Scalar::one() } else { wf(&z[..n - 1], &w[..m - 1], &x.truncated()?)? };
            Ok((lhs, pre * rest, wr))
        }
        Property::Factorization => {
            let wm = &w[m - 1];
            let mut pre = Scalar::one();
            for zj in z {
                if dual {
                    pre *= (a * zj * wm - &ainv / zj) * (a / zj * wm - &ainv * zj);
                } else {
                    pre *= (a / zj - &ainv * zj * wm) * (a * zj - &ainv / zj * wm);
                }
            }
            let rest = wf(z, &w[..m - 1], &x.narrowed()?)?;
            Ok((wf(z, w, x)?, pre * rest, w.to_vec()))
        }
        Property::Initial => {
            let lhs = wf(z, w, x)?;
            Ok((lhs, single_particle_wavefunction(params, &z[0], w, m, dual)?, w.to_vec()))
        }
    }
}

/// Brute-force domain-wall partition function against the determinant.
pub fn check_domain_wall(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &[Scalar],
    w: &[Scalar],
) -> Result<VerificationReport> {
    let started = Instant::now();
    let input = DomainWallInput::new(params.clone(), z.to_vec(), w.to_vec())?;
    let x = OccupationConfig::leading(w.len(), w.len())?;
    let lhs = wavefunction_oracle(params, z, w, &x)?;
    let rhs = domain_wall_det(&input)?;
    Ok(ctx.report(
        "domain_wall.determinant",
        "domain-wall partition function equals the determinant formula",
        summarize(params, z, w, None),
        lhs,
        rhs,
        started,
    ))
}

/// Brute-force partition function at w = 1 against the homogeneous form.
pub fn check_domain_wall_homogeneous(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &[Scalar],
) -> Result<VerificationReport> {
    let started = Instant::now();
    let m = z.len();
    let w = vec![Scalar::one(); m];
    let x = OccupationConfig::leading(m, m)?;
    let rhs = domain_wall_det_homogeneous(params, z)?;
    let lhs = wavefunction_oracle(params, z, &w, &x)?;
    Ok(ctx.report(
        "domain_wall.homogeneous_determinant",
        "homogeneous domain-wall partition function equals the homogeneous determinant",
        summarize(params, z, &w, None),
        lhs,
        rhs,
        started,
    ))
}

/// Column parameters for the pairing sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Columns<'a> {
    Inhomogeneous(&'a [Scalar]),
    Homogeneous,
}

/// All splittings {1..M} = x ⊔ x̄ with |x| = n, enumerated by bitmask.
pub fn pairing_terms(m: usize, n: usize) -> Vec<(OccupationConfig, OccupationConfig)> {
    if n > m || m >= 64 {
        return Vec::new();
    }
    (0u64..1 << m)
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| {
            let x = OccupationConfig::from_mask(m, mask);
            let xbar = x.complement();
            (x, xbar)
        })
        .collect()
}

/// Σ_x F̄(z_1..z_{M−N}|w|x̄) F(z_{M−N+1}..z_M|w|x) against the domain-wall
/// determinant.
pub fn check_pairing(
    ctx: &CheckContext,
    params: &ModelParams,
    z: &[Scalar],
    columns: Columns<'_>,
    n: usize,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let m = z.len();
    if n > m {
        return Err(Error::InvalidConfig(format!("N = {n} exceeds M = {m}")));
    }
    let w = match columns {
        Columns::Inhomogeneous(w) => w.to_vec(),
        Columns::Homogeneous => vec![Scalar::one(); m],
    };
    if w.len() != m {
        return Err(Error::DimensionMismatch(format!("{} z, {} w", m, w.len())));
    }
    let (z_dual, z_primal) = z.split_at(m - n);
    let mut lhs = Scalar::zero();
    for (x, xbar) in pairing_terms(m, n) {
        let bar = dual_symmetric_function(&SymFuncInput::new(params.clone(), z_dual.to_vec(), w.clone(), xbar)?)?;
        let primal = symmetric_function(&SymFuncInput::new(params.clone(), z_primal.to_vec(), w.clone(), x)?)?;
        lhs += bar * primal;
    }
    let (id, claim, rhs) = match columns {
        Columns::Inhomogeneous(_) => (
            "pairing.determinant",
            "sum over complementary configurations of dual times primal symmetric functions equals the determinant",
            domain_wall_det(&DomainWallInput::new(params.clone(), z.to_vec(), w.clone())?)?,
        ),
        Columns::Homogeneous => (
            "pairing.homogeneous_determinant",
            "homogeneous pairing sum equals the homogeneous determinant",
            domain_wall_det_homogeneous(params, z)?,
        ),
    };
    Ok(ctx.report(id, claim, format!("{} N={n}", summarize(params, z, &w, None)), lhs, rhs, started))
}

/// Coordinate relation and the three scalar identities behind it.
pub fn check_bethe_auxiliary(
    ctx: &CheckContext,
    params: &ModelParams,
    zj: &Scalar,
    zk: &Scalar,
) -> Result<Vec<VerificationReport>> {
    let summary = summarize(params, &[zj.clone(), zk.clone()], &[], None);
    type Identity = fn(&ModelParams, &Scalar, &Scalar) -> Result<(Scalar, Scalar)>;
    let identities: [(&str, &str, Identity); 3] = [
        ("bethe.boundary_factor", "boundary factor in terms of the momentum", |p, zj, _| {
            bethe::boundary_identity(p, zj)
        }),
        ("bethe.pair_sum", "a^2 z_j z_k - a^-2 z_j^-1 z_k^-1 in terms of momenta", bethe::pair_sum_identity),
        (
            "bethe.pair_difference",
            "a^2 z_j^-1 z_k - a^-2 z_j z_k^-1 in terms of momenta",
            bethe::pair_difference_identity,
        ),
    ];
    identities
        .iter()
        .map(|(id, claim, f)| {
            let started = Instant::now();
            let (lhs, rhs) = f(params, zj, zk)?;
            Ok(ctx.report(id, claim, summary.clone(), lhs, rhs, started))
        })
        .collect()
}

/// Suite-level selection of checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Lemma,
    SymmetricFunction,
    Properties,
    DomainWall,
    DomainWallHomogeneous,
    Pairing,
    CoordinateRelation,
    BetheAuxiliary,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Lemma,
        Check::SymmetricFunction,
        Check::Properties,
        Check::DomainWall,
        Check::DomainWallHomogeneous,
        Check::Pairing,
        Check::CoordinateRelation,
        Check::BetheAuxiliary,
    ];
}

/// SplitMix64 finalizer folded over the inputs.
fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(seed, |acc, &p| {
        let mut x = acc ^ p.wrapping_add(0x9e37_79b9_7f4a_7c15);
        x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        x ^ (x >> 31)
    })
}

fn params_of(point: &SamplePoint) -> Result<ModelParams> {
    ModelParams::new(point.a.clone(), point.b.clone())
}

/// Runs `check` at points drawn for size (m, n).
pub fn run_check(seed: u64, m: usize, n: usize, check: Check) -> Result<Vec<VerificationReport>> {
    if m == 0 || n > m {
        return Err(Error::InvalidConfig(format!("size (M={m}, N={n}) needs 1 <= M and N <= M")));
    }
    let s = derive_seed(seed, &[m as u64, n as u64, check as u64]);
    let ctx = CheckContext::new(s);
    let empty = Constraints::empty();
    match check {
        Check::Lemma => {
            let p = sample_point(s, m, 1, empty)?;
            Ok(vec![check_lemma_identity(&ctx, &params_of(&p)?, &p.z[0], &p.w, m + 1)?])
        }
        Check::SymmetricFunction => {
            let p = sample_point(s, m, n, empty)?;
            let params = params_of(&p)?;
            let mut out = Vec::new();
            for x in OccupationConfig::all(m, n) {
                out.push(check_wavefunction_symfunc(&ctx, &params, &p.z, &p.w, &x, false)?);
                out.push(check_wavefunction_symfunc(&ctx, &params, &p.z, &p.w, &x, true)?);
            }
            Ok(out)
        }
        Check::Properties => {
            let p = sample_point(s, m, n, Constraints::AVOID_CROSSING)?;
            let params = params_of(&p)?;
            let mut out = Vec::new();
            for x in OccupationConfig::all(m, n) {
                out.extend(check_properties(&ctx, &params, &p.z, &p.w, &x, &Property::ALL, false)?);
                out.extend(check_properties(&ctx, &params, &p.z, &p.w, &x, &Property::ALL, true)?);
            }
            Ok(out)
        }
        Check::DomainWall => {
            let p = sample_point(s, m, m, empty)?;
            Ok(vec![check_domain_wall(&ctx, &params_of(&p)?, &p.z, &p.w)?])
        }
        Check::DomainWallHomogeneous => {
            let p = sample_point(s, m, m, Constraints::HOMOGENEOUS | Constraints::AVOID_CROSSING)?;
            Ok(vec![check_domain_wall_homogeneous(&ctx, &params_of(&p)?, &p.z)?])
        }
        Check::Pairing => {
            let p = sample_point(s, m, m, empty)?;
            let h = sample_point(derive_seed(s, &[1]), m, m, Constraints::HOMOGENEOUS | Constraints::AVOID_CROSSING)?;
            let hctx = CheckContext::new(h.seed);
            Ok(vec![
                check_pairing(&ctx, &params_of(&p)?, &p.z, Columns::Inhomogeneous(&p.w), n)?,
                check_pairing(&hctx, &params_of(&h)?, &h.z, Columns::Homogeneous, n)?,
            ])
        }
        Check::CoordinateRelation => {
            let p = sample_coordinate_point(s, m, n)?;
            let params = params_of(&p)?;
            OccupationConfig::all(m, n).iter().map(|x| check_coordinate_relation(&ctx, &params, &p.z, x)).collect()
        }
        Check::BetheAuxiliary => {
            let p = sample_point(s, 1, 2, Constraints::AVOID_CROSSING)?;
            check_bethe_auxiliary(&ctx, &params_of(&p)?, &p.z[0], &p.z[1])
        }
    }
}

/// Homogeneous point whose z_j² + z_j⁻² are pairwise distinct. Distinct
/// z² with z_j²z_k² ≠ 1 already guarantees that, so the sampler's own
/// predicate suffices.
pub fn sample_coordinate_point(seed: u64, m: usize, n: usize) -> Result<SamplePoint> {
    sample_point(seed, m, n, Constraints::HOMOGENEOUS | Constraints::AVOID_CROSSING)
}

/// Every (size, check) pair, dispatched in parallel; the result keeps
/// the input order.
pub fn run_suite(seed: u64, sizes: &[(usize, usize)], checks: &[Check]) -> Result<Vec<VerificationReport>> {
    let jobs: Vec<(usize, usize, Check)> =
        sizes.iter().flat_map(|&(m, n)| checks.iter().map(move |&c| (m, n, c))).collect();
    let batches = jobs.into_par_iter().map(|(m, n, c)| run_check(seed, m, n, c)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for batch in batches {
        out.extend(batch?);
    }
    Ok(out)
}
