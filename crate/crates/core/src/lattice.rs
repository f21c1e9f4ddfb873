//! Quantum-inverse-scattering side of the model.
//!
//! Local weights (L and K operators), single-row monodromy elements B and
//! D, the double-row creation operator and brute-force wavefunctions by
//! contraction over the 2^M-dimensional quantum space.
//!
//! Conventions: bit j-1 of a mask is site j; a set bit is the state |1⟩
//! (a particle). Matrix elements are indexed as
//! ⟨aux_out|⟨q_out| L |aux_in⟩|q_in⟩.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalarfield::{fmt_scalar, Scalar};

/// Largest lattice width the dense-mask contraction accepts.
pub const MAX_SITES: usize = 14;

/// Crossing parameter `a` and boundary parameter `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelParams {
    a: Scalar,
    b: Scalar,
}

impl ModelParams {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        let one = Scalar::one();
        if a.is_zero() || (&a * &a * &a * &a) == one {
            return Err(Error::InvalidParameter(format!("a = {} needs a != 0 and a^4 != 1", fmt_scalar(&a))));
        }
        if b.is_zero() || &b * &b == one {
            return Err(Error::InvalidParameter(format!("b = {} needs b != 0 and b^2 != 1", fmt_scalar(&b))));
        }
        Ok(ModelParams { a, b })
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    /// a² − a⁻²
    pub fn a_diff(&self) -> Scalar {
        let a2 = &self.a * &self.a;
        &a2 - a2.recip()
    }

    /// a² + a⁻²
    pub fn a_sum(&self) -> Scalar {
        let a2 = &self.a * &self.a;
        &a2 + a2.recip()
    }
}

/// Strictly increasing 1-based positions on a width-M lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OccupationConfig {
    sites: usize,
    positions: Vec<usize>,
}

impl OccupationConfig {
    pub fn new(sites: usize, positions: Vec<usize>) -> Result<Self> {
        if positions.len() > sites {
            return Err(Error::InvalidConfig(format!("{} positions on {} sites", positions.len(), sites)));
        }
        if let Some(&p) = positions.iter().find(|&&p| p == 0 || p > sites) {
            return Err(Error::InvalidConfig(format!("position {p} outside 1..{sites}")));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(format!("positions {positions:?} not strictly increasing")));
        }
        Ok(OccupationConfig { sites, positions })
    }

    /// Sites 1..=n on a width-`sites` lattice.
    pub fn leading(sites: usize, n: usize) -> Result<Self> {
        Self::new(sites, (1..=n).collect())
    }

    /// Every configuration of `n` positions on `sites` sites, in
    /// lexicographic order.
    pub fn all(sites: usize, n: usize) -> Vec<OccupationConfig> {
        let mut out = Vec::new();
        if n > sites {
            return out;
        }
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(OccupationConfig { sites, positions: current.clone() });
            // advance the rightmost position that still has room
            let Some(i) = (0..n).rev().find(|&i| current[i] < sites - (n - 1 - i)) else {
                break;
            };
            current[i] += 1;
            for j in i + 1..n {
                current[j] = current[j - 1] + 1;
            }
        }
        out
    }

    pub fn from_mask(sites: usize, mask: u64) -> Self {
        debug_assert!(sites <= 64 && (sites == 64 || mask >> sites == 0));
        let positions = (1..=sites).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
        OccupationConfig { sites, positions }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.positions.last().copied()
    }

    pub fn mask(&self) -> u64 {
        self.positions.iter().fold(0, |m, &p| m | 1 << (p - 1))
    }

    /// The positions not in `self`.
    pub fn complement(&self) -> OccupationConfig {
        let full = if self.sites == 64 { u64::MAX } else { (1u64 << self.sites) - 1 };
        Self::from_mask(self.sites, full & !self.mask())
    }

    /// Drops the last position and the last site.
    pub fn truncated(&self) -> Result<OccupationConfig> {
        if self.sites == 0 {
            return Err(Error::InvalidConfig("cannot narrow an empty lattice".into()));
        }
        let mut positions = self.positions.clone();
        positions.pop();
        Self::new(self.sites - 1, positions)
    }

    /// Same positions on a lattice one site narrower; the last site must
    /// be empty.
    pub fn narrowed(&self) -> Result<OccupationConfig> {
        if self.sites == 0 {
            return Err(Error::InvalidConfig("cannot narrow an empty lattice".into()));
        }
        Self::new(self.sites - 1, self.positions.clone())
    }
}

/// Sparse state of F₁⊗…⊗F_M keyed by occupation mask. Zero amplitudes
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    sites: usize,
    amplitudes: BTreeMap<u64, Scalar>,
}

impl FockVector {
    pub fn zero(sites: usize) -> Result<Self> {
        check_width(sites)?;
        Ok(FockVector { sites, amplitudes: BTreeMap::new() })
    }

    pub fn basis(sites: usize, mask: u64) -> Result<Self> {
        Self::from_amplitudes(sites, [(mask, Scalar::one())])
    }

    /// |0^M⟩
    pub fn vacuum(sites: usize) -> Result<Self> {
        Self::basis(sites, 0)
    }

    /// |1^M⟩
    pub fn filled(sites: usize) -> Result<Self> {
        check_width(sites)?;
        Self::basis(sites, full_mask(sites))
    }

    /// |x₁⋯x_N⟩: particles exactly at the given positions.
    pub fn particles(config: &OccupationConfig) -> Result<Self> {
        Self::basis(config.sites(), config.mask())
    }

    /// |x̄₁⋯x̄_N⟩: every site filled except holes at the given positions.
    pub fn holes(config: &OccupationConfig) -> Result<Self> {
        check_width(config.sites())?;
        Self::basis(config.sites(), full_mask(config.sites()) & !config.mask())
    }

    pub fn from_amplitudes<I>(sites: usize, amplitudes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Scalar)>,
    {
        check_width(sites)?;
        let mut v = FockVector { sites, amplitudes: BTreeMap::new() };
        for (mask, amp) in amplitudes {
            if mask >> sites != 0 {
                return Err(Error::DimensionMismatch(format!("mask {mask:#b} exceeds {sites} sites")));
            }
            v.add(mask, amp);
        }
        Ok(v)
    }

    fn add(&mut self, mask: u64, amp: Scalar) {
        if amp.is_zero() {
            return;
        }
        let slot = self.amplitudes.entry(mask).or_insert_with(Scalar::zero);
        *slot += amp;
        if slot.is_zero() {
            self.amplitudes.remove(&mask);
        }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn amplitude(&self, mask: u64) -> Scalar {
        self.amplitudes.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn amplitude_at(&self, config: &OccupationConfig) -> Scalar {
        self.amplitude(config.mask())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Scalar)> {
        self.amplitudes.iter().map(|(&m, a)| (m, a))
    }

    /// Number of stored (nonzero) amplitudes.
    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Occupation numbers present in the support.
    pub fn occupations(&self) -> Vec<u32> {
        let mut occ: Vec<u32> = self.amplitudes.keys().map(|m| m.count_ones()).collect();
        occ.sort_unstable();
        occ.dedup();
        occ
    }

    pub fn scaled(&self, factor: &Scalar) -> FockVector {
        let mut out = FockVector { sites: self.sites, amplitudes: BTreeMap::new() };
        for (&m, a) in &self.amplitudes {
            out.add(m, a * factor);
        }
        out
    }

    pub fn plus(&self, other: &FockVector) -> Result<FockVector> {
        if self.sites != other.sites {
            return Err(Error::DimensionMismatch(format!("{} vs {} sites", self.sites, other.sites)));
        }
        let mut out = self.clone();
        for (&m, a) in &other.amplitudes {
            out.add(m, a.clone());
        }
        Ok(out)
    }
}

fn full_mask(sites: usize) -> u64 {
    if sites == 64 {
        u64::MAX
    } else {
        (1u64 << sites) - 1
    }
}

fn check_width(sites: usize) -> Result<()> {
    if sites > MAX_SITES {
        return Err(Error::TooManySites(sites));
    }
    Ok(())
}

/// One of the six nonzero L-operator weights, or zero when the indices
/// break the ice rule aux_in + q_in = aux_out + q_out.
pub fn l_element(params: &ModelParams, z: &Scalar, w: &Scalar, aux_in: u8, q_in: u8, aux_out: u8, q_out: u8) -> Scalar {
    let a = params.a();
    match (aux_out, q_out, aux_in, q_in) {
        (0, 0, 0, 0) | (1, 1, 1, 1) => a * w / z - z / a,
        (0, 1, 0, 1) | (1, 0, 1, 0) => a * z - w / (a * z),
        (0, 1, 1, 0) => params.a_diff(),
        (1, 0, 0, 1) => params.a_diff() * w,
        _ => Scalar::zero(),
    }
}

/// K-operator weight for the auxiliary bra pair (a₂-index, a₁-index).
pub fn k_element(params: &ModelParams, z: &Scalar, out_pair: (u8, u8)) -> Scalar {
    let (a, b) = (params.a(), params.b());
    match out_pair {
        (0, 1) => b * a * z - (b * a * z).recip(),
        (1, 0) => b / (a * z) - a * z / b,
        _ => Scalar::zero(),
    }
}

/// Monodromy element with auxiliary input |1⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOperator {
    /// auxiliary output ⟨0|
    B,
    /// auxiliary output ⟨1|
    D,
}

fn check_row_inputs(z: &Scalar, w: &[Scalar], v: &FockVector) -> Result<()> {
    if v.sites() != w.len() {
        return Err(Error::DimensionMismatch(format!("vector on {} sites, {} inhomogeneities", v.sites(), w.len())));
    }
    if z.is_zero() {
        return Err(Error::SingularDenominator("spectral parameter z = 0".into()));
    }
    if w.iter().any(Zero::is_zero) {
        return Err(Error::InvalidParameter("inhomogeneity w = 0".into()));
    }
    Ok(())
}

/// Applies ⟨out|_a L_{a1}(z,w₁)⋯L_{aM}(z,w_M) |1⟩_a to `v`.
///
/// Sites are swept left to right with a two-valued auxiliary register;
/// the key's bits below the sweep position already hold output states.
pub fn apply_row_operator(
    kind: RowOperator,
    params: &ModelParams,
    z: &Scalar,
    w: &[Scalar],
    v: &FockVector,
) -> Result<FockVector> {
    check_row_inputs(z, w, v)?;
    let aux_out = match kind {
        RowOperator::B => 0u8,
        RowOperator::D => 1u8,
    };
    let mut states: HashMap<(u64, u8), Scalar> = v.iter().map(|(m, amp)| ((m, aux_out), amp.clone())).collect();
    for (site, wj) in w.iter().enumerate() {
        // weights[aux_left][q_in][aux_right] with q_out fixed by the ice rule
        let mut next: HashMap<(u64, u8), Scalar> = HashMap::with_capacity(states.len() * 2);
        for ((mask, aux), amp) in states {
            let q_in = (mask >> site & 1) as u8;
            for aux_right in 0..=1u8 {
                let q_out = aux_right + q_in;
                if q_out < aux || q_out - aux > 1 {
                    continue;
                }
                let q_out = q_out - aux;
                let weight = l_element(params, z, wj, aux_right, q_in, aux, q_out);
                if weight.is_zero() {
                    continue;
                }
                let key = ((mask & !(1 << site)) | (u64::from(q_out) << site), aux_right);
                *next.entry(key).or_insert_with(Scalar::zero) += &amp * weight;
            }
        }
        next.retain(|_, amp| !amp.is_zero());
        states = next;
    }
    FockVector::from_amplitudes(
        v.sites(),
        states.into_iter().filter(|((_, aux), _)| *aux == 1).map(|((m, _), amp)| (m, amp)),
    )
}

/// 𝓑(z) = (ba⁻¹z⁻¹ − b⁻¹az)·D(z⁻¹)B(z) + (baz − b⁻¹a⁻¹z⁻¹)·B(z⁻¹)D(z).
pub fn apply_double_row_b(params: &ModelParams, z: &Scalar, w: &[Scalar], v: &FockVector) -> Result<FockVector> {
    check_row_inputs(z, w, v)?;
    let zinv = z.recip();
    let db =
        apply_row_operator(RowOperator::D, params, &zinv, w, &apply_row_operator(RowOperator::B, params, z, w, v)?)?;
    let bd =
        apply_row_operator(RowOperator::B, params, &zinv, w, &apply_row_operator(RowOperator::D, params, z, w, v)?)?;
    db.scaled(&k_element(params, z, (1, 0))).plus(&bd.scaled(&k_element(params, z, (0, 1))))
}

/// Reference contraction of K_{a₂a₁}(z) T_{a₂}(z⁻¹) T_{a₁}(z) |1⟩|1⟩
/// sweeping both auxiliary spaces through each site at once, without the
/// B/D decomposition. Slower; kept to cross-check [`apply_double_row_b`].
pub fn apply_double_row_b_two_row(
    params: &ModelParams,
    z: &Scalar,
    w: &[Scalar],
    v: &FockVector,
) -> Result<FockVector> {
    check_row_inputs(z, w, v)?;
    let zinv = z.recip();
    // key: (mask, aux of row a₂ at z⁻¹, aux of row a₁ at z)
    let mut states: HashMap<(u64, u8, u8), Scalar> = HashMap::new();
    for (a2, a1) in [(0u8, 1u8), (1, 0)] {
        let k = k_element(params, z, (a2, a1));
        for (m, amp) in v.iter() {
            *states.entry((m, a2, a1)).or_insert_with(Scalar::zero) += amp * &k;
        }
    }
    for (site, wj) in w.iter().enumerate() {
        let mut next: HashMap<(u64, u8, u8), Scalar> = HashMap::new();
        for ((mask, a2, a1), amp) in states {
            let q0 = (mask >> site & 1) as u8;
            // the lower row T_{a₁}(z) acts on the site first
            for r1 in 0..=1u8 {
                for q1 in 0..=1u8 {
                    let w1 = l_element(params, z, wj, r1, q0, a1, q1);
                    if w1.is_zero() {
                        continue;
                    }
                    for r2 in 0..=1u8 {
                        for q2 in 0..=1u8 {
                            let w2 = l_element(params, &zinv, wj, r2, q1, a2, q2);
                            if w2.is_zero() {
                                continue;
                            }
                            let key = ((mask & !(1 << site)) | (u64::from(q2) << site), r2, r1);
                            *next.entry(key).or_insert_with(Scalar::zero) += &amp * &w1 * w2;
                        }
                    }
                }
            }
        }
        states = next;
    }
    FockVector::from_amplitudes(
        v.sites(),
        states.into_iter().filter(|((_, r2, r1), _)| *r2 == 1 && *r1 == 1).map(|((m, _, _), a)| (m, a)),
    )
}

/// 𝓑(z₁)⋯𝓑(z_N)·v, applying 𝓑(z_N) first.
pub fn apply_double_row_product(
    params: &ModelParams,
    z: &[Scalar],
    w: &[Scalar],
    v: &FockVector,
) -> Result<FockVector> {
    z.iter().rev().try_fold(v.clone(), |acc, zj| apply_double_row_b(params, zj, w, &acc))
}

fn check_config(z: &[Scalar], w: &[Scalar], x: &OccupationConfig) -> Result<()> {
    if x.sites() != w.len() {
        return Err(Error::DimensionMismatch(format!(
            "configuration on {} sites, {} inhomogeneities",
            x.sites(),
            w.len()
        )));
    }
    if x.len() != z.len() {
        return Err(Error::DimensionMismatch(format!("{} positions, {} spectral parameters", x.len(), z.len())));
    }
    Ok(())
}

/// W_{M,N}(z|w|x) = ⟨x₁⋯x_N| 𝓑(z₁)⋯𝓑(z_N) |0^M⟩.
pub fn wavefunction_oracle(params: &ModelParams, z: &[Scalar], w: &[Scalar], x: &OccupationConfig) -> Result<Scalar> {
    check_config(z, w, x)?;
    let state = apply_double_row_product(params, z, w, &FockVector::vacuum(w.len())?)?;
    Ok(state.amplitude_at(x))
}

/// W̄_{M,N}(z|w|x̄) = ⟨1^M| 𝓑(z₁)⋯𝓑(z_N) |x̄₁⋯x̄_N⟩ with holes at x̄.
pub fn dual_wavefunction_oracle(
    params: &ModelParams,
    z: &[Scalar],
    w: &[Scalar],
    xbar: &OccupationConfig,
) -> Result<Scalar> {
    check_config(z, w, xbar)?;
    let state = apply_double_row_product(params, z, w, &FockVector::holes(xbar)?)?;
    Ok(state.amplitude(full_mask(w.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::{frac, int, sample_point, Constraints};

    fn anchor() -> ModelParams {
        ModelParams::new(int(2), int(3)).unwrap()
    }

    #[test]
    fn l_weights() {
        let p = anchor();
        assert_eq!(l_element(&p, &int(1), &int(3), 0, 0, 0, 0), frac(11, 2));
        assert_eq!(l_element(&p, &int(1), &int(3), 0, 0, 1, 1), int(0));
        assert_eq!(l_element(&p, &int(1), &int(3), 1, 0, 0, 1), frac(15, 4));
        assert_eq!(l_element(&p, &int(1), &int(3), 0, 1, 1, 0), frac(45, 4));
    }

    #[test]
    fn k_weights() {
        let p = anchor();
        assert_eq!(k_element(&p, &int(1), (0, 1)), frac(35, 6));
        assert_eq!(k_element(&p, &int(1), (1, 0)), frac(5, 6));
        assert_eq!(k_element(&p, &int(1), (0, 0)), int(0));
        assert_eq!(k_element(&p, &int(1), (1, 1)), int(0));
    }

    #[test]
    fn ice_rule_exhaustive() {
        let pt = sample_point(3, 1, 1, Constraints::empty()).unwrap();
        let p = ModelParams::new(pt.a, pt.b).unwrap();
        let mut nonzero = 0;
        for idx in 0..16u8 {
            let (ai, qi, ao, qo) = (idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1);
            let e = l_element(&p, &pt.z[0], &pt.w[0], ai, qi, ao, qo);
            if ai + qi != ao + qo {
                assert!(e.is_zero(), "ice rule broken at {idx:04b}");
            } else if !e.is_zero() {
                nonzero += 1;
            }
        }
        assert_eq!(nonzero, 6);
    }

    #[test]
    fn single_site_rows() {
        let p = anchor();
        let (z, w) = (frac(5, 3), vec![frac(-7, 2)]);
        let vac = FockVector::vacuum(1).unwrap();
        let b = apply_row_operator(RowOperator::B, &p, &z, &w, &vac).unwrap();
        assert_eq!(b, FockVector::basis(1, 1).unwrap().scaled(&p.a_diff()));
        let d = apply_row_operator(RowOperator::D, &p, &z, &w, &vac).unwrap();
        let expect = p.a() * &z - &w[0] / (p.a() * &z);
        assert_eq!(d, FockVector::basis(1, 0).unwrap().scaled(&expect));
        let full = FockVector::filled(3).unwrap();
        let w3 = vec![int(2), int(3), int(5)];
        assert!(apply_row_operator(RowOperator::B, &p, &z, &w3, &full).unwrap().is_zero());
    }

    #[test]
    fn double_row_anchor() {
        let v = apply_double_row_b(&anchor(), &int(2), &[int(1)], &FockVector::vacuum(1).unwrap()).unwrap();
        assert_eq!(v.amplitude(1), frac(1275, 8));
        assert_eq!(v.len(), 1);
        let full = FockVector::filled(4).unwrap();
        let w = vec![int(2), int(3), int(5), int(7)];
        assert!(apply_double_row_b(&anchor(), &int(2), &w, &full).unwrap().is_zero());
    }

    #[test]
    fn two_row_contraction_agrees() {
        for (seed, m) in [(1u64, 1usize), (2, 2), (3, 3)] {
            let pt = sample_point(seed, m, 1, Constraints::empty()).unwrap();
            let p = ModelParams::new(pt.a, pt.b).unwrap();
            for mask in 0..1u64 << m {
                let v = FockVector::basis(m, mask).unwrap();
                assert_eq!(
                    apply_double_row_b(&p, &pt.z[0], &pt.w, &v).unwrap(),
                    apply_double_row_b_two_row(&p, &pt.z[0], &pt.w, &v).unwrap()
                );
            }
        }
    }

    #[test]
    fn empty_products() {
        let p = anchor();
        let w = vec![int(2), int(3)];
        let empty = OccupationConfig::new(2, vec![]).unwrap();
        assert_eq!(wavefunction_oracle(&p, &[], &w, &empty).unwrap(), int(1));
        assert_eq!(dual_wavefunction_oracle(&p, &[], &w, &empty).unwrap(), int(1));
    }

    #[test]
    fn oracle_dimension_errors() {
        let p = anchor();
        let x = OccupationConfig::new(2, vec![1]).unwrap();
        assert!(matches!(wavefunction_oracle(&p, &[int(2)], &[int(1)], &x), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            wavefunction_oracle(&p, &[int(2), int(3)], &[int(1), int(5)], &x),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(FockVector::vacuum(MAX_SITES + 1), Err(Error::TooManySites(_))));
    }

    #[test]
    fn configurations() {
        assert!(OccupationConfig::new(3, vec![3, 2]).is_err());
        assert!(OccupationConfig::new(3, vec![0]).is_err());
        assert!(OccupationConfig::new(3, vec![4]).is_err());
        let all = OccupationConfig::all(5, 3);
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].positions(), &[1, 2, 3]);
        assert_eq!(all[9].positions(), &[3, 4, 5]);
        assert_eq!(OccupationConfig::all(3, 0).len(), 1);
        let x = OccupationConfig::new(5, vec![2, 3, 5]).unwrap();
        assert_eq!(x.complement().positions(), &[1, 4]);
        assert_eq!(x.mask(), 0b10110);
    }

    #[test]
    fn params_reject_degenerate_values() {
        assert!(ModelParams::new(int(1), int(3)).is_err());
        assert!(ModelParams::new(int(-1), int(3)).is_err());
        assert!(ModelParams::new(int(2), int(-1)).is_err());
        assert!(ModelParams::new(int(0), int(3)).is_err());
    }
}
