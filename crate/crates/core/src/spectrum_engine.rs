//! Rigid symmetric-top levels, thermal populations and vibrational-band line
//! lists.
//!
//! Populations are counted per rotational level: a `K != 0` level is the
//! degenerate `±K` pair, and its statistical weight already counts the states
//! of both signs. Levels that the symmetry rules forbid are populated with a
//! fraction `beta` of the dimension of their violating sectors, so `beta = 0`
//! reproduces the ordinary spectrum.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group_algebra::{Irrep, IrrepContent};
use crate::molecule::{Band, BandType, MoleculeSpec};
use crate::symmetry_classifier::{
    classify_content, rotational_content, spin_content, ClassifyError, ForbiddenBy, InversionSpecies, NuclearSpin,
    PointGroup, RotationalState, SectorDimensions, TotalSpin,
};

/// `hc / k_B` in cm K.
pub const SECOND_RADIATION_CONSTANT: f64 = 1.438_776_877;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("temperature must be positive, got {0} K")]
    NonPositiveTemperature(f64),
    #[error("beta must lie in [0, 1], got {0}")]
    InvalidBeta(f64),
    #[error("unknown band `{band}` for molecule `{molecule}`")]
    UnknownBand { molecule: String, band: String },
    #[error("branch {branch:?} is not defined for J = {j}")]
    InvalidBranch { j: u32, branch: Branch },
    #[error("partition function vanishes: no populated level with J <= {0}")]
    EmptyPartitionFunction(u32),
}

/// Fraction of the sample made of symmetry-violating molecules.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ViolationModel {
    beta: f64,
}

impl ViolationModel {
    pub const NONE: ViolationModel = ViolationModel { beta: 0.0 };

    pub fn new(beta: f64) -> Result<Self, SpectrumError> {
        if !(0.0..=1.0).contains(&beta) {
            return Err(SpectrumError::InvalidBeta(beta));
        }
        Ok(ViolationModel { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

impl Default for ViolationModel {
    fn default() -> Self {
        ViolationModel::NONE
    }
}

/// Temperature, truncation and the partition function they give for one
/// molecule and violation model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ThermalEnsemble {
    pub temperature: f64,
    pub jmax: u32,
    pub partition_function: f64,
    violation: ViolationModel,
}

impl ThermalEnsemble {
    pub fn new(
        molecule: &MoleculeSpec,
        temperature: f64,
        jmax: u32,
        violation: &ViolationModel,
    ) -> Result<Self, SpectrumError> {
        let z = partition_function(molecule, temperature, jmax, violation)?;
        if z <= 0.0 {
            return Err(SpectrumError::EmptyPartitionFunction(jmax));
        }
        Ok(ThermalEnsemble { temperature, jmax, partition_function: z, violation: *violation })
    }

    /// The violation model the partition function was summed with.
    pub fn violation(&self) -> ViolationModel {
        self.violation
    }

    fn normalization(&self, molecule: &MoleculeSpec, violation: &ViolationModel) -> Result<f64, SpectrumError> {
        if *violation == self.violation {
            return Ok(self.partition_function);
        }
        let z = partition_function(molecule, self.temperature, self.jmax, violation)?;
        if z <= 0.0 {
            return Err(SpectrumError::EmptyPartitionFunction(self.jmax));
        }
        Ok(z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    /// `J' = J - 1`
    P,
    /// `J' = J`
    Q,
    /// `J' = J + 1`
    R,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::P, Branch::Q, Branch::R];

    pub fn upper_j(self, j: u32) -> Option<u32> {
        match self {
            Branch::P => j.checked_sub(1),
            Branch::Q => Some(j),
            Branch::R => Some(j + 1),
        }
    }
}

/// Change of the signed `K` in a transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeltaK {
    Zero,
    Up,
    Down,
}

impl DeltaK {
    pub fn value(self) -> i32 {
        match self {
            DeltaK::Zero => 0,
            DeltaK::Up => 1,
            DeltaK::Down => -1,
        }
    }

    pub fn for_band(band_type: BandType) -> &'static [DeltaK] {
        match band_type {
            BandType::Parallel => &[DeltaK::Zero],
            BandType::Perpendicular => &[DeltaK::Up, DeltaK::Down],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralLine {
    /// Lower level; `k` is `|K|`.
    pub lower: RotationalState,
    /// Upper level; `k` is `|K|`.
    pub upper: RotationalState,
    pub band: String,
    /// cm^-1
    pub frequency: f64,
    pub relative_intensity: f64,
    pub sp_forbidden: bool,
    pub ss_forbidden: bool,
}

impl SpectralLine {
    pub fn forbidden_by(&self) -> ForbiddenBy {
        match (self.sp_forbidden, self.ss_forbidden) {
            (false, false) => ForbiddenBy::None,
            (true, false) => ForbiddenBy::Sp,
            (false, true) => ForbiddenBy::Ss,
            (true, true) => ForbiddenBy::SpAndSs,
        }
    }

    fn sort_key_cmp(&self, other: &SpectralLine) -> Ordering {
        self.frequency
            .total_cmp(&other.frequency)
            .then(self.lower.j.cmp(&other.lower.j))
            .then(self.lower.k.cmp(&other.lower.k))
            .then(self.lower.species.cmp(&other.lower.species))
            .then(self.upper.j.cmp(&other.upper.j))
            .then(self.upper.k.cmp(&other.upper.k))
            .then(self.upper.species.cmp(&other.upper.species))
    }
}

/// `B J(J+1) - (B - C) K^2` in cm^-1.
pub fn rot_energy(molecule: &MoleculeSpec, j: u32, k: i32) -> Result<f64, SpectrumError> {
    RotationalState::new(j, k).check_k()?;
    let (jf, kf) = (j as f64, k as f64);
    Ok(molecule.b * jf * (jf + 1.0) - (molecule.b - molecule.c) * kf * kf)
}

/// Rotational energy plus the inversion offset: `s` sits `Δ/2` below the
/// rigid-rotor value and `a` `Δ/2` above it.
pub fn level_energy(molecule: &MoleculeSpec, j: u32, k: i32, species: InversionSpecies) -> Result<f64, SpectrumError> {
    let offset = match species {
        InversionSpecies::None => 0.0,
        InversionSpecies::S => -molecule.half_splitting(),
        InversionSpecies::A => molecule.half_splitting(),
    };
    Ok(rot_energy(molecule, j, k)? + offset)
}

fn species_for(point_group: PointGroup) -> &'static [InversionSpecies] {
    match point_group {
        PointGroup::D3h => &[InversionSpecies::None],
        PointGroup::C3v => &[InversionSpecies::S, InversionSpecies::A],
    }
}

/// Every level `(J, |K|, species)` with `J <= jmax`.
pub fn levels(molecule: &MoleculeSpec, jmax: u32) -> Vec<RotationalState> {
    let species = species_for(molecule.point_group);
    let mut out = Vec::new();
    for j in 0..=jmax {
        for k in 0..=j as i32 {
            for &s in species {
                out.push(RotationalState::new(j, k).with_species(s));
            }
        }
    }
    out
}

/// Permutation symmetry of the vibrational upper state of a fundamental band,
/// as seen by the rotational subgroup that realizes S3.
///
/// A parallel band of a planar molecule comes from an out-of-plane vibration
/// that is odd under the in-plane half-turns (A2). For a pyramidal molecule
/// the exchange is a half-turn combined with inversion, which the `s`/`a`
/// alternation already accounts for, so the vibration is totally symmetric.
/// Perpendicular bands come from degenerate (E) vibrations.
pub fn band_vibrational_irrep(point_group: PointGroup, band_type: BandType) -> Irrep {
    match (point_group, band_type) {
        (PointGroup::D3h, BandType::Parallel) => Irrep::A2,
        (PointGroup::C3v, BandType::Parallel) => Irrep::A1,
        (_, BandType::Perpendicular) => Irrep::E,
    }
}

/// Rotation x vibration content of a level in a vibrational state of symmetry `vib`.
pub fn rovib_content(
    molecule: &MoleculeSpec,
    state: &RotationalState,
    vib: Irrep,
) -> Result<IrrepContent, SpectrumError> {
    let rot = rotational_content(state.j, state.k, state.species, molecule.point_group)?;
    Ok(rot.tensor(&IrrepContent::single(vib)))
}

/// Statistical weight and verdict of a level of given rovibrational content.
fn weight_from_content(
    rovib: &IrrepContent,
    spin: NuclearSpin,
    total_spin: Option<TotalSpin>,
    violation: &ViolationModel,
) -> Result<(f64, ForbiddenBy), SpectrumError> {
    let verdict = classify_content(&rovib.subspaces(), spin, total_spin)?.forbidden_by;
    let dims = SectorDimensions::from_content(&rovib.tensor(&spin_content(spin, total_spin)), spin);
    let weight = if verdict.is_forbidden() {
        violation.beta() * dims.violating_weight(verdict) as f64
    } else {
        dims.allowed as f64
    };
    Ok((weight, verdict))
}

/// Statistical weight of the level containing `state` in the ground
/// vibrational state, including the `beta`-scaled weight of forbidden levels.
pub fn level_weight(
    molecule: &MoleculeSpec,
    state: &RotationalState,
    violation: &ViolationModel,
) -> Result<f64, SpectrumError> {
    state.validate(molecule.point_group, molecule.nuclear_spin)?;
    let rovib = rovib_content(molecule, state, Irrep::A1)?;
    Ok(weight_from_content(&rovib, molecule.nuclear_spin, state.total_spin, violation)?.0)
}

fn boltzmann(energy: f64, temperature: f64) -> f64 {
    (-energy * SECOND_RADIATION_CONSTANT / temperature).exp()
}

fn check_temperature(temperature: f64) -> Result<(), SpectrumError> {
    if temperature.is_nan() || temperature <= 0.0 {
        return Err(SpectrumError::NonPositiveTemperature(temperature));
    }
    Ok(())
}

/// Sum of `g (2J+1) exp(-E / kT)` over all levels with `J <= jmax`.
pub fn partition_function(
    molecule: &MoleculeSpec,
    temperature: f64,
    jmax: u32,
    violation: &ViolationModel,
) -> Result<f64, SpectrumError> {
    check_temperature(temperature)?;
    let mut z = 0.0;
    for level in levels(molecule, jmax) {
        let g = level_weight(molecule, &level, violation)?;
        if g == 0.0 {
            continue;
        }
        let e = level_energy(molecule, level.j, level.k, level.species)?;
        z += g * (2 * level.j + 1) as f64 * boltzmann(e, temperature);
    }
    Ok(z)
}

/// Smallest `jmax` for which adding ten more `J` values changes the partition
/// function by less than `rel_tol`, searched up to `limit`.
pub fn converged_jmax(
    molecule: &MoleculeSpec,
    temperature: f64,
    violation: &ViolationModel,
    rel_tol: f64,
    limit: u32,
) -> Result<Option<u32>, SpectrumError> {
    check_temperature(temperature)?;
    // running sums per J so each candidate costs O(1)
    let mut by_j = Vec::with_capacity(limit as usize + 11);
    for j in 0..=limit + 10 {
        let mut s = 0.0;
        for k in 0..=j as i32 {
            for &sp in species_for(molecule.point_group) {
                let level = RotationalState::new(j, k).with_species(sp);
                let g = level_weight(molecule, &level, violation)?;
                if g > 0.0 {
                    s += g * (2 * j + 1) as f64 * boltzmann(level_energy(molecule, j, k, sp)?, temperature);
                }
            }
        }
        by_j.push(s);
    }
    let mut cumulative = Vec::with_capacity(by_j.len());
    let mut acc = 0.0;
    for s in &by_j {
        acc += s;
        cumulative.push(acc);
    }
    for jmax in 0..=limit as usize {
        let (z, z10) = (cumulative[jmax], cumulative[jmax + 10]);
        if z > 0.0 && (z10 - z) / z < rel_tol {
            return Ok(Some(jmax as u32));
        }
    }
    Ok(None)
}

/// Fractional population of the level that contains `state` (both signs of
/// `K`). With `state.total_spin` set, only that nuclear-spin sector counts.
pub fn state_population(
    molecule: &MoleculeSpec,
    state: &RotationalState,
    ensemble: &ThermalEnsemble,
    violation: &ViolationModel,
) -> Result<f64, SpectrumError> {
    check_temperature(ensemble.temperature)?;
    let g = level_weight(molecule, state, violation)?;
    let z = ensemble.normalization(molecule, violation)?;
    let e = level_energy(molecule, state.j, state.k, state.species)?;
    Ok(g * (2 * state.j + 1) as f64 * boltzmann(e, ensemble.temperature) / z)
}

/// Line-strength factor for one signed lower state `(J, K)`.
///
/// Parallel factors sum to one over P, Q and R. Perpendicular factors are
/// the usual `dK = ±1` products divided by four, so they also sum to one
/// over the six `(branch, dK)` combinations. Factors vanish where the upper
/// `|K'|` would exceed `J'`.
pub fn honl_london(j: u32, k: i32, branch: Branch, delta_k: DeltaK) -> Result<f64, SpectrumError> {
    RotationalState::new(j, k).check_k()?;
    if j == 0 && branch != Branch::R {
        return Err(SpectrumError::InvalidBranch { j, branch });
    }
    let jf = j as f64;
    let factor = match delta_k {
        DeltaK::Zero => {
            let k2 = (k as f64).powi(2);
            match branch {
                Branch::R => ((jf + 1.0).powi(2) - k2) / ((jf + 1.0) * (2.0 * jf + 1.0)),
                Branch::Q => k2 / (jf * (jf + 1.0)),
                Branch::P => (jf * jf - k2) / (jf * (2.0 * jf + 1.0)),
            }
        }
        DeltaK::Up | DeltaK::Down => {
            // sK is K measured along the direction of the change
            let sk = (delta_k.value() * k) as f64;
            let raw = match branch {
                Branch::R => (jf + 2.0 + sk) * (jf + 1.0 + sk) / ((jf + 1.0) * (2.0 * jf + 1.0)),
                Branch::Q => (jf + 1.0 + sk) * (jf - sk) / (jf * (jf + 1.0)),
                Branch::P => (jf - 1.0 - sk) * (jf - sk) / (jf * (2.0 * jf + 1.0)),
            };
            raw / 4.0
        }
    };
    Ok(factor.max(0.0))
}

/// Whether a transition from `lower` to `upper` may occur, and in which
/// symmetry sector: the part of the lower level's content that the upper
/// level (including the band's vibrational symmetry) shares.
fn shared_content(
    molecule: &MoleculeSpec,
    lower: &RotationalState,
    upper: &RotationalState,
    vib: Irrep,
) -> Result<IrrepContent, SpectrumError> {
    let lo = rovib_content(molecule, lower, Irrep::A1)?;
    let up = rovib_content(molecule, upper, vib)?;
    Ok(lo.restrict_to(&up))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct UpperKey {
    j: u32,
    k: u32,
    species: InversionSpecies,
}

/// Everything a single lower level needs to emit its lines.
struct BandContext<'a> {
    molecule: &'a MoleculeSpec,
    band: &'a Band,
    temperature: f64,
    z: f64,
    violation: &'a ViolationModel,
}

fn lines_from_level(ctx: &BandContext<'_>, lower: RotationalState) -> Result<Vec<SpectralLine>, SpectrumError> {
    let BandContext { molecule, band, temperature, z, violation } = *ctx;
    let (band_name, origin, band_type) = (band.name.as_str(), band.origin, band.band_type);
    let vib = band_vibrational_irrep(molecule.point_group, band_type);
    let signed_k: Vec<i32> = if lower.k == 0 { vec![0] } else { vec![lower.k, -lower.k] };
    let share = 1.0 / signed_k.len() as f64;
    let upper_species = lower.species.partner();

    // line strengths summed over the signed components of the lower level
    let mut strengths: BTreeMap<UpperKey, f64> = BTreeMap::new();
    for &k in &signed_k {
        for &dk in DeltaK::for_band(band_type) {
            let k_up = k + dk.value();
            for branch in Branch::ALL {
                if lower.j == 0 && branch != Branch::R {
                    continue;
                }
                let Some(j_up) = branch.upper_j(lower.j) else { continue };
                if k_up.unsigned_abs() > j_up {
                    continue;
                }
                let s = honl_london(lower.j, k, branch, dk)?;
                if s > 0.0 {
                    let key = UpperKey { j: j_up, k: k_up.unsigned_abs(), species: upper_species };
                    *strengths.entry(key).or_insert(0.0) += share * s;
                }
            }
        }
    }

    let e_lo = level_energy(molecule, lower.j, lower.k, lower.species)?;
    let boltz = (2 * lower.j + 1) as f64 * boltzmann(e_lo, temperature) / z;
    let mut out = Vec::new();
    for (key, strength) in strengths {
        let upper = RotationalState::new(key.j, key.k as i32).with_species(key.species);
        let shared = shared_content(molecule, &lower, &upper, vib)?;
        if shared.is_empty() {
            // different symmetry classes: no transition
            continue;
        }
        let (g, verdict) = weight_from_content(&shared, molecule.nuclear_spin, None, violation)?;
        let intensity = g * boltz * strength;
        if intensity <= 0.0 {
            continue;
        }
        let e_up = level_energy(molecule, upper.j, upper.k, upper.species)?;
        let frequency = origin + e_up - e_lo;
        if frequency <= 0.0 {
            continue;
        }
        out.push(SpectralLine {
            lower,
            upper,
            band: band_name.to_string(),
            frequency,
            relative_intensity: intensity,
            sp_forbidden: verdict.sp(),
            ss_forbidden: verdict.ss(),
        });
    }
    Ok(out)
}

/// Line list of one band, sorted by frequency then lower `J` and `K`.
///
/// Intensities are lower-level population times the line-strength factor,
/// scaled so the strongest allowed line is 1 (left unscaled if the list has
/// no allowed line). Transitions between different symmetry classes are
/// never emitted, nor are lines of zero intensity.
pub fn line_list(
    molecule: &MoleculeSpec,
    band_name: &str,
    ensemble: &ThermalEnsemble,
    violation: &ViolationModel,
) -> Result<Vec<SpectralLine>, SpectrumError> {
    let band = molecule
        .band(band_name)
        .ok_or_else(|| SpectrumError::UnknownBand { molecule: molecule.name.clone(), band: band_name.to_string() })?;
    check_temperature(ensemble.temperature)?;
    let z = ensemble.normalization(molecule, violation)?;
    let ctx = BandContext { molecule, band, temperature: ensemble.temperature, z, violation };

    let per_j: Vec<Vec<SpectralLine>> = (0..=ensemble.jmax)
        .into_par_iter()
        .map(|j| {
            let mut lines = Vec::new();
            for k in 0..=j as i32 {
                for &sp in species_for(molecule.point_group) {
                    let lower = RotationalState::new(j, k).with_species(sp);
                    lines.extend(lines_from_level(&ctx, lower)?);
                }
            }
            Ok(lines)
        })
        .collect::<Result<_, SpectrumError>>()?;

    let mut lines: Vec<SpectralLine> = per_j.into_iter().flatten().collect();
    let strongest =
        lines.iter().filter(|l| !l.sp_forbidden && !l.ss_forbidden).map(|l| l.relative_intensity).fold(0.0, f64::max);
    if strongest > 0.0 {
        for line in &mut lines {
            line.relative_intensity /= strongest;
        }
    }
    lines.sort_by(|a, b| a.sort_key_cmp(b));
    Ok(lines)
}

/// Summed intensity per symmetry verdict, for per-sector reporting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct IntensityTotals {
    pub allowed: f64,
    pub sp: f64,
    pub ss: f64,
    pub sp_and_ss: f64,
}

pub fn intensity_totals(lines: &[SpectralLine]) -> IntensityTotals {
    let mut t = IntensityTotals::default();
    for l in lines {
        let slot = match l.forbidden_by() {
            ForbiddenBy::None => &mut t.allowed,
            ForbiddenBy::Sp => &mut t.sp,
            ForbiddenBy::Ss => &mut t.ss,
            ForbiddenBy::SpAndSs => &mut t.sp_and_ss,
        };
        *slot += l.relative_intensity;
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EnergyLevel {
    pub j: u32,
    pub k: u32,
    pub species: InversionSpecies,
    /// cm^-1
    pub energy: f64,
}

/// Energies of every level with `J <= jmax`, ordered by `J`, `|K|`, species.
pub fn energy_grid(molecule: &MoleculeSpec, jmax: u32) -> Vec<EnergyLevel> {
    levels(molecule, jmax)
        .into_iter()
        .map(|l| EnergyLevel {
            j: l.j,
            k: l.k as u32,
            species: l.species,
            energy: level_energy(molecule, l.j, l.k, l.species).expect("levels respect |K| <= J"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molecule::shipped;

    fn fixture() -> MoleculeSpec {
        shipped("fixture").unwrap()
    }

    #[test]
    fn energy_examples() {
        let m = fixture();
        assert_eq!(rot_energy(&m, 0, 0).unwrap(), 0.0);
        assert_eq!(rot_energy(&m, 2, 1).unwrap(), 5.5);
        assert_eq!(rot_energy(&m, 3, -3).unwrap(), 7.5);
        assert_eq!(rot_energy(&m, 3, 3).unwrap(), 7.5);
        assert!(matches!(rot_energy(&m, 1, 2), Err(SpectrumError::Classify(ClassifyError::KExceedsJ { .. }))));
    }

    #[test]
    fn inversion_offsets() {
        let m = shipped("nh3").unwrap();
        let e = rot_energy(&m, 1, 1).unwrap();
        let s = level_energy(&m, 1, 1, InversionSpecies::S).unwrap();
        let a = level_energy(&m, 1, 1, InversionSpecies::A).unwrap();
        assert!((a - s - m.inversion_splitting.unwrap()).abs() < 1e-12);
        assert!((a + s - 2.0 * e).abs() < 1e-12);
    }

    #[test]
    fn violation_model_bounds() {
        assert!(ViolationModel::new(-0.1).is_err());
        assert!(ViolationModel::new(1.5).is_err());
        assert!(ViolationModel::new(f64::NAN).is_err());
        assert_eq!(ViolationModel::new(0.25).unwrap().beta(), 0.25);
    }

    #[test]
    fn honl_london_examples() {
        for j in 1..10 {
            assert_eq!(honl_london(j, 0, Branch::Q, DeltaK::Zero).unwrap(), 0.0);
        }
        assert!((honl_london(1, 0, Branch::R, DeltaK::Zero).unwrap() - 4.0 / 6.0).abs() < 1e-15);
        assert!(matches!(honl_london(0, 0, Branch::P, DeltaK::Zero), Err(SpectrumError::InvalidBranch { .. })));
        assert!(matches!(honl_london(0, 0, Branch::Q, DeltaK::Up), Err(SpectrumError::InvalidBranch { .. })));
        assert!(honl_london(0, 0, Branch::R, DeltaK::Up).unwrap() > 0.0);
    }

    #[test]
    fn honl_london_sums_to_one() {
        for j in 0..=20u32 {
            for k in -(j as i32)..=j as i32 {
                let branches: &[Branch] = if j == 0 { &[Branch::R] } else { &Branch::ALL };
                let par: f64 = branches.iter().map(|&b| honl_london(j, k, b, DeltaK::Zero).unwrap()).sum();
                assert!((par - 1.0).abs() < 1e-12, "parallel J={j} K={k}: {par}");
                let perp: f64 = branches
                    .iter()
                    .flat_map(|&b| [DeltaK::Up, DeltaK::Down].map(|d| honl_london(j, k, b, d).unwrap()))
                    .sum();
                assert!((perp - 1.0).abs() < 1e-12, "perpendicular J={j} K={k}: {perp}");
            }
        }
    }

    #[test]
    fn partition_function_limits() {
        let m = fixture();
        let none = ViolationModel::NONE;
        assert_eq!(partition_function(&m, 296.0, 0, &none).unwrap(), 1.0);
        let cold = partition_function(&m, 1e-3, 30, &none).unwrap();
        assert!((cold - 1.0).abs() < 1e-12);
        assert!(matches!(partition_function(&m, 0.0, 3, &none), Err(SpectrumError::NonPositiveTemperature(_))));
        let mut last = 0.0;
        for jmax in 0..40 {
            let z = partition_function(&m, 296.0, jmax, &none).unwrap();
            assert!(z >= last);
            last = z;
        }
    }

    #[test]
    fn partition_function_small_beta() {
        for m in crate::molecule::shipped_molecules() {
            let z0 = partition_function(&m, 296.0, 30, &ViolationModel::NONE).unwrap();
            let z1 = partition_function(&m, 296.0, 30, &ViolationModel::new(1e-9).unwrap()).unwrap();
            assert!(((z1 - z0) / z0).abs() < 1e-8);
            assert!(z1 > z0);
        }
    }

    #[test]
    fn empty_partition_function_is_an_error() {
        let bh3 = shipped("bh3").unwrap();
        // J = 0, K = 0 is fully forbidden for three spin-1/2 nuclei
        assert!(matches!(
            ThermalEnsemble::new(&bh3, 296.0, 0, &ViolationModel::NONE),
            Err(SpectrumError::EmptyPartitionFunction(0))
        ));
    }

    #[test]
    fn populations_sum_to_one() {
        for m in crate::molecule::shipped_molecules() {
            let v = ViolationModel::new(0.01).unwrap();
            let ens = ThermalEnsemble::new(&m, 296.0, 20, &v).unwrap();
            let total: f64 = levels(&m, 20).iter().map(|l| state_population(&m, l, &ens, &v).unwrap()).sum();
            assert!((total - 1.0).abs() < 1e-12, "{}: {total}", m.name);
        }
    }

    #[test]
    fn forbidden_population_vanishes_without_violation() {
        let m = fixture();
        let ens = ThermalEnsemble::new(&m, 296.0, 10, &ViolationModel::NONE).unwrap();
        for (j, k) in [(1, 1), (2, 2), (1, 0), (4, 4)] {
            let p = state_population(&m, &RotationalState::new(j, k), &ens, &ViolationModel::NONE).unwrap();
            assert_eq!(p, 0.0, "J={j} K={k}");
        }
    }

    #[test]
    fn unknown_band() {
        let m = fixture();
        let ens = ThermalEnsemble::new(&m, 296.0, 5, &ViolationModel::NONE).unwrap();
        assert!(matches!(line_list(&m, "nu9", &ens, &ViolationModel::NONE), Err(SpectrumError::UnknownBand { .. })));
    }

    #[test]
    fn vibrational_symmetry() {
        assert_eq!(band_vibrational_irrep(PointGroup::D3h, BandType::Parallel), Irrep::A2);
        assert_eq!(band_vibrational_irrep(PointGroup::C3v, BandType::Parallel), Irrep::A1);
        assert_eq!(band_vibrational_irrep(PointGroup::C3v, BandType::Perpendicular), Irrep::E);
    }
}
