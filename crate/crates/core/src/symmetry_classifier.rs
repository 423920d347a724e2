//! Assignment of rotational and nuclear-spin states to permutation subspaces.
//!
//! The rotational part of a level is classified from the phase it picks up
//! under the rotations equivalent to permutations: an in-plane rotation by
//! `2 pi / 3` (a three-cycle) and, for `K = 0`, a half-turn about an in-plane
//! axis (an exchange; combined with inversion for C3v). The spin part is then
//! folded in with the direct-product table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group_algebra::{
    character_table, lambda_minus, lambda_plus, ClassLabel, Irrep, IrrepContent, SubspaceLabel,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("invalid quantum numbers: |K| = {} exceeds J = {j}", k.unsigned_abs())]
    KExceedsJ { j: u32, k: i32 },
    #[error("total nuclear spin I must be \"1/2\" or \"3/2\", got \"{0}\"")]
    InvalidTotalSpin(String),
    #[error("nuclear spin must be \"0\" or \"1/2\", got \"{0}\"")]
    InvalidNuclearSpin(String),
    #[error("inversion species must be \"s\" or \"a\", got \"{0}\"")]
    InvalidSpecies(String),
    #[error("total nuclear spin I is only defined for spin-1/2 nuclei")]
    UnexpectedTotalSpin,
    #[error("inversion species is only defined for C3v molecules")]
    UnexpectedSpecies,
    #[error("K = 0 states of a C3v molecule need an inversion species (s or a)")]
    MissingSpecies,
    #[error("expected a K = 0 state, got K = {0}")]
    NotKZero(i32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointGroup {
    D3h,
    C3v,
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointGroup::D3h => "D3h",
            PointGroup::C3v => "C3v",
        })
    }
}

/// Spin of each identical nucleus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum NuclearSpin {
    Zero,
    Half,
}

impl FromStr for NuclearSpin {
    type Err = ClassifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(NuclearSpin::Zero),
            "1/2" => Ok(NuclearSpin::Half),
            other => Err(ClassifyError::InvalidNuclearSpin(other.to_string())),
        }
    }
}

impl TryFrom<String> for NuclearSpin {
    type Error = ClassifyError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<NuclearSpin> for String {
    fn from(s: NuclearSpin) -> String {
        s.to_string()
    }
}

impl fmt::Display for NuclearSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NuclearSpin::Zero => "0",
            NuclearSpin::Half => "1/2",
        })
    }
}

/// Total nuclear spin `I` of three spin-1/2 nuclei.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TotalSpin {
    Half,
    ThreeHalves,
}

impl TotalSpin {
    pub const ALL: [TotalSpin; 2] = [TotalSpin::Half, TotalSpin::ThreeHalves];

    /// `2I + 1`
    pub fn multiplicity(self) -> u32 {
        match self {
            TotalSpin::Half => 2,
            TotalSpin::ThreeHalves => 4,
        }
    }
}

impl FromStr for TotalSpin {
    type Err = ClassifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1/2" => Ok(TotalSpin::Half),
            "3/2" => Ok(TotalSpin::ThreeHalves),
            other => Err(ClassifyError::InvalidTotalSpin(other.to_string())),
        }
    }
}

impl TryFrom<String> for TotalSpin {
    type Error = ClassifyError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<TotalSpin> for String {
    fn from(s: TotalSpin) -> String {
        s.to_string()
    }
}

impl fmt::Display for TotalSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TotalSpin::Half => "1/2",
            TotalSpin::ThreeHalves => "3/2",
        })
    }
}

/// Symmetry under spatial inversion of a C3v inversion-doublet component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InversionSpecies {
    None,
    S,
    A,
}

impl InversionSpecies {
    pub fn label(self) -> &'static str {
        match self {
            InversionSpecies::None => "-",
            InversionSpecies::S => "s",
            InversionSpecies::A => "a",
        }
    }

    /// The opposite-parity component; `None` maps to itself.
    pub fn partner(self) -> InversionSpecies {
        match self {
            InversionSpecies::None => InversionSpecies::None,
            InversionSpecies::S => InversionSpecies::A,
            InversionSpecies::A => InversionSpecies::S,
        }
    }
}

impl FromStr for InversionSpecies {
    type Err = ClassifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "s" => Ok(InversionSpecies::S),
            "a" => Ok(InversionSpecies::A),
            other => Err(ClassifyError::InvalidSpecies(other.to_string())),
        }
    }
}

impl fmt::Display for InversionSpecies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RotationalState {
    pub j: u32,
    pub k: i32,
    pub species: InversionSpecies,
    pub total_spin: Option<TotalSpin>,
}

impl RotationalState {
    pub fn new(j: u32, k: i32) -> Self {
        RotationalState { j, k, species: InversionSpecies::None, total_spin: None }
    }

    pub fn with_species(mut self, species: InversionSpecies) -> Self {
        self.species = species;
        self
    }

    pub fn with_total_spin(mut self, total_spin: TotalSpin) -> Self {
        self.total_spin = Some(total_spin);
        self
    }

    pub fn check_k(&self) -> Result<(), ClassifyError> {
        if self.k.unsigned_abs() > self.j {
            return Err(ClassifyError::KExceedsJ { j: self.j, k: self.k });
        }
        Ok(())
    }

    /// Checks quantum numbers against the molecule's geometry and nuclear spin.
    pub fn validate(&self, point_group: PointGroup, spin: NuclearSpin) -> Result<(), ClassifyError> {
        self.check_k()?;
        match (point_group, self.species) {
            (PointGroup::D3h, InversionSpecies::None) => {}
            (PointGroup::D3h, _) => return Err(ClassifyError::UnexpectedSpecies),
            (PointGroup::C3v, InversionSpecies::None) if self.k == 0 => return Err(ClassifyError::MissingSpecies),
            (PointGroup::C3v, _) => {}
        }
        if spin == NuclearSpin::Zero && self.total_spin.is_some() {
            return Err(ClassifyError::UnexpectedTotalSpin);
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ForbiddenBy {
    None,
    #[serde(rename = "SP")]
    Sp,
    #[serde(rename = "SS")]
    Ss,
    #[serde(rename = "SP_and_SS")]
    SpAndSs,
}

impl ForbiddenBy {
    pub fn sp(self) -> bool {
        matches!(self, ForbiddenBy::Sp | ForbiddenBy::SpAndSs)
    }

    pub fn ss(self) -> bool {
        matches!(self, ForbiddenBy::Ss | ForbiddenBy::SpAndSs)
    }

    pub fn is_forbidden(self) -> bool {
        self != ForbiddenBy::None
    }

    fn from_flags(sp: bool, ss: bool) -> Self {
        match (sp, ss) {
            (false, false) => ForbiddenBy::None,
            (true, false) => ForbiddenBy::Sp,
            (false, true) => ForbiddenBy::Ss,
            (true, true) => ForbiddenBy::SpAndSs,
        }
    }
}

impl fmt::Display for ForbiddenBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenBy::None => "none",
            ForbiddenBy::Sp => "SP",
            ForbiddenBy::Ss => "SS",
            ForbiddenBy::SpAndSs => "SP, SS",
        })
    }
}

/// Verdict restricted to one total-spin sector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinComponent {
    pub total_spin: TotalSpin,
    pub subspaces: BTreeSet<SubspaceLabel>,
    pub forbidden_by: ForbiddenBy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryAssignment {
    pub subspaces: BTreeSet<SubspaceLabel>,
    pub forbidden_by: ForbiddenBy,
    /// Per-`I` breakdown for spin-1/2 nuclei; empty for spin 0.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub spin_components: Vec<SpinComponent>,
}

impl fmt::Display for SymmetryAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.subspaces.iter().map(|s| s.to_string()).collect();
        write!(f, "{}; forbidden by: {}", labels.join(", "), self.forbidden_by)
    }
}

/// `+1` or `-1`, the sense of a rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn value(self) -> i32 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

/// A unit-modulus phase, built only from exact cube and square roots of unity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseFactor(Complex64);

impl PhaseFactor {
    pub const ONE: PhaseFactor = PhaseFactor(Complex64 { re: 1.0, im: 0.0 });
    pub const MINUS_ONE: PhaseFactor = PhaseFactor(Complex64 { re: -1.0, im: 0.0 });

    pub fn value(&self) -> Complex64 {
        self.0
    }

    fn negate(self) -> PhaseFactor {
        PhaseFactor(-self.0)
    }
}

/// `exp(i eps 2 pi K / 3)`, the phase of a state under an in-plane rotation
/// by `eps 2 pi / 3`.
pub fn rotation_phase_inplane(k: i32, epsilon: Epsilon) -> PhaseFactor {
    match (k * epsilon.value()).rem_euclid(3) {
        0 => PhaseFactor::ONE,
        1 => PhaseFactor(lambda_plus()),
        _ => PhaseFactor(lambda_minus()),
    }
}

/// `exp(i eps pi J)` for a half-turn about an in-plane axis, with the extra
/// sign `-1` for the `a` inversion species. Only meaningful for `K = 0`.
pub fn rotation_phase_axis(j: u32, _epsilon: Epsilon, species: InversionSpecies) -> PhaseFactor {
    // exp(+i pi J) == exp(-i pi J)
    let phase = if j.is_multiple_of(2) { PhaseFactor::ONE } else { PhaseFactor::MINUS_ONE };
    match species {
        InversionSpecies::A => phase.negate(),
        _ => phase,
    }
}

/// Irrep content of the rotational part of a level.
///
/// For `K != 0` this is the representation carried by the degenerate pair
/// `{|K>, |-K>}`; for `K = 0` it is one-dimensional. For C3v molecules with
/// `K != 0` the species does not enter.
pub fn rotational_content(
    j: u32,
    k: i32,
    species: InversionSpecies,
    point_group: PointGroup,
) -> Result<IrrepContent, ClassifyError> {
    RotationalState { j, k, species, total_spin: None }.check_k()?;
    if rotation_phase_inplane(k, Epsilon::Plus) != PhaseFactor::ONE {
        // phase 1 is the only one available to H+ and H-
        return Ok(IrrepContent::single(Irrep::E));
    }
    if k != 0 {
        return Ok(IrrepContent::single(Irrep::A1) + IrrepContent::single(Irrep::A2));
    }
    let species = match point_group {
        PointGroup::D3h => {
            if species != InversionSpecies::None {
                return Err(ClassifyError::UnexpectedSpecies);
            }
            species
        }
        PointGroup::C3v => {
            if species == InversionSpecies::None {
                return Err(ClassifyError::MissingSpecies);
            }
            species
        }
    };
    if rotation_phase_axis(j, Epsilon::Plus, species) == PhaseFactor::ONE {
        Ok(IrrepContent::single(Irrep::A1))
    } else {
        Ok(IrrepContent::single(Irrep::A2))
    }
}

/// Irrep content of the nuclear-spin space, optionally restricted to one `I`.
pub fn spin_content(spin: NuclearSpin, total_spin: Option<TotalSpin>) -> IrrepContent {
    match (spin, total_spin) {
        (NuclearSpin::Zero, _) => IrrepContent::single(Irrep::A1),
        (NuclearSpin::Half, Some(TotalSpin::ThreeHalves)) => IrrepContent { a1: 4, a2: 0, e: 0 },
        (NuclearSpin::Half, Some(TotalSpin::Half)) => IrrepContent { a1: 0, a2: 0, e: 2 },
        (NuclearSpin::Half, None) => IrrepContent { a1: 4, a2: 0, e: 2 },
    }
}

/// The irrep the total state must carry: symmetric for bosons, antisymmetric
/// for fermions.
pub fn statistics_target(spin: NuclearSpin) -> Irrep {
    match spin {
        NuclearSpin::Zero => Irrep::A1,
        NuclearSpin::Half => Irrep::A2,
    }
}

fn wrong_statistics(spin: NuclearSpin) -> Irrep {
    match statistics_target(spin) {
        Irrep::A1 => Irrep::A2,
        _ => Irrep::A1,
    }
}

/// Subspaces of the spin space of three spin-1/2 nuclei, with `(I, dim)`
/// for each multiplet they hold.
pub fn spin_space_decomposition() -> BTreeMap<SubspaceLabel, Vec<(TotalSpin, u32)>> {
    BTreeMap::from([
        (SubspaceLabel::Hplus, vec![(TotalSpin::ThreeHalves, 4)]),
        (SubspaceLabel::Hminus, vec![]),
        (SubspaceLabel::Hprime, vec![(TotalSpin::Half, 2), (TotalSpin::Half, 2)]),
    ])
}

/// Direct-product table for the coarse labels `Hplus`, `Hminus`, `Hprime`.
/// `Hprime1`/`Hprime2` are treated as `Hprime`.
pub fn product_decompose(a: SubspaceLabel, b: SubspaceLabel) -> Vec<SubspaceLabel> {
    use SubspaceLabel::*;
    match (a.coarse(), b.coarse()) {
        (Hplus, x) | (x, Hplus) => vec![x],
        (Hminus, Hminus) => vec![Hplus],
        (Hminus, Hprime) | (Hprime, Hminus) => vec![Hprime],
        (Hprime, Hprime) => vec![Hplus, Hminus, Hprime],
        _ => unreachable!("coarse labels only"),
    }
}

fn product_set(a: &BTreeSet<SubspaceLabel>, b: &BTreeSet<SubspaceLabel>) -> BTreeSet<SubspaceLabel> {
    a.iter().flat_map(|&x| b.iter().flat_map(move |&y| product_decompose(x, y))).collect()
}

/// Verdict for a set of total subspaces under the statistics of `spin`.
pub fn verdict(subspaces: &BTreeSet<SubspaceLabel>, spin: NuclearSpin) -> ForbiddenBy {
    if subspaces.contains(&statistics_target(spin).subspace()) {
        return ForbiddenBy::None;
    }
    ForbiddenBy::from_flags(
        subspaces.contains(&SubspaceLabel::Hprime),
        subspaces.contains(&wrong_statistics(spin).subspace()),
    )
}

fn spin_subspaces(total_spin: TotalSpin) -> BTreeSet<SubspaceLabel> {
    match total_spin {
        TotalSpin::ThreeHalves => BTreeSet::from([SubspaceLabel::Hplus]),
        TotalSpin::Half => BTreeSet::from([SubspaceLabel::Hprime]),
    }
}

/// Classifies a level whose rotational(-vibrational) subspaces are already
/// known. Used for states carrying a non-trivial vibrational factor.
pub fn classify_content(
    rovib: &BTreeSet<SubspaceLabel>,
    spin: NuclearSpin,
    total_spin: Option<TotalSpin>,
) -> Result<SymmetryAssignment, ClassifyError> {
    match spin {
        NuclearSpin::Zero => {
            if total_spin.is_some() {
                return Err(ClassifyError::UnexpectedTotalSpin);
            }
            Ok(SymmetryAssignment {
                subspaces: rovib.clone(),
                forbidden_by: verdict(rovib, spin),
                spin_components: Vec::new(),
            })
        }
        NuclearSpin::Half => {
            let spins: Vec<TotalSpin> = match total_spin {
                Some(i) => vec![i],
                None => TotalSpin::ALL.to_vec(),
            };
            let components: Vec<SpinComponent> = spins
                .into_iter()
                .map(|i| {
                    let subspaces = product_set(&spin_subspaces(i), rovib);
                    let forbidden_by = verdict(&subspaces, spin);
                    SpinComponent { total_spin: i, subspaces, forbidden_by }
                })
                .collect();
            let subspaces: BTreeSet<SubspaceLabel> =
                components.iter().flat_map(|c| c.subspaces.iter().copied()).collect();
            // a level is allowed as soon as one of its I components is
            let forbidden_by = if components.iter().any(|c| !c.forbidden_by.is_forbidden()) {
                ForbiddenBy::None
            } else {
                ForbiddenBy::from_flags(
                    components.iter().any(|c| c.forbidden_by.sp()),
                    components.iter().any(|c| c.forbidden_by.ss()),
                )
            };
            Ok(SymmetryAssignment { subspaces, forbidden_by, spin_components: components })
        }
    }
}

/// General entry point: classifies any valid state of a molecule.
pub fn classify(
    state: &RotationalState,
    point_group: PointGroup,
    spin: NuclearSpin,
) -> Result<SymmetryAssignment, ClassifyError> {
    state.validate(point_group, spin)?;
    let rot = rotational_content(state.j, state.k, state.species, point_group)?;
    classify_content(&rot.subspaces(), spin, state.total_spin)
}

/// Spin-0 nuclei, planar molecule.
pub fn classify_spin0_planar(j: u32, k: i32) -> Result<SymmetryAssignment, ClassifyError> {
    classify(&RotationalState::new(j, k), PointGroup::D3h, NuclearSpin::Zero)
}

/// Spin-1/2 nuclei, planar molecule. Without `I` the result is the union
/// over both `I` values, with per-`I` detail in `spin_components`.
pub fn classify_spin_half_planar(
    j: u32,
    k: i32,
    total_spin: Option<TotalSpin>,
) -> Result<SymmetryAssignment, ClassifyError> {
    let state = RotationalState { j, k, species: InversionSpecies::None, total_spin };
    classify(&state, PointGroup::D3h, NuclearSpin::Half)
}

/// `K = 0` states of a pyramidal molecule with resolved inversion doubling.
pub fn classify_c3v_k0(
    j: u32,
    species: InversionSpecies,
    spin: NuclearSpin,
    total_spin: Option<TotalSpin>,
) -> Result<SymmetryAssignment, ClassifyError> {
    if species == InversionSpecies::None {
        return Err(ClassifyError::MissingSpecies);
    }
    let state = RotationalState { j, k: 0, species, total_spin };
    classify(&state, PointGroup::C3v, spin)
}

fn spin_character(spin: NuclearSpin, total_spin: Option<TotalSpin>, class: ClassLabel) -> i32 {
    match (spin, total_spin) {
        (NuclearSpin::Zero, _) => 1,
        (NuclearSpin::Half, None) => {
            let cycles = match class {
                ClassLabel::Identity => 3,
                ClassLabel::Transposition => 2,
                ClassLabel::ThreeCycle => 1,
            };
            1 << cycles
        }
        (NuclearSpin::Half, Some(i)) => spin_content(spin, Some(i)).character()[class_index(class)],
    }
}

fn class_index(class: ClassLabel) -> usize {
    ClassLabel::ALL.iter().position(|&c| c == class).expect("known class")
}

/// Number of independent rotation x spin states of a level that carry the
/// symmetry required by the statistics of the nuclei.
///
/// The level is the degenerate `±K` pair for `K != 0`. If `state.total_spin`
/// is set, only that spin sector is counted.
pub fn spin_statistical_weight(
    state: &RotationalState,
    point_group: PointGroup,
    spin: NuclearSpin,
) -> Result<u32, ClassifyError> {
    state.validate(point_group, spin)?;
    let rot = rotational_content(state.j, state.k, state.species, point_group)?.character();
    let table = character_table();
    let target = statistics_target(spin);
    let sum: i32 = ClassLabel::ALL
        .iter()
        .map(|&c| {
            c.size() as i32 * table.chi(target, c) * rot[class_index(c)] * spin_character(spin, state.total_spin, c)
        })
        .sum();
    debug_assert!(sum >= 0 && sum % 6 == 0);
    Ok((sum / 6) as u32)
}

/// Dimensions of the statistics-allowed and violating sectors of a level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SectorDimensions {
    /// States with the symmetry required by spin-statistics.
    pub allowed: u32,
    /// States in the mixed-symmetry subspace `H'`.
    pub sp_violating: u32,
    /// States with the opposite one-dimensional symmetry.
    pub ss_violating: u32,
}

impl SectorDimensions {
    pub fn from_content(total: &IrrepContent, spin: NuclearSpin) -> Self {
        SectorDimensions {
            allowed: total.sector_dimension(statistics_target(spin)),
            sp_violating: total.sector_dimension(Irrep::E),
            ss_violating: total.sector_dimension(wrong_statistics(spin)),
        }
    }

    /// Weight the level would carry if its violating sectors were populated;
    /// only the sectors named by `forbidden_by` count.
    pub fn violating_weight(&self, forbidden_by: ForbiddenBy) -> u32 {
        let mut w = 0;
        if forbidden_by.sp() {
            w += self.sp_violating;
        }
        if forbidden_by.ss() {
            w += self.ss_violating;
        }
        w
    }
}
