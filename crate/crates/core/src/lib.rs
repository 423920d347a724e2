//! Permutation symmetry of three identical nuclei and the infrared spectra of
//! molecules that contain them.
//!
//! * [`group_algebra`]: S3, its regular representation and invariant subspaces.
//! * [`symmetry_classifier`]: which subspace a rotational / spin state lives in
//!   and whether the symmetrization postulate or spin-statistics forbids it.
//! * [`spectrum_engine`]: symmetric-top energies, populations and line lists
//!   with a tunable population of symmetry-violating molecules.

pub mod group_algebra;
pub mod molecule;
pub mod output;
pub mod spectrum_engine;
pub mod symmetry_classifier;

pub use group_algebra::{Permutation, RepMatrix, SubspaceLabel, SymVector};
pub use molecule::{Band, BandType, MoleculeSpec};
pub use spectrum_engine::{SpectralLine, ThermalEnsemble, ViolationModel};
pub use symmetry_classifier::{
    ForbiddenBy, InversionSpecies, NuclearSpin, PointGroup, RotationalState, SymmetryAssignment, TotalSpin,
};
