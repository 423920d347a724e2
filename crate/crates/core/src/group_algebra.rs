//! The permutation group S3 acting on three identical labels.
//!
//! Group elements act on the six orderings of `(1, 2, 3)`, which form the
//! basis `|1> = |1,2,3>`, `|2> = |1,3,2>`, `|3> = |2,1,3>`, `|4> = |2,3,1>`,
//! `|5> = |3,1,2>`, `|6> = |3,2,1>` of the regular representation. A
//! permutation `p` rearranges the *positions* of a basis tuple:
//! `p |t1,t2,t3> = |t_{p(1)}, t_{p(2)}, t_{p(3)}>`.
//!
//! The regular representation splits into the symmetric line `H+`, the
//! antisymmetric line `H-` and two copies of the two-dimensional irrep,
//! `H'1 = span{v1, v4}` and `H'2 = span{v2, v3}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::{Matrix6, Vector6};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("images {0:?} are not a bijection on {{1, 2, 3}}")]
    NotBijective([u8; 3]),
    #[error("labels ({0}, {1}) do not name a transposition of {{1, 2, 3}}")]
    BadTransposition(u8, u8),
}

/// An element of S3, stored by the images of the labels 1, 2, 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation([u8; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([1, 2, 3]);
    /// `P(1,2,3)`, equal to `P_231` in one-line notation.
    pub const CYCLE_123: Permutation = Permutation([2, 3, 1]);
    /// `P(3,2,1)`, equal to `P_312`.
    pub const CYCLE_321: Permutation = Permutation([3, 1, 2]);
    pub const SWAP_12: Permutation = Permutation([2, 1, 3]);
    pub const SWAP_13: Permutation = Permutation([3, 2, 1]);
    pub const SWAP_23: Permutation = Permutation([1, 3, 2]);

    /// All six elements, in the order of the basis `|1> .. |6>`.
    pub const ALL: [Permutation; 6] = [
        Permutation([1, 2, 3]),
        Permutation([1, 3, 2]),
        Permutation([2, 1, 3]),
        Permutation([2, 3, 1]),
        Permutation([3, 1, 2]),
        Permutation([3, 2, 1]),
    ];

    pub fn new(images: [u8; 3]) -> Result<Self, PermutationError> {
        let mut seen = [false; 3];
        for &x in &images {
            if !(1..=3).contains(&x) || seen[(x - 1) as usize] {
                return Err(PermutationError::NotBijective(images));
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Permutation(images))
    }

    /// The exchange `P(a,b)`.
    pub fn transposition(a: u8, b: u8) -> Result<Self, PermutationError> {
        if a == b || !(1..=3).contains(&a) || !(1..=3).contains(&b) {
            return Err(PermutationError::BadTransposition(a, b));
        }
        let mut images = [1, 2, 3];
        images.swap((a - 1) as usize, (b - 1) as usize);
        Ok(Permutation(images))
    }

    pub fn images(&self) -> [u8; 3] {
        self.0
    }

    /// Image of a single label.
    pub fn image(&self, label: u8) -> u8 {
        self.0[(label - 1) as usize]
    }

    /// Operator product: apply `other` first, then `self`.
    ///
    /// With the position action used by the regular representation this is
    /// the map `i -> other(self(i))`, so that
    /// `regular_rep(p.compose(q)) == regular_rep(p) * regular_rep(q)`.
    pub fn compose(self, other: Permutation) -> Permutation {
        let mut images = [0u8; 3];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = other.image(self.0[i]);
        }
        Permutation(images)
    }

    pub fn inverse(self) -> Permutation {
        let mut images = [0u8; 3];
        for (i, &x) in self.0.iter().enumerate() {
            images[(x - 1) as usize] = i as u8 + 1;
        }
        Permutation(images)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &x)| x as usize == i + 1).count()
    }

    /// Number of disjoint cycles, counting fixed points.
    pub fn cycle_count(&self) -> u32 {
        match self.fixed_points() {
            3 => 3,
            1 => 2,
            _ => 1,
        }
    }

    pub fn sign(&self) -> i32 {
        // (-1)^(n - cycles)
        if (3 - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn class(&self) -> ClassLabel {
        match self.fixed_points() {
            3 => ClassLabel::Identity,
            1 => ClassLabel::Transposition,
            _ => ClassLabel::ThreeCycle,
        }
    }

    /// Zero-based position of this element in [`Permutation::ALL`], which is
    /// also the index of the basis vector `|p(1), p(2), p(3)>`.
    pub fn basis_index(&self) -> usize {
        Permutation::ALL.iter().position(|p| p == self).expect("closed set")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Permutation::IDENTITY => write!(f, "I"),
            Permutation::CYCLE_123 => write!(f, "P(1,2,3)"),
            Permutation::CYCLE_321 => write!(f, "P(3,2,1)"),
            p => {
                let moved: Vec<u8> = (1..=3).filter(|&i| p.image(i) != i).collect();
                write!(f, "P({},{})", moved[0], moved[1])
            }
        }
    }
}

/// Apply `q`, then `p`.
pub fn compose(p: Permutation, q: Permutation) -> Permutation {
    p.compose(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    Identity,
    Transposition,
    ThreeCycle,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 3] = [ClassLabel::Identity, ClassLabel::Transposition, ClassLabel::ThreeCycle];

    pub fn size(&self) -> u32 {
        match self {
            ClassLabel::Identity => 1,
            ClassLabel::Transposition => 3,
            ClassLabel::ThreeCycle => 2,
        }
    }

    fn index(&self) -> usize {
        match self {
            ClassLabel::Identity => 0,
            ClassLabel::Transposition => 1,
            ClassLabel::ThreeCycle => 2,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassLabel::Identity => "identity",
            ClassLabel::Transposition => "transposition",
            ClassLabel::ThreeCycle => "three-cycle",
        };
        f.write_str(s)
    }
}

pub fn class_of(p: Permutation) -> ClassLabel {
    p.class()
}

/// Invariant subspaces of the three-particle space.
///
/// `Hprime` is the coarse label for `H'1 (+) H'2`, used wherever the two
/// copies cannot be told apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubspaceLabel {
    Hplus,
    Hminus,
    Hprime1,
    Hprime2,
    Hprime,
}

impl SubspaceLabel {
    /// Collapses `Hprime1`/`Hprime2` onto `Hprime`.
    pub fn coarse(self) -> SubspaceLabel {
        match self {
            SubspaceLabel::Hprime1 | SubspaceLabel::Hprime2 => SubspaceLabel::Hprime,
            other => other,
        }
    }

    /// Dimension of the subspace inside the regular representation.
    pub fn regular_dimension(self) -> usize {
        match self {
            SubspaceLabel::Hplus | SubspaceLabel::Hminus => 1,
            SubspaceLabel::Hprime1 | SubspaceLabel::Hprime2 => 2,
            SubspaceLabel::Hprime => 4,
        }
    }

    pub fn irrep(self) -> Irrep {
        match self {
            SubspaceLabel::Hplus => Irrep::A1,
            SubspaceLabel::Hminus => Irrep::A2,
            _ => Irrep::E,
        }
    }
}

impl fmt::Display for SubspaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SubspaceLabel::Hplus => "Hplus",
            SubspaceLabel::Hminus => "Hminus",
            SubspaceLabel::Hprime1 => "Hprime1",
            SubspaceLabel::Hprime2 => "Hprime2",
            SubspaceLabel::Hprime => "Hprime",
        };
        f.write_str(s)
    }
}

/// Irreducible representations of S3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Irrep {
    /// Totally symmetric.
    A1,
    /// Sign representation.
    A2,
    /// Two-dimensional.
    E,
}

impl Irrep {
    pub const ALL: [Irrep; 3] = [Irrep::A1, Irrep::A2, Irrep::E];

    pub fn dimension(self) -> u32 {
        match self {
            Irrep::E => 2,
            _ => 1,
        }
    }

    /// Coarse subspace carried by this irrep.
    pub fn subspace(self) -> SubspaceLabel {
        match self {
            Irrep::A1 => SubspaceLabel::Hplus,
            Irrep::A2 => SubspaceLabel::Hminus,
            Irrep::E => SubspaceLabel::Hprime,
        }
    }

    fn index(self) -> usize {
        match self {
            Irrep::A1 => 0,
            Irrep::A2 => 1,
            Irrep::E => 2,
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Irrep::A1 => "A1",
            Irrep::A2 => "A2",
            Irrep::E => "E",
        };
        f.write_str(s)
    }
}

/// Characters of the three irreps over the classes (identity, transposition, three-cycle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    rows: [[i32; 3]; 3],
}

impl CharacterTable {
    pub fn chi(&self, irrep: Irrep, class: ClassLabel) -> i32 {
        self.rows[irrep.index()][class.index()]
    }

    pub fn row(&self, irrep: Irrep) -> [i32; 3] {
        self.rows[irrep.index()]
    }
}

pub fn character_table() -> CharacterTable {
    CharacterTable { rows: [[1, 1, 1], [1, -1, 1], [2, 0, -1]] }
}

/// Multiplicities of each irrep in a (reducible) representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrrepContent {
    pub a1: u32,
    pub a2: u32,
    pub e: u32,
}

impl IrrepContent {
    pub const fn single(irrep: Irrep) -> Self {
        match irrep {
            Irrep::A1 => IrrepContent { a1: 1, a2: 0, e: 0 },
            Irrep::A2 => IrrepContent { a1: 0, a2: 1, e: 0 },
            Irrep::E => IrrepContent { a1: 0, a2: 0, e: 1 },
        }
    }

    pub fn multiplicity(&self, irrep: Irrep) -> u32 {
        match irrep {
            Irrep::A1 => self.a1,
            Irrep::A2 => self.a2,
            Irrep::E => self.e,
        }
    }

    /// Dimension of the isotypic component of `irrep`.
    pub fn sector_dimension(&self, irrep: Irrep) -> u32 {
        self.multiplicity(irrep) * irrep.dimension()
    }

    pub fn dimension(&self) -> u32 {
        Irrep::ALL.iter().map(|&ir| self.sector_dimension(ir)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.dimension() == 0
    }

    /// Character over (identity, transposition, three-cycle).
    pub fn character(&self) -> [i32; 3] {
        let table = character_table();
        let mut chi = [0i32; 3];
        for ir in Irrep::ALL {
            let m = self.multiplicity(ir) as i32;
            for (c, slot) in chi.iter_mut().enumerate() {
                *slot += m * table.rows[ir.index()][c];
            }
        }
        chi
    }

    /// Reduces a class function by character orthogonality. Returns `None`
    /// if the function is not the character of a genuine representation.
    pub fn from_character(chi: [i32; 3]) -> Option<Self> {
        let table = character_table();
        let mut mult = [0u32; 3];
        for ir in Irrep::ALL {
            let sum: i32 = ClassLabel::ALL.iter().map(|c| c.size() as i32 * chi[c.index()] * table.chi(ir, *c)).sum();
            if sum < 0 || sum % 6 != 0 {
                return None;
            }
            mult[ir.index()] = (sum / 6) as u32;
        }
        Some(IrrepContent { a1: mult[0], a2: mult[1], e: mult[2] })
    }

    /// Content of the tensor product representation.
    pub fn tensor(&self, other: &IrrepContent) -> IrrepContent {
        let (x, y) = (self.character(), other.character());
        IrrepContent::from_character([x[0] * y[0], x[1] * y[1], x[2] * y[2]])
            .expect("products of characters are characters")
    }

    /// Keeps only the irreps also present in `other`.
    pub fn restrict_to(&self, other: &IrrepContent) -> IrrepContent {
        let keep = |ir: Irrep| if other.multiplicity(ir) > 0 { self.multiplicity(ir) } else { 0 };
        IrrepContent { a1: keep(Irrep::A1), a2: keep(Irrep::A2), e: keep(Irrep::E) }
    }

    /// Coarse subspace labels with nonzero multiplicity.
    pub fn subspaces(&self) -> BTreeSet<SubspaceLabel> {
        Irrep::ALL.iter().filter(|&&ir| self.multiplicity(ir) > 0).map(|ir| ir.subspace()).collect()
    }

    pub fn from_subspaces<'a, I: IntoIterator<Item = &'a SubspaceLabel>>(labels: I) -> Self {
        let mut content = IrrepContent::default();
        for label in labels {
            match label.irrep() {
                Irrep::A1 => content.a1 += 1,
                Irrep::A2 => content.a2 += 1,
                Irrep::E => content.e += 1,
            }
        }
        content
    }
}

impl Add for IrrepContent {
    type Output = IrrepContent;
    fn add(self, rhs: IrrepContent) -> IrrepContent {
        IrrepContent { a1: self.a1 + rhs.a1, a2: self.a2 + rhs.a2, e: self.e + rhs.e }
    }
}

/// Eigenvalues of `P(1,2,3)` on the regular representation, kept symbolic
/// so equality is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CycleEigenvalue {
    One,
    /// `exp(-2 pi i / 3)`
    LambdaMinus,
    /// `exp(+2 pi i / 3)`
    LambdaPlus,
}

impl CycleEigenvalue {
    pub fn value(self) -> Complex64 {
        match self {
            CycleEigenvalue::One => Complex64::new(1.0, 0.0),
            CycleEigenvalue::LambdaMinus => lambda_minus(),
            CycleEigenvalue::LambdaPlus => lambda_plus(),
        }
    }

    /// The eigenvalue of the same vector under the inverse cycle `P(3,2,1)`.
    pub fn exchanged(self) -> CycleEigenvalue {
        match self {
            CycleEigenvalue::One => CycleEigenvalue::One,
            CycleEigenvalue::LambdaMinus => CycleEigenvalue::LambdaPlus,
            CycleEigenvalue::LambdaPlus => CycleEigenvalue::LambdaMinus,
        }
    }
}

pub fn lambda_minus() -> Complex64 {
    Complex64::new(-0.5, -SQRT3_2)
}

pub fn lambda_plus() -> Complex64 {
    Complex64::new(-0.5, SQRT3_2)
}

/// A vector over the basis `|1> .. |6>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymVector(Vector6<Complex64>);

impl SymVector {
    pub fn zero() -> Self {
        SymVector(Vector6::zeros())
    }

    pub fn new(components: [Complex64; 6]) -> Self {
        SymVector(Vector6::from_row_slice(&components))
    }

    pub fn from_real(components: [f64; 6]) -> Self {
        SymVector(Vector6::from_iterator(components.iter().map(|&x| Complex64::new(x, 0.0))))
    }

    /// The basis ket `|n>` with `n` in `1..=6`.
    pub fn basis(n: usize) -> Self {
        assert!((1..=6).contains(&n), "basis index {n} out of range 1..=6");
        let mut v = Vector6::zeros();
        v[n - 1] = Complex64::new(1.0, 0.0);
        SymVector(v)
    }

    pub fn components(&self) -> [Complex64; 6] {
        let mut out = [Complex64::new(0.0, 0.0); 6];
        out.copy_from_slice(self.0.as_slice());
        out
    }

    pub fn as_vector(&self) -> &Vector6<Complex64> {
        &self.0
    }

    pub fn inner(&self, other: &SymVector) -> Complex64 {
        self.0.dotc(&other.0)
    }

    pub fn norm_squared(&self) -> f64 {
        self.0.norm_squared()
    }

    pub fn normalized(&self) -> SymVector {
        SymVector(self.0 / Complex64::new(self.0.norm(), 0.0))
    }

    pub fn scale(&self, factor: Complex64) -> SymVector {
        SymVector(self.0 * factor)
    }

    pub fn max_abs_diff(&self, other: &SymVector) -> f64 {
        (self.0 - other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.0.iter().all(|z| z.norm() <= tol)
    }
}

impl Add for SymVector {
    type Output = SymVector;
    fn add(self, rhs: SymVector) -> SymVector {
        SymVector(self.0 + rhs.0)
    }
}

impl Sub for SymVector {
    type Output = SymVector;
    fn sub(self, rhs: SymVector) -> SymVector {
        SymVector(self.0 - rhs.0)
    }
}

/// A 6x6 complex matrix over the regular-representation basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepMatrix(Matrix6<Complex64>);

impl RepMatrix {
    pub fn identity() -> Self {
        RepMatrix(Matrix6::identity())
    }

    pub fn zero() -> Self {
        RepMatrix(Matrix6::zeros())
    }

    pub fn from_integer_rows(rows: [[i64; 6]; 6]) -> Self {
        RepMatrix(Matrix6::from_fn(|r, c| Complex64::new(rows[r][c] as f64, 0.0)))
    }

    pub fn as_matrix(&self) -> &Matrix6<Complex64> {
        &self.0
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    /// Exact integer entries, if every entry is a real integer.
    pub fn to_integer(&self) -> Option<[[i64; 6]; 6]> {
        let mut out = [[0i64; 6]; 6];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                let z = self.0[(r, c)];
                if z.im != 0.0 || z.re.fract() != 0.0 {
                    return None;
                }
                *slot = z.re as i64;
            }
        }
        Some(out)
    }

    pub fn apply(&self, v: &SymVector) -> SymVector {
        SymVector(self.0 * v.0)
    }

    pub fn scale(&self, factor: f64) -> RepMatrix {
        RepMatrix(self.0 * Complex64::new(factor, 0.0))
    }

    pub fn adjoint(&self) -> RepMatrix {
        RepMatrix(self.0.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn max_abs_diff(&self, other: &RepMatrix) -> f64 {
        (self.0 - other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &RepMatrix, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.approx_eq(&(*self * *self), tol)
    }

    pub fn commutes_with(&self, other: &RepMatrix, tol: f64) -> bool {
        (*self * *other).approx_eq(&(*other * *self), tol)
    }

    /// Numerical rank from the singular values.
    pub fn rank(&self, tol: f64) -> usize {
        self.0.svd(false, false).rank(tol)
    }

    /// True if the matrix has exactly one entry equal to 1 in every row and
    /// column and zeros elsewhere.
    pub fn is_permutation_matrix(&self) -> bool {
        let Some(rows) = self.to_integer() else {
            return false;
        };
        let ok_line = |line: [i64; 6]| line.iter().all(|&x| x == 0 || x == 1) && line.iter().sum::<i64>() == 1;
        (0..6).all(|r| ok_line(rows[r])) && (0..6).all(|c| ok_line(std::array::from_fn(|r| rows[r][c])))
    }
}

impl Mul for RepMatrix {
    type Output = RepMatrix;
    fn mul(self, rhs: RepMatrix) -> RepMatrix {
        RepMatrix(self.0 * rhs.0)
    }
}

impl Add for RepMatrix {
    type Output = RepMatrix;
    fn add(self, rhs: RepMatrix) -> RepMatrix {
        RepMatrix(self.0 + rhs.0)
    }
}

impl Sub for RepMatrix {
    type Output = RepMatrix;
    fn sub(self, rhs: RepMatrix) -> RepMatrix {
        RepMatrix(self.0 - rhs.0)
    }
}

/// The 0/1 matrix of `p` on the regular representation.
pub fn regular_rep(p: Permutation) -> RepMatrix {
    let mut m = Matrix6::zeros();
    for t in Permutation::ALL {
        let image = p.compose(t);
        m[(image.basis_index(), t.basis_index())] = Complex64::new(1.0, 0.0);
    }
    RepMatrix(m)
}

/// `regular_rep(p) * v`, computed as an exact reshuffle of components.
pub fn apply_perm(p: Permutation, v: &SymVector) -> SymVector {
    let mut out = Vector6::zeros();
    for t in Permutation::ALL {
        out[p.compose(t).basis_index()] = v.0[t.basis_index()];
    }
    SymVector(out)
}

fn group_average(weight: impl Fn(Permutation) -> f64) -> RepMatrix {
    Permutation::ALL.iter().fold(RepMatrix::zero(), |acc, &g| acc + regular_rep(g).scale(weight(g))).scale(1.0 / 6.0)
}

/// Projector `S` onto `H+`.
pub fn symmetrizer() -> RepMatrix {
    group_average(|_| 1.0)
}

/// Projector `A` onto `H-`, built with the sign of each element.
pub fn antisymmetrizer() -> RepMatrix {
    group_average(|g| g.sign() as f64)
}

/// `|s>`, normalized.
pub fn symmetric_state() -> SymVector {
    let c = 1.0 / 6f64.sqrt();
    SymVector::from_real([c; 6])
}

/// `|a>` with the component signs `(-, +, +, -, -, +)`.
///
/// This is the negative of `A |1>` normalized; the global phase has no
/// physical content.
pub fn antisymmetric_state() -> SymVector {
    let c = 1.0 / 6f64.sqrt();
    SymVector::from_real([-c, c, c, -c, -c, c])
}

/// The unnormalized mixed-symmetry vectors `[v1, v2, v3, v4]` (each has
/// squared norm 3).
pub fn mixed_states() -> [SymVector; 4] {
    let (lm, lp) = (lambda_minus(), lambda_plus());
    let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    [
        SymVector::new([z, lm, lp, z, z, o]),
        SymVector::new([lp, z, z, lm, o, z]),
        SymVector::new([z, lp, lm, z, z, o]),
        SymVector::new([lm, z, z, lp, o, z]),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    pub name: &'static str,
    pub vector: SymVector,
    /// Eigenvalue under `P(1,2,3)`.
    pub eigenvalue: CycleEigenvalue,
}

/// Joint eigenbasis of the two three-cycles, in the order
/// `|s>, |a>, v1, v2, v3, v4`.
pub fn cycle_eigenbasis() -> Vec<EigenPair> {
    let [v1, v2, v3, v4] = mixed_states();
    vec![
        EigenPair { name: "s", vector: symmetric_state(), eigenvalue: CycleEigenvalue::One },
        EigenPair { name: "a", vector: antisymmetric_state(), eigenvalue: CycleEigenvalue::One },
        EigenPair { name: "v1", vector: v1, eigenvalue: CycleEigenvalue::LambdaMinus },
        EigenPair { name: "v2", vector: v2, eigenvalue: CycleEigenvalue::LambdaMinus },
        EigenPair { name: "v3", vector: v3, eigenvalue: CycleEigenvalue::LambdaPlus },
        EigenPair { name: "v4", vector: v4, eigenvalue: CycleEigenvalue::LambdaPlus },
    ]
}

fn outer(a: &SymVector, b: &SymVector) -> RepMatrix {
    RepMatrix(a.0 * b.0.adjoint())
}

/// Orthogonal projectors onto `H'1 = span{v1, v4}` and `H'2 = span{v2, v3}`.
pub fn invariant_projectors() -> (RepMatrix, RepMatrix) {
    let [v1, v2, v3, v4] = mixed_states();
    // the v's are mutually orthogonal with norm^2 = 3
    let p1 = (outer(&v1, &v1) + outer(&v4, &v4)).scale(1.0 / 3.0);
    let p2 = (outer(&v2, &v2) + outer(&v3, &v3)).scale(1.0 / 3.0);
    (p1, p2)
}

/// All four projectors keyed by their fine subspace label.
pub fn projectors() -> BTreeMap<SubspaceLabel, RepMatrix> {
    let (p1, p2) = invariant_projectors();
    BTreeMap::from([
        (SubspaceLabel::Hplus, symmetrizer()),
        (SubspaceLabel::Hminus, antisymmetrizer()),
        (SubspaceLabel::Hprime1, p1),
        (SubspaceLabel::Hprime2, p2),
    ])
}

/// Splits `v` into its components in `H+`, `H-`, `H'1` and `H'2`.
pub fn decompose(v: &SymVector) -> BTreeMap<SubspaceLabel, SymVector> {
    projectors().into_iter().map(|(label, p)| (label, p.apply(v))).collect()
}
