//! Helpers shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use trinuclear_core::group_algebra::{compose, Permutation};
use trinuclear_core::symmetry_classifier::{
    classify_c3v_k0, classify_spin0_planar, classify_spin_half_planar, InversionSpecies, NuclearSpin, TotalSpin,
};

pub const GOLDEN_CLASSIFICATION: &str = include_str!("../golden/classification.txt");

fn spin_label(i: Option<TotalSpin>) -> &'static str {
    match i {
        None => "-",
        Some(TotalSpin::Half) => "1/2",
        Some(TotalSpin::ThreeHalves) => "3/2",
    }
}

/// The classifier's answers, rendered in the golden-file format.
pub fn classification_lines() -> Vec<String> {
    let spins = [None, Some(TotalSpin::Half), Some(TotalSpin::ThreeHalves)];
    let mut out = Vec::new();
    for j in 0..=10u32 {
        for k in -(j as i32)..=j as i32 {
            let a = classify_spin0_planar(j, k).unwrap();
            out.push(format!("spin0_planar J={j} K={k} -> {a}"));
        }
    }
    for j in 0..=10u32 {
        for k in -(j as i32)..=j as i32 {
            for i in spins {
                let a = classify_spin_half_planar(j, k, i).unwrap();
                out.push(format!("spin_half_planar J={j} K={k} I={} -> {a}", spin_label(i)));
            }
        }
    }
    for j in 0..=10u32 {
        for sp in [InversionSpecies::S, InversionSpecies::A] {
            let a = classify_c3v_k0(j, sp, NuclearSpin::Zero, None).unwrap();
            out.push(format!("c3v_k0 spin=0 J={j} species={} -> {a}", sp.label()));
            for i in spins {
                let a = classify_c3v_k0(j, sp, NuclearSpin::Half, i).unwrap();
                out.push(format!("c3v_k0 spin=1/2 J={j} species={} I={} -> {a}", sp.label(), spin_label(i)));
            }
        }
    }
    out
}

/// Lines that differ from the golden file, as `(expected, actual)`.
pub fn golden_mismatches() -> Vec<(String, String)> {
    let actual = classification_lines();
    let expected: Vec<&str> = GOLDEN_CLASSIFICATION.lines().collect();
    let mut bad: Vec<(String, String)> = expected
        .iter()
        .zip(&actual)
        .filter(|(e, a)| **e != a.as_str())
        .map(|(e, a)| (e.to_string(), a.clone()))
        .collect();
    if expected.len() != actual.len() {
        bad.push((format!("{} lines", expected.len()), format!("{} lines", actual.len())));
    }
    bad
}

// ---- brute-force statistical weights ----

type CMat = DMatrix<Complex64>;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn omega(power: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * power as f64 / 3.0)
}

/// Permutation of the three spin-1/2 labels acting on positions of
/// `|m1 m2 m3>`; basis index is the bit pattern `m1 m2 m3`.
pub fn spin_matrix(p: Permutation) -> CMat {
    let mut m = CMat::zeros(8, 8);
    for col in 0..8usize {
        let bits = [(col >> 2) & 1, (col >> 1) & 1, col & 1];
        let img = p.images();
        let new = [bits[img[0] as usize - 1], bits[img[1] as usize - 1], bits[img[2] as usize - 1]];
        let row = (new[0] << 2) | (new[1] << 1) | new[2];
        m[(row, col)] = c(1.0);
    }
    m
}

/// Projector onto total spin `I` in the 8-dimensional space, from the
/// eigenspaces of the explicit `S^2` matrix.
pub fn total_spin_projector(i: TotalSpin) -> CMat {
    let sx = CMat::from_row_slice(2, 2, &[c(0.0), c(0.5), c(0.5), c(0.0)]);
    let sy = CMat::from_row_slice(2, 2, &[c(0.0), Complex64::new(0.0, -0.5), Complex64::new(0.0, 0.5), c(0.0)]);
    let sz = CMat::from_row_slice(2, 2, &[c(0.5), c(0.0), c(0.0), c(-0.5)]);
    let id = CMat::identity(2, 2);
    let embed = |op: &CMat, site: usize| {
        let mut m = CMat::identity(1, 1);
        for s in 0..3 {
            m = m.kronecker(if s == site { op } else { &id });
        }
        m
    };
    let mut s2 = CMat::zeros(8, 8);
    for op in [&sx, &sy, &sz] {
        let total = embed(op, 0) + embed(op, 1) + embed(op, 2);
        s2 += &total * &total;
    }
    // S^2 has eigenvalues 15/4 (I = 3/2) and 3/4 (I = 1/2)
    let id8 = CMat::identity(8, 8);
    match i {
        TotalSpin::ThreeHalves => (&s2 - &id8 * c(0.75)) / c(3.0),
        TotalSpin::Half => (&id8 * c(3.75) - &s2) / c(3.0),
    }
}

/// Representation of a permutation on the rotational level `(J, |K|)`:
/// three-cycles act as `diag(w^K, w^-K)` on `{|K>, |-K>}` and the exchange
/// of labels 1, 2 as `sign * (-1)^J` times the swap `|K> <-> |-K>`, with
/// `sign = -1` for the antisymmetric inversion species. Other elements follow
/// by composition.
pub fn rotation_matrix(j: u32, k: u32, species: InversionSpecies, p: Permutation) -> CMat {
    let sign = if species == InversionSpecies::A { -1.0 } else { 1.0 } * if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (cyc, swap) = if k == 0 {
        (CMat::identity(1, 1), CMat::from_element(1, 1, c(sign)))
    } else {
        let kk = k as i64;
        (
            CMat::from_row_slice(2, 2, &[omega(kk), c(0.0), c(0.0), omega(-kk)]),
            CMat::from_row_slice(2, 2, &[c(0.0), c(sign), c(sign), c(0.0)]),
        )
    };
    let dim = cyc.nrows();
    // words in the generators, checked against the permutation itself
    let gens = [(Permutation::CYCLE_123, cyc), (Permutation::SWAP_12, swap)];
    let mut reached = vec![(Permutation::IDENTITY, CMat::identity(dim, dim))];
    let mut frontier = 0;
    while frontier < reached.len() {
        let (q, mq) = reached[frontier].clone();
        for (g, mg) in &gens {
            let r = compose(q, *g);
            if !reached.iter().any(|(x, _)| *x == r) {
                reached.push((r, &mq * mg));
            }
        }
        frontier += 1;
    }
    reached.into_iter().find(|(x, _)| *x == p).expect("generators span S3").1
}

pub fn rank(m: &CMat) -> usize {
    m.clone().svd(false, false).singular_values.iter().filter(|&&s| s > 1e-9).count()
}

/// Rank of the projector onto the statistics-allowed symmetry in
/// rotation x spin (restricted to total spin `I` if given).
pub fn brute_force_weight(
    j: u32,
    k: u32,
    species: InversionSpecies,
    spin: NuclearSpin,
    total_spin: Option<TotalSpin>,
) -> usize {
    let mut proj: Option<CMat> = None;
    for p in Permutation::ALL {
        let rot = rotation_matrix(j, k, species, p);
        let (full, sign) = match spin {
            NuclearSpin::Zero => (rot, 1.0),
            NuclearSpin::Half => (rot.kronecker(&spin_matrix(p)), p.sign() as f64),
        };
        let term = full * c(sign / 6.0);
        proj = Some(match proj {
            None => term,
            Some(acc) => acc + term,
        });
    }
    let mut proj = proj.unwrap();
    if let (NuclearSpin::Half, Some(i)) = (spin, total_spin) {
        let dim = if k == 0 { 1 } else { 2 };
        proj = &proj * CMat::identity(dim, dim).kronecker(&total_spin_projector(i));
    }
    rank(&proj)
}

/// Checks that `rotation_matrix` and `spin_matrix` are representations
/// under the library's composition convention.
pub fn oracle_is_homomorphic(j: u32, k: u32, species: InversionSpecies) -> bool {
    let mut ok = true;
    for p in Permutation::ALL {
        for q in Permutation::ALL {
            let pq = compose(p, q);
            let lhs = rotation_matrix(j, k, species, p) * rotation_matrix(j, k, species, q);
            ok &= (lhs - rotation_matrix(j, k, species, pq)).camax() < 1e-12;
            let lhs = spin_matrix(p) * spin_matrix(q);
            ok &= (lhs - spin_matrix(pq)).camax() < 1e-12;
        }
    }
    ok
}
