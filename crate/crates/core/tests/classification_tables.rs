mod common;

use std::collections::BTreeSet;

use trinuclear_core::group_algebra::{IrrepContent, SubspaceLabel};
use trinuclear_core::symmetry_classifier::*;
use SubspaceLabel::{Hminus, Hplus, Hprime};

fn set(labels: &[SubspaceLabel]) -> BTreeSet<SubspaceLabel> {
    labels.iter().copied().collect()
}

#[test]
fn golden_file_matches() {
    let bad = common::golden_mismatches();
    assert!(bad.is_empty(), "{} mismatches, first: {:?}", bad.len(), bad.first());
}

#[test]
fn planar_spin_zero_rows() {
    let a = classify_spin0_planar(2, 0).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hplus]), ForbiddenBy::None));
    let a = classify_spin0_planar(1, 0).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hminus]), ForbiddenBy::Ss));
    let a = classify_spin0_planar(3, 2).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hprime]), ForbiddenBy::Sp));
    let a = classify_spin0_planar(3, 3).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hplus, Hminus]), ForbiddenBy::None));
}

#[test]
fn planar_spin_half_rows() {
    let half = Some(TotalSpin::Half);
    let three = Some(TotalSpin::ThreeHalves);
    let rows = [
        (3, 3, half, set(&[Hprime]), ForbiddenBy::Sp),
        (3, 3, three, set(&[Hplus, Hminus]), ForbiddenBy::None),
        (4, 1, half, set(&[Hplus, Hminus, Hprime]), ForbiddenBy::None),
        (4, 2, three, set(&[Hprime]), ForbiddenBy::Sp),
        (2, 0, half, set(&[Hprime]), ForbiddenBy::Sp),
        (2, 0, three, set(&[Hplus]), ForbiddenBy::Ss),
        (1, 0, half, set(&[Hprime]), ForbiddenBy::Sp),
        (1, 0, three, set(&[Hminus]), ForbiddenBy::None),
    ];
    for (j, k, i, subspaces, verdict) in rows {
        let a = classify_spin_half_planar(j, k, i).unwrap();
        assert_eq!((a.subspaces, a.forbidden_by), (subspaces, verdict), "J={j} K={k} I={i:?}");
    }
}

#[test]
fn pyramidal_k0_rows() {
    use InversionSpecies::{A, S};
    let a = classify_c3v_k0(2, S, NuclearSpin::Zero, None).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hplus]), ForbiddenBy::None));
    let a = classify_c3v_k0(1, S, NuclearSpin::Zero, None).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hminus]), ForbiddenBy::Ss));
    let a = classify_c3v_k0(2, A, NuclearSpin::Zero, None).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hminus]), ForbiddenBy::Ss));
    let a = classify_c3v_k0(1, A, NuclearSpin::Zero, None).unwrap();
    assert_eq!((a.subspaces, a.forbidden_by), (set(&[Hplus]), ForbiddenBy::None));
    assert_eq!(classify_c3v_k0(2, S, NuclearSpin::Half, None).unwrap().forbidden_by, ForbiddenBy::SpAndSs);
    assert_eq!(classify_c3v_k0(3, A, NuclearSpin::Half, None).unwrap().forbidden_by, ForbiddenBy::SpAndSs);
    assert_eq!(classify_c3v_k0(3, S, NuclearSpin::Half, None).unwrap().forbidden_by, ForbiddenBy::None);
    assert_eq!(classify_c3v_k0(2, A, NuclearSpin::Half, None).unwrap().forbidden_by, ForbiddenBy::None);
}

#[test]
fn spin_half_rows_are_products_of_rotation_and_spin_subspaces() {
    let spin_space = spin_space_decomposition();
    for j in 0..=10u32 {
        for k in 0..=j as i32 {
            let rot = classify_spin0_planar(j, k).unwrap().subspaces;
            for i in TotalSpin::ALL {
                let spin_labels: Vec<SubspaceLabel> = spin_space
                    .iter()
                    .filter(|(_, entries)| entries.iter().any(|(ii, _)| *ii == i))
                    .map(|(l, _)| l.coarse())
                    .collect();
                let mut product = BTreeSet::new();
                for &r in &rot {
                    for &s in &spin_labels {
                        product.extend(product_decompose(r, s));
                    }
                }
                let a = classify_spin_half_planar(j, k, Some(i)).unwrap();
                assert_eq!(a.subspaces, product, "J={j} K={k} I={i:?}");
            }
        }
    }
}

#[test]
fn hprime_exactly_when_phase_is_not_one() {
    for j in 0..=30u32 {
        for k in -(j as i32)..=j as i32 {
            let a = classify_spin0_planar(j, k).unwrap();
            for eps in [Epsilon::Plus, Epsilon::Minus] {
                let unreachable = rotation_phase_inplane(k, eps) != PhaseFactor::ONE;
                assert_eq!(a.subspaces == set(&[Hprime]), unreachable, "J={j} K={k}");
            }
            assert_eq!(a.forbidden_by.sp(), k.rem_euclid(3) != 0);
        }
    }
}

#[test]
fn weight_zero_exactly_on_fully_forbidden_levels() {
    for j in 0..=20u32 {
        for k in -(j as i32)..=j as i32 {
            let s = RotationalState::new(j, k);
            let w0 = spin_statistical_weight(&s, PointGroup::D3h, NuclearSpin::Zero).unwrap();
            let f0 = classify_spin0_planar(j, k).unwrap().forbidden_by.is_forbidden();
            assert_eq!(w0 == 0, f0, "spin 0 J={j} K={k}");
            let w = spin_statistical_weight(&s, PointGroup::D3h, NuclearSpin::Half).unwrap();
            let f = classify_spin_half_planar(j, k, None).unwrap().forbidden_by.is_forbidden();
            assert_eq!(w == 0, f, "spin 1/2 J={j} K={k}");
            for i in TotalSpin::ALL {
                let w = spin_statistical_weight(&s.with_total_spin(i), PointGroup::D3h, NuclearSpin::Half).unwrap();
                let f = classify_spin_half_planar(j, k, Some(i)).unwrap().forbidden_by.is_forbidden();
                assert_eq!(w == 0, f, "spin 1/2 J={j} K={k} I={i:?}");
            }
        }
    }
}

#[test]
fn invalid_quantum_numbers() {
    assert!(matches!(classify_spin0_planar(1, 2), Err(ClassifyError::KExceedsJ { .. })));
    assert!(matches!(classify_spin_half_planar(2, -3, None), Err(ClassifyError::KExceedsJ { .. })));
    assert!(classify_c3v_k0(2, InversionSpecies::None, NuclearSpin::Zero, None).is_err());
    assert!(classify_c3v_k0(2, InversionSpecies::S, NuclearSpin::Zero, Some(TotalSpin::Half)).is_err());
    let planar_with_species = RotationalState::new(2, 0).with_species(InversionSpecies::S);
    assert!(classify(&planar_with_species, PointGroup::D3h, NuclearSpin::Zero).is_err());
}

#[test]
fn spin_content_dimensions() {
    assert_eq!(spin_content(NuclearSpin::Half, None).dimension(), 8);
    assert_eq!(spin_content(NuclearSpin::Half, None).character(), [8, 4, 2]);
    assert_eq!(spin_content(NuclearSpin::Zero, None), IrrepContent::single(trinuclear_core::group_algebra::Irrep::A1));
}
