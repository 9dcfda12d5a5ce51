//! Worked examples at small rank, each recomputed from scratch.

mod common;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use bfusion::bmwdual::{
    bar_map, box_neighbors, box_walk_counts, dim_from_eigs, gamma_set, generator_label, psi, quantum_number_at,
    ranklevel_check, type_c_vector_dim, BmwParams, FerrersDiagram,
};
use bfusion::fusion::classical_tensor;
use bfusion::qchar::{coroot_sine_product, positive_character, twist_exponent_doubled, QPower};
use bfusion::symmetry::{phi_sign, InvolutionData};
use bfusion::unitarity::{audit, dim_box, h};
use bfusion::{AlcoveParams, Error, Family, FusionTable, QuantumParams, RootDatum, Weight};
use common::{qint, w};

fn b(k: usize, ell: i64) -> AlcoveParams {
    AlcoveParams::from_family(Family::B, k, ell).unwrap()
}

fn d(rows: &[u32]) -> FerrersDiagram {
    FerrersDiagram::new(rows.to_vec()).unwrap()
}

fn map(entries: &[(&str, u64)]) -> BTreeMap<Weight, u64> {
    entries.iter().map(|(s, m)| (w(s), *m)).collect()
}

#[test]
fn root_data_b2_and_c2() {
    let b2 = RootDatum::new(Family::B, 2).unwrap();
    let roots: Vec<_> = b2.positive_roots().to_vec();
    for r in ["1,-1", "1,1", "1,0", "0,1"] {
        assert!(roots.contains(&w(r)), "{r}");
    }
    assert_eq!(roots.len(), 4);
    assert_eq!(b2.rho().doubled(), &[3, 1]);
    assert_eq!(b2.theta(), &w("1,0"));
    let c2 = RootDatum::new(Family::C, 2).unwrap();
    assert_eq!(c2.theta(), &w("1,1"));
    assert_eq!(c2.rho().doubled(), &[4, 2]);
    assert!(matches!(RootDatum::new(Family::B, 1), Err(Error::InvalidRank(_))));
}

#[test]
fn forms_b2() {
    let b2 = RootDatum::new(Family::B, 2).unwrap();
    assert_eq!(b2.form(&w("1,0"), &w("1,0")).unwrap(), 2.into());
    assert_eq!(b2.form(&w("1,0"), &w("0,1")).unwrap(), 0.into());
    assert_eq!(b2.form(b2.rho(), &w("1,0")).unwrap(), 3.into());
    assert!(matches!(
        b2.form(&w("1,0"), &w("1,0,0")),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn multiplicities_b2() {
    let b2 = RootDatum::new(Family::B, 2).unwrap();
    let vector = b2.weight_multiplicities(&w("1,0")).unwrap();
    assert_eq!(
        vector,
        map(&[("1,0", 1), ("-1,0", 1), ("0,1", 1), ("0,-1", 1), ("0,0", 1)])
    );
    let spin = b2.weight_multiplicities(&w("1/2,1/2")).unwrap();
    assert_eq!(spin.len(), 4);
    assert!(spin.values().all(|&m| m == 1));
    assert!(b2.weight_multiplicities(&w("0,1")).is_err());
}

#[test]
fn alcove_b2_9() {
    let alcove = b(2, 9);
    let labels = alcove.alcove_enumerate();
    let expected = [
        "0,0", "1,0", "1,1", "2,0", "2,1", "2,2", "1/2,1/2", "3/2,1/2", "3/2,3/2", "5/2,1/2", "5/2,3/2", "5/2,5/2",
    ];
    assert_eq!(labels.len(), 12);
    for e in expected {
        assert!(labels.contains(&w(e)), "{e}");
    }
    let gamma = alcove.gamma().unwrap();
    assert_eq!(gamma, w("5/2,5/2"));
    let top = labels.iter().map(|l| l.norm_sq_x4()).max().unwrap();
    assert_eq!(
        labels.iter().filter(|l| l.norm_sq_x4() == top).collect::<Vec<_>>(),
        vec![&gamma]
    );
    assert!(matches!(
        AlcoveParams::from_family(Family::B, 2, 5),
        Err(Error::Configuration(_))
    ));
}

#[test]
fn affine_reduction_b2_9() {
    let alcove = b(2, 9);
    let wall = alcove.affine_reduce(&w("3,0"));
    assert_eq!((wall.label, wall.sign), (None, 0));
    let inside = alcove.affine_reduce(&w("2,1"));
    assert_eq!((inside.label, inside.sign), (Some(w("2,1")), 1));
    // (4,0)+ρ = (11/2,1/2) reflects to (7/2,1/2), which is off every wall
    let r = alcove.affine_reduce(&w("4,0"));
    assert_eq!((r.label, r.sign), (Some(w("2,0")), -1));
}

#[test]
fn classical_products_b2() {
    let b2 = RootDatum::new(Family::B, 2).unwrap();
    assert_eq!(
        classical_tensor(&b2, &w("1,0"), &w("1,0")).unwrap(),
        map(&[("2,0", 1), ("1,1", 1), ("0,0", 1)])
    );
    assert_eq!(
        classical_tensor(&b2, &w("1/2,1/2"), &w("1/2,1/2")).unwrap(),
        map(&[("1,1", 1), ("1,0", 1), ("0,0", 1)])
    );
    assert_eq!(
        classical_tensor(&b2, &w("0,0"), &w("3/2,1/2")).unwrap(),
        map(&[("3/2,1/2", 1)])
    );
}

#[test]
fn fusion_products_b2_9() {
    let alcove = b(2, 9);
    assert_eq!(
        alcove.fuse(&w("1,0"), &w("1,0")).unwrap(),
        map(&[("2,0", 1), ("1,1", 1), ("0,0", 1)])
    );
    assert_eq!(
        alcove.fuse(&w("2,0"), &w("1,0")).unwrap(),
        map(&[("1,0", 1), ("2,1", 1)])
    );
    assert_eq!(
        alcove.fuse(&w("1/2,1/2"), &w("1/2,1/2")).unwrap(),
        map(&[("0,0", 1), ("1,0", 1), ("1,1", 1)])
    );
    assert!(matches!(alcove.fuse(&w("3,0"), &w("1,0")), Err(Error::Domain(_))));
}

#[test]
fn fusion_matrices_b2_9() {
    let table = FusionTable::build(&b(2, 9)).unwrap();
    let n = table.len();
    assert_eq!(
        table.fusion_matrix(&w("0,0")).unwrap(),
        nalgebra::DMatrix::identity(n, n)
    );
    let spin = table.fusion_matrix(&w("1/2,1/2")).unwrap();
    let row = table.index_of(&w("1/2,1/2")).unwrap();
    let ones: Vec<Weight> = (0..n)
        .filter(|&c| spin[(row, c)] == 1)
        .map(|c| table.labels()[c].clone())
        .collect();
    assert_eq!(ones.len(), 3);
    for e in ["0,0", "1,0", "1,1"] {
        assert!(ones.contains(&w(e)));
    }
    let (counts, total) = table.bratteli_endo_dim(&w("0,0"), 0).unwrap();
    assert_eq!(total, 1);
    assert_eq!(counts[table.unit_index()], 1);
    let v = w("5/2,3/2");
    assert_eq!(table.bratteli_endo_dim(&v, 2).unwrap().1, 3);
    assert_eq!(
        table.bratteli_endo_dim(&v, 3).unwrap().1,
        box_walk_counts(2, 9, 3).unwrap().1
    );
}

#[test]
fn quantum_integers_and_denominators() {
    let p = QuantumParams::new(b(2, 9), 1).unwrap();
    assert_eq!(p.quantum_integer(1), 1.0);
    assert_eq!(p.quantum_integer(9), 0.0);
    assert!((p.quantum_integer(2) - 2.0 * (PI / 9.0).cos()).abs() < 1e-12);
    let two_rho = p.alcove().datum().rho().scale(2);
    let delta = p.weyl_denominator(&two_rho).unwrap();
    assert!(delta > 0.0);
    let via_sum = p.weyl_sum(p.alcove().datum().rho(), &two_rho) / p.weyl_sum_normalizer();
    assert!((via_sum.re - delta).abs() < 1e-9);
    assert!(matches!(p.weyl_denominator(&w("1/2,1/2")), Err(Error::Domain(_))));
}

#[test]
fn characters_and_dimensions_b2_9() {
    let alcove = b(2, 9);
    let p = QuantumParams::new(alcove.clone(), 1).unwrap();
    let two_rho = alcove.datum().rho().scale(2);
    assert!((p.chi(&w("0,0"), &two_rho).unwrap() - 1.0).abs() < 1e-12);
    for l in alcove.alcove_enumerate() {
        assert!((p.chi(&l, &two_rho).unwrap() - p.qdim(&l)).abs() < 1e-9);
    }
    assert!((p.qdim(&w("0,0")) - 1.0).abs() < 1e-12);
    // (3,0) lies on the affine wall
    assert_eq!(p.qdim(&w("3,0")), 0.0);
    let v = w("5/2,3/2");
    let vdim = p.quantum_integer(8) / p.quantum_integer(2) + 1.0;
    assert!((p.qdim(&v).abs() - vdim.abs()).abs() < 1e-9);

    let spin = w("1/2,1/2");
    assert!((p.dim_mu(&spin, &w("0,0")).unwrap() - 1.0).abs() < 1e-12);
    assert!((p.dim_mu(&spin, &w("5/2,5/2")).unwrap() - 1.0).abs() < 1e-9);
    for l in alcove.alcove_enumerate() {
        assert!(p.dim_mu(&spin, &l).unwrap() > 0.0);
    }
    assert!(matches!(p.dim_mu(&w("1,0"), &w("0,0")), Err(Error::Domain(_))));

    // (5/2,1/2) and ρ = (3/2,1/2) pair with the coroots of ε1-ε2, ε1+ε2, ε1, ε2
    // to 2, 3, 5, 1 and 1, 2, 3, 1
    let dim = positive_character(&alcove);
    let s = |x: f64| (x * PI / 9.0).sin();
    let expected = s(2.0) * s(3.0) * s(5.0) * s(1.0) / (s(1.0) * s(2.0) * s(3.0) * s(1.0));
    assert!((dim.get(&w("1,0")).unwrap() - expected).abs() < 1e-12);
}

#[test]
fn involution_b2_9() {
    let alcove = b(2, 9);
    let inv = InvolutionData::new(&alcove).unwrap();
    assert_eq!(inv.phi(&w("1,0")).unwrap(), w("5/2,3/2"));
    assert_eq!(alcove.fuse(inv.gamma(), &w("1,0")).unwrap(), map(&[("5/2,3/2", 1)]));
    assert_eq!(phi_sign(2, -1), -1);
    assert_eq!(phi_sign(4, 1), 1);
    assert_eq!(phi_sign(4, -1), 1);
    assert_eq!(phi_sign(5, 1), -1);
}

#[test]
fn diagrams_and_psi() {
    assert_eq!(gamma_set(2, 9).unwrap().len(), 12);
    for g in gamma_set(2, 9).unwrap() {
        let c = g.columns();
        assert!(c.len() <= 2 && c.iter().sum::<u32>() <= 5);
    }
    let columns: Vec<FerrersDiagram> = (0..=5).map(|h| FerrersDiagram::from_columns(&[h])).collect();
    assert_eq!(gamma_set(2, 7).unwrap(), columns);
    assert_eq!(bar_map(2, &d(&[1, 1, 1, 1, 1])).unwrap(), w("0,0"));
    assert_eq!(bar_map(2, &d(&[1])).unwrap(), w("1,0"));
    assert_eq!(bar_map(3, &FerrersDiagram::empty()).unwrap(), w("0,0,0"));

    let a9 = b(2, 9);
    let inv9 = InvolutionData::new(&a9).unwrap();
    assert_eq!(psi(&a9, &inv9, &d(&[1])).unwrap(), w("5/2,3/2"));
    assert!(matches!(psi(&a9, &inv9, &d(&[4])), Err(Error::Domain(_))));
    let a7 = b(2, 7);
    let inv7 = InvolutionData::new(&a7).unwrap();
    assert_eq!(psi(&a7, &inv7, &d(&[1, 1, 1, 1, 1])).unwrap(), w("3/2,3/2"));

    assert_eq!(box_neighbors(2, 9, &FerrersDiagram::empty()), vec![d(&[1])]);
    let mut n9 = box_neighbors(2, 9, &d(&[1]));
    n9.sort();
    let mut expected = vec![FerrersDiagram::empty(), d(&[2]), d(&[1, 1])];
    expected.sort();
    assert_eq!(n9, expected);
    assert_eq!(box_neighbors(2, 7, &d(&[1])).len(), 2);
}

#[test]
fn braiding_exponents() {
    for k in 2..=4 {
        let alcove = b(k, 2 * k as i64 + 5);
        let table = FusionTable::build(&alcove).unwrap();
        let p = QuantumParams::new(alcove.clone(), 1).unwrap();
        let l1 = alcove.datum().vector_weight();
        assert_eq!(twist_exponent_doubled(alcove.datum(), &l1), 8 * k as i64);
        let mut sym = vec![0; k];
        sym[0] = 2;
        let got = p.braiding_eig_sq(&table, &l1, &l1, &Weight::integral(&sym)).unwrap();
        assert_eq!(got, QPower::integer(4, alcove.ell()));
    }
    let alcove = b(2, 9);
    let table = FusionTable::build(&alcove).unwrap();
    let p = QuantumParams::new(alcove.clone(), 1).unwrap();
    let v = w("5/2,3/2");
    assert_eq!(twist_exponent_doubled(alcove.datum(), &v), 70);
    assert_eq!(
        p.braiding_eig_sq(&table, &v, &v, &w("2,0")).unwrap(),
        QPower::integer(-50, 9)
    );
    assert_eq!(QPower::integer(-50, 9), QPower::integer(4, 9));
    assert!(matches!(
        p.braiding_eig_sq(&table, &v, &v, &w("2,2")),
        Err(Error::Domain(_))
    ));
}

#[test]
fn bmw_dimensions() {
    let p = QuantumParams::new(b(2, 9), 1).unwrap();
    let x = BmwParams::from_quantum(&p).unwrap().q;
    assert!((x + p.q() * p.q()).norm() < 1e-12);
    let dim = dim_from_eigs(-x.inv(), x, -x.powi(-4)).unwrap();
    let target = quantum_number_at(x, -4) + 1.0;
    assert!((dim.norm() - target.norm()).abs() < 1e-9);

    // C_r vector dimension against the type C quantum dimension of ε1
    for (k, ell) in [(2, 9), (2, 11), (3, 13)] {
        let r = ((ell - 2 * k as i64 - 1) / 2) as usize;
        let c = AlcoveParams::from_family(Family::C, r, ell).unwrap();
        for z in [1, 2] {
            let pc = QuantumParams::new(c.clone(), z).unwrap();
            let eig = type_c_vector_dim(&pc, r).unwrap();
            let direct = pc.qdim(&c.datum().vector_weight());
            assert!((eig.norm() - direct.abs()).abs() < 1e-9, "C{r} at {ell}, z={z}");
        }
    }
}

#[test]
fn rank_level_cardinalities() {
    for (k, ell) in [(2, 9), (2, 11), (3, 11)] {
        assert!(ranklevel_check(k, ell).unwrap().cardinalities_equal, "({k},{ell})");
    }
    let c2 = AlcoveParams::from_family(Family::C, 2, 9).unwrap().alcove_enumerate();
    assert_eq!(c2.len(), 12);
    assert!(c2
        .iter()
        .all(|l| l.is_integral() && l.doubled()[0] + l.doubled()[1] <= 10));
}

#[test]
fn unitarity_values() {
    let t = PI / 11.0;
    assert!((h(2, 11, 1).unwrap() - (1.0 - (4.0 * t).sin() / t.sin())).abs() < 1e-12);
    assert!((h(2, 11, 1).unwrap() + 2.2287).abs() < 1e-4);
    assert!((h(2, 11, 10).unwrap() - (qint(4.0, 1, 11) + 1.0)).abs() < 1e-12);
    let dim = dim_box(2, 11).unwrap();
    assert!((dim - 3.5133).abs() < 1e-4);
    let alcove = b(2, 11);
    let inv = InvolutionData::new(&alcove).unwrap();
    let boxed = psi(&alcove, &inv, &d(&[1])).unwrap();
    assert_eq!(boxed, generator_label(&inv, &alcove).unwrap());
    assert!((coroot_sine_product(&alcove, &boxed) - dim).abs() < 1e-12);
    for (k, ell) in [(2, 7), (3, 11), (4, 21)] {
        assert!(dim_box(k, ell).unwrap() > 1.0);
    }
    assert!(matches!(h(2, 11, 11), Err(Error::Domain(_))));
    assert!(!audit(2, 9).unwrap().conclusive);
    let report = audit(2, 11).unwrap();
    assert!(report.conclusive);
    assert_eq!(report.per_z.len(), 10);
    assert!(report.all_witnessed && report.all_distinct);
    // the strict bound holds except at z = ℓ-1
    let failing: Vec<i64> = report.per_z.iter().filter(|e| !e.strict).map(|e| e.z).collect();
    assert_eq!(failing, vec![10]);
}
