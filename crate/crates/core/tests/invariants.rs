mod common;

use common::{corpus, edge_orientations, load, SHIPPED};
use proptest::prelude::*;
use veerkit::carried::{enumerate_weight_systems, WeightSystem};
use veerkit::data::{weight_vector, FIG12_W, Q0, Q1, Q2, Q3};
use veerkit::invariants::{
    boundary_composition_vanishes, carried_class, carried_cone_rays, chain_complex,
    edge_orientable, homology_h1, is_coboundary, orientation_constraints, satisfies,
    tet_coboundary, AbelianGroupInvariant, EdgeOrientability,
};
use veerkit::perm::ALL_PERMS;
use veerkit::trimesh::MoveKind;
use veerkit::{pachner_connect, pachner_move, ConnectOutcome, Perm4, TautIdealTriangulation};

fn class_vec(t: &TautIdealTriangulation, terms: &[(u64, usize)]) -> Vec<i64> {
    weight_vector(t.num_faces(), terms)
        .iter()
        .map(|&x| x as i64)
        .collect()
}

#[test]
fn h1_of_the_mutant_square() {
    let expected = [
        ("fig8.vrt", AbelianGroupInvariant::new(1, &[8])),
        ("mutant-r.vrt", AbelianGroupInvariant::new(2, &[])),
        ("mutant-s.vrt", AbelianGroupInvariant::new(2, &[])),
        ("mutant-rs.vrt", AbelianGroupInvariant::new(1, &[8])),
        ("fig12.vrt", AbelianGroupInvariant::new(3, &[])),
    ];
    for (file, h) in expected {
        assert_eq!(homology_h1(&load(file)), h, "{file}");
    }
    assert_eq!(homology_h1(&load("fig8.vrt")).to_string(), "Z + Z/8");
    assert_eq!(homology_h1(&load("mutant-r.vrt")).to_string(), "Z^2");
}

#[test]
fn edge_orientability_of_the_mutant_square() {
    for (file, eo) in [
        ("fig8.vrt", true),
        ("mutant-r.vrt", false),
        ("mutant-s.vrt", true),
        ("mutant-rs.vrt", false),
    ] {
        assert_eq!(
            edge_orientable(&load(file)).unwrap().is_orientable(),
            eo,
            "{file}"
        );
    }
}

#[test]
fn edge_orientability_matches_brute_force() {
    let mut checked = 0;
    for t in corpus() {
        if !t.check_veering().unwrap().is_veering() || t.num_edges() > 10 {
            continue;
        }
        let brute = edge_orientations(&t);
        let constraints = orientation_constraints(&t).unwrap();
        match edge_orientable(&t).unwrap() {
            EdgeOrientability::Orientable(x) => {
                assert!(brute.contains(&x));
                assert!(satisfies(&constraints, &x));
            }
            EdgeOrientability::NotOrientable(cycle) => {
                assert!(brute.is_empty());
                assert!(cycle.iter().filter(|c| c.parity).count() % 2 == 1);
                let mut deg = vec![0; t.num_edges()];
                for c in &cycle {
                    assert!(constraints.contains(c));
                    deg[c.a] += 1;
                    deg[c.b] += 1;
                }
                assert!(deg.iter().all(|d| d % 2 == 0));
            }
        }
        checked += 1;
    }
    assert!(checked >= 4);
}

#[test]
fn fibre_classes_of_the_four_surfaces_agree() {
    let v = load("fig8.vrt");
    let c0 = carried_class(&v, &class_vec(&v, Q0));
    assert!(!c0.is_zero() && c0.is_primitive());
    for q in [Q1, Q2, Q3] {
        assert_eq!(carried_class(&v, &class_vec(&v, q)), c0);
    }
    let doubled: Vec<i64> = class_vec(&v, Q0).iter().map(|x| 2 * x).collect();
    assert_eq!(carried_class(&v, &doubled), c0.scaled(2));
    assert_eq!(&c0 + &c0, c0.scaled(2));
    assert_eq!(c0.scaled(2).primitive(), c0);
}

#[test]
fn fig12_class_is_primitive() {
    let t = load("fig12.vrt");
    let c = carried_class(&t, &class_vec(&t, FIG12_W));
    assert_eq!(c.coords.len(), 3);
    assert!(!c.is_zero());
    assert!(c.is_primitive());
}

#[test]
fn cone_rays() {
    let v = load("fig8.vrt");
    let rays = carried_cone_rays(&v, 2).unwrap();
    assert!(rays.single_ray);
    assert_eq!(rays.rays.len(), 1);
    let t = load("fig12.vrt");
    let rays = carried_cone_rays(&t, 2).unwrap();
    assert!(!rays.single_ray);
    assert!(rays.rays.len() >= 2);
    assert!(rays.rays.iter().all(|r| r.is_primitive()));
}

#[test]
fn boundary_of_boundary_vanishes_on_corpus() {
    for t in corpus() {
        assert!(boundary_composition_vanishes(&t));
        let (d2, d1) = chain_complex(&t);
        assert_eq!(d2.len(), t.num_faces());
        assert_eq!(d1.len(), t.num_tets());
    }
}

#[test]
fn coboundaries_have_zero_class() {
    for name in SHIPPED {
        let t = load(name);
        for k in 0..t.num_tets() {
            let d = tet_coboundary(&t, k);
            assert!(is_coboundary(&t, &d));
            assert!(carried_class(&t, &d).is_zero());
        }
    }
    let v = load("fig8.vrt");
    assert!(!is_coboundary(&v, &class_vec(&v, Q0)));
}

#[test]
fn h1_is_invariant_along_the_pachner_path() {
    let v = load("fig8.vrt");
    let w = load("mutant-rs.vrt");
    let ConnectOutcome::Path(path) = pachner_connect(&v, &w, 4, 200_000).unwrap() else {
        panic!("no path");
    };
    let h = homology_h1(&v);
    let mut cur = v;
    for step in &path {
        cur = pachner_move(&cur, step.site, step.kind).unwrap();
        assert_eq!(homology_h1(&cur), h, "after {} at {}", step.kind, step.site);
    }
    let t = load("fig12.vrt");
    let h = homology_h1(&t);
    for f in 0..t.num_faces() {
        if let Ok(u) = pachner_move(&t, f, MoveKind::TwoThree) {
            assert_eq!(homology_h1(&u), h);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_is_invariant_under_coboundaries(
        which in 0usize..2,
        coeffs in prop::collection::vec(-3i64..=3, 9),
        pick in 0usize..64,
    ) {
        let t = load(["fig8.vrt", "fig12.vrt"][which]);
        let ws: Vec<WeightSystem> = enumerate_weight_systems(&t, 1).unwrap();
        let w = ws[pick % ws.len()].as_i64();
        let mut moved = w.clone();
        for k in 0..t.num_tets() {
            for (m, d) in moved.iter_mut().zip(tet_coboundary(&t, k)) {
                *m += coeffs[k] * d;
            }
        }
        prop_assert_eq!(carried_class(&t, &moved), carried_class(&t, &w));
        let u = ws[(pick + 1) % ws.len()].as_i64();
        let diff: Vec<i64> = w.iter().zip(&u).map(|(a, b)| a - b).collect();
        prop_assert_eq!(
            carried_class(&t, &w) == carried_class(&t, &u),
            is_coboundary(&t, &diff)
        );
    }

    #[test]
    fn h1_is_relabeling_invariant(
        which in 0usize..SHIPPED.len(),
        order in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
        perms in prop::collection::vec(0usize..24, 9),
    ) {
        let t = load(SHIPPED[which]);
        let n = t.num_tets();
        let order: Vec<usize> = order.into_iter().filter(|&x| x < n).collect();
        let maps: Vec<Perm4> = perms[..n].iter().map(|&i| ALL_PERMS[i]).collect();
        let r = t.relabel(&order, &maps).unwrap();
        prop_assert_eq!(homology_h1(&r), homology_h1(&t));
        prop_assert_eq!(
            edge_orientable(&r).unwrap().is_orientable(),
            edge_orientable(&t).unwrap().is_orientable()
        );
    }
}
