mod common;

use common::{load, read};
use proptest::prelude::*;
use veerkit::carried::{assemble_surface, enumerate_weight_systems, CarriedSurface, WeightSystem};
use veerkit::data::{named_q0_automorphisms, weight_vector, FIG12_W, Q0, Q1, Q2, Q3};
use veerkit::symmetry::{
    apply, automorphism_group, fixed_simplices, is_group, parse_aut, write_aut, Simplex,
    SurfaceAutomorphism,
};
use veerkit::Color;

fn surface(file: &str, terms: &[(u64, usize)]) -> CarriedSurface {
    let t = load(file);
    let w = WeightSystem::new(&t, weight_vector(t.num_faces(), terms)).unwrap();
    assemble_surface(&t, &w).unwrap()
}

#[test]
fn track_group_orders() {
    assert_eq!(automorphism_group(&surface("fig8.vrt", Q0), true).len(), 4);
    for q in [Q1, Q2, Q3] {
        assert_eq!(automorphism_group(&surface("fig8.vrt", q), true).len(), 2);
    }
    assert_eq!(
        automorphism_group(&surface("fig12.vrt", FIG12_W), true).len(),
        2
    );
}

#[test]
fn track_groups_sit_inside_full_groups() {
    for (file, terms) in [
        ("fig8.vrt", Q0),
        ("fig8.vrt", Q1),
        ("fig8.vrt", Q2),
        ("fig8.vrt", Q3),
        ("fig12.vrt", FIG12_W),
    ] {
        let q = surface(file, terms);
        let track = automorphism_group(&q, true);
        let full = automorphism_group(&q, false);
        assert!(is_group(&track) && is_group(&full));
        assert!(track.iter().all(|p| full.contains(p)));
        assert!(full.iter().all(|p| p.track_preserving == track.contains(p)));
        assert!(full[0].is_identity() && track[0].is_identity());
    }
}

#[test]
fn klein_four_group_on_q0() {
    let q = surface("fig8.vrt", Q0);
    let named = named_q0_automorphisms(&q).unwrap();
    let names: Vec<&str> = named.iter().map(|(n, _)| *n).collect();
    assert_eq!(names, ["id", "r", "s", "rs"]);
    let get = |n: &str| named.iter().find(|(m, _)| *m == n).unwrap().1.clone();
    let (id, r, s, rs) = (get("id"), get("r"), get("s"), get("rs"));
    for x in [&r, &s, &rs] {
        assert_eq!(x.order(), 2);
        assert_eq!(&x.compose(x), &id);
    }
    assert_eq!(r.compose(&s), rs);
    assert_eq!(s.compose(&r), rs);
    assert_eq!(r.compose(&rs), s);
    assert_eq!(fixed_simplices(&q, &s), (0, 0));
    assert_eq!(fixed_simplices(&q, &r), (4, 0));
    assert_eq!(fixed_simplices(&q, &rs), (2, 2));
}

#[test]
fn rho_fixes_the_red_edge_between_f7_and_f11() {
    let t = load("fig8.vrt");
    let colors = t.check_veering().unwrap().colors().unwrap().to_vec();
    let q = surface("fig8.vrt", Q0);
    let named = named_q0_automorphisms(&q).unwrap();
    let r = &named[1].1;
    let t7 = q.triangle_id(7, 0).unwrap();
    let t11 = q.triangle_id(11, 0).unwrap();
    let shared: Vec<usize> = (0..q.num_edges())
        .filter(|&e| {
            let [a, b] = q.edges()[e].darts;
            let ts = [a.0, b.0];
            ts.contains(&t7) && ts.contains(&t11)
        })
        .collect();
    let red: Vec<usize> = shared
        .into_iter()
        .filter(|&e| colors[q.edges()[e].edge] == Color::Red)
        .collect();
    assert_eq!(red.len(), 1);
    assert_eq!(
        apply(&q, r, Simplex::Edge(red[0])).unwrap(),
        Simplex::Edge(red[0])
    );
    // A half turn about the edge swaps the two triangles on it.
    assert_eq!(r.images[t7], t11);
}

#[test]
fn q3_group_is_generated_by_the_rho_sigma_type() {
    let q = surface("fig8.vrt", Q3);
    let g = automorphism_group(&q, true);
    assert_eq!(fixed_simplices(&q, &g[1]), (2, 2));
    assert_eq!(g[1].order(), 2);
}

#[test]
fn group_axioms_on_small_surfaces() {
    let v = load("fig8.vrt");
    for w in enumerate_weight_systems(&v, 2)
        .unwrap()
        .iter()
        .filter(|w| w.total() <= 8)
    {
        let q = assemble_surface(&v, w).unwrap();
        for track in [true, false] {
            let g = automorphism_group(&q, track);
            assert!(is_group(&g));
            for p in &g {
                let mut im = p.images.clone();
                im.sort();
                assert_eq!(im, (0..q.num_triangles()).collect::<Vec<_>>());
                assert_eq!(p.validate(&q).unwrap(), *p);
            }
        }
    }
}

#[test]
fn apply_rejects_foreign_simplices() {
    let q = surface("fig8.vrt", Q0);
    let id = SurfaceAutomorphism::identity(&q);
    assert!(apply(&q, &id, Simplex::Triangle(4)).is_err());
    assert!(apply(&q, &id, Simplex::Edge(6)).is_err());
    for e in 0..6 {
        assert_eq!(apply(&q, &id, Simplex::Edge(e)).unwrap(), Simplex::Edge(e));
    }
}

#[test]
fn invalid_maps_are_rejected() {
    let q = surface("fig8.vrt", Q0);
    let mut bad = SurfaceAutomorphism::identity(&q);
    bad.rotations[0] = 1;
    assert!(bad.validate(&q).is_err());
    let mut bad = SurfaceAutomorphism::identity(&q);
    bad.images[0] = 1;
    assert!(bad.validate(&q).is_err());
}

#[test]
fn aut_files_round_trip() {
    let q = surface("fig8.vrt", Q0);
    let parsed = parse_aut(&read("q0.aut")).unwrap();
    let named = named_q0_automorphisms(&q).unwrap();
    assert_eq!(parsed.len(), 4);
    for ((n1, p1), (n2, p2)) in parsed.iter().zip(&named) {
        assert_eq!(n1, n2);
        assert_eq!(&p1.validate(&q).unwrap(), p2);
    }
    let refs: Vec<(&str, &SurfaceAutomorphism)> = named.iter().map(|(n, p)| (*n, p)).collect();
    assert_eq!(write_aut(&refs), read("q0.aut"));
    assert!(parse_aut("aut 2\n").is_err());
}

proptest! {
    #[test]
    fn apply_is_functorial(i in 0usize..4, j in 0usize..4, x in 0usize..10) {
        let q = surface("fig8.vrt", Q0);
        let g = automorphism_group(&q, false);
        let (a, b) = (&g[i % g.len()], &g[j % g.len()]);
        let s = if x < 4 { Simplex::Triangle(x) } else { Simplex::Edge(x - 4) };
        let lhs = apply(&q, &a.compose(b), s).unwrap();
        let rhs = apply(&q, a, apply(&q, b, s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = apply(&q, &a.inverse(), apply(&q, a, s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
    }
}
