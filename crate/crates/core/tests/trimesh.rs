mod common;

use common::{corpus, load, read, sig, veering_colorings, Sampler, SHIPPED};
use proptest::prelude::*;
use veerkit::mutation::mutate;
use veerkit::perm::ALL_PERMS;
use veerkit::trimesh::vrt::parse_vrt;
use veerkit::trimesh::{
    admissible_moves, decode_signature, pachner_move_with_inverse, ConnectOutcome, Gluing,
    MoveKind, DEFAULT_NODE_BUDGET,
};
use veerkit::{
    canonical_signature, load_triangulation, pachner_connect, pachner_move, Error, Flavor, Perm4,
    TautIdealTriangulation,
};

#[test]
fn figure_eight_sibling_counts() {
    let v = load("fig8.vrt");
    assert_eq!((v.num_tets(), v.num_faces(), v.num_edges()), (8, 16, 8));
    assert!(v.check_taut().is_ok());
}

#[test]
fn involution_violation_is_reported() {
    let err = load_triangulation(&read("broken.vrt")).unwrap_err();
    assert!(
        matches!(
            err,
            Error::Involution {
                tet: 0,
                face: 3,
                ..
            }
        ),
        "{err}"
    );

    let doc = "vrt 1\ntets 2\n\
        g 0 0 1 2 2103\ng 0 1 1 1 0123\ng 0 2 1 0 2103\ng 0 3 1 3 0123\n\
        g 1 0 0 3 3120\ng 1 1 0 1 0123\ng 1 2 0 0 2103\ng 1 3 0 3 0123\n";
    let err = load_triangulation(doc).unwrap_err();
    assert!(matches!(err, Error::Involution { .. }), "{err}");
}

#[test]
fn parse_errors_carry_positions() {
    let err = load_triangulation("vrt 1\ntets 1\ng 0 0 0 1 x\n").unwrap_err();
    match err {
        Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 11)),
        e => panic!("{e}"),
    }
    assert!(matches!(
        load_triangulation("vrt 2\n").unwrap_err(),
        Error::Parse { line: 1, .. }
    ));
}

#[test]
fn unglued_face_is_reported() {
    let doc = "vrt 1\ntets 1\ng 0 0 0 1 1023\ng 0 1 0 0 1023\ng 0 2 0 3 0132\n";
    assert!(matches!(
        load_triangulation(doc).unwrap_err(),
        Error::Unglued { .. }
    ));
}

/// Top and bottom diagonal counts of each edge class of a one-tetrahedron gluing, computed by
/// merging the six edges along the face identifications.
fn one_tet_taut(gl: &[Gluing; 4], out: [bool; 4]) -> bool {
    let edges: Vec<(u8, u8)> = (0..4u8)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .collect();
    let key = |a: u8, b: u8| {
        edges
            .iter()
            .position(|&e| e == (a.min(b), a.max(b)))
            .unwrap()
    };
    let mut parent: Vec<usize> = (0..6).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for i in 0..4u8 {
        let g = gl[i as usize];
        let vs: Vec<u8> = (0..4).filter(|&v| v != i).collect();
        for x in 0..3 {
            for y in x + 1..3 {
                let a = key(vs[x], vs[y]);
                let b = key(g.perm.apply(vs[x]), g.perm.apply(vs[y]));
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    for i in 0..4 {
        if out[i] == out[gl[i].face as usize] {
            return false;
        }
    }
    let tops: Vec<u8> = (0..4).filter(|&i| out[i as usize]).collect();
    let bots: Vec<u8> = (0..4).filter(|&i| !out[i as usize]).collect();
    let top_diag = find(&mut parent, key(bots[0], bots[1]));
    let bottom_diag = find(&mut parent, key(tops[0], tops[1]));
    let classes: Vec<usize> = (0..6).map(|e| find(&mut parent, e)).collect();
    classes.iter().all(|&c| c == top_diag) && top_diag == bottom_diag
}

#[test]
fn one_tetrahedron_exhaustive() {
    let pairings = [[1u8, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
    let mut valid = 0;
    let mut checked = 0;
    for pairing in pairings {
        let odd = |i: u8| -> Vec<Perm4> {
            ALL_PERMS
                .iter()
                .copied()
                .filter(|p| p.apply(i) == pairing[i as usize] && p.sign() < 0)
                .collect()
        };
        let (a, b) = if pairing[0] == 1 { (0, 2) } else { (0, 1) };
        for pa in odd(a) {
            for pb in odd(b) {
                let mut gl = [Gluing {
                    tet: 0,
                    face: 0,
                    perm: Perm4::IDENTITY,
                }; 4];
                for (i, p) in [(a, pa), (b, pb)] {
                    let j = pairing[i as usize];
                    gl[i as usize] = Gluing {
                        tet: 0,
                        face: j,
                        perm: p,
                    };
                    gl[j as usize] = Gluing {
                        tet: 0,
                        face: i,
                        perm: p.inverse(),
                    };
                }
                for mask in 0u8..16 {
                    if mask.count_ones() != 2 {
                        continue;
                    }
                    let out = [0, 1, 2, 3].map(|i| mask >> i & 1 == 1);
                    let expected = one_tet_taut(&gl, out);
                    let tri = TautIdealTriangulation::new(vec![gl], Some(vec![out]));
                    valid += tri.is_ok() as usize;
                    let ok = tri.map(|t| t.check_taut().is_ok()).unwrap_or(false);
                    assert_eq!(ok, expected, "{gl:?} {out:?}");
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 3 * 9 * 6);
    assert!(valid > 0);
}

#[test]
fn one_tetrahedron_with_paired_top_faces_fails_marking() {
    // Faces 0 and 1 are both out and glued to each other.
    let doc = "vrt 1\ntets 1\ng 0 0 0 1 1023\ng 0 1 0 0 1023\ng 0 2 0 3 0132\ng 0 3 0 2 0132\n\
        co 0 1 1 0 0\n";
    assert!(matches!(
        load_triangulation(doc).unwrap_err(),
        Error::TautMarking(_)
    ));
}

#[test]
fn every_single_face_flip_breaks_tautness() {
    let v = load("fig8.vrt");
    let co = v.coorientations().unwrap().to_vec();
    for face in v.faces() {
        let mut c = co.clone();
        for (t, i) in face.slots {
            c[t][i as usize] = !c[t][i as usize];
        }
        let flipped = v.with_coorientations(c).unwrap();
        assert!(!flipped.check_taut().is_ok());
    }
}

#[test]
fn taut_edge_properties() {
    let mut low_degree = 0;
    for t in corpus() {
        assert_eq!(t.num_edges(), t.num_tets());
        let veering = t.check_veering().unwrap().is_veering();
        for (e, class) in t.edges().iter().enumerate() {
            // Mutants that are taut but not veering may carry degree-2 edges.
            assert!(class.degree() >= if veering { 4 } else { 2 });
            low_degree += (class.degree() < 3) as usize;
            let pis = (0..t.num_tets())
                .map(|k| {
                    [t.top_diagonal(k), t.bottom_diagonal(k)]
                        .iter()
                        .filter(|d| d.map(|l| t.edge_of(k, l)) == Some(e))
                        .count()
                })
                .sum::<usize>();
            assert_eq!(pis, 2);
            assert_eq!(class.left.len() + class.right.len(), class.degree());
            let below = class.tet_below().unwrap();
            let above = class.tet_above().unwrap();
            assert!(t
                .top_faces(below)
                .unwrap()
                .iter()
                .any(|&i| t.face_of(below, i) == class.left[0].face));
            assert!(t
                .top_faces(below)
                .unwrap()
                .iter()
                .any(|&i| t.face_of(below, i) == class.right[0].face));
            let last_l = class.left.last().unwrap().face;
            let last_r = class.right.last().unwrap().face;
            assert!(t
                .bottom_faces(above)
                .unwrap()
                .iter()
                .any(|&i| t.face_of(above, i) == last_l));
            assert!(t
                .bottom_faces(above)
                .unwrap()
                .iter()
                .any(|&i| t.face_of(above, i) == last_r));
        }
    }
    assert!(low_degree > 0);
}

#[test]
fn shipped_triangulations_are_veering() {
    for name in SHIPPED {
        assert!(load(name).check_veering().unwrap().is_veering(), "{name}");
    }
}

#[test]
fn veering_check_matches_exhaustive_colorings() {
    let mut all = corpus();
    let mut sampler = Sampler::new(7);
    let mut mutants = 0;
    while mutants < 50 {
        let (t, w, _, phi) = sampler.instance();
        if let Ok(rec) = mutate(&t, &w, &phi) {
            if rec.mutant.num_edges() <= 12 {
                sampler.add(rec.mutant.clone());
                all.push(rec.mutant);
                mutants += 1;
            }
        }
    }
    let mut veering = 0;
    for t in &all {
        let brute = veering_colorings(t);
        assert!(brute.len() <= 1);
        match t.check_veering().unwrap().colors() {
            Some(c) => {
                assert_eq!(brute, vec![c.to_vec()]);
                veering += 1;
            }
            None => assert!(brute.is_empty()),
        }
    }
    assert!(veering > 0 && veering < all.len());
}

#[test]
fn non_track_preserving_mutants_can_fail_to_be_veering() {
    use veerkit::carried::{assemble_surface, enumerate_connected_weight_systems};
    use veerkit::symmetry::automorphism_group;
    let v = load("fig8.vrt");
    let mut found = 0;
    for w in enumerate_connected_weight_systems(&v, 1).unwrap() {
        let q = assemble_surface(&v, &w).unwrap();
        for phi in automorphism_group(&q, false) {
            if phi.track_preserving {
                continue;
            }
            let rec = mutate(&v, &w, &phi).unwrap();
            assert!(rec.report.taut.is_ok());
            if !rec.report.veering.is_veering() {
                assert!(veering_colorings(&rec.mutant).is_empty());
                found += 1;
            }
        }
    }
    assert!(found > 0);
}

fn relabeled(
    t: &TautIdealTriangulation,
    order: &[usize],
    perms: &[usize],
) -> TautIdealTriangulation {
    let maps: Vec<Perm4> = perms.iter().map(|&i| ALL_PERMS[i]).collect();
    t.relabel(order, &maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn signature_is_relabeling_invariant(
        which in 0usize..SHIPPED.len(),
        order in Just((0..9).collect::<Vec<usize>>()).prop_shuffle(),
        perms in prop::collection::vec(0usize..24, 9),
    ) {
        let t = load(SHIPPED[which]);
        let n = t.num_tets();
        let order: Vec<usize> = order.into_iter().filter(|&x| x < n).collect();
        let r = relabeled(&t, &order, &perms[..n]);
        prop_assert_eq!(sig(&r), sig(&t));
        prop_assert_eq!(
            canonical_signature(&r, Flavor::Plain).unwrap(),
            canonical_signature(&t, Flavor::Plain).unwrap()
        );
    }
}

#[test]
fn signature_ignores_global_reversal() {
    for name in SHIPPED {
        let t = load(name);
        assert_eq!(sig(&t.reversed()), sig(&t));
    }
}

#[test]
fn signature_round_trips() {
    for t in corpus() {
        for flavor in [Flavor::Plain, Flavor::Taut] {
            let s = canonical_signature(&t, flavor).unwrap();
            let back = decode_signature(&s).unwrap();
            assert_eq!(canonical_signature(&back, flavor).unwrap(), s);
        }
    }
}

#[test]
fn mutant_square_signatures_are_distinct() {
    let sigs: std::collections::BTreeSet<String> =
        ["fig8.vrt", "mutant-r.vrt", "mutant-s.vrt", "mutant-rs.vrt"]
            .iter()
            .map(|n| sig(&load(n)))
            .collect();
    assert_eq!(sigs.len(), 4);
}

#[test]
fn plain_vrt_loads_without_coorientations() {
    let v = load("fig8.vrt");
    let doc = veerkit::write_vrt(&v.to_plain(), &[]);
    let (_, co) = parse_vrt(&doc).unwrap();
    assert!(co.is_none());
    let p = load_triangulation(&doc).unwrap();
    assert!(!p.is_taut());
    assert!(p.check_veering().is_err());
}

#[test]
fn two_three_then_inverse_is_identity() {
    for name in SHIPPED {
        let t = load(name).to_plain();
        let s = canonical_signature(&t, Flavor::Plain).unwrap();
        for (kind, site) in admissible_moves(&t) {
            let (moved, back_site) = pachner_move_with_inverse(&t, site, kind).unwrap();
            let delta = if kind == MoveKind::TwoThree { 1 } else { -1 };
            assert_eq!(moved.num_tets() as i64, t.num_tets() as i64 + delta);
            let inverse = match kind {
                MoveKind::TwoThree => MoveKind::ThreeTwo,
                MoveKind::ThreeTwo => MoveKind::TwoThree,
            };
            let back = pachner_move(&moved, back_site, inverse).unwrap();
            assert_eq!(canonical_signature(&back, Flavor::Plain).unwrap(), s);
        }
    }
}

#[test]
fn two_three_adds_a_tetrahedron() {
    let v = load("fig8.vrt");
    let (kind, site) = admissible_moves(&v)
        .into_iter()
        .find(|m| m.0 == MoveKind::TwoThree)
        .unwrap();
    assert_eq!(pachner_move(&v, site, kind).unwrap().num_tets(), 9);
}

#[test]
fn degenerate_sites_are_rejected() {
    for name in SHIPPED {
        let t = load(name);
        for (e, class) in t.edges().iter().enumerate() {
            let mut tets: Vec<usize> = class.embeddings.iter().map(|m| m.tet).collect();
            tets.sort();
            tets.dedup();
            if class.degree() == 3 && tets.len() < 3 {
                assert!(matches!(
                    pachner_move(&t, e, MoveKind::ThreeTwo),
                    Err(Error::InvalidSite(_))
                ));
            }
            if class.degree() != 3 {
                assert!(pachner_move(&t, e, MoveKind::ThreeTwo).is_err());
            }
        }
        for (f, face) in t.faces().iter().enumerate() {
            if face.slots[0].0 == face.slots[1].0 {
                assert!(matches!(
                    pachner_move(&t, f, MoveKind::TwoThree),
                    Err(Error::InvalidSite(_))
                ));
            }
        }
    }
}

#[test]
fn pachner_distance_between_v_and_v_rho_sigma() {
    let v = load("fig8.vrt");
    let w = load("mutant-rs.vrt");
    let ConnectOutcome::Path(path) = pachner_connect(&v, &w, 4, DEFAULT_NODE_BUDGET).unwrap()
    else {
        panic!("no path");
    };
    assert_eq!(path.len(), 4);
    assert_eq!(
        path.iter().filter(|s| s.kind == MoveKind::TwoThree).count(),
        2
    );
    assert_eq!(
        path.iter().filter(|s| s.kind == MoveKind::ThreeTwo).count(),
        2
    );
    assert_eq!(
        path.last().unwrap().signature,
        canonical_signature(&w, Flavor::Plain).unwrap()
    );
    assert_eq!(
        pachner_connect(&v, &w, 3, DEFAULT_NODE_BUDGET).unwrap(),
        ConnectOutcome::NotFound
    );
    assert_eq!(
        pachner_connect(&v, &v, 4, DEFAULT_NODE_BUDGET).unwrap(),
        ConnectOutcome::Path(Vec::new())
    );
}

#[test]
fn pachner_budget_is_distinct_from_not_found() {
    let v = load("fig8.vrt");
    let w = load("mutant-rs.vrt");
    assert!(matches!(
        pachner_connect(&v, &w, 6, 10),
        Err(Error::ResourceCap { budget: 10 })
    ));
}
