#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::path::PathBuf;
use veerkit::carried::{assemble_surface, enumerate_weight_systems, CarriedSurface, WeightSystem};
use veerkit::mutation::{mutate, EdgeProductDisk};
use veerkit::symmetry::{automorphism_group, edge_image, SurfaceAutomorphism};
use veerkit::{canonical_signature, load_triangulation, Color, Flavor, TautIdealTriangulation};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(data_dir().join(name)).unwrap()
}

pub fn load(name: &str) -> TautIdealTriangulation {
    load_triangulation(&read(name)).unwrap()
}

pub const SHIPPED: [&str; 6] = [
    "fig8.vrt",
    "mutant-r.vrt",
    "mutant-s.vrt",
    "mutant-rs.vrt",
    "fig12.vrt",
    "fig12-mutant.vrt",
];

pub fn sig(t: &TautIdealTriangulation) -> String {
    canonical_signature(t, Flavor::Taut).unwrap()
}

/// Shipped triangulations together with every mutant along their connected or not weight
/// systems with weights at most one, one per taut signature.
pub fn corpus() -> Vec<TautIdealTriangulation> {
    let mut out: BTreeMap<String, TautIdealTriangulation> = BTreeMap::new();
    for name in SHIPPED {
        let t = load(name);
        out.insert(sig(&t), t);
    }
    let base: Vec<TautIdealTriangulation> = out.values().cloned().collect();
    for t in &base {
        for w in enumerate_weight_systems(t, 1).unwrap() {
            let q = assemble_surface(t, &w).unwrap();
            if q.num_triangles() > 8 {
                continue;
            }
            for phi in automorphism_group(&q, false) {
                if let Ok(rec) = mutate(t, &w, &phi) {
                    out.entry(sig(&rec.mutant)).or_insert(rec.mutant);
                }
            }
        }
    }
    out.into_values().collect()
}

/// Random (triangulation, weight system, automorphism) triples with small surfaces.
pub struct Sampler {
    pub rng: ChaCha8Rng,
    pool: Vec<(TautIdealTriangulation, Vec<WeightSystem>)>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        let pool = SHIPPED
            .iter()
            .map(|n| {
                let t = load(n);
                let ws = small_weight_systems(&t);
                (t, ws)
            })
            .collect();
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool,
        }
    }

    pub fn add(&mut self, t: TautIdealTriangulation) {
        let ws = small_weight_systems(&t);
        if !ws.is_empty() {
            self.pool.push((t, ws));
        }
    }

    pub fn instance(
        &mut self,
    ) -> (
        TautIdealTriangulation,
        WeightSystem,
        CarriedSurface,
        SurfaceAutomorphism,
    ) {
        loop {
            let (t, ws) = self.pool.choose(&mut self.rng).unwrap();
            let w = ws.choose(&mut self.rng).unwrap().clone();
            let q = assemble_surface(t, &w).unwrap();
            let group = automorphism_group(&q, false);
            if group.len() < 2 && self.rng.gen_bool(0.8) {
                continue;
            }
            let phi = group.choose(&mut self.rng).unwrap().clone();
            return (t.clone(), w, q, phi);
        }
    }
}

fn small_weight_systems(t: &TautIdealTriangulation) -> Vec<WeightSystem> {
    enumerate_weight_systems(t, 2)
        .unwrap()
        .into_iter()
        .filter(|w| w.total() <= 12)
        .collect()
}

/// Coordinates putting the top diagonal above the bottom diagonal, oriented so that the
/// orientation sign of the labelled tetrahedron matches its parity.
pub fn realize(tri: &TautIdealTriangulation, t: usize) -> [[i64; 3]; 4] {
    let co = tri.coorientations().unwrap()[t];
    let bottom: Vec<usize> = (0..4).filter(|&i| !co[i]).collect();
    let top: Vec<usize> = (0..4).filter(|&i| co[i]).collect();
    let mut p = [[0i64; 3]; 4];
    p[bottom[0]] = [-1, 0, 1];
    p[bottom[1]] = [1, 0, 1];
    p[top[0]] = [0, -1, 0];
    p[top[1]] = [0, 1, 0];
    let d = |a: [i64; 3], b: [i64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let (u, v, w) = (d(p[1], p[0]), d(p[2], p[0]), d(p[3], p[0]));
    let det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0]);
    if (det < 0) != (tri.parity(t) > 0) {
        p.swap(bottom[0], bottom[1]);
    }
    p
}

fn class_of(tri: &TautIdealTriangulation, t: usize, a: usize, b: usize) -> usize {
    tri.edge_between(t, a as u8, b as u8)
}

/// Every coloring in which each tetrahedron's equator reads red, blue, red, blue
/// counter-clockwise from above, starting at an endpoint of the top diagonal.
pub fn veering_colorings(tri: &TautIdealTriangulation) -> Vec<Vec<Color>> {
    let ne = tri.num_edges();
    assert!(ne <= 16);
    let mut constraints = Vec::new();
    for t in 0..tri.num_tets() {
        let p = realize(tri, t);
        let mut ring: Vec<usize> = (0..4).collect();
        ring.sort_by(|&a, &b| {
            let ang = |v: usize| (p[v][1] as f64).atan2(p[v][0] as f64);
            ang(a).partial_cmp(&ang(b)).unwrap()
        });
        let start = (0..4).find(|&i| p[ring[i]][2] == 1).unwrap();
        for k in 0..4 {
            let a = ring[(start + k) % 4];
            let b = ring[(start + k + 1) % 4];
            let c = if k % 2 == 0 { Color::Red } else { Color::Blue };
            constraints.push((class_of(tri, t, a, b), c));
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << ne) {
        let col: Vec<Color> = (0..ne)
            .map(|e| {
                if mask >> e & 1 == 1 {
                    Color::Blue
                } else {
                    Color::Red
                }
            })
            .collect();
        if constraints.iter().all(|&(e, c)| col[e] == c) {
            out.push(col);
        }
    }
    out
}

/// Edge orientations (bits flip the reference direction) under which, in every face, the
/// large side and each small side disagree about the counter-clockwise boundary direction
/// seen from above. Each face is examined inside the tetrahedron above it, where its large
/// side is the bottom diagonal.
pub fn edge_orientations(tri: &TautIdealTriangulation) -> Vec<Vec<bool>> {
    let ne = tri.num_edges();
    assert!(ne <= 10);
    // (edge, runs along its reference when traversed ccw, is large)
    let mut faces: Vec<Vec<(usize, bool, bool)>> = Vec::new();
    for t in 0..tri.num_tets() {
        let co = tri.coorientations().unwrap()[t];
        let p = realize(tri, t);
        let diag: Vec<usize> = (0..4).filter(|&i| co[i]).collect();
        for i in (0..4).filter(|&i| !co[i]) {
            let mut vs: Vec<usize> = (0..4).filter(|&v| v != i).collect();
            let area = (p[vs[1]][0] - p[vs[0]][0]) * (p[vs[2]][1] - p[vs[0]][1])
                - (p[vs[1]][1] - p[vs[0]][1]) * (p[vs[2]][0] - p[vs[0]][0]);
            if area < 0 {
                vs.swap(1, 2);
            }
            let mut sides = Vec::new();
            for k in 0..3 {
                let (a, b) = (vs[k], vs[(k + 1) % 3]);
                let e = class_of(tri, t, a, b);
                let m = tri
                    .edge(e)
                    .embeddings
                    .iter()
                    .find(|m| {
                        m.tet == t && {
                            let s = [m.tail as usize, m.head as usize];
                            s == [a, b] || s == [b, a]
                        }
                    })
                    .unwrap();
                let large = diag.contains(&a) && diag.contains(&b);
                sides.push((e, m.tail as usize == a, large));
            }
            faces.push(sides);
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << ne) {
        let ok = faces.iter().all(|sides| {
            let dir = |&(e, along, _): &(usize, bool, bool)| along ^ (mask >> e & 1 == 1);
            let l = sides.iter().find(|s| s.2).unwrap();
            sides.iter().filter(|s| !s.2).all(|s| dir(s) != dir(l))
        });
        if ok {
            out.push((0..ne).map(|e| mask >> e & 1 == 1).collect());
        }
    }
    out
}

/// Whether some disks glue up cyclically: a cycle `d1 -> d2 -> ... -> d1` with the image of
/// the top base of each disk equal to the bottom base of the next.
pub fn has_disk_cycle(
    q: &CarriedSurface,
    phi: &SurfaceAutomorphism,
    disks: &[EdgeProductDisk],
) -> bool {
    let image = |(e, c): (usize, usize)| {
        let s = q.edge_id(e, c).unwrap();
        let t = edge_image(q, phi, s);
        let se = &q.edges()[t];
        (se.edge, se.copy)
    };
    let n = disks.len();
    let step = |i: usize, j: usize| image(disks[i].top()) == disks[j].bottom();
    fn extend(
        start: usize,
        cur: usize,
        seen: &mut Vec<bool>,
        n: usize,
        step: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        for j in 0..n {
            if step(cur, j) {
                if j == start {
                    return true;
                }
                if !seen[j] {
                    seen[j] = true;
                    if extend(start, j, seen, n, step) {
                        return true;
                    }
                    seen[j] = false;
                }
            }
        }
        false
    }
    (0..n).any(|s| {
        let mut seen = vec![false; n];
        seen[s] = true;
        extend(s, s, &mut seen, n, &step)
    })
}
