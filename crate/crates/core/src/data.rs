//! Transcribed triangulations and the reconstruction of their gluings.
//!
//! A transcription lists, per tetrahedron, its two top faces and its two bottom faces by face
//! label. Labels are placed into slots by rank: inside each tetrahedron the `r`-th smallest
//! label occupies slot `3 - r`, which makes the face numbering of the reconstructed
//! triangulation reproduce the labels. Vertex bijections are then found by search.

use crate::carried::{
    assemble_surface, classify_solution_cone, enumerate_connected_weight_systems, write_wts,
    CarriedSurface, ConeClass, WeightSystem,
};
use crate::error::{Error, Result};
use crate::invariants::{edge_orientable, homology_h1, AbelianGroupInvariant};
use crate::mutation::{mutate, transfer_weights, transport_automorphism, RegluingMap};
use crate::perm::{edge_index, face_vertices, Perm4, ALL_PERMS};
use crate::symmetry::{automorphism_group, fixed_simplices, write_aut, SurfaceAutomorphism};
use crate::trimesh::vrt::write_vrt;
use crate::trimesh::{
    canonical_signature, tet_forced_colors, Color, Flavor, Gluing, TautIdealTriangulation,
};
use std::collections::BTreeMap;

/// Values a reconstruction must reproduce.
#[derive(Clone, Debug, Default)]
pub struct Expected {
    pub veering: bool,
    pub h1: Option<(usize, &'static [u64])>,
    pub betti: Option<usize>,
    pub edge_orientable: Option<bool>,
    pub cone: Option<ConeClass>,
    /// Supports of 0/1 weight systems; `(weight, face)` lists for general ones.
    pub weight_systems: &'static [&'static [(u64, usize)]],
    /// When set, the connected weight systems with weights at most one are exactly
    /// `weight_systems`.
    pub exact_cap_one: bool,
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub name: &'static str,
    /// Opaque census label, never parsed.
    pub label: &'static str,
    pub tops: &'static [[usize; 2]],
    pub bottoms: &'static [[usize; 2]],
    pub expected: Expected,
}

pub const LABEL_V: &str = "iLLLPQccdgefhhghqrqqssvof_02221000";
pub const LABEL_V_RHO: &str = "ivLLQQccfhfeghghwadiwadrv_20110220";
pub const LABEL_V_SIGMA: &str = "ivLLQQccdhghgfhggrqlipigb_12020011";
pub const LABEL_V_RHO_SIGMA: &str = "iLLLPQccdgefhhghhrhajsvss_02221000";
pub const LABEL_FIG12: &str = "jLLAvQQcedehihiihiinasmkutn_011220000";
pub const LABEL_FIG12_MUTANT: &str = "jvLLAQQdfghhfgiiijttmtltrcr_201102102";

pub const Q0: &[(u64, usize)] = &[(1, 2), (1, 5), (1, 7), (1, 11)];
pub const Q1: &[(u64, usize)] = &[(1, 1), (1, 5), (1, 8), (1, 11)];
pub const Q2: &[(u64, usize)] = &[(1, 2), (1, 7), (1, 10), (1, 12)];
pub const Q3: &[(u64, usize)] = &[(1, 1), (1, 8), (1, 10), (1, 12)];
pub const FIG12_W: &[(u64, usize)] = &[
    (2, 0),
    (1, 2),
    (1, 6),
    (2, 7),
    (2, 9),
    (2, 11),
    (1, 12),
    (1, 16),
];

pub fn fig8_entry() -> CensusEntry {
    CensusEntry {
        name: "fig8",
        label: LABEL_V,
        tops: &[
            [3, 2],
            [4, 5],
            [1, 8],
            [9, 0],
            [12, 10],
            [13, 6],
            [7, 15],
            [11, 14],
        ],
        bottoms: &[
            [0, 1],
            [6, 3],
            [2, 7],
            [4, 10],
            [11, 5],
            [12, 14],
            [8, 13],
            [15, 9],
        ],
        expected: Expected {
            veering: true,
            h1: Some((1, &[8])),
            betti: Some(1),
            edge_orientable: Some(true),
            cone: Some(ConeClass::Measurable),
            weight_systems: &[Q0, Q1, Q2, Q3],
            exact_cap_one: true,
        },
    }
}

pub fn fig12_entry() -> CensusEntry {
    CensusEntry {
        name: "fig12",
        label: LABEL_FIG12,
        tops: &[
            [2, 3],
            [4, 5],
            [8, 1],
            [0, 9],
            [6, 11],
            [12, 7],
            [16, 15],
            [14, 10],
            [17, 13],
        ],
        bottoms: &[
            [1, 0],
            [3, 6],
            [2, 7],
            [10, 4],
            [8, 5],
            [13, 14],
            [17, 9],
            [12, 15],
            [11, 16],
        ],
        expected: Expected {
            veering: true,
            h1: None,
            betti: Some(3),
            edge_orientable: None,
            cone: None,
            weight_systems: &[FIG12_W],
            exact_cap_one: false,
        },
    }
}

pub fn weight_vector(num_faces: usize, terms: &[(u64, usize)]) -> Vec<u64> {
    let mut v = vec![0; num_faces];
    for &(c, f) in terms {
        v[f] += c;
    }
    v
}

/// Slot of every label and the out-marks, checking the transcription is a consistent pairing.
#[allow(clippy::type_complexity)]
fn layout(
    entry: &CensusEntry,
) -> Result<(
    Vec<[usize; 4]>,
    Vec<[bool; 4]>,
    Vec<((usize, u8), (usize, u8))>,
)> {
    let n = entry.tops.len();
    if n == 0 || entry.bottoms.len() != n {
        return Err(Error::Reconstruction(
            "top and bottom rows differ in length".into(),
        ));
    }
    let nf = 2 * n;
    let mut labels = vec![[0usize; 4]; n];
    let mut co = vec![[false; 4]; n];
    let mut top_slot: Vec<Option<(usize, u8)>> = vec![None; nf];
    let mut bottom_slot: Vec<Option<(usize, u8)>> = vec![None; nf];
    for t in 0..n {
        let mut all: Vec<usize> = entry.tops[t]
            .iter()
            .chain(&entry.bottoms[t])
            .copied()
            .collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) || all.iter().any(|&f| f >= nf) {
            return Err(Error::Reconstruction(format!(
                "bad labels in tetrahedron {t}"
            )));
        }
        for (rank, &f) in all.iter().enumerate() {
            let slot = 3 - rank as u8;
            labels[t][slot as usize] = f;
            let top = entry.tops[t].contains(&f);
            co[t][slot as usize] = top;
            let table = if top { &mut top_slot } else { &mut bottom_slot };
            if table[f].replace((t, slot)).is_some() {
                return Err(Error::Reconstruction(format!(
                    "face {f} is a {} face twice",
                    if top { "top" } else { "bottom" }
                )));
            }
        }
    }
    let mut pairs = Vec::with_capacity(nf);
    for f in 0..nf {
        match (top_slot[f], bottom_slot[f]) {
            (Some(a), Some(b)) => pairs.push((a, b)),
            _ => {
                return Err(Error::Reconstruction(format!(
                    "face {f} is not both a top face and a bottom face"
                )))
            }
        }
    }
    Ok((labels, co, pairs))
}

/// Union-find over tetrahedron edges with orientation parity, diagonal counts and colors,
/// supporting rollback.
struct EdgeUnion {
    parent: Vec<usize>,
    flip: Vec<bool>,
    size: Vec<usize>,
    tops: Vec<u8>,
    bots: Vec<u8>,
    color: Vec<Option<Color>>,
    log: Vec<Undo>,
}

enum Undo {
    Link {
        child: usize,
        root: usize,
        tops: u8,
        bots: u8,
        color: Option<Color>,
    },
    Color {
        root: usize,
    },
}

impl EdgeUnion {
    fn find(&self, mut x: usize) -> (usize, bool) {
        let mut f = false;
        while self.parent[x] != x {
            f ^= self.flip[x];
            x = self.parent[x];
        }
        (x, f)
    }

    fn set_color(&mut self, x: usize, c: Color) -> bool {
        let (r, _) = self.find(x);
        match self.color[r] {
            Some(d) => d == c,
            None => {
                self.color[r] = Some(c);
                self.log.push(Undo::Color { root: r });
                true
            }
        }
    }

    /// Identifies `x` and `y`, `flip` telling whether their reference directions disagree.
    fn union(&mut self, x: usize, y: usize, flip: bool) -> bool {
        let (mut rx, fx) = self.find(x);
        let (mut ry, fy) = self.find(y);
        if rx == ry {
            return fx ^ fy == flip;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        let color = match (self.color[rx], self.color[ry]) {
            (Some(a), Some(b)) if a != b => return false,
            (a, b) => a.or(b),
        };
        let tops = self.tops[rx] + self.tops[ry];
        let bots = self.bots[rx] + self.bots[ry];
        if tops > 1 || bots > 1 {
            return false;
        }
        self.log.push(Undo::Link {
            child: ry,
            root: rx,
            tops: self.tops[rx],
            bots: self.bots[rx],
            color: self.color[rx],
        });
        self.parent[ry] = rx;
        self.flip[ry] = fx ^ fy ^ flip;
        self.size[rx] += self.size[ry];
        self.tops[rx] = tops;
        self.bots[rx] = bots;
        self.color[rx] = color;
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().unwrap() {
                Undo::Link {
                    child,
                    root,
                    tops,
                    bots,
                    color,
                } => {
                    self.parent[child] = child;
                    self.flip[child] = false;
                    self.size[root] -= self.size[child];
                    self.tops[root] = tops;
                    self.bots[root] = bots;
                    self.color[root] = color;
                }
                Undo::Color { root } => self.color[root] = None,
            }
        }
    }
}

struct Search<'a> {
    co: &'a [[bool; 4]],
    order: Vec<((usize, u8), (usize, u8))>,
    parity: Vec<i8>,
    perms: Vec<Perm4>,
    uf: EdgeUnion,
    found: Vec<Vec<Perm4>>,
}

impl Search<'_> {
    fn color_tet(&mut self, t: usize) -> bool {
        tet_forced_colors(self.co[t], self.parity[t])
            .into_iter()
            .all(|(local, _, c)| self.uf.set_color(6 * t + local, c))
    }

    fn run(&mut self, k: usize) {
        if k == self.order.len() {
            self.found.push(self.perms.clone());
            return;
        }
        let ((t, i), (t2, i2)) = self.order[k];
        for p in ALL_PERMS {
            if p.apply(i) != i2 {
                continue;
            }
            let mark = self.uf.log.len();
            let fresh = self.parity[t2] == 0;
            let want = -self.parity[t] * p.sign();
            if !fresh && self.parity[t2] != want {
                continue;
            }
            if fresh {
                self.parity[t2] = want;
            }
            let mut ok = !fresh || self.color_tet(t2);
            if ok {
                let fv = face_vertices(i);
                for a in 0..3 {
                    let (u, v) = (fv[a], fv[(a + 1) % 3]);
                    let (lo, hi) = (u.min(v), u.max(v));
                    let flip = p.apply(lo) > p.apply(hi);
                    if !self.uf.union(
                        6 * t + edge_index(lo, hi),
                        6 * t2 + edge_index(p.apply(lo), p.apply(hi)),
                        flip,
                    ) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.perms[k] = p;
                self.run(k + 1);
            }
            self.uf.rollback(mark);
            if fresh {
                self.parity[t2] = 0;
            }
        }
    }
}

/// All gluing tables realizing the transcription with a taut, veering-colorable structure,
/// before the expected values are checked.
pub fn candidate_gluings(entry: &CensusEntry) -> Result<Vec<TautIdealTriangulation>> {
    let (_, co, pairs) = layout(entry)?;
    let n = co.len();
    // Glue faces in an order that always touches an already reached tetrahedron, orienting
    // each pair from the reached side.
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut used = vec![false; pairs.len()];
    let mut order = Vec::with_capacity(pairs.len());
    while order.len() < pairs.len() {
        let f = (0..pairs.len())
            .find(|&f| !used[f] && (reached[pairs[f].0 .0] || reached[pairs[f].1 .0]))
            .ok_or(Error::Disconnected)?;
        used[f] = true;
        let (a, b) = pairs[f];
        let (a, b) = if reached[a.0] { (a, b) } else { (b, a) };
        reached[b.0] = true;
        order.push((a, b));
    }
    let mut tops = vec![0u8; 6 * n];
    let mut bots = vec![0u8; 6 * n];
    for t in 0..n {
        let up: Vec<u8> = (0..4u8).filter(|&i| co[t][i as usize]).collect();
        let down: Vec<u8> = (0..4u8).filter(|&i| !co[t][i as usize]).collect();
        // The top diagonal joins the bottom-face indices.
        tops[6 * t + edge_index(down[0], down[1])] = 1;
        bots[6 * t + edge_index(up[0], up[1])] = 1;
    }
    let mut s = Search {
        co: &co,
        order: order.clone(),
        parity: vec![0; n],
        perms: vec![Perm4::IDENTITY; order.len()],
        uf: EdgeUnion {
            parent: (0..6 * n).collect(),
            flip: vec![false; 6 * n],
            size: vec![1; 6 * n],
            tops,
            bots,
            color: vec![None; 6 * n],
            log: Vec::new(),
        },
        found: Vec::new(),
    };
    s.parity[0] = 1;
    if !s.color_tet(0) {
        return Err(Error::Reconstruction(
            "inconsistent coloring inside tetrahedron 0".into(),
        ));
    }
    s.run(0);
    let placeholder = Gluing {
        tet: 0,
        face: 0,
        perm: Perm4::IDENTITY,
    };
    let mut out = Vec::new();
    for perms in s.found {
        let mut gl = vec![[placeholder; 4]; n];
        for (&((t, i), (t2, i2)), &p) in order.iter().zip(&perms) {
            gl[t][i as usize] = Gluing {
                tet: t2,
                face: i2,
                perm: p,
            };
            gl[t2][i2 as usize] = Gluing {
                tet: t,
                face: i,
                perm: p.inverse(),
            };
        }
        if let Ok(tri) = TautIdealTriangulation::new(gl, Some(co.clone())) {
            if tri.check_taut().is_ok() {
                out.push(tri);
            }
        }
    }
    Ok(out)
}

/// Checks every expected value of `entry` on `tri`; returns the first mismatch.
pub fn check_expected(entry: &CensusEntry, tri: &TautIdealTriangulation) -> Result<()> {
    let (labels, _, _) = layout(entry)?;
    let fail = |m: String| Err(Error::Reconstruction(m));
    for (t, row) in labels.iter().enumerate() {
        for i in 0..4u8 {
            if tri.face_of(t, i) != row[i as usize] {
                return fail(format!("face numbering differs at tetrahedron {t}"));
            }
        }
    }
    let ex = &entry.expected;
    if tri.check_veering()?.is_veering() != ex.veering {
        return fail("veering flag".into());
    }
    let h1 = homology_h1(tri);
    if let Some((r, tors)) = ex.h1 {
        if h1 != AbelianGroupInvariant::new(r, tors) {
            return fail(format!("H1 is {h1}"));
        }
    }
    if let Some(b) = ex.betti {
        if h1.rank != b {
            return fail(format!("b1 is {}", h1.rank));
        }
    }
    if let Some(eo) = ex.edge_orientable {
        if edge_orientable(tri)?.is_orientable() != eo {
            return fail("edge-orientability".into());
        }
    }
    if let Some(c) = ex.cone {
        if classify_solution_cone(tri)? != c {
            return fail("solution cone class".into());
        }
    }
    let mut wanted = Vec::new();
    for terms in ex.weight_systems {
        let w = WeightSystem::new(tri, weight_vector(tri.num_faces(), terms))
            .map_err(|e| Error::Reconstruction(format!("listed weight system rejected: {e}")))?;
        wanted.push(w);
    }
    if ex.exact_cap_one {
        let mut got = enumerate_connected_weight_systems(tri, 1)?;
        got.sort();
        wanted.sort();
        if got != wanted {
            return fail("connected weight systems with weights at most one".into());
        }
    }
    Ok(())
}

/// Reconstructions matching every expected value, one per taut isomorphism class, keyed by
/// taut signature.
pub fn reconstruct_all(entry: &CensusEntry) -> Result<BTreeMap<String, TautIdealTriangulation>> {
    let mut out = BTreeMap::new();
    for tri in candidate_gluings(entry)? {
        if check_expected(entry, &tri).is_ok() {
            let sig = canonical_signature(&tri, Flavor::Taut)?;
            out.entry(sig).or_insert(tri);
        }
    }
    Ok(out)
}

/// The unique reconstruction; fails when there is none or several.
pub fn reconstruct_gluings(entry: &CensusEntry) -> Result<TautIdealTriangulation> {
    let all = reconstruct_all(entry)?;
    match all.len() {
        0 => Err(Error::Reconstruction(format!(
            "no gluing realizes {}",
            entry.name
        ))),
        1 => Ok(all.into_values().next().unwrap()),
        k => Err(Error::Reconstruction(format!(
            "{k} non-isomorphic gluings realize {}",
            entry.name
        ))),
    }
}

/// Track automorphisms of the `Q0` surface named by their fixed simplices: `s` fixes nothing,
/// `r` fixes edges but no puncture and `rs` fixes punctures. The identity comes first.
pub fn named_q0_automorphisms(
    q: &CarriedSurface,
) -> Result<Vec<(&'static str, SurfaceAutomorphism)>> {
    let group = automorphism_group(q, true);
    if group.len() != 4 {
        return Err(Error::Reconstruction(format!(
            "track group of Q0 has order {}",
            group.len()
        )));
    }
    let mut named: Vec<(&'static str, SurfaceAutomorphism)> = Vec::new();
    for phi in group {
        let name = match (phi.is_identity(), fixed_simplices(q, &phi)) {
            (true, _) => "id",
            (false, (0, 0)) => "s",
            (false, (_, 0)) => "r",
            _ => "rs",
        };
        if named.iter().any(|(n, _)| *n == name) {
            return Err(Error::Reconstruction(format!(
                "two automorphisms named {name}"
            )));
        }
        named.push((name, phi));
    }
    let order = ["id", "r", "s", "rs"];
    named.sort_by_key(|(n, _)| order.iter().position(|o| o == n));
    Ok(named)
}

/// Every generated file under `data/`, as `(file name, contents)`.
pub fn shipped_files() -> Result<Vec<(&'static str, String)>> {
    let mut out = Vec::new();
    let v = reconstruct_gluings(&fig8_entry())?;
    out.push(("fig8.vrt", write_vrt(&v, &[&format!("label {LABEL_V}")])));
    let q0 = WeightSystem::new(&v, weight_vector(v.num_faces(), Q0))?;
    out.push(("q0.wts", write_wts(std::slice::from_ref(&q0))));
    let cap1 = [Q0, Q1, Q2, Q3]
        .iter()
        .map(|t| WeightSystem::new(&v, weight_vector(v.num_faces(), t)))
        .collect::<Result<Vec<_>>>()?;
    out.push(("fig8-cap1.wts", write_wts(&cap1)));
    let q = assemble_surface(&v, &q0)?;
    let named = named_q0_automorphisms(&q)?;
    let refs: Vec<(&str, &SurfaceAutomorphism)> = named.iter().map(|(n, p)| (*n, p)).collect();
    out.push(("q0.aut", write_aut(&refs)));
    for (name, phi) in &named[1..] {
        let label = match *name {
            "r" => LABEL_V_RHO,
            "s" => LABEL_V_SIGMA,
            _ => LABEL_V_RHO_SIGMA,
        };
        let m = mutate(&v, &q0, phi)?.mutant;
        let file = match *name {
            "r" => "mutant-r.vrt",
            "s" => "mutant-s.vrt",
            _ => "mutant-rs.vrt",
        };
        out.push((file, write_vrt(&m, &[&format!("label {label}")])));
    }

    let t = reconstruct_gluings(&fig12_entry())?;
    out.push((
        "fig12.vrt",
        write_vrt(&t, &[&format!("label {LABEL_FIG12}")]),
    ));
    let w = WeightSystem::new(&t, weight_vector(t.num_faces(), FIG12_W))?;
    out.push(("fig12.wts", write_wts(std::slice::from_ref(&w))));
    let q = assemble_surface(&t, &w)?;
    let group = automorphism_group(&q, true);
    let refs: Vec<(&str, &SurfaceAutomorphism)> = ["id", "g"].into_iter().zip(&group).collect();
    out.push(("fig12.aut", write_aut(&refs)));
    let g = group
        .iter()
        .find(|p| !p.is_identity())
        .ok_or_else(|| Error::Reconstruction("fig12 surface has no symmetry".into()))?;
    let m = mutate(&t, &w, g)?.mutant;
    out.push((
        "fig12-mutant.vrt",
        write_vrt(&m, &[&format!("label {LABEL_FIG12_MUTANT}")]),
    ));
    out.sort_by_key(|(n, _)| *n);
    Ok(out)
}

/// Footer of the mutant square report naming what is out of scope.
pub const FIGURE7_EXCLUSIONS: &str = "not reproduced: taut and veering polynomials, \
constructions of closed flows,\ncensus-wide counts of manifolds with distinct veering mutants\n";

/// One vertex of the mutant square.
#[derive(Clone, Debug)]
pub struct MutantRow {
    pub name: &'static str,
    pub label: &'static str,
    pub triangulation: TautIdealTriangulation,
    pub signature: String,
    pub taut: bool,
    pub veering: bool,
    pub class: ConeClass,
    pub h1: AbelianGroupInvariant,
    pub edge_orientable: bool,
}

impl MutantRow {
    fn new(name: &'static str, label: &'static str, tri: TautIdealTriangulation) -> Result<Self> {
        Ok(MutantRow {
            name,
            label,
            signature: canonical_signature(&tri, Flavor::Taut)?,
            taut: tri.check_taut().is_ok(),
            veering: tri.check_veering()?.is_veering(),
            class: classify_solution_cone(&tri)?,
            h1: homology_h1(&tri),
            edge_orientable: edge_orientable(&tri)?.is_orientable(),
            triangulation: tri,
        })
    }
}

/// A two-step path around the square, compared with the direct mutation.
#[derive(Clone, Debug)]
pub struct SquareEdge {
    pub first: &'static str,
    pub second: &'static str,
    /// `None` when the second automorphism has no counterpart on the transported surface.
    pub commutes: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Figure7 {
    /// `V`, `V^r`, `V^s`, `V^rs` in this order.
    pub rows: Vec<MutantRow>,
    pub regluings: Vec<(&'static str, RegluingMap)>,
    pub square: Vec<SquareEdge>,
}

/// Mutates the figure-eight sibling along `Q0` by its three nontrivial track automorphisms.
pub fn figure7() -> Result<Figure7> {
    let v = reconstruct_gluings(&fig8_entry())?;
    let w = WeightSystem::new(&v, weight_vector(v.num_faces(), Q0))?;
    let q = assemble_surface(&v, &w)?;
    let named = named_q0_automorphisms(&q)?;
    let aut = |n: &str| &named.iter().find(|(m, _)| *m == n).unwrap().1;
    let mut rows = vec![MutantRow::new("V", LABEL_V, v.clone())?];
    let mut regluings = Vec::new();
    let mut records = BTreeMap::new();
    for (name, label) in [
        ("r", LABEL_V_RHO),
        ("s", LABEL_V_SIGMA),
        ("rs", LABEL_V_RHO_SIGMA),
    ] {
        let rec = mutate(&v, &w, aut(name))?;
        regluings.push((name, rec.regluing.clone()));
        let row_name = match name {
            "r" => "V^r",
            "s" => "V^s",
            _ => "V^rs",
        };
        rows.push(MutantRow::new(row_name, label, rec.mutant.clone())?);
        records.insert(name, rec);
    }
    let direct = &rows[3].signature;
    let mut square = Vec::new();
    for (first, second) in [("r", "s"), ("s", "r")] {
        let rec = &records[first];
        let moved_w = transfer_weights(rec)?;
        let moved = assemble_surface(&rec.mutant, &moved_w)?;
        let commutes = match transport_automorphism(rec, &moved, aut(second)) {
            Some(psi) => {
                let m = mutate(&rec.mutant, &moved_w, &psi)?;
                Some(&canonical_signature(&m.mutant, Flavor::Taut)? == direct)
            }
            None => None,
        };
        square.push(SquareEdge {
            first,
            second,
            commutes,
        });
    }
    Ok(Figure7 {
        rows,
        regluings,
        square,
    })
}
