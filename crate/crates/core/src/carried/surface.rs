//! The ideal triangulation of a carried surface and its stable train track.
//!
//! Triangle `(f, j)` is the `j`-th copy of face `f` counted from below. Its sides are
//! numbered in the frame of `f` (counter-clockwise seen from above), side `k` opposite frame
//! vertex `k`. At an edge `e` with fans `f_1..f_k` (left) and `f'_1..f'_l` (right), the sheet
//! of copy `(f_a, j)` is `w_{f_1} + ... + w_{f_{a-1}} + j`, and sheet `m` on the left is glued to
//! sheet `m` on the right, giving surface edge `(e, m)`.

use super::WeightSystem;
use crate::error::{Error, Result};
use crate::trimesh::TautIdealTriangulation;

/// A triangle side: `(triangle id, side 0..3)`.
pub type Dart = (usize, u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceTriangle {
    pub face: usize,
    pub copy: usize,
    /// Surface edge id on each side.
    pub sides: [usize; 3],
    /// Side on the large branch of the stable track.
    pub large: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceEdge {
    pub edge: usize,
    pub copy: usize,
    /// The left-fan dart and the right-fan dart glued along this edge.
    pub darts: [Dart; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarriedSurface {
    weights: Vec<u64>,
    edge_weights: Vec<u64>,
    triangles: Vec<SurfaceTriangle>,
    edges: Vec<SurfaceEdge>,
    tri_offset: Vec<usize>,
    edge_offset: Vec<usize>,
}

pub fn assemble_surface(tri: &TautIdealTriangulation, w: &WeightSystem) -> Result<CarriedSurface> {
    tri.require_taut()?;
    let nf = tri.num_faces();
    let ne = tri.num_edges();
    if w.weights().len() != nf {
        return Err(Error::InvalidWeights("weight vector length".into()));
    }
    let mut tri_offset = Vec::with_capacity(nf + 1);
    let mut acc = 0;
    for f in 0..nf {
        tri_offset.push(acc);
        acc += w.weight(f) as usize;
    }
    tri_offset.push(acc);
    let mut edge_offset = Vec::with_capacity(ne + 1);
    let mut acc_e = 0;
    for e in 0..ne {
        edge_offset.push(acc_e);
        acc_e += w.edge_weight(e) as usize;
    }
    edge_offset.push(acc_e);

    let mut triangles = Vec::with_capacity(acc);
    for f in 0..nf {
        let large = tri.large_side(f).ok_or(Error::NotTaut)?;
        for j in 0..w.weight(f) as usize {
            triangles.push(SurfaceTriangle {
                face: f,
                copy: j,
                sides: [usize::MAX; 3],
                large,
            });
        }
    }
    let mut edges = Vec::with_capacity(acc_e);
    for (e, class) in tri.edges().iter().enumerate() {
        let mut left = Vec::new();
        for s in &class.left {
            for j in 0..w.weight(s.face) as usize {
                left.push((tri_offset[s.face] + j, s.side));
            }
        }
        let mut right = Vec::new();
        for s in &class.right {
            for j in 0..w.weight(s.face) as usize {
                right.push((tri_offset[s.face] + j, s.side));
            }
        }
        if left.len() != right.len() || left.len() as u64 != w.edge_weight(e) {
            return Err(Error::InvalidWeights(format!(
                "sheets do not match at edge {e}"
            )));
        }
        for (m, (l, r)) in left.into_iter().zip(right).enumerate() {
            let id = edges.len();
            for (t, k) in [l, r] {
                if triangles[t].sides[k as usize] != usize::MAX {
                    return Err(Error::InvalidWeights(format!(
                        "side assigned twice at edge {e}"
                    )));
                }
                triangles[t].sides[k as usize] = id;
            }
            edges.push(SurfaceEdge {
                edge: e,
                copy: m,
                darts: [l, r],
            });
        }
    }
    if triangles.iter().any(|t| t.sides.contains(&usize::MAX)) {
        return Err(Error::InvalidWeights("unassigned triangle side".into()));
    }
    Ok(CarriedSurface {
        weights: w.weights().to_vec(),
        edge_weights: w.edge_weights().to_vec(),
        triangles,
        edges,
        tri_offset,
        edge_offset,
    })
}

impl CarriedSurface {
    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn triangles(&self) -> &[SurfaceTriangle] {
        &self.triangles
    }

    pub fn edges(&self) -> &[SurfaceEdge] {
        &self.edges
    }

    pub fn triangle(&self, t: usize) -> &SurfaceTriangle {
        &self.triangles[t]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn face_weight(&self, f: usize) -> u64 {
        self.weights[f]
    }

    pub fn edge_weight(&self, e: usize) -> u64 {
        self.edge_weights[e]
    }

    pub fn num_faces(&self) -> usize {
        self.weights.len()
    }

    pub fn num_edge_classes(&self) -> usize {
        self.edge_weights.len()
    }

    /// Triangle id of copy `j` of face `f`.
    pub fn triangle_id(&self, f: usize, j: usize) -> Option<usize> {
        (f < self.weights.len() && (j as u64) < self.weights[f]).then(|| self.tri_offset[f] + j)
    }

    /// Surface edge id of copy `m` of edge class `e`.
    pub fn edge_id(&self, e: usize, m: usize) -> Option<usize> {
        (e < self.edge_weights.len() && (m as u64) < self.edge_weights[e])
            .then(|| self.edge_offset[e] + m)
    }

    /// Lowermost copy of face `f`.
    pub fn lower(&self, f: usize) -> Option<usize> {
        self.triangle_id(f, 0)
    }

    /// Uppermost copy of face `f`.
    pub fn upper(&self, f: usize) -> Option<usize> {
        (self.weights[f] > 0).then(|| self.tri_offset[f] + self.weights[f] as usize - 1)
    }

    pub fn is_upper(&self, t: usize) -> bool {
        let tr = &self.triangles[t];
        tr.copy as u64 + 1 == self.weights[tr.face]
    }

    pub fn is_lower(&self, t: usize) -> bool {
        self.triangles[t].copy == 0
    }

    /// The copy immediately above triangle `t`, if any.
    pub fn above(&self, t: usize) -> Option<usize> {
        (!self.is_upper(t)).then(|| t + 1)
    }

    pub fn lower_edge(&self, e: usize) -> Option<usize> {
        self.edge_id(e, 0)
    }

    pub fn upper_edge(&self, e: usize) -> Option<usize> {
        (self.edge_weights[e] > 0).then(|| self.edge_offset[e] + self.edge_weights[e] as usize - 1)
    }

    /// The copy immediately above surface edge `s`, if any.
    pub fn above_edge(&self, s: usize) -> Option<usize> {
        let se = &self.edges[s];
        (se.copy as u64 + 1 < self.edge_weights[se.edge]).then(|| s + 1)
    }

    /// The dart glued to `d`.
    pub fn partner(&self, d: Dart) -> Dart {
        let se = &self.edges[self.triangles[d.0].sides[d.1 as usize]];
        if se.darts[0] == d {
            se.darts[1]
        } else {
            se.darts[0]
        }
    }

    /// Connected components as sorted lists of triangle ids, ordered by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.triangles.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(t) = stack.pop() {
                members.push(t);
                for k in 0..3u8 {
                    let (u, _) = self.partner((t, k));
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    /// Corner orbits around the punctures. A corner `(t, c)` is the corner of triangle `t` at
    /// frame vertex `c`; each orbit is listed in walking order.
    pub fn puncture_orbits(&self) -> Vec<Vec<Dart>> {
        let n = self.triangles.len();
        let mut seen = vec![[false; 3]; n];
        let mut out = Vec::new();
        for t in 0..n {
            for c in 0..3u8 {
                if seen[t][c as usize] {
                    continue;
                }
                let mut orbit = Vec::new();
                let mut cur = (t, c);
                while !seen[cur.0][cur.1 as usize] {
                    seen[cur.0][cur.1 as usize] = true;
                    orbit.push(cur);
                    cur = self.next_corner(cur);
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Crosses side `c + 1` of the corner's triangle and returns the corner at the same
    /// puncture on the other side.
    pub fn next_corner(&self, (t, c): Dart) -> Dart {
        let (u, s) = self.partner((t, (c + 1) % 3));
        (u, (s + 1) % 3)
    }

    /// Serializes to the `.srf` text format.
    pub fn to_srf(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "srf 1").unwrap();
        writeln!(out, "triangles {}", self.triangles.len()).unwrap();
        writeln!(out, "edges {}", self.edges.len()).unwrap();
        for (i, t) in self.triangles.iter().enumerate() {
            let sides: Vec<String> = t
                .sides
                .iter()
                .map(|&s| format!("{}:{}", self.edges[s].edge, self.edges[s].copy))
                .collect();
            writeln!(
                out,
                "t {i} f{} {} sides {} large {}",
                t.face,
                t.copy,
                sides.join(" "),
                t.large
            )
            .unwrap();
        }
        for (i, e) in self.edges.iter().enumerate() {
            writeln!(
                out,
                "e {i} {}:{} {}.{} {}.{}",
                e.edge, e.copy, e.darts[0].0, e.darts[0].1, e.darts[1].0, e.darts[1].1
            )
            .unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTopology {
    pub triangles: usize,
    pub euler_char: i64,
    pub punctures: usize,
    pub genus: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceTopology {
    pub euler_char: i64,
    pub boundary_components: usize,
    /// Genus when the surface is connected.
    pub genus: Option<i64>,
    pub components: Vec<ComponentTopology>,
    pub orientable: bool,
}

pub fn surface_topology(q: &CarriedSurface) -> SurfaceTopology {
    let comps = q.components();
    let orbits = q.puncture_orbits();
    let mut comp_of = vec![0usize; q.num_triangles()];
    for (i, c) in comps.iter().enumerate() {
        for &t in c {
            comp_of[t] = i;
        }
    }
    let mut punct = vec![0usize; comps.len()];
    for o in &orbits {
        punct[comp_of[o[0].0]] += 1;
    }
    let components: Vec<ComponentTopology> = comps
        .iter()
        .zip(&punct)
        .map(|(c, &b)| {
            let f = c.len() as i64;
            let e = 3 * f / 2;
            let chi = f - e;
            ComponentTopology {
                triangles: c.len(),
                euler_char: chi,
                punctures: b,
                genus: (2 - chi - b as i64) / 2,
            }
        })
        .collect();
    let euler_char = q.num_triangles() as i64 - q.num_edges() as i64;
    SurfaceTopology {
        euler_char,
        boundary_components: orbits.len(),
        genus: (components.len() == 1).then(|| components[0].genus),
        components,
        orientable: true,
    }
}

/// A complementary region of the stable track: a once-punctured disk around one puncture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackRegion {
    /// Corners met while walking around the puncture, with the surface edge crossed after
    /// each corner.
    pub walk: Vec<(Dart, usize)>,
    pub cusps: usize,
    pub punctured: bool,
    pub index: i64,
}

pub fn track_regions(q: &CarriedSurface) -> Vec<TrackRegion> {
    q.puncture_orbits()
        .into_iter()
        .map(|orbit| {
            let walk: Vec<(Dart, usize)> = orbit
                .iter()
                .map(|&(t, c)| ((t, c), q.triangles[t].sides[((c + 1) % 3) as usize]))
                .collect();
            let cusps = orbit
                .iter()
                .filter(|&&(t, c)| q.triangles[t].large == c)
                .count();
            // A once-punctured disk has Euler characteristic zero.
            TrackRegion {
                walk,
                cusps,
                punctured: true,
                index: -(cusps as i64),
            }
        })
        .collect()
}
