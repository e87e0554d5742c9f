//! Transverse orientability of the stable branched surface.
//!
//! The sector dual to an edge is transverse to it, so a transverse orientation of the sector
//! is an orientation of the edge. Inside a face the stable track has a large branch dual to
//! the large side and two small branches. The transverse orientation is continuous along the
//! smooth paths large-to-small exactly when each small side is oriented opposite to the large
//! side relative to the counter-clockwise boundary of the face. Each face therefore contributes
//! two parity constraints between edge orientations.

use crate::error::Result;
use crate::trimesh::TautIdealTriangulation;
use std::collections::VecDeque;

/// `x_a + x_b = parity` over Z/2, coming from face `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientationConstraint {
    pub face: usize,
    pub a: usize,
    pub b: usize,
    pub parity: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeOrientability {
    /// Per edge: `true` when the edge is oriented against its reference direction.
    Orientable(Vec<bool>),
    /// Constraints forming a cycle whose parities sum to one.
    NotOrientable(Vec<OrientationConstraint>),
}

impl EdgeOrientability {
    pub fn is_orientable(&self) -> bool {
        matches!(self, EdgeOrientability::Orientable(_))
    }
}

/// Whether side `k` of face `f` runs along the reference direction of its edge when traversed
/// counter-clockwise (seen from above).
pub fn side_follows_reference(tri: &TautIdealTriangulation, f: usize, k: u8) -> bool {
    let (t, _) = tri.frame_slot(f);
    let v = tri.face_frame(f);
    let from = v[(k as usize + 1) % 3];
    let to = v[(k as usize + 2) % 3];
    let e = tri.edge_between(t, from, to);
    tri.edge(e)
        .embeddings
        .iter()
        .find(|m| m.tet == t && ((m.tail, m.head) == (from, to) || (m.tail, m.head) == (to, from)))
        .map(|m| m.tail == from)
        .expect("edge embedding present")
}

pub fn orientation_constraints(tri: &TautIdealTriangulation) -> Result<Vec<OrientationConstraint>> {
    tri.require_taut()?;
    let mut out = Vec::with_capacity(2 * tri.num_faces());
    for f in 0..tri.num_faces() {
        let l = tri.large_side(f).expect("taut");
        let edges = tri.face_edges(f);
        let c: Vec<bool> = (0..3u8)
            .map(|k| !side_follows_reference(tri, f, k))
            .collect();
        for j in 1..3 {
            let k = (l as usize + j) % 3;
            out.push(OrientationConstraint {
                face: f,
                a: edges[l as usize],
                b: edges[k],
                parity: true ^ c[k] ^ c[l as usize],
            });
        }
    }
    Ok(out)
}

pub fn satisfies(constraints: &[OrientationConstraint], x: &[bool]) -> bool {
    constraints.iter().all(|c| (x[c.a] ^ x[c.b]) == c.parity)
}

pub fn edge_orientable(tri: &TautIdealTriangulation) -> Result<EdgeOrientability> {
    let veering = tri.check_veering()?;
    if !veering.is_veering() {
        return Err(crate::Error::NotVeering(
            "edge orientability needs a veering structure".into(),
        ));
    }
    let cons = orientation_constraints(tri)?;
    let ne = tri.num_edges();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); ne];
    for (i, c) in cons.iter().enumerate() {
        adj[c.a].push(i);
        adj[c.b].push(i);
    }
    let mut value: Vec<Option<bool>> = vec![None; ne];
    let mut via: Vec<Option<usize>> = vec![None; ne];
    for root in 0..ne {
        if value[root].is_some() {
            continue;
        }
        value[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &ci in &adj[u] {
                let c = cons[ci];
                let v = if c.a == u { c.b } else { c.a };
                if value[v].is_none() {
                    value[v] = Some(value[u].unwrap() ^ c.parity);
                    via[v] = Some(ci);
                    queue.push_back(v);
                }
            }
        }
    }
    let x: Vec<bool> = value.into_iter().map(|v| v.unwrap()).collect();
    let Some(bad) = cons.iter().position(|c| (x[c.a] ^ x[c.b]) != c.parity) else {
        return Ok(EdgeOrientability::Orientable(x));
    };
    // Tree paths from both endpoints to their common ancestor, closed by the bad constraint.
    let ancestors = |mut u: usize| {
        let mut p = vec![u];
        while let Some(ci) = via[u] {
            u = if cons[ci].a == u {
                cons[ci].b
            } else {
                cons[ci].a
            };
            p.push(u);
        }
        p
    };
    let pb = ancestors(cons[bad].b);
    let meet = ancestors(cons[bad].a)
        .into_iter()
        .find(|u| pb.contains(u))
        .expect("same component");
    let up_to_meet = |mut u: usize| {
        let mut p = Vec::new();
        while u != meet {
            let ci = via[u].unwrap();
            p.push(cons[ci]);
            u = if cons[ci].a == u {
                cons[ci].b
            } else {
                cons[ci].a
            };
        }
        p
    };
    let mut cycle = vec![cons[bad]];
    cycle.extend(up_to_meet(cons[bad].b));
    let mut back = up_to_meet(cons[bad].a);
    back.reverse();
    cycle.extend(back);
    Ok(EdgeOrientability::NotOrientable(cycle))
}
