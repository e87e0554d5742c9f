//! Oriented ideal triangulations with optional taut coorientations.
//!
//! Face `i` of a tetrahedron is opposite vertex `i`. A gluing of `(t, i)` to `(t', i')` is a
//! permutation `p` with `p(i) == i'`; its restriction to the vertices of face `i` identifies the
//! two faces. Coorientations are stored per `(tet, face)` slot, `true` meaning the face points
//! out of the tetrahedron (a top face).
//!
//! Faces are numbered in order of first appearance, scanning tetrahedra in increasing order
//! and, within a tetrahedron, slots 3, 2, 1, 0.

mod pachner;
mod signature;
pub mod vrt;

pub use pachner::{
    admissible_moves, pachner_connect, pachner_move, pachner_move_with_inverse, ConnectOutcome,
    MoveKind, PachnerStep, DEFAULT_NODE_BUDGET,
};
pub use signature::{canonical_signature, decode_signature, Flavor};

use crate::error::{Error, Result};
use crate::perm::{edge_index, face_vertices, Perm4, CCW_OUTSIDE, EDGE_VERTICES};
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub face: u8,
    pub perm: Perm4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// One appearance of an edge class inside a tetrahedron.
///
/// `tail -> head` is the direction of the class reference orientation; `exit` is the face
/// through which the cyclic walk around the edge leaves this tetrahedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub tet: usize,
    pub tail: u8,
    pub head: u8,
    pub exit: u8,
}

impl Embedding {
    pub fn local_edge(&self) -> usize {
        edge_index(self.tail, self.head)
    }

    /// The face through which the walk entered this tetrahedron.
    pub fn entry(&self) -> u8 {
        6 - self.tail - self.head - self.exit
    }
}

/// A face seen from an edge: the face index and the side of its frame lying on the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FanSlot {
    pub face: usize,
    pub side: u8,
}

#[derive(Clone, Debug)]
pub struct EdgeClass {
    /// Embeddings in cyclic order around the edge.
    pub embeddings: Vec<Embedding>,
    /// Index into `embeddings` of the top-diagonal appearance (taut only).
    pub below: Option<usize>,
    /// Index into `embeddings` of the bottom-diagonal appearance (taut only).
    pub above: Option<usize>,
    /// Left and right fans, each ordered bottom to top (taut only).
    pub left: Vec<FanSlot>,
    pub right: Vec<FanSlot>,
}

impl EdgeClass {
    pub fn degree(&self) -> usize {
        self.embeddings.len()
    }

    /// Tetrahedron in which this edge is the top diagonal.
    pub fn tet_below(&self) -> Option<usize> {
        self.below.map(|i| self.embeddings[i].tet)
    }

    /// Tetrahedron in which this edge is the bottom diagonal.
    pub fn tet_above(&self) -> Option<usize> {
        self.above.map(|i| self.embeddings[i].tet)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Face {
    /// The two slots of the face; `slots[0]` is the one met first by the numbering scan.
    pub slots: [(usize, u8); 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TautViolation {
    MissingCoorientations,
    TetMarking {
        tet: usize,
        out_faces: usize,
    },
    FaceMarking {
        face: usize,
    },
    Edge {
        edge: usize,
        top: usize,
        bottom: usize,
    },
}

impl fmt::Display for TautViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TautViolation::MissingCoorientations => f.write_str("no coorientations"),
            TautViolation::TetMarking { tet, out_faces } => {
                write!(f, "tet {tet} has {out_faces} out faces")
            }
            TautViolation::FaceMarking { face } => {
                write!(f, "face {face} is marked identically on both sides")
            }
            TautViolation::Edge { edge, top, bottom } => write!(
                f,
                "edge {edge} is a top diagonal {top} times and a bottom diagonal {bottom} times"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautReport {
    pub violations: Vec<TautViolation>,
}

impl TautReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A single forcing of Cor. 2.4 style: in `tet`, looking at `face`, the edge gets `color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Forcing {
    pub tet: usize,
    pub face: u8,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VeeringOutcome {
    Veering(Vec<Color>),
    NotVeering(VeeringWitness),
}

impl VeeringOutcome {
    pub fn is_veering(&self) -> bool {
        matches!(self, VeeringOutcome::Veering(_))
    }

    pub fn colors(&self) -> Option<&[Color]> {
        match self {
            VeeringOutcome::Veering(c) => Some(c),
            VeeringOutcome::NotVeering(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VeeringWitness {
    Conflict {
        edge: usize,
        first: Forcing,
        second: Forcing,
    },
    Unforced {
        edge: usize,
    },
}

impl fmt::Display for VeeringWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeeringWitness::Conflict {
                edge,
                first,
                second,
            } => write!(
                f,
                "edge {edge} forced {} by tet {} face {} and {} by tet {} face {}",
                first.color, first.tet, first.face, second.color, second.tet, second.face
            ),
            VeeringWitness::Unforced { edge } => write!(f, "edge {edge} receives no forced color"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TautIdealTriangulation {
    gluings: Vec<[Gluing; 4]>,
    parity: Vec<i8>,
    coorient: Option<Vec<[bool; 4]>>,
    faces: Vec<Face>,
    face_of: Vec<[usize; 4]>,
    edges: Vec<EdgeClass>,
    edge_of: Vec<[usize; 6]>,
    taut: bool,
}

impl PartialEq for TautIdealTriangulation {
    fn eq(&self, other: &Self) -> bool {
        self.gluings == other.gluings && self.coorient == other.coorient
    }
}

impl Eq for TautIdealTriangulation {}

impl TautIdealTriangulation {
    /// Validates the gluing table and derives parities, faces and edge classes.
    ///
    /// Tautness is not required here; it is evaluated and cached, see [`Self::check_taut`].
    pub fn new(gluings: Vec<[Gluing; 4]>, coorient: Option<Vec<[bool; 4]>>) -> Result<Self> {
        let n = gluings.len();
        if n == 0 {
            return Err(Error::TautMarking("no tetrahedra".into()));
        }
        if let Some(co) = &coorient {
            if co.len() != n {
                return Err(Error::TautMarking(format!(
                    "{} coorientation rows for {n} tetrahedra",
                    co.len()
                )));
            }
        }
        for (t, row) in gluings.iter().enumerate() {
            for i in 0..4u8 {
                let g = row[i as usize];
                if g.tet >= n || g.face > 3 {
                    return Err(Error::Involution {
                        tet: t,
                        face: i,
                        message: format!("target ({}, {}) out of range", g.tet, g.face),
                    });
                }
                if g.perm.apply(i) != g.face {
                    return Err(Error::Involution {
                        tet: t,
                        face: i,
                        message: format!("permutation {} does not send {i} to {}", g.perm, g.face),
                    });
                }
                if g.tet == t && g.face == i {
                    return Err(Error::Involution {
                        tet: t,
                        face: i,
                        message: "face glued to itself".into(),
                    });
                }
                let back = gluings[g.tet][g.face as usize];
                if back.tet != t || back.face != i || back.perm != g.perm.inverse() {
                    return Err(Error::Involution {
                        tet: t,
                        face: i,
                        message: format!(
                            "glued to ({}, {}) which glues back to ({}, {})",
                            g.tet, g.face, back.tet, back.face
                        ),
                    });
                }
            }
        }

        let parity = compute_parities(&gluings)?;
        let (faces, face_of) = number_faces(&gluings);
        let (mut edges, edge_of) = walk_edges(&gluings)?;

        let mut tri = TautIdealTriangulation {
            gluings,
            parity,
            coorient,
            faces,
            face_of,
            edges: Vec::new(),
            edge_of,
            taut: false,
        };
        if tri.coorient.is_some() && tri.taut_violations(&edges).is_empty() {
            tri.fill_fans(&mut edges);
            tri.taut = true;
        }
        tri.edges = edges;
        Ok(tri)
    }

    pub fn plain(gluings: Vec<[Gluing; 4]>) -> Result<Self> {
        Self::new(gluings, None)
    }

    pub fn num_tets(&self) -> usize {
        self.gluings.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn gluings(&self) -> &[[Gluing; 4]] {
        &self.gluings
    }

    pub fn gluing(&self, tet: usize, face: u8) -> Gluing {
        self.gluings[tet][face as usize]
    }

    pub fn parity(&self, tet: usize) -> i8 {
        self.parity[tet]
    }

    pub fn coorientations(&self) -> Option<&[[bool; 4]]> {
        self.coorient.as_deref()
    }

    pub fn has_coorientations(&self) -> bool {
        self.coorient.is_some()
    }

    /// True when coorientations are present and pass [`Self::check_taut`].
    pub fn is_taut(&self) -> bool {
        self.taut
    }

    pub fn require_taut(&self) -> Result<()> {
        if self.coorient.is_none() {
            Err(Error::MissingCoorientations)
        } else if !self.taut {
            Err(Error::NotTaut)
        } else {
            Ok(())
        }
    }

    pub fn is_out(&self, tet: usize, face: u8) -> bool {
        self.coorient
            .as_ref()
            .map_or(false, |c| c[tet][face as usize])
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of(&self, tet: usize, face: u8) -> usize {
        self.face_of[tet][face as usize]
    }

    pub fn edges(&self) -> &[EdgeClass] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &EdgeClass {
        &self.edges[e]
    }

    /// Edge class of local edge `local` (index into [`EDGE_VERTICES`]) of `tet`.
    pub fn edge_of(&self, tet: usize, local: usize) -> usize {
        self.edge_of[tet][local]
    }

    pub fn edge_between(&self, tet: usize, a: u8, b: u8) -> usize {
        self.edge_of[tet][edge_index(a, b)]
    }

    /// The two out faces of a tetrahedron, in increasing order.
    pub fn top_faces(&self, tet: usize) -> Option<[u8; 2]> {
        let co = self.coorient.as_ref()?;
        let tops: Vec<u8> = (0..4u8).filter(|&i| co[tet][i as usize]).collect();
        (tops.len() == 2).then(|| [tops[0], tops[1]])
    }

    pub fn bottom_faces(&self, tet: usize) -> Option<[u8; 2]> {
        let co = self.coorient.as_ref()?;
        let bots: Vec<u8> = (0..4u8).filter(|&i| !co[tet][i as usize]).collect();
        (bots.len() == 2).then(|| [bots[0], bots[1]])
    }

    /// Local edge index of the edge shared by the two top faces.
    pub fn top_diagonal(&self, tet: usize) -> Option<usize> {
        self.bottom_faces(tet).map(|[a, b]| edge_index(a, b))
    }

    /// Local edge index of the edge shared by the two bottom faces.
    pub fn bottom_diagonal(&self, tet: usize) -> Option<usize> {
        self.top_faces(tet).map(|[a, b]| edge_index(a, b))
    }

    /// Slot of face `f` used as its reference frame: the slot in the tetrahedron below the
    /// face when coorientations mark exactly one side out, otherwise the first scanned slot.
    pub fn frame_slot(&self, f: usize) -> (usize, u8) {
        let [s0, s1] = self.faces[f].slots;
        match &self.coorient {
            Some(co) if co[s0.0][s0.1 as usize] != co[s1.0][s1.1 as usize] => {
                if co[s0.0][s0.1 as usize] {
                    s0
                } else {
                    s1
                }
            }
            _ => s0,
        }
    }

    pub fn other_slot(&self, f: usize) -> (usize, u8) {
        let s = self.frame_slot(f);
        let g = self.gluing(s.0, s.1);
        (g.tet, g.face)
    }

    /// Slot `(tet, face)` for which `f` is a top face (taut only).
    pub fn face_below(&self, f: usize) -> (usize, u8) {
        self.frame_slot(f)
    }

    /// Slot `(tet, face)` for which `f` is a bottom face (taut only).
    pub fn face_above(&self, f: usize) -> (usize, u8) {
        self.other_slot(f)
    }

    /// Vertices of face `f` in the labels of its frame tetrahedron, ordered counter-clockwise
    /// as seen from the out side of the frame slot (from above, for taut triangulations).
    pub fn face_frame(&self, f: usize) -> [u8; 3] {
        let (t, i) = self.frame_slot(f);
        let mut v = CCW_OUTSIDE[i as usize];
        if self.parity[t] < 0 {
            v.swap(1, 2);
        }
        v
    }

    /// Maps a vertex label of slot `(tet, face)` to the frame labels of the face it belongs to.
    pub fn to_frame(&self, tet: usize, face: u8, v: u8) -> u8 {
        let f = self.face_of(tet, face);
        if self.frame_slot(f) == (tet, face) {
            v
        } else {
            self.gluing(tet, face).perm.apply(v)
        }
    }

    /// Side index of face `f` (0..3, side `k` opposite frame vertex `k`) corresponding to the
    /// edge of slot `(tet, face)` opposite vertex `v`.
    pub fn side_of(&self, tet: usize, face: u8, opposite: u8) -> u8 {
        let f = self.face_of(tet, face);
        let fv = self.to_frame(tet, face, opposite);
        self.face_frame(f).iter().position(|&x| x == fv).unwrap() as u8
    }

    /// Edge class lying on side `k` of face `f`.
    pub fn side_edge(&self, f: usize, k: u8) -> usize {
        let (t, _) = self.frame_slot(f);
        let v = self.face_frame(f);
        self.edge_between(t, v[(k as usize + 1) % 3], v[(k as usize + 2) % 3])
    }

    /// Edge classes of the three sides of face `f`.
    pub fn face_edges(&self, f: usize) -> [usize; 3] {
        [
            self.side_edge(f, 0),
            self.side_edge(f, 1),
            self.side_edge(f, 2),
        ]
    }

    /// Side of face `f` lying on the bottom diagonal of the tetrahedron above it.
    pub fn large_side(&self, f: usize) -> Option<u8> {
        let (ta, ia) = self.face_above(f);
        let [a, b] = self.top_faces(ta)?;
        // The bottom diagonal joins the two top-face indices, so the face vertex off the
        // diagonal is the remaining bottom index other than `ia`.
        let opposite = (0..4u8).find(|&v| v != ia && v != a && v != b)?;
        Some(self.side_of(ta, ia, opposite))
    }

    pub fn check_taut(&self) -> TautReport {
        TautReport {
            violations: if self.coorient.is_some() {
                self.taut_violations(&self.edges)
            } else {
                vec![TautViolation::MissingCoorientations]
            },
        }
    }

    fn taut_violations(&self, edges: &[EdgeClass]) -> Vec<TautViolation> {
        let co = self.coorient.as_ref().expect("coorientations");
        let mut out = Vec::new();
        for (t, row) in co.iter().enumerate() {
            let n = row.iter().filter(|&&b| b).count();
            if n != 2 {
                out.push(TautViolation::TetMarking {
                    tet: t,
                    out_faces: n,
                });
            }
        }
        for (f, face) in self.faces.iter().enumerate() {
            let [a, b] = face.slots;
            if co[a.0][a.1 as usize] == co[b.0][b.1 as usize] {
                out.push(TautViolation::FaceMarking { face: f });
            }
        }
        for (e, class) in edges.iter().enumerate() {
            let mut top = 0;
            let mut bottom = 0;
            for emb in &class.embeddings {
                let local = emb.local_edge();
                if self.top_diagonal(emb.tet) == Some(local) {
                    top += 1;
                }
                if self.bottom_diagonal(emb.tet) == Some(local) {
                    bottom += 1;
                }
            }
            if top != 1 || bottom != 1 {
                out.push(TautViolation::Edge {
                    edge: e,
                    top,
                    bottom,
                });
            }
        }
        out
    }

    fn fill_fans(&self, edges: &mut [EdgeClass]) {
        for class in edges.iter_mut() {
            let k = class.embeddings.len();
            let below = (0..k)
                .find(|&j| {
                    let emb = class.embeddings[j];
                    self.top_diagonal(emb.tet) == Some(emb.local_edge())
                })
                .unwrap();
            let above = (0..k)
                .find(|&j| {
                    let emb = class.embeddings[j];
                    self.bottom_diagonal(emb.tet) == Some(emb.local_edge())
                })
                .unwrap();
            // Walking forward from the tetrahedron below reaches the one above through one fan.
            let mut forward = Vec::new();
            let mut j = below;
            while j != above {
                let emb = class.embeddings[j];
                forward.push(self.fan_slot(emb.tet, emb.exit, emb));
                j = (j + 1) % k;
            }
            let mut backward = Vec::new();
            let mut j = above;
            while j != below {
                let emb = class.embeddings[j];
                backward.push(self.fan_slot(emb.tet, emb.exit, emb));
                j = (j + 1) % k;
            }
            backward.reverse();
            let first_forward = class.embeddings[below].exit;
            let first_backward = class.embeddings[below].entry();
            let (left, right) = if first_forward < first_backward {
                (forward, backward)
            } else {
                (backward, forward)
            };
            class.below = Some(below);
            class.above = Some(above);
            class.left = left;
            class.right = right;
        }
    }

    fn fan_slot(&self, tet: usize, face: u8, emb: Embedding) -> FanSlot {
        let third = 6 - face - emb.tail - emb.head;
        FanSlot {
            face: self.face_of(tet, face),
            side: self.side_of(tet, face, third),
        }
    }

    /// Colors forced on the two non-diagonal edges of every face of every tetrahedron.
    ///
    /// Returns `(edge class, forcing)` pairs; requires a taut triangulation.
    pub fn forced_colors(&self) -> Result<Vec<(usize, Forcing)>> {
        self.require_taut()?;
        let co = self.coorient.as_ref().unwrap();
        let mut out = Vec::with_capacity(8 * self.num_tets());
        for t in 0..self.num_tets() {
            for (local, face, color) in tet_forced_colors(co[t], self.parity[t]) {
                out.push((
                    self.edge_of(t, local),
                    Forcing {
                        tet: t,
                        face,
                        color,
                    },
                ));
            }
        }
        Ok(out)
    }

    pub fn check_veering(&self) -> Result<VeeringOutcome> {
        let forcings = self.forced_colors()?;
        let mut first: Vec<Option<Forcing>> = vec![None; self.num_edges()];
        for (e, f) in forcings {
            match first[e] {
                None => first[e] = Some(f),
                Some(g) if g.color != f.color => {
                    return Ok(VeeringOutcome::NotVeering(VeeringWitness::Conflict {
                        edge: e,
                        first: g,
                        second: f,
                    }))
                }
                Some(_) => {}
            }
        }
        let mut colors = Vec::with_capacity(first.len());
        for (e, f) in first.iter().enumerate() {
            match f {
                Some(f) => colors.push(f.color),
                None => {
                    return Ok(VeeringOutcome::NotVeering(VeeringWitness::Unforced {
                        edge: e,
                    }))
                }
            }
        }
        Ok(VeeringOutcome::Veering(colors))
    }

    /// Same gluings, no coorientations.
    pub fn to_plain(&self) -> TautIdealTriangulation {
        let mut t = self.clone();
        t.coorient = None;
        t.taut = false;
        for class in &mut t.edges {
            class.below = None;
            class.above = None;
            class.left.clear();
            class.right.clear();
        }
        t
    }

    /// Same gluings with new coorientations.
    pub fn with_coorientations(&self, co: Vec<[bool; 4]>) -> Result<TautIdealTriangulation> {
        Self::new(self.gluings.clone(), Some(co))
    }

    /// The taut structure with every coorientation reversed.
    pub fn reversed(&self) -> TautIdealTriangulation {
        match &self.coorient {
            None => self.clone(),
            Some(co) => {
                let flipped = co.iter().map(|r| [!r[0], !r[1], !r[2], !r[3]]).collect();
                Self::new(self.gluings.clone(), Some(flipped)).expect("reversal keeps validity")
            }
        }
    }

    /// Relabels: tetrahedron `t` becomes `tet_map[t]` with its vertices renamed by `vert_maps[t]`.
    pub fn relabel(
        &self,
        tet_map: &[usize],
        vert_maps: &[Perm4],
    ) -> Result<TautIdealTriangulation> {
        let n = self.num_tets();
        let placeholder = Gluing {
            tet: 0,
            face: 0,
            perm: Perm4::IDENTITY,
        };
        let mut gl = vec![[placeholder; 4]; n];
        let mut co = self.coorient.as_ref().map(|_| vec![[false; 4]; n]);
        for t in 0..n {
            let nt = tet_map[t];
            let mu = vert_maps[t];
            for i in 0..4u8 {
                let g = self.gluings[t][i as usize];
                let nu = vert_maps[g.tet];
                let perm = nu.compose(g.perm).compose(mu.inverse());
                gl[nt][mu.apply(i) as usize] = Gluing {
                    tet: tet_map[g.tet],
                    face: nu.apply(g.face),
                    perm,
                };
                if let (Some(c), Some(src)) = (co.as_mut(), self.coorient.as_ref()) {
                    c[nt][mu.apply(i) as usize] = src[t][i as usize];
                }
            }
        }
        Self::new(gl, co)
    }
}

fn compute_parities(gluings: &[[Gluing; 4]]) -> Result<Vec<i8>> {
    let n = gluings.len();
    let mut parity = vec![0i8; n];
    parity[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(t) = queue.pop_front() {
        for i in 0..4u8 {
            let g = gluings[t][i as usize];
            let want = -parity[t] * g.perm.sign();
            if parity[g.tet] == 0 {
                parity[g.tet] = want;
                queue.push_back(g.tet);
            } else if parity[g.tet] != want {
                return Err(Error::NonOrientable { tet: t, face: i });
            }
        }
    }
    if parity.iter().any(|&p| p == 0) {
        return Err(Error::Disconnected);
    }
    Ok(parity)
}

fn number_faces(gluings: &[[Gluing; 4]]) -> (Vec<Face>, Vec<[usize; 4]>) {
    let n = gluings.len();
    let mut face_of = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::with_capacity(2 * n);
    for t in 0..n {
        for i in (0..4u8).rev() {
            if face_of[t][i as usize] != usize::MAX {
                continue;
            }
            let g = gluings[t][i as usize];
            let id = faces.len();
            face_of[t][i as usize] = id;
            face_of[g.tet][g.face as usize] = id;
            faces.push(Face {
                slots: [(t, i), (g.tet, g.face)],
            });
        }
    }
    (faces, face_of)
}

fn walk_edges(gluings: &[[Gluing; 4]]) -> Result<(Vec<EdgeClass>, Vec<[usize; 6]>)> {
    let n = gluings.len();
    let mut edge_of = vec![[usize::MAX; 6]; n];
    let mut edges = Vec::new();
    for t in 0..n {
        for local in 0..6 {
            if edge_of[t][local] != usize::MAX {
                continue;
            }
            let id = edges.len();
            let [a, b] = EDGE_VERTICES[local];
            let others: Vec<u8> = (0..4u8).filter(|&v| v != a && v != b).collect();
            let start = (t, a, b, others[0], others[1]);
            let mut state = start;
            let mut embeddings = Vec::new();
            loop {
                let (ct, ca, cb, cc, cd) = state;
                let l = edge_index(ca, cb);
                if edge_of[ct][l] != usize::MAX {
                    if state != start {
                        return Err(Error::InvalidEdge {
                            tet: ct,
                            edge: l as u8,
                        });
                    }
                    break;
                }
                edge_of[ct][l] = id;
                embeddings.push(Embedding {
                    tet: ct,
                    tail: ca,
                    head: cb,
                    exit: cc,
                });
                let g = gluings[ct][cc as usize];
                let p = g.perm;
                state = (g.tet, p.apply(ca), p.apply(cb), p.apply(cd), p.apply(cc));
            }
            edges.push(EdgeClass {
                embeddings,
                below: None,
                above: None,
                left: Vec::new(),
                right: Vec::new(),
            });
        }
    }
    Ok((edges, edge_of))
}

/// Vertices of face `i`, re-exported for callers that reason about slots directly.
pub fn slot_vertices(i: u8) -> [u8; 3] {
    face_vertices(i)
}

/// Colors forced inside one tetrahedron with out-marks `out` (two set) and parity `parity`, as
/// `(local edge, face, color)` triples, two per face.
pub fn tet_forced_colors(out: [bool; 4], parity: i8) -> Vec<(usize, u8, Color)> {
    let tops: Vec<u8> = (0..4u8).filter(|&i| out[i as usize]).collect();
    let bots: Vec<u8> = (0..4u8).filter(|&i| !out[i as usize]).collect();
    let mut res = Vec::with_capacity(8);
    for i in 0..4u8 {
        let top = out[i as usize];
        let pair = if top { &tops } else { &bots };
        let partner = if pair[0] == i { pair[1] } else { pair[0] };
        // Counter-clockwise seen from above: from outside for a top face, from inside for a
        // bottom face; negative parity reverses the order once more.
        let mut cyc = CCW_OUTSIDE[i as usize];
        if !top {
            cyc.swap(1, 2);
        }
        if parity < 0 {
            cyc.swap(1, 2);
        }
        // Rotate so that cyc[0] is opposite the diagonal of the face, that is `partner`.
        let start = cyc.iter().position(|&v| v == partner).unwrap();
        let v1 = cyc[(start + 1) % 3];
        let v2 = cyc[(start + 2) % 3];
        let (c1, c2) = if top {
            (Color::Red, Color::Blue)
        } else {
            (Color::Blue, Color::Red)
        };
        res.push((edge_index(partner, v2), i, c1));
        res.push((edge_index(partner, v1), i, c2));
    }
    res
}
