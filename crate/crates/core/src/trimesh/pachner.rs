//! 2-3 and 3-2 moves on plain triangulations and a bidirectional search between them.

use super::signature::{canonical_signature, Flavor};
use super::{Gluing, TautIdealTriangulation};
use crate::error::{Error, Result};
use crate::perm::{face_vertices, Perm4};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    TwoThree,
    ThreeTwo,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::TwoThree => "2-3",
            MoveKind::ThreeTwo => "3-2",
        })
    }
}

/// One move of a path: `site` is a face (2-3) or edge class (3-2) of the triangulation the
/// move is applied to; `signature` is the plain signature of the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PachnerStep {
    pub kind: MoveKind,
    pub site: usize,
    pub signature: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectOutcome {
    Path(Vec<PachnerStep>),
    NotFound,
}

/// Old slot -> (new tet, new face, vertex map from old labels to new labels).
type Remap = HashMap<(usize, u8), (usize, u8, Perm4)>;

fn local_of(names: &[u8; 4], name: u8) -> u8 {
    names.iter().position(|&n| n == name).unwrap() as u8
}

/// Vertex map sending old labels to new ones, given `(old label, name)` pairs for three
/// vertices and the old label whose image is `target_name`.
fn name_map(names: &[u8; 4], pairs: &[(u8, u8)], opposite_old: u8, target_name: u8) -> Perm4 {
    let mut p: Vec<(u8, u8)> = pairs
        .iter()
        .map(|&(old, n)| (old, local_of(names, n)))
        .collect();
    p.push((opposite_old, local_of(names, target_name)));
    Perm4::from_pairs(&p).expect("consistent vertex map")
}

/// Permutation gluing the face of `a` opposite name `na` to the face of `b` opposite `nb`,
/// matching vertices by name.
fn internal_perm(a: &[u8; 4], na: u8, b: &[u8; 4], nb: u8) -> Perm4 {
    let mut pairs = Vec::with_capacity(4);
    for k in 0..4u8 {
        let name = a[k as usize];
        let target = if name == na { nb } else { name };
        pairs.push((k, local_of(b, target)));
    }
    Perm4::from_pairs(&pairs).expect("matching names")
}

fn assemble(
    tri: &TautIdealTriangulation,
    removed: &[usize],
    new_names: &[[u8; 4]],
    internal: &[(usize, u8, usize, u8, Perm4)],
    external: &Remap,
) -> Result<(TautIdealTriangulation, usize)> {
    let n = tri.num_tets();
    let mut index = vec![usize::MAX; n];
    let mut kept = 0;
    for t in 0..n {
        if !removed.contains(&t) {
            index[t] = kept;
            kept += 1;
        }
    }
    let total = kept + new_names.len();
    let mut gl: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; total];
    let target = |t: usize, i: u8| -> (usize, u8, Perm4) {
        match external.get(&(t, i)) {
            Some(&(nt, nf, mu)) => (kept + nt, nf, mu),
            None => (index[t], i, Perm4::IDENTITY),
        }
    };
    for t in 0..n {
        for i in 0..4u8 {
            if removed.contains(&t) && !external.contains_key(&(t, i)) {
                continue;
            }
            let g = tri.gluing(t, i);
            let (st, sf, mu) = target(t, i);
            let (dt, df, nu) = target(g.tet, g.face);
            if dt == usize::MAX || st == usize::MAX {
                return Err(Error::InvalidSite("gluing into an internal face".into()));
            }
            gl[st][sf as usize] = Some(Gluing {
                tet: dt,
                face: df,
                perm: nu.compose(g.perm).compose(mu.inverse()),
            });
        }
    }
    for &(a, fa, b, fb, p) in internal {
        gl[kept + a][fa as usize] = Some(Gluing {
            tet: kept + b,
            face: fb,
            perm: p,
        });
        gl[kept + b][fb as usize] = Some(Gluing {
            tet: kept + a,
            face: fa,
            perm: p.inverse(),
        });
    }
    let table = gl
        .into_iter()
        .map(|row| {
            let mut out = [Gluing {
                tet: 0,
                face: 0,
                perm: Perm4::IDENTITY,
            }; 4];
            for i in 0..4 {
                out[i] = row[i].ok_or_else(|| Error::InvalidSite("unfilled slot".into()))?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((TautIdealTriangulation::plain(table)?, kept))
}

const P: u8 = 0;
const Q: u8 = 1;
const U: u8 = 0;
const V: u8 = 1;
const A: u8 = 2;
const B: u8 = 3;
const C: u8 = 4;

fn two_three(tri: &TautIdealTriangulation, face: usize) -> Result<(TautIdealTriangulation, usize)> {
    if face >= tri.num_faces() {
        return Err(Error::InvalidSite(format!("no face {face}")));
    }
    let [(t0, i0), (t1, i1)] = tri.faces()[face].slots;
    if t0 == t1 {
        return Err(Error::InvalidSite(format!(
            "face {face} joins tet {t0} to itself"
        )));
    }
    let rho = tri.gluing(t0, i0).perm;
    let abc = face_vertices(i0);
    // Labels of each name in the two old tetrahedra.
    let mut in0 = [0u8; 5];
    let mut in1 = [0u8; 5];
    in0[P as usize] = i0;
    in1[Q as usize] = i1;
    for (k, name) in [A, B, C].into_iter().enumerate() {
        in0[name as usize] = abc[k];
        in1[name as usize] = rho.apply(abc[k]);
    }
    let omit = [A, B, C];
    let names: Vec<[u8; 4]> = omit
        .iter()
        .map(|&z| {
            let rest: Vec<u8> = [A, B, C].into_iter().filter(|&x| x != z).collect();
            [P, Q, rest[0], rest[1]]
        })
        .collect();
    let mut external = Remap::new();
    for (k, &z) in omit.iter().enumerate() {
        let rest: Vec<u8> = [A, B, C].into_iter().filter(|&x| x != z).collect();
        let nm = &names[k];
        let mu0 = name_map(
            nm,
            &[
                (in0[P as usize], P),
                (in0[rest[0] as usize], rest[0]),
                (in0[rest[1] as usize], rest[1]),
            ],
            in0[z as usize],
            Q,
        );
        external.insert((t0, in0[z as usize]), (k, local_of(nm, Q), mu0));
        let mu1 = name_map(
            nm,
            &[
                (in1[Q as usize], Q),
                (in1[rest[0] as usize], rest[0]),
                (in1[rest[1] as usize], rest[1]),
            ],
            in1[z as usize],
            P,
        );
        external.insert((t1, in1[z as usize]), (k, local_of(nm, P), mu1));
    }
    let mut internal = Vec::new();
    for a in 0..3 {
        for b in a + 1..3 {
            let (za, zb) = (omit[a], omit[b]);
            // N_za and N_zb share the face opposite zb in N_za and opposite za in N_zb.
            let p = internal_perm(&names[a], zb, &names[b], za);
            internal.push((a, local_of(&names[a], zb), b, local_of(&names[b], za), p));
        }
    }
    let (out, kept) = assemble(tri, &[t0, t1], &names, &internal, &external)?;
    let inverse = out.edge_between(kept, local_of(&names[0], P), local_of(&names[0], Q));
    Ok((out, inverse))
}

fn three_two(tri: &TautIdealTriangulation, edge: usize) -> Result<(TautIdealTriangulation, usize)> {
    if edge >= tri.num_edges() {
        return Err(Error::InvalidSite(format!("no edge {edge}")));
    }
    let embs = &tri.edge(edge).embeddings;
    if embs.len() != 3 {
        return Err(Error::InvalidSite(format!(
            "edge {edge} has degree {}, not 3",
            embs.len()
        )));
    }
    let tets: Vec<usize> = embs.iter().map(|e| e.tet).collect();
    if tets[0] == tets[1] || tets[1] == tets[2] || tets[0] == tets[2] {
        return Err(Error::InvalidSite(format!(
            "edge {edge} meets repeated tetrahedra {tets:?}"
        )));
    }
    let link = [A, B, C];
    let new_names = [[U, A, B, C], [V, A, B, C]];
    let mut external = Remap::new();
    for k in 0..3 {
        let e = embs[k];
        let here = link[k];
        let before = link[(k + 2) % 3];
        let third = link[(k + 1) % 3];
        let lab_here = e.entry();
        let lab_before = e.exit;
        let mu_u = name_map(
            &new_names[0],
            &[(e.tail, U), (lab_here, here), (lab_before, before)],
            e.head,
            third,
        );
        external.insert((e.tet, e.head), (0, local_of(&new_names[0], third), mu_u));
        let mu_v = name_map(
            &new_names[1],
            &[(e.head, V), (lab_here, here), (lab_before, before)],
            e.tail,
            third,
        );
        external.insert((e.tet, e.tail), (1, local_of(&new_names[1], third), mu_v));
    }
    let p = internal_perm(&new_names[0], U, &new_names[1], V);
    let internal = [(0, 0, 1, 0, p)];
    let (out, kept) = assemble(tri, &tets, &new_names, &internal, &external)?;
    let inverse = out.face_of(kept, 0);
    Ok((out, inverse))
}

/// Applies a move and also returns the site of the inverse move in the result.
pub fn pachner_move_with_inverse(
    tri: &TautIdealTriangulation,
    site: usize,
    kind: MoveKind,
) -> Result<(TautIdealTriangulation, usize)> {
    match kind {
        MoveKind::TwoThree => two_three(tri, site),
        MoveKind::ThreeTwo => three_two(tri, site),
    }
}

/// Applies a 2-3 move at a face or a 3-2 move at an edge class; coorientations are dropped.
pub fn pachner_move(
    tri: &TautIdealTriangulation,
    site: usize,
    kind: MoveKind,
) -> Result<TautIdealTriangulation> {
    pachner_move_with_inverse(tri, site, kind).map(|(t, _)| t)
}

/// All admissible moves in deterministic order: 2-3 by face, then 3-2 by edge.
pub fn admissible_moves(tri: &TautIdealTriangulation) -> Vec<(MoveKind, usize)> {
    let mut out = Vec::new();
    for (f, face) in tri.faces().iter().enumerate() {
        if face.slots[0].0 != face.slots[1].0 {
            out.push((MoveKind::TwoThree, f));
        }
    }
    for (e, class) in tri.edges().iter().enumerate() {
        let t: Vec<usize> = class.embeddings.iter().map(|x| x.tet).collect();
        if t.len() == 3 && t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
            out.push((MoveKind::ThreeTwo, e));
        }
    }
    out
}

struct Node {
    depth: usize,
    parent: Option<(String, MoveKind, usize)>,
    rep: TautIdealTriangulation,
}

struct Side {
    nodes: HashMap<String, Node>,
    frontier: Vec<String>,
    depth: usize,
}

impl Side {
    fn new(root: TautIdealTriangulation) -> Result<Side> {
        let sig = canonical_signature(&root, Flavor::Plain)?;
        let mut nodes = HashMap::new();
        nodes.insert(
            sig.clone(),
            Node {
                depth: 0,
                parent: None,
                rep: root,
            },
        );
        Ok(Side {
            nodes,
            frontier: vec![sig],
            depth: 0,
        })
    }

    fn expand(&mut self, visited_elsewhere: usize, budget: usize) -> Result<Vec<String>> {
        let mut fresh: BTreeMap<String, Node> = BTreeMap::new();
        for sig in &self.frontier {
            let rep = &self.nodes[sig].rep;
            for (kind, site) in admissible_moves(rep) {
                let next = match pachner_move(rep, site, kind) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                let s = canonical_signature(&next, Flavor::Plain)?;
                if self.nodes.contains_key(&s) || fresh.contains_key(&s) {
                    continue;
                }
                fresh.insert(
                    s,
                    Node {
                        depth: self.depth + 1,
                        parent: Some((sig.clone(), kind, site)),
                        rep: next,
                    },
                );
                if self.nodes.len() + fresh.len() + visited_elsewhere > budget {
                    return Err(Error::ResourceCap { budget });
                }
            }
        }
        self.depth += 1;
        let keys: Vec<String> = fresh.keys().cloned().collect();
        self.nodes.extend(fresh);
        self.frontier = keys.clone();
        Ok(keys)
    }

    /// Moves from the root to `sig`, in application order.
    fn chain(&self, sig: &str) -> Vec<(String, MoveKind, usize)> {
        let mut out = Vec::new();
        let mut cur = sig.to_string();
        while let Some((parent, kind, site)) = &self.nodes[&cur].parent {
            out.push((cur.clone(), *kind, *site));
            cur = parent.clone();
        }
        out.reverse();
        out
    }
}

pub const DEFAULT_NODE_BUDGET: usize = 200_000;

/// Shortest sequence of 2-3/3-2 moves taking `a` to a triangulation isomorphic to `b`.
pub fn pachner_connect(
    a: &TautIdealTriangulation,
    b: &TautIdealTriangulation,
    max_depth: usize,
    budget: usize,
) -> Result<ConnectOutcome> {
    let mut fwd = Side::new(a.to_plain())?;
    let mut bwd = Side::new(b.to_plain())?;
    if fwd.frontier == bwd.frontier {
        return Ok(ConnectOutcome::Path(Vec::new()));
    }
    let meet = loop {
        if fwd.depth + bwd.depth >= max_depth || fwd.frontier.is_empty() || bwd.frontier.is_empty()
        {
            return Ok(ConnectOutcome::NotFound);
        }
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (this, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };
        let fresh = this.expand(other.nodes.len(), budget)?;
        let best = fresh
            .iter()
            .filter_map(|s| {
                other
                    .nodes
                    .get(s)
                    .map(|n| (this.depth + n.depth, s.clone()))
            })
            .min();
        if let Some((_, s)) = best {
            break s;
        }
    };

    let mut path = Vec::new();
    let mut cur = a.to_plain();
    for (sig, kind, site) in fwd.chain(&meet) {
        cur = pachner_move(&cur, site, kind)?;
        path.push(PachnerStep {
            kind,
            site,
            signature: sig,
        });
    }
    // Walk the backward half in reverse: at each step pick the first move reaching the
    // signature of the previous node on the backward chain.
    let back = bwd.chain(&meet);
    let mut wanted: Vec<String> = vec![canonical_signature(&b.to_plain(), Flavor::Plain)?];
    wanted.extend(back.iter().map(|(s, _, _)| s.clone()));
    wanted.pop();
    for target in wanted.into_iter().rev() {
        let mut found = None;
        for (kind, site) in admissible_moves(&cur) {
            if let Ok(next) = pachner_move(&cur, site, kind) {
                if canonical_signature(&next, Flavor::Plain)? == target {
                    found = Some((kind, site, next));
                    break;
                }
            }
        }
        let (kind, site, next) = found.ok_or_else(|| {
            Error::TheoremViolation("backward half of the path could not be replayed".into())
        })?;
        cur = next;
        path.push(PachnerStep {
            kind,
            site,
            signature: target,
        });
    }
    Ok(ConnectOutcome::Path(path))
}
