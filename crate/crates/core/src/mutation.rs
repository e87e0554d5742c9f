//! Cutting along a carried surface, regluing by a surface automorphism, and checking the
//! resulting mutant.
//!
//! Slot conventions: for a face `f` carrying positive weight, `f+` is the slot of `f` in the
//! tetrahedron below it and `f-` the slot in the tetrahedron above it. The mutant glues `f+`
//! to `f'-` where `f' = r(f)`.

use crate::carried::{assemble_surface, CarriedSurface, WeightSystem};
use crate::error::{Error, Result};
use crate::perm::Perm4;
use crate::symmetry::{edge_image, isomorphisms, SurfaceAutomorphism};
use crate::trimesh::{
    canonical_signature, Flavor, Gluing, TautIdealTriangulation, TautReport, VeeringOutcome,
};
use std::fmt;

/// The product region between copies `level - 1` and `level` of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeProductDisk {
    pub edge: usize,
    pub level: usize,
}

impl EdgeProductDisk {
    /// Edge copy on the minus side.
    pub fn bottom(&self) -> (usize, usize) {
        (self.edge, self.level - 1)
    }

    /// Edge copy on the plus side.
    pub fn top(&self) -> (usize, usize) {
        (self.edge, self.level)
    }
}

pub fn disks_from_edge_weights(edge_weights: &[u64]) -> Vec<EdgeProductDisk> {
    let mut out = Vec::new();
    for (e, &we) in edge_weights.iter().enumerate() {
        for level in 1..we as usize {
            out.push(EdgeProductDisk { edge: e, level });
        }
    }
    out
}

pub fn edge_product_disks(
    tri: &TautIdealTriangulation,
    w: &WeightSystem,
) -> Result<Vec<EdgeProductDisk>> {
    tri.require_taut()?;
    Ok(disks_from_edge_weights(w.edge_weights()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alignment {
    Misaligns,
    /// A directed cycle of disks, each glued onto the next.
    Aligns(Vec<EdgeProductDisk>),
}

impl Alignment {
    pub fn misaligns(&self) -> bool {
        matches!(self, Alignment::Misaligns)
    }
}

/// Alignment test from edge weights and the action `(e, m) -> (e', m')` on edge copies.
pub fn alignment_from_map(
    edge_weights: &[u64],
    map: impl Fn(usize, usize) -> (usize, usize),
) -> Alignment {
    let disks = disks_from_edge_weights(edge_weights);
    let index = |d: EdgeProductDisk| disks.binary_search(&d).ok();
    let next: Vec<Option<usize>> = disks
        .iter()
        .map(|d| {
            let (e2, j) = map(d.edge, d.level);
            if j + 2 <= edge_weights[e2] as usize {
                index(EdgeProductDisk {
                    edge: e2,
                    level: j + 1,
                })
            } else {
                None
            }
        })
        .collect();
    // 0 = unvisited, 1 = on the current path, 2 = finished.
    let mut state = vec![0u8; disks.len()];
    for s in 0..disks.len() {
        if state[s] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut cur = Some(s);
        while let Some(c) = cur {
            match state[c] {
                0 => {
                    state[c] = 1;
                    path.push(c);
                    cur = next[c];
                }
                1 => {
                    let start = path.iter().position(|&x| x == c).unwrap();
                    return Alignment::Aligns(path[start..].iter().map(|&i| disks[i]).collect());
                }
                _ => break,
            }
        }
        for c in path {
            state[c] = 2;
        }
    }
    Alignment::Misaligns
}

pub fn alignment_check(q: &CarriedSurface, phi: &SurfaceAutomorphism) -> Alignment {
    let weights: Vec<u64> = (0..q.num_edge_classes())
        .map(|e| q.edge_weight(e))
        .collect();
    alignment_from_map(&weights, |e, m| {
        let s = q.edge_id(e, m).expect("edge copy exists");
        let img = &q.edges()[edge_image(q, phi, s)];
        (img.edge, img.copy)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegluingEntry {
    pub face: usize,
    pub target: usize,
    /// Side `k` of `face` is matched with side `(k + rotation) % 3` of `target`.
    pub rotation: u8,
    /// Surface triangles `g_1, ..., g_n`.
    pub sequence: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegluingMap {
    /// One entry per face of positive weight, in face order.
    pub entries: Vec<RegluingEntry>,
}

impl RegluingMap {
    pub fn target(&self, face: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.face == face)
            .map(|e| e.target)
    }

    /// `(face, target)` pairs in face order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.entries.iter().map(|e| (e.face, e.target)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.face == e.target && e.rotation == 0)
    }
}

impl fmt::Display for RegluingMap {
    /// Two rows in the layout `f+ | f2+ f5+ ...` over `r(f+) | f5- f2- ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("f{}+", e.face))
            .collect();
        let bot: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("f{}-", e.target))
            .collect();
        let width = top.iter().chain(&bot).map(|s| s.len()).max().unwrap_or(0);
        let pad = |v: &[String]| {
            v.iter()
                .map(|s| format!("{s:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "f+     | {}", pad(&top))?;
        write!(f, "r(f+)  | {}", pad(&bot))
    }
}

pub fn regluing_map(
    tri: &TautIdealTriangulation,
    w: &WeightSystem,
    phi: &SurfaceAutomorphism,
) -> Result<RegluingMap> {
    let q = assemble_surface(tri, w)?;
    regluing_on(&q, phi)
}

fn regluing_on(q: &CarriedSurface, phi: &SurfaceAutomorphism) -> Result<RegluingMap> {
    phi.validate(q)?;
    let bound: u64 = q.weights().iter().sum();
    let mut entries = Vec::new();
    for f in 0..q.num_faces() {
        let Some(low) = q.lower(f) else { continue };
        let mut sequence = vec![phi.images[low]];
        let mut rotation = phi.rotations[low];
        loop {
            let g = *sequence.last().unwrap();
            if q.is_upper(g) {
                break;
            }
            if sequence.len() as u64 > bound {
                return Err(Error::GuardExceeded { face: f });
            }
            let up = q.above(g).unwrap();
            sequence.push(phi.images[up]);
            rotation = (rotation + phi.rotations[up]) % 3;
        }
        let target = q.triangle(*sequence.last().unwrap()).face;
        entries.push(RegluingEntry {
            face: f,
            target,
            rotation,
            sequence,
        });
    }
    let mut targets: Vec<usize> = entries.iter().map(|e| e.target).collect();
    targets.sort();
    targets.dedup();
    if targets.len() != entries.len() {
        return Err(Error::TheoremViolation(
            "regluing sequences end in the same face twice".into(),
        ));
    }
    Ok(RegluingMap { entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutEdgeKind {
    Internal,
    Positive,
    Negative,
    Mixed,
}

/// A maximal run of embeddings of one edge class not separated by a cut face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutEdge {
    pub edge: usize,
    /// Indices into the embeddings of the edge class, in walking order.
    pub embeddings: Vec<usize>,
    pub kind: CutEdgeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutTriangulation {
    /// Slots `(tet, face)` of the plus boundary, one per face of positive weight.
    pub plus: Vec<(usize, u8)>,
    pub minus: Vec<(usize, u8)>,
    pub edges: Vec<CutEdge>,
}

pub fn cut_triangulation(
    tri: &TautIdealTriangulation,
    w: &WeightSystem,
) -> Result<CutTriangulation> {
    tri.require_taut()?;
    let support = w.support();
    let cut = |f: usize| w.weight(f) > 0;
    let plus = support.iter().map(|&f| tri.face_below(f)).collect();
    let minus = support.iter().map(|&f| tri.face_above(f)).collect();
    let mut edges = Vec::new();
    for (e, class) in tri.edges().iter().enumerate() {
        let n = class.embeddings.len();
        let crossing = |k: usize| {
            let m = class.embeddings[k];
            tri.face_of(m.tet, m.exit)
        };
        let cuts: Vec<usize> = (0..n).filter(|&k| cut(crossing(k))).collect();
        if cuts.is_empty() {
            edges.push(CutEdge {
                edge: e,
                embeddings: (0..n).collect(),
                kind: CutEdgeKind::Internal,
            });
            continue;
        }
        for (i, &c) in cuts.iter().enumerate() {
            let end = cuts[(i + 1) % cuts.len()];
            let mut run = Vec::new();
            let mut k = (c + 1) % n;
            loop {
                run.push(k);
                if k == end {
                    break;
                }
                k = (k + 1) % n;
            }
            let first = class.embeddings[run[0]];
            let last = class.embeddings[*run.last().unwrap()];
            let start_plus =
                tri.frame_slot(tri.face_of(first.tet, first.entry())) == (first.tet, first.entry());
            let end_plus =
                tri.frame_slot(tri.face_of(last.tet, last.exit)) == (last.tet, last.exit);
            let kind = match (start_plus, end_plus) {
                (true, true) => CutEdgeKind::Positive,
                (false, false) => CutEdgeKind::Negative,
                _ => CutEdgeKind::Mixed,
            };
            edges.push(CutEdge {
                edge: e,
                embeddings: run,
                kind,
            });
        }
    }
    Ok(CutTriangulation { plus, minus, edges })
}

#[derive(Clone, Debug)]
pub struct MutationReport {
    pub taut: TautReport,
    pub veering: VeeringOutcome,
    pub track_preserving: bool,
    /// Track preserving implies veering.
    pub implication_holds: bool,
    /// For track-preserving automorphisms: every regluing sends large side to large side.
    pub large_edges_match: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct MutationRecord {
    pub weights: WeightSystem,
    pub surface: CarriedSurface,
    pub automorphism: SurfaceAutomorphism,
    pub regluing: RegluingMap,
    pub mutant: TautIdealTriangulation,
    pub report: MutationReport,
    /// Original face `f` to the mutant face containing the slot `f+`.
    pub face_map: Vec<usize>,
}

/// Builds the mutant triangulation from a regluing map.
pub fn reglue(tri: &TautIdealTriangulation, r: &RegluingMap) -> Result<TautIdealTriangulation> {
    let mut gl: Vec<[Gluing; 4]> = tri.gluings().to_vec();
    for entry in &r.entries {
        let (t, i) = tri.face_below(entry.face);
        let (t2, i2) = tri.face_above(entry.target);
        let (tb, ib) = tri.face_below(entry.target);
        let to_above = tri.gluing(tb, ib).perm;
        let src = tri.face_frame(entry.face);
        let dst = tri.face_frame(entry.target);
        let mut pairs = vec![(i, i2)];
        for k in 0..3 {
            let v = dst[(k + entry.rotation as usize) % 3];
            pairs.push((src[k], to_above.apply(v)));
        }
        let perm = Perm4::from_pairs(&pairs)
            .ok_or_else(|| Error::TheoremViolation("regluing is not a bijection".into()))?;
        gl[t][i as usize] = Gluing {
            tet: t2,
            face: i2,
            perm,
        };
        gl[t2][i2 as usize] = Gluing {
            tet: t,
            face: i,
            perm: perm.inverse(),
        };
    }
    let co = tri.coorientations().map(|c| c.to_vec());
    TautIdealTriangulation::new(gl, co)
}

pub fn mutate(
    tri: &TautIdealTriangulation,
    w: &WeightSystem,
    phi: &SurfaceAutomorphism,
) -> Result<MutationRecord> {
    let q = assemble_surface(tri, w)?;
    let phi = phi.validate(&q)?;
    if let Alignment::Aligns(cycle) = alignment_check(&q, &phi) {
        return Err(Error::Aligning(
            cycle.iter().map(|d| (d.edge, d.level)).collect(),
        ));
    }
    let regluing = regluing_on(&q, &phi)?;
    let mutant = match reglue(tri, &regluing) {
        Ok(m) => m,
        Err(Error::TautMarking(m)) => return Err(Error::TheoremViolation(m)),
        Err(e) => return Err(e),
    };
    let taut = mutant.check_taut();
    if !taut.is_ok() {
        return Err(Error::TheoremViolation(format!(
            "mutant of a misaligning automorphism is not taut: {:?}",
            taut.violations
        )));
    }
    let veering = mutant.check_veering()?;
    let track_preserving = phi.track_preserving;
    let large_edges_match = track_preserving.then(|| {
        regluing.entries.iter().all(|e| {
            let a = tri.large_side(e.face).unwrap();
            let b = tri.large_side(e.target).unwrap();
            (a + e.rotation) % 3 == b
        })
    });
    let implication_holds =
        !track_preserving || !tri.check_veering()?.is_veering() || veering.is_veering();
    if !implication_holds || large_edges_match == Some(false) {
        return Err(Error::TheoremViolation(
            "track-preserving mutation lost the veering structure".into(),
        ));
    }
    let face_map = (0..tri.num_faces())
        .map(|f| {
            let (t, i) = tri.face_below(f);
            mutant.face_of(t, i)
        })
        .collect();
    Ok(MutationRecord {
        weights: w.clone(),
        surface: q,
        automorphism: phi,
        regluing,
        mutant,
        report: MutationReport {
            taut,
            veering,
            track_preserving,
            implication_holds,
            large_edges_match,
        },
        face_map,
    })
}

/// Moves each face weight to the mutant face containing the corresponding plus slot.
pub fn transfer_weights(record: &MutationRecord) -> Result<WeightSystem> {
    let w = &record.weights;
    let mut out = vec![0u64; record.mutant.num_faces()];
    for (f, &g) in record.face_map.iter().enumerate() {
        out[g] = w.weight(f);
    }
    let moved = WeightSystem::new(&record.mutant, out)
        .map_err(|e| Error::TheoremViolation(format!("transported weights: {e}")))?;
    let after = assemble_surface(&record.mutant, &moved)?;
    if isomorphisms(&record.surface, &after, false).is_empty() {
        return Err(Error::TheoremViolation(
            "transported surface is not isomorphic to the mutating surface".into(),
        ));
    }
    Ok(moved)
}

/// Taut signature of the mutant.
pub fn mutant_signature(record: &MutationRecord) -> Result<String> {
    canonical_signature(&record.mutant, Flavor::Taut)
}

/// The automorphism of the transported surface acting on triangles as `phi` acts on the
/// mutating surface, where copy `j` of `f` corresponds to copy `j` of the mutant face
/// containing `f+`. `None` when no automorphism of the transported surface matches.
pub fn transport_automorphism(
    record: &MutationRecord,
    moved: &CarriedSurface,
    phi: &SurfaceAutomorphism,
) -> Option<SurfaceAutomorphism> {
    let q = &record.surface;
    let corr = |t: usize| {
        let tr = q.triangle(t);
        moved.triangle_id(record.face_map[tr.face], tr.copy)
    };
    let mut images = vec![usize::MAX; moved.num_triangles()];
    for t in 0..q.num_triangles() {
        images[corr(t)?] = corr(phi.images[t])?;
    }
    crate::symmetry::automorphism_group(moved, false)
        .into_iter()
        .find(|psi| psi.images == images)
}
