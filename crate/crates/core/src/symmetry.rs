//! Orientation-preserving combinatorial automorphisms of carried surfaces.
//!
//! An automorphism sends triangle `t` to `images[t]` and side `k` of `t` to side
//! `(k + rotations[t]) % 3` of the image. All triangles are framed counter-clockwise from
//! above, so cyclic shifts are exactly the orientation-preserving side bijections.

use crate::carried::{CarriedSurface, Dart};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceAutomorphism {
    pub images: Vec<usize>,
    pub rotations: Vec<u8>,
    pub track_preserving: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Simplex {
    Triangle(usize),
    Edge(usize),
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplex::Triangle(t) => write!(f, "triangle {t}"),
            Simplex::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

impl SurfaceAutomorphism {
    pub fn identity(q: &CarriedSurface) -> SurfaceAutomorphism {
        let n = q.num_triangles();
        SurfaceAutomorphism {
            images: (0..n).collect(),
            rotations: vec![0; n],
            track_preserving: true,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &t)| i == t)
            && self.rotations.iter().all(|&r| r == 0)
    }

    pub fn map_dart(&self, (t, k): Dart) -> Dart {
        (self.images[t], (k + self.rotations[t]) % 3)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SurfaceAutomorphism) -> SurfaceAutomorphism {
        let images = other.images.iter().map(|&t| self.images[t]).collect();
        let rotations = other
            .images
            .iter()
            .zip(&other.rotations)
            .map(|(&t, &r)| (r + self.rotations[t]) % 3)
            .collect();
        SurfaceAutomorphism {
            images,
            rotations,
            track_preserving: self.track_preserving && other.track_preserving,
        }
    }

    pub fn inverse(&self) -> SurfaceAutomorphism {
        let n = self.images.len();
        let mut images = vec![0; n];
        let mut rotations = vec![0; n];
        for t in 0..n {
            images[self.images[t]] = t;
            rotations[self.images[t]] = (3 - self.rotations[t]) % 3;
        }
        SurfaceAutomorphism {
            images,
            rotations,
            track_preserving: self.track_preserving,
        }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Checks the gluing compatibility and recomputes the track flag.
    pub fn validate(&self, q: &CarriedSurface) -> Result<SurfaceAutomorphism> {
        let n = q.num_triangles();
        if self.images.len() != n || self.rotations.len() != n {
            return Err(Error::NotAutomorphism("wrong number of triangles".into()));
        }
        let mut seen = vec![false; n];
        for &t in &self.images {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::NotAutomorphism(
                    "triangle map is not a bijection".into(),
                ));
            }
        }
        if self.rotations.iter().any(|&r| r > 2) {
            return Err(Error::NotAutomorphism("rotation out of range".into()));
        }
        for t in 0..n {
            for k in 0..3u8 {
                let d = (t, k);
                if q.partner(self.map_dart(d)) != self.map_dart(q.partner(d)) {
                    return Err(Error::NotAutomorphism(format!(
                        "side {k} of triangle {t} breaks the edge identifications"
                    )));
                }
            }
        }
        Ok(SurfaceAutomorphism {
            track_preserving: preserves_track(q, &self.images, &self.rotations),
            ..self.clone()
        })
    }
}

fn preserves_track(q: &CarriedSurface, images: &[usize], rotations: &[u8]) -> bool {
    (0..images.len())
        .all(|t| q.triangle(images[t]).large == (q.triangle(t).large + rotations[t]) % 3)
}

pub fn apply(q: &CarriedSurface, phi: &SurfaceAutomorphism, x: Simplex) -> Result<Simplex> {
    match x {
        Simplex::Triangle(t) if t < q.num_triangles() => Ok(Simplex::Triangle(phi.images[t])),
        Simplex::Edge(e) if e < q.num_edges() => {
            let (u, s) = phi.map_dart(q.edges()[e].darts[0]);
            Ok(Simplex::Edge(q.triangle(u).sides[s as usize]))
        }
        _ => Err(Error::NoSuchSimplex(x.to_string())),
    }
}

/// Image of surface edge `e`.
pub fn edge_image(q: &CarriedSurface, phi: &SurfaceAutomorphism, e: usize) -> usize {
    let (u, s) = phi.map_dart(q.edges()[e].darts[0]);
    q.triangle(u).sides[s as usize]
}

/// Extends `images[seed] = image` with rotation `r` across the component of `seed`.
#[allow(clippy::too_many_arguments)]
fn propagate(
    a: &CarriedSurface,
    b: &CarriedSurface,
    seed: usize,
    image: usize,
    r: u8,
    images: &mut [usize],
    rotations: &mut [u8],
    used: &mut [bool],
    track_only: bool,
) -> bool {
    let mut stack = vec![(seed, image, r)];
    let mut assigned = Vec::new();
    let mut ok = true;
    while let Some((t, u, r)) = stack.pop() {
        if images[t] != usize::MAX {
            if images[t] != u || rotations[t] != r {
                ok = false;
                break;
            }
            continue;
        }
        if used[u] || (track_only && b.triangle(u).large != (a.triangle(t).large + r) % 3) {
            ok = false;
            break;
        }
        images[t] = u;
        rotations[t] = r;
        used[u] = true;
        assigned.push(t);
        for k in 0..3u8 {
            let (t2, s) = a.partner((t, k));
            let (u2, s2) = b.partner((u, (k + r) % 3));
            stack.push((t2, u2, (s2 + 3 - s) % 3));
        }
    }
    if !ok {
        for t in assigned {
            used[images[t]] = false;
            images[t] = usize::MAX;
        }
    }
    ok
}

/// All orientation-preserving combinatorial isomorphisms `a -> b`, sorted by triangle images
/// and rotations. With `track_only`, only those sending large sides to large sides.
pub fn isomorphisms(
    a: &CarriedSurface,
    b: &CarriedSurface,
    track_only: bool,
) -> Vec<SurfaceAutomorphism> {
    let n = a.num_triangles();
    if b.num_triangles() != n {
        return Vec::new();
    }
    let comps = a.components();
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut rotations = vec![0u8; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn search(
        a: &CarriedSurface,
        b: &CarriedSurface,
        comps: &[Vec<usize>],
        c: usize,
        images: &mut Vec<usize>,
        rotations: &mut Vec<u8>,
        used: &mut Vec<bool>,
        track_only: bool,
        out: &mut Vec<SurfaceAutomorphism>,
    ) {
        if c == comps.len() {
            let track_preserving = (0..images.len())
                .all(|t| b.triangle(images[t]).large == (a.triangle(t).large + rotations[t]) % 3);
            out.push(SurfaceAutomorphism {
                images: images.clone(),
                rotations: rotations.clone(),
                track_preserving,
            });
            return;
        }
        let seed = comps[c][0];
        for u in 0..b.num_triangles() {
            if used[u] {
                continue;
            }
            for r in 0..3u8 {
                if propagate(a, b, seed, u, r, images, rotations, used, track_only) {
                    search(a, b, comps, c + 1, images, rotations, used, track_only, out);
                    for &t in &comps[c] {
                        used[images[t]] = false;
                        images[t] = usize::MAX;
                        rotations[t] = 0;
                    }
                }
            }
        }
    }
    search(
        a,
        b,
        &comps,
        0,
        &mut images,
        &mut rotations,
        &mut used,
        track_only,
        &mut out,
    );
    out.sort();
    out
}

/// All orientation-preserving automorphisms, identity first. With `track_only`, only those
/// sending large sides to large sides.
pub fn automorphism_group(q: &CarriedSurface, track_only: bool) -> Vec<SurfaceAutomorphism> {
    isomorphisms(q, q, track_only)
}

/// Closure under composition and inverses, and presence of the identity.
pub fn is_group(elements: &[SurfaceAutomorphism]) -> bool {
    let key = |p: &SurfaceAutomorphism| (p.images.clone(), p.rotations.clone());
    let keys: std::collections::HashSet<_> = elements.iter().map(key).collect();
    elements.iter().any(|p| p.is_identity())
        && elements.iter().all(|p| keys.contains(&key(&p.inverse())))
        && elements
            .iter()
            .all(|p| elements.iter().all(|r| keys.contains(&key(&p.compose(r)))))
}

/// Number of surface edges mapped to themselves and number of punctures mapped to themselves.
pub fn fixed_simplices(q: &CarriedSurface, phi: &SurfaceAutomorphism) -> (usize, usize) {
    let edges = (0..q.num_edges())
        .filter(|&e| edge_image(q, phi, e) == e)
        .count();
    let orbits = q.puncture_orbits();
    let mut orbit_of = std::collections::HashMap::new();
    for (i, o) in orbits.iter().enumerate() {
        for &c in o {
            orbit_of.insert(c, i);
        }
    }
    let punctures = orbits
        .iter()
        .enumerate()
        .filter(|(i, o)| orbit_of[&phi.map_dart(o[0])] == *i)
        .count();
    (edges, punctures)
}

/// Serializes automorphisms as `aut` blocks.
pub fn write_aut(entries: &[(&str, &SurfaceAutomorphism)]) -> String {
    let mut out = String::from("aut 1\n");
    for (name, phi) in entries {
        out.push_str(&format!("aut {name} {}\n", phi.images.len()));
        let im: Vec<String> = phi.images.iter().map(|x| x.to_string()).collect();
        let rot: Vec<String> = phi.rotations.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("images {}\n", im.join(" ")));
        out.push_str(&format!("rotations {}\n", rot.join(" ")));
        out.push_str("end\n");
    }
    out
}

/// Parses `aut` blocks into named automorphisms; flags are filled by [`SurfaceAutomorphism::validate`].
pub fn parse_aut(doc: &str) -> Result<Vec<(String, SurfaceAutomorphism)>> {
    let perr = |line: usize, message: &str| Error::Parse {
        line,
        column: 1,
        message: message.to_string(),
    };
    let mut out = Vec::new();
    let mut current: Option<(String, usize, Option<Vec<usize>>, Option<Vec<u8>>)> = None;
    let mut header = false;
    for (i, raw) in doc.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        if !header {
            if words != ["aut", "1"] {
                return Err(perr(ln, "expected header `aut 1`"));
            }
            header = true;
            continue;
        }
        match words[0] {
            "aut" if current.is_none() && words.len() == 3 => {
                let n = words[2]
                    .parse()
                    .map_err(|_| perr(ln, "bad triangle count"))?;
                current = Some((words[1].to_string(), n, None, None));
            }
            "images" | "rotations" if current.is_some() => {
                let cur = current.as_mut().unwrap();
                let vals: Vec<usize> = words[1..]
                    .iter()
                    .map(|w| w.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| perr(ln, "bad number"))?;
                if vals.len() != cur.1 {
                    return Err(perr(ln, "wrong number of entries"));
                }
                if words[0] == "images" {
                    cur.2 = Some(vals);
                } else {
                    cur.3 = Some(vals.into_iter().map(|v| v as u8).collect());
                }
            }
            "end" if current.is_some() => {
                let (name, _, im, rot) = current.take().unwrap();
                let (Some(images), Some(rotations)) = (im, rot) else {
                    return Err(perr(ln, "incomplete aut block"));
                };
                out.push((
                    name,
                    SurfaceAutomorphism {
                        images,
                        rotations,
                        track_preserving: false,
                    },
                ));
            }
            _ => return Err(perr(ln, "unexpected line")),
        }
    }
    if current.is_some() {
        return Err(perr(doc.lines().count(), "unterminated aut block"));
    }
    Ok(out)
}
