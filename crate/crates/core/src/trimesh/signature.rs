//! Canonical signatures: the lexicographically least breadth-first relabeling code.
//!
//! Code layout (before hex encoding): two bytes with the tetrahedron count, then one token per
//! slot not already reached as a destination, in relabeled order. A token is `0` when the slot
//! is glued to a newly discovered tetrahedron (whose labels are chosen so that the gluing is the
//! identity), or `1, hi, lo, p` when it is glued to tetrahedron `hi*256+lo` by the permutation
//! with index `p`. The taut flavor appends one byte per tetrahedron with bit `j` set when face
//! `j` points out.

use super::{Gluing, TautIdealTriangulation};
use crate::error::{Error, Result};
use crate::perm::{Perm4, ALL_PERMS};

pub const PLAIN_PREFIX: &str = "vsig1:";
pub const TAUT_PREFIX: &str = "vsig1t:";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Plain,
    Taut,
}

fn encode(tri: &TautIdealTriangulation, start: usize, mu0: Perm4, flip: Option<bool>) -> Vec<u8> {
    let n = tri.num_tets();
    let mut new_index = vec![usize::MAX; n];
    let mut maps = vec![Perm4::IDENTITY; n];
    let mut order = Vec::with_capacity(n);
    let mut used = vec![[false; 4]; n];
    let mut bytes = Vec::with_capacity(2 + 10 * n);
    bytes.push((n >> 8) as u8);
    bytes.push((n & 0xff) as u8);
    new_index[start] = 0;
    maps[start] = mu0;
    order.push(start);
    let mut k = 0;
    while k < order.len() {
        let t = order[k];
        let mu = maps[t];
        let mu_inv = mu.inverse();
        for j in 0..4u8 {
            if used[k][j as usize] {
                continue;
            }
            let i = mu_inv.apply(j);
            let g = tri.gluing(t, i);
            if new_index[g.tet] == usize::MAX {
                let idx = order.len();
                new_index[g.tet] = idx;
                maps[g.tet] = mu.compose(g.perm.inverse());
                order.push(g.tet);
                bytes.push(0);
                used[k][j as usize] = true;
                used[idx][j as usize] = true;
            } else {
                let k2 = new_index[g.tet];
                let p = maps[g.tet].compose(g.perm).compose(mu_inv);
                bytes.extend_from_slice(&[1, (k2 >> 8) as u8, (k2 & 0xff) as u8, p.index()]);
                used[k][j as usize] = true;
                used[k2][p.apply(j) as usize] = true;
            }
        }
        k += 1;
    }
    if let Some(flip) = flip {
        let co = tri
            .coorientations()
            .expect("taut flavor needs coorientations");
        for &t in &order {
            let mu_inv = maps[t].inverse();
            let mut b = 0u8;
            for j in 0..4u8 {
                if co[t][mu_inv.apply(j) as usize] != flip {
                    b |= 1 << j;
                }
            }
            bytes.push(b);
        }
    }
    bytes
}

/// Least code over all starting tetrahedra, starting labelings and, for the taut flavor,
/// both global coorientation directions.
pub fn canonical_code(tri: &TautIdealTriangulation, flavor: Flavor) -> Result<Vec<u8>> {
    let flips: &[Option<bool>] = match flavor {
        Flavor::Plain => &[None],
        Flavor::Taut => {
            tri.require_taut()?;
            &[Some(false), Some(true)]
        }
    };
    let mut best: Option<Vec<u8>> = None;
    for start in 0..tri.num_tets() {
        for &mu in &ALL_PERMS {
            for &flip in flips {
                let code = encode(tri, start, mu, flip);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    Ok(best.unwrap())
}

pub fn canonical_signature(tri: &TautIdealTriangulation, flavor: Flavor) -> Result<String> {
    let code = canonical_code(tri, flavor)?;
    let prefix = match flavor {
        Flavor::Plain => PLAIN_PREFIX,
        Flavor::Taut => TAUT_PREFIX,
    };
    let mut s = String::with_capacity(prefix.len() + 2 * code.len());
    s.push_str(prefix);
    for b in code {
        s.push_str(&format!("{b:02x}"));
    }
    Ok(s)
}

/// Rebuilds a triangulation from a signature. The result is in canonical labeling.
pub fn decode_signature(sig: &str) -> Result<TautIdealTriangulation> {
    let (taut, body) = if let Some(b) = sig.strip_prefix(TAUT_PREFIX) {
        (true, b)
    } else if let Some(b) = sig.strip_prefix(PLAIN_PREFIX) {
        (false, b)
    } else {
        return Err(Error::Signature("unknown prefix".into()));
    };
    if body.len() % 2 != 0 {
        return Err(Error::Signature("odd number of hex digits".into()));
    }
    let bytes: Vec<u8> = (0..body.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(&body[i..i + 2], 16))
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Signature("invalid hex digit".into()))?;
    let mut pos = 0;
    let mut next = || -> Result<u8> {
        let b = *bytes
            .get(pos)
            .ok_or_else(|| Error::Signature("truncated".into()))?;
        pos += 1;
        Ok(b)
    };
    let n = ((next()? as usize) << 8) | next()? as usize;
    if n == 0 {
        return Err(Error::Signature("no tetrahedra".into()));
    }
    let mut gl: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; n];
    let mut count = 1;
    let mut k = 0;
    while k < count {
        for j in 0..4u8 {
            if gl[k][j as usize].is_some() {
                continue;
            }
            match next()? {
                0 => {
                    if count >= n {
                        return Err(Error::Signature("too many tetrahedra".into()));
                    }
                    let idx = count;
                    count += 1;
                    gl[k][j as usize] = Some(Gluing {
                        tet: idx,
                        face: j,
                        perm: Perm4::IDENTITY,
                    });
                    gl[idx][j as usize] = Some(Gluing {
                        tet: k,
                        face: j,
                        perm: Perm4::IDENTITY,
                    });
                }
                1 => {
                    let k2 = ((next()? as usize) << 8) | next()? as usize;
                    let p = Perm4::from_index(next()?)
                        .ok_or_else(|| Error::Signature("bad permutation index".into()))?;
                    let j2 = p.apply(j);
                    if k2 >= count || gl[k2][j2 as usize].is_some() || (k2 == k && j2 == j) {
                        return Err(Error::Signature("inconsistent gluing".into()));
                    }
                    gl[k][j as usize] = Some(Gluing {
                        tet: k2,
                        face: j2,
                        perm: p,
                    });
                    gl[k2][j2 as usize] = Some(Gluing {
                        tet: k,
                        face: j,
                        perm: p.inverse(),
                    });
                }
                _ => return Err(Error::Signature("unknown token".into())),
            }
        }
        k += 1;
    }
    if count != n {
        return Err(Error::Signature("tetrahedron count mismatch".into()));
    }
    let co = if taut {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let b = next()?;
            rows.push([b & 1 != 0, b & 2 != 0, b & 4 != 0, b & 8 != 0]);
        }
        Some(rows)
    } else {
        None
    };
    if pos != bytes.len() {
        return Err(Error::Signature("trailing bytes".into()));
    }
    let table = gl
        .into_iter()
        .map(|row| {
            [
                row[0].unwrap(),
                row[1].unwrap(),
                row[2].unwrap(),
                row[3].unwrap(),
            ]
        })
        .collect();
    TautIdealTriangulation::new(table, co)
}
