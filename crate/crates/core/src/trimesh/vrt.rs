//! The `.vrt` text format.
//!
//! ```text
//! vrt 1
//! tets 2
//! g 0 0 1 3 3120
//! ...
//! co 0 1 1 0 0
//! ```

use super::{Gluing, TautIdealTriangulation};
use crate::error::{Error, Result};
use crate::perm::Perm4;
use std::fmt::Write;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: s + 1,
        });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn number(tok: &Token<'_>, line: usize, what: &str) -> Result<usize> {
    tok.text.parse().map_err(|_| {
        err(
            line,
            tok.column,
            format!("expected {what}, found `{}`", tok.text),
        )
    })
}

/// Parses a `.vrt` document without validating the triangulation.
///
/// Returns the gluing table and the coorientations (absent when the document has no `co`
/// lines).
pub fn parse_vrt(doc: &str) -> Result<(Vec<[Gluing; 4]>, Option<Vec<[bool; 4]>>)> {
    let mut lines = doc
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (ln, header) = lines.next().ok_or_else(|| err(1, 1, "empty document"))?;
    let toks = tokens(header);
    if toks.len() != 2 || toks[0].text != "vrt" || toks[1].text != "1" {
        return Err(err(ln, 1, "expected `vrt 1`"));
    }
    let (ln, count) = lines
        .next()
        .ok_or_else(|| err(ln + 1, 1, "missing `tets` line"))?;
    let toks = tokens(count);
    if toks.len() != 2 || toks[0].text != "tets" {
        return Err(err(ln, 1, "expected `tets N`"));
    }
    let n = number(&toks[1], ln, "tetrahedron count")?;
    if n == 0 {
        return Err(err(
            ln,
            toks[1].column,
            "tetrahedron count must be positive",
        ));
    }

    let mut gluings: Vec<[Option<Gluing>; 4]> = vec![[None; 4]; n];
    let mut co: Vec<Option<[bool; 4]>> = vec![None; n];
    let mut any_co = false;
    for (ln, text) in lines {
        let toks = tokens(text);
        match toks[0].text {
            "g" => {
                if toks.len() != 6 {
                    return Err(err(ln, 1, "expected `g t i t' i' p0p1p2p3`"));
                }
                let t = number(&toks[1], ln, "tetrahedron")?;
                let i = number(&toks[2], ln, "face")?;
                let t2 = number(&toks[3], ln, "tetrahedron")?;
                let i2 = number(&toks[4], ln, "face")?;
                for (v, tok, bound) in [
                    (t, &toks[1], n),
                    (i, &toks[2], 4),
                    (t2, &toks[3], n),
                    (i2, &toks[4], 4),
                ] {
                    if v >= bound {
                        return Err(err(ln, tok.column, format!("index {v} out of range")));
                    }
                }
                let perm: Perm4 = toks[5]
                    .text
                    .parse()
                    .map_err(|_| err(ln, toks[5].column, "invalid permutation"))?;
                if gluings[t][i].is_some() {
                    return Err(err(ln, 1, format!("duplicate gluing for tet {t} face {i}")));
                }
                gluings[t][i] = Some(Gluing {
                    tet: t2,
                    face: i2 as u8,
                    perm,
                });
            }
            "co" => {
                if toks.len() != 6 {
                    return Err(err(ln, 1, "expected `co t b0 b1 b2 b3`"));
                }
                let t = number(&toks[1], ln, "tetrahedron")?;
                if t >= n {
                    return Err(err(ln, toks[1].column, format!("index {t} out of range")));
                }
                let mut bits = [false; 4];
                for k in 0..4 {
                    bits[k] = match toks[2 + k].text {
                        "1" => true,
                        "0" => false,
                        _ => return Err(err(ln, toks[2 + k].column, "expected 0 or 1")),
                    };
                }
                if co[t].is_some() {
                    return Err(err(ln, 1, format!("duplicate coorientation for tet {t}")));
                }
                co[t] = Some(bits);
                any_co = true;
            }
            other => return Err(err(ln, toks[0].column, format!("unknown record `{other}`"))),
        }
    }

    let mut table = Vec::with_capacity(n);
    for (t, row) in gluings.iter().enumerate() {
        let mut out = [Gluing {
            tet: 0,
            face: 0,
            perm: Perm4::IDENTITY,
        }; 4];
        for i in 0..4 {
            out[i] = row[i].ok_or(Error::Unglued {
                tet: t,
                face: i as u8,
            })?;
        }
        table.push(out);
    }
    let co = if any_co {
        let mut rows = Vec::with_capacity(n);
        for (t, c) in co.into_iter().enumerate() {
            rows.push(
                c.ok_or_else(|| Error::TautMarking(format!("tet {t} has no coorientation line")))?,
            );
        }
        Some(rows)
    } else {
        None
    };
    Ok((table, co))
}

/// Parses and validates a `.vrt` document; coorientations, when present, must be taut.
pub fn load_triangulation(doc: &str) -> Result<TautIdealTriangulation> {
    let (gluings, co) = parse_vrt(doc)?;
    let tri = TautIdealTriangulation::new(gluings, co)?;
    if tri.has_coorientations() {
        let report = tri.check_taut();
        if let Some(v) = report.violations.first() {
            return Err(Error::TautMarking(v.to_string()));
        }
    }
    Ok(tri)
}

/// Renders a triangulation as a `.vrt` document. `comments` become leading `#` lines.
pub fn write_vrt(tri: &TautIdealTriangulation, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "vrt 1").unwrap();
    writeln!(out, "tets {}", tri.num_tets()).unwrap();
    for t in 0..tri.num_tets() {
        for i in 0..4u8 {
            let g = tri.gluing(t, i);
            writeln!(out, "g {t} {i} {} {} {}", g.tet, g.face, g.perm).unwrap();
        }
    }
    if let Some(co) = tri.coorientations() {
        for (t, row) in co.iter().enumerate() {
            let b: Vec<&str> = row.iter().map(|&x| if x { "1" } else { "0" }).collect();
            writeln!(out, "co {t} {}", b.join(" ")).unwrap();
        }
    }
    out
}
