//! Branch equations, weight systems and the classification of the solution cone.

mod surface;

pub use surface::{
    assemble_surface, surface_topology, track_regions, CarriedSurface, ComponentTopology, Dart,
    SurfaceEdge, SurfaceTopology, SurfaceTriangle, TrackRegion,
};

use crate::error::{Error, Result};
use crate::lp::{feasible, rational, Feasibility};
use crate::trimesh::TautIdealTriangulation;
use num_rational::BigRational;
use std::fmt;

/// One row per edge class, one column per face: the left fan minus the right fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl BranchMatrix {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn apply(&self, w: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn in_kernel(&self, w: &[i64]) -> bool {
        self.apply(w).iter().all(|&x| x == 0)
    }
}

pub fn branch_matrix(tri: &TautIdealTriangulation) -> Result<BranchMatrix> {
    tri.require_taut()?;
    let f = tri.num_faces();
    let rows = tri
        .edges()
        .iter()
        .map(|class| {
            let mut row = vec![0i64; f];
            for s in &class.left {
                row[s.face] += 1;
            }
            for s in &class.right {
                row[s.face] -= 1;
            }
            row
        })
        .collect();
    Ok(BranchMatrix { rows })
}

/// A nonzero nonnegative integral solution of the branch equations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSystem {
    weights: Vec<u64>,
    edge_weights: Vec<u64>,
}

impl WeightSystem {
    pub fn new(tri: &TautIdealTriangulation, weights: Vec<u64>) -> Result<WeightSystem> {
        tri.require_taut()?;
        if weights.len() != tri.num_faces() {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} faces",
                weights.len(),
                tri.num_faces()
            )));
        }
        if weights.iter().all(|&w| w == 0) {
            return Err(Error::InvalidWeights("zero vector".into()));
        }
        let mut edge_weights = Vec::with_capacity(tri.num_edges());
        for (e, class) in tri.edges().iter().enumerate() {
            let l: u64 = class.left.iter().map(|s| weights[s.face]).sum();
            let r: u64 = class.right.iter().map(|s| weights[s.face]).sum();
            if l != r {
                return Err(Error::InvalidWeights(format!(
                    "branch equation of edge {e} fails: {l} != {r}"
                )));
            }
            edge_weights.push(l);
        }
        Ok(WeightSystem {
            weights,
            edge_weights,
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, face: usize) -> u64 {
        self.weights[face]
    }

    pub fn edge_weights(&self) -> &[u64] {
        &self.edge_weights
    }

    pub fn edge_weight(&self, edge: usize) -> u64 {
        self.edge_weights[edge]
    }

    /// Faces with positive weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&f| self.weights[f] > 0)
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.weights.iter().map(|&w| w as i64).collect()
    }
}

impl fmt::Display for WeightSystem {
    /// Renders as a sum such as `2f0 + f2 + f6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0)
            .map(|(i, &w)| {
                if w == 1 {
                    format!("f{i}")
                } else {
                    format!("{w}f{i}")
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// All weight systems with every face weight at most `cap`, sorted lexicographically.
pub fn enumerate_weight_systems(
    tri: &TautIdealTriangulation,
    cap: u64,
) -> Result<Vec<WeightSystem>> {
    let a = branch_matrix(tri)?;
    let nf = tri.num_faces();
    let ne = a.num_rows();
    if cap == 0 {
        return Ok(Vec::new());
    }

    // Order faces so that equations become fully assigned early.
    let mut order = Vec::with_capacity(nf);
    let mut placed = vec![false; nf];
    while order.len() < nf {
        let row = (0..ne)
            .filter(|&r| (0..nf).any(|c| a.rows[r][c] != 0 && !placed[c]))
            .min_by_key(|&r| (0..nf).filter(|&c| a.rows[r][c] != 0 && !placed[c]).count());
        match row {
            Some(r) => {
                for c in 0..nf {
                    if a.rows[r][c] != 0 && !placed[c] {
                        placed[c] = true;
                        order.push(c);
                    }
                }
            }
            None => {
                for c in 0..nf {
                    if !placed[c] {
                        placed[c] = true;
                        order.push(c);
                    }
                }
            }
        }
    }

    let cap_i = cap as i64;
    // Remaining positive and negative capacity of each row from depth d on.
    let mut pos = vec![vec![0i64; ne]; nf + 1];
    let mut neg = vec![vec![0i64; ne]; nf + 1];
    for d in (0..nf).rev() {
        for r in 0..ne {
            let c = a.rows[r][order[d]];
            pos[d][r] = pos[d + 1][r] + c.max(0) * cap_i;
            neg[d][r] = neg[d + 1][r] + (-c).max(0) * cap_i;
        }
    }

    let mut out = Vec::new();
    let mut w = vec![0u64; nf];
    let mut sums = vec![0i64; ne];
    fn dfs(
        d: usize,
        order: &[usize],
        a: &BranchMatrix,
        cap: u64,
        pos: &[Vec<i64>],
        neg: &[Vec<i64>],
        w: &mut Vec<u64>,
        sums: &mut Vec<i64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        let ne = sums.len();
        for r in 0..ne {
            if sums[r] < -pos[d][r] || sums[r] > neg[d][r] {
                return;
            }
        }
        if d == order.len() {
            if w.iter().any(|&x| x > 0) {
                out.push(w.clone());
            }
            return;
        }
        let c = order[d];
        for v in 0..=cap {
            w[c] = v;
            for r in 0..ne {
                sums[r] += a.rows[r][c] * v as i64;
            }
            dfs(d + 1, order, a, cap, pos, neg, w, sums, out);
            for r in 0..ne {
                sums[r] -= a.rows[r][c] * v as i64;
            }
        }
        w[c] = 0;
    }
    let mut raw = Vec::new();
    dfs(0, &order, &a, cap, &pos, &neg, &mut w, &mut sums, &mut raw);
    raw.sort();
    raw.dedup();
    for v in raw {
        out.push(WeightSystem::new(tri, v)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeClass {
    Layered,
    Measurable,
    Nonmeasurable,
}

impl fmt::Display for ConeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeClass::Layered => "layered",
            ConeClass::Measurable => "measurable",
            ConeClass::Nonmeasurable => "nonmeasurable",
        })
    }
}

/// The class together with the exact evidence behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub class: ConeClass,
    /// For layered: a solution `y` with `w = 1 + y` strictly positive. Otherwise the answer
    /// of the positivity problem (an infeasibility certificate).
    pub positive: Feasibility,
    /// Answer of the normalized nonnegativity problem `A w = 0, Σw = 1, w >= 0`, when asked.
    pub nonnegative: Option<Feasibility>,
}

/// The two exact problems behind the classification, as `(A, b)` pairs.
pub fn classification_problems(
    a: &BranchMatrix,
) -> (
    (Vec<Vec<BigRational>>, Vec<BigRational>),
    (Vec<Vec<BigRational>>, Vec<BigRational>),
) {
    let q: Vec<Vec<BigRational>> = a
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| rational(x)).collect())
        .collect();
    let b_pos: Vec<BigRational> = a
        .rows
        .iter()
        .map(|r| rational(-r.iter().sum::<i64>()))
        .collect();
    let mut q2 = q.clone();
    q2.push(vec![rational(1); a.num_cols()]);
    let mut b2 = vec![rational(0); a.num_rows()];
    b2.push(rational(1));
    ((q, b_pos), (q2, b2))
}

pub fn classify(tri: &TautIdealTriangulation) -> Result<Classification> {
    let a = branch_matrix(tri)?;
    let ((q, b_pos), (q2, b2)) = classification_problems(&a);
    let positive = feasible(&q, &b_pos);
    if matches!(positive, Feasibility::Feasible(_)) {
        return Ok(Classification {
            class: ConeClass::Layered,
            positive,
            nonnegative: None,
        });
    }
    let nonneg = feasible(&q2, &b2);
    let class = if matches!(nonneg, Feasibility::Feasible(_)) {
        ConeClass::Measurable
    } else {
        ConeClass::Nonmeasurable
    };
    Ok(Classification {
        class,
        positive,
        nonnegative: Some(nonneg),
    })
}

pub fn classify_solution_cone(tri: &TautIdealTriangulation) -> Result<ConeClass> {
    classify(tri).map(|c| c.class)
}

/// Weight systems with every face weight at most `cap` whose carried surface is connected.
pub fn enumerate_connected_weight_systems(
    tri: &TautIdealTriangulation,
    cap: u64,
) -> Result<Vec<WeightSystem>> {
    let mut out = Vec::new();
    for w in enumerate_weight_systems(tri, cap)? {
        if assemble_surface(tri, &w)?.components().len() == 1 {
            out.push(w);
        }
    }
    Ok(out)
}

/// Renders weight systems as `.wts` lines `w f0 f1 ...`.
pub fn write_wts(systems: &[WeightSystem]) -> String {
    let mut out = String::new();
    for w in systems {
        out.push('w');
        for x in &w.weights {
            out.push(' ');
            out.push_str(&x.to_string());
        }
        out.push('\n');
    }
    out
}

/// Parses every `w` line of a `.wts` document and validates it against `tri`.
pub fn parse_wts(tri: &TautIdealTriangulation, doc: &str) -> Result<Vec<WeightSystem>> {
    let mut out = Vec::new();
    for (i, raw) in doc.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        if words.next() != Some("w") {
            return Err(Error::Parse {
                line: i + 1,
                column: 1,
                message: "expected `w`".into(),
            });
        }
        let weights = words
            .map(|s| {
                s.parse::<u64>().map_err(|_| Error::Parse {
                    line: i + 1,
                    column: raw.find(s).map_or(1, |c| c + 1),
                    message: format!("bad weight `{s}`"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        out.push(WeightSystem::new(tri, weights)?);
    }
    Ok(out)
}
