//! Homology of the dual spine, edge-orientability and classes of carried surfaces.
//!
//! The dual spine has one vertex per tetrahedron, one edge per face (running from the
//! tetrahedron of the face's frame slot to the other one) and one 2-cell per edge class,
//! attached along the cyclic walk around the edge.

mod orient;
pub mod snf;

pub use orient::{
    edge_orientable, orientation_constraints, satisfies, side_follows_reference, EdgeOrientability,
    OrientationConstraint,
};

use crate::carried::enumerate_weight_systems;
use crate::error::Result;
use crate::trimesh::TautIdealTriangulation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use snf::{smith_normal_form, Matrix};
use std::fmt;

/// `Z^rank + Z/d1 + Z/d2 + ...` with `d1 | d2 | ...` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupInvariant {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariant {
    pub fn new(rank: usize, torsion: &[u64]) -> Self {
        AbelianGroupInvariant {
            rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }
}

impl fmt::Display for AbelianGroupInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Boundary matrices `(d2, d1)`: `d2` is faces by edges, `d1` is tetrahedra by faces.
pub fn chain_complex(tri: &TautIdealTriangulation) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let nf = tri.num_faces();
    let nt = tri.num_tets();
    let ne = tri.num_edges();
    let mut d1 = vec![vec![0i64; nf]; nt];
    for f in 0..nf {
        let (tail, _) = tri.frame_slot(f);
        let (head, _) = tri.other_slot(f);
        d1[head][f] += 1;
        d1[tail][f] -= 1;
    }
    let mut d2 = vec![vec![0i64; ne]; nf];
    for (e, class) in tri.edges().iter().enumerate() {
        for m in &class.embeddings {
            let f = tri.face_of(m.tet, m.exit);
            let sign = if tri.frame_slot(f) == (m.tet, m.exit) {
                1
            } else {
                -1
            };
            d2[f][e] += sign;
        }
    }
    (d2, d1)
}

/// Homology of the dual spine together with cycles spanning its free part.
#[derive(Clone, Debug)]
pub struct Homology {
    pub h1: AbelianGroupInvariant,
    /// Face-indexed integer cycles whose classes form a basis of `H1` modulo torsion.
    pub free_cycles: Vec<Vec<BigInt>>,
}

pub fn homology(tri: &TautIdealTriangulation) -> Homology {
    let (d2, d1) = chain_complex(tri);
    let nf = tri.num_faces();
    let nt = tri.num_tets();
    let ne = tri.num_edges();
    let s1 = smith_normal_form(&snf::from_i64(&d1), nt, nf);
    let r1 = s1.rank();
    let k = nf - r1;
    // Boundaries in the coordinates of the kernel basis given by the last columns of V.
    let d2b = snf::from_i64(&d2);
    let moved = snf::mul(&s1.v_inv, &d2b, nf, ne);
    let m: Matrix = moved[r1..].to_vec();
    let (torsion, free_cycles) = if k == 0 {
        (Vec::new(), Vec::new())
    } else {
        let s2 = smith_normal_form(&m, k, ne);
        let r2 = s2.rank();
        let torsion: Vec<BigInt> = s2.diagonal[..r2]
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect();
        let cycles = (r2..k)
            .map(|j| {
                (0..nf)
                    .map(|f| {
                        let mut s = BigInt::zero();
                        for (i, row) in s2.u_inv.iter().enumerate() {
                            if !row[j].is_zero() {
                                s += &s1.v[f][r1 + i] * &row[j];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        (torsion, cycles)
    };
    Homology {
        h1: AbelianGroupInvariant {
            rank: free_cycles.len(),
            torsion,
        },
        free_cycles,
    }
}

pub fn homology_h1(tri: &TautIdealTriangulation) -> AbelianGroupInvariant {
    homology(tri).h1
}

/// Coordinates of a face cocycle in the basis of `H^1` dual to the free cycles of
/// [`homology`]. `H^1` of the spine is torsion-free, so these coordinates determine the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CarriedClass {
    pub coords: Vec<BigInt>,
}

impl CarriedClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scaled(&self, k: i64) -> CarriedClass {
        CarriedClass {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn content(&self) -> BigInt {
        self.coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// The primitive class on the same ray; zero stays zero.
    pub fn primitive(&self) -> CarriedClass {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        CarriedClass {
            coords: self.coords.iter().map(|c| c / &g).collect(),
        }
    }
}

impl std::ops::Add for &CarriedClass {
    type Output = CarriedClass;
    fn add(self, rhs: &CarriedClass) -> CarriedClass {
        CarriedClass {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for CarriedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Class of any integer face vector satisfying the branch equations.
pub fn carried_class_of(h: &Homology, w: &[i64]) -> CarriedClass {
    CarriedClass {
        coords: h
            .free_cycles
            .iter()
            .map(|z| {
                z.iter()
                    .zip(w)
                    .fold(BigInt::zero(), |acc, (a, &b)| acc + a * b)
            })
            .collect(),
    }
}

pub fn carried_class(tri: &TautIdealTriangulation, w: &[i64]) -> CarriedClass {
    carried_class_of(&homology(tri), w)
}

/// Coboundary of the tetrahedron `t`: in-faces minus out-faces.
pub fn tet_coboundary(tri: &TautIdealTriangulation, t: usize) -> Vec<i64> {
    let (_, d1) = chain_complex(tri);
    d1[t].clone()
}

/// Whether `v` is an integer combination of tetrahedron coboundaries.
pub fn is_coboundary(tri: &TautIdealTriangulation, v: &[i64]) -> bool {
    let (_, d1) = chain_complex(tri);
    let nf = tri.num_faces();
    let nt = tri.num_tets();
    // Solve d1^T x = v.
    let dt: Vec<Vec<i64>> = (0..nf)
        .map(|f| (0..nt).map(|t| d1[t][f]).collect())
        .collect();
    let s = smith_normal_form(&snf::from_i64(&dt), nf, nt);
    let vb: Matrix = v.iter().map(|&x| vec![BigInt::from(x)]).collect();
    let uv = snf::mul(&s.u, &vb, nf, 1);
    (0..nf).all(|i| {
        let d = s.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            uv[i][0].is_zero()
        } else {
            uv[i][0].is_multiple_of(&d)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRays {
    /// Primitive classes, one per ray, sorted.
    pub rays: Vec<CarriedClass>,
    pub single_ray: bool,
}

pub fn carried_cone_rays(tri: &TautIdealTriangulation, cap: u64) -> Result<ConeRays> {
    let h = homology(tri);
    let mut rays: Vec<CarriedClass> = enumerate_weight_systems(tri, cap)?
        .iter()
        .map(|w| carried_class_of(&h, &w.as_i64()).primitive())
        .filter(|c| !c.is_zero())
        .collect();
    rays.sort();
    rays.dedup();
    let single_ray = rays.len() == 1;
    Ok(ConeRays { rays, single_ray })
}

pub fn boundary_composition_vanishes(tri: &TautIdealTriangulation) -> bool {
    let (d2, d1) = chain_complex(tri);
    let nf = tri.num_faces();
    d1.iter().all(|row| {
        (0..tri.num_edges()).all(|e| (0..nf).map(|f| row[f] * d2[f][e]).sum::<i64>() == 0)
    })
}
