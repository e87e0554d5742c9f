//! Combinatorics of taut and veering ideal triangulations.

pub mod carried;
pub mod data;
pub mod error;
pub mod invariants;
pub mod lp;
pub mod mutation;
pub mod perm;
pub mod symmetry;
pub mod trimesh;

pub use error::{Error, Result};
pub use perm::Perm4;
pub use trimesh::vrt::{load_triangulation, write_vrt};
pub use trimesh::{
    canonical_signature, pachner_connect, pachner_move, Color, ConnectOutcome, EdgeClass, Flavor,
    TautIdealTriangulation, VeeringOutcome,
};
