//! Planar electrostatics: meshing, method-of-moments solution, interface
//! field extraction and the local 2D metal-edge problem.

pub mod edge2d;
pub mod fields;
pub mod kernel;
pub mod mesh;
pub mod mom;
pub mod wire_mesh;

pub use edge2d::{solve_edge_problem, EdgeProblemConfig, EdgeProblemSolution};
pub use kernel::Panel;
pub use mesh::{mesh_conductors, mesh_region, PanelMesh, RegionMeshSpec};
pub use mom::{CapacitanceMatrix, ChargeSolution, HalfSpaceDielectric, MomSystem};
pub use wire_mesh::{mesh_lead, WireMeshSpec};
