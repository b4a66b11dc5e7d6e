//! LP-orientations and Holt-Klee orientations of cubes and crosspolytopes.
//!
//! Decides the Holt-Klee conditions, builds the doubly-exponential family of
//! Holt-Klee cube orientations, classifies crosspolytope orientations through
//! their pair sequences, realizes every good sequence with exact rationals,
//! decides cube shellings, and evaluates the counting bounds.

pub mod bounds;
pub mod census;
pub mod error;
pub mod exact;
pub mod face;
pub mod family;
pub mod flow;
pub mod holt_klee;
pub mod orientation;
pub mod pairseq;
pub mod par;
pub mod polytope;
pub mod realize;
pub mod shelling;
pub mod util;

pub use num_bigint::BigUint;

pub use bounds::{crossover, cube_lp_bound_log2, general_lp_bound_log2, BoundConstant, BoundReport};
pub use census::{census, count_lp_orientations_bruteforce, CensusReport};
pub use error::{Error, Result};
pub use face::{enumerate_faces, CrossFace, CubeFace, Face};
pub use family::{build_family_orientation, family_size_log2, free_edges, sweep_family, FamilyAssignment};
pub use holt_klee::{disjoint_monotone_paths, is_acyclic, is_holt_klee, is_holt_klee_with, HkOptions, HkVerdict, Violation};
pub use orientation::{topological_order, Digraph, Orientation, TopoOrder};
pub use pairseq::{count_good, encode, eliminate, initial_pair_set, is_good, is_lp_orientation, PairSequence};
pub use par::Exec;
pub use polytope::{CrossVertex, CubeVertex, DimensionCaps, Polytope, Sign};
pub use realize::{extend_realization, induced_sequence, realize, verify_crosspolytope, Realization};
pub use shelling::{is_shelling, is_shelling_direct_3cube, line_shelling_witness, ordering_to_sequence, FacetOrdering};
