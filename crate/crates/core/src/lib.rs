//! Separating path systems for trees and random graphs.

pub mod canon;
pub mod edge_systems;
pub mod error;
pub mod fault;
pub mod oracle;
pub mod profile;
pub mod random_graphs;
pub mod separation;
pub mod tree;
pub mod vertex_systems;

pub use error::{Error, Result};
pub use profile::{contract_bare_paths, profile, Bunch, Contraction, TreeProfile};
pub use separation::{
    kisses, Covering, Element, Host, PathSystem, Separation, Signature, TargetKind, TargetSet,
};
pub use tree::{Edge, Tree, VertexPath};
pub use fault::{decode, signature_table, simulate_probes, Diagnosis, ProbeReport, SignatureTable};
pub use oracle::{min_separating, OracleOptions, OracleResult};
pub use random_graphs::{Graph, SetSystem};
