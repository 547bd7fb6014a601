//! Algorithms on k-trees and minimally k-edge-connected graphs.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! front end and benchmarking live in the `ktree-tools` crate.
//!
//! * [`graph`]: simple undirected graphs with dense vertex ids.
//! * [`ktree`]: building k-trees from construction traces, recognizing them,
//!   and counting their cliques.
//! * [`connectivity`]: edge connectivity with cut certificates, insensitive
//!   edges and the minimality check.
//! * [`reduction`]: reducing a 2-tree by triangle multiplicity and a k-tree
//!   by endpoint degrees.
//! * [`generators`]: seeded random k-trees and the book and path 2-tree
//!   families.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod connectivity;
pub mod generators;
pub mod graph;
pub mod ktree;
pub mod reduction;

pub use connectivity::{
    brute_force_edge_connectivity, edge_connectivity, is_insensitive, is_k_edge_connected,
    is_minimally_k_edge_connected, local_edge_connectivity, ConnectivityVerdict, CutCertificate,
    KEdgeConnectivity, Minimality,
};
pub use generators::{
    book_two_tree, generate, path_two_tree, random_ktree, Family, GenError, GenSpec,
};
pub use graph::{Edge, Graph, GraphError};
pub use ktree::{
    build_ktree, edge_clique_index, enumerate_cliques, recognize_ktree, simplicial_vertices,
    EdgeCliqueIndex, KTreeTrace, RecognitionFailure, TraceError,
};
pub use reduction::{
    check_f_bounds, reduce_k_tree, reduce_two_tree, Algorithm, Deviation, Mode, ReductionError,
    ReductionReport, SkipReason,
};
