//! Exact computations with cluster structures of infinite rank on the ∞-gon.

pub mod edge;
pub mod error;
pub mod plucker;
pub mod poly;
pub mod quantum;
pub mod quiver;
pub mod render;
pub mod sample;
pub mod triangulation;
pub mod verify;
pub mod window;

pub use edge::{crosses, pass_side, passes_over, Edge, PassSide};
pub use error::{Error, Result};
pub use plucker::{
    exchange_flip, laurent_expand, plucker_expand, reachable_variable_closure, subalgebra_generators,
    verify_short_plucker, ClusterState, ExchangeRelation, MatrixPoly, PluckerLabel,
};
pub use poly::{Poly, RationalExpr};
pub use quantum::{l_entry, qplucker, quantum_mutate, LaurentHalfQ, QElement, QuantumMutation, QuantumRelation};
pub use quiver::{
    b_entry, build_exchange_quiver, component_count, export_dot, flip_commutes_with_mutation, interior_complete,
    same_component, ComponentCount, IceQuiver,
};
pub use render::{render_ascii, render_svg};
pub use triangulation::{
    find_flip_sequence, BaseFamily, FountainSide, Quadrilateral, TriangulationClass, TriangulationDesc,
};
pub use verify::{run_suite, Report, Suite, VerifyOptions};
