//! Quantum mutation of (0,2) in the standard fountain, with its certificate
//! and its specialization at q = 1.

use infgon::{quantum_mutate, ClusterState, Edge, TriangulationDesc};

fn main() -> infgon::Result<()> {
    let t = TriangulationDesc::fountain(0);
    let arc = Edge::new(0, 2)?;
    let m = quantum_mutate(&t, arc)?;
    println!("new variable: {}", m.new_label);
    println!("relation: {}", m.relation);
    println!("μ(Δ)·Δ = {}", m.certificate.mutated_times_old);
    println!("certificate holds: {}", m.certificate.verifies());
    let (_, classical) = ClusterState::new(t).exchange_flip(arc)?;
    println!("at q = 1: {classical}");
    println!("bridge: {}", quantum_mutate(&TriangulationDesc::split(0, 3), Edge::new(0, 3)?).unwrap_err());
    Ok(())
}
