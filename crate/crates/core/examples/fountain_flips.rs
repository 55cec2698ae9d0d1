//! Flip arcs of the standard fountain and print the diagram and the
//! exchange relation after each flip.

use infgon::{render_ascii, ClusterState, Edge, TriangulationDesc};

fn main() -> infgon::Result<()> {
    let mut s = ClusterState::new(TriangulationDesc::fountain(0));
    println!("{}\n{}", s.desc.classify(), render_ascii(&s.desc, -3, 5)?);
    for arc in [Edge::new(0, 2)?, Edge::new(0, 3)?, Edge::new(1, 3)?] {
        let (next, relation) = s.exchange_flip(arc)?;
        println!("flip {arc}: {relation}");
        s = next;
        println!("{}", render_ascii(&s.desc, -3, 5)?);
    }
    println!("history: {:?}", s.history.iter().map(|r| r.new_arc.to_string()).collect::<Vec<_>>());
    Ok(())
}
