//! Flipping (0,2), (0,3), ... in the standard fountain pushes arcs (1,k+1)
//! out to infinity. Every finite stage is a triangulation.

use infgon::{Edge, TriangulationDesc};

fn main() -> infgon::Result<()> {
    let mut t = TriangulationDesc::fountain(0);
    for k in 2..=8 {
        let (next, new_arc) = t.flip(Edge::new(0, k)?)?;
        t = next;
        let arcs: Vec<String> = t.arcs_in_window(0, k + 3)?.iter().map(ToString::to_string).collect();
        println!(
            "k={k}: new {new_arc}, valid {}, arcs in [0,{}]: {}",
            t.validate_window(-4, k + 4)?,
            k + 3,
            arcs.join(" ")
        );
    }
    Ok(())
}
