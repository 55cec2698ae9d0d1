//! Component counts of the three families, and which arcs share a
//! component.

use infgon::{build_exchange_quiver, component_count, same_component, Edge, TriangulationDesc};

fn main() -> infgon::Result<()> {
    for t in [TriangulationDesc::leapfrog(0), TriangulationDesc::fountain(0), TriangulationDesc::split(0, 4)] {
        let c = component_count(&t);
        let window = build_exchange_quiver(&t, -6, 8)?.connected_components().len();
        println!("{:<22} components {} (window [-6,8] shows {window})", t.classify().to_string(), c.count);
    }
    let f = TriangulationDesc::fountain(0);
    for (x, y) in [((0, 2), (0, 5)), ((-2, 0), (0, 2))] {
        let (x, y) = (Edge::try_from(x)?, Edge::try_from(y)?);
        println!("fountain: {x} and {y} same component: {}", same_component(&f, x, y)?);
    }
    Ok(())
}
