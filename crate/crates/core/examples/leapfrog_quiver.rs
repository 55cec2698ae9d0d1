//! The exchange quiver of the standard leapfrog triangulation on [-6,7],
//! printed as arrows and as Graphviz DOT.

use infgon::{build_exchange_quiver, export_dot, TriangulationDesc};

fn main() -> infgon::Result<()> {
    let t = TriangulationDesc::leapfrog(0);
    let q = build_exchange_quiver(&t, -6, 7)?;
    for (u, v, m) in q.arrows() {
        println!("{u} -> {v}{}", if m > 1 { format!(" x{m}") } else { String::new() });
    }
    println!("\n{}", export_dot(&q));
    Ok(())
}
