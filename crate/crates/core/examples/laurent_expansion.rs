//! Cluster variables after a few flips, as Laurent polynomials in the
//! initial cluster of a window.

use infgon::{laurent_expand, ClusterState, Edge, TriangulationDesc};

fn main() -> infgon::Result<()> {
    let s = ClusterState::new(TriangulationDesc::fountain(0));
    let e = |l, r| Edge::new(l, r);
    let cases = [
        (vec![e(0, 2)?], e(1, 3)?),
        (vec![e(0, 2)?, e(0, 3)?], e(1, 4)?),
        (vec![e(0, 2)?, e(1, 3)?], e(0, 2)?),
        (vec![e(0, 2)?, e(0, 3)?, e(1, 3)?], e(2, 4)?),
    ];
    for (flips, target) in cases {
        let x = laurent_expand(&s, &flips, target, (0, 6))?;
        let names: Vec<String> = flips.iter().map(ToString::to_string).collect();
        println!("after {}: x{target} = {x}  (Laurent: {})", names.join(" "), x.is_laurent());
    }
    Ok(())
}
