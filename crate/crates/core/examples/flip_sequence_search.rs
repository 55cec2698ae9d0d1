//! Finds a flip sequence between two mutation-equivalent descriptors and
//! checks it by applying it.

use infgon::{find_flip_sequence, Edge, TriangulationDesc};

fn main() -> infgon::Result<()> {
    let t1 = TriangulationDesc::fountain(0);
    let (t2, _) = t1.flip_all(&[Edge::new(0, 2)?, Edge::new(0, 3)?, Edge::new(-3, 0)?])?;
    let seq = find_flip_sequence(&t1, &t2)?;
    println!("sequence: {}", seq.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    let (reached, _) = t1.flip_all(&seq)?;
    println!("reaches target: {}", reached == t2);
    println!("fountain(0) ~ fountain(1): {}", t1.mutation_equivalent(&TriangulationDesc::fountain(1)));
    println!("{}", find_flip_sequence(&t1, &TriangulationDesc::leapfrog(0)).unwrap_err());
    Ok(())
}
