//! Labels reachable by flips inside a window, against the generators of the
//! subalgebra for each class.

use infgon::{reachable_variable_closure, subalgebra_generators, ClusterState, TriangulationDesc};

fn main() -> infgon::Result<()> {
    for t in [TriangulationDesc::fountain(0), TriangulationDesc::leapfrog(0), TriangulationDesc::split(-1, 2)] {
        let class = t.classify();
        let labels = reachable_variable_closure(&ClusterState::new(t), usize::MAX, (-4, 4))?;
        let admitted = subalgebra_generators(class);
        let outside = labels.iter().filter(|p| !admitted.admits(**p)).count();
        println!("{class}: {} labels reached in [-4,4], {outside} outside the generators", labels.len());
    }
    Ok(())
}
