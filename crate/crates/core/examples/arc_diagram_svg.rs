//! Writes an SVG arc diagram of a split fountain to stdout.

use infgon::{render_svg, TriangulationDesc};

fn main() -> infgon::Result<()> {
    print!("{}", render_svg(&TriangulationDesc::split(0, 4), -4, 8)?);
    Ok(())
}
