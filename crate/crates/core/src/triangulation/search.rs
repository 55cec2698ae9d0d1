//! Constructive mutation equivalence: an explicit flip sequence between two
//! descriptors over the same base.

use std::collections::BTreeSet;

use super::TriangulationDesc;
use crate::edge::Edge;
use crate::error::{Error, Result};

/// Vertex sets of the polygons cut out by the edges `t` shares with the
/// other descriptor. Arcs in `diff` are exactly the diagonals of these cells.
fn cells(t: &TriangulationDesc, diff: &BTreeSet<Edge>) -> Result<Vec<BTreeSet<i64>>> {
    let mine: Vec<Edge> = diff.iter().copied().filter(|e| t.contains(*e)).collect();
    let quads = mine.iter().map(|e| t.quadrilateral_of(*e).map(|q| q.vertices)).collect::<Result<Vec<_>>>()?;
    // Two diagonals share a triangle when three quadrilateral vertices agree.
    let shares_triangle = |a: &[i64; 4], b: &[i64; 4]| a.iter().filter(|v| b.contains(v)).count() >= 3;
    let mut seen = vec![false; mine.len()];
    let mut out = Vec::new();
    for start in 0..mine.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut verts = BTreeSet::new();
        while let Some(n) = stack.pop() {
            verts.extend(quads[n]);
            for m in 0..mine.len() {
                if !seen[m] && shares_triangle(&quads[n], &quads[m]) {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        out.push(verts);
    }
    Ok(out)
}

/// Flips `t` inside each cell until every cell is a fan at its smallest vertex.
fn normalize(t: &TriangulationDesc, diff: &BTreeSet<Edge>) -> Result<(TriangulationDesc, Vec<Edge>)> {
    let mut t = t.clone();
    let mut flips = Vec::new();
    for cell in cells(&t, diff)? {
        let w: Vec<i64> = cell.into_iter().collect();
        let apex = w[0];
        // A fan on k+1 vertices has k-2 diagonals; each flip adds one at the apex.
        for _ in 0..w.len() {
            let mut candidate = None;
            'scan: for (n, &x) in w.iter().enumerate().skip(1) {
                for &y in w.get(n + 2..).unwrap_or(&[]) {
                    let e = Edge::raw(x, y);
                    if !t.contains(e) {
                        continue;
                    }
                    let q = t.quadrilateral_of(e)?;
                    if q.vertices.contains(&apex) {
                        candidate = Some(e);
                        break 'scan;
                    }
                }
            }
            let Some(e) = candidate else { break };
            let (next, _) = t.flip(e)?;
            t = next;
            flips.push(e);
        }
    }
    Ok((t, flips))
}

/// A list of arcs which, flipped in order, turns `t1` into `t2`.
///
/// Both descriptors are brought to the fan triangulation of every polygon
/// bounded by their common edges; the answer is the first normalization
/// followed by the second one undone.
pub fn find_flip_sequence(t1: &TriangulationDesc, t2: &TriangulationDesc) -> Result<Vec<Edge>> {
    let diff = t1.symmetric_difference(t2)?;
    if diff.is_empty() {
        return Ok(Vec::new());
    }
    let (n1, mut seq) = normalize(t1, &diff)?;
    let (n2, seq2) = normalize(t2, &diff)?;
    if n1 != n2 {
        return Err(Error::InvalidDescriptor(
            "descriptors do not restrict to triangulations of the same polygons".into(),
        ));
    }
    // Undo the second normalization: replay it backwards, flipping each new arc.
    let mut created = Vec::with_capacity(seq2.len());
    let mut cur = t2.clone();
    for e in &seq2 {
        let (next, new_arc) = cur.flip(*e)?;
        cur = next;
        created.push(new_arc);
    }
    seq.extend(created.into_iter().rev());
    Ok(seq)
}
