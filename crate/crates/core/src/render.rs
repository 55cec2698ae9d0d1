//! Arc diagrams of a window: arcs drawn over an integer ruler.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::edge::{passes_over, Edge};
use crate::error::Result;
use crate::triangulation::{TriangulationClass, TriangulationDesc};

const CELL: usize = 4;
const SVG_STEP: i64 = 40;
const SVG_MARGIN: i64 = 40;

/// Height of each arc above the ruler: one more than the tallest arc under it.
fn levels(arcs: &[Edge]) -> BTreeMap<Edge, usize> {
    let mut sorted = arcs.to_vec();
    sorted.sort_by_key(|e| (e.right() - e.left(), *e));
    let mut out = BTreeMap::new();
    for &e in &sorted {
        let inner =
            sorted.iter().filter(|f| passes_over(e, **f)).filter_map(|f| out.get(f)).max().copied().unwrap_or(0);
        out.insert(e, inner + 1);
    }
    out
}

fn marked_vertices(t: &TriangulationDesc) -> Vec<i64> {
    match t.classify() {
        TriangulationClass::LocallyFinite => vec![],
        TriangulationClass::FountainAt(k) => vec![k],
        TriangulationClass::SplitFountainAt(l, r) => vec![l, r],
    }
}

/// Text rendering: one row per arc height, `=` for the frozen bridge, and a
/// ruler of sides with `*` under fountain vertices.
pub fn render_ascii(t: &TriangulationDesc, a: i64, b: i64) -> Result<String> {
    let arcs: Vec<Edge> = t.arcs_in_window(a, b)?.into_iter().collect();
    let lv = levels(&arcs);
    let top = lv.values().max().copied().unwrap_or(0);
    let width = (b - a) as usize * CELL + 1;
    let col = |v: i64| (v - a) as usize * CELL;
    let mut rows: Vec<Vec<u8>> = vec![vec![b' '; width]; top];
    for (e, &h) in &lv {
        let fill = if t.is_frozen(*e) { b'=' } else { b'-' };
        let row = &mut rows[top - h];
        row[col(e.left())..=col(e.right())].fill(fill);
        row[col(e.left())] = b'+';
        row[col(e.right())] = b'+';
        for lower in rows.iter_mut().skip(top - h + 1) {
            for c in [col(e.left()), col(e.right())] {
                if lower[c] == b' ' {
                    lower[c] = b'|';
                }
            }
        }
    }
    let mut out = String::new();
    for row in rows {
        out.push_str(String::from_utf8_lossy(&row).trim_end());
        out.push('\n');
    }
    let mut ruler = vec![b'-'; width];
    let mut labels = vec![b' '; width + 8];
    let mut marks = vec![b' '; width];
    for v in a..=b {
        ruler[col(v)] = b'o';
        let s = v.to_string();
        labels[col(v)..col(v) + s.len()].copy_from_slice(s.as_bytes());
    }
    for v in marked_vertices(t).into_iter().filter(|v| (a..=b).contains(v)) {
        marks[col(v)] = b'*';
    }
    for line in [ruler, labels, marks] {
        let s = String::from_utf8_lossy(&line).trim_end().to_string();
        if !s.is_empty() {
            out.push_str(&s);
            out.push('\n');
        }
    }
    Ok(out)
}

/// SVG rendering with arcs as semicircles above the ruler. Arcs carry
/// `class="arc"` (or `"arc frozen"`) and `data-arc="i,j"`.
pub fn render_svg(t: &TriangulationDesc, a: i64, b: i64) -> Result<String> {
    let arcs = t.arcs_in_window(a, b)?;
    let x = |v: i64| SVG_MARGIN + (v - a) * SVG_STEP;
    let tallest = arcs.iter().map(|e| e.right() - e.left()).max().unwrap_or(1);
    let base = SVG_MARGIN + tallest * SVG_STEP / 2;
    let (w, h) = (x(b) + SVG_MARGIN, base + SVG_MARGIN);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    s.push_str("<style>.arc{fill:none;stroke:#222;stroke-width:1.5}.frozen{stroke:#b00;stroke-dasharray:5 3}.ruler{stroke:#888}text{font:11px sans-serif;text-anchor:middle}</style>\n");
    let _ = writeln!(s, r#"<line class="ruler" x1="{}" y1="{base}" x2="{}" y2="{base}"/>"#, x(a), x(b));
    for e in &arcs {
        let r = (e.right() - e.left()) * SVG_STEP / 2;
        let class = if t.is_frozen(*e) { "arc frozen" } else { "arc" };
        let _ = writeln!(
            s,
            r#"<path class="{class}" data-arc="{},{}" d="M {} {base} A {r} {r} 0 0 1 {} {base}"/>"#,
            e.left(),
            e.right(),
            x(e.left()),
            x(e.right())
        );
    }
    let marked = marked_vertices(t);
    for v in a..=b {
        let fill = if marked.contains(&v) { "#b00" } else { "#222" };
        let _ = writeln!(s, r#"<circle cx="{}" cy="{base}" r="3" fill="{fill}"/>"#, x(v));
        let _ = writeln!(s, r#"<text x="{}" y="{}">{v}</text>"#, x(v), base + 18);
    }
    s.push_str("</svg>\n");
    Ok(s)
}
