//! Exchange quivers of triangulations, restricted to finite windows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::edge::{Edge, PassSide};
use crate::error::{Error, Result};
use crate::triangulation::{TriangulationClass, TriangulationDesc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub label: Edge,
    pub frozen: bool,
}

/// A finite ice quiver stored as a skew-symmetric matrix:
/// `b[u][v]` is the number of arrows `u -> v` minus the number `v -> u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawQuiver")]
pub struct IceQuiver {
    vertices: Vec<QuiverVertex>,
    b: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: Vec<QuiverVertex>,
    b: Vec<Vec<i64>>,
}

impl TryFrom<RawQuiver> for IceQuiver {
    type Error = Error;

    fn try_from(raw: RawQuiver) -> Result<Self> {
        IceQuiver::from_matrix(raw.vertices, raw.b)
    }
}

impl IceQuiver {
    pub fn from_matrix(vertices: Vec<QuiverVertex>, b: Vec<Vec<i64>>) -> Result<Self> {
        let n = vertices.len();
        let bad = |msg: &str| Err(Error::InvalidDescriptor(format!("quiver matrix: {msg}")));
        if b.len() != n || b.iter().any(|row| row.len() != n) {
            return bad("matrix is not square with one row per vertex");
        }
        let labels: BTreeSet<Edge> = vertices.iter().map(|v| v.label).collect();
        if labels.len() != n {
            return bad("duplicate vertex labels");
        }
        for u in 0..n {
            for v in 0..n {
                if b[u][v] != -b[v][u] {
                    return bad("matrix is not skew-symmetric");
                }
                if vertices[u].frozen && vertices[v].frozen && b[u][v] != 0 {
                    return bad("arrow between frozen vertices");
                }
            }
        }
        Ok(IceQuiver { vertices, b })
    }

    /// A quiver with the given vertices and no arrows.
    pub fn empty(vertices: Vec<QuiverVertex>) -> Self {
        let n = vertices.len();
        IceQuiver { vertices, b: vec![vec![0; n]; n] }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[QuiverVertex] {
        &self.vertices
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn index_of(&self, label: Edge) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    /// `b[u][v]` by label; `None` if either label is not a vertex.
    pub fn entry(&self, u: Edge, v: Edge) -> Option<i64> {
        Some(self.b[self.index_of(u)?][self.index_of(v)?])
    }

    /// Adds `count` arrows `u -> v`, dropping them if both ends are frozen.
    pub fn add_arrows(&mut self, u: usize, v: usize, count: i64) {
        if self.vertices[u].frozen && self.vertices[v].frozen {
            return;
        }
        self.b[u][v] += count;
        self.b[v][u] -= count;
    }

    /// Every arrow as `(tail, head, multiplicity)`.
    pub fn arrows(&self) -> Vec<(Edge, Edge, i64)> {
        let mut out = Vec::new();
        for (u, row) in self.b.iter().enumerate() {
            for (v, &m) in row.iter().enumerate() {
                if m > 0 {
                    out.push((self.vertices[u].label, self.vertices[v].label, m));
                }
            }
        }
        out.sort();
        out
    }

    /// Fomin–Zelevinsky mutation at a mutable vertex.
    pub fn mutate(&self, k: usize) -> Result<IceQuiver> {
        let n = self.len();
        if k >= n {
            return Err(Error::NoSuchVertex(k));
        }
        if self.vertices[k].frozen {
            return Err(Error::FrozenVertex(k));
        }
        let b = &self.b;
        let mut out = self.b.clone();
        for i in 0..n {
            for j in 0..n {
                out[i][j] =
                    if i == k || j == k { -b[i][j] } else { b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0) };
                if self.vertices[i].frozen && self.vertices[j].frozen {
                    out[i][j] = 0;
                }
            }
        }
        Ok(IceQuiver { vertices: self.vertices.clone(), b: out })
    }

    /// Mutation addressed by vertex label.
    pub fn mutate_at(&self, label: Edge) -> Result<IceQuiver> {
        let k = self.index_of(label).ok_or(Error::NotInTriangulation(label))?;
        self.mutate(k)
    }

    pub fn relabel(&mut self, from: Edge, to: Edge) -> Result<()> {
        let k = self.index_of(from).ok_or(Error::NotInTriangulation(from))?;
        self.vertices[k].label = to;
        Ok(())
    }

    /// Whether the two quivers have the same arrows among the given labels.
    pub fn agrees_on(&self, other: &IceQuiver, labels: &BTreeSet<Edge>) -> bool {
        labels.iter().all(|&u| {
            labels.iter().all(|&v| match (self.entry(u, v), other.entry(u, v)) {
                (Some(x), Some(y)) => x == y,
                _ => false,
            })
        })
    }

    /// Connected components of the underlying undirected graph, ignoring
    /// vertices without arrows.
    pub fn connected_components(&self) -> Vec<BTreeSet<Edge>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.b[s].iter().all(|&m| m == 0) {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = BTreeSet::new();
            while let Some(u) = stack.pop() {
                comp.insert(self.vertices[u].label);
                for (v, &m) in self.b[u].iter().enumerate() {
                    if !seen[v] && m != 0 {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Graphviz rendering; frozen vertices are boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in &self.vertices {
            if v.frozen {
                let _ = writeln!(out, "  \"{}\" [shape=box];", v.label);
            } else {
                let _ = writeln!(out, "  \"{}\";", v.label);
            }
        }
        for (u, v, m) in self.arrows() {
            for _ in 0..m {
                let _ = writeln!(out, "  \"{u}\" -> \"{v}\";");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("quiver serializes")
    }
}

pub fn export_dot(q: &IceQuiver) -> String {
    q.to_dot()
}

/// The exchange quiver of `t` on the sides and realized arcs inside `[a,b]`.
///
/// Each triangle `i < j < k` contributes `(i,j) -> (i,k) -> (j,k) -> (i,j)`;
/// arrows between frozen vertices are dropped.
pub fn build_exchange_quiver(t: &TriangulationDesc, a: i64, b: i64) -> Result<IceQuiver> {
    let edges = t.edges_in_window(a, b)?;
    let vertices: Vec<QuiverVertex> =
        edges.iter().map(|&e| QuiverVertex { label: e, frozen: t.is_frozen(e) }).collect();
    let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(n, e)| (*e, n)).collect();
    let mut q = IceQuiver::empty(vertices);
    // Every triangle inside the window is the lower triangle of its longest edge.
    for &e in edges.iter().filter(|e| e.is_arc()) {
        let (i, k) = (e.left(), e.right());
        let j = t.lower_vertex(e)?;
        let ij = index[&Edge::raw(i, j)];
        let ik = index[&e];
        let jk = index[&Edge::raw(j, k)];
        q.add_arrows(ij, ik, 1);
        q.add_arrows(ik, jk, 1);
        q.add_arrows(jk, ij, 1);
    }
    Ok(q)
}

/// The entry `B[mn][ij]` of the exchange matrix, computed from minimal arcs.
///
/// Writing `c` for the minimal arc over `ij`: `c` gets `-1` and the third
/// side of their triangle `+1` when `c` passes on the right, and the signs
/// flip when it passes on the left. Each edge whose minimal arc is `ij` gets
/// `+1` if `ij` passes over it on the right and `-1` on the left.
pub fn b_entry(t: &TriangulationDesc, mn: Edge, ij: Edge) -> Result<i64> {
    if ij.is_side() {
        return Err(Error::SideNotFlippable(ij));
    }
    if !t.contains(ij) {
        return Err(Error::NotInTriangulation(ij));
    }
    if t.bridge() == Some(ij) {
        return Err(Error::FrozenArc(ij));
    }
    if !t.contains(mn) {
        return Err(Error::NotInTriangulation(mn));
    }
    let (cover, side) = t.minimal_arc_over(ij)?;
    let (sibling, sign) = match side {
        PassSide::Right => (Edge::raw(ij.right(), cover.right()), 1),
        PassSide::Left => (Edge::raw(cover.left(), ij.left()), -1),
    };
    if mn == cover {
        return Ok(-sign);
    }
    if mn == sibling {
        return Ok(sign);
    }
    if ij.passes_over(&mn) {
        if let Ok((c, s)) = t.minimal_arc_over(mn) {
            if c == ij {
                return Ok(match s {
                    PassSide::Right => 1,
                    PassSide::Left => -1,
                });
            }
        }
    }
    Ok(0)
}

/// Edges of the window all of whose triangles lie inside it, so their rows
/// and columns in the window quiver agree with the infinite quiver.
pub fn interior_complete(t: &TriangulationDesc, a: i64, b: i64) -> Result<BTreeSet<Edge>> {
    let mut out = BTreeSet::new();
    for e in t.edges_in_window(a, b)? {
        let complete = if t.is_frozen(e) {
            match t.minimal_arc_over(e) {
                Ok((c, _)) => c.within(a, b),
                Err(Error::NoCover(_)) => true,
                Err(err) => return Err(err),
            }
        } else {
            t.quadrilateral_of(e)?.within(a, b)
        };
        if complete {
            out.insert(e);
        }
    }
    Ok(out)
}

/// Whether mutating the window quiver of `t` at `e` gives the window quiver
/// of the flipped triangulation, compared on vertices that are interior
/// complete before and after. Returns `None` if the quadrilateral of `e` is
/// not inside the window.
pub fn flip_commutes_with_mutation(t: &TriangulationDesc, e: Edge, a: i64, b: i64) -> Result<Option<bool>> {
    if !t.quadrilateral_of(e)?.within(a, b) {
        return Ok(None);
    }
    let (flipped, new_arc) = t.flip(e)?;
    let mut mutated = build_exchange_quiver(t, a, b)?.mutate_at(e)?;
    mutated.relabel(e, new_arc)?;
    let after = build_exchange_quiver(&flipped, a, b)?;
    let before: BTreeSet<Edge> =
        interior_complete(t, a, b)?.into_iter().map(|x| if x == e { new_arc } else { x }).collect();
    let labels: BTreeSet<Edge> = before.intersection(&interior_complete(&flipped, a, b)?).copied().collect();
    Ok(Some(labels.contains(&new_arc) && mutated.agrees_on(&after, &labels)))
}

/// Number of connected components of the infinite exchange quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCount {
    pub count: usize,
    /// Split fountains only: the component in the gap has no mutable vertex
    /// (the gap polygon is a triangle or a side).
    pub finite_component_empty: bool,
}

impl ComponentCount {
    /// Components that contain a mutable vertex.
    pub fn nonempty(&self) -> usize {
        self.count - usize::from(self.finite_component_empty)
    }
}

pub fn component_count(t: &TriangulationDesc) -> ComponentCount {
    match t.classify() {
        TriangulationClass::LocallyFinite => ComponentCount { count: 1, finite_component_empty: false },
        TriangulationClass::FountainAt(_) => ComponentCount { count: 2, finite_component_empty: false },
        TriangulationClass::SplitFountainAt(l, r) => ComponentCount { count: 3, finite_component_empty: r - l < 3 },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Region {
    Everywhere,
    Left,
    Right,
    Gap,
}

fn region(t: &TriangulationDesc, e: Edge) -> Region {
    match t.classify() {
        TriangulationClass::LocallyFinite => Region::Everywhere,
        TriangulationClass::FountainAt(k) => {
            if e.right() <= k {
                Region::Left
            } else {
                Region::Right
            }
        }
        TriangulationClass::SplitFountainAt(l, r) => {
            if e.right() <= l {
                Region::Left
            } else if e.left() >= r {
                Region::Right
            } else {
                Region::Gap
            }
        }
    }
}

/// Whether two realized edges lie in the same component of the exchange quiver.
///
/// Nothing realized crosses a fountain vertex, so components are the regions
/// to either side of the fountains (and the gap of a split fountain).
pub fn same_component(t: &TriangulationDesc, e1: Edge, e2: Edge) -> Result<bool> {
    for e in [e1, e2] {
        if !t.contains(e) {
            return Err(Error::NotInTriangulation(e));
        }
    }
    if e1 == e2 {
        return Ok(true);
    }
    let (r1, r2) = (region(t, e1), region(t, e2));
    if r1 == Region::Gap && component_count(t).finite_component_empty {
        // Only frozen edges there, and no arrows between them.
        return Ok(false);
    }
    Ok(r1 == r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_case, SampleConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(l: i64, r: i64) -> Edge {
        Edge::new(l, r).unwrap()
    }

    fn cycle() -> IceQuiver {
        let vertices =
            [(0, 2), (0, 3), (0, 4)].iter().map(|&(l, r)| QuiverVertex { label: e(l, r), frozen: false }).collect();
        let mut q = IceQuiver::empty(vertices);
        q.add_arrows(0, 1, 1);
        q.add_arrows(1, 2, 1);
        q.add_arrows(2, 0, 1);
        q
    }

    #[test]
    fn three_cycle_mutation() {
        let m = cycle().mutate(1).unwrap();
        assert_eq!(m.arrows(), vec![(e(0, 3), e(0, 2), 1), (e(0, 4), e(0, 3), 1)]);
        assert_eq!(m.mutate(1).unwrap(), cycle());
    }

    #[test]
    fn frozen_and_missing_vertices() {
        let q = build_exchange_quiver(&TriangulationDesc::fountain(0), 0, 2).unwrap();
        let side = q.index_of(e(0, 1)).unwrap();
        assert_eq!(q.mutate(side), Err(Error::FrozenVertex(side)));
        assert_eq!(q.mutate(17), Err(Error::NoSuchVertex(17)));
    }

    #[test]
    fn single_triangle() {
        let q = build_exchange_quiver(&TriangulationDesc::fountain(0), 0, 2).unwrap();
        assert_eq!(q.arrows(), vec![(e(0, 1), e(0, 2), 1), (e(0, 2), e(1, 2), 1)]);
    }

    #[test]
    fn closed_form_examples() {
        let f = TriangulationDesc::fountain(0);
        assert_eq!(b_entry(&f, e(0, 3), e(0, 2)), Ok(-1));
        assert_eq!(b_entry(&f, e(1, 2), e(0, 2)), Ok(-1));
        assert_eq!(b_entry(&f, e(0, 1), e(0, 2)), Ok(1));
        assert_eq!(b_entry(&f, e(2, 3), e(0, 2)), Ok(1));
        assert_eq!(b_entry(&f, e(0, 5), e(0, 2)), Ok(0));
        let s = TriangulationDesc::split(0, 3);
        assert_eq!(b_entry(&s, e(0, 2), e(0, 3)), Err(Error::FrozenArc(e(0, 3))));
        assert_eq!(b_entry(&f, e(0, 2), e(1, 3)), Err(Error::NotInTriangulation(e(1, 3))));
    }

    #[test]
    fn component_counts() {
        assert_eq!(component_count(&TriangulationDesc::leapfrog(0)).count, 1);
        assert_eq!(component_count(&TriangulationDesc::fountain(0)).count, 2);
        let s = component_count(&TriangulationDesc::split(0, 4));
        assert_eq!((s.count, s.finite_component_empty), (3, false));
        let s = component_count(&TriangulationDesc::split(0, 2));
        assert_eq!((s.count, s.nonempty()), (3, 2));
    }

    #[test]
    fn same_component_examples() {
        let f = TriangulationDesc::fountain(0);
        assert_eq!(same_component(&f, e(0, 2), e(0, 5)), Ok(true));
        assert_eq!(same_component(&f, e(-2, 0), e(0, 2)), Ok(false));
        let lf = TriangulationDesc::leapfrog(0);
        assert_eq!(same_component(&lf, e(-1, 1), e(-5, 6)), Ok(true));
        assert_eq!(same_component(&f, e(1, 3), e(0, 2)), Err(Error::NotInTriangulation(e(1, 3))));
    }

    /// Components of the window quiver, with the window chosen so that the
    /// arc spanning it is realized and nothing leaves it.
    #[test]
    fn same_component_matches_window_graph() {
        let lf = TriangulationDesc::leapfrog(0);
        let q = build_exchange_quiver(&lf, -6, 7).unwrap();
        assert_eq!(q.connected_components().len(), 1);
        let f = TriangulationDesc::fountain(0);
        let q = build_exchange_quiver(&f, -6, 6).unwrap();
        let comps = q.connected_components();
        assert_eq!(comps.len(), 2);
        for comp in &comps {
            for &x in comp {
                for &y in comp {
                    assert!(same_component(&f, x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn dot_export() {
        assert_eq!(IceQuiver::empty(Vec::new()).to_dot(), "digraph {\n}\n");
        let single = IceQuiver::empty(vec![QuiverVertex { label: e(0, 1), frozen: true }]);
        assert_eq!(single.to_dot(), "digraph {\n  \"(0,1)\" [shape=box];\n}\n");
    }

    #[test]
    fn json_round_trip() {
        let q = build_exchange_quiver(&TriangulationDesc::fountain(0), 0, 2).unwrap();
        let json = serde_json::to_string(&q).unwrap();
        assert!(json.starts_with(r#"{"vertices":[{"label":[0,1],"frozen":true}"#));
        assert_eq!(serde_json::from_str::<IceQuiver>(&json).unwrap(), q);
        assert!(
            serde_json::from_str::<IceQuiver>(r#"{"vertices":[{"label":[0,2],"frozen":false}],"b":[[1]]}"#).is_err()
        );
    }

    #[test]
    fn leapfrog_spine_alternates() {
        let lf = TriangulationDesc::leapfrog(0);
        let q = build_exchange_quiver(&lf, -8, 9).unwrap();
        let spine = lf.minimal_arc_chain(e(-1, 1), 12).unwrap();
        let signs: Vec<i64> = spine.windows(2).map(|w| q.entry(w[0], w[1]).unwrap()).collect();
        assert!(signs.iter().all(|s| s.abs() == 1));
        assert!(signs.windows(2).all(|w| w[0] == -w[1]), "{signs:?}");
    }

    #[test]
    fn fountain_spine_is_linear() {
        let f = TriangulationDesc::fountain(0);
        let q = build_exchange_quiver(&f, -10, 10).unwrap();
        let right = f.fountain_arc_sequence(crate::FountainSide::Right, 8).unwrap();
        assert!(right.windows(2).all(|w| q.entry(w[0], w[1]) == Some(1)));
        let left = f.fountain_arc_sequence(crate::FountainSide::Left, 8).unwrap();
        let signs: BTreeSet<i64> = left.windows(2).map(|w| q.entry(w[0], w[1]).unwrap()).collect();
        assert_eq!(signs.len(), 1);
    }

    #[test]
    fn random_degree_and_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cfg = SampleConfig::default();
        for _ in 0..40 {
            let (t, _) = random_case(&mut rng, &cfg);
            let (a, b) = (-9, 9);
            let q = build_exchange_quiver(&t, a, b).unwrap();
            let complete = interior_complete(&t, a, b).unwrap();
            for &ij in complete.iter().filter(|x| !t.is_frozen(**x)) {
                let col = q.index_of(ij).unwrap();
                let degree: i64 = q.matrix().iter().map(|row| row[col].abs()).sum();
                assert!(degree <= 4);
                for v in q.vertices() {
                    assert_eq!(b_entry(&t, v.label, ij).unwrap(), q.entry(v.label, ij).unwrap());
                }
            }
        }
    }

    #[test]
    fn flips_commute_with_mutation() {
        assert_eq!(flip_commutes_with_mutation(&TriangulationDesc::fountain(0), e(0, 2), -6, 7), Ok(Some(true)));
        assert_eq!(flip_commutes_with_mutation(&TriangulationDesc::fountain(0), e(0, 7), -6, 7), Ok(None));
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut checked = 0;
        for _ in 0..60 {
            let (t, arc) = random_case(&mut rng, &SampleConfig::default());
            if let Some(ok) = flip_commutes_with_mutation(&t, arc, -10, 10).unwrap() {
                assert!(ok, "{t:?} {arc}");
                checked += 1;
            }
        }
        assert!(checked > 50);
    }
}
