//! Finitely described triangulations of the ∞-gon.
//!
//! A [`TriangulationDesc`] is one of three canonical infinite families
//! ([`BaseFamily`]) together with a finite set of removed base arcs and a
//! finite set of added arcs. Every query answers exactly for the infinite
//! object: base families are handled in closed form, and the arcs incident
//! with a fountain vertex are treated as infinite tails minus finitely many
//! removals.

mod search;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edge::{pass_side, Edge, PassSide, MAX_VERTEX};
use crate::error::{Error, Result};
use crate::window::check_window;

pub use search::find_flip_sequence;

/// The canonical infinite triangulations every descriptor is an edit of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BaseFamily {
    /// `{(c-n, c+n)} ∪ {(c-n, c+n+1)}` for `n >= 1`.
    Leapfrog { center: i64 },
    /// `{(v-n, v)} ∪ {(v, v+n)}` for `n >= 2`.
    Fountain { vertex: i64 },
    /// Left fountain at `l`, right fountain at `r`, and the fan `(l, j)`,
    /// `l+2 <= j <= r`, in the gap. The fan ends in the frozen bridge `(l,r)`.
    Split { l: i64, r: i64 },
}

/// Which half of a fountain a sequence of fountain arcs runs along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FountainSide {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangulationClass {
    LocallyFinite,
    FountainAt(i64),
    SplitFountainAt(i64, i64),
}

impl fmt::Display for TriangulationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangulationClass::LocallyFinite => write!(f, "LocallyFinite"),
            TriangulationClass::FountainAt(k) => write!(f, "FountainAt({k})"),
            TriangulationClass::SplitFountainAt(l, r) => write!(f, "SplitFountainAt({l},{r})"),
        }
    }
}

/// Arcs at a vertex of a base family: finitely many explicit partners plus
/// possibly an infinite tail on either side.
#[derive(Debug, Default)]
struct Incidence {
    finite: Vec<i64>,
    /// Every `u <= bound` is a partner.
    left_tail: Option<i64>,
    /// Every `u >= bound` is a partner.
    right_tail: Option<i64>,
}

impl BaseFamily {
    fn check(&self) -> Result<()> {
        let points: &[i64] = match self {
            BaseFamily::Leapfrog { center } => &[*center],
            BaseFamily::Fountain { vertex } => &[*vertex],
            BaseFamily::Split { l, r } => {
                if l >= r {
                    return Err(Error::InvalidDescriptor(format!("split fountain needs l < r, got l={l}, r={r}")));
                }
                &[*l, *r]
            }
        };
        // Leave head room so closed forms near the special points never overflow.
        match points.iter().find(|v| v.abs() > MAX_VERTEX / 2) {
            Some(v) => Err(Error::VertexOutOfRange(*v)),
            None => Ok(()),
        }
    }

    pub fn contains(&self, e: Edge) -> bool {
        if e.is_side() {
            return false;
        }
        let (i, j) = (e.left(), e.right());
        match *self {
            BaseFamily::Leapfrog { center: c } => {
                let n = c - i;
                n >= 1 && (j - c == n || j - c == n + 1)
            }
            BaseFamily::Fountain { vertex: v } => i == v || j == v,
            BaseFamily::Split { l, r } => j == l || i == r || (i == l && j <= r),
        }
    }

    fn classify(&self) -> TriangulationClass {
        match *self {
            BaseFamily::Leapfrog { .. } => TriangulationClass::LocallyFinite,
            BaseFamily::Fountain { vertex } => TriangulationClass::FountainAt(vertex),
            BaseFamily::Split { l, r } => TriangulationClass::SplitFountainAt(l, r),
        }
    }

    /// Base arcs inside `[a,b]`.
    fn arcs_in(&self, a: i64, b: i64) -> Vec<Edge> {
        let mut out = Vec::new();
        match *self {
            BaseFamily::Leapfrog { center: c } => {
                for n in 1..=(c - a).min(b - c) {
                    out.push(Edge::raw(c - n, c + n));
                    if c + n < b {
                        out.push(Edge::raw(c - n, c + n + 1));
                    }
                }
            }
            BaseFamily::Fountain { vertex: v } => {
                if a <= v && v <= b {
                    out.extend((a..=v - 2).map(|m| Edge::raw(m, v)));
                    out.extend((v + 2..=b).map(|p| Edge::raw(v, p)));
                }
            }
            BaseFamily::Split { l, r } => {
                if a <= l && l <= b {
                    out.extend((a..=l - 2).map(|m| Edge::raw(m, l)));
                    out.extend((l + 2..=r.min(b)).map(|j| Edge::raw(l, j)));
                }
                if a <= r && r <= b {
                    out.extend((r + 2..=b).map(|p| Edge::raw(r, p)));
                }
            }
        }
        out
    }

    fn incidence(&self, v: i64) -> Incidence {
        let mut inc = Incidence::default();
        match *self {
            BaseFamily::Leapfrog { center: c } => {
                if v < c {
                    let n = c - v;
                    inc.finite = vec![c + n, c + n + 1];
                } else if v > c {
                    let m = v - c;
                    inc.finite.push(c - m);
                    if m >= 2 {
                        inc.finite.push(c - m + 1);
                    }
                }
            }
            BaseFamily::Fountain { vertex: f } => {
                if v == f {
                    inc.left_tail = Some(f - 2);
                    inc.right_tail = Some(f + 2);
                } else if v <= f - 2 || v >= f + 2 {
                    inc.finite.push(f);
                }
            }
            BaseFamily::Split { l, r } => {
                if v == l {
                    inc.left_tail = Some(l - 2);
                    inc.finite.extend(l + 2..=r);
                } else if v == r {
                    inc.right_tail = Some(r + 2);
                    if r >= l + 2 {
                        inc.finite.push(l);
                    }
                } else if v <= l - 2 {
                    inc.finite.push(l);
                } else if v >= r + 2 {
                    inc.finite.push(r);
                } else if l + 2 <= v && v < r {
                    inc.finite.push(l);
                }
            }
        }
        inc
    }

    /// Vertices around which the family has its characteristic structure.
    fn special_points(&self) -> Vec<i64> {
        match *self {
            BaseFamily::Leapfrog { center } => vec![center],
            BaseFamily::Fountain { vertex } => vec![vertex],
            BaseFamily::Split { l, r } => vec![l, r],
        }
    }
}

#[derive(Clone, Copy)]
enum Pick {
    Min,
    Max,
}

/// A base family with finitely many arcs removed and added.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDesc")]
pub struct TriangulationDesc {
    base: BaseFamily,
    removed: BTreeSet<Edge>,
    added: BTreeSet<Edge>,
}

#[derive(Deserialize)]
struct RawDesc {
    base: BaseFamily,
    #[serde(default)]
    removed: BTreeSet<Edge>,
    #[serde(default)]
    added: BTreeSet<Edge>,
}

impl TryFrom<RawDesc> for TriangulationDesc {
    type Error = Error;

    fn try_from(raw: RawDesc) -> Result<Self> {
        TriangulationDesc::new(raw.base, raw.removed, raw.added)
    }
}

/// The quadrilateral in which an arc is a diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quadrilateral {
    pub vertices: [i64; 4],
    pub diagonal: Edge,
}

impl Quadrilateral {
    pub fn other_diagonal(&self) -> Edge {
        let [v0, v1, v2, v3] = self.vertices;
        if self.diagonal == Edge::raw(v0, v2) {
            Edge::raw(v1, v3)
        } else {
            Edge::raw(v0, v2)
        }
    }

    /// `(v0,v1), (v1,v2), (v2,v3), (v0,v3)`.
    pub fn sides(&self) -> [Edge; 4] {
        let [v0, v1, v2, v3] = self.vertices;
        [Edge::raw(v0, v1), Edge::raw(v1, v2), Edge::raw(v2, v3), Edge::raw(v0, v3)]
    }

    pub fn within(&self, a: i64, b: i64) -> bool {
        a <= self.vertices[0] && self.vertices[3] <= b
    }
}

impl TriangulationDesc {
    /// Builds a descriptor, checking the edit sets are consistent with the base.
    ///
    /// This does not check that the result is a triangulation; see
    /// [`TriangulationDesc::validate`].
    pub fn new(base: BaseFamily, removed: BTreeSet<Edge>, added: BTreeSet<Edge>) -> Result<Self> {
        base.check()?;
        if let Some(e) = removed.iter().find(|e| !base.contains(**e)) {
            return Err(Error::InvalidDescriptor(format!("removed arc {e} is not in the base family")));
        }
        if let Some(e) = added.iter().find(|e| e.is_side()) {
            return Err(Error::InvalidDescriptor(format!("added edge {e} is a side")));
        }
        if let Some(e) = added.iter().find(|e| base.contains(**e)) {
            return Err(Error::InvalidDescriptor(format!("added arc {e} already belongs to the base family")));
        }
        Ok(TriangulationDesc { base, removed, added })
    }

    pub fn from_base(base: BaseFamily) -> Result<Self> {
        Self::new(base, BTreeSet::new(), BTreeSet::new())
    }

    pub fn leapfrog(center: i64) -> Self {
        Self::from_base(BaseFamily::Leapfrog { center }).expect("leapfrog center in range")
    }

    pub fn fountain(vertex: i64) -> Self {
        Self::from_base(BaseFamily::Fountain { vertex }).expect("fountain vertex in range")
    }

    /// Split fountain with left fountain `l` and right fountain `r`; panics unless `l < r`.
    pub fn split(l: i64, r: i64) -> Self {
        Self::from_base(BaseFamily::Split { l, r }).expect("split fountain needs l < r")
    }

    pub fn base(&self) -> BaseFamily {
        self.base
    }

    pub fn removed(&self) -> &BTreeSet<Edge> {
        &self.removed
    }

    pub fn added(&self) -> &BTreeSet<Edge> {
        &self.added
    }

    /// Whether `e` is a realized edge. Sides are always realized.
    pub fn contains(&self, e: Edge) -> bool {
        e.is_side() || self.added.contains(&e) || (self.base.contains(e) && !self.removed.contains(&e))
    }

    pub fn classify(&self) -> TriangulationClass {
        self.base.classify()
    }

    /// The split-fountain bridge, if the base has one that is an arc.
    pub fn bridge(&self) -> Option<Edge> {
        match self.base {
            BaseFamily::Split { l, r } if r >= l + 2 => Some(Edge::raw(l, r)),
            _ => None,
        }
    }

    /// Sides and the bridge. Frozen edges have no quadrilateral.
    pub fn is_frozen(&self, e: Edge) -> bool {
        e.is_side() || self.bridge() == Some(e)
    }

    /// Realized arcs with both endpoints in `[a,b]`.
    pub fn arcs_in_window(&self, a: i64, b: i64) -> Result<BTreeSet<Edge>> {
        check_window(a, b)?;
        let mut arcs: BTreeSet<Edge> =
            self.base.arcs_in(a, b).into_iter().filter(|e| !self.removed.contains(e)).collect();
        arcs.extend(self.added.iter().filter(|e| e.within(a, b)));
        Ok(arcs)
    }

    /// Sides and realized arcs inside `[a,b]`.
    pub fn edges_in_window(&self, a: i64, b: i64) -> Result<BTreeSet<Edge>> {
        let mut edges = self.arcs_in_window(a, b)?;
        edges.extend((a..b).map(|i| Edge::raw(i, i + 1)));
        Ok(edges)
    }

    /// Extreme `u` in `[lo,hi]` such that the edge between `v` and `u` is
    /// realized (sides included).
    fn neighbor(&self, v: i64, lo: i64, hi: i64, pick: Pick) -> Option<i64> {
        let lo = lo.max(-MAX_VERTEX);
        let hi = hi.min(MAX_VERTEX);
        if lo > hi {
            return None;
        }
        let mut best: Option<i64> = None;
        let mut offer = |u: i64| {
            if lo <= u && u <= hi && u != v {
                best = Some(match (best, pick) {
                    (None, _) => u,
                    (Some(b), Pick::Min) => b.min(u),
                    (Some(b), Pick::Max) => b.max(u),
                });
            }
        };
        offer(v - 1);
        offer(v + 1);
        let inc = self.base.incidence(v);
        for &u in &inc.finite {
            if !self.removed.contains(&between(v, u)) {
                offer(u);
            }
        }
        for e in &self.added {
            if e.left() == v {
                offer(e.right());
            } else if e.right() == v {
                offer(e.left());
            }
        }
        let tails = [inc.left_tail.map(|t| (lo, hi.min(t))), inc.right_tail.map(|t| (lo.max(t), hi))];
        for (s, t) in tails.into_iter().flatten() {
            if s > t {
                continue;
            }
            // Finitely many removals, so these scans stop quickly.
            let mut u = match pick {
                Pick::Min => s,
                Pick::Max => t,
            };
            while (s..=t).contains(&u) && self.removed.contains(&between(v, u)) {
                u = match pick {
                    Pick::Min => u + 1,
                    Pick::Max => u - 1,
                };
            }
            if (s..=t).contains(&u) {
                offer(u);
            }
        }
        best
    }

    /// The unique minimal realized arc passing over `e`, and the side it passes on.
    pub fn minimal_arc_over(&self, e: Edge) -> Result<(Edge, PassSide)> {
        if !self.contains(e) {
            return Err(Error::NotInTriangulation(e));
        }
        let (i, j) = (e.left(), e.right());
        let right = self.neighbor(i, j + 1, i64::MAX, Pick::Min).map(|y| Edge::raw(i, y));
        let left = self.neighbor(j, i64::MIN, i - 1, Pick::Max).map(|x| Edge::raw(x, j));
        let cover = match (left, right) {
            (Some(l), Some(r)) => {
                return Err(Error::InvalidDescriptor(format!(
                    "arcs {l} and {r} both pass over {e} and cross each other"
                )))
            }
            (Some(c), None) | (None, Some(c)) => c,
            (None, None) => return Err(Error::NoCover(e)),
        };
        Ok((cover, pass_side(cover, e)?))
    }

    /// The apex `p` of the triangle `(e.left, p, e.right)` underneath an arc.
    pub(crate) fn lower_vertex(&self, e: Edge) -> Result<i64> {
        let p = self
            .neighbor(e.left(), e.left() + 1, e.right() - 1, Pick::Max)
            .expect("the side at e.left is always a candidate");
        if self.contains(Edge::raw(p, e.right())) {
            Ok(p)
        } else {
            Err(Error::InvalidDescriptor(format!("no triangle underneath {e}")))
        }
    }

    /// The two triangles adjacent to a mutable arc, as a quadrilateral.
    pub fn quadrilateral_of(&self, e: Edge) -> Result<Quadrilateral> {
        if e.is_side() {
            return Err(Error::SideNotFlippable(e));
        }
        if !self.contains(e) {
            return Err(Error::NotInTriangulation(e));
        }
        if self.bridge() == Some(e) {
            return Err(Error::FrozenArc(e));
        }
        let p = self.lower_vertex(e)?;
        let (cover, side) = self.minimal_arc_over(e).map_err(|err| match err {
            Error::NoCover(_) => Error::InvalidDescriptor(format!("nothing passes over {e}")),
            other => other,
        })?;
        let (i, j) = (e.left(), e.right());
        let vertices = match side {
            PassSide::Right => [i, p, j, cover.right()],
            PassSide::Left => [cover.left(), i, p, j],
        };
        Ok(Quadrilateral { vertices, diagonal: e })
    }

    /// Replaces `e` by the other diagonal of its quadrilateral.
    pub fn flip(&self, e: Edge) -> Result<(TriangulationDesc, Edge)> {
        let quad = self.quadrilateral_of(e)?;
        let new_arc = quad.other_diagonal();
        let mut next = self.clone();
        if self.base.contains(e) {
            next.removed.insert(e);
        } else {
            next.added.remove(&e);
        }
        if self.base.contains(new_arc) {
            next.removed.remove(&new_arc);
        } else {
            next.added.insert(new_arc);
        }
        Ok((next, new_arc))
    }

    /// Applies flips in order, returning the final descriptor and the new arcs.
    pub fn flip_all(&self, arcs: &[Edge]) -> Result<(TriangulationDesc, Vec<Edge>)> {
        let mut t = self.clone();
        let mut created = Vec::with_capacity(arcs.len());
        for &e in arcs {
            let (next, new_arc) = t.flip(e)?;
            t = next;
            created.push(new_arc);
        }
        Ok((t, created))
    }

    /// The first `count` fountain arcs on one side, nearest first.
    pub fn fountain_arc_sequence(&self, side: FountainSide, count: usize) -> Result<Vec<Edge>> {
        let pivot = match (self.classify(), side) {
            (TriangulationClass::LocallyFinite, _) => return Err(Error::NotAFountain),
            (TriangulationClass::FountainAt(k), _) => k,
            (TriangulationClass::SplitFountainAt(l, _), FountainSide::Left) => l,
            (TriangulationClass::SplitFountainAt(_, r), FountainSide::Right) => r,
        };
        let mut out = Vec::with_capacity(count);
        let mut last = match side {
            FountainSide::Right => pivot + 1,
            FountainSide::Left => pivot - 1,
        };
        while out.len() < count {
            let next = match side {
                FountainSide::Right => self.neighbor(pivot, last + 1, i64::MAX, Pick::Min),
                FountainSide::Left => self.neighbor(pivot, i64::MIN, last - 1, Pick::Max),
            };
            let Some(s) = next else { break };
            out.push(between(pivot, s));
            last = s;
        }
        Ok(out)
    }

    /// `start` followed by repeated minimal covers, `count` arcs in total.
    pub fn minimal_arc_chain(&self, start: Edge, count: usize) -> Result<Vec<Edge>> {
        if self.classify() != TriangulationClass::LocallyFinite {
            return Err(Error::NotLocallyFinite);
        }
        if !self.contains(start) {
            return Err(Error::NotInTriangulation(start));
        }
        let mut chain = vec![start];
        while chain.len() < count {
            let (cover, _) = self.minimal_arc_over(*chain.last().unwrap())?;
            chain.push(cover);
        }
        chain.truncate(count.max(1));
        Ok(chain)
    }

    /// Two descriptors differ in finitely many arcs exactly when they share a base.
    pub fn mutation_equivalent(&self, other: &TriangulationDesc) -> bool {
        self.base == other.base
    }

    /// Arcs realized in exactly one of two descriptors with the same base.
    pub fn symmetric_difference(&self, other: &TriangulationDesc) -> Result<BTreeSet<Edge>> {
        if !self.mutation_equivalent(other) {
            return Err(Error::NotEquivalent);
        }
        let mut diff: BTreeSet<Edge> = self.removed.symmetric_difference(&other.removed).copied().collect();
        diff.extend(self.added.symmetric_difference(&other.added));
        Ok(diff)
    }

    /// A realized arc crossing `e`, if any.
    pub fn crossing_witness(&self, e: Edge) -> Option<Edge> {
        let (i, j) = (e.left(), e.right());
        (i + 1..j).find_map(|v| {
            if let Some(u) = self.neighbor(v, i64::MIN, i - 1, Pick::Max) {
                return Some(Edge::raw(u, v));
            }
            self.neighbor(v, j + 1, i64::MAX, Pick::Min).map(|u| Edge::raw(v, u))
        })
    }

    /// Checks non-crossing and maximality for every arc inside `[a,b]`, taking
    /// arcs that leave the window into account exactly.
    pub fn validate_window(&self, a: i64, b: i64) -> Result<bool> {
        Ok(self.window_defect(a, b)?.is_none())
    }

    /// Like [`validate_window`](Self::validate_window) but explains the first defect.
    pub fn window_defect(&self, a: i64, b: i64) -> Result<Option<String>> {
        let arcs: Vec<Edge> = self.arcs_in_window(a, b)?.into_iter().collect();
        for (n, x) in arcs.iter().enumerate() {
            if let Some(y) = arcs[n + 1..].iter().find(|y| x.crosses(y)) {
                return Ok(Some(format!("arcs {x} and {y} cross")));
            }
        }
        // Farthest partner on each side of every window vertex.
        let w = (b - a + 1) as usize;
        let mut reach_left = vec![i64::MAX; w];
        let mut reach_right = vec![i64::MIN; w];
        for v in a..=b {
            let k = (v - a) as usize;
            if let Some(u) = self.neighbor(v, i64::MIN, v - 1, Pick::Min) {
                reach_left[k] = u;
            }
            if let Some(u) = self.neighbor(v, v + 1, i64::MAX, Pick::Max) {
                reach_right[k] = u;
            }
        }
        let crossed = |i: i64, j: i64| {
            (i + 1..j).any(|v| {
                let k = (v - a) as usize;
                reach_left[k] < i || reach_right[k] > j
            })
        };
        for x in &arcs {
            if crossed(x.left(), x.right()) {
                let witness = self.crossing_witness(*x).expect("crossing detected");
                return Ok(Some(format!("arc {x} crosses {witness}")));
            }
        }
        for i in a..=b {
            for j in i + 2..=b {
                let e = Edge::raw(i, j);
                if !self.contains(e) && !crossed(i, j) {
                    return Ok(Some(format!("arc {e} is missing but crosses nothing")));
                }
            }
        }
        Ok(None)
    }

    /// Full check that the descriptor is a triangulation of the ∞-gon.
    ///
    /// Added arcs are checked against the entire realized set; maximality is
    /// checked in windows around every edit and every special vertex of the
    /// base (the base family alone is a triangulation).
    pub fn validate(&self) -> Result<()> {
        for e in &self.added {
            if let Some(w) = self.crossing_witness(*e) {
                return Err(Error::InvalidDescriptor(format!("added arc {e} crosses {w}")));
            }
        }
        const MARGIN: i64 = 3;
        let mut spans: Vec<(i64, i64)> = self
            .removed
            .iter()
            .chain(&self.added)
            .map(|e| (e.left() - MARGIN, e.right() + MARGIN))
            .chain(self.base.special_points().into_iter().map(|p| (p - MARGIN, p + MARGIN)))
            .collect();
        spans.sort();
        let mut merged: Vec<(i64, i64)> = Vec::new();
        for (a, b) in spans {
            match merged.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => merged.push((a, b)),
            }
        }
        for (a, b) in merged {
            if let Some(defect) = self.window_defect(a, b)? {
                return Err(Error::InvalidDescriptor(defect));
            }
        }
        Ok(())
    }
}

pub(crate) fn between(u: i64, v: i64) -> Edge {
    Edge::raw(u.min(v), u.max(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_descriptor, SampleConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(l: i64, r: i64) -> Edge {
        Edge::new(l, r).unwrap()
    }

    fn set(arcs: &[(i64, i64)]) -> BTreeSet<Edge> {
        arcs.iter().map(|&(l, r)| e(l, r)).collect()
    }

    fn fountain_edited() -> TriangulationDesc {
        TriangulationDesc::new(BaseFamily::Fountain { vertex: 0 }, set(&[(0, 2)]), set(&[(1, 3)])).unwrap()
    }

    /// Brute-force minimal cover: the shortest realized arc in a window passing over `e`.
    fn brute_minimal_cover(t: &TriangulationDesc, x: Edge, a: i64, b: i64) -> Vec<Edge> {
        let arcs = t.arcs_in_window(a, b).unwrap();
        let covers: Vec<Edge> = arcs.iter().copied().filter(|c| c.passes_over(&x)).collect();
        covers.iter().copied().filter(|c| covers.iter().all(|d| d == c || d.passes_over(c))).collect()
    }

    #[test]
    fn membership() {
        assert!(TriangulationDesc::fountain(0).contains(e(0, 5)));
        assert!(TriangulationDesc::leapfrog(0).contains(e(-2, 3)));
        assert!(!TriangulationDesc::leapfrog(0).contains(e(-2, 4)));
        assert!(!fountain_edited().contains(e(0, 2)));
        assert!(fountain_edited().contains(e(1, 3)));
        assert!(TriangulationDesc::split(0, 3).contains(e(0, 3)));
        assert!(TriangulationDesc::split(0, 3).contains(e(-4, 0)));
        assert!(!TriangulationDesc::split(0, 3).contains(e(1, 3)));
    }

    #[test]
    fn window_materialization() {
        assert_eq!(TriangulationDesc::fountain(0).arcs_in_window(-2, 3).unwrap(), set(&[(-2, 0), (0, 2), (0, 3)]));
        assert_eq!(
            TriangulationDesc::leapfrog(0).arcs_in_window(-2, 3).unwrap(),
            set(&[(-1, 1), (-1, 2), (-2, 2), (-2, 3)])
        );
        for t in [TriangulationDesc::fountain(0), TriangulationDesc::leapfrog(0), TriangulationDesc::split(0, 3)] {
            assert!(t.arcs_in_window(5, 6).unwrap().is_empty());
        }
        assert!(matches!(TriangulationDesc::fountain(0).arcs_in_window(0, 1 << 30), Err(Error::WindowTooLarge { .. })));
        assert!(matches!(TriangulationDesc::fountain(0).arcs_in_window(3, 3), Err(Error::EmptyWindow { .. })));
    }

    #[test]
    fn window_enumeration_matches_membership() {
        for t in [
            TriangulationDesc::leapfrog(2),
            TriangulationDesc::fountain(-1),
            TriangulationDesc::split(-2, 3),
            fountain_edited(),
        ] {
            let (a, b) = (-9, 9);
            let by_membership: BTreeSet<Edge> =
                (a..=b).flat_map(|i| (i + 2..=b).map(move |j| Edge::raw(i, j))).filter(|x| t.contains(*x)).collect();
            assert_eq!(t.arcs_in_window(a, b).unwrap(), by_membership);
        }
    }

    #[test]
    fn minimal_arc_examples() {
        assert_eq!(TriangulationDesc::leapfrog(0).minimal_arc_over(e(-1, 1)), Ok((e(-1, 2), PassSide::Right)));
        let f = TriangulationDesc::fountain(0);
        assert_eq!(f.minimal_arc_over(e(0, 2)), Ok((e(0, 3), PassSide::Right)));
        assert_eq!(brute_minimal_cover(&f, e(0, 2), -1, 4), vec![e(0, 3)]);
        assert_eq!(TriangulationDesc::split(0, 3).minimal_arc_over(e(0, 3)), Err(Error::NoCover(e(0, 3))));
        assert_eq!(TriangulationDesc::leapfrog(0).minimal_arc_over(e(5, 6)), Ok((e(-5, 6), PassSide::Left)));
    }

    #[test]
    fn quadrilateral_examples() {
        let q = TriangulationDesc::fountain(0).quadrilateral_of(e(0, 2)).unwrap();
        assert_eq!(q.vertices, [0, 1, 2, 3]);
        assert_eq!(q.diagonal, e(0, 2));
        let q = TriangulationDesc::leapfrog(0).quadrilateral_of(e(-1, 2)).unwrap();
        assert_eq!(q.vertices, [-2, -1, 1, 2]);
        assert_eq!(q.other_diagonal(), e(-2, 1));
        assert_eq!(TriangulationDesc::split(0, 3).quadrilateral_of(e(0, 3)), Err(Error::FrozenArc(e(0, 3))));
        assert_eq!(TriangulationDesc::fountain(0).quadrilateral_of(e(1, 3)), Err(Error::NotInTriangulation(e(1, 3))));
    }

    #[test]
    fn flip_examples() {
        let f = TriangulationDesc::fountain(0);
        let (g, new_arc) = f.flip(e(0, 2)).unwrap();
        assert_eq!(new_arc, e(1, 3));
        assert_eq!(g, fountain_edited());
        let (back, old) = g.flip(e(1, 3)).unwrap();
        assert_eq!(old, e(0, 2));
        assert_eq!(back, f);
        assert_eq!(TriangulationDesc::split(0, 3).flip(e(0, 3)), Err(Error::FrozenArc(e(0, 3))));
        assert_eq!(f.flip(e(0, 1)), Err(Error::SideNotFlippable(e(0, 1))));
    }

    #[test]
    fn classification() {
        let (lf, _) = TriangulationDesc::leapfrog(0).flip(e(-1, 2)).unwrap();
        assert_eq!(lf.classify(), TriangulationClass::LocallyFinite);
        assert_eq!(TriangulationDesc::fountain(0).classify(), TriangulationClass::FountainAt(0));
        assert_eq!(TriangulationDesc::split(0, 3).classify(), TriangulationClass::SplitFountainAt(0, 3));
        assert_eq!(TriangulationClass::SplitFountainAt(0, 3).to_string(), "SplitFountainAt(0,3)");
    }

    #[test]
    fn fountain_sequences() {
        let f = TriangulationDesc::fountain(0);
        assert_eq!(f.fountain_arc_sequence(FountainSide::Right, 3).unwrap(), vec![e(0, 2), e(0, 3), e(0, 4)]);
        assert_eq!(f.fountain_arc_sequence(FountainSide::Left, 2).unwrap(), vec![e(-2, 0), e(-3, 0)]);
        assert_eq!(fountain_edited().fountain_arc_sequence(FountainSide::Right, 2).unwrap(), vec![e(0, 3), e(0, 4)]);
        assert_eq!(
            TriangulationDesc::leapfrog(0).fountain_arc_sequence(FountainSide::Right, 2),
            Err(Error::NotAFountain)
        );
        assert_eq!(
            TriangulationDesc::split(0, 3).fountain_arc_sequence(FountainSide::Right, 2).unwrap(),
            vec![e(3, 5), e(3, 6)]
        );
    }

    #[test]
    fn minimal_chains() {
        let lf = TriangulationDesc::leapfrog(0);
        assert_eq!(lf.minimal_arc_chain(e(-1, 1), 3).unwrap(), vec![e(-1, 1), e(-1, 2), e(-2, 2)]);
        assert_eq!(lf.minimal_arc_chain(e(-1, 1), 1).unwrap(), vec![e(-1, 1)]);
        assert_eq!(TriangulationDesc::fountain(0).minimal_arc_chain(e(0, 2), 3), Err(Error::NotLocallyFinite));
        assert_eq!(lf.minimal_arc_chain(e(0, 2), 2), Err(Error::NotInTriangulation(e(0, 2))));
    }

    #[test]
    fn equivalence_by_base() {
        let f = TriangulationDesc::fountain(0);
        assert!(f.mutation_equivalent(&fountain_edited()));
        assert!(!f.mutation_equivalent(&TriangulationDesc::fountain(1)));
        assert!(!TriangulationDesc::leapfrog(0).mutation_equivalent(&f));
    }

    #[test]
    fn window_validation() {
        assert!(TriangulationDesc::fountain(0).validate_window(-4, 4).unwrap());
        let holed =
            TriangulationDesc::new(BaseFamily::Fountain { vertex: 0 }, set(&[(0, 2)]), BTreeSet::new()).unwrap();
        assert!(!holed.validate_window(-1, 3).unwrap());
        assert!(holed.validate().is_err());
        // Split fountain at -1, 1 without its bridge: arcs (-n,-1) and (1,m) around 0.
        let limit =
            TriangulationDesc::new(BaseFamily::Split { l: -1, r: 1 }, set(&[(-1, 1)]), BTreeSet::new()).unwrap();
        assert!(!limit.validate_window(-2, 2).unwrap());
        for t in [
            TriangulationDesc::leapfrog(0),
            TriangulationDesc::fountain(3),
            TriangulationDesc::split(-2, 4),
            TriangulationDesc::split(0, 1),
            fountain_edited(),
        ] {
            t.validate().unwrap();
            assert!(t.validate_window(-10, 10).unwrap());
        }
    }

    #[test]
    fn crossing_added_arcs_are_rejected() {
        let bad = TriangulationDesc::new(BaseFamily::Fountain { vertex: 0 }, BTreeSet::new(), set(&[(-1, 1)])).unwrap();
        assert!(matches!(bad.validate(), Err(Error::InvalidDescriptor(_))));
        assert!(TriangulationDesc::new(BaseFamily::Fountain { vertex: 0 }, set(&[(1, 3)]), BTreeSet::new()).is_err());
        assert!(TriangulationDesc::new(BaseFamily::Split { l: 2, r: 2 }, BTreeSet::new(), BTreeSet::new()).is_err());
    }

    #[test]
    fn descriptor_json() {
        let json = serde_json::to_string(&fountain_edited()).unwrap();
        assert_eq!(json, r#"{"base":{"kind":"fountain","vertex":0},"removed":[[0,2]],"added":[[1,3]]}"#);
        let back: TriangulationDesc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fountain_edited());
        let split: TriangulationDesc = serde_json::from_str(r#"{"base":{"kind":"split","l":0,"r":3}}"#).unwrap();
        assert_eq!(split, TriangulationDesc::split(0, 3));
        assert!(serde_json::from_str::<TriangulationDesc>(
            r#"{"base":{"kind":"fountain","vertex":0},"removed":[[1,3]]}"#
        )
        .is_err());
    }

    #[test]
    fn random_flip_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = SampleConfig::default();
        for _ in 0..60 {
            let t = random_descriptor(&mut rng, &cfg);
            let (a, b) = cfg.region;
            let (a, b) = (a - 4, b + 4);
            for x in t.arcs_in_window(a, b).unwrap() {
                if t.is_frozen(x) {
                    continue;
                }
                let (u, new_arc) = t.flip(x).unwrap();
                assert_eq!(u.classify(), t.classify());
                assert!(u.validate_window(a - 3, b + 3).unwrap(), "{u:?}");
                let (back, old) = u.flip(new_arc).unwrap();
                assert_eq!(old, x);
                assert_eq!(back, t);
            }
            // Brute-force universal property of minimal covers inside the window.
            for x in t.edges_in_window(a + 3, b - 3).unwrap() {
                match t.minimal_arc_over(x) {
                    Ok((c, _)) if c.within(a, b) => {
                        assert_eq!(brute_minimal_cover(&t, x, a, b), vec![c]);
                    }
                    Ok(_) => {}
                    Err(Error::NoCover(_)) => match t.classify() {
                        TriangulationClass::SplitFountainAt(l, r) => assert_eq!(x, Edge::raw(l, r)),
                        other => panic!("{x} uncovered in {other}"),
                    },
                    Err(other) => panic!("{other}"),
                }
            }
        }
    }

    #[test]
    fn fountain_sequence_is_eventually_increasing() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let t = random_descriptor(
                &mut rng,
                &SampleConfig { families: vec![crate::sample::FamilyKind::Fountain], ..Default::default() },
            );
            let seq = t.fountain_arc_sequence(FountainSide::Right, 12).unwrap();
            assert_eq!(seq.len(), 12);
            assert!(seq.windows(2).all(|w| w[0].right() < w[1].right()));
        }
    }
}
