//! Arcs and sides of the ∞-gon.
//!
//! The vertices of the ∞-gon are the integers. An [`Edge`] `(i,j)` with
//! `i < j` is a *side* when `j = i + 1` and an *arc* otherwise.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex magnitude. Keeping indices well inside `i64`
/// means no arithmetic on endpoints can overflow.
pub const MAX_VERTEX: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    left: i64,
    right: i64,
}

impl Edge {
    /// Builds `(left,right)`. Reversed or degenerate pairs are rejected, not swapped.
    pub fn new(left: i64, right: i64) -> Result<Self> {
        for v in [left, right] {
            if v.abs() > MAX_VERTEX {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        if left >= right {
            return Err(Error::BadEdge(left, right));
        }
        Ok(Edge { left, right })
    }

    /// The side `(v, v+1)`.
    pub fn side(v: i64) -> Result<Self> {
        Edge::new(v, v + 1)
    }

    /// Internal constructor for pairs already known to be ordered and in range.
    pub(crate) fn raw(left: i64, right: i64) -> Self {
        debug_assert!(left < right, "raw edge ({left},{right}) out of order");
        Edge { left, right }
    }

    pub fn left(&self) -> i64 {
        self.left
    }

    pub fn right(&self) -> i64 {
        self.right
    }

    pub fn is_side(&self) -> bool {
        self.right == self.left + 1
    }

    pub fn is_arc(&self) -> bool {
        self.right >= self.left + 2
    }

    /// Number of sides spanned.
    pub fn span(&self) -> i64 {
        self.right - self.left
    }

    pub fn has_endpoint(&self, v: i64) -> bool {
        self.left == v || self.right == v
    }

    /// Whether both endpoints lie in `[a,b]`.
    pub fn within(&self, a: i64, b: i64) -> bool {
        a <= self.left && self.right <= b
    }

    pub fn crosses(&self, other: &Edge) -> bool {
        crosses(*self, *other)
    }

    pub fn passes_over(&self, inner: &Edge) -> bool {
        passes_over(*self, *inner)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

impl TryFrom<(i64, i64)> for Edge {
    type Error = Error;

    fn try_from((l, r): (i64, i64)) -> Result<Self> {
        Edge::new(l, r)
    }
}

impl std::str::FromStr for Edge {
    type Err = Error;

    /// Parses `i,j` (optionally wrapped in parentheses or brackets).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let bad = || Error::InvalidDescriptor(format!("cannot parse arc {s:?}, expected i,j"));
        let (l, r) = trimmed.split_once(',').ok_or_else(bad)?;
        let l = l.trim().parse().map_err(|_| bad())?;
        let r = r.trim().parse().map_err(|_| bad())?;
        Edge::new(l, r)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.left, self.right].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [l, r] = <[i64; 2]>::deserialize(d)?;
        Edge::new(l, r).map_err(serde::de::Error::custom)
    }
}

/// Which way a minimal covering arc sits relative to the edge it covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PassSide {
    Left,
    Right,
}

/// Strict interleaving of endpoints.
pub fn crosses(a: Edge, b: Edge) -> bool {
    (a.left < b.left && b.left < a.right && a.right < b.right)
        || (b.left < a.left && a.left < b.right && b.right < a.right)
}

/// `a` passes over `b` when `a != b` and `a.left <= b.left < b.right <= a.right`.
pub fn passes_over(a: Edge, b: Edge) -> bool {
    a != b && a.left <= b.left && b.right <= a.right
}

/// For a cover sharing exactly one endpoint with `inner`: `Right` if it shares
/// the left endpoint, `Left` if it shares the right one.
pub fn pass_side(cover: Edge, inner: Edge) -> Result<PassSide> {
    if !passes_over(cover, inner) {
        return Err(Error::NotAdjacentCover { cover, inner });
    }
    match (cover.left == inner.left, cover.right == inner.right) {
        (true, false) => Ok(PassSide::Right),
        (false, true) => Ok(PassSide::Left),
        _ => Err(Error::NotAdjacentCover { cover, inner }),
    }
}
