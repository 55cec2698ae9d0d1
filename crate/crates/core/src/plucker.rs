//! Plücker coordinates of the two-row Grassmannian and the cluster structure
//! that flips induce on them.
//!
//! Equality in the coordinate ring is decided by expanding every coordinate
//! into the entries of a generic two-row matrix. All coefficients are
//! integers; no identity in this module needs division by anything but
//! cluster variables.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::poly::{Poly, RationalExpr};
use crate::triangulation::{Quadrilateral, TriangulationClass, TriangulationDesc};

/// The coordinate `Δ^{ij}`, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PluckerLabel {
    i: i64,
    j: i64,
}

impl PluckerLabel {
    pub fn new(i: i64, j: i64) -> Result<Self> {
        if i >= j {
            return Err(Error::BadIndexOrder(vec![i, j]));
        }
        Ok(PluckerLabel { i, j })
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn edge(&self) -> Result<Edge> {
        Edge::new(self.i, self.j)
    }
}

impl From<Edge> for PluckerLabel {
    fn from(e: Edge) -> Self {
        PluckerLabel { i: e.left(), j: e.right() }
    }
}

/// Superscript notation: `Δ^{13}` for single digits, `Δ^{-1,2}` otherwise.
impl fmt::Display for PluckerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if (0..10).contains(&self.i) && (0..10).contains(&self.j) {
            write!(f, "Δ^{{{}{}}}", self.i, self.j)
        } else {
            write!(f, "Δ^{{{},{}}}", self.i, self.j)
        }
    }
}

impl Serialize for PluckerLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> Deserialize<'de> for PluckerLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [i, j] = <[i64; 2]>::deserialize(d)?;
        PluckerLabel::new(i, j).map_err(serde::de::Error::custom)
    }
}

/// The matrix entry `x[row][col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatrixVar {
    pub row: u8,
    pub col: i64,
}

impl fmt::Display for MatrixVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{}][{}]", self.row, self.col)
    }
}

pub type MatrixPoly = Poly<MatrixVar>;

pub fn matrix_var(row: u8, col: i64) -> MatrixPoly {
    Poly::var(MatrixVar { row, col })
}

/// `x[1][i]·x[2][j] − x[1][j]·x[2][i]`.
pub fn plucker_expand(p: PluckerLabel) -> MatrixPoly {
    let (i, j) = (p.i, p.j);
    &(&matrix_var(1, i) * &matrix_var(2, j)) - &(&matrix_var(1, j) * &matrix_var(2, i))
}

fn check_short_order(i: i64, k: i64, j: i64, l: i64) -> Result<()> {
    if i < k && k < j && j < l {
        Ok(())
    } else {
        Err(Error::BadIndexOrder(vec![i, k, j, l]))
    }
}

/// `Δ^{ij}Δ^{kl} − Δ^{ik}Δ^{jl} + Δ^{il}Δ^{jk} = 0` for `i < k < j < l`.
pub fn verify_short_plucker(i: i64, k: i64, j: i64, l: i64) -> Result<bool> {
    check_short_order(i, k, j, l)?;
    let d = |a, b| plucker_expand(PluckerLabel { i: a, j: b });
    let lhs = &d(i, j) * &d(k, l);
    // Δ^{jk} = −Δ^{kj}, and only labels with increasing indices exist.
    let rhs = &(&d(i, k) * &d(j, l)) + &(&d(i, l) * &d(k, j));
    Ok((&lhs - &rhs).is_zero())
}

/// `Δ^{mn}Δ^{ij} = Δ^{ab}Δ^{cd} + Δ^{ef}Δ^{gh}` for a flip of `(i,j)` to `(m,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeRelation {
    /// `[new, old]`.
    pub lhs: [PluckerLabel; 2],
    pub rhs: [[PluckerLabel; 2]; 2],
}

impl ExchangeRelation {
    /// The relation for flipping `quad.diagonal` inside `quad`.
    pub fn for_quad(quad: &Quadrilateral) -> Self {
        let [v0, v1, v2, v3] = quad.vertices;
        let l = |a, b| PluckerLabel { i: a, j: b };
        ExchangeRelation {
            lhs: [quad.other_diagonal().into(), quad.diagonal.into()],
            rhs: [[l(v0, v1), l(v2, v3)], [l(v0, v3), l(v1, v2)]],
        }
    }

    pub fn new_label(&self) -> PluckerLabel {
        self.lhs[0]
    }

    pub fn old_label(&self) -> PluckerLabel {
        self.lhs[1]
    }

    /// Left side minus right side, expanded in matrix entries.
    pub fn residual(&self) -> MatrixPoly {
        let prod = |pair: &[PluckerLabel; 2]| &plucker_expand(pair[0]) * &plucker_expand(pair[1]);
        &prod(&self.lhs) - &(&prod(&self.rhs[0]) + &prod(&self.rhs[1]))
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }
}

impl fmt::Display for ExchangeRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.rhs;
        write!(f, "{}{} = {}{} + {}{}", self.lhs[0], self.lhs[1], a, b, c, d)
    }
}

/// Which Plücker coordinates generate the cluster algebra of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorPredicate(TriangulationClass);

impl GeneratorPredicate {
    pub fn admits(&self, p: PluckerLabel) -> bool {
        let (i, j) = (p.i, p.j);
        match self.0 {
            TriangulationClass::LocallyFinite => true,
            TriangulationClass::FountainAt(k) => j <= k || k <= i,
            TriangulationClass::SplitFountainAt(l, r) => j <= l || (l <= i && j <= r) || r <= i,
        }
    }
}

pub fn subalgebra_generators(c: TriangulationClass) -> GeneratorPredicate {
    GeneratorPredicate(c)
}

/// One flip in a [`ClusterState`]'s history.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipRecord {
    pub arc: Edge,
    pub new_arc: Edge,
    pub relation: ExchangeRelation,
}

/// A triangulation seen as a seed: every realized arc `(i,j)` carries the
/// cluster variable `Δ^{ij}`, sides (and a split fountain's bridge) are
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterState {
    pub desc: TriangulationDesc,
    pub history: Vec<FlipRecord>,
}

impl ClusterState {
    pub fn new(desc: TriangulationDesc) -> Self {
        ClusterState { desc, history: Vec::new() }
    }

    /// The cluster variable on a realized mutable arc.
    pub fn variable(&self, e: Edge) -> Option<PluckerLabel> {
        (self.desc.contains(e) && !self.desc.is_frozen(e)).then(|| e.into())
    }

    /// Whether `Δ^{ij}` is a coefficient: a side, or the bridge.
    pub fn is_coefficient(&self, e: Edge) -> bool {
        self.desc.is_frozen(e)
    }

    /// Cluster variables attached to arcs inside `[a,b]`.
    pub fn variables_in_window(&self, a: i64, b: i64) -> Result<BTreeMap<Edge, PluckerLabel>> {
        Ok(self
            .desc
            .arcs_in_window(a, b)?
            .into_iter()
            .filter(|e| !self.desc.is_frozen(*e))
            .map(|e| (e, e.into()))
            .collect())
    }

    /// Coefficients inside `[a,b]`.
    pub fn coefficients_in_window(&self, a: i64, b: i64) -> Result<Vec<PluckerLabel>> {
        Ok(self
            .desc
            .edges_in_window(a, b)?
            .into_iter()
            .filter(|e| self.desc.is_frozen(*e))
            .map(PluckerLabel::from)
            .collect())
    }

    /// Flips `e` and returns the exchange relation, checked by expansion.
    pub fn exchange_flip(&self, e: Edge) -> Result<(ClusterState, ExchangeRelation)> {
        let quad = self.desc.quadrilateral_of(e)?;
        let (desc, new_arc) = self.desc.flip(e)?;
        let relation = ExchangeRelation::for_quad(&quad);
        if relation.new_label() != PluckerLabel::from(new_arc) || !relation.holds() {
            return Err(Error::RelationCheckFailed(e));
        }
        let mut history = self.history.clone();
        history.push(FlipRecord { arc: e, new_arc, relation });
        Ok((ClusterState { desc, history }, relation))
    }
}

pub fn exchange_flip(s: &ClusterState, e: Edge) -> Result<(ClusterState, ExchangeRelation)> {
    s.exchange_flip(e)
}

/// Largest number of distinct descriptors explored before giving up.
pub const CLOSURE_STATE_LIMIT: usize = 100_000;

/// Labels of all arcs inside `[a,b]` over every seed reachable by at most
/// `depth` flips whose quadrilaterals stay inside `[a,b]`.
pub fn reachable_variable_closure(
    s: &ClusterState,
    depth: usize,
    window: (i64, i64),
) -> Result<BTreeSet<PluckerLabel>> {
    let (a, b) = window;
    let mut labels: BTreeSet<PluckerLabel> = BTreeSet::new();
    let mut seen: BTreeSet<TriangulationDesc> = BTreeSet::new();
    let mut queue = VecDeque::from([(s.desc.clone(), 0usize)]);
    seen.insert(s.desc.clone());
    while let Some((t, d)) = queue.pop_front() {
        let arcs = t.arcs_in_window(a, b)?;
        labels.extend(arcs.iter().map(|e| PluckerLabel::from(*e)));
        if d == depth {
            continue;
        }
        for &e in &arcs {
            if t.is_frozen(e) || !t.quadrilateral_of(e)?.within(a, b) {
                continue;
            }
            let (next, _) = t.flip(e)?;
            if seen.insert(next.clone()) {
                if seen.len() > CLOSURE_STATE_LIMIT {
                    return Err(Error::BudgetExceeded(CLOSURE_STATE_LIMIT));
                }
                queue.push_back((next, d + 1));
            }
        }
    }
    Ok(labels)
}

/// The variable on `target` after `flips`, as a rational function of the
/// initial variables `x_e` of edges in `window`.
pub fn laurent_expand(
    s: &ClusterState,
    flips: &[Edge],
    target: Edge,
    window: (i64, i64),
) -> Result<RationalExpr<Edge>> {
    let (a, b) = window;
    crate::window::check_window(a, b)?;
    let mut t = s.desc.clone();
    let mut values: BTreeMap<Edge, RationalExpr<Edge>> = BTreeMap::new();
    let value = |values: &BTreeMap<Edge, RationalExpr<Edge>>, e: Edge| {
        values.get(&e).cloned().unwrap_or_else(|| RationalExpr::var(e))
    };
    for &e in flips {
        let quad = t.quadrilateral_of(e)?;
        if !quad.within(a, b) {
            return Err(Error::OutsideWindow(e, a, b));
        }
        let [s01, s12, s23, s03] = quad.sides();
        let num = value(&values, s01).mul(&value(&values, s23)).add(&value(&values, s03).mul(&value(&values, s12)));
        let new_value = num.div(&value(&values, e)).expect("cluster variables are nonzero");
        let (next, new_arc) = t.flip(e)?;
        values.remove(&e);
        values.insert(new_arc, new_value);
        t = next;
    }
    if !t.contains(target) {
        return Err(Error::NotInTriangulation(target));
    }
    if !target.within(a, b) {
        return Err(Error::OutsideWindow(target, a, b));
    }
    Ok(value(&values, target))
}
