//! The quantum torus of a cluster: Laurent monomials in quasi-commuting
//! variables, one per edge.

use std::collections::BTreeMap;

use super::laurent::LaurentHalfQ;
use super::lmatrix::l_entry;
use super::matrix::{qplucker_label, QElement};
use crate::edge::Edge;
use crate::error::{Error, Result};

/// Exponent vector with finite support; zero entries are not stored.
pub type Exponent = BTreeMap<Edge, i64>;

/// Variables `X_e` for a fixed, ordered set of pairwise non-crossing edges,
/// with `X_e X_f = q^{L(e,f)} X_f X_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumTorus {
    edges: Vec<Edge>,
    l: BTreeMap<(Edge, Edge), i64>,
}

impl QuantumTorus {
    /// Edges are ordered lexicographically; `X^a` is the ordered product.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort();
        edges.dedup();
        let mut l = BTreeMap::new();
        for &e in &edges {
            for &f in &edges {
                l.insert((e, f), l_entry(e.into(), f.into())?);
            }
        }
        Ok(QuantumTorus { edges, l })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn l(&self, e: Edge, f: Edge) -> i64 {
        self.l[&(e, f)]
    }

    fn check(&self, a: &Exponent) -> Result<()> {
        match a.keys().find(|e| !self.l.contains_key(&(**e, **e))) {
            Some(e) => Err(Error::NotInTriangulation(*e)),
            None => Ok(()),
        }
    }

    /// Half-exponent of `q` in `X^a X^b = q^{Σ_{e>f} a_e b_f L(e,f)} X^{a+b}`, doubled.
    fn twist(&self, a: &Exponent, b: &Exponent) -> i64 {
        let mut s = 0;
        for (e, x) in a {
            for (f, y) in b.range(..*e) {
                s += x * y * self.l(*e, *f);
            }
        }
        2 * s
    }
}

/// A finite sum of `coefficient · X^a`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QTorusElement {
    terms: BTreeMap<Vec<(Edge, i64)>, LaurentHalfQ>,
}

impl QTorusElement {
    pub fn zero() -> Self {
        QTorusElement::default()
    }

    pub fn term(a: &Exponent, c: LaurentHalfQ) -> Self {
        let mut out = QTorusElement::zero();
        out.add_term(a, &c);
        out
    }

    fn add_term(&mut self, a: &Exponent, c: &LaurentHalfQ) {
        if c.is_zero() {
            return;
        }
        let key: Vec<(Edge, i64)> = a.iter().filter(|(_, x)| **x != 0).map(|(e, x)| (*e, *x)).collect();
        let slot = self.terms.entry(key.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &LaurentHalfQ)> {
        self.terms.iter().map(|(k, c)| (k.iter().copied().collect(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &QTorusElement) -> QTorusElement {
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(&a, c);
        }
        out
    }

    pub fn mul(&self, other: &QTorusElement, torus: &QuantumTorus) -> Result<QTorusElement> {
        let mut out = QTorusElement::zero();
        for (a, c) in self.terms() {
            torus.check(&a)?;
            for (b, d) in other.terms() {
                torus.check(&b)?;
                let shift = torus.twist(&a, &b) as i32;
                let mut sum = a.clone();
                for (f, y) in &b {
                    *sum.entry(*f).or_insert(0) += y;
                }
                out.add_term(&sum, &(c * d).shift(shift));
            }
        }
        Ok(out)
    }

    /// Substitutes `Δ_q^e` for `X_e`; only for nonnegative exponents.
    pub fn to_qelement(&self) -> Option<QElement> {
        let mut out = QElement::zero();
        for (a, c) in self.terms() {
            let mut prod = QElement::scalar(c.clone());
            for (e, x) in a {
                if x < 0 {
                    return None;
                }
                let d = qplucker_label(e.into());
                for _ in 0..x {
                    prod = prod.mul(&d);
                }
            }
            out = out.add(&prod);
        }
        Some(out)
    }
}

/// `M(a) = q^{½ Σ_{e<f} a_e a_f L(f,e)} X^a`.
pub fn toric_monomial(a: &Exponent, torus: &QuantumTorus) -> Result<QTorusElement> {
    torus.check(a)?;
    let mut half = 0;
    for (e, x) in a {
        for (f, y) in a.range(..*e) {
            // f < e
            half += y * x * torus.l(*e, *f);
        }
    }
    Ok(QTorusElement::term(a, LaurentHalfQ::monomial(1, half as i32)))
}
