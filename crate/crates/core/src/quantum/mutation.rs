//! Quantum mutation of a cluster variable, checked inside the quantum
//! matrix algebra.

use serde::{Deserialize, Serialize};

use super::laurent::LaurentHalfQ;
use super::matrix::{qplucker_label, QElement};
use super::torus::{toric_monomial, Exponent, QTorusElement, QuantumTorus};
use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::plucker::{ExchangeRelation, PluckerLabel};
use crate::quiver::b_entry;
use crate::triangulation::TriangulationDesc;

/// `Δ_q^{v0v2}Δ_q^{v1v3} = q^{a}Δ_q^{v0v1}Δ_q^{v2v3} + q^{b}Δ_q^{v0v3}Δ_q^{v1v2}`
/// for a quadrilateral `v0 < v1 < v2 < v3`. The two diagonals do not
/// quasi-commute, so the order of the left side matters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumRelation {
    pub lhs: [PluckerLabel; 2],
    pub rhs: [[PluckerLabel; 2]; 2],
    pub qpow: [i64; 2],
}

impl QuantumRelation {
    /// The classical relation obtained at `q = 1`, with the diagonals in the
    /// order of the left side.
    pub fn classical(&self) -> ExchangeRelation {
        ExchangeRelation { lhs: self.lhs, rhs: self.rhs }
    }

    /// Both sides in normal form.
    pub fn sides(&self) -> (QElement, QElement) {
        let d = |p: PluckerLabel| qplucker_label(p);
        let lhs = d(self.lhs[0]).mul(&d(self.lhs[1]));
        let term =
            |n: usize| d(self.rhs[n][0]).mul(&d(self.rhs[n][1])).scale(&LaurentHalfQ::q_pow(self.qpow[n] as i32));
        (lhs, term(0).add(&term(1)))
    }

    pub fn holds(&self) -> bool {
        let (l, r) = self.sides();
        l == r
    }
}

impl std::fmt::Display for QuantumRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let q = |n: i64| match n {
            0 => String::new(),
            1 => "q".to_string(),
            n => format!("q^{{{n}}}"),
        };
        let [[a, b], [c, d]] = self.rhs;
        write!(f, "{}{} = {}{}{} + {}{}{}", self.lhs[0], self.lhs[1], q(self.qpow[0]), a, b, q(self.qpow[1]), c, d)
    }
}

/// Both sides of `μ(Δ_q^{ij})·Δ_q^{ij} = Δ_q^{mn}·Δ_q^{ij}` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub mutated_times_old: QElement,
    pub new_times_old: QElement,
}

impl Certificate {
    pub fn verifies(&self) -> bool {
        self.mutated_times_old == self.new_times_old
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumMutation {
    pub new_label: PluckerLabel,
    pub relation: QuantumRelation,
    pub certificate: Certificate,
}

/// Mutates the quantum cluster variable on `e` using the exchange matrix
/// column of `e` and the quasi-commutation matrix of its quadrilateral.
///
/// `μ(X_e) = M(−e_e + Σ_{b>0} b·e_x) + M(−e_e − Σ_{b<0} b·e_x)`. Rather than
/// invert `Δ_q^e`, both terms are multiplied by `X_e` inside the torus, which
/// leaves nonnegative exponents that can be substituted by quantum Plücker
/// coordinates and compared in normal form. The certificate multiplies on the
/// right; the relation multiplies on whichever side puts `Δ_q^{v0v2}` first.
pub fn quantum_mutate(t: &TriangulationDesc, e: Edge) -> Result<QuantumMutation> {
    let quad = t.quadrilateral_of(e)?;
    let new_arc = quad.other_diagonal();
    let sides = quad.sides();
    let torus = QuantumTorus::new(sides.iter().copied().chain([e]))?;
    let fail = || Error::CertificateFailed(e);
    let mut plus: Exponent = [(e, -1)].into_iter().collect();
    let mut minus = plus.clone();
    for &x in &sides {
        let b = b_entry(t, x, e)?;
        if b > 0 {
            plus.insert(x, b);
        } else if b < 0 {
            minus.insert(x, -b);
        }
    }
    let mu = toric_monomial(&plus, &torus)?.add(&toric_monomial(&minus, &torus)?);
    let x_e = QTorusElement::term(&[(e, 1)].into_iter().collect(), LaurentHalfQ::one());

    let right = mu.mul(&x_e, &torus)?;
    let mutated_times_old = right.to_qelement().ok_or_else(fail)?;
    let new_times_old = qplucker_label(new_arc.into()).mul(&qplucker_label(e.into()));
    let certificate = Certificate { mutated_times_old, new_times_old };
    if !certificate.verifies() {
        return Err(fail());
    }

    let [v0, _, v2, _] = quad.vertices;
    let (lhs, product) = if e == Edge::raw(v0, v2) {
        ([e.into(), new_arc.into()], x_e.mul(&mu, &torus)?)
    } else {
        ([new_arc.into(), e.into()], right)
    };
    let classical = ExchangeRelation::for_quad(&quad);
    let mut qpow = [None; 2];
    for (a, c) in product.terms() {
        let labels: Vec<PluckerLabel> =
            a.iter().flat_map(|(x, m)| std::iter::repeat_n(PluckerLabel::from(*x), (*m).max(0) as usize)).collect();
        let (coeff, half) = c.as_monomial().ok_or_else(fail)?;
        let n = classical.rhs.iter().position(|pair| labels == pair[..]).ok_or_else(fail)?;
        if coeff != 1 || half % 2 != 0 || qpow[n].is_some() {
            return Err(fail());
        }
        qpow[n] = Some(i64::from(half / 2));
    }
    let [Some(a), Some(b)] = qpow else { return Err(fail()) };
    let relation = QuantumRelation { lhs, rhs: classical.rhs, qpow: [a, b] };
    if !relation.holds() {
        return Err(fail());
    }
    Ok(QuantumMutation { new_label: new_arc.into(), relation, certificate })
}
