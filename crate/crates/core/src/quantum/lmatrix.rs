//! Quasi-commutation of quantum Plücker coordinates and the compatibility
//! of the exchange matrix with it.

use super::laurent::LaurentHalfQ;
use super::matrix::{qplucker_label, QElement};
use crate::edge::crosses;
use crate::error::{Error, Result};
use crate::plucker::PluckerLabel;
use crate::quiver::b_entry;
use crate::triangulation::TriangulationDesc;

fn as_edges(ij: PluckerLabel, kl: PluckerLabel) -> Result<(crate::Edge, crate::Edge)> {
    Ok((ij.edge()?, kl.edge()?))
}

/// The exponent `L` in `Δ_q^{ij}Δ_q^{kl} = q^L Δ_q^{kl}Δ_q^{ij}`.
///
/// | configuration | value |
/// |---|---|
/// | equal, or one nested strictly inside the other | 0 |
/// | `i < k < j = l`, `i = k < j < l`, `i < j = k < l` | 1 |
/// | `k < i < j = l`, `i = k < l < j`, `k < l = i < j` | −1 |
/// | `i < j < k < l` | 2 |
/// | `k < l < i < j` | −2 |
pub fn l_entry(ij: PluckerLabel, kl: PluckerLabel) -> Result<i64> {
    let (a, b) = as_edges(ij, kl)?;
    if crosses(a, b) {
        return Err(Error::NotQuasiCommuting(a, b));
    }
    let (i, j, k, l) = (ij.i(), ij.j(), kl.i(), kl.j());
    Ok(if ij == kl {
        0
    } else if j < k {
        2
    } else if l < i {
        -2
    } else if j == k {
        1
    } else if l == i {
        -1
    } else if j == l {
        if i < k {
            1
        } else {
            -1
        }
    } else if i == k {
        if j < l {
            1
        } else {
            -1
        }
    } else {
        // Strictly nested.
        0
    })
}

/// Finds `s` with `NF(Δ_q^{ij}Δ_q^{kl}) = q^s NF(Δ_q^{kl}Δ_q^{ij})` by normal forms.
pub fn verify_quasi_commute(ij: PluckerLabel, kl: PluckerLabel) -> Result<i64> {
    let (a, b) = as_edges(ij, kl)?;
    let fail = || Error::NotQuasiCommuting(a, b);
    let (x, y) = (qplucker_label(ij), qplucker_label(kl));
    match proportional_by_q_power(&x.mul(&y), &y.mul(&x)) {
        Some(half) if half % 2 == 0 => Ok(i64::from(half / 2)),
        _ => Err(fail()),
    }
}

/// `Δ_q^{ij}Δ_q^{kl} = q^{-1}Δ_q^{ik}Δ_q^{jl} + qΔ_q^{il}Δ_q^{kj}` for `i < k < j < l`.
pub fn verify_quantum_plucker(i: i64, k: i64, j: i64, l: i64) -> Result<bool> {
    if !(i < k && k < j && j < l) {
        return Err(Error::BadIndexOrder(vec![i, k, j, l]));
    }
    let d = |a, b| qplucker_label(PluckerLabel::new(a, b).expect("ordered"));
    let lhs = d(i, j).mul(&d(k, l));
    let rhs = d(i, k)
        .mul(&d(j, l))
        .scale(&LaurentHalfQ::q_pow(-1))
        .add(&d(i, l).mul(&d(k, j)).scale(&LaurentHalfQ::q_pow(1)));
    Ok(lhs == rhs)
}

/// Checks `(BᵀL)_{(i,j),(k,l)} = 2δ` for every mutable arc `(i,j)` whose
/// quadrilateral lies in the window and every edge `(k,l)` of the window.
pub fn compatibility_check(t: &TriangulationDesc, window: (i64, i64)) -> Result<bool> {
    compatibility_check_with(t, window, &l_entry)
}

/// [`compatibility_check`] with a caller-supplied `L`.
pub fn compatibility_check_with(
    t: &TriangulationDesc,
    window: (i64, i64),
    l: &dyn Fn(PluckerLabel, PluckerLabel) -> Result<i64>,
) -> Result<bool> {
    Ok(compatibility_defect(t, window, l)?.is_none())
}

/// The first `((i,j),(k,l), value)` where `BᵀL` differs from `2δ`.
pub fn compatibility_defect(
    t: &TriangulationDesc,
    window: (i64, i64),
    l: &dyn Fn(PluckerLabel, PluckerLabel) -> Result<i64>,
) -> Result<Option<(crate::Edge, crate::Edge, i64)>> {
    let (a, b) = window;
    let edges = t.edges_in_window(a, b)?;
    for &col in edges.iter().filter(|e| e.is_arc() && !t.is_frozen(**e)) {
        let quad = t.quadrilateral_of(col)?;
        if !quad.within(a, b) {
            continue;
        }
        // The column of B is supported on the four sides of the quadrilateral.
        let support: Vec<(crate::Edge, i64)> =
            quad.sides().into_iter().map(|x| Ok((x, b_entry(t, x, col)?))).collect::<Result<_>>()?;
        for &row in &edges {
            let mut sum = 0;
            for &(x, bx) in &support {
                if bx != 0 {
                    sum += bx * l(x.into(), row.into())?;
                }
            }
            let expected = if row == col { 2 } else { 0 };
            if sum != expected {
                return Ok(Some((col, row, sum)));
            }
        }
    }
    Ok(None)
}

/// Whether two quantum elements agree up to a power of `q`.
pub fn proportional_by_q_power(x: &QElement, y: &QElement) -> Option<i32> {
    let (w, c) = y.terms().next()?;
    let d = x.terms().find(|(v, _)| *v == w)?.1;
    let half = d.min_exponent()? - c.min_exponent()?;
    (*x == y.scale(&LaurentHalfQ::monomial(1, half))).then_some(half)
}
