//! Quantum deformation: the quantum matrix algebra on two rows, quantum
//! Plücker coordinates, their quasi-commutation and quantum mutation.

pub mod laurent;
pub mod lmatrix;
pub mod matrix;
pub mod mutation;
pub mod torus;

pub use laurent::LaurentHalfQ;
pub use lmatrix::{
    compatibility_check, compatibility_check_with, compatibility_defect, l_entry, proportional_by_q_power,
    verify_quantum_plucker, verify_quasi_commute,
};
pub use matrix::{normal_form, qplucker, qplucker_label, Letter, QElement, QWord};
pub use mutation::{quantum_mutate, Certificate, QuantumMutation, QuantumRelation};
pub use torus::{toric_monomial, Exponent, QTorusElement, QuantumTorus};
