//! Quantum Plücker coordinates in normal form, their quasi-commutation and
//! the short quantum Plücker relation.

use infgon::quantum::{normal_form, verify_quantum_plucker, verify_quasi_commute, Letter};
use infgon::{l_entry, qplucker, LaurentHalfQ, PluckerLabel};

fn main() -> infgon::Result<()> {
    let word = [Letter::new(1, 1), Letter::new(2, 2)];
    println!("X11 X22 = {}", normal_form(&word, &LaurentHalfQ::one()));
    println!("Δq^{{12}} = {}", qplucker(1, 2)?);
    let p = |i, j| PluckerLabel::new(i, j);
    for (x, y) in [(p(1, 2)?, p(3, 4)?), (p(1, 3)?, p(1, 5)?), (p(1, 2)?, p(2, 3)?), (p(1, 4)?, p(2, 3)?)] {
        println!("L({x},{y}) = {}, normal form gives {}", l_entry(x, y)?, verify_quasi_commute(x, y)?);
    }
    println!("{}", l_entry(p(1, 3)?, p(2, 5)?).unwrap_err());
    println!("Δ12 Δ34 = q^-1 Δ13 Δ24 + q Δ14 Δ23: {}", verify_quantum_plucker(1, 2, 3, 4)?);
    Ok(())
}
