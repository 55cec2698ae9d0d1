//! The two-row quantum matrix algebra in PBW normal form.
//!
//! Normal order lists row-2 generators by ascending column, then row-1
//! generators by ascending column. Products are straightened with
//!
//! * `X_{kj}X_{ki} = q^{-1} X_{ki}X_{kj}` for `i < j`,
//! * `X_{1i}X_{2i} = q X_{2i}X_{1i}`,
//! * `X_{1j}X_{2i} = X_{2i}X_{1j}` for `i < j`,
//! * `X_{1i}X_{2j} = X_{2j}X_{1i} + (q − q^{-1}) X_{2i}X_{1j}` for `i < j`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentHalfQ;
use crate::error::{Error, Result};
use crate::plucker::{matrix_var, MatrixPoly, PluckerLabel};
use crate::poly::Poly;

/// A generator `X_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub row: u8,
    pub col: i64,
}

impl Letter {
    pub fn new(row: u8, col: i64) -> Self {
        assert!(row == 1 || row == 2, "quantum matrix rows are 1 and 2");
        Letter { row, col }
    }

    fn key(&self) -> (u8, i64) {
        (if self.row == 2 { 0 } else { 1 }, self.col)
    }
}

/// A normal-ordered monomial stored as `(row, col, multiplicity)` runs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QWord(Vec<(u8, i64, u32)>);

impl QWord {
    pub fn one() -> Self {
        QWord(Vec::new())
    }

    pub fn runs(&self) -> &[(u8, i64, u32)] {
        &self.0
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.0.iter().flat_map(|&(row, col, m)| std::iter::repeat_n(Letter { row, col }, m as usize)).collect()
    }

    fn from_sorted(letters: &[Letter]) -> Self {
        let mut runs: Vec<(u8, i64, u32)> = Vec::new();
        for l in letters {
            match runs.last_mut() {
                Some((r, c, m)) if *r == l.row && *c == l.col => *m += 1,
                _ => runs.push((l.row, l.col, 1)),
            }
        }
        QWord(runs)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|r| r.2).sum()
    }
}

impl fmt::Display for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (row, col, m) in &self.0 {
            write!(f, "X[{row}][{col}]")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// An element of the quantum matrix algebra in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QElement {
    terms: BTreeMap<QWord, LaurentHalfQ>,
}

impl QElement {
    pub fn zero() -> Self {
        QElement::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentHalfQ::one())
    }

    pub fn scalar(c: LaurentHalfQ) -> Self {
        let mut out = QElement::zero();
        out.add_word(QWord::one(), &c);
        out
    }

    fn add_word(&mut self, w: QWord, c: &LaurentHalfQ) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QWord, &LaurentHalfQ)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &QElement) -> QElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &QElement) -> QElement {
        self.add(&other.scale(&LaurentHalfQ::monomial(-1, 0)))
    }

    pub fn scale(&self, c: &LaurentHalfQ) -> QElement {
        let mut out = QElement::zero();
        for (w, d) in &self.terms {
            out.add_word(w.clone(), &(d * c));
        }
        out
    }

    pub fn mul(&self, other: &QElement) -> QElement {
        let mut out = QElement::zero();
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut word = u.letters();
                word.extend(v.letters());
                out = out.add(&normal_form(&word, &(c * d)));
            }
        }
        out
    }

    /// Image at `q^{1/2} = 1`, where the algebra becomes commutative.
    pub fn specialize(&self) -> MatrixPoly {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let mono =
                w.letters().iter().fold(Poly::constant(c.specialize()), |acc, l| &acc * &matrix_var(l.row, l.col));
            out = &out + &mono;
        }
        out
    }
}

/// Straightens `coeff · word` into normal form.
pub fn normal_form(word: &[Letter], coeff: &LaurentHalfQ) -> QElement {
    let mut out = QElement::zero();
    let mut work: Vec<(Vec<Letter>, LaurentHalfQ)> = vec![(word.to_vec(), coeff.clone())];
    while let Some((w, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p].key() > w[p + 1].key()) else {
            out.add_word(QWord::from_sorted(&w), &c);
            continue;
        };
        let (a, b) = (w[p], w[p + 1]);
        let with = |x: Letter, y: Letter| {
            let mut v = w.clone();
            v[p] = x;
            v[p + 1] = y;
            v
        };
        if a.row == b.row {
            // a.col > b.col in the same row.
            work.push((with(b, a), c.shift(-2)));
        } else if a.col == b.col {
            work.push((with(b, a), c.shift(2)));
        } else if a.col > b.col {
            work.push((with(b, a), c));
        } else {
            // X_{1i}X_{2j}, i < j.
            let (i, j) = (a.col, b.col);
            work.push((with(b, a), c.clone()));
            work.push((with(Letter::new(2, i), Letter::new(1, j)), &c * &LaurentHalfQ::q_minus_q_inv()));
        }
    }
    out
}

/// `X_{1i}X_{2j} − q X_{1j}X_{2i}`.
pub fn qplucker(i: i64, j: i64) -> Result<QElement> {
    if i >= j {
        return Err(Error::BadIndexOrder(vec![i, j]));
    }
    Ok(qplucker_label(PluckerLabel::new(i, j)?))
}

pub fn qplucker_label(p: PluckerLabel) -> QElement {
    let (i, j) = (p.i(), p.j());
    let first = normal_form(&[Letter::new(1, i), Letter::new(2, j)], &LaurentHalfQ::one());
    let second = normal_form(&[Letter::new(1, j), Letter::new(2, i)], &LaurentHalfQ::q_pow(1));
    first.sub(&second)
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){w}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<(u8, i64, u32)>,
    coeff: LaurentHalfQ,
}

impl Serialize for QElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> =
            self.terms.iter().map(|(w, c)| TermJson { word: w.0.clone(), coeff: c.clone() }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = QElement::zero();
        for t in terms {
            if t.word.iter().any(|r| r.0 != 1 && r.0 != 2) {
                return Err(serde::de::Error::custom("row must be 1 or 2"));
            }
            let letters: Vec<Letter> = QWord(t.word).letters();
            out = out.add(&normal_form(&letters, &t.coeff));
        }
        Ok(out)
    }
}
