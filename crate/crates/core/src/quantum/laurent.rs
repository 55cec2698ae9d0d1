//! Laurent polynomials in `q^{1/2}` with integer coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponents count powers of `q^{1/2}`, so `q` itself is exponent 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentHalfQ {
    terms: BTreeMap<i32, i64>,
}

impl LaurentHalfQ {
    pub fn zero() -> Self {
        LaurentHalfQ::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · q^{half/2}`.
    pub fn monomial(c: i64, half: i32) -> Self {
        let mut out = LaurentHalfQ::zero();
        out.add_term(c, half);
        out
    }

    /// `q^n`.
    pub fn q_pow(n: i32) -> Self {
        Self::monomial(1, 2 * n)
    }

    /// `q − q^{-1}`.
    pub fn q_minus_q_inv() -> Self {
        &Self::q_pow(1) - &Self::q_pow(-1)
    }

    pub fn add_term(&mut self, c: i64, half: i32) {
        if c == 0 {
            return;
        }
        match self.terms.entry(half) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(h, c)| (*h, *c))
    }

    /// `(coefficient, half exponent)` of a single term.
    pub fn as_monomial(&self) -> Option<(i64, i32)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(h, c)| (*c, *h)),
            _ => None,
        }
    }

    /// Multiplies by `q^{half/2}`.
    pub fn shift(&self, half: i32) -> Self {
        LaurentHalfQ { terms: self.terms.iter().map(|(h, c)| (h + half, *c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = LaurentHalfQ::zero();
        for (h, c) in &self.terms {
            out.add_term(k * c, *h);
        }
        out
    }

    /// Value at `q^{1/2} = 1`.
    pub fn specialize(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }
}

impl Add for &LaurentHalfQ {
    type Output = LaurentHalfQ;

    fn add(self, rhs: &LaurentHalfQ) -> LaurentHalfQ {
        let mut out = self.clone();
        for (h, c) in &rhs.terms {
            out.add_term(*c, *h);
        }
        out
    }
}

impl Sub for &LaurentHalfQ {
    type Output = LaurentHalfQ;

    fn sub(self, rhs: &LaurentHalfQ) -> LaurentHalfQ {
        self + &(-rhs)
    }
}

impl Neg for &LaurentHalfQ {
    type Output = LaurentHalfQ;

    fn neg(self) -> LaurentHalfQ {
        self.scale(-1)
    }
}

impl Mul for &LaurentHalfQ {
    type Output = LaurentHalfQ;

    fn mul(self, rhs: &LaurentHalfQ) -> LaurentHalfQ {
        let mut out = LaurentHalfQ::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(c * d, a + b);
            }
        }
        out
    }
}

/// `q^{-1/2}`-style rendering, highest power first.
impl fmt::Display for LaurentHalfQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (h, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if *h == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            match (h % 2 == 0, *h) {
                (true, 2) => write!(f, "q")?,
                (true, _) => write!(f, "q^{{{}}}", h / 2)?,
                (false, _) => write!(f, "q^{{{}/2}}", h)?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentHalfQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i32, i64)> = self.terms().collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentHalfQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i32, i64)>::deserialize(d)?;
        let mut out = LaurentHalfQ::zero();
        for (h, c) in pairs {
            out.add_term(c, h);
        }
        Ok(out)
    }
}
