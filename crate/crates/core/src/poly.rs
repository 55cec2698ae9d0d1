//! Sparse multivariate polynomials with integer coefficients, and exact
//! rational functions built from them.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A monomial as sorted `(variable, exponent)` pairs with positive exponents.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of the smallest variable where the two differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial<V>(Vec<(V, u32)>);

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: V) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(V, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        out.push((va.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, Some(y)) => {
                    out.push((*y).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// `self / other` when every exponent of `other` fits.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut it = other.0.iter().peekable();
        for (v, e) in &self.0 {
            let mut e = *e;
            if let Some((w, f)) = it.peek() {
                match w.cmp(v) {
                    Ordering::Less => return None,
                    Ordering::Equal => {
                        e = e.checked_sub(*f)?;
                        it.next();
                    }
                    Ordering::Greater => {}
                }
            }
            if e > 0 {
                out.push((v.clone(), e));
            }
        }
        if it.next().is_some() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .filter_map(|(v, e)| {
                    let f = other.exponent(v);
                    (f > 0).then(|| (v.clone(), (*e).min(f)))
                })
                .collect(),
        )
    }
}

impl<V: Ord> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        let da: u32 = self.0.iter().map(|(_, e)| e).sum();
        let db: u32 = other.0.iter().map(|(_, e)| e).sum();
        da.cmp(&db).then_with(|| {
            for (x, y) in self.0.iter().zip(&other.0) {
                // Smaller variable present means a larger exponent there.
                match x.0.cmp(&y.0) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match x.1.cmp(&y.1) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl<V: Ord> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with `i64` coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<V: Ord> {
    terms: BTreeMap<Monomial<V>, i64>,
}

impl<V: Ord + Clone> Default for Poly<V> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<V: Ord + Clone> Poly<V> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn var(v: V) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn term(c: i64, m: Monomial<V>) -> Self {
        let mut p = Poly::zero();
        p.add_term(c, m);
        p
    }

    pub fn add_term(&mut self, c: i64, m: Monomial<V>) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, i64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial<V>, i64)> {
        self.terms.iter().next_back().map(|(m, c)| (m, *c))
    }

    pub fn as_monomial(&self) -> Option<(i64, &Monomial<V>)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(m, c)| (*c, m)),
            _ => None,
        }
    }

    /// Gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> i64 {
        self.terms.values().fold(0, |g, c| gcd(g, *c))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial<V> {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Poly::zero();
        for (m, d) in &self.terms {
            out.add_term(c * d, m.clone());
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial<V>) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), *c)).collect() }
    }

    /// Divides every term by `m`; `None` unless all divide exactly.
    pub fn div_monomial(&self, m: &Monomial<V>) -> Option<Self> {
        let terms = self.terms.iter().map(|(k, c)| k.div(m).map(|q| (q, *c))).collect::<Option<BTreeMap<_, _>>>()?;
        Some(Poly { terms })
    }

    /// Divides every coefficient by `c`; `None` unless exact.
    pub fn div_scalar(&self, c: i64) -> Option<Self> {
        if c == 0 || self.terms.values().any(|d| d % c != 0) {
            return None;
        }
        Some(Poly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d / c)).collect() })
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly<V>) -> Option<Self> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc);
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            // With a single divisor, exact divisibility forces the leading
            // term of every intermediate remainder to be divisible.
            let qm = m.div(&lm)?;
            if c % lc != 0 {
                return None;
            }
            let t = Poly::term(c / lc, qm);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Substitutes a polynomial for every variable.
    pub fn substitute<W: Ord + Clone>(&self, f: &impl Fn(&V) -> Poly<W>) -> Poly<W> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(*c);
            for (v, e) in &m.0 {
                t = &t * &f(v).pow(*e);
            }
            out = &out + &t;
        }
        out
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl<V: Ord + Clone> Add for &Poly<V> {
    type Output = Poly<V>;

    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*c, m.clone());
        }
        out
    }
}

impl<V: Ord + Clone> Sub for &Poly<V> {
    type Output = Poly<V>;

    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-*c, m.clone());
        }
        out
    }
}

impl<V: Ord + Clone> Mul for &Poly<V> {
    type Output = Poly<V>;

    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(c * d, a.mul(b));
            }
        }
        out
    }
}

impl<V: Ord + Clone> Neg for &Poly<V> {
    type Output = Poly<V>;

    fn neg(self) -> Poly<V> {
        self.scale(-1)
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            let sep = if n > 0 { " " } else { "" };
            write!(f, "{sep}{sign}")?;
            if n > 0 {
                write!(f, " ")?;
            }
            let abs = c.abs();
            if abs != 1 || m.is_one() {
                write!(f, "{abs}")?;
            }
            for (v, e) in &m.0 {
                write!(f, "{v}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A quotient of polynomials in canonical form.
///
/// The denominator is split into its monomial content and the rest; the rest
/// is cancelled against the numerator whenever it divides it, common
/// variables are cancelled, the integer content is removed, and the
/// denominator's leading coefficient is positive. On Laurent polynomials
/// this form is unique, which is all structural equality is relied on for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalExpr<V: Ord> {
    num: Poly<V>,
    den: Poly<V>,
}

impl<V: Ord + Clone> RationalExpr<V> {
    pub fn new(num: Poly<V>, den: Poly<V>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    pub fn from_poly(p: Poly<V>) -> Self {
        Self::reduce(p, Poly::one())
    }

    pub fn var(v: V) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn numerator(&self) -> &Poly<V> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<V> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the denominator is a single monomial.
    pub fn is_laurent(&self) -> bool {
        self.den.as_monomial().is_some()
    }

    fn reduce(mut num: Poly<V>, mut den: Poly<V>) -> Self {
        if num.is_zero() {
            return RationalExpr { num, den: Poly::one() };
        }
        let dm = den.monomial_content();
        let rest = den.div_monomial(&dm).expect("content divides");
        if rest.as_monomial().is_none() {
            let k = rest.content();
            let prim = rest.div_scalar(k).expect("content divides");
            if let Some(q) = num.div_exact(&prim) {
                num = q;
                den = Poly::term(k, dm);
            }
        }
        let common = num.monomial_content().gcd(&den.monomial_content());
        if !common.is_one() {
            num = num.div_monomial(&common).expect("common monomial divides");
            den = den.div_monomial(&common).expect("common monomial divides");
        }
        let mut g = gcd(num.content(), den.content());
        if den.leading().is_some_and(|(_, c)| c < 0) {
            g = -g;
        }
        RationalExpr {
            num: num.div_scalar(g).expect("content divides"),
            den: den.div_scalar(g).expect("content divides"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        Self::reduce(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    /// `None` when dividing by zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        Some(Self::reduce(&self.num * &other.den, &self.den * &other.num))
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for RationalExpr<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = Poly<u8>;

    fn x(v: u8) -> P {
        P::var(v)
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-4i64..=4, prop::collection::vec((0u8..3, 0u32..3), 0..3)), 0..4).prop_map(|terms| {
            let mut p = P::zero();
            for (c, vars) in terms {
                let m = vars.into_iter().fold(Poly::one(), |acc, (v, e)| &acc * &x(v).pow(e));
                p = &p + &m.scale(c);
            }
            p
        })
    }

    #[test]
    fn arithmetic_basics() {
        let p = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        assert_eq!(p, &x(0).pow(2) - &x(1).pow(2));
        assert!((&p - &p).is_zero());
        assert_eq!(p.div_exact(&(&x(0) + &x(1))), Some(&x(0) - &x(1)));
        assert_eq!((&x(0) + &P::one()).div_exact(&x(1)), None);
    }

    #[test]
    fn grlex_order() {
        let m = |v: &[(u8, u32)]| Monomial(v.to_vec());
        assert!(m(&[(0, 1), (1, 1)]) > m(&[(2, 1)]));
        assert!(m(&[(0, 1)]) > m(&[(1, 1)]));
        assert!(m(&[(0, 1), (2, 1)]) < m(&[(0, 1), (1, 1)]));
        assert!(m(&[(1, 2)]) < m(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn rational_reduction() {
        let r = RationalExpr::new(&x(0) * &(&x(1) + &x(2)), (&x(1) + &x(2)).scale(-2)).unwrap();
        assert_eq!(r, RationalExpr::new(x(0).scale(-1), P::constant(2)).unwrap());
        let inv = RationalExpr::new(P::one(), x(0)).unwrap();
        assert_eq!(inv.mul(&RationalExpr::var(0)), RationalExpr::from_poly(P::one()));
        assert!(RationalExpr::new(P::one(), P::zero()).is_none());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn laurent_forms_are_canonical(a in arb_poly(), b in arb_poly(), e in 0u32..3) {
            prop_assume!(!b.is_zero() && !a.is_zero());
            let mono = x(0).pow(e);
            let r1 = RationalExpr::new(a.clone(), mono.clone()).unwrap();
            let r2 = RationalExpr::new(&a * &b, &mono * &b).unwrap();
            prop_assert_eq!(r1, r2);
        }
    }
}
