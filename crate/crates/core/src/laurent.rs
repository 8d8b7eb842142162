//! Exact Laurent polynomials in two variables over the integers.
//!
//! Terms live in a sorted map keyed by the exponent pair (i, j) for
//! x^i y^j, with arbitrary-precision coefficients and no stored zeros, so
//! equality is structural and serialization is canonical. Exponents may be
//! negative.
//!
//! The canonical text form is the term list sorted by descending (i, j),
//! each term printed as `coeff x^i y^j`, joined by " + ":
//!
//! ```text
//! x^3 - x y^2 + 1   ->   "1 x^3 y^0 + -1 x^1 y^2 + 1 x^0 y^0"
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A Laurent polynomial in x and y with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    #[must_use]
    pub fn zero() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// The single term c x^i y^j (the zero polynomial when c = 0).
    #[must_use]
    pub fn monomial(i: i64, j: i64, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// Builds from (x-exponent, y-exponent, coefficient) triples, combining
    /// repeats and dropping zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in iter {
            p.add_term(i, j, c.into());
        }
        p
    }

    fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending (i, j) order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    #[must_use]
    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Smallest x-exponent over all terms (None for the zero polynomial).
    #[must_use]
    pub fn min_x_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(i, _)| i).min()
    }

    #[must_use]
    pub fn min_y_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, j)| j).min()
    }

    #[must_use]
    pub fn max_x_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    #[must_use]
    pub fn max_y_exp(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Multiplies by x^di y^dj (shifts every exponent pair).
    #[must_use]
    pub fn mul_monomial(&self, di: i64, dj: i64, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), k)| ((i + di, j + dj), k * c))
                .collect(),
        }
    }

    /// Divides out the monomial content x^min_x y^min_y, returning the
    /// shifted polynomial and the extracted exponent pair. Off the
    /// coordinate axes this does not change the zero set.
    #[must_use]
    pub fn strip_monomial_content(&self) -> (Self, (i64, i64)) {
        match (self.min_x_exp(), self.min_y_exp()) {
            (Some(mx), Some(my)) => (self.mul_monomial(-mx, -my, &BigInt::one()), (mx, my)),
            _ => (Self::zero(), (0, 0)),
        }
    }

    /// d/dx, termwise: c x^i y^j -> c*i x^(i-1) y^j.
    #[must_use]
    pub fn partial_x(&self) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in self.terms() {
            if i != 0 {
                p.add_term(i - 1, j, c * BigInt::from(i));
            }
        }
        p
    }

    /// d/dy, termwise.
    #[must_use]
    pub fn partial_y(&self) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in self.terms() {
            if j != 0 {
                p.add_term(i, j - 1, c * BigInt::from(j));
            }
        }
        p
    }

    /// Nonnegative integer power by repeated squaring.
    #[must_use]
    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The ring map x -> x^a y^b, y -> x^c y^d determined by monomial
    /// images; exponents transform by the matrix ((a, b), (c, d)).
    #[must_use]
    pub fn monomial_substitute(&self, x_image: (i64, i64), y_image: (i64, i64)) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in self.terms() {
            let ni = i
                .checked_mul(x_image.0)
                .and_then(|v| v.checked_add(j.checked_mul(y_image.0).expect("exponent overflow")))
                .expect("exponent overflow");
            let nj = i
                .checked_mul(x_image.1)
                .and_then(|v| v.checked_add(j.checked_mul(y_image.1).expect("exponent overflow")))
                .expect("exponent overflow");
            p.add_term(ni, nj, c.clone());
        }
        p
    }

    /// Substitutes a fixed value for x, leaving a polynomial in y alone.
    /// Requires every x-exponent to be nonnegative.
    #[must_use]
    pub fn restrict_x_to_zero(&self) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in self.terms() {
            assert!(i >= 0, "restriction to x = 0 needs nonnegative x-exponents");
            if i == 0 {
                p.add_term(0, j, c.clone());
            }
        }
        p
    }

    /// Substitutes y = 0; requires nonnegative y-exponents.
    #[must_use]
    pub fn restrict_y_to_zero(&self) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in self.terms() {
            assert!(j >= 0, "restriction to y = 0 needs nonnegative y-exponents");
            if j == 0 {
                p.add_term(i, 0, c.clone());
            }
        }
        p
    }
}

impl std::ops::Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl std::ops::Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl std::ops::Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(
                    i1.checked_add(i2).expect("exponent overflow"),
                    j1.checked_add(j2).expect("exponent overflow"),
                    c1 * c2,
                );
            }
        }
        out
    }
}

impl std::fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| format!("{c} x^{i} y^{j}"))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
