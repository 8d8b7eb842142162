//! Dense univariate polynomials over the integers.
//!
//! Supports the exact operations the smoothness checks need: content and
//! primitive part, gcd by the primitive polynomial remainder sequence,
//! exact division (asserted, used by fraction-free elimination), squarefree
//! part, and rational root search by trial division of the extreme
//! coefficients.
//!
//! Coefficients are arbitrary-precision; `coeffs[i]` is the coefficient of
//! `x^i` and the leading coefficient is always nonzero (zero = empty vec).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A polynomial in one variable with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational {
    pub num: BigInt,
    pub den: BigInt,
}

impl Rational {
    /// Reduces num/den and fixes the sign of the denominator.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// Builds from low-to-high coefficients, trimming leading zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// c * x^deg.
    pub fn monomial(deg: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Is a nonzero constant.
    pub fn is_unit_candidate(&self) -> bool {
        self.degree() == Some(0)
    }

    /// Index of the lowest nonzero coefficient; None for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by x^v; requires v <= valuation.
    pub fn shift_down(&self, v: usize) -> Self {
        if v == 0 {
            return self.clone();
        }
        assert!(self.valuation().is_some_and(|val| val >= v), "shift below valuation");
        UniPoly { coeffs: self.coeffs[v..].to_vec() }
    }

    /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; zero stays zero.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// P(u/v) * v^deg — zero exactly when u/v is a root.
    pub fn eval_scaled(&self, u: &BigInt, v: &BigInt) -> BigInt {
        let Some(n) = self.degree() else { return BigInt::zero() };
        let mut acc = self.coeffs[n].clone();
        let mut vpow = BigInt::one();
        for i in (0..n).rev() {
            vpow *= v;
            acc = acc * u + &self.coeffs[i] * &vpow;
        }
        acc
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Exact quotient; panics if `other` does not divide `self` in Z[x].
    pub fn exact_div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let dn = other.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let n = self.degree().expect("nonzero");
        assert!(n >= dn, "degree too small for exact division");
        let mut q = vec![BigInt::zero(); n - dn + 1];
        let lc = other.leading_coeff();
        for i in (0..q.len()).rev() {
            let top = rem[i + dn].clone();
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(&lc);
            assert!(r.is_zero(), "division is not exact");
            for (j, c) in other.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * c;
            }
            q[i] = qi;
        }
        assert!(rem.iter().all(Zero::is_zero), "division is not exact");
        Self::from_coeffs(q)
    }

    /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
    fn pseudo_rem(&self, g: &Self) -> Self {
        assert!(!g.is_zero());
        let dg = g.degree().unwrap();
        let lc = g.leading_coeff();
        let mut f = self.clone();
        while let Some(df) = f.degree() {
            if df < dg {
                break;
            }
            let top = f.leading_coeff();
            // f <- lc*f - top*x^(df-dg)*g strictly lowers the degree.
            f = f.scale(&lc).sub(&g.mul(&Self::monomial(df - dg, top)));
        }
        f
    }

    /// Primitive gcd, normalized to positive leading coefficient.
    /// gcd(0, q) = primitive part of q.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading_coeff().is_negative() {
            a = a.neg();
        }
        a
    }

    /// Product of the distinct irreducible factors (primitive, positive lc).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.primitive_part();
        if p.degree() == Some(0) {
            return Self::constant(1);
        }
        let g = p.gcd(&p.derivative());
        let mut sf = p.exact_div(&g).primitive_part();
        if sf.leading_coeff().is_negative() {
            sf = sf.neg();
        }
        sf
    }

    /// All rational roots, found by trial division of the constant and
    /// leading coefficients. Returns None when either bound exceeds the
    /// enumeration budget (the caller reports the check as inconclusive
    /// rather than guessing).
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        const BUDGET: u64 = 1_000_000_000_000;
        if self.is_zero() {
            return None; // every rational is a root; not enumerable
        }
        let v = self.valuation().unwrap();
        let p = self.shift_down(v);
        let mut roots = Vec::new();
        if v > 0 {
            roots.push(Rational::new(BigInt::zero(), BigInt::one()));
        }
        if p.degree() == Some(0) {
            return Some(roots);
        }
        let a0 = p.coeff(0).magnitude().clone();
        let an = p.leading_coeff().magnitude().clone();
        let a0: u64 = a0.try_into().ok().filter(|&x| x <= BUDGET)?;
        let an: u64 = an.try_into().ok().filter(|&x| x <= BUDGET)?;
        for u in divisors(a0) {
            for v in divisors(an) {
                for sign in [1i64, -1] {
                    let num = BigInt::from(sign) * BigInt::from(u);
                    let den = BigInt::from(v);
                    if p.eval_scaled(&num, &den).is_zero() {
                        let r = Rational::new(num, den);
                        if !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        Some(roots)
    }

    /// Renders with the given variable name, descending powers.
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push_str(var),
                (1, false) => out.push_str(&format!("{mag} {var}")),
                (_, true) => out.push_str(&format!("{var}^{i}")),
                (_, false) => out.push_str(&format!("{mag} {var}^{i}")),
            }
        }
        out
    }
}

fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 1 + 2x
        let b = p(&[3, 0, 1]); // 3 + x^2
        assert_eq!(a.add(&b), p(&[4, 2, 1]));
        assert_eq!(a.mul(&b), p(&[3, 6, 1, 2]));
        assert_eq!(b.sub(&b), UniPoly::zero());
        assert_eq!(a.derivative(), p(&[2]));
        assert_eq!(p(&[0, 0, 0, 5]).derivative(), p(&[0, 0, 15]));
    }

    #[test]
    fn eval_and_scaled_eval() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(7));
        // f(3/2) * 4 = 9 - 8 = 1
        assert_eq!(f.eval_scaled(&BigInt::from(3), &BigInt::from(2)), BigInt::from(1));
        assert_eq!(
            p(&[-1, 2]).eval_scaled(&BigInt::from(1), &BigInt::from(2)),
            BigInt::zero()
        );
    }

    #[test]
    fn content_and_primitive() {
        let f = p(&[6, -9, 12]);
        assert_eq!(f.content(), BigInt::from(3));
        assert_eq!(f.primitive_part(), p(&[2, -3, 4]));
        assert_eq!(UniPoly::zero().content(), BigInt::zero());
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]); // (x-1)(x+1)
        assert_eq!(f.exact_div(&p(&[-1, 1])), p(&[1, 1]));
        let g = p(&[2, 4]).mul(&p(&[3, -1, 5]));
        assert_eq!(g.exact_div(&p(&[2, 4])), p(&[3, -1, 5]));
    }

    #[test]
    #[should_panic(expected = "not exact")]
    fn exact_division_rejects_inexact() {
        p(&[1, 0, 1]).exact_div(&p(&[-1, 1]));
    }

    #[test]
    fn gcd_examples() {
        // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1
        let a = p(&[-1, 1]).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[-3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        // Coprime
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), p(&[1]));
        // gcd(0, q) = primitive q
        assert_eq!(UniPoly::zero().gcd(&p(&[4, 8])), p(&[1, 2]));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
        // Sign normalization
        assert_eq!(p(&[1, -1]).gcd(&p(&[2, -2])), p(&[-1, 1]));
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+3) -> (x-1)(x+3)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[3, 1]));
        assert_eq!(f.squarefree_part(), p(&[-1, 1]).mul(&p(&[3, 1])));
        assert_eq!(p(&[0, 0, 7]).squarefree_part(), p(&[0, 1]));
        assert_eq!(p(&[5]).squarefree_part(), p(&[1]));
    }

    #[test]
    fn rational_root_search() {
        // 2x^2 - x - 1 = (2x + 1)(x - 1): roots 1, -1/2
        let roots = p(&[-1, -1, 2]).rational_roots().unwrap();
        assert!(roots.contains(&Rational::new(BigInt::from(1), BigInt::from(1))));
        assert!(roots.contains(&Rational::new(BigInt::from(-1), BigInt::from(2))));
        assert_eq!(roots.len(), 2);
        // x^2 + 1: none
        assert!(p(&[1, 0, 1]).rational_roots().unwrap().is_empty());
        // x^3 - 2x^2 = x^2 (x - 2): roots 0 and 2
        let roots = p(&[0, 0, -2, 1]).rational_roots().unwrap();
        assert!(roots.contains(&Rational::new(BigInt::zero(), BigInt::one())));
        assert!(roots.contains(&Rational::new(BigInt::from(2), BigInt::from(1))));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 0, 0, 0, 0, 0, 1]).display_with_var("T"), "T^6 + 1");
        assert_eq!(p(&[-1, 0, 1]).display_with_var("T"), "T^2 - 1");
        assert_eq!(p(&[-1, 1]).display_with_var("T"), "T - 1");
        assert_eq!(p(&[2, -3, 1]).display_with_var("x"), "x^2 - 3 x + 2");
        assert_eq!(UniPoly::zero().display_with_var("x"), "0");
        assert_eq!(p(&[-5]).display_with_var("x"), "-5");
    }

    #[test]
    fn divisor_enumeration() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-8i64..9, 0..6)
            .prop_map(|v| UniPoly::from_coeffs(v.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            let g = a.gcd(&b);
            if !g.is_zero() {
                // exact_div panics if not exact; primitive parts make the
                // quotient integral.
                let _ = a.primitive_part().exact_div(&g);
                let _ = b.primitive_part().exact_div(&g);
            }
        }

        #[test]
        fn gcd_detects_common_factor(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(c.degree().unwrap_or(0) >= 1);
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = a.mul(&c).gcd(&b.mul(&c));
            prop_assert!(g.degree() >= c.degree());
        }

        #[test]
        fn mul_then_exact_div_roundtrip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).exact_div(&b), a);
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), x in -10i64..11) {
            let x = BigInt::from(x);
            prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!(a.add(&b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn squarefree_divides(a in arb_poly()) {
            prop_assume!(!a.is_zero());
            let sf = a.squarefree_part();
            let _ = a.primitive_part().exact_div(&sf);
        }
    }
}
