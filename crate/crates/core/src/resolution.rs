//! Minimal resolution of the cyclic-quotient chart singularities by
//! continued fractions.
//!
//! For coprime p, q >= 1 the cone spanned by (0,1) and (-p,-q) is subdivided
//! by rays l_0, ..., l_(s+1) computed from the expansion
//!
//! ```text
//! q = p*k + r,   r_(-1) = p,  r_0 = r,
//! b_j = ceil(r_(j-2) / r_(j-1)),   r_j = b_j * r_(j-1) - r_(j-2),
//! ```
//!
//! stopping at r_s = 0 (every b_j >= 2). The rays follow the same
//! three-term recursion, l_(j+1) = b_j * l_j - l_(j-1) from l_0 = (0,1),
//! l_1 = (-1,-k), and the terminal ray is checked — not assumed — to equal
//! (-p,-q). Consecutive rays span unimodular cones, so the subdivision is a
//! resolution; the j-th exceptional ray has self-intersection -b_j.
//!
//! The companion sequence t_0 = 0, t_1 = 1, t_(j+1) = b_j * t_j - t_(j-1)
//! is strictly increasing and drives the chart polynomials of the curve.

use crate::cover::Weights;
use crate::error::{Error, Result};
use crate::lattice::{det, gcd_i64, LatticePoint};
use crate::laurent::LaurentPoly2;

/// Resolution data for one singular chart cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJResolution {
    /// Quotient in q = p*k + r.
    pub k: i64,
    /// Remainder in q = p*k + r (0 only when p = 1).
    pub r: i64,
    /// Continued-fraction digits b_1, ..., b_s, each >= 2.
    pub b: Vec<i64>,
    /// r_(-1), r_0, ..., r_s: starts at p, strictly decreasing from index 1
    /// onward, ends at 0.
    pub r_seq: Vec<i64>,
    /// t_0, ..., t_(s+1): strictly increasing, ends at p.
    pub t_seq: Vec<i64>,
    /// l_0, ..., l_(s+1): the subdividing rays, l_0 = (0,1) and
    /// l_(s+1) = (-p,-q).
    pub rays: Vec<LatticePoint>,
}

impl HJResolution {
    /// Number of exceptional rays (= number of b digits).
    pub fn s(&self) -> usize {
        self.b.len()
    }

    /// Self-intersection numbers of the exceptional curves: -b_j.
    pub fn self_intersections(&self) -> Vec<i64> {
        self.b.iter().map(|b| -b).collect()
    }
}

/// Resolves the cone spanned by (0,1) and (-p,-q) for coprime p, q >= 1.
///
/// For p = 1 the cone is already smooth: s = 0, no digits, rays
/// ((0,1), (-1,-q)).
pub fn hj_resolve_pair(p: i64, q: i64) -> Result<HJResolution> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidWeights(format!(
            "cone parameters must be positive, got ({p}, {q})"
        )));
    }
    if gcd_i64(p, q) != 1 {
        return Err(Error::InvalidWeights(format!(
            "cone parameters must be coprime, got ({p}, {q})"
        )));
    }
    let k = q / p;
    let r = q % p;

    let mut r_seq = vec![p, r];
    let mut b = Vec::new();
    while *r_seq.last().unwrap() != 0 {
        let rj1 = r_seq[r_seq.len() - 1];
        let rj2 = r_seq[r_seq.len() - 2];
        let bj = (rj2 + rj1 - 1) / rj1; // ceil(rj2 / rj1)
        assert!(bj >= 2, "continued-fraction digit must be >= 2");
        b.push(bj);
        r_seq.push(bj * rj1 - rj2);
    }

    let mut t_seq = vec![0i64, 1];
    let mut rays = vec![LatticePoint::new(0, 1), LatticePoint::new(-1, -k)];
    for &bj in &b {
        let tj = t_seq[t_seq.len() - 1];
        let tj1 = t_seq[t_seq.len() - 2];
        t_seq.push(bj.checked_mul(tj).and_then(|v| v.checked_sub(tj1)).expect("t overflow"));
        let lj = rays[rays.len() - 1];
        let lj1 = rays[rays.len() - 2];
        rays.push(
            lj.checked_scale(bj)
                .and_then(|v| v.checked_add(&lj1.checked_scale(-1)?))
                .expect("ray overflow"),
        );
    }

    // Every invariant is asserted, not assumed.
    let s = b.len();
    assert_eq!(r_seq.len(), s + 2);
    assert_eq!(t_seq.len(), s + 2);
    assert_eq!(rays.len(), s + 2);
    assert_eq!(*rays.last().unwrap(), LatticePoint::new(-p, -q), "terminal ray mismatch");
    assert_eq!(*t_seq.last().unwrap(), p, "terminal t mismatch");
    for i in 1..r_seq.len() - 1 {
        assert!(r_seq[i] > r_seq[i + 1], "r sequence must strictly decrease");
    }
    for i in 0..t_seq.len() - 1 {
        assert!(t_seq[i] < t_seq[i + 1], "t sequence must strictly increase");
    }
    for i in 0..rays.len() - 1 {
        assert_eq!(det(&rays[i], &rays[i + 1]), 1, "consecutive rays must be unimodular");
    }
    for (j, &bj) in b.iter().enumerate() {
        // l_(j-1) + l_(j+1) = b_j * l_j with the digit indexed from 1.
        let lhs = rays[j].checked_add(&rays[j + 2]).unwrap();
        assert_eq!(lhs, rays[j + 1].checked_scale(bj).unwrap());
    }

    Ok(HJResolution { k, r, b, r_seq, t_seq, rays })
}

/// Resolution of the chart cone of U1 (spanned by (0,1) and (-m,-n)).
pub fn hj_resolve(w: &Weights) -> HJResolution {
    hj_resolve_pair(w.m(), w.n()).expect("validated weights are coprime and positive")
}

/// Resolution of the chart cone of U2, which is the U1 picture with the
/// roles of m and n swapped (coordinates exchanged). Not needed by the main
/// pipeline, exposed for completeness.
pub fn hj_resolve_sigma2(w: &Weights) -> HJResolution {
    hj_resolve_pair(w.n(), w.m()).expect("validated weights are coprime and positive")
}

/// The coordinate change between consecutive resolution charts:
///
/// ```text
/// x -> x'^b y',   y -> x'^(-1)
/// ```
///
/// a ring isomorphism of Laurent-polynomial rings (the exponent matrix has
/// determinant 1); the inverse sends x' -> y^(-1), y' -> x y^b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChartChange {
    pub b: i64,
}

/// Applies the chart change: a term c x^i y^j maps to c x'^(b*i - j) y'^i.
pub fn chart_change_apply(p: &LaurentPoly2, c: &ChartChange) -> LaurentPoly2 {
    p.monomial_substitute((c.b, 1), (-1, 0))
}

/// Applies the inverse chart change (x' -> y^(-1), y' -> x y^b).
pub fn chart_change_apply_inverse(p: &LaurentPoly2, c: &ChartChange) -> LaurentPoly2 {
    p.monomial_substitute((0, -1), (1, c.b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn resolve_2_3() {
        let res = hj_resolve_pair(2, 3).unwrap();
        assert_eq!(res.k, 1);
        assert_eq!(res.r, 1);
        assert_eq!(res.b, vec![2]);
        assert_eq!(res.r_seq, vec![2, 1, 0]);
        assert_eq!(res.t_seq, vec![0, 1, 2]);
        assert_eq!(
            res.rays,
            vec![
                LatticePoint::new(0, 1),
                LatticePoint::new(-1, -1),
                LatticePoint::new(-2, -3),
            ]
        );
        assert_eq!(res.self_intersections(), vec![-2]);
    }

    #[test]
    fn resolve_3_5() {
        let res = hj_resolve_pair(3, 5).unwrap();
        assert_eq!(res.b, vec![2, 2]);
        assert_eq!(res.t_seq, vec![0, 1, 2, 3]);
        assert_eq!(
            res.rays,
            vec![
                LatticePoint::new(0, 1),
                LatticePoint::new(-1, -1),
                LatticePoint::new(-2, -3),
                LatticePoint::new(-3, -5),
            ]
        );
    }

    #[test]
    fn resolve_smooth_case() {
        let res = hj_resolve_pair(1, 4).unwrap();
        assert_eq!(res.s(), 0);
        assert!(res.b.is_empty());
        assert_eq!(res.rays, vec![LatticePoint::new(0, 1), LatticePoint::new(-1, -4)]);
        assert_eq!(res.r_seq, vec![1, 0]);
        assert_eq!(res.t_seq, vec![0, 1]);
    }

    #[test]
    fn resolve_sigma2_is_swapped_pair() {
        let w = Weights::new(1, 2, 3).unwrap();
        let res = hj_resolve_sigma2(&w);
        assert_eq!(*res.rays.last().unwrap(), LatticePoint::new(-3, -2));
        assert_eq!(res.b, vec![2, 2]);
    }

    #[test]
    fn resolve_rejects_bad_input() {
        assert!(hj_resolve_pair(2, 4).is_err());
        assert!(hj_resolve_pair(0, 3).is_err());
    }

    #[test]
    fn invariants_hold_for_all_coprime_pairs_up_to_50() {
        for m in 1..=50i64 {
            for n in (m + 1)..=50 {
                if gcd_i64(m, n) != 1 {
                    continue;
                }
                // The constructor asserts every invariant internally.
                let res = hj_resolve_pair(m, n).unwrap();
                assert_eq!(res.r_seq[0], m);
                assert_eq!(*res.t_seq.last().unwrap(), m);
            }
        }
    }

    #[test]
    fn spot_check_digit_values() {
        // The chart is a cyclic quotient of type (1, n mod m) / m, so the
        // digits are the negative-regular expansion of m / (n mod m).
        // n = m + 1: cone over the rational normal curve, one -m ray.
        let res = hj_resolve_pair(5, 6).unwrap();
        assert_eq!(res.b, vec![5]);
        // n = m + (m - 1): a chain of (m - 1) twos.
        let res = hj_resolve_pair(5, 9).unwrap();
        assert_eq!(res.b, vec![2, 2, 2, 2]);
        // 7/5 = 2 - 1/(2 - 1/3)
        let res = hj_resolve_pair(7, 12).unwrap();
        assert_eq!(res.b, vec![2, 2, 3]);
        // 5/2 = 3 - 1/2
        let res = hj_resolve_pair(5, 7).unwrap();
        assert_eq!(res.b, vec![3, 2]);
    }

    #[test]
    fn chart_change_examples() {
        let y = LaurentPoly2::monomial(0, 1, 1);
        let c = ChartChange { b: 5 };
        assert_eq!(chart_change_apply(&y, &c), LaurentPoly2::monomial(-1, 0, 1));
        let x = LaurentPoly2::monomial(1, 0, 1);
        let c = ChartChange { b: 2 };
        assert_eq!(chart_change_apply(&x, &c), LaurentPoly2::monomial(2, 1, 1));
        let m = LaurentPoly2::monomial(4, 5, 7);
        let c = ChartChange { b: 3 };
        assert_eq!(chart_change_apply(&m, &c), LaurentPoly2::monomial(7, 4, 7));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
        proptest::collection::vec(((-4i64..5), (-4i64..5), (-6i64..7)), 0..6)
            .prop_map(LaurentPoly2::from_terms)
    }

    proptest! {
        #[test]
        fn chart_change_is_a_ring_map(a in arb_poly(), b in arb_poly(), bj in 2i64..6) {
            let c = ChartChange { b: bj };
            let f = |p: &LaurentPoly2| chart_change_apply(p, &c);
            prop_assert_eq!(f(&(&a + &b)), &f(&a) + &f(&b));
            prop_assert_eq!(f(&(&a * &b)), &f(&a) * &f(&b));
        }

        #[test]
        fn chart_change_inverse_is_identity(a in arb_poly(), bj in 2i64..6) {
            let c = ChartChange { b: bj };
            let there = chart_change_apply(&a, &c);
            prop_assert_eq!(chart_change_apply_inverse(&there, &c), a.clone());
            let back = chart_change_apply_inverse(&a, &c);
            prop_assert_eq!(chart_change_apply(&back, &c), a);
        }
    }
}
