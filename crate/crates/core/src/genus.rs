//! Genus of the curve, computed three independent ways.
//!
//! The projection to the line `(x0 : x1) in P(1, m)` restricts to a degree
//! `a*m` cover of P^1 on the curve. Its ramification divisor consists of
//!
//! * `a*n` points on the base chart at `Y = 0`, `X^(an) = -1`, each totally
//!   ramified (coefficient `a*m - 1`): over such a point the fiber is
//!   `Y^(am) = 1 + X^(an) = 0`;
//! * the `a` boundary points on `x0 = 0` (coordinates `y^a = 1` on the
//!   terminal resolution chart), each with coefficient `m - 1`.
//!
//! Riemann–Hurwitz over a rational base then gives
//! `2g - 2 = -2(am) + deg R`. Two independent cross-checks:
//!
//! * the interior lattice-point count of the Newton triangle with vertices
//!   (0,0), (an, 0), (0, am) — counted by brute force, with the closed
//!   count formula asserted against it;
//! * the complementary projection to `(x0 : x2)`, a degree `a*n` cover
//!   whose ramification mirrors the first with m and n exchanged.
//!
//! Everything is exact integer arithmetic; orbits with coefficient zero
//! (unramified) are omitted from the divisor.

use crate::cover::Weights;
use crate::lattice::gcd_i64;
use crate::unipoly::UniPoly;
use num_bigint::BigInt;

/// One Galois orbit of ramification points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationOrbit {
    /// Where the points sit.
    pub location: String,
    /// Number of geometric points in the orbit.
    pub point_count: i64,
    /// Coefficient of each point in the ramification divisor
    /// (ramification index minus one).
    pub coefficient: i64,
    /// Minimal polynomial of the distinguishing coordinate of the points.
    pub minimal_polynomial: String,
}

/// A projection of the curve to P^1 with its ramification divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    /// Which coordinate pair the curve is projected to.
    pub target: String,
    pub degree: i64,
    pub orbits: Vec<RamificationOrbit>,
}

impl Projection {
    /// Degree of the ramification divisor.
    pub fn ramification_degree(&self) -> i64 {
        self.orbits.iter().fold(0i64, |acc, o| {
            acc.checked_add(o.point_count.checked_mul(o.coefficient).expect("overflow"))
                .expect("overflow")
        })
    }
}

fn min_poly(exponent: i64, constant: i64) -> String {
    let mut coeffs = vec![BigInt::from(constant)];
    coeffs.resize(exponent as usize, BigInt::from(0));
    coeffs.push(BigInt::from(1));
    UniPoly::from_coeffs(coeffs).display_with_var("T")
}

/// The degree-(a*m) projection to `(x0 : x1)`.
pub fn primary_projection(w: &Weights) -> Projection {
    let (a, m, n) = (w.a(), w.m(), w.n());
    let (am, an) = (a * m, a * n);
    let mut orbits = Vec::new();
    if am - 1 > 0 {
        orbits.push(RamificationOrbit {
            location: "base chart, on the line Y = 0 (x2 = 0)".into(),
            point_count: an,
            coefficient: am - 1,
            minimal_polynomial: min_poly(an, 1), // X^(an) + 1
        });
    }
    if m - 1 > 0 {
        orbits.push(RamificationOrbit {
            location: "boundary x0 = 0, on the terminal resolution chart".into(),
            point_count: a,
            coefficient: m - 1,
            minimal_polynomial: min_poly(a, -1), // y^a - 1
        });
    }
    Projection { target: "(x0 : x1)".into(), degree: am, orbits }
}

/// The degree-(a*n) projection to `(x0 : x2)`.
pub fn dual_projection(w: &Weights) -> Projection {
    let (a, m, n) = (w.a(), w.m(), w.n());
    let (am, an) = (a * m, a * n);
    let mut orbits = Vec::new();
    if an - 1 > 0 {
        orbits.push(RamificationOrbit {
            location: "base chart, on the line X = 0 (x1 = 0)".into(),
            point_count: am,
            coefficient: an - 1,
            minimal_polynomial: min_poly(am, -1), // Y^(am) - 1
        });
    }
    if n - 1 > 0 {
        orbits.push(RamificationOrbit {
            location: "boundary x0 = 0".into(),
            point_count: a,
            coefficient: n - 1,
            minimal_polynomial: min_poly(a, -1),
        });
    }
    Projection { target: "(x0 : x2)".into(), degree: an, orbits }
}

/// Genus from a projection by Riemann–Hurwitz over a rational base:
/// `2g - 2 = -2 deg + deg R`. Panics if the data is not consistent with an
/// integral, nonnegative genus.
pub fn genus_by_hurwitz(p: &Projection) -> i64 {
    let two_g = 2i64
        .checked_sub(2 * p.degree)
        .and_then(|v| v.checked_add(p.ramification_degree()))
        .expect("overflow");
    assert!(two_g % 2 == 0, "ramification degree has the wrong parity");
    let g = two_g / 2;
    assert!(g >= 0, "negative genus from projection data");
    g
}

/// Genus by the closed count of the Hurwitz computation.
pub fn genus_closed_form(w: &Weights) -> i64 {
    let (a, m, n) = (w.a(), w.m(), w.n());
    let (am, an) = (a * m, a * n);
    let num = (am - 1)
        .checked_mul(an - 2)
        .and_then(|v| v.checked_add(a * (m - 1)))
        .expect("overflow");
    assert!(num % 2 == 0);
    num / 2
}

/// Number of interior lattice points of the triangle with vertices
/// (0, 0), (an, 0), (0, am): the geometric genus of a curve that is smooth
/// for its Newton polygon.
///
/// Counts by brute force when the bounding box is small enough, asserting
/// the closed lattice-point count; above the brute-force budget the closed
/// count alone is used.
pub fn newton_interior_points(w: &Weights) -> i64 {
    let (a, m, n) = (w.a(), w.m(), w.n());
    let (am, an) = (a * m, a * n);
    // Boundary points on the hypotenuse have gcd(am, an) = a spacings.
    assert_eq!(gcd_i64(am, an), a);
    let closed = (am
        .checked_mul(an)
        .and_then(|v| v.checked_sub(am))
        .and_then(|v| v.checked_sub(an))
        .and_then(|v| v.checked_sub(a))
        .expect("overflow"))
        / 2
        + 1;
    if am.checked_mul(an).is_some_and(|v| v <= 10_000_000) {
        let mut count = 0i64;
        for x in 1..an {
            for y in 1..am {
                if am * x + an * y < am * an {
                    count += 1;
                }
            }
        }
        assert_eq!(count, closed, "lattice count disagrees with the closed formula");
        count
    } else {
        closed
    }
}

/// The three independent genus values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusTriple {
    /// Riemann–Hurwitz on the degree-(a*m) projection.
    pub hurwitz: i64,
    /// Interior lattice points of the Newton triangle.
    pub newton: i64,
    /// Riemann–Hurwitz on the degree-(a*n) projection.
    pub dual: i64,
}

impl GenusTriple {
    pub fn all_agree(&self) -> bool {
        self.hurwitz == self.newton && self.newton == self.dual
    }
}

/// Computes the genus three ways. `oracle_bias` perturbs the lattice count
/// (used to exercise disagreement reporting; pass 0 for real runs).
pub fn genus_triple(w: &Weights, oracle_bias: i64) -> GenusTriple {
    GenusTriple {
        hurwitz: genus_by_hurwitz(&primary_projection(w)),
        newton: newton_interior_points(w) + oracle_bias,
        dual: genus_by_hurwitz(&dual_projection(w)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, m: i64, n: i64) -> Weights {
        Weights::new(a, m, n).unwrap()
    }

    #[test]
    fn genus_1_2_3_is_one() {
        let t = genus_triple(&w(1, 2, 3), 0);
        assert_eq!(t.hurwitz, 1);
        assert_eq!(t.newton, 1);
        assert_eq!(t.dual, 1);
        assert!(t.all_agree());
    }

    #[test]
    fn genus_2_2_3_is_seven() {
        let t = genus_triple(&w(2, 2, 3), 0);
        assert_eq!((t.hurwitz, t.newton, t.dual), (7, 7, 7));
    }

    #[test]
    fn genus_1_1_2_is_zero() {
        let t = genus_triple(&w(1, 1, 2), 0);
        assert_eq!((t.hurwitz, t.newton, t.dual), (0, 0, 0));
    }

    #[test]
    fn primary_projection_1_2_3() {
        let p = primary_projection(&w(1, 2, 3));
        assert_eq!(p.degree, 2);
        assert_eq!(p.orbits.len(), 2);
        assert_eq!(p.orbits[0].point_count, 3);
        assert_eq!(p.orbits[0].coefficient, 1);
        assert_eq!(p.orbits[0].minimal_polynomial, "T^3 + 1");
        assert_eq!(p.orbits[1].point_count, 1);
        assert_eq!(p.orbits[1].coefficient, 1);
        assert_eq!(p.orbits[1].minimal_polynomial, "T - 1");
        assert_eq!(p.ramification_degree(), 4);
        // 2g - 2 = -4 + 4 = 0
        assert_eq!(genus_by_hurwitz(&p), 1);
    }

    #[test]
    fn unramified_orbits_are_omitted() {
        // m = 1: the boundary points are unramified for the primary
        // projection.
        let p = primary_projection(&w(3, 1, 2));
        assert_eq!(p.orbits.len(), 1);
        assert_eq!(p.orbits[0].point_count, 6);
        assert_eq!(p.orbits[0].coefficient, 2);
        // a = m = 1: the primary projection has degree 1 and no
        // ramification at all.
        let p = primary_projection(&w(1, 1, 5));
        assert_eq!(p.degree, 1);
        assert!(p.orbits.is_empty());
        assert_eq!(genus_by_hurwitz(&p), 0);
    }

    #[test]
    fn dual_projection_mirrors_the_primary() {
        let d = dual_projection(&w(1, 2, 3));
        assert_eq!(d.degree, 3);
        assert_eq!(d.orbits[0].point_count, 2);
        assert_eq!(d.orbits[0].coefficient, 2);
        assert_eq!(d.orbits[0].minimal_polynomial, "T^2 - 1");
        assert_eq!(d.orbits[1].point_count, 1);
        assert_eq!(d.orbits[1].coefficient, 2);
        assert_eq!(genus_by_hurwitz(&d), 1);
    }

    #[test]
    fn triple_agrees_across_a_sweep() {
        for m in 1..=10i64 {
            for n in (m + 1)..=12 {
                if gcd_i64(m, n) != 1 {
                    continue;
                }
                for a in 1..=5 {
                    let t = genus_triple(&w(a, m, n), 0);
                    assert!(t.all_agree(), "disagreement at ({a}, {m}, {n}): {t:?}");
                }
            }
        }
    }

    #[test]
    fn oracle_bias_breaks_agreement() {
        let t = genus_triple(&w(1, 2, 3), 1);
        assert!(!t.all_agree());
        assert_eq!(t.newton, 2);
    }

    #[test]
    fn genus_grows_with_the_common_factor() {
        for (m, n) in [(1, 2), (2, 3), (3, 5), (4, 7)] {
            let mut prev = -1;
            for a in 1..=6 {
                let g = genus_closed_form(&w(a, m, n));
                assert!(g > prev, "not monotone at a = {a}");
                prev = g;
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(genus_closed_form(&w(1, 2, 3)), 1);
        assert_eq!(genus_closed_form(&w(2, 2, 3)), 7);
        assert_eq!(genus_closed_form(&w(1, 1, 2)), 0);
        assert_eq!(genus_closed_form(&w(1, 4, 5)), 6);
        assert_eq!(genus_closed_form(&w(3, 1, 2)), 4);
    }
}
