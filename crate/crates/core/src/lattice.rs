//! Rank-2 lattice primitives: points, strictly convex rational cones, the
//! fan of the weighted projective plane P(1,m,n), dual cones, and semigroup
//! generators of affine toric charts.
//!
//! Conventions:
//!
//! ```text
//! fan rays        v0 = (-m,-n), v1 = (1,0), v2 = (0,1)
//! ray relation    v0 + m*v1 + n*v2 = 0
//! maximal cones   sigma_i spanned by the two rays other than v_i
//! ```
//!
//! Cones are stored with primitive rays ordered so that det(ray1, ray2) > 0;
//! all comparisons go through that normal form.

use crate::error::{Error, Result};

/// A point of the integer lattice Z^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// gcd(|x|, |y|) = 1; the origin is not primitive.
    #[must_use]
    pub fn is_primitive(&self) -> bool {
        gcd_i64(self.x, self.y) == 1
    }

    /// The primitive point on the same ray. Panics on the origin.
    #[must_use]
    pub fn primitive(&self) -> Self {
        let g = gcd_i64(self.x, self.y);
        assert!(g != 0, "origin has no primitive representative");
        Self::new(self.x / g, self.y / g)
    }

    pub fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(Self::new(self.x.checked_add(o.x)?, self.y.checked_add(o.y)?))
    }

    pub fn checked_scale(&self, c: i64) -> Option<Self> {
        Some(Self::new(self.x.checked_mul(c)?, self.y.checked_mul(c)?))
    }
}

impl std::fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// gcd with gcd(0, k) = |k|.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// det of the 2x2 matrix with rows `a`, `b`.
pub fn det(a: &LatticePoint, b: &LatticePoint) -> i64 {
    a.x.checked_mul(b.y)
        .and_then(|p| p.checked_sub(a.y.checked_mul(b.x).expect("det overflow")))
        .expect("det overflow")
}

fn dot(a: &LatticePoint, b: &LatticePoint) -> i64 {
    a.x * b.x + a.y * b.y
}

/// Ceiling of p/q for p >= 0, q > 0, except that the value at p = 0 is 1
/// rather than 0.
///
/// The corner convention is load-bearing for chart generators: the index-0
/// generator must be the cone edge itself, not the trivial monomial.
pub fn ceil_adj(p: i64, q: i64) -> i64 {
    assert!(p >= 0 && q > 0, "ceil_adj requires p >= 0, q > 0");
    if p == 0 {
        1
    } else {
        (p + q - 1) / q
    }
}

/// A strictly convex two-dimensional rational cone, spanned by two linearly
/// independent primitive rays with det(ray1, ray2) > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cone2D {
    ray1: LatticePoint,
    ray2: LatticePoint,
}

impl Cone2D {
    /// Builds the cone spanned by `a` and `b`, normalizing rays to primitive
    /// vectors ordered with positive determinant.
    pub fn new(a: LatticePoint, b: LatticePoint) -> Result<Self> {
        if (a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0) {
            return Err(Error::InvalidCone("ray must be nonzero".into()));
        }
        let a = a.primitive();
        let b = b.primitive();
        let d = det(&a, &b);
        if d == 0 {
            return Err(Error::InvalidCone(format!(
                "rays {a} and {b} are linearly dependent"
            )));
        }
        Ok(if d > 0 {
            Self { ray1: a, ray2: b }
        } else {
            Self { ray1: b, ray2: a }
        })
    }

    pub fn ray1(&self) -> LatticePoint {
        self.ray1
    }

    pub fn ray2(&self) -> LatticePoint {
        self.ray2
    }

    /// Index of the sublattice spanned by the rays: |det(ray1, ray2)|.
    /// 1 exactly when the cone is smooth.
    pub fn index(&self) -> i64 {
        det(&self.ray1, &self.ray2)
    }

    /// Unordered ray-set equality.
    pub fn same_rays(&self, other: &Self) -> bool {
        self == other
    }
}

impl std::fmt::Display for Cone2D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cone<{}, {}>", self.ray1, self.ray2)
    }
}

/// The complete fan of P(1,m,n): three rays and three maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    /// v0 = (-m,-n), v1 = (1,0), v2 = (0,1).
    pub rays: [LatticePoint; 3],
    /// maximal_cones[i] is spanned by the two rays other than rays[i].
    pub maximal_cones: [Cone2D; 3],
}

/// Fan of the weighted projective plane P(1,m,n) for coprime 1 <= m < n.
pub fn wps_fan(m: i64, n: i64) -> Result<Fan> {
    if m < 1 || n <= m {
        return Err(Error::InvalidWeights(format!(
            "need 1 <= m < n, got m = {m}, n = {n}"
        )));
    }
    if gcd_i64(m, n) != 1 {
        return Err(Error::InvalidWeights(format!(
            "m = {m} and n = {n} must be coprime"
        )));
    }
    let v0 = LatticePoint::new(-m, -n);
    let v1 = LatticePoint::new(1, 0);
    let v2 = LatticePoint::new(0, 1);
    let relation = v0
        .checked_add(&v1.checked_scale(m).unwrap())
        .unwrap()
        .checked_add(&v2.checked_scale(n).unwrap())
        .unwrap();
    assert_eq!(relation, LatticePoint::new(0, 0), "ray relation violated");
    Ok(Fan {
        rays: [v0, v1, v2],
        maximal_cones: [
            Cone2D::new(v1, v2)?,
            Cone2D::new(v0, v2)?,
            Cone2D::new(v0, v1)?,
        ],
    })
}

/// Dual cone { u : <u, r> >= 0 for every r in c }, in normal form.
///
/// An involution up to the det > 0 ray ordering.
pub fn dual_cone(c: &Cone2D) -> Cone2D {
    // Each dual edge is orthogonal to one primal ray, signed to pair
    // nonnegatively with the other; det(ray1, ray2) > 0 fixes both signs.
    let r1 = c.ray1;
    let r2 = c.ray2;
    let u = LatticePoint::new(-r1.y, r1.x);
    debug_assert!(dot(&u, &r2) > 0);
    let w = LatticePoint::new(r2.y, -r2.x);
    debug_assert!(dot(&w, &r1) > 0);
    Cone2D::new(u, w).expect("dual of a strictly convex cone is strictly convex")
}

/// Generators of the semigroup of lattice points of `c_dual`, by the
/// parallelogram enumeration: with edges d1, d2 and index D = |det(d1, d2)|,
/// the j-th generator is the lattice point (j*d2 + p*d1)/D for the smallest
/// admissible p (p >= 1 when j = 0, matching the corner convention of
/// [`ceil_adj`]).
///
/// `declared_index` must equal D; for the duals of the singular charts of
/// P(1,m,n) that is m resp. n, and the list has D + 1 entries starting at d1
/// and ending at d2. When exactly one edge lies on a coordinate axis it
/// plays the role of d1.
pub fn semigroup_generators(c_dual: &Cone2D, declared_index: i64) -> Result<Vec<LatticePoint>> {
    let big_d = c_dual.index();
    if declared_index != big_d {
        return Err(Error::InvalidCone(format!(
            "declared index {declared_index} does not match cone index {big_d}"
        )));
    }
    let on_axis = |p: &LatticePoint| p.x == 0 || p.y == 0;
    let (d1, d2) = match (on_axis(&c_dual.ray1), on_axis(&c_dual.ray2)) {
        (true, false) => (c_dual.ray1, c_dual.ray2),
        (false, true) => (c_dual.ray2, c_dual.ray1),
        // Tie-break for cones with no (or two) axis edges: ray2 first.
        _ => (c_dual.ray2, c_dual.ray1),
    };
    // The admissible p for slice j form the coset j*p1 + h*Z, where h is
    // the period of the j = 0 congruence and p1 solves the j = 1 one; two
    // linear scans replace a scan per slice.
    let h = (1..=big_d)
        .find(|p| (p * d1.x) % big_d == 0 && (p * d1.y) % big_d == 0)
        .expect("the cone index is a period of the edge congruence");
    let p1 = (0..=big_d)
        .find(|p| (d2.x + p * d1.x) % big_d == 0 && (d2.y + p * d1.y) % big_d == 0)
        .expect("each parallelogram slice contains a lattice point");
    let mut out = Vec::with_capacity(big_d as usize + 1);
    for j in 0..=big_d {
        let p = if j == 0 { h } else { (j * p1) % h };
        let (vx, vy) = (j * d2.x + p * d1.x, j * d2.y + p * d1.y);
        assert!(vx % big_d == 0 && vy % big_d == 0, "slice solution invalid");
        out.push(LatticePoint::new(vx / big_d, vy / big_d));
    }
    Ok(out)
}

/// Indices of generators expressible as nonnegative integer combinations of
/// the other generators.
///
/// The list must consist of lattice points of the dual cone that together
/// generate all of its lattice points (asserted where checkable: every
/// entry must pair nonnegatively with both primal rays and positively with
/// their sum). Under that hypothesis, a generator u is expressible from the
/// others exactly when some other entry g pairs no higher than u against
/// both primal rays: the difference u - g is then a lattice point of the
/// dual cone, hence a sum of generators, all of strictly smaller weight
/// than u; conversely any expression of u in the others contains such a g.
/// The comparison is exact — no search is involved.
pub fn redundant_generators(gens: &[LatticePoint], primal: &Cone2D) -> Vec<usize> {
    let r1 = primal.ray1();
    let r2 = primal.ray2();
    let pairings: Vec<(i64, i64)> = gens.iter().map(|g| (dot(g, &r1), dot(g, &r2))).collect();
    for &(p, q) in &pairings {
        assert!(p >= 0 && q >= 0 && p + q > 0, "generator outside the dual cone");
    }
    // Sorting by the first pairing turns the componentwise comparison into
    // a single sweep: an entry is dominated exactly when some earlier entry
    // in the sorted order has a second pairing no larger than its own.
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| pairings[i]);
    for w in order.windows(2) {
        assert_ne!(pairings[w[0]], pairings[w[1]], "duplicate generator in the list");
    }
    let mut out = Vec::new();
    let mut least_q = i64::MAX;
    for &i in &order {
        let (_, q) = pairings[i];
        if q >= least_q {
            out.push(i);
        }
        least_q = least_q.min(q);
    }
    out.sort_unstable();
    out
}
