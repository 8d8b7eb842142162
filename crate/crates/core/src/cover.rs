//! The affine cover of P(1,m,n) and the Fermat-type curve on it.
//!
//! For coprime weights 1 <= m < n and a degree factor a >= 1, the curve is
//!
//! ```text
//! C : x0^(a*m*n) + x1^(a*n) - x2^(a*m) = 0   in   P(1, m, n)
//! ```
//!
//! The three coordinate charts:
//!
//! ```text
//! U0 (x0 != 0): A^2 with X = x1/x0^m, Y = x2/x0^n
//! U1 (x1 != 0): coordinate ring generated by
//!     z_j = x0^(m*ca(j*n,m) - j*n) x2^j / x1^ca(j*n,m),   0 <= j <= m
//! U2 (x2 != 0): w_j = x0^(n*ca(j*m,n) - j*m) x1^j / x2^ca(j*m,n), 0 <= j <= n
//! ```
//!
//! where `ca` is [`ceil_adj`]: the usual ceiling except ca(0, q) = 1, so the
//! index-0 generator is x0^m/x1 (resp. x0^n/x2) rather than 1.

use crate::error::{Error, Result};
use crate::lattice::{ceil_adj, gcd_i64};
use crate::laurent::LaurentPoly2;

/// Caps on accepted weights, keeping every downstream loop and exponent at
/// desk scale (exponents stay far below i64, lattice enumerations stay
/// sub-second).
const MAX_A: i64 = 1_000;
const MAX_AMN: i64 = 100_000;

/// Validated curve data (a, m, n): coprime 1 <= m < n and degree factor
/// a >= 1. The curve has degree a*m*n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weights {
    a: i64,
    m: i64,
    n: i64,
}

impl Weights {
    pub fn new(a: i64, m: i64, n: i64) -> Result<Self> {
        if a < 1 || m < 1 || n < 1 {
            return Err(Error::InvalidWeights(format!(
                "weights must be positive, got a = {a}, m = {m}, n = {n}"
            )));
        }
        if m == n {
            return Err(Error::InvalidWeights(format!("m and n must differ, got m = n = {m}")));
        }
        if m > n {
            return Err(Error::InvalidWeights(format!(
                "expected m < n, got m = {m} > n = {n} (swap them)"
            )));
        }
        if gcd_i64(m, n) != 1 {
            let g = gcd_i64(m, n);
            return Err(Error::InvalidWeights(format!(
                "m = {m} and n = {n} share the factor {g}; pass coprime (m, n) and fold the \
                 common factor into a"
            )));
        }
        if a > MAX_A || a.checked_mul(m).and_then(|v| v.checked_mul(n)).is_none_or(|v| v > MAX_AMN)
        {
            return Err(Error::InvalidWeights(format!(
                "weights too large: need a <= {MAX_A} and a*m*n <= {MAX_AMN}"
            )));
        }
        Ok(Self { a, m, n })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

impl std::fmt::Display for Weights {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a, m, n) = ({}, {}, {})", self.a, self.m, self.n)
    }
}

/// Reduces projective weights (1, a1, a2) to curve data: a = gcd(a1, a2),
/// {m, n} = {a1/a, a2/a} ordered increasingly.
pub fn normalize_weights(a0: i64, a1: i64, a2: i64) -> Result<Weights> {
    if a0 != 1 {
        return Err(Error::InvalidWeights(format!(
            "the first weight must be 1, got {a0}"
        )));
    }
    if a1 < 1 || a2 < 1 {
        return Err(Error::InvalidWeights(format!(
            "weights must be positive, got ({a0}, {a1}, {a2})"
        )));
    }
    let a = gcd_i64(a1, a2);
    let (m, n) = (a1 / a, a2 / a);
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    Weights::new(a, m, n)
}

/// A monomial quotient x0^e0 x1^e1 x2^e2 with integer (possibly negative)
/// exponents in the homogeneous coordinates of P(1,m,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialQuotient {
    pub e0: i64,
    pub e1: i64,
    pub e2: i64,
}

impl MonomialQuotient {
    pub const fn new(e0: i64, e1: i64, e2: i64) -> Self {
        Self { e0, e1, e2 }
    }

    /// e0 + m*e1 + n*e2; chart functions must have weighted degree 0.
    pub fn weighted_degree(&self, w: &Weights) -> i64 {
        self.e0 + w.m * self.e1 + w.n * self.e2
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.e0 + o.e0, self.e1 + o.e1, self.e2 + o.e2)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(c * self.e0, c * self.e1, c * self.e2)
    }
}

impl std::fmt::Display for MonomialQuotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let part = |e: i64, var: &str| -> Option<String> {
            match e.abs() {
                0 => None,
                1 => Some(var.to_string()),
                e => Some(format!("{var}^{e}")),
            }
        };
        let top: Vec<String> = [(self.e0, "x0"), (self.e1, "x1"), (self.e2, "x2")]
            .iter()
            .filter(|(e, _)| *e > 0)
            .filter_map(|(e, v)| part(*e, v))
            .collect();
        let bot: Vec<String> = [(self.e0, "x0"), (self.e1, "x1"), (self.e2, "x2")]
            .iter()
            .filter(|(e, _)| *e < 0)
            .filter_map(|(e, v)| part(*e, v))
            .collect();
        let top = if top.is_empty() { "1".to_string() } else { top.join(" ") };
        if bot.is_empty() {
            write!(f, "{top}")
        } else {
            write!(f, "{top} / {}", bot.join(" "))
        }
    }
}

/// The m + 1 generators z_0, ..., z_m of the coordinate ring of U1.
pub fn u1_generators(w: &Weights) -> Vec<MonomialQuotient> {
    (0..=w.m)
        .map(|j| {
            let c = ceil_adj(j * w.n, w.m);
            MonomialQuotient::new(w.m * c - j * w.n, -c, j)
        })
        .collect()
}

/// The n + 1 generators w_0, ..., w_n of the coordinate ring of U2.
pub fn u2_generators(w: &Weights) -> Vec<MonomialQuotient> {
    (0..=w.n)
        .map(|j| {
            let c = ceil_adj(j * w.m, w.n);
            MonomialQuotient::new(w.n * c - j * w.m, j, -c)
        })
        .collect()
}

/// The two singular coordinate charts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineChart {
    U1,
    U2,
}

impl AffineChart {
    pub fn var_name(&self) -> &'static str {
        match self {
            AffineChart::U1 => "z",
            AffineChart::U2 => "w",
        }
    }
}

/// One pairing of a chart generator computed two ways: from the semigroup
/// data of the dual cone (via X = x1/x0^m, Y = x2/x0^n) and directly from
/// the homogeneous-coordinate formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrespondencePair {
    pub chart: AffineChart,
    pub j: i64,
    pub toric: MonomialQuotient,
    pub classical: MonomialQuotient,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub pairs: Vec<CorrespondencePair>,
    pub all_match: bool,
}

/// Cross-checks the toric semigroup description of the chart generators
/// against the homogeneous-coordinate formulas.
///
/// A lattice character chi^(p,q) corresponds to X^p Y^q, i.e. to the
/// monomial quotient p*(-m,1,0) + q*(-n,0,1); the U1 generator with
/// semigroup exponent (-ceil_adj(j*n, m), j) must equal z_j, and likewise
/// (j, -ceil_adj(j*m, n)) must equal w_j on U2.
pub fn toric_classical_correspondence(w: &Weights) -> CorrespondenceReport {
    let x_triple = MonomialQuotient::new(-w.m, 1, 0);
    let y_triple = MonomialQuotient::new(-w.n, 0, 1);
    let character = |p: i64, q: i64| x_triple.scale(p).add(&y_triple.scale(q));

    let mut pairs = Vec::new();
    for (j, z) in u1_generators(w).iter().enumerate() {
        let j = j as i64;
        let toric = character(-ceil_adj(j * w.n, w.m), j);
        pairs.push(CorrespondencePair {
            chart: AffineChart::U1,
            j,
            toric,
            classical: *z,
            matches: toric == *z,
        });
    }
    for (j, wj) in u2_generators(w).iter().enumerate() {
        let j = j as i64;
        let toric = character(j, -ceil_adj(j * w.m, w.n));
        pairs.push(CorrespondencePair {
            chart: AffineChart::U2,
            j,
            toric,
            classical: *wj,
            matches: toric == *wj,
        });
    }
    let all_match = pairs.iter().all(|p| p.matches);
    CorrespondenceReport { pairs, all_match }
}

/// Which family of binomial relations to emit.
///
/// `ZeroEdge` is the family tying each middle generator to the two chart
/// edges (index 0 and index m resp. n); `ZeroOne` expresses every generator
/// through the index-0 and index-1 ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    ZeroEdge,
    ZeroOne,
}

/// A relation v_(lhs)^lhs_exp = prod v_i^(e_i) among chart generators, with
/// all exponents nonnegative on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRelation {
    pub chart: AffineChart,
    pub kind: RelationKind,
    pub j: i64,
    pub lhs_var: usize,
    pub lhs_exp: i64,
    /// (generator index, exponent) factors; exponents may be 0 and are then
    /// omitted from the display form.
    pub rhs: Vec<(usize, i64)>,
}

impl BinomialRelation {
    /// Substitutes the generator monomials and checks that both sides agree
    /// as monomial quotients in (x0, x1, x2).
    pub fn substitution_holds(&self, gens: &[MonomialQuotient]) -> bool {
        let lhs = gens[self.lhs_var].scale(self.lhs_exp);
        let mut rhs = MonomialQuotient::new(0, 0, 0);
        for &(v, e) in &self.rhs {
            rhs = rhs.add(&gens[v].scale(e));
        }
        lhs == rhs
    }
}

impl std::fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = self.chart.var_name();
        let side = |var: usize, e: i64| match e {
            1 => format!("{v}{var}"),
            _ => format!("{v}{var}^{e}"),
        };
        let rhs: Vec<String> = self
            .rhs
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|&(var, e)| side(var, e))
            .collect();
        let rhs = if rhs.is_empty() { "1".to_string() } else { rhs.join(" ") };
        write!(f, "{} = {rhs}", side(self.lhs_var, self.lhs_exp))
    }
}

/// The defining binomial relations of the chart's coordinate ring.
///
/// On U1 with generators z_0..z_m (and c(j) = ceil_adj(j*n, m)):
///
/// ```text
/// ZeroEdge:  z_j^m = z_0^(m*c(j) - n*j) z_m^j          1 <= j <= m-1
/// ZeroOne:   z_1^j = z_0^(j*c(1) - c(j)) z_j           2 <= j <= m
/// ```
///
/// and symmetrically on U2 with w_0..w_n and c(j) = ceil_adj(j*m, n):
///
/// ```text
/// ZeroEdge:  w_j^n = w_0^(n*c(j) - m*j) w_n^j          1 <= j <= n-1
/// ZeroOne:   w_1^j = w_0^(j - c(j)) w_j                2 <= j <= n
/// ```
///
/// Empty index ranges (m = 1 on U1) give an empty list.
pub fn ideal_relations(w: &Weights, chart: AffineChart, kind: RelationKind) -> Vec<BinomialRelation> {
    let (p, q) = match chart {
        AffineChart::U1 => (w.m, w.n),
        AffineChart::U2 => (w.n, w.m),
    };
    let edge = p as usize;
    let mut out = Vec::new();
    match kind {
        RelationKind::ZeroEdge => {
            for j in 1..p {
                let c = ceil_adj(j * q, p);
                out.push(BinomialRelation {
                    chart,
                    kind,
                    j,
                    lhs_var: j as usize,
                    lhs_exp: p,
                    rhs: vec![(0, p * c - q * j), (edge, j)],
                });
            }
        }
        RelationKind::ZeroOne => {
            for j in 2..=p {
                let e0 = j * ceil_adj(q, p) - ceil_adj(j * q, p);
                debug_assert!(e0 >= 0);
                out.push(BinomialRelation {
                    chart,
                    kind,
                    j,
                    lhs_var: 1,
                    lhs_exp: j,
                    rhs: vec![(0, e0), (j as usize, 1)],
                });
            }
        }
    }
    out
}

/// The three coordinate charts of P(1,m,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    U0,
    U1,
    U2,
}

/// The curve equation restricted to a chart, in that chart's two
/// distinguished coordinates:
///
/// ```text
/// U0: 1 + X^(a*n) - Y^(a*m)          (X, Y)    = (x1/x0^m, x2/x0^n)
/// U1: z_0^(a*n) + 1 - z_m^a          (x, y)    = (z_0, z_m)
/// U2: w_0^(a*m) + w_n^a - 1          (x, y)    = (w_0, w_n)
/// ```
pub fn local_fermat_form(w: &Weights, chart: Chart) -> LaurentPoly2 {
    let a = w.a;
    match chart {
        Chart::U0 => LaurentPoly2::from_terms([
            (0i64, 0i64, 1i64),
            (a * w.n, 0, 1),
            (0, a * w.m, -1),
        ]),
        Chart::U1 => LaurentPoly2::from_terms([
            (a * w.n, 0i64, 1i64),
            (0, 0, 1),
            (0, a, -1),
        ]),
        Chart::U2 => LaurentPoly2::from_terms([
            (a * w.m, 0i64, 1i64),
            (0, a, 1),
            (0, 0, -1),
        ]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(a: i64, m: i64, n: i64) -> Weights {
        Weights::new(a, m, n).unwrap()
    }

    #[test]
    fn weights_validation() {
        assert!(Weights::new(1, 2, 3).is_ok());
        assert!(Weights::new(1, 1, 2).is_ok());
        assert!(Weights::new(0, 2, 3).is_err());
        assert!(Weights::new(1, 2, 4).is_err());
        assert!(Weights::new(1, 3, 3).is_err());
        assert!(Weights::new(1, 3, 2).is_err());
        assert!(Weights::new(2_000, 1, 2).is_err());
    }

    #[test]
    fn normalize_weights_examples() {
        assert_eq!(normalize_weights(1, 4, 6).unwrap(), w(2, 2, 3));
        assert_eq!(normalize_weights(1, 3, 2).unwrap(), w(1, 2, 3));
        assert_eq!(normalize_weights(1, 2, 3).unwrap(), w(1, 2, 3));
        assert!(normalize_weights(2, 4, 6).is_err());
        // both reduce to 1: no valid (m, n)
        assert!(normalize_weights(1, 5, 5).is_err());
    }

    #[test]
    fn u1_generators_2_3() {
        let g = u1_generators(&w(1, 2, 3));
        assert_eq!(
            g,
            vec![
                MonomialQuotient::new(2, -1, 0),
                MonomialQuotient::new(1, -2, 1),
                MonomialQuotient::new(0, -3, 2),
            ]
        );
        assert_eq!(g[0].to_string(), "x0^2 / x1");
    }

    #[test]
    fn u2_generators_2_3() {
        let g = u2_generators(&w(1, 2, 3));
        assert_eq!(
            g,
            vec![
                MonomialQuotient::new(3, 0, -1),
                MonomialQuotient::new(1, 1, -1),
                MonomialQuotient::new(2, 2, -2),
                MonomialQuotient::new(0, 3, -2),
            ]
        );
    }

    #[test]
    fn u1_generators_m_equals_1() {
        // z_0 = x0/x1, z_1 = x2/x1^n with n = 2.
        let g = u1_generators(&w(1, 1, 2));
        assert_eq!(
            g,
            vec![MonomialQuotient::new(1, -1, 0), MonomialQuotient::new(0, -2, 1)]
        );
    }

    #[test]
    fn generators_have_weighted_degree_zero() {
        for (a, m, n) in [(1, 2, 3), (2, 3, 5), (1, 1, 2), (3, 4, 7), (1, 5, 12)] {
            let wt = w(a, m, n);
            for z in u1_generators(&wt) {
                assert_eq!(z.weighted_degree(&wt), 0, "{z} on U1 of {wt}");
            }
            for v in u2_generators(&wt) {
                assert_eq!(v.weighted_degree(&wt), 0, "{v} on U2 of {wt}");
            }
        }
    }

    #[test]
    fn correspondence_all_match_up_to_30() {
        for m in 1..=30i64 {
            for n in (m + 1)..=30 {
                if gcd_i64(m, n) != 1 {
                    continue;
                }
                let rep = toric_classical_correspondence(&w(1, m, n));
                assert!(rep.all_match, "mismatch at (m, n) = ({m}, {n})");
                assert_eq!(rep.pairs.len() as i64, m + n + 2);
            }
        }
    }

    #[test]
    fn relations_2_3_zero_edge() {
        let wt = w(1, 2, 3);
        let u1 = ideal_relations(&wt, AffineChart::U1, RelationKind::ZeroEdge);
        assert_eq!(u1.len(), 1);
        assert_eq!(u1[0].to_string(), "z1^2 = z0 z2");
        let u2 = ideal_relations(&wt, AffineChart::U2, RelationKind::ZeroEdge);
        assert_eq!(u2.len(), 2);
        assert_eq!(u2[0].to_string(), "w1^3 = w0 w3");
        assert_eq!(u2[1].to_string(), "w2^3 = w0^2 w3^2");
    }

    #[test]
    fn relations_2_3_zero_one() {
        let wt = w(1, 2, 3);
        let u2 = ideal_relations(&wt, AffineChart::U2, RelationKind::ZeroOne);
        assert_eq!(u2.len(), 2);
        // w1^2 = w2 (the w0 exponent is zero and is omitted from display)
        assert_eq!(u2[0].to_string(), "w1^2 = w2");
        assert_eq!(u2[1].to_string(), "w1^3 = w0 w3");
    }

    #[test]
    fn relations_empty_for_m_equals_1() {
        let wt = w(1, 1, 2);
        assert!(ideal_relations(&wt, AffineChart::U1, RelationKind::ZeroEdge).is_empty());
        assert!(ideal_relations(&wt, AffineChart::U1, RelationKind::ZeroOne).is_empty());
    }

    #[test]
    fn relations_substitute_correctly_across_weights() {
        for (m, n) in [(2i64, 3i64), (3, 5), (4, 7), (5, 8), (7, 12), (1, 6)] {
            let wt = w(1, m, n);
            let g1 = u1_generators(&wt);
            let g2 = u2_generators(&wt);
            for kind in [RelationKind::ZeroEdge, RelationKind::ZeroOne] {
                for rel in ideal_relations(&wt, AffineChart::U1, kind) {
                    assert!(rel.substitution_holds(&g1), "({m},{n}) U1: {rel}");
                }
                for rel in ideal_relations(&wt, AffineChart::U2, kind) {
                    assert!(rel.substitution_holds(&g2), "({m},{n}) U2: {rel}");
                }
            }
        }
    }

    #[test]
    fn local_fermat_forms() {
        // (1,2,3) on U0: 1 + X^3 - Y^2
        let p = local_fermat_form(&w(1, 2, 3), Chart::U0);
        assert_eq!(p, LaurentPoly2::from_terms([(0, 0, 1), (3, 0, 1), (0, 2, -1)]));
        // (1,2,3) on U1: z0^3 + 1 - z2
        let p = local_fermat_form(&w(1, 2, 3), Chart::U1);
        assert_eq!(p, LaurentPoly2::from_terms([(3, 0, 1), (0, 0, 1), (0, 1, -1)]));
        // (2,2,3) on U2: w0^4 + w3^2 - 1
        let p = local_fermat_form(&w(2, 2, 3), Chart::U2);
        assert_eq!(p, LaurentPoly2::from_terms([(4, 0, 1), (0, 2, 1), (0, 0, -1)]));
    }

    #[test]
    fn monomial_quotient_display() {
        assert_eq!(MonomialQuotient::new(2, -1, 0).to_string(), "x0^2 / x1");
        assert_eq!(MonomialQuotient::new(0, -3, 2).to_string(), "x2^2 / x1^3");
        assert_eq!(MonomialQuotient::new(0, 0, 0).to_string(), "1");
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(a1 in 1i64..40, a2 in 1i64..40) {
            if let Ok(wt) = normalize_weights(1, a1, a2) {
                let again = normalize_weights(1, wt.m(), wt.n()).unwrap();
                prop_assert_eq!((again.m(), again.n()), (wt.m(), wt.n()));
                prop_assert_eq!(again.a(), 1);
            }
        }

        #[test]
        fn generator_degrees_vanish(m in 1i64..15, n in 2i64..16, a in 1i64..4) {
            prop_assume!(m < n && gcd_i64(m, n) == 1);
            let wt = w(a, m, n);
            for z in u1_generators(&wt) {
                prop_assert_eq!(z.weighted_degree(&wt), 0);
            }
            for v in u2_generators(&wt) {
                prop_assert_eq!(v.weighted_degree(&wt), 0);
            }
        }
    }
}
