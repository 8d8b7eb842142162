//! Assembles everything the pipeline knows about one weight triple into a
//! single report, renderable as stable JSON or as text.
//!
//! JSON stability: objects are emitted with sorted keys (the default map is
//! ordered), so the same input always produces byte-identical output and a
//! parse/re-serialize round trip is the identity. Counts and configuration
//! data are JSON numbers; quantities produced by the genus computation
//! (degrees, coefficients, genus values) are decimal strings.

use crate::cover::{
    ideal_relations, toric_classical_correspondence, u1_generators, u2_generators, AffineChart,
    CorrespondenceReport, RelationKind, Weights,
};
use crate::curve::{
    chart_polynomial, smoothness_certificate, verify_chart_recursion, OverallVerdict,
    SmoothnessCertificate,
};
use crate::genus::{dual_projection, genus_triple, primary_projection, GenusTriple, Projection};
use crate::lattice::{dual_cone, redundant_generators, semigroup_generators, wps_fan, Fan};
use crate::resolution::{hj_resolve, HJResolution};
use serde_json::{json, Value};

/// Everything computed for one weight triple.
#[derive(Debug, Clone)]
pub struct FullReport {
    pub weights: Weights,
    /// Set when the requested weights were adjusted (m and n exchanged).
    pub input_note: Option<String>,
    pub fan: Fan,
    pub u1_generator_forms: Vec<String>,
    pub u2_generator_forms: Vec<String>,
    /// Generator names expressible in the remaining generators.
    pub redundant: Vec<String>,
    pub relations: Vec<String>,
    pub relations_hold: bool,
    pub correspondence: CorrespondenceReport,
    pub resolution: HJResolution,
    pub chart_curves: Vec<String>,
    pub recursion_verified: bool,
    pub certificate: SmoothnessCertificate,
    pub primary: Projection,
    pub dual: Projection,
    pub genus: GenusTriple,
}

/// Runs the full pipeline. `oracle_bias` perturbs the lattice-point count
/// and exists so disagreement handling can be exercised; pass 0 normally.
pub fn full_report(w: &Weights, oracle_bias: i64, input_note: Option<String>) -> FullReport {
    let fan = wps_fan(w.m(), w.n()).expect("validated weights span a fan");

    let u1_forms: Vec<String> = u1_generators(w).iter().map(|g| g.to_string()).collect();
    let u2_forms: Vec<String> = u2_generators(w).iter().map(|g| g.to_string()).collect();
    let mut redundant = Vec::new();
    for (cone_idx, var, declared) in [(1usize, "z", w.m()), (2, "w", w.n())] {
        let cone = &fan.maximal_cones[cone_idx];
        let gens = semigroup_generators(&dual_cone(cone), declared)
            .expect("cone index matches the fan");
        for j in redundant_generators(&gens, cone) {
            redundant.push(format!("{var}{j}"));
        }
    }

    let mut relations = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut relations_hold = true;
    for chart in [AffineChart::U1, AffineChart::U2] {
        let gens = match chart {
            AffineChart::U1 => u1_generators(w),
            AffineChart::U2 => u2_generators(w),
        };
        for kind in [RelationKind::ZeroEdge, RelationKind::ZeroOne] {
            for rel in ideal_relations(w, chart, kind) {
                relations_hold &= rel.substitution_holds(&gens);
                let text = rel.to_string();
                // The two derivations can produce the same identity; list it once.
                if seen.insert(text.clone()) {
                    relations.push(text);
                }
            }
        }
    }

    let correspondence = toric_classical_correspondence(w);
    let resolution = hj_resolve(w);
    let chart_curves: Vec<String> = (1..=resolution.s() + 1)
        .map(|j| format!("F_{j} = {}", chart_polynomial(w, &resolution, j)))
        .collect();
    let recursion_verified = verify_chart_recursion(w, &resolution).iter().all(|&(_, ok)| ok);
    let certificate = smoothness_certificate(w, &resolution);

    FullReport {
        weights: *w,
        input_note,
        fan,
        u1_generator_forms: u1_forms,
        u2_generator_forms: u2_forms,
        redundant,
        relations,
        relations_hold,
        correspondence,
        resolution,
        chart_curves,
        recursion_verified,
        certificate,
        primary: primary_projection(w),
        dual: dual_projection(w),
        genus: genus_triple(w, oracle_bias),
    }
}

impl FullReport {
    /// True when every cross-check in the report succeeded.
    pub fn passed(&self) -> bool {
        self.genus.all_agree()
            && self.certificate.overall == OverallVerdict::Smooth
            && self.correspondence.all_match
            && self.relations_hold
            && self.recursion_verified
    }

    pub fn to_json(&self) -> Value {
        let w = &self.weights;
        let ray = |r: &crate::lattice::LatticePoint| json!([r.x, r.y]);
        let projection = |p: &Projection| {
            json!({
                "degree": p.degree.to_string(),
                "orbits": p.orbits.iter().map(|o| json!({
                    "coefficient": o.coefficient.to_string(),
                    "location": o.location,
                    "minimal_polynomial": o.minimal_polynomial,
                    "point_count": o.point_count.to_string(),
                })).collect::<Vec<_>>(),
                "ramification_degree": p.ramification_degree().to_string(),
                "target": p.target,
            })
        };
        let charts: Vec<Value> = self
            .certificate
            .charts
            .iter()
            .map(|c| {
                json!({
                    "chart": c.chart,
                    "method": c.method.to_string(),
                    "new_line_note": c.new_line_note,
                    "polynomial": c.polynomial,
                    "recursion_step_verified": c.recursion_step_verified,
                    "verdict": c.verdict.to_string(),
                })
            })
            .collect();
        json!({
            "correspondence": {
                "all_match": self.correspondence.all_match,
                "pairs": self.correspondence.pairs.len(),
            },
            "genus": {
                "agree": self.genus.all_agree(),
                "dual_projection": self.genus.dual.to_string(),
                "hurwitz": self.genus.hurwitz.to_string(),
                "newton_interior": self.genus.newton.to_string(),
            },
            "input": {
                "a": w.a(),
                "m": w.m(),
                "n": w.n(),
                "note": self.input_note,
            },
            "passed": self.passed(),
            "projections": {
                "dual": projection(&self.dual),
                "primary": projection(&self.primary),
            },
            "resolution": {
                "chart_curves": self.chart_curves,
                "digits": self.resolution.b,
                "rays": self.resolution.rays.iter().map(|r| ray(r)).collect::<Vec<_>>(),
                "recursion_verified": self.recursion_verified,
                "self_intersections": self.resolution.self_intersections(),
            },
            "smoothness": {
                "charts": charts,
                "overall": self.certificate.overall.to_string(),
            },
            "weighted_plane": {
                "fan_rays": self.fan.rays.iter().map(|r| ray(r)).collect::<Vec<_>>(),
                "redundant_generators": self.redundant,
                "relations": self.relations,
                "relations_hold": self.relations_hold,
                "u1_generators": self.u1_generator_forms,
                "u2_generators": self.u2_generator_forms,
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let w = &self.weights;
        let push = |s: &mut String, line: String| {
            s.push_str(&line);
            s.push('\n');
        };
        push(&mut s, format!("weights {w}"));
        if let Some(note) = &self.input_note {
            push(&mut s, format!("note: {note}"));
        }
        push(&mut s, String::new());

        push(&mut s, "== weighted plane ==".into());
        push(
            &mut s,
            format!(
                "fan rays: v0 = {}, v1 = {}, v2 = {}",
                self.fan.rays[0], self.fan.rays[1], self.fan.rays[2]
            ),
        );
        push(&mut s, format!("u1 chart generators: {}", self.u1_generator_forms.join(", ")));
        push(&mut s, format!("u2 chart generators: {}", self.u2_generator_forms.join(", ")));
        if self.redundant.is_empty() {
            push(&mut s, "redundant generators: none".into());
        } else {
            push(&mut s, format!("redundant generators: {}", self.redundant.join(", ")));
        }
        push(
            &mut s,
            format!(
                "relations ({}, {}):",
                self.relations.len(),
                if self.relations_hold { "all verified" } else { "SUBSTITUTION FAILED" }
            ),
        );
        for r in &self.relations {
            push(&mut s, format!("  {r}"));
        }
        push(
            &mut s,
            format!(
                "toric/classical correspondence: {} pairs, {}",
                self.correspondence.pairs.len(),
                if self.correspondence.all_match { "all match" } else { "MISMATCH" }
            ),
        );
        push(&mut s, String::new());

        push(&mut s, "== resolution of the x1-chart cone ==".into());
        push(&mut s, format!("digits: {:?}", self.resolution.b));
        push(&mut s, format!("self-intersections: {:?}", self.resolution.self_intersections()));
        let rays: Vec<String> = self.resolution.rays.iter().map(|r| r.to_string()).collect();
        push(&mut s, format!("rays: {}", rays.join(", ")));
        for f in &self.chart_curves {
            push(&mut s, format!("  {f}"));
        }
        push(
            &mut s,
            format!(
                "chart recursion F_(j+1) = F_j(x^b y, 1/x): {}",
                if self.recursion_verified { "verified" } else { "FAILED" }
            ),
        );
        push(&mut s, String::new());

        push(&mut s, "== smoothness ==".into());
        for c in &self.certificate.charts {
            push(&mut s, format!("{}: {} -> {}", c.chart, c.method, c.verdict));
            if let Some(note) = &c.new_line_note {
                push(&mut s, format!("    {note}"));
            }
            if let Some(step) = c.recursion_step_verified {
                push(
                    &mut s,
                    format!("    recursion step: {}", if step { "verified" } else { "FAILED" }),
                );
            }
        }
        push(&mut s, format!("overall: {}", self.certificate.overall));
        push(&mut s, String::new());

        push(&mut s, "== genus ==".into());
        for (name, p) in [("primary", &self.primary), ("dual", &self.dual)] {
            push(
                &mut s,
                format!(
                    "{name} projection to {}: degree {}, ramification degree {}",
                    p.target,
                    p.degree,
                    p.ramification_degree()
                ),
            );
            for o in &p.orbits {
                push(
                    &mut s,
                    format!(
                        "  {} point{}, coefficient {}, minimal polynomial {}, {}",
                        o.point_count,
                        if o.point_count == 1 { "" } else { "s" },
                        o.coefficient,
                        o.minimal_polynomial,
                        o.location
                    ),
                );
            }
        }
        push(&mut s, format!("genus by riemann-hurwitz:      {}", self.genus.hurwitz));
        push(&mut s, format!("genus by newton lattice count: {}", self.genus.newton));
        push(&mut s, format!("genus by the dual projection:  {}", self.genus.dual));
        push(
            &mut s,
            format!("agreement: {}", if self.genus.all_agree() { "yes" } else { "NO" }),
        );
        push(&mut s, String::new());
        push(&mut s, format!("result: {}", if self.passed() { "pass" } else { "FAIL" }));
        s
    }
}

/// One sweep row.
#[derive(Debug, Clone)]
pub struct SweepCase {
    pub weights: Weights,
    pub genus: GenusTriple,
    pub overall: OverallVerdict,
    pub passed: bool,
}

/// Runs the genus triple and smoothness certificate over the coprime,
/// ordered weight triples inside the given half-open ranges; combinations
/// that do not form valid weights are skipped.
pub fn sweep(
    a_range: std::ops::Range<i64>,
    m_range: std::ops::Range<i64>,
    n_range: std::ops::Range<i64>,
    oracle_bias: i64,
) -> Vec<SweepCase> {
    let mut out = Vec::new();
    for a in a_range {
        for m in m_range.clone() {
            for n in n_range.clone() {
                let Ok(w) = Weights::new(a, m, n) else { continue };
                let res = hj_resolve(&w);
                let cert = smoothness_certificate(&w, &res);
                let genus = genus_triple(&w, oracle_bias);
                let recursion = verify_chart_recursion(&w, &res).iter().all(|&(_, ok)| ok);
                let passed =
                    genus.all_agree() && cert.overall == OverallVerdict::Smooth && recursion;
                out.push(SweepCase { weights: w, genus, overall: cert.overall, passed });
            }
        }
    }
    out
}

/// JSON for a sweep run, same stability rules as the full report.
pub fn sweep_to_json(cases: &[SweepCase]) -> Value {
    json!({
        "cases": cases.iter().map(|c| json!({
            "a": c.weights.a(),
            "dual_projection": c.genus.dual.to_string(),
            "hurwitz": c.genus.hurwitz.to_string(),
            "m": c.weights.m(),
            "n": c.weights.n(),
            "newton_interior": c.genus.newton.to_string(),
            "passed": c.passed,
            "smoothness": c.overall.to_string(),
        })).collect::<Vec<_>>(),
        "passed": cases.iter().filter(|c| c.passed).count(),
        "total": cases.len(),
    })
}

pub fn sweep_to_text(cases: &[SweepCase]) -> String {
    let mut s = String::new();
    s.push_str("   a   m   n   genus  smoothness  agreement\n");
    for c in cases {
        let agree = if c.genus.all_agree() { "yes" } else { "NO" };
        s.push_str(&format!(
            "{:>4} {:>3} {:>3} {:>7}  {:<10}  {agree}\n",
            c.weights.a(),
            c.weights.m(),
            c.weights.n(),
            c.genus.hurwitz,
            c.overall.to_string(),
        ));
    }
    let ok = cases.iter().filter(|c| c.passed).count();
    s.push_str(&format!("{ok}/{} cases passed\n", cases.len()));
    s
}
