//! Cross-checks of the combinatorial results against the brute-force algebra.

use serde::Serialize;

use crate::classify::{homogeneity_label, koszul_report};
use crate::graph::BrauerGraph;
use crate::oracle::algebra::{ideal_contains, OracleRelation, DEFAULT_MAX_PATHS};
use crate::oracle::compare::{check_algebra, DiffReport};
use crate::oracle::resolve::{check_complex, min_resolution};
use crate::oracle::{FieldKind, FiniteDimAlgebra, Rep};
use crate::presentation::{Presentation, RelationKind};
use crate::resolution::{self, ResolutionStep};
use crate::strings::{self, StringDescriptor};

/// A deliberate corruption applied before checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fault {
    /// Negate one entry of the explicit differential out of `Q^degree` for the simple at `edge`.
    FlipSign { edge: usize, degree: usize, row: usize, col: usize },
    /// Leave out the `k`-th minimal relation when building the algebra.
    DropRelation(usize),
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_degree: usize,
    pub field: FieldKind,
    pub faults: Vec<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_degree: 4, field: FieldKind::Rational, faults: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Regime {
    pub reduced: bool,
    pub graded: bool,
    pub truncated_edges: bool,
    pub homogeneity: String,
    /// Which explicit resolution applies, if any.
    pub explicit: Option<&'static str>,
}

impl Regime {
    pub fn of(g: &BrauerGraph) -> Self {
        let p = Presentation::new(g);
        let h = p.homogeneity();
        let plain = !g.has_truncated_edge() && g.has_trivial_quantizer();
        let explicit = if plain && g.is_reduced() {
            Some("reduced")
        } else if plain && matches!(h, crate::presentation::Homogeneity::TwoDHomogeneous(_)) {
            Some("2-d-homogeneous")
        } else {
            None
        };
        Regime {
            reduced: g.is_reduced(),
            graded: g.is_length_graded(),
            truncated_edges: g.has_truncated_edge(),
            homogeneity: homogeneity_label(h),
            explicit,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub regime: Regime,
    pub sections: Vec<(String, DiffReport)>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.sections.iter().all(|(_, r)| r.is_empty())
    }

    pub fn checks(&self) -> usize {
        self.sections.iter().map(|(_, r)| r.checks).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "regime": self.regime,
            "ok": self.ok(),
            "checks": self.checks(),
            "sections": self.sections.iter().map(|(name, r)| serde_json::json!({
                "name": name,
                "checks": r.checks,
                "diffs": r.diffs,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Runs every cross-check applicable to the regime of `g`.
pub fn verify(g: &BrauerGraph, opts: &VerifyOptions) -> VerifyReport {
    let p = Presentation::new(g);
    let regime = Regime::of(g);
    let mut sections = Vec::new();

    sections.push(("minimal relations".to_string(), check_minimal_relations(g, &p, opts.field)));

    let dropped: Vec<usize> = opts
        .faults
        .iter()
        .filter_map(|f| match f {
            Fault::DropRelation(k) => Some(*k),
            _ => None,
        })
        .collect();
    let kept: Vec<_> = p
        .minimal
        .iter()
        .enumerate()
        .filter(|(k, _)| !dropped.contains(k))
        .map(|(_, &i)| p.relations[i].clone())
        .collect();
    let alg = match FiniteDimAlgebra::build(&p.quiver, &kept, g.nilpotency_bound() + 1, opts.field, DEFAULT_MAX_PATHS) {
        Ok(a) => a,
        Err(err) => {
            let mut r = DiffReport::default();
            r.fail("algebra from minimal relations", err.to_string());
            sections.push(("algebra".to_string(), r));
            return VerifyReport { regime, sections };
        }
    };
    sections.push(("algebra".to_string(), check_algebra(g, &alg, regime.graded)));

    if regime.reduced {
        sections.push(("strings".to_string(), check_strings(g, &p, &alg, opts.max_degree)));
    }
    if regime.explicit.is_some() {
        sections.push(("resolution".to_string(), check_explicit(g, &alg, regime.graded, opts)));
    }
    if regime.graded && koszul_report(g, opts.field).is_koszul() {
        sections.push(("koszul".to_string(), check_linear(g, &alg, opts.max_degree)));
    }
    VerifyReport { regime, sections }
}

/// A type-two relation is in the minimal set exactly when the others do not generate it.
pub fn check_minimal_relations(g: &BrauerGraph, p: &Presentation, field: FieldKind) -> DiffReport {
    let mut report = DiffReport::default();
    if p.a2_case {
        return report;
    }
    let converted: Result<Vec<_>, _> = p.relations.iter().map(|r| OracleRelation::from_relation(field, r)).collect();
    let converted = match converted {
        Ok(c) => c,
        Err(err) => {
            report.fail("relations over the field", err.to_string());
            return report;
        }
    };
    let bound = g.nilpotency_bound() + 2;
    for (i, r) in p.relations.iter().enumerate() {
        if r.kind != RelationKind::TypeTwo {
            continue;
        }
        let others: Vec<OracleRelation> =
            converted.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
        let name = format!("type-two relation at {}", g.edge_id(r.edge));
        match ideal_contains(&p.quiver, &converted[i], &others, bound, field) {
            Ok(redundant) => {
                report.compare(name, p.minimal.contains(&i), !redundant);
            }
            Err(err) => report.fail(name, err.to_string()),
        }
    }
    report
}

fn descriptor_counts(alg: &FiniteDimAlgebra, edges: Vec<usize>) -> Vec<usize> {
    let mut out = vec![0; alg.num_vertices];
    for e in edges {
        out[e] += 1;
    }
    out
}

/// Syzygy descriptors against realized modules and oracle kernels; Ext dimensions against oracle resolutions.
fn check_strings(g: &BrauerGraph, p: &Presentation, alg: &FiniteDimAlgebra, n_max: usize) -> DiffReport {
    let mut report = DiffReport::default();
    for e in 0..g.num_edges() {
        let name = g.edge_id(e);
        let trace = match strings::iterate_syzygy(g, e, n_max) {
            Ok(t) => t,
            Err(err) => {
                report.fail(format!("syzygies of S({name})"), err.to_string());
                continue;
            }
        };
        let mut prev: Option<Rep> = None;
        for n in 0..=n_max {
            let sigma = trace.omega(n);
            let label = format!("Ω^{n}(S({name})) = {}", sigma.display(g));
            let rep = match strings::realize(g, &p.quiver, &sigma, alg) {
                Ok(r) => r,
                Err(err) => {
                    report.fail(label, err.to_string());
                    break;
                }
            };
            report.require(format!("{label} satisfies the relations"), rep.satisfies(alg, &p.relations));
            compare_shape(&mut report, g, alg, &label, &sigma, &rep.shape(alg));
            if let Some(prev) = &prev {
                let (free, kernel) = prev.syzygy(alg);
                compare_shape(&mut report, g, alg, &format!("{label} as oracle kernel"), &sigma, &kernel.shape(alg, &free));
            }
            prev = Some(rep);
        }
        match min_resolution(alg, e, n_max, false) {
            Ok(res) => {
                for n in 0..=n_max {
                    for t in 0..g.num_edges() {
                        let combinatorial = resolution::ext_dim(g, e, t, n).ok();
                        report.compare(
                            format!("dim Ext^{n}(S({name}), S({}))", g.edge_id(t)),
                            combinatorial,
                            Some(res.ext_dim(n, t)),
                        );
                    }
                }
            }
            Err(err) => report.fail(format!("oracle resolution of S({name})"), err.to_string()),
        }
    }
    report
}

pub fn compare_shape(
    report: &mut DiffReport,
    g: &BrauerGraph,
    alg: &FiniteDimAlgebra,
    label: &str,
    sigma: &StringDescriptor,
    shape: &crate::oracle::module::ModuleShape,
) {
    match strings::dimension(g, sigma) {
        Ok(d) => {
            report.compare(format!("{label}: dimension"), d, shape.dim());
        }
        Err(err) => report.fail(format!("{label}: dimension"), err.to_string()),
    }
    report.compare(format!("{label}: top"), descriptor_counts(alg, sigma.top()), shape.top.clone());
    report.compare(format!("{label}: socle"), descriptor_counts(alg, sigma.socle()), shape.socle.clone());
}

fn apply_flips(steps: &mut [ResolutionStep], e: usize, faults: &[Fault]) {
    for f in faults {
        if let Fault::FlipSign { edge, degree, row, col } = *f {
            if edge != e || degree >= steps.len() {
                continue;
            }
            for x in steps[degree].entries.iter_mut().filter(|x| x.row == row && x.col == col) {
                x.negative = !x.negative;
            }
        }
    }
}

/// The explicit resolutions, run one degree past the maximum so exactness is tested through it.
fn check_explicit(g: &BrauerGraph, alg: &FiniteDimAlgebra, graded: bool, opts: &VerifyOptions) -> DiffReport {
    let mut report = DiffReport::default();
    let n_max = opts.max_degree;
    for e in 0..g.num_edges() {
        let name = g.edge_id(e);
        let mut steps = match resolution::resolve_any(g, e, n_max + 1) {
            Ok(s) => s,
            Err(err) => {
                report.fail(format!("explicit resolution of S({name})"), err.to_string());
                continue;
            }
        };
        apply_flips(&mut steps, e, &opts.faults);
        let check = check_complex(alg, &resolution::to_oracle(alg, e, &steps, graded));
        report.compare(format!("S({name}): degrees with nonzero composites"), Vec::new(), check.nonzero_composites);
        report.compare(format!("S({name}): inexact degrees"), Vec::new(), check.inexact);
        report.compare(format!("S({name}): entries outside the radical"), Vec::new(), check.non_minimal);
        report.compare(format!("S({name}): degree shifts"), Vec::new(), check.bad_degrees);
        match min_resolution(alg, e, n_max, graded) {
            Ok(res) => {
                for n in 0..=n_max {
                    let mut ours: Vec<(usize, i64)> = steps[n]
                        .summands
                        .iter()
                        .zip(&steps[n].generation_degrees)
                        .map(|(&(_, v), &d)| (v, if graded { d as i64 } else { 0 }))
                        .collect();
                    let mut theirs: Vec<(usize, i64)> = res.modules[n].summands.clone();
                    if !graded {
                        theirs.iter_mut().for_each(|s| s.1 = 0);
                    }
                    ours.sort();
                    theirs.sort();
                    report.compare(format!("S({name}): summands of Q^{n}"), ours, theirs);
                }
            }
            Err(err) => report.fail(format!("oracle resolution of S({name})"), err.to_string()),
        }
    }
    report
}

/// Koszul verdicts: the graded oracle resolution of every simple is linear.
fn check_linear(g: &BrauerGraph, alg: &FiniteDimAlgebra, n_max: usize) -> DiffReport {
    let mut report = DiffReport::default();
    for e in 0..g.num_edges() {
        match min_resolution(alg, e, n_max, true) {
            Ok(res) => {
                for n in 0..=n_max {
                    let degrees = res.degrees(n);
                    report.compare(format!("S({}): generator degrees of Q^{n}", g.edge_id(e)), vec![n as i64; degrees.len()], degrees);
                }
            }
            Err(err) => report.fail(format!("graded oracle resolution of S({})", g.edge_id(e)), err.to_string()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn clean_runs_agree() {
        for g in [samples::triangle(1), samples::path(&[1, 1, 1, 1]), samples::triangle(2), samples::star(3, 2)] {
            let r = verify(&g, &VerifyOptions { max_degree: 4, ..Default::default() });
            assert!(r.ok(), "{}", r.to_json());
        }
    }

    #[test]
    fn faults_are_caught() {
        let g = samples::triangle(1);
        let flip = Fault::FlipSign { edge: 0, degree: 2, row: 1, col: 1 };
        let r = verify(&g, &VerifyOptions { max_degree: 3, faults: vec![flip], ..Default::default() });
        assert!(!r.ok());
        let r = verify(&g, &VerifyOptions { max_degree: 3, faults: vec![Fault::DropRelation(0)], ..Default::default() });
        assert!(!r.ok());
    }
}
