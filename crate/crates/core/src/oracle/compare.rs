//! Structured comparison of combinatorial predictions against oracle results.

use std::fmt::Debug;

use serde::Serialize;

use crate::graph::{BrauerGraph, HalfEdge};

use super::algebra::FiniteDimAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub check: String,
    pub expected: String,
    pub actual: String,
}

/// Every mismatch found; empty `diffs` means agreement.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub checks: usize,
    pub diffs: Vec<Diff>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    /// Records one comparison, keeping it only on mismatch.
    pub fn compare<T: PartialEq + Debug>(&mut self, check: impl Into<String>, expected: T, actual: T) -> bool {
        self.checks += 1;
        if expected == actual {
            true
        } else {
            self.diffs.push(Diff { check: check.into(), expected: format!("{expected:?}"), actual: format!("{actual:?}") });
            false
        }
    }

    pub fn require(&mut self, check: impl Into<String>, ok: bool) -> bool {
        self.compare(check, true, ok)
    }

    pub fn fail(&mut self, check: impl Into<String>, detail: impl Into<String>) {
        self.checks += 1;
        self.diffs.push(Diff { check: check.into(), expected: "success".into(), actual: detail.into() });
    }

    pub fn merge(&mut self, other: DiffReport) {
        self.checks += other.checks;
        self.diffs.extend(other.diffs);
    }
}

/// `dim e_s A` read off the graph: each nontruncated end contributes `val·m`, each truncated end one.
pub fn expected_projective_dim(g: &BrauerGraph, e: usize) -> usize {
    (0..2)
        .map(|end| {
            let h = HalfEdge::new(e, end);
            if g.is_truncated_half_edge(h) {
                1
            } else {
                g.weight(g.vertex_of(h))
            }
        })
        .sum()
}

/// Sanity checks of the algebra itself: projective dimensions, selfinjectivity, associativity, grading.
pub fn check_algebra(g: &BrauerGraph, alg: &FiniteDimAlgebra, graded: bool) -> DiffReport {
    let mut report = DiffReport::default();
    for e in 0..g.num_edges() {
        let name = g.edge_id(e);
        report.compare(format!("dim P({name})"), expected_projective_dim(g, e), alg.starting_at(e).len());
        report.compare(format!("socle of P({name})"), vec![e], alg.projective_socle(e));
    }
    report.require("associativity", alg.check_associative());
    if graded {
        report.require("length grading", alg.check_graded());
    }
    report
}
