//! Minimal projective resolutions of simple modules by iterated covers and kernels.

use super::algebra::{AlgElem, FiniteDimAlgebra};
use super::linalg::{kernel, rank, SparseVec};
use super::module::{cover_images, FreeModule, Submodule};
use super::OracleError;

/// Matrix of algebra elements; `m[r][c]` maps summand `c` of the source to summand `r` of the target.
pub type Matrix = Vec<Vec<AlgElem>>;

/// A projective resolution `… → Q^1 → Q^0 → S_vertex`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub vertex: usize,
    pub modules: Vec<FreeModule>,
    /// `diffs[n]` maps `Q^n` to `Q^{n-1}`; `diffs[0]` is empty.
    pub diffs: Vec<Matrix>,
    pub graded: bool,
}

impl Resolution {
    pub fn max_degree(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn vertices(&self, n: usize) -> Vec<usize> {
        self.modules[n].summands.iter().map(|s| s.0).collect()
    }

    pub fn degrees(&self, n: usize) -> Vec<i64> {
        self.modules[n].summands.iter().map(|s| s.1).collect()
    }

    pub fn ext_dim(&self, n: usize, t: usize) -> usize {
        self.modules[n].summands.iter().filter(|s| s.0 == t).count()
    }
}

/// Minimal resolution of the simple at `v` up to homological degree `n_max`.
pub fn min_resolution(alg: &FiniteDimAlgebra, v: usize, n_max: usize, graded: bool) -> Result<Resolution, OracleError> {
    if graded && !alg.relations_homogeneous() {
        return Err(OracleError::NotGraded);
    }
    let q0 = FreeModule::new(alg, vec![(v, 0)]);
    let omega = Submodule {
        basis: (0..q0.dim())
            .filter(|&i| alg.len(q0.coord(i).1) > 0)
            .map(|i| SparseVec::unit(i, alg.one()))
            .collect(),
    };
    let mut modules = vec![q0];
    let mut diffs = vec![Vec::new()];
    let mut omega = omega;
    for _ in 1..=n_max {
        let prev = modules.last().expect("nonempty");
        let gens = omega.top_generators(alg, prev, graded);
        let (next, images) = cover_images(alg, prev, &gens);
        let matrix: Matrix = (0..prev.rank())
            .map(|r| gens.iter().map(|(_, _, g)| prev.component(alg, g, r)).collect())
            .collect();
        omega = Submodule { basis: kernel(alg.field, &images) };
        modules.push(next);
        diffs.push(matrix);
    }
    Ok(Resolution { vertex: v, modules, diffs, graded })
}

/// `a ∘ b` for composable matrices.
pub fn compose(alg: &FiniteDimAlgebra, a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let cols = b.first().map_or(0, Vec::len);
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let mut out = AlgElem::new();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[r][k].is_zero() && !bk[c].is_zero() {
                            out.add_scaled(alg.one(), &alg.mul(&a[r][k], &bk[c]));
                        }
                    }
                    out
                })
                .collect()
        })
        .collect()
}

pub fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(AlgElem::is_zero))
}

/// Outcome of checking a candidate resolution in the algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComplexCheck {
    /// Degrees `n` with `d_{n-1} ∘ d_n ≠ 0`.
    pub nonzero_composites: Vec<usize>,
    /// Degrees where homology is wrong (degree 0 means the cokernel is not simple).
    pub inexact: Vec<usize>,
    /// Degrees with an entry outside the radical.
    pub non_minimal: Vec<usize>,
    /// Degrees where shifts disagree with entry lengths (graded only).
    pub bad_degrees: Vec<usize>,
}

impl ComplexCheck {
    pub fn ok(&self) -> bool {
        self.nonzero_composites.is_empty() && self.inexact.is_empty() && self.non_minimal.is_empty() && self.bad_degrees.is_empty()
    }
}

pub fn check_complex(alg: &FiniteDimAlgebra, res: &Resolution) -> ComplexCheck {
    let mut out = ComplexCheck::default();
    let top = res.max_degree();
    let mut ranks = vec![0usize; top + 2];
    for n in 1..=top {
        let images = res.modules[n].images(alg, &res.modules[n - 1], &res.diffs[n]);
        ranks[n] = rank(alg.field, &images);
        if res.diffs[n].iter().flatten().any(|e| e.iter().any(|(b, _)| alg.len(b) == 0)) {
            out.non_minimal.push(n);
        }
        if res.graded {
            let ok = res.diffs[n].iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, e)| {
                    e.iter().all(|(b, _)| res.modules[n - 1].summands[r].1 + alg.len(b) as i64 == res.modules[n].summands[c].1)
                })
            });
            if !ok {
                out.bad_degrees.push(n);
            }
        }
        if n >= 2 && !is_zero_matrix(&compose(alg, &res.diffs[n - 1], &res.diffs[n])) {
            out.nonzero_composites.push(n);
        }
    }
    if top >= 1 && res.modules[0].dim() - ranks[1] != 1 {
        out.inexact.push(0);
    }
    for n in 1..top {
        if res.modules[n].dim() - ranks[n] != ranks[n + 1] {
            out.inexact.push(n);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{build_algebra, FieldKind};
    use crate::presentation::Presentation;
    use crate::samples;

    #[test]
    fn triangle_resolution_is_linear() {
        let g = samples::triangle(1);
        let p = Presentation::new(&g);
        let alg = build_algebra(&g, &p, FieldKind::Rational).unwrap();
        let res = min_resolution(&alg, 0, 4, true).unwrap();
        for n in 0..=4 {
            assert_eq!(res.modules[n].rank(), n + 1);
            assert!(res.degrees(n).iter().all(|&d| d == n as i64));
        }
        assert!(check_complex(&alg, &res).ok());
    }
}
