//! Yoneda products by lifting cocycles to chain maps between resolutions of simples.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use super::algebra::{AlgElem, FiniteDimAlgebra};
use super::field::Scalar;
use super::linalg::{Echelon, SparseVec};
use super::resolve::{Matrix, Resolution};
use super::OracleError;

/// A class in `Ext^degree(S_source, S_target)`: coefficients over the summands of
/// `Q^degree` of the source resolution (nonzero only at summands lying over the target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElem {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    pub coeffs: SparseVec,
}

impl ExtElem {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// `Some(c)` when `self = c · other` with `c ≠ 0`.
    pub fn scalar_multiple_of(&self, other: &ExtElem) -> Option<Scalar> {
        if self.source != other.source || self.target != other.target || self.degree != other.degree {
            return None;
        }
        let (i, c) = other.coeffs.iter().next()?;
        let k = self.coeffs.get(i)?.div(c);
        (self.coeffs == other.coeffs.scaled(k)).then_some(k)
    }
}

struct Solver {
    echelon: Echelon,
    coords: Vec<usize>,
}

/// Resolutions of every simple together with cached lifting systems.
pub struct YonedaContext<'a> {
    pub alg: &'a FiniteDimAlgebra,
    pub resolutions: Vec<Resolution>,
    solvers: RefCell<HashMap<(usize, usize, usize), Solver>>,
}

impl<'a> YonedaContext<'a> {
    /// `resolutions[v]` must resolve the simple at vertex `v`.
    pub fn new(alg: &'a FiniteDimAlgebra, resolutions: Vec<Resolution>) -> Self {
        YonedaContext { alg, resolutions, solvers: RefCell::new(HashMap::new()) }
    }

    pub fn identity(&self, s: usize) -> ExtElem {
        ExtElem { source: s, target: s, degree: 0, coeffs: SparseVec::unit(0, self.alg.one()) }
    }

    /// Unit vectors at the summands of `Q^n` of `S_s` lying over `t`.
    pub fn basis(&self, s: usize, t: usize, n: usize) -> Vec<ExtElem> {
        self.resolutions[s].modules[n]
            .summands
            .iter()
            .enumerate()
            .filter(|(_, x)| x.0 == t)
            .map(|(i, _)| ExtElem { source: s, target: t, degree: n, coeffs: SparseVec::unit(i, self.alg.one()) })
            .collect()
    }

    /// Solves `d^k_T z = rhs` with `z` supported on coordinates ending at `w`.
    fn solve(&self, t: usize, k: usize, w: usize, rhs: &SparseVec) -> Result<SparseVec, OracleError> {
        let alg = self.alg;
        let res = &self.resolutions[t];
        let mut cache = self.solvers.borrow_mut();
        let solver = cache.entry((t, k, w)).or_insert_with(|| {
            let m = &res.modules[k];
            let coords: Vec<usize> = (0..m.dim()).filter(|&i| m.end_vertex(alg, i) == w).collect();
            let mut echelon = Echelon::new(alg.field);
            for &i in &coords {
                echelon.insert(m.apply(alg, &res.modules[k - 1], &res.diffs[k], &SparseVec::unit(i, alg.one())));
            }
            Solver { echelon, coords }
        });
        let tags = solver
            .echelon
            .solve(rhs)
            .ok_or_else(|| OracleError::Lift(format!("no lift into degree {k} of the resolution of vertex {t}")))?;
        Ok(tags.map_indices(|j| solver.coords[j]))
    }

    /// Chain map `X_k : Q^{a+k}_S → Q^k_T` for `k = 0..=steps` lifting `x`.
    pub fn lift(&self, x: &ExtElem, steps: usize) -> Result<Vec<Matrix>, OracleError> {
        let alg = self.alg;
        let rs = &self.resolutions[x.source];
        let rt = &self.resolutions[x.target];
        let a = x.degree;
        if a + steps > rs.max_degree() || steps > rt.max_degree() {
            return Err(OracleError::Lift("resolution too short for the requested lift".into()));
        }
        let e_t = SparseVec::unit(alg.idempotent(x.target), alg.one());
        let cols = rs.modules[a].rank();
        let x0: Matrix = vec![(0..cols)
            .map(|c| x.coeffs.get(c).map_or_else(AlgElem::new, |k| e_t.scaled(k)))
            .collect()];
        let mut maps = vec![x0];
        for k in 1..=steps {
            let prev = &maps[k - 1];
            let src = &rs.modules[a + k];
            let dst = &rt.modules[k];
            let mut xk: Matrix = vec![vec![AlgElem::new(); src.rank()]; dst.rank()];
            for c in 0..src.rank() {
                let w = src.summands[c].0;
                let mut rhs = SparseVec::new();
                for (r, row) in prev.iter().enumerate() {
                    let mut entry = AlgElem::new();
                    for (j, xj) in row.iter().enumerate() {
                        let d = &rs.diffs[a + k][j][c];
                        if !xj.is_zero() && !d.is_zero() {
                            entry.add_scaled(alg.one(), &alg.mul(xj, d));
                        }
                    }
                    rhs.add_scaled(alg.one(), &rt.modules[k - 1].embed(alg, r, &entry));
                }
                if rhs.is_zero() {
                    continue;
                }
                let z = self.solve(x.target, k, w, &rhs)?;
                for (i, coef) in z.iter() {
                    let (r, b) = dst.coord(i);
                    xk[r][c].add_scaled(coef, &SparseVec::unit(b, alg.one()));
                }
            }
            maps.push(xk);
        }
        Ok(maps)
    }

    /// The product "first `x`, then `y`" in `Ext^{a+b}(S_x.source, S_y.target)`.
    pub fn multiply(&self, x: &ExtElem, y: &ExtElem) -> Result<ExtElem, OracleError> {
        assert_eq!(x.target, y.source, "classes are not composable");
        let alg = self.alg;
        let b = y.degree;
        let maps = self.lift(x, b)?;
        let xb = &maps[b];
        let u = y.target;
        let e_u = alg.idempotent(u);
        let rs = &self.resolutions[x.source];
        let mut coeffs = Vec::new();
        for c in 0..rs.modules[x.degree + b].rank() {
            if rs.modules[x.degree + b].summands[c].0 != u {
                continue;
            }
            let mut total = alg.field.zero();
            for (r, yr) in y.coeffs.iter() {
                if let Some(k) = xb[r][c].get(e_u) {
                    total = total + yr * k;
                }
            }
            coeffs.push((c, total));
        }
        Ok(ExtElem { source: x.source, target: u, degree: x.degree + b, coeffs: SparseVec::from_entries(coeffs) })
    }
}

/// Dimensions of the subalgebra generated in degrees `≤ max_gen`, against the full Ext dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SubalgebraDims {
    /// `(degree, source, target) → (subalgebra dim, Ext dim)`.
    pub components: BTreeMap<(usize, usize, usize), (usize, usize)>,
}

impl SubalgebraDims {
    pub fn totals(&self, degree: usize) -> (usize, usize) {
        self.components
            .iter()
            .filter(|((d, _, _), _)| *d == degree)
            .fold((0, 0), |(a, b), (_, (x, y))| (a + x, b + y))
    }
}

pub fn generated_subalgebra_dims(ctx: &YonedaContext, max_gen: usize, n_max: usize) -> Result<SubalgebraDims, OracleError> {
    let nv = ctx.alg.num_vertices;
    let field = ctx.alg.field;
    // sub[k][(s, t)] is a basis of the degree-k part
    let mut sub: Vec<HashMap<(usize, usize), Vec<ExtElem>>> = Vec::new();
    let mut zero = HashMap::new();
    for s in 0..nv {
        zero.insert((s, s), vec![ctx.identity(s)]);
    }
    sub.push(zero);
    let mut out = SubalgebraDims::default();
    for s in 0..nv {
        out.components.insert((0, s, s), (1, 1));
    }
    for k in 1..=n_max {
        let mut layer = HashMap::new();
        for s in 0..nv {
            for u in 0..nv {
                let mut ech = Echelon::new(field);
                let mut basis = Vec::new();
                for d in 1..=max_gen.min(k) {
                    for t in 0..nv {
                        let Some(xs) = sub[k - d].get(&(s, t)) else { continue };
                        let ys = ctx.basis(t, u, d);
                        for x in xs {
                            for y in &ys {
                                let prod = ctx.multiply(x, y)?;
                                if ech.add(prod.coeffs.clone()) {
                                    basis.push(prod);
                                }
                            }
                        }
                    }
                }
                let ext = ctx.resolutions[s].ext_dim(k, u);
                if ext > 0 || !basis.is_empty() {
                    out.components.insert((k, s, u), (basis.len(), ext));
                }
                if !basis.is_empty() {
                    layer.insert((s, u), basis);
                }
            }
        }
        sub.push(layer);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::resolve::min_resolution;
    use crate::oracle::{build_algebra, FieldKind};
    use crate::presentation::Presentation;
    use crate::samples;

    #[test]
    fn identity_is_neutral() {
        let g = samples::triangle(1);
        let p = Presentation::new(&g);
        let alg = build_algebra(&g, &p, FieldKind::Rational).unwrap();
        let res = (0..3).map(|v| min_resolution(&alg, v, 3, false).unwrap()).collect();
        let ctx = YonedaContext::new(&alg, res);
        for x in ctx.basis(0, 1, 1).into_iter().chain(ctx.basis(0, 0, 2)) {
            let left = ctx.multiply(&ctx.identity(0), &x).unwrap();
            assert_eq!(left, x);
            let right = ctx.multiply(&x, &ctx.identity(x.target)).unwrap();
            assert_eq!(right, x);
        }
    }
}
