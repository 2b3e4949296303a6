//! Path algebras modulo relations, truncated at a length bound and reduced by row reduction.

use std::collections::HashMap;

use crate::presentation::{Path, Quiver, Relation};

use super::field::{FieldKind, Scalar};
use super::linalg::{Echelon, SparseVec};
use super::OracleError;

/// Default cap on the number of enumerated paths.
pub const DEFAULT_MAX_PATHS: usize = 200_000;

type Key = (usize, Vec<usize>);

/// Relations in oracle form: terms `(coefficient, start, arrows)`.
#[derive(Debug, Clone)]
pub struct OracleRelation {
    pub terms: Vec<(Scalar, usize, Vec<usize>)>,
}

impl OracleRelation {
    pub fn from_relation(field: FieldKind, r: &Relation) -> Result<Self, OracleError> {
        let terms = r
            .terms
            .iter()
            .map(|(c, p)| Ok((field.from_rational(*c)?, p.start, p.arrows.clone())))
            .collect::<Result<Vec<_>, OracleError>>()?;
        Ok(OracleRelation { terms })
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn min_len(&self) -> usize {
        self.terms.iter().map(|t| t.2.len()).min().unwrap_or(0)
    }

    fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].2.len() == w[1].2.len())
    }
}

/// Span of all nonzero paths up to a length bound, modulo the truncated ideal of the relations.
pub struct PathSpace {
    pub field: FieldKind,
    pub bound: usize,
    arrow_ends: Vec<(usize, usize)>,
    /// Surviving paths ordered by (length, start, arrows).
    paths: Vec<Key>,
    index: HashMap<Key, usize>,
    by_start: Vec<Vec<usize>>,
    by_end: Vec<Vec<usize>>,
    monomials: Vec<Vec<usize>>,
    ideal: Echelon,
}

impl PathSpace {
    pub fn new(
        quiver: &Quiver,
        relations: &[OracleRelation],
        bound: usize,
        field: FieldKind,
        max_paths: usize,
    ) -> Result<Self, OracleError> {
        let nv = quiver.vertices.len();
        let arrow_ends: Vec<(usize, usize)> = quiver.arrows.iter().map(|a| (a.source, a.target)).collect();
        let monomials: Vec<Vec<usize>> =
            relations.iter().filter(|r| r.is_monomial()).map(|r| r.terms[0].2.clone()).collect();
        let mut out_arrows = vec![Vec::new(); nv];
        for (i, &(s, _)) in arrow_ends.iter().enumerate() {
            out_arrows[s].push(i);
        }

        let mut layer: Vec<Key> = (0..nv).map(|v| (v, Vec::new())).collect();
        let mut paths = Vec::new();
        for len in 0..=bound {
            layer.sort();
            paths.extend(layer.iter().cloned());
            if paths.len() > max_paths {
                return Err(OracleError::TooLarge(paths.len()));
            }
            if len == bound {
                break;
            }
            let mut next = Vec::new();
            for (s, arrows) in &layer {
                let end = arrows.last().map_or(*s, |&a| arrow_ends[a].1);
                for &a in &out_arrows[end] {
                    let mut p = arrows.clone();
                    p.push(a);
                    if !monomials.iter().any(|m| p.ends_with(m)) {
                        next.push((*s, p));
                    }
                }
            }
            layer = next;
        }
        let index: HashMap<Key, usize> = paths.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut by_start = vec![Vec::new(); nv];
        let mut by_end = vec![Vec::new(); nv];
        for (i, (s, arrows)) in paths.iter().enumerate() {
            by_start[*s].push(i);
            by_end[arrows.last().map_or(*s, |&a| arrow_ends[a].1)].push(i);
        }
        let mut space = PathSpace {
            field,
            bound,
            arrow_ends,
            paths,
            index,
            by_start,
            by_end,
            monomials,
            ideal: Echelon::new(field),
        };
        space.fill_ideal(relations);
        Ok(space)
    }

    fn fill_ideal(&mut self, relations: &[OracleRelation]) {
        let mut ideal = Echelon::new(self.field);
        for r in relations.iter().filter(|r| !r.is_monomial()) {
            let (s, t) = self.relation_ends(r);
            let min = r.min_len();
            for &u in &self.by_end[s] {
                let ul = self.paths[u].1.len();
                if ul + min > self.bound {
                    continue;
                }
                for &v in &self.by_start[t] {
                    if ul + min + self.paths[v].1.len() > self.bound {
                        continue;
                    }
                    let mut items = Vec::new();
                    for (c, _, p) in &r.terms {
                        let mut arrows = self.paths[u].1.clone();
                        arrows.extend_from_slice(p);
                        arrows.extend_from_slice(&self.paths[v].1);
                        if let Some(col) = self.column(self.paths[u].0, &arrows) {
                            items.push((col, *c));
                        }
                    }
                    let vec = SparseVec::from_entries(items);
                    if !vec.is_zero() {
                        ideal.add(vec);
                    }
                }
            }
        }
        self.ideal = ideal;
    }

    fn relation_ends(&self, r: &OracleRelation) -> (usize, usize) {
        let (_, s, p) = &r.terms[0];
        (*s, p.last().map_or(*s, |&a| self.arrow_ends[a].1))
    }

    fn contains_monomial(&self, arrows: &[usize]) -> bool {
        (1..=arrows.len()).any(|k| self.monomials.iter().any(|m| arrows[..k].ends_with(m)))
    }

    /// Column of a path, `None` when the path is zero (too long or containing a monomial relation).
    pub fn column(&self, start: usize, arrows: &[usize]) -> Option<usize> {
        if arrows.len() > self.bound {
            return None;
        }
        match self.index.get(&(start, arrows.to_vec())) {
            Some(&c) => Some(c),
            None => {
                debug_assert!(self.contains_monomial(arrows));
                None
            }
        }
    }

    pub fn num_paths(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, col: usize) -> &(usize, Vec<usize>) {
        &self.paths[col]
    }

    pub fn vector(&self, terms: &[(Scalar, usize, Vec<usize>)]) -> SparseVec {
        SparseVec::from_entries(terms.iter().filter_map(|(c, s, p)| self.column(*s, p).map(|col| (col, *c))).collect())
    }

    /// Whether the combination lies in the ideal, modulo paths beyond the bound.
    pub fn in_ideal(&self, terms: &[(Scalar, usize, Vec<usize>)]) -> bool {
        self.ideal.contains(&self.vector(terms))
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.ideal.reduce(v)
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.ideal.is_pivot(col)
    }
}

/// Membership of `target` in the two-sided ideal generated by `gens`,
/// computed on paths of length at most `bound`.
pub fn ideal_contains(
    quiver: &Quiver,
    target: &OracleRelation,
    gens: &[OracleRelation],
    bound: usize,
    field: FieldKind,
) -> Result<bool, OracleError> {
    let space = PathSpace::new(quiver, gens, bound, field, DEFAULT_MAX_PATHS)?;
    Ok(space.in_ideal(&target.terms))
}

/// Elements are sparse vectors over the basis.
pub type AlgElem = SparseVec;

/// A finite-dimensional quotient of a path algebra with a basis of normal-form paths.
pub struct FiniteDimAlgebra {
    pub field: FieldKind,
    pub num_vertices: usize,
    pub arrow_ids: Vec<String>,
    space: PathSpace,
    basis_cols: Vec<usize>,
    col_to_basis: HashMap<usize, usize>,
    starts: Vec<usize>,
    ends: Vec<usize>,
    lens: Vec<usize>,
    starting: Vec<Vec<usize>>,
    start_pos: Vec<usize>,
    idempotents: Vec<usize>,
    arrows: Vec<AlgElem>,
    mult: HashMap<(usize, usize), AlgElem>,
    relations_homogeneous: bool,
}

impl FiniteDimAlgebra {
    /// Builds the quotient by the given relations. `bound` should exceed the length of every nonzero path.
    pub fn build(
        quiver: &Quiver,
        relations: &[Relation],
        bound: usize,
        field: FieldKind,
        max_paths: usize,
    ) -> Result<Self, OracleError> {
        let rels = relations
            .iter()
            .map(|r| OracleRelation::from_relation(field, r))
            .collect::<Result<Vec<_>, _>>()?;
        let space = PathSpace::new(quiver, &rels, bound, field, max_paths)?;
        for col in 0..space.num_paths() {
            if space.path(col).1.len() == bound && !space.is_pivot(col) {
                return Err(OracleError::NotNilpotent(bound));
            }
        }
        let basis_cols: Vec<usize> = (0..space.num_paths()).filter(|&c| !space.is_pivot(c)).collect();
        let col_to_basis: HashMap<usize, usize> = basis_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let nv = quiver.vertices.len();
        let arrow_target = |a: usize| quiver.arrows[a].target;
        let mut starts = Vec::new();
        let mut ends = Vec::new();
        let mut lens = Vec::new();
        let mut starting = vec![Vec::new(); nv];
        let mut start_pos = Vec::new();
        for (i, &c) in basis_cols.iter().enumerate() {
            let (s, p) = space.path(c);
            starts.push(*s);
            ends.push(p.last().map_or(*s, |&a| arrow_target(a)));
            lens.push(p.len());
            start_pos.push(starting[*s].len());
            starting[*s].push(i);
        }
        let idempotents = (0..nv)
            .map(|v| col_to_basis[&space.column(v, &[]).expect("trivial paths survive")])
            .collect();
        let mut alg = FiniteDimAlgebra {
            field,
            num_vertices: nv,
            arrow_ids: quiver.arrows.iter().map(|a| a.id.clone()).collect(),
            space,
            basis_cols,
            col_to_basis,
            starts,
            ends,
            lens,
            starting,
            start_pos,
            idempotents,
            arrows: Vec::new(),
            mult: HashMap::new(),
            relations_homogeneous: rels.iter().all(OracleRelation::is_homogeneous),
        };
        alg.arrows = (0..quiver.arrows.len()).map(|a| alg.path_elem(quiver.arrows[a].source, &[a])).collect();
        let dim = alg.dim();
        for i in 0..dim {
            for j in 0..dim {
                if alg.ends[i] != alg.starts[j] {
                    continue;
                }
                let mut p = alg.path_of(i).1.clone();
                p.extend_from_slice(&alg.path_of(j).1);
                let prod = alg.path_elem(alg.starts[i], &p);
                if !prod.is_zero() {
                    alg.mult.insert((i, j), prod);
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis_cols.len()
    }

    pub fn path_of(&self, i: usize) -> &(usize, Vec<usize>) {
        self.space.path(self.basis_cols[i])
    }

    pub fn start(&self, i: usize) -> usize {
        self.starts[i]
    }

    pub fn end(&self, i: usize) -> usize {
        self.ends[i]
    }

    pub fn len(&self, i: usize) -> usize {
        self.lens[i]
    }

    /// Basis elements of `e_v A`.
    pub fn starting_at(&self, v: usize) -> &[usize] {
        &self.starting[v]
    }

    /// Position of basis element `b` within `starting_at(start(b))`.
    pub fn start_position(&self, b: usize) -> usize {
        self.start_pos[b]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn arrow(&self, a: usize) -> &AlgElem {
        &self.arrows[a]
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn one(&self) -> Scalar {
        self.field.one()
    }

    /// Normal form of a path.
    pub fn path_elem(&self, start: usize, arrows: &[usize]) -> AlgElem {
        let Some(col) = self.space.column(start, arrows) else {
            return AlgElem::new();
        };
        let reduced = self.space.reduce(&SparseVec::unit(col, self.field.one()));
        reduced.map_indices(|c| self.col_to_basis[&c])
    }

    pub fn elem_of_path(&self, p: &Path) -> AlgElem {
        self.path_elem(p.start, &p.arrows)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Option<&AlgElem> {
        self.mult.get(&(i, j))
    }

    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut out = AlgElem::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if let Some(p) = self.mult.get(&(i, j)) {
                    out.add_scaled(a * b, p);
                }
            }
        }
        out
    }

    /// True when every relation has terms of one length, so path length grades the algebra.
    pub fn relations_homogeneous(&self) -> bool {
        self.relations_homogeneous
    }

    /// Multiplication respects path length.
    pub fn check_graded(&self) -> bool {
        self.mult.iter().all(|(&(i, j), p)| p.iter().all(|(k, _)| self.lens[k] == self.lens[i] + self.lens[j]))
    }

    pub fn check_associative(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let Some(ij) = self.mult.get(&(i, j)) else { continue };
                for k in 0..dim {
                    if self.ends[j] != self.starts[k] {
                        continue;
                    }
                    let left = self.mul(ij, &SparseVec::unit(k, self.one()));
                    let jk = self.mult.get(&(j, k)).cloned().unwrap_or_default();
                    let right = self.mul(&SparseVec::unit(i, self.one()), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimension of the right socle of `e_v A`: elements killed by every arrow.
    pub fn projective_socle(&self, v: usize) -> Vec<usize> {
        let basis = self.starting_at(v);
        let mut images = Vec::with_capacity(basis.len());
        for &b in basis {
            let mut img = Vec::new();
            for (a, arrow) in self.arrows.iter().enumerate() {
                let prod = self.mul(&SparseVec::unit(b, self.one()), arrow);
                img.extend(prod.iter().map(|(k, c)| (a * self.dim() + k, c)));
            }
            images.push(SparseVec::from_entries(img));
        }
        super::linalg::kernel(self.field, &images)
            .iter()
            .map(|k| {
                // the socle element's end vertices
                let ends: std::collections::BTreeSet<usize> = k.iter().map(|(i, _)| self.ends[basis[i]]).collect();
                if ends.len() == 1 {
                    *ends.iter().next().unwrap()
                } else {
                    usize::MAX
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::samples;

    fn algebra(g: &crate::BrauerGraph) -> FiniteDimAlgebra {
        let p = Presentation::new(g);
        FiniteDimAlgebra::build(&p.quiver, &p.relations, g.nilpotency_bound() + 1, FieldKind::Rational, DEFAULT_MAX_PATHS)
            .unwrap()
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(algebra(&samples::path(&[1, 1])).dim(), 2);
        assert_eq!(algebra(&samples::triangle(1)).dim(), 12);
        assert_eq!(algebra(&samples::path(&[1, 1, 1, 1])).dim(), 10);
    }

    #[test]
    fn triangle_is_associative_and_graded() {
        let a = algebra(&samples::triangle(1));
        assert!(a.check_associative());
        assert!(a.check_graded());
    }
}
