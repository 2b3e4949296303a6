//! Right modules: free modules with submodules given by spanning vectors, and
//! explicit representations with one matrix per arrow.

use std::collections::BTreeMap;

use super::algebra::{AlgElem, FiniteDimAlgebra};
use super::linalg::{kernel, Echelon, SparseVec};

/// `⊕_j e_{v_j} A` with shifts; coordinates are `(summand, basis element of e_{v_j} A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub summands: Vec<(usize, i64)>,
    offsets: Vec<usize>,
    coords: Vec<(usize, usize)>,
}

impl FreeModule {
    pub fn new(alg: &FiniteDimAlgebra, summands: Vec<(usize, i64)>) -> Self {
        let mut offsets = Vec::with_capacity(summands.len());
        let mut coords = Vec::new();
        for (j, &(v, _)) in summands.iter().enumerate() {
            offsets.push(coords.len());
            coords.extend(alg.starting_at(v).iter().map(|&b| (j, b)));
        }
        FreeModule { summands, offsets, coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn coord(&self, i: usize) -> (usize, usize) {
        self.coords[i]
    }

    pub fn index(&self, alg: &FiniteDimAlgebra, j: usize, b: usize) -> usize {
        self.offsets[j] + alg.start_position(b)
    }

    pub fn end_vertex(&self, alg: &FiniteDimAlgebra, i: usize) -> usize {
        alg.end(self.coords[i].1)
    }

    pub fn degree(&self, alg: &FiniteDimAlgebra, i: usize) -> i64 {
        let (j, b) = self.coords[i];
        self.summands[j].1 + alg.len(b) as i64
    }

    /// Coordinates of summand `j` generated freely.
    pub fn generator(&self, alg: &FiniteDimAlgebra, j: usize) -> SparseVec {
        SparseVec::unit(self.index(alg, j, alg.idempotent(self.summands[j].0)), alg.one())
    }

    /// Embeds an element of `e_{v_j} A` as summand `j`.
    pub fn embed(&self, alg: &FiniteDimAlgebra, j: usize, x: &AlgElem) -> SparseVec {
        x.map_indices(|b| self.index(alg, j, b))
    }

    pub fn component(&self, alg: &FiniteDimAlgebra, x: &SparseVec, j: usize) -> AlgElem {
        let lo = self.offsets[j];
        let hi = lo + alg.starting_at(self.summands[j].0).len();
        SparseVec::from_entries(x.iter().filter(|(i, _)| *i >= lo && *i < hi).map(|(i, c)| (self.coords[i].1, c)).collect())
    }

    /// `x · a` for an algebra element `a`.
    pub fn act(&self, alg: &FiniteDimAlgebra, x: &SparseVec, a: &AlgElem) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            let (j, b) = self.coords[i];
            for (k, d) in a.iter() {
                if let Some(p) = alg.basis_product(b, k) {
                    out.add_scaled(c * d, &self.embed(alg, j, p));
                }
            }
        }
        out
    }

    /// Applies a matrix of algebra elements (rows index `target` summands, columns index `self`).
    pub fn apply(&self, alg: &FiniteDimAlgebra, target: &FreeModule, matrix: &[Vec<AlgElem>], x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            let (col, b) = self.coords[i];
            let unit = SparseVec::unit(b, alg.one());
            for (r, row) in matrix.iter().enumerate() {
                let entry = &row[col];
                if entry.is_zero() {
                    continue;
                }
                out.add_scaled(c, &target.embed(alg, r, &alg.mul(entry, &unit)));
            }
        }
        out
    }

    /// Images of every coordinate under a matrix map into `target`.
    pub fn images(&self, alg: &FiniteDimAlgebra, target: &FreeModule, matrix: &[Vec<AlgElem>]) -> Vec<SparseVec> {
        (0..self.dim()).map(|i| self.apply(alg, target, matrix, &SparseVec::unit(i, alg.one()))).collect()
    }

    /// Keeps the coordinates ending at `v` (and of degree `d`, when given).
    pub fn project(&self, alg: &FiniteDimAlgebra, x: &SparseVec, v: usize, d: Option<i64>) -> SparseVec {
        x.filter(|i| self.end_vertex(alg, i) == v && d.is_none_or(|d| self.degree(alg, i) == d))
    }
}

/// A submodule of a free module, stored as a basis.
#[derive(Debug, Clone)]
pub struct Submodule {
    pub basis: Vec<SparseVec>,
}

/// Dimension vector, top and socle per quiver vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleShape {
    pub dims: Vec<usize>,
    pub top: Vec<usize>,
    pub socle: Vec<usize>,
}

impl ModuleShape {
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

impl Submodule {
    pub fn from_span(alg: &FiniteDimAlgebra, vs: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(alg.field);
        let mut basis = Vec::new();
        for v in vs {
            if e.add(v.clone()) {
                basis.push(v);
            }
        }
        Submodule { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Span of `m · a` over the basis and the arrows.
    pub fn radical_part(&self, alg: &FiniteDimAlgebra, f: &FreeModule) -> Echelon {
        let mut e = Echelon::new(alg.field);
        for m in &self.basis {
            for a in 0..alg.num_arrows() {
                e.add(f.act(alg, m, alg.arrow(a)));
            }
        }
        e
    }

    /// Vectors projected to each vertex (and degree), which together span the submodule.
    fn pieces(&self, alg: &FiniteDimAlgebra, f: &FreeModule, graded: bool) -> BTreeMap<(usize, i64), Vec<SparseVec>> {
        let mut out: BTreeMap<(usize, i64), Vec<SparseVec>> = BTreeMap::new();
        for m in &self.basis {
            let mut keys = std::collections::BTreeSet::new();
            for (i, _) in m.iter() {
                keys.insert((f.end_vertex(alg, i), if graded { f.degree(alg, i) } else { 0 }));
            }
            for (v, d) in keys {
                let p = f.project(alg, m, v, graded.then_some(d));
                out.entry((v, d)).or_default().push(p);
            }
        }
        out
    }

    /// Minimal generators, each lying in a single vertex (and degree) component.
    pub fn top_generators(&self, alg: &FiniteDimAlgebra, f: &FreeModule, graded: bool) -> Vec<(usize, i64, SparseVec)> {
        let mut rad = self.radical_part(alg, f);
        let mut gens = Vec::new();
        for ((v, d), vs) in self.pieces(alg, f, graded) {
            for p in vs {
                if rad.add(p.clone()) {
                    gens.push((v, d, p));
                }
            }
        }
        gens
    }

    /// Per-vertex subspace basis.
    fn at_vertex(&self, alg: &FiniteDimAlgebra, f: &FreeModule, v: usize) -> Vec<SparseVec> {
        let mut e = Echelon::new(alg.field);
        let mut out = Vec::new();
        for m in &self.basis {
            let p = f.project(alg, m, v, None);
            if !p.is_zero() && e.add(p.clone()) {
                out.push(p);
            }
        }
        out
    }

    pub fn shape(&self, alg: &FiniteDimAlgebra, f: &FreeModule) -> ModuleShape {
        let rad = self.radical_part(alg, f);
        let rad_basis: Vec<SparseVec> = rad.basis().cloned().collect();
        let mut shape = ModuleShape::default();
        for v in 0..alg.num_vertices {
            let here = self.at_vertex(alg, f, v);
            let rad_here = Echelon::from_vectors(
                alg.field,
                rad_basis.iter().map(|r| f.project(alg, r, v, None)).collect::<Vec<_>>().iter(),
            )
            .rank();
            let images: Vec<SparseVec> = here
                .iter()
                .map(|m| {
                    let mut items = Vec::new();
                    for a in 0..alg.num_arrows() {
                        let img = f.act(alg, m, alg.arrow(a));
                        items.extend(img.iter().map(|(i, c)| (a * f.dim() + i, c)));
                    }
                    SparseVec::from_entries(items)
                })
                .collect();
            shape.dims.push(here.len());
            shape.top.push(here.len() - rad_here);
            shape.socle.push(kernel(alg.field, &images).len());
        }
        shape
    }
}

/// Projective cover of the submodule generated by `gens` (each in one vertex component):
/// the new free module and the images of its coordinates.
pub fn cover_images(alg: &FiniteDimAlgebra, f: &FreeModule, gens: &[(usize, i64, SparseVec)]) -> (FreeModule, Vec<SparseVec>) {
    let p = FreeModule::new(alg, gens.iter().map(|(v, d, _)| (*v, *d)).collect());
    let images = (0..p.dim())
        .map(|i| {
            let (j, b) = p.coord(i);
            f.act(alg, &gens[j].2, &SparseVec::unit(b, alg.one()))
        })
        .collect();
    (p, images)
}

/// An explicit module: a basis labelled by quiver vertices and, per arrow, the image of each basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub vertex_of: Vec<usize>,
    pub actions: Vec<Vec<SparseVec>>,
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn apply_arrows(&self, x: &SparseVec, arrows: &[usize]) -> SparseVec {
        let mut cur = x.clone();
        for &a in arrows {
            let mut next = SparseVec::new();
            for (i, c) in cur.iter() {
                next.add_scaled(c, &self.actions[a][i]);
            }
            cur = next;
        }
        cur
    }

    /// `x · y` for an algebra element `y`, acting through the normal-form paths of its basis.
    pub fn act(&self, alg: &FiniteDimAlgebra, x: &SparseVec, y: &AlgElem) -> SparseVec {
        let mut out = SparseVec::new();
        for (b, c) in y.iter() {
            let (s, path) = alg.path_of(b);
            let part = x.filter(|i| self.vertex_of[i] == *s);
            out.add_scaled(c, &self.apply_arrows(&part, path));
        }
        out
    }

    /// Whether every relation of the algebra acts by zero.
    pub fn satisfies(&self, alg: &FiniteDimAlgebra, relations: &[crate::presentation::Relation]) -> bool {
        relations.iter().all(|r| {
            (0..self.dim()).filter(|&i| self.vertex_of[i] == r.terms[0].1.start).all(|i| {
                let mut total = SparseVec::new();
                for (c, p) in &r.terms {
                    let coef = alg.field.from_rational(*c).expect("field accepts coefficients");
                    total.add_scaled(coef, &self.apply_arrows(&SparseVec::unit(i, alg.one()), &p.arrows));
                }
                total.is_zero()
            })
        })
    }

    pub fn shape(&self, alg: &FiniteDimAlgebra) -> ModuleShape {
        let nv = alg.num_vertices;
        let mut shape = ModuleShape { dims: vec![0; nv], top: vec![0; nv], socle: vec![0; nv] };
        for &v in &self.vertex_of {
            shape.dims[v] += 1;
        }
        let mut images_at: Vec<Vec<SparseVec>> = vec![Vec::new(); nv];
        for action in &self.actions {
            for img in action {
                if let Some((i, _)) = img.last() {
                    images_at[self.vertex_of[i]].push(img.clone());
                }
            }
        }
        for v in 0..nv {
            let members: Vec<usize> = (0..self.dim()).filter(|&i| self.vertex_of[i] == v).collect();
            shape.top[v] = members.len() - Echelon::from_vectors(alg.field, &images_at[v]).rank();
            let stacked: Vec<SparseVec> = members
                .iter()
                .map(|&i| {
                    let mut items = Vec::new();
                    for (a, action) in self.actions.iter().enumerate() {
                        items.extend(action[i].iter().map(|(k, c)| (a * self.dim() + k, c)));
                    }
                    SparseVec::from_entries(items)
                })
                .collect();
            shape.socle[v] = kernel(alg.field, &stacked).len();
        }
        shape
    }

    /// Projective cover `P → M` and the kernel, as a free module and a submodule of it.
    pub fn syzygy(&self, alg: &FiniteDimAlgebra) -> (FreeModule, Submodule) {
        let mut rad = Echelon::new(alg.field);
        for action in &self.actions {
            for img in action {
                rad.add(img.clone());
            }
        }
        let mut gens = Vec::new();
        for v in 0..alg.num_vertices {
            for i in (0..self.dim()).filter(|&i| self.vertex_of[i] == v) {
                let e = SparseVec::unit(i, alg.one());
                if rad.add(e.clone()) {
                    gens.push((v, e));
                }
            }
        }
        let p = FreeModule::new(alg, gens.iter().map(|(v, _)| (*v, 0)).collect());
        let images: Vec<SparseVec> = (0..p.dim())
            .map(|i| {
                let (j, b) = p.coord(i);
                self.act(alg, &gens[j].1, &SparseVec::unit(b, alg.one()))
            })
            .collect();
        let ker = kernel(alg.field, &images);
        (p, Submodule { basis: ker })
    }
}
