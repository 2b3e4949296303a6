//! Quiver and relations of a Brauer graph algebra.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::One;
use serde::Serialize;

use crate::graph::{format_rational, BrauerGraph, GraphError, HalfEdge};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
    /// Vertex of the graph around which the arrow turns.
    pub vertex: usize,
    /// Half-edge the arrow leaves from; `None` only for the loop of the single-edge case.
    #[serde(skip)]
    pub half_edge: Option<HalfEdge>,
}

#[derive(Debug, Clone)]
pub struct Quiver {
    /// One quiver vertex per edge of the graph, labelled by the edge id.
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    by_half_edge: Vec<Option<usize>>,
}

impl Quiver {
    /// Arrow leaving along the rotation from `h`, if `h` is not truncated.
    pub fn arrow_at(&self, h: HalfEdge) -> Option<usize> {
        self.by_half_edge.get(h.index()).copied().flatten()
    }
}

/// Arrow sequence read left to right, starting at a quiver vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    pub fn concat(&self, other: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path { start: self.start, arrows }
    }

    pub fn ids(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| q.arrows[a].id.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RelationKind {
    TypeOne,
    TypeTwo,
    TypeThree,
}

/// A linear combination of paths with common start and end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub edge: usize,
    pub vertices: Vec<usize>,
    pub terms: Vec<(Rational64, Path)>,
}

impl Relation {
    /// Common length of the terms, `None` when they differ.
    pub fn length(&self) -> Option<usize> {
        let lens: BTreeSet<usize> = self.terms.iter().map(|(_, p)| p.len()).collect();
        if lens.len() == 1 {
            lens.into_iter().next()
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Homogeneity {
    Quadratic,
    DHomogeneous(usize),
    TwoDHomogeneous(usize),
    Inhomogeneous,
}

impl Homogeneity {
    /// The higher relation degree, 2 for quadratic algebras.
    pub fn degree(self) -> Option<usize> {
        match self {
            Homogeneity::Quadratic => Some(2),
            Homogeneity::DHomogeneous(d) | Homogeneity::TwoDHomogeneous(d) => Some(d),
            Homogeneity::Inhomogeneous => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Indices into `relations` forming a minimal generating set.
    pub minimal: Vec<usize>,
    /// The single edge with both multiplicities one, presented as `K[x]/(x^2)`.
    pub a2_case: bool,
}

pub fn build_quiver(g: &BrauerGraph) -> Quiver {
    let vertices: Vec<String> = g.edge_ids().to_vec();
    let mut arrows = Vec::new();
    let mut by_half_edge = vec![None; 2 * g.num_edges()];
    if g.is_a2_unit() {
        arrows.push(Arrow { id: "x".into(), source: 0, target: 0, vertex: g.ends(0)[0], half_edge: None });
        return Quiver { vertices, arrows, by_half_edge };
    }
    let mut seen = BTreeSet::new();
    for h in g.half_edges() {
        if g.is_truncated_half_edge(h) {
            continue;
        }
        let v = g.vertex_of(h);
        let t = g.next(h).edge;
        let base = format!("a({},{},{})", g.edge_id(h.edge), g.edge_id(t), g.vertex_id(v));
        let id = if seen.insert(base.clone()) { base } else { format!("{base}/{}", h.end) };
        by_half_edge[h.index()] = Some(arrows.len());
        arrows.push(Arrow { id, source: h.edge, target: t, vertex: v, half_edge: Some(h) });
    }
    Quiver { vertices, arrows, by_half_edge }
}

/// The path of `len` arrows turning around the vertex of `h`, starting at `h`.
pub fn walk(g: &BrauerGraph, q: &Quiver, h: HalfEdge, len: usize) -> Result<Path, GraphError> {
    let mut arrows = Vec::with_capacity(len);
    let mut cur = h;
    for _ in 0..len {
        let a = q.arrow_at(cur).ok_or_else(|| GraphError::Truncated {
            edge: g.edge_id(cur.edge).into(),
            vertex: g.vertex_id(g.vertex_of(cur)).into(),
        })?;
        arrows.push(a);
        cur = g.next(cur);
    }
    Ok(Path { start: h.edge, arrows })
}

/// `C^{m}` at a nontruncated half-edge: the full turn raised to the vertex multiplicity.
pub fn cycle_power(g: &BrauerGraph, q: &Quiver, h: HalfEdge) -> Result<Path, GraphError> {
    walk(g, q, h, g.weight(g.vertex_of(h)))
}

/// One full turn around `v` starting at `e`.
pub fn cycle(g: &BrauerGraph, q: &Quiver, e: usize, v: usize) -> Result<Path, GraphError> {
    let h = g.half_edge(e, v)?;
    walk(g, q, h, g.valency(v))
}

/// The subpath of the turn at `v` from `from` to the first occurrence of `to`.
pub fn special_path(g: &BrauerGraph, q: &Quiver, from: usize, to: usize, v: usize) -> Result<Path, GraphError> {
    let h = g.half_edge(from, v)?;
    special_path_from(g, q, h, to)
}

pub fn special_path_from(g: &BrauerGraph, q: &Quiver, h: HalfEdge, to: usize) -> Result<Path, GraphError> {
    let seq = g.successor_sequence_from(h);
    let steps = seq.iter().position(|x| x.edge == to).ok_or_else(|| {
        GraphError::Hypothesis(format!(
            "`{}` is not reached from `{}` around `{}`",
            g.edge_id(to),
            g.edge_id(h.edge),
            g.vertex_id(g.vertex_of(h))
        ))
    })?;
    walk(g, q, h, steps)
}

fn generic_relations(g: &BrauerGraph, q: &Quiver) -> Vec<Relation> {
    let mut out = Vec::new();
    for e in 0..g.num_edges() {
        let h0 = HalfEdge::new(e, 0);
        let h1 = HalfEdge::new(e, 1);
        let [a, b] = g.ends(e);
        match (g.is_truncated_half_edge(h0), g.is_truncated_half_edge(h1)) {
            (false, false) => {
                let c0 = cycle_power(g, q, h0).expect("nontruncated");
                let c1 = cycle_power(g, q, h1).expect("nontruncated");
                let q0 = g.quantizer(e, a);
                let q1 = if g.is_loop(e) { Rational64::one() } else { g.quantizer(e, b) };
                out.push(Relation { kind: RelationKind::TypeOne, edge: e, vertices: vec![a, b], terms: vec![(q0, c0), (-q1, c1)] });
            }
            (true, true) => {}
            (t0, _) => {
                let (hb, alpha) = if t0 { (h1, a) } else { (h0, b) };
                let beta = g.vertex_of(hb);
                let mut p = cycle_power(g, q, hb).expect("nontruncated");
                p.arrows.push(q.arrow_at(hb).expect("nontruncated"));
                out.push(Relation { kind: RelationKind::TypeTwo, edge: e, vertices: vec![alpha, beta], terms: vec![(Rational64::one(), p)] });
            }
        }
    }
    for (ia, first) in q.arrows.iter().enumerate() {
        let h = first.half_edge.expect("generic quiver");
        for hp in [HalfEdge::new(first.target, 0), HalfEdge::new(first.target, 1)] {
            if hp == g.next(h) {
                continue;
            }
            if let Some(ib) = q.arrow_at(hp) {
                out.push(Relation {
                    kind: RelationKind::TypeThree,
                    edge: first.target,
                    vertices: vec![first.vertex, q.arrows[ib].vertex],
                    terms: vec![(Rational64::one(), Path { start: first.source, arrows: vec![ia, ib] })],
                });
            }
        }
    }
    out
}

fn single_edge_error() -> GraphError {
    GraphError::Hypothesis("the single-edge graph with multiplicities one is presented as K[x]/(x^2)".into())
}

/// Every relation of types one, two and three.
pub fn relations_all(g: &BrauerGraph) -> Result<Vec<Relation>, GraphError> {
    if g.is_a2_unit() {
        return Err(single_edge_error());
    }
    Ok(generic_relations(g, &build_quiver(g)))
}

fn minimal_indices(g: &BrauerGraph, rels: &[Relation]) -> Vec<usize> {
    rels.iter()
        .enumerate()
        .filter(|(_, r)| match r.kind {
            RelationKind::TypeTwo => {
                let beta = r.vertices[1];
                let hb = if g.is_truncated_half_edge(HalfEdge::new(r.edge, 0)) {
                    HalfEdge::new(r.edge, 1)
                } else {
                    HalfEdge::new(r.edge, 0)
                };
                debug_assert_eq!(g.vertex_of(hb), beta);
                g.edge_is_truncated(g.next(hb).edge)
            }
            _ => true,
        })
        .map(|(i, _)| i)
        .collect()
}

/// Types one and three together with the type two relations that cannot be omitted.
pub fn minimal_relations(g: &BrauerGraph) -> Result<Vec<Relation>, GraphError> {
    let rels = relations_all(g)?;
    Ok(minimal_indices(g, &rels).into_iter().map(|i| rels[i].clone()).collect())
}

impl Presentation {
    pub fn new(g: &BrauerGraph) -> Self {
        let quiver = build_quiver(g);
        if g.is_a2_unit() {
            let x = Path { start: 0, arrows: vec![0, 0] };
            let rel = Relation {
                kind: RelationKind::TypeTwo,
                edge: 0,
                vertices: g.ends(0).to_vec(),
                terms: vec![(Rational64::one(), x)],
            };
            return Presentation { quiver, relations: vec![rel], minimal: vec![0], a2_case: true };
        }
        let relations = generic_relations(g, &quiver);
        let minimal = minimal_indices(g, &relations);
        Presentation { quiver, relations, minimal, a2_case: false }
    }

    pub fn minimal_relations(&self) -> impl Iterator<Item = &Relation> {
        self.minimal.iter().map(|&i| &self.relations[i])
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut lens = BTreeSet::new();
        for r in self.minimal_relations() {
            match r.length() {
                Some(l) => {
                    lens.insert(l);
                }
                None => return Homogeneity::Inhomogeneous,
            }
        }
        let lens: Vec<usize> = lens.into_iter().collect();
        match lens.as_slice() {
            [2] => Homogeneity::Quadratic,
            [d] if *d >= 3 => Homogeneity::DHomogeneous(*d),
            [2, d] if *d >= 3 => Homogeneity::TwoDHomogeneous(*d),
            _ => Homogeneity::Inhomogeneous,
        }
    }

    pub fn relations_json(&self, g: &BrauerGraph, minimal_only: bool) -> serde_json::Value {
        let chosen: Vec<&Relation> =
            if minimal_only { self.minimal_relations().collect() } else { self.relations.iter().collect() };
        serde_json::Value::Array(
            chosen
                .into_iter()
                .map(|r| {
                    serde_json::json!({
                        "kind": r.kind,
                        "edge": g.edge_id(r.edge),
                        "vertices": r.vertices.iter().map(|&v| g.vertex_id(v)).collect::<Vec<_>>(),
                        "paths": r.terms.iter().map(|(_, p)| p.ids(&self.quiver)).collect::<Vec<_>>(),
                        "coefficients": r.terms.iter().map(|(c, _)| format_rational(c)).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn relations_text(&self, g: &BrauerGraph, minimal_only: bool) -> String {
        let chosen: Vec<&Relation> =
            if minimal_only { self.minimal_relations().collect() } else { self.relations.iter().collect() };
        let mut out = String::new();
        for r in chosen {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|(c, p)| format!("({})·{}", format_rational(c), p.ids(&self.quiver).join("")))
                .collect();
            let _ = writeln!(out, "{:?} at {}: {}", r.kind, g.edge_id(r.edge), terms.join(" + "));
        }
        out
    }

    pub fn quiver_json(&self, g: &BrauerGraph) -> serde_json::Value {
        let q = &self.quiver;
        serde_json::json!({
            "vertices": q.vertices,
            "arrows": q.arrows.iter().map(|a| serde_json::json!({
                "id": a.id,
                "source": q.vertices[a.source],
                "target": q.vertices[a.target],
                "vertex": g.vertex_id(a.vertex),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn quiver_dot(&self) -> String {
        let q = &self.quiver;
        let mut out = String::from("digraph quiver {\n");
        for v in &q.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for a in &q.arrows {
            let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", q.vertices[a.source], q.vertices[a.target], a.id);
        }
        out.push_str("}\n");
        out
    }

    pub fn quiver_text(&self) -> String {
        let q = &self.quiver;
        let mut out = format!("vertices: {}\n", q.vertices.join(", "));
        for a in &q.arrows {
            let _ = writeln!(out, "{}: {} -> {}", a.id, q.vertices[a.source], q.vertices[a.target]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn kinds(rels: &[Relation]) -> [usize; 3] {
        let mut c = [0; 3];
        for r in rels {
            c[r.kind as usize] += 1;
        }
        c
    }

    #[test]
    fn quiver_sizes() {
        assert_eq!(build_quiver(&samples::path(&[1, 1])).arrows.len(), 1);
        assert_eq!(build_quiver(&samples::triangle(1)).arrows.len(), 6);
        let q = build_quiver(&samples::path(&[1, 1, 1, 1]));
        assert_eq!((q.vertices.len(), q.arrows.len()), (3, 4));
    }

    #[test]
    fn triangle_relation_counts() {
        let rels = relations_all(&samples::triangle(1)).unwrap();
        assert_eq!(kinds(&rels), [3, 0, 6]);
        assert!(rels.iter().filter(|r| r.kind == RelationKind::TypeOne).all(|r| r.length() == Some(2)));
    }

    #[test]
    fn loop_relations() {
        let g = samples::single_loop(1);
        let p = Presentation::new(&g);
        let shapes: BTreeSet<Vec<String>> =
            p.relations.iter().flat_map(|r| r.terms.iter().map(|(_, t)| t.ids(&p.quiver))).collect();
        assert_eq!(p.relations.len(), 3);
        assert_eq!(shapes.len(), 4);
        assert_eq!(p.homogeneity(), Homogeneity::Quadratic);
    }

    #[test]
    fn a3_keeps_both_type_two() {
        let g = samples::path(&[1, 1, 1]);
        let rels = minimal_relations(&g).unwrap();
        assert_eq!(rels.len(), 2);
        assert!(rels.iter().all(|r| r.kind == RelationKind::TypeTwo && r.length() == Some(3)));
    }

    #[test]
    fn a4_drops_type_two() {
        let g = samples::path(&[1, 1, 1, 1]);
        let rels = minimal_relations(&g).unwrap();
        assert!(rels.iter().all(|r| r.kind != RelationKind::TypeTwo));
        assert_eq!(Presentation::new(&g).homogeneity(), Homogeneity::Quadratic);
    }

    #[test]
    fn homogeneity_examples() {
        assert_eq!(Presentation::new(&samples::triangle(1)).homogeneity(), Homogeneity::Quadratic);
        assert_eq!(Presentation::new(&samples::star(3, 2)).homogeneity(), Homogeneity::DHomogeneous(7));
        assert_eq!(Presentation::new(&samples::triangle(2)).homogeneity(), Homogeneity::TwoDHomogeneous(4));
    }

    #[test]
    fn special_paths() {
        let g = samples::triangle(1);
        let q = build_quiver(&g);
        let v1 = g.vertex("v1").unwrap();
        let (e1, e3) = (g.edge("e1").unwrap(), g.edge("e3").unwrap());
        assert_eq!(cycle(&g, &q, e1, v1).unwrap().len(), 2);
        assert_eq!(special_path(&g, &q, e1, e3, v1).unwrap().len(), 1);
        assert!(special_path(&g, &q, e1, e1, v1).unwrap().is_empty());
        let s = samples::star(3, 1);
        let qs = build_quiver(&s);
        let c = s.vertex("c").unwrap();
        let p = special_path(&s, &qs, s.edge("e1").unwrap(), s.edge("e3").unwrap(), c).unwrap();
        assert_eq!(p.ids(&qs), vec!["a(e1,e2,c)", "a(e2,e3,c)"]);
    }
}
