//! Explicit minimal resolutions of simple modules, Ext dimensions, generation
//! certificates and the obstruction element for graphs with truncated edges.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BrauerGraph, GraphError, HalfEdge};
use crate::oracle::algebra::{AlgElem, FiniteDimAlgebra};
use crate::oracle::module::FreeModule;
use crate::oracle::resolve::{Matrix, Resolution};
use crate::presentation::{walk, Homogeneity, Path, Presentation, Quiver};
use crate::strings::{self, StringError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Strings(#[from] StringError),
}

fn hypothesis(msg: impl Into<String>) -> ResolutionError {
    ResolutionError::Hypothesis(msg.into())
}

/// A signed path in a differential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub negative: bool,
    pub path: Path,
}

/// `Q^n` with its generation degrees and the differential `Q^n → Q^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionStep {
    pub degree: usize,
    /// `(position, edge)`, positions `-n, -n+2, …, n`.
    pub summands: Vec<(i64, usize)>,
    pub generation_degrees: Vec<usize>,
    /// Rows index `Q^{n-1}`, columns index `Q^n`; empty for `n = 0`.
    pub entries: Vec<Entry>,
}

impl ResolutionStep {
    pub fn edges(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.1).collect()
    }

    pub fn to_json(&self, g: &BrauerGraph, q: &Quiver, graded: bool) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "summands": self.summands.iter().zip(&self.generation_degrees)
                .map(|(&(p, e), &d)| if graded {
                    serde_json::json!([p, g.edge_id(e), d])
                } else {
                    serde_json::json!([p, g.edge_id(e)])
                })
                .collect::<Vec<_>>(),
            "differential": self.entries.iter().map(|x| serde_json::json!({
                "row": x.row,
                "col": x.col,
                "sign": if x.negative { "-" } else { "+" },
                "path": x.path.ids(q),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Half-edges stepping outward from `s_0` on both sides.
struct Ladder {
    near_plus: Vec<HalfEdge>,
    far_plus: Vec<HalfEdge>,
    near_minus: Vec<HalfEdge>,
    far_minus: Vec<HalfEdge>,
}

impl Ladder {
    fn new(g: &BrauerGraph, e: usize, n: usize) -> Self {
        let mut lad = Ladder {
            near_plus: vec![HalfEdge::new(e, 1)],
            far_plus: vec![HalfEdge::new(e, 1)],
            near_minus: vec![HalfEdge::new(e, 0)],
            far_minus: vec![HalfEdge::new(e, 0)],
        };
        for k in 1..=n {
            let np = g.next(lad.far_plus[k - 1]);
            lad.near_plus.push(np);
            lad.far_plus.push(np.opposite());
            let nm = g.next(lad.far_minus[k - 1]);
            lad.near_minus.push(nm);
            lad.far_minus.push(nm.opposite());
        }
        lad
    }

    /// Edge at a position.
    fn edge(&self, i: i64) -> usize {
        if i >= 0 {
            self.near_plus[i as usize].edge
        } else {
            self.near_minus[(-i) as usize].edge
        }
    }
}

/// Position of the edge following `far` in the resolution of the simple at `far.edge`.
fn side_of(far: HalfEdge) -> i64 {
    if far.end == 1 {
        1
    } else {
        -1
    }
}

fn build(g: &BrauerGraph, q: &Quiver, e: usize, n_max: usize) -> Result<Vec<ResolutionStep>, ResolutionError> {
    let lad = Ladder::new(g, e, n_max);
    let around = |h: HalfEdge| g.weight(g.vertex_of(h)) - 1;
    let mut steps: Vec<ResolutionStep> = Vec::with_capacity(n_max + 1);
    steps.push(ResolutionStep { degree: 0, summands: vec![(0, e)], generation_degrees: vec![0], entries: Vec::new() });
    for n in 1..=n_max {
        let summands: Vec<(i64, usize)> =
            (0..=n).map(|c| -(n as i64) + 2 * c as i64).map(|p| (p, lad.edge(p))).collect();
        let mut entries = Vec::new();
        let mut push = |row: usize, col: usize, negative: bool, path: Path| entries.push(Entry { row, col, negative, path });
        let even = n % 2 == 0;
        let outer = if even { n / 2 } else { (n - 1) / 2 };
        for j in 0..outer {
            let k = n - 2 * j - 1;
            let fm = lad.far_minus[k];
            let nm = lad.near_minus[k];
            let np = lad.near_plus[k];
            let fp = lad.far_plus[k];
            push(j, j, even, walk(g, q, fm, 1)?);
            push(j, j + 1, false, walk(g, q, nm, around(nm))?);
            push(n - 1 - j, n - 1 - j, even, walk(g, q, np, around(np))?);
            push(n - 1 - j, n - j, false, walk(g, q, fp, 1)?);
        }
        if !even {
            let r = (n - 1) / 2;
            push(r, r, false, walk(g, q, lad.far_minus[0], 1)?);
            push(r, r + 1, false, walk(g, q, lad.far_plus[0], 1)?);
        }
        let prev = &steps[n - 1].generation_degrees;
        let mut degrees: Vec<Option<usize>> = vec![None; n + 1];
        for x in &entries {
            let d = prev[x.row] + x.path.len();
            match degrees[x.col] {
                None => degrees[x.col] = Some(d),
                Some(o) if o != d => {
                    return Err(hypothesis(format!("inconsistent generation degrees in degree {n}")));
                }
                _ => {}
            }
        }
        let generation_degrees = degrees.into_iter().map(|d| d.expect("every column has an entry")).collect();
        steps.push(ResolutionStep { degree: n, summands, generation_degrees, entries });
    }
    Ok(steps)
}

fn require_plain(g: &BrauerGraph) -> Result<(), ResolutionError> {
    if g.has_truncated_edge() {
        return Err(hypothesis("the graph has a truncated edge"));
    }
    if !g.has_trivial_quantizer() {
        return Err(hypothesis("explicit resolutions assume the trivial quantizer"));
    }
    Ok(())
}

/// Minimal resolution for reduced graphs without truncated edges.
pub fn resolve_simple(g: &BrauerGraph, e: usize, n_max: usize) -> Result<Vec<ResolutionStep>, ResolutionError> {
    if !g.is_reduced() {
        return Err(hypothesis("the graph is not reduced"));
    }
    require_plain(g)?;
    build(g, &Presentation::new(g).quiver, e, n_max)
}

/// Minimal resolution for 2-d-homogeneous graphs without truncated edges.
pub fn resolve_simple_2d(g: &BrauerGraph, e: usize, n_max: usize) -> Result<Vec<ResolutionStep>, ResolutionError> {
    require_plain(g)?;
    let p = Presentation::new(g);
    match p.homogeneity() {
        Homogeneity::TwoDHomogeneous(d) if d >= 3 => build(g, &p.quiver, e, n_max),
        other => Err(hypothesis(format!("the algebra is not 2-d-homogeneous with d >= 3 ({other:?})"))),
    }
}

/// Whichever explicit resolution applies to `g`.
pub fn resolve_any(g: &BrauerGraph, e: usize, n_max: usize) -> Result<Vec<ResolutionStep>, ResolutionError> {
    if g.is_reduced() {
        resolve_simple(g, e, n_max)
    } else {
        resolve_simple_2d(g, e, n_max)
    }
}

/// The explicit resolution as matrices over the oracle algebra.
pub fn to_oracle(alg: &FiniteDimAlgebra, e: usize, steps: &[ResolutionStep], graded: bool) -> Resolution {
    let modules: Vec<FreeModule> = steps
        .iter()
        .map(|s| {
            let summands = s.summands.iter().zip(&s.generation_degrees).map(|(&(_, v), &d)| (v, d as i64)).collect();
            FreeModule::new(alg, summands)
        })
        .collect();
    let mut diffs: Vec<Matrix> = vec![Vec::new()];
    for n in 1..steps.len() {
        let mut m: Matrix = vec![vec![AlgElem::new(); steps[n].summands.len()]; steps[n - 1].summands.len()];
        for x in &steps[n].entries {
            let sign = if x.negative { alg.field.int(-1) } else { alg.one() };
            m[x.row][x.col].add_scaled(sign, &alg.elem_of_path(&x.path));
        }
        diffs.push(m);
    }
    Resolution { vertex: e, modules, diffs, graded }
}

/// `dim Ext^n(S_s, S_t)` from the tops of string syzygies.
pub fn ext_dim(g: &BrauerGraph, s: usize, t: usize, n: usize) -> Result<usize, ResolutionError> {
    if !g.is_reduced() {
        return Err(hypothesis("the graph is not reduced"));
    }
    if n == 0 {
        return Ok(usize::from(s == t));
    }
    let trace = strings::iterate_syzygy(g, s, n)?;
    Ok(trace.omega(n).top().into_iter().filter(|&x| x == t).count())
}

/// The class dual to the summand at `position` of `Q^degree` in the resolution of the simple at `source`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CanonicalExtElement {
    pub source: usize,
    pub degree: usize,
    pub position: i64,
    pub target: usize,
}

impl CanonicalExtElement {
    /// Summand index in `Q^degree`.
    pub fn index(&self) -> usize {
        ((self.position + self.degree as i64) / 2) as usize
    }
}

/// Canonical element at a position, computed from the ladder.
pub fn canonical_element(g: &BrauerGraph, source: usize, degree: usize, position: i64) -> Result<CanonicalExtElement, ResolutionError> {
    if position.unsigned_abs() as usize > degree || (position + degree as i64) % 2 != 0 {
        return Err(hypothesis(format!("no summand at position {position} in degree {degree}")));
    }
    let lad = Ladder::new(g, source, degree);
    Ok(CanonicalExtElement { source, degree, position, target: lad.edge(position) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CertNode {
    Leaf(CanonicalExtElement),
    /// First factor, then second: the Yoneda product landing in the target of the second.
    Product(Box<CertNode>, Box<CertNode>),
}

impl CertNode {
    pub fn leaves(&self) -> Vec<CanonicalExtElement> {
        match self {
            CertNode::Leaf(x) => vec![*x],
            CertNode::Product(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }

    pub fn to_json(&self, g: &BrauerGraph) -> serde_json::Value {
        match self {
            CertNode::Leaf(x) => element_json(g, x),
            CertNode::Product(a, b) => serde_json::json!({ "product": [a.to_json(g), b.to_json(g)] }),
        }
    }
}

pub fn element_json(g: &BrauerGraph, x: &CanonicalExtElement) -> serde_json::Value {
    serde_json::json!({
        "source": g.edge_id(x.source),
        "degree": x.degree,
        "position": x.position,
        "target": g.edge_id(x.target),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationCertificate {
    pub target: CanonicalExtElement,
    pub tree: CertNode,
    pub notes: Vec<String>,
}

const ODD_NOTE: &str = "odd degree at position ±1: the degree-one factor is read in the resolution of the source simple";

/// Factorization of a canonical element into classes of degree one and two.
pub fn generation_certificate(g: &BrauerGraph, elem: CanonicalExtElement) -> Result<GenerationCertificate, ResolutionError> {
    require_plain(g)?;
    if !g.is_reduced() && !matches!(Presentation::new(g).homogeneity(), Homogeneity::TwoDHomogeneous(_)) {
        return Err(hypothesis("certificates need a reduced or 2-d-homogeneous graph"));
    }
    if elem.degree == 0 {
        return Err(hypothesis("degree-zero classes are idempotents"));
    }
    let lad = Ladder::new(g, elem.source, elem.degree);
    let mut notes = Vec::new();
    let tree = certify(g, &lad, elem.source, elem.degree, elem.position, &mut notes)?;
    Ok(GenerationCertificate { target: elem, tree, notes })
}

fn certify(g: &BrauerGraph, lad: &Ladder, s0: usize, n: usize, i: i64, notes: &mut Vec<String>) -> Result<CertNode, ResolutionError> {
    let here = CanonicalExtElement { source: s0, degree: n, position: i, target: lad.edge(i) };
    if n == 1 || (n == 2 && i == 0) {
        return Ok(CertNode::Leaf(here));
    }
    if i == 0 {
        let rest = certify(g, lad, s0, n - 2, 0, notes)?;
        let square = canonical_element(g, s0, 2, 0)?;
        return Ok(CertNode::Product(Box::new(rest), Box::new(CertNode::Leaf(square))));
    }
    if n % 2 == 1 && i.abs() == 1 && !notes.iter().any(|x| x == ODD_NOTE) {
        notes.push(ODD_NOTE.to_string());
    }
    let (inner, far) = if i > 0 {
        (i - 1, lad.far_plus[(i - 1) as usize])
    } else {
        (i + 1, lad.far_minus[(-(i + 1)) as usize])
    };
    let rest = certify(g, lad, s0, n - 1, inner, notes)?;
    let step = canonical_element(g, far.edge, 1, side_of(far))?;
    debug_assert_eq!(step.target, here.target);
    Ok(CertNode::Product(Box::new(rest), Box::new(CertNode::Leaf(step))))
}

/// `δ(n)`: `(n/2)·d` for even `n`, `((n-1)/2)·d + 1` for odd `n`.
pub fn delta(n: usize, d: usize) -> usize {
    if n.is_multiple_of(2) {
        n / 2 * d
    } else {
        (n - 1) / 2 * d + 1
    }
}

/// Generation degrees of `Q^0 … Q^N` for the simple at `e`.
pub fn generation_degrees(g: &BrauerGraph, e: usize, n_max: usize) -> Result<Vec<Vec<usize>>, ResolutionError> {
    if !g.is_length_graded() {
        return Err(hypothesis("the algebra is not length graded"));
    }
    Ok(resolve_any(g, e, n_max)?.into_iter().map(|s| s.generation_degrees).collect())
}

/// Every generator of `Q^n` sits in degree at most `δ(n)` for `n ≤ N`.
pub fn is_weakly_delta_bounded(g: &BrauerGraph, n_max: usize) -> Result<bool, ResolutionError> {
    let d = Presentation::new(g)
        .homogeneity()
        .degree()
        .ok_or_else(|| hypothesis("relations are not homogeneous"))?;
    for e in 0..g.num_edges() {
        for (n, degs) in generation_degrees(g, e, n_max)?.iter().enumerate() {
            if degs.iter().any(|&x| x > delta(n, d)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Brauer walk with interior nontruncated edges and the Ext class it forces outside
/// the subalgebra generated in lower degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub chain: Vec<usize>,
    pub source: usize,
    pub target: usize,
    pub degree: usize,
}

impl Obstruction {
    pub fn to_json(&self, g: &BrauerGraph) -> serde_json::Value {
        serde_json::json!({
            "chain": self.chain.iter().map(|&e| g.edge_id(e)).collect::<Vec<_>>(),
            "ext": { "degree": self.degree, "from": g.edge_id(self.source), "to": g.edge_id(self.target) },
        })
    }
}

pub fn obstruction_element(g: &BrauerGraph) -> Result<Option<Obstruction>, ResolutionError> {
    if !g.is_reduced() {
        return Err(hypothesis("the graph is not reduced"));
    }
    if !g.has_truncated_edge() || !g.has_nontruncated_edge() {
        return Ok(None);
    }
    for e in g.truncated_edges() {
        let w = g.brauer_walk(e)?;
        if w.edges.len() >= 3 {
            let n = w.edges.len() - 1;
            return Ok(Some(Obstruction { source: e, target: w.edges[n], degree: n + 1, chain: w.edges }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn triangle_summands() {
        let g = samples::triangle(1);
        let e = |x: &str| g.edge(x).unwrap();
        let steps = resolve_simple(&g, e("e1"), 3).unwrap();
        assert_eq!(steps[1].edges(), vec![e("e3"), e("e2")]);
        assert_eq!(steps[2].edges(), vec![e("e2"), e("e1"), e("e3")]);
        assert_eq!(steps[3].edges(), vec![e("e1"), e("e3"), e("e2"), e("e1")]);
        assert!(steps[1].entries.iter().all(|x| x.path.len() == 1 && !x.negative));
        for s in &steps {
            assert!(s.generation_degrees.iter().all(|&d| d == s.degree));
        }
    }

    #[test]
    fn hypotheses_are_enforced() {
        assert!(resolve_simple(&samples::path(&[1, 1, 1, 1]), 0, 2).is_err());
        assert!(resolve_simple_2d(&samples::triangle(1), 0, 2).is_err());
        assert!(resolve_simple_2d(&samples::path(&[1, 2, 1]), 0, 2).is_err());
    }

    #[test]
    fn two_d_degrees() {
        let g = samples::triangle(2);
        let degs = generation_degrees(&g, 0, 4).unwrap();
        let mut d3 = degs[3].clone();
        d3.sort();
        d3.dedup();
        assert_eq!(d3, vec![3, 5]);
        assert!(is_weakly_delta_bounded(&g, 4).unwrap());
    }

    #[test]
    fn oracle_accepts_explicit_complexes() {
        use crate::oracle::{build_algebra, resolve::check_complex, FieldKind};
        for (g, graded) in [(samples::triangle(1), true), (samples::triangle(2), true), (samples::cycle(&[1, 1, 1, 1]), true)] {
            let p = Presentation::new(&g);
            let alg = build_algebra(&g, &p, FieldKind::Rational).unwrap();
            for e in 0..g.num_edges() {
                let steps = resolve_any(&g, e, 4).unwrap();
                let check = check_complex(&alg, &to_oracle(&alg, e, &steps, graded));
                assert!(check.ok(), "{e}: {check:?}");
            }
        }
    }

    #[test]
    fn delta_values() {
        assert_eq!((delta(0, 4), delta(1, 4), delta(2, 4), delta(3, 4)), (0, 1, 4, 5));
    }

    #[test]
    fn ext_dims_from_strings() {
        let t = samples::triangle(1);
        assert_eq!(ext_dim(&t, 0, 0, 3).unwrap(), 2);
        assert_eq!(ext_dim(&t, 0, 1, 3).unwrap(), 1);
        let a4 = samples::path(&[1, 1, 1, 1]);
        assert_eq!(ext_dim(&a4, 0, 2, 3).unwrap(), 1);
    }

    #[test]
    fn certificates() {
        let g = samples::triangle(1);
        let c = generation_certificate(&g, canonical_element(&g, 0, 2, 2).unwrap()).unwrap();
        let leaves = c.tree.leaves();
        assert_eq!(leaves.len(), 2);
        assert_eq!((leaves[0].source, leaves[0].position), (0, 1));
        assert_eq!(leaves[1].source, g.edge("e2").unwrap());
        let c4 = generation_certificate(&g, canonical_element(&g, 0, 4, 0).unwrap()).unwrap();
        assert!(c4.tree.leaves().iter().all(|l| l.degree == 2 && l.position == 0));
    }

    #[test]
    fn obstruction_cases() {
        let a4 = samples::path(&[1, 1, 1, 1]);
        let o = obstruction_element(&a4).unwrap().unwrap();
        assert_eq!(o.chain, vec![0, 1, 2]);
        assert_eq!(o.degree, 3);
        assert_eq!(obstruction_element(&samples::triangle(1)).unwrap(), None);
        assert_eq!(obstruction_element(&samples::path(&[1, 1, 1])).unwrap(), None);
    }
}
