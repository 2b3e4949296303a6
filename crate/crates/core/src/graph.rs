//! Brauer graphs as rotation systems over half-edges.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by graph-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("invalid Brauer graph: {0}")]
    Invalid(ValidationReport),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("edge `{edge}` is not incident with vertex `{vertex}`")]
    NotIncident { edge: String, vertex: String },
    #[error("edge `{0}` is a loop; a half-edge is needed to disambiguate")]
    AmbiguousLoop(String),
    #[error("edge `{edge}` is truncated at `{vertex}`")]
    Truncated { edge: String, vertex: String },
    #[error("hypothesis failure: {0}")]
    Hypothesis(String),
}

/// Every violated well-formedness condition of a graph document.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.violations.join("; "))
    }
}

fn default_multiplicity() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexData {
    pub id: String,
    #[serde(default = "default_multiplicity")]
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeData {
    pub id: String,
    pub ends: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantizerData {
    pub edge: String,
    pub vertex: String,
    pub value: String,
}

/// The `.bg.json` document, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphData {
    pub vertices: Vec<VertexData>,
    pub edges: Vec<EdgeData>,
    pub rotation: BTreeMap<String, Vec<(String, u8)>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quantizer: Vec<QuantizerData>,
}

impl GraphData {
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph data serializes")
    }
}

/// One end of an edge. Loops own two half-edges at the same vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: usize,
    pub end: usize,
}

impl HalfEdge {
    pub fn new(edge: usize, end: usize) -> Self {
        debug_assert!(end < 2);
        HalfEdge { edge, end }
    }

    pub fn index(self) -> usize {
        2 * self.edge + self.end
    }

    pub fn from_index(i: usize) -> Self {
        HalfEdge { edge: i / 2, end: i % 2 }
    }

    pub fn opposite(self) -> Self {
        HalfEdge { edge: self.edge, end: 1 - self.end }
    }
}

/// Shapes singled out by the classification results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Path with `n` vertices.
    A(usize),
    /// Cycle with `n + 1` vertices (two vertices joined by a double edge when `n = 1`).
    ATilde(usize),
    /// Star with `n >= 3` edges (smaller stars are paths).
    Star(usize),
    /// One vertex carrying one loop.
    Loop,
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A_{n}"),
            Family::ATilde(n) => write!(f, "ATilde_{n}"),
            Family::Star(n) => write!(f, "Star_{n}"),
            Family::Loop => write!(f, "Loop"),
            Family::Other => write!(f, "Other"),
        }
    }
}

/// Sequence of edges from one truncated edge to the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerWalk {
    pub edges: Vec<usize>,
    /// `via[i]` is the vertex shared by `edges[i]` and `edges[i + 1]`.
    pub via: Vec<usize>,
}

/// A validated Brauer graph. Immutable after construction.
#[derive(Debug, Clone)]
pub struct BrauerGraph {
    vertex_ids: Vec<String>,
    multiplicity: Vec<u32>,
    edge_ids: Vec<String>,
    ends: Vec<[usize; 2]>,
    rotation: Vec<Vec<HalfEdge>>,
    next: Vec<HalfEdge>,
    quantizer: BTreeMap<(usize, usize), Rational64>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

/// Lists every violated invariant of a graph document.
pub fn validate(data: &GraphData) -> ValidationReport {
    let mut report = ValidationReport::default();
    if data.edges.is_empty() {
        report.push("graph has no edges");
    }
    let mut vindex = HashMap::new();
    for (i, v) in data.vertices.iter().enumerate() {
        if vindex.insert(v.id.as_str(), i).is_some() {
            report.push(format!("duplicate vertex id `{}`", v.id));
        }
        if v.multiplicity == 0 {
            report.push(format!("multiplicity of `{}` must be at least 1", v.id));
        }
    }
    let mut eindex = HashMap::new();
    for (i, e) in data.edges.iter().enumerate() {
        if eindex.insert(e.id.as_str(), i).is_some() {
            report.push(format!("duplicate edge id `{}`", e.id));
        }
        for end in &e.ends {
            if !vindex.contains_key(end.as_str()) {
                report.push(format!("edge `{}` ends at unknown vertex `{}`", e.id, end));
            }
        }
    }
    if !report.is_empty() {
        return report;
    }

    // incidence versus rotation
    let mut incident: Vec<BTreeSet<(usize, u8)>> = vec![BTreeSet::new(); data.vertices.len()];
    for (i, e) in data.edges.iter().enumerate() {
        for (end, v) in e.ends.iter().enumerate() {
            incident[vindex[v.as_str()]].insert((i, end as u8));
        }
    }
    for key in data.rotation.keys() {
        if !vindex.contains_key(key.as_str()) {
            report.push(format!("rotation given for unknown vertex `{key}`"));
        }
    }
    for (vi, v) in data.vertices.iter().enumerate() {
        let listed = data.rotation.get(&v.id).cloned().unwrap_or_default();
        let mut seen = BTreeSet::new();
        let mut ok = true;
        for (edge, end) in &listed {
            match eindex.get(edge.as_str()) {
                Some(&ei) if *end < 2 => {
                    if !seen.insert((ei, *end)) {
                        ok = false;
                    }
                }
                _ => ok = false,
            }
        }
        if !ok || seen != incident[vi] {
            report.push(format!("rotation/incidence mismatch at {}", v.id));
        }
    }

    // connectivity over vertices
    if !data.vertices.is_empty() {
        let mut adj = vec![Vec::new(); data.vertices.len()];
        for e in &data.edges {
            let a = vindex[e.ends[0].as_str()];
            let b = vindex[e.ends[1].as_str()];
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; data.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            report.push("graph is not connected");
        }
    }

    // quantizer keys
    let valency = |v: usize| incident[v].len();
    let truncated_end = |v: usize| valency(v) == 1 && data.vertices[v].multiplicity == 1;
    let mut keys = BTreeSet::new();
    for q in &data.quantizer {
        let (Some(&ei), Some(&vi)) = (eindex.get(q.edge.as_str()), vindex.get(q.vertex.as_str())) else {
            report.push(format!("quantizer key ({}, {}) names unknown ids", q.edge, q.vertex));
            continue;
        };
        let ends = &data.edges[ei].ends;
        let a = vindex[ends[0].as_str()];
        let b = vindex[ends[1].as_str()];
        if vi != a && vi != b {
            report.push(format!("quantizer key ({}, {}) is not an incident pair", q.edge, q.vertex));
        } else if truncated_end(a) || truncated_end(b) {
            report.push(format!("quantizer key outside admissible pairs: ({}, {}) lies on a truncated edge", q.edge, q.vertex));
        }
        if !keys.insert((ei, vi)) {
            report.push(format!("duplicate quantizer key ({}, {})", q.edge, q.vertex));
        }
        match parse_rational(&q.value) {
            Some(r) if !r.is_zero() => {}
            _ => report.push(format!("quantizer value `{}` is not a nonzero rational", q.value)),
        }
    }
    report
}

/// Parses `p`, `p/q` or `-p/q` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational64> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (text.parse::<i64>().ok()?, 1),
    };
    if den == 0 {
        return None;
    }
    Some(Rational64::new(num, den))
}

pub fn format_rational(r: &Rational64) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl BrauerGraph {
    pub fn from_data(data: &GraphData) -> Result<Self, GraphError> {
        let report = validate(data);
        if !report.is_empty() {
            return Err(GraphError::Invalid(report));
        }
        let vertex_index: HashMap<String, usize> =
            data.vertices.iter().enumerate().map(|(i, v)| (v.id.clone(), i)).collect();
        let edge_index: HashMap<String, usize> =
            data.edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        let ends: Vec<[usize; 2]> = data
            .edges
            .iter()
            .map(|e| [vertex_index[&e.ends[0]], vertex_index[&e.ends[1]]])
            .collect();
        let mut rotation = vec![Vec::new(); data.vertices.len()];
        for (v, list) in &data.rotation {
            rotation[vertex_index[v]] = list
                .iter()
                .map(|(e, end)| HalfEdge::new(edge_index[e], *end as usize))
                .collect();
        }
        let mut next = vec![HalfEdge::new(0, 0); 2 * data.edges.len()];
        for list in &rotation {
            for (i, h) in list.iter().enumerate() {
                next[h.index()] = list[(i + 1) % list.len()];
            }
        }
        let quantizer = data
            .quantizer
            .iter()
            .map(|q| {
                let key = (edge_index[&q.edge], vertex_index[&q.vertex]);
                (key, parse_rational(&q.value).expect("validated"))
            })
            .filter(|(_, r)| !r.is_one())
            .collect();
        Ok(BrauerGraph {
            vertex_ids: data.vertices.iter().map(|v| v.id.clone()).collect(),
            multiplicity: data.vertices.iter().map(|v| v.multiplicity).collect(),
            edge_ids: data.edges.iter().map(|e| e.id.clone()).collect(),
            ends,
            rotation,
            next,
            quantizer,
            vertex_index,
            edge_index,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        Self::from_data(&GraphData::from_json(text)?)
    }

    pub fn to_data(&self) -> GraphData {
        GraphData {
            vertices: self
                .vertex_ids
                .iter()
                .zip(&self.multiplicity)
                .map(|(id, &m)| VertexData { id: id.clone(), multiplicity: m })
                .collect(),
            edges: self
                .edge_ids
                .iter()
                .zip(&self.ends)
                .map(|(id, e)| EdgeData {
                    id: id.clone(),
                    ends: [self.vertex_ids[e[0]].clone(), self.vertex_ids[e[1]].clone()],
                })
                .collect(),
            rotation: self
                .rotation
                .iter()
                .enumerate()
                .map(|(v, list)| {
                    let hs = list.iter().map(|h| (self.edge_ids[h.edge].clone(), h.end as u8)).collect();
                    (self.vertex_ids[v].clone(), hs)
                })
                .collect(),
            quantizer: self
                .quantizer
                .iter()
                .map(|(&(e, v), r)| QuantizerData {
                    edge: self.edge_ids[e].clone(),
                    vertex: self.vertex_ids[v].clone(),
                    value: format_rational(r),
                })
                .collect(),
        }
    }

    /// Re-checks the invariants of an already built graph.
    pub fn validate(&self) -> ValidationReport {
        validate(&self.to_data())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn vertex(&self, id: &str) -> Result<usize, GraphError> {
        self.vertex_index.get(id).copied().ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    pub fn edge(&self, id: &str) -> Result<usize, GraphError> {
        self.edge_index.get(id).copied().ok_or_else(|| GraphError::UnknownEdge(id.to_string()))
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edge_ids[e]
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn multiplicity(&self, v: usize) -> u32 {
        self.multiplicity[v]
    }

    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    pub fn rotation(&self, v: usize) -> &[HalfEdge] {
        &self.rotation[v]
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.ends[h.edge][h.end]
    }

    pub fn next(&self, h: HalfEdge) -> HalfEdge {
        self.next[h.index()]
    }

    pub fn half_edges(&self) -> impl Iterator<Item = HalfEdge> + '_ {
        (0..self.num_edges()).flat_map(|e| [HalfEdge::new(e, 0), HalfEdge::new(e, 1)])
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.ends[e][0] == self.ends[e][1]
    }

    /// Quantizer value at `(e, v)`; 1 when unset.
    pub fn quantizer(&self, e: usize, v: usize) -> Rational64 {
        self.quantizer.get(&(e, v)).copied().unwrap_or_else(Rational64::one)
    }

    pub fn has_trivial_quantizer(&self) -> bool {
        self.quantizer.values().all(|q| q.is_one())
    }

    pub fn quantizer_entries(&self) -> impl Iterator<Item = ((usize, usize), Rational64)> + '_ {
        self.quantizer.iter().map(|(k, v)| (*k, *v))
    }

    pub fn valency(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// `val(v) * m(v)`.
    pub fn weight(&self, v: usize) -> usize {
        self.valency(v) * self.multiplicity[v] as usize
    }

    /// Every path longer than this vanishes in the algebra.
    pub fn nilpotency_bound(&self) -> usize {
        (0..self.num_vertices()).map(|v| self.weight(v)).max().unwrap_or(0)
    }

    pub fn is_truncated_half_edge(&self, h: HalfEdge) -> bool {
        let v = self.vertex_of(h);
        self.valency(v) == 1 && self.multiplicity[v] == 1
    }

    pub fn is_truncated(&self, e: usize, v: usize) -> Result<bool, GraphError> {
        if !self.ends[e].contains(&v) {
            return Err(self.not_incident(e, v));
        }
        Ok(self.valency(v) == 1 && self.multiplicity[v] == 1)
    }

    /// True when the edge is truncated at some endpoint.
    pub fn edge_is_truncated(&self, e: usize) -> bool {
        (0..2).any(|end| self.is_truncated_half_edge(HalfEdge::new(e, end)))
    }

    pub fn truncated_edges(&self) -> Vec<usize> {
        (0..self.num_edges()).filter(|&e| self.edge_is_truncated(e)).collect()
    }

    pub fn has_truncated_edge(&self) -> bool {
        (0..self.num_edges()).any(|e| self.edge_is_truncated(e))
    }

    pub fn has_nontruncated_edge(&self) -> bool {
        (0..self.num_edges()).any(|e| !self.edge_is_truncated(e))
    }

    /// Single edge between two vertices of multiplicity one.
    pub fn is_a2_unit(&self) -> bool {
        self.num_edges() == 1 && !self.is_loop(0) && self.multiplicity.iter().all(|&m| m == 1)
    }

    fn not_incident(&self, e: usize, v: usize) -> GraphError {
        GraphError::NotIncident { edge: self.edge_ids[e].clone(), vertex: self.vertex_ids[v].clone() }
    }

    pub fn half_edge(&self, e: usize, v: usize) -> Result<HalfEdge, GraphError> {
        let [a, b] = self.ends[e];
        if a == v && b == v {
            Err(GraphError::AmbiguousLoop(self.edge_ids[e].clone()))
        } else if a == v {
            Ok(HalfEdge::new(e, 0))
        } else if b == v {
            Ok(HalfEdge::new(e, 1))
        } else {
            Err(self.not_incident(e, v))
        }
    }

    pub fn successor(&self, e: usize, v: usize) -> Result<usize, GraphError> {
        Ok(self.next(self.half_edge(e, v)?).edge)
    }

    /// Half-edges met walking once around the vertex of `h`, starting at `h`.
    pub fn successor_sequence_from(&self, h: HalfEdge) -> Vec<HalfEdge> {
        let mut out = vec![h];
        let mut cur = self.next(h);
        while cur != h {
            out.push(cur);
            cur = self.next(cur);
        }
        out
    }

    pub fn successor_sequence(&self, e: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        let h = self.half_edge(e, v)?;
        if self.is_truncated_half_edge(h) {
            return Err(GraphError::Truncated { edge: self.edge_ids[e].clone(), vertex: self.vertex_ids[v].clone() });
        }
        Ok(self.successor_sequence_from(h).into_iter().map(|x| x.edge).collect())
    }

    /// The other endpoint of a non-loop edge.
    pub fn other_end(&self, e: usize, v: usize) -> Result<usize, GraphError> {
        let h = self.half_edge(e, v)?;
        Ok(self.vertex_of(h.opposite()))
    }

    /// Common vertex of two distinct edges, when it is unique.
    pub fn shared_vertex(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        let ea = self.ends[a];
        let eb = self.ends[b];
        let common: BTreeSet<usize> = ea.iter().filter(|v| eb.contains(v)).copied().collect();
        if common.len() == 1 {
            common.into_iter().next()
        } else {
            None
        }
    }

    /// `(successor of s at its far end, far end)` given `s_prev` at `shared`.
    pub fn follows(&self, s_prev: usize, s: usize, shared: usize) -> Result<(usize, usize), GraphError> {
        let h = self.half_edge(s, shared)?;
        if !self.successor_sequence_from(h).iter().any(|x| x.edge == s_prev) {
            return Err(GraphError::Hypothesis(format!(
                "`{}` is not in the successor sequence of `{}` at `{}`",
                self.edge_ids[s_prev], self.edge_ids[s], self.vertex_ids[shared]
            )));
        }
        let far = h.opposite();
        Ok((self.next(far).edge, self.vertex_of(far)))
    }

    pub fn brauer_walk(&self, e: usize) -> Result<BrauerWalk, GraphError> {
        if !self.is_reduced() {
            return Err(GraphError::Hypothesis("Brauer walks need a reduced graph".into()));
        }
        if self.is_a2_unit() {
            return Err(GraphError::Hypothesis("Brauer walks are undefined on the single-edge graph".into()));
        }
        let start = (0..2)
            .map(|end| HalfEdge::new(e, end))
            .find(|&h| self.is_truncated_half_edge(h))
            .ok_or_else(|| GraphError::Hypothesis(format!("edge `{}` is not truncated", self.edge_ids[e])))?;
        let mut edges = vec![e];
        let mut via = Vec::new();
        let mut far = start.opposite();
        for _ in 0..=2 * self.num_edges() {
            let near = self.next(far);
            edges.push(near.edge);
            via.push(self.vertex_of(near));
            far = near.opposite();
            if self.is_truncated_half_edge(far) {
                return Ok(BrauerWalk { edges, via });
            }
        }
        Err(GraphError::Hypothesis("Brauer walk did not terminate".into()))
    }

    /// No loops, no multiple edges and all multiplicities one.
    pub fn is_reduced(&self) -> bool {
        if self.multiplicity.iter().any(|&m| m != 1) {
            return false;
        }
        let mut pairs = BTreeSet::new();
        for &[a, b] in &self.ends {
            if a == b || !pairs.insert((a.min(b), a.max(b))) {
                return false;
            }
        }
        true
    }

    /// Every binomial relation has terms of equal length.
    pub fn is_length_graded(&self) -> bool {
        (0..self.num_edges()).all(|e| {
            if self.edge_is_truncated(e) {
                return true;
            }
            let [a, b] = self.ends[e];
            self.weight(a) == self.weight(b)
        })
    }

    fn is_simple_graph(&self) -> bool {
        let mut pairs = BTreeSet::new();
        self.ends.iter().all(|&[a, b]| a != b && pairs.insert((a.min(b), a.max(b))))
    }

    /// Vertices in order along the graph when it is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        if n < 2 || self.num_edges() != n - 1 || !self.is_simple_graph() {
            return None;
        }
        if (0..n).any(|v| self.valency(v) > 2) {
            return None;
        }
        let start = (0..n).find(|&v| self.valency(v) == 1)?;
        let mut order = vec![start];
        let mut prev_edge = None;
        let mut cur = start;
        while order.len() < n {
            let h = self.rotation[cur].iter().find(|h| Some(h.edge) != prev_edge)?;
            prev_edge = Some(h.edge);
            cur = self.vertex_of(h.opposite());
            order.push(cur);
        }
        Some(order)
    }

    /// Possible centres when the graph is a star: every edge joins the centre to a valency-one vertex.
    pub fn star_centers(&self) -> Vec<usize> {
        if !self.is_simple_graph() || self.num_edges() + 1 != self.num_vertices() {
            return Vec::new();
        }
        (0..self.num_vertices())
            .filter(|&c| self.valency(c) == self.num_edges())
            .filter(|&c| (0..self.num_vertices()).all(|v| v == c || self.valency(v) == 1))
            .collect()
    }

    pub fn recognize_family(&self) -> Family {
        let n = self.num_vertices();
        if n == 1 && self.num_edges() == 1 {
            return Family::Loop;
        }
        if self.path_order().is_some() {
            return Family::A(n);
        }
        if !self.star_centers().is_empty() {
            return Family::Star(self.num_edges());
        }
        let no_loops = (0..self.num_edges()).all(|e| !self.is_loop(e));
        if no_loops && n >= 2 && self.num_edges() == n && (0..n).all(|v| self.valency(v) == 2) {
            return Family::ATilde(n - 1);
        }
        Family::Other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("3/6"), Some(Rational64::new(1, 2)));
        assert_eq!(parse_rational("-2"), Some(Rational64::from_integer(-2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn json_round_trip() {
        let g = samples::triangle(1);
        let again = BrauerGraph::from_json(&g.to_data().to_json()).unwrap();
        assert_eq!(again.to_data(), g.to_data());
    }

    #[test]
    fn walk_rejects_nontruncated_start() {
        let g = samples::path(&[1, 1, 1, 1]);
        let e2 = g.edge("e2").unwrap();
        assert!(matches!(g.brauer_walk(e2), Err(GraphError::Hypothesis(_))));
    }
}
