//! String modules over reduced Brauer graphs and their syzygies.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BrauerGraph, GraphError, HalfEdge};
use crate::oracle::{FiniteDimAlgebra, Rep, SparseVec};
use crate::presentation::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("string calculus needs a reduced graph (multiplicities one, no loops, no multiple edges)")]
    NotReduced,
    #[error("descriptor is not acceptable: {0}")]
    NotAcceptable(String),
    #[error("descriptor describes a projective module")]
    Projective,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Signed edges; `+` entries are tops and `-` entries socles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringDescriptor {
    pub entries: Vec<(usize, Sign)>,
}

impl StringDescriptor {
    pub fn new(entries: Vec<(usize, Sign)>) -> Self {
        StringDescriptor { entries }
    }

    pub fn simple(e: usize) -> Self {
        StringDescriptor { entries: vec![(e, Sign::Plus)] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reverse(&self) -> Self {
        StringDescriptor { entries: self.entries.iter().rev().copied().collect() }
    }

    pub fn star_flip(&self) -> Self {
        if self.entries.len() == 1 {
            return self.clone();
        }
        StringDescriptor { entries: self.entries.iter().map(|&(e, s)| (e, s.flip())).collect() }
    }

    /// The module is the same for a descriptor and its reverse.
    pub fn same_module(&self, other: &StringDescriptor) -> bool {
        self == other || *self == other.reverse()
    }

    pub fn top(&self) -> Vec<usize> {
        if self.entries.len() == 1 {
            return vec![self.entries[0].0];
        }
        self.entries.iter().filter(|e| e.1 == Sign::Plus).map(|e| e.0).collect()
    }

    pub fn socle(&self) -> Vec<usize> {
        if self.entries.len() == 1 {
            return vec![self.entries[0].0];
        }
        self.entries.iter().filter(|e| e.1 == Sign::Minus).map(|e| e.0).collect()
    }

    pub fn to_json(&self, g: &BrauerGraph) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries.iter().map(|&(e, s)| serde_json::json!([g.edge_id(e), s.to_string()])).collect(),
        )
    }

    pub fn display(&self, g: &BrauerGraph) -> String {
        let parts: Vec<String> = self.entries.iter().map(|&(e, s)| format!("{}{}", g.edge_id(e), s)).collect();
        format!("({})", parts.join(", "))
    }
}

fn require_reduced(g: &BrauerGraph) -> Result<(), StringError> {
    if g.is_reduced() {
        Ok(())
    } else {
        Err(StringError::NotReduced)
    }
}

/// Connecting vertices of adjacent entries.
pub fn links(g: &BrauerGraph, sigma: &StringDescriptor) -> Result<Vec<usize>, StringError> {
    require_reduced(g)?;
    sigma
        .entries
        .windows(2)
        .map(|w| {
            g.shared_vertex(w[0].0, w[1].0).ok_or_else(|| {
                StringError::NotAcceptable(format!("`{}` and `{}` share no vertex", g.edge_id(w[0].0), g.edge_id(w[1].0)))
            })
        })
        .collect()
}

fn acceptability(g: &BrauerGraph, sigma: &StringDescriptor) -> Result<(), StringError> {
    if sigma.is_empty() {
        return Err(StringError::NotAcceptable("empty descriptor".into()));
    }
    let ls = links(g, sigma)?;
    for w in sigma.entries.windows(2) {
        if w[0].1 == w[1].1 {
            return Err(StringError::NotAcceptable("adjacent signs must alternate".into()));
        }
    }
    for w in ls.windows(2) {
        if w[0] == w[1] {
            return Err(StringError::NotAcceptable(format!("consecutive links both at `{}`", g.vertex_id(w[0]))));
        }
    }
    Ok(())
}

/// Alternating signs, adjacent entries around a shared vertex, and consecutive links distinct.
pub fn validate_acceptable(g: &BrauerGraph, sigma: &StringDescriptor) -> Result<bool, StringError> {
    require_reduced(g)?;
    match acceptability(g, sigma) {
        Ok(()) => Ok(true),
        Err(StringError::NotAcceptable(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Uniserial module with the given top and socle, when one exists.
pub fn uniserial(g: &BrauerGraph, top: usize, socle: usize) -> Result<Option<StringDescriptor>, StringError> {
    require_reduced(g)?;
    if top == socle {
        return Ok(Some(StringDescriptor::simple(top)));
    }
    Ok(g.shared_vertex(top, socle).map(|_| StringDescriptor::new(vec![(top, Sign::Plus), (socle, Sign::Minus)])))
}

/// Steps from `from` to `to` in the rotation at `v`.
fn steps_around(g: &BrauerGraph, from: usize, to: usize, v: usize) -> Result<usize, StringError> {
    let seq = g.successor_sequence_from(g.half_edge(from, v)?);
    seq.iter()
        .position(|h| h.edge == to)
        .ok_or_else(|| StringError::NotAcceptable(format!("`{}` is not around `{}`", g.edge_id(to), g.vertex_id(v))))
}

/// Number of composition factors.
pub fn dimension(g: &BrauerGraph, sigma: &StringDescriptor) -> Result<usize, StringError> {
    acceptability(g, sigma)?;
    let n = sigma.len();
    if n == 1 {
        return Ok(1);
    }
    let ls = links(g, sigma)?;
    let mut total = 0;
    for (w, &v) in sigma.entries.windows(2).zip(&ls) {
        let (top, socle) = if w[0].1 == Sign::Plus { (w[0].0, w[1].0) } else { (w[1].0, w[0].0) };
        total += steps_around(g, top, socle, v)? + 1;
    }
    Ok(total + 2 - n)
}

/// The vertex of `s` other than `v`.
fn far_vertex(g: &BrauerGraph, s: usize, v: usize) -> Result<usize, StringError> {
    Ok(g.other_end(s, v)?)
}

fn left_part(g: &BrauerGraph, sigma: &[(usize, Sign)], link: usize) -> Result<Vec<(usize, Sign)>, StringError> {
    let (s1, e1) = sigma[0];
    let s2 = sigma[1].0;
    match e1 {
        Sign::Plus => {
            let beta = far_vertex(g, s1, link)?;
            if g.is_truncated(s1, beta)? {
                Ok(vec![(s1, Sign::Minus)])
            } else {
                Ok(vec![(g.successor(s1, beta)?, Sign::Plus), (s1, Sign::Minus)])
            }
        }
        Sign::Minus => {
            let t = g.successor(s1, link)?;
            if t == s2 {
                Ok(Vec::new())
            } else {
                Ok(vec![(t, Sign::Plus)])
            }
        }
    }
}

/// First syzygy of the string module.
pub fn syzygy(g: &BrauerGraph, sigma: &StringDescriptor) -> Result<StringDescriptor, StringError> {
    acceptability(g, sigma)?;
    let n = sigma.len();
    if n == 1 {
        return syzygy_of_simple(g, sigma.entries[0].0);
    }
    let ls = links(g, sigma)?;
    let mut out = left_part(g, &sigma.entries, ls[0])?;
    out.extend(sigma.entries[1..n - 1].iter().map(|&(e, s)| (e, s.flip())));
    let rev: Vec<(usize, Sign)> = sigma.entries.iter().rev().copied().collect();
    let mut right = left_part(g, &rev, ls[n - 2])?;
    right.reverse();
    out.extend(right);
    if out.is_empty() {
        return Err(StringError::Projective);
    }
    if out.len() == 1 {
        out[0].1 = Sign::Plus;
    }
    Ok(StringDescriptor::new(out))
}

pub fn syzygy_of_simple(g: &BrauerGraph, e: usize) -> Result<StringDescriptor, StringError> {
    require_reduced(g)?;
    if g.is_a2_unit() {
        return Ok(StringDescriptor::simple(e));
    }
    let [a, b] = g.ends(e);
    let h0 = HalfEdge::new(e, 0);
    let h1 = HalfEdge::new(e, 1);
    if g.is_truncated_half_edge(h0) {
        return Ok(StringDescriptor::new(vec![(g.successor(e, b)?, Sign::Plus), (e, Sign::Minus)]));
    }
    if g.is_truncated_half_edge(h1) {
        return Ok(StringDescriptor::new(vec![(g.successor(e, a)?, Sign::Plus), (e, Sign::Minus)]));
    }
    Ok(StringDescriptor::new(vec![
        (g.successor(e, a)?, Sign::Plus),
        (e, Sign::Minus),
        (g.successor(e, b)?, Sign::Plus),
    ]))
}

/// Syzygies `Ω^1 … Ω^n` of a simple, with the least period found among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyTrace {
    pub start: usize,
    pub descriptors: Vec<StringDescriptor>,
    pub period: Option<usize>,
}

impl SyzygyTrace {
    /// `Ω^n`, with `Ω^0` the simple itself.
    pub fn omega(&self, n: usize) -> StringDescriptor {
        if n == 0 {
            StringDescriptor::simple(self.start)
        } else {
            self.descriptors[n - 1].clone()
        }
    }

    pub fn to_json(&self, g: &BrauerGraph) -> serde_json::Value {
        serde_json::json!({
            "edge": g.edge_id(self.start),
            "syzygies": self.descriptors.iter().enumerate().map(|(i, d)| serde_json::json!({
                "degree": i + 1,
                "descriptor": d.to_json(g),
            })).collect::<Vec<_>>(),
            "period": self.period,
        })
    }
}

pub fn iterate_syzygy(g: &BrauerGraph, e: usize, n: usize) -> Result<SyzygyTrace, StringError> {
    let simple = StringDescriptor::simple(e);
    let mut descriptors = Vec::with_capacity(n);
    let mut period = None;
    let mut cur = simple.clone();
    for k in 1..=n {
        cur = syzygy(g, &cur)?;
        if period.is_none() && cur.same_module(&simple) {
            period = Some(k);
        }
        descriptors.push(cur.clone());
    }
    Ok(SyzygyTrace { start: e, descriptors, period })
}

/// Default search bound for periods: `2 · |edges| · L`.
pub fn default_period_cap(g: &BrauerGraph) -> usize {
    2 * g.num_edges() * g.nilpotency_bound()
}

/// Least `p ≤ cap` with `Ω^p(S) ≅ S`.
pub fn period(g: &BrauerGraph, e: usize, cap: usize) -> Result<Option<usize>, StringError> {
    let simple = StringDescriptor::simple(e);
    let mut cur = simple.clone();
    for k in 1..=cap {
        cur = syzygy(g, &cur)?;
        if cur.same_module(&simple) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Explicit representation glued from uniserial pieces.
pub fn realize(g: &BrauerGraph, quiver: &Quiver, sigma: &StringDescriptor, alg: &FiniteDimAlgebra) -> Result<Rep, StringError> {
    acceptability(g, sigma)?;
    let ls = links(g, sigma)?;
    let mut vertex_of = vec![sigma.entries[0].0];
    // basis index of each entry
    let mut entry_index = vec![0usize];
    let mut arrow_maps: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, (w, &v)) in sigma.entries.windows(2).zip(&ls).enumerate() {
        let (top, socle, top_is_left) =
            if w[0].1 == Sign::Plus { (w[0].0, w[1].0, true) } else { (w[1].0, w[0].0, false) };
        let mut chain = vec![top];
        let mut h = g.half_edge(top, v)?;
        while h.edge != socle {
            h = g.next(h);
            chain.push(h.edge);
        }
        // basis vectors along the chain, reusing the entry already placed on the left
        let mut idx = Vec::with_capacity(chain.len());
        for (k, &e) in chain.iter().enumerate() {
            let is_left_end = if top_is_left { k == 0 } else { k == chain.len() - 1 };
            if is_left_end {
                idx.push(entry_index[i]);
            } else {
                idx.push(vertex_of.len());
                vertex_of.push(e);
            }
        }
        entry_index.push(if top_is_left { idx[idx.len() - 1] } else { idx[0] });
        let mut h = g.half_edge(top, v)?;
        for k in 0..chain.len() - 1 {
            let a = quiver.arrow_at(h).expect("reduced graphs have arrows at shared vertices");
            arrow_maps.insert((a, idx[k]), idx[k + 1]);
            h = g.next(h);
        }
    }
    let dim = vertex_of.len();
    let one = alg.one();
    let actions = (0..quiver.arrows.len())
        .map(|a| {
            (0..dim)
                .map(|i| arrow_maps.get(&(a, i)).map_or_else(SparseVec::new, |&j| SparseVec::unit(j, one)))
                .collect()
        })
        .collect();
    Ok(Rep { vertex_of, actions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use Sign::{Minus as M, Plus as P};

    fn d(g: &BrauerGraph, items: &[(&str, Sign)]) -> StringDescriptor {
        StringDescriptor::new(items.iter().map(|(e, s)| (g.edge(e).unwrap(), *s)).collect())
    }

    #[test]
    fn acceptability_examples() {
        let t = samples::triangle(1);
        assert!(validate_acceptable(&t, &d(&t, &[("e3", P), ("e1", M), ("e2", P)])).unwrap());
        assert!(!validate_acceptable(&t, &d(&t, &[("e1", P), ("e2", P)])).unwrap());
        let a4 = samples::path(&[1, 1, 1, 1]);
        assert!(!validate_acceptable(&a4, &d(&a4, &[("e1", P), ("e2", M), ("e1", P)])).unwrap());
        assert!(validate_acceptable(&samples::triangle(2), &StringDescriptor::simple(0)).is_err());
    }

    #[test]
    fn triangle_syzygies() {
        let t = samples::triangle(1);
        let e1 = t.edge("e1").unwrap();
        let o1 = syzygy_of_simple(&t, e1).unwrap();
        assert_eq!(o1, d(&t, &[("e3", P), ("e1", M), ("e2", P)]));
        let o2 = syzygy(&t, &o1).unwrap();
        assert_eq!(o2, d(&t, &[("e2", P), ("e3", M), ("e1", P), ("e2", M), ("e3", P)]));
        assert_eq!(dimension(&t, &o2).unwrap(), 5);
        let trace = iterate_syzygy(&t, e1, 8).unwrap();
        for n in 1..=8 {
            assert_eq!(trace.omega(n).len(), 2 * n + 1);
        }
    }

    #[test]
    fn a4_syzygies() {
        let g = samples::path(&[1, 1, 1, 1]);
        let e1 = g.edge("e1").unwrap();
        let trace = iterate_syzygy(&g, e1, 6).unwrap();
        assert_eq!(trace.omega(1), d(&g, &[("e2", P), ("e1", M)]));
        assert_eq!(trace.omega(2), d(&g, &[("e3", P), ("e2", M)]));
        assert_eq!(trace.omega(3), d(&g, &[("e3", P)]));
        assert_eq!(trace.period, Some(6));
        assert_eq!(period(&g, e1, default_period_cap(&g)).unwrap(), Some(6));
        assert_eq!(dimension(&g, &trace.omega(1)).unwrap(), 2);
    }

    #[test]
    fn tops_socles_and_flips() {
        let t = samples::triangle(1);
        let s = d(&t, &[("e3", P), ("e1", M), ("e2", P)]);
        assert_eq!(s.reverse(), d(&t, &[("e2", P), ("e1", M), ("e3", P)]));
        assert_eq!(s.star_flip(), d(&t, &[("e3", M), ("e1", P), ("e2", M)]));
        assert_eq!(s.top(), vec![t.edge("e3").unwrap(), t.edge("e2").unwrap()]);
        assert_eq!(s.socle(), vec![t.edge("e1").unwrap()]);
        assert_eq!(StringDescriptor::simple(0).top(), StringDescriptor::simple(0).socle());
    }

    #[test]
    fn uniserial_lookup() {
        let g = samples::path(&[1, 1, 1, 1]);
        let (e1, e2, e3) = (g.edge("e1").unwrap(), g.edge("e2").unwrap(), g.edge("e3").unwrap());
        let u = uniserial(&g, e2, e1).unwrap().unwrap();
        assert_eq!(dimension(&g, &u).unwrap(), 2);
        assert_eq!(uniserial(&g, e1, e1).unwrap(), Some(StringDescriptor::simple(e1)));
        assert_eq!(uniserial(&g, e1, e3).unwrap(), None);
    }
}
