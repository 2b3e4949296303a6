//! Exhaustive enumeration of small Brauer graphs up to isomorphism.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::graph::{BrauerGraph, EdgeData, GraphData, HalfEdge, VertexData};

/// An unlabelled connected multigraph with loops.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Shape {
    fn connected(&self) -> bool {
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn relabel(&self, perm: &[usize]) -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        es.sort();
        es
    }

    /// Half-edges at each vertex, in edge order.
    pub fn half_edges_at(&self) -> Vec<Vec<HalfEdge>> {
        let mut at = vec![Vec::new(); self.vertices];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            at[a].push(HalfEdge::new(e, 0));
            at[b].push(HalfEdge::new(e, 1));
        }
        at
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn multisets(items: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in from..items {
        cur.push(i);
        multisets(items, k, i, cur, out);
        cur.pop();
    }
}

/// Connected shapes with exactly `edges` edges, one per isomorphism class.
pub fn shapes(edges: usize) -> Vec<Shape> {
    let mut found = BTreeSet::new();
    for n in 1..=edges + 1 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let perms = permutations(n);
        let mut choices = Vec::new();
        multisets(pairs.len(), edges, 0, &mut Vec::new(), &mut choices);
        for choice in choices {
            let shape = Shape { vertices: n, edges: choice.iter().map(|&i| pairs[i]).collect() };
            let mut used = vec![false; n];
            for &(a, b) in &shape.edges {
                used[a] = true;
                used[b] = true;
            }
            if used.contains(&false) || !shape.connected() {
                continue;
            }
            let canonical = perms.iter().map(|p| shape.relabel(p)).min().expect("nonempty");
            found.insert(Shape { vertices: n, edges: canonical });
        }
    }
    found.into_iter().collect()
}

/// Every cyclic order of `items` with the first element fixed.
fn cyclic_orders(items: &[HalfEdge]) -> Vec<Vec<HalfEdge>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    permutations(items.len() - 1)
        .into_iter()
        .map(|p| std::iter::once(items[0]).chain(p.into_iter().map(|i| items[i + 1])).collect())
        .collect()
}

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect();
    }
    out
}

pub fn graph_of(shape: &Shape, mults: &[u32], rotation: &[Vec<HalfEdge>]) -> BrauerGraph {
    let vid = |v: usize| format!("v{}", v + 1);
    let eid = |e: usize| format!("e{}", e + 1);
    let data = GraphData {
        vertices: (0..shape.vertices).map(|v| VertexData { id: vid(v), multiplicity: mults[v] }).collect(),
        edges: shape.edges.iter().enumerate().map(|(e, &(a, b))| EdgeData { id: eid(e), ends: [vid(a), vid(b)] }).collect(),
        rotation: rotation
            .iter()
            .enumerate()
            .map(|(v, hs)| (vid(v), hs.iter().map(|h| (eid(h.edge), h.end as u8)).collect()))
            .collect(),
        quantizer: Vec::new(),
    };
    BrauerGraph::from_data(&data).expect("census graphs are valid")
}

/// Isomorphism invariant of a Brauer graph: the least dart-traversal code over all starting darts.
pub fn canonical_code(g: &BrauerGraph) -> Vec<usize> {
    let darts = 2 * g.num_edges();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..darts {
        let mut num = vec![usize::MAX; darts];
        let mut order = Vec::with_capacity(darts);
        num[start] = 0;
        order.push(start);
        let mut i = 0;
        while i < order.len() {
            let d = HalfEdge::from_index(order[i]);
            for x in [d.opposite(), g.next(d)] {
                if num[x.index()] == usize::MAX {
                    num[x.index()] = order.len();
                    order.push(x.index());
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(3 * darts);
        for &d in &order {
            let h = HalfEdge::from_index(d);
            code.extend([num[h.opposite().index()], num[g.next(h).index()], g.multiplicity(g.vertex_of(h)) as usize]);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

/// Connected Brauer graphs with `1..=max_edges` edges and multiplicities `1..=max_mult`,
/// over all rotation systems, one per isomorphism class.
pub fn census(max_edges: usize, max_mult: u32) -> Vec<BrauerGraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for edges in 1..=max_edges {
        for shape in shapes(edges) {
            let rotations = product(&shape.half_edges_at().iter().map(|hs| cyclic_orders(hs)).collect::<Vec<_>>());
            let mults = product(&vec![(1..=max_mult).collect::<Vec<_>>(); shape.vertices]);
            for rotation in &rotations {
                for m in &mults {
                    let g = graph_of(&shape, m, rotation);
                    if seen.insert(canonical_code(&g)) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts() {
        // one edge: segment or loop; two edges: path, double edge, loop on a segment end, two loops
        assert_eq!(shapes(1).len(), 2);
        assert_eq!(shapes(2).len(), 4);
    }

    #[test]
    fn isomorphic_rotations_collapse() {
        let gs = census(1, 1);
        assert_eq!(gs.len(), 2);
        let two = census(2, 1);
        // path A3, double edge, loop at a leaf end (two rotations agree), two loops (two maps)
        assert!(two.len() > 4);
        let codes: HashSet<_> = two.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), two.len());
    }
}
