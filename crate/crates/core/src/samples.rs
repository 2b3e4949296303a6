//! Named graphs used throughout tests, examples and the acceptance run.

use std::collections::BTreeMap;

use crate::graph::{BrauerGraph, EdgeData, GraphData, VertexData};

/// Builds a graph from vertex `(id, multiplicity)` pairs, edges `(id, end0, end1)`
/// and rotations listing `(edge, end)` per vertex.
pub fn build(
    vertices: &[(&str, u32)],
    edges: &[(&str, &str, &str)],
    rotation: &[(&str, Vec<(&str, u8)>)],
) -> BrauerGraph {
    let data = GraphData {
        vertices: vertices.iter().map(|(id, m)| VertexData { id: id.to_string(), multiplicity: *m }).collect(),
        edges: edges
            .iter()
            .map(|(id, a, b)| EdgeData { id: id.to_string(), ends: [a.to_string(), b.to_string()] })
            .collect(),
        rotation: rotation
            .iter()
            .map(|(v, hs)| (v.to_string(), hs.iter().map(|(e, end)| (e.to_string(), *end)).collect()))
            .collect::<BTreeMap<_, _>>(),
        quantizer: Vec::new(),
    };
    BrauerGraph::from_data(&data).expect("sample graph is valid")
}

/// Cycle on `n >= 2` vertices `v1..vn` with edges `e_i = (v_i, v_{i+1})`.
pub fn cycle(mults: &[u32]) -> BrauerGraph {
    let n = mults.len();
    assert!(n >= 2);
    let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let es: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let vertices: Vec<(&str, u32)> = vs.iter().map(String::as_str).zip(mults.iter().copied()).collect();
    let edges: Vec<(&str, &str, &str)> =
        (0..n).map(|i| (es[i].as_str(), vs[i].as_str(), vs[(i + 1) % n].as_str())).collect();
    let rotation: Vec<(&str, Vec<(&str, u8)>)> = (0..n)
        .map(|i| (vs[i].as_str(), vec![(es[i].as_str(), 0), (es[(i + n - 1) % n].as_str(), 1)]))
        .collect();
    build(&vertices, &edges, &rotation)
}

/// Triangle with every multiplicity equal to `m`.
pub fn triangle(m: u32) -> BrauerGraph {
    cycle(&[m, m, m])
}

/// Path `v1 - v2 - ... - vn` with edges `e_i = (v_i, v_{i+1})`.
pub fn path(mults: &[u32]) -> BrauerGraph {
    let n = mults.len();
    assert!(n >= 2);
    let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let es: Vec<String> = (1..n).map(|i| format!("e{i}")).collect();
    let vertices: Vec<(&str, u32)> = vs.iter().map(String::as_str).zip(mults.iter().copied()).collect();
    let edges: Vec<(&str, &str, &str)> =
        (0..n - 1).map(|i| (es[i].as_str(), vs[i].as_str(), vs[i + 1].as_str())).collect();
    let rotation: Vec<(&str, Vec<(&str, u8)>)> = (0..n)
        .map(|i| {
            let mut hs = Vec::new();
            if i > 0 {
                hs.push((es[i - 1].as_str(), 1));
            }
            if i + 1 < n {
                hs.push((es[i].as_str(), 0));
            }
            (vs[i].as_str(), hs)
        })
        .collect();
    build(&vertices, &edges, &rotation)
}

/// Star with centre `c` of multiplicity `center`, edges `e_i = (c, o_i)` in rotation order.
pub fn star(n: usize, center: u32) -> BrauerGraph {
    star_with(center, &vec![1; n])
}

/// Star with explicit outer multiplicities.
pub fn star_with(center: u32, outer: &[u32]) -> BrauerGraph {
    let n = outer.len();
    let os: Vec<String> = (1..=n).map(|i| format!("o{i}")).collect();
    let es: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let mut vertices = vec![("c", center)];
    vertices.extend(os.iter().map(String::as_str).zip(outer.iter().copied()));
    let edges: Vec<(&str, &str, &str)> = (0..n).map(|i| (es[i].as_str(), "c", os[i].as_str())).collect();
    let mut rotation = vec![("c", es.iter().map(|e| (e.as_str(), 0)).collect::<Vec<_>>())];
    rotation.extend((0..n).map(|i| (os[i].as_str(), vec![(es[i].as_str(), 1)])));
    build(&vertices, &edges, &rotation)
}

/// One vertex carrying one loop.
pub fn single_loop(m: u32) -> BrauerGraph {
    build(&[("v1", m)], &[("e1", "v1", "v1")], &[("v1", vec![("e1", 0), ("e1", 1)])])
}
