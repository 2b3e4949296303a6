use std::sync::OnceLock;

use brauer::census::census;
use brauer::classify::koszul_report;
use brauer::graph::HalfEdge;
use brauer::oracle::resolve::min_resolution;
use brauer::oracle::{build_algebra, FieldKind};
use brauer::presentation::Presentation;
use brauer::resolution::{ext_dim, resolve_any};
use brauer::strings::{self, StringDescriptor};
use brauer::BrauerGraph;
use proptest::prelude::*;

fn graphs() -> &'static [BrauerGraph] {
    static GRAPHS: OnceLock<Vec<BrauerGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| census(4, 2))
}

fn reduced() -> &'static [BrauerGraph] {
    static GRAPHS: OnceLock<Vec<BrauerGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| census(5, 1).into_iter().filter(|g| g.is_reduced()).collect())
}

fn reduced_graph() -> impl Strategy<Value = &'static BrauerGraph> {
    (0..reduced().len()).prop_map(|i| &reduced()[i])
}

fn any_graph() -> impl Strategy<Value = &'static BrauerGraph> {
    (0..graphs().len()).prop_map(|i| &graphs()[i])
}

fn shifted(g: &BrauerGraph, shifts: &[usize]) -> BrauerGraph {
    let mut data = g.to_data();
    for (list, &k) in data.rotation.values_mut().zip(shifts.iter().cycle()) {
        let len = list.len();
        list.rotate_left(k % len);
    }
    BrauerGraph::from_data(&data).unwrap()
}

fn mirrored(g: &BrauerGraph) -> BrauerGraph {
    let mut data = g.to_data();
    data.rotation.values_mut().for_each(|list| list.reverse());
    BrauerGraph::from_data(&data).unwrap()
}

fn swapped(g: &BrauerGraph, e: usize) -> BrauerGraph {
    let mut data = g.to_data();
    data.edges[e].ends.swap(0, 1);
    for list in data.rotation.values_mut() {
        for (id, end) in list.iter_mut() {
            if *id == data.edges[e].id {
                *end = 1 - *end;
            }
        }
    }
    BrauerGraph::from_data(&data).unwrap()
}

fn fingerprint(g: &BrauerGraph) -> String {
    let p = Presentation::new(g);
    let mut out = p.relations_json(g, false).to_string();
    out.push_str(&koszul_report(g, FieldKind::Rational).to_json(true).to_string());
    if g.is_reduced() {
        for e in 0..g.num_edges() {
            out.push_str(&strings::iterate_syzygy(g, e, 6).unwrap().to_json(g).to_string());
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn successor_sequences_close_up(g in any_graph()) {
        for h in g.half_edges() {
            if g.is_truncated_half_edge(h) {
                continue;
            }
            let seq = g.successor_sequence_from(h);
            prop_assert_eq!(seq.len(), g.valency(g.vertex_of(h)));
            prop_assert_eq!(seq[0], h);
            prop_assert_eq!(g.next(*seq.last().unwrap()), h);
        }
    }

    #[test]
    fn walks_reverse(g in reduced_graph()) {
        prop_assume!(!g.is_a2_unit());
        let m = mirrored(g);
        for e in g.truncated_edges() {
            let walk = g.brauer_walk(e).unwrap();
            let back = m.brauer_walk(*walk.edges.last().unwrap()).unwrap();
            let mut rev = walk.edges.clone();
            rev.reverse();
            prop_assert_eq!(back.edges, rev);
        }
    }

    #[test]
    fn rotation_shift_changes_nothing(g in any_graph(), shifts in prop::collection::vec(0usize..4, 1..6)) {
        prop_assert_eq!(fingerprint(g), fingerprint(&shifted(g, &shifts)));
    }

    #[test]
    fn syzygy_commutes_with_reverse(g in reduced_graph(), e in 0usize..5, n in 1usize..8) {
        prop_assume!(e < g.num_edges());
        let trace = strings::iterate_syzygy(g, e, n).unwrap();
        for k in 0..n {
            let sigma = trace.omega(k);
            let direct = strings::syzygy(g, &sigma).unwrap();
            let mirrored = strings::syzygy(g, &sigma.reverse()).unwrap();
            if sigma.reverse() == sigma {
                prop_assert!(mirrored.same_module(&direct));
            } else {
                prop_assert_eq!(mirrored, direct.reverse());
            }
        }
    }

    #[test]
    fn endpoint_swap_keeps_invariants(g in reduced_graph(), e in 0usize..5) {
        prop_assume!(e < g.num_edges());
        let h = swapped(g, e);
        let cap = strings::default_period_cap(g);
        for s in 0..g.num_edges() {
            prop_assert_eq!(strings::period(g, s, cap).unwrap(), strings::period(&h, s, cap).unwrap());
            let (a, b) = (strings::iterate_syzygy(g, s, 5).unwrap(), strings::iterate_syzygy(&h, s, 5).unwrap());
            for k in 1..=5 {
                let (x, y) = (a.omega(k), b.omega(k));
                prop_assert_eq!(strings::dimension(g, &x).unwrap(), strings::dimension(&h, &y).unwrap());
                let (mut tx, mut ty) = (x.top(), y.top());
                tx.sort();
                ty.sort();
                prop_assert_eq!(tx, ty);
            }
        }
    }

    #[test]
    fn oracle_is_field_independent(g in any_graph(), p in prop::sample::select(vec![5u64, 7, 11])) {
        let pres = Presentation::new(g);
        let q = build_algebra(g, &pres, FieldKind::Rational).unwrap();
        let f = build_algebra(g, &pres, FieldKind::Prime(p)).unwrap();
        prop_assert_eq!(q.dim(), f.dim());
        for v in 0..g.num_edges() {
            let (a, b) = (min_resolution(&q, v, 3, false).unwrap(), min_resolution(&f, v, 3, false).unwrap());
            for n in 0..=3 {
                prop_assert_eq!(a.vertices(n), b.vertices(n));
            }
        }
    }

    #[test]
    fn explicit_resolutions_are_minimal(g in any_graph(), e in 0usize..4) {
        prop_assume!(e < g.num_edges());
        if let Ok(steps) = resolve_any(g, e, 5) {
            for step in &steps[1..] {
                prop_assert!(step.entries.iter().all(|x| !x.path.is_empty()));
            }
            if g.is_reduced() && !g.has_truncated_edge() {
                for n in 0..=5 {
                    let total: usize = (0..g.num_edges()).map(|t| ext_dim(g, e, t, n).unwrap()).sum();
                    prop_assert_eq!(total, n + 1);
                }
            }
        }
    }
}

#[test]
fn loops_keep_two_half_edges() {
    let g = brauer::samples::single_loop(1);
    let (a, b) = (HalfEdge::new(0, 0), HalfEdge::new(0, 1));
    assert_eq!(g.vertex_of(a), g.vertex_of(b));
    assert_eq!(g.successor_sequence_from(a).len(), 2);
    assert!(g.successor(0, 0).is_err());
}

#[test]
fn simple_reverses_to_itself() {
    let s = StringDescriptor::simple(0);
    assert_eq!(s.reverse(), s);
}
