use brauer::presentation::Presentation;
use brauer::resolution::resolve_any;
use brauer::samples;
use brauer::verify::{verify, Fault, VerifyOptions};

fn opts(max: usize, fault: Fault) -> VerifyOptions {
    VerifyOptions { max_degree: max, faults: vec![fault], ..Default::default() }
}

#[test]
fn every_sign_flip_is_caught() {
    let max = 3;
    for g in [samples::triangle(1), samples::triangle(2), samples::cycle(&[1, 1, 1, 1])] {
        for e in 0..g.num_edges() {
            let steps = resolve_any(&g, e, max).unwrap();
            for step in &steps[1..] {
                for x in &step.entries {
                    let fault = Fault::FlipSign { edge: e, degree: step.degree, row: x.row, col: x.col };
                    assert!(!verify(&g, &opts(max, fault)).ok(), "{fault:?} went unnoticed");
                }
            }
        }
    }
}

#[test]
fn every_dropped_relation_is_caught() {
    for g in [samples::triangle(1), samples::path(&[1, 1, 1, 1]), samples::star(3, 2), samples::single_loop(2)] {
        let p = Presentation::new(&g);
        for k in 0..p.minimal.len() {
            assert!(!verify(&g, &opts(2, Fault::DropRelation(k))).ok(), "dropping relation {k} went unnoticed");
        }
    }
}
