use brauer::census::census;
use brauer::classify::koszul_report;
use brauer::oracle::compare::check_algebra;
use brauer::oracle::resolve::min_resolution;
use brauer::oracle::{build_algebra, FieldKind};
use brauer::Presentation;

#[test]
fn census_algebras_are_selfinjective_and_associative() {
    for g in census(3, 2) {
        let alg = build_algebra(&g, &Presentation::new(&g), FieldKind::Rational).unwrap();
        let report = check_algebra(&g, &alg, g.is_length_graded());
        assert!(report.is_empty(), "{:?} for {}", report.diffs, g.to_data().to_json());
    }
}

#[test]
fn koszul_verdicts_give_linear_resolutions() {
    let mut koszul = 0;
    for g in census(3, 2) {
        if !koszul_report(&g, FieldKind::Rational).is_koszul() {
            continue;
        }
        koszul += 1;
        let alg = build_algebra(&g, &Presentation::new(&g), FieldKind::Rational).unwrap();
        for v in 0..g.num_edges() {
            let res = min_resolution(&alg, v, 5, true).unwrap();
            for n in 0..=5 {
                assert!(res.degrees(n).iter().all(|&d| d == n as i64), "degree {n} at e{} in {}", v + 1, g.to_data().to_json());
            }
        }
    }
    assert!(koszul > 0);
}
