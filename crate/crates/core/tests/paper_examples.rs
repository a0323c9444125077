use qgrass::catalogue::{self, CatalogueEntry};
use qgrass::chart::chart_ideal;
use qgrass::moduli::{check_corollary_4_5, cover_over_prime, finite_local_type_check, Provenance};
use qgrass::oracle::{cross_validate_chart, orbit_size_consistency, solve_chart, OracleScene, DEFAULT_BUDGET};
use qgrass::skeleton::{enumerate_skeletons, Skeleton};
use qgrass::{AlgebraPresentation, Field, Path, Quiver};

fn path(entry: &CatalogueEntry, arrows: &[&str]) -> Path {
    let q = entry.algebra.quiver();
    let idx: Vec<usize> = arrows.iter().rev().map(|a| q.arrow_by_name(a).unwrap()).collect();
    q.path_from_arrows(0, &idx).unwrap()
}

fn two_loop_skeleton(e: &CatalogueEntry, algebra: &AlgebraPresentation) -> Skeleton {
    let paths = vec![path(e, &[]), path(e, &["w1"]), path(e, &["a1", "w1"]), path(e, &["a2"])];
    Skeleton::new(algebra, &e.top, paths).unwrap()
}

#[test]
fn two_loop_chart_over_f3() {
    let e = catalogue::two_loops_two_arrows();
    let cover = cover_over_prime(&e.algebra, &e.top, 3).unwrap();
    let sigma = two_loop_skeleton(&e, cover.algebra());
    let ideal = chart_ideal(&cover, &sigma).unwrap();
    assert_eq!(ideal.num_variables(), 4);
    // X1*X4 = 1 leaves two choices for X1 and three each for X2, X3
    assert_eq!(solve_chart(&ideal, DEFAULT_BUDGET).unwrap().len(), 18);
    let scene = OracleScene::new(cover, 4, DEFAULT_BUDGET).unwrap();
    let report = cross_validate_chart(&scene, &sigma, DEFAULT_BUDGET).unwrap();
    assert!(report.is_ok(), "{:?}", report.mismatches);
    assert_eq!(report.oracle_points, 18);
}

#[test]
fn loop_and_arrow_has_a_one_point_chart() {
    let e = catalogue::loop_and_arrow();
    for q in [2, 3, 5] {
        let cover = cover_over_prime(&e.algebra, &e.top, q).unwrap();
        let sigma = Skeleton::new(cover.algebra(), &e.top, vec![path(&e, &[]), path(&e, &["w"]), path(&e, &["a"])]).unwrap();
        let ideal = chart_ideal(&cover, &sigma).unwrap();
        assert_eq!(solve_chart(&ideal, DEFAULT_BUDGET).unwrap().len(), 1);
        let scene = OracleScene::new(cover, 3, DEFAULT_BUDGET).unwrap();
        let report = cross_validate_chart(&scene, &sigma, DEFAULT_BUDGET).unwrap();
        assert!(report.is_ok());
        assert_eq!(report.oracle_points, 1);
    }
}

#[test]
fn orbit_sizes_match_dimensions() {
    let e = catalogue::loop_and_arrow();
    let cover = cover_over_prime(&e.algebra, &e.top, 3).unwrap();
    for d in 1..=cover.dim() {
        let scene = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET).unwrap();
        let report = orbit_size_consistency(&scene, DEFAULT_BUDGET).unwrap();
        assert!(report.mismatches.is_empty(), "d = {d}: {:?}", report.mismatches);
    }
    let e = catalogue::truncated_loop(2);
    let cover = cover_over_prime(&e.algebra, &e.top, 2).unwrap();
    let scene = OracleScene::new(cover, 4, DEFAULT_BUDGET).unwrap();
    let report = orbit_size_consistency(&scene, DEFAULT_BUDGET).unwrap();
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    assert_eq!(report.entries.len(), 8);
}

#[test]
fn full_dimension_is_a_single_point() {
    for e in catalogue::catalogue() {
        let cover = cover_over_prime(&e.algebra, &e.top, 2).unwrap();
        let d = cover.dim();
        let scene = OracleScene::new(cover.clone(), d, DEFAULT_BUDGET).unwrap();
        assert_eq!(scene.len(), 1, "{}", e.name);
        assert_eq!(scene.points()[0].dim(), 0);
        for sigma in enumerate_skeletons(&cover, d, true).unwrap() {
            let ideal = chart_ideal(&cover, &sigma).unwrap();
            assert_eq!(solve_chart(&ideal, DEFAULT_BUDGET).unwrap().len(), 1, "{}", e.name);
        }
    }
}

#[test]
fn semisimple_algebra_has_finite_local_type() {
    let q = Quiver::new(["1", "2"], Vec::<(&str, &str, &str)>::new()).unwrap();
    let algebra = std::sync::Arc::new(AlgebraPresentation::build(q, vec![], 1, Field::Rational).unwrap());
    let report = finite_local_type_check(&algebra, 0, 2, DEFAULT_BUDGET).unwrap();
    assert!(report.verdict);
    let cor = check_corollary_4_5(&algebra, 0, 2, DEFAULT_BUDGET).unwrap();
    assert!(cor.holds);
    assert_eq!(cor.provenance, Provenance::Symbolic);
}

#[test]
fn truncated_loop_corollary_fails_with_a_witness() {
    let e = catalogue::truncated_loop(2);
    let cor = check_corollary_4_5(&e.algebra, 0, 2, DEFAULT_BUDGET).unwrap();
    assert!(!cor.holds);
    assert_eq!(cor.provenance, Provenance::FiniteField(2));
    assert!(cor.witness.is_some());
    let local = finite_local_type_check(&e.algebra, 0, 2, DEFAULT_BUDGET).unwrap();
    assert!(local.verdict);
}
