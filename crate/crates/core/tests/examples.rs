#[allow(dead_code)]
mod loop_and_arrow {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/loop_and_arrow.rs"));
}

#[allow(dead_code)]
mod chart_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/chart_polynomials.rs"));
}

#[allow(dead_code)]
mod oracle_points {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/oracle_points.rs"));
}

#[allow(dead_code)]
mod moduli_checks {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/moduli_checks.rs"));
}

#[allow(dead_code)]
mod cross_validation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cross_validation.rs"));
}

#[allow(dead_code)]
mod problem_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/problem_files.rs"));
}

#[allow(dead_code)]
mod non_squarefree_top {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/non_squarefree_top.rs"));
}

#[test]
fn loop_and_arrow_runs() {
    loop_and_arrow::run_example().expect("loop and arrow example should run");
}

#[test]
fn chart_polynomials_runs() {
    chart_polynomials::run_example().expect("chart example should run");
}

#[test]
fn oracle_points_runs() {
    oracle_points::run_example().expect("oracle example should run");
}

#[test]
fn moduli_checks_runs() {
    moduli_checks::run_example().expect("moduli example should run");
}

#[test]
fn cross_validation_runs() {
    cross_validation::run_example().expect("cross-validation example should run");
}

#[test]
fn problem_files_runs() {
    problem_files::run_example().expect("problem file example should run");
}

#[test]
fn non_squarefree_top_runs() {
    non_squarefree_top::run_example().expect("non-squarefree example should run");
}
