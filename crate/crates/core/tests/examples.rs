//! Every cargo example runs to completion.

#[allow(dead_code)]
mod generate_families {
    include!("../examples/generate_families.rs");
}
#[allow(dead_code)]
mod curling_numbers {
    include!("../examples/curling_numbers.rs");
}
#[allow(dead_code)]
mod chromatic_colouring {
    include!("../examples/chromatic_colouring.rs");
}
#[allow(dead_code)]
mod oracle_crosscheck {
    include!("../examples/oracle_crosscheck.rs");
}
#[allow(dead_code)]
mod verify_sweep {
    include!("../examples/verify_sweep.rs");
}
#[allow(dead_code)]
mod figure_witnesses {
    include!("../examples/figure_witnesses.rs");
}

#[test]
fn generate_families_runs() {
    generate_families::run_example(5).unwrap();
}

#[test]
fn curling_numbers_runs() {
    curling_numbers::run_example().unwrap();
}

#[test]
fn chromatic_colouring_runs() {
    chromatic_colouring::run_example().unwrap();
}

#[test]
fn oracle_crosscheck_finds_no_disagreement() {
    assert_eq!(oracle_crosscheck::run_example(100).unwrap(), 0);
}

#[test]
fn verify_sweep_runs() {
    verify_sweep::run_example().unwrap();
}

#[test]
fn figure_witnesses_runs() {
    figure_witnesses::run_example().unwrap();
}
