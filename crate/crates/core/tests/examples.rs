#[path = "../examples/acceptance_suite.rs"]
mod acceptance_suite;
#[path = "../examples/c2_ideal.rs"]
mod c2_ideal;
#[path = "../examples/character_identities.rs"]
mod character_identities;
#[path = "../examples/exact_arithmetic.rs"]
mod exact_arithmetic;
#[path = "../examples/fock_ope.rs"]
mod fock_ope;
#[path = "../examples/lattice_weights.rs"]
mod lattice_weights;
#[path = "../examples/omega_window.rs"]
mod omega_window;
#[path = "../examples/quantum_relations.rs"]
mod quantum_relations;
#[path = "../examples/screening_kernel.rs"]
mod screening_kernel;
#[path = "../examples/wakimoto_realization.rs"]
mod wakimoto_realization;

#[test]
fn every_example_runs() {
    exact_arithmetic::run_example().unwrap();
    lattice_weights::run_example().unwrap();
    fock_ope::run_example().unwrap();
    wakimoto_realization::run_example().unwrap();
    screening_kernel::run_example().unwrap();
    omega_window::run_example().unwrap();
    character_identities::run_example().unwrap();
    c2_ideal::run_example().unwrap();
    quantum_relations::run_example().unwrap();
}

#[test]
fn acceptance_example_runs() {
    acceptance_suite::run_example().unwrap();
}
