//! Every example under examples/ must run to completion.

#[allow(dead_code)]
mod kernels_and_mobius {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/kernels_and_mobius.rs"
    ));
}

#[test]
fn kernels_and_mobius_runs() {
    kernels_and_mobius::run_example().expect("kernels_and_mobius should run");
}

#[allow(dead_code)]
mod symbol_calculus {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/symbol_calculus.rs"
    ));
}

#[test]
fn symbol_calculus_runs() {
    symbol_calculus::run_example().expect("symbol_calculus should run");
}

#[allow(dead_code)]
mod toeplitz_truncation {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/toeplitz_truncation.rs"
    ));
}

#[test]
fn toeplitz_truncation_runs() {
    toeplitz_truncation::run_example().expect("toeplitz_truncation should run");
}

#[allow(dead_code)]
mod berezin_routes {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/berezin_routes.rs"
    ));
}

#[test]
fn berezin_routes_runs() {
    berezin_routes::run_example().expect("berezin_routes should run");
}

#[allow(dead_code)]
mod mobius_covariance {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/mobius_covariance.rs"
    ));
}

#[test]
fn mobius_covariance_runs() {
    mobius_covariance::run_example().expect("mobius_covariance should run");
}

#[allow(dead_code)]
mod commutator_decay {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/commutator_decay.rs"
    ));
}

#[test]
fn commutator_decay_runs() {
    commutator_decay::run_example().expect("commutator_decay should run");
}

#[allow(dead_code)]
mod identity_suite {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/identity_suite.rs"
    ));
}

#[test]
fn identity_suite_runs() {
    identity_suite::run_example().expect("identity_suite should run");
}

#[allow(dead_code)]
mod berezin_injectivity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/berezin_injectivity.rs"
    ));
}

#[test]
fn berezin_injectivity_runs() {
    berezin_injectivity::run_example().expect("berezin_injectivity should run");
}
