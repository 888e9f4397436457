// Recovering a small matrix from samples of its Berezin transform.

use bergman_lab::berezin::{berezin_operator, recover_from_berezin, recovery_grid};
use bergman_lab::suite::sampling;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = sampling::rng(11);
    let s = sampling::unit_frobenius_matrix(&mut rng, 8);
    let samples: Vec<_> = recovery_grid(12, 32)
        .into_iter()
        .map(|z| (z, berezin_operator(&s, z)))
        .collect();
    let fit = recover_from_berezin(&samples, 8)?;
    println!(
        "{} samples, max entry error {:.2e}",
        samples.len(),
        fit.max_abs_diff_leading(&s, 8)
    );
    Ok(())
}

fn main() {
    run_example().expect("injectivity example failed");
}
