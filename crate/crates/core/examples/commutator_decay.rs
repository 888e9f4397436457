// Boundary decay of (1 - |z|^2)^2 |f'g'| and of the Berezin transform of
// T_{conj f} T_g - T_g T_{conj f}, for a polynomial and for a Blaschke product.

use bergman_lab::berezin::{
    commutator_compactness_indicator, dyadic_schedule, ApproachPath, BerezinConfig,
};
use bergman_lab::symbol::{AnalyticSymbol, BlaschkeProduct};
use bergman_lab::MonomialSymbol;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = BerezinConfig::default();
    let schedule = dyadic_schedule(10);
    let path = ApproachPath::radial(0.0);

    let w = AnalyticSymbol::polynomial(MonomialSymbol::z())?;
    let report = commutator_compactness_indicator(&w, &w, path, &schedule, &config)?;
    println!("f = g = w: verdict {}", report.verdict);
    for (d, s) in report
        .derivative_profile()
        .samples
        .iter()
        .zip(&report.defect_profile().samples)
    {
        println!(
            "  r = {:.6}  (1-r^2)^2|f'g'| = {:.3e}  |defect~| = {:.3e} [{}]",
            d.t, d.value.re, s.value.re, s.flag
        );
    }

    let b: AnalyticSymbol = BlaschkeProduct::dyadic(8).into();
    let report = commutator_compactness_indicator(&b, &b, path, &schedule, &config)?;
    println!("Blaschke product with zeros 1 - 2^-k, k <= 8:");
    for s in &report.zero_profile {
        println!("  at zero {:.6}: {:.6e}", s.zero.re, s.value);
    }
    println!(
        "  floor {:.6e}, verdict at r = {:.6}: {}",
        report.zero_floor().unwrap_or(0.0),
        schedule[9],
        report.verdict
    );

    let cone = ApproachPath::nontangential(0.0, 0.6)?;
    let report = commutator_compactness_indicator(&w, &w, cone, &schedule[2..], &config)?;
    print!(
        "nontangential path, f = g = w:\n{}",
        report.derivative_profile().to_csv()
    );
    Ok(())
}

fn main() {
    run_example().expect("commutator example failed");
}
