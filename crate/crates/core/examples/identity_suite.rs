// Runs a selection of the seeded identity batteries and prints the table.

use bergman_lab::suite::{run_suite, SuiteConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = SuiteConfig::default();
    let only: Vec<String> = [
        "route-agreement",
        "semicommutator",
        "harmonic-product",
        "injectivity",
    ]
    .map(String::from)
    .to_vec();
    let report = run_suite(&config, &only)?;
    print!("{}", report.to_csv());
    for r in &report.results {
        println!("{}: {}", r.name, r.property);
    }
    if !report.all_passed() {
        return Err("an identity battery failed".into());
    }
    Ok(())
}

fn main() {
    run_example().expect("identity suite example failed");
}
