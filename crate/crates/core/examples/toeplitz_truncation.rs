// Truncated Toeplitz matrices, the semicommutator defect and the
// truncated Moebius unitary.

use bergman_lab::operator::{
    reliable_block, semicommutator_defect, toeplitz_exact, toeplitz_quadrature, unitary_uz,
    TruncatedOperator,
};
use bergman_lab::{DiskPoint, DiskQuadrature, MonomialSymbol};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let u: MonomialSymbol = "1,1:1;2,0:0.5i".parse()?;
    let exact = toeplitz_exact(&u, 16)?;
    let quad = toeplitz_quadrature(|w| u.eval(w), 16, &DiskQuadrature::default_rule())?;
    println!(
        "exact vs quadrature entries: {:.3e}",
        exact.max_abs_diff_leading(&quad, 16)
    );
    println!("<T_u e_1, e_1> = {}", exact.entry(1, 1));

    let d = semicommutator_defect(&MonomialSymbol::zbar(), &MonomialSymbol::z(), 8)?;
    println!("2T_|w|^2 - T_w T_conj(w) - T_conj(w) T_w diagonal:");
    for p in 0..6 {
        println!("  {p}: {:.6}", d.entry(p, p).re);
    }

    let json = exact.leading_block(3)?.to_json()?;
    let back = TruncatedOperator::from_json(&json)?;
    println!(
        "JSON round trip ok: {}",
        back.max_abs_diff_leading(&exact, 3) == 0.0
    );

    for r in [0.0, 0.3, 0.5, 0.7] {
        let z = DiskPoint::from_re_im(r, 0.0)?;
        let uz = unitary_uz(z, 64)?;
        let block = reliable_block(z, 64, 1e-8);
        let sq = uz.try_mul(&uz)?;
        let id = TruncatedOperator::identity(64)?;
        println!(
            "|z| = {r}: reliable block {block:2}, U^2 - I on it {:.1e}, on the leading 32 {:.2}",
            sq.max_abs_diff_leading(&id, block),
            sq.max_abs_diff_leading(&id, 32)
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("toeplitz example failed");
}
