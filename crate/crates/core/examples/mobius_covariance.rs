// Moebius covariance of Toeplitz operators and of the Berezin transform,
// and how far the truncated unitary can be trusted.

use bergman_lab::berezin::{
    berezin_series, covariance_field_check, invariant_laplacian, mobius_moment, BerezinConfig,
};
use bergman_lab::operator::{
    covariant_toeplitz, reliable_block, toeplitz_exact, toeplitz_quadrature,
};
use bergman_lab::{DiskPoint, DiskQuadrature, MonomialSymbol};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = DiskPoint::from_re_im(0.5, 0.0)?;
    let u = MonomialSymbol::abs_sq();
    for n in [32, 64, 128] {
        let moved = covariant_toeplitz(&u, z, n)?;
        let rule = DiskQuadrature::new(n + 8, 4 * n)?;
        let reference = toeplitz_quadrature(|w| u.eval_composed(z, w), n, &rule)?;
        let block = reliable_block(z, n, 1e-8);
        println!(
            "N = {n:3}: reliable block {block:2}, residual there {:.1e}, leading 8 {:.1e}, leading N/2 {:.2}",
            moved.max_abs_diff_leading(&reference, block),
            moved.max_abs_diff_leading(&reference, 8),
            moved.max_abs_diff_leading(&reference, n / 2)
        );
    }

    let s = toeplitz_exact(&u, 64)?;
    let check = covariance_field_check(
        &s,
        DiskPoint::from_re_im(0.3, 0.0)?,
        DiskPoint::from_re_im(0.3, 0.0)?,
        &BerezinConfig::default(),
    )?;
    println!("covariance of S~: {check:?}");

    let rule = DiskQuadrature::default_rule();
    let v: MonomialSymbol = "2,1:1;0,2:0.5".parse()?;
    let p = DiskPoint::from_re_im(-0.3, 0.4)?;
    let moment = mobius_moment(&v, p, &rule) * 8.0;
    let direct = invariant_laplacian(
        &|q: DiskPoint| berezin_series(&v, q, 1e-15),
        p,
        Default::default(),
    )?;
    println!("8 int (v o phi_z)(2|w|^2 - 1) = {moment:.8}, (1-|z|^2)^2 Delta v~ = {direct:.8}");
    Ok(())
}

fn main() {
    run_example().expect("covariance example failed");
}
