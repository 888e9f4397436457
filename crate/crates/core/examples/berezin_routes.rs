// Three routes to the Berezin transform, the reliable radius, and the
// Laplacian at the origin.

use bergman_lab::berezin::{
    berezin_operator, berezin_quadrature, berezin_series, laplacian_berezin_at_zero_operator,
    laplacian_berezin_at_zero_symbol, laplacian_fd, localization_norm, mean_value_transform,
    reliable_radius, FdPolicy,
};
use bergman_lab::operator::toeplitz_exact;
use bergman_lab::{DiskPoint, DiskQuadrature, MonomialSymbol};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rule = DiskQuadrature::default_rule();
    let u = MonomialSymbol::abs_sq();
    let op = toeplitz_exact(&u, 64)?;
    println!(
        "reliable radius at N = 64: {:.4}",
        reliable_radius(64, 1e-10)
    );

    for r in [0.0, 0.5, 0.7] {
        let z = DiskPoint::from_re_im(r, 0.0)?;
        let series = berezin_series(&u, z, 1e-15);
        let quad = berezin_quadrature(|w| u.eval(w), z, &rule);
        let matrix = berezin_operator(&op, z);
        println!(
            "|w|^2 at z = {r}: series {:.12} quadrature {:.12} matrix {:.12} mean-value {:.12}",
            series.re,
            quad.value.re,
            matrix.re,
            mean_value_transform(&u, z, &rule).re
        );
    }

    let h: MonomialSymbol = "0,0:1;3,0:2;0,2:-i".parse()?;
    let z = DiskPoint::from_re_im(0.2, 0.6)?;
    println!(
        "harmonic symbol: u~(z) - u(z) = {:.2e}",
        (berezin_series(&h, z, 1e-15) - h.eval(z)).norm()
    );

    let fd = laplacian_fd(
        &|p: DiskPoint| berezin_operator(&op, p),
        DiskPoint::ORIGIN,
        FdPolicy::default(),
    )?;
    println!(
        "Laplacian of (|w|^2)~ at 0: matrix {:.10} symbol {:.10} finite differences {:.8}",
        laplacian_berezin_at_zero_operator(&op)?.re,
        laplacian_berezin_at_zero_symbol(&u).re,
        fd.re
    );

    for r in [0.5, 0.9, 0.99] {
        let z = DiskPoint::from_re_im(r, 0.0)?;
        println!(
            "||(w - z) k_z|| at r = {r}: {:.6}",
            localization_norm(&MonomialSymbol::z(), z, 1e-15)
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("berezin example failed");
}
