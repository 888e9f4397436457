// Disk points, Moebius maps and the Bergman kernel.

use bergman_lab::disk::{bergman_kernel, mobius_deriv, mobius_eval, normalized_kernel};
use bergman_lab::{Complex64, DiskPoint, DiskQuadrature};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z = DiskPoint::from_re_im(0.5, 0.2)?;
    let w = DiskPoint::from_polar(0.7, 2.0)?;

    let image = mobius_eval(z, w);
    let back = mobius_eval(z, image);
    println!("phi_z(w) = {image}, phi_z(phi_z(w)) = {back}");
    assert!((back.value() - w.value()).norm() < 1e-14);

    // 1 - |phi_z(w)|^2 = (1 - |z|^2)(1 - |w|^2) / |1 - conj(z) w|^2
    let lhs = image.defect();
    let rhs = z.defect() * w.defect()
        / (Complex64::new(1.0, 0.0) - z.value().conj() * w.value()).norm_sqr();
    println!("defect identity: {lhs:.15} vs {rhs:.15}");
    println!("phi_z'(z) = {}", mobius_deriv(z, z));

    println!("K_z(w) = {}", bergman_kernel(z, w));
    let rule = DiskQuadrature::default_rule();
    let mass = rule.integrate(|p| normalized_kernel(z, p).norm_sqr().into());
    println!("||k_z||^2 by quadrature = {:.15}", mass.re);

    // <f, K_z> = f(z) for f(w) = w^3
    let reproduced = rule.integrate(|p| p.value().powu(3) * bergman_kernel(z, p).conj());
    println!("<w^3, K_z> = {reproduced}, z^3 = {}", z.value().powu(3));

    assert!(DiskPoint::from_re_im(1.0, 0.0).is_err());
    Ok(())
}

fn main() {
    run_example().expect("kernels example failed");
}
