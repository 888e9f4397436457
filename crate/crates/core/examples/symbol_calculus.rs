// Polynomial symbols, Wirtinger calculus, Blaschke products and the
// harmonic-product classifier.

use bergman_lab::symbol::{classify_harmonic_product, BlaschkeProduct, HarmonicProduct};
use bergman_lab::{DiskPoint, MonomialSymbol};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let u: MonomialSymbol = "1,0:1;0,1:1".parse()?; // w + conj(w)
    let v: MonomialSymbol = "1,0:i;0,1:-i".parse()?; // i w - i conj(w)
    let uv = u.multiply(&v);
    println!("u = {u}\nv = {v}\nuv = {uv}");
    println!("d/dz uv = {}, d/dzbar uv = {}", uv.dz(), uv.dzbar());
    println!(
        "Delta uv = {}  harmonic: {}",
        uv.laplacian(),
        uv.is_harmonic()
    );

    match classify_harmonic_product(&u, &v)? {
        HarmonicProduct::Mixed { alpha, beta } => {
            println!("mixed pair with alpha = {alpha}, beta = {beta}")
        }
        other => println!("{other:?}"),
    }
    let w = MonomialSymbol::z();
    println!(
        "w * conj(w): {:?}",
        classify_harmonic_product(&w, &w.conjugate())?
    );

    let b = BlaschkeProduct::dyadic(3);
    let a = b.zeros()[1];
    println!("B(a) = {}, B'(a) = {}", b.eval(a), b.deriv(a));
    println!("first Taylor coefficients: {:?}", b.taylor(4));

    let z = DiskPoint::from_re_im(0.1, -0.4)?;
    println!(
        "uv(z) = {} = u(z) v(z) = {}",
        uv.eval(z),
        u.eval(z) * v.eval(z)
    );
    Ok(())
}

fn main() {
    run_example().expect("symbol example failed");
}
