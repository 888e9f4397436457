//! Property tests for the symbol calculus, operators and disk geometry.

use bergman_lab::berezin::berezin_series;
use bergman_lab::disk::mobius_eval;
use bergman_lab::operator::toeplitz_exact;
use bergman_lab::suite::classification_is_consistent;
use bergman_lab::symbol::{classify_harmonic_product, HarmonicProduct};
use bergman_lab::{Complex64, DiskPoint, MonomialSymbol, TruncatedOperator};
use nalgebra::DMatrix;
use proptest::prelude::*;

// Gaussian-integer coefficients keep the algebra exact.
fn gaussian() -> impl Strategy<Value = Complex64> {
    (-4i32..=4, -4i32..=4).prop_map(|(re, im)| Complex64::new(re as f64, im as f64))
}

fn symbol(max_degree: u32) -> impl Strategy<Value = MonomialSymbol> {
    prop::collection::vec((0..=max_degree, 0..=max_degree, gaussian()), 0..6).prop_map(|terms| {
        MonomialSymbol::from_terms(terms.into_iter().map(|(j, k, c)| ((j, k), c)))
    })
}

fn analytic(max_degree: u32) -> impl Strategy<Value = MonomialSymbol> {
    prop::collection::vec(gaussian(), 1..=max_degree as usize + 1).prop_map(|coeffs| {
        MonomialSymbol::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(j, c)| ((j as u32, 0), c)),
        )
    })
}

fn harmonic(max_degree: u32) -> impl Strategy<Value = MonomialSymbol> {
    (analytic(max_degree), analytic(max_degree)).prop_map(|(f, g)| &f + &g.conjugate())
}

fn point(max_radius: f64) -> impl Strategy<Value = DiskPoint> {
    (0.0..max_radius, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, t)| DiskPoint::from_polar(r, t).unwrap())
}

fn unit() -> impl Strategy<Value = Complex64> {
    prop_oneof![
        Just(Complex64::new(1.0, 0.0)),
        Just(Complex64::new(0.0, 1.0)),
        Just(Complex64::new(2.0, 0.0)),
        Just(Complex64::new(1.0, -1.0)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn leibniz_rule(u in symbol(4), v in symbol(4)) {
        let uv = u.multiply(&v);
        prop_assert_eq!(uv.dz(), &(&u.dz() * &v) + &(&u * &v.dz()));
        prop_assert_eq!(uv.dzbar(), &(&u.dzbar() * &v) + &(&u * &v.dzbar()));
    }

    #[test]
    fn derivatives_are_linear(u in symbol(4), v in symbol(4), a in gaussian()) {
        let combo = &u.scale(a) + &v;
        prop_assert_eq!(combo.dz(), &u.dz().scale(a) + &v.dz());
        prop_assert_eq!(combo.laplacian(), &u.laplacian().scale(a) + &v.laplacian());
    }

    #[test]
    fn laplacian_of_product(u in symbol(4), v in symbol(4)) {
        // Delta(uv) = u Delta v + v Delta u + 4 (du/dz dv/dzbar + du/dzbar dv/dz)
        let cross = &(&u.dz() * &v.dzbar()) + &(&u.dzbar() * &v.dz());
        let rhs = &(&(&u * &v.laplacian()) + &(&v * &u.laplacian())) + &cross.scale(4.0);
        prop_assert_eq!(u.multiply(&v).laplacian(), rhs);
    }

    #[test]
    fn symbol_text_round_trips(u in symbol(6)) {
        let back: MonomialSymbol = u.to_string().parse().unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn conjugation_is_an_involution(u in symbol(5), z in point(0.95)) {
        prop_assert_eq!(u.conjugate().conjugate(), u.clone());
        prop_assert!((u.conjugate().eval(z) - u.eval(z).conj()).norm() <= 1e-12 * (1.0 + u.eval(z).norm()));
    }

    #[test]
    fn matrix_json_round_trips(dim in 1usize..6, seed in prop::collection::vec(-1e3f64..1e3, 72)) {
        let m = DMatrix::from_fn(dim, dim, |q, p| Complex64::new(seed[2 * (q * 6 + p)], seed[2 * (q * 6 + p) + 1]));
        let op = TruncatedOperator::from_matrix(m).unwrap();
        let back = TruncatedOperator::from_json(&op.to_json().unwrap()).unwrap();
        prop_assert_eq!(back, op);
    }

    #[test]
    fn classifier_matches_exact_laplacian(u in harmonic(3), v in harmonic(3)) {
        let class = classify_harmonic_product(&u, &v).unwrap();
        prop_assert!(classification_is_consistent(&u, &v, class), "{} / {} -> {:?}", u, v, class);
    }

    #[test]
    fn mixed_pairs_are_harmonic(f in analytic(3), g in analytic(3), alpha in unit(), beta in unit()) {
        // alpha u + beta v = f and alpha u - beta v = conj(g)
        let u = (&f + &g.conjugate()).scale(0.5 / alpha);
        let v = (&f - &g.conjugate()).scale(0.5 / beta);
        let class = classify_harmonic_product(&u, &v).unwrap();
        prop_assert!(class != HarmonicProduct::NotHarmonic);
        prop_assert!(classification_is_consistent(&u, &v, class), "{} / {} -> {:?}", u, v, class);
    }

    #[test]
    fn mobius_defect_identity(z in point(0.95), w in point(0.95)) {
        let lhs = mobius_eval(z, w).defect();
        let one = Complex64::new(1.0, 0.0);
        let rhs = z.defect() * w.defect() / (one - z.value().conj() * w.value()).norm_sqr();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-3));
    }

    #[test]
    fn mobius_map_is_an_involution(z in point(0.9), w in point(0.9)) {
        let back = mobius_eval(z, mobius_eval(z, w));
        prop_assert!((back.value() - w.value()).norm() <= 1e-12);
    }

    #[test]
    fn berezin_and_toeplitz_are_linear(u in symbol(3), v in symbol(3), a in gaussian(), z in point(0.8)) {
        let combo = &u.scale(a) + &v;
        let lhs = berezin_series(&combo, z, 1e-15);
        let rhs = berezin_series(&u, z, 1e-15) * a + berezin_series(&v, z, 1e-15);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));
        let t = toeplitz_exact(&combo, 12).unwrap();
        let split = toeplitz_exact(&u, 12).unwrap().scale(a).try_add(&toeplitz_exact(&v, 12).unwrap()).unwrap();
        prop_assert!(t.max_abs_diff_leading(&split, 12) <= 1e-12);
    }
}
