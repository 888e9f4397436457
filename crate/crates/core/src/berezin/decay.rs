use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    berezin_conj_product, berezin_operator, conj_product_converges, is_reliable, reliable_radius,
    BerezinConfig, Field, SampleFlag,
};
use crate::disk::DiskPoint;
use crate::error::{Error, Result};
use crate::operator::analytic_semicommutator_defect;
use crate::report::{format_float, to_json_string};
use crate::symbol::AnalyticSymbol;

/// Taylor tolerance for the exact analytic routes.
const TAYLOR_TOL: f64 = 1e-16;

/// A concrete path toward the boundary point `e^{i theta}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ApproachPath {
    /// `z(t) = t e^{i theta}`.
    Radial { theta: f64 },
    /// `z(t) = e^{i theta} (1 - (1 - t) e^{i aperture})`, a segment meeting the
    /// radius at angle `aperture` in `[0, pi/2)`.
    Nontangential { theta: f64, aperture: f64 },
}

impl ApproachPath {
    pub fn radial(theta: f64) -> Self {
        Self::Radial { theta }
    }

    pub fn nontangential(theta: f64, aperture: f64) -> Result<Self> {
        if !(0.0..FRAC_PI_2).contains(&aperture) {
            return Err(Error::Config(format!(
                "aperture must lie in [0, pi/2), got {aperture}"
            )));
        }
        Ok(Self::Nontangential { theta, aperture })
    }

    pub fn theta(&self) -> f64 {
        match *self {
            Self::Radial { theta } | Self::Nontangential { theta, .. } => theta,
        }
    }

    pub fn point(&self, t: f64) -> Result<DiskPoint> {
        match *self {
            Self::Radial { theta } => DiskPoint::from_polar(t, theta),
            Self::Nontangential { theta, aperture } => {
                let s = 1.0 - t;
                let along = Complex64::new(1.0, 0.0) - Complex64::from_polar(s, aperture);
                DiskPoint::new(Complex64::from_polar(1.0, theta) * along)
            }
        }
    }

    /// Checks that the schedule is increasing in `(0, 1)` and that `|z(t)|` increases with it.
    pub fn validate(&self, schedule: &[f64]) -> Result<()> {
        if schedule.is_empty() {
            return Err(Error::Config("empty radius schedule".into()));
        }
        if schedule.iter().any(|&t| !(t > 0.0 && t < 1.0)) {
            return Err(Error::Config("radius schedule must lie in (0, 1)".into()));
        }
        if schedule.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config(
                "radius schedule must be strictly increasing".into(),
            ));
        }
        if let Self::Nontangential { aperture, .. } = *self {
            if let Some(&t) = schedule.iter().find(|&&t| 1.0 - t >= aperture.cos()) {
                return Err(Error::Config(format!(
                    "t = {t} is too far from the boundary for aperture {aperture}; need 1 - t < cos(aperture)"
                )));
            }
        }
        let mut last = -1.0;
        for &t in schedule {
            let r = self.point(t)?.norm();
            if r <= last {
                return Err(Error::Config(format!(
                    "|z(t)| does not increase at t = {t}"
                )));
            }
            last = r;
        }
        Ok(())
    }
}

/// `r_k = 1 - 2^-k` for `k = 1..=count`.
pub fn dyadic_schedule(count: u32) -> Vec<f64> {
    (1..=count).map(|k| 1.0 - 0.5f64.powi(k as i32)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecaySample {
    pub t: f64,
    pub z: Complex64,
    pub value: Complex64,
    pub flag: SampleFlag,
}

/// Samples of a field along an [`ApproachPath`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayProfile {
    pub label: String,
    pub path: ApproachPath,
    pub samples: Vec<DecaySample>,
}

impl DecayProfile {
    pub fn last(&self) -> Option<&DecaySample> {
        self.samples.last()
    }

    pub fn max_abs(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| s.value.norm())
            .fold(0.0, f64::max)
    }

    /// Leading samples carrying [`SampleFlag::Ok`].
    pub fn trusted_prefix(&self) -> &[DecaySample] {
        let end = self
            .samples
            .iter()
            .position(|s| s.flag != SampleFlag::Ok)
            .unwrap_or(self.samples.len());
        &self.samples[..end]
    }

    /// Whether `|value|` is strictly decreasing over `samples`.
    pub fn strictly_decreasing(samples: &[DecaySample]) -> bool {
        samples
            .windows(2)
            .all(|w| w[1].value.norm() < w[0].value.norm())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,re_z,im_z,value_re,value_im,flag\n");
        for s in &self.samples {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                format_float(s.t),
                format_float(s.z.re),
                format_float(s.z.im),
                format_float(s.value.re),
                format_float(s.value.im),
                s.flag
            );
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        to_json_string(self)
    }
}

/// Samples `field` at `path.point(t)` for each `t` in `schedule`.
pub fn decay_profile(
    field: &impl Field,
    label: impl Into<String>,
    path: ApproachPath,
    schedule: &[f64],
) -> Result<DecayProfile> {
    path.validate(schedule)?;
    let samples = schedule
        .iter()
        .map(|&t| {
            let z = path.point(t)?;
            Ok(DecaySample {
                t,
                z: z.value(),
                value: field.value(z),
                flag: field.flag(z),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecayProfile {
        label: label.into(),
        path,
        samples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    DecayConsistent,
    NotDecayConsistent,
    /// The final sample of a profile could not be evaluated reliably.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DecayConsistent => "decay-consistent",
            Verdict::NotDecayConsistent => "not-decay-consistent",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(1 - |a|^2)^2 |f'(a) g'(a)|` at a zero `a` of a Blaschke input.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroSample {
    pub zero: Complex64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutatorReport {
    pub inputs: BTreeMap<String, String>,
    pub config: BerezinConfig,
    /// Derivative profile first, then the Berezin transform of the defect.
    pub profiles: Vec<DecayProfile>,
    pub zero_profile: Vec<ZeroSample>,
    pub residuals: BTreeMap<String, f64>,
    pub verdict: Verdict,
}

impl CommutatorReport {
    pub fn derivative_profile(&self) -> &DecayProfile {
        &self.profiles[0]
    }

    pub fn defect_profile(&self) -> &DecayProfile {
        &self.profiles[1]
    }

    /// Smallest derivative quantity over the Blaschke zeros.
    pub fn zero_floor(&self) -> Option<f64> {
        self.zero_profile.iter().map(|s| s.value).reduce(f64::min)
    }

    pub fn zero_max(&self) -> Option<f64> {
        self.zero_profile.iter().map(|s| s.value).reduce(f64::max)
    }

    pub fn to_json(&self) -> Result<String> {
        to_json_string(self)
    }
}

fn derivative_quantity(f: &AnalyticSymbol, g: &AnalyticSymbol, z: DiskPoint) -> f64 {
    z.defect().powi(2) * (f.deriv(z) * g.deriv(z)).norm()
}

/// Boundary-decay evidence for compactness of `T_{conj f} T_g - T_g T_{conj f}`.
///
/// Profile one is `(1 - |z|^2)^2 |f'(z) g'(z)|`. Profile two is the modulus of the
/// Berezin transform of `2 T_{conj(f) g} - T_{conj f} T_g - T_g T_{conj f}`: by the
/// matrix route inside the reliable radius of `config.dim`, and beyond it by the
/// Taylor form of `(conj(f) g)~(z) - conj(f(z)) g(z)` (flagged `symbol-route`).
/// Zeros of Blaschke inputs are sampled separately.
pub fn commutator_compactness_indicator(
    f: &AnalyticSymbol,
    g: &AnalyticSymbol,
    path: ApproachPath,
    schedule: &[f64],
    config: &BerezinConfig,
) -> Result<CommutatorReport> {
    config.validate()?;
    path.validate(schedule)?;

    let derivative = |z: DiskPoint| Complex64::new(derivative_quantity(f, g, z), 0.0);
    let derivative_profile = decay_profile(&derivative, "derivative-product", path, schedule)?;

    let defect = analytic_semicommutator_defect(f, g, config.dim, TAYLOR_TOL)?;
    let mut route_gap: f64 = 0.0;
    let mut samples = Vec::with_capacity(schedule.len());
    for &t in schedule {
        let z = path.point(t)?;
        let (value, flag) = if is_reliable(z, config.dim, config.tol) {
            let value = berezin_operator(&defect, z);
            if let Some(symbol) = berezin_conj_product(f, g, z, TAYLOR_TOL) {
                let direct = symbol - f.eval(z).conj() * g.eval(z);
                route_gap = route_gap.max((direct - value).norm());
            }
            (value, SampleFlag::Ok)
        } else if conj_product_converges(f, g, z, TAYLOR_TOL) {
            let symbol = berezin_conj_product(f, g, z, TAYLOR_TOL).unwrap_or_default();
            (
                symbol - f.eval(z).conj() * g.eval(z),
                SampleFlag::SymbolRoute,
            )
        } else {
            (Complex64::new(f64::NAN, 0.0), SampleFlag::Unreliable)
        };
        samples.push(DecaySample {
            t,
            z: z.value(),
            value: Complex64::new(value.norm(), 0.0),
            flag,
        });
    }
    let defect_profile = DecayProfile {
        label: "semicommutator-berezin".into(),
        path,
        samples,
    };

    let mut zeros: Vec<DiskPoint> = Vec::new();
    for input in [f, g] {
        if let AnalyticSymbol::Blaschke(b) = input {
            for &a in b.zeros() {
                if !zeros.contains(&a) {
                    zeros.push(a);
                }
            }
        }
    }
    let zero_profile: Vec<ZeroSample> = zeros
        .iter()
        .map(|&a| ZeroSample {
            zero: a.value(),
            value: derivative_quantity(f, g, a),
        })
        .collect();

    let verdict = {
        let last_derivative = derivative_profile
            .last()
            .map(|s| s.value.norm())
            .unwrap_or(f64::NAN);
        let last_defect = defect_profile.last().copied();
        match last_defect {
            Some(s) if s.flag.is_trusted() => {
                if last_derivative < config.threshold && s.value.norm() < config.threshold {
                    Verdict::DecayConsistent
                } else {
                    Verdict::NotDecayConsistent
                }
            }
            _ => Verdict::Inconclusive,
        }
    };

    let mut inputs = BTreeMap::new();
    inputs.insert("f".to_string(), f.to_string());
    inputs.insert("g".to_string(), g.to_string());
    inputs.insert("path".to_string(), serde_json::to_string(&path)?);

    let mut report = CommutatorReport {
        inputs,
        config: config.clone(),
        profiles: vec![derivative_profile, defect_profile],
        zero_profile,
        residuals: BTreeMap::new(),
        verdict,
    };
    let mut residuals = BTreeMap::new();
    residuals.insert(
        "reliable_radius".to_string(),
        reliable_radius(config.dim, config.tol),
    );
    residuals.insert("route_gap".to_string(), route_gap);
    if let Some(floor) = report.zero_floor() {
        residuals.insert("zero_floor".to_string(), floor);
    }
    if let Some(max) = report.zero_max() {
        residuals.insert("zero_max".to_string(), max);
    }
    report.residuals = residuals;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{BlaschkeProduct, MonomialSymbol};

    fn w() -> AnalyticSymbol {
        AnalyticSymbol::polynomial(MonomialSymbol::z()).unwrap()
    }

    #[test]
    fn schedule_and_paths() {
        let s = dyadic_schedule(4);
        assert_eq!(s, vec![0.5, 0.75, 0.875, 0.9375]);
        let radial = ApproachPath::radial(0.0);
        assert!(radial.validate(&s).is_ok());
        assert!(radial.validate(&[0.5, 0.5]).is_err());
        assert!(radial.validate(&[0.5, 1.0]).is_err());
        assert!(radial.validate(&[]).is_err());
        let cone = ApproachPath::nontangential(0.3, 0.5).unwrap();
        assert!(cone.validate(&s[1..]).is_ok());
        // 1 - 0.5 >= cos(1.2)
        assert!(ApproachPath::nontangential(0.0, 1.2)
            .unwrap()
            .validate(&s)
            .is_err());
        assert!(ApproachPath::nontangential(0.0, 2.0).is_err());
        let z = cone.point(0.99).unwrap();
        assert!(z.norm() < 1.0);
        // the segment ends at e^{i theta}
        let end = cone.point(1.0 - 1e-9).unwrap().value();
        assert!((end - Complex64::from_polar(1.0, 0.3)).norm() < 1e-8);
    }

    #[test]
    fn zero_field_profile() {
        let zero = |_: DiskPoint| Complex64::new(0.0, 0.0);
        let p = decay_profile(
            &zero,
            "zero",
            ApproachPath::radial(1.0),
            &dyadic_schedule(6),
        )
        .unwrap();
        assert_eq!(p.samples.len(), 6);
        assert!(p
            .samples
            .iter()
            .all(|s| s.value == Complex64::new(0.0, 0.0) && s.flag == SampleFlag::Ok));
    }

    #[test]
    fn derivative_profile_for_identity_symbol() {
        let f = w();
        let field = |z: DiskPoint| Complex64::new(derivative_quantity(&f, &f, z), 0.0);
        let p = decay_profile(&field, "d", ApproachPath::radial(0.0), &[0.9]).unwrap();
        assert!((p.samples[0].value.re - 0.0361).abs() < 1e-15);
    }

    #[test]
    fn csv_layout() {
        let one = |_: DiskPoint| Complex64::new(1.0, 0.0);
        let p = decay_profile(&one, "one", ApproachPath::radial(0.0), &[0.5]).unwrap();
        let csv = p.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,re_z,im_z,value_re,value_im,flag"));
        assert_eq!(lines.next(), Some("5.00000000000e-1,5.00000000000e-1,0.00000000000e0,1.00000000000e0,0.00000000000e0,ok"));
    }

    #[test]
    fn identity_symbol_commutator_decays() {
        let f = w();
        let cfg = BerezinConfig::default();
        let schedule = dyadic_schedule(10);
        let r =
            commutator_compactness_indicator(&f, &f, ApproachPath::radial(0.0), &schedule, &cfg)
                .unwrap();
        assert_eq!(r.verdict, Verdict::DecayConsistent);
        assert!(r.zero_profile.is_empty());
        assert!(r.residuals["route_gap"] < 1e-10);
        let defect = r.defect_profile();
        // (1 - t)^2 sum t^n / (n + 2) at t = r^2
        for s in &defect.samples {
            let t = s.z.norm_sqr();
            let want: f64 = (1.0 - t).powi(2)
                * (0..200_000)
                    .map(|n| t.powi(n) / (n as f64 + 2.0))
                    .sum::<f64>();
            assert!(
                (s.value.re - want).abs() < 1e-9,
                "{} {} {want}",
                s.t,
                s.value.re
            );
        }
        assert!(DecayProfile::strictly_decreasing(defect.trusted_prefix()));
        assert!(defect.samples.last().unwrap().flag == SampleFlag::SymbolRoute);
        assert!(r.derivative_profile().last().unwrap().value.re < 1e-5);
    }

    #[test]
    fn constant_symbol_gives_zero_profiles() {
        let one = AnalyticSymbol::polynomial(MonomialSymbol::one()).unwrap();
        let r = commutator_compactness_indicator(
            &one,
            &w(),
            ApproachPath::radial(0.5),
            &dyadic_schedule(8),
            &BerezinConfig::default(),
        )
        .unwrap();
        for p in &r.profiles {
            assert!(p.max_abs() < 1e-14, "{}", p.label);
        }
        assert_eq!(r.verdict, Verdict::DecayConsistent);
    }

    #[test]
    fn blaschke_zero_floor() {
        let b: AnalyticSymbol = BlaschkeProduct::dyadic(8).into();
        let r = commutator_compactness_indicator(
            &b,
            &b,
            ApproachPath::radial(0.0),
            &dyadic_schedule(10),
            &BerezinConfig::default(),
        )
        .unwrap();
        assert_eq!(r.zero_profile.len(), 8);
        let floor = r.zero_floor().unwrap();
        assert!((floor - 5.84878058390309e-4).abs() < 1e-12, "{floor}");
        assert!((r.zero_max().unwrap() - 0.0337932409382957).abs() < 1e-12);
        assert!(
            r.residuals["route_gap"] < 1e-8,
            "{}",
            r.residuals["route_gap"]
        );
        assert!(r
            .defect_profile()
            .samples
            .iter()
            .all(|s| s.flag.is_trusted()));
    }

    #[test]
    fn report_json_has_expected_sections() {
        let r = commutator_compactness_indicator(
            &w(),
            &w(),
            ApproachPath::radial(0.0),
            &dyadic_schedule(3),
            &BerezinConfig::default(),
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        for key in ["inputs", "config", "profiles", "residuals", "verdict"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        // at r = 0.875 the derivative profile is still about 0.055
        assert_eq!(v["verdict"], "not-decay-consistent");
        assert_eq!(v["config"]["dim"], 64);
    }
}
