//! Gaussian curvature of the surface at the point above the origin.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Result, ScherkError};
use crate::params::{CaseLabel, ScherkParams};
use crate::surface::Surface;
use crate::weierstrass::{self, WeierstrassData};
use crate::zero::{self, ZeroResult};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `pi^2 / 2`, the sharp constant for unit radius.
pub const HEINZ_CONSTANT: f64 = PI * PI / 2.0;

/// `K = -4 |q'|^2 / (|p|^2 (1 + |q|^2)^4)` from the Weierstrass pair.
pub fn curvature_general(data: &WeierstrassData, z: Complex64) -> f64 {
    let w = ONE - data.a.conj() * z;
    let qp = (1.0 - data.abs_a_sq()) / w.norm_sqr();
    let p = weierstrass::p_fn(data, z).norm_sqr();
    let q = weierstrass::q_fn(data, z).norm_sqr();
    -4.0 * qp * qp / (p * (1.0 + q).powi(4))
}

/// The same curvature written through `a`, `b` and the poles of `p` only.
pub fn curvature_closed(data: &WeierstrassData, z: Complex64) -> f64 {
    let e2a = Complex64::from_polar(1.0, 2.0 * data.alpha);
    let aa = data.abs_a_sq();
    let num = (z * z - ONE).norm_sqr() * (z * z - e2a).norm_sqr();
    let den = ((ONE - z * data.a.conj()).norm_sqr() + (z - data.a).norm_sqr()).powi(4);
    -4.0 * (1.0 - aa).powi(2) / data.b.norm_sqr() * num / den
}

/// `-(pi^2/4)(1 + sin p sin(q-p)) |1 - z^2|^2 |1 - z^2 e^{i sigma 2 alpha}|^2 /
/// ((1 + |z|^2) - 4 Re(a conj z)/(1 + |a|^2))^4`, with `sigma = -1` for the form
/// consistent with [`curvature_closed`] and `sigma = +1` for the other sign.
pub fn curvature_reduced(
    params: &ScherkParams,
    data: &WeierstrassData,
    z: Complex64,
    sigma: f64,
) -> f64 {
    let e = Complex64::from_polar(1.0, sigma * 2.0 * data.alpha);
    let num = (ONE - z * z).norm_sqr() * (ONE - z * z * e).norm_sqr();
    let den = (1.0 + z.norm_sqr()) - 4.0 * (data.a * z.conj()).re / (1.0 + data.abs_a_sq());
    -PI * PI / 4.0 * (1.0 + params.sin_product()) * num / den.powi(4)
}

/// Sign analysis of `Re(z conj(a))` in polar form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReZaCheck {
    pub re_za: f64,
    /// `-|z||a| / (sin(q/2) sqrt(1 - sin p sin(q-p))) * bracket`.
    pub polar: f64,
    /// `sin(q/2 - p) cos t0 + cos(q/2) sin t0 sqrt(sin p sin(q-p))`.
    pub bracket: f64,
    /// `arg z` in `[0, 2 pi)`.
    pub t0: f64,
    /// Whether `t0` lies in the quadrant the case analysis predicts; `None` off the
    /// interior cases.
    pub t0_in_quadrant: Option<bool>,
}

pub fn re_za_sign(params: &ScherkParams, z_zero: Complex64, a: Complex64) -> ReZaCheck {
    let (p, q) = (params.p(), params.q());
    let s2 = params.sin_product();
    let t0 = z_zero.arg().rem_euclid(TAU);
    let bracket = (0.5 * q - p).sin() * t0.cos() + (0.5 * q).cos() * t0.sin() * s2.sqrt();
    let scale = (0.5 * q).sin() * (1.0 - s2).max(0.0).sqrt();
    let polar = if a.norm() == 0.0 || z_zero.norm() == 0.0 {
        0.0
    } else {
        -z_zero.norm() * a.norm() / scale * bracket
    };
    let quadrant = match crate::params::classify_unchecked(p, q) {
        CaseLabel::A => Some((PI / 2.0, PI)),
        CaseLabel::B => Some((1.5 * PI, TAU)),
        CaseLabel::C => Some((PI, 1.5 * PI)),
        CaseLabel::D => Some((0.0, PI / 2.0)),
        _ => None,
    };
    ReZaCheck {
        re_za: (z_zero * a.conj()).re,
        polar,
        bracket,
        t0,
        t0_in_quadrant: quadrant.map(|(lo, hi)| t0 > lo && t0 < hi),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureReport {
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub alpha: f64,
    pub case: CaseLabel,
    pub z_zero: Complex64,
    pub residual: f64,
    pub a: Complex64,
    pub b: Complex64,
    pub theta: f64,
    /// Canonical value, from [`curvature_closed`].
    pub k: f64,
    /// From [`curvature_general`].
    pub k_cross: f64,
    /// From [`curvature_reduced`] with `sigma = -1`.
    pub k_reduced: f64,
    /// From [`curvature_reduced`] with `sigma = +1`; differs from `k` off the symmetric cases.
    pub k_reduced_alt: f64,
    pub re_za: f64,
    /// `pi^2/2 - |K|`.
    pub bound_margin: f64,
    /// `|1 - z^2|^2 |z^2 - e^{2i alpha}|^2 / (1 + |z|^2)^4`, at most one.
    pub bound_factor: f64,
}

impl CurvatureReport {
    pub fn abs_k(&self) -> f64 {
        self.k.abs()
    }

    pub fn cross_defect(&self) -> f64 {
        (self.k - self.k_cross).abs() / self.k.abs()
    }

    /// The invariants every report must satisfy. A NaN counts as a violation.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !(self.k < 0.0) {
            v.push("K < 0");
        }
        if !(self.cross_defect() <= 1e-9) {
            v.push("|K - K_cross| <= 1e-9 |K|");
        }
        if !(self.re_za <= 1e-12) {
            v.push("Re(z conj a) <= 1e-12");
        }
        if !(self.bound_margin >= -1e-9) {
            v.push("|K| <= pi^2/2 + 1e-9");
        }
        v
    }
}

pub fn curvature_at_zero(params: &ScherkParams) -> Result<CurvatureReport> {
    let s = Surface::new(params.p(), params.q())?;
    let z = zero::locate_zero_on(&s)?;
    Ok(report_for(&s, &z))
}

pub fn report_for(s: &Surface, z: &ZeroResult) -> CurvatureReport {
    let zz = z.z_zero;
    let data = &s.data;
    let k = curvature_closed(data, zz);
    let e2a = Complex64::from_polar(1.0, 2.0 * data.alpha);
    let bound_factor =
        (ONE - zz * zz).norm_sqr() * (zz * zz - e2a).norm_sqr() / (1.0 + zz.norm_sqr()).powi(4);
    CurvatureReport {
        p: s.params.p(),
        q: s.params.q(),
        beta: s.geom.beta,
        alpha: s.geom.alpha,
        case: s.case,
        z_zero: zz,
        residual: z.residual,
        a: data.a,
        b: data.b,
        theta: data.theta,
        k,
        k_cross: curvature_general(data, zz),
        k_reduced: curvature_reduced(&s.params, data, zz, -1.0),
        k_reduced_alt: curvature_reduced(&s.params, data, zz, 1.0),
        re_za: (zz * data.a.conj()).re,
        bound_margin: HEINZ_CONSTANT - k.abs(),
        bound_factor,
    }
}

/// Curvature bound above the centre of a disk of radius `R` in the domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeinzBound {
    pub radius: f64,
    pub bound: f64,
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn heinz_bound(radius: f64) -> Result<HeinzBound> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(ScherkError::Domain(format!(
            "radius must be positive, got {radius}"
        )));
    }
    Ok(HeinzBound {
        radius,
        bound: HEINZ_CONSTANT / (radius * radius),
    })
}
