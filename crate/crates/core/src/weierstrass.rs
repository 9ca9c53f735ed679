//! Enneper–Weierstrass data of the family.
//!
//! The holomorphic pair is
//!
//! ```text
//! p(z) = b (1 - z conj(a))^2 / ((z^2 - 1)(z^2 - e^{2 i alpha}))    (= h')
//! q(z) = e^{i theta} (z - a) / (1 - z conj(a))                     (q^2 = g'/h')
//! ```
//!
//! with `a` the zero of the Moebius map and `theta` fixed by the value of
//! the dilatation at the origin. The partial-fraction forms of `h'` and `g'`
//! obtained directly from the step boundary data are kept alongside as an
//! independent route.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Result, ScherkError};
use crate::params::{QuadGeometry, ScherkParams};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Below this value of `1 - sin p sin(q-p)` the argument of `a` is ill-conditioned.
const POLAR_COND_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeierstrassData {
    pub a: Complex64,
    pub b: Complex64,
    pub theta: f64,
    pub alpha: f64,
    /// Argument of `a` (zero when `a = 0`).
    pub delta: f64,
}

impl WeierstrassData {
    pub fn new(params: &ScherkParams, geom: &QuadGeometry) -> Result<Self> {
        let a = compute_a(params)?;
        let b = compute_b(params, geom)?;
        let theta = theta_from(params, geom, a);
        let (_, delta) = a_polar(params)?;
        Ok(Self {
            a,
            b,
            theta,
            alpha: geom.alpha,
            delta,
        })
    }

    pub fn abs_a_sq(&self) -> f64 {
        self.a.norm_sqr()
    }
}

/// The three Enneper–Weierstrass components at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiTriple {
    pub phi1: Complex64,
    pub phi2: Complex64,
    pub phi3: Complex64,
}

impl PhiTriple {
    /// `phi1^2 + phi2^2 + phi3^2`, zero for an isotropic triple.
    pub fn isotropy_defect(&self) -> Complex64 {
        self.phi1 * self.phi1 + self.phi2 * self.phi2 + self.phi3 * self.phi3
    }
}

fn sqrt_sin_product(params: &ScherkParams) -> Result<f64> {
    let prod = params.sin_product();
    if prod <= 0.0 {
        return Err(ScherkError::Domain(format!(
            "sin p * sin(q - p) = {prod} is not positive"
        )));
    }
    Ok(prod.sqrt())
}

/// Rational closed form of `a`.
pub fn a_rational(params: &ScherkParams) -> Result<Complex64> {
    let (p, q) = (params.p(), params.q());
    let root = sqrt_sin_product(params)?;
    let num = Complex64::new((q - p).cos() - p.cos(), -q.sin());
    let den = Complex64::new(1.0 - q.cos() + 2.0 * root, (q - p).sin() - p.sin());
    Ok(num / den)
}

/// `|a|` from the modulus formula.
pub fn a_modulus(params: &ScherkParams) -> Result<f64> {
    let root = sqrt_sin_product(params)?;
    Ok(((1.0 - root) / (1.0 + root)).sqrt())
}

/// Polar form `(|a|, delta)` from the modulus and the cosine/sine of the argument.
/// Returns `delta = 0` when `a` vanishes (the square).
pub fn a_polar(params: &ScherkParams) -> Result<(f64, f64)> {
    let (p, q) = (params.p(), params.q());
    let root = sqrt_sin_product(params)?;
    let modulus = a_modulus(params)?;
    let gap = 1.0 - params.sin_product();
    if gap <= 0.0 {
        return Ok((0.0, 0.0));
    }
    let scale = (0.5 * q).sin() * gap.sqrt();
    let cos_delta = -(0.5 * q - p).sin() / scale;
    let sin_delta = -(0.5 * q).cos() * root / scale;
    Ok((modulus, sin_delta.atan2(cos_delta)))
}

/// `a`, evaluated in rational form and cross-checked against the polar form.
pub fn compute_a(params: &ScherkParams) -> Result<Complex64> {
    let a = a_rational(params)?;
    if 1.0 - params.sin_product() > POLAR_COND_FLOOR {
        let (modulus, delta) = a_polar(params)?;
        let polar = Complex64::from_polar(modulus, delta);
        if (polar - a).norm() > 1e-10 {
            return Err(ScherkError::Degenerate(format!(
                "rational ({a}) and polar ({polar}) forms of a disagree"
            )));
        }
    }
    if a.norm() >= 1.0 {
        return Err(ScherkError::Degenerate(format!(
            "|a| = {} is not < 1",
            a.norm()
        )));
    }
    Ok(a)
}

pub fn compute_b(params: &ScherkParams, geom: &QuadGeometry) -> Result<Complex64> {
    sqrt_sin_product(params)?;
    let p = params.p();
    let ea = Complex64::from_polar(1.0, geom.alpha);
    let e2b = Complex64::from_polar(1.0, 2.0 * geom.beta);
    let b = -ea * ((ONE + ea) * p.sin() + e2b * (ea - ONE) * (p - params.q()).sin()) / PI;
    if b.norm() == 0.0 {
        return Err(ScherkError::Degenerate("b vanishes".into()));
    }
    Ok(b)
}

/// `|b|^2 = 4 (S^2 + S)^2 / (pi^2 (1 + S^2))` with `S = sqrt(sin p sin(q-p))`.
pub fn b_modulus_sq(params: &ScherkParams) -> Result<f64> {
    let root = sqrt_sin_product(params)?;
    let prod = root * root;
    Ok(4.0 * (prod + root).powi(2) / (PI * PI * (1.0 + prod)))
}

/// Phase of `q`. The Moebius map is `M(z) = e^{i kappa} (z - a)/(1 - conj(a) z)` with
/// `e^{i kappa} = (1 - conj(a))/(1 - a)` since `M(1) = 1`, and the dilatation of the
/// rotated map is `-e^{-i(2 beta + q)} M(z)^2`. Hence
/// `theta = pi/2 - beta - q/2 - 2 arg(1 - a)` (mod pi); `Re(1 - a) > 0` keeps this
/// branch continuous over the region.
pub fn compute_theta(params: &ScherkParams, geom: &QuadGeometry) -> Result<f64> {
    let a = compute_a(params)?;
    Ok(theta_from(params, geom, a))
}

fn theta_from(params: &ScherkParams, geom: &QuadGeometry, a: Complex64) -> f64 {
    FRAC_PI_2 - geom.beta - 0.5 * params.q() - 2.0 * (ONE - a).arg()
}

/// `q(0)^2 = g'(0)/h'(0)` as a closed expression in `(p, q, alpha, beta)`.
pub fn dilatation_at_origin(params: &ScherkParams, geom: &QuadGeometry) -> Complex64 {
    let p = params.p();
    let ea = Complex64::from_polar(1.0, geom.alpha);
    let e2b = Complex64::from_polar(1.0, 2.0 * geom.beta);
    let spq = (p - params.q()).sin();
    let num = e2b.conj() * (-e2b * (ONE + ea) * p.sin() - (ea - ONE) * spq);
    let den = (ONE + ea) * p.sin() + e2b * (ea - ONE) * spq;
    num / den
}

/// `h'(z) = p(z)`.
pub fn p_fn(data: &WeierstrassData, z: Complex64) -> Complex64 {
    let e2a = Complex64::from_polar(1.0, 2.0 * data.alpha);
    let w = ONE - z * data.a.conj();
    data.b * w * w / ((z * z - ONE) * (z * z - e2a))
}

pub fn q_fn(data: &WeierstrassData, z: Complex64) -> Complex64 {
    Complex64::from_polar(1.0, data.theta) * (z - data.a) / (ONE - z * data.a.conj())
}

/// `q'(z) = e^{i theta} (1 - |a|^2) / (1 - conj(a) z)^2`.
pub fn q_prime(data: &WeierstrassData, z: Complex64) -> Complex64 {
    let w = ONE - z * data.a.conj();
    Complex64::from_polar(1.0, data.theta) * (1.0 - data.abs_a_sq()) / (w * w)
}

/// Second Beltrami coefficient `omega = q^2 = g'/h'`.
pub fn dilatation(data: &WeierstrassData, z: Complex64) -> Complex64 {
    let q = q_fn(data, z);
    q * q
}

pub fn phi_triple(data: &WeierstrassData, z: Complex64) -> PhiTriple {
    let p = p_fn(data, z);
    let q = q_fn(data, z);
    let q2 = q * q;
    PhiTriple {
        phi1: p * (ONE + q2),
        phi2: -I * p * (ONE - q2),
        phi3: -2.0 * I * p * q,
    }
}

/// Factorized `phi3 = -2i e^{i theta} b (z - a)(1 - z conj(a)) / ((z^2-1)(z^2-e^{2i alpha}))`.
pub fn phi3_factored(data: &WeierstrassData, z: Complex64) -> Complex64 {
    let e2a = Complex64::from_polar(1.0, 2.0 * data.alpha);
    -2.0 * I
        * Complex64::from_polar(1.0, data.theta)
        * data.b
        * (z - data.a)
        * (ONE - z * data.a.conj())
        / ((z * z - ONE) * (z * z - e2a))
}

fn partial_fraction(geom: &QuadGeometry, z: Complex64, sign: f64) -> Complex64 {
    let e = |t: f64| Complex64::from_polar(1.0, sign * t);
    let (ex, ey, es, ep) = (e(geom.x), e(geom.y), e(geom.s), e(geom.p));
    let ea = Complex64::from_polar(1.0, geom.alpha);
    ((ex - ey) / (z - ea) + (ey - es) / (z + ONE) + (es - ep) / (z + ea) + (ep - ex) / (z - ONE))
        / (2.0 * PI * I)
}

/// `h'` from the jumps of the step boundary function.
pub fn h_prime_partial(geom: &QuadGeometry, z: Complex64) -> Complex64 {
    partial_fraction(geom, z, 1.0)
}

/// `g'` from the jumps of the conjugated step boundary function.
pub fn g_prime_partial(geom: &QuadGeometry, z: Complex64) -> Complex64 {
    partial_fraction(geom, z, -1.0)
}

/// `phi1 = h' + g'` written with the cosine jump coefficients.
pub fn phi1_partial(geom: &QuadGeometry, z: Complex64) -> Complex64 {
    let ea = Complex64::from_polar(1.0, geom.alpha);
    let (cx, cy, cs, cp) = (geom.x.cos(), geom.y.cos(), geom.s.cos(), geom.p.cos());
    ((cx - cy) / (z - ea) + (cy - cs) / (z + ONE) + (cs - cp) / (z + ea) + (cp - cx) / (z - ONE))
        / (PI * I)
}

/// `phi2 = -i (h' - g')` written with the sine jump coefficients.
pub fn phi2_partial(geom: &QuadGeometry, z: Complex64) -> Complex64 {
    let ea = Complex64::from_polar(1.0, geom.alpha);
    let (sx, sy, ss, sp) = (geom.x.sin(), geom.y.sin(), geom.s.sin(), geom.p.sin());
    ((sx - sy) / (z - ea) + (sy - ss) / (z + ONE) + (ss - sp) / (z + ea) + (sp - sx) / (z - ONE))
        / (PI * I)
}

/// Linear coefficient of `(z^2 - 1)(z^2 - e^{2i alpha}) h'(z)`; equals `-2 conj(a) b`.
pub fn h_prime_linear_coefficient(geom: &QuadGeometry) -> Complex64 {
    let e = |t: f64| Complex64::from_polar(1.0, t);
    let (ex, ey, es, ep) = (e(geom.x), e(geom.y), e(geom.s), e(geom.p));
    let e2a = e(2.0 * geom.alpha);
    -(ex - ey + e2a * (ey - es) + es - ep + e2a * (ep - ex)) / (2.0 * PI * I)
}
