//! Preimage of the origin under the harmonic map, and the sector bookkeeping
//! of the localization argument.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Result, ScherkError};
use crate::params::{CaseLabel, QuadGeometry, ScherkParams};
use crate::surface::Surface;

/// Newton iterates are kept strictly inside `|z| < DISK_LIMIT`.
pub const DISK_LIMIT: f64 = 1.0 - 1e-12;
pub const SEED_RADIUS: f64 = 0.6;
pub const RESIDUAL_TOL: f64 = 1e-10;
pub const MAX_EVALUATIONS: usize = 200;
const NEWTON_TARGET: f64 = 1e-13;
const GRID_N: usize = 40;

/// Half-open angular interval `[start, end)` measured counterclockwise; `start == end`
/// denotes a single ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    pub start: f64,
    pub end: f64,
}

impl Sector {
    pub fn is_ray(&self) -> bool {
        self.start == self.end
    }

    pub fn width(&self) -> f64 {
        (self.end - self.start).rem_euclid(TAU)
    }

    pub fn midpoint(&self) -> f64 {
        (self.start + 0.5 * self.width()).rem_euclid(TAU)
    }

    /// Whether the angle lies in the closed sector widened by `tol` on each side.
    pub fn contains(&self, angle: f64, tol: f64) -> bool {
        let off = (angle - self.start).rem_euclid(TAU);
        off <= self.width() + tol || off >= TAU - tol
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroResult {
    pub z_zero: Complex64,
    pub residual: f64,
    /// `None` for the square, where the zero is the origin.
    pub sector: Option<Sector>,
    pub case: CaseLabel,
    pub iterations: usize,
    pub used_fallback: bool,
}

impl ZeroResult {
    pub fn in_sector(&self, tol: f64) -> bool {
        match self.sector {
            Some(s) => s.contains(self.z_zero.arg(), tol),
            None => self.z_zero.norm() < RESIDUAL_TOL,
        }
    }
}

/// Sector holding the zero. Trapezoid boundary cases give the ray shared by the two
/// neighbouring sectors.
pub fn sector_of_case(case: CaseLabel, geom: &QuadGeometry) -> Result<Sector> {
    let a = geom.alpha;
    let (start, end) = match case {
        CaseLabel::A => (a, PI),
        CaseLabel::B => (PI + a, TAU),
        CaseLabel::C => (PI, PI + a),
        CaseLabel::D => (0.0, a),
        CaseLabel::BoundaryTrapezoidQ2P if geom.q < PI => (a, a),
        CaseLabel::BoundaryTrapezoidQ2P => (PI + a, PI + a),
        CaseLabel::BoundaryTrapezoidQPi if geom.q < 2.0 * geom.p => (PI, PI),
        CaseLabel::BoundaryTrapezoidQPi => (0.0, 0.0),
        CaseLabel::Center => {
            return Err(ScherkError::Domain(
                "the square has its zero at the origin; no sector".into(),
            ))
        }
    };
    Ok(Sector { start, end })
}

/// Newton step for `f(z + dz) = 0` with `f_z = A`, `f_zbar = B`:
/// `A dz + B conj(dz) = -F`.
fn newton_step(f: Complex64, fz: Complex64, fzb: Complex64) -> Option<Complex64> {
    let det = fz.norm_sqr() - fzb.norm_sqr();
    if det.abs() < 1e-300 || !det.is_finite() {
        return None;
    }
    Some((fzb * f.conj() - fz.conj() * f) / det)
}

struct Counter {
    evals: usize,
}

impl Counter {
    fn eval(&mut self, s: &Surface, z: Complex64) -> Result<Complex64> {
        self.evals += 1;
        if self.evals > MAX_EVALUATIONS {
            return Err(ScherkError::Convergence(format!(
                "no zero after {MAX_EVALUATIONS} evaluations at (p, q) = ({}, {})",
                s.params.p(),
                s.params.q()
            )));
        }
        Ok(s.f(z))
    }
}

/// Damped Newton from `seed`. Returns the last iterate, its residual and the
/// iteration count; `Ok(None)` means the iteration stalled.
fn newton(
    s: &Surface,
    seed: Complex64,
    counter: &mut Counter,
) -> Result<Option<(Complex64, f64, usize)>> {
    let mut z = seed;
    let mut f = counter.eval(s, z)?;
    let mut res = f.norm();
    let mut iters = 0;
    while res > NEWTON_TARGET {
        let Some(dz) = newton_step(f, s.f_z(z), s.f_zbar(z)) else {
            return Ok(None);
        };
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let cand = z + lambda * dz;
            if cand.norm() < DISK_LIMIT {
                let fc = counter.eval(s, cand)?;
                if fc.norm() < res {
                    z = cand;
                    f = fc;
                    res = fc.norm();
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        iters += 1;
        if !accepted {
            break;
        }
    }
    Ok(Some((z, res, iters)))
}

/// Minimizer of `|f|` on a polar grid over the disk, used to reseed Newton.
/// Grid evaluations are not counted against the Newton budget.
fn grid_seed(s: &Surface) -> Complex64 {
    let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
    for i in 0..GRID_N {
        let r = 0.98 * (i as f64 + 0.5) / GRID_N as f64;
        for j in 0..GRID_N {
            let z = Complex64::from_polar(r, TAU * j as f64 / GRID_N as f64);
            let v = s.f(z).norm();
            if v < best.0 {
                best = (v, z);
            }
        }
    }
    best.1
}

pub fn locate_zero(params: &ScherkParams) -> Result<ZeroResult> {
    let s = Surface::new(params.p(), params.q())?;
    locate_zero_on(&s)
}

pub fn locate_zero_on(s: &Surface) -> Result<ZeroResult> {
    let sector = match s.case {
        CaseLabel::Center => None,
        c => Some(sector_of_case(c, &s.geom)?),
    };
    let seed = match sector {
        Some(sec) => Complex64::from_polar(SEED_RADIUS, sec.midpoint()),
        None => Complex64::new(0.0, 0.0),
    };
    let mut counter = Counter { evals: 0 };
    let mut used_fallback = false;
    let mut outcome = newton(s, seed, &mut counter)?;
    if !matches!(outcome, Some((_, r, _)) if r < RESIDUAL_TOL) {
        used_fallback = true;
        outcome = newton(s, grid_seed(s), &mut counter)?;
    }
    match outcome {
        Some((z, residual, iterations)) if residual < RESIDUAL_TOL => Ok(ZeroResult {
            z_zero: z,
            residual,
            sector,
            case: s.case,
            iterations,
            used_fallback,
        }),
        _ => Err(ScherkError::Convergence(format!(
            "Newton stalled at (p, q) = ({}, {})",
            s.params.p(),
            s.params.q()
        ))),
    }
}

/// The four radial rays through the jump points of the boundary data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ray {
    Zero,
    Alpha,
    Pi,
    PiPlusAlpha,
}

impl Ray {
    pub const ALL: [Ray; 4] = [Ray::Zero, Ray::Alpha, Ray::Pi, Ray::PiPlusAlpha];

    pub fn angle(&self, geom: &QuadGeometry) -> f64 {
        match self {
            Ray::Zero => 0.0,
            Ray::Alpha => geom.alpha,
            Ray::Pi => PI,
            Ray::PiPlusAlpha => PI + geom.alpha,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Ray::Zero => "0",
            Ray::Alpha => "alpha",
            Ray::Pi => "pi",
            Ray::PiPlusAlpha => "pi+alpha",
        }
    }
}

/// Tangent-argument data along one ray. Writing the image of the ray as
/// `P/Q` with `P = A d+ + B d-` and `Q = C d+ + D d-` gives
/// `P'Q - Q'P = 4 (1 - r^2)(AD - BC) cos(alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotonicityDiagnostic {
    pub ray: Ray,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// `A, B, C, D` from the product forms.
    pub factored: [f64; 4],
    pub det: f64,
    /// `AD - BC` as a single product of sines.
    pub det_factored: f64,
    pub sign_pq: i8,
}

impl MonotonicityDiagnostic {
    /// Largest deviation between the sum and product forms.
    pub fn factorization_defect(&self) -> f64 {
        let raw = [self.a, self.b, self.c, self.d];
        raw.iter()
            .zip(&self.factored)
            .map(|(x, y)| (x - y).abs())
            .fold((self.det - self.det_factored).abs(), f64::max)
    }
}

pub fn monotonicity_diagnostic(
    params: &ScherkParams,
    geom: &QuadGeometry,
    ray: Ray,
) -> MonotonicityDiagnostic {
    let (p, q, beta) = (params.p(), params.q(), geom.beta);
    let h = 0.5 * q;
    let xx = q - p + 2.0 * beta;
    let yy = p - q + 2.0 * beta;
    let (sp, cp) = (p.sin(), p.cos());
    let (sx, cx, sy, cy) = (xx.sin(), xx.cos(), yy.sin(), yy.cos());
    let sin = f64::sin;
    let cos = f64::cos;

    let (raw, factored, det_factored) = match ray {
        Ray::Zero => (
            [sx + sp, sp - sy, cx - cp, cp - cy],
            [
                2.0 * sin(beta + h) * cos(beta + h - p),
                2.0 * sin(h - beta) * cos(p + beta - h),
                -2.0 * sin(beta + h) * sin(h + beta - p),
                2.0 * sin(beta - h) * sin(p + beta - h),
            ],
            4.0 * sin(beta + h) * sin(beta - h) * sin(2.0 * p - q),
        ),
        Ray::Alpha => (
            [sx - sp, -sp - sy, cx - cp, cp - cy],
            [
                2.0 * sin(h - p + beta) * cos(beta + h),
                -2.0 * sin(p + beta - h) * cos(h - beta),
                -2.0 * sin(beta + h) * sin(h + beta - p),
                2.0 * sin(p + beta - h) * sin(beta - h),
            ],
            -4.0 * sin(beta + h - p) * sin(beta + p - h) * sin(q),
        ),
        Ray::Pi => (
            [sy - sp, -sp - sx, cy - cp, cp - cx],
            [
                2.0 * sin(beta - h) * cos(p + beta - h),
                -2.0 * sin(beta + h) * cos(p - beta - h),
                -2.0 * sin(p + beta - h) * sin(beta - h),
                -2.0 * sin(beta + h) * sin(p - beta - h),
            ],
            -4.0 * sin(beta + h) * sin(beta - h) * sin(2.0 * p - q),
        ),
        Ray::PiPlusAlpha => (
            [sy + sp, sp - sx, cy - cp, cp - cx],
            [
                2.0 * sin(p + beta - h) * cos(h - beta),
                2.0 * sin(p - h - beta) * cos(h + beta),
                -2.0 * sin(p + beta - h) * sin(beta - h),
                -2.0 * sin(beta + h) * sin(p - beta - h),
            ],
            -4.0 * sin(p - beta - h) * sin(p + beta - h) * sin(q),
        ),
    };
    let [a, b, c, d] = raw;
    let det = a * d - b * c;
    let prod = det * geom.cos_alpha;
    let sign_pq = if prod > 0.0 {
        1
    } else if prod < 0.0 {
        -1
    } else {
        0
    };
    MonotonicityDiagnostic {
        ray,
        a,
        b,
        c,
        d,
        factored,
        det,
        det_factored,
        sign_pq,
    }
}

/// `-4 sin(beta + q/2 - p) sin(beta + p - q/2) sin(2 beta)`, an alternative product form
/// for `AD - BC` on the ray `alpha`. It agrees with the determinant only where
/// `sin(2 beta) = sin q`; kept so the discrepancy stays visible.
pub fn alpha_ray_det_sin_2beta(params: &ScherkParams, geom: &QuadGeometry) -> f64 {
    let (p, h, beta) = (params.p(), 0.5 * params.q(), geom.beta);
    -4.0 * (beta + h - p).sin() * (beta + p - h).sin() * (2.0 * beta).sin()
}

/// The sign of `(AD - BC) cos(alpha)` asserted for each interior case on the two rays
/// bounding its sector; `None` where no claim is made.
pub fn expected_sign(case: CaseLabel, ray: Ray) -> Option<i8> {
    match (case, ray) {
        (CaseLabel::A, Ray::Alpha) => Some(1),
        (CaseLabel::A, Ray::Pi) => Some(-1),
        (CaseLabel::B, Ray::Zero) => Some(-1),
        (CaseLabel::B, Ray::PiPlusAlpha) => Some(1),
        (CaseLabel::C, Ray::Pi) => Some(1),
        (CaseLabel::C, Ray::PiPlusAlpha) => Some(-1),
        (CaseLabel::D, Ray::Zero) => Some(1),
        (CaseLabel::D, Ray::Alpha) => Some(-1),
        _ => None,
    }
}
