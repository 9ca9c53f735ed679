//! The harmonic map `f = u + iv + f(0)` and the height `T`, in closed form,
//! together with a Poisson-integral quadrature of the same map.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::params::{QuadGeometry, ScherkParams};
use crate::quadrature::GaussLegendre;
use crate::weierstrass::WeierstrassData;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Gauss points per panel in the Poisson quadrature.
const POISSON_NODES: usize = 8;

/// A point `(u, v, T)` of the minimal surface over the parameter `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub z: Complex64,
    pub u: f64,
    pub v: f64,
    pub t: f64,
}

/// Boundary step data: four arcs of the unit circle with unimodular values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryStep {
    /// Arc endpoints `0, alpha, pi, pi + alpha, 2 pi`.
    pub breaks: [f64; 5],
    /// Values on the arcs, in order: `e^{ix}, e^{iy}, e^{is}, e^{ip}`.
    pub values: [Complex64; 4],
}

impl BoundaryStep {
    pub fn new(geom: &QuadGeometry) -> Self {
        let a = geom.alpha;
        Self {
            breaks: [0.0, a, PI, PI + a, TAU],
            values: [geom.x, geom.y, geom.s, geom.p].map(|t| Complex64::from_polar(1.0, t)),
        }
    }

    /// Value at boundary angle `psi` (arcs closed on the left).
    pub fn value_at(&self, psi: f64) -> Complex64 {
        let psi = psi.rem_euclid(TAU);
        let k = self.breaks[1..4].iter().filter(|&&b| psi >= b).count();
        self.values[k]
    }
}

/// `Im int_0^z dzeta / (zeta - e^{i gamma}) = atan(r sin(gamma - t) / (1 - r cos(gamma - t)))`
/// for `z = r e^{it}`, `|z| < 1`.
pub fn log_integral(gamma: f64, z: Complex64) -> f64 {
    let (r, t) = z.to_polar();
    let d = gamma - t;
    // 1 - r cos(d) > 0 inside the disk, so this is the plain arctangent.
    (r * d.sin()).atan2(1.0 - r * d.cos())
}

/// `f(0) = (alpha e^{2i beta} cos(p - q) + (pi - alpha) cos p) / pi`.
pub fn f_at_origin(geom: &QuadGeometry) -> Complex64 {
    (geom.alpha * Complex64::from_polar(1.0, 2.0 * geom.beta) * (geom.p - geom.q).cos()
        + (PI - geom.alpha) * geom.p.cos())
        / PI
}

/// Closed-form harmonic map. Only the geometry enters; `params` is accepted for symmetry
/// with the other entry points.
pub fn f_closed(_params: &ScherkParams, geom: &QuadGeometry, z: Complex64) -> Complex64 {
    f_from_geometry(geom, z)
}

pub(crate) fn f_from_geometry(geom: &QuadGeometry, z: Complex64) -> Complex64 {
    let (p, q, beta, alpha) = (geom.p, geom.q, geom.beta, geom.alpha);
    let fwd = q - p + 2.0 * beta;
    let back = p - q + 2.0 * beta;

    // The four arctangent terms, one per pole of phi1/phi2.
    let l1 = log_integral(alpha, z);
    let l2 = log_integral(PI, z);
    let l3 = -log_integral(PI + alpha, z);
    let l4 = -log_integral(0.0, z);

    let (cp, sp) = (p.cos(), p.sin());
    let u = ((fwd.cos() - cp) * l1
        + (cp - back.cos()) * l2
        + (cp - back.cos()) * l3
        + (fwd.cos() - cp) * l4)
        / PI;
    let v = ((fwd.sin() + sp) * l1 - (sp + back.sin()) * l2
        + (sp - back.sin()) * l3
        + (fwd.sin() - sp) * l4)
        / PI;
    Complex64::new(u, v) + f_at_origin(geom)
}

/// Poisson integral of the step boundary data, composite Gauss–Legendre on each arc.
pub fn poisson_oracle(
    _params: &ScherkParams,
    geom: &QuadGeometry,
    z: Complex64,
    panels: usize,
) -> Complex64 {
    let step = BoundaryStep::new(geom);
    let rule = GaussLegendre::new(POISSON_NODES);
    let (r, t) = z.to_polar();
    let kernel = |psi: f64| (1.0 - r * r) / (1.0 + r * r - 2.0 * r * (t - psi).cos()) / TAU;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..4 {
        let (lo, hi) = (step.breaks[k], step.breaks[k + 1]);
        let w: f64 = rule.integrate_composite(lo, hi, panels, kernel);
        acc += step.values[k] * w;
    }
    acc
}

/// Principal `atanh(w) = (log(1 + w) - log(1 - w)) / 2` for `|w| < 1`.
fn atanh_principal(w: Complex64) -> Complex64 {
    0.5 * ((ONE + w).ln() - (ONE - w).ln())
}

/// Closed-form height `T(z) = Re int_0^z phi3`.
pub fn t_closed(data: &WeierstrassData, z: Complex64) -> f64 {
    let ea = Complex64::from_polar(1.0, data.alpha);
    let em = ea.conj();
    let pre = data.b * Complex64::from_polar(1.0, data.theta - data.alpha) / (em - ea);
    // Re(1 - z^2) and Re(1 - e^{-2ia} z^2) are positive on the disk.
    let log_ratio = (ONE - z * z).ln() - (ONE - em * em * z * z).ln();
    let body = (1.0 + data.abs_a_sq()) * log_ratio + 4.0 * data.a.re * atanh_principal(z)
        - 4.0 * (data.a * em).re * atanh_principal(em * z);
    (pre * body).im
}

/// `Re int_0^z phi3` by composite Gauss–Legendre along the segment `[0, z]`.
pub fn t_quadrature(data: &WeierstrassData, z: Complex64, panels: usize) -> f64 {
    let rule = GaussLegendre::new(POISSON_NODES);
    let integral: Complex64 = rule.integrate_composite(0.0, 1.0, panels, |t| {
        crate::weierstrass::phi_triple(data, t * z).phi3
    });
    (z * integral).re
}

/// `B_k`, the radial limits of `f` at the jump points `0, alpha, pi, pi + alpha`.
pub fn boundary_midpoints(geom: &QuadGeometry) -> [Complex64; 4] {
    let v = geom.vertices;
    [
        0.5 * (v[0] + v[1]),
        0.5 * (v[1] + v[2]),
        0.5 * (v[2] + v[3]),
        0.5 * (v[3] + v[0]),
    ]
}

pub fn surface_point(geom: &QuadGeometry, data: &WeierstrassData, z: Complex64) -> SurfacePoint {
    let f = f_from_geometry(geom, z);
    SurfacePoint {
        z,
        u: f.re,
        v: f.im,
        t: t_closed(data, z),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::derive_geometry;
    use std::f64::consts::FRAC_PI_2;

    fn setup(p: f64, q: f64) -> (ScherkParams, QuadGeometry, WeierstrassData) {
        let params = ScherkParams::new(p, q).unwrap();
        let geom = derive_geometry(&params).unwrap();
        let data = WeierstrassData::new(&params, &geom).unwrap();
        (params, geom, data)
    }

    #[test]
    fn log_integral_examples() {
        assert_eq!(log_integral(1.3, Complex64::new(0.0, 0.0)), 0.0);
        let r = 0.37;
        assert!((log_integral(FRAC_PI_2, Complex64::new(r, 0.0)) - r.atan()).abs() < 1e-15);
        // 40-digit quadrature of Im int_0^z dzeta/(zeta - e^{i}) at z = 0.5 e^{0.3i}
        let z = Complex64::from_polar(0.5, 0.3);
        assert!((log_integral(1.0, z) - 0.480_752_054_722_215_4).abs() < 1e-15);
    }

    #[test]
    fn log_integral_is_im_log() {
        for &(g, z) in &[
            (0.4, Complex64::new(0.3, -0.8)),
            (5.9, Complex64::new(-0.6, 0.1)),
            (PI, Complex64::new(0.9, 0.05)),
        ] {
            let w = (ONE - Complex64::from_polar(1.0, -g) * z).ln().im;
            assert!((log_integral(g, z) - w).abs() < 1e-14);
        }
    }

    #[test]
    fn square_is_centred() {
        let (params, geom, _) = setup(FRAC_PI_2, PI);
        assert!(f_closed(&params, &geom, Complex64::new(0.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn origin_value_matches_formula_and_quadrature() {
        let (params, geom, _) = setup(FRAC_PI_2 + 0.1, PI - 0.1);
        let f0 = f_closed(&params, &geom, Complex64::new(0.0, 0.0));
        let expected = Complex64::new(-0.050_678_647_293_065_29, 0.099_807_913_780_725_55);
        assert!((f0 - expected).norm() < 1e-15);
        let pq = poisson_oracle(&params, &geom, Complex64::new(0.0, 0.0), 64);
        assert!((pq - f0).norm() < 1e-14);
    }

    #[test]
    fn closed_form_matches_poisson() {
        let (params, geom, _) = setup(FRAC_PI_2 + 0.1, PI - 0.1);
        let z = Complex64::from_polar(0.4, 2.0);
        let d = f_closed(&params, &geom, z) - poisson_oracle(&params, &geom, z, 512);
        assert!(d.norm() < 1e-7);
        let (params, geom, _) = setup(FRAC_PI_2, PI);
        let z = Complex64::new(0.5, 0.0);
        let d = f_closed(&params, &geom, z) - poisson_oracle(&params, &geom, z, 512);
        assert!(d.norm() < 1e-8);
    }

    #[test]
    fn poisson_approaches_boundary_value() {
        let (params, geom, _) = setup(FRAC_PI_2 + 0.1, PI - 0.1);
        let z = Complex64::from_polar(0.999, 0.5 * geom.alpha);
        let w = poisson_oracle(&params, &geom, z, 512);
        let target = Complex64::from_polar(1.0, geom.x);
        assert!((w - target).norm() < 5e-3);
    }

    #[test]
    fn height_vanishes_at_origin() {
        let (_, _, data) = setup(FRAC_PI_2 + 0.1, PI - 0.1);
        assert_eq!(t_closed(&data, Complex64::new(0.0, 0.0)), 0.0);
    }

    #[test]
    fn height_matches_segment_quadrature() {
        let (_, _, data) = setup(1.2, 3.5);
        for z in [Complex64::new(0.3, 0.5), Complex64::from_polar(0.85, 4.0)] {
            assert!((t_closed(&data, z) - t_quadrature(&data, z, 64)).abs() < 1e-10);
        }
    }

    #[test]
    fn square_height_antisymmetry() {
        let (_, _, data) = setup(FRAC_PI_2, PI);
        for z in [
            Complex64::new(0.5, 0.0),
            Complex64::new(0.3, 0.2),
            Complex64::new(-0.1, 0.7),
        ] {
            let iz = Complex64::i() * z;
            assert!((t_closed(&data, iz) + t_closed(&data, z)).abs() < 1e-14);
        }
    }

    #[test]
    fn midpoints_of_square_sides() {
        let (_, geom, _) = setup(FRAC_PI_2, PI);
        let b = boundary_midpoints(&geom);
        let expected = [(-0.5, 0.5), (-0.5, -0.5), (0.5, -0.5), (0.5, 0.5)];
        for (m, (x, y)) in b.iter().zip(expected) {
            assert!((m - Complex64::new(x, y)).norm() < 1e-15);
        }
        let (_, geom, _) = setup(1.2, 3.5);
        assert!(boundary_midpoints(&geom).iter().all(|m| m.norm() < 1.0));
    }

    #[test]
    fn step_values_by_arc() {
        let (_, geom, _) = setup(FRAC_PI_2 + 0.1, PI - 0.1);
        let step = BoundaryStep::new(&geom);
        assert_eq!(step.value_at(0.0), step.values[0]);
        assert_eq!(step.value_at(geom.alpha), step.values[1]);
        assert_eq!(step.value_at(PI + 0.01), step.values[2]);
        assert_eq!(step.value_at(-0.01), step.values[3]);
    }
}
