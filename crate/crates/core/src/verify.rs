//! Invariant checks for one surface or for a sweep, as a flat pass/fail list.

use num_complex::Complex64;

use crate::curvature::{self, HEINZ_CONSTANT};
use crate::error::Result;
use crate::harmonic;
use crate::moebius;
use crate::surface::Surface;
use crate::sweep::{self, SweepSpec};
use crate::weierstrass;
use crate::zero::{self, Ray};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed,
            detail: detail.into(),
        }
    }

    fn within(name: &'static str, err: f64, tol: f64) -> Self {
        Self::new(name, err <= tol, format!("{err:.3e} (tol {tol:.0e})"))
    }
}

/// Knobs for deliberately breaking the data, to confirm the checks can fail.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct VerifyOptions {
    /// Added to `theta` before the analytic checks.
    pub theta_offset: f64,
}

/// Sample points well inside the disk.
fn samples() -> Vec<Complex64> {
    let mut out = Vec::new();
    for (i, r) in [0.15, 0.4, 0.65, 0.85].into_iter().enumerate() {
        for k in 0..5 {
            out.push(Complex64::from_polar(
                r,
                0.37 + 1.29 * k as f64 + 0.5 * i as f64,
            ));
        }
    }
    out
}

fn wirtinger<F: Fn(Complex64) -> Complex64>(f: &F, z: Complex64, h: f64) -> (Complex64, Complex64) {
    let fx = (f(z + h) - f(z - h)) / (2.0 * h);
    let ih = Complex64::new(0.0, h);
    let fy = (f(z + ih) - f(z - ih)) / (2.0 * h);
    let i = Complex64::i();
    (0.5 * (fx - i * fy), 0.5 * (fx + i * fy))
}

fn laplacian<F: Fn(Complex64) -> f64>(f: &F, z: Complex64, h: f64) -> f64 {
    let ih = Complex64::new(0.0, h);
    (f(z + h) + f(z - h) + f(z + ih) + f(z - ih) - 4.0 * f(z)) / (h * h)
}

fn max_over<F: Fn(Complex64) -> f64>(pts: &[Complex64], f: F) -> f64 {
    pts.iter().map(|&z| f(z)).fold(0.0, f64::max)
}

pub fn verify_point(p: f64, q: f64, opts: VerifyOptions) -> Result<Vec<Check>> {
    let mut s = Surface::new(p, q)?;
    s.data.theta += opts.theta_offset;
    let (params, geom, data) = (s.params, s.geom, s.data);
    let pts = samples();
    let mut out = Vec::new();

    out.push(Check::new("region membership", true, s.case.as_str()));
    out.push(Check::within(
        "bicentric side sums",
        geom.side_sum_defect().abs(),
        1e-12,
    ));

    let m = moebius::build_moebius(&params, &geom)?;
    let ea = Complex64::from_polar(1.0, geom.alpha);
    let anchors = [
        (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)),
        (ea, Complex64::from_polar(1.0, p)),
        (Complex64::new(-1.0, 0.0), Complex64::from_polar(1.0, q)),
        (-ea, -Complex64::from_polar(1.0, q - p)),
    ];
    let mut anchor_err: f64 = 0.0;
    for (z, w) in anchors {
        anchor_err = anchor_err.max((m.apply(z)? - w).norm());
    }
    out.push(Check::within("Moebius anchors", anchor_err, 1e-12));
    out.push(Check::within(
        "zero of Moebius map equals a",
        (m.zero_of()? - data.a).norm(),
        1e-10,
    ));
    out.push(Check::within(
        "|a| closed form",
        (weierstrass::a_modulus(&params)? - data.a.norm()).abs(),
        1e-10,
    ));
    out.push(Check::within(
        "|b|^2 closed form",
        (weierstrass::b_modulus_sq(&params)? - data.b.norm_sqr()).abs(),
        1e-10,
    ));
    out.push(Check::within(
        "linear coefficient equals -2 conj(a) b",
        (weierstrass::h_prime_linear_coefficient(&geom) + 2.0 * data.a.conj() * data.b).norm(),
        1e-10,
    ));
    out.push(Check::within(
        "dilatation at origin",
        (weierstrass::dilatation(&data, Complex64::new(0.0, 0.0))
            - weierstrass::dilatation_at_origin(&params, &geom))
        .norm(),
        1e-10,
    ));
    out.push(Check::within(
        "h' from partial fractions",
        max_over(&pts, |z| {
            let h = weierstrass::h_prime_partial(&geom, z);
            (weierstrass::p_fn(&data, z) - h).norm() / h.norm().max(1.0)
        }),
        1e-10,
    ));
    out.push(Check::within(
        "isotropy",
        max_over(&pts, |z| {
            let t = weierstrass::phi_triple(&data, z);
            let scale = t.phi1.norm_sqr() + t.phi2.norm_sqr() + t.phi3.norm_sqr();
            t.isotropy_defect().norm() / scale.max(1.0)
        }),
        1e-12,
    ));

    let f = |z: Complex64| s.f(z);
    out.push(Check::within(
        "Beltrami equation",
        max_over(&pts, |z| {
            let (fz, fzb) = wirtinger(&f, z, 1e-5);
            (fzb.conj() - weierstrass::dilatation(&data, z) * fz).norm()
        }),
        1e-6,
    ));
    out.push(Check::within(
        "f_z equals h'",
        max_over(&pts, |z| {
            let (fz, _) = wirtinger(&f, z, 1e-5);
            (fz - s.f_z(z)).norm() / s.f_z(z).norm().max(1.0)
        }),
        1e-6,
    ));
    let inner: Vec<Complex64> = pts.iter().copied().filter(|z| z.norm() < 0.7).collect();
    out.push(Check::within(
        "harmonic u, v, T",
        max_over(&inner, |z| {
            let lu = laplacian(&|w| s.f(w).re, z, 1e-3);
            let lv = laplacian(&|w| s.f(w).im, z, 1e-3);
            let lt = laplacian(&|w| s.height(w), z, 1e-3);
            lu.abs().max(lv.abs()).max(lt.abs())
        }),
        1e-4,
    ));
    out.push(Check::within(
        "f against Poisson quadrature",
        max_over(&pts[..8], |z| {
            (s.f(z) - harmonic::poisson_oracle(&params, &geom, z, 512)).norm()
        }),
        1e-7,
    ));
    out.push(Check::within(
        "T against segment quadrature",
        max_over(&pts, |z| {
            (s.height(z) - harmonic::t_quadrature(&data, z, 64)).abs()
        }),
        1e-8,
    ));

    let zr = zero::locate_zero_on(&s)?;
    out.push(Check::within("zero residual", zr.residual, 1e-10));
    out.push(Check::new(
        "zero in predicted sector",
        zr.in_sector(1e-8),
        format!("arg {:.12}", zr.z_zero.arg()),
    ));
    for ray in Ray::ALL {
        let d = zero::monotonicity_diagnostic(&params, &geom, ray);
        out.push(Check::within(
            "A, B, C, D product forms",
            d.factorization_defect(),
            1e-12,
        ));
        if let Some(sign) = zero::expected_sign(s.case, ray) {
            out.push(Check::new(
                "tangent monotonicity sign",
                d.sign_pq == sign,
                format!("ray {}: {} (expected {})", ray.as_str(), d.sign_pq, sign),
            ));
        }
    }

    let report = curvature::report_for(&s, &zr);
    let sk = curvature::re_za_sign(&params, zr.z_zero, data.a);
    out.push(Check::within(
        "Re(z conj a) polar form",
        (sk.polar - sk.re_za).abs(),
        1e-12,
    ));
    if let Some(ok) = sk.t0_in_quadrant {
        out.push(Check::new(
            "arg z in predicted quadrant",
            ok,
            format!("t0 {:.12}", sk.t0),
        ));
    }
    let v = report.violations();
    out.push(Check::new(
        "curvature report invariants",
        v.is_empty(),
        v.join("; "),
    ));
    out.push(Check::within(
        "reduced curvature form",
        (report.k_reduced - report.k).abs() / report.k.abs(),
        1e-9,
    ));
    out.push(Check::new(
        "bound chain",
        report.abs_k() <= HEINZ_CONSTANT * report.bound_factor * (1.0 + 1e-9)
            && report.bound_factor <= 1.0 + 1e-12,
        format!("factor {:.12}", report.bound_factor),
    ));
    if let Ok(refl) = params.reflected() {
        if let Ok(other) = curvature::curvature_at_zero(&refl) {
            out.push(Check::within(
                "reflection invariance of K",
                (other.k - report.k).abs() / report.k.abs(),
                1e-9,
            ));
        }
    }
    Ok(out)
}

/// Checks over a whole sweep.
pub fn verify_sweep(spec: &SweepSpec) -> Result<Vec<Check>> {
    let res = sweep::sweep_region(spec)?;
    Ok(vec![
        Check::new(
            "sweep rows",
            !res.rows.is_empty(),
            format!("{} rows", res.rows.len()),
        ),
        Check::new(
            "sweep failures",
            res.failures.is_empty(),
            format!("{}", res.failures.len()),
        ),
        Check::new(
            "sweep violations",
            res.violations == 0,
            format!("{}", res.violations),
        ),
        Check::new(
            "sweep bound",
            res.max_abs_k <= HEINZ_CONSTANT + 1e-9,
            format!(
                "max |K| {:.12} at ({:.6}, {:.6})",
                res.max_abs_k, res.argmax.0, res.argmax.1
            ),
        ),
    ])
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
