//! Acceptance gate. Prints one line per criterion and exits non-zero if any fails.

mod common;

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use scherk::curvature::{self, CurvatureReport, HEINZ_CONSTANT};
use scherk::export::{self, MeshSpec};
use scherk::harmonic;
use scherk::moebius;
use scherk::num_complex::Complex64;
use scherk::params::{self, CaseLabel, ScherkParams};
use scherk::surface::Surface;
use scherk::sweep::{self, SweepSpec};
use scherk::weierstrass;
use scherk::zero::{self, Ray, ZeroResult};

const SEED: u64 = 0x5c4e_2b1d;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

struct Gate {
    failed: usize,
}

impl Gate {
    fn run(&mut self, id: &str, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let mut o = f();
        let took = start.elapsed();
        let timing = match limit {
            Some(l) => {
                if took > l {
                    o.passed = false;
                }
                format!("{:.3} s, limit {} s", took.as_secs_f64(), l.as_secs())
            }
            None => format!("{:.3} s", took.as_secs_f64()),
        };
        if !o.passed {
            self.failed += 1;
        }
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("{id} {tag} {title}: {} [{timing}]", o.detail);
    }
}

/// One sampled parameter pair with its surface, zero and report.
struct Sampled {
    surface: Surface,
    zero: ZeroResult,
    report: CurvatureReport,
}

fn sample() -> Vec<Result<Sampled, String>> {
    let mut pts: Vec<(f64, f64)> = common::CASE_SAMPLES.to_vec();
    pts.extend(common::region_sample(500));
    pts.into_iter()
        .map(|(p, q)| {
            let s = Surface::new(p, q).map_err(|e| format!("({p}, {q}): {e}"))?;
            let z = zero::locate_zero_on(&s).map_err(|e| format!("({p}, {q}): {e}"))?;
            let report = curvature::report_for(&s, &z);
            Ok(Sampled {
                surface: s,
                zero: z,
                report,
            })
        })
        .collect()
}

fn random_params(rng: &mut ChaCha8Rng, n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = rng.gen_range(0.0..PI);
        let q = p + rng.gen_range(0.0..PI);
        if params::in_region(p, q) {
            out.push((p, q));
        }
    }
    out
}

fn random_points(rng: &mut ChaCha8Rng, n: usize, r_max: f64) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            // uniform in area
            let r = r_max * rng.gen_range(0.0f64..1.0).sqrt();
            Complex64::from_polar(r, rng.gen_range(0.0..TAU))
        })
        .collect()
}

fn ac1() -> Outcome {
    let r = match curvature::curvature_at_zero(&ScherkParams::new(FRAC_PI_2, PI).unwrap()) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let err = (r.k + HEINZ_CONSTANT).abs();
    outcome(
        err <= 1e-10,
        format!("K = {:.15}, |K + pi^2/2| = {err:.2e} (tol 1e-10)", r.k),
    )
}

fn ac2() -> Outcome {
    let spec = SweepSpec::new(200, 200).unwrap().with_refine(true);
    let res = match sweep::sweep_region(&spec) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let dist = (res.argmax.0 - FRAC_PI_2).hypot(res.argmax.1 - PI);
    let upper = res.max_abs_k <= HEINZ_CONSTANT + 1e-9;
    let lower = res.max_abs_k >= 0.999 * HEINZ_CONSTANT;
    outcome(
        upper && lower && dist <= 0.02 && res.failures.is_empty(),
        format!(
            "{} nodes + {} refined, max|K| = {:.12}, pi^2/2 - max|K| = {:.2e}, argmax ({:.6}, {:.6}) at distance {dist:.2e}, {} failures",
            res.rows.len(),
            res.refined.len(),
            res.max_abs_k,
            HEINZ_CONSTANT - res.max_abs_k,
            res.argmax.0,
            res.argmax.1,
            res.failures.len()
        ),
    )
}

fn ac3(samples: &[Result<Sampled, String>]) -> Outcome {
    let mut errors = Vec::new();
    let mut bad_sector = 0;
    let mut worst_residual: f64 = 0.0;
    let mut max_iter = 0;
    let mut fallbacks = 0;
    let mut seen = [false; 4];
    for s in samples {
        match s {
            Err(e) => errors.push(e.clone()),
            Ok(s) => {
                let f0 = s.surface.f(s.zero.z_zero).norm();
                worst_residual = worst_residual.max(f0);
                if !s.zero.in_sector(1e-8) {
                    bad_sector += 1;
                }
                max_iter = max_iter.max(s.zero.iterations);
                fallbacks += s.zero.used_fallback as usize;
                match s.surface.case {
                    CaseLabel::A => seen[0] = true,
                    CaseLabel::B => seen[1] = true,
                    CaseLabel::C => seen[2] = true,
                    CaseLabel::D => seen[3] = true,
                    _ => {}
                }
            }
        }
    }
    let all_cases = seen.iter().all(|&b| b);
    outcome(
        errors.is_empty() && bad_sector == 0 && worst_residual < 1e-10 && all_cases,
        format!(
            "{} samples, cases A-D covered: {all_cases}, outside sector: {bad_sector}, max |f(z0)| = {worst_residual:.2e} (tol 1e-10), max Newton steps {max_iter}, grid reseeds {fallbacks}, errors {}{}",
            samples.len(),
            errors.len(),
            errors.first().map(|e| format!(" (first: {e})")).unwrap_or_default()
        ),
    )
}

fn reports(samples: &[Result<Sampled, String>]) -> impl Iterator<Item = &CurvatureReport> {
    samples
        .iter()
        .filter_map(|s| s.as_ref().ok())
        .map(|s| &s.report)
}

fn ac4(samples: &[Result<Sampled, String>]) -> Outcome {
    let worst = reports(samples)
        .map(|r| r.re_za)
        .fold(f64::NEG_INFINITY, f64::max);
    outcome(
        worst <= 1e-12,
        format!("max Re(z0 conj a) = {worst:.3e} (tol 1e-12)"),
    )
}

fn ac5(samples: &[Result<Sampled, String>]) -> Outcome {
    let worst = reports(samples)
        .map(|r| r.cross_defect())
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-9,
        format!("max relative |K - K_cross| = {worst:.2e} (tol 1e-9)"),
    )
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut worst_f, mut worst_t): (f64, f64) = (0.0, 0.0);
    for (p, q) in random_params(&mut rng, 20) {
        let s = Surface::new(p, q).unwrap();
        for z in random_points(&mut rng, 20, 0.9) {
            let fq = harmonic::poisson_oracle(&s.params, &s.geom, z, 512);
            worst_f = worst_f.max((s.f(z) - fq).norm());
            let tq = harmonic::t_quadrature(&s.data, z, 64);
            worst_t = worst_t.max((s.height(z) - tq).abs());
        }
    }
    outcome(
        worst_f <= 1e-7 && worst_t <= 1e-8,
        format!("400 points, max |f - Poisson| = {worst_f:.2e} (tol 1e-7), max |T - quadrature| = {worst_t:.2e} (tol 1e-8)"),
    )
}

fn wirtinger(s: &Surface, z: Complex64, h: f64) -> (Complex64, Complex64) {
    let ih = Complex64::new(0.0, h);
    let fx = (s.f(z + h) - s.f(z - h)) / (2.0 * h);
    let fy = (s.f(z + ih) - s.f(z - ih)) / (2.0 * h);
    let i = Complex64::i();
    (0.5 * (fx - i * fy), 0.5 * (fx + i * fy))
}

fn laplacian(f: impl Fn(Complex64) -> f64, z: Complex64, h: f64) -> f64 {
    let ih = Complex64::new(0.0, h);
    (f(z + h) + f(z - h) + f(z + ih) + f(z - ih) - 4.0 * f(z)) / (h * h)
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let (mut iso, mut belt, mut lap): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for (p, q) in random_params(&mut rng, 20) {
        let s = Surface::new(p, q).unwrap();
        for z in random_points(&mut rng, 20, 0.9) {
            let t = weierstrass::phi_triple(&s.data, z);
            let scale = t.phi1.norm_sqr() + t.phi2.norm_sqr() + t.phi3.norm_sqr();
            iso = iso.max(t.isotropy_defect().norm() / scale.max(1.0));
            let (fz, fzb) = wirtinger(&s, z, 1e-5);
            belt = belt.max((fzb.conj() - weierstrass::dilatation(&s.data, z) * fz).norm());
        }
        for z in random_points(&mut rng, 20, 0.7) {
            let h = 1e-3;
            let lu = laplacian(|w| s.f(w).re, z, h);
            let lv = laplacian(|w| s.f(w).im, z, h);
            let lt = laplacian(|w| s.height(w), z, h);
            lap = lap.max(lu.abs()).max(lv.abs()).max(lt.abs());
        }
    }
    outcome(
        iso <= 1e-12 && belt < 1e-6 && lap < 1e-4,
        format!("isotropy {iso:.2e} (tol 1e-12), Beltrami {belt:.2e} (tol 1e-6), Laplacian {lap:.2e} (tol 1e-4)"),
    )
}

fn ac8(samples: &[Result<Sampled, String>]) -> Outcome {
    let mut worst = [0.0f64; 4];
    let mut errors = 0;
    for s in samples.iter().filter_map(|s| s.as_ref().ok()) {
        let (params, geom, data) = (&s.surface.params, &s.surface.geom, &s.surface.data);
        let checks = (|| -> scherk::Result<[f64; 4]> {
            Ok([
                (weierstrass::a_modulus(params)? - data.a.norm()).abs(),
                (weierstrass::b_modulus_sq(params)? - data.b.norm_sqr()).abs(),
                (weierstrass::h_prime_linear_coefficient(geom) + 2.0 * data.a.conj() * data.b)
                    .norm(),
                (moebius::build_moebius(params, geom)?.zero_of()?
                    - weierstrass::compute_a(params)?)
                .norm(),
            ])
        })();
        match checks {
            Ok(c) => {
                for (w, v) in worst.iter_mut().zip(c) {
                    *w = w.max(v);
                }
            }
            Err(_) => errors += 1,
        }
    }
    outcome(
        errors == 0 && worst.iter().all(|&w| w <= 1e-10),
        format!(
            "|a| {:.2e}, |b|^2 {:.2e}, linear coefficient {:.2e}, Moebius zero {:.2e} (tol 1e-10), errors {errors}",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

fn ac9() -> Outcome {
    let table = [
        (CaseLabel::A, Ray::Alpha),
        (CaseLabel::A, Ray::Pi),
        (CaseLabel::B, Ray::Zero),
        (CaseLabel::B, Ray::PiPlusAlpha),
        (CaseLabel::C, Ray::Pi),
        (CaseLabel::C, Ray::PiPlusAlpha),
        (CaseLabel::D, Ray::Zero),
        (CaseLabel::D, Ray::Alpha),
    ];
    let mut matched = 0;
    let mut misses = Vec::new();
    for (case, ray) in table {
        let idx = [CaseLabel::A, CaseLabel::B, CaseLabel::C, CaseLabel::D]
            .iter()
            .position(|&c| c == case)
            .unwrap();
        let (p, q) = common::CASE_SAMPLES[idx];
        let s = Surface::new(p, q).unwrap();
        let d = zero::monotonicity_diagnostic(&s.params, &s.geom, ray);
        match zero::expected_sign(case, ray) {
            Some(sign) if s.case == case && d.sign_pq == sign => matched += 1,
            other => misses.push(format!(
                "{case:?}/{}: got {} expected {other:?}",
                ray.as_str(),
                d.sign_pq
            )),
        }
    }
    outcome(
        matched == table.len(),
        format!(
            "{matched}/{} sign facts match{}",
            table.len(),
            if misses.is_empty() {
                String::new()
            } else {
                format!(" ({})", misses.join(", "))
            }
        ),
    )
}

fn ac10() -> Outcome {
    let s = Surface::new(FRAC_PI_2 + 0.1, PI - 0.1).unwrap();
    let dir = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mesh = match export::write_mesh(&s, &MeshSpec::default(), &dir.path().join("surface.obj")) {
        Ok(m) => m,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mesh_ok = mesh
        .vertices
        .iter()
        .all(|v| v.iter().all(|x| x.is_finite()) && v[0].hypot(v[1]) < 1.0);
    let rows = match export::write_quad(&s, 0.995, &dir.path().join("quad.csv")) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let quad_ok = rows
        .iter()
        .all(|r| r.point.re.is_finite() && r.point.im.is_finite() && r.point.norm() <= 1.0 + 1e-12);
    let f0 = harmonic::f_at_origin(&s.geom);
    let shared = (1..=4).all(|c| {
        let name = format!("curve_{c}");
        rows.iter()
            .find(|r| r.series == name)
            .map(|r| (r.point - f0).norm() < 1e-14)
            .unwrap_or(false)
    });
    outcome(
        mesh_ok && quad_ok && shared,
        format!(
            "{} vertices / {} faces finite and in disk: {mesh_ok}, {} quad rows finite and in disk: {quad_ok}, curves share f(0): {shared}",
            mesh.vertices.len(),
            mesh.faces.len(),
            rows.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    gate.run(
        "AC1",
        "extremal value at the square",
        Some(Duration::from_secs(1)),
        ac1,
    );
    gate.run(
        "AC2",
        "global bound on a refined 200x200 grid",
        Some(Duration::from_secs(60)),
        ac2,
    );

    let start = Instant::now();
    let samples = sample();
    let sample_time = start.elapsed();
    gate.run(
        "AC3",
        "zero localization",
        Some(Duration::from_secs(120).saturating_sub(sample_time)),
        || ac3(&samples),
    );
    gate.run("AC4", "sign condition", None, || ac4(&samples));
    gate.run("AC5", "cross-formula curvature", None, || ac5(&samples));
    gate.run("AC6", "oracle equivalence", None, ac6);
    gate.run("AC7", "analytic structure", None, ac7);
    gate.run("AC8", "formula consistency", None, || ac8(&samples));
    gate.run("AC9", "monotonicity sign table", None, ac9);
    gate.run("AC10", "mesh and quadrilateral outputs", None, ac10);

    println!(
        "acceptance: {} of 10 criteria passed (sample built in {:.3} s)",
        10 - gate.failed,
        sample_time.as_secs_f64()
    );
    if gate.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
