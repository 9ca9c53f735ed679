//! Mesh, polyline and report writers.

use std::f64::consts::{PI, TAU};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::curvature::CurvatureReport;
use crate::error::{Result, ScherkError};
use crate::fmt::format_g;
use crate::harmonic;
use crate::surface::Surface;

pub const QUAD_CSV_HEADER: &str = "series,index,x,y";
pub const CIRCLE_SAMPLES: usize = 256;
pub const CURVE_SAMPLES: usize = 64;
const MESH_DIGITS: usize = 9;

/// Polar grid over the disk of radius `r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeshSpec {
    pub n_r: usize,
    pub n_t: usize,
    pub r_max: f64,
}

impl Default for MeshSpec {
    fn default() -> Self {
        Self {
            n_r: 64,
            n_t: 128,
            r_max: 0.995,
        }
    }
}

impl MeshSpec {
    pub fn new(n_r: usize, n_t: usize, r_max: f64) -> Result<Self> {
        if n_r < 2 || n_t < 3 || !(r_max > 0.0 && r_max < 1.0) {
            return Err(ScherkError::Domain(format!(
                "mesh needs n_r >= 2, n_t >= 3, 0 < r_max < 1; got {n_r}, {n_t}, {r_max}"
            )));
        }
        Ok(Self { n_r, n_t, r_max })
    }

    pub fn radius(&self, j: usize) -> f64 {
        self.r_max * j as f64 / (self.n_r - 1) as f64
    }

    pub fn angle(&self, k: usize) -> f64 {
        TAU * k as f64 / self.n_t as f64
    }
}

/// Vertices and 1-based triangles of a surface mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 3]>,
}

/// Images `(u, v, T)` of the polar grid, rings outermost last. The centre ring is
/// kept at full size so every ring has `n_t` vertices; each grid quad becomes two
/// triangles.
pub fn build_mesh(surface: &Surface, spec: &MeshSpec) -> Mesh {
    let (n_r, n_t) = (spec.n_r, spec.n_t);
    let mut vertices = Vec::with_capacity(n_r * n_t);
    for j in 0..n_r {
        let r = spec.radius(j);
        for k in 0..n_t {
            let z = Complex64::from_polar(r, spec.angle(k));
            let f = surface.f(z);
            vertices.push([f.re, f.im, surface.height(z)]);
        }
    }
    let idx = |j: usize, k: usize| j * n_t + (k % n_t) + 1;
    let mut faces = Vec::with_capacity(2 * n_t * (n_r - 1));
    for j in 0..n_r - 1 {
        for k in 0..n_t {
            let (v00, v01) = (idx(j, k), idx(j, k + 1));
            let (v10, v11) = (idx(j + 1, k), idx(j + 1, k + 1));
            faces.push([v00, v10, v11]);
            faces.push([v00, v11, v01]);
        }
    }
    Mesh { vertices, faces }
}

pub fn write_mesh_to<W: Write>(mesh: &Mesh, w: &mut W) -> std::io::Result<()> {
    for v in &mesh.vertices {
        writeln!(
            w,
            "v {} {} {}",
            format_g(v[0], MESH_DIGITS),
            format_g(v[1], MESH_DIGITS),
            format_g(v[2], MESH_DIGITS)
        )?;
    }
    for f in &mesh.faces {
        writeln!(w, "f {} {} {}", f[0], f[1], f[2])?;
    }
    Ok(())
}

pub fn write_mesh(surface: &Surface, spec: &MeshSpec, path: &Path) -> Result<Mesh> {
    let mesh = build_mesh(surface, spec);
    write_file(path, |w| write_mesh_to(&mesh, w))?;
    Ok(mesh)
}

/// One row of the quadrilateral table.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRow {
    pub series: String,
    pub index: usize,
    pub point: Complex64,
}

/// The closed vertex polyline, the unit circle and the images of the four rays
/// through the jump points, sampled at `CURVE_SAMPLES` radii up to `r_max`.
pub fn quad_rows(surface: &Surface, r_max: f64) -> Vec<QuadRow> {
    let mut rows = Vec::new();
    let v = surface.geom.vertices;
    for (i, z) in v.iter().chain(std::iter::once(&v[0])).enumerate() {
        rows.push(QuadRow {
            series: "quad".into(),
            index: i,
            point: *z,
        });
    }
    for i in 0..CIRCLE_SAMPLES {
        rows.push(QuadRow {
            series: "circle".into(),
            index: i,
            point: Complex64::from_polar(1.0, TAU * i as f64 / CIRCLE_SAMPLES as f64),
        });
    }
    let alpha = surface.geom.alpha;
    for (c, phi) in [0.0, alpha, PI, PI + alpha].into_iter().enumerate() {
        for i in 0..CURVE_SAMPLES {
            let r = r_max * i as f64 / (CURVE_SAMPLES - 1) as f64;
            rows.push(QuadRow {
                series: format!("curve_{}", c + 1),
                index: i,
                point: surface.f(Complex64::from_polar(r, phi)),
            });
        }
    }
    rows
}

pub fn write_quad_to<W: Write>(rows: &[QuadRow], w: &mut W) -> std::io::Result<()> {
    writeln!(w, "{QUAD_CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{}",
            r.series,
            r.index,
            format_g(r.point.re, 12),
            format_g(r.point.im, 12)
        )?;
    }
    Ok(())
}

pub fn write_quad(surface: &Surface, r_max: f64, path: &Path) -> Result<Vec<QuadRow>> {
    let rows = quad_rows(surface, r_max);
    write_file(path, |w| write_quad_to(&rows, w))?;
    Ok(rows)
}

fn write_file<F>(path: &Path, body: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
{
    let file = File::create(path).map_err(|e| ScherkError::io(path, e))?;
    let mut w = BufWriter::new(file);
    body(&mut w).map_err(|e| ScherkError::io(path, e))?;
    w.flush().map_err(|e| ScherkError::io(path, e))
}

fn cjson(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

/// Structured report with a fixed key set.
pub fn report_json(surface: &Surface, report: &CurvatureReport) -> Value {
    let g = &surface.geom;
    json!({
        "p": report.p,
        "q": report.q,
        "beta": report.beta,
        "alpha": report.alpha,
        "x": g.x,
        "y": g.y,
        "s": g.s,
        "a": cjson(report.a),
        "b": cjson(report.b),
        "theta": report.theta,
        "f0": cjson(harmonic::f_at_origin(g)),
        "z_zero": cjson(report.z_zero),
        "residual": report.residual,
        "K": report.k,
        "K_cross": report.k_cross,
        "K_reduced": report.k_reduced,
        "K_reduced_alt": report.k_reduced_alt,
        "re_za": report.re_za,
        "bound_margin": report.bound_margin,
        "case": report.case.as_str(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn smallest_mesh_counts() {
        let s = Surface::new(FRAC_PI_2 + 0.1, PI - 0.1).unwrap();
        let mesh = build_mesh(&s, &MeshSpec::new(2, 3, 0.5).unwrap());
        assert_eq!(mesh.vertices.len(), 6);
        assert_eq!(mesh.faces.len(), 6);
        assert!(mesh.faces.iter().flatten().all(|&i| (1..=6).contains(&i)));
        let mut buf = Vec::new();
        write_mesh_to(&mesh, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 6);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 6);
        assert!(text.ends_with('\n') && !text.contains('\r'));
    }

    #[test]
    fn mesh_spec_validation() {
        assert!(MeshSpec::new(1, 3, 0.5).is_err());
        assert!(MeshSpec::new(2, 2, 0.5).is_err());
        assert!(MeshSpec::new(2, 3, 1.0).is_err());
        assert!(MeshSpec::new(2, 3, 0.0).is_err());
    }

    #[test]
    fn square_quad_rows() {
        let s = Surface::new(FRAC_PI_2, PI).unwrap();
        let rows = quad_rows(&s, 0.995);
        assert_eq!(rows.len(), 5 + CIRCLE_SAMPLES + 4 * CURVE_SAMPLES);
        let corners = [(0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 0.0), (0.0, 1.0)];
        for (r, (x, y)) in rows.iter().zip(corners) {
            assert_eq!(r.series, "quad");
            assert!((r.point - Complex64::new(x, y)).norm() < 1e-15);
        }
        for c in 1..=4 {
            let first = rows
                .iter()
                .find(|r| r.series == format!("curve_{c}"))
                .unwrap();
            assert_eq!(first.index, 0);
            assert!(first.point.norm() < 1e-15);
        }
    }

    #[test]
    fn report_keys() {
        let s = Surface::new(FRAC_PI_2 + 0.1, PI - 0.1).unwrap();
        let z = crate::zero::locate_zero_on(&s).unwrap();
        let r = crate::curvature::report_for(&s, &z);
        let v = report_json(&s, &r);
        for key in [
            "p",
            "q",
            "beta",
            "alpha",
            "a",
            "b",
            "theta",
            "z_zero",
            "K",
            "K_cross",
            "re_za",
            "bound_margin",
            "case",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["case"], "A");
    }
}
