//! C interface to the `scherk` crate.
//!
//! Surfaces are opaque handles created by [`scherk_surface_new`] and released by
//! [`scherk_surface_free`]. Every fallible call returns a [`ScherkStatus`] and writes
//! its result through an out-pointer, which is left untouched on failure.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use scherk::curvature;
use scherk::export::{self, MeshSpec};
use scherk::num_complex::Complex64;
use scherk::params::{self, CaseLabel};
use scherk::surface::Surface;
use scherk::zero;
use scherk::ScherkError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScherkStatus {
    Ok = 0,
    NullPointer = 1,
    /// Parameters outside the admissible region, or an invalid argument.
    Domain = 2,
    /// The zero locator did not converge.
    Convergence = 3,
    Degenerate = 4,
    Io = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScherkCase {
    A = 0,
    B = 1,
    C = 2,
    D = 3,
    TrapezoidQ2P = 4,
    TrapezoidQPi = 5,
    Center = 6,
}

impl From<CaseLabel> for ScherkCase {
    fn from(c: CaseLabel) -> Self {
        match c {
            CaseLabel::A => ScherkCase::A,
            CaseLabel::B => ScherkCase::B,
            CaseLabel::C => ScherkCase::C,
            CaseLabel::D => ScherkCase::D,
            CaseLabel::BoundaryTrapezoidQ2P => ScherkCase::TrapezoidQ2P,
            CaseLabel::BoundaryTrapezoidQPi => ScherkCase::TrapezoidQPi,
            CaseLabel::Center => ScherkCase::Center,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ScherkComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ScherkComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScherkGeometry {
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub alpha: f64,
    pub x: f64,
    pub y: f64,
    pub s: f64,
    pub case_label: ScherkCase,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScherkWeierstrass {
    pub a: ScherkComplex,
    pub b: ScherkComplex,
    pub theta: f64,
}

/// Point `(u, v, T)` of the surface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScherkPoint {
    pub u: f64,
    pub v: f64,
    pub t: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScherkCurvature {
    pub z_zero: ScherkComplex,
    pub residual: f64,
    pub k: f64,
    pub k_cross: f64,
    pub re_za: f64,
    pub bound_margin: f64,
}

/// Opaque handle to one surface of the family.
pub struct ScherkSurface {
    inner: Surface,
}

fn status_of(e: &ScherkError) -> ScherkStatus {
    match e {
        ScherkError::Domain(_) => ScherkStatus::Domain,
        ScherkError::Degenerate(_) | ScherkError::Pole(_) => ScherkStatus::Degenerate,
        ScherkError::Convergence(_) => ScherkStatus::Convergence,
        ScherkError::Io { .. } => ScherkStatus::Io,
    }
}

/// Runs `f` and converts errors and panics into status codes.
fn guard<F>(f: F) -> ScherkStatus
where
    F: FnOnce() -> Result<(), ScherkStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ScherkStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => ScherkStatus::Internal,
    }
}

fn lift<T>(r: scherk::Result<T>) -> Result<T, ScherkStatus> {
    r.map_err(|e| status_of(&e))
}

unsafe fn surface_ref<'a>(s: *const ScherkSurface) -> Result<&'a Surface, ScherkStatus> {
    s.as_ref()
        .map(|s| &s.inner)
        .ok_or(ScherkStatus::NullPointer)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), ScherkStatus> {
    if out.is_null() {
        return Err(ScherkStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn scherk_status_message(status: ScherkStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        ScherkStatus::Ok => c"ok",
        ScherkStatus::NullPointer => c"null pointer argument",
        ScherkStatus::Domain => c"parameters outside region R or invalid argument",
        ScherkStatus::Convergence => c"zero locator did not converge",
        ScherkStatus::Degenerate => c"degenerate configuration",
        ScherkStatus::Io => c"i/o error",
        ScherkStatus::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// Whether `(p, q)` lies in the admissible region.
#[no_mangle]
pub extern "C" fn scherk_in_region(p: f64, q: f64) -> bool {
    catch_unwind(|| params::in_region(p, q)).unwrap_or(false)
}

/// `pi^2 / (2 R^2)`.
///
/// # Safety
/// `out` must be null or point to writable memory for one `double`.
#[no_mangle]
pub unsafe extern "C" fn scherk_heinz_bound(radius: f64, out: *mut f64) -> ScherkStatus {
    guard(|| {
        let b = lift(curvature::heinz_bound(radius))?;
        write_out(out, b.bound)
    })
}

/// Creates a surface. On success `*out` holds a handle owned by the caller.
///
/// # Safety
/// `out` must be null or point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn scherk_surface_new(
    p: f64,
    q: f64,
    out: *mut *mut ScherkSurface,
) -> ScherkStatus {
    guard(|| {
        if out.is_null() {
            return Err(ScherkStatus::NullPointer);
        }
        let inner = lift(Surface::new(p, q))?;
        out.write(Box::into_raw(Box::new(ScherkSurface { inner })));
        Ok(())
    })
}

/// Releases a handle. Null is accepted.
///
/// # Safety
/// `surface` must be null or a handle from [`scherk_surface_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn scherk_surface_free(surface: *mut ScherkSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// # Safety
/// `surface` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn scherk_surface_geometry(
    surface: *const ScherkSurface,
    out: *mut ScherkGeometry,
) -> ScherkStatus {
    guard(|| {
        let s = surface_ref(surface)?;
        let g = &s.geom;
        write_out(
            out,
            ScherkGeometry {
                p: g.p,
                q: g.q,
                beta: g.beta,
                alpha: g.alpha,
                x: g.x,
                y: g.y,
                s: g.s,
                case_label: s.case.into(),
            },
        )
    })
}

/// # Safety
/// `surface` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn scherk_surface_weierstrass(
    surface: *const ScherkSurface,
    out: *mut ScherkWeierstrass,
) -> ScherkStatus {
    guard(|| {
        let s = surface_ref(surface)?;
        write_out(
            out,
            ScherkWeierstrass {
                a: s.data.a.into(),
                b: s.data.b.into(),
                theta: s.data.theta,
            },
        )
    })
}

/// Evaluates the surface over the parameter `z = re + i im`, `|z| < 1`.
///
/// # Safety
/// `surface` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn scherk_surface_eval(
    surface: *const ScherkSurface,
    re: f64,
    im: f64,
    out: *mut ScherkPoint,
) -> ScherkStatus {
    guard(|| {
        let s = surface_ref(surface)?;
        let pt = lift(s.point(Complex64::new(re, im)))?;
        write_out(
            out,
            ScherkPoint {
                u: pt.u,
                v: pt.v,
                t: pt.t,
            },
        )
    })
}

/// Locates the preimage of the origin and evaluates the curvature there.
///
/// # Safety
/// `surface` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn scherk_surface_curvature(
    surface: *const ScherkSurface,
    out: *mut ScherkCurvature,
) -> ScherkStatus {
    guard(|| {
        let s = surface_ref(surface)?;
        let z = lift(zero::locate_zero_on(s))?;
        let r = curvature::report_for(s, &z);
        write_out(
            out,
            ScherkCurvature {
                z_zero: r.z_zero.into(),
                residual: r.residual,
                k: r.k,
                k_cross: r.k_cross,
                re_za: r.re_za,
                bound_margin: r.bound_margin,
            },
        )
    })
}

/// Writes the triangle mesh of the surface to the UTF-8 path `path`.
///
/// # Safety
/// `surface` must be a live handle or null; `path` must be null or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn scherk_write_mesh(
    surface: *const ScherkSurface,
    n_r: usize,
    n_t: usize,
    r_max: f64,
    path: *const c_char,
) -> ScherkStatus {
    guard(|| {
        let s = surface_ref(surface)?;
        if path.is_null() {
            return Err(ScherkStatus::NullPointer);
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| ScherkStatus::Domain)?;
        let spec = lift(MeshSpec::new(n_r, n_t, r_max))?;
        lift(export::write_mesh(s, &spec, Path::new(path)))?;
        Ok(())
    })
}
