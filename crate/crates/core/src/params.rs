//! Parameter validation, quadrilateral geometry and case classification.
//!
//! A surface of the family is fixed by two angles `(p, q)`. The vertex
//! angles of the image quadrilateral follow from the bicentric condition,
//! which pins down an auxiliary angle `beta`; the conformal modulus of the
//! domain partition is carried by `alpha`.

use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Result, ScherkError};

/// Tolerance in angle space for degeneracy and classification boundaries.
pub const ANGLE_TOL: f64 = 1e-10;

/// Slack used when checking the vertex ordering chain.
const ORDER_SLACK: f64 = 1e-12;

/// The pair of angles parametrizing one surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScherkParams {
    p: f64,
    q: f64,
}

impl ScherkParams {
    /// Validates `0 < p < q`, `q - p < pi`, `sin p > 0`, `sin(q - p) > 0`.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(ScherkError::Domain(format!(
                "non-finite angles p={p}, q={q}"
            )));
        }
        if p <= 0.0 {
            return Err(ScherkError::Domain(format!("p must be positive, got {p}")));
        }
        if q < p {
            return Err(ScherkError::Domain(format!(
                "need p <= q, got p={p}, q={q}"
            )));
        }
        if q - p >= PI {
            return Err(ScherkError::Domain(format!(
                "need q - p < pi, got {}",
                q - p
            )));
        }
        if p.sin() <= 0.0 || (q - p).sin() <= 0.0 {
            return Err(ScherkError::Domain(format!(
                "need sin p > 0 and sin(q - p) > 0, got {} and {}",
                p.sin(),
                (q - p).sin()
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `sin p * sin(q - p)`, the radicand shared by most closed forms.
    pub fn sin_product(&self) -> f64 {
        self.p.sin() * (self.q - self.p).sin()
    }

    /// The pair `(q - p, q)`, which swaps `sin p` and `sin(q - p)`.
    pub fn reflected(&self) -> Result<Self> {
        Self::new(self.q - self.p, self.q)
    }
}

/// Derived angles and vertices of the bicentric quadrilateral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadGeometry {
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub alpha: f64,
    pub cos_alpha: f64,
    pub sin_alpha: f64,
    pub x: f64,
    pub y: f64,
    pub s: f64,
    /// `(e^{ip}, e^{ix}, e^{iy}, e^{is})`, counterclockwise.
    pub vertices: [Complex64; 4],
}

impl QuadGeometry {
    /// Vertex angles in cyclic order `(p, x, y, s)`.
    pub fn vertex_angles(&self) -> [f64; 4] {
        [self.p, self.x, self.y, self.s]
    }

    /// `p <= x <= y <= s <= 2 pi + p`.
    pub fn satisfies_vertex_order(&self) -> bool {
        let chain = [self.p, self.x, self.y, self.s, TAU + self.p];
        chain.windows(2).all(|w| w[0] <= w[1] + ORDER_SLACK)
    }

    /// `|V1 - V2| + |V3 - V4| - |V2 - V3| - |V4 - V1|`; zero for a bicentric quadrilateral.
    pub fn side_sum_defect(&self) -> f64 {
        let v = &self.vertices;
        (v[0] - v[1]).norm() + (v[2] - v[3]).norm() - (v[1] - v[2]).norm() - (v[3] - v[0]).norm()
    }
}

/// Which sector contains the preimage of the origin, by sign of `q - pi` and `q - 2p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// `q < pi`, `q < 2p`
    A,
    /// `q > pi`, `q > 2p`
    B,
    /// `pi < q < 2p`
    C,
    /// `2p < q < pi`
    D,
    /// `q = 2p`: the image is a trapezoid.
    BoundaryTrapezoidQ2P,
    /// `q = pi`: the image is a trapezoid.
    BoundaryTrapezoidQPi,
    /// `p = pi/2`, `q = pi`: the square.
    Center,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::A => "A",
            CaseLabel::B => "B",
            CaseLabel::C => "C",
            CaseLabel::D => "D",
            CaseLabel::BoundaryTrapezoidQ2P => "Q2P",
            CaseLabel::BoundaryTrapezoidQPi => "QPI",
            CaseLabel::Center => "CENTER",
        }
    }

    pub fn is_interior(&self) -> bool {
        matches!(
            self,
            CaseLabel::A | CaseLabel::B | CaseLabel::C | CaseLabel::D
        )
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn derive_geometry(params: &ScherkParams) -> Result<QuadGeometry> {
    let (p, q) = (params.p, params.q);
    let denom = (0.5 * q - p).cos();
    if denom.abs() < ANGLE_TOL {
        return Err(ScherkError::Degenerate(format!(
            "cos(q/2 - p) vanishes at p={p}, q={q}"
        )));
    }
    let beta = ((0.5 * q).sin() / denom).atan();

    let (sp, sqp) = (p.sin(), (q - p).sin());
    let cos_alpha = (sqp - sp) / (sqp + sp);
    let sin_alpha = 2.0 * (sp * sqp).sqrt() / (sp + sqp);
    let alpha = sin_alpha.atan2(cos_alpha);

    let x = q - p + 2.0 * beta;
    let y = TAU - p;
    let s = TAU - q + p + 2.0 * beta;
    let vertices = [p, x, y, s].map(|t| Complex64::from_polar(1.0, t));

    Ok(QuadGeometry {
        p,
        q,
        beta,
        alpha,
        cos_alpha,
        sin_alpha,
        x,
        y,
        s,
        vertices,
    })
}

/// Strict containment of the origin in the polygon with the given counterclockwise vertices.
pub fn polygon_contains_origin(vertices: &[Complex64; 4]) -> Result<bool> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if (vertices[i] - vertices[j]).norm() < ANGLE_TOL {
                return Err(ScherkError::Degenerate(format!(
                    "vertices {i} and {j} coincide"
                )));
            }
        }
    }
    Ok((0..4).all(|i| {
        let a = vertices[i];
        let b = vertices[(i + 1) % 4];
        // cross(b - a, 0 - a) > 0 means the origin is to the left of the edge.
        let e = b - a;
        e.re * (-a.im) - e.im * (-a.re) > 0.0
    }))
}

pub fn contains_origin(geom: &QuadGeometry) -> Result<bool> {
    polygon_contains_origin(&geom.vertices)
}

/// Membership in the admissible region R. Never fails; any violation yields `false`.
pub fn in_region(p: f64, q: f64) -> bool {
    let Ok(params) = ScherkParams::new(p, q) else {
        return false;
    };
    params_in_region(&params)
}

pub(crate) fn params_in_region(params: &ScherkParams) -> bool {
    match derive_geometry(params) {
        Ok(geom) => geom.satisfies_vertex_order() && contains_origin(&geom).unwrap_or(false),
        Err(_) => false,
    }
}

pub fn classify_case(params: &ScherkParams) -> Result<CaseLabel> {
    if !params_in_region(params) {
        return Err(ScherkError::Domain(format!(
            "(p, q) = ({}, {}) is outside region R",
            params.p, params.q
        )));
    }
    Ok(classify_unchecked(params.p, params.q))
}

pub(crate) fn classify_unchecked(p: f64, q: f64) -> CaseLabel {
    let d2p = q - 2.0 * p;
    let dpi = q - PI;
    let on_2p = d2p.abs() < ANGLE_TOL;
    let on_pi = dpi.abs() < ANGLE_TOL;
    match (on_2p, on_pi) {
        (true, true) => CaseLabel::Center,
        (true, false) => CaseLabel::BoundaryTrapezoidQ2P,
        (false, true) => CaseLabel::BoundaryTrapezoidQPi,
        (false, false) => match (dpi < 0.0, d2p < 0.0) {
            (true, true) => CaseLabel::A,
            (false, false) => CaseLabel::B,
            (false, true) => CaseLabel::C,
            (true, false) => CaseLabel::D,
        },
    }
}
