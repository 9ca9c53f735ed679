//! One member of the family with everything derived from `(p, q)` cached.

use num_complex::Complex64;

use crate::error::{Result, ScherkError};
use crate::harmonic::{self, SurfacePoint};
use crate::params::{self, CaseLabel, QuadGeometry, ScherkParams};
use crate::weierstrass::{self, WeierstrassData};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Surface {
    pub params: ScherkParams,
    pub geom: QuadGeometry,
    pub data: WeierstrassData,
    pub case: CaseLabel,
}

impl Surface {
    /// Validates membership in the admissible region and derives all data.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        let params = ScherkParams::new(p, q)?;
        let case = params::classify_case(&params)?;
        let geom = params::derive_geometry(&params)?;
        let data = WeierstrassData::new(&params, &geom)?;
        Ok(Self {
            params,
            geom,
            data,
            case,
        })
    }

    /// The harmonic map `f = u + iv`.
    pub fn f(&self, z: Complex64) -> Complex64 {
        harmonic::f_from_geometry(&self.geom, z)
    }

    /// `f_z = h'`.
    pub fn f_z(&self, z: Complex64) -> Complex64 {
        weierstrass::p_fn(&self.data, z)
    }

    /// `f_zbar = conj(g') = conj(p q^2)`.
    pub fn f_zbar(&self, z: Complex64) -> Complex64 {
        (weierstrass::p_fn(&self.data, z) * weierstrass::dilatation(&self.data, z)).conj()
    }

    pub fn height(&self, z: Complex64) -> f64 {
        harmonic::t_closed(&self.data, z)
    }

    pub fn point(&self, z: Complex64) -> Result<SurfacePoint> {
        if z.norm() >= 1.0 {
            return Err(ScherkError::Domain(format!(
                "|z| = {} is not inside the disk",
                z.norm()
            )));
        }
        Ok(harmonic::surface_point(&self.geom, &self.data, z))
    }
}
