//! The disk automorphism sending `(1, e^{i alpha}, -1, -e^{i alpha})` to
//! `(1, e^{ip}, e^{iq}, -e^{i(q-p)})`.

use num_complex::Complex64;

use crate::error::{Result, ScherkError};
use crate::params::{QuadGeometry, ScherkParams};

const SINGULAR_TOL: f64 = 1e-14;

/// `z -> (n1 z + n0) / (d1 z + d0)`, scaled so that `d0 = 1` whenever `d0 != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    pub n1: Complex64,
    pub n0: Complex64,
    pub d1: Complex64,
    pub d0: Complex64,
}

impl MoebiusMap {
    pub fn identity() -> Self {
        Self::from_coefficients(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
        .expect("identity is nonsingular")
    }

    /// Normalizes and checks the determinant.
    pub fn from_coefficients(
        n1: Complex64,
        n0: Complex64,
        d1: Complex64,
        d0: Complex64,
    ) -> Result<Self> {
        let scale = n1.norm().max(n0.norm()).max(d1.norm()).max(d0.norm());
        if scale == 0.0 || !scale.is_finite() {
            return Err(ScherkError::Degenerate(
                "Moebius coefficients vanish".into(),
            ));
        }
        let det = n1 * d0 - n0 * d1;
        if det.norm() < SINGULAR_TOL * scale * scale {
            return Err(ScherkError::Degenerate(format!(
                "Moebius determinant {det} vanishes"
            )));
        }
        let k = if d0.norm() > SINGULAR_TOL * scale {
            d0
        } else {
            d1
        };
        Ok(Self {
            n1: n1 / k,
            n0: n0 / k,
            d1: d1 / k,
            d0: d0 / k,
        })
    }

    pub fn determinant(&self) -> Complex64 {
        self.n1 * self.d0 - self.n0 * self.d1
    }

    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        let den = self.d1 * z + self.d0;
        let scale = self.d1.norm() * z.norm() + self.d0.norm();
        if den.norm() <= SINGULAR_TOL * scale.max(1.0) {
            return Err(ScherkError::Pole(z));
        }
        Ok((self.n1 * z + self.n0) / den)
    }

    /// The point sent to the origin.
    pub fn zero_of(&self) -> Result<Complex64> {
        if self.n1.norm() < SINGULAR_TOL {
            return Err(ScherkError::Degenerate(
                "leading numerator coefficient vanishes".into(),
            ));
        }
        Ok(-self.n0 / self.n1)
    }
}

/// Builds M from the cross-ratio construction. With
/// `c1 = 2 / ((e^{ia}+1)(e^{iq}-1))` and `c2 = (e^{ia}-1) / ((e^{ia}+1)(e^{ip}-1))`,
/// `M(z) = 1 + (z - 1) / (c1 (z - e^{ia}) + c2 (z + 1))`.
pub fn build_moebius(params: &ScherkParams, geom: &QuadGeometry) -> Result<MoebiusMap> {
    let one = Complex64::new(1.0, 0.0);
    let ea = Complex64::from_polar(1.0, geom.alpha);
    let ep = Complex64::from_polar(1.0, params.p());
    let eq = Complex64::from_polar(1.0, params.q());
    let c1 = 2.0 / ((ea + one) * (eq - one));
    let c2 = (ea - one) / ((ea + one) * (ep - one));
    let d1 = c1 + c2;
    let d0 = c2 - c1 * ea;
    MoebiusMap::from_coefficients(d1 + one, d0 - one, d1, d0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::derive_geometry;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn map(p: f64, q: f64) -> MoebiusMap {
        let params = ScherkParams::new(p, q).unwrap();
        let geom = derive_geometry(&params).unwrap();
        build_moebius(&params, &geom).unwrap()
    }

    #[test]
    fn square_gives_identity() {
        let m = map(FRAC_PI_2, PI);
        let id = MoebiusMap::identity();
        for (a, b) in [(m.n1, id.n1), (m.n0, id.n0), (m.d1, id.d1), (m.d0, id.d0)] {
            assert!((a - b).norm() < 1e-15, "{a} vs {b}");
        }
    }

    #[test]
    fn anchors_are_mapped() {
        for (p, q) in [
            (FRAC_PI_2 + 0.1, PI - 0.1),
            (1.2, 3.5),
            (0.7, 2.0),
            (1.9, 3.3),
        ] {
            let params = ScherkParams::new(p, q).unwrap();
            let geom = derive_geometry(&params).unwrap();
            let m = build_moebius(&params, &geom).unwrap();
            let ea = Complex64::from_polar(1.0, geom.alpha);
            let pairs = [
                (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)),
                (ea, Complex64::from_polar(1.0, p)),
                (Complex64::new(-1.0, 0.0), Complex64::from_polar(1.0, q)),
                (-ea, -Complex64::from_polar(1.0, q - p)),
            ];
            for (z, w) in pairs {
                assert!((m.apply(z).unwrap() - w).norm() < 1e-12, "({p},{q}) at {z}");
            }
            assert!(m.apply(Complex64::new(0.0, 0.0)).unwrap().norm() < 1.0);
        }
    }

    #[test]
    fn apply_examples() {
        let z = Complex64::new(0.3, 0.4);
        assert_eq!(MoebiusMap::identity().apply(z).unwrap(), z);
        let a = Complex64::new(0.2, -0.5);
        let one = Complex64::new(1.0, 0.0);
        let m = MoebiusMap::from_coefficients(one, -a, -a.conj(), one).unwrap();
        assert!(m.apply(a).unwrap().norm() < 1e-16);
        assert!((m.zero_of().unwrap() - a).norm() < 1e-16);
    }

    #[test]
    fn pole_is_reported() {
        let a = Complex64::new(0.5, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let m = MoebiusMap::from_coefficients(one, -a, -a.conj(), one).unwrap();
        // pole at 1 / conj(a) = 2
        assert!(matches!(
            m.apply(Complex64::new(2.0, 0.0)),
            Err(ScherkError::Pole(_))
        ));
    }

    #[test]
    fn singular_map_rejected() {
        let one = Complex64::new(1.0, 0.0);
        assert!(matches!(
            MoebiusMap::from_coefficients(one, one, one, one),
            Err(ScherkError::Degenerate(_))
        ));
    }

    #[test]
    fn zero_for_equal_sines() {
        let m = map(PI / 3.0, 2.0 * PI / 3.0);
        let expected = Complex64::new(0.0, -(2.0 - 3f64.sqrt()));
        assert!((m.zero_of().unwrap() - expected).norm() < 1e-12);
        assert!(map(FRAC_PI_2, PI).zero_of().unwrap().norm() < 1e-15);
    }
}
