pub mod curvature;
pub mod error;
pub mod export;
pub mod fmt;
pub mod harmonic;
pub mod moebius;
pub mod params;
pub mod quadrature;
pub mod surface;
pub mod sweep;
pub mod verify;
pub mod weierstrass;
pub mod zero;

pub use error::{Result, ScherkError};
pub use num_complex;
pub use params::{CaseLabel, QuadGeometry, ScherkParams};
pub use weierstrass::WeierstrassData;
