#![allow(dead_code)]

use std::f64::consts::PI;

use scherk::params::in_region;

/// Radical inverse of `i` in base `b`.
fn halton(mut i: usize, b: usize) -> f64 {
    let (mut f, mut r) = (1.0, 0.0);
    while i > 0 {
        f /= b as f64;
        r += f * (i % b) as f64;
        i /= b;
    }
    r
}

/// The first `n` points of the region from a 2-3 Halton sequence over the
/// `(p, q - p)` box.
pub fn region_sample(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let mut i = 1;
    while out.len() < n {
        let p = PI * halton(i, 2);
        let q = p + PI * halton(i, 3);
        if in_region(p, q) {
            out.push((p, q));
        }
        i += 1;
    }
    out
}

/// One interior representative per case, in the order A, B, C, D.
pub const CASE_SAMPLES: [(f64, f64); 4] = [
    (std::f64::consts::FRAC_PI_2 + 0.1, PI - 0.1),
    (1.2, 3.5),
    (1.9, 3.3),
    (1.0, 2.6),
];
