//! Grid sweep of the admissible region and the CSV table of curvature reports.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::curvature::{self, CurvatureReport};
use crate::error::{Result, ScherkError};
use crate::params;
use crate::surface::Surface;
use crate::zero;

pub const CSV_HEADER: &str =
    "p,q,beta,alpha,re_zzero,im_zzero,re_a,im_a,absK,bound_margin,re_za,case";

const REFINE_ROUNDS: usize = 3;
const REFINE_N: usize = 10;
const REFINE_SHRINK: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSpec {
    pub p_steps: usize,
    pub q_steps: usize,
    /// Skip nodes outside the region instead of recording them as failures.
    pub r_filter: bool,
    pub refine: bool,
}

impl SweepSpec {
    pub fn new(p_steps: usize, q_steps: usize) -> Result<Self> {
        let spec = Self {
            p_steps,
            q_steps,
            r_filter: true,
            refine: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_refine(mut self, refine: bool) -> Self {
        self.refine = refine;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.p_steps < 8 || self.q_steps < 8 {
            return Err(ScherkError::Domain(format!(
                "sweep needs at least 8 steps per axis, got {}x{}",
                self.p_steps, self.q_steps
            )));
        }
        Ok(())
    }

    /// Cell-centred nodes in row-major order: `p` outer, `q - p` inner.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.p_steps * self.q_steps);
        for i in 0..self.p_steps {
            let p = PI * (i as f64 + 0.5) / self.p_steps as f64;
            for j in 0..self.q_steps {
                out.push((p, p + PI * (j as f64 + 0.5) / self.q_steps as f64));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepFailure {
    pub p: f64,
    pub q: f64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// One report per in-region grid node, row-major.
    pub rows: Vec<CurvatureReport>,
    /// Reports from the local refinement rounds.
    pub refined: Vec<CurvatureReport>,
    pub max_abs_k: f64,
    pub argmax: (f64, f64),
    /// Reports breaking an invariant.
    pub violations: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepResult {
    pub fn empty() -> Self {
        Self {
            rows: Vec::new(),
            refined: Vec::new(),
            max_abs_k: 0.0,
            argmax: (f64::NAN, f64::NAN),
            violations: 0,
            failures: Vec::new(),
        }
    }
}

fn evaluate(p: f64, q: f64) -> Result<CurvatureReport> {
    let s = Surface::new(p, q)?;
    let z = zero::locate_zero_on(&s)?;
    Ok(curvature::report_for(&s, &z))
}

/// Evaluates the nodes in parallel; results keep the input order.
fn evaluate_all(nodes: &[(f64, f64)], r_filter: bool) -> (Vec<CurvatureReport>, Vec<SweepFailure>) {
    let outcomes: Vec<Option<std::result::Result<CurvatureReport, SweepFailure>>> = nodes
        .par_iter()
        .map(|&(p, q)| {
            if r_filter && !params::in_region(p, q) {
                return None;
            }
            Some(evaluate(p, q).map_err(|e| SweepFailure {
                p,
                q,
                message: e.to_string(),
            }))
        })
        .collect();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for o in outcomes.into_iter().flatten() {
        match o {
            Ok(r) => rows.push(r),
            Err(f) => failures.push(f),
        }
    }
    (rows, failures)
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
}

pub fn sweep_region(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let (rows, mut failures) = evaluate_all(&spec.nodes(), spec.r_filter);
    let mut result = SweepResult::empty();
    let track = |r: &CurvatureReport, result: &mut SweepResult| {
        if !r.violations().is_empty() {
            result.violations += 1;
        }
        if r.abs_k() > result.max_abs_k {
            result.max_abs_k = r.abs_k();
            result.argmax = (r.p, r.q);
        }
    };
    for r in &rows {
        track(r, &mut result);
    }
    result.rows = rows;

    if spec.refine && !result.rows.is_empty() {
        let mut wp = PI / spec.p_steps as f64;
        let mut wq = PI / spec.q_steps as f64;
        for _ in 0..REFINE_ROUNDS {
            let (cp, cq) = result.argmax;
            let nodes: Vec<(f64, f64)> = linspace(cp - wp, cp + wp, REFINE_N)
                .flat_map(|p| linspace(cq - wq, cq + wq, REFINE_N).map(move |q| (p, q)))
                .collect();
            // Refinement windows may poke outside the region; those nodes are skipped.
            let (more, _) = evaluate_all(&nodes, true);
            for r in &more {
                track(r, &mut result);
            }
            result.refined.extend(more);
            wp /= REFINE_SHRINK;
            wq /= REFINE_SHRINK;
        }
    }
    result.failures.append(&mut failures);
    Ok(result)
}

/// Writes the grid rows with twelve digits after the decimal point.
pub fn export_csv(result: &SweepResult, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| ScherkError::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_csv(result, &mut w).map_err(|e| ScherkError::io(path, e))?;
    w.flush().map_err(|e| ScherkError::io(path, e))
}

pub fn write_csv<W: Write>(result: &SweepResult, w: &mut W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in &result.rows {
        writeln!(
            w,
            "{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{}",
            r.p,
            r.q,
            r.beta,
            r.alpha,
            r.z_zero.re,
            r.z_zero.im,
            r.a.re,
            r.a.im,
            r.abs_k(),
            r.bound_margin,
            r.re_za,
            r.case
        )?;
    }
    Ok(())
}
