use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scherk::curvature;
use scherk::export::{self, MeshSpec};
use scherk::harmonic;
use scherk::surface::Surface;
use scherk::sweep::{self, SweepSpec};
use scherk::verify::{self, Check, VerifyOptions};
use scherk::zero;
use scherk::ScherkError;

const EXIT_VERIFY: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_CONVERGENCE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "scherk",
    version,
    about = "Scherk-type minimal graphs over bicentric quadrilaterals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Angles {
    /// First parameter angle, the argument of the first vertex
    #[arg(long, allow_hyphen_values = true)]
    p: f64,
    /// Second parameter angle, with p < q < p + pi
    #[arg(long, allow_hyphen_values = true)]
    q: f64,
    /// Read the angles in degrees
    #[arg(long)]
    deg: bool,
}

impl Angles {
    fn radians(&self) -> (f64, f64) {
        if self.deg {
            (self.p.to_radians(), self.q.to_radians())
        } else {
            (self.p, self.q)
        }
    }
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 16)]
    psteps: usize,
    #[arg(long, default_value_t = 16)]
    qsteps: usize,
    /// Refine around the running maximum of |K|
    #[arg(long)]
    refine: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derived angles and Weierstrass data
    Derive {
        #[command(flatten)]
        angles: Angles,
        #[arg(long)]
        json: bool,
    },
    /// Locate the preimage of the origin and print the curvature there
    Curvature {
        #[command(flatten)]
        angles: Angles,
        #[arg(long)]
        json: bool,
    },
    /// Write the surface as a triangle mesh
    Mesh {
        #[command(flatten)]
        angles: Angles,
        #[arg(long, default_value_t = 64)]
        nr: usize,
        #[arg(long, default_value_t = 128)]
        nt: usize,
        #[arg(long, default_value_t = 0.995)]
        rmax: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the quadrilateral, the unit circle and the ray images as CSV
    Quad {
        #[command(flatten)]
        angles: Angles,
        #[arg(long, default_value_t = 0.995)]
        rmax: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate curvature over a grid of the region
    Sweep {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the invariant checks for one surface or for a sweep
    Verify {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
        p: Option<f64>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "sweep")]
        q: Option<f64>,
        #[arg(long)]
        deg: bool,
        #[arg(long, conflicts_with_all = ["p", "q"])]
        sweep: bool,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, hide = true, default_value_t = 0.0, allow_hyphen_values = true)]
        theta_offset: f64,
    },
}

fn exit_for(err: &ScherkError) -> u8 {
    match err {
        ScherkError::Domain(_) | ScherkError::Degenerate(_) | ScherkError::Pole(_) => EXIT_DOMAIN,
        ScherkError::Convergence(_) => EXIT_CONVERGENCE,
        ScherkError::Io { .. } => EXIT_IO,
    }
}

fn c(z: num_complex::Complex64) -> String {
    format!("{:.12} {:+.12}i", z.re, z.im)
}

fn print_checks(checks: &[Check]) -> bool {
    for ch in checks {
        println!(
            "{} {}: {}",
            if ch.passed { "PASS" } else { "FAIL" },
            ch.name,
            ch.detail
        );
    }
    verify::all_passed(checks)
}

fn run(cli: Cli) -> Result<u8, ScherkError> {
    match cli.command {
        Command::Derive { angles, json } => {
            let (p, q) = angles.radians();
            let s = Surface::new(p, q)?;
            if json {
                let z = zero::locate_zero_on(&s)?;
                let r = curvature::report_for(&s, &z);
                println!("{}", export::report_json(&s, &r));
            } else {
                let g = &s.geom;
                println!("p      {:.12}", p);
                println!("q      {:.12}", q);
                println!("beta   {:.12}", g.beta);
                println!("alpha  {:.12}", g.alpha);
                println!("x      {:.12}", g.x);
                println!("y      {:.12}", g.y);
                println!("s      {:.12}", g.s);
                println!("a      {}", c(s.data.a));
                println!("b      {}", c(s.data.b));
                println!("theta  {:.12}", s.data.theta);
                println!("f(0)   {}", c(harmonic::f_at_origin(g)));
                println!("case   {}", s.case);
            }
            Ok(0)
        }
        Command::Curvature { angles, json } => {
            let (p, q) = angles.radians();
            let s = Surface::new(p, q)?;
            let z = zero::locate_zero_on(&s)?;
            let r = curvature::report_for(&s, &z);
            if json {
                println!("{}", export::report_json(&s, &r));
            } else {
                println!("z_zero        {}", c(r.z_zero));
                println!("residual      {:.3e}", r.residual);
                println!("K             {:.12}", r.k);
                println!("K_cross       {:.12}", r.k_cross);
                println!("K_reduced     {:.12}", r.k_reduced);
                println!("K_reduced_alt {:.12}", r.k_reduced_alt);
                println!("re_za         {:.12}", r.re_za);
                println!("bound_margin  {:.12}", r.bound_margin);
                println!("case          {}", r.case);
            }
            let v = r.violations();
            for msg in &v {
                eprintln!("invariant failed: {msg}");
            }
            Ok(if v.is_empty() { 0 } else { EXIT_VERIFY })
        }
        Command::Mesh {
            angles,
            nr,
            nt,
            rmax,
            out,
        } => {
            let (p, q) = angles.radians();
            let s = Surface::new(p, q)?;
            let spec = MeshSpec::new(nr, nt, rmax)?;
            let mesh = export::write_mesh(&s, &spec, &out)?;
            println!(
                "wrote {} vertices and {} triangles to {}",
                mesh.vertices.len(),
                mesh.faces.len(),
                out.display()
            );
            Ok(0)
        }
        Command::Quad { angles, rmax, out } => {
            let (p, q) = angles.radians();
            let s = Surface::new(p, q)?;
            MeshSpec::new(2, 3, rmax)?;
            let rows = export::write_quad(&s, rmax, &out)?;
            println!("wrote {} rows to {}", rows.len(), out.display());
            Ok(0)
        }
        Command::Sweep { grid, out } => {
            let spec = SweepSpec::new(grid.psteps, grid.qsteps)?.with_refine(grid.refine);
            let res = sweep::sweep_region(&spec)?;
            match out {
                Some(path) => sweep::export_csv(&res, &path)?,
                None => sweep::write_csv(&res, &mut std::io::stdout().lock()).map_err(|e| {
                    ScherkError::Io {
                        path: "<stdout>".into(),
                        source: e,
                    }
                })?,
            }
            eprintln!(
                "{} rows, max |K| = {:.12} at ({:.9}, {:.9}), {} violations, {} failures",
                res.rows.len(),
                res.max_abs_k,
                res.argmax.0,
                res.argmax.1,
                res.violations,
                res.failures.len()
            );
            Ok(if res.violations == 0 && res.failures.is_empty() {
                0
            } else {
                EXIT_VERIFY
            })
        }
        Command::Verify {
            p,
            q,
            deg,
            sweep,
            grid,
            theta_offset,
        } => {
            let checks = if sweep {
                let spec = SweepSpec::new(grid.psteps, grid.qsteps)?.with_refine(grid.refine);
                verify::verify_sweep(&spec)?
            } else {
                let angles = Angles {
                    p: p.expect("clap enforces --p"),
                    q: q.expect("clap enforces --q"),
                    deg,
                };
                let (p, q) = angles.radians();
                verify::verify_point(p, q, VerifyOptions { theta_offset })?
            };
            Ok(if print_checks(&checks) {
                0
            } else {
                EXIT_VERIFY
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
