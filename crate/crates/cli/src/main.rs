//! Command-line surface of the geometry family: point and triangle queries,
//! parameter sweeps emitting plot data, series fits and the verification
//! battery.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors (diagnostic on
//! stderr), 2 when `verify` finds a failed invariant.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{fmt_f64, JsonObject};
use transgeo::gentrig::{gen_cos, gen_sin};
use transgeo::metric::distance;
use transgeo::transition::{default_grid, ray_distance, series_fit, sweep, SweepTable};
use transgeo::triangle::TriangleMeasurements;
use transgeo::trig::euler_gap;
use transgeo::verify::{run_suite, CheckResult};
use transgeo::{
    angle, build_right_triangle, coherent_translation, geodesic_point, involution, measure,
    normalize_point, stabilizer_rotation, Error, ModelPoint, Param, Triangle, Vec3,
};

#[derive(Parser)]
#[command(
    name = "transgeo",
    about = "Constant-curvature plane geometries E_t (hyperbolic t<0, Euclidean t=0, elliptic t>0)",
    long_about = "Queries and verification for the family of constant-curvature plane \
                  geometries over t in [-1, 1]. Points are entered as raw ray vectors \
                  \"x,y,z\" and projected onto the model surface internally. All lengths \
                  are in normalized units (curvature is t).",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Distance between two points given as rays "x,y,z".
    Dist {
        /// Transition parameter in [-1, 1].
        #[arg(long)]
        t: f64,
        /// First point ray.
        #[arg(long)]
        p: String,
        /// Second point ray.
        #[arg(long)]
        q: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Angle at vertex --p between the arcs towards --q and --r, in radians.
    Angle {
        #[arg(long)]
        t: f64,
        /// Vertex ray.
        #[arg(long)]
        p: String,
        /// First target ray.
        #[arg(long)]
        q: String,
        /// Second target ray.
        #[arg(long)]
        r: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Measure a triangle: sides a,b,c (opposite A,B,C), angles and area.
    Triangle {
        #[arg(long)]
        t: f64,
        /// Use the right-triangle family on the rays (x,0,1) and (0,y,1),
        /// right angle at the first vertex.
        #[arg(long)]
        right: bool,
        /// Leg ray parameter x (with --right).
        #[arg(long)]
        x: Option<f64>,
        /// Leg ray parameter y (with --right).
        #[arg(long)]
        y: Option<f64>,
        /// First vertex ray (without --right).
        #[arg(long)]
        p: Option<String>,
        /// Second vertex ray (without --right).
        #[arg(long)]
        q: Option<String>,
        /// Third vertex ray (without --right).
        #[arg(long)]
        r: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Point on the unit-speed geodesic from --p with direction --q at arc
    /// length --x. The direction ray is projected to the tangent plane and
    /// normalized.
    Geodesic {
        #[arg(long)]
        t: f64,
        /// Start point ray.
        #[arg(long)]
        p: String,
        /// Direction ray (projected and normalized internally).
        #[arg(long)]
        q: String,
        /// Arc length.
        #[arg(long)]
        x: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Sweep a named quantity over a grid of t, emitting one row per value.
    ///
    /// Quantities: distance (D_t of the rays (0,0,1)-(x,0,1); columns t,value),
    /// angle (angle at the first vertex of the right family; t,value),
    /// area (area of the right family; t,value),
    /// pyth-residual (Pythagorean identity residual of the right family; t,value),
    /// table-residuals (max of the six right-triangle table residuals; t,value),
    /// surface-profile (y=0 cross-section of the model surface at --t; columns x,z).
    Sweep {
        /// Quantity name.
        quantity: String,
        /// Parameter for surface-profile (ignored elsewhere).
        #[arg(long)]
        t: Option<f64>,
        /// Ray parameter x (default 1).
        #[arg(long)]
        x: Option<f64>,
        /// Ray parameter y (default 1).
        #[arg(long)]
        y: Option<f64>,
        /// Comma-separated t values, or "default" (41 uniform on [-1,1]).
        #[arg(long, default_value = "default", alias = "t-grid")]
        grid: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Least-squares expansion of a named quantity in powers of t around 0.
    ///
    /// Quantities: distance (ray distance for --x), euler-gap (the area
    /// quotient gap 1 - Q^2 of the right triangle with legs --x, --y).
    Series {
        /// Quantity name.
        quantity: String,
        /// Configuration parameter x (default 1).
        #[arg(long)]
        x: Option<f64>,
        /// Configuration parameter y (default 1).
        #[arg(long)]
        y: Option<f64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the verification battery and print a pass/fail table.
    Verify {
        /// Suite name or "all". Suites: forms, metric, involution,
        /// coherence, trig, transition.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Accepted for compatibility; the battery uses its built-in grids.
        #[arg(long, default_value = "default", alias = "t-grid")]
        grid: String,
        /// Override every check tolerance with a single value.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Emit an isometry matrix, row-major as 9 comma-separated reals.
    ///
    /// With --p: the involution of that point; with --p and --x: the
    /// stabilizer rotation of the point by angle x; with --x alone: the
    /// coherent translation by x.
    Isometry {
        #[arg(long)]
        t: f64,
        /// Base point ray.
        #[arg(long)]
        p: Option<String>,
        /// Rotation angle (with --p) or translation length (alone).
        #[arg(long)]
        x: Option<f64>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are not errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprintln!("error: UsageError: {e}");
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            std::process::exit(1);
        }
    }
}

fn param(t: f64) -> Result<Param, Error> {
    Param::new(t)
}

fn point(p: Param, s: &str) -> Result<ModelPoint, Error> {
    normalize_point(p, s.parse::<Vec3>()?)
}

fn print_output(s: &str) {
    println!("{s}");
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Dist { t, p, q, format } => {
            let par = param(t)?;
            let a = point(par, &p)?;
            let b = point(par, &q)?;
            let d = distance(&a, &b).value();
            match format.format {
                Format::Json => print_output(
                    &JsonObject::new()
                        .str("command", "dist")
                        .num("t", t)
                        .num("distance", d)
                        .finish(),
                ),
                Format::Csv => print_output(&format!("t,distance\n{},{}", fmt_f64(t), fmt_f64(d))),
            }
            Ok(0)
        }
        Cmd::Angle { t, p, q, r, format } => {
            let par = param(t)?;
            let vertex = point(par, &p)?;
            let a = point(par, &q)?;
            let b = point(par, &r)?;
            let ang = angle(&vertex, &a, &b)?;
            match format.format {
                Format::Json => print_output(
                    &JsonObject::new()
                        .str("command", "angle")
                        .num("t", t)
                        .num("angle", ang)
                        .finish(),
                ),
                Format::Csv => print_output(&format!("t,angle\n{},{}", fmt_f64(t), fmt_f64(ang))),
            }
            Ok(0)
        }
        Cmd::Triangle {
            t,
            right,
            x,
            y,
            p,
            q,
            r,
            format,
        } => {
            let par = param(t)?;
            let tri = if right {
                build_right_triangle(par, x.unwrap_or(1.0), y.unwrap_or(1.0))?
            } else {
                match (p, q, r) {
                    (Some(p), Some(q), Some(r)) => {
                        Triangle::new(point(par, &p)?, point(par, &q)?, point(par, &r)?)?
                    }
                    _ => {
                        return Err(Error::Parse(
                            "triangle needs --right with --x/--y, or --p --q --r".into(),
                        ))
                    }
                }
            };
            let m = measure(&tri)?;
            print_measurements(&m, format.format);
            Ok(0)
        }
        Cmd::Geodesic { t, p, q, x, format } => {
            let par = param(t)?;
            let start = point(par, &p)?;
            let dir_ray = q.parse::<Vec3>()?;
            let dir = transgeo::point::unit_tangent(&start, dir_ray)?;
            let end = geodesic_point(&start, dir, x)?;
            let v = end.rep();
            match format.format {
                Format::Json => print_output(
                    &JsonObject::new()
                        .str("command", "geodesic")
                        .num("t", t)
                        .num("x", v.x)
                        .num("y", v.y)
                        .num("z", v.z)
                        .finish(),
                ),
                Format::Csv => print_output(&format!(
                    "x,y,z\n{},{},{}",
                    fmt_f64(v.x),
                    fmt_f64(v.y),
                    fmt_f64(v.z)
                )),
            }
            Ok(0)
        }
        Cmd::Sweep {
            quantity,
            t,
            x,
            y,
            grid,
            format,
        } => run_sweep(&quantity, t, x.unwrap_or(1.0), y.unwrap_or(1.0), &grid, format.format),
        Cmd::Series {
            quantity,
            x,
            y,
            format,
        } => {
            let x = x.unwrap_or(1.0);
            let y = y.unwrap_or(1.0);
            let est = match quantity.as_str() {
                "distance" => series_fit(
                    |t| ray_distance(t, Vec3::new(0.0, 0.0, 1.0), Vec3::new(x, 0.0, 1.0)),
                    4,
                )?,
                "euler-gap" => series_fit(|t| Ok(euler_gap(Param::new(t)?, x, y)), 4)?,
                other => return Err(Error::UnknownQuantity(other.to_string())),
            };
            match format.format {
                Format::Json => {
                    let coeffs: Vec<String> = est.coefficients.iter().map(|c| fmt_f64(*c)).collect();
                    print_output(
                        &JsonObject::new()
                            .str("command", "series")
                            .str("quantity", &quantity)
                            .raw("coefficients", &format!("[{}]", coeffs.join(",")))
                            .num("residual", est.residual)
                            .finish(),
                    );
                }
                Format::Csv => {
                    let mut out = String::from("k,coefficient\n");
                    for (k, c) in est.coefficients.iter().enumerate() {
                        out.push_str(&format!("{k},{}\n", fmt_f64(*c)));
                    }
                    print_output(out.trim_end());
                }
            }
            Ok(0)
        }
        Cmd::Verify {
            suite,
            grid: _,
            tol,
            format,
        } => {
            let mut results = run_suite(&suite)?;
            if let Some(tol) = tol {
                for r in &mut results {
                    r.tolerance = tol;
                    r.passed = r.residual.is_finite() && r.residual <= tol;
                }
            }
            print_verify(&results, format.format);
            Ok(if results.iter().all(|r| r.passed) { 0 } else { 2 })
        }
        Cmd::Isometry { t, p, x, format } => {
            let par = param(t)?;
            let iso = match (p, x) {
                (Some(p), None) => involution(&point(par, &p)?),
                (Some(p), Some(theta)) => stabilizer_rotation(&point(par, &p)?, theta),
                (None, Some(d)) => coherent_translation(d, par),
                (None, None) => {
                    return Err(Error::Parse(
                        "isometry needs --p (involution), --p --x (rotation) or --x (translation)"
                            .into(),
                    ))
                }
            };
            let entries = iso.matrix().to_row_major();
            let joined = entries
                .iter()
                .map(|e| fmt_f64(*e))
                .collect::<Vec<_>>()
                .join(",");
            match format.format {
                Format::Json => print_output(
                    &JsonObject::new()
                        .str("command", "isometry")
                        .num("t", t)
                        .raw("matrix", &format!("[{joined}]"))
                        .finish(),
                ),
                Format::Csv => print_output(&joined),
            }
            Ok(0)
        }
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Error> {
    if spec == "default" {
        return Ok(default_grid());
    }
    let mut grid = Vec::new();
    for part in spec.split(',') {
        let v: f64 = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(spec.to_string()))?;
        Param::new(v)?; // enforce [-1, 1]
        grid.push(v);
    }
    if grid.is_empty() {
        return Err(Error::Parse(spec.to_string()));
    }
    Ok(grid)
}

fn run_sweep(
    quantity: &str,
    t: Option<f64>,
    x: f64,
    y: f64,
    grid_spec: &str,
    format: Format,
) -> Result<i32, Error> {
    if quantity == "surface-profile" {
        return surface_profile(t.unwrap_or(0.0), format);
    }
    let grid = parse_grid(grid_spec)?;
    let apex = Vec3::new(0.0, 0.0, 1.0);
    let meta = format!("x={x},y={y}");
    let table: SweepTable = match quantity {
        "distance" => sweep("distance", &meta, &grid, |t| {
            ray_distance(t, apex, Vec3::new(x, 0.0, 1.0))
        })?,
        "angle" => sweep("angle", &meta, &grid, |t| {
            let p = Param::new(t)?;
            Ok(measure(&build_right_triangle(p, x, y)?)?.angle_a)
        })?,
        "area" => sweep("area", &meta, &grid, |t| {
            let p = Param::new(t)?;
            Ok(measure(&build_right_triangle(p, x, y)?)?.area)
        })?,
        "pyth-residual" => sweep("pyth-residual", &meta, &grid, |t| {
            let p = Param::new(t)?;
            let tr = build_right_triangle(p, x, y)?;
            // relabel so the right angle sits at C
            let relabeled = Triangle::new(*tr.b(), *tr.c(), *tr.a())?;
            transgeo::trig::pythagoras_check(&relabeled)
        })?,
        "table-residuals" => sweep("table-residuals", &meta, &grid, |t| {
            let p = Param::new(t)?;
            let tr = build_right_triangle(p, x, y)?;
            let relabeled = Triangle::new(*tr.b(), *tr.c(), *tr.a())?;
            let rows = transgeo::trig::right_triangle_table_check(&relabeled)?;
            Ok(rows.iter().cloned().fold(0.0, f64::max))
        })?,
        other => return Err(Error::UnknownQuantity(other.to_string())),
    };
    match format {
        Format::Csv => print_output(table.to_csv().trim_end()),
        Format::Json => {
            let rows: Vec<String> = table
                .rows
                .iter()
                .map(|r| format!("[{},{}]", fmt_f64(r.t), fmt_f64(r.value)))
                .collect();
            print_output(
                &JsonObject::new()
                    .str("command", "sweep")
                    .str("quantity", &table.quantity)
                    .str("metadata", &table.metadata)
                    .raw("rows", &format!("[{}]", rows.join(",")))
                    .finish(),
            );
        }
    }
    Ok(0)
}

/// The y = 0 cross-section of the model surface at `t`: the curve
/// `t x^2 + z^2 = 1` (upper branch for t <= 0, full oval for t > 0).
fn surface_profile(t: f64, format: Format) -> Result<i32, Error> {
    let p = param(t)?;
    let n = 101;
    let mut pts: Vec<(f64, f64)> = Vec::with_capacity(n);
    if p.is_positive() {
        // closed curve: sample one full period of arc length
        let period = 2.0 * std::f64::consts::PI / p.sqrt_abs();
        for k in 0..n {
            let s = period * k as f64 / (n - 1) as f64;
            pts.push((gen_sin(p, s), gen_cos(p, s)));
        }
    } else {
        for k in 0..n {
            let x = -3.0 + 6.0 * k as f64 / (n - 1) as f64;
            pts.push((x, (1.0 - t * x * x).sqrt()));
        }
    }
    match format {
        Format::Csv => {
            let mut out = String::from("x,z\n");
            for (x, z) in &pts {
                out.push_str(&format!("{},{}\n", fmt_f64(*x), fmt_f64(*z)));
            }
            print_output(out.trim_end());
        }
        Format::Json => {
            let rows: Vec<String> = pts
                .iter()
                .map(|(x, z)| format!("[{},{}]", fmt_f64(*x), fmt_f64(*z)))
                .collect();
            print_output(
                &JsonObject::new()
                    .str("command", "sweep")
                    .str("quantity", "surface-profile")
                    .num("t", t)
                    .raw("points", &format!("[{}]", rows.join(",")))
                    .finish(),
            );
        }
    }
    Ok(0)
}

fn print_measurements(m: &TriangleMeasurements, format: Format) {
    match format {
        Format::Json => print_output(
            &JsonObject::new()
                .num("a", m.side_a)
                .num("b", m.side_b)
                .num("c", m.side_c)
                .num("A", m.angle_a)
                .num("B", m.angle_b)
                .num("C", m.angle_c)
                .num("area", m.area)
                .num("t", m.t)
                .finish(),
        ),
        Format::Csv => {
            print_output(&format!(
                "a,b,c,A,B,C,area,t\n{},{},{},{},{},{},{},{}",
                fmt_f64(m.side_a),
                fmt_f64(m.side_b),
                fmt_f64(m.side_c),
                fmt_f64(m.angle_a),
                fmt_f64(m.angle_b),
                fmt_f64(m.angle_c),
                fmt_f64(m.area),
                fmt_f64(m.t)
            ));
        }
    }
}

fn print_verify(results: &[CheckResult], format: Format) {
    match format {
        Format::Json => {
            let rows: Vec<String> = results
                .iter()
                .map(|r| {
                    JsonObject::new()
                        .str("suite", r.suite)
                        .str("name", r.name)
                        .num("residual", r.residual)
                        .num("tolerance", r.tolerance)
                        .raw("passed", if r.passed { "true" } else { "false" })
                        .finish()
                })
                .collect();
            print_output(&format!("[{}]", rows.join(",")));
        }
        Format::Csv => {
            let mut out = String::from("suite,name,residual,tolerance,passed\n");
            for r in results {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.suite,
                    r.name,
                    fmt_f64(r.residual),
                    fmt_f64(r.tolerance),
                    r.passed
                ));
            }
            print_output(out.trim_end());
        }
    }
}
