//! Command-line interface over the spinor–horosphere correspondence:
//! JSON results on stdout, optional SVG files, deterministic output.
//!
//! Exit codes: 0 success, 1 domain error (e.g. zero spinor, degenerate
//! tetrahedron), 2 argument or parse error. The environment variable
//! `HOROLIB_TOL` overrides the default relative tolerance.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use horo::json::{
    sig12, to_json, CenterJson, ClassifyOut, ComplexJson, ExtendedReal, FlagJson, FordCircleJson,
    FordOut, HorosphereJson, LambdaOut, MapOut, MinkVecJson, PtolemyOut, SceneOut, ShapeJson,
    SpinorJson,
};
use horo::{parse, svg, CliError};
use horolib::{
    classify_polygon_matrix, complex_distance_spin, farey_enumerate, flag_of_spinor, gf,
    horosphere_of_spinor, lambda, ptolemy_residual, shape_parameters, NonzeroSpinor,
    PolygonClass, ScalarTag, Spinor, SpinorMatrix, Tolerance,
};

#[derive(Parser)]
#[command(name = "horo", version, about = "Spinors and decorated horospheres in hyperbolic 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Light-cone point, null flag, and horosphere of a spinor
    Map {
        /// Spinor as 're[+im i],re[+im i]'
        #[arg(allow_hyphen_values = true)]
        spinor: String,
    },
    /// Lambda length and complex distance of two spin-decorated horospheres
    Lambda {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Ptolemy residual and shape parameters of four decorated vertices
    Ptolemy {
        #[arg(allow_hyphen_values = true)]
        k0: String,
        #[arg(allow_hyphen_values = true)]
        k1: String,
        #[arg(allow_hyphen_values = true)]
        k2: String,
        #[arg(allow_hyphen_values = true)]
        k3: String,
    },
    /// Classify the 2×d matrix with the given spinor columns
    Classify {
        #[arg(required = true, allow_hyphen_values = true)]
        columns: Vec<String>,
    },
    /// Ford circles over the Farey fractions of the given depth
    Ford {
        #[arg(long)]
        depth: u32,
        /// Also draw the circles to an SVG file
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Draw the half-plane cross-section of the given horospheres
    Scene {
        #[arg(long)]
        svg: PathBuf,
        #[arg(required = true, allow_hyphen_values = true)]
        spinors: Vec<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let tol = match env_tolerance() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    match run(&cli.command, tol) {
        Ok(stdout) => {
            use std::io::Write;
            // A consumer that stops reading (e.g. `| head`) is not an error.
            if let Err(e) = writeln!(std::io::stdout(), "{stdout}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    std::process::exit(1);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(if matches!(e, CliError::Parse(_)) { 2 } else { 1 });
        }
    }
}

fn env_tolerance() -> Result<Tolerance, String> {
    let raw = match std::env::var("HOROLIB_TOL") {
        Ok(v) => v,
        Err(std::env::VarError::NotPresent) => return Ok(Tolerance::default()),
        Err(e) => return Err(format!("HOROLIB_TOL: {e}")),
    };
    let rtol: f64 = raw
        .trim()
        .parse()
        .map_err(|_| format!("HOROLIB_TOL must be a positive float, got '{raw}'"))?;
    if !rtol.is_finite() || rtol <= 0.0 {
        return Err(format!("HOROLIB_TOL must be a positive float, got '{raw}'"));
    }
    Ok(Tolerance::with_rtol(rtol))
}

fn run(command: &Command, tol: Tolerance) -> Result<String, CliError> {
    match command {
        Command::Map { spinor } => cmd_map(spinor),
        Command::Lambda { first, second } => cmd_lambda(first, second, tol),
        Command::Ptolemy { k0, k1, k2, k3 } => cmd_ptolemy(k0, k1, k2, k3, tol),
        Command::Classify { columns } => cmd_classify(columns, tol),
        Command::Ford { depth, svg } => cmd_ford(*depth, svg.as_deref()),
        Command::Scene { svg, spinors } => cmd_scene(svg, spinors),
    }
}

fn spinor_arg(token: &str) -> Result<NonzeroSpinor, CliError> {
    let s = parse::parse_spinor(token).map_err(CliError::Parse)?;
    Ok(NonzeroSpinor::new(s)?)
}

fn cmd_map(token: &str) -> Result<String, CliError> {
    let k = spinor_arg(token)?;
    Ok(to_json(&MapOut {
        spinor: SpinorJson::of(&k.spinor()),
        cone_point: MinkVecJson::of(&gf(&k)),
        flag: FlagJson::of(&flag_of_spinor(&k)),
        horosphere: HorosphereJson::of(&horosphere_of_spinor(&k)),
    }))
}

fn cmd_lambda(first: &str, second: &str, tol: Tolerance) -> Result<String, CliError> {
    let k1 = spinor_arg(first)?;
    let k2 = spinor_arg(second)?;
    let lam = lambda(&k1, &k2);
    let d = complex_distance_spin(&k1, &k2, tol);
    let thetas = if d.is_same_center() {
        (None, None)
    } else {
        (Some(sig12(d.theta_mod_2pi())), Some(sig12(d.theta())))
    };
    Ok(to_json(&LambdaOut {
        lambda: ComplexJson::of(lam.value),
        rho: ExtendedReal::of(d.rho()),
        theta_mod_2pi: thetas.0,
        theta_mod_4pi: thetas.1,
    }))
}

fn cmd_ptolemy(k0: &str, k1: &str, k2: &str, k3: &str, tol: Tolerance) -> Result<String, CliError> {
    let k0 = spinor_arg(k0)?;
    let k1 = spinor_arg(k1)?;
    let k2 = spinor_arg(k2)?;
    let k3 = spinor_arg(k3)?;
    let residual = ptolemy_residual(&k0, &k1, &k2, &k3);
    let t = shape_parameters(&k0, &k1, &k2, &k3, tol)?;
    Ok(to_json(&PtolemyOut {
        residual: ComplexJson::of(residual),
        shape: ShapeJson {
            z: ComplexJson::of(t.z),
            z_prime: ComplexJson::of(t.z_prime),
            z_dprime: ComplexJson::of(t.z_dprime),
        },
    }))
}

fn cmd_classify(tokens: &[String], tol: Tolerance) -> Result<String, CliError> {
    let mut columns: Vec<Spinor> = Vec::with_capacity(tokens.len());
    for t in tokens {
        columns.push(parse::parse_spinor(t).map_err(CliError::Parse)?);
    }
    let tag = if columns.iter().all(|s| s.xi.im == 0.0 && s.eta.im == 0.0) {
        ScalarTag::Real
    } else {
        ScalarTag::Complex
    };
    let m = SpinorMatrix::new(columns, tag, tol)?;
    let class = classify_polygon_matrix(&m, tol)?;
    Ok(to_json(&ClassifyOut {
        columns: m.num_columns(),
        tag: match tag {
            ScalarTag::Real => "real".to_string(),
            ScalarTag::Complex => "complex".to_string(),
        },
        class: match class {
            PolygonClass::Generalized => "generalized",
            PolygonClass::Nondegenerate => "nondegenerate",
            PolygonClass::Ideal => "ideal",
            PolygonClass::SpinCoherent => "spin_coherent",
        }
        .to_string(),
    }))
}

fn cmd_ford(depth: u32, svg_path: Option<&std::path::Path>) -> Result<String, CliError> {
    let circles = farey_enumerate(depth)?;
    if let Some(path) = svg_path {
        std::fs::write(path, svg::ford_svg(&circles))?;
    }
    let listed = circles
        .iter()
        .map(|c| {
            let h = c.to_horosphere();
            FordCircleJson {
                p: c.p(),
                q: c.q(),
                center: CenterJson::of(&h.center()),
                diameter: sig12(h.size()),
            }
        })
        .collect::<Vec<_>>();
    Ok(to_json(&FordOut { depth, count: listed.len(), circles: listed }))
}

fn cmd_scene(svg_path: &std::path::Path, tokens: &[String]) -> Result<String, CliError> {
    let mut horospheres = Vec::with_capacity(tokens.len());
    for t in tokens {
        horospheres.push(horosphere_of_spinor(&spinor_arg(t)?));
    }
    std::fs::write(svg_path, svg::scene_svg(&horospheres))?;
    Ok(to_json(&SceneOut {
        count: horospheres.len(),
        horospheres: horospheres.iter().map(HorosphereJson::of).collect(),
        svg: svg_path.display().to_string(),
    }))
}
