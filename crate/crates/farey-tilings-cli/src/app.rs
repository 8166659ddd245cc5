//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use farey_tilings::cube::stabilizer_search;
use farey_tilings::fibonacci::fibonacci_pairs;
use farey_tilings::frieze::validate_frieze;
use farey_tilings::hypertiling::cross_sections;
use farey_tilings::{
    construct_hypertiling, construct_tiling, decompose_hypertiling, decompose_tiling, decompose_unit_hypertiling,
    encode, fib_pair_oracle, fibonacci_hypertiling, frieze_from_path, frieze_from_weighted_polygon, is_synchronised,
    is_tame, is_tame_hypertiling, normalize_unit_cube, sl2_cross_section_cubes, tameness_parameters,
    verify_hypertiling, verify_n_tiling, weighted_polygon_quiddity, BhargavaCube, FareyPath, Hypertiling, Int, Limits,
    Tiling, WeightedPolygon,
};
use num_traits::Zero;

use crate::io::{invalid, limits_from_env, load, load_as, CliError, Object};
use crate::render::{
    ascii_frieze, ascii_hypertiling, ascii_tiling, quiddity_string, render_farey_svg, Model, RenderSpec,
};

#[derive(Parser, Debug)]
#[command(
    name = "farey-tilings",
    version,
    about = "Tame integer tilings, friezes and hypertilings from Farey graph paths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a tiling, frieze, hypertiling, path, cube or polygon file.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        csv: CsvBase,
    },
    /// Build the tiling K(a_i d_j - L b_i c_j) from two paths.
    Construct {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long)]
        delta: PathBuf,
        #[arg(long, default_value = "1")]
        k: Int,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        l: Int,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Recover parameters and paths from a tame tiling.
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        csv: CsvBase,
    },
    /// Frieze from a closed path or a weighted triangulated polygon.
    Frieze {
        #[arg(long, conflicts_with = "polygon", required_unless_present = "polygon")]
        path: Option<PathBuf>,
        #[arg(long)]
        polygon: Option<PathBuf>,
        #[arg(long, default_value = "1")]
        k: Int,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Hypertiling operations.
    #[command(subcommand)]
    Hyper(HyperCommand),
    /// Draw paths as SVG, or tilings, friezes and hypertilings as text.
    Render(RenderArgs),
    /// Brute-force searches used to check closed-form results.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CsvBase {
    /// First row index for CSV tilings.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    row_base: i64,
    /// First column index for CSV tilings.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    col_base: i64,
}

#[derive(Subcommand, Debug)]
pub enum HyperCommand {
    /// Common hyperdeterminant and tameness of a hypertiling.
    Verify { file: PathBuf },
    /// Hypertiling from a cube and three paths.
    Construct {
        #[arg(long)]
        cube: PathBuf,
        #[arg(long, num_args = 3, required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cube and paths reproducing a tame hypertiling.
    Decompose {
        file: PathBuf,
        /// Require hyperdeterminant 1 and return paths for the unit cube.
        #[arg(long)]
        unit: bool,
    },
    /// A triple in SL2(Z)^3 carrying the unit cube to the given cube.
    Normalize { file: PathBuf },
    /// Window of m_ijk = F_{2(e+i+j+k)-1}.
    Fib {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        e: i64,
        /// Three inclusive ranges `first:last`, comma separated.
        #[arg(long, default_value = "0:2,0:2,0:2", allow_hyphen_values = true)]
        ranges: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Pairs (a, b) with ab | a^2 + b^2 + 1, compared with consecutive odd-index Fibonacci numbers.
    FibPairs {
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Cubes with entries in [-bound, bound] whose six faces have determinant 1.
    CubeEnum {
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
    /// Triples in SL2(Z)^3 with entries in [-bound, bound] fixing the unit cube.
    StabilizerSearch {
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    HalfPlane,
    Disc,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    /// Path files for SVG; a single tiling, frieze or hypertiling file for text.
    pub files: Vec<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, value_enum, default_value = "half-plane")]
    pub model: ModelArg,
    #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
    pub x_min: i64,
    #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
    pub x_max: i64,
    /// Largest denominator in the background tessellation.
    #[arg(long, default_value_t = 12)]
    pub depth: u32,
    #[arg(long, default_value_t = 300.0)]
    pub radius: f64,
    #[arg(long, default_value_t = 900.0)]
    pub width: f64,
    #[arg(long)]
    pub horocycles: bool,
    #[arg(long)]
    pub no_labels: bool,
    #[arg(long)]
    pub no_background: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Runs the command line `argv` (program name first), writing results to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = limits_from_env().and_then(|limits| dispatch(cli.command, &limits, out));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Input(format!("writing output: {e}")))
}

fn line(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    emit(out, &format!("{text}\n"))
}

fn dispatch(cmd: Command, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Verify { file, csv } => verify(load(&file, limits, (csv.row_base, csv.col_base))?, out),
        Command::Construct { gamma, delta, k, l, format } => {
            let g = load_as(&gamma, limits, as_path, "path")?;
            let d = load_as(&delta, limits, as_path, "path")?;
            let t = construct_tiling(&k, &l, &g, &d).map_err(invalid)?;
            write_tiling(out, &t, format)?;
            Ok(0)
        }
        Command::Decompose { file, csv } => {
            let t = match load(&file, limits, (csv.row_base, csv.col_base))? {
                Object::Tiling(t) => t,
                other => return Err(CliError::Input(format!("expected a tiling, found a {}", other.kind()))),
            };
            let dec = decompose_tiling(&t).map_err(invalid)?;
            line(out, &encode(&dec))?;
            Ok(0)
        }
        Command::Frieze { path, polygon, k, format } => {
            let fr = match (path, polygon) {
                (Some(p), _) => frieze_from_path(&load_as(&p, limits, as_path, "path")?, &k).map_err(invalid)?,
                (None, Some(p)) => {
                    let wp: WeightedPolygon = load_as(&p, limits, as_polygon, "weighted polygon")?;
                    frieze_from_weighted_polygon(&wp).map_err(invalid)?
                }
                (None, None) => return Err(CliError::Input("one of --path or --polygon is required".into())),
            };
            match format {
                Format::Json => line(out, &encode(&fr))?,
                _ => {
                    emit(out, &ascii_frieze(&fr))?;
                    line(out, &format!("quiddity {}", quiddity_string(&fr)))?;
                }
            }
            Ok(0)
        }
        Command::Hyper(h) => hyper(h, limits, out),
        Command::Render(args) => render(args, limits, out),
        Command::Oracle(o) => oracle(o, out),
    }
}

fn as_path(o: Object) -> Option<FareyPath> {
    match o {
        Object::Path(p) => Some(p),
        _ => None,
    }
}

fn as_polygon(o: Object) -> Option<WeightedPolygon> {
    match o {
        Object::Polygon(p) => Some(p),
        _ => None,
    }
}

fn as_cube(o: Object) -> Option<BhargavaCube> {
    match o {
        Object::Cube(c) => Some(c),
        Object::HyperDecomposition(d) => Some(d.cube),
        _ => None,
    }
}

fn as_hypertiling(o: Object) -> Option<Hypertiling> {
    match o {
        Object::Hypertiling(h) => Some(h),
        _ => None,
    }
}

fn write_tiling(out: &mut dyn Write, t: &Tiling, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => line(out, &encode(t)),
        Format::Ascii => emit(out, &ascii_tiling(t)),
        Format::Svg => Err(CliError::Input("tilings are rendered as json or ascii".into())),
    }
}

fn write_hypertiling(out: &mut dyn Write, h: &Hypertiling, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => line(out, &encode(h)),
        Format::Ascii => emit(out, &ascii_hypertiling(h)),
        Format::Svg => Err(CliError::Input("hypertilings are rendered as json or ascii".into())),
    }
}

fn verify(obj: Object, out: &mut dyn Write) -> Result<i32, CliError> {
    match obj {
        Object::Tiling(t) => {
            let n = verify_n_tiling(&t).map_err(invalid)?;
            if !is_tame(&t) {
                line(out, &format!("N={n} not tame"))?;
                return Ok(1);
            }
            if n.is_zero() {
                line(out, "N=0 tame")?;
            } else {
                let p = tameness_parameters(&t).map_err(invalid)?;
                line(out, &format!("N={n} tame params={p}"))?;
            }
            Ok(0)
        }
        Object::Frieze(f) => {
            validate_frieze(&f).map_err(invalid)?;
            line(out, &format!("width={} N={} quiddity {}", f.width(), f.denom(), quiddity_string(&f)))?;
            Ok(0)
        }
        Object::Hypertiling(h) => verify_hyper(&h, out),
        Object::Path(p) => {
            line(
                out,
                &format!(
                    "level={} vertices={} minimal={} clockwise={} itinerary {}",
                    p.level(),
                    p.len(),
                    p.is_minimal(),
                    p.is_clockwise(),
                    p.itinerary()
                ),
            )?;
            Ok(if p.is_minimal() { 0 } else { 1 })
        }
        Object::Cube(c) => {
            let det = c.hyperdet();
            line(out, &format!("Det={det}"))?;
            Ok(if det.is_zero() { 1 } else { 0 })
        }
        Object::Polygon(wp) => {
            let (n, labels) = weighted_polygon_quiddity(&wp).map_err(invalid)?;
            let labels: Vec<String> = labels.iter().map(Int::to_string).collect();
            line(out, &format!("N={n} labels {}", labels.join(" ")))?;
            Ok(0)
        }
        Object::TilingDecomposition(d) => {
            let t = construct_tiling(&d.params.k, &d.params.l, &d.gamma, &d.delta).map_err(invalid)?;
            let n = verify_n_tiling(&t).map_err(invalid)?;
            line(out, &format!("N={n} params={}", d.params))?;
            Ok(0)
        }
        Object::HyperDecomposition(d) => {
            let [a, b, c] = &d.paths;
            let h = construct_hypertiling(&d.cube, [a, b, c]).map_err(invalid)?;
            verify_hyper(&h, out)
        }
        Object::Triple(t) => {
            line(out, &format!("sl2={}", t.is_sl2()))?;
            Ok(if t.is_sl2() { 0 } else { 1 })
        }
    }
}

fn verify_hyper(h: &Hypertiling, out: &mut dyn Write) -> Result<i32, CliError> {
    let n = verify_hypertiling(h).map_err(invalid)?;
    let tame = is_tame_hypertiling(h);
    line(out, &format!("N={n} tame={tame}"))?;
    if !tame {
        line(out, &format!("synchronised={}", is_synchronised(h)))?;
        return Ok(1);
    }
    for axis in 0..3 {
        let ns: Vec<String> = cross_sections(h, axis)
            .map_err(invalid)?
            .iter()
            .map(|t| verify_n_tiling(t).map(|n| n.to_string()).unwrap_or_else(|_| "?".into()))
            .collect();
        line(out, &format!("axis {axis} sections N={}", ns.join(",")))?;
    }
    Ok(0)
}

fn parse_ranges(s: &str) -> Result<[(i64, i64); 3], CliError> {
    let bad = || CliError::Input(format!("ranges must look like a:b,c:d,e:f, got {s:?}"));
    let parts: Vec<(i64, i64)> = s
        .split(',')
        .map(|r| {
            let (a, b) = r.split_once(':').ok_or_else(bad)?;
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        })
        .collect::<Result<_, CliError>>()?;
    parts.try_into().map_err(|_| bad())
}

fn hyper(cmd: HyperCommand, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        HyperCommand::Verify { file } => verify_hyper(&load_as(&file, limits, as_hypertiling, "hypertiling")?, out),
        HyperCommand::Construct { cube, paths, format } => {
            let c = load_as(&cube, limits, as_cube, "cube")?;
            let ps: Vec<FareyPath> =
                paths.iter().map(|p| load_as(p, limits, as_path, "path")).collect::<Result<_, _>>()?;
            let h = construct_hypertiling(&c, [&ps[0], &ps[1], &ps[2]]).map_err(invalid)?;
            write_hypertiling(out, &h, format)?;
            Ok(0)
        }
        HyperCommand::Decompose { file, unit } => {
            let h = load_as(&file, limits, as_hypertiling, "hypertiling")?;
            if unit {
                let paths = decompose_unit_hypertiling(&h).map_err(invalid)?;
                let dec = farey_tilings::HyperDecomposition { cube: BhargavaCube::unit(), paths };
                line(out, &encode(&dec))?;
            } else {
                line(out, &encode(&decompose_hypertiling(&h).map_err(invalid)?))?;
            }
            Ok(0)
        }
        HyperCommand::Normalize { file } => {
            let c = load_as(&file, limits, as_cube, "cube")?;
            let t = normalize_unit_cube(&c).map_err(invalid)?;
            line(out, &encode(&t))?;
            Ok(0)
        }
        HyperCommand::Fib { e, ranges, format } => {
            let h = fibonacci_hypertiling(e, parse_ranges(&ranges)?).map_err(invalid)?;
            write_hypertiling(out, &h, format)?;
            Ok(0)
        }
    }
}

fn render(args: RenderArgs, limits: &Limits, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.files.is_empty() && args.format == Some(Format::Ascii) {
        return Err(CliError::Input("ascii rendering needs an input file".into()));
    }
    let objects: Vec<Object> = args.files.iter().map(|f| load(f, limits, (0, 0))).collect::<Result<_, _>>()?;
    let all_paths = objects.iter().all(|o| matches!(o, Object::Path(_)));
    let format = args.format.unwrap_or(if all_paths { Format::Svg } else { Format::Ascii });
    let text = match format {
        Format::Svg => {
            let paths: Vec<FareyPath> = objects
                .into_iter()
                .map(|o| {
                    let kind = o.kind();
                    as_path(o).ok_or_else(|| CliError::Input(format!("svg rendering takes paths, found a {kind}")))
                })
                .collect::<Result<_, _>>()?;
            let spec = RenderSpec {
                model: match args.model {
                    ModelArg::HalfPlane => Model::UpperHalfPlane,
                    ModelArg::Disc => Model::Disc,
                },
                x_range: (args.x_min, args.x_max),
                radius: args.radius,
                width: args.width,
                depth: args.depth,
                background: !args.no_background,
                labels: !args.no_labels,
                horocycles: args.horocycles,
            };
            render_farey_svg(&paths, &spec).map_err(CliError::Input)?
        }
        Format::Ascii => {
            let [obj] = <[Object; 1]>::try_from(objects)
                .map_err(|_| CliError::Input("ascii rendering takes exactly one file".into()))?;
            match obj {
                Object::Tiling(t) => ascii_tiling(&t),
                Object::Hypertiling(h) => ascii_hypertiling(&h),
                Object::Frieze(f) => ascii_frieze(&f),
                Object::Path(p) => format!("{p}\n"),
                Object::Cube(c) => format!("{c}\n"),
                other => return Err(CliError::Input(format!("no text rendering for a {}", other.kind()))),
            }
        }
        Format::Json => {
            let [obj] = <[Object; 1]>::try_from(objects)
                .map_err(|_| CliError::Input("json output takes exactly one file".into()))?;
            format!("{}\n", object_json(&obj))
        }
    };
    match args.output {
        Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None => emit(out, &text)?,
    }
    Ok(0)
}

fn object_json(o: &Object) -> String {
    match o {
        Object::Path(x) => encode(x),
        Object::Tiling(x) => encode(x),
        Object::Frieze(x) => encode(x),
        Object::Polygon(x) => encode(x),
        Object::Cube(x) => encode(x),
        Object::Triple(x) => encode(x),
        Object::Hypertiling(x) => encode(x),
        Object::TilingDecomposition(x) => encode(x),
        Object::HyperDecomposition(x) => encode(x),
    }
}

fn oracle(cmd: OracleCommand, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        OracleCommand::FibPairs { bound } => {
            let found = fib_pair_oracle(bound);
            let predicted = fibonacci_pairs(bound);
            let pairs: Vec<String> = found.iter().map(|(a, b)| format!("({a},{b})")).collect();
            line(out, &pairs.join(" "))?;
            line(out, &format!("count={} matches_fibonacci={}", found.len(), found == predicted))?;
            Ok(if found == predicted { 0 } else { 1 })
        }
        OracleCommand::CubeEnum { bound } => {
            let cubes = sl2_cross_section_cubes(bound);
            for c in &cubes {
                line(out, &format!("{c} Det={}", c.hyperdet()))?;
            }
            line(out, &format!("count={}", cubes.len()))?;
            Ok(0)
        }
        OracleCommand::StabilizerSearch { bound } => {
            let found = stabilizer_search(bound);
            for t in &found {
                let ms: Vec<String> = t.iter().map(|m| format!("({} {}; {} {})", m[0], m[1], m[2], m[3])).collect();
                line(out, &ms.join(" "))?;
            }
            line(out, &format!("count={}", found.len()))?;
            Ok(0)
        }
    }
}
