//! `gallery`: command-line front end for the guarding toolkit.
//!
//! Exit status: 0 success or claim holds, 2 claim fails, 3 input or
//! validation error, 4 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gallery_core::harness::{
    fixtures, random_polygon, search_counterexample, verify_paper, VerifyConfig,
};
use gallery_core::io::{emit_polygon, parse_polygon, polygon_json, render_svg, RenderSpec};
use gallery_core::polygon::{
    cyclic_coloring, dual_leaves, ears, fisk_coloring, non_overlapping, triangulate, Coloring,
};
use gallery_core::strategies::{
    evaluate_strategy, fisk_placement, min_vertex_guards, Interpretation,
};
use gallery_core::visibility::{coverage, window_segments, CoverageReport};
use gallery_core::SimplePolygon;

const EXIT_CLAIM_FAILS: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_USAGE: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gallery",
    version,
    about = "Exact vertex-guard coverage for polygonal galleries"
)]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InterpArg {
    Strict,
    Generous,
}

impl From<InterpArg> for Interpretation {
    fn from(a: InterpArg) -> Self {
        match a {
            InterpArg::Strict => Interpretation::Strict,
            InterpArg::Generous => Interpretation::Generous,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    EveryThird,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColoringArg {
    Fisk,
    Cyclic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact coverage of an explicit guard set or of every every-third placement.
    Check {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_enum, conflicts_with = "guards")]
        strategy: Option<StrategyArg>,
        #[arg(long, value_enum, default_value_t = InterpArg::Generous)]
        interp: InterpArg,
        #[arg(long, value_delimiter = ',')]
        guards: Vec<usize>,
    },
    /// Fisk guard placement and its coverage.
    Fisk {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Fewest vertex guards by exhaustive search.
    MinGuards {
        #[arg(long)]
        polygon: PathBuf,
        /// Largest guard count tried; defaults to n/3.
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Lowest-index-first ear clipping.
    Triangulate {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Ears, dual-tree leaves and their overlaps.
    Ears {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Random search for a polygon defeating every every-third placement.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = InterpArg::Strict)]
        interp: InterpArg,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, env = "GALLERY_SEED", default_value_t = 0)]
        seed: u64,
        /// Write the polygon found here.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the full claim checklist.
    VerifyPaper {
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 1000)]
        ear_trials: u64,
        #[arg(long, default_value_t = 100)]
        oracle_pairs: u64,
        #[arg(long, default_value_t = 200)]
        grid_res: u32,
        #[arg(long, default_value_t = 4)]
        comb_teeth: usize,
        #[arg(long, env = "GALLERY_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Draw a polygon as SVG.
    Render {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_delimiter = ',')]
        guards: Vec<usize>,
        /// Shade regions no guard sees.
        #[arg(long, requires = "guards")]
        blindspots: bool,
        /// Draw the guards' window segments.
        #[arg(long, requires = "guards")]
        windows: bool,
        /// Draw triangulation diagonals.
        #[arg(long)]
        triangulation: bool,
        #[arg(long, value_enum)]
        coloring: Option<ColoringArg>,
        #[arg(long, default_value_t = 640)]
        size: u32,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Write a polygon file.
    Gen {
        #[command(subcommand)]
        shape: Shape,
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Shape {
    Comb {
        #[arg(long)]
        teeth: usize,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "GALLERY_SEED", default_value_t = 0)]
        seed: u64,
    },
    Nonagon,
    StrictOctagon,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Usage(String),
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CLAIM_FAILS),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load(path: &Path) -> Result<SimplePolygon, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_polygon(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn check_guards(poly: &SimplePolygon, guards: &[usize]) -> Result<(), Failure> {
    match guards.iter().find(|&&g| g >= poly.len()) {
        Some(g) => Err(Failure::Input(format!(
            "guard {g} is not a vertex of this {}-gon",
            poly.len()
        ))),
        None => Ok(()),
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(format: Format, machine: Value, text: impl FnOnce() -> String) {
    match format {
        Format::Machine => println!(
            "{}",
            serde_json::to_string_pretty(&machine).expect("JSON value")
        ),
        Format::Text => println!("{}", text()),
    }
}

fn coverage_line(r: &CoverageReport) -> String {
    format!(
        "guards {:?}: {} (blindspot area {}, {} witness point(s))",
        r.guards,
        if r.covered { "covered" } else { "NOT covered" },
        r.blindspot_area,
        r.witnesses.len()
    )
}

fn run(cli: Cli) -> Outcome {
    let fmt = cli.format;
    match cli.command {
        Command::Check {
            polygon,
            strategy,
            interp,
            guards,
        } => {
            let poly = load(&polygon)?;
            if !guards.is_empty() {
                check_guards(&poly, &guards)?;
                let r = coverage(&poly, &guards).expect("guards checked");
                emit(fmt, json!(r), || coverage_line(&r));
                return Ok(r.covered);
            }
            if strategy.is_none() {
                return Err(Failure::Usage(
                    "check needs --guards or --strategy every-third".into(),
                ));
            }
            let interp = Interpretation::from(interp);
            let verdicts = evaluate_strategy(&poly, interp);
            let good = verdicts.iter().filter(|v| v.report.covered).count();
            emit(
                fmt,
                json!({ "interpretation": interp, "verdicts": verdicts }),
                || {
                    let mut s = format!(
                        "every third vertex ({interp}), {} placement(s):\n",
                        verdicts.len()
                    );
                    for v in &verdicts {
                        s += &format!("  {}\n", coverage_line(&v.report));
                    }
                    s + &format!("{good} of {} placements cover", verdicts.len())
                },
            );
            Ok(good > 0)
        }
        Command::Fisk { polygon } => {
            let poly = load(&polygon)?;
            let p = fisk_placement(&poly);
            let r = coverage(&poly, &p.guards).expect("Fisk guards are vertices");
            let bound = poly.len() / 3;
            emit(
                fmt,
                json!({ "placement": p, "bound": bound, "report": r }),
                || {
                    format!(
                        "Fisk placement ({} of at most {bound})\n{}",
                        p.guards.len(),
                        coverage_line(&r)
                    )
                },
            );
            Ok(r.covered && p.guards.len() <= bound.max(1))
        }
        Command::MinGuards { polygon, max_k } => {
            let poly = load(&polygon)?;
            let max_k = max_k.unwrap_or((poly.len() / 3).max(1));
            let found = min_vertex_guards(&poly, max_k);
            emit(
                fmt,
                json!({ "max_k": max_k, "min_guards": found.as_ref().map(|f| f.0), "witness": found.as_ref().map(|f| &f.1.guards) }),
                || match &found {
                    Some((k, p)) => format!("minimum vertex guards: {k}, e.g. {:?}", p.guards),
                    None => format!("no covering set of at most {max_k} vertices"),
                },
            );
            Ok(found.is_some())
        }
        Command::Triangulate { polygon } => {
            let poly = load(&polygon)?;
            let t = triangulate(&poly);
            let leaves = dual_leaves(&t);
            emit(
                fmt,
                json!({ "triangles": t.triangles(), "diagonals": t.diagonals(), "dual": t.dual(), "dual_leaves": leaves }),
                || {
                    let tris: Vec<String> = t
                        .triangles()
                        .iter()
                        .map(|[a, b, c]| format!("({a},{b},{c})"))
                        .collect();
                    let diags: Vec<String> = t
                        .diagonals()
                        .iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect();
                    format!(
                        "{} triangles: {}\n{} diagonals: {}\ndual leaves (ear tips): {leaves:?}",
                        tris.len(),
                        tris.join(" "),
                        diags.len(),
                        diags.join(" ")
                    )
                },
            );
            Ok(true)
        }
        Command::Ears { polygon } => {
            let poly = load(&polygon)?;
            let e = ears(&poly);
            let mut pairs = Vec::new();
            for (k, &i) in e.iter().enumerate() {
                for &j in &e[k + 1..] {
                    pairs.push((i, j, non_overlapping(&poly, i, j).expect("both are ears")));
                }
            }
            let leaves = dual_leaves(&triangulate(&poly));
            emit(
                fmt,
                json!({
                    "ears": e,
                    "dual_leaves": leaves,
                    "pairs": pairs.iter().map(|(i, j, d)| json!({"a": i, "b": j, "non_overlapping": d})).collect::<Vec<_>>(),
                }),
                || {
                    let mut s = format!("ears: {e:?}\ndual leaves: {leaves:?}");
                    for (i, j, d) in &pairs {
                        s += &format!(
                            "\n  {i},{j}: {}",
                            if *d { "non-overlapping" } else { "overlap" }
                        );
                    }
                    s
                },
            );
            Ok(true)
        }
        Command::Search {
            n,
            interp,
            trials,
            seed,
            out,
        } => {
            if n < 3 || trials == 0 {
                return Err(Failure::Usage(
                    "search needs --n >= 3 and --trials >= 1".into(),
                ));
            }
            let r = search_counterexample(n, interp.into(), trials, seed);
            emit(
                fmt,
                json!({
                    "n": r.n,
                    "interpretation": r.interpretation,
                    "seed": r.seed,
                    "trials_run": r.trials_run,
                    "found": r.found.as_ref().map(polygon_json),
                }),
                || match &r.found {
                    Some(p) => format!(
                        "counterexample after {} trial(s):\n{}",
                        r.trials_run,
                        emit_polygon(p).trim_end()
                    ),
                    None => format!("no counterexample in {} trial(s)", r.trials_run),
                },
            );
            if let (Some(p), Some(path)) = (&r.found, out.as_deref()) {
                write_out(Some(path), &emit_polygon(p))?;
            }
            Ok(r.found.is_some())
        }
        Command::VerifyPaper {
            trials,
            ear_trials,
            oracle_pairs,
            grid_res,
            comb_teeth,
            seed,
        } => {
            if grid_res < 2 || comb_teeth == 0 {
                return Err(Failure::Usage(
                    "--grid-res must be >= 2 and --comb-teeth >= 1".into(),
                ));
            }
            let report = verify_paper(&VerifyConfig {
                trials,
                ear_trials,
                oracle_pairs,
                grid_resolution: grid_res,
                comb_teeth,
                seed,
            });
            emit(fmt, json!(report), || report.to_string());
            Ok(report.passed())
        }
        Command::Render {
            polygon,
            guards,
            blindspots,
            windows,
            triangulation,
            coloring,
            size,
            out,
        } => {
            let poly = load(&polygon)?;
            check_guards(&poly, &guards)?;
            let tri = (triangulation || matches!(coloring, Some(ColoringArg::Fisk)))
                .then(|| triangulate(&poly));
            let col: Option<Coloring> = match coloring {
                None => None,
                Some(ColoringArg::Fisk) => Some(fisk_coloring(tri.as_ref().expect("built above"))),
                Some(ColoringArg::Cyclic) => {
                    Some(cyclic_coloring(&poly).map_err(|e| Failure::Input(e.to_string()))?)
                }
            };
            let cells = if blindspots {
                coverage(&poly, &guards)
                    .expect("guards checked")
                    .blindspot_cells
            } else {
                Vec::new()
            };
            let segs: Vec<_> = if windows {
                guards
                    .iter()
                    .flat_map(|&g| window_segments(&poly, g))
                    .map(|w| w.segment)
                    .collect()
            } else {
                Vec::new()
            };
            let spec = RenderSpec {
                triangulation: tri.as_ref().filter(|_| triangulation),
                coloring: col.as_ref(),
                guards: &guards,
                blindspots: &cells,
                windows: &segs,
                width: size,
                height: size,
                ..RenderSpec::new(&poly)
            };
            write_out(out.as_deref(), &render_svg(&spec))?;
            Ok(true)
        }
        Command::Gen { shape, out } => {
            let poly = match shape {
                Shape::Comb { teeth: 0 } => {
                    return Err(Failure::Usage("--teeth must be >= 1".into()))
                }
                Shape::Comb { teeth } => fixtures::comb(teeth),
                Shape::Random { n, .. } if n < 3 => {
                    return Err(Failure::Usage("--n must be >= 3".into()))
                }
                Shape::Random { n, seed } => {
                    random_polygon(n, seed).map_err(|e| Failure::Input(e.to_string()))?
                }
                Shape::Nonagon => fixtures::paper_nonagon(),
                Shape::StrictOctagon => fixtures::strict_octagon(),
            };
            write_out(out.as_deref(), &emit_polygon(&poly))?;
            Ok(true)
        }
    }
}
