//! Command-line front end. Every subcommand is a thin wrapper over the
//! library; outputs are deterministic and scriptable.
//!
//! Exit codes: 0 success, 1 property refutation (a non-flat lattice, a
//! failed disjunction property), 2 input error, 3 capacity or budget
//! error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::corpus;
use crate::cset::CubicalSet;
use crate::cube;
use crate::duality;
use crate::error::{Error, Result};
use crate::flatness::{self, Bounds, DisjunctionOutcome, FlatnessOutcome};
use crate::json::{OrderJson, PresentationJson};
use crate::lattice::{self, FiniteLattice};
use crate::moore::PathContext;
use crate::realization::{self, MeshFormat};
use crate::term;

#[derive(Debug, Parser)]
#[command(
    name = "latcube",
    about = "Free distributive lattices, the cube category, cubical sets, flatness and realization",
    version
)]
struct Cli {
    /// Seed echoed into reports; reserved for randomized subcommands (the
    /// current ones are exhaustive and deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theory {
    Dl,
    Dm,
    Bipointed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Off,
    Obj,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normalize a lattice term to its canonical form.
    Normalize {
        /// Number of generators in scope.
        #[arg(short = 'n', long = "generators")]
        n: usize,
        /// The term, in the grammar: x0, x1, ..., ^, v, 0, 1, ~, parens.
        term: String,
        #[arg(long, value_enum, default_value_t = Theory::Dl)]
        theory: Theory,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// List (or count) the elements of a free algebra.
    Enumerate {
        #[arg(short = 'n', long = "generators")]
        n: usize,
        /// Print only the element count.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Theory::Dl)]
        theory: Theory,
    },
    /// Hom-set size of the chosen cube theory.
    Hom {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Theory::Dl)]
        theory: Theory,
        /// List the morphisms instead of counting them.
        #[arg(long)]
        list: bool,
    },
    /// Birkhoff duality: irreducibles of a lattice, or downsets of a poset.
    Dual(DualArgs),
    /// Bounded flatness check of a finite distributive lattice.
    Flat {
        #[arg(long)]
        lattice: PathBuf,
        /// Arity bounds n,m,k for tuples, generators and witnesses.
        #[arg(long, value_parser = parse_bounds)]
        bounds: Bounds,
    },
    /// The disjunction property, a fast necessary condition for flatness.
    Disjunction {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// Numeric realization of a cubical set as a mesh.
    Realize {
        /// Builtin name (point, interval, circle, square, square-boundary,
        /// torus, cube-boundary, chain3, two-cycle, y1, y2, y3) or a
        /// presentation JSON file.
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Truncation level; defaults to the input's natural dimension.
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Off)]
        format: OutputFormat,
        /// Output file; stdout when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Simplicial triangulation of a cubical set.
    Triangulate {
        #[arg(long)]
        input: String,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Moore paths: validate, normalize, reverse or contract a path.
    Moore {
        #[arg(long)]
        input: String,
        /// Comma-separated edge cell names; empty for a zero-length path.
        #[arg(long, default_value = "")]
        edges: String,
        /// Vertex for the zero-length path (or a consistency check).
        #[arg(long)]
        at: Option<String>,
        /// Also reverse the path (needs a De Morgan input).
        #[arg(long)]
        reverse: bool,
        /// Also contract the path to its target, reporting the staircase.
        #[arg(long)]
        contract: bool,
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Compare the bipointed cube theory with the lattice one on a hom-set.
    CompareBipointed {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct DualArgs {
    /// Lattice JSON: emits the poset of join-irreducibles and verifies the
    /// round trip through downsets.
    #[arg(long)]
    lattice: Option<PathBuf>,
    /// Poset JSON: emits the lattice of lower sets.
    #[arg(long)]
    poset: Option<PathBuf>,
}

fn parse_bounds(text: &str) -> std::result::Result<Bounds, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err("bounds must be n,m,k".to_string());
    }
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.trim().parse().map_err(|_| format!("bad bound {p:?}")))
        .collect::<std::result::Result<_, String>>()?;
    Ok(Bounds::new(nums[0], nums[1], nums[2]))
}

/// Run with explicit output sinks; exit code per the scheme above.
pub fn run_with_output<I>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut argv = vec!["latcube".to_string()];
    argv.extend(args);
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "latcube: {e}");
            e.exit_code()
        }
    }
}

/// Run against the standard streams.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_with_output(args, &mut out, &mut err)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Normalize {
            n,
            term,
            theory,
            format,
        } => normalize_cmd(*n, term, *theory, *format, out),
        Command::Enumerate { n, count, theory } => enumerate_cmd(*n, *count, *theory, out),
        Command::Hom { m, n, theory, list } => hom_cmd(*m, *n, *theory, *list, out),
        Command::Dual(args) => dual_cmd(args, cli.seed, out),
        Command::Flat { lattice, bounds } => flat_cmd(lattice, *bounds, cli.seed, out),
        Command::Disjunction { lattice } => disjunction_cmd(lattice, cli.seed, out),
        Command::Realize {
            input,
            samples,
            max_dim,
            format,
            output,
        } => realize_cmd(input, *samples, *max_dim, *format, output.as_deref(), out),
        Command::Triangulate { input, max_dim } => triangulate_cmd(input, *max_dim, out),
        Command::Moore {
            input,
            edges,
            at,
            reverse,
            contract,
            max_dim,
        } => moore_cmd(
            input,
            edges,
            at.as_deref(),
            *reverse,
            *contract,
            *max_dim,
            out,
        ),
        Command::CompareBipointed { m, n } => compare_bipointed_cmd(*m, *n, out),
    }
}

fn write_line(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|e| Error::input(format!("write failed: {e}")))
}

fn normalize_cmd(
    n: usize,
    term_text: &str,
    theory: Theory,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let term = term::parse(term_text)?;
    let normal = match theory {
        Theory::Dl => lattice::normalize(&term, n)?.to_string(),
        Theory::Dm => lattice::normalize_dm(&term, n)?.to_string(),
        Theory::Bipointed => {
            return Err(Error::UnsupportedTheory(
                "the bipointed theory has no meets or joins to normalize".to_string(),
            ))
        }
    };
    match format {
        OutputFormat::Json => write_line(
            out,
            &serde_json::to_string(&json!({
                "input": term_text,
                "generators": n,
                "normal_form": normal,
            }))
            .expect("serializable"),
        )?,
        _ => write_line(out, &normal)?,
    }
    Ok(0)
}

fn enumerate_cmd(n: usize, count: bool, theory: Theory, out: &mut dyn Write) -> Result<i32> {
    let items: Vec<String> = match theory {
        Theory::Dl => lattice::enumerate_free(n)?
            .iter()
            .map(|e| e.to_string())
            .collect(),
        Theory::Dm => lattice::enumerate_free_dm(n)?
            .iter()
            .map(|e| e.to_string())
            .collect(),
        Theory::Bipointed => {
            let mut items = vec!["0".to_string(), "1".to_string()];
            items.extend((0..n).map(|i| format!("x{i}")));
            items
        }
    };
    if count {
        write_line(out, &items.len().to_string())?;
    } else {
        for item in items {
            write_line(out, &item)?;
        }
    }
    Ok(0)
}

fn hom_cmd(m: usize, n: usize, theory: Theory, list: bool, out: &mut dyn Write) -> Result<i32> {
    match theory {
        Theory::Dl => {
            if list {
                for f in cube::enumerate_hom(m, n)? {
                    write_line(out, &f.to_string())?;
                }
            } else {
                write_line(out, &cube::hom_count(m, n)?.to_string())?;
            }
        }
        Theory::Dm => {
            if list {
                return Err(Error::capacity(
                    "listing De Morgan hom-sets is not supported; use the count".to_string(),
                ));
            }
            write_line(out, &cube::dm_hom_count(m, n)?.to_string())?;
        }
        Theory::Bipointed => {
            let total = (m + 2)
                .checked_pow(u32::try_from(n).map_err(|_| Error::capacity("n too large"))?)
                .ok_or_else(|| Error::capacity("bipointed hom-set exceeds machine range"))?;
            if list {
                for f in cube::enumerate_bipointed(m, n) {
                    write_line(out, &cube::from_bipointed(&f).to_string())?;
                }
            } else {
                write_line(out, &total.to_string())?;
            }
        }
    }
    Ok(0)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

fn load_lattice(path: &Path) -> Result<FiniteLattice> {
    OrderJson::parse(&read_file(path)?)?.to_lattice()
}

fn dual_cmd(args: &DualArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    if let Some(path) = &args.lattice {
        let lattice = load_lattice(path)?;
        let (poset, down, iso) = duality::duality_roundtrip(&lattice)?;
        let poset_json = OrderJson::from_poset(&poset);
        let report = json!({
            "elements": poset_json.elements,
            "leq": poset_json.leq,
            "lattice_size": lattice.len(),
            "downset_lattice_size": down.len(),
            "roundtrip_verified": true,
            "iso": iso.forward,
            "seed": seed,
        });
        write_line(
            out,
            &serde_json::to_string_pretty(&report).expect("serializable"),
        )?;
        Ok(0)
    } else if let Some(path) = &args.poset {
        let poset = OrderJson::parse(&read_file(path)?)?.to_poset()?;
        let (lattice, masks) = duality::lower_sets(&poset);
        let lattice_json = OrderJson::from_lattice(&lattice);
        let report = json!({
            "elements": lattice_json.elements,
            "leq": lattice_json.leq,
            "downset_masks": masks,
            "seed": seed,
        });
        write_line(
            out,
            &serde_json::to_string_pretty(&report).expect("serializable"),
        )?;
        Ok(0)
    } else {
        Err(Error::input("dual needs --lattice or --poset".to_string()))
    }
}

fn flat_cmd(path: &Path, bounds: Bounds, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let lattice = load_lattice(path)?;
    let outcome = flatness::check_flatness_bounded(&lattice, bounds)?;
    let bounds_json = json!({"n": bounds.n_max, "m": bounds.m_max, "k": bounds.k_max});
    match outcome {
        FlatnessOutcome::FlatUpToBounds {
            instances_checked, ..
        } => {
            let report = json!({
                "status": "flat_up_to_bounds",
                "bounds": bounds_json,
                "instances_checked": instances_checked,
                "inhabited": true,
                "transitive": true,
                "counterexample": null,
                "witness": null,
                "seed": seed,
            });
            write_line(
                out,
                &serde_json::to_string_pretty(&report).expect("serializable"),
            )?;
            Ok(0)
        }
        FlatnessOutcome::Refuted { counterexample, .. } => {
            let point: Vec<&str> = counterexample
                .point
                .iter()
                .map(|&i| lattice.name(i))
                .collect();
            let report = json!({
                "status": "refuted",
                "bounds": bounds_json,
                "inhabited": true,
                "transitive": true,
                "counterexample": {
                    "alpha": counterexample.alpha.to_string(),
                    "beta": counterexample.beta.to_string(),
                    "point": point,
                },
                "witness": null,
                "seed": seed,
            });
            write_line(
                out,
                &serde_json::to_string_pretty(&report).expect("serializable"),
            )?;
            Ok(1)
        }
    }
}

fn disjunction_cmd(path: &Path, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let lattice = load_lattice(path)?;
    match flatness::check_disjunction_property(&lattice) {
        DisjunctionOutcome::Pass => {
            let report = json!({"status": "pass", "seed": seed});
            write_line(out, &serde_json::to_string(&report).expect("serializable"))?;
            Ok(0)
        }
        DisjunctionOutcome::Counterexample { a, b } => {
            let report = json!({
                "status": "counterexample",
                "a": lattice.name(a),
                "b": lattice.name(b),
                "seed": seed,
            });
            write_line(out, &serde_json::to_string(&report).expect("serializable"))?;
            Ok(1)
        }
    }
}

fn load_cubical_set(input: &str, max_dim: Option<usize>) -> Result<CubicalSet> {
    if corpus::BUILTIN_NAMES.contains(&input) {
        let dim = max_dim.unwrap_or_else(|| corpus::default_dim(input));
        corpus::builtin(input, dim)
    } else {
        let parsed = PresentationJson::parse(&read_file(Path::new(input))?)?;
        let mut presentation = parsed.to_presentation()?;
        if let Some(dim) = max_dim {
            presentation.max_dim = dim;
        }
        CubicalSet::from_presentation(&presentation)
    }
}

fn realize_cmd(
    input: &str,
    samples: usize,
    max_dim: Option<usize>,
    format: OutputFormat,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let set = load_cubical_set(input, max_dim)?;
    let mesh = realization::realize_numeric(&set, samples)?;
    let rendered = match format {
        OutputFormat::Off => realization::export_mesh(&mesh, MeshFormat::Off)?,
        OutputFormat::Obj => realization::export_mesh(&mesh, MeshFormat::Obj)?,
        OutputFormat::Json | OutputFormat::Text => {
            let points: Vec<_> = mesh
                .points
                .iter()
                .map(|p| {
                    json!({
                        "position": p.position,
                        "cell": p.cell,
                        "coords": p.coords.iter().map(|(n, d)| format!("{n}/{d}")).collect::<Vec<_>>(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({
                "input": input,
                "samples": samples,
                "points": points,
                "edges": mesh.edges,
                "triangles": mesh.triangles,
                "tetrahedra": mesh.tetrahedra,
                "euler_characteristic": mesh.euler_characteristic(),
            }))
            .expect("serializable")
                + "\n"
        }
    };
    match output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))?,
        None => {
            write!(out, "{rendered}").map_err(|e| Error::input(format!("write failed: {e}")))?
        }
    }
    Ok(0)
}

fn triangulate_cmd(input: &str, max_dim: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let set = load_cubical_set(input, max_dim)?;
    let complex = realization::triangulate(&set)?;
    let simplices: Vec<_> = complex
        .simplices()
        .map(|(dim, corners)| json!({"dim": dim, "corners": corners}))
        .collect();
    let report = json!({
        "input": input,
        "vertices": complex.vertex_labels(),
        "counts_per_dim": complex.counts_per_dim(),
        "top_simplices": complex.top_simplex_count(),
        "euler_characteristic": complex.euler_characteristic(),
        "simplices": simplices,
    });
    write_line(
        out,
        &serde_json::to_string_pretty(&report).expect("serializable"),
    )?;
    Ok(0)
}

fn moore_cmd(
    input: &str,
    edges: &str,
    at: Option<&str>,
    reverse: bool,
    contract: bool,
    max_dim: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32> {
    let default_dim = if contract { Some(2) } else { None };
    let set = load_cubical_set(input, max_dim.or(default_dim))?;
    let ctx = PathContext::new(&set)?;
    let edge_cells: Vec<_> = edges
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            set.cell_named(1, name)
                .ok_or_else(|| Error::input(format!("unknown edge {name:?}")))
        })
        .collect::<Result<_>>()?;
    let anchor = at
        .map(|name| {
            set.cell_named(0, name)
                .ok_or_else(|| Error::input(format!("unknown vertex {name:?}")))
        })
        .transpose()?;
    let path = ctx.path(&edge_cells, anchor)?;
    let cell_names =
        |ids: &[usize]| -> Vec<String> { ids.iter().map(|&i| set.cells(1)[i].clone()).collect() };
    let mut report = BTreeMap::new();
    report.insert("ambient".to_string(), json!(input));
    report.insert("edges".to_string(), json!(cell_names(path.edges())));
    report.insert("length".to_string(), json!(path.len()));
    report.insert("source".to_string(), json!(set.cell_name(path.source())));
    report.insert("target".to_string(), json!(set.cell_name(path.target())));
    if reverse {
        let reversed = ctx.reverse(&path)?;
        report.insert(
            "reversed".to_string(),
            json!({
                "edges": cell_names(reversed.edges()),
                "source": set.cell_name(reversed.source()),
                "target": set.cell_name(reversed.target()),
            }),
        );
    }
    if contract {
        let stairs = ctx.contract_path(&path)?;
        let rows: Vec<_> = stairs
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|sq| {
                        json!({
                            "cell": set.cell_name(sq.cell),
                            "bottom": set.cell_name(sq.bottom),
                            "top": set.cell_name(sq.top),
                            "left": set.cell_name(sq.left),
                            "right": set.cell_name(sq.right),
                        })
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        report.insert("staircase".to_string(), json!(rows));
    }
    write_line(
        out,
        &serde_json::to_string_pretty(&json!(report)).expect("serializable"),
    )?;
    Ok(0)
}

fn compare_bipointed_cmd(m: usize, n: usize, out: &mut dyn Write) -> Result<i32> {
    let bip = cube::enumerate_bipointed(m, n);
    let image: std::collections::BTreeSet<cube::CubeMorphism> =
        bip.iter().map(cube::from_bipointed).collect();
    let full = cube::enumerate_hom(m, n)?;
    let missing: Vec<String> = full
        .iter()
        .filter(|f| !image.contains(f))
        .map(|f| f.to_string())
        .collect();
    let report = json!({
        "m": m,
        "n": n,
        "bipointed_count": bip.len(),
        "image_count": image.len(),
        "cube_count": full.len(),
        "faithful": image.len() == bip.len(),
        "full": missing.is_empty(),
        "missing": missing,
    });
    write_line(
        out,
        &serde_json::to_string_pretty(&report).expect("serializable"),
    )?;
    Ok(0)
}
