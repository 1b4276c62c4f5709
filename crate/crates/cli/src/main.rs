use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use flagmap::census::stability_census;
use flagmap::diagram::export_diagram;
use flagmap::families::{
    glide_automorphism, hosohedron, icosahedron, k6_projective, nn2, reflection_automorphism,
    semi_star, sym_map, torus_44, Glide, Lattice, ReflectionFamily,
};
use flagmap::group_level::family_report;
use flagmap::io::{parse_map_file, serialize_cover, serialize_map};
use flagmap::ops::{dual, medial, petrie};
use flagmap::perm::{generate_closure, DEFAULT_CLOSURE_CAP};
use flagmap::{
    automorphism_group, orientable_double_cover, quotient_by, stability_report, surface_invariants,
    symmetry_class, FlagSystem, Kind, Permutation, StabilitySummary,
};
use serde_json::json;

/// Maps and hypermaps as flag systems: covers, quotients, symmetry and
/// stability.
#[derive(Parser)]
#[command(name = "flagmap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a map from a named family and print it as map JSON.
    Build {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Surface invariants, automorphism group, symmetry class and stability.
    Analyze { input: String },
    /// Canonical orientable double cover, with its deck involution.
    Cover {
        input: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Quotient by the group generated by the given automorphisms.
    Quotient {
        input: String,
        /// Automorphism in 1-based cycle notation on flags; repeatable.
        #[arg(long = "auto", value_name = "CYCLES")]
        autos: Vec<String>,
        /// Glide reflection of a `build torus44` map with the same lattice.
        #[arg(long, value_enum, requires = "m")]
        glide: Option<GlideArg>,
        #[arg(long)]
        m: Option<usize>,
        /// Edge reflection of a `build hosohedron` or `build semistar` map.
        #[arg(long, value_enum, requires = "n")]
        reflection: Option<ReflectionArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Apply a map operation.
    Op {
        #[arg(value_enum)]
        op: OpArg,
        input: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all maps or hypermaps up to a flag count, with stability.
    Census {
        #[arg(long)]
        max_flags: usize,
        #[arg(long, value_enum, default_value = "map")]
        kind: KindArg,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Print per-flag-count totals instead of one row per class.
        #[arg(long)]
        summary: bool,
    },
    /// Quotients of the regular map of the symmetric-group family, computed
    /// in the group.
    Sym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        hypermap: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Flag diagram in Graphviz DOT.
    ExportDot { input: String },
    /// Run the acceptance checks and print one line per criterion.
    VerifyPaper,
}

#[derive(Subcommand)]
enum Family {
    Hosohedron {
        #[arg(long)]
        n: usize,
    },
    Semistar {
        #[arg(long)]
        n: usize,
    },
    Torus44 {
        #[arg(long, value_enum)]
        lattice: GlideArg,
        #[arg(long)]
        m: usize,
    },
    Nn2 {
        #[arg(long)]
        n: usize,
    },
    Icosahedron,
    K6p2,
    Symmap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        hypermap: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GlideArg {
    Diag,
    Rect,
}

impl GlideArg {
    fn lattice(self, m: usize) -> Lattice {
        match self {
            GlideArg::Diag => Lattice::Diag(m),
            GlideArg::Rect => Lattice::Rect(m),
        }
    }

    fn glide(self) -> Glide {
        match self {
            GlideArg::Diag => Glide::Diag,
            GlideArg::Rect => Glide::Rect,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReflectionArg {
    Hosohedron,
    Semistar,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Dual,
    Petrie,
    Medial,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Map,
    Hypermap,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn read_input(input: &str) -> Result<FlagSystem> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    Ok(parse_map_file(&text)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn build(family: &Family) -> Result<FlagSystem> {
    Ok(match *family {
        Family::Hosohedron { n } => hosohedron(n)?,
        Family::Semistar { n } => semi_star(n)?,
        Family::Torus44 { lattice, m } => torus_44(lattice.lattice(m))?,
        Family::Nn2 { n } => nn2(n)?.map,
        Family::Icosahedron => icosahedron()?.map,
        Family::K6p2 => k6_projective()?,
        Family::Symmap { n, hypermap } => sym_map(n, hypermap)?.map,
    })
}

fn analyze(fs: &FlagSystem) -> Result<serde_json::Value> {
    let invariants = surface_invariants(fs);
    let aut = automorphism_group(fs);
    let class = symmetry_class(fs, &aut);
    let (stability, summary) = if fs.is_orientable_closed() {
        (None, None)
    } else {
        let report = stability_report(fs)?;
        let summary = StabilitySummary::new(&report, &class);
        (Some(report), Some(summary))
    };
    Ok(json!({
        "kind": fs.kind(),
        "invariants": invariants,
        "autOrder": aut.order(),
        "symmetry": class,
        "stability": stability,
        "summary": summary,
    }))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build { family, out } => emit(out.as_ref(), &serialize_map(&build(&family)?))?,
        Command::Analyze { input } => {
            let value = analyze(&read_input(&input)?)?;
            emit(None, &serde_json::to_string_pretty(&value)?)?;
        }
        Command::Cover { input, out } => {
            let dc = orientable_double_cover(&read_input(&input)?)?;
            emit(out.as_ref(), &serialize_cover(&dc))?;
        }
        Command::Quotient {
            input,
            autos,
            glide,
            m,
            reflection,
            n,
            out,
        } => {
            let fs = read_input(&input)?;
            let mut gens = Vec::new();
            for text in &autos {
                gens.push(Permutation::parse_cycles(text, fs.flags())?);
            }
            if let (Some(g), Some(m)) = (glide, m) {
                gens.push(glide_automorphism(g.lattice(m), g.glide())?);
            }
            if let (Some(r), Some(n)) = (reflection, n) {
                let family = match r {
                    ReflectionArg::Hosohedron => ReflectionFamily::Hosohedron,
                    ReflectionArg::Semistar => ReflectionFamily::SemiStar,
                };
                gens.push(reflection_automorphism(family, n)?);
            }
            if gens.is_empty() {
                bail!("no automorphism given: use --auto, --glide or --reflection");
            }
            let group = generate_closure(&gens, fs.flags(), DEFAULT_CLOSURE_CAP)?;
            emit(out.as_ref(), &serialize_map(&quotient_by(&fs, &group)?))?;
        }
        Command::Op { op, input, out } => {
            let fs = read_input(&input)?;
            let result = match op {
                OpArg::Dual => dual(&fs),
                OpArg::Petrie => petrie(&fs)?,
                OpArg::Medial => medial(&fs)?,
            };
            emit(out.as_ref(), &serialize_map(&result))?;
        }
        Command::Census {
            max_flags,
            kind,
            out,
            summary,
        } => {
            let kind = match kind {
                KindArg::Map => Kind::Map,
                KindArg::Hypermap => Kind::Hypermap,
            };
            let census = stability_census(max_flags, kind);
            let text = if summary {
                census.summary_csv()
            } else {
                census.to_csv()
            };
            emit(out.as_ref(), &text)?;
        }
        Command::Sym {
            n,
            hypermap,
            format,
        } => {
            let report = family_report(n, hypermap)?;
            let text = match format {
                FormatArg::Json => serde_json::to_string_pretty(&report)?,
                FormatArg::Csv => report.to_csv(),
            };
            emit(None, &text)?;
        }
        Command::ExportDot { input } => emit(None, &export_diagram(&read_input(&input)?))?,
        Command::VerifyPaper => {
            let mut all = true;
            for (_, check) in flagmap::verify::CRITERIA {
                let result = check();
                println!("{result}");
                all &= result.passed;
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
