//! The `posetlab` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input or
//! flags, 3 a computation hit its cap.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::budget::Budget;
use crate::containment::{contains_subposet, kelly_number, se, wheel_number, FamilyNumber};
use crate::dimension::dim_exact;
use crate::embedding::{is_planar, Planarity};
use crate::error::{Error, Result};
use crate::families;
use crate::harness::{self, Manifest, Suite};
use crate::io;
use crate::layout;
use crate::metrics::{grid_minor, grid_subgraph, treewidth_exact};
use crate::poset::Poset;
use crate::witness::{verify_lemma_certificate, Direction, PlanePoset};

#[derive(Debug, Parser)]
#[command(
    name = "posetlab",
    version,
    about = "Dimension, containment and planar structure of finite posets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    Standard,
    Wheel,
    Kelly,
    Interval,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Wheel,
    Height,
    MinimalTw,
    Grid,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named poset as JSON.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        attach_max: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact dimension.
    Dim {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Standard example number.
    Se {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Largest wheel contained, falling back to se.
    Wheel {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Largest Kelly poset contained, falling back to se.
    Kelly {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Search for a copy of the pattern as a subposet.
    Contains {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Planarity test and plane embedding of the cover graph.
    Embed {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the embedding JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Leftmost or rightmost witnessing path to an element.
    Paths {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long)]
        side: SideArg,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check the four items of an interval certificate.
    VerifyCertificate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Exact treewidth of a graph (poset JSON, orientation ignored).
    Tw {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Search for an n x n grid subgraph or minor.
    Grid {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        minor: bool,
    },
    /// Run theorem suites over a manifest corpus.
    Verify {
        #[arg(long)]
        suite: SuiteArg,
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => 3,
        Error::Format(_)
        | Error::UnknownElement(_)
        | Error::DuplicateElement(_)
        | Error::CycleDetected(_)
        | Error::MalformedCertificate(_)
        | Error::InvalidEmbedding(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn witness_json(p: &Poset, f: &FamilyNumber) -> serde_json::Value {
    match &f.witness {
        Some((order, map)) => serde_json::json!({
            "order": order,
            "image": map.iter().map(|&v| p.label(v)).collect::<Vec<_>>(),
        }),
        None => serde_json::json!({
            "order": f.value,
            "standard_example": f.se.pairs.iter().map(|&(a, b)| [p.label(a), p.label(b)]).collect::<Vec<_>>(),
        }),
    }
}

/// Runs one command, writing line-oriented results to `out`.
pub fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let budget = Budget::default();
    match cmd {
        Command::Gen {
            family,
            order,
            attach_max,
            seed,
            out: path,
        } => {
            let p = match family {
                Family::Standard => families::standard_example(order)?,
                Family::Wheel => families::wheel(order, attach_max)?,
                Family::Kelly => families::kelly(order)?,
                Family::Interval => match seed {
                    Some(s) => families::interval_order(s, order),
                    None => families::interval_order_all(order),
                },
                Family::Random => {
                    families::random_cover_planar_with_unique_min(seed.unwrap_or(0), order)
                }
            };
            io::write_poset(&p, &path)?;
            writeln!(out, "{}", p.len())?;
        }
        Command::Dim {
            input,
            cap,
            certificate,
        } => {
            let p = io::read_poset(&input)?;
            let c = dim_exact(&p, cap, &budget)?;
            if let Some(path) = certificate {
                io::write_json(&io::RealizerFile::of(&p, &c.realizer), path)?;
            }
            writeln!(out, "{}", c.dimension)?;
        }
        Command::Se {
            input,
            cap,
            witness,
        } => {
            let p = io::read_poset(&input)?;
            let s = se(&p, cap, &budget)?;
            if let Some(path) = witness {
                let pairs: Vec<[&str; 2]> = s
                    .pairs
                    .iter()
                    .map(|&(a, b)| [p.label(a), p.label(b)])
                    .collect();
                io::write_json(
                    &serde_json::json!({ "order": s.value, "pairs": pairs }),
                    path,
                )?;
            }
            writeln!(out, "{}", s.value)?;
        }
        Command::Wheel {
            input,
            cap,
            witness,
        } => family_command(&input, cap, witness, true, &budget, out)?,
        Command::Kelly {
            input,
            cap,
            witness,
        } => family_command(&input, cap, witness, false, &budget, out)?,
        Command::Contains { pattern, input } => {
            let host = io::read_poset(&input)?;
            let pat = io::read_poset(&pattern)?;
            match contains_subposet(&host, &pat, &budget)? {
                Some(map) => {
                    writeln!(out, "found")?;
                    for (i, &v) in map.iter().enumerate() {
                        writeln!(out, "{} {}", pat.label(i), host.label(v))?;
                    }
                }
                None => writeln!(out, "not-found")?,
            }
        }
        Command::Embed {
            input,
            out: path,
            svg,
            dot,
        } => {
            let p = io::read_poset(&input)?;
            let cover = crate::graph::CoverGraph::of(&p);
            if let Some(d) = &dot {
                std::fs::write(d, layout::dot(&p))?;
            }
            match is_planar(&cover.graph) {
                Planarity::NonPlanar(w) => {
                    let names: Vec<&str> = w.branch_vertices.iter().map(|&v| p.label(v)).collect();
                    writeln!(out, "nonplanar {:?} {}", w.kind, names.join(" "))?;
                    if svg.is_some() || path.is_some() {
                        return Err(Error::NotPlanar);
                    }
                }
                Planarity::Planar(emb) => {
                    let emb = match p.minimal_elements().as_slice() {
                        [x0] => emb.with_e_infinity_at(*x0)?,
                        _ => *emb,
                    };
                    writeln!(out, "planar faces={}", emb.faces().len())?;
                    if let Some(path) = path {
                        std::fs::write(path, io::embedding_to_json(&emb, &p) + "\n")?;
                    }
                    if let Some(path) = svg {
                        std::fs::write(path, layout::svg(&emb, &layout::tutte_layout(&emb), &[]))?;
                    }
                }
            }
        }
        Command::Paths {
            input,
            embedding,
            target,
            side,
            svg,
        } => {
            let p = io::read_poset(&input)?;
            let emb = io::read_embedding(&embedding, &p)?;
            let u = p.index_of(&target)?;
            let pp = PlanePoset::new(p, emb)?;
            let dir = match side {
                SideArg::Left => Direction::Left,
                SideArg::Right => Direction::Right,
            };
            let path = pp.witnessing_path(u, dir);
            let names: Vec<&str> = path.iter().map(|&v| pp.poset().label(v)).collect();
            writeln!(out, "{}", names.join(" "))?;
            if let Some(file) = svg {
                let e = pp.embedding();
                std::fs::write(file, layout::svg(e, &layout::tutte_layout(e), &path))?;
            }
        }
        Command::VerifyCertificate {
            input,
            embedding,
            cert,
        } => {
            let p = io::read_poset(&input)?;
            let emb = io::read_embedding(&embedding, &p)?;
            let c = io::read_certificate(&cert, &p)?;
            let pp = PlanePoset::new(p, emb)?;
            let report = verify_lemma_certificate(&pp, &c)?;
            for (i, item) in report.items.iter().enumerate() {
                match &item.counterexample {
                    None => writeln!(out, "item {} pass", i + 1)?,
                    Some(c) => writeln!(out, "item {} fail {}", i + 1, c)?,
                }
            }
            return Ok(if report.holds() { 0 } else { 1 });
        }
        Command::Tw { input, cap } => {
            let g = io::read_graph(&input)?;
            let t = treewidth_exact(&g, cap, &budget)?;
            writeln!(out, "{}", t.width)?;
        }
        Command::Grid { input, n, minor } => {
            let g = io::read_graph(&input)?;
            let found = if minor {
                grid_minor(&g, n, &budget)?.map(|b| {
                    b.iter()
                        .map(|set| {
                            set.iter()
                                .map(|&v| g.label(v))
                                .collect::<Vec<_>>()
                                .join("+")
                        })
                        .collect::<Vec<_>>()
                })
            } else {
                grid_subgraph(&g, n, &budget)?
                    .map(|m| m.iter().map(|&v| g.label(v).to_string()).collect())
            };
            match found {
                Some(cells) => {
                    writeln!(out, "found")?;
                    for (k, c) in cells.iter().enumerate() {
                        writeln!(out, "g({},{}) {}", k / n, k % n, c)?;
                    }
                }
                None => writeln!(out, "not-found")?,
            }
        }
        Command::Verify {
            suite,
            manifest,
            out: path,
        } => {
            let m = match manifest {
                Some(path) => Manifest::load(path)?,
                None => Manifest::builtin(),
            };
            let suites: Vec<Suite> = match suite {
                SuiteArg::Wheel => vec![Suite::Wheel],
                SuiteArg::Height => vec![Suite::Height],
                SuiteArg::MinimalTw => vec![Suite::MinimalTw],
                SuiteArg::Grid => vec![Suite::Grid],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let report = harness::run(&m, &suites)?;
            for s in &report.suites {
                for o in &s.outcomes {
                    let values: Vec<String> =
                        o.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(
                        out,
                        "{} {} {} {}",
                        s.suite.name(),
                        o.id,
                        o.status,
                        values.join(" ")
                    )?;
                }
            }
            for s in &report.suites {
                writeln!(
                    out,
                    "summary {} pass={} fail={} unknown={} n/a={}",
                    s.suite.name(),
                    s.count(harness::Status::Pass),
                    s.count(harness::Status::Fail),
                    s.count(harness::Status::Unknown),
                    s.count(harness::Status::NotApplicable)
                )?;
            }
            if let Some(path) = path {
                io::write_json(&report, path)?;
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn family_command(
    input: &PathBuf,
    cap: usize,
    witness: Option<PathBuf>,
    wheel: bool,
    budget: &Budget,
    out: &mut dyn Write,
) -> Result<()> {
    let p = io::read_poset(input)?;
    let f = if wheel {
        wheel_number(&p, cap, budget)?
    } else {
        kelly_number(&p, cap, budget)?
    };
    if let Some(path) = witness {
        io::write_json(&witness_json(&p, &f), path)?;
    }
    writeln!(out, "{}", f.value)?;
    Ok(())
}
