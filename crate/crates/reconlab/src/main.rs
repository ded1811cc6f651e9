//! Command-line driver: enumeration, decks, hypomorphy checks, subset
//! permutation lifting, and the verification sweeps.
//!
//! Exit codes: 0 = success / claim verified, 2 = counterexample found,
//! 1 = usage or internal error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use reconlab::error::Result;
use reconlab::graph6::emit_graph6;
use reconlab::jsonio::AnyStructure;
use reconlab::kperm::SubsetPermutation;
use reconlab::verify::{DiagonalMode, Report, SweepKind, Verdict};
use reconlab::{enumerate, kperm, verify, Error};

#[derive(Parser)]
#[command(
    name = "reconlab",
    version,
    about = "Verification laboratory for finite graph reconstruction",
    disable_help_subcommand = true
)]
struct Cli {
    /// Worker threads for sweeps (0 = all cores). Never changes output.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Simple,
    Colored,
    Multigraph,
    Hypergraph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagonalArg {
    Constant,
    Free,
}

impl From<DiagonalArg> for DiagonalMode {
    fn from(d: DiagonalArg) -> Self {
        match d {
            DiagonalArg::Constant => DiagonalMode::Constant,
            DiagonalArg::Free => DiagonalMode::Free,
        }
    }
}

#[derive(Args)]
struct KindParams {
    /// Structure family.
    #[arg(long, value_enum, default_value_t = KindArg::Simple)]
    kind: KindArg,

    /// Edge color count for --kind colored.
    #[arg(long, default_value_t = 3)]
    colors: usize,

    /// Hyperedge arity for --kind hypergraph.
    #[arg(long, default_value_t = 3)]
    arity: usize,

    /// Layer count for --kind multigraph.
    #[arg(long, default_value_t = 2)]
    layers: usize,
}

impl KindParams {
    fn sweep_kind(&self) -> SweepKind {
        match self.kind {
            KindArg::Simple => SweepKind::Simple,
            KindArg::Colored => SweepKind::Colored { k: self.colors },
            KindArg::Multigraph => SweepKind::Multigraph {
                layers: self.layers,
            },
            KindArg::Hypergraph => SweepKind::Hypergraph { m: self.arity },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit one representative per isomorphism class (or seeded random
    /// graphs with --random).
    Enumerate {
        /// Base size.
        #[arg(long)]
        n: usize,

        #[command(flatten)]
        kind: KindParams,

        /// Emit this many seeded random simple graphs instead of the
        /// exhaustive stream.
        #[arg(long)]
        random: Option<usize>,

        /// Edge probability for --random.
        #[arg(long, default_value_t = 0.5)]
        p: f64,

        /// Seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Print the deck (card certificates) of one structure.
    Deck {
        /// Input file: graph6 for simple graphs, JSON otherwise; "-" reads
        /// stdin.
        #[arg(long = "in")]
        input: String,
    },

    /// Compare the decks of two structures; exit 2 when they are
    /// hypomorphic but not isomorphic.
    Hypomorphic {
        /// First structure file (graph6 or JSON).
        a: String,
        /// Second structure file.
        b: String,
    },

    /// Lift a subset permutation (given by excluded-vertex images) to the
    /// vertex permutation inducing it.
    Lift {
        /// Images of excluded vertices: `--images 1,2,0` maps the subset
        /// excluding 0 to the subset excluding 1, and so on.
        #[arg(long, value_delimiter = ',', required = true)]
        images: Vec<usize>,
    },

    /// Run a verification sweep and write its report.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
}

#[derive(Subcommand)]
enum Claim {
    /// Subset-permutation lifting: every (n-1)-subset permutation is induced
    /// by exactly one vertex permutation.
    Theorem1 {
        #[arg(long)]
        n: usize,
    },

    /// Hypomorphic structures are isomorphic, over one exhaustive family.
    Ulam {
        #[arg(long)]
        n: usize,

        #[command(flatten)]
        kind: KindParams,

        /// Allow the n = 9 simple sweep (274668 classes; minutes of work).
        #[arg(long)]
        allow_large: bool,
    },

    /// Equal measure vectors imply isomorphism (and coincide with decks).
    Measure {
        #[arg(long)]
        n: usize,
    },

    /// Symmetric matrices with equal principal-submatrix decks are
    /// permutation-congruent.
    Matrix {
        #[arg(long)]
        n: usize,

        /// Matrix entry alphabet size.
        #[arg(long, default_value_t = 2)]
        alphabet: usize,

        /// Diagonal handling: constant or free.
        #[arg(long, value_enum, default_value_t = DiagonalArg::Constant)]
        diagonal: DiagonalArg,
    },

    /// A measure-preserving subset permutation between two structures
    /// forces an isomorphism.
    LemmaL2 {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Enumerate {
            n,
            kind,
            random,
            p,
            seed,
        } => cmd_enumerate(cli, *n, kind, *random, *p, *seed),
        Command::Deck { input } => cmd_deck(cli, input),
        Command::Hypomorphic { a, b } => cmd_hypomorphic(cli, a, b),
        Command::Lift { images } => cmd_lift(cli, images),
        Command::Verify { claim } => cmd_verify(cli, claim),
    }
}

fn write_output(cli: &Cli, content: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| Error::Json(e.to_string()))?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| Error::Json(e.to_string()))?;
        }
    }
    Ok(())
}

fn read_structure(path: &str) -> Result<AnyStructure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin().lock(), &mut buf)
            .map_err(|e| Error::Json(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Json(format!("cannot read {path}: {e}")))?
    };
    AnyStructure::parse_text(&text)
}

fn cmd_enumerate(
    cli: &Cli,
    n: usize,
    kind: &KindParams,
    random: Option<usize>,
    p: f64,
    seed: u64,
) -> Result<ExitCode> {
    let lines: Vec<String> = if let Some(count) = random {
        if kind.kind != KindArg::Simple {
            return Err(Error::InvalidStructure(
                "--random generates simple graphs only".into(),
            ));
        }
        let mut rng = enumerate::SplitMix64::new(seed);
        (0..count)
            .map(|_| {
                let g = enumerate::random_graph(n, p, rng.next_u64())?;
                emit_graph6(&g)
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        match kind.sweep_kind() {
            SweepKind::Simple => enumerate::all_graphs(n)?
                .iter()
                .map(emit_graph6)
                .collect::<Result<Vec<_>>>()?,
            SweepKind::Colored { k } => enumerate::all_colored(n, k)?
                .into_iter()
                .map(|g| AnyStructure::from(g).to_text())
                .collect::<Result<Vec<_>>>()?,
            SweepKind::Multigraph { layers } => enumerate::all_multigraphs(n, layers)?
                .into_iter()
                .map(|g| AnyStructure::from(g).to_text())
                .collect::<Result<Vec<_>>>()?,
            SweepKind::Hypergraph { m } => enumerate::all_hypergraphs(n, m)?
                .into_iter()
                .map(|g| AnyStructure::from(g).to_text())
                .collect::<Result<Vec<_>>>()?,
        }
    };
    let content = match cli.format {
        Format::Json => {
            let values: Vec<serde_json::Value> = lines
                .iter()
                .map(|l| {
                    if l.starts_with('{') {
                        serde_json::from_str(l).map_err(Error::from)
                    } else {
                        Ok(serde_json::Value::String(l.clone()))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            format!("{}\n", serde_json::to_string_pretty(&values)?)
        }
        _ => format!("{}\n", lines.join("\n")),
    };
    write_output(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_deck(cli: &Cli, input: &str) -> Result<ExitCode> {
    let structure = read_structure(input)?;
    let deck = structure.deck()?;
    let hash = reconlab::deck_hash(&deck);
    let content = match cli.format {
        Format::Json => {
            let cards: Vec<String> = deck.cards().iter().map(|c| c.hash_hex()).collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&serde_json::json!({
                    "kind": structure.kind_label(),
                    "n": structure.n(),
                    "deck_hash": format!("{hash:032x}"),
                    "cards": cards,
                }))?
            )
        }
        _ => {
            let mut s = String::new();
            for c in deck.cards() {
                s.push_str(&c.hash_hex());
                s.push('\n');
            }
            s
        }
    };
    write_output(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_hypomorphic(cli: &Cli, a: &str, b: &str) -> Result<ExitCode> {
    let sa = read_structure(a)?;
    let sb = read_structure(b)?;
    let hypomorphic = sa.hypomorphic_to(&sb)?;
    let witness = sa.isomorphic_to(&sb)?;
    let isomorphic = witness.is_some();
    let (text, code) = match (hypomorphic, isomorphic) {
        (true, false) => ("hypomorphic, not isomorphic".to_string(), 2),
        (true, true) => ("hypomorphic and isomorphic".to_string(), 0),
        (false, _) => ("not hypomorphic".to_string(), 0),
    };
    let content = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&serde_json::json!({
                "hypomorphic": hypomorphic,
                "isomorphic": isomorphic,
                "witness": witness.map(|w| w.images().to_vec()),
            }))?
        ),
        _ => format!("{text}\n"),
    };
    write_output(cli, &content)?;
    Ok(ExitCode::from(code))
}

fn cmd_lift(cli: &Cli, images: &[usize]) -> Result<ExitCode> {
    let s = SubsetPermutation::from_excluded_images(images.to_vec())?;
    let lifted = kperm::lift(&s);
    let induces = kperm::induces(&lifted, &s)?;
    let content = match cli.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&serde_json::json!({
                "n": s.n(),
                "excluded_images": s.excluded_images(),
                "lifted": lifted.images(),
                "induces": induces,
            }))?
        ),
        _ => format!(
            "lifted permutation: {:?}\ninduces the subset permutation: {induces}\n",
            lifted.images()
        ),
    };
    write_output(cli, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn report_csv(report: &Report) -> String {
    let parameters = report
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "claim_id,parameters,instances_checked,counterexamples,verdict,elapsed_ms\n{},{},{},{},{},{}\n",
        report.claim_id,
        parameters,
        report.instances_checked,
        report.counterexamples.len(),
        report.verdict,
        report.elapsed_ms
    )
}

fn report_text(report: &Report) -> String {
    let parameters = report
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    let mut s = format!(
        "claim {} ({parameters}): {} instances checked, {} counterexamples -> {}\n",
        report.claim_id,
        report.instances_checked,
        report.counterexamples.len(),
        report.verdict
    );
    for cex in &report.counterexamples {
        s.push_str(&format!("  counterexample: {}", cex.a));
        if let Some(b) = &cex.b {
            s.push_str(&format!(" vs {b}"));
        }
        if let Some(h) = &cex.deck_hash {
            s.push_str(&format!(" (deck {h})"));
        }
        s.push('\n');
    }
    s
}

fn cmd_verify(cli: &Cli, claim: &Claim) -> Result<ExitCode> {
    let report = match claim {
        Claim::Theorem1 { n } => verify::verify_theorem1(*n)?,
        Claim::Ulam {
            n,
            kind,
            allow_large,
        } => match kind.sweep_kind() {
            SweepKind::Simple if *allow_large => verify::verify_ulam_simple_capped(*n, 9)?,
            SweepKind::Simple if *n > 8 => {
                return Err(Error::CapExceeded {
                    what: "simple Ulam sweep (pass --allow-large for n = 9)",
                    requested: *n,
                    cap: 8,
                });
            }
            other => verify::verify_ulam(*n, other)?,
        },
        Claim::Measure { n } => verify::verify_measure_theorem(*n)?,
        Claim::Matrix {
            n,
            alphabet,
            diagonal,
        } => verify::verify_matrix_corollary(*n, *alphabet, (*diagonal).into())?,
        Claim::LemmaL2 { n } => verify::verify_lemma_l2(*n)?,
    };
    let content = match cli.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => report_csv(&report),
        Format::Text => report_text(&report),
    };
    write_output(cli, &content)?;
    Ok(match report.verdict {
        Verdict::Refuted => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    })
}
