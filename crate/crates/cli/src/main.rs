mod dot;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use treedist::coloring::{
    color_distinct, color_fix_general, color_k_minus_1, color_one_ended, color_regular,
};
use treedist::symmetry::{distinguishing_number, fix_report};
use treedist::verifier::{self, render_table, Budget};
use treedist::{
    ceil_r, color_main_algorithm_with, gen_random_tree, AlgorithmTrace, Coloring, MainOptions,
    Rule, Tree,
};

#[derive(Parser)]
#[command(
    name = "treedist",
    version,
    about = "Symmetry-breaking colorings of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a tree and report how many vertices end up fixed.
    Color(ColorArgs),
    /// Check a coloring against the guarantee for its number of colors.
    Verify(VerifyArgs),
    /// Exact distinguishing number of a small tree.
    Dnumber {
        /// Edge-list file, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Largest color count to try (default: max valence + 1).
        #[arg(long)]
        max_colors: Option<u32>,
    },
    /// Print ceil(r(c, k)) over a range.
    Table {
        #[arg(long, default_value_t = 2)]
        c_min: u32,
        #[arg(long, default_value_t = 7)]
        c_max: u32,
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        #[arg(long, default_value_t = 16)]
        k_max: usize,
        /// Bare space-separated rows without a header.
        #[arg(long)]
        plain: bool,
    },
    /// Generate a seeded random tree.
    Gen {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 3)]
        k: usize,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check the guarantees on many seeded random trees.
    Campaign {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        k_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Main,
    #[value(name = "k-minus-1")]
    KMinus1,
    Regular,
    FixGeneral,
    OneEnded,
    Distinct,
}

#[derive(clap::Args)]
struct ColorArgs {
    /// Edge-list file, or '-' for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(short, long, default_value_t = 2)]
    colors: u32,
    #[arg(short, long, value_enum, default_value_t = Algorithm::Main)]
    algorithm: Algorithm,
    /// Start vertex for the main algorithm instead of the center.
    #[arg(long)]
    root: Option<usize>,
    /// Vertex to fix for `fix-general`.
    #[arg(long)]
    vertex: Option<usize>,
    /// Comma-separated ray for `one-ended`, starting at a leaf.
    #[arg(long, value_delimiter = ',')]
    ray: Vec<usize>,
    /// Valence bound for `fix-general` and `one-ended` (default: max valence,
    /// plus one for `fix-general`).
    #[arg(long)]
    k: Option<usize>,
    /// Write the coloring JSON here instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    tree: String,
    coloring: PathBuf,
    /// Color count for the guarantee (default: the coloring's, at least 2).
    #[arg(short, long)]
    colors: Option<u32>,
    /// Print the orbit report only.
    #[arg(long)]
    raw: bool,
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))
    }
}

fn read_tree(input: &str) -> Result<Tree> {
    Tree::parse_edge_list(&read_input(input)?).with_context(|| format!("parsing {input}"))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn lemma_trace(n: usize) -> AlgorithmTrace {
    AlgorithmTrace {
        rules: vec![Rule::LemmaRule; n],
        main_lines: Vec::new(),
        batches: Vec::new(),
        delegation: treedist::Delegation::KMinus1,
        threshold: treedist::RThreshold::Zero,
    }
}

fn cmd_color(args: ColorArgs) -> Result<ExitCode> {
    let tree = read_tree(&args.input)?;
    let k = tree.max_valence();
    let (col, trace) = match args.algorithm {
        Algorithm::Main => {
            let opts = MainOptions { root: args.root };
            color_main_algorithm_with(&tree, args.colors, &opts)?
        }
        Algorithm::KMinus1 => (color_k_minus_1(&tree)?, lemma_trace(tree.n())),
        Algorithm::Regular => (color_regular(&tree)?, lemma_trace(tree.n())),
        Algorithm::Distinct => (color_distinct(&tree, args.colors)?, lemma_trace(tree.n())),
        Algorithm::FixGeneral => {
            let Some(v) = args.vertex else {
                bail!("fix-general needs --vertex")
            };
            let k = args.k.unwrap_or(k.max(tree.degree(v) + 1));
            (color_fix_general(&tree, v, k)?, lemma_trace(tree.n()))
        }
        Algorithm::OneEnded => {
            if args.ray.is_empty() {
                bail!("one-ended needs --ray");
            }
            (
                color_one_ended(&tree, &args.ray, args.k.unwrap_or(k))?,
                lemma_trace(tree.n()),
            )
        }
    };

    let c = col.num_colors();
    let rep = fix_report(&tree, &col)?;
    let r_ceil = if c >= 2 {
        ceil_r(c, k)?.to_string()
    } else {
        "-".into()
    };
    let summary = format!(
        "n={} k={k} c={c} r_ceil={r_ceil} fixed={}/{}",
        tree.n(),
        rep.num_fixed(),
        tree.n()
    );

    if let Some(path) = &args.trace {
        write(path, &trace.to_json())?;
    }
    if let Some(path) = &args.dot {
        write(path, &dot::to_dot(&tree, &col, &trace.main_line_edges()))?;
    }
    match &args.out {
        Some(path) => {
            write(path, &col.to_json())?;
            println!("{summary}");
        }
        None => {
            println!("{}", col.to_json());
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let tree = read_tree(&args.tree)?;
    let text = fs::read_to_string(&args.coloring)
        .with_context(|| format!("reading {}", args.coloring.display()))?;
    let col = Coloring::from_json(&text)?;
    col.check_total(tree.n())?;
    if args.raw {
        println!("{}", fix_report(&tree, &col)?.to_json());
        return Ok(ExitCode::SUCCESS);
    }
    let budget = Budget::from_env()?;
    let c = args.colors.unwrap_or(col.num_colors().max(2));
    let report = verifier::verify_coloring_guarantee(&tree, &col, c, &budget)?;
    println!("{}", report.to_json());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Color(args) => cmd_color(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Dnumber { input, max_colors } => {
            let tree = read_tree(&input)?;
            let budget = Budget::from_env()?;
            let max = max_colors.unwrap_or(tree.max_valence() as u32 + 1);
            println!("{}", distinguishing_number(&tree, max, &budget.search())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            c_min,
            c_max,
            k_min,
            k_max,
            plain,
        } => {
            if c_min < 2 {
                bail!("c must be at least 2");
            }
            print!("{}", render_table(c_min..=c_max, k_min..=k_max, plain));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, k, seed, out } => {
            let tree = gen_random_tree(n, k, seed)?;
            let body = tree.to_edge_list();
            let (header, edges) = body.split_once('\n').unwrap_or((&body, ""));
            let text = format!("{header}\n# k={k} seed={seed}\n{edges}");
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Campaign {
            trials,
            n_max,
            k_max,
            seed,
            workers,
        } => {
            let budget = Budget::from_env()?;
            let report = verifier::run_random_campaign_parallel(
                trials, n_max, k_max, seed, &budget, workers,
            )?;
            println!("{}", report.to_json());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
