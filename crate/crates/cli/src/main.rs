mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Output, VerifyArgs};
use input::{load_set, read_text, Input};
use straightlab::sset::MapJson;

#[derive(Parser)]
#[command(name = "straightlab", version, about = "Exact homological invariants of simplicial maps")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Degree budget for truncated nerves; overrides STRAIGHTLAB_CUTOFF.
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    /// Report elapsed_ms as 0.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a built simplicial set: point, simplex N, boundary N, polygon M, nerve G,
    /// enerve G, product A B, union A B, name EXPR.
    Gen { kind: String, args: Vec<String> },
    /// Homology of the normalized chains of a set (file, `-` or builder name).
    Homology { set: Option<String> },
    /// Enumerate Si(U, V) with homotopy classes.
    Maps { source: String, target: String },
    /// The class group [N U, N V], optionally with its universal-coefficient pieces.
    Classes {
        source: String,
        target: String,
        #[arg(long)]
        uct: bool,
    },
    /// h([s]) for a map document.
    MainInvariant { map: Option<String> },
    /// Straightness of an invariant table on maps of finite sets.
    StraightCheck { table: Option<String> },
    /// Straightness against factoring through h, for a table on [U, V].
    FactorCheck { table: Option<String> },
    /// Z/p (x) [N U, N V] -> [N U, N V; Z/p].
    BaseChange {
        source: String,
        target: String,
        #[arg(long)]
        prime: u64,
    },
    /// Run a verification suite, or one instance of it.
    Verify {
        suite: String,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long = "U")]
        u: Option<String>,
        #[arg(long = "V")]
        v: Option<String>,
        #[arg(long = "W")]
        w: Option<String>,
        #[arg(long = "K")]
        k: Option<u64>,
        #[arg(long = "X")]
        x: Option<usize>,
        #[arg(long = "Y")]
        y: Option<usize>,
    },
}

fn pair(source: &str, target: &str, cutoff: Option<usize>) -> Input<(std::sync::Arc<straightlab::sset::SimplicialSet>, std::sync::Arc<straightlab::sset::SimplicialSet>)> {
    let u = load_set(source, input::cutoff(cutoff, commands::GEN_CUTOFF)?)?;
    let v = load_set(target, input::cutoff(cutoff, u.top() + 2)?)?;
    Ok((u, v))
}

fn run(cli: &Cli) -> Input<Output> {
    let cutoff = cli.cutoff;
    match &cli.command {
        Command::Gen { kind, args } => commands::gen(kind, args, cutoff),
        Command::Homology { set } => {
            let c = input::cutoff(cutoff, commands::GEN_CUTOFF)?;
            let s = match set.as_deref() {
                None => input::set_from_text(&read_text(None)?, c)?,
                Some(a) => load_set(a, c)?,
            };
            commands::homology_of(&s)
        }
        Command::Maps { source, target } => {
            let (u, v) = pair(source, target, cutoff)?;
            commands::maps(&u, &v)
        }
        Command::Classes { source, target, uct } => {
            let (u, v) = pair(source, target, cutoff)?;
            commands::classes(&u, &v, *uct)
        }
        Command::MainInvariant { map } => {
            let j: MapJson = input::parse_json(&read_text(map.as_deref())?, "map")?;
            let s = j.to_map(input::cutoff(cutoff, commands::GEN_CUTOFF)?)?;
            commands::main_invariant_of(&s)
        }
        Command::StraightCheck { table } => commands::straight_check(&read_text(table.as_deref())?),
        Command::FactorCheck { table } => commands::factor_check(&read_text(table.as_deref())?, cutoff),
        Command::BaseChange { source, target, prime } => {
            let (u, v) = pair(source, target, cutoff)?;
            commands::base_change(&u, &v, *prime)
        }
        Command::Verify { suite, grid, u, v, w, k, x, y } => commands::verify_suite(&VerifyArgs {
            suite: suite.clone(),
            grid: grid.clone(),
            u: u.clone(),
            v: v.clone(),
            w: w.clone(),
            k: *k,
            x: *x,
            y: *y,
            cutoff,
            timing: !cli.no_timing,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("output serializes") + "\n",
                Format::Text => out.text,
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
