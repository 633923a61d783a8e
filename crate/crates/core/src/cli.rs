//! The `ptcut` command line. Exit status: 0 for yes or success, 1 for no,
//! 2 for usage and input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::driver::{decide, k_for_target, solve};
use crate::graph::{edwards_erdos_quarters, poljak_turzik_quarters, Cut, Weight, WeightedGraph};
use crate::io::gen::{generate, Family};
use crate::io::trace::write_trace;
use crate::io::{read_graph_file, serialize_graph};
use crate::oracle::brute_max_cut;
use crate::reduction::{reduce, Mode};

#[derive(Parser, Debug)]
#[command(name = "ptcut", version, about = "Exact MaxCut above the Poljak-Turzik bound")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a cut of the requested size exists.
    Decide {
        #[command(flatten)]
        k: Excess,
        file: PathBuf,
    },
    /// Like decide, and print a witness cut when the answer is yes.
    Solve {
        #[command(flatten)]
        k: Excess,
        /// Also write the cut record to this file.
        #[arg(long)]
        emit_cut: Option<PathBuf>,
        file: PathBuf,
    },
    /// Print the Poljak-Turzik and Edwards-Erdős lower bounds.
    Bound { file: PathBuf },
    /// Maximum cut by exhaustive search (at most 24 vertices).
    Oracle { file: PathBuf },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        /// Output file; standard output when omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Print the full reduction trace as one JSON record per line.
    Trace {
        #[command(flatten)]
        k: TraceExcess,
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Excess {
    /// Excess over the bound in whole units: the target is PT + k.
    #[arg(short = 'k', allow_negative_numbers = true)]
    k: Option<i64>,
    /// Excess in quarter units.
    #[arg(long, allow_negative_numbers = true)]
    quarters: Option<i64>,
    /// Absolute cut weight to reach.
    #[arg(long, allow_negative_numbers = true)]
    target: Option<Weight>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct TraceExcess {
    /// Excess over the bound in whole units.
    #[arg(short = 'k', allow_negative_numbers = true)]
    k: Option<i64>,
    /// Excess in quarter units.
    #[arg(long, allow_negative_numbers = true)]
    quarters: Option<i64>,
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    /// Path on i+1 vertices, every edge of weight 2.
    #[command(name = "obs6-tree")]
    WeightTwoTree { i: usize },
    /// Unit clique on 2t+1 vertices.
    OddClique { t: usize },
    /// Connected random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        wmax: Weight,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random connected uniform-clique-forest.
    Ucf {
        #[arg(long)]
        blocks: usize,
        #[arg(long, default_value_t = 3)]
        maxblock: usize,
        #[arg(long, default_value_t = 1)]
        wmax: Weight,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Small instance whose first reduction step is the given rule.
    RuleGallery {
        rule: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl From<GenFamily> for Family {
    fn from(f: GenFamily) -> Self {
        match f {
            GenFamily::WeightTwoTree { i } => Family::WeightTwoTree { i },
            GenFamily::OddClique { t } => Family::OddClique { t },
            GenFamily::Random { n, m, wmax, seed } => Family::Random { n, m, wmax, seed },
            GenFamily::Ucf {
                blocks,
                maxblock,
                wmax,
                seed,
            } => Family::Ucf {
                blocks,
                maxblock,
                wmax,
                seed,
            },
            GenFamily::RuleGallery { rule, seed } => Family::RuleGallery { rule, seed },
        }
    }
}

/// The cut record printed by `solve` and `oracle`, with 1-based ids.
#[derive(Serialize)]
struct CutRecord {
    value: Weight,
    side1: Vec<usize>,
}

impl From<&Cut> for CutRecord {
    fn from(c: &Cut) -> Self {
        CutRecord {
            value: c.weight(),
            side1: c.side1().into_iter().map(|v| v + 1).collect(),
        }
    }
}

type CliResult = Result<i32, String>;

fn quarters_of(g: &WeightedGraph, e: &Excess) -> i64 {
    match (e.k, e.quarters, e.target) {
        (Some(k), _, _) => k.saturating_mul(4),
        (_, Some(q), _) => q,
        (_, _, Some(c)) => k_for_target(g, c),
        _ => unreachable!("clap requires one of the flags"),
    }
}

fn load(path: &Path) -> Result<WeightedGraph, String> {
    read_graph_file(path).map_err(|e| e.to_string())
}

fn answer(out: &mut impl Write, yes: bool) -> CliResult {
    writeln!(out, "{}", if yes { "yes" } else { "no" }).map_err(|e| e.to_string())?;
    Ok(if yes { 0 } else { 1 })
}

fn dispatch(cmd: Command, out: &mut impl Write) -> CliResult {
    let io_err = |e: std::io::Error| e.to_string();
    match cmd {
        Command::Decide { k, file } => {
            let g = load(&file)?;
            let v = decide(&g, quarters_of(&g, &k)).map_err(|e| e.to_string())?;
            answer(out, v.answer)
        }
        Command::Solve { k, emit_cut, file } => {
            let g = load(&file)?;
            let v = solve(&g, quarters_of(&g, &k)).map_err(|e| e.to_string())?;
            let Some(cut) = v.witness else {
                return answer(out, false);
            };
            let record = serde_json::to_string(&CutRecord::from(&cut)).map_err(|e| e.to_string())?;
            writeln!(out, "{record}").map_err(io_err)?;
            if let Some(path) = emit_cut {
                std::fs::write(&path, format!("{record}\n"))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(0)
        }
        Command::Bound { file } => {
            let g = load(&file)?;
            writeln!(
                out,
                "PT={}, EE={}",
                poljak_turzik_quarters(&g),
                edwards_erdos_quarters(&g)
            )
            .map_err(io_err)?;
            Ok(0)
        }
        Command::Oracle { file } => {
            let g = load(&file)?;
            let r = brute_max_cut(&g).map_err(|e| e.to_string())?;
            let record = serde_json::to_string(&CutRecord::from(&r.cut)).map_err(|e| e.to_string())?;
            writeln!(out, "{record}").map_err(io_err)?;
            Ok(0)
        }
        Command::Gen { family, output } => {
            let g = generate(&family.into()).map_err(|e| e.to_string())?;
            let text = serialize_graph(&g);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
            Ok(0)
        }
        Command::Trace { k, file } => {
            let g = load(&file)?;
            let kq = k.k.map(|k| k.saturating_mul(4)).or(k.quarters).unwrap_or(0);
            let r = reduce(&g, kq, Mode::Full).map_err(|e| e.to_string())?;
            write_trace(&mut *out, &r, kq).map_err(io_err)?;
            Ok(0)
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match dispatch(cli.cmd, &mut out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["ptcut", "decide", "-k", "-1", "g.txt"]).unwrap();
        assert!(matches!(cli.cmd, Command::Decide { k: Excess { k: Some(-1), .. }, .. }));
        assert!(Cli::try_parse_from(["ptcut", "decide", "g.txt"]).is_err());
        assert!(Cli::try_parse_from(["ptcut", "decide", "-k", "1", "--quarters", "2", "g.txt"]).is_err());
        let cli = Cli::try_parse_from(["ptcut", "gen", "random", "--n", "5", "--m", "6", "-o", "x"]).unwrap();
        assert!(matches!(cli.cmd, Command::Gen { output: Some(_), .. }));
    }
}
