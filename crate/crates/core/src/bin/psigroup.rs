use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use psigroup::analysis::{psi_report, structure_report};
use psigroup::arith::psi_cyclic;
use psigroup::harness::{
    build_family, check_theorem, emit_table, load_corpus, run_all, write_table, Corpus,
    HarnessError, TableFormat, TheoremId, STANDARD_MAX_ORDER,
};
use psigroup::PermGroup;

/// Sums of element orders of finite groups, and exhaustive checks of the
/// bounds relating them to the cyclic group of the same order.
#[derive(Parser)]
#[command(name = "psigroup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// psi(G) for a corpus label (e.g. Q8) or a family with parameters
    /// (e.g. `dihedral 10`)
    Psi {
        #[arg(required = true, num_args = 1..)]
        target: Vec<String>,
    },
    /// psi(C_n) from the closed form
    PsiCyclic { n: u64 },
    /// Run one check, or all of them, over a corpus
    Verify {
        /// T1, T3, C4, P2, P5, T6, C7, C8, C9, T10, T11, P2_4, P2_5, P2_6,
        /// P2_10, L2_1, L2_2, L2_8, L2_9, P2_7, or `all`
        #[arg(long, default_value = "all")]
        theorem: String,
        /// JSON Lines corpus; defaults to the built-in catalog and sweeps
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        max_order: Option<u64>,
        /// List skipped entries, equality witnesses and flagged entries
        #[arg(long, short)]
        verbose: bool,
    },
    /// Emit the psi table of a corpus
    Table {
        #[arg(long, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        max_order: Option<u64>,
    },
    /// Build a family member and describe it
    Family {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn corpus(path: Option<PathBuf>, max_order: Option<u64>) -> Result<Corpus, HarnessError> {
    match path {
        Some(p) => {
            let mut c = load_corpus(p)?;
            if let Some(m) = max_order {
                c.retain_max_order(m);
            }
            Ok(c)
        }
        None => Corpus::standard(max_order.unwrap_or(STANDARD_MAX_ORDER)),
    }
}

/// Family name plus parameters, or a label in the standard corpus.
fn resolve(target: &[String]) -> Result<PermGroup, HarnessError> {
    if target.len() > 1 {
        return build_family(&target[0], &target[1..]);
    }
    let c = Corpus::standard(STANDARD_MAX_ORDER)?;
    match c.get(&target[0]) {
        Some(e) => Ok(e.group().clone().with_label(e.label())),
        None => Err(HarnessError::UnknownFamily(target[0].clone())),
    }
}

fn run(cmd: Command) -> Result<bool, HarnessError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cmd {
        Command::Psi { target } => {
            let r = psi_report(&resolve(&target)?);
            writeln!(out, "{}", r.psi)?;
            Ok(true)
        }
        Command::PsiCyclic { n } => {
            let v = psi_cyclic(n).map_err(|e| HarnessError::BadParameters {
                family: "psi-cyclic".into(),
                message: e.to_string(),
            })?;
            writeln!(out, "{v}")?;
            Ok(true)
        }
        Command::Verify {
            theorem,
            corpus: path,
            max_order,
            verbose,
        } => {
            let c = corpus(path, max_order)?;
            let results = if theorem.eq_ignore_ascii_case("all") {
                run_all(&c)
            } else {
                vec![check_theorem(theorem.parse::<TheoremId>()?, &c)]
            };
            writeln!(out, "corpus: {} ({} entries)", c.source(), c.len())?;
            let mut ok = true;
            for r in &results {
                ok &= r.passed();
                writeln!(out, "{r}")?;
                for ce in &r.counterexamples {
                    writeln!(out, "       counterexample {}: {}", ce.label, ce.detail)?;
                }
                if verbose {
                    writeln!(out, "       asserts: {}", r.theorem_id.statement())?;
                    if !r.equality_witnesses.is_empty() {
                        writeln!(out, "       equality: {}", r.equality_witnesses.join(", "))?;
                    }
                    if !r.flagged.is_empty() {
                        writeln!(out, "       hypothesis met: {}", r.flagged.join(", "))?;
                    }
                    if !r.skipped.is_empty() {
                        writeln!(out, "       skipped: {}", r.skipped.join(", "))?;
                    }
                }
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            writeln!(out, "{} checks, {} failed", results.len(), failed)?;
            Ok(ok)
        }
        Command::Table {
            format,
            out: dest,
            corpus: path,
            max_order,
        } => {
            let c = corpus(path, max_order)?;
            match dest {
                Some(p) => {
                    let s = emit_table(&c, format, &p)?;
                    eprintln!("wrote {} rows to {}", s.rows, p.display());
                }
                None => {
                    write_table(&c, format, &mut out)?;
                }
            }
            Ok(true)
        }
        Command::Family { name, params } => {
            let g = build_family(&name, &params)?;
            let r = psi_report(&g);
            let s = structure_report(&g);
            writeln!(out, "{}", r.label)?;
            writeln!(out, "  order      {}", r.n)?;
            writeln!(out, "  degree     {}", g.degree())?;
            writeln!(out, "  cyclic     {}", r.cyclic)?;
            writeln!(out, "  abelian    {}", g.is_abelian())?;
            writeln!(out, "  psi        {}", r.psi)?;
            writeln!(out, "  psi(C_n)   {}", r.psi_cn)?;
            writeln!(out, "  ratio      {}", r.ratio)?;
            writeln!(out, "  orders     {:?}", g.order_profile().counts())?;
            writeln!(out, "  derived    {:?}", s.derived_orders)?;
            writeln!(out, "  |Z(G)|     {}", s.center_order)?;
            writeln!(out, "  solvable   {}", s.solvable)?;
            writeln!(out, "  G'' <= Z   {}", s.second_derived_central)?;
            writeln!(out, "  T6 case    {}", s.theorem6_case)?;
            Ok(true)
        }
    }
}
