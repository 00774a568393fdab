//! `recomb`: expansion matrices, identity bases, verification and the
//! reproduction harness from the command line.
//!
//! Exit status: 0 on success, 1 when a verification or reproduction check
//! fails, 2 on usage or I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use recomb::expansion::{build_expansion_matrix, evaluate_identity};
use recomb::identities::{generator_sieve, single_generators, ClosureMode, DEFAULT_SEED};
use recomb::io::{parse_identities, write_identity, write_matrix_rows};
use recomb::nullspace::{nullspace_basis, NullspaceMethod};
use recomb::reproduce::{reproduce_with, Scope};
use recomb::Error;

#[derive(Parser)]
#[command(
    name = "recomb",
    version,
    about = "Polynomial identities of n-ary recombination"
)]
struct Cli {
    /// Worker threads for parallel stages.
    #[arg(long, global = true, env = "RECOMB_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Shape {
    /// Arity of the operation.
    #[arg(short = 'n', long)]
    arity: usize,
    /// Degree (number of variables).
    #[arg(short = 'd', long)]
    degree: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Write the expansion matrix.
    Matrix {
        #[command(flatten)]
        shape: Shape,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a basis of the identities in one degree.
    Nullspace {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value = "rcf")]
        method: NullspaceMethod,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that every identity in a file expands to zero.
    Verify { file: PathBuf },
    /// Find a minimal set of module generators among basis vectors.
    Generators {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value = "hnf-lll")]
        basis: NullspaceMethod,
        /// Prime for the rank computations.
        #[arg(short, long, default_value_t = 101)]
        prime: u32,
        /// Also list every basis vector that generates the whole module
        /// on its own (one orbit per vector).
        #[arg(long)]
        single: bool,
    },
    /// Rerun a group of reference checks.
    Reproduce {
        /// binary, deg5, deg7, deg9-rank or deg9-closure
        scope: Scope,
        /// Closure: full orbits, reporting the dimension after each
        /// consequence.
        #[arg(long, conflicts_with = "certify")]
        exact: bool,
        /// Closure: random sampling until the nullspace is filled (default).
        #[arg(long)]
        certify: bool,
        /// Seed for the certify mode.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(output: Option<&Path>, text: &[u8]) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(io::stdout().lock().write_all(text)?),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Matrix { shape, output } => {
            let e = build_expansion_matrix(shape.arity, shape.degree)?;
            let rows: Vec<&[u32]> = e.rows().collect();
            let mut buf = Vec::new();
            write_matrix_rows(&mut buf, e.column_count(), &rows)?;
            emit(output.as_deref(), &buf)
        }
        Command::Nullspace {
            shape,
            method,
            output,
        } => {
            let e = build_expansion_matrix(shape.arity, shape.degree)?;
            let basis = nullspace_basis(&e, method)?;
            let mut text = String::new();
            for v in basis.to_i64_rows()? {
                text.push_str(&write_identity(&e.basis().combination(&v)?));
            }
            let mut norms = basis.squared_norms_u64()?;
            norms.sort_unstable();
            let listing = norms
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            let summary = format!(
                "# {} identities; sorted squared norms: {listing}\n",
                norms.len()
            );
            match output {
                Some(p) => {
                    emit(Some(&p), text.as_bytes())?;
                    print!("{summary}");
                }
                None => emit(None, format!("{text}{summary}").as_bytes())?,
            }
            Ok(())
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let ids = parse_identities(&text)?;
            if ids.is_empty() {
                return Err(Failure::Usage(format!("{}: no identities", file.display())));
            }
            let mut bad = 0;
            for (k, id) in ids.iter().enumerate() {
                let residual = evaluate_identity(id)?;
                println!(
                    "identity {}: {} terms, residual {} slot tuples",
                    k + 1,
                    id.len(),
                    residual.len()
                );
                bad += usize::from(!residual.is_zero());
            }
            if bad > 0 {
                return Err(Failure::Check(format!(
                    "{bad} of {} do not vanish",
                    ids.len()
                )));
            }
            Ok(())
        }
        Command::Generators {
            shape,
            basis,
            prime,
            single,
        } => {
            let e = build_expansion_matrix(shape.arity, shape.degree)?;
            let b = nullspace_basis(&e, basis)?.sorted_by_norm();
            let rows = b.to_i64_rows()?;
            let gens = generator_sieve(e.basis(), &rows, prime)?;
            println!(
                "# {} basis vectors ({basis}), {} generators mod {prime}",
                b.len(),
                gens.len()
            );
            for g in &gens {
                println!(
                    "# position {} squared norm {} cumulative rank {}",
                    g.position, g.squared_norm, g.cumulative_rank
                );
                print!("{}", write_identity(&g.identity));
            }
            if single {
                let singles = single_generators(e.basis(), &rows, prime)?;
                let list: Vec<String> = singles.iter().map(usize::to_string).collect();
                println!(
                    "# single generators of rank {} at positions: {}",
                    b.len(),
                    list.join(" ")
                );
            }
            Ok(())
        }
        Command::Reproduce {
            scope,
            exact,
            certify: _,
            seed,
        } => {
            let scope = match scope {
                Scope::Deg9Closure(_) if exact => Scope::Deg9Closure(ClosureMode::Exact),
                Scope::Deg9Closure(_) => Scope::Deg9Closure(ClosureMode::certify(seed)),
                other => other,
            };
            let tables = reproduce_with(scope, &mut |p| {
                eprintln!("  rows {} rank {}/{}", p.rows, p.rank, p.target);
            })?;
            let mut failed = 0;
            for t in &tables {
                print!("{t}");
                failed += usize::from(!t.passed());
            }
            if failed > 0 {
                return Err(Failure::Check(format!(
                    "{failed} of {} tables failed",
                    tables.len()
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = recomb::init_thread_pool(k) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
