//! `lporient`: Holt-Klee checks, pair sequences, realizations, shellings and
//! bounds from the command line.
//!
//! Exit status: 0 when the property holds, 1 when it fails (a certificate is
//! printed on stdout), 2 on usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use lporient::bounds::{crossover, scan, BoundConstant, CROSSOVER_CAP};
use lporient::census::census;
use lporient::family::{build_family_orientation, sweep_family, FamilyAssignment};
use lporient::holt_klee::{is_holt_klee_with, HkOptions};
use lporient::pairseq::{all_sequences, count_good, encode, is_good, PairSequence};
use lporient::par::Exec;
use lporient::realize::{induced_sequence, realize, Realization, VerifyFailure};
use lporient::shelling::{
    is_shelling, is_shelling_direct_3cube, line_shelling_witness, ordering_by_rank, ordering_to_sequence,
    shelling_census, FacetOrdering,
};
use lporient::{CrossVertex, Orientation};

#[derive(Parser)]
#[command(name = "lporient", version, about = "LP-orientations and Holt-Klee orientations of cubes and crosspolytopes")]
struct Cli {
    /// Worker threads for sweeps and censuses (default: all cores)
    #[arg(long, global = true, env = "LPORIENT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Holt-Klee conditions on an orientation file (`-` for stdin)
    CheckHk { file: PathBuf },
    /// Build or sweep the Holt-Klee cube family
    Family(FamilyArgs),
    /// Pair-sequence tools
    #[command(subcommand)]
    Pairseq(PairseqCmd),
    /// Census of crosspolytope orientations (same as `pairseq census`)
    Census(CensusArgs),
    /// Realize a good pair sequence as an exact rational crosspolytope
    Realize {
        seq: String,
        /// Write the realization here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a realization file (`-` for stdin) is a crosspolytope
    Verify { file: PathBuf },
    /// Shellings of the n-cube
    #[command(subcommand)]
    Shelling(ShellingCmd),
    /// Tabulate the family size against the LP-orientation bound
    Bounds {
        /// Constant in the bound: integer, p/q or 2^k
        #[arg(long, default_value = "1")]
        c: BoundConstant,
        /// Print rows n = 1..=N
        #[arg(long, default_value_t = 30)]
        scan: usize,
    },
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["bits", "sweep"]))]
struct FamilyArgs {
    #[arg(long)]
    n: usize,
    /// One 0/1 character per free edge
    #[arg(long)]
    bits: Option<String>,
    /// Check every assignment
    #[arg(long)]
    sweep: bool,
}

#[derive(Args)]
struct CensusArgs {
    d: usize,
    /// Also list orientations and labelings over each sequence
    #[arg(long)]
    fibers: bool,
}

#[derive(Subcommand)]
enum PairseqCmd {
    /// Pair sequence of an acyclic crosspolytope orientation file
    Encode { file: PathBuf },
    /// Decide goodness
    Good { seq: String },
    /// Number of good sequences of length D
    Count {
        d: usize,
        /// Cross-check against exhaustive enumeration
        #[arg(long)]
        check: bool,
    },
    /// Census of crosspolytope orientations
    Census(CensusArgs),
}

#[derive(Subcommand)]
enum ShellingCmd {
    /// Decide whether a facet ordering like `+1,+2,-1,-2` is a shelling
    Check {
        order: String,
        /// Also run the definition-based check (n = 3 only)
        #[arg(long)]
        direct: bool,
    },
    /// Count shellings among all facet orderings of the n-cube
    Census { n: usize },
    /// Line-shelling certificate: a polar realization in facet order
    Witness { order: String },
}

enum Status {
    Holds,
    Fails,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads(cli.threads) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let mut out = io::stdout().lock();
    match run(cli.cmd, &mut out) {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Fails) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: Option<usize>) -> anyhow::Result<()> {
    if let Some(k) = threads {
        if k == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(threads: Option<usize>) -> anyhow::Result<()> {
    if threads == Some(0) {
        bail!("--threads must be at least 1");
    }
    Ok(())
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn holds(b: bool) -> Status {
    if b {
        Status::Holds
    } else {
        Status::Fails
    }
}

fn names(vs: &[usize]) -> String {
    vs.iter()
        .map(|&v| CrossVertex::from_index(v).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cmd: Cmd, out: &mut impl Write) -> anyhow::Result<Status> {
    let exec = Exec::Parallel;
    match cmd {
        Cmd::CheckHk { file } => {
            let o: Orientation = read_input(&file)?.parse()?;
            let v = is_holt_klee_with(&o, HkOptions::default());
            writeln!(out, "{}", v.report(o.polytope()))?;
            Ok(holds(v.passed))
        }

        Cmd::Family(FamilyArgs { n, bits: Some(bits), .. }) => {
            let free = bits
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => bail!("--bits takes 0/1 characters, got `{c}`"),
                })
                .collect::<anyhow::Result<Vec<bool>>>()?;
            let o = build_family_orientation(&FamilyAssignment::new(n, free)?);
            let v = is_holt_klee_with(&o, HkOptions::default());
            write!(out, "{}", o.to_text())?;
            writeln!(out, "# {}", v.report(o.polytope()))?;
            Ok(holds(v.passed))
        }
        Cmd::Family(FamilyArgs { n, .. }) => {
            let r = sweep_family(n, exec)?;
            writeln!(out, "n={n} assignments={} holt_klee={}", r.total, r.passed)?;
            Ok(holds(r.passed == r.total))
        }

        Cmd::Pairseq(PairseqCmd::Encode { file }) => {
            let o: Orientation = read_input(&file)?.parse()?;
            match encode(&o) {
                Ok(s) => {
                    writeln!(out, "{s}")?;
                    Ok(Status::Holds)
                }
                Err(lporient::Error::Cyclic(c)) => {
                    writeln!(out, "cyclic cycle={}", names(&c))?;
                    Ok(Status::Fails)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Pairseq(PairseqCmd::Good { seq }) => {
            let s: PairSequence = seq.parse()?;
            match is_good(&s).break_k {
                None => writeln!(out, "good")?,
                Some(k) => writeln!(out, "bad break k={k}")?,
            }
            Ok(holds(is_good(&s).good))
        }
        Cmd::Pairseq(PairseqCmd::Count { d, check }) => {
            if d == 0 {
                bail!("d must be at least 1");
            }
            let a = count_good(d);
            writeln!(out, "{a}")?;
            if check {
                let brute = all_sequences(d).iter().filter(|s| is_good(s).good).count();
                writeln!(out, "# exhaustive={brute}")?;
                return Ok(holds(a == brute.into()));
            }
            Ok(Status::Holds)
        }
        Cmd::Pairseq(PairseqCmd::Census(args)) | Cmd::Census(args) => {
            let r = census(args.d, HkOptions { simplex_fast_path: false, exec: Exec::Sequential }, exec)?;
            writeln!(out, "{}", r.summary_line())?;
            if args.fibers {
                for (s, f) in &r.fibers {
                    let good = if is_good(s).good { "good" } else { "bad" };
                    writeln!(out, "{s} {good} orientations={} labelings={}", f.orientations, f.labelings)?;
                }
            }
            Ok(holds(r.lp_not_hk == 0))
        }

        Cmd::Realize { seq, out: path } => {
            let s: PairSequence = seq.parse()?;
            let rz = match realize(&s) {
                Ok(rz) => rz,
                Err(e @ lporient::Error::BadSequence { .. }) => {
                    writeln!(out, "{e}")?;
                    return Ok(Status::Fails);
                }
                Err(e) => return Err(e.into()),
            };
            let text = rz.to_text()?;
            match path {
                Some(p) => {
                    fs::write(&p, &text).with_context(|| format!("writing {}", p.display()))?;
                    writeln!(out, "wrote {} max_denominator_bits={}", p.display(), rz.max_denominator_bits())?;
                }
                None => write!(out, "{text}")?,
            }
            Ok(Status::Holds)
        }
        Cmd::Verify { file } => {
            let rz: Realization = read_input(&file)?.parse()?;
            let v = rz.verify();
            match &v.failure {
                None => {
                    let seq = match induced_sequence(&rz) {
                        Ok(s) => s.to_string(),
                        Err(_) => "tied".into(),
                    };
                    writeln!(out, "valid facets={} sequence={seq}", v.facets.len())?;
                }
                Some(VerifyFailure::Degenerate { transversal, point }) => writeln!(
                    out,
                    "invalid degenerate transversal={} point={}",
                    names(transversal),
                    names(&[*point])
                )?,
                Some(VerifyFailure::Separates { transversal, above, below }) => writeln!(
                    out,
                    "invalid separates transversal={} above={} below={}",
                    names(transversal),
                    names(&[*above]),
                    names(&[*below])
                )?,
            }
            Ok(holds(v.valid))
        }

        Cmd::Shelling(ShellingCmd::Check { order, direct }) => {
            let fo: FacetOrdering = order.parse()?;
            let s = ordering_to_sequence(&fo);
            let ok = is_shelling(&fo);
            match is_good(&s).break_k {
                None => write!(out, "shelling sequence={s}")?,
                Some(k) => write!(out, "not_shelling sequence={s} break k={k}")?,
            }
            if direct {
                let d = is_shelling_direct_3cube(&fo)?;
                write!(out, " direct={}", if d == ok { "agree" } else { "disagree" })?;
            }
            writeln!(out)?;
            Ok(holds(ok))
        }
        Cmd::Shelling(ShellingCmd::Census { n }) => {
            let r = shelling_census(n, exec)?;
            write!(out, "n={n} orderings={} shellings={}", r.orderings, r.shellings)?;
            let mut agree = true;
            if n == 3 {
                agree = (0..r.orderings).all(|rank| {
                    let fo = ordering_by_rank(3, rank);
                    is_shelling_direct_3cube(&fo).expect("n = 3") == is_shelling(&fo)
                });
                write!(out, " direct={}", if agree { "agree" } else { "disagree" })?;
            }
            writeln!(out)?;
            Ok(holds(agree))
        }
        Cmd::Shelling(ShellingCmd::Witness { order }) => {
            let fo: FacetOrdering = order.parse()?;
            match line_shelling_witness(&fo) {
                Ok(rz) => {
                    writeln!(out, "# line shelling {fo}")?;
                    write!(out, "{}", rz.to_text()?)?;
                    Ok(Status::Holds)
                }
                Err(lporient::Error::BadSequence { break_k }) => {
                    writeln!(out, "not_shelling break k={break_k}")?;
                    Ok(Status::Fails)
                }
                Err(e) => Err(e.into()),
            }
        }

        Cmd::Bounds { c, scan: max_n } => {
            if max_n == 0 || max_n > CROSSOVER_CAP {
                bail!("--scan must be in 1..={CROSSOVER_CAP}");
            }
            writeln!(out, "# c={c}")?;
            writeln!(out, "{:>5} {:>14} {:>14} {:>14}", "n", "lower_log2", "upper_log2", "gap")?;
            for r in scan(&c, max_n) {
                let gap = if r.lower_log2.bits() < 1000 {
                    format!("{:.3}", r.gap())
                } else {
                    "inf".into()
                };
                writeln!(out, "{:>5} {:>14} {:>14.3} {:>14}", r.n, r.lower_log2, r.upper_log2, gap)?;
            }
            match crossover(&c) {
                Ok(r) => {
                    writeln!(out, "crossover n={}", r.n)?;
                    Ok(Status::Holds)
                }
                Err(e) => {
                    writeln!(out, "{e}")?;
                    Ok(Status::Fails)
                }
            }
        }
    }
}
