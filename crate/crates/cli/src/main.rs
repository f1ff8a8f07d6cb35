use clap::{Args, Parser, Subcommand, ValueEnum};
use kn_cli::battery::{self, LabelScope};
use kn_cli::report::{timed, Check, VerificationReport};
use kn_core::fusion::{fusion_table, FusionReading};
use kn_core::yd::SimpleLabel;
use kn_core::{Error, KnAlgebra};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact verification of the Hopf algebras K_n, their Yetter-Drinfeld
/// modules, fusion rules and Nichols algebras.
#[derive(Parser)]
#[command(name = "kn", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Sampling {
    /// For n > 3, check this many seeded labels (or pairs) instead of all of them.
    /// n = 3 is always exhaustive.
    #[arg(long, value_name = "K")]
    sample: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl Sampling {
    fn scope(&self, n: u32) -> LabelScope {
        match self.sample {
            Some(count) if n > 3 => LabelScope::Sample { seed: self.seed, count },
            _ => LabelScope::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hopf axioms on the basis and the comatrix coalgebra.
    HopfVerify {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        /// Only the comatrix checks.
        #[arg(long)]
        comatrix: bool,
    },
    /// List the simple Yetter-Drinfeld modules and check the dimension census.
    Simples {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        /// Print every label.
        #[arg(long)]
        list: bool,
    },
    /// Module, comodule and Yetter-Drinfeld compatibility of simples.
    YdVerify {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        /// A single label instead of a sweep.
        #[arg(long)]
        module: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Decompose a tensor product of two simples and compare with the closed form.
    Fuse {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Fusion table as CSV (or JSON), computed against the closed-form rules.
    FusionTable {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        #[command(flatten)]
        sampling: Sampling,
        /// Exit with status 1 on any mismatch and print a summary to stderr.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Graded dimensions of Nichols algebras.
    Nichols {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        /// Semicolon-separated labels.
        #[arg(long, value_delimiter = ';')]
        module: Vec<String>,
        #[arg(long, default_value_t = 6)]
        cutoff: usize,
        /// Include kernel bases of QS_k in the JSON output.
        #[arg(long)]
        relations: bool,
        /// Expected dims (comma-separated); the check fails on any difference.
        #[arg(long, value_delimiter = ',')]
        expect: Option<Vec<usize>>,
        /// Sweep every one-dimensional module.
        #[arg(long)]
        lines: bool,
        /// Check the degree-two relation sets of the dihedral W modules (n = 3).
        #[arg(long)]
        presentations: bool,
        /// Fixed-vector witnesses of infinite dimension (n = 3).
        #[arg(long)]
        precheck: bool,
        /// Rank-two diagram criterion against exact ranks for every U label (n = 3).
        #[arg(long)]
        a2_census: bool,
    },
    /// Finiteness criterion for a direct sum of U modules.
    NicholsSum {
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Semicolon-separated U labels.
        #[arg(long)]
        labels: String,
        /// Also compute graded dimensions of the sum to this degree.
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Square-zero elements in degree one.
    SquareZero {
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Report the locus of this module instead of the standard comparison (n = 3).
        #[arg(long)]
        module: Option<String>,
    },
    /// Braided sets, racks and cocycles of the dihedral W modules.
    Rack {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        n: Vec<u32>,
        /// Run the full battery (currently the only mode).
        #[arg(long)]
        check_all: bool,
    },
    /// Every battery at n (exhaustive), plus a seeded sampled pass at a second n.
    PaperVerify {
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Second conductor for the sampled pass; 0 disables it.
        #[arg(long, default_value_t = 5)]
        sample_n: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Labels checked by the sampled YD sweep.
        #[arg(long, default_value_t = 50)]
        yd_samples: usize,
        /// Pairs checked by the sampled fusion sweep.
        #[arg(long, default_value_t = 200)]
        fusion_samples: usize,
    },
}

enum Failure {
    Usage(String),
    Memory(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MemoryExceeded { .. } => Failure::Memory(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn check_n(n: u32) -> Run<u32> {
    KnAlgebra::new(n)?;
    Ok(n)
}

fn label(n: u32, s: &str) -> Run<SimpleLabel> {
    Ok(SimpleLabel::parse(n, s)?)
}

fn require_n3(n: &[u32], what: &str) -> Run<()> {
    if n != [3] {
        return Err(Failure::Usage(format!("{what} is only defined for n = 3")));
    }
    Ok(())
}

fn collect(ns: &[u32], f: impl Fn(u32) -> kn_core::Result<Vec<Check>>) -> Run<Vec<Check>> {
    let mut out = Vec::new();
    for &n in ns {
        check_n(n)?;
        out.extend(timed(|| f(n))?);
    }
    Ok(out)
}

fn emit(cli: &Cli, body: &str) -> Run<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli) -> Run<bool> {
    let (suite, config, checks) = match &cli.cmd {
        Cmd::HopfVerify { n, comatrix } => {
            let checks = collect(n, |n| {
                let mut c = if *comatrix { Vec::new() } else { battery::hopf(n)? };
                c.extend(battery::comatrix(n)?);
                Ok(c)
            })?;
            ("hopf-verify", json!({"n": n, "comatrix_only": comatrix}), checks)
        }
        Cmd::Simples { n, list } => {
            let checks = collect(n, battery::census)?;
            if *list && !cli.json {
                let mut s = String::new();
                for &k in n {
                    for l in kn_core::yd::list_simples(&KnAlgebra::new(k)?) {
                        s += &format!("n={k}\t{l}\tdim {}\n", l.dim(k));
                    }
                }
                emit(cli, &s)?;
            }
            ("simples", json!({"n": n}), checks)
        }
        Cmd::YdVerify { n, module, sampling } => {
            let checks = match module {
                Some(m) => collect(n, |k| battery::yd_module(k, SimpleLabel::parse(k, m)?))?,
                None => collect(n, |k| battery::yd_sweep(k, sampling.scope(k)))?,
            };
            ("yd-verify", json!({"n": n, "module": module, "sample": sampling.sample, "seed": sampling.seed}), checks)
        }
        Cmd::Fuse { n, left, right } => {
            check_n(*n)?;
            let (l, r) = (label(*n, left)?, label(*n, right)?);
            ("fuse", json!({"n": n, "left": l, "right": r}), timed(|| battery::fuse(*n, l, r))?)
        }
        Cmd::FusionTable { n, sampling, verify, format } => {
            return fusion_table_cmd(cli, n, sampling, *verify, *format)
        }
        Cmd::Nichols { n, module, cutoff, relations, expect, lines, presentations, precheck, a2_census } => {
            let modes = [!module.is_empty(), *lines, *presentations, *precheck, *a2_census];
            if modes.iter().filter(|&&x| x).count() != 1 {
                return Err(Failure::Usage(
                    "choose exactly one of --module, --lines, --presentations, --precheck, --a2-census".into(),
                ));
            }
            if *cutoff < 2 {
                return Err(Error::InvalidCutoff(*cutoff).into());
            }
            let checks = if *lines {
                collect(n, battery::nichols_lines)?
            } else if *presentations {
                require_n3(n, "--presentations")?;
                timed(battery::presentations)?
            } else if *precheck {
                require_n3(n, "--precheck")?;
                timed(battery::precheck)?
            } else if *a2_census {
                require_n3(n, "--a2-census")?;
                timed(battery::a2_census)?
            } else {
                collect(n, |k| {
                    let mut out = Vec::new();
                    for m in module {
                        let l = SimpleLabel::parse(k, m)?;
                        out.extend(timed(|| battery::nichols_module(k, l, *cutoff, *relations, expect.as_deref()))?);
                    }
                    Ok(out)
                })?
            };
            let config = json!({"n": n, "module": module, "cutoff": cutoff, "expect": expect, "lines": lines,
                "presentations": presentations, "precheck": precheck, "a2_census": a2_census});
            ("nichols", config, checks)
        }
        Cmd::NicholsSum { n, labels, cutoff } => {
            check_n(*n)?;
            let ls = labels.split(';').map(|s| label(*n, s)).collect::<Run<Vec<_>>>()?;
            if ls.is_empty() {
                return Err(Failure::Usage("--labels needs at least one U label".into()));
            }
            if let Some(c) = cutoff.filter(|&c| c < 2) {
                return Err(Error::InvalidCutoff(c).into());
            }
            (
                "nichols-sum",
                json!({"n": n, "labels": ls, "cutoff": cutoff}),
                timed(|| battery::nichols_sum(*n, &ls, *cutoff))?,
            )
        }
        Cmd::SquareZero { n, module } => {
            check_n(*n)?;
            let checks = match module {
                Some(m) => {
                    let l = label(*n, m)?;
                    timed(|| battery::square_zero_module(*n, l))?
                }
                None => {
                    require_n3(&[*n], "the square-zero comparison")?;
                    timed(battery::square_zero)?
                }
            };
            ("square-zero", json!({"n": n, "module": module}), checks)
        }
        Cmd::Rack { n, check_all: _ } => ("rack", json!({"n": n}), collect(n, battery::racks)?),
        Cmd::PaperVerify { n, sample_n, seed, yd_samples, fusion_samples } => {
            check_n(*n)?;
            if *sample_n != 0 {
                check_n(*sample_n)?;
            }
            let checks = paper_verify(*n, *sample_n, *seed, *yd_samples, *fusion_samples)?;
            let config = json!({"n": n, "sample_n": sample_n, "seed": seed, "yd_samples": yd_samples, "fusion_samples": fusion_samples});
            ("paper-verify", config, checks)
        }
    };
    let report = VerificationReport::new(suite, config, checks);
    if !(matches!(cli.cmd, Cmd::Simples { list: true, .. }) && !cli.json) {
        emit(cli, &if cli.json { report.to_json() } else { report.to_text() })?;
    }
    Ok(report.passed)
}

fn paper_verify(n: u32, sample_n: u32, seed: u64, yd_samples: usize, fusion_samples: usize) -> Run<Vec<Check>> {
    let mut out = Vec::new();
    let mut run = |f: &dyn Fn() -> kn_core::Result<Vec<Check>>| -> Run<()> {
        out.extend(timed(f)?);
        Ok(())
    };
    run(&|| battery::hopf(n))?;
    run(&|| battery::comatrix(n))?;
    run(&|| battery::census(n))?;
    run(&|| battery::yd_sweep(n, LabelScope::All))?;
    run(&|| battery::fusion(n, LabelScope::All))?;
    run(&|| battery::nichols_lines(n))?;
    if n == 3 {
        run(&battery::fomin_kirillov_dims)?;
        run(&battery::presentations)?;
        run(&battery::square_zero)?;
        run(&battery::a2_nichols)?;
        run(&battery::a2_census)?;
        run(&battery::precheck)?;
    }
    run(&|| battery::racks(n))?;
    if sample_n != 0 {
        let m = sample_n;
        run(&|| battery::hopf(m))?;
        run(&|| battery::comatrix(m))?;
        run(&|| battery::census(m))?;
        run(&|| battery::yd_sweep(m, LabelScope::Sample { seed, count: yd_samples }))?;
        run(&|| battery::fusion(m, LabelScope::Sample { seed, count: fusion_samples }))?;
        run(&|| battery::nichols_lines(m))?;
        run(&|| battery::racks(m))?;
    }
    Ok(out)
}

fn fusion_table_cmd(cli: &Cli, ns: &[u32], sampling: &Sampling, verify: bool, format: TableFormat) -> Run<bool> {
    let mut tables = Vec::new();
    for &n in ns {
        let a = KnAlgebra::new(check_n(n)?)?;
        tables.push(fusion_table(a, battery::fusion_scope(sampling.scope(n)), FusionReading::default())?);
    }
    let body = match (format, cli.json) {
        (TableFormat::Json, _) | (_, true) => {
            let mut s = serde_json::to_string_pretty(&tables).expect("table serializes");
            s.push('\n');
            s
        }
        (TableFormat::Csv, false) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "left", "right", "dim", "decomposition", "closed_form", "agree"]).map_err(csv_err)?;
            for t in &tables {
                for r in &t.rows {
                    w.write_record([
                        t.n.to_string(),
                        r.left.to_string(),
                        r.right.to_string(),
                        r.dim.to_string(),
                        r.oracle.to_string(),
                        r.closed_form.to_string(),
                        r.agree.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::Io(e.to_string()))?).expect("utf-8")
        }
    };
    emit(cli, &body)?;
    let ok = tables.iter().all(|t| t.mismatches == 0);
    if verify {
        for t in &tables {
            let mark = if t.mismatches == 0 { "PASS" } else { "FAIL" };
            eprintln!("{mark}  fusion table n={}: {} pairs, {} mismatches", t.n, t.rows.len(), t.mismatches);
        }
        return Ok(ok);
    }
    Ok(true)
}

fn csv_err(e: csv::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Memory(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
    }
}
