use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gldim_core::equation::{
    check_dim_equation, check_dim_equation_full, enumerate_orbit_solutions_with, reduce_to_whittaker_form,
    EquationReport, SolveBounds, SolveOptions,
};
use gldim_core::theorems::{vanishing_verdict, verify_all, Mode, SuitePlan, VerificationReport, Verdict, Verifier};
use gldim_core::{EpsilonVector, Partition, RepDescriptor};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::export::solutions_csv;
use crate::json::{parse_rep_input, parse_spec, RepInput};
use crate::pool::ThreadPool;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Strict,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Strict => Mode::Strict,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gldim", version, about = "Partition calculus, dimension equations and vanishing verdicts for GL(n)")]
pub struct Cli {
    /// Output format. CSV is only available for `equation solve`.
    #[arg(long, global = true, value_enum, default_value = "json", env = "GLDIM_FORMAT")]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true, default_value_t = 1, env = "GLDIM_WORKERS",
          value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Largest rank accepted by `equation solve` and `verify`.
    #[arg(long, global = true, env = "GLDIM_MAX_N", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: Option<u32>,
    /// Largest number of representations accepted by `equation solve`.
    #[arg(long, global = true, env = "GLDIM_MAX_L", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_l: Option<u32>,
    /// Counterexamples kept per report.
    #[arg(long, global = true, default_value_t = 100, env = "GLDIM_CAP",
          value_parser = clap::value_parser!(u32).range(1..))]
    pub cap: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit calculus on single partitions.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Attached orbit or dimension of descriptors in a JSON file.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Dimension equations and the orbit-level solver.
    #[command(subcommand)]
    Equation(EquationCmd),
    /// Exhaustive verifiers.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Vanishing verdict for an integral spec.
    Vanish {
        file: PathBuf,
        /// Exit with 1 unless the verdict is conclusive.
        #[arg(long)]
        expect_vanish: bool,
    },
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let s = s.trim();
    let bracketed = if s.starts_with('[') { s.to_string() } else { format!("[{s}]") };
    bracketed.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Subcommand)]
pub enum PartitionCmd {
    /// Orbit and representation dimension, e.g. `partition dim "[3,3]"`.
    Dim {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    Transpose {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Dominance relation of the first partition to the second.
    Compare {
        #[arg(value_parser = parse_partition)]
        first: Partition,
        #[arg(value_parser = parse_partition)]
        second: Partition,
    },
    /// Componentwise sum (the induced orbit).
    Add {
        #[arg(value_parser = parse_partition)]
        first: Partition,
        #[arg(value_parser = parse_partition)]
        second: Partition,
    },
    /// Orbit of a degenerate character given as a flag string such as `10101`.
    FromEpsilon { epsilon: EpsilonVector },
}

#[derive(Debug, Subcommand)]
pub enum RepCmd {
    Orbit { file: PathBuf },
    Dim { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum EquationCmd {
    /// Sum of dimensions against n(n-1)/2.
    Check { file: PathBuf },
    /// Sum of dimensions against n^2 - 1.
    CheckFull { file: PathBuf },
    /// Dimensions removed by the generic factor and the minimal Eisenstein series.
    Reduce { file: PathBuf },
    /// All multisets of l orbits whose dimensions sum to n(n-1)/2.
    Solve {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        exclude_trivial: bool,
        #[arg(long)]
        max_one_dominant: bool,
    },
}

#[derive(Debug, Args)]
pub struct RankArg {
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Pairs of rectangular orbits overshoot the Whittaker form.
    Lemma1(RankArg),
    /// Exhaustive pairs (lambda, mu) with lambda short enough for mu.
    Lemma2(RankArg),
    /// The reduction of the pair inequality to the balanced partition.
    Lemma2Reduction(RankArg),
    /// Speh-induced Eisenstein series against Speh-type partners.
    Prop3(RankArg),
    /// Block search for trivial-block Eisenstein series of length `l`.
    Prop4 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value = "paper")]
        mode: ModeArg,
    },
    /// Block search against a Speh-type partner (p^q).
    Prop5 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        l: u32,
    },
    /// Partitions of all epsilon vectors with enough nonzero flags.
    EpsilonOrbit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
    /// Residual bookkeeping over all block tuples of length up to `l`.
    Cor1 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
    },
    /// Every verifier over the acceptance ranges, capped at `--max-n`.
    All,
}

/// Rendered output and the exit code it implies.
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

#[derive(Serialize)]
struct DimOut {
    orbit_dim: u64,
    rep_dim: u64,
    n: u32,
}

#[derive(Serialize)]
struct SuiteOut<'a> {
    passed: bool,
    reports: &'a [VerificationReport],
}

#[derive(Serialize)]
struct SolveOut<'a> {
    n: u32,
    l: u32,
    count: usize,
    solutions: &'a [Vec<Partition>],
}

#[derive(Serialize)]
struct RepOut {
    index: Option<usize>,
    rank: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structural_dim: Option<u64>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

impl Cli {
    fn verifier(&self) -> Verifier<ThreadPool> {
        Verifier::new(ThreadPool::new(self.workers as usize)).with_cap(self.cap as usize)
    }

    fn bound_n(&self, n: u32) -> Result<()> {
        match self.max_n {
            Some(max) if n > max => Err(CliError::Limit(format!("n = {n} exceeds --max-n {max}"))),
            _ => Ok(()),
        }
    }

    fn render<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<String> {
        match self.format {
            Format::Json => Ok(json(value)),
            Format::Text => Ok(text()),
            Format::Csv => Err(CliError::invalid("--format: csv is only supported by `equation solve`")),
        }
    }

    fn report(&self, r: Result<VerificationReport>) -> Result<Outcome> {
        let r = r?;
        let body = self.render(&r, || report_text(&r))?;
        Ok(Outcome {
            body,
            code: if r.passed { 0 } else { 1 },
        })
    }

    /// Runs the parsed command and renders its output.
    pub fn execute(&self) -> Result<Outcome> {
        let ok = |body| Outcome { body, code: 0 };
        match &self.command {
            Command::Partition(cmd) => self.partition(cmd).map(ok),
            Command::Rep(cmd) => self.rep(cmd).map(ok),
            Command::Equation(cmd) => self.equation(cmd).map(ok),
            Command::Verify(cmd) => self.verify(cmd),
            Command::Vanish { file, expect_vanish } => {
                let spec = parse_spec(&read(file)?)?;
                let v = vanishing_verdict(&spec)?;
                let body = self.render(&v, || verdict_text(&v))?;
                let inconclusive = matches!(v, Verdict::NotApplicable { .. } | Verdict::NotConcluded { .. });
                Ok(Outcome {
                    body,
                    code: if *expect_vanish && inconclusive { 1 } else { 0 },
                })
            }
        }
    }

    fn partition(&self, cmd: &PartitionCmd) -> Result<String> {
        match cmd {
            PartitionCmd::Dim { partition } => {
                let out = DimOut {
                    orbit_dim: partition.orbit_dim(),
                    rep_dim: partition.rep_dim(),
                    n: partition.n(),
                };
                self.render(&out, || {
                    format!("{partition}: orbit_dim {} rep_dim {} n {}", out.orbit_dim, out.rep_dim, out.n)
                })
            }
            PartitionCmd::Transpose { partition } => {
                let t = partition.transpose()?;
                self.render(&serde_json::json!({ "transpose": t }), || t.to_string())
            }
            PartitionCmd::Compare { first, second } => {
                let rel = first
                    .compare(second)
                    .map_err(|_| CliError::invalid(format!("second: partitions of {} and {} differ in n", first.n(), second.n())))?;
                self.render(&serde_json::json!({ "relation": rel }), || {
                    format!("{first} {} {second}", json(&rel).trim_matches('"'))
                })
            }
            PartitionCmd::Add { first, second } => {
                let s = first.add(second);
                self.render(&serde_json::json!({ "sum": s }), || s.to_string())
            }
            PartitionCmd::FromEpsilon { epsilon } => {
                let p = epsilon.partition();
                let out = serde_json::json!({
                    "epsilon": epsilon,
                    "n": epsilon.n(),
                    "nonzero": epsilon.nonzero_count(),
                    "zero_positions": epsilon.zero_positions(),
                    "partition": p,
                });
                self.render(&out, || format!("{epsilon} -> {p}"))
            }
        }
    }

    fn rep(&self, cmd: &RepCmd) -> Result<String> {
        let (file, want_orbit) = match cmd {
            RepCmd::Orbit { file } => (file, true),
            RepCmd::Dim { file } => (file, false),
        };
        let describe = |index: Option<usize>, r: &RepDescriptor| RepOut {
            index,
            rank: r.rank(),
            orbit: want_orbit.then(|| r.attached_orbit()),
            dim: (!want_orbit).then(|| r.dim()),
            structural_dim: (!want_orbit).then(|| r.structural_dim()),
        };
        let line = |o: &RepOut| match (&o.orbit, o.dim) {
            (Some(orbit), _) => format!("rank {} orbit {orbit}", o.rank),
            (None, Some(d)) => format!("rank {} dim {d} structural {}", o.rank, o.structural_dim.unwrap_or(d)),
            (None, None) => unreachable!(),
        };
        match parse_rep_input(&read(file)?)? {
            RepInput::Single(r) => {
                let out = describe(None, &r);
                self.render(&out, || line(&out))
            }
            RepInput::Spec(spec) => {
                let out: Vec<RepOut> = spec.reps().iter().enumerate().map(|(i, r)| describe(Some(i), r)).collect();
                self.render(&serde_json::json!({ "n": spec.n(), "representations": out }), || {
                    out.iter()
                        .map(|o| format!("[{}] {}", o.index.unwrap_or(0), line(o)))
                        .collect::<Vec<_>>()
                        .join("\n")
                })
            }
        }
    }

    fn equation(&self, cmd: &EquationCmd) -> Result<String> {
        let eq_text = |r: &EquationReport| {
            format!("lhs {} rhs {} slack {} holds {}", r.lhs, r.rhs, r.slack, r.holds)
        };
        match cmd {
            EquationCmd::Check { file } => {
                let r = check_dim_equation(&parse_spec(&read(file)?)?)?;
                self.render(&r, || eq_text(&r))
            }
            EquationCmd::CheckFull { file } => {
                let r = check_dim_equation_full(&parse_spec(&read(file)?)?);
                self.render(&r, || eq_text(&r))
            }
            EquationCmd::Reduce { file } => {
                let spec = parse_spec(&read(file)?)?;
                let r = reduce_to_whittaker_form(spec.n())?;
                self.render(&r, || {
                    format!(
                        "n^2-1 = {} minus generic {} minus minimal eisenstein {} leaves {}",
                        u64::from(spec.n()).pow(2) - 1,
                        r.cuspidal_dim,
                        r.min_eisenstein_dim,
                        r.residual_rhs
                    )
                })
            }
            EquationCmd::Solve {
                n,
                l,
                exclude_trivial,
                max_one_dominant,
            } => {
                let defaults = SolveBounds::default();
                let opts = SolveOptions {
                    exclude_trivial: *exclude_trivial,
                    max_one_dominant: *max_one_dominant,
                    bounds: SolveBounds {
                        max_n: self.max_n.unwrap_or(defaults.max_n),
                        max_l: self.max_l.map_or(defaults.max_l, |x| x as usize),
                    },
                };
                let pool = ThreadPool::new(self.workers as usize);
                let sols = enumerate_orbit_solutions_with(*n, *l as usize, &opts, &pool)?;
                match self.format {
                    Format::Csv => solutions_csv(*n, *l, &sols),
                    Format::Json => Ok(json(&SolveOut {
                        n: *n,
                        l: *l,
                        count: sols.len(),
                        solutions: &sols,
                    })),
                    Format::Text => Ok(sols
                        .iter()
                        .map(|s| s.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "))
                        .collect::<Vec<_>>()
                        .join("\n")),
                }
            }
        }
    }

    fn verify(&self, cmd: &VerifyCmd) -> Result<Outcome> {
        let v = self.verifier();
        let rank = |n: u32| self.bound_n(n);
        match cmd {
            VerifyCmd::Lemma1(a) => self.report(rank(a.n).and_then(|_| Ok(v.lemma1(a.n)?))),
            VerifyCmd::Lemma2(a) => self.report(rank(a.n).and_then(|_| Ok(v.lemma2(a.n)?))),
            VerifyCmd::Lemma2Reduction(a) => self.report(rank(a.n).and_then(|_| Ok(v.lemma2_reduction(a.n)?))),
            VerifyCmd::Prop3(a) => self.report(rank(a.n).and_then(|_| Ok(v.prop3(a.n)?))),
            VerifyCmd::Prop4 { n, l, mode } => self.report(rank(*n).and_then(|_| Ok(v.prop4(*n, *l, (*mode).into())?))),
            VerifyCmd::Prop5 { n, q, l } => self.report(rank(*n).and_then(|_| Ok(v.prop5(*n, *q, *l)?))),
            VerifyCmd::EpsilonOrbit { n, p, q } => {
                self.report(rank(*n).and_then(|_| Ok(v.epsilon_orbit(*n, *p, *q)?)))
            }
            VerifyCmd::Cor1 { n, l } => self.report(rank(*n).and_then(|_| Ok(v.cor1_bookkeeping(*n, *l)?))),
            VerifyCmd::All => {
                let plan = self.max_n.map_or_else(SuitePlan::acceptance, SuitePlan::up_to);
                let reports = verify_all(&plan, &v)?;
                let passed = reports.iter().all(|r| r.passed);
                let body = self.render(&SuiteOut { passed, reports: &reports }, || {
                    let mut s = String::new();
                    for r in &reports {
                        let _ = writeln!(s, "{}", report_line(r));
                    }
                    let _ = write!(s, "{} reports, {}", reports.len(), if passed { "all passed" } else { "FAILURES" });
                    s
                })?;
                Ok(Outcome {
                    body,
                    code: if passed { 0 } else { 1 },
                })
            }
        }
    }
}

fn params_text(r: &VerificationReport) -> String {
    r.parameters
        .iter()
        .map(|(k, v)| format!("{k}={}", json(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn report_line(r: &VerificationReport) -> String {
    let status = match (r.passed, r.vacuous) {
        (true, true) => "passed (vacuous)",
        (true, false) => "passed",
        (false, _) => "FAILED",
    };
    format!(
        "{} {}: {status}, {} cases, {} counterexamples",
        r.statement.name(),
        params_text(r),
        r.space_size,
        r.counterexample_count
    )
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = report_line(r);
    for c in &r.counterexamples {
        let _ = write!(s, "\n  {} -> {}", json(&c.inputs), json(&c.computed));
    }
    s
}

fn verdict_text(v: &Verdict) -> String {
    let checks = |w: &gldim_core::theorems::Witness| {
        w.checks
            .iter()
            .map(|c| format!("\n  {}: {} {} {} ({})", c.label, c.lhs, json(&c.relation).trim_matches('"'), c.rhs, c.holds))
            .collect::<String>()
    };
    match v {
        Verdict::Vanishes { by, witness } => format!("vanishes by {}{}", json(by).trim_matches('"'), checks(witness)),
        Verdict::EquationFails {
            by,
            equation_report,
            witness,
        } => format!(
            "equation fails by {}: lhs {} rhs {}{}",
            json(by).trim_matches('"'),
            equation_report.lhs,
            equation_report.rhs,
            checks(witness)
        ),
        Verdict::NotApplicable { reason } => format!("not applicable: {reason}"),
        Verdict::NotConcluded { reason } => format!("not concluded: {reason}"),
    }
}

fn write_out(path: Option<&Path>, body: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{body}\n")).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{body}").map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = cli.execute().and_then(|o| {
        write_out(cli.out.as_deref(), o.body.trim_end_matches('\n'))?;
        Ok(o.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gldim: {e}");
            e.exit_code()
        }
    }
}
