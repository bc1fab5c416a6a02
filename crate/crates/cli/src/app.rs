//! Argument parsing and command dispatch.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use kmismatch::one_mismatch::{all_longest_k_repeats, klcs1, klcs1_windowed, RepeatResult};
use kmismatch::oracle::lcf_naive;
use kmismatch::scan::{
    dual_matching_stats_k, lcf_const_space, lcf_kangaroo, lcf_queue, matching_stats_k, LcfResult, Orientation,
};
use kmismatch::suffix::GeneralizedSuffixTree;
use kmismatch::Sequence;

use crate::config::{Algorithm, Command, InputFormat, OutputFormat, RunConfig};
use crate::fasta::FastaOptions;
use crate::input::load_sequence;
use crate::report::{render, witness_text, LcfReport, MsReport, RepeatsReport, TrialFailure, VerifyReport};
use crate::verify::{run_trials, thread_budget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Cell count above which `lcf` prints a warning.
const LARGE_INPUT_CELLS: u128 = 10_000_000_000;

#[derive(Debug, Parser)]
#[command(name = "kmismatch", version, about = "Longest common substrings and matching statistics with k mismatches")]
pub struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Longest common substring with at most k mismatches.
    Lcf {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Algorithm::Queue)]
        algo: Algorithm,
        /// Also compute the brute-force answer and exit 1 on disagreement.
        #[arg(long)]
        verify: bool,
        first: PathBuf,
        second: PathBuf,
    },
    /// Matching statistics of the second input against the first.
    Ms {
        #[command(flatten)]
        input: InputArgs,
        /// Report, for each end position of the second input, the longest
        /// match ending there.
        #[arg(long)]
        dual: bool,
        first: PathBuf,
        second: PathBuf,
    },
    /// Longest pattern occurring twice in one input with a block of k
    /// mismatching symbols.
    Repeats {
        #[command(flatten)]
        input: InputArgs,
        path: PathBuf,
    },
    /// Randomized cross-check of every algorithm against the brute force.
    Verify {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Mismatch budget.
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, value_enum, default_value_t = InputFormat::Plain)]
    format: InputFormat,
    /// FASTA record to use, counting from 1. Give it once for all inputs
    /// or once per input.
    #[arg(long = "record")]
    records: Vec<usize>,
    /// Map lowercase ASCII to uppercase.
    #[arg(long)]
    normalize_case: bool,
    /// Accept bytes above 0x7f.
    #[arg(long)]
    binary: bool,
    /// Report positions counting from 1.
    #[arg(long)]
    one_based: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Report elapsed_ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let base = RunConfig::default();
        let with_input = |command, input: InputArgs, inputs| RunConfig {
            command,
            k: input.k,
            inputs,
            format: input.format,
            output: input.output.output,
            records: input.records,
            normalize_case: input.normalize_case,
            binary: input.binary,
            one_based: input.one_based,
            timing: !input.output.no_timing,
            ..RunConfig::default()
        };
        match self.command {
            Sub::Lcf { input, algo, verify, first, second } => RunConfig {
                algorithm: algo,
                verify,
                ..with_input(Command::Lcf, input, vec![first, second])
            },
            Sub::Ms { input, dual, first, second } => {
                RunConfig { dual, ..with_input(Command::Ms, input, vec![first, second]) }
            }
            Sub::Repeats { input, path } => with_input(Command::Repeats, input, vec![path]),
            Sub::Verify { seed, trials, output } => RunConfig {
                command: Command::Verify,
                seed,
                trials,
                output: output.output,
                timing: !output.no_timing,
                ..base
            },
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.into_config(), out, err),
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            code
        }
    }
}

/// Runs `config`, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, err) {
        Ok((text, code)) => match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write report: {e}");
                EXIT_USAGE
            }
        },
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(config: &RunConfig, err: &mut dyn Write) -> Result<(String, i32), String> {
    config.validate().map_err(|e| e.to_string())?;
    let opts = FastaOptions { normalize_case: config.normalize_case, binary: config.binary };
    let load = |i: usize| {
        load_sequence(&config.inputs[i], config.format, config.record_for(i), opts).map_err(|e| e.to_string())
    };
    let clock = Clock::start(config.timing);
    let shift = usize::from(config.one_based);
    match config.command {
        Command::Lcf => {
            let (s1, s2) = (load(0)?, load(1)?);
            if (s1.len() as u128) * (s2.len() as u128) > LARGE_INPUT_CELLS {
                let _ = writeln!(
                    err,
                    "warning: {} x {} inputs mean more than 10^10 cell visits",
                    s1.len(),
                    s2.len()
                );
            }
            let clock = Clock::start(config.timing);
            let r = lcf(config.algorithm, &s1, &s2, config.k).map_err(|e| e.to_string())?;
            let elapsed_ms = clock.elapsed_ms();
            let mut code = EXIT_OK;
            if config.verify {
                let naive = lcf_naive(&s1, &s2, config.k);
                if naive.length != r.length || !r.is_valid_for(&s1, &s2, config.k) {
                    let _ = writeln!(
                        err,
                        "verification failed: {} reported length {}, brute force gives {}",
                        config.algorithm.name(),
                        r.length,
                        naive.length
                    );
                    code = EXIT_VERIFY_FAILED;
                }
            }
            let (w1, w2) = r.witness(&s1, &s2);
            let report = LcfReport {
                length: r.length,
                start1: r.start1 + shift,
                start2: r.start2 + shift,
                k: config.k,
                algorithm: config.algorithm.name().to_string(),
                n: s1.len(),
                m: s2.len(),
                elapsed_ms,
                witness1: witness_text(w1),
                witness2: witness_text(w2),
            };
            Ok((render(&report, config.output), code))
        }
        Command::Ms => {
            let (s1, s2) = (load(0)?, load(1)?);
            let clock = Clock::start(config.timing);
            let ms = if config.dual {
                dual_matching_stats_k(&s1, &s2, config.k)
            } else {
                matching_stats_k(&s1, &s2, config.k)
            };
            let elapsed_ms = clock.elapsed_ms();
            let report = MsReport {
                k: config.k,
                algorithm: config.algorithm.name().to_string(),
                orientation: match ms.orientation() {
                    Orientation::Prefix => "prefix",
                    Orientation::Suffix => "suffix",
                }
                .to_string(),
                n: s1.len(),
                m: s2.len(),
                values: ms.into_values(),
                elapsed_ms,
            };
            Ok((render(&report, config.output), EXIT_OK))
        }
        Command::Repeats => {
            let s = load(0)?;
            let clock = Clock::start(config.timing);
            let r = all_longest_k_repeats(&s, config.k).map_err(|e| e.to_string())?;
            let elapsed_ms = clock.elapsed_ms();
            let (start1, start2, w1, w2) = match r.witness {
                Some((a, b)) => (a.start, b.start, a.slice(&s, &s), b.slice(&s, &s)),
                None => (0, 0, &[][..], &[][..]),
            };
            let report = RepeatsReport {
                gamma: r.gamma,
                start1: start1 + shift,
                start2: start2 + shift,
                k: config.k,
                algorithm: "suffix-tree".to_string(),
                n: s.len(),
                elapsed_ms,
                witness1: witness_text(w1),
                witness2: witness_text(w2),
            };
            Ok((render(&report, config.output), EXIT_OK))
        }
        Command::Verify => {
            let seed = config.seed.unwrap_or(0);
            let outcomes = run_trials(seed, config.trials, thread_budget());
            let failures: Vec<TrialFailure> = outcomes
                .iter()
                .filter(|o| !o.passed())
                .map(|o| TrialFailure {
                    trial: o.trial,
                    checks: o.failed_checks.iter().map(|c| c.to_string()).collect(),
                })
                .collect();
            let report = VerifyReport {
                trials: outcomes.len(),
                passed: outcomes.len() - failures.len(),
                failed: failures.len(),
                seed,
                elapsed_ms: clock.elapsed_ms(),
                failures,
            };
            let code = if report.failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok((render(&report, config.output), code))
        }
    }
}

fn lcf(algorithm: Algorithm, s1: &Sequence, s2: &Sequence, k: usize) -> Result<LcfResult, kmismatch::suffix::SuffixError> {
    let from_repeat = |r: RepeatResult| match r.witness {
        Some((a, b)) => LcfResult { length: r.gamma, start1: a.start, start2: b.start },
        None => LcfResult::default(),
    };
    Ok(match algorithm {
        Algorithm::Queue => lcf_queue(s1, s2, k),
        Algorithm::ConstSpace => lcf_const_space(s1, s2, k),
        Algorithm::Kangaroo => lcf_kangaroo(s1, s2, k, &GeneralizedSuffixTree::build(s1, s2))?,
        Algorithm::Stree1 => from_repeat(klcs1(s1, s2)),
        Algorithm::Windowed => from_repeat(klcs1_windowed(s1, s2)),
    })
}

struct Clock(Option<Instant>);

impl Clock {
    fn start(enabled: bool) -> Self {
        Clock(enabled.then(Instant::now))
    }

    fn elapsed_ms(&self) -> f64 {
        self.0.map_or(0.0, |t| t.elapsed().as_secs_f64() * 1e3)
    }
}
