use std::path::PathBuf;

use clap::ValueEnum;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Lcf,
    Ms,
    Repeats,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Diagonal scan with a queue of mismatch positions.
    Queue,
    /// Diagonal scan with a mismatch counter and no allocation.
    ConstSpace,
    /// Diagonal scan jumping between mismatches with suffix-tree queries.
    Kangaroo,
    /// Suffix-tree algorithm for one mismatch.
    Stree1,
    /// `stree1` over overlapping windows of the longer input.
    Windowed,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Queue => "queue",
            Algorithm::ConstSpace => "const-space",
            Algorithm::Kangaroo => "kangaroo",
            Algorithm::Stree1 => "stree1",
            Algorithm::Windowed => "windowed",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    #[default]
    Plain,
    Fasta,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub k: usize,
    pub algorithm: Algorithm,
    pub inputs: Vec<PathBuf>,
    pub format: InputFormat,
    pub output: OutputFormat,
    pub seed: Option<u64>,
    pub trials: usize,
    /// 1-based FASTA record per input. A single entry applies to every
    /// input; an empty list means the first record.
    pub records: Vec<usize>,
    pub normalize_case: bool,
    pub binary: bool,
    pub one_based: bool,
    pub dual: bool,
    pub verify: bool,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: Command::Lcf,
            k: 0,
            algorithm: Algorithm::Queue,
            inputs: Vec::new(),
            format: InputFormat::Plain,
            output: OutputFormat::Json,
            seed: None,
            trials: 500,
            records: Vec::new(),
            normalize_case: false,
            binary: false,
            one_based: false,
            dual: false,
            verify: false,
            timing: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("--algo {0} requires --k 1")]
    NeedsOneMismatch(&'static str),
    #[error("--algo {0} is only available for the lcf command")]
    AlgorithmNotForCommand(&'static str),
    #[error("repeats requires --k of at least 1")]
    RepeatsNeedGap,
    #[error("{command} expects {expected} input file(s), got {got}")]
    InputCount { command: &'static str, expected: usize, got: usize },
    #[error("--record is 1-based")]
    ZeroRecord,
    #[error("--record given {given} times for {inputs} input(s)")]
    TooManyRecords { given: usize, inputs: usize },
}

impl RunConfig {
    /// FASTA record (1-based) to read from input `i`.
    pub fn record_for(&self, i: usize) -> usize {
        self.records.get(i).or(self.records.last()).copied().unwrap_or(1)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let expected = match self.command {
            Command::Lcf | Command::Ms => 2,
            Command::Repeats => 1,
            Command::Verify => 0,
        };
        if self.inputs.len() != expected {
            return Err(ConfigError::InputCount {
                command: match self.command {
                    Command::Lcf => "lcf",
                    Command::Ms => "ms",
                    Command::Repeats => "repeats",
                    Command::Verify => "verify",
                },
                expected,
                got: self.inputs.len(),
            });
        }
        if self.command != Command::Lcf && self.algorithm != Algorithm::Queue {
            return Err(ConfigError::AlgorithmNotForCommand(self.algorithm.name()));
        }
        if matches!(self.algorithm, Algorithm::Stree1 | Algorithm::Windowed) && self.k != 1 {
            return Err(ConfigError::NeedsOneMismatch(self.algorithm.name()));
        }
        if self.command == Command::Repeats && self.k == 0 {
            return Err(ConfigError::RepeatsNeedGap);
        }
        if self.records.contains(&0) {
            return Err(ConfigError::ZeroRecord);
        }
        if self.records.len() > self.inputs.len().max(1) {
            return Err(ConfigError::TooManyRecords { given: self.records.len(), inputs: self.inputs.len() });
        }
        Ok(())
    }
}
