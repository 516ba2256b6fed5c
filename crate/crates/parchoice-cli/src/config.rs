//! Experiment configuration: the validated settings a transform run needs.

use std::path::PathBuf;

use parchoice::engine::{GaParams, GenerationCaps, SelectionMode};
use parchoice::{Error, Result};

/// The experiment families the harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TaskKind {
    /// Transform one class's sentences toward another class.
    SentenceTransfer,
    /// Transform every other class's sentences toward one target class.
    MulticlassImitation,
    /// Genetic document transform against a Writeprints profiler.
    DocumentGa,
    /// Adversarial retraining; run through the `adv-train` command.
    AdvTrain,
}

impl TaskKind {
    pub fn name(self) -> &'static str {
        match self {
            TaskKind::SentenceTransfer => "sentence-transfer",
            TaskKind::MulticlassImitation => "multiclass-imitation",
            TaskKind::DocumentGa => "document-ga",
            TaskKind::AdvTrain => "adv-train",
        }
    }
}

/// Candidate selection mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Targeted,
    Random,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Targeted => "targeted",
            Mode::Random => "random",
        }
    }

    pub fn selection(self) -> SelectionMode {
        match self {
            Mode::Targeted => SelectionMode::Targeted,
            Mode::Random => SelectionMode::Random,
        }
    }
}

/// Which part of a sentence corpus a transform runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Split {
    Train,
    Test,
}

impl Split {
    pub fn name(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Test => "test",
        }
    }
}

/// A validated transform experiment. Paths are checked when the corpus and
/// resources are actually loaded; `validate` checks everything else.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub task: TaskKind,
    pub corpus: PathBuf,
    pub source: Option<String>,
    pub target: Option<String>,
    pub mode: Mode,
    pub caps: GenerationCaps,
    pub ga: GaParams,
    pub surrogate_split: f64,
    pub query_access: bool,
    pub seed: u64,
    pub out: PathBuf,
    pub table: bool,
    pub split: Split,
    pub train_docs: usize,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.surrogate_split > 0.0 && self.surrogate_split < 1.0) {
            return Err(Error::task(format!(
                "surrogate split {} must lie in (0, 1)",
                self.surrogate_split
            )));
        }
        if self.caps.subs_cap == 0 || self.caps.beam == 0 {
            return Err(Error::task("subs-cap and beam must be positive"));
        }
        if !(0.0..=1.0).contains(&self.ga.meteor_weight) {
            return Err(Error::task(format!(
                "meteor weight {} must lie in [0, 1]",
                self.ga.meteor_weight
            )));
        }
        if self.ga.survivors == 0 || self.ga.runs_per_iteration == 0 {
            return Err(Error::task("survivors and ga-runs must be positive"));
        }
        match self.task {
            TaskKind::SentenceTransfer => {
                let (source, target) = match (&self.source, &self.target) {
                    (Some(s), Some(t)) => (s, t),
                    _ => {
                        return Err(Error::task(
                            "sentence-transfer needs --source and --target",
                        ))
                    }
                };
                if source == target {
                    return Err(Error::task(format!(
                        "source and target class must differ, both are {source:?}"
                    )));
                }
            }
            TaskKind::MulticlassImitation => {
                if self.target.is_none() {
                    return Err(Error::task("multiclass-imitation needs --target"));
                }
                if self.source.is_some() {
                    return Err(Error::task(
                        "multiclass-imitation transforms every class; drop --source",
                    ));
                }
            }
            TaskKind::DocumentGa => {
                if self.source.is_some() || self.target.is_some() {
                    return Err(Error::task(
                        "document-ga transforms away from each document's author; drop --source/--target",
                    ));
                }
                if self.train_docs == 0 {
                    return Err(Error::task("train-docs must be positive"));
                }
            }
            TaskKind::AdvTrain => {
                return Err(Error::task(
                    "adversarial retraining runs through the adv-train command",
                ));
            }
        }
        Ok(())
    }
}
