//! Author profilers: classifiers mapping text to an author class.
//!
//! Two kinds are provided — unigram logistic regression ([`logreg`]) and a
//! Writeprints-feature MLP ([`mlp`]) — behind the common [`ProfilerModel`]
//! interface the selection engine scores candidates with. The interface
//! needs nothing but class probabilities, so further kinds can be added
//! without touching selection. Trained models are immutable, self-contained
//! (the MLP owns its schema and tagger), and persist to a text format that
//! round-trips predictions bit-exactly.

pub mod logreg;
pub mod mlp;
pub mod writeprints;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lingua::TaggerModel;

pub use logreg::{
    featurize_unigram, train_logreg, train_logreg_with_history, LogregModel, DEFAULT_EPOCHS,
    DEFAULT_L2,
};
pub use mlp::{gradient_check, train_mlp, MlpConfig, MlpModel};
pub use writeprints::{
    default_function_words, featurize_writeprints, WriteprintsSchema, DEFAULT_TOP_K, PENN_TAGS,
    PUNCT_CHARS,
};

const MODEL_HEADER: &str = "parchoice-model-v1";

/// Numerically stable softmax.
pub(crate) fn softmax(scores: &[f64]) -> Vec<f64> {
    let max = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = scores.iter().map(|s| (s - max).exp()).collect();
    let total: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / total).collect()
}

/// Distinct class labels in lexicographic order; fewer than two is a task
/// error, since a profiler needs something to distinguish.
pub(crate) fn class_list(dataset: &[(String, String)]) -> Result<Vec<String>> {
    let mut classes: Vec<String> = dataset.iter().map(|(_, c)| c.clone()).collect();
    classes.sort();
    classes.dedup();
    if classes.len() < 2 {
        return Err(Error::task(format!(
            "training data has {} class(es); at least two are required",
            classes.len()
        )));
    }
    Ok(classes)
}

/// A trained author profiler of either kind.
#[derive(Debug, Clone)]
pub enum ProfilerModel {
    Logreg(LogregModel),
    WriteprintsMlp(MlpModel),
}

impl ProfilerModel {
    pub fn kind(&self) -> &'static str {
        match self {
            ProfilerModel::Logreg(_) => "logreg",
            ProfilerModel::WriteprintsMlp(_) => "writeprints-mlp",
        }
    }

    pub fn classes(&self) -> &[String] {
        match self {
            ProfilerModel::Logreg(m) => m.classes(),
            ProfilerModel::WriteprintsMlp(m) => m.classes(),
        }
    }

    pub fn class_index(&self, class: &str) -> Option<usize> {
        self.classes().iter().position(|c| c == class)
    }

    /// Probability distribution over the model's classes, aligned with
    /// [`ProfilerModel::classes`].
    pub fn predict_proba(&self, text: &str) -> Vec<f64> {
        match self {
            ProfilerModel::Logreg(m) => m.predict_proba(text),
            ProfilerModel::WriteprintsMlp(m) => m.predict_proba(text),
        }
    }

    /// Probability of one named class; unknown classes are a task error.
    pub fn prob_of(&self, text: &str, class: &str) -> Result<f64> {
        let i = self
            .class_index(class)
            .ok_or_else(|| Error::task(format!("class {class:?} not in model")))?;
        Ok(self.predict_proba(text)[i])
    }

    /// The predicted class: argmax probability, ties toward the lower class
    /// index.
    pub fn argmax_class(&self, text: &str) -> &str {
        let p = self.predict_proba(text);
        let mut best = 0;
        for (i, pi) in p.iter().enumerate() {
            if *pi > p[best] {
                best = i;
            }
        }
        &self.classes()[best]
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(MODEL_HEADER);
        out.push('\n');
        writeln!(out, "kind\t{}", self.kind()).unwrap();
        for class in self.classes() {
            writeln!(out, "class\t{class}").unwrap();
        }
        match self {
            ProfilerModel::Logreg(m) => {
                writeln!(out, "l2\t{}", m.l2).unwrap();
                for (word, idx) in &m.vocab {
                    writeln!(out, "vocab\t{word}\t{idx}").unwrap();
                }
                for (c, row) in m.weights.iter().enumerate() {
                    writeln!(out, "w\t{c}\t{}", join_floats(row)).unwrap();
                }
            }
            ProfilerModel::WriteprintsMlp(m) => {
                for w in &m.schema.function_words {
                    writeln!(out, "fnword\t{w}").unwrap();
                }
                for g in &m.schema.bigrams {
                    writeln!(out, "bigram\t{g}").unwrap();
                }
                for g in &m.schema.trigrams {
                    writeln!(out, "trigram\t{g}").unwrap();
                }
                writeln!(out, "mean\t{}", join_floats(&m.mean)).unwrap();
                writeln!(out, "std\t{}", join_floats(&m.std)).unwrap();
                for (r, row) in m.net.w1.iter().enumerate() {
                    writeln!(out, "w1\t{r}\t{}", join_floats(row)).unwrap();
                }
                writeln!(out, "b1\t{}", join_floats(&m.net.b1)).unwrap();
                for (r, row) in m.net.w2.iter().enumerate() {
                    writeln!(out, "w2\t{r}\t{}", join_floats(row)).unwrap();
                }
                writeln!(out, "b2\t{}", join_floats(&m.net.b2)).unwrap();
                for line in m.tagger.serialize().lines() {
                    writeln!(out, "tagger\t{line}").unwrap();
                }
            }
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.serialize()).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<ProfilerModel> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        ProfilerModel::parse(path, &text)
    }

    pub fn parse(path: &Path, text: &str) -> Result<ProfilerModel> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.first().map(|l| l.trim()) != Some(MODEL_HEADER) {
            return Err(Error::format(path, 1, format!("expected header {MODEL_HEADER:?}")));
        }
        let kind = match lines.get(1).and_then(|l| l.strip_prefix("kind\t")) {
            Some(k) => k,
            None => return Err(Error::format(path, 2, "expected kind line")),
        };
        let body = &lines[2..];
        match kind {
            "logreg" => parse_logreg(path, body),
            "writeprints-mlp" => parse_mlp(path, body),
            other => Err(Error::format(path, 2, format!("unknown model kind {other:?}"))),
        }
    }
}

fn join_floats(xs: &[f64]) -> String {
    let mut out = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push('\t');
        }
        write!(out, "{x}").unwrap();
    }
    out
}

fn parse_floats(path: &Path, lineno: usize, s: &str) -> Result<Vec<f64>> {
    s.split('\t')
        .map(|f| {
            f.parse::<f64>()
                .map_err(|_| Error::format(path, lineno, format!("bad float {f:?}")))
        })
        .collect()
}

fn parse_logreg(path: &Path, body: &[&str]) -> Result<ProfilerModel> {
    let mut classes = Vec::new();
    let mut vocab: BTreeMap<String, usize> = BTreeMap::new();
    let mut l2 = DEFAULT_L2;
    let mut rows: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for (i, line) in body.iter().enumerate() {
        let lineno = i + 3;
        if line.is_empty() {
            continue;
        }
        let (tag, rest) = line
            .split_once('\t')
            .ok_or_else(|| Error::format(path, lineno, "expected tab-separated record"))?;
        match tag {
            "class" => classes.push(rest.to_string()),
            "l2" => {
                l2 = rest
                    .parse()
                    .map_err(|_| Error::format(path, lineno, "bad l2"))?
            }
            "vocab" => {
                let (word, idx) = rest
                    .split_once('\t')
                    .ok_or_else(|| Error::format(path, lineno, "expected vocab word and index"))?;
                let idx: usize = idx
                    .parse()
                    .map_err(|_| Error::format(path, lineno, "bad vocab index"))?;
                if vocab.insert(word.to_string(), idx).is_some() {
                    return Err(Error::format(path, lineno, "duplicate vocab word"));
                }
            }
            "w" => {
                let (c, floats) = rest
                    .split_once('\t')
                    .ok_or_else(|| Error::format(path, lineno, "expected class index"))?;
                let c: usize = c
                    .parse()
                    .map_err(|_| Error::format(path, lineno, "bad class index"))?;
                rows.insert(c, parse_floats(path, lineno, floats)?);
            }
            other => {
                return Err(Error::format(path, lineno, format!("unknown record {other:?}")))
            }
        }
    }
    let n = body.len() + 2;
    if classes.len() < 2 {
        return Err(Error::format(path, n, "fewer than two classes"));
    }
    let cols = vocab.len() + 1;
    let mut weights = Vec::new();
    for c in 0..classes.len() {
        let row = rows
            .remove(&c)
            .ok_or_else(|| Error::format(path, n, format!("missing weight row {c}")))?;
        if row.len() != cols {
            return Err(Error::format(
                path,
                n,
                format!("weight row {c} has {} columns, expected {cols}", row.len()),
            ));
        }
        weights.push(row);
    }
    Ok(ProfilerModel::Logreg(LogregModel {
        classes,
        vocab,
        weights,
        l2,
    }))
}

fn parse_mlp(path: &Path, body: &[&str]) -> Result<ProfilerModel> {
    let mut classes = Vec::new();
    let mut function_words = Vec::new();
    let mut bigrams = Vec::new();
    let mut trigrams = Vec::new();
    let mut mean = None;
    let mut std = None;
    let mut w1: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    let mut w2: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    let mut b1 = None;
    let mut b2 = None;
    let mut tagger_lines: Vec<&str> = Vec::new();
    for (i, line) in body.iter().enumerate() {
        let lineno = i + 3;
        if line.is_empty() {
            continue;
        }
        let (tag, rest) = line
            .split_once('\t')
            .ok_or_else(|| Error::format(path, lineno, "expected tab-separated record"))?;
        match tag {
            "class" => classes.push(rest.to_string()),
            "fnword" => function_words.push(rest.to_string()),
            "bigram" => bigrams.push(rest.to_string()),
            "trigram" => trigrams.push(rest.to_string()),
            "mean" => mean = Some(parse_floats(path, lineno, rest)?),
            "std" => std = Some(parse_floats(path, lineno, rest)?),
            "b1" => b1 = Some(parse_floats(path, lineno, rest)?),
            "b2" => b2 = Some(parse_floats(path, lineno, rest)?),
            "w1" | "w2" => {
                let (r, floats) = rest
                    .split_once('\t')
                    .ok_or_else(|| Error::format(path, lineno, "expected row index"))?;
                let r: usize = r
                    .parse()
                    .map_err(|_| Error::format(path, lineno, "bad row index"))?;
                let row = parse_floats(path, lineno, floats)?;
                if tag == "w1" {
                    w1.insert(r, row);
                } else {
                    w2.insert(r, row);
                }
            }
            "tagger" => tagger_lines.push(rest),
            other => {
                return Err(Error::format(path, lineno, format!("unknown record {other:?}")))
            }
        }
    }
    let n = body.len() + 2;
    let missing = |what: &str| Error::format(path, n, format!("missing {what}"));
    if classes.len() < 2 {
        return Err(Error::format(path, n, "fewer than two classes"));
    }
    let mean = mean.ok_or_else(|| missing("mean"))?;
    let std = std.ok_or_else(|| missing("std"))?;
    let b1 = b1.ok_or_else(|| missing("b1"))?;
    let b2 = b2.ok_or_else(|| missing("b2"))?;
    let schema = WriteprintsSchema {
        function_words,
        bigrams,
        trigrams,
    };
    if mean.len() != schema.dim() || std.len() != schema.dim() {
        return Err(Error::format(path, n, "mean/std length does not match the schema"));
    }
    let collect_rows = |map: BTreeMap<usize, Vec<f64>>, count: usize, cols: usize, name: &str| {
        let mut out = Vec::new();
        for r in 0..count {
            match map.get(&r) {
                Some(row) if row.len() == cols => out.push(row.clone()),
                Some(_) => {
                    return Err(Error::format(path, n, format!("{name} row {r} has wrong width")))
                }
                None => return Err(Error::format(path, n, format!("missing {name} row {r}"))),
            }
        }
        Ok(out)
    };
    let hidden = b1.len();
    let w1 = collect_rows(w1, hidden, schema.dim(), "w1")?;
    let w2 = collect_rows(w2, classes.len(), hidden, "w2")?;
    if b2.len() != classes.len() {
        return Err(Error::format(path, n, "b2 length does not match the class count"));
    }
    if tagger_lines.is_empty() {
        return Err(missing("tagger"));
    }
    let tagger = TaggerModel::parse(path, &tagger_lines.join("\n"))?;
    Ok(ProfilerModel::WriteprintsMlp(MlpModel {
        classes,
        schema,
        tagger,
        mean,
        std,
        net: mlp::Net { w1, b1, w2, b2 },
    }))
}

/// Overall and per-class argmax accuracy on a labeled dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct AccuracyReport {
    pub accuracy: f64,
    pub per_class: BTreeMap<String, f64>,
    pub n: usize,
}

/// Argmax accuracy (ties toward the lower class index) with a per-class
/// breakdown. An empty dataset, or a label the model does not know, is a
/// task error.
pub fn evaluate_accuracy(
    model: &ProfilerModel,
    dataset: &[(String, String)],
) -> Result<AccuracyReport> {
    if dataset.is_empty() {
        return Err(Error::task("empty evaluation dataset"));
    }
    let mut correct = 0usize;
    let mut class_total: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for (text, label) in dataset {
        if model.class_index(label).is_none() {
            return Err(Error::task(format!("label {label:?} not in model")));
        }
        let predicted = model.argmax_class(text);
        let hit = predicted == label;
        if hit {
            correct += 1;
        }
        let entry = class_total.entry(label.as_str()).or_insert((0, 0));
        entry.1 += 1;
        if hit {
            entry.0 += 1;
        }
    }
    Ok(AccuracyReport {
        accuracy: correct as f64 / dataset.len() as f64,
        per_class: class_total
            .into_iter()
            .map(|(c, (hits, total))| (c.to_string(), hits as f64 / total as f64))
            .collect(),
        n: dataset.len(),
    })
}

/// How much profiler accuracy drops on transformed text.
pub fn accuracy_decrease(original: f64, transformed: f64) -> f64 {
    original - transformed
}

/// A recipe for training one profiler kind with fixed hyperparameters, so
/// retraining runs under identical conditions.
#[derive(Debug, Clone)]
pub enum ProfilerTrainer<'a> {
    Logreg {
        l2: f64,
        epochs: usize,
    },
    WriteprintsMlp {
        config: MlpConfig,
        tagger: &'a TaggerModel,
        function_words: &'a [String],
    },
}

impl ProfilerTrainer<'_> {
    pub fn logreg_default() -> ProfilerTrainer<'static> {
        ProfilerTrainer::Logreg {
            l2: DEFAULT_L2,
            epochs: DEFAULT_EPOCHS,
        }
    }

    pub fn train(&self, dataset: &[(String, String)]) -> Result<ProfilerModel> {
        match self {
            ProfilerTrainer::Logreg { l2, epochs } => train_logreg(dataset, *l2, *epochs),
            ProfilerTrainer::WriteprintsMlp {
                config,
                tagger,
                function_words,
            } => train_mlp(dataset, config, tagger, function_words),
        }
    }
}

/// Adversarial training: retrains from scratch on the original training set
/// plus transformed variants (true source labels preserved), under the same
/// hyperparameters. A transformed example whose label never occurs in the
/// original training set is a task error.
pub fn adversarial_retrain(
    trainer: &ProfilerTrainer,
    train: &[(String, String)],
    transformed: &[(String, String)],
) -> Result<ProfilerModel> {
    let known: std::collections::BTreeSet<&str> =
        train.iter().map(|(_, c)| c.as_str()).collect();
    for (_, label) in transformed {
        if !known.contains(label.as_str()) {
            return Err(Error::task(format!(
                "transformed example labeled {label:?}, which the training set lacks"
            )));
        }
    }
    let mut combined = train.to_vec();
    combined.extend(transformed.iter().cloned());
    trainer.train(&combined)
}
