//! Averaged-perceptron part-of-speech tagger.
//!
//! The tagger is trained on a tagged corpus (one `surface<TAB>tag` token per
//! line, blank line between sentences) and predicts Penn Treebank tags from
//! local context. Training is single-threaded and visits the corpus strictly
//! in order: presentation order is part of the determinism contract, so two
//! trainings on the same corpus produce bit-identical models.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::text::{Sentence, Token};

/// One training sentence: `(surface, tag)` per token.
pub type TaggedSentence = Vec<(String, String)>;

/// Default number of perceptron passes over the corpus.
pub const DEFAULT_ITERATIONS: usize = 5;

const MAGIC: &str = "parchoice-tagger-v1";

/// Context markers used in feature strings for positions before the start
/// (`-S-`, `-S2-`) and past the end (`-E-`) of a sentence.
const START: &str = "-S-";
const START2: &str = "-S2-";
const END: &str = "-E-";

/// A trained tagger: averaged feature weights, a dictionary of frequent
/// unambiguous words tagged by direct lookup, and a per-word
/// most-frequent-tag baseline used for tie-breaking and as the zero-weight
/// fallback.
#[derive(Debug, Clone, PartialEq)]
pub struct TaggerModel {
    /// feature → tag → averaged weight. Zero-valued weights are dropped.
    weights: BTreeMap<String, BTreeMap<String, f64>>,
    /// lowercased word → most frequent tag in the training corpus.
    word_tags: BTreeMap<String, String>,
    /// Frequent, nearly-unambiguous words (≥ [`TAGDICT_MIN_COUNT`]
    /// occurrences, dominant tag ratio ≥ [`TAGDICT_MIN_RATIO`]). These are
    /// tagged by direct lookup, bypassing the feature model entirely, and
    /// are skipped by perceptron updates during training.
    tag_dict: BTreeMap<String, String>,
    /// Full tag inventory seen in training.
    tags: BTreeSet<String>,
    /// Most frequent tag overall; baseline for unknown words.
    default_tag: String,
}

/// Minimum occurrence count for a word to enter the unambiguous-word
/// dictionary.
const TAGDICT_MIN_COUNT: u64 = 10;
/// Minimum share of the dominant tag for a word to count as unambiguous.
const TAGDICT_MIN_RATIO: f64 = 0.97;

impl TaggerModel {
    /// Tags a slice of tokens in place. Surfaces and token count are never
    /// changed; only the `tag` field of each token is set.
    pub fn tag_tokens(&self, tokens: &mut [Token]) {
        let predicted = self.predict(&tokens.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>());
        for (token, tag) in tokens.iter_mut().zip(predicted) {
            token.tag = Some(tag);
        }
    }

    /// Tags every token of a sentence in place.
    pub fn tag_sentence(&self, sentence: &mut Sentence) {
        self.tag_tokens(&mut sentence.tokens);
    }

    /// Predicts one tag per word.
    pub fn predict(&self, words: &[&str]) -> Vec<String> {
        let lower: Vec<String> = words.iter().map(|w| w.to_lowercase()).collect();
        let shapes: Vec<String> = words.iter().map(|w| shape(w)).collect();
        let mut out: Vec<String> = Vec::with_capacity(words.len());
        let mut prev = START.to_string();
        let mut prev2 = START2.to_string();
        for i in 0..words.len() {
            let tag = match self.tag_dict.get(&lower[i]) {
                Some(tag) => tag.clone(),
                None => {
                    let feats = features(&lower, &shapes, i, &prev, &prev2);
                    self.score_best(&feats, self.baseline_tag(&lower[i]))
                }
            };
            prev2 = std::mem::replace(&mut prev, tag.clone());
            out.push(tag);
        }
        out
    }

    /// Most-frequent training tag for a (lowercased) word, or the global
    /// default for unknown words.
    pub fn baseline_tag(&self, word_lower: &str) -> &str {
        self.word_tags
            .get(word_lower)
            .map(String::as_str)
            .unwrap_or(&self.default_tag)
    }

    /// Scores every tag in the inventory and returns the argmax. Exact score
    /// ties prefer the baseline tag when it is among the maximizers and the
    /// lexicographically smallest maximizer otherwise, so prediction stays
    /// deterministic even for all-zero scores.
    fn score_best(&self, feats: &[String], baseline: &str) -> String {
        let mut scores: BTreeMap<&str, f64> = self.tags.iter().map(|t| (t.as_str(), 0.0)).collect();
        for feat in feats {
            if let Some(per_tag) = self.weights.get(feat) {
                for (tag, w) in per_tag {
                    *scores.entry(tag.as_str()).or_insert(0.0) += w;
                }
            }
        }
        let best = scores
            .values()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        if scores.get(baseline) == Some(&best) {
            return baseline.to_string();
        }
        scores
            .iter()
            .find(|(_, s)| **s == best)
            .map(|(t, _)| t.to_string())
            .unwrap_or_else(|| self.default_tag.clone())
    }

    /// Serializes the model to the versioned line-oriented text format.
    /// The output is canonical: equal models serialize to identical bytes.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(MAGIC);
        out.push('\n');
        let _ = writeln!(out, "default\t{}", self.default_tag);
        for tag in &self.tags {
            let _ = writeln!(out, "tag\t{tag}");
        }
        for (word, tag) in &self.word_tags {
            let _ = writeln!(out, "word\t{word}\t{tag}");
        }
        for (word, tag) in &self.tag_dict {
            let _ = writeln!(out, "dict\t{word}\t{tag}");
        }
        for (feat, per_tag) in &self.weights {
            for (tag, w) in per_tag {
                let _ = writeln!(out, "feat\t{feat}\t{tag}\t{w}");
            }
        }
        out
    }

    /// Writes the serialized model to `path`.
    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.serialize()).map_err(|e| Error::io(path, e))
    }

    /// Reads a model previously written by [`TaggerModel::save`].
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(path, &text)
    }

    /// Parses the serialized form; `path` is used only for error reporting.
    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, first)) if first == MAGIC => {}
            _ => return Err(Error::format(path, 1, format!("expected header {MAGIC}"))),
        }
        let mut weights: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
        let mut word_tags = BTreeMap::new();
        let mut tag_dict = BTreeMap::new();
        let mut tags = BTreeSet::new();
        let mut default_tag: Option<String> = None;
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            match fields.as_slice() {
                ["default", tag] => default_tag = Some(tag.to_string()),
                ["tag", tag] => {
                    tags.insert(tag.to_string());
                }
                ["word", word, tag] => {
                    word_tags.insert(word.to_string(), tag.to_string());
                }
                ["dict", word, tag] => {
                    tag_dict.insert(word.to_string(), tag.to_string());
                }
                ["feat", feat, tag, w] => {
                    let w: f64 = w
                        .parse()
                        .map_err(|_| Error::format(path, lineno, "bad weight"))?;
                    weights
                        .entry(feat.to_string())
                        .or_default()
                        .insert(tag.to_string(), w);
                }
                _ => {
                    return Err(Error::format(path, lineno, "unrecognized record"));
                }
            }
        }
        let default_tag =
            default_tag.ok_or_else(|| Error::format(path, 1, "missing default record"))?;
        if !tags.contains(&default_tag) {
            return Err(Error::format(path, 1, "default tag not in tag inventory"));
        }
        Ok(TaggerModel {
            weights,
            word_tags,
            tag_dict,
            tags,
            default_tag,
        })
    }
}

/// Word shape: uppercase → `X`, lowercase → `x`, digits → `d`, everything
/// else kept verbatim ("Mary" → `Xxxx`, "3.5" → `d.d`).
fn shape(word: &str) -> String {
    word.chars()
        .map(|c| {
            if c.is_uppercase() {
                'X'
            } else if c.is_lowercase() {
                'x'
            } else if c.is_numeric() {
                'd'
            } else {
                c
            }
        })
        .collect()
}

/// Feature strings for position `i`. `lower`/`shapes` are per-token
/// lowercased surfaces and shapes; `prev`/`prev2` are the one- and two-back
/// predicted tags (context markers at the sentence start).
fn features(lower: &[String], shapes: &[String], i: usize, prev: &str, prev2: &str) -> Vec<String> {
    let word = &lower[i];
    let chars: Vec<char> = word.chars().collect();
    let suffix = |k: usize| -> String {
        if chars.len() <= k {
            word.clone()
        } else {
            chars[chars.len() - k..].iter().collect()
        }
    };
    let prev_word = if i == 0 { START } else { &lower[i - 1] };
    let next_word = if i + 1 == lower.len() { END } else { &lower[i + 1] };
    vec![
        format!("w={word}"),
        format!("s1={}", suffix(1)),
        format!("s2={}", suffix(2)),
        format!("s3={}", suffix(3)),
        format!("t-1={prev}"),
        format!("t-2={prev2}"),
        format!("w-1={prev_word}"),
        format!("w+1={next_word}"),
        format!("shape={}", shapes[i]),
    ]
}

#[derive(Default)]
struct Accum {
    w: f64,
    total: f64,
    stamp: u64,
}

/// Trains a tagger on `corpus` with the given number of perceptron passes.
///
/// Zero iterations is a legal degenerate case: no weights are learned and
/// prediction falls back to the most-frequent-tag baseline. An empty corpus
/// (no tokens at all) is a resource error.
pub fn train_tagger(corpus: &[TaggedSentence], iterations: usize) -> Result<TaggerModel> {
    let n_tokens: usize = corpus.iter().map(Vec::len).sum();
    if n_tokens == 0 {
        return Err(Error::resource("cannot train tagger on an empty corpus"));
    }

    // Baseline statistics: per-word and global tag frequencies.
    let mut word_counts: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
    let mut tag_counts: BTreeMap<String, u64> = BTreeMap::new();
    for sentence in corpus {
        for (word, tag) in sentence {
            *word_counts
                .entry(word.to_lowercase())
                .or_default()
                .entry(tag.clone())
                .or_insert(0) += 1;
            *tag_counts.entry(tag.clone()).or_insert(0) += 1;
        }
    }
    let argmax = |counts: &BTreeMap<String, u64>| -> String {
        let best = *counts.values().max().expect("non-empty counts");
        counts
            .iter()
            .find(|(_, c)| **c == best)
            .map(|(t, _)| t.clone())
            .expect("non-empty counts")
    };
    let word_tags: BTreeMap<String, String> = word_counts
        .iter()
        .map(|(w, counts)| (w.clone(), argmax(counts)))
        .collect();
    let tag_dict: BTreeMap<String, String> = word_counts
        .iter()
        .filter_map(|(w, counts)| {
            let total: u64 = counts.values().sum();
            let best = *counts.values().max().expect("non-empty counts");
            let confident =
                total >= TAGDICT_MIN_COUNT && best as f64 / total as f64 >= TAGDICT_MIN_RATIO;
            confident.then(|| (w.clone(), argmax(counts)))
        })
        .collect();
    let default_tag = argmax(&tag_counts);
    let tags: BTreeSet<String> = tag_counts.keys().cloned().collect();

    // Perceptron passes. `accum` keeps the running weight together with the
    // averaging bookkeeping (sum of weight values over all update instants).
    let mut accum: BTreeMap<String, BTreeMap<String, Accum>> = BTreeMap::new();
    let mut instant: u64 = 0;
    let model_skeleton = |weights| TaggerModel {
        weights,
        word_tags: word_tags.clone(),
        tag_dict: tag_dict.clone(),
        tags: tags.clone(),
        default_tag: default_tag.clone(),
    };
    let scratch = model_skeleton(BTreeMap::new());

    for _ in 0..iterations {
        for sentence in corpus {
            let lower: Vec<String> = sentence.iter().map(|(w, _)| w.to_lowercase()).collect();
            let shapes: Vec<String> = sentence.iter().map(|(w, _)| shape(w)).collect();
            let mut prev = START.to_string();
            let mut prev2 = START2.to_string();
            for (i, (_, gold)) in sentence.iter().enumerate() {
                // Dictionary words are tagged by lookup, never updated on;
                // their (possibly wrong) lookup tag still feeds the context,
                // matching what inference will see.
                let guess = match tag_dict.get(&lower[i]) {
                    Some(tag) => tag.clone(),
                    None => {
                        instant += 1;
                        let feats = features(&lower, &shapes, i, &prev, &prev2);
                        let guess =
                            score_raw(&accum, &tags, &feats, scratch.baseline_tag(&lower[i]));
                        if guess != *gold {
                            for feat in &feats {
                                bump(&mut accum, feat, gold, 1.0, instant);
                                bump(&mut accum, feat, &guess, -1.0, instant);
                            }
                        }
                        guess
                    }
                };
                prev2 = std::mem::replace(&mut prev, guess);
            }
        }
    }

    // Average each weight over every instant of training and drop zeros.
    let mut weights: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
    if instant > 0 {
        for (feat, per_tag) in accum {
            for (tag, acc) in per_tag {
                let total = acc.total + acc.w * (instant - acc.stamp) as f64;
                let avg = total / instant as f64;
                if avg != 0.0 {
                    weights.entry(feat.clone()).or_default().insert(tag, avg);
                }
            }
        }
    }
    Ok(model_skeleton(weights))
}

/// Argmax over raw (non-averaged) weights during training, with the same
/// tie-break rule as inference.
fn score_raw(
    accum: &BTreeMap<String, BTreeMap<String, Accum>>,
    tags: &BTreeSet<String>,
    feats: &[String],
    baseline: &str,
) -> String {
    let mut scores: BTreeMap<&str, f64> = tags.iter().map(|t| (t.as_str(), 0.0)).collect();
    for feat in feats {
        if let Some(per_tag) = accum.get(feat) {
            for (tag, acc) in per_tag {
                *scores.entry(tag.as_str()).or_insert(0.0) += acc.w;
            }
        }
    }
    let best = scores.values().cloned().fold(f64::NEG_INFINITY, f64::max);
    if scores.get(baseline) == Some(&best) {
        return baseline.to_string();
    }
    scores
        .iter()
        .find(|(_, s)| **s == best)
        .map(|(t, _)| t.to_string())
        .expect("tag inventory is non-empty")
}

fn bump(
    accum: &mut BTreeMap<String, BTreeMap<String, Accum>>,
    feat: &str,
    tag: &str,
    delta: f64,
    instant: u64,
) {
    let acc = accum
        .entry(feat.to_string())
        .or_default()
        .entry(tag.to_string())
        .or_default();
    acc.total += acc.w * (instant - acc.stamp) as f64;
    acc.stamp = instant;
    acc.w += delta;
}

/// Parses the tagged-corpus format: one `surface<TAB>tag` per line, blank
/// line between sentences. `path` is used only for error reporting.
pub fn parse_tagged_corpus(path: &Path, text: &str) -> Result<Vec<TaggedSentence>> {
    let mut sentences: Vec<TaggedSentence> = Vec::new();
    let mut current: TaggedSentence = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            if !current.is_empty() {
                sentences.push(std::mem::take(&mut current));
            }
            continue;
        }
        let mut fields = line.split('\t');
        match (fields.next(), fields.next(), fields.next()) {
            (Some(surface), Some(tag), None) if !surface.is_empty() && !tag.is_empty() => {
                current.push((surface.to_string(), tag.to_string()));
            }
            _ => {
                return Err(Error::format(path, lineno, "expected `surface<TAB>tag`"));
            }
        }
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    Ok(sentences)
}

/// Reads and parses a tagged-corpus file.
pub fn load_tagged_corpus(path: &Path) -> Result<Vec<TaggedSentence>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_tagged_corpus(path, &text)
}
