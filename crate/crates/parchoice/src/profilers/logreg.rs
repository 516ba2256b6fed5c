//! Multinomial logistic regression over word unigrams.
//!
//! The vocabulary is every distinct lowercased token in the training data;
//! out-of-vocabulary tokens are ignored at prediction time. Training is
//! full-batch gradient descent on the mean cross-entropy with an L2 penalty
//! on the non-bias weights, with a 1/t-decayed learning rate. There is no
//! randomness: the model is determined by the data alone.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::text::tokenize_words;

use super::{class_list, softmax, ProfilerModel};

pub const DEFAULT_L2: f64 = 1e-4;
pub const DEFAULT_EPOCHS: usize = 20;
const BASE_LEARNING_RATE: f64 = 0.1;

/// A trained unigram logistic-regression profiler.
#[derive(Debug, Clone, PartialEq)]
pub struct LogregModel {
    pub(super) classes: Vec<String>,
    pub(super) vocab: BTreeMap<String, usize>,
    /// One row per class, `vocab.len() + 1` columns, bias last.
    pub(super) weights: Vec<Vec<f64>>,
    pub(super) l2: f64,
}

/// Sparse lowercased token counts over a fixed vocabulary; tokens the
/// vocabulary does not contain are dropped. Indices are strictly increasing.
pub fn featurize_unigram(text: &str, vocab: &BTreeMap<String, usize>) -> Vec<(usize, f64)> {
    let mut counts: BTreeMap<usize, f64> = BTreeMap::new();
    for token in tokenize_words(text) {
        if let Some(&i) = vocab.get(&token.lower()) {
            *counts.entry(i).or_insert(0.0) += 1.0;
        }
    }
    counts.into_iter().collect()
}

impl LogregModel {
    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn vocab(&self) -> &BTreeMap<String, usize> {
        &self.vocab
    }

    fn scores(&self, features: &[(usize, f64)]) -> Vec<f64> {
        self.weights
            .iter()
            .map(|row| {
                let bias = row[row.len() - 1];
                features.iter().map(|&(i, x)| row[i] * x).sum::<f64>() + bias
            })
            .collect()
    }

    pub fn predict_proba(&self, text: &str) -> Vec<f64> {
        let features = featurize_unigram(text, &self.vocab);
        softmax(&self.scores(&features))
    }
}

/// Mean cross-entropy plus (l2/2)·‖W‖² over the non-bias weights.
fn loss(model: &LogregModel, data: &[(Vec<(usize, f64)>, usize)]) -> f64 {
    let n = data.len() as f64;
    let mut total = 0.0;
    for (features, label) in data {
        let p = softmax(&model.scores(features));
        total -= p[*label].max(1e-300).ln();
    }
    let penalty: f64 = model
        .weights
        .iter()
        .flat_map(|row| row[..row.len() - 1].iter())
        .map(|w| w * w)
        .sum();
    total / n + 0.5 * model.l2 * penalty
}

/// Trains the unigram logistic-regression profiler and also returns the
/// regularized loss recorded before the first step and after every epoch.
/// Full-batch descent on this convex objective keeps the history
/// non-increasing, which makes it a useful optimizer diagnostic.
pub fn train_logreg_with_history(
    dataset: &[(String, String)],
    l2: f64,
    epochs: usize,
) -> Result<(LogregModel, Vec<f64>)> {
    if l2 < 0.0 {
        return Err(Error::task("negative L2 penalty"));
    }
    let classes = class_list(dataset)?;
    let mut vocab: BTreeMap<String, usize> = BTreeMap::new();
    for (text, _) in dataset {
        for token in tokenize_words(text) {
            let next = vocab.len();
            vocab.entry(token.lower()).or_insert(next);
        }
    }
    let class_index: BTreeMap<&str, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_str(), i))
        .collect();
    let data: Vec<(Vec<(usize, f64)>, usize)> = dataset
        .iter()
        .map(|(text, label)| {
            (
                featurize_unigram(text, &vocab),
                class_index[label.as_str()],
            )
        })
        .collect();

    let cols = vocab.len() + 1;
    let mut model = LogregModel {
        classes,
        vocab,
        weights: vec![vec![0.0; cols]; 0],
        l2,
    };
    model.weights = vec![vec![0.0; cols]; model.classes.len()];

    let n = data.len() as f64;
    let mut history = vec![loss(&model, &data)];
    for epoch in 1..=epochs {
        let mut grad = vec![vec![0.0; cols]; model.classes.len()];
        for (features, label) in &data {
            let p = softmax(&model.scores(features));
            for (c, pc) in p.iter().enumerate() {
                let err = (pc - if c == *label { 1.0 } else { 0.0 }) / n;
                for &(i, x) in features {
                    grad[c][i] += err * x;
                }
                grad[c][cols - 1] += err;
            }
        }
        let lr = BASE_LEARNING_RATE / epoch as f64;
        for (c, row) in model.weights.iter_mut().enumerate() {
            for (i, w) in row.iter_mut().enumerate() {
                let mut g = grad[c][i];
                if i != cols - 1 {
                    g += l2 * *w;
                }
                *w -= lr * g;
            }
        }
        history.push(loss(&model, &data));
    }
    Ok((model, history))
}

/// Trains a unigram logistic-regression profiler. Requires at least two
/// classes; zero epochs leaves the weights at zero, predicting the uniform
/// distribution everywhere.
pub fn train_logreg(dataset: &[(String, String)], l2: f64, epochs: usize) -> Result<ProfilerModel> {
    let (model, _) = train_logreg_with_history(dataset, l2, epochs)?;
    Ok(ProfilerModel::Logreg(model))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dataset(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|(t, c)| (t.to_string(), c.to_string()))
            .collect()
    }

    fn two_sentence_fixture() -> Vec<(String, String)> {
        dataset(&[("aaa", "c0"), ("bbb", "c1")])
    }

    #[test]
    fn featurize_counts_in_vocabulary_tokens_only() {
        let vocab: BTreeMap<String, usize> =
            [("a".to_string(), 0), ("b".to_string(), 1)].into_iter().collect();
        assert_eq!(
            featurize_unigram("a a b", &vocab),
            vec![(0, 2.0), (1, 1.0)]
        );
        assert_eq!(featurize_unigram("", &vocab), vec![]);
        assert_eq!(featurize_unigram("c d c", &vocab), vec![]);
    }

    #[test]
    fn separable_fixture_is_learned() {
        let model = train_logreg(&two_sentence_fixture(), DEFAULT_L2, DEFAULT_EPOCHS).unwrap();
        let p = model.predict_proba("aaa");
        assert!(p[0] > 0.5, "p(c0|aaa) = {}", p[0]);
        let p = model.predict_proba("bbb");
        assert!(p[1] > 0.5, "p(c1|bbb) = {}", p[1]);
    }

    #[test]
    fn zero_epochs_predicts_uniformly() {
        let model = train_logreg(&two_sentence_fixture(), DEFAULT_L2, 0).unwrap();
        for text in ["aaa", "bbb", "unseen words entirely"] {
            let p = model.predict_proba(text);
            assert_eq!(p.len(), 2);
            for pc in &p {
                assert!((pc - 0.5).abs() < 1e-12, "{p:?}");
            }
        }
    }

    #[test]
    fn duplicating_the_dataset_keeps_the_argmax() {
        let base = two_sentence_fixture();
        let mut doubled = base.clone();
        doubled.extend(base.clone());
        let m1 = train_logreg(&base, DEFAULT_L2, DEFAULT_EPOCHS).unwrap();
        let m2 = train_logreg(&doubled, DEFAULT_L2, DEFAULT_EPOCHS).unwrap();
        for text in ["aaa", "bbb"] {
            let a1 = m1.argmax_class(text);
            let a2 = m2.argmax_class(text);
            assert_eq!(a1, a2, "argmax flipped on {text:?}");
        }
    }

    #[test]
    fn single_class_data_is_rejected() {
        let data = dataset(&[("aaa", "c0"), ("aab", "c0")]);
        assert!(train_logreg(&data, DEFAULT_L2, DEFAULT_EPOCHS).is_err());
        assert!(train_logreg(&[], DEFAULT_L2, DEFAULT_EPOCHS).is_err());
    }

    #[test]
    fn training_loss_never_increases() {
        let data = dataset(&[
            ("the cat sat on the mat", "c0"),
            ("a cat ran home quickly", "c0"),
            ("stocks fell sharply today", "c1"),
            ("the market closed lower", "c1"),
            ("dogs and cats play outside", "c0"),
            ("traders sold the shares", "c1"),
        ]);
        let (_, history) = train_logreg_with_history(&data, DEFAULT_L2, 40).unwrap();
        for pair in history.windows(2) {
            assert!(
                pair[1] <= pair[0] + 1e-6,
                "loss rose from {} to {}",
                pair[0],
                pair[1]
            );
        }
        assert!(history.last().unwrap() < history.first().unwrap());
    }

    #[test]
    fn classes_are_sorted_and_probabilities_sum_to_one() {
        let data = dataset(&[("x", "zeta"), ("y", "alpha"), ("z", "mid")]);
        let model = train_logreg(&data, DEFAULT_L2, 5).unwrap();
        assert_eq!(model.classes(), ["alpha", "mid", "zeta"]);
        for text in ["x", "y", "entirely new text", ""] {
            let p = model.predict_proba(text);
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
            assert!(p.iter().all(|&x| x >= 0.0));
        }
    }
}
