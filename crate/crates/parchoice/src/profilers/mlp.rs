//! Writeprints-MLP profiler: a single-hidden-layer ReLU network with a
//! softmax output, trained by full-batch gradient descent on cross-entropy
//! over standardized Writeprints features. Initialization is drawn from a
//! seeded generator in a fixed order, so training is fully deterministic.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::lingua::TaggerModel;

use super::writeprints::{featurize_writeprints, WriteprintsSchema, DEFAULT_TOP_K};
use super::{class_list, softmax, ProfilerModel};

/// Training hyperparameters. The hidden width default follows the profiler's
/// single hidden layer of 100 nodes; the rest are this artifact's defaults.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlpConfig {
    pub hidden: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    pub seed: u64,
}

impl Default for MlpConfig {
    fn default() -> MlpConfig {
        MlpConfig {
            hidden: 100,
            epochs: 200,
            learning_rate: 0.01,
            seed: 0,
        }
    }
}

/// The network parameters: `w1` is hidden × input, `w2` is classes × hidden.
#[derive(Debug, Clone, PartialEq)]
pub(super) struct Net {
    pub(super) w1: Vec<Vec<f64>>,
    pub(super) b1: Vec<f64>,
    pub(super) w2: Vec<Vec<f64>>,
    pub(super) b2: Vec<f64>,
}

/// A trained Writeprints-MLP profiler. The model owns its schema, feature
/// standardization, and a copy of the tagger, so prediction needs no
/// external resources.
#[derive(Debug, Clone)]
pub struct MlpModel {
    pub(super) classes: Vec<String>,
    pub(super) schema: WriteprintsSchema,
    pub(super) tagger: TaggerModel,
    pub(super) mean: Vec<f64>,
    pub(super) std: Vec<f64>,
    pub(super) net: Net,
}

fn unit_uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

/// Uniform init in ±1/√fan_in, drawn row-major: all of w1, then all of w2.
/// Biases start at zero.
fn init_net(input: usize, hidden: usize, classes: usize, seed: u64) -> Net {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut layer = |rows: usize, cols: usize| -> Vec<Vec<f64>> {
        let scale = 1.0 / (cols as f64).sqrt();
        (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| (2.0 * unit_uniform(&mut rng) - 1.0) * scale)
                    .collect()
            })
            .collect()
    };
    let w1 = layer(hidden, input);
    let w2 = layer(classes, hidden);
    Net {
        w1,
        b1: vec![0.0; hidden],
        w2,
        b2: vec![0.0; classes],
    }
}

fn forward(net: &Net, x: &[f64]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let z1: Vec<f64> = net
        .w1
        .iter()
        .zip(&net.b1)
        .map(|(row, b)| row.iter().zip(x).map(|(w, xi)| w * xi).sum::<f64>() + b)
        .collect();
    let a1: Vec<f64> = z1.iter().map(|z| z.max(0.0)).collect();
    let scores: Vec<f64> = net
        .w2
        .iter()
        .zip(&net.b2)
        .map(|(row, b)| row.iter().zip(&a1).map(|(w, a)| w * a).sum::<f64>() + b)
        .collect();
    let p = softmax(&scores);
    (z1, a1, p)
}

/// Mean cross-entropy over the batch.
fn net_loss(net: &Net, xs: &[Vec<f64>], ys: &[usize]) -> f64 {
    let n = xs.len() as f64;
    xs.iter()
        .zip(ys)
        .map(|(x, &y)| {
            let (_, _, p) = forward(net, x);
            -p[y].max(1e-300).ln()
        })
        .sum::<f64>()
        / n
}

/// Mean cross-entropy and its analytic gradients.
fn net_grads(net: &Net, xs: &[Vec<f64>], ys: &[usize]) -> (f64, Net) {
    let hidden = net.b1.len();
    let classes = net.b2.len();
    let input = net.w1.first().map_or(0, Vec::len);
    let n = xs.len() as f64;
    let mut grad = Net {
        w1: vec![vec![0.0; input]; hidden],
        b1: vec![0.0; hidden],
        w2: vec![vec![0.0; hidden]; classes],
        b2: vec![0.0; classes],
    };
    let mut loss = 0.0;
    for (x, &y) in xs.iter().zip(ys) {
        let (z1, a1, p) = forward(net, x);
        loss -= p[y].max(1e-300).ln();
        let dz2: Vec<f64> = p
            .iter()
            .enumerate()
            .map(|(c, pc)| (pc - if c == y { 1.0 } else { 0.0 }) / n)
            .collect();
        for (c, &d) in dz2.iter().enumerate() {
            for (j, a) in a1.iter().enumerate() {
                grad.w2[c][j] += d * a;
            }
            grad.b2[c] += d;
        }
        for j in 0..hidden {
            if z1[j] <= 0.0 {
                continue;
            }
            let da: f64 = dz2.iter().zip(&net.w2).map(|(d, row)| d * row[j]).sum();
            for (i, xi) in x.iter().enumerate() {
                grad.w1[j][i] += da * xi;
            }
            grad.b1[j] += da;
        }
    }
    (loss / n, grad)
}

/// Enumerates every parameter of a net as a (block, row, col) key, where the
/// blocks are w1, b1, w2, b2 in that order.
fn param_keys(net: &Net) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (r, row) in net.w1.iter().enumerate() {
        for c in 0..row.len() {
            out.push((0, r, c));
        }
    }
    for c in 0..net.b1.len() {
        out.push((1, 0, c));
    }
    for (r, row) in net.w2.iter().enumerate() {
        for c in 0..row.len() {
            out.push((2, r, c));
        }
    }
    for c in 0..net.b2.len() {
        out.push((3, 0, c));
    }
    out
}

fn param_get(net: &Net, key: (usize, usize, usize)) -> f64 {
    match key.0 {
        0 => net.w1[key.1][key.2],
        1 => net.b1[key.2],
        2 => net.w2[key.1][key.2],
        _ => net.b2[key.2],
    }
}

fn param_set(net: &mut Net, key: (usize, usize, usize), v: f64) {
    match key.0 {
        0 => net.w1[key.1][key.2] = v,
        1 => net.b1[key.2] = v,
        2 => net.w2[key.1][key.2] = v,
        _ => net.b2[key.2] = v,
    }
}

pub(super) fn train_net(
    xs: &[Vec<f64>],
    ys: &[usize],
    classes: usize,
    config: &MlpConfig,
) -> Net {
    let input = xs.first().map_or(0, Vec::len);
    let mut net = init_net(input, config.hidden, classes, config.seed);
    for _ in 0..config.epochs {
        let (_, grad) = net_grads(&net, xs, ys);
        for (row, grow) in net.w1.iter_mut().zip(&grad.w1) {
            for (w, g) in row.iter_mut().zip(grow) {
                *w -= config.learning_rate * g;
            }
        }
        for (b, g) in net.b1.iter_mut().zip(&grad.b1) {
            *b -= config.learning_rate * g;
        }
        for (row, grow) in net.w2.iter_mut().zip(&grad.w2) {
            for (w, g) in row.iter_mut().zip(grow) {
                *w -= config.learning_rate * g;
            }
        }
        for (b, g) in net.b2.iter_mut().zip(&grad.b2) {
            *b -= config.learning_rate * g;
        }
    }
    net
}

impl MlpModel {
    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn schema(&self) -> &WriteprintsSchema {
        &self.schema
    }

    pub(super) fn standardize(&self, features: &[f64]) -> Vec<f64> {
        features
            .iter()
            .zip(&self.mean)
            .zip(&self.std)
            .map(|((x, m), s)| (x - m) / s)
            .collect()
    }

    pub fn predict_proba(&self, text: &str) -> Vec<f64> {
        let features = featurize_writeprints(text, &self.schema, &self.tagger);
        let x = self.standardize(&features);
        let (_, _, p) = forward(&self.net, &x);
        p
    }
}

/// The featurized, standardized training matrix shared by training and the
/// gradient diagnostic.
struct Prepared {
    classes: Vec<String>,
    schema: WriteprintsSchema,
    mean: Vec<f64>,
    std: Vec<f64>,
    xs: Vec<Vec<f64>>,
    ys: Vec<usize>,
}

fn prepare(
    dataset: &[(String, String)],
    tagger: &TaggerModel,
    function_words: &[String],
) -> Result<Prepared> {
    let classes = class_list(dataset)?;
    let texts: Vec<String> = dataset.iter().map(|(t, _)| t.clone()).collect();
    let schema = WriteprintsSchema::build(&texts, function_words, DEFAULT_TOP_K);
    let features: Vec<Vec<f64>> = texts
        .iter()
        .map(|t| featurize_writeprints(t, &schema, tagger))
        .collect();

    let dim = schema.dim();
    let n = features.len() as f64;
    let mut mean = vec![0.0; dim];
    for f in &features {
        for (m, x) in mean.iter_mut().zip(f) {
            *m += x / n;
        }
    }
    let mut std = vec![0.0; dim];
    for f in &features {
        for ((s, x), m) in std.iter_mut().zip(f).zip(&mean) {
            *s += (x - m) * (x - m) / n;
        }
    }
    for s in &mut std {
        *s = s.sqrt();
        if *s < 1e-12 {
            *s = 1.0;
        }
    }

    let xs: Vec<Vec<f64>> = features
        .iter()
        .map(|f| {
            f.iter()
                .zip(&mean)
                .zip(&std)
                .map(|((x, m), s)| (x - m) / s)
                .collect()
        })
        .collect();
    let class_of: std::collections::BTreeMap<&str, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_str(), i))
        .collect();
    let ys: Vec<usize> = dataset
        .iter()
        .map(|(_, label)| class_of[label.as_str()])
        .collect();
    Ok(Prepared {
        classes,
        schema,
        mean,
        std,
        xs,
        ys,
    })
}

/// Trains a Writeprints-MLP profiler: the schema is built from the training
/// texts, features are standardized with training-set mean and variance, and
/// the network is fit by seeded full-batch gradient descent.
pub fn train_mlp(
    dataset: &[(String, String)],
    config: &MlpConfig,
    tagger: &TaggerModel,
    function_words: &[String],
) -> Result<ProfilerModel> {
    let p = prepare(dataset, tagger, function_words)?;
    let net = train_net(&p.xs, &p.ys, p.classes.len(), config);
    Ok(ProfilerModel::WriteprintsMlp(MlpModel {
        classes: p.classes,
        schema: p.schema,
        tagger: tagger.clone(),
        mean: p.mean,
        std: p.std,
        net,
    }))
}

/// Numerically verifies the backward pass on a real featurized dataset:
/// compares every analytic gradient at the seeded initialization against a
/// central finite difference of the loss and returns the worst relative
/// error, with the denominator floored at 1e-8 so near-zero gradients do not
/// blow up the ratio. A correct implementation stays well under 1e-4.
pub fn gradient_check(
    dataset: &[(String, String)],
    config: &MlpConfig,
    tagger: &TaggerModel,
    function_words: &[String],
    epsilon: f64,
) -> Result<f64> {
    let p = prepare(dataset, tagger, function_words)?;
    let input = p.xs.first().map_or(0, Vec::len);
    let net = init_net(input, config.hidden, p.classes.len(), config.seed);
    let (_, grad) = net_grads(&net, &p.xs, &p.ys);
    let mut worst = 0.0f64;
    for key in param_keys(&net) {
        let mut plus = net.clone();
        param_set(&mut plus, key, param_get(&net, key) + epsilon);
        let mut minus = net.clone();
        param_set(&mut minus, key, param_get(&net, key) - epsilon);
        let numeric =
            (net_loss(&plus, &p.xs, &p.ys) - net_loss(&minus, &p.xs, &p.ys)) / (2.0 * epsilon);
        let analytic = param_get(&grad, key);
        let denom = numeric.abs().max(analytic.abs()).max(1e-8);
        worst = worst.max((numeric - analytic).abs() / denom);
    }
    Ok(worst)
}
