//! Machine-readable experiment reports and their text-table rendering.
//!
//! Reports are plain serde trees written as pretty JSON. Everything in a
//! report is derived from (config, resources, seed), so rerunning a command
//! with the same inputs reproduces the report byte for byte; wall-clock
//! timings go to stderr instead.

use std::collections::BTreeMap;

use serde::Serialize;

/// Accuracy metrics for one evaluation profiler in one transform direction.
#[derive(Debug, Clone, Serialize)]
pub struct ProfilerReport {
    pub kind: String,
    pub original_accuracy: f64,
    pub original_per_class: BTreeMap<String, f64>,
    pub transformed_accuracy: f64,
    pub transformed_per_class: BTreeMap<String, f64>,
    pub accuracy_decrease: f64,
    /// Among source sentences the profiler originally got right, the fraction
    /// it assigns to the target class after transformation.
    pub successful_style_transfer_rate: f64,
}

/// Metrics for one source-to-target transform direction.
#[derive(Debug, Clone, Serialize)]
pub struct DirectionReport {
    pub source: String,
    pub target: String,
    pub split: String,
    pub profilers: Vec<ProfilerReport>,
    pub meteor_mean: f64,
    pub transformed_sentence_rate: f64,
}

/// Per-document outcome of a genetic document transform.
#[derive(Debug, Clone, Serialize)]
pub struct DocumentOutcome {
    pub id: String,
    pub author: String,
    pub misclassified_before: bool,
    pub misclassified_after: bool,
    pub transformed_sentence_rate: f64,
    pub meteor: f64,
    pub iterations: usize,
}

/// Before/after accuracy pair from adversarial retraining.
#[derive(Debug, Clone, Serialize)]
pub struct BeforeAfter {
    pub before: f64,
    pub after: f64,
}

/// Adversarial-retraining metrics: the same profiler kind evaluated on the
/// original test set and on the transformed test set, before and after
/// retraining on original-plus-transformed data.
#[derive(Debug, Clone, Serialize)]
pub struct AdversarialReport {
    pub profiler: String,
    pub original_test: BeforeAfter,
    pub transformed_test: BeforeAfter,
}

/// The top-level report a command writes next to its outputs.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub task: String,
    pub mode: String,
    pub seed: u64,
    pub versions: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub directions: Vec<DirectionReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub documents: Vec<DocumentOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adversarial: Option<AdversarialReport>,
}

impl Report {
    pub fn new(task: &str, mode: &str, seed: u64) -> Report {
        let mut versions = BTreeMap::new();
        versions.insert("parchoice".to_string(), parchoice::VERSION.to_string());
        versions.insert(
            "parchoice-cli".to_string(),
            env!("CARGO_PKG_VERSION").to_string(),
        );
        Report {
            task: task.to_string(),
            mode: mode.to_string(),
            seed,
            versions,
            directions: Vec::new(),
            documents: Vec::new(),
            adversarial: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("report serializes");
        json.push('\n');
        json
    }

    /// Renders the report as aligned text tables on stdout.
    pub fn print_tables(&self) {
        if !self.directions.is_empty() {
            let mut rows = Vec::new();
            for d in &self.directions {
                for p in &d.profilers {
                    rows.push(vec![
                        format!("{} -> {}", d.source, d.target),
                        p.kind.clone(),
                        format!("{:.3}", p.original_accuracy),
                        format!("{:.3}", p.transformed_accuracy),
                        format!("{:+.3}", -p.accuracy_decrease),
                        format!("{:.3}", p.successful_style_transfer_rate),
                    ]);
                }
            }
            print!(
                "{}",
                render_table(
                    &["direction", "profiler", "orig acc", "trans acc", "change", "transfer"],
                    &rows,
                )
            );
            let rows: Vec<Vec<String>> = self
                .directions
                .iter()
                .map(|d| {
                    vec![
                        format!("{} -> {}", d.source, d.target),
                        d.split.clone(),
                        format!("{:.3}", d.meteor_mean),
                        format!("{:.3}", d.transformed_sentence_rate),
                    ]
                })
                .collect();
            print!(
                "{}",
                render_table(&["direction", "split", "meteor", "sent rate"], &rows)
            );
        }
        if !self.documents.is_empty() {
            let rows: Vec<Vec<String>> = self
                .documents
                .iter()
                .map(|d| {
                    vec![
                        d.id.clone(),
                        yes_no(d.misclassified_before),
                        yes_no(d.misclassified_after),
                        format!("{:.3}", d.transformed_sentence_rate),
                        format!("{:.3}", d.meteor),
                        d.iterations.to_string(),
                    ]
                })
                .collect();
            print!(
                "{}",
                render_table(
                    &["document", "missed before", "missed after", "sent rate", "meteor", "iters"],
                    &rows,
                )
            );
        }
        if let Some(adv) = &self.adversarial {
            let rows = vec![
                vec![
                    "original test".to_string(),
                    format!("{:.3}", adv.original_test.before),
                    format!("{:.3}", adv.original_test.after),
                ],
                vec![
                    "transformed test".to_string(),
                    format!("{:.3}", adv.transformed_test.before),
                    format!("{:.3}", adv.transformed_test.after),
                ],
            ];
            print!(
                "{}",
                render_table(&[&format!("{} accuracy", adv.profiler), "before", "after"], &rows)
            );
        }
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Renders one aligned table: a header row, a rule, then the data rows.
/// Every row must have as many cells as the header.
pub fn render_table<S: AsRef<str>>(headers: &[S], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.as_ref().len()).collect();
    for row in rows {
        assert_eq!(row.len(), widths.len(), "ragged table row");
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: Vec<&str>| {
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            for _ in cell.len()..*w {
                out.push(' ');
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    emit(&mut out, headers.iter().map(AsRef::as_ref).collect());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    emit(&mut out, rule.iter().map(String::as_str).collect());
    for row in rows {
        emit(&mut out, row.iter().map(String::as_str).collect());
    }
    out
}
