//! Paraphrase-based style transfer toolkit.
//!
//! The pipeline generates paraphrase candidates for each sentence by composing
//! several transformation families — grammatical rewrites (passivization,
//! negation wrapping, question rewriting), simple lexical rules (contractions,
//! comma removal, modal swaps), phrase substitution from a PPDB-style table,
//! inflected WordNet synonym substitution, and typo injection — and then picks
//! the candidate that moves a trained author profiler toward a target style.
//!
//! Modules roughly follow the data flow:
//!
//! * [`text`] — tokens, sentences, edit distance;
//! * [`lingua`] — POS tagging, chunking, lemmatization, inflection;
//! * [`rules`] — rule sites and grammatical transforms;
//! * [`substitution`] — PPDB and WordNet substitution sites;
//! * [`typos`] — typo lexicons and spell correction;
//! * [`profilers`] — unigram logistic-regression and Writeprints-MLP author
//!   classifiers;
//! * [`meteor`] — the METEOR similarity score used for selection and reports;
//! * [`engine`] — candidate generation, sentence-wise selection, and the
//!   document-level genetic search;
//! * [`resources`] — bundled lexicons and model persistence.

pub mod engine;
pub mod error;
pub mod lingua;
pub mod resources;
pub mod rules;
pub mod substitution;
pub mod synth;
pub mod meteor;
pub mod profilers;
pub mod typos;
pub mod text;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use text::{CandidateSentence, Document, Sentence, Token};

/// Library version, for run metadata in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
