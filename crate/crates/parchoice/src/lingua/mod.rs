//! Linguistic toolkit backing the paraphrase pipeline.
//!
//! Everything here is trainable from (or derived from) a plain tagged corpus,
//! so the crate carries no external NLP dependency:
//!
//! - [`tagger`] — an averaged-perceptron POS tagger over the Penn tag set.
//! - [`chunk`] — a deterministic shallow chunker (NP / VP / PP / S-REST).
//! - [`lemma`] — rule-based English de-inflection plus irregular-form tables.
//! - [`inflect`] — a corpus-derived (lemma, tag) → surface-form table.

pub mod chunk;
pub mod inflect;
pub mod lemma;
pub mod tagger;

pub use chunk::{chunk, chunk_tags, span_containing, ChunkLabel, ChunkSpan};
pub use inflect::InflectionTable;
pub use lemma::{lemmatize, lemmatize_token, stem};
pub use tagger::{
    load_tagged_corpus, parse_tagged_corpus, train_tagger, TaggedSentence, TaggerModel,
    DEFAULT_ITERATIONS,
};
