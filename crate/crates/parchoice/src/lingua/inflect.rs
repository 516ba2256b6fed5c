//! Corpus-derived inflection table: (lemma, tag) → most common surface form.
//!
//! The table is how substituted lemmas (e.g. WordNet synonyms, which are
//! stored uninflected) get realized in the inflection of the word they
//! replace. It is built by de-inflecting every token of a tagged corpus with
//! [`crate::lingua::lemmatize`] and recording which surface form each
//! (lemma, tag) pair most frequently realizes. A pair never seen in the
//! build corpus is simply absent — callers must skip that substitution
//! rather than guess a form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lingua::lemma::lemmatize;
use crate::lingua::tagger::TaggedSentence;

const MAGIC: &str = "parchoice-inflection-v1";

/// Immutable (lemma, tag) → surface-form table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InflectionTable {
    /// lemma → tag → surface (all lowercase).
    map: BTreeMap<String, BTreeMap<String, String>>,
}

impl InflectionTable {
    /// Builds a table from a tagged corpus. For every key the stored
    /// surface is the most frequent (lowercased) realization, ties broken
    /// lexicographically. An empty corpus is a resource error.
    pub fn build(corpus: &[TaggedSentence]) -> Result<InflectionTable> {
        if corpus.iter().map(Vec::len).sum::<usize>() == 0 {
            return Err(Error::resource(
                "cannot build an inflection table from an empty corpus",
            ));
        }
        let mut counts: BTreeMap<String, BTreeMap<String, BTreeMap<String, u64>>> = BTreeMap::new();
        for sentence in corpus {
            for (surface, tag) in sentence {
                let lemma = lemmatize(surface, tag);
                *counts
                    .entry(lemma)
                    .or_default()
                    .entry(tag.clone())
                    .or_default()
                    .entry(surface.to_lowercase())
                    .or_insert(0) += 1;
            }
        }
        let mut map: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (lemma, per_tag) in counts {
            let entry = map.entry(lemma).or_default();
            for (tag, surfaces) in per_tag {
                let best = *surfaces.values().max().expect("non-empty surface counts");
                let surface = surfaces
                    .iter()
                    .find(|(_, c)| **c == best)
                    .map(|(s, _)| s.clone())
                    .expect("non-empty surface counts");
                entry.insert(tag, surface);
            }
        }
        Ok(InflectionTable { map })
    }

    /// The surface form realizing `lemma` under `tag`, if the pair was seen
    /// in the build corpus.
    pub fn inflect(&self, lemma: &str, tag: &str) -> Option<&str> {
        self.map.get(lemma)?.get(tag).map(String::as_str)
    }

    /// Number of (lemma, tag) entries.
    pub fn len(&self) -> usize {
        self.map.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Serializes to the versioned line-oriented format. Canonical: equal
    /// tables produce identical bytes.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(MAGIC);
        out.push('\n');
        for (lemma, per_tag) in &self.map {
            for (tag, surface) in per_tag {
                let _ = writeln!(out, "{lemma}\t{tag}\t{surface}");
            }
        }
        out
    }

    /// Writes the serialized table to `path`.
    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.serialize()).map_err(|e| Error::io(path, e))
    }

    /// Reads a table previously written by [`InflectionTable::save`].
    pub fn load(path: &Path) -> Result<InflectionTable> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(path, &text)
    }

    /// Parses the serialized form; `path` is used only for error reporting.
    pub fn parse(path: &Path, text: &str) -> Result<InflectionTable> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, first)) if first == MAGIC => {}
            _ => return Err(Error::format(path, 1, format!("expected header {MAGIC}"))),
        }
        let mut map: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let [lemma, tag, surface] = fields.as_slice() else {
                return Err(Error::format(
                    path,
                    lineno,
                    "expected `lemma<TAB>tag<TAB>surface`",
                ));
            };
            let prev = map
                .entry(lemma.to_string())
                .or_default()
                .insert(tag.to_string(), surface.to_string());
            if prev.is_some() {
                return Err(Error::format(
                    path,
                    lineno,
                    format!("duplicate entry for ({lemma}, {tag})"),
                ));
            }
        }
        Ok(InflectionTable { map })
    }
}
