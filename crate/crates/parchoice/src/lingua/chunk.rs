//! Deterministic shallow chunker.
//!
//! A fixed POS-pattern grammar splits every tagged sentence into a flat
//! sequence of phrase spans:
//!
//! - `NP` = (DT|PRP$)? (JJ|JJR|JJS)* (NN|NNS|NNP|NNPS|PRP)+
//! - `PP` = (IN|TO) NP
//! - `VP` = (MD|VB|VBD|VBZ|VBP|VBN|VBG)+
//! - `S-REST` = any maximal run matched by none of the above
//!
//! Matching is greedy longest-match from left to right. The spans always
//! partition the sentence: every token lands in exactly one span.

use crate::text::Token;

/// Phrase label of a chunk span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChunkLabel {
    Np,
    Vp,
    Pp,
    SRest,
}

impl ChunkLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ChunkLabel::Np => "NP",
            ChunkLabel::Vp => "VP",
            ChunkLabel::Pp => "PP",
            ChunkLabel::SRest => "S-REST",
        }
    }
}

/// One phrase span; `start..end` are token indices (half-open).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChunkSpan {
    pub label: ChunkLabel,
    pub start: usize,
    pub end: usize,
}

fn is_det(tag: &str) -> bool {
    matches!(tag, "DT" | "PRP$")
}

fn is_adj(tag: &str) -> bool {
    matches!(tag, "JJ" | "JJR" | "JJS")
}

fn is_noun(tag: &str) -> bool {
    matches!(tag, "NN" | "NNS" | "NNP" | "NNPS" | "PRP")
}

fn is_prep(tag: &str) -> bool {
    matches!(tag, "IN" | "TO")
}

fn is_verb(tag: &str) -> bool {
    matches!(tag, "MD" | "VB" | "VBD" | "VBZ" | "VBP" | "VBN" | "VBG")
}

/// Longest NP starting at `i`, or `None` if the pattern does not match
/// (an optional determiner and adjectives without a following noun is not
/// an NP).
fn match_np(tags: &[&str], i: usize) -> Option<usize> {
    if i >= tags.len() {
        return None;
    }
    let mut j = i;
    if is_det(tags[j]) {
        j += 1;
    }
    while j < tags.len() && is_adj(tags[j]) {
        j += 1;
    }
    let nouns_start = j;
    while j < tags.len() && is_noun(tags[j]) {
        j += 1;
    }
    (j > nouns_start).then_some(j)
}

fn pattern_starts_at(tags: &[&str], i: usize) -> bool {
    match_np(tags, i).is_some()
        || (is_prep(tags[i]) && match_np(tags, i + 1).is_some())
        || is_verb(tags[i])
}

/// Chunks a sequence of POS tags into phrase spans partitioning `[0, n)`.
pub fn chunk_tags(tags: &[&str]) -> Vec<ChunkSpan> {
    let mut spans = Vec::new();
    let mut i = 0;
    while i < tags.len() {
        if let Some(end) = match_np(tags, i) {
            spans.push(ChunkSpan { label: ChunkLabel::Np, start: i, end });
            i = end;
        } else if is_prep(tags[i]) && match_np(tags, i + 1).is_some() {
            let end = match_np(tags, i + 1).unwrap();
            spans.push(ChunkSpan { label: ChunkLabel::Pp, start: i, end });
            i = end;
        } else if is_verb(tags[i]) {
            let mut j = i + 1;
            while j < tags.len() && is_verb(tags[j]) {
                j += 1;
            }
            spans.push(ChunkSpan { label: ChunkLabel::Vp, start: i, end: j });
            i = j;
        } else {
            let mut j = i + 1;
            while j < tags.len() && !pattern_starts_at(tags, j) {
                j += 1;
            }
            spans.push(ChunkSpan { label: ChunkLabel::SRest, start: i, end: j });
            i = j;
        }
    }
    spans
}

/// Chunks a tagged token slice. Untagged tokens never match a pattern and
/// fall into S-REST spans.
pub fn chunk(tokens: &[Token]) -> Vec<ChunkSpan> {
    let tags: Vec<&str> = tokens.iter().map(|t| t.tag_str()).collect();
    chunk_tags(&tags)
}

/// The span containing token `index`, if any.
pub fn span_containing(spans: &[ChunkSpan], index: usize) -> Option<&ChunkSpan> {
    spans.iter().find(|s| s.start <= index && index < s.end)
}
