//! PPDB paraphrase substitution.
//!
//! The lexicon is loaded from the PPDB line format, keeping only pairs whose
//! entailment class is exactly `Equivalence`. At substitution time every
//! entry is checked against the syntactic context it was extracted from: a
//! `[TAG]` entry only replaces a single token carrying that exact tag, and an
//! `[X/Y]` entry only applies when the phrase immediately to the right of the
//! match is of category `Y` (approximated by the shallow-chunk label, with
//! everything that is not NP/VP/PP collapsed to S).

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lingua::chunk::{chunk, span_containing, ChunkLabel};
use crate::rules::RuleSite;
use crate::text::Sentence;

/// Syntactic context a PPDB pair was extracted from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PpdbContext {
    /// `[NN]`-style: the phrase is a single token with this exact tag.
    SinglePos(String),
    /// `[X/Y]`-style: the phrase realizes category `x` when followed by a
    /// phrase of category `y`.
    PhrasePair { x: String, y: String },
}

/// One equivalence pair: `phrase` may be replaced by `paraphrase` when the
/// context condition holds. Both sides are lowercased token sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpdbEntry {
    pub context: PpdbContext,
    pub phrase: Vec<String>,
    pub paraphrase: Vec<String>,
}

/// Equivalence pairs indexed by the first token of their phrase.
#[derive(Debug, Clone, Default)]
pub struct PpdbLexicon {
    by_first: BTreeMap<String, Vec<PpdbEntry>>,
    len: usize,
}

impl PpdbLexicon {
    /// All entries whose phrase starts with `first` (lowercased token), in
    /// file order.
    pub fn lookup(&self, first: &str) -> &[PpdbEntry] {
        self.by_first.get(first).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of entries (well-formed Equivalence lines in the source file).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn insert(&mut self, entry: PpdbEntry) {
        let key = entry.phrase[0].clone();
        self.by_first.entry(key).or_default().push(entry);
        self.len += 1;
    }
}

/// Loads a PPDB lexicon from `path`.
pub fn load_ppdb(path: &Path) -> Result<PpdbLexicon> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_ppdb(path, &text)
}

/// Parses PPDB lines: six ` ||| `-separated fields (context, phrase,
/// paraphrase, features, alignment, entailment). Non-Equivalence lines are
/// silently dropped; malformed lines are counted and skipped, and more than
/// 50% malformed lines is a format error. `path` is for error reporting.
pub fn parse_ppdb(path: &Path, text: &str) -> Result<PpdbLexicon> {
    let mut lexicon = PpdbLexicon::default();
    let mut total = 0usize;
    let mut malformed = 0usize;
    for line in text.lines() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        total += 1;
        match parse_line(line) {
            Some(Some(entry)) => lexicon.insert(entry),
            Some(None) => {} // well-formed, but not an Equivalence pair
            None => malformed += 1,
        }
    }
    if malformed * 2 > total {
        return Err(Error::format(
            path,
            0,
            format!("{malformed} of {total} lines malformed"),
        ));
    }
    Ok(lexicon)
}

/// `Some(Some(entry))` for a well-formed Equivalence line, `Some(None)` for
/// a well-formed line of another entailment class, `None` when malformed.
fn parse_line(line: &str) -> Option<Option<PpdbEntry>> {
    let fields: Vec<&str> = line.split(" ||| ").collect();
    let [context, phrase, paraphrase, _features, _alignment, entailment] = fields.as_slice()
    else {
        return None;
    };
    let context = parse_context(context.trim())?;
    let phrase: Vec<String> = phrase.split_whitespace().map(str::to_lowercase).collect();
    let paraphrase: Vec<String> = paraphrase
        .split_whitespace()
        .map(str::to_lowercase)
        .collect();
    if phrase.is_empty() || paraphrase.is_empty() || phrase == paraphrase {
        return None;
    }
    if entailment.trim() != "Equivalence" {
        return Some(None);
    }
    Some(Some(PpdbEntry {
        context,
        phrase,
        paraphrase,
    }))
}

fn parse_context(field: &str) -> Option<PpdbContext> {
    let inner = field.strip_prefix('[')?.strip_suffix(']')?;
    if inner.is_empty() {
        return None;
    }
    match inner.split_once('/') {
        Some((x, y)) if !x.is_empty() && !y.is_empty() => Some(PpdbContext::PhrasePair {
            x: x.to_string(),
            y: y.to_string(),
        }),
        Some(_) => None,
        None => Some(PpdbContext::SinglePos(inner.to_string())),
    }
}

/// Collapses a PPDB right-context category onto the shallow-chunk inventory:
/// NP, VP and PP stand for themselves, everything else (S, SBAR, …) is S.
fn map_y(y: &str) -> &str {
    match y {
        "NP" | "VP" | "PP" => y,
        _ => "S",
    }
}

/// Chunk category of the phrase starting at token `pos` (`S` at the end of
/// the sentence or inside punctuation/remainder runs).
fn right_context(chunks: &[crate::lingua::chunk::ChunkSpan], n: usize, pos: usize) -> &'static str {
    if pos >= n {
        return "S";
    }
    match span_containing(chunks, pos).map(|c| c.label) {
        Some(ChunkLabel::Np) => "NP",
        Some(ChunkLabel::Vp) => "VP",
        Some(ChunkLabel::Pp) => "PP",
        _ => "S",
    }
}

/// Finds all PPDB substitution sites in a tagged sentence. Matching is
/// case-insensitive; the replacement keeps the original leading capital when
/// the site starts the sentence. Sites sharing a span are merged.
pub fn ppdb_sites(sentence: &Sentence, lexicon: &PpdbLexicon) -> Vec<RuleSite> {
    let tokens = &sentence.tokens;
    let n = tokens.len();
    let chunks = chunk(tokens);
    let lower: Vec<String> = tokens.iter().map(|t| t.lower()).collect();

    // Options grouped per span, in (position, file-order) discovery order.
    let mut options: BTreeMap<(usize, usize), Vec<Vec<String>>> = BTreeMap::new();
    for i in 0..n {
        for entry in lexicon.lookup(&lower[i]) {
            let len = entry.phrase.len();
            if i + len > n || lower[i..i + len] != entry.phrase[..] {
                continue;
            }
            let fits = match &entry.context {
                PpdbContext::SinglePos(tag) => len == 1 && tokens[i].tag_str() == tag,
                PpdbContext::PhrasePair { y, .. } => {
                    map_y(y) == right_context(&chunks, n, i + len)
                }
            };
            if !fits {
                continue;
            }
            let mut option = entry.paraphrase.clone();
            if i == 0 && tokens[0].surface.chars().next().is_some_and(char::is_uppercase) {
                if let Some(first) = option.first_mut() {
                    let mut chars = first.chars();
                    if let Some(c) = chars.next() {
                        *first = c.to_uppercase().collect::<String>() + chars.as_str();
                    }
                }
            }
            options.entry((i, i + len)).or_default().push(option);
        }
    }

    options
        .into_iter()
        .filter_map(|(span, alts)| {
            let original = tokens[span.0..span.1]
                .iter()
                .map(|t| t.surface.clone())
                .collect();
            RuleSite::new(span, original, alts, "ppdb")
        })
        .collect()
}
