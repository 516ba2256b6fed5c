//! Static Writeprints stylometric features.
//!
//! The feature vector covers lexical statistics (word count, average word
//! length, short words, character/letter/digit counts, digit / uppercase /
//! special-character percentages), common character bigram and trigram
//! percentages, hapax and dis legomena counts, and per-item counts of
//! function words, POS tags, and punctuation marks. "Common" n-grams are the
//! top-K by training-corpus frequency, chosen once into a schema so the
//! vector layout is fixed before any text is featurized.

use std::collections::BTreeMap;

use crate::lingua::TaggerModel;
use crate::text::tokenize_words;

/// How many character bigrams and trigrams the schema keeps (each).
pub const DEFAULT_TOP_K: usize = 50;

/// The Penn Treebank tag inventory the POS-count features are keyed on.
pub const PENN_TAGS: &[&str] = &[
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN", "NNP", "NNPS",
    "NNS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD",
    "VBG", "VBN", "VBP", "VBZ", "WDT", "WP", "WP$", "WRB", ".", ",", ":", "``", "''", "(", ")",
    "#", "$",
];

/// Punctuation marks counted individually.
pub const PUNCT_CHARS: &[char] = &['.', ',', '!', '?', ';', ':', '\'', '"', '-', '(', ')'];

/// The standard English function words shipped with the crate, one per line.
pub fn default_function_words() -> Vec<String> {
    include_str!("../../resources/function_words.txt")
        .lines()
        .map(|w| w.trim().to_string())
        .filter(|w| !w.is_empty())
        .collect()
}

/// Number of scalar lexical features at the head of the vector.
const LEXICAL: usize = 9;

/// The trained part of the feature layout: the function-word list and the
/// character n-grams chosen from the training corpus. POS tags and
/// punctuation marks are fixed inventories and need no training.
#[derive(Debug, Clone, PartialEq)]
pub struct WriteprintsSchema {
    pub function_words: Vec<String>,
    pub bigrams: Vec<String>,
    pub trigrams: Vec<String>,
}

/// Lowercases and collapses whitespace runs to single spaces, so character
/// n-grams never contain tabs or newlines and line wrapping does not change
/// the features.
fn normalize_for_grams(text: &str) -> Vec<char> {
    let mut out: Vec<char> = Vec::with_capacity(text.len());
    for piece in text.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.extend(piece.to_lowercase().chars());
    }
    out
}

fn count_grams(chars: &[char], n: usize, into: &mut BTreeMap<String, u64>) {
    if chars.len() < n {
        return;
    }
    for window in chars.windows(n) {
        *into.entry(window.iter().collect()).or_insert(0) += 1;
    }
}

fn top_k(counts: &BTreeMap<String, u64>, k: usize) -> Vec<String> {
    let mut items: Vec<(&String, &u64)> = counts.iter().collect();
    items.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    items.into_iter().take(k).map(|(g, _)| g.clone()).collect()
}

impl WriteprintsSchema {
    /// Chooses the top-`k` character bigrams and trigrams over the training
    /// texts (ties broken lexicographically) and fixes the function-word
    /// list. Deterministic in its inputs.
    pub fn build(texts: &[String], function_words: &[String], k: usize) -> WriteprintsSchema {
        let mut bigrams: BTreeMap<String, u64> = BTreeMap::new();
        let mut trigrams: BTreeMap<String, u64> = BTreeMap::new();
        for text in texts {
            let chars = normalize_for_grams(text);
            count_grams(&chars, 2, &mut bigrams);
            count_grams(&chars, 3, &mut trigrams);
        }
        WriteprintsSchema {
            function_words: function_words.iter().map(|w| w.to_lowercase()).collect(),
            bigrams: top_k(&bigrams, k),
            trigrams: top_k(&trigrams, k),
        }
    }

    /// Total feature-vector length under this schema.
    pub fn dim(&self) -> usize {
        LEXICAL
            + self.bigrams.len()
            + self.trigrams.len()
            + 2
            + self.function_words.len()
            + PENN_TAGS.len()
            + PUNCT_CHARS.len()
    }

    fn bigram_offset(&self) -> usize {
        LEXICAL
    }

    fn trigram_offset(&self) -> usize {
        self.bigram_offset() + self.bigrams.len()
    }

    fn legomena_offset(&self) -> usize {
        self.trigram_offset() + self.trigrams.len()
    }

    fn function_word_offset(&self) -> usize {
        self.legomena_offset() + 2
    }

    fn pos_offset(&self) -> usize {
        self.function_word_offset() + self.function_words.len()
    }

    fn punct_offset(&self) -> usize {
        self.pos_offset() + PENN_TAGS.len()
    }
}

/// Featurizes one text under a schema. Words are tokens containing at least
/// one alphanumeric character; percentages are over all non-whitespace
/// characters; POS counts come from the supplied tagger.
pub fn featurize_writeprints(
    text: &str,
    schema: &WriteprintsSchema,
    tagger: &TaggerModel,
) -> Vec<f64> {
    let mut v = vec![0.0; schema.dim()];

    let tokens = tokenize_words(text);
    let words: Vec<String> = tokens
        .iter()
        .filter(|t| t.surface.chars().any(|c| c.is_alphanumeric()))
        .map(|t| t.surface.clone())
        .collect();

    let word_count = words.len();
    let word_chars: usize = words.iter().map(|w| w.chars().count()).sum();
    v[0] = word_count as f64;
    v[1] = if word_count == 0 {
        0.0
    } else {
        word_chars as f64 / word_count as f64
    };
    v[2] = words.iter().filter(|w| w.chars().count() <= 3).count() as f64;

    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let char_count = chars.len();
    let digits = chars.iter().filter(|c| c.is_ascii_digit()).count();
    let letters = chars.iter().filter(|c| c.is_alphabetic()).count();
    let uppers = chars.iter().filter(|c| c.is_uppercase()).count();
    let specials = chars.iter().filter(|c| !c.is_alphanumeric()).count();
    let pct = |n: usize| {
        if char_count == 0 {
            0.0
        } else {
            100.0 * n as f64 / char_count as f64
        }
    };
    v[3] = char_count as f64;
    v[4] = pct(digits);
    v[5] = pct(uppers);
    v[6] = pct(specials);
    v[7] = letters as f64;
    v[8] = digits as f64;

    let normalized = normalize_for_grams(text);
    for (grams, offset, n) in [
        (&schema.bigrams, schema.bigram_offset(), 2),
        (&schema.trigrams, schema.trigram_offset(), 3),
    ] {
        let mut counts: BTreeMap<String, u64> = BTreeMap::new();
        count_grams(&normalized, n, &mut counts);
        let total: u64 = counts.values().sum();
        if total > 0 {
            for (j, gram) in grams.iter().enumerate() {
                let c = counts.get(gram).copied().unwrap_or(0);
                v[offset + j] = 100.0 * c as f64 / total as f64;
            }
        }
    }

    let mut type_counts: BTreeMap<String, u64> = BTreeMap::new();
    for w in &words {
        *type_counts.entry(w.to_lowercase()).or_insert(0) += 1;
    }
    let lego = schema.legomena_offset();
    v[lego] = type_counts.values().filter(|&&c| c == 1).count() as f64;
    v[lego + 1] = type_counts.values().filter(|&&c| c == 2).count() as f64;

    let fw_off = schema.function_word_offset();
    for (j, fw) in schema.function_words.iter().enumerate() {
        v[fw_off + j] = type_counts.get(fw).copied().unwrap_or(0) as f64;
    }

    let surfaces: Vec<&str> = tokens.iter().map(|t| t.surface.as_str()).collect();
    let tags = tagger.predict(&surfaces);
    let pos_off = schema.pos_offset();
    for tag in &tags {
        if let Some(j) = PENN_TAGS.iter().position(|t| t == tag) {
            v[pos_off + j] += 1.0;
        }
    }

    let punct_off = schema.punct_offset();
    for c in text.chars() {
        if let Some(j) = PUNCT_CHARS.iter().position(|p| *p == c) {
            v[punct_off + j] += 1.0;
        }
    }

    v
}
