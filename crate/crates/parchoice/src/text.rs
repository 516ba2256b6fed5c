//! Tokens, sentences, documents, and character edit distance.
//!
//! Tokenization splits on whitespace and punctuation boundaries and detaches
//! the clitics `'m 're 've 's 'll 'd n't` as separate tokens, so `"you're"`
//! becomes `[you]['re]` and `"can't"` becomes `[ca][n't]`. Word-internal
//! hyphens are kept (`no-one` stays one token). Detokenization inverts this:
//! single spaces everywhere except before `. , ! ? ; :`, apostrophe-initial
//! tokens, and `n't`. Round-tripping token sequences through
//! `tokenize(detokenize(..))` reproduces the surfaces exactly.

/// Penn Treebank part-of-speech tag, e.g. `"NN"` or `"VBD"`.
pub type PosTag = String;

/// One surface token, optionally carrying a tag and a lemma.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub surface: String,
    pub tag: Option<PosTag>,
    pub lemma: Option<String>,
}

impl Token {
    /// Builds an untagged token. Panics if `surface` is empty or contains
    /// whitespace — both would corrupt detokenization.
    pub fn new(surface: impl Into<String>) -> Self {
        let surface = surface.into();
        assert!(!surface.is_empty(), "token surface must be non-empty");
        assert!(
            !surface.chars().any(char::is_whitespace),
            "token surface must not contain whitespace: {surface:?}"
        );
        Token {
            surface,
            tag: None,
            lemma: None,
        }
    }

    pub fn tagged(surface: impl Into<String>, tag: impl Into<String>) -> Self {
        let mut t = Token::new(surface);
        t.tag = Some(tag.into());
        t
    }

    pub fn tag_str(&self) -> &str {
        self.tag.as_deref().unwrap_or("")
    }

    pub fn lower(&self) -> String {
        self.surface.to_lowercase()
    }
}

/// A tokenized sentence together with the source text it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    pub original_text: String,
}

impl Sentence {
    pub fn text(&self) -> String {
        detokenize(&self.tokens)
    }

    /// Tokenizes a single line of text as one sentence (no boundary scan).
    pub fn from_line(line: &str) -> Sentence {
        let line = line.trim();
        Sentence {
            tokens: tokenize_words(line),
            original_text: line.to_string(),
        }
    }
}

/// A document: an ordered list of sentences plus optional class label.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub id: String,
    pub label: Option<String>,
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn text(&self) -> String {
        self.sentences
            .iter()
            .map(Sentence::text)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Which pipeline stage produced a trace entry.
pub const STAGE_GRAMMAR: &str = "grammar";
pub const STAGE_SIMPLE: &str = "simple";
pub const STAGE_PPDB: &str = "ppdb";
pub const STAGE_WORDNET: &str = "wordnet";
pub const STAGE_TYPOS: &str = "typos";

/// One applied transformation: the stage, the token span it covered at the
/// time of application, and the rule identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub stage: &'static str,
    pub span: (usize, usize),
    pub rule: String,
}

/// A paraphrase candidate for one sentence.
///
/// `edit_distance` is the character edit distance between the candidate's
/// detokenized text and the sentence's `original_text`. The trace is empty
/// exactly when the tokens equal the original sentence's tokens.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSentence {
    pub tokens: Vec<Token>,
    pub trace: Vec<TraceEntry>,
    pub edit_distance: usize,
}

impl CandidateSentence {
    pub fn original(sentence: &Sentence) -> CandidateSentence {
        CandidateSentence {
            tokens: sentence.tokens.clone(),
            trace: Vec::new(),
            edit_distance: edit_distance(&detokenize(&sentence.tokens), &sentence.original_text),
        }
    }

    pub fn text(&self) -> String {
        detokenize(&self.tokens)
    }

    /// Key used for deduplication: the exact surface sequence.
    pub fn surface_key(&self) -> String {
        let mut key = String::new();
        for t in &self.tokens {
            key.push_str(&t.surface);
            key.push('\u{1e}');
        }
        key
    }
}

const CLITICS: [&str; 6] = ["'m", "'re", "'ve", "'s", "'ll", "'d"];
const LEADING_PUNCT: [char; 6] = ['(', '[', '{', '"', '\'', '`'];
const TRAILING_PUNCT: [char; 11] = ['.', ',', '!', '?', ';', ':', '\'', '"', ')', ']', '}'];

/// Whether a token is a clitic the tokenizer splits off its host word.
pub(crate) fn is_clitic(s: &str) -> bool {
    let lower = s.to_lowercase();
    lower == "n't" || CLITICS.contains(&lower.as_str())
}

fn starts_with_clitic(s: &str) -> bool {
    let lower = s.to_lowercase();
    CLITICS.iter().any(|c| lower.starts_with(c))
}

/// Splits `text` into sentences and tokenizes each. A sentence boundary is a
/// run of `. ! ?` followed by whitespace and an uppercase letter, or the end
/// of input. Deliberately simple: corpora in this toolkit are line-oriented,
/// so abbreviation handling is not attempted.
pub fn tokenize(text: &str) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    for piece in split_sentence_spans(text) {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let tokens = tokenize_words(piece);
        if tokens.is_empty() {
            continue;
        }
        sentences.push(Sentence {
            tokens,
            original_text: piece.to_string(),
        });
    }
    sentences
}

fn split_sentence_spans(text: &str) -> Vec<&str> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut spans = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;
    while i < chars.len() {
        let (_, c) = chars[i];
        if matches!(c, '.' | '!' | '?') {
            // Consume the whole terminal run (handles "..." and "?!").
            let mut j = i + 1;
            while j < chars.len() && matches!(chars[j].1, '.' | '!' | '?') {
                j += 1;
            }
            let mut k = j;
            while k < chars.len() && chars[k].1.is_whitespace() {
                k += 1;
            }
            let at_end = k == chars.len();
            let next_upper = !at_end && chars[k].1.is_uppercase();
            if k > j && (at_end || next_upper) {
                let end = chars[j - 1].0 + chars[j - 1].1.len_utf8();
                spans.push(&text[start..end]);
                start = chars[k.min(chars.len() - 1)].0;
                if at_end {
                    start = text.len();
                }
            }
            i = j;
        } else {
            i += 1;
        }
    }
    if start < text.len() {
        spans.push(&text[start..]);
    }
    spans
}

/// Tokenizes one already-delimited sentence.
pub fn tokenize_words(s: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for chunk in s.split_whitespace() {
        push_chunk(chunk, &mut out);
    }
    out
}

fn push_chunk(chunk: &str, out: &mut Vec<Token>) {
    // Split trailing punctuation and clitics off the right edge, interleaved,
    // so "the,'re" comes apart as [the][,]['re]. The trailing 't' of "n't" is
    // not punctuation, so clitics survive the punctuation check and hit the
    // clitic check instead.
    let mut core = chunk.to_string();
    let mut rights: Vec<String> = Vec::new();
    loop {
        if core.chars().count() > 1 {
            let last = core.chars().last().unwrap();
            if TRAILING_PUNCT.contains(&last) {
                core.pop();
                rights.push(last.to_string());
                continue;
            }
        }
        match clitic_suffix_at(&core) {
            Some(at) => {
                rights.push(core[at..].to_string());
                core.truncate(at);
            }
            None => break,
        }
    }

    // Leading punctuation, except when the apostrophe opens a clitic
    // (a pre-tokenized "'re" or a glued "'d've" must stay intact).
    while core.chars().count() > 1 {
        let first = core.chars().next().unwrap();
        if LEADING_PUNCT.contains(&first) && !(first == '\'' && starts_with_clitic(&core)) {
            core.remove(0);
            out.push(Token::new(first.to_string()));
        } else {
            break;
        }
    }

    if !core.is_empty() {
        out.push(Token::new(core));
    }
    for part in rights.into_iter().rev() {
        out.push(Token::new(part));
    }
}

/// Byte offset where a clitic suffix of `word` starts, if splitting it off
/// would leave a non-empty head.
fn clitic_suffix_at(word: &str) -> Option<usize> {
    let lower = word.to_lowercase();
    if lower.ends_with("n't") && word.chars().count() > 3 {
        return Some(word.len() - "n't".len());
    }
    for clitic in CLITICS {
        if lower.ends_with(clitic) && word.len() > clitic.len() {
            return Some(word.len() - clitic.len());
        }
    }
    None
}

/// Joins tokens with single spaces, attaching sentence punctuation and
/// clitics to the previous token.
pub fn detokenize(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 && !attaches_left(&t.surface) {
            out.push(' ');
        }
        out.push_str(&t.surface);
    }
    out
}

fn attaches_left(surface: &str) -> bool {
    surface.starts_with('\'')
        || surface.eq_ignore_ascii_case("n't")
        || matches!(surface, "." | "," | "!" | "?" | ";" | ":")
}

/// Levenshtein distance over Unicode scalar values, unit costs.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0usize; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}
