//! WordNet synonym substitution.
//!
//! Synsets are consumed from a canonical TSV export
//! (`synset_id<TAB>pos<TAB>comma-separated-lemmas<TAB>gloss`). A content
//! token is disambiguated with the simple Lesk algorithm (gloss/sentence
//! content-word overlap), and each synonym lemma of the chosen sense is
//! re-inflected to the token's tag through the corpus-derived
//! [`InflectionTable`]; synonyms whose inflection is unknown are skipped
//! rather than guessed.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lingua::inflect::InflectionTable;
use crate::lingua::lemma::lemmatize;
use crate::rules::RuleSite;
use crate::text::{Sentence, Token};

/// One word sense: a set of interchangeable lemmas plus a defining gloss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Synset {
    pub id: String,
    /// WordNet part of speech: one of `n`, `v`, `a`, `r`.
    pub pos: String,
    pub lemmas: Vec<String>,
    pub gloss: String,
}

/// A loaded synset collection with a (lemma, pos) lookup index.
#[derive(Debug, Clone, Default)]
pub struct WordNet {
    /// Lexicon order (sense-frequency order in real exports); Lesk ties are
    /// broken by position in this list.
    synsets: Vec<Synset>,
    duplicate_warnings: usize,
}

impl WordNet {
    /// Synsets containing `lemma` with part of speech `pos`, in lexicon
    /// order.
    pub fn lookup(&self, lemma: &str, pos: &str) -> Vec<&Synset> {
        self.synsets
            .iter()
            .filter(|s| s.pos == pos && s.lemmas.iter().any(|l| l == lemma))
            .collect()
    }

    /// All synsets in lexicon order.
    pub fn synsets(&self) -> &[Synset] {
        &self.synsets
    }

    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }

    /// Number of duplicate-id lines that were replaced during loading.
    pub fn duplicate_warnings(&self) -> usize {
        self.duplicate_warnings
    }
}

/// Loads a WordNet TSV export from `path`.
pub fn load_wordnet(path: &Path) -> Result<WordNet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_wordnet(path, &text)
}

/// Parses the canonical synset TSV. Any malformed line is a format error
/// with its line number; a duplicate synset id drops the earlier entry
/// (later line wins) and counts a warning. `path` is for error reporting.
pub fn parse_wordnet(path: &Path, text: &str) -> Result<WordNet> {
    let mut wn = WordNet::default();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [id, pos, lemmas, gloss] = fields.as_slice() else {
            return Err(Error::format(path, lineno, "expected 4 tab-separated fields"));
        };
        if !matches!(*pos, "n" | "v" | "a" | "r") {
            return Err(Error::format(path, lineno, format!("bad pos {pos:?}")));
        }
        let lemmas: Vec<String> = lemmas
            .split(',')
            .map(|l| l.trim().to_lowercase())
            .filter(|l| !l.is_empty())
            .collect();
        if lemmas.is_empty() {
            return Err(Error::format(path, lineno, "synset has no lemmas"));
        }
        if gloss.trim().is_empty() {
            return Err(Error::format(path, lineno, "synset has no gloss"));
        }
        let synset = Synset {
            id: id.to_string(),
            pos: pos.to_string(),
            lemmas,
            gloss: gloss.to_string(),
        };
        if let Some(old) = wn.synsets.iter().position(|s| s.id == synset.id) {
            wn.synsets.remove(old);
            wn.duplicate_warnings += 1;
        }
        wn.synsets.push(synset);
    }
    if wn.synsets.is_empty() {
        return Err(Error::resource(format!(
            "no synsets in {}",
            path.display()
        )));
    }
    Ok(wn)
}

/// Penn tag → WordNet part of speech (`None` for closed classes).
pub fn wordnet_pos(tag: &str) -> Option<&'static str> {
    if tag.starts_with("NN") {
        Some("n")
    } else if tag.starts_with("VB") {
        Some("v")
    } else if tag.starts_with("JJ") {
        Some("a")
    } else if tag.starts_with("RB") {
        Some("r")
    } else {
        None
    }
}

/// Function words excluded from Lesk overlap counting.
const STOPWORDS: &[&str] = &[
    "a", "an", "the", "of", "in", "on", "at", "to", "for", "with", "by", "from", "and", "or",
    "but", "is", "are", "was", "were", "be", "been", "being", "am", "that", "this", "these",
    "those", "it", "its", "as", "his", "her", "their", "our", "my", "your", "i", "you", "he",
    "she", "we", "they", "not", "no", "do", "does", "did", "have", "has", "had", "will", "would",
    "can", "could", "who", "which", "what", "when", "where", "how", "than", "then", "there", "s",
];

fn is_content_word(word: &str) -> bool {
    word.chars().any(char::is_alphanumeric) && !STOPWORDS.contains(&word)
}

fn gloss_content_words(gloss: &str) -> BTreeSet<String> {
    gloss
        .split_whitespace()
        .map(str::to_lowercase)
        .filter(|w| is_content_word(w))
        .collect()
}

/// Simple Lesk: returns the synset whose gloss shares the most content
/// words with the sentence (the target token itself excluded). Ties go to
/// the earliest synset in the given order, which is lexicon order when the
/// caller passes a [`WordNet::lookup`] result.
pub fn lesk_disambiguate<'a>(
    token: &Token,
    sentence: &Sentence,
    synsets: &[&'a Synset],
) -> &'a Synset {
    assert!(!synsets.is_empty(), "lesk needs at least one candidate");
    let target = token.lower();
    let context: BTreeSet<String> = sentence
        .tokens
        .iter()
        .map(Token::lower)
        .filter(|w| *w != target && is_content_word(w))
        .collect();
    let mut best = synsets[0];
    let mut best_overlap = 0usize;
    for synset in synsets {
        let overlap = gloss_content_words(&synset.gloss)
            .intersection(&context)
            .count();
        if overlap > best_overlap {
            best = synset;
            best_overlap = overlap;
        }
    }
    best
}

/// Finds WordNet synonym substitution sites in a tagged sentence: one site
/// per content token with at least one usable synonym. Synonyms are
/// re-inflected to the token's tag; a synonym without a known inflection is
/// skipped, and the original word is never offered as its own alternative.
pub fn wordnet_sites(
    sentence: &Sentence,
    wordnet: &WordNet,
    inflections: &InflectionTable,
) -> Vec<RuleSite> {
    let mut sites = Vec::new();
    for (i, token) in sentence.tokens.iter().enumerate() {
        let tag = token.tag_str().to_string();
        let Some(pos) = wordnet_pos(&tag) else {
            continue;
        };
        let lemma = lemmatize(&token.surface, &tag);
        let candidates = wordnet.lookup(&lemma, pos);
        if candidates.is_empty() {
            continue;
        }
        let sense = lesk_disambiguate(token, sentence, &candidates);
        let mut alternatives: Vec<Vec<String>> = Vec::new();
        for synonym in &sense.lemmas {
            if *synonym == lemma {
                continue;
            }
            let Some(inflected) = inflections.inflect(synonym, &tag) else {
                continue;
            };
            if inflected.eq_ignore_ascii_case(&token.surface) {
                continue;
            }
            let mut word = inflected.to_string();
            if i == 0 && token.surface.chars().next().is_some_and(char::is_uppercase) {
                let mut chars = word.chars();
                if let Some(c) = chars.next() {
                    word = c.to_uppercase().collect::<String>() + chars.as_str();
                }
            }
            alternatives.push(vec![word]);
        }
        sites.extend(RuleSite::new(
            (i, i + 1),
            vec![token.surface.clone()],
            alternatives,
            "wordnet",
        ));
    }
    sites
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::shared_inflection;

    const FIXTURE: &str = "\
see.v.01\tv\tsee,watch\tperceive or observe by sight
huge.a.01\ta\thuge,tremendous\tbig beyond measure in size or extent
bank.n.01\tn\tbank,depository\tfinancial institution that accepts money deposits
bank.n.02\tn\tbank\tsloping land beside a body of water such as a river
dog.n.01\tn\tdog,hound\ta domestic animal kept as a pet that barks
";

    fn wn() -> WordNet {
        parse_wordnet(Path::new("test.wn"), FIXTURE).unwrap()
    }

    fn tagged_sentence(pairs: &[(&str, &str)]) -> Sentence {
        let text = pairs.iter().map(|(w, _)| *w).collect::<Vec<_>>().join(" ");
        let mut s = Sentence::from_line(&text);
        assert_eq!(s.tokens.len(), pairs.len(), "tokenizer split mismatch");
        for (token, (_, tag)) in s.tokens.iter_mut().zip(pairs) {
            *token = Token::tagged(token.surface.clone(), *tag);
        }
        s
    }

    #[test]
    fn loads_and_indexes_synsets() {
        let wn = wn();
        assert_eq!(wn.len(), 5);
        assert_eq!(wn.duplicate_warnings(), 0);
        let banks = wn.lookup("bank", "n");
        assert_eq!(banks.len(), 2);
        assert_eq!(banks[0].id, "bank.n.01");
        assert!(wn.lookup("bank", "v").is_empty());
        assert_eq!(wn.lookup("watch", "v").len(), 1);
    }

    #[test]
    fn duplicate_ids_keep_the_later_line() {
        let wn = parse_wordnet(
            Path::new("dup.wn"),
            "x.n.01\tn\tcat\tfirst gloss\nx.n.01\tn\tfeline\tsecond gloss\n",
        )
        .unwrap();
        assert_eq!(wn.len(), 1);
        assert_eq!(wn.duplicate_warnings(), 1);
        assert!(wn.lookup("cat", "n").is_empty());
        assert_eq!(wn.lookup("feline", "n")[0].gloss, "second gloss");
    }

    #[test]
    fn schema_violations_are_format_errors() {
        for bad in [
            "x.n.01\tn\tcat",                     // missing gloss column
            "x.n.01\tq\tcat\tgloss",              // bad pos
            "x.n.01\tn\t\tgloss",                 // no lemmas
            "x.n.01\tn\tcat\t ",                  // blank gloss
            "just one field",                     // not TSV at all
        ] {
            let err = parse_wordnet(Path::new("bad.wn"), bad).unwrap_err();
            assert!(matches!(err, Error::Format { .. }), "accepted {bad:?}");
        }
        let err = parse_wordnet(Path::new("empty.wn"), "\n\n").unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn lesk_prefers_the_overlapping_gloss() {
        let wn = wn();
        let s = tagged_sentence(&[
            ("they", "PRP"),
            ("deposited", "VBD"),
            ("money", "NN"),
            ("at", "IN"),
            ("the", "DT"),
            ("bank", "NN"),
            (".", "."),
        ]);
        let candidates = wn.lookup("bank", "n");
        // Hand oracle: gloss 1 shares "money" with the context (1 overlap),
        // gloss 2 shares nothing (0).
        let sense = lesk_disambiguate(&s.tokens[5], &s, &candidates);
        assert_eq!(sense.id, "bank.n.01");

        // River context flips the decision.
        let s = tagged_sentence(&[
            ("the", "DT"),
            ("river", "NN"),
            ("bank", "NN"),
            (".", "."),
        ]);
        let sense = lesk_disambiguate(&s.tokens[2], &s, &wn.lookup("bank", "n"));
        assert_eq!(sense.id, "bank.n.02");
    }

    #[test]
    fn lesk_ties_take_lexicon_order_and_singletons_pass_through() {
        let wn = wn();
        // No context overlap at all: first synset in lexicon order.
        let s = tagged_sentence(&[("a", "DT"), ("bank", "NN"), (".", ".")]);
        let sense = lesk_disambiguate(&s.tokens[1], &s, &wn.lookup("bank", "n"));
        assert_eq!(sense.id, "bank.n.01");

        let only = wn.lookup("dog", "n");
        let sense = lesk_disambiguate(&s.tokens[1], &s, &only);
        assert_eq!(sense.id, "dog.n.01");
    }

    #[test]
    fn synonyms_are_inflected_to_the_token_tag() {
        let wn = wn();
        let table = shared_inflection();
        // "saw" (VBD) → lemma "see" → synonym "watch" → inflected "watched".
        let s = tagged_sentence(&[
            ("he", "PRP"),
            ("saw", "VBD"),
            ("a", "DT"),
            ("bird", "NN"),
            (".", "."),
        ]);
        let sites = wordnet_sites(&s, &wn, table);
        let site = sites.iter().find(|x| x.span == (1, 2)).unwrap();
        assert_eq!(site.options[1], vec!["watched".to_string()]);
        assert_eq!(site.rule, "wordnet");

        // Same lemma in third person: "sees" → "watches".
        let s = tagged_sentence(&[
            ("he", "PRP"),
            ("sees", "VBZ"),
            ("a", "DT"),
            ("bird", "NN"),
            (".", "."),
        ]);
        let sites = wordnet_sites(&s, &wn, table);
        let site = sites.iter().find(|x| x.span == (1, 2)).unwrap();
        assert_eq!(site.options[1], vec!["watches".to_string()]);
    }

    #[test]
    fn adjective_synonyms_follow_the_paper_example() {
        let wn = wn();
        let table = shared_inflection();
        let s = tagged_sentence(&[
            ("the", "DT"),
            ("supper", "NN"),
            ("shares", "NNS"),
            ("are", "VBP"),
            ("huge", "JJ"),
            (".", "."),
        ]);
        let sites = wordnet_sites(&s, &wn, table);
        let site = sites.iter().find(|x| x.span == (4, 5)).unwrap();
        assert_eq!(site.options[1], vec!["tremendous".to_string()]);
    }

    #[test]
    fn unknown_inflections_and_closed_classes_are_skipped() {
        let wn = wn();
        let table = shared_inflection();
        // "hound" never occurs in the build corpus, so the dog synonym is
        // dropped and no site remains for "dog".
        let s = tagged_sentence(&[("the", "DT"), ("dog", "NN"), ("walked", "VBD"), (".", ".")]);
        let sites = wordnet_sites(&s, &wn, table);
        assert!(sites.iter().all(|x| x.span != (1, 2)));
        // And no site ever covers the determiner or the period.
        assert!(sites.iter().all(|x| x.span != (0, 1) && x.span != (3, 4)));
    }

    #[test]
    fn never_offers_the_original_word_and_preserves_capitals() {
        let wn = parse_wordnet(
            Path::new("t.wn"),
            "dog.n.01\tn\tdog,cat\ta quadruped companion\n",
        )
        .unwrap();
        let table = shared_inflection();
        let s = tagged_sentence(&[("Dogs", "NNS"), ("walked", "VBD"), (".", ".")]);
        let sites = wordnet_sites(&s, &wn, table);
        let site = sites.iter().find(|x| x.span == (0, 1)).unwrap();
        assert_eq!(site.options[0], vec!["Dogs".to_string()]);
        assert_eq!(site.options[1], vec!["Cats".to_string()]);
        for opt in &site.options[1..] {
            assert!(!opt[0].eq_ignore_ascii_case("dogs"));
        }
    }
}
