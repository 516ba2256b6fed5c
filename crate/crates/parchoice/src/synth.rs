//! Seeded synthetic corpora and lexicon fixtures for experiments and tests.
//!
//! Everything here is deterministic in its seed: a POS-tagged training
//! corpus over a closed vocabulary, two styled sentence classes whose marker
//! words the substitution lexicons cover, a multi-author document corpus
//! whose authors differ in their sentence-initial discourse adverbs, and
//! fixture texts for every resource kind. The evaluation harness and the
//! integration tests build their worlds from these pieces.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lingua::inflect::InflectionTable;
use crate::lingua::tagger::{train_tagger, TaggedSentence, DEFAULT_ITERATIONS};
use crate::resources::ResourceBundle;
use crate::text::{Document, Sentence};
use crate::typos::{SpellLexicon, TypoLexicon};

const DETS: &[&str] = &["the", "a", "every", "some", "this"];
const POSS: &[&str] = &["my", "your", "his", "our", "their"];
const ADJS: &[&str] = &[
    "big", "old", "small", "quick", "bright", "quiet", "strange", "tremendous", "happy", "cold",
    "light", "great", "tired", "huge",
];
const NOUNS: &[&str] = &[
    "dog", "cat", "house", "tree", "car", "bird", "river", "stone", "garden", "meal", "supper",
    "light", "run", "walk", "watch", "share", "key", "book", "road", "door", "market", "letter",
    "dinner",
];
const PLURALS: &[&str] = &[
    "dogs", "cats", "houses", "trees", "cars", "birds", "rivers", "stones", "gardens", "meals",
    "keys", "books", "roads", "doors", "shares", "letters",
];
const PROPER: &[&str] = &["John", "Mary", "Alice", "Bob", "London", "Paris"];
const PRONOUNS: &[&str] = &["i", "you", "he", "she", "we", "they", "it"];
const OBJ_PRONOUNS: &[&str] = &["me", "him", "her", "us", "them", "it"];
const VBZ: &[&str] = &[
    "sees", "likes", "watches", "finds", "makes", "takes", "shares", "keeps", "holds", "walks",
    "runs",
];
const VBD: &[&str] = &[
    "saw", "liked", "watched", "found", "made", "took", "kept", "held", "walked", "shared",
    "ran", "wrote",
];
const VBP: &[&str] = &[
    "see", "like", "watch", "find", "make", "take", "run", "walk", "keep", "hold", "share",
];
const VBN: &[&str] = &[
    "seen", "liked", "watched", "found", "made", "taken", "kept", "held", "shared", "written",
];
const VBG: &[&str] = &[
    "making", "taking", "walking", "running", "watching", "sharing", "holding", "keeping",
    "seeing", "writing",
];
const MODALS: &[&str] = &["can", "will", "must", "may", "could", "should", "might", "shall"];
const PREPS: &[&str] = &["in", "on", "near", "over", "under", "with"];
const ADVERBS: &[&str] = &["quickly", "quietly", "often", "never", "here"];
const CONJS: &[&str] = &["and", "but", "or"];

/// Sentence-initial discourse adverbs, one per synthetic author. The PPDB
/// fixture maps each to two others, so a document's give-away habit can be
/// paraphrased away.
pub const DISCOURSE: &[&str] = &[
    "well", "so", "now", "then", "indeed", "still", "yet", "also", "thus", "hence",
];

/// Discourse adverbs the styled classes lean on. Deliberately absent from
/// the substitution fixtures: a transformed sentence keeps them.
const RESIDUES: &[&str] = &["frankly", "honestly"];

/// Every adverb the sentence-initial template draws from.
const SENTENCE_ADVERBS: &[&str] = &[
    "well", "so", "now", "then", "indeed", "still", "yet", "also", "thus", "hence", "frankly",
    "honestly",
];

fn pick<'a>(rng: &mut ChaCha8Rng, pool: &[&'a str]) -> &'a str {
    pool[rng.gen_range(0..pool.len())]
}

fn pick_pair<'a>(rng: &mut ChaCha8Rng, pool: &'a [(&'a str, &'a str)]) -> &'a (&'a str, &'a str) {
    &pool[rng.gen_range(0..pool.len())]
}

fn capitalize(text: &str) -> String {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

/// Deterministic synthetic tagged corpus: template sentences over the closed
/// vocabulary with natural POS ambiguities (run, watch, shares, light, …).
pub fn tagged_corpus(n_sentences: usize, seed: u64) -> Vec<TaggedSentence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_sentences).map(|_| synthetic_sentence(&mut rng)).collect()
}

fn synthetic_sentence(rng: &mut ChaCha8Rng) -> TaggedSentence {
    let mut s: Vec<(String, String)> = Vec::new();
    fn push(s: &mut Vec<(String, String)>, word: &str, tag: &str) {
        s.push((word.to_string(), tag.to_string()));
    }
    fn simple_np(s: &mut Vec<(String, String)>, rng: &mut ChaCha8Rng) {
        if rng.gen_bool(0.25) {
            push(s, pick(rng, POSS), "PRP$");
        } else {
            push(s, pick(rng, DETS), "DT");
        }
        if rng.gen_bool(0.4) {
            push(s, pick(rng, ADJS), "JJ");
        }
        push(s, pick(rng, NOUNS), "NN");
    }
    // Object position: singular NP, plural NP, or an object pronoun.
    fn np_object(s: &mut Vec<(String, String)>, rng: &mut ChaCha8Rng) {
        let r: f64 = rng.gen();
        if r < 0.15 {
            push(s, pick(rng, OBJ_PRONOUNS), "PRP");
        } else if r < 0.40 {
            push(s, pick(rng, DETS), "DT");
            if rng.gen_bool(0.3) {
                push(s, pick(rng, ADJS), "JJ");
            }
            push(s, pick(rng, PLURALS), "NNS");
        } else {
            simple_np(s, rng);
        }
    }
    match rng.gen_range(0..16u32) {
        0 => {
            // "The big dog sees a cat ." / "she sees the cats ."
            if rng.gen_bool(0.3) {
                push(&mut s, pick(rng, PRONOUNS), "PRP");
            } else {
                simple_np(&mut s, rng);
            }
            push(&mut s, pick(rng, VBZ), "VBZ");
            np_object(&mut s, rng);
            push(&mut s, ".", ".");
        }
        1 => {
            // "John saw a bird ."
            push(&mut s, pick(rng, PROPER), "NNP");
            push(&mut s, pick(rng, VBD), "VBD");
            np_object(&mut s, rng);
            push(&mut s, ".", ".");
        }
        2 => {
            // "Mary was seen by John ."
            push(&mut s, pick(rng, PROPER), "NNP");
            push(&mut s, "was", "VBD");
            push(&mut s, pick(rng, VBN), "VBN");
            push(&mut s, "by", "IN");
            push(&mut s, pick(rng, PROPER), "NNP");
            push(&mut s, ".", ".");
        }
        3 => {
            // "they watch a bird in the house ."
            push(&mut s, pick(rng, PRONOUNS), "PRP");
            push(&mut s, pick(rng, VBP), "VBP");
            np_object(&mut s, rng);
            push(&mut s, pick(rng, PREPS), "IN");
            simple_np(&mut s, rng);
            push(&mut s, ".", ".");
        }
        4 => {
            // "the dogs run quickly ."
            push(&mut s, pick(rng, DETS), "DT");
            push(&mut s, pick(rng, PLURALS), "NNS");
            push(&mut s, pick(rng, VBP), "VBP");
            push(&mut s, pick(rng, ADVERBS), "RB");
            push(&mut s, ".", ".");
        }
        5 => {
            // "you can find the old key ." / "you ought to find the old key ."
            push(&mut s, pick(rng, PRONOUNS), "PRP");
            if rng.gen_bool(0.15) {
                push(&mut s, "ought", "MD");
                push(&mut s, "to", "TO");
            } else {
                push(&mut s, pick(rng, MODALS), "MD");
            }
            push(&mut s, pick(rng, VBP), "VB");
            np_object(&mut s, rng);
            push(&mut s, ".", ".");
        }
        6 => {
            // Negated clauses: do-support, negated modals (with the ca/wo
            // stems the tokenizer produces for can't/won't), negated be.
            push(&mut s, pick(rng, PRONOUNS), "PRP");
            match rng.gen_range(0..4u32) {
                0 => {
                    let (aux, tag) =
                        *pick_pair(rng, &[("did", "VBD"), ("does", "VBZ"), ("do", "VBP")]);
                    push(&mut s, aux, tag);
                    push(&mut s, if rng.gen_bool(0.5) { "not" } else { "n't" }, "RB");
                    push(&mut s, pick(rng, VBP), "VB");
                    np_object(&mut s, rng);
                }
                1 => {
                    push(&mut s, if rng.gen_bool(0.5) { "ca" } else { "wo" }, "MD");
                    push(&mut s, "n't", "RB");
                    push(&mut s, pick(rng, VBP), "VB");
                    np_object(&mut s, rng);
                }
                2 => {
                    push(&mut s, pick(rng, MODALS), "MD");
                    push(&mut s, "not", "RB");
                    push(&mut s, pick(rng, VBP), "VB");
                    np_object(&mut s, rng);
                }
                _ => {
                    let (aux, tag) = *pick_pair(
                        rng,
                        &[("is", "VBZ"), ("was", "VBD"), ("are", "VBP"), ("were", "VBD")],
                    );
                    push(&mut s, aux, tag);
                    push(&mut s, if rng.gen_bool(0.5) { "not" } else { "n't" }, "RB");
                    push(&mut s, pick(rng, ADJS), "JJ");
                }
            }
            push(&mut s, ".", ".");
        }
        7 => {
            // "Can you find the key ?" / "Did you find the key ?"
            if rng.gen_bool(0.5) {
                push(&mut s, pick(rng, MODALS), "MD");
            } else {
                let (aux, tag) =
                    *pick_pair(rng, &[("did", "VBD"), ("does", "VBZ"), ("do", "VBP")]);
                push(&mut s, aux, tag);
            }
            push(&mut s, pick(rng, PRONOUNS), "PRP");
            push(&mut s, pick(rng, VBP), "VB");
            np_object(&mut s, rng);
            push(&mut s, "?", ".");
        }
        8 => {
            // "the supper was tremendous ." / "it is huge ."
            if rng.gen_bool(0.3) {
                push(&mut s, pick(rng, PRONOUNS), "PRP");
            } else {
                simple_np(&mut s, rng);
            }
            if rng.gen_bool(0.5) {
                push(&mut s, "is", "VBZ");
            } else {
                push(&mut s, "was", "VBD");
            }
            push(&mut s, pick(rng, ADJS), "JJ");
            push(&mut s, ".", ".");
        }
        9 => {
            // "we 're happy ." / "i 'm tired ." / "they 've shared a meal ."
            match rng.gen_range(0..3u32) {
                0 => {
                    push(&mut s, pick(rng, &["we", "you", "they"]), "PRP");
                    push(&mut s, "'re", "VBP");
                    push(&mut s, pick(rng, ADJS), "JJ");
                }
                1 => {
                    push(&mut s, "i", "PRP");
                    push(&mut s, "'m", "VBP");
                    push(&mut s, pick(rng, ADJS), "JJ");
                }
                _ => {
                    push(&mut s, pick(rng, &["we", "you", "they"]), "PRP");
                    push(&mut s, "'ve", "VBP");
                    push(&mut s, pick(rng, VBN), "VBN");
                    simple_np(&mut s, rng);
                }
            }
            push(&mut s, ".", ".");
        }
        10 => {
            // "the supper shares are tremendous ."
            push(&mut s, pick(rng, DETS), "DT");
            push(&mut s, pick(rng, NOUNS), "NN");
            push(&mut s, pick(rng, PLURALS), "NNS");
            push(&mut s, "are", "VBP");
            push(&mut s, pick(rng, ADJS), "JJ");
            push(&mut s, ".", ".");
        }
        11 => {
            // "the dog ran quickly , and the cat walked quietly ."
            push(&mut s, pick(rng, DETS), "DT");
            push(&mut s, pick(rng, NOUNS), "NN");
            push(&mut s, pick(rng, VBD), "VBD");
            push(&mut s, pick(rng, ADVERBS), "RB");
            push(&mut s, ",", ",");
            push(&mut s, pick(rng, CONJS), "CC");
            push(&mut s, pick(rng, DETS), "DT");
            push(&mut s, pick(rng, NOUNS), "NN");
            push(&mut s, pick(rng, VBD), "VBD");
            push(&mut s, pick(rng, ADVERBS), "RB");
            push(&mut s, ".", ".");
        }
        12 => {
            // "she is making a meal ." / "the dogs are running here ."
            if rng.gen_bool(0.5) {
                push(&mut s, pick(rng, PRONOUNS), "PRP");
                push(&mut s, "is", "VBZ");
                push(&mut s, pick(rng, VBG), "VBG");
                simple_np(&mut s, rng);
            } else {
                push(&mut s, pick(rng, DETS), "DT");
                push(&mut s, pick(rng, PLURALS), "NNS");
                push(&mut s, "are", "VBP");
                push(&mut s, pick(rng, VBG), "VBG");
                push(&mut s, pick(rng, ADVERBS), "RB");
            }
            push(&mut s, ".", ".");
        }
        13 => {
            // "they like to walk the dog ."
            push(&mut s, pick(rng, PRONOUNS), "PRP");
            push(&mut s, pick(rng, VBP), "VBP");
            push(&mut s, "to", "TO");
            push(&mut s, pick(rng, VBP), "VB");
            np_object(&mut s, rng);
            push(&mut s, ".", ".");
        }
        14 => {
            // "Well , the dog walked here ." / "Frankly , they found a key ."
            push(&mut s, pick(rng, SENTENCE_ADVERBS), "RB");
            push(&mut s, ",", ",");
            if rng.gen_bool(0.5) {
                simple_np(&mut s, rng);
                push(&mut s, pick(rng, VBD), "VBD");
                push(&mut s, pick(rng, ADVERBS), "RB");
            } else {
                push(&mut s, pick(rng, PRONOUNS), "PRP");
                push(&mut s, pick(rng, VBD), "VBD");
                np_object(&mut s, rng);
            }
            push(&mut s, ".", ".");
        }
        _ => {
            // Past transitive with plural or pronoun subject:
            // "the dogs saw the cat ." / "they saw me ."
            if rng.gen_bool(0.5) {
                push(&mut s, pick(rng, DETS), "DT");
                push(&mut s, pick(rng, PLURALS), "NNS");
            } else {
                push(&mut s, pick(rng, PRONOUNS), "PRP");
            }
            push(&mut s, pick(rng, VBD), "VBD");
            np_object(&mut s, rng);
            push(&mut s, ".", ".");
        }
    }
    // Sentence-initial capitalization, as in natural text.
    if let Some((first, _)) = s.first_mut() {
        *first = capitalize(first);
    }
    s
}

/// Every word of the closed vocabulary, pool by pool (duplicates possible).
pub fn vocabulary() -> Vec<&'static str> {
    let pools: &[&[&str]] = &[
        DETS, POSS, ADJS, NOUNS, PLURALS, PROPER, PRONOUNS, OBJ_PRONOUNS, VBZ, VBD, VBP, VBN,
        VBG, MODALS, PREPS, ADVERBS, CONJS, SENTENCE_ADVERBS,
    ];
    pools.iter().flat_map(|p| p.iter().copied()).collect()
}

/// PPDB fixture over the synthetic vocabulary: noun paraphrases both ways
/// between the styled classes, one plural pair, one phrase pair with a
/// clause-context filter, and a ring over the discourse adverbs so each maps
/// to two others.
pub fn fixture_ppdb() -> String {
    let mut out = String::from(
        "[NN] ||| meal ||| supper ||| 1.0 ||| 0-0 ||| Equivalence\n\
         [NN] ||| dinner ||| supper ||| 1.0 ||| 0-0 ||| Equivalence\n\
         [NN] ||| supper ||| dinner ||| 1.0 ||| 0-0 ||| Equivalence\n\
         [NNS] ||| portions ||| shares ||| 1.0 ||| 0-0 ||| Equivalence\n\
         [S/S] ||| i am sorry ||| i regret ||| 1.0 ||| 0-0 ||| Equivalence\n",
    );
    let n = DISCOURSE.len();
    for (i, word) in DISCOURSE.iter().enumerate() {
        for step in [1, 2] {
            let to = DISCOURSE[(i + step) % n];
            out.push_str(&format!(
                "[RB] ||| {word} ||| {to} ||| 1.0 ||| 0-0 ||| Equivalence\n"
            ));
        }
    }
    out
}

/// WordNet fixture: adjective, noun and verb synsets over corpus words.
pub const FIXTURE_WORDNET: &str = "\
huge.a.01\ta\thuge, tremendous\tunusually great in size or degree
meal.n.01\tn\tmeal, supper\tfood served and eaten at a sitting
see.v.01\tv\tsee, watch\tperceive by sight
dog.n.01\tn\tdog\ta domesticated canid kept by people
";

/// Words beyond the synthetic corpus that fixtures and paraphrase outputs
/// mention, so original-typo detection never fires on them.
const EXTRA_SPELL_WORDS: &[&str] = &[
    "'d", "'ll", "'m", "'re", "'s", "'ve", "am", "are", "be", "been", "being", "by", "ca",
    "constraint", "do", "does", "did", "friend", "i", "is", "it", "me", "n't", "not", "portions",
    "regret", "restriction", "sorry", "that", "think", "to", "us", "was", "were", "wo", "you",
];

/// The spell lexicon as a resource file: every vocabulary word plus the
/// extras, one `word<TAB>frequency` line each.
pub fn fixture_spell() -> String {
    let mut entries: std::collections::BTreeMap<String, u64> = std::collections::BTreeMap::new();
    for word in vocabulary().iter().chain(EXTRA_SPELL_WORDS) {
        entries.insert(word.to_lowercase(), 100);
    }
    entries.insert("the".to_string(), 1000);
    let mut out = String::new();
    for (word, freq) in &entries {
        out.push_str(&format!("{word}\t{freq}\n"));
    }
    out
}

/// A small hand-built typo lexicon over common misspellings.
pub fn fixture_typos() -> TypoLexicon {
    let mut typos = TypoLexicon::new("fixture");
    for (correct, miss) in [
        ("the", "teh"),
        ("friend", "freind"),
        ("you're", "youre"),
        ("i'm", "im"),
        ("they've", "theyve"),
    ] {
        assert!(typos.insert(correct, miss));
    }
    typos
}

/// A full resource bundle over the synthetic world: tagger and inflection
/// table trained on a fresh seeded corpus, plus the lexicon fixtures.
pub fn fixture_bundle(seed: u64) -> ResourceBundle {
    use std::path::Path;
    let corpus = tagged_corpus(1400, seed);
    ResourceBundle {
        tagger: train_tagger(&corpus, DEFAULT_ITERATIONS).expect("corpus is non-empty"),
        inflections: InflectionTable::build(&corpus).expect("corpus is non-empty"),
        ppdb: crate::substitution::parse_ppdb(Path::new("fixture"), &fixture_ppdb())
            .expect("fixture parses"),
        wordnet: crate::substitution::parse_wordnet(Path::new("fixture"), FIXTURE_WORDNET)
            .expect("fixture parses"),
        spell: SpellLexicon::parse(Path::new("fixture"), &fixture_spell())
            .expect("fixture parses"),
        typos: fixture_typos(),
    }
}

/// The two styled author classes. Both write the same template sentences;
/// they differ in marker nouns and adjectives the substitution lexicons can
/// reach across classes (dinner/meal vs. supper, huge vs. tremendous) and in
/// a residue adverb the lexicons cannot touch (frankly vs. honestly).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StyleClass {
    A,
    B,
}

impl StyleClass {
    pub fn label(self) -> &'static str {
        match self {
            StyleClass::A => "a",
            StyleClass::B => "b",
        }
    }

    pub fn other(self) -> StyleClass {
        match self {
            StyleClass::A => StyleClass::B,
            StyleClass::B => StyleClass::A,
        }
    }

    fn nouns(self) -> &'static [&'static str] {
        match self {
            StyleClass::A => &["dinner", "meal"],
            StyleClass::B => &["supper"],
        }
    }

    fn adjective(self) -> &'static str {
        match self {
            StyleClass::A => "huge",
            StyleClass::B => "tremendous",
        }
    }

    pub fn residue(self) -> &'static str {
        match self {
            StyleClass::A => RESIDUES[0],
            StyleClass::B => RESIDUES[1],
        }
    }
}

const NEUTRAL_ADJS: &[&str] = &["great", "cold", "quiet"];
const NEUTRAL_NOUNS: &[&str] = &["house", "garden", "book"];

/// One styled sentence: a shared template around a class marker, with the
/// class residue adverb prepended half the time.
fn style_sentence(class: StyleClass, rng: &mut ChaCha8Rng) -> String {
    let core = if rng.gen_bool(0.6) {
        let m = pick(rng, class.nouns());
        match rng.gen_range(0..4u32) {
            0 => format!("the {m} was {}.", pick(rng, NEUTRAL_ADJS)),
            1 => format!("my {m} is here."),
            2 => format!("we liked the {m}."),
            _ => format!("they found the {m}."),
        }
    } else {
        let m = class.adjective();
        if rng.gen_bool(0.5) {
            format!("the {} was {m}.", pick(rng, NEUTRAL_NOUNS))
        } else {
            format!("it is {m}.")
        }
    };
    if rng.gen_bool(0.5) {
        capitalize(&format!("{}, {core}", class.residue()))
    } else {
        capitalize(&core)
    }
}

/// A styled sentence corpus for one class, one sentence per line.
pub fn style_corpus(class: StyleClass, n: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| style_sentence(class, &mut rng)).collect()
}

/// The label of synthetic author `index`.
pub fn author_label(index: usize) -> String {
    format!("author{index}")
}

/// One neutral document sentence, shared by all authors.
fn neutral_core(rng: &mut ChaCha8Rng) -> String {
    const DOC_NOUNS: &[&str] = &["dog", "cat", "garden", "road", "door"];
    const DOC_VERBS: &[&str] = &["walked", "ran"];
    const DOC_ADJS: &[&str] = &["quiet", "bright", "old"];
    match rng.gen_range(0..4u32) {
        0 => format!("the {} {} here.", pick(rng, DOC_NOUNS), pick(rng, DOC_VERBS)),
        1 => format!("my {} was {}.", pick(rng, DOC_NOUNS), pick(rng, DOC_ADJS)),
        2 => format!("the {} {} quietly.", pick(rng, DOC_NOUNS), pick(rng, DOC_VERBS)),
        _ => format!("we liked the {}.", pick(rng, DOC_NOUNS)),
    }
}

/// A multi-author document corpus. Author `i` opens roughly 60% of their
/// sentences with `DISCOURSE[i]`; everything else is shared. Documents are
/// labeled with the author and numbered per author.
pub fn author_documents(
    authors: usize,
    docs_per_author: usize,
    sentences_per_doc: usize,
    seed: u64,
) -> Vec<Document> {
    assert!(
        authors <= DISCOURSE.len(),
        "at most {} synthetic authors",
        DISCOURSE.len()
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut docs = Vec::new();
    for author in 0..authors {
        let label = author_label(author);
        for number in 0..docs_per_author {
            let sentences: Vec<Sentence> = (0..sentences_per_doc)
                .map(|_| {
                    let core = neutral_core(&mut rng);
                    let line = if rng.gen_bool(0.6) {
                        capitalize(&format!("{}, {core}", DISCOURSE[author]))
                    } else {
                        capitalize(&core)
                    };
                    Sentence::from_line(&line)
                })
                .collect();
            docs.push(Document {
                id: format!("{label}-{number:02}"),
                label: Some(label.clone()),
                sentences,
            });
        }
    }
    docs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_deterministic_in_the_seed() {
        assert_eq!(tagged_corpus(50, 3), tagged_corpus(50, 3));
        assert_ne!(tagged_corpus(50, 3), tagged_corpus(50, 4));
        let a = style_corpus(StyleClass::A, 40, 9);
        assert_eq!(a, style_corpus(StyleClass::A, 40, 9));
        assert_eq!(
            author_documents(3, 2, 5, 1),
            author_documents(3, 2, 5, 1)
        );
    }

    #[test]
    fn styled_classes_carry_their_markers() {
        for class in [StyleClass::A, StyleClass::B] {
            let lines = style_corpus(class, 200, 11);
            assert_eq!(lines.len(), 200);
            let blob = lines.join(" ").to_lowercase();
            for marker in class.nouns().iter().chain([&class.adjective()]) {
                assert!(blob.contains(marker), "{marker} missing for {class:?}");
            }
            assert!(blob.contains(class.residue()));
            let other = class.other();
            for foreign in other.nouns().iter().chain([&other.adjective(), &other.residue()]) {
                assert!(!blob.contains(foreign), "{foreign} leaked into {class:?}");
            }
        }
    }

    #[test]
    fn authors_differ_only_in_their_discourse_habit() {
        let docs = author_documents(4, 3, 8, 5);
        assert_eq!(docs.len(), 12);
        for doc in &docs {
            assert_eq!(doc.sentences.len(), 8);
            let author: usize = doc.label.as_deref().unwrap()["author".len()..]
                .parse()
                .unwrap();
            let text = doc.text().to_lowercase();
            for (i, word) in DISCOURSE.iter().enumerate() {
                if i != author {
                    assert!(
                        !text.contains(&format!("{word} ,")),
                        "{word} leaked into {}",
                        doc.id
                    );
                }
            }
        }
        // The habit is frequent enough to profile.
        let first = &docs[0];
        let hits = first
            .sentences
            .iter()
            .filter(|s| s.tokens.first().map(|t| t.lower()) == Some("well".to_string()))
            .count();
        assert!(hits >= 2, "only {hits} discourse openers in 8 sentences");
    }

    #[test]
    fn fixtures_parse_into_a_bundle() {
        let bundle = fixture_bundle(3);
        assert!(bundle.ppdb.len() >= 5 + 2 * DISCOURSE.len());
        assert!(!bundle.wordnet.is_empty());
        assert!(bundle.spell.contains("dinner"));
        assert!(bundle.spell.contains("hence"));
        assert!(bundle.typos.correct_for("teh") == Some("the"));
    }
}
