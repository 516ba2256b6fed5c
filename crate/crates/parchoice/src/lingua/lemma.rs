//! Rule-based English de-inflection.
//!
//! [`lemmatize`] maps an inflected surface form to its lemma, driven by the
//! token's POS tag: plural nouns, inflected verbs (-s/-ed/-ing with
//! e-restoration and consonant-doubling undo) and comparative/superlative
//! adjectives. Everything outside those open classes is returned unchanged
//! (lowercased). Irregular verbs and nouns ship as resource tables compiled
//! into the crate.
//!
//! The rules are deliberately small and will misfire on some words
//! ("making" → "mak"). That is acceptable by construction: the inflection
//! table and the synonym lexicon are keyed with the *same* function, so a
//! wrong-but-consistent lemma costs coverage, never correctness.
//!
//! [`stem`] is a tag-free, more aggressive variant used only for fuzzy
//! token matching (e.g. by the paraphrase-quality metric), where inflected
//! relatives of the same word should collapse to one key.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::text::Token;

const VERBS_TSV: &str = include_str!("../../resources/irregular_verbs.tsv");
const NOUNS_TSV: &str = include_str!("../../resources/irregular_nouns.tsv");

/// Irregular verb and noun forms, in both directions: inflected form →
/// lemma for de-inflection, lemma → inflected form for re-inflection.
pub struct IrregularForms {
    past_to_lemma: BTreeMap<String, String>,
    participle_to_lemma: BTreeMap<String, String>,
    plural_to_singular: BTreeMap<String, String>,
    lemma_to_past: BTreeMap<String, String>,
    lemma_to_participle: BTreeMap<String, String>,
}

impl IrregularForms {
    /// Irregular simple past of `lemma` ("see" → "saw"), if listed.
    pub fn past_of(&self, lemma: &str) -> Option<&str> {
        self.lemma_to_past.get(lemma).map(String::as_str)
    }

    /// Irregular past participle of `lemma` ("see" → "seen"), if listed.
    pub fn participle_of(&self, lemma: &str) -> Option<&str> {
        self.lemma_to_participle.get(lemma).map(String::as_str)
    }

    fn parse() -> IrregularForms {
        let mut forms = IrregularForms {
            past_to_lemma: BTreeMap::new(),
            participle_to_lemma: BTreeMap::new(),
            plural_to_singular: BTreeMap::new(),
            lemma_to_past: BTreeMap::new(),
            lemma_to_participle: BTreeMap::new(),
        };
        for line in VERBS_TSV.lines().filter(|l| !l.trim().is_empty()) {
            let mut fields = line.split('\t');
            let (lemma, past, participle) = match (fields.next(), fields.next(), fields.next()) {
                (Some(l), Some(p), Some(pp)) => (l, p, pp),
                _ => panic!("malformed irregular-verb line: {line:?}"),
            };
            // First entry wins so reverse lookups stay deterministic when
            // a form is shared (e.g. "lay" is both a lemma and lie's past).
            forms
                .past_to_lemma
                .entry(past.to_string())
                .or_insert_with(|| lemma.to_string());
            forms
                .participle_to_lemma
                .entry(participle.to_string())
                .or_insert_with(|| lemma.to_string());
            forms.lemma_to_past.insert(lemma.to_string(), past.to_string());
            forms
                .lemma_to_participle
                .insert(lemma.to_string(), participle.to_string());
        }
        for line in NOUNS_TSV.lines().filter(|l| !l.trim().is_empty()) {
            let mut fields = line.split('\t');
            let (plural, singular) = match (fields.next(), fields.next()) {
                (Some(p), Some(s)) => (p, s),
                _ => panic!("malformed irregular-noun line: {line:?}"),
            };
            forms
                .plural_to_singular
                .entry(plural.to_string())
                .or_insert_with(|| singular.to_string());
        }
        forms
    }
}

/// Shared irregular-form tables (parsed once from the embedded resources).
pub fn irregular_forms() -> &'static IrregularForms {
    static FORMS: OnceLock<IrregularForms> = OnceLock::new();
    FORMS.get_or_init(IrregularForms::parse)
}

/// Lemma of `surface` under `tag`. Lemmas are always lowercase; tags
/// outside the noun/verb/adjective classes are identity (lowercased).
pub fn lemmatize(surface: &str, tag: &str) -> String {
    let lower = surface.to_lowercase();
    if tag.starts_with("NN") {
        lemmatize_noun(&lower, tag)
    } else if tag.starts_with("VB") {
        lemmatize_verb(&lower, tag)
    } else if tag.starts_with("JJ") {
        lemmatize_adjective(&lower, tag)
    } else {
        lower
    }
}

/// [`lemmatize`] applied to a tagged token.
pub fn lemmatize_token(token: &Token) -> String {
    lemmatize(&token.surface, token.tag_str())
}

fn lemmatize_noun(word: &str, tag: &str) -> String {
    match tag {
        "NNS" | "NNPS" => {
            if let Some(singular) = irregular_forms().plural_to_singular.get(word) {
                return singular.clone();
            }
            strip_plural(word)
        }
        _ => word.to_string(),
    }
}

/// Suppletive and clitic verb forms that no suffix rule can reach.
fn special_verb_lemma(word: &str) -> Option<&'static str> {
    match word {
        "am" | "is" | "are" | "was" | "were" | "been" | "being" => Some("be"),
        "'m" | "'re" | "'s" => Some("be"),
        "has" | "'ve" | "'d" => Some("have"),
        _ => None,
    }
}

fn lemmatize_verb(word: &str, tag: &str) -> String {
    if let Some(lemma) = special_verb_lemma(word) {
        return lemma.to_string();
    }
    let forms = irregular_forms();
    match tag {
        "VBZ" => {
            if word.ends_with("oes") {
                return word[..word.len() - 2].to_string();
            }
            strip_plural(word)
        }
        "VBD" => {
            if let Some(lemma) = forms
                .past_to_lemma
                .get(word)
                .or_else(|| forms.participle_to_lemma.get(word))
            {
                return lemma.clone();
            }
            strip_past(word)
        }
        "VBN" => {
            if let Some(lemma) = forms
                .participle_to_lemma
                .get(word)
                .or_else(|| forms.past_to_lemma.get(word))
            {
                return lemma.clone();
            }
            strip_past(word)
        }
        "VBG" => strip_suffix_undoing(word, "ing").unwrap_or_else(|| word.to_string()),
        // VB and VBP are already the base form.
        _ => word.to_string(),
    }
}

fn irregular_adjective(word: &str) -> Option<&'static str> {
    match word {
        "better" | "best" => Some("good"),
        "worse" | "worst" => Some("bad"),
        "further" | "furthest" | "farther" | "farthest" => Some("far"),
        "less" | "least" => Some("little"),
        "more" | "most" => Some("much"),
        _ => None,
    }
}

fn lemmatize_adjective(word: &str, tag: &str) -> String {
    if let Some(lemma) = irregular_adjective(word) {
        return lemma.to_string();
    }
    match tag {
        "JJR" => replace_y_suffix(word, "ier")
            .or_else(|| strip_suffix_undoing(word, "er"))
            .unwrap_or_else(|| word.to_string()),
        "JJS" => replace_y_suffix(word, "iest")
            .or_else(|| strip_suffix_undoing(word, "est"))
            .unwrap_or_else(|| word.to_string()),
        _ => word.to_string(),
    }
}

/// Plural / third-person-singular -s removal ("dogs" → "dog",
/// "watches" → "watch", "cities" → "city", "houses" → "house").
fn strip_plural(word: &str) -> String {
    if let Some(stem) = word.strip_suffix("ies") {
        if stem.chars().count() >= 2 {
            return format!("{stem}y");
        }
        return word[..word.len() - 1].to_string(); // ties → tie, dies → die
    }
    for suffix in ["ches", "shes", "sses", "xes", "zzes"] {
        if word.ends_with(suffix) {
            return word[..word.len() - 2].to_string();
        }
    }
    if word.ends_with("ses") {
        return word[..word.len() - 1].to_string();
    }
    if word.ends_with('s')
        && !word.ends_with("ss")
        && !word.ends_with("us")
        && !word.ends_with("is")
        && word.chars().count() >= 3
    {
        return word[..word.len() - 1].to_string();
    }
    word.to_string()
}

/// Regular -ed removal ("walked" → "walk", "tried" → "try",
/// "planned" → "plan", "used" → "use").
fn strip_past(word: &str) -> String {
    if let Some(stem) = word.strip_suffix("ied") {
        if stem.chars().count() >= 2 {
            return format!("{stem}y");
        }
        return word[..word.len() - 1].to_string(); // died → die
    }
    if word.ends_with("eed") {
        return word[..word.len() - 1].to_string(); // agreed → agree
    }
    strip_suffix_undoing(word, "ed").unwrap_or_else(|| word.to_string())
}

/// Replaces `suffix` (which starts with "i") by "y": "happiest" → "happy".
fn replace_y_suffix(word: &str, suffix: &str) -> Option<String> {
    let stem = word.strip_suffix(suffix)?;
    if stem.chars().count() >= 2 {
        Some(format!("{stem}y"))
    } else {
        None
    }
}

/// Strips `suffix` and repairs the stem: undo consonant doubling
/// ("planned" → "plan") or restore a dropped final -e ("used" → "use").
/// Returns `None` when the suffix is absent or the stem would be too short.
fn strip_suffix_undoing(word: &str, suffix: &str) -> Option<String> {
    let stem = word.strip_suffix(suffix)?;
    if stem.chars().count() < 2 {
        return None;
    }
    if let Some(undone) = undo_doubling(stem) {
        return Some(undone);
    }
    if wants_final_e(stem) {
        return Some(format!("{stem}e"));
    }
    Some(stem.to_string())
}

/// "plann" → "plan". Letters that legitimately double at the end of an
/// English stem (ll, ss, ee, zz, ff) are left alone.
fn undo_doubling(stem: &str) -> Option<String> {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n < 2 || chars[n - 1] != chars[n - 2] {
        return None;
    }
    let c = chars[n - 1];
    if !c.is_ascii_alphabetic() || matches!(c, 'a' | 'e' | 'i' | 'o' | 'u') {
        return None;
    }
    if matches!(c, 'l' | 's' | 'z' | 'f') {
        return None;
    }
    Some(chars[..n - 1].iter().collect())
}

/// Heuristic: stems ending in u/v/c/z/g or a single s dropped an -e
/// before the suffix ("argu" → "argue", "danc" → "dance", "rais" →
/// "raise"). Doubled final letters never take the restoration.
fn wants_final_e(stem: &str) -> bool {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n >= 2 && chars[n - 1] == chars[n - 2] {
        return false;
    }
    matches!(chars[n - 1], 'u' | 'v' | 'c' | 'z' | 'g' | 's')
}

/// Tag-free aggressive stem for fuzzy matching. Applies the de-inflection
/// rules to a fixpoint (without e-restoration, and additionally stripping a
/// final -e), so "love", "loved", "loving" and "loves" all map to "lov".
pub fn stem(word: &str) -> String {
    let mut w = word.to_lowercase();
    if let Some(lemma) = special_verb_lemma(&w) {
        return lemma.to_string();
    }
    let forms = irregular_forms();
    if let Some(lemma) = forms
        .past_to_lemma
        .get(&w)
        .or_else(|| forms.participle_to_lemma.get(&w))
        .or_else(|| forms.plural_to_singular.get(&w))
    {
        w = lemma.clone();
    } else if let Some(lemma) = irregular_adjective(&w) {
        w = lemma.to_string();
    }
    loop {
        let next = stem_step(&w);
        if next == w {
            return w;
        }
        w = next;
    }
}

fn stem_step(w: &str) -> String {
    let n = w.chars().count();
    if let Some(out) = replace_y_suffix(w, "iest")
        .or_else(|| replace_y_suffix(w, "ier"))
        .or_else(|| replace_y_suffix(w, "ies"))
        .or_else(|| replace_y_suffix(w, "ied"))
    {
        return out;
    }
    for suffix in ["ches", "shes", "sses", "xes", "zzes", "oes"] {
        if w.ends_with(suffix) && w.chars().count() > suffix.chars().count() {
            return w[..w.len() - 2].to_string();
        }
    }
    if w.ends_with("eed") {
        return w[..w.len() - 1].to_string();
    }
    for suffix in ["ing", "ed", "est", "er"] {
        if let Some(stem) = w.strip_suffix(suffix) {
            if stem.chars().count() >= 2 {
                return undo_doubling(stem).unwrap_or_else(|| stem.to_string());
            }
        }
    }
    if w.ends_with('s')
        && !w.ends_with("ss")
        && !w.ends_with("us")
        && !w.ends_with("is")
        && n >= 3
    {
        return w[..w.len() - 1].to_string();
    }
    if w.ends_with('e') && n > 3 {
        return w[..w.len() - 1].to_string();
    }
    w.to_string()
}
