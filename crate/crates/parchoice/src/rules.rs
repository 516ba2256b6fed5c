//! Simple lexical rules and rule-based grammatical transformations.
//!
//! Two kinds of paraphrase machinery live here:
//!
//! - [`simple_rule_sites`] scans a tagged sentence for *rule sites*: token
//!   spans with a small set of interchangeable alternatives (optional comma
//!   removal, contraction pairs like not/n't and have/'ve, indefinite-pronoun
//!   pairs, and modal-auxiliary groups). Sites from different rules may
//!   overlap; the generation engine takes care of combining only compatible
//!   ones.
//! - [`passivize`], [`negation_wrap`] and [`question_rewrite`] are
//!   whole-sentence rewrites over shallow structure. Each applies to a narrow,
//!   well-understood clause pattern and yields nothing when the pattern does
//!   not match — a non-candidate is always preferable to a mangled sentence.

use crate::lingua::chunk::{chunk, ChunkLabel};
use crate::lingua::inflect::InflectionTable;
use crate::lingua::lemma::{irregular_forms, lemmatize};
use crate::text::{
    detokenize, edit_distance, CandidateSentence, Sentence, Token, TraceEntry, STAGE_GRAMMAR,
};

/// A token span with interchangeable alternatives.
///
/// `options[0]` is always the original token sequence at `span`; every other
/// option differs from it. Options may change the number of tokens (comma
/// removal deletes one, "ought … to" insertion adds one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSite {
    /// Half-open token index range the options replace.
    pub span: (usize, usize),
    /// Alternative surface sequences, original first.
    pub options: Vec<Vec<String>>,
    /// Identifier of the rule that produced the site.
    pub rule: String,
}

impl RuleSite {
    /// Builds a site, enforcing the invariants: the original sequence comes
    /// first, duplicate options collapse, and a site with no real
    /// alternative is `None`.
    pub fn new(
        span: (usize, usize),
        original: Vec<String>,
        alternatives: Vec<Vec<String>>,
        rule: &str,
    ) -> Option<RuleSite> {
        let mut options = vec![original];
        for alt in alternatives {
            if !options.contains(&alt) {
                options.push(alt);
            }
        }
        if options.len() < 2 {
            return None;
        }
        Some(RuleSite {
            span,
            options,
            rule: rule.to_string(),
        })
    }

    /// Applies option `idx`, returning the rewritten token sequence.
    /// Untouched tokens keep their tags; inserted tokens are untagged.
    pub fn apply_option(&self, tokens: &[Token], idx: usize) -> Vec<Token> {
        let mut out: Vec<Token> = tokens[..self.span.0].to_vec();
        out.extend(self.options[idx].iter().map(Token::new));
        out.extend_from_slice(&tokens[self.span.1..]);
        out
    }
}

/// Auxiliaries that license an n't contraction of a following "not"
/// ("will" contracts via the "wo" stem).
const AUX_BEFORE_NT: &[&str] = &[
    "is", "are", "was", "were", "have", "has", "had", "must", "should", "need", "ought", "could",
    "can", "do", "does", "did", "will",
];

/// Modal groups whose members are interchangeable in affirmed contexts.
const AFFIRMED_GROUPS: &[&[&str]] = &[
    &["might", "may", "could", "can"],
    &["should", "ought", "must"],
    &["will", "shall"],
];

/// Modal groups whose members are interchangeable in negated contexts.
const NEGATED_GROUPS: &[&[&str]] = &[
    &["can", "could"],
    &["should", "ought", "must"],
    &["will", "shall"],
];

const PRONOUN_PAIRS: &[(&str, &str)] = &[
    ("nobody", "no-one"),
    ("anybody", "anyone"),
    ("somebody", "someone"),
];

const CLITIC_PAIRS: &[(&str, &str)] = &[("am", "'m"), ("are", "'re"), ("have", "'ve")];

/// Pronouns after which "have" may contract to 've.
const VE_HOSTS: &[&str] = &["i", "you", "we", "they"];

fn stem_to_full(stem: &str) -> Option<&'static str> {
    match stem {
        "ca" => Some("can"),
        "wo" => Some("will"),
        "sha" => Some("shall"),
        _ => None,
    }
}

fn full_to_stem(modal: &str) -> Option<&'static str> {
    match modal {
        "can" => Some("ca"),
        "will" => Some("wo"),
        _ => None,
    }
}

fn is_negation(word: &str) -> bool {
    word == "not" || word == "n't"
}

/// Copies the capitalization of `original`'s first character onto
/// `replacement` ("Nobody" → "No-one" stays capitalized).
pub(crate) fn match_case(original: &str, replacement: &str) -> String {
    let starts_upper = original.chars().next().is_some_and(|c| c.is_uppercase());
    if !starts_upper {
        return replacement.to_string();
    }
    let mut chars = replacement.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

fn surfaces(tokens: &[Token], span: (usize, usize)) -> Vec<String> {
    tokens[span.0..span.1].iter().map(|t| t.surface.clone()).collect()
}

/// Scans a tagged sentence for simple-rule sites: comma removal,
/// contraction pairs, indefinite-pronoun pairs, and modal groups.
pub fn simple_rule_sites(sentence: &Sentence) -> Vec<RuleSite> {
    let tokens = &sentence.tokens;
    let mut sites = Vec::new();
    for i in 0..tokens.len() {
        let lower = tokens[i].lower();

        if lower == "," {
            sites.extend(RuleSite::new(
                (i, i + 1),
                vec![",".to_string()],
                vec![vec![]],
                "comma-removal",
            ));
        }

        for (a, b) in PRONOUN_PAIRS {
            let other = if lower == *a {
                b
            } else if lower == *b {
                a
            } else {
                continue;
            };
            sites.extend(RuleSite::new(
                (i, i + 1),
                vec![tokens[i].surface.clone()],
                vec![vec![match_case(&tokens[i].surface, other)]],
                "pronoun-pair",
            ));
        }

        sites.extend(negation_site(tokens, i, &lower));
        sites.extend(clitic_site(tokens, i, &lower));
        sites.extend(modal_site(tokens, i, &lower));
    }
    sites
}

/// not ↔ n't. Expansion of an existing n't is always offered (restoring
/// can/will/shall from their ca/wo/sha stems); contraction of "not" only
/// after the auxiliary list, widening the span when the auxiliary itself
/// must change form (can not → ca n't).
fn negation_site(tokens: &[Token], i: usize, lower: &str) -> Option<RuleSite> {
    if lower == "n't" && i > 0 {
        let prev = tokens[i - 1].lower();
        if let Some(full) = stem_to_full(&prev) {
            return RuleSite::new(
                (i - 1, i + 1),
                surfaces(tokens, (i - 1, i + 1)),
                vec![vec![
                    match_case(&tokens[i - 1].surface, full),
                    "not".to_string(),
                ]],
                "contraction",
            );
        }
        return RuleSite::new(
            (i, i + 1),
            vec![tokens[i].surface.clone()],
            vec![vec!["not".to_string()]],
            "contraction",
        );
    }
    if lower == "not" && i > 0 {
        let prev = tokens[i - 1].lower();
        if !AUX_BEFORE_NT.contains(&prev.as_str()) {
            return None;
        }
        if let Some(stem) = full_to_stem(&prev) {
            return RuleSite::new(
                (i - 1, i + 1),
                surfaces(tokens, (i - 1, i + 1)),
                vec![vec![
                    match_case(&tokens[i - 1].surface, stem),
                    "n't".to_string(),
                ]],
                "contraction",
            );
        }
        return RuleSite::new(
            (i, i + 1),
            vec![tokens[i].surface.clone()],
            vec![vec!["n't".to_string()]],
            "contraction",
        );
    }
    None
}

/// am ↔ 'm, are ↔ 're, have ↔ 've. Expansion is always offered;
/// contraction needs a host word before it, and 've specifically a pronoun
/// in {I, you, we, they}.
fn clitic_site(tokens: &[Token], i: usize, lower: &str) -> Option<RuleSite> {
    for (full, clitic) in CLITIC_PAIRS {
        if lower == *clitic {
            return RuleSite::new(
                (i, i + 1),
                vec![tokens[i].surface.clone()],
                vec![vec![full.to_string()]],
                "contraction",
            );
        }
        if lower == *full {
            if i == 0 {
                return None;
            }
            if *full == "have" && !VE_HOSTS.contains(&tokens[i - 1].lower().as_str()) {
                return None;
            }
            return RuleSite::new(
                (i, i + 1),
                vec![tokens[i].surface.clone()],
                vec![vec![clitic.to_string()]],
                "contraction",
            );
        }
    }
    None
}

/// Modal-auxiliary group substitution. The context is negated exactly when
/// the modal immediately precedes not/n't; the site then spans the negation
/// too, offering every group member in both negation spellings (where the
/// auxiliary list allows n't) so the negation itself is never created or
/// destroyed. "ought" drags its "to" along in both directions.
fn modal_site(tokens: &[Token], i: usize, lower: &str) -> Option<RuleSite> {
    let effective = stem_to_full(lower).map(str::to_string).unwrap_or_else(|| lower.to_string());
    let is_stem = stem_to_full(lower).is_some();
    if tokens[i].tag_str() != "MD" && !is_stem {
        return None;
    }
    let negated = tokens
        .get(i + 1)
        .is_some_and(|t| is_negation(&t.lower()));
    if is_stem && !negated {
        return None; // a bare ca/wo/sha stem only occurs before n't
    }

    if negated {
        let group = NEGATED_GROUPS
            .iter()
            .find(|g| g.contains(&effective.as_str()))?;
        // "ought not to": the trailing "to" belongs to the site.
        let has_to = effective == "ought"
            && tokens.get(i + 2).is_some_and(|t| t.lower() == "to");
        let end = if has_to { i + 3 } else { i + 2 };
        let original = surfaces(tokens, (i, end));
        let case_head = &tokens[i].surface;
        let mut alternatives = Vec::new();
        for modal in group.iter() {
            for negation in ["not", "n't"] {
                if negation == "n't" && !AUX_BEFORE_NT.contains(modal) {
                    continue;
                }
                let head = if negation == "n't" {
                    full_to_stem(modal).unwrap_or(modal)
                } else {
                    modal
                };
                let mut option = vec![match_case(case_head, head), negation.to_string()];
                if *modal == "ought" {
                    option.push("to".to_string());
                }
                alternatives.push(option);
            }
        }
        return RuleSite::new((i, end), original, alternatives, "modal-group");
    }

    let group = AFFIRMED_GROUPS
        .iter()
        .find(|g| g.contains(&effective.as_str()))?;
    let has_to =
        effective == "ought" && tokens.get(i + 1).is_some_and(|t| t.lower() == "to");
    let end = if has_to { i + 2 } else { i + 1 };
    let original = surfaces(tokens, (i, end));
    let case_head = &tokens[i].surface;
    let mut alternatives = Vec::new();
    for modal in group.iter() {
        let mut option = vec![match_case(case_head, modal)];
        if *modal == "ought" {
            option.push("to".to_string());
        }
        alternatives.push(option);
    }
    RuleSite::new((i, end), original, alternatives, "modal-group")
}

/// Builds a grammar-stage candidate from raw surfaces.
fn candidate(surfaces: Vec<String>, origin: &Sentence, rule: &str) -> CandidateSentence {
    let tokens: Vec<Token> = surfaces.iter().map(Token::new).collect();
    let text = detokenize(&tokens);
    CandidateSentence {
        edit_distance: edit_distance(&text, &origin.original_text),
        tokens,
        trace: vec![TraceEntry {
            stage: STAGE_GRAMMAR,
            span: (0, origin.tokens.len()),
            rule: rule.to_string(),
        }],
    }
}

fn is_punctuation_token(token: &Token) -> bool {
    token
        .surface
        .chars()
        .all(|c| matches!(c, '.' | '!' | '?' | ',' | ';' | ':'))
}

fn decapitalize(token: &Token) -> String {
    if token.tag_str().starts_with("NNP") || token.surface == "I" {
        return token.surface.clone();
    }
    let mut chars = token.surface.chars();
    match chars.next() {
        Some(c) => c.to_lowercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

fn subject_case(pronoun: &str) -> Option<&'static str> {
    match pronoun {
        "me" => Some("i"),
        "him" => Some("he"),
        "her" => Some("she"),
        "us" => Some("we"),
        "them" => Some("they"),
        _ => None,
    }
}

fn object_case(pronoun: &str) -> Option<&'static str> {
    match pronoun {
        "i" => Some("me"),
        "he" => Some("him"),
        "she" => Some("her"),
        "we" => Some("us"),
        "they" => Some("them"),
        _ => None,
    }
}

/// Form of "be" agreeing with a subject whose head word is `word` (already
/// in subject case) tagged `tag`.
fn be_form(word: &str, tag: &str, past: bool) -> &'static str {
    let plural = matches!(tag, "NNS" | "NNPS");
    if word == "i" {
        return if past { "was" } else { "am" };
    }
    if word == "you" || word == "we" || word == "they" || plural {
        return if past { "were" } else { "are" };
    }
    if past {
        "was"
    } else {
        "is"
    }
}

fn is_do_form(word: &str) -> bool {
    matches!(word, "do" | "does" | "did")
}

/// Re-inflects base-form `verb` to agree with the removed do-support form.
/// Irregular forms come from the shared exception table, regular ones from
/// the inflection table; `None` (abort) when neither knows the form.
fn reinflect_for_do(verb: &Token, do_form: &str, table: &InflectionTable) -> Option<String> {
    let lemma = lemmatize(&verb.surface, "VB");
    match do_form {
        "did" => irregular_forms()
            .past_of(&lemma)
            .map(str::to_string)
            .or_else(|| table.inflect(&lemma, "VBD").map(str::to_string)),
        "does" => table.inflect(&lemma, "VBZ").map(str::to_string),
        _ => Some(lemma),
    }
}

/// Rewrites a simple transitive clause into the passive voice:
/// "John saw Mary." → "Mary was seen by John.".
///
/// The clause must be NP VP NP (with optional do-support negation splitting
/// the verb phrase) followed by nothing but punctuation, with a single
/// finite, non-copular main verb. Questions, modals, perfect/progressive
/// verb groups and anything with trailing material are rejected by shape;
/// a missing participle aborts.
pub fn passivize(sentence: &Sentence, table: &InflectionTable) -> Option<CandidateSentence> {
    let tokens = &sentence.tokens;
    if tokens.is_empty() || tokens.last().is_some_and(|t| t.surface == "?") {
        return None;
    }
    let chunks = chunk(tokens);

    // Structural match: NP VP NP or NP VP(do) S-REST(neg) VP NP, then
    // punctuation only.
    let mut it = chunks.iter();
    let subject = it.next().filter(|c| c.label == ChunkLabel::Np)?;
    if subject.start != 0 {
        return None;
    }
    let first_vp = it.next().filter(|c| c.label == ChunkLabel::Vp)?;

    if first_vp.end - first_vp.start != 1 {
        return None; // modals, perfect and progressive groups are out of scope
    }
    let after = it.next()?;
    let (verb_idx, negation_idx, do_form, object) = if after.label == ChunkLabel::Np {
        // Simple clause: the VP is the single finite main verb.
        (first_vp.start, None, None, after)
    } else {
        // Do-support negation: the VP must be exactly do/does/did, then a
        // lone not/n't, then the base-form verb, then the object NP.
        let aux = &tokens[first_vp.start];
        if !is_do_form(&aux.lower()) {
            return None;
        }
        if after.label != ChunkLabel::SRest
            || after.end - after.start != 1
            || !is_negation(&tokens[after.start].lower())
        {
            return None;
        }
        let main_vp = it.next().filter(|c| c.label == ChunkLabel::Vp)?;
        if main_vp.end - main_vp.start != 1 {
            return None;
        }
        let obj = it.next().filter(|c| c.label == ChunkLabel::Np)?;
        (main_vp.start, Some(after.start), Some(aux.lower()), obj)
    };
    // Anything after the object must be punctuation.
    let trailing: Vec<&Token> = tokens[object.end..].iter().collect();
    if !trailing.iter().all(|t| is_punctuation_token(t)) {
        return None;
    }

    let verb = &tokens[verb_idx];
    let (lemma, past) = match &do_form {
        Some(form) => {
            if !matches!(verb.tag_str(), "VB" | "VBP") {
                return None;
            }
            (lemmatize(&verb.surface, "VB"), form == "did")
        }
        None => {
            if !matches!(verb.tag_str(), "VBD" | "VBZ" | "VBP") {
                return None;
            }
            (
                lemmatize(&verb.surface, verb.tag_str()),
                verb.tag_str() == "VBD",
            )
        }
    };
    if matches!(lemma.as_str(), "be" | "have" | "do") {
        return None;
    }
    let participle = irregular_forms()
        .participle_of(&lemma)
        .map(str::to_string)
        .or_else(|| table.inflect(&lemma, "VBN").map(str::to_string))?;

    // New subject: the old object, pronouns shifted to subject case.
    let mut new_subject: Vec<String> = Vec::new();
    for (k, token) in tokens[object.start..object.end].iter().enumerate() {
        let mut word = token.surface.clone();
        if let Some(subj) = subject_case(&token.lower()) {
            word = subj.to_string();
        }
        if k == 0 {
            word = capitalize(&word);
        } else if word == "i" {
            word = "I".to_string();
        }
        new_subject.push(word);
    }
    let head = &tokens[object.end - 1];
    let head_word = subject_case(&head.lower())
        .map(str::to_string)
        .unwrap_or_else(|| head.lower());
    let be = be_form(&head_word, head.tag_str(), past);

    // Agent phrase: the old subject, pronouns shifted to object case,
    // leading capital dropped unless it is a proper noun or "I" → "me".
    let mut agent: Vec<String> = Vec::new();
    for (k, token) in tokens[subject.start..subject.end].iter().enumerate() {
        if let Some(obj) = object_case(&token.lower()) {
            agent.push(obj.to_string());
        } else if k == 0 {
            agent.push(decapitalize(token));
        } else {
            agent.push(token.surface.clone());
        }
    }

    let mut out = new_subject;
    out.push(be.to_string());
    if let Some(neg) = negation_idx {
        out.push(tokens[neg].surface.clone());
    }
    out.push(participle);
    out.push("by".to_string());
    out.extend(agent);
    out.extend(trailing.iter().map(|t| t.surface.clone()));
    Some(candidate(out, sentence, "passivize"))
}

/// Finds the first finite verb or modal of the sentence.
fn first_finite(tokens: &[Token]) -> Option<usize> {
    tokens.iter().position(|t| {
        matches!(t.tag_str(), "MD" | "VBZ" | "VBD" | "VBP") || stem_to_full(&t.lower()).is_some()
    })
}

/// Un-negates a clause negated at its first finite verb: drops the not/n't
/// token, removes stranded do-support by re-inflecting the main verb, and
/// restores ca/wo/sha stems. `None` when the clause is not negated there or
/// a required inflection is unknown.
fn remove_first_negation(tokens: &[Token], table: &InflectionTable) -> Option<Vec<String>> {
    let fin = first_finite(tokens)?;
    if !tokens.get(fin + 1).is_some_and(|t| is_negation(&t.lower())) {
        return None;
    }
    let finite = &tokens[fin];
    let mut out: Vec<String> = tokens[..fin].iter().map(|t| t.surface.clone()).collect();
    if is_do_form(&finite.lower()) {
        // "did n't see" → "saw": the main verb follows the negation.
        let verb = tokens.get(fin + 2)?;
        if !matches!(verb.tag_str(), "VB" | "VBP") {
            return None;
        }
        let reinflected = reinflect_for_do(verb, &finite.lower(), table)?;
        out.push(match_case(&finite.surface, &reinflected));
        out.extend(tokens[fin + 3..].iter().map(|t| t.surface.clone()));
    } else {
        let head = match stem_to_full(&finite.lower()) {
            Some(full) => match_case(&finite.surface, full),
            None => finite.surface.clone(),
        };
        out.push(head);
        out.extend(tokens[fin + 2..].iter().map(|t| t.surface.clone()));
    }
    Some(out)
}

/// Wraps a negated sentence in "I don't think (that) …", removing the inner
/// negation: "John didn't see Mary." → "I don't think that John saw Mary."
/// Returns the with-"that" and without-"that" variants, or nothing when the
/// sentence is not negated at its first finite verb (or is a question).
pub fn negation_wrap(sentence: &Sentence, table: &InflectionTable) -> Vec<CandidateSentence> {
    let tokens = &sentence.tokens;
    if tokens.is_empty() || tokens.last().is_some_and(|t| t.surface == "?") {
        return Vec::new();
    }
    let Some(mut unnegated) = remove_first_negation(tokens, table) else {
        return Vec::new();
    };
    if let Some(first) = tokens.first() {
        unnegated[0] = decapitalize(&Token {
            surface: unnegated[0].clone(),
            tag: first.tag.clone(),
            lemma: None,
        });
    }
    let prefix = ["I", "do", "n't", "think"];
    let mut with_that: Vec<String> = prefix.iter().map(|s| s.to_string()).collect();
    with_that.push("that".to_string());
    with_that.extend(unnegated.iter().cloned());
    let mut without: Vec<String> = prefix.iter().map(|s| s.to_string()).collect();
    without.extend(unnegated);
    vec![
        candidate(with_that, sentence, "negation-wrap"),
        candidate(without, sentence, "negation-wrap"),
    ]
}

/// Rewrites a polar question as "Is it (true) that <declarative>?".
///
/// The question must start with a finite auxiliary and end with "?"; the
/// subject is the NP chunk right after the auxiliary (and optional n't/not).
/// Negative questions yield six variants: the two base forms over the
/// negated declarative plus "Is it not (true) that" and "Isn't it (true)
/// that" over the affirmed one.
pub fn question_rewrite(sentence: &Sentence, table: &InflectionTable) -> Vec<CandidateSentence> {
    question_rewrite_inner(sentence, table).unwrap_or_default()
}

fn question_rewrite_inner(
    sentence: &Sentence,
    table: &InflectionTable,
) -> Option<Vec<CandidateSentence>> {
    let tokens = &sentence.tokens;
    let n = tokens.len();
    if n < 3 || tokens[n - 1].surface != "?" {
        return None;
    }
    let aux = &tokens[0];
    let aux_lower = aux.lower();
    let finite = matches!(aux.tag_str(), "MD" | "VBZ" | "VBD" | "VBP")
        || stem_to_full(&aux_lower).is_some();
    if !finite {
        return None;
    }
    let negated = is_negation(&tokens[1].lower());
    let subject_start = if negated { 2 } else { 1 };
    let chunks = chunk(tokens);
    let subject = chunks
        .iter()
        .find(|c| c.start == subject_start && c.label == ChunkLabel::Np)?;
    let rest: Vec<&Token> = tokens[subject.end..n - 1].iter().collect();

    let mut subject_words: Vec<String> = tokens[subject.start..subject.end]
        .iter()
        .map(|t| t.surface.clone())
        .collect();
    subject_words[0] = decapitalize(&tokens[subject.start]);

    // Affirmed declarative: subject + auxiliary + rest, with do-support
    // folded into the main verb.
    let affirmed: Vec<String> = if is_do_form(&aux_lower)
        && rest.first().is_some_and(|t| matches!(t.tag_str(), "VB" | "VBP"))
    {
        let reinflected = reinflect_for_do(rest[0], &aux_lower, table)?;
        let mut d = subject_words.clone();
        d.push(reinflected);
        d.extend(rest[1..].iter().map(|t| t.surface.clone()));
        d
    } else {
        let head = match stem_to_full(&aux_lower) {
            Some(full) => full.to_string(),
            None => aux_lower.clone(),
        };
        let mut d = subject_words.clone();
        d.push(head);
        d.extend(rest.iter().map(|t| t.surface.clone()));
        d
    };

    // Negated declarative keeps the negation (and therefore the do-support);
    // a ca/wo stem stays a stem because its n't stays next to it.
    let negated_declarative: Option<Vec<String>> = negated.then(|| {
        let mut d = subject_words.clone();
        d.push(aux_lower.clone());
        d.push(tokens[1].surface.clone());
        d.extend(rest.iter().map(|t| t.surface.clone()));
        d
    });

    let assemble = |prefix: &[&str], declarative: &[String]| -> Vec<String> {
        let mut out: Vec<String> = prefix.iter().map(|s| s.to_string()).collect();
        out.extend(declarative.iter().cloned());
        out.push("?".to_string());
        out
    };

    let base = negated_declarative.as_ref().unwrap_or(&affirmed);
    let mut results = vec![
        candidate(assemble(&["Is", "it", "that"], base), sentence, "question-rewrite"),
        candidate(
            assemble(&["Is", "it", "true", "that"], base),
            sentence,
            "question-rewrite",
        ),
    ];
    if negated {
        for prefix in [
            &["Is", "it", "not", "that"][..],
            &["Is", "it", "not", "true", "that"][..],
            &["Is", "n't", "it", "that"][..],
            &["Is", "n't", "it", "true", "that"][..],
        ] {
            results.push(candidate(
                assemble(prefix, &affirmed),
                sentence,
                "question-rewrite",
            ));
        }
    }
    Some(results)
}
