//! Reversible typo generation and spelling correction.
//!
//! A typo lexicon pairs correctly spelled words with misspellings observed in
//! a target author's corpus: corpus tokens missing from a general spelling
//! lexicon are matched to their nearest correctly spelled word, and
//! apostrophe-bearing words are paired with their apostrophe-stripped doubles
//! ("you're" → "youre"). During generation, sites offer those misspellings;
//! `spell_correct` undoes every offered option, so the operation costs
//! nothing against an adversary who runs a spell checker first.
//!
//! Nearest-word lookup uses a deletion-neighborhood index: every lexicon word
//! is stored under all strings reachable by deleting up to `max_dist`
//! characters, and a query generates its own deletion neighborhood to collect
//! candidates, which are then ranked by true edit distance. This keeps lookup
//! cost independent of lexicon size.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::rules::{match_case, RuleSite};
use crate::text::{edit_distance, is_clitic, tokenize_words, Sentence};

/// Maximum edit distance between a word and its recorded misspellings, and
/// the depth of the deletion-neighborhood index.
pub const DEFAULT_MAX_DIST: usize = 2;

const TYPOS_HEADER: &str = "parchoice-typos-v1";

/// All strings reachable from `word` by deleting at most `depth` characters,
/// including `word` itself.
fn delete_variants(word: &str, depth: usize) -> BTreeSet<String> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    seen.insert(word.to_string());
    let mut frontier = vec![word.to_string()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            let chars: Vec<char> = w.chars().collect();
            for skip in 0..chars.len() {
                let variant: String = chars
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, c)| *c)
                    .collect();
                if seen.insert(variant.clone()) {
                    next.push(variant);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// A list of correctly spelled words with usage frequencies, indexed for
/// approximate lookup.
#[derive(Debug, Clone)]
pub struct SpellLexicon {
    freq: BTreeMap<String, u64>,
    deletes: HashMap<String, BTreeSet<String>>,
    max_dist: usize,
}

impl SpellLexicon {
    /// Builds a lexicon from `(word, frequency)` pairs. Words are lowercased;
    /// duplicate words accumulate their frequencies. `max_dist` bounds the
    /// distance later `nearest` queries may use.
    pub fn new(entries: impl IntoIterator<Item = (String, u64)>, max_dist: usize) -> SpellLexicon {
        assert!(max_dist >= 1, "a zero-distance index cannot correct anything");
        let mut freq: BTreeMap<String, u64> = BTreeMap::new();
        for (word, f) in entries {
            *freq.entry(word.to_lowercase()).or_insert(0) += f;
        }
        let mut deletes: HashMap<String, BTreeSet<String>> = HashMap::new();
        for word in freq.keys() {
            for variant in delete_variants(word, max_dist) {
                deletes.entry(variant).or_default().insert(word.clone());
            }
        }
        SpellLexicon {
            freq,
            deletes,
            max_dist,
        }
    }

    /// Reads a lexicon from a file of `word<TAB>frequency` lines.
    pub fn load(path: impl AsRef<Path>) -> Result<SpellLexicon> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        SpellLexicon::parse(path, &text)
    }

    /// Parses `word<TAB>frequency` lines. Blank lines are skipped; anything
    /// else malformed is an error.
    pub fn parse(path: &Path, text: &str) -> Result<SpellLexicon> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 2 || fields[0].is_empty() {
                return Err(Error::format(
                    path,
                    lineno + 1,
                    "expected word<TAB>frequency",
                ));
            }
            let f: u64 = fields[1].parse().map_err(|_| {
                Error::format(path, lineno + 1, format!("bad frequency {:?}", fields[1]))
            })?;
            entries.push((fields[0].to_string(), f));
        }
        if entries.is_empty() {
            return Err(Error::resource(format!(
                "{}: empty spelling lexicon",
                path.display()
            )));
        }
        Ok(SpellLexicon::new(entries, DEFAULT_MAX_DIST))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.freq.contains_key(word)
    }

    pub fn frequency(&self, word: &str) -> Option<u64> {
        self.freq.get(word).copied()
    }

    pub fn len(&self) -> usize {
        self.freq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    /// Words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.freq.keys().map(String::as_str)
    }

    pub fn max_dist(&self) -> usize {
        self.max_dist
    }

    /// The nearest lexicon word within `max_dist` edits of `word`, or `None`.
    /// Ties prefer the more frequent word, then the lexicographically
    /// smaller. A word already in the lexicon is its own nearest match.
    pub fn nearest(&self, word: &str, max_dist: usize) -> Option<&str> {
        assert!(
            max_dist <= self.max_dist,
            "query distance {max_dist} exceeds index depth {}",
            self.max_dist
        );
        if let Some((key, _)) = self.freq.get_key_value(word) {
            return Some(key.as_str());
        }
        let mut candidates: BTreeSet<&str> = BTreeSet::new();
        for variant in delete_variants(word, max_dist) {
            if let Some(words) = self.deletes.get(&variant) {
                candidates.extend(words.iter().map(String::as_str));
            }
        }
        let mut best: Option<(usize, std::cmp::Reverse<u64>, &str)> = None;
        for cand in candidates {
            let d = edit_distance(word, cand);
            if d > max_dist {
                continue;
            }
            let key = (d, std::cmp::Reverse(self.freq[cand]), cand);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, w)| w)
    }
}

/// Misspelling pairs for one author class: `forward` maps a correct word to
/// the misspellings generation may introduce, `reverse` maps each misspelling
/// back. The tables are strict inverses, no word maps to itself, and every
/// pair is within the build distance.
#[derive(Debug, Clone, Default)]
pub struct TypoLexicon {
    forward: BTreeMap<String, BTreeSet<String>>,
    reverse: BTreeMap<String, String>,
    /// Where the pairs came from: a corpus id at build time, the file path
    /// after a load. Not persisted.
    source: String,
}

impl TypoLexicon {
    pub fn new(source: impl Into<String>) -> TypoLexicon {
        TypoLexicon {
            forward: BTreeMap::new(),
            reverse: BTreeMap::new(),
            source: source.into(),
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Number of (correct, misspelling) pairs.
    pub fn len(&self) -> usize {
        self.reverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reverse.is_empty()
    }

    /// Misspellings recorded for `correct`, in lexicographic order.
    pub fn misspellings_of(&self, correct: &str) -> impl Iterator<Item = &str> {
        self.forward
            .get(correct)
            .into_iter()
            .flat_map(|set| set.iter().map(String::as_str))
    }

    pub fn correct_for(&self, misspelling: &str) -> Option<&str> {
        self.reverse.get(misspelling).map(String::as_str)
    }

    /// All pairs as (correct, misspelling), sorted.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.forward
            .iter()
            .flat_map(|(c, set)| set.iter().map(move |m| (c.as_str(), m.as_str())))
    }

    /// Records a pair unless it would map a word to itself or reuse a
    /// misspelling already claimed by another correct form (first entry
    /// wins). Returns whether the pair was added.
    pub fn insert(&mut self, correct: &str, misspelling: &str) -> bool {
        if correct == misspelling || self.reverse.contains_key(misspelling) {
            return false;
        }
        self.reverse
            .insert(misspelling.to_string(), correct.to_string());
        self.forward
            .entry(correct.to_string())
            .or_default()
            .insert(misspelling.to_string());
        true
    }

    /// Renders the lexicon as a header line followed by
    /// `correct<TAB>misspelling` lines in sorted order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(TYPOS_HEADER);
        out.push('\n');
        for (correct, miss) in self.pairs() {
            writeln!(out, "{correct}\t{miss}").unwrap();
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.serialize()).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<TypoLexicon> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        TypoLexicon::parse(path, &text)
    }

    /// Parses the serialized form. The header must be the first line; each
    /// following non-empty line is one pair. Self-maps and misspellings
    /// claimed twice are format errors.
    pub fn parse(path: &Path, text: &str) -> Result<TypoLexicon> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, first)) if first.trim() == TYPOS_HEADER => {}
            _ => {
                return Err(Error::format(
                    path,
                    1,
                    format!("expected header {TYPOS_HEADER:?}"),
                ))
            }
        }
        let mut lex = TypoLexicon::new(path.display().to_string());
        for (lineno, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 2 || fields[0].is_empty() || fields[1].is_empty() {
                return Err(Error::format(
                    path,
                    lineno + 1,
                    "expected correct<TAB>misspelling",
                ));
            }
            if fields[0] == fields[1] {
                return Err(Error::format(path, lineno + 1, "word maps to itself"));
            }
            if !lex.insert(fields[0], fields[1]) {
                return Err(Error::format(
                    path,
                    lineno + 1,
                    format!("misspelling {:?} recorded twice", fields[1]),
                ));
            }
        }
        Ok(lex)
    }
}

/// Builds the typo lexicon for a target class.
///
/// Two passes populate it. First, every spelling-lexicon word containing an
/// apostrophe is paired with its apostrophe-stripped form, most frequent
/// word first, unless the stripped form is itself a correctly spelled word:
/// correcting such a form ("were") must stay the identity, so offering the
/// strip ("we're" → "were") would be irreversible. Second, every corpus
/// token the spelling lexicon does not know is paired with its nearest
/// correctly spelled word within `max_dist` edits, skipping misspellings
/// already claimed.
pub fn build_typo_lexicon(
    corpus: &[String],
    spell: &SpellLexicon,
    max_dist: usize,
    source: &str,
) -> TypoLexicon {
    assert!(
        max_dist >= 1 && max_dist <= spell.max_dist(),
        "build distance {max_dist} outside the index depth"
    );
    let mut lex = TypoLexicon::new(source);

    let mut apostrophe_words: Vec<&str> = spell.words().filter(|w| w.contains('\'')).collect();
    apostrophe_words.sort_by(|a, b| {
        spell
            .frequency(b)
            .cmp(&spell.frequency(a))
            .then_with(|| a.cmp(b))
    });
    for word in apostrophe_words {
        let stripped: String = word.chars().filter(|c| *c != '\'').collect();
        if stripped.is_empty()
            || stripped == word
            || spell.contains(&stripped)
            || edit_distance(word, &stripped) > max_dist
        {
            continue;
        }
        lex.insert(word, &stripped);
    }

    let mut unknown: BTreeSet<String> = BTreeSet::new();
    for text in corpus {
        for token in tokenize_words(text) {
            let lower = token.lower();
            if lower.chars().count() < 2
                || !lower.chars().any(|c| c.is_alphabetic())
                || spell.contains(&lower)
            {
                continue;
            }
            unknown.insert(lower);
        }
    }
    for miss in &unknown {
        if lex.correct_for(miss).is_some() {
            continue;
        }
        if let Some(correct) = spell.nearest(miss, max_dist) {
            let correct = correct.to_string();
            lex.insert(&correct, miss);
        }
    }
    lex
}

/// Scans a sentence for typo sites:
///
/// (a) apostrophe removal — a clitic merges back into its host token and
///     drops the apostrophe ("You" + "'re" → "Youre"), offered only when the
///     lexicon's reverse table restores the original, keeping every option
///     correctable;
/// (b) recorded misspellings of a correctly spelled token, capitalization
///     preserved;
/// (c) typos already present in the input (`original_typos` maps token index
///     to the corrected form): keep the typo or fix it.
pub fn typo_sites(
    sentence: &Sentence,
    lex: &TypoLexicon,
    original_typos: &BTreeMap<usize, String>,
) -> Vec<RuleSite> {
    let tokens = &sentence.tokens;
    let mut sites = Vec::new();
    for i in 0..tokens.len() {
        let surface = &tokens[i].surface;

        if surface.contains('\'') {
            let (span, original_words, joined) = if is_clitic(surface) && i > 0 {
                let host = tokens[i - 1].surface.clone();
                let joined = format!("{host}{surface}");
                ((i - 1, i + 1), vec![host, surface.clone()], joined)
            } else {
                ((i, i + 1), vec![surface.clone()], surface.clone())
            };
            let stripped: String = joined.chars().filter(|c| *c != '\'').collect();
            let joined_lower = joined.to_lowercase();
            if !stripped.is_empty()
                && stripped != joined
                && lex.correct_for(&stripped.to_lowercase()) == Some(joined_lower.as_str())
            {
                if let Some(site) =
                    RuleSite::new(span, original_words, vec![vec![stripped]], "typo-apostrophe")
                {
                    sites.push(site);
                }
            }
        }

        let misses: Vec<Vec<String>> = lex
            .misspellings_of(&tokens[i].lower())
            .map(|m| vec![match_case(surface, m)])
            .collect();
        if !misses.is_empty() {
            if let Some(site) =
                RuleSite::new((i, i + 1), vec![surface.clone()], misses, "typo-misspelling")
            {
                sites.push(site);
            }
        }

        if let Some(correct) = original_typos.get(&i) {
            let fixed = match_case(surface, correct);
            if let Some(site) =
                RuleSite::new((i, i + 1), vec![surface.clone()], vec![vec![fixed]], "typo-original")
            {
                sites.push(site);
            }
        }
    }
    sites
}

/// Corrects one word: the reverse table is consulted first, then the nearest
/// correctly spelled word within distance 2 (ties as in `nearest`); a word
/// the lexicon knows, or one nothing is close to, is returned unchanged.
/// Leading capitalization carries over to the correction.
pub fn spell_correct(word: &str, lex: &TypoLexicon, spell: &SpellLexicon) -> String {
    let lower = word.to_lowercase();
    if let Some(correct) = lex.correct_for(&lower) {
        return match_case(word, correct);
    }
    let dist = DEFAULT_MAX_DIST.min(spell.max_dist());
    match spell.nearest(&lower, dist) {
        Some(best) if best != lower => match_case(word, best),
        _ => word.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::tokenize;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::cmp::Reverse;

    fn fixture_spell() -> SpellLexicon {
        let entries = [
            ("the", 5000),
            ("a", 3000),
            ("and", 2500),
            ("you", 2000),
            ("this", 1200),
            ("that", 1100),
            ("my", 1000),
            ("your", 900),
            ("were", 800),
            ("you're", 700),
            ("said", 700),
            ("don't", 500),
            ("can't", 400),
            ("we're", 300),
            ("friend", 300),
            ("walk", 250),
            ("talk", 240),
            ("cat", 200),
            ("walked", 180),
            ("happy", 180),
            ("car", 150),
            ("find", 140),
            ("kind", 135),
            ("mind", 132),
            ("hello", 130),
            ("cats", 120),
            ("world", 110),
            ("bad", 100),
            ("bat", 100),
            ("key", 95),
            ("care", 90),
            ("apple", 60),
            ("apply", 55),
            ("ample", 40),
        ];
        SpellLexicon::new(entries.iter().map(|(w, f)| (w.to_string(), *f)), 2)
    }

    fn fixture_typos() -> (SpellLexicon, TypoLexicon) {
        let spell = fixture_spell();
        let corpus = vec![
            "Teh cat said hello .".to_string(),
            "My freind said xqzv .".to_string(),
        ];
        let lex = build_typo_lexicon(&corpus, &spell, DEFAULT_MAX_DIST, "fixture");
        (spell, lex)
    }

    fn brute_nearest<'a>(
        spell: &'a SpellLexicon,
        word: &str,
        max_dist: usize,
    ) -> Option<&'a str> {
        let mut best: Option<(usize, Reverse<u64>, &str)> = None;
        for cand in spell.words() {
            let d = edit_distance(word, cand);
            if d > max_dist {
                continue;
            }
            let key = (d, Reverse(spell.frequency(cand).unwrap()), cand);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, w)| w)
    }

    #[test]
    fn nearest_matches_a_brute_force_scan() {
        let spell = fixture_spell();
        let alphabet: Vec<char> = "abcdefghijklmnopqrstuvwxyz'".chars().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut queries: Vec<String> = spell.words().map(String::from).collect();
        for word in spell.words() {
            for _ in 0..4 {
                let mut chars: Vec<char> = word.chars().collect();
                let edits = rng.gen_range(1..=3);
                for _ in 0..edits {
                    let kind = rng.gen_range(0..3);
                    let at = rng.gen_range(0..=chars.len().saturating_sub(1).max(0));
                    match kind {
                        0 if chars.len() > 1 => {
                            chars.remove(at.min(chars.len() - 1));
                        }
                        1 => {
                            let c = alphabet[rng.gen_range(0..alphabet.len())];
                            chars.insert(at.min(chars.len()), c);
                        }
                        _ if !chars.is_empty() => {
                            let c = alphabet[rng.gen_range(0..alphabet.len())];
                            let at = at.min(chars.len() - 1);
                            chars[at] = c;
                        }
                        _ => {}
                    }
                }
                queries.push(chars.into_iter().collect());
            }
        }
        queries.push("xqzv".to_string());
        queries.push("zzzzzzzz".to_string());
        for q in &queries {
            for dist in 1..=2 {
                assert_eq!(
                    spell.nearest(q, dist),
                    brute_nearest(&spell, q, dist),
                    "query {q:?} at distance {dist}"
                );
            }
        }
    }

    #[test]
    fn nearest_breaks_ties_by_frequency_then_spelling() {
        let spell = fixture_spell();
        // "bax" is one edit from both "bad" and "bat" (equal frequency):
        // the lexicographically smaller wins.
        assert_eq!(spell.nearest("bax", 2), Some("bad"));
        // "youre" is one edit from "your" (900) and "you're" (700): the more
        // frequent wins when the typo lexicon is not consulted.
        assert_eq!(spell.nearest("youre", 2), Some("your"));
        // In-lexicon words are their own match even with typos nearby.
        assert_eq!(spell.nearest("walk", 2), Some("walk"));
        assert_eq!(spell.nearest("xqzv", 2), None);
    }

    #[test]
    fn build_pairs_unknown_corpus_tokens_with_their_nearest_word() {
        let (_, lex) = fixture_typos();
        assert_eq!(lex.correct_for("teh"), Some("the"));
        // "freind" is two edits from both "friend" (300) and "find" (140);
        // frequency decides.
        assert_eq!(lex.correct_for("freind"), Some("friend"));
        assert_eq!(lex.correct_for("xqzv"), None);
        assert!(lex.misspellings_of("the").any(|m| m == "teh"));
        assert_eq!(lex.source(), "fixture");
    }

    #[test]
    fn build_records_apostrophe_strips_unless_they_collide() {
        let (_, lex) = fixture_typos();
        assert_eq!(lex.correct_for("youre"), Some("you're"));
        assert_eq!(lex.correct_for("dont"), Some("don't"));
        assert_eq!(lex.correct_for("cant"), Some("can't"));
        // Stripping "we're" yields the real word "were", which must keep
        // correcting to itself, so the pair is not recorded.
        assert_eq!(lex.correct_for("were"), None);
        assert!(lex.misspellings_of("we're").next().is_none());
    }

    #[test]
    fn built_lexicons_satisfy_the_table_invariants() {
        let (_, lex) = fixture_typos();
        assert!(!lex.is_empty());
        for (correct, miss) in lex.pairs() {
            assert_ne!(correct, miss);
            assert!(edit_distance(correct, miss) <= DEFAULT_MAX_DIST);
            assert_eq!(lex.correct_for(miss), Some(correct));
        }
        assert_eq!(lex.pairs().count(), lex.len());
    }

    #[test]
    fn every_lexicon_misspelling_corrects_back() {
        let (spell, lex) = fixture_typos();
        for (correct, miss) in lex.pairs() {
            assert_eq!(
                spell_correct(miss, &lex, &spell),
                correct,
                "{miss:?} should correct to {correct:?}"
            );
        }
    }

    #[test]
    fn sites_merge_clitics_and_stay_reversible() {
        let (spell, lex) = fixture_typos();
        let sentence = &tokenize("You're happy .")[0];
        let sites = typo_sites(sentence, &lex, &BTreeMap::new());
        let merge = sites
            .iter()
            .find(|s| s.rule == "typo-apostrophe")
            .expect("apostrophe site");
        assert_eq!(merge.span, (0, 2));
        assert_eq!(
            merge.options,
            vec![
                vec!["You".to_string(), "'re".to_string()],
                vec!["Youre".to_string()]
            ]
        );
        assert_eq!(spell_correct("Youre", &lex, &spell), "You're");

        // "We're" strips to a real word, so no site may be offered.
        let sentence = &tokenize("We're happy .")[0];
        let sites = typo_sites(sentence, &lex, &BTreeMap::new());
        assert!(sites.iter().all(|s| s.rule != "typo-apostrophe"));

        let sentence = &tokenize("You can't walk .")[0];
        let sites = typo_sites(sentence, &lex, &BTreeMap::new());
        let merge = sites
            .iter()
            .find(|s| s.rule == "typo-apostrophe")
            .expect("n't site");
        assert_eq!(merge.span, (1, 3));
        assert_eq!(merge.options[1], vec!["cant".to_string()]);
    }

    #[test]
    fn sites_offer_recorded_misspellings_with_capitals_kept() {
        let (spell, lex) = fixture_typos();
        let sentence = &tokenize("The cat said hello .")[0];
        let sites = typo_sites(sentence, &lex, &BTreeMap::new());
        let site = sites
            .iter()
            .find(|s| s.rule == "typo-misspelling" && s.span == (0, 1))
            .expect("misspelling site for The");
        assert_eq!(site.options[0], vec!["The".to_string()]);
        assert!(site.options[1..].contains(&vec!["Teh".to_string()]));
        assert_eq!(spell_correct("Teh", &lex, &spell), "The");
    }

    #[test]
    fn sites_let_original_typos_stay_or_be_fixed() {
        let (_, lex) = fixture_typos();
        let sentence = &tokenize("My freind said hello .")[0];
        let mut originals = BTreeMap::new();
        originals.insert(1usize, "friend".to_string());
        let sites = typo_sites(sentence, &lex, &originals);
        let site = sites
            .iter()
            .find(|s| s.rule == "typo-original")
            .expect("original-typo site");
        assert_eq!(site.span, (1, 2));
        assert_eq!(
            site.options,
            vec![vec!["freind".to_string()], vec!["friend".to_string()]]
        );
    }

    #[test]
    fn every_site_option_corrects_back_to_its_original() {
        let (spell, lex) = fixture_typos();
        let texts = [
            "You're happy and you can't talk .",
            "The cat walked and said hello .",
            "Don't mind my friend .",
            "You find the key and apply .",
        ];
        let mut checked = 0;
        for text in texts {
            for sentence in tokenize(text) {
                for site in typo_sites(&sentence, &lex, &BTreeMap::new()) {
                    if site.rule == "typo-original" {
                        continue;
                    }
                    let original = site.options[0].concat();
                    for option in &site.options[1..] {
                        assert_eq!(option.len(), 1);
                        assert_eq!(
                            spell_correct(&option[0], &lex, &spell),
                            original,
                            "option {:?} of {:?}",
                            option[0],
                            site.rule
                        );
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 5, "expected several options, saw {checked}");
    }

    #[test]
    fn correcting_correct_and_hopeless_words_is_the_identity() {
        let (spell, lex) = fixture_typos();
        assert_eq!(spell_correct("the", &lex, &spell), "the");
        assert_eq!(spell_correct("Hello", &lex, &spell), "Hello");
        assert_eq!(spell_correct("zzzzzzzz", &lex, &spell), "zzzzzzzz");
        assert_eq!(spell_correct("were", &lex, &spell), "were");
    }

    #[test]
    fn serialization_round_trips_bit_for_bit() {
        let (_, lex) = fixture_typos();
        let text = lex.serialize();
        assert!(text.starts_with("parchoice-typos-v1\n"));
        let reloaded = TypoLexicon::parse(Path::new("roundtrip"), &text).unwrap();
        assert_eq!(reloaded.serialize(), text);
        assert_eq!(reloaded.len(), lex.len());
        assert_eq!(reloaded.correct_for("teh"), Some("the"));
    }

    #[test]
    fn parse_rejects_malformed_files() {
        assert!(TypoLexicon::parse(Path::new("t"), "no header\nthe\tteh\n").is_err());
        assert!(TypoLexicon::parse(Path::new("t"), "parchoice-typos-v1\nthe teh\n").is_err());
        assert!(TypoLexicon::parse(Path::new("t"), "parchoice-typos-v1\nthe\tthe\n").is_err());
        assert!(
            TypoLexicon::parse(Path::new("t"), "parchoice-typos-v1\nthe\tteh\nta\tteh\n").is_err(),
            "a misspelling claimed twice must be rejected"
        );
        assert!(TypoLexicon::parse(Path::new("t"), "").is_err());
        let empty = TypoLexicon::parse(Path::new("t"), "parchoice-typos-v1\n").unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn spell_lexicon_parse_validates_lines() {
        let spell = SpellLexicon::parse(Path::new("s"), "the\t10\ncat\t3\n").unwrap();
        assert_eq!(spell.len(), 2);
        assert_eq!(spell.frequency("the"), Some(10));
        assert!(SpellLexicon::parse(Path::new("s"), "the ten\n").is_err());
        assert!(SpellLexicon::parse(Path::new("s"), "the\tten\n").is_err());
        assert!(SpellLexicon::parse(Path::new("s"), "\n").is_err());
    }
}
