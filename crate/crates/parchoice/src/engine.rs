//! The ParChoice core: combinatorial candidate generation under caps,
//! sentence-level selection against a surrogate profiler, and document-level
//! genetic selection against a query-access profiler.
//!
//! Generation runs a fixed stage order — grammar transforms, simple rules,
//! PPDB, WordNet, simple rules again, typos. Within a stage, the options of
//! non-overlapping sites combine as a Cartesian product; after every stage
//! the pool is pruned to the edit-distance cap, deduplicated, sorted by
//! (edit distance, text, token sequence) and truncated to the beam. PPDB and
//! WordNet applications share a per-sentence budget. Everything is
//! deterministic: identical inputs, resources and seeds give bit-identical
//! results.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::meteor::meteor_score;
use crate::profilers::ProfilerModel;
use crate::resources::ResourceBundle;
use crate::rules::{negation_wrap, passivize, question_rewrite, simple_rule_sites, RuleSite};
use crate::substitution::{ppdb_sites, wordnet_sites};
use crate::text::{
    detokenize, edit_distance, CandidateSentence, Document, Sentence, TraceEntry, STAGE_PPDB,
    STAGE_SIMPLE, STAGE_TYPOS, STAGE_WORDNET,
};
use crate::typos::{spell_correct, typo_sites};

/// Caps that bound combinatorial candidate generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationCaps {
    /// Maximum character edit distance of a candidate from the original.
    pub edit_cap: usize,
    /// Budget of PPDB + WordNet substitution applications per sentence.
    pub subs_cap: usize,
    /// Maximum candidate-pool size after each stage.
    pub beam: usize,
}

impl Default for GenerationCaps {
    fn default() -> GenerationCaps {
        GenerationCaps { edit_cap: 10, subs_cap: 1000, beam: 1000 }
    }
}

/// Parameters of the document-level genetic search.
#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    /// Children spawned from each survivor per iteration.
    pub runs_per_iteration: usize,
    pub max_iterations: usize,
    /// Weight of semantic retainment in the fitness; pairs with
    /// `prob_weight`, the two must sum to 1.
    pub meteor_weight: f64,
    /// Weight of 1 − p(true class) in the fitness.
    pub prob_weight: f64,
    /// Population kept between iterations.
    pub survivors: usize,
    pub seed: u64,
}

impl Default for GaParams {
    fn default() -> GaParams {
        GaParams {
            runs_per_iteration: 100,
            max_iterations: 25,
            meteor_weight: 0.25,
            prob_weight: 0.75,
            survivors: 5,
            seed: 0,
        }
    }
}

/// How a sentence's replacement is picked from its candidate set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionMode {
    Targeted,
    Random,
}

/// What happened to one sentence of a transformed document.
#[derive(Debug, Clone, PartialEq)]
pub struct SentenceOutcome {
    /// Detokenized input sentence.
    pub original: String,
    /// Detokenized selected candidate.
    pub text: String,
    pub trace: Vec<TraceEntry>,
    /// Number of candidates generated for this sentence; 0 when generation
    /// was never invoked (as for sentences a genetic run left untouched).
    pub candidate_count: usize,
    /// p(target) − p(source) of the selection; `None` under random or
    /// genetic selection.
    pub score: Option<f64>,
}

/// Summary of a document-level genetic search.
#[derive(Debug, Clone, PartialEq)]
pub struct GaSummary {
    pub iterations: usize,
    pub fitness: f64,
    /// Whether the returned document is misclassified by the profiler.
    pub misclassified: bool,
}

/// A transformed document with its per-sentence provenance. The outcome
/// list is index-aligned with the input document's sentences.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult {
    pub document: Document,
    pub outcomes: Vec<SentenceOutcome>,
    pub ga: Option<GaSummary>,
}

/// Fraction of sentences whose final text differs from the original.
pub fn transformed_sentence_rate(result: &TransformResult) -> f64 {
    if result.outcomes.is_empty() {
        return 0.0;
    }
    let changed = result.outcomes.iter().filter(|o| o.text != o.original).count();
    changed as f64 / result.outcomes.len() as f64
}

/// Fills in missing POS tags, leaving already tagged tokens untouched, so
/// hand-tagged fixtures and carried-over tags survive restaging.
fn ensure_tagged(sentence: &mut Sentence, resources: &ResourceBundle) {
    if sentence.tokens.iter().all(|t| t.tag.is_some()) {
        return;
    }
    let words: Vec<&str> = sentence.tokens.iter().map(|t| t.surface.as_str()).collect();
    let tags = resources.tagger.predict(&words);
    for (token, tag) in sentence.tokens.iter_mut().zip(tags) {
        if token.tag.is_none() {
            token.tag = Some(tag);
        }
    }
}

/// Whole-sentence grammar rewrites of the original: the passive, the
/// negation wrap, the question rewrite, and the negation wrap of the
/// passive (the one two-step composition the transforms admit).
fn grammar_candidates(original: &Sentence, resources: &ResourceBundle) -> Vec<CandidateSentence> {
    let mut out = Vec::new();
    let passive = passivize(original, &resources.inflections);
    if let Some(p) = &passive {
        out.push(p.clone());
    }
    out.extend(negation_wrap(original, &resources.inflections));
    out.extend(question_rewrite(original, &resources.inflections));
    if let Some(p) = &passive {
        let mut passive_sentence = Sentence {
            tokens: p.tokens.clone(),
            original_text: original.original_text.clone(),
        };
        ensure_tagged(&mut passive_sentence, resources);
        for wrapped in negation_wrap(&passive_sentence, &resources.inflections) {
            let mut composed = wrapped;
            let mut trace = p.trace.clone();
            trace.append(&mut composed.trace);
            composed.trace = trace;
            out.push(composed);
        }
    }
    out
}

/// Sites of one substitution stage, computed on a tagged sentence.
fn stage_sites(
    stage: &'static str,
    sentence: &Sentence,
    resources: &ResourceBundle,
) -> Vec<RuleSite> {
    match stage {
        STAGE_SIMPLE => simple_rule_sites(sentence),
        STAGE_PPDB => ppdb_sites(sentence, &resources.ppdb),
        STAGE_WORDNET => wordnet_sites(sentence, &resources.wordnet, &resources.inflections),
        STAGE_TYPOS => {
            let map = original_typo_entries(sentence, resources);
            typo_sites(sentence, &resources.typos, &map)
        }
        other => unreachable!("not a site stage: {other}"),
    }
}

/// Tokens of the sentence that are misspellings: absent from the spell
/// lexicon with a correction in reach. Maps token index → correction.
fn original_typo_entries(
    sentence: &Sentence,
    resources: &ResourceBundle,
) -> BTreeMap<usize, String> {
    let mut map = BTreeMap::new();
    for (i, token) in sentence.tokens.iter().enumerate() {
        let lower = token.lower();
        if lower.chars().count() < 2
            || !lower.chars().any(|c| c.is_alphabetic())
            || resources.spell.contains(&lower)
        {
            continue;
        }
        let fixed = spell_correct(&lower, &resources.typos, &resources.spell);
        if fixed != lower {
            map.insert(i, fixed);
        }
    }
    map
}

/// Merges sites that share a span into one site with the union of their
/// options, returning the sites ordered by span.
fn merge_same_span(sites: Vec<RuleSite>) -> Vec<RuleSite> {
    let mut by_span: BTreeMap<(usize, usize), RuleSite> = BTreeMap::new();
    for site in sites {
        match by_span.entry(site.span) {
            Entry::Vacant(v) => {
                v.insert(site);
            }
            Entry::Occupied(mut o) => {
                let merged = o.get_mut();
                for option in site.options.into_iter().skip(1) {
                    if !merged.options.contains(&option) {
                        merged.options.push(option);
                    }
                }
            }
        }
    }
    by_span.into_values().collect()
}

/// Prunes candidates over the edit cap (the untransformed original is
/// exempt), sorts by (edit distance, text, token sequence), drops duplicate
/// token sequences, and truncates to the beam, reinstating the original if
/// truncation evicted it.
fn finish_stage(
    mut pool: Vec<CandidateSentence>,
    original: &Sentence,
    caps: &GenerationCaps,
) -> Vec<CandidateSentence> {
    pool.retain(|c| c.trace.is_empty() || c.edit_distance <= caps.edit_cap);
    pool.sort_by_cached_key(|c| (c.edit_distance, c.text(), c.surface_key()));
    let mut seen = BTreeSet::new();
    pool.retain(|c| seen.insert(c.surface_key()));
    pool.truncate(caps.beam);

    let reference = CandidateSentence::original(original);
    if !pool.iter().any(|c| c.surface_key() == reference.surface_key()) {
        if pool.len() == caps.beam {
            pool.pop();
        }
        let key = (reference.edit_distance, reference.text(), reference.surface_key());
        let pos = pool
            .binary_search_by_key(&key, |c| (c.edit_distance, c.text(), c.surface_key()))
            .unwrap_or_else(|e| e);
        pool.insert(pos, reference);
    }
    pool
}

/// Expands every pool member through one substitution stage: computes the
/// stage's sites per candidate, enumerates selections of non-overlapping
/// site options breadth-first in site-and-option order, and materializes at
/// most `beam` changed variants per stage. PPDB and WordNet stages debit
/// one unit per applied option from the shared substitution budget.
fn run_site_stage(
    pool: Vec<CandidateSentence>,
    stage: &'static str,
    original: &Sentence,
    resources: &ResourceBundle,
    caps: &GenerationCaps,
    subs_used: &mut usize,
) -> Vec<CandidateSentence> {
    let counted = stage == STAGE_PPDB || stage == STAGE_WORDNET;
    let mut out: Vec<CandidateSentence> = pool.clone();
    let mut emitted = 0usize;

    for cand in &pool {
        if emitted >= caps.beam {
            break;
        }
        let mut tagged = Sentence {
            tokens: cand.tokens.clone(),
            original_text: original.original_text.clone(),
        };
        ensure_tagged(&mut tagged, resources);
        let sites = merge_same_span(stage_sites(stage, &tagged, resources));
        if sites.is_empty() {
            continue;
        }

        // Selections as (site index, option index ≥ 1) lists; the running
        // `end` guards span overlap. The all-skip selection stays first.
        let mut selections: Vec<(Vec<(usize, usize)>, usize)> = vec![(Vec::new(), 0)];
        for (si, site) in sites.iter().enumerate() {
            let mut next = Vec::with_capacity(selections.len());
            for (changes, end) in &selections {
                next.push((changes.clone(), *end));
                if site.span.0 >= *end {
                    for oi in 1..site.options.len() {
                        let mut extended = changes.clone();
                        extended.push((si, oi));
                        next.push((extended, site.span.1));
                    }
                }
            }
            next.truncate(caps.beam + 1);
            selections = next;
        }

        for (changes, _) in selections.iter().skip(1) {
            if emitted >= caps.beam {
                break;
            }
            if counted && *subs_used + changes.len() > caps.subs_cap {
                continue;
            }
            let mut tokens = tagged.tokens.clone();
            for &(si, oi) in changes.iter().rev() {
                tokens = sites[si].apply_option(&tokens, oi);
            }
            let text = detokenize(&tokens);
            let ed = edit_distance(&text, &original.original_text);
            if ed > caps.edit_cap {
                continue;
            }
            if counted {
                *subs_used += changes.len();
            }
            let mut trace = cand.trace.clone();
            for &(si, _) in changes {
                trace.push(TraceEntry {
                    stage,
                    span: sites[si].span,
                    rule: sites[si].rule.clone(),
                });
            }
            out.push(CandidateSentence { tokens, trace, edit_distance: ed });
            emitted += 1;
        }
    }
    finish_stage(out, original, caps)
}

/// Generates the paraphrase candidate set of one sentence. The sentence is
/// tagged on demand; the original is always in the returned set, which is
/// sorted by (edit distance, text, token sequence) and free of duplicate
/// token sequences.
pub fn generate_candidates(
    sentence: &Sentence,
    resources: &ResourceBundle,
    caps: &GenerationCaps,
) -> Vec<CandidateSentence> {
    assert!(caps.subs_cap >= 1, "subs_cap must be positive");
    assert!(caps.beam >= 1, "beam must be positive");

    let mut original = sentence.clone();
    ensure_tagged(&mut original, resources);

    let mut pool = vec![CandidateSentence::original(&original)];
    pool.extend(grammar_candidates(&original, resources));
    pool = finish_stage(pool, &original, caps);

    let mut subs_used = 0usize;
    for stage in [STAGE_SIMPLE, STAGE_PPDB, STAGE_WORDNET, STAGE_SIMPLE, STAGE_TYPOS] {
        pool = run_site_stage(pool, stage, &original, resources, caps, &mut subs_used);
    }
    pool
}

/// Picks the candidate with the highest p(target) − p(source) under the
/// surrogate; ties go to the fewest edits, then the lexicographically
/// smallest text. Returns the candidate with its score.
pub fn select_sentence(
    candidates: &[CandidateSentence],
    surrogate: &ProfilerModel,
    source: &str,
    target: &str,
) -> Result<(CandidateSentence, f64)> {
    if candidates.is_empty() {
        return Err(Error::task("candidate set is empty"));
    }
    if source == target {
        return Err(Error::task(format!("source and target class must differ, both are {source:?}")));
    }
    let si = surrogate
        .class_index(source)
        .ok_or_else(|| Error::task(format!("class {source:?} not in the surrogate model")))?;
    let ti = surrogate
        .class_index(target)
        .ok_or_else(|| Error::task(format!("class {target:?} not in the surrogate model")))?;

    let mut best: Option<(f64, usize, String, usize)> = None;
    for (i, cand) in candidates.iter().enumerate() {
        let text = cand.text();
        let probs = surrogate.predict_proba(&text);
        let score = probs[ti] - probs[si];
        let better = match &best {
            None => true,
            Some((s, ed, t, _)) => {
                score > *s || (score == *s && (cand.edit_distance, &text) < (*ed, t))
            }
        };
        if better {
            best = Some((score, cand.edit_distance, text, i));
        }
    }
    let (score, _, _, index) = best.expect("candidates are non-empty");
    Ok((candidates[index].clone(), score))
}

/// Picks a candidate uniformly at random.
pub fn select_random(candidates: &[CandidateSentence], rng: &mut ChaCha8Rng) -> CandidateSentence {
    assert!(!candidates.is_empty(), "candidate set is empty");
    candidates[rng.gen_range(0..candidates.len())].clone()
}

/// Transforms a document sentence by sentence: generate candidates, select
/// one per sentence independently. Deterministic given the seed.
#[allow(clippy::too_many_arguments)]
pub fn transform_document_sentencewise(
    doc: &Document,
    resources: &ResourceBundle,
    caps: &GenerationCaps,
    surrogate: Option<&ProfilerModel>,
    source: &str,
    target: &str,
    mode: SelectionMode,
    seed: u64,
) -> Result<TransformResult> {
    let surrogate = match mode {
        SelectionMode::Targeted => Some(
            surrogate.ok_or_else(|| Error::task("targeted selection requires a surrogate"))?,
        ),
        SelectionMode::Random => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sentences = Vec::with_capacity(doc.sentences.len());
    let mut outcomes = Vec::with_capacity(doc.sentences.len());
    for sentence in &doc.sentences {
        let candidates = generate_candidates(sentence, resources, caps);
        let (chosen, score) = match surrogate {
            Some(model) => {
                let (c, s) = select_sentence(&candidates, model, source, target)?;
                (c, Some(s))
            }
            None => (select_random(&candidates, &mut rng), None),
        };
        let text = chosen.text();
        outcomes.push(SentenceOutcome {
            original: sentence.text(),
            text: text.clone(),
            trace: chosen.trace.clone(),
            candidate_count: candidates.len(),
            score,
        });
        sentences.push(Sentence { tokens: chosen.tokens, original_text: text });
    }
    Ok(TransformResult {
        document: Document { id: doc.id.clone(), label: doc.label.clone(), sentences },
        outcomes,
        ga: None,
    })
}

/// One member of the genetic population: per-sentence candidate choices
/// (−1 = untouched original, else an index into the sentence's candidate
/// set), with its evaluated fitness.
#[derive(Clone)]
struct Member {
    choices: Vec<i64>,
    fitness: f64,
    misclassified: bool,
}

fn unchanged_result(doc: &Document, summary: GaSummary) -> TransformResult {
    let outcomes = doc
        .sentences
        .iter()
        .map(|s| {
            let text = s.text();
            SentenceOutcome {
                original: text.clone(),
                text,
                trace: Vec::new(),
                candidate_count: 0,
                score: None,
            }
        })
        .collect();
    TransformResult { document: doc.clone(), outcomes, ga: Some(summary) }
}

/// Transforms a document by genetic search against a profiler the search
/// may query. An already misclassified document is returned unchanged.
/// Each iteration spawns `runs_per_iteration` children per survivor; a
/// child re-draws one uniformly chosen sentence to one uniformly chosen
/// candidate. Fitness is prob_weight·(1 − p(true class)) +
/// meteor_weight·METEOR(child, original). The search stops early once any
/// child is misclassified and returns the best-fitness misclassified
/// document, else the best-fitness survivor.
pub fn transform_document_ga(
    doc: &Document,
    resources: &ResourceBundle,
    caps: &GenerationCaps,
    profiler: &ProfilerModel,
    true_class: &str,
    params: &GaParams,
) -> Result<TransformResult> {
    if params.meteor_weight < 0.0
        || params.prob_weight < 0.0
        || (params.meteor_weight + params.prob_weight - 1.0).abs() > 1e-9
    {
        return Err(Error::task(format!(
            "meteor_weight and prob_weight must be non-negative and sum to 1, got {} and {}",
            params.meteor_weight, params.prob_weight
        )));
    }
    if params.survivors == 0 || params.runs_per_iteration == 0 {
        return Err(Error::task("survivors and runs_per_iteration must be positive"));
    }
    let class_index = profiler
        .class_index(true_class)
        .ok_or_else(|| Error::task(format!("class {true_class:?} not in the profiler")))?;

    let original_text = doc.text();
    let originals: Vec<String> = doc.sentences.iter().map(Sentence::text).collect();
    let n = doc.sentences.len();

    let evaluate = |text: &str| -> (f64, bool) {
        let probs = profiler.predict_proba(text);
        let mut argmax = 0;
        for k in 1..probs.len() {
            if probs[k] > probs[argmax] {
                argmax = k;
            }
        }
        let retainment = meteor_score(text, &original_text, Some(&resources.wordnet));
        let fitness =
            params.prob_weight * (1.0 - probs[class_index]) + params.meteor_weight * retainment;
        (fitness, argmax != class_index)
    };

    let (initial_fitness, initially_misclassified) = evaluate(&original_text);
    if initially_misclassified || params.max_iterations == 0 || n == 0 {
        return Ok(unchanged_result(
            doc,
            GaSummary {
                iterations: 0,
                fitness: initial_fitness,
                misclassified: initially_misclassified,
            },
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut candidate_cache: Vec<Option<Vec<CandidateSentence>>> = vec![None; n];
    let mut text_cache: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut survivors = vec![Member {
        choices: vec![-1; n],
        fitness: initial_fitness,
        misclassified: false,
    }];
    let mut best_misclassified: Option<Member> = None;
    let mut best_fitness = initial_fitness;
    let mut iterations = 0;

    for _ in 0..params.max_iterations {
        iterations += 1;
        let mut children: Vec<Member> = Vec::new();
        for parent in &survivors {
            for _ in 0..params.runs_per_iteration {
                let s = rng.gen_range(0..n);
                if candidate_cache[s].is_none() {
                    let set = generate_candidates(&doc.sentences[s], resources, caps);
                    text_cache[s] = set.iter().map(CandidateSentence::text).collect();
                    candidate_cache[s] = Some(set);
                }
                let set_len = candidate_cache[s].as_ref().map_or(0, Vec::len);
                let c = rng.gen_range(0..set_len);

                let mut choices = parent.choices.clone();
                choices[s] = c as i64;
                let text = compose_text(&originals, &text_cache, &choices);
                let (fitness, misclassified) = evaluate(&text);
                children.push(Member { choices, fitness, misclassified });
            }
        }
        for child in &children {
            if child.misclassified
                && best_misclassified.as_ref().is_none_or(|b| child.fitness > b.fitness)
            {
                best_misclassified = Some(child.clone());
            }
        }
        let mut pool: Vec<Member> = survivors.iter().cloned().chain(children).collect();
        pool.sort_by(|a, b| {
            b.fitness
                .partial_cmp(&a.fitness)
                .expect("fitness is finite")
                .then_with(|| a.choices.cmp(&b.choices))
        });
        pool.truncate(params.survivors);
        survivors = pool;
        assert!(survivors[0].fitness >= best_fitness, "best survivor fitness decreased");
        best_fitness = survivors[0].fitness;
        if best_misclassified.is_some() {
            break;
        }
    }

    let winner = best_misclassified.unwrap_or_else(|| survivors[0].clone());
    let mut sentences = Vec::with_capacity(n);
    let mut outcomes = Vec::with_capacity(n);
    for i in 0..n {
        let generated = candidate_cache[i].as_ref().map_or(0, Vec::len);
        if winner.choices[i] < 0 {
            sentences.push(doc.sentences[i].clone());
            outcomes.push(SentenceOutcome {
                original: originals[i].clone(),
                text: originals[i].clone(),
                trace: Vec::new(),
                candidate_count: generated,
                score: None,
            });
        } else {
            let candidate = &candidate_cache[i].as_ref().expect("chosen sets are cached")
                [winner.choices[i] as usize];
            let text = candidate.text();
            outcomes.push(SentenceOutcome {
                original: originals[i].clone(),
                text: text.clone(),
                trace: candidate.trace.clone(),
                candidate_count: generated,
                score: None,
            });
            sentences.push(Sentence { tokens: candidate.tokens.clone(), original_text: text });
        }
    }
    Ok(TransformResult {
        document: Document { id: doc.id.clone(), label: doc.label.clone(), sentences },
        outcomes,
        ga: Some(GaSummary {
            iterations,
            fitness: winner.fitness,
            misclassified: winner.misclassified,
        }),
    })
}

/// The document text of a choice vector: chosen candidate texts (or the
/// original sentence text) joined like `Document::text`.
fn compose_text(originals: &[String], text_cache: &[Vec<String>], choices: &[i64]) -> String {
    let parts: Vec<&str> = choices
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if c < 0 {
                originals[i].as_str()
            } else {
                text_cache[i][c as usize].as_str()
            }
        })
        .collect();
    parts.join(" ")
}
