//! End-to-end acceptance tests: one test per release criterion. Each test
//! prints a `criterion N PASS` line with its measured quantities (visible
//! with `--nocapture`); the hard gates are ordinary assertions. Everything
//! is seeded, so every run measures the same candidates, models, and
//! transforms.

use std::path::Path;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parchoice::engine::{
    generate_candidates, transform_document_ga, transform_document_sentencewise,
    transformed_sentence_rate, GaParams, GenerationCaps, SelectionMode,
};
use parchoice::meteor::meteor_score;
use parchoice::profilers::{
    adversarial_retrain, default_function_words, evaluate_accuracy, gradient_check, train_mlp,
    train_logreg_with_history, MlpConfig, ProfilerModel, ProfilerTrainer,
};
use parchoice::resources::ResourceBundle;
use parchoice::substitution::{parse_ppdb, parse_wordnet};
use parchoice::synth::{
    author_documents, fixture_bundle, style_corpus, tagged_corpus, StyleClass,
};
use parchoice::text::{edit_distance, STAGE_PPDB, STAGE_WORDNET};
use parchoice::typos::{build_typo_lexicon, spell_correct, SpellLexicon, TypoLexicon};
use parchoice::{Document, Sentence};

/// The shared synthetic-world bundle; built once per process.
fn world() -> &'static ResourceBundle {
    static WORLD: OnceLock<ResourceBundle> = OnceLock::new();
    WORLD.get_or_init(|| fixture_bundle(7))
}

fn function_words() -> &'static [String] {
    static WORDS: OnceLock<Vec<String>> = OnceLock::new();
    WORDS.get_or_init(default_function_words)
}

fn tagged_sentence(line: &str, tags: &[&str]) -> Sentence {
    let mut s = Sentence::from_line(line);
    assert_eq!(s.tokens.len(), tags.len(), "tag count for {line:?}");
    for (token, tag) in s.tokens.iter_mut().zip(tags) {
        token.tag = Some(tag.to_string());
    }
    s
}

fn candidate_texts(sentence: &Sentence, bundle: &ResourceBundle, caps: &GenerationCaps) -> Vec<String> {
    generate_candidates(sentence, bundle, caps)
        .iter()
        .map(|c| c.text())
        .collect()
}

fn labeled(lines: &[String], class: &str) -> Vec<(String, String)> {
    lines.iter().map(|l| (l.clone(), class.to_string())).collect()
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

// --- criterion 1 -----------------------------------------------------------

/// A bundle whose substitution lexicons hold exactly the worked examples:
/// one noun paraphrase and one clause-context phrase paraphrase.
fn example_bundle() -> ResourceBundle {
    const EXAMPLE_PPDB: &str = "\
[NN] ||| restriction ||| constraint ||| 1.0 ||| 0-0 ||| Equivalence
[S/S] ||| i am sorry ||| i regret ||| 1.0 ||| 0-0 ||| Equivalence
";
    // A single-lemma synset offers no synonyms, so the only substitutions
    // this bundle can make are the two phrase pairs above.
    const EXAMPLE_WORDNET: &str = "dog.n.01\tn\tdog\ta domesticated canid kept by people\n";
    let base = world();
    ResourceBundle {
        tagger: base.tagger.clone(),
        inflections: base.inflections.clone(),
        ppdb: parse_ppdb(Path::new("examples"), EXAMPLE_PPDB).expect("fixture parses"),
        wordnet: parse_wordnet(Path::new("examples"), EXAMPLE_WORDNET).expect("fixture parses"),
        spell: base.spell.clone(),
        typos: TypoLexicon::new("empty"),
    }
}

#[test]
fn criterion_1_fixture_fidelity() {
    let bundle = example_bundle();
    let start = Instant::now();

    // Passivization: the canonical transitive clause gains its passive
    // counterpart. The rewrite moves 17 characters' worth of text, so the
    // cap must admit it.
    let caps = GenerationCaps { edit_cap: 25, ..GenerationCaps::default() };
    let texts = candidate_texts(&Sentence::from_line("John saw Mary."), &bundle, &caps);
    assert!(
        texts.iter().any(|t| t == "Mary was seen by John."),
        "passive missing from {texts:?}"
    );

    // Single-noun paraphrase under the default caps, exact match.
    let caps = GenerationCaps::default();
    let sentence = tagged_sentence("The restriction was old.", &["DT", "NN", "VBD", "JJ", "."]);
    let texts = candidate_texts(&sentence, &bundle, &caps);
    assert!(
        texts.iter().any(|t| t == "The constraint was old."),
        "noun paraphrase missing from {texts:?}"
    );

    // The [S/S] phrase pair needs a following clause: it fires before
    // ", he left" but not before the noun phrase "the dog".
    let sentence = tagged_sentence(
        "I am sorry, he left.",
        &["PRP", "VBP", "JJ", ",", "PRP", "VBD", "."],
    );
    let texts = candidate_texts(&sentence, &bundle, &caps);
    assert!(
        texts.iter().any(|t| t == "I regret, he left."),
        "clause-context paraphrase missing from {texts:?}"
    );

    let sentence = tagged_sentence(
        "I am sorry the dog left.",
        &["PRP", "VBP", "JJ", "DT", "NN", "VBD", "."],
    );
    let texts = candidate_texts(&sentence, &bundle, &caps);
    assert!(
        texts.iter().all(|t| !t.contains("regret")),
        "[S/S] fired before a noun phrase: {texts:?}"
    );

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 1 PASS — passive, noun, and clause-context fixtures exact-matched in {elapsed:.1?}"
    );
}

// --- criterion 2 -----------------------------------------------------------

fn subs_applied(candidate: &parchoice::CandidateSentence) -> usize {
    candidate
        .trace
        .iter()
        .filter(|e| e.stage == STAGE_PPDB || e.stage == STAGE_WORDNET)
        .count()
}

#[test]
fn criterion_2_cap_enforcement() {
    let lines: Vec<String> = tagged_corpus(1000, 21)
        .iter()
        .map(|s| s.iter().map(|(w, _)| w.as_str()).collect::<Vec<_>>().join(" "))
        .collect();
    assert_eq!(lines.len(), 1000);

    let caps = GenerationCaps::default();
    let mut total = 0usize;
    for line in &lines {
        let pool = generate_candidates(&Sentence::from_line(line), world(), &caps);
        for c in &pool {
            assert!(
                subs_applied(c) <= caps.subs_cap,
                "substitution budget exceeded on {line:?}"
            );
            if c.trace.is_empty() {
                continue; // the original itself, exempt from the edit cap
            }
            let ed = edit_distance(&c.text(), line);
            assert!(
                ed <= caps.edit_cap,
                "edit distance {ed} > {} for {:?} from {line:?}",
                caps.edit_cap,
                c.text()
            );
        }
        total += pool.len();
    }

    // A deliberately tight budget binds per candidate as well.
    let tight = GenerationCaps { subs_cap: 2, ..GenerationCaps::default() };
    for line in lines.iter().take(200) {
        for c in generate_candidates(&Sentence::from_line(line), world(), &tight) {
            assert!(subs_applied(&c) <= 2, "budget 2 exceeded on {line:?}");
        }
    }

    println!(
        "criterion 2 PASS — {total} candidates over 1000 sentences, all within edit cap {} and substitution budget {}",
        caps.edit_cap, caps.subs_cap
    );
}

// --- criterion 3 -----------------------------------------------------------

/// One seeded character-level mutation: delete, swap, or duplicate.
fn mutate_word(word: &str, rng: &mut ChaCha8Rng) -> String {
    let chars: Vec<char> = word.chars().collect();
    let mut out = chars.clone();
    match rng.gen_range(0..3u32) {
        0 => {
            out.remove(rng.gen_range(0..out.len()));
        }
        1 => {
            let i = rng.gen_range(0..out.len() - 1);
            out.swap(i, i + 1);
        }
        _ => {
            let i = rng.gen_range(0..out.len());
            out.insert(i, out[i]);
        }
    }
    out.into_iter().collect()
}

#[test]
fn criterion_3_typo_reversibility() {
    use parchoice::synth::fixture_spell;

    // The fixture spelling lexicon plus a few apostrophe words for the
    // apostrophe-removal pass.
    let spell_text = format!(
        "{}you're\t120\ni'm\t120\nthey've\t120\ndon't\t120\n",
        fixture_spell()
    );
    let spell = SpellLexicon::parse(Path::new("criterion3"), &spell_text).unwrap();

    // A corpus of ten thousand tokens with seeded misspellings sprinkled in.
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let mut tokens = 0usize;
    let mut injected = 0usize;
    let lines: Vec<String> = tagged_corpus(1800, 33)
        .iter()
        .map(|sentence| {
            let words: Vec<String> = sentence
                .iter()
                .map(|(w, _)| {
                    tokens += 1;
                    let lower = w.to_lowercase();
                    if lower.chars().count() >= 4
                        && lower.chars().all(|c| c.is_alphabetic())
                        && spell.contains(&lower)
                        && rng.gen_bool(0.08)
                    {
                        let bad = mutate_word(&lower, &mut rng);
                        if !bad.is_empty() && bad != lower && !spell.contains(&bad) {
                            injected += 1;
                            return bad;
                        }
                    }
                    w.clone()
                })
                .collect();
            words.join(" ")
        })
        .collect();
    assert!(tokens >= 10_000, "corpus has only {tokens} tokens");
    assert!(injected >= 100, "only {injected} misspellings injected");

    let lex = build_typo_lexicon(&lines, &spell, 2, "fuzz-corpus");
    assert!(lex.len() >= 30, "only {} entries", lex.len());

    // Every forward entry corrects back, and the apostrophe strips reverse.
    let mut checked = 0usize;
    for (correct, miss) in lex.pairs() {
        assert_eq!(
            spell_correct(miss, &lex, &spell),
            correct,
            "{miss:?} does not correct back"
        );
        checked += 1;
    }
    for (word, stripped) in [
        ("you're", "youre"),
        ("i'm", "im"),
        ("they've", "theyve"),
        ("don't", "dont"),
    ] {
        assert_eq!(lex.correct_for(stripped), Some(word), "{word} strip missing");
        assert_eq!(spell_correct(stripped, &lex, &spell), word);
    }

    println!(
        "criterion 3 PASS — {checked} forward entries all correct back ({tokens} tokens, {injected} injected misspellings)"
    );
}

// --- criteria 4, 5 and 7 share one set of styled experiment runs ------------

struct ModeOutcome {
    /// Accuracy drop on class-a test sentences transformed a → b.
    decrease_to_b: f64,
    /// Accuracy drop on class-b test sentences transformed b → a.
    decrease_to_a: f64,
    /// Evaluation accuracy on the transformed test union before retraining.
    before: f64,
    /// The same accuracy after adversarial retraining.
    after: f64,
}

impl ModeOutcome {
    fn mean_decrease(&self) -> f64 {
        (self.decrease_to_b + self.decrease_to_a) / 2.0
    }
}

struct StyleRun {
    original_accuracy: f64,
    targeted: ModeOutcome,
    random: ModeOutcome,
    /// Mean METEOR between each original test sentence and its targeted
    /// transform, both directions pooled.
    meteor_mean: f64,
}

struct StyleRuns {
    runs: Vec<StyleRun>,
    /// Time spent generating corpora, training profilers, and transforming
    /// and scoring the test sets.
    transfer_elapsed: Duration,
    /// Time spent transforming the training sets and retraining.
    retrain_elapsed: Duration,
}

fn transform_lines(
    lines: &[String],
    surrogate: &ProfilerModel,
    source: &str,
    target: &str,
    mode: SelectionMode,
    seed: u64,
) -> Vec<String> {
    let doc = Document {
        id: format!("{source}-to-{target}"),
        label: Some(source.to_string()),
        sentences: lines.iter().map(|l| Sentence::from_line(l)).collect(),
    };
    let result = transform_document_sentencewise(
        &doc,
        world(),
        &GenerationCaps::default(),
        Some(surrogate),
        source,
        target,
        mode,
        seed,
    )
    .unwrap();
    result.outcomes.into_iter().map(|o| o.text).collect()
}

/// Five seeded runs of the styled two-class experiment: 2000 train + 500
/// test sentences per class, an evaluation profiler on 85% of the training
/// data, a surrogate on the disjoint 15%, transforms of the test and
/// training sets in both directions under both selection modes, and
/// adversarial retraining. Computed once and shared by criteria 4, 5 and 7.
fn style_runs() -> &'static StyleRuns {
    static RUNS: OnceLock<StyleRuns> = OnceLock::new();
    RUNS.get_or_init(|| {
        let trainer = ProfilerTrainer::logreg_default();
        let mut runs = Vec::new();
        let mut transfer_elapsed = Duration::ZERO;
        let mut retrain_elapsed = Duration::ZERO;

        for s in 0..5u64 {
            let clock = Instant::now();
            let train_a = style_corpus(StyleClass::A, 2000, 1000 + s);
            let train_b = style_corpus(StyleClass::B, 2000, 2000 + s);
            let test_a = style_corpus(StyleClass::A, 500, 3000 + s);
            let test_b = style_corpus(StyleClass::B, 500, 4000 + s);

            let mut surrogate_data = labeled(&train_a[..300], "a");
            surrogate_data.extend(labeled(&train_b[..300], "b"));
            let mut eval_data = labeled(&train_a[300..], "a");
            eval_data.extend(labeled(&train_b[300..], "b"));
            let mut test_data = labeled(&test_a, "a");
            test_data.extend(labeled(&test_b, "b"));

            let eval_model = trainer.train(&eval_data).unwrap();
            let surrogate = trainer.train(&surrogate_data).unwrap();
            let original = evaluate_accuracy(&eval_model, &test_data).unwrap();
            transfer_elapsed += clock.elapsed();

            let mut outcomes = Vec::new();
            let mut meteor_mean = 0.0;
            for mode in [SelectionMode::Targeted, SelectionMode::Random] {
                let clock = Instant::now();
                let trans_a = transform_lines(&test_a, &surrogate, "a", "b", mode, s);
                let trans_b = transform_lines(&test_b, &surrogate, "b", "a", mode, s);
                let mut trans_test = labeled(&trans_a, "a");
                trans_test.extend(labeled(&trans_b, "b"));
                let report = evaluate_accuracy(&eval_model, &trans_test).unwrap();

                if mode == SelectionMode::Targeted {
                    let scores: Vec<f64> = test_a
                        .iter()
                        .zip(&trans_a)
                        .chain(test_b.iter().zip(&trans_b))
                        .map(|(orig, trans)| meteor_score(trans, orig, Some(&world().wordnet)))
                        .collect();
                    meteor_mean = mean(&scores);
                }
                transfer_elapsed += clock.elapsed();

                let clock = Instant::now();
                let train_trans_a =
                    transform_lines(&train_a[300..], &surrogate, "a", "b", mode, 50 + s);
                let train_trans_b =
                    transform_lines(&train_b[300..], &surrogate, "b", "a", mode, 60 + s);
                let mut trans_train = labeled(&train_trans_a, "a");
                trans_train.extend(labeled(&train_trans_b, "b"));
                let retrained = adversarial_retrain(&trainer, &eval_data, &trans_train).unwrap();
                let after = evaluate_accuracy(&retrained, &trans_test).unwrap().accuracy;
                retrain_elapsed += clock.elapsed();

                outcomes.push(ModeOutcome {
                    decrease_to_b: original.per_class["a"] - report.per_class["a"],
                    decrease_to_a: original.per_class["b"] - report.per_class["b"],
                    before: report.accuracy,
                    after,
                });
            }
            let random = outcomes.pop().unwrap();
            let targeted = outcomes.pop().unwrap();
            runs.push(StyleRun {
                original_accuracy: original.accuracy,
                targeted,
                random,
                meteor_mean,
            });
        }
        StyleRuns { runs, transfer_elapsed, retrain_elapsed }
    })
}

#[test]
fn criterion_4_style_transfer_decrease() {
    let runs = style_runs();
    for (i, run) in runs.runs.iter().enumerate() {
        assert!(
            run.original_accuracy >= 0.9,
            "run {i}: original accuracy {} below 0.9",
            run.original_accuracy
        );
    }

    let to_b = mean(&runs.runs.iter().map(|r| r.targeted.decrease_to_b).collect::<Vec<_>>());
    let to_a = mean(&runs.runs.iter().map(|r| r.targeted.decrease_to_a).collect::<Vec<_>>());
    assert!(to_b >= 0.15, "mean decrease a→b {to_b} below 0.15");
    assert!(to_a >= 0.15, "mean decrease b→a {to_a} below 0.15");

    let targeted = mean(&runs.runs.iter().map(|r| r.targeted.mean_decrease()).collect::<Vec<_>>());
    let random = mean(&runs.runs.iter().map(|r| r.random.mean_decrease()).collect::<Vec<_>>());
    assert!(
        targeted > random,
        "targeted decrease {targeted} not above random decrease {random}"
    );

    assert!(
        runs.transfer_elapsed < Duration::from_secs(300),
        "style-transfer runs took {:?}",
        runs.transfer_elapsed
    );

    let orig = mean(&runs.runs.iter().map(|r| r.original_accuracy).collect::<Vec<_>>());
    println!(
        "criterion 4 PASS — original accuracy {orig:.3}; mean decrease a→b {to_b:.3}, b→a {to_a:.3}; targeted {targeted:.3} > random {random:.3}; 5 seeds in {:.1?}",
        runs.transfer_elapsed
    );
}

#[test]
fn criterion_5_meteor_retainment() {
    let runs = style_runs();
    let meteor = mean(&runs.runs.iter().map(|r| r.meteor_mean).collect::<Vec<_>>());
    assert!(meteor >= 0.40, "mean METEOR {meteor} below 0.40");
    println!("criterion 5 PASS — mean METEOR between originals and targeted transforms {meteor:.3}");
}

#[test]
fn criterion_7_adversarial_training() {
    let runs = style_runs();
    let rise_targeted = mean(
        &runs.runs.iter().map(|r| r.targeted.after - r.targeted.before).collect::<Vec<_>>(),
    );
    let rise_random = mean(
        &runs.runs.iter().map(|r| r.random.after - r.random.before).collect::<Vec<_>>(),
    );
    assert!(
        rise_targeted >= 0.10,
        "retraining on targeted transforms regained only {rise_targeted}"
    );

    // The random half is a soft gate: reported, not asserted.
    let soft = if rise_random <= 0.05 {
        "within the 0.05 soft gate"
    } else {
        "NOTE: exceeds the 0.05 soft gate"
    };
    let before_t = mean(&runs.runs.iter().map(|r| r.targeted.before).collect::<Vec<_>>());
    let after_t = mean(&runs.runs.iter().map(|r| r.targeted.after).collect::<Vec<_>>());
    println!(
        "criterion 7 PASS — targeted transformed-test accuracy {before_t:.3} → {after_t:.3} (rise {rise_targeted:.3} ≥ 0.10); random rise {rise_random:.3}, {soft}; retraining in {:.1?}",
        runs.retrain_elapsed
    );
}

// --- criterion 6 -----------------------------------------------------------

#[test]
fn criterion_6_document_ga() {
    let start = Instant::now();
    let docs = author_documents(10, 15, 8, 61);
    let mut train_data = Vec::new();
    let mut test_docs = Vec::new();
    for doc in &docs {
        let number: usize = doc.id.rsplit('-').next().unwrap().parse().unwrap();
        if number < 12 {
            train_data.push((doc.text(), doc.label.clone().unwrap()));
        } else {
            test_docs.push(doc.clone());
        }
    }
    assert_eq!(train_data.len(), 120);
    assert_eq!(test_docs.len(), 30);

    // The default step size is too conservative for this small corpus; a
    // steeper, longer schedule trains to convergence.
    let config = MlpConfig { epochs: 500, learning_rate: 0.05, ..MlpConfig::default() };
    let profiler = train_mlp(&train_data, &config, &world().tagger, function_words()).unwrap();

    let mut correct = Vec::new();
    let mut misclassified = Vec::new();
    for doc in &test_docs {
        let label = doc.label.as_deref().unwrap();
        if profiler.argmax_class(&doc.text()) == label {
            correct.push(doc.clone());
        } else {
            misclassified.push(doc.clone());
        }
    }
    assert!(
        correct.len() >= 20,
        "profiler got only {}/30 test documents right",
        correct.len()
    );

    let caps = GenerationCaps::default();
    let params = GaParams {
        runs_per_iteration: 40,
        max_iterations: 15,
        survivors: 3,
        ..GaParams::default()
    };

    // An already misclassified document comes back unchanged: any naturally
    // misclassified test documents, plus a crafted one (a correct document
    // judged against the wrong author).
    let mut unchanged_cases: Vec<(Document, String)> = misclassified
        .iter()
        .map(|d| (d.clone(), d.label.clone().unwrap()))
        .collect();
    let crafted = correct
        .iter()
        .find(|d| d.label.as_deref() == Some("author1"))
        .expect("an author1 test document is classified correctly");
    unchanged_cases.push((crafted.clone(), "author0".to_string()));
    for (doc, true_class) in &unchanged_cases {
        let result =
            transform_document_ga(doc, world(), &caps, &profiler, true_class, &params).unwrap();
        let ga = result.ga.clone().unwrap();
        assert_eq!(result.document.text(), doc.text(), "misclassified doc changed");
        assert_eq!(ga.iterations, 0);
        assert!(ga.misclassified);
        assert_eq!(transformed_sentence_rate(&result), 0.0);
    }

    // The genetic search on every correctly classified test document. The
    // engine asserts each iteration that the best fitness never decreases,
    // so these runs exercise that invariant throughout.
    let mut successes = 0usize;
    let mut rates = Vec::new();
    for (i, doc) in correct.iter().enumerate() {
        let params = GaParams { seed: 100 + i as u64, ..params.clone() };
        let label = doc.label.as_deref().unwrap();
        let result = transform_document_ga(doc, world(), &caps, &profiler, label, &params).unwrap();
        if result.ga.as_ref().unwrap().misclassified {
            successes += 1;
        }
        rates.push(transformed_sentence_rate(&result));
    }
    let success_rate = successes as f64 / correct.len() as f64;
    let mean_rate = mean(&rates);
    assert!(
        success_rate >= 0.5,
        "style transfer succeeded on only {successes}/{} documents",
        correct.len()
    );
    assert!(mean_rate <= 0.5, "mean transformed-sentence rate {mean_rate} above 0.5");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(900), "took {elapsed:?}");
    println!(
        "criterion 6 PASS — {}/30 test documents classified correctly; success rate {success_rate:.2}; mean transformed-sentence rate {mean_rate:.2}; {} unchanged misclassified; {elapsed:.1?}",
        correct.len(),
        unchanged_cases.len()
    );
}

// --- criterion 8 -----------------------------------------------------------

#[test]
fn criterion_8_numerical_hygiene() {
    let tagger = &world().tagger;

    // Analytic gradients match central differences on real featurized text.
    let mut grad_data = labeled(&style_corpus(StyleClass::A, 6, 71), "a");
    grad_data.extend(labeled(&style_corpus(StyleClass::B, 6, 72), "b"));
    let grad_config = MlpConfig { hidden: 12, ..MlpConfig::default() };
    let worst = gradient_check(&grad_data, &grad_config, tagger, function_words(), 1e-5).unwrap();
    assert!(worst <= 1e-4, "worst relative gradient error {worst}");
    let again = gradient_check(&grad_data, &grad_config, tagger, function_words(), 1e-5).unwrap();
    assert_eq!(worst.to_bits(), again.to_bits(), "gradient check not deterministic");

    // The regularized logistic-regression loss never increases.
    let mut lr_data = labeled(&style_corpus(StyleClass::A, 40, 73), "a");
    lr_data.extend(labeled(&style_corpus(StyleClass::B, 40, 74), "b"));
    let (_, history) = train_logreg_with_history(&lr_data, 1e-4, 30).unwrap();
    assert!(history.len() >= 2);
    for pair in history.windows(2) {
        assert!(pair[1] <= pair[0] + 1e-12, "loss rose: {} -> {}", pair[0], pair[1]);
    }

    // Probabilities sum to one, for both profiler kinds, over varied text.
    let lr_model = ProfilerTrainer::logreg_default().train(&lr_data).unwrap();
    let mlp_config = MlpConfig { hidden: 8, epochs: 60, ..MlpConfig::default() };
    let mlp_model = train_mlp(&grad_data, &mlp_config, tagger, function_words()).unwrap();
    let mut texts: Vec<String> = tagged_corpus(50, 75)
        .iter()
        .map(|s| s.iter().map(|(w, _)| w.as_str()).collect::<Vec<_>>().join(" "))
        .collect();
    texts.extend(style_corpus(StyleClass::A, 10, 76));
    for text in &texts {
        for model in [&lr_model, &mlp_model] {
            let p = model.predict_proba(text);
            assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-9, "sum off on {text:?}");
            assert!(p.iter().all(|x| x.is_finite() && *x >= 0.0));
        }
    }

    // Training is bit-for-bit deterministic under a fixed seed.
    let lr_twin = ProfilerTrainer::logreg_default().train(&lr_data).unwrap();
    assert_eq!(lr_model.serialize(), lr_twin.serialize());
    let mlp_twin = train_mlp(&grad_data, &mlp_config, tagger, function_words()).unwrap();
    assert_eq!(mlp_model.serialize(), mlp_twin.serialize());

    println!(
        "criterion 8 PASS — worst gradient error {worst:.2e}; loss history monotone over {} epochs; probabilities sum to 1 ± 1e-9 on {} texts; training bit-deterministic",
        history.len() - 1,
        texts.len()
    );
}
