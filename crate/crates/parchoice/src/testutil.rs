//! Test-only helpers over the synthetic world: shared trained fixtures, so
//! expensive training happens once per test binary.

use std::sync::OnceLock;

use crate::lingua::inflect::InflectionTable;
use crate::lingua::tagger::{train_tagger, TaggedSentence, TaggerModel, DEFAULT_ITERATIONS};
use crate::synth;

/// Deterministic synthetic tagged corpus; see the `synth` module.
pub(crate) fn synthetic_tagged_corpus(n_sentences: usize, seed: u64) -> Vec<TaggedSentence> {
    synth::tagged_corpus(n_sentences, seed)
}

/// A tagger trained once on the synthetic corpus, shared across tests.
pub(crate) fn shared_tagger() -> &'static TaggerModel {
    static TAGGER: OnceLock<TaggerModel> = OnceLock::new();
    TAGGER.get_or_init(|| {
        train_tagger(&synthetic_tagged_corpus(1400, 7), DEFAULT_ITERATIONS)
            .expect("training corpus is non-empty")
    })
}

/// An inflection table built once from the same synthetic corpus.
pub(crate) fn shared_inflection() -> &'static InflectionTable {
    static TABLE: OnceLock<InflectionTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        InflectionTable::build(&synthetic_tagged_corpus(1400, 7))
            .expect("build corpus is non-empty")
    })
}

/// The PPDB fixture text; see `synth::fixture_ppdb`.
pub(crate) fn ppdb_fixture() -> String {
    synth::fixture_ppdb()
}

/// The WordNet fixture text.
pub(crate) const WORDNET_FIXTURE: &str = synth::FIXTURE_WORDNET;

/// The spell lexicon fixture text.
pub(crate) fn spell_fixture() -> String {
    synth::fixture_spell()
}

/// A full resource bundle over the synthetic world, built once and shared.
pub(crate) fn shared_bundle() -> &'static crate::resources::ResourceBundle {
    use std::path::Path;
    static BUNDLE: OnceLock<crate::resources::ResourceBundle> = OnceLock::new();
    BUNDLE.get_or_init(|| crate::resources::ResourceBundle {
        tagger: shared_tagger().clone(),
        inflections: shared_inflection().clone(),
        ppdb: crate::substitution::parse_ppdb(Path::new("fixture"), &synth::fixture_ppdb())
            .expect("fixture parses"),
        wordnet: crate::substitution::parse_wordnet(Path::new("fixture"), synth::FIXTURE_WORDNET)
            .expect("fixture parses"),
        spell: crate::typos::SpellLexicon::parse(Path::new("fixture"), &synth::fixture_spell())
            .expect("fixture parses"),
        typos: synth::fixture_typos(),
    })
}

/// A fresh per-test scratch directory under the system temp dir.
pub(crate) fn scratch_dir(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("parchoice-{name}-{}", std::process::id()));
    if dir.exists() {
        std::fs::remove_dir_all(&dir).unwrap();
    }
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
