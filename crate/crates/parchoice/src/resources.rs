//! The immutable resource bundle every transformation consumes: POS tagger,
//! inflection table, PPDB lexicon, WordNet synsets, spell lexicon, and the
//! target-class typo lexicon.
//!
//! A bundle directory uses fixed file names so that separately built
//! resources compose without configuration: `tagger.model`,
//! `inflections.tsv`, `ppdb.txt`, `wordnet.txt`, `spell.txt`, and either
//! `typos.<class>.txt` (one per target class) or a class-free `typos.txt`.

use std::path::Path;

use crate::error::Result;
use crate::lingua::{InflectionTable, TaggerModel};
use crate::substitution::{load_ppdb, load_wordnet, PpdbLexicon, WordNet};
use crate::typos::{SpellLexicon, TypoLexicon};

pub const TAGGER_FILE: &str = "tagger.model";
pub const INFLECTIONS_FILE: &str = "inflections.tsv";
pub const PPDB_FILE: &str = "ppdb.txt";
pub const WORDNET_FILE: &str = "wordnet.txt";
pub const SPELL_FILE: &str = "spell.txt";

/// File name of the typo lexicon for a target class, or the class-free
/// default when no class is given.
pub fn typo_file(target: Option<&str>) -> String {
    match target {
        Some(class) => format!("typos.{class}.txt"),
        None => "typos.txt".to_string(),
    }
}

/// Loaded lexicons and models, immutable for the lifetime of a run.
#[derive(Debug, Clone)]
pub struct ResourceBundle {
    pub tagger: TaggerModel,
    pub inflections: InflectionTable,
    pub ppdb: PpdbLexicon,
    pub wordnet: WordNet,
    pub spell: SpellLexicon,
    pub typos: TypoLexicon,
}

impl ResourceBundle {
    /// Loads a bundle from a resource directory using the standard file
    /// names. `target` selects the per-class typo lexicon
    /// (`typos.<class>.txt`); `None` loads the class-free `typos.txt`.
    pub fn load_dir(dir: &Path, target: Option<&str>) -> Result<ResourceBundle> {
        Ok(ResourceBundle {
            tagger: TaggerModel::load(&dir.join(TAGGER_FILE))?,
            inflections: InflectionTable::load(&dir.join(INFLECTIONS_FILE))?,
            ppdb: load_ppdb(&dir.join(PPDB_FILE))?,
            wordnet: load_wordnet(&dir.join(WORDNET_FILE))?,
            spell: SpellLexicon::load(dir.join(SPELL_FILE))?,
            typos: TypoLexicon::load(dir.join(typo_file(target)))?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil;

    #[test]
    fn bundle_round_trips_through_a_directory() {
        let bundle = testutil::shared_bundle();
        let dir = testutil::scratch_dir("resources-roundtrip");

        bundle.tagger.save(&dir.join(TAGGER_FILE)).unwrap();
        bundle.inflections.save(&dir.join(INFLECTIONS_FILE)).unwrap();
        std::fs::write(dir.join(PPDB_FILE), testutil::ppdb_fixture()).unwrap();
        std::fs::write(dir.join(WORDNET_FILE), testutil::WORDNET_FIXTURE).unwrap();
        std::fs::write(dir.join(SPELL_FILE), testutil::spell_fixture()).unwrap();
        bundle.typos.save(dir.join(typo_file(Some("b")))).unwrap();

        let loaded = ResourceBundle::load_dir(&dir, Some("b")).unwrap();
        assert_eq!(loaded.tagger, bundle.tagger);
        assert_eq!(loaded.inflections.serialize(), bundle.inflections.serialize());
        assert_eq!(loaded.ppdb.len(), bundle.ppdb.len());
        assert_eq!(loaded.wordnet.len(), bundle.wordnet.len());
        assert_eq!(loaded.spell.len(), bundle.spell.len());
        assert_eq!(loaded.typos.serialize(), bundle.typos.serialize());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn missing_files_are_resource_errors() {
        let dir = testutil::scratch_dir("resources-missing");
        let err = ResourceBundle::load_dir(&dir, None).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains(TAGGER_FILE), "unexpected error: {msg}");
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn typo_file_names_are_stable() {
        assert_eq!(typo_file(Some("alice")), "typos.alice.txt");
        assert_eq!(typo_file(None), "typos.txt");
    }
}
