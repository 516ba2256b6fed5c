//! Lexicon-based paraphrase substitution: PPDB equivalence pairs under a
//! grammatical filter, and WordNet synonymy with simple-Lesk word-sense
//! disambiguation and corpus-based inflection.

pub mod ppdb;
pub mod wordnet;

pub use ppdb::{load_ppdb, parse_ppdb, ppdb_sites, PpdbContext, PpdbEntry, PpdbLexicon};
pub use wordnet::{
    lesk_disambiguate, load_wordnet, parse_wordnet, wordnet_pos, wordnet_sites, Synset, WordNet,
};
