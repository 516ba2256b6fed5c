//! METEOR scoring between a transformed candidate and its original.
//!
//! This pins the original 2005 formulation: a staged greedy unigram
//! alignment (exact match, then stem match, then WordNet synonymy), with
//!
//! ```text
//! P = m/|candidate|, R = m/|reference|, Fmean = 10PR/(R+9P),
//! penalty = 0.5·(chunks/m)³, score = Fmean·(1−penalty)
//! ```
//!
//! where `chunks` counts maximal runs of matches contiguous and
//! order-preserving in both sentences. Later METEOR releases altered
//! parameters and stages, so absolute values from other tooling differ; the
//! evaluation harness relies on trends and floors, not exact parity.

use crate::lingua::stem;
use crate::substitution::WordNet;
use crate::text::tokenize_words;

/// Which stage matched a pair of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchStage {
    Exact,
    Stem,
    Synonym,
}

/// A unigram alignment between candidate and reference: matched index pairs
/// (each index used at most once), the stage that matched each pair, and the
/// chunk count. Pairs are sorted by candidate index.
#[derive(Debug, Clone, PartialEq)]
pub struct Alignment {
    pub pairs: Vec<(usize, usize, MatchStage)>,
    pub chunks: usize,
}

fn synonymous(wordnet: &WordNet, a: &str, b: &str) -> bool {
    wordnet.synsets().iter().any(|s| {
        s.lemmas.iter().any(|l| l == a) && s.lemmas.iter().any(|l| l == b)
    })
}

/// Aligns lowercased candidate words to reference words in three greedy
/// stages. Within a stage, candidate words are taken left to right and each
/// matches the leftmost still-unmatched compatible reference word.
pub fn align(candidate: &[String], reference: &[String], wordnet: Option<&WordNet>) -> Alignment {
    let mut cand_used = vec![false; candidate.len()];
    let mut ref_used = vec![false; reference.len()];
    let mut pairs: Vec<(usize, usize, MatchStage)> = Vec::new();

    let cand_stems: Vec<String> = candidate.iter().map(|w| stem(w)).collect();
    let ref_stems: Vec<String> = reference.iter().map(|w| stem(w)).collect();

    for stage in [MatchStage::Exact, MatchStage::Stem, MatchStage::Synonym] {
        if stage == MatchStage::Synonym && wordnet.is_none() {
            continue;
        }
        for i in 0..candidate.len() {
            if cand_used[i] {
                continue;
            }
            for j in 0..reference.len() {
                if ref_used[j] {
                    continue;
                }
                let hit = match stage {
                    MatchStage::Exact => candidate[i] == reference[j],
                    MatchStage::Stem => cand_stems[i] == ref_stems[j],
                    MatchStage::Synonym => {
                        synonymous(wordnet.unwrap(), &candidate[i], &reference[j])
                    }
                };
                if hit {
                    cand_used[i] = true;
                    ref_used[j] = true;
                    pairs.push((i, j, stage));
                    break;
                }
            }
        }
    }

    pairs.sort_by_key(|&(i, _, _)| i);
    let mut chunks = 0;
    for (k, &(i, j, _)) in pairs.iter().enumerate() {
        if k == 0 {
            chunks = 1;
        } else {
            let (pi, pj, _) = pairs[k - 1];
            if i != pi + 1 || j != pj + 1 {
                chunks += 1;
            }
        }
    }
    Alignment { pairs, chunks }
}

/// METEOR score in [0,1]. Zero when either side is empty or nothing aligns.
/// Passing no WordNet disables the synonym stage.
pub fn meteor_score(candidate: &str, reference: &str, wordnet: Option<&WordNet>) -> f64 {
    let cand: Vec<String> = tokenize_words(candidate).iter().map(|t| t.lower()).collect();
    let refr: Vec<String> = tokenize_words(reference).iter().map(|t| t.lower()).collect();
    if cand.is_empty() || refr.is_empty() {
        return 0.0;
    }
    let alignment = align(&cand, &refr, wordnet);
    let m = alignment.pairs.len() as f64;
    if m == 0.0 {
        return 0.0;
    }
    let p = m / cand.len() as f64;
    let r = m / refr.len() as f64;
    let fmean = 10.0 * p * r / (r + 9.0 * p);
    let penalty = 0.5 * (alignment.chunks as f64 / m).powi(3);
    fmean * (1.0 - penalty)
}
