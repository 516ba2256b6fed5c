//! Corpus ingestion for the experiment harness.
//!
//! Sentence-level tasks read a directory of `<class>.train.txt` and
//! `<class>.test.txt` line files (one sentence per line). Document-level
//! tasks read an `<author>/<doc>.txt` tree where each directory name is the
//! author label and each file line is one sentence.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use parchoice::text::{Document, Sentence};
use parchoice::{Error, Result};

/// Train and test sentences for one class.
#[derive(Debug, Clone, Default)]
pub struct ClassSplit {
    pub train: Vec<String>,
    pub test: Vec<String>,
}

/// A sentence corpus keyed by class label.
#[derive(Debug, Clone)]
pub struct SentenceCorpus {
    pub classes: BTreeMap<String, ClassSplit>,
}

impl SentenceCorpus {
    pub fn class_names(&self) -> Vec<String> {
        self.classes.keys().cloned().collect()
    }

    pub fn class(&self, label: &str) -> Result<&ClassSplit> {
        self.classes.get(label).ok_or_else(|| {
            Error::task(format!(
                "unknown class {label:?}; corpus has {:?}",
                self.class_names()
            ))
        })
    }
}

/// A document corpus: the first `train_docs` documents of each author form
/// the training set, the remainder the test set.
#[derive(Debug, Clone)]
pub struct DocumentCorpus {
    pub authors: Vec<String>,
    pub train: Vec<Document>,
    pub test: Vec<Document>,
}

/// Reads the non-empty trimmed lines of a text file.
pub fn read_lines(path: &Path) -> Result<Vec<String>> {
    let content = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn sorted_names(dir: &Path) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        names.push(entry.file_name().to_string_lossy().into_owned());
    }
    names.sort();
    Ok(names)
}

/// Loads `<class>.train.txt` / `<class>.test.txt` pairs from `dir`.
pub fn load_sentence_corpus(dir: &Path) -> Result<SentenceCorpus> {
    let mut classes: BTreeMap<String, ClassSplit> = BTreeMap::new();
    for name in sorted_names(dir)? {
        if let Some(class) = name.strip_suffix(".train.txt") {
            classes.entry(class.to_string()).or_default().train = read_lines(&dir.join(&name))?;
        } else if let Some(class) = name.strip_suffix(".test.txt") {
            classes.entry(class.to_string()).or_default().test = read_lines(&dir.join(&name))?;
        }
    }
    if classes.len() < 2 {
        return Err(Error::resource(format!(
            "{}: need <class>.train.txt/<class>.test.txt files for at least two classes, found {}",
            dir.display(),
            classes.len()
        )));
    }
    for (class, split) in &classes {
        if split.train.is_empty() {
            return Err(Error::resource(format!(
                "{}: class {class:?} has no training sentences",
                dir.display()
            )));
        }
        if split.test.is_empty() {
            return Err(Error::resource(format!(
                "{}: class {class:?} has no test sentences",
                dir.display()
            )));
        }
    }
    Ok(SentenceCorpus { classes })
}

/// Loads an `<author>/<doc>.txt` tree. Document ids are `author/stem`; files
/// are assigned to train or test in sorted-name order so the split is stable.
pub fn load_document_corpus(dir: &Path, train_docs: usize) -> Result<DocumentCorpus> {
    let mut authors: Vec<String> = sorted_names(dir)?
        .into_iter()
        .filter(|name| dir.join(name).is_dir())
        .collect();
    authors.sort();
    if authors.len() < 2 {
        return Err(Error::resource(format!(
            "{}: need at least two author directories, found {}",
            dir.display(),
            authors.len()
        )));
    }

    let mut train = Vec::new();
    let mut test = Vec::new();
    for author in &authors {
        let author_dir = dir.join(author);
        let files: Vec<String> = sorted_names(&author_dir)?
            .into_iter()
            .filter(|name| name.ends_with(".txt"))
            .collect();
        if files.len() <= train_docs {
            return Err(Error::resource(format!(
                "{}: author {author:?} has {} documents but {} are reserved for training",
                dir.display(),
                files.len(),
                train_docs
            )));
        }
        for (i, name) in files.iter().enumerate() {
            let path = author_dir.join(name);
            let lines = read_lines(&path)?;
            if lines.is_empty() {
                return Err(Error::resource(format!(
                    "{}: document has no sentences",
                    path.display()
                )));
            }
            let stem = name.strip_suffix(".txt").unwrap_or(name);
            let doc = Document {
                id: format!("{author}/{stem}"),
                label: Some(author.clone()),
                sentences: lines.iter().map(|l| Sentence::from_line(l)).collect(),
            };
            if i < train_docs {
                train.push(doc);
            } else {
                test.push(doc);
            }
        }
    }
    Ok(DocumentCorpus { authors, train, test })
}
