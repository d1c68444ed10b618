use std::collections::HashMap;

use super::{ElemSet, MAX_ELEMENTS};
use crate::{Error, Result};

/// Ordered, labelled ground set; element `i` is the `i`-th label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::SizeGuard(format!(
                "{} elements exceeds the limit of {MAX_ELEMENTS}",
                labels.len()
            )));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    pub fn from_strs(labels: &[&str]) -> Result<Self> {
        GroundSet::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        labels.iter().try_fold(ElemSet::EMPTY, |acc, l| {
            Ok(acc.with(self.index_of(l.as_ref())?))
        })
    }

    pub fn labels_of(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|e| self.labels[e].clone()).collect()
    }

    /// `{a,b,c}`-style rendering.
    pub fn render(&self, set: ElemSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }
}
