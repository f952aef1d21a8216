//! Subsets of a base, backed by fixed-width membership masks.

use std::fmt;

use crate::base::Base;
use crate::caps;
use crate::error::{Error, Result};
use crate::mask::{self, Words};

#[derive(Clone)]
pub struct Subset {
    base: Base,
    words: Words,
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.words == other.words
    }
}

impl Eq for Subset {}

impl std::hash::Hash for Subset {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.words.hash(state);
        self.base.len().hash(state);
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

impl Subset {
    pub fn empty(base: &Base) -> Subset {
        Subset {
            words: mask::zero(base.len()),
            base: base.clone(),
        }
    }

    pub fn full(base: &Base) -> Subset {
        Subset {
            words: mask::full(base.len()),
            base: base.clone(),
        }
    }

    pub fn singleton(base: &Base, i: usize) -> Subset {
        let mut s = Subset::empty(base);
        s.insert(i);
        s
    }

    pub fn from_indices(base: &Base, indices: &[usize]) -> Result<Subset> {
        let mut s = Subset::empty(base);
        for &i in indices {
            if i >= base.len() {
                return Err(Error::Internal(format!("element index {i} out of range")));
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn from_names<S: AsRef<str>>(base: &Base, names: &[S]) -> Result<Subset> {
        let mut s = Subset::empty(base);
        for name in names {
            s.insert(base.require(name.as_ref())?);
        }
        Ok(s)
    }

    pub(crate) fn from_words(base: &Base, words: Words) -> Subset {
        debug_assert_eq!(words.len(), mask::word_count(base.len()));
        Subset {
            base: base.clone(),
            words,
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.base.len() && mask::get(&self.words, i)
    }

    pub fn insert(&mut self, i: usize) {
        mask::set(&mut self.words, i);
    }

    pub fn remove(&mut self, i: usize) {
        mask::clear(&mut self.words, i);
    }

    pub fn len(&self) -> usize {
        mask::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        mask::is_empty(&self.words)
    }

    fn check_base(&self, other: &Subset) -> Result<()> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_base(other)?;
        let mut out = self.clone();
        mask::union_into(&mut out.words, &other.words);
        Ok(out)
    }

    pub fn intersect(&self, other: &Subset) -> Result<Subset> {
        self.check_base(other)?;
        let mut out = self.clone();
        mask::intersect_into(&mut out.words, &other.words);
        Ok(out)
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.check_base(other)?;
        let mut out = self.clone();
        mask::subtract_into(&mut out.words, &other.words);
        Ok(out)
    }

    pub fn is_subset(&self, other: &Subset) -> Result<bool> {
        self.check_base(other)?;
        Ok(mask::is_subset(&self.words, &other.words))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        mask::ones(&self.words)
    }

    /// Element names in base order.
    pub fn names(&self) -> Vec<String> {
        self.iter().map(|i| self.base.name(i).to_string()).collect()
    }
}

/// Every subset of `base` in canonical (mask-value) order.
pub fn enumerate_all_subsets(base: &Base) -> Result<Vec<Subset>> {
    caps::ensure("subset enumeration", caps::LATTICE_BASE, base.len())?;
    let n = base.len();
    Ok((0..1u64 << n)
        .map(|m| Subset::from_words(base, mask::from_low_word(n, m)))
        .collect())
}
