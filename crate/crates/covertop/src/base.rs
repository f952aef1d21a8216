//! Carrier sets. A base is a finite, ordered family of named elements;
//! subsets, covers and operations all index into one.
//!
//! Besides atomic bases there are three derived shapes with fixed
//! enumeration orders, so that element indices are reproducible across
//! runs and machines:
//!
//! * products enumerate row-major (left index major),
//! * list bases enumerate by length, then lexicographically, with the
//!   empty list always at index 0,
//! * powerset bases enumerate by numeric membership mask.

use std::collections::HashMap;
use std::sync::Arc;

use crate::caps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseKind {
    Atomic,
    Product(Base, Base),
    /// Lists over the inner base up to the given maximum length.
    Lists(Base, usize),
    /// Finite subsets of the inner base.
    Powerset(Base),
}

#[derive(Debug)]
struct BaseInner {
    kind: BaseKind,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// A shared, immutable carrier. Cloning is cheap; equality is structural,
/// so two independently built products of equal bases are interchangeable.
#[derive(Debug, Clone)]
pub struct Base(Arc<BaseInner>);

impl PartialEq for Base {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind && self.0.names == other.0.names)
    }
}

impl Eq for Base {}

impl Base {
    fn build(kind: BaseKind, names: Vec<String>) -> Result<Base> {
        if names.is_empty() {
            return Err(Error::EmptyBase);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.trim().is_empty() {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Base(Arc::new(BaseInner { kind, names, index })))
    }

    /// A base from explicit element names, in declaration order.
    pub fn atomic<S: AsRef<str>>(names: &[S]) -> Result<Base> {
        caps::ensure("atomic base", caps::ATOMIC_BASE, names.len())?;
        Self::build(
            BaseKind::Atomic,
            names.iter().map(|s| s.as_ref().to_string()).collect(),
        )
    }

    /// The row-major product base; element `(a, b)` has index
    /// `a * |right| + b` and name `"(a,b)"`.
    pub fn product(left: &Base, right: &Base) -> Result<Base> {
        let total = left
            .len()
            .checked_mul(right.len())
            .ok_or(Error::SizeCap {
                what: "product base",
                limit: caps::COMPOUND_BASE,
                actual: usize::MAX,
            })?;
        caps::ensure("product base", caps::COMPOUND_BASE, total)?;
        let mut names = Vec::with_capacity(total);
        for a in left.names() {
            for b in right.names() {
                names.push(format!("({a},{b})"));
            }
        }
        Self::build(BaseKind::Product(left.clone(), right.clone()), names)
    }

    /// Lists over `atoms` of length at most `max_len`, ordered by length
    /// and then lexicographically by atom index. The empty list is named
    /// `[]` and always sits at index 0; longer lists are named by joining
    /// atom names with `.`.
    pub fn lists(atoms: &Base, max_len: usize) -> Result<Base> {
        if max_len == 0 {
            return Err(Error::Parse("list bases need max_len >= 1".into()));
        }
        let n = atoms.len();
        let mut total = 1usize;
        let mut layer = 1usize;
        for _ in 0..max_len {
            layer = layer.checked_mul(n).ok_or(Error::SizeCap {
                what: "list base",
                limit: caps::COMPOUND_BASE,
                actual: usize::MAX,
            })?;
            total = total.checked_add(layer).ok_or(Error::SizeCap {
                what: "list base",
                limit: caps::COMPOUND_BASE,
                actual: usize::MAX,
            })?;
        }
        caps::ensure("list base", caps::COMPOUND_BASE, total)?;
        let mut names = Vec::with_capacity(total);
        names.push("[]".to_string());
        for len in 1..=max_len {
            let mut digits = vec![0usize; len];
            loop {
                names.push(
                    digits
                        .iter()
                        .map(|&i| atoms.name(i))
                        .collect::<Vec<_>>()
                        .join("."),
                );
                let mut pos = len;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < n {
                        break;
                    }
                    digits[pos] = 0;
                }
                if digits.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
        Self::build(BaseKind::Lists(atoms.clone(), max_len), names)
    }

    /// All subsets of `atoms`, ordered by membership mask value; the subset
    /// `{a_i | bit i set}` has index equal to its mask. Named `{a,b}`.
    pub fn powerset(atoms: &Base) -> Result<Base> {
        caps::ensure("powerset base", caps::POWERSET_ATOMS, atoms.len())?;
        let total = 1usize << atoms.len();
        caps::ensure("powerset base", caps::COMPOUND_BASE, total)?;
        let mut names = Vec::with_capacity(total);
        for m in 0..total as u64 {
            let members: Vec<&str> = (0..atoms.len())
                .filter(|i| m >> i & 1 != 0)
                .map(|i| atoms.name(i))
                .collect();
            names.push(format!("{{{}}}", members.join(",")));
        }
        Self::build(BaseKind::Powerset(atoms.clone()), names)
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn kind(&self) -> &BaseKind {
        &self.0.kind
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Index of `(a, b)` in a product base.
    pub fn pair_index(&self, a: usize, b: usize) -> Result<usize> {
        match self.kind() {
            BaseKind::Product(l, r) => {
                if a >= l.len() || b >= r.len() {
                    return Err(Error::Internal("pair index out of range".into()));
                }
                Ok(a * r.len() + b)
            }
            _ => Err(Error::WrongOperationKind("pair indexing needs a product base")),
        }
    }

    /// Components of a product element.
    pub fn pair_of(&self, i: usize) -> Result<(usize, usize)> {
        match self.kind() {
            BaseKind::Product(_, r) => Ok((i / r.len(), i % r.len())),
            _ => Err(Error::WrongOperationKind("pair indexing needs a product base")),
        }
    }

    fn list_layout(&self) -> Result<(&Base, usize)> {
        match self.kind() {
            BaseKind::Lists(atoms, max_len) => Ok((atoms, *max_len)),
            _ => Err(Error::WrongOperationKind("list indexing needs a list base")),
        }
    }

    /// Index of an explicit atom sequence, or `None` when it is longer
    /// than the base allows.
    pub fn list_index(&self, items: &[usize]) -> Result<Option<usize>> {
        let (atoms, max_len) = self.list_layout()?;
        if items.len() > max_len {
            return Ok(None);
        }
        let n = atoms.len();
        let mut start = 0usize;
        let mut layer = 1usize;
        for _ in 0..items.len() {
            start += layer;
            layer *= n;
        }
        let mut offset = 0usize;
        for &d in items {
            if d >= n {
                return Err(Error::Internal("list atom out of range".into()));
            }
            offset = offset * n + d;
        }
        Ok(Some(start + offset))
    }

    /// Atom sequence of a list element.
    pub fn list_items(&self, i: usize) -> Result<Vec<usize>> {
        let (atoms, max_len) = self.list_layout()?;
        let n = atoms.len();
        let mut start = 0usize;
        let mut layer = 1usize;
        for len in 0..=max_len {
            if i < start + layer {
                let mut offset = i - start;
                let mut items = vec![0usize; len];
                for slot in items.iter_mut().rev() {
                    *slot = offset % n;
                    offset /= n;
                }
                return Ok(items);
            }
            start += layer;
            layer *= n;
        }
        Err(Error::Internal("list index out of range".into()))
    }

    /// Index of the concatenation of two list elements, or `None` when the
    /// result would exceed the length bound.
    pub fn concat_index(&self, i: usize, j: usize) -> Result<Option<usize>> {
        let mut items = self.list_items(i)?;
        items.extend(self.list_items(j)?);
        self.list_index(&items)
    }

    /// Membership mask of a powerset element (bit k set iff atom k belongs).
    pub fn powerset_mask(&self, i: usize) -> Result<u64> {
        match self.kind() {
            BaseKind::Powerset(_) => Ok(i as u64),
            _ => Err(Error::WrongOperationKind("mask indexing needs a powerset base")),
        }
    }

    /// Index of the powerset element with the given membership mask.
    pub fn powerset_index(&self, mask: u64) -> Result<usize> {
        match self.kind() {
            BaseKind::Powerset(atoms) => {
                if mask >> atoms.len() != 0 {
                    return Err(Error::Internal("powerset mask out of range".into()));
                }
                Ok(mask as usize)
            }
            _ => Err(Error::WrongOperationKind("mask indexing needs a powerset base")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_rejects_duplicates_and_blanks() {
        assert!(matches!(
            Base::atomic(&["a", "a"]),
            Err(Error::DuplicateName(_))
        ));
        assert!(matches!(Base::atomic(&["a", " "]), Err(Error::InvalidName(_))));
        assert!(matches!(Base::atomic::<&str>(&[]), Err(Error::EmptyBase)));
    }

    #[test]
    fn atomic_cap_is_twenty() {
        let names: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        assert!(matches!(Base::atomic(&names), Err(Error::SizeCap { .. })));
        let names: Vec<String> = (0..20).map(|i| format!("x{i}")).collect();
        assert!(Base::atomic(&names).is_ok());
    }

    #[test]
    fn product_is_row_major() {
        let s = Base::atomic(&["a", "b"]).unwrap();
        let t = Base::atomic(&["x", "y", "z"]).unwrap();
        let p = Base::product(&s, &t).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.name(0), "(a,x)");
        assert_eq!(p.name(5), "(b,z)");
        assert_eq!(p.pair_index(1, 2).unwrap(), 5);
        assert_eq!(p.pair_of(4).unwrap(), (1, 1));
        assert_eq!(p.index_of("(b,y)"), Some(4));
        assert_eq!(p.index_of("(y,b)"), None);
    }

    #[test]
    fn lists_order_by_length_then_lex() {
        let s = Base::atomic(&["a", "b"]).unwrap();
        let l = Base::lists(&s, 2).unwrap();
        assert_eq!(l.len(), 7);
        let names: Vec<&str> = (0..7).map(|i| l.name(i)).collect();
        assert_eq!(names, vec!["[]", "a", "b", "a.a", "a.b", "b.a", "b.b"]);
        assert_eq!(l.list_index(&[]).unwrap(), Some(0));
        assert_eq!(l.list_index(&[1, 0]).unwrap(), Some(5));
        assert_eq!(l.list_index(&[0, 0, 1]).unwrap(), None);
        assert_eq!(l.list_items(4).unwrap(), vec![0, 1]);
        for i in 0..7 {
            let items = l.list_items(i).unwrap();
            assert_eq!(l.list_index(&items).unwrap(), Some(i));
        }
    }

    #[test]
    fn list_concatenation_respects_bound() {
        let s = Base::atomic(&["a", "b"]).unwrap();
        let l = Base::lists(&s, 2).unwrap();
        let a = l.index_of("a").unwrap();
        let b = l.index_of("b").unwrap();
        let ab = l.index_of("a.b").unwrap();
        assert_eq!(l.concat_index(a, b).unwrap(), Some(ab));
        assert_eq!(l.concat_index(ab, b).unwrap(), None);
        assert_eq!(l.concat_index(0, ab).unwrap(), Some(ab));
    }

    #[test]
    fn powerset_is_mask_ordered() {
        let s = Base::atomic(&["a", "b", "c"]).unwrap();
        let p = Base::powerset(&s).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(p.name(0), "{}");
        assert_eq!(p.name(3), "{a,b}");
        assert_eq!(p.name(7), "{a,b,c}");
        assert_eq!(p.powerset_index(5).unwrap(), 5);
        assert_eq!(p.powerset_mask(5).unwrap(), 5);
    }

    #[test]
    fn powerset_cap_is_sixteen_atoms() {
        let names: Vec<String> = (0..17).map(|i| format!("x{i}")).collect();
        let s = Base::atomic(&names[..16]).unwrap();
        assert!(Base::powerset(&s).is_ok());
        // 17 atoms cannot even form an atomic base beyond the cap of 20,
        // so build one of 17 names and check the powerset guard directly.
        let t = Base::atomic(&names).unwrap();
        assert!(matches!(Base::powerset(&t), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn structural_equality() {
        let s1 = Base::atomic(&["a", "b"]).unwrap();
        let s2 = Base::atomic(&["a", "b"]).unwrap();
        let t = Base::atomic(&["a", "c"]).unwrap();
        assert_eq!(s1, s2);
        assert_ne!(s1, t);
        assert_eq!(
            Base::product(&s1, &t).unwrap(),
            Base::product(&s2, &t).unwrap()
        );
    }
}
