//! Pointwise binary operations `δ : S × S → P(S)`, the data from which
//! subset products are lifted. An entry may be undefined, which is how
//! bounded bases (word concatenation past the length cap) signal that a
//! product left the base; consumers must treat those pairs as out of
//! range rather than as empty products.

use crate::base::{Base, BaseKind};
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Debug, Clone)]
pub struct DeltaOp {
    base: Base,
    entries: Vec<Option<Subset>>,
}

impl DeltaOp {
    fn from_entries(base: &Base, entries: Vec<Option<Subset>>) -> DeltaOp {
        debug_assert_eq!(entries.len(), base.len() * base.len());
        DeltaOp {
            base: base.clone(),
            entries,
        }
    }

    pub(crate) fn from_fn<F>(base: &Base, mut f: F) -> DeltaOp
    where
        F: FnMut(usize, usize) -> Option<Subset>,
    {
        let n = base.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        DeltaOp::from_entries(base, entries)
    }

    /// Builds a total operation from explicit `(left, right, product)`
    /// rows. Every ordered pair must appear exactly once.
    pub fn from_table<S: AsRef<str>>(base: &Base, rows: &[(S, S, Vec<S>)]) -> Result<DeltaOp> {
        let n = base.len();
        let entries = Self::fill_rows(base, rows)?;
        for a in 0..n {
            for b in 0..n {
                if entries[a * n + b].is_none() {
                    return Err(Error::MissingTableEntry {
                        left: base.name(a).to_string(),
                        right: base.name(b).to_string(),
                    });
                }
            }
        }
        Ok(DeltaOp::from_entries(base, entries))
    }

    /// Like [`DeltaOp::from_table`], but pairs without a row stay
    /// undefined. This is how genuinely partial operations (bounded
    /// list bases, where long concatenations have nowhere to land) are
    /// written down.
    pub fn from_partial_table<S: AsRef<str>>(base: &Base, rows: &[(S, S, Vec<S>)]) -> Result<DeltaOp> {
        let entries = Self::fill_rows(base, rows)?;
        Ok(DeltaOp::from_entries(base, entries))
    }

    fn fill_rows<S: AsRef<str>>(base: &Base, rows: &[(S, S, Vec<S>)]) -> Result<Vec<Option<Subset>>> {
        let n = base.len();
        let mut entries: Vec<Option<Subset>> = vec![None; n * n];
        for (left, right, product) in rows {
            let a = base.require(left.as_ref())?;
            let b = base.require(right.as_ref())?;
            if entries[a * n + b].is_some() {
                return Err(Error::DuplicateTableEntry {
                    left: left.as_ref().to_string(),
                    right: right.as_ref().to_string(),
                });
            }
            entries[a * n + b] = Some(Subset::from_names(base, product)?);
        }
        Ok(entries)
    }

    /// Builds the meet-style operation of a preorder:
    /// `δ(a,b) = {c | c ≤ a and c ≤ b}`. The pairs are taken literally
    /// (plus reflexivity) and must already be transitive.
    pub fn from_preorder<S: AsRef<str>>(base: &Base, pairs: &[(S, S)]) -> Result<DeltaOp> {
        let n = base.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for (lo, hi) in pairs {
            let a = base.require(lo.as_ref())?;
            let b = base.require(hi.as_ref())?;
            leq[a * n + b] = true;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if leq[a * n + b] && leq[b * n + c] && !leq[a * n + c] {
                        return Err(Error::NotTransitive {
                            a: base.name(a).to_string(),
                            b: base.name(b).to_string(),
                            c: base.name(c).to_string(),
                        });
                    }
                }
            }
        }
        Ok(DeltaOp::from_fn(base, |a, b| {
            let mut meet = Subset::empty(base);
            for c in 0..n {
                if leq[c * n + a] && leq[c * n + b] {
                    meet.insert(c);
                }
            }
            Some(meet)
        }))
    }

    fn fill_element_table<S: AsRef<str>>(base: &Base, rows: &[(S, S, S)]) -> Result<Vec<usize>> {
        let n = base.len();
        let mut mul: Vec<Option<usize>> = vec![None; n * n];
        for (left, right, product) in rows {
            let a = base.require(left.as_ref())?;
            let b = base.require(right.as_ref())?;
            if mul[a * n + b].is_some() {
                return Err(Error::DuplicateTableEntry {
                    left: left.as_ref().to_string(),
                    right: right.as_ref().to_string(),
                });
            }
            mul[a * n + b] = Some(base.require(product.as_ref())?);
        }
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = mul[a * n + b].ok_or_else(|| Error::MissingTableEntry {
                    left: base.name(a).to_string(),
                    right: base.name(b).to_string(),
                })?;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAssociative {
                            a: base.name(a).to_string(),
                            b: base.name(b).to_string(),
                            c: base.name(c).to_string(),
                        });
                    }
                }
            }
        }
        Ok(table)
    }

    /// Builds the singleton-valued operation of an associative
    /// multiplication table; no unit element is required.
    pub fn from_semigroup<S: AsRef<str>>(base: &Base, rows: &[(S, S, S)]) -> Result<DeltaOp> {
        let n = base.len();
        let table = Self::fill_element_table(base, rows)?;
        Ok(DeltaOp::from_fn(base, |a, b| {
            Some(Subset::singleton(base, table[a * n + b]))
        }))
    }

    /// Builds the singleton-valued operation of a monoid multiplication
    /// table, validating associativity and the unit laws.
    pub fn from_monoid<S: AsRef<str>>(base: &Base, rows: &[(S, S, S)], unit: S) -> Result<DeltaOp> {
        let n = base.len();
        let e = base.require(unit.as_ref())?;
        let table = Self::fill_element_table(base, rows)?;
        for a in 0..n {
            if table[a * n + e] != a || table[e * n + a] != a {
                return Err(Error::BadUnit {
                    unit: base.name(e).to_string(),
                    elem: base.name(a).to_string(),
                });
            }
        }
        Ok(DeltaOp::from_fn(base, |a, b| {
            Some(Subset::singleton(base, table[a * n + b]))
        }))
    }

    /// Word concatenation on a list base. Pairs whose concatenation
    /// exceeds the base's length bound are left undefined.
    pub fn concatenation(base: &Base) -> Result<DeltaOp> {
        if !matches!(base.kind(), BaseKind::Lists(_, _)) {
            return Err(Error::WrongOperationKind("concatenation needs a list base"));
        }
        let n = base.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(base.concat_index(a, b)?.map(|c| Subset::singleton(base, c)));
            }
        }
        Ok(DeltaOp::from_entries(base, entries))
    }

    /// Union on a powerset base: `δ(K, L) = {K ∪ L}`.
    pub fn union_monoid(base: &Base) -> Result<DeltaOp> {
        if !matches!(base.kind(), BaseKind::Powerset(_)) {
            return Err(Error::WrongOperationKind("union needs a powerset base"));
        }
        let n = base.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let k = base.powerset_mask(a)? | base.powerset_mask(b)?;
                entries.push(Some(Subset::singleton(base, base.powerset_index(k)?)));
            }
        }
        Ok(DeltaOp::from_entries(base, entries))
    }

    /// `δ(a,b) = {a} ∩ {b}`: the product is `{a}` on the diagonal and
    /// empty elsewhere.
    pub fn discrete(base: &Base) -> DeltaOp {
        DeltaOp::from_fn(base, |a, b| {
            if a == b {
                Some(Subset::singleton(base, a))
            } else {
                Some(Subset::empty(base))
            }
        })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn get(&self, a: usize, b: usize) -> Option<&Subset> {
        self.entries[a * self.base.len() + b].as_ref()
    }

    pub fn is_total(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// All `(left, right, product)` entries in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<&Subset>)> + '_ {
        let n = self.base.len();
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / n, k % n, v.as_ref()))
    }
}
