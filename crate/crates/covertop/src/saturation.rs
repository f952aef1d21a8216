//! Saturation: closing a subset under an axiom set. The engine is a
//! counter-based worklist over a reverse index from elements to the
//! axiom instances mentioning them, with a bounded memo of recent
//! results. Two independent oracles back it: a naive fixpoint over the
//! same axioms, and a semantic table that closes every subset of a
//! small base under the defining rules directly.

use std::num::NonZeroUsize;
use std::sync::Mutex;

use lru::LruCache;

use crate::axioms::AxiomSet;
use crate::base::Base;
use crate::caps;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::mask;
use crate::subset::Subset;

/// A set-indexed closure operator on subsets of a base.
pub trait Cover {
    fn base(&self) -> &Base;

    /// The saturation of `u`: the least superset closed under the
    /// cover's axioms.
    fn saturate(&self, u: &Subset) -> Result<Subset>;

    /// `a ◁ U`.
    fn covers(&self, a: usize, u: &Subset) -> Result<bool> {
        Ok(self.saturate(u)?.contains(a))
    }

    /// `U ◁ V`, elementwise.
    fn covers_all(&self, u: &Subset, v: &Subset) -> Result<bool> {
        u.is_subset(&self.saturate(v)?)
    }

    /// `U` and `V` have the same saturation.
    fn sat_equal(&self, u: &Subset, v: &Subset) -> Result<bool> {
        Ok(self.saturate(u)? == self.saturate(v)?)
    }

    fn is_saturated(&self, u: &Subset) -> Result<bool> {
        Ok(&self.saturate(u)? == u)
    }
}

struct Instance {
    elem: usize,
    size: usize,
}

/// The cover inductively generated by an axiom set.
pub struct GeneratedCover {
    axioms: AxiomSet,
    instances: Vec<Instance>,
    rev: Vec<Vec<usize>>,
    memo: Mutex<LruCache<Box<[u64]>, Subset>>,
}

impl GeneratedCover {
    pub fn new(axioms: AxiomSet) -> GeneratedCover {
        let n = axioms.base().len();
        let mut instances = Vec::with_capacity(axioms.total_len());
        let mut rev = vec![Vec::new(); n];
        for (elem, ax) in axioms.iter_all() {
            let idx = instances.len();
            for x in ax.cover.iter() {
                rev[x].push(idx);
            }
            instances.push(Instance {
                elem,
                size: ax.cover.len(),
            });
        }
        GeneratedCover {
            axioms,
            instances,
            rev,
            memo: Mutex::new(LruCache::new(
                NonZeroUsize::new(caps::MEMO_ENTRIES).expect("memo capacity is nonzero"),
            )),
        }
    }

    pub fn axioms(&self) -> &AxiomSet {
        &self.axioms
    }
}

impl Cover for GeneratedCover {
    fn base(&self) -> &Base {
        self.axioms.base()
    }

    fn saturate(&self, u: &Subset) -> Result<Subset> {
        if u.base() != self.base() {
            return Err(Error::BaseMismatch);
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(u.words()) {
            return Ok(hit.clone());
        }
        let mut result = u.clone();
        let mut counters: Vec<usize> = self.instances.iter().map(|i| i.size).collect();
        let mut queue: Vec<usize> = u.iter().collect();
        for (idx, inst) in self.instances.iter().enumerate() {
            if counters[idx] == 0 && !result.contains(inst.elem) {
                result.insert(inst.elem);
                queue.push(inst.elem);
            }
        }
        while let Some(x) = queue.pop() {
            for &idx in &self.rev[x] {
                counters[idx] -= 1;
                if counters[idx] == 0 {
                    let a = self.instances[idx].elem;
                    if !result.contains(a) {
                        result.insert(a);
                        queue.push(a);
                    }
                }
            }
        }
        self.memo
            .lock()
            .expect("memo lock")
            .put(u.words().into(), result.clone());
        Ok(result)
    }
}

/// Reference saturation: iterate over the axioms until nothing fires.
pub fn oracle_saturate(axioms: &AxiomSet, u: &Subset) -> Result<Subset> {
    if u.base() != axioms.base() {
        return Err(Error::BaseMismatch);
    }
    let mut result = u.clone();
    loop {
        let mut changed = false;
        for (a, ax) in axioms.iter_all() {
            if !result.contains(a) && ax.cover.is_subset(&result)? {
                result.insert(a);
                changed = true;
            }
        }
        if !changed {
            return Ok(result);
        }
    }
}

/// Which defining rules the semantic table closes under, beyond
/// reflexivity, transitivity and the axiom seeds.
pub enum SemanticRules<'a> {
    Basic,
    Convergent {
        op: &'a DeltaOp,
        unit: Option<&'a Subset>,
    },
    Formal {
        op: &'a DeltaOp,
    },
}

/// Closes every subset of a small base under the given rules at once,
/// returning the table `cl` with `cl[U]` the closure of the subset
/// whose mask is `U`. This characterizes the least cover with the
/// requested structure that validates the axioms, independently of how
/// generation stages its transformations.
pub fn semantic_closure_table(axioms: &AxiomSet, rules: SemanticRules) -> Result<Vec<u64>> {
    let base = axioms.base();
    let n = base.len();
    caps::ensure("semantic closure base", caps::SEMANTIC_ORACLE_BASE, n)?;
    let op = match &rules {
        SemanticRules::Basic => None,
        SemanticRules::Convergent { op, .. } | SemanticRules::Formal { op } => Some(*op),
    };
    let mut prod = Vec::new();
    if let Some(op) = op {
        if op.base() != base {
            return Err(Error::BaseMismatch);
        }
        for a in 0..n {
            for b in 0..n {
                let entry = op.get(a, b).ok_or(Error::WrongOperationKind(
                    "semantic closure needs a total operation",
                ))?;
                prod.push(mask::low_word(entry.words()));
            }
        }
    }
    let lift = |u: u64, v: u64| -> u64 {
        let mut out = 0u64;
        for a in 0..n {
            if u & (1 << a) == 0 {
                continue;
            }
            for b in 0..n {
                if v & (1 << b) != 0 {
                    out |= prod[a * n + b];
                }
            }
        }
        out
    };
    let total = 1usize << n;
    let mut cl: Vec<u64> = (0..total as u64).collect();
    let mut grow = |cl: &mut [u64], m: usize, bits: u64| -> bool {
        if cl[m] | bits != cl[m] {
            cl[m] |= bits;
            true
        } else {
            false
        }
    };
    loop {
        let mut changed = false;
        for (a, ax) in axioms.iter_all() {
            let m = mask::low_word(ax.cover.words()) as usize;
            changed |= grow(&mut cl, m, 1 << a);
        }
        for m in 0..total {
            for v in 0..total {
                if v as u64 & !cl[m] == 0 {
                    let bits = cl[v];
                    changed |= grow(&mut cl, m, bits);
                }
            }
        }
        match &rules {
            SemanticRules::Basic => {}
            SemanticRules::Convergent { op: _, unit } => {
                changed |= close_product_rules(&mut cl, total, n, &lift, &mut grow)?;
                if let Some(i) = unit {
                    let i = mask::low_word(i.words());
                    for a in 0..n {
                        let ai = lift(1 << a, i) as usize;
                        changed |= grow(&mut cl, ai, 1 << a);
                        changed |= grow(&mut cl, 1 << a, ai as u64);
                    }
                }
            }
            SemanticRules::Formal { op: _ } => {
                changed |= close_product_rules(&mut cl, total, n, &lift, &mut grow)?;
                for b in 0..n {
                    for c in 0..n {
                        let bc = lift(1 << b, 1 << c);
                        changed |= grow(&mut cl, 1 << c, bc);
                    }
                }
                for a in 0..n {
                    let aa = lift(1 << a, 1 << a) as usize;
                    changed |= grow(&mut cl, aa, 1 << a);
                }
            }
        }
        if !changed {
            return Ok(cl);
        }
    }
}

fn close_product_rules(
    cl: &mut [u64],
    total: usize,
    n: usize,
    lift: &dyn Fn(u64, u64) -> u64,
    grow: &mut dyn FnMut(&mut [u64], usize, u64) -> bool,
) -> Result<bool> {
    let mut changed = false;
    for v in 0..total {
        for w in 0..total as u64 {
            let vw = lift(v as u64, w) as usize;
            let bits = lift(cl[v], w);
            changed |= grow(cl, vw, bits);
            let wv = lift(w, v as u64) as usize;
            let bits = lift(w, cl[v]);
            changed |= grow(cl, wv, bits);
        }
    }
    for b in 0..n {
        for c in 0..n {
            let bc = lift(1 << b, 1 << c);
            let cb = lift(1 << c, 1 << b) as usize;
            changed |= grow(cl, cb, bc);
            for d in 0..n {
                let left = lift(bc, 1 << d) as usize;
                let right = lift(1 << b, lift(1 << c, 1 << d)) as usize;
                changed |= grow(cl, right, left as u64);
                changed |= grow(cl, left, right as u64);
            }
        }
    }
    Ok(changed)
}

/// The finitely many saturated subsets of a cover, in ascending mask
/// order.
pub struct SatLattice {
    base: Base,
    points: Vec<Subset>,
}

pub fn sat_lattice<C: Cover + ?Sized>(cover: &C) -> Result<SatLattice> {
    let base = cover.base().clone();
    caps::ensure("lattice base", caps::LATTICE_BASE, base.len())?;
    let mut points = Vec::new();
    for u in crate::subset::enumerate_all_subsets(&base)? {
        let sat = cover.saturate(&u)?;
        if !points.contains(&sat) {
            points.push(sat);
        }
    }
    points.sort_by_key(|p| mask::low_word(p.words()));
    Ok(SatLattice { base, points })
}

impl SatLattice {
    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn points(&self) -> &[Subset] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Covering relation of the inclusion order: pairs `(i, j)` where
    /// point `i` sits directly below point `j`.
    pub fn hasse_edges(&self) -> Result<Vec<(usize, usize)>> {
        let mut edges = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            for (j, q) in self.points.iter().enumerate() {
                if i == j || !p.is_subset(q)? || p == q {
                    continue;
                }
                let mut direct = true;
                for (k, r) in self.points.iter().enumerate() {
                    if k == i || k == j {
                        continue;
                    }
                    if p.is_subset(r)? && r.is_subset(q)? && r != p && r != q {
                        direct = false;
                        break;
                    }
                }
                if direct {
                    edges.push((i, j));
                }
            }
        }
        Ok(edges)
    }
}
