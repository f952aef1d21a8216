//! Word-parallel bit vectors used as membership masks.
//!
//! Every subset, axiom cover and relation column is one of these. All
//! operations work whole words at a time; nothing here knows about bases.

pub type Words = Box<[u64]>;

pub fn word_count(bits: usize) -> usize {
    bits.div_ceil(64)
}

pub fn zero(bits: usize) -> Words {
    vec![0u64; word_count(bits)].into_boxed_slice()
}

/// All `bits` low positions set, the tail of the last word clear.
pub fn full(bits: usize) -> Words {
    let mut w = vec![!0u64; word_count(bits)].into_boxed_slice();
    let tail = bits % 64;
    if tail != 0 {
        if let Some(last) = w.last_mut() {
            *last = (1u64 << tail) - 1;
        }
    }
    if bits == 0 {
        w = Vec::new().into_boxed_slice();
    }
    w
}

pub fn get(w: &[u64], i: usize) -> bool {
    w[i / 64] >> (i % 64) & 1 != 0
}

pub fn set(w: &mut [u64], i: usize) {
    w[i / 64] |= 1 << (i % 64);
}

pub fn clear(w: &mut [u64], i: usize) {
    w[i / 64] &= !(1 << (i % 64));
}

pub fn union_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

pub fn intersect_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

pub fn subtract_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

pub fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub fn is_empty(a: &[u64]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn count(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

/// Count of elements of `a` not in `b`.
pub fn count_missing(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & !y).count_ones() as usize).sum()
}

pub fn ones(w: &[u64]) -> impl Iterator<Item = usize> + '_ {
    w.iter().enumerate().flat_map(|(wi, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            }
        })
    })
}

/// Interprets the low word as a numeric mask; only valid for bases that fit
/// in 64 bits, which is where all exhaustive sweeps live.
pub fn low_word(w: &[u64]) -> u64 {
    w.first().copied().unwrap_or(0)
}

pub fn from_low_word(bits: usize, m: u64) -> Words {
    let mut w = zero(bits);
    if let Some(first) = w.first_mut() {
        *first = m;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_masks_tail_word() {
        let w = full(67);
        assert_eq!(w.len(), 2);
        assert_eq!(w[0], !0);
        assert_eq!(w[1], 0b111);
        assert_eq!(count(&w), 67);
    }

    #[test]
    fn ones_roundtrip() {
        let mut w = zero(130);
        for i in [0, 63, 64, 129] {
            set(&mut w, i);
        }
        assert_eq!(ones(&w).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert!(get(&w, 64));
        clear(&mut w, 64);
        assert!(!get(&w, 64));
        assert_eq!(count(&w), 3);
    }

    #[test]
    fn subset_and_missing() {
        let mut a = zero(70);
        let mut b = zero(70);
        set(&mut a, 3);
        set(&mut a, 65);
        set(&mut b, 3);
        assert!(!is_subset(&a, &b));
        assert_eq!(count_missing(&a, &b), 1);
        set(&mut b, 65);
        assert!(is_subset(&a, &b));
    }
}
