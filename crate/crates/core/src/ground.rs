//! Ground sets and bit-mask subsets.
//!
//! Every matroid in this crate lives on a small labelled ground set. Subsets
//! are packed into `u32` masks so that set algebra is constant time and
//! iteration order is always by index.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on ground-set size. Everything downstream enumerates subsets or
/// sign patterns, so masks fit comfortably in a `u32` and runtimes stay at
/// desk scale.
pub const MAX_GROUND: usize = 24;

/// Hard cap on the number of stored circuit representatives.
pub const MAX_CIRCUITS: usize = 100_000;

/// A subset of ground indices as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u32);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn single(i: usize) -> Self {
        debug_assert!(i < 32);
        ElemSet(1 << i)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n == 0 {
            ElemSet(0)
        } else {
            ElemSet(u32::MAX >> (32 - n))
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u32;
        for i in indices {
            debug_assert!(i < 32);
            bits |= 1 << i;
        }
        ElemSet(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersect(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn minus(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersects(self, other: ElemSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Proper subset.
    pub fn is_strict_subset(self, other: ElemSet) -> bool {
        self.0 != other.0 && self.is_subset(other)
    }

    pub fn min_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> ElemIter {
        ElemIter(self.0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates the indices of a mask in increasing order.
pub struct ElemIter(u32);

impl Iterator for ElemIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(i as usize)
        }
    }
}

/// All `k`-element subsets of `[n]` in lexicographic order of index lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElemSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut stack: Vec<usize> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, stack: &mut Vec<usize>, out: &mut Vec<ElemSet>) {
        if stack.len() == k {
            out.push(ElemSet::from_indices(stack.iter().copied()));
            return;
        }
        let need = k - stack.len();
        for i in start..=(n - need) {
            stack.push(i);
            rec(n, k, i + 1, stack, out);
            stack.pop();
        }
    }
    rec(n, k, 0, &mut stack, &mut out);
    out
}

/// Index translation after removing `removed` from a ground set of size `n`:
/// surviving indices are compacted in order.
pub fn removal_index_map(n: usize, removed: ElemSet) -> Vec<Option<usize>> {
    let mut map = Vec::with_capacity(n);
    let mut next = 0usize;
    for i in 0..n {
        if removed.contains(i) {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    map
}

/// A labelled ground set: `n` distinct non-empty labels, indexed `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "ground set has {} elements, the limit is {MAX_GROUND}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidInput(format!("label at position {i} is empty")));
            }
            if labels[..i].contains(l) {
                return Err(Error::InvalidInput(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn empty() -> Self {
        GroundSet { labels: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full_mask(&self) -> ElemSet {
        ElemSet::full(self.n())
    }

    /// Resolves labels into a mask; unknown labels are input errors.
    pub fn mask_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        let mut mask = ElemSet::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .position(l)
                .ok_or_else(|| Error::InvalidInput(format!("unknown element label {l:?}")))?;
            mask = mask.with(i);
        }
        Ok(mask)
    }

    pub fn labels_of(&self, mask: ElemSet) -> Vec<String> {
        mask.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn check_subset(&self, s: ElemSet) -> Result<()> {
        if s.is_subset(self.full_mask()) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "subset {s:?} has indices outside the ground set of size {}",
                self.n()
            )))
        }
    }

    /// The ground set after removing the masked elements, plus the old→new
    /// index map for surviving elements.
    pub fn without(&self, removed: ElemSet) -> (GroundSet, Vec<Option<usize>>) {
        let map = removal_index_map(self.n(), removed);
        let labels = self
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(*i))
            .map(|(_, l)| l.clone())
            .collect();
        (GroundSet { labels }, map)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}
