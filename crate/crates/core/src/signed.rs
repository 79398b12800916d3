//! Signed sets: mappings from ground indices to `{+1, -1, 0}`.
//!
//! A signed set is stored as two disjoint masks, the positive part and the
//! negative part; their union is the support. Circuits and cocircuits are
//! signed sets, as are the candidate sign vectors used during dual
//! computation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ground::ElemSet;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SignedSet {
    plus: ElemSet,
    minus: ElemSet,
}

impl SignedSet {
    pub const EMPTY: SignedSet = SignedSet {
        plus: ElemSet::EMPTY,
        minus: ElemSet::EMPTY,
    };

    pub fn new(plus: ElemSet, minus: ElemSet) -> Result<Self> {
        if plus.intersects(minus) {
            return Err(Error::InvalidInput(format!(
                "positive part {plus:?} and negative part {minus:?} overlap"
            )));
        }
        Ok(SignedSet { plus, minus })
    }

    pub fn plus(self) -> ElemSet {
        self.plus
    }

    pub fn minus(self) -> ElemSet {
        self.minus
    }

    pub fn support(self) -> ElemSet {
        self.plus.union(self.minus)
    }

    pub fn is_empty(self) -> bool {
        self.support().is_empty()
    }

    pub fn sign(self, i: usize) -> i8 {
        if self.plus.contains(i) {
            1
        } else if self.minus.contains(i) {
            -1
        } else {
            0
        }
    }

    /// All signs positive on the support (vacuously true when empty).
    pub fn is_positive(self) -> bool {
        self.minus.is_empty()
    }

    pub fn negate(self) -> Self {
        SignedSet {
            plus: self.minus,
            minus: self.plus,
        }
    }

    /// Flips the sign on every supported element of `s`, leaving the rest.
    pub fn negate_on(self, s: ElemSet) -> Self {
        SignedSet {
            plus: self.plus.minus(s).union(self.minus.intersect(s)),
            minus: self.minus.minus(s).union(self.plus.intersect(s)),
        }
    }

    /// Zeroes the signs on `erased`, keeping the rest: the signed set equal
    /// to `self` off `erased` and zero on it.
    pub fn restrict(self, erased: ElemSet) -> Self {
        SignedSet {
            plus: self.plus.minus(erased),
            minus: self.minus.minus(erased),
        }
    }

    /// The canonical member of the pair `{X, -X}`: sign `+1` on the
    /// minimum-index support element. The empty signed set is its own
    /// representative.
    pub fn canonical(self) -> Self {
        match self.support().min_index() {
            Some(i) if self.minus.contains(i) => self.negate(),
            _ => self,
        }
    }

    pub fn is_canonical(self) -> bool {
        self == self.canonical()
    }

    /// Standard orthogonality: disjoint supports, or the products over the
    /// common support take both values `+1` and `-1`.
    pub fn is_orthogonal(self, other: SignedSet) -> bool {
        let agree = self
            .plus
            .intersect(other.plus)
            .union(self.minus.intersect(other.minus));
        let disagree = self
            .plus
            .intersect(other.minus)
            .union(self.minus.intersect(other.plus));
        if agree.is_empty() && disagree.is_empty() {
            return true;
        }
        !agree.is_empty() && !disagree.is_empty()
    }

    /// Rewrites indices through a removal map. Every supported index must
    /// survive the map; callers restrict or filter first.
    pub fn remap(self, map: &[Option<usize>]) -> SignedSet {
        let move_mask = |mask: ElemSet| {
            ElemSet::from_indices(mask.iter().map(|i| {
                map[i].expect("remapped signed set must not touch removed elements")
            }))
        };
        SignedSet {
            plus: move_mask(self.plus),
            minus: move_mask(self.minus),
        }
    }
}

impl PartialOrd for SignedSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.support().bits(), self.plus.bits()).cmp(&(other.support().bits(), other.plus.bits()))
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(+{:?} -{:?})", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ss(plus: &[usize], minus: &[usize]) -> SignedSet {
        SignedSet::new(
            ElemSet::from_indices(plus.iter().copied()),
            ElemSet::from_indices(minus.iter().copied()),
        )
        .unwrap()
    }

    // Index convention of the G1 fixture: a=0, b=1, p1=2, c=3, d=4, p2=5, e=6.
    #[test]
    fn restrict_erases_exactly_the_given_set() {
        let x = ss(&[2, 3, 0], &[6]); // (p1:+, c:+, e:-, a:+)
        let erased = ElemSet::from_indices([6]);
        assert_eq!(x.restrict(erased), ss(&[2, 3, 0], &[]));
        assert_eq!(x.restrict(erased).support(), x.support().minus(erased));

        let y = ss(&[4], &[6]); // (d:+, e:-) on the D2 indexing d=4? keep indices abstract
        assert_eq!(y.restrict(ElemSet::EMPTY), y);
        assert_eq!(y.restrict(y.support()), SignedSet::EMPTY);
    }

    #[test]
    fn negate_on_flips_only_inside() {
        let x = ss(&[0], &[1]); // (d:+, e:-)
        assert_eq!(x.negate_on(ElemSet::from_indices([1])), ss(&[0, 1], &[]));
        assert_eq!(x.negate_on(ElemSet::EMPTY), x);
    }

    #[test]
    fn orthogonality_cases() {
        // circuit vs bond of the D2 fixture: products {+1, -1}
        assert!(ss(&[0], &[1]).is_orthogonal(ss(&[0, 1], &[])));
        // disjoint supports
        assert!(ss(&[0], &[]).is_orthogonal(ss(&[1], &[])));
        // all products +1
        assert!(!ss(&[0, 1], &[]).is_orthogonal(ss(&[0, 1], &[])));
        // single-element overlap
        assert!(!ss(&[0, 2], &[]).is_orthogonal(ss(&[2], &[5])));
    }

    #[test]
    fn canonical_fixes_min_support_sign() {
        let x = ss(&[3], &[1]);
        assert_eq!(x.canonical(), ss(&[1], &[3]));
        assert!(x.canonical().is_canonical());
        assert_eq!(SignedSet::EMPTY.canonical(), SignedSet::EMPTY);
    }

    fn arb_signed(n: usize) -> impl Strategy<Value = SignedSet> {
        let m = (1u32 << n) - 1;
        (0..=m, 0..=m).prop_map(|(a, b)| {
            SignedSet::new(ElemSet::from_bits(a & !b), ElemSet::from_bits(b & !a)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn negate_on_is_an_involution(x in arb_signed(6), s in 0u32..64) {
            let s = ElemSet::from_bits(s);
            prop_assert_eq!(x.negate_on(s).negate_on(s), x);
        }

        #[test]
        fn restrict_drops_support(x in arb_signed(6), y in 0u32..64) {
            let y = ElemSet::from_bits(y);
            prop_assert_eq!(x.restrict(y).support(), x.support().minus(y));
        }

        #[test]
        fn orthogonality_is_symmetric_and_sign_invariant(
            x in arb_signed(6),
            y in arb_signed(6),
        ) {
            prop_assert_eq!(x.is_orthogonal(y), y.is_orthogonal(x));
            prop_assert_eq!(x.is_orthogonal(y), x.is_orthogonal(y.negate()));
            prop_assert_eq!(x.is_orthogonal(y), x.negate().is_orthogonal(y));
        }
    }
}
