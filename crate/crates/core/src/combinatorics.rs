//! Multi-indices of degeneracies, Peiffer index pairs, and shuffle signs.
//!
//! A multi-index `α = {i_l > … > i_1}` at level `n` names the composite
//! `s_α = s_{i_l} ∘ … ∘ s_{i_1}` landing in level `n`. It corresponds to the
//! monotone surjection `σ_α : [n] → [n − ♯α]` collapsing `i` and `i + 1` for
//! each `i ∈ α`, which is how faces and degeneracies act on the summands of
//! the decomposition `𝔤_n = ⊕_{α ∈ S(n)} s_α N𝔤_{n−♯α}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::AlgebraError;

/// A set of degeneracy indices, stored as a bitmask.
///
/// The derived order on the mask is the order `∅ < {0} < {1} < {1,0} < {2} < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// Builds from a strictly decreasing list of indices.
    pub fn new(indices: &[usize]) -> Result<Self, AlgebraError> {
        let mut mask = 0u32;
        for w in indices.windows(2) {
            if w[0] <= w[1] {
                return Err(AlgebraError::IndexOutOfRange { index: w[1], level: w[0] });
            }
        }
        for &i in indices {
            if i >= 31 {
                return Err(AlgebraError::IndexOutOfRange { index: i, level: 31 });
            }
            mask |= 1 << i;
        }
        Ok(MultiIndex(mask))
    }

    pub fn from_mask(mask: u32) -> Self {
        MultiIndex(mask)
    }

    pub fn singleton(i: usize) -> Self {
        MultiIndex(1 << i)
    }

    /// `{0, …, n−1}`.
    pub fn full(n: usize) -> Self {
        MultiIndex(((1u64 << n) - 1) as u32)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn union(self, other: Self) -> Self {
        MultiIndex(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        MultiIndex(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// `{0, …, n−1} ∖ self`.
    pub fn complement(self, n: usize) -> Self {
        MultiIndex(Self::full(n).0 & !self.0)
    }

    /// True when every entry is `< n`.
    pub fn fits(self, n: usize) -> bool {
        self.0 & !Self::full(n).0 == 0
    }

    pub fn ascending(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn descending(self) -> Vec<usize> {
        let mut v: Vec<usize> = self.ascending().collect();
        v.reverse();
        v
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.descending().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// All `2ⁿ` subsets of `{0, …, n−1}` in increasing order.
pub fn enum_s(n: usize) -> Vec<MultiIndex> {
    (0..(1u32 << n)).map(MultiIndex).collect()
}

/// An index pair `(α, β)` at level `n` with `∅ < α < β` and `α ∩ β = ∅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeifferPair {
    pub n: usize,
    pub alpha: MultiIndex,
    pub beta: MultiIndex,
}

impl PeifferPair {
    pub fn is_valid(&self) -> bool {
        !self.alpha.is_empty()
            && self.alpha < self.beta
            && self.alpha.is_disjoint(self.beta)
            && self.alpha.fits(self.n)
            && self.beta.fits(self.n)
    }

    /// Membership in `P̄(n)`: additionally `α ∪ β = {0, …, n−1}`.
    pub fn is_covering(&self) -> bool {
        self.is_valid() && self.alpha.union(self.beta) == MultiIndex::full(self.n)
    }

    /// Level of the first argument, `n − ♯α`.
    pub fn alpha_degree(&self) -> usize {
        self.n - self.alpha.len()
    }

    /// Level of the second argument, `n − ♯β`.
    pub fn beta_degree(&self) -> usize {
        self.n - self.beta.len()
    }
}

/// `P(n)`: all pairs with `∅ < α < β`, `α ∩ β = ∅`, in lexicographic order of `(α, β)`.
pub fn enum_p(n: usize) -> Vec<PeifferPair> {
    let s = enum_s(n);
    let mut out = Vec::new();
    for &alpha in &s[1..] {
        for &beta in &s {
            let p = PeifferPair { n, alpha, beta };
            if p.is_valid() {
                out.push(p);
            }
        }
    }
    out
}

/// `P̄(n)`: pairs of `P(n)` whose union is `{0, …, n−1}`.
pub fn enum_pbar(n: usize) -> Vec<PeifferPair> {
    enum_p(n).into_iter().filter(PeifferPair::is_covering).collect()
}

/// `P̄(n₁, n₂) ⊆ P̄(n₁ + n₂)`: pairs with `n − ♯α = n₁` and `n − ♯β = n₂`.
pub fn enum_pbar_parts(n1: usize, n2: usize) -> Vec<PeifferPair> {
    enum_pbar(n1 + n2)
        .into_iter()
        .filter(|p| p.alpha_degree() == n1 && p.beta_degree() == n2)
        .collect()
}

/// Sign of the permutation sorting `(first ascending, second ascending)`; the sets must be disjoint.
pub fn concat_sign(first: MultiIndex, second: MultiIndex) -> i32 {
    debug_assert!(first.is_disjoint(second));
    let inversions: usize = first
        .ascending()
        .map(|a| second.ascending().filter(|&b| b < a).count())
        .sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Parity of the shuffle `(S(n)∖α, S(n)∖β)` for `(α, β) ∈ P̄(n)`.
pub fn shuffle_sign(n: usize, alpha: MultiIndex, beta: MultiIndex) -> Result<i32, AlgebraError> {
    let pair = PeifferPair { n, alpha, beta };
    if !pair.is_covering() {
        return Err(AlgebraError::IndexOutOfRange { index: beta.mask() as usize, level: n });
    }
    Ok(concat_sign(alpha.complement(n), beta.complement(n)))
}

/// The surjection `σ_α : [n] → [n − ♯α]` as its list of values.
pub fn surjection(alpha: MultiIndex, n: usize) -> Vec<usize> {
    (0..=n).map(|j| j - alpha.ascending().filter(|&i| i < j).count()).collect()
}

/// Degeneracy set `{j : h(j) = h(j+1)}` of a monotone surjection.
pub fn degeneracy_set(h: &[usize]) -> MultiIndex {
    let mut mask = 0u32;
    for j in 0..h.len().saturating_sub(1) {
        if h[j] == h[j + 1] {
            mask |= 1 << j;
        }
    }
    MultiIndex(mask)
}

/// How `∂_i` acts on the summand `s_α N𝔤_m` of level `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceAction {
    /// `∂_i s_α x = s_{α'} x`.
    Degenerate(MultiIndex),
    /// `∂_i s_α x = s_{α'} ∂_j x`, with `x` now one level lower.
    Face { j: usize, alpha: MultiIndex },
}

/// Rewrites `∂_i ∘ s_α` at level `n` as a degeneracy composite after at most one face.
pub fn face_through(alpha: MultiIndex, n: usize, i: usize) -> FaceAction {
    let sigma = surjection(alpha, n);
    let m = n - alpha.len();
    let h: Vec<usize> = (0..n).map(|t| sigma[if t < i { t } else { t + 1 }]).collect();
    let mut hit = alloc::vec![false; m + 1];
    for &v in &h {
        hit[v] = true;
    }
    match hit.iter().position(|&b| !b) {
        None => FaceAction::Degenerate(degeneracy_set(&h)),
        Some(j) => {
            let reduced: Vec<usize> = h.iter().map(|&v| if v < j { v } else { v - 1 }).collect();
            FaceAction::Face { j, alpha: degeneracy_set(&reduced) }
        }
    }
}

/// The multi-index of `s_i ∘ s_α`, with `s_α` landing at level `n`.
pub fn degeneracy_through(alpha: MultiIndex, n: usize, i: usize) -> MultiIndex {
    let sigma = surjection(alpha, n);
    let h: Vec<usize> = (0..=n + 1).map(|t| sigma[if t <= i { t } else { t - 1 }]).collect();
    degeneracy_set(&h)
}

/// For `γ ⊆ α` at level `n`, the multi-index `α'` with `s_α = s_γ ∘ s_{α'}`.
pub fn factor_through(alpha: MultiIndex, gamma: MultiIndex, n: usize) -> MultiIndex {
    debug_assert_eq!(alpha.intersection(gamma), gamma);
    let sa = surjection(alpha, n);
    let sg = surjection(gamma, n);
    let mut tau = alloc::vec![0usize; n - gamma.len() + 1];
    for j in 0..=n {
        tau[sg[j]] = sa[j];
    }
    degeneracy_set(&tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mi(v: &[usize]) -> MultiIndex {
        MultiIndex::new(v).unwrap()
    }

    #[test]
    fn s_of_small_levels() {
        assert_eq!(enum_s(0), vec![MultiIndex::EMPTY]);
        assert_eq!(enum_s(2), vec![mi(&[]), mi(&[0]), mi(&[1]), mi(&[1, 0])]);
        let s3 = enum_s(3);
        assert_eq!(s3.len(), 8);
        assert_eq!(&s3[6..], &[mi(&[2, 1]), mi(&[2, 1, 0])]);
        assert_eq!(s3[4], mi(&[2]));
        assert_eq!(s3[5], mi(&[2, 0]));
    }

    #[test]
    fn rejects_non_decreasing_lists() {
        assert!(MultiIndex::new(&[0, 1]).is_err());
        assert!(MultiIndex::new(&[1, 1]).is_err());
    }

    #[test]
    fn pbar_examples() {
        assert_eq!(enum_pbar(2), vec![PeifferPair { n: 2, alpha: mi(&[0]), beta: mi(&[1]) }]);
        assert_eq!(enum_pbar_parts(1, 2), vec![PeifferPair { n: 3, alpha: mi(&[1, 0]), beta: mi(&[2]) }]);
        assert!(enum_pbar(1).is_empty());
        assert!(enum_pbar(0).is_empty());
    }

    #[test]
    fn pbar_matches_exhaustive_subset_pairs() {
        for n in 0..6 {
            let mut brute = Vec::new();
            for a in enum_s(n) {
                for b in enum_s(n) {
                    if !a.is_empty() && a < b && a.is_disjoint(b) && a.union(b) == MultiIndex::full(n) {
                        brute.push(PeifferPair { n, alpha: a, beta: b });
                    }
                }
            }
            assert_eq!(enum_pbar(n), brute);
        }
    }

    #[test]
    fn shuffle_signs() {
        assert_eq!(shuffle_sign(2, mi(&[0]), mi(&[1])).unwrap(), -1);
        assert!(shuffle_sign(2, mi(&[1]), mi(&[0])).is_err());
        // Complements ({2}, {1,0}) concatenated as (2, 0, 1): two inversions.
        assert_eq!(shuffle_sign(3, mi(&[1, 0]), mi(&[2])).unwrap(), 1);
    }

    #[test]
    fn block_swap_parity() {
        for n in 1..7 {
            for p in enum_pbar(n) {
                let (ca, cb) = (p.alpha.complement(n), p.beta.complement(n));
                let lhs = shuffle_sign(n, p.alpha, p.beta).unwrap() * concat_sign(cb, ca);
                let e = (ca.len() * cb.len()) % 2;
                assert_eq!(lhs, if e == 0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn faces_of_degeneracies_follow_simplicial_identities() {
        // ∂_i s_j = s_{j−1} ∂_i (i < j), id (i = j, j+1), s_j ∂_{i−1} (i > j+1).
        let n = 3;
        for j in 0..n {
            let a = MultiIndex::singleton(j);
            for i in 0..=n {
                let got = face_through(a, n, i);
                let expected = if i < j {
                    FaceAction::Face { j: i, alpha: MultiIndex::singleton(j - 1) }
                } else if i == j || i == j + 1 {
                    FaceAction::Degenerate(MultiIndex::EMPTY)
                } else {
                    FaceAction::Face { j: i - 1, alpha: MultiIndex::singleton(j) }
                };
                assert_eq!(got, expected, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn degeneracy_composition_normal_form() {
        // s_1 ∘ s_0 lands at level 2 as {1,0}; s_0 ∘ s_0 = s_1 ∘ s_0 as well.
        assert_eq!(degeneracy_through(mi(&[0]), 1, 1), mi(&[1, 0]));
        assert_eq!(degeneracy_through(mi(&[0]), 1, 0), mi(&[1, 0]));
        // s_0 ∘ s_1 = s_2 ∘ s_0.
        assert_eq!(degeneracy_through(mi(&[1]), 2, 0), mi(&[2, 0]));
        assert_eq!(factor_through(mi(&[2, 1, 0]), mi(&[1]), 3), mi(&[1, 0]));
    }
}
