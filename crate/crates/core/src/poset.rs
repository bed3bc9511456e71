//! The cyclic Bruhat order `CB_{k,n}`: decorated permutations with `K = k`,
//! ordered by uncrossing simple crossings into simple alignments.
//!
//! Corank is the alignment count `A`, so covers go downward from `A` to
//! `A + 1`. The poset is materialized in full, which is only sensible for
//! small `n`; [`DEFAULT_BOUND`] guards the construction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::decperm::{enumerate_decorated, DecoratedPermutation, Labeling};
use crate::{Error, Result};

/// Largest `n` accepted by [`build_cb`].
pub const DEFAULT_BOUND: usize = 6;

/// One uncrossing step: the simple crossing `a→d, c→b` becomes `a→b, c→d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverMove {
    /// Start positions of the two crossing chords, `i < j`.
    pub pair: (usize, usize),
    pub labeling: Labeling,
    pub result: DecoratedPermutation,
}

/// Every cover move out of `p`, one per simple crossing labeling. Distinct
/// moves may reach the same element.
pub fn cover_moves(p: &DecoratedPermutation) -> Vec<CoverMove> {
    let mut out = Vec::new();
    for (i, j) in p.crossing_pairs() {
        for lab in p.crossing_labelings(i, j) {
            if p.is_simple_labeling(&lab) {
                out.push(CoverMove {
                    pair: (i, j),
                    labeling: lab,
                    result: p.with_chords(&lab),
                });
            }
        }
    }
    out
}

/// The elements covered by `p`, deduplicated and sorted.
pub fn covers(p: &DecoratedPermutation) -> Vec<DecoratedPermutation> {
    let mut out: Vec<_> = cover_moves(p).into_iter().map(|m| m.result).collect();
    out.sort();
    out.dedup();
    out
}

/// `CB_{k,n}` as an explicit DAG.
#[derive(Clone, Debug)]
pub struct CbPoset {
    k: usize,
    n: usize,
    elements: Vec<DecoratedPermutation>,
    /// `(upper, lower)` indices into `elements`, sorted, without repeats.
    edges: Vec<(usize, usize)>,
    /// Number of cover moves realizing each edge.
    multiplicity: Vec<usize>,
    corank: Vec<usize>,
}

/// Builds `CB_{k,n}` for `n ≤` [`DEFAULT_BOUND`].
pub fn build_cb(k: usize, n: usize) -> Result<CbPoset> {
    build_cb_bounded(k, n, DEFAULT_BOUND)
}

pub fn build_cb_bounded(k: usize, n: usize, bound: usize) -> Result<CbPoset> {
    let elements = cb_elements(k, n, bound)?;
    let moves = elements.iter().map(cover_moves).collect();
    CbPoset::assemble(k, n, elements, moves)
}

/// The element set of `CB_{k,n}` after range and bound checks.
pub fn cb_elements(k: usize, n: usize, bound: usize) -> Result<Vec<DecoratedPermutation>> {
    if k > n {
        return Err(Error::domain(alloc::format!(
            "CB_(k,n) needs k <= n, got k = {k}, n = {n}"
        )));
    }
    Error::check_bound("poset size n", n, bound)?;
    Ok(enumerate_decorated(n, Some(k)).collect())
}

impl CbPoset {
    /// Assembles the poset from its elements and, per element, the cover
    /// moves leaving it. Lets callers generate the moves in parallel.
    pub fn assemble(
        k: usize,
        n: usize,
        elements: Vec<DecoratedPermutation>,
        moves: Vec<Vec<CoverMove>>,
    ) -> Result<Self> {
        if moves.len() != elements.len() {
            return Err(Error::domain("one cover list is needed per element"));
        }
        let index: BTreeMap<&DecoratedPermutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut counted: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (u, list) in moves.iter().enumerate() {
            for m in list {
                let v = *index.get(&m.result).ok_or_else(|| {
                    Error::domain(alloc::format!(
                        "cover {} of {} is not an element",
                        m.result,
                        elements[u]
                    ))
                })?;
                *counted.entry((u, v)).or_default() += 1;
            }
        }
        let (edges, multiplicity) = counted.into_iter().unzip();
        let corank = elements
            .iter()
            .map(DecoratedPermutation::alignments)
            .collect();
        Ok(Self {
            k,
            n,
            elements,
            edges,
            multiplicity,
            corank,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[DecoratedPermutation] {
        &self.elements
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_multiplicity(&self) -> &[usize] {
        &self.multiplicity
    }

    pub fn corank(&self) -> &[usize] {
        &self.corank
    }

    pub fn index_of(&self, p: &DecoratedPermutation) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }

    /// `hist[ℓ]` counts elements of corank `ℓ`, for `ℓ ≤ k(n−k)`.
    pub fn corank_histogram(&self) -> Vec<usize> {
        let mut hist = alloc::vec![0; self.k * (self.n - self.k) + 1];
        for &c in &self.corank {
            hist[c] += 1;
        }
        hist
    }

    /// Indices of the elements of corank 0.
    pub fn top_elements(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.corank[i] == 0)
            .collect()
    }

    /// First edge along which `A` does not grow by exactly 1 or `K` changes.
    pub fn find_bad_grading(&self) -> Option<(usize, usize)> {
        self.edges.iter().copied().find(|&(u, v)| {
            self.corank[v] != self.corank[u] + 1
                || self.elements[u].k_stat() != self.elements[v].k_stat()
        })
    }

    /// First edge along which the crossing count fails to drop.
    pub fn find_crossing_increase(&self) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| self.elements[v].crossings() >= self.elements[u].crossings())
    }

    /// Whether some edge lowers the crossing count by more than one.
    pub fn has_crossing_jump(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.elements[u].crossings() > self.elements[v].crossings() + 1)
    }

    /// Checks that conjugation by the long cycle maps the element set and
    /// the edge set onto themselves.
    pub fn is_cyclic_automorphism(&self) -> bool {
        let index: BTreeMap<&DecoratedPermutation, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let image: Option<Vec<usize>> = self
            .elements
            .iter()
            .map(|p| index.get(&p.cyclic_shift()).copied())
            .collect();
        let Some(image) = image else { return false };
        let mut mapped: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (image[u], image[v]))
            .collect();
        mapped.sort_unstable();
        mapped == self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decperm::Orientation;
    use alloc::vec;

    fn dp(s: &str) -> DecoratedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn covers_of_transposition() {
        let got = covers(&dp("2,1"));
        assert_eq!(got, vec![dp("1,2 ccw=1 cw=2"), dp("1,2 ccw=2 cw=1")]);
    }

    #[test]
    fn pi_k_has_covers() {
        for n in 1..=5 {
            for k in 1..n {
                assert!(!covers(&DecoratedPermutation::pi_k(k, n).unwrap()).is_empty());
            }
        }
        assert!(
            covers(&DecoratedPermutation::identity(3, Orientation::Counterclockwise).unwrap())
                .is_empty()
        );
    }

    #[test]
    fn small_posets() {
        let p = build_cb(1, 2).unwrap();
        assert_eq!(p.elements().len(), 3);
        assert_eq!(p.edges().len(), 2);
        assert_eq!(p.corank_histogram(), [1, 2]);

        let p = build_cb(2, 4).unwrap();
        assert_eq!(p.elements().len(), 33);
        assert_eq!(p.corank_histogram(), [1, 4, 10, 12, 6]);
        assert_eq!(p.find_bad_grading(), None);
        assert!(p.is_cyclic_automorphism());

        let p = build_cb(0, 3).unwrap();
        assert_eq!((p.elements().len(), p.edges().len()), (1, 0));
        assert!(matches!(
            build_cb(3, 9),
            Err(Error::Resource { limit: 6, .. })
        ));
        assert!(build_cb(4, 3).is_err());
    }

    #[test]
    fn maximal_corank_has_no_covers() {
        let p = build_cb(2, 4).unwrap();
        for (i, e) in p.elements().iter().enumerate() {
            if p.corank()[i] == 4 {
                assert!(covers(e).is_empty(), "{e}");
            }
        }
    }
}
