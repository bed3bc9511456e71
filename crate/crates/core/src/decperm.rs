//! Decorated permutations as chord diagrams: crossings, alignments, the
//! statistics `K` and `A`, and the enumeration oracle for `A_{k,n}(q)`.
//!
//! Positions are 0-based internally and 1-based in every textual form. The
//! points `1..n` sit clockwise on a circle and each `i` has a chord to `π(i)`.
//! A fixed point is a loop, oriented clockwise or counterclockwise.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::LaurentPoly;
use crate::{Error, Result};

/// Largest supported size; orientations are stored in a 64-bit mask.
pub const MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

/// A permutation of `{0..n}` with an orientation on each fixed point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    targets: Vec<usize>,
    /// Bit `i` set iff `i` is a counterclockwise fixed point.
    ccw: u64,
}

/// How two chords sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    SimpleCrossing,
    Crossing,
    SimpleAlignment,
    Alignment,
    Neither,
}

impl PairKind {
    pub fn is_crossing(self) -> bool {
        matches!(self, PairKind::Crossing | PairKind::SimpleCrossing)
    }

    pub fn is_alignment(self) -> bool {
        matches!(self, PairKind::Alignment | PairKind::SimpleAlignment)
    }
}

/// The four named endpoints of a chord pair, read clockwise from `a`.
///
/// For an alignment the chords are `a→b` and `c→d`; for a crossing they are
/// `a→d` and `c→b`. In both cases the points occur clockwise as `a, b, d, c`,
/// with `a = b` or `d = c` allowed in the degenerate configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl DecoratedPermutation {
    /// Builds from 0-based targets and the set of counterclockwise fixed
    /// points; every other fixed point is clockwise.
    pub fn new(targets: Vec<usize>, ccw_fixed: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = targets.len();
        Error::check_bound("permutation size", n, MAX_N)?;
        let mut seen = 0u64;
        for (i, &t) in targets.iter().enumerate() {
            if t >= n {
                return Err(Error::domain(alloc::format!(
                    "position {}: target {} is out of range 1..{n}",
                    i + 1,
                    t + 1
                )));
            }
            if seen >> t & 1 == 1 {
                return Err(Error::domain(alloc::format!(
                    "target {} occurs twice",
                    t + 1
                )));
            }
            seen |= 1 << t;
        }
        let mut ccw = 0u64;
        for p in ccw_fixed {
            if p >= n || targets[p] != p {
                return Err(Error::domain(alloc::format!(
                    "position {} is not a fixed point",
                    p + 1
                )));
            }
            ccw |= 1 << p;
        }
        Ok(Self { targets, ccw })
    }

    /// A permutation whose fixed points are all counterclockwise.
    pub fn regular(targets: Vec<usize>) -> Result<Self> {
        let fixed: Vec<usize> = (0..targets.len())
            .filter(|&i| targets.get(i) == Some(&i))
            .collect();
        Self::new(targets, fixed)
    }

    /// The identity with every loop oriented the same way.
    pub fn identity(n: usize, orientation: Orientation) -> Result<Self> {
        let targets = (0..n).collect();
        match orientation {
            Orientation::Clockwise => Self::new(targets, []),
            Orientation::Counterclockwise => Self::regular(targets),
        }
    }

    /// `π_k`, the unique element with `K = k` and no alignments:
    /// `i ↦ i − k (mod n)`, whose excedences are the `k` positions that wrap.
    /// `π_0` is the clockwise identity, `π_n` the counterclockwise one.
    pub fn pi_k(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::domain(alloc::format!(
                "pi_k needs k <= n, got k = {k}, n = {n}"
            )));
        }
        if k == n {
            return Self::identity(n, Orientation::Counterclockwise);
        }
        Self::new((0..n).map(|i| (i + n - k) % n).collect(), [])
    }

    pub fn n(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn target(&self, i: usize) -> usize {
        self.targets[i]
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.targets[i] == i
    }

    /// Orientation of a fixed point; `None` for a non-fixed position.
    pub fn orientation(&self, i: usize) -> Option<Orientation> {
        if !self.is_fixed(i) {
            None
        } else if self.is_ccw(i) {
            Some(Orientation::Counterclockwise)
        } else {
            Some(Orientation::Clockwise)
        }
    }

    fn is_ccw(&self, i: usize) -> bool {
        self.ccw >> i & 1 == 1
    }

    /// Every fixed point is counterclockwise.
    pub fn is_regular(&self) -> bool {
        (0..self.n()).all(|i| !self.is_fixed(i) || self.is_ccw(i))
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        (0..self.n()).filter(|&i| self.is_fixed(i)).count()
    }

    /// `K(π)`: positions with `π(i) > i` plus counterclockwise loops.
    pub fn k_stat(&self) -> usize {
        (0..self.n())
            .filter(|&i| self.targets[i] > i || self.is_ccw(i))
            .count()
    }

    /// Clockwise distance from `from` to `p`.
    fn offset(&self, from: usize, p: usize) -> usize {
        (p + self.n() - from) % self.n()
    }

    /// Tries `x = a→b`, `y = c→d` as an alignment labeling.
    fn alignment_labeling(&self, x: usize, y: usize) -> Option<Labeling> {
        let (a, b, c, d) = (x, self.targets[x], y, self.targets[y]);
        let (pb, pd, pc) = (self.offset(a, b), self.offset(a, d), self.offset(a, c));
        // A loop at `a` must be counterclockwise, a loop at `c` clockwise.
        if a == b && !self.is_ccw(a) {
            return None;
        }
        if c == d && self.is_ccw(c) {
            return None;
        }
        (pb < pd && pd <= pc).then_some(Labeling { a, b, c, d })
    }

    /// Tries `x = a→d`, `y = c→b` as a crossing labeling.
    fn crossing_labeling(&self, x: usize, y: usize) -> Option<Labeling> {
        let (a, d, c, b) = (x, self.targets[x], y, self.targets[y]);
        if a == d || c == b {
            return None;
        }
        let (pb, pd, pc) = (self.offset(a, b), self.offset(a, d), self.offset(a, c));
        (pb < pd && pd <= pc).then_some(Labeling { a, b, c, d })
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        if i >= n || j >= n || i == j {
            return Err(Error::domain(alloc::format!(
                "chords {} and {} do not form a pair of distinct chords of a size-{n} diagram",
                i + 1,
                j + 1
            )));
        }
        Ok(())
    }

    /// True when the chords starting at `i` and `j` intersect inside the
    /// circle or share an endpoint. Loops never cross anything.
    pub fn is_crossing(&self, i: usize, j: usize) -> bool {
        let (a, b, c, d) = (i, self.targets[i], j, self.targets[j]);
        if a == b || c == d {
            return false;
        }
        if a == c || a == d || b == c || b == d {
            return true;
        }
        let inside = |p: usize| self.offset(a, p) < self.offset(a, b);
        inside(c) != inside(d)
    }

    /// True when the chords starting at `i` and `j` form an alignment.
    pub fn is_alignment(&self, i: usize, j: usize) -> bool {
        !self.alignment_labelings(i, j).is_empty()
    }

    /// Every labeling under which the pair is an alignment.
    pub fn alignment_labelings(&self, i: usize, j: usize) -> Vec<Labeling> {
        let (a, b, c, d) = (i, self.targets[i], j, self.targets[j]);
        if a == c || a == d || b == c || b == d {
            return Vec::new();
        }
        [(i, j), (j, i)]
            .into_iter()
            .filter_map(|(x, y)| self.alignment_labeling(x, y))
            .collect()
    }

    /// Every labeling under which the pair is a crossing.
    pub fn crossing_labelings(&self, i: usize, j: usize) -> Vec<Labeling> {
        if !self.is_crossing(i, j) {
            return Vec::new();
        }
        [(i, j), (j, i)]
            .into_iter()
            .filter_map(|(x, y)| self.crossing_labeling(x, y))
            .collect()
    }

    /// `p` lies on the clockwise arc from `from` to `to`, endpoints included.
    fn on_arc(&self, from: usize, to: usize, p: usize) -> bool {
        self.offset(from, p) <= self.offset(from, to)
    }

    /// No chord other than the labeled two (and no loop) runs from
    /// `Arc(c, a)` to `Arc(b, d)`.
    pub fn is_simple_labeling(&self, lab: &Labeling) -> bool {
        (0..self.n()).all(|s| {
            let t = self.targets[s];
            s == lab.a
                || s == lab.c
                || s == t
                || !(self.on_arc(lab.c, lab.a, s) && self.on_arc(lab.b, lab.d, t))
        })
    }

    /// A crossing pair is simple when some crossing labeling of it is.
    pub fn is_simple_crossing(&self, i: usize, j: usize) -> Result<bool> {
        self.check_pair(i, j)?;
        if !self.is_crossing(i, j) {
            return Err(Error::domain(alloc::format!(
                "chords {} and {} do not cross",
                i + 1,
                j + 1
            )));
        }
        Ok(self
            .crossing_labelings(i, j)
            .iter()
            .any(|l| self.is_simple_labeling(l)))
    }

    /// An aligned pair is simple when some alignment labeling of it is.
    pub fn is_simple_alignment(&self, i: usize, j: usize) -> Result<bool> {
        self.check_pair(i, j)?;
        let labs = self.alignment_labelings(i, j);
        if labs.is_empty() {
            return Err(Error::domain(alloc::format!(
                "chords {} and {} are not aligned",
                i + 1,
                j + 1
            )));
        }
        Ok(labs.iter().any(|l| self.is_simple_labeling(l)))
    }

    pub fn classify(&self, i: usize, j: usize) -> Result<PairKind> {
        self.check_pair(i, j)?;
        Ok(if self.is_crossing(i, j) {
            if self.is_simple_crossing(i, j)? {
                PairKind::SimpleCrossing
            } else {
                PairKind::Crossing
            }
        } else if self.is_alignment(i, j) {
            if self.is_simple_alignment(i, j)? {
                PairKind::SimpleAlignment
            } else {
                PairKind::Alignment
            }
        } else {
            PairKind::Neither
        })
    }

    fn pairs_where(&self, pred: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| pred(i, j))
            .collect()
    }

    /// Aligned pairs as `(i, j)` chord start positions with `i < j`.
    pub fn alignment_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs_where(|i, j| self.is_alignment(i, j))
    }

    /// Crossing pairs as `(i, j)` chord start positions with `i < j`.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs_where(|i, j| self.is_crossing(i, j))
    }

    /// `A(π)`, the number of aligned pairs.
    pub fn alignments(&self) -> usize {
        self.pairs_where(|i, j| self.is_alignment(i, j)).len()
    }

    pub fn crossings(&self) -> usize {
        self.pairs_where(|i, j| self.is_crossing(i, j)).len()
    }

    /// `k(n−k) − A(π)` with `k = K(π)`.
    pub fn rank(&self) -> usize {
        let k = self.k_stat();
        (k * (self.n() - k))
            .checked_sub(self.alignments())
            .expect("alignment count exceeds k(n-k)")
    }

    /// Relabels every point `i` as `s(i)`: the result maps `s(i) ↦ s(π(i))`
    /// and keeps loop orientations. `s` must be a permutation of `0..n`.
    pub fn conjugate(&self, s: &[usize]) -> Result<Self> {
        let n = self.n();
        if s.len() != n {
            return Err(Error::domain(alloc::format!(
                "relabeling has size {} but the diagram has size {n}",
                s.len()
            )));
        }
        Self::new(s.to_vec(), [])?;
        let mut targets = alloc::vec![0; n];
        for i in 0..n {
            targets[s[i]] = s[self.targets[i]];
        }
        let ccw = (0..n).filter(|&i| self.is_ccw(i)).map(|i| s[i]);
        Self::new(targets, ccw)
    }

    /// Conjugation by the long cycle `i ↦ i + 1 (mod n)`.
    pub fn cyclic_shift(&self) -> Self {
        let n = self.n();
        let s: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        self.conjugate(&s).expect("the long cycle is a permutation")
    }

    /// Replaces targets and decoration; used by cover moves that rewrite two
    /// chords at once.
    pub(crate) fn with_chords(&self, lab: &Labeling) -> Self {
        let mut targets = self.targets.clone();
        targets[lab.a] = lab.b;
        targets[lab.c] = lab.d;
        let mut ccw = self.ccw;
        for p in [lab.a, lab.c] {
            ccw &= !(1u64 << p);
        }
        if lab.a == lab.b {
            ccw |= 1 << lab.a;
        }
        Self { targets, ccw }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = usize>) -> fmt::Result {
    for (idx, v) in items.enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// `3,1,5,4,8,6,7,2 ccw=4,7 cw=6`, 1-based; empty lists are omitted.
impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.targets.iter().map(|t| t + 1))?;
        let n = self.n();
        let ccw: Vec<usize> = (0..n).filter(|&i| self.is_ccw(i)).map(|i| i + 1).collect();
        let cw: Vec<usize> = (0..n)
            .filter(|&i| self.is_fixed(i) && !self.is_ccw(i))
            .map(|i| i + 1)
            .collect();
        if !ccw.is_empty() {
            f.write_str(" ccw=")?;
            write_list(f, ccw.into_iter())?;
        }
        if !cw.is_empty() {
            f.write_str(" cw=")?;
            write_list(f, cw.into_iter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DecoratedPermutation({self})")
    }
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::parse(alloc::format!(
                    "{what}: {tok:?} is not a positive integer"
                ))),
            }
        })
        .collect()
}

impl FromStr for DecoratedPermutation {
    type Err = Error;

    /// Parses the text form. Every fixed point must appear in exactly one of
    /// `ccw=` and `cw=`, and nothing else may.
    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let targets = parse_list(words.next().unwrap_or(""), "targets")?;
        let n = targets.len();
        let (mut ccw, mut cw): (Option<Vec<usize>>, Option<Vec<usize>>) = (None, None);
        for w in words {
            let (slot, rest) = if let Some(rest) = w.strip_prefix("ccw=") {
                (&mut ccw, rest)
            } else if let Some(rest) = w.strip_prefix("cw=") {
                (&mut cw, rest)
            } else {
                return Err(Error::parse(alloc::format!("unexpected token {w:?}")));
            };
            if slot.is_some() {
                return Err(Error::parse(alloc::format!(
                    "orientation list repeated in {w:?}"
                )));
            }
            *slot = Some(parse_list(rest, "orientation list")?);
        }
        let (ccw, cw) = (ccw.unwrap_or_default(), cw.unwrap_or_default());

        let perm = Self::new(targets, []).map_err(|e| Error::parse(alloc::format!("{e}")))?;
        let mut marked = alloc::vec![false; n];
        for &p in ccw.iter().chain(&cw) {
            if p >= n || !perm.is_fixed(p) {
                return Err(Error::parse(alloc::format!(
                    "position {} is not a fixed point",
                    p + 1
                )));
            }
            if core::mem::replace(&mut marked[p], true) {
                return Err(Error::parse(alloc::format!(
                    "fixed point {} is oriented twice",
                    p + 1
                )));
            }
        }
        if let Some(p) = (0..n).find(|&p| perm.is_fixed(p) && !marked[p]) {
            return Err(Error::parse(alloc::format!(
                "fixed point {} has no orientation",
                p + 1
            )));
        }
        Self::new(perm.targets, ccw).map_err(|e| Error::parse(alloc::format!("{e}")))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Self {
            next: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let pivot = i - 1;
            let j = (i..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[pivot])
                .expect("suffix has a larger entry");
            succ.swap(pivot, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Decorated versions of one plain permutation, one per orientation mask of
/// its fixed points (mask bit `b` orients the `b`-th fixed point
/// counterclockwise).
pub fn decorations(targets: &[usize]) -> impl Iterator<Item = DecoratedPermutation> + '_ {
    let fixed: Vec<usize> = (0..targets.len()).filter(|&i| targets[i] == i).collect();
    (0u64..1 << fixed.len()).map(move |mask| {
        let ccw = fixed
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .fold(0u64, |m, (_, &p)| m | 1 << p);
        DecoratedPermutation {
            targets: targets.to_vec(),
            ccw,
        }
    })
}

/// Every decorated permutation of size `n`, optionally only those with
/// `K = k`. Plain permutations come in lexicographic order, and for each the
/// decorations in increasing mask order.
pub fn enumerate_decorated(
    n: usize,
    k: Option<usize>,
) -> impl Iterator<Item = DecoratedPermutation> {
    Permutations::new(n)
        .flat_map(|t| decorations(&t).collect::<Vec<_>>())
        .filter(move |p| k.is_none_or(|k| p.k_stat() == k))
}

/// `Σ q^{rank(π)}` over the decorated permutations of size `n` with `K = k`.
pub fn a_kn_from_decperms(k: usize, n: usize) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::domain(alloc::format!(
            "A_(k,n) needs k <= n, got k = {k}, n = {n}"
        )));
    }
    Error::check_bound("permutation size", n, MAX_N)?;
    Ok(rank_polynomial(enumerate_decorated(n, Some(k))))
}

/// `Σ q^{rank}` over the given permutations.
pub fn rank_polynomial(perms: impl IntoIterator<Item = DecoratedPermutation>) -> LaurentPoly {
    let mut counts: Vec<u64> = Vec::new();
    for p in perms {
        let r = p.rank();
        if counts.len() <= r {
            counts.resize(r + 1, 0);
        }
        counts[r] += 1;
    }
    LaurentPoly::from_coeffs(counts)
}

/// Renders chord pairs as `(13,66)`-style text, for diagnostics.
pub fn pairs_to_string(p: &DecoratedPermutation, pairs: &[(usize, usize)]) -> String {
    let mut s = String::new();
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        if idx > 0 {
            s.push_str(", ");
        }
        s.push_str(&alloc::format!(
            "({}{},{}{})",
            i + 1,
            p.target(i) + 1,
            j + 1,
            p.target(j) + 1
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn dp(s: &str) -> DecoratedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let p = dp("3,1,5,4,8,6,7,2 ccw=4,7 cw=6");
        assert_eq!(p.k_stat(), 5);
        assert_eq!(p.alignments(), 11);
        assert_eq!(p.rank(), 4);
        assert_eq!(
            pairs_to_string(&p, &p.alignment_pairs()),
            "(13,66), (21,35), (21,44), (21,58), (21,77), (35,44), (35,66), (44,66), (58,77), (66,77), (66,82)"
        );
        let q = p.cyclic_shift();
        assert_eq!((q.k_stat(), q.alignments()), (5, 11));
    }

    #[test]
    fn text_round_trip_and_errors() {
        for s in [
            "3,1,5,4,8,6,7,2 ccw=4,7 cw=6",
            "1 ccw=1",
            "2,1,4,3",
            "1,2 cw=1,2",
            "",
        ] {
            assert_eq!(format!("{}", dp(s)), s);
        }
        assert_eq!(dp("1,2 cw=2 ccw=1"), dp("1,2 ccw=1 cw=2"));
        for bad in [
            "1,1",
            "0",
            "3,1",
            "1",
            "1,2 ccw=1",
            "2,1 ccw=1",
            "1 ccw=1 cw=1",
            "1 ccw=1 ccw=1",
            "1 up=1",
            "a",
        ] {
            assert!(bad.parse::<DecoratedPermutation>().is_err(), "{bad}");
        }
    }

    #[test]
    fn k_statistic() {
        assert_eq!(
            DecoratedPermutation::identity(3, Orientation::Counterclockwise)
                .unwrap()
                .k_stat(),
            3
        );
        assert_eq!(
            DecoratedPermutation::identity(3, Orientation::Clockwise)
                .unwrap()
                .k_stat(),
            0
        );
        assert_eq!(dp("1,2 cw=1,2").alignments(), 0);
    }

    #[test]
    fn pi_k_has_no_alignments() {
        let p = dp("3,4,1,2");
        assert_eq!(p, DecoratedPermutation::pi_k(2, 4).unwrap());
        assert_eq!(p.alignments(), 0);
        assert_eq!(p.rank(), 4);
        assert_eq!(p.cyclic_shift(), p);
        let p = DecoratedPermutation::pi_k(1, 3).unwrap();
        assert_eq!((&p, p.k_stat(), p.alignments()), (&dp("3,1,2"), 1, 0));
        let cw = DecoratedPermutation::pi_k(0, 3).unwrap();
        assert_eq!((cw.k_stat(), cw.rank()), (0, 0));
    }

    #[test]
    fn simple_pairs() {
        let p = dp("2,1");
        assert!(p.is_crossing(0, 1));
        assert!(p.is_simple_crossing(0, 1).unwrap());
        assert!(p.is_simple_alignment(0, 1).is_err());

        let p = dp("2,1,4,3");
        assert_eq!(p.classify(0, 3).unwrap(), PairKind::SimpleAlignment);
        assert_eq!(p.classify(1, 2).unwrap(), PairKind::SimpleAlignment);
        // 1→2 and 3→4 run the same way round the circle: neither relation.
        assert_eq!(p.classify(0, 2).unwrap(), PairKind::Neither);
        assert_eq!(p.alignment_pairs(), [(0, 3), (1, 2)]);

        // Exhaustive scan oracle: the third chords 3→1 and 4→2 both leave
        // Arc(c,a) for Arc(b,d) under every labeling.
        let p = dp("3,4,1,2");
        assert!(p.is_crossing(0, 1));
        let by_scan = p.crossing_labelings(0, 1).iter().any(|l| {
            [2usize, 3].iter().all(|&s| {
                let t = p.target(s);
                let in_ca = (l.c..=l.c + 4)
                    .map(|x| x % 4)
                    .take_while(|&x| x != (l.a + 1) % 4)
                    .any(|x| x == s);
                let in_bd = (l.b..=l.b + 4)
                    .map(|x| x % 4)
                    .take_while(|&x| x != (l.d + 1) % 4)
                    .any(|x| x == t);
                !(in_ca && in_bd)
            })
        });
        assert_eq!(p.is_simple_crossing(0, 1).unwrap(), by_scan);
    }

    #[test]
    fn crossings_and_alignments_are_disjoint() {
        for n in 0..=5 {
            for p in enumerate_decorated(n, None) {
                for i in 0..n {
                    for j in i + 1..n {
                        assert!(
                            !(p.is_crossing(i, j) && p.is_alignment(i, j)),
                            "{p} {i} {j}"
                        );
                        let (a, b, c, d) = (i, p.target(i), j, p.target(j));
                        let shared = a == c || a == d || b == c || b == d;
                        if shared && a != b && c != d {
                            assert!(p.is_crossing(i, j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_decorated(1, None).count(), 2);
        assert_eq!(enumerate_decorated(2, Some(1)).count(), 3);
        assert_eq!(enumerate_decorated(4, None).count(), 65);
        assert_eq!(enumerate_decorated(0, None).count(), 1);
        assert_eq!(Permutations::new(4).count(), 24);
        let perms: Vec<_> = Permutations::new(3).collect();
        assert_eq!(perms[1], vec![0, 2, 1]);
    }

    #[test]
    fn a_kn_small_values() {
        assert_eq!(
            a_kn_from_decperms(2, 4).unwrap(),
            "q^4+4q^3+10q^2+12q+6".parse().unwrap()
        );
        assert_eq!(
            a_kn_from_decperms(1, 3).unwrap(),
            "q^2+3q+3".parse().unwrap()
        );
        assert_eq!(a_kn_from_decperms(3, 3).unwrap(), LaurentPoly::one());
        assert!(a_kn_from_decperms(4, 3).is_err());
    }

    #[test]
    fn conjugation() {
        let p = dp("3,1,5,4,8,6,7,2 ccw=4,7 cw=6");
        let id: Vec<usize> = (0..8).collect();
        assert_eq!(p.conjugate(&id).unwrap(), p);
        assert!(p.conjugate(&[0, 0, 1, 2, 3, 4, 5, 6]).is_err());
        let mut q = p.clone();
        for _ in 0..8 {
            q = q.cyclic_shift();
        }
        assert_eq!(q, p);
    }
}
