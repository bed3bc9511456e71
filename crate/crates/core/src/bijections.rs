//! Permutations with the maximal number of alignments, their bijection with
//! noncrossing partitions, and the permanent `M_n(x)` whose coefficients are
//! the cell counts `A_{k,n}(1)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, MulAssign, Neg, Range};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::LaurentPoly;
use crate::decperm::DecoratedPermutation;
use crate::formulas::a_kn_closed;
use crate::{Error, Result};

/// Largest `n` accepted by [`enumerate_noncrossing`] and [`NoncrossingPartition::new`].
pub const NONCROSSING_BOUND: usize = 12;

/// Largest matrix size accepted by the permanent routines.
pub const PERMANENT_BOUND: usize = 14;

/// A set partition of `{0..n}` with no `a < b < c < d` such that `a, c`
/// share a block and `b, d` share a different one.
///
/// Blocks are kept sorted, and ordered by their smallest element. Text uses
/// 1-based labels: `"1 2 4 / 3"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Block index of each element; `None` if the blocks do not partition `{0..n}`.
fn block_labels(n: usize, blocks: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut label = alloc::vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return None;
        }
        for &e in block {
            if e >= n || label[e] != usize::MAX {
                return None;
            }
            label[e] = b;
        }
    }
    label.iter().all(|&l| l != usize::MAX).then_some(label)
}

/// The first `(a, b, c, d)` witnessing a crossing, by direct scan.
fn find_crossing(label: &[usize]) -> Option<(usize, usize, usize, usize)> {
    let n = label.len();
    for a in 0..n {
        for b in a + 1..n {
            if label[b] == label[a] {
                continue;
            }
            for c in b + 1..n {
                if label[c] != label[a] {
                    continue;
                }
                for d in c + 1..n {
                    if label[d] == label[b] {
                        return Some((a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

impl NoncrossingPartition {
    /// Validates and normalizes `blocks` (0-based) as a noncrossing
    /// partition of `{0..n}`.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a partition needs n >= 1"));
        }
        Error::check_bound("partition size n", n, NONCROSSING_BOUND)?;
        let label = block_labels(n, &blocks)
            .ok_or_else(|| Error::domain(alloc::format!("blocks do not partition {{1..{n}}}")))?;
        if let Some((a, b, c, d)) = find_crossing(&label) {
            return Err(Error::domain(alloc::format!(
                "blocks cross: {} and {} share a block, {} and {} share another",
                a + 1,
                c + 1,
                b + 1,
                d + 1
            )));
        }
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable();
        Ok(Self { n, blocks })
    }

    fn from_labels(label: &[usize]) -> Self {
        let count = label.iter().max().map_or(0, |m| m + 1);
        let mut blocks = alloc::vec![Vec::new(); count];
        for (e, &b) in label.iter().enumerate() {
            blocks[b].push(e);
        }
        Self {
            n: label.len(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                f.write_str(" / ")?;
            }
            for (t, e) in block.iter().enumerate() {
                if t > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", e + 1)?;
            }
        }
        Ok(())
    }
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    /// Accepts exactly the canonical form written by `Display`: blocks in
    /// increasing order of their minimum, each listed in increasing order,
    /// separated by `" / "`, elements by single spaces.
    fn from_str(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in s.split(" / ") {
            let mut block = Vec::new();
            for tok in part.split(' ') {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::parse(alloc::format!("bad element {tok:?} in {s:?}")));
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(alloc::format!("element {tok} out of range")))?;
                if v == 0 {
                    return Err(Error::parse("elements are numbered from 1"));
                }
                block.push(v - 1);
            }
            if !block.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::parse(alloc::format!(
                    "block {part:?} is not increasing"
                )));
            }
            blocks.push(block);
        }
        if !blocks.windows(2).all(|w| w[0][0] < w[1][0]) {
            return Err(Error::parse(
                "blocks must be ordered by their smallest element",
            ));
        }
        let n = blocks.iter().flatten().max().map_or(0, |m| m + 1);
        Self::new(n, blocks)
    }
}

/// Whether a regular `p` attains the maximum `A = (k−1)(n−k)`, `k = K(p)`.
pub fn is_max_alignment(p: &DecoratedPermutation) -> Result<bool> {
    if !p.is_regular() {
        return Err(Error::domain(alloc::format!(
            "{p} has a clockwise fixed point"
        )));
    }
    let (k, n) = (p.k_stat(), p.n());
    Ok(k >= 1 && p.alignments() == (k - 1) * (n - k))
}

/// Cycles of the underlying permutation, each sorted.
fn cycles(p: &DecoratedPermutation) -> Vec<Vec<usize>> {
    let mut seen = alloc::vec![false; p.n()];
    let mut out = Vec::new();
    for start in 0..p.n() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = p.target(i);
        }
        cycle.sort_unstable();
        out.push(cycle);
    }
    out
}

/// Forgets the orientation of a maximal-alignment permutation, keeping its
/// cycles as blocks.
pub fn to_noncrossing(p: &DecoratedPermutation) -> Result<NoncrossingPartition> {
    if !is_max_alignment(p)? {
        return Err(Error::domain(alloc::format!(
            "{p} does not have the maximal number of alignments"
        )));
    }
    let part = NoncrossingPartition::new(p.n(), cycles(p))?;
    if part.block_count() != p.k_stat() {
        return Err(Error::domain(alloc::format!(
            "{p}: {} cycles but K = {}",
            part.block_count(),
            p.k_stat()
        )));
    }
    Ok(part)
}

/// Orients each block `b₁ < … < b_m` as `b₁ ↦ b_m`, `b_t ↦ b_{t−1}`, so that
/// it contributes exactly one weak excedence; singletons become
/// counterclockwise loops.
pub fn from_noncrossing(part: &NoncrossingPartition) -> Result<DecoratedPermutation> {
    let label = block_labels(part.n, &part.blocks)
        .ok_or_else(|| Error::domain("blocks do not partition {1..n}"))?;
    if find_crossing(&label).is_some() {
        return Err(Error::domain(alloc::format!("{part} is crossing")));
    }
    let mut targets = alloc::vec![0; part.n];
    for block in &part.blocks {
        let m = block.len();
        targets[block[0]] = block[m - 1];
        for t in 1..m {
            targets[block[t]] = block[t - 1];
        }
    }
    DecoratedPermutation::regular(targets)
}

/// Noncrossing partitions of `{0..n}`, optionally with exactly `k` blocks,
/// in lexicographic order of their restricted growth strings.
pub struct Noncrossing {
    rgs: Vec<usize>,
    /// `max_prefix[i] = max(rgs[..i])`, so the admissible values at `i` are `0..=max_prefix[i] + 1`.
    max_prefix: Vec<usize>,
    k: Option<usize>,
    done: bool,
}

impl Noncrossing {
    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.max_prefix[i] {
                self.rgs[i] += 1;
                for t in i + 1..n {
                    self.max_prefix[t] = self.max_prefix[t - 1].max(self.rgs[t - 1]);
                    self.rgs[t] = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Noncrossing {
    type Item = NoncrossingPartition;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let label = self.rgs.clone();
            self.done = !self.advance();
            let blocks = label.iter().max().map_or(0, |m| m + 1);
            if self.k.is_some_and(|k| k != blocks) || find_crossing(&label).is_some() {
                continue;
            }
            return Some(NoncrossingPartition::from_labels(&label));
        }
        None
    }
}

pub fn enumerate_noncrossing(n: usize, k: Option<usize>) -> Result<Noncrossing> {
    if n == 0 {
        return Err(Error::domain("noncrossing partitions need n >= 1"));
    }
    Error::check_bound("partition size n", n, NONCROSSING_BOUND)?;
    Ok(Noncrossing {
        rgs: alloc::vec![0; n],
        max_prefix: alloc::vec![0; n],
        k,
        done: false,
    })
}

/// Regular permutations of size `n` with the maximal number of alignments,
/// optionally with `K = k`.
pub fn max_alignment_perms(
    n: usize,
    k: Option<usize>,
) -> impl Iterator<Item = DecoratedPermutation> {
    crate::decperm::Permutations::new(n)
        .map(|t| DecoratedPermutation::regular(t).expect("Permutations yields bijections"))
        .filter(move |p| k.is_none_or(|k| p.k_stat() == k))
        .filter(|p| is_max_alignment(p).expect("regular by construction"))
}

// ---------------------------------------------------------------------------
// Permanents

/// A polynomial in `x`, coefficients ascending.
pub type XPoly<C> = Vec<C>;

/// Coefficient rings for the permanent: integers for `M_n(x)`, Laurent
/// polynomials in `q` for candidate q-deformations.
pub trait Coeff:
    Clone + Zero + One + Neg<Output = Self> + for<'a> AddAssign<&'a Self> + for<'a> MulAssign<&'a Self>
{
}

impl<C> Coeff for C where
    C: Clone + Zero + One + Neg<Output = C> + for<'a> AddAssign<&'a C> + for<'a> MulAssign<&'a C>
{
}

fn xpoly_add<C: Coeff>(acc: &mut XPoly<C>, p: &XPoly<C>) {
    if acc.len() < p.len() {
        acc.resize(p.len(), C::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn xpoly_mul<C: Coeff>(a: &XPoly<C>, b: &XPoly<C>) -> XPoly<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![C::zero(); a.len() + b.len() - 1];
    for (i, u) in a.iter().enumerate() {
        for (j, v) in b.iter().enumerate() {
            let mut t = u.clone();
            t *= v;
            out[i + j] += &t;
        }
    }
    out
}

fn check_square<C>(matrix: &[Vec<XPoly<C>>]) -> Result<usize> {
    let n = matrix.len();
    Error::check_bound("permanent size n", n, PERMANENT_BOUND)?;
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::domain("permanent needs a square matrix"));
    }
    Ok(n)
}

/// Number of column subsets, the range to split for [`ryser_partial`].
pub fn ryser_subsets(n: usize) -> u64 {
    1u64 << n
}

/// `Σ_{S} (−1)^{|S|} Π_i Σ_{j∈S} a_ij` over the column subsets `S` whose
/// bitmasks lie in `masks`. Summing over all subsets and multiplying by
/// `(−1)^n` gives the permanent.
pub fn ryser_partial<C: Coeff>(matrix: &[Vec<XPoly<C>>], masks: Range<u64>) -> Result<XPoly<C>> {
    let n = check_square(matrix)?;
    let mut total = Vec::new();
    for mask in masks.start..masks.end.min(ryser_subsets(n)) {
        let mut prod: XPoly<C> = alloc::vec![C::one()];
        for row in matrix {
            let mut sum = Vec::new();
            for (j, entry) in row.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    xpoly_add(&mut sum, entry);
                }
            }
            prod = xpoly_mul(&prod, &sum);
        }
        if mask.count_ones() % 2 == 1 {
            prod = prod.into_iter().map(Neg::neg).collect();
        }
        xpoly_add(&mut total, &prod);
    }
    Ok(total)
}

/// Combines partial sums from [`ryser_partial`] into the permanent.
pub fn ryser_finish<C: Coeff>(n: usize, partials: impl IntoIterator<Item = XPoly<C>>) -> XPoly<C> {
    let mut total = Vec::new();
    for p in partials {
        xpoly_add(&mut total, &p);
    }
    if n % 2 == 1 {
        total = total.into_iter().map(Neg::neg).collect();
    }
    total
}

/// Permanent of a matrix of polynomials in `x`, by inclusion–exclusion over
/// column subsets.
pub fn permanent<C: Coeff>(matrix: &[Vec<XPoly<C>>]) -> Result<XPoly<C>> {
    let n = check_square(matrix)?;
    Ok(ryser_finish(
        n,
        [ryser_partial(matrix, 0..ryser_subsets(n))?],
    ))
}

/// The `n × n` matrix with `1 + x` on the diagonal, `x` above and `1` below.
pub fn mn_matrix(n: usize) -> Vec<Vec<XPoly<BigInt>>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    core::cmp::Ordering::Less => alloc::vec![BigInt::one()],
                    core::cmp::Ordering::Equal => alloc::vec![BigInt::one(), BigInt::one()],
                    core::cmp::Ordering::Greater => alloc::vec![BigInt::zero(), BigInt::one()],
                })
                .collect()
        })
        .collect()
}

fn trim<C: Coeff>(mut p: XPoly<C>) -> XPoly<C> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// `M_n(x)`, coefficients of `x⁰..xⁿ`.
pub fn permanent_mn(n: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::domain("M_n needs n >= 1"));
    }
    Error::check_bound("permanent size n", n, PERMANENT_BOUND)?;
    permanent(&mn_matrix(n)).map(trim)
}

/// `Σ_{π∈S_n} 2^{fix(π)}`, the value `M_n(1)` computed from the derangement
/// recurrence `D_n = (n−1)(D_{n−1} + D_{n−2})`.
pub fn fixed_point_weighted_count(n: usize) -> BigInt {
    let mut d = alloc::vec![BigInt::one(), BigInt::zero()];
    for m in 2..=n {
        let next = BigInt::from(m - 1) * (&d[m - 1] + &d[m - 2]);
        d.push(next);
    }
    // Σ_j C(n,j) 2^j D_{n−j}
    (0..=n)
        .map(|j| crate::algebra::binomial(n as i64, j as i64) * (BigInt::one() << j) * &d[n - j])
        .sum()
}

/// Outcome of testing a candidate q-matrix against `A_{k,n}(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPermanentReport {
    pub n: usize,
    pub permanent: XPoly<LaurentPoly>,
    /// First `k` with `[x^k] perm ≠ A_{k,n}(q)`, with both sides.
    pub first_mismatch: Option<(usize, LaurentPoly, LaurentPoly)>,
}

/// Compares `[x^k]` of the permanent of a candidate matrix with `A_{k,n}(q)`
/// for every `0 ≤ k ≤ n`.
pub fn check_q_matrix(matrix: &[Vec<XPoly<LaurentPoly>>]) -> Result<QPermanentReport> {
    let n = check_square(matrix)?;
    let perm = trim(permanent(matrix)?);
    let mut first_mismatch = None;
    for k in 0..=n.max(perm.len().saturating_sub(1)) {
        let got = perm.get(k).cloned().unwrap_or_else(LaurentPoly::zero);
        let want = if k <= n {
            a_kn_closed(k, n)?
        } else {
            LaurentPoly::zero()
        };
        if got != want {
            first_mismatch = Some((k, got, want));
            break;
        }
    }
    Ok(QPermanentReport {
        n,
        permanent: perm,
        first_mismatch,
    })
}

/// `"1+3x+x^2"`, ascending.
pub fn xpoly_to_string(p: &[BigInt]) -> String {
    let mut s = String::new();
    for (e, c) in p.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c.sign() == num_bigint::Sign::Minus;
        if !s.is_empty() || neg {
            s.push(if neg { '-' } else { '+' });
        }
        let mag = c.magnitude();
        let unit = e > 0 && mag.is_one();
        if !unit {
            s.push_str(&alloc::format!("{mag}"));
        }
        match e {
            0 => {}
            1 => s.push('x'),
            _ => s.push_str(&alloc::format!("x^{e}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decperm::Orientation;
    use crate::formulas::{catalan, narayana};
    use alloc::string::ToString;
    use alloc::vec;

    fn dp(s: &str) -> DecoratedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn max_alignment_examples() {
        assert!(is_max_alignment(&dp("2,1,4,3")).unwrap());
        assert!(is_max_alignment(&dp("1 ccw=1")).unwrap());
        for n in 3..=6 {
            for k in 2..n {
                let p = DecoratedPermutation::pi_k(k, n).unwrap();
                assert!(
                    !is_max_alignment(&p).unwrap(),
                    "{p} K={} A={}",
                    p.k_stat(),
                    p.alignments()
                );
            }
        }
        assert!(is_max_alignment(&dp("1,2 ccw=1 cw=2")).is_err());
    }

    #[test]
    fn partition_text() {
        let p: NoncrossingPartition = "1 2 4 / 3".parse().unwrap();
        assert_eq!(p.blocks(), [vec![0, 1, 3], vec![2]]);
        assert_eq!(p.to_string(), "1 2 4 / 3");
        for bad in [
            "",
            "1 3 / 2 4",
            "3 / 1 2 4",
            "2 1",
            "1  2",
            "1 / 3",
            "1,2",
            "0 1",
            "1 2 /3",
        ] {
            assert!(bad.parse::<NoncrossingPartition>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn bijection_examples() {
        let p = dp("2,1,4,3");
        let part = to_noncrossing(&p).unwrap();
        assert_eq!(part.to_string(), "1 2 / 3 4");
        assert_eq!(from_noncrossing(&part).unwrap(), p);
        let id = DecoratedPermutation::identity(5, Orientation::Counterclockwise).unwrap();
        assert_eq!(to_noncrossing(&id).unwrap().block_count(), 5);
        assert!(to_noncrossing(&DecoratedPermutation::pi_k(2, 4).unwrap()).is_err());

        let block: NoncrossingPartition = "1 3 4 / 2".parse().unwrap();
        assert_eq!(from_noncrossing(&block).unwrap(), dp("4,2,1,3 ccw=2"));
    }

    #[test]
    fn noncrossing_counts() {
        assert_eq!(enumerate_noncrossing(1, None).unwrap().count(), 1);
        assert_eq!(enumerate_noncrossing(4, Some(2)).unwrap().count(), 6);
        for n in 1..=7 {
            assert_eq!(
                BigInt::from(enumerate_noncrossing(n, None).unwrap().count()),
                catalan(n)
            );
            for k in 1..=n {
                assert_eq!(
                    BigInt::from(enumerate_noncrossing(n, Some(k)).unwrap().count()),
                    narayana(k, n)
                );
            }
        }
        for part in enumerate_noncrossing(6, None).unwrap() {
            let p = from_noncrossing(&part).unwrap();
            assert!(is_max_alignment(&p).unwrap());
            assert_eq!(p.k_stat(), part.block_count());
            assert_eq!(to_noncrossing(&p).unwrap(), part);
        }
    }

    #[test]
    fn max_alignment_counts() {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(
                    BigInt::from(max_alignment_perms(n, Some(k)).count()),
                    narayana(k, n),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn permanents() {
        assert_eq!(xpoly_to_string(&permanent_mn(1).unwrap()), "1+x");
        assert_eq!(xpoly_to_string(&permanent_mn(2).unwrap()), "1+3x+x^2");
        assert_eq!(
            xpoly_to_string(&permanent_mn(4).unwrap()),
            "1+15x+33x^2+15x^3+x^4"
        );
        for n in 1..=7 {
            let m = permanent_mn(n).unwrap();
            for (k, c) in m.iter().enumerate() {
                assert_eq!(*c, a_kn_closed(k, n).unwrap().value_at_one());
            }
            assert_eq!(m.iter().sum::<BigInt>(), fixed_point_weighted_count(n));
        }
        assert!(matches!(permanent_mn(15), Err(Error::Resource { .. })));
        assert!(permanent_mn(0).is_err());
    }

    #[test]
    fn ryser_split_matches_whole() {
        let m = mn_matrix(6);
        let whole = permanent(&m).unwrap();
        let parts = [
            ryser_partial(&m, 0..17).unwrap(),
            ryser_partial(&m, 17..64).unwrap(),
        ];
        assert_eq!(ryser_finish(6, parts), whole);
    }

    #[test]
    fn q_matrix_hook() {
        // The q = 1 matrix reproduces A_{k,n}(1) only, so it fails at k = 1
        // once A_{1,n}(q) is not constant.
        let m: Vec<Vec<XPoly<LaurentPoly>>> = mn_matrix(3)
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| e.into_iter().map(LaurentPoly::from).collect())
                    .collect()
            })
            .collect();
        let r = check_q_matrix(&m).unwrap();
        assert_eq!(r.first_mismatch.map(|(k, _, _)| k), Some(1));
    }
}
