//! Rayon drivers for the enumeration oracles. Work is split by the image of
//! the first position, so every task walks `(n−1)!` permutations.

use num_bigint::BigInt;
use positroid_core::bijections::{self, XPoly};
use positroid_core::decperm::{decorations, DecoratedPermutation, Permutations};
use positroid_core::lediagram;
use positroid_core::poset::{self, CbPoset};
use positroid_core::{Error, LaurentPoly, Result};
use rayon::prelude::*;

/// Caps the global worker count; `None` keeps rayon's default of one worker
/// per core. Only the first call in a process takes effect.
pub fn configure_threads(threads: Option<usize>) {
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
}

/// Permutations of `0..n` sending 0 to `first`.
fn with_first(n: usize, first: usize) -> impl Iterator<Item = Vec<usize>> {
    Permutations::new(n - 1).map(move |rest| {
        let mut t = Vec::with_capacity(n);
        t.push(first);
        t.extend(rest.into_iter().map(|v| if v >= first { v + 1 } else { v }));
        t
    })
}

fn add_monomial(p: &mut LaurentPoly, e: usize) {
    p.add_term(e as i64, BigInt::from(1));
}

fn merge(mut a: Vec<LaurentPoly>, b: Vec<LaurentPoly>) -> Vec<LaurentPoly> {
    for (x, y) in a.iter_mut().zip(&b) {
        *x += y;
    }
    a
}

/// `A_{k,n}(q)` for every `0 ≤ k ≤ n`, by enumerating decorated permutations.
pub fn a_kn_decperm_all(n: usize) -> Vec<LaurentPoly> {
    if n == 0 {
        return vec![LaurentPoly::one()];
    }
    let zero = || vec![LaurentPoly::zero(); n + 1];
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = zero();
            for t in with_first(n, first) {
                for p in decorations(&t) {
                    add_monomial(&mut acc[p.k_stat()], p.rank());
                }
            }
            acc
        })
        .reduce(zero, merge)
}

/// `A_{k,n}(q)` for every `0 ≤ k ≤ n`, by enumerating Le-diagrams.
pub fn a_kn_lediagram_all(n: usize) -> Result<Vec<LaurentPoly>> {
    (0..=n)
        .into_par_iter()
        .map(|k| lediagram::a_kn_bruteforce(k, n))
        .collect()
}

/// One pass over the regular permutations of size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCensus {
    pub n: usize,
    /// `E_{k,n}(q) = Σ q^{k(n−k)−A}`, indexed by `k`.
    pub e_by_k: Vec<LaurentPoly>,
    /// Regular permutations with `A = (k−1)(n−k)`, indexed by `k`.
    pub max_alignment: Vec<u64>,
    /// A regular permutation with `A > (k−1)(n−k)`, if any.
    pub above_bound: Option<String>,
}

pub fn regular_census(n: usize) -> RegularCensus {
    let empty = || RegularCensus {
        n,
        e_by_k: vec![LaurentPoly::zero(); n + 1],
        max_alignment: vec![0; n + 1],
        above_bound: None,
    };
    if n == 0 {
        return empty();
    }
    (0..n)
        .into_par_iter()
        .map(|first| {
            let mut acc = empty();
            for t in with_first(n, first) {
                let p = DecoratedPermutation::regular(t).expect("bijection");
                let (k, a) = (p.k_stat(), p.alignments());
                add_monomial(&mut acc.e_by_k[k], k * (n - k) - a);
                let bound = (k - 1) * (n - k);
                if a == bound {
                    acc.max_alignment[k] += 1;
                } else if a > bound && acc.above_bound.is_none() {
                    acc.above_bound = Some(format!("{p}: K = {k}, A = {a} > {bound}"));
                }
            }
            acc
        })
        .reduce(empty, |mut a, b| {
            a.e_by_k = merge(a.e_by_k, b.e_by_k);
            for (x, y) in a.max_alignment.iter_mut().zip(&b.max_alignment) {
                *x += y;
            }
            a.above_bound = a.above_bound.or(b.above_bound);
            a
        })
}

/// Regular permutations of size `n` with the maximal number of alignments.
pub fn max_alignment_perms(n: usize) -> Vec<DecoratedPermutation> {
    if n == 0 {
        return Vec::new();
    }
    (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            with_first(n, first)
                .map(|t| DecoratedPermutation::regular(t).expect("bijection"))
                .filter(|p| bijections::is_max_alignment(p).expect("regular"))
        })
        .collect()
}

/// `CB_{k,n}` with cover moves generated in parallel.
pub fn build_cb(k: usize, n: usize, bound: usize) -> Result<CbPoset> {
    let elements = poset::cb_elements(k, n, bound)?;
    let moves = elements.par_iter().map(poset::cover_moves).collect();
    CbPoset::assemble(k, n, elements, moves)
}

/// `M_n(x)` with the column subsets split across workers.
pub fn permanent_mn(n: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::Domain("M_n needs n >= 1".into()));
    }
    Error::check_bound("permanent size n", n, bijections::PERMANENT_BOUND)?;
    let m = bijections::mn_matrix(n);
    let total = bijections::ryser_subsets(n);
    let chunk = (total / 64).max(1);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let partials: Vec<XPoly<BigInt>> = starts
        .into_par_iter()
        .map(|s| bijections::ryser_partial(&m, s..(s + chunk).min(total)))
        .collect::<Result<_>>()?;
    let mut out = bijections::ryser_finish(n, partials);
    while out.last().is_some_and(|c| *c == BigInt::from(0)) {
        out.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use positroid_core::formulas::{a_kn_closed, e_kn_bruteforce};

    #[test]
    fn decperm_oracle_matches_sequential() {
        for n in 0..=5 {
            let all = a_kn_decperm_all(n);
            for (k, p) in all.iter().enumerate() {
                assert_eq!(p, &a_kn_closed(k, n).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn census_matches_sequential() {
        let c = regular_census(6);
        for k in 1..=6 {
            assert_eq!(c.e_by_k[k], e_kn_bruteforce(k, 6).unwrap());
        }
        assert_eq!(c.above_bound, None);
        assert_eq!(c.max_alignment.iter().sum::<u64>(), 132);
    }

    #[test]
    fn parallel_permanent() {
        for n in 1..=8 {
            assert_eq!(
                permanent_mn(n).unwrap(),
                bijections::permanent_mn(n).unwrap()
            );
        }
    }
}
