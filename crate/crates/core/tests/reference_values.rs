//! Published values and independent oracles written here from scratch,
//! compared with the library's closed forms and enumerations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use positroid_core::bijections::{enumerate_noncrossing, permanent_mn};
use positroid_core::decperm::{a_kn_from_decperms, DecoratedPermutation};
use positroid_core::formulas::{
    a_kn_closed, a_kn_first_sum, a_kn_second_sum, catalan, e_hat, e_hat_two_row, e_kn_bruteforce,
    e_kn_closed, eulerian, narayana,
};
use positroid_core::lediagram::a_kn_bruteforce;
use positroid_core::{qbinomial, LaurentPoly};

const A_TABLE: [(usize, usize, &str); 9] = [
    (1, 1, "1"),
    (1, 2, "q+2"),
    (1, 3, "q^2+3q+3"),
    (1, 4, "q^3+4q^2+6q+4"),
    (2, 4, "q^4+4q^3+10q^2+12q+6"),
    (2, 5, "q^6+5q^5+15q^4+30q^3+40q^2+30q+10"),
    (2, 6, "q^8+6q^7+21q^6+50q^5+90q^4+120q^3+110q^2+60q+15"),
    (
        3,
        6,
        "q^9+6q^8+21q^7+56q^6+114q^5+180q^4+215q^3+180q^2+90q+20",
    ),
    (
        3,
        7,
        "q^12+7q^11+28q^10+84q^9+203q^8+406q^7+679q^6+938q^5+1050q^4+910q^3+560q^2+210q+35",
    ),
];

const EHAT_TABLE: [(usize, usize, &str); 8] = [
    (2, 4, "6+4q+q^2"),
    (3, 5, "20+25q+15q^2+5q^3+q^4"),
    (2, 6, "15+20q+15q^2+6q^3+q^4"),
    (3, 6, "50+90q+84q^2+50q^3+21q^4+6q^5+q^6"),
    (2, 7, "21+35q+35q^2+21q^3+7q^4+q^5"),
    (3, 7, "105+245q+308q^2+259q^3+161q^4+77q^5+28q^6+7q^7+q^8"),
    (
        4,
        7,
        "175+441q+588q^2+532q^3+364q^4+196q^5+84q^6+28q^7+7q^8+q^9",
    ),
    (5, 7, "105+245q+308q^2+259q^3+161q^4+77q^5+28q^6+7q^7+q^8"),
];

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Le-diagrams counted directly: every partition in the `k × (n−k)` box,
/// every 0/1 filling, the Le condition checked cell by cell.
fn le_count(k: usize, n: usize) -> LaurentPoly {
    fn shapes(rows: usize, max: usize) -> Vec<Vec<usize>> {
        if rows == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..=max {
            for rest in shapes(rows - 1, first) {
                let mut s = vec![first];
                s.extend(rest);
                out.push(s);
            }
        }
        out
    }
    let mut total = LaurentPoly::zero();
    for shape in shapes(k, n - k) {
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        for mask in 0u64..(1 << cells.len()) {
            let filled = |r: usize, c: usize| {
                let idx = cells.iter().position(|&x| x == (r, c)).unwrap();
                mask >> idx & 1 == 1
            };
            let ok = cells.iter().all(|&(r, c)| {
                filled(r, c) || !((0..r).any(|r2| filled(r2, c)) && (0..c).any(|c2| filled(r, c2)))
            });
            if ok {
                total.add_term(mask.count_ones() as i64, 1.into());
            }
        }
    }
    total
}

#[test]
fn table_one() {
    for (k, n, s) in A_TABLE {
        let want = lp(s);
        assert_eq!(a_kn_closed(k, n).unwrap(), want, "A_({k},{n})");
        assert_eq!(a_kn_first_sum(k, n).unwrap(), want);
        assert_eq!(a_kn_second_sum(k, n).unwrap(), want);
        assert_eq!(a_kn_closed(k, n).unwrap().descending().to_string(), s);
    }
}

#[test]
fn table_two() {
    for (k, n, s) in EHAT_TABLE {
        assert_eq!(e_hat(k, n).unwrap(), lp(s), "Ehat_({k},{n})");
        assert_eq!(e_hat(k, n).unwrap().to_string(), s);
    }
    for n in 1..=7 {
        assert!(e_hat(1, n).unwrap().is_one());
        assert!(e_hat(n, n).unwrap().is_one());
    }
}

#[test]
fn independent_le_count() {
    for n in 1..=6 {
        for k in 0..=n {
            let want = le_count(k, n);
            assert_eq!(a_kn_closed(k, n).unwrap(), want, "k={k} n={n}");
            assert_eq!(a_kn_bruteforce(k, n).unwrap(), want);
            assert_eq!(a_kn_from_decperms(k, n).unwrap(), want);
        }
    }
}

#[test]
fn worked_example_pairs() {
    let p: DecoratedPermutation = "3,1,5,4,8,6,7,2 ccw=4,7 cw=6".parse().unwrap();
    assert_eq!((p.k_stat(), p.alignments(), p.rank()), (5, 11, 4));
    let listed = [
        (13, 66),
        (21, 35),
        (21, 58),
        (21, 44),
        (21, 77),
        (35, 44),
        (35, 66),
        (44, 66),
        (58, 77),
        (66, 77),
        (66, 82),
    ];
    let want: BTreeSet<(usize, usize)> = listed
        .iter()
        .map(|&(a, b)| {
            let (x, y) = ((a / 10, a % 10), (b / 10, b % 10));
            assert_eq!(p.target(x.0 - 1) + 1, x.1);
            assert_eq!(p.target(y.0 - 1) + 1, y.1);
            (x.0.min(y.0) - 1, x.0.max(y.0) - 1)
        })
        .collect();
    let got: BTreeSet<(usize, usize)> = p.alignment_pairs().into_iter().collect();
    assert_eq!(got, want);
}

#[test]
fn qbinomial_by_inversions() {
    // [n choose k]_q = Σ over 0/1 words with k ones of q^{#inversions}.
    for n in 0..=9usize {
        for k in 0..=n {
            let mut want = LaurentPoly::zero();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let bits: Vec<u32> = (0..n).map(|i| mask >> i & 1).collect();
                let inv = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| bits[i] > bits[j])
                    .count();
                want.add_term(inv as i64, 1.into());
            }
            assert_eq!(qbinomial(n as i64, k as i64).unwrap(), want);
        }
    }
}

#[test]
fn eulerian_by_counting() {
    for n in 1..=7 {
        let mut counts = vec![0i64; n + 1];
        for p in permutations(n) {
            counts[(0..n).filter(|&i| p[i] >= i).count()] += 1;
        }
        for (k, &count) in counts.iter().enumerate().skip(1) {
            assert_eq!(eulerian(k, n), BigInt::from(count), "k={k} n={n}");
            assert_eq!(e_hat(k, n).unwrap().value_at_one(), BigInt::from(count));
        }
    }
}

#[test]
fn e_bruteforce_and_two_row() {
    for n in 1..=7 {
        for k in 1..=n {
            assert_eq!(e_kn_bruteforce(k, n).unwrap(), e_kn_closed(k, n).unwrap());
        }
    }
    for n in 2..=12 {
        let want: LaurentPoly = (0..=n - 2)
            .map(|i| {
                LaurentPoly::monomial(
                    positroid_core::algebra::binomial(n as i64, i as i64 + 2),
                    i as i64,
                )
            })
            .sum();
        assert_eq!(e_hat_two_row(n), want);
        assert_eq!(e_hat(2, n).unwrap(), want);
    }
}

/// All set partitions of `0..n` as block labels, by direct recursion.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            let blocks = p.iter().max().map_or(0, |m| m + 1);
            for b in 0..=blocks {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[test]
fn narayana_by_set_partitions() {
    for n in 1..=8 {
        let mut by_k = vec![0u64; n + 1];
        for lab in set_partitions(n) {
            let crossing = (0..n).any(|a| {
                (a + 1..n).any(|b| {
                    (b + 1..n).any(|c| {
                        (c + 1..n).any(|d| lab[a] == lab[c] && lab[b] == lab[d] && lab[a] != lab[b])
                    })
                })
            });
            if !crossing {
                by_k[lab.iter().max().unwrap() + 1] += 1;
            }
        }
        for (k, &count) in by_k.iter().enumerate().skip(1) {
            assert_eq!(narayana(k, n), BigInt::from(count));
            assert_eq!(
                enumerate_noncrossing(n, Some(k)).unwrap().count() as u64,
                count
            );
        }
        assert_eq!(catalan(n), BigInt::from(by_k.iter().sum::<u64>()));
    }
}

#[test]
fn permanent_by_expansion() {
    for n in 1..=7 {
        // Each permutation contributes Π (1+x if fixed, x if above, 1 if below).
        let mut want = vec![BigInt::from(0); n + 1];
        for p in permutations(n) {
            let fixed = (0..n).filter(|&i| p[i] == i).count();
            let above = (0..n).filter(|&i| p[i] > i).count();
            for t in 0..=fixed {
                want[above + t] += positroid_core::algebra::binomial(fixed as i64, t as i64);
            }
        }
        assert_eq!(permanent_mn(n).unwrap(), want, "n={n}");
    }
}
