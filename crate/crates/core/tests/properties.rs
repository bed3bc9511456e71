use positroid_core::bijections::{from_noncrossing, to_noncrossing, NoncrossingPartition};
use positroid_core::decperm::DecoratedPermutation;
use positroid_core::{BiSeries, LaurentPoly};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

fn decorated(max_n: usize) -> impl Strategy<Value = DecoratedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                any::<u64>(),
            )
        })
        .prop_map(|(t, mask)| {
            let ccw: Vec<usize> = (0..t.len())
                .filter(|&i| t[i] == i && mask >> i & 1 == 1)
                .collect();
            DecoratedPermutation::new(t, ccw).unwrap()
        })
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
        prop_assert_eq!(a.descending().to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn inverse_substitution_is_an_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.substitute_inverse().substitute_inverse(), a.clone());
        prop_assert_eq!((&a * &b).substitute_inverse(), &a.substitute_inverse() * &b.substitute_inverse());
    }

    #[test]
    fn series_inverse(e in -3i64..=3, c in prop::collection::vec(laurent(), 6)) {
        let mut s = BiSeries::constant(LaurentPoly::monomial(1, e), 2, 2);
        for (idx, p) in c.into_iter().enumerate() {
            let (a, b) = (idx / 3, idx % 3);
            if (a, b) != (0, 0) && a <= 2 {
                s.set_coeff(a, b, p);
            }
        }
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, BiSeries::one(2, 2));
    }

    #[test]
    fn decorated_text_round_trip(p in decorated(9)) {
        prop_assert_eq!(p.to_string().parse::<DecoratedPermutation>().unwrap(), p);
    }

    #[test]
    fn cyclic_shift_preserves_statistics(p in decorated(8)) {
        let mut q = p.clone();
        for _ in 0..p.n() {
            q = q.cyclic_shift();
            prop_assert_eq!((q.k_stat(), q.alignments()), (p.k_stat(), p.alignments()));
        }
        prop_assert_eq!(q, p);
    }

    #[test]
    fn alignments_are_bounded(p in decorated(9)) {
        let (k, n) = (p.k_stat(), p.n());
        prop_assert!(p.alignments() <= k * (n - k));
        if p.is_regular() {
            prop_assert!(p.alignments() <= (k - 1) * (n - k));
        }
    }

    #[test]
    fn noncrossing_round_trip(labels in prop::collection::vec(0usize..4, 1..=9)) {
        // Relabel into a restricted growth string, then keep only noncrossing ones.
        let mut seen = Vec::new();
        let rgs: Vec<usize> = labels.iter().map(|l| {
            if let Some(pos) = seen.iter().position(|x| x == l) { pos } else { seen.push(*l); seen.len() - 1 }
        }).collect();
        let mut blocks = vec![Vec::new(); seen.len()];
        for (e, &b) in rgs.iter().enumerate() {
            blocks[b].push(e);
        }
        if let Ok(part) = NoncrossingPartition::new(rgs.len(), blocks) {
            let text = part.to_string();
            prop_assert_eq!(text.parse::<NoncrossingPartition>().unwrap(), part.clone());
            let p = from_noncrossing(&part).unwrap();
            prop_assert_eq!(to_noncrossing(&p).unwrap(), part);
        }
    }
}
