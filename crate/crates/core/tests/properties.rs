//! Randomized checks past the exhaustive range: tableaux come from column
//! inserting random words, so every shape and filling is reachable.

use lrkit::expansion::{build_column, expand, tail_lengths};
use lrkit::insertion::{column_insert, pieri_insert, pieri_reverse, Column};
use lrkit::lr_map::{lr_aii, validate_rec};
use lrkit::reduction::{is_symplectic, reduce, successor};
use lrkit::shapes::is_vertical_strip;
use lrkit::sundaram::{lozenge, lozenge_inv, validate_lrs};
use lrkit::SkewTableau;
use proptest::prelude::*;

fn insert_word(word: &[u32]) -> SkewTableau {
    word.iter().fold(SkewTableau::empty(), |t, &x| {
        column_insert(x, &t).unwrap().tableau
    })
}

/// `(n, tableau over [2n])` with up to `max_len` cells.
fn tableau(max_n: u32, max_len: usize) -> impl Strategy<Value = (usize, SkewTableau)> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1..=2 * n, 0..=max_len)
            .prop_map(move |w| (n as usize, insert_word(&w)))
    })
}

fn column(m: u32) -> impl Strategy<Value = Column> {
    prop::collection::btree_set(1..=m, 0..=m as usize)
        .prop_map(|s| Column::new(s.into_iter().collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn forward_map_round_trips((n, t) in tableau(4, 11)) {
        prop_assert!(t.validate_ssyt());
        let tr = lr_aii(&t, n).unwrap();
        prop_assert!(is_symplectic(&tr.p_tableau));
        prop_assert!(tr.p_tableau.outer().len() <= n);
        let v = validate_rec(&tr.q_tableau, n);
        prop_assert!(v.valid, "{:?}", v.violated);
        prop_assert_eq!(expand(&tr.p_tableau, &tr.q_tableau, n).unwrap(), t);
    }

    #[test]
    fn recording_tableau_relabels_to_lrs((n, t) in tableau(4, 11)) {
        let q = lr_aii(&t, n).unwrap().q_tableau;
        let lrs = lozenge_inv(&q, n).unwrap();
        prop_assert!(validate_lrs(&lrs, n).valid);
        prop_assert_eq!(lozenge(&lrs, n).unwrap(), q);
    }

    #[test]
    fn successor_shrinks_by_even_vertical_strip((_n, t) in tableau(5, 12)) {
        let s = successor(&t).unwrap();
        prop_assert!(s.validate_ssyt());
        prop_assert!(is_vertical_strip(s.outer(), t.outer()));
        prop_assert_eq!((t.size() - s.size()) % 2, 0);
    }

    #[test]
    fn pieri_round_trip((n, t) in tableau(4, 10), seed in any::<u64>()) {
        let m = 2 * n as u32;
        let col = Column::new((1..=m).filter(|x| seed >> x & 1 == 1).collect()).unwrap();
        let u = pieri_insert(&col, &t).unwrap();
        prop_assert!(is_vertical_strip(t.outer(), u.outer()));
        let (back, rest) = pieri_reverse(&u, t.outer()).unwrap();
        prop_assert_eq!(back, col);
        prop_assert_eq!(rest, t);
    }

    #[test]
    fn column_rebuilt_from_reduction(c in column(14)) {
        let a = reduce(&c);
        let lengths = tail_lengths(&a, c.len()).unwrap();
        prop_assert!(lengths.iter().all(|l| l % 2 == 0));
        prop_assert_eq!(build_column(&a, &lengths, 7).unwrap(), c);
    }
}
