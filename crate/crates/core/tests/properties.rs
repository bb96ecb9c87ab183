use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use gbls::criterion::run_criterion;
use gbls::graph::{parse_graph6, write_graph6, Graph};
use gbls::linalg::{last_invariant_factor, smith_normal_form, FactorBudget, IntMatrix};
use gbls::spectra::{compare, reconstruct_q, Variant};
use gbls::walk::{last_factor, WalkKind};
use gbls::wl::wl2_equivalent;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_and_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| IntMatrix::from_i64(r, c, &v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn last_factor_matches_full_smith_form(m in matrix(5, 8)) {
        prop_assume!(m.rows() <= m.cols());
        let full = smith_normal_form(&m);
        let want = if full.rank() == m.rows() { full.factors[m.rows() - 1].clone() } else { BigInt::zero() };
        prop_assert_eq!(last_invariant_factor(&m).unwrap(), want);
    }

    #[test]
    fn relabeling_preserves_invariants((g, perm) in graph_and_permutation(9)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(wl2_equivalent(&g, &h));
        prop_assert_eq!(last_factor(&g, WalkKind::Full).unwrap(), last_factor(&h, WalkKind::Full).unwrap());
        let budget = FactorBudget::default();
        prop_assert_eq!(
            run_criterion(&g, false, &budget).unwrap().verdict,
            run_criterion(&h, false, &budget).unwrap().verdict
        );
        for variant in Variant::ALL {
            prop_assert!(compare(&g, &h, variant).is_equal(), "{}", variant);
        }
    }

    #[test]
    fn certificate_level_divides_last_factor((g, perm) in graph_and_permutation(10), other in graph(10)) {
        let h = g.relabel(&perm).unwrap();
        if !last_factor(&g, WalkKind::Full).unwrap().is_zero() {
            let c = reconstruct_q(&g, &h).unwrap().unwrap();
            prop_assert!(c.d_n.is_multiple_of(&c.level));
            prop_assert_eq!(c.as_permutation(), Some(perm));
        }
        if let Ok(Some(c)) = reconstruct_q(&g, &other) {
            prop_assert!(c.d_n.is_multiple_of(&c.level));
        }
    }

    #[test]
    fn comparison_is_symmetric(g in graph(7), h in graph(7)) {
        for variant in [Variant::Spectrum, Variant::Gbls] {
            prop_assert_eq!(compare(&g, &h, variant).is_equal(), compare(&h, &g, variant).is_equal());
        }
    }
}
