use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use twodist::canon::canonical_form;
use twodist::graph::complement;
use twodist::io::{encode_graph6, parse_graph6};
use twodist::poly::IntPolynomial;
use twodist::roots::sturm_count;
use twodist::Graph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(9)) {
        prop_assert_eq!(complement(&complement(&g)), g);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let s = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(7), seed in any::<u64>()) {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g.permuted(&order)), canonical_form(&g));
    }

    // roots are known in advance, so the count can be read off directly
    #[test]
    fn sturm_counts_distinct_integer_roots(
        roots in proptest::collection::btree_set(-20i64..20, 1..7),
        lo in -25i64..25,
        width in 1i64..30,
    ) {
        let p = roots
            .iter()
            .fold(IntPolynomial::from_i64(&[1]), |acc, &r| &acc * &IntPolynomial::linear_root(r));
        let (a, b) = (rat(2 * lo + 1, 2), rat(2 * (lo + width) + 1, 2));
        let expected = roots.iter().filter(|&&r| r > lo && r <= lo + width).count();
        prop_assert_eq!(sturm_count(&p, &a, &b).unwrap(), expected);
    }
}
