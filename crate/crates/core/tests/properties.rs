//! Algebraic invariants of independence polynomials and their roots.

use indroot::{
    canonical_form, ek_annulus, find_roots, independence_polynomial, independence_polynomial_tree, xi, Graph, IntPoly,
};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k % bits.len()] {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, prop::collection::vec(any::<bool>(), 1..=max_n * (max_n - 1) / 2 + 1))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

/// Trees from parent pointers: vertex `i > 0` hangs below some `j < i`.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)))
        .prop_map(|parents| {
            let n = parents.len() + 1;
            let mut g = Graph::empty(n).unwrap();
            for (i, p) in parents.iter().enumerate() {
                g.add_edge(i + 1, p.index(i + 1)).unwrap();
            }
            g
        })
}

fn x_times(p: &IntPoly) -> IntPoly {
    p.shift(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deletion_recursion_at_every_vertex(g in graph(11)) {
        let whole = independence_polynomial(&g);
        for v in g.vertices() {
            let minus = independence_polynomial(&g.delete_vertex(v).unwrap());
            let closed = independence_polynomial(&g.delete_closed_neighborhood(v).unwrap());
            prop_assert_eq!(&whole, &(&minus + &x_times(&closed)));
        }
    }

    #[test]
    fn disjoint_union_multiplies(a in graph(8), b in graph(8)) {
        let u = a.disjoint_union(&b).unwrap();
        let pa = independence_polynomial(&a);
        let pb = independence_polynomial(&b);
        prop_assert_eq!(independence_polynomial(&u), &pa * &pb);
        prop_assert_eq!(xi(&u), xi(&a) * xi(&b));
    }

    #[test]
    fn constant_and_linear_terms(g in graph(12)) {
        let p = independence_polynomial(&g);
        prop_assert_eq!(p.coeff(0), 1.into());
        prop_assert_eq!(p.coeff(1), g.order().into());
        prop_assert_eq!(p.coeff(2), (g.order() * (g.order() - 1) / 2 - g.edge_count()).into());
    }

    #[test]
    fn roots_lie_in_annulus(g in graph(10)) {
        let p = independence_polynomial(&g);
        let a = ek_annulus(&p).unwrap();
        let r = find_roots(&p).unwrap();
        for z in &r.roots {
            prop_assert!(a.contains_modulus(z.modulus(), 1e-6), "{:?} outside {:?}", z, a);
        }
    }

    #[test]
    fn vieta_relations(g in graph(10)) {
        let p = independence_polynomial(&g);
        let c = p.to_f64();
        let d = p.degree();
        let r = find_roots(&p).unwrap();
        prop_assert_eq!(r.roots.len(), d);
        // prod(-z) = a0 / ad and sum z = -a_{d-1} / ad.
        let log_prod: f64 = r.roots.iter().map(|z| z.modulus().ln()).sum();
        let want = (c[0] / c[d]).ln();
        prop_assert!((log_prod - want).abs() < 1e-8 * (1.0 + want.abs()), "{} vs {}", log_prod, want);
        let sum_re: f64 = r.roots.iter().map(|z| z.re).sum();
        let sum_im: f64 = r.roots.iter().map(|z| z.im).sum();
        let s = -c[d - 1] / c[d];
        prop_assert!((sum_re - s).abs() < 1e-7 * (1.0 + s.abs()), "{} vs {}", sum_re, s);
        prop_assert!(sum_im.abs() < 1e-7 * (1.0 + s.abs()));
    }

    #[test]
    fn roots_come_in_conjugate_pairs(g in graph(10)) {
        let r = find_roots(&independence_polynomial(&g)).unwrap();
        for z in &r.roots {
            let partner = r.roots.iter().any(|w| {
                (w.re - z.re).abs() <= 1e-7 * (1.0 + z.modulus()) && (w.im + z.im).abs() <= 1e-7 * (1.0 + z.modulus())
            });
            prop_assert!(partner, "no conjugate for {:?}", z);
        }
        let re_roots = r.roots.iter().filter(|z| z.im == 0.0);
        for z in re_roots {
            prop_assert!(z.re < 0.0);
        }
    }

    #[test]
    fn residuals_are_small(g in graph(12)) {
        let r = find_roots(&independence_polynomial(&g)).unwrap();
        prop_assert!(r.max_residual() <= 1e-6);
    }

    #[test]
    fn tree_dp_agrees(t in tree(30)) {
        prop_assert!(t.is_tree());
        prop_assert_eq!(independence_polynomial_tree(&t).unwrap(), independence_polynomial(&t));
    }

    #[test]
    fn relabelling_preserves_everything(g in graph(10), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(independence_polynomial(&g), independence_polynomial(&h));
    }
}
