//! Maximal independent sets via Bron–Kerbosch with pivoting, run on the
//! complement so that cliques there are independent sets here.

use crate::graph::{bit, Bits, Graph};

/// Calls `f` once per inclusion-maximal independent set of the active graph.
/// The empty graph has exactly one, the empty set.
pub fn for_each_maximal_independent_set<F: FnMut(u64)>(g: &Graph, mut f: F) {
    let active = g.active_mask();
    let non_nbrs = |v: usize| active & !g.neighbors(v) & !bit(v);
    bron_kerbosch(&non_nbrs, 0, active, 0, &mut f);
}

fn bron_kerbosch<N, F>(non_nbrs: &N, r: u64, mut p: u64, mut x: u64, f: &mut F)
where
    N: Fn(usize) -> u64,
    F: FnMut(u64),
{
    if p == 0 {
        if x == 0 {
            f(r);
        }
        return;
    }
    let pivot = Bits(p | x)
        .max_by_key(|&u| (p & non_nbrs(u)).count_ones())
        .expect("p is nonempty");
    for v in Bits(p & !non_nbrs(pivot)) {
        let nv = non_nbrs(v);
        bron_kerbosch(non_nbrs, r | bit(v), p & nv, x & nv, f);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// `μ(G)`, the number of maximal independent sets.
pub fn count_maximal_independent_sets(g: &Graph) -> u64 {
    let mut count = 0;
    for_each_maximal_independent_set(g, |_| count += 1);
    count
}

/// Sizes of all maximal independent sets, ascending with repeats.
pub fn maximal_set_sizes(g: &Graph) -> Vec<usize> {
    let mut sizes = Vec::new();
    for_each_maximal_independent_set(g, |s| sizes.push(s.count_ones() as usize));
    sizes.sort_unstable();
    sizes
}

/// Every maximal independent set has the same size.
pub fn is_well_covered(g: &Graph) -> bool {
    let mut size = None;
    let mut ok = true;
    for_each_maximal_independent_set(g, |s| {
        let k = s.count_ones();
        match size {
            None => size = Some(k),
            Some(m) if m != k => ok = false,
            _ => {}
        }
    });
    ok
}
