//! Exact canonical labelling by partition refinement and individualization.
//!
//! The search tree is explored in full (no automorphism group bookkeeping)
//! except that branches on twin vertices are collapsed: two vertices with
//! identical neighborhoods apart from each other are swapped by an
//! automorphism that fixes the current partition, so only one of them needs
//! to be individualized. That keeps empty, complete and star-like graphs
//! cheap; the remaining cost is fine at the orders this crate enumerates.

use crate::graph::{bit, Bits, Graph};

/// Canonical adjacency rows; two graphs are isomorphic iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(&self.rows).expect("canonical rows are a valid graph")
    }
}

/// Canonical form of the active part of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with the labelling that produces it; `perm[v]` is
/// the canonical label of vertex `v` of `g.compact()`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let g = g.compact();
    let n = g.n();
    if n == 0 {
        return (CanonicalForm { n: 0, rows: Vec::new() }, Vec::new());
    }
    let mut cells = vec![g.active_mask()];
    refine(&g, &mut cells);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(&g, cells, &mut best);
    let (rows, perm) = best.expect("search visits at least one leaf");
    (CanonicalForm { n: n as u8, rows }, perm)
}

/// The isomorphic copy of `g` with canonical labels.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

fn search(g: &Graph, cells: Vec<u64>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let mut perm = vec![0usize; g.n()];
        for (label, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = label;
        }
        let rows = relabelled_rows(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| rows > *b) {
            *best = Some((rows, perm));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: u64 = 0;
    for v in Bits(cell) {
        let twin = Bits(tried).any(|u| g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u));
        if twin {
            continue;
        }
        tried |= bit(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(bit(v));
        next.push(cell & !bit(v));
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

fn relabelled_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for u in 0..g.n() {
        rows[perm[u]] = Bits(g.neighbors(u)).fold(0, |acc, w| acc | bit(perm[w]));
    }
    rows
}

/// Refines an ordered partition to an equitable one. Each cell is split by
/// neighbor counts into the splitter cells, sub-cells ordered by count, which
/// keeps the result independent of vertex labels.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for &c in cells.iter() {
            if c.count_ones() == 1 {
                next.push(c);
                continue;
            }
            let mut by_count: Vec<(u32, u64)> = Vec::new();
            for v in Bits(c) {
                let k = (g.neighbors(v) & splitter).count_ones();
                match by_count.iter_mut().find(|(count, _)| *count == k) {
                    Some((_, m)) => *m |= bit(v),
                    None => by_count.push((k, bit(v))),
                }
            }
            if by_count.len() > 1 {
                changed = true;
                by_count.sort_unstable_by_key(|&(k, _)| k);
            }
            next.extend(by_count.into_iter().map(|(_, m)| m));
        }
        *cells = next;
        // A split can make earlier splitters informative again.
        s = if changed { 0 } else { s + 1 };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffled(g: &Graph, perm: &[usize]) -> Graph {
        g.compact().relabel(perm)
    }

    #[test]
    fn relabelled_copies_share_a_form() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let h = shuffled(&g, &[5, 3, 1, 0, 2, 4]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_nonisomorphic_cospectral_pairs() {
        // C4 + K1 and the star K_{1,4} share a spectrum but not a form.
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k14 = Graph::star(4).unwrap();
        assert_ne!(canonical_form(&c4k1), canonical_form(&k14));
        // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_isomorphic(&prism, &k33));
    }

    #[test]
    fn form_round_trips_to_an_isomorphic_graph() {
        let g = Graph::path(7).unwrap();
        let c = canonical_graph(&g);
        assert!(c.is_tree());
        assert_eq!(canonical_form(&c), canonical_form(&g));
        let (form, perm) = canonical_labeling(&g);
        assert_eq!(g.relabel(&perm), form.to_graph());
    }

    #[test]
    fn symmetric_graphs_are_cheap() {
        for n in [0, 1, 9, 20, 40] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).order(), n);
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_graph(&k), k);
        }
    }

    #[test]
    fn deleted_vertices_are_ignored() {
        let g = Graph::path(4).unwrap().delete_vertex(3).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&Graph::path(3).unwrap()));
    }
}
