//! Isomorph-free generation of trees, forests and graphs.
//!
//! Trees come from canonical level sequences of rooted trees, keeping only
//! the rooting at the centroid (and, for bicentroidal trees, the heavier of
//! the two halves). Forests are multisets of trees over integer partitions.
//! Graphs are grown one vertex at a time and deduplicated by canonical form.

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::GraphError;
use crate::graph::{bit, Graph};

pub const MAX_TREE_ORDER: usize = 20;
pub const MAX_FOREST_ORDER: usize = 18;
pub const MAX_GRAPH_ORDER: usize = 9;

fn check_range(n: usize, max: usize) -> Result<(), GraphError> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(GraphError::OrderOutOfRange { n, min: 1, max })
    }
}

/// Rooted trees on `n` vertices as canonical level sequences, in decreasing
/// lexicographic order starting from the path.
#[derive(Clone, Debug)]
pub struct RootedTrees {
    levels: Vec<usize>,
    done: bool,
}

impl RootedTrees {
    pub fn new(n: usize) -> Self {
        RootedTrees {
            levels: (0..n).collect(),
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        let l = &mut self.levels;
        let Some(p) = l.iter().rposition(|&x| x > 1) else {
            self.done = true;
            return;
        };
        let q = l[..p].iter().rposition(|&x| x == l[p] - 1).expect("a parent level exists");
        let shift = p - q;
        for i in p..l.len() {
            l[i] = l[i - shift];
        }
    }
}

impl Iterator for RootedTrees {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.levels.clone();
        self.advance();
        Some(out)
    }
}

/// Parent of every non-root position in a level sequence.
fn parents(levels: &[usize]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(levels.len());
    let mut parent = vec![usize::MAX; levels.len()];
    for (i, &lv) in levels.iter().enumerate() {
        stack.truncate(lv);
        if let Some(&p) = stack.last() {
            parent[i] = p;
        }
        stack.push(i);
    }
    parent
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let parent = parents(levels);
    let edges: Vec<_> = (1..levels.len()).map(|i| (parent[i], i)).collect();
    Graph::from_edges(levels.len(), &edges).expect("level sequence yields a valid tree")
}

/// Decides whether a canonical rooted tree is the chosen rooting of its free
/// tree.
fn is_centroid_rooting(levels: &[usize]) -> bool {
    let n = levels.len();
    // Child subtrees of the root as contiguous ranges.
    let mut starts: Vec<usize> = (1..n).filter(|&i| levels[i] == 1).collect();
    starts.push(n);
    let mut half = None;
    for w in starts.windows(2) {
        let size = w[1] - w[0];
        if 2 * size > n {
            return false;
        }
        if 2 * size == n {
            half = Some((w[0], w[1]));
        }
    }
    let Some((a, b)) = half else {
        return true;
    };
    // Bicentroidal: compare the two halves as rooted trees.
    let sub: Vec<usize> = levels[a..b].iter().map(|&x| x - 1).collect();
    let rest: Vec<usize> = levels[..a].iter().chain(&levels[b..]).copied().collect();
    rest >= sub
}

/// One representative per isomorphism class of free trees, as an iterator.
pub fn tree_iter(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    check_range(n, MAX_TREE_ORDER)?;
    Ok(RootedTrees::new(n)
        .filter(|l| is_centroid_rooting(l))
        .map(|l| tree_from_levels(&l)))
}

pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(tree_iter(n)?.collect())
}

/// Partitions of `n` into non-increasing parts.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Non-decreasing index tuples of length `m` over `0..k`.
fn multisets(k: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in lo..k {
            cur.push(i);
            go(k, m, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, m, 0, &mut Vec::new(), &mut out);
    out
}

/// One representative per isomorphism class of forests on `n` vertices.
pub fn enumerate_forests(n: usize) -> Result<Vec<Graph>, GraphError> {
    check_range(n, MAX_FOREST_ORDER)?;
    let trees: Vec<Vec<Graph>> = (0..=n)
        .map(|s| if s == 0 { Vec::new() } else { enumerate_trees(s).expect("s <= n") })
        .collect();
    let mut out = Vec::new();
    for parts in partitions(n) {
        // Group equal part sizes: (size, multiplicity), sizes descending.
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &parts {
            match groups.last_mut() {
                Some((s, m)) if *s == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        // Each group contributes a sub-forest: a multiset of trees of one size.
        let per_group: Vec<Vec<Graph>> = groups
            .iter()
            .map(|&(s, m)| {
                multisets(trees[s].len(), m)
                    .into_iter()
                    .map(|idx| {
                        idx.iter().fold(Graph::empty(0).unwrap(), |f, &t| {
                            f.disjoint_union(&trees[s][t]).expect("order <= n")
                        })
                    })
                    .collect()
            })
            .collect();
        product_unions(&per_group, Graph::empty(0)?, &mut out);
    }
    Ok(out)
}

fn product_unions(groups: &[Vec<Graph>], acc: Graph, out: &mut Vec<Graph>) {
    match groups.split_first() {
        None => out.push(acc),
        Some((first, rest)) => {
            for part in first {
                product_unions(rest, acc.disjoint_union(part).expect("order <= n"), out);
            }
        }
    }
}

/// Upper triangle of a graph on at most 11 vertices packed into a `u64`.
fn pack(g: &Graph) -> u64 {
    let mut code = 0u64;
    let mut k = 0;
    for j in 1..g.n() {
        for i in 0..j {
            if g.has_edge(i, j) {
                code |= bit(k);
            }
            k += 1;
        }
    }
    code
}

fn unpack(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 9");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code & bit(k) != 0 {
                g.add_edge(i, j).expect("valid pair");
            }
            k += 1;
        }
    }
    g
}

/// One representative (in canonical labelling) per isomorphism class of
/// graphs on `n` vertices, sorted by packed canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    check_range(n, MAX_GRAPH_ORDER)?;
    let mut level: Vec<u64> = vec![0];
    for m in 1..n {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let parent = unpack(m, code);
                let mut local: Vec<u64> = (0..1u64 << m)
                    .map(|nbrs| {
                        let mut g = parent.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
                        for v in 0..m {
                            if nbrs & bit(v) != 0 {
                                g.add_edge(v, m).unwrap();
                            }
                        }
                        pack(&canonical_form(&g).to_graph())
                    })
                    .collect();
                local.sort_unstable();
                local.dedup();
                local
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    Ok(level.into_iter().map(|c| unpack(n, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn rooted_tree_counts() {
        let expected = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        for (n, &c) in (1..).zip(expected.iter()) {
            assert_eq!(RootedTrees::new(n).count(), c, "n={n}");
        }
    }

    #[test]
    fn free_tree_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
        for (n, &c) in (1..).zip(expected.iter()) {
            assert_eq!(enumerate_trees(n).unwrap().len(), c, "n={n}");
        }
    }

    #[test]
    fn trees_are_distinct_trees() {
        for n in 1..=11 {
            let trees = enumerate_trees(n).unwrap();
            let forms: HashSet<_> = trees.iter().map(canonical_form).collect();
            assert_eq!(forms.len(), trees.len());
            for t in &trees {
                assert!(t.is_tree());
                assert_eq!(t.edge_count(), n - 1);
                t.check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn forest_counts() {
        let expected = [1, 2, 3, 6, 10, 20, 37, 76, 153, 329];
        for (n, &c) in (1..).zip(expected.iter()) {
            let forests = enumerate_forests(n).unwrap();
            assert_eq!(forests.len(), c, "n={n}");
            let forms: HashSet<_> = forests.iter().map(canonical_form).collect();
            assert_eq!(forms.len(), c);
            assert!(forests.iter().all(|f| f.is_forest() && f.order() == n));
        }
    }

    #[test]
    fn graph_counts() {
        let expected = [1, 2, 4, 11, 34, 156, 1044];
        for (n, &c) in (1..).zip(expected.iter()) {
            assert_eq!(enumerate_graphs(n).unwrap().len(), c, "n={n}");
        }
        let cumulative: usize = (1..=5).map(|n| enumerate_graphs(n).unwrap().len()).sum();
        assert_eq!(cumulative, 52);
    }

    #[test]
    fn ranges_are_enforced() {
        assert!(matches!(enumerate_trees(0), Err(GraphError::OrderOutOfRange { .. })));
        assert!(matches!(enumerate_trees(21), Err(GraphError::OrderOutOfRange { .. })));
        assert!(matches!(enumerate_graphs(10), Err(GraphError::OrderOutOfRange { .. })));
        assert!(matches!(enumerate_forests(19), Err(GraphError::OrderOutOfRange { .. })));
    }

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
