#![allow(dead_code)]

use indroot::{Graph, IntPoly};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Independence polynomial by enumerating all `2^n` vertex subsets.
pub fn brute_force_poly(g: &Graph) -> IntPoly {
    let verts: Vec<usize> = g.vertices().collect();
    let n = verts.len();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..(1u64 << n) {
        let mut set = 0u64;
        for (i, &v) in verts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set |= 1 << v;
            }
        }
        let independent = verts
            .iter()
            .filter(|&&v| set >> v & 1 == 1)
            .all(|&v| g.neighbors(v) & set == 0);
        if independent {
            counts[set.count_ones() as usize] += 1;
        }
    }
    IntPoly::new(counts.into_iter().map(BigInt::from).collect())
}

/// Maximal independent sets counted by subset enumeration.
pub fn brute_force_mu(g: &Graph) -> u64 {
    let n = g.n();
    let all = g.active_mask();
    let mut count = 0;
    for set in 0u64..(1u64 << n) {
        if set & !all != 0 {
            continue;
        }
        let mut closed = set;
        let mut independent = true;
        for v in (0..n).filter(|v| set >> v & 1 == 1) {
            if g.neighbors(v) & set != 0 {
                independent = false;
                break;
            }
            closed |= g.neighbors(v);
        }
        if independent && closed & all == all {
            count += 1;
        }
    }
    count
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree(rng: &mut StdRng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut g = Graph::empty(n).unwrap();
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, s).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
