//! Named graph families, including the extremal constructions for large
//! independence roots.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, MAX_VERTICES};

/// A named family member. The payload is `k` for the triangle and tree
/// families, the order for `Path`/`Complete`/`Empty` and the number of leaves
/// for `Star`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `G1(k)` plus a pendant `K2` hung from the center.
    G0(usize),
    /// A center joined to two vertices of each of `k` triangles.
    G1(usize),
    /// `G0(k)` plus a second pendant `K2` at the center.
    G2(usize),
    /// `k` copies of `P3` glued at a common leaf.
    Tk(usize),
    /// `T_k` with the double-broom gadget attached at its center.
    TkPrime(usize),
    Path(usize),
    Star(usize),
    Complete(usize),
    Empty(usize),
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::G0(_) => "G0",
            Family::G1(_) => "G1",
            Family::G2(_) => "G2",
            Family::Tk(_) => "Tk",
            Family::TkPrime(_) => "TkPrime",
            Family::Path(_) => "Path",
            Family::Star(_) => "Star",
            Family::Complete(_) => "Complete",
            Family::Empty(_) => "Empty",
        }
    }

    pub fn param(&self) -> usize {
        match *self {
            Family::G0(p)
            | Family::G1(p)
            | Family::G2(p)
            | Family::Tk(p)
            | Family::TkPrime(p)
            | Family::Path(p)
            | Family::Star(p)
            | Family::Complete(p)
            | Family::Empty(p) => p,
        }
    }

    /// Builds a family member from a tag name (case-insensitive) and parameter.
    pub fn from_tag(tag: &str, param: usize) -> Result<Family, GraphError> {
        let f = match tag.to_ascii_lowercase().as_str() {
            "g0" => Family::G0(param),
            "g1" => Family::G1(param),
            "g2" => Family::G2(param),
            "tk" | "t" => Family::Tk(param),
            "tkprime" | "tk'" | "tkp" => Family::TkPrime(param),
            "path" | "p" => Family::Path(param),
            "star" => Family::Star(param),
            "complete" | "k" => Family::Complete(param),
            "empty" => Family::Empty(param),
            _ => return Err(GraphError::BadFamilyParameter(format!("unknown family {tag:?}"))),
        };
        Ok(f)
    }

    /// Number of vertices of the member.
    pub fn order(&self) -> usize {
        match *self {
            Family::G0(k) => 3 * k + 3,
            Family::G1(k) => 3 * k + 1,
            Family::G2(k) => 3 * k + 5,
            Family::Tk(k) => 2 * k + 1,
            Family::TkPrime(k) => 2 * k + 6,
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) => n,
            Family::Star(leaves) => leaves + 1,
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        build_family(*self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.tag(), self.param())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Accepts `Tk(3)`, `Tk:3` or `Tk 3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadFamilyParameter(format!("cannot parse family {s:?}"));
        let s = s.trim();
        let (tag, rest) = s
            .split_once(['(', ':', ' '])
            .ok_or_else(bad)?;
        let param = rest.trim().trim_end_matches(')').trim().parse().map_err(|_| bad())?;
        Family::from_tag(tag.trim(), param)
    }
}

/// Builds the family member. Vertex 0 is the center for the triangle and
/// tree families.
pub fn build_family(id: Family) -> Result<Graph, GraphError> {
    let n = id.order();
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    match id {
        Family::Path(n) => Graph::path(n),
        Family::Star(leaves) => Graph::star(leaves),
        Family::Complete(n) => Graph::complete(n),
        Family::Empty(n) => Graph::empty(n),
        Family::G1(k) => triangle_fan(k, 0),
        Family::G0(k) => triangle_fan(k, 1),
        Family::G2(k) => triangle_fan(k, 2),
        Family::Tk(k) => {
            let mut edges = Vec::with_capacity(2 * k);
            for i in 0..k {
                let (x, y) = (1 + 2 * i, 2 + 2 * i);
                edges.push((0, x));
                edges.push((x, y));
            }
            Graph::from_edges(n, &edges)
        }
        Family::TkPrime(k) => {
            let mut g = build_family(Family::Tk(k))?.disjoint_union(&Graph::empty(5)?)?;
            // b joins the center; b has one more leaf c; a is b's other neighbor
            // and carries the two leaves d, e.
            let base = 2 * k + 1;
            let (a, b, c, d, e) = (base, base + 1, base + 2, base + 3, base + 4);
            for (u, v) in [(0, b), (b, c), (b, a), (a, d), (a, e)] {
                g.add_edge(u, v)?;
            }
            Ok(g)
        }
    }
}

/// Center 0, then `k` triangles `{u, v, w}` with the center joined to `u` and
/// `v`, then `pendants` paths of length two hung from the center.
fn triangle_fan(k: usize, pendants: usize) -> Result<Graph, GraphError> {
    let n = 3 * k + 1 + 2 * pendants;
    let mut edges = Vec::new();
    for i in 0..k {
        let (u, v, w) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
        edges.extend([(u, v), (v, w), (u, w), (0, u), (0, v)]);
    }
    for p in 0..pendants {
        let (u, w) = (3 * k + 1 + 2 * p, 3 * k + 2 + 2 * p);
        edges.extend([(0, u), (u, w)]);
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn orders_match_family_sizes() {
        for k in 0..10 {
            for (f, n) in [
                (Family::G0(k), 3 * k + 3),
                (Family::G1(k), 3 * k + 1),
                (Family::G2(k), 3 * k + 5),
                (Family::Tk(k), 2 * k + 1),
                (Family::TkPrime(k), 2 * k + 6),
            ] {
                let g = f.build().unwrap();
                assert_eq!(g.order(), n, "{f}");
                g.check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn small_members() {
        let p3 = Graph::path(3).unwrap();
        assert!(is_isomorphic(&Family::Tk(1).build().unwrap(), &p3));
        assert!(is_isomorphic(&Family::Tk(2).build().unwrap(), &Graph::path(5).unwrap()));
        assert!(is_isomorphic(&Family::G0(0).build().unwrap(), &p3));
        assert!(is_isomorphic(&Family::G2(0).build().unwrap(), &Graph::path(5).unwrap()));
        assert_eq!(Family::G1(0).build().unwrap().order(), 1);

        // K4 minus one edge.
        let g1 = Family::G1(1).build().unwrap();
        assert_eq!(g1.edge_count(), 5);
        let mut k4e = Graph::complete(4).unwrap();
        k4e = Graph::from_edges(4, &k4e.edges().filter(|&e| e != (0, 3)).collect::<Vec<_>>()).unwrap();
        assert!(is_isomorphic(&g1, &k4e));
    }

    #[test]
    fn tree_families_are_trees() {
        for k in 0..12 {
            assert!(Family::Tk(k).build().unwrap().is_tree());
            assert!(Family::TkPrime(k).build().unwrap().is_tree());
        }
        // T0' is the double broom: two adjacent centers with two leaves each.
        let t0 = Family::TkPrime(0).build().unwrap();
        let mut degrees: Vec<_> = t0.vertices().map(|v| t0.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 1, 3, 3]);
    }

    #[test]
    fn capacity_and_parsing() {
        assert_eq!(build_family(Family::G1(21)).unwrap().order(), 64);
        assert_eq!(build_family(Family::G1(22)), Err(GraphError::TooManyVertices(67)));
        assert_eq!("Tk(3)".parse::<Family>().unwrap(), Family::Tk(3));
        assert_eq!("g2:4".parse::<Family>().unwrap(), Family::G2(4));
        assert_eq!("TkPrime 0".parse::<Family>().unwrap(), Family::TkPrime(0));
        assert!("Xk(3)".parse::<Family>().is_err());
        assert!("Tk".parse::<Family>().is_err());
        assert_eq!(Family::Star(30).build().unwrap().order(), 31);
    }
}
