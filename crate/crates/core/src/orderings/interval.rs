//! Interval orders: hyperedge sequences in which every vertex occupies a
//! contiguous block.

use super::pqtree::PqTree;
use crate::hypergraph::Hypergraph;

/// A hyperedge order `σ` with, for every vertex, the first and last
/// positions of `σ` holding it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalOrder {
    pub edge_order: Vec<usize>,
    /// `leftmost[v]`: smallest position in `edge_order` of a hyperedge holding `v`.
    pub leftmost: Vec<usize>,
    /// `rightmost[v]`: largest such position.
    pub rightmost: Vec<usize>,
}

impl IntervalOrder {
    /// Builds the position arrays for `edge_order`; `None` if some vertex is
    /// not contiguous.
    pub fn from_order(h: &Hypergraph, edge_order: Vec<usize>) -> Option<Self> {
        let mut leftmost = vec![usize::MAX; h.n()];
        let mut rightmost = vec![0; h.n()];
        for (i, &e) in edge_order.iter().enumerate() {
            for &v in h.edge(e) {
                leftmost[v] = leftmost[v].min(i);
                rightmost[v] = rightmost[v].max(i);
            }
        }
        let contiguous = (0..h.n()).all(|v| rightmost[v] - leftmost[v] + 1 == h.incidence(v).len());
        contiguous.then_some(IntervalOrder { edge_order, leftmost, rightmost })
    }

    /// The order read backwards.
    pub fn reversed(&self) -> Self {
        let m = self.edge_order.len();
        IntervalOrder {
            edge_order: self.edge_order.iter().rev().copied().collect(),
            leftmost: self.rightmost.iter().map(|&r| m - 1 - r).collect(),
            rightmost: self.leftmost.iter().map(|&l| m - 1 - l).collect(),
        }
    }
}

/// Finds an order of the hyperedges in which each vertex's hyperedges are
/// consecutive; `None` iff `h` is not an interval hypergraph. Components are
/// placed one after another in order of their smallest hyperedge id, and
/// each component is read in the direction that puts its smaller end id
/// first.
pub fn interval_order(h: &Hypergraph) -> Option<IntervalOrder> {
    let comps = h.components();
    let mut order = Vec::with_capacity(h.m());
    let mut local = vec![usize::MAX; h.m()];
    for group in comps.edge_groups() {
        for (i, &e) in group.iter().enumerate() {
            local[e] = i;
        }
        let mut tree = PqTree::new(group.len());
        let mut leaves = Vec::new();
        for &e in &group {
            for &v in h.edge(e) {
                let holders = h.incidence(v);
                // Constrain each vertex once, from its first hyperedge.
                if holders[0] != e || holders.len() < 2 || holders.len() == group.len() {
                    continue;
                }
                leaves.clear();
                leaves.extend(holders.iter().map(|&f| local[f]));
                if !tree.reduce(&leaves) {
                    return None;
                }
            }
        }
        let mut frontier: Vec<usize> = tree.frontier().into_iter().map(|i| group[i]).collect();
        if frontier.first() > frontier.last() {
            frontier.reverse();
        }
        order.extend(frontier);
    }
    let result = IntervalOrder::from_order(h, order);
    debug_assert!(result.is_some(), "PQ-tree frontier violates a constraint");
    result
}
