//! Subset graphs: word-parallel baseline and the β, γ and interval methods.

use crate::bachman::{build_bachman, BachmanDiagram};
use crate::error::{Error, Result};
use crate::hypergraph::{DirectedGraph, Hypergraph};
use crate::orderings::{doubly_lexical_order, interval_order, is_gamma_free, IntervalOrder};

/// Subset graph of an arbitrary hypergraph with 64-bit word parallelism:
/// the supersets of `E` are the intersection of the incidence bitsets of
/// its vertices. `O(N·m/64)` time, `O(n·m/64)` memory.
pub fn subset_graph_baseline(h: &Hypergraph) -> DirectedGraph {
    let m = h.m();
    let words = m.div_ceil(64);
    let mut bits = vec![0u64; h.n() * words];
    for v in 0..h.n() {
        let row = &mut bits[v * words..(v + 1) * words];
        for &e in h.incidence(v) {
            row[e / 64] |= 1 << (e % 64);
        }
    }
    let mut acc = vec![0u64; words];
    let mut edges = Vec::new();
    for i in 0..m {
        let first = h.edge(i)[0];
        acc.copy_from_slice(&bits[first * words..(first + 1) * words]);
        for &v in &h.edge(i)[1..] {
            for (a, b) in acc.iter_mut().zip(&bits[v * words..(v + 1) * words]) {
                *a &= b;
            }
        }
        for (w, &word) in acc.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let j = w * 64 + x.trailing_zeros() as usize;
                if j != i {
                    edges.push((i, j));
                }
                x &= x - 1;
            }
        }
    }
    DirectedGraph::new(m, edges)
}

/// Subset graph of a β-acyclic hypergraph from a Γ-free doubly lexical
/// order. For each `E`, with `v` its top-most vertex, the supersets of `E`
/// are exactly the hyperedges holding `v` that are not left of `E`'s block
/// of equal columns.
pub fn subset_graph_beta(h: &Hypergraph) -> Result<DirectedGraph> {
    let ord = doubly_lexical_order(h);
    if !is_gamma_free(h, &ord) {
        return Err(Error::NotBeta);
    }
    let vpos = ord.vertex_positions();
    let epos = ord.edge_positions();
    // Incidence lists ordered left to right.
    let mut by_pos: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for &e in &ord.edge_order {
        for &v in h.edge(e) {
            by_pos[v].push(e);
        }
    }
    // Left-most position of each block of equal columns.
    let mut block_start = vec![0; h.m()];
    for (i, w) in ord.edge_order.windows(2).enumerate() {
        block_start[w[1]] = if h.edge(w[0]) == h.edge(w[1]) { block_start[w[0]] } else { i + 1 };
    }
    let mut edges = Vec::new();
    for (e, &start) in block_start.iter().enumerate() {
        let top = *h.edge(e).iter().min_by_key(|&&v| vpos[v]).expect("hyperedges are non-empty");
        let list = &by_pos[top];
        let from = list.partition_point(|&f| epos[f] < start);
        edges.extend(list[from..].iter().filter(|&&f| f != e).map(|&f| (e, f)));
    }
    Ok(DirectedGraph::new(h.m(), edges))
}

/// Subset graph of a γ-acyclic hypergraph from its Bachman diagram.
pub fn subset_graph_gamma(h: &Hypergraph) -> Result<DirectedGraph> {
    let d = build_bachman(h)?;
    Ok(subset_graph_from_bachman(h.m(), &d))
}

/// `E ⊆ E'` iff `φ(E')` reaches `φ(E)`: for each node, walk the reversed
/// diagram collecting the hyperedges of every node that reaches it.
pub fn subset_graph_from_bachman(m: usize, d: &BachmanDiagram) -> DirectedGraph {
    let phi_inv = d.phi_inverse();
    let preds = d.predecessors();
    let mut edges = Vec::new();
    let mut stack = Vec::new();
    let mut above = Vec::new();
    for (x, own) in phi_inv.iter().enumerate() {
        if own.is_empty() {
            continue;
        }
        above.clear();
        stack.push(x);
        // The diagram is a forest, so no node is reached twice.
        while let Some(y) = stack.pop() {
            above.extend_from_slice(&phi_inv[y]);
            stack.extend_from_slice(&preds[y]);
        }
        for &e in own {
            edges.extend(above.iter().filter(|&&f| f != e).map(|&f| (e, f)));
        }
    }
    DirectedGraph::new(m, edges)
}

/// Subset graph of an interval hypergraph.
pub fn subset_graph_interval(h: &Hypergraph) -> Result<DirectedGraph> {
    let ord = interval_order(h).ok_or(Error::NotInterval)?;
    Ok(subset_graph_from_interval(h, &ord))
}

/// Two passes over an interval order. In the forward pass `E_i` (at
/// position `i`) is contained in the earlier `E_j` iff `E_i ⊆ E_{i-1}` and
/// every vertex of `E_i` already occurs at position `j`, i.e. `j` is at least
/// the largest left-most position over `E_i`. The backward pass is the same
/// on the reversed order.
pub fn subset_graph_from_interval(h: &Hypergraph, ord: &IntervalOrder) -> DirectedGraph {
    let mut edges = Vec::new();
    for pass in [ord.clone(), ord.reversed()] {
        for (i, &e) in pass.edge_order.iter().enumerate().skip(1) {
            let vs = h.edge(e);
            if vs.iter().all(|&v| pass.leftmost[v] < i) {
                let from = vs.iter().map(|&v| pass.leftmost[v]).max().unwrap();
                edges.extend(pass.edge_order[from..i].iter().map(|&f| (e, f)));
            }
        }
    }
    DirectedGraph::new(h.m(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::subset_graph_naive;

    fn sample() -> Hypergraph {
        Hypergraph::from_named_edges([vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c"], vec!["c", "e", "f"]])
            .unwrap()
    }

    #[test]
    fn sample_all_methods() {
        let h = sample();
        let want = DirectedGraph::new(4, [(2, 0)]);
        assert_eq!(subset_graph_baseline(&h), want);
        assert_eq!(subset_graph_beta(&h).unwrap(), want);
        assert_eq!(subset_graph_gamma(&h).unwrap(), want);
    }

    #[test]
    fn chain_of_subsets() {
        let h = Hypergraph::new(3, vec![vec![0], vec![0, 1], vec![0, 1, 2]]).unwrap();
        let want = DirectedGraph::new(3, [(0, 1), (0, 2), (1, 2)]);
        assert_eq!(subset_graph_baseline(&h), want);
        assert_eq!(subset_graph_beta(&h).unwrap(), want);
        assert_eq!(subset_graph_gamma(&h).unwrap(), want);
        assert_eq!(subset_graph_interval(&h).unwrap(), want);
    }

    #[test]
    fn equal_hyperedges_give_mutual_edges() {
        let h = Hypergraph::new(2, vec![vec![0], vec![0], vec![0, 1]]).unwrap();
        let want = DirectedGraph::new(3, [(0, 1), (1, 0), (0, 2), (1, 2)]);
        assert_eq!(subset_graph_gamma(&h).unwrap(), want);
        assert_eq!(subset_graph_beta(&h).unwrap(), want);
        assert_eq!(subset_graph_interval(&h).unwrap(), want);
        let pair = Hypergraph::new(1, vec![vec![0], vec![0]]).unwrap();
        assert_eq!(subset_graph_interval(&pair).unwrap().edges(), &[(0, 1), (1, 0)]);
    }

    #[test]
    fn star_family_is_empty() {
        let h = Hypergraph::from_named_edges([vec!["u", "a"], vec!["u", "b"], vec!["u", "c"]]).unwrap();
        assert_eq!(subset_graph_beta(&h).unwrap().edge_count(), 0);
        assert_eq!(subset_graph_gamma(&h).unwrap().edge_count(), 0);
    }

    #[test]
    fn interval_examples() {
        let chain = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(subset_graph_interval(&chain).unwrap().edge_count(), 0);
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(subset_graph_interval(&h).unwrap().edges(), &[(1, 0)]);
    }

    #[test]
    fn class_violations_reported() {
        let covered = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1, 2]]).unwrap();
        assert_eq!(subset_graph_beta(&covered), Err(Error::NotBeta));
        assert_eq!(subset_graph_gamma(&covered), Err(Error::NotGamma));
        let claw = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(subset_graph_interval(&claw), Err(Error::NotInterval));
        assert_eq!(subset_graph_baseline(&covered), subset_graph_naive(&covered));
    }
}
