//! Brute-force reference implementations, written for clarity and meant for
//! small inputs only.

use crate::bachman::BachmanDiagram;
use crate::error::{Error, Result};
use crate::hypergraph::{DirectedGraph, Hypergraph, UndirectedGraph};
use std::collections::{BTreeSet, VecDeque};

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Pairwise inclusion tests: `(i, j)` iff `E_i ⊆ E_j`, `i ≠ j`.
pub fn subset_graph_naive(h: &Hypergraph) -> DirectedGraph {
    let m = h.m();
    let edges =
        (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|&(i, j)| i != j && is_subset(h.edge(i), h.edge(j)));
    DirectedGraph::new(m, edges)
}

/// α-acyclicity by GYO reduction: repeatedly drop vertices lying in at most
/// one hyperedge and hyperedges contained in another.
pub fn acyclic_gyo(h: &Hypergraph) -> bool {
    let mut sets: Vec<BTreeSet<usize>> = h.edges().iter().map(|e| e.iter().copied().collect()).collect();
    loop {
        let mut changed = false;
        let mut count = vec![0usize; h.n()];
        for s in &sets {
            for &v in s {
                count[v] += 1;
            }
        }
        for s in &mut sets {
            let before = s.len();
            s.retain(|&v| count[v] > 1);
            changed |= s.len() != before;
        }
        if let Some(i) = (0..sets.len()).find(|&i| (0..sets.len()).any(|j| j != i && sets[i].is_subset(&sets[j]))) {
            sets.swap_remove(i);
            changed = true;
        }
        if !changed {
            return sets.len() <= 1;
        }
    }
}

fn require_acyclic(h: &Hypergraph) -> Result<()> {
    if acyclic_gyo(h) {
        Ok(())
    } else {
        Err(Error::NotAcyclic)
    }
}

/// Union join graph from the separation criterion: `E_i E_j` is an edge iff
/// the hyperedges meet and removing `E_i ∩ E_j` leaves no path from
/// `E_i ∖ E_j` to `E_j ∖ E_i`. An empty side separates vacuously.
pub fn union_join_oracle(h: &Hypergraph) -> Result<UndirectedGraph> {
    require_acyclic(h)?;
    let mut edges = Vec::new();
    for i in 0..h.m() {
        for j in i + 1..h.m() {
            let (a, b) = (h.edge(i), h.edge(j));
            let cut: Vec<usize> = a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect();
            if cut.is_empty() {
                continue;
            }
            let mut blocked = vec![false; h.n()];
            for &v in &cut {
                blocked[v] = true;
            }
            let mut seen = blocked.clone();
            let mut queue: VecDeque<usize> = a.iter().copied().filter(|&v| !blocked[v]).collect();
            for &v in &queue {
                seen[v] = true;
            }
            let mut separated = true;
            while let Some(u) = queue.pop_front() {
                if b.binary_search(&u).is_ok() {
                    separated = false;
                    break;
                }
                for &e in h.incidence(u) {
                    for &w in h.edge(e) {
                        if !std::mem::replace(&mut seen[w], true) {
                            queue.push_back(w);
                        }
                    }
                }
            }
            if separated {
                edges.push((i, j));
            }
        }
    }
    Ok(UndirectedGraph::new(h.m(), edges))
}

/// β-acyclicity by definition: every non-empty sub-family is α-acyclic.
pub fn beta_by_definition(h: &Hypergraph) -> Result<bool> {
    if h.m() > 16 {
        return Err(Error::TooLarge(format!("{} hyperedges, at most 16 supported", h.m())));
    }
    Ok((1u32..1 << h.m()).all(|mask| {
        let family: Vec<usize> = (0..h.m()).filter(|&e| mask >> e & 1 == 1).collect();
        acyclic_gyo(&h.restrict(&family).0)
    }))
}

/// Interval property by trying every hyperedge order.
pub fn interval_by_permutations(h: &Hypergraph) -> Result<bool> {
    if h.m() > 9 {
        return Err(Error::TooLarge(format!("{} hyperedges, at most 9 supported", h.m())));
    }
    fn rec(h: &Hypergraph, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() == h.m() {
            return crate::orderings::IntervalOrder::from_order(h, order.clone()).is_some();
        }
        for e in 0..h.m() {
            if !used[e] {
                used[e] = true;
                order.push(e);
                let found = rec(h, order, used);
                order.pop();
                used[e] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    Ok(rec(h, &mut Vec::new(), &mut vec![false; h.m()]))
}

/// The incidence graph: vertices `0..n`, hyperedges `n..n+m`.
pub fn incidence_graph(h: &Hypergraph) -> UndirectedGraph {
    let n = h.n();
    UndirectedGraph::new(
        n + h.m(),
        h.edges().iter().enumerate().flat_map(|(e, vs)| vs.iter().map(move |&v| (v, n + e))),
    )
}

/// Whether every connected induced subgraph of `g` preserves the distances
/// of `g`. Exponential; at most 14 nodes.
pub fn distance_hereditary_naive(g: &UndirectedGraph) -> Result<bool> {
    let n = g.node_count();
    if n > 14 {
        return Err(Error::TooLarge(format!("{n} nodes, at most 14 supported")));
    }
    let adj: Vec<u32> = {
        let mut a = vec![0u32; n];
        for &(x, y) in g.edges() {
            a[x] |= 1 << y;
            a[y] |= 1 << x;
        }
        a
    };
    let distances = |mask: u32| -> Vec<Vec<u32>> {
        (0..n)
            .map(|s| {
                let mut d = vec![u32::MAX; n];
                if mask >> s & 1 == 0 {
                    return d;
                }
                d[s] = 0;
                let mut frontier = 1u32 << s;
                let mut seen = frontier;
                let mut level = 0;
                while frontier != 0 {
                    level += 1;
                    let mut next = 0;
                    for x in (0..n).filter(|&x| frontier >> x & 1 == 1) {
                        next |= adj[x] & mask & !seen;
                    }
                    for x in (0..n).filter(|&x| next >> x & 1 == 1) {
                        d[x] = level;
                    }
                    seen |= next;
                    frontier = next;
                }
                d
            })
            .collect()
    };
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let base = distances(full);
    Ok((1..=full).all(|mask| {
        let d = distances(mask);
        let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let connected = members.iter().all(|&x| d[members[0]][x] != u32::MAX);
        !connected || members.iter().all(|&x| members.iter().all(|&y| d[x][y] == base[x][y]))
    }))
}

/// Bachman diagram from the definition: all non-empty intersections of
/// sub-families, Hasse edges of strict containment, labels with the
/// vertices of children removed.
pub fn bachman_naive(h: &Hypergraph) -> BachmanDiagram {
    let mut sets: BTreeSet<Vec<usize>> = h.edges().iter().cloned().collect();
    loop {
        let current: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let meet: Vec<usize> = a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect();
                if !meet.is_empty() {
                    grew |= sets.insert(meet);
                }
            }
        }
        if !grew {
            break;
        }
    }
    let nodes: Vec<Vec<usize>> = sets.into_iter().collect();
    let k = nodes.len();
    let strict = |a: usize, b: usize| nodes[a].len() > nodes[b].len() && is_subset(&nodes[b], &nodes[a]);
    let mut edges = Vec::new();
    for x in 0..k {
        for y in 0..k {
            if strict(x, y) && !(0..k).any(|z| strict(x, z) && strict(z, y)) {
                edges.push((x, y));
            }
        }
    }
    let labels: Vec<Vec<usize>> = (0..k)
        .map(|x| {
            nodes[x]
                .iter()
                .copied()
                .filter(|v| !edges.iter().any(|&(a, b)| a == x && nodes[b].binary_search(v).is_ok()))
                .collect()
        })
        .collect();
    let node_of = |s: &[usize]| nodes.iter().position(|x| x == s).expect("every hyperedge is a node");
    let phi = h.edges().iter().map(|e| node_of(e)).collect();
    let mut psi = vec![usize::MAX; h.n()];
    for (x, l) in labels.iter().enumerate() {
        for &v in l {
            psi[v] = x;
        }
    }
    BachmanDiagram { labels, edges, phi, psi }
}
