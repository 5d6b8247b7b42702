//! Union join graphs: the generic separator method and the γ and interval
//! shortcuts.

use crate::error::{Error, Result};
use crate::hypergraph::{DirectedGraph, Hypergraph, UndirectedGraph};
use crate::jointree::{build_join_tree, canonical_join_tree, JoinTree};
use crate::orderings::{interval_order, pruning_sequences, IntervalOrder};

/// Emission counts of the generic method, before deduplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmissionStats {
    /// Pairs emitted, counting repeats.
    pub raw_emissions: usize,
    /// Distinct pairs.
    pub distinct: usize,
    /// Largest number of times any single pair was emitted.
    pub max_multiplicity: usize,
}

/// Pre- and post-order numbers of a rooted forest for O(1) subtree tests.
struct SubtreeIndex {
    pre: Vec<usize>,
    post: Vec<usize>,
}

impl SubtreeIndex {
    fn new(t: &JoinTree) -> Self {
        let n = t.len();
        let (mut pre, mut post) = (vec![0; n], vec![0; n]);
        let (mut pre_clock, mut post_clock) = (0, 0);
        let mut stack: Vec<(usize, usize)> = t.roots().iter().rev().map(|&r| (r, 0)).collect();
        while let Some((x, i)) = stack.pop() {
            if i == 0 {
                pre[x] = pre_clock;
                pre_clock += 1;
            }
            if let Some(&c) = t.children(x).get(i) {
                stack.push((x, i + 1));
                stack.push((c, 0));
            } else {
                post[x] = post_clock;
                post_clock += 1;
            }
        }
        SubtreeIndex { pre, post }
    }

    /// Whether `x` lies in the subtree rooted at `y` (`x == y` included).
    fn in_subtree(&self, x: usize, y: usize) -> bool {
        self.pre[x] >= self.pre[y] && self.post[x] <= self.post[y]
    }
}

/// Union join graph of an α-acyclic hypergraph; `subset` computes the subset
/// graph of the separator hypergraph.
pub fn union_join_via_subset<F>(h: &Hypergraph, subset: F) -> Result<UndirectedGraph>
where
    F: Fn(&Hypergraph) -> Result<DirectedGraph>,
{
    union_join_via_subset_with_stats(h, subset).map(|(g, _)| g)
}

/// As [`union_join_via_subset`], also reporting how often each pair was
/// emitted.
///
/// Every separator `S` of the canonical join tree collects the separators
/// `S' ⊇ S` (itself included) and the endpoint of each such tree edge on the
/// far side from `S`; every collected hyperedge below `S` is joined to every
/// one elsewhere.
pub fn union_join_via_subset_with_stats<F>(h: &Hypergraph, subset: F) -> Result<(UndirectedGraph, EmissionStats)>
where
    F: Fn(&Hypergraph) -> Result<DirectedGraph>,
{
    let (ct, seps) = canonical_join_tree(h)?;
    let Some((sh, _)) = seps.to_hypergraph(h) else {
        return Ok((UndirectedGraph::new(h.m(), []), EmissionStats::default()));
    };
    let supersets = subset(&sh)?.successors();
    let idx = SubtreeIndex::new(&ct.tree);
    let seps = &seps.separators;

    let mut raw = Vec::new();
    let (mut below, mut elsewhere) = (Vec::new(), Vec::new());
    for (k, s) in seps.iter().enumerate() {
        below.clear();
        elsewhere.clear();
        below.push(s.child);
        elsewhere.push(s.parent);
        for &k2 in &supersets[k] {
            let s2 = &seps[k2];
            if idx.in_subtree(s2.child, s.child) {
                below.push(s2.child);
            } else if idx.in_subtree(s.child, s2.child) {
                elsewhere.push(s2.parent);
            } else {
                elsewhere.push(s2.child);
            }
        }
        for &a in &below {
            raw.extend(elsewhere.iter().map(|&b| (a.min(b), a.max(b))));
        }
    }

    let raw_emissions = raw.len();
    raw.sort_unstable();
    let mut max_multiplicity = 0;
    for run in raw.chunk_by(|a, b| a == b) {
        max_multiplicity = max_multiplicity.max(run.len());
    }
    raw.dedup();
    let stats = EmissionStats { raw_emissions, distinct: raw.len(), max_multiplicity };
    Ok((UndirectedGraph::new(h.m(), raw), stats))
}

/// Union join graph of a γ-acyclic hypergraph, which is its line graph.
/// Visits the hyperedges of the dual in pre-order of one of its join trees;
/// each one joins its newly seen members to those seen before, so every
/// pair is produced exactly once.
pub fn union_join_gamma(h: &Hypergraph) -> Result<UndirectedGraph> {
    if pruning_sequences(h).is_none() {
        return Err(Error::NotGamma);
    }
    let dual = h.dual();
    let t = build_join_tree(&dual).ok_or(Error::NotGamma)?;
    let mut flagged = vec![false; h.m()];
    let mut seen = Vec::new();
    let mut edges = Vec::new();
    for v in t.preorder() {
        seen.clear();
        seen.extend(dual.edge(v).iter().copied().filter(|&e| flagged[e]));
        for &e in dual.edge(v) {
            if !flagged[e] {
                edges.extend(seen.iter().map(|&f| (e, f)));
                flagged[e] = true;
                seen.push(e);
            }
        }
    }
    Ok(UndirectedGraph::new(h.m(), edges))
}

/// Union join graph of an interval hypergraph.
pub fn union_join_interval(h: &Hypergraph) -> Result<UndirectedGraph> {
    let ord = interval_order(h).ok_or(Error::NotInterval)?;
    Ok(union_join_from_interval(h, &ord))
}

/// Single pass over an interval order. Writing `S_k` for the intersection of
/// the hyperedges at positions `k-1` and `k`, positions `j < i` are adjacent
/// iff some non-empty `S_k` with `j < k <= i` lies inside both, i.e. the
/// vertices of `S_k` all start at or before `j` and end at or after `i`.
///
/// Separators still reaching `i` form a stack whose reach shrinks towards
/// the top; each entry links to the nearest entry below that starts further
/// left, so the union of their ranges is enumerated without repeats.
pub fn union_join_from_interval(h: &Hypergraph, ord: &IntervalOrder) -> UndirectedGraph {
    struct Entry {
        k: usize,
        /// Largest left-most position over `S_k`.
        start: usize,
        /// Smallest right-most position over `S_k`.
        reach: usize,
        /// Stack index of the nearest entry below with a smaller `start`.
        next: Option<usize>,
    }
    let sigma = &ord.edge_order;
    let mut stack: Vec<Entry> = Vec::new();
    let mut edges = Vec::new();
    for i in 1..sigma.len() {
        while stack.last().is_some_and(|e| e.reach < i) {
            stack.pop();
        }
        // Occurrences are contiguous, so `v` is shared with position `i-1`
        // iff it starts before `i`.
        let (mut start, mut reach) = (None, usize::MAX);
        for &v in h.edge(sigma[i]).iter().filter(|&&v| ord.leftmost[v] < i) {
            start = start.max(Some(ord.leftmost[v]));
            reach = reach.min(ord.rightmost[v]);
        }
        if let Some(start) = start {
            let mut next = stack.len().checked_sub(1);
            while let Some(c) = next.filter(|&c| stack[c].start >= start) {
                next = stack[c].next;
            }
            stack.push(Entry { k: i, start, reach, next });
        }
        let mut top = stack.len().checked_sub(1);
        let mut low = usize::MAX;
        while let Some(c) = top {
            let e = &stack[c];
            let hi = (e.k - 1).min(low.saturating_sub(1));
            edges.extend((e.start..=hi).map(|j| (sigma[j], sigma[i])));
            low = e.start;
            top = e.next;
        }
    }
    UndirectedGraph::new(h.m(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{subset_graph_naive, union_join_oracle};
    use crate::subset::subset_graph_baseline;

    fn naive(h: &Hypergraph) -> Result<DirectedGraph> {
        Ok(subset_graph_naive(h))
    }

    fn sample() -> Hypergraph {
        Hypergraph::from_named_edges([vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c"], vec!["c", "e", "f"]])
            .unwrap()
    }

    fn star(m: usize) -> Hypergraph {
        let edges: Vec<Vec<String>> = (0..m).map(|i| vec!["u".into(), format!("v{i}")]).collect();
        Hypergraph::from_named_edges(edges).unwrap()
    }

    #[test]
    fn sample_is_its_line_graph() {
        let h = sample();
        let want = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3), (2, 3)]);
        assert_eq!(union_join_via_subset(&h, naive).unwrap(), want);
        assert_eq!(union_join_gamma(&h).unwrap(), want);
        assert_eq!(union_join_oracle(&h).unwrap(), want);
    }

    #[test]
    fn star_is_complete() {
        for m in [3, 10] {
            let h = star(m);
            let want = m * (m - 1) / 2;
            let (g, stats) = union_join_via_subset_with_stats(&h, naive).unwrap();
            assert_eq!(g.edge_count(), want);
            assert!(stats.max_multiplicity <= 2);
            assert_eq!(union_join_gamma(&h).unwrap().edge_count(), want);
            assert_eq!(union_join_interval(&h).unwrap().edge_count(), want);
        }
    }

    #[test]
    fn chain_is_a_path() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let want = UndirectedGraph::new(3, [(0, 1), (1, 2)]);
        assert_eq!(union_join_via_subset(&h, naive).unwrap(), want);
        assert_eq!(union_join_interval(&h).unwrap(), want);
    }

    #[test]
    fn interval_middle_singleton() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1], vec![1, 2]]).unwrap();
        assert_eq!(union_join_interval(&h).unwrap().edge_count(), 3);
        assert_eq!(union_join_via_subset(&h, naive).unwrap().edge_count(), 3);
    }

    #[test]
    fn interval_needs_separator_below_the_top() {
        // Only the separator {x} between positions 1 and 2 justifies (E0, E3).
        let h =
            Hypergraph::from_named_edges([vec!["x", "a", "b"], vec!["x", "a"], vec!["x", "c"], vec!["x", "c", "d"]])
                .unwrap();
        let want = union_join_oracle(&h).unwrap();
        assert!(want.contains(0, 3));
        assert_eq!(union_join_interval(&h).unwrap(), want);
        assert_eq!(union_join_via_subset(&h, |s| Ok(subset_graph_baseline(s))).unwrap(), want);
    }

    #[test]
    fn disjoint_and_single() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(union_join_gamma(&h).unwrap().edge_count(), 0);
        assert_eq!(union_join_interval(&h).unwrap().edge_count(), 0);
        assert_eq!(union_join_via_subset(&h, naive).unwrap().edge_count(), 0);
        let one = Hypergraph::new(1, vec![vec![0]]).unwrap();
        assert_eq!(union_join_interval(&one).unwrap().edge_count(), 0);
    }

    #[test]
    fn class_violations() {
        let triangle = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(union_join_via_subset(&triangle, naive), Err(Error::NotAcyclic));
        assert_eq!(union_join_gamma(&triangle), Err(Error::NotGamma));
        assert_eq!(union_join_interval(&triangle), Err(Error::NotInterval));
    }
}
