//! Pruning sequences of incidence graphs (distance-hereditary recognition).

use crate::hypergraph::Hypergraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

/// A node of the incidence graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Vertex(usize),
    Edge(usize),
}

/// How a node attaches to the graph built so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// The node has exactly one neighbour, the witness.
    Pendant,
    /// The node has the same neighbours as the witness and is not adjacent
    /// to it.
    FalseTwin,
    /// The node has the same neighbours as the witness and is adjacent to
    /// it. Never produced for incidence graphs, which are bipartite.
    TrueTwin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PruningStep {
    pub node: Node,
    pub kind: StepKind,
    pub witness: Node,
}

/// Construction order of one connected incidence graph: the base edge
/// `(base_vertex, base_edge)` followed by steps in the order nodes are added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruningSequence {
    pub base_vertex: usize,
    pub base_edge: usize,
    pub steps: Vec<PruningStep>,
}

/// Computes a pruning sequence of the incidence graph of `h`, which must be
/// connected. `None` iff the incidence graph is not distance-hereditary.
pub fn pruning_sequence(h: &Hypergraph) -> Option<PruningSequence> {
    Pruner::new(h).run()
}

/// Pruning sequences per connected component, each over the ids of `h`.
/// `None` iff some component is not distance-hereditary.
pub fn pruning_sequences(h: &Hypergraph) -> Option<Vec<PruningSequence>> {
    let comps = h.components();
    if comps.count == 1 {
        return Some(vec![pruning_sequence(h)?]);
    }
    comps
        .edge_groups()
        .into_iter()
        .map(|group| {
            let (sub, back) = h.restrict(&group);
            let map = |x: Node| match x {
                Node::Vertex(v) => Node::Vertex(back[v]),
                Node::Edge(e) => Node::Edge(group[e]),
            };
            pruning_sequence(&sub).map(|s| PruningSequence {
                base_vertex: back[s.base_vertex],
                base_edge: group[s.base_edge],
                steps: s
                    .steps
                    .into_iter()
                    .map(|st| PruningStep { node: map(st.node), kind: st.kind, witness: map(st.witness) })
                    .collect(),
            })
        })
        .collect()
}

const NIL: usize = usize::MAX;

/// Bucket of nodes sharing a neighbourhood hash: head of an intrusive list
/// and its length.
#[derive(Clone, Copy)]
struct Bucket {
    head: usize,
    len: usize,
}

struct Pruner<'a> {
    h: &'a Hypergraph,
    /// Adjacency of node `x` in `adj[start[x]..start[x] + len[x]]`,
    /// compacted lazily; node ids: vertices `0..n`, then hyperedges
    /// `n..n+m`.
    adj: Vec<usize>,
    start: Vec<usize>,
    len: Vec<usize>,
    alive: Vec<bool>,
    degree: Vec<usize>,
    /// Sum of the random weights of the live neighbours.
    hash: Vec<u64>,
    weight: Vec<u64>,
    buckets: FxHashMap<u64, Bucket>,
    next: Vec<usize>,
    prev: Vec<usize>,
    pendants: Vec<usize>,
    /// Hashes whose bucket reached two members, possibly stale.
    twin_buckets: Vec<u64>,
    stamp: Vec<usize>,
    clock: usize,
}

impl<'a> Pruner<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let n = h.n();
        let total = n + h.m();
        let mut rng = ChaCha8Rng::seed_from_u64(0x005e_ed0f_7a1e);
        let weight: Vec<u64> = (0..total).map(|_| rng.random()).collect();
        let mut adj = Vec::with_capacity(2 * h.size());
        let mut start = Vec::with_capacity(total);
        for v in 0..n {
            start.push(adj.len());
            adj.extend(h.incidence(v).iter().map(|&e| n + e));
        }
        for e in 0..h.m() {
            start.push(adj.len());
            adj.extend_from_slice(h.edge(e));
        }
        let degree: Vec<usize> = (0..total).map(|x| start.get(x + 1).unwrap_or(&adj.len()) - start[x]).collect();
        let hash: Vec<u64> = (0..total)
            .map(|x| adj[start[x]..start[x] + degree[x]].iter().fold(0u64, |s, &y| s.wrapping_add(weight[y])))
            .collect();
        let mut p = Pruner {
            h,
            len: degree.clone(),
            degree,
            adj,
            start,
            alive: vec![true; total],
            hash,
            weight,
            buckets: FxHashMap::with_capacity_and_hasher(total, Default::default()),
            next: vec![NIL; total],
            prev: vec![NIL; total],
            pendants: Vec::new(),
            twin_buckets: Vec::new(),
            stamp: vec![0; total],
            clock: 0,
        };
        for x in 0..total {
            p.enter_bucket(x);
            if p.degree[x] == 1 {
                p.pendants.push(x);
            }
        }
        p
    }

    fn node(&self, x: usize) -> Node {
        if x < self.h.n() {
            Node::Vertex(x)
        } else {
            Node::Edge(x - self.h.n())
        }
    }

    fn enter_bucket(&mut self, x: usize) {
        let key = self.hash[x];
        let b = self.buckets.entry(key).or_insert(Bucket { head: NIL, len: 0 });
        self.prev[x] = NIL;
        self.next[x] = b.head;
        if b.head != NIL {
            self.prev[b.head] = x;
        }
        b.head = x;
        b.len += 1;
        if b.len == 2 {
            self.twin_buckets.push(key);
        }
    }

    fn leave_bucket(&mut self, x: usize) {
        let key = self.hash[x];
        let (p, nx) = (self.prev[x], self.next[x]);
        if nx != NIL {
            self.prev[nx] = p;
        }
        if p != NIL {
            self.next[p] = nx;
        }
        let b = self.buckets.get_mut(&key).expect("live node is bucketed");
        if b.head == x {
            b.head = nx;
        }
        b.len -= 1;
        if b.len == 0 {
            self.buckets.remove(&key);
        }
    }

    /// Drops dead entries from the adjacency of `x` and returns the rest.
    fn compact(&mut self, x: usize) -> &[usize] {
        let s = self.start[x];
        let list = &mut self.adj[s..s + self.len[x]];
        let mut kept = 0;
        for i in 0..list.len() {
            if self.alive[list[i]] {
                list[kept] = list[i];
                kept += 1;
            }
        }
        self.len[x] = kept;
        &self.adj[s..s + kept]
    }

    fn same_neighbourhood(&mut self, x: usize, y: usize) -> bool {
        if self.degree[x] != self.degree[y] || (x < self.h.n()) != (y < self.h.n()) {
            return false;
        }
        self.clock += 1;
        let clock = self.clock;
        for i in 0..self.compact(x).len() {
            let z = self.adj[self.start[x] + i];
            self.stamp[z] = clock;
        }
        self.compact(y);
        let ys = &self.adj[self.start[y]..self.start[y] + self.len[y]];
        ys.iter().all(|&z| self.stamp[z] == clock)
    }

    /// First live node of `x`'s bucket, other than `x`, with the same
    /// neighbourhood.
    fn twin_of(&mut self, x: usize) -> Option<usize> {
        let mut y = self.buckets.get(&self.hash[x])?.head;
        while y != NIL {
            if y != x && self.same_neighbourhood(x, y) {
                return Some(y);
            }
            y = self.next[y];
        }
        None
    }

    fn remove(&mut self, x: usize) {
        self.leave_bucket(x);
        self.alive[x] = false;
        for i in self.start[x]..self.start[x] + self.len[x] {
            let y = self.adj[i];
            if !self.alive[y] {
                continue;
            }
            self.leave_bucket(y);
            self.hash[y] = self.hash[y].wrapping_sub(self.weight[x]);
            self.degree[y] -= 1;
            self.enter_bucket(y);
            if self.degree[y] == 1 {
                self.pendants.push(y);
            }
        }
    }

    /// Next removable node with its step classification.
    fn next(&mut self) -> Option<(usize, StepKind, usize)> {
        while let Some(&key) = self.twin_buckets.last() {
            let head = match self.buckets.get(&key) {
                Some(b) if b.len >= 2 => Some(b.head),
                _ => None,
            };
            // Remove the most recently bucketed member, witnessed by the
            // first verified twin.
            match head.and_then(|x| self.twin_of(x).map(|w| (x, w))) {
                Some((x, w)) => return Some((x, StepKind::FalseTwin, w)),
                None => {
                    self.twin_buckets.pop();
                }
            }
        }
        while let Some(x) = self.pendants.pop() {
            if !self.alive[x] || self.degree[x] != 1 {
                continue;
            }
            if let Some(w) = self.twin_of(x) {
                return Some((x, StepKind::FalseTwin, w));
            }
            let w = self.compact(x)[0];
            return Some((x, StepKind::Pendant, w));
        }
        None
    }

    fn run(mut self) -> Option<PruningSequence> {
        let total = self.alive.len();
        let mut removed = Vec::with_capacity(total);
        while removed.len() + 2 < total {
            let (x, kind, w) = self.next()?;
            removed.push(PruningStep { node: self.node(x), kind, witness: self.node(w) });
            self.remove(x);
        }
        // The last two nodes must be a vertex and a hyperedge holding it.
        let rest: Vec<usize> = (0..total).filter(|&x| self.alive[x]).collect();
        let (v, e) = (rest[0], rest[1]);
        if v >= self.h.n() || e < self.h.n() || !self.compact(v).contains(&e) {
            return None;
        }
        removed.reverse();
        Some(PruningSequence { base_vertex: v, base_edge: e - self.h.n(), steps: removed })
    }
}

impl PruningSequence {
    /// Replays the sequence, checking every step against the graph induced
    /// by the nodes added before it. Returns whether the result is exactly
    /// the incidence graph of `h`.
    pub fn replays_to(&self, h: &Hypergraph) -> bool {
        let id = |x: Node| match x {
            Node::Vertex(v) => v,
            Node::Edge(e) => h.n() + e,
        };
        let neighbours = |x: Node| -> Vec<usize> {
            match x {
                Node::Vertex(v) => h.incidence(v).iter().map(|&e| h.n() + e).collect(),
                Node::Edge(e) => h.edge(e).to_vec(),
            }
        };
        let total = h.n() + h.m();
        let mut present = vec![false; total];
        present[self.base_vertex] = true;
        present[h.n() + self.base_edge] = true;
        if !h.edge(self.base_edge).contains(&self.base_vertex) {
            return false;
        }
        let live = |x: Node, present: &[bool]| -> Vec<usize> {
            let mut l: Vec<usize> = neighbours(x).into_iter().filter(|&y| present[y]).collect();
            l.sort_unstable();
            l
        };
        for step in &self.steps {
            let (x, w) = (id(step.node), id(step.witness));
            if present[x] || !present[w] {
                return false;
            }
            let nx = live(step.node, &present);
            let ok = match step.kind {
                StepKind::Pendant => nx == [w],
                StepKind::FalseTwin => !nx.contains(&w) && nx == live(step.witness, &present),
                StepKind::TrueTwin => false,
            };
            if !ok {
                return false;
            }
            present[x] = true;
        }
        present.iter().all(|&p| p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_only() {
        let h = Hypergraph::new(1, vec![vec![0]]).unwrap();
        let s = pruning_sequence(&h).unwrap();
        assert_eq!((s.base_vertex, s.base_edge, s.steps.len()), (0, 0, 0));
        assert!(s.replays_to(&h));
    }

    #[test]
    fn six_cycle_rejected() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap();
        assert!(pruning_sequence(&h).is_none());
    }

    #[test]
    fn sample_has_sequence() {
        let h =
            Hypergraph::from_named_edges([vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c"], vec!["c", "e", "f"]])
                .unwrap();
        let s = pruning_sequence(&h).unwrap();
        assert_eq!(s.steps.len(), h.n() + h.m() - 2);
        assert!(s.replays_to(&h));
        assert!(s.steps.iter().all(|st| st.kind != StepKind::TrueTwin));
    }

    #[test]
    fn equal_hyperedges_are_twins() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1], vec![0, 1]]).unwrap();
        let s = pruning_sequence(&h).unwrap();
        assert!(s.replays_to(&h));
        let edge_twins =
            s.steps.iter().filter(|st| st.kind == StepKind::FalseTwin && matches!(st.node, Node::Edge(_))).count();
        assert_eq!(edge_twins, 2);
    }

    #[test]
    fn components_handled_separately() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3], vec![3]]).unwrap();
        let seqs = pruning_sequences(&h).unwrap();
        assert_eq!(seqs.len(), 2);
        assert_eq!(seqs.iter().map(|s| s.steps.len() + 2).sum::<usize>(), h.n() + h.m());
    }
}
