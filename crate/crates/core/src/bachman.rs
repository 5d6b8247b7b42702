//! Simplified Bachman diagrams of γ-acyclic hypergraphs.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::orderings::{pruning_sequences, Node, PruningSequence, StepKind};

/// A directed graph on vertex sets. An edge `X -> Y` means that the vertices
/// reachable from `X` strictly contain those reachable from `Y`. Each vertex
/// is stored only in the label of the smallest node holding it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BachmanDiagram {
    /// Label of every node, sorted.
    pub labels: Vec<Vec<usize>>,
    /// Edges `(X, Y)`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Node of every hyperedge.
    pub phi: Vec<usize>,
    /// Node whose label holds every vertex.
    pub psi: Vec<usize>,
}

/// Node-set-independent form of a diagram: nodes are identified by the
/// vertex sets reachable from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDiagram {
    /// Reachable vertex set of every node, sorted.
    pub sets: Vec<Vec<usize>>,
    /// Label per entry of `sets`.
    pub labels: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
    pub phi: Vec<usize>,
}

impl BachmanDiagram {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Hyperedges mapped to each node.
    pub fn phi_inverse(&self) -> Vec<Vec<usize>> {
        let mut inv = vec![Vec::new(); self.node_count()];
        for (e, &x) in self.phi.iter().enumerate() {
            inv[x].push(e);
        }
        inv
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }

    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(a, b) in &self.edges {
            adj[b].push(a);
        }
        adj
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.node_count()];
        for &(_, b) in &self.edges {
            d[b] += 1;
        }
        d
    }

    /// Vertices in the labels of all nodes reachable from `x`, sorted.
    pub fn reach(&self, x: usize) -> Vec<usize> {
        let succ = self.successors();
        self.reach_with(x, &succ)
    }

    fn reach_with(&self, x: usize, succ: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![x];
        seen[x] = true;
        let mut out = Vec::new();
        while let Some(y) = stack.pop() {
            out.extend_from_slice(&self.labels[y]);
            for &z in &succ[y] {
                if !std::mem::replace(&mut seen[z], true) {
                    stack.push(z);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the underlying undirected graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.undirected_components().is_some()
    }

    /// Number of connected components of the underlying undirected graph,
    /// or `None` if it has a cycle.
    pub fn undirected_components(&self) -> Option<usize> {
        let mut dsu: Vec<usize> = (0..self.node_count()).collect();
        fn find(d: &mut [usize], mut x: usize) -> usize {
            while d[x] != x {
                d[x] = d[d[x]];
                x = d[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra == rb {
                return None;
            }
            dsu[ra] = rb;
        }
        Some(self.node_count() - self.edges.len())
    }

    pub fn canonical(&self) -> CanonicalDiagram {
        let succ = self.successors();
        let reach: Vec<Vec<usize>> = (0..self.node_count()).map(|x| self.reach_with(x, &succ)).collect();
        let mut idx: Vec<usize> = (0..self.node_count()).collect();
        idx.sort_by(|&a, &b| reach[a].cmp(&reach[b]));
        let mut rank = vec![0; self.node_count()];
        for (r, &x) in idx.iter().enumerate() {
            rank[x] = r;
        }
        let mut edges: Vec<_> = self.edges.iter().map(|&(a, b)| (rank[a], rank[b])).collect();
        edges.sort_unstable();
        CanonicalDiagram {
            sets: idx.iter().map(|&x| reach[x].clone()).collect(),
            labels: idx.iter().map(|&x| self.labels[x].clone()).collect(),
            edges,
            phi: self.phi.iter().map(|&x| rank[x]).collect(),
        }
    }
}

/// Builds the simplified Bachman diagram of a γ-acyclic hypergraph by
/// replaying a pruning sequence of its incidence graph. Linear apart from
/// computing the sequence.
pub fn build_bachman(h: &Hypergraph) -> Result<BachmanDiagram> {
    let seqs = pruning_sequences(h).ok_or(Error::NotGamma)?;
    let mut b = Builder::new(h);
    for seq in &seqs {
        b.replay(seq);
    }
    Ok(b.finish())
}

struct Builder {
    labels: Vec<Vec<usize>>,
    /// Index of every vertex inside its label.
    slot: Vec<usize>,
    phi: Vec<usize>,
    psi: Vec<usize>,
    phi_count: Vec<usize>,
    indeg: Vec<usize>,
    outdeg: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(h: &Hypergraph) -> Self {
        Builder {
            labels: Vec::new(),
            slot: vec![0; h.n()],
            phi: vec![usize::MAX; h.m()],
            psi: vec![usize::MAX; h.n()],
            phi_count: Vec::new(),
            indeg: Vec::new(),
            outdeg: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn new_node(&mut self) -> usize {
        self.labels.push(Vec::new());
        self.phi_count.push(0);
        self.indeg.push(0);
        self.outdeg.push(0);
        self.labels.len() - 1
    }

    fn put_vertex(&mut self, v: usize, x: usize) {
        self.slot[v] = self.labels[x].len();
        self.labels[x].push(v);
        self.psi[v] = x;
    }

    fn take_vertex(&mut self, v: usize) {
        let x = self.psi[v];
        let i = self.slot[v];
        self.labels[x].swap_remove(i);
        if let Some(&moved) = self.labels[x].get(i) {
            self.slot[moved] = i;
        }
    }

    fn set_phi(&mut self, e: usize, x: usize) {
        if self.phi[e] != usize::MAX {
            self.phi_count[self.phi[e]] -= 1;
        }
        self.phi[e] = x;
        self.phi_count[x] += 1;
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
        self.outdeg[a] += 1;
        self.indeg[b] += 1;
    }

    fn replay(&mut self, seq: &PruningSequence) {
        let x = self.new_node();
        self.put_vertex(seq.base_vertex, x);
        self.set_phi(seq.base_edge, x);
        for step in &seq.steps {
            match (step.kind, step.node, step.witness) {
                (StepKind::FalseTwin, Node::Vertex(v), Node::Vertex(u)) => {
                    let x = self.psi[u];
                    self.put_vertex(v, x);
                }
                (StepKind::FalseTwin, Node::Edge(e), Node::Edge(f)) => {
                    let x = self.phi[f];
                    self.set_phi(e, x);
                }
                (StepKind::Pendant, Node::Vertex(v), Node::Edge(e)) => {
                    let x = self.phi[e];
                    if self.phi_count[x] == 1 && self.indeg[x] == 0 {
                        self.put_vertex(v, x);
                    } else {
                        let y = self.new_node();
                        self.put_vertex(v, y);
                        self.set_phi(e, y);
                        self.add_edge(y, x);
                    }
                }
                (StepKind::Pendant, Node::Edge(e), Node::Vertex(v)) => {
                    let x = self.psi[v];
                    if self.labels[x].len() == 1 && self.outdeg[x] == 0 {
                        self.set_phi(e, x);
                    } else {
                        let y = self.new_node();
                        self.take_vertex(v);
                        self.put_vertex(v, y);
                        self.set_phi(e, y);
                        self.add_edge(x, y);
                    }
                }
                other => unreachable!("invalid step in an incidence-graph pruning sequence: {other:?}"),
            }
        }
    }

    fn finish(mut self) -> BachmanDiagram {
        for l in &mut self.labels {
            l.sort_unstable();
        }
        self.edges.sort_unstable();
        BachmanDiagram { labels: self.labels, edges: self.edges, phi: self.phi, psi: self.psi }
    }
}
