//! Hypergraph data model and the derived graphs (dual, 2-section, line graph).

use crate::error::{Error, Result};
use rustc_hash::FxHashMap as HashMap;

/// A hypergraph given by its incidence structure.
///
/// Vertices are dense ids `0..n` carrying display names; hyperedges are dense
/// ids `0..m`, each a sorted list of distinct vertex ids. Two hyperedge ids may
/// carry equal vertex sets. Every vertex lies in at least one hyperedge and
/// every hyperedge is non-empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    names: Vec<String>,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    size: usize,
}

/// Connected components of the incidence graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component id of every hyperedge.
    pub of_edge: Vec<usize>,
    /// Component id of every vertex.
    pub of_vertex: Vec<usize>,
}

impl Components {
    /// Hyperedge ids grouped by component, each group ascending.
    pub fn edge_groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.count];
        for (e, &c) in self.of_edge.iter().enumerate() {
            groups[c].push(e);
        }
        groups
    }
}

impl Hypergraph {
    /// Builds a hypergraph over vertices `0..n` named `v0, v1, ...`.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let names = (0..n).map(|v| format!("v{v}")).collect();
        Self::with_names(names, edges)
    }

    /// Builds a hypergraph whose vertex `i` is called `names[i]`.
    pub fn with_names(names: Vec<String>, mut edges: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if edges.is_empty() {
            return Err(Error::Empty);
        }
        let mut incidence = vec![Vec::new(); n];
        let mut size = 0;
        for (j, edge) in edges.iter_mut().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyHyperedge(j));
            }
            edge.sort_unstable();
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateVertex { edge: j, vertex: w[0] });
                }
            }
            if let Some(&v) = edge.last().filter(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { edge: j, vertex: v, n });
            }
            for &v in edge.iter() {
                incidence[v].push(j);
            }
            size += edge.len();
        }
        if let Some(v) = incidence.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Hypergraph { names, edges, incidence, size })
    }

    /// Builds a hypergraph from hyperedges given as vertex names. Names are
    /// interned in order of first appearance.
    pub fn from_named_edges<E, S>(edges: impl IntoIterator<Item = E>) -> Result<Self>
    where
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ids: HashMap<String, usize> = HashMap::default();
        let mut names = Vec::new();
        let mut out = Vec::new();
        for edge in edges {
            let mut ids_of_edge = Vec::new();
            for name in edge {
                let name = name.as_ref();
                let id = *ids.entry(name.to_owned()).or_insert_with(|| {
                    names.push(name.to_owned());
                    names.len() - 1
                });
                ids_of_edge.push(id);
            }
            out.push(ids_of_edge);
        }
        Self::with_names(names, out)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    /// Number of hyperedges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Total size `N`, the sum of all hyperedge sizes.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edge(&self, j: usize) -> &[usize] {
        &self.edges[j]
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Sorted ids of the hyperedges containing `v`.
    pub fn incidence(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn incidences(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// Vertex names of hyperedge `j`, in id order.
    pub fn edge_names(&self, j: usize) -> Vec<&str> {
        self.edges[j].iter().map(|&v| self.name(v)).collect()
    }

    /// Exchanges the roles of vertices and hyperedges. Vertex `j` of the dual
    /// stands for hyperedge `j` and is named `E{j+1}`; hyperedge `v` of the
    /// dual is the incidence list of vertex `v`.
    pub fn dual(&self) -> Hypergraph {
        Hypergraph {
            names: (1..=self.m()).map(|j| format!("E{j}")).collect(),
            edges: self.incidence.clone(),
            incidence: self.edges.clone(),
            size: self.size,
        }
    }

    /// Graph on the vertices; `uv` is an edge iff some hyperedge holds both.
    pub fn two_section(&self) -> UndirectedGraph {
        co_membership(self.n(), &self.incidence, &self.edges)
    }

    /// Intersection graph of the hyperedges.
    pub fn line_graph(&self) -> UndirectedGraph {
        co_membership(self.m(), &self.edges, &self.incidence)
    }

    /// Connected components of the incidence graph, numbered by smallest
    /// hyperedge id.
    pub fn components(&self) -> Components {
        const NONE: usize = usize::MAX;
        let mut of_edge = vec![NONE; self.m()];
        let mut of_vertex = vec![NONE; self.n()];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.m() {
            if of_edge[start] != NONE {
                continue;
            }
            of_edge[start] = count;
            stack.push(start);
            while let Some(e) = stack.pop() {
                for &v in &self.edges[e] {
                    if of_vertex[v] != NONE {
                        continue;
                    }
                    of_vertex[v] = count;
                    for &f in &self.incidence[v] {
                        if of_edge[f] == NONE {
                            of_edge[f] = count;
                            stack.push(f);
                        }
                    }
                }
            }
            count += 1;
        }
        Components { count, of_edge, of_vertex }
    }

    /// Sub-hypergraph formed by the listed hyperedges (in the given order)
    /// over the vertices they cover. Returns it with the map from new vertex
    /// ids to old ones.
    pub fn restrict(&self, edge_ids: &[usize]) -> (Hypergraph, Vec<usize>) {
        let mut new_id = HashMap::default();
        let mut old_of = Vec::new();
        let mut edges = Vec::with_capacity(edge_ids.len());
        for &e in edge_ids {
            let mapped = self.edges[e]
                .iter()
                .map(|&v| {
                    *new_id.entry(v).or_insert_with(|| {
                        old_of.push(v);
                        old_of.len() - 1
                    })
                })
                .collect();
            edges.push(mapped);
        }
        let names = old_of.iter().map(|&v| self.names[v].clone()).collect();
        let h = Hypergraph::with_names(names, edges).expect("restriction of a valid hypergraph is valid");
        (h, old_of)
    }
}

/// Pairs of `items` (indexed by `lists`) sharing a group in `groups`.
fn co_membership(count: usize, groups_of: &[Vec<usize>], members_of: &[Vec<usize>]) -> UndirectedGraph {
    let mut mark = vec![usize::MAX; count];
    let mut edges = Vec::new();
    for (i, groups) in groups_of.iter().enumerate() {
        for &g in groups {
            for &j in &members_of[g] {
                if j > i && mark[j] != i {
                    mark[j] = i;
                    edges.push((i, j));
                }
            }
        }
    }
    UndirectedGraph { n: count, edges }
}

/// Simple undirected graph with edges stored as sorted pairs `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Normalizes the pairs (orientation, order, duplicates).
    ///
    /// # Panics
    /// On a self-loop or an endpoint `>= n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b, "self-loop at {a}");
                assert!(a < n && b < n, "edge ({a}, {b}) out of range");
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        UndirectedGraph { n, edges }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Simple directed graph with edges stored as sorted pairs `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    /// Sorts and deduplicates the pairs.
    ///
    /// # Panics
    /// On a self-loop or an endpoint `>= n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().collect();
        for &(a, b) in &edges {
            assert!(a != b, "self-loop at {a}");
            assert!(a < n && b < n, "edge ({a}, {b}) out of range");
        }
        edges.sort_unstable();
        edges.dedup();
        DirectedGraph { n, edges }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    /// Out-neighbour lists.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }
}
