//! Join trees: acyclicity testing, verification, canonical re-rooting and
//! separator hypergraphs.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Sentinel stored in a parent array for roots.
pub const NO_PARENT: usize = usize::MAX;

/// A rooted forest on hyperedge ids; a single tree for connected inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinTree {
    parent: Vec<usize>,
    roots: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl JoinTree {
    /// Builds a forest from a parent array (`NO_PARENT` marks roots).
    /// Children and roots are kept in ascending id order.
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        let m = parent.len();
        let mut children = vec![Vec::new(); m];
        let mut roots = Vec::new();
        for (i, &p) in parent.iter().enumerate() {
            if p == NO_PARENT {
                roots.push(i);
            } else if p >= m || p == i {
                return Err(Error::InvalidJoinTree(format!("bad parent {p} for node {i}")));
            } else {
                children[p].push(i);
            }
        }
        let tree = JoinTree { parent, roots, children };
        if tree.preorder().len() != m {
            return Err(Error::InvalidJoinTree("parent array contains a cycle".into()));
        }
        Ok(tree)
    }

    /// Builds a forest from undirected edges, rooting each tree at its
    /// smallest node.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); m];
        for &(a, b) in edges {
            if a >= m || b >= m || a == b {
                return Err(Error::InvalidJoinTree(format!("bad edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![NO_PARENT; m];
        let mut seen = vec![false; m];
        let mut stack = Vec::new();
        let mut visited_edges = 0;
        for r in 0..m {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            stack.push(r);
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = x;
                        visited_edges += 1;
                        stack.push(y);
                    }
                }
            }
        }
        if visited_edges != edges.len() {
            return Err(Error::InvalidJoinTree("edge list contains a cycle".into()));
        }
        Self::from_parents(parent)
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        Some(self.parent[i]).filter(|&p| p != NO_PARENT)
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// Tree edges as `(parent, child)` pairs in child order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter_map(|i| self.parent(i).map(|p| (p, i))).collect()
    }

    /// Pre-order over all trees: roots ascending, children ascending.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        for &r in &self.roots {
            stack.push(r);
            while let Some(x) = stack.pop() {
                order.push(x);
                if order.len() > self.len() {
                    return order;
                }
                stack.extend(self.children[x].iter().rev());
            }
        }
        order
    }
}

/// Tests α-acyclicity by maximum cardinality search over hyperedges and
/// returns a join tree (a forest for disconnected inputs) when one exists.
/// Linear in `N`.
pub fn build_join_tree(h: &Hypergraph) -> Option<JoinTree> {
    let m = h.m();
    let max_len = h.edges().iter().map(Vec::len).max().unwrap_or(0);
    // buckets[k] is a lazy stack of hyperedges with k marked vertices.
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
    buckets[0].extend((0..m).rev());
    let mut count = vec![0usize; m];
    let mut selected = vec![false; m];
    let mut rank = vec![0usize; m];
    // first[v] = rank of the first selected hyperedge containing v.
    let mut first = vec![usize::MAX; h.n()];
    let mut order = Vec::with_capacity(m);
    let mut parent = vec![NO_PARENT; m];
    let mut top = 0usize;

    while order.len() < m {
        let e = loop {
            match buckets[top].pop() {
                Some(e) if !selected[e] && count[e] == top => break e,
                Some(_) => {}
                None => top -= 1,
            }
        };
        selected[e] = true;
        rank[e] = order.len();
        order.push(e);
        let mut best: Option<usize> = None;
        for &v in h.edge(e) {
            if first[v] != usize::MAX {
                best = best.max(Some(first[v]));
            }
        }
        if let Some(r) = best {
            parent[e] = order[r];
        }
        for &v in h.edge(e) {
            if first[v] != usize::MAX {
                continue;
            }
            first[v] = rank[e];
            for &f in h.incidence(v) {
                if !selected[f] {
                    count[f] += 1;
                    buckets[count[f]].push(f);
                    top = top.max(count[f]);
                }
            }
        }
    }

    // Running-intersection check: the previously marked vertices of each
    // hyperedge must all lie in its parent. Children are grouped by parent so
    // each parent's vertex set is marked once.
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (e, &p) in parent.iter().enumerate() {
        if p != NO_PARENT {
            kids[p].push(e);
        }
    }
    let mut mark = vec![usize::MAX; h.n()];
    for (p, ks) in kids.iter().enumerate() {
        if ks.is_empty() {
            continue;
        }
        for &v in h.edge(p) {
            mark[v] = p;
        }
        for &e in ks {
            for &v in h.edge(e) {
                if first[v] < rank[e] && mark[v] != p {
                    return None;
                }
            }
        }
    }
    JoinTree::from_parents(parent).ok()
}

/// Checks the join-tree property: for every vertex, the hyperedges holding
/// it induce a connected subtree. Linear in `N + m`.
pub fn verify_join_tree(h: &Hypergraph, t: &JoinTree) -> bool {
    if t.len() != h.m() {
        return false;
    }
    let mut stamp = vec![usize::MAX; h.m()];
    for v in 0..h.n() {
        let holders = h.incidence(v);
        for &e in holders {
            stamp[e] = v;
        }
        let inner = holders.iter().filter(|&&e| t.parent(e).is_some_and(|p| stamp[p] == v)).count();
        if inner + 1 != holders.len() {
            return false;
        }
    }
    true
}

/// A join tree in which every hyperedge hangs from its highest admissible
/// ancestor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalJoinTree {
    pub tree: JoinTree,
    /// `lambda[v]`: smallest pre-order position of a hyperedge holding `v`.
    pub lambda: Vec<usize>,
    /// Hyperedge ids in the pre-order used for `lambda`.
    pub order: Vec<usize>,
    /// Inverse of `order`.
    pub position: Vec<usize>,
}

/// The separator of one tree edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    /// Sorted vertex ids of `E_parent ∩ E_child`.
    pub vertices: Vec<usize>,
    pub parent: usize,
    pub child: usize,
}

/// Separators of a canonical join tree, one per non-root hyperedge, listed
/// in the pre-order of their child.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeparatorHypergraph {
    pub separators: Vec<Separator>,
}

impl SeparatorHypergraph {
    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    /// The separators as a hypergraph over the vertices they cover, with the
    /// map from its vertex ids back to those of the source hypergraph.
    /// `None` when there are no separators.
    pub fn to_hypergraph(&self, source: &Hypergraph) -> Option<(Hypergraph, Vec<usize>)> {
        if self.separators.is_empty() {
            return None;
        }
        let mut local = vec![usize::MAX; source.n()];
        let mut back = Vec::new();
        let edges = self
            .separators
            .iter()
            .map(|s| {
                s.vertices
                    .iter()
                    .map(|&v| {
                        if local[v] == usize::MAX {
                            local[v] = back.len();
                            back.push(v);
                        }
                        local[v]
                    })
                    .collect()
            })
            .collect();
        let names = back.iter().map(|&v| source.name(v).to_owned()).collect();
        let sh = Hypergraph::with_names(names, edges).expect("separators of a connected join tree are non-empty");
        Some((sh, back))
    }

    /// Separator vertex sets, sorted, for multiset comparison.
    pub fn sorted_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<_> = self.separators.iter().map(|s| s.vertices.clone()).collect();
        sets.sort();
        sets
    }
}

/// Re-roots `t` at the smallest hyperedge id of each tree and moves every
/// hyperedge below its highest admissible ancestor. Returns the new tree and
/// its separators.
pub fn canonicalize(h: &Hypergraph, t: &JoinTree) -> Result<(CanonicalJoinTree, SeparatorHypergraph)> {
    if !verify_join_tree(h, t) {
        return Err(Error::InvalidJoinTree("input violates the join-tree property".into()));
    }
    let rerooted = JoinTree::from_edges(h.m(), &t.edges())?;
    let order = rerooted.preorder();
    let mut position = vec![0; h.m()];
    for (k, &e) in order.iter().enumerate() {
        position[e] = k;
    }
    let lambda: Vec<usize> =
        (0..h.n()).map(|v| h.incidence(v).iter().map(|&e| position[e]).min().expect("no isolated vertices")).collect();

    let mut parent = vec![NO_PARENT; h.m()];
    let mut separators = Vec::with_capacity(h.m());
    for (k, &e) in order.iter().enumerate() {
        let up: Vec<usize> = h.edge(e).iter().copied().filter(|&v| lambda[v] < k).collect();
        if let Some(top) = up.iter().map(|&v| lambda[v]).max() {
            let p = order[top];
            parent[e] = p;
            separators.push(Separator { vertices: up, parent: p, child: e });
        }
    }
    let tree = JoinTree::from_parents(parent)?;
    Ok((CanonicalJoinTree { tree, lambda, order, position }, SeparatorHypergraph { separators }))
}

/// Builds a join tree, canonicalizes it and returns both the canonical tree
/// and its separators.
pub fn canonical_join_tree(h: &Hypergraph) -> Result<(CanonicalJoinTree, SeparatorHypergraph)> {
    let t = build_join_tree(h).ok_or(Error::NotAcyclic)?;
    canonicalize(h, &t)
}

/// The separator hypergraph of an α-acyclic hypergraph.
pub fn separator_hypergraph(h: &Hypergraph) -> Result<SeparatorHypergraph> {
    canonical_join_tree(h).map(|(_, s)| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Hypergraph {
        Hypergraph::from_named_edges([vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c"], vec!["c", "e", "f"]])
            .unwrap()
    }

    fn names(h: &Hypergraph, s: &[usize]) -> Vec<String> {
        s.iter().map(|&v| h.name(v).to_owned()).collect()
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let t = build_join_tree(&h).unwrap();
        assert_eq!(t.roots(), &[0]);
        assert!(verify_join_tree(&h, &t));
        assert!(separator_hypergraph(&h).unwrap().is_empty());
    }

    #[test]
    fn triangle_is_cyclic() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(build_join_tree(&h).is_none());
        assert_eq!(separator_hypergraph(&h), Err(Error::NotAcyclic));
    }

    #[test]
    fn sample_star_and_path() {
        let h = sample();
        let t = build_join_tree(&h).unwrap();
        assert!(verify_join_tree(&h, &t));
        let star = JoinTree::from_parents(vec![NO_PARENT, 0, 0, 0]).unwrap();
        assert!(verify_join_tree(&h, &star));
        // E2 - E3 - E1 - E4
        let path = JoinTree::from_edges(4, &[(1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(!verify_join_tree(&h, &path));
        assert!(canonicalize(&h, &path).is_err());
    }

    #[test]
    fn canonicalize_hand_trace() {
        // R = {1,2,3}, A = {1,2} below R, B = {1} below A.
        let h = Hypergraph::new(3, vec![vec![0, 1, 2], vec![0, 1], vec![0]]).unwrap();
        let t = JoinTree::from_parents(vec![NO_PARENT, 0, 1]).unwrap();
        let (c, s) = canonicalize(&h, &t).unwrap();
        assert_eq!(c.tree.parents(), &[NO_PARENT, 0, 0]);
        assert_eq!(s.separators[0], Separator { vertices: vec![0, 1], parent: 0, child: 1 });
        assert_eq!(s.separators[1], Separator { vertices: vec![0], parent: 0, child: 2 });
    }

    #[test]
    fn sample_canonical_star() {
        let h = sample();
        let star = JoinTree::from_parents(vec![NO_PARENT, 0, 0, 0]).unwrap();
        let (c, s) = canonicalize(&h, &star).unwrap();
        assert_eq!(c.tree, star);
        let got: Vec<(usize, Vec<String>)> = s.separators.iter().map(|x| (x.child, names(&h, &x.vertices))).collect();
        assert_eq!(got, vec![(1, vec!["a".into()]), (2, vec!["b".into(), "c".into()]), (3, vec!["c".into()])]);
        assert_eq!(separator_hypergraph(&h).unwrap().sorted_sets(), s.sorted_sets());
    }

    #[test]
    fn star_family_separators() {
        let h = Hypergraph::from_named_edges([vec!["u", "a"], vec!["u", "b"], vec!["u", "c"]]).unwrap();
        let s = separator_hypergraph(&h).unwrap();
        assert_eq!(s.sorted_sets(), vec![vec![0], vec![0]]);
    }

    #[test]
    fn canonical_parent_is_highest() {
        // Path A - B - C - D where D only shares with A through the chain.
        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3], vec![0, 1, 2], vec![0, 1], vec![0]]).unwrap();
        let t = JoinTree::from_parents(vec![NO_PARENT, 0, 1, 2]).unwrap();
        let (c, _) = canonicalize(&h, &t).unwrap();
        assert_eq!(c.tree.parents(), &[NO_PARENT, 0, 0, 0]);
        assert!(verify_join_tree(&h, &c.tree));
    }

    #[test]
    fn forest_for_disconnected_input() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3], vec![1]]).unwrap();
        let t = build_join_tree(&h).unwrap();
        assert_eq!(t.roots().len(), 2);
        let (c, s) = canonicalize(&h, &t).unwrap();
        assert_eq!(c.tree.roots(), &[0, 1]);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn rejects_cyclic_parent_arrays() {
        assert!(JoinTree::from_parents(vec![1, 0]).is_err());
        assert!(JoinTree::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }
}
