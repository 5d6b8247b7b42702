//! Containment detection in acyclic hypergraphs and the set-family
//! reductions onto acyclic hypergraphs and hypertrees.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::jointree::canonical_join_tree;

/// Name of the vertex added by the reductions. Input families may not use it.
pub const RESERVED_VERTEX: &str = "$u";

/// A non-empty list of non-empty named sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    sets: Vec<Vec<String>>,
}

impl SetFamily {
    pub fn new(sets: Vec<Vec<String>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Hypergraph::from_named_edges(&sets)?;
        Ok(SetFamily { sets })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        SetFamily { sets: (0..h.m()).map(|j| h.edge_names(j).into_iter().map(str::to_owned).collect()).collect() }
    }

    pub fn sets(&self) -> &[Vec<String>] {
        &self.sets
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_named_edges(&self.sets).expect("validated on construction")
    }

    fn with_reserved(&self) -> Result<Vec<Vec<String>>> {
        if self.sets.iter().flatten().any(|v| v == RESERVED_VERTEX) {
            return Err(Error::NameCollision(RESERVED_VERTEX.into()));
        }
        Ok(self.sets.iter().map(|s| s.iter().cloned().chain([RESERVED_VERTEX.to_owned()]).collect()).collect())
    }
}

/// Whether two distinct hyperedges of an α-acyclic hypergraph are nested.
/// Some nested pair exists iff some separator of the canonical join tree
/// equals one of its two hyperedges.
pub fn sperner_acyclic(h: &Hypergraph) -> Result<bool> {
    let (_, seps) = canonical_join_tree(h)?;
    Ok(seps
        .separators
        .iter()
        .any(|s| s.vertices.len() == h.edge(s.parent).len() || s.vertices.len() == h.edge(s.child).len()))
}

/// Adds the reserved vertex to every set and appends the union of all of
/// them as a last hyperedge. The result is α-acyclic: the last hyperedge is
/// the centre of a star join tree.
pub fn reduce_family_to_acyclic(f: &SetFamily) -> Result<Hypergraph> {
    let mut sets = f.with_reserved()?;
    let h = Hypergraph::from_named_edges(&sets)?;
    sets.push(h.names().to_vec());
    Hypergraph::from_named_edges(&sets)
}

/// Adds the reserved vertex to every set. The result is a hypertree with the
/// same nested pairs as `f`.
pub fn reduce_family_to_hypertree(f: &SetFamily) -> Result<Hypergraph> {
    Hypergraph::from_named_edges(f.with_reserved()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jointree::build_join_tree;

    fn family(sets: &[&[&str]]) -> SetFamily {
        SetFamily::new(sets.iter().map(|s| s.iter().map(|&x| x.to_owned()).collect()).collect()).unwrap()
    }

    fn sets_of(h: &Hypergraph) -> Vec<Vec<&str>> {
        (0..h.m())
            .map(|j| {
                let mut s = h.edge_names(j);
                s.sort();
                s
            })
            .collect()
    }

    #[test]
    fn examples() {
        let sample =
            Hypergraph::from_named_edges([vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c"], vec!["c", "e", "f"]])
                .unwrap();
        assert!(sperner_acyclic(&sample).unwrap());
        let star = Hypergraph::from_named_edges([vec!["u", "a"], vec!["u", "b"], vec!["u", "c"]]).unwrap();
        assert!(!sperner_acyclic(&star).unwrap());
        assert!(!sperner_acyclic(&Hypergraph::new(2, vec![vec![0, 1]]).unwrap()).unwrap());
        let triangle = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(sperner_acyclic(&triangle), Err(Error::NotAcyclic));
    }

    #[test]
    fn acyclic_reduction() {
        let h = reduce_family_to_acyclic(&family(&[&["1"], &["2"]])).unwrap();
        assert_eq!(sets_of(&h), [vec!["$u", "1"], vec!["$u", "2"], vec!["$u", "1", "2"]]);
        assert!(build_join_tree(&h).is_some());
        let nested = reduce_family_to_acyclic(&family(&[&["1"], &["1", "2"]])).unwrap();
        assert_eq!(sets_of(&nested), [vec!["$u", "1"], vec!["$u", "1", "2"], vec!["$u", "1", "2"]]);
    }

    #[test]
    fn hypertree_reduction() {
        let h = reduce_family_to_hypertree(&family(&[&["1"], &["2"]])).unwrap();
        assert_eq!(sets_of(&h), [vec!["$u", "1"], vec!["$u", "2"]]);
        let twins = reduce_family_to_hypertree(&family(&[&["1"], &["1"]])).unwrap();
        assert!(build_join_tree(&twins.dual()).is_some());
        assert!(sperner_acyclic(&twins).unwrap());
    }

    #[test]
    fn invalid_families() {
        assert_eq!(SetFamily::new(vec![]), Err(Error::EmptyFamily));
        let bad = family(&[&["$u", "x"]]);
        assert_eq!(reduce_family_to_acyclic(&bad), Err(Error::NameCollision("$u".into())));
        assert_eq!(SetFamily::new(vec![vec![]]), Err(Error::EmptyHyperedge(0)));
    }
}
