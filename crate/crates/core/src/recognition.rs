//! Placement of a hypergraph in the acyclicity hierarchy.

use crate::hypergraph::Hypergraph;
use crate::jointree::build_join_tree;
use crate::orderings::{doubly_lexical_order, interval_order, is_gamma_free, pruning_sequences};
use std::fmt;

/// Membership flags. Multi-component inputs are classified per component;
/// each flag holds iff it holds for every component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HypergraphClass {
    pub is_alpha: bool,
    pub is_hypertree: bool,
    pub is_beta: bool,
    pub is_gamma: bool,
    pub is_interval: bool,
}

impl HypergraphClass {
    /// Whether the flags respect the hierarchy: γ ⇒ β, interval ⇒ β,
    /// β ⇒ α and hypertree.
    pub fn is_consistent(&self) -> bool {
        (!self.is_gamma || self.is_beta)
            && (!self.is_interval || self.is_beta)
            && (!self.is_beta || (self.is_alpha && self.is_hypertree))
    }
}

impl fmt::Display for HypergraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha: {}", self.is_alpha)?;
        writeln!(f, "hypertree: {}", self.is_hypertree)?;
        writeln!(f, "beta: {}", self.is_beta)?;
        writeln!(f, "gamma: {}", self.is_gamma)?;
        write!(f, "interval: {}", self.is_interval)
    }
}

/// Runs all five recognizers.
pub fn classify(h: &Hypergraph) -> HypergraphClass {
    HypergraphClass {
        is_alpha: is_alpha(h),
        is_hypertree: is_hypertree(h),
        is_beta: is_beta(h),
        is_gamma: is_gamma(h),
        is_interval: is_interval(h),
    }
}

/// Whether `h` has a join tree (forest for several components).
pub fn is_alpha(h: &Hypergraph) -> bool {
    build_join_tree(h).is_some()
}

/// Whether the dual of `h` is α-acyclic.
pub fn is_hypertree(h: &Hypergraph) -> bool {
    build_join_tree(&h.dual()).is_some()
}

/// Whether a doubly lexical order of the incidence matrix is Γ-free.
pub fn is_beta(h: &Hypergraph) -> bool {
    is_gamma_free(h, &doubly_lexical_order(h))
}

/// Whether the incidence graph is distance-hereditary.
pub fn is_gamma(h: &Hypergraph) -> bool {
    pruning_sequences(h).is_some()
}

/// Whether the hyperedges of every component can be ordered so that each
/// vertex lies in a contiguous run.
pub fn is_interval(h: &Hypergraph) -> bool {
    interval_order(h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_is_gamma() {
        let h =
            Hypergraph::from_named_edges([vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c"], vec!["c", "e", "f"]])
                .unwrap();
        let c = classify(&h);
        assert!(c.is_alpha && c.is_hypertree && c.is_beta && c.is_gamma);
        assert!(c.is_consistent());
    }

    #[test]
    fn triangle_is_nothing() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(classify(&h), HypergraphClass::default());
    }

    #[test]
    fn chain_is_interval() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let c = classify(&h);
        assert!(c.is_interval && c.is_beta && c.is_alpha);
    }

    #[test]
    fn covered_triangle_is_alpha_only() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1, 2]]).unwrap();
        let c = classify(&h);
        assert!(c.is_alpha && !c.is_beta && !c.is_gamma && !c.is_interval);
    }
}
