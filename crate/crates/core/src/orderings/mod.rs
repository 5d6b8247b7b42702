//! Orderings behind the class-specific algorithms.

mod doubly_lexical;
mod interval;
mod pqtree;
mod pruning;

pub use doubly_lexical::{doubly_lexical_order, is_doubly_lexical, is_gamma_free, order_matrix, DoublyLexOrder};
pub use interval::{interval_order, IntervalOrder};
pub use pqtree::PqTree;
pub use pruning::{pruning_sequence, pruning_sequences, Node, PruningSequence, PruningStep, StepKind};
