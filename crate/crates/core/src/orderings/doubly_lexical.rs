//! Doubly lexical ordering of the incidence matrix and Γ-freeness.
//!
//! The matrix has one row per vertex and one column per hyperedge. Rows are
//! compared as binary words whose most significant digit is the right-most
//! column; columns as words whose most significant digit is the bottom row.
//! An order is doubly lexical when both rows (top to bottom) and columns
//! (left to right) are non-decreasing.

use crate::hypergraph::Hypergraph;
use std::cmp::Ordering;
use std::collections::HashMap;

/// Row (vertex) and column (hyperedge) permutations of the incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublyLexOrder {
    /// Vertex ids from the top row to the bottom row.
    pub vertex_order: Vec<usize>,
    /// Hyperedge ids from the left-most column to the right-most column.
    pub edge_order: Vec<usize>,
}

impl DoublyLexOrder {
    /// `position[v]` of every vertex in `vertex_order`.
    pub fn vertex_positions(&self) -> Vec<usize> {
        inverse(&self.vertex_order)
    }

    /// `position[e]` of every hyperedge in `edge_order`.
    pub fn edge_positions(&self) -> Vec<usize> {
        inverse(&self.edge_order)
    }
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &x) in perm.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Computes a doubly lexical order of the incidence matrix of `h`.
pub fn doubly_lexical_order(h: &Hypergraph) -> DoublyLexOrder {
    let (vertex_order, edge_order) = order_matrix(h.incidences(), h.edges());
    DoublyLexOrder { vertex_order, edge_order }
}

/// Doubly lexical order of a sparse 0/1 matrix given by its row lists and
/// column lists. Returns `(row order top to bottom, column order left to right)`.
///
/// Rows are fixed from the most significant (bottom) one upwards. At each
/// step the unfixed row with the largest word over the current ordered
/// partition of the columns is fixed, and each column class it splits is
/// refined with the part it covers becoming more significant. Only the
/// smaller side of a split is relabelled, so each column changes class
/// `O(log m)` times; rows touching it are repositioned in an indexed max-heap.
pub fn order_matrix(rows: &[Vec<usize>], cols: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut r = Refiner::new(rows, cols);
    let mut fixed_order = Vec::with_capacity(rows.len());
    while let Some(rep) = r.pop() {
        fixed_order.extend_from_slice(&r.twins[rep]);
        r.fix(rep);
    }
    fixed_order.reverse();
    let mut col_order = r.colarr;
    col_order.reverse();
    (fixed_order, col_order)
}

struct Refiner<'a> {
    rows: &'a [Vec<usize>],
    /// Per column, the representative rows holding it.
    rep_cols: Vec<Vec<usize>>,
    /// Rows grouped with their representative (identical row lists).
    twins: Vec<Vec<usize>>,
    colarr: Vec<usize>,
    pos: Vec<usize>,
    class_of: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    marked: Vec<usize>,
    /// Per row, the classes of its columns, most significant first.
    keys: Vec<Vec<usize>>,
    fixed: Vec<bool>,
    heap: Vec<usize>,
    heap_pos: Vec<usize>,
}

impl<'a> Refiner<'a> {
    fn new(rows: &'a [Vec<usize>], cols: &[Vec<usize>]) -> Self {
        let n = rows.len();
        let m = cols.len();
        let mut rep_of = vec![0; n];
        let mut twins = vec![Vec::new(); n];
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for (r, list) in rows.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            let rep = *seen.entry(sorted).or_insert(r);
            rep_of[r] = rep;
            twins[rep].push(r);
        }
        let rep_cols = cols
            .iter()
            .map(|c| {
                let mut reps: Vec<usize> = c.iter().map(|&r| rep_of[r]).collect();
                reps.sort_unstable();
                reps.dedup();
                reps
            })
            .collect();
        let mut refiner = Refiner {
            rows,
            rep_cols,
            twins,
            colarr: (0..m).collect(),
            pos: (0..m).collect(),
            class_of: vec![0; m],
            start: vec![0],
            end: vec![m],
            marked: vec![0],
            keys: rows.iter().map(|l| vec![0; l.len()]).collect(),
            fixed: vec![false; n],
            heap: Vec::new(),
            heap_pos: vec![usize::MAX; n],
        };
        for (r, &rep) in rep_of.iter().enumerate() {
            if rep == r {
                refiner.heap_pos[r] = refiner.heap.len();
                refiner.heap.push(r);
                refiner.sift_up(r);
            }
        }
        refiner
    }

    fn cmp_keys(&self, a: usize, b: usize) -> Ordering {
        let (ka, kb) = (&self.keys[a], &self.keys[b]);
        for (&x, &y) in ka.iter().zip(kb) {
            if x != y {
                // A smaller start means a more significant class.
                return self.start[y].cmp(&self.start[x]);
            }
        }
        ka.len().cmp(&kb.len())
    }

    fn above(&self, a: usize, b: usize) -> bool {
        self.cmp_keys(a, b).then(b.cmp(&a)) == Ordering::Greater
    }

    fn swap_heap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.heap_pos[self.heap[i]] = i;
        self.heap_pos[self.heap[j]] = j;
    }

    fn sift_up(&mut self, r: usize) {
        let mut i = self.heap_pos[r];
        while i > 0 {
            let p = (i - 1) / 2;
            if !self.above(self.heap[i], self.heap[p]) {
                break;
            }
            self.swap_heap(i, p);
            i = p;
        }
    }

    fn sift_down(&mut self, r: usize) {
        let mut i = self.heap_pos[r];
        loop {
            let mut best = i;
            for c in [2 * i + 1, 2 * i + 2] {
                if c < self.heap.len() && self.above(self.heap[c], self.heap[best]) {
                    best = c;
                }
            }
            if best == i {
                break;
            }
            self.swap_heap(i, best);
            i = best;
        }
    }

    fn pop(&mut self) -> Option<usize> {
        let top = *self.heap.first()?;
        let last = self.heap.len() - 1;
        self.swap_heap(0, last);
        self.heap.pop();
        self.heap_pos[top] = usize::MAX;
        if let Some(&r) = self.heap.first() {
            self.sift_down(r);
        }
        Some(top)
    }

    fn fix(&mut self, r: usize) {
        self.fixed[r] = true;
        let mut touched = Vec::new();
        for &c in &self.rows[r] {
            let d = self.class_of[c];
            if self.marked[d] == 0 {
                touched.push(d);
            }
            let target = self.start[d] + self.marked[d];
            let other = self.colarr[target];
            self.colarr.swap(self.pos[c], target);
            self.pos[other] = self.pos[c];
            self.pos[c] = target;
            self.marked[d] += 1;
        }
        for d in touched {
            let k = std::mem::take(&mut self.marked[d]);
            let (s, e) = (self.start[d], self.end[d]);
            if k == e - s {
                continue;
            }
            let new = self.start.len();
            self.marked.push(0);
            if 2 * k <= e - s {
                // Covered part becomes a new, more significant class.
                self.start.push(s);
                self.end.push(s + k);
                self.start[d] = s + k;
                self.relabel(new, s, s + k, d, true);
            } else {
                // Uncovered part becomes a new, less significant class.
                self.start.push(s + k);
                self.end.push(e);
                self.end[d] = s + k;
                self.relabel(new, s + k, e, d, false);
            }
        }
    }

    fn relabel(&mut self, new: usize, from: usize, to: usize, old: usize, up: bool) {
        for i in from..to {
            let c = self.colarr[i];
            self.class_of[c] = new;
            for j in 0..self.rep_cols[c].len() {
                let row = self.rep_cols[c][j];
                if self.fixed[row] {
                    continue;
                }
                let old_start = self.start[old];
                let key = &mut self.keys[row];
                if up {
                    let p = key.partition_point(|&x| self.start[x] < old_start);
                    debug_assert_eq!(key[p], old);
                    key[p] = new;
                    self.sift_up(row);
                } else {
                    let p = key.partition_point(|&x| self.start[x] <= old_start) - 1;
                    debug_assert_eq!(key[p], old);
                    key[p] = new;
                    self.sift_down(row);
                }
            }
        }
    }
}

/// Compares two binary words given by their sets of one-positions, larger
/// positions being more significant. Both slices must be sorted descending.
fn cmp_words(a: &[usize], b: &[usize]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(&y);
        }
    }
    a.len().cmp(&b.len())
}

fn is_permutation(p: &[usize], len: usize) -> bool {
    let mut seen = vec![false; len];
    p.len() == len && p.iter().all(|&x| x < len && !std::mem::replace(&mut seen[x], true))
}

/// Checks that `ord` is a doubly lexical order of the incidence matrix of `h`.
pub fn is_doubly_lexical(h: &Hypergraph, ord: &DoublyLexOrder) -> bool {
    if !is_permutation(&ord.vertex_order, h.n()) || !is_permutation(&ord.edge_order, h.m()) {
        return false;
    }
    let vpos = ord.vertex_positions();
    let epos = ord.edge_positions();
    let words = |members: &[usize], pos: &[usize]| {
        let mut w: Vec<usize> = members.iter().map(|&x| pos[x]).collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    };
    let row_words: Vec<_> = ord.vertex_order.iter().map(|&v| words(h.incidence(v), &epos)).collect();
    let col_words: Vec<_> = ord.edge_order.iter().map(|&e| words(h.edge(e), &vpos)).collect();
    let monotone = |ws: &[Vec<usize>]| ws.windows(2).all(|w| cmp_words(&w[0], &w[1]) != Ordering::Greater);
    monotone(&row_words) && monotone(&col_words)
}

/// Checks that the ordered incidence matrix has no submatrix
/// `[[1, 1], [1, 0]]`. Linear in `N`.
///
/// A Γ exists iff one exists whose upper-left one has its right partner next
/// in its row and its lower partner next in its column, so it suffices to
/// test, for each one, the entry diagonally across from those neighbours.
pub fn is_gamma_free(h: &Hypergraph, ord: &DoublyLexOrder) -> bool {
    let vpos = ord.vertex_positions();
    let epos = ord.edge_positions();
    let sorted_by = |members: &[usize], pos: &[usize]| {
        let mut l = members.to_vec();
        l.sort_unstable_by_key(|&x| pos[x]);
        l
    };
    let row_cols: Vec<_> = (0..h.n()).map(|v| sorted_by(h.incidence(v), &epos)).collect();
    let col_rows: Vec<_> = (0..h.m()).map(|e| sorted_by(h.edge(e), &vpos)).collect();
    // queries[r'] lists the columns c' for which M[r'][c'] must be one.
    let mut queries: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for e in 0..h.m() {
        for w in col_rows[e].windows(2) {
            let (r, below) = (w[0], w[1]);
            let row = &row_cols[r];
            let i = row.partition_point(|&x| epos[x] <= epos[e]);
            if let Some(&right) = row.get(i) {
                queries[below].push(right);
            }
        }
    }
    let mut stamp = vec![usize::MAX; h.m()];
    for (v, query) in queries.iter().enumerate() {
        for &e in h.incidence(v) {
            stamp[e] = v;
        }
        if query.iter().any(|&e| stamp[e] != v) {
            return false;
        }
    }
    true
}
