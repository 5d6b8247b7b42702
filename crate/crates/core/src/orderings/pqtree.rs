//! PQ-tree over `0..leaves` supporting consecutive-arrangement constraints.
//!
//! Standard bubble/reduce scheme with the P- and Q-node templates. Children
//! of every node are kept in a sibling list whose links are unordered pairs,
//! so whole child sequences can be reversed or spliced in constant time.
//! Parent links go through a disjoint-set forest: all children of a node
//! share one set, and absorbing a Q-node's children into another Q-node is a
//! single union.

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Leaf,
    P,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Empty,
    Partial,
    Full,
}

pub struct PqTree {
    kind: Vec<Kind>,
    sib: Vec<[usize; 2]>,
    ends: Vec<[usize; 2]>,
    nchild: Vec<usize>,
    /// Set element of the node as a child; `NIL` for the root.
    elem: Vec<usize>,
    /// Set element standing for the node's children.
    set: Vec<usize>,
    dsu: Vec<usize>,
    rank: Vec<u8>,
    owner: Vec<usize>,
    root: usize,
    // Scratch state of the current reduction, valid when `stamp == round`.
    round: u64,
    stamp: Vec<u64>,
    label: Vec<Label>,
    full_end: Vec<usize>,
    marked: Vec<bool>,
    pending: Vec<usize>,
    leaf_count: Vec<usize>,
    fulls: Vec<Vec<usize>>,
    partials: Vec<Vec<usize>>,
}

impl PqTree {
    /// A tree over leaves `0..leaves` admitting every permutation.
    pub fn new(leaves: usize) -> Self {
        assert!(leaves > 0, "a PQ-tree needs at least one leaf");
        let mut t = PqTree {
            kind: Vec::new(),
            sib: Vec::new(),
            ends: Vec::new(),
            nchild: Vec::new(),
            elem: Vec::new(),
            set: Vec::new(),
            dsu: Vec::new(),
            rank: Vec::new(),
            owner: Vec::new(),
            root: 0,
            round: 0,
            stamp: Vec::new(),
            label: Vec::new(),
            full_end: Vec::new(),
            marked: Vec::new(),
            pending: Vec::new(),
            leaf_count: Vec::new(),
            fulls: Vec::new(),
            partials: Vec::new(),
        };
        for _ in 0..leaves {
            t.new_node(Kind::Leaf);
        }
        if leaves > 1 {
            let p = t.new_node(Kind::P);
            for leaf in 0..leaves {
                t.push_child(p, leaf, 1);
            }
            t.root = p;
        }
        t
    }

    fn new_node(&mut self, kind: Kind) -> usize {
        let id = self.kind.len();
        let set = self.new_elem();
        self.owner[set] = id;
        self.kind.push(kind);
        self.sib.push([NIL; 2]);
        self.ends.push([NIL; 2]);
        self.nchild.push(0);
        self.elem.push(NIL);
        self.set.push(set);
        self.stamp.push(0);
        self.label.push(Label::Empty);
        self.full_end.push(0);
        self.marked.push(false);
        self.pending.push(0);
        self.leaf_count.push(0);
        self.fulls.push(Vec::new());
        self.partials.push(Vec::new());
        id
    }

    fn new_elem(&mut self) -> usize {
        self.dsu.push(self.dsu.len());
        self.rank.push(0);
        self.owner.push(NIL);
        self.dsu.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.dsu[x] != x {
            self.dsu[x] = self.dsu[self.dsu[x]];
            x = self.dsu[x];
        }
        x
    }

    fn parent(&mut self, x: usize) -> usize {
        match self.elem[x] {
            NIL => NIL,
            e => {
                let r = self.find(e);
                self.owner[r]
            }
        }
    }

    /// Moves all children of `from` into the child set of `into`.
    fn merge_sets(&mut self, into: usize, from: usize) {
        let a = self.find(self.set[into]);
        let b = self.find(self.set[from]);
        let r = if self.rank[a] < self.rank[b] {
            self.dsu[a] = b;
            b
        } else {
            self.dsu[b] = a;
            if self.rank[a] == self.rank[b] {
                self.rank[a] += 1;
            }
            a
        };
        self.owner[r] = into;
        self.set[into] = r;
    }

    fn relink(&mut self, x: usize, from: usize, to: usize) {
        if x == NIL {
            return;
        }
        if self.sib[x][0] == from {
            self.sib[x][0] = to;
        } else {
            debug_assert_eq!(self.sib[x][1], from);
            self.sib[x][1] = to;
        }
    }

    fn other_sib(&self, x: usize, prev: usize) -> usize {
        if self.sib[x][0] == prev {
            self.sib[x][1]
        } else {
            self.sib[x][0]
        }
    }

    /// Appends `c` at end `k` of `x`'s child sequence.
    fn push_child(&mut self, x: usize, c: usize, k: usize) {
        let e = self.new_elem();
        let r = self.find(self.set[x]);
        self.dsu[e] = r;
        self.elem[c] = e;
        if self.nchild[x] == 0 {
            self.ends[x] = [c, c];
            self.sib[c] = [NIL; 2];
        } else {
            let end = self.ends[x][k];
            self.relink(end, NIL, c);
            self.sib[c] = [end, NIL];
            self.ends[x][k] = c;
        }
        self.nchild[x] += 1;
    }

    fn remove_child(&mut self, x: usize, c: usize) {
        let [a, b] = self.sib[c];
        self.relink(a, c, b);
        self.relink(b, c, a);
        let other = if a != NIL { a } else { b };
        for k in 0..2 {
            if self.ends[x][k] == c {
                self.ends[x][k] = other;
            }
        }
        self.nchild[x] -= 1;
        self.elem[c] = NIL;
        self.sib[c] = [NIL; 2];
    }

    /// Puts `new` (detached) in the place of `old`, which becomes detached.
    fn replace(&mut self, old: usize, new: usize) {
        let [a, b] = self.sib[old];
        self.sib[new] = [a, b];
        self.relink(a, old, new);
        self.relink(b, old, new);
        self.elem[new] = self.elem[old];
        self.elem[old] = NIL;
        self.sib[old] = [NIL; 2];
        let p = self.parent(new);
        if p == NIL {
            self.root = new;
        } else {
            for k in 0..2 {
                if self.ends[p][k] == old {
                    self.ends[p][k] = new;
                }
            }
        }
    }

    fn only_child(&self, x: usize) -> usize {
        debug_assert_eq!(self.nchild[x], 1);
        self.ends[x][0]
    }

    fn touch(&mut self, x: usize) {
        if self.stamp[x] != self.round {
            self.stamp[x] = self.round;
            self.label[x] = Label::Empty;
            self.marked[x] = false;
            self.pending[x] = 0;
            self.leaf_count[x] = 0;
            self.fulls[x].clear();
            self.partials[x].clear();
        }
    }

    fn label_of(&self, x: usize) -> Label {
        if self.stamp[x] == self.round {
            self.label[x]
        } else {
            Label::Empty
        }
    }

    /// Restricts the tree to orders in which `leaves` are consecutive.
    /// Returns `false` (leaving the tree unusable) when no such order exists.
    pub fn reduce(&mut self, leaves: &[usize]) -> bool {
        if leaves.len() <= 1 {
            return true;
        }
        self.round += 1;
        // Bubble: mark every ancestor that will be visited and count its
        // pertinent children.
        let mut queue: VecDeque<usize> = VecDeque::with_capacity(leaves.len());
        for &l in leaves {
            self.touch(l);
            self.marked[l] = true;
            queue.push_back(l);
        }
        let mut off_the_top = 0;
        while queue.len() + off_the_top > 1 {
            let Some(x) = queue.pop_front() else { break };
            let p = self.parent(x);
            if p == NIL {
                off_the_top = 1;
                continue;
            }
            self.touch(p);
            self.pending[p] += 1;
            if !self.marked[p] {
                self.marked[p] = true;
                queue.push_back(p);
            }
        }
        // Reduce bottom-up.
        let total = leaves.len();
        let mut ready: VecDeque<usize> = leaves.iter().copied().collect();
        for &l in leaves {
            self.leaf_count[l] = 1;
        }
        while let Some(x) = ready.pop_front() {
            if self.leaf_count[x] == total {
                return self.root_template(x);
            }
            let p = self.parent(x);
            if p == NIL {
                return false;
            }
            let Some(y) = self.template(x) else { return false };
            self.touch(p);
            match self.label[y] {
                Label::Full => self.fulls[p].push(y),
                Label::Partial => self.partials[p].push(y),
                Label::Empty => unreachable!("pertinent nodes are never empty"),
            }
            self.leaf_count[p] += self.leaf_count[x];
            self.pending[p] -= 1;
            if self.pending[p] == 0 {
                ready.push_back(p);
            }
        }
        false
    }

    /// Groups the full children of `x` under one node, detached from `x`.
    fn detach_fulls(&mut self, x: usize) -> Option<usize> {
        let fulls = std::mem::take(&mut self.fulls[x]);
        let group = match fulls.len() {
            0 => None,
            1 => {
                self.remove_child(x, fulls[0]);
                Some(fulls[0])
            }
            _ => {
                let f = self.new_node(Kind::P);
                self.touch(f);
                self.label[f] = Label::Full;
                for &c in &fulls {
                    self.remove_child(x, c);
                    self.push_child(f, c, 1);
                }
                Some(f)
            }
        };
        self.fulls[x] = fulls;
        group
    }

    /// `x` itself, or its only child (detached) if it has just one.
    fn empties_group(&mut self, x: usize) -> usize {
        if self.nchild[x] == 1 {
            let c = self.only_child(x);
            self.remove_child(x, c);
            c
        } else {
            x
        }
    }

    /// Applies the template for a pertinent non-root node and returns the
    /// node now standing in its place, labelled full or partial.
    fn template(&mut self, x: usize) -> Option<usize> {
        let (nf, np) = (self.fulls[x].len(), self.partials[x].len());
        match self.kind[x] {
            Kind::Leaf => {
                self.label[x] = Label::Full;
                Some(x)
            }
            _ if np == 0 && nf == self.nchild[x] => {
                self.label[x] = Label::Full;
                Some(x)
            }
            Kind::P if np == 0 => {
                let f = self.detach_fulls(x).expect("pertinent node has a full child");
                let q = self.new_node(Kind::Q);
                self.replace(x, q);
                let e = self.empties_group(x);
                self.push_child(q, e, 0);
                self.push_child(q, f, 1);
                self.touch(q);
                self.label[q] = Label::Partial;
                self.full_end[q] = 1;
                Some(q)
            }
            Kind::P if np == 1 => {
                let c = self.partials[x][0];
                self.remove_child(x, c);
                if let Some(f) = self.detach_fulls(x) {
                    let k = self.full_end[c];
                    self.push_child(c, f, k);
                }
                self.replace(x, c);
                if self.nchild[x] > 0 {
                    let e = self.empties_group(x);
                    let k = 1 - self.full_end[c];
                    self.push_child(c, e, k);
                }
                Some(c)
            }
            Kind::P => None,
            Kind::Q => {
                let block = self.pertinent_block(x)?;
                // The block must start at an end of `x` with a full child,
                // unless it is a single child.
                let k = (0..2).find(|&k| {
                    let end = self.ends[x][k];
                    let (first, last) = (block[0], block[block.len() - 1]);
                    (end == first || end == last) && (block.len() == 1 || self.label_of(end) == Label::Full)
                })?;
                self.splice_block(x, &block);
                self.label[x] = Label::Partial;
                self.full_end[x] = k;
                Some(x)
            }
        }
    }

    fn root_template(&mut self, x: usize) -> bool {
        let (nf, np) = (self.fulls[x].len(), self.partials[x].len());
        match self.kind[x] {
            Kind::Leaf => true,
            _ if np == 0 && nf == self.nchild[x] => true,
            Kind::P => match np {
                0 => {
                    if nf >= 2 {
                        let f = self.detach_fulls(x).unwrap();
                        self.push_child(x, f, 1);
                    }
                    true
                }
                1 => {
                    let c = self.partials[x][0];
                    if let Some(f) = self.detach_fulls(x) {
                        let k = self.full_end[c];
                        self.push_child(c, f, k);
                    }
                    if self.nchild[x] == 1 {
                        self.remove_child(x, c);
                        self.replace(x, c);
                    }
                    true
                }
                2 => {
                    let (c1, c2) = (self.partials[x][0], self.partials[x][1]);
                    if let Some(f) = self.detach_fulls(x) {
                        let k = self.full_end[c1];
                        self.push_child(c1, f, k);
                    }
                    self.remove_child(x, c2);
                    self.append_q(c1, self.full_end[c1], c2);
                    if self.nchild[x] == 1 {
                        self.remove_child(x, c1);
                        self.replace(x, c1);
                    }
                    true
                }
                _ => false,
            },
            Kind::Q => match self.pertinent_block(x) {
                Some(block) => {
                    self.splice_block(x, &block);
                    true
                }
                None => false,
            },
        }
    }

    /// The maximal run of pertinent children of Q-node `x` around one of
    /// them, in sibling order. `None` unless it holds every pertinent child
    /// and partial children occur only at its ends.
    fn pertinent_block(&mut self, x: usize) -> Option<Vec<usize>> {
        let start = self.fulls[x].first().or(self.partials[x].first()).copied()?;
        let mut sides: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for (dir, side) in sides.iter_mut().enumerate() {
            let mut prev = start;
            let mut cur = self.sib[start][dir];
            while cur != NIL {
                match self.label_of(cur) {
                    Label::Empty => break,
                    Label::Partial => {
                        side.push(cur);
                        break;
                    }
                    Label::Full => side.push(cur),
                }
                let next = self.other_sib(cur, prev);
                prev = cur;
                cur = next;
            }
        }
        let [left, right] = sides;
        let mut block: Vec<usize> = left.into_iter().rev().collect();
        block.push(start);
        block.extend(right);
        let partial_at = |i: usize| self.label_of(block[i]) == Label::Partial;
        let partials = (0..block.len()).filter(|&i| partial_at(i)).count();
        let interior_partial = (1..block.len().saturating_sub(1)).any(partial_at);
        let ok =
            !interior_partial && partials == self.partials[x].len() && block.len() - partials == self.fulls[x].len();
        ok.then_some(block)
    }

    /// Replaces each partial child at an end of `block` by its children,
    /// oriented with their full side toward the block interior (or toward
    /// the end of `x` for a single-element block).
    fn splice_block(&mut self, x: usize, block: &[usize]) {
        let len = block.len();
        // Neighbours outside the block are unaffected by splicing, so fix
        // them before changing anything.
        let mut jobs = Vec::with_capacity(2);
        for (i, &c) in block.iter().enumerate() {
            if self.label_of(c) != Label::Partial {
                continue;
            }
            let away = match (len, i) {
                (1, _) => {
                    if self.sib[c][0] == NIL {
                        self.sib[c][1]
                    } else {
                        self.sib[c][0]
                    }
                }
                (_, 0) => self.other_sib(c, block[1]),
                _ => self.other_sib(c, block[len - 2]),
            };
            jobs.push((c, away));
        }
        for (c, away) in jobs {
            self.splice(x, c, away);
        }
    }

    /// Replaces Q-node child `c` of `x` by its children, empty end toward
    /// sibling `away` (`NIL`: toward the adjacent end of `x`).
    fn splice(&mut self, x: usize, c: usize, away: usize) {
        let [a, b] = self.sib[c];
        let toward = if a == away { b } else { a };
        let cf = self.ends[c][self.full_end[c]];
        let ce = self.ends[c][1 - self.full_end[c]];
        let at_end = if self.ends[x][0] == c { 0 } else { 1 };
        for (nb, inner) in [(toward, cf), (away, ce)] {
            self.relink(inner, NIL, nb);
            if nb == NIL {
                self.ends[x][at_end] = inner;
            } else {
                self.relink(nb, c, inner);
            }
        }
        self.nchild[x] += self.nchild[c] - 1;
        self.merge_sets(x, c);
        self.elem[c] = NIL;
    }

    /// Appends the children of partial Q-node `c` (detached) at end `k` of
    /// Q-node `x`, full end of `c` first.
    fn append_q(&mut self, x: usize, k: usize, c: usize) {
        let end = self.ends[x][k];
        let cf = self.ends[c][self.full_end[c]];
        let ce = self.ends[c][1 - self.full_end[c]];
        self.relink(end, NIL, cf);
        self.relink(cf, NIL, end);
        self.ends[x][k] = ce;
        self.nchild[x] += self.nchild[c];
        self.merge_sets(x, c);
    }

    /// Leaves in the order of one admissible permutation.
    pub fn frontier(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            if self.kind[x] == Kind::Leaf {
                out.push(x);
                continue;
            }
            let mut kids = Vec::with_capacity(self.nchild[x]);
            let (mut prev, mut cur) = (NIL, self.ends[x][0]);
            while cur != NIL {
                kids.push(cur);
                assert!(kids.len() <= self.nchild[x], "sibling list of node {x} is corrupt");
                let next = self.other_sib(cur, prev);
                prev = cur;
                cur = next;
            }
            stack.extend(kids.into_iter().rev());
        }
        out
    }
}
