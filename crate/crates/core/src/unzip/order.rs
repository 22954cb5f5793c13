//! Per-edge sequences of arc occurrences kept in randomized balanced trees
//! (treaps) with subtree sizes and parent links, so that an occurrence can
//! be located, ranked and inserted at a rank in logarithmic expected time.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NIL: usize = usize::MAX;

#[derive(Clone, Copy, Debug)]
struct Node {
    left: usize,
    right: usize,
    parent: usize,
    size: usize,
    priority: u64,
}

/// One ordered sequence per edge. Node `k` holds occurrence `k` of the
/// curve once it has been inserted.
#[derive(Clone, Debug)]
pub struct EdgeOrders {
    nodes: Vec<Node>,
    roots: Vec<usize>,
    inserted: Vec<bool>,
}

impl EdgeOrders {
    pub fn new(edges: usize, occurrences: usize, seed: u64) -> EdgeOrders {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nodes = (0..occurrences)
            .map(|_| Node { left: NIL, right: NIL, parent: NIL, size: 1, priority: rng.gen() })
            .collect();
        EdgeOrders { nodes, roots: vec![NIL; edges], inserted: vec![false; occurrences] }
    }

    pub fn len(&self, edge: usize) -> usize {
        self.size(self.roots[edge])
    }

    pub fn is_inserted(&self, occ: usize) -> bool {
        self.inserted[occ]
    }

    fn size(&self, t: usize) -> usize {
        if t == NIL {
            0
        } else {
            self.nodes[t].size
        }
    }

    fn pull(&mut self, t: usize) {
        let (l, r) = (self.nodes[t].left, self.nodes[t].right);
        self.nodes[t].size = 1 + self.size(l) + self.size(r);
        if l != NIL {
            self.nodes[l].parent = t;
        }
        if r != NIL {
            self.nodes[r].parent = t;
        }
    }

    /// Rank of an inserted occurrence in the sequence of its edge.
    pub fn rank(&self, occ: usize) -> usize {
        debug_assert!(self.inserted[occ]);
        let mut r = self.size(self.nodes[occ].left);
        let mut x = occ;
        while self.nodes[x].parent != NIL {
            let p = self.nodes[x].parent;
            if self.nodes[p].right == x {
                r += self.size(self.nodes[p].left) + 1;
            }
            x = p;
        }
        r
    }

    /// Occurrence at rank `k` of the sequence of `edge`.
    pub fn select(&self, edge: usize, mut k: usize) -> usize {
        let mut t = self.roots[edge];
        loop {
            let ls = self.size(self.nodes[t].left);
            if k < ls {
                t = self.nodes[t].left;
            } else if k == ls {
                return t;
            } else {
                k -= ls + 1;
                t = self.nodes[t].right;
            }
        }
    }

    /// Rank at which a new element goes, descending from the root of `edge`:
    /// `goes_before(x)` tells whether the new element precedes `x`.
    pub fn search<F: FnMut(usize) -> bool>(&self, edge: usize, mut goes_before: F) -> usize {
        let mut t = self.roots[edge];
        let mut rank = 0;
        while t != NIL {
            if goes_before(t) {
                t = self.nodes[t].left;
            } else {
                rank += self.size(self.nodes[t].left) + 1;
                t = self.nodes[t].right;
            }
        }
        rank
    }

    fn split(&mut self, t: usize, k: usize) -> (usize, usize) {
        if t == NIL {
            return (NIL, NIL);
        }
        let ls = self.size(self.nodes[t].left);
        if k <= ls {
            let (a, b) = self.split(self.nodes[t].left, k);
            self.nodes[t].left = b;
            self.pull(t);
            if a != NIL {
                self.nodes[a].parent = NIL;
            }
            (a, t)
        } else {
            let (a, b) = self.split(self.nodes[t].right, k - ls - 1);
            self.nodes[t].right = a;
            self.pull(t);
            if b != NIL {
                self.nodes[b].parent = NIL;
            }
            (t, b)
        }
    }

    fn merge(&mut self, a: usize, b: usize) -> usize {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a].priority > self.nodes[b].priority {
            let r = self.merge(self.nodes[a].right, b);
            self.nodes[a].right = r;
            self.pull(a);
            a
        } else {
            let l = self.merge(a, self.nodes[b].left);
            self.nodes[b].left = l;
            self.pull(b);
            b
        }
    }

    /// Inserts occurrence `occ` at rank `k` of the sequence of `edge`.
    pub fn insert(&mut self, edge: usize, occ: usize, k: usize) {
        assert!(!self.inserted[occ], "occurrence inserted twice");
        self.inserted[occ] = true;
        let root = self.roots[edge];
        let (a, b) = self.split(root, k);
        let m = self.merge(a, occ);
        let root = self.merge(m, b);
        self.nodes[root].parent = NIL;
        self.roots[edge] = root;
    }

    /// Occurrences of `edge` in order.
    pub fn sequence(&self, edge: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len(edge));
        let mut stack = Vec::new();
        let mut t = self.roots[edge];
        while t != NIL || !stack.is_empty() {
            while t != NIL {
                stack.push(t);
                t = self.nodes[t].left;
            }
            let x = stack.pop().expect("non-empty stack");
            out.push(x);
            t = self.nodes[x].right;
        }
        out
    }
}
