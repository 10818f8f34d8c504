//! Exact maximum-clique search over bit-packed compatibility graphs.
//!
//! [`CompatGraph`] stores one adjacency bitset per vertex, so the inner
//! loop of every search is word-parallel set intersection. [`max_clique`]
//! runs branch and bound with greedy-coloring upper bounds: at each node
//! the candidates are colored greedily, then visited from the highest
//! color down, and a branch is abandoned as soon as the clique so far plus
//! the candidate's color cannot beat the incumbent. Vertices are relabeled
//! into degeneracy (min-degree peel) order up front, which keeps the
//! coloring bound tight near the dense core.
//!
//! The search is single-threaded and deterministic: value, certificate,
//! and node count depend only on the graph and options. Budgets plug in
//! through [`BudgetCheck`] and are polled every 1024 nodes; when one runs
//! out the search returns its best clique so far with `exact = false`.
//! [`Unbudgeted`] and [`NodeBudget`] live here; wall-clock budgets need a
//! clock, so they belong to the caller.

use alloc::vec;
use alloc::vec::Vec;
use core::mem;

/// Undirected graph on vertices `0..n` with bit-packed adjacency rows.
///
/// No self-loops; edges are stored symmetrically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl CompatGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        CompatGraph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Graph on `n` vertices with edges given by a predicate, queried once
    /// per unordered pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> u64 {
        let set: u64 = self.adj.iter().map(|w| u64::from(w.count_ones())).sum();
        set / 2
    }

    /// Inserts the edge `{u, v}`.
    ///
    /// # Panics
    /// If a vertex is out of range or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Whether `{u, v}` is an edge. Panics if a vertex is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Degree of `u`. Panics if `u` is out of range.
    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        (0..self.n).filter(move |&v| row[v / 64] >> (v % 64) & 1 == 1)
    }

    fn row(&self, u: usize) -> &[u64] {
        assert!(u < self.n, "vertex out of range");
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    /// Vertices in min-degree peel order: repeatedly remove a vertex of
    /// smallest remaining degree (lowest label breaking ties). The returned
    /// sequence lists original labels in removal order, so the densest part
    /// of the graph ends up last.
    fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n;
        let mut degree: Vec<usize> = (0..n).map(|u| self.degree(u)).collect();
        // bins[d] = start of the degree-d segment of `vert`, which holds the
        // unremoved vertices sorted by current degree; pos[u] locates u.
        let mut vert: Vec<usize> = (0..n).collect();
        vert.sort_by_key(|&u| degree[u]);
        let mut pos = vec![0usize; n];
        for (i, &u) in vert.iter().enumerate() {
            pos[u] = i;
        }
        let mut bins = vec![0usize; n + 1];
        for &d in &degree {
            bins[d] += 1;
        }
        let mut start = 0;
        for bin in bins.iter_mut() {
            let count = *bin;
            *bin = start;
            start += count;
        }
        let mut order = Vec::with_capacity(n);
        for i in 0..n {
            let u = vert[i];
            order.push(u);
            for v in self.neighbors(u) {
                if pos[v] > i {
                    // Move v to the front of its degree segment, then
                    // shrink that segment so v's degree drops by one.
                    let dv = degree[v];
                    let seg = bins[dv].max(i + 1);
                    let w = vert[seg];
                    vert.swap(pos[v], seg);
                    pos.swap(v, w);
                    bins[dv] = seg + 1;
                    degree[v] -= 1;
                }
            }
        }
        order
    }
}

/// Resource brake polled by the search roughly every 1024 nodes.
///
/// Returning `true` stops the search, which then reports its best clique
/// so far with `exact = false`.
pub trait BudgetCheck {
    /// Decides whether to stop, given the number of nodes explored so far.
    fn exhausted(&mut self, nodes_explored: u64) -> bool;
}

/// Budget that never runs out: the search always finishes exactly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Unbudgeted;

impl BudgetCheck for Unbudgeted {
    fn exhausted(&mut self, _nodes_explored: u64) -> bool {
        false
    }
}

/// Cap on explored search-tree nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeBudget {
    /// Largest node count the search may reach before it must stop.
    pub max_nodes: u64,
}

impl BudgetCheck for NodeBudget {
    fn exhausted(&mut self, nodes_explored: u64) -> bool {
        nodes_explored > self.max_nodes
    }
}

impl<T: BudgetCheck + ?Sized> BudgetCheck for &mut T {
    fn exhausted(&mut self, nodes_explored: u64) -> bool {
        (**self).exhausted(nodes_explored)
    }
}

/// Result of a clique search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Size of the best clique found.
    pub size: u32,
    /// Its members, sorted, in the graph's own vertex labels.
    pub members: Vec<usize>,
    /// Search-tree nodes explored.
    pub nodes_explored: u64,
    /// `true` when `size` is the exact clique number: the search ran to
    /// completion, or reached a caller-supplied `known_upper`. `false`
    /// when a budget stopped it early.
    pub exact: bool,
}

/// Finds a maximum clique of `g`, subject to `budget`.
///
/// Equivalent to [`max_clique_with`] without an upper-bound hint.
pub fn max_clique<B: BudgetCheck>(g: &CompatGraph, budget: &mut B) -> CliqueOutcome {
    max_clique_with(g, None, budget)
}

/// Finds a maximum clique of `g`, subject to `budget`, stopping early —
/// still reporting `exact = true` — as soon as a clique of size
/// `known_upper` is found.
///
/// `known_upper` must be a genuine upper bound on the clique number of
/// `g`; a too-small value makes the search stop at a clique of that size
/// and wrongly report it as optimal.
pub fn max_clique_with<B: BudgetCheck>(
    g: &CompatGraph,
    known_upper: Option<u32>,
    budget: &mut B,
) -> CliqueOutcome {
    let n = g.n;
    if n == 0 {
        return CliqueOutcome {
            size: 0,
            members: Vec::new(),
            nodes_explored: 0,
            exact: true,
        };
    }

    // Relabel into degeneracy order so greedy coloring sees the dense core
    // under the highest labels, which the search visits first.
    let order = g.degeneracy_order();
    let words = g.words;
    let mut adj = vec![0u64; n * words];
    let mut new_of_old = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        new_of_old[old] = new;
    }
    for (new, &old) in order.iter().enumerate() {
        for v in g.neighbors(old) {
            let nv = new_of_old[v];
            adj[new * words + nv / 64] |= 1 << (nv % 64);
        }
    }

    let mut searcher = Searcher {
        adj: &adj,
        words,
        budget,
        nodes: 0,
        budget_exhausted: false,
        stopped: false,
        target: known_upper.unwrap_or(u32::MAX),
        clique: Vec::new(),
        best: Vec::new(),
        best_size: 0,
        cand: Vec::new(),
        orders: Vec::new(),
        tmp_a: Vec::new(),
        tmp_b: Vec::new(),
    };

    // Greedy warm start from the dense end, so pruning bites immediately
    // and a budget-stopped search still holds a real clique.
    {
        let mut open = vec![u64::MAX; words];
        clear_tail(&mut open, n);
        for v in (0..n).rev() {
            if open[v / 64] >> (v % 64) & 1 == 1 {
                searcher.best.push(v as u32);
                for w in 0..words {
                    open[w] &= adj[v * words + w];
                }
            }
        }
        searcher.best_size = searcher.best.len() as u32;
    }

    if searcher.best_size < searcher.target {
        let mut root = vec![u64::MAX; words];
        clear_tail(&mut root, n);
        searcher.cand.push(root);
        searcher.expand(0);
    }

    let mut members: Vec<usize> = searcher.best.iter().map(|&v| order[v as usize]).collect();
    members.sort_unstable();
    let outcome = CliqueOutcome {
        size: searcher.best_size,
        members,
        nodes_explored: searcher.nodes,
        exact: !searcher.budget_exhausted,
    };
    assert_clique(g, &outcome.members);
    assert_eq!(outcome.members.len() as u32, outcome.size);
    outcome
}

/// Finds a maximum clique of `g` among those containing every vertex of
/// `required`, or `None` when `required` itself is not a clique (including
/// out-of-range or repeated vertices).
///
/// `known_upper` bounds the total clique size, `required` included, with
/// the same trust contract as in [`max_clique_with`].
pub fn max_clique_containing<B: BudgetCheck>(
    g: &CompatGraph,
    required: &[usize],
    known_upper: Option<u32>,
    budget: &mut B,
) -> Option<CliqueOutcome> {
    for (i, &u) in required.iter().enumerate() {
        if u >= g.n {
            return None;
        }
        for &v in &required[..i] {
            if !g.has_edge(u, v) {
                return None;
            }
        }
    }

    // Vertices adjacent to all of `required` (no member is adjacent to
    // itself, so the members drop out automatically).
    let mut common = vec![u64::MAX; g.words];
    clear_tail(&mut common, g.n);
    for &u in required {
        for (c, r) in common.iter_mut().zip(g.row(u)) {
            *c &= r;
        }
    }
    let keep: Vec<usize> = (0..g.n)
        .filter(|&v| common[v / 64] >> (v % 64) & 1 == 1)
        .collect();

    let sub = CompatGraph::from_fn(keep.len(), |i, j| g.has_edge(keep[i], keep[j]));
    let sub_upper = known_upper.map(|u| u.saturating_sub(required.len() as u32));
    let inner = max_clique_with(&sub, sub_upper, budget);

    let mut members: Vec<usize> = required.to_vec();
    members.extend(inner.members.iter().map(|&i| keep[i]));
    members.sort_unstable();
    let outcome = CliqueOutcome {
        size: inner.size + required.len() as u32,
        members,
        nodes_explored: inner.nodes_explored,
        exact: inner.exact,
    };
    assert_clique(g, &outcome.members);
    Some(outcome)
}

/// Clears the bits at positions `n..` so a universe bitset holds exactly
/// `0..n`.
fn clear_tail(bits: &mut [u64], n: usize) {
    if !n.is_multiple_of(64) {
        if let Some(last) = bits.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
}

/// Panics unless `members` are distinct, in range, and pairwise adjacent.
fn assert_clique(g: &CompatGraph, members: &[usize]) {
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[..i] {
            assert!(
                u != v && g.has_edge(u, v),
                "internal error: certificate is not a clique"
            );
        }
    }
}

struct Searcher<'a, B: BudgetCheck> {
    adj: &'a [u64],
    words: usize,
    budget: &'a mut B,
    nodes: u64,
    budget_exhausted: bool,
    stopped: bool,
    /// Stop — still exact — once the incumbent reaches this size.
    target: u32,
    clique: Vec<u32>,
    best: Vec<u32>,
    best_size: u32,
    /// Per-depth candidate bitsets; `cand[d]` is set up by depth `d - 1`.
    cand: Vec<Vec<u64>>,
    /// Per-depth `(vertex, color)` lists, ascending by color.
    orders: Vec<Vec<(u32, u32)>>,
    tmp_a: Vec<u64>,
    tmp_b: Vec<u64>,
}

impl<B: BudgetCheck> Searcher<'_, B> {
    /// Greedily colors the candidates at `depth` and appends them to
    /// `order` grouped by ascending color: each round assigns one fresh
    /// color to a maximal independent-in-`avail` set.
    fn color_sort(&mut self, depth: usize, order: &mut Vec<(u32, u32)>) {
        let words = self.words;
        let mut uncolored = mem::take(&mut self.tmp_a);
        let mut avail = mem::take(&mut self.tmp_b);
        uncolored.clear();
        uncolored.extend_from_slice(&self.cand[depth]);
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            avail.clear();
            avail.extend_from_slice(&uncolored);
            while let Some(v) = first_bit(&avail) {
                avail[v / 64] &= !(1 << (v % 64));
                uncolored[v / 64] &= !(1 << (v % 64));
                let row = &self.adj[v * words..(v + 1) * words];
                for (a, r) in avail.iter_mut().zip(row) {
                    *a &= !r;
                }
                order.push((v as u32, color));
            }
        }
        self.tmp_a = uncolored;
        self.tmp_b = avail;
    }

    fn expand(&mut self, depth: usize) {
        self.nodes += 1;
        if self.nodes & 1023 == 0 && self.budget.exhausted(self.nodes) {
            self.budget_exhausted = true;
            self.stopped = true;
            return;
        }

        if self.orders.len() <= depth {
            self.orders.push(Vec::new());
        }
        let mut order = mem::take(&mut self.orders[depth]);
        order.clear();
        self.color_sort(depth, &mut order);

        let words = self.words;
        let mut idx = order.len();
        while idx > 0 {
            idx -= 1;
            let (v, color) = order[idx];
            if self.clique.len() as u32 + color <= self.best_size {
                break;
            }
            let v = v as usize;
            self.cand[depth][v / 64] &= !(1 << (v % 64));

            if self.cand.len() <= depth + 1 {
                self.cand.push(Vec::new());
            }
            let mut child = mem::take(&mut self.cand[depth + 1]);
            child.clear();
            child.resize(words, 0);
            let mut any = 0u64;
            let row = &self.adj[v * words..(v + 1) * words];
            for ((c, p), r) in child.iter_mut().zip(&self.cand[depth]).zip(row) {
                *c = p & r;
                any |= *c;
            }
            self.cand[depth + 1] = child;

            self.clique.push(v as u32);
            if any == 0 {
                if self.clique.len() as u32 > self.best_size {
                    self.best.clear();
                    self.best.extend_from_slice(&self.clique);
                    self.best_size = self.best.len() as u32;
                    if self.best_size >= self.target {
                        self.stopped = true;
                    }
                }
            } else {
                self.expand(depth + 1);
            }
            self.clique.pop();

            if self.stopped {
                break;
            }
        }
        self.orders[depth] = order;
    }
}

/// Position of the lowest set bit, if any.
fn first_bit(bits: &[u64]) -> Option<usize> {
    for (w, &word) in bits.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: Bron–Kerbosch with pivoting on a plain boolean
    /// matrix. Returns one maximum clique.
    fn oracle_max_clique(adj: &[Vec<bool>]) -> Vec<usize> {
        fn bk(
            adj: &[Vec<bool>],
            r: &mut Vec<usize>,
            p: Vec<usize>,
            x: Vec<usize>,
            best: &mut Vec<usize>,
        ) {
            if p.is_empty() && x.is_empty() {
                if r.len() > best.len() {
                    *best = r.clone();
                }
                return;
            }
            let pivot = p
                .iter()
                .chain(x.iter())
                .copied()
                .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
                .unwrap();
            let branches: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
            let mut p = p;
            let mut x = x;
            for v in branches {
                let p2: Vec<usize> = p.iter().copied().filter(|&u| adj[v][u]).collect();
                let x2: Vec<usize> = x.iter().copied().filter(|&u| adj[v][u]).collect();
                r.push(v);
                bk(adj, r, p2, x2, best);
                r.pop();
                p.retain(|&u| u != v);
                x.push(v);
            }
        }
        let n = adj.len();
        let mut best = Vec::new();
        let mut r = Vec::new();
        bk(adj, &mut r, (0..n).collect(), Vec::new(), &mut best);
        best.sort_unstable();
        best
    }

    fn to_matrix(g: &CompatGraph) -> Vec<Vec<bool>> {
        let n = g.vertex_count();
        (0..n)
            .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
            .collect()
    }

    fn complete(n: usize) -> CompatGraph {
        CompatGraph::from_fn(n, |_, _| true)
    }

    fn cycle(n: usize) -> CompatGraph {
        CompatGraph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    #[test]
    fn graph_basics() {
        let mut g = CompatGraph::new(5);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
        g.add_edge(0, 3);
        g.add_edge(3, 4);
        assert!(g.has_edge(3, 0) && g.has_edge(0, 3));
        assert!(!g.has_edge(0, 4));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(3), 2);
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), [0, 4]);
    }

    #[test]
    #[should_panic(expected = "self-loops")]
    fn graph_rejects_self_loop() {
        CompatGraph::new(3).add_edge(1, 1);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn graph_rejects_bad_vertex() {
        CompatGraph::new(3).add_edge(0, 3);
    }

    #[test]
    fn graph_handles_word_boundaries() {
        let mut g = CompatGraph::new(130);
        g.add_edge(63, 64);
        g.add_edge(64, 129);
        g.add_edge(0, 129);
        assert!(g.has_edge(129, 64) && g.has_edge(129, 0) && g.has_edge(63, 64));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(129).collect::<Vec<_>>(), [0, 64]);
    }

    #[test]
    fn empty_graph_has_clique_zero() {
        let out = max_clique(&CompatGraph::new(0), &mut Unbudgeted);
        assert_eq!((out.size, out.members.len(), out.exact), (0, 0, true));
    }

    #[test]
    fn edgeless_graph_has_clique_one() {
        let out = max_clique(&CompatGraph::new(7), &mut Unbudgeted);
        assert_eq!((out.size, out.exact), (1, true));
        assert_eq!(out.members.len(), 1);
    }

    #[test]
    fn complete_graph_on_five_vertices() {
        let out = max_clique(&complete(5), &mut Unbudgeted);
        assert_eq!((out.size, out.exact), (5, true));
        assert_eq!(out.members, [0, 1, 2, 3, 4]);
    }

    #[test]
    fn small_named_graphs() {
        // Cycles of length ≥ 4 have clique number 2; the triangle has 3.
        assert_eq!(max_clique(&cycle(3), &mut Unbudgeted).size, 3);
        assert_eq!(max_clique(&cycle(5), &mut Unbudgeted).size, 2);
        assert_eq!(max_clique(&cycle(6), &mut Unbudgeted).size, 2);
        // Complete bipartite K3,3: largest clique is an edge.
        let k33 = CompatGraph::from_fn(6, |u, v| (u < 3) != (v < 3));
        assert_eq!(max_clique(&k33, &mut Unbudgeted).size, 2);
        // Petersen graph: triangle-free, clique number 2.
        let petersen = CompatGraph::from_fn(10, |u, v| {
            let (u, v) = (u.min(v), u.max(v));
            match (u < 5, v < 5) {
                (true, true) => (v - u) % 5 == 1 || (v - u) % 5 == 4,
                (true, false) => v - 5 == u,
                (false, false) => (v - u) % 5 == 2 || (v - u) % 5 == 3,
                (false, true) => unreachable!(),
            }
        });
        assert_eq!(petersen.edge_count(), 15);
        assert_eq!(max_clique(&petersen, &mut Unbudgeted).size, 2);
    }

    #[test]
    fn agrees_with_oracle_on_random_graphs() {
        for seed in 0..6u64 {
            for &(n, density_num, density_den) in
                &[(15usize, 1u32, 4u32), (24, 1, 2), (24, 3, 4), (33, 1, 2)]
            {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = CompatGraph::from_fn(n, |_, _| rng.gen_range(0..density_den) < density_num);
                let expected = oracle_max_clique(&to_matrix(&g));
                let out = max_clique(&g, &mut Unbudgeted);
                assert!(out.exact);
                assert_eq!(
                    out.size as usize,
                    expected.len(),
                    "clique number mismatch on seed {seed}, n={n}"
                );
            }
        }
    }

    #[test]
    fn search_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = CompatGraph::from_fn(40, |_, _| rng.gen_bool(0.5));
        let a = max_clique(&g, &mut Unbudgeted);
        let b = max_clique(&g, &mut Unbudgeted);
        assert_eq!(a, b);
    }

    #[test]
    fn known_upper_stops_early_but_exactly() {
        let g = complete(30);
        let capped = max_clique_with(&g, Some(30), &mut Unbudgeted);
        assert_eq!((capped.size, capped.exact), (30, true));
        let free = max_clique(&g, &mut Unbudgeted);
        assert_eq!(free.size, 30);
        assert!(capped.nodes_explored <= free.nodes_explored);
    }

    #[test]
    fn node_budget_reports_inexact_but_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // The unbudgeted search needs ~18k nodes here, so a 1024-node cap
        // (polled at the next multiple of 1024) must cut it off.
        let g = CompatGraph::from_fn(100, |_, _| rng.gen_bool(0.8));
        let out = max_clique(&g, &mut NodeBudget { max_nodes: 1024 });
        assert!(!out.exact);
        // The certificate is still a genuine clique (checked internally);
        // the greedy warm start guarantees it is nonempty.
        assert!(out.size >= 1);
        let full = max_clique(&g, &mut Unbudgeted);
        assert!(out.size <= full.size);
    }

    #[test]
    fn forced_vertices_restrict_the_search() {
        // Two triangles sharing vertex 0, plus a far clique {4,5,6} of its own.
        let edges = [
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (4, 6),
        ];
        let mut g = CompatGraph::new(7);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        let out = max_clique_containing(&g, &[3], None, &mut Unbudgeted).unwrap();
        assert_eq!((out.size, out.exact), (2, true));
        assert!(out.members.contains(&3));
        let out = max_clique_containing(&g, &[0, 1], None, &mut Unbudgeted).unwrap();
        assert_eq!(out.members, [0, 1, 2]);
        // An empty requirement is just max_clique.
        let out = max_clique_containing(&g, &[], None, &mut Unbudgeted).unwrap();
        assert_eq!(out.size, 3);
    }

    #[test]
    fn forced_vertices_must_form_a_clique() {
        let g = cycle(5);
        assert!(max_clique_containing(&g, &[0, 2], None, &mut Unbudgeted).is_none());
        assert!(max_clique_containing(&g, &[0, 7], None, &mut Unbudgeted).is_none());
        assert!(max_clique_containing(&g, &[1, 1], None, &mut Unbudgeted).is_none());
    }

    #[test]
    fn containing_matches_oracle_on_random_graphs() {
        for seed in 20..24u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = CompatGraph::from_fn(18, |_, _| rng.gen_bool(0.5));
            let matrix = to_matrix(&g);
            for u in 0..6 {
                for v in u + 1..6 {
                    let forced = max_clique_containing(&g, &[u, v], None, &mut Unbudgeted);
                    if !g.has_edge(u, v) {
                        assert!(forced.is_none());
                        continue;
                    }
                    let forced = forced.unwrap();
                    // Oracle restricted to the common neighborhood.
                    let keep: Vec<usize> = (0..18)
                        .filter(|&w| w != u && w != v && matrix[u][w] && matrix[v][w])
                        .collect();
                    let sub: Vec<Vec<bool>> = keep
                        .iter()
                        .map(|&a| keep.iter().map(|&b| matrix[a][b]).collect())
                        .collect();
                    let expected = 2 + oracle_max_clique(&sub).len();
                    assert_eq!(
                        forced.size as usize, expected,
                        "seed {seed}, pair ({u},{v})"
                    );
                    assert!(forced.members.contains(&u) && forced.members.contains(&v));
                }
            }
        }
    }

    #[test]
    fn degeneracy_order_is_a_permutation() {
        for (seed, n) in [(1u64, 1usize), (2, 17), (3, 64), (4, 65), (5, 130)] {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = CompatGraph::from_fn(n, |_, _| rng.gen_bool(0.3));
            let mut order = g.degeneracy_order();
            order.sort_unstable();
            assert_eq!(order, (0..n).collect::<Vec<_>>());
        }
    }
}
