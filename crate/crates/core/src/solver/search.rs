use std::sync::atomic::{AtomicBool, AtomicI64, Ordering};
use std::sync::Mutex;

use crate::graph::{Block, Edge, EdgeLabeling, Part, Sign, TripartiteParams, Vertex};

/// The instance flattened for search: vertices U, then V, then W, and
/// edges ordered u by u (UV row, then UW row), then v by v (VW row).
pub(crate) struct Instance {
    pub params: TripartiteParams,
    pub edges: Vec<(usize, usize)>,
    pub graph_edges: Vec<Edge>,
    pub deg: Vec<i64>,
    pub incident: Vec<Vec<usize>>,
    pub prev_same: Vec<Option<usize>>,
    pub next_same: Vec<Option<usize>>,
    pub hint: Option<Vec<u32>>,
}

impl Instance {
    pub fn new(params: TripartiteParams, hint: Option<Vec<u32>>) -> Self {
        let [m, n, p] = params.sizes().map(|s| s as usize);
        let nv = m + n + p;
        let vertex = |x: Vertex| match x.part {
            Part::U => x.index as usize,
            Part::V => m + x.index as usize,
            Part::W => m + n + x.index as usize,
        };
        let mut graph_edges = Vec::with_capacity(params.edge_count() as usize);
        for i in 0..m as u32 {
            graph_edges.extend((0..n as u32).map(|j| Edge::new(Block::UV, i, j)));
            graph_edges.extend((0..p as u32).map(|k| Edge::new(Block::UW, i, k)));
        }
        for j in 0..n as u32 {
            graph_edges.extend((0..p as u32).map(|k| Edge::new(Block::VW, j, k)));
        }
        let edges: Vec<(usize, usize)> = graph_edges
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                (vertex(a), vertex(b))
            })
            .collect();
        let mut incident = vec![Vec::new(); nv];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        let mut deg = vec![0; nv];
        let mut prev_same = vec![None; nv];
        let mut next_same = vec![None; nv];
        for part in Part::ALL {
            for x in params.vertices(part) {
                let ix = vertex(x);
                deg[ix] = params.degree(part) as i64;
                if x.index > 0 {
                    prev_same[ix] = Some(ix - 1);
                    next_same[ix - 1] = Some(ix);
                }
            }
        }
        Instance {
            params,
            edges,
            graph_edges,
            deg,
            incident,
            prev_same,
            next_same,
            hint,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labeling(&self, mask: u64) -> EdgeLabeling {
        let mut lab = EdgeLabeling::all_positive(self.params).expect("search instances are small");
        for (i, &e) in self.graph_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                lab.set(e, Sign::Negative);
            }
        }
        lab
    }

    pub fn mask(&self, lab: &EdgeLabeling) -> u64 {
        self.graph_edges
            .iter()
            .enumerate()
            .filter(|(_, &e)| lab.sign(e) == Sign::Negative)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    fn weight(&self, neg_count: u32) -> i64 {
        self.edges.len() as i64 - 2 * i64::from(neg_count)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Switches {
    pub symmetry: bool,
    pub bound: bool,
}

/// Best weight and its mask, shared by all workers.
pub(crate) struct Shared<'a> {
    pub best: AtomicI64,
    pub best_mask: Mutex<(i64, u64)>,
    pub cancel: &'a AtomicBool,
    pub aborted: AtomicBool,
}

impl<'a> Shared<'a> {
    pub fn new(weight: i64, mask: u64, cancel: &'a AtomicBool) -> Self {
        Shared {
            best: AtomicI64::new(weight),
            best_mask: Mutex::new((weight, mask)),
            cancel,
            aborted: AtomicBool::new(false),
        }
    }

    fn offer(&self, weight: i64, mask: u64) {
        if weight >= self.best.load(Ordering::Relaxed) {
            return;
        }
        let mut guard = self.best_mask.lock().unwrap();
        if weight < guard.0 {
            *guard = (weight, mask);
            self.best.fetch_min(weight, Ordering::Relaxed);
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub pruned_symmetry: u64,
    pub pruned_bound: u64,
    pub pruned_infeasible: u64,
}

impl Counters {
    pub fn add(&mut self, other: &Counters) {
        self.nodes += other.nodes;
        self.pruned_symmetry += other.pruned_symmetry;
        self.pruned_bound += other.pruned_bound;
        self.pruned_infeasible += other.pruned_infeasible;
    }
}

/// A partial assignment: the first `depth` edges are decided.
#[derive(Clone, Debug)]
pub(crate) struct State {
    pub depth: usize,
    pub mask: u64,
    neg: Vec<i64>,
    und: Vec<i64>,
    neg_count: u32,
}

impl State {
    pub fn root(inst: &Instance) -> Self {
        State {
            depth: 0,
            mask: 0,
            neg: vec![0; inst.deg.len()],
            und: inst.deg.clone(),
            neg_count: 0,
        }
    }
}

pub(crate) struct Worker<'i, 's, 'c> {
    pub inst: &'i Instance,
    pub shared: &'s Shared<'c>,
    pub switches: Switches,
    pub counters: Counters,
}

const CANCEL_POLL: u64 = 4096;

impl Worker<'_, '_, '_> {
    fn negative_first(&self, st: &State, a: usize, b: usize) -> bool {
        match &self.inst.hint {
            Some(q) => st.neg[a] < i64::from(q[a]) && st.neg[b] < i64::from(q[b]),
            None => true,
        }
    }

    fn apply(&self, st: &mut State, negative: bool) {
        let (a, b) = self.inst.edges[st.depth];
        st.und[a] -= 1;
        st.und[b] -= 1;
        if negative {
            st.neg[a] += 1;
            st.neg[b] += 1;
            st.neg_count += 1;
            st.mask |= 1 << st.depth;
        }
        st.depth += 1;
    }

    fn undo(&self, st: &mut State, negative: bool) {
        st.depth -= 1;
        let (a, b) = self.inst.edges[st.depth];
        st.und[a] += 1;
        st.und[b] += 1;
        if negative {
            st.neg[a] -= 1;
            st.neg[b] -= 1;
            st.neg_count -= 1;
            st.mask &= !(1 << st.depth);
        }
    }

    /// Parts may be permuted freely, so only labelings whose negative
    /// counts are non-increasing along each part need to be searched.
    fn symmetric_ok(&self, st: &State, a: usize, b: usize) -> bool {
        [a, b].iter().all(|&x| {
            let before = self.inst.prev_same[x]
                .map_or(true, |y| st.neg[y] + st.und[y] >= st.neg[x]);
            let after = self.inst.next_same[x]
                .map_or(true, |y| st.neg[x] + st.und[x] >= st.neg[y]);
            before && after
        })
    }

    /// Upper bound on f[e] for every edge at `a` or `b`, with undecided
    /// edges counted as +1: deg(c) + deg(d) - 2x - 2y - f(cd).
    fn feasible_around(&self, st: &State, a: usize, b: usize) -> bool {
        [a, b].iter().all(|&x| {
            self.inst.incident[x].iter().all(|&e| {
                let (c, d) = self.inst.edges[e];
                let s = if st.mask >> e & 1 == 1 { -1 } else { 1 };
                self.inst.deg[c] + self.inst.deg[d] - 2 * st.neg[c] - 2 * st.neg[d] - s >= 1
            })
        })
    }

    fn leaf_valid(&self, st: &State) -> bool {
        self.inst.edges.iter().enumerate().all(|(e, &(c, d))| {
            let s = if st.mask >> e & 1 == 1 { -1 } else { 1 };
            self.inst.deg[c] + self.inst.deg[d] - 2 * st.neg[c] - 2 * st.neg[d] - s >= 1
        })
    }

    fn bound_prunes(&self, st: &State) -> bool {
        let remaining = (self.inst.edge_count() - st.depth) as u32;
        self.inst.weight(st.neg_count + remaining) >= self.shared.best.load(Ordering::Relaxed)
    }

    fn poll_cancel(&mut self) -> bool {
        if (self.counters.nodes - 1) % CANCEL_POLL == 0 && self.shared.cancel.load(Ordering::Relaxed) {
            self.shared.aborted.store(true, Ordering::Relaxed);
        }
        self.shared.aborted.load(Ordering::Relaxed)
    }

    /// Tries one value for the next edge; false when a check rejects it.
    fn descend(&mut self, st: &mut State, negative: bool) -> bool {
        let (a, b) = self.inst.edges[st.depth];
        self.apply(st, negative);
        if self.switches.symmetry && !self.symmetric_ok(st, a, b) {
            self.counters.pruned_symmetry += 1;
            self.undo(st, negative);
            return false;
        }
        if self.switches.bound && negative && !self.feasible_around(st, a, b) {
            self.counters.pruned_infeasible += 1;
            self.undo(st, negative);
            return false;
        }
        true
    }

    pub fn dfs(&mut self, st: &mut State) {
        self.counters.nodes += 1;
        if self.poll_cancel() {
            return;
        }
        if self.switches.bound && self.bound_prunes(st) {
            self.counters.pruned_bound += 1;
            return;
        }
        if st.depth == self.inst.edge_count() {
            if self.switches.bound || self.leaf_valid(st) {
                debug_assert!(self.leaf_valid(st));
                self.shared.offer(self.inst.weight(st.neg_count), st.mask);
            }
            return;
        }
        let (a, b) = self.inst.edges[st.depth];
        let first = self.negative_first(st, a, b);
        for negative in [first, !first] {
            if self.descend(st, negative) {
                self.dfs(st);
                self.undo(st, negative);
            }
        }
    }

    /// Every surviving state at `depth`, in search order.
    pub fn prefixes(&mut self, st: &mut State, depth: usize, out: &mut Vec<State>) {
        self.counters.nodes += 1;
        if self.switches.bound && self.bound_prunes(st) {
            self.counters.pruned_bound += 1;
            return;
        }
        if st.depth == depth || st.depth == self.inst.edge_count() {
            out.push(st.clone());
            return;
        }
        let (a, b) = self.inst.edges[st.depth];
        let first = self.negative_first(st, a, b);
        for negative in [first, !first] {
            if self.descend(st, negative) {
                self.prefixes(st, depth, out);
                self.undo(st, negative);
            }
        }
    }
}
