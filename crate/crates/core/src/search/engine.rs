//! Depth-first row-by-row search over C4-free graphs.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use super::PruneCounts;
use crate::bits::Bits;
use crate::graph::choose2;

/// Instance data and enabled rules, shared read-only by all workers.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Params {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    /// Degree cap in force (already `n` when the rule is disabled).
    pub cap: usize,
    pub canonical: bool,
    pub coverage: bool,
    pub pair_budget: bool,
}

pub(crate) struct Shared {
    pub nodes: AtomicU64,
    pub node_budget: Option<u64>,
    pub deadline: Option<Instant>,
    pub exhausted: AtomicBool,
    /// Lowest prefix index known to contain a witness.
    pub best: AtomicUsize,
}

impl Shared {
    pub fn new(node_budget: Option<u64>, deadline: Option<Instant>) -> Self {
        Self {
            nodes: AtomicU64::new(0),
            node_budget,
            deadline,
            exhausted: AtomicBool::new(false),
            best: AtomicUsize::new(usize::MAX),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Found,
    /// Budget exhausted.
    Abort,
    /// A lower-indexed prefix already produced a witness.
    Cancelled,
}

const FLUSH_EVERY: u64 = 1024;

pub(crate) struct Worker<'a, B: Bits> {
    p: Params,
    shared: &'a Shared,
    index: usize,
    pub rows: Vec<B>,
    degs: Vec<usize>,
    union: B,
    /// `collinear.last()[c]` is the union of the rows containing column `c`.
    collinear: Vec<Vec<B>>,
    pairs_used: usize,
    pending_nodes: u64,
    pub prunes: PruneCounts,
    /// When set, partial assignments reaching this depth are recorded instead
    /// of explored.
    split_depth: Option<usize>,
    pub collected: Vec<Vec<B>>,
}

impl<'a, B: Bits> Worker<'a, B> {
    pub fn new(p: Params, shared: &'a Shared, index: usize) -> Self {
        Self {
            p,
            shared,
            index,
            rows: Vec::with_capacity(p.m),
            degs: Vec::with_capacity(p.m),
            union: B::empty(),
            collinear: vec![vec![B::empty(); p.n]],
            pairs_used: 0,
            pending_nodes: 0,
            prunes: PruneCounts::default(),
            split_depth: None,
            collected: Vec::new(),
        }
    }

    pub fn collecting(mut self, depth: usize) -> Self {
        self.split_depth = Some(depth);
        self
    }

    pub fn push(&mut self, row: B) {
        let mut col = self.collinear.last().expect("base layer").clone();
        for c in row.ones() {
            col[c] = col[c].or(row);
        }
        self.collinear.push(col);
        self.union = self.union.or(row);
        self.pairs_used += choose2(row.count());
        self.degs.push(row.count());
        self.rows.push(row);
    }

    fn pop(&mut self) {
        let row = self.rows.pop().expect("pop on empty assignment");
        self.degs.pop();
        self.collinear.pop();
        self.pairs_used -= choose2(row.count());
        self.union = self.rows.iter().fold(B::empty(), |acc, r| acc.or(*r));
    }

    /// Flushes the local node count; returns the flow the caller must obey.
    fn tick(&mut self) -> Flow {
        self.pending_nodes += 1;
        let eager = self.shared.node_budget.is_some();
        if !eager && self.pending_nodes < FLUSH_EVERY {
            return Flow::Continue;
        }
        self.flush()
    }

    pub fn flush(&mut self) -> Flow {
        let total = self
            .shared
            .nodes
            .fetch_add(self.pending_nodes, Ordering::Relaxed)
            + self.pending_nodes;
        self.pending_nodes = 0;
        if self.shared.best.load(Ordering::Relaxed) < self.index {
            return Flow::Cancelled;
        }
        let over_nodes = self.shared.node_budget.is_some_and(|b| total > b);
        let over_time = self.shared.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time || self.shared.exhausted.load(Ordering::Relaxed) {
            self.shared.exhausted.store(true, Ordering::Relaxed);
            return Flow::Abort;
        }
        Flow::Continue
    }

    /// Explores all canonical extensions of the current assignment. On
    /// `Flow::Found` the witness is left in `self.rows`.
    pub fn extend(&mut self) -> Flow {
        let p = self.p;
        let k = self.rows.len();
        let natural_max = match (p.canonical, self.degs.last()) {
            (true, Some(&d)) => d,
            _ => p.n,
        };
        let dmax = natural_max.min(p.cap);
        self.prunes.degree_cap += (natural_max - dmax) as u64;
        let demands = if p.coverage {
            self.coverage_demands()
        } else {
            Vec::new()
        };
        let mut reqs = Vec::with_capacity(demands.len());

        let (limit, room) = if p.canonical {
            let used = self.union.count();
            (used, p.n - used)
        } else {
            (p.n, 0)
        };
        let prev = if p.canonical && k > 0 {
            Some(self.rows[k - 1])
        } else {
            None
        };

        for d in (0..=dmax).rev() {
            // the new row must reach `need` columns outside U(S)
            reqs.clear();
            for &(union, missing, others) in &demands {
                let later_max = if p.canonical { d } else { p.cap };
                let need = missing.saturating_sub(others * later_max);
                if need > 0 {
                    reqs.push((union, need));
                }
            }
            if reqs.iter().any(|&(_, need)| need > d) {
                self.prunes.coverage += 1;
                continue;
            }
            let bound = prev.filter(|r| r.count() == d);
            let flow = self.choose(
                Choice {
                    d,
                    limit,
                    room,
                    tight: bound.is_some(),
                    prev: bound.unwrap_or(B::empty()),
                    reqs: &reqs,
                },
                0,
                B::empty(),
                0,
                B::range(0, limit),
            );
            if flow != Flow::Continue {
                return flow;
            }
        }
        Flow::Continue
    }

    /// Enumerates rows of degree `c.d` in decreasing lex order: old columns
    /// below `c.limit` pairwise non-collinear, topped up with fresh columns.
    fn choose(
        &mut self,
        c: Choice<'_, B>,
        col: usize,
        chosen: B,
        picked: usize,
        allowed: B,
    ) -> Flow {
        if picked == c.d {
            return self.try_row(chosen);
        }
        if col == c.limit {
            let fresh = c.d - picked;
            if fresh > c.room {
                return Flow::Continue;
            }
            let row = chosen.or(B::range(c.limit, c.limit + fresh));
            return self.try_row(row);
        }
        let ahead = allowed.and(B::range(col, c.limit));
        if picked + ahead.count() + c.room < c.d {
            return Flow::Continue;
        }
        let open = c.d - picked;
        for &(union, need) in c.reqs {
            let have = chosen.and_not(union).count();
            let reach = open.min(ahead.and_not(union).count() + c.room);
            if have + reach < need {
                self.prunes.coverage += 1;
                return Flow::Continue;
            }
        }
        let in_prev = c.prev.contains(col);
        if allowed.contains(col) {
            if c.tight && !in_prev {
                // would exceed the previous row in lex order
                self.prunes.canonical += 1;
            } else {
                let next_allowed = allowed.and_not(self.collinear.last().expect("layer")[col]);
                let flow = self.choose(c, col + 1, chosen.with(col), picked + 1, next_allowed);
                if flow != Flow::Continue {
                    return flow;
                }
            }
        }
        let c = Choice {
            tight: c.tight && !in_prev,
            ..c
        };
        self.choose(c, col + 1, chosen, picked, allowed)
    }

    fn try_row(&mut self, row: B) -> Flow {
        let flow = self.tick();
        if flow != Flow::Continue {
            return flow;
        }
        self.push(row);
        let flow = if self.pruned() {
            Flow::Continue
        } else if self.rows.len() == self.p.m {
            if self.leaf_is_good() {
                Flow::Found
            } else {
                Flow::Continue
            }
        } else if self.split_depth == Some(self.rows.len()) {
            self.collected.push(self.rows.clone());
            Flow::Continue
        } else {
            self.extend()
        };
        if flow != Flow::Found {
            self.pop();
        }
        flow
    }

    /// Minimum union size over all `s`-subsets of assigned rows, `s <= t`.
    fn min_coverage(&self) -> Vec<usize> {
        fn go<B: Bits>(
            rows: &[B],
            t: usize,
            start: usize,
            size: usize,
            union: B,
            best: &mut [usize],
        ) {
            let cov = union.count();
            if cov < best[size] {
                best[size] = cov;
            }
            if size == t {
                return;
            }
            for i in start..rows.len() {
                go(rows, t, i + 1, size + 1, union.or(rows[i]), best);
            }
        }
        let top = self.p.t.min(self.rows.len());
        let mut best = vec![usize::MAX; top + 1];
        go(&self.rows, top, 0, 0, B::empty(), &mut best);
        best
    }

    /// Coverage demands on the next row. For a set `S` of `s < t` assigned
    /// rows, the new row and `t - 1 - s` later rows must bring the union of
    /// `S` up to `n - t + 1` columns. Each entry is `(U(S), missing, later)`.
    fn coverage_demands(&self) -> Vec<(B, usize, usize)> {
        fn go<B: Bits>(
            w: &Worker<'_, B>,
            start: usize,
            size: usize,
            union: B,
            later: usize,
            out: &mut Vec<(B, usize, usize)>,
        ) {
            let p = w.p;
            let others = p.t - 1 - size;
            let target = (p.n + 1).saturating_sub(p.t);
            if others <= later {
                let missing = target.saturating_sub(union.count());
                if missing > 0 {
                    out.push((union, missing, others));
                }
            }
            if size + 1 == p.t {
                return;
            }
            for i in start..w.rows.len() {
                go(w, i + 1, size + 1, union.or(w.rows[i]), later, out);
            }
        }
        let later = self.p.m - self.rows.len() - 1;
        let mut out = Vec::new();
        go(self, 0, 0, B::empty(), later, &mut out);
        out
    }

    fn pruned(&mut self) -> bool {
        let p = self.p;
        if !(p.coverage || p.pair_budget) {
            return false;
        }
        let k = self.rows.len();
        let remaining = p.m - k;
        let min_cov = self.min_coverage();

        if p.coverage {
            // a fixed t-subset of assigned rows is final
            if k >= p.t && min_cov[p.t] + p.t <= p.n {
                self.prunes.coverage += 1;
                return true;
            }
            if remaining > 0 {
                let future = if p.canonical {
                    p.cap.min(self.degs[k - 1])
                } else {
                    p.cap
                };
                for (s, &cov) in min_cov.iter().enumerate().take(p.t.min(k + 1)) {
                    if p.t - s > remaining {
                        continue;
                    }
                    if cov + (p.t - s) * future + p.t <= p.n {
                        self.prunes.coverage += 1;
                        return true;
                    }
                }
            }
        }

        if p.pair_budget && remaining > 0 && k + 1 >= p.t {
            // every later row must reach this degree to keep t-subsets covered
            let need = (p.n + 1)
                .saturating_sub(p.t)
                .saturating_sub(min_cov[p.t - 1]);
            if self.pairs_used + remaining * choose2(need) > choose2(p.n) {
                self.prunes.pair_budget += 1;
                return true;
            }
        }
        false
    }

    fn leaf_is_good(&self) -> bool {
        let t = self.p.t;
        self.rows.len() < t || self.min_coverage()[t] + t > self.p.n
    }
}

#[derive(Clone, Copy)]
struct Choice<'r, B> {
    d: usize,
    limit: usize,
    room: usize,
    tight: bool,
    prev: B,
    /// `(U, need)`: at least `need` columns of the row lie outside `U`.
    reqs: &'r [(B, usize)],
}
