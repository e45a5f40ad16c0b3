//! Deciding `K_{m,n} -> (K_{2,2}, K_{t,t})` and computing `BR_m`.
//!
//! Arrowing is used in the standard sense: `K_{m,n}` arrows the pair when
//! *no* good coloring exists. The search extends a C4-free graph one row at a
//! time, in canonical order, cutting partial assignments with the rules in
//! [`PruneRule`].

mod canonical;
mod engine;
mod rules;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

pub use canonical::canonical_extension_ok;
pub use rules::{degree_cap, nonexistence_criterion};

use crate::bits::{Bits, ColSet};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::known::{BrValue, KnownValueRecord, Provenance};
use crate::witness::{star_witness, verify_good_coloring, WitnessCertificate};
use engine::{Flow, Params, Shared, Worker};

/// Partial assignments are split into independent subtrees at this depth.
const SPLIT_DEPTH: usize = 2;

/// The question "does `K_{m,n}` arrow `(K_{2,2}, K_{t,t})`?".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArrowingInstance {
    m: usize,
    n: usize,
    t: usize,
}

impl ArrowingInstance {
    pub fn new(m: usize, n: usize, t: usize) -> Result<Self> {
        if m == 0 || n == 0 || t == 0 {
            return Err(Error::Usage(format!(
                "m, n and t must be positive (got m={m} n={n} t={t})"
            )));
        }
        if m > crate::MAX_COLUMNS || n > crate::MAX_COLUMNS {
            return Err(Error::BadDimensions {
                m,
                n,
                max: crate::MAX_COLUMNS,
            });
        }
        Ok(Self { m, n, t })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }
}

impl fmt::Display for ArrowingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K_{{{},{}}} -> (K_{{2,2}}, K_{{{t},{t}}})",
            self.m,
            self.n,
            t = self.t
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PruneRule {
    DegreeCap,
    PairBudget,
    Coverage,
    Canonical,
}

impl PruneRule {
    pub const ALL: [PruneRule; 4] = [
        PruneRule::DegreeCap,
        PruneRule::PairBudget,
        PruneRule::Coverage,
        PruneRule::Canonical,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PruneRule::DegreeCap => "degree-cap",
            PruneRule::PairBudget => "pair-budget",
            PruneRule::Coverage => "coverage",
            PruneRule::Canonical => "canonical",
        }
    }
}

impl fmt::Display for PruneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PruneRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PruneRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown pruning rule {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PruneToggles {
    pub degree_cap: bool,
    pub pair_budget: bool,
    pub coverage: bool,
    pub canonical: bool,
}

impl Default for PruneToggles {
    fn default() -> Self {
        Self {
            degree_cap: true,
            pair_budget: true,
            coverage: true,
            canonical: true,
        }
    }
}

impl PruneToggles {
    pub fn none() -> Self {
        Self {
            degree_cap: false,
            pair_budget: false,
            coverage: false,
            canonical: false,
        }
    }

    pub fn without(mut self, rule: PruneRule) -> Self {
        match rule {
            PruneRule::DegreeCap => self.degree_cap = false,
            PruneRule::PairBudget => self.pair_budget = false,
            PruneRule::Coverage => self.coverage = false,
            PruneRule::Canonical => self.canonical = false,
        }
        self
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Maximum number of candidate rows tried.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Worker threads; results do not depend on it.
    pub threads: usize,
    pub prune: PruneToggles,
    /// A complete coloring checked before searching.
    pub seed: Option<BipartiteGraph>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: None,
            time_budget: None,
            threads: 1,
            prune: PruneToggles::default(),
            seed: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PruneCounts {
    /// Degree values excluded by the cap.
    pub degree_cap: u64,
    pub pair_budget: u64,
    pub coverage: u64,
    /// Candidate branches skipped for breaking canonical order.
    pub canonical: u64,
}

impl PruneCounts {
    fn merge(&mut self, other: &PruneCounts) {
        self.degree_cap += other.degree_cap;
        self.pair_budget += other.pair_budget;
        self.coverage += other.coverage;
        self.canonical += other.canonical;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidate rows tried.
    pub nodes: u64,
    pub prunes: PruneCounts,
    pub elapsed: Duration,
    pub seeded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Exhausted: every subgraph has `K_{2,2}` or a complement `K_{t,t}`.
    Arrows,
    /// A verified good coloring.
    NotArrows(Box<WitnessCertificate>),
    BudgetExhausted,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Arrows => "ARROWS",
            Verdict::NotArrows(_) => "NOT_ARROWS",
            Verdict::BudgetExhausted => "BUDGET_EXHAUSTED",
        }
    }

    pub fn witness(&self) -> Option<&WitnessCertificate> {
        match self {
            Verdict::NotArrows(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

fn certify(g: BipartiteGraph, t: usize) -> Box<WitnessCertificate> {
    let cert = verify_good_coloring(&g, t).expect("t is positive");
    assert!(
        cert.is_valid(),
        "search produced an invalid coloring: {}",
        cert.report.violation_summary()
    );
    Box::new(cert)
}

/// Decides whether `K_{m,n}` arrows `(K_{2,2}, K_{t,t})` within the budget.
pub fn arrows(inst: ArrowingInstance, cfg: &SearchConfig) -> SearchOutcome {
    let start = Instant::now();
    if let Some(seed) = &cfg.seed {
        if seed.m() == inst.m && seed.n() == inst.n {
            let cert = verify_good_coloring(seed, inst.t).expect("t is positive");
            if cert.is_valid() {
                let stats = SearchStats {
                    elapsed: start.elapsed(),
                    seeded: true,
                    ..SearchStats::default()
                };
                return SearchOutcome {
                    verdict: Verdict::NotArrows(Box::new(cert)),
                    stats,
                };
            }
        }
    }
    let (verdict, mut stats) = if inst.n <= 64 {
        run::<u64>(inst, cfg)
    } else {
        run::<ColSet>(inst, cfg)
    };
    stats.elapsed = start.elapsed();
    SearchOutcome { verdict, stats }
}

trait Widen: Bits {
    fn widen(self) -> ColSet;
}

impl Widen for u64 {
    fn widen(self) -> ColSet {
        ColSet::from_word(self)
    }
}

impl Widen for ColSet {
    fn widen(self) -> ColSet {
        self
    }
}

enum PrefixResult<B> {
    Exhausted,
    Found(Vec<B>),
    Aborted,
    Skipped,
}

fn run<B: Widen>(inst: ArrowingInstance, cfg: &SearchConfig) -> (Verdict, SearchStats) {
    let params = Params {
        m: inst.m,
        n: inst.n,
        t: inst.t,
        cap: if cfg.prune.degree_cap {
            degree_cap(inst.m, inst.n, inst.t)
        } else {
            inst.n
        },
        canonical: cfg.prune.canonical,
        coverage: cfg.prune.coverage,
        pair_budget: cfg.prune.pair_budget,
    };
    let shared = Shared::new(cfg.node_budget, cfg.time_budget.map(|d| Instant::now() + d));
    let mut prunes = PruneCounts::default();

    let split = SPLIT_DEPTH.min(inst.m - 1);
    let prefixes: Vec<Vec<B>> = if split == 0 {
        vec![Vec::new()]
    } else {
        let mut collector = Worker::<B>::new(params, &shared, 0).collecting(split);
        let flow = collector.extend();
        collector.flush();
        prunes.merge(&collector.prunes);
        if flow == Flow::Abort {
            return (Verdict::BudgetExhausted, stats_of(&shared, prunes));
        }
        std::mem::take(&mut collector.collected)
    };

    let results: Vec<Mutex<PrefixResult<B>>> = prefixes
        .iter()
        .map(|_| Mutex::new(PrefixResult::Skipped))
        .collect();
    let merged = Mutex::new(prunes);
    let next = AtomicUsize::new(0);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= prefixes.len() {
            break;
        }
        if shared.best.load(Ordering::Relaxed) < i {
            continue;
        }
        let mut w = Worker::<B>::new(params, &shared, i);
        for row in &prefixes[i] {
            w.push(*row);
        }
        let flow = w.extend();
        w.flush();
        merged.lock().expect("poisoned").merge(&w.prunes);
        let result = match flow {
            Flow::Continue => PrefixResult::Exhausted,
            Flow::Found => {
                shared.best.fetch_min(i, Ordering::Relaxed);
                PrefixResult::Found(w.rows)
            }
            Flow::Abort => PrefixResult::Aborted,
            Flow::Cancelled => PrefixResult::Skipped,
        };
        *results[i].lock().expect("poisoned") = result;
    };

    let threads = cfg.threads.max(1).min(prefixes.len().max(1));
    if threads == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(work);
            }
        });
    }

    let stats = stats_of(&shared, merged.into_inner().expect("poisoned"));
    let results: Vec<PrefixResult<B>> = results
        .into_iter()
        .map(|r| r.into_inner().expect("poisoned"))
        .collect();
    if let Some(rows) = results.iter().find_map(|r| match r {
        PrefixResult::Found(rows) => Some(rows),
        _ => None,
    }) {
        let g = BipartiteGraph::new(inst.n, rows.iter().map(|r| r.widen()).collect())
            .expect("rows fit");
        return (Verdict::NotArrows(certify(g, inst.t)), stats);
    }
    if results
        .iter()
        .any(|r| !matches!(r, PrefixResult::Exhausted))
    {
        return (Verdict::BudgetExhausted, stats);
    }
    (Verdict::Arrows, stats)
}

fn stats_of(shared: &Shared, prunes: PruneCounts) -> SearchStats {
    SearchStats {
        nodes: shared.nodes.load(Ordering::Relaxed),
        prunes,
        ..SearchStats::default()
    }
}

/// Computes `BR_m(K_{2,2}, K_{t,t})` by scanning `n = t, t + 1, ..., n_limit`.
///
/// Arrowing is monotone in `n` (restricting a good coloring of `K_{m,n+1}`
/// to `n` columns keeps it good), so the first `ARROWS` is the value.
pub fn find_br_m(
    m: usize,
    t: usize,
    n_limit: usize,
    cfg: &SearchConfig,
) -> Result<KnownValueRecord> {
    if m == 0 || t == 0 || n_limit == 0 {
        return Err(Error::Usage(format!(
            "m, t and the n limit must be positive (got m={m} t={t} limit={n_limit})"
        )));
    }
    if nonexistence_criterion(m, t) {
        let witness = verify_good_coloring(&star_witness(m, n_limit)?, t)?;
        return Ok(KnownValueRecord {
            m,
            left: 2,
            t,
            value: BrValue::Nonexistent,
            lower: Provenance::VerifiedWitness,
            upper: None,
            witness: Some(witness),
            note: Some("m ≤ t: star construction".into()),
        });
    }

    let start = t.max(1);
    // Below t columns the complement cannot hold K_{t,t}; the empty graph is good.
    let mut last_witness = if start > 1 {
        Some(verify_good_coloring(
            &BipartiteGraph::empty(m, start - 1)?,
            t,
        )?)
    } else {
        None
    };
    for n in start..=n_limit {
        let outcome = arrows(ArrowingInstance::new(m, n, t)?, cfg);
        match outcome.verdict {
            Verdict::Arrows => {
                return Ok(KnownValueRecord {
                    m,
                    left: 2,
                    t,
                    value: BrValue::Exact(n),
                    lower: Provenance::Searched,
                    upper: Some(Provenance::Searched),
                    witness: last_witness,
                    note: None,
                });
            }
            Verdict::NotArrows(cert) => last_witness = Some(*cert),
            Verdict::BudgetExhausted => {
                return Ok(KnownValueRecord {
                    m,
                    left: 2,
                    t,
                    value: BrValue::AtLeast(n),
                    lower: Provenance::Searched,
                    upper: None,
                    witness: last_witness,
                    note: Some(format!("budget exhausted at n={n}")),
                });
            }
        }
    }
    Ok(KnownValueRecord {
        m,
        left: 2,
        t,
        value: BrValue::AtLeast(n_limit + 1),
        lower: Provenance::Searched,
        upper: None,
        witness: last_witness,
        note: Some(format!("n limit {n_limit} reached without arrowing")),
    })
}
