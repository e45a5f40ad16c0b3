//! Good colorings: the extremal constructions, verification, and certificates.
//!
//! A good coloring for `t` is a subgraph `G ⊆ K_{m,n}` with no `K_{2,2}` in
//! `G` and no `K_{t,t}` in the complement. Its existence shows that `K_{m,n}`
//! does not arrow `(K_{2,2}, K_{t,t})`, i.e. `BR_m(K_{2,2}, K_{t,t}) > n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{BicliqueSpec, BipartiteGraph};

/// Above this many `t`-row subsets the coverage histogram is not tabulated.
const MAX_COVERAGE_SUBSETS: u128 = 2_000_000;

/// 1-based column lists of the 6 x 39 construction.
const ROWS_6X39: [&[usize]; 6] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9],
    &[1, 10, 11, 12, 13, 14, 15, 16, 17],
    &[2, 10, 18, 19, 20, 21, 22, 23, 24],
    &[3, 11, 18, 25, 26, 27, 28, 29, 30],
    &[4, 12, 19, 25, 31, 32, 33, 34, 35],
    &[5, 13, 20, 26, 31, 36, 37, 38, 39],
];

/// 1-based column lists of the 8 x 29 construction.
const ROWS_8X29: [&[usize]; 8] = [
    &[1, 2, 3, 4, 5, 6, 7, 8],
    &[1, 9, 10, 11, 12, 13, 14],
    &[2, 9, 15, 16, 17, 18, 19],
    &[3, 10, 15, 20, 21, 22, 23],
    &[4, 11, 16, 20, 24, 25, 26],
    &[5, 12, 17, 21, 24, 27, 28],
    &[6, 13, 18, 22, 25, 27, 29],
    &[7, 14, 19, 23, 26, 28, 29],
];

fn from_one_based(n: usize, rows: &[&[usize]]) -> BipartiteGraph {
    let rows: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r.iter().map(|c| c - 1).collect())
        .collect();
    BipartiteGraph::from_rows(n, &rows).expect("fixture rows are in range")
}

/// Six rows of degree 9 over 39 columns, pairwise meeting in exactly one
/// column; any five rows leave four columns uncovered. Good for `t = 5`,
/// so `BR_6(K_{2,2}, K_{5,5}) >= 40`.
pub fn witness_6x39() -> BipartiteGraph {
    from_one_based(39, &ROWS_6X39)
}

/// Eight rows (degrees 8, 7, ..., 7) over 29 columns, pairwise meeting in
/// exactly one column. Any five rows cover at least 25 columns, so it is good
/// for `t = 5` and `BR_7, BR_8 >= 30`.
pub fn witness_8x29() -> BipartiteGraph {
    from_one_based(29, &ROWS_8X29)
}

/// Row 0 adjacent to every column, all other rows empty.
///
/// Good for `t` whenever `m - 1 < t` or `n < t`: the complement is confined to
/// the `m - 1` empty rows.
pub fn star_witness(m: usize, n: usize) -> crate::Result<BipartiteGraph> {
    let mut rows = vec![Vec::new(); m];
    if let Some(first) = rows.first_mut() {
        *first = (0..n).collect();
    }
    BipartiteGraph::from_rows(n, &rows)
}

/// Which forbidden pattern a coloring contains, with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `K_{2,2}` inside the graph.
    Left { rows: Vec<usize>, cols: Vec<usize> },
    /// `K_{t,t}` inside the complement.
    Right { rows: Vec<usize>, cols: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    /// Largest `|N(x_i) ∩ N(x_j)|` over distinct rows; 0 when `m < 2`.
    pub max_pair_intersection: usize,
    /// Intersection size -> number of row pairs with that size.
    pub pair_intersections: BTreeMap<usize, usize>,
    /// Smallest union size over all `t`-row subsets; `None` when `m < t`.
    pub min_t_coverage: Option<usize>,
    /// Covered count -> number of `t`-row subsets, when small enough to tabulate.
    pub t_coverage: Option<BTreeMap<usize, usize>>,
    pub violation: Option<Violation>,
}

impl VerificationReport {
    pub fn violation_summary(&self) -> String {
        let one_based = |v: &[usize]| {
            v.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.violation {
            None => "none".to_string(),
            Some(Violation::Left { rows, cols }) => {
                format!(
                    "K_{{2,2}} in G on rows {{{}}} x columns {{{}}}",
                    one_based(rows),
                    one_based(cols)
                )
            }
            Some(Violation::Right { rows, cols }) => format!(
                "K_{{{0},{0}}} in the complement on rows {{{1}}} x columns {{{2}}}",
                rows.len(),
                one_based(rows),
                one_based(cols)
            ),
        }
    }
}

/// A coloring together with the recomputed evidence for or against it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub graph: BipartiteGraph,
    pub t: usize,
    pub avoid_left: BicliqueSpec,
    pub avoid_right: BicliqueSpec,
    pub report: VerificationReport,
}

impl WitnessCertificate {
    pub fn is_valid(&self) -> bool {
        self.report.violation.is_none()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn coverage_histogram(g: &BipartiteGraph, t: usize) -> BTreeMap<usize, usize> {
    fn go(
        g: &BipartiteGraph,
        t: usize,
        start: usize,
        depth: usize,
        union: crate::ColSet,
        hist: &mut BTreeMap<usize, usize>,
    ) {
        use crate::Bits;
        if depth == t {
            *hist.entry(union.count()).or_default() += 1;
            return;
        }
        for i in start..=g.m() - (t - depth) {
            go(g, t, i + 1, depth + 1, union.or(g.rows()[i]), hist);
        }
    }
    let mut hist = BTreeMap::new();
    go(g, t, 0, 0, crate::ColSet::new(), &mut hist);
    hist
}

/// Checks that `g` avoids `K_{2,2}` and its complement avoids `K_{t,t}`.
///
/// An invalid coloring is not an error: the certificate's report names the
/// offending rows and columns. Only `t = 0` is rejected.
pub fn verify_good_coloring(g: &BipartiteGraph, t: usize) -> crate::Result<WitnessCertificate> {
    let avoid_left = BicliqueSpec::square(2)?;
    let avoid_right = BicliqueSpec::square(t)?;
    let m = g.m();

    let mut pair_intersections = BTreeMap::new();
    for i in 0..m {
        for j in i + 1..m {
            *pair_intersections
                .entry(g.row_intersection_size(i, j)?)
                .or_default() += 1;
        }
    }
    let max_pair_intersection = pair_intersections.keys().next_back().copied().unwrap_or(0);

    let t_coverage =
        (m >= t && binomial(m, t) <= MAX_COVERAGE_SUBSETS).then(|| coverage_histogram(g, t));
    let min_t_coverage = t_coverage.as_ref().and_then(|h| h.keys().next().copied());

    let violation = if let Some(b) = g.find_biclique(avoid_left) {
        Some(Violation::Left {
            rows: b.rows,
            cols: b.cols,
        })
    } else {
        g.complement()
            .find_biclique(avoid_right)
            .map(|b| Violation::Right {
                rows: b.rows,
                cols: b.cols,
            })
    };

    Ok(WitnessCertificate {
        graph: g.clone(),
        t,
        avoid_left,
        avoid_right,
        report: VerificationReport {
            degrees: g.degrees(),
            max_degree: g.max_row_degree(),
            max_pair_intersection,
            pair_intersections,
            min_t_coverage,
            t_coverage,
            violation,
        },
    })
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees = self
            .degrees
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(f, "row degrees: {degrees}")?;
        writeln!(f, "max degree: {}", self.max_degree)?;
        writeln!(
            f,
            "max pairwise intersection: {}",
            self.max_pair_intersection
        )?;
        for (size, count) in &self.pair_intersections {
            writeln!(f, "  pairs with intersection {size}: {count}")?;
        }
        match self.min_t_coverage {
            Some(min) => writeln!(f, "min t-subset coverage: {min}")?,
            None => writeln!(f, "min t-subset coverage: n/a")?,
        }
        if let Some(hist) = &self.t_coverage {
            for (covered, count) in hist {
                writeln!(f, "  t-subsets covering {covered}: {count}")?;
            }
        }
        write!(f, "violation: {}", self.violation_summary())
    }
}
