//! Bipartite graphs `G ⊆ K_{m,n}` stored as one column bitset per row.

use std::fmt;

use crate::bits::{narrow, Bits, ColSet, MAX_COLUMNS};
use crate::error::{Error, Result};

/// An `m x n` bipartite graph. Row `i` holds `N(x_i)`, the columns adjacent
/// to the `i`-th vertex of the X side. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    n: usize,
    rows: Vec<ColSet>,
}

/// The complete bipartite pattern `K_{s,t}`: `s` rows by `t` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BicliqueSpec {
    s: usize,
    t: usize,
}

impl BicliqueSpec {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::EmptyPattern { s, t });
        }
        Ok(Self { s, t })
    }

    /// `K_{t,t}`.
    pub fn square(t: usize) -> Result<Self> {
        Self::new(t, t)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn transposed(&self) -> Self {
        Self {
            s: self.t,
            t: self.s,
        }
    }
}

impl fmt::Display for BicliqueSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{{{},{}}}", self.s, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub row_subset: Vec<usize>,
    pub covered: usize,
    pub uncovered: usize,
}

/// Column pairs consumed by the rows versus the pairs available.
///
/// In a C4-free graph no column pair lies in two rows, so `used <= capacity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairBudget {
    pub used: usize,
    pub capacity: usize,
}

/// An occurrence of a biclique: the row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub(crate) fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 || m > MAX_COLUMNS || n > MAX_COLUMNS {
        return Err(Error::BadDimensions {
            m,
            n,
            max: MAX_COLUMNS,
        });
    }
    Ok(())
}

impl BipartiteGraph {
    pub fn new(n: usize, rows: Vec<ColSet>) -> Result<Self> {
        check_dims(rows.len(), n)?;
        if let Some(bad) = rows.iter().filter_map(ColSet::last).find(|&c| c >= n) {
            return Err(Error::ColumnOutOfRange { index: bad, n });
        }
        Ok(Self { n, rows })
    }

    /// Builds a graph from 0-based column lists.
    pub fn from_rows<R: AsRef<[usize]>>(n: usize, rows: &[R]) -> Result<Self> {
        let mut sets = Vec::with_capacity(rows.len());
        for row in rows {
            let mut set = ColSet::new();
            for &c in row.as_ref() {
                if c >= n {
                    return Err(Error::ColumnOutOfRange { index: c, n });
                }
                set.insert(c);
            }
            sets.push(set);
        }
        Self::new(n, sets)
    }

    pub fn empty(m: usize, n: usize) -> Result<Self> {
        check_dims(m, n)?;
        Ok(Self {
            n,
            rows: vec![ColSet::new(); m],
        })
    }

    pub fn complete(m: usize, n: usize) -> Result<Self> {
        check_dims(m, n)?;
        Ok(Self {
            n,
            rows: vec![ColSet::range(0, n); m],
        })
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[ColSet] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Result<&ColSet> {
        self.rows.get(i).ok_or(Error::RowOutOfRange {
            index: i,
            m: self.m(),
        })
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows.get(i).is_some_and(|r| r.contains(j))
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(ColSet::len).sum()
    }

    /// The same graph with edge `(i, j)` present.
    pub fn with_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.row(i)?;
        if j >= self.n {
            return Err(Error::ColumnOutOfRange {
                index: j,
                n: self.n,
            });
        }
        let mut g = self.clone();
        g.rows[i].insert(j);
        Ok(g)
    }

    /// Keeps only the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        let picked = rows
            .iter()
            .map(|&i| self.row(i).copied())
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.n, picked)
    }

    pub fn degree(&self, i: usize) -> Result<usize> {
        Ok(self.row(i)?.len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(ColSet::len).collect()
    }

    /// Maximum row degree; 0 for an edgeless graph.
    pub fn max_row_degree(&self) -> usize {
        self.rows.iter().map(ColSet::len).max().unwrap_or(0)
    }

    pub fn row_intersection_size(&self, i: usize, j: usize) -> Result<usize> {
        if i == j {
            self.row(i)?;
            return Err(Error::SameRow(i));
        }
        Ok(self.row(i)?.and(*self.row(j)?).len())
    }

    /// Every two rows share at most one column.
    pub fn is_c4_free(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i + 1..].iter().all(|b| a.and(*b).count() <= 1))
    }

    /// Complement within `K_{m,n}`.
    pub fn complement(&self) -> Self {
        let full = ColSet::range(0, self.n);
        Self {
            n: self.n,
            rows: self.rows.iter().map(|r| full.and_not(*r)).collect(),
        }
    }

    /// Swaps the two sides: the result is `n x m`.
    pub fn transpose(&self) -> Self {
        let mut rows = vec![ColSet::new(); self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter() {
                rows[j].insert(i);
            }
        }
        Self { n: self.m(), rows }
    }

    pub fn union_coverage(&self, subset: &[usize]) -> Result<CoverageReport> {
        let mut union = ColSet::new();
        for &i in subset {
            union = union.or(*self.row(i)?);
        }
        let covered = union.len();
        Ok(CoverageReport {
            row_subset: subset.to_vec(),
            covered,
            uncovered: self.n - covered,
        })
    }

    pub fn pair_budget(&self) -> PairBudget {
        PairBudget {
            used: self.rows.iter().map(|r| choose2(r.len())).sum(),
            capacity: choose2(self.n),
        }
    }

    pub fn contains_biclique(&self, spec: BicliqueSpec) -> bool {
        self.find_biclique(spec).is_some()
    }

    /// Finds `s` rows and `t` columns spanning a complete subgraph, if any.
    ///
    /// Branches over row subsets carrying the running column intersection.
    /// When `s > t` the search runs on the transpose so that the branching
    /// side is the smaller one.
    pub fn find_biclique(&self, spec: BicliqueSpec) -> Option<Biclique> {
        let (s, t) = (spec.s, spec.t);
        if s > self.m() || t > self.n {
            return None;
        }
        if s > t {
            let found = self.transpose().find_biclique(spec.transposed())?;
            return Some(Biclique {
                rows: found.cols,
                cols: found.rows,
            });
        }
        let (rows, common) = match narrow(self.n, &self.rows) {
            Some(words) => {
                let (rows, common) = biclique_rows(&words, self.n, s, t)?;
                (rows, ColSet::from_word(common))
            }
            None => biclique_rows(&self.rows, self.n, s, t)?,
        };
        Some(Biclique {
            rows,
            cols: common.iter().take(t).collect(),
        })
    }
}

fn biclique_rows<B: Bits>(rows: &[B], n: usize, s: usize, t: usize) -> Option<(Vec<usize>, B)> {
    fn go<B: Bits>(
        rows: &[B],
        s: usize,
        t: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        common: B,
    ) -> Option<B> {
        if chosen.len() == s {
            return Some(common);
        }
        let need = s - chosen.len();
        for i in start..rows.len() {
            if rows.len() - i < need {
                break;
            }
            let next = common.and(rows[i]);
            if next.count() < t {
                continue;
            }
            chosen.push(i);
            if let Some(found) = go(rows, s, t, i + 1, chosen, next) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let mut chosen = Vec::with_capacity(s);
    let common = go(rows, s, t, 0, &mut chosen, B::range(0, n))?;
    Some((chosen, common))
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BipartiteGraph({}x{}) ", self.m(), self.n)?;
        f.debug_list().entries(self.rows.iter()).finish()
    }
}
