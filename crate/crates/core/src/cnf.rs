//! CNF encoding of the arrowing question, for external SAT solvers.
//!
//! Variable `v(i, j) = i * n + j + 1` is the edge between row `i` and column
//! `j` (0-based). The formula is satisfiable exactly when a good coloring
//! exists, i.e. when `K_{m,n}` does *not* arrow `(K_{2,2}, K_{t,t})`:
//!
//! * for rows `i < i'` and columns `j < j'`:
//!   `¬v(i,j) ∨ ¬v(i,j') ∨ ¬v(i',j) ∨ ¬v(i',j')` (no `K_{2,2}`);
//! * for every `t`-set of rows `R` and `t`-set of columns `C`:
//!   `∨_{i∈R, j∈C} v(i,j)` (no `K_{t,t}` in the complement).
//!
//! Clauses are emitted in exactly that order, each family lexicographic.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::graph::{choose2, BipartiteGraph};
use crate::search::ArrowingInstance;
use crate::witness::{verify_good_coloring, WitnessCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    m: usize,
    n: usize,
    t: usize,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for pos in (0..k).rev() {
        if c[pos] < n - k + pos {
            c[pos] += 1;
            for q in pos + 1..k {
                c[q] = c[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn encode_cnf(inst: ArrowingInstance) -> Result<CnfInstance> {
    let (m, n, t) = (inst.m(), inst.n(), inst.t());
    if t > m.min(n) {
        return Err(Error::Usage(format!(
            "CNF export needs t <= min(m, n), got t={t} for {m}x{n}"
        )));
    }
    Ok(CnfInstance { m, n, t })
}

impl CnfInstance {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn var(&self, i: usize, j: usize) -> i64 {
        (i * self.n + j + 1) as i64
    }

    pub fn num_vars(&self) -> usize {
        self.m * self.n
    }

    pub fn num_clauses(&self) -> u64 {
        (choose2(self.m) * choose2(self.n)) as u64
            + binomial(self.m, self.t) * binomial(self.n, self.t)
    }

    /// Calls `f` on every clause, in output order.
    pub fn for_each_clause<F: FnMut(&[i64])>(&self, mut f: F) {
        let (m, n, t) = (self.m, self.n, self.t);
        for i in 0..m {
            for i2 in i + 1..m {
                for j in 0..n {
                    for j2 in j + 1..n {
                        f(&[
                            -self.var(i, j),
                            -self.var(i, j2),
                            -self.var(i2, j),
                            -self.var(i2, j2),
                        ]);
                    }
                }
            }
        }
        let mut rows: Vec<usize> = (0..t).collect();
        let mut clause = Vec::with_capacity(t * t);
        loop {
            let mut cols: Vec<usize> = (0..t).collect();
            loop {
                clause.clear();
                for &i in &rows {
                    clause.extend(cols.iter().map(|&j| self.var(i, j)));
                }
                f(&clause);
                if !next_combination(&mut cols, n) {
                    break;
                }
            }
            if !next_combination(&mut rows, m) {
                break;
            }
        }
    }

    pub fn clauses(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.for_each_clause(|c| out.push(c.to_vec()));
        out
    }

    pub fn write_dimacs<W: Write>(&self, out: W) -> io::Result<()> {
        let mut out = io::BufWriter::with_capacity(1 << 16, out);
        writeln!(out, "p cnf {} {}", self.num_vars(), self.num_clauses())?;
        let mut line = String::new();
        let mut result = Ok(());
        self.for_each_clause(|c| {
            if result.is_err() {
                return;
            }
            line.clear();
            for lit in c {
                line.push_str(&lit.to_string());
                line.push(' ');
            }
            line.push_str("0\n");
            result = out.write_all(line.as_bytes());
        });
        result?;
        out.flush()
    }

    pub fn to_dimacs(&self) -> String {
        let mut buf = Vec::new();
        self.write_dimacs(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii")
    }

    /// The assignment describing `g`; `g` must be `m x n`.
    pub fn model_of(&self, g: &BipartiteGraph) -> Vec<bool> {
        assert_eq!(
            (g.m(), g.n()),
            (self.m, self.n),
            "graph shape differs from the instance"
        );
        (0..self.m)
            .flat_map(|i| (0..self.n).map(move |j| g.has_edge(i, j)))
            .collect()
    }

    pub fn satisfied_by(&self, model: &[bool]) -> bool {
        let mut all = true;
        self.for_each_clause(|c| {
            all &= c
                .iter()
                .any(|&l| model[(l.unsigned_abs() - 1) as usize] == (l > 0));
        });
        all
    }
}

/// Turns a satisfying assignment into a verified good coloring.
///
/// An assignment that decodes to an invalid coloring signals an encoder or
/// solver bug and is reported as [`Error::Integrity`].
pub fn decode_model(inst: &CnfInstance, model: &[bool]) -> Result<WitnessCertificate> {
    if model.len() != inst.num_vars() {
        return Err(Error::Usage(format!(
            "model assigns {} variables, instance has {}",
            model.len(),
            inst.num_vars()
        )));
    }
    let rows: Vec<Vec<usize>> = (0..inst.m)
        .map(|i| (0..inst.n).filter(|&j| model[i * inst.n + j]).collect())
        .collect();
    let g = BipartiteGraph::from_rows(inst.n, &rows)?;
    let cert = verify_good_coloring(&g, inst.t)?;
    if !cert.is_valid() {
        return Err(Error::Integrity(Box::new(cert)));
    }
    Ok(cert)
}

/// Reads a solver model: `v`-prefixed lines as in SAT competition output, or
/// bare literals. `c` and `s` lines are skipped; `0` terminates nothing.
pub fn parse_model(text: &str, num_vars: usize) -> Result<Vec<bool>> {
    let mut model = vec![None; num_vars];
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(status) = line.strip_prefix('s') {
            if status.trim() == "UNSATISFIABLE" {
                return Err(Error::parse(k + 1, "solver reports UNSATISFIABLE"));
            }
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::parse(k + 1, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                continue;
            }
            let v = lit.unsigned_abs() as usize;
            if v > num_vars {
                return Err(Error::parse(
                    k + 1,
                    format!("variable {v} exceeds {num_vars}"),
                ));
            }
            model[v - 1] = Some(lit > 0);
        }
    }
    model
        .iter()
        .enumerate()
        .map(|(v, a)| {
            a.ok_or_else(|| Error::Usage(format!("model does not assign variable {}", v + 1)))
        })
        .collect()
}
