//! Brute-force reference implementations used by the test suites.
//!
//! Nothing here shares code with the library's algorithms: graphs are plain
//! boolean matrices and every question is answered by enumerating subsets.

/// `adj[i][j]` is the edge between row `i` and column `j`.
pub type Matrix = Vec<Vec<bool>>;

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

pub fn contains_biclique(adj: &Matrix, s: usize, t: usize) -> bool {
    let m = adj.len();
    let n = adj.first().map_or(0, Vec::len);
    let col_sets = subsets(n, t);
    subsets(m, s).iter().any(|rs| {
        col_sets
            .iter()
            .any(|cs| rs.iter().all(|&i| cs.iter().all(|&j| adj[i][j])))
    })
}

pub fn complement(adj: &Matrix) -> Matrix {
    adj.iter().map(|r| r.iter().map(|b| !b).collect()).collect()
}

/// No `K_{2,2}` in the graph and no `K_{t,t}` in its complement.
pub fn is_good(adj: &Matrix, t: usize) -> bool {
    !contains_biclique(adj, 2, 2) && !contains_biclique(&complement(adj), t, t)
}

pub fn matrix_from_mask(m: usize, n: usize, mask: u64) -> Matrix {
    (0..m)
        .map(|i| (0..n).map(|j| mask >> (i * n + j) & 1 == 1).collect())
        .collect()
}

/// Standard arrowing by enumerating all `2^{mn}` subgraphs of `K_{m,n}`.
pub fn exhaustive_arrows(m: usize, n: usize, t: usize) -> bool {
    assert!(m * n <= 24, "exhaustive oracle limited to 24 edges");
    !(0u64..1 << (m * n)).any(|mask| is_good(&matrix_from_mask(m, n, mask), t))
}

/// Arrowing with row symmetry removed: rows are enumerated as a
/// non-decreasing sequence of `n`-bit masks. Partial row sets that already
/// fail are cut, since adding rows never removes a pattern.
pub fn row_canonical_good_coloring(m: usize, n: usize, t: usize) -> Option<Matrix> {
    fn to_matrix(rows: &[u32], n: usize) -> Matrix {
        rows.iter()
            .map(|r| (0..n).map(|j| r >> j & 1 == 1).collect())
            .collect()
    }
    fn go(m: usize, n: usize, t: usize, rows: &mut Vec<u32>) -> Option<Matrix> {
        if rows.len() == m {
            return Some(to_matrix(rows, n));
        }
        let start = rows.last().copied().unwrap_or(0);
        for r in start..(1u32 << n) {
            rows.push(r);
            if is_good(&to_matrix(rows, n), t) {
                if let Some(found) = go(m, n, t, rows) {
                    return Some(found);
                }
            }
            rows.pop();
        }
        None
    }
    assert!(n <= 16);
    go(m, n, t, &mut Vec::new())
}

pub fn row_canonical_arrows(m: usize, n: usize, t: usize) -> bool {
    row_canonical_good_coloring(m, n, t).is_none()
}

/// Least `n <= limit` with `K_{m,n}` arrowing, by the row-canonical oracle.
pub fn least_arrowing_n(m: usize, t: usize, limit: usize) -> Option<usize> {
    (1..=limit).find(|&n| row_canonical_arrows(m, n, t))
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Naive satisfiability check by trying every assignment.
pub fn brute_force_sat(num_vars: usize, clauses: &[Vec<i64>]) -> bool {
    assert!(num_vars <= 24);
    (0u64..1 << num_vars).any(|a| {
        clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let v = (l.unsigned_abs() - 1) as usize;
                (a >> v & 1 == 1) == (l > 0)
            })
        })
    })
}
