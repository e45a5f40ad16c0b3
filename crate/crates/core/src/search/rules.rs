/// Largest row degree a good coloring of `K_{m,n}` for `(K_{2,2}, K_{t,t})`
/// can have.
///
/// A row `x` of degree `2t` forces `K_{t,t}` in the complement once there are
/// `t` other rows: each of them meets `N(x)` in at most one column, so any
/// `t` of them leave at least `t` columns of `N(x)` uncovered. Hence the cap is
/// `2t - 1` when `m >= t + 1` and `n >= 2t`, and `n` otherwise.
pub fn degree_cap(m: usize, n: usize, t: usize) -> usize {
    if m > t && n >= 2 * t {
        2 * t - 1
    } else {
        n
    }
}

/// True when `BR_m(K_{2,2}, K_{t,t})` does not exist.
///
/// With `m <= t` the star coloring (one full row, the rest empty) is good for
/// every `n`: its complement lives on `m - 1 < t` rows.
pub fn nonexistence_criterion(m: usize, t: usize) -> bool {
    m <= t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_values() {
        assert_eq!(degree_cap(6, 40, 5), 9);
        assert_eq!(degree_cap(7, 30, 5), 9);
        assert_eq!(degree_cap(3, 100, 5), 100);
        assert_eq!(degree_cap(6, 9, 5), 9);
        assert_eq!(degree_cap(3, 4, 2), 3);
    }

    #[test]
    fn nonexistence_values() {
        assert!(nonexistence_criterion(5, 5));
        assert!(!nonexistence_criterion(6, 5));
        assert!(nonexistence_criterion(2, 3));
        for m in 2..=5 {
            assert!(nonexistence_criterion(m, 5));
        }
    }
}
