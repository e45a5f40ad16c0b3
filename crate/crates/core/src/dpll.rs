//! A naive DPLL solver for toy-sized formulas (a few dozen variables).

/// Returns a satisfying assignment, or `None` if the formula is unsatisfiable.
/// Literals are DIMACS-style: `v` or `-v` for variable `v >= 1`.
pub fn solve(num_vars: usize, clauses: &[Vec<i64>]) -> Option<Vec<bool>> {
    let mut assign = vec![None; num_vars];
    if search(clauses, &mut assign) {
        Some(assign.into_iter().map(|a| a.unwrap_or(false)).collect())
    } else {
        None
    }
}

fn value(assign: &[Option<bool>], lit: i64) -> Option<bool> {
    assign[(lit.unsigned_abs() - 1) as usize].map(|b| b == (lit > 0))
}

fn search(clauses: &[Vec<i64>], assign: &mut Vec<Option<bool>>) -> bool {
    let mut trail = Vec::new();
    // unit propagation to fixpoint
    loop {
        let mut unit = None;
        for c in clauses {
            let mut open = None;
            let mut open_count = 0;
            let mut sat = false;
            for &l in c {
                match value(assign, l) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open_count += 1;
                        open = Some(l);
                    }
                }
            }
            if sat {
                continue;
            }
            match open_count {
                0 => {
                    undo(assign, &trail);
                    return false;
                }
                1 => {
                    unit = open;
                    break;
                }
                _ => {}
            }
        }
        match unit {
            Some(l) => {
                let v = (l.unsigned_abs() - 1) as usize;
                assign[v] = Some(l > 0);
                trail.push(v);
            }
            None => break,
        }
    }

    let Some(v) = assign.iter().position(Option::is_none) else {
        return true;
    };
    for choice in [true, false] {
        assign[v] = Some(choice);
        if search(clauses, assign) {
            return true;
        }
    }
    assign[v] = None;
    undo(assign, &trail);
    false
}

fn undo(assign: &mut [Option<bool>], trail: &[usize]) {
    for &v in trail {
        assign[v] = None;
    }
}
