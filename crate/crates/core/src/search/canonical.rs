//! Orderly-generation constraint used to break row and column symmetry.
//!
//! A row sequence is canonical when
//! * rows are non-increasing in `(degree, lex)` where lex puts column 0 first
//!   (see [`Bits::lex_cmp`]), and
//! * columns are first used in ascending order: the columns used by rows
//!   `0..k` are exactly `0..u` for some `u`, and a new row's fresh columns are
//!   `u, u + 1, ...`.
//!
//! Every graph has a canonical relabeling, built greedily: take the max-degree
//! remaining row whose relabeled set is lex-largest, then give its fresh
//! columns the next labels. Canonicity is prefix-closed, so the search may
//! reject non-canonical partial assignments.

use std::cmp::Ordering;

use crate::bits::{Bits, ColSet};

/// Whether appending `new_row` to the canonical prefix `partial` keeps it
/// canonical. A prefix whose used columns are not an initial segment is
/// itself non-canonical and yields `false`.
pub fn canonical_extension_ok(partial: &[ColSet], new_row: &ColSet) -> bool {
    let used = partial.iter().fold(ColSet::new(), |acc, r| acc.or(*r));
    let u = used.count();
    if used != ColSet::prefix(u) {
        return false;
    }
    if let Some(last) = partial.last() {
        match new_row.count().cmp(&last.count()) {
            Ordering::Greater => return false,
            Ordering::Equal if new_row.lex_cmp(last) == Ordering::Greater => return false,
            _ => {}
        }
    }
    let fresh = new_row.and_not(used);
    fresh == ColSet::range(u, u + fresh.count())
}
