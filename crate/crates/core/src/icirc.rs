//! The Λ operator and the I-circular property.
//!
//! A matrix is I-circular when one circular order makes every row and every
//! pairwise row intersection a circular interval. That happens exactly when
//! `Λ(M)` — `M` plus the intersection of every pair of nontrivial rows whose
//! union covers all columns but which still meet — has circular ones.

use serde::{Deserialize, Serialize};

use crate::binmat::{BinaryMatrix, ColSet};
use crate::c1p::{
    find_circular_order, first_contained, has_circular_ones, CircularColumnOrder,
    BRUTE_FORCE_MAX_COLUMNS,
};
use crate::error::{Error, Result};
use crate::families::{gen_forb_icircular, Certificate};

/// A row appended by Λ: the 1-based indices of the two source rows and
/// their intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedRow {
    pub pair: (usize, usize),
    pub row: ColSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaResult {
    pub matrix: BinaryMatrix,
    pub added: Vec<AddedRow>,
}

impl LambdaResult {
    /// 1-based index in `matrix` of the row added for `pair`, if any.
    pub fn row_for_pair(&self, pair: (usize, usize)) -> Option<usize> {
        let pair = (pair.0.min(pair.1), pair.0.max(pair.1));
        self.added
            .iter()
            .position(|a| a.pair == pair)
            .map(|p| self.matrix.row_count() - self.added.len() + p + 1)
    }
}

/// Whether Λ adds a row for the pair `r, s`. The complement of either row
/// being properly contained in the other is the same as the two covering
/// every column while still meeting.
fn qualifies(m: &BinaryMatrix, r: ColSet, s: ColSet) -> bool {
    !m.is_trivial_row(r) && !m.is_trivial_row(s) && r | s == m.full_row() && r & s != 0
}

/// Applies Λ once. Added rows follow the original rows in lexicographic
/// order of the source pair; duplicates are kept.
pub fn lambda_closure(m: &BinaryMatrix) -> LambdaResult {
    let rows = m.rows();
    let mut added = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if qualifies(m, rows[i], rows[j]) {
                added.push(AddedRow {
                    pair: (i + 1, j + 1),
                    row: rows[i] & rows[j],
                });
            }
        }
    }
    let matrix = m.with_rows(added.iter().map(|a| a.row));
    LambdaResult { matrix, added }
}

/// The definition checked directly: every row and every pairwise
/// intersection of rows is a circular interval of `order`.
pub fn check_i_circular_order(m: &BinaryMatrix, order: &CircularColumnOrder) -> bool {
    let slots: Vec<ColSet> = m.rows().iter().map(|&r| order.to_slots(r)).collect();
    let n = m.col_count();
    slots.iter().enumerate().all(|(i, &a)| {
        crate::c1p::slots_form_arc(a, n)
            && slots[i + 1..]
                .iter()
                .all(|&b| crate::c1p::slots_form_arc(a & b, n))
    })
}

/// I-circular order, decided as circular ones of `Λ(M)`.
pub fn has_i_circular(m: &BinaryMatrix) -> Option<CircularColumnOrder> {
    let order = has_circular_ones(&lambda_closure(m).matrix)?;
    debug_assert!(check_i_circular_order(m, &order));
    Some(order)
}

/// Exhaustive I-circular test straight from the definition.
pub fn brute_force_i_circular(m: &BinaryMatrix) -> Result<Option<CircularColumnOrder>> {
    if m.col_count() > BRUTE_FORCE_MAX_COLUMNS {
        return Err(Error::Guard {
            what: "column count",
            actual: m.col_count(),
            limit: BRUTE_FORCE_MAX_COLUMNS,
        });
    }
    Ok(find_circular_order(m.col_count(), |order| {
        check_i_circular_order(m, order)
    }))
}

/// An I-circular forbidden matrix contained in `m`: fewest columns first,
/// then fewest rows, then lexicographically least.
///
/// A pure containment search that never consults the recognizer.
pub fn find_iforb_certificate(m: &BinaryMatrix) -> Option<Certificate> {
    first_contained(m, &gen_forb_icircular(m.row_count(), m.col_count()))
}

/// Whether `f` lacks the I-circular property while every single-row or
/// single-column deletion has it.
pub fn is_minimal_forbidden_icircular(f: &BinaryMatrix) -> bool {
    if has_i_circular(f).is_some() {
        return false;
    }
    let ok = |g: Option<BinaryMatrix>| g.is_none_or(|g| has_i_circular(&g).is_some());
    (1..=f.row_count()).all(|i| ok(f.without_row(i)))
        && (1..=f.col_count()).all(|j| ok(f.without_column(j)))
}
