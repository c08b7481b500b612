//! Circular intervals, consecutive-ones and circular-ones recognition with
//! witness orders, exhaustive oracles, and forbidden-submatrix certificates.
//!
//! The fast circular-ones test fixes one column, complements every row that
//! contains it, and asks the PQ-tree for a consecutive-ones order of the
//! result; that linear order, read cyclically, is a circular-ones order of
//! the original matrix.

mod pqtree;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binmat::{full_set, BinaryMatrix, ColSet};
use crate::error::{domain, Error, Result};
use crate::families::{gen_forb_circular, Certificate, ForbMember};

pub use pqtree::consecutive_order;

/// Exhaustive oracles refuse matrices with more columns than this.
pub const BRUTE_FORCE_MAX_COLUMNS: usize = 9;

/// A permutation of the columns `1..=l`, listed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LinearColumnOrder(Vec<usize>);

/// A cyclic arrangement of the columns `1..=l`.
///
/// Stored canonically: column 1 first, and for three or more columns the
/// second entry is the smaller of column 1's two neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CircularColumnOrder(Vec<usize>);

fn check_permutation(cols: &[usize]) -> Result<()> {
    let mut seen = vec![false; cols.len() + 1];
    for &c in cols {
        if c == 0 || c > cols.len() || seen[c] {
            return Err(domain(format!(
                "{cols:?} is not a permutation of 1..={}",
                cols.len()
            )));
        }
        seen[c] = true;
    }
    Ok(())
}

impl LinearColumnOrder {
    pub fn new(cols: Vec<usize>) -> Result<Self> {
        check_permutation(&cols)?;
        Ok(Self(cols))
    }

    pub fn identity(l: usize) -> Self {
        Self((1..=l).collect())
    }

    pub fn columns(&self) -> &[usize] {
        &self.0
    }

    pub fn to_circular(&self) -> CircularColumnOrder {
        CircularColumnOrder::new(self.0.clone()).expect("already a permutation")
    }
}

impl CircularColumnOrder {
    /// Accepts any rotation or reflection and stores the canonical form.
    pub fn new(cols: Vec<usize>) -> Result<Self> {
        check_permutation(&cols)?;
        let mut cols = cols;
        if let Some(p) = cols.iter().position(|&c| c == 1) {
            cols.rotate_left(p);
        }
        let l = cols.len();
        if l >= 3 && cols[1] > cols[l - 1] {
            cols[1..].reverse();
        }
        Ok(Self(cols))
    }

    pub fn identity(l: usize) -> Self {
        Self((1..=l).collect())
    }

    pub fn columns(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Re-expresses a column set by slot: bit `p` is set when the column in
    /// slot `p` belongs to `set`.
    pub fn to_slots(&self, set: ColSet) -> ColSet {
        self.0
            .iter()
            .enumerate()
            .fold(0, |acc, (p, &c)| acc | (((set >> (c - 1)) & 1) << p))
    }

    /// Whether `set` is a circular interval of this order.
    pub fn is_circular_interval(&self, set: ColSet) -> bool {
        slots_form_arc(self.to_slots(set), self.0.len())
    }
}

impl TryFrom<Vec<usize>> for LinearColumnOrder {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<LinearColumnOrder> for Vec<usize> {
    fn from(o: LinearColumnOrder) -> Self {
        o.0
    }
}

impl TryFrom<Vec<usize>> for CircularColumnOrder {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CircularColumnOrder> for Vec<usize> {
    fn from(o: CircularColumnOrder) -> Self {
        o.0
    }
}

fn write_cols(f: &mut fmt::Formatter<'_>, cols: &[usize]) -> fmt::Result {
    for (n, c) in cols.iter().enumerate() {
        if n > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

impl fmt::Display for LinearColumnOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cols(f, &self.0)
    }
}

impl fmt::Display for CircularColumnOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cols(f, &self.0)
    }
}

/// Whether the slot mask `s` over `n` cyclic slots is empty, full, or one
/// contiguous arc.
#[inline]
pub fn slots_form_arc(s: ColSet, n: usize) -> bool {
    let full = full_set(n);
    if s == 0 || s == full {
        return true;
    }
    let prev = ((s << 1) | (s >> (n - 1))) & full;
    (s & !prev).count_ones() == 1
}

/// Whether the slot mask `s` is empty or one contiguous run (no wrap).
#[inline]
pub fn slots_form_run(s: ColSet) -> bool {
    s == 0 || {
        let t = s >> s.trailing_zeros();
        t & (t + 1) == 0
    }
}

/// Whether the 1-based column set `set` is a circular interval of `order`.
pub fn is_circular_interval(set: ColSet, order: &CircularColumnOrder) -> bool {
    order.is_circular_interval(set)
}

/// Consecutive-ones order of the rows, via the PQ-tree.
pub fn has_consecutive_ones(m: &BinaryMatrix) -> Option<LinearColumnOrder> {
    let order = consecutive_order(m.col_count(), m.rows())?;
    let order = LinearColumnOrder(order.into_iter().map(|c| c + 1).collect());
    debug_assert!(rows_are_runs(m, &order));
    Some(order)
}

fn rows_are_runs(m: &BinaryMatrix, order: &LinearColumnOrder) -> bool {
    let circ = CircularColumnOrder(order.0.clone());
    m.rows().iter().all(|&r| slots_form_run(circ.to_slots(r)))
}

fn guard(m: &BinaryMatrix) -> Result<()> {
    if m.col_count() > BRUTE_FORCE_MAX_COLUMNS {
        return Err(Error::Guard {
            what: "column count",
            actual: m.col_count(),
            limit: BRUTE_FORCE_MAX_COLUMNS,
        });
    }
    Ok(())
}

/// Exhaustive consecutive-ones test over all `l!` column orders, first
/// found in lexicographic order.
pub fn brute_force_consecutive_ones(m: &BinaryMatrix) -> Result<Option<LinearColumnOrder>> {
    guard(m)?;
    let mut perm: Vec<usize> = (1..=m.col_count()).collect();
    loop {
        let order = LinearColumnOrder(perm.clone());
        if rows_are_runs(m, &order) {
            return Ok(Some(order));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Rearranges into the next permutation in lexicographic order; false once
/// the last one has been passed.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `visit` on every canonical circular order of `l` columns in
/// lexicographic order until it returns `true`; returns that order.
pub(crate) fn find_circular_order(
    l: usize,
    mut visit: impl FnMut(&CircularColumnOrder) -> bool,
) -> Option<CircularColumnOrder> {
    if l <= 2 {
        let order = CircularColumnOrder::identity(l);
        return visit(&order).then_some(order);
    }
    let mut tail: Vec<usize> = (2..=l).collect();
    loop {
        if tail[0] < tail[tail.len() - 1] {
            let mut cols = Vec::with_capacity(l);
            cols.push(1);
            cols.extend_from_slice(&tail);
            let order = CircularColumnOrder(cols);
            if visit(&order) {
                return Some(order);
            }
        }
        if !next_permutation(&mut tail) {
            return None;
        }
    }
}

/// Circular-ones order via the fixed-column reduction, anchored at column 1.
pub fn has_circular_ones(m: &BinaryMatrix) -> Option<CircularColumnOrder> {
    has_circular_ones_anchored(m, 1)
}

/// The same reduction anchored at an arbitrary 1-based column. Every anchor
/// gives the same decision.
pub fn has_circular_ones_anchored(m: &BinaryMatrix, anchor: usize) -> Option<CircularColumnOrder> {
    let full = m.full_row();
    let anchor_bit = 1u64 << (anchor - 1);
    let reduced: Vec<ColSet> = m
        .rows()
        .iter()
        .map(|&r| if r & anchor_bit != 0 { !r & full } else { r })
        .collect();
    let order = consecutive_order(m.col_count(), &reduced)?;
    let order = CircularColumnOrder::new(order.into_iter().map(|c| c + 1).collect())
        .expect("PQ frontier is a permutation");
    debug_assert!(m.rows().iter().all(|&r| order.is_circular_interval(r)));
    Some(order)
}

/// Exhaustive circular-ones test over the `(l - 1)!/2` canonical circular
/// orders.
pub fn brute_force_circular_ones(m: &BinaryMatrix) -> Result<Option<CircularColumnOrder>> {
    guard(m)?;
    Ok(find_circular_order(m.col_count(), |order| {
        m.rows().iter().all(|&r| order.is_circular_interval(r))
    }))
}

/// Searches `family` in order for a member contained in `m`.
pub(crate) fn first_contained(m: &BinaryMatrix, family: &[ForbMember]) -> Option<Certificate> {
    family.iter().find_map(|f| {
        m.contains_configuration(&f.matrix)
            .map(|witness| Certificate {
                family: f.id.clone(),
                forbidden: f.matrix.clone(),
                witness,
            })
    })
}

/// A circular-ones forbidden matrix contained in `m`, preferring fewest
/// columns, then fewest rows, then the lexicographically least matrix.
///
/// This is a pure containment search; it does not consult the recognizer.
pub fn find_forb_certificate(m: &BinaryMatrix) -> Option<Certificate> {
    first_contained(m, &gen_forb_circular(m.row_count(), m.col_count()))
}

/// Like [`find_forb_certificate`] but only over members with at most
/// `max_cols` columns.
pub fn find_forb_certificate_within(m: &BinaryMatrix, max_cols: usize) -> Option<Certificate> {
    first_contained(
        m,
        &gen_forb_circular(m.row_count(), m.col_count().min(max_cols)),
    )
}

/// Whether `f` lacks circular-ones while every single-row or single-column
/// deletion has it.
pub fn is_minimal_forbidden_circular(f: &BinaryMatrix) -> bool {
    if has_circular_ones(f).is_some() {
        return false;
    }
    let rows_ok = (1..=f.row_count()).all(|i| {
        f.without_row(i)
            .is_none_or(|g| has_circular_ones(&g).is_some())
    });
    let cols_ok = (1..=f.col_count()).all(|j| {
        f.without_column(j)
            .is_none_or(|g| has_circular_ones(&g).is_some())
    });
    rows_ok && cols_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_mi, gen_mi_star, gen_miv, gen_mv, gen_mv_star};

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    fn set(cols: &[usize]) -> ColSet {
        cols.iter().fold(0, |a, &c| a | (1 << (c - 1)))
    }

    #[test]
    fn circular_intervals() {
        let o3 = CircularColumnOrder::identity(3);
        let o4 = CircularColumnOrder::identity(4);
        assert!(is_circular_interval(0, &o4));
        assert!(is_circular_interval(set(&[1, 3]), &o3));
        assert!(!is_circular_interval(set(&[1, 3]), &o4));
        assert!(is_circular_interval(set(&[1, 2, 3, 4]), &o4));
        assert!(is_circular_interval(set(&[4, 1]), &o4));
    }

    #[test]
    fn canonical_orders() {
        assert_eq!(
            CircularColumnOrder::new(vec![3, 4, 1, 2])
                .unwrap()
                .columns(),
            &[1, 2, 3, 4]
        );
        assert_eq!(
            CircularColumnOrder::new(vec![3, 1, 4, 2])
                .unwrap()
                .columns(),
            &[1, 3, 2, 4]
        );
        assert!(CircularColumnOrder::new(vec![1, 1]).is_err());
    }

    #[test]
    fn consecutive_ones_examples() {
        let path = m(&["110", "011"]);
        assert!(has_consecutive_ones(&path).is_some());
        assert!(has_consecutive_ones(&gen_mi(3).unwrap()).is_none());
        assert!(brute_force_consecutive_ones(&gen_mi(3).unwrap())
            .unwrap()
            .is_none());
        assert!(has_consecutive_ones(&gen_miv()).is_none());
        assert_eq!(
            brute_force_consecutive_ones(&path).unwrap().unwrap(),
            LinearColumnOrder::identity(3)
        );
    }

    #[test]
    fn circular_ones_examples() {
        for x in BinaryMatrix::all_of_shape(3, 3) {
            assert!(has_circular_ones(&x).is_some());
        }
        assert!(has_circular_ones(&gen_mi_star(3).unwrap()).is_none());
        assert!(has_circular_ones(&gen_mv_star()).is_none());
        assert!(has_circular_ones(&gen_mv()).is_some());
        assert!(brute_force_circular_ones(&gen_mv()).unwrap().is_some());
        let ones = m(&["1111", "1111"]);
        assert_eq!(
            brute_force_circular_ones(&ones).unwrap().unwrap(),
            CircularColumnOrder::identity(4)
        );
        assert!(brute_force_circular_ones(&gen_mi_star(4).unwrap())
            .unwrap()
            .is_none());
        let masked = gen_mi_star(4)
            .unwrap()
            .mask_complement(&"0101".parse().unwrap())
            .unwrap();
        assert!(brute_force_circular_ones(&masked).unwrap().is_none());
    }

    #[test]
    fn brute_force_guard() {
        let wide = BinaryMatrix::zeros(1, 10).unwrap();
        assert!(matches!(
            brute_force_circular_ones(&wide),
            Err(Error::Guard { .. })
        ));
        assert!(has_circular_ones(&wide).is_some());
    }

    #[test]
    fn certificates() {
        let f = gen_mi_star(3).unwrap();
        let cert = find_forb_certificate(&f).unwrap();
        assert_eq!(cert.forbidden, f);
        assert!(cert.verify(&f));
        assert!(find_forb_certificate(&gen_mv()).is_none());
    }

    #[test]
    fn orders_enumerated_once_per_cycle() {
        let mut count = 0;
        find_circular_order(6, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 60);
    }
}
