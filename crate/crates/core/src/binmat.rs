//! Dense binary matrices with rows stored as column sets.
//!
//! Row `i` is a [`ColSet`] whose bit `j - 1` is the entry in column `j`.
//! Matrices have at least one row and between 1 and [`MAX_COLUMNS`]
//! columns.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::seqcore::{BinarySequence, IndexMap};

pub type ColSet = u64;

pub const MAX_COLUMNS: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_set(n: usize) -> ColSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: Vec<ColSet>,
    cols: usize,
}

impl BinaryMatrix {
    pub fn from_rows(rows: Vec<ColSet>, cols: usize) -> Result<Self> {
        if rows.is_empty() {
            return Err(domain("a matrix needs at least one row"));
        }
        if cols == 0 || cols > MAX_COLUMNS {
            return Err(domain(format!(
                "column count must lie in 1..={MAX_COLUMNS}, got {cols}"
            )));
        }
        if rows.iter().any(|&r| r & !full_set(cols) != 0) {
            return Err(domain("row has entries beyond the last column"));
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from row strings such as `"0110"`.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let text: Vec<&str> = rows.iter().map(|r| r.as_ref()).collect();
        text.join("\n").parse()
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_rows(vec![0; rows], cols)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    /// Rows as column sets (bit `j - 1` is column `j`).
    pub fn rows(&self) -> &[ColSet] {
        &self.rows
    }

    /// Row `i` (1-based) as a column set.
    pub fn row(&self, i: usize) -> ColSet {
        self.rows[i - 1]
    }

    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        (self.rows[i - 1] >> (j - 1)) & 1 == 1
    }

    pub fn full_row(&self) -> ColSet {
        full_set(self.cols)
    }

    pub fn is_trivial_row(&self, r: ColSet) -> bool {
        r == 0 || r == self.full_row()
    }

    /// Column `j` (1-based) as a vector of bits, top to bottom.
    pub fn column(&self, j: usize) -> Vec<bool> {
        self.rows.iter().map(|r| (r >> (j - 1)) & 1 == 1).collect()
    }

    /// Entrywise complement.
    pub fn complement(&self) -> Self {
        let full = self.full_row();
        Self {
            rows: self.rows.iter().map(|r| !r & full).collect(),
            cols: self.cols,
        }
    }

    /// `a ⊙ M`: complements row `i` exactly when `a_i = 1`.
    pub fn mask_complement(&self, mask: &BinarySequence) -> Result<Self> {
        if mask.len() != self.row_count() {
            return Err(domain(format!(
                "mask of length {} applied to a matrix with {} rows",
                mask.len(),
                self.row_count()
            )));
        }
        let full = self.full_row();
        Ok(Self {
            rows: self
                .rows
                .iter()
                .zip(mask.digits())
                .map(|(&r, &a)| if a == 1 { !r & full } else { r })
                .collect(),
            cols: self.cols,
        })
    }

    /// `M_{ρ,σ}`: entry `(i, j)` is entry `(ρ(i), σ(j))` of `M`.
    pub fn submatrix(&self, rho: &IndexMap, sigma: &IndexMap) -> Result<Self> {
        if rho.max_image() > self.row_count() || sigma.max_image() > self.cols {
            return Err(domain(format!(
                "maps {rho}, {sigma} do not fit a {}x{} matrix",
                self.row_count(),
                self.cols
            )));
        }
        if rho.is_empty() || sigma.is_empty() {
            return Err(domain("row and column maps must be nonempty"));
        }
        let rows = rho
            .images()
            .iter()
            .map(|&i| {
                let r = self.rows[i - 1];
                sigma
                    .images()
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (j, &c)| acc | (((r >> (c - 1)) & 1) << j))
            })
            .collect();
        Ok(Self {
            rows,
            cols: sigma.len(),
        })
    }

    /// `M*`: appends an all-zero column.
    pub fn star(&self) -> Result<Self> {
        Self::from_rows(self.rows.clone(), self.cols + 1)
    }

    /// The matrix with 1-based row `i` removed, or `None` if nothing is left.
    pub fn without_row(&self, i: usize) -> Option<Self> {
        if self.row_count() == 1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows.remove(i - 1);
        Some(Self {
            rows,
            cols: self.cols,
        })
    }

    /// The matrix with 1-based column `j` removed, or `None` if nothing is
    /// left.
    pub fn without_column(&self, j: usize) -> Option<Self> {
        if self.cols == 1 {
            return None;
        }
        let low = full_set(j - 1);
        let rows = self
            .rows
            .iter()
            .map(|&r| (r & low) | ((r >> 1) & !low))
            .collect();
        Some(Self {
            rows,
            cols: self.cols - 1,
        })
    }

    /// Appends rows below the existing ones.
    pub fn with_rows(&self, extra: impl IntoIterator<Item = ColSet>) -> Self {
        let mut rows = self.rows.clone();
        rows.extend(extra);
        Self {
            rows,
            cols: self.cols,
        }
    }

    /// Applies a column permutation given as 1-based positions: column `p`
    /// of the result is column `order[p - 1]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                order
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (p, &c)| acc | (((r >> (c - 1)) & 1) << p))
            })
            .collect();
        Self {
            rows,
            cols: self.cols,
        }
    }

    /// Whether some row and column permutation of `self` equals `other`.
    pub fn same_configuration(&self, other: &BinaryMatrix) -> bool {
        self.row_count() == other.row_count()
            && self.cols == other.cols
            && self.contains_configuration(other).is_some()
    }

    /// Searches for maps `(ρ, σ)` with `self_{ρ,σ} = pattern`.
    ///
    /// Rows of the pattern are matched to host rows by backtracking in
    /// ascending host order. After each choice the columns of both matrices
    /// are grouped by the bits seen so far; the branch survives only while
    /// every pattern group has at least as many host columns. Columns are
    /// assigned once all rows are placed, so the search is complete.
    pub fn contains_configuration(&self, pattern: &BinaryMatrix) -> Option<ConfigurationWitness> {
        let (pk, pl) = (pattern.row_count(), pattern.col_count());
        if pk > self.row_count() || pl > self.cols {
            return None;
        }
        let mut search = ContainmentSearch {
            host: self,
            pattern,
            used: vec![false; self.row_count()],
            chosen: Vec::with_capacity(pk),
            pattern_ones: pattern.rows.iter().map(|r| r.count_ones()).collect(),
        };
        let host_ids = vec![0u32; self.cols];
        let pattern_ids = vec![0u32; pl];
        let final_ids = search.extend(&host_ids, &pattern_ids)?;
        let (host_ids, pattern_ids) = final_ids;
        let mut taken = vec![false; self.cols];
        let sigma = pattern_ids
            .iter()
            .map(|&id| {
                let c = (0..self.cols)
                    .find(|&c| !taken[c] && host_ids[c] == id)
                    .expect("group counts guarantee a free column");
                taken[c] = true;
                c + 1
            })
            .collect();
        let rho = search.chosen.iter().map(|&r| r + 1).collect();
        Some(ConfigurationWitness {
            row_map: IndexMap::new(rho).expect("rows are used once"),
            col_map: IndexMap::new(sigma).expect("columns are used once"),
        })
    }

    /// Lexicographic comparison of the row strings, top row first.
    pub fn lex_cmp(&self, other: &BinaryMatrix) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }

    /// Enumerates every `rows x cols` matrix in increasing code order.
    pub fn all_of_shape(rows: usize, cols: usize) -> impl Iterator<Item = BinaryMatrix> {
        let bits = rows * cols;
        assert!(bits < 64, "shape {rows}x{cols} is too large to enumerate");
        (0..(1u64 << bits)).map(move |code| Self::from_code(code, rows, cols))
    }

    /// Decodes a matrix whose row `i` occupies bits `i*cols .. (i+1)*cols`.
    pub fn from_code(code: u64, rows: usize, cols: usize) -> Self {
        let mask = full_set(cols);
        Self {
            rows: (0..rows).map(|i| (code >> (i * cols)) & mask).collect(),
            cols,
        }
    }
}

struct ContainmentSearch<'a> {
    host: &'a BinaryMatrix,
    pattern: &'a BinaryMatrix,
    used: Vec<bool>,
    chosen: Vec<usize>,
    pattern_ones: Vec<u32>,
}

const DEAD: u32 = u32::MAX;

impl ContainmentSearch<'_> {
    fn extend(&mut self, host_ids: &[u32], pattern_ids: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
        let depth = self.chosen.len();
        if depth == self.pattern.row_count() {
            return Some((host_ids.to_vec(), pattern_ids.to_vec()));
        }
        let prow = self.pattern.rows[depth];
        let ones = self.pattern_ones[depth];
        let zeros = self.pattern.cols as u32 - ones;
        let hcols = self.host.cols;
        let id_space = 2 * (hcols.max(self.pattern.cols) + 1);
        let mut remap = vec![DEAD; id_space];
        let mut new_pattern = vec![0u32; pattern_ids.len()];
        let mut new_host = vec![DEAD; hcols];
        let mut need: Vec<u32> = Vec::new();
        let mut have: Vec<u32> = Vec::new();

        for h in 0..self.host.row_count() {
            if self.used[h] {
                continue;
            }
            let hrow = self.host.rows[h];
            let hones = hrow.count_ones();
            if hones < ones || hcols as u32 - hones < zeros {
                continue;
            }
            remap.iter_mut().for_each(|x| *x = DEAD);
            need.clear();
            for (j, &id) in pattern_ids.iter().enumerate() {
                let key = id as usize * 2 + ((prow >> j) & 1) as usize;
                if remap[key] == DEAD {
                    remap[key] = need.len() as u32;
                    need.push(0);
                }
                new_pattern[j] = remap[key];
                need[remap[key] as usize] += 1;
            }
            have.clear();
            have.resize(need.len(), 0);
            for c in 0..hcols {
                let id = host_ids[c];
                new_host[c] = if id == DEAD {
                    DEAD
                } else {
                    let key = id as usize * 2 + ((hrow >> c) & 1) as usize;
                    let nid = remap[key];
                    if nid != DEAD {
                        have[nid as usize] += 1;
                    }
                    nid
                };
            }
            if need.iter().zip(&have).any(|(n, h)| h < n) {
                continue;
            }
            self.used[h] = true;
            self.chosen.push(h);
            let host_snapshot = new_host.clone();
            let pattern_snapshot = new_pattern.clone();
            if let Some(found) = self.extend(&host_snapshot, &pattern_snapshot) {
                return Some(found);
            }
            self.chosen.pop();
            self.used[h] = false;
        }
        None
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                f.write_str(if (r >> j) & 1 == 1 { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

/// Parses the matrix text format: `#` comment lines and blank lines are
/// skipped, every other line is one row of `0`/`1` characters, and all rows
/// have the same length.
impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut width = None;
        for (n, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: n + 1,
                message,
            };
            if let Some(w) = width {
                if line.len() != w {
                    return Err(parse_err(format!(
                        "row has {} entries, expected {w}",
                        line.len()
                    )));
                }
            } else if line.len() > MAX_COLUMNS {
                return Err(parse_err(format!("more than {MAX_COLUMNS} columns")));
            }
            width = Some(line.len());
            let mut row = 0;
            for (j, c) in line.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => row |= 1 << j,
                    other => return Err(parse_err(format!("unexpected character '{other}'"))),
                }
            }
            rows.push(row);
        }
        match width {
            Some(w) => Self::from_rows(rows, w),
            None => Err(Error::Parse {
                line: s.lines().count().max(1),
                message: "no matrix rows found".into(),
            }),
        }
    }
}

impl Serialize for BinaryMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<String> = self.to_string().lines().map(str::to_owned).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<String>::deserialize(d)?;
        BinaryMatrix::from_strs(&rows).map_err(serde::de::Error::custom)
    }
}

/// Row and column maps proving that a host contains a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigurationWitness {
    pub row_map: IndexMap,
    pub col_map: IndexMap,
}

impl ConfigurationWitness {
    pub fn identity(m: &BinaryMatrix) -> Self {
        Self {
            row_map: IndexMap::identity(m.row_count()),
            col_map: IndexMap::identity(m.col_count()),
        }
    }

    /// Checks `host_{ρ,σ} = pattern` entrywise.
    pub fn verify(&self, host: &BinaryMatrix, pattern: &BinaryMatrix) -> bool {
        host.submatrix(&self.row_map, &self.col_map)
            .map(|sub| &sub == pattern)
            .unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    fn map(v: &[usize]) -> IndexMap {
        IndexMap::new(v.to_vec()).unwrap()
    }

    #[test]
    fn complement_and_masks() {
        assert_eq!(m(&["11", "01"]).complement(), m(&["00", "10"]));
        assert_eq!(m(&["000", "000"]).complement(), m(&["111", "111"]));
        let x = m(&["1100", "0110", "1011"]);
        assert_eq!(x.mask_complement(&"000".parse().unwrap()).unwrap(), x);
        assert_eq!(
            x.mask_complement(&"111".parse().unwrap()).unwrap(),
            x.complement()
        );
        assert!(x.mask_complement(&"11".parse().unwrap()).is_err());
    }

    #[test]
    fn star_appends_zero_column() {
        assert_eq!(m(&["1"]).star().unwrap(), m(&["10"]));
    }

    #[test]
    fn submatrix_picks_entries() {
        let x = m(&["1100", "0110", "1011"]);
        assert_eq!(
            x.submatrix(&IndexMap::identity(3), &IndexMap::identity(4))
                .unwrap(),
            x
        );
        assert_eq!(
            x.submatrix(&map(&[3, 1]), &map(&[4, 1])).unwrap(),
            m(&["11", "01"])
        );
        assert!(x.submatrix(&map(&[4]), &map(&[1])).is_err());
        assert!(x.submatrix(&map(&[1]), &map(&[5])).is_err());
    }

    #[test]
    fn deleting_rows_and_columns() {
        let x = m(&["1100", "0110", "1011"]);
        assert_eq!(x.without_row(2).unwrap(), m(&["1100", "1011"]));
        assert_eq!(x.without_column(2).unwrap(), m(&["100", "010", "111"]));
        assert_eq!(x.without_column(4).unwrap(), m(&["110", "011", "101"]));
        assert!(m(&["1"]).without_row(1).is_none());
        assert!(m(&["1"]).without_column(1).is_none());
    }

    #[test]
    fn configuration_equality() {
        let x = m(&["1100", "0110", "0101"]);
        assert!(x.same_configuration(&x));
        assert!(x.same_configuration(&m(&["0011", "1001", "0101"])));
        assert!(!x.same_configuration(&m(&["1100", "0110", "0111"])));
        assert!(!x.same_configuration(&m(&["110", "011", "010"])));
    }

    #[test]
    fn containment_returns_checked_witness() {
        let host = m(&["110000", "111100", "001100", "100110"]);
        let pat = m(&["11000", "11110", "00110", "10011"]);
        let w = host.contains_configuration(&pat).unwrap();
        assert!(w.verify(&host, &pat));
        let w = host.contains_configuration(&host).unwrap();
        assert_eq!(w, ConfigurationWitness::identity(&host));
        assert!(pat.contains_configuration(&host).is_none());
    }

    #[test]
    fn duplicate_rows_are_distinct_positions() {
        let host = m(&["11", "11"]);
        assert!(host.contains_configuration(&m(&["11", "11"])).is_some());
        assert!(m(&["11", "10"])
            .contains_configuration(&m(&["11", "11"]))
            .is_none());
    }

    #[test]
    fn text_format() {
        let x: BinaryMatrix = "# comment\n110\n\n011\n".parse().unwrap();
        assert_eq!(x, m(&["110", "011"]));
        match "110\n01\n".parse::<BinaryMatrix>() {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match "110\n0a1\n".parse::<BinaryMatrix>() {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("# only a comment\n".parse::<BinaryMatrix>().is_err());
    }

    #[test]
    fn code_round_trip() {
        let all: Vec<_> = BinaryMatrix::all_of_shape(2, 2).collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], m(&["00", "00"]));
        assert_eq!(all[15], m(&["11", "11"]));
    }
}
