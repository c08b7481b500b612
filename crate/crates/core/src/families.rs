//! Generators for the named matrix families: the Tucker matrices, the
//! forbidden families for the circular-ones and I-circular properties, and
//! the auxiliary constructions `Q`, `R`, `U`, `W`, `H` and `G` used by the
//! structural lemmas.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binmat::{BinaryMatrix, ColSet, ConfigurationWitness};
use crate::error::{domain, Result};
use crate::seqcore::{enumerate_bracelets, wrap, BinarySequence, QuaternarySequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    MI,
    MIstar,
    MII,
    MIII,
    MIV,
    MV,
    MVstar,
    MVI,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::MI => "MI",
            FamilyKind::MIstar => "MIstar",
            FamilyKind::MII => "MII",
            FamilyKind::MIII => "MIII",
            FamilyKind::MIV => "MIV",
            FamilyKind::MV => "MV",
            FamilyKind::MVstar => "MVstar",
            FamilyKind::MVI => "MVI",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            FamilyKind::MI => "MI",
            FamilyKind::MIstar => "MI*",
            FamilyKind::MII => "MII",
            FamilyKind::MIII => "MIII",
            FamilyKind::MIV => "MIV",
            FamilyKind::MV => "MV",
            FamilyKind::MVstar => "MV*",
            FamilyKind::MVI => "MVI",
        }
    }

    pub fn is_parameterized(self) -> bool {
        matches!(
            self,
            FamilyKind::MI | FamilyKind::MIstar | FamilyKind::MII | FamilyKind::MIII
        )
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "MI" => FamilyKind::MI,
            "MIstar" | "MI*" => FamilyKind::MIstar,
            "MII" => FamilyKind::MII,
            "MIII" => FamilyKind::MIII,
            "MIV" => FamilyKind::MIV,
            "MV" => FamilyKind::MV,
            "MVstar" | "MV*" => FamilyKind::MVstar,
            "MVI" => FamilyKind::MVI,
            other => return Err(domain(format!("unknown family '{other}'"))),
        })
    }
}

/// A named matrix: a base family, its size parameter when it has one, and an
/// optional row mask `a` meaning `a ⊙ base`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub k: Option<usize>,
    pub mask: Option<BinarySequence>,
}

impl FamilyId {
    pub fn plain(kind: FamilyKind) -> Self {
        Self {
            kind,
            k: None,
            mask: None,
        }
    }

    pub fn sized(kind: FamilyKind, k: usize) -> Self {
        Self {
            kind,
            k: Some(k),
            mask: None,
        }
    }

    pub fn masked(mut self, mask: BinarySequence) -> Self {
        self.mask = Some(mask);
        self
    }

    pub fn build(&self) -> Result<BinaryMatrix> {
        let need_k = || {
            self.k
                .ok_or_else(|| domain(format!("family {} needs a size", self.kind.name())))
        };
        let base = match self.kind {
            FamilyKind::MI => gen_mi(need_k()?)?,
            FamilyKind::MIstar => gen_mi(need_k()?)?.star()?,
            FamilyKind::MII => gen_mii(need_k()?)?,
            FamilyKind::MIII => gen_miii(need_k()?)?,
            FamilyKind::MIV => gen_miv(),
            FamilyKind::MV => gen_mv(),
            FamilyKind::MVstar => gen_mv().star()?,
            FamilyKind::MVI => gen_mvi(),
        };
        match &self.mask {
            Some(mask) => base.mask_complement(mask),
            None => Ok(base),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(mask) = &self.mask {
            write!(f, "{mask}⊙")?;
        }
        f.write_str(self.kind.symbol())?;
        if let Some(k) = self.k {
            write!(f, "({k})")?;
        }
        Ok(())
    }
}

/// A family member together with its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbMember {
    pub id: FamilyId,
    pub matrix: BinaryMatrix,
}

/// A forbidden matrix found inside a host, with the maps locating it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub family: FamilyId,
    pub forbidden: BinaryMatrix,
    pub witness: ConfigurationWitness,
}

impl Certificate {
    pub fn verify(&self, host: &BinaryMatrix) -> bool {
        self.family.build().ok().as_ref() == Some(&self.forbidden)
            && self.witness.verify(host, &self.forbidden)
    }
}

fn bit(col: usize) -> ColSet {
    1 << (col - 1)
}

fn row_of(cols: &[usize]) -> ColSet {
    cols.iter().fold(0, |acc, &c| acc | bit(c))
}

fn range_row(from: usize, to: usize) -> ColSet {
    (from..=to).fold(0, |acc, c| acc | bit(c))
}

/// Tucker's `M_I(k)`: a `k`-cycle of consecutive pairs.
pub fn gen_mi(k: usize) -> Result<BinaryMatrix> {
    if k < 3 {
        return Err(domain(format!("MI(k) needs k >= 3, got {k}")));
    }
    let mut rows: Vec<ColSet> = (1..k).map(|i| row_of(&[i, i + 1])).collect();
    rows.push(row_of(&[1, k]));
    BinaryMatrix::from_rows(rows, k)
}

pub fn gen_mi_star(k: usize) -> Result<BinaryMatrix> {
    gen_mi(k)?.star()
}

/// Tucker's `M_II(k)`, `k x k`.
pub fn gen_mii(k: usize) -> Result<BinaryMatrix> {
    if k < 4 {
        return Err(domain(format!("MII(k) needs k >= 4, got {k}")));
    }
    let mut rows: Vec<ColSet> = (1..=k - 2).map(|i| row_of(&[i, i + 1])).collect();
    rows.push(range_row(1, k - 2) | bit(k));
    rows.push(range_row(2, k));
    BinaryMatrix::from_rows(rows, k)
}

/// Tucker's `M_III(k)`, `k x (k + 1)`.
pub fn gen_miii(k: usize) -> Result<BinaryMatrix> {
    if k < 3 {
        return Err(domain(format!("MIII(k) needs k >= 3, got {k}")));
    }
    let mut rows: Vec<ColSet> = (1..k).map(|i| row_of(&[i, i + 1])).collect();
    rows.push(range_row(2, k - 1) | bit(k + 1));
    BinaryMatrix::from_rows(rows, k + 1)
}

pub fn gen_miv() -> BinaryMatrix {
    BinaryMatrix::from_strs(&["110000", "001100", "000011", "010101"]).expect("fixed matrix")
}

pub fn gen_mv() -> BinaryMatrix {
    BinaryMatrix::from_strs(&["11000", "11110", "00110", "10011"]).expect("fixed matrix")
}

pub fn gen_mv_star() -> BinaryMatrix {
    gen_mv().star().expect("fixed matrix")
}

pub fn gen_mvi() -> BinaryMatrix {
    BinaryMatrix::from_strs(&["1101", "0111", "1011"]).expect("fixed matrix")
}

fn member(id: FamilyId) -> ForbMember {
    let matrix = id.build().expect("generated family parameters are valid");
    ForbMember { id, matrix }
}

fn sort_members(members: &mut [ForbMember]) {
    members.sort_by(|a, b| {
        (a.matrix.col_count(), a.matrix.row_count())
            .cmp(&(b.matrix.col_count(), b.matrix.row_count()))
            .then_with(|| a.matrix.lex_cmp(&b.matrix))
    });
}

/// Members of the circular-ones forbidden family with at most `max_rows`
/// rows and `max_cols` columns, ordered by (columns, rows, row strings).
pub fn gen_forb_circular(max_rows: usize, max_cols: usize) -> Vec<ForbMember> {
    let mut out = Vec::new();
    let mut k = 3;
    while k <= max_rows && k < max_cols {
        let masks = enumerate_bracelets(k).expect("k >= 3 within the bracelet guard");
        for a in masks {
            out.push(member(FamilyId::sized(FamilyKind::MIstar, k).masked(a)));
        }
        k += 1;
    }
    if max_rows >= 4 && max_cols >= 6 {
        let ones = BinarySequence::new(vec![1; 4]).expect("binary");
        let zeros = BinarySequence::new(vec![0; 4]).expect("binary");
        out.push(member(
            FamilyId::plain(FamilyKind::MIV).masked(zeros.clone()),
        ));
        out.push(member(
            FamilyId::plain(FamilyKind::MIV).masked(ones.clone()),
        ));
        out.push(member(FamilyId::plain(FamilyKind::MVstar).masked(zeros)));
        out.push(member(FamilyId::plain(FamilyKind::MVstar).masked(ones)));
    }
    for m in &mut out {
        // Plain members carry no all-zero mask in their identifier.
        if m.id.mask.as_ref().is_some_and(|a| a.count_ones() == 0) {
            m.id.mask = None;
        }
    }
    sort_members(&mut out);
    out
}

/// Members of the I-circular forbidden family within the given bounds,
/// ordered by (columns, rows, row strings).
pub fn gen_forb_icircular(max_rows: usize, max_cols: usize) -> Vec<ForbMember> {
    let fits = |rows: usize, cols: usize| rows <= max_rows && cols <= max_cols;
    let mut out = Vec::new();
    for k in 3..=max_rows {
        if fits(k, k + 1) {
            out.push(member(FamilyId::sized(FamilyKind::MIstar, k)));
            out.push(member(FamilyId::sized(FamilyKind::MIII, k)));
        }
        if fits(k + 1, k + 1) {
            out.push(member(FamilyId::sized(FamilyKind::MII, k + 1)));
        }
    }
    let fixed = [
        FamilyId::sized(FamilyKind::MIstar, 4).masked("0101".parse().expect("binary")),
        FamilyId::sized(FamilyKind::MII, 4).masked("0100".parse().expect("binary")),
        FamilyId::plain(FamilyKind::MIV),
        FamilyId::plain(FamilyKind::MV),
        FamilyId::plain(FamilyKind::MVI),
    ];
    for id in fixed {
        let m = member(id);
        if fits(m.matrix.row_count(), m.matrix.col_count()) {
            out.push(m);
        }
    }
    sort_members(&mut out);
    out
}

fn binary_row_set(row: &[u8]) -> ColSet {
    row.iter()
        .enumerate()
        .fold(0, |acc, (j, &d)| acc | ((d as ColSet) << j))
}

/// `Q_j(i, k)`: the block contributed by digit `j` at position `i` of a
/// length-`k` quaternary sequence. All blocks have `k + 1` columns.
pub fn gen_q(j: u8, i: usize, k: usize) -> Result<BinaryMatrix> {
    let rows = q_rows(j, i, k)?;
    BinaryMatrix::from_rows(rows, k + 1)
}

fn q_rows(j: u8, i: usize, k: usize) -> Result<Vec<ColSet>> {
    if k < 3 || i == 0 || i > k || j > 3 {
        return Err(domain(format!("Q_{j}({i},{k}) is undefined")));
    }
    let next = wrap(i as isize + 1, k);
    let full = crate::binmat::full_set(k + 1);
    let pair = bit(i) | bit(next);
    Ok(match j {
        0 => vec![pair],
        1 => vec![full & !pair],
        2 => vec![full & !bit(k + 1), pair | bit(k + 1)],
        _ => vec![full & !bit(i), full & !bit(next)],
    })
}

/// `R(b)`: the blocks `Q_{b_1}(1, k), ..., Q_{b_k}(k, k)` stacked in order.
pub fn gen_r(b: &QuaternarySequence) -> Result<BinaryMatrix> {
    let k = b.len();
    if k < 3 {
        return Err(domain(format!("R(b) needs |b| >= 3, got {k}")));
    }
    let mut rows = Vec::new();
    for i in 1..=k {
        rows.extend(q_rows(b.at(i), i, k)?);
    }
    BinaryMatrix::from_rows(rows, k + 1)
}

/// Which reading of the `U_2(i)` zero columns to use.
///
/// `Literal` places the zero pairs at columns `5 - 2i, 6 - 2i` and
/// `7 - 2i, 8 - 2i`; `Figure` at `3 - 2i, 4 - 2i` and `5 - 2i, 6 - 2i`,
/// which is what the displayed `W(2310)` shows. Both are taken mod 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UVariant {
    Literal,
    Figure,
}

impl std::str::FromStr for UVariant {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(UVariant::Literal),
            "figure" => Ok(UVariant::Figure),
            other => Err(domain(format!("unknown U variant '{other}'"))),
        }
    }
}

fn col6(c: isize) -> ColSet {
    bit(wrap(c, 6))
}

/// `U_j(i)`: the six-column blocks behind `W(b)`.
pub fn gen_u(j: u8, i: usize, variant: UVariant) -> Result<BinaryMatrix> {
    BinaryMatrix::from_rows(u_rows(j, i, variant)?, 6)
}

fn u_rows(j: u8, i: usize, variant: UVariant) -> Result<Vec<ColSet>> {
    let full = crate::binmat::full_set(6);
    let mv_star = gen_mv_star();
    let undefined = || domain(format!("U_{j}({i}) is undefined"));
    let ii = i as isize;
    match j {
        0 | 1 if (1..=4).contains(&i) => {
            let r = mv_star.row(i);
            Ok(vec![if j == 0 { r } else { full & !r }])
        }
        2 if (1..=3).contains(&i) => {
            let offset = match variant {
                UVariant::Literal => 0,
                UVariant::Figure => -2,
            };
            let first = col6(5 - 2 * ii + offset) | col6(6 - 2 * ii + offset);
            let second = col6(7 - 2 * ii + offset) | col6(8 - 2 * ii + offset);
            Ok(vec![full & !first, full & !second])
        }
        3 if i == 2 => Ok(vec![full & !bit(5), full & !bit(6)]),
        _ => Err(undefined()),
    }
}

/// `W(b)` for `|b| = 4`, `b_4 = 0`, `b_1, b_3 in {0,1,2}`.
pub fn gen_w(b: &QuaternarySequence, variant: UVariant) -> Result<BinaryMatrix> {
    if b.len() != 4 || b.at(4) != 0 || b.at(1) == 3 || b.at(3) == 3 {
        return Err(domain(format!(
            "W(b) needs |b| = 4, b_4 = 0 and b_1, b_3 != 3; got {b}"
        )));
    }
    let mut rows = Vec::new();
    for i in 1..=4 {
        rows.extend(u_rows(b.at(i), i, variant)?);
    }
    BinaryMatrix::from_rows(rows, 6)
}

/// `H_i(α)`: `M_V*` with two extra rows that agree (both 1) on columns
/// `3 - 2i, 4 - 2i` and carry `α` and its complement on columns
/// `5 - 2i, 6 - 2i, 1 - 2i, 2 - 2i`.
pub fn gen_h(i: usize, alpha: &BinarySequence) -> Result<BinaryMatrix> {
    if !(1..=3).contains(&i) || alpha.len() != 4 {
        return Err(domain(format!("H_{i}({alpha}) is undefined")));
    }
    let ii = i as isize;
    let shared = col6(3 - 2 * ii) | col6(4 - 2 * ii);
    let cols = [5 - 2 * ii, 6 - 2 * ii, 1 - 2 * ii, 2 - 2 * ii];
    let mut fifth = shared;
    let mut sixth = shared;
    for (n, &c) in cols.iter().enumerate() {
        if alpha.at(n + 1) == 1 {
            fifth |= col6(c);
        } else {
            sixth |= col6(c);
        }
    }
    Ok(gen_mv_star().with_rows([fifth, sixth]))
}

/// `G(γ)`: `M_V*` with rows `1 γ1 γ2 1 1 γ3` and its partial complement
/// `1 γ̄1 γ̄2 1 1 γ̄3`.
pub fn gen_g(gamma: &BinarySequence) -> Result<BinaryMatrix> {
    if gamma.len() != 3 {
        return Err(domain(format!("G(γ) needs |γ| = 3, got {gamma}")));
    }
    let g = gamma.digits();
    let fifth = [1, g[0], g[1], 1, 1, g[2]];
    let sixth = [1, 1 - g[0], 1 - g[1], 1, 1, 1 - g[2]];
    Ok(gen_mv_star().with_rows([binary_row_set(&fifth), binary_row_set(&sixth)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    fn bs(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    fn qs(s: &str) -> QuaternarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn tucker_shapes() {
        assert_eq!(gen_mi(3).unwrap(), m(&["110", "011", "101"]));
        assert_eq!(gen_mi(4).unwrap(), m(&["1100", "0110", "0011", "1001"]));
        assert_eq!(gen_mii(4).unwrap(), m(&["1100", "0110", "1101", "0111"]));
        assert_eq!(
            gen_mii(5).unwrap(),
            m(&["11000", "01100", "00110", "11101", "01111"])
        );
        assert_eq!(gen_miii(3).unwrap(), m(&["1100", "0110", "0101"]));
        assert_eq!(
            gen_miii(4).unwrap(),
            m(&["11000", "01100", "00110", "01101"])
        );
        assert!(gen_mi(2).is_err());
        assert!(gen_mii(3).is_err());
        assert!(gen_miii(2).is_err());
    }

    #[test]
    fn tucker_structure() {
        for k in 3..=12 {
            let mi = gen_mi(k).unwrap();
            assert_eq!((mi.row_count(), mi.col_count()), (k, k));
            assert!(mi.rows().iter().all(|r| r.count_ones() == 2));
            let miii = gen_miii(k).unwrap();
            assert_eq!((miii.row_count(), miii.col_count()), (k, k + 1));
            if k >= 4 {
                let mii = gen_mii(k).unwrap();
                assert_eq!((mii.row_count(), mii.col_count()), (k, k));
                assert_eq!((mii.row(k - 1) & mii.row(k)).count_ones() as usize, k - 2);
            }
        }
    }

    #[test]
    fn fixed_tucker_matrices() {
        let sums: Vec<u32> = gen_miv().rows().iter().map(|r| r.count_ones()).collect();
        assert_eq!(sums, [2, 2, 2, 3]);
        assert_eq!(gen_mv().row(2), m(&["11110"]).row(1));
        let mvi = gen_mvi();
        let colsums: Vec<usize> = (1..=4)
            .map(|j| mvi.column(j).iter().filter(|&&x| x).count())
            .collect();
        assert_eq!(colsums, [2, 2, 2, 3]);
        assert_eq!(gen_mv_star().col_count(), 6);
    }

    #[test]
    fn forb_circular_small() {
        let f = gen_forb_circular(3, 4);
        let ids: Vec<String> = f.iter().map(|x| x.id.to_string()).collect();
        assert_eq!(f.len(), 2);
        assert!(ids.contains(&"MI*(3)".to_string()));
        assert!(ids.contains(&"111⊙MI*(3)".to_string()));
        let f = gen_forb_circular(4, 6);
        assert_eq!(f.len(), 2 + 6 + 4);
        for mat in [
            gen_miv(),
            gen_miv().complement(),
            gen_mv_star(),
            gen_mv_star().complement(),
        ] {
            assert!(f.iter().any(|x| x.matrix == mat));
        }
    }

    #[test]
    fn forb_icircular_small() {
        let f = gen_forb_icircular(3, 4);
        let mats: Vec<_> = f.iter().map(|x| x.matrix.clone()).collect();
        assert_eq!(f.len(), 3);
        assert!(mats.contains(&gen_mi_star(3).unwrap()));
        assert!(mats.contains(&gen_miii(3).unwrap()));
        assert!(mats.contains(&gen_mvi()));
        let f = gen_forb_icircular(4, 5);
        for mat in [
            gen_mii(4).unwrap(),
            gen_mi_star(4)
                .unwrap()
                .mask_complement(&bs("0101"))
                .unwrap(),
            gen_mii(4).unwrap().mask_complement(&bs("0100")).unwrap(),
            gen_mv(),
            gen_mi_star(4).unwrap(),
            gen_miii(4).unwrap(),
        ] {
            assert!(f.iter().any(|x| x.matrix == mat), "missing {mat}");
        }
    }

    #[test]
    fn q_blocks() {
        assert_eq!(gen_q(0, 1, 6).unwrap(), m(&["1100000"]));
        assert_eq!(gen_q(3, 3, 6).unwrap(), m(&["1101111", "1110111"]));
        assert_eq!(gen_q(2, 6, 6).unwrap(), m(&["1111110", "1000011"]));
        assert_eq!(gen_q(1, 2, 6).unwrap(), m(&["1001111"]));
        assert!(gen_q(4, 1, 6).is_err());
        assert!(gen_q(0, 7, 6).is_err());
        assert!(gen_q(0, 1, 2).is_err());
    }

    #[test]
    fn r_matrices() {
        assert_eq!(
            gen_r(&qs("003")).unwrap(),
            m(&["1100", "0110", "1101", "0111"])
        );
        assert_eq!(gen_r(&qs("003")).unwrap(), gen_mii(4).unwrap());
        let r = gen_r(&qs("013102")).unwrap();
        assert_eq!((r.row_count(), r.col_count()), (8, 7));
        assert_eq!(r.row(6), m(&["0000110"]).row(1));
        for b in BinarySequence::all_of_length(5) {
            let q: QuaternarySequence = b.to_string().parse().unwrap();
            assert_eq!(
                gen_r(&q).unwrap(),
                gen_mi_star(5).unwrap().mask_complement(&b).unwrap()
            );
        }
        assert!(gen_r(&qs("01")).is_err());
    }

    #[test]
    fn u_blocks() {
        assert_eq!(gen_u(0, 4, UVariant::Literal).unwrap(), m(&["100110"]));
        assert_eq!(
            gen_u(3, 2, UVariant::Literal).unwrap(),
            m(&["111101", "111110"])
        );
        assert_eq!(
            gen_u(2, 1, UVariant::Figure).unwrap(),
            m(&["001111", "110011"])
        );
        assert_eq!(
            gen_u(2, 1, UVariant::Literal).unwrap(),
            m(&["110011", "111100"])
        );
        assert!(gen_u(3, 1, UVariant::Literal).is_err());
        assert!(gen_u(2, 4, UVariant::Literal).is_err());
        assert!(gen_u(0, 5, UVariant::Literal).is_err());
    }

    #[test]
    fn w_matrices() {
        let w = gen_w(&qs("2310"), UVariant::Figure).unwrap();
        assert_eq!(
            w,
            m(&["001111", "110011", "111101", "111110", "110011", "100110"])
        );
        for v in [UVariant::Literal, UVariant::Figure] {
            assert_eq!(gen_w(&qs("0000"), v).unwrap(), gen_mv_star());
        }
        assert!(gen_w(&qs("3000"), UVariant::Literal).is_err());
        assert!(gen_w(&qs("0001"), UVariant::Literal).is_err());
        assert!(gen_w(&qs("000"), UVariant::Literal).is_err());
    }

    #[test]
    fn h_and_g_matrices() {
        let h = gen_h(1, &bs("0111")).unwrap();
        assert_eq!(h.row(5), m(&["110111"]).row(1));
        assert_eq!(h.row(6), m(&["111000"]).row(1));
        for i in 1..=3 {
            let h = gen_h(i, &bs("0000")).unwrap();
            assert_eq!(h.row(5).count_ones(), 2);
        }
        let g = gen_g(&bs("000")).unwrap();
        assert_eq!(g.row(5), m(&["100110"]).row(1));
        assert_eq!(g.row(6), m(&["111111"]).row(1));
        assert!(gen_h(4, &bs("0000")).is_err());
        assert!(gen_h(1, &bs("000")).is_err());
        assert!(gen_g(&bs("00")).is_err());
    }

    #[test]
    fn family_ids_round_trip_through_build() {
        let id = FamilyId::sized(FamilyKind::MIstar, 4).masked(bs("0101"));
        assert_eq!(id.to_string(), "0101⊙MI*(4)");
        assert_eq!(
            id.build().unwrap(),
            m(&["11000", "10011", "00110", "01101"])
        );
        assert!(FamilyId::plain(FamilyKind::MII).build().is_err());
    }
}
