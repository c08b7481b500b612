//! Machine checks of the structural lemmas and theorems over bounded
//! parameter ranges.
//!
//! Each `verify_*` function sweeps its cases in parallel and returns a
//! [`LemmaReport`]; results are collected in case order, so reports are
//! deterministic. Verdicts rest on certificate searches, never on the
//! specific maps quoted in proofs; those maps are checked separately by
//! [`verify_proof_lines`].

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::binmat::BinaryMatrix;
use crate::c1p::{
    brute_force_circular_ones, find_forb_certificate, find_forb_certificate_within,
    has_circular_ones, is_minimal_forbidden_circular,
};
use crate::families::{
    gen_forb_circular, gen_forb_icircular, gen_g, gen_h, gen_mi_star, gen_mii, gen_miii, gen_miv,
    gen_mv, gen_mv_star, gen_mvi, gen_r, gen_w, UVariant,
};
use crate::icirc::{
    brute_force_i_circular, find_iforb_certificate, has_i_circular, is_minimal_forbidden_icircular,
    lambda_closure,
};
use crate::seqcore::{BinarySequence, IndexMap, QuaternarySequence};
use crate::splitgraph::{
    adjacency_matrix, brute_force_semi_transitive, gen_gforb, is_semi_transitive_split,
    kp_decision, max_edges_from_env, sg_from_matrix,
};

/// Default sequence-length bound for the sequence-indexed lemmas.
pub const DEFAULT_K_MAX: usize = 7;
/// Default number of random matrices for sampled sweeps.
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 0x1c1c;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    fn new(input: impl ToString, expected: impl ToString, got: impl ToString) -> Self {
        Self {
            input: input.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LemmaReport {
    pub lemma_id: String,
    pub cases_checked: usize,
    pub failures: Vec<Failure>,
    /// Informational findings that carry no pass/fail judgement.
    pub notes: Vec<String>,
    pub elapsed_secs: f64,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `check` over `cases` in parallel, keeping failures in case order.
fn sweep<C, F>(id: &str, cases: &[C], check: F) -> LemmaReport
where
    C: Sync,
    F: Fn(&C) -> Option<Failure> + Sync + Send,
{
    let start = Instant::now();
    let failures: Vec<Failure> = cases.par_iter().filter_map(check).collect();
    LemmaReport {
        lemma_id: id.to_string(),
        cases_checked: cases.len(),
        failures,
        notes: Vec::new(),
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

fn matrix_text(m: &BinaryMatrix) -> String {
    m.rows()
        .iter()
        .map(|&r| {
            (0..m.col_count())
                .map(|j| if r >> j & 1 == 1 { '1' } else { '0' })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// `None` if `m` contains an I-circular forbidden matrix (checked), else a
/// failure labelled `input`.
fn expect_iforb(input: String, m: &BinaryMatrix) -> Option<Failure> {
    match find_iforb_certificate(m) {
        Some(c) if c.verify(m) => None,
        Some(c) => Some(Failure::new(
            input,
            "valid certificate",
            format!("bad {}", c.family),
        )),
        None => Some(Failure::new(input, "certificate", "none")),
    }
}

fn binary(digits: impl IntoIterator<Item = u8>) -> BinarySequence {
    BinarySequence::new(digits.into_iter().collect()).expect("binary digits")
}

/// Masked `M_II(k)`: every `a = a_1..a_{k-2} 0 0` other than `0100`
/// yields a matrix containing an I-circular forbidden matrix.
pub fn verify_lemma_m2(k_max: usize) -> LemmaReport {
    let mut cases = Vec::new();
    for k in 4..=k_max {
        for head in BinarySequence::all_of_length(k - 2) {
            let a = binary(head.digits().iter().copied().chain([0, 0]));
            if a.to_string() != "0100" {
                cases.push((k, a));
            }
        }
    }
    sweep("m2", &cases, |(k, a)| {
        let m = gen_mii(*k)
            .expect("k >= 4")
            .mask_complement(a)
            .expect("length k");
        expect_iforb(format!("{a}⊙MII({k})"), &m)
    })
}

/// Every I-circular forbidden matrix `F` has `Λ(F)` containing a
/// circular-ones forbidden matrix, and is minimal.
pub fn verify_lemma_l1(max_rows: usize, max_cols: usize) -> LemmaReport {
    let members = gen_forb_icircular(max_rows, max_cols);
    let mut report = sweep("L1", &members, |f| {
        let lambda = lambda_closure(&f.matrix).matrix;
        let input = f.id.to_string();
        match find_forb_certificate(&lambda) {
            Some(c) if c.verify(&lambda) => {}
            _ => {
                return Some(Failure::new(
                    input,
                    "circular-ones certificate in Λ(F)",
                    "none",
                ))
            }
        }
        (!is_minimal_forbidden_icircular(&f.matrix))
            .then(|| Failure::new(input, "minimal", "not minimal"))
    });
    let fixed: Vec<String> = members
        .iter()
        .filter(|f| lambda_closure(&f.matrix).added.is_empty())
        .map(|f| f.id.to_string())
        .collect();
    report
        .notes
        .push(format!("Λ(F) = F for: {}", fixed.join(", ")));
    report
}

/// Every circular-ones forbidden matrix with at most `k_max` rows contains
/// an I-circular forbidden matrix.
pub fn verify_lemma_fc(k_max: usize) -> LemmaReport {
    let members = gen_forb_circular(k_max, (k_max + 1).max(6));
    sweep("fc", &members, |f| {
        expect_iforb(f.id.to_string(), &f.matrix)
    })
}

/// The sixteen masks of `M_V*` fall into exactly the four configurations of
/// `M_IV`, its complement, `M_V*` and its complement.
pub fn verify_lemma_mvast() -> LemmaReport {
    let start = Instant::now();
    let targets = [
        ("MIV", gen_miv()),
        ("~MIV", gen_miv().complement()),
        ("MV*", gen_mv_star()),
        ("~MV*", gen_mv_star().complement()),
    ];
    let mut failures = Vec::new();
    let mut sizes = [0usize; 4];
    let masks: Vec<BinarySequence> = BinarySequence::all_of_length(4).collect();
    for a in &masks {
        let m = gen_mv_star().mask_complement(a).expect("four rows");
        let hits: Vec<usize> = (0..4)
            .filter(|&t| m.same_configuration(&targets[t].1))
            .collect();
        match hits.as_slice() {
            [t] => sizes[*t] += 1,
            _ => failures.push(Failure::new(
                format!("{a}⊙MV*"),
                "exactly one class",
                format!("{} classes", hits.len()),
            )),
        }
    }
    for (t, &size) in sizes.iter().enumerate() {
        if size == 0 {
            failures.push(Failure::new(targets[t].0, "realized", "no mask"));
        }
    }
    for s in 0..4 {
        for t in s + 1..4 {
            if targets[s].1.same_configuration(&targets[t].1) {
                failures.push(Failure::new(
                    format!("{} vs {}", targets[s].0, targets[t].0),
                    "different configurations",
                    "same",
                ));
            }
        }
    }
    let notes = vec![format!(
        "class sizes: {}",
        (0..4)
            .map(|t| format!("{}={}", targets[t].0, sizes[t]))
            .collect::<Vec<_>>()
            .join(", ")
    )];
    LemmaReport {
        lemma_id: "MVast".into(),
        cases_checked: masks.len(),
        failures,
        notes,
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

fn k3_proviso(b: &QuaternarySequence) -> bool {
    let d = b.digits();
    d.iter().all(|x| matches!(x, 1 | 3)) || d.iter().all(|x| matches!(x, 0 | 2))
}

/// `R(b)` contains an I-circular forbidden matrix for every quaternary `b`
/// with `3 <= |b| <= k_max`; at length 3 only `b` within `{1,3}` or
/// `{0,2}` are required.
pub fn verify_lemma_rb(k_max: usize) -> LemmaReport {
    let mut cases = Vec::new();
    let mut excluded = Vec::new();
    for k in 3..=k_max {
        for b in QuaternarySequence::all_of_length(k) {
            if k == 3 && !k3_proviso(&b) {
                excluded.push(b);
            } else {
                cases.push(b);
            }
        }
    }
    let mut report = sweep("rb", &cases, |b| {
        expect_iforb(format!("R({b})"), &gen_r(b).expect("|b| >= 3"))
    });
    let (with, without): (Vec<_>, Vec<_>) = excluded
        .iter()
        .partition(|b| find_iforb_certificate(&gen_r(b).expect("|b| = 3")).is_some());
    let mut note = format!(
        "length-3 sequences outside the proviso: {} still contain a forbidden matrix, {} do not",
        with.len(),
        without.len()
    );
    if !without.is_empty() {
        let listed: Vec<String> = without.iter().map(|b| b.to_string()).collect();
        note += &format!(" ({})", listed.join(" "));
    }
    report.notes.push(note);
    report
}

/// The 36 admissible `W(b)`, under both readings of `U_2`.
pub fn verify_lemma_w() -> LemmaReport {
    let mut cases = Vec::new();
    for variant in [UVariant::Literal, UVariant::Figure] {
        for b1 in 0..3 {
            for b2 in 0..4 {
                for b3 in 0..3 {
                    let b = QuaternarySequence::new(vec![b1, b2, b3, 0]).expect("quaternary");
                    cases.push((b, variant));
                }
            }
        }
    }
    sweep("W", &cases, |(b, variant)| {
        let m = gen_w(b, *variant).expect("admissible b");
        expect_iforb(format!("W({b}, {variant:?})"), &m)
    })
}

fn small_forb(input: String, m: &BinaryMatrix) -> Option<Failure> {
    match find_forb_certificate_within(m, 5) {
        Some(c) if c.verify(m) => None,
        _ => Some(Failure::new(
            input,
            "circular-ones certificate with < 6 columns",
            "none",
        )),
    }
}

/// `H_i(α)` contains a circular-ones forbidden matrix with fewer than six
/// columns, for `i in 1..=3` and `α` outside `{0000, 0011, 1100, 1111}`.
pub fn verify_lemma_x() -> LemmaReport {
    let excluded = ["0000", "0011", "1100", "1111"];
    let mut cases = Vec::new();
    let mut skipped = Vec::new();
    for i in 1..=3 {
        for alpha in BinarySequence::all_of_length(4) {
            if excluded.contains(&alpha.to_string().as_str()) {
                skipped.push((i, alpha));
            } else {
                cases.push((i, alpha));
            }
        }
    }
    let mut report = sweep("X", &cases, |(i, alpha)| {
        small_forb(format!("H_{i}({alpha})"), &gen_h(*i, alpha).expect("valid"))
    });
    let found: Vec<String> = skipped
        .iter()
        .filter(|(i, a)| find_forb_certificate_within(&gen_h(*i, a).expect("valid"), 5).is_some())
        .map(|(i, a)| format!("H_{i}({a})"))
        .collect();
    report.notes.push(format!(
        "excluded α with a small certificate anyway: {}",
        if found.is_empty() {
            "none".to_string()
        } else {
            found.join(", ")
        }
    ));
    report
}

/// `G(γ)` contains a circular-ones forbidden matrix with fewer than six
/// columns for every nonconstant `γ`.
pub fn verify_lemma_g() -> LemmaReport {
    let cases: Vec<BinarySequence> = BinarySequence::all_of_length(3)
        .filter(|g| !matches!(g.count_ones(), 0 | 3))
        .collect();
    let mut report = sweep("G", &cases, |g| {
        small_forb(format!("G({g})"), &gen_g(g).expect("length 3"))
    });
    let constant: Vec<String> = ["000", "111"]
        .iter()
        .filter(|g| {
            find_forb_certificate_within(&gen_g(&g.parse().expect("binary")).expect("length 3"), 5)
                .is_some()
        })
        .map(|g| g.to_string())
        .collect();
    report.notes.push(format!(
        "constant γ with a small certificate anyway: {}",
        if constant.is_empty() {
            "none".to_string()
        } else {
            constant.join(", ")
        }
    ));
    report
}

/// All matrices with at most `row_max` rows and `col_max` columns.
pub fn all_matrices_up_to(row_max: usize, col_max: usize) -> Vec<BinaryMatrix> {
    let mut out = Vec::new();
    for r in 1..=row_max {
        for c in 1..=col_max {
            out.extend(BinaryMatrix::all_of_shape(r, c));
        }
    }
    out
}

/// Seeded uniform random `rows x cols` matrices.
pub fn random_matrices(rows: usize, cols: usize, count: usize, seed: u64) -> Vec<BinaryMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let code: u64 = rng.gen::<u64>() & crate::binmat::full_set(rows * cols);
            BinaryMatrix::from_code(code, rows, cols)
        })
        .collect()
}

/// Exhaustive shapes are capped at this many cells.
pub const EXHAUSTIVE_MAX_CELLS: usize = 20;

fn exhaustive_guard(id: &str, row_max: usize, col_max: usize) -> Option<LemmaReport> {
    (row_max * col_max > EXHAUSTIVE_MAX_CELLS).then(|| LemmaReport {
        lemma_id: id.into(),
        cases_checked: 0,
        failures: vec![Failure::new(
            format!("{row_max}x{col_max}"),
            format!("at most {EXHAUSTIVE_MAX_CELLS} cells"),
            "refused",
        )],
        notes: Vec::new(),
        elapsed_secs: 0.0,
    })
}

fn icp_case(m: &BinaryMatrix) -> Option<Failure> {
    let order = has_i_circular(m);
    let cert = find_iforb_certificate(m);
    match (&order, &cert) {
        (Some(_), None) | (None, Some(_)) => {}
        _ => {
            return Some(Failure::new(
                matrix_text(m),
                "exactly one of order / certificate",
                format!("order={} certificate={}", order.is_some(), cert.is_some()),
            ))
        }
    }
    if let Some(c) = cert {
        if !c.verify(m) {
            return Some(Failure::new(
                matrix_text(m),
                "valid certificate",
                c.family.to_string(),
            ));
        }
    }
    None
}

/// I-circular iff no I-circular forbidden configuration: exhaustive up to
/// `row_max x col_max`, plus `samples` random 5x6 matrices.
pub fn verify_theorem_icp(
    row_max: usize,
    col_max: usize,
    samples: usize,
    seed: u64,
) -> LemmaReport {
    if let Some(r) = exhaustive_guard("icp", row_max, col_max) {
        return r;
    }
    let mut cases = all_matrices_up_to(row_max, col_max);
    let exhaustive = cases.len();
    cases.extend(random_matrices(5, 6, samples, seed));
    let mut report = sweep("icp", &cases, icp_case);
    report.notes.push(format!(
        "{exhaustive} exhaustive up to {row_max}x{col_max}, {samples} random 5x6 (seed {seed})"
    ));
    report
}

/// The fast recognizers agree with the exhaustive oracles.
pub fn verify_oracles(row_max: usize, col_max: usize, samples: usize, seed: u64) -> LemmaReport {
    if let Some(r) = exhaustive_guard("oracles", row_max, col_max) {
        return r;
    }
    let mut cases = all_matrices_up_to(row_max, col_max);
    cases.extend(random_matrices(5, 6, samples, seed));
    sweep("oracles", &cases, |m| {
        let fast = has_circular_ones(m).is_some();
        let slow = brute_force_circular_ones(m).expect("small").is_some();
        if fast != slow {
            return Some(Failure::new(
                matrix_text(m),
                format!("circular-ones {slow}"),
                fast,
            ));
        }
        let fast = has_i_circular(m).is_some();
        let slow = brute_force_i_circular(m).expect("small").is_some();
        (fast != slow).then(|| Failure::new(matrix_text(m), format!("I-circular {slow}"), fast))
    })
}

/// Members of both forbidden families lack their property and are
/// minimal for it.
pub fn verify_forb_minimality(
    icirc_bounds: (usize, usize),
    circ_bounds: (usize, usize),
) -> LemmaReport {
    let mut cases: Vec<(bool, crate::families::ForbMember)> = Vec::new();
    cases.extend(
        gen_forb_icircular(icirc_bounds.0, icirc_bounds.1)
            .into_iter()
            .map(|f| (true, f)),
    );
    cases.extend(
        gen_forb_circular(circ_bounds.0, circ_bounds.1)
            .into_iter()
            .map(|f| (false, f)),
    );
    sweep("forb-minimality", &cases, |(icirc, f)| {
        let (holds, minimal) = if *icirc {
            (
                has_i_circular(&f.matrix).is_some(),
                is_minimal_forbidden_icircular(&f.matrix),
            )
        } else {
            (
                has_circular_ones(&f.matrix).is_some(),
                is_minimal_forbidden_circular(&f.matrix),
            )
        };
        let family = if *icirc {
            "I-circular"
        } else {
            "circular-ones"
        };
        if holds {
            Some(Failure::new(
                f.id.to_string(),
                format!("lacks {family}"),
                "has it",
            ))
        } else if !minimal {
            Some(Failure::new(
                f.id.to_string(),
                format!("minimal for {family}"),
                "not minimal",
            ))
        } else {
            None
        }
    })
}

/// Matrices up to the bounds with no all-ones row.
fn split_cases(row_max: usize, col_max: usize) -> Vec<BinaryMatrix> {
    all_matrices_up_to(row_max, col_max)
        .into_iter()
        .filter(|m| m.rows().iter().all(|&r| r != m.full_row()))
        .collect()
}

/// The matrix verdict for `SG(M)` matches the exhaustive orientation
/// search, and negative certificates locate a forbidden graph.
pub fn verify_theorem_sgicp(row_max: usize, col_max: usize) -> LemmaReport {
    if let Some(r) = exhaustive_guard("sgicp", row_max, col_max) {
        return r;
    }
    let cases = split_cases(row_max, col_max);
    let limit = max_edges_from_env();
    let gforb = gen_gforb(row_max + col_max);
    sweep("sgicp", &cases, |m| {
        let sg = sg_from_matrix(m).expect("no all-ones row");
        let cert = is_semi_transitive_split(&sg);
        let oracle = match brute_force_semi_transitive(sg.graph(), limit) {
            Ok(o) => o.is_some(),
            Err(e) => return Some(Failure::new(matrix_text(m), "oracle verdict", e)),
        };
        if cert.verdict != oracle {
            return Some(Failure::new(
                matrix_text(m),
                format!("semi-transitive {oracle}"),
                cert.verdict,
            ));
        }
        if let Some(neg) = cert.negative {
            let member = gforb.iter().find(|g| g.name == neg.gforb_member);
            let ok = member.is_some_and(|g| {
                sg.graph().induced(&neg.vertex_map).ok().as_ref() == Some(&g.graph)
            });
            if !ok {
                return Some(Failure::new(
                    matrix_text(m),
                    "induced forbidden graph",
                    neg.gforb_member,
                ));
            }
        }
        None
    })
}

/// Every forbidden graph with at most `max_vertices` vertices has no
/// semi-transitive orientation, while each one-vertex deletion has one.
pub fn verify_gforb_minimality(max_vertices: usize) -> LemmaReport {
    let members = gen_gforb(max_vertices);
    let limit = max_edges_from_env();
    let mut report = sweep("gforb", &members, |g| {
        match brute_force_semi_transitive(&g.graph, limit) {
            Ok(None) => {}
            Ok(Some(_)) => {
                return Some(Failure::new(
                    &g.name,
                    "not semi-transitive",
                    "orientation found",
                ))
            }
            Err(e) => return Some(Failure::new(&g.name, "oracle verdict", e)),
        }
        let bad: Vec<usize> = (1..=g.graph.vertex_count())
            .into_par_iter()
            .filter(|&v| {
                !matches!(
                    brute_force_semi_transitive(&g.graph.without_vertex(v), limit),
                    Ok(Some(_))
                )
            })
            .collect();
        (!bad.is_empty()).then(|| {
            Failure::new(
                &g.name,
                "every deletion semi-transitive",
                format!("fails after deleting {bad:?}"),
            )
        })
    });
    report.notes.push(format!(
        "members: {}",
        members
            .iter()
            .map(|g| g.name.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    report
}

/// The two-bullet arrangement condition, taken existentially, coincides
/// with I-circularity of `A(G)`.
pub fn verify_kp(row_max: usize, col_max: usize) -> LemmaReport {
    if let Some(r) = exhaustive_guard("kp", row_max, col_max) {
        return r;
    }
    let cases = split_cases(row_max, col_max);
    sweep("kp", &cases, |m| {
        let a = adjacency_matrix(&sg_from_matrix(m).expect("no all-ones row")).expect("nonempty");
        let kp = kp_decision(&a).expect("small").is_some();
        let ic = has_i_circular(&a).is_some();
        (kp != ic).then(|| {
            Failure::new(
                matrix_text(m),
                format!("I-circular {ic}"),
                format!("kp {kp}"),
            )
        })
    })
}

/// One submatrix identity quoted in a proof: `host` restricted to `rho`,
/// `sigma` has the configuration of `expected`.
#[derive(Clone, Debug)]
pub struct ProofLine {
    pub lemma: &'static str,
    pub label: String,
    pub host: BinaryMatrix,
    pub rho: IndexMap,
    pub sigma: IndexMap,
    pub expected: BinaryMatrix,
}

impl ProofLine {
    fn new(
        lemma: &'static str,
        label: impl Into<String>,
        host: BinaryMatrix,
        rho: &[usize],
        sigma: &[usize],
        expected: BinaryMatrix,
    ) -> Self {
        Self {
            lemma,
            label: label.into(),
            host,
            rho: IndexMap::new(rho.to_vec()).expect("injective"),
            sigma: IndexMap::new(sigma.to_vec()).expect("injective"),
            expected,
        }
    }

    pub fn submatrix(&self) -> Option<BinaryMatrix> {
        self.host.submatrix(&self.rho, &self.sigma).ok()
    }

    /// Holds as a configuration equality.
    pub fn holds(&self) -> bool {
        self.submatrix()
            .is_some_and(|s| s.same_configuration(&self.expected))
    }

    /// Holds entry for entry.
    pub fn holds_exactly(&self) -> bool {
        self.submatrix().as_ref() == Some(&self.expected)
    }
}

fn masked(m: BinaryMatrix, a: &str) -> BinaryMatrix {
    m.mask_complement(&a.parse().expect("binary mask"))
        .expect("mask length")
}

fn r(b: &str) -> BinaryMatrix {
    gen_r(&b.parse().expect("quaternary")).expect("|b| >= 3")
}

fn h(i: usize, alpha: &str) -> BinaryMatrix {
    gen_h(i, &alpha.parse().expect("binary")).expect("valid")
}

fn mis(k: usize) -> BinaryMatrix {
    gen_mi_star(k).expect("k >= 3")
}

fn mii(k: usize) -> BinaryMatrix {
    gen_mii(k).expect("k >= 4")
}

/// Row of `Λ(m)` added for the given pair of source rows.
fn lambda_row(m: &BinaryMatrix, pair: (usize, usize)) -> usize {
    lambda_closure(m)
        .row_for_pair(pair)
        .expect("pair qualifies")
}

/// Concrete instances of the submatrix identities quoted in the proofs.
pub fn proof_lines() -> Vec<ProofLine> {
    use ProofLine as P;
    let vi = gen_mvi;
    let mut out = vec![
        // Masked M_II(k).
        P::new(
            "m2",
            "(01000⊙MII(5))<2,4,5>,<4,1,2,5> ~ MVI",
            masked(mii(5), "01000"),
            &[2, 4, 5],
            &[4, 1, 2, 5],
            vi(),
        ),
        P::new(
            "m2",
            "(001000⊙MII(6))<3,5,6>,<5,1,3,6> ~ MVI",
            masked(mii(6), "001000"),
            &[3, 5, 6],
            &[5, 1, 3, 6],
            vi(),
        ),
        P::new(
            "m2",
            "(10000⊙MII(5))<2,3,4,1>,<2,3,4,5> ~ MII(4)",
            masked(mii(5), "10000"),
            &[2, 3, 4, 1],
            &[2, 3, 4, 5],
            mii(4),
        ),
        P::new(
            "m2",
            "(00100⊙MII(5))<1,2,3,5>,<1,2,3,5> ~ MII(4)",
            masked(mii(5), "00100"),
            &[1, 2, 3, 5],
            &[1, 2, 3, 5],
            mii(4),
        ),
        P::new(
            "m2",
            "(100100⊙MII(6))<2,3,4,1>,<2,3,4,6> ~ MII(4)",
            masked(mii(6), "100100"),
            &[2, 3, 4, 1],
            &[2, 3, 4, 6],
            mii(4),
        ),
        P::new(
            "m2",
            "(1100⊙MII(4))<1,2,4,3>,<3,4,1,2> ~ MII(4)",
            masked(mii(4), "1100"),
            &[1, 2, 4, 3],
            &[3, 4, 1, 2],
            mii(4),
        ),
        P::new(
            "m2",
            "(1000⊙MII(4))<2,1,4,3>,<3,2,1,4> ~ 0100⊙MII(4)",
            masked(mii(4), "1000"),
            &[2, 1, 4, 3],
            &[3, 2, 1, 4],
            masked(mii(4), "0100"),
        ),
        // Λ of the I-circular forbidden matrices.
        P::new(
            "L1",
            "Λ(0101⊙MI*(4))<1,2,3,4>,id5 ~ 0101⊙MI*(4)",
            lambda_closure(&masked(mis(4), "0101")).matrix,
            &[1, 2, 3, 4],
            &[1, 2, 3, 4, 5],
            masked(mis(4), "0101"),
        ),
        P::new(
            "L1",
            "Λ(MVI)<4,5,6>,id4 ~ 111⊙MI*(3)",
            lambda_closure(&vi()).matrix,
            &[4, 5, 6],
            &[1, 2, 3, 4],
            masked(mis(3), "111"),
        ),
    ];
    for k in 4..=7 {
        let f = mii(k);
        let extra = lambda_row(&f, (k - 1, k));
        let rho: Vec<usize> = (1..=k - 2).chain([extra]).collect();
        let mask: String = "0".repeat(k - 2) + "1";
        out.push(P::new(
            "L1",
            format!(
                "Λ(MII({k}))<1..{},{extra}>,id{k} ~ {mask}⊙MI*({})",
                k - 2,
                k - 1
            ),
            lambda_closure(&f).matrix,
            &rho,
            &(1..=k).collect::<Vec<_>>(),
            masked(mis(k - 1), &mask),
        ));
    }
    let mv = gen_mv();
    let mv_row = lambda_row(&mv, (2, 4));
    out.push(P::new(
        "L1",
        format!("Λ(MV)<1,4,3,{mv_row}>,id5 ~ 0100⊙MI*(4)"),
        lambda_closure(&mv).matrix,
        &[1, 4, 3, mv_row],
        &[1, 2, 3, 4, 5],
        masked(mis(4), "0100"),
    ));
    let f = masked(mii(4), "0100");
    let f_row = lambda_row(&f, (3, 4));
    out.push(P::new(
        "L1",
        format!("Λ(0100⊙MII(4))<1,2,{f_row}>,id4 ~ MI*(3)"),
        lambda_closure(&f).matrix,
        &[1, 2, f_row],
        &[1, 2, 3, 4],
        mis(3),
    ));
    out.extend([
        // Circular-ones forbidden matrices.
        P::new(
            "fc",
            "MV*<1,2,3,4>,<1,2,3,4,5> ~ MV",
            gen_mv_star(),
            &[1, 2, 3, 4],
            &[1, 2, 3, 4, 5],
            gen_mv(),
        ),
        P::new(
            "fc",
            "~MIV<2,3,4>,<1,2,3,5> ~ MVI",
            gen_miv().complement(),
            &[2, 3, 4],
            &[1, 2, 3, 5],
            vi(),
        ),
        P::new(
            "fc",
            "~MV*<1,3,4>,<2,3,5,6> ~ MVI",
            gen_mv_star().complement(),
            &[1, 3, 4],
            &[2, 3, 5, 6],
            vi(),
        ),
        P::new(
            "fc",
            "(0111⊙MI*(4))<1,2,3,4>,<1,2,3,5> ~ 0100⊙MII(4)",
            masked(mis(4), "0111"),
            &[1, 2, 3, 4],
            &[1, 2, 3, 5],
            masked(mii(4), "0100"),
        ),
        P::new(
            "fc",
            "111⊙MI*(3) ~ MIII(3)",
            masked(mis(3), "111"),
            &[1, 2, 3],
            &[1, 2, 3, 4],
            gen_miii(3).expect("k = 3"),
        ),
        // R(b).
        P::new(
            "rb",
            "R(3300)<1,2,4>,<1,2,3,5> ~ MVI",
            r("3300"),
            &[1, 2, 4],
            &[1, 2, 3, 5],
            vi(),
        ),
        P::new(
            "rb",
            "R(2100)<1,2,3>,<1,2,4,5> ~ MVI",
            r("2100"),
            &[1, 2, 3],
            &[1, 2, 4, 5],
            vi(),
        ),
        P::new(
            "rb",
            "R(2200)<2,3,4>,<1,2,3,5> ~ MVI",
            r("2200"),
            &[2, 3, 4],
            &[1, 2, 3, 5],
            vi(),
        ),
        P::new(
            "rb",
            "R(200)<3,4,1,2>,<3,2,4,1> ~ 0100⊙MII(4)",
            r("200"),
            &[3, 4, 1, 2],
            &[3, 2, 4, 1],
            masked(mii(4), "0100"),
        ),
        // H_i(α).
        P::new(
            "X",
            "H1(0001)<2,5,4>,<6,5,3,1> ~ ~MI*(3)",
            h(1, "0001"),
            &[2, 5, 4],
            &[6, 5, 3, 1],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H2(0001)<3,5,4>,<6,1,3,4> ~ ~MI*(3)",
            h(2, "0001"),
            &[3, 5, 4],
            &[6, 1, 3, 4],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H3(0001)<1,5,4>,<1,2,4,6> ~ MI*(3)",
            h(3, "0001"),
            &[1, 5, 4],
            &[1, 2, 4, 6],
            mis(3),
        ),
        P::new(
            "X",
            "H1(0010)<2,4,5>,<2,4,5,6> ~ MI*(3)",
            h(1, "0010"),
            &[2, 4, 5],
            &[2, 4, 5, 6],
            mis(3),
        ),
        P::new(
            "X",
            "H2(0010)<4,3,5>,<5,4,3,2> ~ MI*(3)",
            h(2, "0010"),
            &[4, 3, 5],
            &[5, 4, 3, 2],
            mis(3),
        ),
        P::new(
            "X",
            "H3(0010)<1,4,5>,<5,3,2,1> ~ ~MI*(3)",
            h(3, "0010"),
            &[1, 4, 5],
            &[5, 3, 2, 1],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H1(0100)<3,4,5>,<5,2,3,4> ~ ~MI*(3)",
            h(1, "0100"),
            &[3, 4, 5],
            &[5, 2, 3, 4],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H3(0100)<2,5,4>,<6,5,2,4> ~ ~MI*(3)",
            h(3, "0100"),
            &[2, 5, 4],
            &[6, 5, 2, 4],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H2(0100)<1,5,4>,<1,2,5,3> ~ MI*(3)",
            h(2, "0100"),
            &[1, 5, 4],
            &[1, 2, 5, 3],
            mis(3),
        ),
        P::new(
            "X",
            "H1(0101)<2,5,4>,<6,5,3,1> ~ ~MI*(3)",
            h(1, "0101"),
            &[2, 5, 4],
            &[6, 5, 3, 1],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H2(0101)<1,4,6>,<4,3,2,1> ~ ~MI*(3)",
            h(2, "0101"),
            &[1, 4, 6],
            &[4, 3, 2, 1],
            mis(3).complement(),
        ),
        P::new(
            "X",
            "H1(0110)<3,6,5,2>,<3,4,5,6,2> ~ 0111⊙MI*(4)",
            h(1, "0110"),
            &[3, 6, 5, 2],
            &[3, 4, 5, 6, 2],
            masked(mis(4), "0111"),
        ),
        P::new(
            "X",
            "H2(0110)<1,6,3,4>,<1,2,3,4,6> ~ 0100⊙MI*(4)",
            h(2, "0110"),
            &[1, 6, 3, 4],
            &[1, 2, 3, 4, 6],
            masked(mis(4), "0100"),
        ),
        P::new(
            "X",
            "H3(0110)<1,6,4>,<1,2,4,6> ~ MI*(3)",
            h(3, "0110"),
            &[1, 6, 4],
            &[1, 2, 4, 6],
            mis(3),
        ),
        P::new(
            "X",
            "H1(0111)<6,3,4>,<1,3,4,6> ~ MI*(3)",
            h(1, "0111"),
            &[6, 3, 4],
            &[1, 3, 4, 6],
            mis(3),
        ),
        P::new(
            "X",
            "H3(0111)<2,6,4>,<1,3,5,6> ~ MI*(3)",
            h(3, "0111"),
            &[2, 6, 4],
            &[1, 3, 5, 6],
            mis(3),
        ),
        P::new(
            "X",
            "H2(0111)<1,6,4>,<6,4,2,1> ~ ~MI*(3)",
            h(2, "0111"),
            &[1, 6, 4],
            &[6, 4, 2, 1],
            mis(3).complement(),
        ),
        // G(γ).
        P::new(
            "G",
            "G(001)<1,4,3,5>,<2,1,4,3,6> ~ 0001⊙MI*(4)",
            gen_g(&"001".parse().expect("binary")).expect("γ"),
            &[1, 4, 3, 5],
            &[2, 1, 4, 3, 6],
            masked(mis(4), "0001"),
        ),
        P::new(
            "G",
            "G(010)<1,5,2,4>,<1,2,6,5,3> ~ 0110⊙MI*(4)",
            gen_g(&"010".parse().expect("binary")).expect("γ"),
            &[1, 5, 2, 4],
            &[1, 2, 6, 5, 3],
            masked(mis(4), "0110"),
        ),
        P::new(
            "G",
            "G(011)<3,4,2,6>,<3,4,5,6,2> ~ 0011⊙MI*(4)",
            gen_g(&"011".parse().expect("binary")).expect("γ"),
            &[3, 4, 2, 6],
            &[3, 4, 5, 6, 2],
            masked(mis(4), "0011"),
        ),
    ]);
    out
}

/// Quoted identities that do not hold as printed, kept so the report can
/// show they still fail.
pub fn proof_line_errata() -> Vec<(ProofLine, &'static str)> {
    use ProofLine as P;
    let vi = gen_mvi;
    vec![
        (
            P::new(
                "fc",
                "(1111⊙MI*(4))<1,2,3,4>,<3,5,1,2> ~ 0100⊙MII(4)",
                masked(mis(4), "1111"),
                &[1, 2, 3, 4],
                &[3, 5, 1, 2],
                masked(mii(4), "0100"),
            ),
            "the submatrix has the configuration of MII(4), which is also forbidden",
        ),
        (
            P::new("m2", "(10100⊙MII(5))<2,1,4,3>,<3,2,1,4> ~ 0100⊙MII(4)", masked(mii(5), "10100"), &[2, 1, 4, 3], &[3, 2, 1, 4], masked(mii(4), "0100")),
            "the submatrix is 1100/1001/1110/0110, not a configuration of 0100⊙MII(4)",
        ),
        (
            P::new("rb", "R(3030)<1,2,4>,<1,2,4,5> ~ MVI", r("3030"), &[1, 2, 4], &[1, 2, 4, 5], vi()),
            "column j+1 of the first row of Q_3(j) is a 1; with column j instead the submatrix is an MVI configuration",
        ),
        (
            P::new("rb", "R(2030)<1,2,4>,<1,2,3,5> ~ MVI", r("2030"), &[1, 2, 4], &[1, 2, 3, 5], vi()),
            "the submatrix has two equal rows, so it is not an MVI configuration",
        ),
        (
            P::new("rb", "R(2001)<1,2,4>,<3,5,1,2> ~ MVI", r("2001"), &[1, 2, 4], &[3, 5, 1, 2], vi()),
            "row k lies in the b_3 block; the submatrix is not an MVI configuration",
        ),
        (
            P::new("rb", "R(2002)<1,2,5>,<4,2,5,1> ~ MVI", r("2002"), &[1, 2, 5], &[4, 2, 5, 1], vi()),
            "the submatrix has two equal rows, so it is not an MVI configuration",
        ),
        (
            P::new("rb", "R(2000)<1,2,3,4>,<1,4,3,2,5> ~ MV", r("2000"), &[1, 2, 3, 4], &[1, 4, 3, 2, 5], gen_mv()),
            "the submatrix is not an MV configuration",
        ),
    ]
}

/// Checks every entry of [`proof_lines`] as a configuration equality.
pub fn verify_proof_lines() -> LemmaReport {
    let lines = proof_lines();
    let mut report = sweep("proof-lines", &lines, |p| {
        (!p.holds()).then(|| {
            Failure::new(
                &p.label,
                matrix_text(&p.expected),
                p.submatrix()
                    .map_or("out of range".into(), |s| matrix_text(&s)),
            )
        })
    });
    let exact = lines.iter().filter(|p| p.holds_exactly()).count();
    report
        .notes
        .push(format!("{exact} of {} hold entry for entry", lines.len()));
    for (p, why) in proof_line_errata() {
        report.notes.push(format!(
            "as printed, {} {}: {why}",
            p.label,
            if p.holds() { "holds" } else { "does not hold" }
        ));
    }
    report
}

/// Every check at its default bounds, in a fixed order.
pub fn verify_all(k_max: usize, samples: usize, seed: u64) -> Vec<LemmaReport> {
    vec![
        verify_lemma_m2(k_max),
        verify_lemma_l1(8, 9),
        verify_lemma_fc(k_max),
        verify_lemma_mvast(),
        verify_lemma_rb(k_max),
        verify_lemma_w(),
        verify_lemma_x(),
        verify_lemma_g(),
        verify_theorem_icp(4, 4, samples, seed),
        verify_oracles(4, 4, samples, seed),
        verify_forb_minimality((8, 9), (7, 8)),
        verify_theorem_sgicp(3, 4),
        verify_kp(3, 4),
        verify_gforb_minimality(11),
        verify_proof_lines(),
    ]
}

/// Identifiers accepted by [`verify_by_id`].
pub const LEMMA_IDS: &[&str] = &[
    "m2",
    "L1",
    "fc",
    "MVast",
    "rb",
    "W",
    "X",
    "G",
    "icp",
    "oracles",
    "forb-minimality",
    "sgicp",
    "kp",
    "gforb",
    "proof-lines",
];

/// Runs one check by identifier.
pub fn verify_by_id(id: &str, k_max: usize, samples: usize, seed: u64) -> Option<LemmaReport> {
    Some(match id {
        "m2" => verify_lemma_m2(k_max),
        "L1" => verify_lemma_l1(8, 9),
        "fc" => verify_lemma_fc(k_max),
        "MVast" => verify_lemma_mvast(),
        "rb" => verify_lemma_rb(k_max),
        "W" => verify_lemma_w(),
        "X" => verify_lemma_x(),
        "G" => verify_lemma_g(),
        "icp" => verify_theorem_icp(4, 4, samples, seed),
        "oracles" => verify_oracles(4, 4, samples, seed),
        "forb-minimality" => verify_forb_minimality((8, 9), (7, 8)),
        "sgicp" => verify_theorem_sgicp(3, 4),
        "kp" => verify_kp(3, 4),
        "gforb" => verify_gforb_minimality(11),
        "proof-lines" => verify_proof_lines(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2_counts() {
        let r = verify_lemma_m2(4);
        assert_eq!(r.cases_checked, 3);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(verify_lemma_m2(6).cases_checked, 3 + 8 + 16);
    }

    #[test]
    fn small_sweeps_pass() {
        for r in [
            verify_lemma_mvast(),
            verify_lemma_g(),
            verify_theorem_icp(1, 1, 0, 1),
        ] {
            assert!(r.passed(), "{}: {:?}", r.lemma_id, r.failures);
        }
        assert_eq!(verify_theorem_icp(1, 1, 0, 1).cases_checked, 2);
    }

    #[test]
    fn exhaustive_guard_refuses_large_shapes() {
        let r = verify_theorem_icp(5, 5, 0, 1);
        assert!(!r.passed());
        assert_eq!(r.cases_checked, 0);
    }
}
