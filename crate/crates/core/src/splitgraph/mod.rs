//! Split graphs: recognition, the matrices `A(G)` and `SG(M)`, the
//! semi-transitivity decision with induced-subgraph certificates, and the
//! forbidden graph family.

mod graph;
mod orientation;

pub use graph::{Graph, MAX_VERTICES};
pub use orientation::{
    brute_force_semi_transitive, max_edges_from_env, verify_orientation, Orientation,
    ShortcutWitness, DEFAULT_MAX_EDGES,
};

use serde::{Deserialize, Serialize};

use crate::binmat::{BinaryMatrix, ColSet};
use crate::c1p::{find_circular_order, CircularColumnOrder, BRUTE_FORCE_MAX_COLUMNS};
use crate::error::{domain, Error, Result};
use crate::families::{gen_forb_icircular, FamilyId, FamilyKind};
use crate::icirc::{find_iforb_certificate, has_i_circular};

/// A graph with a clique `C` and an independent set `I` covering its
/// vertices, where no vertex of `I` sees all of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGraph {
    graph: Graph,
    clique: Vec<usize>,
    independent: Vec<usize>,
}

impl SplitGraph {
    /// Validates the partition, including the normalisation condition.
    pub fn new(graph: Graph, mut clique: Vec<usize>, mut independent: Vec<usize>) -> Result<Self> {
        clique.sort_unstable();
        independent.sort_unstable();
        let n = graph.vertex_count();
        let mut all: Vec<usize> = clique.iter().chain(&independent).copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return Err(domain(
                "clique and independent set must partition the vertices",
            ));
        }
        let c_mask = mask(&clique);
        for &u in &clique {
            if (graph.neighbor_mask(u) | 1 << (u - 1)) & c_mask != c_mask {
                return Err(domain(format!(
                    "clique vertex {u} misses another clique vertex"
                )));
            }
        }
        for &v in &independent {
            if graph.neighbor_mask(v) & mask(&independent) != 0 {
                return Err(domain(format!(
                    "independent vertex {v} has an independent neighbour"
                )));
            }
            if graph.neighbor_mask(v) & c_mask == c_mask {
                return Err(domain(format!(
                    "independent vertex {v} sees the whole clique"
                )));
            }
        }
        Ok(Self {
            graph,
            clique,
            independent,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn independent(&self) -> &[usize] {
        &self.independent
    }
}

fn mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

/// Splits `g` into clique and independent set, or `None` if `g` is not a
/// split graph. Independent vertices adjacent to the whole clique are moved
/// into it.
pub fn split_partition(g: &Graph) -> Option<SplitGraph> {
    let n = g.vertex_count();
    let mut verts: Vec<usize> = (1..=n).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = verts.iter().map(|&v| g.degree(v)).collect();
    // Hammer–Simeone: with m the largest i such that d_i >= i - 1, the graph
    // is split iff the top-m degree sum is m(m-1) plus the remaining sum.
    let m = (1..=n).filter(|&i| d[i - 1] >= i - 1).max().unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let rest: usize = d[m..].iter().sum();
    if top != m * m.saturating_sub(1) + rest {
        return None;
    }
    let mut clique: Vec<usize> = verts[..m].to_vec();
    let mut independent: Vec<usize> = verts[m..].to_vec();
    loop {
        let c_mask = mask(&clique);
        let Some(p) = independent
            .iter()
            .position(|&v| g.neighbor_mask(v) & c_mask == c_mask)
        else {
            break;
        };
        clique.push(independent.remove(p));
    }
    SplitGraph::new(g.clone(), clique, independent).ok()
}

/// `A(G)`: rows are the independent vertices, columns the clique vertices,
/// both ascending. `None` when either side is empty.
pub fn adjacency_matrix(sg: &SplitGraph) -> Option<BinaryMatrix> {
    if sg.independent.is_empty() || sg.clique.is_empty() {
        return None;
    }
    let rows: Vec<ColSet> = sg
        .independent
        .iter()
        .map(|&v| {
            sg.clique
                .iter()
                .enumerate()
                .filter(|(_, &c)| sg.graph.has_edge(v, c))
                .fold(0, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    Some(BinaryMatrix::from_rows(rows, sg.clique.len()).expect("nonempty shape"))
}

/// `SG(M)`: vertices `1..=k` for the rows (independent), `k+1..=k+l` for the
/// columns (clique), with an edge wherever `M` has a 1. Rows of all ones
/// would break the normalisation and are rejected.
pub fn sg_from_matrix(m: &BinaryMatrix) -> Result<SplitGraph> {
    let (k, l) = (m.row_count(), m.col_count());
    if let Some(i) = (1..=k).find(|&i| m.row(i) == m.full_row()) {
        return Err(domain(format!("row {i} is all ones")));
    }
    let mut g = Graph::new(k + l)?;
    for a in k + 1..=k + l {
        for b in a + 1..=k + l {
            g.add_edge(a, b)?;
        }
    }
    for i in 1..=k {
        for j in 1..=l {
            if m.entry(i, j) {
                g.add_edge(i, k + j)?;
            }
        }
    }
    SplitGraph::new(g, (k + 1..=k + l).collect(), (1..=k).collect())
}

/// A forbidden split graph: the image under `SG` of an I-circular forbidden
/// matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GForbMember {
    pub name: String,
    pub source: FamilyId,
    pub graph: Graph,
}

fn is_masked_mii4(id: &FamilyId) -> bool {
    id.kind == FamilyKind::MII && id.k == Some(4) && id.mask.is_some()
}

fn is_mvii_source(id: &FamilyId) -> bool {
    id.kind == FamilyKind::MIstar && id.k == Some(4) && id.mask.is_some()
}

fn gforb_member(id: FamilyId, matrix: &BinaryMatrix) -> GForbMember {
    let name = if is_mvii_source(&id) {
        "MVII".to_string()
    } else {
        id.to_string()
    };
    let graph = sg_from_matrix(matrix)
        .expect("forbidden matrices have no all-ones row")
        .graph;
    GForbMember {
        name,
        source: id,
        graph,
    }
}

/// Members with at most `max_vertices` vertices, in the order of the
/// matrix family. `0100⊙MII(4)` is left out: its graph properly contains
/// `SG(MI*(3))`. `MVII` is `SG(0101⊙MI*(4))`.
pub fn gen_gforb(max_vertices: usize) -> Vec<GForbMember> {
    gen_forb_icircular(max_vertices, max_vertices)
        .into_iter()
        .filter(|f| f.matrix.row_count() + f.matrix.col_count() <= max_vertices)
        .filter(|f| !is_masked_mii4(&f.id))
        .map(|f| gforb_member(f.id, &f.matrix))
        .collect()
}

/// Evidence that a split graph contains a forbidden graph: `vertex_map[i - 1]`
/// is the host vertex playing vertex `i` of the member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphCertificate {
    pub gforb_member: String,
    pub family: FamilyId,
    pub vertex_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiTransCertificate {
    pub verdict: bool,
    pub positive: Option<CircularColumnOrder>,
    pub negative: Option<GraphCertificate>,
}

/// Decides semi-transitivity through `A(G)`. A negative answer names a
/// forbidden graph and where it sits in `G`.
pub fn is_semi_transitive_split(sg: &SplitGraph) -> SemiTransCertificate {
    let Some(a) = adjacency_matrix(sg) else {
        return SemiTransCertificate {
            verdict: true,
            positive: None,
            negative: None,
        };
    };
    if let Some(order) = has_i_circular(&a) {
        return SemiTransCertificate {
            verdict: true,
            positive: Some(order),
            negative: None,
        };
    }
    let cert = find_iforb_certificate(&a).expect("every non-I-circular matrix has a certificate");
    let row_vertex = |i: usize| sg.independent[cert.witness.row_map.get(i) - 1];
    let col_vertex = |j: usize| sg.clique[cert.witness.col_map.get(j) - 1];
    let (k, l) = (cert.forbidden.row_count(), cert.forbidden.col_count());
    let negative = if is_masked_mii4(&cert.family) {
        // Columns 1, 2, 4 with all four rows already induce SG(MI*(3)).
        let vertices: Vec<usize> = (1..=k)
            .map(row_vertex)
            .chain([1, 2, 4].map(col_vertex))
            .collect();
        let id = FamilyId::sized(FamilyKind::MIstar, 3);
        let member = gforb_member(id.clone(), &id.build().expect("MI*(3)"));
        let sub = sg.graph.induced(&vertices).expect("distinct host vertices");
        let local = sub
            .find_induced_copy(&member.graph)
            .expect("the seven vertices induce SG(MI*(3))");
        GraphCertificate {
            gforb_member: member.name,
            family: id,
            vertex_map: local.into_iter().map(|v| vertices[v - 1]).collect(),
        }
    } else {
        let member = gforb_member(cert.family.clone(), &cert.forbidden);
        GraphCertificate {
            gforb_member: member.name,
            family: cert.family,
            vertex_map: (1..=k)
                .map(row_vertex)
                .chain((1..=l).map(col_vertex))
                .collect(),
        }
    };
    SemiTransCertificate {
        verdict: false,
        positive: None,
        negative: Some(negative),
    }
}

/// The two-bullet condition on a column arrangement (`arrangement[p]` is
/// the column at position `p + 1`): every row is a circular interval, and
/// whenever a row reads `1^a 0^b 1^c` with `a, b, c >= 1`, no other row has
/// ones throughout positions `a..=a+b+1`.
pub fn kp_condition(m: &BinaryMatrix, arrangement: &[usize]) -> bool {
    let l = m.col_count();
    let full = crate::binmat::full_set(l);
    let slots: Vec<ColSet> = m
        .rows()
        .iter()
        .map(|&r| {
            arrangement
                .iter()
                .enumerate()
                .fold(0, |acc, (p, &c)| acc | ((r >> (c - 1)) & 1) << p)
        })
        .collect();
    if !slots.iter().all(|&s| crate::c1p::slots_form_arc(s, l)) {
        return false;
    }
    slots.iter().enumerate().all(|(i, &s)| {
        // 1^a 0^b 1^c: bit 0 and bit l-1 set, not all ones.
        if s & 1 == 0 || s >> (l - 1) & 1 == 0 || s == full {
            return true;
        }
        let a = s.trailing_ones() as usize;
        let gap = !s & full;
        let b = gap.count_ones() as usize;
        // Positions a..=a+b+1, 1-based, are bits a-1..=a+b.
        let window = crate::binmat::full_set(b + 2) << (a - 1);
        slots
            .iter()
            .enumerate()
            .all(|(j, &t)| j == i || t & window != window)
    })
}

/// Whether some circular arrangement of the columns satisfies
/// [`kp_condition`]. Exhaustive; refuses more than nine columns.
pub fn kp_decision(m: &BinaryMatrix) -> Result<Option<CircularColumnOrder>> {
    if m.col_count() > BRUTE_FORCE_MAX_COLUMNS {
        return Err(Error::Guard {
            what: "column count",
            actual: m.col_count(),
            limit: BRUTE_FORCE_MAX_COLUMNS,
        });
    }
    Ok(find_circular_order(m.col_count(), |o| {
        kp_condition(m, o.columns())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_mi, gen_mvi};

    #[test]
    fn partitions() {
        let k3 = Graph::complete(3).unwrap();
        let sg = split_partition(&k3).unwrap();
        assert_eq!(sg.clique(), &[1, 2, 3]);
        assert!(sg.independent().is_empty());

        let p4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let sg = split_partition(&p4).unwrap();
        assert_eq!(sg.clique(), &[2, 3]);
        assert_eq!(sg.independent(), &[1, 4]);

        let c4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(split_partition(&c4).is_none());

        // Star K_{1,3}: the clique is the centre plus one leaf.
        let star = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let sg = split_partition(&star).unwrap();
        assert_eq!(sg.clique().len(), 2);
        assert_eq!(adjacency_matrix(&sg).unwrap().to_string().trim(), "10\n10");
    }

    #[test]
    fn matrix_round_trip() {
        let vi = gen_mvi();
        let sg = sg_from_matrix(&vi).unwrap();
        assert_eq!(sg.graph().vertex_count(), 7);
        assert_eq!(adjacency_matrix(&sg).unwrap(), vi);
        let single = BinaryMatrix::from_strs(&["0"]).unwrap();
        assert_eq!(sg_from_matrix(&single).unwrap().graph().edge_count(), 0);
        let ones = BinaryMatrix::from_strs(&["11"]).unwrap();
        assert!(sg_from_matrix(&ones).is_err());

        let g = Graph::from_edges(3, &[(2, 3), (1, 2)]).unwrap();
        let sg = SplitGraph::new(g, vec![2, 3], vec![1]).unwrap();
        assert_eq!(adjacency_matrix(&sg).unwrap().to_string().trim(), "10");
    }

    #[test]
    fn decisions() {
        let sun = sg_from_matrix(&gen_mi(3).unwrap()).unwrap();
        assert!(is_semi_transitive_split(&sun).verdict);

        let sg = sg_from_matrix(&gen_mvi()).unwrap();
        let cert = is_semi_transitive_split(&sg);
        assert!(!cert.verdict);
        let neg = cert.negative.unwrap();
        assert_eq!(neg.gforb_member, "MVI");

        let complete = split_partition(&Graph::complete(4).unwrap()).unwrap();
        assert!(is_semi_transitive_split(&complete).verdict);
    }

    #[test]
    fn kp_examples() {
        let one = BinaryMatrix::from_strs(&["101"]).unwrap();
        assert!(kp_condition(&one, &[1, 2, 3]));
        let pair = BinaryMatrix::from_strs(&["1011", "1110"]).unwrap();
        assert!(!kp_condition(&pair, &[1, 2, 3, 4]));
        let path = BinaryMatrix::from_strs(&["110", "011"]).unwrap();
        assert!(kp_condition(&path, &[1, 2, 3]));
    }

    #[test]
    fn gforb_small() {
        let names: Vec<String> = gen_gforb(7).into_iter().map(|g| g.name).collect();
        assert!(names.contains(&"MI*(3)".to_string()));
        assert!(names.contains(&"MIII(3)".to_string()));
        assert!(names.contains(&"MVI".to_string()));
        let nine: Vec<String> = gen_gforb(9).into_iter().map(|g| g.name).collect();
        assert!(nine.contains(&"MVII".to_string()));
        assert!(!nine.iter().any(|n| n.contains("0100")));
    }
}
