//! Orientations, shortcut detection, and the exhaustive semi-transitive
//! orientation search.
//!
//! An acyclic orientation is semi-transitive when, for every arc `x -> y`,
//! the vertices lying on directed `x ~> y` paths are pairwise joined in
//! path order. With reachability bitsets `desc` and `anc` that set is
//! `B = (desc[x] & anc[y]) | {x, y}`, and the test is `desc[a] & B ⊆ out[a]`
//! for every `a` in `B`.

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use crate::error::{domain, Error, Result};

/// Default edge limit for [`brute_force_semi_transitive`].
pub const DEFAULT_MAX_EDGES: usize = 40;

/// An orientation of every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    out: Vec<u64>,
}

impl Orientation {
    /// Orients `graph` by the 1-based arcs `(from, to)`; every edge must
    /// appear exactly once.
    pub fn from_arcs(graph: Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = graph.vertex_count();
        let mut out = vec![0u64; n];
        for &(u, v) in arcs {
            if u == 0 || v == 0 || u > n || v > n || !graph.has_edge(u, v) {
                return Err(domain(format!("arc {u}->{v} is not an edge")));
            }
            if out[u - 1] >> (v - 1) & 1 == 1 || out[v - 1] >> (u - 1) & 1 == 1 {
                return Err(domain(format!("edge {u}-{v} oriented twice")));
            }
            out[u - 1] |= 1 << (v - 1);
        }
        if arcs.len() != graph.edge_count() {
            return Err(domain(format!(
                "{} arcs for {} edges",
                arcs.len(),
                graph.edge_count()
            )));
        }
        Ok(Self { graph, out })
    }

    /// The transitive orientation `u -> v` for `u < v`.
    pub fn by_vertex_order(graph: Graph) -> Self {
        let arcs = graph.edges();
        Self::from_arcs(graph, &arcs).expect("every edge once")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u - 1] >> (v - 1) & 1 == 1
    }

    /// Arcs in lexicographic order of the underlying edge.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| if self.has_arc(u, v) { (u, v) } else { (v, u) })
            .collect()
    }
}

/// Why an orientation is not semi-transitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ShortcutWitness {
    /// A directed cycle `v_0 -> ... -> v_m -> v_0`.
    Cycle(Vec<usize>),
    /// A directed path `v_0 -> ... -> v_m` with the arc `v_0 -> v_m`, and a
    /// pair `(v_i, v_j)`, `i < j`, lacking its arc.
    Shortcut {
        path: Vec<usize>,
        missing: (usize, usize),
    },
}

impl ShortcutWitness {
    /// Checks the witness against `o` directly.
    pub fn check(&self, o: &Orientation) -> bool {
        let n = o.graph.vertex_count();
        let valid = |p: &[usize]| p.iter().all(|&v| v >= 1 && v <= n);
        match self {
            ShortcutWitness::Cycle(c) => {
                valid(c)
                    && c.len() >= 2
                    && c.windows(2).all(|w| o.has_arc(w[0], w[1]))
                    && o.has_arc(c[c.len() - 1], c[0])
            }
            ShortcutWitness::Shortcut { path, missing } => {
                if !valid(path) || path.len() < 3 {
                    return false;
                }
                let pos = |v: usize| path.iter().position(|&p| p == v);
                path.windows(2).all(|w| o.has_arc(w[0], w[1]))
                    && o.has_arc(path[0], path[path.len() - 1])
                    && matches!((pos(missing.0), pos(missing.1)), (Some(i), Some(j)) if i < j)
                    && !o.has_arc(missing.0, missing.1)
            }
        }
    }
}

fn bits(mut s: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let b = s.trailing_zeros() as usize;
            s &= s - 1;
            b
        })
    })
}

/// Shortest directed path from `from` to `to`, 0-based; `to` must be reachable.
fn directed_path(out: &[u64], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; out.len()];
    let mut frontier = vec![from];
    let mut seen = 1u64 << from;
    while !frontier.is_empty() && seen >> to & 1 == 0 {
        let mut next = Vec::new();
        for &u in &frontier {
            for v in bits(out[u] & !seen) {
                seen |= 1 << v;
                prev[v] = u;
                next.push(v);
            }
        }
        frontier = next;
    }
    let mut path = vec![to];
    while *path.last().expect("nonempty") != from {
        path.push(prev[*path.last().expect("nonempty")]);
    }
    path.reverse();
    path
}

fn find_cycle(out: &[u64]) -> Option<Vec<usize>> {
    // Colour-based DFS: 0 unseen, 1 on stack, 2 done.
    let n = out.len();
    let mut colour = vec![0u8; n];
    let mut stack_path = Vec::new();
    fn dfs(
        u: usize,
        out: &[u64],
        colour: &mut [u8],
        stack_path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        colour[u] = 1;
        stack_path.push(u);
        for v in bits(out[u]) {
            if colour[v] == 1 {
                let start = stack_path.iter().position(|&w| w == v).expect("on stack");
                return Some(stack_path[start..].to_vec());
            }
            if colour[v] == 0 {
                if let Some(c) = dfs(v, out, colour, stack_path) {
                    return Some(c);
                }
            }
        }
        stack_path.pop();
        colour[u] = 2;
        None
    }
    (0..n).find_map(|u| {
        if colour[u] == 0 {
            dfs(u, out, &mut colour, &mut stack_path)
        } else {
            None
        }
    })
}

/// Strict descendants of every vertex of an acyclic orientation.
fn descendants(out: &[u64]) -> Vec<u64> {
    let n = out.len();
    let mut desc = vec![0u64; n];
    let mut done = vec![false; n];
    fn visit(u: usize, out: &[u64], desc: &mut [u64], done: &mut [bool]) {
        if done[u] {
            return;
        }
        let mut d = out[u];
        for v in bits(out[u]) {
            visit(v, out, desc, done);
            d |= desc[v];
        }
        desc[u] = d;
        done[u] = true;
    }
    for u in 0..n {
        visit(u, out, &mut desc, &mut done);
    }
    desc
}

fn transpose(rel: &[u64]) -> Vec<u64> {
    let mut t = vec![0u64; rel.len()];
    for (u, &s) in rel.iter().enumerate() {
        for v in bits(s) {
            t[v] |= 1 << u;
        }
    }
    t
}

/// First pair `(a, b)` inside the path set of arc `x -> y` with `a ~> b`
/// but no edge between them.
fn violation(x: usize, y: usize, desc: &[u64], anc: &[u64], adj: &[u64]) -> Option<(usize, usize)> {
    let b_set = (desc[x] & anc[y]) | (1 << x) | (1 << y);
    bits(b_set).find_map(|a| {
        let bad = desc[a] & b_set & !adj[a];
        (bad != 0).then(|| (a, bad.trailing_zeros() as usize))
    })
}

/// `None` when `o` is acyclic and shortcut-free; otherwise a witness.
pub fn verify_orientation(o: &Orientation) -> Option<ShortcutWitness> {
    if let Some(c) = find_cycle(&o.out) {
        return Some(ShortcutWitness::Cycle(
            c.into_iter().map(|v| v + 1).collect(),
        ));
    }
    let desc = descendants(&o.out);
    let anc = transpose(&desc);
    let adj = o.adjacency_masks();
    for (x, &outs) in o.out.iter().enumerate() {
        for y in bits(outs) {
            // Within an acyclic orientation a reachable, adjacent pair is
            // an arc, so adjacency suffices.
            if let Some((a, b)) = violation(x, y, &desc, &anc, &adj) {
                let mut path = directed_path(&o.out, x, a);
                path.extend(directed_path(&o.out, a, b).into_iter().skip(1));
                path.extend(directed_path(&o.out, b, y).into_iter().skip(1));
                return Some(ShortcutWitness::Shortcut {
                    path: path.into_iter().map(|v| v + 1).collect(),
                    missing: (a + 1, b + 1),
                });
            }
        }
    }
    None
}

impl Orientation {
    fn adjacency_masks(&self) -> Vec<u64> {
        (1..=self.graph.vertex_count())
            .map(|v| self.graph.neighbor_mask(v))
            .collect()
    }
}

/// The edge limit for [`brute_force_semi_transitive`], overridable through
/// `ICIRCULAR_MAX_EDGES`.
pub fn max_edges_from_env() -> usize {
    std::env::var("ICIRCULAR_MAX_EDGES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_EDGES)
}

struct Search<'a> {
    adj: &'a [u64],
    edges: Vec<(usize, usize)>,
    out: Vec<u64>,
    desc: Vec<u64>,
    anc: Vec<u64>,
}

impl Search<'_> {
    /// Adds `u -> v`, returning the previous reachability for undo, or
    /// `None` (leaving state untouched) if that creates a cycle or a
    /// shortcut.
    fn push(&mut self, u: usize, v: usize) -> Option<(Vec<u64>, Vec<u64>)> {
        if self.desc[v] >> u & 1 == 1 {
            return None;
        }
        let saved = (self.desc.clone(), self.anc.clone());
        let up = self.anc[u] | (1 << u);
        let down = self.desc[v] | (1 << v);
        for a in bits(up) {
            self.desc[a] |= down;
        }
        for b in bits(down) {
            self.anc[b] |= up;
        }
        self.out[u] |= 1 << v;
        // Only arcs from `up` into `down` see their path sets change.
        let ok = bits(up).all(|x| {
            bits(self.out[x] & down)
                .all(|y| violation(x, y, &self.desc, &self.anc, self.adj).is_none())
        });
        if ok {
            Some(saved)
        } else {
            self.pop(u, v, saved);
            None
        }
    }

    fn pop(&mut self, u: usize, v: usize, saved: (Vec<u64>, Vec<u64>)) {
        self.out[u] &= !(1 << v);
        self.desc = saved.0;
        self.anc = saved.1;
    }

    fn run(&mut self, depth: usize) -> bool {
        let Some(&(a, b)) = self.edges.get(depth) else {
            return true;
        };
        // Reversing every arc preserves semi-transitivity, so the first
        // edge keeps one direction.
        let dirs: &[(usize, usize)] = if depth == 0 {
            &[(a, b)]
        } else {
            &[(a, b), (b, a)]
        };
        for &(u, v) in dirs {
            if let Some(saved) = self.push(u, v) {
                if self.run(depth + 1) {
                    return true;
                }
                self.pop(u, v, saved);
            }
        }
        false
    }
}

/// Edges ordered so each new vertex (by descending degree) is joined to
/// the ones already placed; constraints then bite early.
fn search_order(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v + 1)), v));
    let mut placed = 0u64;
    let mut edges = Vec::with_capacity(g.edge_count());
    for &v in &verts {
        for u in verts.iter().copied().filter(|&u| placed >> u & 1 == 1) {
            if g.has_edge(u + 1, v + 1) {
                edges.push((u, v));
            }
        }
        placed |= 1 << v;
    }
    edges
}

/// Exhaustive search for a semi-transitive orientation. Refuses graphs with
/// more than `max_edges` edges.
pub fn brute_force_semi_transitive(g: &Graph, max_edges: usize) -> Result<Option<Orientation>> {
    if g.edge_count() > max_edges {
        return Err(Error::Guard {
            what: "edge count",
            actual: g.edge_count(),
            limit: max_edges,
        });
    }
    let n = g.vertex_count();
    let adj: Vec<u64> = (1..=n).map(|v| g.neighbor_mask(v)).collect();
    let mut s = Search {
        adj: &adj,
        edges: search_order(g),
        out: vec![0; n],
        desc: vec![0; n],
        anc: vec![0; n],
    };
    if !s.run(0) {
        return Ok(None);
    }
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            bits(s.out[u])
                .map(move |v| (u + 1, v + 1))
                .collect::<Vec<_>>()
        })
        .collect();
    let o = Orientation::from_arcs(g.clone(), &arcs).expect("search orients every edge once");
    debug_assert!(verify_orientation(&o).is_none());
    Ok(Some(o))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_tournament_is_fine() {
        let o = Orientation::by_vertex_order(Graph::complete(5).unwrap());
        assert_eq!(verify_orientation(&o), None);
    }

    #[test]
    fn directed_triangle_has_a_cycle() {
        let g = Graph::complete(3).unwrap();
        let o = Orientation::from_arcs(g, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let w = verify_orientation(&o).unwrap();
        assert!(matches!(w, ShortcutWitness::Cycle(_)));
        assert!(w.check(&o));
    }

    #[test]
    fn four_vertex_shortcut() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let o = Orientation::from_arcs(g, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let w = verify_orientation(&o).unwrap();
        assert!(w.check(&o));
        match w {
            ShortcutWitness::Shortcut { path, .. } => assert_eq!(path, vec![1, 2, 3, 4]),
            other => panic!("expected a shortcut, got {other:?}"),
        }
    }

    #[test]
    fn small_searches() {
        let c4 = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let o = brute_force_semi_transitive(&c4, 24).unwrap().unwrap();
        assert_eq!(verify_orientation(&o), None);
        for n in 1..=7 {
            assert!(
                brute_force_semi_transitive(&Graph::complete(n).unwrap(), 24)
                    .unwrap()
                    .is_some()
            );
        }
        let k8 = Graph::complete(8).unwrap();
        assert!(matches!(
            brute_force_semi_transitive(&k8, 24),
            Err(Error::Guard { .. })
        ));
    }
}
