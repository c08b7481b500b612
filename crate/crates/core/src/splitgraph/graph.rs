use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Largest vertex count; adjacency rows are `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "vertex count",
                actual: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Self { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (v, a) in g.adj.iter_mut().enumerate() {
            *a = full & !(1 << v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edges; loops and repeated edges are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u == 0 || v == 0 || u > n || v > n {
            return Err(domain(format!("edge {u}-{v} out of range 1..={n}")));
        }
        if u == v {
            return Err(domain(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(domain(format!("repeated edge {u}-{v}")));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Neighbourhood of `v` as a bitset, bit `u - 1` for vertex `u`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.adj.len() {
            for v in u + 1..=self.adj.len() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i - 1]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            if u == 0 || u > self.adj.len() || vertices[..i].contains(&u) {
                return Err(domain(format!("bad vertex list {vertices:?}")));
            }
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.add_edge(i + 1, j + 1)?;
                }
            }
        }
        Ok(g)
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (1..=self.adj.len()).filter(|&u| u != v).collect();
        self.induced(&keep).expect("subset of own vertices")
    }

    /// An injective map `f` (as `f[i - 1]` for pattern vertex `i`) such that
    /// `pattern` equals the subgraph of `self` induced by `f`.
    pub fn find_induced_copy(&self, pattern: &Graph) -> Option<Vec<usize>> {
        let p = pattern.vertex_count();
        if p > self.vertex_count() {
            return None;
        }
        let mut order: Vec<usize> = (1..=p).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
        let mut image = vec![0usize; p + 1];
        let mut used = 0u64;
        if self.embed(pattern, &order, 0, &mut image, &mut used) {
            Some(image[1..].to_vec())
        } else {
            None
        }
    }

    fn embed(
        &self,
        pattern: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut u64,
    ) -> bool {
        let Some(&pv) = order.get(depth) else {
            return true;
        };
        for hv in 1..=self.vertex_count() {
            if *used >> (hv - 1) & 1 == 1 || self.degree(hv) < pattern.degree(pv) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&q| pattern.has_edge(pv, q) == self.has_edge(hv, image[q]));
            if !consistent {
                continue;
            }
            image[pv] = hv;
            *used |= 1 << (hv - 1);
            if self.embed(pattern, order, depth + 1, image, used) {
                return true;
            }
            *used &= !(1 << (hv - 1));
        }
        false
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.find_induced_copy(other).is_some()
    }
}

/// `n m` on the first line, then `m` lines `u v`; `#` lines are comments.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_pair = |line: usize, text: &str| -> Result<(usize, usize)> {
            let nums: Vec<&str> = text.split_whitespace().collect();
            let bad = || Error::Parse {
                line,
                message: format!("expected two integers, found '{text}'"),
            };
            if nums.len() != 2 {
                return Err(bad());
            }
            Ok((
                nums[0].parse().map_err(|_| bad())?,
                nums[1].parse().map_err(|_| bad())?,
            ))
        };
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing 'n m' header".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let mut g = Graph::new(n).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        let mut count = 0;
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            count += 1;
        }
        if count != m {
            return Err(Error::Parse {
                line,
                message: format!("header promises {m} edges, found {count}"),
            });
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.vertex_count(), self.edge_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}
