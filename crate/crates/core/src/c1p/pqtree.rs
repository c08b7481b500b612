//! A PQ-tree over at most 64 leaves, reduced template by template.
//!
//! Nodes cache the set of leaves below them, so each reduction walks the
//! tree once and classifies children as empty, full or partial with a mask
//! test. This is quadratic in the worst case rather than linear, which is
//! irrelevant at the sizes this crate handles.

use crate::binmat::ColSet;

#[derive(Clone, Debug)]
enum Node {
    Leaf(usize),
    P(Vec<Node>, ColSet),
    Q(Vec<Node>, ColSet),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Label {
    Empty,
    Full,
    Partial,
}

impl Node {
    fn leaves(&self) -> ColSet {
        match self {
            Node::Leaf(c) => 1 << c,
            Node::P(_, s) | Node::Q(_, s) => *s,
        }
    }

    fn label(&self, target: ColSet) -> Label {
        let inside = self.leaves() & target;
        if inside == 0 {
            Label::Empty
        } else if inside == self.leaves() {
            Label::Full
        } else {
            Label::Partial
        }
    }

    fn p(children: Vec<Node>) -> Node {
        if children.len() == 1 {
            return children.into_iter().next().expect("one child");
        }
        let s = children.iter().fold(0, |acc, c| acc | c.leaves());
        Node::P(children, s)
    }

    fn q(children: Vec<Node>) -> Node {
        match children.len() {
            1 => children.into_iter().next().expect("one child"),
            2 => Node::p(children),
            _ => {
                let s = children.iter().fold(0, |acc, c| acc | c.leaves());
                Node::Q(children, s)
            }
        }
    }

    fn frontier(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(c) => out.push(*c),
            Node::P(ch, _) | Node::Q(ch, _) => ch.iter().for_each(|c| c.frontier(out)),
        }
    }
}

struct Failed;

/// Rewrites a partial, non-root node as a sequence of pure (empty or full)
/// nodes, empties first, to be spliced into a parent Q-node.
fn partial_sequence(node: Node, target: ColSet) -> Result<Vec<Node>, Failed> {
    match node {
        Node::Leaf(_) => unreachable!("a leaf is never partial"),
        Node::P(children, _) => {
            let (mut empty, mut full, mut partial) = (Vec::new(), Vec::new(), Vec::new());
            for c in children {
                match c.label(target) {
                    Label::Empty => empty.push(c),
                    Label::Full => full.push(c),
                    Label::Partial => partial.push(c),
                }
            }
            if partial.len() > 1 {
                return Err(Failed);
            }
            let mut seq = Vec::new();
            if !empty.is_empty() {
                seq.push(Node::p(empty));
            }
            if let Some(p) = partial.pop() {
                seq.extend(partial_sequence(p, target)?);
            }
            if !full.is_empty() {
                seq.push(Node::p(full));
            }
            Ok(seq)
        }
        Node::Q(mut children, _) => {
            let labels: Vec<Label> = children.iter().map(|c| c.label(target)).collect();
            if !empties_then_full(&labels) {
                children.reverse();
                let rev: Vec<Label> = labels.into_iter().rev().collect();
                if !empties_then_full(&rev) {
                    return Err(Failed);
                }
            }
            let mut seq = Vec::new();
            for c in children {
                if c.label(target) == Label::Partial {
                    seq.extend(partial_sequence(c, target)?);
                } else {
                    seq.push(c);
                }
            }
            Ok(seq)
        }
    }
}

/// Matches `Empty* Partial? Full*`.
fn empties_then_full(labels: &[Label]) -> bool {
    let mut i = 0;
    while i < labels.len() && labels[i] == Label::Empty {
        i += 1;
    }
    if i < labels.len() && labels[i] == Label::Partial {
        i += 1;
    }
    labels[i..].iter().all(|&l| l == Label::Full)
}

/// Reduces the pertinent root: the deepest node whose subtree holds all of
/// `target`.
fn reduce_root(node: Node, target: ColSet) -> Result<Node, Failed> {
    match node {
        Node::Leaf(_) => Ok(node),
        Node::P(children, _) => {
            let (mut empty, mut full, mut partial) = (Vec::new(), Vec::new(), Vec::new());
            for c in children {
                match c.label(target) {
                    Label::Empty => empty.push(c),
                    Label::Full => full.push(c),
                    Label::Partial => partial.push(c),
                }
            }
            if partial.len() > 2 {
                return Err(Failed);
            }
            if partial.is_empty() {
                empty.push(Node::p(full));
                return Ok(Node::p(empty));
            }
            let mut seq = partial_sequence(partial.remove(0), target)?;
            if !full.is_empty() {
                seq.push(Node::p(full));
            }
            if let Some(second) = partial.pop() {
                let mut tail = partial_sequence(second, target)?;
                tail.reverse();
                seq.extend(tail);
            }
            let q = Node::q(seq);
            if empty.is_empty() {
                Ok(q)
            } else {
                empty.push(q);
                Ok(Node::p(empty))
            }
        }
        Node::Q(children, _) => {
            let labels: Vec<Label> = children.iter().map(|c| c.label(target)).collect();
            let touched: Vec<usize> = (0..labels.len())
                .filter(|&i| labels[i] != Label::Empty)
                .collect();
            let (lo, hi) = (touched[0], *touched.last().expect("target is nonempty"));
            if (lo..=hi).any(|i| labels[i] == Label::Empty) {
                return Err(Failed);
            }
            if (lo + 1..hi).any(|i| labels[i] == Label::Partial) {
                return Err(Failed);
            }
            let mut seq = Vec::new();
            for (i, c) in children.into_iter().enumerate() {
                if labels[i] != Label::Partial {
                    seq.push(c);
                } else if i == lo && i != hi {
                    seq.extend(partial_sequence(c, target)?);
                } else if i == hi && i != lo {
                    let mut tail = partial_sequence(c, target)?;
                    tail.reverse();
                    seq.extend(tail);
                } else {
                    // A lone partial child would itself be the pertinent root.
                    return Err(Failed);
                }
            }
            Ok(Node::q(seq))
        }
    }
}

fn reduce(node: Node, target: ColSet) -> Result<Node, Failed> {
    if node.leaves() & target == node.leaves() {
        return Ok(node);
    }
    match node {
        Node::P(children, s) if children.iter().any(|c| c.leaves() & target == target) => {
            let children = children
                .into_iter()
                .map(|c| {
                    if c.leaves() & target == target {
                        reduce(c, target)
                    } else {
                        Ok(c)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Node::P(children, s))
        }
        Node::Q(children, s) if children.iter().any(|c| c.leaves() & target == target) => {
            let children = children
                .into_iter()
                .map(|c| {
                    if c.leaves() & target == target {
                        reduce(c, target)
                    } else {
                        Ok(c)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Node::Q(children, s))
        }
        other => reduce_root(other, target),
    }
}

/// Finds a 0-based leaf order in which every set in `constraints` is
/// consecutive, or `None` if there is none.
pub fn consecutive_order(leaves: usize, constraints: &[ColSet]) -> Option<Vec<usize>> {
    if leaves == 0 {
        return Some(Vec::new());
    }
    let mut tree = Node::p((0..leaves).map(Node::Leaf).collect());
    for &c in constraints {
        if c.count_ones() <= 1 || c.count_ones() as usize == leaves {
            continue;
        }
        tree = reduce(tree, c).ok()?;
    }
    let mut order = Vec::with_capacity(leaves);
    tree.frontier(&mut order);
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(cols: &[usize]) -> ColSet {
        cols.iter().fold(0, |a, &c| a | (1 << c))
    }

    fn consecutive(order: &[usize], s: ColSet) -> bool {
        let pos: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, &c)| s >> c & 1 == 1)
            .map(|(p, _)| p)
            .collect();
        pos.is_empty() || pos.last().unwrap() - pos[0] + 1 == pos.len()
    }

    #[test]
    fn path_constraints_are_satisfiable() {
        let cons = [set(&[0, 1]), set(&[1, 2]), set(&[2, 3])];
        let order = consecutive_order(4, &cons).unwrap();
        assert!(cons.iter().all(|&c| consecutive(&order, c)));
    }

    #[test]
    fn cycle_constraints_fail() {
        let cons = [set(&[0, 1]), set(&[1, 2]), set(&[0, 2])];
        assert!(consecutive_order(3, &cons).is_none());
    }

    #[test]
    fn star_of_pairs_fails() {
        let cons = [set(&[0, 1]), set(&[0, 2]), set(&[0, 3])];
        assert!(consecutive_order(4, &cons).is_none());
    }
}
