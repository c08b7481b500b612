//! Word-representability: two letters are adjacent exactly when they
//! alternate in the word.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::splitgraph::Graph;

/// A nonempty word over the letters `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(domain("a word must be nonempty"));
        }
        if letters.contains(&0) {
            return Err(domain("letters are numbered from 1"));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    fn occurs(&self, x: usize) -> bool {
        self.letters.contains(&x)
    }
}

/// Either lowercase letters (`a` = 1, `b` = 2, ...) or comma-separated
/// integers.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') || s.chars().all(|c| c.is_ascii_digit()) {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| domain(format!("bad letter '{t}' in word")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    if c.is_ascii_lowercase() {
                        Ok(c as usize - 'a' as usize + 1)
                    } else {
                        Err(domain(format!("bad letter '{c}' in word")))
                    }
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&c| c <= 26) {
            for &c in &self.letters {
                write!(f, "{}", (b'a' + (c - 1) as u8) as char)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|c| c.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

/// Whether `x` and `y` alternate in `w`: the subword on `{x, y}` never
/// repeats a letter twice in a row.
pub fn alternates(w: &Word, x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(domain("alternation needs two distinct letters"));
    }
    for z in [x, y] {
        if !w.occurs(z) {
            return Err(domain(format!("letter {z} does not occur in the word")));
        }
    }
    let mut last = 0;
    for &c in &w.letters {
        if c == x || c == y {
            if c == last {
                return Ok(false);
            }
            last = c;
        }
    }
    Ok(true)
}

/// The graph on `1..=n` whose edges are the alternating pairs of `w`.
pub fn graph_from_word(w: &Word, n: usize) -> Result<Graph> {
    if let Some(&c) = w.letters.iter().find(|&&c| c > n) {
        return Err(domain(format!("letter {c} outside 1..={n}")));
    }
    if let Some(v) = (1..=n).find(|&v| !w.occurs(v)) {
        return Err(domain(format!("vertex {v} does not occur in the word")));
    }
    let mut g = Graph::new(n)?;
    for x in 1..=n {
        for y in x + 1..=n {
            if alternates(w, x, y)? {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Whether `w` represents `g` exactly.
pub fn word_represents(w: &Word, g: &Graph) -> Result<bool> {
    Ok(graph_from_word(w, g.vertex_count())? == *g)
}

/// Searches `k`-uniform words (every letter exactly `k` times) for
/// `k = 1..=max_k`, returning the first that represents `g`.
pub fn find_representing_word(g: &Graph, max_k: usize) -> Option<Word> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    (1..=max_k).find_map(|k| {
        let mut counts = vec![k; n];
        let mut word = Vec::with_capacity(n * k);
        uniform_search(g, &mut counts, &mut word)
    })
}

fn uniform_search(g: &Graph, counts: &mut [usize], word: &mut Vec<usize>) -> Option<Word> {
    if counts.iter().all(|&c| c == 0) {
        let w = Word::new(word.clone()).expect("nonempty");
        return word_represents(&w, g).ok()?.then_some(w);
    }
    for v in 0..counts.len() {
        if counts[v] == 0 {
            continue;
        }
        let letter = v + 1;
        // A doubled letter alternates with nothing.
        if word.last() == Some(&letter) && g.degree(letter) > 0 {
            continue;
        }
        counts[v] -= 1;
        word.push(letter);
        let found = uniform_search(g, counts, word);
        word.pop();
        counts[v] += 1;
        if found.is_some() {
            return found;
        }
    }
    None
}
