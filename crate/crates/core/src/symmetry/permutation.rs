use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Edge};

/// A bijection on vertex ids `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // image[i] is the image of vertex i + 1
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// `images[i]` is the image of vertex `i + 1`. Returns `None` unless bijective.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return None;
            }
        }
        Some(Permutation { image: images })
    }

    /// Parses cycle notation such as `"(1 2)(4 5 6)"`; `"()"` is the identity.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("malformed cycle notation {text:?}"));
        let mut image: Vec<usize> = (1..=n).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(bad)?;
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let body = &inner[..inner_end - 1];
            let cycle: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(bad());
                }
                image[x - 1] = cycle[(k + 1) % cycle.len()];
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        Permutation::from_images(image).ok_or_else(bad)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v - 1]
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        Edge::new(self.apply(e.u()), self.apply(e.v())).expect("bijection maps edges to edges")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x - 1] = i + 1;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// Nontrivial cycles, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Whether `self` preserves adjacency, vertex colors and edge colors of `g`.
    pub fn is_automorphism_of(&self, g: &ColoredGraph) -> bool {
        self.degree() == g.n()
            && g.vertices()
                .all(|v| g.vertex_color(v) == g.vertex_color(self.apply(v)))
            && g.edges()
                .all(|(e, c)| g.color_of_edge(self.apply_edge(e)) == Some(c))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
