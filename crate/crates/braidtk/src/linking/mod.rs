//! Brick diagrams and linking graphs.

mod dynkin;
mod path;

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;

pub use dynkin::{contains_e6_subtree, dynkin_type, e6_witness_in, DynkinType};
pub use path::{induced_path, is_induced_path, PathError};

/// Two consecutive occurrences of σ_column, at 0-based word positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Brick {
    pub column: usize,
    pub top: usize,
    pub bottom: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    SameColumn,
    CrossColumn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingGraph {
    bricks: Vec<Brick>,
    /// 1-based index of each brick within its column.
    rank: Vec<usize>,
    edges: Vec<(usize, usize, EdgeKind)>,
    adj: Vec<Vec<usize>>,
}

/// Bricks in column-major, top-down order.
pub fn bricks(w: &BraidWord) -> Vec<Brick> {
    let l = w.letters();
    let mut out = Vec::new();
    for column in 1..w.strands() {
        let pos: Vec<usize> = (0..l.len()).filter(|&p| l[p] == column).collect();
        out.extend(pos.windows(2).map(|p| Brick {
            column,
            top: p[0],
            bottom: p[1],
        }));
    }
    out
}

pub fn bricks_linked(x: &Brick, y: &Brick) -> Option<EdgeKind> {
    if x.column == y.column {
        (x.bottom == y.top || y.bottom == x.top).then_some(EdgeKind::SameColumn)
    } else if x.column.abs_diff(y.column) == 1 {
        let interleave = (x.top < y.top && y.top < x.bottom && x.bottom < y.bottom)
            || (y.top < x.top && x.top < y.bottom && y.bottom < x.bottom);
        interleave.then_some(EdgeKind::CrossColumn)
    } else {
        None
    }
}

pub fn linking_graph(w: &BraidWord) -> LinkingGraph {
    LinkingGraph::from_bricks(bricks(w))
}

pub fn is_prime(w: &BraidWord) -> bool {
    !w.is_split() && linking_graph(w).is_connected()
}

impl LinkingGraph {
    pub fn from_bricks(bricks: Vec<Brick>) -> Self {
        let n = bricks.len();
        let mut rank = vec![0; n];
        for v in 0..n {
            rank[v] = if v > 0 && bricks[v - 1].column == bricks[v].column {
                rank[v - 1] + 1
            } else {
                1
            };
        }
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                if bricks[b].column > bricks[a].column + 1 {
                    break;
                }
                if let Some(kind) = bricks_linked(&bricks[a], &bricks[b]) {
                    edges.push((a, b, kind));
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        LinkingGraph {
            bricks,
            rank,
            edges,
            adj,
        }
    }

    /// An abstract graph on `n` vertices; bricks are placeholders.
    pub fn abstract_graph(n: usize, edge_list: &[(usize, usize)]) -> Self {
        let bricks = (0..n)
            .map(|k| Brick {
                column: 1,
                top: 2 * k,
                bottom: 2 * k + 1,
            })
            .collect();
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for &(a, b) in edge_list {
            let (a, b) = (a.min(b), a.max(b));
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
                edges.push((a, b, EdgeKind::CrossColumn));
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        edges.sort_unstable_by_key(|e| (e.0, e.1));
        LinkingGraph {
            bricks,
            rank: (1..=n).collect(),
            edges,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.bricks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn bricks(&self) -> &[Brick] {
        &self.bricks
    }

    pub fn brick(&self, v: usize) -> Brick {
        self.bricks[v]
    }

    pub fn edges(&self) -> &[(usize, usize, EdgeKind)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn index_of(&self, b: &Brick) -> Option<usize> {
        self.bricks.iter().position(|x| x == b)
    }

    /// Label `c<col>_<k>`, the k-th brick of its column.
    pub fn label(&self, v: usize) -> String {
        format!("c{}_{}", self.bricks[v].column, self.rank[v])
    }

    pub fn column_vertices(&self, column: usize) -> Vec<usize> {
        (0..self.bricks.len())
            .filter(|&v| self.bricks[v].column == column)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.vertex_count()
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        if self.bricks.is_empty() {
            return Vec::new();
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut order = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                    queue.push_back(u);
                }
            }
        }
        order
    }

    /// Whether the vertices in `set` induce a tree.
    pub fn induces_tree(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let edges = self.induced_edges(set).len();
        edges + 1 == set.len() && self.induces_connected(set)
    }

    pub fn induces_connected(&self, set: &[usize]) -> bool {
        let Some(&first) = set.first() else {
            return true;
        };
        let mut seen = vec![first];
        let mut stack = vec![first];
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if set.contains(&u) && !seen.contains(&u) {
                    seen.push(u);
                    stack.push(u);
                }
            }
        }
        seen.len() == set.len()
    }

    /// Edges with both ends in `set`, as sorted pairs in lexicographic order.
    pub fn induced_edges(&self, set: &[usize]) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|(a, b, _)| set.contains(a) && set.contains(b))
            .map(|&(a, b, _)| (a, b))
            .collect();
        out.sort_unstable();
        out
    }

    /// Deterministic DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph linking {\n");
        for v in 0..self.vertex_count() {
            let b = self.bricks[v];
            let _ = writeln!(
                s,
                "  {} [label=\"{}\\n[{},{}]\"];",
                self.label(v),
                self.label(v),
                b.top + 1,
                b.bottom + 1
            );
        }
        for &(a, b, kind) in &self.edges {
            let style = match kind {
                EdgeKind::SameColumn => "solid",
                EdgeKind::CrossColumn => "dashed",
            };
            let _ = writeln!(s, "  {} -- {} [style={style}];", self.label(a), self.label(b));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for Brick {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "col{}[{},{}]", self.column, self.top + 1, self.bottom + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn g(s: &str) -> LinkingGraph {
        linking_graph(&parse_braid(s).unwrap())
    }

    #[test]
    fn brick_example_graph() {
        let g = g("s3 s1 s2 s1 s1 s3 s2");
        let shown: Vec<String> = g.bricks().iter().map(|b| b.to_string()).collect();
        assert_eq!(shown, ["col1[2,4]", "col1[4,5]", "col2[3,7]", "col3[1,6]"]);
        let e: Vec<_> = g.edges().iter().map(|&(a, b, _)| (a, b)).collect();
        assert_eq!(e, [(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edges()[0].2, EdgeKind::SameColumn);
    }

    #[test]
    fn primality() {
        assert!(is_prime(&parse_braid("s1^3").unwrap()));
        assert!(!is_prime(&parse_braid("s1^3 s3^3").unwrap()));
        assert!(!is_prime(&parse_braid("s1^2 s2^2").unwrap()));
        assert!(is_prime(&parse_braid("s1").unwrap()));
    }

    #[test]
    fn dot_output() {
        let dot = g("s1^3").to_dot();
        assert!(dot.contains("c1_1 -- c1_2 [style=solid];"));
        assert_eq!(dot.matches("--").count(), 1);
    }
}
