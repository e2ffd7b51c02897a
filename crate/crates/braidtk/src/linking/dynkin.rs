use std::fmt;

use serde::{Serialize, Serializer};

use super::LinkingGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// The affine diagram with n + 1 vertices.
    ExtendedD(usize),
    Other,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => f.write_str("E6"),
            DynkinType::E7 => f.write_str("E7"),
            DynkinType::E8 => f.write_str("E8"),
            DynkinType::ExtendedD(n) => write!(f, "~D{n}"),
            DynkinType::Other => f.write_str("other"),
        }
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn is_tree(g: &LinkingGraph) -> bool {
    let n = g.vertex_count();
    n > 0 && g.edge_count() + 1 == n && g.is_connected()
}

/// Length of the leg leaving `from` through `first`, in a tree.
fn leg_length(g: &LinkingGraph, from: usize, first: usize) -> Option<usize> {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        match g.degree(cur) {
            1 => return Some(len),
            2 => {
                let next = g.neighbours(cur).iter().copied().find(|&u| u != prev)?;
                prev = cur;
                cur = next;
                len += 1;
            }
            _ => return None,
        }
    }
}

pub fn dynkin_type(g: &LinkingGraph) -> DynkinType {
    let n = g.vertex_count();
    if n == 0 {
        return DynkinType::A(0);
    }
    if !is_tree(g) {
        return DynkinType::Other;
    }
    let mut by_degree = [0usize; 5];
    for v in 0..n {
        let d = g.degree(v);
        if d > 4 {
            return DynkinType::Other;
        }
        by_degree[d] += 1;
    }
    if by_degree[3] == 0 && by_degree[4] == 0 {
        return DynkinType::A(n);
    }
    if by_degree[4] == 1 && by_degree[3] == 0 && n == 5 {
        return DynkinType::ExtendedD(4);
    }
    if by_degree[4] > 0 {
        return DynkinType::Other;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    if branch.len() == 1 {
        let c = branch[0];
        let mut legs: Vec<usize> = g
            .neighbours(c)
            .iter()
            .map(|&u| leg_length(g, c, u).unwrap())
            .collect();
        legs.sort_unstable();
        return match legs[..] {
            [1, 1, _] => DynkinType::D(n),
            [1, 2, 2] => DynkinType::E6,
            [1, 2, 3] => DynkinType::E7,
            [1, 2, 4] => DynkinType::E8,
            _ => DynkinType::Other,
        };
    }
    if branch.len() == 2 {
        let two_leaves = |c: usize| {
            g.neighbours(c).iter().filter(|&&u| g.degree(u) == 1).count() == 2
        };
        if branch.iter().all(|&c| two_leaves(c)) {
            return DynkinType::ExtendedD(n - 1);
        }
    }
    DynkinType::Other
}

/// The lexicographically least E6 witness `[centre, short leg, a, a', b, b']`
/// (with `a < b`) among vertices allowed by `inside`, inducing exactly the
/// five tree edges within `inside`.
pub fn e6_witness_in(g: &LinkingGraph, inside: &[usize]) -> Option<[usize; 6]> {
    let mut verts = inside.to_vec();
    verts.sort_unstable();
    let nb = |v: usize| -> Vec<usize> {
        g.neighbours(v)
            .iter()
            .copied()
            .filter(|u| verts.binary_search(u).is_ok())
            .collect()
    };
    for &c in &verts {
        let around = nb(c);
        if around.len() < 3 {
            continue;
        }
        for &x in &around {
            for &a in &around {
                for &b in &around {
                    if a == x || b == x || a >= b {
                        continue;
                    }
                    for &a2 in &nb(a) {
                        for &b2 in &nb(b) {
                            let w = [c, x, a, a2, b, b2];
                            if distinct(&w) && g.induced_edges(&w).len() == 5 && g.induces_tree(&w)
                            {
                                return Some(w);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn distinct(w: &[usize]) -> bool {
    (0..w.len()).all(|i| !w[i + 1..].contains(&w[i]))
}

pub fn contains_e6_subtree(g: &LinkingGraph) -> Option<[usize; 6]> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    e6_witness_in(g, &all)
}
