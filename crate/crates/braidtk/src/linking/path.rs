use thiserror::Error;

use super::LinkingGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("column {0} cannot be reached from the start brick")]
    UnreachableColumn(usize),
    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(usize),
}

/// Bricks of `column` adjacent to some brick of `next`.
fn linked_towards(g: &LinkingGraph, column: usize, next: usize) -> Vec<usize> {
    g.column_vertices(column)
        .into_iter()
        .filter(|&x| g.neighbours(x).iter().any(|&y| g.brick(y).column == next))
        .collect()
}

/// How far `y` sits from the nearest brick of its column linked onwards.
fn lookahead(g: &LinkingGraph, y: usize, dir: isize, target: usize) -> usize {
    let col = g.brick(y).column;
    if col == target {
        return 0;
    }
    let next = (col as isize + dir) as usize;
    let rank = |v: usize| g.column_vertices(col).iter().position(|&u| u == v).unwrap();
    linked_towards(g, col, next)
        .into_iter()
        .map(|x| rank(x).abs_diff(rank(y)))
        .min()
        .unwrap_or(usize::MAX)
}

/// An induced path from `v` to the first brick reached in `target_column`.
///
/// Walks down or up the current column to the nearest brick linked towards
/// the target, steps over, and repeats. Ties go to the choice whose landing
/// brick is closest to a brick linked one column further. Chords of the
/// walk are then short-cut.
pub fn induced_path(
    g: &LinkingGraph,
    v: usize,
    target_column: usize,
) -> Result<Vec<usize>, PathError> {
    if v >= g.vertex_count() {
        return Err(PathError::NoSuchVertex(v));
    }
    let mut walk = vec![v];
    let mut cur = v;
    while g.brick(cur).column != target_column {
        let col = g.brick(cur).column;
        let dir: isize = if target_column > col { 1 } else { -1 };
        let next = (col as isize + dir) as usize;
        let column = g.column_vertices(col);
        let here = column.iter().position(|&u| u == cur).unwrap();
        // (distance in column, lookahead, exit brick, landing brick)
        let best = linked_towards(g, col, next)
            .into_iter()
            .flat_map(|x| {
                let at = column.iter().position(|&u| u == x).unwrap();
                g.neighbours(x)
                    .iter()
                    .filter(|&&y| g.brick(y).column == next)
                    .map(move |&y| (at.abs_diff(here), lookahead(g, y, dir, target_column), x, y))
                    .collect::<Vec<_>>()
            })
            .min()
            .ok_or(PathError::UnreachableColumn(target_column))?;
        let (_, _, x, y) = best;
        let at = column.iter().position(|&u| u == x).unwrap();
        if at > here {
            walk.extend(&column[here + 1..=at]);
        } else {
            walk.extend(column[at..here].iter().rev());
        }
        walk.push(y);
        cur = y;
    }
    Ok(shortcut(g, &walk))
}

/// Jumps from each vertex to its furthest neighbour along the walk.
fn shortcut(g: &LinkingGraph, walk: &[usize]) -> Vec<usize> {
    let mut out = vec![walk[0]];
    let mut i = 0;
    while i + 1 < walk.len() {
        let j = (i + 1..walk.len())
            .rev()
            .find(|&j| g.has_edge(walk[i], walk[j]))
            .unwrap_or(i + 1);
        out.push(walk[j]);
        i = j;
    }
    out
}

/// A simple path whose only induced edges are the consecutive ones.
pub fn is_induced_path(g: &LinkingGraph, path: &[usize]) -> bool {
    for (a, &x) in path.iter().enumerate() {
        if path[a + 1..].contains(&x) {
            return false;
        }
        for (b, &y) in path.iter().enumerate().skip(a + 1) {
            if g.has_edge(x, y) != (b == a + 1) {
                return false;
            }
        }
    }
    true
}
