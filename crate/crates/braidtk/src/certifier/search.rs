//! Search for an E-arboreal core and an attachment order of the remaining
//! bricks.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::braid::{apply_move, strand_reduce, BraidWord, Move, DEFAULT_REDUCE_BUDGET};
use crate::linking::{contains_e6_subtree, e6_witness_in, induced_path, LinkingGraph};
use crate::surface::{neighborhood_summary, single_arc, CurveConfiguration, SurfaceModel};

use super::Budget;

/// A core and attachment order found on one word.
#[derive(Clone, Debug)]
pub(crate) struct Found {
    pub v0: Vec<usize>,
    pub attachment: Vec<usize>,
}

/// Counts work against the budget.
pub(crate) struct Meter {
    pub limit: usize,
    pub used: usize,
}

impl Meter {
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

fn bits(mask: u128) -> Vec<usize> {
    (0..128).filter(|&k| mask >> k & 1 == 1).collect()
}

fn adj_mask(g: &LinkingGraph, v: usize) -> u128 {
    g.neighbours(v).iter().fold(0, |m, &u| m | 1 << u)
}

/// Greedy attachment of every brick outside `v0`: single-contact curves
/// first, then curves passing the surface walk.
pub(crate) fn attach(model: &SurfaceModel, v0: &[usize]) -> Option<Vec<usize>> {
    let g = model.graph();
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    for &v in v0 {
        inside[v] = true;
    }
    let mut order = Vec::new();
    while order.len() + v0.len() < n {
        let prior = |c: usize| g.neighbours(c).iter().filter(|&&u| inside[u]).count();
        let pick = (0..n)
            .find(|&c| !inside[c] && prior(c) == 1)
            .or_else(|| (0..n).find(|&c| !inside[c] && prior(c) > 1 && single_arc(model, &inside, c)))?;
        inside[pick] = true;
        order.push(pick);
    }
    Some(order)
}

/// Genus of the neighbourhood of the brick curves `set`.
pub(crate) fn core_genus(model: &Arc<SurfaceModel>, set: &[usize]) -> Option<i64> {
    let cfg = CurveConfiguration::from_model(model.clone(), set).ok()?;
    neighborhood_summary(&cfg).ok().map(|s| s.h)
}

/// Accepts `set` as a core if it is an E-arboreal tree of genus at least
/// five whose complement attaches.
fn try_core(model: &Arc<SurfaceModel>, set: &[usize]) -> Option<Found> {
    let g = model.graph();
    if set.len() < 10 || !g.induces_tree(set) || e6_witness_in(g, set).is_none() {
        return None;
    }
    if core_genus(model, set)? < 5 {
        return None;
    }
    let attachment = attach(model, set)?;
    Some(Found {
        v0: set.to_vec(),
        attachment,
    })
}

/// Enumerates induced subtrees of `g` within `allowed`, each exactly once,
/// and stops at the first accepted core.
pub(crate) fn subtree_search(
    model: &Arc<SurfaceModel>,
    allowed: u128,
    meter: &mut Meter,
) -> Option<Found> {
    let g = model.graph();
    if g.vertex_count() > 128 {
        return None;
    }
    fn extend(
        model: &Arc<SurfaceModel>,
        g: &LinkingGraph,
        allowed: u128,
        root: usize,
        sub: u128,
        ext: u128,
        meter: &mut Meter,
    ) -> Option<Found> {
        if !meter.tick() {
            return None;
        }
        if let Some(f) = try_core(model, &bits(sub)) {
            return Some(f);
        }
        let mut ext = ext;
        let nbhd_sub = bits(sub).iter().fold(sub, |m, &v| m | adj_mask(g, v));
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= !(1 << w);
            if (adj_mask(g, w) & sub).count_ones() != 1 {
                continue;
            }
            let fresh = adj_mask(g, w) & allowed & !nbhd_sub & !((1u128 << (root + 1)) - 1);
            if let Some(f) = extend(model, g, allowed, root, sub | 1 << w, ext | fresh, meter) {
                return Some(f);
            }
            if meter.used > meter.limit {
                return None;
            }
        }
        None
    }
    for root in bits(allowed) {
        let ext = adj_mask(g, root) & allowed & !((1u128 << (root + 1)) - 1);
        if let Some(f) = extend(model, g, allowed, root, 1 << root, ext, meter) {
            return Some(f);
        }
        if meter.used > meter.limit {
            return None;
        }
    }
    None
}

/// Induced path from the first column to the last, extended by one brick
/// into a tripod with two legs of length at least two.
pub(crate) fn tripod_search(model: &Arc<SurfaceModel>, meter: &mut Meter) -> Option<Found> {
    let g = model.graph();
    let last = model.word().strands() - 1;
    for start in g.column_vertices(1) {
        let Ok(path) = induced_path(g, start, last) else {
            continue;
        };
        for x in 0..g.vertex_count() {
            if !meter.tick() {
                return None;
            }
            if path.contains(&x) {
                continue;
            }
            let on: Vec<usize> = (0..path.len()).filter(|&i| g.has_edge(x, path[i])).collect();
            if on.len() != 1 || on[0] < 2 || on[0] + 3 > path.len() {
                continue;
            }
            let mut set = path.clone();
            set.push(x);
            set.sort_unstable();
            if let Some(f) = try_core(model, &set) {
                return Some(f);
            }
        }
    }
    None
}

/// Core search on one word: tripods for many strands, two-column windows,
/// then the whole graph.
pub(crate) fn search_word(w: &BraidWord, meter: &mut Meter) -> Option<Found> {
    let g0 = crate::linking::linking_graph(w);
    if g0.vertex_count() < 10 || g0.vertex_count() > 128 || contains_e6_subtree(&g0).is_none() {
        return None;
    }
    let model = Arc::new(SurfaceModel::new(w));
    let g = model.graph();
    if w.strands() >= 11 {
        if let Some(f) = tripod_search(&model, meter) {
            return Some(f);
        }
    }
    if w.strands() >= 4 {
        for i in 1..w.strands() - 1 {
            let window = (0..g.vertex_count())
                .filter(|&v| g.brick(v).column == i || g.brick(v).column == i + 1)
                .fold(0u128, |m, v| m | 1 << v);
            if window.count_ones() >= 10 {
                if let Some(f) = subtree_search(&model, window, meter) {
                    return Some(f);
                }
            }
        }
    }
    let all = if g.vertex_count() == 128 {
        u128::MAX
    } else {
        (1u128 << g.vertex_count()) - 1
    };
    subtree_search(&model, all, meter)
}

/// Moves turning `from` into `to` when `to` is a rotation of `from` with
/// commuting letters rearranged and at most one braid relation applied.
pub(crate) fn transition_moves(from: &BraidWord, to: &BraidWord) -> Option<Vec<Move>> {
    let n = from.len();
    if n != to.len() || from.strands() != to.strands() {
        return None;
    }
    let t = to.letters();
    let mut targets: Vec<(Option<usize>, Vec<usize>)> = vec![(None, t.to_vec())];
    for p in 0..n.saturating_sub(2) {
        if t[p] == t[p + 2] && t[p].abs_diff(t[p + 1]) == 1 {
            let mut u = t.to_vec();
            u[p] = t[p + 1];
            u[p + 1] = t[p];
            u[p + 2] = t[p + 1];
            targets.push((Some(p), u));
        }
    }
    for r in 0..n.max(1) {
        let rot = from.rotated(r);
        for (rel, target) in &targets {
            if let Some(swaps) = commute_into(rot.letters(), target) {
                let mut moves = vec![Move::ElementaryConjugation { backward: false }; r];
                moves.extend(swaps.into_iter().map(|position| Move::FarCommutation { position }));
                if let Some(position) = rel {
                    moves.push(Move::BraidRelation { position: *position });
                }
                return Some(moves);
            }
        }
    }
    None
}

/// Adjacent swaps of commuting letters turning `a` into `b`.
fn commute_into(a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    // Match the k-th copy of each letter in `a` to its k-th copy in `b`.
    let mut where_in_b: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, &x) in b.iter().enumerate() {
        let k = seen.entry(x).or_default();
        where_in_b.insert((x, *k), i);
        *k += 1;
    }
    seen.clear();
    let mut rank = Vec::with_capacity(a.len());
    for &x in a {
        let k = seen.entry(x).or_default();
        rank.push(*where_in_b.get(&(x, *k))?);
        *k += 1;
    }
    let mut cur = a.to_vec();
    let mut swaps = Vec::new();
    for i in 0..cur.len() {
        for j in 0..cur.len() - 1 - i {
            if rank[j] > rank[j + 1] {
                if cur[j].abs_diff(cur[j + 1]) < 2 {
                    return None;
                }
                rank.swap(j, j + 1);
                cur.swap(j, j + 1);
                swaps.push(j);
            }
        }
    }
    Some(swaps)
}

/// Result of a bounded search from one input word.
pub(crate) struct SearchResult {
    pub found: Option<(Vec<Move>, BraidWord, Found)>,
    pub states: usize,
    pub depth: usize,
    pub exhausted: bool,
}

/// Breadth-first search over braid relations up to rotation, testing every
/// word for a core. Words on many strands may also lose a strand.
pub(crate) fn bfs(w: &BraidWord, budget: Budget) -> SearchResult {
    let mut meter = Meter {
        limit: budget.states,
        used: 0,
    };
    let mut seen: HashMap<BraidWord, usize> = HashMap::new();
    // (word, parent, depth)
    let mut nodes: Vec<(BraidWord, Option<usize>, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(w.least_rotation().1, 0);
    nodes.push((w.clone(), None, 0));
    queue.push_back(0);
    let mut depth = 0;
    let mut exhausted = false;
    while let Some(id) = queue.pop_front() {
        let (word, _, d) = nodes[id].clone();
        depth = depth.max(d);
        // Bricks depend on where the closed word is cut open.
        let mut word_meter = Meter {
            limit: budget.states,
            used: 0,
        };
        let mut tried = Vec::new();
        for r in 0..word.len().max(1) {
            let rot = word.rotated(r);
            if tried.contains(&rot) {
                continue;
            }
            if let Some(found) = search_word(&rot, &mut word_meter) {
                let moves = replay_path(&nodes, id).map(|mut m| {
                    m.extend(vec![Move::ElementaryConjugation { backward: false }; r]);
                    m
                });
                return SearchResult {
                    found: moves.map(|m| (m, rot, found)),
                    states: nodes.len(),
                    depth,
                    exhausted: false,
                };
            }
            if word_meter.used > word_meter.limit {
                break;
            }
            tried.push(rot);
        }
        if d >= budget.depth {
            continue;
        }
        let mut next: Vec<BraidWord> =
            crate::braid::relation_neighbours(&word, |_, _| true);
        if word.strands() >= 11 {
            for i in 1..word.strands() - 1 {
                if let Ok(v) = strand_reduce(&word, i, DEFAULT_REDUCE_BUDGET) {
                    next.push(v);
                }
            }
        }
        for v in next {
            let key = v.least_rotation().1;
            if seen.contains_key(&key) {
                continue;
            }
            if !meter.tick() {
                exhausted = true;
                break;
            }
            seen.insert(key, nodes.len());
            queue.push_back(nodes.len());
            nodes.push((v, Some(id), d + 1));
        }
        if exhausted {
            break;
        }
    }
    SearchResult {
        found: None,
        states: nodes.len(),
        depth,
        exhausted: exhausted || !queue.is_empty() || depth >= budget.depth,
    }
}

/// Moves from the root to node `id`.
fn replay_path(nodes: &[(BraidWord, Option<usize>, usize)], id: usize) -> Option<Vec<Move>> {
    let mut chain = vec![id];
    while let Some(p) = nodes[*chain.last().unwrap()].1 {
        chain.push(p);
    }
    chain.reverse();
    let mut moves = Vec::new();
    for pair in chain.windows(2) {
        let (a, b) = (&nodes[pair[0]].0, &nodes[pair[1]].0);
        let step = if b.strands() + 1 == a.strands() {
            (1..a.strands() - 1)
                .map(|column| Move::StrandReduction { column })
                .find(|&m| apply_move(a, m).ok().as_ref() == Some(b))
                .map(|m| vec![m])
        } else {
            transition_moves(a, b)
        };
        moves.extend(step?);
    }
    Some(moves)
}
