//! A cell decomposition of the fibre surface of a positive braid, cut by
//! all of its brick curves.
//!
//! The surface is one disk per strand and one band per letter. Around disk
//! `D_k` the bands of columns `k − 1` and `k` are attached in word order,
//! counterclockwise. Band `p` of column `i` is the unit square with `x = 0`
//! glued to `D_i` and `x = 1` glued to `D_{i+1}`; on `D_i` counterclockwise
//! runs with increasing `y`, on `D_{i+1}` with decreasing `y`.
//!
//! The brick curve of `[p, q]` in column `i` runs through band `p` from
//! `D_{i+1}` to `D_i`, along a chord of `D_i`, through band `q` back to
//! `D_{i+1}` and along a chord of `D_{i+1}` to its start. Two bricks sharing
//! a band cross inside it; bricks of adjacent columns can only cross on
//! chords.

use std::collections::HashMap;
use std::f64::consts::PI;

use super::planar::{crossing, faces, Point};
use crate::braid::BraidWord;
use crate::linking::{linking_graph, LinkingGraph};

/// A step along a brick curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Edge(usize),
    Cross(usize),
    Endpoint(usize),
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct CurveEdge {
    pub curve: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct CrossVertex {
    pub a: usize,
    pub b: usize,
    /// Sign of the frame (direction of a, direction of b).
    pub sign: i8,
    pub cell: usize,
}

#[derive(Clone, Debug)]
pub struct SurfaceModel {
    word: BraidWord,
    graph: LinkingGraph,
    pub(crate) free: Vec<bool>,
    pub(crate) glue: Vec<(usize, usize)>,
    pub(crate) edges: Vec<CurveEdge>,
    pub(crate) crosses: Vec<CrossVertex>,
    /// Curve passing through each disk–band transition point, and a cell at it.
    pub(crate) endpoints: Vec<(usize, usize)>,
    pub(crate) paths: Vec<Vec<Step>>,
}

/// Per-region data for a set of cut curves.
#[derive(Clone, Debug)]
pub(crate) struct Regions {
    pub of_cell: Vec<usize>,
    pub capped: Vec<bool>,
}

impl Regions {
    pub fn capped_count(&self) -> usize {
        self.capped.iter().filter(|&&c| c).count()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Side {
    /// x = 0, glued to D_i.
    Low,
    /// x = 1, glued to D_{i+1}.
    High,
}

#[derive(Clone, Copy, Debug)]
enum SegTag {
    Free,
    Glue,
    Curve,
}

/// One strand of a curve inside a piece, between two boundary points.
struct Strand {
    curve: usize,
    from: usize,
    to: usize,
    from_vertex: usize,
    to_vertex: usize,
}

#[derive(Default)]
struct Builder {
    free: Vec<bool>,
    edges: Vec<CurveEdge>,
    crosses: Vec<CrossVertex>,
    endpoint_ids: HashMap<(usize, Side, usize), usize>,
    endpoints: Vec<(usize, usize)>,
    /// Steps of each strand, keyed by (curve, from vertex).
    strand_steps: HashMap<(usize, usize), Vec<Step>>,
}

impl Builder {
    fn endpoint(&mut self, band: usize, side: Side, curve: usize) -> usize {
        let n = self.endpoints.len();
        let id = *self.endpoint_ids.entry((band, side, curve)).or_insert(n);
        if id == n {
            self.endpoints.push((curve, usize::MAX));
        }
        id
    }

    /// Cuts the piece into cells and records everything crossing it.
    /// Returns the cell along each boundary side.
    ///
    /// `pts` starts with the piece's boundary points counterclockwise and
    /// `tags[k]` labels the side from point k to point k + 1.
    fn piece(&mut self, mut pts: Vec<Point>, tags: Vec<SegTag>, strands: Vec<Strand>) -> Vec<usize> {
        let nb = pts.len();
        let mut segs: Vec<(usize, usize)> = (0..nb).map(|k| (k, (k + 1) % nb)).collect();
        let mut seg_tags = tags;
        // Crossings between strands, with parameters along each.
        let mut on_strand: Vec<Vec<(f64, usize)>> = vec![Vec::new(); strands.len()];
        let mut cross_ids = Vec::new();
        for a in 0..strands.len() {
            for b in a + 1..strands.len() {
                let (sa, sb) = (&strands[a], &strands[b]);
                let (pa, qa, pb, qb) = (pts[sa.from], pts[sa.to], pts[sb.from], pts[sb.to]);
                if let Some((s, t)) = crossing(pa, qa, pb, qb) {
                    let at = (pa.0 + s * (qa.0 - pa.0), pa.1 + s * (qa.1 - pa.1));
                    let v = pts.len();
                    pts.push(at);
                    let da = (qa.0 - pa.0, qa.1 - pa.1);
                    let db = (qb.0 - pb.0, qb.1 - pb.1);
                    let sign = if da.0 * db.1 - da.1 * db.0 > 0.0 { 1 } else { -1 };
                    let id = self.crosses.len();
                    self.crosses.push(CrossVertex {
                        a: sa.curve,
                        b: sb.curve,
                        sign,
                        cell: usize::MAX,
                    });
                    cross_ids.push((v, id));
                    on_strand[a].push((s, v));
                    on_strand[b].push((t, v));
                }
            }
        }
        let cross_of = |v: usize| cross_ids.iter().find(|&&(p, _)| p == v).map(|&(_, id)| id);
        // Strand pieces: (segment index, strand index).
        let mut pieces: Vec<Vec<usize>> = Vec::new();
        for (k, st) in strands.iter().enumerate() {
            let mut stops = on_strand[k].clone();
            stops.sort_by(|x, y| x.0.total_cmp(&y.0));
            let mut chain = vec![st.from];
            chain.extend(stops.iter().map(|&(_, v)| v));
            chain.push(st.to);
            let mut mine = Vec::new();
            for w in chain.windows(2) {
                mine.push(segs.len());
                segs.push((w[0], w[1]));
                seg_tags.push(SegTag::Curve);
            }
            pieces.push(mine);
        }
        let (face, area) = faces(&pts, &segs);
        let base = self.free.len();
        let mut cell_of_face = vec![usize::MAX; area.len()];
        let mut cells = 0;
        for (f, &a) in area.iter().enumerate() {
            if a > 0.0 {
                cell_of_face[f] = base + cells;
                cells += 1;
            }
        }
        self.free.extend(std::iter::repeat(false).take(cells));
        let cell = |h: usize| cell_of_face[face[h]];
        for (s, tag) in seg_tags.iter().enumerate() {
            if let SegTag::Free = tag {
                self.free[cell(2 * s)] = true;
            }
        }
        for (k, st) in strands.iter().enumerate() {
            let mut steps = Vec::new();
            for (n, &s) in pieces[k].iter().enumerate() {
                let (u, _) = segs[s];
                if n > 0 {
                    let id = cross_of(u).unwrap();
                    self.crosses[id].cell = cell(2 * s);
                    steps.push(Step::Cross(id));
                }
                let e = self.edges.len();
                self.edges.push(CurveEdge {
                    curve: st.curve,
                    left: cell(2 * s),
                    right: cell(2 * s + 1),
                });
                steps.push(Step::Edge(e));
            }
            let first = pieces[k][0];
            let last = *pieces[k].last().unwrap();
            self.endpoints[st.from_vertex].1 = cell(2 * first);
            self.endpoints[st.to_vertex].1 = cell(2 * last);
            self.strand_steps.insert((st.curve, st.from_vertex), steps);
        }
        (0..nb).map(|s| cell(2 * s)).collect()
    }
}

impl SurfaceModel {
    pub fn new(w: &BraidWord) -> Self {
        build(w)
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn graph(&self) -> &LinkingGraph {
        &self.graph
    }

    pub fn curve_count(&self) -> usize {
        self.paths.len()
    }

    pub fn cell_count(&self) -> usize {
        self.free.len()
    }

    /// Crossings between curves `a` and `b`.
    pub fn crossings_between(&self, a: usize, b: usize) -> usize {
        self.crosses
            .iter()
            .filter(|x| (x.a, x.b) == (a, b) || (x.a, x.b) == (b, a))
            .count()
    }

    /// Merges cells across glue and across curves outside `cut`.
    pub(crate) fn regions(&self, cut: &[bool]) -> Regions {
        let n = self.free.len();
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(d: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while d[r] != r {
                r = d[r];
            }
            let mut y = x;
            while d[y] != r {
                let next = d[y];
                d[y] = r;
                y = next;
            }
            r
        }
        let join = |d: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(d, a), find(d, b));
            if ra != rb {
                d[ra] = rb;
            }
        };
        for &(a, b) in &self.glue {
            join(&mut dsu, a, b);
        }
        for e in &self.edges {
            if !cut[e.curve] {
                join(&mut dsu, e.left, e.right);
            }
        }
        let mut id = HashMap::new();
        let of_cell: Vec<usize> = (0..n)
            .map(|c| {
                let r = find(&mut dsu, c);
                let k = id.len();
                *id.entry(r).or_insert(k)
            })
            .collect();
        let count = id.len();
        let mut chi = vec![0i64; count];
        let mut free = vec![false; count];
        for c in 0..n {
            chi[of_cell[c]] += 1;
            free[of_cell[c]] |= self.free[c];
        }
        for &(a, _) in &self.glue {
            chi[of_cell[a]] -= 1;
        }
        for e in self.edges.iter().filter(|e| !cut[e.curve]) {
            chi[of_cell[e.left]] -= 1;
        }
        for x in self.crosses.iter().filter(|x| !cut[x.a] && !cut[x.b]) {
            chi[of_cell[x.cell]] += 1;
        }
        for &(curve, cell) in &self.endpoints {
            if !cut[curve] {
                chi[of_cell[cell]] += 1;
            }
        }
        let capped = (0..count).map(|r| !free[r] && chi[r] == 1).collect();
        Regions { of_cell, capped }
    }
}

fn build(w: &BraidWord) -> SurfaceModel {
    let graph = linking_graph(w);
    let bricks = graph.bricks().to_vec();
    let l = w.letters();
    // Bricks leaving band p downwards (top = p) and arriving from above (bottom = p).
    let mut below = vec![None; l.len()];
    let mut above = vec![None; l.len()];
    for (k, b) in bricks.iter().enumerate() {
        below[b.top] = Some(k);
        above[b.bottom] = Some(k);
    }
    // Band-side coordinates y of each curve crossing band p.
    let ys = |p: usize, curve: usize, side: Side| -> f64 {
        match (below[p], above[p]) {
            (Some(_), Some(_)) => {
                let lower = below[p] == Some(curve);
                match (side, lower) {
                    (Side::Low, true) | (Side::High, false) => 0.75,
                    _ => 0.25,
                }
            }
            _ => 0.5,
        }
    };
    let mut bld = Builder::default();
    let mut glue_pairs: HashMap<(usize, Side, usize), (usize, usize)> = HashMap::new();
    let mut record_glue = |key: (usize, Side, usize), cell: usize, from_disk: bool| {
        let e = glue_pairs.entry(key).or_insert((usize::MAX, usize::MAX));
        if from_disk {
            e.0 = cell;
        } else {
            e.1 = cell;
        }
    };
    // Bands.
    for p in 0..l.len() {
        let users: Vec<usize> = [below[p], above[p]].into_iter().flatten().collect();
        let mut left: Vec<(f64, usize)> = Vec::new();
        let mut right: Vec<(f64, usize)> = Vec::new();
        for &c in &users {
            left.push((ys(p, c, Side::Low), c));
            right.push((ys(p, c, Side::High), c));
        }
        left.sort_by(|a, b| a.0.total_cmp(&b.0));
        right.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut pts = vec![(0.0, 0.0), (1.0, 0.0)];
        let mut tags = vec![SegTag::Free];
        let mut at = HashMap::new();
        let mut glue_keys = Vec::new();
        for (k, &(y, c)) in right.iter().enumerate() {
            glue_keys.push((pts.len() - 1, (p, Side::High, k)));
            tags.push(SegTag::Glue);
            at.insert((c, Side::High), pts.len());
            pts.push((1.0, y));
        }
        glue_keys.push((pts.len() - 1, (p, Side::High, right.len())));
        tags.push(SegTag::Glue);
        pts.push((1.0, 1.0));
        tags.push(SegTag::Free);
        pts.push((0.0, 1.0));
        for (k, &(y, c)) in left.iter().enumerate().rev() {
            glue_keys.push((pts.len() - 1, (p, Side::Low, k + 1)));
            tags.push(SegTag::Glue);
            at.insert((c, Side::Low), pts.len());
            pts.push((0.0, y));
        }
        glue_keys.push((pts.len() - 1, (p, Side::Low, 0)));
        tags.push(SegTag::Glue);
        let mut strands = Vec::new();
        for &c in &users {
            let (from, to) = if below[p] == Some(c) {
                (Side::High, Side::Low)
            } else {
                (Side::Low, Side::High)
            };
            strands.push(Strand {
                curve: c,
                from: at[&(c, from)],
                to: at[&(c, to)],
                from_vertex: bld.endpoint(p, from, c),
                to_vertex: bld.endpoint(p, to, c),
            });
        }
        let sides = bld.piece(pts, tags, strands);
        for (s, key) in glue_keys {
            record_glue(key, sides[s], false);
        }
    }
    // Disks.
    for k in 1..=w.strands() {
        let attached: Vec<(usize, Side)> = (0..l.len())
            .filter_map(|p| {
                if l[p] == k {
                    Some((p, Side::Low))
                } else if l[p] + 1 == k {
                    Some((p, Side::High))
                } else {
                    None
                }
            })
            .collect();
        let m = attached.len();
        let mut pts = Vec::new();
        let mut tags = Vec::new();
        let mut at = HashMap::new();
        let mut glue_keys = Vec::new();
        let place = |pts: &mut Vec<Point>, frac: f64, a: usize| {
            let jitter = 0.02 * ((a as f64 * 0.618_033_988_7 + frac * 0.414_213_562).fract());
            let theta = 2.0 * PI * (a as f64 + 0.1 + 0.8 * frac + jitter) / m as f64;
            pts.push((theta.cos(), theta.sin()));
        };
        for (a, &(p, side)) in attached.iter().enumerate() {
            let users: Vec<usize> = [below[p], above[p]].into_iter().flatten().collect();
            let mut along: Vec<(f64, usize)> = users
                .iter()
                .map(|&c| {
                    let y = ys(p, c, side);
                    (if side == Side::Low { y } else { 1.0 - y }, c)
                })
                .collect();
            along.sort_by(|x, y| x.0.total_cmp(&y.0));
            let count = along.len();
            place(&mut pts, 0.0, a);
            for (j, &(f, c)) in along.iter().enumerate() {
                let key = if side == Side::Low { j } else { count - j };
                glue_keys.push((pts.len() - 1, (p, side, key)));
                tags.push(SegTag::Glue);
                at.insert((p, c), pts.len());
                place(&mut pts, f, a);
            }
            let key = if side == Side::Low { count } else { 0 };
            glue_keys.push((pts.len() - 1, (p, side, key)));
            tags.push(SegTag::Glue);
            place(&mut pts, 1.0, a);
            // Free boundary up to the next attachment, through a midpoint.
            tags.push(SegTag::Free);
            place(&mut pts, 1.1, a);
            tags.push(SegTag::Free);
        }
        let side_of = |col: usize| if col == k { Side::Low } else { Side::High };
        let mut strands = Vec::new();
        for (c, b) in bricks.iter().enumerate() {
            if b.column != k && b.column + 1 != k {
                continue;
            }
            let side = side_of(b.column);
            // Chord from top to bottom on D_i, bottom to top on D_{i+1}.
            let (p, q) = if side == Side::Low {
                (b.top, b.bottom)
            } else {
                (b.bottom, b.top)
            };
            strands.push(Strand {
                curve: c,
                from: at[&(p, c)],
                to: at[&(q, c)],
                from_vertex: bld.endpoint(p, side, c),
                to_vertex: bld.endpoint(q, side, c),
            });
        }
        let sides = bld.piece(pts, tags, strands);
        for (s, key) in glue_keys {
            record_glue(key, sides[s], true);
        }
    }
    let mut glue: Vec<(usize, usize)> = glue_pairs.into_values().collect();
    glue.sort_unstable();
    debug_assert!(glue.iter().all(|&(a, b)| a != usize::MAX && b != usize::MAX));
    // Assemble each curve: band top, D_i, band bottom, D_{i+1}.
    let mut paths = Vec::new();
    for (c, b) in bricks.iter().enumerate() {
        let legs = [
            (b.top, Side::High),
            (b.top, Side::Low),
            (b.bottom, Side::Low),
            (b.bottom, Side::High),
        ];
        let mut path = Vec::new();
        for &(p, side) in &legs {
            let v = bld.endpoint_ids[&(p, side, c)];
            path.extend(bld.strand_steps[&(c, v)].iter().copied());
            let next = match legs.iter().position(|&x| x == (p, side)).unwrap() {
                0 => (b.top, Side::Low),
                1 => (b.bottom, Side::Low),
                2 => (b.bottom, Side::High),
                _ => (b.top, Side::High),
            };
            path.push(Step::Endpoint(bld.endpoint_ids[&(next.0, next.1, c)]));
        }
        paths.push(path);
    }
    SurfaceModel {
        word: w.clone(),
        graph,
        free: bld.free,
        glue,
        edges: bld.edges,
        crosses: bld.crosses,
        endpoints: bld.endpoints,
        paths,
    }
}
