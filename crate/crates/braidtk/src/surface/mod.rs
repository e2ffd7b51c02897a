//! Curve configurations on surfaces, the topology of their neighbourhoods,
//! and assemblage checks.

mod model;
mod planar;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::linking::{e6_witness_in, LinkingGraph};
pub use model::SurfaceModel;
use model::Step;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("curve {0} meets {1} more than once")]
    RepeatedEvent(usize, usize),
    #[error("event {0} joins a curve to itself")]
    SelfEvent(usize),
    #[error("curve {0} has {1} events and no cyclic order was given")]
    MissingRotationData(usize, usize),
    #[error("order for curve {0} does not list exactly its events")]
    BadOrder(usize),
    #[error("brick {0} does not exist")]
    NoSuchBrick(usize),
    #[error("the braid is split")]
    SplitBraid,
}

/// A transverse intersection of curves `a` and `b`. `sign` is +1 when the
/// directions of `a` and `b` form a positive frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEvent {
    pub a: usize,
    pub b: usize,
    pub sign: i8,
}

#[derive(Clone, Debug)]
enum Source {
    Abstract,
    Bricks {
        model: Arc<SurfaceModel>,
        bricks: Vec<usize>,
    },
}

#[derive(Clone, Debug)]
pub struct CurveConfiguration {
    curves: usize,
    events: Vec<CurveEvent>,
    /// Cyclic order of event indices along each curve, when known.
    orders: Vec<Option<Vec<usize>>>,
    source: Source,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsurfaceSummary {
    pub betti: i64,
    pub r: usize,
    pub h: i64,
    pub connected: bool,
}

impl CurveConfiguration {
    /// An abstract configuration; curves with at most three events get
    /// their events in index order, others need [`with_order`](Self::with_order).
    pub fn from_events(curves: usize, events: Vec<CurveEvent>) -> Result<Self, SurfaceError> {
        let mut seen = std::collections::HashSet::new();
        for (k, e) in events.iter().enumerate() {
            if e.a == e.b {
                return Err(SurfaceError::SelfEvent(k));
            }
            if !seen.insert((e.a.min(e.b), e.a.max(e.b))) {
                return Err(SurfaceError::RepeatedEvent(e.a, e.b));
            }
        }
        let mut cfg = CurveConfiguration {
            curves,
            events,
            orders: vec![None; curves],
            source: Source::Abstract,
        };
        for c in 0..curves {
            let mine = cfg.events_of(c);
            if mine.len() <= 3 {
                cfg.orders[c] = Some(mine);
            }
        }
        Ok(cfg)
    }

    /// A tree or graph of curves with one positive event per edge.
    pub fn from_graph(curves: usize, edges: &[(usize, usize)]) -> Result<Self, SurfaceError> {
        let events = edges
            .iter()
            .map(|&(a, b)| CurveEvent { a, b, sign: 1 })
            .collect();
        Self::from_events(curves, events)
    }

    /// Chain of `n` curves, the A_n configuration.
    pub fn chain(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
        Self::from_graph(n, &edges).unwrap()
    }

    /// Tripod with legs of `a`, `b` and `c` curves around a central curve 0.
    pub fn tripod(a: usize, b: usize, c: usize) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for leg in [a, b, c] {
            let mut prev = 0;
            for _ in 0..leg {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Self::from_graph(next, &edges).unwrap()
    }

    /// Sets the cyclic order of events along `curve`.
    pub fn with_order(mut self, curve: usize, order: Vec<usize>) -> Result<Self, SurfaceError> {
        let mut a = order.clone();
        a.sort_unstable();
        if a != self.events_of(curve) {
            return Err(SurfaceError::BadOrder(curve));
        }
        self.orders[curve] = Some(order);
        Ok(self)
    }

    /// The brick curves `bricks` of `model`, in the given order. Cyclic
    /// orders and signs come from the geometry of the surface.
    pub fn from_model(model: Arc<SurfaceModel>, bricks: &[usize]) -> Result<Self, SurfaceError> {
        let n = model.curve_count();
        let mut local = vec![usize::MAX; n];
        for (k, &b) in bricks.iter().enumerate() {
            if b >= n {
                return Err(SurfaceError::NoSuchBrick(b));
            }
            local[b] = k;
        }
        let mut events = Vec::new();
        let mut event_of_cross = vec![usize::MAX; model.crosses.len()];
        for (x, c) in model.crosses.iter().enumerate() {
            if local[c.a] != usize::MAX && local[c.b] != usize::MAX {
                event_of_cross[x] = events.len();
                events.push(CurveEvent {
                    a: local[c.a],
                    b: local[c.b],
                    sign: c.sign,
                });
            }
        }
        let orders = bricks
            .iter()
            .map(|&b| {
                Some(
                    model.paths[b]
                        .iter()
                        .filter_map(|s| match s {
                            Step::Cross(x) if event_of_cross[*x] != usize::MAX => {
                                Some(event_of_cross[*x])
                            }
                            _ => None,
                        })
                        .collect(),
                )
            })
            .collect();
        Ok(CurveConfiguration {
            curves: bricks.len(),
            events,
            orders,
            source: Source::Bricks {
                model,
                bricks: bricks.to_vec(),
            },
        })
    }

    pub fn from_bricks(w: &BraidWord, bricks: &[usize]) -> Result<Self, SurfaceError> {
        if w.is_split() {
            return Err(SurfaceError::SplitBraid);
        }
        Self::from_model(Arc::new(SurfaceModel::new(w)), bricks)
    }

    /// Every brick curve of `w`.
    pub fn standard(w: &BraidWord) -> Result<Self, SurfaceError> {
        let n = crate::linking::bricks(w).len();
        Self::from_bricks(w, &(0..n).collect::<Vec<_>>())
    }

    pub fn curve_count(&self) -> usize {
        self.curves
    }

    pub fn events(&self) -> &[CurveEvent] {
        &self.events
    }

    pub fn bricks(&self) -> Option<&[usize]> {
        match &self.source {
            Source::Bricks { bricks, .. } => Some(bricks),
            Source::Abstract => None,
        }
    }

    pub fn model(&self) -> Option<&Arc<SurfaceModel>> {
        match &self.source {
            Source::Bricks { model, .. } => Some(model),
            Source::Abstract => None,
        }
    }

    fn events_of(&self, c: usize) -> Vec<usize> {
        (0..self.events.len())
            .filter(|&k| self.events[k].a == c || self.events[k].b == c)
            .collect()
    }

    /// The intersection graph, one vertex per curve.
    pub fn intersection_graph(&self) -> LinkingGraph {
        let edges: Vec<_> = self.events.iter().map(|e| (e.a, e.b)).collect();
        LinkingGraph::abstract_graph(self.curves, &edges)
    }

    /// The first `k` curves.
    pub fn prefix(&self, k: usize) -> CurveConfiguration {
        match &self.source {
            Source::Bricks { model, bricks } => {
                Self::from_model(model.clone(), &bricks[..k]).unwrap()
            }
            Source::Abstract => {
                let keep: Vec<usize> = (0..self.events.len())
                    .filter(|&e| self.events[e].a < k && self.events[e].b < k)
                    .collect();
                let renumber = |e: usize| keep.iter().position(|&x| x == e).unwrap();
                CurveConfiguration {
                    curves: k,
                    events: keep.iter().map(|&e| self.events[e]).collect(),
                    orders: self.orders[..k]
                        .iter()
                        .map(|o| {
                            o.as_ref().map(|o| {
                                o.iter()
                                    .filter(|e| keep.contains(e))
                                    .map(|&e| renumber(e))
                                    .collect()
                            })
                        })
                        .collect(),
                    source: Source::Abstract,
                }
            }
        }
    }

    /// Boundary count of each connected component of the neighbourhood, by
    /// tracing the ribbon structure.
    fn trace(&self) -> Result<Vec<(Vec<usize>, usize, usize)>, SurfaceError> {
        let mut orders = Vec::with_capacity(self.curves);
        for c in 0..self.curves {
            match &self.orders[c] {
                Some(o) => orders.push(o.clone()),
                None => return Err(SurfaceError::MissingRotationData(c, self.events_of(c).len())),
            }
        }
        // Arcs run along each curve from one event to the next.
        let mut arc_out = vec![Vec::new(); self.curves];
        let mut arcs = 0;
        for (c, o) in orders.iter().enumerate() {
            arc_out[c] = (arcs..arcs + o.len()).collect();
            arcs += o.len();
        }
        // Half-edge 2t leaves the start of arc t, 2t + 1 enters its end.
        let at = |c: usize, e: usize| orders[c].iter().position(|&x| x == e).unwrap();
        let mut rot = vec![usize::MAX; 2 * arcs];
        for (e, ev) in self.events.iter().enumerate() {
            let (ia, ib) = (at(ev.a, e), at(ev.b, e));
            let na = orders[ev.a].len();
            let nb = orders[ev.b].len();
            let a_out = 2 * arc_out[ev.a][ia];
            let a_in = 2 * arc_out[ev.a][(ia + na - 1) % na] + 1;
            let b_out = 2 * arc_out[ev.b][ib];
            let b_in = 2 * arc_out[ev.b][(ib + nb - 1) % nb] + 1;
            let cycle = if ev.sign > 0 {
                [a_out, b_out, a_in, b_in]
            } else {
                [a_out, b_in, a_in, b_out]
            };
            for k in 0..4 {
                rot[cycle[k]] = cycle[(k + 1) % 4];
            }
        }
        let curve_of_arc: Vec<usize> = (0..self.curves)
            .flat_map(|c| std::iter::repeat(c).take(orders[c].len()))
            .collect();
        let comps = self.components();
        let mut faces = vec![0; comps.len()];
        let comp_of = |c: usize| comps.iter().position(|x| x.contains(&c)).unwrap();
        let mut seen = vec![false; 2 * arcs];
        for start in 0..2 * arcs {
            if seen[start] {
                continue;
            }
            faces[comp_of(curve_of_arc[start / 2])] += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = rot[h ^ 1];
            }
        }
        Ok(comps
            .into_iter()
            .zip(faces)
            .map(|(cs, f)| {
                let v = self
                    .events
                    .iter()
                    .filter(|e| cs.contains(&e.a))
                    .count();
                // A curve meeting nothing has an annulus as neighbourhood.
                let r = if v == 0 { 2 } else { f };
                (cs, v, r)
            })
            .collect())
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.curves];
        let mut out = Vec::new();
        for s in 0..self.curves {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let c = members[k];
                for e in &self.events {
                    let other = if e.a == c {
                        e.b
                    } else if e.b == c {
                        e.a
                    } else {
                        continue;
                    };
                    if comp[other] == usize::MAX {
                        comp[other] = id;
                        members.push(other);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Summary of each component of the regular neighbourhood.
    pub fn component_summaries(&self) -> Result<Vec<SubsurfaceSummary>, SurfaceError> {
        Ok(self
            .trace()?
            .into_iter()
            .map(|(_, v, r)| {
                let betti = 1 + v as i64;
                SubsurfaceSummary {
                    betti,
                    r,
                    h: (betti - r as i64 + 1) / 2,
                    connected: true,
                }
            })
            .collect())
    }

    /// Neighbourhood of the curves together with every complementary disk
    /// of the ambient fibre surface. Equals the plain neighbourhood for
    /// abstract configurations.
    pub fn span_summary(&self) -> Result<SubsurfaceSummary, SurfaceError> {
        let mut s = neighborhood_summary(self)?;
        if let Source::Bricks { model, bricks } = &self.source {
            let d = model.regions(&mask(model.curve_count(), bricks)).capped_count();
            s.betti -= d as i64;
            s.r -= d;
        }
        Ok(s)
    }
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &b in set {
        m[b] = true;
    }
    m
}

/// Betti number, boundary count and genus of the regular neighbourhood.
/// For disconnected configurations the totals are summed and `connected`
/// is false; see [`CurveConfiguration::component_summaries`].
pub fn neighborhood_summary(cfg: &CurveConfiguration) -> Result<SubsurfaceSummary, SurfaceError> {
    let parts = cfg.component_summaries()?;
    Ok(SubsurfaceSummary {
        betti: parts.iter().map(|p| p.betti).sum(),
        r: parts.iter().map(|p| p.r).sum(),
        h: parts.iter().map(|p| p.h).sum(),
        connected: parts.len() == 1,
    })
}

/// Whether the configuration consists of every brick curve of `w`.
pub fn spans_whole_surface(cfg: &CurveConfiguration, w: &BraidWord) -> bool {
    match cfg.bricks() {
        Some(b) => {
            let n = crate::linking::bricks(w).len();
            let mut sorted = b.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            cfg.model().is_some_and(|m| m.word() == w) && sorted.len() == n
        }
        None => false,
    }
}

pub fn is_e_arboreal(cfg: &CurveConfiguration) -> bool {
    let g = cfg.intersection_graph();
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    g.induces_tree(&all) && e6_witness_in(&g, &all).is_some()
}

/// How a curve was seen to meet the running subsurface in one arc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TierEvidence {
    pub tier: u8,
    /// Earlier curves met, in increasing order.
    pub meets: Vec<usize>,
}

/// Tier-2: walks curve `c` and checks that the parts of it inside the span
/// of `prior` form a single arc.
pub(crate) fn single_arc(model: &SurfaceModel, prior: &[bool], c: usize) -> bool {
    let path = &model.paths[c];
    let is_event = |s: &Step| matches!(s, Step::Cross(x) if {
        let v = &model.crosses[*x];
        let other = if v.a == c { v.b } else { v.a };
        prior[other]
    });
    let events: Vec<usize> = (0..path.len()).filter(|&k| is_event(&path[k])).collect();
    if events.is_empty() {
        return false;
    }
    let base = model.regions(prior);
    let mut with_c = prior.to_vec();
    with_c[c] = true;
    let split = model.regions(&with_c);
    // Regions (with c cut) beside each edge of c.
    let edge_ids: Vec<usize> = path
        .iter()
        .filter_map(|s| if let Step::Edge(e) = s { Some(*e) } else { None })
        .collect();
    let k = events.len();
    let mut inside = Vec::with_capacity(2 * k);
    for g in 0..k {
        inside.push(true);
        let (from, to) = (events[g], events[(g + 1) % k]);
        let gap: Vec<usize> = if to > from {
            (from + 1..to).collect()
        } else {
            (from + 1..path.len()).chain(0..to).collect()
        };
        let gap_edges: Vec<usize> = gap
            .iter()
            .filter_map(|&i| if let Step::Edge(e) = path[i] { Some(e) } else { None })
            .collect();
        let first = model.edges[gap_edges[0]];
        let mut is_in = base.capped[base.of_cell[first.left]];
        for side_left in [true, false] {
            if is_in {
                break;
            }
            let cell_of = |e: usize| {
                let ed = model.edges[e];
                if side_left {
                    ed.left
                } else {
                    ed.right
                }
            };
            let r = split.of_cell[cell_of(gap_edges[0])];
            if !split.capped[r] {
                continue;
            }
            // Every edge of c touching r must be one of this gap's edges on this side.
            let clean = edge_ids.iter().all(|&e| {
                let ed = model.edges[e];
                let on_side = gap_edges.contains(&e) && split.of_cell[cell_of(e)] == r;
                let touches =
                    split.of_cell[ed.left] == r || split.of_cell[ed.right] == r;
                !touches || (on_side && {
                    let other = if side_left { ed.right } else { ed.left };
                    split.of_cell[other] != r
                })
            });
            is_in = clean;
        }
        inside.push(is_in);
    }
    if inside.iter().all(|&x| x) {
        return false;
    }
    // Exactly one cyclic run of parts inside.
    let n = inside.len();
    (0..n).filter(|&i| inside[i] && !inside[(i + n - 1) % n]).count() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssemblageReport {
    pub accepted: bool,
    pub failed_condition: Option<char>,
    pub failed_index: Option<usize>,
    /// Genus of the neighbourhood of the first k curves.
    pub h: i64,
    /// Boundary count and Betti number of the final span.
    pub r: usize,
    pub betti: i64,
    #[serde(skip)]
    pub evidence: Vec<TierEvidence>,
}

/// Checks that the curves, in order, form an h-assemblage of type E whose
/// first `k` curves are the starting configuration.
///
/// (a) the first `k` curves form a tree containing E6 with neighbourhood
/// genus at least `h_min`; (b) each later curve meets the span of the
/// earlier ones in a single arc, either because it meets exactly one
/// earlier curve exactly once (tier 1) or by walking it on the surface
/// (tier 2, brick configurations only); (c) the final span is the whole
/// fibre surface (brick configurations only).
pub fn verify_assemblage(cfg: &CurveConfiguration, k: usize, h_min: i64) -> AssemblageReport {
    let mut report = AssemblageReport {
        accepted: false,
        failed_condition: None,
        failed_index: None,
        h: 0,
        r: 0,
        betti: 0,
        evidence: Vec::new(),
    };
    let fail = |mut rep: AssemblageReport, cond: char, idx: usize| {
        rep.failed_condition = Some(cond);
        rep.failed_index = Some(idx);
        rep
    };
    if k == 0 || k > cfg.curve_count() {
        return fail(report, 'a', 0);
    }
    let start = cfg.prefix(k);
    match neighborhood_summary(&start) {
        Ok(s) => report.h = s.h,
        Err(_) => return fail(report, 'a', 0),
    }
    if !is_e_arboreal(&start) || report.h < h_min {
        return fail(report, 'a', 0);
    }
    let g = cfg.intersection_graph();
    let n = cfg.curve_count();
    for c in k..n {
        let meets: Vec<usize> = g.neighbours(c).iter().copied().filter(|&x| x < c).collect();
        if meets.len() == 1 {
            report.evidence.push(TierEvidence { tier: 1, meets });
            continue;
        }
        let ok = match &cfg.source {
            Source::Bricks { model, bricks } => {
                single_arc(model, &mask(model.curve_count(), &bricks[..c]), bricks[c])
            }
            Source::Abstract => false,
        };
        if !ok {
            return fail(report, 'b', c);
        }
        report.evidence.push(TierEvidence { tier: 2, meets });
    }
    let span = match cfg.span_summary() {
        Ok(s) => s,
        Err(_) => return fail(report, 'c', n - 1),
    };
    report.r = span.r;
    report.betti = span.betti;
    if let Source::Bricks { model, bricks } = &cfg.source {
        let mut all = bricks.clone();
        all.sort_unstable();
        all.dedup();
        let s = crate::braid::closure_summary(model.word());
        if all.len() != model.curve_count()
            || span.betti != s.betti
            || span.r != s.components
            || !span.connected
        {
            return fail(report, 'c', n - 1);
        }
    }
    report.accepted = true;
    report
}
