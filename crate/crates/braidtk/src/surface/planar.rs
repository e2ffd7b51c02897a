//! Faces of a straight-line plane graph.

use std::f64::consts::PI;

pub(crate) type Point = (f64, f64);

/// Faces of the plane graph with the given points and segments.
///
/// Half-edge `2s` runs from `segs[s].0` to `segs[s].1` and `2s + 1` back.
/// Each half-edge lies on the face to its left. Returns the face of every
/// half-edge and the signed area of every face; the unbounded face is the
/// only one with negative area when the graph is connected.
pub(crate) fn faces(pts: &[Point], segs: &[(usize, usize)]) -> (Vec<usize>, Vec<f64>) {
    let mut out: Vec<Vec<(f64, usize)>> = vec![Vec::new(); pts.len()];
    for (s, &(u, v)) in segs.iter().enumerate() {
        out[u].push((angle(pts[u], pts[v]), 2 * s));
        out[v].push((angle(pts[v], pts[u]), 2 * s + 1));
    }
    for list in &mut out {
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
    }
    let origin = |h: usize| {
        let (u, v) = segs[h / 2];
        if h % 2 == 0 {
            u
        } else {
            v
        }
    };
    // Position of each half-edge in its origin's ccw list.
    let mut slot = vec![0; 2 * segs.len()];
    for list in &out {
        for (k, &(_, h)) in list.iter().enumerate() {
            slot[h] = k;
        }
    }
    let next = |h: usize| {
        let twin = h ^ 1;
        let v = origin(twin);
        let list = &out[v];
        let k = (slot[twin] + list.len() - 1) % list.len();
        list[k].1
    };
    let mut face = vec![usize::MAX; 2 * segs.len()];
    let mut area = Vec::new();
    for start in 0..2 * segs.len() {
        if face[start] != usize::MAX {
            continue;
        }
        let id = area.len();
        let mut a = 0.0;
        let mut h = start;
        loop {
            face[h] = id;
            let (p, q) = (pts[origin(h)], pts[origin(h ^ 1)]);
            a += p.0 * q.1 - q.0 * p.1;
            h = next(h);
            if h == start {
                break;
            }
        }
        area.push(a / 2.0);
    }
    (face, area)
}

fn angle(from: Point, to: Point) -> f64 {
    let a = (to.1 - from.1).atan2(to.0 - from.0);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Parameters (s, t) of the proper crossing of segments ab and cd.
pub(crate) fn crossing(a: Point, b: Point, c: Point, d: Point) -> Option<(f64, f64)> {
    let r = (b.0 - a.0, b.1 - a.1);
    let s = (d.0 - c.0, d.1 - c.1);
    let den = r.0 * s.1 - r.1 * s.0;
    if den.abs() < 1e-12 {
        return None;
    }
    let qp = (c.0 - a.0, c.1 - a.1);
    let t = (qp.0 * s.1 - qp.1 * s.0) / den;
    let u = (qp.0 * r.1 - qp.1 * r.0) / den;
    let eps = 1e-9;
    (t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps).then_some((t, u))
}
