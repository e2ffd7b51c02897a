//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use braidtk::braid::BraidWord;
use braidtk::divide::{Event, OrderedMorseDivide};

/// Every nonempty word on `strands` strands with at most `max` letters.
pub fn all_words(max: usize, strands: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..strands).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().map(|l| BraidWord::new(strands, l.clone()).unwrap()));
    }
    out
}

/// All words with at most `max` letters on 2, 3 and 4 strands.
pub fn corpus(max: usize) -> Vec<BraidWord> {
    (2..=4).flat_map(|n| all_words(max, n)).collect()
}

/// Tracks each strand through the crossings one at a time. Returns the
/// 1-based image of each strand and the number of cycles.
pub fn permutation_oracle(w: &BraidWord) -> (Vec<usize>, usize) {
    let n = w.strands();
    let mut pos: Vec<usize> = (0..n).collect();
    for &g in w.letters() {
        for p in pos.iter_mut() {
            if *p == g - 1 {
                *p = g;
            } else if *p == g {
                *p = g - 1;
            }
        }
    }
    let image: Vec<usize> = pos.iter().map(|p| p + 1).collect();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if !seen[s] {
            cycles += 1;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = pos[k];
            }
        }
    }
    (image, cycles)
}

type P = Vec<i128>;

fn trim(mut p: P) -> P {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &P, b: &P) -> P {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn mul(a: &P, b: &P) -> P {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn neg(a: &P) -> P {
    a.iter().map(|x| -x).collect()
}

fn det(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut acc = vec![];
    for c in 0..n {
        let minor: Vec<Vec<P>> = m[1..]
            .iter()
            .map(|row| (0..n).filter(|&k| k != c).map(|k| row[k].clone()).collect())
            .collect();
        let term = mul(&m[0][c], &det(&minor));
        acc = if c % 2 == 0 { add(&acc, &term) } else { add(&acc, &neg(&term)) };
    }
    acc
}

/// Strips powers of t and fixes the sign so the top coefficient is positive.
pub fn normalize(p: &[i128]) -> Vec<i64> {
    let p = trim(p.to_vec());
    let lo = p.iter().position(|&x| x != 0).unwrap_or(p.len());
    let p = &p[lo..];
    let s = p.last().map_or(1, |x| x.signum());
    p.iter().map(|&x| (s * x) as i64).collect()
}

/// det(I − B(w)) for the reduced Burau matrix B(w), normalized. Up to
/// units this is Δ(t)·(1 + t + ... + t^{N−1}).
pub fn burau_det(w: &BraidWord) -> Vec<i64> {
    let n = w.strands() - 1;
    let one = vec![1i128];
    let t = vec![0i128, 1];
    let ident = |n: usize| -> Vec<Vec<P>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { one.clone() } else { vec![] }).collect())
            .collect()
    };
    let mut b = ident(n);
    for &g in w.letters() {
        let mut s = ident(n);
        let i = g - 1;
        s[i][i] = neg(&t);
        if i > 0 {
            s[i - 1][i] = t.clone();
        }
        if i + 1 < n {
            s[i + 1][i] = one.clone();
        }
        let mut next = vec![vec![vec![]; n]; n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = vec![];
                for k in 0..n {
                    acc = add(&acc, &mul(&b[r][k], &s[k][c]));
                }
                next[r][c] = acc;
            }
        }
        b = next;
    }
    let m: Vec<Vec<P>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let id = if r == c { one.clone() } else { vec![] };
                    add(&id, &neg(&b[r][c]))
                })
                .collect()
        })
        .collect();
    normalize(&det(&m))
}

/// `alex`·(1 + t + ... + t^{N−1}), normalized, for comparison with
/// [`burau_det`].
pub fn times_cyclotomic(alex: &[i64], strands: usize) -> Vec<i64> {
    let a: P = alex.iter().map(|&x| x as i128).collect();
    normalize(&mul(&a, &vec![1; strands]))
}

/// Linked brick pairs found by reading the letters at the corners of the
/// two bricks, top to bottom, and matching them against
/// σ_i³, σ_iσ_{i+1}σ_iσ_{i+1} and σ_{i+1}σ_iσ_{i+1}σ_i.
pub fn literal_links(w: &BraidWord) -> BTreeSet<((usize, usize), (usize, usize))> {
    let l = w.letters();
    let mut bricks = Vec::new();
    for p in 0..l.len() {
        if let Some(q) = (p + 1..l.len()).find(|&q| l[q] == l[p]) {
            bricks.push((p, q));
        }
    }
    let mut out = BTreeSet::new();
    for (i, &x) in bricks.iter().enumerate() {
        for &y in &bricks[i + 1..] {
            let (a, b) = (l[x.0], l[y.0]);
            if a.abs_diff(b) > 1 {
                continue;
            }
            let mut ends = vec![x.0, x.1, y.0, y.1];
            ends.sort_unstable();
            ends.dedup();
            let read: Vec<usize> = ends.iter().map(|&k| l[k]).collect();
            let (i0, i1) = (a.min(b), a.min(b) + 1);
            let linked = if a == b {
                read == [a, a, a]
            } else {
                read == [i0, i1, i0, i1] || read == [i1, i0, i1, i0]
            };
            if linked {
                out.insert((x.min(y), x.max(y)));
            }
        }
    }
    out
}

/// Counts the bounded faces of a divide by drawing it on a grid and flood
/// filling the empty cells that cannot reach the border.
pub fn raster_faces(d: &OrderedMorseDivide) -> usize {
    let n = d.lines;
    let e = d.events.len();
    let s = 4;
    let w = s * (e + 1) + 1;
    let h = s * (n + 1) + 1;
    let mut ink = vec![vec![false; w]; h];
    let mut born = vec![0usize; n + 1];
    let mut dies = vec![e + 1; n + 1];
    for (k, ev) in d.events.iter().enumerate() {
        match *ev {
            Event::Min(j) => {
                born[j] = k + 1;
                born[j + 1] = k + 1;
            }
            Event::Max(j) => {
                dies[j] = k + 1;
                dies[j + 1] = k + 1;
            }
            Event::Crossing(_) => {}
        }
    }
    let mut line = |x0: i64, y0: i64, x1: i64, y1: i64| {
        let steps = (x1 - x0).abs().max((y1 - y0).abs());
        for t in 0..=steps {
            let x = x0 + (x1 - x0) * t / steps.max(1);
            let y = y0 + (y1 - y0) * t / steps.max(1);
            ink[y as usize][x as usize] = true;
        }
    };
    let s = s as i64;
    for lvl in 1..=n {
        let y = s * lvl as i64;
        for k in born[lvl]..=dies[lvl].min(e + 1) {
            let x = s * k as i64;
            let crossing_here = |k: usize| {
                (1..=e).contains(&k)
                    && matches!(d.events[k - 1], Event::Crossing(j) if j == lvl || j + 1 == lvl)
            };
            if k < dies[lvl] && !crossing_here(k + 1) {
                line(x + s / 2, y, x + s, y);
            }
            if k < dies[lvl] && !crossing_here(k) {
                line(x, y, x + s / 2, y);
            }
        }
    }
    for (k, ev) in d.events.iter().enumerate() {
        let x = s * (k + 1) as i64;
        match *ev {
            Event::Min(j) | Event::Max(j) => line(x, s * j as i64, x, s * (j + 1) as i64),
            Event::Crossing(j) => {
                let (y0, y1) = (s * j as i64, s * (j + 1) as i64);
                line(x - s / 2, y0, x + s / 2, y1);
                line(x - s / 2, y1, x + s / 2, y0);
            }
        }
    }
    let mut seen = vec![vec![false; w]; h];
    let fill = |sx: usize, sy: usize, seen: &mut Vec<Vec<bool>>| {
        let mut q = VecDeque::from([(sx, sy)]);
        seen[sy][sx] = true;
        let mut border = false;
        while let Some((x, y)) = q.pop_front() {
            if x == 0 || y == 0 || x == w - 1 || y == h - 1 {
                border = true;
            }
            let nbrs = [
                (x.wrapping_sub(1), y),
                (x + 1, y),
                (x, y.wrapping_sub(1)),
                (x, y + 1),
            ];
            for (nx, ny) in nbrs {
                if nx < w && ny < h && !ink[ny][nx] && !seen[ny][nx] {
                    seen[ny][nx] = true;
                    q.push_back((nx, ny));
                }
            }
        }
        border
    };
    let mut faces = 0;
    for y in 0..h {
        for x in 0..w {
            if !ink[y][x] && !seen[y][x] && !fill(x, y, &mut seen) {
                faces += 1;
            }
        }
    }
    faces
}
