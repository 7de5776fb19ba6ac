//! Iso-lines of gridded values by marching squares.
//!
//! A node is inside when its value is `>= level`. Crossing points are
//! linearly interpolated along cell edges; saddle cells are resolved by the
//! mean of their four corners. Segments are joined into polylines through
//! shared edge ids, so the output does not depend on floating-point
//! equality of endpoints.

use depthlab_core::depth::GridSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub level: f64,
    pub points: Vec<[f64; 2]>,
    pub closed: bool,
}

#[derive(Debug, Clone, Copy)]
enum Side {
    Bottom,
    Right,
    Top,
    Left,
}

use Side::*;

/// Edge pairs cut by the iso-line, by corner mask (bl = 1, br = 2, tr = 4, tl = 8).
/// Saddles 5 and 10 list the pairing for an outside centre.
const CASES: [&[(Side, Side)]; 16] = [
    &[],
    &[(Left, Bottom)],
    &[(Bottom, Right)],
    &[(Left, Right)],
    &[(Right, Top)],
    &[(Left, Bottom), (Right, Top)],
    &[(Bottom, Top)],
    &[(Left, Top)],
    &[(Top, Left)],
    &[(Bottom, Top)],
    &[(Bottom, Right), (Top, Left)],
    &[(Right, Top)],
    &[(Left, Right)],
    &[(Bottom, Right)],
    &[(Left, Bottom)],
    &[],
];

const SADDLE_5_INSIDE: &[(Side, Side)] = &[(Bottom, Right), (Top, Left)];
const SADDLE_10_INSIDE: &[(Side, Side)] = &[(Left, Bottom), (Right, Top)];

struct Lattice<'a> {
    grid: &'a GridSpec,
    values: &'a [f64],
    level: f64,
}

impl Lattice<'_> {
    fn value(&self, ix: usize, iy: usize) -> f64 {
        self.values[iy * self.grid.nx + ix]
    }

    fn h_count(&self) -> usize {
        (self.grid.nx - 1) * self.grid.ny
    }

    fn edge_count(&self) -> usize {
        self.h_count() + self.grid.nx * (self.grid.ny - 1)
    }

    fn edge_id(&self, ix: usize, iy: usize, side: Side) -> usize {
        let nx = self.grid.nx;
        match side {
            Bottom => iy * (nx - 1) + ix,
            Top => (iy + 1) * (nx - 1) + ix,
            Left => self.h_count() + iy * nx + ix,
            Right => self.h_count() + iy * nx + ix + 1,
        }
    }

    /// Crossing point on edge `id`.
    fn crossing(&self, id: usize) -> [f64; 2] {
        let nx = self.grid.nx;
        let ((ax, ay), (bx, by)) = if id < self.h_count() {
            let (iy, ix) = (id / (nx - 1), id % (nx - 1));
            ((ix, iy), (ix + 1, iy))
        } else {
            let k = id - self.h_count();
            let (iy, ix) = (k / nx, k % nx);
            ((ix, iy), (ix, iy + 1))
        };
        let (va, vb) = (self.value(ax, ay), self.value(bx, by));
        let t = if va == vb { 0.5 } else { ((self.level - va) / (vb - va)).clamp(0.0, 1.0) };
        let (xa, ya) = (self.grid.x(ax), self.grid.y(ay));
        let (xb, yb) = (self.grid.x(bx), self.grid.y(by));
        [xa + t * (xb - xa), ya + t * (yb - ya)]
    }

    fn segments(&self) -> Vec<[usize; 2]> {
        let mut segs = Vec::new();
        for iy in 0..self.grid.ny - 1 {
            for ix in 0..self.grid.nx - 1 {
                let corners = [
                    self.value(ix, iy),
                    self.value(ix + 1, iy),
                    self.value(ix + 1, iy + 1),
                    self.value(ix, iy + 1),
                ];
                let mask = corners
                    .iter()
                    .enumerate()
                    .fold(0, |m, (k, &v)| if v >= self.level { m | (1 << k) } else { m });
                let centre_inside = corners.iter().sum::<f64>() / 4.0 >= self.level;
                let pairs = match (mask, centre_inside) {
                    (5, true) => SADDLE_5_INSIDE,
                    (10, true) => SADDLE_10_INSIDE,
                    _ => CASES[mask],
                };
                for &(a, b) in pairs {
                    segs.push([self.edge_id(ix, iy, a), self.edge_id(ix, iy, b)]);
                }
            }
        }
        segs
    }
}

/// Iso-lines of `values` (row-major on `grid`) at `level`.
pub fn iso_lines(values: &[f64], grid: &GridSpec, level: f64) -> Vec<Polyline> {
    assert_eq!(values.len(), grid.len(), "one value per grid node");
    let lattice = Lattice { grid, values, level };
    let segs = lattice.segments();

    // each edge touches at most two segments
    let mut incident: Vec<[usize; 2]> = vec![[usize::MAX; 2]; lattice.edge_count()];
    for (s, seg) in segs.iter().enumerate() {
        for &e in seg {
            let slot = if incident[e][0] == usize::MAX { 0 } else { 1 };
            incident[e][slot] = s;
        }
    }
    let other = |e: usize, s: usize| {
        let [a, b] = incident[e];
        if a == s { b } else { a }
    };

    let mut used = vec![false; segs.len()];
    let mut lines = Vec::new();
    let degree_one = |e: usize| incident[e][1] == usize::MAX;
    // open chains first, starting from their boundary ends, then cycles
    let starts: Vec<(usize, usize)> = segs
        .iter()
        .enumerate()
        .flat_map(|(s, seg)| seg.iter().filter(|&&e| degree_one(e)).map(move |&e| (s, e)))
        .chain(segs.iter().enumerate().map(|(s, seg)| (s, seg[0])))
        .collect();
    for (start, start_edge) in starts {
        if used[start] {
            continue;
        }
        let mut edges = vec![start_edge];
        let (mut s, mut e) = (start, start_edge);
        let closed = loop {
            used[s] = true;
            let seg = segs[s];
            e = if seg[0] == e { seg[1] } else { seg[0] };
            edges.push(e);
            let next = other(e, s);
            if next == usize::MAX {
                break false;
            }
            if used[next] {
                break next == start;
            }
            s = next;
        };
        if closed {
            edges.pop();
        }
        lines.push(Polyline {
            level,
            points: edges.iter().map(|&e| lattice.crossing(e)).collect(),
            closed,
        });
    }
    lines
}
