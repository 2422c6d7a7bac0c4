//! Simple-polygon utilities: areas, containment, clipping, inward/outward
//! offsetting and distance queries. Coordinates are µm throughout.

use serde::{Deserialize, Serialize};

/// A polygon stored as an open vertex loop (last vertex connects to first).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<[f64; 2]>,
}

impl Polygon {
    pub fn new(vertices: Vec<[f64; 2]>) -> Self {
        Self { vertices }
    }

    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Self::new(vec![[x0, y0], [x1, y0], [x1, y1], [x0, y1]])
    }

    pub fn circle(cx: f64, cy: f64, r: f64, segments: usize) -> Self {
        let verts = (0..segments)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / segments as f64;
                [cx + r * a.cos(), cy + r * a.sin()]
            })
            .collect();
        Self::new(verts)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Signed area; positive for counter-clockwise orientation.
    pub fn signed_area(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        if n < 3 {
            return 0.0;
        }
        let mut acc = 0.0;
        for i in 0..n {
            let [x0, y0] = v[i];
            let [x1, y1] = v[(i + 1) % n];
            acc += x0 * y1 - x1 * y0;
        }
        0.5 * acc
    }

    pub fn area(&self) -> f64 {
        self.signed_area().abs()
    }

    /// Area-weighted centroid. Meaningful only for non-degenerate polygons.
    pub fn centroid(&self) -> [f64; 2] {
        let v = &self.vertices;
        let n = v.len();
        let a = self.signed_area();
        if n < 3 || a.abs() < 1e-300 {
            // Fall back to vertex average for degenerate slivers.
            let mut cx = 0.0;
            let mut cy = 0.0;
            for p in v {
                cx += p[0];
                cy += p[1];
            }
            return [cx / n.max(1) as f64, cy / n.max(1) as f64];
        }
        let mut cx = 0.0;
        let mut cy = 0.0;
        for i in 0..n {
            let [x0, y0] = v[i];
            let [x1, y1] = v[(i + 1) % n];
            let cross = x0 * y1 - x1 * y0;
            cx += (x0 + x1) * cross;
            cy += (y0 + y1) * cross;
        }
        [cx / (6.0 * a), cy / (6.0 * a)]
    }

    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &self.vertices {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        (lo, hi)
    }

    pub fn perimeter(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        (0..n)
            .map(|i| {
                let a = v[i];
                let b = v[(i + 1) % n];
                ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt()
            })
            .sum()
    }

    /// Ensure counter-clockwise orientation, reversing in place if needed.
    pub fn ensure_ccw(&mut self) {
        if self.signed_area() < 0.0 {
            self.vertices.reverse();
        }
    }

    /// Even-odd containment test (points on the boundary are unspecified).
    pub fn contains(&self, p: [f64; 2]) -> bool {
        let v = &self.vertices;
        let n = v.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let (xi, yi) = (v[i][0], v[i][1]);
            let (xj, yj) = (v[j][0], v[j][1]);
            if ((yi > p[1]) != (yj > p[1]))
                && (p[0] < (xj - xi) * (p[1] - yi) / (yj - yi) + xi)
            {
                inside = !inside;
            }
            j = i;
        }
        inside
    }

    /// O(n²) simple-polygon check: no two non-adjacent edges intersect and no
    /// adjacent edges overlap. Adequate for outlines of a few hundred vertices.
    pub fn is_simple(&self) -> bool {
        let v = &self.vertices;
        let n = v.len();
        if n < 3 {
            return false;
        }
        if self.area() <= 0.0 {
            return false;
        }
        for i in 0..n {
            let a0 = v[i];
            let a1 = v[(i + 1) % n];
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let b0 = v[j];
                let b1 = v[(j + 1) % n];
                if adjacent {
                    continue;
                }
                if segments_intersect(a0, a1, b0, b1) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimum distance from `p` to the polygon boundary.
    pub fn distance_to_boundary(&self, p: [f64; 2]) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let d = point_segment_distance(p, v[i], v[(i + 1) % n]);
            if d < best {
                best = d;
            }
        }
        best
    }

    /// Clip this polygon against an axis-aligned rectangle (Sutherland–
    /// Hodgman). The subject may be non-convex; disconnected intersections
    /// come back joined by zero-width bridges, which is fine for area and
    /// moment computations.
    pub fn clip_to_rect(&self, lo: [f64; 2], hi: [f64; 2]) -> Polygon {
        let mut cur = self.vertices.clone();
        // Each closure returns signed distance inside (>= 0 keeps).
        let planes: [(usize, f64, f64); 4] = [
            (0, 1.0, -lo[0]),  // x >= lo.x
            (0, -1.0, hi[0]),  // x <= hi.x
            (1, 1.0, -lo[1]),  // y >= lo.y
            (1, -1.0, hi[1]),  // y <= hi.y
        ];
        for &(axis, sign, offset) in &planes {
            if cur.is_empty() {
                break;
            }
            let inside = |p: [f64; 2]| sign * p[axis] + offset >= 0.0;
            let mut next = Vec::with_capacity(cur.len() + 4);
            let n = cur.len();
            for i in 0..n {
                let a = cur[i];
                let b = cur[(i + 1) % n];
                let ia = inside(a);
                let ib = inside(b);
                if ia {
                    next.push(a);
                }
                if ia != ib {
                    let da = sign * a[axis] + offset;
                    let db = sign * b[axis] + offset;
                    let t = da / (da - db);
                    next.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
                }
            }
            cur = next;
        }
        Polygon::new(cur)
    }

    /// Offset the polygon by `distance` (positive = outward for CCW input)
    /// using exact miter joins at the vertices. Collapsed or orientation-
    /// flipped results are reported as annihilation (empty set). Inputs must
    /// be simple; inward distances beyond the inradius annihilate.
    pub fn offset(&self, distance: f64) -> Vec<Polygon> {
        if distance == 0.0 {
            return vec![self.clone()];
        }
        let mut poly = self.clone();
        let flip = poly.signed_area() < 0.0;
        if flip {
            poly.vertices.reverse();
        }
        let out = match miter_offset(&poly.vertices, distance) {
            Some(v) => Polygon::new(v),
            None => return Vec::new(),
        };
        if out.signed_area() <= 0.0 {
            return Vec::new();
        }
        // Inward offsets of valid magnitude keep every new vertex at least
        // `distance` inside; a gross violation signals annihilation.
        if distance < 0.0 && out.area() >= self.area() {
            return Vec::new();
        }
        let mut result = out;
        if flip {
            result.vertices.reverse();
        }
        vec![result]
    }
}

/// Miter-offset an explicitly CCW vertex loop. Returns None when a join
/// degenerates (collinear reversal) or an edge collapses.
fn miter_offset(verts: &[[f64; 2]], distance: f64) -> Option<Vec<[f64; 2]>> {
    let n = verts.len();
    if n < 3 {
        return None;
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prev = verts[(i + n - 1) % n];
        let cur = verts[i];
        let next = verts[(i + 1) % n];
        let e0 = norm2(sub(cur, prev))?;
        let e1 = norm2(sub(next, cur))?;
        // Outward normals of a CCW loop point right of travel.
        let n0 = [e0[1], -e0[0]];
        let n1 = [e1[1], -e1[0]];
        let dot = n0[0] * n1[0] + n0[1] * n1[1];
        let denom = 1.0 + dot;
        if denom <= 1e-9 {
            // Near-180° turn: miter explodes.
            return None;
        }
        let mx = (n0[0] + n1[0]) / denom;
        let my = (n0[1] + n1[1]) / denom;
        out.push([cur[0] + distance * mx, cur[1] + distance * my]);
    }
    // Reject edges that flipped direction (local collapse).
    for i in 0..n {
        let a = sub(verts[(i + 1) % n], verts[i]);
        let b = sub(out[(i + 1) % n], out[i]);
        if a[0] * b[0] + a[1] * b[1] < 0.0 {
            return None;
        }
    }
    Some(out)
}

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn norm2(v: [f64; 2]) -> Option<[f64; 2]> {
    let l = (v[0] * v[0] + v[1] * v[1]).sqrt();
    if l < 1e-12 {
        None
    } else {
        Some([v[0] / l, v[1] / l])
    }
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn on_segment(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0]) - 1e-12
        && p[0] <= a[0].max(b[0]) + 1e-12
        && p[1] >= a[1].min(b[1]) - 1e-12
        && p[1] <= a[1].max(b[1]) + 1e-12
}

/// Proper or improper intersection of closed segments.
fn segments_intersect(a0: [f64; 2], a1: [f64; 2], b0: [f64; 2], b1: [f64; 2]) -> bool {
    let d1 = cross(b0, b1, a0);
    let d2 = cross(b0, b1, a1);
    let d3 = cross(a0, a1, b0);
    let d4 = cross(a0, a1, b1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(b0, b1, a0))
        || (d2 == 0.0 && on_segment(b0, b1, a1))
        || (d3 == 0.0 && on_segment(a0, a1, b0))
        || (d4 == 0.0 && on_segment(a0, a1, b1))
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let ab = sub(b, a);
    let ap = sub(p, a);
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((ap[0] * ab[0] + ap[1] * ab[1]) / len2).clamp(0.0, 1.0)
    };
    let dx = p[0] - (a[0] + t * ab[0]);
    let dy = p[1] - (a[1] + t * ab[1]);
    (dx * dx + dy * dy).sqrt()
}

/// A planar region: one outer ring plus zero or more holes. The outer ring is
/// stored CCW and holes CW, so that metal always lies to the left of travel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub outer: Polygon,
    pub holes: Vec<Polygon>,
}

impl Region {
    pub fn from_polygon(mut outer: Polygon) -> Self {
        outer.ensure_ccw();
        Self {
            outer,
            holes: Vec::new(),
        }
    }

    pub fn with_holes(mut outer: Polygon, holes: Vec<Polygon>) -> Self {
        outer.ensure_ccw();
        let holes = holes
            .into_iter()
            .map(|mut h| {
                if h.signed_area() > 0.0 {
                    h.vertices.reverse();
                }
                h
            })
            .collect();
        Self { outer, holes }
    }

    pub fn area(&self) -> f64 {
        self.outer.area() - self.holes.iter().map(Polygon::area).sum::<f64>()
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        self.outer.contains(p) && !self.holes.iter().any(|h| h.contains(p))
    }

    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        self.outer.bounding_box()
    }

    pub fn distance_to_boundary(&self, p: [f64; 2]) -> f64 {
        let mut d = self.outer.distance_to_boundary(p);
        for h in &self.holes {
            d = d.min(h.distance_to_boundary(p));
        }
        d
    }

    /// All rings (outer first). Traversal order puts the interior on the left.
    pub fn rings(&self) -> impl Iterator<Item = &Polygon> {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }
}

/// Inward (negative) or outward (positive) polygon offset.
///
/// Wrapper matching the geometry-module contract: annihilation yields an
/// empty set, never an error.
pub fn offset_polygon(polygon: &Polygon, distance: f64) -> Vec<Polygon> {
    polygon.offset(distance)
}

/// Area and centroid of `cell ∩ region` for an axis-aligned cell, computed
/// via clipped signed moments (outer minus holes).
pub fn cell_region_moments(region: &Region, lo: [f64; 2], hi: [f64; 2]) -> (f64, [f64; 2]) {
    let mut area = 0.0;
    let mut mx = 0.0;
    let mut my = 0.0;
    let mut accumulate = |poly: &Polygon, sign: f64| {
        let clipped = poly.clip_to_rect(lo, hi);
        let a = clipped.area();
        if a > 0.0 {
            let c = clipped.centroid();
            area += sign * a;
            mx += sign * a * c[0];
            my += sign * a * c[1];
        }
    };
    accumulate(&region.outer, 1.0);
    for h in &region.holes {
        accumulate(h, -1.0);
    }
    if area <= 0.0 {
        (0.0, [0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])])
    } else {
        (area, [mx / area, my / area])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rectangle_area_and_centroid() {
        let p = Polygon::rectangle(0.0, 0.0, 4.0, 2.0);
        assert_relative_eq!(p.signed_area(), 8.0);
        let c = p.centroid();
        assert_relative_eq!(c[0], 2.0);
        assert_relative_eq!(c[1], 1.0);
        assert!(p.is_simple());
    }

    #[test]
    fn bowtie_is_not_simple() {
        let p = Polygon::new(vec![[0.0, 0.0], [2.0, 2.0], [2.0, 0.0], [0.0, 2.0]]);
        assert!(!p.is_simple());
    }

    #[test]
    fn offset_identity_at_zero() {
        let p = Polygon::rectangle(0.0, 0.0, 10.0, 10.0);
        let out = offset_polygon(&p, 0.0);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0], p);
    }

    #[test]
    fn square_inward_offset_shrinks_exactly() {
        // 1000 µm square, inward 1 µm -> 998 µm square.
        let p = Polygon::rectangle(0.0, 0.0, 1000.0, 1000.0);
        let out = offset_polygon(&p, -1.0);
        assert_eq!(out.len(), 1);
        assert_relative_eq!(out[0].area(), 998.0 * 998.0, max_relative = 1e-12);
        let (lo, hi) = out[0].bounding_box();
        assert_relative_eq!(lo[0], 1.0, epsilon = 1e-9);
        assert_relative_eq!(hi[0], 999.0, epsilon = 1e-9);
    }

    #[test]
    fn offset_annihilates_small_polygon() {
        let p = Polygon::rectangle(0.0, 0.0, 1.0, 1.0);
        let out = offset_polygon(&p, -0.75);
        assert!(out.is_empty());
    }

    /// Pixel-erosion oracle: rasterize, erode by a disk of radius `d`, count.
    fn eroded_area_oracle(poly: &Polygon, d: f64, res: f64) -> f64 {
        let (lo, hi) = poly.bounding_box();
        let nx = ((hi[0] - lo[0]) / res).ceil() as usize;
        let ny = ((hi[1] - lo[1]) / res).ceil() as usize;
        let mut count = 0usize;
        for iy in 0..ny {
            for ix in 0..nx {
                let p = [
                    lo[0] + (ix as f64 + 0.5) * res,
                    lo[1] + (iy as f64 + 0.5) * res,
                ];
                if poly.contains(p) && poly.distance_to_boundary(p) >= d {
                    count += 1;
                }
            }
        }
        count as f64 * res * res
    }

    #[test]
    fn l_shape_inward_offset_matches_erosion_oracle() {
        let l = Polygon::new(vec![
            [0.0, 0.0],
            [40.0, 0.0],
            [40.0, 15.0],
            [15.0, 15.0],
            [15.0, 40.0],
            [0.0, 40.0],
        ]);
        let out = offset_polygon(&l, -1.0);
        assert_eq!(out.len(), 1);
        let got = out[0].area();
        let want = eroded_area_oracle(&l, 1.0, 0.05);
        // Morphological erosion rounds the reflex corner that the miter keeps
        // square; the difference is (1 - pi/4) d^2, well below 0.5 % here.
        assert!(
            (got - want).abs() / want < 0.005,
            "offset area {got} vs erosion oracle {want}"
        );
    }

    #[test]
    fn convex_offset_composes() {
        let p = Polygon::new(vec![
            [0.0, 0.0],
            [30.0, -5.0],
            [45.0, 10.0],
            [30.0, 30.0],
            [5.0, 25.0],
        ]);
        assert!(p.is_simple());
        let a = 1.3;
        let b = 0.9;
        let once = offset_polygon(&p, -(a + b));
        let twice: Vec<Polygon> = offset_polygon(&p, -a)
            .iter()
            .flat_map(|q| offset_polygon(q, -b))
            .collect();
        assert_eq!(once.len(), 1);
        assert_eq!(twice.len(), 1);
        for (u, v) in once[0].vertices.iter().zip(twice[0].vertices.iter()) {
            assert_relative_eq!(u[0], v[0], epsilon = 1e-9);
            assert_relative_eq!(u[1], v[1], epsilon = 1e-9);
        }
    }

    #[test]
    fn clip_to_rect_partial_cell() {
        let tri = Polygon::new(vec![[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]]);
        // Cell fully inside the triangle.
        let clipped = tri.clip_to_rect([0.0, 0.0], [1.0, 1.0]);
        assert_relative_eq!(clipped.area(), 1.0, epsilon = 1e-12);
        // Cell cut by the hypotenuse: x in [1,2], y in [0,1], x+y <= 2 is the
        // triangle (1,0),(2,0),(1,1).
        let clipped2 = tri.clip_to_rect([1.0, 0.0], [2.0, 1.0]);
        assert_relative_eq!(clipped2.area(), 0.5, epsilon = 1e-12);
        // Cell outside entirely.
        let clipped3 = tri.clip_to_rect([2.5, 2.5], [3.0, 3.0]);
        assert_relative_eq!(clipped3.area(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn region_with_hole_area_and_containment() {
        let outer = Polygon::rectangle(0.0, 0.0, 10.0, 10.0);
        let hole = Polygon::rectangle(4.0, 4.0, 6.0, 6.0);
        let r = Region::with_holes(outer, vec![hole]);
        assert_relative_eq!(r.area(), 100.0 - 4.0);
        assert!(r.contains([1.0, 1.0]));
        assert!(!r.contains([5.0, 5.0]));
        assert!(!r.contains([11.0, 5.0]));
    }

    #[test]
    fn cell_moments_respect_holes() {
        let outer = Polygon::rectangle(0.0, 0.0, 4.0, 4.0);
        let hole = Polygon::rectangle(1.0, 1.0, 3.0, 3.0);
        let r = Region::with_holes(outer, vec![hole]);
        let (a, _) = cell_region_moments(&r, [0.0, 0.0], [4.0, 4.0]);
        assert_relative_eq!(a, 12.0, epsilon = 1e-12);
        let (a2, c2) = cell_region_moments(&r, [0.0, 0.0], [2.0, 2.0]);
        assert_relative_eq!(a2, 3.0, epsilon = 1e-12);
        // Centroid of the L-shaped quarter: (outer quarter 4 @ (1,1)) minus
        // (hole quarter 1 @ (1.5,1.5)) => ((4*1-1*1.5)/3, same) = (5/6, 5/6).
        assert_relative_eq!(c2[0], 2.5 / 3.0, epsilon = 1e-12);
        assert_relative_eq!(c2[1], 2.5 / 3.0, epsilon = 1e-12);
    }
}
