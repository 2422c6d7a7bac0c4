//! Conductor discretization.
//!
//! Each region is meshed as graded boundary strips plus a clipped core grid:
//!
//! * Boundary rings are resampled at the finest strip length, then marched
//!   inward along per-station miter directions. Strips between consecutive
//!   rings tile the band exactly because both rails share the same stations.
//!   Strip widths start at the edge band, snap to the region-partition marks
//!   0.5·x0 and x0, then double until they reach the core size.
//! * The remaining core is covered by an axis-aligned grid clipped against
//!   the innermost ring, so the panel union reproduces the region area to
//!   floating-point accuracy.
//!
//! Charge density diverges like 1/sqrt(distance) at conductor edges; the
//! graded strips resolve it while long thin panels (aspect capped at 8) keep
//! the unknown count tractable for a dense solver.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::geometry::polygon::{cell_region_moments, Polygon, Region};
use crate::solver::kernel::{Panel, DEPTH_UNBOUNDED};

/// Strip/core parameters for one region family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionMeshSpec {
    /// Finest strip width at the outer ring (µm).
    pub outer_band: f64,
    /// Finest strip width at hole rings (µm).
    pub hole_band: f64,
    /// Core cell size (µm).
    pub target: f64,
    /// Maximum panel aspect ratio.
    pub max_aspect: f64,
    /// Maximum along-edge strip length (µm).
    pub length_cap: f64,
    /// Region-partition scale: strips snap to 0.5·x0 and x0 (µm).
    pub x0: f64,
}

impl RegionMeshSpec {
    pub fn uniform(target: f64, edge_band: f64) -> Self {
        Self {
            outer_band: edge_band,
            hole_band: edge_band,
            target,
            max_aspect: 8.0,
            length_cap: 24.0,
            x0: 1.0,
        }
    }
}

/// Strip widths from the edge inward: fill [0, x0] snapping the partition
/// marks, then double until the core size takes over. An edge band at or
/// beyond the core size disables banding entirely.
pub fn band_widths(edge_band: f64, x0: f64, target: f64) -> Vec<f64> {
    let mut widths = Vec::new();
    if edge_band >= target {
        return widths;
    }
    let eps = 1e-9;
    let half = 0.5 * x0;
    if edge_band <= half + eps {
        let n1 = (half / edge_band - eps).ceil().max(1.0) as usize;
        widths.extend(std::iter::repeat(half / n1 as f64).take(n1));
        let e2 = (2.0 * edge_band).min(half);
        let n2 = (half / e2 - eps).ceil().max(1.0) as usize;
        widths.extend(std::iter::repeat(half / n2 as f64).take(n2));
    } else if edge_band <= x0 + eps {
        let n = (x0 / edge_band - eps).ceil().max(1.0) as usize;
        widths.extend(std::iter::repeat(x0 / n as f64).take(n));
    }
    let mut next = match widths.last() {
        Some(&w) => 2.0 * w.max(edge_band.min(x0)),
        None => edge_band,
    };
    while next <= 0.5 * target + eps {
        widths.push(next);
        next *= 2.0;
    }
    widths
}

#[derive(Debug, Clone)]
struct RingStations {
    /// Cleaned original vertices of the ring.
    verts: Vec<[f64; 2]>,
    /// Miter direction into the metal per vertex (not unit length).
    miter: Vec<[f64; 2]>,
    /// Station positions at depth 0.
    points: Vec<[f64; 2]>,
    /// (edge index, fraction along edge) per station.
    place: Vec<(usize, f64)>,
    corner: Vec<bool>,
}

/// Resample a ring polyline at the given spacing, keeping original vertices.
/// Rings are traversed with metal on the left (outer CCW, holes CW), so the
/// left normal points into the metal for both. Marched rings place stations
/// proportionally along the miter-offset edges, which tiles bands exactly
/// and reproduces the true inward offset at convex corners.
fn ring_stations(ring: &Polygon, spacing: f64) -> RingStations {
    let mut verts: Vec<[f64; 2]> = Vec::with_capacity(ring.vertices.len());
    for &v in &ring.vertices {
        if verts
            .last()
            .map_or(true, |l: &[f64; 2]| (l[0] - v[0]).abs() > 1e-12 || (l[1] - v[1]).abs() > 1e-12)
        {
            verts.push(v);
        }
    }
    if verts.len() > 1 {
        let first = verts[0];
        let last = *verts.last().unwrap();
        if (first[0] - last[0]).abs() < 1e-12 && (first[1] - last[1]).abs() < 1e-12 {
            verts.pop();
        }
    }
    let n = verts.len();
    let mut miter = Vec::with_capacity(n);
    let mut is_corner = Vec::with_capacity(n);
    for j in 0..n {
        let prev = verts[(j + n - 1) % n];
        let cur = verts[j];
        let next = verts[(j + 1) % n];
        let e0 = unit([cur[0] - prev[0], cur[1] - prev[1]]);
        let e1 = unit([next[0] - cur[0], next[1] - cur[1]]);
        // Left normal of travel points into the metal.
        let n0 = [-e0[1], e0[0]];
        let n1 = [-e1[1], e1[0]];
        let dot = n0[0] * n1[0] + n0[1] * n1[1];
        let denom = 1.0 + dot;
        let dir = if denom > 0.05 {
            [(n0[0] + n1[0]) / denom, (n0[1] + n1[1]) / denom]
        } else {
            // Near-reversal: fall back to the bisector; tiling stays exact,
            // only the offset distance is approximate at the cusp.
            unit([n0[0] + n1[0], n0[1] + n1[1]])
        };
        miter.push(dir);
        is_corner.push(e0[0] * e1[0] + e0[1] * e1[1] < (25.0_f64).to_radians().cos());
    }
    let mut points = Vec::new();
    let mut place = Vec::new();
    let mut corner = Vec::new();
    for e in 0..n {
        let a = verts[e];
        let b = verts[(e + 1) % n];
        let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
        let pieces = (len / spacing).ceil().max(1.0) as usize;
        for k in 0..pieces {
            let t = k as f64 / pieces as f64;
            points.push([a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]);
            place.push((e, t));
            corner.push(k == 0 && is_corner[e]);
        }
    }
    RingStations {
        verts,
        miter,
        points,
        place,
        corner,
    }
}

fn unit(v: [f64; 2]) -> [f64; 2] {
    let l = (v[0] * v[0] + v[1] * v[1]).sqrt();
    if l < 1e-12 {
        [0.0, 0.0]
    } else {
        [v[0] / l, v[1] / l]
    }
}

/// Offset vertices by the miter, then place stations proportionally along
/// the shrunk edges.
fn marched_ring(st: &RingStations, depth: f64) -> Vec<[f64; 2]> {
    let n = st.verts.len();
    let offset: Vec<[f64; 2]> = (0..n)
        .map(|j| {
            [
                st.verts[j][0] + depth * st.miter[j][0],
                st.verts[j][1] + depth * st.miter[j][1],
            ]
        })
        .collect();
    st.place
        .iter()
        .map(|&(e, t)| {
            let a = offset[e];
            let b = offset[(e + 1) % n];
            [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
        })
        .collect()
}

/// Largest band count whose marched ring remains a valid loop: no offset
/// edge reverses and the enclosed area keeps moving the right way.
fn valid_band_count(st: &RingStations, cum_depths: &[f64]) -> usize {
    let n = st.verts.len();
    let base = Polygon::new(st.verts.clone()).signed_area();
    if base == 0.0 {
        return 0;
    }
    let mut prev_area = base.abs();
    let mut ok = 0;
    for (k, &d) in cum_depths.iter().enumerate() {
        let offset: Vec<[f64; 2]> = (0..n)
            .map(|j| {
                [
                    st.verts[j][0] + d * st.miter[j][0],
                    st.verts[j][1] + d * st.miter[j][1],
                ]
            })
            .collect();
        let mut reversed = false;
        for j in 0..n {
            let a = st.verts[j];
            let b = st.verts[(j + 1) % n];
            let oa = offset[j];
            let ob = offset[(j + 1) % n];
            if (b[0] - a[0]) * (ob[0] - oa[0]) + (b[1] - a[1]) * (ob[1] - oa[1]) <= 0.0 {
                reversed = true;
                break;
            }
        }
        if reversed {
            break;
        }
        let ring = Polygon::new(offset);
        let a = ring.signed_area();
        if a.signum() != base.signum() {
            break;
        }
        let inward_is_shrink = base > 0.0;
        let shrinking = a.abs() < prev_area * (1.0 + 1e-9);
        let growing = a.abs() > prev_area * (1.0 - 1e-9);
        if (inward_is_shrink && !shrinking) || (!inward_is_shrink && !growing) {
            break;
        }
        prev_area = a.abs();
        ok = k + 1;
    }
    ok
}

/// Emit strip panels for one ring; returns the innermost marched ring.
fn emit_band_panels(
    st: &RingStations,
    widths: &[f64],
    spec: &RegionMeshSpec,
    conductor: usize,
    panels: &mut Vec<Panel>,
) -> Result<(Vec<[f64; 2]>, f64)> {
    let m = st.points.len();
    if m < 3 {
        return Err(CoreError::Meshing("ring with fewer than 3 stations".into()));
    }
    let mut cum = vec![0.0];
    for w in widths {
        cum.push(cum.last().unwrap() + w);
    }
    let usable = valid_band_count(st, &cum[1..]);
    if usable < widths.len() && cum[usable] < spec.x0 - 1e-9 {
        return Err(CoreError::Meshing(format!(
            "edge banding collapses at depth {:.3} µm, before the region-partition scale",
            cum[usable]
        )));
    }
    let base_spacing = strip_length(widths.first().copied().unwrap_or(spec.target), spec);
    let mut outer_rail = st.points.clone();
    for k in 0..usable {
        let inner_rail = marched_ring(st, cum[k + 1]);
        let group = (strip_length(widths[k], spec) / base_spacing)
            .round()
            .max(1.0) as usize;
        let mut j = 0;
        while j < m {
            // Run of up to `group` segments, broken at sharp corners.
            let mut end = j + 1;
            while end - j < group && end < m && !st.corner[end % m] {
                end += 1;
            }
            let idx: Vec<usize> = (j..=end).map(|q| q % m).collect();
            let mut poly_pts: Vec<[f64; 2]> = idx.iter().map(|&q| outer_rail[q]).collect();
            poly_pts.extend(idx.iter().rev().map(|&q| inner_rail[q]));
            let quad = Polygon::new(poly_pts);
            let area = quad.area();
            if area > 1e-12 {
                let centroid = quad.centroid();
                let chord = [
                    outer_rail[idx[idx.len() - 1]][0] - outer_rail[idx[0]][0],
                    outer_rail[idx[idx.len() - 1]][1] - outer_rail[idx[0]][1],
                ];
                let rail_len: f64 = idx
                    .windows(2)
                    .map(|w| {
                        let a = outer_rail[w[0]];
                        let b = outer_rail[w[1]];
                        ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt()
                    })
                    .sum();
                let mut panel = Panel::equivalent_rect(
                    centroid,
                    area,
                    chord,
                    rail_len,
                    conductor,
                    [cum[k], cum[k + 1]],
                );
                panel.clamp_aspect(spec.max_aspect);
                panels.push(panel);
            }
            j = end;
        }
        outer_rail = inner_rail;
    }
    Ok((outer_rail, cum[usable]))
}

fn strip_length(width: f64, spec: &RegionMeshSpec) -> f64 {
    (spec.max_aspect * width).min(spec.length_cap)
}

/// Mesh one region (strips + clipped core grid) into `panels`.
pub fn mesh_region(
    region: &Region,
    conductor: usize,
    spec: &RegionMeshSpec,
    panels: &mut Vec<Panel>,
) -> Result<()> {
    let start = panels.len();
    let mut core_outer: Option<Vec<[f64; 2]>> = None;
    let mut core_holes: Vec<Vec<[f64; 2]>> = Vec::new();
    let mut min_band_depth = f64::INFINITY;

    for (ri, ring) in region.rings().enumerate() {
        let edge_band = if ri == 0 { spec.outer_band } else { spec.hole_band };
        let widths = band_widths(edge_band, spec.x0, spec.target);
        if widths.is_empty() {
            let rail = ring.vertices.clone();
            min_band_depth = 0.0;
            if ri == 0 {
                core_outer = Some(rail);
            } else {
                core_holes.push(rail);
            }
            continue;
        }
        let spacing = strip_length(widths[0], spec);
        let st = ring_stations(ring, spacing);
        let (inner, reached) = emit_band_panels(&st, &widths, spec, conductor, panels)?;
        min_band_depth = min_band_depth.min(reached);
        if ri == 0 {
            core_outer = Some(inner);
        } else {
            core_holes.push(inner);
        }
    }

    let core_region = Region {
        outer: Polygon::new(core_outer.ok_or_else(|| CoreError::Meshing("empty region".into()))?),
        holes: core_holes.into_iter().map(Polygon::new).collect(),
    };
    let core_depth = if min_band_depth.is_finite() {
        min_band_depth
    } else {
        0.0
    };

    if core_region.outer.signed_area() > 0.0 {
        let (lo, hi) = core_region.bounding_box();
        let t = spec.target;
        // Grid lines at global multiples of the cell size, so mirror-
        // symmetric conductors get mirror-symmetric core meshes.
        let gx0 = (lo[0] / t).floor() * t;
        let gy0 = (lo[1] / t).floor() * t;
        let nx = (((hi[0] - gx0) / t).ceil() as usize).max(1);
        let ny = (((hi[1] - gy0) / t).ceil() as usize).max(1);
        let cell_area = t * t;
        for iy in 0..ny {
            for ix in 0..nx {
                let clo = [gx0 + ix as f64 * t, gy0 + iy as f64 * t];
                let chi = [clo[0] + t, clo[1] + t];
                let (area, centroid) = cell_region_moments(&core_region, clo, chi);
                if area < 1e-10 {
                    continue;
                }
                if area >= cell_area * (1.0 - 1e-9) {
                    panels.push(Panel::axis_aligned(
                        clo,
                        chi,
                        conductor,
                        [core_depth, DEPTH_UNBOUNDED],
                    ));
                } else {
                    panels.push(Panel::equivalent_square(
                        centroid,
                        area,
                        conductor,
                        [core_depth, DEPTH_UNBOUNDED],
                    ));
                }
            }
        }
    }

    // Tiling must reproduce the region area.
    let meshed: f64 = panels[start..].iter().map(|p| p.area).sum();
    let want = region.area();
    if (meshed - want).abs() > 1e-3 * want {
        return Err(CoreError::Meshing(format!(
            "panel areas sum to {meshed:.4} µm² for a region of {want:.4} µm² \
             (mismatch {:.3}%)",
            100.0 * (meshed - want).abs() / want
        )));
    }
    Ok(())
}

/// Discretized conductor surfaces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PanelMesh {
    pub panels: Vec<Panel>,
    pub refinement_level: u32,
    pub n_conductors: usize,
}

impl PanelMesh {
    pub fn len(&self) -> usize {
        self.panels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.panels.is_empty()
    }

    pub fn conductor_area(&self, conductor: usize) -> f64 {
        self.panels
            .iter()
            .filter(|p| p.conductor == conductor)
            .map(|p| p.area)
            .sum()
    }

    /// JSON dump (centroid, area, conductor) for debugging and exchange.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mesh: PanelMesh = serde_json::from_str(text)?;
        if mesh.panels.iter().any(|p| {
            !(p.area.is_finite() && p.area >= 0.0)
                || !p.centroid.iter().all(|c| c.is_finite())
                || p.conductor >= mesh.n_conductors.max(1)
        }) {
            return Err(CoreError::Serde("inconsistent panel mesh".into()));
        }
        Ok(mesh)
    }
}

/// Mesh a set of conductor regions with uniform settings (an `edge_band` at
/// or beyond `target_panel_size` disables edge banding).
pub fn mesh_conductors(
    conductors: &[(Region, usize)],
    target_panel_size: f64,
    edge_band_size: f64,
) -> Result<PanelMesh> {
    if !(target_panel_size > 0.0) {
        return Err(CoreError::Meshing("target panel size must be positive".into()));
    }
    let spec = RegionMeshSpec::uniform(target_panel_size, edge_band_size.max(1e-6));
    let mut panels = Vec::new();
    let mut max_id = 0;
    for (region, id) in conductors {
        if region.outer.len() < 3 || region.outer.area() <= 0.0 {
            return Err(CoreError::Meshing("degenerate conductor polygon".into()));
        }
        mesh_region(region, *id, &spec, &mut panels)?;
        max_id = max_id.max(*id);
    }
    Ok(PanelMesh {
        panels,
        refinement_level: 0,
        n_conductors: max_id + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn band_width_schedules() {
        assert_eq!(band_widths(1.0, 1.0, 56.0), vec![1.0, 2.0, 4.0, 8.0, 16.0]);
        assert_eq!(
            band_widths(0.5, 1.0, 40.0),
            vec![0.5, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0]
        );
        assert_eq!(
            band_widths(0.25, 1.0, 32.0),
            vec![0.25, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0]
        );
        // Coarse, unsnapped.
        assert_eq!(band_widths(2.0, 1.0, 96.0), vec![2.0, 4.0, 8.0, 16.0, 32.0]);
        // No banding when the edge band reaches the core size.
        assert!(band_widths(4.0, 1.0, 4.0).is_empty());
        // Cumulative depths hit the partition marks exactly.
        let w = band_widths(0.25, 1.0, 32.0);
        let cum: Vec<f64> = w
            .iter()
            .scan(0.0, |s, &x| {
                *s += x;
                Some(*s)
            })
            .collect();
        assert!(cum.iter().any(|&c| (c - 0.5).abs() < 1e-12));
        assert!(cum.iter().any(|&c| (c - 1.0).abs() < 1e-12));
    }

    #[test]
    fn uniform_square_without_banding_gives_grid() {
        let square = Region::from_polygon(Polygon::rectangle(0.0, 0.0, 10.0, 10.0));
        let mesh = mesh_conductors(&[(square, 0)], 1.0, 1.0).unwrap();
        // 100 uniform panels within ±10 %.
        assert!(
            (90..=110).contains(&mesh.len()),
            "panel count {}",
            mesh.len()
        );
        assert_relative_eq!(mesh.conductor_area(0), 100.0, max_relative = 1e-9);
    }

    #[test]
    fn square_with_edge_band_has_thin_edge_panels() {
        let square = Region::from_polygon(Polygon::rectangle(0.0, 0.0, 10.0, 10.0));
        let mesh = mesh_conductors(&[(square.clone(), 0)], 1.0, 0.25).unwrap();
        assert_relative_eq!(mesh.conductor_area(0), 100.0, max_relative = 1e-6);
        // Panels adjacent to the edge (depth starts at 0) are ≤ 0.25 µm wide.
        let mut found_edge = false;
        for p in &mesh.panels {
            if p.depth[0] == 0.0 && p.depth[1] < 1e29 {
                found_edge = true;
                assert!(
                    2.0 * p.half_u.min(p.half_v) <= 0.25 + 1e-9,
                    "edge strip width {}",
                    2.0 * p.half_u.min(p.half_v)
                );
                assert!((p.depth[1] - 0.25).abs() < 1e-9);
            }
            assert!(p.aspect_ratio() <= 8.0 + 1e-6, "aspect {}", p.aspect_ratio());
        }
        assert!(found_edge);
    }

    #[test]
    fn area_union_matches_region_at_two_levels() {
        // Smooth blob: offset-marched strips plus clipped core must tile it.
        let blob = Polygon::circle(0.0, 0.0, 120.0, 256);
        let region = Region::from_polygon(blob);
        for (target, band) in [(24.0, 1.0), (12.0, 0.5)] {
            let mesh = mesh_conductors(&[(region.clone(), 0)], target, band).unwrap();
            let got = mesh.conductor_area(0);
            let want = region.area();
            assert!(
                (got - want).abs() / want < 1e-3,
                "target {target}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn annulus_meshes_with_hole() {
        let outer = Polygon::circle(0.0, 0.0, 100.0, 192);
        let inner = Polygon::circle(0.0, 0.0, 60.0, 192);
        let region = Region::with_holes(outer, vec![inner]);
        let mesh = mesh_conductors(&[(region.clone(), 0)], 16.0, 1.0).unwrap();
        assert_relative_eq!(
            mesh.conductor_area(0),
            region.area(),
            max_relative = 1e-3
        );
        // No panel centroid may fall inside the hole.
        for p in &mesh.panels {
            let r = (p.centroid[0].powi(2) + p.centroid[1].powi(2)).sqrt();
            assert!(r > 59.0, "panel centroid inside hole at r={r}");
        }
    }

    #[test]
    fn rectangle_with_bands_keeps_exact_area() {
        let rect = Region::from_polygon(Polygon::rectangle(-400.0, 35.0, 400.0, 300.0));
        let mesh = mesh_conductors(&[(rect.clone(), 0)], 48.0, 1.0).unwrap();
        assert_relative_eq!(mesh.conductor_area(0), rect.area(), max_relative = 1e-6);
        // Depth classification: every band boundary at 1.0 must exist.
        assert!(mesh
            .panels
            .iter()
            .any(|p| (p.depth[1] - 1.0).abs() < 1e-9 && p.depth[0] == 0.0));
    }

    #[test]
    fn degenerate_polygon_is_meshing_error() {
        let line = Region::from_polygon(Polygon::new(vec![
            [0.0, 0.0],
            [1.0, 0.0],
            [2.0, 0.0],
        ]));
        assert!(matches!(
            mesh_conductors(&[(line, 0)], 1.0, 0.5),
            Err(CoreError::Meshing(_))
        ));
    }

    #[test]
    fn mesh_json_roundtrip_and_validation() {
        let square = Region::from_polygon(Polygon::rectangle(0.0, 0.0, 10.0, 10.0));
        let mesh = mesh_conductors(&[(square, 0)], 2.0, 0.5).unwrap();
        let json = mesh.to_json().unwrap();
        let back = PanelMesh::from_json(&json).unwrap();
        assert_eq!(back.len(), mesh.len());
        assert!(PanelMesh::from_json("{\"panels\":null}").is_err());
        assert!(PanelMesh::from_json("not json").is_err());
    }
}

/// Named refinement presets for device solves. Index doubles as the
/// `refinement_level` tag on meshes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeshLevel {
    /// Bands unresolved at the partition marks; ladder floor, not for
    /// objectives.
    Draft,
    /// Objective evaluations: interior/perimeter split exact, fast solves.
    Coarse,
    /// Comparison runs: accurate band resolved.
    Medium,
    /// Report quality: finest edge band at x0/4.
    Fine,
}

impl MeshLevel {
    pub fn index(self) -> u32 {
        match self {
            MeshLevel::Draft => 0,
            MeshLevel::Coarse => 1,
            MeshLevel::Medium => 2,
            MeshLevel::Fine => 3,
        }
    }

    pub fn from_index(i: u32) -> Option<Self> {
        match i {
            0 => Some(MeshLevel::Draft),
            1 => Some(MeshLevel::Coarse),
            2 => Some(MeshLevel::Medium),
            3 => Some(MeshLevel::Fine),
            _ => None,
        }
    }

    /// Electrode (pad) strip settings.
    pub fn electrode_spec(self) -> RegionMeshSpec {
        let (band, target) = match self {
            MeshLevel::Draft => (2.0, 72.0),
            MeshLevel::Coarse => (1.0, 56.0),
            MeshLevel::Medium => (0.5, 40.0),
            MeshLevel::Fine => (0.25, 32.0),
        };
        RegionMeshSpec {
            outer_band: band,
            hole_band: band,
            target,
            max_aspect: 8.0,
            length_cap: 24.0,
            x0: 1.0,
        }
    }

    /// Ground-frame strip settings: fine banding only on the opening that
    /// faces the device.
    pub fn ground_spec(self) -> RegionMeshSpec {
        let (hole_band, target) = match self {
            MeshLevel::Draft => (4.0, 96.0),
            MeshLevel::Coarse => (2.0, 72.0),
            MeshLevel::Medium => (1.0, 56.0),
            MeshLevel::Fine => (0.5, 40.0),
        };
        RegionMeshSpec {
            outer_band: 8.0,
            hole_band,
            target,
            max_aspect: 8.0,
            length_cap: 32.0,
            x0: 1.0,
        }
    }

    /// Off-metal (substrate–air) sampling mesh settings.
    pub fn air_spec(self) -> RegionMeshSpec {
        let (band, target) = match self {
            MeshLevel::Draft => (2.0, 96.0),
            MeshLevel::Coarse => (1.0, 72.0),
            MeshLevel::Medium => (0.5, 56.0),
            MeshLevel::Fine => (0.25, 40.0),
        };
        RegionMeshSpec {
            outer_band: band,
            hole_band: band,
            target,
            max_aspect: 8.0,
            length_cap: 24.0,
            x0: 1.0,
        }
    }

    /// Junction-wire lead mesh settings.
    pub fn wire_spec(self) -> crate::solver::wire_mesh::WireMeshSpec {
        use crate::solver::wire_mesh::WireMeshSpec;
        match self {
            MeshLevel::Draft => WireMeshSpec {
                edge_band: 0.25,
                end_dy: 0.5,
                max_dy: 4.0,
                max_aspect: 8.0,
            },
            MeshLevel::Coarse => WireMeshSpec {
                edge_band: 0.25,
                end_dy: 0.25,
                max_dy: 2.0,
                max_aspect: 8.0,
            },
            MeshLevel::Medium => WireMeshSpec::default(),
            MeshLevel::Fine => WireMeshSpec {
                edge_band: 0.0625,
                end_dy: 0.125,
                max_dy: 1.0,
                max_aspect: 8.0,
            },
        }
    }

    /// Stub mesh settings for the wire model.
    pub fn stub_spec(self) -> RegionMeshSpec {
        let (band, target) = match self {
            MeshLevel::Draft => (1.0, 12.0),
            MeshLevel::Coarse => (0.5, 8.0),
            MeshLevel::Medium => (0.5, 8.0),
            MeshLevel::Fine => (0.25, 6.0),
        };
        RegionMeshSpec {
            outer_band: band,
            hole_band: band,
            target,
            max_aspect: 8.0,
            length_cap: 16.0,
            x0: 1.0,
        }
    }
}
