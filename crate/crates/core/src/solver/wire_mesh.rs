//! Structured meshing of junction-wire leads.
//!
//! A lead is a ribbon |x| ≤ r(y) over a y span. It is sliced along y with
//! grading toward both ends (tip fields diverge at the facing tips) and each
//! slice is split across x into edge columns plus a center column. Column
//! boundaries are fractions of the local half-width, so slices tile the
//! faceted ribbon outline exactly.

use crate::error::{CoreError, Result};
use crate::geometry::polygon::Polygon;
use crate::geometry::wire::WireProfile;
use crate::solver::kernel::{Panel, DEPTH_UNBOUNDED};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WireMeshSpec {
    /// Finest across-width column at the ribbon sides (µm).
    pub edge_band: f64,
    /// Slice height next to the lead ends (µm).
    pub end_dy: f64,
    /// Maximum slice height mid-span (µm); also capped by aspect ratio.
    pub max_dy: f64,
    pub max_aspect: f64,
}

impl Default for WireMeshSpec {
    fn default() -> Self {
        Self {
            edge_band: 0.125,
            end_dy: 0.25,
            max_dy: 2.0,
            max_aspect: 8.0,
        }
    }
}

/// y slice boundaries graded geometrically from both ends.
pub fn graded_stations(y0: f64, y1: f64, end_dy: f64, max_dy: f64) -> Vec<f64> {
    let span = y1 - y0;
    let mut from_lo = vec![0.0];
    let mut from_hi = vec![0.0];
    let mut d = end_dy;
    while *from_lo.last().unwrap() + d < 0.5 * span {
        from_lo.push(from_lo.last().unwrap() + d);
        d = (d * 2.0).min(max_dy);
    }
    let mut d = end_dy;
    while *from_hi.last().unwrap() + d < 0.5 * span {
        from_hi.push(from_hi.last().unwrap() + d);
        d = (d * 2.0).min(max_dy);
    }
    // Fill the middle with near-max slices.
    let lo_end = y0 + from_lo.last().unwrap();
    let hi_end = y1 - from_hi.last().unwrap();
    let mid = hi_end - lo_end;
    let n_mid = (mid / max_dy).ceil().max(1.0) as usize;
    let mut stations: Vec<f64> = from_lo.iter().map(|d| y0 + d).collect();
    for k in 1..n_mid {
        stations.push(lo_end + mid * k as f64 / n_mid as f64);
    }
    stations.extend(from_hi.iter().rev().map(|d| y1 - d));
    stations.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    stations
}

/// Across-width column boundaries as fractions of the half-width, symmetric,
/// with a center column spanning x = 0: [-1, …, -1+c, 1-c, …, 1].
fn column_fractions(r: f64, edge_band: f64) -> Vec<f64> {
    let mut cums = Vec::new();
    let mut w = edge_band;
    let mut cum = 0.0;
    while cum + w <= 0.6 * r {
        cum += w;
        cums.push(cum / r);
        w *= 2.0;
    }
    let mut out = vec![-1.0];
    for &c in &cums {
        out.push(-1.0 + c);
    }
    for &c in cums.iter().rev() {
        out.push(1.0 - c);
    }
    out.push(1.0);
    out
}

/// Mesh one lead of the wire into `panels`. The span runs from the junction
/// gap to the pad attach. Returns the y stations used, so the ribbon polygon
/// for exports can be built consistently.
pub fn mesh_lead(
    profile: &WireProfile,
    span: (f64, f64),
    conductor: usize,
    spec: &WireMeshSpec,
    panels: &mut Vec<Panel>,
) -> Result<Vec<f64>> {
    let (y0, y1) = span;
    if !(y1 > y0) {
        return Err(CoreError::Meshing(format!("bad lead span [{y0}, {y1}]")));
    }
    let stations = graded_stations(y0, y1, spec.end_dy, spec.max_dy);
    if stations.len() < 2 {
        return Err(CoreError::Meshing("lead span too short to slice".into()));
    }
    let start = panels.len();
    for w in stations.windows(2) {
        let (ya, yb) = (w[0], w[1]);
        let r_mid = profile.half_width(0.5 * (ya + yb));
        if !(r_mid > 0.0) {
            return Err(CoreError::InfeasibleGeometry(
                "wire half-width vanishes inside the span".into(),
            ));
        }
        let fr = column_fractions(r_mid, spec.edge_band);
        let ra = profile.half_width(ya);
        let rb = profile.half_width(yb);
        let dy = yb - ya;
        for pair in fr.windows(2) {
            let (f0, f1) = (pair[0], pair[1]);
            if f1 - f0 < 1e-12 {
                continue;
            }
            // Aspect control: split tall narrow columns along y.
            let width_mid = (f1 - f0) * r_mid;
            let n_sub = (dy / (spec.max_aspect * width_mid)).ceil().max(1.0) as usize;
            for s in 0..n_sub {
                let t0 = s as f64 / n_sub as f64;
                let t1 = (s + 1) as f64 / n_sub as f64;
                let (sya, syb) = (ya + t0 * dy, ya + t1 * dy);
                let (sra, srb) = (ra + t0 * (rb - ra), ra + t1 * (rb - ra));
                let quad = Polygon::new(vec![
                    [f0 * sra, sya],
                    [f1 * sra, sya],
                    [f1 * srb, syb],
                    [f0 * srb, syb],
                ]);
                let area = quad.area();
                if area <= 1e-14 {
                    continue;
                }
                let edge_dist_lo = (1.0 - f1.abs().max(f0.abs())) * r_mid;
                let mut panel = Panel::equivalent_rect(
                    quad.centroid(),
                    area,
                    [0.0, 1.0],
                    syb - sya,
                    conductor,
                    [edge_dist_lo.max(0.0), DEPTH_UNBOUNDED],
                );
                panel.clamp_aspect(spec.max_aspect);
                panels.push(panel);
            }
        }
    }
    if panels.len() == start {
        return Err(CoreError::Meshing("lead produced no panels".into()));
    }
    Ok(stations)
}

/// The panel under the centerline x = 0 at height y (smallest enclosing
/// panel wins, which picks the innermost refinement).
pub fn centerline_panel(panels: &[Panel], conductor: usize, y: f64) -> Option<usize> {
    let mut best: Option<(f64, usize)> = None;
    for (i, p) in panels.iter().enumerate() {
        if p.conductor != conductor {
            continue;
        }
        let dx = 0.0 - p.centroid[0];
        let dy = y - p.centroid[1];
        let u = dx * p.axis[0] + dy * p.axis[1];
        let v = -dx * p.axis[1] + dy * p.axis[0];
        if u.abs() <= p.half_u + 1e-9 && v.abs() <= p.half_v + 1e-9 {
            match best {
                Some((a, _)) if a <= p.area => {}
                _ => best = Some((p.area, i)),
            }
        }
    }
    best.map(|(_, i)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::wire::{linear_taper_wire, straight_wire};
    use approx::assert_relative_eq;

    #[test]
    fn stations_cover_span_and_are_graded() {
        let st = graded_stations(0.5, 40.5, 0.25, 2.0);
        assert_relative_eq!(st[0], 0.5);
        assert_relative_eq!(*st.last().unwrap(), 40.5);
        assert!(st.windows(2).all(|w| w[1] > w[0]));
        let first = st[1] - st[0];
        assert!(first <= 0.25 + 1e-12);
    }

    #[test]
    fn straight_lead_mesh_area_matches() {
        let w = straight_wire(1.0, 40.0).unwrap();
        let mut panels = Vec::new();
        mesh_lead(&w, (0.5, 40.0), 0, &WireMeshSpec::default(), &mut panels).unwrap();
        let area: f64 = panels.iter().map(|p| p.area).sum();
        assert_relative_eq!(area, 1.0 * 39.5, max_relative = 1e-9);
        for p in &panels {
            assert!(p.aspect_ratio() <= 8.0 + 1e-6);
        }
    }

    #[test]
    fn taper_lead_mesh_area_matches_faceted_outline() {
        let w = linear_taper_wire(1.0, 40.5, 0.4).unwrap();
        let mut panels = Vec::new();
        let st = mesh_lead(&w, (0.5, 40.5), 0, &WireMeshSpec::default(), &mut panels).unwrap();
        let area: f64 = panels.iter().map(|p| p.area).sum();
        // Faceted ribbon area: trapezoids between stations.
        let mut want = 0.0;
        for pair in st.windows(2) {
            want += (w.half_width(pair[0]) + w.half_width(pair[1])) * (pair[1] - pair[0]);
        }
        assert_relative_eq!(area, want, max_relative = 1e-9);
    }

    #[test]
    fn centerline_panel_lookup() {
        let w = straight_wire(1.0, 40.0).unwrap();
        let mut panels = Vec::new();
        mesh_lead(&w, (0.5, 40.0), 3, &WireMeshSpec::default(), &mut panels).unwrap();
        let idx = centerline_panel(&panels, 3, 20.0).expect("panel at midspan");
        let p = &panels[idx];
        assert!(p.centroid[0].abs() < 0.5);
        assert!(centerline_panel(&panels, 1, 20.0).is_none());
        assert!(centerline_panel(&panels, 3, 80.0).is_none());
    }
}
