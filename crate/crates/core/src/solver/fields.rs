//! Interface field extraction from charge solutions.
//!
//! For charges confined to the interface plane the field magnitude is
//! continuous across it: on metal, E above (vacuum side) and below
//! (substrate side) both equal σ/(ε₀(1+ε_sub)), directed normal. Off metal
//! the in-plane symmetry makes the normal component vanish exactly, so the
//! substrate–air layer only sees the tangential field, which is evaluated by
//! differentiating the analytically integrated potential.

use crate::constants::{EPSILON_0, UM};
use crate::error::{CoreError, Result};
use crate::geometry::wire::WireProfile;
use crate::solver::mom::{ChargeSolution, HalfSpaceDielectric, MomSystem};
use crate::solver::wire_mesh::centerline_panel;
use rayon::prelude::*;

/// Normal field magnitude (V/m) on both faces of the metal at panel `idx`.
pub fn metal_normal_field(
    sol: &ChargeSolution,
    dielectric: &HalfSpaceDielectric,
    idx: usize,
) -> f64 {
    sol.sigma[idx].abs() / (EPSILON_0 * (1.0 + dielectric.eps_substrate))
}

/// In-plane field components (V/m) at an off-metal point, by central
/// differences of the exact panel potentials. The step is small against the
/// finest panel scale; off the charge plane the potential is smooth, so
/// truncation error is negligible at the sample distances used.
pub fn tangential_field_at(sys: &MomSystem, sigma: &[f64], point: [f64; 2]) -> [f64; 2] {
    let h = 0.01; // µm
    let px = [
        sys.potential_at(sigma, [point[0] + h, point[1]]),
        sys.potential_at(sigma, [point[0] - h, point[1]]),
    ];
    let py = [
        sys.potential_at(sigma, [point[0], point[1] + h]),
        sys.potential_at(sigma, [point[0], point[1] - h]),
    ];
    [
        -(px[0] - px[1]) / (2.0 * h * UM),
        -(py[0] - py[1]) / (2.0 * h * UM),
    ]
}

/// Batch version of [`tangential_field_at`].
pub fn tangential_fields_at(
    sys: &MomSystem,
    sigma: &[f64],
    points: &[[f64; 2]],
) -> Vec<[f64; 2]> {
    points
        .par_iter()
        .map(|&p| tangential_field_at(sys, sigma, p))
        .collect()
}

/// Sampled interface fields for one off-metal point: tangential components
/// and the (identically zero) in-plane normal component of the surrogate.
#[derive(Debug, Clone, Copy)]
pub struct OffMetalSample {
    pub tangential: [f64; 2],
    pub normal_substrate_side: f64,
}

pub fn off_metal_sample(sys: &MomSystem, sigma: &[f64], point: [f64; 2]) -> OffMetalSample {
    OffMetalSample {
        tangential: tangential_field_at(sys, sigma, point),
        normal_substrate_side: 0.0,
    }
}

/// Field samples along the wire centerline: |E|(y) on the metal at x = 0,
/// from the local charge density of the panel under each sample point.
pub fn centerline_field(
    sys: &MomSystem,
    sol: &ChargeSolution,
    profile: &WireProfile,
    conductor: usize,
    span: (f64, f64),
    n_samples: usize,
) -> Result<Vec<(f64, f64)>> {
    if n_samples < 50 {
        return Err(CoreError::Config(format!(
            "centerline sampling needs at least 50 points, got {n_samples}"
        )));
    }
    let (y0, y1) = span;
    if !(y1 > y0) {
        return Err(CoreError::Config(format!("bad centerline span [{y0}, {y1}]")));
    }
    let mut out = Vec::with_capacity(n_samples);
    for k in 0..n_samples {
        // Midpoint sampling keeps every point strictly inside the metal span.
        let y = y0 + (y1 - y0) * (k as f64 + 0.5) / n_samples as f64;
        if y > profile.wire_length + 1e-9 {
            return Err(CoreError::InfeasibleGeometry(format!(
                "centerline sample y = {y:.3} µm beyond the wire span"
            )));
        }
        let idx = centerline_panel(&sys.mesh.panels, conductor, y).ok_or_else(|| {
            CoreError::InfeasibleGeometry(format!(
                "no wire metal under centerline sample y = {y:.3} µm"
            ))
        })?;
        out.push((y, metal_normal_field(sol, &sys.dielectric, idx)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::{Polygon, Region};
    use crate::geometry::wire::{straight_wire, wire_regions, WireModelConfig};
    use crate::solver::mesh::{mesh_conductors, mesh_region, PanelMesh, RegionMeshSpec};
    use crate::solver::wire_mesh::{mesh_lead, WireMeshSpec};
    use approx::assert_relative_eq;

    /// Coplanar half-plane analog of the parallel-plate check: two large
    /// plates separated by a small in-plane gap g have a gap-center field of
    /// 2V/(πg) — the closed form that replaces V/d for a single-plane solver.
    #[test]
    fn coplanar_gap_center_field_matches_conformal_map() {
        let g = 8.0; // µm
        let w = 200.0;
        let a = Region::from_polygon(Polygon::rectangle(0.5 * g, -0.5 * w, 0.5 * w, 0.5 * w));
        let b = Region::from_polygon(Polygon::rectangle(-0.5 * w, -0.5 * w, -0.5 * g, 0.5 * w));
        let mesh = mesh_conductors(&[(a, 0), (b, 1)], 20.0, 0.25).unwrap();
        let sys = MomSystem::assemble(mesh, HalfSpaceDielectric::vacuum()).unwrap();
        let sol = sys.solve(&[0.5, -0.5]).unwrap();
        let e = tangential_field_at(&sys, &sol.sigma, [0.0, 0.0]);
        let want = 2.0 * 1.0 / (std::f64::consts::PI * g * UM);
        assert_relative_eq!(e[0].abs(), want, max_relative = 0.02);
        assert!(e[1].abs() < 0.01 * e[0].abs());
    }

    #[test]
    fn zero_excitation_means_zero_fields() {
        let a = Region::from_polygon(Polygon::rectangle(-50.0, 10.0, 50.0, 60.0));
        let mesh = mesh_conductors(&[(a, 0)], 20.0, 5.0).unwrap();
        let sys = MomSystem::assemble(mesh, HalfSpaceDielectric::silicon()).unwrap();
        let sol = sys.solve(&[0.0]).unwrap();
        assert_eq!(sol.total_energy, 0.0);
        let e = tangential_field_at(&sys, &sol.sigma, [80.0, 0.0]);
        assert!(e[0].abs() < 1e-9 && e[1].abs() < 1e-9);
        for i in 0..sys.mesh.len() {
            assert!(metal_normal_field(&sol, &sys.dielectric, i).abs() < 1e-9);
        }
    }

    fn wire_system(profile: &WireProfile) -> (MomSystem, ChargeSolution) {
        let cfg = WireModelConfig::default();
        let (y0, y1) = (0.5 * cfg.junction_gap, profile.wire_length);
        let mut panels = Vec::new();
        let spec = WireMeshSpec::default();
        mesh_lead(profile, (y0, y1), 0, &spec, &mut panels).unwrap();
        let n_leads = panels.len();
        // Mirror for the lower lead.
        for i in 0..n_leads {
            let mut p = panels[i].clone();
            p.centroid[1] = -p.centroid[1];
            p.axis = [p.axis[0], -p.axis[1]];
            p.conductor = 1;
            panels.push(p);
        }
        // Pad stubs from the generic region mesher.
        let (upper, lower) = wire_regions(profile, &cfg, &[y0, y1]);
        let stub_spec = RegionMeshSpec::uniform(4.0, 0.5);
        mesh_region(&upper[1], 0, &stub_spec, &mut panels).unwrap();
        mesh_region(&lower[1], 1, &stub_spec, &mut panels).unwrap();
        let mesh = PanelMesh {
            panels,
            refinement_level: 0,
            n_conductors: 2,
        };
        let sys = MomSystem::assemble(mesh, HalfSpaceDielectric::silicon()).unwrap();
        let sol = sys.solve(&[0.5, -0.5]).unwrap();
        (sys, sol)
    }

    #[test]
    fn straight_wire_centerline_field_decays_from_the_tip() {
        // For collinear tip-to-tip leads the return conductor is the other
        // lead, so E(y) is largest at the junction tip and decays smoothly
        // toward the pad stub — it is not translation invariant. The profile
        // must be finite, tip-dominated, monotone over the midspan within
        // sampling noise, and vary less than a factor of 3 there.
        let w = straight_wire(1.0, 40.5).unwrap();
        let (sys, sol) = wire_system(&w);
        let samples = centerline_field(&sys, &sol, &w, 0, (0.5, 40.5), 128).unwrap();
        assert_eq!(samples.len(), 128);
        let tip = samples[0].1;
        let span = 40.0;
        let mid: Vec<f64> = samples
            .iter()
            .filter(|(y, _)| *y > 0.5 + 0.2 * span && *y < 40.5 - 0.2 * span)
            .map(|(_, e)| *e)
            .collect();
        assert!(mid.len() > 20);
        let lo = mid.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = mid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert!(tip > 2.0 * hi, "tip field {tip} should dominate midspan {hi}");
        assert!(hi / lo < 3.0, "midspan spread {:.2}x", hi / lo);
        // Decay toward the pad: first midspan quartile above the last.
        let q = mid.len() / 4;
        let head: f64 = mid[..q].iter().sum::<f64>() / q as f64;
        let tail: f64 = mid[mid.len() - q..].iter().sum::<f64>() / q as f64;
        assert!(head > tail);
    }

    #[test]
    fn centerline_field_is_sign_invariant() {
        let w = straight_wire(1.0, 30.0).unwrap();
        let (sys, sol) = wire_system(&w);
        let flipped = sys.solve(&[-0.5, 0.5]).unwrap();
        let a = centerline_field(&sys, &sol, &w, 0, (0.5, 30.0), 64).unwrap();
        let b = centerline_field(&sys, &flipped, &w, 0, (0.5, 30.0), 64).unwrap();
        for ((_, ea), (_, eb)) in a.iter().zip(b.iter()) {
            assert_relative_eq!(ea, eb, max_relative = 1e-9);
        }
    }

    #[test]
    fn widening_the_wire_reduces_midspan_field() {
        let narrow = straight_wire(1.0, 30.0).unwrap();
        let wide = straight_wire(4.0, 30.0).unwrap();
        let (sys_n, sol_n) = wire_system(&narrow);
        let (sys_w, sol_w) = wire_system(&wide);
        let mid = |sys: &MomSystem, sol: &ChargeSolution, p: &WireProfile| {
            let s = centerline_field(sys, sol, p, 0, (0.5, 30.0), 64).unwrap();
            s.iter()
                .filter(|(y, _)| (*y - 15.0).abs() < 5.0)
                .map(|(_, e)| *e)
                .sum::<f64>()
        };
        assert!(mid(&sys_w, &sol_w, &wide) < mid(&sys_n, &sol_n, &narrow));
    }

    #[test]
    fn centerline_outside_metal_is_geometry_error() {
        let w = straight_wire(1.0, 30.0).unwrap();
        let (sys, sol) = wire_system(&w);
        let e = centerline_field(&sys, &sol, &w, 0, (0.5, 60.0), 64);
        assert!(matches!(e, Err(CoreError::InfeasibleGeometry(_))));
    }
}
