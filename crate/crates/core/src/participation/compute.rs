//! Participation ratios, edge scaling, the flat-coax wire integral and the
//! derived transmon figures.

use serde::{Deserialize, Serialize};

use crate::constants::{ELEMENTARY_CHARGE, EPSILON_0, FLUX_QUANTUM, PLANCK, UM};
use crate::error::{CoreError, Result};
use crate::participation::materials::{LayerKind, MaterialLayer, MaterialStack};
use crate::solver::kernel::Panel;
use crate::solver::mom::{CapacitanceMatrix, ChargeSolution, HalfSpaceDielectric};

/// Region class of a metal panel by its distance band from the edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionClass {
    /// Deeper than x0 from every edge.
    Interior,
    /// Within [0.5·x0, x0].
    Accurate,
    /// Within [0, 0.5·x0]; never integrated directly, always extrapolated.
    Diverging,
    /// Band straddling the partition marks (coarse meshes only).
    PerimeterUnsplit,
}

pub fn classify_depth(depth: [f64; 2], x0: f64) -> RegionClass {
    let eps = 1e-9;
    if depth[0] >= x0 - eps {
        RegionClass::Interior
    } else if depth[1] <= 0.5 * x0 + eps {
        RegionClass::Diverging
    } else if depth[0] >= 0.5 * x0 - eps && depth[1] <= x0 + eps {
        RegionClass::Accurate
    } else {
        RegionClass::PerimeterUnsplit
    }
}

/// Layer-internal |E|² from the interface field magnitude, per the thin-layer
/// boundary conditions: MS sees the substrate-side normal field scaled by
/// ε_sub/ε_MS, MA the vacuum-side normal field scaled by 1/ε_MA.
pub fn metal_layer_field_sq(e_interface: f64, layer: &MaterialLayer, eps_substrate: f64) -> f64 {
    let scale = match layer.kind {
        LayerKind::MetalSubstrate => eps_substrate / layer.eps_r,
        LayerKind::MetalAir => 1.0 / layer.eps_r,
        LayerKind::SubstrateAir => {
            // On-metal rule does not apply to SA; callers use the tangential
            // path below.
            return 0.0;
        }
    };
    (scale * e_interface) * (scale * e_interface)
}

/// Eq-style surface participation of one region from sampled layer-internal
/// fields: p = (t ε ε₀ / 2W) Σ |E_layer|² dA. `samples` are
/// (|E_layer|², area µm²) pairs.
pub fn surface_participation(
    samples: &[(f64, f64)],
    layer: &MaterialLayer,
    total_energy: f64,
) -> Result<f64> {
    if !(total_energy > 0.0) {
        return Err(CoreError::Solver(format!(
            "participation needs positive stored energy, got {total_energy}"
        )));
    }
    let integral: f64 = samples
        .iter()
        .map(|&(e_sq, area)| e_sq * area * UM * UM)
        .sum();
    Ok(layer.thickness_m() * layer.eps_r * EPSILON_0 * integral / (2.0 * total_energy))
}

/// Per-layer metal-region participation accumulated from a charge solution.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct MetalRegionParticipation {
    pub interior: f64,
    pub accurate: f64,
    /// Direct integral over the diverging band (mesh-limited; reported for
    /// diagnostics, never used in totals).
    pub diverging_raw: f64,
    pub perimeter_unsplit: f64,
}

/// Integrate a metal layer's participation per region class.
pub fn metal_participation(
    panels: &[Panel],
    sol: &ChargeSolution,
    dielectric: &HalfSpaceDielectric,
    layer: &MaterialLayer,
    x0: f64,
) -> Result<MetalRegionParticipation> {
    let mut acc = MetalRegionParticipation::default();
    let denom = EPSILON_0 * (1.0 + dielectric.eps_substrate);
    let w = sol.total_energy;
    if !(w > 0.0) {
        return Err(CoreError::Solver(
            "metal participation needs a nonzero excitation".into(),
        ));
    }
    let pref = layer.thickness_m() * layer.eps_r * EPSILON_0 / (2.0 * w);
    for (p, &s) in panels.iter().zip(sol.sigma.iter()) {
        let e_raw = s / denom;
        let e_sq = metal_layer_field_sq(e_raw.abs(), layer, dielectric.eps_substrate);
        let contrib = pref * e_sq * p.area * UM * UM;
        match classify_depth(p.depth, x0) {
            RegionClass::Interior => acc.interior += contrib,
            RegionClass::Accurate => acc.accurate += contrib,
            RegionClass::Diverging => acc.diverging_raw += contrib,
            RegionClass::PerimeterUnsplit => acc.perimeter_unsplit += contrib,
        }
    }
    Ok(acc)
}

/// Apply the edge scaling factor: the diverging band is F times the accurate
/// band, so the full perimeter is accurate · (1 + F).
pub fn apply_edge_scaling(p_accurate: f64, f_ratio: f64) -> (f64, f64) {
    let diverging = f_ratio * p_accurate;
    (diverging, p_accurate * (1.0 + f_ratio))
}

/// Flat-coax energy of the upper junction wire:
/// U = t ε ∫ E(y)² r(y) [ln(4 r(y)/t) + 5] dy, with t and ε of the
/// dielectric layer and E(y) the layer-internal centerline field.
/// `e_of_y` holds (y µm, |E| V/m) interface samples; the layer scaling is
/// applied internally.
pub fn wire_layer_energy(
    e_of_y: &[(f64, f64)],
    half_width: &dyn Fn(f64) -> f64,
    layer: &MaterialLayer,
    eps_substrate: f64,
) -> Result<f64> {
    if e_of_y.len() < 2 {
        return Err(CoreError::Config("need at least 2 centerline samples".into()));
    }
    let t = layer.thickness_m();
    let scale = match layer.kind {
        LayerKind::MetalSubstrate => eps_substrate / layer.eps_r,
        LayerKind::MetalAir => 1.0 / layer.eps_r,
        LayerKind::SubstrateAir => {
            return Err(CoreError::Usage(
                "wire participation is defined for the MS and MA layers only".into(),
            ))
        }
    };
    let integrand = |y: f64, e_raw: f64| -> Result<f64> {
        let r = half_width(y) * UM;
        let log_arg = 4.0 * r / t;
        if log_arg <= 1.0 {
            return Err(CoreError::InfeasibleGeometry(format!(
                "wire half-width {r:.3e} m too small against layer thickness {t:.3e} m \
                 (flat-coax model invalid)"
            )));
        }
        let e_layer = scale * e_raw;
        Ok(e_layer * e_layer * r * (log_arg.ln() + 5.0))
    };
    let mut acc = 0.0;
    for pair in e_of_y.windows(2) {
        let (y0, e0) = pair[0];
        let (y1, e1) = pair[1];
        acc += 0.5 * (integrand(y0, e0)? + integrand(y1, e1)?) * (y1 - y0) * UM;
    }
    Ok(t * layer.eps_r * EPSILON_0 * acc)
}

/// Wire participation for one layer: both leads by symmetry, normalized by
/// the device mode energy W.
pub fn wire_participation(
    e_of_y: &[(f64, f64)],
    half_width: &dyn Fn(f64) -> f64,
    layer: &MaterialLayer,
    eps_substrate: f64,
    total_energy: f64,
) -> Result<f64> {
    if !(total_energy > 0.0) {
        return Err(CoreError::Solver(format!(
            "wire participation needs positive stored energy, got {total_energy}"
        )));
    }
    let u_upper = wire_layer_energy(e_of_y, half_width, layer, eps_substrate)?;
    Ok(2.0 * u_upper / total_energy)
}

/// TLS-limited quality factor 1/Σ p_i tanδ_i. `None` marks the unbounded
/// (all-lossless) case.
pub fn q_tls(contributions: &[(f64, f64)]) -> Option<f64> {
    let inv: f64 = contributions.iter().map(|&(p, tan)| p * tan).sum();
    if inv > 0.0 {
        Some(1.0 / inv)
    } else {
        None
    }
}

/// T₁ = Q / ω₀₁ in seconds for f01 in Hz.
pub fn t1_from_q(q: f64, f01_hz: f64) -> Result<f64> {
    if !(q > 0.0 && f01_hz > 0.0) {
        return Err(CoreError::Usage(format!(
            "T1 conversion needs positive Q and frequency (got Q={q}, f01={f01_hz})"
        )));
    }
    Ok(q / (2.0 * std::f64::consts::PI * f01_hz))
}

/// Josephson energy E_J/h in GHz from the junction inductance in nH.
pub fn ej_from_inductance(l_j_nh: f64) -> Result<f64> {
    if !(l_j_nh > 0.0) {
        return Err(CoreError::Usage(format!(
            "junction inductance must be positive, got {l_j_nh} nH"
        )));
    }
    let phi0_over_2pi = FLUX_QUANTUM / (2.0 * std::f64::consts::PI);
    let e_j = phi0_over_2pi * phi0_over_2pi / (l_j_nh * 1e-9);
    Ok(e_j / PLANCK / 1e9)
}

/// Invert hf01 = sqrt(8 E_J E_C) − E_C for E_C (GHz in, GHz out), taking the
/// smaller (transmon-branch) root and verifying by back-substitution.
pub fn ec_from_frequency(f01_ghz: f64, ej_ghz: f64) -> Result<f64> {
    if !(f01_ghz > 0.0 && ej_ghz > 0.0) {
        return Err(CoreError::Usage(format!(
            "need positive f01 and E_J (got {f01_ghz}, {ej_ghz})"
        )));
    }
    // E_C² + (2 f01 − 8 E_J) E_C + f01² = 0
    let b = 2.0 * f01_ghz - 8.0 * ej_ghz;
    let disc = b * b - 4.0 * f01_ghz * f01_ghz;
    if disc < 0.0 {
        return Err(CoreError::NoSolution(format!(
            "f01 = {f01_ghz} GHz too high for E_J = {ej_ghz} GHz (negative discriminant)"
        )));
    }
    let ec = 0.5 * (-b - disc.sqrt());
    let forward = (8.0 * ej_ghz * ec).sqrt() - ec;
    if ((forward - f01_ghz) / f01_ghz).abs() > 1e-9 {
        return Err(CoreError::NoSolution(format!(
            "quadratic back-substitution drifted: {forward} vs {f01_ghz} GHz"
        )));
    }
    Ok(ec)
}

/// f01 (GHz) from E_J, E_C (GHz) in the transmon approximation.
pub fn f01_from_energies(ej_ghz: f64, ec_ghz: f64) -> f64 {
    (8.0 * ej_ghz * ec_ghz).sqrt() - ec_ghz
}

/// E_C/h in GHz from the 3-conductor Maxwell matrix (pad1, pad2, ground).
/// The floating transmon's shunt is the pad–pad mutual plus the series path
/// through everything at ground potential (the frame and infinity combined):
/// C_q = c12 + c1g·c2g/(c1g + c2g) + C_junction.
pub fn ec_from_capacitance(
    cm: &CapacitanceMatrix,
    pad_a: usize,
    pad_b: usize,
    c_junction_shunt_f: f64,
) -> Result<f64> {
    let n = cm.n();
    if pad_a >= n || pad_b >= n || pad_a == pad_b {
        return Err(CoreError::Usage(format!(
            "invalid pad indices {pad_a}, {pad_b} for a {n}-conductor matrix"
        )));
    }
    let c12 = -cm.c[pad_a][pad_b];
    // Mutual to the reference node = everything except the other pad:
    // row sum gives the capacitance to infinity, the remaining off-diagonal
    // entries the mutuals to grounded conductors.
    let to_ground = |row: usize, other: usize| -> f64 {
        let row_sum: f64 = cm.c[row].iter().sum();
        let mut c = row_sum.max(0.0);
        for k in 0..n {
            if k != row && k != other {
                c += -cm.c[row][k];
            }
        }
        c
    };
    let c1g = to_ground(pad_a, pad_b);
    let c2g = to_ground(pad_b, pad_a);
    let series = if c1g + c2g > 0.0 {
        c1g * c2g / (c1g + c2g)
    } else if c_junction_shunt_f > 0.0 {
        0.0
    } else if c12 > 0.0 {
        0.0
    } else {
        return Err(CoreError::Solver(
            "degenerate geometry: no capacitive path between the pads".into(),
        ));
    };
    let c_q = c12 + series + c_junction_shunt_f;
    if !(c_q > 0.0) {
        return Err(CoreError::Solver(format!(
            "non-positive shunt capacitance {c_q} F"
        )));
    }
    let e_c = ELEMENTARY_CHARGE * ELEMENTARY_CHARGE / (2.0 * c_q);
    Ok(e_c / PLANCK / 1e9)
}

/// Quadratic charging-energy penalty: β · max(0, E_C − threshold)², in the
/// objective's units per GHz².
pub fn penalty(ec_ghz: f64, beta: f64, ec_threshold_ghz: f64) -> f64 {
    let excess = (ec_ghz - ec_threshold_ghz).max(0.0);
    beta * excess * excess
}
