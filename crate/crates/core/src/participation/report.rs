//! Participation report: per-layer, per-region values with provenance.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::participation::compute::q_tls;
use crate::participation::materials::MaterialStack;

/// One interface layer of a pad report, values in ppm of the mode energy.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct LayerReport {
    pub interior_ppm: f64,
    pub accurate_ppm: f64,
    /// Extrapolated diverging band: F · accurate.
    pub diverging_scaled_ppm: f64,
    /// accurate · (1 + F).
    pub perimeter_scaled_ppm: f64,
    /// Bands a coarse mesh could not split at the partition marks; folded
    /// into the total unscaled.
    pub perimeter_unsplit_ppm: f64,
    /// Direct integral over the diverging band (mesh-limited diagnostic).
    pub diverging_raw_ppm: f64,
    /// Edge scaling factor used for this layer.
    pub f_ratio: f64,
}

impl LayerReport {
    /// Interior + scaled perimeter (+ any unsplit coarse perimeter).
    pub fn total_ppm(&self) -> f64 {
        self.interior_ppm + self.perimeter_scaled_ppm + self.perimeter_unsplit_ppm
    }
}

/// Junction-wire participation (flat-coax model; MS and MA only).
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct WireReport {
    pub ms_ppm: f64,
    pub ma_ppm: f64,
    /// Samples used along the centerline.
    pub n_samples: usize,
}

/// Electrostatic figures extracted alongside the participation values.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct CircuitFigures {
    pub total_energy_j: f64,
    pub c_shunt_ff: f64,
    pub ec_ghz: f64,
    pub capacitance_asymmetry: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParticipationReport {
    pub geometry: String,
    pub material_preset: String,
    pub mesh_level: u32,
    pub x0_um: f64,
    /// MS, MA, SA pad-layer values.
    pub ms: LayerReport,
    pub ma: LayerReport,
    pub sa: LayerReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wire: Option<WireReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuit: Option<CircuitFigures>,
    pub q_tls: Option<f64>,
    pub t1_us: Option<f64>,
    pub f01_ghz: f64,
    /// FNV-1a hash of the geometry document, hex.
    pub geometry_hash: String,
}

impl ParticipationReport {
    /// Layer totals including the wire contribution where defined.
    pub fn layer_totals_ppm(&self) -> [(String, f64); 3] {
        let wire_ms = self.wire.map_or(0.0, |w| w.ms_ppm);
        let wire_ma = self.wire.map_or(0.0, |w| w.ma_ppm);
        [
            ("MS".into(), self.ms.total_ppm() + wire_ms),
            ("MA".into(), self.ma.total_ppm() + wire_ma),
            ("SA".into(), self.sa.total_ppm()),
        ]
    }

    /// Recompute Q and T1 from the stored participations and a stack's loss
    /// tangents (never cached).
    pub fn refresh_quality(&mut self, stack: &MaterialStack) {
        let totals = self.layer_totals_ppm();
        let q = q_tls(&[
            (totals[0].1 * 1e-6, stack.ms.tan_delta),
            (totals[1].1 * 1e-6, stack.ma.tan_delta),
            (totals[2].1 * 1e-6, stack.sa.tan_delta),
        ]);
        self.q_tls = q;
        self.t1_us = q.map(|q| q / (2.0 * std::f64::consts::PI * self.f01_ghz * 1e9) * 1e6);
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// FNV-1a, adequate for provenance fingerprints.
pub fn fnv1a_hex(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_compose_wire_and_pad() {
        let mut r = ParticipationReport {
            geometry: "test".into(),
            material_preset: "simplified".into(),
            mesh_level: 1,
            x0_um: 1.0,
            ms: LayerReport {
                interior_ppm: 50.0,
                accurate_ppm: 10.0,
                diverging_scaled_ppm: 30.0,
                perimeter_scaled_ppm: 40.0,
                perimeter_unsplit_ppm: 0.0,
                diverging_raw_ppm: 12.0,
                f_ratio: 3.0,
            },
            ma: LayerReport::default(),
            sa: LayerReport::default(),
            wire: Some(WireReport {
                ms_ppm: 7.0,
                ma_ppm: 0.1,
                n_samples: 128,
            }),
            circuit: None,
            q_tls: None,
            t1_us: None,
            f01_ghz: 5.0,
            geometry_hash: fnv1a_hex(b"test"),
        };
        let totals = r.layer_totals_ppm();
        assert!((totals[0].1 - 97.0).abs() < 1e-12);
        r.refresh_quality(&MaterialStack::simplified());
        let q = r.q_tls.unwrap();
        let inv = 97.0e-6 * 1e-3 + 0.1e-6 * 1e-3;
        assert!((q - 1.0 / inv).abs() / q < 1e-12);
        assert!(r.t1_us.unwrap() > 0.0);
    }

    #[test]
    fn report_json_roundtrip() {
        let r = ParticipationReport {
            geometry: "double_pad".into(),
            material_preset: "nb-on-si".into(),
            mesh_level: 2,
            x0_um: 1.0,
            ms: LayerReport::default(),
            ma: LayerReport::default(),
            sa: LayerReport::default(),
            wire: None,
            circuit: Some(CircuitFigures {
                total_energy_j: 1e-15,
                c_shunt_ff: 80.0,
                ec_ghz: 0.24,
                capacitance_asymmetry: 1e-3,
            }),
            q_tls: Some(2.2e6),
            t1_us: Some(70.0),
            f01_ghz: 5.0,
            geometry_hash: "aa".into(),
        };
        let j = r.to_json().unwrap();
        let back = ParticipationReport::from_json(&j).unwrap();
        assert_eq!(back.circuit.unwrap().c_shunt_ff, 80.0);
        assert!(ParticipationReport::from_json("{]").is_err());
    }
}
