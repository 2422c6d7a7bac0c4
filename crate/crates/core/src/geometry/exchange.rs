//! Geometry exchange format: a JSON document with polygon vertex lists in µm
//! plus enough metadata to rebuild or re-evaluate the shape.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::geometry::pad::{ConductorGeom, DeviceLayout};
use crate::geometry::polygon::{Polygon, Region};
use crate::geometry::wire::WireProfile;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionDoc {
    pub outer: Vec<[f64; 2]>,
    #[serde(default)]
    pub holes: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConductorDoc {
    pub label: String,
    pub regions: Vec<RegionDoc>,
}

/// Top-level geometry document. `kind` tags how the shape was produced;
/// `design_vector` is present for optimizer-generated shapes.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometryDoc {
    pub units: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub design_vector: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub footprint_um: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wire_length_um: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub junction_width_um: Option<f64>,
    pub conductors: Vec<ConductorDoc>,
}

impl GeometryDoc {
    pub fn from_device(dev: &DeviceLayout, kind: &str, design_vector: Option<Vec<f64>>) -> Self {
        Self {
            units: "um".into(),
            kind: kind.into(),
            design_vector,
            footprint_um: Some(dev.footprint),
            wire_length_um: None,
            junction_width_um: None,
            conductors: dev
                .conductors
                .iter()
                .map(|c| ConductorDoc {
                    label: c.label.clone(),
                    regions: c.regions.iter().map(region_to_doc).collect(),
                })
                .collect(),
        }
    }

    pub fn from_wire(profile: &WireProfile, kind: &str, ribbon: &Polygon) -> Self {
        Self {
            units: "um".into(),
            kind: kind.into(),
            design_vector: Some(profile.design_vector.to_vec()),
            footprint_um: None,
            wire_length_um: Some(profile.wire_length),
            junction_width_um: Some(2.0 * profile.junction_half_width),
            conductors: vec![ConductorDoc {
                label: "upper_lead".into(),
                regions: vec![region_to_doc(&Region::from_polygon(ribbon.clone()))],
            }],
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parse and structurally validate a geometry document. Must never panic
    /// on malformed input.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GeometryDoc = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<()> {
        if self.units != "um" {
            return Err(CoreError::Usage(format!(
                "unsupported units '{}' (expected 'um')",
                self.units
            )));
        }
        if self.conductors.is_empty() {
            return Err(CoreError::Usage("geometry has no conductors".into()));
        }
        for c in &self.conductors {
            for r in &c.regions {
                if r.outer.len() < 3 {
                    return Err(CoreError::Usage(format!(
                        "conductor '{}' has a ring with fewer than 3 vertices",
                        c.label
                    )));
                }
                for ring in std::iter::once(&r.outer).chain(r.holes.iter()) {
                    if ring
                        .iter()
                        .any(|p| !(p[0].is_finite() && p[1].is_finite()))
                    {
                        return Err(CoreError::Usage(format!(
                            "conductor '{}' has non-finite vertices",
                            c.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Reconstruct a solver-ready layout from the document.
    pub fn to_device(&self) -> Result<DeviceLayout> {
        self.validate()?;
        let conductors: Vec<ConductorGeom> = self
            .conductors
            .iter()
            .map(|c| ConductorGeom {
                label: c.label.clone(),
                regions: c.regions.iter().map(doc_to_region).collect(),
            })
            .collect();
        let mut dev = DeviceLayout {
            name: self.kind.clone(),
            conductors,
            footprint: self.footprint_um.unwrap_or([0.0, 0.0]),
        };
        if self.footprint_um.is_none() {
            let (lo, hi) = dev.bounding_box();
            dev.footprint = [hi[0] - lo[0], hi[1] - lo[1]];
        }
        Ok(dev)
    }
}

fn region_to_doc(r: &Region) -> RegionDoc {
    RegionDoc {
        outer: r.outer.vertices.clone(),
        holes: r.holes.iter().map(|h| h.vertices.clone()).collect(),
    }
}

fn doc_to_region(d: &RegionDoc) -> Region {
    Region::with_holes(
        Polygon::new(d.outer.clone()),
        d.holes.iter().map(|h| Polygon::new(h.clone())).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::baseline::{make_baseline, BaselineGeometry, BaselineKind, BaselineParams};

    #[test]
    fn device_roundtrip() {
        let BaselineGeometry::Pad(dev) = make_baseline(
            BaselineKind::DoublePad,
            &BaselineParams::default(),
            100.0,
            200.0,
        )
        .unwrap() else {
            panic!()
        };
        let doc = GeometryDoc::from_device(&dev, "double_pad", None);
        let json = doc.to_json().unwrap();
        let parsed = GeometryDoc::from_json(&json).unwrap();
        let dev2 = parsed.to_device().unwrap();
        assert_eq!(dev.conductors.len(), dev2.conductors.len());
        assert_eq!(
            dev.conductors[2].regions[0].holes.len(),
            dev2.conductors[2].regions[0].holes.len()
        );
        assert!((dev.footprint[0] - dev2.footprint[0]).abs() < 1e-12);
    }

    #[test]
    fn malformed_documents_are_rejected_not_panicking() {
        for bad in [
            "",
            "{",
            "null",
            "{\"units\":\"um\"}",
            "{\"units\":\"mm\",\"kind\":\"x\",\"conductors\":[]}",
            "{\"units\":\"um\",\"kind\":\"x\",\"conductors\":[]}",
            "{\"units\":\"um\",\"kind\":\"x\",\"conductors\":[{\"label\":\"a\",\"regions\":[{\"outer\":[[0,0],[1,0]]}]}]}",
            "{\"units\":\"um\",\"kind\":\"x\",\"conductors\":[{\"label\":\"a\",\"regions\":[{\"outer\":[[0,0],[1,0],[null,2]]}]}]}",
        ] {
            assert!(GeometryDoc::from_json(bad).is_err(), "accepted: {bad}");
        }
    }
}
