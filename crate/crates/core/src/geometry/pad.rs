//! Spline capacitor-pad construction.
//!
//! Coordinate convention: the Josephson junction sits at the origin, the
//! junction wire runs along +y/−y, pad 1 lives in the upper half plane and
//! pad 2 is its mirror image across y = 0. A single pad outline is mirror
//! symmetric about the vertical axis x = 0 through its on-axis control
//! points P0 (wire attach) and P4 (top).

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::geometry::polygon::{Polygon, Region};
use crate::geometry::spline::{ControlPoint, SplineCurve};

/// The 8 free pad coordinates: x,y of P1..P3 plus y of P0 and P4 (µm).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PadDesignVector {
    pub p1: [f64; 2],
    pub p2: [f64; 2],
    pub p3: [f64; 2],
    pub p0_y: f64,
    pub p4_y: f64,
}

impl PadDesignVector {
    pub fn from_slice(v: &[f64]) -> Result<Self> {
        if v.len() != 8 {
            return Err(CoreError::Usage(format!(
                "pad design vector needs 8 entries, got {}",
                v.len()
            )));
        }
        Ok(Self {
            p1: [v[0], v[1]],
            p2: [v[2], v[3]],
            p3: [v[4], v[5]],
            p0_y: v[6],
            p4_y: v[7],
        })
    }

    pub fn to_vec(self) -> Vec<f64> {
        vec![
            self.p1[0], self.p1[1], self.p2[0], self.p2[1], self.p3[0], self.p3[1], self.p0_y,
            self.p4_y,
        ]
    }

    /// Control polygon of the right-hand half outline, P0..P4.
    pub fn control_points(&self) -> [ControlPoint; 5] {
        [
            ControlPoint::new(0.0, self.p0_y),
            ControlPoint::new(self.p1[0], self.p1[1]),
            ControlPoint::new(self.p2[0], self.p2[1]),
            ControlPoint::new(self.p3[0], self.p3[1]),
            ControlPoint::new(0.0, self.p4_y),
        ]
    }
}

/// Geometry settings shared by pad construction and validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PadConfig {
    /// Maximum overall footprint (width, height) of the two-pad layout, µm.
    pub footprint_limit: [f64; 2],
    /// Fixed pad-to-ground clearance, µm.
    pub ground_gap: f64,
    /// Ground frame metal width beyond its inner opening, µm.
    pub ground_frame_width: f64,
    /// Chord tolerance for spline polygonization, µm.
    pub chord_tol: f64,
    /// Spline degree for the outline.
    pub degree: usize,
    /// Minimum clearance between the pad outline and the junction plane y=0.
    pub junction_clearance: f64,
}

impl Default for PadConfig {
    fn default() -> Self {
        Self {
            footprint_limit: [800.0, 800.0],
            ground_gap: 100.0,
            ground_frame_width: 200.0,
            chord_tol: 0.5,
            degree: 3,
            junction_clearance: 1.0,
        }
    }
}

/// A validated single-pad outline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PadLayout {
    pub design_vector: PadDesignVector,
    pub ground_gap: f64,
    pub footprint_limit: [f64; 2],
    /// Closed simple polygon, CCW, mirror symmetric about x = 0.
    pub outline: Polygon,
    /// Overall two-pad footprint (width, height), µm.
    pub footprint: [f64; 2],
    /// Junction-wire lead length implied by P0 (JJ to pad attach), µm.
    pub implied_wire_length: f64,
}

/// Construct and validate a pad outline from a design vector.
///
/// The right half runs through P0..P4 as a clamped spline; the left half is
/// the exact mirror, so symmetry holds by construction. Self-intersecting
/// outlines and footprint violations are infeasible-geometry errors so the
/// optimizer can map them onto its sentinel value.
pub fn build_pad_outline(v: &PadDesignVector, config: &PadConfig) -> Result<PadLayout> {
    let ctrl = v.control_points();
    for p in &ctrl {
        if !p.is_finite() {
            return Err(CoreError::InfeasibleGeometry(
                "non-finite control point".into(),
            ));
        }
    }
    let curve = SplineCurve::clamped_uniform(ctrl.to_vec(), config.degree)?;
    let right = curve.polygonize(config.chord_tol)?;

    // Close the loop: up the right side, down the mirrored left side.
    let mut verts: Vec<[f64; 2]> = right.iter().map(|p| [p.x, p.y]).collect();
    for p in right.iter().rev().skip(1).take(right.len().saturating_sub(2)) {
        verts.push([-p.x, p.y]);
    }
    let mut outline = Polygon::new(verts);
    outline.ensure_ccw();

    let (lo, hi) = outline.bounding_box();
    if lo[1] < config.junction_clearance {
        return Err(CoreError::InfeasibleGeometry(format!(
            "outline reaches y = {:.3} µm, below the junction clearance {:.3} µm",
            lo[1], config.junction_clearance
        )));
    }
    let footprint = [
        2.0 * hi[0].max(-lo[0]).max(0.0),
        2.0 * hi[1],
    ];
    if footprint[0] > config.footprint_limit[0] + 1e-9
        || footprint[1] > config.footprint_limit[1] + 1e-9
    {
        return Err(CoreError::InfeasibleGeometry(format!(
            "footprint {:.1} × {:.1} µm exceeds limit {:.0} × {:.0} µm",
            footprint[0], footprint[1], config.footprint_limit[0], config.footprint_limit[1]
        )));
    }
    if !outline.is_simple() {
        return Err(CoreError::InfeasibleGeometry(
            "self-intersecting pad outline".into(),
        ));
    }
    if outline.area() < 25.0 {
        return Err(CoreError::InfeasibleGeometry(format!(
            "degenerate pad outline, area {:.3} µm²",
            outline.area()
        )));
    }

    Ok(PadLayout {
        design_vector: *v,
        ground_gap: config.ground_gap,
        footprint_limit: config.footprint_limit,
        outline,
        footprint,
        implied_wire_length: v.p0_y,
    })
}

/// A solver-ready conductor: one or more non-overlapping regions that share
/// a single electrical potential.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConductorGeom {
    pub label: String,
    pub regions: Vec<Region>,
}

/// The full planar layout handed to the field solver: two pad electrodes at
/// indices 0 and 1, plus the grounded frame at index 2.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeviceLayout {
    pub name: String,
    pub conductors: Vec<ConductorGeom>,
    pub footprint: [f64; 2],
}

impl DeviceLayout {
    pub const PAD_A: usize = 0;
    pub const PAD_B: usize = 1;
    pub const GROUND: usize = 2;

    /// Build the two-pad device: pad 1, its mirror across y = 0, and a
    /// rectangular ground frame whose opening sits `ground_gap` beyond the
    /// pads' bounding box.
    pub fn two_pads(name: &str, pad: &Region, ground_gap: f64, frame_width: f64) -> Self {
        let mirrored = mirror_region_y(pad);
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for r in [pad, &mirrored] {
            let (l, h) = r.bounding_box();
            for k in 0..2 {
                lo[k] = lo[k].min(l[k]);
                hi[k] = hi[k].max(h[k]);
            }
        }
        let ground = ground_frame(lo, hi, ground_gap, frame_width);
        let footprint = [hi[0] - lo[0], hi[1] - lo[1]];
        Self {
            name: name.to_string(),
            conductors: vec![
                ConductorGeom {
                    label: "pad1".into(),
                    regions: vec![pad.clone()],
                },
                ConductorGeom {
                    label: "pad2".into(),
                    regions: vec![mirrored],
                },
                ConductorGeom {
                    label: "ground".into(),
                    regions: vec![ground],
                },
            ],
            footprint,
        }
    }

    /// Arbitrary electrode pair (e.g. the concentric disk + annulus) with the
    /// same rectangular ground frame convention.
    pub fn electrode_pair(
        name: &str,
        a: Vec<Region>,
        b: Vec<Region>,
        ground_gap: f64,
        frame_width: f64,
    ) -> Self {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for r in a.iter().chain(b.iter()) {
            let (l, h) = r.bounding_box();
            for k in 0..2 {
                lo[k] = lo[k].min(l[k]);
                hi[k] = hi[k].max(h[k]);
            }
        }
        let ground = ground_frame(lo, hi, ground_gap, frame_width);
        let footprint = [hi[0] - lo[0], hi[1] - lo[1]];
        Self {
            name: name.to_string(),
            conductors: vec![
                ConductorGeom {
                    label: "pad1".into(),
                    regions: a,
                },
                ConductorGeom {
                    label: "pad2".into(),
                    regions: b,
                },
                ConductorGeom {
                    label: "ground".into(),
                    regions: vec![ground],
                },
            ],
            footprint,
        }
    }

    pub fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for c in &self.conductors {
            for r in &c.regions {
                let (l, h) = r.bounding_box();
                for k in 0..2 {
                    lo[k] = lo[k].min(l[k]);
                    hi[k] = hi[k].max(h[k]);
                }
            }
        }
        (lo, hi)
    }

    /// Opening of the ground frame (the region available to off-metal field
    /// sampling), assuming the last conductor is the frame.
    pub fn ground_opening(&self) -> Option<&Polygon> {
        self.conductors
            .last()
            .and_then(|g| g.regions.first())
            .and_then(|r| r.holes.first())
    }
}

fn ground_frame(lo: [f64; 2], hi: [f64; 2], gap: f64, width: f64) -> Region {
    let inner = Polygon::rectangle(lo[0] - gap, lo[1] - gap, hi[0] + gap, hi[1] + gap);
    let outer = Polygon::rectangle(
        lo[0] - gap - width,
        lo[1] - gap - width,
        hi[0] + gap + width,
        hi[1] + gap + width,
    );
    Region::with_holes(outer, vec![inner])
}

/// Mirror a region across the junction plane y = 0, preserving orientation.
pub fn mirror_region_y(r: &Region) -> Region {
    let flip = |p: &Polygon| {
        let mut v: Vec<[f64; 2]> = p.vertices.iter().map(|q| [q[0], -q[1]]).collect();
        v.reverse();
        Polygon::new(v)
    };
    Region {
        outer: flip(&r.outer),
        holes: r.holes.iter().map(flip).collect(),
    }
}
