//! Analytic potential integrals for uniformly charged flat panels.
//!
//! Every panel is represented by an equivalent oriented rectangle (exact for
//! grid cells and band strips, area/centroid-matched for clipped cells). For
//! in-plane evaluation points the integral of 1/r over a rectangle has the
//! closed corner form
//!
//!   I = Σ± [ u·asinh(v/|u|) + v·asinh(u/|v|) ]
//!
//! which is finite everywhere, including points inside the panel, so the
//! same expression serves self terms, near field and far field. A monopole
//! shortcut is used far away.

use serde::{Deserialize, Serialize};

/// Depth marker for panels deeper than the banded zone. Finite so panel
/// meshes stay JSON-serializable.
pub const DEPTH_UNBOUNDED: f64 = 1e30;

/// An oriented rectangular panel in the conductor plane. Lengths in µm.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Panel {
    pub centroid: [f64; 2],
    /// Exact panel area (µm²); may differ slightly from 4·half_u·half_v only
    /// through rounding, the constructors keep them consistent.
    pub area: f64,
    /// Unit vector of the local u axis.
    pub axis: [f64; 2],
    pub half_u: f64,
    pub half_v: f64,
    pub conductor: usize,
    /// Distance band from the conductor edge covered by this panel
    /// [min, max] (µm); [`DEPTH_UNBOUNDED`] marks panels deeper than the
    /// banded zone.
    pub depth: [f64; 2],
}

impl Panel {
    /// Axis-aligned rectangle panel.
    pub fn axis_aligned(
        lo: [f64; 2],
        hi: [f64; 2],
        conductor: usize,
        depth: [f64; 2],
    ) -> Self {
        let half_u = 0.5 * (hi[0] - lo[0]);
        let half_v = 0.5 * (hi[1] - lo[1]);
        Self {
            centroid: [0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])],
            area: 4.0 * half_u * half_v,
            axis: [1.0, 0.0],
            half_u,
            half_v,
            conductor,
            depth,
        }
    }

    /// Equivalent oriented rectangle: preserves area and centroid, aligns the
    /// u axis with `axis_hint`, and sets the side ratio from `length_hint`
    /// (the physical extent along the axis).
    pub fn equivalent_rect(
        centroid: [f64; 2],
        area: f64,
        axis_hint: [f64; 2],
        length_hint: f64,
        conductor: usize,
        depth: [f64; 2],
    ) -> Self {
        let norm = (axis_hint[0] * axis_hint[0] + axis_hint[1] * axis_hint[1]).sqrt();
        let axis = if norm > 1e-12 {
            [axis_hint[0] / norm, axis_hint[1] / norm]
        } else {
            [1.0, 0.0]
        };
        let len = if length_hint > 1e-9 {
            length_hint
        } else {
            area.sqrt()
        };
        let half_u = 0.5 * len;
        let half_v = 0.25 * area / half_u.max(1e-12);
        Self {
            centroid,
            area,
            axis,
            half_u,
            half_v,
            conductor,
            depth,
        }
    }

    /// Square panel of the same area centred on the centroid.
    pub fn equivalent_square(
        centroid: [f64; 2],
        area: f64,
        conductor: usize,
        depth: [f64; 2],
    ) -> Self {
        let h = 0.5 * area.sqrt();
        Self {
            centroid,
            area,
            axis: [1.0, 0.0],
            half_u: h,
            half_v: h,
            conductor,
            depth,
        }
    }

    /// Reshape the equivalent rectangle (area preserved) so the aspect ratio
    /// does not exceed `max_aspect`.
    pub fn clamp_aspect(&mut self, max_aspect: f64) {
        if self.aspect_ratio() <= max_aspect {
            return;
        }
        let area = (4.0 * self.half_u * self.half_v).max(1e-30);
        if self.half_u >= self.half_v {
            self.half_u = 0.5 * (area * max_aspect).sqrt();
            self.half_v = 0.25 * area / self.half_u;
        } else {
            self.half_v = 0.5 * (area * max_aspect).sqrt();
            self.half_u = 0.25 * area / self.half_v;
        }
    }

    pub fn diameter(&self) -> f64 {
        2.0 * (self.half_u * self.half_u + self.half_v * self.half_v).sqrt()
    }

    pub fn aspect_ratio(&self) -> f64 {
        let a = self.half_u.max(self.half_v);
        let b = self.half_u.min(self.half_v).max(1e-12);
        a / b
    }

    /// ∫ dA'/|r − r'| over the panel, evaluated at the in-plane point `p`
    /// (µm; result in µm). Exact for the rectangle, with a monopole shortcut
    /// beyond `FAR_FACTOR` diameters.
    pub fn potential_integral(&self, p: [f64; 2]) -> f64 {
        let dx = p[0] - self.centroid[0];
        let dy = p[1] - self.centroid[1];
        let dist2 = dx * dx + dy * dy;
        let diam = self.diameter();
        const FAR_FACTOR: f64 = 8.0;
        if dist2 > (FAR_FACTOR * diam) * (FAR_FACTOR * diam) {
            return self.area / dist2.sqrt();
        }
        // Local frame.
        let xi = dx * self.axis[0] + dy * self.axis[1];
        let eta = -dx * self.axis[1] + dy * self.axis[0];
        let scale = rect_integral(xi, eta, self.half_u, self.half_v);
        // Clipped panels keep the exact area; rescale the rectangle result so
        // the far field stays consistent with the true area.
        let rect_area = 4.0 * self.half_u * self.half_v;
        if (rect_area - self.area).abs() > 1e-12 * self.area.max(1e-12) && rect_area > 0.0 {
            scale * (self.area / rect_area)
        } else {
            scale
        }
    }
}

/// ∫ over [−a,a]×[−b,b] of dA / |(x,y) − (ξ,η)|.
fn rect_integral(xi: f64, eta: f64, a: f64, b: f64) -> f64 {
    let term = |u: f64, v: f64| -> f64 {
        let mut t = 0.0;
        if u != 0.0 {
            t += u * (v / u.abs()).asinh();
        }
        if v != 0.0 {
            t += v * (u / v.abs()).asinh();
        }
        t
    };
    let u1 = -a - xi;
    let u2 = a - xi;
    let v1 = -b - eta;
    let v2 = b - eta;
    term(u2, v2) - term(u1, v2) - term(u2, v1) + term(u1, v1)
}
