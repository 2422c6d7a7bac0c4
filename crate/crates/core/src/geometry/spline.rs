//! Clamped B-spline curves evaluated with de Boor's algorithm.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// A point in the device plane, coordinates in µm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlPoint {
    pub x: f64,
    pub y: f64,
}

impl ControlPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// A clamped B-spline curve over the parameter range [0, 1].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SplineCurve {
    control_points: Vec<ControlPoint>,
    degree: usize,
    knots: Vec<f64>,
}

impl SplineCurve {
    /// Build a curve with a clamped uniform knot vector: the first and last
    /// knots repeat `degree + 1` times, interior knots are equally spaced.
    pub fn clamped_uniform(control_points: Vec<ControlPoint>, degree: usize) -> Result<Self> {
        let n = control_points.len();
        if degree == 0 || n < degree + 1 {
            return Err(CoreError::InvalidCurve(format!(
                "need at least {} control points for degree {degree}, got {n}",
                degree + 1
            )));
        }
        if control_points.iter().any(|p| !p.is_finite()) {
            return Err(CoreError::InvalidCurve(
                "non-finite control point coordinate".into(),
            ));
        }
        let interior = n - degree - 1;
        let mut knots = vec![0.0; degree + 1];
        for i in 1..=interior {
            knots.push(i as f64 / (interior + 1) as f64);
        }
        knots.extend(std::iter::repeat(1.0).take(degree + 1));
        Self::with_knots(control_points, degree, knots)
    }

    /// Build a curve from an explicit knot vector, validating the clamped
    /// B-spline invariants.
    pub fn with_knots(
        control_points: Vec<ControlPoint>,
        degree: usize,
        knots: Vec<f64>,
    ) -> Result<Self> {
        let n = control_points.len();
        if knots.len() != n + degree + 1 {
            return Err(CoreError::InvalidCurve(format!(
                "knot count {} != control points {} + degree {} + 1",
                knots.len(),
                n,
                degree
            )));
        }
        if knots.windows(2).any(|w| w[1] < w[0]) {
            return Err(CoreError::InvalidCurve("knots not nondecreasing".into()));
        }
        let first = knots[0];
        let last = *knots.last().unwrap();
        if knots[..=degree].iter().any(|&k| k != first)
            || knots[knots.len() - degree - 1..].iter().any(|&k| k != last)
        {
            return Err(CoreError::InvalidCurve(
                "knot vector is not clamped (end knots must repeat degree+1 times)".into(),
            ));
        }
        if !(last > first) {
            return Err(CoreError::InvalidCurve("empty knot span".into()));
        }
        Ok(Self {
            control_points,
            degree,
            knots,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn control_points(&self) -> &[ControlPoint] {
        &self.control_points
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Greville abscissae: the parameter values at which each control point
    /// has maximal influence. Placing function-graph control points at these
    /// abscissae makes the spline reproduce linear functions exactly.
    pub fn greville_abscissae(&self) -> Vec<f64> {
        let d = self.degree;
        (0..self.control_points.len())
            .map(|i| self.knots[i + 1..=i + d].iter().sum::<f64>() / d as f64)
            .collect()
    }

    /// Index of the knot span containing `t`, handling the clamped right end.
    fn span(&self, t: f64) -> usize {
        let n = self.control_points.len();
        // Valid spans are [knots[s], knots[s+1]) for s in degree..n.
        let last = *self.knots.last().unwrap();
        if t >= last {
            return n - 1;
        }
        let mut s = self.knots.partition_point(|&k| k <= t);
        if s > 0 {
            s -= 1;
        }
        s.clamp(self.degree, n - 1)
    }

    /// Evaluate the curve at parameter `t` in [0, 1] using de Boor's
    /// algorithm. Endpoint interpolation holds at t = 0 and t = 1.
    pub fn evaluate(&self, t: f64) -> Result<ControlPoint> {
        let lo = self.knots[0];
        let hi = *self.knots.last().unwrap();
        if !(t >= lo && t <= hi) {
            return Err(CoreError::InvalidCurve(format!(
                "parameter {t} outside [{lo}, {hi}]"
            )));
        }
        let d = self.degree;
        let s = self.span(t);
        let mut work: Vec<ControlPoint> = (0..=d)
            .map(|j| self.control_points[j + s - d])
            .collect();
        for r in 1..=d {
            for j in (r..=d).rev() {
                let i = j + s - d;
                let denom = self.knots[i + d + 1 - r] - self.knots[i];
                let alpha = if denom == 0.0 {
                    0.0
                } else {
                    (t - self.knots[i]) / denom
                };
                work[j] = ControlPoint::new(
                    (1.0 - alpha) * work[j - 1].x + alpha * work[j].x,
                    (1.0 - alpha) * work[j - 1].y + alpha * work[j].y,
                );
            }
        }
        Ok(work[d])
    }

    /// Adaptively polygonize: subdivide parameter intervals until the chord
    /// midpoint deviates from the curve by less than `chord_tol` (µm).
    /// Returns curve samples from t = 0 to t = 1 inclusive.
    pub fn polygonize(&self, chord_tol: f64) -> Result<Vec<ControlPoint>> {
        let mut out = vec![self.evaluate(0.0)?];
        self.polygonize_rec(0.0, 1.0, chord_tol, 0, &mut out)?;
        Ok(out)
    }

    fn polygonize_rec(
        &self,
        t0: f64,
        t1: f64,
        tol: f64,
        depth: usize,
        out: &mut Vec<ControlPoint>,
    ) -> Result<()> {
        let tm = 0.5 * (t0 + t1);
        let p0 = self.evaluate(t0)?;
        let p1 = self.evaluate(t1)?;
        let pm = self.evaluate(tm)?;
        let chord_mid_x = 0.5 * (p0.x + p1.x);
        let chord_mid_y = 0.5 * (p0.y + p1.y);
        let sagitta = ((pm.x - chord_mid_x).powi(2) + (pm.y - chord_mid_y).powi(2)).sqrt();
        if depth >= 24 || (sagitta <= tol && depth >= 3) {
            out.push(p1);
            return Ok(());
        }
        self.polygonize_rec(t0, tm, tol, depth + 1, out)?;
        self.polygonize_rec(tm, t1, tol, depth + 1, out)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Independent Cox–de Boor basis-function recursion. Kept free of any
    /// de Boor machinery so it can serve as an oracle for `evaluate`.
    fn basis(knots: &[f64], i: usize, d: usize, t: f64) -> f64 {
        if d == 0 {
            // Half-open spans, closed at the clamped right end.
            let last = *knots.last().unwrap();
            let closes = knots[i + 1] == last && t == last;
            return if (t >= knots[i] && t < knots[i + 1]) || closes {
                1.0
            } else {
                0.0
            };
        }
        let mut value = 0.0;
        let left_den = knots[i + d] - knots[i];
        if left_den > 0.0 {
            value += (t - knots[i]) / left_den * basis(knots, i, d - 1, t);
        }
        let right_den = knots[i + d + 1] - knots[i + 1];
        if right_den > 0.0 {
            value += (knots[i + d + 1] - t) / right_den * basis(knots, i + 1, d - 1, t);
        }
        value
    }

    fn oracle_eval(curve: &SplineCurve, t: f64) -> ControlPoint {
        let d = curve.degree();
        let knots = curve.knots();
        let mut x = 0.0;
        let mut y = 0.0;
        for (i, p) in curve.control_points().iter().enumerate() {
            let b = basis(knots, i, d, t);
            x += b * p.x;
            y += b * p.y;
        }
        ControlPoint::new(x, y)
    }

    fn five_point_cubic() -> SplineCurve {
        SplineCurve::clamped_uniform(
            vec![
                ControlPoint::new(0.0, 0.0),
                ControlPoint::new(1.0, 2.0),
                ControlPoint::new(2.0, 0.0),
                ControlPoint::new(3.0, 2.0),
                ControlPoint::new(4.0, 0.0),
            ],
            3,
        )
        .unwrap()
    }

    #[test]
    fn linear_curve_interpolates_midpoint() {
        let c = SplineCurve::clamped_uniform(
            vec![ControlPoint::new(0.0, 0.0), ControlPoint::new(2.0, 0.0)],
            1,
        )
        .unwrap();
        let p = c.evaluate(0.5).unwrap();
        assert_relative_eq!(p.x, 1.0, epsilon = 1e-14);
        assert_relative_eq!(p.y, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn clamped_endpoints_interpolate() {
        let c = five_point_cubic();
        let p0 = c.evaluate(0.0).unwrap();
        let p1 = c.evaluate(1.0).unwrap();
        assert_relative_eq!(p0.x, 0.0, epsilon = 1e-14);
        assert_relative_eq!(p0.y, 0.0, epsilon = 1e-14);
        assert_relative_eq!(p1.x, 4.0, epsilon = 1e-14);
        assert_relative_eq!(p1.y, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn cubic_matches_cox_de_boor_oracle() {
        let c = five_point_cubic();
        for k in 0..=200 {
            let t = k as f64 / 200.0;
            let got = c.evaluate(t).unwrap();
            let want = oracle_eval(&c, t);
            assert_relative_eq!(got.x, want.x, epsilon = 1e-12, max_relative = 1e-12);
            assert_relative_eq!(got.y, want.y, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn cubic_midpoint_frozen_value() {
        // Frozen from the Cox–de Boor oracle: t = 0.5 is the interior knot of
        // [0,0,0,0,0.5,1,1,1,1], where basis = (1/4, 1/2, 1/4) on P1..P3,
        // giving (2.0, 1.0).
        let c = five_point_cubic();
        let p = c.evaluate(0.5).unwrap();
        let want = oracle_eval(&c, 0.5);
        assert_relative_eq!(p.x, want.x, epsilon = 1e-13);
        assert_relative_eq!(p.y, want.y, epsilon = 1e-13);
        assert_relative_eq!(p.x, 2.0, epsilon = 1e-13);
        assert_relative_eq!(p.y, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn rejects_bad_knot_vectors() {
        // Not clamped.
        let e = SplineCurve::with_knots(
            vec![
                ControlPoint::new(0.0, 0.0),
                ControlPoint::new(1.0, 0.0),
                ControlPoint::new(2.0, 0.0),
            ],
            1,
            vec![0.0, 0.25, 0.5, 0.75, 1.0],
        );
        assert!(matches!(e, Err(CoreError::InvalidCurve(_))));
        // Wrong count.
        let e = SplineCurve::with_knots(
            vec![ControlPoint::new(0.0, 0.0), ControlPoint::new(1.0, 0.0)],
            1,
            vec![0.0, 0.0, 1.0],
        );
        assert!(matches!(e, Err(CoreError::InvalidCurve(_))));
        // Decreasing.
        let e = SplineCurve::with_knots(
            vec![ControlPoint::new(0.0, 0.0), ControlPoint::new(1.0, 0.0)],
            1,
            vec![0.0, 0.0, 1.0, 0.5],
        );
        assert!(matches!(e, Err(CoreError::InvalidCurve(_))));
    }

    #[test]
    fn greville_abscissae_cubic_five_points() {
        let c = five_point_cubic();
        let g = c.greville_abscissae();
        let want = [0.0, 1.0 / 6.0, 0.5, 5.0 / 6.0, 1.0];
        for (a, b) in g.iter().zip(want.iter()) {
            assert_relative_eq!(a, b, epsilon = 1e-14);
        }
    }

    #[test]
    fn linear_control_points_at_greville_reproduce_line() {
        // r(t) control values on a line, y at Greville abscissae: the spline
        // must trace the same line.
        let ctrl_y = [0.0, 1.0 / 6.0, 0.5, 5.0 / 6.0, 1.0];
        let pts: Vec<ControlPoint> = ctrl_y
            .iter()
            .map(|&g| ControlPoint::new(0.5 + 0.4 * g * 40.5, g * 40.5))
            .collect();
        let c = SplineCurve::clamped_uniform(pts, 3).unwrap();
        for k in 0..=50 {
            let t = k as f64 / 50.0;
            let p = c.evaluate(t).unwrap();
            assert_relative_eq!(p.y, t * 40.5, epsilon = 1e-9, max_relative = 1e-9);
            assert_relative_eq!(p.x, 0.5 + 0.4 * p.y, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_points() -> impl Strategy<Value = Vec<ControlPoint>> {
            proptest::collection::vec((-100.0..100.0f64, -100.0..100.0f64), 5..9)
                .prop_map(|v| v.into_iter().map(|(x, y)| ControlPoint::new(x, y)).collect())
        }

        proptest! {
            #[test]
            fn affine_invariance(pts in arb_points(), t in 0.0..=1.0f64,
                                 a in -2.0..2.0f64, b in -2.0..2.0f64,
                                 c in -2.0..2.0f64, d in -2.0..2.0f64,
                                 tx in -50.0..50.0f64, ty in -50.0..50.0f64) {
                let curve = SplineCurve::clamped_uniform(pts.clone(), 3).unwrap();
                let p = curve.evaluate(t).unwrap();
                let mapped: Vec<ControlPoint> = pts.iter()
                    .map(|q| ControlPoint::new(a * q.x + b * q.y + tx, c * q.x + d * q.y + ty))
                    .collect();
                let curve2 = SplineCurve::clamped_uniform(mapped, 3).unwrap();
                let q = curve2.evaluate(t).unwrap();
                let want_x = a * p.x + b * p.y + tx;
                let want_y = c * p.x + d * p.y + ty;
                let scale = 1.0 + want_x.abs().max(want_y.abs());
                prop_assert!((q.x - want_x).abs() <= 1e-12 * scale);
                prop_assert!((q.y - want_y).abs() <= 1e-12 * scale);
            }

            #[test]
            fn convex_hull_property(pts in arb_points(), t in 0.0..=1.0f64) {
                let curve = SplineCurve::clamped_uniform(pts.clone(), 3).unwrap();
                let p = curve.evaluate(t).unwrap();
                // Bounding box is a cheap hull superset; the real hull check
                // is the support-function test below.
                for angle_step in 0..16 {
                    let a = std::f64::consts::PI * angle_step as f64 / 8.0;
                    let (s, c) = a.sin_cos();
                    let support = pts.iter().map(|q| c * q.x + s * q.y)
                        .fold(f64::NEG_INFINITY, f64::max);
                    prop_assert!(c * p.x + s * p.y <= support + 1e-9);
                }
            }
        }
    }
}
