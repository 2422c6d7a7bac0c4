//! Local 2D metal-edge problem.
//!
//! Cross-section of a semi-infinite thin metal film (thickness ~0.1 µm) at
//! 1 V lying on a substrate half-plane, with the far boundary grounded. The
//! Laplace solve on a tensor grid graded toward the edge and the film faces
//! yields the per-layer lineal energy densities along the interfaces; the
//! ratio of the diverging band [t_i, 0.5·x0] to the accurate band
//! [0.5·x0, x0] is the scaling factor F_i used to extrapolate perimeter
//! participation.
//!
//! Geometry (µm, edge at x = 0): metal occupies x ≤ 0, 0 ≤ z ≤ t_film;
//! substrate fills z < 0; vacuum above.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::participation::materials::{LayerKind, MaterialStack};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeProblemConfig {
    /// Metal film thickness, µm.
    pub film_thickness: f64,
    /// Region-partition scale x0, µm.
    pub x0: f64,
    /// Domain half-extent, µm.
    pub extent: f64,
    /// Finest grid step at the edge and the film faces, µm.
    pub h0: f64,
    /// Geometric growth of the grid step.
    pub growth: f64,
}

impl Default for EdgeProblemConfig {
    fn default() -> Self {
        Self {
            film_thickness: 0.1,
            x0: 1.0,
            extent: 50.0,
            h0: 7.5e-4,
            growth: 1.30,
        }
    }
}

/// Per-layer band energies and scaling factor.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LayerEdgeResult {
    pub energy_accurate: f64,
    pub energy_diverging: f64,
    pub f_ratio: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeProblemSolution {
    pub film_thickness: f64,
    pub x0: f64,
    pub ms: LayerEdgeResult,
    pub ma: LayerEdgeResult,
    pub sa: LayerEdgeResult,
}

impl EdgeProblemSolution {
    pub fn f_for(&self, kind: LayerKind) -> f64 {
        match kind {
            LayerKind::MetalSubstrate => self.ms.f_ratio,
            LayerKind::MetalAir => self.ma.f_ratio,
            LayerKind::SubstrateAir => self.sa.f_ratio,
        }
    }
}

/// Geometric 1D grid marching away from 0 with step h0·growth^k, capped at
/// `extent`, returning strictly increasing offsets starting at 0.
fn graded_axis(h0: f64, growth: f64, extent: f64) -> Vec<f64> {
    let mut out = vec![0.0];
    let mut h = h0;
    while *out.last().unwrap() < extent {
        let next = (out.last().unwrap() + h).min(extent);
        out.push(next);
        h *= growth;
    }
    out
}

/// Mirror-and-join grids around anchor points to build the full axis.
fn build_x_axis(cfg: &EdgeProblemConfig) -> Vec<f64> {
    let pos = graded_axis(cfg.h0, cfg.growth, cfg.extent);
    let mut xs: Vec<f64> = pos.iter().rev().map(|v| -v).collect();
    xs.extend(pos.iter().skip(1));
    xs
}

fn build_z_axis(cfg: &EdgeProblemConfig) -> Vec<f64> {
    let t = cfg.film_thickness;
    // Below substrate surface, inside film (from both faces), above film.
    let below = graded_axis(cfg.h0, cfg.growth, cfg.extent);
    let above = graded_axis(cfg.h0, cfg.growth, cfg.extent - t);
    let inner = graded_axis(cfg.h0, cfg.growth, 0.5 * t);
    let mut zs: Vec<f64> = below.iter().rev().map(|v| -v).collect();
    for v in inner.iter().skip(1) {
        zs.push(*v);
    }
    for v in inner.iter().rev() {
        let z = t - v;
        if *zs.last().unwrap() < z - 1e-15 {
            zs.push(z);
        }
    }
    for v in above.iter().skip(1) {
        zs.push(t + v);
    }
    zs
}

struct Grid {
    xs: Vec<f64>,
    zs: Vec<f64>,
}

impl Grid {
    fn index(&self, i: usize, j: usize) -> usize {
        j * self.xs.len() + i
    }
}

/// Symmetric banded matrix stored by diagonals: `diag[d][k]` is entry
/// (k, k+d). Cholesky-factorized in place.
struct BandMatrix {
    n: usize,
    bw: usize,
    data: Vec<f64>, // (bw+1) × n, row-major by diagonal
}

impl BandMatrix {
    fn new(n: usize, bw: usize) -> Self {
        Self {
            n,
            bw,
            data: vec![0.0; (bw + 1) * n],
        }
    }

    fn add(&mut self, r: usize, c: usize, v: f64) {
        let (lo, hi) = if r <= c { (r, c) } else { (c, r) };
        let d = hi - lo;
        debug_assert!(d <= self.bw);
        self.data[d * self.n + lo] += v;
    }

    /// In-place banded Cholesky (LLᵀ).
    fn factorize(&mut self) -> Result<()> {
        let n = self.n;
        let bw = self.bw;
        for k in 0..n {
            let mut diag = self.data[k];
            let start = k.saturating_sub(bw);
            for m in start..k {
                let d = k - m;
                let l = self.data[d * n + m];
                diag -= l * l;
            }
            if diag <= 0.0 {
                return Err(CoreError::Solver(format!(
                    "edge-problem matrix not positive definite at row {k}"
                )));
            }
            let diag = diag.sqrt();
            self.data[k] = diag;
            let end = (k + bw).min(n - 1);
            for i in k + 1..=end {
                let mut v = self.data[(i - k) * n + k];
                let start2 = i.saturating_sub(bw);
                for m in start2.max(start)..k {
                    v -= self.data[(k - m) * n + m] * self.data[(i - m) * n + m];
                }
                self.data[(i - k) * n + k] = v / diag;
            }
        }
        Ok(())
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.n;
        let bw = self.bw;
        // Forward: L y = b.
        for i in 0..n {
            let mut v = b[i];
            let start = i.saturating_sub(bw);
            for m in start..i {
                v -= self.data[(i - m) * n + m] * b[m];
            }
            b[i] = v / self.data[i];
        }
        // Backward: Lᵀ x = y.
        for i in (0..n).rev() {
            let mut v = b[i];
            let end = (i + bw).min(n - 1);
            for m in i + 1..=end {
                v -= self.data[(m - i) * n + i] * b[m];
            }
            b[i] = v / self.data[i];
        }
    }
}

struct EdgeField {
    grid: Grid,
    phi: Vec<f64>,
    t: f64,
}

impl EdgeField {
    fn phi_at(&self, i: usize, j: usize) -> f64 {
        self.phi[self.grid.index(i, j)]
    }
}

fn in_metal(x: f64, z: f64, t: f64) -> bool {
    x <= 1e-15 && z >= -1e-15 && z <= t + 1e-15
}

/// Solve the edge Laplace problem for φ on the graded grid.
fn solve_field(cfg: &EdgeProblemConfig, eps_substrate: f64) -> Result<EdgeField> {
    if !(cfg.film_thickness > 0.0 && cfg.x0 > 0.0 && cfg.h0 > 0.0 && cfg.growth > 1.0) {
        return Err(CoreError::Config("invalid edge-problem configuration".into()));
    }
    let grid = Grid {
        xs: build_x_axis(cfg),
        zs: build_z_axis(cfg),
    };
    let (nx, nz) = (grid.xs.len(), grid.zs.len());
    let t = cfg.film_thickness;
    let n_total = nx * nz;

    // Node classification: 0 = unknown, else Dirichlet value.
    let mut fixed: Vec<Option<f64>> = vec![None; n_total];
    for j in 0..nz {
        for i in 0..nx {
            let (x, z) = (grid.xs[i], grid.zs[j]);
            let idx = grid.index(i, j);
            if in_metal(x, z, t) {
                fixed[idx] = Some(1.0);
            } else if i == 0 || i == nx - 1 || j == 0 || j == nz - 1 {
                fixed[idx] = Some(0.0);
            }
        }
    }
    let mut unknown_id = vec![usize::MAX; n_total];
    let mut n_unknown = 0;
    for (idx, f) in fixed.iter().enumerate() {
        if f.is_none() {
            unknown_id[idx] = n_unknown;
            n_unknown += 1;
        }
    }
    if n_unknown == 0 {
        return Err(CoreError::Config("no unknowns in edge problem".into()));
    }

    // Box-integration FVM: coupling through the two cells sharing each face.
    let eps_cell = |_i: usize, j: usize| -> f64 {
        // Cell between x_i..x_{i+1}, z_j..z_{j+1}.
        let zc = 0.5 * (grid.zs[j] + grid.zs[j + 1]);
        if zc < 0.0 {
            eps_substrate
        } else {
            1.0
        }
    };

    let bw = nx; // nodes ordered row-major in x, coupled to ±1 and ±nx
    let mut mat = BandMatrix::new(n_unknown, bw);
    let mut rhs = vec![0.0; n_unknown];

    let mut couple = |a_idx: usize, b_idx: usize, w: f64, mat: &mut BandMatrix, rhs: &mut [f64]| {
        match (fixed[a_idx], fixed[b_idx]) {
            (None, None) => {
                let (ua, ub) = (unknown_id[a_idx], unknown_id[b_idx]);
                mat.add(ua, ua, w);
                mat.add(ub, ub, w);
                mat.add(ua, ub, -w);
            }
            (None, Some(vb)) => {
                let ua = unknown_id[a_idx];
                mat.add(ua, ua, w);
                rhs[ua] += w * vb;
            }
            (Some(va), None) => {
                let ub = unknown_id[b_idx];
                mat.add(ub, ub, w);
                rhs[ub] += w * va;
            }
            (Some(_), Some(_)) => {}
        }
    };

    for j in 0..nz {
        for i in 0..nx {
            let idx = grid.index(i, j);
            // Horizontal face to (i+1, j).
            if i + 1 < nx {
                let dx = grid.xs[i + 1] - grid.xs[i];
                let mut w = 0.0;
                if j > 0 {
                    w += eps_cell(i, j - 1) * 0.5 * (grid.zs[j] - grid.zs[j - 1]) / dx;
                }
                if j + 1 < nz {
                    w += eps_cell(i, j) * 0.5 * (grid.zs[j + 1] - grid.zs[j]) / dx;
                }
                couple(idx, grid.index(i + 1, j), w, &mut mat, &mut rhs);
            }
            // Vertical face to (i, j+1).
            if j + 1 < nz {
                let dz = grid.zs[j + 1] - grid.zs[j];
                let mut w = 0.0;
                if i > 0 {
                    w += eps_cell(i - 1, j) * 0.5 * (grid.xs[i] - grid.xs[i - 1]) / dz;
                }
                if i + 1 < nx {
                    w += eps_cell(i, j) * 0.5 * (grid.xs[i + 1] - grid.xs[i]) / dz;
                }
                couple(idx, grid.index(i, j + 1), w, &mut mat, &mut rhs);
            }
        }
    }

    mat.factorize()?;
    mat.solve(&mut rhs);

    let mut phi = vec![0.0; n_total];
    for idx in 0..n_total {
        phi[idx] = match fixed[idx] {
            Some(v) => v,
            None => rhs[unknown_id[idx]],
        };
    }
    Ok(EdgeField { grid, phi, t })
}

/// Trapezoid integral of f(x) over [a, b] using the graded x stations.
fn band_integral(xs: &[f64], f: &dyn Fn(usize) -> f64, a: f64, b: f64) -> f64 {
    let mut acc = 0.0;
    for w in xs.windows(2).enumerate() {
        let (k, pair) = w;
        let (x0, x1) = (pair[0], pair[1]);
        if x1 <= a || x0 >= b {
            continue;
        }
        let lo = x0.max(a);
        let hi = x1.min(b);
        // Linear interpolation of f within the cell.
        let f0 = f(k);
        let f1 = f(k + 1);
        let t0 = (lo - x0) / (x1 - x0);
        let t1 = (hi - x0) / (x1 - x0);
        let g0 = f0 + (f1 - f0) * t0;
        let g1 = f0 + (f1 - f0) * t1;
        acc += 0.5 * (g0 + g1) * (hi - lo);
    }
    acc
}

/// Solve the edge problem and compute per-layer band energies. The inner
/// cutoff of the diverging band is the layer thickness; bands are integrated
/// along each layer's own interface line.
pub fn solve_edge_problem(
    cfg: &EdgeProblemConfig,
    stack: &MaterialStack,
) -> Result<EdgeProblemSolution> {
    let field = solve_field(cfg, stack.eps_substrate)?;
    let grid = &field.grid;
    let nx = grid.xs.len();
    let t = field.t;

    // Required resolution at the inner cutoff.
    let min_cutoff = stack
        .layers()
        .iter()
        .map(|l| l.thickness_um())
        .fold(f64::INFINITY, f64::min);
    if cfg.h0 > 0.5 * min_cutoff {
        return Err(CoreError::Config(format!(
            "grid step h0 = {} µm cannot resolve the diverging-band cutoff {} µm",
            cfg.h0, min_cutoff
        )));
    }

    // Locate key rows/columns.
    let j_surf = grid
        .zs
        .iter()
        .position(|&z| z.abs() < 1e-12)
        .ok_or_else(|| CoreError::Config("no grid line at z = 0".into()))?;
    let j_below = j_surf - 1;
    let j_top = grid
        .zs
        .iter()
        .position(|&z| (z - t).abs() < 1e-12)
        .ok_or_else(|| CoreError::Config("no grid line at the film top".into()))?;
    let j_above = j_top + 1;
    grid.xs
        .iter()
        .position(|&x| x.abs() < 1e-12)
        .ok_or_else(|| CoreError::Config("no grid line at x = 0".into()))?;

    let dz_below = grid.zs[j_surf] - grid.zs[j_below];
    let dz_above = grid.zs[j_above] - grid.zs[j_top];

    // Lineal energy densities per unit edge length along each interface.
    // MS: substrate-side normal field under the metal (x < 0, lateral
    // distance |x| from the edge).
    let e_ms = |i: usize| -> f64 {
        if grid.xs[i] > 1e-15 {
            return 0.0;
        }
        let e = (1.0 - field.phi_at(i, j_below)) / dz_below;
        e * e
    };
    // MA: vacuum-side normal field on the film top.
    let e_ma = |i: usize| -> f64 {
        if grid.xs[i] > 1e-15 {
            return 0.0;
        }
        let e = (1.0 - field.phi_at(i, j_above)) / dz_above;
        e * e
    };
    // SA: off-metal (x > 0) at z = 0, tangential plus substrate-side normal
    // weighted by the layer boundary conditions.
    let (eps_sa, eps_sub) = (stack.layer(LayerKind::SubstrateAir).eps_r, stack.eps_substrate);
    let e_sa = |i: usize| -> f64 {
        if grid.xs[i] < 1e-15 || i == 0 || i + 1 >= nx {
            return 0.0;
        }
        let et = (field.phi_at(i + 1, j_surf) - field.phi_at(i - 1, j_surf))
            / (grid.xs[i + 1] - grid.xs[i - 1]);
        let en_sub = (field.phi_at(i, j_surf) - field.phi_at(i, j_below)) / dz_below;
        eps_sa * et * et + (eps_sub * eps_sub / eps_sa) * en_sub * en_sub
    };

    let half = 0.5 * cfg.x0;
    let layer_result = |f: &dyn Fn(usize) -> f64, cutoff: f64, on_metal: bool| -> LayerEdgeResult {
        // On-metal layers live at lateral distance s = -x (x ≤ 0), the
        // substrate–air layer at s = +x.
        let integrate = |a: f64, b: f64| -> f64 {
            if on_metal {
                band_integral(&grid.xs, f, -b, -a)
            } else {
                band_integral(&grid.xs, f, a, b)
            }
        };
        let acc = integrate(half, cfg.x0);
        let div = integrate(cutoff, half);
        LayerEdgeResult {
            energy_accurate: acc,
            energy_diverging: div,
            f_ratio: if acc > 0.0 { div / acc } else { f64::NAN },
        }
    };

    let t_ms = stack.layer(LayerKind::MetalSubstrate).thickness_um();
    let t_ma = stack.layer(LayerKind::MetalAir).thickness_um();
    let t_sa = stack.layer(LayerKind::SubstrateAir).thickness_um();

    let ms = layer_result(&e_ms, t_ms, true);
    let ma = layer_result(&e_ma, t_ma, true);
    let sa = layer_result(&e_sa, t_sa, false);

    for (name, r) in [("MS", &ms), ("MA", &ma), ("SA", &sa)] {
        if !(r.f_ratio.is_finite() && r.f_ratio > 0.0) {
            return Err(CoreError::Solver(format!(
                "edge problem produced invalid F_{name} = {}",
                r.f_ratio
            )));
        }
    }

    Ok(EdgeProblemSolution {
        film_thickness: cfg.film_thickness,
        x0: cfg.x0,
        ms,
        ma,
        sa,
    })
}
