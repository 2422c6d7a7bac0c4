//! Collocation method-of-moments electrostatics for zero-thickness planar
//! conductors on a dielectric half-space.
//!
//! Charges live on the vacuum–substrate interface plane, where the kernel is
//! 1/(4π ε₀ ε_eff |r−r′|) with ε_eff = (1 + ε_substrate)/2 — exact for
//! charges confined to the interface of two half-spaces. Point matching at
//! panel centroids with uniform panel densities; the dense system is solved
//! by LU factorization and reused across excitations.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::{EPSILON_0, UM};
use crate::error::{CoreError, Result};
use crate::solver::mesh::PanelMesh;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfSpaceDielectric {
    pub eps_substrate: f64,
}

impl HalfSpaceDielectric {
    pub fn new(eps_substrate: f64) -> Result<Self> {
        if !(eps_substrate >= 1.0) {
            return Err(CoreError::Config(format!(
                "substrate permittivity must be ≥ 1, got {eps_substrate}"
            )));
        }
        Ok(Self { eps_substrate })
    }

    /// Effective kernel permittivity for interface charges.
    pub fn eps_eff(&self) -> f64 {
        0.5 * (1.0 + self.eps_substrate)
    }

    pub fn silicon() -> Self {
        Self { eps_substrate: 11.7 }
    }

    pub fn vacuum() -> Self {
        Self { eps_substrate: 1.0 }
    }
}

/// Surface charge solution for one excitation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChargeSolution {
    /// Charge density per panel, C/m².
    pub sigma: Vec<f64>,
    /// Applied potential per conductor, V.
    pub potentials: Vec<f64>,
    /// Total stored electrostatic energy ½ΣqV, J.
    pub total_energy: f64,
    /// Net charge per conductor, C.
    pub conductor_charge: Vec<f64>,
}

impl ChargeSolution {
    pub fn total_charge(&self) -> f64 {
        self.conductor_charge.iter().sum()
    }
}

/// Maxwell capacitance matrix (F) with its pre-symmetrization diagnostic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapacitanceMatrix {
    pub c: Vec<Vec<f64>>,
    /// max |C_ij − C_ji| / max |C_ij| before symmetrization.
    pub asymmetry: f64,
}

impl CapacitanceMatrix {
    pub fn n(&self) -> usize {
        self.c.len()
    }
}

/// An assembled and factorized MoM system.
pub struct MomSystem {
    pub mesh: PanelMesh,
    pub dielectric: HalfSpaceDielectric,
    lu: nalgebra::linalg::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    /// 1/(4π ε₀ ε_eff) with the µm→m length conversion folded in.
    prefactor: f64,
}

impl MomSystem {
    /// Assemble the potential-coefficient matrix and factorize it.
    pub fn assemble(mesh: PanelMesh, dielectric: HalfSpaceDielectric) -> Result<Self> {
        let n = mesh.len();
        if n == 0 {
            return Err(CoreError::Solver("empty panel mesh".into()));
        }
        check_duplicate_panels(&mesh)?;
        let prefactor = UM / (4.0 * std::f64::consts::PI * EPSILON_0 * dielectric.eps_eff());
        let centroids: Vec<[f64; 2]> = mesh.panels.iter().map(|p| p.centroid).collect();

        let mut data = vec![0.0f64; n * n];
        data.par_chunks_mut(n).enumerate().for_each(|(j, col)| {
            let panel = &mesh.panels[j];
            for (i, out) in col.iter_mut().enumerate() {
                *out = panel.potential_integral(centroids[i]) * prefactor;
            }
        });
        let matrix = DMatrix::from_vec(n, n, data);
        let lu = matrix.lu();
        Ok(Self {
            mesh,
            dielectric,
            lu,
            prefactor,
        })
    }

    pub fn n_conductors(&self) -> usize {
        self.mesh.n_conductors
    }

    /// Solve for the given conductor potentials (V).
    pub fn solve(&self, potentials: &[f64]) -> Result<ChargeSolution> {
        if potentials.len() != self.mesh.n_conductors {
            return Err(CoreError::Solver(format!(
                "expected {} conductor potentials, got {}",
                self.mesh.n_conductors,
                potentials.len()
            )));
        }
        let n = self.mesh.len();
        let rhs = DVector::from_iterator(
            n,
            self.mesh.panels.iter().map(|p| potentials[p.conductor]),
        );
        let sigma = self
            .lu
            .solve(&rhs)
            .ok_or_else(|| CoreError::Solver("singular MoM matrix (LU pivot vanished)".into()))?;
        if sigma.iter().any(|v| !v.is_finite()) {
            return Err(CoreError::Solver(
                "non-finite charge solution (ill-conditioned system)".into(),
            ));
        }
        let mut conductor_charge = vec![0.0; self.mesh.n_conductors];
        let mut energy = 0.0;
        for (p, &s) in self.mesh.panels.iter().zip(sigma.iter()) {
            let q = s * p.area * UM * UM;
            conductor_charge[p.conductor] += q;
            energy += 0.5 * q * potentials[p.conductor];
        }
        Ok(ChargeSolution {
            sigma: sigma.iter().copied().collect(),
            potentials: potentials.to_vec(),
            total_energy: energy,
            conductor_charge,
        })
    }

    /// Column-by-column Maxwell capacitance extraction, symmetrized as
    /// (C + Cᵀ)/2 with the raw asymmetry reported.
    pub fn capacitance_matrix(&self) -> Result<CapacitanceMatrix> {
        let nc = self.mesh.n_conductors;
        let mut raw = vec![vec![0.0; nc]; nc];
        for k in 0..nc {
            let mut pots = vec![0.0; nc];
            pots[k] = 1.0;
            let sol = self.solve(&pots)?;
            for i in 0..nc {
                raw[i][k] = sol.conductor_charge[i];
            }
        }
        let mut cmax: f64 = 0.0;
        let mut asym: f64 = 0.0;
        for i in 0..nc {
            for j in 0..nc {
                cmax = cmax.max(raw[i][j].abs());
                if j > i {
                    asym = asym.max((raw[i][j] - raw[j][i]).abs());
                }
            }
        }
        let asymmetry = if cmax > 0.0 { asym / cmax } else { 0.0 };
        let mut c = vec![vec![0.0; nc]; nc];
        for i in 0..nc {
            for j in 0..nc {
                c[i][j] = 0.5 * (raw[i][j] + raw[j][i]);
            }
        }
        Ok(CapacitanceMatrix { c, asymmetry })
    }

    /// Potential at an in-plane point (V) from a charge solution.
    pub fn potential_at(&self, sigma: &[f64], point: [f64; 2]) -> f64 {
        self.mesh
            .panels
            .iter()
            .zip(sigma.iter())
            .map(|(p, &s)| s * p.potential_integral(point) * self.prefactor)
            .sum()
    }
}

fn check_duplicate_panels(mesh: &PanelMesh) -> Result<()> {
    let mut keys: Vec<(i64, i64, usize)> = mesh
        .panels
        .iter()
        .enumerate()
        .map(|(i, p)| {
            (
                (p.centroid[0] / 1e-7).round() as i64,
                (p.centroid[1] / 1e-7).round() as i64,
                i,
            )
        })
        .collect();
    keys.sort_unstable();
    for w in keys.windows(2) {
        if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
            return Err(CoreError::Solver(format!(
                "duplicate panels at centroid ({:.6}, {:.6}) µm — mesh would be singular",
                mesh.panels[w[0].2].centroid[0],
                mesh.panels[w[0].2].centroid[1]
            )));
        }
    }
    Ok(())
}
