use qsurf_core::geometry::polygon::{Polygon, Region};
use qsurf_core::geometry::wire::straight_wire;
use qsurf_core::solver::fields::{centerline_field, tangential_field_at};
use qsurf_core::solver::mesh::{mesh_conductors, mesh_region, PanelMesh, RegionMeshSpec};
use qsurf_core::solver::wire_mesh::{mesh_lead, WireMeshSpec};
use qsurf_core::solver::{HalfSpaceDielectric, MomSystem};
use std::time::Instant;

fn main() {
    let g = 4.0;
    let w = 200.0;
    for band in [0.5, 0.25, 0.125] {
        let t0 = Instant::now();
        let a = Region::from_polygon(Polygon::rectangle(0.5 * g, -0.5 * w, 0.5 * w, 0.5 * w));
        let b = Region::from_polygon(Polygon::rectangle(-0.5 * w, -0.5 * w, -0.5 * g, 0.5 * w));
        let mesh = mesh_conductors(&[(a, 0), (b, 1)], 20.0, band).unwrap();
        let n = mesh.len();
        let sys = MomSystem::assemble(mesh, HalfSpaceDielectric::vacuum()).unwrap();
        let sol = sys.solve(&[0.5, -0.5]).unwrap();
        let e = tangential_field_at(&sys, &sol.sigma, [0.0, 0.0]);
        let want = 2.0 / (std::f64::consts::PI * g * 1e-6);
        println!("gap: band={band} n={n} E={:.1} want={want:.1} err={:.2}% ({:.1}s)", e[0].abs(), 100.0*(e[0].abs()-want)/want, t0.elapsed().as_secs_f64());
    }

    for (shw, se) in [(20.0, 20.0), (60.0, 30.0), (120.0, 60.0)] {
        let t0 = Instant::now();
        let profile = straight_wire(1.0, 40.5).unwrap();
        let (y0, y1) = (0.5, profile.wire_length);
        let mut panels = Vec::new();
        let spec = WireMeshSpec::default();
        mesh_lead(&profile, (y0, y1), 0, &spec, &mut panels).unwrap();
        let nl = panels.len();
        for i in 0..nl {
            let mut p = panels[i].clone();
            p.centroid[1] = -p.centroid[1];
            p.axis = [p.axis[0], -p.axis[1]];
            p.conductor = 1;
            panels.push(p);
        }
        let stub_u = Region::from_polygon(Polygon::rectangle(-shw, y1, shw, y1 + se));
        let stub_l = Region::from_polygon(Polygon::rectangle(-shw, -y1 - se, shw, -y1));
        let sspec = RegionMeshSpec::uniform(8.0, 0.5);
        mesh_region(&stub_u, 0, &sspec, &mut panels).unwrap();
        mesh_region(&stub_l, 1, &sspec, &mut panels).unwrap();
        let mesh = PanelMesh { panels, refinement_level: 0, n_conductors: 2 };
        let n = mesh.len();
        let sys = MomSystem::assemble(mesh, HalfSpaceDielectric::silicon()).unwrap();
        let sol = sys.solve(&[0.5, -0.5]).unwrap();
        let s = centerline_field(&sys, &sol, &profile, 0, (y0, y1), 128).unwrap();
        let probe: Vec<String> = s.iter().step_by(16).map(|&(y, e)| format!("{y:.0}:{:.2e}", e)).collect();
        let mid: Vec<f64> = s.iter().filter(|(y, _)| *y > y0 + 0.2*(y1-y0) && *y < y1 - 0.2*(y1-y0)).map(|(_, e)| *e).collect();
        let lo = mid.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = mid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        println!("wire stub={shw}x{se} n={n}: midvar={:.1}% profile={probe:?} ({:.1}s)", 100.0*(hi-lo)/hi, t0.elapsed().as_secs_f64());
    }
}
