use qsurf_core::solver::Panel;

fn quad(panel: &Panel, p: [f64; 2], n: usize) -> f64 {
    let mut acc = 0.0;
    let du = 2.0 * panel.half_u / n as f64;
    let dv = 2.0 * panel.half_v / n as f64;
    for i in 0..n {
        for j in 0..n {
            let lu = -panel.half_u + (i as f64 + 0.5) * du;
            let lv = -panel.half_v + (j as f64 + 0.5) * dv;
            let gx = panel.centroid[0] + lu * panel.axis[0] - lv * panel.axis[1];
            let gy = panel.centroid[1] + lu * panel.axis[1] + lv * panel.axis[0];
            let r = ((p[0] - gx).powi(2) + (p[1] - gy).powi(2)).sqrt();
            acc += du * dv / r;
        }
    }
    acc
}

fn main() {
    let p = Panel::axis_aligned([0.0, 0.0], [1.0, 1.0], 0, [0.0, 0.0]);
    let diam = p.diameter();
    println!("diam {diam}");
    for f in [2.0, 4.0, 7.9, 7.99] {
        let pt = [0.5 + f * diam, 0.5];
        let got = p.potential_integral(pt);
        let oracle = quad(&p, pt, 3000);
        let mono = p.area / (f * diam);
        println!("f={f}: got {got:.9}, oracle {oracle:.9}, mono {mono:.9}, rel_err_got {:.2e}, rel_err_mono {:.2e}",
            (got-oracle).abs()/oracle, (mono-oracle).abs()/oracle);
    }
}
