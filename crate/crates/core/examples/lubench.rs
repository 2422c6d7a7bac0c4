use nalgebra::DMatrix;
use std::time::Instant;
fn main() {
    for n in [1000usize, 2000, 4000, 6000] {
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j { 10.0 } else { 1.0 / (1.0 + (i as f64 - j as f64).abs()) }
        });
        let t0 = Instant::now();
        let lu = m.lu();
        let dt = t0.elapsed().as_secs_f64();
        let b = nalgebra::DVector::from_element(n, 1.0);
        let t1 = Instant::now();
        let x = lu.solve(&b).unwrap();
        let dts = t1.elapsed().as_secs_f64();
        let flops = 2.0 * (n as f64).powi(3) / 3.0;
        println!("n={n}: LU {dt:.2}s ({:.2} GFLOP/s), solve {dts:.3}s, x0={:.3}", flops / dt / 1e9, x[0]);
    }
}
