//! The conditional-entropy surface and its minimum over the measurement
//! ellipse of a few parameter sets.

use std::f64::consts::PI;

use cq_discord::correlations::{delta_tilde, ellipse_domain, minimize_delta};
use cq_discord::states::CanonicalParams;

fn main() -> cq_discord::Result<()> {
    println!("delta(0, 0) = {}", delta_tilde(0.0, 0.0)?);
    println!("delta(0.7, 0) = {}", delta_tilde(0.7, 0.0)?);
    println!("delta(0, 1) = {:.10}", delta_tilde(0.0, 1.0)?);

    for (s0, s1, phi) in [(1.0, 1.0, PI / 3.0), (1.0, 1.0, 2.0 * PI / 3.0), (0.9, 0.5, 1.1), (0.6, 0.6, PI)] {
        let params = CanonicalParams::new(s0, s1, phi)?;
        let min = minimize_delta(&params);
        match ellipse_domain(&params) {
            Ok(dom) => println!(
                "s0={s0} s1={s1} phi={phi:.4}: A={:.4} B={:.4} C={:.4}, min {:.8} at ({:.6}, {:.6})",
                dom.a, dom.b, dom.c, min.value, min.x, min.y
            ),
            Err(e) => println!("s0={s0} s1={s1} phi={phi:.4}: {e}; segment min {:.8} at ({:.6}, {:.6})", min.value, min.x, min.y),
        }
    }
    Ok(())
}
