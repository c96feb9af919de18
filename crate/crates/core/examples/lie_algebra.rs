//! Structure constants, exponential and adjoint action of SU(2) and SU(3).
//!
//! Run with `cargo run --example lie_algebra`.

use gaugejet::lie::{adjoint, bracket, exp};
use gaugejet::{AlgebraElement, GroupFamily};

fn main() -> gaugejet::Result<()> {
    let su2 = GroupFamily::SU2;
    let e = su2.basis();
    println!(
        "SU2 basis has {} elements, tr(e_a e_b) = -1/2 delta_ab",
        e.len()
    );
    for a in 0..3 {
        for b in 0..3 {
            let c: Vec<f64> = bracket(&e[a], &e[b])?
                .coords(su2)
                .iter()
                .map(|x| x + 0.0)
                .collect();
            if c.iter().any(|x| x.abs() > 1e-14) {
                println!(
                    "  [e{a}, e{b}] = {:+.1} e0 {:+.1} e1 {:+.1} e2",
                    c[0], c[1], c[2]
                );
            }
        }
    }

    // A rotation by 2pi about any axis is -1 in the fundamental representation.
    let x = AlgebraElement::from_coords(su2, &[0.0, 0.0, 2.0 * std::f64::consts::PI])?;
    let g = exp(&x);
    println!(
        "exp(2 pi e2) = {:.3} (times identity)",
        g.matrix()[(0, 0)].re
    );

    let su3 = GroupFamily::SU3;
    let y = AlgebraElement::from_coords(su3, &[0.3, -0.2, 0.1, 0.4, 0.0, -0.5, 0.2, 0.7])?;
    let z = AlgebraElement::from_coords(su3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])?;
    let h = exp(&y);
    let lhs = adjoint(&h, &bracket(&y, &z)?)?;
    let rhs = bracket(&adjoint(&h, &y)?, &adjoint(&h, &z)?)?;
    println!(
        "SU3: |Ad_g[y, z] - [Ad_g y, Ad_g z]| = {:.2e}",
        lhs.distance(&rhs)
    );
    println!("SU3: group deviation of exp(y) = {:.2e}", h.deviation(su3));
    Ok(())
}
