//! Minimal coupling: the covariant derivative is equivariant, so globally
//! invariant matter lagrangians become gauge invariant. A lagrangian with
//! an explicit symmetry-breaking term is refused.
//!
//! Run with `cargo run --example minimal_coupling`.

use gaugejet::actions::{act_connection, act_jet_matter};
use gaugejet::lagrangians::{covariant_derivative, minimal_coupling, MatterLagrangianSpec};
use gaugejet::patch::{ConnectionFamily, GaugeFamily, MatterFamily};
use gaugejet::{GroupFamily, GroupSpec, Rep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let spec = GroupSpec::adjoint(GroupFamily::SU2);
    let fam = spec.family;
    let rep = Rep::new(spec)?;
    let x = [0.3, -0.1];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let j = GaugeFamily::random(&mut rng, fam, 2, 3, 0.5)
        .jet2_at(fam, &x)?
        .first_order();
    let a = ConnectionFamily::random(&mut rng, fam, 2, 0.5)
        .jet_at(fam, &x)?
        .a;
    let m = MatterFamily::random(&mut rng, spec.rep_dim, 2, 0.5).jet_at(spec.rep_dim, &x);

    let a2 = act_connection(&j, &a)?;
    let m2 = act_jet_matter(&rep, &j, &m)?;
    let (_, d) = covariant_derivative(&rep, &a, &m)?;
    let (_, d2) = covariant_derivative(&rep, &a2, &m2)?;
    let defect: f64 = d
        .iter()
        .zip(&d2)
        .map(|(v, w)| rep.act_tangent(&j.g, v).map(|gv| gv.distance(w)))
        .sum::<gaugejet::Result<f64>>()?;
    println!("|D_(g.A)(g.phi) - g.D_A phi| = {defect:.2e}");

    for (name, l) in [
        ("free", MatterLagrangianSpec::free()),
        ("phi4", MatterLagrangianSpec::phi4(0.5, 1.0)),
    ] {
        let coupled = minimal_coupling(l, rep.clone())?;
        let before = coupled.density(&a, &m)?;
        let after = coupled.density(&a2, &m2)?;
        println!(
            "{name:>5}: density {before:.6} -> {after:.6}, change {:.1e}",
            (after - before).abs()
        );
    }

    match minimal_coupling(MatterLagrangianSpec::broken(0.3), rep) {
        Ok(_) => println!("broken: accepted (unexpected)"),
        Err(e) => println!("broken: refused ({e})"),
    }
    Ok(())
}
