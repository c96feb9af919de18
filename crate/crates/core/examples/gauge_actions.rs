//! Jet-group actions on matter jets, connection jets and curvature, and the
//! equivariance of the curvature map.
//!
//! Run with `cargo run --example gauge_actions`.

use gaugejet::actions::{act_curvature, act_jet_connection, act_jet_matter};
use gaugejet::jets::curvature;
use gaugejet::patch::{ConnectionFamily, GaugeFamily, MatterFamily};
use gaugejet::{GroupFamily, GroupSpec, Rep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let spec = GroupSpec::fundamental(GroupFamily::SU3);
    let fam = spec.family;
    let rep = Rep::new(spec)?;
    let n = 4;
    let x = [0.2, 0.1, -0.3, 0.05];
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = GaugeFamily::random(&mut rng, fam, n, 3, 0.5).jet2_at(fam, &x)?;
    let h = GaugeFamily::random(&mut rng, fam, n, 3, 0.5).jet2_at(fam, &x)?;
    let jc = ConnectionFamily::random(&mut rng, fam, n, 0.5).jet_at(fam, &x)?;
    let jm = MatterFamily::random(&mut rng, spec.rep_dim, n, 0.5).jet_at(spec.rep_dim, &x);

    let gh = g.mul(&h)?;
    let m1 = act_jet_matter(&rep, &gh.first_order(), &jm)?;
    let m2 = act_jet_matter(
        &rep,
        &g.first_order(),
        &act_jet_matter(&rep, &h.first_order(), &jm)?,
    )?;
    println!(
        "matter jets:     (gh).m - g.(h.m) = {:.2e}",
        m1.distance(&m2)
    );

    let c1 = act_jet_connection(&gh, &jc)?;
    let c2 = act_jet_connection(&g, &act_jet_connection(&h, &jc)?)?;
    println!(
        "connection jets: (gh).A - g.(h.A) = {:.2e}",
        c1.distance(&c2)
    );

    let moved = curvature(&act_jet_connection(&g, &jc)?);
    let conjugated = act_curvature(&g.g, &curvature(&jc))?;
    println!(
        "curvature:       F(g.A) - Ad_g F(A) = {:.2e}",
        moved.distance(&conjugated)
    );
    println!(
        "                 |F(A)| = {:.3}, {} components",
        curvature(&jc).norm(),
        curvature(&jc).num_components()
    );
    Ok(())
}
