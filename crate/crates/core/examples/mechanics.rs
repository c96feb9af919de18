//! One-dimensional base: curvature has no components, the free particle
//! action changes under a time-dependent gauge transformation, and its
//! covariant version does not.
//!
//! Run with `cargo run --example mechanics`.

use gaugejet::actions::{act_connection, act_jet_matter_field};
use gaugejet::jets::curvature;
use gaugejet::lagrangians::{
    free_particle, mechanics_action, minimal_coupling, MatterLagrangianSpec,
};
use gaugejet::patch::families::{sample_connection, sample_gauge, sample_matter};
use gaugejet::patch::{integrate, ConnectionFamily, GaugeFamily, MatterFamily, Patch};
use gaugejet::{GroupFamily, GroupSpec, Rep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let spec = GroupSpec::fundamental(GroupFamily::SU2);
    let fam = spec.family;
    let rep = Rep::new(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let time = Patch::default_for_dim(1)?;
    let interval = time.interior_region(1)?;

    let conn = sample_connection(&time, fam, &ConnectionFamily::random(&mut rng, fam, 1, 0.5))?;
    println!(
        "curvature components for n = 1: {}",
        curvature(conn.jets.at(0)).num_components()
    );

    let curve = sample_matter(
        &time,
        spec.rep_dim,
        &MatterFamily::random(&mut rng, spec.rep_dim, 1, 0.5),
    )?
    .jets;
    let gauge = sample_gauge(&time, fam, &GaugeFamily::random(&mut rng, fam, 1, 3, 0.5))?
        .jet1()
        .field;
    let moved = act_jet_matter_field(&rep, &gauge, &curve)?;

    let s = mechanics_action(free_particle, &curve, &interval)?;
    let s_moved = mechanics_action(free_particle, &moved, &interval)?;
    println!("free particle:  S = {s:.6}, after g(t): {s_moved:.6}");

    let covariant = minimal_coupling(MatterLagrangianSpec::free(), rep)?;
    let a2 = gauge.try_zip_map(&conn.field, |j, a| act_connection(j, a))?;
    let before = conn
        .field
        .try_zip_map(&curve, |a, m| covariant.density(a, m))?;
    let after = a2.try_zip_map(&moved, |a, m| covariant.density(a, m))?;
    let (c, c_moved) = (
        integrate(&before, &interval)?,
        integrate(&after, &interval)?,
    );
    println!(
        "covariantized:  S = {c:.6}, after g(t): {c_moved:.6}, change {:.1e}",
        (c - c_moved).abs()
    );
    Ok(())
}
