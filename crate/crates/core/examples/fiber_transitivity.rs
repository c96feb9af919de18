//! Gauging a connection jet to zero at a point. First jets remove the
//! potential; second jets also remove the symmetric part of the derivative,
//! leaving half the curvature.
//!
//! Run with `cargo run --example fiber_transitivity`.

use gaugejet::actions::{
    act_connection, act_jet_connection, gauge_to_zero_jet1, gauge_to_zero_jet2, WitnessJet,
};
use gaugejet::jets::{curvature, split_jet_connection};
use gaugejet::patch::ConnectionFamily;
use gaugejet::GroupFamily;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let fam = GroupFamily::SU2;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let jc = ConnectionFamily::random(&mut rng, fam, 3, 0.5).jet_at(fam, &[0.1, 0.2, 0.3])?;

    let w1 = gauge_to_zero_jet1(&jc.a)?;
    if let WitnessJet::First(j) = &w1.jet {
        let a = act_connection(j, &jc.a)?;
        println!(
            "first jet:  |g.A| = {:.2e}",
            a.iter().map(|x| x.norm()).sum::<f64>()
        );
    }

    let w2 = gauge_to_zero_jet2(&jc)?;
    if let WitnessJet::Second(j) = &w2.jet {
        let moved = act_jet_connection(j, &jc)?;
        let (sym, antisym) = split_jet_connection(&moved);
        let half_f = curvature(&jc).map(|f| f * 0.5);
        println!("second jet: |g.A| + |sym| = {:.2e}", w2.residual);
        println!("            symmetric entries {}", sym.upper().len());
        println!(
            "            |antisym - F/2| = {:.2e}",
            antisym.distance(&half_f)
        );
    }
    Ok(())
}
