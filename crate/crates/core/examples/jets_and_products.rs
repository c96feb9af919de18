//! Second jets of gauge transformations: products, inverses and the
//! Maurer-Cartan relation between `a` and `s`.
//!
//! Run with `cargo run --example jets_and_products`.

use gaugejet::jets::{jet2_inv, jet2_mul, Jet2Gauge};
use gaugejet::lie::bracket;
use gaugejet::patch::GaugeFamily;
use gaugejet::GroupFamily;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let fam = GroupFamily::SU2;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = [0.1, -0.2, 0.3];
    let jet = |rng: &mut ChaCha8Rng| GaugeFamily::random(rng, fam, 3, 3, 0.5).jet2_at(fam, &x);
    let (j, k, l) = (jet(&mut rng)?, jet(&mut rng)?, jet(&mut rng)?);

    let left = jet2_mul(&jet2_mul(&j, &k)?, &l)?;
    let right = jet2_mul(&j, &jet2_mul(&k, &l)?)?;
    println!("associativity defect  {:.2e}", left.distance(&right));
    let unit = Jet2Gauge::unit(2, 3);
    println!(
        "unit defect           {:.2e}",
        jet2_mul(&j, &unit)?.distance(&j)
    );
    println!(
        "inverse defect        {:.2e}",
        jet2_mul(&j, &jet2_inv(&j))?.distance(&unit)
    );

    // da(mu, nu) = s_{mu nu} + 1/2 [a_mu, a_nu]; its antisymmetric part is [a_mu, a_nu].
    let flat = (j.da(0, 1) - j.da(1, 0)) - bracket(&j.a[0], &j.a[1])?;
    println!("Maurer-Cartan defect  {:.2e}", flat.norm());

    let first = j.first_order();
    println!(
        "first-order part: g in SU2 (deviation {:.1e}), {} components of a",
        first.g.deviation(fam),
        first.a.len()
    );
    Ok(())
}
