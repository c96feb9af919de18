//! Invariant gauge lagrangians factor through the curvature: two connection
//! jets with equal curvature but different symmetric derivatives give the
//! same Yang-Mills density, while a density that also reads the symmetric
//! part tells them apart.
//!
//! Run with `cargo run --example utiyama`.

use gaugejet::jets::Curvature;
use gaugejet::jets::{curvature, JetConnection};
use gaugejet::lagrangians::{
    gauge_density, utiyama_factor, yang_mills_curvature_density, GaugeKind, GaugeLagrangianSpec,
    Metric,
};
use gaugejet::patch::ConnectionFamily;
use gaugejet::{AlgebraElement, GroupFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let fam = GroupFamily::SU3;
    let n = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let jc = ConnectionFamily::random(&mut rng, fam, n, 0.5).jet_at(fam, &[0.0; 3])?;

    // Shift the symmetric part of dA by a random symmetric array.
    let shift: Vec<AlgebraElement> = (0..n * (n + 1) / 2)
        .map(|_| {
            let c: Vec<f64> = (0..fam.algebra_dim())
                .map(|_| rng.random_range(-1.0..1.0))
                .collect();
            AlgebraElement::from_coords(fam, &c)
        })
        .collect::<gaugejet::Result<_>>()?;
    let sym_index = |mu: usize, nu: usize| {
        let (i, j) = (mu.min(nu), mu.max(nu));
        i * n - i * (i + 1) / 2 + j
    };
    let other = JetConnection::from_fn(jc.a.clone(), |mu, nu| {
        jc.da(mu, nu) + &shift[sym_index(mu, nu)]
    })?;
    println!(
        "|F - F'| = {:.2e}",
        curvature(&jc).distance(&curvature(&other))
    );

    let ym = utiyama_factor(
        |f: &Curvature| yang_mills_curvature_density(f, 1.0, Metric::Euclidean),
        fam,
        n,
    )?;
    println!(
        "factored yang_mills: {:.12} vs {:.12}",
        ym.eval(&jc),
        ym.eval(&other)
    );

    let broken = GaugeLagrangianSpec::new(GaugeKind::BrokenGauge, 1.0)?;
    println!(
        "broken_gauge:        {:.12} vs {:.12}",
        gauge_density(&broken, &jc),
        gauge_density(&broken, &other)
    );

    // Reading one matrix entry of F is not conjugation invariant.
    let probe = utiyama_factor(|f: &Curvature| f.get(0, 1).matrix()[(0, 1)].im, fam, n);
    println!(
        "entry-wise density:  {}",
        match probe {
            Ok(_) => "accepted".to_string(),
            Err(e) => format!("refused ({e})"),
        }
    );
    Ok(())
}
