//! Sample an analytic gauge field on a patch, store its second jets in a
//! JGF1 file and read them back.
//!
//! Run with `cargo run --example field_io [PATH]`.

use gaugejet::patch::families::sample_gauge;
use gaugejet::patch::jgf::{load_field, save_field, FieldData, JgfFile};
use gaugejet::patch::{GaugeFamily, Patch};
use gaugejet::{GroupFamily, GroupSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gaugejet::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("gaugejet-example.jgf"));
    let spec = GroupSpec::fundamental(GroupFamily::SU2);
    let patch = Patch::centered(2, 16, 0.05)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let family = GaugeFamily::random(&mut rng, spec.family, 2, 3, 0.5);
    let sample = sample_gauge(&patch, spec.family, &family)?;

    save_field(&path, spec, &FieldData::Jet2Gauge(sample.jets.clone()))?;
    print!("{}", JgfFile::load(&path)?.summary());

    let (header, data) = load_field(&path)?;
    let FieldData::Jet2Gauge(back) = data else {
        unreachable!("stored kind is jet2-gauge")
    };
    let worst = back
        .values()
        .iter()
        .zip(sample.jets.values())
        .map(|(a, b)| a.distance(b))
        .fold(0.0, f64::max);
    println!(
        "{} points, {} entries each, max round-trip difference {worst:.1e}",
        header.points(),
        header.entries_per_point()
    );
    println!("wrote {}", path.display());
    Ok(())
}
