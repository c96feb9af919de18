//! Difference-quotient jets against closed-form jets, with second-order
//! convergence checked on a halving ladder.

use gaugejet::actions::act_jet_matter;
use gaugejet::harness::{ConvergenceKind, ConvergenceStudy};
use gaugejet::jets::{jet1_of, jet2_of, matter_jet_of, Jet1Gauge, Jet2Gauge};
use gaugejet::patch::families::{sample_gauge, sample_matter};
use gaugejet::patch::{Field, GaugeFamily, MatterFamily, Patch};
use gaugejet::{GroupFamily, GroupSpec, Rep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const H: [f64; 3] = [0.04, 0.02, 0.01];

/// Patch covering `[-0.32, 0.32]²` at spacing `h`, and the flat index of a
/// fixed probe point away from the centre.
fn ladder_patch(h: f64) -> (Patch, usize) {
    let points = (0.64 / h).round() as usize + 1;
    let patch = Patch::centered(2, points, h).unwrap();
    let mid = (points - 1) / 2;
    let step = (0.08 / h).round() as usize;
    let probe = patch.flat_index(&[mid + step, mid - 2 * step]);
    (patch, probe)
}

fn study(label: &str, errors: Vec<f64>) -> ConvergenceStudy {
    let s = ConvergenceStudy::new(label, H.to_vec(), errors);
    assert_eq!(s.kind, ConvergenceKind::Ratio, "{label}: {:?}", s.errors);
    assert!(s.passed, "{label}: ratios {:?}", s.ratios);
    s
}

fn family(fam: GroupFamily, seed: u64) -> GaugeFamily {
    GaugeFamily::random(&mut ChaCha8Rng::seed_from_u64(seed), fam, 2, 3, 0.5)
}

fn first_jet_errors(fam: GroupFamily) -> Vec<f64> {
    let f = family(fam, 11);
    H.iter()
        .map(|&h| {
            let (patch, probe) = ladder_patch(h);
            let sample = sample_gauge(&patch, fam, &f).unwrap();
            let numeric = jet1_of(&sample.field).unwrap().field;
            let exact: Field<Jet1Gauge> = sample.jets.map(Jet2Gauge::first_order);
            numeric.at(probe).distance(exact.at(probe))
        })
        .collect()
}

#[test]
fn first_jets_converge_at_second_order() {
    for fam in [GroupFamily::SU2, GroupFamily::SU3] {
        study(&format!("{fam} jet1"), first_jet_errors(fam));
    }
}

#[test]
fn second_jets_converge_at_second_order() {
    let fam = GroupFamily::SU2;
    let f = family(fam, 12);
    let errors = H
        .iter()
        .map(|&h| {
            let (patch, probe) = ladder_patch(h);
            let sample = sample_gauge(&patch, fam, &f).unwrap();
            let numeric = jet2_of(&sample.field).unwrap().field;
            numeric.at(probe).distance(sample.jets.at(probe))
        })
        .collect();
    study("SU2 jet2", errors);
}

#[test]
fn matter_chain_rule_converges() {
    let fam = GroupFamily::SU2;
    let spec = GroupSpec::fundamental(fam);
    let rep = Rep::new(spec).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let gf = GaugeFamily::random(&mut rng, fam, 2, 3, 0.5);
    let mf = MatterFamily::random(&mut rng, spec.rep_dim, 2, 0.5);
    let errors = H
        .iter()
        .map(|&h| {
            let (patch, probe) = ladder_patch(h);
            let g = sample_gauge(&patch, fam, &gf).unwrap();
            let m = sample_matter(&patch, spec.rep_dim, &mf).unwrap();
            let moved = g
                .field
                .try_zip_map(&m.field, |g, phi| rep.act(g, phi))
                .unwrap();
            let numeric = matter_jet_of(&moved).unwrap().field;
            let j1 = g.jets.at(probe).first_order();
            let exact = act_jet_matter(&rep, &j1, m.jets.at(probe)).unwrap();
            numeric.at(probe).distance(&exact)
        })
        .collect();
    study("matter chain rule", errors);
}

#[test]
fn abelian_constant_family_is_exact() {
    let fam = GroupFamily::U1;
    let f = GaugeFamily::constant(vec![0.7], 2);
    for &h in &H {
        let (patch, probe) = ladder_patch(h);
        let sample = sample_gauge(&patch, fam, &f).unwrap();
        let numeric = jet1_of(&sample.field).unwrap().field;
        assert!(numeric.at(probe).a.iter().all(|a| a.norm() == 0.0));
    }
}
