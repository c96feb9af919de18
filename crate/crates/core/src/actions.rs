//! Local action laws of the gauge group bundle and its jet groups.
//!
//! Every law is implemented at a single fiber and lifted to fields by
//! point-wise maps. With `J = (g, a)` or `J = (g, a, s)`:
//!
//! ```text
//! matter        φ          ↦ g·φ
//! matter jet    ∂_μφ       ↦ g·∂_μφ + (a_μ)_Q(g·φ)
//! connection    A_μ        ↦ Ad(g) A_μ - a_μ
//! its jet       ∂_μA_ν     ↦ Ad(g) ∂_μA_ν + [a_μ, Ad(g) A_ν] - ½[a_μ, a_ν] - s_μν
//! curvature     F_μν       ↦ Ad(g) F_μν
//! ```
//!
//! The connection-jet law needs the full derivative `∂_μ a_ν`; the stored
//! symmetric part `s` is completed with the Maurer-Cartan antisymmetric part
//! `½[a_μ, a_ν]`.

use crate::error::Result;
use crate::jets::{
    split_jet_connection, Curvature, Jet1Gauge, Jet2Gauge, JetConnection, JetMatter, SymArray,
    TwoForm, Variation,
};
use crate::lie::{
    adjoint_unchecked, bracket_unchecked, check_dim, AlgebraElement, GroupElement, Rep, RepVector,
};
use crate::patch::Field;

pub fn act_matter(rep: &Rep, g: &GroupElement, phi: &RepVector) -> Result<RepVector> {
    rep.act(g, phi)
}

pub fn act_variation(rep: &Rep, g: &GroupElement, v: &Variation) -> Result<Variation> {
    Ok(Variation {
        dphi: rep.act_tangent(g, &v.dphi)?,
    })
}

/// Leibniz rule for group actions.
pub fn act_jet_matter(rep: &Rep, j: &Jet1Gauge, jm: &JetMatter) -> Result<JetMatter> {
    check_dim(j.dim(), jm.dim())?;
    let phi = rep.act(&j.g, &jm.phi)?;
    let dphi =
        j.a.iter()
            .zip(&jm.dphi)
            .map(|(a, d)| Ok(rep.act_tangent(&j.g, d)? + rep.fundamental_vector_field(a, &phi)?))
            .collect::<Result<Vec<_>>>()?;
    Ok(JetMatter { phi, dphi })
}

/// `(J·A)_μ = Ad(g) A_μ - a_μ`.
pub fn act_connection(j: &Jet1Gauge, a: &[AlgebraElement]) -> Result<Vec<AlgebraElement>> {
    check_dim(j.dim(), a.len())?;
    a.iter()
        .zip(&j.a)
        .map(|(am, jm)| {
            check_dim(j.mat_dim(), am.dim())?;
            Ok(&adjoint_unchecked(&j.g, am) - jm)
        })
        .collect()
}

pub fn act_jet_connection(j: &Jet2Gauge, jc: &JetConnection) -> Result<JetConnection> {
    let first = j.first_order();
    let a = act_connection(&first, &jc.a)?;
    let ad_a: Vec<AlgebraElement> = jc.a.iter().map(|x| adjoint_unchecked(&j.g, x)).collect();
    JetConnection::from_fn(a, |mu, nu| {
        let mut out = adjoint_unchecked(&j.g, jc.da(mu, nu));
        out += &bracket_unchecked(&j.a[mu], &ad_a[nu]);
        &out - &j.da(mu, nu)
    })
}

/// Sum `(J·∂A)_μν + (J·∂A)_νμ` evaluated directly from the symmetric-part law.
pub fn symmetric_part_law(j: &Jet2Gauge, jc: &JetConnection) -> SymArray<AlgebraElement> {
    let ad_a: Vec<AlgebraElement> = jc.a.iter().map(|x| adjoint_unchecked(&j.g, x)).collect();
    SymArray::from_fn(jc.dim(), |mu, nu| {
        let mut out = adjoint_unchecked(&j.g, &(jc.da(mu, nu) + jc.da(nu, mu)));
        out += &bracket_unchecked(&j.a[mu], &ad_a[nu]);
        out += &bracket_unchecked(&j.a[nu], &ad_a[mu]);
        &out - &(j.s.get(mu, nu) * 2.0)
    })
}

/// Difference `(J·∂A)_μν - (J·∂A)_νμ` evaluated directly from the
/// antisymmetric-part law.
pub fn antisymmetric_part_law(j: &Jet2Gauge, jc: &JetConnection) -> TwoForm {
    let ad_a: Vec<AlgebraElement> = jc.a.iter().map(|x| adjoint_unchecked(&j.g, x)).collect();
    TwoForm::from_fn(jc.dim(), jc.mat_dim(), |mu, nu| {
        let mut out = adjoint_unchecked(&j.g, &(jc.da(mu, nu) - jc.da(nu, mu)));
        out += &bracket_unchecked(&j.a[mu], &ad_a[nu]);
        out = &out - &bracket_unchecked(&j.a[nu], &ad_a[mu]);
        &out - &bracket_unchecked(&j.a[mu], &j.a[nu])
    })
}

/// `(g·F)_μν = g F_μν g⁻¹`.
pub fn act_curvature(g: &GroupElement, f: &Curvature) -> Result<Curvature> {
    check_dim(g.dim(), f.mat_dim())?;
    Ok(f.map(|x| adjoint_unchecked(g, x)))
}

/// Jet that realizes fiber transitivity at one point.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessJet {
    First(Jet1Gauge),
    Second(Jet2Gauge),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransitivityWitness {
    pub point: Vec<usize>,
    pub jet: WitnessJet,
    /// Frobenius norm of what should have been gauged away: the transformed
    /// potential, plus the transformed symmetric derivative for second jets.
    pub residual: f64,
    /// Distance between the transformed antisymmetric part and `½F` (second
    /// jets only).
    pub curvature_residual: f64,
}

impl TransitivityWitness {
    pub fn at(mut self, point: Vec<usize>) -> Self {
        self.point = point;
        self
    }
}

fn sum_norm<'a>(xs: impl IntoIterator<Item = &'a AlgebraElement>) -> f64 {
    xs.into_iter().map(AlgebraElement::norm).sum()
}

/// Jet `(1, A)` that gauges the potential `A` to zero.
pub fn gauge_to_zero_jet1(a: &[AlgebraElement]) -> Result<TransitivityWitness> {
    let m = a.first().map(AlgebraElement::dim).unwrap_or(1);
    let jet = Jet1Gauge::new(GroupElement::identity(m), a.to_vec())?;
    let gauged = act_connection(&jet, a)?;
    Ok(TransitivityWitness {
        point: Vec::new(),
        residual: sum_norm(&gauged),
        jet: WitnessJet::First(jet),
        curvature_residual: 0.0,
    })
}

/// Jet `(1, A, ∂_(μ A_ν))` that gauges the potential and the symmetric part of
/// its derivative to zero; the antisymmetric part becomes `½F`.
pub fn gauge_to_zero_jet2(jc: &JetConnection) -> Result<TransitivityWitness> {
    let (sym, _) = split_jet_connection(jc);
    let jet = Jet2Gauge::new(GroupElement::identity(jc.mat_dim()), jc.a.clone(), sym)?;
    let gauged = act_jet_connection(&jet, jc)?;
    let (gsym, ganti) = split_jet_connection(&gauged);
    let half_f = crate::jets::curvature(jc).map(|f| f * 0.5);
    Ok(TransitivityWitness {
        point: Vec::new(),
        residual: sum_norm(&gauged.a) + sum_norm(gsym.upper()),
        curvature_residual: ganti.distance(&half_f),
        jet: WitnessJet::Second(jet),
    })
}

/// Witness at every valid point of a connection-jet field.
pub fn gauge_to_zero_field(jets: &Field<JetConnection>) -> Result<Vec<TransitivityWitness>> {
    let patch = jets.patch();
    jets.valid_indices()
        .into_iter()
        .map(|i| Ok(gauge_to_zero_jet2(jets.at(i))?.at(patch.multi_index(i))))
        .collect()
}

/// Gauge transformation of a matter-jet field by a gauge-jet field.
pub fn act_jet_matter_field(
    rep: &Rep,
    gauge: &Field<Jet1Gauge>,
    matter: &Field<JetMatter>,
) -> Result<Field<JetMatter>> {
    gauge.try_zip_map(matter, |j, m| act_jet_matter(rep, j, m))
}

/// Gauge transformation of a connection-jet field by a second-jet field.
pub fn act_jet_connection_field(
    gauge: &Field<Jet2Gauge>,
    conn: &Field<JetConnection>,
) -> Result<Field<JetConnection>> {
    gauge.try_zip_map(conn, act_jet_connection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::curvature;
    use crate::lie::{
        sample_algebra, sample_group, sample_rep_tangent, sample_rep_vector, CMat, GroupFamily,
        GroupSpec,
    };
    use crate::C64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_jet2(rng: &mut ChaCha8Rng, fam: GroupFamily, n: usize) -> Jet2Gauge {
        Jet2Gauge {
            g: sample_group(rng, fam),
            a: (0..n).map(|_| sample_algebra(rng, fam)).collect(),
            s: SymArray::from_fn(n, |_, _| sample_algebra(rng, fam)),
        }
    }

    fn random_jc(rng: &mut ChaCha8Rng, fam: GroupFamily, n: usize) -> JetConnection {
        JetConnection::new(
            (0..n).map(|_| sample_algebra(rng, fam)).collect(),
            (0..n * n).map(|_| sample_algebra(rng, fam)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn matter_actions() {
        let spec = GroupSpec::fundamental(GroupFamily::SU3);
        let rep = spec.rep().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let phi = sample_rep_vector(&mut rng, 3);
        assert_eq!(
            act_matter(&rep, &GroupElement::identity(3), &phi).unwrap(),
            phi
        );
        let g = sample_group(&mut rng, GroupFamily::SU3);
        let h = sample_group(&mut rng, GroupFamily::SU3);
        let seq = act_matter(&rep, &g, &act_matter(&rep, &h, &phi).unwrap()).unwrap();
        assert!(seq.distance(&act_matter(&rep, &(&g * &h), &phi).unwrap()) < 1e-12);
        let out = act_matter(&rep, &g, &phi).unwrap();
        assert!((out.norm() - phi.norm()).abs() < 1e-12);
    }

    #[test]
    fn variation_action() {
        let rep = GroupSpec::fundamental(GroupFamily::SU2).rep().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let v = Variation {
            dphi: sample_rep_tangent(&mut rng, 2),
        };
        assert_eq!(
            act_variation(&rep, &GroupElement::identity(2), &v).unwrap(),
            v
        );
        let g = sample_group(&mut rng, GroupFamily::SU2);
        let alpha = C64::new(0.3, -1.1);
        let scaled = Variation {
            dphi: v.dphi.scale(alpha),
        };
        let lhs = act_variation(&rep, &g, &scaled).unwrap().dphi;
        let rhs = act_variation(&rep, &g, &v).unwrap().dphi.scale(alpha);
        assert!(lhs.distance(&rhs) < 1e-15);

        // δφ as the s-derivative of a curve φ_s = φ + s·ψ + s²·χ
        let phi = sample_rep_vector(&mut rng, 2);
        let psi = sample_rep_vector(&mut rng, 2);
        let chi = sample_rep_vector(&mut rng, 2);
        let curve = |s: f64| &(&phi + &(&psi * s)) + &(&chi * (s * s));
        let err = |ds: f64| {
            let fd = &(&act_matter(&rep, &g, &curve(ds)).unwrap()
                - &act_matter(&rep, &g, &curve(-ds)).unwrap())
                * (0.5 / ds);
            let exact = act_variation(
                &rep,
                &g,
                &Variation {
                    dphi: psi.clone().into(),
                },
            )
            .unwrap();
            fd.distance(&exact.dphi.into())
        };
        assert!(err(1e-3) < 1e-10);
    }

    #[test]
    fn jet_matter_action_trivial_cases() {
        let rep = GroupSpec::fundamental(GroupFamily::SU2).rep().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let jm = JetMatter::new(
            sample_rep_vector(&mut rng, 2),
            (0..2).map(|_| sample_rep_tangent(&mut rng, 2)).collect(),
        )
        .unwrap();
        assert_eq!(
            act_jet_matter(&rep, &Jet1Gauge::unit(2, 2), &jm).unwrap(),
            jm
        );
        let g = sample_group(&mut rng, GroupFamily::SU2);
        let out = act_jet_matter(&rep, &Jet1Gauge::constant(g.clone(), 2), &jm).unwrap();
        assert_eq!(out.phi, rep.act(&g, &jm.phi).unwrap());
        for (o, d) in out.dphi.iter().zip(&jm.dphi) {
            assert!(o.distance(&rep.act_tangent(&g, d).unwrap()) < 1e-15);
        }
    }

    #[test]
    fn connection_action_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let fam = GroupFamily::SU2;
        let a: Vec<_> = (0..3).map(|_| sample_algebra(&mut rng, fam)).collect();
        assert_eq!(act_connection(&Jet1Gauge::unit(2, 3), &a).unwrap(), a);
        let j = random_jet2(&mut rng, fam, 3).first_order();
        let pure = act_connection(&j, &vec![AlgebraElement::zero(2); 3]).unwrap();
        for (p, x) in pure.iter().zip(&j.a) {
            assert!(p.distance(&-x) < 1e-15);
        }

        // U(1): A_μ = iα_μ, g = exp(iχ) with ∂_μχ = c_μ
        let i = |x: f64| {
            AlgebraElement::from_matrix_unchecked(CMat::from_element(1, 1, C64::new(0.0, x)))
        };
        let alpha = [0.4, -0.9];
        let dchi = [1.5, 0.25];
        let chi: f64 = 0.8;
        let j = Jet1Gauge::new(
            GroupElement::from_matrix_unchecked(CMat::from_element(
                1,
                1,
                C64::new(chi.cos(), chi.sin()),
            )),
            vec![i(dchi[0]), i(dchi[1])],
        )
        .unwrap();
        let out = act_connection(&j, &[i(alpha[0]), i(alpha[1])]).unwrap();
        for mu in 0..2 {
            assert!(out[mu].distance(&i(alpha[mu] - dchi[mu])) < 1e-15);
        }
    }

    #[test]
    fn action_of_product_is_sequential() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rep = GroupSpec::fundamental(GroupFamily::SU3).rep().unwrap();
        let fam = GroupFamily::SU3;
        for _ in 0..50 {
            let l = random_jet2(&mut rng, fam, 3);
            let r = random_jet2(&mut rng, fam, 3);
            let lr = l.mul(&r).unwrap();
            let jc = random_jc(&mut rng, fam, 3);
            let seq = act_jet_connection(&l, &act_jet_connection(&r, &jc).unwrap()).unwrap();
            assert!(act_jet_connection(&lr, &jc).unwrap().distance(&seq) < 1e-12);

            let jm = JetMatter::new(
                sample_rep_vector(&mut rng, 3),
                (0..3).map(|_| sample_rep_tangent(&mut rng, 3)).collect(),
            )
            .unwrap();
            let (l1, r1) = (l.first_order(), r.first_order());
            let seq = act_jet_matter(&rep, &l1, &act_jet_matter(&rep, &r1, &jm).unwrap()).unwrap();
            let once = act_jet_matter(&rep, &l1.mul(&r1).unwrap(), &jm).unwrap();
            assert!(once.distance(&seq) < 1e-12);
        }
    }

    #[test]
    fn jet_connection_action_trivial_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let fam = GroupFamily::SU2;
        let jc = random_jc(&mut rng, fam, 2);
        assert!(
            act_jet_connection(&Jet2Gauge::unit(2, 2), &jc)
                .unwrap()
                .distance(&jc)
                < 1e-15
        );
        let g = sample_group(&mut rng, fam);
        let out = act_jet_connection(&Jet2Gauge::constant(g.clone(), 2), &jc).unwrap();
        for mu in 0..2 {
            assert!(out.a[mu].distance(&adjoint_unchecked(&g, &jc.a[mu])) < 1e-15);
            for nu in 0..2 {
                assert!(
                    out.da(mu, nu)
                        .distance(&adjoint_unchecked(&g, jc.da(mu, nu)))
                        < 1e-15
                );
            }
        }
        let j = random_jet2(&mut rng, fam, 2);
        let out = act_jet_connection(&j, &jc).unwrap();
        assert_eq!(out.a, act_connection(&j.first_order(), &jc.a).unwrap());
    }

    #[test]
    fn displayed_sym_and_antisym_laws_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for fam in [GroupFamily::SU2, GroupFamily::SU3] {
            let j = random_jet2(&mut rng, fam, 4);
            let jc = random_jc(&mut rng, fam, 4);
            let out = act_jet_connection(&j, &jc).unwrap();
            let sym = symmetric_part_law(&j, &jc);
            let anti = antisymmetric_part_law(&j, &jc);
            for mu in 0..4 {
                for nu in 0..4 {
                    let s = out.da(mu, nu) + out.da(nu, mu);
                    assert!(s.distance(sym.get(mu, nu)) < 1e-13);
                    let d = out.da(mu, nu) - out.da(nu, mu);
                    assert!(d.distance(&anti.get(mu, nu)) < 1e-13);
                }
            }
        }
    }

    #[test]
    fn curvature_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for fam in [GroupFamily::SU2, GroupFamily::SU3, GroupFamily::U1] {
            let j = random_jet2(&mut rng, fam, 4);
            let jc = random_jc(&mut rng, fam, 4);
            let lhs = curvature(&act_jet_connection(&j, &jc).unwrap());
            let rhs = act_curvature(&j.g, &curvature(&jc)).unwrap();
            assert!(lhs.distance(&rhs) < 1e-10);
        }
        let f = curvature(&random_jc(&mut rng, GroupFamily::U1, 3));
        let g = sample_group(&mut rng, GroupFamily::U1);
        assert!(act_curvature(&g, &f).unwrap().distance(&f) < 1e-15);
        assert_eq!(act_curvature(&GroupElement::identity(1), &f).unwrap(), f);
    }

    #[test]
    fn gauge_to_zero_examples() {
        let w = gauge_to_zero_jet1(&vec![AlgebraElement::zero(2); 2]).unwrap();
        assert_eq!(w.jet, WitnessJet::First(Jet1Gauge::unit(2, 2)));
        assert_eq!(w.residual, 0.0);

        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a: Vec<_> = (0..4)
            .map(|_| sample_algebra(&mut rng, GroupFamily::SU3))
            .collect();
        let w = gauge_to_zero_jet1(&a).unwrap();
        assert!(w.residual <= 1e-14);
        let WitnessJet::First(j) = &w.jet else {
            panic!()
        };
        let zero = act_connection(j, &a).unwrap();
        let back = act_connection(&j.inverse(), &zero).unwrap();
        for (x, y) in back.iter().zip(&a) {
            assert!(x.distance(y) < 1e-12);
        }

        let w = gauge_to_zero_jet2(&JetConnection::zero(2, 3)).unwrap();
        assert_eq!(w.jet, WitnessJet::Second(Jet2Gauge::unit(2, 3)));
        assert_eq!((w.residual, w.curvature_residual), (0.0, 0.0));

        let jc = random_jc(&mut rng, GroupFamily::SU2, 3);
        let w = gauge_to_zero_jet2(&jc).unwrap();
        assert!(w.residual <= 1e-12);
        assert!(w.curvature_residual <= 1e-12);
    }

    #[test]
    fn gauge_to_zero_abelian_symmetric_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let fam = GroupFamily::U1;
        let a: Vec<_> = (0..3).map(|_| sample_algebra(&mut rng, fam)).collect();
        let base: Vec<_> = (0..9).map(|_| sample_algebra(&mut rng, fam)).collect();
        let jc =
            JetConnection::from_fn(a, |mu, nu| base[3 * mu.min(nu) + mu.max(nu)].clone()).unwrap();
        let w = gauge_to_zero_jet2(&jc).unwrap();
        let WitnessJet::Second(j) = &w.jet else {
            panic!()
        };
        let gauged = act_jet_connection(j, &jc).unwrap();
        assert!(gauged.distance(&JetConnection::zero(1, 3)) < 1e-15);
    }
}
