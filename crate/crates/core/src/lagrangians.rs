//! Lagrangian densities, minimal coupling, factorization through the
//! curvature map, and action functionals.
//!
//! Densities are coefficients of the coordinate volume form
//! `dx⁰ ∧ … ∧ dxⁿ⁻¹`. Space-time indices are contracted with a diagonal
//! metric (Euclidean by default); the algebra carries the positive definite
//! inner product `-tr(XY)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::actions::act_curvature;
use crate::error::{GaugeError, Result};
use crate::jets::{curvature, split_jet_connection, Curvature, JetConnection, JetMatter, TwoForm};
use crate::lie::{
    check_dim, sample_algebra, sample_group, AlgebraElement, GroupFamily, Rep, RepTangent,
    RepVector,
};
use crate::patch::{integrate, Field, Region};

/// Coefficient of the volume form.
pub type DensityValue = f64;

/// Signature used for index contractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    #[default]
    Euclidean,
    /// `diag(-1, 1, …, 1)` with axis 0 as time.
    Minkowski,
}

impl Metric {
    /// Diagonal entry `η^μμ`.
    pub fn weight(self, mu: usize) -> f64 {
        match (self, mu) {
            (Metric::Minkowski, 0) => -1.0,
            _ => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatterKind {
    /// `Σ_μ η^μμ |Dφ_μ|²`.
    Free,
    /// Free part plus `λ(|φ|² - v²)²`.
    Phi4,
    /// Free part plus `c·Re φ₀`; not invariant, used as a negative control.
    Broken,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatterLagrangianSpec {
    pub kind: MatterKind,
    #[serde(default)]
    pub lambda: f64,
    #[serde(default)]
    pub v: f64,
    #[serde(default)]
    pub c: f64,
    #[serde(default)]
    pub metric: Metric,
}

impl MatterLagrangianSpec {
    pub fn free() -> Self {
        MatterLagrangianSpec {
            kind: MatterKind::Free,
            lambda: 0.0,
            v: 0.0,
            c: 0.0,
            metric: Metric::Euclidean,
        }
    }

    pub fn phi4(lambda: f64, v: f64) -> Self {
        MatterLagrangianSpec {
            kind: MatterKind::Phi4,
            lambda,
            v,
            ..Self::free()
        }
    }

    pub fn broken(c: f64) -> Self {
        MatterLagrangianSpec {
            kind: MatterKind::Broken,
            c,
            ..Self::free()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lambda >= 0.0) {
            return Err(GaugeError::Config(format!(
                "lambda must be >= 0, got {}",
                self.lambda
            )));
        }
        Ok(())
    }

    pub fn is_globally_invariant(&self) -> bool {
        !matches!(self.kind, MatterKind::Broken)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaugeKind {
    /// `(1/2e²) Σ_{μ<ν} Re tr(F_μν† F_μν)`.
    YangMills,
    /// `Σ_{μ<ν} ‖F_μν‖²_F`.
    FrobeniusCurvature,
    /// Yang-Mills plus `(1/2e²) Σ_{μ≤ν} ‖∂_(μ A_ν)‖²_F`; negative control.
    BrokenGauge,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaugeLagrangianSpec {
    pub kind: GaugeKind,
    pub coupling: f64,
    #[serde(default)]
    pub metric: Metric,
}

impl GaugeLagrangianSpec {
    pub fn new(kind: GaugeKind, coupling: f64) -> Result<Self> {
        let spec = GaugeLagrangianSpec {
            kind,
            coupling,
            metric: Metric::Euclidean,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.coupling > 0.0) {
            return Err(GaugeError::Config(format!(
                "coupling must be > 0, got {}",
                self.coupling
            )));
        }
        Ok(())
    }
}

/// Covariant derivative `D_μφ = ∂_μφ + A_μ·φ`; returns `(φ, Dφ)`.
pub fn covariant_derivative(
    rep: &Rep,
    a: &[AlgebraElement],
    jm: &JetMatter,
) -> Result<(RepVector, Vec<RepTangent>)> {
    check_dim(a.len(), jm.dim())?;
    let d = a
        .iter()
        .zip(&jm.dphi)
        .map(|(am, dm)| Ok(dm + &rep.fundamental_vector_field(am, &jm.phi)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((jm.phi.clone(), d))
}

/// Globally invariant density on `(φ, Dφ)` (or a broken one, per kind).
pub fn matter_density_vec(
    spec: &MatterLagrangianSpec,
    phi: &RepVector,
    dphi: &[RepTangent],
) -> DensityValue {
    let kinetic: f64 = dphi
        .iter()
        .enumerate()
        .map(|(mu, d)| spec.metric.weight(mu) * d.norm_sqr())
        .sum();
    match spec.kind {
        MatterKind::Free => kinetic,
        MatterKind::Phi4 => {
            let r = phi.norm_sqr() - spec.v * spec.v;
            kinetic + spec.lambda * r * r
        }
        MatterKind::Broken => kinetic + spec.c * phi.vector()[0].re,
    }
}

/// `L_mat(A, φ, ∂φ) = L⃗_mat(φ, D_Aφ)`.
#[derive(Debug, Clone)]
pub struct MinimallyCoupled {
    spec: MatterLagrangianSpec,
    rep: Rep,
}

impl MinimallyCoupled {
    /// Couples any spec, including non-invariant ones. Only meant for
    /// negative controls; use [`minimal_coupling`] otherwise.
    pub fn allow_non_invariant(spec: MatterLagrangianSpec, rep: Rep) -> Result<Self> {
        spec.validate()?;
        Ok(MinimallyCoupled { spec, rep })
    }

    pub fn spec(&self) -> &MatterLagrangianSpec {
        &self.spec
    }

    pub fn density(&self, a: &[AlgebraElement], jm: &JetMatter) -> Result<DensityValue> {
        let (phi, d) = covariant_derivative(&self.rep, a, jm)?;
        Ok(matter_density_vec(&self.spec, &phi, &d))
    }

    /// Density on every point of matching connection and matter jet fields.
    pub fn density_field(
        &self,
        conn: &Field<JetConnection>,
        matter: &Field<JetMatter>,
    ) -> Result<Field<DensityValue>> {
        conn.try_zip_map(matter, |c, m| self.density(&c.a, m))
    }
}

/// Minimal coupling of a globally invariant matter lagrangian.
pub fn minimal_coupling(spec: MatterLagrangianSpec, rep: Rep) -> Result<MinimallyCoupled> {
    if !spec.is_globally_invariant() {
        return Err(GaugeError::NotGloballyInvariant(format!("{:?}", spec.kind)));
    }
    MinimallyCoupled::allow_non_invariant(spec, rep)
}

fn two_form_square(f: &TwoForm, metric: Metric) -> f64 {
    let n = f.dim();
    let mut total = 0.0;
    let mut k = 0;
    for mu in 0..n {
        for nu in (mu + 1)..n {
            total += metric.weight(mu) * metric.weight(nu) * f.upper()[k].norm_sqr();
            k += 1;
        }
    }
    total
}

/// `(1/2e²) Σ_{μ<ν} Re tr(F_μν† F_μν)`.
pub fn yang_mills_curvature_density(f: &Curvature, coupling: f64, metric: Metric) -> DensityValue {
    two_form_square(f, metric) / (2.0 * coupling * coupling)
}

/// `Σ_{μ<ν} ‖F_μν‖²_F`.
pub fn frobenius_curvature_density(f: &Curvature) -> DensityValue {
    two_form_square(f, Metric::Euclidean)
}

pub fn gauge_density(spec: &GaugeLagrangianSpec, jc: &JetConnection) -> DensityValue {
    let f = curvature(jc);
    match spec.kind {
        GaugeKind::YangMills => yang_mills_curvature_density(&f, spec.coupling, spec.metric),
        GaugeKind::FrobeniusCurvature => two_form_square(&f, spec.metric),
        GaugeKind::BrokenGauge => {
            let (sym, _) = split_jet_connection(jc);
            let extra: f64 = sym.upper().iter().map(AlgebraElement::norm_sqr).sum();
            yang_mills_curvature_density(&f, spec.coupling, spec.metric)
                + extra / (2.0 * spec.coupling * spec.coupling)
        }
    }
}

pub fn gauge_density_field(
    spec: &GaugeLagrangianSpec,
    conn: &Field<JetConnection>,
) -> Field<DensityValue> {
    conn.map(|jc| gauge_density(spec, jc))
}

/// Number of random `(g, F)` probes checked by [`utiyama_factor`].
pub const UTIYAMA_PROBES: usize = 32;
/// Largest tolerated `|L(g·F) - L(F)| / max(1, |L(F)|)` on a probe.
pub const UTIYAMA_PROBE_TOL: f64 = 1e-10;
const UTIYAMA_PROBE_SEED: u64 = 0x0055_5449_5941_4d41;

/// Gauge lagrangian obtained by composing a curvature density with the
/// curvature map.
#[derive(Clone)]
pub struct FactoredDensity<L> {
    curvature_density: L,
}

impl<L: Fn(&Curvature) -> f64> FactoredDensity<L> {
    pub fn eval(&self, jc: &JetConnection) -> DensityValue {
        (self.curvature_density)(&curvature(jc))
    }
}

/// Factors a curvature density `L_curv` through the curvature map,
/// `L_gauge(A, ∂A) = L_curv(F_A)`.
///
/// `L_curv` is first probed for invariance under the adjoint action on
/// random curvature values of `group` over an `n`-dimensional base.
pub fn utiyama_factor<L>(
    curvature_density: L,
    group: GroupFamily,
    n: usize,
) -> Result<FactoredDensity<L>>
where
    L: Fn(&Curvature) -> f64,
{
    let mut rng = ChaCha8Rng::seed_from_u64(UTIYAMA_PROBE_SEED);
    let m = group.matrix_dim();
    let mut worst: f64 = 0.0;
    for _ in 0..UTIYAMA_PROBES {
        let f = TwoForm::from_fn(n, m, |_, _| sample_algebra(&mut rng, group));
        let g = sample_group(&mut rng, group);
        let before = curvature_density(&f);
        let after = curvature_density(&act_curvature(&g, &f)?);
        worst = worst.max((after - before).abs() / before.abs().max(1.0));
    }
    if worst > UTIYAMA_PROBE_TOL {
        return Err(GaugeError::CurvatureDensityNotInvariant { deviation: worst });
    }
    Ok(FactoredDensity { curvature_density })
}

/// `S = Σ_K L(x) hⁿ`.
pub fn action_functional(density: &Field<DensityValue>, region: &Region) -> Result<f64> {
    integrate(density, region)
}

/// `S[L_gauge + L_mat] = S[L_gauge] + S[L_mat]`.
pub fn total_action(
    gauge: &Field<DensityValue>,
    matter: &Field<DensityValue>,
    region: &Region,
) -> Result<f64> {
    Ok(action_functional(gauge, region)? + action_functional(matter, region)?)
}

/// Action `∫ L(q, q̇) dt` of a curve given by its first jets on a
/// one-dimensional patch.
pub fn mechanics_action<L>(
    lagrangian: L,
    curve: &Field<JetMatter>,
    interval: &Region,
) -> Result<f64>
where
    L: Fn(&RepVector, &RepTangent) -> f64 + Sync + Send,
{
    let dim = curve.patch().dim();
    if dim != 1 {
        return Err(GaugeError::WrongDimension {
            expected: 1,
            found: dim,
        });
    }
    let density = curve.map(|j| lagrangian(&j.phi, &j.dphi[0]));
    integrate(&density, interval)
}

/// `|q̇|²`.
pub fn free_particle(_q: &RepVector, qdot: &RepTangent) -> f64 {
    qdot.norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{act_connection, act_jet_connection, act_jet_matter};
    use crate::jets::{Jet1Gauge, Jet2Gauge, SymArray};
    use crate::lie::{sample_rep_tangent, sample_rep_vector, CMat, GroupSpec};
    use crate::C64;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_jm(r: &mut ChaCha8Rng, k: usize, n: usize) -> JetMatter {
        JetMatter::new(
            sample_rep_vector(r, k),
            (0..n).map(|_| sample_rep_tangent(r, k)).collect(),
        )
        .unwrap()
    }

    fn random_jet2(r: &mut ChaCha8Rng, fam: GroupFamily, n: usize) -> Jet2Gauge {
        Jet2Gauge {
            g: sample_group(r, fam),
            a: (0..n).map(|_| sample_algebra(r, fam)).collect(),
            s: SymArray::from_fn(n, |_, _| sample_algebra(r, fam)),
        }
    }

    fn random_jc(r: &mut ChaCha8Rng, fam: GroupFamily, n: usize) -> JetConnection {
        JetConnection::new(
            (0..n).map(|_| sample_algebra(r, fam)).collect(),
            (0..n * n).map(|_| sample_algebra(r, fam)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn covariant_derivative_trivial_cases() {
        let rep = GroupSpec::fundamental(GroupFamily::SU2).rep().unwrap();
        let mut r = rng(1);
        let jm = random_jm(&mut r, 2, 3);
        let (phi, d) = covariant_derivative(&rep, &vec![AlgebraElement::zero(2); 3], &jm).unwrap();
        assert_eq!(phi, jm.phi);
        assert_eq!(d, jm.dphi);
        let a: Vec<_> = (0..3)
            .map(|_| sample_algebra(&mut r, GroupFamily::SU2))
            .collect();
        let (phi, d) = covariant_derivative(&rep, &a, &JetMatter::zero(2, 3)).unwrap();
        assert_eq!(phi.norm(), 0.0);
        assert!(d.iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn covariant_derivative_is_equivariant() {
        for spec in [
            GroupSpec::fundamental(GroupFamily::SU3),
            GroupSpec::adjoint(GroupFamily::SU2),
        ] {
            let rep = spec.rep().unwrap();
            let mut r = rng(2);
            for _ in 0..50 {
                let j = random_jet2(&mut r, spec.family, 3).first_order();
                let a: Vec<_> = (0..3)
                    .map(|_| sample_algebra(&mut r, spec.family))
                    .collect();
                let jm = random_jm(&mut r, spec.rep_dim, 3);
                let (_, d) = covariant_derivative(&rep, &a, &jm).unwrap();
                let (phi2, d2) = covariant_derivative(
                    &rep,
                    &act_connection(&j, &a).unwrap(),
                    &act_jet_matter(&rep, &j, &jm).unwrap(),
                )
                .unwrap();
                assert!(phi2.distance(&rep.act(&j.g, &jm.phi).unwrap()) < 1e-12);
                for (x, y) in d2.iter().zip(&d) {
                    assert!(x.distance(&rep.act_tangent(&j.g, y).unwrap()) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn matter_density_examples() {
        let spec = MatterLagrangianSpec::free();
        assert_eq!(
            matter_density_vec(&spec, &RepVector::zero(2), &[RepTangent::zero(2)]),
            0.0
        );

        let rep = GroupSpec::fundamental(GroupFamily::SU2).rep().unwrap();
        let mut r = rng(3);
        let jm = random_jm(&mut r, 2, 2);
        let g = sample_group(&mut r, GroupFamily::SU2);
        let phi = rep.act(&g, &jm.phi).unwrap();
        let d: Vec<_> = jm
            .dphi
            .iter()
            .map(|x| rep.act_tangent(&g, x).unwrap())
            .collect();
        for spec in [
            MatterLagrangianSpec::free(),
            MatterLagrangianSpec::phi4(0.5, 1.0),
        ] {
            let before = matter_density_vec(&spec, &jm.phi, &jm.dphi);
            assert!((matter_density_vec(&spec, &phi, &d) - before).abs() < 1e-12);
        }
        let broken = MatterLagrangianSpec::broken(1.0);
        let mut worst: f64 = 0.0;
        for _ in 0..10 {
            let g = sample_group(&mut r, GroupFamily::SU2);
            let phi = rep.act(&g, &jm.phi).unwrap();
            worst = worst.max(
                (matter_density_vec(&broken, &phi, &jm.dphi)
                    - matter_density_vec(&broken, &jm.phi, &jm.dphi))
                .abs(),
            );
        }
        assert!(worst > 1e-3);
    }

    #[test]
    fn minimal_coupling_examples() {
        let rep = GroupSpec::fundamental(GroupFamily::SU2).rep().unwrap();
        assert!(matches!(
            minimal_coupling(MatterLagrangianSpec::broken(1.0), rep.clone()),
            Err(GaugeError::NotGloballyInvariant(_))
        ));
        let mut r = rng(4);
        for spec in [
            MatterLagrangianSpec::free(),
            MatterLagrangianSpec::phi4(0.7, 0.3),
        ] {
            let coupled = minimal_coupling(spec, rep.clone()).unwrap();
            let jm = random_jm(&mut r, 2, 2);
            let zero = vec![AlgebraElement::zero(2); 2];
            assert_eq!(
                coupled.density(&zero, &jm).unwrap(),
                matter_density_vec(&spec, &jm.phi, &jm.dphi)
            );

            let a: Vec<_> = (0..2)
                .map(|_| sample_algebra(&mut r, GroupFamily::SU2))
                .collect();
            let j = random_jet2(&mut r, GroupFamily::SU2, 2).first_order();
            let before = coupled.density(&a, &jm).unwrap();
            let after = coupled
                .density(
                    &act_connection(&j, &a).unwrap(),
                    &act_jet_matter(&rep, &j, &jm).unwrap(),
                )
                .unwrap();
            assert!((after - before).abs() < 1e-12);
        }
    }

    #[test]
    fn gauge_density_examples() {
        let spec = GaugeLagrangianSpec::new(GaugeKind::YangMills, 0.7).unwrap();
        assert_eq!(gauge_density(&spec, &JetConnection::zero(2, 2)), 0.0);
        assert!(GaugeLagrangianSpec::new(GaugeKind::YangMills, 0.0).is_err());

        // U(1), n = 2, F_01 = i b
        let b = 1.3;
        let e = 0.7;
        let i = |x: f64| {
            AlgebraElement::from_matrix_unchecked(CMat::from_element(1, 1, C64::new(0.0, x)))
        };
        let jc = JetConnection::from_fn(vec![i(0.2), i(-0.4)], |mu, nu| match (mu, nu) {
            (0, 1) => i(b),
            _ => i(0.0),
        })
        .unwrap();
        assert!((gauge_density(&spec, &jc) - b * b / (2.0 * e * e)).abs() < 1e-15);

        // equal curvature, different symmetric parts
        let sym_shift = JetConnection::from_fn(jc.a.clone(), |mu, nu| match (mu, nu) {
            (0, 1) => i(b + 0.5),
            (1, 0) => i(0.5),
            _ => i(0.0),
        })
        .unwrap();
        assert!(curvature(&jc).distance(&curvature(&sym_shift)) < 1e-15);
        let broken = GaugeLagrangianSpec::new(GaugeKind::BrokenGauge, e).unwrap();
        assert!((gauge_density(&broken, &jc) - gauge_density(&broken, &sym_shift)).abs() > 1e-6);
        assert_eq!(gauge_density(&spec, &jc), gauge_density(&spec, &sym_shift));
    }

    #[test]
    fn yang_mills_is_nonnegative_and_invariant() {
        let mut r = rng(5);
        let spec = GaugeLagrangianSpec::new(GaugeKind::YangMills, 1.1).unwrap();
        for _ in 0..20 {
            let jc = random_jc(&mut r, GroupFamily::SU3, 4);
            let j = random_jet2(&mut r, GroupFamily::SU3, 4);
            let before = gauge_density(&spec, &jc);
            assert!(before >= 0.0);
            let after = gauge_density(&spec, &act_jet_connection(&j, &jc).unwrap());
            assert!((after - before).abs() < 1e-12 * before.max(1.0));
        }
    }

    #[test]
    fn utiyama_examples() {
        let zero = utiyama_factor(|_: &Curvature| 0.0, GroupFamily::SU2, 3).unwrap();
        let mut r = rng(6);
        let jc = random_jc(&mut r, GroupFamily::SU2, 3);
        assert_eq!(zero.eval(&jc), 0.0);

        let frob = utiyama_factor(frobenius_curvature_density, GroupFamily::SU2, 3).unwrap();
        let spec = GaugeLagrangianSpec::new(GaugeKind::FrobeniusCurvature, 1.0).unwrap();
        assert_eq!(frob.eval(&jc), gauge_density(&spec, &jc));

        // not invariant: reads the first matrix entry of F_01
        let bad = utiyama_factor(
            |f: &Curvature| f.get(0, 1).matrix()[(0, 1)].re,
            GroupFamily::SU2,
            3,
        );
        assert!(matches!(
            bad,
            Err(GaugeError::CurvatureDensityNotInvariant { .. })
        ));
    }

    #[test]
    fn action_functional_examples() {
        let patch = crate::patch::Patch::centered(2, 8, 0.5).unwrap();
        let k = patch.interior_region(1).unwrap();
        let zero = Field::from_fn(patch.clone(), |_| 0.0);
        assert_eq!(action_functional(&zero, &k).unwrap(), 0.0);
        let g = Field::from_fn(patch.clone(), |x| x[0].round());
        let m = Field::from_fn(patch, |x| 2.0 * x[1].round() + 1.0);
        let sum = g.zip_map(&m, |a, b| a + b).unwrap();
        assert_eq!(
            total_action(&g, &m, &k).unwrap(),
            action_functional(&sum, &k).unwrap()
        );
    }

    #[test]
    fn mechanics_action_requires_one_dimension() {
        let patch = crate::patch::Patch::centered(2, 6, 0.1).unwrap();
        let curve = Field::from_fn(patch.clone(), |_| JetMatter::zero(1, 2));
        let k = patch.interior_region(1).unwrap();
        assert!(matches!(
            mechanics_action(free_particle, &curve, &k),
            Err(GaugeError::WrongDimension { .. })
        ));
    }

    #[test]
    fn mechanics_constant_gauge_leaves_free_action_unchanged() {
        let rep = GroupSpec::fundamental(GroupFamily::SU2).rep().unwrap();
        let patch = crate::patch::Patch::default_for_dim(1).unwrap();
        let mut r = rng(7);
        let fam = crate::patch::MatterFamily::random(&mut r, 2, 1, 0.8);
        let curve = crate::patch::families::sample_matter(&patch, 2, &fam)
            .unwrap()
            .jets;
        let g = sample_group(&mut r, GroupFamily::SU2);
        let moved = curve
            .try_map(|j| act_jet_matter(&rep, &Jet1Gauge::constant(g.clone(), 1), j))
            .unwrap();
        let k = patch.interior_region(1).unwrap();
        let s0 = mechanics_action(free_particle, &curve, &k).unwrap();
        let s1 = mechanics_action(free_particle, &moved, &k).unwrap();
        assert!((s0 - s1).abs() < 1e-12);
    }
}
