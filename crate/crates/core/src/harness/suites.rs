//! The verification suites.
//!
//! Algebraic suites draw random jets at a point. Field suites sample analytic
//! families on the configured patch. Finite-difference suites sample the same
//! analytic families on a fixed box at every spacing of `h_levels` and
//! compare at the points of the coarsest grid.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{
    act_connection, act_curvature, act_jet_connection, act_jet_connection_field, act_jet_matter,
    act_jet_matter_field, act_matter, act_variation, antisymmetric_part_law, gauge_to_zero_field,
    gauge_to_zero_jet1, symmetric_part_law, WitnessJet,
};
use crate::error::{GaugeError, Result};
use crate::jets::{
    connection_jet_of, curvature, da_of, jet1_of, jet2_of, matter_jet_of, split_jet_connection,
    Jet1Gauge, Jet2Gauge, JetConnection, JetMatter, SymArray, TwoForm, Variation,
};
use crate::lagrangians::{
    covariant_derivative, frobenius_curvature_density, gauge_density, minimal_coupling,
    utiyama_factor, yang_mills_curvature_density, GaugeKind, GaugeLagrangianSpec,
    MatterLagrangianSpec, Metric, MinimallyCoupled, UTIYAMA_PROBE_TOL,
};
use crate::lie::{
    bracket, sample_algebra, sample_group, sample_rep_tangent, sample_rep_vector, AlgebraElement,
    GroupFamily, GroupSpec, Rep,
};
use crate::patch::families::{sample_connection, sample_gauge, sample_matter};
use crate::patch::{
    integrate, max_over, ConnectionFamily, FamilyDescriptor, Field, GaugeFamily, MatterFamily,
    Patch,
};

use super::config::{ConvergenceConfig, SampleCounts, SuiteConfig};
use super::report::{Check, ConvergenceStudy, SuiteOutcome};

/// Coefficient size of the random analytic families.
pub const FAMILY_SCALE: f64 = 0.5;
/// Negative control threshold for matter lagrangians.
pub const MATTER_CONTROL: f64 = 1e-3;
/// Negative control threshold for gauge lagrangians.
pub const GAUGE_CONTROL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    JetGroupAxioms,
    JetFunctoriality,
    ActionAxioms,
    ChainRuleMatter,
    ChainRuleConnection,
    CurvatureEquivariance,
    GaugeToZero1,
    GaugeToZero2,
    MinimalCouplingInvariance,
    MinimalCouplingNegative,
    UtiyamaLevelSets,
    UtiyamaNegative,
    TheoremGinv1,
    TheoremGinv2,
    MechanicsReduction,
    MaurerCartan,
}

impl SuiteName {
    pub const ALL: [SuiteName; 16] = [
        SuiteName::JetGroupAxioms,
        SuiteName::JetFunctoriality,
        SuiteName::ActionAxioms,
        SuiteName::ChainRuleMatter,
        SuiteName::ChainRuleConnection,
        SuiteName::CurvatureEquivariance,
        SuiteName::GaugeToZero1,
        SuiteName::GaugeToZero2,
        SuiteName::MinimalCouplingInvariance,
        SuiteName::MinimalCouplingNegative,
        SuiteName::UtiyamaLevelSets,
        SuiteName::UtiyamaNegative,
        SuiteName::TheoremGinv1,
        SuiteName::TheoremGinv2,
        SuiteName::MechanicsReduction,
        SuiteName::MaurerCartan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::JetGroupAxioms => "jet_group_axioms",
            SuiteName::JetFunctoriality => "jet_functoriality",
            SuiteName::ActionAxioms => "action_axioms",
            SuiteName::ChainRuleMatter => "chain_rule_matter",
            SuiteName::ChainRuleConnection => "chain_rule_connection",
            SuiteName::CurvatureEquivariance => "curvature_equivariance",
            SuiteName::GaugeToZero1 => "gauge_to_zero_1",
            SuiteName::GaugeToZero2 => "gauge_to_zero_2",
            SuiteName::MinimalCouplingInvariance => "minimal_coupling_invariance",
            SuiteName::MinimalCouplingNegative => "minimal_coupling_negative",
            SuiteName::UtiyamaLevelSets => "utiyama_level_sets",
            SuiteName::UtiyamaNegative => "utiyama_negative",
            SuiteName::TheoremGinv1 => "theorem_ginv1",
            SuiteName::TheoremGinv2 => "theorem_ginv2",
            SuiteName::MechanicsReduction => "mechanics_reduction",
            SuiteName::MaurerCartan => "maurer_cartan",
        }
    }

    /// The property a passing run certifies.
    pub fn certifies(self) -> &'static str {
        match self {
            SuiteName::JetGroupAxioms => {
                "first and second jets of gauge transformations form groups under the jet product"
            }
            SuiteName::JetFunctoriality => {
                "jets of pointwise products of group-valued fields are jet products"
            }
            SuiteName::ActionAxioms => {
                "unit and product laws of the jet actions on matter, variations, connections and curvature"
            }
            SuiteName::ChainRuleMatter => {
                "the first-jet action on matter jets differentiates the pointwise action"
            }
            SuiteName::ChainRuleConnection => {
                "the second-jet action on connection jets differentiates the gauge transformation of A"
            }
            SuiteName::CurvatureEquivariance => {
                "the curvature map intertwines the second-jet action with the adjoint action"
            }
            SuiteName::GaugeToZero1 => "first jets act fiber-transitively on connection values",
            SuiteName::GaugeToZero2 => {
                "second jets act fiber-transitively on connection values and symmetric derivatives, leaving half the curvature"
            }
            SuiteName::MinimalCouplingInvariance => {
                "the covariant derivative is equivariant, so minimal coupling yields invariant densities"
            }
            SuiteName::MinimalCouplingNegative => {
                "minimal coupling refuses non-invariant matter lagrangians, which do break gauge invariance"
            }
            SuiteName::UtiyamaLevelSets => {
                "invariant gauge lagrangians factor through the curvature map"
            }
            SuiteName::UtiyamaNegative => {
                "non-invariant curvature densities and symmetric-derivative dependence are detected"
            }
            SuiteName::TheoremGinv1 => {
                "matter actions are gauge invariant when the density is first-jet invariant"
            }
            SuiteName::TheoremGinv2 => {
                "gauge-field actions are gauge invariant when the density is second-jet invariant"
            }
            SuiteName::MechanicsReduction => {
                "on a one-dimensional base the curvature vanishes and only the covariantized action is gauge invariant"
            }
            SuiteName::MaurerCartan => {
                "right-trivialized derivatives of group-valued fields satisfy the Maurer-Cartan identity"
            }
        }
    }

    /// Finite-difference suites that report convergence ratios.
    pub fn is_convergence(self) -> bool {
        matches!(
            self,
            SuiteName::JetFunctoriality
                | SuiteName::ChainRuleMatter
                | SuiteName::ChainRuleConnection
                | SuiteName::MaurerCartan
        )
    }

    /// Default bound; for convergence suites the constant `C` in `C·h²`
    /// (first jets in `jet_functoriality` are held to `C/5`).
    pub fn default_tolerance(self) -> f64 {
        match self {
            SuiteName::JetFunctoriality | SuiteName::ChainRuleConnection => 50.0,
            SuiteName::ChainRuleMatter | SuiteName::MaurerCartan => 10.0,
            SuiteName::CurvatureEquivariance | SuiteName::MechanicsReduction => 1e-10,
            _ => 1e-12,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = GaugeError;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| GaugeError::UnknownSuite(s.to_string()))
    }
}

/// Everything one suite needs.
#[derive(Debug, Clone)]
pub struct SuiteContext {
    pub group: GroupSpec,
    pub patch: Patch,
    pub h_levels: Vec<f64>,
    pub convergence: ConvergenceConfig,
    pub samples: SampleCounts,
    pub gauge_family: String,
    pub seed: u64,
    pub tolerance: f64,
}

impl SuiteContext {
    pub fn new(config: &SuiteConfig, suite: SuiteName) -> Result<Self> {
        Ok(SuiteContext {
            group: config.group,
            patch: config.patch.build()?,
            h_levels: config.h_levels.clone(),
            convergence: config.convergence.clone(),
            samples: config.samples,
            gauge_family: config.gauge_family.clone(),
            seed: config.suite_seed(suite),
            tolerance: config
                .tolerance_override(suite)
                .unwrap_or(suite.default_tolerance()),
        })
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn family(&self) -> GroupFamily {
        self.group.family
    }

    fn rep(&self) -> Result<Rep> {
        self.group.rep()
    }
}

pub fn run_suite(suite: SuiteName, ctx: &SuiteContext) -> Result<SuiteOutcome> {
    match suite {
        SuiteName::JetGroupAxioms => jet_group_axioms(ctx),
        SuiteName::JetFunctoriality => jet_functoriality(ctx),
        SuiteName::ActionAxioms => action_axioms(ctx),
        SuiteName::ChainRuleMatter => chain_rule_matter(ctx),
        SuiteName::ChainRuleConnection => chain_rule_connection(ctx),
        SuiteName::CurvatureEquivariance => curvature_equivariance(ctx),
        SuiteName::GaugeToZero1 => gauge_to_zero_1(ctx),
        SuiteName::GaugeToZero2 => gauge_to_zero_2(ctx),
        SuiteName::MinimalCouplingInvariance => minimal_coupling_invariance(ctx),
        SuiteName::MinimalCouplingNegative => minimal_coupling_negative(ctx),
        SuiteName::UtiyamaLevelSets => utiyama_level_sets(ctx),
        SuiteName::UtiyamaNegative => utiyama_negative(ctx),
        SuiteName::TheoremGinv1 => theorem_ginv1(ctx),
        SuiteName::TheoremGinv2 => theorem_ginv2(ctx),
        SuiteName::MechanicsReduction => mechanics_reduction(ctx),
        SuiteName::MaurerCartan => maurer_cartan(ctx),
    }
}

// random point data

fn algebra_tuple<R: Rng>(rng: &mut R, fam: GroupFamily, n: usize) -> Vec<AlgebraElement> {
    (0..n).map(|_| sample_algebra(rng, fam)).collect()
}

pub(crate) fn random_jet2<R: Rng>(rng: &mut R, fam: GroupFamily, n: usize) -> Jet2Gauge {
    Jet2Gauge {
        g: sample_group(rng, fam),
        a: algebra_tuple(rng, fam, n),
        s: SymArray::from_fn(n, |_, _| sample_algebra(rng, fam)),
    }
}

pub(crate) fn random_jet1<R: Rng>(rng: &mut R, fam: GroupFamily, n: usize) -> Jet1Gauge {
    Jet1Gauge {
        g: sample_group(rng, fam),
        a: algebra_tuple(rng, fam, n),
    }
}

pub(crate) fn random_jet_connection<R: Rng>(
    rng: &mut R,
    fam: GroupFamily,
    n: usize,
) -> JetConnection {
    let a = algebra_tuple(rng, fam, n);
    let da = algebra_tuple(rng, fam, n * n);
    JetConnection::new(a, da).expect("consistent sizes")
}

pub(crate) fn random_jet_matter<R: Rng>(rng: &mut R, k: usize, n: usize) -> JetMatter {
    JetMatter {
        phi: sample_rep_vector(rng, k),
        dphi: (0..n).map(|_| sample_rep_tangent(rng, k)).collect(),
    }
}

fn random_two_form<R: Rng>(rng: &mut R, fam: GroupFamily, n: usize) -> TwoForm {
    TwoForm::from_fn(n, fam.matrix_dim(), |_, _| sample_algebra(rng, fam))
}

fn worst(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

// algebraic suites

fn jet_group_axioms(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let mut families = vec![GroupFamily::U1, GroupFamily::SU2, GroupFamily::SU3];
    if !families.contains(&ctx.family()) {
        families.push(ctx.family());
    }
    let n = ctx.patch.dim();
    let tol = ctx.tolerance;
    let mut rng = ctx.rng();
    let mut checks = Vec::new();
    for fam in families {
        let m = fam.matrix_dim();
        let (mut assoc1, mut unit1, mut inv1) = (0.0f64, 0.0f64, 0.0f64);
        let (mut assoc2, mut unit2, mut inv2) = (0.0f64, 0.0f64, 0.0f64);
        let e1 = Jet1Gauge::unit(m, n);
        let e2 = Jet2Gauge::unit(m, n);
        for _ in 0..ctx.samples.triples {
            let [x, y, z] = [0; 3].map(|_| random_jet2(&mut rng, fam, n));
            let [p, q, r] = [&x, &y, &z].map(Jet2Gauge::first_order);

            assoc1 = assoc1.max(p.mul(&q)?.mul(&r)?.distance(&p.mul(&q.mul(&r)?)?));
            unit1 = unit1.max(p.mul(&e1)?.distance(&p).max(e1.mul(&p)?.distance(&p)));
            let pi = p.inverse();
            inv1 = inv1.max(p.mul(&pi)?.distance(&e1).max(pi.mul(&p)?.distance(&e1)));

            assoc2 = assoc2.max(x.mul(&y)?.mul(&z)?.distance(&x.mul(&y.mul(&z)?)?));
            unit2 = unit2.max(x.mul(&e2)?.distance(&x).max(e2.mul(&x)?.distance(&x)));
            let xi = x.inverse();
            inv2 = inv2.max(x.mul(&xi)?.distance(&e2).max(xi.mul(&x)?.distance(&e2)));
        }
        checks.push(Check::at_most(
            format!("{fam} jet1 associativity"),
            assoc1,
            tol,
        ));
        checks.push(Check::at_most(format!("{fam} jet1 unit"), unit1, tol));
        checks.push(Check::at_most(format!("{fam} jet1 inverse"), inv1, tol));
        checks.push(Check::at_most(
            format!("{fam} jet2 associativity"),
            assoc2,
            tol,
        ));
        checks.push(Check::at_most(format!("{fam} jet2 unit"), unit2, tol));
        checks.push(Check::at_most(format!("{fam} jet2 inverse"), inv2, tol));
    }
    Ok(SuiteOutcome {
        checks,
        convergence: vec![],
    })
}

fn action_axioms(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let rep = ctx.rep()?;
    let k = ctx.group.rep_dim;
    let n = ctx.patch.dim();
    let m = fam.matrix_dim();
    let tol = ctx.tolerance;
    let mut rng = ctx.rng();

    let e1 = Jet1Gauge::unit(m, n);
    let e2 = Jet2Gauge::unit(m, n);
    let mut unit = 0.0f64;
    let mut prod = [0.0f64; 6];
    let mut laws = 0.0f64;
    let mut first_order = 0.0f64;
    for _ in 0..ctx.samples.points {
        let x = random_jet2(&mut rng, fam, n);
        let y = random_jet2(&mut rng, fam, n);
        let xy = x.mul(&y)?;
        let (p, q, pq) = (x.first_order(), y.first_order(), xy.first_order());
        let phi = sample_rep_vector(&mut rng, k);
        let var = Variation {
            dphi: sample_rep_tangent(&mut rng, k),
        };
        let jm = random_jet_matter(&mut rng, k, n);
        let a = algebra_tuple(&mut rng, fam, n);
        let jc = random_jet_connection(&mut rng, fam, n);
        let f = random_two_form(&mut rng, fam, n);

        let id = crate::lie::GroupElement::identity(m);
        unit = unit
            .max(act_matter(&rep, &id, &phi)?.distance(&phi))
            .max(act_variation(&rep, &id, &var)?.dphi.distance(&var.dphi))
            .max(act_jet_matter(&rep, &e1, &jm)?.distance(&jm))
            .max(sum_distance(&act_connection(&e1, &a)?, &a))
            .max(act_jet_connection(&e2, &jc)?.distance(&jc))
            .max(act_curvature(&id, &f)?.distance(&f));

        let d = [
            act_matter(&rep, &pq.g, &phi)?.distance(&act_matter(
                &rep,
                &p.g,
                &act_matter(&rep, &q.g, &phi)?,
            )?),
            act_variation(&rep, &pq.g, &var)?
                .dphi
                .distance(&act_variation(&rep, &p.g, &act_variation(&rep, &q.g, &var)?)?.dphi),
            act_jet_matter(&rep, &pq, &jm)?.distance(&act_jet_matter(
                &rep,
                &p,
                &act_jet_matter(&rep, &q, &jm)?,
            )?),
            sum_distance(
                &act_connection(&pq, &a)?,
                &act_connection(&p, &act_connection(&q, &a)?)?,
            ),
            act_jet_connection(&xy, &jc)?
                .distance(&act_jet_connection(&x, &act_jet_connection(&y, &jc)?)?),
            act_curvature(&xy.g, &f)?.distance(&act_curvature(&x.g, &act_curvature(&y.g, &f)?)?),
        ];
        for (acc, v) in prod.iter_mut().zip(d) {
            *acc = acc.max(v);
        }

        // componentwise result against the two displayed derivative laws
        let out = act_jet_connection(&x, &jc)?;
        let sym = symmetric_part_law(&x, &jc);
        let anti = antisymmetric_part_law(&x, &jc);
        for mu in 0..n {
            for nu in 0..n {
                let s = out.da(mu, nu) + out.da(nu, mu);
                let w = out.da(mu, nu) - out.da(nu, mu);
                laws = laws
                    .max(s.distance(sym.get(mu, nu)))
                    .max(w.distance(&anti.get(mu, nu)));
            }
        }
        first_order = first_order.max(sum_distance(&out.a, &act_connection(&p, &jc.a)?));
    }
    let labels = [
        "matter product law",
        "variation product law",
        "jet matter product law",
        "connection product law",
        "jet connection product law",
        "curvature product law",
    ];
    let mut checks = vec![Check::at_most("unit acts trivially", unit, tol)];
    checks.extend(
        labels
            .iter()
            .zip(prod)
            .map(|(l, v)| Check::at_most(*l, v, tol)),
    );
    checks.push(Check::at_most(
        "symmetric and antisymmetric laws",
        laws,
        tol,
    ));
    checks.push(Check::at_most(
        "potential part equals first-jet action",
        first_order,
        tol,
    ));
    Ok(SuiteOutcome {
        checks,
        convergence: vec![],
    })
}

fn sum_distance(a: &[AlgebraElement], b: &[AlgebraElement]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.distance(y)).sum()
}

fn curvature_equivariance(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let mut rng = ctx.rng();
    let mut checks = Vec::new();
    for n in [2, 4] {
        let mut err = 0.0f64;
        for _ in 0..ctx.samples.points {
            let j = random_jet2(&mut rng, fam, n);
            let jc = random_jet_connection(&mut rng, fam, n);
            let lhs = curvature(&act_jet_connection(&j, &jc)?);
            let rhs = act_curvature(&j.g, &curvature(&jc))?;
            err = err.max(lhs.distance(&rhs));
        }
        checks.push(Check::at_most(format!("{fam} n={n}"), err, ctx.tolerance));
    }
    Ok(SuiteOutcome {
        checks,
        convergence: vec![],
    })
}

fn minimal_coupling_invariance(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let rep = ctx.rep()?;
    let k = ctx.group.rep_dim;
    let n = ctx.patch.dim();
    let mut rng = ctx.rng();
    let free = minimal_coupling(MatterLagrangianSpec::free(), rep.clone())?;
    let phi4 = minimal_coupling(MatterLagrangianSpec::phi4(0.5, 1.0), rep.clone())?;
    let (mut cov, mut d_free, mut d_phi4) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..ctx.samples.points {
        let j = random_jet1(&mut rng, fam, n);
        let a = algebra_tuple(&mut rng, fam, n);
        let jm = random_jet_matter(&mut rng, k, n);
        let a2 = act_connection(&j, &a)?;
        let jm2 = act_jet_matter(&rep, &j, &jm)?;
        let (phi, d) = covariant_derivative(&rep, &a, &jm)?;
        let (phi2, d2) = covariant_derivative(&rep, &a2, &jm2)?;
        let mut e = phi2.distance(&rep.act(&j.g, &phi)?);
        for (x, y) in d2.iter().zip(&d) {
            e += x.distance(&rep.act_tangent(&j.g, y)?);
        }
        cov = cov.max(e);
        d_free = d_free.max((free.density(&a2, &jm2)? - free.density(&a, &jm)?).abs());
        d_phi4 = d_phi4.max((phi4.density(&a2, &jm2)? - phi4.density(&a, &jm)?).abs());
    }
    Ok(SuiteOutcome {
        checks: vec![
            Check::at_most("covariant derivative equivariance", cov, ctx.tolerance),
            Check::at_most("free density change", d_free, ctx.tolerance),
            Check::at_most("phi4 density change", d_phi4, ctx.tolerance),
        ],
        convergence: vec![],
    })
}

fn minimal_coupling_negative(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let rep = ctx.rep()?;
    let k = ctx.group.rep_dim;
    let n = ctx.patch.dim();
    let mut rng = ctx.rng();
    let broken_spec = MatterLagrangianSpec::broken(1.0);
    let refused = matches!(
        minimal_coupling(broken_spec, rep.clone()),
        Err(GaugeError::NotGloballyInvariant(_))
    );
    let broken = MinimallyCoupled::allow_non_invariant(broken_spec, rep.clone())?;
    let free = minimal_coupling(MatterLagrangianSpec::free(), rep.clone())?;
    let (mut violation, mut d_free) = (0.0f64, 0.0f64);
    for _ in 0..ctx.samples.points {
        let j = random_jet1(&mut rng, fam, n);
        let a = algebra_tuple(&mut rng, fam, n);
        let jm = random_jet_matter(&mut rng, k, n);
        let a2 = act_connection(&j, &a)?;
        let jm2 = act_jet_matter(&rep, &j, &jm)?;
        violation = violation.max((broken.density(&a2, &jm2)? - broken.density(&a, &jm)?).abs());
        d_free = d_free.max((free.density(&a2, &jm2)? - free.density(&a, &jm)?).abs());
    }
    Ok(SuiteOutcome {
        checks: vec![
            Check::at_most("free density change", d_free, ctx.tolerance),
            Check::at_most("broken kind accepted", if refused { 0.0 } else { 1.0 }, 0.0),
            Check::exceeds("broken density change", violation, MATTER_CONTROL),
        ],
        convergence: vec![],
    })
}

/// Pairs of connection jets with equal curvature and different symmetric
/// derivative parts.
fn level_set_pairs(ctx: &SuiteContext, n: usize) -> Vec<(JetConnection, JetConnection)> {
    let fam = ctx.family();
    let mut rng = ctx.rng();
    (0..ctx.samples.pairs)
        .map(|_| {
            let jc = random_jet_connection(&mut rng, fam, n);
            let (sym, anti) = split_jet_connection(&jc);
            let shift = SymArray::from_fn(n, |_, _| sample_algebra(&mut rng, fam));
            let moved = SymArray::from_fn(n, |mu, nu| sym.get(mu, nu) + shift.get(mu, nu));
            let other =
                JetConnection::merge(jc.a.clone(), &moved, &anti).expect("consistent sizes");
            (jc, other)
        })
        .collect()
}

fn utiyama_level_sets(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let n = ctx.patch.dim().max(2);
    let e = 1.0;
    let ym = utiyama_factor(
        move |f: &TwoForm| yang_mills_curvature_density(f, e, Metric::Euclidean),
        fam,
        n,
    )?;
    let frob = utiyama_factor(frobenius_curvature_density, fam, n)?;
    let ym_spec = GaugeLagrangianSpec::new(GaugeKind::YangMills, e)?;
    let broken = GaugeLagrangianSpec::new(GaugeKind::BrokenGauge, e)?;
    let (mut shared, mut d_ym, mut d_frob, mut direct) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut control = f64::INFINITY;
    for (x, y) in level_set_pairs(ctx, n) {
        shared = shared.max(curvature(&x).distance(&curvature(&y)));
        d_ym = d_ym.max((ym.eval(&x) - ym.eval(&y)).abs());
        d_frob = d_frob.max((frob.eval(&x) - frob.eval(&y)).abs());
        direct = direct.max((gauge_density(&ym_spec, &x) - ym.eval(&x)).abs());
        control = control.min((gauge_density(&broken, &x) - gauge_density(&broken, &y)).abs());
    }
    Ok(SuiteOutcome {
        checks: vec![
            Check::at_most("pairs share curvature", shared, ctx.tolerance),
            Check::at_most("factored yang_mills agrees", d_ym, ctx.tolerance),
            Check::at_most("factored frobenius agrees", d_frob, ctx.tolerance),
            Check::at_most("yang_mills equals its factored form", direct, ctx.tolerance),
            Check::exceeds("broken_gauge differs on every pair", control, GAUGE_CONTROL),
        ],
        convergence: vec![],
    })
}

fn utiyama_negative(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let n = ctx.patch.dim().max(2);
    let mut checks = Vec::new();
    if !fam.is_abelian() {
        // pairs F_01 with a fixed generator: not adjoint invariant
        let t = fam.basis()[0].clone();
        let probe = move |f: &TwoForm| -f.get(0, 1).inner(&t);
        let deviation = match utiyama_factor(probe, fam, n) {
            Err(GaugeError::CurvatureDensityNotInvariant { deviation }) => deviation,
            _ => 0.0,
        };
        checks.push(Check::exceeds(
            "non-invariant curvature density refused",
            deviation,
            UTIYAMA_PROBE_TOL,
        ));
    }
    let ym = utiyama_factor(frobenius_curvature_density, fam, n)?;
    let broken = GaugeLagrangianSpec::new(GaugeKind::BrokenGauge, 1.0)?;
    let (mut d_ym, mut control) = (0.0f64, f64::INFINITY);
    for (x, y) in level_set_pairs(ctx, n) {
        d_ym = d_ym.max((ym.eval(&x) - ym.eval(&y)).abs());
        control = control.min((gauge_density(&broken, &x) - gauge_density(&broken, &y)).abs());
    }
    checks.insert(
        0,
        Check::at_most("factored density agrees", d_ym, ctx.tolerance),
    );
    checks.push(Check::exceeds(
        "broken_gauge is not a function of F",
        control,
        GAUGE_CONTROL,
    ));
    Ok(SuiteOutcome {
        checks,
        convergence: vec![],
    })
}

// field suites on the configured patch

fn gauge_families<R: Rng>(
    rng: &mut R,
    fam: GroupFamily,
    n: usize,
    count: usize,
) -> Vec<GaugeFamily> {
    (0..count)
        .map(|_| GaugeFamily::random(rng, fam, n, 3, FAMILY_SCALE))
        .collect()
}

fn gauge_to_zero_1(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let mut rng = ctx.rng();
    let conn = sample_connection(
        &ctx.patch,
        fam,
        &ConnectionFamily::random(&mut rng, fam, ctx.patch.dim(), FAMILY_SCALE),
    )?;
    let (mut residual, mut back) = (0.0f64, 0.0f64);
    for a in conn.field.values() {
        let w = gauge_to_zero_jet1(a)?;
        residual = residual.max(w.residual);
        if let WitnessJet::First(j) = &w.jet {
            let zero = act_connection(j, a)?;
            back = back.max(sum_distance(&act_connection(&j.inverse(), &zero)?, a));
        }
    }
    Ok(SuiteOutcome {
        checks: vec![
            Check::at_most("gauged potential", residual, ctx.tolerance),
            Check::at_most("inverse witness restores A", back, ctx.tolerance),
        ],
        convergence: vec![],
    })
}

fn gauge_to_zero_2(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let mut rng = ctx.rng();
    let conn = sample_connection(
        &ctx.patch,
        fam,
        &ConnectionFamily::random(&mut rng, fam, ctx.patch.dim(), FAMILY_SCALE),
    )?;
    let witnesses = gauge_to_zero_field(&conn.jets)?;
    let covered = witnesses.len() as f64 / ctx.patch.len() as f64;
    Ok(SuiteOutcome {
        checks: vec![
            Check::at_most(
                "gauged potential and symmetric part",
                worst(witnesses.iter().map(|w| w.residual)),
                ctx.tolerance,
            ),
            Check::at_most(
                "antisymmetric part minus half curvature",
                worst(witnesses.iter().map(|w| w.curvature_residual)),
                ctx.tolerance,
            ),
            Check::at_most("uncovered fraction of the patch", 1.0 - covered, 0.0),
        ],
        convergence: vec![],
    })
}

fn theorem_ginv1(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let rep = ctx.rep()?;
    let n = ctx.patch.dim();
    let mut rng = ctx.rng();
    let region = ctx.patch.interior_region(1)?;
    let npts = region.len() as f64;
    let conn = sample_connection(
        &ctx.patch,
        fam,
        &ConnectionFamily::random(&mut rng, fam, n, FAMILY_SCALE),
    )?;
    let matter = sample_matter(
        &ctx.patch,
        ctx.group.rep_dim,
        &MatterFamily::random(&mut rng, ctx.group.rep_dim, n, FAMILY_SCALE),
    )?;
    let couplings = [
        (
            "free",
            minimal_coupling(MatterLagrangianSpec::free(), rep.clone())?,
        ),
        (
            "phi4",
            minimal_coupling(MatterLagrangianSpec::phi4(0.5, 1.0), rep.clone())?,
        ),
    ];
    let broken =
        MinimallyCoupled::allow_non_invariant(MatterLagrangianSpec::broken(1.0), rep.clone())?;
    let density = |c: &MinimallyCoupled, a: &Field<Vec<AlgebraElement>>, m: &Field<JetMatter>| {
        a.try_zip_map(m, |a, m| c.density(a, m))
    };

    let mut pointwise = [0.0f64; 2];
    let mut action = [0.0f64; 2];
    let mut control = f64::INFINITY;
    for gf in gauge_families(&mut rng, fam, n, ctx.samples.gauge_fields) {
        let gauge = sample_gauge(&ctx.patch, fam, &gf)?.jet1().field;
        let a2 = gauge.try_zip_map(&conn.field, |j, a| act_connection(j, a))?;
        let m2 = act_jet_matter_field(&rep, &gauge, &matter.jets)?;
        for (i, (_, c)) in couplings.iter().enumerate() {
            let before = density(c, &conn.field, &matter.jets)?;
            let after = density(c, &a2, &m2)?;
            let diff = before.zip_map(&after, |x, y| (x - y).abs())?;
            pointwise[i] = pointwise[i].max(max_over(&diff, &region)?);
            let ds = integrate(&after, &region)? - integrate(&before, &region)?;
            action[i] = action[i].max(ds.abs() / npts);
        }
        let before = density(&broken, &conn.field, &matter.jets)?;
        let after = density(&broken, &a2, &m2)?;
        let diff = before.zip_map(&after, |x, y| (x - y).abs())?;
        control = control.min(max_over(&diff, &region)?);
    }
    let mut checks = Vec::new();
    for (i, (name, _)) in couplings.iter().enumerate() {
        checks.push(Check::at_most(
            format!("{name} pointwise density change"),
            pointwise[i],
            ctx.tolerance,
        ));
        checks.push(Check::at_most(
            format!("{name} |dS| / N_pts"),
            action[i],
            ctx.tolerance,
        ));
    }
    checks.push(Check::exceeds(
        "broken density change on every field",
        control,
        MATTER_CONTROL,
    ));
    Ok(SuiteOutcome {
        checks,
        convergence: vec![],
    })
}

fn theorem_ginv2(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let n = ctx.patch.dim();
    let mut rng = ctx.rng();
    let region = ctx.patch.interior_region(1)?;
    let npts = region.len() as f64;
    let conn = sample_connection(
        &ctx.patch,
        fam,
        &ConnectionFamily::random(&mut rng, fam, n, FAMILY_SCALE),
    )?;
    let specs = [
        GaugeLagrangianSpec::new(GaugeKind::YangMills, 1.0)?,
        GaugeLagrangianSpec::new(GaugeKind::FrobeniusCurvature, 1.0)?,
    ];
    let broken = GaugeLagrangianSpec::new(GaugeKind::BrokenGauge, 1.0)?;

    let mut pointwise = [0.0f64; 2];
    let mut action = [0.0f64; 2];
    let mut control = f64::INFINITY;
    for gf in gauge_families(&mut rng, fam, n, ctx.samples.gauge_fields) {
        let gauge = sample_gauge(&ctx.patch, fam, &gf)?.jets;
        let moved = act_jet_connection_field(&gauge, &conn.jets)?;
        for (i, spec) in specs.iter().enumerate() {
            let before = conn.jets.map(|jc| gauge_density(spec, jc));
            let after = moved.map(|jc| gauge_density(spec, jc));
            let diff = before.zip_map(&after, |x, y| (x - y).abs())?;
            pointwise[i] = pointwise[i].max(max_over(&diff, &region)?);
            let ds = integrate(&after, &region)? - integrate(&before, &region)?;
            action[i] = action[i].max(ds.abs() / npts);
        }
        let before = conn.jets.map(|jc| gauge_density(&broken, jc));
        let after = moved.map(|jc| gauge_density(&broken, jc));
        let ds = integrate(&after, &region)? - integrate(&before, &region)?;
        control = control.min(ds.abs());
    }
    let mut checks = Vec::new();
    for (i, name) in ["yang_mills", "frobenius_curvature"].iter().enumerate() {
        checks.push(Check::at_most(
            format!("{name} pointwise density change"),
            pointwise[i],
            ctx.tolerance,
        ));
        checks.push(Check::at_most(
            format!("{name} |dS| / N_pts"),
            action[i],
            ctx.tolerance,
        ));
    }
    checks.push(Check::exceeds(
        "broken_gauge |dS| on every field",
        control,
        GAUGE_CONTROL,
    ));
    Ok(SuiteOutcome {
        checks,
        convergence: vec![],
    })
}

fn mechanics_reduction(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let rep = ctx.rep()?;
    let k = ctx.group.rep_dim;
    let mut rng = ctx.rng();
    let patch = Patch::default_for_dim(1)?;
    let region = patch.interior_region(1)?;

    let mut components = 0usize;
    let ym = GaugeLagrangianSpec::new(GaugeKind::YangMills, 1.0)?;
    let mut ym_max = 0.0f64;
    for _ in 0..ctx.samples.pairs {
        let jc = random_jet_connection(&mut rng, fam, 1);
        components += curvature(&jc).num_components();
        ym_max = ym_max.max(gauge_density(&ym, &jc).abs());
    }

    let curve = sample_matter(
        &patch,
        k,
        &MatterFamily::random(&mut rng, k, 1, FAMILY_SCALE),
    )?
    .jets;
    let conn = sample_connection(
        &patch,
        fam,
        &ConnectionFamily::random(&mut rng, fam, 1, FAMILY_SCALE),
    )?
    .field;
    let covariant = minimal_coupling(MatterLagrangianSpec::free(), rep.clone())?;
    let cov_density = |a: &Field<Vec<AlgebraElement>>, m: &Field<JetMatter>| {
        a.try_zip_map(m, |a, m| covariant.density(a, m))
    };
    let s_free =
        crate::lagrangians::mechanics_action(crate::lagrangians::free_particle, &curve, &region)?;
    let before = cov_density(&conn, &curve)?;
    let s_cov = integrate(&before, &region)?;

    let (mut broken, mut cov_action, mut cov_pointwise) = (f64::INFINITY, 0.0f64, 0.0f64);
    for gf in gauge_families(&mut rng, fam, 1, ctx.samples.gauge_fields) {
        let gauge = sample_gauge(&patch, fam, &gf)?.jet1().field;
        let moved = act_jet_matter_field(&rep, &gauge, &curve)?;
        let s = crate::lagrangians::mechanics_action(
            crate::lagrangians::free_particle,
            &moved,
            &region,
        )?;
        broken = broken.min((s - s_free).abs());

        let a2 = gauge.try_zip_map(&conn, |j, a| act_connection(j, a))?;
        let after = cov_density(&a2, &moved)?;
        cov_action = cov_action.max((integrate(&after, &region)? - s_cov).abs());
        let diff = before.zip_map(&after, |x, y| (x - y).abs())?;
        cov_pointwise = cov_pointwise.max(max_over(&diff, &region)?);
    }
    Ok(SuiteOutcome {
        checks: vec![
            Check::at_most("curvature components for n = 1", components as f64, 0.0),
            Check::at_most("yang_mills density for n = 1", ym_max, 0.0),
            Check::at_most("covariant |dS|", cov_action, ctx.tolerance),
            Check::at_most(
                "covariant pointwise density change",
                cov_pointwise,
                ctx.tolerance,
            ),
            Check::exceeds(
                "non-covariant |dS| under time-dependent g",
                broken,
                MATTER_CONTROL,
            ),
        ],
        convergence: vec![],
    })
}

// finite-difference convergence suites

/// Grids of the convergence study and the coarse-grid probe points at each
/// level (flat indices).
pub struct Ladder {
    pub patches: Vec<Patch>,
    pub probes: Vec<Vec<usize>>,
}

pub fn ladder(h_levels: &[f64], conv: &ConvergenceConfig, margin: usize) -> Result<Ladder> {
    if h_levels.len() < 2 {
        return Err(GaugeError::Config(
            "a convergence study needs at least two h_levels".into(),
        ));
    }
    let l = conv.box_length;
    let mut patches = Vec::new();
    let mut steps = Vec::new();
    for &h in h_levels {
        let cells = l / h;
        let c = cells.round();
        if (cells - c).abs() > 1e-9 * c.max(1.0) {
            return Err(GaugeError::Config(format!(
                "box_length {l} is not a whole number of steps of {h}"
            )));
        }
        let r = h_levels[0] / h;
        if (r - r.round()).abs() > 1e-9 * r {
            return Err(GaugeError::Config(format!(
                "h = {h} does not divide the coarsest spacing {}",
                h_levels[0]
            )));
        }
        patches.push(Patch::centered(conv.dim, c as usize + 1, h)?);
        steps.push(r.round() as usize);
    }
    let coarse = &patches[0];
    let base: Vec<Vec<usize>> = (0..coarse.len())
        .filter(|&i| coarse.is_interior(i, margin))
        .map(|i| coarse.multi_index(i))
        .collect();
    if base.is_empty() {
        return Err(GaugeError::Config(
            "coarsest grid has no interior points".into(),
        ));
    }
    let probes = patches
        .iter()
        .zip(&steps)
        .map(|(p, &r)| {
            base.iter()
                .map(|m| p.flat_index(&m.iter().map(|i| i * r).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    Ok(Ladder { patches, probes })
}

/// Runs `error` on every level and checks `weight·C·h²` at the finest one.
fn fd_study<F>(
    ctx: &SuiteContext,
    label: &str,
    margin: usize,
    weight: f64,
    error: F,
) -> Result<(Check, ConvergenceStudy)>
where
    F: Fn(&Patch, &[usize]) -> Result<f64>,
{
    let ladder = ladder(&ctx.h_levels, &ctx.convergence, margin)?;
    let errors = ladder
        .patches
        .iter()
        .zip(&ladder.probes)
        .map(|(p, probes)| error(p, probes))
        .collect::<Result<Vec<_>>>()?;
    let h_min = *ctx.h_levels.last().expect("at least two levels");
    let check = Check::at_most(
        format!("{label} at h = {h_min}"),
        *errors.last().expect("at least two levels"),
        weight * ctx.tolerance * h_min * h_min,
    );
    Ok((
        check,
        ConvergenceStudy::new(label, ctx.h_levels.clone(), errors),
    ))
}

fn fd_gauge_family<R: Rng>(ctx: &SuiteContext, rng: &mut R) -> Result<GaugeFamily> {
    match FamilyDescriptor::named(
        &ctx.gauge_family,
        ctx.family(),
        ctx.group.rep_dim,
        ctx.convergence.dim,
        rng,
    )? {
        FamilyDescriptor::Gauge(g) => Ok(g),
        _ => Err(GaugeError::Config(format!(
            "gauge_family `{}` is not a gauge family",
            ctx.gauge_family
        ))),
    }
}

fn collect(studies: Vec<(Check, ConvergenceStudy)>) -> SuiteOutcome {
    let (checks, convergence) = studies.into_iter().unzip();
    SuiteOutcome {
        checks,
        convergence,
    }
}

fn jet_functoriality(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let mut rng = ctx.rng();
    let f1 = fd_gauge_family(ctx, &mut rng)?;
    let f2 = fd_gauge_family(ctx, &mut rng)?;
    let fields = |p: &Patch| -> Result<_> {
        let g1 = sample_gauge(p, fam, &f1)?.field;
        let g2 = sample_gauge(p, fam, &f2)?.field;
        let prod = g1.zip_map(&g2, |a, b| a * b)?;
        Ok((g1, g2, prod))
    };
    let jet1 = fd_study(ctx, "jet1", 1, 0.2, |p, probes| {
        let (g1, g2, prod) = fields(p)?;
        let (j1, j2, jp) = (
            jet1_of(&g1)?.field,
            jet1_of(&g2)?.field,
            jet1_of(&prod)?.field,
        );
        probes
            .iter()
            .map(|&i| Ok(jp.at(i).distance(&j1.at(i).mul(j2.at(i))?)))
            .collect::<Result<Vec<_>>>()
            .map(worst)
    })?;
    let jet2 = fd_study(ctx, "jet2", 2, 1.0, |p, probes| {
        let (g1, g2, prod) = fields(p)?;
        let (j1, j2, jp) = (
            jet2_of(&g1)?.field,
            jet2_of(&g2)?.field,
            jet2_of(&prod)?.field,
        );
        probes
            .iter()
            .map(|&i| Ok(jp.at(i).distance(&j1.at(i).mul(j2.at(i))?)))
            .collect::<Result<Vec<_>>>()
            .map(worst)
    })?;
    Ok(collect(vec![jet1, jet2]))
}

fn chain_rule_matter(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let rep = ctx.rep()?;
    let k = ctx.group.rep_dim;
    let mut rng = ctx.rng();
    let gf = fd_gauge_family(ctx, &mut rng)?;
    let mf = MatterFamily::random(&mut rng, k, ctx.convergence.dim, FAMILY_SCALE);
    let study = fd_study(ctx, "matter jet", 1, 1.0, |p, probes| {
        let g = sample_gauge(p, fam, &gf)?.field;
        let phi = sample_matter(p, k, &mf)?.field;
        let moved = g.try_zip_map(&phi, |g, phi| rep.act(g, phi))?;
        let lhs = matter_jet_of(&moved)?.field;
        let jg = jet1_of(&g)?.field;
        let jphi = matter_jet_of(&phi)?.field;
        probes
            .iter()
            .map(|&i| {
                Ok(lhs
                    .at(i)
                    .distance(&act_jet_matter(&rep, jg.at(i), jphi.at(i))?))
            })
            .collect::<Result<Vec<_>>>()
            .map(worst)
    })?;
    Ok(collect(vec![study]))
}

fn chain_rule_connection(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let mut rng = ctx.rng();
    let gf = fd_gauge_family(ctx, &mut rng)?;
    let cf = ConnectionFamily::random(&mut rng, fam, ctx.convergence.dim, FAMILY_SCALE);
    let study = fd_study(ctx, "connection jet", 2, 1.0, |p, probes| {
        let gauge = sample_gauge(p, fam, &gf)?;
        let a = sample_connection(p, fam, &cf)?.field;
        let exact = gauge.jet1().field;
        let moved = exact.try_zip_map(&a, |j, a| act_connection(j, a))?;
        let lhs = connection_jet_of(&moved)?.field;
        let j2 = jet2_of(&gauge.field)?.field;
        let ja = connection_jet_of(&a)?.field;
        probes
            .iter()
            .map(|&i| Ok(lhs.at(i).distance(&act_jet_connection(j2.at(i), ja.at(i))?)))
            .collect::<Result<Vec<_>>>()
            .map(worst)
    })?;
    Ok(collect(vec![study]))
}

fn maurer_cartan(ctx: &SuiteContext) -> Result<SuiteOutcome> {
    let fam = ctx.family();
    let n = ctx.convergence.dim;
    let mut rng = ctx.rng();
    let gf = fd_gauge_family(ctx, &mut rng)?;
    let study = fd_study(ctx, "flatness residual", 2, 1.0, |p, probes| {
        let g = sample_gauge(p, fam, &gf)?.field;
        let j1 = jet1_of(&g)?.field;
        let da = da_of(&j1)?;
        probes
            .iter()
            .map(|&i| {
                let (a, d) = (&j1.at(i).a, da.at(i));
                let mut r = 0.0;
                for mu in 0..n {
                    for nu in (mu + 1)..n {
                        let res = &(&d[mu][nu] - &d[nu][mu]) - &bracket(&a[mu], &a[nu])?;
                        r += res.norm();
                    }
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()
            .map(worst)
    })?;
    Ok(collect(vec![study]))
}
