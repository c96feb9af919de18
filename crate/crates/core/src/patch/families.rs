//! Closed-form field families with exact jets.
//!
//! Gauge families are products of up to three single-generator factors
//! `exp(f(x) X)`. A single factor has exact jets `a_μ = ∂_μ f X` and
//! `s_μν = ∂_μ ∂_ν f X`; products combine the factor jets with the jet
//! product, which gives exact non-abelian test data without symbolic
//! differentiation.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Field, Patch};
use crate::error::{GaugeError, Result};
use crate::jets::{Jet1Gauge, Jet2Gauge, JetConnection, JetField, JetMatter, JetOrigin, SymArray};
use crate::lie::{exp, AlgebraElement, CVec, GroupElement, GroupFamily, RepTangent, RepVector};
use crate::C64;

pub const MAX_FACTORS: usize = 3;

/// Real profile function with exact gradient and hessian.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarFunction {
    /// `c + l·x + ½ xᵀ Q x` with `Q` symmetric.
    Quadratic {
        constant: f64,
        linear: Vec<f64>,
        quadratic: Vec<Vec<f64>>,
    },
    /// `amplitude · sin(k·x + phase)`.
    Sine {
        amplitude: f64,
        wavevector: Vec<f64>,
        phase: f64,
    },
}

impl ScalarFunction {
    pub fn constant(value: f64, dim: usize) -> Self {
        ScalarFunction::Quadratic {
            constant: value,
            linear: vec![0.0; dim],
            quadratic: vec![vec![0.0; dim]; dim],
        }
    }

    pub fn linear(coeffs: Vec<f64>) -> Self {
        let dim = coeffs.len();
        ScalarFunction::Quadratic {
            constant: 0.0,
            linear: coeffs,
            quadratic: vec![vec![0.0; dim]; dim],
        }
    }

    /// The bilinear monomial `x^μ x^ν` (μ ≠ ν).
    pub fn monomial(dim: usize, mu: usize, nu: usize) -> Self {
        let mut q = vec![vec![0.0; dim]; dim];
        q[mu][nu] = 1.0;
        q[nu][mu] = 1.0;
        ScalarFunction::Quadratic {
            constant: 0.0,
            linear: vec![0.0; dim],
            quadratic: q,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ScalarFunction::Quadratic { linear, .. } => linear.len(),
            ScalarFunction::Sine { wavevector, .. } => wavevector.len(),
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        let ok = match self {
            ScalarFunction::Quadratic {
                linear, quadratic, ..
            } => {
                linear.len() == dim
                    && quadratic.len() == dim
                    && quadratic.iter().all(|row| row.len() == dim)
                    && (0..dim).all(|i| (0..dim).all(|j| quadratic[i][j] == quadratic[j][i]))
            }
            ScalarFunction::Sine { wavevector, .. } => wavevector.len() == dim,
        };
        if ok {
            Ok(())
        } else {
            Err(GaugeError::UnknownFamily(format!(
                "profile does not describe a symmetric {dim}-dimensional function"
            )))
        }
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        match self {
            ScalarFunction::Quadratic {
                constant,
                linear,
                quadratic,
            } => {
                let lin: f64 = linear.iter().zip(x).map(|(l, xi)| l * xi).sum();
                let quad: f64 = quadratic
                    .iter()
                    .zip(x)
                    .map(|(row, xi)| xi * row.iter().zip(x).map(|(q, xj)| q * xj).sum::<f64>())
                    .sum();
                constant + lin + 0.5 * quad
            }
            ScalarFunction::Sine {
                amplitude,
                wavevector,
                phase,
            } => amplitude * (dot(wavevector, x) + phase).sin(),
        }
    }

    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        match self {
            ScalarFunction::Quadratic {
                linear, quadratic, ..
            } => linear
                .iter()
                .zip(quadratic)
                .map(|(l, row)| l + row.iter().zip(x).map(|(q, xj)| q * xj).sum::<f64>())
                .collect(),
            ScalarFunction::Sine {
                amplitude,
                wavevector,
                phase,
            } => {
                let c = amplitude * (dot(wavevector, x) + phase).cos();
                wavevector.iter().map(|k| c * k).collect()
            }
        }
    }

    pub fn hessian(&self, x: &[f64]) -> Vec<Vec<f64>> {
        match self {
            ScalarFunction::Quadratic { quadratic, .. } => quadratic.clone(),
            ScalarFunction::Sine {
                amplitude,
                wavevector,
                phase,
            } => {
                let s = -amplitude * (dot(wavevector, x) + phase).sin();
                wavevector
                    .iter()
                    .map(|ki| wavevector.iter().map(|kj| s * ki * kj).collect())
                    .collect()
            }
        }
    }

    /// Random quadratic or sinusoid with coefficients of size `scale`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize, scale: f64) -> Self {
        if rng.random_bool(0.5) {
            let mut q = vec![vec![0.0; dim]; dim];
            for i in 0..dim {
                for j in i..dim {
                    let v = scale * rng.random_range(-1.0..=1.0);
                    q[i][j] = v;
                    q[j][i] = v;
                }
            }
            ScalarFunction::Quadratic {
                constant: rng.random_range(-1.0..=1.0),
                linear: (0..dim)
                    .map(|_| scale * rng.random_range(-1.0..=1.0))
                    .collect(),
                quadratic: q,
            }
        } else {
            ScalarFunction::Sine {
                amplitude: rng.random_range(-1.0..=1.0),
                wavevector: (0..dim)
                    .map(|_| scale * rng.random_range(-1.0..=1.0))
                    .collect(),
                phase: rng.random_range(0.0..std::f64::consts::TAU),
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `exp(profile(x) · generator)`, generator given by basis coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeFactor {
    pub generator: Vec<f64>,
    pub profile: ScalarFunction,
}

/// Ordered product of single-generator factors (empty product = identity).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeFamily {
    pub factors: Vec<GaugeFactor>,
}

impl GaugeFamily {
    /// Constant section `exp(X)`.
    pub fn constant(generator: Vec<f64>, dim: usize) -> Self {
        GaugeFamily {
            factors: vec![GaugeFactor {
                generator,
                profile: ScalarFunction::constant(1.0, dim),
            }],
        }
    }

    pub fn single(generator: Vec<f64>, profile: ScalarFunction) -> Self {
        GaugeFamily {
            factors: vec![GaugeFactor { generator, profile }],
        }
    }

    /// U(1) plane wave `exp(i k·x)`.
    pub fn u1_plane_wave(k: Vec<f64>) -> Self {
        GaugeFamily::single(vec![1.0], ScalarFunction::linear(k))
    }

    /// Product of `factors` random single-generator factors.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        group: GroupFamily,
        dim: usize,
        factors: usize,
        scale: f64,
    ) -> Self {
        GaugeFamily {
            factors: (0..factors.min(MAX_FACTORS))
                .map(|_| GaugeFactor {
                    generator: (0..group.algebra_dim())
                        .map(|_| rng.random_range(-1.0..=1.0))
                        .collect(),
                    profile: ScalarFunction::random(rng, dim, scale),
                })
                .collect(),
        }
    }

    pub fn validate(&self, group: GroupFamily, dim: usize) -> Result<()> {
        if self.factors.len() > MAX_FACTORS {
            return Err(GaugeError::UnknownFamily(format!(
                "gauge family with {} factors (at most {MAX_FACTORS})",
                self.factors.len()
            )));
        }
        for f in &self.factors {
            if f.generator.len() != group.algebra_dim() {
                return Err(GaugeError::DimensionMismatch {
                    expected: group.algebra_dim(),
                    found: f.generator.len(),
                });
            }
            f.profile.validate(dim)?;
        }
        Ok(())
    }

    /// Group value and exact second jet at `x`.
    pub fn jet2_at(&self, group: GroupFamily, x: &[f64]) -> Result<Jet2Gauge> {
        let n = x.len();
        let mut jet = Jet2Gauge::unit(group.matrix_dim(), n);
        for f in &self.factors {
            let gen = AlgebraElement::from_coords(group, &f.generator)?;
            let grad = f.profile.gradient(x);
            let hess = f.profile.hessian(x);
            let factor = Jet2Gauge::new(
                exp(&(&gen * f.profile.value(x))),
                grad.iter().map(|d| &gen * *d).collect(),
                SymArray::from_fn(n, |mu, nu| &gen * hess[mu][nu]),
            )?;
            jet = jet.mul(&factor)?;
        }
        Ok(jet)
    }
}

/// `A_axis += profile(x) · generator`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectionTerm {
    pub axis: usize,
    pub generator: Vec<f64>,
    pub profile: ScalarFunction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectionFamily {
    pub terms: Vec<ConnectionTerm>,
}

impl ConnectionFamily {
    /// Two random terms per component.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        group: GroupFamily,
        dim: usize,
        scale: f64,
    ) -> Self {
        let mut terms = Vec::new();
        for axis in 0..dim {
            for _ in 0..2 {
                terms.push(ConnectionTerm {
                    axis,
                    generator: (0..group.algebra_dim())
                        .map(|_| rng.random_range(-1.0..=1.0))
                        .collect(),
                    profile: ScalarFunction::random(rng, dim, scale),
                });
            }
        }
        ConnectionFamily { terms }
    }

    pub fn validate(&self, group: GroupFamily, dim: usize) -> Result<()> {
        for t in &self.terms {
            if t.axis >= dim {
                return Err(GaugeError::AxisOutOfRange { axis: t.axis, dim });
            }
            if t.generator.len() != group.algebra_dim() {
                return Err(GaugeError::DimensionMismatch {
                    expected: group.algebra_dim(),
                    found: t.generator.len(),
                });
            }
            t.profile.validate(dim)?;
        }
        Ok(())
    }

    pub fn jet_at(&self, group: GroupFamily, x: &[f64]) -> Result<JetConnection> {
        let n = x.len();
        let m = group.matrix_dim();
        let mut a = vec![AlgebraElement::zero(m); n];
        let mut da = vec![AlgebraElement::zero(m); n * n];
        for t in &self.terms {
            let gen = AlgebraElement::from_coords(group, &t.generator)?;
            a[t.axis] += &(&gen * t.profile.value(x));
            for (mu, d) in t.profile.gradient(x).into_iter().enumerate() {
                da[mu * n + t.axis] += &(&gen * d);
            }
        }
        JetConnection::new(a, da)
    }
}

/// `φ += profile(x) · vector`, vector entries given as `(re, im)` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatterTerm {
    pub vector: Vec<(f64, f64)>,
    pub profile: ScalarFunction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatterFamily {
    pub terms: Vec<MatterTerm>,
}

impl MatterFamily {
    /// Three random terms. Components are scaled by `1/sqrt(rep_dim)` so the
    /// field norm does not grow with the representation.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, rep_dim: usize, dim: usize, scale: f64) -> Self {
        let k = 1.0 / (rep_dim.max(1) as f64).sqrt();
        MatterFamily {
            terms: (0..3)
                .map(|_| MatterTerm {
                    vector: (0..rep_dim)
                        .map(|_| {
                            (
                                k * rng.random_range(-1.0..=1.0),
                                k * rng.random_range(-1.0..=1.0),
                            )
                        })
                        .collect(),
                    profile: ScalarFunction::random(rng, dim, scale),
                })
                .collect(),
        }
    }

    pub fn validate(&self, rep_dim: usize, dim: usize) -> Result<()> {
        for t in &self.terms {
            if t.vector.len() != rep_dim {
                return Err(GaugeError::DimensionMismatch {
                    expected: rep_dim,
                    found: t.vector.len(),
                });
            }
            t.profile.validate(dim)?;
        }
        Ok(())
    }

    pub fn jet_at(&self, rep_dim: usize, x: &[f64]) -> JetMatter {
        let n = x.len();
        let mut phi = CVec::zeros(rep_dim);
        let mut dphi = vec![CVec::zeros(rep_dim); n];
        for t in &self.terms {
            let v =
                CVec::from_iterator(rep_dim, t.vector.iter().map(|(re, im)| C64::new(*re, *im)));
            phi += &v * C64::new(t.profile.value(x), 0.0);
            for (mu, d) in t.profile.gradient(x).into_iter().enumerate() {
                dphi[mu] += &v * C64::new(d, 0.0);
            }
        }
        JetMatter {
            phi: RepVector::new(phi),
            dphi: dphi.into_iter().map(RepTangent::new).collect(),
        }
    }
}

/// Sampled gauge transformation with its exact jets.
#[derive(Debug, Clone)]
pub struct GaugeSample {
    pub field: Field<GroupElement>,
    pub jets: Field<Jet2Gauge>,
}

impl GaugeSample {
    pub fn jet1(&self) -> JetField<Jet1Gauge> {
        JetField {
            field: self.jets.map(Jet2Gauge::first_order),
            origin: JetOrigin::Analytic,
        }
    }

    pub fn jet2(&self) -> JetField<Jet2Gauge> {
        JetField {
            field: self.jets.clone(),
            origin: JetOrigin::Analytic,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConnectionSample {
    pub field: Field<Vec<AlgebraElement>>,
    pub jets: Field<JetConnection>,
}

#[derive(Debug, Clone)]
pub struct MatterSample {
    pub field: Field<RepVector>,
    pub jets: Field<JetMatter>,
}

/// Closed-form family of any supported value kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyDescriptor {
    Gauge(GaugeFamily),
    Connection(ConnectionFamily),
    Matter(MatterFamily),
    Scalar(ScalarFunction),
}

impl FamilyDescriptor {
    /// Built-in named families, randomized from `rng` where applicable:
    /// `constant`, `u1_plane_wave`, `single_generator`, `product`,
    /// `connection`, `matter`, `scalar`.
    pub fn named<R: Rng + ?Sized>(
        name: &str,
        group: GroupFamily,
        rep_dim: usize,
        dim: usize,
        rng: &mut R,
    ) -> Result<Self> {
        const SCALE: f64 = 0.5;
        Ok(match name {
            "constant" => FamilyDescriptor::Gauge(GaugeFamily::constant(
                (0..group.algebra_dim())
                    .map(|_| rng.random_range(-1.0..=1.0))
                    .collect(),
                dim,
            )),
            "u1_plane_wave" => {
                if group != GroupFamily::U1 {
                    return Err(GaugeError::UnknownFamily(format!(
                        "u1_plane_wave requires U1, got {group}"
                    )));
                }
                FamilyDescriptor::Gauge(GaugeFamily::u1_plane_wave(
                    (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect(),
                ))
            }
            "single_generator" => {
                FamilyDescriptor::Gauge(GaugeFamily::random(rng, group, dim, 1, SCALE))
            }
            "product" => {
                FamilyDescriptor::Gauge(GaugeFamily::random(rng, group, dim, MAX_FACTORS, SCALE))
            }
            "connection" => {
                FamilyDescriptor::Connection(ConnectionFamily::random(rng, group, dim, SCALE))
            }
            "matter" => FamilyDescriptor::Matter(MatterFamily::random(rng, rep_dim, dim, SCALE)),
            "scalar" => FamilyDescriptor::Scalar(ScalarFunction::random(rng, dim, SCALE)),
            other => return Err(GaugeError::UnknownFamily(other.to_string())),
        })
    }
}

/// A sampled field of any kind.
#[derive(Debug, Clone)]
pub enum Sample {
    Gauge(GaugeSample),
    Connection(ConnectionSample),
    Matter(MatterSample),
    Scalar(Field<f64>),
}

pub fn sample_gauge(
    patch: &Patch,
    group: GroupFamily,
    family: &GaugeFamily,
) -> Result<GaugeSample> {
    family.validate(group, patch.dim())?;
    let jets = Field::try_from_fn(patch.clone(), |x| family.jet2_at(group, x))?;
    let field = jets.map(|j| j.g.clone());
    Ok(GaugeSample { field, jets })
}

pub fn sample_connection(
    patch: &Patch,
    group: GroupFamily,
    family: &ConnectionFamily,
) -> Result<ConnectionSample> {
    family.validate(group, patch.dim())?;
    let jets = Field::try_from_fn(patch.clone(), |x| family.jet_at(group, x))?;
    let field = jets.map(|j| j.a.clone());
    Ok(ConnectionSample { field, jets })
}

pub fn sample_matter(patch: &Patch, rep_dim: usize, family: &MatterFamily) -> Result<MatterSample> {
    family.validate(rep_dim, patch.dim())?;
    let jets = Field::from_fn(patch.clone(), |x| family.jet_at(rep_dim, x));
    let field = jets.map(|j| j.phi.clone());
    Ok(MatterSample { field, jets })
}

/// Evaluates a closed-form family on every grid point, returning exact jets
/// alongside the values.
pub fn sample_analytic(
    patch: &Patch,
    group: GroupFamily,
    rep_dim: usize,
    family: &FamilyDescriptor,
) -> Result<Sample> {
    Ok(match family {
        FamilyDescriptor::Gauge(f) => Sample::Gauge(sample_gauge(patch, group, f)?),
        FamilyDescriptor::Connection(f) => Sample::Connection(sample_connection(patch, group, f)?),
        FamilyDescriptor::Matter(f) => Sample::Matter(sample_matter(patch, rep_dim, f)?),
        FamilyDescriptor::Scalar(f) => {
            f.validate(patch.dim())?;
            Sample::Scalar(Field::from_fn(patch.clone(), |x| f.value(x)))
        }
    })
}
