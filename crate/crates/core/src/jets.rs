//! First and second order jets of gauge transformations, matter fields and
//! connections.
//!
//! Gauge jets are stored right-trivialized: a first order jet of a `G`-valued
//! function `g` at a point is `(g, a)` with `a_μ = ∂_μ g g⁻¹`, and a second
//! order jet adds the symmetrized derivatives
//! `s_μν = ½(∂_μ a_ν + ∂_ν a_μ)`. The antisymmetric remainder of `∂a` is
//! fixed by the Maurer-Cartan identity `∂_μ a_ν - ∂_ν a_μ = [a_μ, a_ν]` and is
//! not stored.
//!
//! Jet products come from multiplying sections pointwise and differentiating:
//!
//! ```text
//! (g, a)    · (h, b)    = (gh, a + Ad(g) b)
//! (g, a, s) · (h, b, t) = (gh, a + Ad(g) b,
//!                          s_μν + Ad(g) t_μν + ½([a_μ, Ad(g) b_ν] + [a_ν, Ad(g) b_μ]))
//! ```

use crate::error::{GaugeError, Result};
use crate::lie::{
    adjoint_unchecked, bracket_unchecked, check_dim, AlgebraElement, CMat, GroupElement,
    RepTangent, RepVector,
};
use crate::patch::{partial, Field, Linear};

/// Symmetric `n×n` array stored as its upper triangle (diagonal included).
#[derive(Debug, Clone, PartialEq)]
pub struct SymArray<T> {
    n: usize,
    data: Vec<T>,
}

fn sym_slot(n: usize, mu: usize, nu: usize) -> usize {
    let (i, j) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    i * n - i * (i + 1) / 2 + j
}

impl<T> SymArray<T> {
    /// Builds the array from `f(μ, ν)` evaluated for `μ ≤ ν`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * (n + 1) / 2);
        for mu in 0..n {
            for nu in mu..n {
                data.push(f(mu, nu));
            }
        }
        SymArray { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, mu: usize, nu: usize) -> &T {
        &self.data[sym_slot(self.n, mu, nu)]
    }

    /// Entries of the upper triangle in row-major order.
    pub fn upper(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SymArray<U> {
        SymArray {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

/// Antisymmetric `n×n` array of algebra elements stored as its strict upper
/// triangle. Used for curvature forms and for antisymmetric parts of `∂A`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoForm {
    n: usize,
    mat_dim: usize,
    data: Vec<AlgebraElement>,
}

pub type Curvature = TwoForm;

impl TwoForm {
    /// Builds the form from `f(μ, ν)` evaluated for `μ < ν`.
    pub fn from_fn(
        n: usize,
        mat_dim: usize,
        mut f: impl FnMut(usize, usize) -> AlgebraElement,
    ) -> Self {
        let mut data = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for mu in 0..n {
            for nu in (mu + 1)..n {
                data.push(f(mu, nu));
            }
        }
        TwoForm { n, mat_dim, data }
    }

    pub fn zero(n: usize, mat_dim: usize) -> Self {
        TwoForm::from_fn(n, mat_dim, |_, _| AlgebraElement::zero(mat_dim))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mat_dim(&self) -> usize {
        self.mat_dim
    }

    /// Number of independent components `n(n-1)/2`.
    pub fn num_components(&self) -> usize {
        self.data.len()
    }

    /// Components `F_μν` for `μ < ν` in row-major order.
    pub fn upper(&self) -> &[AlgebraElement] {
        &self.data
    }

    fn slot(&self, mu: usize, nu: usize) -> usize {
        // mu < nu
        mu * self.n - mu * (mu + 1) / 2 + (nu - mu - 1)
    }

    /// `F_μν`, with `F_νμ = -F_μν` and zero diagonal.
    pub fn get(&self, mu: usize, nu: usize) -> AlgebraElement {
        match mu.cmp(&nu) {
            std::cmp::Ordering::Less => self.data[self.slot(mu, nu)].clone(),
            std::cmp::Ordering::Greater => -&self.data[self.slot(nu, mu)],
            std::cmp::Ordering::Equal => AlgebraElement::zero(self.mat_dim),
        }
    }

    pub fn map(&self, f: impl FnMut(&AlgebraElement) -> AlgebraElement) -> TwoForm {
        TwoForm {
            n: self.n,
            mat_dim: self.mat_dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Frobenius norm summed over independent components.
    pub fn distance(&self, other: &TwoForm) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.distance(b))
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(AlgebraElement::norm).sum()
    }
}

/// First order jet `(g, ∂g g⁻¹)` of a gauge transformation.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet1Gauge {
    pub g: GroupElement,
    pub a: Vec<AlgebraElement>,
}

fn sum_distance(xs: &[AlgebraElement], ys: &[AlgebraElement]) -> f64 {
    xs.iter().zip(ys).map(|(x, y)| x.distance(y)).sum()
}

impl Jet1Gauge {
    pub fn new(g: GroupElement, a: Vec<AlgebraElement>) -> Result<Self> {
        for x in &a {
            check_dim(g.dim(), x.dim())?;
        }
        Ok(Jet1Gauge { g, a })
    }

    /// Unit jet `(1, 0)` over an `n`-dimensional patch.
    pub fn unit(mat_dim: usize, n: usize) -> Self {
        Jet1Gauge {
            g: GroupElement::identity(mat_dim),
            a: vec![AlgebraElement::zero(mat_dim); n],
        }
    }

    /// Jet of the constant section `g`.
    pub fn constant(g: GroupElement, n: usize) -> Self {
        let m = g.dim();
        Jet1Gauge {
            g,
            a: vec![AlgebraElement::zero(m); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn mat_dim(&self) -> usize {
        self.g.dim()
    }

    pub fn mul(&self, other: &Jet1Gauge) -> Result<Jet1Gauge> {
        check_dim(self.dim(), other.dim())?;
        check_dim(self.mat_dim(), other.mat_dim())?;
        Ok(Jet1Gauge {
            g: &self.g * &other.g,
            a: self
                .a
                .iter()
                .zip(&other.a)
                .map(|(a, b)| a + &adjoint_unchecked(&self.g, b))
                .collect(),
        })
    }

    /// `(g⁻¹, -Ad(g⁻¹) a)`.
    pub fn inverse(&self) -> Jet1Gauge {
        let ginv = self.g.inverse();
        let a = self
            .a
            .iter()
            .map(|a| -adjoint_unchecked(&ginv, a))
            .collect();
        Jet1Gauge { g: ginv, a }
    }

    pub fn distance(&self, other: &Jet1Gauge) -> f64 {
        self.g.distance(&other.g) + sum_distance(&self.a, &other.a)
    }
}

/// Second order jet `(g, ∂g g⁻¹, ∂(∂g g⁻¹))` with symmetrized second component.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet2Gauge {
    pub g: GroupElement,
    pub a: Vec<AlgebraElement>,
    pub s: SymArray<AlgebraElement>,
}

impl Jet2Gauge {
    pub fn new(
        g: GroupElement,
        a: Vec<AlgebraElement>,
        s: SymArray<AlgebraElement>,
    ) -> Result<Self> {
        check_dim(a.len(), s.dim())?;
        for x in a.iter().chain(s.upper()) {
            check_dim(g.dim(), x.dim())?;
        }
        Ok(Jet2Gauge { g, a, s })
    }

    pub fn unit(mat_dim: usize, n: usize) -> Self {
        Jet2Gauge::constant(GroupElement::identity(mat_dim), n)
    }

    pub fn constant(g: GroupElement, n: usize) -> Self {
        let m = g.dim();
        Jet2Gauge {
            g,
            a: vec![AlgebraElement::zero(m); n],
            s: SymArray::from_fn(n, |_, _| AlgebraElement::zero(m)),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn mat_dim(&self) -> usize {
        self.g.dim()
    }

    pub fn first_order(&self) -> Jet1Gauge {
        Jet1Gauge {
            g: self.g.clone(),
            a: self.a.clone(),
        }
    }

    /// Full derivative `∂_μ a_ν = s_μν + ½[a_μ, a_ν]`, using Maurer-Cartan
    /// for the antisymmetric part.
    pub fn da(&self, mu: usize, nu: usize) -> AlgebraElement {
        self.s.get(mu, nu) + &(bracket_unchecked(&self.a[mu], &self.a[nu]) * 0.5)
    }

    pub fn mul(&self, other: &Jet2Gauge) -> Result<Jet2Gauge> {
        check_dim(self.dim(), other.dim())?;
        check_dim(self.mat_dim(), other.mat_dim())?;
        let ad_b: Vec<AlgebraElement> = other
            .a
            .iter()
            .map(|b| adjoint_unchecked(&self.g, b))
            .collect();
        let a = self.a.iter().zip(&ad_b).map(|(a, b)| a + b).collect();
        let s = SymArray::from_fn(self.dim(), |mu, nu| {
            let mut out = self.s.get(mu, nu) + &adjoint_unchecked(&self.g, other.s.get(mu, nu));
            let cross = bracket_unchecked(&self.a[mu], &ad_b[nu])
                + bracket_unchecked(&self.a[nu], &ad_b[mu]);
            out += &(cross * 0.5);
            out
        });
        Ok(Jet2Gauge {
            g: &self.g * &other.g,
            a,
            s,
        })
    }

    /// `(g⁻¹, -Ad(g⁻¹) a, -Ad(g⁻¹) s)`; the bracket terms of the product
    /// cancel because `Ad(g)b = -a`.
    pub fn inverse(&self) -> Jet2Gauge {
        let ginv = self.g.inverse();
        Jet2Gauge {
            a: self
                .a
                .iter()
                .map(|a| -adjoint_unchecked(&ginv, a))
                .collect(),
            s: self.s.map(|s| -adjoint_unchecked(&ginv, s)),
            g: ginv,
        }
    }

    pub fn distance(&self, other: &Jet2Gauge) -> f64 {
        self.g.distance(&other.g)
            + sum_distance(&self.a, &other.a)
            + sum_distance(self.s.upper(), other.s.upper())
    }
}

pub fn jet1_mul(left: &Jet1Gauge, right: &Jet1Gauge) -> Result<Jet1Gauge> {
    left.mul(right)
}

pub fn jet2_mul(left: &Jet2Gauge, right: &Jet2Gauge) -> Result<Jet2Gauge> {
    left.mul(right)
}

pub fn jet1_inv(j: &Jet1Gauge) -> Jet1Gauge {
    j.inverse()
}

pub fn jet2_inv(j: &Jet2Gauge) -> Jet2Gauge {
    j.inverse()
}

/// First jet `(φ, ∂φ)` of a matter field.
#[derive(Debug, Clone, PartialEq)]
pub struct JetMatter {
    pub phi: RepVector,
    pub dphi: Vec<RepTangent>,
}

impl JetMatter {
    pub fn new(phi: RepVector, dphi: Vec<RepTangent>) -> Result<Self> {
        for d in &dphi {
            check_dim(phi.dim(), d.dim())?;
        }
        Ok(JetMatter { phi, dphi })
    }

    pub fn zero(rep_dim: usize, n: usize) -> Self {
        JetMatter {
            phi: RepVector::zero(rep_dim),
            dphi: vec![RepTangent::zero(rep_dim); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.dphi.len()
    }

    pub fn distance(&self, other: &JetMatter) -> f64 {
        self.phi.distance(&other.phi)
            + self
                .dphi
                .iter()
                .zip(&other.dphi)
                .map(|(x, y)| x.distance(y))
                .sum::<f64>()
    }
}

/// Vertical tangent vector `δφ` to the matter bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct Variation {
    pub dphi: RepTangent,
}

/// First jet `(A, ∂A)` of a connection, `da[μ][ν] = ∂_μ A_ν`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetConnection {
    pub a: Vec<AlgebraElement>,
    da: Vec<AlgebraElement>,
}

impl JetConnection {
    /// `da` lists `∂_μ A_ν` in row-major order (μ slowest).
    pub fn new(a: Vec<AlgebraElement>, da: Vec<AlgebraElement>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(GaugeError::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        check_dim(n * n, da.len())?;
        let m = a[0].dim();
        for x in a.iter().chain(&da) {
            check_dim(m, x.dim())?;
        }
        Ok(JetConnection { a, da })
    }

    pub fn from_fn(
        a: Vec<AlgebraElement>,
        mut da: impl FnMut(usize, usize) -> AlgebraElement,
    ) -> Result<Self> {
        let n = a.len();
        let entries = (0..n * n).map(|k| da(k / n, k % n)).collect();
        JetConnection::new(a, entries)
    }

    pub fn zero(mat_dim: usize, n: usize) -> Self {
        JetConnection {
            a: vec![AlgebraElement::zero(mat_dim); n],
            da: vec![AlgebraElement::zero(mat_dim); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn mat_dim(&self) -> usize {
        self.a[0].dim()
    }

    /// `∂_μ A_ν`.
    pub fn da(&self, mu: usize, nu: usize) -> &AlgebraElement {
        &self.da[mu * self.dim() + nu]
    }

    pub fn da_entries(&self) -> &[AlgebraElement] {
        &self.da
    }

    /// Reassembles `∂A = sym + antisym`.
    pub fn merge(
        a: Vec<AlgebraElement>,
        sym: &SymArray<AlgebraElement>,
        antisym: &TwoForm,
    ) -> Result<Self> {
        check_dim(a.len(), sym.dim())?;
        check_dim(a.len(), antisym.dim())?;
        JetConnection::from_fn(a, |mu, nu| sym.get(mu, nu) + &antisym.get(mu, nu))
    }

    pub fn distance(&self, other: &JetConnection) -> f64 {
        sum_distance(&self.a, &other.a) + sum_distance(&self.da, &other.da)
    }
}

/// Symmetric part `∂_(μ A_ν)` and antisymmetric part `∂_[μ A_ν]` of a
/// connection jet.
pub fn split_jet_connection(jc: &JetConnection) -> (SymArray<AlgebraElement>, TwoForm) {
    let n = jc.dim();
    let sym = SymArray::from_fn(n, |mu, nu| (jc.da(mu, nu) + jc.da(nu, mu)) * 0.5);
    let antisym = TwoForm::from_fn(n, jc.mat_dim(), |mu, nu| {
        (jc.da(mu, nu) - jc.da(nu, mu)) * 0.5
    });
    (sym, antisym)
}

/// Curvature map `F_μν = ∂_μ A_ν - ∂_ν A_μ + [A_μ, A_ν]`.
///
/// For `n = 1` the result has no components.
pub fn curvature(jc: &JetConnection) -> Curvature {
    TwoForm::from_fn(jc.dim(), jc.mat_dim(), |mu, nu| {
        let mut f = jc.da(mu, nu) - jc.da(nu, mu);
        f += &bracket_unchecked(&jc.a[mu], &jc.a[nu]);
        f
    })
}

/// How the jets in a [`JetField`] were obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JetOrigin {
    /// Exact jets from a closed-form family.
    Analytic,
    /// Central differences with the given (largest) grid spacing.
    Numerical { h: f64 },
}

impl JetOrigin {
    /// Error bound `c·h²` for numerical jets, zero for analytic ones.
    pub fn tolerance(&self, c: f64) -> f64 {
        match self {
            JetOrigin::Analytic => 0.0,
            JetOrigin::Numerical { h } => c * h * h,
        }
    }
}

/// A field of jets together with its provenance.
#[derive(Debug, Clone)]
pub struct JetField<J> {
    pub field: Field<J>,
    pub origin: JetOrigin,
}

fn max_spacing(field: &Field<impl Sized>) -> f64 {
    field.patch().spacing().iter().cloned().fold(0.0, f64::max)
}

/// `a_μ = ∂_μ g · g⁻¹` by central differences.
pub fn jet1_of(gfield: &Field<GroupElement>) -> Result<JetField<Jet1Gauge>> {
    let n = gfield.patch().dim();
    let matrices = gfield.map(|g| g.matrix().clone());
    let derivs: Vec<Field<CMat>> = (0..n)
        .map(|mu| partial(&matrices, mu))
        .collect::<Result<_>>()?;
    let margin = gfield.margin() + 1;
    let patch = gfield.patch();
    let values = (0..patch.len())
        .map(|i| {
            let g = gfield.at(i).clone();
            let a = if patch.is_interior(i, margin) {
                let ginv = g.matrix().adjoint();
                derivs
                    .iter()
                    .map(|d| AlgebraElement::from_matrix_unchecked(d.at(i) * &ginv))
                    .collect()
            } else {
                vec![AlgebraElement::zero(g.dim()); n]
            };
            Jet1Gauge { g, a }
        })
        .collect();
    Ok(JetField {
        field: Field::with_margin(patch.clone(), values, margin),
        origin: JetOrigin::Numerical {
            h: max_spacing(gfield),
        },
    })
}

/// Second jets by differencing the `a`-field of [`jet1_of`] once more and
/// symmetrizing.
pub fn jet2_of(gfield: &Field<GroupElement>) -> Result<JetField<Jet2Gauge>> {
    let jet1 = jet1_of(gfield)?;
    let n = gfield.patch().dim();
    let afield = jet1.field.map(|j| j.a.clone());
    let da: Vec<Field<Vec<AlgebraElement>>> = (0..n)
        .map(|mu| partial(&afield, mu))
        .collect::<Result<_>>()?;
    let margin = afield.margin() + 1;
    let patch = gfield.patch();
    let values = (0..patch.len())
        .map(|i| {
            let j = jet1.field.at(i);
            let m = j.g.dim();
            let s = if patch.is_interior(i, margin) {
                SymArray::from_fn(n, |mu, nu| (&da[mu].at(i)[nu] + &da[nu].at(i)[mu]) * 0.5)
            } else {
                SymArray::from_fn(n, |_, _| AlgebraElement::zero(m))
            };
            Jet2Gauge {
                g: j.g.clone(),
                a: j.a.clone(),
                s,
            }
        })
        .collect();
    Ok(JetField {
        field: Field::with_margin(patch.clone(), values, margin),
        origin: jet1.origin,
    })
}

/// Full finite-difference derivative table `∂_μ a_ν` of a first-jet field,
/// valid one layer further in than the jets themselves.
pub fn da_of(jets: &Field<Jet1Gauge>) -> Result<Field<Vec<Vec<AlgebraElement>>>> {
    let n = jets.patch().dim();
    let afield = jets.map(|j| j.a.clone());
    let da: Vec<Field<Vec<AlgebraElement>>> = (0..n)
        .map(|mu| partial(&afield, mu))
        .collect::<Result<_>>()?;
    let margin = afield.margin() + 1;
    let values = (0..jets.patch().len())
        .map(|i| da.iter().map(|d| d.at(i).clone()).collect())
        .collect();
    Ok(Field::with_margin(jets.patch().clone(), values, margin))
}

/// `(φ, ∂φ)` by central differences.
pub fn matter_jet_of(phi: &Field<RepVector>) -> Result<JetField<JetMatter>> {
    let n = phi.patch().dim();
    let derivs: Vec<Field<RepVector>> = (0..n).map(|mu| partial(phi, mu)).collect::<Result<_>>()?;
    let margin = phi.margin() + 1;
    let values = (0..phi.patch().len())
        .map(|i| JetMatter {
            phi: phi.at(i).clone(),
            dphi: derivs.iter().map(|d| d.at(i).clone().into()).collect(),
        })
        .collect();
    Ok(JetField {
        field: Field::with_margin(phi.patch().clone(), values, margin),
        origin: JetOrigin::Numerical {
            h: max_spacing(phi),
        },
    })
}

/// `(A, ∂A)` by central differences.
pub fn connection_jet_of(a: &Field<Vec<AlgebraElement>>) -> Result<JetField<JetConnection>> {
    let n = a.patch().dim();
    let derivs: Vec<Field<Vec<AlgebraElement>>> =
        (0..n).map(|mu| partial(a, mu)).collect::<Result<_>>()?;
    let margin = a.margin() + 1;
    let values = (0..a.patch().len())
        .map(|i| {
            let comps = a.at(i).clone();
            let da = (0..n * n)
                .map(|k| derivs[k / n].at(i)[k % n].clone())
                .collect();
            JetConnection { a: comps, da }
        })
        .collect();
    Ok(JetField {
        field: Field::with_margin(a.patch().clone(), values, margin),
        origin: JetOrigin::Numerical { h: max_spacing(a) },
    })
}

impl Linear for JetMatter {
    fn zero_like(&self) -> Self {
        JetMatter::zero(self.phi.dim(), self.dim())
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        JetMatter {
            phi: self.phi.scaled_difference(&other.phi, factor),
            dphi: self.dphi.scaled_difference(&other.dphi, factor),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{exp, sample_algebra, sample_group, GroupFamily};
    use crate::C64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_jet2(rng: &mut ChaCha8Rng, fam: GroupFamily, n: usize) -> Jet2Gauge {
        let g = sample_group(rng, fam);
        let a = (0..n).map(|_| sample_algebra(rng, fam)).collect();
        let s = SymArray::from_fn(n, |_, _| sample_algebra(rng, fam));
        Jet2Gauge { g, a, s }
    }

    #[test]
    fn sym_array_storage_is_symmetric() {
        let s = SymArray::from_fn(4, |mu, nu| 10 * mu + nu);
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(s.get(mu, nu), s.get(nu, mu));
            }
        }
        assert_eq!(*s.get(3, 1), 13);
        assert_eq!(s.upper().len(), 10);
    }

    #[test]
    fn two_form_antisymmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = TwoForm::from_fn(4, 2, |_, _| sample_algebra(&mut rng, GroupFamily::SU2));
        assert_eq!(f.num_components(), 6);
        for mu in 0..4 {
            assert_eq!(f.get(mu, mu).norm(), 0.0);
            for nu in 0..4 {
                assert_eq!(f.get(mu, nu), -f.get(nu, mu));
            }
        }
    }

    #[test]
    fn jet1_unit_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let j = random_jet2(&mut rng, GroupFamily::SU3, 3).first_order();
        let unit = Jet1Gauge::unit(3, 3);
        assert!(unit.mul(&j).unwrap().distance(&j) < 1e-15);
        assert!(j.mul(&unit).unwrap().distance(&j) < 1e-14);
        assert!(j.mul(&jet1_inv(&j)).unwrap().distance(&unit) < 1e-13);
        assert!(jet1_inv(&j).mul(&j).unwrap().distance(&unit) < 1e-13);
    }

    #[test]
    fn jet2_unit_inverse_and_abelian_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let j = random_jet2(&mut rng, GroupFamily::SU2, 2);
        let unit = Jet2Gauge::unit(2, 2);
        assert!(unit.mul(&j).unwrap().distance(&j) < 1e-15);
        assert!(j.mul(&unit).unwrap().distance(&j) < 1e-14);
        assert!(j.mul(&jet2_inv(&j)).unwrap().distance(&unit) < 1e-13);

        let l = random_jet2(&mut rng, GroupFamily::U1, 3);
        let r = random_jet2(&mut rng, GroupFamily::U1, 3);
        let p = l.mul(&r).unwrap();
        for mu in 0..3 {
            for nu in mu..3 {
                let sum = l.s.get(mu, nu) + r.s.get(mu, nu);
                assert!(p.s.get(mu, nu).distance(&sum) < 1e-15);
            }
        }
    }

    #[test]
    fn jet_mul_dimension_mismatch() {
        let a = Jet1Gauge::unit(2, 2);
        let b = Jet1Gauge::unit(2, 3);
        let c = Jet1Gauge::unit(3, 2);
        assert!(a.mul(&b).is_err());
        assert!(a.mul(&c).is_err());
    }

    #[test]
    fn split_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let fam = GroupFamily::SU2;
        let a: Vec<_> = (0..3).map(|_| sample_algebra(&mut rng, fam)).collect();
        let base: Vec<_> = (0..9).map(|_| sample_algebra(&mut rng, fam)).collect();

        let sym_only = JetConnection::from_fn(a.clone(), |mu, nu| {
            &base[3 * mu.min(nu) + mu.max(nu)] + &AlgebraElement::zero(2)
        })
        .unwrap();
        let (_, anti) = split_jet_connection(&sym_only);
        assert_eq!(anti.norm(), 0.0);

        let anti_only = JetConnection::from_fn(a.clone(), |mu, nu| match mu.cmp(&nu) {
            std::cmp::Ordering::Less => base[3 * mu + nu].clone(),
            std::cmp::Ordering::Greater => -&base[3 * nu + mu],
            std::cmp::Ordering::Equal => AlgebraElement::zero(2),
        })
        .unwrap();
        let (sym, _) = split_jet_connection(&anti_only);
        assert!(sym.upper().iter().all(|s| s.norm() == 0.0));

        let generic = JetConnection::new(a.clone(), base.clone()).unwrap();
        let (sym, anti) = split_jet_connection(&generic);
        let merged = JetConnection::merge(a, &sym, &anti).unwrap();
        assert!(merged.distance(&generic) < 1e-15);
    }

    #[test]
    fn split_is_exact_on_dyadic_entries() {
        let fam = GroupFamily::SU2;
        let e = fam.basis();
        let a = vec![AlgebraElement::zero(2); 2];
        let da = vec![&e[0] * 0.5, &e[1] * 0.25, &e[2] * 2.0, &e[0] * -1.0];
        let jc = JetConnection::new(a.clone(), da).unwrap();
        let (sym, anti) = split_jet_connection(&jc);
        assert_eq!(JetConnection::merge(a, &sym, &anti).unwrap(), jc);
    }

    #[test]
    fn curvature_examples() {
        let jc = JetConnection::zero(2, 3);
        assert_eq!(curvature(&jc).norm(), 0.0);

        // U(1), A_μ = i(c_μ + m_μν x^ν): ∂_μ A_ν = i m_νμ
        let m = [[0.3, -1.2], [0.7, 2.0]];
        let c = [0.1, -0.4];
        let i = |x: f64| {
            AlgebraElement::from_matrix_unchecked(CMat::from_element(1, 1, C64::new(0.0, x)))
        };
        let jc = JetConnection::from_fn(vec![i(c[0]), i(c[1])], |mu, nu| i(m[nu][mu])).unwrap();
        let f = curvature(&jc);
        // F_01 = ∂_0 A_1 - ∂_1 A_0 = i(m_10 - m_01)
        assert!(f.get(0, 1).distance(&i(m[1][0] - m[0][1])) < 1e-15);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let jc = JetConnection::new(
            vec![sample_algebra(&mut rng, GroupFamily::SU2)],
            vec![sample_algebra(&mut rng, GroupFamily::SU2)],
        )
        .unwrap();
        assert_eq!(curvature(&jc).num_components(), 0);
    }

    #[test]
    fn jet2_da_reproduces_maurer_cartan() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let j = random_jet2(&mut rng, GroupFamily::SU3, 3);
        for mu in 0..3 {
            for nu in 0..3 {
                let lhs = j.da(mu, nu) - j.da(nu, mu);
                let rhs = bracket_unchecked(&j.a[mu], &j.a[nu]);
                assert!(lhs.distance(&rhs) < 1e-14);
            }
        }
    }

    #[test]
    fn jet1_of_constant_field() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g0 = exp(&sample_algebra(&mut rng, GroupFamily::SU2));
        let patch = crate::patch::Patch::centered(2, 9, 0.1).unwrap();
        let field = Field::from_fn(patch, |_| g0.clone());
        let jets = jet2_of(&field).unwrap();
        for i in jets.field.valid_indices() {
            let j = jets.field.at(i);
            assert_eq!(j.g, g0);
            assert!(j.a.iter().all(|a| a.norm() == 0.0));
            assert!(j.s.upper().iter().all(|s| s.norm() == 0.0));
        }
        assert_eq!(jets.field.margin(), 2);
        assert_eq!(jets.origin.tolerance(10.0), 10.0 * 0.1 * 0.1);
    }
}
