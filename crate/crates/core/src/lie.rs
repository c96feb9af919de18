//! Compact matrix Lie groups, their Lie algebras and linear representations.
//!
//! Group elements are unitary `N×N` complex matrices (with unit determinant
//! for the special unitary families), algebra elements are anti-hermitian
//! (and traceless for the special families). The representation space `Q` is
//! always a finite-dimensional complex vector space: either the fundamental
//! representation `ℂᴺ` or the complexified adjoint representation, written in
//! coordinates of an orthonormal basis of the algebra.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GaugeError, Result};
use crate::C64;

pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

/// Tolerance for the unitarity / anti-hermiticity / determinant checks.
pub const ELEMENT_TOL: f64 = 1e-12;

/// Structure group family. Serialized by name (`"U1"`, `"SU2"`, `"SU3"`,
/// `"SU5"`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupFamily {
    U1,
    SU2,
    SU3,
    SUN(usize),
}

impl GroupFamily {
    /// Size `N` of the defining matrices.
    pub fn matrix_dim(self) -> usize {
        match self {
            GroupFamily::U1 => 1,
            GroupFamily::SU2 => 2,
            GroupFamily::SU3 => 3,
            GroupFamily::SUN(n) => n,
        }
    }

    pub fn is_special(self) -> bool {
        !matches!(self, GroupFamily::U1)
    }

    /// Real dimension of the Lie algebra.
    pub fn algebra_dim(self) -> usize {
        match self {
            GroupFamily::U1 => 1,
            other => {
                let n = other.matrix_dim();
                n * n - 1
            }
        }
    }

    pub fn is_abelian(self) -> bool {
        matches!(self, GroupFamily::U1)
    }

    pub fn validate(self) -> Result<()> {
        if let GroupFamily::SUN(n) = self {
            if n < 2 {
                return Err(GaugeError::InvalidSpec(format!("SU({n}) needs N >= 2")));
            }
        }
        Ok(())
    }

    /// `1 / tr(e_a e_a)`, so that `x_a = coord_factor · tr(e_a X)`.
    pub fn coord_factor(self) -> f64 {
        if self.is_special() {
            -2.0
        } else {
            -1.0
        }
    }

    /// Orthogonal basis `e_a` of the algebra. For U(1) it is the single
    /// generator `i`; for the special unitary families `tr(e_a e_b) = -½ δ_ab`.
    ///
    /// For the special unitary families this is `e_a = -(i/2) λ_a` with the
    /// generalized Gell-Mann matrices `λ_a`; for SU(2) it gives `-(i/2) σ_a`.
    pub fn basis(self) -> Vec<AlgebraElement> {
        let n = self.matrix_dim();
        if !self.is_special() {
            return vec![AlgebraElement(CMat::from_element(1, 1, C64::i()))];
        }
        let half_i = C64::new(0.0, -0.5);
        let mut out = Vec::with_capacity(n * n - 1);
        // symmetric and antisymmetric off-diagonal generators
        for j in 0..n {
            for k in (j + 1)..n {
                let mut sym = CMat::zeros(n, n);
                sym[(j, k)] = C64::new(1.0, 0.0);
                sym[(k, j)] = C64::new(1.0, 0.0);
                out.push(AlgebraElement(sym * half_i));

                let mut anti = CMat::zeros(n, n);
                anti[(j, k)] = C64::new(0.0, -1.0);
                anti[(k, j)] = C64::new(0.0, 1.0);
                out.push(AlgebraElement(anti * half_i));
            }
        }
        // diagonal generators
        for l in 1..n {
            let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
            let mut diag = CMat::zeros(n, n);
            for j in 0..l {
                diag[(j, j)] = C64::new(norm, 0.0);
            }
            diag[(l, l)] = C64::new(-(l as f64) * norm, 0.0);
            out.push(AlgebraElement(diag * half_i));
        }
        out
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::U1 => write!(f, "U1"),
            GroupFamily::SU2 => write!(f, "SU2"),
            GroupFamily::SU3 => write!(f, "SU3"),
            GroupFamily::SUN(n) => write!(f, "SU{n}"),
        }
    }
}

impl From<GroupFamily> for String {
    fn from(f: GroupFamily) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for GroupFamily {
    type Error = GaugeError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl std::str::FromStr for GroupFamily {
    type Err = GaugeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U1" => Ok(GroupFamily::U1),
            "SU2" => Ok(GroupFamily::SU2),
            "SU3" => Ok(GroupFamily::SU3),
            other => other
                .strip_prefix("SU")
                .and_then(|n| n.parse::<usize>().ok())
                .map(GroupFamily::SUN)
                .ok_or_else(|| GaugeError::InvalidSpec(format!("unknown group family `{s}`"))),
        }
    }
}

/// Which linear representation plays the role of the target space `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Representation {
    Fundamental,
    Adjoint,
}

/// Structure group together with the dimension of the representation space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub rep_dim: usize,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, rep_dim: usize) -> Result<Self> {
        let spec = GroupSpec { family, rep_dim };
        spec.validate()?;
        Ok(spec)
    }

    pub fn fundamental(family: GroupFamily) -> Self {
        GroupSpec {
            family,
            rep_dim: family.matrix_dim(),
        }
    }

    pub fn adjoint(family: GroupFamily) -> Self {
        GroupSpec {
            family,
            rep_dim: family.algebra_dim(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.family.validate()?;
        if self.rep_dim == 0 {
            return Err(GaugeError::InvalidSpec("rep_dim must be >= 1".into()));
        }
        self.representation().map(|_| ())
    }

    /// Fundamental when `rep_dim = N`, adjoint when `rep_dim = dim 𝔤`.
    pub fn representation(&self) -> Result<Representation> {
        if self.rep_dim == self.family.matrix_dim() {
            Ok(Representation::Fundamental)
        } else if self.rep_dim == self.family.algebra_dim() {
            Ok(Representation::Adjoint)
        } else {
            Err(GaugeError::InvalidSpec(format!(
                "rep_dim {} is neither the fundamental ({}) nor the adjoint ({}) dimension of {}",
                self.rep_dim,
                self.family.matrix_dim(),
                self.family.algebra_dim(),
                self.family
            )))
        }
    }

    pub fn n(&self) -> usize {
        self.family.matrix_dim()
    }

    pub fn rep(&self) -> Result<Rep> {
        Rep::new(*self)
    }
}

fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn identity_deviation(m: &CMat) -> f64 {
    let n = m.nrows();
    let prod = m.adjoint() * m;
    frobenius(&(prod - CMat::identity(n, n)))
}

macro_rules! linear_matrix_ops {
    ($ty:ident) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty(self.0 + rhs.0)
            }
        }
        impl<'a> Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty(&self.0 + &rhs.0)
            }
        }
        impl AddAssign<&$ty> for $ty {
            fn add_assign(&mut self, rhs: &$ty) {
                self.0 += &rhs.0;
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty(self.0 - rhs.0)
            }
        }
        impl<'a> Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty(&self.0 - &rhs.0)
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(-self.0)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(-&self.0)
            }
        }
        impl Mul<f64> for $ty {
            type Output = $ty;
            fn mul(self, rhs: f64) -> $ty {
                $ty(self.0 * C64::new(rhs, 0.0))
            }
        }
        impl Mul<f64> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: f64) -> $ty {
                $ty(&self.0 * C64::new(rhs, 0.0))
            }
        }
    };
}

/// Element of the structure group as a unitary matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement(pub(crate) CMat);

impl GroupElement {
    /// Validating constructor.
    pub fn new(m: CMat, family: GroupFamily) -> Result<Self> {
        let n = family.matrix_dim();
        if m.nrows() != n || m.ncols() != n {
            return Err(GaugeError::DimensionMismatch {
                expected: n,
                found: m.nrows(),
            });
        }
        let g = GroupElement(m);
        let dev = g.deviation(family);
        if dev > ELEMENT_TOL {
            return Err(GaugeError::InvalidElement {
                what: "group element",
                deviation: dev,
            });
        }
        Ok(g)
    }

    pub fn from_matrix_unchecked(m: CMat) -> Self {
        GroupElement(m)
    }

    pub fn identity(n: usize) -> Self {
        GroupElement(CMat::identity(n, n))
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn into_matrix(self) -> CMat {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// Inverse as the conjugate transpose.
    pub fn inverse(&self) -> GroupElement {
        GroupElement(self.0.adjoint())
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        check_dim(self.dim(), other.dim())?;
        Ok(GroupElement(&self.0 * &other.0))
    }

    /// Largest violation of `g†g = 1` and (for special families) `det g = 1`.
    pub fn deviation(&self, family: GroupFamily) -> f64 {
        let unit = identity_deviation(&self.0);
        if family.is_special() {
            let det = self.0.determinant();
            unit.max((det - C64::new(1.0, 0.0)).norm())
        } else {
            unit
        }
    }

    pub fn distance(&self, other: &GroupElement) -> f64 {
        frobenius(&(&self.0 - &other.0))
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        GroupElement(&self.0 * &rhs.0)
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        GroupElement(self.0 * rhs.0)
    }
}

/// Element of the Lie algebra as an anti-hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement(pub(crate) CMat);

linear_matrix_ops!(AlgebraElement);

impl AlgebraElement {
    pub fn new(m: CMat, family: GroupFamily) -> Result<Self> {
        let n = family.matrix_dim();
        if m.nrows() != n || m.ncols() != n {
            return Err(GaugeError::DimensionMismatch {
                expected: n,
                found: m.nrows(),
            });
        }
        let x = AlgebraElement(m);
        let dev = x.deviation(family);
        if dev > ELEMENT_TOL {
            return Err(GaugeError::InvalidElement {
                what: "algebra element",
                deviation: dev,
            });
        }
        Ok(x)
    }

    pub fn from_matrix_unchecked(m: CMat) -> Self {
        AlgebraElement(m)
    }

    pub fn zero(n: usize) -> Self {
        AlgebraElement(CMat::zeros(n, n))
    }

    /// `Σ coeffs[a] · basis[a]`.
    pub fn from_coords(family: GroupFamily, coords: &[f64]) -> Result<Self> {
        let basis = family.basis();
        check_dim(basis.len(), coords.len())?;
        let n = family.matrix_dim();
        let mut m = CMat::zeros(n, n);
        for (e, c) in basis.iter().zip(coords) {
            m += &e.0 * C64::new(*c, 0.0);
        }
        Ok(AlgebraElement(m))
    }

    /// Coordinates in the basis, `x_a = c tr(e_a X)` with `c` the
    /// [`GroupFamily::coord_factor`].
    pub fn coords(&self, family: GroupFamily) -> Vec<f64> {
        family
            .basis()
            .iter()
            .map(|e| ((&e.0 * &self.0).trace() * family.coord_factor()).re)
            .collect()
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn into_matrix(self) -> CMat {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn norm(&self) -> f64 {
        frobenius(&self.0)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Positive definite inner product `-tr(XY)`.
    pub fn inner(&self, other: &AlgebraElement) -> f64 {
        -(&self.0 * &other.0).trace().re
    }

    pub fn deviation(&self, family: GroupFamily) -> f64 {
        let herm = frobenius(&(self.0.adjoint() + &self.0));
        if family.is_special() {
            herm.max(self.0.trace().norm())
        } else {
            herm
        }
    }

    pub fn distance(&self, other: &AlgebraElement) -> f64 {
        frobenius(&(&self.0 - &other.0))
    }
}

/// Point of the representation space.
#[derive(Debug, Clone, PartialEq)]
pub struct RepVector(pub(crate) CVec);

/// Tangent vector to the representation space (identified with the space itself).
#[derive(Debug, Clone, PartialEq)]
pub struct RepTangent(pub(crate) CVec);

macro_rules! linear_vector_ops {
    ($ty:ident) => {
        impl $ty {
            pub fn new(v: CVec) -> Self {
                $ty(v)
            }
            pub fn from_slice(entries: &[C64]) -> Self {
                $ty(CVec::from_column_slice(entries))
            }
            pub fn zero(k: usize) -> Self {
                $ty(CVec::zeros(k))
            }
            pub fn vector(&self) -> &CVec {
                &self.0
            }
            pub fn into_vector(self) -> CVec {
                self.0
            }
            pub fn dim(&self) -> usize {
                self.0.len()
            }
            pub fn norm(&self) -> f64 {
                self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
            }
            pub fn norm_sqr(&self) -> f64 {
                self.0.iter().map(|z| z.norm_sqr()).sum()
            }
            pub fn distance(&self, other: &$ty) -> f64 {
                (&self.0 - &other.0)
                    .iter()
                    .map(|z| z.norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            }
            pub fn is_finite(&self) -> bool {
                self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
            }
            pub fn scale(&self, alpha: C64) -> $ty {
                $ty(&self.0 * alpha)
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                $ty(self.0 + rhs.0)
            }
        }
        impl<'a> Add<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty(&self.0 + &rhs.0)
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                $ty(self.0 - rhs.0)
            }
        }
        impl<'a> Sub<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty(&self.0 - &rhs.0)
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty(-self.0)
            }
        }
        impl Mul<f64> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: f64) -> $ty {
                $ty(&self.0 * C64::new(rhs, 0.0))
            }
        }
    };
}

linear_vector_ops!(RepVector);
linear_vector_ops!(RepTangent);

impl From<RepTangent> for RepVector {
    fn from(t: RepTangent) -> Self {
        RepVector(t.0)
    }
}

impl From<RepVector> for RepTangent {
    fn from(v: RepVector) -> Self {
        RepTangent(v.0)
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(GaugeError::DimensionMismatch { expected, found })
    }
}

/// Matrix exponential (nalgebra's Padé scaling and squaring).
pub fn expm(m: &CMat) -> CMat {
    m.exp()
}

pub fn exp(x: &AlgebraElement) -> GroupElement {
    GroupElement(expm(&x.0))
}

/// Commutator `XY - YX`.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    check_dim(x.dim(), y.dim())?;
    Ok(bracket_unchecked(x, y))
}

pub(crate) fn bracket_unchecked(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    AlgebraElement(&x.0 * &y.0 - &y.0 * &x.0)
}

/// `Ad(g) X = g X g⁻¹`.
pub fn adjoint(g: &GroupElement, x: &AlgebraElement) -> Result<AlgebraElement> {
    check_dim(g.dim(), x.dim())?;
    Ok(adjoint_unchecked(g, x))
}

pub(crate) fn adjoint_unchecked(g: &GroupElement, x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement(&g.0 * &x.0 * g.0.adjoint())
}

/// A linear representation of the structure group on `ℂᵏ`.
#[derive(Debug, Clone)]
pub struct Rep {
    spec: GroupSpec,
    kind: Representation,
    basis: Vec<AlgebraElement>,
}

impl Rep {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        spec.validate()?;
        let kind = spec.representation()?;
        let basis = match kind {
            Representation::Adjoint => spec.family.basis(),
            Representation::Fundamental => Vec::new(),
        };
        Ok(Rep { spec, kind, basis })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn kind(&self) -> Representation {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.spec.rep_dim
    }

    fn from_coords(&self, q: &CVec) -> CMat {
        let n = self.spec.n();
        let mut m = CMat::zeros(n, n);
        for (e, c) in self.basis.iter().zip(q.iter()) {
            m += &e.0 * *c;
        }
        m
    }

    fn to_coords(&self, m: &CMat) -> CVec {
        CVec::from_iterator(
            self.basis.len(),
            self.basis
                .iter()
                .map(|e| (&e.0 * m).trace() * C64::new(self.spec.family.coord_factor(), 0.0)),
        )
    }

    fn check_group(&self, n: usize) -> Result<()> {
        check_dim(self.spec.n(), n)
    }

    fn apply_group(&self, g: &GroupElement, v: &CVec) -> CVec {
        match self.kind {
            Representation::Fundamental => &g.0 * v,
            Representation::Adjoint => {
                let m = self.from_coords(v);
                self.to_coords(&(&g.0 * m * g.0.adjoint()))
            }
        }
    }

    fn apply_algebra(&self, x: &AlgebraElement, v: &CVec) -> CVec {
        match self.kind {
            Representation::Fundamental => &x.0 * v,
            Representation::Adjoint => {
                let m = self.from_coords(v);
                self.to_coords(&(&x.0 * &m - &m * &x.0))
            }
        }
    }

    /// `g · q`.
    pub fn act(&self, g: &GroupElement, q: &RepVector) -> Result<RepVector> {
        self.check_group(g.dim())?;
        check_dim(self.dim(), q.dim())?;
        Ok(RepVector(self.apply_group(g, &q.0)))
    }

    /// `g · q̇` on the tangent space.
    pub fn act_tangent(&self, g: &GroupElement, v: &RepTangent) -> Result<RepTangent> {
        self.check_group(g.dim())?;
        check_dim(self.dim(), v.dim())?;
        Ok(RepTangent(self.apply_group(g, &v.0)))
    }

    /// Fundamental vector field `X_Q(q) = d/dt|₀ exp(tX)·q`.
    pub fn fundamental_vector_field(
        &self,
        x: &AlgebraElement,
        q: &RepVector,
    ) -> Result<RepTangent> {
        self.check_group(x.dim())?;
        check_dim(self.dim(), q.dim())?;
        Ok(RepTangent(self.apply_algebra(x, &q.0)))
    }

    /// Action of the tangent group `TG ≅ G × 𝔤` on `TQ`, with `X = ġ g⁻¹`:
    /// `(g, X)·(q, q̇) = (g·q, g·q̇ + X_Q(g·q))`.
    pub fn tangent_act(
        &self,
        g: &GroupElement,
        x: &AlgebraElement,
        q: &RepVector,
        qdot: &RepTangent,
    ) -> Result<(RepVector, RepTangent)> {
        let gq = self.act(g, q)?;
        let gqdot = self.act_tangent(g, qdot)?;
        let vf = self.fundamental_vector_field(x, &gq)?;
        Ok((gq, gqdot + vf))
    }

    /// Matrix of `g` in this representation.
    pub fn matrix(&self, g: &GroupElement) -> Result<CMat> {
        self.check_group(g.dim())?;
        let k = self.dim();
        let mut out = CMat::zeros(k, k);
        for j in 0..k {
            let mut e = CVec::zeros(k);
            e[j] = C64::new(1.0, 0.0);
            out.set_column(j, &self.apply_group(g, &e));
        }
        Ok(out)
    }
}

/// Free-function form of [`Rep::act`].
pub fn rep_act(rep: &Rep, g: &GroupElement, q: &RepVector) -> Result<RepVector> {
    rep.act(g, q)
}

pub fn fundamental_vector_field(
    rep: &Rep,
    x: &AlgebraElement,
    q: &RepVector,
) -> Result<RepTangent> {
    rep.fundamental_vector_field(x, q)
}

pub fn tangent_act(
    rep: &Rep,
    g: &GroupElement,
    x: &AlgebraElement,
    q: &RepVector,
    qdot: &RepTangent,
) -> Result<(RepVector, RepTangent)> {
    rep.tangent_act(g, x, q, qdot)
}

/// Random algebra element whose matrix entries have real and imaginary
/// parts in `[-1, 1]`.
pub fn sample_algebra<R: Rng + ?Sized>(rng: &mut R, family: GroupFamily) -> AlgebraElement {
    let n = family.matrix_dim();
    let mut m = CMat::zeros(n, n);
    for j in 0..n {
        for k in (j + 1)..n {
            let z = C64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
            m[(j, k)] = z;
            m[(k, j)] = -z.conj();
        }
    }
    let mut diag: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..=1.0)).collect();
    if family.is_special() {
        let rest: f64 = diag[..n - 1].iter().sum();
        diag[n - 1] = -rest;
        let peak = rest.abs();
        if peak > 1.0 {
            diag.iter_mut().for_each(|d| *d /= peak);
        }
    }
    for (j, d) in diag.into_iter().enumerate() {
        m[(j, j)] = C64::new(0.0, d);
    }
    AlgebraElement(m)
}

pub fn sample_group<R: Rng + ?Sized>(rng: &mut R, family: GroupFamily) -> GroupElement {
    exp(&sample_algebra(rng, family))
}

/// Random point of the representation space with entries in the unit box.
pub fn sample_rep_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> RepVector {
    RepVector(CVec::from_fn(dim, |_, _| {
        C64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
    }))
}

pub fn sample_rep_tangent<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> RepTangent {
    sample_rep_vector(rng, dim).into()
}

/// Deterministic random algebra element for a given seed.
pub fn random_algebra_element(seed: u64, spec: &GroupSpec) -> AlgebraElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_algebra(&mut rng, spec.family)
}

/// Deterministic random group element, `exp` of [`random_algebra_element`].
pub fn random_group_element(seed: u64, spec: &GroupSpec) -> GroupElement {
    exp(&random_algebra_element(seed, spec))
}
