//! Rectangular coordinate patches, sampled fields, central differences and
//! quadrature.
//!
//! Grid points are enumerated in lexicographic order of their multi-index
//! `(i_0, …, i_{n-1})` with the last axis varying fastest. Every reduction over
//! a field walks the points in that order, so sums are bit-reproducible
//! independent of how point-wise work was partitioned.

pub mod families;
pub mod jgf;

use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GaugeError, Result};
use crate::lie::{AlgebraElement, CMat, CVec, RepTangent, RepVector};
use crate::C64;

pub use families::{
    sample_analytic, ConnectionFamily, ConnectionSample, ConnectionTerm, FamilyDescriptor,
    GaugeFactor, GaugeFamily, GaugeSample, MatterFamily, MatterSample, MatterTerm, Sample,
    ScalarFunction,
};

pub const MAX_DIM: usize = 4;
pub const MIN_EXTENT: usize = 5;
pub const DEFAULT_SPACING: f64 = 0.05;

/// A rectangular grid on a coordinate domain `U ⊂ ℝⁿ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Patch {
    extent: Vec<usize>,
    spacing: Vec<f64>,
    origin: Vec<f64>,
}

impl Patch {
    pub fn new(extent: Vec<usize>, spacing: Vec<f64>, origin: Vec<f64>) -> Result<Self> {
        let dim = extent.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(GaugeError::InvalidPatch(format!(
                "dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        if spacing.len() != dim || origin.len() != dim {
            return Err(GaugeError::InvalidPatch(
                "extent, spacing and origin must have equal length".into(),
            ));
        }
        if let Some(e) = extent.iter().find(|&&e| e < MIN_EXTENT) {
            return Err(GaugeError::InvalidPatch(format!(
                "extent {e} below the minimum of {MIN_EXTENT} points per axis"
            )));
        }
        if spacing.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
            return Err(GaugeError::InvalidPatch("spacing must be positive".into()));
        }
        if origin.iter().any(|o| !o.is_finite()) {
            return Err(GaugeError::InvalidPatch("origin must be finite".into()));
        }
        Ok(Patch {
            extent,
            spacing,
            origin,
        })
    }

    /// Cube with `points` per axis and spacing `h`, centred on the origin.
    pub fn centered(dim: usize, points: usize, h: f64) -> Result<Self> {
        let half = 0.5 * (points.saturating_sub(1)) as f64 * h;
        Patch::new(vec![points; dim], vec![h; dim], vec![-half; dim])
    }

    /// Default grids: 257 points for n = 1, 64² for n = 2, 12⁴ for n = 4.
    pub fn default_for_dim(dim: usize) -> Result<Self> {
        let points = match dim {
            1 => 257,
            2 => 64,
            3 => 24,
            _ => 12,
        };
        Patch::centered(dim, points, DEFAULT_SPACING)
    }

    pub fn dim(&self) -> usize {
        self.extent.len()
    }

    pub fn extent(&self) -> &[usize] {
        &self.extent
    }

    pub fn spacing(&self) -> &[f64] {
        &self.spacing
    }

    pub fn origin(&self) -> &[f64] {
        &self.origin
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.extent.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Volume element `h_0 ⋯ h_{n-1}`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing.iter().product()
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.extent[axis + 1..].iter().product()
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        multi
            .iter()
            .zip(&self.extent)
            .fold(0, |acc, (i, e)| acc * e + i)
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dim()];
        for axis in (0..self.dim()).rev() {
            out[axis] = flat % self.extent[axis];
            flat /= self.extent[axis];
        }
        out
    }

    pub fn coords(&self, flat: usize) -> Vec<f64> {
        self.multi_index(flat)
            .iter()
            .enumerate()
            .map(|(axis, &i)| self.origin[axis] + i as f64 * self.spacing[axis])
            .collect()
    }

    /// Whether the point lies at least `margin` points away from every face.
    pub fn is_interior(&self, flat: usize, margin: usize) -> bool {
        self.multi_index(flat)
            .iter()
            .zip(&self.extent)
            .all(|(&i, &e)| i >= margin && i + margin < e)
    }

    /// Largest region whose points are all `margin` away from the boundary.
    pub fn interior_region(&self, margin: usize) -> Result<Region> {
        let margin = margin.max(1);
        Region::new(
            self.extent
                .iter()
                .map(|&e| margin..e.saturating_sub(margin))
                .collect(),
        )
    }

    fn check_axis(&self, axis: usize) -> Result<()> {
        if axis < self.dim() {
            Ok(())
        } else {
            Err(GaugeError::AxisOutOfRange {
                axis,
                dim: self.dim(),
            })
        }
    }
}

/// Compact box `K` of grid points given by half-open index ranges per axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    ranges: Vec<Range<usize>>,
}

impl Region {
    pub fn new(ranges: Vec<Range<usize>>) -> Result<Self> {
        if ranges.is_empty() || ranges.iter().any(|r| r.start >= r.end) {
            return Err(GaugeError::InvalidRegion("region must be nonempty".into()));
        }
        Ok(Region { ranges })
    }

    pub fn ranges(&self) -> &[Range<usize>] {
        &self.ranges
    }

    pub fn len(&self) -> usize {
        self.ranges.iter().map(|r| r.end - r.start).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks that the region avoids the boundary layer of width
    /// `max(margin, 1)`.
    pub fn check_inside(&self, patch: &Patch, margin: usize) -> Result<()> {
        if self.ranges.len() != patch.dim() {
            return Err(GaugeError::InvalidRegion(format!(
                "region has {} axes, patch has {}",
                self.ranges.len(),
                patch.dim()
            )));
        }
        let layer = margin.max(1);
        for (axis, (r, &e)) in self.ranges.iter().zip(patch.extent()).enumerate() {
            if r.start < layer || r.end + layer > e {
                return Err(GaugeError::InvalidRegion(format!(
                    "axis {axis}: range {}..{} leaves the interior {}..{}",
                    r.start,
                    r.end,
                    layer,
                    e.saturating_sub(layer)
                )));
            }
        }
        Ok(())
    }

    /// Flat indices of the region's points in lexicographic order.
    pub fn flat_indices(&self, patch: &Patch) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut multi: Vec<usize> = self.ranges.iter().map(|r| r.start).collect();
        loop {
            out.push(patch.flat_index(&multi));
            let mut axis = multi.len();
            loop {
                if axis == 0 {
                    return out;
                }
                axis -= 1;
                multi[axis] += 1;
                if multi[axis] < self.ranges[axis].end {
                    break;
                }
                multi[axis] = self.ranges[axis].start;
            }
        }
    }
}

/// Values that support the linear combinations used by finite differences.
pub trait Linear: Clone + Send + Sync {
    /// Zero of the same shape.
    fn zero_like(&self) -> Self;
    /// `(self - other) * factor`.
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self;
}

impl Linear for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        (self - other) * factor
    }
}

impl Linear for C64 {
    fn zero_like(&self) -> Self {
        C64::new(0.0, 0.0)
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        (self - other) * factor
    }
}

impl Linear for CMat {
    fn zero_like(&self) -> Self {
        CMat::zeros(self.nrows(), self.ncols())
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        (self - other) * C64::new(factor, 0.0)
    }
}

impl Linear for CVec {
    fn zero_like(&self) -> Self {
        CVec::zeros(self.len())
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        (self - other) * C64::new(factor, 0.0)
    }
}

impl Linear for AlgebraElement {
    fn zero_like(&self) -> Self {
        AlgebraElement::zero(self.dim())
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        (self - other) * factor
    }
}

impl Linear for RepVector {
    fn zero_like(&self) -> Self {
        RepVector::zero(self.dim())
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        &(self - other) * factor
    }
}

impl Linear for RepTangent {
    fn zero_like(&self) -> Self {
        RepTangent::zero(self.dim())
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        &(self - other) * factor
    }
}

impl<V: Linear> Linear for Vec<V> {
    fn zero_like(&self) -> Self {
        self.iter().map(Linear::zero_like).collect()
    }
    fn scaled_difference(&self, other: &Self, factor: f64) -> Self {
        self.iter()
            .zip(other)
            .map(|(a, b)| a.scaled_difference(b, factor))
            .collect()
    }
}

/// One value per grid point.
///
/// `margin` is the width of the boundary layer on which values are
/// placeholders (each central difference widens it by one).
#[derive(Debug, Clone, PartialEq)]
pub struct Field<V> {
    patch: Patch,
    values: Vec<V>,
    margin: usize,
}

impl<V> Field<V> {
    pub fn from_values(patch: Patch, values: Vec<V>) -> Result<Self> {
        if values.len() != patch.len() {
            return Err(GaugeError::DimensionMismatch {
                expected: patch.len(),
                found: values.len(),
            });
        }
        Ok(Field {
            patch,
            values,
            margin: 0,
        })
    }

    pub(crate) fn with_margin(patch: Patch, values: Vec<V>, margin: usize) -> Self {
        debug_assert_eq!(values.len(), patch.len());
        Field {
            patch,
            values,
            margin,
        }
    }

    pub fn patch(&self) -> &Patch {
        &self.patch
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn into_values(self) -> Vec<V> {
        self.values
    }

    pub fn margin(&self) -> usize {
        self.margin
    }

    pub fn at(&self, flat: usize) -> &V {
        &self.values[flat]
    }

    pub fn get(&self, multi: &[usize]) -> &V {
        &self.values[self.patch.flat_index(multi)]
    }

    pub fn is_valid(&self, flat: usize) -> bool {
        self.patch.is_interior(flat, self.margin)
    }

    /// Flat indices of all valid points in lexicographic order.
    pub fn valid_indices(&self) -> Vec<usize> {
        (0..self.patch.len())
            .filter(|&i| self.is_valid(i))
            .collect()
    }
}

impl<V: Send + Sync> Field<V> {
    /// Evaluates `f` at the coordinates of every grid point.
    pub fn from_fn<F>(patch: Patch, f: F) -> Self
    where
        F: Fn(&[f64]) -> V + Sync + Send,
    {
        let values = (0..patch.len())
            .into_par_iter()
            .map(|i| f(&patch.coords(i)))
            .collect();
        Field {
            patch,
            values,
            margin: 0,
        }
    }

    pub fn try_from_fn<F>(patch: Patch, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Result<V> + Sync + Send,
    {
        let values = (0..patch.len())
            .into_par_iter()
            .map(|i| f(&patch.coords(i)))
            .collect::<Result<Vec<V>>>()?;
        Ok(Field {
            patch,
            values,
            margin: 0,
        })
    }

    /// Point-wise map; the margin is carried over.
    pub fn map<W, F>(&self, f: F) -> Field<W>
    where
        W: Send,
        F: Fn(&V) -> W + Sync + Send,
    {
        Field {
            patch: self.patch.clone(),
            values: self.values.par_iter().map(f).collect(),
            margin: self.margin,
        }
    }

    /// Point-wise combination of two fields on the same patch.
    pub fn zip_map<U, W, F>(&self, other: &Field<U>, f: F) -> Result<Field<W>>
    where
        U: Send + Sync,
        W: Send,
        F: Fn(&V, &U) -> W + Sync + Send,
    {
        if self.patch != other.patch {
            return Err(GaugeError::InvalidPatch(
                "fields live on different patches".into(),
            ));
        }
        Ok(Field {
            patch: self.patch.clone(),
            values: self
                .values
                .par_iter()
                .zip(other.values.par_iter())
                .map(|(a, b)| f(a, b))
                .collect(),
            margin: self.margin.max(other.margin),
        })
    }

    /// Fallible point-wise combination of two fields on the same patch.
    pub fn try_zip_map<U, W, F>(&self, other: &Field<U>, f: F) -> Result<Field<W>>
    where
        U: Send + Sync,
        W: Send,
        F: Fn(&V, &U) -> Result<W> + Sync + Send,
    {
        if self.patch != other.patch {
            return Err(GaugeError::InvalidPatch(
                "fields live on different patches".into(),
            ));
        }
        let values = self
            .values
            .par_iter()
            .zip(other.values.par_iter())
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<W>>>()?;
        Ok(Field {
            patch: self.patch.clone(),
            values,
            margin: self.margin.max(other.margin),
        })
    }

    /// Fallible point-wise map; the first error in index order wins.
    pub fn try_map<W, F>(&self, f: F) -> Result<Field<W>>
    where
        W: Send,
        F: Fn(&V) -> Result<W> + Sync + Send,
    {
        let values = self.values.par_iter().map(f).collect::<Result<Vec<W>>>()?;
        Ok(Field {
            patch: self.patch.clone(),
            values,
            margin: self.margin,
        })
    }
}

/// Second-order central difference `(f(x + h e_μ) - f(x - h e_μ)) / 2h`.
///
/// Defined on points at least `margin + 1` away from the boundary; the
/// outer layer holds zeros and is excluded by the returned field's margin.
pub fn partial<V: Linear>(f: &Field<V>, axis: usize) -> Result<Field<V>> {
    let patch = &f.patch;
    patch.check_axis(axis)?;
    if patch.extent[axis] < 3 + 2 * f.margin {
        return Err(GaugeError::PatchTooSmall(format!(
            "axis {axis} has {} points, central difference needs {}",
            patch.extent[axis],
            3 + 2 * f.margin
        )));
    }
    let stride = patch.stride(axis);
    let factor = 0.5 / patch.spacing[axis];
    let margin = f.margin + 1;
    let values = (0..patch.len())
        .into_par_iter()
        .map(|i| {
            if patch.is_interior(i, margin) {
                f.values[i + stride].scaled_difference(&f.values[i - stride], factor)
            } else {
                f.values[i].zero_like()
            }
        })
        .collect();
    Ok(Field {
        patch: patch.clone(),
        values,
        margin,
    })
}

/// Riemann sum `Σ_K density(x) · hⁿ`, accumulated in lexicographic order.
pub fn integrate(density: &Field<f64>, region: &Region) -> Result<f64> {
    region.check_inside(&density.patch, density.margin)?;
    let sum = region
        .flat_indices(&density.patch)
        .into_iter()
        .fold(0.0, |acc, i| acc + density.values[i]);
    Ok(sum * density.patch.cell_volume())
}

/// Largest value of `f` over the points of `region`, in index order.
pub fn max_over(values: &Field<f64>, region: &Region) -> Result<f64> {
    region.check_inside(&values.patch, values.margin)?;
    Ok(region
        .flat_indices(&values.patch)
        .into_iter()
        .map(|i| values.values[i])
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn line(points: usize, h: f64, origin: f64) -> Patch {
        Patch::new(vec![points], vec![h], vec![origin]).unwrap()
    }

    #[test]
    fn patch_validation() {
        assert!(Patch::new(vec![4], vec![0.1], vec![0.0]).is_err());
        assert!(Patch::new(vec![8], vec![0.0], vec![0.0]).is_err());
        assert!(Patch::new(vec![8; 5], vec![0.1; 5], vec![0.0; 5]).is_err());
        assert!(Patch::new(vec![8, 8], vec![0.1], vec![0.0, 0.0]).is_err());
        let p = Patch::default_for_dim(2).unwrap();
        assert_eq!(p.extent(), &[64, 64]);
        assert_eq!(Patch::default_for_dim(1).unwrap().len(), 257);
        assert_eq!(Patch::default_for_dim(4).unwrap().len(), 12usize.pow(4));
    }

    #[test]
    fn index_round_trip_is_lexicographic() {
        let p = Patch::new(vec![5, 6, 7], vec![0.1; 3], vec![0.0; 3]).unwrap();
        assert_eq!(p.multi_index(1), vec![0, 0, 1]);
        assert_eq!(p.multi_index(7), vec![0, 1, 0]);
        for i in 0..p.len() {
            assert_eq!(p.flat_index(&p.multi_index(i)), i);
        }
    }

    #[test]
    fn partial_of_constant_and_affine() {
        let p = Patch::centered(2, 9, 0.1).unwrap();
        let c = Field::from_fn(p.clone(), |_| 3.5);
        let d = partial(&c, 1).unwrap();
        assert!(d.valid_indices().iter().all(|&i| *d.at(i) == 0.0));

        let x = Field::from_fn(p, |x| x[0]);
        let dx = partial(&x, 0).unwrap();
        let dy = partial(&x, 1).unwrap();
        for i in dx.valid_indices() {
            assert!((dx.at(i) - 1.0).abs() < 1e-13);
            assert_eq!(*dy.at(i), 0.0);
        }
        assert_eq!(dx.margin(), 1);
    }

    #[test]
    fn partial_axis_out_of_range() {
        let p = Patch::centered(2, 9, 0.1).unwrap();
        let f = Field::from_fn(p, |_| 0.0);
        assert!(matches!(
            partial(&f, 2),
            Err(GaugeError::AxisOutOfRange { .. })
        ));
    }

    #[test]
    fn partial_of_sine_converges_at_second_order() {
        let err = |h: f64| {
            let p = line((2.0 / h) as usize + 1, h, 0.0);
            let f = Field::from_fn(p, |x| x[0].sin());
            let d = partial(&f, 0).unwrap();
            d.valid_indices()
                .into_iter()
                .map(|i| (d.at(i) - d.patch().coords(i)[0].cos()).abs())
                .fold(0.0, f64::max)
        };
        let e1 = err(0.01);
        assert!(e1 <= 2e-5, "{e1}");
        let ratio = e1 / err(0.005);
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }

    #[test]
    fn integrate_examples() {
        let p = Patch::centered(2, 10, 0.25).unwrap();
        let k = Region::new(vec![2..5, 3..7]).unwrap();
        let ones = Field::from_fn(p.clone(), |_| 1.0);
        assert_eq!(integrate(&ones, &k).unwrap(), 12.0 * 0.0625);
        let zeros = Field::from_fn(p, |_| 0.0);
        assert_eq!(integrate(&zeros, &k).unwrap(), 0.0);

        // one full period of sin sampled at 256 points, inside a 258-point line
        let h = 2.0 * PI / 256.0;
        let p = line(258, h, -h);
        let f = Field::from_fn(p, |x| x[0].sin());
        let k = Region::new(vec![1..257]).unwrap();
        assert!(integrate(&f, &k).unwrap().abs() <= 1e-3);
    }

    #[test]
    fn integrate_rejects_boundary_regions() {
        let p = Patch::centered(1, 10, 0.1).unwrap();
        let f = Field::from_fn(p, |_| 1.0);
        assert!(integrate(&f, &Region::new(vec![0..5]).unwrap()).is_err());
        assert!(integrate(&f, &Region::new(vec![1..10]).unwrap()).is_err());
        assert!(integrate(&f, &Region::new(vec![1..9]).unwrap()).is_ok());
        let d = partial(&partial(&f, 0).unwrap(), 0).unwrap();
        assert!(integrate(&d, &Region::new(vec![1..9]).unwrap()).is_err());
        assert!(Region::new(vec![3..3]).is_err());
    }

    #[test]
    fn region_enumeration_order() {
        let p = Patch::new(vec![6, 6], vec![1.0; 2], vec![0.0; 2]).unwrap();
        let k = Region::new(vec![1..3, 2..4]).unwrap();
        let idx = k.flat_indices(&p);
        assert_eq!(idx, vec![8, 9, 14, 15]);
    }
}
