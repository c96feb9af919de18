//! JGF1 field files.
//!
//! Layout: seven newline-terminated ASCII header lines
//!
//! ```text
//! JGF1
//! family SU2
//! rep_dim 2
//! dim 2
//! extent 64 64
//! spacing 0.05 0.05
//! value-kind group
//! ```
//!
//! followed by little-endian `f64` pairs `(re, im)`. Points appear in
//! lexicographic grid order (last axis fastest); within a point the
//! components listed below follow each other, matrices row-major.
//!
//! | value-kind | per point |
//! |---|---|
//! | `group` | `g` |
//! | `algebra` | `X` |
//! | `connection` | `A_0 … A_{n-1}` |
//! | `rep-vector` | `φ` |
//! | `scalar` | one pair, imaginary part 0 |
//! | `jet1-gauge` | `g, a_0 … a_{n-1}` |
//! | `jet2-gauge` | `g, a_μ, s_μν` for `μ ≤ ν` in row-major order |
//! | `jet-connection` | `A_μ, ∂_μA_ν` with μ slowest |
//! | `jet-matter` | `φ, ∂_0φ … ∂_{n-1}φ` |
//!
//! Spacings are printed in shortest round-trip form, so a write followed by
//! a read reproduces every bit. The patch origin is not stored and reads
//! back as zero; the margin of derived fields reads back as zero as well.

use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{GaugeError, Result};
use crate::jets::{Jet1Gauge, Jet2Gauge, JetConnection, JetMatter, SymArray};
use crate::lie::{
    AlgebraElement, CMat, CVec, GroupElement, GroupFamily, GroupSpec, RepTangent, RepVector,
};
use crate::patch::{Field, Patch};
use crate::C64;

pub const MAGIC: &str = "JGF1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Group,
    Algebra,
    Connection,
    RepVector,
    Scalar,
    Jet1Gauge,
    Jet2Gauge,
    JetConnection,
    JetMatter,
}

impl ValueKind {
    pub const ALL: [ValueKind; 9] = [
        ValueKind::Group,
        ValueKind::Algebra,
        ValueKind::Connection,
        ValueKind::RepVector,
        ValueKind::Scalar,
        ValueKind::Jet1Gauge,
        ValueKind::Jet2Gauge,
        ValueKind::JetConnection,
        ValueKind::JetMatter,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ValueKind::Group => "group",
            ValueKind::Algebra => "algebra",
            ValueKind::Connection => "connection",
            ValueKind::RepVector => "rep-vector",
            ValueKind::Scalar => "scalar",
            ValueKind::Jet1Gauge => "jet1-gauge",
            ValueKind::Jet2Gauge => "jet2-gauge",
            ValueKind::JetConnection => "jet-connection",
            ValueKind::JetMatter => "jet-matter",
        }
    }
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ValueKind {
    type Err = GaugeError;

    fn from_str(s: &str) -> Result<Self> {
        ValueKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| GaugeError::Format(format!("unknown value-kind `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JgfHeader {
    pub family: GroupFamily,
    pub rep_dim: usize,
    pub dim: usize,
    pub extent: Vec<usize>,
    pub spacing: Vec<f64>,
    pub kind: ValueKind,
}

impl JgfHeader {
    pub fn points(&self) -> usize {
        self.extent.iter().product()
    }

    /// Number of `(re, im)` pairs stored per grid point.
    pub fn entries_per_point(&self) -> usize {
        let m = self.family.matrix_dim();
        let mm = m * m;
        let n = self.dim;
        let k = self.rep_dim;
        match self.kind {
            ValueKind::Group | ValueKind::Algebra => mm,
            ValueKind::Connection => n * mm,
            ValueKind::RepVector => k,
            ValueKind::Scalar => 1,
            ValueKind::Jet1Gauge => (1 + n) * mm,
            ValueKind::Jet2Gauge => (1 + n + n * (n + 1) / 2) * mm,
            ValueKind::JetConnection => (n + n * n) * mm,
            ValueKind::JetMatter => (1 + n) * k,
        }
    }

    pub fn patch(&self) -> Result<Patch> {
        Patch::new(
            self.extent.clone(),
            self.spacing.clone(),
            vec![0.0; self.dim],
        )
    }

    fn validate(&self) -> Result<()> {
        self.family.validate()?;
        GroupSpec::new(self.family, self.rep_dim)?;
        if self.extent.len() != self.dim || self.spacing.len() != self.dim {
            return Err(GaugeError::Format(format!(
                "dim {} but {} extents and {} spacings",
                self.dim,
                self.extent.len(),
                self.spacing.len()
            )));
        }
        self.patch().map(|_| ())
    }

    fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        let join = |v: Vec<String>| v.join(" ");
        writeln!(w, "{MAGIC}")?;
        writeln!(w, "family {}", self.family)?;
        writeln!(w, "rep_dim {}", self.rep_dim)?;
        writeln!(w, "dim {}", self.dim)?;
        writeln!(
            w,
            "extent {}",
            join(self.extent.iter().map(|e| e.to_string()).collect())
        )?;
        writeln!(
            w,
            "spacing {}",
            join(self.spacing.iter().map(|h| h.to_string()).collect())
        )?;
        writeln!(w, "value-kind {}", self.kind)?;
        Ok(())
    }

    fn read_from<R: BufRead>(r: &mut R) -> Result<Self> {
        let mut line = String::new();
        let mut next = |key: &str| -> Result<String> {
            line.clear();
            if r.read_line(&mut line)? == 0 {
                return Err(GaugeError::Format(format!("missing `{key}` line")));
            }
            let text = line.trim_end_matches('\n');
            if key == MAGIC {
                return if text == MAGIC {
                    Ok(String::new())
                } else {
                    Err(GaugeError::Format(format!("bad magic `{text}`")))
                };
            }
            text.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| GaugeError::Format(format!("expected `{key}`, found `{text}`")))
        };
        let bad = |what: &str, v: &str| GaugeError::Format(format!("bad {what} `{v}`"));
        next(MAGIC)?;
        let family: GroupFamily = next("family")?.parse()?;
        let v = next("rep_dim")?;
        let rep_dim = v.parse().map_err(|_| bad("rep_dim", &v))?;
        let v = next("dim")?;
        let dim = v.parse().map_err(|_| bad("dim", &v))?;
        let v = next("extent")?;
        let extent = v
            .split(' ')
            .map(|t| t.parse::<usize>().map_err(|_| bad("extent", &v)))
            .collect::<Result<Vec<_>>>()?;
        let v = next("spacing")?;
        let spacing = v
            .split(' ')
            .map(|t| t.parse::<f64>().map_err(|_| bad("spacing", &v)))
            .collect::<Result<Vec<_>>>()?;
        let kind = next("value-kind")?.parse()?;
        let header = JgfHeader {
            family,
            rep_dim,
            dim,
            extent,
            spacing,
            kind,
        };
        header.validate()?;
        Ok(header)
    }
}

/// Header plus raw entries.
#[derive(Debug, Clone, PartialEq)]
pub struct JgfFile {
    pub header: JgfHeader,
    pub data: Vec<C64>,
}

impl JgfFile {
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        let expected = self.header.points() * self.header.entries_per_point();
        if self.data.len() != expected {
            return Err(GaugeError::DimensionMismatch {
                expected,
                found: self.data.len(),
            });
        }
        self.header.write_to(w)?;
        let mut buf = Vec::with_capacity(16 * self.data.len());
        for z in &self.data {
            buf.extend_from_slice(&z.re.to_le_bytes());
            buf.extend_from_slice(&z.im.to_le_bytes());
        }
        w.write_all(&buf)?;
        Ok(())
    }

    pub fn read_from<R: Read>(r: R) -> Result<Self> {
        let mut r = BufReader::new(r);
        let header = JgfHeader::read_from(&mut r)?;
        let count = header.points() * header.entries_per_point();
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes)?;
        if bytes.len() != 16 * count {
            return Err(GaugeError::Format(format!(
                "expected {} data bytes, found {}",
                16 * count,
                bytes.len()
            )));
        }
        let f = |b: &[u8]| f64::from_le_bytes(b.try_into().expect("8-byte chunk"));
        let data = bytes
            .chunks_exact(16)
            .map(|c| C64::new(f(&c[..8]), f(&c[8..])))
            .collect();
        Ok(JgfFile { header, data })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        self.write_to(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        JgfFile::read_from(File::open(path)?)
    }

    /// Human-readable description of the header and the stored values.
    pub fn summary(&self) -> String {
        let h = &self.header;
        let per = h.entries_per_point().max(1);
        let max_abs = self.data.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let non_finite = self
            .data
            .iter()
            .filter(|z| !(z.re.is_finite() && z.im.is_finite()))
            .count();
        let mut out = String::new();
        out.push_str(&format!("format      {MAGIC}\n"));
        out.push_str(&format!("family      {}\n", h.family));
        out.push_str(&format!("rep_dim     {}\n", h.rep_dim));
        out.push_str(&format!("dim         {}\n", h.dim));
        out.push_str(&format!("extent      {:?}\n", h.extent));
        out.push_str(&format!("spacing     {:?}\n", h.spacing));
        out.push_str(&format!("value-kind  {}\n", h.kind));
        out.push_str(&format!("points      {}\n", h.points()));
        out.push_str(&format!("entries/pt  {per}\n"));
        out.push_str(&format!("max |entry| {max_abs:.6e}\n"));
        out.push_str(&format!("non-finite  {non_finite}\n"));
        if let Some(first) = self.data.chunks(per).next() {
            let shown: Vec<String> = first
                .iter()
                .take(8)
                .map(|z| format!("{:+.6}{:+.6}i", z.re, z.im))
                .collect();
            out.push_str(&format!("first point {}\n", shown.join(" ")));
        }
        out
    }
}

/// A typed field that can be stored in a JGF1 file.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldData {
    Group(Field<GroupElement>),
    Algebra(Field<AlgebraElement>),
    Connection(Field<Vec<AlgebraElement>>),
    RepVector(Field<RepVector>),
    Scalar(Field<f64>),
    Jet1Gauge(Field<Jet1Gauge>),
    Jet2Gauge(Field<Jet2Gauge>),
    JetConnection(Field<JetConnection>),
    JetMatter(Field<JetMatter>),
}

fn push_mat(out: &mut Vec<C64>, m: &CMat) {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            out.push(m[(i, j)]);
        }
    }
}

fn push_vec(out: &mut Vec<C64>, v: &CVec) {
    out.extend(v.iter().copied());
}

fn push_algebra(out: &mut Vec<C64>, xs: &[AlgebraElement]) {
    for x in xs {
        push_mat(out, x.matrix());
    }
}

impl FieldData {
    pub fn kind(&self) -> ValueKind {
        match self {
            FieldData::Group(_) => ValueKind::Group,
            FieldData::Algebra(_) => ValueKind::Algebra,
            FieldData::Connection(_) => ValueKind::Connection,
            FieldData::RepVector(_) => ValueKind::RepVector,
            FieldData::Scalar(_) => ValueKind::Scalar,
            FieldData::Jet1Gauge(_) => ValueKind::Jet1Gauge,
            FieldData::Jet2Gauge(_) => ValueKind::Jet2Gauge,
            FieldData::JetConnection(_) => ValueKind::JetConnection,
            FieldData::JetMatter(_) => ValueKind::JetMatter,
        }
    }

    pub fn patch(&self) -> &Patch {
        match self {
            FieldData::Group(f) => f.patch(),
            FieldData::Algebra(f) => f.patch(),
            FieldData::Connection(f) => f.patch(),
            FieldData::RepVector(f) => f.patch(),
            FieldData::Scalar(f) => f.patch(),
            FieldData::Jet1Gauge(f) => f.patch(),
            FieldData::Jet2Gauge(f) => f.patch(),
            FieldData::JetConnection(f) => f.patch(),
            FieldData::JetMatter(f) => f.patch(),
        }
    }

    /// Flattens the field; the header records `spec`, and every value must
    /// have the sizes it implies.
    pub fn encode(&self, spec: GroupSpec) -> Result<JgfFile> {
        spec.validate()?;
        let patch = self.patch();
        let header = JgfHeader {
            family: spec.family,
            rep_dim: spec.rep_dim,
            dim: patch.dim(),
            extent: patch.extent().to_vec(),
            spacing: patch.spacing().to_vec(),
            kind: self.kind(),
        };
        let mut data = Vec::with_capacity(header.points() * header.entries_per_point());
        match self {
            FieldData::Group(f) => f
                .values()
                .iter()
                .for_each(|g| push_mat(&mut data, g.matrix())),
            FieldData::Algebra(f) => f
                .values()
                .iter()
                .for_each(|x| push_mat(&mut data, x.matrix())),
            FieldData::Connection(f) => f.values().iter().for_each(|a| push_algebra(&mut data, a)),
            FieldData::RepVector(f) => f
                .values()
                .iter()
                .for_each(|v| push_vec(&mut data, v.vector())),
            FieldData::Scalar(f) => data.extend(f.values().iter().map(|&v| C64::new(v, 0.0))),
            FieldData::Jet1Gauge(f) => {
                for j in f.values() {
                    push_mat(&mut data, j.g.matrix());
                    push_algebra(&mut data, &j.a);
                }
            }
            FieldData::Jet2Gauge(f) => {
                for j in f.values() {
                    push_mat(&mut data, j.g.matrix());
                    push_algebra(&mut data, &j.a);
                    push_algebra(&mut data, j.s.upper());
                }
            }
            FieldData::JetConnection(f) => {
                for j in f.values() {
                    push_algebra(&mut data, &j.a);
                    push_algebra(&mut data, j.da_entries());
                }
            }
            FieldData::JetMatter(f) => {
                for j in f.values() {
                    push_vec(&mut data, j.phi.vector());
                    for d in &j.dphi {
                        push_vec(&mut data, d.vector());
                    }
                }
            }
        }
        let expected = header.points() * header.entries_per_point();
        if data.len() != expected {
            return Err(GaugeError::DimensionMismatch {
                expected,
                found: data.len(),
            });
        }
        Ok(JgfFile { header, data })
    }

    /// Rebuilds the typed field, validating group and algebra membership.
    pub fn decode(file: &JgfFile) -> Result<Self> {
        let h = &file.header;
        let patch = h.patch()?;
        let per = h.entries_per_point();
        if file.data.len() != h.points() * per {
            return Err(GaugeError::DimensionMismatch {
                expected: h.points() * per,
                found: file.data.len(),
            });
        }
        let m = h.family.matrix_dim();
        let n = h.dim;
        let k = h.rep_dim;
        let fam = h.family;
        let chunks = file.data.chunks_exact(per.max(1));

        let mat = |c: &[C64]| CMat::from_row_slice(m, m, c);
        let group = |c: &[C64]| GroupElement::new(mat(c), fam);
        let algebra = |c: &[C64]| AlgebraElement::new(mat(c), fam);
        let algebras = |c: &[C64]| {
            c.chunks_exact(m * m)
                .map(algebra)
                .collect::<Result<Vec<_>>>()
        };
        let vector = |c: &[C64]| CVec::from_column_slice(c);

        fn build<V>(patch: Patch, values: Result<Vec<V>>) -> Result<Field<V>> {
            Field::from_values(patch, values?)
        }

        Ok(match h.kind {
            ValueKind::Group => FieldData::Group(build(patch, chunks.map(group).collect())?),
            ValueKind::Algebra => FieldData::Algebra(build(patch, chunks.map(algebra).collect())?),
            ValueKind::Connection => {
                FieldData::Connection(build(patch, chunks.map(algebras).collect())?)
            }
            ValueKind::RepVector => FieldData::RepVector(build(
                patch,
                Ok(chunks.map(|c| RepVector::new(vector(c))).collect()),
            )?),
            ValueKind::Scalar => {
                let values = file
                    .data
                    .iter()
                    .map(|z| {
                        if z.im == 0.0 {
                            Ok(z.re)
                        } else {
                            Err(GaugeError::Format(format!(
                                "scalar with imaginary part {}",
                                z.im
                            )))
                        }
                    })
                    .collect();
                FieldData::Scalar(build(patch, values)?)
            }
            ValueKind::Jet1Gauge => FieldData::Jet1Gauge(build(
                patch,
                chunks
                    .map(|c| Jet1Gauge::new(group(&c[..m * m])?, algebras(&c[m * m..])?))
                    .collect(),
            )?),
            ValueKind::Jet2Gauge => FieldData::Jet2Gauge(build(
                patch,
                chunks
                    .map(|c| {
                        let a_end = (1 + n) * m * m;
                        let s = algebras(&c[a_end..])?;
                        let mut it = s.into_iter();
                        let sym = SymArray::from_fn(n, |_, _| it.next().expect("sized by header"));
                        Jet2Gauge::new(group(&c[..m * m])?, algebras(&c[m * m..a_end])?, sym)
                    })
                    .collect(),
            )?),
            ValueKind::JetConnection => FieldData::JetConnection(build(
                patch,
                chunks
                    .map(|c| {
                        let all = algebras(c)?;
                        let (a, da) = all.split_at(n);
                        JetConnection::new(a.to_vec(), da.to_vec())
                    })
                    .collect(),
            )?),
            ValueKind::JetMatter => FieldData::JetMatter(build(
                patch,
                chunks
                    .map(|c| {
                        let mut parts = c.chunks_exact(k);
                        let phi = RepVector::new(vector(parts.next().expect("sized by header")));
                        let dphi = parts.map(|p| RepTangent::new(vector(p))).collect();
                        JetMatter::new(phi, dphi)
                    })
                    .collect(),
            )?),
        })
    }
}

/// Writes a typed field to `path`.
pub fn save_field(path: impl AsRef<Path>, spec: GroupSpec, field: &FieldData) -> Result<()> {
    field.encode(spec)?.save(path)
}

/// Reads a typed field from `path`.
pub fn load_field(path: impl AsRef<Path>) -> Result<(JgfHeader, FieldData)> {
    let file = JgfFile::load(path)?;
    let data = FieldData::decode(&file)?;
    Ok((file.header, data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patch::families::{sample_connection, sample_gauge, sample_matter};
    use crate::patch::{ConnectionFamily, GaugeFamily, MatterFamily};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn patch() -> Patch {
        Patch::new(vec![6, 7], vec![0.05, 0.1], vec![0.0, 0.0]).unwrap()
    }

    fn roundtrip(spec: GroupSpec, field: &FieldData) -> FieldData {
        let file = field.encode(spec).unwrap();
        let mut bytes = Vec::new();
        file.write_to(&mut bytes).unwrap();
        let back = JgfFile::read_from(bytes.as_slice()).unwrap();
        assert_eq!(back, file);
        FieldData::decode(&back).unwrap()
    }

    #[test]
    fn header_is_plain_text() {
        let spec = GroupSpec::fundamental(GroupFamily::SU2);
        let f = FieldData::Group(Field::from_fn(patch(), |_| GroupElement::identity(2)));
        let mut bytes = Vec::new();
        f.encode(spec).unwrap().write_to(&mut bytes).unwrap();
        let text =
            "JGF1\nfamily SU2\nrep_dim 2\ndim 2\nextent 6 7\nspacing 0.05 0.1\nvalue-kind group\n";
        assert!(bytes.starts_with(text.as_bytes()));
        assert_eq!(bytes.len(), text.len() + 42 * 4 * 16);
        // identity: first entry (1, 0), second (0, 0)
        let body = &bytes[text.len()..];
        assert_eq!(&body[..8], &1.0f64.to_le_bytes());
        assert_eq!(&body[8..32], &[0u8; 24]);
    }

    #[test]
    fn entries_are_row_major() {
        let spec = GroupSpec::fundamental(GroupFamily::SU2);
        let x = AlgebraElement::from_coords(GroupFamily::SU2, &[0.3, -0.2, 0.1]).unwrap();
        let f = FieldData::Algebra(Field::from_fn(patch(), |_| x.clone()));
        let file = f.encode(spec).unwrap();
        let mm = x.matrix();
        assert_eq!(
            &file.data[..4],
            &[mm[(0, 0)], mm[(0, 1)], mm[(1, 0)], mm[(1, 1)]]
        );
    }

    #[test]
    fn all_kinds_roundtrip_bit_exact() {
        let mut r = ChaCha8Rng::seed_from_u64(11);
        let spec = GroupSpec::fundamental(GroupFamily::SU3);
        let p = patch();
        let g = sample_gauge(
            &p,
            spec.family,
            &GaugeFamily::random(&mut r, spec.family, 2, 3, 0.5),
        )
        .unwrap();
        let c = sample_connection(
            &p,
            spec.family,
            &ConnectionFamily::random(&mut r, spec.family, 2, 0.5),
        )
        .unwrap();
        let m = sample_matter(&p, 3, &MatterFamily::random(&mut r, 3, 2, 0.5)).unwrap();
        let cases = vec![
            FieldData::Group(g.field.clone()),
            FieldData::Algebra(c.field.map(|a| a[0].clone())),
            FieldData::Connection(c.field.clone()),
            FieldData::RepVector(m.field.clone()),
            FieldData::Scalar(Field::from_fn(p.clone(), |x| x[0].sin() * x[1])),
            FieldData::Jet1Gauge(g.jet1().field),
            FieldData::Jet2Gauge(g.jets.clone()),
            FieldData::JetConnection(c.jets.clone()),
            FieldData::JetMatter(m.jets.clone()),
        ];
        for f in cases {
            assert_eq!(roundtrip(spec, &f), f, "{}", f.kind());
        }
    }

    #[test]
    fn file_roundtrip_and_summary() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.jgf");
        let spec = GroupSpec::fundamental(GroupFamily::U1);
        let f = FieldData::Scalar(Field::from_fn(patch(), |x| x[0] + x[1]));
        save_field(&path, spec, &f).unwrap();
        let (h, back) = load_field(&path).unwrap();
        assert_eq!(h.kind, ValueKind::Scalar);
        assert_eq!(back, f);
        let s = JgfFile::load(&path).unwrap().summary();
        assert!(s.contains("value-kind  scalar"));
        assert!(s.contains("points      42"));
    }

    #[test]
    fn rejects_malformed_input() {
        let spec = GroupSpec::fundamental(GroupFamily::SU2);
        let f = FieldData::Group(Field::from_fn(patch(), |_| GroupElement::identity(2)));
        let mut bytes = Vec::new();
        f.encode(spec).unwrap().write_to(&mut bytes).unwrap();

        let truncated = &bytes[..bytes.len() - 1];
        assert!(matches!(
            JgfFile::read_from(truncated),
            Err(GaugeError::Format(_))
        ));

        let mut bad_magic = bytes.clone();
        bad_magic[3] = b'2';
        assert!(matches!(
            JgfFile::read_from(bad_magic.as_slice()),
            Err(GaugeError::Format(_))
        ));

        let text =
            String::from_utf8_lossy(&bytes[..80]).replace("value-kind group", "value-kind grope");
        assert!(JgfFile::read_from(text.as_bytes()).is_err());

        // a non-unitary matrix is refused on decode
        let mut file = f.encode(spec).unwrap();
        file.data[0] = C64::new(2.0, 0.0);
        assert!(matches!(
            FieldData::decode(&file),
            Err(GaugeError::InvalidElement { .. })
        ));
    }

    #[test]
    fn encode_checks_sizes() {
        let f = FieldData::Group(Field::from_fn(patch(), |_| GroupElement::identity(2)));
        assert!(f.encode(GroupSpec::fundamental(GroupFamily::SU3)).is_err());
    }
}
