use serde::{Deserialize, Serialize};

use super::{prolong_field, real_det, GeometryError, NearPoint, Result, VectorField, Verdict};
use crate::algebra::{Algebra, PresentationJson, WeilElement};
use crate::sample::{random_near_point, rng};

/// `|aug det| > PASS_REL · scale` counts as invertible.
pub const PASS_REL: f64 = 1e-9;
/// `|aug det| ≤ ZERO_REL · scale` counts as singular; anything between is
/// reported as indeterminate.
pub const ZERO_REL: f64 = 64.0 * f64::EPSILON;

/// `n × n` matrix over `A`; column `j` holds the components of the `j`-th
/// prolonged field in the frame `(∂/∂xi)^A`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameMatrix {
    n: usize,
    entries: Vec<WeilElement>,
}

pub fn frame_matrix(fields: &[VectorField], xi: &NearPoint) -> Result<FrameMatrix> {
    let n = xi.dim();
    if fields.len() != n {
        return Err(GeometryError::DimensionMismatch { expected: n, got: fields.len() });
    }
    let columns = fields.iter().map(|f| prolong_field(f, xi)).collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for col in &columns {
            entries.push(col.components[i].clone());
        }
    }
    Ok(FrameMatrix { n, entries })
}

fn ring_mul(a: &WeilElement, b: &WeilElement) -> WeilElement {
    a.mul(b).expect("entries share one algebra")
}

fn ring_add(a: &WeilElement, b: &WeilElement) -> WeilElement {
    a.add(b).expect("entries share one algebra")
}

impl FrameMatrix {
    pub fn from_rows(rows: Vec<Vec<WeilElement>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        FrameMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &WeilElement {
        &self.entries[i * self.n + j]
    }

    fn algebra(&self) -> Option<&Algebra> {
        self.entries.first().map(WeilElement::algebra)
    }

    /// Entrywise augmentation.
    pub fn augmented(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j).augmentation()).collect()).collect()
    }

    /// Determinant over `A`: cofactor expansion up to `n = 4`, Bird's
    /// division-free scheme beyond.
    pub fn det(&self, algebra: &Algebra) -> WeilElement {
        if self.n <= 4 {
            self.det_cofactor(algebra)
        } else {
            self.det_division_free(algebra)
        }
    }

    pub fn det_cofactor(&self, algebra: &Algebra) -> WeilElement {
        let cols: Vec<usize> = (0..self.n).collect();
        self.cofactor(algebra, 0, &cols)
    }

    fn cofactor(&self, algebra: &Algebra, row: usize, cols: &[usize]) -> WeilElement {
        if cols.is_empty() {
            return WeilElement::one(algebra);
        }
        let mut acc = WeilElement::zero(algebra);
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = ring_mul(self.entry(row, c), &self.cofactor(algebra, row + 1, &rest));
            acc = if k % 2 == 0 { ring_add(&acc, &term) } else { acc.sub(&term).expect("same algebra") };
        }
        acc
    }

    /// Bird (2011): `X ← μ(X)·M` repeated `n - 1` times, where `μ(X)` keeps the
    /// strict upper triangle of `X` and puts `-Σ_{k>i} X_kk` on the diagonal.
    pub fn det_division_free(&self, algebra: &Algebra) -> WeilElement {
        let n = self.n;
        if n == 0 {
            return WeilElement::one(algebra);
        }
        let zero = WeilElement::zero(algebra);
        let mut x: Vec<WeilElement> = self.entries.clone();
        for _ in 1..n {
            let mut mu = vec![zero.clone(); n * n];
            let mut tail = zero.clone();
            for i in (0..n).rev() {
                mu[i * n + i] = tail.scale(-1.0);
                tail = ring_add(&tail, &x[i * n + i]);
                for j in i + 1..n {
                    mu[i * n + j] = x[i * n + j].clone();
                }
            }
            let mut next = vec![zero.clone(); n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = zero.clone();
                    for k in i..n {
                        acc = ring_add(&acc, &ring_mul(&mu[i * n + k], self.entry(k, j)));
                    }
                    next[i * n + j] = acc;
                }
            }
            x = next;
        }
        if n % 2 == 0 {
            x[0].scale(-1.0)
        } else {
            x[0].clone()
        }
    }

    pub fn mul(&self, other: &FrameMatrix) -> FrameMatrix {
        let n = self.n;
        let alg = self.algebra().expect("non-empty").clone();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = WeilElement::zero(&alg);
                for k in 0..n {
                    acc = ring_add(&acc, &ring_mul(self.entry(i, k), other.entry(k, j)));
                }
                entries.push(acc);
            }
        }
        FrameMatrix { n, entries }
    }

    /// Inverse over `A` by Gauss-Jordan with invertible pivots, or `None`
    /// when no column has an invertible pivot candidate.
    pub fn inverse(&self) -> Option<FrameMatrix> {
        let n = self.n;
        let alg = self.algebra()?.clone();
        let mut a: Vec<Vec<WeilElement>> =
            (0..n).map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect()).collect();
        let mut inv: Vec<Vec<WeilElement>> = (0..n)
            .map(|i| (0..n).map(|j| WeilElement::constant(&alg, if i == j { 1.0 } else { 0.0 })).collect())
            .collect();
        for c in 0..n {
            let p = (c..n)
                .max_by(|&i, &j| a[i][c].augmentation().abs().total_cmp(&a[j][c].augmentation().abs()))?;
            if !a[p][c].is_invertible() {
                return None;
            }
            a.swap(p, c);
            inv.swap(p, c);
            let pinv = a[c][c].invert().ok()?;
            for j in 0..n {
                a[c][j] = ring_mul(&a[c][j], &pinv);
                inv[c][j] = ring_mul(&inv[c][j], &pinv);
            }
            for i in 0..n {
                if i == c {
                    continue;
                }
                let f = a[i][c].clone();
                for j in 0..n {
                    a[i][j] = a[i][j].sub(&ring_mul(&f, &a[c][j])).ok()?;
                    inv[i][j] = inv[i][j].sub(&ring_mul(&f, &inv[c][j])).ok()?;
                }
            }
        }
        Some(FrameMatrix::from_rows(inv))
    }
}

/// Both invertibility routes at one near point.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameTest {
    /// Augmentation of the determinant computed over `A`.
    pub aug_det: f64,
    /// Determinant of the augmented real matrix.
    pub real_det: f64,
    /// `(max |augmented entry|)^n`.
    pub scale: f64,
    pub status: Verdict,
    pub routes_agree: bool,
}

fn classify(value: f64, scale: f64) -> Verdict {
    if scale == 0.0 || !value.is_finite() {
        return Verdict::Fail;
    }
    let v = value.abs();
    if v > PASS_REL * scale {
        Verdict::Pass
    } else if v <= ZERO_REL * scale {
        Verdict::Fail
    } else {
        Verdict::Indeterminate
    }
}

pub fn frame_test(fields: &[VectorField], xi: &NearPoint) -> Result<FrameTest> {
    let m = frame_matrix(fields, xi)?;
    let aug = m.augmented();
    let n = m.n();
    let max_entry = aug.iter().flatten().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    let scale = if n == 0 { 1.0 } else { max_entry.powi(n as i32) };
    let aug_det = m.det(xi.algebra()).augmentation();
    let real_det = real_det(&aug);
    let by_ring = classify(aug_det, scale);
    let by_real = classify(real_det, scale);
    let routes_agree = by_ring == by_real;
    let status = if routes_agree { by_ring } else { Verdict::Indeterminate };
    Ok(FrameTest { aug_det, real_det, scale, status, routes_agree })
}

/// Whether the prolonged fields form an `A`-basis of `T_ξ M^A`; borderline
/// cases count as `false`.
pub fn frame_is_basis(fields: &[VectorField], xi: &NearPoint) -> Result<bool> {
    Ok(frame_test(fields, xi)?.status == Verdict::Pass)
}

/// Where `parallelism_check` looks: explicit points first, then `count`
/// random near points with base uniform in `region`.
#[derive(Debug, Clone)]
pub struct Sampler {
    pub region: Vec<(f64, f64)>,
    pub count: usize,
    pub seed: u64,
    pub points: Vec<NearPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameSample {
    pub base: Vec<f64>,
    pub aug_det: Option<f64>,
    pub ok: bool,
    pub status: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleCounts {
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameReport {
    pub verdict: Verdict,
    pub samples: Vec<FrameSample>,
    pub seed: u64,
    pub algebra: PresentationJson,
    pub counts: SampleCounts,
    pub fields: Vec<Vec<String>>,
}

pub fn parallelism_check(fields: &[VectorField], algebra: &Algebra, sampler: &Sampler) -> Result<FrameReport> {
    let n = fields.len();
    if sampler.region.len() != n {
        return Err(GeometryError::DimensionMismatch { expected: n, got: sampler.region.len() });
    }
    if let Some(f) = fields.iter().find(|f| f.dim() != n) {
        return Err(GeometryError::DimensionMismatch { expected: n, got: f.dim() });
    }
    let mut points = sampler.points.clone();
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(GeometryError::DimensionMismatch { expected: n, got: p.dim() });
    }
    let mut r = rng(sampler.seed);
    points.extend((0..sampler.count).map(|_| random_near_point(algebra, &sampler.region, &mut r)));

    let mut counts = SampleCounts::default();
    let samples: Vec<FrameSample> = points
        .iter()
        .map(|xi| {
            let base = xi.base();
            let sample = match frame_test(fields, xi) {
                Ok(t) => FrameSample {
                    base,
                    aug_det: Some(t.aug_det),
                    ok: t.status == Verdict::Pass,
                    status: t.status,
                    error: None,
                },
                Err(e) => {
                    FrameSample { base, aug_det: None, ok: false, status: Verdict::Fail, error: Some(e.to_string()) }
                }
            };
            match sample.status {
                Verdict::Pass => counts.pass += 1,
                Verdict::Fail => counts.fail += 1,
                Verdict::Indeterminate => counts.indeterminate += 1,
            }
            sample
        })
        .collect();

    let verdict = if samples.is_empty() {
        Verdict::Indeterminate
    } else if counts.fail > 0 {
        Verdict::Fail
    } else if counts.indeterminate > 0 {
        Verdict::Indeterminate
    } else {
        Verdict::Pass
    };
    Ok(FrameReport {
        verdict,
        samples,
        seed: sampler.seed,
        algebra: algebra.to_json(),
        counts,
        fields: fields.iter().map(|f| f.components().iter().map(|c| c.to_string()).collect()).collect(),
    })
}
