use serde::{Deserialize, Serialize};

use super::{real_rank, Verdict};
use crate::algebra::{tensor, Algebra, PresentationJson, WeilElement};
use crate::sample::{random_element, rng};

/// Multiplicativity tolerance (relative to `max(1, |map(u)·map(v)|)`).
pub const MULTIPLICATIVITY_TOL: f64 = 1e-10;

/// Result of comparing `A^B` (in the `ℝ^A ≅ A` realization) with `A ⊗ B`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeilIsoReport {
    pub verdict: Verdict,
    pub algebra_a: PresentationJson,
    pub algebra_b: PresentationJson,
    pub tensor: PresentationJson,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_tensor: usize,
    pub rank: usize,
    pub bijective: bool,
    pub samples: usize,
    pub seed: u64,
    pub max_residual: f64,
    pub tolerance: f64,
}

/// Product in `A^B`: `(uv)_γ = Σ C^γ_{αβ} u_α v_β` with the `C` taken from `A`
/// and the products `u_α v_β` taken in `B`.
pub fn power_mul(a: &Algebra, u: &[WeilElement], v: &[WeilElement]) -> Vec<WeilElement> {
    let b = u[0].algebra().clone();
    let mut out = vec![WeilElement::zero(&b); a.dim()];
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            if let Some(k) = a.product_index(i, j) {
                out[k] = out[k].add(&ui.mul(vj).expect("same B")).expect("same B");
            }
        }
    }
    out
}

/// The canonical map `A^B → A ⊗ B`, `Σ m_α·u_α ↦ Σ (m_α ⊗ m_β)·u_{α,β}`.
pub fn weil_map(a: &Algebra, ab: &Algebra, u: &[WeilElement]) -> WeilElement {
    let mut out = vec![0.0; ab.dim()];
    for (ma, ua) in a.basis().iter().zip(u) {
        for (mb, &c) in ua.algebra().basis().iter().zip(ua.coeffs()) {
            if let Some(k) = ab.index_of(&ma.concat(mb)) {
                out[k] += c;
            }
        }
    }
    WeilElement::from_coeffs(ab, out).expect("tensor dim")
}

pub fn weil_iso_check(a: &Algebra, b: &Algebra, samples: usize, seed: u64) -> WeilIsoReport {
    let ab = tensor(a, b);
    let n = a.dim() * b.dim();

    // change-of-basis matrix: column (α, β) is the tensor coordinate vector of m_α ⊗ m_β
    let mut matrix = vec![vec![0.0; n]; ab.dim()];
    for (i, ma) in a.basis().iter().enumerate() {
        for (j, mb) in b.basis().iter().enumerate() {
            if let Some(k) = ab.index_of(&ma.concat(mb)) {
                matrix[k][i * b.dim() + j] = 1.0;
            }
        }
    }
    let rank = real_rank(&matrix, 1e-12);
    let bijective = ab.dim() == n && rank == n;

    let mut r = rng(seed);
    let mut max_residual = 0.0_f64;
    for _ in 0..samples {
        let u: Vec<WeilElement> = (0..a.dim()).map(|_| random_element(b, &mut r)).collect();
        let v: Vec<WeilElement> = (0..a.dim()).map(|_| random_element(b, &mut r)).collect();
        let lhs = weil_map(a, &ab, &power_mul(a, &u, &v));
        let rhs = weil_map(a, &ab, &u).mul(&weil_map(a, &ab, &v)).expect("same tensor");
        let residual = lhs.max_abs_diff(&rhs).expect("same tensor") / rhs.max_abs().max(1.0);
        max_residual = max_residual.max(residual);
    }
    let multiplicative = max_residual <= MULTIPLICATIVITY_TOL;
    WeilIsoReport {
        verdict: if bijective && multiplicative { Verdict::Pass } else { Verdict::Fail },
        algebra_a: a.to_json(),
        algebra_b: b.to_json(),
        tensor: ab.to_json(),
        dim_a: a.dim(),
        dim_b: b.dim(),
        dim_tensor: ab.dim(),
        rank,
        bijective,
        samples,
        seed,
        max_residual,
        tolerance: MULTIPLICATIVITY_TOL,
    }
}
