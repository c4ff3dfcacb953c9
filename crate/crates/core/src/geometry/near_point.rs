use super::{sigma_decompose, GeometryError, Result};
use crate::algebra::{same_algebra, Algebra, AlgebraHom, WeilElement};
use crate::expr::SmoothExpr;

/// `ξ ∈ (ℝ^n)^A` in chart coordinates `(ξ(x1), .., ξ(xn))`.
#[derive(Debug, Clone, PartialEq)]
pub struct NearPoint {
    algebra: Algebra,
    coords: Vec<WeilElement>,
}

impl NearPoint {
    pub fn new(algebra: &Algebra, coords: Vec<WeilElement>) -> Result<Self> {
        if coords.iter().any(|c| !same_algebra(c.algebra(), algebra)) {
            return Err(crate::algebra::AlgebraError::PresentationMismatch.into());
        }
        Ok(NearPoint { algebra: algebra.clone(), coords })
    }

    /// The canonical inclusion `M → M^A`, `x ↦ (x1·1, .., xn·1)`.
    pub fn inclusion(algebra: &Algebra, x: &[f64]) -> Self {
        NearPoint { algebra: algebra.clone(), coords: x.iter().map(|&v| WeilElement::constant(algebra, v)).collect() }
    }

    /// Parses `x1=<element>,x2=<element>,...`; every coordinate of the
    /// `dim`-dimensional chart must appear exactly once.
    pub fn parse(algebra: &Algebra, dim: usize, text: &str) -> Result<Self> {
        let mut coords: Vec<Option<WeilElement>> = vec![None; dim];
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| GeometryError::InvalidPoint(format!("expected x<i>=<element>, got {part:?}")))?;
            let name = name.trim();
            let index: usize = name
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .filter(|&i| i >= 1 && i <= dim)
                .ok_or_else(|| GeometryError::InvalidPoint(format!("unknown coordinate {name:?} (chart dimension {dim})")))?;
            if coords[index - 1].is_some() {
                return Err(GeometryError::InvalidPoint(format!("coordinate {name} given twice")));
            }
            coords[index - 1] = Some(WeilElement::parse(algebra, value)?);
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| GeometryError::InvalidPoint(format!("missing coordinate x{}", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(NearPoint { algebra: algebra.clone(), coords })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[WeilElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Base point (origin) of `ξ`.
    pub fn base(&self) -> Vec<f64> {
        project(self)
    }

    /// Same base point, every nilpotent part multiplied by `lambda`.
    pub fn rescale_nilpotent(&self, lambda: f64) -> NearPoint {
        let coords = self
            .coords
            .iter()
            .map(|c| c.nilpotent_part().scale(lambda).add_scalar(c.augmentation()))
            .collect();
        NearPoint { algebra: self.algebra.clone(), coords }
    }
}

/// The projection `M^A → M` induced by the augmentation.
pub fn project(xi: &NearPoint) -> Vec<f64> {
    xi.coords.iter().map(WeilElement::augmentation).collect()
}

/// `h^A(ξ)` for `h = (h1, .., hm)`: each new coordinate is `ξ(hj)`.
pub fn lift_map(h: &[SmoothExpr], xi: &NearPoint) -> Result<NearPoint> {
    let coords = h
        .iter()
        .map(|hj| hj.eval_weil(&xi.algebra, &xi.coords))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(NearPoint { algebra: xi.algebra.clone(), coords })
}

/// `φ_M(ξ) = φ ∘ ξ` for a homomorphism `φ: A → B`.
pub fn hom_pushforward(phi: &AlgebraHom, xi: &NearPoint) -> Result<NearPoint> {
    let coords = xi.coords.iter().map(|c| phi.apply(c)).collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(NearPoint { algebra: phi.target().clone(), coords })
}

/// `V^A ≅ V ⊗ A`: row `i` holds the basis coefficients of `ξ(e_i^*)`.
pub fn canonical_iso_va(xi: &NearPoint) -> Vec<Vec<f64>> {
    xi.coords.iter().map(sigma_decompose).collect()
}

pub fn canonical_iso_va_inverse(algebra: &Algebra, rows: &[Vec<f64>]) -> Result<NearPoint> {
    let coords = rows
        .iter()
        .map(|r| super::sigma_recompose(algebra, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(NearPoint { algebra: algebra.clone(), coords })
}
