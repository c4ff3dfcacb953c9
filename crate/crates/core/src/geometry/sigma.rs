use super::{GeometryError, Result};
use crate::algebra::{Algebra, AlgebraError, Monomial, WeilElement};
use crate::expr::SmoothExpr;

/// Dual-basis coefficients `a_α^*(a)` in the standard monomial basis.
pub fn sigma_decompose(a: &WeilElement) -> Vec<f64> {
    a.coeffs().to_vec()
}

pub fn sigma_recompose(algebra: &Algebra, coeffs: &[f64]) -> Result<WeilElement> {
    Ok(WeilElement::from_coeffs(algebra, coeffs.to_vec())?)
}

/// Coefficients with respect to the basis listed in `order`, which must be a
/// permutation of the standard basis.
pub fn sigma_decompose_in(a: &WeilElement, order: &[Monomial]) -> Result<Vec<f64>> {
    check_order(a.algebra(), order)?;
    Ok(order.iter().map(|m| a.coeff(m).expect("checked")).collect())
}

pub fn sigma_recompose_in(algebra: &Algebra, order: &[Monomial], coeffs: &[f64]) -> Result<WeilElement> {
    check_order(algebra, order)?;
    if coeffs.len() != order.len() {
        return Err(GeometryError::DimensionMismatch { expected: order.len(), got: coeffs.len() });
    }
    let terms: Vec<(Monomial, f64)> = order.iter().cloned().zip(coeffs.iter().copied()).collect();
    Ok(WeilElement::from_terms(algebra, &terms)?)
}

fn check_order(algebra: &Algebra, order: &[Monomial]) -> Result<()> {
    if order.len() != algebra.dim() {
        return Err(GeometryError::DimensionMismatch { expected: algebra.dim(), got: order.len() });
    }
    let mut seen = vec![false; algebra.dim()];
    for m in order {
        let i = algebra.index_of(m).ok_or_else(|| AlgebraError::NotInBasis(m.label()))?;
        if std::mem::replace(&mut seen[i], true) {
            return Err(GeometryError::InvalidPoint(format!("basis order repeats {}", m.label())));
        }
    }
    Ok(())
}

/// `γ(f) = σ(f^A)` evaluated at `ξ`: the real components of the lift.
pub fn gamma(f: &SmoothExpr, xi: &super::NearPoint) -> Result<Vec<f64>> {
    Ok(sigma_decompose(&f.eval_weil(xi.algebra(), xi.coords())?))
}
