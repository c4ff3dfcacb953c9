use super::{GeometryError, NearPoint, Result};
use crate::algebra::{make_dual, tensor_with_inclusions, Monomial, WeilElement};
use crate::expr::SmoothExpr;

/// Vector field `X = Σ Xi ∂/∂xi` on `ℝ^n` with smooth components.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    components: Vec<SmoothExpr>,
}

impl VectorField {
    /// Components may only mention `x1..xn` with `n = components.len()`.
    pub fn new(components: Vec<SmoothExpr>) -> Result<Self> {
        let n = components.len();
        if let Some(v) = components.iter().filter_map(SmoothExpr::max_var).max() {
            if v >= n {
                return Err(GeometryError::DimensionMismatch { expected: n, got: v + 1 });
            }
        }
        Ok(VectorField { components })
    }

    /// Parses one expression per component.
    pub fn parse<S: AsRef<str>>(components: &[S]) -> Result<Self> {
        let n = components.len();
        let components = components
            .iter()
            .map(|c| SmoothExpr::parse(c.as_ref(), n))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(VectorField { components })
    }

    /// The coordinate field `∂/∂x(i+1)` on `ℝ^n`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let components = (0..n).map(|j| SmoothExpr::constant(if i == j { 1.0 } else { 0.0 })).collect();
        VectorField { components }
    }

    pub fn components(&self) -> &[SmoothExpr] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// `Xf = Σ Xi ∂f/∂xi` at a real point.
    pub fn apply_real(&self, f: &SmoothExpr, x: &[f64]) -> Result<f64> {
        let mut acc = 0.0;
        for (i, xi) in self.components.iter().enumerate() {
            acc += xi.eval_real(x)? * f.derive(i).eval_real(x)?;
        }
        Ok(acc)
    }
}

/// Tangent vector to `M^A` at `foot`, written `Σ ai (∂/∂xi)^A` with `ai ∈ A`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVectorA {
    pub foot: NearPoint,
    pub components: Vec<WeilElement>,
}

/// `X^A(ξ) = Σ Xi^A(ξ) (∂/∂xi)^A`.
pub fn prolong_field(field: &VectorField, xi: &NearPoint) -> Result<TangentVectorA> {
    if field.dim() != xi.dim() {
        return Err(GeometryError::DimensionMismatch { expected: field.dim(), got: xi.dim() });
    }
    let components = field
        .components
        .iter()
        .map(|c| c.eval_weil(xi.algebra(), xi.coords()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(TangentVectorA { foot: xi.clone(), components })
}

/// `X^A(f^A)(ξ) = Σ Xi^A(ξ) · (∂f/∂xi)^A(ξ)`, an element of `A`.
pub fn field_apply(field: &VectorField, f: &SmoothExpr, xi: &NearPoint) -> Result<WeilElement> {
    let v = prolong_field(field, xi)?;
    let mut acc = WeilElement::zero(xi.algebra());
    for (i, a) in v.components.iter().enumerate() {
        let df = f.derive(i).eval_weil(xi.algebra(), xi.coords())?;
        acc = acc.add(&a.mul(&df)?)?;
    }
    Ok(acc)
}

/// An `A`-valued function `Σ ck · fk^A` on `M^A`.
#[derive(Debug, Clone, Default)]
pub struct AFunction {
    terms: Vec<(Option<WeilElement>, SmoothExpr)>,
}

impl AFunction {
    /// `f^A` on its own.
    pub fn lift(f: SmoothExpr) -> Self {
        AFunction { terms: vec![(None, f)] }
    }

    /// Adds the term `c · f^A`.
    pub fn plus(mut self, c: WeilElement, f: SmoothExpr) -> Self {
        self.terms.push((Some(c), f));
        self
    }

    pub fn eval(&self, xi: &NearPoint) -> Result<WeilElement> {
        let alg = xi.algebra();
        let mut acc = WeilElement::zero(alg);
        for (c, f) in &self.terms {
            let v = f.eval_weil(alg, xi.coords())?;
            let term = match c {
                Some(c) => c.mul(&v)?,
                None => v,
            };
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// `X̃(φ)(ξ)`: the prolonged field applied to every real component `φ_α`
/// of `φ` as an ordinary directional derivative, then recombined as
/// `Σ a_α X̃(φ_α)`.
///
/// The derivative is taken by pushing `ξ + ε X^A(ξ)` into `A ⊗ 𝔻` and reading
/// off the coefficients of `a_α ⊗ ε`, so no partial derivative of any `fk`
/// is formed.
pub fn extend_field_apply(field: &VectorField, phi: &AFunction, xi: &NearPoint) -> Result<WeilElement> {
    let alg = xi.algebra();
    let v = prolong_field(field, xi)?;
    let (ad, ia, _) = tensor_with_inclusions(alg, &make_dual());
    let eps = WeilElement::variable(&ad, alg.num_vars());
    let coords = xi
        .coords()
        .iter()
        .zip(&v.components)
        .map(|(x, a)| Ok(ia.apply(x)?.add(&eps.mul(&ia.apply(a)?)?)?))
        .collect::<Result<Vec<_>>>()?;
    let moved = NearPoint::new(&ad, coords)?;
    let mut acc = WeilElement::zero(&ad);
    for (c, f) in &phi.terms {
        let value = f.eval_weil(&ad, moved.coords())?;
        let term = match c {
            Some(c) => ia.apply(c)?.mul(&value)?,
            None => value,
        };
        acc = acc.add(&term)?;
    }
    let eps_mono = Monomial::var(1, 0);
    let derivs: Vec<f64> = alg
        .basis()
        .iter()
        .map(|m| acc.coeff(&m.concat(&eps_mono)).unwrap_or(0.0))
        .collect();
    Ok(WeilElement::from_coeffs(alg, derivs)?)
}
