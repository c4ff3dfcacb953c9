use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{same_algebra, Algebra, AlgebraError, Monomial, Result};

/// An element of a Weil algebra: one real coefficient per basis monomial.
#[derive(Clone)]
pub struct WeilElement {
    algebra: Algebra,
    coeffs: Vec<f64>,
}

impl WeilElement {
    pub fn zero(algebra: &Algebra) -> Self {
        WeilElement { algebra: algebra.clone(), coeffs: vec![0.0; algebra.dim()] }
    }

    pub fn one(algebra: &Algebra) -> Self {
        Self::constant(algebra, 1.0)
    }

    /// `c · 1_A`
    pub fn constant(algebra: &Algebra, c: f64) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = c;
        e
    }

    /// The generator `T_var` (zero if it is killed by the ideal).
    pub fn variable(algebra: &Algebra, var: usize) -> Self {
        let mut e = Self::zero(algebra);
        if let Some(i) = algebra.index_of(&Monomial::var(algebra.num_vars(), var)) {
            e.coeffs[i] = 1.0;
        }
        e
    }

    pub fn from_coeffs(algebra: &Algebra, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(AlgebraError::LengthMismatch { expected: algebra.dim(), got: coeffs.len() });
        }
        Ok(WeilElement { algebra: algebra.clone(), coeffs })
    }

    /// Builds an element from `(monomial, coefficient)` terms. Terms whose
    /// monomial lies in the ideal are dropped; repeated monomials accumulate.
    pub fn from_terms(algebra: &Algebra, terms: &[(Monomial, f64)]) -> Result<Self> {
        let mut e = Self::zero(algebra);
        for (m, c) in terms {
            if m.num_vars() != algebra.num_vars() {
                return Err(AlgebraError::LengthMismatch { expected: algebra.num_vars(), got: m.num_vars() });
            }
            if let Some(i) = algebra.index_of(m) {
                e.coeffs[i] += c;
            }
        }
        Ok(e)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> Option<f64> {
        self.algebra.index_of(m).map(|i| self.coeffs[i])
    }

    /// Coefficient of `1_A`: the projection `A = ℝ ⊕ 𝔪 → ℝ`.
    pub fn augmentation(&self) -> f64 {
        self.coeffs[0]
    }

    /// `a - augmentation(a)·1`, the component in the maximal ideal.
    pub fn nilpotent_part(&self) -> Self {
        let mut e = self.clone();
        e.coeffs[0] = 0.0;
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    fn check(&self, other: &WeilElement) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch)
        }
    }

    pub fn add(&self, other: &WeilElement) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(WeilElement { algebra: self.algebra.clone(), coeffs })
    }

    pub fn sub(&self, other: &WeilElement) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(WeilElement { algebra: self.algebra.clone(), coeffs })
    }

    pub fn scale(&self, c: f64) -> Self {
        WeilElement { algebra: self.algebra.clone(), coeffs: self.coeffs.iter().map(|a| c * a).collect() }
    }

    pub fn add_scalar(&self, c: f64) -> Self {
        let mut e = self.clone();
        e.coeffs[0] += c;
        e
    }

    pub fn mul(&self, other: &WeilElement) -> Result<Self> {
        self.check(other)?;
        let alg = &self.algebra;
        let dim = alg.dim();
        let mut out = vec![0.0; dim];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if let Some(k) = alg.product_index(i, j) {
                    out[k] += a * b;
                }
            }
        }
        Ok(WeilElement { algebra: alg.clone(), coeffs: out })
    }

    /// `self^n` by repeated squaring; `self^0 = 1`.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::one(&self.algebra);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same algebra");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same algebra");
            }
        }
        result
    }

    /// Units of a local algebra are exactly the elements off the maximal ideal.
    pub fn is_invertible(&self) -> bool {
        self.augmentation() != 0.0
    }

    /// `c⁻¹ Σ_{j=0..h} (-η/c)^j` for `a = c + η`; exact since `η^{h+1} = 0`.
    pub fn invert(&self) -> Result<Self> {
        let c = self.augmentation();
        if c == 0.0 {
            return Err(AlgebraError::NotInvertible);
        }
        let q = self.nilpotent_part().scale(-1.0 / c);
        // Horner: 1 + q(1 + q(1 + ...))
        let mut acc = Self::one(&self.algebra);
        for _ in 0..self.algebra.height() {
            acc = acc.mul(&q).expect("same algebra").add_scalar(1.0);
        }
        Ok(acc.scale(1.0 / c))
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &WeilElement) -> Result<f64> {
        self.check(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    /// Matrix of multiplication by `self` in the standard basis:
    /// `(self · basis[j])` has coefficient `m[k][j]` on `basis[k]`.
    pub fn regular_representation(&self) -> Vec<Vec<f64>> {
        let dim = self.algebra.dim();
        let mut m = vec![vec![0.0; dim]; dim];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for j in 0..dim {
                if let Some(k) = self.algebra.product_index(i, j) {
                    m[k][j] += a;
                }
            }
        }
        m
    }
}

impl PartialEq for WeilElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for WeilElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeilElement({self})")
    }
}

impl fmt::Display for WeilElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (m, &c) in self.algebra.basis().iter().zip(&self.coeffs) {
            if c == 0.0 {
                continue;
            }
            if wrote {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            if m.is_unit() {
                write!(f, "{}", c.abs())?;
            } else {
                write!(f, "{}{}", c.abs(), m.label())?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// Operator forms panic on mismatched presentations; use the named methods
// to get a `Result` instead.
impl Add for &WeilElement {
    type Output = WeilElement;
    fn add(self, rhs: &WeilElement) -> WeilElement {
        WeilElement::add(self, rhs).expect("presentation mismatch")
    }
}

impl Sub for &WeilElement {
    type Output = WeilElement;
    fn sub(self, rhs: &WeilElement) -> WeilElement {
        WeilElement::sub(self, rhs).expect("presentation mismatch")
    }
}

impl Mul for &WeilElement {
    type Output = WeilElement;
    fn mul(self, rhs: &WeilElement) -> WeilElement {
        WeilElement::mul(self, rhs).expect("presentation mismatch")
    }
}

impl Neg for &WeilElement {
    type Output = WeilElement;
    fn neg(self) -> WeilElement {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_dual, make_reals, make_truncated, tensor};

    fn elem(alg: &Algebra, c: &[f64]) -> WeilElement {
        WeilElement::from_coeffs(alg, c.to_vec()).unwrap()
    }

    #[test]
    fn add_and_scale() {
        let d = make_dual();
        let one = WeilElement::one(&d);
        let t = WeilElement::variable(&d, 0);
        assert_eq!((&one + &t).coeffs(), &[1.0, 1.0]);
        let a = elem(&d, &[3.0, -2.0]);
        assert!(a.scale(0.0).is_zero());
        assert!(a.add(&a.scale(-1.0)).unwrap().is_zero());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = WeilElement::one(&make_dual());
        let b = WeilElement::one(&make_truncated(1, 2).unwrap());
        assert_eq!(a.add(&b).unwrap_err(), AlgebraError::PresentationMismatch);
        assert_eq!(a.mul(&b).unwrap_err(), AlgebraError::PresentationMismatch);
    }

    #[test]
    fn structurally_equal_algebras_interoperate() {
        let a = WeilElement::one(&make_dual());
        let b = WeilElement::one(&make_truncated(1, 1).unwrap());
        assert!(a.add(&b).is_ok());
    }

    #[test]
    fn dual_square_vanishes() {
        let d = make_dual();
        let t = WeilElement::variable(&d, 0);
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn dd_cross_term() {
        let d = make_dual();
        let dd = tensor(&d, &d);
        let s = &WeilElement::variable(&dd, 0) + &WeilElement::variable(&dd, 1);
        // (T1+T2)^2 = T1^2 + 2 T1T2 + T2^2 → 2 T1T2
        assert_eq!((&s * &s).coeffs(), &[0.0, 0.0, 0.0, 2.0]);
    }

    #[test]
    fn truncated_square() {
        let a = make_truncated(1, 2).unwrap();
        let x = elem(&a, &[1.0, 1.0, 0.0]);
        assert_eq!((&x * &x).coeffs(), &[1.0, 2.0, 1.0]);
    }

    #[test]
    fn augmentation_and_nilpotent_part() {
        let d = make_dual();
        let a = elem(&d, &[3.0, 5.0]);
        assert_eq!(a.augmentation(), 3.0);
        assert_eq!(a.nilpotent_part().coeffs(), &[0.0, 5.0]);
        assert_eq!(WeilElement::one(&d).augmentation(), 1.0);
        assert!(WeilElement::one(&d).nilpotent_part().is_zero());
    }

    #[test]
    fn inverse_examples() {
        let d = make_dual();
        assert_eq!(elem(&d, &[1.0, 1.0]).invert().unwrap().coeffs(), &[1.0, -1.0]);

        let a = make_truncated(1, 2).unwrap();
        let inv = elem(&a, &[2.0, 1.0, 0.0]).invert().unwrap();
        assert_eq!(inv.coeffs(), &[0.5, -0.25, 0.125]);

        let dd = tensor(&d, &d);
        let s = &WeilElement::variable(&dd, 0) + &WeilElement::variable(&dd, 1);
        assert!(!s.is_invertible());
        assert_eq!(s.invert().unwrap_err().to_string(), "not invertible: augmentation is 0");
    }

    #[test]
    fn inverse_in_reals() {
        let r = make_reals();
        let x = WeilElement::constant(&r, 4.0);
        assert_eq!(x.invert().unwrap().coeffs(), &[0.25]);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = make_truncated(2, 3).unwrap();
        let x = WeilElement::from_coeffs(&a, (0..a.dim()).map(|i| 0.3 + 0.1 * i as f64).collect()).unwrap();
        let mut expected = WeilElement::one(&a);
        for n in 0..6 {
            assert!(x.pow(n).max_abs_diff(&expected).unwrap() < 1e-12);
            expected = &expected * &x;
        }
    }

    #[test]
    fn regular_representation_acts_by_multiplication() {
        let a = make_truncated(2, 2).unwrap();
        let x = WeilElement::from_coeffs(&a, vec![1.0, 2.0, -1.0, 0.5, 0.25, 3.0]).unwrap();
        let y = WeilElement::from_coeffs(&a, vec![-2.0, 1.0, 0.0, 1.5, -1.0, 0.5]).unwrap();
        let m = x.regular_representation();
        let xy = &x * &y;
        for k in 0..a.dim() {
            let v: f64 = (0..a.dim()).map(|j| m[k][j] * y.coeffs()[j]).sum();
            assert!((v - xy.coeffs()[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn display() {
        let d = make_dual();
        assert_eq!(elem(&d, &[3.0, -5.0]).to_string(), "3 - 5T");
        assert_eq!(WeilElement::zero(&d).to_string(), "0");
    }
}
