use super::{Algebra, AlgebraError, Monomial, Result, WeilElement};

/// A homomorphism of local algebras `A → B`, determined by the images of
/// the generators of `A`.
#[derive(Debug, Clone)]
pub struct AlgebraHom {
    source: Algebra,
    target: Algebra,
    images: Vec<WeilElement>,
    // image of each source basis monomial, precomputed
    basis_images: Vec<WeilElement>,
}

fn eval_monomial(target: &Algebra, images: &[WeilElement], m: &Monomial) -> WeilElement {
    m.exponents()
        .iter()
        .zip(images)
        .fold(WeilElement::one(target), |acc, (&e, img)| &acc * &img.pow(e))
}

impl AlgebraHom {
    /// Validates that every generator image lies in `𝔪_B` and that every
    /// ideal generator of `A` maps to zero.
    pub fn new(source: &Algebra, target: &Algebra, images: Vec<WeilElement>) -> Result<Self> {
        if images.len() != source.num_vars() {
            return Err(AlgebraError::LengthMismatch { expected: source.num_vars(), got: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if !super::same_algebra(img.algebra(), target) {
                return Err(AlgebraError::PresentationMismatch);
            }
            if img.augmentation() != 0.0 {
                return Err(AlgebraError::ImageNotInMaximalIdeal {
                    var: source.var_label(i),
                    augmentation: img.augmentation(),
                });
            }
        }
        for g in source.ideal_generators() {
            let value = eval_monomial(target, &images, &g);
            let scale = g
                .exponents()
                .iter()
                .zip(&images)
                .fold(1.0_f64, |acc, (&e, img)| acc * img.max_abs().powi(e as i32))
                .max(1.0);
            if value.max_abs() > 1e-12 * scale {
                return Err(AlgebraError::RelationNotPreserved(g.label()));
            }
        }
        let basis_images = source.basis().iter().map(|m| eval_monomial(target, &images, m)).collect();
        Ok(AlgebraHom { source: source.clone(), target: target.clone(), images, basis_images })
    }

    pub fn identity(algebra: &Algebra) -> Self {
        let images = (0..algebra.num_vars()).map(|i| WeilElement::variable(algebra, i)).collect();
        Self::new(algebra, algebra, images).expect("identity is a homomorphism")
    }

    /// The augmentation `A → ℝ`, with `ℝ` presented on zero variables.
    pub fn augmentation(source: &Algebra) -> Self {
        let reals = super::make_reals();
        let images = (0..source.num_vars()).map(|_| WeilElement::zero(&reals)).collect();
        Self::new(source, &reals, images).expect("augmentation is a homomorphism")
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn images(&self) -> &[WeilElement] {
        &self.images
    }

    pub fn apply(&self, a: &WeilElement) -> Result<WeilElement> {
        if !super::same_algebra(a.algebra(), &self.source) {
            return Err(AlgebraError::PresentationMismatch);
        }
        let mut out = vec![0.0; self.target.dim()];
        for (&c, img) in a.coeffs().iter().zip(&self.basis_images) {
            if c == 0.0 {
                continue;
            }
            for (o, v) in out.iter_mut().zip(img.coeffs()) {
                *o += c * v;
            }
        }
        WeilElement::from_coeffs(&self.target, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_dual, make_reals, make_truncated};

    #[test]
    fn dual_into_cubic_by_square() {
        let d = make_dual();
        let a = make_truncated(1, 2).unwrap();
        let t = WeilElement::variable(&a, 0);
        let h = AlgebraHom::new(&d, &a, vec![&t * &t]).unwrap();
        let x = WeilElement::from_coeffs(&d, vec![3.0, 5.0]).unwrap();
        assert_eq!(h.apply(&x).unwrap().coeffs(), &[3.0, 0.0, 5.0]);
    }

    #[test]
    fn dual_to_reals_is_augmentation() {
        let d = make_dual();
        let r = make_reals();
        let explicit = AlgebraHom::new(&d, &r, vec![WeilElement::zero(&r)]).unwrap();
        let x = WeilElement::from_coeffs(&d, vec![3.0, 5.0]).unwrap();
        assert_eq!(explicit.apply(&x).unwrap().coeffs(), &[3.0]);
        assert_eq!(AlgebraHom::augmentation(&d).apply(&x).unwrap().coeffs(), &[3.0]);
    }

    #[test]
    fn cubic_onto_dual_is_valid_but_not_back() {
        let d = make_dual();
        let a = make_truncated(1, 2).unwrap();
        assert!(AlgebraHom::new(&a, &d, vec![WeilElement::variable(&d, 0)]).is_ok());
        let err = AlgebraHom::new(&d, &a, vec![WeilElement::variable(&a, 0)]).unwrap_err();
        assert_eq!(err.to_string(), "relation not preserved: T^2");
    }

    #[test]
    fn image_must_be_nilpotent() {
        let d = make_dual();
        let err = AlgebraHom::new(&d, &d, vec![WeilElement::one(&d)]).unwrap_err();
        assert!(matches!(err, AlgebraError::ImageNotInMaximalIdeal { .. }));
        assert!(err.to_string().starts_with("image not in maximal ideal"));
    }

    #[test]
    fn identity_acts_trivially() {
        let a = make_truncated(2, 2).unwrap();
        let x = WeilElement::from_coeffs(&a, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(AlgebraHom::identity(&a).apply(&x).unwrap(), x);
    }

    #[test]
    fn source_mismatch() {
        let d = make_dual();
        let a = make_truncated(1, 2).unwrap();
        let h = AlgebraHom::identity(&d);
        assert!(h.apply(&WeilElement::one(&a)).is_err());
    }
}
