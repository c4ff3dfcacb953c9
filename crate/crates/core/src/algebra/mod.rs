//! Monomially presented local (Weil) algebras.
//!
//! A presentation is `ℝ[T1..Ts] / I` where the ideal `I` contains every
//! monomial of degree `k + 1` plus a finite set of extra monomial generators.
//! Because `I` is monomial, the standard monomials (those outside `I`) form a
//! basis and normal forms reduce to divisibility tests.

mod element;
mod hom;
mod json;
mod monomial;
mod preset;
mod text;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use element::WeilElement;
pub use hom::AlgebraHom;
pub use json::{ElementJson, PresentationJson, PresentationRef, TermJson};
pub use monomial::Monomial;
pub use preset::{catalog, parse_preset};

/// Shared handle to an immutable presentation.
pub type Algebra = Arc<WeilPresentation>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("presentation mismatch")]
    PresentationMismatch,
    #[error("ideal not proper: generator {0} has degree 0")]
    IdealNotProper(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("not invertible: augmentation is 0")]
    NotInvertible,
    #[error("image not in maximal ideal: image of {var} has augmentation {augmentation}")]
    ImageNotInMaximalIdeal { var: String, augmentation: f64 },
    #[error("relation not preserved: {0}")]
    RelationNotPreserved(String),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("monomial {0} is not a basis monomial")]
    NotInBasis(String),
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

/// `ℝ[T1..Ts] / ((T1..Ts)^{k+1} + (extra monomials))`, with its standard basis
/// in graded lexicographic order.
pub struct WeilPresentation {
    num_vars: usize,
    trunc_order: u32,
    extra_gens: Vec<Monomial>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    // products[i * dim + j] = index of basis[i] * basis[j], or None if it lies in the ideal
    products: Vec<Option<usize>>,
}

impl WeilPresentation {
    /// Builds a presentation from raw parts, validating and minimalizing the
    /// extra generators.
    pub fn from_parts(num_vars: usize, trunc_order: u32, extra_gens: Vec<Monomial>) -> Result<Algebra> {
        let mut gens: Vec<Monomial> = Vec::with_capacity(extra_gens.len());
        for g in extra_gens {
            if g.num_vars() != num_vars {
                return Err(AlgebraError::InvalidPresentation(format!(
                    "generator {:?} has {} exponents, expected {}",
                    g.exponents(),
                    g.num_vars(),
                    num_vars
                )));
            }
            if g.degree() == 0 {
                return Err(AlgebraError::IdealNotProper(g.label()));
            }
            if g.degree() > trunc_order {
                return Err(AlgebraError::InvalidPresentation(format!(
                    "generator {} has degree {} > truncation order {}",
                    g.label(),
                    g.degree(),
                    trunc_order
                )));
            }
            gens.push(g);
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in &gens {
            let redundant = gens.iter().any(|h| h != g && h.divides(g))
                || minimal.contains(g);
            if !redundant {
                minimal.push(g.clone());
            }
        }
        minimal.sort_by(Monomial::grlex_cmp);

        let basis: Vec<Monomial> = Monomial::enumerate(num_vars, trunc_order)
            .into_iter()
            .filter(|m| !minimal.iter().any(|g| g.divides(m)))
            .collect();
        let index: HashMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = basis.len();
        let mut products = Vec::with_capacity(dim * dim);
        for a in &basis {
            for b in &basis {
                products.push(index.get(&a.mul(b)).copied());
            }
        }
        Ok(Arc::new(WeilPresentation {
            num_vars,
            trunc_order,
            extra_gens: minimal,
            basis,
            index,
            products,
        }))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn trunc_order(&self) -> u32 {
        self.trunc_order
    }

    pub fn extra_gens(&self) -> &[Monomial] {
        &self.extra_gens
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Largest `d` with `𝔪^d ≠ 0`. For a monomial quotient `𝔪^d` is spanned by
    /// the basis monomials of degree at least `d`, so this is the top basis degree.
    pub fn height(&self) -> u32 {
        self.basis.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Structure constants: `basis[i] * basis[j]` is either `basis[k]` or zero.
    pub fn product_index(&self, i: usize, j: usize) -> Option<usize> {
        self.products[i * self.dim() + j]
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(Monomial::label).collect()
    }

    /// Minimal monomial generators of the presenting ideal (the minimal
    /// non-standard monomials). Each has degree at most `trunc_order + 1`.
    pub fn ideal_generators(&self) -> Vec<Monomial> {
        Monomial::enumerate(self.num_vars, self.trunc_order + 1)
            .into_iter()
            .filter(|m| self.index_of(m).is_none())
            .filter(|m| {
                (0..self.num_vars).filter(|&i| m.exponents()[i] > 0).all(|i| {
                    let mut e = m.exponents().to_vec();
                    e[i] -= 1;
                    self.index_of(&Monomial::new(e)).is_some()
                })
            })
            .collect()
    }

    /// Same algebra as `other`: equal variable count and identical basis.
    pub fn same_as(&self, other: &WeilPresentation) -> bool {
        self.num_vars == other.num_vars && self.basis == other.basis
    }

    /// Name of variable `i` as used in labels.
    pub fn var_label(&self, i: usize) -> String {
        Monomial::var(self.num_vars, i).label()
    }
}

impl PartialEq for WeilPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Debug for WeilPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeilPresentation")
            .field("num_vars", &self.num_vars)
            .field("trunc_order", &self.trunc_order)
            .field("extra_gens", &self.extra_gens.iter().map(Monomial::label).collect::<Vec<_>>())
            .field("basis", &self.labels())
            .finish()
    }
}

pub(crate) fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || a.same_as(b)
}

/// The trivial local algebra `ℝ` (no variables, height 0).
pub fn make_reals() -> Algebra {
    WeilPresentation::from_parts(0, 0, Vec::new()).expect("reals")
}

/// The dual numbers `ℝ[T]/(T^2)`.
pub fn make_dual() -> Algebra {
    WeilPresentation::from_parts(1, 1, Vec::new()).expect("dual numbers")
}

/// `ℝ[T1..Ts] / (T1..Ts)^{k+1}`, of dimension `C(s+k, k)`.
///
/// `s = 0` is accepted only together with `k = 0`; use [`make_reals`] for `ℝ`.
pub fn make_truncated(num_vars: usize, order: u32) -> Result<Algebra> {
    if num_vars == 0 && order > 0 {
        return Err(AlgebraError::InvalidPresentation(
            "truncated algebra needs at least one variable (use reals for ℝ)".into(),
        ));
    }
    WeilPresentation::from_parts(num_vars, order, Vec::new())
}

/// Adds monomial generators to the ideal of `p`.
pub fn quotient_by_monomials(p: &WeilPresentation, gens: &[Monomial]) -> Result<Algebra> {
    let mut all = p.extra_gens.clone();
    all.extend_from_slice(gens);
    WeilPresentation::from_parts(p.num_vars, p.trunc_order, all)
}

/// `A ⊗ B` with variables relabelled as the A-block followed by the B-block.
///
/// The result has basis `{ mA·mB }`, dimension `dim A · dim B` and height
/// `height A + height B`.
pub fn tensor(a: &WeilPresentation, b: &WeilPresentation) -> Algebra {
    let height = a.height() + b.height();
    let pad_a = Monomial::unit(b.num_vars);
    let pad_b = Monomial::unit(a.num_vars);
    let gens: Vec<Monomial> = a
        .ideal_generators()
        .iter()
        .map(|g| g.concat(&pad_a))
        .chain(b.ideal_generators().iter().map(|g| pad_b.concat(g)))
        .filter(|g| g.degree() <= height)
        .collect();
    WeilPresentation::from_parts(a.num_vars + b.num_vars, height, gens).expect("tensor of valid presentations")
}

/// `A ⊗ B` together with the inclusions `a ↦ a ⊗ 1` and `b ↦ 1 ⊗ b`.
pub fn tensor_with_inclusions(a: &Algebra, b: &Algebra) -> (Algebra, AlgebraHom, AlgebraHom) {
    let ab = tensor(a, b);
    let left = (0..a.num_vars).map(|i| WeilElement::variable(&ab, i)).collect();
    let right = (0..b.num_vars).map(|i| WeilElement::variable(&ab, a.num_vars + i)).collect();
    let ia = AlgebraHom::new(a, &ab, left).expect("left inclusion");
    let ib = AlgebraHom::new(b, &ab, right).expect("right inclusion");
    (ab, ia, ib)
}
