//! JSON forms of presentations and elements.
//!
//! Presentation: `{"vars": s, "trunc": k, "extra_gens": [[e1..es], ...]}`.
//! Element: `{"presentation": <inline or preset name>, "coeffs": [{"mono": [..], "c": x}, ...]}`.

use serde::{Deserialize, Serialize};

use super::{parse_preset, Algebra, AlgebraError, Monomial, Result, WeilElement, WeilPresentation};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub vars: usize,
    pub trunc: u32,
    #[serde(default)]
    pub extra_gens: Vec<Vec<u32>>,
}

/// Either an inline presentation or a preset name such as `"dual"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PresentationRef {
    Inline(PresentationJson),
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub mono: Vec<u32>,
    pub c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub presentation: PresentationRef,
    pub coeffs: Vec<TermJson>,
}

impl PresentationJson {
    pub fn build(&self) -> Result<Algebra> {
        let gens = self.extra_gens.iter().cloned().map(Monomial::new).collect();
        WeilPresentation::from_parts(self.vars, self.trunc, gens)
    }
}

impl PresentationRef {
    pub fn resolve(&self) -> Result<Algebra> {
        match self {
            PresentationRef::Inline(p) => p.build(),
            PresentationRef::Named(name) => parse_preset(name),
        }
    }
}

impl WeilPresentation {
    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            vars: self.num_vars(),
            trunc: self.trunc_order(),
            extra_gens: self.extra_gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl ElementJson {
    pub fn build(&self) -> Result<WeilElement> {
        let algebra = self.presentation.resolve()?;
        let mut coeffs = vec![0.0; algebra.dim()];
        for t in &self.coeffs {
            let m = Monomial::new(t.mono.clone());
            if m.num_vars() != algebra.num_vars() {
                return Err(AlgebraError::LengthMismatch { expected: algebra.num_vars(), got: m.num_vars() });
            }
            let i = algebra.index_of(&m).ok_or_else(|| AlgebraError::NotInBasis(m.label()))?;
            coeffs[i] += t.c;
        }
        WeilElement::from_coeffs(&algebra, coeffs)
    }
}

impl WeilElement {
    /// Inline-presentation JSON listing every basis coefficient in basis order.
    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            presentation: PresentationRef::Inline(self.algebra().to_json()),
            coeffs: self
                .algebra()
                .basis()
                .iter()
                .zip(self.coeffs())
                .map(|(m, &c)| TermJson { mono: m.exponents().to_vec(), c })
                .collect(),
        }
    }
}
