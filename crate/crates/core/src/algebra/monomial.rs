use std::cmp::Ordering;
use std::fmt;

/// A monomial `T1^e1 ... Ts^es`, stored as its exponent vector.
///
/// The zero exponent vector is the unit `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// The monomial `T_var`.
    pub fn var(num_vars: usize, var: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`, i.e. every exponent of `self` is at most the matching one of `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Juxtaposes two exponent vectors: the monomial `self ⊗ other` in the
    /// variables of a tensor product.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Monomial(e)
    }

    /// Graded lexicographic order: lower degree first, then `T1` before `T2`
    /// within a degree (so `T1^2 < T1T2 < T2^2`).
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }

    /// All monomials in `num_vars` variables of total degree at most `max_degree`,
    /// in graded lexicographic order.
    pub fn enumerate(num_vars: usize, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let mut current = vec![0; num_vars];
            of_degree(num_vars, 0, d, &mut current, &mut out);
        }
        out
    }

    /// Human-readable label: `1`, `T`, `T^2`, `T1T2`, `T1^2T3`.
    ///
    /// Single-variable algebras drop the variable index.
    pub fn label(&self) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let single = self.0.len() == 1;
        let mut s = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            s.push('T');
            if !single {
                s.push_str(&(i + 1).to_string());
            }
            if e > 1 {
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
        s
    }
}

// Emits the degree-`remaining` completions of `current[pos..]` with the
// leading variable's exponent descending, which is grlex order within a degree.
fn of_degree(num_vars: usize, pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if num_vars == 0 {
        if remaining == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos == num_vars - 1 {
        current[pos] = remaining;
        out.push(Monomial(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        of_degree(num_vars, pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_is_grlex() {
        let all = Monomial::enumerate(2, 2);
        let labels: Vec<_> = all.iter().map(Monomial::label).collect();
        assert_eq!(labels, ["1", "T1", "T2", "T1^2", "T1T2", "T2^2"]);
        for w in all.windows(2) {
            assert_eq!(w[0].grlex_cmp(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn enumerate_zero_vars() {
        assert_eq!(Monomial::enumerate(0, 3), vec![Monomial::new(vec![])]);
    }

    #[test]
    fn labels() {
        assert_eq!(Monomial::new(vec![2]).label(), "T^2");
        assert_eq!(Monomial::new(vec![2, 0, 1]).label(), "T1^2T3");
        assert_eq!(Monomial::unit(3).label(), "1");
    }

    #[test]
    fn divisibility() {
        let a = Monomial::new(vec![1, 1]);
        assert!(Monomial::new(vec![1, 0]).divides(&a));
        assert!(!Monomial::new(vec![2, 0]).divides(&a));
        assert!(Monomial::unit(2).divides(&a));
    }
}
