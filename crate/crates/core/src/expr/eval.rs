use thiserror::Error;

use super::{Primitive, SmoothExpr};
use crate::algebra::{make_truncated, Algebra, AlgebraError, WeilElement};
use SmoothExpr::*;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {func} of non-positive argument {arg}")]
    Domain { func: &'static str, arg: f64 },
    #[error("lift undefined: denominator not invertible at base point")]
    LiftUndefined,
    #[error("domain error at base point: {func} of non-positive argument {arg}")]
    BaseDomain { func: &'static str, arg: f64 },
    #[error("expression uses x{needed} but the point has {got} coordinates")]
    DimensionMismatch { needed: usize, got: usize },
    #[error("expected a single-variable expression in x1")]
    NotUnivariate,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

type Result<T> = std::result::Result<T, EvalError>;

// Repeated squaring; the Weil evaluation multiplies in the same order so the
// height-0 case reproduces these values bit for bit.
fn powi_real(a: f64, n: i32) -> f64 {
    let mut k = n.unsigned_abs();
    let mut result = 1.0;
    let mut base = a;
    while k > 0 {
        if k & 1 == 1 {
            result *= base;
        }
        k >>= 1;
        if k > 0 {
            base *= base;
        }
    }
    if n < 0 {
        1.0 / result
    } else {
        result
    }
}

fn check_dim(e: &SmoothExpr, got: usize) -> Result<()> {
    match e.max_var() {
        Some(i) if i >= got => Err(EvalError::DimensionMismatch { needed: i + 1, got }),
        _ => Ok(()),
    }
}

impl SmoothExpr {
    pub fn eval_real(&self, x: &[f64]) -> Result<f64> {
        check_dim(self, x.len())?;
        self.real(x)
    }

    fn real(&self, x: &[f64]) -> Result<f64> {
        Ok(match self {
            Const(c) => *c,
            Var(i) => x[*i],
            Neg(a) => -a.real(x)?,
            Add(a, b) => a.real(x)? + b.real(x)?,
            Sub(a, b) => a.real(x)? - b.real(x)?,
            Mul(a, b) => a.real(x)? * b.real(x)?,
            Div(a, b) => {
                let num = a.real(x)?;
                let den = b.real(x)?;
                if den == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                num / den
            }
            Pow(a, n) => {
                let v = a.real(x)?;
                if *n < 0 && v == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                powi_real(v, *n)
            }
            Func(p, a) => {
                let v = a.real(x)?;
                match p {
                    Primitive::Exp => v.exp(),
                    Primitive::Sin => v.sin(),
                    Primitive::Cos => v.cos(),
                    Primitive::Log if v > 0.0 => v.ln(),
                    Primitive::Sqrt if v >= 0.0 => v.sqrt(),
                    Primitive::Log | Primitive::Sqrt => return Err(EvalError::Domain { func: p.name(), arg: v }),
                }
            }
        })
    }

    /// Lifted evaluation `ξ ↦ ξ(f)` at the near point with coordinates `xi`
    /// over `algebra`.
    ///
    /// The augmentation of the result is `eval_real` at the base point.
    pub fn eval_weil(&self, algebra: &Algebra, xi: &[WeilElement]) -> Result<WeilElement> {
        check_dim(self, xi.len())?;
        for c in xi {
            if !crate::algebra::same_algebra(c.algebra(), algebra) {
                return Err(AlgebraError::PresentationMismatch.into());
            }
        }
        self.weil(algebra, xi)
    }

    fn weil(&self, alg: &Algebra, xi: &[WeilElement]) -> Result<WeilElement> {
        Ok(match self {
            Const(c) => WeilElement::constant(alg, *c),
            Var(i) => xi[*i].clone(),
            Neg(a) => -&a.weil(alg, xi)?,
            Add(a, b) => &a.weil(alg, xi)? + &b.weil(alg, xi)?,
            Sub(a, b) => &a.weil(alg, xi)? - &b.weil(alg, xi)?,
            Mul(a, b) => &a.weil(alg, xi)? * &b.weil(alg, xi)?,
            Div(a, b) => {
                let num = a.weil(alg, xi)?;
                let den = b.weil(alg, xi)?;
                divide(&num, &den)?
            }
            Pow(a, n) => {
                let v = a.weil(alg, xi)?;
                let p = v.pow(n.unsigned_abs());
                if *n < 0 {
                    p.invert().map_err(|_| EvalError::LiftUndefined)?
                } else {
                    p
                }
            }
            Func(p, a) => apply_primitive(*p, &a.weil(alg, xi)?)?,
        })
    }
}

/// `num / den` for invertible `den = c + η`: start from `num / c` and apply
/// `q ← (num - η q) / c` once per unit of height.
fn divide(num: &WeilElement, den: &WeilElement) -> Result<WeilElement> {
    let c = den.augmentation();
    if c == 0.0 {
        return Err(EvalError::LiftUndefined);
    }
    let eta = den.nilpotent_part();
    let over_c = |e: &WeilElement| {
        WeilElement::from_coeffs(e.algebra(), e.coeffs().iter().map(|v| v / c).collect()).expect("same dim")
    };
    let mut q = over_c(num);
    for _ in 0..num.algebra().height() {
        q = over_c(&(num - &(&eta * &q)));
    }
    Ok(q)
}

/// Taylor coefficients `g^{(j)}(c) / j!` for `j = 0..=order`.
fn primitive_taylor(p: Primitive, c: f64, order: u32) -> Vec<f64> {
    let n = order as usize + 1;
    let mut t = Vec::with_capacity(n);
    match p {
        Primitive::Exp => {
            let e = c.exp();
            let mut fact = 1.0;
            for j in 0..n {
                if j > 0 {
                    fact *= j as f64;
                }
                t.push(e / fact);
            }
        }
        Primitive::Sin | Primitive::Cos => {
            let (s, co) = c.sin_cos();
            let cycle = if p == Primitive::Sin { [s, co, -s, -co] } else { [co, -s, -co, s] };
            let mut fact = 1.0;
            for j in 0..n {
                if j > 0 {
                    fact *= j as f64;
                }
                t.push(cycle[j % 4] / fact);
            }
        }
        Primitive::Log => {
            t.push(c.ln());
            let mut cj = 1.0;
            for j in 1..n {
                cj *= c;
                let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
                t.push(sign / (j as f64 * cj));
            }
        }
        Primitive::Sqrt => {
            let r = c.sqrt();
            t.push(r);
            // binom(1/2, j) c^{1/2 - j}
            let mut binom = 1.0;
            let mut cj = 1.0;
            for j in 1..n {
                binom *= (0.5 - (j - 1) as f64) / j as f64;
                cj *= c;
                t.push(binom * r / cj);
            }
        }
    }
    t
}

/// `g(c + η) = Σ_j g^{(j)}(c) η^j / j!`, a finite sum since `η^{h+1} = 0`.
fn apply_primitive(p: Primitive, a: &WeilElement) -> Result<WeilElement> {
    let alg = a.algebra();
    let c = a.augmentation();
    let h = alg.height();
    let ok = match p {
        Primitive::Log => c > 0.0,
        Primitive::Sqrt if h == 0 => c >= 0.0,
        Primitive::Sqrt => c > 0.0,
        _ => true,
    };
    if !ok {
        return Err(if h == 0 {
            EvalError::Domain { func: p.name(), arg: c }
        } else {
            EvalError::BaseDomain { func: p.name(), arg: c }
        });
    }
    let t = primitive_taylor(p, c, h);
    let eta = a.nilpotent_part();
    let mut acc = WeilElement::constant(alg, t[h as usize]);
    for j in (0..h as usize).rev() {
        acc = (&acc * &eta).add_scalar(t[j]);
    }
    Ok(acc)
}

/// Coefficients of `f(x0 + X)` in `ℝ[X]/(X^{k+1})`: entry `j` is `f^{(j)}(x0) / j!`.
pub fn taylor_coeffs(e: &SmoothExpr, x0: f64, order: u32) -> Result<Vec<f64>> {
    if e.max_var().is_some_and(|i| i > 0) {
        return Err(EvalError::NotUnivariate);
    }
    let alg = make_truncated(1, order)?;
    let x = WeilElement::variable(&alg, 0).add_scalar(x0);
    Ok(e.eval_weil(&alg, &[x])?.into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_dual, make_reals, parse_preset};

    fn parse(s: &str, n: usize) -> SmoothExpr {
        SmoothExpr::parse(s, n).unwrap()
    }

    #[test]
    fn real_examples() {
        assert_eq!(parse("x1^2", 1).eval_real(&[3.0]).unwrap(), 9.0);
        assert_eq!(parse("exp(0)", 0).eval_real(&[]).unwrap(), 1.0);
        assert_eq!(parse("1/x1", 1).eval_real(&[0.0]).unwrap_err(), EvalError::DivisionByZero);
        assert!(matches!(parse("log(x1)", 1).eval_real(&[0.0]), Err(EvalError::Domain { func: "log", .. })));
        assert!(matches!(parse("sqrt(x1)", 1).eval_real(&[-1.0]), Err(EvalError::Domain { func: "sqrt", .. })));
        assert_eq!(parse("x1^(-1)", 1).eval_real(&[0.0]).unwrap_err(), EvalError::DivisionByZero);
        assert!(matches!(parse("x2", 2).eval_real(&[1.0]), Err(EvalError::DimensionMismatch { .. })));
    }

    #[test]
    fn dual_square_recovers_derivative() {
        let d = make_dual();
        let xi = WeilElement::parse(&d, "3+1T").unwrap();
        let v = parse("x1^2", 1).eval_weil(&d, &[xi]).unwrap();
        assert_eq!(v.coeffs(), &[9.0, 6.0]);
    }

    #[test]
    fn exp_over_cubic() {
        let a = make_truncated(1, 2).unwrap();
        let xi = WeilElement::variable(&a, 0);
        let v = parse("exp(x1)", 1).eval_weil(&a, &[xi]).unwrap();
        assert_eq!(v.coeffs(), &[1.0, 1.0, 0.5]);
    }

    #[test]
    fn product_over_dd() {
        let dd = parse_preset("tensor:dual,dual").unwrap();
        let (a, b) = (1.5, -2.0);
        let x1 = WeilElement::parse(&dd, "1.5+T1").unwrap();
        let x2 = WeilElement::parse(&dd, "-2+T2").unwrap();
        let v = parse("x1*x2", 2).eval_weil(&dd, &[x1, x2]).unwrap();
        assert_eq!(v.coeffs(), &[a * b, b, a, 1.0]);
    }

    #[test]
    fn lift_errors() {
        let d = make_dual();
        let xi = WeilElement::parse(&d, "0+1T").unwrap();
        let err = parse("1/x1", 1).eval_weil(&d, &[xi.clone()]).unwrap_err();
        assert_eq!(err.to_string(), "lift undefined: denominator not invertible at base point");
        assert_eq!(parse("x1^(-2)", 1).eval_weil(&d, &[xi.clone()]).unwrap_err(), EvalError::LiftUndefined);
        assert!(matches!(parse("log(x1)", 1).eval_weil(&d, &[xi.clone()]), Err(EvalError::BaseDomain { .. })));
        assert!(matches!(parse("sqrt(x1)", 1).eval_weil(&d, &[xi]), Err(EvalError::BaseDomain { .. })));
    }

    #[test]
    fn reals_coincide_with_real_evaluation() {
        let r = make_reals();
        let sources = ["x1/(x2 + 3)", "x1^(-3) * sqrt(x2^2)", "log(1 + x1^2) - exp(x2)/cos(x1)", "sqrt(0*x1)"];
        for src in sources {
            let e = parse(src, 2);
            let x = [0.37, -1.21];
            let xi: Vec<_> = x.iter().map(|&v| WeilElement::constant(&r, v)).collect();
            assert_eq!(e.eval_weil(&r, &xi).unwrap().coeffs(), &[e.eval_real(&x).unwrap()], "{src}");
        }
    }

    #[test]
    fn division_matches_inverse() {
        let a = make_truncated(2, 3).unwrap();
        let num = WeilElement::from_coeffs(&a, (0..a.dim()).map(|i| (i as f64 * 0.7).sin()).collect()).unwrap();
        let den = WeilElement::from_coeffs(&a, (0..a.dim()).map(|i| 1.5 + (i as f64 * 1.3).cos()).collect()).unwrap();
        let q = divide(&num, &den).unwrap();
        assert!((&q * &den).max_abs_diff(&num).unwrap() < 1e-12);
        let alt = &num * &den.invert().unwrap();
        assert!(q.max_abs_diff(&alt).unwrap() < 1e-12);
    }

    #[test]
    fn taylor_examples() {
        let exp = parse("exp(x1)", 1);
        let t = taylor_coeffs(&exp, 0.0, 3).unwrap();
        for (got, want) in t.iter().zip([1.0, 1.0, 0.5, 1.0 / 6.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        let t = taylor_coeffs(&parse("sin(x1)", 1), 0.0, 3).unwrap();
        for (got, want) in t.iter().zip([0.0, 1.0, 0.0, -1.0 / 6.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(taylor_coeffs(&exp, 1.0, 0).unwrap(), vec![1.0f64.exp()]);
        assert_eq!(taylor_coeffs(&parse("x2", 2), 0.0, 2).unwrap_err(), EvalError::NotUnivariate);
    }

    #[test]
    fn log_and_sqrt_series() {
        // log(1 + X) = X - X^2/2 + X^3/3 - X^4/4
        let t = taylor_coeffs(&parse("log(x1)", 1), 1.0, 4).unwrap();
        for (got, want) in t.iter().zip([0.0, 1.0, -0.5, 1.0 / 3.0, -0.25]) {
            assert!((got - want).abs() < 1e-15);
        }
        // sqrt(4 + X) = 2 + X/4 - X^2/64 + X^3/512
        let t = taylor_coeffs(&parse("sqrt(x1)", 1), 4.0, 3).unwrap();
        for (got, want) in t.iter().zip([2.0, 0.25, -1.0 / 64.0, 1.0 / 512.0]) {
            assert!((got - want).abs() < 1e-15);
        }
    }
}
