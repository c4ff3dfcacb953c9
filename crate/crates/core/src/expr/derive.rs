use super::{Primitive, SmoothExpr};
use SmoothExpr::*;

// Constructors with constant folding only; no further simplification.

fn add(a: SmoothExpr, b: SmoothExpr) -> SmoothExpr {
    match (a, b) {
        (Const(x), Const(y)) => Const(x + y),
        (Const(z), e) | (e, Const(z)) if z == 0.0 => e,
        (a, b) => a + b,
    }
}

fn sub(a: SmoothExpr, b: SmoothExpr) -> SmoothExpr {
    match (a, b) {
        (Const(x), Const(y)) => Const(x - y),
        (e, Const(z)) if z == 0.0 => e,
        (Const(z), e) if z == 0.0 => neg(e),
        (a, b) => a - b,
    }
}

fn neg(a: SmoothExpr) -> SmoothExpr {
    match a {
        Const(x) => Const(-x),
        Neg(e) => *e,
        e => -e,
    }
}

fn mul(a: SmoothExpr, b: SmoothExpr) -> SmoothExpr {
    match (a, b) {
        (Const(x), Const(y)) => Const(x * y),
        (Const(z), _) | (_, Const(z)) if z == 0.0 => Const(0.0),
        (Const(o), e) | (e, Const(o)) if o == 1.0 => e,
        (a, b) => a * b,
    }
}

fn div(a: SmoothExpr, b: SmoothExpr) -> SmoothExpr {
    match (a, b) {
        (Const(z), _) if z == 0.0 => Const(0.0),
        (e, Const(o)) if o == 1.0 => e,
        (a, b) => a / b,
    }
}

fn powi(a: SmoothExpr, n: i32) -> SmoothExpr {
    match n {
        0 => Const(1.0),
        1 => a,
        n => a.powi(n),
    }
}

impl SmoothExpr {
    /// Symbolic partial derivative `∂/∂x_{i+1}` (0-based `i`).
    pub fn derive(&self, i: usize) -> SmoothExpr {
        match self {
            Const(_) => Const(0.0),
            Var(j) => Const(if *j == i { 1.0 } else { 0.0 }),
            Neg(a) => neg(a.derive(i)),
            Add(a, b) => add(a.derive(i), b.derive(i)),
            Sub(a, b) => sub(a.derive(i), b.derive(i)),
            Mul(a, b) => add(mul(a.derive(i), (**b).clone()), mul((**a).clone(), b.derive(i))),
            Div(a, b) => {
                let (a, b) = (&**a, &**b);
                // a'/b - a b'/b^2
                sub(div(a.derive(i), b.clone()), div(mul(a.clone(), b.derive(i)), powi(b.clone(), 2)))
            }
            Pow(a, n) => {
                if *n == 0 {
                    return Const(0.0);
                }
                mul(mul(Const(*n as f64), powi((**a).clone(), n - 1)), a.derive(i))
            }
            Func(p, a) => {
                let arg = (**a).clone();
                let outer = match p {
                    Primitive::Exp => arg.exp(),
                    Primitive::Log => div(Const(1.0), arg),
                    Primitive::Sin => arg.cos(),
                    Primitive::Cos => neg(arg.sin()),
                    Primitive::Sqrt => div(Const(0.5), arg.sqrt()),
                };
                mul(outer, a.derive(i))
            }
        }
    }
}
