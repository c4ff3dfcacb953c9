//! Smooth scalar expressions on a chart `ℝ^n`.
//!
//! Expressions are built from real constants, coordinates `x1..xn`, the field
//! operations, integer powers and the primitives `exp`, `log`, `sin`, `cos`,
//! `sqrt`. They evaluate over `ℝ` and over any Weil algebra; the latter is the
//! lift `f ↦ f^A`.

mod derive;
mod eval;
mod parse;

use std::fmt;
use std::ops;

use serde_json::{json, Value};

pub use eval::{taylor_coeffs, EvalError};
pub use parse::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Exp,
    Log,
    Sin,
    Cos,
    Sqrt,
}

impl Primitive {
    pub const ALL: [Primitive; 5] = [Primitive::Exp, Primitive::Log, Primitive::Sin, Primitive::Cos, Primitive::Sqrt];

    pub fn name(self) -> &'static str {
        match self {
            Primitive::Exp => "exp",
            Primitive::Log => "log",
            Primitive::Sin => "sin",
            Primitive::Cos => "cos",
            Primitive::Sqrt => "sqrt",
        }
    }

    pub fn from_name(name: &str) -> Option<Primitive> {
        Primitive::ALL.into_iter().find(|p| p.name() == name)
    }
}

/// Expression tree. Variables are 0-based internally and print as `x1..xn`.
#[derive(Debug, Clone, PartialEq)]
pub enum SmoothExpr {
    Const(f64),
    Var(usize),
    Neg(Box<SmoothExpr>),
    Add(Box<SmoothExpr>, Box<SmoothExpr>),
    Sub(Box<SmoothExpr>, Box<SmoothExpr>),
    Mul(Box<SmoothExpr>, Box<SmoothExpr>),
    Div(Box<SmoothExpr>, Box<SmoothExpr>),
    Pow(Box<SmoothExpr>, i32),
    Func(Primitive, Box<SmoothExpr>),
}

use SmoothExpr::*;

impl SmoothExpr {
    pub fn constant(c: f64) -> Self {
        Const(c)
    }

    /// The coordinate `x_{i+1}` (0-based index).
    pub fn var(i: usize) -> Self {
        Var(i)
    }

    pub fn func(p: Primitive, arg: SmoothExpr) -> Self {
        Func(p, Box::new(arg))
    }

    pub fn exp(self) -> Self {
        Self::func(Primitive::Exp, self)
    }

    pub fn log(self) -> Self {
        Self::func(Primitive::Log, self)
    }

    pub fn sin(self) -> Self {
        Self::func(Primitive::Sin, self)
    }

    pub fn cos(self) -> Self {
        Self::func(Primitive::Cos, self)
    }

    pub fn sqrt(self) -> Self {
        Self::func(Primitive::Sqrt, self)
    }

    pub fn powi(self, n: i32) -> Self {
        Pow(Box::new(self), n)
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Const(_) => None,
            Var(i) => Some(*i),
            Neg(a) | Pow(a, _) | Func(_, a) => a.max_var(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => match (a.max_var(), b.max_var()) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            },
        }
    }

    /// Replaces every `x_i` by `replacements[i]`: the composition `self ∘ h`.
    ///
    /// Panics if a variable has no replacement.
    pub fn substitute(&self, replacements: &[SmoothExpr]) -> SmoothExpr {
        let b = |e: &SmoothExpr| Box::new(e.substitute(replacements));
        match self {
            Const(c) => Const(*c),
            Var(i) => replacements[*i].clone(),
            Neg(a) => Neg(b(a)),
            Add(x, y) => Add(b(x), b(y)),
            Sub(x, y) => Sub(b(x), b(y)),
            Mul(x, y) => Mul(b(x), b(y)),
            Div(x, y) => Div(b(x), b(y)),
            Pow(a, n) => Pow(b(a), *n),
            Func(p, a) => Func(*p, b(a)),
        }
    }

    /// Debugging AST export: `{"op": "...", "args": [...]}`.
    pub fn to_json(&self) -> Value {
        let node = |op: &str, args: Vec<Value>| json!({ "op": op, "args": args });
        match self {
            Const(c) => node("const", vec![json!(c)]),
            Var(i) => node("var", vec![json!(i + 1)]),
            Neg(a) => node("neg", vec![a.to_json()]),
            Add(a, b) => node("add", vec![a.to_json(), b.to_json()]),
            Sub(a, b) => node("sub", vec![a.to_json(), b.to_json()]),
            Mul(a, b) => node("mul", vec![a.to_json(), b.to_json()]),
            Div(a, b) => node("div", vec![a.to_json(), b.to_json()]),
            Pow(a, n) => node("pow", vec![a.to_json(), json!(n)]),
            Func(p, a) => node(p.name(), vec![a.to_json()]),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            Const(c) if *c < 0.0 => 3,
            Const(_) | Var(_) | Func(..) => 5,
        }
    }
}

impl fmt::Display for SmoothExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Parenthesize a child when it binds looser than required.
        let child = |f: &mut fmt::Formatter<'_>, e: &SmoothExpr, min: u8| -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Const(c) => write!(f, "{c}"),
            Var(i) => write!(f, "x{}", i + 1),
            Neg(a) => {
                f.write_str("-")?;
                child(f, a, 4)
            }
            Add(a, b) => {
                child(f, a, 1)?;
                f.write_str(" + ")?;
                child(f, b, 2)
            }
            Sub(a, b) => {
                child(f, a, 1)?;
                f.write_str(" - ")?;
                child(f, b, 2)
            }
            Mul(a, b) => {
                child(f, a, 2)?;
                f.write_str("*")?;
                child(f, b, 4)
            }
            Div(a, b) => {
                child(f, a, 2)?;
                f.write_str("/")?;
                child(f, b, 4)
            }
            Pow(a, n) => {
                child(f, a, 5)?;
                if *n < 0 {
                    write!(f, "^({n})")
                } else {
                    write!(f, "^{n}")
                }
            }
            Func(p, a) => write!(f, "{}({a})", p.name()),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl ops::$trait for SmoothExpr {
            type Output = SmoothExpr;
            fn $method(self, rhs: SmoothExpr) -> SmoothExpr {
                $variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl ops::Neg for SmoothExpr {
    type Output = SmoothExpr;
    fn neg(self) -> SmoothExpr {
        Neg(Box::new(self))
    }
}
