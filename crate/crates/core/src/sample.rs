//! Seeded generators shared by the verification routines and the property suites.
//!
//! All generation goes through [`SampleRng`] (ChaCha8), so a seed fixes every
//! sample on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, WeilElement};
use crate::expr::SmoothExpr;
use crate::geometry::NearPoint;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Element with every coefficient uniform in `[-1, 1]`.
pub fn random_element(alg: &Algebra, rng: &mut SampleRng) -> WeilElement {
    let coeffs = (0..alg.dim()).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    WeilElement::from_coeffs(alg, coeffs).expect("dim")
}

/// Element of the maximal ideal with coefficients uniform in `[-1, 1]`.
pub fn random_nilpotent(alg: &Algebra, rng: &mut SampleRng) -> WeilElement {
    random_element(alg, rng).nilpotent_part()
}

/// Near point with base uniform in the box `region` and nilpotent
/// coefficients uniform in `[-1, 1]`.
pub fn random_near_point(alg: &Algebra, region: &[(f64, f64)], rng: &mut SampleRng) -> NearPoint {
    let base: Vec<f64> = region.iter().map(|&(lo, hi)| if lo < hi { rng.gen_range(lo..hi) } else { lo }).collect();
    random_near_point_at(alg, &base, rng)
}

/// Near point over `base` with random nilpotent parts.
pub fn random_near_point_at(alg: &Algebra, base: &[f64], rng: &mut SampleRng) -> NearPoint {
    let coords = base.iter().map(|&x| random_nilpotent(alg, rng).add_scalar(x)).collect();
    NearPoint::new(alg, coords).expect("shared algebra")
}

/// Random expression in `x1..xn` that is defined and smooth at every real
/// point: `log` and `sqrt` only see `1 + u^2`, denominators are `2 + sin(u)`
/// or `1 + u^2`, and `exp` never nests.
pub fn random_expr(rng: &mut SampleRng, n: usize, depth: u32) -> SmoothExpr {
    gen(rng, n, depth, true)
}

fn leaf(rng: &mut SampleRng, n: usize) -> SmoothExpr {
    if n > 0 && rng.gen_bool(0.6) {
        SmoothExpr::var(rng.gen_range(0..n))
    } else {
        SmoothExpr::constant(rng.gen_range(-2.0..2.0))
    }
}

fn one_plus_square(u: SmoothExpr) -> SmoothExpr {
    SmoothExpr::constant(1.0) + u.powi(2)
}

fn gen(rng: &mut SampleRng, n: usize, depth: u32, allow_exp: bool) -> SmoothExpr {
    if depth == 0 {
        return leaf(rng, n);
    }
    let d = depth - 1;
    match rng.gen_range(0..12) {
        0 => gen(rng, n, d, allow_exp) + gen(rng, n, d, allow_exp),
        1 => gen(rng, n, d, allow_exp) - gen(rng, n, d, allow_exp),
        2 | 3 => gen(rng, n, d, allow_exp) * gen(rng, n, d, allow_exp),
        4 => gen(rng, n, d, allow_exp).sin(),
        5 => gen(rng, n, d, allow_exp).cos(),
        6 if allow_exp => {
            let arg = if rng.gen_bool(0.5) { leaf(rng, n) } else { gen(rng, n, d, false).sin() };
            arg.exp()
        }
        6 => -gen(rng, n, d, allow_exp),
        7 => one_plus_square(gen(rng, n, d, allow_exp)).log(),
        8 => one_plus_square(gen(rng, n, d, allow_exp)).sqrt(),
        9 => gen(rng, n, d, allow_exp) / (SmoothExpr::constant(2.0) + gen(rng, n, d, allow_exp).sin()),
        10 => gen(rng, n, d, allow_exp).powi(rng.gen_range(2..=3)),
        _ => one_plus_square(gen(rng, n, d, allow_exp)).powi(-1),
    }
}

/// Fixed univariate corpus, smooth on `(0, 3)`.
pub const UNIVARIATE_CORPUS: &[&str] = &[
    "x1",
    "x1^2",
    "x1^3 - 2*x1",
    "x1^(-1)",
    "x1^(-3)",
    "1/(1 + x1^2)",
    "exp(x1)",
    "exp(-x1^2)",
    "exp(2*x1) - 3",
    "log(x1)",
    "log(1 + x1)",
    "log(x1^2 + x1)",
    "sqrt(x1)",
    "sqrt(1 + x1^2)",
    "sqrt(x1)*log(x1)",
    "sin(x1)",
    "cos(x1)",
    "sin(3*x1)",
    "cos(x1^2)",
    "sin(x1)*cos(x1)",
    "sin(x1)/x1",
    "x1*exp(-x1)",
    "exp(sin(x1))",
    "sin(exp(x1))",
    "log(cos(x1/2))",
    "cos(x1)^2 + sin(x1)^2",
    "sqrt(exp(x1))",
    "exp(log(x1))",
    "1/(2 + sin(x1))",
    "x1^2*log(x1)",
    "(x1 - 1)^4",
    "(x1 + 1)^(-2)",
    "x1/(1 + x1)",
    "exp(x1)/(1 + exp(x1))",
    "log(1 + exp(x1))",
    "sin(x1)^3",
    "cos(2*x1)*exp(x1/3)",
    "sqrt(x1 + 1)/(x1 + 2)",
    "log(x1)^2",
    "1/sqrt(x1)",
    "exp(-1/x1)",
    "sin(1/x1)",
    "x1*sin(x1) + cos(x1)",
    "(1 + x1)^5",
    "log(sqrt(x1) + 1)",
    "exp(cos(x1)) - sin(x1^2)",
    "sqrt(2 + cos(x1))",
    "x1^3*exp(-x1)*sin(x1)",
    "cos(log(x1))",
    "(x1^2 + 1)/(x1^2 + 2)",
];
