//! The elliptic modular surface of level 7: explicit models, j-invariant,
//! Kodaira fibre classification, symbolic model verification, and point
//! counts over prime fields.
//!
//! The surface `Y` is the universal elliptic curve with a section of order
//! 7, fibred over the t-line.  Three affine/projective models appear:
//!
//! - the Tate model `y^2 + (1+t-t^2)xy + (t^2-t^3)y = x^3 + (t^2-t^3)x^2`,
//! - its completed-square Weierstrass form
//!   `4y^2 = 4x^3 + (t^4-6t^3+3t^2+2t+1)x^2 + 2t^2(t^3-2t^2+1)x + t^4(t-1)^2`,
//! - the monic rescaling `y^2 = p_1(x, t)` used by the counting loops, and
//! - the projective plane model with 8 ordinary singular points obtained
//!   from the Tate model by an explicit change of variables.
//!
//! All symbolic checks run over exact integers; no floating point enters
//! this module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::curves::{BadPrime, BadPrimeReason};
use crate::finitefield::PrimeField;
use crate::poly::{IntPoly, MultiPoly, RootSearchError, Var};

/// Picard rank of the level-7 surface: Shioda-Tate with Mordell-Weil rank 0
/// gives `2 + 3*(7-1) + 3*(1-1) = 20`, matching the 20p surface correction
/// term in the count.
pub const PICARD_RANK: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FibrationError {
    #[error("j-invariant has no poles, so no singular fibres")]
    NoSingularFibers,
    #[error("unsupported fibration: {0}")]
    UnsupportedFibration(String),
    #[error(transparent)]
    RootSearch(#[from] RootSearchError),
    #[error(transparent)]
    BadPrime(#[from] BadPrime),
}

// ---------------------------------------------------------------------------
// models
// ---------------------------------------------------------------------------

fn t_poly(coeffs: &[i64]) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for (k, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            p = &p + &MultiPoly::monomial(BigInt::from(c), [0, 0, 0, k as u16]);
        }
    }
    p
}

/// Tate model of the universal curve with a point of order 7, affine in
/// (x, y) over the t-line, written as a vanishing polynomial:
/// `y^2 + (1+t-t^2)xy + (t^2-t^3)y - x^3 - (t^2-t^3)x^2`.
pub fn tate_model() -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let a1 = t_poly(&[1, 1, -1]);
    let a23 = t_poly(&[0, 0, 1, -1]);
    let y2 = &y * &y;
    let xy = &x * &y;
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    &(&(&y2 + &(&a1 * &xy)) + &(&a23 * &y)) - &(&x3 + &(&a23 * &x2))
}

/// The Tate model homogenized to a projective cubic in (x : y : z).
pub fn homogeneous_tate_model() -> MultiPoly {
    let z = MultiPoly::var(Var::Z);
    let by_y: Vec<MultiPoly> = tate_model().coefficients_in(Var::Y);
    // term of (x,y)-degree d picks up z^(3-d)
    let mut out = MultiPoly::zero();
    for (ydeg, part) in by_y.iter().enumerate() {
        for (xdeg, coeff) in part.coefficients_in(Var::X).iter().enumerate() {
            let zdeg = 3 - ydeg - xdeg;
            let mono = &MultiPoly::var(Var::X).pow(xdeg as u32)
                * &MultiPoly::var(Var::Y).pow(ydeg as u32);
            out = &out + &(&(coeff * &mono) * &z.pow(zdeg as u32));
        }
    }
    out
}

/// Completed-square Weierstrass form, as the vanishing polynomial
/// `4y^2 - 4x^3 - (t^4-6t^3+3t^2+2t+1)x^2 - 2t^2(t^3-2t^2+1)x - t^4(t-1)^2`.
pub fn weierstrass_model() -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let c2 = t_poly(&[1, 2, 3, -6, 1]);
    let c1 = t_poly(&[0, 0, 2, 0, -4, 2]);
    let c0 = t_poly(&[0, 0, 0, 0, 1, -2, 1]);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let rhs = &(&(&x3.scale_i64(4) + &(&c2 * &x2)) + &(&c1 * &x)) + &c0;
    &(&y * &y).scale_i64(4) - &rhs
}

/// Monic counting model `p_1(x, t) =
/// x^3 + (t^4-6t^3+3t^2+2t+1)x^2 + 8t^2(t^3-2t^2+1)x + 16t^4(t-1)^2`,
/// obtained from the Weierstrass form by the scaling x -> x/4, y -> y/8.
pub fn p1_poly() -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let c2 = t_poly(&[1, 2, 3, -6, 1]);
    let c1 = t_poly(&[0, 0, 8, 0, -16, 8]);
    let c0 = t_poly(&[0, 0, 0, 0, 16, -32, 16]);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    &(&(&x3 + &(&c2 * &x2)) + &(&c1 * &x)) + &c0
}

/// The projective plane model with 8 ordinary singular points:
/// `t(t-1)x(x-y)(y+z) + (t-1)(x-y-z)yz + t(x-y)xz`.
pub fn projective_model() -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let z = MultiPoly::var(Var::Z);
    let t = MultiPoly::var(Var::T);
    let tm1 = &t - &MultiPoly::constant(1);
    let xmy = &x - &y;
    let term1 = &(&(&t * &tm1) * &(&x * &xmy)) * &(&y + &z);
    let term2 = &(&tm1 * &(&(&x - &y) - &z)) * &(&y * &z);
    let term3 = &(&t * &xmy) * &(&x * &z);
    &(&term1 + &term2) + &term3
}

/// The projective model in the chart s = 1/t at infinity: for a model of
/// t-degree 2 this is `F_2 + F_1 s + F_0 s^2`, with s stored in the t slot.
pub fn infinity_chart_model() -> MultiPoly {
    let mut by_t = projective_model().coefficients_in(Var::T);
    while by_t.len() < 3 {
        by_t.push(MultiPoly::zero());
    }
    let s = MultiPoly::var(Var::T);
    &(&by_t[2] + &(&by_t[1] * &s)) + &(&by_t[0] * &(&s * &s))
}

// ---------------------------------------------------------------------------
// symbolic identities
// ---------------------------------------------------------------------------

/// Apply the desingularizing change of variables
/// `x -> x t^2, y -> y t^2 (t-1), z -> x/(t-1) + y + z`
/// to a homogeneous cubic and clear the denominator (t-1)^2.
pub fn transformed_tate_model(cubic: &MultiPoly) -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let z = MultiPoly::var(Var::Z);
    let t = MultiPoly::var(Var::T);
    let tm1 = &t - &MultiPoly::constant(1);
    let t2 = &t * &t;
    let new_x = &x * &t2;
    let new_y = &(&y * &t2) * &tm1;
    // z goes to (x + (y + z)(t-1)) / (t-1); clear per z-degree
    let z_num = &x + &(&(&y + &z) * &tm1);
    let mut out = MultiPoly::zero();
    for (zdeg, part) in cubic.coefficients_in(Var::Z).iter().enumerate() {
        let subbed = part.compose([&new_x, &new_y, &z, &t]);
        let cleared = &(&subbed * &z_num.pow(zdeg as u32)) * &tm1.pow(2 - zdeg as u32);
        out = &out + &cleared;
    }
    out
}

/// The change of variables carries the homogenized Tate model exactly onto
/// `t^4 (t-1)^3` times the projective plane model, as an identity in
/// Z[x, y, z, t].
pub fn verify_model_identity() -> bool {
    let lhs = transformed_tate_model(&homogeneous_tate_model());
    let t = MultiPoly::var(Var::T);
    let tm1 = &t - &MultiPoly::constant(1);
    let rhs = &(&t.pow(4) * &tm1.pow(3)) * &projective_model();
    lhs == rhs
}

/// Completing the square in the Tate model, `y -> y - (1+t-t^2)x/2 -
/// (t^2-t^3)/2`, yields exactly the Weierstrass form after clearing 4.
pub fn verify_weierstrass_identity() -> bool {
    let x = MultiPoly::var(Var::X);
    let a1 = t_poly(&[1, 1, -1]);
    let a3 = t_poly(&[0, 0, 1, -1]);
    // u = 2y - a1 x - a3; 4 W(y = u/2) = sum_k W_k u^k 2^(2-k)
    let u = &MultiPoly::var(Var::Y).scale_i64(2) - &(&(&a1 * &x) + &a3);
    let mut cleared = MultiPoly::zero();
    for (ydeg, part) in tate_model().coefficients_in(Var::Y).iter().enumerate() {
        let pow2 = 1i64 << (2 - ydeg);
        cleared = &cleared + &(part * &u.pow(ydeg as u32)).scale_i64(pow2);
    }
    cleared == weierstrass_model()
}

/// Substituting x -> x/4, y -> y/8 into the Weierstrass form and clearing 16
/// reproduces `y^2 = p_1(x, t)`.
pub fn verify_p1_scaling() -> bool {
    let mut scaled = MultiPoly::zero();
    for (exps, c) in weierstrass_model().terms() {
        // each term picks up 16 / (4^xdeg 8^ydeg)
        let den = BigInt::from(4).pow(exps[0] as u32) * BigInt::from(8).pow(exps[1] as u32);
        let num = c * BigInt::from(16);
        if (&num % &den) != BigInt::zero() {
            return false;
        }
        scaled = &scaled + &MultiPoly::monomial(num / den, *exps);
    }
    let y = MultiPoly::var(Var::Y);
    scaled == &(&y * &y) - &p1_poly()
}

/// The 8 singular points of the projective plane model: six on the finite
/// fibres t = 0 and t = 1, two on the fibre at infinity (s-chart).
pub const SINGULAR_POINTS_FINITE: [([i64; 3], i64); 6] = [
    ([1, 0, 1], 0),
    ([1, 1, 0], 0),
    ([1, 0, 0], 0),
    ([0, 0, 1], 1),
    ([0, 1, 0], 1),
    ([1, 1, 0], 1),
];

pub const SINGULAR_POINTS_INFINITY: [[i64; 3]; 2] = [[0, 0, 1], [0, 1, -1]];

fn vanishes_with_gradient(f: &MultiPoly, pt: [i64; 3], param: i64) -> bool {
    let at = [pt[0], pt[1], pt[2], param];
    f.eval_i64(at).is_zero()
        && f.partial(Var::X).eval_i64(at).is_zero()
        && f.partial(Var::Y).eval_i64(at).is_zero()
        && f.partial(Var::Z).eval_i64(at).is_zero()
}

/// Whether (x : y : z) on the fibre over finite t annihilates the plane
/// model and its three projective partials.
pub fn is_singular_finite(pt: [i64; 3], t: i64) -> bool {
    vanishes_with_gradient(&projective_model(), pt, t)
}

/// Same check on the fibre at infinity, in the chart s = 1/t.
pub fn is_singular_at_infinity(pt: [i64; 3]) -> bool {
    vanishes_with_gradient(&infinity_chart_model(), pt, 0)
}

/// All 8 listed singular points annihilate the plane model and its three
/// projective partial derivatives on their fibres.
pub fn singular_points_check() -> bool {
    let finite = projective_model();
    let infinite = infinity_chart_model();
    SINGULAR_POINTS_FINITE
        .iter()
        .all(|&(pt, t)| vanishes_with_gradient(&finite, pt, t))
        && SINGULAR_POINTS_INFINITY
            .iter()
            .all(|&pt| vanishes_with_gradient(&infinite, pt, 0))
}

// ---------------------------------------------------------------------------
// j-invariant and fibres
// ---------------------------------------------------------------------------

/// A rational function over Q held as a coprime integer numerator and
/// denominator, the denominator with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, FibrationError> {
        if den.is_zero() {
            return Err(FibrationError::UnsupportedFibration("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.scale(&BigInt::from(-1));
            den = den.scale(&BigInt::from(-1));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Value at a rational point, or None at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(x) / d)
    }

    /// Multiplicity of `root` in the denominator.
    pub fn pole_order_at(&self, root: &BigRational) -> u32 {
        let linear = IntPoly::from_coeffs(vec![-root.numer().clone(), root.denom().clone()]);
        let mut k = 0;
        let mut f = self.den.clone();
        while let Some(q) = f.div_exact(&linear) {
            k += 1;
            f = q;
        }
        k
    }

    /// Pole order at t = infinity: `deg num - deg den` (negative means a
    /// zero there).
    pub fn pole_order_at_infinity(&self) -> i64 {
        self.num.degree().map_or(i64::MIN, |d| d as i64)
            - self.den.degree().unwrap_or(0) as i64
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// The j-invariant of the level-7 fibration:
/// `(t^2-t+1)^3 (t^6-11t^5+30t^4-15t^3-10t^2+5t+1)^3` over
/// `t^7 (t-1)^7 (t^3-8t^2+5t+1)`, in lowest terms.
pub fn j_invariant() -> RationalFunction {
    let quadratic = IntPoly::from_i64(&[1, -1, 1]);
    let sextic = IntPoly::from_i64(&[1, 5, -10, -15, 30, -11, 1]);
    let num = (&quadratic * &sextic).pow(3);
    let t = IntPoly::variable();
    let den = &(&t.pow(7) * &IntPoly::from_i64(&[-1, 1]).pow(7)) * &IntPoly::from_i64(&[1, 5, -8, 1]);
    RationalFunction::new(num, den).expect("built-in j-invariant is reduced")
}

/// Base location of a singular fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberPlace {
    /// A rational point of the base.
    Rational(BigRational),
    /// The Galois orbit of the roots of a squarefree integer polynomial
    /// with no rational root (irreducible whenever the degree is at most 3).
    Roots(IntPoly),
    /// t = infinity.
    Infinity,
}

impl FiberPlace {
    /// How many geometric base points this place stands for.
    pub fn count(&self) -> u64 {
        match self {
            FiberPlace::Rational(_) | FiberPlace::Infinity => 1,
            FiberPlace::Roots(f) => f.degree().unwrap_or(0) as u64,
        }
    }
}

impl fmt::Display for FiberPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberPlace::Rational(r) => write!(f, "t={r}"),
            FiberPlace::Roots(p) => {
                write!(f, "the {} roots of {}", p.degree().unwrap_or(0), p)
            }
            FiberPlace::Infinity => write!(f, "t=infinity"),
        }
    }
}

/// One entry of a fibre configuration: a semi-stable fibre `I_index` at each
/// base point of `place`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub place: FiberPlace,
    pub index: u32,
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{} at {}", self.index, self.place)
    }
}

/// Multiset of semi-stable fibres of an elliptic fibration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberConfiguration {
    fibers: Vec<Fiber>,
}

impl FiberConfiguration {
    pub fn new(fibers: Vec<Fiber>) -> Self {
        FiberConfiguration { fibers }
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// Sum of fibre indices over all geometric base points.
    pub fn total_index(&self) -> u64 {
        self.fibers.iter().map(|f| f.place.count() * f.index as u64).sum()
    }

    /// Number of geometric fibres `I_n` with n > 1 even.
    pub fn even_index_count(&self) -> u64 {
        self.fibers
            .iter()
            .filter(|f| f.index > 1 && f.index % 2 == 0)
            .map(|f| f.place.count())
            .sum()
    }
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fiber) in self.fibers.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{fiber}")?;
        }
        Ok(())
    }
}

/// Read the fibre configuration of a semi-stable fibration off the pole
/// orders of its j-invariant: one `I_n` per pole of order n, the pole at
/// infinity included when the numerator degree exceeds the denominator's.
///
/// The caller asserts semi-stability; additive fibres are out of scope
/// here.  The input is refused if numerator and denominator share a factor.
pub fn classify_fibers(j: &RationalFunction) -> Result<FiberConfiguration, FibrationError> {
    let shared = j.num().gcd(j.den());
    if shared.degree().unwrap_or(0) > 0 {
        return Err(FibrationError::UnsupportedFibration(format!(
            "j numerator and denominator share the factor {shared}"
        )));
    }
    let mut fibers = Vec::new();
    for (factor, multiplicity) in j.den().squarefree_decomposition() {
        let roots = factor.rational_roots()?;
        let mut cofactor = factor.clone();
        for r in &roots {
            let linear = IntPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
            cofactor = cofactor.div_exact(&linear).expect("root gives a factor");
            fibers.push(Fiber { place: FiberPlace::Rational(r.clone()), index: multiplicity });
        }
        if cofactor.degree().unwrap_or(0) > 0 {
            fibers.push(Fiber {
                place: FiberPlace::Roots(cofactor.primitive_part()),
                index: multiplicity,
            });
        }
    }
    let at_infinity = j.pole_order_at_infinity();
    if at_infinity > 0 {
        fibers.push(Fiber { place: FiberPlace::Infinity, index: at_infinity as u32 });
    }
    if fibers.is_empty() {
        return Err(FibrationError::NoSingularFibers);
    }
    fibers.sort_by_key(|a| place_key(&a.place));
    Ok(FiberConfiguration { fibers })
}

fn place_key(p: &FiberPlace) -> (u8, BigRational, Vec<BigInt>) {
    match p {
        FiberPlace::Rational(r) => (0, r.clone(), Vec::new()),
        FiberPlace::Roots(f) => (1, BigRational::zero(), f.coeffs().to_vec()),
        FiberPlace::Infinity => (2, BigRational::zero(), Vec::new()),
    }
}

/// The built-in configuration of the level-7 surface, with the index-24
/// sanity check: `3 I_7` at t = 0, 1, infinity and `I_1` at the three roots
/// of `t^3 - 8t^2 + 5t + 1`.
pub fn fiber_configuration() -> Result<FiberConfiguration, FibrationError> {
    let config = classify_fibers(&j_invariant())?;
    let total = config.total_index();
    if total != 24 {
        return Err(FibrationError::UnsupportedFibration(format!(
            "fibre indices sum to {total}, expected 24"
        )));
    }
    Ok(config)
}

/// Discriminant of `p_1` with respect to x, an exact polynomial in t.  For
/// the monic cubic `x^3 + b x^2 + c x + d` this is
/// `18bcd - 4b^3d + b^2c^2 - 4c^3 - 27d^2`.
pub fn discriminant_x_of_p1() -> IntPoly {
    let by_x = p1_poly().coefficients_in(Var::X);
    let d = by_x[0].as_univariate(Var::T).expect("pure t");
    let c = by_x[1].as_univariate(Var::T).expect("pure t");
    let b = by_x[2].as_univariate(Var::T).expect("pure t");
    let bcd = &(&b * &c) * &d;
    let b3d = &b.pow(3) * &d;
    let b2c2 = &b.pow(2) * &c.pow(2);
    let c3 = c.pow(3);
    let d2 = &d * &d;
    &(&(&bcd.scale(&BigInt::from(18)) - &b3d.scale(&BigInt::from(4))) + &b2c2)
        - &(&c3.scale(&BigInt::from(4)) + &d2.scale(&BigInt::from(27)))
}

// ---------------------------------------------------------------------------
// point counting
// ---------------------------------------------------------------------------

/// The x-coefficients of `p_1` as integer polynomials in t, ascending
/// (`[c_2, c_1, c_0]` for `x^3 + c_2 x^2 + c_1 x + c_0`), ready for the
/// counting loops.
pub fn p1_coefficient_arrays() -> [Vec<i64>; 3] {
    let by_x = p1_poly().coefficients_in(Var::X);
    let as_i64 = |p: &MultiPoly| {
        p.as_univariate(Var::T)
            .expect("pure t")
            .coeffs_i64()
            .expect("p_1 coefficients fit i64")
    };
    [as_i64(&by_x[2]), as_i64(&by_x[1]), as_i64(&by_x[0])]
}

/// The raw character sum `S_1 = sum_{x,t} chi(p_1(x, t))`, an O(p^2) loop
/// over the Legendre table, parallel over fibres.
pub fn p1_character_sum(field: &PrimeField) -> i64 {
    let [c2, c1, c0] = p1_coefficient_arrays();
    let p = field.p();
    (0..p)
        .into_par_iter()
        .map(|t| {
            let b = field.eval_poly(&c2, t);
            let c = field.eval_poly(&c1, t);
            let d = field.eval_poly(&c0, t);
            let mut row = 0i64;
            for x in 0..p {
                let v = field.add(field.mul(field.add(field.mul(field.add(x, b), x), c), x), d);
                row += field.legendre_residue(v) as i64;
            }
            row
        })
        .sum()
}

/// Primes admissible for the surface count: at least 5 and prime to the
/// level (7 and the characteristics 2, 3 are excluded).
pub fn good_surface_prime(p: u64) -> Result<(), BadPrime> {
    if p < 5 {
        return Err(BadPrime { p, reason: BadPrimeReason::BelowMinimum });
    }
    if p == 7 {
        return Err(BadPrime { p, reason: BadPrimeReason::DividesLevel });
    }
    Ok(())
}

/// Point count of the surface over F_p and its Frobenius trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceCount {
    pub points: i128,
    pub a_p: i64,
}

/// `#Y(F_p) = S_1 + p^2 + rho p = p^2 + rho p + a_p + 1` for a surface whose
/// divisor classes are all defined over Q.
pub fn count_surface_with_rho(field: &PrimeField, rho: u32) -> Result<SurfaceCount, BadPrime> {
    good_surface_prime(field.p())?;
    let s1 = p1_character_sum(field);
    let p = field.p() as i128;
    Ok(SurfaceCount {
        points: s1 as i128 + p * p + rho as i128 * p,
        a_p: s1 - 1,
    })
}

/// Surface count with the built-in Picard rank 20.
pub fn count_surface(field: &PrimeField) -> Result<SurfaceCount, BadPrime> {
    count_surface_with_rho(field, PICARD_RANK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitefield::primes_in_range;
    use crate::qseries::EtaQuotient;
    use num_traits::One;

    #[test]
    fn p1_coefficients() {
        let p1 = p1_poly();
        assert_eq!(p1.coefficient([2, 0, 0, 4]), BigInt::one());
        let at_zero = p1.substitute(Var::T, &MultiPoly::constant(0));
        let uni = at_zero.as_univariate(Var::X).unwrap();
        assert_eq!(uni, IntPoly::from_i64(&[0, 0, 1, 1])); // x^3 + x^2
        let [c2, c1, c0] = p1_coefficient_arrays();
        assert_eq!(c2, vec![1, 2, 3, -6, 1]);
        assert_eq!(c1, vec![0, 0, 8, 0, -16, 8]);
        assert_eq!(c0, vec![0, 0, 0, 0, 16, -32, 16]);
    }

    #[test]
    fn model_identities() {
        assert!(verify_weierstrass_identity());
        assert!(verify_p1_scaling());
        assert!(verify_model_identity());
    }

    #[test]
    fn perturbed_tate_model_breaks_the_identity() {
        // xy coefficient changed from (1 + t - t^2) to (1 + t + t^2)
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let z = MultiPoly::var(Var::Z);
        let good = homogeneous_tate_model();
        let delta = &(&t_poly(&[0, 0, 2]) * &(&x * &y)) * &z; // 2t^2 xyz
        let perturbed = &good + &delta;
        let t = MultiPoly::var(Var::T);
        let tm1 = &t - &MultiPoly::constant(1);
        let rhs = &(&t.pow(4) * &tm1.pow(3)) * &projective_model();
        assert_ne!(transformed_tate_model(&perturbed), rhs);
    }

    #[test]
    fn singular_points() {
        assert!(singular_points_check());
        for (pt, t) in SINGULAR_POINTS_FINITE {
            assert!(is_singular_finite(pt, t), "{pt:?} t={t}");
        }
        for pt in SINGULAR_POINTS_INFINITY {
            assert!(is_singular_at_infinity(pt), "{pt:?}");
        }
        // generic smooth point: not even on the surface
        assert!(!is_singular_finite([1, 1, 1], 2));
        assert!(!projective_model().eval_i64([1, 1, 1, 2]).is_zero());
    }

    #[test]
    fn j_invariant_shape() {
        let j = j_invariant();
        assert_eq!(j.num().degree(), Some(24));
        assert_eq!(j.den().degree(), Some(17));
        assert_eq!(j.pole_order_at(&BigRational::zero()), 7);
        assert_eq!(j.pole_order_at(&BigRational::one()), 7);
        assert_eq!(j.pole_order_at_infinity(), 7);
        // finite at generic rational points
        for t in [2i64, 3, -1, 10] {
            assert!(j.eval(&BigRational::from_integer(t.into())).is_some(), "t={t}");
        }
    }

    #[test]
    fn j_invariant_matches_weierstrass_invariants_of_p1() {
        // c4 = 16 a2^2 - 48 a4, c6 = -64 a2^3 + 288 a2 a4 - 864 a6 for
        // y^2 = x^3 + a2 x^2 + a4 x + a6; j = 1728 c4^3 / (c4^3 - c6^2)
        let by_x = p1_poly().coefficients_in(Var::X);
        let a6 = by_x[0].as_univariate(Var::T).unwrap();
        let a4 = by_x[1].as_univariate(Var::T).unwrap();
        let a2 = by_x[2].as_univariate(Var::T).unwrap();
        let c4 = &a2.pow(2).scale(&BigInt::from(16)) - &a4.scale(&BigInt::from(48));
        let c6 = &(&a2.pow(3).scale(&BigInt::from(-64))
            + &(&a2 * &a4).scale(&BigInt::from(288)))
            - &a6.scale(&BigInt::from(864));
        let c4cubed = c4.pow(3);
        let disc1728 = &c4cubed - &c6.pow(2);
        let j = RationalFunction::new(c4cubed.scale(&BigInt::from(1728)), disc1728).unwrap();
        assert_eq!(j, j_invariant());
    }

    #[test]
    fn builtin_fiber_configuration() {
        let config = fiber_configuration().unwrap();
        assert_eq!(config.total_index(), 24);
        assert_eq!(config.even_index_count(), 0);
        let fibers = config.fibers();
        assert_eq!(fibers.len(), 4);
        assert_eq!(
            (&fibers[0].place, fibers[0].index),
            (&FiberPlace::Rational(BigRational::zero()), 7)
        );
        assert_eq!(
            (&fibers[1].place, fibers[1].index),
            (&FiberPlace::Rational(BigRational::one()), 7)
        );
        assert_eq!(
            (&fibers[2].place, fibers[2].index),
            (&FiberPlace::Roots(IntPoly::from_i64(&[1, 5, -8, 1])), 1)
        );
        assert_eq!((&fibers[3].place, fibers[3].index), (&FiberPlace::Infinity, 7));
        assert_eq!(
            config.to_string(),
            "I7 at t=0, I7 at t=1, I1 at the 3 roots of t^3 - 8*t^2 + 5*t + 1, I7 at t=infinity"
        );
    }

    #[test]
    fn classify_simple_poles() {
        let t = IntPoly::variable();
        let j = RationalFunction::new(IntPoly::one(), t.clone()).unwrap();
        let config = classify_fibers(&j).unwrap();
        assert_eq!(config.fibers().len(), 1);
        assert_eq!(config.fibers()[0].index, 1);
        assert_eq!(config.total_index(), 1);

        let j2 = RationalFunction::new(IntPoly::one(), &t * &t).unwrap();
        let config = classify_fibers(&j2).unwrap();
        assert_eq!(config.fibers().len(), 1);
        assert_eq!(config.fibers()[0].index, 2);
        assert_eq!(
            config.fibers()[0].place,
            FiberPlace::Rational(BigRational::zero())
        );
    }

    #[test]
    fn classify_rejects_constants() {
        let j = RationalFunction::new(IntPoly::from_i64(&[1728]), IntPoly::one()).unwrap();
        assert!(matches!(classify_fibers(&j), Err(FibrationError::NoSingularFibers)));
    }

    #[test]
    fn discriminant_in_x() {
        // disc_x(p1) = 256 t^7 (t-1)^7 (t^3 - 8t^2 + 5t + 1)
        let disc = discriminant_x_of_p1();
        let t = IntPoly::variable();
        let cubic = IntPoly::from_i64(&[1, 5, -8, 1]);
        let expected = (&(&t.pow(7) * &IntPoly::from_i64(&[-1, 1]).pow(7)) * &cubic)
            .scale(&BigInt::from(256));
        assert_eq!(disc, expected);
        // rational roots are exactly 0 and 1, and the cubic divides
        let roots = disc.rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![BigRational::zero(), BigRational::one()]
        );
        assert!(disc.div_exact(&cubic).is_some());
    }

    #[test]
    fn surface_counts() {
        let f5 = PrimeField::new(5).unwrap().build_legendre_table().unwrap();
        let c = count_surface(&f5).unwrap();
        assert_eq!((c.points, c.a_p), (126, 0));
        let f11 = PrimeField::new(11).unwrap().build_legendre_table().unwrap();
        let c = count_surface(&f11).unwrap();
        assert_eq!((c.points, c.a_p), (336, -6));
        // trace equals the eta coefficient at 13 as well
        let f13 = PrimeField::new(13).unwrap().build_legendre_table().unwrap();
        let g3 = EtaQuotient::new(vec![(1, 3), (7, 3)]).unwrap().expand(13).unwrap();
        assert_eq!(
            BigInt::from(count_surface(&f13).unwrap().a_p),
            *g3.coefficient(13).unwrap()
        );
    }

    #[test]
    fn surface_count_guards() {
        let f7 = PrimeField::new(7).unwrap();
        let err = count_surface(&f7).unwrap_err();
        assert!(matches!(err.reason, BadPrimeReason::DividesLevel));
        let f3 = PrimeField::new(3).unwrap();
        let err = count_surface(&f3).unwrap_err();
        assert!(matches!(err.reason, BadPrimeReason::BelowMinimum));
    }

    #[test]
    fn trace_bound_from_the_count() {
        for p in primes_in_range(5, 31) {
            if p == 7 {
                continue;
            }
            let f = PrimeField::new(p).unwrap().build_legendre_table().unwrap();
            let c = count_surface(&f).unwrap();
            assert!(c.a_p.unsigned_abs() <= 20 * p, "p={p}");
        }
    }
}
