//! Rational elliptic curves with full 2-torsion, reduction mod p, and point
//! counts; plus the raw plane-model probe for the curve of non-zero
//! 2-torsion sections of the level-7 surface.
//!
//! A curve is always given by its three 2-torsion roots,
//! `y^2 = (x - e1)(x - e2)(x - e3)`, which makes rationality of the full
//! 2-torsion structurally unbreakable.  The roots are cleared to a common
//! denominator d at construction (an isomorphism scales the integral model
//! roots by d^2), and reduction rejects primes dividing d or a pairwise
//! root difference.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::fibration;
use crate::finitefield::PrimeField;

/// A prime at which one of the counting formulas does not apply.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("p={p}: {reason}")]
pub struct BadPrime {
    pub p: u64,
    pub reason: BadPrimeReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BadPrimeReason {
    /// Below the verification minimum of 5 (characteristics 2 and 3 are
    /// excluded throughout).
    BelowMinimum,
    /// Divides the level 14 of the fibration data (p = 7, or p = 2 which is
    /// already below the minimum).
    DividesLevel,
    /// Divides the common denominator of the curve model.
    DividesDenominator(BigInt),
    /// Two 2-torsion roots collide mod p (indices are 1-based).
    RootCollision(usize, usize),
}

impl fmt::Display for BadPrimeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BadPrimeReason::BelowMinimum => write!(f, "below the verification minimum 5"),
            BadPrimeReason::DividesLevel => write!(f, "divides the level 14"),
            BadPrimeReason::DividesDenominator(d) => {
                write!(f, "divides the curve denominator {d}")
            }
            BadPrimeReason::RootCollision(i, j) => {
                write!(f, "divides the root difference e{j} - e{i}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("2-torsion roots must be pairwise distinct (e{0} = e{1})")]
    RepeatedRoot(usize, usize),
    #[error("curve parse error: {0}")]
    Parse(String),
}

/// `y^2 = (x - e1)(x - e2)(x - e3)` over Q with pairwise distinct roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurve {
    roots: [BigRational; 3],
    /// lcm of the root denominators.
    denom: BigInt,
    /// Integral model roots `d^2 e_i` of the scaled curve.
    scaled: [BigInt; 3],
}

impl EllipticCurve {
    pub fn new(e1: BigRational, e2: BigRational, e3: BigRational) -> Result<Self, CurveError> {
        let roots = [e1, e2, e3];
        for i in 0..3 {
            for j in (i + 1)..3 {
                if roots[i] == roots[j] {
                    return Err(CurveError::RepeatedRoot(i + 1, j + 1));
                }
            }
        }
        let denom = roots
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let d2 = &denom * &denom;
        let scaled = [
            (&roots[0] * BigRational::from_integer(d2.clone())).to_integer(),
            (&roots[1] * BigRational::from_integer(d2.clone())).to_integer(),
            (&roots[2] * BigRational::from_integer(d2.clone())).to_integer(),
        ];
        Ok(EllipticCurve { roots, denom, scaled })
    }

    /// Parse `e1,e2,e3` where each entry is `n` or `n/d`.
    pub fn parse(s: &str) -> Result<Self, CurveError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(CurveError::Parse(format!(
                "expected three comma-separated roots, got {}",
                parts.len()
            )));
        }
        let mut roots = Vec::with_capacity(3);
        for part in &parts {
            roots.push(parse_rational(part.trim())?);
        }
        EllipticCurve::new(roots.remove(0), roots.remove(0), roots.remove(0))
    }

    pub fn roots(&self) -> &[BigRational; 3] {
        &self.roots
    }

    /// Always true for this representation; the constructor owns the guard.
    pub fn has_rational_two_torsion(&self) -> bool {
        true
    }

    /// Reduce the integral model mod p, or report why p is bad for it.
    pub fn reduce(&self, field: &PrimeField) -> Result<[u64; 3], BadPrime> {
        let p = field.p();
        let pb = BigInt::from(p);
        if (&self.denom % &pb).is_zero() {
            return Err(BadPrime {
                p,
                reason: BadPrimeReason::DividesDenominator(self.denom.clone()),
            });
        }
        let res: Vec<u64> = self
            .scaled
            .iter()
            .map(|r| r.mod_floor(&pb).to_u64().expect("residue fits u64"))
            .collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                if res[i] == res[j] {
                    return Err(BadPrime {
                        p,
                        reason: BadPrimeReason::RootCollision(i + 1, j + 1),
                    });
                }
            }
        }
        Ok([res[0], res[1], res[2]])
    }

    /// The character sum `S_2 = sum_x chi((x-e1)(x-e2)(x-e3))`, which equals
    /// `-c_p`.
    pub fn char_sum(&self, field: &PrimeField) -> Result<i64, BadPrime> {
        let r = self.reduce(field)?;
        let p = field.p();
        let mut s = 0i64;
        for x in 0..p {
            let v = field.mul(field.mul(field.sub(x, r[0]), field.sub(x, r[1])), field.sub(x, r[2]));
            s += field.legendre_residue(v) as i64;
        }
        Ok(s)
    }

    /// `#E(F_p) = sum_x (chi(p_2(x)) + 1) + 1`, the final term being the
    /// point at infinity, together with the trace `c_p = p + 1 - #E(F_p)`.
    pub fn count_points(&self, field: &PrimeField) -> Result<CurveTrace, BadPrime> {
        let s2 = self.char_sum(field)?;
        let p = field.p();
        let count = (p as i64 + 1 + s2) as u64;
        Ok(CurveTrace { p, count, c_p: -s2 })
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.roots[0], self.roots[1], self.roots[2])
    }
}

fn parse_rational(s: &str) -> Result<BigRational, CurveError> {
    let bad = || CurveError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Point count and Frobenius trace of a curve at one prime:
/// `count = p + 1 - c_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveTrace {
    pub p: u64,
    pub count: u64,
    pub c_p: i64,
}

impl CurveTrace {
    /// `|c_p| <= 2 sqrt(p)`.
    pub fn satisfies_hasse_bound(&self) -> bool {
        (self.c_p as i128) * (self.c_p as i128) <= 4 * self.p as i128
    }
}

/// Affine F_p-solutions `(x, t)` of the 2-torsion plane model of the
/// fibration, counted through its monic rescaling `p_1(x, t) = 0`
/// (`x -> 4x` is a bijection away from characteristic 2).
///
/// This is a raw plane-model count, *not* the smooth-model count of the
/// 2-torsion curve; the weight-2 level-14 eta product is the authoritative
/// source for the latter's traces.
pub fn affine_two_torsion_count(field: &PrimeField) -> u64 {
    let [c2, c1, c0] = fibration::p1_coefficient_arrays();
    let p = field.p();
    let mut n = 0u64;
    for t in 0..p {
        let b = field.eval_poly(&c2, t);
        let c = field.eval_poly(&c1, t);
        let d = field.eval_poly(&c0, t);
        for x in 0..p {
            let v = field.add(field.mul(field.add(field.mul(field.add(x, b), x), c), x), d);
            if v == 0 {
                n += 1;
            }
        }
    }
    n
}
