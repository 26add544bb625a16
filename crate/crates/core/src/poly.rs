//! Exact integer polynomial arithmetic: univariate polynomials over Z with
//! gcd / squarefree / rational-root machinery, and a small sparse
//! multivariate type in the fixed variables (x, y, z, t) for the symbolic
//! surface-model checks.
//!
//! Everything here is exact; there is no floating point anywhere in the
//! polynomial layer.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::finitefield::is_prime_u64;

// ---------------------------------------------------------------------------
// univariate
// ---------------------------------------------------------------------------

/// Univariate polynomial over Z, dense ascending coefficients, no trailing
/// zeros.  The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn variable() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as i64, or None if any is out of range.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, sign preserved; zero stays zero.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    /// Exact quotient `self / d` when the division over Q leaves no
    /// remainder and an integral quotient; None otherwise.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let lead = BigRational::from_integer(d.leading().unwrap().clone());
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dd = d.coeffs.len() - 1;
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = &rem[k] / &lead;
            if !q.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let term = &q * BigRational::from_integer(dc.clone());
                    rem[k - dd + j] -= term;
                }
            }
            quot[k - dd] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        let ints: Option<Vec<BigInt>> = quot
            .into_iter()
            .map(|q| if q.denom().is_one() { Some(q.to_integer()) } else { None })
            .collect();
        Some(IntPoly::from_coeffs(ints?))
    }

    /// Polynomial gcd in Z[t]: gcd of contents times the primitive gcd,
    /// leading coefficient positive.  Primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return positive_lead(other.clone());
        }
        if other.is_zero() {
            return positive_lead(self.clone());
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        positive_lead(a.scale(&content))
    }

    /// Yun squarefree decomposition of the primitive part: pairwise-coprime
    /// squarefree factors with their multiplicities, highest degree content
    /// discarded.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u32)> {
        let f = positive_lead(self.primitive_part());
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df).primitive_part();
        if a0.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut d = df.div_exact(&a0).expect("gcd divides f'") - b.derivative();
        let mut i = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let ai = positive_lead(b.gcd(&d).primitive_part());
            if ai.degree().unwrap_or(0) > 0 {
                out.push((ai.clone(), i));
            }
            b = b.div_exact(&ai).expect("factor divides");
            let c = d.div_exact(&ai).expect("factor divides d");
            d = c - b.derivative();
            i += 1;
        }
        out
    }

    /// All rational roots, exact, sorted.  Candidate numerators divide the
    /// trailing coefficient and denominators divide the leading one; both
    /// must fit u64 after removing the root at zero.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>, RootSearchError> {
        use num_traits::ToPrimitive;
        if self.is_zero() || self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let mut f = self.primitive_part();
        let mut roots = Vec::new();
        if f.coeffs[0].is_zero() {
            roots.push(BigRational::zero());
            let k = f.coeffs.iter().position(|c| !c.is_zero()).unwrap();
            f = IntPoly::from_coeffs(f.coeffs[k..].to_vec());
        }
        if f.degree().unwrap_or(0) == 0 {
            roots.sort();
            return Ok(roots);
        }
        let trailing = f.coeffs[0].abs();
        let lead = f.leading().unwrap().abs();
        let (t, l) = match (trailing.to_u64(), lead.to_u64()) {
            (Some(t), Some(l)) => (t, l),
            _ => return Err(RootSearchError::CoefficientTooLarge),
        };
        for num in divisors(t) {
            for den in divisors(l) {
                if BigInt::from(num).gcd(&BigInt::from(den)) != BigInt::one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = BigRational::new((sign * num as i64).into(), BigInt::from(den));
                    if f.eval_rational(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSearchError {
    #[error("coefficient too large for rational root search")]
    CoefficientTooLarge,
}

fn positive_lead(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some(l) if l.is_negative() => p.scale(&BigInt::from(-1)),
        _ => p,
    }
}

/// Fraction-free pseudo-remainder of a by b.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.coeffs.len() - 1;
    let lead_b = b.leading().unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.coeffs.len() > db {
        let dr = r.coeffs.len() - 1;
        let lead_r = r.leading().unwrap().clone();
        let shift = dr - db;
        let mut next = r.scale(&lead_b);
        for (j, c) in b.coeffs.iter().enumerate() {
            next.coeffs[shift + j] -= &lead_r * c;
        }
        r = IntPoly::from_coeffs(next.coeffs);
    }
    r
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Divisors of n (n >= 1), by trial division plus Pollard rho.
fn divisors(n: u64) -> Vec<u64> {
    let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
    let mut m = n.max(1);
    for p in 2..=64u64 {
        while m.is_multiple_of(p) {
            *factors.entry(p).or_insert(0) += 1;
            m /= p;
        }
    }
    let mut stack = vec![m];
    while let Some(v) = stack.pop() {
        if v == 1 {
            continue;
        }
        if is_prime_u64(v) {
            *factors.entry(v).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(v);
        stack.push(d);
        stack.push(v / d);
    }
    let mut divs = vec![1u64];
    for (p, e) in factors {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime_u64(n) && !n.is_multiple_of(2));
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul(x, x) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

// ---------------------------------------------------------------------------
// multivariate
// ---------------------------------------------------------------------------

/// Variable index for [`MultiPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
}

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "t"];

/// Sparse polynomial over Z in the fixed variables (x, y, z, t).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<[u16; 4], BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = MultiPoly::zero();
        if c != 0 {
            p.terms.insert([0; 4], BigInt::from(c));
        }
        p
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0u16; 4];
        exps[v as usize] = 1;
        let mut p = MultiPoly::zero();
        p.terms.insert(exps, BigInt::one());
        p
    }

    pub fn monomial(coeff: BigInt, exps: [u16; 4]) -> Self {
        let mut p = MultiPoly::zero();
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16; 4], &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial with the given exponent vector.
    pub fn coefficient(&self, exps: [u16; 4]) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_degree(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e[v as usize]).max().unwrap_or(0)
    }

    fn insert(&mut self, exps: [u16; 4], c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        if c == 0 {
            return MultiPoly::zero();
        }
        let big = BigInt::from(c);
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * &big)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = MultiPoly::constant(1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, v: Var) -> Self {
        let idx = v as usize;
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            let e = exps[idx];
            if e == 0 {
                continue;
            }
            let mut ne = *exps;
            ne[idx] = e - 1;
            out.insert(ne, c * BigInt::from(e));
        }
        out
    }

    /// Simultaneous substitution of every variable.
    pub fn compose(&self, subs: [&MultiPoly; 4]) -> Self {
        let mut powers: [Vec<MultiPoly>; 4] =
            [vec![MultiPoly::constant(1)], vec![MultiPoly::constant(1)], vec![MultiPoly::constant(1)], vec![MultiPoly::constant(1)]];
        for v in 0..4 {
            let max = self.max_degree(match v {
                0 => Var::X,
                1 => Var::Y,
                2 => Var::Z,
                _ => Var::T,
            }) as usize;
            for k in 1..=max {
                let next = &powers[v][k - 1] * subs[v];
                powers[v].push(next);
            }
        }
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::monomial(c.clone(), [0; 4]);
            for v in 0..4 {
                if exps[v] > 0 {
                    term = &term * &powers[v][exps[v] as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Substitute a single variable, leaving the others alone.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let z = MultiPoly::var(Var::Z);
        let t = MultiPoly::var(Var::T);
        let mut subs = [&x, &y, &z, &t];
        subs[v as usize] = value;
        self.compose(subs)
    }

    /// Collect by powers of one variable; entry k is the coefficient of
    /// `v^k` with that variable removed.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let idx = v as usize;
        let max = self.max_degree(v) as usize;
        let mut out = vec![MultiPoly::zero(); max + 1];
        for (exps, c) in &self.terms {
            let mut ne = *exps;
            let k = ne[idx] as usize;
            ne[idx] = 0;
            out[k].insert(ne, c.clone());
        }
        out
    }

    /// View as a univariate polynomial in `v`; None if any other variable
    /// occurs.
    pub fn as_univariate(&self, v: Var) -> Option<IntPoly> {
        let idx = v as usize;
        let mut coeffs = vec![BigInt::zero(); self.max_degree(v) as usize + 1];
        for (exps, c) in &self.terms {
            for (j, e) in exps.iter().enumerate() {
                if j != idx && *e != 0 {
                    return None;
                }
            }
            coeffs[exps[idx] as usize] = c.clone();
        }
        Some(IntPoly::from_coeffs(coeffs))
    }

    pub fn eval_i64(&self, xyzt: [i64; 4]) -> BigInt {
        let vals: [BigInt; 4] = xyzt.map(BigInt::from);
        let mut total = BigInt::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for v in 0..4 {
                for _ in 0..exps[v] {
                    term *= &vals[v];
                }
            }
            total += term;
        }
        total
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert(*exps, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.insert(*exps, -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.insert(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let constant = exps.iter().all(|&e| e == 0);
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut need_star = false;
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                write!(f, "{}", VAR_NAMES[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn gcd_and_exact_division() {
        // (t^2 - 1)(t + 2) and (t - 1)(t + 3)
        let a = &p(&[-1, 0, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.div_exact(&p(&[-1, 1])).unwrap(), &p(&[1, 1]) * &p(&[2, 1]));
        assert!(a.div_exact(&p(&[5, 1])).is_none());
        // content is carried: gcd(2t+2, 4t+4) = 2t+2
        assert_eq!(p(&[2, 2]).gcd(&p(&[4, 4])), p(&[2, 2]));
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // t^3 (t-1)^2 (t+5)
        let f = &(&p(&[0, 1]).pow(3) * &p(&[-1, 1]).pow(2)) * &p(&[5, 1]);
        let sf = f.squarefree_decomposition();
        assert_eq!(
            sf,
            vec![(p(&[5, 1]), 1), (p(&[-1, 1]), 2), (p(&[0, 1]), 3)]
        );
        // skipped multiplicity: t^3 (t+5)
        let g = &p(&[0, 1]).pow(3) * &p(&[5, 1]);
        assert_eq!(
            g.squarefree_decomposition(),
            vec![(p(&[5, 1]), 1), (p(&[0, 1]), 3)]
        );
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2t - 1)(t + 3) t
        let f = &(&p(&[-1, 2]) * &p(&[3, 1])) * &p(&[0, 1]);
        let roots = f.rational_roots().unwrap();
        let expect: Vec<BigRational> = vec![
            BigRational::new((-3).into(), 1.into()),
            BigRational::zero(),
            BigRational::new(1.into(), 2.into()),
        ];
        assert_eq!(roots, expect);
        // no rational roots
        assert!(p(&[1, 5, -8, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn divisor_generation() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(97), vec![1, 97]);
        // needs rho: product of two largish primes
        let n = 1_000_003u64 * 998_117;
        let d = divisors(n);
        assert_eq!(d, vec![1, 998_117, 1_000_003, n]);
    }

    #[test]
    fn multipoly_roundtrip() {
        let x = MultiPoly::var(Var::X);
        let t = MultiPoly::var(Var::T);
        let f = &(&x * &x) - &(&t * &MultiPoly::constant(3));
        assert_eq!(f.eval_i64([2, 0, 0, 1]), BigInt::from(1));
        assert_eq!(f.partial(Var::X), x.scale_i64(2));
        assert_eq!(f.partial(Var::T), MultiPoly::constant(-3));
        let sub = f.substitute(Var::X, &(&t + &MultiPoly::constant(1)));
        // (t+1)^2 - 3t = t^2 - t + 1
        assert_eq!(sub.eval_i64([0, 0, 0, 4]), BigInt::from(13));
        let uni = sub.as_univariate(Var::T).unwrap();
        assert_eq!(uni, p(&[1, -1, 1]));
    }

    #[test]
    fn multipoly_collect_by_variable() {
        let x = MultiPoly::var(Var::X);
        let z = MultiPoly::var(Var::Z);
        let f = &(&(&x * &z) * &z) + &x; // x z^2 + x
        let by_z = f.coefficients_in(Var::Z);
        assert_eq!(by_z.len(), 3);
        assert_eq!(by_z[0], x);
        assert!(by_z[1].is_zero());
        assert_eq!(by_z[2], x);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 5, -8, 1]).to_string(), "t^3 - 8*t^2 + 5*t + 1");
        let x = MultiPoly::var(Var::X);
        let y = MultiPoly::var(Var::Y);
        let f = &(&x * &x) - &y.scale_i64(2);
        assert_eq!(f.to_string(), "x^2 - 2*y");
    }
}
