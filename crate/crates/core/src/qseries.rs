//! Integer q-series with fractional leading exponents, and the eta-quotient
//! expansions built on them.
//!
//! A [`QSeries`] is a truncated series
//!
//! ```text
//! f = q^(offset24/24) * (c_0 + c_1 q + c_2 q^2 + ... + c_{T-1} q^{T-1} + O(q^T))
//! ```
//!
//! with arbitrary-precision integer coefficients.  Leading exponents are
//! carried exactly in 24ths so that eta quotients such as
//! `eta(q) = q^(1/24) prod (1 - q^n)` live in the type without rounding; a
//! series is *classical* when its offset is a whole power of q, and only
//! classical series admit integer-indexed coefficient extraction.
//!
//! Truncation propagates pessimistically: every operation knows its result
//! only as far as the sharpest O(q^N) bound derivable from its operands, and
//! never extrapolates.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QSeriesError {
    #[error("need at least one series term")]
    ZeroTerms,
    #[error("series with fractional leading exponent {offset24}/24 has no integer-indexed coefficients")]
    NonClassical { offset24: i64 },
    #[error("coefficient of q^{n} outside the known range q^{lo}..q^{hi}")]
    OutOfRange { n: i64, lo: i64, hi: i64 },
    #[error("cannot invert series with leading coefficient {lead} (need +1 or -1)")]
    NonInvertible { lead: BigInt },
    #[error("cannot combine series on q-grids {a}/24 and {b}/24")]
    GridMismatch { a: i64, b: i64 },
    #[error("polynomial has no coefficients")]
    EmptyPolynomial,
    #[error("series truncated before q^{needed} (known through q^{have})")]
    InsufficientTerms { needed: i64, have: i64 },
    #[error("eta quotient parse error: {0}")]
    Parse(String),
}

/// Truncated integer q-series with exact fractional leading exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    /// Exponent of the leading stored term, in units of 1/24.
    offset24: i64,
    /// `coeffs[k]` is the coefficient of `q^(offset24/24 + k)`.
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Build a series from an explicit leading exponent (in 24ths) and
    /// coefficient list.  Panics on an empty coefficient list; a series
    /// always knows at least one term.
    pub fn new(offset24: i64, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "QSeries needs at least one coefficient");
        QSeries { offset24, coeffs }
    }

    /// The constant series `c + O(q^reach)`.
    pub fn constant(c: BigInt, reach: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); reach.max(1)];
        coeffs[0] = c;
        QSeries { offset24: 0, coeffs }
    }

    pub fn offset24(&self) -> i64 {
        self.offset24
    }

    /// Number of known coefficients.
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// First unknown exponent, in 24ths: the series is `known + O(q^(reach24/24))`.
    pub fn reach24(&self) -> i64 {
        self.offset24 + 24 * self.coeffs.len() as i64
    }

    /// A series is classical when its exponents are integers.
    pub fn is_classical(&self) -> bool {
        self.offset24.rem_euclid(24) == 0
    }

    /// Coefficient of `q^n` for classical series.
    pub fn coefficient(&self, n: i64) -> Result<&BigInt, QSeriesError> {
        if !self.is_classical() {
            return Err(QSeriesError::NonClassical { offset24: self.offset24 });
        }
        let lo = self.offset24 / 24;
        let hi = lo + self.coeffs.len() as i64 - 1;
        if n < lo || n > hi {
            return Err(QSeriesError::OutOfRange { n, lo, hi });
        }
        Ok(&self.coeffs[(n - lo) as usize])
    }

    /// Strip stored leading zeros.  The O(q^N) reach is unchanged; an
    /// identically-zero series keeps its last slot.
    pub fn normalized(&self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len() - 1);
        QSeries {
            offset24: self.offset24 + 24 * lead as i64,
            coeffs: self.coeffs[lead..].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Product, truncated to the shorter reach.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![BigInt::zero(); trunc];
        // iterate over the operand with fewer nonzero entries; eta units are sparse
        let (a, b) = if nonzero_count(&self.coeffs) <= nonzero_count(&other.coeffs) {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        for (i, ai) in a.iter().enumerate().take(trunc) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(trunc - i) {
                if !bj.is_zero() {
                    out[i + j] += ai * bj;
                }
            }
        }
        QSeries { offset24: self.offset24 + other.offset24, coeffs: out }
    }

    /// Sum.  Both series must live on the same fractional q-grid.
    pub fn add(&self, other: &QSeries) -> Result<QSeries, QSeriesError> {
        if (self.offset24 - other.offset24).rem_euclid(24) != 0 {
            return Err(QSeriesError::GridMismatch { a: self.offset24, b: other.offset24 });
        }
        let off = self.offset24.min(other.offset24);
        let reach = self.reach24().min(other.reach24());
        let len = ((reach - off) / 24).max(1) as usize;
        let mut out = vec![BigInt::zero(); len];
        for (src, src_off) in [(self, self.offset24), (other, other.offset24)] {
            let shift = ((src_off - off) / 24) as usize;
            for (k, c) in src.coeffs.iter().enumerate() {
                let idx = k + shift;
                if idx < len {
                    out[idx] += c;
                }
            }
        }
        Ok(QSeries { offset24: off, coeffs: out })
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries, QSeriesError> {
        self.add(&other.scalar_mul(&BigInt::from(-1)))
    }

    pub fn scalar_mul(&self, c: &BigInt) -> QSeries {
        QSeries {
            offset24: self.offset24,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Add an exact integer constant.  Requires a classical grid; the
    /// constant does not shorten the known reach.
    pub fn add_scalar(&self, c: &BigInt) -> Result<QSeries, QSeriesError> {
        if !self.is_classical() {
            return Err(QSeriesError::GridMismatch { a: self.offset24, b: 0 });
        }
        if c.is_zero() {
            return Ok(self.clone());
        }
        let mut out = self.clone();
        if self.offset24 <= 0 {
            let idx = (-self.offset24 / 24) as usize;
            if idx < out.coeffs.len() {
                out.coeffs[idx] += c;
            }
            // a constant beyond the known reach is absorbed by the O-term
        } else {
            let pad = (self.offset24 / 24) as usize;
            let mut coeffs = Vec::with_capacity(pad + self.coeffs.len());
            coeffs.push(c.clone());
            coeffs.extend(std::iter::repeat_with(BigInt::zero).take(pad - 1));
            coeffs.extend(self.coeffs.iter().cloned());
            out = QSeries { offset24: 0, coeffs };
        }
        Ok(out)
    }

    /// Multiplicative inverse.  The leading coefficient (after stripping
    /// stored zeros) must be +-1 so the inverse stays integral.
    pub fn invert(&self) -> Result<QSeries, QSeriesError> {
        let f = self.normalized();
        let lead = f.coeffs[0].clone();
        if !(lead.is_one() || (-&lead).is_one()) {
            return Err(QSeriesError::NonInvertible { lead });
        }
        let n = f.coeffs.len();
        let mut inv = vec![BigInt::zero(); n];
        inv[0] = lead.clone();
        for k in 1..n {
            let mut s = BigInt::zero();
            for j in 1..=k {
                if !f.coeffs[j].is_zero() {
                    s += &f.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -&lead * s;
        }
        Ok(QSeries { offset24: -f.offset24, coeffs: inv })
    }

    /// Quotient `self / other`; the divisor's leading coefficient must be +-1.
    pub fn div(&self, other: &QSeries) -> Result<QSeries, QSeriesError> {
        Ok(self.mul(&other.invert()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, k: i32) -> Result<QSeries, QSeriesError> {
        if k == 0 {
            return Ok(QSeries::constant(BigInt::one(), self.coeffs.len()));
        }
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = base.clone();
        for _ in 1..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Whether the two series agree on `n_terms` consecutive integer
    /// exponents starting from the smaller of the two leading exponents.
    /// Errors if either side is not known that far.
    pub fn agrees_with(&self, other: &QSeries, n_terms: usize) -> Result<bool, QSeriesError> {
        if n_terms == 0 {
            return Err(QSeriesError::ZeroTerms);
        }
        let a = self.normalized();
        let b = other.normalized();
        if (a.offset24 - b.offset24).rem_euclid(24) != 0 {
            return Ok(a.is_zero() && b.is_zero());
        }
        let start = a.offset24.min(b.offset24);
        let needed = start + 24 * n_terms as i64;
        for s in [&a, &b] {
            if s.reach24() < needed {
                return Err(QSeriesError::InsufficientTerms {
                    needed: needed.div_euclid(24),
                    have: s.reach24().div_euclid(24) - 1,
                });
            }
        }
        let zero = BigInt::zero();
        for step in 0..n_terms as i64 {
            let e = start + 24 * step;
            let ca = coeff_at(&a, e).unwrap_or(&zero);
            let cb = coeff_at(&b, e).unwrap_or(&zero);
            if ca != cb {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn coeff_at(s: &QSeries, e24: i64) -> Option<&BigInt> {
    if (e24 - s.offset24).rem_euclid(24) != 0 {
        return None;
    }
    let idx = (e24 - s.offset24) / 24;
    if idx < 0 || idx >= s.coeffs.len() as i64 {
        None
    } else {
        Some(&s.coeffs[idx as usize])
    }
}

fn nonzero_count(v: &[BigInt]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for QSeries {
    /// Sparse `c*q^n` terms in ascending exponent, then the O-tail.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
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
            let e24 = self.offset24 + 24 * k as i64;
            if e24 == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", fmt_q_power(e24))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({})", fmt_q_power(self.reach24()))
    }
}

fn fmt_q_power(e24: i64) -> String {
    if e24.rem_euclid(24) == 0 {
        match e24 / 24 {
            1 => "q".to_string(),
            n => format!("q^{n}"),
        }
    } else {
        let g = e24.gcd(&24);
        format!("q^({}/{})", e24 / g, 24 / g)
    }
}

/// A formal product `prod_delta eta(q^delta)^(m_delta)` with strictly
/// increasing deltas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u32, i32)>,
}

impl EtaQuotient {
    pub fn new(factors: Vec<(u32, i32)>) -> Result<Self, QSeriesError> {
        if factors.is_empty() {
            return Err(QSeriesError::Parse("empty eta quotient".into()));
        }
        for w in factors.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(QSeriesError::Parse(format!(
                    "deltas must be strictly increasing: {} after {}",
                    w[1].0, w[0].0
                )));
            }
        }
        if factors.iter().any(|&(d, _)| d == 0) {
            return Err(QSeriesError::Parse("delta must be positive".into()));
        }
        Ok(EtaQuotient { factors })
    }

    /// Grammar: `delta:exponent[,delta:exponent]*`, e.g. `1:3,7:3`.
    pub fn parse(s: &str) -> Result<Self, QSeriesError> {
        let mut factors = Vec::new();
        for part in s.split(',') {
            let (d, m) = part
                .split_once(':')
                .ok_or_else(|| QSeriesError::Parse(format!("expected delta:exponent, got {part:?}")))?;
            let delta: u32 = d
                .trim()
                .parse()
                .map_err(|_| QSeriesError::Parse(format!("bad delta {d:?}")))?;
            let expo: i32 = m
                .trim()
                .parse()
                .map_err(|_| QSeriesError::Parse(format!("bad exponent {m:?}")))?;
            factors.push((delta, expo));
        }
        EtaQuotient::new(factors)
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    /// Modular weight, `(1/2) sum m_delta`.
    pub fn weight(&self) -> Rational64 {
        Rational64::new(self.factors.iter().map(|&(_, m)| m as i64).sum(), 2)
    }

    /// Leading exponent in 24ths: `sum delta * m_delta`.
    pub fn offset24(&self) -> i64 {
        self.factors.iter().map(|&(d, m)| d as i64 * m as i64).sum()
    }

    /// Expand to `n_terms` coefficients starting at the leading exponent.
    ///
    /// Each factor `prod (1 - q^(n delta))` comes from the pentagonal-number
    /// expansion; negative exponents invert the unit series and positive
    /// powers are accumulated by repeated multiplication.
    pub fn expand(&self, n_terms: usize) -> Result<QSeries, QSeriesError> {
        if n_terms == 0 {
            return Err(QSeriesError::ZeroTerms);
        }
        let mut unit = QSeries::constant(BigInt::one(), n_terms);
        for &(delta, m) in &self.factors {
            if m == 0 {
                continue;
            }
            let base = euler_product(delta, n_terms);
            let base = if m < 0 { base.invert()? } else { base };
            for _ in 0..m.unsigned_abs() {
                unit = unit.mul(&base);
            }
        }
        Ok(QSeries { offset24: self.offset24(), coeffs: unit.coeffs })
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}:{m}")?;
        }
        Ok(())
    }
}

/// `(eta(q) eta(q^7))^3`: the normalized weight-3 newform of level 7.  Its
/// q^p coefficients are the surface traces a_p.
pub fn weight3_level7_form() -> EtaQuotient {
    EtaQuotient::new(vec![(1, 3), (7, 3)]).expect("valid quotient")
}

/// `eta(q) eta(q^2) eta(q^7) eta(q^14)`: the weight-2 newform of level 14.
/// Its q^p coefficients are the traces b_p of the 2-torsion curve.
pub fn weight2_level14_form() -> EtaQuotient {
    EtaQuotient::new(vec![(1, 1), (2, 1), (7, 1), (14, 1)]).expect("valid quotient")
}

/// `u = (eta(q^2)/eta(q))^24`, a hauptmodul for Gamma_0(2).
pub fn hauptmodul_u() -> EtaQuotient {
    EtaQuotient::new(vec![(1, -24), (2, 24)]).expect("valid quotient")
}

/// `r = (eta(q^7)/eta(q))^4`, a hauptmodul for Gamma_0(7).
pub fn hauptmodul_r() -> EtaQuotient {
    EtaQuotient::new(vec![(1, -4), (7, 4)]).expect("valid quotient")
}

/// `prod_{n>=1} (1 - q^(n delta))` to `n_terms` coefficients, by the
/// pentagonal number theorem: the coefficient of `q^(delta k(3k-1)/2)`
/// is `(-1)^k` for every integer k.
pub fn euler_product(delta: u32, n_terms: usize) -> QSeries {
    let mut coeffs = vec![BigInt::zero(); n_terms];
    let d = delta as i64;
    let n = n_terms as i64;
    let mut k: i64 = 0;
    loop {
        let e_pos = d * k * (3 * k - 1) / 2;
        let e_neg = d * k * (3 * k + 1) / 2;
        if e_pos >= n && e_neg >= n {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        if e_pos < n {
            coeffs[e_pos as usize] += sign;
        }
        if k > 0 && e_neg < n {
            coeffs[e_neg as usize] += sign;
        }
        k += 1;
    }
    QSeries { offset24: 0, coeffs }
}

/// Eisenstein series `E_4 = 1 + 240 sum sigma_3(n) q^n`.
pub fn eisenstein_e4(n_terms: usize) -> QSeries {
    let mut sigma3 = vec![0u128; n_terms];
    for d in 1..n_terms as u128 {
        let cube = d * d * d;
        let mut m = d as usize;
        while m < n_terms {
            sigma3[m] += cube;
            m += d as usize;
        }
    }
    let mut coeffs: Vec<BigInt> = sigma3.into_iter().map(|s| BigInt::from(240u32) * s).collect();
    coeffs[0] = BigInt::one();
    QSeries { offset24: 0, coeffs }
}

/// The modular j-function `E_4^3 / Delta` as a series starting at `q^-1`,
/// with `n_terms` known coefficients.
pub fn j_expansion(n_terms: usize) -> Result<QSeries, QSeriesError> {
    if n_terms == 0 {
        return Err(QSeriesError::ZeroTerms);
    }
    let e4 = eisenstein_e4(n_terms);
    let e4_cubed = e4.mul(&e4).mul(&e4);
    let delta_unit = euler_product(1, n_terms).pow(24)?;
    let j_unit = e4_cubed.mul(&delta_unit.invert()?);
    Ok(QSeries { offset24: -24, coeffs: j_unit.coeffs })
}

/// Evaluate an integer polynomial (ascending coefficients) at a classical
/// series by Horner's rule.  Constants are exact and do not eat precision.
pub fn eval_int_poly(coeffs: &[BigInt], input: &QSeries) -> Result<QSeries, QSeriesError> {
    if coeffs.is_empty() {
        return Err(QSeriesError::EmptyPolynomial);
    }
    if !input.is_classical() {
        return Err(QSeriesError::NonClassical { offset24: input.offset24 });
    }
    if coeffs.len() == 1 {
        let reach = (input.reach24() / 24).max(1) as usize;
        return Ok(QSeries::constant(coeffs[0].clone(), reach));
    }
    let mut acc = input.scalar_mul(&coeffs[coeffs.len() - 1]);
    acc = acc.add_scalar(&coeffs[coeffs.len() - 2])?;
    for c in coeffs[..coeffs.len() - 2].iter().rev() {
        acc = acc.mul(input).add_scalar(c)?;
    }
    Ok(acc)
}

/// Check a hauptmodul identity `numerator(f) / denominator(f) = target`
/// through `n_terms` coefficients, where `numerator` and `denominator` are
/// integer polynomials given by ascending coefficient lists.
///
/// The denominator series must have leading coefficient +-1 after factoring
/// out its leading q-power.
pub fn verify_hauptmodul_identity(
    numerator: &[BigInt],
    denominator: &[BigInt],
    input: &QSeries,
    target: &QSeries,
    n_terms: usize,
) -> Result<bool, QSeriesError> {
    if n_terms == 0 {
        return Err(QSeriesError::ZeroTerms);
    }
    let num = eval_int_poly(numerator, input)?;
    let den = eval_int_poly(denominator, input)?;
    let quotient = num.div(&den)?;
    quotient.agrees_with(target, n_terms)
}
