//! Exact arithmetic for the Kummer Calabi-Yau threefold fibered from the
//! level-7 elliptic modular surface.
//!
//! The threefold is the resolved quotient of `Y x E` by the simultaneous
//! negation involution, where `Y = S(Gamma_1(7))` is the rational elliptic
//! modular surface of level 7 (an elliptic K3 with singular fibres
//! `3 I_1 + 3 I_7`) and `E` is an elliptic curve over Q with rational
//! 2-torsion.  Its middle cohomology is governed by two eta products,
//!
//! ```text
//! g_3   = (eta(q) eta(q^7))^3              weight 3, level 7
//! g_2^B = eta(q) eta(q^2) eta(q^7) eta(q^14)   weight 2, level 14
//! ```
//!
//! together with the weight-2 form of `E` itself.  Everything here is exact:
//! q-series over arbitrary-precision integers, polynomial identities over Z,
//! and point counts over prime fields.  The headline computation compares,
//! prime by prime, a Lefschetz-style predicted point count of the threefold
//! against a count assembled from raw character sums, and checks that the
//! surface trace `a_p` equals the q^p coefficient of `g_3`.
//!
//! Modules:
//! - [`qseries`]: integer q-series with fractional (24th) leading offsets,
//!   eta-quotient expansion, the j-function, hauptmodul identity checks.
//! - [`finitefield`]: odd prime fields, Legendre symbol, residue tables.
//! - [`poly`]: exact univariate and multivariate integer polynomials.
//! - [`curves`]: rational elliptic curves in 2-torsion form, point counts.
//! - [`fibration`]: the explicit models of `Y`, its j-invariant, Kodaira
//!   fibre classification, symbolic model checks, surface point counts.
//! - [`kummer`]: Hodge/eigenspace invariants of the Kummer construction and
//!   the per-prime trace verification engine.

pub mod curves;
pub mod fibration;
pub mod finitefield;
pub mod kummer;
pub mod poly;
pub mod qseries;

pub use curves::{affine_two_torsion_count, BadPrime, BadPrimeReason, CurveTrace, EllipticCurve};
pub use fibration::{
    classify_fibers, j_invariant, Fiber, FiberConfiguration, FiberPlace, FibrationError,
    RationalFunction, SurfaceCount,
};
pub use finitefield::{FieldError, PrimeField};
pub use kummer::{
    count_kummer, hodge_numbers, predicted_trace, trace_table, verify_prime, CountMethod,
    CountTerms, FrobeniusTraces, KummerError, KummerInvariants, TraceRecord,
};
pub use poly::{IntPoly, MultiPoly};
pub use qseries::{EtaQuotient, QSeries, QSeriesError};
