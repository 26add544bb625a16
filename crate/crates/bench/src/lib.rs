//! Shared fixtures for the counting and q-series benchmarks.

use kummer7_core::curves::EllipticCurve;
use kummer7_core::finitefield::PrimeField;

pub fn test_curve() -> EllipticCurve {
    EllipticCurve::parse("0,1,-1").expect("valid curve")
}

pub fn tabled_field(p: u64) -> PrimeField {
    PrimeField::new(p)
        .expect("prime")
        .build_legendre_table()
        .expect("below guard")
}
