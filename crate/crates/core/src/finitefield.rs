//! Odd prime fields and the Legendre symbol: the inner-loop primitives for
//! every point count in this crate.
//!
//! Elements are 64-bit residues with 128-bit intermediate products.  For a
//! p^2-sized counting loop the symbol is served from a precomputed residue
//! table; the table is built once per prime and shared read-only across
//! worker threads.

use thiserror::Error;

/// Largest p for which a Legendre table may be allocated (one byte per
/// residue).  Also the sweep guard: with p below 2^31 every intermediate
/// product and p^2-sized loop counter stays comfortably inside 64 bits.
pub const TABLE_GUARD: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime field needs p >= 3, got {0}")]
    TooSmall(u64),
    #[error("p = {p} exceeds the Legendre table guard {guard}")]
    TableGuard { p: u64, guard: u64 },
}

/// The field F_p for an odd prime p, with an optional quadratic-residue
/// table.  Immutable once built; safe to share across threads.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
    table: Option<Box<[i8]>>,
}

impl PrimeField {
    /// Construct F_p.  Primality is checked by a deterministic Miller-Rabin
    /// base set valid for all 64-bit inputs.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < 3 {
            return Err(FieldError::TooSmall(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p, table: None })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// Attach the quadratic-residue table: `table[a^2 mod p] = 1` seeded by
    /// one pass over a = 1..p-1, remaining nonzero entries -1, entry 0 is 0.
    pub fn build_legendre_table(self) -> Result<Self, FieldError> {
        self.build_legendre_table_with_guard(TABLE_GUARD)
    }

    pub fn build_legendre_table_with_guard(mut self, guard: u64) -> Result<Self, FieldError> {
        if self.p >= guard {
            return Err(FieldError::TableGuard { p: self.p, guard });
        }
        let p = self.p;
        let mut table = vec![-1i8; p as usize];
        table[0] = 0;
        for a in 1..p {
            table[(a * a % p) as usize] = 1;
        }
        self.table = Some(table.into_boxed_slice());
        Ok(self)
    }

    #[inline]
    pub fn reduce_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Legendre symbol of an already-reduced residue: 0 if p | a, +1 for a
    /// nonzero square, -1 otherwise.  Table lookup when the table exists,
    /// Euler's criterion `a^((p-1)/2)` otherwise.
    #[inline]
    pub fn legendre_residue(&self, a: u64) -> i32 {
        debug_assert!(a < self.p);
        if let Some(table) = &self.table {
            return table[a as usize] as i32;
        }
        if a == 0 {
            return 0;
        }
        let e = self.pow(a, (self.p - 1) / 2);
        if e == 1 {
            1
        } else {
            -1
        }
    }

    /// Legendre symbol of an arbitrary integer, reduced mod p first.
    #[inline]
    pub fn legendre(&self, a: i64) -> i32 {
        self.legendre_residue(self.reduce_i64(a))
    }

    /// Horner evaluation of an integer polynomial (ascending coefficients),
    /// fully reduced.
    pub fn eval_poly(&self, coeffs: &[i64], x: u64) -> u64 {
        let mut acc = 0u64;
        for c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), self.reduce_i64(*c));
        }
        acc
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    // this base set is known to decide primality for every n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Primes in `[lo, hi]`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime_u64(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_guards() {
        assert!(matches!(PrimeField::new(2), Err(FieldError::TooSmall(2))));
        assert!(matches!(PrimeField::new(9), Err(FieldError::NotPrime(9))));
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(2_147_483_647).is_ok()); // 2^31 - 1
        let f = PrimeField::new(11).unwrap();
        assert!(matches!(
            f.build_legendre_table_with_guard(11),
            Err(FieldError::TableGuard { p: 11, guard: 11 })
        ));
    }

    #[test]
    fn legendre_small_values() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.legendre(0), 0);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.legendre(4), 1);
        assert_eq!(f7.legendre(3), -1); // squares mod 7 are {1,2,4}
    }

    #[test]
    fn table_contents() {
        let f5 = PrimeField::new(5).unwrap().build_legendre_table().unwrap();
        let t: Vec<i32> = (0..5).map(|a| f5.legendre_residue(a)).collect();
        assert_eq!(t, vec![0, 1, -1, -1, 1]);
        let f3 = PrimeField::new(3).unwrap().build_legendre_table().unwrap();
        let t: Vec<i32> = (0..3).map(|a| f3.legendre_residue(a)).collect();
        assert_eq!(t, vec![0, 1, -1]);
        let f7 = PrimeField::new(7).unwrap().build_legendre_table().unwrap();
        let plus = (0..7).filter(|&a| f7.legendre_residue(a) == 1).count();
        assert_eq!(plus, 3);
    }

    #[test]
    fn table_agrees_with_euler_criterion() {
        for p in primes_in_range(3, 100) {
            let bare = PrimeField::new(p).unwrap();
            let tabled = bare.clone().build_legendre_table().unwrap();
            for a in 0..p {
                assert_eq!(
                    bare.legendre_residue(a),
                    tabled.legendre_residue(a),
                    "p={p} a={a}"
                );
            }
        }
    }

    #[test]
    fn multiplicativity_and_zero_sum() {
        for p in primes_in_range(3, 100) {
            let f = PrimeField::new(p).unwrap().build_legendre_table().unwrap();
            let mut sum = 0i64;
            for a in 0..p {
                sum += f.legendre_residue(a) as i64;
                for b in 0..p {
                    assert_eq!(
                        f.legendre_residue(f.mul(a, b)),
                        f.legendre_residue(a) * f.legendre_residue(b),
                        "p={p} a={a} b={b}"
                    );
                }
            }
            assert_eq!(sum, 0, "p={p}");
        }
    }

    #[test]
    fn poly_eval() {
        let f5 = PrimeField::new(5).unwrap();
        let cubic_minus_x = [0i64, -1, 0, 1];
        assert_eq!(f5.eval_poly(&cubic_minus_x, 2), 1);
        assert_eq!(f5.eval_poly(&cubic_minus_x, 0), 0);
        // x^3 + x^2 at x = 3 mod 5
        assert_eq!(f5.eval_poly(&[0, 0, 1, 1], 3), 1);
    }

    #[test]
    fn miller_rabin_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
        let small: Vec<u64> = primes_in_range(2, 50);
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    }
}
