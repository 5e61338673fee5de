//! Exact integer arithmetic shared by every other module: elementary
//! number theory plus dense polynomial arithmetic in one variable,
//! optionally refined by a residue class modulo a fixed integer.
//!
//! `IntPolynomial` stores coefficients in ascending degree; the last
//! stored coefficient is nonzero and the empty vector is the zero
//! polynomial. All arithmetic is checked: overflow and inexact
//! division are reported as errors, never wrapped or rounded.

use thiserror::Error;

/// Errors produced by the arithmetic in this module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// A coefficient exceeded the 64-bit range during an operation.
    #[error("integer overflow while combining coefficients at degree {degree}")]
    Overflow { degree: usize },
    /// Polynomial division left a nonzero remainder.
    #[error("division is not exact: remainder has leading degree {degree}")]
    NonExactDivision { degree: usize },
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// Two bigraded polynomials with different moduli were combined.
    #[error("bigraded modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    /// A series that must count dimensions came out negative.
    #[error("series has negative coefficient {value} at degree {degree}")]
    NegativeCoefficient { degree: usize, value: i64 },
}

// ---- Elementary number theory ----

/// Greatest common divisor, with `gcd(0, n) = gcd(n, 0) = n`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Greatest common divisor of a slice; 0 for the empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// All divisors of `n` in ascending order.
///
/// # Panics
/// Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of 0 are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient function.
///
/// # Panics
/// Panics if `n == 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi of 0 is not defined");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            result -= result / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

// ---- Single-graded polynomials ----

/// A polynomial with exact 64-bit integer coefficients, stored densely
/// in ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// The single term `coeff * t^degree`.
    pub fn monomial(coeff: i64, degree: usize) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, dropping
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        Self { coeffs }.normalized()
    }

    /// The binomial `1 - t^k` for `k >= 1`.
    pub fn one_minus_power(k: usize) -> Self {
        assert!(k >= 1, "1 - t^0 would be the zero polynomial");
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = 1;
        coeffs[k] = -1;
        Self { coeffs }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `t^degree` (0 beyond the stored range).
    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    /// Ascending coefficient slice without trailing zeros.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The polynomial with all terms of degree above `cap` removed.
    pub fn truncated(&self, cap: usize) -> Self {
        let take = self.coeffs.len().min(cap + 1);
        Self::from_coeffs(self.coeffs[..take].to_vec())
    }

    /// Product truncated at degree `cap`, with checked coefficient
    /// arithmetic.
    pub fn mul(&self, rhs: &Self, cap: usize) -> Result<Self, ArithError> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let out_len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(cap + 1);
        let mut out = vec![0i64; out_len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 || i >= out_len {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let deg = i + j;
                if deg >= out_len {
                    break;
                }
                if b == 0 {
                    continue;
                }
                let term = a
                    .checked_mul(b)
                    .ok_or(ArithError::Overflow { degree: deg })?;
                out[deg] = out[deg]
                    .checked_add(term)
                    .ok_or(ArithError::Overflow { degree: deg })?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// Exact quotient `self / rhs`, truncated at degree `cap`.
    ///
    /// Long division from the top degree down; every step must divide
    /// the current leading coefficient exactly and the final remainder
    /// must vanish, otherwise `NonExactDivision` is returned.
    pub fn div_exact(&self, rhs: &Self, cap: usize) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dd = rhs.coeffs.len() - 1;
        let lead = rhs.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut rem_deg = rem.len() - 1;
        if rem_deg < dd {
            return Err(ArithError::NonExactDivision { degree: rem_deg });
        }
        let mut quot = vec![0i64; rem_deg - dd + 1];
        loop {
            while rem[rem_deg] == 0 {
                if rem_deg == 0 {
                    return Ok(Self::from_coeffs(quot).truncated(cap));
                }
                rem_deg -= 1;
            }
            if rem_deg < dd {
                return Err(ArithError::NonExactDivision { degree: rem_deg });
            }
            if rem[rem_deg] % lead != 0 {
                return Err(ArithError::NonExactDivision { degree: rem_deg });
            }
            let q = rem[rem_deg] / lead;
            let shift = rem_deg - dd;
            quot[shift] = q;
            for (k, &c) in rhs.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let deg = shift + k;
                let term = q
                    .checked_mul(c)
                    .ok_or(ArithError::Overflow { degree: deg })?;
                rem[deg] = rem[deg]
                    .checked_sub(term)
                    .ok_or(ArithError::Overflow { degree: deg })?;
            }
            debug_assert_eq!(rem[rem_deg], 0);
        }
    }

    /// Verifies that every coefficient is nonnegative, as a dimension
    /// series must be.
    pub fn check_nonnegative(&self) -> Result<(), ArithError> {
        for (degree, &value) in self.coeffs.iter().enumerate() {
            if value < 0 {
                return Err(ArithError::NegativeCoefficient { degree, value });
            }
        }
        Ok(())
    }
}

// ---- Bigraded polynomials ----

/// A polynomial graded by degree and by a residue class modulo a fixed
/// `modulus`, stored densely up to an explicit degree `cap`.
///
/// Multiplication adds degrees and adds residues modulo the modulus;
/// summing out the residue index recovers an `IntPolynomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedPolynomial {
    modulus: usize,
    cap: usize,
    coeffs: Vec<i64>,
}

impl BigradedPolynomial {
    /// The zero polynomial for the given modulus and degree cap.
    ///
    /// # Panics
    /// Panics if `modulus < 2`.
    pub fn zero(modulus: usize, cap: usize) -> Self {
        assert!(modulus >= 2, "bigraded modulus must be at least 2");
        Self {
            modulus,
            cap,
            coeffs: vec![0; (cap + 1) * modulus],
        }
    }

    /// The constant 1 at degree 0, residue 0.
    pub fn one(modulus: usize, cap: usize) -> Self {
        let mut p = Self::zero(modulus, cap);
        p.add_term(0, 0, 1).expect("constant term fits");
        p
    }

    /// Places an ordinary polynomial at a single fixed residue.
    pub fn from_poly_at_residue(
        poly: &IntPolynomial,
        residue: usize,
        modulus: usize,
        cap: usize,
    ) -> Self {
        let mut out = Self::zero(modulus, cap);
        for (degree, &c) in poly.coeffs().iter().enumerate() {
            if degree > cap {
                break;
            }
            if c != 0 {
                out.add_term(degree, residue, c).expect("fresh terms fit");
            }
        }
        out
    }

    /// The modulus of the residue grading.
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The degree cap.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coefficient at the given degree and residue (0 outside range).
    pub fn coeff(&self, degree: usize, residue: usize) -> i64 {
        if degree > self.cap {
            return 0;
        }
        self.coeffs[degree * self.modulus + residue % self.modulus]
    }

    /// Adds `value` to the coefficient at `(degree, residue)`.
    /// Terms above the cap are discarded.
    pub fn add_term(
        &mut self,
        degree: usize,
        residue: usize,
        value: i64,
    ) -> Result<(), ArithError> {
        if degree > self.cap {
            return Ok(());
        }
        let idx = degree * self.modulus + residue % self.modulus;
        self.coeffs[idx] = self.coeffs[idx]
            .checked_add(value)
            .ok_or(ArithError::Overflow { degree })?;
        Ok(())
    }

    /// Product with degree truncation at `cap` and residue addition
    /// modulo the common modulus.
    pub fn mul(&self, rhs: &Self, cap: usize) -> Result<Self, ArithError> {
        if self.modulus != rhs.modulus {
            return Err(ArithError::ModulusMismatch {
                left: self.modulus,
                right: rhs.modulus,
            });
        }
        let m = self.modulus;
        let mut out = Self::zero(m, cap);
        for (li, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (ldeg, lres) = (li / m, li % m);
            if ldeg > cap {
                break;
            }
            for (ri, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let (rdeg, rres) = (ri / m, ri % m);
                let degree = ldeg + rdeg;
                if degree > cap {
                    break;
                }
                let term = a.checked_mul(b).ok_or(ArithError::Overflow { degree })?;
                out.add_term(degree, lres + rres, term)?;
            }
        }
        Ok(out)
    }

    /// Sums out the residue index, yielding the underlying
    /// single-graded polynomial.
    pub fn collapse(&self) -> IntPolynomial {
        let mut out = vec![0i64; self.cap + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i / self.modulus] += c;
        }
        IntPolynomial::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_basic_cases() {
        assert_eq!(gcd(2, 7), 1);
        assert_eq!(gcd(104, 312), 104);
        assert_eq!(gcd(36, 36), 36);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd_all(&[12, 18, 30]), 6);
        assert_eq!(gcd_all(&[]), 0);
    }

    #[test]
    fn divisors_are_ascending_and_complete() {
        assert_eq!(divisors(14), vec![1, 2, 7, 14]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(48), vec![1, 2, 3, 4, 6, 8, 12, 16, 24, 48]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn euler_phi_known_values() {
        assert_eq!(euler_phi(48), 16);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(14), 6);
        assert_eq!(euler_phi(2), 1);
    }

    #[test]
    fn euler_phi_matches_coprime_count_up_to_2000() {
        for n in 1..=2000u64 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), brute, "phi({n})");
        }
    }

    #[test]
    fn totient_sums_over_divisors_up_to_2000() {
        for n in 1..=2000u64 {
            let sum: u64 = divisors(n).into_iter().map(euler_phi).sum();
            assert_eq!(sum, n, "sum of phi(d) over d | {n}");
        }
    }

    #[test]
    fn poly_mul_small_products() {
        let p = IntPolynomial::from_coeffs(vec![1, 1]);
        let sq = p.mul(&p, 2).unwrap();
        assert_eq!(sq.coeffs(), &[1, 2, 1]);

        let q = IntPolynomial::from_coeffs(vec![1, 1, 1]);
        let truncated = q.mul(&p, 1).unwrap();
        assert_eq!(truncated.coeffs(), &[1, 2]);

        let one = IntPolynomial::one();
        assert_eq!(q.mul(&one, 10).unwrap(), q);
        assert!(q.mul(&IntPolynomial::zero(), 10).unwrap().is_zero());
    }

    #[test]
    fn poly_div_exact_geometric_quotients() {
        let n = IntPolynomial::one_minus_power(4);
        let d = IntPolynomial::one_minus_power(2);
        assert_eq!(n.div_exact(&d, 4).unwrap().coeffs(), &[1, 0, 1]);

        let n = IntPolynomial::one_minus_power(13);
        let d = IntPolynomial::one_minus_power(1);
        let q = n.div_exact(&d, 12).unwrap();
        assert_eq!(q.coeffs(), &[1; 13]);

        let p = IntPolynomial::from_coeffs(vec![3, 0, -2, 5]);
        assert_eq!(p.div_exact(&IntPolynomial::one(), 10).unwrap(), p);
    }

    #[test]
    fn poly_div_exact_rejects_inexact_division() {
        let n = IntPolynomial::one_minus_power(3);
        let d = IntPolynomial::one_minus_power(2);
        assert!(matches!(
            n.div_exact(&d, 3),
            Err(ArithError::NonExactDivision { .. })
        ));
        assert_eq!(
            IntPolynomial::one().div_exact(&IntPolynomial::zero(), 1),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn nonnegativity_check_reports_degree() {
        let p = IntPolynomial::from_coeffs(vec![1, 2, -3]);
        assert_eq!(
            p.check_nonnegative(),
            Err(ArithError::NegativeCoefficient {
                degree: 2,
                value: -3
            })
        );
        assert!(IntPolynomial::one().check_nonnegative().is_ok());
    }

    #[test]
    fn bigraded_identity_and_residue_shift() {
        let m = 4;
        let one = BigradedPolynomial::one(m, 8);
        let mut u = BigradedPolynomial::zero(m, 8);
        u.add_term(3, 1, 1).unwrap();
        assert_eq!(u.mul(&one, 8).unwrap(), u);
        let sq = u.mul(&u, 8).unwrap();
        assert_eq!(sq.coeff(6, 2), 1);
        assert_eq!(sq.collapse().coeff(6), 1);
    }

    #[test]
    fn bigraded_modulus_mismatch_is_an_error() {
        let a = BigradedPolynomial::one(3, 2);
        let b = BigradedPolynomial::one(4, 2);
        assert_eq!(
            a.mul(&b, 2),
            Err(ArithError::ModulusMismatch { left: 3, right: 4 })
        );
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-6i64..=6, 0..8).prop_map(IntPolynomial::from_coeffs)
    }

    fn arb_bigraded(modulus: usize) -> impl Strategy<Value = BigradedPolynomial> {
        prop::collection::vec((0usize..10, 0usize..modulus, -5i64..=5), 0..12).prop_map(
            move |terms| {
                let mut p = BigradedPolynomial::zero(modulus, 12);
                for (deg, res, val) in terms {
                    p.add_term(deg, res, val).unwrap();
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn collapse_commutes_with_multiplication(
            a in arb_bigraded(5),
            b in arb_bigraded(5),
        ) {
            let prod = a.mul(&b, 24).unwrap();
            let collapsed = a.collapse().mul(&b.collapse(), 24).unwrap();
            prop_assert_eq!(prod.collapse(), collapsed);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let cap = 32;
            let prod = a.mul(&b, cap).unwrap();
            let back = prod.div_exact(&b, cap).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.mul(&b, 20).unwrap(), b.mul(&a, 20).unwrap());
        }
    }
}
