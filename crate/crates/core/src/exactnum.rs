//! Exact integer and rational arithmetic for the counting formulas.
//!
//! Everything here is big-integer arithmetic. The closed forms are computed
//! as multiply-then-divide with an integrality check on the division, and the
//! truncated power-series routines give an independent route to the same
//! numbers that never touches a binomial coefficient.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

/// Arbitrary-precision fraction, always normalized with a positive denominator.
pub type ExactRational = BigRational;

/// `C(a, b)`, zero when `b` lies outside `0..=a`.
pub fn binomial(a: u64, b: i64) -> Natural {
    if b < 0 || b as u64 > a {
        return Natural::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = Natural::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// The `n`th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Natural {
    exact_div(binomial(2 * n, n as i64), &Natural::from(n + 1))
}

/// Number of Dyck paths of semilength `n` in a class with parameter sum `d`:
/// `(d + 1) / (n + 1) * C(2n - d, n)`, zero whenever `n < d`.
pub fn class_count(d: u64, n: u64) -> Natural {
    if n < d {
        return Natural::zero();
    }
    let numerator = binomial(2 * n - d, n as i64) * (d + 1);
    exact_div(numerator, &Natural::from(n + 1))
}

/// Coefficient of `x^m` in `C(x)^j`: `j / (2m + j) * C(2m + j, m)`.
///
/// Panics if `j == 0`.
pub fn catalan_power_coeff(j: u64, m: u64) -> Natural {
    assert!(j >= 1, "catalan_power_coeff needs a positive exponent");
    let numerator = binomial(2 * m + j, m as i64) * j;
    exact_div(numerator, &Natural::from(2 * m + j))
}

/// Divides `numerator` by `denominator`, panicking if the quotient is not an
/// integer. Every closed counting formula goes through here.
pub(crate) fn exact_div(numerator: Natural, denominator: &Natural) -> Natural {
    let (q, r) = numerator.div_rem(denominator);
    assert!(
        r.is_zero(),
        "non-integral counting formula: {numerator} / {denominator}"
    );
    q
}

/// Catalan numbers `C_0..=C_order` from the functional equation
/// `C(x) = 1 + x C(x)^2`, i.e. `C_{m+1} = sum_i C_i C_{m-i}`.
pub fn catalan_series(order: usize) -> Vec<Natural> {
    let mut coeffs: Vec<Natural> = Vec::with_capacity(order + 1);
    coeffs.push(Natural::one());
    for m in 0..order {
        let next = (0..=m).fold(Natural::zero(), |acc, i| acc + &coeffs[i] * &coeffs[m - i]);
        coeffs.push(next);
    }
    coeffs
}

/// Product of two power series truncated after `x^order`. Missing trailing
/// coefficients are treated as zero.
pub fn truncated_product(a: &[Natural], b: &[Natural], order: usize) -> Vec<Natural> {
    (0..=order)
        .map(|m| {
            (0..=m)
                .filter_map(|i| Some(a.get(i)? * b.get(m - i)?))
                .fold(Natural::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Coefficients `0..=order` of `C(x)^j`, by repeated truncated convolution of
/// the Catalan series. `j == 0` gives the constant series 1.
pub fn series_catalan_power(j: u32, order: usize) -> Vec<Natural> {
    let base = catalan_series(order);
    let mut acc = vec![Natural::zero(); order + 1];
    acc[0] = Natural::one();
    for _ in 0..j {
        acc = truncated_product(&acc, &base, order);
    }
    acc
}

/// Builds an exact fraction from two naturals. Panics on a zero denominator.
pub fn ratio(numerator: &Natural, denominator: &Natural) -> ExactRational {
    assert!(!denominator.is_zero(), "zero denominator");
    ExactRational::new(numerator.clone().into(), denominator.clone().into())
}

/// Decimal rendering of a nonnegative rational, rounded half-up to `digits`
/// places. Pure integer arithmetic.
pub fn to_decimal(value: &ExactRational, digits: usize) -> String {
    let negative = value.numer().sign() == num_bigint::Sign::Minus;
    let numer = value.numer().magnitude();
    let denom = value.denom().magnitude();
    let scale = num_traits::pow(Natural::from(10u32), digits);
    let scaled = numer * &scale * 2u32 + denom;
    let rounded = scaled / (denom * 2u32);
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if negative && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>digits$}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    /// Counts balanced nonnegative +-1 sequences of length 2n by trying every
    /// bit pattern.
    fn brute_force_dyck_count(n: u32) -> u64 {
        let len = 2 * n;
        (0u64..1 << len)
            .filter(|mask| {
                let mut h = 0i32;
                for i in 0..len {
                    h += if mask >> i & 1 == 1 { 1 } else { -1 };
                    if h < 0 {
                        return false;
                    }
                }
                h == 0
            })
            .count() as u64
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), nat(6));
        assert_eq!(binomial(0, 0), nat(1));
        assert_eq!(binomial(2, 3), nat(0));
        assert_eq!(binomial(5, -1), nat(0));
    }

    #[test]
    fn binomial_large_is_exact() {
        // C(120, 60), well past u64.
        let expected: Natural = "96614908840363322603893139521372656".parse().unwrap();
        let c = binomial(120, 60);
        assert_eq!(c, expected);
        assert_eq!(c, binomial(119, 59) + binomial(119, 60));
    }

    #[test]
    fn catalan_matches_brute_force() {
        assert_eq!(catalan(0), nat(1));
        assert_eq!(catalan(3), nat(5));
        assert_eq!(brute_force_dyck_count(3), 5);
        assert_eq!(brute_force_dyck_count(10), 16796);
        assert_eq!(catalan(10), nat(16796));
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(class_count(0, 3), catalan(3));
        assert_eq!(class_count(2, 2), nat(1));
        assert_eq!(class_count(5, 3), nat(0));
        assert_eq!(class_count(1, 0), nat(0));
        assert_eq!(class_count(0, 0), nat(1));
    }

    #[test]
    fn catalan_power_coeff_examples() {
        assert_eq!(catalan_power_coeff(1, 3), nat(5));
        assert_eq!(catalan_power_coeff(3, 0), nat(1));
        assert_eq!(catalan_power_coeff(5, 2), nat(20));
    }

    #[test]
    fn series_examples() {
        assert_eq!(
            series_catalan_power(1, 4),
            vec![nat(1), nat(1), nat(2), nat(5), nat(14)]
        );
        assert_eq!(series_catalan_power(2, 0), vec![nat(1)]);
        let s = series_catalan_power(6, 5);
        for (m, c) in s.iter().enumerate() {
            assert_eq!(*c, catalan_power_coeff(6, m as u64));
        }
        // [x^2] C^5 = 5*C_2 + C(5,2)*C_1^2 = 20.
        assert_eq!(series_catalan_power(5, 2)[2], nat(20));
    }

    #[test]
    fn class_count_matches_series() {
        for d in 0..=8u64 {
            let series = series_catalan_power(d as u32 + 1, 30);
            for n in d..=30 {
                assert_eq!(class_count(d, n), series[(n - d) as usize], "d={d} n={n}");
                assert_eq!(catalan_power_coeff(d + 1, n - d), class_count(d, n));
            }
        }
    }

    #[test]
    fn small_classes_are_catalan() {
        for n in 1..=30 {
            assert_eq!(class_count(0, n), catalan(n));
            assert_eq!(class_count(1, n), catalan(n));
        }
    }

    #[test]
    fn class_count_numerator_is_divisible() {
        for d in 0..=10u64 {
            for n in d..=40 {
                let num = binomial(2 * n - d, n as i64) * (d + 1);
                assert!((num % (n + 1)).is_zero());
            }
        }
    }

    #[test]
    fn catalan_functional_equation() {
        let order = 25;
        let c: Vec<Natural> = (0..=order as u64).map(catalan).collect();
        let sq = truncated_product(&c, &c, order);
        let mut rebuilt = vec![Natural::one()];
        rebuilt.extend(sq.into_iter().take(order));
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn decimal_rendering() {
        let half = ratio(&nat(1), &nat(2));
        assert_eq!(to_decimal(&half, 3), "0.500");
        let third = ratio(&nat(2), &nat(3));
        assert_eq!(to_decimal(&third, 4), "0.6667");
        assert_eq!(to_decimal(&ratio(&nat(7), &nat(1)), 0), "7");
    }
}
