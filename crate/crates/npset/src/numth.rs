//! Elementary integer number theory shared by the other modules:
//! multiplicative orders, factorization, divisor lists and the
//! relative-size measure log(n)/log(p^k - 1).

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Default trial-division bound before switching to Brent's rho.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Default seed for the randomized part of `factorize`. Recorded in CLI
/// output so reports are bit-reproducible.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_5eed_5eed_5eed;

/// A positive integer together with its complete prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInt {
    pub value: u64,
    /// prime -> exponent, ascending by prime.
    pub factors: BTreeMap<u64, u32>,
}

impl FactoredInt {
    /// Renders the factorization as e.g. `2^3*5*17`.
    pub fn to_product_string(&self) -> String {
        if self.factors.is_empty() {
            return self.value.to_string();
        }
        self.factors
            .iter()
            .map(|(&p, &e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// The relative size of n with respect to p: log(n)/log(p^k - 1) where
/// k is the multiplicative order of p modulo n. Numbers p^k - 1 have
/// relative size exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RelativeSize {
    pub p: u64,
    pub n: u128,
    /// Multiplicative order of p modulo n.
    pub k: u64,
    pub value: f64,
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
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

/// Deterministic Miller-Rabin for u64 (the standard 12-witness set).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

/// Least positive k with p^k = 1 (mod n). By convention the order
/// modulo 1 is 1 (the empty congruence).
///
/// Computed by iterated multiplication mod n rather than by factoring
/// the group order: k never exceeds n and this avoids hard
/// factorizations entirely.
pub fn mult_order(p: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("mult_order: n must be >= 1".into()));
    }
    if gcd_u64(p % n.max(1), n) != 1 && n != 1 {
        return Err(Error::NotCoprime { p, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let base = p % n;
    let mut acc = base;
    let mut k = 1u64;
    while acc != 1 {
        acc = mul_mod(acc, base, n);
        k += 1;
        debug_assert!(k <= n, "order exceeded modulus");
    }
    Ok(k)
}

fn mul_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    // Schoolbook split through 64-bit halves; m < 2^127 so the partial
    // shifts stay reducible.
    if let (Ok(a64), Ok(b64), Ok(m64)) = (
        u64::try_from(a),
        u64::try_from(b),
        u64::try_from(m),
    ) {
        return mul_mod(a64, b64, m64) as u128;
    }
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b % m;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

/// `mult_order` for moduli beyond u64 (needed for p^k - 1 up to 13^20).
pub fn mult_order_u128(p: u64, n: u128) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("mult_order: n must be >= 1".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    let pu = p as u128 % n;
    if gcd_u128(pu, n) != 1 {
        return Err(Error::NotCoprime {
            p,
            n: u64::try_from(n).unwrap_or(u64::MAX),
        });
    }
    let mut acc = pu;
    let mut k = 1u64;
    while acc != 1 {
        acc = mul_mod_u128(acc, pu, n);
        k += 1;
    }
    Ok(k)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Effort knobs for `factorize`. The defaults comfortably cover q - 1
/// for every q the oracles accept.
#[derive(Debug, Clone, Copy)]
pub struct FactorConfig {
    pub trial_bound: u64,
    /// Iteration budget per rho attempt.
    pub rho_iterations: u64,
    /// Number of rho attempts (with distinct increments) before giving up.
    pub rho_attempts: u32,
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: TRIAL_DIVISION_BOUND,
            rho_iterations: 1 << 22,
            rho_attempts: 64,
            seed: DEFAULT_FACTOR_SEED,
        }
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of n
/// (n must be composite, odd, and > 1).
fn rho_brent(n: u64, cfg: &FactorConfig) -> Result<u64> {
    let step = |v: u64, c: u64| ((v as u128 * v as u128 + c as u128) % n as u128) as u64;
    let mut state = cfg.seed ^ n;
    for _ in 0..cfg.rho_attempts {
        let c = splitmix64(&mut state) % (n - 2) + 1;
        let mut y = splitmix64(&mut state) % n;
        let mut q = 1u64;
        let (mut x, mut ys) = (y, y);
        let mut g = 1u64;
        let mut r = 1u64;
        let mut iters = 0u64;
        'outer: while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y, c);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let lim = 128.min(r - k);
                for _ in 0..lim {
                    y = step(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += lim;
                iters += lim;
                if iters > cfg.rho_iterations {
                    break 'outer;
                }
            }
            r *= 2;
        }
        if g == n {
            // Backtrack one step at a time.
            g = 1;
            while g == 1 {
                ys = step(ys, c);
                g = gcd_u64(x.abs_diff(ys), n);
            }
        }
        if g != n && g != 1 {
            return Ok(g);
        }
    }
    Err(Error::FactorEffort(n))
}

/// Complete prime factorization of m >= 2: trial division up to the
/// configured bound, then Brent rho with a fixed seed for
/// reproducibility.
pub fn factorize_with(m: u64, cfg: &FactorConfig) -> Result<FactoredInt> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "factorize: {m} < 2 has no prime factorization"
        )));
    }
    let mut factors: BTreeMap<u64, u32> = BTreeMap::new();
    let mut rest = m;
    let mut d = 2u64;
    while d <= cfg.trial_bound && (d as u128) * (d as u128) <= rest as u128 {
        while rest % d == 0 {
            *factors.entry(d).or_insert(0) += 1;
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![rest];
    while let Some(c) = stack.pop() {
        if c == 1 {
            continue;
        }
        if is_prime(c) {
            *factors.entry(c).or_insert(0) += 1;
            continue;
        }
        let f = rho_brent(c, cfg)?;
        stack.push(f);
        stack.push(c / f);
    }
    Ok(FactoredInt { value: m, factors })
}

pub fn factorize(m: u64) -> Result<FactoredInt> {
    factorize_with(m, &FactorConfig::default())
}

/// All divisors of m in ascending order, including 1 and m.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::InvalidArgument("divisors: m must be >= 1".into()));
    }
    if m == 1 {
        return Ok(vec![1]);
    }
    let f = factorize(m)?;
    let mut divs = vec![1u64];
    for (&p, &e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut pe = 1u64;
            for _ in 0..=e {
                next.push(d * pe);
                if pe <= u64::MAX / p {
                    pe *= p;
                } else {
                    break;
                }
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs)
}

/// The relative size log(n)/log(p^k - 1), k = ord_n(p), with the
/// denominator evaluated as k*log(p) + log1p(-p^{-k}) so p^k is never
/// constructed. For n = p^k - 1 the result is exactly 1.
pub fn relative_size(p: u64, n: u128) -> Result<RelativeSize> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "relative_size: n must be >= 2".into(),
        ));
    }
    let k = mult_order_u128(p, n)?;
    // n divides p^k - 1; when it equals p^k - 1 the ratio is 1 by
    // definition, short-circuited to avoid rounding residue.
    if is_pow_minus_one(p, k, n) {
        return Ok(RelativeSize {
            p,
            n,
            k,
            value: 1.0,
        });
    }
    let ln_p = (p as f64).ln();
    let kf = k as f64;
    // log(p^k - 1) = k log p + log(1 - p^-k); the correction underflows
    // harmlessly to 0 for large k.
    let correction = (-(-kf * ln_p).exp()).ln_1p();
    let denom = kf * ln_p + correction;
    let value = (n as f64).ln() / denom;
    Ok(RelativeSize { p, n, k, value })
}

fn is_pow_minus_one(p: u64, k: u64, n: u128) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = match acc.checked_mul(p as u128) {
            Some(v) => v,
            None => return false,
        };
        if acc - 1 > n {
            return false;
        }
    }
    acc - 1 == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mult_order_small() {
        assert_eq!(mult_order(3, 13).unwrap(), 3);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(2, 1).unwrap(), 1);
        assert_eq!(mult_order(5, 1).unwrap(), 1);
    }

    #[test]
    fn mult_order_table_entry() {
        // 121369 = (2^39 - 1)/4529623
        assert_eq!(mult_order(2, 121369).unwrap(), 39);
    }

    #[test]
    fn mult_order_rejects_bad_input() {
        assert!(matches!(mult_order(2, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(mult_order(2, 6), Err(Error::NotCoprime { .. })));
        assert!(matches!(mult_order(3, 9), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn mult_order_is_least_exponent() {
        // Exhaustive check of the defining property for small moduli.
        for n in 2u64..=2000 {
            for p in [2u64, 3, 5, 7] {
                if gcd_u64(p % n, n) != 1 {
                    continue;
                }
                let k = mult_order(p, n).unwrap();
                assert_eq!(pow_mod(p, k, n), 1 % n, "p={p} n={n}");
                let mut acc = p % n;
                for j in 1..k {
                    assert_ne!(acc, 1, "p^{j} = 1 before the order, p={p} n={n}");
                    acc = mul_mod(acc, p, n);
                }
            }
        }
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(12).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(2, 2), (3, 1)]));
        let f = factorize(8191).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(8191, 1)]));
        let f = factorize(65535).unwrap();
        assert_eq!(
            f.factors,
            BTreeMap::from([(3, 1), (5, 1), (17, 1), (257, 1)])
        );
        assert!(factorize(1).is_err());
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_product_roundtrip() {
        for m in 2u64..5000 {
            let f = factorize(m).unwrap();
            let prod: u64 = f
                .factors
                .iter()
                .map(|(&p, &e)| p.pow(e))
                .product();
            assert_eq!(prod, m);
            for &p in f.factors.keys() {
                assert!(is_prime(p), "{p} listed as prime factor of {m}");
            }
        }
    }

    #[test]
    fn factorize_large_semiprime() {
        // 2^59 - 1 = 179951 * 3203431780337
        let f = factorize((1u64 << 59) - 1).unwrap();
        assert_eq!(
            f.factors,
            BTreeMap::from([(179951, 1), (3203431780337, 1)])
        );
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(511).unwrap(), vec![1, 7, 73, 511]);
    }

    #[test]
    fn divisors_match_trial_division() {
        for m in 1u64..=3000 {
            let by_trial: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
            assert_eq!(divisors(m).unwrap(), by_trial, "m={m}");
        }
    }

    #[test]
    fn relative_size_examples() {
        // n = 2^5 - 1: exactly 1.
        assert_eq!(relative_size(2, 31).unwrap().value, 1.0);
        // Smallest relative size in the minimal table below 200000.
        let rs = relative_size(2, 121369).unwrap();
        assert_eq!(rs.k, 39);
        assert!((rs.value - 0.433052).abs() < 1e-6, "got {}", rs.value);
        // Direct evaluation: log 85 / log 255.
        let rs = relative_size(2, 85).unwrap();
        assert!((rs.value - 0.80174).abs() < 1e-4, "got {}", rs.value);
    }

    #[test]
    fn relative_size_of_pk_minus_one_is_exactly_one() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for k in 2u64..=20 {
                let n = (p as u128).pow(k as u32) - 1;
                let rs = relative_size(p, n).unwrap();
                assert_eq!(rs.k, k, "p={p} k={k}");
                assert_eq!(rs.value, 1.0, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn relative_size_rejects_bad_input() {
        assert!(relative_size(2, 1).is_err());
        assert!(relative_size(2, 6).is_err());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime(1));
        assert!(!is_prime((1u64 << 59) - 1));
    }
}
