//! Dense univariate polynomials over the integers mod p.
//!
//! Carries the gcd-based common-root-locus computation that decides
//! membership of n in N_p: the roots of
//! G = gcd over lambda in F_p of ((x+lambda)^n - 1)
//! are exactly the witnesses xi with (xi+lambda)^n = 1 for all lambda.
//!
//! Coefficients are bit-packed into u64 words for p = 2 (the heavy
//! table sweeps run gcds at degree up to 2*10^5 over F_2) and stored
//! one residue per u64 for odd p, where long division accumulates
//! unreduced sums as long as they provably fit 63 bits.

use crate::error::{Error, Result};
use crate::numth::{gcd_u64, is_prime, mul_mod, pow_mod};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// p = 2: bit i of word j is the coefficient of x^(64j+i).
    F2(Vec<u64>),
    /// p odd: one canonical residue per slot, index = degree.
    Fp(Vec<u64>),
}

/// A polynomial over F_p, trimmed so the leading coefficient is
/// nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GFpPoly {
    p: u64,
    repr: Repr,
}

// ---------- bit-packed helpers (p = 2) ----------

fn f2_words(nbits: usize) -> usize {
    nbits.div_ceil(64)
}

fn f2_degree(w: &[u64]) -> Option<usize> {
    for (i, &word) in w.iter().enumerate().rev() {
        if word != 0 {
            return Some(64 * i + 63 - word.leading_zeros() as usize);
        }
    }
    None
}

fn f2_trim(w: &mut Vec<u64>) {
    while let Some(&0) = w.last() {
        w.pop();
    }
}

fn f2_get(w: &[u64], i: usize) -> u64 {
    if i / 64 >= w.len() {
        0
    } else {
        (w[i / 64] >> (i % 64)) & 1
    }
}

/// dst ^= src << shift. dst must already be large enough.
fn f2_xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    if bs == 0 {
        for (j, &s) in src.iter().enumerate() {
            dst[j + ws] ^= s;
        }
    } else {
        for (j, &s) in src.iter().enumerate() {
            dst[j + ws] ^= s << bs;
            dst[j + ws + 1] ^= s >> (64 - bs);
        }
    }
}

/// In-place dst ^= dst << shift, processing words top-down so sources
/// are read before they are overwritten.
fn f2_self_xor_shifted(dst: &mut [u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    for i in (0..dst.len()).rev() {
        let mut v = 0u64;
        if bs == 0 {
            if i >= ws {
                v = dst[i - ws];
            }
        } else {
            if i >= ws {
                v = dst[i - ws] << bs;
            }
            if i >= ws + 1 {
                v |= dst[i - ws - 1] >> (64 - bs);
            }
        }
        dst[i] ^= v;
    }
}

fn f2_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (da, db) = match (f2_degree(a), f2_degree(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return Vec::new(),
    };
    let mut out = vec![0u64; f2_words(da + db + 2)];
    for (wi, &word) in a.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let bit = bits.trailing_zeros() as usize;
            f2_xor_shifted(&mut out, b, 64 * wi + bit);
            bits &= bits - 1;
        }
    }
    f2_trim(&mut out);
    out
}

/// r mod b, in place. b must be nonzero.
fn f2_rem(r: &mut Vec<u64>, b: &[u64]) {
    let db = f2_degree(b).expect("division by zero polynomial");
    let mut dr = match f2_degree(r) {
        Some(d) => d,
        None => return,
    };
    while dr >= db {
        f2_xor_shifted(r, b, dr - db);
        // Leading bit cancelled; rescan downward from just below it.
        let mut top = dr.min(r.len() * 64 - 1);
        loop {
            if f2_get(r, top) == 1 {
                break;
            }
            if top == 0 {
                f2_trim(r);
                return;
            }
            top -= 1;
        }
        dr = top;
        if dr < db {
            break;
        }
    }
    f2_trim(r);
}

// ---------- dense helpers (odd p) ----------

fn fp_trim(v: &mut Vec<u64>) {
    while let Some(&0) = v.last() {
        v.pop();
    }
}

/// True when long division over slots of this length can defer all
/// reductions: every slot takes at most len+1 additions of (p-1)^2.
fn fp_lazy_ok(p: u64, len: usize) -> bool {
    let sq = (p - 1) as u128 * (p - 1) as u128;
    sq.checked_mul(len as u128 + 2)
        .map(|v| v < 1u128 << 63)
        .unwrap_or(false)
}

/// r mod b in place. b need not be monic; inv_lead is the inverse of
/// its leading coefficient.
fn fp_rem(r: &mut Vec<u64>, b: &[u64], inv_lead: u64, p: u64) {
    let db = b.len() - 1;
    if r.len() <= db {
        return;
    }
    let lazy = fp_lazy_ok(p, b.len());
    for top in (db..r.len()).rev() {
        let c = mul_mod(r[top] % p, inv_lead, p);
        if c == 0 {
            continue;
        }
        if lazy {
            for j in 0..db {
                r[top - db + j] += c * (p - b[j]);
            }
        } else {
            for j in 0..db {
                let t = r[top - db + j] as u128 + c as u128 * (p - b[j]) as u128;
                r[top - db + j] = (t % p as u128) as u64;
            }
        }
    }
    r.truncate(db);
    for v in r.iter_mut() {
        *v %= p;
    }
    fp_trim(r);
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    if fp_lazy_ok(p, a.len().min(b.len())) {
        for (i, &av) in a.iter().enumerate() {
            if av == 0 {
                continue;
            }
            for (j, &bv) in b.iter().enumerate() {
                out[i + j] += av * bv;
            }
            // Keep slots within the 63-bit budget on long inputs.
            if i % 4096 == 4095 {
                for v in out.iter_mut() {
                    *v %= p;
                }
            }
        }
        for v in out.iter_mut() {
            *v %= p;
        }
    } else {
        for (i, &av) in a.iter().enumerate() {
            if av == 0 {
                continue;
            }
            for (j, &bv) in b.iter().enumerate() {
                let t = out[i + j] as u128 + av as u128 * bv as u128;
                out[i + j] = (t % p as u128) as u64;
            }
        }
    }
    fp_trim(&mut out);
    out
}

impl GFpPoly {
    fn from_f2(mut words: Vec<u64>) -> Self {
        f2_trim(&mut words);
        GFpPoly {
            p: 2,
            repr: Repr::F2(words),
        }
    }

    fn from_fp(p: u64, mut coeffs: Vec<u64>) -> Self {
        fp_trim(&mut coeffs);
        GFpPoly {
            p,
            repr: Repr::Fp(coeffs),
        }
    }

    fn check_prime(p: u64) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(())
    }

    /// Builds a polynomial from coefficients (index = degree); values
    /// are reduced mod p.
    pub fn new(p: u64, coeffs: &[u64]) -> Result<Self> {
        Self::check_prime(p)?;
        if p == 2 {
            let mut words = vec![0u64; f2_words(coeffs.len().max(1))];
            for (i, &c) in coeffs.iter().enumerate() {
                if c % 2 == 1 {
                    words[i / 64] |= 1 << (i % 64);
                }
            }
            Ok(Self::from_f2(words))
        } else {
            Ok(Self::from_fp(p, coeffs.iter().map(|&c| c % p).collect()))
        }
    }

    pub fn zero(p: u64) -> Self {
        if p == 2 {
            GFpPoly {
                p,
                repr: Repr::F2(Vec::new()),
            }
        } else {
            GFpPoly {
                p,
                repr: Repr::Fp(Vec::new()),
            }
        }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        let c = c % p;
        if c == 0 {
            return Self::zero(p);
        }
        if p == 2 {
            GFpPoly {
                p,
                repr: Repr::F2(vec![1]),
            }
        } else {
            GFpPoly {
                p,
                repr: Repr::Fp(vec![c]),
            }
        }
    }

    /// x + c.
    pub fn x_plus_const(p: u64, c: u64) -> Self {
        let c = c % p;
        if p == 2 {
            GFpPoly {
                p,
                repr: Repr::F2(vec![0b10 | c]),
            }
        } else {
            GFpPoly {
                p,
                repr: Repr::Fp(vec![c, 1]),
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> Option<usize> {
        match &self.repr {
            Repr::F2(w) => f2_degree(w),
            Repr::Fp(v) => {
                if v.is_empty() {
                    None
                } else {
                    Some(v.len() - 1)
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0) == 1
    }

    pub fn coeff(&self, i: usize) -> u64 {
        match &self.repr {
            Repr::F2(w) => f2_get(w, i),
            Repr::Fp(v) => v.get(i).copied().unwrap_or(0),
        }
    }

    /// Coefficients by ascending degree (empty for the zero polynomial).
    pub fn coeffs(&self) -> Vec<u64> {
        match &self.repr {
            Repr::F2(w) => match f2_degree(w) {
                None => Vec::new(),
                Some(d) => (0..=d).map(|i| f2_get(w, i)).collect(),
            },
            Repr::Fp(v) => v.clone(),
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "polynomial arithmetic across different moduli"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::F2(a), Repr::F2(b)) => {
                let mut out = vec![0u64; a.len().max(b.len())];
                out[..a.len()].copy_from_slice(a);
                f2_xor_shifted(&mut out, b, 0);
                Self::from_f2(out)
            }
            (Repr::Fp(a), Repr::Fp(b)) => {
                let mut out = vec![0u64; a.len().max(b.len())];
                for (i, slot) in out.iter_mut().enumerate() {
                    let av = a.get(i).copied().unwrap_or(0);
                    let bv = b.get(i).copied().unwrap_or(0);
                    *slot = (av + bv) % self.p;
                }
                Self::from_fp(self.p, out)
            }
            _ => unreachable!("repr is determined by p"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::F2(_), Repr::F2(_)) => self.add(other),
            (Repr::Fp(a), Repr::Fp(b)) => {
                let mut out = vec![0u64; a.len().max(b.len())];
                for (i, slot) in out.iter_mut().enumerate() {
                    let av = a.get(i).copied().unwrap_or(0);
                    let bv = b.get(i).copied().unwrap_or(0);
                    *slot = (av + self.p - bv) % self.p;
                }
                Self::from_fp(self.p, out)
            }
            _ => unreachable!("repr is determined by p"),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        match (&self.repr, &other.repr) {
            (Repr::F2(a), Repr::F2(b)) => Self::from_f2(f2_mul(a, b)),
            (Repr::Fp(a), Repr::Fp(b)) => Self::from_fp(self.p, fp_mul(a, b, self.p)),
            _ => unreachable!("repr is determined by p"),
        }
    }

    /// Scales so the leading coefficient is 1. No-op on zero.
    pub fn into_monic(self) -> Self {
        match self.repr {
            Repr::F2(w) => Self::from_f2(w),
            Repr::Fp(mut v) => {
                if let Some(&lead) = v.last() {
                    if lead != 1 {
                        let inv = pow_mod(lead, self.p - 2, self.p);
                        for c in v.iter_mut() {
                            *c = mul_mod(*c, inv, self.p);
                        }
                    }
                }
                Self::from_fp(self.p, v)
            }
        }
    }

    /// Remainder of self modulo divisor.
    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        if self.p != divisor.p {
            return Err(Error::ModulusMismatch(self.p, divisor.p));
        }
        if divisor.is_zero() {
            return Err(Error::InvalidArgument(
                "polynomial division by zero".into(),
            ));
        }
        match (&self.repr, &divisor.repr) {
            (Repr::F2(a), Repr::F2(b)) => {
                let mut r = a.clone();
                f2_rem(&mut r, b);
                Ok(Self::from_f2(r))
            }
            (Repr::Fp(a), Repr::Fp(b)) => {
                let mut r = a.clone();
                let inv = pow_mod(b[b.len() - 1], self.p - 2, self.p);
                fp_rem(&mut r, b, inv, self.p);
                Ok(Self::from_fp(self.p, r))
            }
            _ => unreachable!("repr is determined by p"),
        }
    }

    /// Monic greatest common divisor. At most one argument may be zero.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.p != b.p {
            return Err(Error::ModulusMismatch(a.p, b.p));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidArgument(
                "gcd of two zero polynomials".into(),
            ));
        }
        let p = a.p;
        match (&a.repr, &b.repr) {
            (Repr::F2(wa), Repr::F2(wb)) => {
                let mut x = wa.clone();
                let mut y = wb.clone();
                loop {
                    if f2_degree(&y).is_none() {
                        f2_trim(&mut x);
                        return Ok(Self::from_f2(x));
                    }
                    f2_rem(&mut x, &y);
                    std::mem::swap(&mut x, &mut y);
                }
            }
            (Repr::Fp(va), Repr::Fp(vb)) => {
                let mut x = va.clone();
                let mut y = vb.clone();
                loop {
                    if y.is_empty() {
                        return Ok(Self::from_fp(p, x).into_monic());
                    }
                    let inv = pow_mod(y[y.len() - 1], p - 2, p);
                    fp_rem(&mut x, &y, inv, p);
                    std::mem::swap(&mut x, &mut y);
                }
            }
            _ => unreachable!("repr is determined by p"),
        }
    }

    /// base^e mod modulus by square-and-multiply. deg(modulus) >= 1.
    pub fn powmod(base: &Self, e: u64, modulus: &Self) -> Result<Self> {
        if base.p != modulus.p {
            return Err(Error::ModulusMismatch(base.p, modulus.p));
        }
        match modulus.degree() {
            Some(d) if d >= 1 => {}
            _ => {
                return Err(Error::InvalidArgument(
                    "powmod modulus must have degree >= 1".into(),
                ))
            }
        }
        let mut result = Self::one(base.p);
        let mut acc = base.rem(modulus)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&acc).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                acc = acc.mul(&acc).rem(modulus)?;
            }
        }
        Ok(result)
    }

    /// (x + lambda)^n - 1 over F_p, built from the base-p digits of n
    /// (Lucas), so cost is proportional to the number of nonzero terms.
    pub fn shifted_power_minus_one(p: u64, lambda: u64, n: u64) -> Result<Self> {
        Self::check_prime(p)?;
        if n == 0 {
            return Err(Error::InvalidArgument(
                "shifted_power_minus_one: n must be >= 1".into(),
            ));
        }
        if lambda >= p {
            return Err(Error::InvalidArgument(format!(
                "lambda = {lambda} out of range for p = {p}"
            )));
        }
        let n_us = usize::try_from(n).map_err(|_| {
            Error::InvalidArgument("degree does not fit in memory".into())
        })?;
        if p == 2 {
            let mut w = vec![0u64; f2_words(n_us + 1)];
            if lambda == 0 {
                w[0] |= 1;
                w[n_us / 64] |= 1 << (n_us % 64);
            } else {
                // (x+1)^n = prod over set bits j of n of (x^(2^j) + 1).
                w[0] = 1;
                for j in 0..64 {
                    if (n >> j) & 1 == 1 {
                        f2_self_xor_shifted(&mut w, 1usize << j);
                    }
                }
                w[0] ^= 1; // subtract 1
            }
            return Ok(Self::from_f2(w));
        }

        let mut coeffs = vec![0u64; n_us + 1];
        // Base-p digits of n, least significant first.
        let mut digits = Vec::new();
        let mut m = n;
        while m > 0 {
            digits.push(m % p);
            m /= p;
        }
        // Per digit position: row[i] = C(d, i) * lambda^(d-i) mod p.
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(digits.len());
        for &d in &digits {
            let du = d as usize;
            let mut binom = vec![0u64; du + 1];
            binom[0] = 1;
            for i in 0..du {
                // C(d, i+1) = C(d, i) * (d-i) / (i+1)
                let inv = pow_mod(i as u64 + 1, p - 2, p);
                binom[i + 1] = mul_mod(mul_mod(binom[i], d - i as u64, p), inv, p);
            }
            let mut lam_pow = vec![0u64; du + 1];
            lam_pow[0] = 1;
            for i in 0..du {
                lam_pow[i + 1] = mul_mod(lam_pow[i], lambda, p);
            }
            let row: Vec<u64> = (0..=du)
                .map(|i| mul_mod(binom[i], lam_pow[du - i], p))
                .collect();
            rows.push(row);
        }
        let mut pw = Vec::with_capacity(digits.len());
        let mut acc = 1u64;
        for _ in 0..digits.len() {
            pw.push(acc);
            acc = acc.saturating_mul(p);
        }
        // Walk all digitwise-dominated exponents i, accumulating the
        // coefficient C(n, i) * lambda^(n - i) from the per-digit rows.
        fn walk(
            pos: usize,
            idx: u64,
            coeff: u64,
            rows: &[Vec<u64>],
            pw: &[u64],
            p: u64,
            out: &mut [u64],
        ) {
            if coeff == 0 {
                return;
            }
            if pos == rows.len() {
                out[idx as usize] = coeff;
                return;
            }
            for (i, &rv) in rows[pos].iter().enumerate() {
                walk(
                    pos + 1,
                    idx + i as u64 * pw[pos],
                    mul_mod(coeff, rv, p),
                    rows,
                    pw,
                    p,
                    out,
                );
            }
        }
        walk(0, 0, 1, &rows, &pw, p, &mut coeffs);
        coeffs[0] = (coeffs[0] + p - 1) % p;
        Ok(Self::from_fp(p, coeffs))
    }

    /// G = gcd over lambda = 0..p-1 of ((x+lambda)^n - 1). The degree
    /// of G is the number of witnesses; deg G >= 1 iff n is in N_p.
    ///
    /// The first two shifts are constructed explicitly and reduced in
    /// one Euclid pass; after that the degree has collapsed, so further
    /// shifts are folded through powmod against the running gcd.
    pub fn common_root_locus(p: u64, n: u64) -> Result<Self> {
        Self::check_prime(p)?;
        if n == 0 {
            return Err(Error::InvalidArgument(
                "common_root_locus: n must be >= 1".into(),
            ));
        }
        if gcd_u64(n % p, p) != 1 {
            return Err(Error::NotCoprime { p, n });
        }
        let a = Self::shifted_power_minus_one(p, 0, n)?;
        let b = Self::shifted_power_minus_one(p, 1, n)?;
        let mut g = Self::gcd(&a, &b)?;
        for lambda in 2..p {
            if g.degree() == Some(0) {
                break;
            }
            let base = Self::x_plus_const(p, lambda);
            let pm = Self::powmod(&base, n, &g)?;
            let t = pm.sub(&Self::one(p));
            g = Self::gcd(&g, &t)?;
        }
        Ok(g.into_monic())
    }

    /// Parses the textual rendering produced by Display, e.g.
    /// "x^3+x^2+x" or "2x^5+1". Repeated degrees are accumulated.
    pub fn parse(p: u64, s: &str) -> Result<Self> {
        const MAX_PARSE_DEGREE: u64 = 1 << 24;
        Self::check_prime(p)?;
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::PolyParse("empty input".into()));
        }
        let mut terms: Vec<(u64, u64)> = Vec::new(); // (degree, coeff)
        let mut max_deg = 0u64;
        for raw in s.split('+') {
            let t = raw.trim();
            if t.is_empty() {
                return Err(Error::PolyParse("empty term".into()));
            }
            let (coeff_str, rest) = match t.find('x') {
                Some(i) => (&t[..i], &t[i + 1..]),
                None => (t, ""),
            };
            let has_x = t.contains('x');
            let coeff: u64 = if coeff_str.is_empty() {
                if has_x {
                    1
                } else {
                    return Err(Error::PolyParse(format!("bad term {t:?}")));
                }
            } else {
                coeff_str
                    .parse()
                    .map_err(|_| Error::PolyParse(format!("bad coefficient in {t:?}")))?
            };
            let degree: u64 = if !has_x {
                0
            } else if rest.is_empty() {
                1
            } else if let Some(exp) = rest.strip_prefix('^') {
                exp.parse()
                    .map_err(|_| Error::PolyParse(format!("bad exponent in {t:?}")))?
            } else {
                return Err(Error::PolyParse(format!("bad term {t:?}")));
            };
            if degree > MAX_PARSE_DEGREE {
                return Err(Error::PolyParse(format!("degree {degree} too large")));
            }
            max_deg = max_deg.max(degree);
            terms.push((degree, coeff % p));
        }
        let mut coeffs = vec![0u64; max_deg as usize + 1];
        for (d, c) in terms {
            coeffs[d as usize] = (coeffs[d as usize] + c) % p;
        }
        Self::new(p, &coeffs)
    }
}

impl std::fmt::Display for GFpPoly {
    /// Descending degree, coefficient suppressed when 1, e.g.
    /// "x^3+x^2+x"; the zero polynomial renders as "0".
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let deg = match self.degree() {
            None => return write!(f, "0"),
            Some(d) => d,
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            let c = self.coeff(i);
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, i) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (c, 1) => write!(f, "{c}x")?,
                (1, _) => write!(f, "x^{i}")?,
                (c, _) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(p: u64, max_len: usize) -> impl Strategy<Value = GFpPoly> {
        prop::collection::vec(0u64..p, 0..max_len)
            .prop_map(move |cs| GFpPoly::new(p, &cs).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn gcd_divides_both_and_common_divisors_divide_gcd(
            seed_g in arb_poly(2, 24),
            a0 in arb_poly(2, 120),
            b0 in arb_poly(2, 120),
        ) {
            prop_assume!(!a0.is_zero() || !b0.is_zero());
            let g0 = if seed_g.is_zero() { GFpPoly::one(2) } else { seed_g };
            let a = g0.mul(&a0);
            let b = g0.mul(&b0);
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = GFpPoly::gcd(&a, &b).unwrap();
            if !a.is_zero() {
                prop_assert!(a.rem(&g).unwrap().is_zero());
            }
            if !b.is_zero() {
                prop_assert!(b.rem(&g).unwrap().is_zero());
            }
            // The constructed common divisor divides the gcd.
            prop_assert!(g.rem(&g0).unwrap().is_zero());
        }

        #[test]
        fn gcd_divides_both_mod_5(
            a in arb_poly(5, 96),
            b in arb_poly(5, 96),
        ) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = GFpPoly::gcd(&a, &b).unwrap();
            if !a.is_zero() {
                prop_assert!(a.rem(&g).unwrap().is_zero());
            }
            if !b.is_zero() {
                prop_assert!(b.rem(&g).unwrap().is_zero());
            }
        }

        #[test]
        fn render_parse_roundtrip(f in arb_poly(7, 40)) {
            let s = f.to_string();
            prop_assert_eq!(GFpPoly::parse(7, &s).unwrap(), f);
        }

        #[test]
        fn mul_then_rem_is_zero(a in arb_poly(3, 60), b in arb_poly(3, 60)) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert!(prod.rem(&b).unwrap().is_zero());
        }
    }
}
