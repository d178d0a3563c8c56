//! Explicit finite fields F_{p^k}: deterministic construction,
//! generators, discrete logs, power-residue and solution-count oracles,
//! and multiplicative character sums. These are the brute-force ground
//! truth against which the gcd criterion and every bound is checked.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gfpoly::GFpPoly;
use crate::numth::{factorize, is_prime};

/// Ceilings for the enumeration oracles. Enumeration walks the whole
/// field; character sums additionally hold a dlog table in memory.
#[derive(Debug, Clone, Copy)]
pub struct OracleBounds {
    pub enumeration_q: u64,
    pub character_q: u64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            enumeration_q: 1 << 26,
            character_q: 1 << 20,
        }
    }
}

impl OracleBounds {
    pub fn with_enumeration(q: u64) -> Self {
        OracleBounds {
            enumeration_q: q,
            character_q: q.min(1 << 20),
        }
    }

    fn check_enumeration(&self, q: u64) -> Result<()> {
        if q > self.enumeration_q {
            return Err(Error::OracleBound {
                q,
                bound: self.enumeration_q,
            });
        }
        Ok(())
    }

    fn check_character(&self, q: u64) -> Result<()> {
        if q > self.character_q {
            return Err(Error::OracleBound {
                q,
                bound: self.character_q,
            });
        }
        Ok(())
    }
}

const MAX_K: usize = 64;

/// An element of F_{p^k}, stored as the index sum c_j p^j of its
/// coefficient vector (c_0, ..., c_{k-1}) in the modulus basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FqElem(pub u64);

/// F_{p^k} with a fixed irreducible modulus. Construction is
/// deterministic: the modulus is the canonically smallest monic
/// irreducible of degree k (coefficient tuples compared low degree
/// first), so fixtures reproduce across runs.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    q: u64,
    modulus: GFpPoly,
    /// p - m_j for the non-leading modulus coefficients:
    /// x^k = sum_j mod_neg[j] x^j (entries already reduced mod p).
    mod_neg: Vec<u64>,
}

impl FieldSpec {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &GFpPoly {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }

    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    pub fn element_from_index(&self, idx: u64) -> Result<FqElem> {
        if idx >= self.q {
            return Err(Error::InvalidArgument(format!(
                "element index {idx} out of range for q = {}",
                self.q
            )));
        }
        Ok(FqElem(idx))
    }

    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.k as usize {
            return Err(Error::InvalidArgument(
                "coefficient vector longer than the extension degree".into(),
            ));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument("coefficient out of range".into()));
        }
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        Ok(FqElem(idx))
    }

    /// Coefficient vector of length k, ascending degree.
    pub fn coeff_vector(&self, a: FqElem) -> Vec<u64> {
        let mut out = vec![0u64; self.k as usize];
        self.decode(a.0, &mut out);
        out
    }

    fn decode(&self, mut idx: u64, out: &mut [u64]) {
        for slot in out.iter_mut().take(self.k as usize) {
            *slot = idx % self.p;
            idx /= self.p;
        }
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let mut idx = 0u64;
        for &c in digits[..self.k as usize].iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// Rank in the canonical element ordering (lexicographic on
    /// coefficient vectors, comparing the low-degree coefficient first).
    pub fn canonical_rank(&self, a: FqElem) -> u64 {
        let mut digits = [0u64; MAX_K];
        self.decode(a.0, &mut digits);
        let mut rank = 0u64;
        for &d in digits.iter().take(self.k as usize) {
            rank = rank * self.p + d;
        }
        rank
    }

    pub fn element_at_rank(&self, rank: u64) -> Result<FqElem> {
        if rank >= self.q {
            return Err(Error::InvalidArgument(format!(
                "rank {rank} out of range for q = {}",
                self.q
            )));
        }
        let mut digits = [0u64; MAX_K];
        let mut r = rank;
        for j in (0..self.k as usize).rev() {
            // The low-degree coefficient is the most significant rank digit.
            digits[self.k as usize - 1 - j] = r % self.p;
            r /= self.p;
        }
        digits[..self.k as usize].reverse();
        // After the loop digits holds (c_{k-1}, ..., c_0) reversed back
        // to (c_0, ..., c_{k-1}).
        Ok(FqElem(self.encode(&digits)))
    }

    pub fn is_zero(&self, a: FqElem) -> bool {
        a.0 == 0
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let mut da = [0u64; MAX_K];
        let mut db = [0u64; MAX_K];
        self.decode(a.0, &mut da);
        self.decode(b.0, &mut db);
        for j in 0..self.k as usize {
            da[j] = (da[j] + db[j]) % self.p;
        }
        FqElem(self.encode(&da))
    }

    /// a + 1: only the constant digit moves.
    pub fn add_one(&self, a: FqElem) -> FqElem {
        if a.0 % self.p == self.p - 1 {
            FqElem(a.0 + 1 - self.p)
        } else {
            FqElem(a.0 + 1)
        }
    }

    fn mul_digits(&self, a: &[u64], b: &[u64], out: &mut [u64]) {
        let k = self.k as usize;
        let p = self.p;
        let mut buf = [0u64; 2 * MAX_K];
        for i in 0..k {
            let av = a[i];
            if av == 0 {
                continue;
            }
            for j in 0..k {
                buf[i + j] += av * b[j];
            }
        }
        // Fold x^(k+t) down via x^k = sum_j mod_neg[j] x^j.
        for i in (k..2 * k - 1).rev() {
            let c = buf[i] % p;
            if c == 0 {
                continue;
            }
            for j in 0..k {
                buf[i - k + j] += c * self.mod_neg[j];
            }
        }
        for j in 0..k {
            out[j] = buf[j] % p;
        }
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let mut da = [0u64; MAX_K];
        let mut db = [0u64; MAX_K];
        let mut o = [0u64; MAX_K];
        self.decode(a.0, &mut da);
        self.decode(b.0, &mut db);
        self.mul_digits(&da, &db, &mut o);
        FqElem(self.encode(&o))
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        let mut result = self.one();
        let mut acc = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, acc);
            }
            e >>= 1;
            if e > 0 {
                acc = self.mul(acc, acc);
            }
        }
        result
    }
}

/// Builds F_{p^k} with the canonically smallest irreducible modulus.
/// Irreducibility is established by the Frobenius criterion:
/// x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for primes l | k.
pub fn make_field(p: u64, k: u32) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 || k as usize > MAX_K {
        return Err(Error::InvalidArgument(format!(
            "extension degree {k} out of range"
        )));
    }
    let mut q = 1u64;
    for _ in 0..k {
        q = q.checked_mul(p).ok_or_else(|| {
            Error::InvalidArgument(format!("q = {p}^{k} does not fit in 64 bits"))
        })?;
    }
    let prime_divs: Vec<u64> = if k == 1 {
        Vec::new()
    } else {
        factorize(k as u64)?.factors.keys().copied().collect()
    };
    let ku = k as usize;
    for rank in 0..q {
        // Tuple (c_0, ..., c_{k-1}) in canonical order: c_0 is the most
        // significant digit of the rank.
        let mut coeffs = vec![0u64; ku + 1];
        coeffs[ku] = 1;
        let mut r = rank;
        for j in (0..ku).rev() {
            // j runs over tuple positions from last to first.
            coeffs[j] = 0; // placeholder, filled below
            let _ = j;
            let _ = &mut r;
            break;
        }
        let mut r = rank;
        for pos in (0..ku).rev() {
            coeffs[pos] = r % p;
            r /= p;
        }
        // Now coeffs[0] is the most significant rank digit = c_0.
        if ku >= 2 && coeffs[0] == 0 {
            continue; // divisible by x
        }
        let f = GFpPoly::new(p, &coeffs)?;
        if is_irreducible(&f, k, &prime_divs)? {
            let fc = f.coeffs();
            let mod_neg: Vec<u64> = (0..ku).map(|j| (p - fc[j]) % p).collect();
            return Ok(FieldSpec {
                p,
                k,
                q,
                modulus: f,
                mod_neg,
            });
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

fn is_irreducible(f: &GFpPoly, k: u32, prime_divs: &[u64]) -> Result<bool> {
    let p = f.p();
    let x = GFpPoly::x_plus_const(p, 0);
    let x_red = x.rem(f)?;
    let checkpoints: Vec<u32> = prime_divs.iter().map(|&l| k / l as u32).collect();
    let mut h = x_red.clone();
    for j in 1..=k {
        h = GFpPoly::powmod(&h, p, f)?;
        if checkpoints.contains(&j) {
            let diff = h.sub(&x_red);
            if diff.is_zero() {
                return Ok(false);
            }
            let g = GFpPoly::gcd(&diff, f)?;
            if !g.is_one() {
                return Ok(false);
            }
        }
    }
    Ok(h == x_red)
}

/// Smallest primitive element in the canonical ordering. Primitivity is
/// checked against every prime divisor of q - 1, which must factor.
pub fn find_generator(spec: &FieldSpec) -> Result<FqElem> {
    let q = spec.q;
    if q == 2 {
        return Ok(spec.one());
    }
    let prime_divs: Vec<u64> = factorize(q - 1)?.factors.keys().copied().collect();
    for rank in 1..q {
        let g = spec.element_at_rank(rank)?;
        if prime_divs
            .iter()
            .all(|&l| spec.pow(g, (q - 1) / l) != spec.one())
        {
            return Ok(g);
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

/// Bitmap over element indices of the nonzero d-th powers, produced by
/// walking the cyclic subgroup generated by g^d.
fn dth_power_bitmap(spec: &FieldSpec, d: u64) -> Result<Vec<u64>> {
    let q = spec.q;
    let g = find_generator(spec)?;
    let h = spec.pow(g, d);
    let mut bits = vec![0u64; (q as usize).div_ceil(64)];
    let mut cur = spec.one();
    for _ in 0..(q - 1) / d {
        bits[cur.0 as usize / 64] |= 1 << (cur.0 % 64);
        cur = spec.mul(cur, h);
    }
    debug_assert_eq!(cur, spec.one());
    Ok(bits)
}

fn bit(bits: &[u64], i: u64) -> bool {
    bits[i as usize / 64] >> (i % 64) & 1 == 1
}

fn check_d(spec: &FieldSpec, d: u64) -> Result<()> {
    if d == 0 || (spec.q - 1) % d != 0 {
        return Err(Error::InvalidArgument(format!(
            "d = {d} does not divide q - 1 = {}",
            spec.q - 1
        )));
    }
    Ok(())
}

fn check_r(spec: &FieldSpec, r: u64) -> Result<()> {
    if r < 1 || r > spec.p {
        return Err(Error::InvalidArgument(format!(
            "r = {r} out of range 1..={}",
            spec.p
        )));
    }
    Ok(())
}

/// True iff a is nonzero and a^((q-1)/d) = 1.
pub fn is_nonzero_dth_power(spec: &FieldSpec, a: FqElem, d: u64) -> Result<bool> {
    check_d(spec, d)?;
    if spec.is_zero(a) {
        return Ok(false);
    }
    Ok(spec.pow(a, (spec.q - 1) / d) == spec.one())
}

/// M = #{xi in F_q : xi, xi+1, ..., xi+r-1 all nonzero d-th powers};
/// M0 = #{xi in F_p : the run includes 0 and every member is a d-th
/// power, with 0 counting as a d-th power}.
pub fn count_consecutive_dpowers(
    spec: &FieldSpec,
    d: u64,
    r: u64,
    bounds: &OracleBounds,
) -> Result<(u64, u64)> {
    check_d(spec, d)?;
    check_r(spec, r)?;
    bounds.check_enumeration(spec.q)?;
    let bits = dth_power_bitmap(spec, d)?;
    let mut m = 0u64;
    for idx in 0..spec.q {
        let mut e = FqElem(idx);
        let mut ok = true;
        for _ in 0..r {
            if !bit(&bits, e.0) {
                ok = false;
                break;
            }
            e = spec.add_one(e);
        }
        if ok {
            m += 1;
        }
    }
    // M0 scans the prime subfield, whose elements are the indices 0..p.
    let p = spec.p;
    let mut m0 = 0u64;
    for c in 0..p {
        let mut includes_zero = false;
        let mut ok = true;
        for i in 0..r {
            let e = (c + i) % p;
            if e == 0 {
                includes_zero = true;
            } else if !bit(&bits, e) {
                ok = false;
                break;
            }
        }
        if ok && includes_zero {
            m0 += 1;
        }
    }
    Ok((m, m0))
}

/// p if (p-1) | n else 0: the only two values M0 can take when r = p.
pub fn m0_predicted(p: u64, n: u64) -> u64 {
    if n % (p - 1).max(1) == 0 {
        p
    } else {
        0
    }
}

/// Exact number of solutions (x, y_1..y_r) of y_j^d = x + j - 1 over
/// F_q, by direct enumeration over x with the root-count rule: each
/// equation has d solutions when the right side is a nonzero d-th
/// power, one when it is zero, none otherwise.
pub fn count_system_solutions(
    spec: &FieldSpec,
    d: u64,
    r: u64,
    bounds: &OracleBounds,
) -> Result<u128> {
    check_d(spec, d)?;
    check_r(spec, r)?;
    bounds.check_enumeration(spec.q)?;
    let bits = dth_power_bitmap(spec, d)?;
    let mut dpow = vec![1u128; r as usize + 1];
    for i in 1..=r as usize {
        dpow[i] = dpow[i - 1].checked_mul(d as u128).ok_or_else(|| {
            Error::InvalidArgument("solution count overflows 128 bits".into())
        })?;
    }
    let mut n_total: u128 = 0;
    for idx in 0..spec.q {
        let mut e = FqElem(idx);
        let mut nonzero_powers = 0usize;
        let mut ok = true;
        for _ in 0..r {
            if spec.is_zero(e) {
                // contributes a single solution y_j = 0
            } else if bit(&bits, e.0) {
                nonzero_powers += 1;
            } else {
                ok = false;
                break;
            }
            e = spec.add_one(e);
        }
        if ok {
            n_total = n_total.checked_add(dpow[nonzero_powers]).ok_or_else(|| {
                Error::InvalidArgument("solution count overflows 128 bits".into())
            })?;
        }
    }
    Ok(n_total)
}

/// A multiplicative character chi of exact order d, realized through a
/// generator and a discrete-log table: chi(g^a) = exp(2 pi i a / d),
/// chi(0) = 0, and 0^0 reads as 1 inside character arguments.
#[derive(Debug, Clone)]
pub struct CharacterSpec {
    field: FieldSpec,
    generator: FqElem,
    dlog: Vec<u32>,
    d: u64,
    /// roots[t] = exp(2 pi i t / d)
    roots: Vec<Complex64>,
}

const DLOG_ZERO: u32 = u32::MAX;

impl CharacterSpec {
    pub fn new(spec: &FieldSpec, d: u64, bounds: &OracleBounds) -> Result<Self> {
        check_d(spec, d)?;
        bounds.check_character(spec.q)?;
        let generator = find_generator(spec)?;
        let mut dlog = vec![DLOG_ZERO; spec.q as usize];
        let mut cur = spec.one();
        for a in 0..spec.q - 1 {
            debug_assert_eq!(dlog[cur.0 as usize], DLOG_ZERO, "generator walk revisited");
            dlog[cur.0 as usize] = a as u32;
            cur = spec.mul(cur, generator);
        }
        let roots: Vec<Complex64> = (0..d)
            .map(|t| {
                let ang = 2.0 * std::f64::consts::PI * t as f64 / d as f64;
                Complex64::new(ang.cos(), ang.sin())
            })
            .collect();
        Ok(CharacterSpec {
            field: spec.clone(),
            generator,
            dlog,
            d,
            roots,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn generator(&self) -> FqElem {
        self.generator
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    /// Discrete log of a nonzero element with respect to the generator.
    pub fn dlog(&self, a: FqElem) -> Option<u64> {
        let v = self.dlog[a.0 as usize];
        (v != DLOG_ZERO).then_some(v as u64)
    }

    /// chi(a); chi(0) = 0.
    pub fn eval(&self, a: FqElem) -> Complex64 {
        match self.dlog(a) {
            None => Complex64::new(0.0, 0.0),
            Some(t) => self.roots[(t % self.d) as usize],
        }
    }

    /// dlogs mod d of the shifted elements xi + j for j = 0..r, with
    /// DLOG_ZERO marking the zero element.
    fn shift_dlog_tables(&self, r: u64) -> Vec<Vec<u32>> {
        let q = self.field.q;
        let mut tables = vec![vec![DLOG_ZERO; q as usize]; r as usize];
        for idx in 0..q {
            let mut e = FqElem(idx);
            for table in tables.iter_mut() {
                let v = self.dlog[e.0 as usize];
                table[idx as usize] = if v == DLOG_ZERO {
                    DLOG_ZERO
                } else {
                    (v as u64 % self.d) as u32
                };
                e = self.field.add_one(e);
            }
        }
        tables
    }

    fn tuple_sum(&self, tables: &[Vec<u32>], tuple: &[u64]) -> Complex64 {
        let q = self.field.q;
        let d = self.d;
        let mut acc = Complex64::new(0.0, 0.0);
        'outer: for idx in 0..q as usize {
            let mut t = 0u64;
            for (j, &ij) in tuple.iter().enumerate() {
                if ij == 0 {
                    continue; // 0^0 reads as 1
                }
                let l = tables[j][idx];
                if l == DLOG_ZERO {
                    continue 'outer; // argument hits 0, chi(0) = 0
                }
                t += ij * l as u64;
            }
            acc += self.roots[(t % d) as usize];
        }
        acc
    }
}

/// The total solution count expressed through characters: the sum over
/// all exponent tuples (i_1..i_r) in [0,d)^r of
/// sum_xi chi(xi^{i_1} (xi+1)^{i_2} ... (xi+r-1)^{i_r}),
/// evaluated term by term in complex doubles. The real part rounds to
/// the exact solution count; the imaginary part stays below tolerance.
pub fn character_sum_count(chi: &CharacterSpec, r: u64) -> Result<Complex64> {
    check_r(chi.field(), r)?;
    let d = chi.d;
    let tables = chi.shift_dlog_tables(r);
    let mut tuple = vec![0u64; r as usize];
    let mut total = Complex64::new(0.0, 0.0);
    loop {
        total += chi.tuple_sum(&tables, &tuple);
        // odometer
        let mut pos = 0usize;
        loop {
            if pos == r as usize {
                return Ok(total);
            }
            tuple[pos] += 1;
            if tuple[pos] < d {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

/// One character sum checked against the Weil estimate
/// |sum| <= (w - 1) sqrt(q), with w the number of nonzero tuple entries.
#[derive(Debug, Clone)]
pub struct WeilTermReport {
    pub tuple: Vec<u64>,
    pub sum_abs: f64,
    pub w: u64,
    pub bound: f64,
    pub ok: bool,
}

pub const WEIL_TOLERANCE: f64 = 1e-6;

pub fn weil_term_report(chi: &CharacterSpec, r: u64, tuple: &[u64]) -> Result<WeilTermReport> {
    check_r(chi.field(), r)?;
    if tuple.len() != r as usize {
        return Err(Error::InvalidArgument(
            "tuple length must equal r".into(),
        ));
    }
    if tuple.iter().all(|&i| i == 0) {
        return Err(Error::InvalidArgument(
            "the zero tuple is excluded from the Weil estimate".into(),
        ));
    }
    if tuple.iter().any(|&i| i >= chi.d) {
        return Err(Error::InvalidArgument(
            "tuple exponents must lie in [0, d)".into(),
        ));
    }
    let tables = chi.shift_dlog_tables(r);
    let s = chi.tuple_sum(&tables, tuple);
    let w = tuple.iter().filter(|&&i| i != 0).count() as u64;
    let bound = (w as f64 - 1.0) * (chi.field.q as f64).sqrt();
    let sum_abs = s.norm();
    Ok(WeilTermReport {
        tuple: tuple.to_vec(),
        sum_abs,
        w,
        bound,
        ok: sum_abs <= bound + WEIL_TOLERANCE,
    })
}

/// Sweep companion to `weil_term_report`: checks every nonzero tuple of
/// one (d, r) configuration, sharing the shift tables, and returns the
/// number of tuples checked and the worst slack. Errors on the first
/// violated bound.
pub fn weil_sweep(chi: &CharacterSpec, r: u64) -> Result<(u64, f64)> {
    check_r(chi.field(), r)?;
    let d = chi.d;
    let tables = chi.shift_dlog_tables(r);
    let sqrt_q = (chi.field.q as f64).sqrt();
    let mut tuple = vec![0u64; r as usize];
    let mut checked = 0u64;
    let mut worst = f64::NEG_INFINITY;
    loop {
        // odometer (skips the initial all-zero state)
        let mut pos = 0usize;
        loop {
            if pos == r as usize {
                return Ok((checked, worst));
            }
            tuple[pos] += 1;
            if tuple[pos] < d {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
        let s = chi.tuple_sum(&tables, &tuple);
        let w = tuple.iter().filter(|&&i| i != 0).count() as f64;
        let bound = (w - 1.0) * sqrt_q;
        let slack = s.norm() - bound;
        if slack > WEIL_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "Weil bound violated at tuple {tuple:?}: |sum| = {} > {bound}",
                s.norm()
            )));
        }
        worst = worst.max(slack);
        checked += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds() -> OracleBounds {
        OracleBounds::default()
    }

    #[test]
    fn make_field_known_moduli() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.modulus().to_string(), "x");
        assert_eq!(f2.q(), 2);
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus().to_string(), "x^2+x+1");
        let f27 = make_field(3, 3).unwrap();
        assert_eq!(f27.q(), 27);
        assert_eq!(f27.modulus().degree(), Some(3));
        // Deterministic across runs.
        assert_eq!(
            make_field(3, 3).unwrap().modulus(),
            f27.modulus()
        );
        assert!(make_field(4, 2).is_err());
        assert!(make_field(2, 0).is_err());
    }

    #[test]
    fn field_arithmetic_basics() {
        let f = make_field(2, 4).unwrap();
        let one = f.one();
        assert_eq!(f.mul(one, one), one);
        // x^(q-1) = 1 for any nonzero x.
        for idx in 1..f.q() {
            let a = FqElem(idx);
            assert_eq!(f.pow(a, f.q() - 1), one);
        }
        // add_one agrees with add(., 1).
        for idx in 0..f.q() {
            let a = FqElem(idx);
            assert_eq!(f.add_one(a), f.add(a, one));
        }
    }

    #[test]
    fn generator_for_f4_is_x() {
        let f4 = make_field(2, 2).unwrap();
        let g = find_generator(&f4).unwrap();
        // x has index 2 (coefficient vector (0, 1)).
        assert_eq!(g, FqElem(2));
        assert_eq!(f4.coeff_vector(g), vec![0, 1]);
    }

    #[test]
    fn generator_for_f2_is_one() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(find_generator(&f2).unwrap(), f2.one());
    }

    #[test]
    fn generator_for_f16_has_order_15() {
        let f = make_field(2, 4).unwrap();
        let g = find_generator(&f).unwrap();
        assert_eq!(f.pow(g, 15), f.one());
        assert_ne!(f.pow(g, 5), f.one());
        assert_ne!(f.pow(g, 3), f.one());
    }

    #[test]
    fn dlog_is_a_bijection_on_nonzero_elements() {
        for (p, k) in [(2u64, 8u32), (3, 4), (5, 3), (7, 2), (13, 1)] {
            let f = make_field(p, k).unwrap();
            let chi = CharacterSpec::new(&f, 1, &bounds()).unwrap();
            let mut seen = vec![false; (f.q() - 1) as usize];
            for idx in 1..f.q() {
                let l = chi.dlog(FqElem(idx)).expect("nonzero element must have a dlog");
                assert!(!seen[l as usize]);
                seen[l as usize] = true;
            }
            assert!(chi.dlog(FqElem(0)).is_none());
        }
    }

    #[test]
    fn nonzero_dth_power_examples() {
        let f = make_field(2, 4).unwrap();
        assert!(is_nonzero_dth_power(&f, f.one(), 3).unwrap());
        assert!(is_nonzero_dth_power(&f, f.one(), 5).unwrap());
        assert!(!is_nonzero_dth_power(&f, f.zero(), 3).unwrap());
        let count = (0..16)
            .filter(|&i| is_nonzero_dth_power(&f, FqElem(i), 3).unwrap())
            .count();
        assert_eq!(count, 5); // index-3 subgroup of a 15-cycle
        assert!(is_nonzero_dth_power(&f, f.one(), 4).is_err()); // 4 does not divide 15
    }

    #[test]
    fn dth_power_test_matches_dlog_residue() {
        for (p, k) in [(2u64, 6u32), (3, 4), (5, 3)] {
            let f = make_field(p, k).unwrap();
            let chi = CharacterSpec::new(&f, 1, &bounds()).unwrap();
            for d in crate::numth::divisors(f.q() - 1).unwrap() {
                for idx in 1..f.q() {
                    let a = FqElem(idx);
                    let via_pow = is_nonzero_dth_power(&f, a, d).unwrap();
                    let via_dlog = chi.dlog(a).unwrap() % d == 0;
                    assert_eq!(via_pow, via_dlog, "p={p} k={k} d={d} idx={idx}");
                }
            }
        }
    }

    #[test]
    fn count_examples_from_f16() {
        let f = make_field(2, 4).unwrap();
        assert_eq!(count_consecutive_dpowers(&f, 3, 2, &bounds()).unwrap(), (0, 2));
        assert_eq!(
            count_consecutive_dpowers(&f, 1, 2, &bounds()).unwrap(),
            (14, 2)
        );
        assert_eq!(count_system_solutions(&f, 3, 2, &bounds()).unwrap(), 6);
        assert_eq!(
            count_system_solutions(&f, 1, 2, &bounds()).unwrap(),
            f.q() as u128
        );
        assert!(count_consecutive_dpowers(&f, 3, 3, &bounds()).is_err()); // r > p
        assert!(count_consecutive_dpowers(&f, 4, 2, &bounds()).is_err()); // d does not divide 15
    }

    #[test]
    fn count_example_from_f27() {
        let f = make_field(3, 3).unwrap();
        let (m, m0) = count_consecutive_dpowers(&f, 2, 3, &bounds()).unwrap();
        assert!(m >= 1); // 13 = (27-1)/2 is in N_3
        assert_eq!(m0, 0); // 13 is odd
        let n = count_system_solutions(&f, 2, 3, &bounds()).unwrap();
        assert_eq!(n, 8 * m as u128 + 4 * m0 as u128);
    }

    #[test]
    fn m0_prediction() {
        assert_eq!(m0_predicted(2, 7), 2);
        assert_eq!(m0_predicted(2, 12), 2);
        assert_eq!(m0_predicted(3, 13), 0);
        assert_eq!(m0_predicted(3, 122), 3);
        assert_eq!(m0_predicted(3, 121), 0);
    }

    #[test]
    fn solution_count_identity_small_sweep() {
        for (p, kmax) in [(2u64, 8u32), (3, 5), (5, 3), (7, 2)] {
            for k in 1..=kmax {
                let f = make_field(p, k).unwrap();
                for d in crate::numth::divisors(f.q() - 1).unwrap() {
                    for r in 1..=p.min(7) {
                        let (m, m0) =
                            count_consecutive_dpowers(&f, d, r, &bounds()).unwrap();
                        let n = count_system_solutions(&f, d, r, &bounds()).unwrap();
                        let dr = (d as u128).pow(r as u32);
                        let drm1 = (d as u128).pow(r as u32 - 1);
                        assert_eq!(
                            n,
                            dr * m as u128 + drm1 * m0 as u128,
                            "p={p} k={k} d={d} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let f = make_field(2, 10).unwrap();
        let tight = OracleBounds {
            enumeration_q: 512,
            character_q: 512,
        };
        assert!(matches!(
            count_consecutive_dpowers(&f, 1, 2, &tight),
            Err(Error::OracleBound { .. })
        ));
        assert!(matches!(
            CharacterSpec::new(&f, 3, &tight),
            Err(Error::OracleBound { .. })
        ));
    }

    #[test]
    fn character_sum_matches_brute_force_f16() {
        let f = make_field(2, 4).unwrap();
        let chi = CharacterSpec::new(&f, 3, &bounds()).unwrap();
        let s = character_sum_count(&chi, 2).unwrap();
        assert!((s.re - 6.0).abs() < 1e-6, "re = {}", s.re);
        assert!(s.im.abs() < 1e-6);
    }

    #[test]
    fn character_sum_with_trivial_character_is_q() {
        let f = make_field(3, 2).unwrap();
        let chi = CharacterSpec::new(&f, 1, &bounds()).unwrap();
        let s = character_sum_count(&chi, 3).unwrap();
        assert!((s.re - 9.0).abs() < 1e-9);
        assert!(s.im.abs() < 1e-9);
    }

    #[test]
    fn character_sum_integer_valued_f27() {
        let f = make_field(3, 3).unwrap();
        let chi = CharacterSpec::new(&f, 2, &bounds()).unwrap();
        let s = character_sum_count(&chi, 3).unwrap();
        let n = count_system_solutions(&f, 2, 3, &bounds()).unwrap();
        assert!((s.re - n as f64).abs() < 1e-6);
        assert!(s.im.abs() < 1e-6);
    }

    #[test]
    fn weil_single_shift_sums_vanish() {
        // Tuples with one nonzero entry sum a nontrivial character over
        // the whole field: the bound (w-1) sqrt(q) = 0 holds exactly.
        let f = make_field(2, 4).unwrap();
        let chi = CharacterSpec::new(&f, 5, &bounds()).unwrap();
        for j in 0..2usize {
            for i in 1..5u64 {
                let mut tuple = vec![0u64; 2];
                tuple[j] = i;
                let rep = weil_term_report(&chi, 2, &tuple).unwrap();
                assert_eq!(rep.w, 1);
                assert!(rep.sum_abs < 1e-6, "tuple {tuple:?} sum {}", rep.sum_abs);
                assert!(rep.ok);
            }
        }
    }

    #[test]
    fn weil_term_f16_example() {
        let f = make_field(2, 4).unwrap();
        let chi = CharacterSpec::new(&f, 3, &bounds()).unwrap();
        let rep = weil_term_report(&chi, 2, &[1, 1]).unwrap();
        assert_eq!(rep.w, 2);
        assert!(rep.ok);
        assert!(weil_term_report(&chi, 2, &[0, 0]).is_err());
        assert!(weil_term_report(&chi, 2, &[3, 0]).is_err()); // exponent >= d
    }

    #[test]
    fn weil_sweep_small_fields() {
        for (p, k) in [(2u64, 4u32), (3, 2), (5, 1), (7, 1)] {
            let f = make_field(p, k).unwrap();
            for d in crate::numth::divisors(f.q() - 1).unwrap() {
                if d == 1 {
                    continue;
                }
                let chi = CharacterSpec::new(&f, d, &bounds()).unwrap();
                for r in 1..=p.min(3) {
                    weil_sweep(&chi, r).unwrap();
                }
            }
        }
    }
}
