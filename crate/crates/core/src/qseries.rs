//! Exact truncated formal power series in `q` over arbitrary-precision
//! integers, with exponents on a rational lattice `(1/D)*Z`.
//!
//! Every series carries its own lattice denominator `D` and an explicit
//! precision bound: the series is known modulo `q^{prec/D}`. Binary
//! operations rescale both operands onto the lcm lattice. Builders are
//! provided for q-Pochhammer products, the Dedekind eta function, Klein
//! forms, and theta nullwerte `theta_{m,a}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exprat::{gcd, lcm, ExpRat};

/// Truncated formal series `sum_i coeffs[i] * q^{(val+i)/den}`, known
/// modulo `q^{prec/den}`. A series that is zero to its precision stores
/// no coefficients and has `val == prec`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSeries {
    #[serde(rename = "lattice_den")]
    den: i64,
    val: i64,
    prec: i64,
    #[serde(with = "bigint_strings")]
    coeffs: Vec<BigInt>,
}

pub(crate) mod bigint_strings {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .into_iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect()
    }
}

impl QSeries {
    fn raw(den: i64, val: i64, prec: i64, coeffs: Vec<BigInt>) -> Self {
        let mut s = QSeries {
            den,
            val,
            prec,
            coeffs,
        };
        s.normalize();
        s
    }

    /// The zero series, known to the given precision.
    pub fn zero(prec: ExpRat) -> Self {
        QSeries::raw(prec.den(), prec.num(), prec.num(), Vec::new())
    }

    /// The constant series 1, known to the given precision.
    pub fn one(prec: ExpRat) -> Self {
        QSeries::monomial(BigInt::one(), ExpRat::zero(), prec)
    }

    /// `c * q^e`, known to the given precision.
    pub fn monomial(c: BigInt, e: ExpRat, prec: ExpRat) -> Self {
        let den = lcm(e.den(), prec.den());
        let val = e.numer_on(den);
        let p = prec.numer_on(den);
        if val >= p || c.is_zero() {
            return QSeries::raw(den, p, p, Vec::new());
        }
        QSeries::raw(den, val, p, vec![c])
    }

    /// Series with integer exponents `0..coeffs.len()`, known mod `q^prec`.
    pub fn from_coeffs(coeffs: &[i64], prec: i64) -> Self {
        QSeries::raw(
            1,
            0,
            prec,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    fn normalize(&mut self) {
        debug_assert!(self.den >= 1);
        // clamp to precision
        if self.val < self.prec {
            let max_len = (self.prec - self.val) as usize;
            self.coeffs.truncate(max_len);
        } else {
            self.coeffs.clear();
        }
        // trim zero tails and heads
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.val = self.prec;
        }
        // compress the lattice when every exponent in use shares a factor
        if self.den > 1 {
            let mut g = gcd(self.den, self.prec);
            g = gcd(g, self.val);
            for (i, c) in self.coeffs.iter().enumerate() {
                if g == 1 {
                    break;
                }
                if !c.is_zero() {
                    g = gcd(g, self.val + i as i64);
                }
            }
            if g > 1 {
                let coeffs = self
                    .coeffs
                    .iter()
                    .step_by(g as usize)
                    .cloned()
                    .collect::<Vec<_>>();
                debug_assert!(self
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(i, c)| c.is_zero() || (self.val + i as i64) % g == 0));
                self.den /= g;
                self.val /= g;
                self.prec /= g;
                self.coeffs = coeffs;
            }
        }
    }

    pub fn lattice_den(&self) -> i64 {
        self.den
    }

    /// Lowest stored exponent; equals `prec_exp` for the zero series.
    pub fn val_exp(&self) -> ExpRat {
        ExpRat::new(self.val, self.den)
    }

    pub fn prec_exp(&self) -> ExpRat {
        ExpRat::new(self.prec, self.den)
    }

    pub fn is_zero_to_prec(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^e`; zero if not stored. Panics when `e` is at or
    /// beyond the precision bound.
    pub fn coeff(&self, e: ExpRat) -> BigInt {
        assert!(
            e < self.prec_exp(),
            "coefficient of q^{e} requested beyond precision O(q^{})",
            self.prec_exp()
        );
        if e.den() != 0 && self.den % e.den() != 0 {
            return BigInt::zero();
        }
        let n = e.numer_on(self.den);
        if n < self.val || n - self.val >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[(n - self.val) as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (ExpRat, &BigInt)> {
        let den = self.den;
        let val = self.val;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (ExpRat::new(val + i as i64, den), c))
    }

    fn with_den(&self, den: i64) -> QSeries {
        debug_assert!(den % self.den == 0);
        let k = den / self.den;
        if k == 1 {
            return self.clone();
        }
        let mut coeffs =
            vec![BigInt::zero(); ((self.coeffs.len() as i64 - 1) * k + 1).max(0) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        QSeries {
            den,
            val: self.val * k,
            prec: self.prec * k,
            coeffs,
        }
    }

    /// Exact sum; precision is the minimum of the operand precisions.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let den = lcm(self.den, other.den);
        let a = self.with_den(den);
        let b = other.with_den(den);
        let prec = a.prec.min(b.prec);
        let val = a.val.min(b.val).min(prec);
        let mut coeffs = vec![BigInt::zero(); (prec - val).max(0) as usize];
        for (src, sv) in [(&a, a.val), (&b, b.val)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                let pos = sv + i as i64 - val;
                if pos >= 0 && pos < coeffs.len() as i64 {
                    coeffs[pos as usize] += c;
                }
            }
        }
        QSeries::raw(den, val, prec, coeffs)
    }

    pub fn neg(&self) -> QSeries {
        QSeries::raw(
            self.den,
            self.val,
            self.prec,
            self.coeffs.iter().map(|c| -c).collect(),
        )
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> QSeries {
        QSeries::raw(
            self.den,
            self.val,
            self.prec,
            self.coeffs.iter().map(|x| x * c).collect(),
        )
    }

    /// Exact truncated product with the valuation-aware precision rule
    /// `prec = min(val(a) + prec(b), val(b) + prec(a))`.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        mul_impl(self, other, ConvMode::Auto)
    }

    pub fn mul_sequential(&self, other: &QSeries) -> QSeries {
        mul_impl(self, other, ConvMode::Sequential)
    }

    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, other: &QSeries) -> QSeries {
        mul_impl(self, other, ConvMode::Parallel)
    }

    /// `self^k` by binary powering.
    pub fn pow(&self, k: u32) -> QSeries {
        assert!(k >= 1, "pow requires a positive exponent");
        let mut base = self.clone();
        let mut k = k;
        let mut acc: Option<QSeries> = None;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap()
    }

    /// Multiply by the exact monomial `q^e` (shifts exponents and precision).
    pub fn shift(&self, e: ExpRat) -> QSeries {
        let den = lcm(self.den, e.den());
        let mut s = self.with_den(den);
        let n = e.numer_on(den);
        s.val += n;
        s.prec += n;
        QSeries::raw(s.den, s.val, s.prec, s.coeffs)
    }

    /// Substitution `q -> q^k`; exponents and precision are multiplied by `k`.
    pub fn rescale(&self, k: i64) -> QSeries {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let mut coeffs =
            vec![BigInt::zero(); ((self.coeffs.len() as i64 - 1) * k + 1).max(0) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        QSeries::raw(self.den, self.val * k, self.prec * k, coeffs)
    }

    /// Lower the precision bound to `prec` (no-op if already lower).
    pub fn truncate(&self, prec: ExpRat) -> QSeries {
        if prec >= self.prec_exp() {
            return self.clone();
        }
        let den = lcm(self.den, prec.den());
        let s = self.with_den(den);
        QSeries::raw(den, s.val, prec.numer_on(den), s.coeffs)
    }

    /// Multiplicative inverse to precision `prec`. The leading coefficient
    /// must be a unit (+1 or -1) in Z.
    pub fn inv(&self, prec: ExpRat) -> Result<QSeries> {
        if self.is_zero_to_prec() {
            return Err(Error::NonUnitLeading("0".into()));
        }
        let lead = &self.coeffs[0];
        if !lead.is_one() && *lead != BigInt::from(-1) {
            return Err(Error::NonUnitLeading(lead.to_string()));
        }
        let den = lcm(self.den, prec.den());
        let a = self.with_den(den);
        // b has valuation -val(a); coefficients of a beyond its own
        // precision are unknown, which caps the attainable precision.
        let mut p = prec.numer_on(den);
        p = p.min(a.prec - 2 * a.val);
        let len = (p + a.val).max(0) as usize;
        let sign_pos = lead.is_one();
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            if n == 0 {
                out.push(lead.clone());
                continue;
            }
            let mut acc = BigInt::zero();
            for j in 1..=n.min(a.coeffs.len() - 1) {
                if !a.coeffs[j].is_zero() {
                    acc += &a.coeffs[j] * &out[n - j];
                }
            }
            out.push(if sign_pos { -acc } else { acc });
        }
        Ok(QSeries::raw(den, -a.val, p, out))
    }

    /// True when both series agree on every exponent below the smaller
    /// precision bound.
    pub fn eq_to_prec(&self, other: &QSeries) -> bool {
        self.first_difference(other).is_none()
    }

    /// First exponent below the common precision where coefficients differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<(ExpRat, BigInt, BigInt)> {
        let den = lcm(self.den, other.den);
        let a = self.with_den(den);
        let b = other.with_den(den);
        let prec = a.prec.min(b.prec);
        let lo = a.val.min(b.val);
        for n in lo..prec {
            let ca = a.coeff_at(n);
            let cb = b.coeff_at(n);
            if ca != cb {
                return Some((ExpRat::new(n, den), ca.clone(), cb.clone()));
            }
        }
        None
    }

    fn coeff_at(&self, n: i64) -> BigInt {
        if n < self.val || n - self.val >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[(n - self.val) as usize].clone()
        }
    }

    /// Coefficients on the integer lattice, `q^0 .. q^{n_terms-1}`.
    /// Fails with `LatticeError` when a fractional exponent carries a
    /// nonzero coefficient.
    pub fn integer_coeffs(&self, n_terms: usize) -> Result<Vec<BigInt>> {
        if let Some((e, c)) = self
            .iter_terms()
            .find(|(e, _)| !e.is_integer())
            .map(|(e, c)| (e, c.clone()))
        {
            return Err(Error::LatticeError(format!(
                "coefficient {c} at fractional exponent q^{e}"
            )));
        }
        assert!(
            self.prec_exp() >= ExpRat::from(n_terms as i64),
            "requested {n_terms} coefficients but precision is O(q^{})",
            self.prec_exp()
        );
        Ok((0..n_terms as i64)
            .map(|n| self.coeff(ExpRat::from(n)))
            .collect())
    }

    /// Multiply in place by the binomial `1 - c*q^e` (exact unit factor).
    fn mul_unit_binomial(&mut self, c: &BigInt, e: ExpRat) {
        let den = lcm(self.den, e.den());
        let mut s = self.with_den(den);
        let off = e.numer_on(den);
        debug_assert!(off > 0);
        let len = s.coeffs.len();
        // work back to front so each source coefficient is still unscaled
        let mut coeffs = s.coeffs.clone();
        for i in 0..len {
            let tgt = i as i64 + off;
            if tgt < (s.prec - s.val) && !s.coeffs[i].is_zero() {
                let tgt = tgt as usize;
                if tgt >= coeffs.len() {
                    coeffs.resize(tgt + 1, BigInt::zero());
                }
                coeffs[tgt] -= c * &s.coeffs[i];
            }
        }
        s.coeffs = coeffs;
        *self = QSeries::raw(s.den, s.val, s.prec, s.coeffs);
    }
}

enum ConvMode {
    Auto,
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

fn mul_impl(x: &QSeries, y: &QSeries, mode: ConvMode) -> QSeries {
    let den = lcm(x.den, y.den);
    let a = x.with_den(den);
    let b = y.with_den(den);
    let prec = (a.val + b.prec).min(b.val + a.prec);
    let val = a.val + b.val;
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return QSeries::raw(den, prec, prec, Vec::new());
    }
    let len = (prec - val).max(0) as usize;
    // iterate over the operand with fewer nonzero coefficients
    let (s, d) = {
        let nz_a = a.coeffs.iter().filter(|c| !c.is_zero()).count();
        let nz_b = b.coeffs.iter().filter(|c| !c.is_zero()).count();
        if nz_a <= nz_b {
            (&a, &b)
        } else {
            (&b, &a)
        }
    };
    let sparse: Vec<(usize, &BigInt)> = s
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let coeffs = match mode {
        ConvMode::Sequential => convolve_seq(&sparse, &d.coeffs, len),
        #[cfg(feature = "parallel")]
        ConvMode::Parallel => convolve_par(&sparse, &d.coeffs, len),
        ConvMode::Auto => {
            #[cfg(feature = "parallel")]
            {
                if sparse.len() * len > 1 << 17 {
                    convolve_par(&sparse, &d.coeffs, len)
                } else {
                    convolve_seq(&sparse, &d.coeffs, len)
                }
            }
            #[cfg(not(feature = "parallel"))]
            convolve_seq(&sparse, &d.coeffs, len)
        }
    };
    QSeries::raw(den, val, prec, coeffs)
}

fn convolve_seq(sparse: &[(usize, &BigInt)], dense: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for &(i, c) in sparse {
        if i >= len {
            break;
        }
        for (j, d) in dense.iter().enumerate().take(len - i) {
            if !d.is_zero() {
                out[i + j] += c * d;
            }
        }
    }
    out
}

#[cfg(feature = "parallel")]
fn convolve_par(sparse: &[(usize, &BigInt)], dense: &[BigInt], len: usize) -> Vec<BigInt> {
    use rayon::prelude::*;
    (0..len)
        .into_par_iter()
        .map(|k| {
            let mut acc = BigInt::zero();
            for &(i, c) in sparse {
                if i > k {
                    break;
                }
                let j = k - i;
                if j < dense.len() && !dense[j].is_zero() {
                    acc += c * &dense[j];
                }
            }
            acc
        })
        .collect()
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter_terms() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "q^{e}")?;
            } else {
                write!(f, "{mag}*q^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec_exp())
    }
}

/// Truncated product `(q^a; q^step)_infty = prod_{n>=0} (1 - q^{a+n*step})`.
pub fn pochhammer(a: ExpRat, step: ExpRat, prec: ExpRat) -> Result<QSeries> {
    if a <= ExpRat::zero() {
        return Err(Error::ZeroFactor(a.to_string()));
    }
    if step <= ExpRat::zero() {
        return Err(Error::DomainError(format!(
            "pochhammer step {step} must be positive"
        )));
    }
    let mut out = QSeries::one(prec);
    let one = BigInt::one();
    let mut n = 0i64;
    loop {
        let e = a + step * n;
        if e >= prec {
            break;
        }
        out.mul_unit_binomial(&one, e);
        n += 1;
    }
    Ok(out)
}

/// Truncated product `(-q^a; q^step)_infty = prod_{n>=0} (1 + q^{a+n*step})`.
pub fn pochhammer_neg(a: ExpRat, step: ExpRat, prec: ExpRat) -> Result<QSeries> {
    if a <= ExpRat::zero() {
        return Err(Error::ZeroFactor(a.to_string()));
    }
    if step <= ExpRat::zero() {
        return Err(Error::DomainError(format!(
            "pochhammer step {step} must be positive"
        )));
    }
    let mut out = QSeries::one(prec);
    let minus_one = -BigInt::one();
    let mut n = 0i64;
    loop {
        let e = a + step * n;
        if e >= prec {
            break;
        }
        out.mul_unit_binomial(&minus_one, e);
        n += 1;
    }
    Ok(out)
}

/// `(q; q)_infty` to the given precision.
pub fn euler_product(prec: ExpRat) -> QSeries {
    pochhammer(ExpRat::from(1), ExpRat::from(1), prec).unwrap()
}

/// Dedekind eta: `q^{1/24} (q;q)_infty`.
pub fn eta(prec: ExpRat) -> QSeries {
    let e = ExpRat::new(1, 24);
    euler_product(prec - e).shift(e)
}

/// `eta(scale * tau)` to the given precision in `q`.
pub fn eta_scaled(scale: i64, prec: ExpRat) -> QSeries {
    assert!(scale >= 1);
    let inner = ExpRat::new(prec.num(), prec.den() * scale);
    eta(inner).rescale(scale).truncate(prec)
}

/// Klein form `t_{a,0}` for `0 < a < 1`:
/// `-q^{a^2/2 - a/2 + 1/12} (q^a;q)_infty (q^{1-a};q)_infty / (q;q)_infty^2`.
pub fn klein(a: ExpRat, prec: ExpRat) -> Result<QSeries> {
    if a <= ExpRat::zero() || a >= ExpRat::from(1) {
        return Err(Error::DomainError(format!(
            "klein parameter {a} must lie in (0,1)"
        )));
    }
    let ex = (a * a - a) * ExpRat::new(1, 2) + ExpRat::new(1, 12);
    let inner = prec - ex;
    let one = ExpRat::from(1);
    let p1 = pochhammer(a, one, inner)?;
    let p2 = pochhammer(one - a, one, inner)?;
    let dq = euler_product(inner).pow(2).inv(inner)?;
    Ok(p1.mul(&p2).mul(&dq).shift(ex).neg())
}

/// Canonical residue: the unique `a'` with `0 <= a' <= m` and
/// `a == +-a' (mod 2m)`.
pub fn theta_normalize(m: i64, a: i64) -> i64 {
    assert!(m >= 1);
    let r = a.rem_euclid(2 * m);
    if r > m {
        2 * m - r
    } else {
        r
    }
}

/// Theta nullwert `theta_{m,a}(scale*tau) = sum_n q^{scale*(2mn+a)^2/4m}`.
pub fn theta_series(m: i64, a: i64, scale: i64, prec: ExpRat) -> QSeries {
    assert!(m >= 1 && scale >= 1);
    let den = lcm(4 * m, prec.den());
    let p = prec.numer_on(den);
    // exponent numerator on lattice den: c * (2mn+a)^2 with c = scale*den/(4m)
    let c = scale * (den / (4 * m));
    if p <= 0 {
        return QSeries::zero(prec);
    }
    // largest |2mn+a| whose exponent stays below the precision bound
    let mut t_max = 0i64;
    while c
        .checked_mul((t_max + 1) * (t_max + 1))
        .is_some_and(|e| e < p)
    {
        t_max += 1;
    }
    let n_lo = (-t_max - a).div_euclid(2 * m) + i64::from((-t_max - a).rem_euclid(2 * m) != 0);
    let n_hi = (t_max - a).div_euclid(2 * m);
    let mut terms: std::collections::BTreeMap<i64, BigInt> = Default::default();
    for n in n_lo..=n_hi {
        let t = 2 * m * n + a;
        let e = c * t * t;
        if e < p {
            *terms.entry(e).or_default() += 1;
        }
    }
    match terms.iter().next() {
        None => QSeries::zero(prec),
        Some((&lo, _)) => {
            let mut coeffs = vec![BigInt::zero(); (p - lo) as usize];
            for (e, c) in terms {
                coeffs[(e - lo) as usize] = c;
            }
            QSeries::raw(den, lo, p, coeffs)
        }
    }
}

/// Product form of `theta_{m,b}` (Jacobi triple product):
/// `q^{b^2/4m} (q^{2m};q^{2m}) (-q^{m-b};q^{2m}) (-q^{m+b};q^{2m})`,
/// valid for `0 < b < m`; the boundary residues `b = 0` and `b = m` fall
/// back to the series definition.
pub fn theta_product(m: i64, b: i64, scale: i64, prec: ExpRat) -> Result<QSeries> {
    assert!(m >= 1 && scale >= 1);
    if b < 0 || b > m {
        return Err(Error::DomainError(format!(
            "theta_product residue {b} outside [0, {m}]"
        )));
    }
    if b == 0 || b == m {
        return Ok(theta_series(m, b, scale, prec));
    }
    let ex = ExpRat::new(scale * b * b, 4 * m);
    let inner = prec - ex;
    let step = ExpRat::from(2 * m * scale);
    let p1 = pochhammer(step, step, inner)?;
    let p2 = pochhammer_neg(ExpRat::from(scale * (m - b)), step, inner)?;
    let p3 = pochhammer_neg(ExpRat::from(scale * (m + b)), step, inner)?;
    Ok(p1.mul(&p2).mul(&p3).shift(ex))
}

/// Symbolic theta nullwert atom `theta_{m,a}(scale * tau)`.
///
/// Construction canonicalizes: the scale is folded into the indices via
/// `theta_{m,a}(k tau) = theta_{km,ka}(tau)` and the residue is reduced
/// to `0 <= a <= m` via `theta_{m,2mk+-a} = theta_{m,a}`, so stored
/// atoms always have `scale = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThetaSymbol {
    pub m: i64,
    pub a: i64,
    pub scale: i64,
}

impl ThetaSymbol {
    pub fn new(m: i64, a: i64, scale: i64) -> Self {
        assert!(m >= 1 && scale >= 1);
        let m = m * scale;
        let a = theta_normalize(m, a * scale);
        ThetaSymbol { m, a, scale: 1 }
    }

    pub fn eval(&self, prec: ExpRat) -> QSeries {
        theta_series(self.m, self.a, self.scale, prec)
    }

    /// Leading q-exponent `a^2/4m` (times scale).
    pub fn val_exp(&self) -> ExpRat {
        ExpRat::new(self.scale * self.a * self.a, 4 * self.m)
    }
}

impl fmt::Display for ThetaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 1 {
            write!(f, "theta_{{{},{}}}", self.m, self.a)
        } else {
            write!(f, "theta_{{{},{}}}({}tau)", self.m, self.a, self.scale)
        }
    }
}
