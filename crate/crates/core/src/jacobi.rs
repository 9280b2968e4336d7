//! Two-variable truncated Fourier-Jacobi expansions in `(q, zeta)`.
//!
//! A [`ZetaQSeries`] is a finite map from zeta-exponents on the grid
//! `(1/2)*Z` (stored as numerator over 2) to exact [`QSeries`]
//! coefficients, all truncated at a uniform q-precision. This houses the
//! expansion of `-theta(z+1/2; tau)`, its powers, the components
//! `vartheta_{m,a}(z; tau)`, and the Andrews product whose constant
//! zeta-term is `CPhi_k(q)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exprat::ExpRat;
use crate::qseries::{euler_product, QSeries};

/// Map from `2 * (zeta exponent)` to the q-series coefficient.
/// Entries that are zero to the declared q-precision are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ZetaQSeriesRepr", from = "ZetaQSeriesRepr")]
pub struct ZetaQSeries {
    qprec: ExpRat,
    terms: BTreeMap<i64, QSeries>,
}

#[derive(Serialize, Deserialize, Clone)]
struct ZetaQSeriesRepr {
    qprec: ExpRat,
    terms: Vec<ZetaTermRepr>,
}

#[derive(Serialize, Deserialize, Clone)]
struct ZetaTermRepr {
    zeta_num_over_2: i64,
    qseries: QSeries,
}

impl From<ZetaQSeries> for ZetaQSeriesRepr {
    fn from(z: ZetaQSeries) -> Self {
        ZetaQSeriesRepr {
            qprec: z.qprec,
            terms: z
                .terms
                .into_iter()
                .map(|(k, s)| ZetaTermRepr {
                    zeta_num_over_2: k,
                    qseries: s,
                })
                .collect(),
        }
    }
}

impl From<ZetaQSeriesRepr> for ZetaQSeries {
    fn from(r: ZetaQSeriesRepr) -> Self {
        let mut z = ZetaQSeries::zero(r.qprec);
        for t in r.terms {
            z.insert(t.zeta_num_over_2, t.qseries);
        }
        z
    }
}

impl ZetaQSeries {
    pub fn zero(qprec: ExpRat) -> Self {
        ZetaQSeries {
            qprec,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity `zeta^0 * 1`.
    pub fn one(qprec: ExpRat) -> Self {
        let mut z = ZetaQSeries::zero(qprec);
        z.insert(0, QSeries::one(qprec));
        z
    }

    pub fn qprec(&self) -> ExpRat {
        self.qprec
    }

    /// Stored zeta-exponents (as numerators over 2) in increasing order.
    pub fn zeta_keys(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &QSeries)> {
        self.terms.iter().map(|(&k, s)| (k, s))
    }

    fn insert(&mut self, key: i64, s: QSeries) {
        let s = s.truncate(self.qprec);
        if !s.is_zero_to_prec() {
            self.terms.insert(key, s);
        }
    }

    fn accumulate(&mut self, key: i64, s: QSeries) {
        let s = match self.terms.remove(&key) {
            Some(prev) => prev.add(&s),
            None => s,
        };
        self.insert(key, s);
    }

    /// The q-series at zeta-exponent `r` (`key` = 2r), zero to precision
    /// when absent.
    pub fn coeff_zeta(&self, key: i64) -> QSeries {
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.qprec))
    }

    /// Multiply in place by `1 + zeta^{delta/2} q^e`.
    fn mul_binomial(&mut self, delta: i64, e: ExpRat) {
        let shifted: Vec<(i64, QSeries)> = self
            .terms
            .iter()
            .map(|(&k, s)| (k + delta, s.shift(e)))
            .collect();
        for (k, s) in shifted {
            self.accumulate(k, s);
        }
    }

    /// Convolution in zeta with exact q-series products; the result takes
    /// the smaller q-precision.
    pub fn mul(&self, other: &ZetaQSeries) -> ZetaQSeries {
        let qprec = self.qprec.min(other.qprec);
        let pairs: Vec<(i64, &QSeries, &QSeries)> = self
            .terms
            .iter()
            .flat_map(|(&ka, sa)| other.terms.iter().map(move |(&kb, sb)| (ka + kb, sa, sb)))
            .collect();
        let mut out = ZetaQSeries::zero(qprec);
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            let mut grouped: BTreeMap<i64, Vec<(&QSeries, &QSeries)>> = BTreeMap::new();
            for (k, a, b) in pairs {
                grouped.entry(k).or_default().push((a, b));
            }
            let computed: Vec<(i64, QSeries)> = grouped
                .into_iter()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(k, ps)| {
                    let mut acc: Option<QSeries> = None;
                    for (a, b) in ps {
                        let p = a.mul_sequential(b);
                        acc = Some(match acc {
                            None => p,
                            Some(t) => t.add(&p),
                        });
                    }
                    (k, acc.unwrap())
                })
                .collect();
            for (k, s) in computed {
                out.insert(k, s);
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            for (k, a, b) in pairs {
                out.accumulate(k, a.mul(b));
            }
        }
        out
    }

    /// `self^k` by binary powering.
    pub fn pow(&self, k: u32) -> ZetaQSeries {
        assert!(k >= 1, "pow requires a positive exponent");
        let mut base = self.clone();
        let mut k = k;
        let mut acc: Option<ZetaQSeries> = None;
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

    /// Multiply every coefficient by the one-variable series `s`.
    pub fn scale_series(&self, s: &QSeries) -> ZetaQSeries {
        let mut out = ZetaQSeries::zero(self.qprec);
        for (&k, t) in &self.terms {
            out.insert(k, t.mul(s));
        }
        out
    }

    pub fn add(&self, other: &ZetaQSeries) -> ZetaQSeries {
        let mut out = ZetaQSeries::zero(self.qprec.min(other.qprec));
        for (&k, s) in &self.terms {
            out.accumulate(k, s.clone());
        }
        for (&k, s) in &other.terms {
            out.accumulate(k, s.clone());
        }
        out
    }

    /// First `(zeta, q)` position below the common q-precision where the
    /// two expansions differ.
    pub fn first_difference(&self, other: &ZetaQSeries) -> Option<(i64, ExpRat, BigInt, BigInt)> {
        let qprec = self.qprec.min(other.qprec);
        let keys: std::collections::BTreeSet<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for k in keys {
            let a = self.coeff_zeta(k).truncate(qprec);
            let b = other.coeff_zeta(k).truncate(qprec);
            if let Some((e, ca, cb)) = a.first_difference(&b) {
                return Some((k, e, ca, cb));
            }
        }
        None
    }

    pub fn eq_to_prec(&self, other: &ZetaQSeries) -> bool {
        self.first_difference(other).is_none()
    }
}

/// Fourier expansion of `-theta(z + 1/2; tau)` from the sum side:
/// `sum_n q^{(n+1/2)^2/2} zeta^{n+1/2}`.
pub fn jtheta_half(qprec: ExpRat) -> ZetaQSeries {
    let mut out = ZetaQSeries::zero(qprec);
    let mut n = 0i64;
    loop {
        // exponent (2n+1)^2/8 for zeta^{n+1/2} and zeta^{-n-1/2}
        let e = ExpRat::new((2 * n + 1) * (2 * n + 1), 8);
        if e >= qprec {
            break;
        }
        let mono = QSeries::monomial(BigInt::one(), e, qprec);
        out.insert(2 * n + 1, mono.clone());
        out.insert(-(2 * n + 1), mono);
        n += 1;
    }
    out
}

/// The same function from the product side of the Jacobi triple product:
/// `q^{1/8} zeta^{-1/2} (q;q)_infty prod_{n>=1} (1 + zeta q^n)(1 + zeta^{-1} q^{n-1})`.
pub fn jtheta_triple_product(qprec: ExpRat) -> ZetaQSeries {
    let eighth = ExpRat::new(1, 8);
    let mut out = ZetaQSeries::zero(qprec);
    out.insert(-1, euler_product(qprec - eighth).shift(eighth));
    // binomial factors in increasing q-order keeps the zeta window tight;
    // the zeta^{-1/2} prefactor pairs with (1 + zeta q^0)
    let mut n = 0i64;
    while ExpRat::from(n) < qprec {
        out.mul_binomial(2, ExpRat::from(n));
        if n >= 1 {
            out.mul_binomial(-2, ExpRat::from(n));
        }
        n += 1;
    }
    out
}

/// Theta component `vartheta_{m,a}(z;tau) = sum_n q^{(2mn+a)^2/4m} zeta^{2mn+a}`
/// with `m = twice_m/2` and `a = twice_a/2`; integer and half-integer
/// index families both live on a single residue class.
pub fn theta_component(twice_m: i64, twice_a: i64, qprec: ExpRat) -> Result<ZetaQSeries> {
    assert!(twice_m >= 1);
    if (twice_m - twice_a).rem_euclid(2) != 0 {
        return Err(Error::GridMismatch { twice_m, twice_a });
    }
    // the component depends on a only mod 2m; reduce so the two scan
    // directions below see monotone q-exponents
    let twice_a = twice_a.rem_euclid(2 * twice_m);
    let mut out = ZetaQSeries::zero(qprec);
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        loop {
            // zeta-exponent key 2r = 2*twice_m*n + twice_a; q-exponent r^2/4m
            let key = 2 * twice_m * n + twice_a;
            let e = ExpRat::new(key * key, 8 * twice_m);
            if e >= qprec {
                break;
            }
            out.insert(key, QSeries::monomial(BigInt::one(), e, qprec));
            n += dir;
        }
    }
    Ok(out)
}

/// Andrews' product `(-zeta q; q)_infty^k (-zeta^{-1}; q)_infty^k`
/// truncated at `qprec`; its constant zeta-term is `CPhi_k(q)`.
pub fn andrews_product(k: u32, qprec: ExpRat) -> ZetaQSeries {
    assert!(k >= 1);
    let mut out = ZetaQSeries::one(qprec);
    let mut n = 0i64;
    while ExpRat::from(n) < qprec {
        for _ in 0..k {
            out.mul_binomial(-2, ExpRat::from(n));
            if n >= 1 {
                out.mul_binomial(2, ExpRat::from(n));
            }
        }
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{pochhammer, theta_series};
    use num_traits::Zero;

    fn int(n: i64) -> ExpRat {
        ExpRat::from(n)
    }

    #[test]
    fn jtheta_half_low_terms() {
        let f = jtheta_half(int(3));
        let eighth = ExpRat::new(1, 8);
        assert_eq!(f.coeff_zeta(1).coeff(eighth), BigInt::one());
        assert_eq!(f.coeff_zeta(-1).coeff(eighth), BigInt::one());
        assert_eq!(f.coeff_zeta(3).coeff(ExpRat::new(9, 8)), BigInt::one());
        // symmetry r <-> -r
        for k in f.zeta_keys().collect::<Vec<_>>() {
            assert!(f.coeff_zeta(k).eq_to_prec(&f.coeff_zeta(-k)));
        }
    }

    #[test]
    fn triple_product_matches_sum() {
        let qprec = int(20);
        let a = jtheta_half(qprec);
        let b = jtheta_triple_product(qprec);
        assert!(
            a.eq_to_prec(&b),
            "first difference: {:?}",
            a.first_difference(&b)
        );
    }

    #[test]
    fn triple_product_tiny_precision() {
        // just above q^{1/8} only zeta^{+-1/2} survive
        let f = jtheta_triple_product(ExpRat::new(1, 4));
        assert_eq!(f.zeta_keys().collect::<Vec<_>>(), vec![-1, 1]);
    }

    #[test]
    fn component_examples() {
        let f = theta_component(2, 0, int(3)).unwrap();
        assert_eq!(f.coeff_zeta(0).coeff(ExpRat::zero()), BigInt::one());
        assert_eq!(f.coeff_zeta(4).coeff(int(1)), BigInt::one());
        assert_eq!(f.coeff_zeta(-4).coeff(int(1)), BigInt::one());
        // vartheta_{3,3}: coefficient of zeta^3 is q^{3/4}
        let f = theta_component(6, 6, int(2)).unwrap();
        assert_eq!(f.coeff_zeta(6).coeff(ExpRat::new(3, 4)), BigInt::one());
        // vartheta_{7/2,7/2}: coefficient of zeta^{7/2} is q^{7/8}
        let f = theta_component(7, 7, int(2)).unwrap();
        assert_eq!(f.coeff_zeta(7).coeff(ExpRat::new(7, 8)), BigInt::one());
        // vartheta_{1,1}: coefficient of zeta^1 is q^{1/4}
        let f = theta_component(2, 2, int(2)).unwrap();
        assert_eq!(f.coeff_zeta(2).coeff(ExpRat::new(1, 4)), BigInt::one());
    }

    #[test]
    fn component_grid_mismatch() {
        assert!(theta_component(2, 1, int(3)).is_err());
        assert!(theta_component(3, 2, int(3)).is_err());
    }

    #[test]
    fn mul_identity_and_monomials() {
        let f = jtheta_half(int(5));
        assert!(f.mul(&ZetaQSeries::one(int(5))).eq_to_prec(&f));
        let mut a = ZetaQSeries::zero(int(5));
        a.insert(
            1,
            QSeries::monomial(BigInt::one(), ExpRat::new(1, 8), int(5)),
        );
        let sq = a.mul(&a);
        assert_eq!(sq.coeff_zeta(2).coeff(ExpRat::new(1, 4)), BigInt::one());
    }

    #[test]
    fn square_is_lemma_3_2() {
        // theta(z+1/2)^2 = theta_{1,1} vartheta_{1,0} + theta_{1,0} vartheta_{1,1}
        let qprec = int(15);
        let lhs = jtheta_half(qprec).pow(2);
        let t11 = theta_series(1, 1, 1, qprec);
        let t10 = theta_series(1, 0, 1, qprec);
        let rhs = theta_component(2, 0, qprec)
            .unwrap()
            .scale_series(&t11)
            .add(&theta_component(2, 2, qprec).unwrap().scale_series(&t10));
        assert!(
            lhs.eq_to_prec(&rhs),
            "first difference: {:?}",
            lhs.first_difference(&rhs)
        );
    }

    #[test]
    fn pow_window_and_valuation() {
        // zeta-exponents of jtheta_half^k lie in k/2 + Z, with minimal
        // q-valuation k/8 at zeta^{+-k/2}
        for k in [2u32, 3, 5] {
            let f = jtheta_half(int(6)).pow(k);
            for key in f.zeta_keys() {
                assert_eq!((key - k as i64).rem_euclid(2), 0);
            }
            let center = f.coeff_zeta(k as i64);
            assert_eq!(center.val_exp(), ExpRat::new(k as i64, 8));
        }
    }

    #[test]
    fn andrews_constant_term_k1() {
        let f = andrews_product(1, int(12));
        let c = f.coeff_zeta(0);
        let inv = euler_product(int(12)).inv(int(12)).unwrap();
        assert!(
            c.eq_to_prec(&inv),
            "first difference: {:?}",
            c.first_difference(&inv)
        );
    }

    #[test]
    fn andrews_k2_matches_product_formula() {
        // Andrews' closed form (q^2;q^4) / ((q;q^2)^4 (q^4;q^4))
        let p = int(20);
        let c = andrews_product(2, p).coeff_zeta(0);
        let num = pochhammer(int(2), int(4), p).unwrap();
        let den = pochhammer(int(1), int(2), p)
            .unwrap()
            .pow(4)
            .mul(&pochhammer(int(4), int(4), p).unwrap());
        let expect = num.mul(&den.inv(p).unwrap());
        assert!(
            c.eq_to_prec(&expect),
            "first difference: {:?}",
            c.first_difference(&expect)
        );
        assert_eq!(c.coeff(int(1)), BigInt::from(4));
        assert_eq!(c.coeff(int(2)), BigInt::from(9));
        assert_eq!(c.coeff(int(3)), BigInt::from(20));
    }

    #[test]
    fn coeff_outside_window_is_zero() {
        let f = jtheta_half(int(4));
        assert!(f.coeff_zeta(99).is_zero_to_prec());
        assert!(f.coeff_zeta(0).is_zero_to_prec());
        let _ = BigInt::zero();
    }

    #[test]
    fn serde_roundtrip() {
        let f = jtheta_half(int(4));
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("zeta_num_over_2"));
        let back: ZetaQSeries = serde_json::from_str(&json).unwrap();
        assert!(f.eq_to_prec(&back));
        assert_eq!(f, back);
    }
}
