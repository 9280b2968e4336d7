//! Rational exponents for series on a lattice (1/D)*Z.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a.abs(), b.abs())
}

pub(crate) fn lcm(a: i64, b: i64) -> i64 {
    let g = gcd(a, b);
    if g == 0 {
        0
    } else {
        (a / g).checked_mul(b).expect("lattice lcm overflow").abs()
    }
}

/// A rational exponent `num/den` with `den >= 1` and `gcd(|num|, den) = 1`.
/// Zero is stored as `0/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpRat {
    num: i64,
    den: i64,
}

impl ExpRat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return ExpRat { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        ExpRat {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        ExpRat { num: 0, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Numerator after rescaling onto the lattice with denominator `den`.
    /// Panics if the exponent does not lie on that lattice.
    pub fn numer_on(&self, den: i64) -> i64 {
        debug_assert!(den >= 1);
        assert!(
            den % self.den == 0,
            "exponent {self} not on lattice 1/{den}"
        );
        self.num * (den / self.den)
    }

    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn recip_times(&self, k: i64) -> ExpRat {
        // k / self
        assert!(self.num != 0);
        ExpRat::new(k * self.den, self.num)
    }
}

impl From<i64> for ExpRat {
    fn from(n: i64) -> Self {
        ExpRat { num: n, den: 1 }
    }
}

impl Add for ExpRat {
    type Output = ExpRat;
    fn add(self, rhs: ExpRat) -> ExpRat {
        let d = lcm(self.den, rhs.den);
        ExpRat::new(self.num * (d / self.den) + rhs.num * (d / rhs.den), d)
    }
}

impl Sub for ExpRat {
    type Output = ExpRat;
    fn sub(self, rhs: ExpRat) -> ExpRat {
        self + (-rhs)
    }
}

impl Neg for ExpRat {
    type Output = ExpRat;
    fn neg(self) -> ExpRat {
        ExpRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for ExpRat {
    type Output = ExpRat;
    fn mul(self, rhs: ExpRat) -> ExpRat {
        let p = (self.num as i128) * (rhs.num as i128);
        let q = (self.den as i128) * (rhs.den as i128);
        let g = num_integer::gcd(p.abs(), q);
        let (p, q) = (p / g, q / g);
        assert!(
            p >= i64::MIN as i128 && p <= i64::MAX as i128 && q <= i64::MAX as i128,
            "exponent overflow"
        );
        ExpRat::new(p as i64, q as i64)
    }
}

impl Mul<i64> for ExpRat {
    type Output = ExpRat;
    fn mul(self, rhs: i64) -> ExpRat {
        ExpRat::new(
            self.num.checked_mul(rhs).expect("exponent overflow"),
            self.den,
        )
    }
}

impl PartialOrd for ExpRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExpRat {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.num as i128) * (other.den as i128);
        let rhs = (other.num as i128) * (self.den as i128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ExpRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
