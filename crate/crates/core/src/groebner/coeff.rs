use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `a + b√2` of ℚ(√2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffExt {
    pub a: BigRational,
    pub b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl CoeffExt {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        CoeffExt { a, b }
    }

    pub fn from_ratios(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        CoeffExt { a: rat(a_num, a_den), b: rat(b_num, b_den) }
    }

    pub fn integer(n: i64) -> Self {
        Self::from_ratios(n, 1, 0, 1)
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::from_ratios(num, den, 0, 1)
    }

    /// `√½ = √2 / 2`.
    pub fn sqrt_half() -> Self {
        Self::from_ratios(0, 1, 1, 2)
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// `(a + b√2)⁻¹ = (a − b√2)/(a² − 2b²)`; the norm never vanishes on
    /// nonzero elements because √2 is irrational.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b;
        Some(CoeffExt { a: &self.a / &norm, b: -&self.b / &norm })
    }

    /// Components as `[a_num, a_den, b_num, b_den]`, when they fit in `i64`.
    pub fn to_quadruple(&self) -> Option<[i64; 4]> {
        use num_traits::ToPrimitive;
        Some([
            self.a.numer().to_i64()?,
            self.a.denom().to_i64()?,
            self.b.numer().to_i64()?,
            self.b.denom().to_i64()?,
        ])
    }
}

impl Add for &CoeffExt {
    type Output = CoeffExt;
    fn add(self, o: &CoeffExt) -> CoeffExt {
        CoeffExt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &CoeffExt {
    type Output = CoeffExt;
    fn sub(self, o: &CoeffExt) -> CoeffExt {
        CoeffExt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &CoeffExt {
    type Output = CoeffExt;
    fn mul(self, o: &CoeffExt) -> CoeffExt {
        let two = BigRational::from_integer(BigInt::from(2));
        CoeffExt {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Neg for &CoeffExt {
    type Output = CoeffExt;
    fn neg(self) -> CoeffExt {
        CoeffExt { a: -&self.a, b: -&self.b }
    }
}

impl fmt::Display for CoeffExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "({} {} {}*sqrt2)", self.a, sign, self.b.abs())
            }
        }
    }
}
