use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Commutative ring operations used by the generic polynomial and
/// determinant code.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Division that is only asked for when the quotient exists in the ring.
pub trait ExactDiv: Ring {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

/// A Gaussian integer `a + bi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn norm_sqr(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Scales the value down by `scale` (a power of two chosen by the caller)
    /// and converts to floating point without overflow.
    pub fn to_complex_scaled(&self, log2_scale: u64) -> Complex64 {
        let f = |x: &BigInt| {
            let bits = x.bits();
            if bits <= 1000 && log2_scale <= 1000 {
                x.to_f64().unwrap_or(0.0) * 2f64.powi(-(log2_scale as i32))
            } else {
                let shift = bits.saturating_sub(60).min(log2_scale);
                let y: BigInt = x >> shift;
                y.to_f64().unwrap_or(0.0) * 2f64.powi(-((log2_scale - shift) as i32))
            }
        };
        Complex64::new(f(&self.re), f(&self.im))
    }

    pub fn bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}i)", self.re, self.im)
    }
}

impl Ring for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl ExactDiv for GaussInt {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if d.im.is_zero() {
            let (qr, rr) = self.re.div_rem(&d.re);
            let (qi, ri) = self.im.div_rem(&d.re);
            return (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi });
        }
        let n = d.norm_sqr();
        let num = self.mul(&d.conj());
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }
}

/// A Gaussian rational `a + bi` with `a, b ∈ ℚ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`; `None` on a zero denominator.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Option<Self> {
        if re_den == 0 || im_den == 0 {
            return None;
        }
        Some(GaussRat {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        })
    }

    pub fn i() -> Self {
        GaussRat::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// Least common multiple of the real and imaginary denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// The value times `scale`, which must clear both denominators.
    pub fn to_gauss_int(&self, scale: &BigInt) -> GaussInt {
        let re = &self.re * BigRational::from_integer(scale.clone());
        let im = &self.im * BigRational::from_integer(scale.clone());
        debug_assert!(re.is_integer() && im.is_integer());
        GaussInt {
            re: re.to_integer(),
            im: im.to_integer(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Nearest Gaussian rational with denominator `2^53`-ish, exactly
    /// representing the floating-point input.
    pub fn from_complex(z: Complex64) -> Option<Self> {
        Some(GaussRat {
            re: BigRational::from_float(z.re)?,
            im: BigRational::from_float(z.im)?,
        })
    }

    /// `[re_num, re_den, im_num, im_den]`, or `None` if a part does not fit
    /// in 64 bits.
    pub fn to_parts(&self) -> Option<[i64; 4]> {
        Some([
            self.re.numer().to_i64()?,
            self.re.denom().to_i64()?,
            self.im.numer().to_i64()?,
            self.im.denom().to_i64()?,
        ])
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{sign}{}i)", self.re, self.im.abs())
            }
        }
    }
}

impl Ring for GaussRat {
    fn zero() -> Self {
        GaussRat::from_ints(0, 0)
    }
    fn one() -> Self {
        GaussRat::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl ExactDiv for GaussRat {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self.mul(&d.inv()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_int_division() {
        let a = GaussInt::new(3, 4);
        let b = GaussInt::new(1, -2);
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&b), Some(a.clone()));
        assert_eq!(p.exact_div(&a), Some(b));
        assert_eq!(GaussInt::new(1, 0).exact_div(&GaussInt::new(1, 1)), None);
        assert_eq!(GaussInt::new(4, 6).exact_div(&GaussInt::new(2, 0)), Some(GaussInt::new(2, 3)));
    }

    #[test]
    fn gauss_rat_field() {
        let a = GaussRat::from_parts(1, 2, -3, 4).unwrap();
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), <GaussRat as Ring>::one());
        assert_eq!(a.denominator_lcm(), BigInt::from(4));
        assert_eq!(a.to_gauss_int(&BigInt::from(4)), GaussInt::new(2, -3));
        assert_eq!(a.to_parts(), Some([1, 2, -3, 4]));
        assert!(GaussRat::from_parts(1, 0, 0, 1).is_none());
        assert_eq!(format!("{a}"), "(1/2-3/4i)");
    }

    #[test]
    fn scaled_conversion() {
        let big = GaussInt::new(BigInt::from(1) << 2000u32, BigInt::from(-3) << 1990u32);
        let z = big.to_complex_scaled(2000);
        assert!((z.re - 1.0).abs() < 1e-15);
        assert!((z.im + 3.0 / 1024.0).abs() < 1e-15);
    }
}
