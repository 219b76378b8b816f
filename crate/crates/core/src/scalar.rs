//! Exact coefficient fields.
//!
//! Every kernel in the crate is generic over [`Scalar`]. Two implementations
//! exist: arbitrary-precision rationals (real mode) and Gaussian rationals
//! (complex mode). Both keep their parts in lowest terms after every
//! operation, so `==` is exact.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// Exact rational number.
pub type Rational = BigRational;

/// Exact Gaussian rational `re + im·i`.
pub type GaussRational = Complex<BigRational>;

/// Coefficient field of every tensor in the crate.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Eq + fmt::Debug + Send + Sync + 'static
{
    /// `true` for the Gaussian-rational field.
    const COMPLEX: bool;

    fn from_rational(q: Rational) -> Self;

    /// Builds a value from real and imaginary parts. Returns `None` when the
    /// field cannot hold a nonzero imaginary part.
    fn from_parts(re: Rational, im: Rational) -> Option<Self>;

    fn re(&self) -> Rational;
    fn im(&self) -> Rational;
    fn conj(&self) -> Self;

    /// The imaginary unit, when the field has one.
    fn imag_unit() -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Canonical text form, e.g. `-3/4`, `2`, `1/2+3i`, `-i`.
    fn render(&self) -> String {
        render_parts(&self.re(), &self.im())
    }
}

impl Scalar for Rational {
    const COMPLEX: bool = false;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        im.is_zero().then_some(re)
    }

    fn re(&self) -> Rational {
        self.clone()
    }

    fn im(&self) -> Rational {
        Rational::zero()
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn imag_unit() -> Option<Self> {
        None
    }
}

impl Scalar for GaussRational {
    const COMPLEX: bool = true;

    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }

    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        Some(Complex::new(re, im))
    }

    fn re(&self) -> Rational {
        self.re.clone()
    }

    fn im(&self) -> Rational {
        self.im.clone()
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn imag_unit() -> Option<Self> {
        Some(Complex::new(Rational::zero(), Rational::one()))
    }
}

fn render_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Shared formatter for both fields. The imaginary coefficient 1 is elided.
pub fn render_parts(re: &Rational, im: &Rational) -> String {
    if im.is_zero() {
        return render_rational(re);
    }
    let imag = if im.abs().is_one() {
        String::new()
    } else {
        render_rational(&im.abs())
    };
    let sign = if im.is_negative() { "-" } else { "+" };
    if re.is_zero() {
        let lead = if im.is_negative() { "-" } else { "" };
        format!("{lead}{imag}i")
    } else {
        format!("{}{sign}{imag}i", render_rational(re))
    }
}

/// Embeds a real value into any field.
pub fn embed<S: Scalar>(q: &Rational) -> S {
    S::from_rational(q.clone())
}
