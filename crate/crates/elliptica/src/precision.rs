//! Working-precision arithmetic: a small real-number abstraction with two
//! backends (native `f64` and double-double with ~106 significand bits), a
//! complex type built on top of it, and the precision policy that the rest
//! of the engine threads through every evaluation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Real-number backend for the evaluation kernel.
///
/// Only the operations the kernel actually needs are required: field
/// arithmetic, comparisons, square root (for complex moduli) and exact
/// widening from `f64`. Transcendentals are not needed; every formula in
/// the engine is built from products, quotients and integer powers.
pub trait Real:
    Copy
    + PartialEq
    + PartialOrd
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + fmt::Debug
    + 'static
{
    const BITS: u32;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn zero() -> Self;
    fn one() -> Self;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn is_finite(self) -> bool;
    /// Exact bit pattern, for memo keys.
    fn bits(self) -> (u64, u64);
}

impl Real for f64 {
    const BITS: u32 = 53;

    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn one() -> Self {
        1.0
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    #[inline]
    fn bits(self) -> (u64, u64) {
        (self.to_bits(), 0)
    }
}

/// Unevaluated sum `hi + lo` of two doubles with `|lo| <= ulp(hi)/2`,
/// giving roughly 106 significand bits.
///
/// The error-free transformations below are the classical Dekker/Knuth
/// ones; products use `f64::mul_add`, which is correctly rounded.
#[derive(Copy, Clone, Debug, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (s, e) = quick_two_sum(p1, p2);
        Dd { hi: s, lo: e }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Dd) -> Dd {
        // One Newton refinement of the f64 quotient.
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e) + Dd::from_f64(q3)
    }
}

impl PartialEq for Dd {
    #[inline]
    fn eq(&self, other: &Dd) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    #[inline]
    fn partial_cmp(&self, other: &Dd) -> Option<std::cmp::Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(std::cmp::Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Real for Dd {
    const BITS: u32 = 106;

    #[inline]
    fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
    #[inline]
    fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }
    #[inline]
    fn one() -> Self {
        Dd { hi: 1.0, lo: 0.0 }
    }
    #[inline]
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
    fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::zero();
        }
        // Karp's trick: x ~ sqrt(a) in f64, then one half-step.
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let axd = Dd::from_f64(ax);
        Dd::from_f64(ax) + Dd::from_f64((self - axd * axd).hi * (x * 0.5))
    }
    #[inline]
    fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
    #[inline]
    fn bits(self) -> (u64, u64) {
        (self.hi.to_bits(), self.lo.to_bits())
    }
}

/// Complex number over a [`Real`] backend.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Cplx<R: Real> {
    pub re: R,
    pub im: R,
}

/// Shorthand for the sampling-precision complex type.
pub type C64 = Cplx<f64>;

impl<R: Real> Cplx<R> {
    #[inline]
    pub fn new(re: R, im: R) -> Self {
        Cplx { re, im }
    }

    #[inline]
    pub fn zero() -> Self {
        Cplx { re: R::zero(), im: R::zero() }
    }

    #[inline]
    pub fn one() -> Self {
        Cplx { re: R::one(), im: R::zero() }
    }

    #[inline]
    pub fn from_f64(re: f64, im: f64) -> Self {
        Cplx { re: R::from_f64(re), im: R::from_f64(im) }
    }

    /// Exact widening from the sampling precision.
    #[inline]
    pub fn widen(z: C64) -> Self {
        Cplx::from_f64(z.re, z.im)
    }

    #[inline]
    pub fn to_c64(self) -> C64 {
        Cplx { re: self.re.to_f64(), im: self.im.to_f64() }
    }

    /// Modulus.
    #[inline]
    pub fn abs(self) -> R {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.re == R::zero() && self.im == R::zero()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn conj(self) -> Self {
        Cplx { re: self.re, im: -self.im }
    }

    #[inline]
    pub fn inv(self) -> Self {
        let d = self.re * self.re + self.im * self.im;
        Cplx { re: self.re / d, im: -self.im / d }
    }

    /// Integer power by binary exponentiation; negative exponents invert.
    pub fn powi(self, e: i64) -> Self {
        if e == 0 {
            return Cplx::one();
        }
        let (mut base, mut n) = if e < 0 { (self.inv(), (-e) as u64) } else { (self, e as u64) };
        let mut acc = Cplx::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl<R: Real> Add for Cplx<R> {
    type Output = Cplx<R>;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Cplx { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<R: Real> Sub for Cplx<R> {
    type Output = Cplx<R>;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Cplx { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<R: Real> Mul for Cplx<R> {
    type Output = Cplx<R>;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Cplx {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl<R: Real> Div for Cplx<R> {
    type Output = Cplx<R>;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<R: Real> Neg for Cplx<R> {
    type Output = Cplx<R>;
    #[inline]
    fn neg(self) -> Self {
        Cplx { re: -self.re, im: -self.im }
    }
}

impl C64 {
    /// Polar construction at sampling precision.
    pub fn from_polar(modulus: f64, phase: f64) -> C64 {
        Cplx { re: modulus * phase.cos(), im: modulus * phase.sin() }
    }
}

/// Numeric policy: working precision, theta-product truncation target and
/// the threshold below which a denominator factor counts as a pole.
#[derive(Copy, Clone, Debug)]
pub struct PrecisionPolicy {
    pub working_bits: u32,
    pub theta_truncation_eps: f64,
    pub pole_threshold: f64,
}

impl PrecisionPolicy {
    /// 53-bit policy (native f64).
    pub fn double() -> Self {
        PrecisionPolicy {
            working_bits: 53,
            theta_truncation_eps: (2.0f64).powi(-45),
            pole_threshold: 1e-8,
        }
    }

    /// >=106-bit policy (double-double backend).
    pub fn quad() -> Self {
        PrecisionPolicy {
            working_bits: 106,
            theta_truncation_eps: (2.0f64).powi(-98),
            pole_threshold: 1e-8,
        }
    }

    /// Policy for a requested bit count; anything above 53 selects the
    /// double-double backend.
    pub fn for_bits(bits: u32) -> Self {
        if bits <= 53 {
            PrecisionPolicy::double()
        } else {
            PrecisionPolicy::quad()
        }
    }

    /// Relative tolerance for snapping theta to exact zero at its lattice
    /// points a = p^m. Structural zeros (arguments that are p^m by
    /// construction) are exact up to argument roundoff, so the snap sits
    /// four decades above working precision -- far below anything a
    /// sampled argument reaches, and far above accumulated rounding.
    pub fn zero_snap_rel(&self) -> f64 {
        (2.0f64).powi(-(self.working_bits as i32)) * 1e4
    }

    /// The eps invariant: truncation target at least 8 bits below working
    /// precision.
    pub fn is_valid(&self) -> bool {
        self.working_bits >= 53
            && self.theta_truncation_eps > 0.0
            && self.theta_truncation_eps <= (2.0f64).powi(-(self.working_bits as i32) + 8)
            && self.pole_threshold > 0.0
    }
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy::double()
    }
}
