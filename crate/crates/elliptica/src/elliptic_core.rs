//! Numeric kernel: extended products, modified Jacobi theta functions and
//! q,p-shifted factorials, together with the structural-zero bookkeeping
//! that makes lower-triangularity and natural termination exact.
//!
//! All series summands in this crate are quotients of theta factors. The
//! [`Factors`] builder accumulates numerator and denominator products while
//! tracking exact zeros on either side, so a zero in a denominator position
//! of the form `1/(q;q,p)_k` with `k < 0` short-circuits the whole term to
//! zero (the triangularity mechanism) instead of producing an infinity.

use std::cell::Cell;

use crate::error::{Error, Result};
use crate::precision::{Cplx, PrecisionPolicy, Real};

/// Outcome of evaluating a quotient of theta products: an ordinary finite
/// value, or the distinguished structural zero.
#[derive(Copy, Clone, Debug)]
pub enum Value<R: Real> {
    Finite(Cplx<R>),
    StructuralZero,
}

impl<R: Real> Value<R> {
    #[inline]
    pub fn cplx(self) -> Cplx<R> {
        match self {
            Value::Finite(z) => z,
            Value::StructuralZero => Cplx::zero(),
        }
    }

    #[inline]
    pub fn is_structural_zero(self) -> bool {
        matches!(self, Value::StructuralZero)
    }
}

/// Extended product `prod_{j=lo}^{hi} term(j)` valid for all integer bounds:
/// ordinary product for `hi >= lo`, empty product 1 for `hi = lo-1`, and the
/// reciprocal `1/(term(hi+1)...term(lo-1))` for `hi <= lo-2`.
pub fn extended_product<R: Real>(
    term: impl Fn(i64) -> Cplx<R>,
    lo: i64,
    hi: i64,
) -> Result<Cplx<R>> {
    if hi >= lo {
        let mut acc = Cplx::one();
        for j in lo..=hi {
            acc = acc * term(j);
        }
        Ok(acc)
    } else if hi == lo - 1 {
        Ok(Cplx::one())
    } else {
        let mut acc = Cplx::one();
        for j in (hi + 1)..=(lo - 1) {
            let f = term(j);
            if f.is_zero() {
                return Err(Error::Pole(format!("extended product factor at j={j} is zero")));
            }
            acc = acc * f;
        }
        Ok(acc.inv())
    }
}

/// Evaluation context: base `q`, nome `p`, precision policy, plus the
/// running minimum modulus over denominator factors (used by the sampler
/// to reject assignments that graze a pole).
pub struct Ctx<R: Real> {
    pub q: Cplx<R>,
    pub p: Cplx<R>,
    pub policy: PrecisionPolicy,
    theta_terms: u32,
    min_factor: Cell<f64>,
}

impl<R: Real> Ctx<R> {
    pub fn new(q: Cplx<R>, p: Cplx<R>, policy: PrecisionPolicy) -> Result<Self> {
        let pm = p.abs().to_f64();
        if pm > 0.95 {
            return Err(Error::Domain(format!("|p| = {pm} exceeds 0.95")));
        }
        // Truncation count for (a;p)_inf: geometric tail below eps.
        let theta_terms = if pm == 0.0 {
            0
        } else {
            (policy.theta_truncation_eps.ln() / pm.ln()).ceil() as u32 + 4
        };
        Ok(Ctx { q, p, policy, theta_terms, min_factor: Cell::new(f64::INFINITY) })
    }

    /// Context at sampling precision widened to `R`.
    pub fn from_c64(q: crate::precision::C64, p: crate::precision::C64, policy: PrecisionPolicy) -> Result<Self> {
        Ctx::new(Cplx::widen(q), Cplx::widen(p), policy)
    }

    /// q^e for any integer e.
    #[inline]
    pub fn qi(&self, e: i64) -> Cplx<R> {
        self.q.powi(e)
    }

    pub fn reset_min_factor(&self) {
        self.min_factor.set(f64::INFINITY);
    }

    /// Smallest modulus seen among all theta factors (numerator and
    /// denominator) since the last reset. The sampler rejects draws that
    /// bring any factor of either side near a theta zero: denominator
    /// proximity is a pole, numerator proximity collapses the compared
    /// values and destroys the relative-error scale.
    pub fn min_factor(&self) -> f64 {
        self.min_factor.get()
    }

    #[inline]
    fn note_factor(&self, m: f64) {
        if m < self.min_factor.get() {
            self.min_factor.set(m);
        }
    }

    /// True when `a` sits on a theta zero `p^m` within the pole threshold,
    /// in which case theta snaps to exact zero.
    fn theta_zero_snap(&self, a: Cplx<R>) -> bool {
        let am = a.abs().to_f64();
        let pm = self.p.abs().to_f64();
        let tol = self.policy.zero_snap_rel() * am;
        if pm == 0.0 {
            return (a - Cplx::one()).abs().to_f64() <= tol;
        }
        let m0 = (am.ln() / pm.ln()).round() as i64;
        for m in (m0 - 1)..=(m0 + 1) {
            if (a - self.p.powi(m)).abs().to_f64() <= tol {
                return true;
            }
        }
        false
    }

    /// Modified Jacobi theta function `theta(a; p) = (a;p)_inf (p/a;p)_inf`,
    /// truncated so the relative tail is below the policy eps. Exactly zero
    /// when `a` hits `p^m` within the pole threshold.
    pub fn theta(&self, a: Cplx<R>) -> Result<Cplx<R>> {
        if a.is_zero() {
            // theta(a;0) = 1 - a extends to a = 0; the elliptic case does not.
            if self.p.is_zero() {
                return Ok(Cplx::one());
            }
            return Err(Error::Domain("theta at a = 0".into()));
        }
        if self.theta_zero_snap(a) {
            return Ok(Cplx::zero());
        }
        let one = Cplx::one();
        if self.p.is_zero() {
            return Ok(one - a);
        }
        let pa = self.p / a;
        let mut acc = Cplx::one();
        let mut pj = Cplx::one();
        for _ in 0..self.theta_terms {
            acc = acc * (one - a * pj) * (one - pa * pj);
            pj = pj * self.p;
        }
        Ok(acc)
    }

    /// Product shorthand `theta(a_1, ..., a_r; p)`.
    pub fn theta_list(&self, args: &[Cplx<R>]) -> Result<Cplx<R>> {
        let mut acc = Cplx::one();
        for &a in args {
            acc = acc * self.theta(a)?;
        }
        Ok(acc)
    }

    /// `(a; q, p)_k` for k >= 0, with exact-zero detection.
    /// Returns the product over the nonzero factors and a flag that is set
    /// when some factor snapped to zero.
    fn poch_nonneg(&self, a: Cplx<R>, k: u32) -> Result<(Cplx<R>, bool)> {
        let mut acc = Cplx::one();
        let mut zero = false;
        let mut aq = a;
        for _ in 0..k {
            let t = self.theta(aq)?;
            if t.is_zero() {
                zero = true;
            } else {
                self.note_factor(t.abs().to_f64());
                acc = acc * t;
            }
            aq = aq * self.q;
        }
        Ok((acc, zero))
    }

    /// q,p-shifted factorial `(a; q, p)_k` for any integer k, using the
    /// reciprocal convention for negative k. A zero in the negative-index
    /// denominator raises a pole (callers wanting the structural-zero
    /// convention go through [`Ctx::qp_reciprocal_guard`]).
    pub fn qp_poch(&self, a: Cplx<R>, k: i64) -> Result<Cplx<R>> {
        if k >= 0 {
            let (v, z) = self.poch_nonneg(a, k as u32)?;
            Ok(if z { Cplx::zero() } else { v })
        } else {
            let (v, z) = self.poch_nonneg(a * self.qi(k), (-k) as u32)?;
            if z {
                return Err(Error::Pole(format!("(a;q,p)_{k} has an infinite value (theta zero in reciprocal)")));
            }
            Ok(v.inv())
        }
    }

    /// Product shorthand `(a_1, ..., a_r; q, p)_k`.
    pub fn qp_poch_list(&self, args: &[Cplx<R>], k: i64) -> Result<Cplx<R>> {
        let mut acc = Cplx::one();
        for &a in args {
            acc = acc * self.qp_poch(a, k)?;
        }
        Ok(acc)
    }

    /// `1/(a; q, p)_k` with the structural-zero convention: when k < 0 and
    /// the reverse product vanishes (as for a = q), the reciprocal is the
    /// distinguished [`Value::StructuralZero`] rather than an error.
    pub fn qp_reciprocal_guard(&self, a: Cplx<R>, k: i64) -> Result<Value<R>> {
        if k >= 0 {
            let (v, z) = self.poch_nonneg(a, k as u32)?;
            if z {
                return Err(Error::Pole(format!("1/(a;q,p)_{k} at a theta zero")));
            }
            Ok(Value::Finite(v.inv()))
        } else {
            let (v, z) = self.poch_nonneg(a * self.qi(k), (-k) as u32)?;
            if z {
                Ok(Value::StructuralZero)
            } else {
                Ok(Value::Finite(v))
            }
        }
    }

    /// Start a factor accumulator bound to this context.
    pub fn factors(&self) -> Factors<'_, R> {
        Factors {
            ctx: self,
            num: Cplx::one(),
            num_zero: false,
            den: Cplx::one(),
            den_zero: false,
            exp2: 0,
            err: None,
        }
    }
}

/// Accumulator for one summand: a quotient of theta and Pochhammer factors
/// with exact-zero tracking on both sides.
///
/// Negative Pochhammer indices are folded to the opposite side through the
/// reciprocal identity, so every stored product is a finite product of
/// thetas; an exact zero only ever sets a flag. `finish` resolves the
/// flags: a numerator zero gives the structural zero, a denominator zero
/// is a pole, and both at once is an indeterminate 0/0 (also a pole).
pub struct Factors<'c, R: Real> {
    ctx: &'c Ctx<R>,
    num: Cplx<R>,
    num_zero: bool,
    den: Cplx<R>,
    den_zero: bool,
    /// Net power-of-two exponent: the value is (num/den) * 2^exp2. Long
    /// factor lists can push either product past 1e150, where squared
    /// moduli overflow; both sides are renormalized by exact powers of
    /// two as they grow.
    exp2: i64,
    err: Option<Error>,
}

/// Renormalization kicks in past 2^400 (or below 2^-400).
const REBALANCE_LIMIT: f64 = 2.582_249_878_086_908_6e120;

#[inline]
fn scale_exponent<R: Real>(z: &mut Cplx<R>) -> i64 {
    let proxy = z.re.to_f64().abs().max(z.im.to_f64().abs());
    if proxy > REBALANCE_LIMIT || (proxy != 0.0 && proxy < 1.0 / REBALANCE_LIMIT) {
        let e = proxy.log2().round() as i32;
        let s = R::from_f64((2.0f64).powi(-e));
        z.re = z.re * s;
        z.im = z.im * s;
        e as i64
    } else {
        0
    }
}

impl<'c, R: Real> Factors<'c, R> {
    #[inline]
    fn run(&mut self, f: impl FnOnce(&mut Self) -> Result<()>) -> &mut Self {
        if self.err.is_none() {
            if let Err(e) = f(self) {
                self.err = Some(e);
            }
            self.exp2 += scale_exponent(&mut self.num);
            self.exp2 -= scale_exponent(&mut self.den);
        }
        self
    }

    /// Numerator factor `(a;q,p)_k`.
    pub fn nqp(&mut self, a: Cplx<R>, k: i64) -> &mut Self {
        self.run(|s| {
            if k >= 0 {
                let (v, z) = s.ctx.poch_nonneg(a, k as u32)?;
                if z {
                    s.num_zero = true;
                } else {
                    s.num = s.num * v;
                }
            } else {
                // (a;q,p)_k = 1/(a q^k;q,p)_{-k}: goes to the denominator.
                let (v, z) = s.ctx.poch_nonneg(a * s.ctx.qi(k), (-k) as u32)?;
                if z {
                    s.den_zero = true;
                } else {
                    s.den = s.den * v;
                }
            }
            Ok(())
        })
    }

    /// Denominator factor `(a;q,p)_k`.
    pub fn dqp(&mut self, a: Cplx<R>, k: i64) -> &mut Self {
        self.run(|s| {
            if k >= 0 {
                let (v, z) = s.ctx.poch_nonneg(a, k as u32)?;
                if z {
                    s.den_zero = true;
                } else {
                    s.den = s.den * v;
                }
            } else {
                let (v, z) = s.ctx.poch_nonneg(a * s.ctx.qi(k), (-k) as u32)?;
                if z {
                    // 1/(a;q,p)_k = (a q^k;q,p)_{-k} = 0: structural zero.
                    s.num_zero = true;
                } else {
                    s.num = s.num * v;
                }
            }
            Ok(())
        })
    }

    /// Numerator list `(a_1,...,a_r;q,p)_k`.
    pub fn nqp_list(&mut self, args: &[Cplx<R>], k: i64) -> &mut Self {
        for &a in args {
            self.nqp(a, k);
        }
        self
    }

    /// Denominator list.
    pub fn dqp_list(&mut self, args: &[Cplx<R>], k: i64) -> &mut Self {
        for &a in args {
            self.dqp(a, k);
        }
        self
    }

    /// Numerator theta factor.
    pub fn ntheta(&mut self, a: Cplx<R>) -> &mut Self {
        self.run(|s| {
            let t = s.ctx.theta(a)?;
            if t.is_zero() {
                s.num_zero = true;
            } else {
                s.ctx.note_factor(t.abs().to_f64());
                s.num = s.num * t;
            }
            Ok(())
        })
    }

    /// Denominator theta factor.
    pub fn dtheta(&mut self, a: Cplx<R>) -> &mut Self {
        self.run(|s| {
            let t = s.ctx.theta(a)?;
            if t.is_zero() {
                s.den_zero = true;
            } else {
                s.ctx.note_factor(t.abs().to_f64());
                s.den = s.den * t;
            }
            Ok(())
        })
    }

    /// Plain scalar numerator factor.
    pub fn nc(&mut self, z: Cplx<R>) -> &mut Self {
        self.run(|s| {
            if z.is_zero() {
                s.num_zero = true;
            } else {
                s.num = s.num * z;
            }
            Ok(())
        })
    }

    /// Integer power `z^e` as a factor (negative e lands in the denominator).
    pub fn npow(&mut self, z: Cplx<R>, e: i64) -> &mut Self {
        self.run(|s| {
            if e == 0 {
                return Ok(());
            }
            if z.is_zero() {
                if e > 0 {
                    s.num_zero = true;
                } else {
                    s.den_zero = true;
                }
                return Ok(());
            }
            if e > 0 {
                s.num = s.num * z.powi(e);
            } else {
                s.den = s.den * z.powi(-e);
            }
            Ok(())
        })
    }

    /// q-power factor.
    pub fn qpow(&mut self, e: i64) -> &mut Self {
        let q = self.ctx.q;
        self.npow(q, e)
    }

    /// Sign factor (-1)^e.
    pub fn sign(&mut self, e: i64) -> &mut Self {
        if e.rem_euclid(2) == 1 {
            self.nc(-Cplx::<R>::one())
        } else {
            self
        }
    }

    pub fn finish(&mut self) -> Result<Value<R>> {
        if let Some(e) = self.err.take() {
            return Err(e);
        }
        match (self.num_zero, self.den_zero) {
            (true, false) => Ok(Value::StructuralZero),
            (false, true) => Err(Error::Pole("denominator factor vanished".into())),
            (true, true) => Err(Error::Pole("indeterminate 0/0 summand".into())),
            (false, false) => {
                let mut v = self.num / self.den;
                // Unwind the renormalization in representable steps.
                let mut e = self.exp2;
                while e != 0 {
                    let step = e.clamp(-900, 900);
                    let s = R::from_f64((2.0f64).powi(step as i32));
                    v.re = v.re * s;
                    v.im = v.im * s;
                    e -= step;
                }
                Ok(Value::Finite(v))
            }
        }
    }
}

/// Neumaier-compensated complex accumulator; used so every multiple sum is
/// reproducible independent of partitioning.
#[derive(Copy, Clone, Debug)]
pub struct CompensatedSum<R: Real> {
    s: Cplx<R>,
    c: Cplx<R>,
}

impl<R: Real> CompensatedSum<R> {
    pub fn new() -> Self {
        CompensatedSum { s: Cplx::zero(), c: Cplx::zero() }
    }

    pub fn add(&mut self, v: Cplx<R>) {
        self.s = Cplx::new(
            neumaier(&mut self.c.re, self.s.re, v.re),
            neumaier(&mut self.c.im, self.s.im, v.im),
        );
    }

    pub fn value(&self) -> Cplx<R> {
        self.s + self.c
    }
}

impl<R: Real> Default for CompensatedSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

#[inline]
fn neumaier<R: Real>(comp: &mut R, s: R, v: R) -> R {
    let t = s + v;
    if s.abs() >= v.abs() {
        *comp = *comp + ((s - t) + v);
    } else {
        *comp = *comp + ((v - t) + s);
    }
    t
}

/// binom(k, 2) = k(k-1)/2, valid for negative k as well.
#[inline]
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::C64;

    fn ctx(q: C64, p: C64) -> Ctx<f64> {
        Ctx::new(q, p, PrecisionPolicy::double()).unwrap()
    }

    fn re(x: f64) -> C64 {
        Cplx::from_f64(x, 0.0)
    }

    // Independent truncated-product oracle for theta, at a fixed factor
    // count (no adaptive truncation).
    fn theta_oracle(a: C64, p: C64, terms: u32) -> C64 {
        let one = C64::one();
        let mut acc = C64::one();
        let mut pj = C64::one();
        let pa = p / a;
        for _ in 0..terms {
            acc = acc * (one - a * pj) * (one - pa * pj);
            pj = pj * p;
        }
        acc
    }

    #[test]
    fn extended_product_three_cases() {
        let two = |_: i64| re(2.0);
        // hi = lo-1: empty product.
        assert_eq!(extended_product(two, 0, -1).unwrap(), C64::one());
        // ordinary: 2^3 = 8.
        assert!((extended_product(two, 0, 2).unwrap() - re(8.0)).abs() < 1e-15);
        // reciprocal: prod_{0}^{-3} = 1/(A_{-2} A_{-1}) = 1/4.
        assert!((extended_product(two, 0, -3).unwrap() - re(0.25)).abs() < 1e-15);
    }

    #[test]
    fn extended_product_recurrence() {
        // prod_{lo}^{m+1} = prod_{lo}^{m} * term(m+1) across the case split.
        let term = |j: i64| re(1.0 + 0.37 * j as f64 + 0.11 * (j * j) as f64);
        for m in -5i64..5 {
            let lhs = extended_product(term, 0, m + 1).unwrap();
            let rhs = extended_product(term, 0, m).unwrap() * term(m + 1);
            assert!((lhs - rhs).abs() < 1e-12, "m = {m}");
        }
    }

    #[test]
    fn theta_at_p_zero_is_one_minus_a() {
        let c = ctx(re(0.5), re(0.0));
        let a = Cplx::from_f64(0.3, 0.4);
        let t = c.theta(a).unwrap();
        assert!((t - (C64::one() - a)).abs() < 1e-15);
    }

    #[test]
    fn theta_at_one_is_zero() {
        let c = ctx(re(0.5), re(0.1));
        assert!(c.theta(re(1.0)).unwrap().is_zero());
    }

    #[test]
    fn theta_against_truncated_oracle_two_depths() {
        let c = ctx(re(0.5), re(0.1));
        let got = c.theta(re(0.5)).unwrap();
        // Frozen from the 200-factor oracle: (0.5;0.1)_inf (0.2;0.1)_inf.
        let frozen = 0.3695093618569193;
        assert!((got.re - frozen).abs() < 1e-13 && got.im.abs() < 1e-15);
        let o1 = theta_oracle(re(0.5), re(0.1), 200);
        let o2 = theta_oracle(re(0.5), re(0.1), 120);
        assert!((o1 - o2).abs() < 1e-15, "oracle stable across depths");
        assert!((got - o1).abs() < 1e-13);
    }

    #[test]
    fn theta_domain_errors() {
        let c = ctx(re(0.5), re(0.1));
        assert!(c.theta(C64::zero()).is_err());
        assert!(Ctx::<f64>::new(re(0.5), re(0.97), PrecisionPolicy::double()).is_err());
    }

    #[test]
    fn qp_poch_zero_index_and_p_zero_collapse() {
        let c = ctx(Cplx::from_f64(0.4, 0.1), re(0.0));
        let a = Cplx::from_f64(0.7, -0.2);
        assert_eq!(c.qp_poch(a, 0).unwrap(), C64::one());
        for k in 1..6i64 {
            // direct (a;q)_k
            let mut direct = C64::one();
            for j in 0..k {
                direct = direct * (C64::one() - a * c.qi(j));
            }
            let got = c.qp_poch(a, k).unwrap();
            assert!((got - direct).abs() / direct.abs() < 1e-14);
        }
    }

    #[test]
    fn qp_poch_negative_index_identity() {
        // (a;q,p)_{-m} * (a q^{-m};q,p)_m = 1
        let c = ctx(Cplx::from_f64(0.45, 0.12), Cplx::from_f64(0.15, 0.05));
        let a = Cplx::from_f64(1.3, 0.4);
        for m in 1..5i64 {
            let lhs = c.qp_poch(a, -m).unwrap() * c.qp_poch(a * c.qi(-m), m).unwrap();
            assert!((lhs - C64::one()).abs() < 1e-12, "m = {m}");
        }
    }

    #[test]
    fn reciprocal_guard_structural_zero() {
        let c = ctx(Cplx::from_f64(0.45, 0.12), re(0.1));
        let q = c.q;
        // 1/(q;q,p)_{-2} = 0 by the termination-from-below convention.
        assert!(c.qp_reciprocal_guard(q, -2).unwrap().is_structural_zero());
        // generic a, k = 0 -> 1.
        let one = c.qp_reciprocal_guard(Cplx::from_f64(0.8, 0.3), 0).unwrap();
        assert!((one.cplx() - C64::one()).abs() < 1e-15);
    }

    #[test]
    fn reciprocal_guard_p_zero_value() {
        // a = q, k = 3, p = 0: 1/((1-q)(1-q^2)(1-q^3)).
        let q = 0.3;
        let c = ctx(re(q), re(0.0));
        let got = c.qp_reciprocal_guard(re(q), 3).unwrap().cplx();
        let expect = 1.0 / ((1.0 - q) * (1.0 - q.powi(2)) * (1.0 - q.powi(3)));
        assert!((got.re - expect).abs() < 1e-14);
    }

    #[test]
    fn qp_poch_list_cases() {
        let c = ctx(Cplx::from_f64(0.4, 0.05), re(0.0));
        assert_eq!(c.qp_poch_list(&[], 3).unwrap(), C64::one());
        let a = Cplx::from_f64(0.6, 0.2);
        // single entry at k=1 is theta(a) = 1 - a at p=0.
        let got = c.qp_poch_list(&[a], 1).unwrap();
        assert!((got - (C64::one() - a)).abs() < 1e-15);
        // [a, q/a] against direct multiplication.
        let qa = c.q / a;
        for k in 0..4i64 {
            let got = c.qp_poch_list(&[a, qa], k).unwrap();
            let direct = c.qp_poch(a, k).unwrap() * c.qp_poch(qa, k).unwrap();
            assert!((got - direct).abs() < 1e-14);
        }
    }

    #[test]
    fn theta_list_cases() {
        let c = ctx(re(0.5), re(0.0));
        assert_eq!(c.theta_list(&[]).unwrap(), C64::one());
        let got = c.theta_list(&[re(0.5), re(0.7)]).unwrap();
        assert!((got.re - 0.15).abs() < 1e-15);
        // [a, p/a] = theta(a)^2 via the reflection identity.
        let c = ctx(re(0.5), re(0.12));
        let a = Cplx::from_f64(0.8, 0.3);
        let got = c.theta_list(&[a, c.p / a]).unwrap();
        let t = c.theta(a).unwrap();
        assert!((got - t * t).abs() / got.abs() < 1e-13);
    }

    #[test]
    fn factors_structural_zero_vs_pole() {
        let c = ctx(Cplx::from_f64(0.45, 0.12), re(0.1));
        let q = c.q;
        // denominator (q;q,p)_{-2} => term is structurally zero
        let v = c.factors().dqp(q, -2).finish().unwrap();
        assert!(v.is_structural_zero());
        // numerator (q;q,p)_{-2} => genuine pole
        assert!(c.factors().nqp(q, -2).finish().is_err());
    }

    #[test]
    fn compensated_sum_matches_naive_on_benign_data() {
        let mut cs = CompensatedSum::<f64>::new();
        let mut naive = C64::zero();
        for j in 0..100 {
            let v = Cplx::from_f64(1.0 / (1.0 + j as f64), (j as f64) * 1e-3);
            cs.add(v);
            naive = naive + v;
        }
        assert!((cs.value() - naive).abs() < 1e-12);
    }

    #[test]
    fn choose2_negative_indices() {
        assert_eq!(choose2(0), 0);
        assert_eq!(choose2(1), 0);
        assert_eq!(choose2(4), 6);
        assert_eq!(choose2(-1), 1);
        assert_eq!(choose2(-3), 6);
    }
}
