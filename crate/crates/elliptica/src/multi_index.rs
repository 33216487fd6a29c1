//! n-tuple index arithmetic, lexicographic iteration over rectangles and
//! simplices, elliptic Vandermonde products, and the two product-rewriting
//! lemmas (exposed as independent both-sides evaluations so they can
//! cross-check the kernel).

use crate::elliptic_core::{choose2, Ctx, Factors, Value};
use crate::error::Result;
use crate::precision::{Cplx, Real};

/// n-tuple of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// |k| = sum of components.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum()
    }

    /// Component as a signed integer (differences show up everywhere).
    #[inline]
    pub fn at(&self, r: usize) -> i64 {
        self.0[r] as i64
    }

    /// Componentwise partial order k <= other.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// sum_{r<s} k_r k_s.
    pub fn cross_sum(&self) -> i64 {
        let n = self.dim();
        let mut acc = 0i64;
        for r in 0..n {
            for s in (r + 1)..n {
                acc += self.at(r) * self.at(s);
            }
        }
        acc
    }

    /// sum_r (r-1) k_r with r counted from 1.
    pub fn weighted_sum_r_minus_1(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &c)| i as i64 * c as i64).sum()
    }

    /// sum_r r k_r with r counted from 1.
    pub fn weighted_sum_r(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &c)| (i as i64 + 1) * c as i64).sum()
    }
}

/// Iteration domain for multiple series.
#[derive(Clone, Debug)]
pub enum IndexDomain {
    /// 0 <= k_r <= caps_r componentwise.
    Rectangle(MultiIndex),
    /// k_r >= 0 with |k| <= cap.
    Simplex { dim: usize, cap: usize },
}

impl IndexDomain {
    pub fn dim(&self) -> usize {
        match self {
            IndexDomain::Rectangle(c) => c.dim(),
            IndexDomain::Simplex { dim, .. } => *dim,
        }
    }

    pub fn cardinality(&self) -> u64 {
        match self {
            IndexDomain::Rectangle(c) => c.0.iter().map(|&n| n as u64 + 1).product(),
            IndexDomain::Simplex { dim, cap } => binomial(*cap as u64 + *dim as u64, *dim as u64),
        }
    }

    /// All indices of the domain in strictly increasing lexicographic
    /// order, starting from the zero tuple.
    pub fn iterate(&self) -> DomainIter {
        DomainIter { domain: self.clone(), next: Some(MultiIndex::zero(self.dim())) }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub struct DomainIter {
    domain: IndexDomain,
    next: Option<MultiIndex>,
}

impl Iterator for DomainIter {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let cur = self.next.take()?;
        self.next = successor(&self.domain, &cur);
        Some(cur)
    }
}

/// Lexicographic successor within the domain, or None at the end.
fn successor(domain: &IndexDomain, k: &MultiIndex) -> Option<MultiIndex> {
    let n = k.dim();
    let mut next = k.clone();
    match domain {
        IndexDomain::Rectangle(caps) => {
            for i in (0..n).rev() {
                if next.0[i] < caps.0[i] {
                    next.0[i] += 1;
                    return Some(next);
                }
                next.0[i] = 0;
            }
            None
        }
        IndexDomain::Simplex { cap, .. } => {
            // Increment the rightmost position whose prefix still fits,
            // zeroing everything to its right.
            let mut prefix: i64 = k.norm();
            for i in (0..n).rev() {
                prefix -= k.at(i);
                if prefix + k.at(i) + 1 <= *cap as i64 {
                    next.0[i] += 1;
                    for c in next.0.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    return Some(next);
                }
            }
            None
        }
    }
}

/// All indices with |k| = norm exactly, in lexicographic order (the
/// fixed-norm slices used by the fundamental-theorem identities).
pub fn fixed_norm_indices(dim: usize, norm: usize) -> Vec<MultiIndex> {
    IndexDomain::Simplex { dim, cap: norm }
        .iterate()
        .filter(|k| k.norm() == norm as i64)
        .collect()
}

/// Multiplies the elliptic Vandermonde product of type A,
/// `prod_{r<s} theta(q^{k_r-k_s} x_r/x_s) / theta(x_r/x_s)`, into `f`.
pub fn vandermonde_into<R: Real>(f: &mut Factors<'_, R>, ctx: &Ctx<R>, x: &[Cplx<R>], k: &MultiIndex) {
    let n = k.dim();
    for r in 0..n {
        for s in (r + 1)..n {
            let xr_xs = x[r] / x[s];
            f.ntheta(ctx.qi(k.at(r) - k.at(s)) * xr_xs);
            f.dtheta(xr_xs);
        }
    }
}

/// Standalone elliptic Vandermonde product.
pub fn vandermonde<R: Real>(ctx: &Ctx<R>, x: &[Cplx<R>], k: &MultiIndex) -> Result<Value<R>> {
    let mut f = ctx.factors();
    vandermonde_into(&mut f, ctx, x, k);
    f.finish()
}

/// Left side of the Vandermonde rewriting lemma:
/// `prod_{r,s} (q x_r/x_s; q,p)_{k_r-k_s}`.
pub fn lemma1_lhs<R: Real>(ctx: &Ctx<R>, x: &[Cplx<R>], k: &MultiIndex) -> Result<Value<R>> {
    let n = k.dim();
    let mut f = ctx.factors();
    for r in 0..n {
        for s in 0..n {
            f.nqp(ctx.q * x[r] / x[s], k.at(r) - k.at(s));
        }
    }
    f.finish()
}

/// Right side of the same lemma: Vandermonde times an explicit
/// sign/power/monomial factor.
pub fn lemma1_rhs<R: Real>(ctx: &Ctx<R>, x: &[Cplx<R>], k: &MultiIndex) -> Result<Value<R>> {
    let n = k.dim();
    let ksum = k.norm();
    let mut f = ctx.factors();
    vandermonde_into(&mut f, ctx, x, k);
    f.sign((n as i64 - 1) * ksum);
    let mut qexp = k.weighted_sum_r_minus_1() - k.cross_sum();
    for r in 0..n {
        qexp += (n as i64 - 1) * choose2(k.at(r));
    }
    f.qpow(qexp);
    for r in 0..n {
        f.npow(x[r], n as i64 * k.at(r) - ksum);
    }
    f.finish()
}

/// Left side of the shifted-factorial rewriting lemma:
/// `prod_{r,s} 1/(q^{1+k_r-k_s} x_r/x_s; q,p)_{N_r-k_r}`.
pub fn lemma2_lhs<R: Real>(
    ctx: &Ctx<R>,
    x: &[Cplx<R>],
    k: &MultiIndex,
    caps: &MultiIndex,
) -> Result<Value<R>> {
    let n = k.dim();
    let mut f = ctx.factors();
    for r in 0..n {
        for s in 0..n {
            f.dqp(
                ctx.qi(1 + k.at(r) - k.at(s)) * x[r] / x[s],
                caps.at(r) - k.at(r),
            );
        }
    }
    f.finish()
}

/// Right side of the same lemma.
pub fn lemma2_rhs<R: Real>(
    ctx: &Ctx<R>,
    x: &[Cplx<R>],
    k: &MultiIndex,
    caps: &MultiIndex,
) -> Result<Value<R>> {
    let n = k.dim();
    let ksum = k.norm();
    let nsum = caps.norm();
    let mut f = ctx.factors();
    vandermonde_into(&mut f, ctx, x, k);
    for r in 0..n {
        for s in 0..n {
            f.nqp(ctx.qi(-caps.at(s)) * x[r] / x[s], k.at(r));
            f.dqp(ctx.q * x[r] / x[s], caps.at(r));
        }
    }
    f.sign(ksum);
    f.qpow(nsum * ksum - choose2(ksum) + k.weighted_sum_r_minus_1());
    f.finish()
}
