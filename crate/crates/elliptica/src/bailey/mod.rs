//! The six elliptic Bressoud matrices, their closed-form inverses, the
//! WP Bailey pair catalog and the eight WP Bailey lemmas, together with
//! direct numerical certification of every pair and inverse relation.
//!
//! Matrix rows and columns are indexed by n-tuples ordered
//! lexicographically; triangularity is componentwise (an entry vanishes
//! unless j <= k in every coordinate) and is enforced exactly through the
//! structural-zero convention of the kernel, not by special-casing.

mod lemmas;
mod pairs;

pub use lemmas::{apply_lemma, compose_lemmas, LemmaKind, LemmaTag};
pub use pairs::{make_pair, verify_wp_pair, PairId, PairParams, PairReport, WpPair};

use std::collections::HashMap;

use crate::elliptic_core::{Ctx, Value};
use crate::error::{Error, Result};
use crate::multi_index::{IndexDomain, MultiIndex};
use crate::precision::{Cplx, Real, C64};

/// The six transform-matrix families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BressoudKind {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
}

impl BressoudKind {
    pub fn all() -> [BressoudKind; 6] {
        [
            BressoudKind::B1,
            BressoudKind::B2,
            BressoudKind::B3,
            BressoudKind::B4,
            BressoudKind::B5,
            BressoudKind::B6,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            BressoudKind::B1 => "B1",
            BressoudKind::B2 => "B2",
            BressoudKind::B3 => "B3",
            BressoudKind::B4 => "B4",
            BressoudKind::B5 => "B5",
            BressoudKind::B6 => "B6",
        }
    }

    pub fn parse(s: &str) -> Option<BressoudKind> {
        BressoudKind::all().into_iter().find(|k| k.name().eq_ignore_ascii_case(s))
    }
}

/// Parameters of a matrix instance at sampling precision.
#[derive(Clone, Debug)]
pub struct MatrixParams {
    pub a: C64,
    pub b: C64,
    /// Extra parameter of the sixth matrix; ignored elsewhere.
    pub e: Option<C64>,
    pub x: Vec<C64>,
    pub q: C64,
    pub p: C64,
}

impl MatrixParams {
    pub fn dim(&self) -> usize {
        self.x.len()
    }

    /// Parameter preconditions: nonzero variables and q not a root of
    /// unity within working precision up to order 4 * max_cap.
    pub fn validate(&self, max_cap: usize, pole_threshold: f64) -> Result<()> {
        if self.x.iter().any(|z| z.abs() == 0.0) {
            return Err(Error::Domain("matrix variable x_r = 0".into()));
        }
        let mut qm = self.q;
        for m in 1..=(4 * max_cap.max(1)) {
            if (qm - crate::precision::C64::one()).abs() <= pole_threshold {
                return Err(Error::Domain(format!("q is a near-root of unity of order {m}")));
            }
            qm = qm * self.q;
        }
        Ok(())
    }
}

/// Widened per-evaluation view of [`MatrixParams`].
pub(crate) struct EntryArgs<R: Real> {
    pub a: Cplx<R>,
    pub b: Cplx<R>,
    pub e: Cplx<R>,
    pub x: Vec<Cplx<R>>,
}

impl<R: Real> EntryArgs<R> {
    pub(crate) fn widen(mp: &MatrixParams) -> Self {
        EntryArgs {
            a: Cplx::widen(mp.a),
            b: Cplx::widen(mp.b),
            e: Cplx::widen(mp.e.unwrap_or(Cplx::new(0.5, 0.0))),
            x: mp.x.iter().map(|&z| Cplx::widen(z)).collect(),
        }
    }
}

/// Entry `B_{kj}(a, b)` of the given matrix kind. Exactly zero (as a
/// structural zero) whenever `j <= k` fails in some coordinate.
pub fn matrix_entry<R: Real>(
    kind: BressoudKind,
    ctx: &Ctx<R>,
    mp: &MatrixParams,
    k: &MultiIndex,
    j: &MultiIndex,
) -> Result<Value<R>> {
    entry_impl(kind, ctx, &EntryArgs::widen(mp), k, j)
}

/// Entry of the closed-form inverse.
pub fn inverse_entry<R: Real>(
    kind: BressoudKind,
    ctx: &Ctx<R>,
    mp: &MatrixParams,
    k: &MultiIndex,
    j: &MultiIndex,
) -> Result<Value<R>> {
    inverse_impl(kind, ctx, &EntryArgs::widen(mp), k, j)
}

pub(crate) fn entry_impl<R: Real>(
    kind: BressoudKind,
    ctx: &Ctx<R>,
    ea: &EntryArgs<R>,
    k: &MultiIndex,
    j: &MultiIndex,
) -> Result<Value<R>> {
    debug_assert_eq!(k.dim(), j.dim());
    let n = k.dim();
    let (a, b, x) = (ea.a, ea.b, &ea.x);
    let q = ctx.q;
    let ks = k.norm();
    let js = j.norm();
    let mut f = ctx.factors();
    match kind {
        BressoudKind::B1 => {
            f.nqp(b / a, ks - js);
            for r in 0..n {
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
            for r in 0..n {
                f.nqp(b * x[r], j.at(r) + ks);
                f.dqp(a * x[r] * q, k.at(r) + js);
            }
        }
        BressoudKind::B2 => {
            f.nqp(b, ks + js);
            for r in 0..n {
                f.nqp(b * ctx.qi(ks - k.at(r)) / (a * x[r]), k.at(r) - j.at(r));
                f.dqp(a * x[r] * q, k.at(r) + js);
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
        BressoudKind::B3 => {
            f.dqp(a * q, ks + js);
            for r in 0..n {
                f.nqp(b * x[r], j.at(r) + ks);
                f.nqp(b * x[r] * ctx.qi(j.at(r) - js) / a, k.at(r) - j.at(r));
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
        BressoudKind::B4 => {
            for r in 0..n {
                for s in 0..n {
                    f.nqp(b * x[r] * x[s], k.at(r) + j.at(s));
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                    if r < s {
                        f.dqp(b * x[r] * x[s], j.at(r) + j.at(s));
                    }
                }
                f.nqp(b * x[r] / a, k.at(r) - js);
                f.dqp(b * x[r] / a, j.at(r) - js);
                f.dqp(a * x[r] * q, k.at(r) + js);
            }
        }
        BressoudKind::B5 => {
            for r in 0..n {
                for s in 0..n {
                    if r < s {
                        f.nqp(a * x[r] * x[s] * q, k.at(r) + k.at(s));
                    }
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                    f.dqp(a * x[r] * x[s] * q, k.at(s) + j.at(r));
                }
                f.nqp(b * ctx.qi(ks - k.at(r)) / (a * x[r]), k.at(r) - j.at(r));
                f.nqp(b * x[r], ks + j.at(r));
            }
        }
        BressoudKind::B6 => {
            let e = ea.e;
            f.nqp(b, ks + js);
            f.nqp(b / a, ks - js);
            f.dqp(a * q, ks + js);
            for r in 0..n {
                f.nqp(e * x[r], ks + j.at(r));
                f.dqp(e * x[r], k.at(r) + js);
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
    }
    f.finish()
}

/// Alternate printed form of the first matrix; agrees with
/// [`matrix_entry`] for kind B1 (used as an internal cross-check).
pub fn b1_entry_form2<R: Real>(
    ctx: &Ctx<R>,
    mp: &MatrixParams,
    k: &MultiIndex,
    j: &MultiIndex,
) -> Result<Value<R>> {
    let ea = EntryArgs::widen(mp);
    let n = k.dim();
    let (a, b, x) = (ea.a, ea.b, &ea.x);
    let q = ctx.q;
    let ks = k.norm();
    let js = j.norm();
    let mut f = ctx.factors();
    f.nqp(b / a, ks);
    for r in 0..n {
        for s in 0..n {
            f.dqp(q * x[r] / x[s], k.at(r));
            f.nqp(ctx.qi(-k.at(s)) * x[r] / x[s], j.at(r));
        }
        f.nqp(b * x[r], ks);
        f.dqp(a * x[r] * q, k.at(r));
        f.nqp(b * x[r] * ctx.qi(ks), j.at(r));
        f.dqp(a * x[r] * ctx.qi(1 + k.at(r)), js);
    }
    crate::multi_index::vandermonde_into(&mut f, ctx, x, j);
    f.dqp(a * ctx.qi(1 - ks) / b, js);
    f.npow(a / b, js);
    f.qpow(j.weighted_sum_r());
    f.finish()
}

pub(crate) fn inverse_impl<R: Real>(
    kind: BressoudKind,
    ctx: &Ctx<R>,
    ea: &EntryArgs<R>,
    k: &MultiIndex,
    j: &MultiIndex,
) -> Result<Value<R>> {
    debug_assert_eq!(k.dim(), j.dim());
    let n = k.dim();
    let (a, b, x) = (ea.a, ea.b, &ea.x);
    let q = ctx.q;
    let ks = k.norm();
    let js = j.norm();
    let mut f = ctx.factors();
    match kind {
        BressoudKind::B1 => {
            for r in 0..n {
                f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                f.dtheta(a * x[r]);
                f.ntheta(b * x[r] * ctx.qi(j.at(r) + js));
                f.dtheta(b * x[r]);
            }
            f.npow(b / a, ks - js);
            f.nqp(a / b, ks - js);
            for r in 0..n {
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
                f.nqp(a * x[r], j.at(r) + ks);
                f.dqp(b * x[r] * q, k.at(r) + js);
            }
        }
        BressoudKind::B2 => {
            for r in 0..n {
                f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                f.dtheta(a * x[r]);
            }
            f.ntheta(b * ctx.qi(2 * js));
            f.dtheta(b);
            f.npow(b / a, ks - js);
            f.qpow(k.cross_sum() - j.cross_sum());
            f.dqp(b * q, ks + js);
            for r in 0..n {
                f.npow(x[r], j.at(r) - k.at(r));
                f.nqp(a * x[r], j.at(r) + ks);
                f.nqp(a * x[r] * ctx.qi(j.at(r) - js) / b, k.at(r) - j.at(r));
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
        BressoudKind::B3 => {
            f.ntheta(a * ctx.qi(2 * ks));
            f.dtheta(a);
            f.npow(b / a, ks - js);
            f.qpow(j.cross_sum() - k.cross_sum());
            f.nqp(a, ks + js);
            for r in 0..n {
                f.ntheta(b * x[r] * ctx.qi(j.at(r) + js));
                f.dtheta(b * x[r]);
                f.npow(x[r], k.at(r) - j.at(r));
                f.nqp(a * ctx.qi(ks - k.at(r)) / (b * x[r]), k.at(r) - j.at(r));
                f.dqp(b * x[r] * q, k.at(r) + js);
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
        BressoudKind::B4 => {
            f.npow(b / a, ks - js);
            f.qpow(j.cross_sum() - k.cross_sum());
            for r in 0..n {
                f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                f.dtheta(a * x[r]);
                f.ntheta(b * x[r] * x[r] * ctx.qi(2 * j.at(r)));
                f.dtheta(b * x[r] * x[r]);
                f.npow(x[r], k.at(r) - j.at(r));
                f.nqp(a * ctx.qi(ks - k.at(r)) / (b * x[r]), k.at(r) - j.at(r));
                f.nqp(a * x[r], ks + j.at(r));
                for s in 0..n {
                    if r < s {
                        f.ntheta(b * x[r] * x[s] * ctx.qi(j.at(r) + j.at(s)));
                        f.dtheta(b * x[r] * x[s]);
                        f.nqp(b * x[r] * x[s] * q, k.at(r) + k.at(s));
                    }
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                    f.dqp(b * x[r] * x[s] * q, k.at(s) + j.at(r));
                }
            }
        }
        BressoudKind::B5 => {
            f.npow(b / a, ks - js);
            f.qpow(k.cross_sum() - j.cross_sum());
            for r in 0..n {
                f.ntheta(a * x[r] * x[r] * ctx.qi(2 * k.at(r)));
                f.dtheta(a * x[r] * x[r]);
                f.ntheta(b * x[r] * ctx.qi(j.at(r) + js));
                f.dtheta(b * x[r]);
                f.npow(x[r], j.at(r) - k.at(r));
                f.nqp(a * x[r] * ctx.qi(j.at(r) - js) / b, k.at(r) - j.at(r));
                f.dqp(b * x[r] * q, k.at(r) + js);
                for s in 0..n {
                    if r < s {
                        f.ntheta(a * x[r] * x[s] * ctx.qi(k.at(r) + k.at(s)));
                        f.dtheta(a * x[r] * x[s]);
                        f.dqp(a * x[r] * x[s], j.at(r) + j.at(s));
                    }
                    f.nqp(a * x[r] * x[s], k.at(s) + j.at(r));
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
        BressoudKind::B6 => {
            let e = ea.e;
            f.ntheta(a * ctx.qi(2 * ks));
            f.dtheta(a);
            f.ntheta(b * ctx.qi(2 * js));
            f.dtheta(b);
            f.npow(b / a, ks - js);
            f.nqp(a, ks + js);
            f.nqp(a / b, ks - js);
            f.dqp(b * q, ks + js);
            for r in 0..n {
                f.nqp(e * x[r], ks + j.at(r));
                f.dqp(e * x[r], k.at(r) + js);
                for s in 0..n {
                    f.dqp(ctx.qi(1 + j.at(r) - j.at(s)) * x[r] / x[s], k.at(r) - j.at(r));
                }
            }
        }
    }
    f.finish()
}

/// Outcome of one matrix-times-inverse certification sweep.
#[derive(Clone, Debug)]
pub struct InverseReport {
    pub kind: BressoudKind,
    pub n: usize,
    pub caps: Vec<usize>,
    pub cells: usize,
    pub worst_residual: f64,
    pub worst_at: Option<(Vec<usize>, Vec<usize>)>,
    pub tol: f64,
    pub pass: bool,
}

/// Certifies `sum_{K<=j<=N} B_{Nj} B^{-1}_{jK} = delta_{NK}` for every
/// componentwise pair K <= N <= caps. Residuals are normalized by the
/// largest summand modulus of the row so small rows cannot pass vacuously.
pub fn verify_matrix_inverse<R: Real>(
    kind: BressoudKind,
    ctx: &Ctx<R>,
    mp: &MatrixParams,
    caps: &MultiIndex,
    tol: f64,
) -> Result<InverseReport> {
    mp.validate(caps.0.iter().copied().max().unwrap_or(1), ctx.policy.pole_threshold)?;
    let ea = EntryArgs::widen(mp);
    let mut entry_memo: HashMap<(Vec<usize>, Vec<usize>), Cplx<R>> = HashMap::new();
    let mut inv_memo: HashMap<(Vec<usize>, Vec<usize>), Cplx<R>> = HashMap::new();
    let mut worst = 0.0f64;
    let mut worst_at = None;
    let mut cells = 0usize;

    for nn in IndexDomain::Rectangle(caps.clone()).iterate() {
        for kk in IndexDomain::Rectangle(nn.clone()).iterate() {
            cells += 1;
            let mut sum = crate::elliptic_core::CompensatedSum::<R>::new();
            let mut scale = 0.0f64;
            for j in IndexDomain::Rectangle(nn.clone()).iterate() {
                if !kk.le(&j) {
                    continue;
                }
                let bkey = (nn.0.clone(), j.0.clone());
                let bnj = match entry_memo.get(&bkey) {
                    Some(&v) => v,
                    None => {
                        let v = entry_impl(kind, ctx, &ea, &nn, &j)
                            .map_err(|e| Error::Pole(format!("{} entry at N={:?} j={:?}: {e}", kind.name(), nn.0, j.0)))?
                            .cplx();
                        entry_memo.insert(bkey, v);
                        v
                    }
                };
                let ikey = (j.0.clone(), kk.0.clone());
                let inv = match inv_memo.get(&ikey) {
                    Some(&v) => v,
                    None => {
                        let v = inverse_impl(kind, ctx, &ea, &j, &kk)
                            .map_err(|e| Error::Pole(format!("{} inverse at j={:?} K={:?}: {e}", kind.name(), j.0, kk.0)))?
                            .cplx();
                        inv_memo.insert(ikey, v);
                        v
                    }
                };
                let term = bnj * inv;
                scale = scale.max(term.abs().to_f64());
                sum.add(term);
            }
            let delta = if nn == kk { Cplx::one() } else { Cplx::zero() };
            let resid = (sum.value() - delta).abs().to_f64() / scale.max(1e-300);
            if resid > worst {
                worst = resid;
                worst_at = Some((nn.0.clone(), kk.0.clone()));
            }
        }
    }

    Ok(InverseReport {
        kind,
        n: caps.dim(),
        caps: caps.0.clone(),
        cells,
        worst_residual: worst,
        worst_at,
        tol,
        pass: worst <= tol,
    })
}

#[cfg(test)]
mod tests;
