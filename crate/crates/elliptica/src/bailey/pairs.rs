//! The WP Bailey pair catalog and direct certification of the defining
//! relation `beta_N(a,b) = sum_{j<=N} B_{Nj}(a,b) alpha_j(a,b)`.
//!
//! A pair is kept as a *family* over (a, b): the lemmas evaluate their
//! source pair at the shifted argument b -> b rho1 rho2/(aq), so a table
//! at fixed (a, b) could not express the construction.

use std::rc::Rc;

use crate::elliptic_core::{CompensatedSum, Ctx, Value};
use crate::error::{Error, Result};
use crate::multi_index::{IndexDomain, MultiIndex};
use crate::precision::{Cplx, Real, C64};

use super::{entry_impl, BressoudKind, EntryArgs};

/// Which member of the pair to evaluate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PairTerm {
    Alpha,
    Beta,
}

/// Identifiers of the cataloged pairs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PairId {
    B1Primary,
    B1Second,
    B1Unit,
    B2Primary,
    B3Primary,
    B3Unit,
    B4Primary,
    B5Primary,
    B5Unit,
}

impl PairId {
    pub fn all() -> [PairId; 9] {
        [
            PairId::B1Primary,
            PairId::B1Second,
            PairId::B1Unit,
            PairId::B2Primary,
            PairId::B3Primary,
            PairId::B3Unit,
            PairId::B4Primary,
            PairId::B5Primary,
            PairId::B5Unit,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            PairId::B1Primary => "B1_primary",
            PairId::B1Second => "B1_second",
            PairId::B1Unit => "B1_unit",
            PairId::B2Primary => "B2_primary",
            PairId::B3Primary => "B3_primary",
            PairId::B3Unit => "B3_unit",
            PairId::B4Primary => "B4_primary",
            PairId::B5Primary => "B5_primary",
            PairId::B5Unit => "B5_unit",
        }
    }

    pub fn parse(s: &str) -> Result<PairId> {
        PairId::all()
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownPair(s.to_string()))
    }

    pub fn matrix_kind(self) -> BressoudKind {
        match self {
            PairId::B1Primary | PairId::B1Second | PairId::B1Unit => BressoudKind::B1,
            PairId::B2Primary => BressoudKind::B2,
            PairId::B3Primary | PairId::B3Unit => BressoudKind::B3,
            PairId::B4Primary => BressoudKind::B4,
            PairId::B5Primary | PairId::B5Unit => BressoudKind::B5,
        }
    }

    pub fn is_unit(self) -> bool {
        matches!(self, PairId::B1Unit | PairId::B3Unit | PairId::B5Unit)
    }
}

/// Extra parameters of the cataloged pairs (the unit pairs ignore c, d).
#[derive(Clone, Debug)]
pub struct PairParams {
    pub c: C64,
    pub d: C64,
}

pub(crate) trait PairEval<R: Real> {
    fn eval(&self, term: PairTerm, a: Cplx<R>, b: Cplx<R>, k: &MultiIndex) -> Result<Value<R>>;
}

/// A WP Bailey pair family attached to a matrix kind.
#[derive(Clone)]
pub struct WpPair<R: Real> {
    pub kind: BressoudKind,
    pub label: String,
    pub(crate) ctx: Rc<Ctx<R>>,
    pub(crate) x: Rc<Vec<Cplx<R>>>,
    pub(crate) eval: Rc<dyn PairEval<R>>,
}

impl<R: Real> WpPair<R> {
    pub fn alpha(&self, a: Cplx<R>, b: Cplx<R>, k: &MultiIndex) -> Result<Value<R>> {
        self.eval.eval(PairTerm::Alpha, a, b, k)
    }

    pub fn beta(&self, a: Cplx<R>, b: Cplx<R>, k: &MultiIndex) -> Result<Value<R>> {
        self.eval.eval(PairTerm::Beta, a, b, k)
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }
}

struct CatalogEval<R: Real> {
    id: PairId,
    ctx: Rc<Ctx<R>>,
    x: Rc<Vec<Cplx<R>>>,
    c: Cplx<R>,
    d: Cplx<R>,
}

/// Builds a cataloged pair over the given context and variable vector.
pub fn make_pair<R: Real>(
    id: PairId,
    ctx: Rc<Ctx<R>>,
    x: &[C64],
    params: &PairParams,
) -> WpPair<R> {
    let x: Rc<Vec<Cplx<R>>> = Rc::new(x.iter().map(|&z| Cplx::widen(z)).collect());
    WpPair {
        kind: id.matrix_kind(),
        label: id.name().to_string(),
        ctx: ctx.clone(),
        x: x.clone(),
        eval: Rc::new(CatalogEval {
            id,
            ctx,
            x,
            c: Cplx::widen(params.c),
            d: Cplx::widen(params.d),
        }),
    }
}

impl<R: Real> PairEval<R> for CatalogEval<R> {
    fn eval(&self, term: PairTerm, a: Cplx<R>, b: Cplx<R>, k: &MultiIndex) -> Result<Value<R>> {
        let ctx = &*self.ctx;
        let x = &*self.x;
        let (c, d) = (self.c, self.d);
        let n = k.dim();
        debug_assert_eq!(n, x.len());
        let q = ctx.q;
        let ks = k.norm();
        let mut f = ctx.factors();
        match (self.id, term) {
            (PairId::B1Primary, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(a * x[r]);
                    f.nqp(a * x[r], ks);
                    f.nqp(d * x[r], k.at(r));
                    f.dqp(a * x[r] * q / c, k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
                f.nqp(c, ks);
                f.nqp(a * a * q / (b * c * d), ks);
                f.dqp(a * q / d, ks);
                f.npow(b / a, ks);
            }
            (PairId::B1Primary, PairTerm::Beta) => {
                f.nqp(b * c / a, ks);
                f.nqp(a * q / (c * d), ks);
                f.dqp(a * q / d, ks);
                for r in 0..n {
                    f.nqp(b * x[r], ks);
                    f.nqp(b * d * x[r] / a, k.at(r));
                    f.dqp(a * x[r] * q / c, k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
            }
            (PairId::B1Unit, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(a * x[r]);
                    f.nqp(a * x[r], ks);
                    f.dqp(b * x[r] * q, k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
                f.nqp(a / b, ks);
                f.npow(b / a, ks);
            }
            (PairId::B1Second, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(a * x[r]);
                    f.nqp(c * x[r], k.at(r));
                    f.nqp(a * a * x[r] * q / (b * c * d), k.at(r));
                    f.nqp(a * x[r], ks);
                    f.nqp(d / x[r], ks);
                    f.dqp(d / x[r], ks - k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                        f.dqp(a * x[r] * x[s] * q / d, k.at(r));
                        if r < s {
                            f.nqp(a * x[r] * x[s] * q / d, k.at(r) + k.at(s));
                        }
                    }
                }
                f.dqp(a * q / c, ks);
                f.dqp(b * c * d / a, ks);
                f.npow(b / a, ks);
            }
            (PairId::B1Second, PairTerm::Beta) => {
                for r in 0..n {
                    f.nqp(b * x[r], ks);
                    f.nqp(b * d / (a * x[r]), ks);
                    f.dqp(b * d / (a * x[r]), ks - k.at(r));
                    f.nqp(a * x[r] * q / (c * d), k.at(r));
                    f.nqp(b * c * x[r] / a, k.at(r));
                    for s in 0..n {
                        f.dqp(a * x[r] * x[s] * q / d, k.at(r));
                        f.dqp(q * x[r] / x[s], k.at(r));
                        if r < s {
                            f.nqp(a * x[r] * x[s] * q / d, k.at(r) + k.at(s));
                        }
                    }
                }
                f.dqp(a * q / c, ks);
                f.dqp(b * c * d / a, ks);
            }
            (PairId::B2Primary, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(a * x[r]);
                    f.nqp(a * x[r], ks);
                    f.nqp(c * x[r], k.at(r));
                    f.nqp(d * x[r], k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    f.npow(x[r], -k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
                f.nqp(a * a * q / (b * c * d), ks);
                f.dqp(a * q / c, ks);
                f.dqp(a * q / d, ks);
                f.npow(b / a, ks);
                f.qpow(k.cross_sum());
            }
            (PairId::B2Primary, PairTerm::Beta) => {
                f.nqp(b, ks);
                f.nqp(b * c / a, ks);
                f.nqp(b * d / a, ks);
                f.dqp(a * q / c, ks);
                f.dqp(a * q / d, ks);
                for r in 0..n {
                    f.nqp(a * ctx.qi(1 + ks - k.at(r)) / (c * d * x[r]), k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
            }
            (PairId::B3Primary, PairTerm::Alpha) => {
                f.ntheta(a * ctx.qi(2 * ks));
                f.dtheta(a);
                f.nqp(a, ks);
                f.nqp(c, ks);
                f.nqp(d, ks);
                f.dqp(a * q / c, ks);
                f.dqp(a * q / d, ks);
                for r in 0..n {
                    f.nqp(a * a * q / (b * c * d * x[r]), ks);
                    f.dqp(a * a * q / (b * c * d * x[r]), ks - k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    f.npow(x[r], k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
                f.npow(b / a, ks);
                f.qpow(-k.cross_sum());
            }
            (PairId::B3Primary, PairTerm::Beta) => {
                f.nqp(a * q / (c * d), ks);
                f.dqp(a * q / c, ks);
                f.dqp(a * q / d, ks);
                for r in 0..n {
                    f.nqp(b * x[r], ks);
                    f.nqp(b * c * x[r] / a, k.at(r));
                    f.nqp(b * d * x[r] / a, k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
            }
            (PairId::B3Unit, PairTerm::Alpha) => {
                f.ntheta(a * ctx.qi(2 * ks));
                f.dtheta(a);
                f.nqp(a, ks);
                for r in 0..n {
                    f.nqp(a / (b * x[r]), ks);
                    f.dqp(a / (b * x[r]), ks - k.at(r));
                    f.dqp(b * x[r] * q, k.at(r));
                    f.npow(x[r], k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
                f.npow(b / a, ks);
                f.qpow(-k.cross_sum());
            }
            (PairId::B4Primary, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(a * x[r]);
                    f.nqp(a * x[r], ks);
                    f.dqp(a * x[r] * q / c, k.at(r));
                    f.dqp(a * x[r] * q / d, k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    f.npow(x[r], k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
                f.nqp(c, ks);
                f.nqp(d, ks);
                f.nqp(q * a * a / (b * c * d), ks);
                f.npow(b / a, ks);
                f.qpow(-k.cross_sum());
            }
            (PairId::B4Primary, PairTerm::Beta) => {
                for r in 0..n {
                    for s in 0..n {
                        f.nqp(b * x[r] * x[s], k.at(s));
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                    f.nqp(a * x[r] * q / (c * d), k.at(r));
                    f.nqp(b * c * x[r] / a, k.at(r));
                    f.nqp(b * d * x[r] / a, k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    f.dqp(a * x[r] * q / c, k.at(r));
                    f.dqp(a * x[r] * q / d, k.at(r));
                }
            }
            (PairId::B5Primary, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * x[r] * ctx.qi(2 * k.at(r)));
                    f.dtheta(a * x[r] * x[r]);
                    f.nqp(a * a * x[r] * q / (b * c * d), k.at(r));
                    f.nqp(c * x[r], k.at(r));
                    f.nqp(d * x[r], k.at(r));
                    f.dqp(a * x[r] * q / c, k.at(r));
                    f.dqp(a * x[r] * q / d, k.at(r));
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    f.npow(x[r], -k.at(r));
                    for s in 0..n {
                        f.nqp(a * x[r] * x[s], k.at(r));
                        f.dqp(q * x[r] / x[s], k.at(r));
                        if r < s {
                            f.ntheta(a * x[r] * x[s] * ctx.qi(k.at(r) + k.at(s)));
                            f.dtheta(a * x[r] * x[s]);
                        }
                    }
                }
                f.npow(b / a, ks);
                f.qpow(k.cross_sum());
            }
            (PairId::B5Primary, PairTerm::Beta) => {
                f.nqp(b * c / a, ks);
                f.nqp(b * d / a, ks);
                f.nqp(a * q / (c * d), ks);
                for r in 0..n {
                    f.nqp(b * x[r], ks);
                    f.dqp(b * c * d * x[r] / a, k.at(r));
                    f.dqp(a * x[r] * q / c, k.at(r));
                    f.dqp(a * x[r] * q / d, k.at(r));
                    for s in 0..n {
                        f.dqp(q * x[r] / x[s], k.at(r));
                    }
                }
            }
            (PairId::B5Unit, PairTerm::Alpha) => {
                for r in 0..n {
                    f.ntheta(a * x[r] * x[r] * ctx.qi(2 * k.at(r)));
                    f.dtheta(a * x[r] * x[r]);
                    f.nqp(a * x[r] / b, k.at(r));
                    f.dqp(b * x[r] * q, k.at(r));
                    f.npow(x[r], -k.at(r));
                    for s in 0..n {
                        f.nqp(a * x[r] * x[s], k.at(r));
                        f.dqp(q * x[r] / x[s], k.at(r));
                        if r < s {
                            f.ntheta(a * x[r] * x[s] * ctx.qi(k.at(r) + k.at(s)));
                            f.dtheta(a * x[r] * x[s]);
                        }
                    }
                }
                f.npow(b / a, ks);
                f.qpow(k.cross_sum());
            }
            (PairId::B1Unit | PairId::B3Unit | PairId::B5Unit, PairTerm::Beta) => {
                return Ok(if k.is_zero() { Value::Finite(Cplx::one()) } else { Value::StructuralZero });
            }
        }
        f.finish()
    }
}

/// Outcome of certifying the pair relation over a cap rectangle.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub label: String,
    pub kind: BressoudKind,
    pub cells: usize,
    pub worst_residual: f64,
    pub worst_at: Option<Vec<usize>>,
    pub tol: f64,
    pub pass: bool,
}

/// Checks `beta_N = sum_{0<=j<=N} B_{Nj} alpha_j` for every N <= caps,
/// with the residual normalized by max(|beta_N|, 1).
pub fn verify_wp_pair<R: Real>(
    pair: &WpPair<R>,
    a: C64,
    b: C64,
    caps: &MultiIndex,
    tol: f64,
) -> Result<PairReport> {
    let ctx = &*pair.ctx;
    let aw = Cplx::widen(a);
    let bw = Cplx::widen(b);
    let ea = EntryArgs {
        a: aw,
        b: bw,
        e: Cplx::from_f64(0.5, 0.0),
        x: pair.x.to_vec(),
    };
    let mut worst = 0.0f64;
    let mut worst_at = None;
    let mut cells = 0usize;
    for nn in IndexDomain::Rectangle(caps.clone()).iterate() {
        cells += 1;
        let beta = pair.beta(aw, bw, &nn)?.cplx();
        let mut sum = CompensatedSum::<R>::new();
        for j in IndexDomain::Rectangle(nn.clone()).iterate() {
            let entry = entry_impl(pair.kind, ctx, &ea, &nn, &j)?;
            if entry.is_structural_zero() {
                continue;
            }
            let alpha = pair.alpha(aw, bw, &j)?;
            if alpha.is_structural_zero() {
                continue;
            }
            sum.add(entry.cplx() * alpha.cplx());
        }
        let resid =
            (beta - sum.value()).abs().to_f64() / beta.abs().to_f64().max(1.0);
        if resid > worst {
            worst = resid;
            worst_at = Some(nn.0.clone());
        }
    }
    Ok(PairReport {
        label: pair.label.clone(),
        kind: pair.kind,
        cells,
        worst_residual: worst,
        worst_at,
        tol,
        pass: worst <= tol,
    })
}
