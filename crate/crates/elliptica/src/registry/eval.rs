//! Both-side evaluators for every cataloged identity.
//!
//! Summation sides iterate their domain in lexicographic order and
//! accumulate with compensated addition; structural-zero factors
//! short-circuit a summand to zero. Transformation-type specs fold the
//! closed prefactor into the right-hand evaluator.

use crate::elliptic_core::{CompensatedSum, Ctx, Factors, Value};
use crate::error::{Error, Result};
use crate::multi_index::{fixed_norm_indices, vandermonde_into, IndexDomain, MultiIndex};
use crate::precision::{Cplx, PrecisionPolicy, Real};

use super::{Assignment, Caps, Fault, IdentityId, IdentitySpec};

/// Which side of the identity to evaluate.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

impl Side {
    pub fn parse(s: &str) -> Option<Side> {
        match s.to_ascii_lowercase().as_str() {
            "lhs" => Some(Side::Lhs),
            "rhs" => Some(Side::Rhs),
            _ => None,
        }
    }
}

/// Widened evaluation environment for one side of one assignment.
///
/// Solved and derived parameters are recomputed here at the working
/// precision: the balancing conditions must hold exactly at evaluation
/// precision, and a value rounded through f64 would put a 1e-16 floor
/// under every escalated comparison.
pub(crate) struct Env<'a, R: Real> {
    asg: &'a Assignment,
    pub ctx: Ctx<R>,
    pub ctx2: Option<Ctx<R>>,
    pub x: Vec<Cplx<R>>,
    pub y: Vec<Cplx<R>>,
    vals: std::collections::BTreeMap<String, Cplx<R>>,
    /// Smallest |sum|/max|term| over the sums evaluated so far; the
    /// sampler rejects catastrophically cancelling points.
    cancel: std::cell::Cell<f64>,
    fault: Option<Fault>,
}

impl<'a, R: Real> Env<'a, R> {
    pub fn new(
        spec: &IdentitySpec,
        asg: &'a Assignment,
        policy: &PrecisionPolicy,
        fault: Option<Fault>,
    ) -> Result<Self> {
        let (ctx, ctx2) = super::contexts_for::<R>(asg, policy)?;
        if spec.two_base && ctx2.is_none() {
            return Err(Error::Usage(format!("{} needs a second base q~, p~", spec.name)));
        }
        let mut vals: std::collections::BTreeMap<String, Cplx<R>> =
            asg.vals.iter().map(|(k, &z)| (k.clone(), Cplx::widen(z))).collect();
        let get = |vals: &std::collections::BTreeMap<String, Cplx<R>>, k: &str| vals[k];
        if spec.solved_param == Some("e") {
            let (a, b, c, d) = (get(&vals, "a"), get(&vals, "b"), get(&vals, "c"), get(&vals, "d"));
            let e = a * a * ctx.qi(asg.caps.scalar() as i64 + 1) / (b * c * d);
            vals.insert("e".into(), e);
        }
        if spec.derived_param == Some("lambda") {
            let (a, b, c, d) = (get(&vals, "a"), get(&vals, "b"), get(&vals, "c"), get(&vals, "d"));
            vals.insert("lambda".into(), ctx.q * a * a / (b * c * d));
        }
        Ok(Env {
            asg,
            ctx,
            ctx2,
            x: asg.x.iter().map(|&z| Cplx::widen(z)).collect(),
            y: asg.y.iter().map(|&z| Cplx::widen(z)).collect(),
            vals,
            cancel: std::cell::Cell::new(f64::INFINITY),
            fault,
        })
    }

    pub fn min_factor(&self) -> f64 {
        let m = self.ctx.min_factor();
        match &self.ctx2 {
            Some(c2) => m.min(c2.min_factor()),
            None => m,
        }
    }

    /// Worst |sum| / max |summand| ratio seen in this evaluation.
    pub fn worst_cancellation(&self) -> f64 {
        self.cancel.get()
    }

    fn v(&self, name: &str) -> Cplx<R> {
        self.vals[name]
    }

    fn list(&self, name: &str) -> Vec<Cplx<R>> {
        self.asg.lists[name].iter().map(|&z| Cplx::widen(z)).collect()
    }

    fn seq_at(&self, i: i64) -> Cplx<R> {
        Cplx::widen(self.asg.seq[i as usize])
    }

    fn n(&self) -> usize {
        self.asg.n
    }

    fn rect_caps(&self) -> MultiIndex {
        match &self.asg.caps {
            Caps::Rect(v) => MultiIndex(v.clone()),
            Caps::Scalar(s) => MultiIndex(vec![*s; self.asg.n.max(1)]),
        }
    }

    fn scalar_cap(&self) -> usize {
        self.asg.caps.scalar()
    }

    fn fault_factor(&self, fault: Fault, k: &MultiIndex) -> Result<Cplx<R>> {
        match fault {
            Fault::BumpQExponent => Ok(self.ctx.qi(k.at(0))),
            Fault::ShiftFactorIndex => {
                let b = self.v("b");
                Ok(self.ctx.theta(b * self.ctx.qi(k.norm()))? / self.ctx.theta(b)?)
            }
        }
    }

    /// Lexicographic compensated sum of arbitrary term values.
    fn sum_values(
        &self,
        indices: impl IntoIterator<Item = MultiIndex>,
        term: impl Fn(&MultiIndex) -> Result<Value<R>>,
    ) -> Result<Cplx<R>> {
        let mut cs = CompensatedSum::<R>::new();
        let mut max_term = 0.0f64;
        for k in indices {
            let v = term(&k)?;
            if v.is_structural_zero() {
                continue;
            }
            let mut v = v.cplx();
            if let Some(fault) = self.fault {
                v = v * self.fault_factor(fault, &k)?;
            }
            max_term = max_term.max(v.abs().to_f64());
            cs.add(v);
        }
        let total = cs.value();
        if max_term > 0.0 {
            let ratio = total.abs().to_f64() / max_term;
            if ratio < self.cancel.get() {
                self.cancel.set(ratio);
            }
        }
        Ok(total)
    }

    /// Sum of factor-built terms over a domain.
    fn sum(
        &self,
        indices: impl IntoIterator<Item = MultiIndex>,
        fill: impl Fn(&mut Factors<'_, R>, &MultiIndex),
    ) -> Result<Cplx<R>> {
        self.sum_values(indices, |k| {
            let mut t = self.ctx.factors();
            fill(&mut t, k);
            t.finish()
        })
    }

    fn rect(&self) -> IndexDomain {
        IndexDomain::Rectangle(self.rect_caps())
    }

    fn simplex(&self, dim: usize, cap: usize) -> IndexDomain {
        IndexDomain::Simplex { dim, cap }
    }

    /// Closed product built outside a sum.
    fn product(&self, fill: impl FnOnce(&mut Factors<'_, R>)) -> Result<Cplx<R>> {
        let mut t = self.ctx.factors();
        fill(&mut t);
        Ok(t.finish()?.cplx())
    }
}

/// Vandermonde times the rectangle termination block
/// `prod_{r,s} (q^{-N_s} x_r/x_s)_{k_r} / (q x_r/x_s)_{k_r}`.
fn an_block<R: Real>(
    t: &mut Factors<'_, R>,
    ctx: &Ctx<R>,
    x: &[Cplx<R>],
    k: &MultiIndex,
    caps: &MultiIndex,
) {
    let n = k.dim();
    vandermonde_into(t, ctx, x, k);
    for r in 0..n {
        for s in 0..n {
            t.nqp(ctx.qi(-caps.at(s)) * x[r] / x[s], k.at(r));
            t.dqp(ctx.q * x[r] / x[s], k.at(r));
        }
    }
}

/// Vandermonde times the free-parameter block
/// `prod_{r,s} (g_s x_r/x_s)_{k_r} / (q x_r/x_s)_{k_r}`.
fn fs_block<R: Real>(
    t: &mut Factors<'_, R>,
    ctx: &Ctx<R>,
    x: &[Cplx<R>],
    k: &MultiIndex,
    gs: &[Cplx<R>],
) {
    let n = k.dim();
    vandermonde_into(t, ctx, x, k);
    for r in 0..n {
        for s in 0..n {
            t.nqp(gs[s] * x[r] / x[s], k.at(r));
            t.dqp(ctx.q * x[r] / x[s], k.at(r));
        }
    }
}

fn prod_of<R: Real>(vs: &[Cplx<R>]) -> Cplx<R> {
    vs.iter().fold(Cplx::one(), |acc, &z| acc * z)
}

pub(crate) fn eval<R: Real>(id: IdentityId, side: Side, e: &Env<'_, R>) -> Result<Cplx<R>> {
    use IdentityId::*;
    match id {
        Ft10V9 => ft_10v9(e, side),
        JacksonQDougall => jackson_q_dougall(e, side),
        Bailey10Phi9 => bailey_10phi9(e, side),
        AnJacksonRosengren => an_jackson_rosengren(e, side),
        AnJacksonRearranged => an_jackson_rearranged(e, side),
        AnJacksonSchlosser => an_jackson_schlosser(e, side),
        DnJacksonRosengren64 => dn_jackson_rosengren64(e, side),
        DnJacksonRosengren63 => dn_jackson_rosengren63(e, side),
        CnJacksonRosengren71 => cn_jackson_rosengren71(e, side),
        An12V11New => an_12v11_new(e, side),
        An12V11NewSimplex => an_12v11_new_simplex(e, side),
        AnWatsonBs1 => an_watson_bs1(e, side),
        AnWatsonBs2 => an_watson_bs2(e, side),
        AnWatsonBs3 => an_watson_bs3(e, side),
        AnWatsonBs4 => an_watson_bs4(e, side),
        An10Phi9Interchanged => an_10phi9_interchanged(e, side),
        An6Phi5 => an_6phi5(e, side),
        AnJacksonMilneVwp => an_jackson_milne_vwp(e, side),
        MilneFundamental => milne_fundamental(e, side),
        EFundamental => e_fundamental(e, side),
        TrivialLemmaAn => trivial_lemma_an(e, side),
        AnJacksonExtraParamSimplex => an_jackson_extra_param_simplex(e, side),
        AnJacksonExtraParamRect => an_jackson_extra_param_rect(e, side),
        AnToAm12V11 => an_to_am_12v11(e, side),
        An12V11RectToSimplex => an_12v11_rect_to_simplex(e, side),
        TrivialLemmaDn => trivial_lemma_dn(e, side),
        DnJacksonTwoBase => dn_jackson_two_base(e, side),
    }
}

fn ft_10v9<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let nn = e.scalar_cap() as i64;
    match side {
        Side::Lhs => e.sum(e.simplex(1, nn as usize).iterate(), |t, k| {
            let kk = k.at(0);
            t.ntheta(a * ctx.qi(2 * kk));
            t.dtheta(a);
            t.nqp_list(&[a, b, c, d, ee, ctx.qi(-nn)], kk);
            t.dqp_list(&[q, a * q / b, a * q / c, a * q / d, a * q / ee, a * ctx.qi(1 + nn)], kk);
            t.qpow(kk);
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], nn);
            t.dqp_list(&[a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], nn);
        }),
    }
}

fn jackson_q_dougall<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let nn = e.scalar_cap() as i64;
    let top = a * a * ctx.qi(1 + nn) / (b * c * d);
    match side {
        Side::Lhs => e.sum(e.simplex(1, nn as usize).iterate(), |t, k| {
            let kk = k.at(0);
            t.ntheta(a * ctx.qi(2 * kk));
            t.dtheta(a);
            t.nqp_list(&[a, b, c, d, top, ctx.qi(-nn)], kk);
            t.dqp_list(
                &[q, a * q / b, a * q / c, a * q / d, b * c * d * ctx.qi(-nn) / a, a * ctx.qi(1 + nn)],
                kk,
            );
            t.qpow(kk);
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], nn);
            t.dqp_list(&[a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], nn);
        }),
    }
}

fn bailey_10phi9<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let (a, b, c, d, ee, ff) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"), e.v("f"));
    let lam = e.v("lambda");
    let nn = e.scalar_cap() as i64;
    let top = lam * a * ctx.qi(1 + nn) / (ee * ff);
    match side {
        Side::Lhs => e.sum(e.simplex(1, nn as usize).iterate(), |t, k| {
            let kk = k.at(0);
            t.ntheta(a * ctx.qi(2 * kk));
            t.dtheta(a);
            t.nqp_list(&[a, b, c, d, ee, ff, top, ctx.qi(-nn)], kk);
            t.dqp_list(
                &[
                    q,
                    a * q / b,
                    a * q / c,
                    a * q / d,
                    a * q / ee,
                    a * q / ff,
                    ee * ff * ctx.qi(-nn) / lam,
                    a * ctx.qi(1 + nn),
                ],
                kk,
            );
            t.qpow(kk);
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[a * q, a * q / (ee * ff), lam * q / ee, lam * q / ff], nn);
                t.dqp_list(&[a * q / ee, a * q / ff, lam * q, lam * q / (ee * ff)], nn);
            })?;
            let sum = e.sum(e.simplex(1, nn as usize).iterate(), |t, k| {
                let kk = k.at(0);
                t.ntheta(lam * ctx.qi(2 * kk));
                t.dtheta(lam);
                t.nqp_list(&[lam, lam * b / a, lam * c / a, lam * d / a, ee, ff, top, ctx.qi(-nn)], kk);
                t.dqp_list(
                    &[
                        q,
                        a * q / b,
                        a * q / c,
                        a * q / d,
                        lam * q / ee,
                        lam * q / ff,
                        ee * ff * ctx.qi(-nn) / a,
                        lam * ctx.qi(1 + nn),
                    ],
                    kk,
                );
                t.qpow(kk);
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_jackson_rosengren<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                t.dtheta(a * x[r]);
                t.nqp(a * x[r], ks);
                t.nqp(d * x[r], k.at(r));
                t.nqp(a * a * x[r] * ctx.qi(1 + ns) / (b * c * d), k.at(r));
                t.dqp(a * x[r] * ctx.qi(1 + caps.at(r)), ks);
                t.dqp(a * x[r] * q / b, k.at(r));
                t.dqp(a * x[r] * q / c, k.at(r));
            }
            t.nqp_list(&[b, c], ks);
            t.dqp_list(&[a * q / d, b * c * d * ctx.qi(-ns) / a], ks);
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[a * q / (b * d), a * q / (c * d)], ns);
            t.dqp_list(&[a * q / d, a * q / (b * c * d)], ns);
            for r in 0..n {
                t.nqp(a * x[r] * q, caps.at(r));
                t.nqp(a * x[r] * q / (b * c), caps.at(r));
                t.dqp(a * x[r] * q / b, caps.at(r));
                t.dqp(a * x[r] * q / c, caps.at(r));
            }
        }),
    }
}

fn an_jackson_rearranged<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => {
            let pre = e.product(|t| {
                t.nqp(b / a, ns);
                for r in 0..n {
                    for s in 0..n {
                        t.dqp(q * x[r] / x[s], caps.at(r));
                    }
                    t.nqp(b * x[r], ns);
                    t.dqp(a * x[r] * q, caps.at(r));
                }
            })?;
            let sum = e.sum(e.rect().iterate(), |t, j| {
                let js = j.norm();
                an_block(t, ctx, x, j, &caps);
                for r in 0..n {
                    t.ntheta(a * x[r] * ctx.qi(j.at(r) + js));
                    t.dtheta(a * x[r]);
                    t.nqp(a * x[r], js);
                    t.nqp(d * x[r], j.at(r));
                    t.nqp(b * x[r] * ctx.qi(ns), j.at(r));
                    t.dqp(a * x[r] * ctx.qi(1 + caps.at(r)), js);
                    t.dqp(b * c * d * x[r] / a, j.at(r));
                    t.dqp(a * x[r] * q / c, j.at(r));
                }
                t.nqp_list(&[q * a * a / (b * c * d), c], js);
                t.dqp_list(&[a * q / d, a * ctx.qi(1 - ns) / b], js);
                t.qpow(j.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[b * c / a, a * q / (c * d)], ns);
            t.dqp(a * q / d, ns);
            for r in 0..n {
                for s in 0..n {
                    t.dqp(q * x[r] / x[s], caps.at(r));
                }
                t.nqp(b * x[r], ns);
                t.nqp(b * d * x[r] / a, caps.at(r));
                t.dqp(b * c * d * x[r] / a, caps.at(r));
                t.dqp(a * x[r] * q / c, caps.at(r));
            }
        }),
    }
}

fn an_jackson_schlosser<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.nqp(d / x[r], ks);
                t.nqp(a * a * x[r] * ctx.qi(ns + 1) / (b * c * d), k.at(r));
                t.nqp(b * c * d / (a * x[r]), ks - k.at(r));
                t.dqp(d / x[r], ks - k.at(r));
                t.dqp(a * x[r] * q / d, k.at(r));
                t.dqp(b * c * d * ctx.qi(-caps.at(r)) / (a * x[r]), ks);
            }
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, b, c], ks);
            t.dqp_list(&[a * ctx.qi(ns + 1), a * q / b, a * q / c], ks);
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[a * q, a * q / (b * c)], ns);
            t.dqp_list(&[a * q / b, a * q / c], ns);
            for r in 0..n {
                t.nqp_list(&[a * x[r] * q / (b * d), a * x[r] * q / (c * d)], caps.at(r));
                t.dqp_list(&[a * x[r] * q / d, a * x[r] * q / (b * c * d)], caps.at(r));
            }
        }),
    }
}

fn dn_jackson_rosengren64<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                for s in 0..n {
                    if r < s {
                        t.nqp(a * x[r] * x[s] * q / d, k.at(r) + k.at(s));
                    }
                    t.dqp(a * x[r] * x[s] * q / d, k.at(r));
                }
                t.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                t.dtheta(a * x[r]);
                t.nqp_list(&[a * x[r], d / x[r]], ks);
                t.dqp(a * x[r] * ctx.qi(1 + caps.at(r)), ks);
                t.dqp(d / x[r], ks - k.at(r));
                t.nqp_list(
                    &[b * x[r], c * x[r], a * a * x[r] * ctx.qi(1 + ns) / (b * c * d)],
                    k.at(r),
                );
            }
            t.dqp_list(&[a * q / b, a * q / c, b * c * d * ctx.qi(-ns) / a], ks);
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            for r in 0..n {
                for s in 0..n {
                    if r < s {
                        t.nqp(a * x[r] * x[s] * q / d, caps.at(r) + caps.at(s));
                    }
                    t.dqp(a * x[r] * x[s] * q / d, caps.at(r));
                }
                t.nqp_list(
                    &[
                        a * x[r] * q,
                        a * x[r] * q / (b * d),
                        a * x[r] * q / (c * d),
                        a * ctx.qi(1 + ns - caps.at(r)) / (b * c * x[r]),
                    ],
                    caps.at(r),
                );
            }
            t.dqp_list(&[a * q / b, a * q / c, a * q / (b * c * d)], ns);
        }),
    }
}

fn dn_jackson_rosengren63<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                t.dtheta(a * x[r]);
                t.nqp(a * x[r], ks);
                t.nqp(b * c * d / (a * x[r]), ks - k.at(r));
                t.dqp(a * x[r] * ctx.qi(1 + caps.at(r)), ks);
                t.dqp(b * c * d * ctx.qi(-caps.at(r)) / (a * x[r]), ks);
                for s in 0..n {
                    t.nqp(a * a * x[r] * x[s] * ctx.qi(1 + caps.at(s)) / (b * c * d), k.at(r));
                    if r < s {
                        t.dqp(a * a * x[r] * x[s] * q / (b * c * d), k.at(r) + k.at(s));
                    }
                }
                t.dqp_list(&[a * x[r] * q / b, a * x[r] * q / c, a * x[r] * q / d], k.at(r));
            }
            t.nqp_list(&[b, c, d], ks);
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            for r in 0..n {
                t.nqp_list(
                    &[
                        a * x[r] * q,
                        a * x[r] * q / (b * c),
                        a * x[r] * q / (b * d),
                        a * x[r] * q / (c * d),
                    ],
                    caps.at(r),
                );
                t.dqp_list(
                    &[
                        a * x[r] * q / b,
                        a * x[r] * q / c,
                        a * x[r] * q / d,
                        a * x[r] * q / (b * c * d),
                    ],
                    caps.at(r),
                );
            }
        }),
    }
}

fn cn_jackson_rosengren71<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            vandermonde_into(t, ctx, x, k);
            for r in 0..n {
                for s in 0..n {
                    if r < s {
                        t.ntheta(a * x[r] * x[s] * ctx.qi(k.at(r) + k.at(s)));
                        t.dtheta(a * x[r] * x[s]);
                    }
                    t.nqp(ctx.qi(-caps.at(s)) * x[r] / x[s], k.at(r));
                    t.nqp(a * x[r] * x[s], k.at(r));
                    t.dqp(q * x[r] / x[s], k.at(r));
                    t.dqp(a * x[r] * x[s] * ctx.qi(1 + caps.at(s)), k.at(r));
                }
                t.ntheta(a * x[r] * x[r] * ctx.qi(2 * k.at(r)));
                t.dtheta(a * x[r] * x[r]);
                t.nqp_list(
                    &[b * x[r], c * x[r], d * x[r], a * a * x[r] * ctx.qi(1 + ns) / (b * c * d)],
                    k.at(r),
                );
                t.dqp_list(
                    &[
                        a * x[r] * q / b,
                        a * x[r] * q / c,
                        a * x[r] * q / d,
                        b * c * d * x[r] * ctx.qi(-ns) / a,
                    ],
                    k.at(r),
                );
            }
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            for r in 0..n {
                for s in 0..n {
                    t.nqp(a * x[r] * x[s] * q, caps.at(r));
                    if r < s {
                        t.dqp(a * x[r] * x[s] * q, caps.at(r) + caps.at(s));
                    }
                }
                t.dqp_list(
                    &[
                        a * x[r] * q / b,
                        a * x[r] * q / c,
                        a * x[r] * q / d,
                        a * ctx.qi(1 + ns - caps.at(r)) / (b * c * d * x[r]),
                    ],
                    caps.at(r),
                );
            }
            t.nqp_list(&[a * q / (b * c), a * q / (b * d), a * q / (c * d)], ns);
        }),
    }
}

fn an_12v11_new<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee, ff) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"), e.v("f"));
    let lam = e.v("lambda");
    let caps = e.rect_caps();
    let ns = caps.norm();
    let top = lam * a * ctx.qi(ns + 1) / (ee * ff);
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                t.dtheta(a * x[r]);
                t.nqp(a * x[r], ks);
                t.dqp(a * x[r] * ctx.qi(1 + caps.at(r)), ks);
                t.nqp_list(&[c * x[r], d * x[r], top * x[r]], k.at(r));
                t.dqp_list(&[a * x[r] * q / b, a * x[r] * q / ee, a * x[r] * q / ff], k.at(r));
            }
            t.nqp_list(&[b, ee, ff], ks);
            t.dqp_list(&[a * q / c, a * q / d, ee * ff * ctx.qi(-ns) / lam], ks);
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[lam * q / ee, lam * q / ff], ns);
                t.dqp_list(&[lam * q, lam * q / (ee * ff)], ns);
                for r in 0..n {
                    t.nqp_list(&[a * x[r] * q, a * x[r] * q / (ee * ff)], caps.at(r));
                    t.dqp_list(&[a * x[r] * q / ee, a * x[r] * q / ff], caps.at(r));
                }
            })?;
            let sum = e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                t.ntheta(lam * ctx.qi(2 * ks));
                t.dtheta(lam);
                t.nqp_list(&[lam, lam * c / a, lam * d / a, ee, ff], ks);
                t.dqp_list(&[lam * ctx.qi(ns + 1), a * q / c, a * q / d, lam * q / ee, lam * q / ff], ks);
                for r in 0..n {
                    t.nqp(lam * b / (a * x[r]), ks);
                    t.nqp(top * x[r], k.at(r));
                    t.dqp(ee * ff * ctx.qi(-caps.at(r)) / (a * x[r]), ks);
                    t.dqp(a * x[r] * q / b, k.at(r));
                    t.nqp(ee * ff / (a * x[r]), ks - k.at(r));
                    t.dqp(lam * b / (a * x[r]), ks - k.at(r));
                }
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_12v11_new_simplex<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let fs = e.list("f");
    let lam = e.v("lambda");
    let nn = e.scalar_cap() as i64;
    let fprod = prod_of(&fs);
    let top = lam * a * ctx.qi(nn + 1) / (ee * fprod);
    match side {
        Side::Lhs => e.sum(e.simplex(n, nn as usize).iterate(), |t, k| {
            let ks = k.norm();
            fs_block(t, ctx, x, k, &fs);
            for r in 0..n {
                t.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                t.dtheta(a * x[r]);
                t.nqp(a * x[r], ks);
                t.dqp(a * x[r] * q / fs[r], ks);
                t.nqp_list(&[c * x[r], d * x[r], top * x[r]], k.at(r));
                t.dqp_list(&[a * x[r] * q / b, a * x[r] * q / ee, a * x[r] * ctx.qi(1 + nn)], k.at(r));
            }
            t.nqp_list(&[b, ee, ctx.qi(-nn)], ks);
            t.dqp_list(&[a * q / c, a * q / d, ee * fprod * ctx.qi(-nn) / lam], ks);
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[lam * q / ee, lam * q / fprod], nn);
                t.dqp_list(&[lam * q, lam * q / (ee * fprod)], nn);
                for r in 0..n {
                    t.nqp_list(&[a * x[r] * q, a * x[r] * q / (ee * fs[r])], nn);
                    t.dqp_list(&[a * x[r] * q / ee, a * x[r] * q / fs[r]], nn);
                }
            })?;
            let sum = e.sum(e.simplex(n, nn as usize).iterate(), |t, k| {
                let ks = k.norm();
                fs_block(t, ctx, x, k, &fs);
                t.ntheta(lam * ctx.qi(2 * ks));
                t.dtheta(lam);
                t.nqp_list(&[lam, lam * c / a, lam * d / a, ee, ctx.qi(-nn)], ks);
                t.dqp_list(&[lam * q / fprod, a * q / c, a * q / d, lam * q / ee, lam * ctx.qi(1 + nn)], ks);
                for r in 0..n {
                    t.nqp(lam * b / (a * x[r]), ks);
                    t.nqp(ee * ctx.qi(-nn) / (a * x[r]), ks - k.at(r));
                    t.dqp(lam * b / (a * x[r]), ks - k.at(r));
                    t.dqp(ee * fs[r] * ctx.qi(-nn) / (a * x[r]), ks);
                    t.nqp(top * x[r], k.at(r));
                    t.dqp(a * x[r] * q / b, k.at(r));
                }
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_watson_bs1<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.ntheta(a * x[r] * ctx.qi(k.at(r) + ks));
                t.dtheta(a * x[r]);
                t.nqp(a * x[r], ks);
                t.nqp_list(&[b * x[r], c * x[r], ee * x[r]], k.at(r));
                t.dqp(a * x[r] * ctx.qi(1 + caps.at(r)), ks);
                t.dqp(a * x[r] * q / d, k.at(r));
                t.npow(x[r], -k.at(r));
            }
            t.nqp(d, ks);
            t.dqp_list(&[a * q / b, a * q / c, a * q / ee], ks);
            t.npow(a * a / (b * c * d * ee), ks);
            t.qpow((2 + ns) * ks + k.cross_sum() + k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp(a * q / (d * ee), ns);
                t.dqp(a * q / ee, ns);
                for r in 0..n {
                    t.nqp(a * x[r] * q, caps.at(r));
                    t.dqp(a * x[r] * q / d, caps.at(r));
                }
            })?;
            let sum = e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                t.nqp(d, ks);
                for r in 0..n {
                    t.nqp(ee * x[r], k.at(r));
                    t.nqp(a * ctx.qi(1 + ks - k.at(r)) / (b * c * x[r]), k.at(r));
                }
                t.dqp_list(&[a * q / b, a * q / c, d * ee * ctx.qi(-ns) / a], ks);
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_watson_bs2<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, c, d, ee], ks);
            t.dqp_list(&[a * ctx.qi(ns + 1), a * q / c, a * q / d, a * q / ee], ks);
            for r in 0..n {
                t.npow(x[r], k.at(r));
                t.nqp(b / x[r], ks);
                t.dqp(b / x[r], ks - k.at(r));
                t.dqp(a * x[r] * q / b, k.at(r));
            }
            t.npow(a * a / (b * c * d * ee), ks);
            t.qpow((2 + ns) * ks - k.cross_sum() + k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[a * q, a * q / (d * ee)], ns);
                t.dqp_list(&[a * q / d, a * q / ee], ns);
            })?;
            let sum = e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                for r in 0..n {
                    t.nqp(a * x[r] * q / (b * c), k.at(r));
                    t.dqp(a * x[r] * q / b, k.at(r));
                }
                t.nqp_list(&[d, ee], ks);
                t.dqp_list(&[a * q / c, d * ee * ctx.qi(-ns) / a], ks);
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_watson_bs3<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.nqp(ee * x[r], k.at(r));
                t.nqp(a * ctx.qi(1 + ns) / (ee * x[r]), ks - k.at(r));
                t.dqp(a * ctx.qi(1 + ns - caps.at(r)) / (ee * x[r]), ks);
                t.npow(x[r], -k.at(r));
            }
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, b, c, d], ks);
            t.dqp_list(&[a * ctx.qi(ns + 1), a * q / b, a * q / c, a * q / d], ks);
            t.npow(a * a / (b * c * d * ee), ks);
            t.qpow((2 + ns) * ks + k.cross_sum() + k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp(a * q, ns);
                t.dqp(a * q / d, ns);
                for r in 0..n {
                    t.nqp(a * ctx.qi(1 + ns - caps.at(r)) / (d * ee * x[r]), caps.at(r));
                    t.dqp(a * ctx.qi(1 + ns - caps.at(r)) / (ee * x[r]), caps.at(r));
                }
            })?;
            let sum = e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                for r in 0..n {
                    t.nqp(ee * x[r], k.at(r));
                    t.dqp(d * ee * x[r] * ctx.qi(-ns) / a, k.at(r));
                }
                t.nqp_list(&[d, a * q / (b * c)], ks);
                t.dqp_list(&[a * q / b, a * q / c], ks);
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_watson_bs4<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.nqp(ee * x[r], k.at(r));
                t.nqp(b / x[r], ks);
                t.nqp(a * ctx.qi(1 + ns) / (ee * x[r]), ks - k.at(r));
                t.dqp(a * x[r] * q / b, k.at(r));
                t.dqp(a * ctx.qi(1 + ns - caps.at(r)) / (ee * x[r]), ks);
                t.dqp(b / x[r], ks - k.at(r));
            }
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, c, d], ks);
            t.dqp_list(&[a * ctx.qi(ns + 1), a * q / c, a * q / d], ks);
            t.npow(a * a / (b * c * d * ee), ks);
            t.qpow((2 + ns) * ks + k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp(a * q, ns);
                t.dqp(a * q / d, ns);
                for r in 0..n {
                    t.nqp(a * ctx.qi(1 + ns - caps.at(r)) / (d * ee * x[r]), caps.at(r));
                    t.dqp(a * ctx.qi(1 + ns - caps.at(r)) / (ee * x[r]), caps.at(r));
                }
            })?;
            let sum = e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                for r in 0..n {
                    t.nqp_list(&[a * x[r] * q / (b * c), ee * x[r]], k.at(r));
                    t.dqp(a * x[r] * q / b, k.at(r));
                    t.dqp(d * ee * x[r] * ctx.qi(-ns) / a, k.at(r));
                }
                t.nqp(d, ks);
                t.dqp(a * q / c, ks);
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_10phi9_interchanged<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee, ff) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"), e.v("f"));
    let lam = e.v("lambda");
    let caps = e.rect_caps();
    let ns = caps.norm();
    let top = lam * a * ctx.qi(ns + 1) / (ee * ff);
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, c, d, ee, ff], ks);
            t.dqp_list(&[a * ctx.qi(ns + 1), a * q / c, a * q / d, a * q / ee, a * q / ff], ks);
            for r in 0..n {
                t.nqp(b / x[r], ks);
                t.nqp(top * x[r], k.at(r));
                t.nqp(ee * ff / (lam * x[r]), ks - k.at(r));
                t.dqp(b / x[r], ks - k.at(r));
                t.dqp(a * x[r] * q / b, k.at(r));
                t.dqp(ee * ff * ctx.qi(-caps.at(r)) / (lam * x[r]), ks);
            }
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[a * q, a * q / (ee * ff)], ns);
                t.dqp_list(&[a * q / ee, a * q / ff], ns);
                for r in 0..n {
                    t.nqp_list(&[lam * x[r] * q / ee, lam * x[r] * q / ff], caps.at(r));
                    t.dqp_list(&[lam * x[r] * q, lam * x[r] * q / (ee * ff)], caps.at(r));
                }
            })?;
            let sum = e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                for r in 0..n {
                    t.ntheta(lam * x[r] * ctx.qi(k.at(r) + ks));
                    t.dtheta(lam * x[r]);
                    t.nqp(lam * x[r], ks);
                    t.dqp(lam * x[r] * ctx.qi(1 + caps.at(r)), ks);
                    t.nqp_list(&[lam * c * x[r] / a, lam * d * x[r] / a, top * x[r]], k.at(r));
                    t.dqp_list(&[lam * x[r] * q / ee, lam * x[r] * q / ff, a * x[r] * q / b], k.at(r));
                }
                t.nqp_list(&[ee, ff, lam * b / a], ks);
                t.dqp_list(&[a * q / c, a * q / d, ee * ff * ctx.qi(-ns) / a], ks);
                t.qpow(k.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_6phi5<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c) = (e.v("a"), e.v("b"), e.v("c"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            for r in 0..n {
                t.nqp(c * x[r], k.at(r));
                t.nqp(a * ctx.qi(1 + ns) / (c * x[r]), ks - k.at(r));
                t.dqp(a * ctx.qi(1 + ns - caps.at(r)) / (c * x[r]), ks);
                t.npow(x[r], -k.at(r));
            }
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, b], ks);
            t.dqp_list(&[a * ctx.qi(ns + 1), a * q / b], ks);
            t.npow(a / (b * c), ks);
            t.qpow((1 + ns) * ks + k.cross_sum() + k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp(a * q, ns);
            t.dqp(a * q / b, ns);
            for r in 0..n {
                t.nqp(a * ctx.qi(1 + ns - caps.at(r)) / (b * c * x[r]), caps.at(r));
                t.dqp(a * ctx.qi(1 + ns - caps.at(r)) / (c * x[r]), caps.at(r));
            }
        }),
    }
}

fn an_jackson_milne_vwp<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, b, c, d, a * a * ctx.qi(1 + ns) / (b * c * d)], ks);
            t.dqp_list(
                &[a * ctx.qi(ns + 1), a * q / b, a * q / c, a * q / d, b * c * d * ctx.qi(-ns) / a],
                ks,
            );
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], ns);
            t.dqp_list(&[a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], ns);
        }),
    }
}

fn milne_fundamental<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let x = &e.x;
    let n = e.n();
    let asl = e.list("a");
    let aprod = prod_of(&asl);
    let cap = e.scalar_cap();
    match side {
        Side::Lhs => e.sum(fixed_norm_indices(n, cap), |t, k| {
            fs_block(t, ctx, x, k, &asl);
            t.qpow(k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp(aprod, cap as i64);
            t.dqp(ctx.q, cap as i64);
        }),
    }
}

fn e_fundamental<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let x = &e.x;
    let n = e.n();
    let b = e.v("b");
    let asl = e.list("a");
    let aprod = prod_of(&asl);
    let cap = e.scalar_cap();
    match side {
        Side::Lhs => e.sum(fixed_norm_indices(n, cap), |t, k| {
            fs_block(t, ctx, x, k, &asl);
            for r in 0..n {
                t.nqp(b * x[r] / aprod, k.at(r));
                t.dqp(b * x[r], k.at(r));
            }
            t.qpow(k.weighted_sum_r_minus_1());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp(aprod, cap as i64);
            t.dqp(ctx.q, cap as i64);
            for r in 0..n {
                t.nqp(b * x[r] / asl[r], cap as i64);
                t.dqp(b * x[r], cap as i64);
            }
        }),
    }
}

fn trivial_lemma_an<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let x = &e.x;
    let n = e.n();
    let b = e.v("b");
    let asl = e.list("a");
    let aprod = prod_of(&asl);
    let cap = e.scalar_cap();
    match side {
        Side::Lhs => e.sum(e.simplex(n, cap).iterate(), |t, k| {
            let ks = k.norm();
            fs_block(t, ctx, x, k, &asl);
            for r in 0..n {
                t.nqp(b * x[r] / aprod, k.at(r));
                t.nqp(b * x[r], ks);
                t.dqp(b * x[r], k.at(r));
                t.dqp(b * x[r] / asl[r], ks);
            }
            t.qpow(k.weighted_sum_r_minus_1());
            t.nc(e.seq_at(ks));
        }),
        Side::Rhs => e.sum_values((0..=cap).map(|kk| MultiIndex(vec![kk])), |k| {
            let kk = k.at(0);
            let mut t = ctx.factors();
            t.nqp(aprod, kk);
            t.dqp(ctx.q, kk);
            t.nc(e.seq_at(kk));
            t.finish()
        }),
    }
}

fn an_jackson_extra_param_simplex<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, c, d, ee) = (e.v("a"), e.v("c"), e.v("d"), e.v("e"));
    let bs = e.list("b");
    let bprod = prod_of(&bs);
    let nn = e.scalar_cap() as i64;
    match side {
        Side::Lhs => e.sum(e.simplex(n, nn as usize).iterate(), |t, k| {
            let ks = k.norm();
            fs_block(t, ctx, x, k, &bs);
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(
                &[a, c, d, a * a * ctx.qi(1 + nn) / (bprod * c * d), ctx.qi(-nn)],
                ks,
            );
            t.dqp_list(
                &[
                    a * q / bprod,
                    a * q / c,
                    a * q / d,
                    bprod * c * d * ctx.qi(-nn) / a,
                    a * ctx.qi(nn + 1),
                ],
                ks,
            );
            for r in 0..n {
                t.nqp(ee * x[r] / bprod, k.at(r));
                t.nqp(ee * x[r], ks);
                t.dqp(ee * x[r], k.at(r));
                t.dqp(ee * x[r] / bs[r], ks);
            }
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(
                &[a * q, a * q / (bprod * c), a * q / (bprod * d), a * q / (c * d)],
                nn,
            );
            t.dqp_list(
                &[a * q / bprod, a * q / c, a * q / d, a * q / (bprod * c * d)],
                nn,
            );
        }),
    }
}

fn an_jackson_extra_param_rect<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let x = &e.x;
    let n = e.n();
    let (a, b, c, d, ee) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("e"));
    let caps = e.rect_caps();
    let ns = caps.norm();
    match side {
        Side::Lhs => e.sum(e.rect().iterate(), |t, k| {
            let ks = k.norm();
            an_block(t, ctx, x, k, &caps);
            t.ntheta(a * ctx.qi(2 * ks));
            t.dtheta(a);
            t.nqp_list(&[a, b, c, d, a * a * ctx.qi(1 + ns) / (b * c * d)], ks);
            t.dqp_list(
                &[a * ctx.qi(ns + 1), a * q / b, a * q / c, a * q / d, b * c * d * ctx.qi(-ns) / a],
                ks,
            );
            for r in 0..n {
                t.nqp(ee * x[r] * ctx.qi(ns), k.at(r));
                t.nqp(ee * x[r], ks);
                t.dqp(ee * x[r], k.at(r));
                t.dqp(ee * x[r] * ctx.qi(caps.at(r)), ks);
            }
            t.qpow(k.weighted_sum_r());
        }),
        Side::Rhs => e.product(|t| {
            t.nqp_list(&[a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], ns);
            t.dqp_list(&[a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], ns);
        }),
    }
}

fn an_to_am_12v11<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let (a, b, c, d, g, h) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"), e.v("g"), e.v("h"));
    let lam = e.v("lambda");
    let es = e.list("e");
    let fs = e.list("f");
    let eprod = prod_of(&es);
    let fprod = prod_of(&fs);
    let nn = e.scalar_cap() as i64;
    let top = lam * a * ctx.qi(1 + nn) / (eprod * fprod);
    match side {
        Side::Lhs => {
            let x = &e.x;
            let n = e.n();
            e.sum(e.simplex(n, nn as usize).iterate(), |t, k| {
                let ks = k.norm();
                fs_block(t, ctx, x, k, &es);
                t.ntheta(a * ctx.qi(2 * ks));
                t.dtheta(a);
                t.nqp_list(&[a, b, c, d], ks);
                t.dqp_list(&[a * ctx.qi(nn + 1), a * q / b, a * q / c, a * q / d], ks);
                t.nqp_list(&[fprod, top, ctx.qi(-nn)], ks);
                t.dqp_list(&[a * q / eprod, a * q / fprod, eprod * fprod * ctx.qi(-nn) / lam], ks);
                for r in 0..n {
                    t.nqp(g * x[r] / eprod, k.at(r));
                    t.nqp(g * x[r], ks);
                    t.dqp(g * x[r], k.at(r));
                    t.dqp(g * x[r] / es[r], ks);
                }
                t.qpow(k.weighted_sum_r());
            })
        }
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[a * q, a * q / (eprod * fprod), lam * q / eprod, lam * q / fprod], nn);
                t.dqp_list(&[a * q / eprod, a * q / fprod, lam * q, lam * q / (eprod * fprod)], nn);
            })?;
            let y = &e.y;
            let m = e.asg.m;
            let sum = e.sum(e.simplex(m, nn as usize).iterate(), |t, j| {
                let js = j.norm();
                fs_block(t, ctx, y, j, &fs);
                t.ntheta(lam * ctx.qi(2 * js));
                t.dtheta(lam);
                t.nqp_list(&[lam, lam * b / a, lam * c / a, lam * d / a], js);
                t.dqp_list(&[lam * ctx.qi(nn + 1), a * q / b, a * q / c, a * q / d], js);
                t.nqp_list(&[eprod, top, ctx.qi(-nn)], js);
                t.dqp_list(&[lam * q / eprod, lam * q / fprod, eprod * fprod * ctx.qi(-nn) / a], js);
                for r in 0..m {
                    t.nqp(h * y[r] / fprod, j.at(r));
                    t.nqp(h * y[r], js);
                    t.dqp(h * y[r], j.at(r));
                    t.dqp(h * y[r] / fs[r], js);
                }
                t.qpow(j.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

fn an_12v11_rect_to_simplex<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let q = ctx.q;
    let (a, b, c, d, ee, g, h) = (
        e.v("a"),
        e.v("b"),
        e.v("c"),
        e.v("d"),
        e.v("e"),
        e.v("g"),
        e.v("h"),
    );
    let lam = e.v("lambda");
    let fs = e.list("f");
    let fprod = prod_of(&fs);
    let caps = e.rect_caps();
    let ns = caps.norm();
    let top = lam * a * ctx.qi(1 + ns) / (ee * fprod);
    match side {
        Side::Lhs => {
            let x = &e.x;
            let n = e.n();
            e.sum(e.rect().iterate(), |t, k| {
                let ks = k.norm();
                an_block(t, ctx, x, k, &caps);
                t.ntheta(a * ctx.qi(2 * ks));
                t.dtheta(a);
                t.nqp_list(&[a, b, c, d], ks);
                t.dqp_list(&[a * ctx.qi(ns + 1), a * q / b, a * q / c, a * q / d], ks);
                t.nqp_list(&[ee, fprod, top], ks);
                t.dqp_list(&[a * q / ee, a * q / fprod, ee * fprod * ctx.qi(-ns) / lam], ks);
                for r in 0..n {
                    t.nqp(g * x[r] * ctx.qi(ns), k.at(r));
                    t.nqp(g * x[r], ks);
                    t.dqp(g * x[r], k.at(r));
                    t.dqp(g * x[r] * ctx.qi(caps.at(r)), ks);
                }
                t.qpow(k.weighted_sum_r());
            })
        }
        Side::Rhs => {
            let pre = e.product(|t| {
                t.nqp_list(&[a * q, a * q / (ee * fprod), lam * q / ee, lam * q / fprod], ns);
                t.dqp_list(&[a * q / ee, a * q / fprod, lam * q, lam * q / (ee * fprod)], ns);
            })?;
            let y = &e.y;
            let m = e.asg.m;
            let sum = e.sum(e.simplex(m, ns as usize).iterate(), |t, j| {
                let js = j.norm();
                fs_block(t, ctx, y, j, &fs);
                t.ntheta(lam * ctx.qi(2 * js));
                t.dtheta(lam);
                t.nqp_list(&[lam, lam * b / a, lam * c / a, lam * d / a], js);
                t.dqp_list(&[lam * ctx.qi(ns + 1), a * q / b, a * q / c, a * q / d], js);
                t.nqp_list(&[ee, top, ctx.qi(-ns)], js);
                t.dqp_list(&[lam * q / ee, lam * q / fprod, ee * fprod * ctx.qi(-ns) / a], js);
                for r in 0..m {
                    t.nqp(h * y[r] / fprod, j.at(r));
                    t.nqp(h * y[r], js);
                    t.dqp(h * y[r], j.at(r));
                    t.dqp(h * y[r] / fs[r], js);
                }
                t.qpow(j.weighted_sum_r());
            })?;
            Ok(pre * sum)
        }
    }
}

/// D_n block shared by the two sequence-style D_n identities:
/// theta Vandermonde over (x_r x_s)-damped pairs, the auxiliary-parameter
/// columns, and the g-dependent ladder.
fn dn_block<R: Real>(
    t: &mut Factors<'_, R>,
    ctx: &Ctx<R>,
    x: &[Cplx<R>],
    k: &MultiIndex,
    aux: &[Cplx<R>],
    g: Cplx<R>,
) {
    let n = k.dim();
    let ks = k.norm();
    for r in 0..n {
        for s in (r + 1)..n {
            t.ntheta(ctx.qi(k.at(r) - k.at(s)) * x[r] / x[s]);
            t.dtheta(x[r] / x[s]);
            t.dqp(x[r] * x[s], k.at(r) + k.at(s));
        }
    }
    for &y in aux {
        for r in 0..n {
            t.nqp(x[r] * y, k.at(r));
            t.nqp(x[r] / y, k.at(r));
        }
        t.dqp(g * y, ks);
        t.dqp(g / y, ks);
    }
    for r in 0..n {
        t.nqp(g * x[r], ks);
        t.nqp(g / x[r], ks - k.at(r));
        t.dqp(g * x[r], k.at(r));
        for s in 0..n {
            t.dqp(ctx.q * x[r] / x[s], k.at(r));
        }
    }
    t.qpow(k.weighted_sum_r_minus_1());
}

fn trivial_lemma_dn<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let x = &e.x;
    let n = e.n();
    let b = e.v("b");
    let asl = e.list("a");
    let cap = e.scalar_cap();
    match side {
        Side::Lhs => e.sum(e.simplex(n, cap).iterate(), |t, k| {
            dn_block(t, ctx, x, k, &asl, b);
            t.nc(e.seq_at(k.norm()));
        }),
        Side::Rhs => e.sum_values((0..=cap).map(|kk| MultiIndex(vec![kk])), |k| {
            let kk = k.at(0);
            let mut t = ctx.factors();
            t.dqp(ctx.q, kk);
            t.nc(e.seq_at(kk));
            t.finish()
        }),
    }
}

fn dn_jackson_two_base<R: Real>(e: &Env<'_, R>, side: Side) -> Result<Cplx<R>> {
    let ctx = &e.ctx;
    let ctx2 = e.ctx2.as_ref().expect("two-base context");
    let x = &e.x;
    let n = e.n();
    let g = e.v("g");
    let ys = e.list("y");
    let (a, b, c, d) = (e.v("a"), e.v("b"), e.v("c"), e.v("d"));
    let nn = e.scalar_cap() as i64;
    let q2 = ctx2.q;
    match side {
        Side::Lhs => e.sum_values(e.simplex(n, nn as usize).iterate(), |k| {
            let ks = k.norm();
            // (q, p) part.
            let mut t = ctx.factors();
            dn_block(&mut t, ctx, x, k, &ys, g);
            t.nqp(ctx.q, ks);
            let base = t.finish()?;
            if base.is_structural_zero() {
                return Ok(Value::StructuralZero);
            }
            // (q~, p~) part.
            let mut t2 = ctx2.factors();
            t2.ntheta(a * ctx2.qi(2 * ks));
            t2.dtheta(a);
            t2.nqp_list(
                &[a, b, c, d, a * a * ctx2.qi(1 + nn) / (b * c * d), ctx2.qi(-nn)],
                ks,
            );
            t2.dqp_list(
                &[
                    q2,
                    a * q2 / b,
                    a * q2 / c,
                    a * q2 / d,
                    b * c * d * ctx2.qi(-nn) / a,
                    a * ctx2.qi(nn + 1),
                ],
                ks,
            );
            t2.npow(q2, ks);
            let tilde = t2.finish()?;
            if tilde.is_structural_zero() {
                return Ok(Value::StructuralZero);
            }
            Ok(Value::Finite(base.cplx() * tilde.cplx()))
        }),
        Side::Rhs => {
            let mut t2 = ctx2.factors();
            t2.nqp_list(
                &[a * q2, a * q2 / (b * c), a * q2 / (b * d), a * q2 / (c * d)],
                nn,
            );
            t2.dqp_list(
                &[a * q2 / b, a * q2 / c, a * q2 / d, a * q2 / (b * c * d)],
                nn,
            );
            Ok(t2.finish()?.cplx())
        }
    }
}
