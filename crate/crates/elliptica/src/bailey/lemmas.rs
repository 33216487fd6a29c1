//! The eight WP Bailey lemmas: constructive maps sending a pair attached
//! to one matrix kind to a pair attached to another (possibly the same)
//! kind, with two extra parameters rho1, rho2.
//!
//! Every lemma evaluates its source pair at the shifted second argument
//! `b -> b rho1 rho2/(aq)`; the derived alpha is a plain rescaling of the
//! source alpha and the derived beta is a finite inner sum of weighted
//! source betas over k <= N. Derived pairs memoize per evaluated index so
//! lemma chains stay affordable.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::elliptic_core::{CompensatedSum, Ctx, Factors, Value};
use crate::error::{Error, Result};
use crate::multi_index::{IndexDomain, MultiIndex};
use crate::precision::{Cplx, Real, C64};

use super::pairs::{PairEval, PairTerm, WpPair};
use super::BressoudKind;

/// Which lemma (source kind -> target kind).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum LemmaTag {
    B1toB1,
    B1toB2,
    B2toB1,
    B2toB2,
    B3toB3,
    B1toB4,
    B4toB1,
    B5toB5,
}

impl LemmaTag {
    pub fn all() -> [LemmaTag; 8] {
        [
            LemmaTag::B1toB1,
            LemmaTag::B1toB2,
            LemmaTag::B2toB1,
            LemmaTag::B2toB2,
            LemmaTag::B3toB3,
            LemmaTag::B1toB4,
            LemmaTag::B4toB1,
            LemmaTag::B5toB5,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            LemmaTag::B1toB1 => "B1toB1",
            LemmaTag::B1toB2 => "B1toB2",
            LemmaTag::B2toB1 => "B2toB1",
            LemmaTag::B2toB2 => "B2toB2",
            LemmaTag::B3toB3 => "B3toB3",
            LemmaTag::B1toB4 => "B1toB4",
            LemmaTag::B4toB1 => "B4toB1",
            LemmaTag::B5toB5 => "B5toB5",
        }
    }

    pub fn parse(s: &str) -> Option<LemmaTag> {
        LemmaTag::all().into_iter().find(|t| t.name().eq_ignore_ascii_case(s))
    }

    pub fn source(self) -> BressoudKind {
        match self {
            LemmaTag::B1toB1 | LemmaTag::B1toB2 | LemmaTag::B1toB4 => BressoudKind::B1,
            LemmaTag::B2toB1 | LemmaTag::B2toB2 => BressoudKind::B2,
            LemmaTag::B3toB3 => BressoudKind::B3,
            LemmaTag::B4toB1 => BressoudKind::B4,
            LemmaTag::B5toB5 => BressoudKind::B5,
        }
    }

    pub fn target(self) -> BressoudKind {
        match self {
            LemmaTag::B1toB1 | LemmaTag::B2toB1 | LemmaTag::B4toB1 => BressoudKind::B1,
            LemmaTag::B1toB2 | LemmaTag::B2toB2 => BressoudKind::B2,
            LemmaTag::B3toB3 => BressoudKind::B3,
            LemmaTag::B1toB4 => BressoudKind::B4,
            LemmaTag::B5toB5 => BressoudKind::B5,
        }
    }
}

/// A lemma instance: the tag plus its two inserted parameters.
#[derive(Clone, Debug)]
pub struct LemmaKind {
    pub tag: LemmaTag,
    pub rho1: C64,
    pub rho2: C64,
}

/// Applies the lemma to a pair of the matching source kind, producing the
/// derived pair attached to the lemma's target kind.
pub fn apply_lemma<R: Real>(lemma: &LemmaKind, pair: &WpPair<R>) -> Result<WpPair<R>> {
    if pair.kind != lemma.tag.source() {
        return Err(Error::KindMismatch(format!(
            "lemma {} expects a {} pair, got {}",
            lemma.tag.name(),
            lemma.tag.source().name(),
            pair.kind.name()
        )));
    }
    let r1 = Cplx::widen(lemma.rho1);
    let r2 = Cplx::widen(lemma.rho2);
    if (r1 * r2).is_zero() {
        return Err(Error::Domain("rho1 rho2 = 0 in lemma application".into()));
    }
    let label = format!("{}({})", lemma.tag.name(), pair.label);
    Ok(WpPair {
        kind: lemma.tag.target(),
        label: label.clone(),
        ctx: pair.ctx.clone(),
        x: pair.x.clone(),
        eval: Rc::new(DerivedEval {
            tag: lemma.tag,
            r1,
            r2,
            src: pair.clone(),
            memo: RefCell::new(HashMap::new()),
        }),
    })
}

/// Left-to-right composition of a lemma chain on a seed pair.
pub fn compose_lemmas<R: Real>(lemmas: &[LemmaKind], seed: &WpPair<R>) -> Result<WpPair<R>> {
    let mut cur = seed.clone();
    for lemma in lemmas {
        cur = apply_lemma(lemma, &cur)?;
    }
    Ok(cur)
}

type MemoKey = (PairTerm, [u64; 4], [u64; 4], Vec<usize>);

struct DerivedEval<R: Real> {
    tag: LemmaTag,
    r1: Cplx<R>,
    r2: Cplx<R>,
    src: WpPair<R>,
    memo: RefCell<HashMap<MemoKey, Value<R>>>,
}

fn key_of<R: Real>(z: Cplx<R>) -> [u64; 4] {
    let (a, b) = z.re.bits();
    let (c, d) = z.im.bits();
    [a, b, c, d]
}

impl<R: Real> PairEval<R> for DerivedEval<R> {
    fn eval(&self, term: PairTerm, a: Cplx<R>, b: Cplx<R>, k: &MultiIndex) -> Result<Value<R>> {
        let key: MemoKey = (term, key_of(a), key_of(b), k.0.clone());
        if let Some(&v) = self.memo.borrow().get(&key) {
            return Ok(v);
        }
        let v = self.eval_uncached(term, a, b, k)?;
        self.memo.borrow_mut().insert(key, v);
        Ok(v)
    }
}

fn vmul<R: Real>(a: Value<R>, b: Value<R>) -> Value<R> {
    match (a, b) {
        (Value::Finite(x), Value::Finite(y)) => Value::Finite(x * y),
        _ => Value::StructuralZero,
    }
}

impl<R: Real> DerivedEval<R> {
    fn eval_uncached(
        &self,
        term: PairTerm,
        a: Cplx<R>,
        b: Cplx<R>,
        nn: &MultiIndex,
    ) -> Result<Value<R>> {
        let ctx = &*self.src.ctx;
        let b_inner = b * self.r1 * self.r2 / (a * ctx.q);
        match term {
            PairTerm::Alpha => {
                let pf = self.alpha_prefactor(ctx, a, b, nn)?;
                if pf.is_structural_zero() {
                    return Ok(Value::StructuralZero);
                }
                let src = self.src.alpha(a, b_inner, nn)?;
                Ok(vmul(pf, src))
            }
            PairTerm::Beta => {
                let pf = self.beta_prefactor(ctx, a, b, nn)?;
                if pf.is_structural_zero() {
                    return Ok(Value::StructuralZero);
                }
                let mut sum = CompensatedSum::<R>::new();
                for k in IndexDomain::Rectangle(nn.clone()).iterate() {
                    let w = self.beta_weight(ctx, a, b, nn, &k)?;
                    if w.is_structural_zero() {
                        continue;
                    }
                    let src = self.src.beta(a, b_inner, &k)?;
                    if src.is_structural_zero() {
                        continue;
                    }
                    sum.add(w.cplx() * src.cplx());
                }
                Ok(vmul(pf, Value::Finite(sum.value())))
            }
        }
    }

    fn alpha_prefactor(
        &self,
        ctx: &Ctx<R>,
        a: Cplx<R>,
        _b: Cplx<R>,
        nn: &MultiIndex,
    ) -> Result<Value<R>> {
        let x = &*self.src.x;
        let n = nn.dim();
        let ns = nn.norm();
        let (r1, r2) = (self.r1, self.r2);
        let q = ctx.q;
        let aq_rr = a * q / (r1 * r2);
        let mut f = ctx.factors();
        match self.tag {
            LemmaTag::B1toB1 | LemmaTag::B2toB2 => {
                f.nqp(r1, ns);
                f.dqp(a * q / r2, ns);
                for r in 0..n {
                    f.nqp(r2 * x[r], nn.at(r));
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                }
                f.npow(aq_rr, ns);
            }
            LemmaTag::B3toB3 => {
                f.nqp(r1, ns);
                f.nqp(r2, ns);
                f.dqp(a * q / r1, ns);
                f.dqp(a * q / r2, ns);
                f.npow(aq_rr, ns);
            }
            LemmaTag::B1toB2 | LemmaTag::B4toB1 => {
                for r in 0..n {
                    f.nqp(r1 * x[r], nn.at(r));
                    f.nqp(r2 * x[r], nn.at(r));
                    f.npow(x[r], -nn.at(r));
                }
                f.dqp(a * q / r1, ns);
                f.dqp(a * q / r2, ns);
                f.npow(aq_rr, ns);
                f.qpow(nn.cross_sum());
            }
            LemmaTag::B2toB1 | LemmaTag::B1toB4 => {
                f.nqp(r1, ns);
                f.nqp(r2, ns);
                for r in 0..n {
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                    f.dqp(a * x[r] * q / r2, nn.at(r));
                    f.npow(x[r], nn.at(r));
                }
                f.npow(aq_rr, ns);
                f.qpow(-nn.cross_sum());
            }
            LemmaTag::B5toB5 => {
                for r in 0..n {
                    f.nqp(r1 * x[r], nn.at(r));
                    f.nqp(r2 * x[r], nn.at(r));
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                    f.dqp(a * x[r] * q / r2, nn.at(r));
                }
                f.npow(aq_rr, ns);
            }
        }
        f.finish()
    }

    fn beta_prefactor(
        &self,
        ctx: &Ctx<R>,
        a: Cplx<R>,
        b: Cplx<R>,
        nn: &MultiIndex,
    ) -> Result<Value<R>> {
        let x = &*self.src.x;
        let n = nn.dim();
        let ns = nn.norm();
        let (r1, r2) = (self.r1, self.r2);
        let q = ctx.q;
        let mut f = ctx.factors();
        match self.tag {
            LemmaTag::B1toB1 => {
                f.nqp(b * r1 / a, ns);
                f.dqp(a * q / r2, ns);
                for r in 0..n {
                    f.nqp(b * r2 * x[r] / a, nn.at(r));
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                }
            }
            LemmaTag::B1toB2 => {
                f.nqp(b * r1 / a, ns);
                f.nqp(b * r2 / a, ns);
                f.dqp(a * q / r1, ns);
                f.dqp(a * q / r2, ns);
            }
            LemmaTag::B2toB1 | LemmaTag::B5toB5 => {
                f.nqp(b * r1 / a, ns);
                f.nqp(b * r2 / a, ns);
                for r in 0..n {
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                    f.dqp(a * x[r] * q / r2, nn.at(r));
                }
            }
            LemmaTag::B2toB2 => {
                f.nqp(b * r2 / a, ns);
                f.dqp(a * q / r2, ns);
                for r in 0..n {
                    f.nqp(b * r1 * ctx.qi(ns - nn.at(r)) / (a * x[r]), nn.at(r));
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                }
            }
            LemmaTag::B3toB3 | LemmaTag::B4toB1 => {
                for r in 0..n {
                    f.nqp(b * r1 * x[r] / a, nn.at(r));
                    f.nqp(b * r2 * x[r] / a, nn.at(r));
                }
                f.dqp(a * q / r1, ns);
                f.dqp(a * q / r2, ns);
            }
            LemmaTag::B1toB4 => {
                for r in 0..n {
                    f.nqp(b * r1 * x[r] / a, nn.at(r));
                    f.nqp(b * r2 * x[r] / a, nn.at(r));
                    f.dqp(a * x[r] * q / r1, nn.at(r));
                    f.dqp(a * x[r] * q / r2, nn.at(r));
                }
            }
        }
        f.finish()
    }

    fn beta_weight(
        &self,
        ctx: &Ctx<R>,
        a: Cplx<R>,
        b: Cplx<R>,
        nn: &MultiIndex,
        k: &MultiIndex,
    ) -> Result<Value<R>> {
        let x = &*self.src.x;
        let n = nn.dim();
        let ns = nn.norm();
        let ks = k.norm();
        let (r1, r2) = (self.r1, self.r2);
        let q = ctx.q;
        let aq_rr = a * q / (r1 * r2);
        let brr_aq = b * r1 * r2 / (a * q);
        let brr_a = b * r1 * r2 / a;
        let mut f = ctx.factors();

        // Shared block: the triangular factor over the shifted offsets.
        let tri = |f: &mut Factors<'_, R>| {
            for r in 0..n {
                for s in 0..n {
                    f.dqp(ctx.qi(1 + k.at(r) - k.at(s)) * x[r] / x[s], nn.at(r) - k.at(r));
                }
            }
        };

        match self.tag {
            LemmaTag::B1toB1 => {
                f.nqp(r1, ks);
                f.dqp(b * r1 / a, ks);
                for r in 0..n {
                    f.nqp(r2 * x[r], k.at(r));
                    f.dqp(b * r2 * x[r] / a, k.at(r));
                    f.ntheta(brr_aq * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(brr_aq * x[r]);
                    f.nqp(b * x[r], k.at(r) + ns);
                    f.dqp(brr_a * x[r], ks + nn.at(r));
                }
                f.nqp(aq_rr, ns - ks);
                tri(&mut f);
                f.npow(aq_rr, ks);
            }
            LemmaTag::B1toB2 => {
                for r in 0..n {
                    f.nqp(r1 * x[r], k.at(r));
                    f.nqp(r2 * x[r], k.at(r));
                    f.ntheta(brr_aq * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(brr_aq * x[r]);
                    f.nqp(a * ctx.qi(1 + ns - nn.at(r)) / (r1 * r2 * x[r]), nn.at(r) - k.at(r));
                    f.dqp(brr_a * x[r], ks + nn.at(r));
                    f.npow(x[r], -k.at(r));
                }
                f.dqp(b * r1 / a, ks);
                f.dqp(b * r2 / a, ks);
                f.nqp(b, ns + ks);
                tri(&mut f);
                f.npow(aq_rr, ks);
                f.qpow(k.cross_sum());
            }
            LemmaTag::B2toB1 => {
                f.nqp(r1, ks);
                f.nqp(r2, ks);
                f.dqp(b * r1 / a, ks);
                f.dqp(b * r2 / a, ks);
                f.ntheta(brr_aq * ctx.qi(2 * ks));
                f.dtheta(brr_aq);
                for r in 0..n {
                    f.nqp(b * x[r], ns + k.at(r));
                    f.nqp(a * x[r] * ctx.qi(1 + k.at(r) - ks) / (r1 * r2), nn.at(r) - k.at(r));
                    f.npow(x[r], k.at(r));
                }
                f.dqp(brr_a, ns + ks);
                tri(&mut f);
                f.npow(aq_rr, ks);
                f.qpow(-k.cross_sum());
            }
            LemmaTag::B2toB2 => {
                f.nqp(r1, ks);
                f.dqp(b * r2 / a, ks);
                for r in 0..n {
                    f.nqp(r2 * x[r], k.at(r));
                    f.nqp(b * r1 * ctx.qi(ns) / (a * x[r]), ks - k.at(r));
                    f.dqp(b * r1 * ctx.qi(ns - nn.at(r)) / (a * x[r]), ks);
                }
                f.ntheta(brr_aq * ctx.qi(2 * ks));
                f.dtheta(brr_aq);
                f.nqp(b, ns + ks);
                f.dqp(brr_a, ns + ks);
                f.nqp(aq_rr, ns - ks);
                tri(&mut f);
                f.npow(aq_rr, ks);
            }
            LemmaTag::B3toB3 => {
                f.nqp(r1, ks);
                f.nqp(r2, ks);
                for r in 0..n {
                    f.dqp(b * r1 * x[r] / a, k.at(r));
                    f.dqp(b * r2 * x[r] / a, k.at(r));
                    f.ntheta(brr_aq * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(brr_aq * x[r]);
                    f.nqp(b * x[r], k.at(r) + ns);
                    f.dqp(brr_a * x[r], ks + nn.at(r));
                }
                f.nqp(aq_rr, ns - ks);
                tri(&mut f);
                f.npow(aq_rr, ks);
            }
            LemmaTag::B1toB4 => {
                f.nqp(r1, ks);
                f.nqp(r2, ks);
                for r in 0..n {
                    f.dqp(b * r1 * x[r] / a, k.at(r));
                    f.dqp(b * r2 * x[r] / a, k.at(r));
                    f.ntheta(brr_aq * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(brr_aq * x[r]);
                    f.nqp(a * x[r] * ctx.qi(1 + k.at(r) - ks) / (r1 * r2), nn.at(r) - k.at(r));
                    f.dqp(brr_a * x[r], nn.at(r) + ks);
                    f.npow(x[r], k.at(r));
                    for s in 0..n {
                        f.nqp(b * x[r] * x[s], nn.at(s) + k.at(r));
                        if r < s {
                            f.dqp(b * x[r] * x[s], k.at(r) + k.at(s));
                        }
                    }
                }
                tri(&mut f);
                f.npow(aq_rr, ks);
                f.qpow(-k.cross_sum());
            }
            LemmaTag::B4toB1 => {
                for r in 0..n {
                    f.nqp(r1 * x[r], k.at(r));
                    f.nqp(r2 * x[r], k.at(r));
                    f.nqp(a * ctx.qi(1 + ns - nn.at(r)) / (r1 * r2 * x[r]), nn.at(r) - k.at(r));
                    f.dqp(b * r1 * x[r] / a, k.at(r));
                    f.dqp(b * r2 * x[r] / a, k.at(r));
                    f.ntheta(brr_aq * x[r] * x[r] * ctx.qi(2 * k.at(r)));
                    f.dtheta(brr_aq * x[r] * x[r]);
                    f.nqp(b * x[r], ns + k.at(r));
                    f.npow(x[r], -k.at(r));
                    for s in 0..n {
                        if r < s {
                            f.ntheta(brr_aq * x[r] * x[s] * ctx.qi(k.at(r) + k.at(s)));
                            f.dtheta(brr_aq * x[r] * x[s]);
                            f.nqp(brr_a * x[r] * x[s], nn.at(r) + nn.at(s));
                        }
                        f.dqp(brr_a * x[r] * x[s], nn.at(s) + k.at(r));
                    }
                }
                tri(&mut f);
                f.npow(aq_rr, ks);
                f.qpow(k.cross_sum());
            }
            LemmaTag::B5toB5 => {
                for r in 0..n {
                    f.nqp(r1 * x[r], k.at(r));
                    f.nqp(r2 * x[r], k.at(r));
                    f.ntheta(brr_aq * x[r] * ctx.qi(k.at(r) + ks));
                    f.dtheta(brr_aq * x[r]);
                    f.nqp(b * x[r], ns + k.at(r));
                    f.dqp(brr_a * x[r], nn.at(r) + ks);
                }
                f.dqp(b * r1 / a, ks);
                f.dqp(b * r2 / a, ks);
                f.nqp(aq_rr, ns - ks);
                tri(&mut f);
                f.npow(aq_rr, ks);
            }
        }
        f.finish()
    }
}
