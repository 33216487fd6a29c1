//! Seeded certification sweeps over the engine objects: matrix-inverse
//! products, WP pair relations, lemma-derived pairs and lemma chains.
//! Each sweep runs a number of independent parameter draws at 53 bits and
//! escalates a missing cell to the double-double backend (tolerance
//! 1e-20) before reporting failure.

use std::rc::Rc;

use crate::bailey::{
    apply_lemma, compose_lemmas, make_pair, verify_matrix_inverse, verify_wp_pair, BressoudKind,
    LemmaKind, LemmaTag, MatrixParams, PairId, PairParams, WpPair,
};
use crate::elliptic_core::Ctx;
use crate::error::Result;
use crate::multi_index::MultiIndex;
use crate::precision::{Dd, PrecisionPolicy, Real};
use crate::registry::{Caps, Dims, SuiteEntry, SuiteStatus};
use crate::sampling::{engine_params, EngineParams};

pub const ESCALATED_TOL: f64 = 1e-20;

/// The engine tolerance ladder by dimension (same as the registry's).
pub fn ladder_tol(n: usize) -> f64 {
    crate::registry::ladder_tol(n)
}

fn entry(name: String, n: usize, caps: &[usize], seeds: u32, passes: u32, worst: f64) -> SuiteEntry {
    SuiteEntry {
        name,
        dims: Dims { n, m: 0 },
        caps: Caps::Rect(caps.to_vec()),
        trials: seeds,
        passes,
        worst_rel_err: worst,
        rejections: 0,
        status: if passes == seeds { SuiteStatus::Pass } else { SuiteStatus::Fail },
    }
}

fn matrix_params(ep: &EngineParams) -> MatrixParams {
    MatrixParams {
        a: ep.a,
        b: ep.b,
        e: Some(ep.e),
        x: ep.x.clone(),
        q: ep.q,
        p: ep.p,
    }
}

fn inverse_once<R: Real>(
    kind: BressoudKind,
    ep: &EngineParams,
    caps: &MultiIndex,
    tol: f64,
    policy: PrecisionPolicy,
) -> Result<(bool, f64)> {
    let ctx: Ctx<R> = Ctx::from_c64(ep.q, ep.p, policy)?;
    let rep = verify_matrix_inverse(kind, &ctx, &matrix_params(ep), caps, tol)?;
    Ok((rep.pass, rep.worst_residual))
}

/// Certifies one matrix kind over seeded draws; the entry aggregates the
/// pass count and the worst (53-bit) residual.
pub fn certify_matrix(
    kind: BressoudKind,
    n: usize,
    cap: usize,
    seeds: u32,
    base_seed: u64,
    tol: f64,
) -> Result<SuiteEntry> {
    let caps = MultiIndex(vec![cap; n]);
    let mut passes = 0;
    let mut worst = 0.0f64;
    for s in 0..seeds {
        let ep = engine_params(base_seed + s as u64, n, false);
        let (ok, resid) = inverse_once::<f64>(kind, &ep, &caps, tol, PrecisionPolicy::double())?;
        worst = worst.max(resid);
        if ok {
            passes += 1;
        } else {
            let (ok2, _) =
                inverse_once::<Dd>(kind, &ep, &caps, ESCALATED_TOL, PrecisionPolicy::quad())?;
            if ok2 {
                passes += 1;
            }
        }
    }
    Ok(entry(format!("matrix:{}", kind.name()), n, &vec![cap; n], seeds, passes, worst))
}

fn pair_for<R: Real>(id: PairId, ep: &EngineParams, policy: PrecisionPolicy) -> Result<WpPair<R>> {
    let ctx: Rc<Ctx<R>> = Rc::new(Ctx::from_c64(ep.q, ep.p, policy)?);
    Ok(make_pair(id, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d }))
}

fn pair_once<R: Real>(
    id: PairId,
    ep: &EngineParams,
    caps: &MultiIndex,
    tol: f64,
    policy: PrecisionPolicy,
) -> Result<(bool, f64)> {
    let pair = pair_for::<R>(id, ep, policy)?;
    let rep = verify_wp_pair(&pair, ep.a, ep.b, caps, tol)?;
    Ok((rep.pass, rep.worst_residual))
}

/// Certifies one cataloged pair over seeded draws.
pub fn certify_pair(
    id: PairId,
    n: usize,
    cap: usize,
    seeds: u32,
    base_seed: u64,
    tol: f64,
) -> Result<SuiteEntry> {
    let caps = MultiIndex(vec![cap; n]);
    let mut passes = 0;
    let mut worst = 0.0f64;
    for s in 0..seeds {
        let ep = engine_params(base_seed + s as u64, n, false);
        let (ok, resid) = pair_once::<f64>(id, &ep, &caps, tol, PrecisionPolicy::double())?;
        worst = worst.max(resid);
        if ok {
            passes += 1;
        } else {
            let (ok2, _) = pair_once::<Dd>(id, &ep, &caps, ESCALATED_TOL, PrecisionPolicy::quad())?;
            if ok2 {
                passes += 1;
            }
        }
    }
    Ok(entry(format!("pair:{}", id.name()), n, &vec![cap; n], seeds, passes, worst))
}

fn chain_once<R: Real>(
    tags: &[LemmaTag],
    seed_pair: PairId,
    ep: &EngineParams,
    caps: &MultiIndex,
    tol: f64,
    policy: PrecisionPolicy,
) -> Result<(bool, f64)> {
    let seeded = pair_for::<R>(seed_pair, ep, policy)?;
    // Distinct rho pairs per link, drawn from the same engine sample.
    let mut rng = crate::sampling::rng_for(ep.q.re.to_bits() ^ 0x9e3779b97f4a7c15);
    let lemmas: Vec<LemmaKind> = tags
        .iter()
        .map(|&tag| LemmaKind {
            tag,
            rho1: crate::sampling::draw_param(&mut rng),
            rho2: crate::sampling::draw_param(&mut rng),
        })
        .collect();
    let derived = compose_lemmas(&lemmas, &seeded)?;
    let rep = verify_wp_pair(&derived, ep.a, ep.b, caps, tol)?;
    Ok((rep.pass, rep.worst_residual))
}

/// Certifies one lemma applied to one compatible cataloged pair.
pub fn certify_lemma(
    tag: LemmaTag,
    seed_pair: PairId,
    n: usize,
    cap: usize,
    seeds: u32,
    base_seed: u64,
    tol: f64,
) -> Result<SuiteEntry> {
    certify_chain_named(
        format!("lemma:{}({})", tag.name(), seed_pair.name()),
        &[tag],
        seed_pair,
        n,
        cap,
        seeds,
        base_seed,
        tol,
    )
}

/// Certifies a lemma chain applied left-to-right to a seed pair.
pub fn certify_chain(
    tags: &[LemmaTag],
    seed_pair: PairId,
    n: usize,
    cap: usize,
    seeds: u32,
    base_seed: u64,
    tol: f64,
) -> Result<SuiteEntry> {
    let names: Vec<&str> = tags.iter().map(|t| t.name()).collect();
    certify_chain_named(
        format!("chain:{}({})", names.join(">"), seed_pair.name()),
        tags,
        seed_pair,
        n,
        cap,
        seeds,
        base_seed,
        tol,
    )
}

#[allow(clippy::too_many_arguments)]
fn certify_chain_named(
    name: String,
    tags: &[LemmaTag],
    seed_pair: PairId,
    n: usize,
    cap: usize,
    seeds: u32,
    base_seed: u64,
    tol: f64,
) -> Result<SuiteEntry> {
    let caps = MultiIndex(vec![cap; n]);
    let mut passes = 0;
    let mut worst = 0.0f64;
    for s in 0..seeds {
        let ep = engine_params(base_seed + s as u64, n, false);
        let (ok, resid) =
            chain_once::<f64>(tags, seed_pair, &ep, &caps, tol, PrecisionPolicy::double())?;
        worst = worst.max(resid);
        if ok {
            passes += 1;
        } else {
            let (ok2, _) =
                chain_once::<Dd>(tags, seed_pair, &ep, &caps, ESCALATED_TOL, PrecisionPolicy::quad())?;
            if ok2 {
                passes += 1;
            }
        }
    }
    Ok(entry(name, n, &vec![cap; n], seeds, passes, worst))
}

/// Compatible cataloged seed pairs for a lemma's source kind.
pub fn compatible_pairs(tag: LemmaTag) -> Vec<PairId> {
    PairId::all().into_iter().filter(|p| p.matrix_kind() == tag.source()).collect()
}

/// One (lemma, pair) certification for every compatible combination.
pub fn certify_all_lemmas(n: usize, cap: usize, seeds: u32, base_seed: u64, tol: f64) -> Result<Vec<SuiteEntry>> {
    let mut out = Vec::new();
    for tag in LemmaTag::all() {
        for pair in compatible_pairs(tag) {
            out.push(certify_lemma(tag, pair, n, cap, seeds, base_seed, tol)?);
        }
    }
    Ok(out)
}

/// Equivalence of the lemma-derived relation with the registered
/// transformation: the B2->B1 lemma applied to the B2 pair, written out as
/// the pair relation at the documented substitutions, must coincide with
/// the an_12V11_new spec on a shared assignment. Returns the relative
/// deviation of the two cross products T1*RHS vs T2*LHS, where
/// T1 = beta'_N and T2 = sum_j B1_{Nj} alpha'_j.
pub fn b2tob1_equivalence(seed: u64) -> Result<f64> {
    use crate::registry::{self, Side};
    let spec = registry::lookup("an_12V11_new")?;
    let policy = PrecisionPolicy::double();
    let caps_v = vec![1usize, 1];
    let (asg, _) = registry::sample(
        &spec,
        Dims { n: 2, m: 0 },
        &Caps::Rect(caps_v.clone()),
        seed,
        &policy,
    )?;
    let lhs = registry::eval_side(&spec, Side::Lhs, &asg, &policy)?;
    let rhs = registry::eval_side(&spec, Side::Rhs, &asg, &policy)?;

    // Derivation mapping: rho1 = e, rho2 = f, matrix argument
    // b -> lambda a q / (e f); the source pair keeps (c, d).
    let (a, ee, ff, lam) = (asg.val("a"), asg.val("e"), asg.val("f"), asg.val("lambda"));
    let b_matrix = lam * a * asg.q / (ee * ff);
    let ctx: Rc<Ctx<f64>> = Rc::new(Ctx::from_c64(asg.q, asg.p, policy)?);
    let seed_pair = make_pair(
        PairId::B2Primary,
        ctx.clone(),
        &asg.x,
        &PairParams { c: asg.val("c"), d: asg.val("d") },
    );
    let lemma = LemmaKind { tag: LemmaTag::B2toB1, rho1: ee, rho2: ff };
    let derived = apply_lemma(&lemma, &seed_pair)?;

    let aw = crate::precision::Cplx::widen(a);
    let bw = crate::precision::Cplx::widen(b_matrix);
    let nn = MultiIndex(caps_v);
    let t1 = derived.beta(aw, bw, &nn)?.cplx();
    let mp = MatrixParams {
        a,
        b: b_matrix,
        e: None,
        x: asg.x.clone(),
        q: asg.q,
        p: asg.p,
    };
    let mut t2 = crate::elliptic_core::CompensatedSum::<f64>::new();
    for j in crate::multi_index::IndexDomain::Rectangle(nn.clone()).iterate() {
        let b1 = crate::bailey::matrix_entry(BressoudKind::B1, &ctx, &mp, &nn, &j)?;
        let al = derived.alpha(aw, bw, &j)?;
        t2.add(b1.cplx() * al.cplx());
    }
    let t2 = t2.value();
    // The derivation claims T1 = c * LHS and T2 = c * RHS for one common
    // factor c, i.e. T1 * RHS = T2 * LHS.
    let u = t1 * crate::precision::Cplx::widen(rhs);
    let v = t2 * crate::precision::Cplx::widen(lhs);
    Ok((u - v).abs() / u.abs().max(v.abs()).max(1e-300))
}
