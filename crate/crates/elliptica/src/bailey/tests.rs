use std::rc::Rc;

use super::*;
use crate::elliptic_core::CompensatedSum;
use crate::precision::PrecisionPolicy;
use crate::sampling::engine_params;

fn ctx_of(q: C64, p: C64) -> Rc<Ctx<f64>> {
    Rc::new(Ctx::new(Cplx::widen(q), Cplx::widen(p), PrecisionPolicy::double()).unwrap())
}

fn mp_from(ep: &crate::sampling::EngineParams) -> MatrixParams {
    MatrixParams {
        a: ep.a,
        b: ep.b,
        e: Some(ep.e),
        x: ep.x.clone(),
        q: ep.q,
        p: ep.p,
    }
}

fn mi(v: &[usize]) -> MultiIndex {
    MultiIndex(v.to_vec())
}

#[test]
fn entries_at_zero_are_one() {
    let ep = engine_params(11, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let mp = mp_from(&ep);
    let z = mi(&[0, 0]);
    for kind in BressoudKind::all() {
        let v = matrix_entry(kind, &ctx, &mp, &z, &z).unwrap().cplx();
        assert!((v - Cplx::one()).abs() < 1e-12, "{}: {v:?}", kind.name());
        let w = inverse_entry(kind, &ctx, &mp, &z, &z).unwrap().cplx();
        assert!((w - Cplx::one()).abs() < 1e-12, "{} inverse: {w:?}", kind.name());
    }
}

#[test]
fn triangularity_all_kinds() {
    let ep = engine_params(5, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let mp = mp_from(&ep);
    for kind in BressoudKind::all() {
        for (k, j) in [(mi(&[1, 2]), mi(&[2, 0])), (mi(&[0, 1]), mi(&[1, 1])), (mi(&[2, 0]), mi(&[2, 1]))] {
            let v = matrix_entry(kind, &ctx, &mp, &k, &j).unwrap();
            assert!(v.is_structural_zero(), "{} at k={k:?} j={j:?}", kind.name());
            let w = inverse_entry(kind, &ctx, &mp, &k, &j).unwrap();
            assert!(w.is_structural_zero(), "{} inverse at k={k:?} j={j:?}", kind.name());
        }
    }
}

#[test]
fn b1_forms_agree() {
    // Both printed forms of the first matrix on 100 random samples.
    for seed in 0..100u64 {
        let n = 1 + (seed % 3) as usize;
        let ep = engine_params(1000 + seed, n, seed % 4 == 0);
        let ctx = ctx_of(ep.q, ep.p);
        let mp = mp_from(&ep);
        let caps = MultiIndex(vec![2; n]);
        for k in IndexDomain::Rectangle(caps).iterate() {
            for j in IndexDomain::Rectangle(k.clone()).iterate() {
                let v1 = matrix_entry(BressoudKind::B1, &ctx, &mp, &k, &j).unwrap().cplx();
                let v2 = b1_entry_form2(&ctx, &mp, &k, &j).unwrap().cplx();
                let scale = v1.abs().max(1e-300);
                assert!(
                    (v1 - v2).abs() / scale < 1e-10,
                    "seed {seed} k={k:?} j={j:?}: {v1:?} vs {v2:?}"
                );
            }
        }
    }
}

#[test]
fn b1_entry_hand_oracle_n1_p0() {
    // n=1, p=0, x=1, k=2, j=1: (b;q)_3 (b/a;q)_1 / ((aq;q)_3 (q;q)_1).
    let ep = engine_params(77, 1, true);
    let ctx = ctx_of(ep.q, ep.p);
    let mut mp = mp_from(&ep);
    mp.x = vec![C64::one()];
    let got = matrix_entry(BressoudKind::B1, &ctx, &mp, &mi(&[2]), &mi(&[1])).unwrap().cplx();
    let (a, b, q) = (Cplx::widen(ep.a), Cplx::widen(ep.b), Cplx::widen(ep.q));
    let poch = |z: Cplx<f64>, m: i64| ctx.qp_poch(z, m).unwrap();
    let expect = poch(b, 3) * poch(b / a, 1) / (poch(a * q, 3) * poch(q, 1));
    assert!((got - expect).abs() / expect.abs() < 1e-13);
}

#[test]
fn b1_reduces_to_classical_bressoud_at_n1_p0() {
    let ep = engine_params(78, 1, true);
    let ctx = ctx_of(ep.q, ep.p);
    let mut mp = mp_from(&ep);
    mp.x = vec![C64::one()];
    let (a, b, q) = (Cplx::widen(ep.a), Cplx::widen(ep.b), Cplx::widen(ep.q));
    let poch = |z: Cplx<f64>, m: i64| ctx.qp_poch(z, m).unwrap();
    for k in 0..4i64 {
        for j in 0..=k {
            let got = matrix_entry(BressoudKind::B1, &ctx, &mp, &mi(&[k as usize]), &mi(&[j as usize]))
                .unwrap()
                .cplx();
            let expect = poch(b, j + k) * poch(b / a, k - j) / (poch(a * q, j + k) * poch(q, k - j));
            assert!((got - expect).abs() / expect.abs().max(1e-300) < 1e-12);

            let gotinv = inverse_entry(BressoudKind::B1, &ctx, &mp, &mi(&[k as usize]), &mi(&[j as usize]))
                .unwrap()
                .cplx();
            let one = Cplx::one();
            let vwp = (one - a * ctx.qi(2 * k)) / (one - a) * ((one - b * ctx.qi(2 * j)) / (one - b));
            let expectinv = vwp * poch(a, j + k) * poch(a / b, k - j)
                / (poch(b * q, j + k) * poch(q, k - j))
                * (b / a).powi(k - j);
            assert!((gotinv - expectinv).abs() / expectinv.abs().max(1e-300) < 1e-12);
        }
    }
}

#[test]
fn inverse_certification_n1_n2() {
    for (seed, n) in [(21u64, 1usize), (22, 2), (23, 2)] {
        let ep = engine_params(seed, n, false);
        let ctx = ctx_of(ep.q, ep.p);
        let mp = mp_from(&ep);
        let caps = MultiIndex(vec![2; n]);
        for kind in BressoudKind::all() {
            let rep = verify_matrix_inverse(kind, &ctx, &mp, &caps, 1e-8).unwrap();
            assert!(
                rep.pass,
                "{} n={n} seed={seed}: worst {} at {:?}",
                kind.name(),
                rep.worst_residual,
                rep.worst_at
            );
        }
    }
}

#[test]
fn inverse_duality_normalizations() {
    // The printed inverses equal the partner matrix with (a, b) swapped
    // times an explicit theta-ratio and power normalization.
    let ep = engine_params(31, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let mp = mp_from(&ep);
    let mut swapped = mp.clone();
    std::mem::swap(&mut swapped.a, &mut swapped.b);
    let (a, b) = (Cplx::widen(mp.a), Cplx::widen(mp.b));
    let x: Vec<Cplx<f64>> = mp.x.iter().map(|&z| Cplx::widen(z)).collect();
    let n = x.len();
    let caps = mi(&[2, 2]);

    for k in IndexDomain::Rectangle(caps.clone()).iterate() {
        for j in IndexDomain::Rectangle(k.clone()).iterate() {
            let ks = k.norm();
            let js = j.norm();
            let ba_pow = (b / a).powi(ks - js);

            // B1 inverse vs B1(b, a).
            let inv = inverse_entry(BressoudKind::B1, &ctx, &mp, &k, &j).unwrap().cplx();
            let part = matrix_entry(BressoudKind::B1, &ctx, &swapped, &k, &j).unwrap().cplx();
            let mut norm = ba_pow;
            for r in 0..n {
                norm = norm * ctx.theta(a * x[r] * ctx.qi(k.at(r) + ks)).unwrap()
                    / ctx.theta(a * x[r]).unwrap()
                    * ctx.theta(b * x[r] * ctx.qi(j.at(r) + js)).unwrap()
                    / ctx.theta(b * x[r]).unwrap();
            }
            assert!((inv - part * norm).abs() / inv.abs().max(1e-300) < 1e-10, "B1 k={k:?} j={j:?}");

            // B2 inverse vs B3(b, a).
            let inv = inverse_entry(BressoudKind::B2, &ctx, &mp, &k, &j).unwrap().cplx();
            let part = matrix_entry(BressoudKind::B3, &ctx, &swapped, &k, &j).unwrap().cplx();
            let mut norm = ba_pow * ctx.qi(k.cross_sum() - j.cross_sum());
            norm = norm * ctx.theta(b * ctx.qi(2 * js)).unwrap() / ctx.theta(b).unwrap();
            for r in 0..n {
                norm = norm * ctx.theta(a * x[r] * ctx.qi(k.at(r) + ks)).unwrap()
                    / ctx.theta(a * x[r]).unwrap()
                    * x[r].powi(j.at(r) - k.at(r));
            }
            assert!((inv - part * norm).abs() / inv.abs().max(1e-300) < 1e-10, "B2 k={k:?} j={j:?}");

            // B4 inverse vs B5(b, a).
            let inv = inverse_entry(BressoudKind::B4, &ctx, &mp, &k, &j).unwrap().cplx();
            let part = matrix_entry(BressoudKind::B5, &ctx, &swapped, &k, &j).unwrap().cplx();
            let mut norm = ba_pow * ctx.qi(j.cross_sum() - k.cross_sum());
            for r in 0..n {
                norm = norm * ctx.theta(a * x[r] * ctx.qi(k.at(r) + ks)).unwrap()
                    / ctx.theta(a * x[r]).unwrap()
                    * (ctx.theta(b * x[r] * x[r] * ctx.qi(2 * j.at(r))).unwrap()
                        / ctx.theta(b * x[r] * x[r]).unwrap())
                    * x[r].powi(k.at(r) - j.at(r));
                for s in (r + 1)..n {
                    norm = norm * ctx.theta(b * x[r] * x[s] * ctx.qi(j.at(r) + j.at(s))).unwrap()
                        / ctx.theta(b * x[r] * x[s]).unwrap();
                }
            }
            assert!((inv - part * norm).abs() / inv.abs().max(1e-300) < 1e-10, "B4 k={k:?} j={j:?}");
        }
    }
}

fn check_pair(id: PairId, seed: u64, n: usize, tol: f64) {
    let ep = engine_params(seed, n, false);
    let ctx = ctx_of(ep.q, ep.p);
    let pair = make_pair(id, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });
    let caps = MultiIndex(vec![2; n]);
    let rep = verify_wp_pair(&pair, ep.a, ep.b, &caps, tol).unwrap();
    assert!(
        rep.pass,
        "{} n={n} seed={seed}: worst {} at {:?}",
        id.name(),
        rep.worst_residual,
        rep.worst_at
    );
}

#[test]
fn all_pairs_verify_n1() {
    for (i, id) in PairId::all().into_iter().enumerate() {
        check_pair(id, 300 + i as u64, 1, 1e-9);
    }
}

#[test]
fn all_pairs_verify_n2() {
    for (i, id) in PairId::all().into_iter().enumerate() {
        check_pair(id, 400 + i as u64, 2, 1e-8);
    }
}

#[test]
fn zero_index_pair_values_are_one() {
    let ep = engine_params(55, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let z = mi(&[0, 0]);
    let (a, b) = (Cplx::widen(ep.a), Cplx::widen(ep.b));
    for id in PairId::all() {
        let pair = make_pair(id, ctx.clone(), &ep.x, &PairParams { c: ep.c, d: ep.d });
        let al = pair.alpha(a, b, &z).unwrap().cplx();
        let be = pair.beta(a, b, &z).unwrap().cplx();
        assert!((al - Cplx::one()).abs() < 1e-12, "{} alpha", id.name());
        assert!((be - Cplx::one()).abs() < 1e-12, "{} beta", id.name());
    }
}

#[test]
fn unit_pair_alpha_is_specialized_primary() {
    // The unit pair's alpha is the d = aq/c specialization of the primary
    // pair's alpha (B1 catalog corollary).
    let ep = engine_params(60, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let d_special = ep.a * ep.q / ep.c;
    let primary = make_pair(
        PairId::B1Primary,
        ctx.clone(),
        &ep.x,
        &PairParams { c: ep.c, d: d_special },
    );
    let unit = make_pair(PairId::B1Unit, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });
    let (a, b) = (Cplx::widen(ep.a), Cplx::widen(ep.b));
    for k in IndexDomain::Rectangle(mi(&[2, 2])).iterate() {
        let u = unit.alpha(a, b, &k).unwrap().cplx();
        let p = primary.alpha(a, b, &k).unwrap().cplx();
        assert!((u - p).abs() / u.abs().max(1e-300) < 1e-10, "k={k:?}");
    }
}

#[test]
fn unit_pairs_reproduce_kronecker_delta() {
    for (i, id) in [PairId::B1Unit, PairId::B3Unit, PairId::B5Unit].into_iter().enumerate() {
        let ep = engine_params(70 + i as u64, 2, false);
        let ctx = ctx_of(ep.q, ep.p);
        let pair = make_pair(id, ctx.clone(), &ep.x, &PairParams { c: ep.c, d: ep.d });
        let ea = EntryArgs::<f64> {
            a: Cplx::widen(ep.a),
            b: Cplx::widen(ep.b),
            e: Cplx::from_f64(0.5, 0.0),
            x: ep.x.iter().map(|&z| Cplx::widen(z)).collect(),
        };
        for nn in IndexDomain::Rectangle(mi(&[2, 2])).iterate() {
            let mut sum = CompensatedSum::<f64>::new();
            for j in IndexDomain::Rectangle(nn.clone()).iterate() {
                let e = entry_impl(pair.kind, &ctx, &ea, &nn, &j).unwrap();
                let al = pair.alpha(ea.a, ea.b, &j).unwrap();
                sum.add(e.cplx() * al.cplx());
            }
            let delta = if nn.is_zero() { Cplx::one() } else { Cplx::zero() };
            assert!(
                (sum.value() - delta).abs() < 1e-10,
                "{} at N={nn:?}: {:?}",
                id.name(),
                sum.value()
            );
        }
    }
}

#[test]
fn inverse_relation_recovers_alpha() {
    // alpha_N = sum_{j<=N} (B^{-1})_{Nj} beta_j for the cataloged primary
    // pairs; numerically this is the inverse-relation closure.
    for (id, kind) in [(PairId::B1Primary, BressoudKind::B1), (PairId::B3Primary, BressoudKind::B3)] {
        let ep = engine_params(90, 2, false);
        let ctx = ctx_of(ep.q, ep.p);
        let pair = make_pair(id, ctx.clone(), &ep.x, &PairParams { c: ep.c, d: ep.d });
        let mp = mp_from(&ep);
        let (a, b) = (Cplx::widen(ep.a), Cplx::widen(ep.b));
        for nn in IndexDomain::Rectangle(mi(&[2, 2])).iterate() {
            let alpha = pair.alpha(a, b, &nn).unwrap().cplx();
            let mut sum = CompensatedSum::<f64>::new();
            for j in IndexDomain::Rectangle(nn.clone()).iterate() {
                let inv = inverse_entry(kind, &ctx, &mp, &nn, &j).unwrap();
                let beta = pair.beta(a, b, &j).unwrap();
                sum.add(inv.cplx() * beta.cplx());
            }
            let resid = (alpha - sum.value()).abs() / alpha.abs().max(1.0);
            assert!(resid < 1e-9, "{} inverse relation at N={nn:?}: {resid}", id.name());
        }
    }
}

fn lemma_of(tag: LemmaTag, ep: &crate::sampling::EngineParams) -> LemmaKind {
    LemmaKind { tag, rho1: ep.rho1, rho2: ep.rho2 }
}

#[test]
fn lemmas_produce_valid_pairs_n1() {
    let pairs_for = |kind: BressoudKind| -> Vec<PairId> {
        PairId::all().into_iter().filter(|p| p.matrix_kind() == kind).collect()
    };
    for (i, tag) in LemmaTag::all().into_iter().enumerate() {
        for (jj, id) in pairs_for(tag.source()).into_iter().enumerate() {
            let ep = engine_params(500 + 10 * i as u64 + jj as u64, 1, false);
            let ctx = ctx_of(ep.q, ep.p);
            let seed_pair = make_pair(id, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });
            let derived = apply_lemma(&lemma_of(tag, &ep), &seed_pair).unwrap();
            assert_eq!(derived.kind, tag.target());
            let rep = verify_wp_pair(&derived, ep.a, ep.b, &mi(&[2]), 1e-8).unwrap();
            assert!(
                rep.pass,
                "{} on {}: worst {} at {:?}",
                tag.name(),
                id.name(),
                rep.worst_residual,
                rep.worst_at
            );
        }
    }
}

#[test]
fn lemma_kind_mismatch_is_error() {
    let ep = engine_params(91, 1, false);
    let ctx = ctx_of(ep.q, ep.p);
    let pair = make_pair(PairId::B2Primary, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });
    let err = apply_lemma(&lemma_of(LemmaTag::B1toB1, &ep), &pair);
    assert!(matches!(err, Err(Error::KindMismatch(_))));
}

#[test]
fn lemma_zero_index_is_identity() {
    let ep = engine_params(92, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let pair = make_pair(PairId::B1Primary, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });
    let derived = apply_lemma(&lemma_of(LemmaTag::B1toB1, &ep), &pair).unwrap();
    let (a, b) = (Cplx::widen(ep.a), Cplx::widen(ep.b));
    let z = mi(&[0, 0]);
    let b_inner = b * Cplx::widen(ep.rho1) * Cplx::widen(ep.rho2) / (a * Cplx::widen(ep.q));
    let a0 = derived.alpha(a, b, &z).unwrap().cplx();
    let b0 = derived.beta(a, b, &z).unwrap().cplx();
    assert!((a0 - pair.alpha(a, b_inner, &z).unwrap().cplx()).abs() < 1e-12);
    assert!((b0 - pair.beta(a, b_inner, &z).unwrap().cplx()).abs() < 1e-12);
}

#[test]
fn compose_chain_b1_b4_b1_b2() {
    let ep = engine_params(93, 2, false);
    let ctx = ctx_of(ep.q, ep.p);
    let seed_pair = make_pair(PairId::B1Primary, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });

    // Empty chain: unchanged.
    let same = compose_lemmas(&[], &seed_pair).unwrap();
    assert_eq!(same.kind, BressoudKind::B1);

    let mut rng = crate::sampling::rng_for(99);
    let rho = |rng: &mut rand_chacha::ChaCha8Rng| crate::sampling::draw_param(rng);
    let chain = [
        LemmaKind { tag: LemmaTag::B1toB4, rho1: rho(&mut rng), rho2: rho(&mut rng) },
        LemmaKind { tag: LemmaTag::B4toB1, rho1: rho(&mut rng), rho2: rho(&mut rng) },
    ];
    let back = compose_lemmas(&chain, &seed_pair).unwrap();
    assert_eq!(back.kind, BressoudKind::B1);
    let rep = verify_wp_pair(&back, ep.a, ep.b, &mi(&[1, 1]), 1e-8).unwrap();
    assert!(rep.pass, "chain B1->B4->B1: worst {}", rep.worst_residual);

    let chain3 = [
        chain[0].clone(),
        chain[1].clone(),
        LemmaKind { tag: LemmaTag::B1toB2, rho1: rho(&mut rng), rho2: rho(&mut rng) },
    ];
    let b2 = compose_lemmas(&chain3, &seed_pair).unwrap();
    assert_eq!(b2.kind, BressoudKind::B2);
    let rep = verify_wp_pair(&b2, ep.a, ep.b, &mi(&[1, 1]), 1e-8).unwrap();
    assert!(rep.pass, "chain B1->B4->B1->B2: worst {}", rep.worst_residual);

    // Broken link errors out at the first mismatch.
    let broken = [chain[0].clone(), chain[0].clone()];
    assert!(matches!(compose_lemmas(&broken, &seed_pair), Err(Error::KindMismatch(_))));
}

#[test]
fn b1tob1_matches_classical_lemma_at_n1() {
    // At n=1, x=1 the B1->B1 lemma is the one-dimensional WP Bailey lemma;
    // both the alpha' rescaling and the beta' inner sum must agree with
    // the directly coded classical form.
    let ep = engine_params(94, 1, false);
    let mut ep = ep;
    ep.x = vec![C64::one()];
    let ctx = ctx_of(ep.q, ep.p);
    let pair = make_pair(PairId::B1Primary, ctx.clone(), &ep.x, &PairParams { c: ep.c, d: ep.d });
    let derived = apply_lemma(&lemma_of(LemmaTag::B1toB1, &ep), &pair).unwrap();

    let (a, b) = (Cplx::widen(ep.a), Cplx::widen(ep.b));
    let (r1, r2) = (Cplx::widen(ep.rho1), Cplx::widen(ep.rho2));
    let q = ctx.q;
    let b_inner = b * r1 * r2 / (a * q);
    let poch = |z: Cplx<f64>, m: i64| ctx.qp_poch(z, m).unwrap();

    for cap in 0..4usize {
        let nn = mi(&[cap]);
        let nl = cap as i64;
        let aq_rr = a * q / (r1 * r2);

        let got_alpha = derived.alpha(a, b, &nn).unwrap().cplx();
        let want_alpha = poch(r1, nl) * poch(r2, nl) / (poch(a * q / r1, nl) * poch(a * q / r2, nl))
            * aq_rr.powi(nl)
            * pair.alpha(a, b_inner, &nn).unwrap().cplx();
        assert!((got_alpha - want_alpha).abs() / want_alpha.abs().max(1e-300) < 1e-10);

        let got_beta = derived.beta(a, b, &nn).unwrap().cplx();
        let mut sum = Cplx::<f64>::zero();
        for kk in 0..=nl {
            let brr = b * r1 * r2 / (a * q);
            let w = poch(r1, kk) * poch(r2, kk)
                / (poch(b * r1 / a, kk) * poch(b * r2 / a, kk))
                * (poch(b, kk + nl) * poch(a * q / (r1 * r2), nl - kk))
                / (poch(b * r1 * r2 / a, kk + nl) * poch(q, nl - kk))
                * (ctx.theta(brr * ctx.qi(2 * kk)).unwrap() / ctx.theta(brr).unwrap())
                * aq_rr.powi(kk)
                * pair.beta(a, b_inner, &mi(&[kk as usize])).unwrap().cplx();
            sum = sum + w;
        }
        let want_beta = poch(b * r1 / a, nl) * poch(b * r2 / a, nl)
            / (poch(a * q / r1, nl) * poch(a * q / r2, nl))
            * sum;
        assert!(
            (got_beta - want_beta).abs() / want_beta.abs().max(1e-300) < 1e-10,
            "cap {cap}: {got_beta:?} vs {want_beta:?}"
        );
    }
}

#[test]
fn bressoud_symmetric_semigroup_n1() {
    // The symmetric one-dimensional formulation M(a,b) with
    // M_{kj}(a,b) = (1-aq^{2j})/(1-a) (b)_{j+k}(b/a)_{k-j} /
    //              ((aq)_{j+k}(q)_{k-j}) a^{k-j}
    // satisfies M(b,c) M(a,b) = M(a,c); tested at n=1 only.
    let ep = engine_params(140, 1, true);
    let ctx = ctx_of(ep.q, ep.p);
    let one = Cplx::one();
    let m_entry = |u: Cplx<f64>, v: Cplx<f64>, k: i64, j: i64| -> Cplx<f64> {
        if j > k {
            return Cplx::zero();
        }
        let poch = |z, m| ctx.qp_poch(z, m).unwrap();
        (one - u * ctx.qi(2 * j)) / (one - u) * poch(v, j + k) * poch(v / u, k - j)
            / (poch(u * ctx.q, j + k) * poch(ctx.q, k - j))
            * u.powi(k - j)
    };
    let (a, b, c) = (Cplx::widen(ep.a), Cplx::widen(ep.b), Cplx::widen(ep.c));
    for k in 0..4i64 {
        for l in 0..=k {
            let mut sum = Cplx::<f64>::zero();
            for j in l..=k {
                sum = sum + m_entry(b, c, k, j) * m_entry(a, b, j, l);
            }
            let direct = m_entry(a, c, k, l);
            let scale = direct.abs().max(1.0);
            assert!((sum - direct).abs() / scale < 1e-11, "k={k} l={l}");
        }
    }
}

#[test]
fn matrix_params_validation() {
    let ep = engine_params(141, 2, false);
    let mut mp = mp_from(&ep);
    assert!(mp.validate(2, 1e-8).is_ok());
    mp.q = C64::one();
    assert!(mp.validate(2, 1e-8).is_err());
    mp.q = ep.q;
    mp.x[1] = C64::zero();
    assert!(mp.validate(2, 1e-8).is_err());
}
