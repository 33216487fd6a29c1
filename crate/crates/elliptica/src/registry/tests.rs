use super::*;
use crate::elliptic_core::Ctx;
use crate::precision::Cplx;

fn policy() -> PrecisionPolicy {
    PrecisionPolicy::double()
}

fn dims(n: usize, m: usize) -> Dims {
    Dims { n, m }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

#[test]
fn catalog_has_27_unique_entries() {
    let cat = catalog();
    assert_eq!(cat.len(), 27);
    let mut names: Vec<_> = cat.iter().map(|s| s.name).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), 27);
}

#[test]
fn p_zero_only_specs_are_an_or_classical() {
    for s in catalog() {
        if s.p_zero_only {
            assert!(
                matches!(s.family, Family::An | Family::Classical),
                "{} is p-zero-only with family {:?}",
                s.name,
                s.family
            );
        }
    }
}

#[test]
fn ft_balancing_is_solved() {
    let spec = lookup("FT_10V9").unwrap();
    assert_eq!(spec.solved_param, Some("e"));
    let (asg, _) = sample(&spec, dims(1, 0), &Caps::Scalar(3), 9, &policy()).unwrap();
    let (a, b, c, d, e) = (asg.val("a"), asg.val("b"), asg.val("c"), asg.val("d"), asg.val("e"));
    let lhs = a * a * asg.q.powi(4);
    let rhs = b * c * d * e;
    assert!(rel(lhs, rhs) < 1e-14, "balancing violated: {lhs:?} vs {rhs:?}");
}

#[test]
fn lambda_recorded_for_transformations() {
    let spec = lookup("an_12V11_new").unwrap();
    let (asg, _) = sample(&spec, dims(2, 0), &Caps::Rect(vec![1, 1]), 3, &policy()).unwrap();
    let (a, b, c, d) = (asg.val("a"), asg.val("b"), asg.val("c"), asg.val("d"));
    assert!(rel(asg.val("lambda"), asg.q * a * a / (b * c * d)) < 1e-15);
}

#[test]
fn solve_constraints_degenerate_is_error() {
    let spec = lookup("FT_10V9").unwrap();
    let (mut asg, _) = sample(&spec, dims(1, 0), &Caps::Scalar(2), 4, &policy()).unwrap();
    asg.set("b", C64::zero());
    assert!(matches!(solve_constraints(&spec, &mut asg), Err(Error::Constraint(_))));
}

#[test]
fn sampling_is_deterministic_and_p_zero_forced() {
    let spec = lookup("an_watson_BS2").unwrap();
    let caps = Caps::Rect(vec![2, 2]);
    let (a1, r1) = sample(&spec, dims(2, 0), &caps, 42, &policy()).unwrap();
    let (a2, r2) = sample(&spec, dims(2, 0), &caps, 42, &policy()).unwrap();
    assert_eq!(r1, r2);
    assert_eq!(a1.q, a2.q);
    assert_eq!(a1.val("a"), a2.val("a"));
    assert_eq!(a1.x, a2.x);
    assert_eq!(a1.p.abs(), 0.0, "p forced to zero");
}

#[test]
fn all_caps_zero_sides_are_one() {
    for spec in catalog() {
        let n = 2;
        let caps = default_caps(&spec, n, 0);
        let (asg, _) = sample(&spec, dims(n, 2), &caps, 17, &policy()).unwrap();
        let lhs = eval_side(&spec, Side::Lhs, &asg, &policy()).unwrap();
        let rhs = eval_side(&spec, Side::Rhs, &asg, &policy()).unwrap();
        assert!(rel(lhs, rhs) < 1e-13, "{}: lhs={lhs:?} rhs={rhs:?}", spec.name);
        if !spec.has_sequence {
            assert!((lhs - C64::one()).abs() < 1e-12, "{}: lhs={lhs:?}", spec.name);
        }
    }
}

#[test]
fn ft_two_term_hand_oracle() {
    // N = 1: LHS = 1 + theta(aq^2)/theta(a) *
    //   (a,b,c,d,e,q^{-1};q,p)_1 / (q,aq/b,aq/c,aq/d,aq/e,aq^2;q,p)_1 * q.
    let spec = lookup("FT_10V9").unwrap();
    let (asg, _) = sample(&spec, dims(1, 0), &Caps::Scalar(1), 23, &policy()).unwrap();
    let ctx: Ctx<f64> = Ctx::from_c64(asg.q, asg.p, policy()).unwrap();
    let w = |z: C64| Cplx::widen(z);
    let (a, b, c, d, e) = (
        w(asg.val("a")),
        w(asg.val("b")),
        w(asg.val("c")),
        w(asg.val("d")),
        w(asg.val("e")),
    );
    let q = ctx.q;
    let th = |z| ctx.theta(z).unwrap();
    let num = [a, b, c, d, e, ctx.qi(-1)]
        .iter()
        .fold(C64::one(), |acc, &z| acc * th(z));
    let den = [q, a * q / b, a * q / c, a * q / d, a * q / e, a * q * q]
        .iter()
        .fold(C64::one(), |acc, &z| acc * th(z));
    let expect = C64::one() + th(a * q * q) / th(a) * num / den * q;
    let got = eval_side(&spec, Side::Lhs, &asg, &policy()).unwrap();
    assert!(rel(got, expect) < 1e-12, "{got:?} vs {expect:?}");
}

#[test]
fn milne_fundamental_two_term_oracle() {
    // n = 2, K = 1, p = 0:
    // LHS = sum over (1,0),(0,1) == (a1 a2; q)_1/(q; q)_1.
    let spec = lookup("milne_fundamental").unwrap();
    let (asg, _) = sample(&spec, dims(2, 0), &Caps::Scalar(1), 31, &policy()).unwrap();
    let q = asg.q;
    let a1 = asg.lists["a"][0];
    let a2 = asg.lists["a"][1];
    let (x1, x2) = (asg.x[0], asg.x[1]);
    let one = C64::one();
    // k = (1,0): V = (1 - q x1/x2)/(1 - x1/x2); block gives
    //   (a1;q)_1 (a2 x1/x2;q)_1 / ((q;q)_1 (q x1/x2;q)_1), q-power q^0.
    let t10 = (one - q * x1 / x2) / (one - x1 / x2) * (one - a1) * (one - a2 * x1 / x2)
        / ((one - q) * (one - q * x1 / x2));
    // k = (0,1): V = (1 - q^{-1} x1/x2)/(1 - x1/x2); block gives
    //   (a1 x2/x1;q)_1 (a2;q)_1 / ((q x2/x1;q)_1 (q;q)_1), q-power q^1.
    let t01 = (one - x1 / (q * x2)) / (one - x1 / x2) * (one - a1 * x2 / x1) * (one - a2)
        / ((one - q * x2 / x1) * (one - q))
        * q;
    let expect = t10 + t01;
    let got = eval_side(&spec, Side::Lhs, &asg, &policy()).unwrap();
    assert!(rel(got, expect) < 1e-12, "{got:?} vs {expect:?}");
    let rhs = eval_side(&spec, Side::Rhs, &asg, &policy()).unwrap();
    let direct = (one - a1 * a2) / (one - q);
    assert!(rel(rhs, direct) < 1e-13);
}

#[test]
fn rosengren_n2_passes_at_seed_1() {
    let spec = lookup("an_jackson_rosengren").unwrap();
    let (asg, _) = sample(&spec, dims(2, 0), &Caps::Rect(vec![2, 2]), 1, &policy()).unwrap();
    let res = verify_identity(&spec, &asg, 1e-8).unwrap();
    assert!(res.pass, "rel_err = {}", res.rel_err);
}

#[test]
fn every_spec_passes_one_trial() {
    for spec in catalog() {
        let n = if spec.has_x { 2 } else { 1 };
        let caps = default_caps(&spec, n, 2);
        let entry = verify_trials(&spec, 1, 1000, dims(n, 2), &caps, ladder_tol(n));
        assert_eq!(
            entry.status,
            SuiteStatus::Pass,
            "{}: worst={} rejections={}",
            spec.name,
            entry.worst_rel_err,
            entry.rejections
        );
    }
}

#[test]
fn trials_aggregate_counts() {
    let spec = lookup("FT_10V9").unwrap();
    let entry = verify_trials(&spec, 5, 7, dims(1, 0), &Caps::Scalar(3), 1e-10);
    assert_eq!(entry.passes, 5);
    assert_eq!(entry.status, SuiteStatus::Pass);
    assert!(entry.worst_rel_err <= 1e-10);
}

#[test]
fn sequence_lemma_zero_and_random() {
    for name in ["trivial_lemma_an", "trivial_lemma_dn"] {
        let spec = lookup(name).unwrap();
        let (asg, _) = sample(&spec, dims(2, 0), &Caps::Scalar(3), 11, &policy()).unwrap();
        // f = 0: both sides vanish.
        let zeros = vec![C64::zero(); 4];
        let family = if name.ends_with("dn") { Family::Dn } else { Family::An };
        let res = check_sequence_lemma(family, &zeros, &asg, 1e-9).unwrap();
        assert!(res.lhs.abs() < 1e-13 && res.rhs.abs() < 1e-13);
        // random f from the sampled assignment.
        let res = verify_identity(&spec, &asg, 1e-9).unwrap();
        assert!(res.pass, "{name}: rel_err = {}", res.rel_err);
    }
}

#[test]
fn one_hot_sequence_isolates_e_fundamental() {
    let tl = lookup("trivial_lemma_an").unwrap();
    let ef = lookup("e_fundamental").unwrap();
    let cap = 3usize;
    let (mut asg, _) = sample(&tl, dims(2, 0), &Caps::Scalar(cap), 13, &policy()).unwrap();
    let kk = 2usize;
    asg.seq = (0..=cap).map(|i| if i == kk { C64::one() } else { C64::zero() }).collect();
    let res = verify_identity(&tl, &asg, 1e-9).unwrap();
    assert!(res.pass, "one-hot sequence: rel_err = {}", res.rel_err);

    // The isolated coefficient is the fixed-norm identity at K = kk up to
    // the explicit b-ladder ratio.
    let mut asg_ef = asg.clone();
    asg_ef.caps = Caps::Scalar(kk);
    let lhs_tl = eval_side(&tl, Side::Lhs, &asg, &policy()).unwrap();
    let lhs_ef = eval_side(&ef, Side::Lhs, &asg_ef, &policy()).unwrap();
    let ctx: Ctx<f64> = Ctx::from_c64(asg.q, asg.p, policy()).unwrap();
    let b = Cplx::widen(asg.val("b"));
    let mut ladder = C64::one();
    for r in 0..2 {
        let xr = Cplx::widen(asg.x[r]);
        let ar = Cplx::widen(asg.lists["a"][r]);
        ladder = ladder * ctx.qp_poch(b * xr, kk as i64).unwrap()
            / ctx.qp_poch(b * xr / ar, kk as i64).unwrap();
    }
    assert!(rel(lhs_tl, lhs_ef * ladder) < 1e-10);
}

#[test]
fn sequence_lemma_rhs_independent_of_x_and_b() {
    let spec = lookup("trivial_lemma_an").unwrap();
    let (asg, _) = sample(&spec, dims(2, 0), &Caps::Scalar(3), 19, &policy()).unwrap();
    let rhs = eval_side(&spec, Side::Rhs, &asg, &policy()).unwrap();
    let mut moved = asg.clone();
    let mut rng = crate::sampling::rng_for(777);
    moved.x = (0..2).map(|_| crate::sampling::draw_param(&mut rng)).collect();
    moved.set("b", crate::sampling::draw_param(&mut rng));
    let rhs2 = eval_side(&spec, Side::Rhs, &moved, &policy()).unwrap();
    assert!(rel(rhs, rhs2) < 1e-15, "RHS moved with x, b");
    let res = verify_identity(&spec, &moved, 1e-9).unwrap();
    assert!(res.pass, "identity should hold at the resampled point");
}

#[test]
fn two_base_rhs_independent_of_g_side() {
    let spec = lookup("dn_jackson_two_base").unwrap();
    let (asg, _) = sample(&spec, dims(2, 0), &Caps::Scalar(2), 29, &policy()).unwrap();
    let rhs = eval_side(&spec, Side::Rhs, &asg, &policy()).unwrap();
    let mut moved = asg.clone();
    let mut rng = crate::sampling::rng_for(778);
    moved.set("g", crate::sampling::draw_param(&mut rng));
    let rhs2 = eval_side(&spec, Side::Rhs, &moved, &policy()).unwrap();
    assert!(rel(rhs, rhs2) < 1e-15, "RHS depends on g");
    let res = verify_identity(&spec, &moved, 1e-8).unwrap();
    assert!(res.pass, "two-base identity at moved g: rel_err = {}", res.rel_err);
}

#[test]
fn simplex_specialization_matches_rectangle() {
    // an_12V11_new_simplex at f_s = q^{-N_s} agrees with an_12V11_new.
    let rect = lookup("an_12V11_new").unwrap();
    let simp = lookup("an_12V11_new_simplex").unwrap();
    let caps = vec![2usize, 1];
    let total: usize = caps.iter().sum();
    let (mut asg, _) = sample(&rect, dims(2, 0), &Caps::Rect(caps.clone()), 37, &policy()).unwrap();
    // The simplex form turns the rectangle caps into the f-parameters and
    // the free f into the scalar termination q^{-N}.
    asg.set("f", asg.q.powi(-(total as i64)));
    let mut asg_s = asg.clone();
    asg_s.caps = Caps::Scalar(total);
    asg_s
        .lists
        .insert("f".to_string(), caps.iter().map(|&nr| asg.q.powi(-(nr as i64))).collect());
    for side in [Side::Lhs, Side::Rhs] {
        let vr = eval_side(&rect, side, &asg, &policy()).unwrap();
        let vs = eval_side(&simp, side, &asg_s, &policy()).unwrap();
        assert!(rel(vr, vs) < 1e-8, "{side:?}: {vr:?} vs {vs:?}");
    }
}

#[test]
fn cross_checks_all_small() {
    for (label, dev) in crosschecks::all(5).unwrap() {
        assert!(dev < 1e-10, "{label}: deviation {dev}");
    }
}

#[test]
fn fault_injection_fails_loudly() {
    for fault in [Fault::BumpQExponent, Fault::ShiftFactorIndex] {
        let spec = lookup("an_jackson_rosengren").unwrap();
        let entry = verify_trials_with_fault(
            &spec,
            5,
            50,
            dims(2, 0),
            &Caps::Rect(vec![2, 2]),
            1e-8,
            Some(fault),
        );
        assert_eq!(entry.status, SuiteStatus::Fail, "{fault:?} was not detected");
        assert_eq!(entry.passes, 0, "{fault:?} passed {} trials", entry.passes);
    }
}

#[test]
fn p_zero_only_rejects_nonzero_nome() {
    let spec = lookup("an_watson_BS1").unwrap();
    let (mut asg, _) = sample(&spec, dims(2, 0), &Caps::Rect(vec![1, 1]), 3, &policy()).unwrap();
    asg.p = C64::from_polar(0.1, 1.0);
    assert!(matches!(
        eval_side(&spec, Side::Lhs, &asg, &policy()),
        Err(Error::Domain(_))
    ));
}

#[test]
fn escalation_separates_roundoff_from_mismatch() {
    // A genuinely failing comparison stays failed after escalation: the
    // injected exponent fault survives the 106-bit retry.
    let spec = lookup("FT_10V9").unwrap();
    let (asg, _) = sample(&spec, dims(1, 0), &Caps::Scalar(2), 8, &policy()).unwrap();
    let res = verify_identity_with_fault(&spec, &asg, 1e-10, Some(Fault::BumpQExponent)).unwrap();
    assert!(!res.pass);
    assert!(res.escalated);
    assert!(res.rel_err > 1e-12);

    // Solved parameters are recomputed at working precision, so the
    // balancing holds bit-exactly even after escalation.
    let res = verify_identity(&spec, &asg, 1e-300);
    let res = res.unwrap();
    assert!(res.escalated && res.rel_err < 1e-21, "rel = {}", res.rel_err);
}

#[test]
fn an_to_am_trials_at_m3() {
    let spec = lookup("an_to_am_12V11").unwrap();
    let entry = verify_trials(&spec, 10, 200, dims(2, 3), &Caps::Scalar(2), 1e-7);
    assert_eq!(entry.passes, 10, "worst = {}", entry.worst_rel_err);
    assert_eq!(entry.status, SuiteStatus::Pass);
}
