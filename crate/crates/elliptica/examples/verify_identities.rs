//! Two-sided verification of cataloged identities at randomly sampled
//! constrained parameters, with the precision ladder.
//!
//! Run with: cargo run --example verify_identities

use elliptica::precision::PrecisionPolicy;
use elliptica::registry::{self, Caps, Dims, Side};

fn main() {
    let policy = PrecisionPolicy::double();

    // One assignment in detail: sample, evaluate both sides, compare.
    let spec = registry::lookup("an_jackson_rosengren").unwrap();
    let caps = Caps::Rect(vec![2, 2]);
    let (asg, rejections) =
        registry::sample(&spec, Dims { n: 2, m: 0 }, &caps, 42, &policy).unwrap();
    println!("sampled {} at seed 42 ({} rejections)", spec.name, rejections);
    println!("  q = {:?}", asg.q);
    println!("  p = {:?}", asg.p);
    let lhs = registry::eval_side(&spec, Side::Lhs, &asg, &policy).unwrap();
    let rhs = registry::eval_side(&spec, Side::Rhs, &asg, &policy).unwrap();
    println!("  lhs = {lhs:?}");
    println!("  rhs = {rhs:?}");
    let res = registry::verify_identity(&spec, &asg, 1e-8).unwrap();
    println!("  rel_err = {:.3e}, pass = {}, escalated = {}", res.rel_err, res.pass, res.escalated);
    println!();

    // Trial suites across a few representative specs.
    for name in [
        "FT_10V9",
        "an_12V11_new",
        "cn_jackson_rosengren71",
        "dn_jackson_two_base",
        "an_to_am_12V11",
    ] {
        let spec = registry::lookup(name).unwrap();
        let n = if spec.has_x { 2 } else { 1 };
        let caps = registry::default_caps(&spec, n, 2);
        let entry = registry::verify_trials(
            &spec,
            10,
            1,
            Dims { n, m: 2 },
            &caps,
            registry::ladder_tol(n),
        );
        println!(
            "{:<24} {:>2}/{} trials, worst rel err {:.3e}, {} rejections -> {}",
            entry.name,
            entry.passes,
            entry.trials,
            entry.worst_rel_err,
            entry.rejections,
            entry.status.as_str()
        );
    }
    println!();

    // The sequence lemma holds for an arbitrary complex sequence f.
    let spec = registry::lookup("trivial_lemma_an").unwrap();
    let (asg, _) = registry::sample(&spec, Dims { n: 2, m: 0 }, &Caps::Scalar(3), 5, &policy).unwrap();
    let f: Vec<_> = (0..=3)
        .map(|i| elliptica::precision::C64::from_polar(1.0 + i as f64, 0.7 * i as f64))
        .collect();
    let res = registry::check_sequence_lemma(registry::Family::An, &f, &asg, 1e-9).unwrap();
    println!("sequence lemma with arbitrary f: rel_err = {:.3e}, pass = {}", res.rel_err, res.pass);
}
