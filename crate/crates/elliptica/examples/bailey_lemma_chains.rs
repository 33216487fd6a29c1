//! The eight WP Bailey lemmas and their iteration: each lemma maps a pair
//! to a new pair (two extra parameters, possibly a different matrix), and
//! chains of lemmas compose.
//!
//! Run with: cargo run --example bailey_lemma_chains

use std::rc::Rc;

use elliptica::bailey::{
    apply_lemma, compose_lemmas, make_pair, verify_wp_pair, LemmaKind, LemmaTag, PairId, PairParams,
};
use elliptica::elliptic_core::Ctx;
use elliptica::multi_index::MultiIndex;
use elliptica::precision::PrecisionPolicy;
use elliptica::sampling;

fn main() {
    let ep = sampling::engine_params(23, 2, false);
    let ctx: Rc<Ctx<f64>> =
        Rc::new(Ctx::from_c64(ep.q, ep.p, PrecisionPolicy::double()).unwrap());
    let caps = MultiIndex(vec![1, 1]);

    // One application of each lemma to a compatible cataloged pair.
    for tag in LemmaTag::all() {
        let seed_id = PairId::all()
            .into_iter()
            .find(|p| p.matrix_kind() == tag.source())
            .unwrap();
        let seed = make_pair(seed_id, ctx.clone(), &ep.x, &PairParams { c: ep.c, d: ep.d });
        let lemma = LemmaKind { tag, rho1: ep.rho1, rho2: ep.rho2 };
        let derived = apply_lemma(&lemma, &seed).unwrap();
        let rep = verify_wp_pair(&derived, ep.a, ep.b, &caps, 1e-8).unwrap();
        println!(
            "{:<6} on {:<11}: derived pair on {}, worst residual {:.3e} -> {}",
            tag.name(),
            seed_id.name(),
            derived.kind.name(),
            rep.worst_residual,
            if rep.pass { "PASS" } else { "FAIL" }
        );
    }

    // Iteration: B1 -> B4 -> B1 -> B2 starting from the primary B1 pair.
    println!();
    let seed = make_pair(PairId::B1Primary, ctx, &ep.x, &PairParams { c: ep.c, d: ep.d });
    let mut rng = sampling::rng_for(99);
    let chain: Vec<LemmaKind> = [LemmaTag::B1toB4, LemmaTag::B4toB1, LemmaTag::B1toB2]
        .into_iter()
        .map(|tag| LemmaKind {
            tag,
            rho1: sampling::draw_param(&mut rng),
            rho2: sampling::draw_param(&mut rng),
        })
        .collect();
    let mut current = seed;
    for (step, lemma) in chain.iter().enumerate() {
        current = apply_lemma(lemma, &current).unwrap();
        let rep = verify_wp_pair(&current, ep.a, ep.b, &caps, 1e-8).unwrap();
        println!(
            "after step {} ({}): pair on {}, worst residual {:.3e}",
            step + 1,
            lemma.tag.name(),
            current.kind.name(),
            rep.worst_residual
        );
    }

    // compose_lemmas is the one-shot form of the same fold.
    let ctx2: Rc<Ctx<f64>> =
        Rc::new(Ctx::from_c64(ep.q, ep.p, PrecisionPolicy::double()).unwrap());
    let seed = make_pair(PairId::B1Primary, ctx2, &ep.x, &PairParams { c: ep.c, d: ep.d });
    let composed = compose_lemmas(&chain, &seed).unwrap();
    println!("composed chain label: {}", composed.label);
}
