//! The WP Bailey pair catalog: every pair certified against its matrix
//! through the defining relation beta_N = sum_{j<=N} B_{Nj} alpha_j.
//!
//! Run with: cargo run --example wp_pairs

use std::rc::Rc;

use elliptica::bailey::{make_pair, verify_wp_pair, PairId, PairParams};
use elliptica::elliptic_core::Ctx;
use elliptica::multi_index::MultiIndex;
use elliptica::precision::{Cplx, PrecisionPolicy};
use elliptica::sampling;

fn main() {
    let ep = sampling::engine_params(11, 2, false);
    let ctx: Rc<Ctx<f64>> =
        Rc::new(Ctx::from_c64(ep.q, ep.p, PrecisionPolicy::double()).unwrap());
    let params = PairParams { c: ep.c, d: ep.d };
    let caps = MultiIndex(vec![2, 2]);

    for id in PairId::all() {
        let pair = make_pair(id, ctx.clone(), &ep.x, &params);
        let rep = verify_wp_pair(&pair, ep.a, ep.b, &caps, 1e-8).unwrap();
        println!(
            "{:<11} (matrix {}): {} cells, worst residual {:.3e} -> {}",
            id.name(),
            pair.kind.name(),
            rep.cells,
            rep.worst_residual,
            if rep.pass { "PASS" } else { "FAIL" }
        );
    }

    // The alpha/beta families can be probed directly.
    let pair = make_pair(PairId::B1Primary, ctx.clone(), &ep.x, &params);
    let (a, b) = (Cplx::widen(ep.a), Cplx::widen(ep.b));
    let k = MultiIndex(vec![1, 2]);
    println!();
    println!("B1_primary alpha(a,b,(1,2)) = {:?}", pair.alpha(a, b, &k).unwrap().cplx().to_c64());
    println!("B1_primary beta (a,b,(1,2)) = {:?}", pair.beta(a, b, &k).unwrap().cplx().to_c64());
}
