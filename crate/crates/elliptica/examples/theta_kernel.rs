//! The numeric kernel: modified Jacobi theta functions, q,p-shifted
//! factorials, the extended-product convention and structural zeros.
//!
//! Run with: cargo run --example theta_kernel

use elliptica::elliptic_core::{extended_product, Ctx};
use elliptica::precision::{Cplx, PrecisionPolicy, C64};

fn main() {
    let q = C64::from_polar(0.45, 0.8);
    let p = C64::from_polar(0.15, 2.1);
    let ctx: Ctx<f64> = Ctx::from_c64(q, p, PrecisionPolicy::double()).unwrap();

    let a = Cplx::from_f64(0.8, 0.3);
    let theta = ctx.theta(a).unwrap();
    println!("theta(a; p)           = {:?}", theta.to_c64());

    // Reflection identity: theta(a) = theta(p/a) = -a theta(1/a).
    let refl = ctx.theta(ctx.p / a).unwrap();
    let neg = -a * ctx.theta(a.inv()).unwrap();
    println!("theta(p/a; p)         = {:?}", refl.to_c64());
    println!("-a theta(1/a; p)      = {:?}", neg.to_c64());

    // theta degenerates to 1 - a when the nome vanishes.
    let ctx0: Ctx<f64> = Ctx::from_c64(q, C64::zero(), PrecisionPolicy::double()).unwrap();
    println!("theta(a; 0)           = {:?} (vs 1 - a)", ctx0.theta(a).unwrap().to_c64());

    // Shifted factorials at positive, zero and negative index.
    for k in [3i64, 0, -3] {
        let v = ctx.qp_poch(a, k).unwrap();
        println!("(a; q, p)_{k:<2}         = {:?}", v.to_c64());
    }
    // (a;q,p)_{-k} (a q^{-k};q,p)_k = 1.
    let check: Cplx<f64> = ctx.qp_poch(a, -3).unwrap() * ctx.qp_poch(a * ctx.qi(-3), 3).unwrap();
    println!("negative-index check  = {:?} (should be 1)", check.to_c64());

    // The structural zero: 1/(q;q,p)_k vanishes identically for k < 0.
    let guarded = ctx.qp_reciprocal_guard(ctx.q, -2).unwrap();
    println!("1/(q; q, p)_(-2)      = structural zero? {}", guarded.is_structural_zero());

    // The three-case extended product.
    let term = |_: i64| Cplx::<f64>::from_f64(2.0, 0.0);
    println!(
        "prod 2 over [0..2]    = {:?}; empty [0..-1] = {:?}; reciprocal [0..-3] = {:?}",
        extended_product(term, 0, 2).unwrap().to_c64(),
        extended_product(term, 0, -1).unwrap().to_c64(),
        extended_product(term, 0, -3).unwrap().to_c64(),
    );
}
