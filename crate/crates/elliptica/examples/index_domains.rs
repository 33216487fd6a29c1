//! Multi-index domains and the Vandermonde rewriting lemmas.
//!
//! Run with: cargo run --example index_domains

use elliptica::elliptic_core::Ctx;
use elliptica::multi_index::{
    lemma1_lhs, lemma1_rhs, lemma2_lhs, lemma2_rhs, vandermonde, IndexDomain, MultiIndex,
};
use elliptica::precision::{Cplx, PrecisionPolicy, C64};

fn main() {
    // Lexicographic iteration over a rectangle and a simplex.
    let rect = IndexDomain::Rectangle(MultiIndex(vec![1, 2]));
    println!("rectangle caps (1,2), {} indices:", rect.cardinality());
    for k in rect.iterate() {
        print!(" {:?}", k.0);
    }
    println!();
    let simplex = IndexDomain::Simplex { dim: 3, cap: 2 };
    println!("simplex n=3 |k|<=2, {} indices:", simplex.cardinality());
    for k in simplex.iterate() {
        print!(" {:?}", k.0);
    }
    println!();

    let ctx: Ctx<f64> = Ctx::from_c64(
        C64::from_polar(0.4, 1.2),
        C64::from_polar(0.2, 0.5),
        PrecisionPolicy::double(),
    )
    .unwrap();
    let x = [
        Cplx::from_f64(1.0, 0.0),
        Cplx::from_f64(0.8, 0.4),
        Cplx::from_f64(1.4, -0.3),
    ];
    let k = MultiIndex(vec![2, 0, 1]);

    let v = vandermonde(&ctx, &x, &k).unwrap().cplx();
    println!("elliptic Vandermonde at k={:?}: {:?}", k.0, v.to_c64());

    // Both sides of the two product-rewriting lemmas, evaluated
    // independently as a kernel cross-check.
    let l1 = lemma1_lhs(&ctx, &x, &k).unwrap().cplx();
    let r1 = lemma1_rhs(&ctx, &x, &k).unwrap().cplx();
    println!("lemma 1: lhs = {:?}", l1.to_c64());
    println!("         rhs = {:?}  rel dev {:.2e}", r1.to_c64(), (l1 - r1).abs() / l1.abs());

    let caps = MultiIndex(vec![3, 1, 2]);
    let l2 = lemma2_lhs(&ctx, &x, &k, &caps).unwrap().cplx();
    let r2 = lemma2_rhs(&ctx, &x, &k, &caps).unwrap().cplx();
    println!("lemma 2: lhs = {:?}", l2.to_c64());
    println!("         rhs = {:?}  rel dev {:.2e}", r2.to_c64(), (l2 - r2).abs() / l2.abs());
}
