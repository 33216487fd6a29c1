//! The six lower-triangular transform matrices and certification of their
//! closed-form inverses.
//!
//! Run with: cargo run --example bressoud_matrices

use elliptica::bailey::{matrix_entry, verify_matrix_inverse, BressoudKind, MatrixParams};
use elliptica::elliptic_core::Ctx;
use elliptica::multi_index::MultiIndex;
use elliptica::precision::PrecisionPolicy;
use elliptica::sampling;

fn main() {
    let ep = sampling::engine_params(7, 2, false);
    let ctx: Ctx<f64> = Ctx::from_c64(ep.q, ep.p, PrecisionPolicy::double()).unwrap();
    let mp = MatrixParams {
        a: ep.a,
        b: ep.b,
        e: Some(ep.e),
        x: ep.x.clone(),
        q: ep.q,
        p: ep.p,
    };

    // Entries vanish exactly unless j <= k componentwise.
    let k = MultiIndex(vec![2, 1]);
    let inside = MultiIndex(vec![1, 1]);
    let outside = MultiIndex(vec![1, 2]);
    for kind in BressoudKind::all() {
        let v = matrix_entry(kind, &ctx, &mp, &k, &inside).unwrap();
        let z = matrix_entry(kind, &ctx, &mp, &k, &outside).unwrap();
        println!(
            "{}: B[(2,1),(1,1)] = {:?}   B[(2,1),(1,2)] structural zero: {}",
            kind.name(),
            v.cplx().to_c64(),
            z.is_structural_zero()
        );
    }
    println!();

    // sum_j B_{Nj} B^{-1}_{jK} = delta_{NK} over every pair K <= N <= (2,2).
    let caps = MultiIndex(vec![2, 2]);
    for kind in BressoudKind::all() {
        let rep = verify_matrix_inverse(kind, &ctx, &mp, &caps, 1e-8).unwrap();
        println!(
            "{}: {} delta cells checked, worst residual {:.3e} -> {}",
            kind.name(),
            rep.cells,
            rep.worst_residual,
            if rep.pass { "PASS" } else { "FAIL" }
        );
    }
}
