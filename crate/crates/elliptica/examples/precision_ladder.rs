//! The working-precision ladder: 53-bit evaluation with automatic
//! escalation to the ~106-bit double-double backend.
//!
//! Run with: cargo run --example precision_ladder

use elliptica::elliptic_core::Ctx;
use elliptica::precision::{Cplx, Dd, PrecisionPolicy, Real, C64};
use elliptica::registry::{self, Caps, Dims};

fn main() {
    // The same theta value at both precisions.
    let q = C64::from_polar(0.5, 1.0);
    let p = C64::from_polar(0.2, 0.3);
    let a = C64::from_polar(1.3, 2.2);
    let c53: Ctx<f64> = Ctx::from_c64(q, p, PrecisionPolicy::double()).unwrap();
    let c106: Ctx<Dd> = Ctx::from_c64(q, p, PrecisionPolicy::quad()).unwrap();
    let t53 = c53.theta(Cplx::widen(a)).unwrap();
    let t106 = c106.theta(Cplx::widen(a)).unwrap();
    println!("theta at 53 bits : ({:.17e}, {:.17e})", t53.re, t53.im);
    println!("theta at 106 bits: ({:.17e}, {:.17e})", t106.re.hi, t106.im.hi);
    println!("  low-order parts: ({:.3e}, {:.3e})", t106.re.lo, t106.im.lo);

    // Double-double keeps ~32 significant digits through cancellation.
    let one = Dd::from_f64(1.0);
    let tiny = Dd::from_f64(1e-25);
    let survived = (one + tiny) - one;
    println!("(1 + 1e-25) - 1 at 106 bits = {:.3e}", survived.to_f64());

    // Forcing an impossible 53-bit tolerance demonstrates the escalation:
    // the second attempt runs on the double-double backend.
    let spec = registry::lookup("an_jackson_rosengren").unwrap();
    let policy = PrecisionPolicy::double();
    let (asg, _) =
        registry::sample(&spec, Dims { n: 2, m: 0 }, &Caps::Rect(vec![2, 2]), 9, &policy).unwrap();
    let res = registry::verify_identity(&spec, &asg, 1e-300).unwrap();
    println!(
        "{}: escalated = {}, final rel err = {:.3e}",
        spec.name, res.escalated, res.rel_err
    );
}
