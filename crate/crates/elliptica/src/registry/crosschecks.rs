//! Cross-checks between registered specs: the documented p = 0 reductions
//! and the n = 1 collapses onto the classical single sums. Each check
//! runs one spec's sampled assignment through a second spec after the
//! documented parameter mapping and returns the worst relative deviation
//! over both sides.

use crate::precision::{PrecisionPolicy, C64};

use super::eval::Side;
use super::{eval_side, lookup, sample, solve_constraints, Caps, Dims, Result};

fn rel(a: C64, b: C64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn worst_over_sides(
    spec_a: &super::IdentitySpec,
    asg_a: &super::Assignment,
    spec_b: &super::IdentitySpec,
    asg_b: &super::Assignment,
) -> Result<f64> {
    let policy = PrecisionPolicy::double();
    let mut worst = 0.0f64;
    for side in [Side::Lhs, Side::Rhs] {
        let va = eval_side(spec_a, side, asg_a, &policy)?;
        let vb = eval_side(spec_b, side, asg_b, &policy)?;
        worst = worst.max(rel(va, vb));
    }
    Ok(worst)
}

/// p = 0 reduction: the Frenkel-Turaev sum at p = 0 is Jackson's sum on
/// the same (a, b, c, d, N) once the balancing solves e.
pub fn p0_ft_vs_dougall(seed: u64) -> Result<f64> {
    let dougall = lookup("jackson_q_dougall")?;
    let ft = lookup("FT_10V9")?;
    let policy = PrecisionPolicy::double();
    let (asg, _) = sample(&dougall, Dims { n: 1, m: 0 }, &Caps::Scalar(3), seed, &policy)?;
    let mut asg_ft = asg.clone();
    solve_constraints(&ft, &mut asg_ft)?;
    worst_over_sides(&dougall, &asg, &ft, &asg_ft)
}

/// p = 0 reduction: the extra-parameter rectangle Jackson sum at e = 0
/// collapses onto the very-well-poised A_n Jackson sum (the e-ladder
/// factors all become 1).
pub fn p0_extra_param_vs_milne_vwp(seed: u64) -> Result<f64> {
    let vwp = lookup("an_jackson_milne_vwp")?;
    let extra = lookup("an_jackson_extra_param_rect")?;
    let policy = PrecisionPolicy::double();
    let (asg, _) = sample(&vwp, Dims { n: 2, m: 0 }, &Caps::Rect(vec![2, 2]), seed, &policy)?;
    let mut asg_e = asg.clone();
    asg_e.set("e", C64::zero());
    worst_over_sides(&vwp, &asg, &extra, &asg_e)
}

/// n = 1 collapse: the A_n elliptic Jackson sum at n = 1, x_1 = 1 is the
/// Frenkel-Turaev sum with e = a^2 q^{N+1}/(bcd), at any nome.
pub fn n1_rosengren_vs_ft(seed: u64) -> Result<f64> {
    let ros = lookup("an_jackson_rosengren")?;
    let ft = lookup("FT_10V9")?;
    let policy = PrecisionPolicy::double();
    let (asg, _) = sample(&ros, Dims { n: 1, m: 0 }, &Caps::Rect(vec![3]), seed, &policy)?;
    let mut asg_ft = asg.clone();
    asg_ft.caps = Caps::Scalar(3);
    solve_constraints(&ft, &mut asg_ft)?;
    worst_over_sides(&ros, &asg, &ft, &asg_ft)
}

/// n = 1 collapse: the new A_n 12V11 transformation at n = 1, x_1 = 1 and
/// p = 0 is Bailey's 10phi9 transformation on the same parameters.
pub fn n1_12v11_vs_bailey(seed: u64) -> Result<f64> {
    let bailey = lookup("bailey_10phi9")?;
    let new = lookup("an_12V11_new")?;
    let policy = PrecisionPolicy::double();
    let (asg, _) = sample(&bailey, Dims { n: 1, m: 0 }, &Caps::Scalar(3), seed, &policy)?;
    let mut asg_new = asg.clone();
    asg_new.caps = Caps::Rect(vec![3]);
    asg_new.x = vec![C64::one()];
    worst_over_sides(&bailey, &asg, &new, &asg_new)
}

/// All four cross-checks as (label, worst relative deviation).
pub fn all(seed: u64) -> Result<Vec<(&'static str, f64)>> {
    Ok(vec![
        ("p0: FT_10V9 == jackson_q_dougall", p0_ft_vs_dougall(seed)?),
        ("p0: an_jackson_extra_param_rect(e=0) == an_jackson_milne_vwp", p0_extra_param_vs_milne_vwp(seed)?),
        ("n=1: an_jackson_rosengren == FT_10V9", n1_rosengren_vs_ft(seed)?),
        ("n=1: an_12V11_new(p=0) == bailey_10phi9", n1_12v11_vs_bailey(seed)?),
    ])
}
