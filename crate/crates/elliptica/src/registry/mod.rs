//! Canonical catalog of the terminating summation and transformation
//! identities, with constrained random sampling and two-sided numerical
//! verification.
//!
//! Each spec owns evaluators for both sides of its printed equation. A
//! verification trial samples a constraint-satisfying assignment (with
//! pole rejection), evaluates both sides in lexicographic order with
//! compensated accumulation, and compares at a dimension-dependent
//! tolerance; a miss at 53 bits retries once at >=106 bits before being
//! reported as a failure.

pub mod crosschecks;
mod eval;

use std::collections::BTreeMap;

use crate::elliptic_core::Ctx;
use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::precision::{Cplx, PrecisionPolicy, Real, C64};
use crate::sampling;

pub use eval::Side;

/// Root-system family of a spec.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Family {
    An,
    Cn,
    Dn,
    Classical,
}

/// Shape of the summation domain(s).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DomainKind {
    Rectangle,
    Simplex,
    RectangleToSimplex,
    EquationInSequence,
}

/// Identifier of each cataloged identity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Ft10V9,
    JacksonQDougall,
    Bailey10Phi9,
    AnJacksonRosengren,
    AnJacksonRearranged,
    AnJacksonSchlosser,
    DnJacksonRosengren64,
    DnJacksonRosengren63,
    CnJacksonRosengren71,
    An12V11New,
    An12V11NewSimplex,
    AnWatsonBs1,
    AnWatsonBs2,
    AnWatsonBs3,
    AnWatsonBs4,
    An10Phi9Interchanged,
    An6Phi5,
    AnJacksonMilneVwp,
    MilneFundamental,
    EFundamental,
    TrivialLemmaAn,
    AnJacksonExtraParamSimplex,
    AnJacksonExtraParamRect,
    AnToAm12V11,
    An12V11RectToSimplex,
    TrivialLemmaDn,
    DnJacksonTwoBase,
}

/// How long a parameter list is relative to the dimensions.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ListLen {
    /// One entry per coordinate of the first dimension.
    N,
    /// n - 1 entries (auxiliary parameters of the D_n lemmas).
    NMinus1,
    /// One entry per coordinate of the second dimension.
    M,
}

/// A registered identity: metadata plus both-side evaluators (dispatched
/// by id inside the eval module).
#[derive(Clone, Debug)]
pub struct IdentitySpec {
    pub id: IdentityId,
    pub name: &'static str,
    pub family: Family,
    pub domain_kind: DomainKind,
    pub p_zero_only: bool,
    pub two_base: bool,
    /// Second dimension m present (the A_n -> A_m transformations).
    pub uses_m: bool,
    /// Classical specs are single sums with no variable vector.
    pub has_x: bool,
    pub has_y: bool,
    /// Sequence-lemma specs carry an arbitrary complex sequence f_0..f_N.
    pub has_sequence: bool,
    /// Free scalar parameters, in draw order.
    pub free_params: &'static [&'static str],
    /// Parameter solved from the balancing condition, if any.
    pub solved_param: Option<&'static str>,
    /// Derived parameter recorded for convenience (lambda), if any.
    pub derived_param: Option<&'static str>,
    /// Free parameter lists, in draw order.
    pub lists: &'static [(&'static str, ListLen)],
    /// Caps are a scalar (simplex / fixed-norm / sequence / classical)
    /// rather than a per-coordinate rectangle.
    pub scalar_caps: bool,
}

/// The full catalog, in presentation order.
pub fn catalog() -> Vec<IdentitySpec> {
    use DomainKind::*;
    use Family::*;
    use IdentityId::*;
    let spec = |id,
                name,
                family,
                domain_kind,
                p_zero_only,
                free_params: &'static [&'static str],
                lists: &'static [(&'static str, ListLen)]| IdentitySpec {
        id,
        name,
        family,
        domain_kind,
        p_zero_only,
        two_base: false,
        uses_m: false,
        has_x: true,
        has_y: false,
        has_sequence: false,
        free_params,
        solved_param: None,
        derived_param: None,
        lists,
        scalar_caps: matches!(domain_kind, Simplex | EquationInSequence),
    };

    let mut out = vec![
        IdentitySpec {
            has_x: false,
            scalar_caps: true,
            solved_param: Some("e"),
            ..spec(Ft10V9, "FT_10V9", Classical, Rectangle, false, &["a", "b", "c", "d"], &[])
        },
        IdentitySpec {
            has_x: false,
            scalar_caps: true,
            ..spec(JacksonQDougall, "jackson_q_dougall", Classical, Rectangle, true, &["a", "b", "c", "d"], &[])
        },
        IdentitySpec {
            has_x: false,
            scalar_caps: true,
            derived_param: Some("lambda"),
            ..spec(Bailey10Phi9, "bailey_10phi9", Classical, Rectangle, true, &["a", "b", "c", "d", "e", "f"], &[])
        },
        spec(AnJacksonRosengren, "an_jackson_rosengren", An, Rectangle, false, &["a", "b", "c", "d"], &[]),
        spec(AnJacksonRearranged, "an_jackson_rearranged", An, Rectangle, false, &["a", "b", "c", "d"], &[]),
        spec(AnJacksonSchlosser, "an_jackson_schlosser", An, Rectangle, false, &["a", "b", "c", "d"], &[]),
        spec(DnJacksonRosengren64, "dn_jackson_rosengren64", Dn, Rectangle, false, &["a", "b", "c", "d"], &[]),
        spec(DnJacksonRosengren63, "dn_jackson_rosengren63", Dn, Rectangle, false, &["a", "b", "c", "d"], &[]),
        spec(CnJacksonRosengren71, "cn_jackson_rosengren71", Cn, Rectangle, false, &["a", "b", "c", "d"], &[]),
        IdentitySpec {
            derived_param: Some("lambda"),
            ..spec(An12V11New, "an_12V11_new", An, Rectangle, false, &["a", "b", "c", "d", "e", "f"], &[])
        },
        IdentitySpec {
            derived_param: Some("lambda"),
            ..spec(An12V11NewSimplex, "an_12V11_new_simplex", An, Simplex, false, &["a", "b", "c", "d", "e"], &[("f", ListLen::N)])
        },
        spec(AnWatsonBs1, "an_watson_BS1", An, Rectangle, true, &["a", "b", "c", "d", "e"], &[]),
        spec(AnWatsonBs2, "an_watson_BS2", An, Rectangle, true, &["a", "b", "c", "d", "e"], &[]),
        spec(AnWatsonBs3, "an_watson_BS3", An, Rectangle, true, &["a", "b", "c", "d", "e"], &[]),
        spec(AnWatsonBs4, "an_watson_BS4", An, Rectangle, true, &["a", "b", "c", "d", "e"], &[]),
        IdentitySpec {
            derived_param: Some("lambda"),
            ..spec(An10Phi9Interchanged, "an_10phi9_interchanged", An, Rectangle, true, &["a", "b", "c", "d", "e", "f"], &[])
        },
        spec(An6Phi5, "an_6phi5", An, Rectangle, true, &["a", "b", "c"], &[]),
        spec(AnJacksonMilneVwp, "an_jackson_milne_vwp", An, Rectangle, true, &["a", "b", "c", "d"], &[]),
        IdentitySpec {
            scalar_caps: true,
            ..spec(MilneFundamental, "milne_fundamental", An, Simplex, true, &[], &[("a", ListLen::N)])
        },
        IdentitySpec {
            scalar_caps: true,
            ..spec(EFundamental, "e_fundamental", An, Simplex, false, &["b"], &[("a", ListLen::N)])
        },
        IdentitySpec {
            has_sequence: true,
            ..spec(TrivialLemmaAn, "trivial_lemma_an", An, EquationInSequence, false, &["b"], &[("a", ListLen::N)])
        },
        spec(AnJacksonExtraParamSimplex, "an_jackson_extra_param_simplex", An, Simplex, false, &["a", "c", "d", "e"], &[("b", ListLen::N)]),
        spec(AnJacksonExtraParamRect, "an_jackson_extra_param_rect", An, Rectangle, false, &["a", "b", "c", "d", "e"], &[]),
        IdentitySpec {
            uses_m: true,
            has_y: true,
            derived_param: Some("lambda"),
            scalar_caps: true,
            ..spec(AnToAm12V11, "an_to_am_12V11", An, Simplex, false, &["a", "b", "c", "d", "g", "h"], &[("e", ListLen::N), ("f", ListLen::M)])
        },
        IdentitySpec {
            uses_m: true,
            has_y: true,
            derived_param: Some("lambda"),
            ..spec(An12V11RectToSimplex, "an_12V11_rect_to_simplex", An, RectangleToSimplex, false, &["a", "b", "c", "d", "e", "g", "h"], &[("f", ListLen::M)])
        },
        IdentitySpec {
            has_sequence: true,
            ..spec(TrivialLemmaDn, "trivial_lemma_dn", Dn, EquationInSequence, false, &["b"], &[("a", ListLen::NMinus1)])
        },
        IdentitySpec {
            two_base: true,
            scalar_caps: true,
            ..spec(DnJacksonTwoBase, "dn_jackson_two_base", Dn, Simplex, false, &["g", "a", "b", "c", "d"], &[("y", ListLen::NMinus1)])
        },
    ];
    // p=0-only entries live on A_n or the classical line by construction.
    debug_assert!(out
        .iter()
        .all(|s| !s.p_zero_only || matches!(s.family, Family::An | Family::Classical)));
    out.sort_by(|_, _| std::cmp::Ordering::Equal); // stable presentation order
    out
}

/// Looks a spec up by its registered name.
pub fn lookup(name: &str) -> Result<IdentitySpec> {
    catalog()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::Usage(format!("unknown identity: {name}")))
}

/// Caps of a verification run: componentwise rectangle or one scalar.
#[derive(Clone, Debug)]
pub enum Caps {
    Rect(Vec<usize>),
    Scalar(usize),
}

impl Caps {
    pub fn rect(&self) -> MultiIndex {
        match self {
            Caps::Rect(v) => MultiIndex(v.clone()),
            Caps::Scalar(n) => MultiIndex(vec![*n]),
        }
    }

    pub fn scalar(&self) -> usize {
        match self {
            Caps::Rect(v) => v.iter().sum(),
            Caps::Scalar(n) => *n,
        }
    }

    pub fn display(&self) -> String {
        match self {
            Caps::Rect(v) => v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
            Caps::Scalar(n) => n.to_string(),
        }
    }
}

/// Dimensions of a run.
#[derive(Copy, Clone, Debug)]
pub struct Dims {
    pub n: usize,
    pub m: usize,
}

/// One concrete parameter assignment for a spec.
#[derive(Clone, Debug)]
pub struct Assignment {
    pub n: usize,
    pub m: usize,
    pub caps: Caps,
    pub q: C64,
    pub p: C64,
    /// Second base/nome for two-base specs (zero otherwise).
    pub q2: C64,
    pub p2: C64,
    pub x: Vec<C64>,
    pub y: Vec<C64>,
    pub vals: BTreeMap<String, C64>,
    pub lists: BTreeMap<String, Vec<C64>>,
    /// f_0..f_N for the sequence lemmas.
    pub seq: Vec<C64>,
    pub seed: u64,
}

impl Assignment {
    pub fn val(&self, name: &str) -> C64 {
        *self
            .vals
            .get(name)
            .unwrap_or_else(|| panic!("missing parameter {name}"))
    }

    pub fn set(&mut self, name: &str, v: C64) {
        self.vals.insert(name.to_string(), v);
    }
}

/// Fault-injection modes for negative-control runs: each perturbs one
/// exponent or factor of the left-hand summand.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Multiplies the summand by q^{k_1} (an exponent mutation).
    BumpQExponent,
    /// Shifts one Pochhammer index: multiplies the summand by
    /// theta(b q^{|k|}; p)/theta(b; p), i.e. (b;q,p)_{|k|} -> (b;q,p)_{|k|+1}.
    ShiftFactorIndex,
}

/// Draws the raw (pre-rejection) assignment for a spec. Deterministic in
/// (spec, dims, caps, seed, attempt): every attempt advances the same
/// seeded stream.
fn draw_assignment(
    spec: &IdentitySpec,
    dims: Dims,
    caps: &Caps,
    seed: u64,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Result<Assignment> {
    let n = dims.n;
    let m = if spec.uses_m { dims.m } else { 0 };
    let q = sampling::draw_q(rng);
    let p = if spec.p_zero_only { C64::zero() } else { sampling::draw_p(rng) };
    let (q2, p2) = if spec.two_base {
        (sampling::draw_q(rng), sampling::draw_p(rng))
    } else {
        (C64::zero(), C64::zero())
    };
    let x = if spec.has_x { sampling::draw_x(rng, n) } else { Vec::new() };
    let y = if spec.has_y { sampling::draw_x(rng, m) } else { Vec::new() };
    let mut vals = BTreeMap::new();
    for &name in spec.free_params {
        vals.insert(name.to_string(), sampling::draw_param(rng));
    }
    let mut lists = BTreeMap::new();
    for &(name, len) in spec.lists {
        let count = match len {
            ListLen::N => n,
            ListLen::NMinus1 => n - 1,
            ListLen::M => m,
        };
        lists.insert(name.to_string(), (0..count).map(|_| sampling::draw_param(rng)).collect());
    }
    let seq = if spec.has_sequence {
        (0..=caps.scalar()).map(|_| sampling::draw_param(rng)).collect()
    } else {
        Vec::new()
    };
    let mut asg = Assignment {
        n,
        m,
        caps: caps.clone(),
        q,
        p,
        q2,
        p2,
        x,
        y,
        vals,
        lists,
        seq,
        seed,
    };
    solve_constraints(spec, &mut asg)?;
    Ok(asg)
}

/// Computes the solved/derived parameters so the balancing condition
/// holds exactly at working precision.
pub fn solve_constraints(spec: &IdentitySpec, asg: &mut Assignment) -> Result<()> {
    let nonzero = |z: C64, what: &str| -> Result<C64> {
        if z.abs() == 0.0 {
            Err(Error::Constraint(format!("{what} vanishes while solving {}", spec.name)))
        } else {
            Ok(z)
        }
    };
    if spec.solved_param == Some("e") {
        // a^2 q^{N+1} = b c d e.
        let (a, b, c, d) = (asg.val("a"), asg.val("b"), asg.val("c"), asg.val("d"));
        let denom = nonzero(b * c * d, "b c d")?;
        let npow = asg.q.powi(asg.caps.scalar() as i64 + 1);
        asg.set("e", a * a * npow / denom);
    }
    if spec.derived_param == Some("lambda") {
        let (a, b, c, d) = (asg.val("a"), asg.val("b"), asg.val("c"), asg.val("d"));
        let denom = nonzero(b * c * d, "b c d")?;
        asg.set("lambda", asg.q * a * a / denom);
    }
    Ok(())
}

/// Outcome of one two-sided evaluation.
#[derive(Clone, Debug)]
pub struct VerificationResult {
    pub lhs: C64,
    pub rhs: C64,
    pub rel_err: f64,
    pub pass: bool,
    pub rejected_samples: u32,
    pub seed: u64,
    /// True when the result came from the >=106-bit retry.
    pub escalated: bool,
}

fn rel_err_of(lhs: C64, rhs: C64) -> f64 {
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1e-300)
}

/// Evaluates one side at the given precision policy. Errors are poles or
/// domain violations; the sampler treats them as rejections.
pub fn eval_side(
    spec: &IdentitySpec,
    side: Side,
    asg: &Assignment,
    policy: &PrecisionPolicy,
) -> Result<C64> {
    if policy.working_bits > 53 {
        let (v, _) = eval_side_generic::<crate::precision::Dd>(spec, side, asg, policy, None)?;
        Ok(v.to_c64())
    } else {
        let (v, _) = eval_side_generic::<f64>(spec, side, asg, policy, None)?;
        Ok(v.to_c64())
    }
}

/// Generic evaluation returning the value and the smallest denominator
/// factor modulus seen (for pole rejection).
fn eval_side_generic<R: Real>(
    spec: &IdentitySpec,
    side: Side,
    asg: &Assignment,
    policy: &PrecisionPolicy,
    fault: Option<Fault>,
) -> Result<(Cplx<R>, f64)> {
    if spec.p_zero_only && asg.p.abs() != 0.0 {
        return Err(Error::Domain(format!("{} is registered for p = 0 only", spec.name)));
    }
    let env = eval::Env::<R>::new(spec, asg, policy, if side == Side::Lhs { fault } else { None })?;
    let v = eval::eval(spec.id, side, &env)?;
    if !v.is_finite() {
        return Err(Error::Pole("non-finite side value".into()));
    }
    Ok((v, env.min_factor().min(env.worst_cancellation() * CANCEL_SCALE)))
}

/// Catastrophic-cancellation guard: a sum whose value falls below
/// 1e-10 of its largest summand leaves no relative-error scale to
/// verify against, so the sampler treats such points like poles.
/// The rescaling maps the 1e-10 cancellation floor onto the pole
/// threshold so one comparison covers both.
const CANCEL_SCALE: f64 = 1e2;

/// Samples a constraint-satisfying assignment, rejecting draws whose
/// denominator factors come within the pole threshold on either side.
/// Returns the assignment and the rejection count.
pub fn sample(
    spec: &IdentitySpec,
    dims: Dims,
    caps: &Caps,
    seed: u64,
    policy: &PrecisionPolicy,
) -> Result<(Assignment, u32)> {
    let mut rng = sampling::rng_for(seed);
    let mut rejections = 0u32;
    while rejections < 1000 {
        let asg = match draw_assignment(spec, dims, caps, seed, &mut rng) {
            Ok(a) => a,
            Err(_) => {
                rejections += 1;
                continue;
            }
        };
        let ok = [Side::Lhs, Side::Rhs].iter().all(|&side| {
            matches!(
                eval_side_generic::<f64>(spec, side, &asg, policy, None),
                Ok((_, min_factor)) if min_factor > policy.pole_threshold
            )
        });
        if ok {
            return Ok((asg, rejections));
        }
        rejections += 1;
    }
    Err(Error::SamplingExhausted { spec: spec.name.into(), rejections })
}

/// Two-sided check of one assignment at the given tolerance, escalating
/// to >=106 bits (tolerance 1e-20) before reporting a failure.
pub fn verify_identity(
    spec: &IdentitySpec,
    asg: &Assignment,
    tol: f64,
) -> Result<VerificationResult> {
    verify_identity_with_fault(spec, asg, tol, None)
}

pub(crate) fn verify_identity_with_fault(
    spec: &IdentitySpec,
    asg: &Assignment,
    tol: f64,
    fault: Option<Fault>,
) -> Result<VerificationResult> {
    verify_identity_opts(spec, asg, tol, fault, false)
}

pub(crate) fn verify_identity_opts(
    spec: &IdentitySpec,
    asg: &Assignment,
    tol: f64,
    fault: Option<Fault>,
    start_quad: bool,
) -> Result<VerificationResult> {
    if !start_quad {
        let p53 = PrecisionPolicy::double();
        let (lhs, _) = eval_side_generic::<f64>(spec, Side::Lhs, asg, &p53, fault)?;
        let (rhs, _) = eval_side_generic::<f64>(spec, Side::Rhs, asg, &p53, fault)?;
        let (lhs, rhs) = (lhs.to_c64(), rhs.to_c64());
        let rel = rel_err_of(lhs, rhs);
        if rel <= tol {
            return Ok(VerificationResult {
                lhs,
                rhs,
                rel_err: rel,
                pass: true,
                rejected_samples: 0,
                seed: asg.seed,
                escalated: false,
            });
        }
    }
    // Precision escalation: separate roundoff from genuine mismatch.
    let p106 = PrecisionPolicy::quad();
    let (lhs2, _) = eval_side_generic::<crate::precision::Dd>(spec, Side::Lhs, asg, &p106, fault)?;
    let (rhs2, _) = eval_side_generic::<crate::precision::Dd>(spec, Side::Rhs, asg, &p106, fault)?;
    let rel2 = {
        let d = (lhs2 - rhs2).abs().to_f64();
        let s = lhs2.abs().to_f64().max(rhs2.abs().to_f64()).max(1e-300);
        d / s
    };
    Ok(VerificationResult {
        lhs: lhs2.to_c64(),
        rhs: rhs2.to_c64(),
        rel_err: rel2,
        pass: rel2 <= if start_quad { tol.min(1e-12) } else { 1e-20 },
        rejected_samples: 0,
        seed: asg.seed,
        escalated: !start_quad,
    })
}

/// Status of a trial suite.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl SuiteStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Fail => "FAIL",
            SuiteStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Aggregated outcome of a multi-trial verification run.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub name: String,
    pub dims: Dims,
    pub caps: Caps,
    pub trials: u32,
    pub passes: u32,
    pub worst_rel_err: f64,
    pub rejections: u32,
    pub status: SuiteStatus,
}

/// The 53-bit tolerance ladder by dimension.
pub fn ladder_tol(n: usize) -> f64 {
    match n {
        0 | 1 => 1e-9,
        2 => 1e-8,
        _ => 1e-6,
    }
}

/// Runs `trials` independent seeded verifications of one spec.
pub fn verify_trials(
    spec: &IdentitySpec,
    trials: u32,
    base_seed: u64,
    dims: Dims,
    caps: &Caps,
    tol: f64,
) -> SuiteEntry {
    verify_trials_with_fault(spec, trials, base_seed, dims, caps, tol, None)
}

/// As [`verify_trials`] but with an injected fault on the left side -- the
/// negative control guarding against vacuous passes.
pub fn verify_trials_with_fault(
    spec: &IdentitySpec,
    trials: u32,
    base_seed: u64,
    dims: Dims,
    caps: &Caps,
    tol: f64,
    fault: Option<Fault>,
) -> SuiteEntry {
    verify_trials_cfg(spec, trials, base_seed, dims, caps, tol, 53, fault)
}

/// As [`verify_trials`] with an explicit starting precision: above 53
/// bits the trials evaluate directly on the double-double backend.
#[allow(clippy::too_many_arguments)]
pub fn verify_trials_cfg(
    spec: &IdentitySpec,
    trials: u32,
    base_seed: u64,
    dims: Dims,
    caps: &Caps,
    tol: f64,
    precision_bits: u32,
    fault: Option<Fault>,
) -> SuiteEntry {
    let start_quad = precision_bits > 53;
    let policy = PrecisionPolicy::double();
    let mut passes = 0u32;
    let mut rejections = 0u32;
    let mut worst = 0.0f64;
    let mut inconclusive = false;
    let mut failed = false;
    for t in 0..trials {
        let seed = base_seed + t as u64;
        match sample(spec, dims, caps, seed, &policy) {
            Ok((asg, rej)) => {
                rejections += rej;
                match verify_identity_opts(spec, &asg, tol, fault, start_quad) {
                    Ok(res) => {
                        worst = worst.max(res.rel_err);
                        if res.pass {
                            passes += 1;
                        } else {
                            failed = true;
                        }
                    }
                    Err(_) => {
                        // A pole slipping past the sampler counts as a
                        // rejection of this trial, not a failure.
                        rejections += 1;
                        inconclusive = true;
                    }
                }
            }
            Err(Error::SamplingExhausted { rejections: r, .. }) => {
                rejections += r;
                inconclusive = true;
            }
            Err(_) => {
                inconclusive = true;
            }
        }
    }
    let status = if failed {
        SuiteStatus::Fail
    } else if inconclusive {
        SuiteStatus::Inconclusive
    } else {
        SuiteStatus::Pass
    };
    SuiteEntry {
        name: spec.name.to_string(),
        dims,
        caps: caps.clone(),
        trials,
        passes,
        worst_rel_err: worst,
        rejections,
        status,
    }
}

/// Evaluates the sequence lemma of the given family against an arbitrary
/// caller-supplied sequence f_0..f_N.
pub fn check_sequence_lemma(
    family: Family,
    f: &[C64],
    asg: &Assignment,
    tol: f64,
) -> Result<VerificationResult> {
    let spec = match family {
        Family::An => lookup("trivial_lemma_an")?,
        Family::Dn => lookup("trivial_lemma_dn")?,
        _ => return Err(Error::Usage("sequence lemma exists for An and Dn only".into())),
    };
    if f.len() != asg.caps.scalar() + 1 {
        return Err(Error::Usage(format!(
            "sequence length {} does not match cap N = {}",
            f.len(),
            asg.caps.scalar()
        )));
    }
    let mut asg = asg.clone();
    asg.seq = f.to_vec();
    verify_identity(&spec, &asg, tol)
}

/// Default caps for a spec at the given dimension and cap size.
pub fn default_caps(spec: &IdentitySpec, n: usize, cap: usize) -> Caps {
    if spec.scalar_caps || !spec.has_x {
        Caps::Scalar(cap)
    } else {
        Caps::Rect(vec![cap; n])
    }
}

/// Builds the widened evaluation contexts for an assignment.
pub(crate) fn contexts_for<R: Real>(
    asg: &Assignment,
    policy: &PrecisionPolicy,
) -> Result<(Ctx<R>, Option<Ctx<R>>)> {
    let ctx = Ctx::from_c64(asg.q, asg.p, *policy)?;
    let ctx2 = if asg.q2.abs() != 0.0 {
        Some(Ctx::from_c64(asg.q2, asg.p2, *policy)?)
    } else {
        None
    };
    Ok((ctx, ctx2))
}

#[cfg(test)]
mod tests;
