//! Property tests for the structural invariants of the kernel and the
//! index domains.

use elliptica::elliptic_core::{extended_product, Ctx};
use elliptica::multi_index::{IndexDomain, MultiIndex};
use elliptica::precision::{Cplx, PrecisionPolicy, C64};

use proptest::prelude::*;

fn ctx(qm: f64, qphase: f64, pm: f64, pphase: f64) -> Ctx<f64> {
    Ctx::new(
        Cplx::widen(C64::from_polar(qm, qphase)),
        Cplx::widen(C64::from_polar(pm, pphase)),
        PrecisionPolicy::double(),
    )
    .unwrap()
}

proptest! {
    // The extended product satisfies prod_{lo}^{m+1} = prod_{lo}^{m} * term(m+1)
    // across all three cases of its definition.
    #[test]
    fn extended_product_recurrence(lo in -5i64..5, m in -6i64..6, a in 0.2f64..2.0, b in 0.1f64..0.9) {
        let term = |j: i64| C64::from_polar(a + 0.13 * (j as f64).abs(), b * j as f64);
        let left = extended_product(term, lo, m + 1).unwrap();
        let right = extended_product(term, lo, m).unwrap() * term(m + 1);
        prop_assert!((left - right).abs() / left.abs().max(1.0) < 1e-12);
    }

    // Rectangle and simplex iteration: exact cardinality, strictly
    // increasing lexicographic order, zero tuple first.
    #[test]
    fn domain_iteration_lex_and_complete(caps in proptest::collection::vec(0usize..4, 1..4), cap in 0usize..6) {
        let n = caps.len();
        for domain in [IndexDomain::Rectangle(MultiIndex(caps.clone())), IndexDomain::Simplex { dim: n, cap }] {
            let all: Vec<MultiIndex> = domain.iterate().collect();
            prop_assert_eq!(all.len() as u64, domain.cardinality());
            prop_assert!(all[0].is_zero());
            for w in all.windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
        }
    }

    // Splitting identity (a;q,p)_{n+k} = (a;q,p)_n (a q^n;q,p)_k over all
    // integer pairs in [-4, 4].
    #[test]
    fn qp_poch_splitting(n in -4i64..=4, k in -4i64..=4,
                         qm in 0.3f64..0.7, qp in 0.0f64..std::f64::consts::TAU,
                         pm in 0.05f64..0.3, pp in 0.0f64..std::f64::consts::TAU,
                         am in 0.5f64..2.0, ap in 0.1f64..6.0) {
        let c = ctx(qm, qp, pm, pp);
        let a = Cplx::widen(C64::from_polar(am, ap));
        let lhs = c.qp_poch(a, n + k).unwrap();
        let rhs = c.qp_poch(a, n).unwrap() * c.qp_poch(a * c.qi(n), k).unwrap();
        prop_assert!((lhs - rhs).abs() / lhs.abs().max(1e-300) < 1e-10);
    }
}
