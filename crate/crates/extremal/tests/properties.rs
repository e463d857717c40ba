mod common;

use common::*;
use extremal_lie::liealg::{extremal_functional, is_extremal};
use extremal_lie::linalg::dot;
use extremal_lie::rootdata::CartanType;
use extremal_lie::rootgroups::RootGroup;
use extremal_lie::smallgen::{
    build_m, exp_transform_general, normalize, scale_params, triangle_params_of, TriangleParams,
};
use extremal_lie::{Gf, Gf5, Gf7, Scalar, Q};
use num_traits::Zero;
use proptest::prelude::*;

fn ok(c: Check) -> Result<(), TestCaseError> {
    c.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witt_dimensions(r in 1usize..=3, d in 1usize..=7) {
        ok(witt_check(r, d))?;
    }

    #[test]
    fn validators_agree_with_direct_evaluation(which in 0usize..4, seed in any::<u64>()) {
        let algs = validator_algebras();
        ok(validator_check(&algs[which], seed))?;
    }

    #[test]
    fn bracket_of_orthogonal_extremals(seed in any::<u64>(), which in 0usize..3) {
        let (ty, n) = [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2)][which];
        ok(cor_bracket_extremal_check::<Q>(ty, n, seed))?;
        ok(cor_bracket_extremal_check::<Gf7>(ty, n, seed))?;
    }

    #[test]
    fn sandwich_brackets_stay_sandwiches(seed in any::<u64>(), r in 2usize..=4) {
        ok(cor_sandwich_check::<Q>(r, seed))?;
        ok(cor_sandwich_check::<Gf5>(r, seed))?;
    }

    #[test]
    fn exp_preserves_extremal_form(seed in any::<u64>(), which in 0usize..3) {
        let (ty, n) = [(CartanType::A, 2), (CartanType::C, 3), (CartanType::D, 4)][which];
        ok(form_preservation_check::<Q>(ty, n, seed))?;
        ok(form_preservation_check::<Gf5>(ty, n, seed))?;
    }
}

fn field_axioms<S: Scalar>(a: S, b: S, c: S) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    prop_assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    prop_assert_eq!(
        (a.clone() * b.clone()) * c.clone(),
        a.clone() * (b.clone() * c.clone())
    );
    prop_assert_eq!(a.clone() - a.clone(), S::zero());
    if let Some(i) = a.inv() {
        prop_assert_eq!(a.clone() * i, S::one());
    } else {
        prop_assert!(a.is_zero());
    }
    let sq = a.clone() * a.clone();
    let r = sq.sqrt().expect("squares have square roots");
    prop_assert_eq!(r.clone() * r, sq);
    prop_assert_eq!(S::from_repr(&a.to_repr()).unwrap(), a);
    Ok(())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in -50i64..50, b in -50i64..50, c in 1i64..20, d in 1i64..20) {
        field_axioms(Q::from_ratio(a, c), Q::from_ratio(b, d), Q::from_ratio(a + b, c * d))?;
    }

    #[test]
    fn prime_field_axioms(a in 0i64..13, b in 0i64..13, c in 0i64..13) {
        field_axioms(Gf::<13>::new(a), Gf::<13>::new(b), Gf::<13>::new(c))?;
        field_axioms(Gf5::new(a), Gf5::new(b), Gf5::new(c))?;
    }

    #[test]
    fn square_roots_over_gf7(a in 0i64..7) {
        let x = Gf7::new(a);
        let squares: Vec<Gf7> = (0..7).map(|k| Gf7::new(k * k)).collect();
        match x.sqrt() {
            Some(r) => prop_assert_eq!(r * r, x),
            None => prop_assert!(!squares.contains(&x)),
        }
    }
}

fn params(v: [i64; 4]) -> TriangleParams<Q> {
    TriangleParams::from_i64(v[0], v[1], v[2], v[3])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// The closed-form label update agrees with moving the generator inside
    /// the algebra built from the labels and reading the labels off again.
    #[test]
    fn exp_transform_matches_algebra(
        v in prop::array::uniform4(-3i64..=3),
        base in 0usize..3,
        off in 1usize..3,
        s in -3i64..=3,
    ) {
        let p = params(v);
        let norm = normalize(&p);
        prop_assume!(norm.extension_required.is_none());
        let t = build_m(&norm.final_params).unwrap();
        let l = &t.algebra;
        let target = (base + off) % 3;
        let mut gens: Vec<Vec<Q>> = (0..3).map(|i| l.basis_vector(i)).collect();
        let s = Q::from_i64(s);
        let u = RootGroup::new(l, &gens[base]).unwrap();
        gens[target] = u.at(&s).matrix.mul_vec(&gens[target]);
        let read = triangle_params_of(l, &gens[0], &gens[1], &gens[2]).unwrap();
        prop_assert_eq!(read, exp_transform_general(&norm.final_params, base, target, &s));
    }

    /// Normalization replays, kills the central label, and its case is the
    /// number of nonzero edges; rescaling the start does not change the case.
    #[test]
    fn normalization_is_consistent(v in prop::array::uniform4(-4i64..=4), k in 1i64..=3) {
        let p = params(v);
        let t = normalize(&p);
        prop_assert_eq!(t.replay(&p).unwrap(), t.final_params.clone());
        prop_assert!(t.final_params.central.is_zero());
        prop_assert_eq!(t.case, t.final_params.nonzero_edges());
        if p.central.is_zero() {
            let k = Q::from_i64(k);
            let scaled = scale_params(&p, &k, &k, &Q::from_i64(1)).unwrap();
            prop_assert_eq!(normalize(&scaled).case, t.case);
        }
    }

    /// In the algebra built from normalized labels the generators are extremal
    /// and carry exactly those labels.
    #[test]
    fn built_algebra_has_requested_labels(v in prop::array::uniform4(-3i64..=3)) {
        let norm = normalize(&params(v));
        prop_assume!(norm.extension_required.is_none());
        let t = build_m(&norm.final_params).unwrap();
        let l = &t.algebra;
        let g: Vec<Vec<Q>> = (0..3).map(|i| l.basis_vector(i)).collect();
        prop_assert!(g.iter().all(|x| is_extremal(l, x)));
        prop_assert_eq!(triangle_params_of(l, &g[0], &g[1], &g[2]).unwrap(), norm.final_params.clone());
        let fx = extremal_functional(l, &g[0]).unwrap().unwrap();
        prop_assert_eq!(dot(&fx, &g[1]), norm.final_params.edge_xy.clone());
    }
}
