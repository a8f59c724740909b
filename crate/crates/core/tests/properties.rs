//! Randomized invariants. Structures come from seeded generators; proptest
//! drives the seeds and shrinks toward small ones.

use proptest::prelude::*;

use homalg::algebra::{check_law, check_law_with, commutator_bracket, yau_twist, AlgebraLaw};
use homalg::bialgebra::*;
use homalg::catalog;
use homalg::coalgebra::{check_coalgebra_law, dualize, CoalgebraLaw};
use homalg::law::CheckOptions;
use homalg::linear::{basis_vec, coordinates, LinearMap, Subgroup};
use homalg::random;
use homalg::scalar::{parse_scalar, ParamSet, Scalar};
use homalg::sigma::*;

fn params() -> (ParamSet, Scalar, Scalar) {
    let mut ps = ParamSet::new();
    let a = Scalar::param(ps.declare("a", true).unwrap());
    let b = Scalar::param(ps.declare("b", true).unwrap());
    (ps, a, b)
}

/// `(c0 + c1 a + c2 b + c3 ab) / (d0 + d1 a + d2 b)` with a nonzero denominator.
fn scalar() -> impl Strategy<Value = Scalar> {
    (prop::array::uniform4(-4i64..=4), prop::array::uniform3(-3i64..=3)).prop_filter_map("zero denominator", |(n, d)| {
        let (_, a, b) = params();
        let num = Scalar::int(n[0]) + &(&Scalar::int(n[1]) * &a) + &(&Scalar::int(n[2]) * &b) + &(&(&Scalar::int(n[3]) * &a) * &b);
        let den = Scalar::int(d[0]) + &(&Scalar::int(d[1]) * &a) + &(&Scalar::int(d[2]) * &b);
        (!den.is_zero()).then(|| num.checked_div(&den).unwrap())
    })
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Laurent::zero(), |acc, (c, e)| acc.add(&Laurent::monomial(Scalar::int(c), e)))
    })
}

fn q() -> Scalar {
    let mut ps = ParamSet::new();
    Scalar::param(ps.declare("q", true).unwrap())
}

fn laurent_ring() -> impl Strategy<Value = LaurentSigma> {
    (1i64..=3, -1i64..=1, prop_oneof![Just(1i64), Just(2), Just(-3)])
        .prop_map(|(s, k, eta)| LaurentSigma::new(q(), s, k, Scalar::int(eta)).unwrap())
}

/// Rings with `ψ(t^N) = 0`: either `ψ(t)` has no constant term or `q1` is a root of unity.
fn truncated_ring() -> impl Strategy<Value = TruncatedSigma> {
    (2usize..=4, prop::collection::vec(-2i64..=2, 4), prop::collection::vec(-2i64..=2, 4), any::<bool>()).prop_filter_map(
        "gate rejects",
        |(n, sg, ps, root)| {
            let mut sigma: Vec<Scalar> = sg[..n].iter().map(|&c| Scalar::int(c)).collect();
            let mut psi: Vec<Scalar> = ps[..n].iter().map(|&c| Scalar::int(c)).collect();
            sigma[0] = Scalar::zero();
            if root {
                sigma = vec![Scalar::zero(), TruncatedSigma::root_of_unity_q1(n)];
                psi.truncate(1);
            } else {
                psi[0] = Scalar::zero();
            }
            TruncatedSigma::new(n, sigma, psi).ok()
        },
    )
}

fn truncated_elem(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-3i64..=3, n).prop_map(|v| v.into_iter().map(Scalar::int).collect())
}

/// Catalog bialgebras with an antipode; matrix coordinates have none.
fn hopf() -> Vec<HomBialgebra> {
    catalog_bialgebras().into_iter().filter(|h| h.kind == BialgebraKind::UnitalCounital && !h.name.starts_with("matrix")).collect()
}

fn catalog_bialgebras() -> Vec<HomBialgebra> {
    let mut out = catalog::bialgebras();
    out.push(group_algebra(2, 1).unwrap().as_unital_counital().unwrap());
    out.push(group_algebra(4, 3).unwrap());
    out.push(free_nc(2, 1, None).unwrap().as_unital_counital().unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn printed_scalars_parse_back(x in scalar()) {
        let (ps, _, _) = params();
        prop_assert_eq!(parse_scalar(&x.to_string(), &ps).unwrap(), x);
    }

    #[test]
    fn laurent_twisted_leibniz(r in laurent_ring(), f in laurent(), g in laurent()) {
        prop_assert!(leibniz_defect(&r, &f, &g).is_zero());
    }

    #[test]
    fn truncated_twisted_leibniz(r in truncated_ring(), seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = r.n;
        let elem = |rng: &mut random::Rng| -> Vec<Scalar> { random::random_matrix(rng, n, 3, 0.7).column(0) };
        let (f, g) = (elem(&mut rng), elem(&mut rng));
        prop_assert!(r.is_zero(&leibniz_defect(&r, &f, &g)));
    }

    #[test]
    fn composition_form_matches_closed_form(r in laurent_ring(), a in laurent(), b in laurent(), f in laurent()) {
        let closed = bracket_sigma(&r, &a, &b).mul(&r.psi(&f));
        prop_assert_eq!(bracket_composition_apply(&r, &a, &b, &f), closed);
    }

    #[test]
    fn truncated_composition_form(r in truncated_ring(), a in truncated_elem(4), b in truncated_elem(4), f in truncated_elem(4)) {
        let cut = |v: &Vec<Scalar>| v[..r.n].to_vec();
        let (a, b, f) = (cut(&a), cut(&b), cut(&f));
        let closed = r.mul(&bracket_sigma(&r, &a, &b), &r.psi(&f));
        prop_assert_eq!(bracket_composition_apply(&r, &a, &b, &f), closed);
    }

    #[test]
    fn bracket_is_skew(r in laurent_ring(), a in laurent(), b in laurent()) {
        prop_assert!(bracket_sigma(&r, &a, &b).add(&bracket_sigma(&r, &b, &a)).is_zero());
        prop_assert!(bracket_sigma(&r, &a, &a).is_zero());
    }

    #[test]
    fn six_term_holds_with_found_delta(r in truncated_ring(), a in truncated_elem(4), b in truncated_elem(4), c in truncated_elem(4)) {
        if let Ok(d) = find_delta_truncated(&r) {
            if d.report.holds {
                let cut = |v: &Vec<Scalar>| v[..r.n].to_vec();
                prop_assert!(r.is_zero(&six_term(&r, &d.delta, &cut(&a), &cut(&b), &cut(&c))));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn commutator_of_twist_is_hom_lie(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let (a, e) = random::associative_with_endo(&mut rng, 4);
        let t = yau_twist(&a, &e).unwrap();
        prop_assert!(check_law_with(&t, &AlgebraLaw::HomAssociative, &CheckOptions::exact()).unwrap().holds);
        let l = commutator_bracket(&t).unwrap();
        prop_assert!(check_law_with(&l, &AlgebraLaw::HomLie, &CheckOptions::exact()).unwrap().holds);
    }

    #[test]
    fn g1_is_hom_associativity(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = if seed % 2 == 0 { random::arbitrary_algebra(&mut rng, 3) } else { random::g_hom_associative(&mut rng, Subgroup::G1) };
        let g1 = check_law(&a, &AlgebraLaw::GHomAssociative(Subgroup::G1)).unwrap();
        let assoc = check_law(&a, &AlgebraLaw::HomAssociative).unwrap();
        prop_assert_eq!(g1.holds, assoc.holds);
    }

    #[test]
    fn skew_g5_is_hom_jacobi(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = if seed % 3 == 0 { random::g_hom_associative(&mut rng, Subgroup::G5) } else { random::skew_bracket(&mut rng, 4) };
        let g5 = check_law(&a, &AlgebraLaw::GHomAssociative(Subgroup::G5)).unwrap();
        let lie = check_law(&a, &AlgebraLaw::HomLie).unwrap();
        prop_assert_eq!(g5.holds, lie.holds);
    }

    #[test]
    fn duality_agrees_on_unverified_algebras(seed in any::<u64>(), g in 1usize..=6) {
        let g = Subgroup::from_index(g).unwrap();
        let mut rng = random::rng(seed);
        let a = random::arbitrary_algebra(&mut rng, 3);
        let alg = check_law(&a, &AlgebraLaw::GHomAssociative(g)).unwrap().holds;
        let co = check_coalgebra_law(&dualize(&a), &CoalgebraLaw::GHomCoalgebra(g)).unwrap().holds;
        prop_assert_eq!(alg, co);
    }

    #[test]
    fn double_transpose_is_identity(seed in any::<u64>(), n in 1usize..=5) {
        let m = random::random_matrix(&mut random::rng(seed), n, 5, 0.6);
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn basis_change_preserves_hom_associativity(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = random::g_hom_associative(&mut rng, Subgroup::G1);
        let n = a.dim();
        let (p, pinv) = random::unimodular(&mut rng, n);
        let b = random::change_basis(&a, &p, &pinv);
        prop_assert!(check_law(&b, &AlgebraLaw::HomAssociative).unwrap().holds);
    }
}

#[test]
fn antipode_is_pinned_and_unique() {
    for h in hopf() {
        let a = find_antipode(&h).unwrap();
        assert!(a.unique, "{}", h.name);
        let (rows, rhs) = antipode_system(&h);
        let n = h.dim();
        let x: Vec<Scalar> = (0..n * n).map(|i| a.s.get(i / n, i % n).clone()).collect();
        let solved = rows.iter().zip(&rhs).all(|(r, b)| {
            let lhs: Scalar = r.iter().zip(&x).map(|(c, v)| c * v).sum();
            &lhs == b
        });
        assert!(solved, "{}", h.name);
    }
}

#[test]
fn convolution_inverse_of_identity() {
    for h in hopf() {
        let a = find_antipode(&h).unwrap();
        let conv = ConvolutionAlgebra::new(&h);
        let id = LinearMap::identity(h.dim());
        let unit = conv.unit().unwrap();
        assert_eq!(conv.convolve(&a.s, &id), unit, "{}", h.name);
        assert_eq!(conv.convolve(&id, &a.s), unit, "{}", h.name);
    }
}

#[test]
fn primitives_sit_inside_generalized_primitives() {
    for h in catalog_bialgebras() {
        let Ok(p) = primitive_elements(&h, PrimitiveKind::Primitive) else { continue };
        let g = primitive_elements(&h, PrimitiveKind::GeneralizedPrimitive).unwrap();
        for v in &p.basis {
            assert!(coordinates(&g.basis, v).is_some(), "{}", h.name);
        }
        if p.closed && p.alpha_stable {
            assert!(p.hom_lie.as_ref().is_some_and(|r| r.holds), "{}", h.name);
        }
    }
}

#[test]
fn generalized_primitive_commutators_stay_inside() {
    for h in catalog_bialgebras() {
        let Ok(g) = primitive_elements(&h, PrimitiveKind::GeneralizedPrimitive) else { continue };
        for x in &g.basis {
            for y in &g.basis {
                let c: Vec<Scalar> = h.mu.apply(x, y).iter().zip(h.mu.apply(y, x)).map(|(u, v)| u - &v).collect();
                assert!(coordinates(&g.basis, &c).is_some() || !g.closed, "{}", h.name);
            }
        }
    }
}

#[test]
fn dual_of_hopf_has_transposed_antipode() {
    // Truncated products do not dualize to truncated products.
    for h in hopf().into_iter().filter(|h| h.grading.is_none()) {
        let a = find_antipode(&h).unwrap();
        let d = dual_bialgebra(&h);
        assert!(all_hold(&check_bialgebra(&d, false).unwrap()), "{}", h.name);
        let da = find_antipode(&d).unwrap();
        assert_eq!(da.s, a.s.transpose(), "{}", h.name);
        assert_eq!(dual_bialgebra(&d).mu, h.mu);
    }
}

#[test]
fn unit_is_group_like_and_sums_are_not() {
    for h in catalog_bialgebras().into_iter().filter(|h| h.kind == BialgebraKind::UnitalCounital) {
        let u = h.unit.clone().unwrap();
        assert!(group_like(&h, &u).group_like, "{}", h.name);
    }
    let g = group_algebra(3, 1).unwrap();
    let sum: Vec<Scalar> = basis_vec(3, 0).iter().zip(basis_vec(3, 2)).map(|(a, b)| a + &b).collect();
    assert!(!group_like(&g, &sum).group_like);
}

#[test]
fn broken_compatibility_is_witnessed() {
    let mut h = group_algebra(3, 1).unwrap().as_unital_counital().unwrap();
    // e1 e2 = e0 becomes e1 e2 = e1 + e2, which is not group-like.
    h.mu.set(1, 2, 0, Scalar::zero());
    h.mu.set(1, 2, 1, Scalar::one());
    h.mu.set(1, 2, 2, Scalar::one());
    let reps = check_bialgebra(&h, false).unwrap();
    let compat = reps.iter().find(|r| r.law.contains("compat")).expect("compatibility law is reported");
    assert!(!compat.holds);
    assert!(compat.witnesses.iter().any(|w| w.indices == vec![1, 2]));
}

#[test]
fn cyclic_group_convolution_by_hand() {
    let h = group_algebra(2, 1).unwrap().as_unital_counital().unwrap();
    let conv = ConvolutionAlgebra::new(&h);
    // On group-like bases f ⋆ g acts pointwise: (f ⋆ g)(e_x) = f(e_x) g(e_x).
    let p = LinearMap::diagonal(&[Scalar::one(), Scalar::zero()]);
    assert_eq!(conv.convolve(&p, &p), p);
    let id = LinearMap::identity(2);
    let square = LinearMap::from_columns(2, vec![basis_vec(2, 0), basis_vec(2, 0)]);
    assert_eq!(conv.convolve(&id, &id), square);
}

#[test]
fn trivial_bialgebra_antipode_is_identity() {
    let h = group_algebra(1, 1).unwrap().as_unital_counital().unwrap();
    let a = find_antipode(&h).unwrap();
    assert!(a.s.is_identity() && a.unique);
}

#[test]
fn matrix_coordinates_have_no_antipode() {
    let h = matrix_coords(2, 1, None).unwrap().as_unital_counital().unwrap();
    assert!(matches!(find_antipode(&h), Err(homalg::error::Error::Precondition { .. })));
}
