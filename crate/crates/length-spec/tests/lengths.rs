use coxsp_core::*;
use coxsp_length::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn el(sys: &CoxeterSystem, w: &[usize]) -> GroupElement {
    m_reduce(sys, w).unwrap()
}

fn fig_a() -> CoxeterSystem {
    use Label::*;
    CoxeterSystem::from_edges(
        6,
        Infinite,
        &[(0, 1, Finite(5)), (0, 4, Finite(13)), (0, 5, Finite(3)), (1, 2, Finite(6)), (2, 3, Finite(9))],
    )
    .unwrap()
}

fn path() -> CoxeterSystem {
    CoxeterSystem::right_angled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

#[test]
fn odd_component_examples() {
    assert_eq!(odd_components(&fig_a()), vec![vec![0, 1, 2, 3, 4, 5]]);
    assert_eq!(odd_components(&path()), vec![vec![0], vec![1], vec![2], vec![3]]);
    let dinf = CoxeterSystem::dihedral(Label::Infinite);
    assert_eq!(odd_components(&dinf), vec![vec![0], vec![1]]);
    // the label 6 joins two odd-label classes
    assert_eq!(conjugacy_classes(&fig_a()), vec![vec![0, 1, 4, 5], vec![2, 3]]);
}

#[test]
fn evaluate_examples() {
    let dinf = CoxeterSystem::dihedral(Label::Infinite);
    let std = LengthSpec::standard(2);
    assert_eq!(evaluate(&dinf, &std, &el(&dinf, &[0, 1, 0])).unwrap(), q(3));
    let x = LengthSpec::from_integers(&[1, 0]);
    assert_eq!(x.evaluate(&el(&dinf, &[0, 1, 0])), q(2));
    assert_eq!(x.evaluate(&el(&dinf, &[1, 0, 1])), q(1));
    let a2 = CoxeterSystem::dihedral(Label::Finite(3));
    let bad = LengthSpec::from_integers(&[1, 2]);
    assert_eq!(evaluate(&a2, &bad, &GroupElement::identity()), Err(LengthError::Mismatch { i: 0, j: 1 }));
    assert!(LengthSpec::from_integers(&[1, -1]).validate(&dinf).is_err());
    assert!(LengthSpec::standard(3).validate(&dinf).is_err());
    // B2: different weights are allowed on an even label only if the label is infinite
    let b2 = CoxeterSystem::dihedral(Label::Finite(4));
    assert!(LengthSpec::from_integers(&[1, 2]).validate(&b2).is_err());
}

#[test]
fn weight_parsing() {
    let w = parse_weights("1,0,1/2").unwrap();
    assert_eq!(w, vec![q(1), q(0), Q::new(1.into(), 2.into())]);
    assert_eq!(parse_rational("0.25").unwrap(), Q::new(1.into(), 4.into()));
    assert!(parse_weights("1,x").is_err());
    assert!(parse_rational("1/0").is_err());
}

#[test]
fn properness_examples() {
    let sys = path();
    let all = is_proper_indicator(&sys, &[0, 1, 2, 3]).unwrap();
    assert!(all.proper);
    assert_eq!(all.class.order(), Some(1));
    let p = is_proper_indicator(&sys, &[1, 2]).unwrap();
    assert!(!p.proper);
    assert_eq!(p.complement, vec![0, 3]);
    assert!(!is_proper_indicator(&sys, &[1, 3]).unwrap().proper);
    let sys2 = sys.with_label(0, 2, Label::Finite(2)).unwrap();
    let p2 = is_proper_indicator(&sys2, &[1, 3]).unwrap();
    assert!(p2.proper);
    assert_eq!(p2.class.order(), Some(4));
    assert_eq!(
        is_proper_indicator(&fig_a(), &[0]),
        Err(LengthError::SplitsComponent { i: 0 })
    );
}

#[test]
fn finite_parabolic_examples() {
    let dihedral = CoxeterSystem::dihedral(Label::Finite(7));
    assert_eq!(classify_parabolic(&dihedral, &[0, 1]).order(), Some(14));
    assert!(!is_finite_parabolic(&CoxeterSystem::dihedral(Label::Infinite), &[0, 1]));
    let a3 = CoxeterSystem::from_edges(3, Label::Finite(2), &[(0, 1, Label::Finite(3)), (1, 2, Label::Finite(3))])
        .unwrap();
    let c = classify_parabolic(&a3, &[0, 1, 2]);
    assert_eq!(c.components[0].1, ComponentKind::Finite(FiniteType::A(3)));
    assert_eq!(c.order(), Some(24));
}

/// Catalogue verdicts against enumeration, on every generator subset.
fn cross_check(sys: &CoxeterSystem) {
    let n = sys.rank();
    for mask in 0u64..(1 << n) {
        let gens = members(mask);
        let class = classify_parabolic(sys, &gens);
        let sub = if gens.is_empty() { None } else { Some(sys.subsystem(&gens).unwrap()) };
        let counted = match &sub {
            None => Some(1u128),
            Some(s) => match Ball::with_cap(s, 400, 100_000) {
                Ok(b) if b.is_closed() => Some(b.len() as u128),
                _ => None,
            },
        };
        match class.order() {
            Some(o) if o <= 100_000 => assert_eq!(counted, Some(o), "{gens:?} {class}"),
            Some(_) => assert!(class.is_finite()),
            None => {
                assert!(!class.is_finite(), "{gens:?}");
                assert_eq!(counted, None, "{gens:?} {class}");
            }
        }
    }
}

#[test]
fn catalogue_matches_enumeration() {
    use Label::*;
    let systems = vec![
        // D4 plus a pendant
        CoxeterSystem::from_edges(5, Finite(2), &[(0, 1, Finite(3)), (0, 2, Finite(3)), (0, 3, Finite(3)), (3, 4, Finite(3))])
            .unwrap(),
        // H4 path
        CoxeterSystem::from_edges(4, Finite(2), &[(0, 1, Finite(5)), (1, 2, Finite(3)), (2, 3, Finite(3))]).unwrap(),
        // F4 path with an extra node: F4~ is affine
        CoxeterSystem::from_edges(5, Finite(2), &[(0, 1, Finite(3)), (1, 2, Finite(4)), (2, 3, Finite(3)), (3, 4, Finite(3))])
            .unwrap(),
        // B5 and a cycle
        CoxeterSystem::from_edges(5, Finite(2), &[(0, 1, Finite(4)), (1, 2, Finite(3)), (2, 3, Finite(3)), (3, 4, Finite(3)), (0, 4, Finite(3))])
            .unwrap(),
        // mixed labels with infinity
        CoxeterSystem::from_edges(5, Finite(2), &[(0, 1, Finite(6)), (1, 2, Finite(3)), (2, 3, Infinite), (3, 4, Finite(5))])
            .unwrap(),
        CoxeterSystem::from_edges(4, Finite(3), &[]).unwrap(),
        fig_a().subsystem(&[0, 1, 2, 3, 5]).unwrap(),
    ];
    for s in &systems {
        cross_check(s);
    }
}

#[test]
fn e_series_orders() {
    use Label::*;
    // E6: branch arms (1,2,2)
    let e6 = CoxeterSystem::from_edges(
        6,
        Finite(2),
        &[(0, 1, Finite(3)), (1, 2, Finite(3)), (2, 3, Finite(3)), (3, 4, Finite(3)), (2, 5, Finite(3))],
    )
    .unwrap();
    let c = classify_parabolic(&e6, &[0, 1, 2, 3, 4, 5]);
    assert_eq!(c.components[0].1, ComponentKind::Finite(FiniteType::E6));
    assert_eq!(Ball::new(&e6, 40).unwrap().len(), 51_840);
}

fn spec_strategy() -> impl Strategy<Value = (CoxeterSystem, LengthSpec)> {
    let label = prop_oneof![Just(Label::Finite(2)), Just(Label::Finite(3)), Just(Label::Finite(4)), Just(Label::Infinite)];
    (proptest::collection::vec(label, 3), proptest::collection::vec(0i64..4, 3)).prop_map(|(ls, ws)| {
        let sys = CoxeterSystem::from_edges(3, Label::Infinite, &[(0, 1, ls[0]), (0, 2, ls[1]), (1, 2, ls[2])]).unwrap();
        let mut w: Vec<Q> = ws.into_iter().map(|x| Q::new(x.into(), 2.into())).collect();
        for comp in odd_components(&sys) {
            let v = w[comp[0]].clone();
            for &i in &comp {
                w[i] = v.clone();
            }
        }
        (sys, LengthSpec::weighted(w))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn independent_of_reduced_expression((sys, spec) in spec_strategy()) {
        prop_assert!(spec.validate(&sys).is_ok());
        for g in Ball::new(&sys, 4).unwrap().elements() {
            let v = spec.evaluate(&g);
            for w in reduced_words(&sys, &g) {
                prop_assert_eq!(&spec.evaluate_word(&w), &v);
            }
        }
    }

    #[test]
    fn additivity_and_subadditivity((sys, spec) in spec_strategy()) {
        let els: Vec<_> = Ball::new(&sys, 3).unwrap().elements().collect();
        let std = LengthSpec::standard(3);
        for a in &els {
            for b in &els {
                let ab = multiply(&sys, a, b);
                if ab.len() == a.len() + b.len() {
                    prop_assert_eq!(spec.evaluate(&ab), spec.evaluate(a) + spec.evaluate(b));
                }
                prop_assert!(std.evaluate(&ab) <= std.evaluate(a) + std.evaluate(b));
            }
        }
        prop_assert!(spec.evaluate(&GroupElement::identity()).is_zero());
        prop_assert!(LengthSpec::standard(3).weight(0).is_one());
    }
}
