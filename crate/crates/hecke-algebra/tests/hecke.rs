use coxsp_core::*;
use coxsp_gamma::gamma_table;
use coxsp_hecke::*;
use coxsp_length::{conjugacy_classes, LengthSpec, Q};
use coxsp_spectral::schatten_norm_matrix;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use Label::{Finite, Infinite};

const CAP: usize = 1_000_000;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn g(s: usize) -> GroupElement {
    GroupElement::generator(s)
}

fn el(sys: &CoxeterSystem, w: &[usize]) -> GroupElement {
    m_reduce(sys, w).unwrap()
}

fn t(x: GroupElement) -> HeckeElement {
    HeckeElement::basis(x)
}

fn dinf() -> CoxeterSystem {
    CoxeterSystem::dihedral(Infinite)
}

fn path() -> CoxeterSystem {
    CoxeterSystem::right_angled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

fn rank3() -> Vec<CoxeterSystem> {
    vec![
        CoxeterSystem::from_edges(3, Infinite, &[(0, 1, Finite(3)), (1, 2, Finite(4))]).unwrap(),
        CoxeterSystem::from_edges(3, Finite(2), &[(0, 1, Finite(3)), (1, 2, Finite(3))]).unwrap(),
        CoxeterSystem::from_edges(3, Infinite, &[(0, 2, Finite(2))]).unwrap(),
    ]
}

/// Random parameters constant on conjugacy classes.
fn random_params(sys: &CoxeterSystem, rng: &mut ChaCha8Rng) -> HeckeParams {
    let mut qs = vec![Q::zero(); sys.rank()];
    for class in conjugacy_classes(sys) {
        let v = q(rng.gen_range(1..10), rng.gen_range(1..6));
        for i in class {
            qs[i] = v.clone();
        }
    }
    HeckeParams::new(sys, qs).unwrap()
}

fn random_element(ball: &[GroupElement], rng: &mut ChaCha8Rng) -> HeckeElement {
    let mut a = HeckeElement::zero();
    for _ in 0..3 {
        let c = Surd::rational(q(rng.gen_range(-4..5), rng.gen_range(1..4)));
        a.add_term(ball[rng.gen_range(0..ball.len())].clone(), &c);
    }
    a
}

#[test]
fn surd_arithmetic() {
    assert_eq!(squarefree_split(72), (6, 2));
    assert_eq!(squarefree_split(1), (1, 1));
    assert_eq!(squarefree_split(97), (1, 97));
    let r2 = Surd::sqrt(&q(2, 1)).unwrap();
    let r3 = Surd::sqrt(&q(3, 1)).unwrap();
    let r6 = Surd::sqrt(&q(6, 1)).unwrap();
    assert_eq!(&r2 * &r2, Surd::from_integer(2));
    assert_eq!(&r2 * &r3, r6);
    assert_eq!(&r6 * &r3, r2.scale(&q(3, 1)));
    assert_eq!(Surd::sqrt(&q(9, 4)).unwrap(), Surd::rational(q(3, 2)));
    assert!((&r2 - &r2).is_zero());
    assert!((Surd::sqrt(&q(1, 8)).unwrap().to_f64() - (0.125f64).sqrt()).abs() < 1e-15);
    assert!(Surd::sqrt(&q(-1, 1)).is_err());
}

#[test]
fn params() {
    let sys = dinf();
    let p = HeckeParams::new(&sys, vec![q(4, 1), q(1, 4)]).unwrap();
    assert_eq!(p.p(0), &Surd::rational(q(3, 2)));
    assert_eq!(p.p(1), &Surd::rational(q(-3, 2)));
    assert_eq!(p.p_squared(0), &q(9, 4));
    let p = HeckeParams::new(&sys, vec![q(2, 1), q(3, 2)]).unwrap();
    assert_eq!(&p.p(0).scale(&q(2, 1)), &Surd::sqrt(&q(2, 1)).unwrap());
    assert_eq!(&(p.p(1) * p.p(1)), &Surd::rational(p.p_squared(1).clone()));
    assert_eq!(p.p_squared(1), &q(1, 6));
    assert!(HeckeParams::uniform(&sys, q(1, 1)).unwrap().is_trivial());
    assert_eq!(HeckeParams::new(&sys, vec![q(0, 1), q(1, 1)]), Err(HeckeError::NotPositive { i: 0 }));
    let a2 = CoxeterSystem::dihedral(Finite(3));
    assert_eq!(HeckeParams::new(&a2, vec![q(2, 1), q(3, 1)]), Err(HeckeError::NotInvariant { i: 0, j: 1 }));
    // B2: the two generators are not conjugate
    let b2 = CoxeterSystem::dihedral(Finite(4));
    assert!(HeckeParams::new(&b2, vec![q(2, 1), q(3, 1)]).is_ok());
}

#[test]
fn conjugacy_classes_match_search() {
    let mut systems = rank3();
    systems.push(CoxeterSystem::dihedral(Finite(4)));
    systems.push(CoxeterSystem::dihedral(Finite(5)));
    systems.push(CoxeterSystem::from_edges(3, Finite(2), &[(0, 1, Finite(4)), (1, 2, Finite(3))]).unwrap());
    for sys in systems {
        let classes = conjugacy_classes(&sys);
        for s in 0..sys.rank() {
            for t in 0..sys.rank() {
                let same = classes.iter().any(|c| c.contains(&s) && c.contains(&t));
                assert_eq!(conjugator(&sys, s, t, 6).unwrap().is_some(), same, "s={s} t={t}");
            }
        }
    }
}

#[test]
fn multiplication_rules() {
    let sys = dinf();
    let p = HeckeParams::uniform(&sys, q(4, 1)).unwrap();
    let ps = p.p(0).clone();
    let mut expect = t(GroupElement::identity());
    expect.add_term(g(0), &ps);
    assert_eq!(hecke_multiply(&sys, &p, &t(g(0)), &t(g(0))), expect);
    let st = el(&sys, &[0, 1]);
    let mut expect = t(g(1));
    expect.add_term(st.clone(), &ps);
    assert_eq!(hecke_multiply(&sys, &p, &t(g(0)), &t(st.clone())), expect);
    assert_eq!(hecke_trace(&hecke_multiply(&sys, &p, &t(g(0)), &t(g(0)))), Surd::one());
    assert_eq!(hecke_trace(&t(GroupElement::identity())), Surd::one());
    assert!(hecke_trace(&t(st)).is_zero());
}

#[test]
fn group_degeneration() {
    for sys in rank3().into_iter().chain([dinf(), path()]) {
        let ball: Vec<GroupElement> = Ball::new(&sys, 3).unwrap().elements().collect();
        let p = HeckeParams::trivial(sys.rank());
        for a in &ball {
            for b in &ball {
                let prod = hecke_multiply(&sys, &p, &t(a.clone()), &t(b.clone()));
                assert_eq!(prod, t(sys.multiply(a, b)));
            }
        }
    }
}

#[test]
fn associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for sys in rank3().into_iter().chain([dinf()]) {
        let ball: Vec<GroupElement> = Ball::new(&sys, 2).unwrap().elements().collect();
        let ops = Ball::new(&sys, 8).unwrap();
        let p = random_params(&sys, &mut rng);
        for x in &ball {
            for y in &ball {
                for z in &ball {
                    let (a, b, c) = (t(x.clone()), t(y.clone()), t(z.clone()));
                    let left = hecke_multiply(&ops, &p, &hecke_multiply(&ops, &p, &a, &b), &c);
                    let right = hecke_multiply(&ops, &p, &a, &hecke_multiply(&ops, &p, &b, &c));
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn adjoints_and_traces() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let sys = &rank3()[0];
    let ball: Vec<GroupElement> = Ball::new(sys, 3).unwrap().elements().collect();
    let st = el(sys, &[0, 1]);
    assert_eq!(hecke_adjoint(sys, &t(st)), t(el(sys, &[1, 0])));
    assert_eq!(hecke_adjoint(sys, &t(GroupElement::identity())), t(GroupElement::identity()));
    for _ in 0..40 {
        let p = random_params(sys, &mut rng);
        let (a, b) = (random_element(&ball, &mut rng), random_element(&ball, &mut rng));
        let ab = hecke_multiply(sys, &p, &a, &b);
        let rhs = hecke_multiply(sys, &p, &hecke_adjoint(sys, &b), &hecke_adjoint(sys, &a));
        assert_eq!(hecke_adjoint(sys, &ab), rhs);
        // the T basis is orthonormal for τ, whatever q is
        let tr = hecke_trace(&hecke_multiply(sys, &p, &a, &hecke_adjoint(sys, &a)));
        let sum: Q = a.terms().map(|(_, c)| c.as_rational().unwrap().pow(2)).sum();
        assert!(sum >= Q::zero());
        assert_eq!(tr, Surd::rational(sum.clone()));
        let trivial = hecke_trace(&hecke_multiply(sys, &HeckeParams::trivial(3), &a, &hecke_adjoint(sys, &a)));
        assert_eq!(trivial, Surd::rational(sum));
    }
}

#[test]
fn operator_matrices() {
    let sys = dinf();
    let p = HeckeParams::uniform(&sys, q(4, 1)).unwrap();
    let m = hecke_operator_matrix(&sys, &p, &t(g(0)), 2, CAP).unwrap();
    let idx = |x: &GroupElement| m.op.index_of(x).unwrap();
    let (e, s) = (idx(&GroupElement::identity()), idx(&g(0)));
    assert_eq!(m.op.matrix[(s, e)], 1.0);
    assert_eq!(m.op.matrix[(e, s)], 1.0);
    assert_eq!(m.op.matrix[(s, s)], 1.5);
    assert_eq!(m.op.matrix.column(e).iter().filter(|x| **x != 0.0).count(), 1);
    assert!(!m.leaking.is_empty());
    let trivial = hecke_operator_matrix(&sys, &HeckeParams::trivial(2), &t(g(1)), 3, CAP).unwrap();
    assert!(trivial.op.matrix.iter().all(|x| *x == 0.0 || *x == 1.0));
    for sys in rank3().into_iter().chain([path()]) {
        let p = random_params(&sys, &mut ChaCha8Rng::seed_from_u64(9));
        for s in 0..sys.rank() {
            let m = hecke_operator_matrix(&sys, &p, &t(g(s)), 4, CAP).unwrap();
            let k = m.op.interior_len();
            let mm = &m.op.matrix * &m.op.matrix;
            let ps = p.p(s).to_f64();
            for j in 0..m.op.elements.iter().filter(|x| x.len() + 1 < 4).count() {
                for i in 0..m.op.dim() {
                    let id = if i == j { 1.0 } else { 0.0 };
                    assert!((mm[(i, j)] - id - ps * m.op.matrix[(i, j)]).abs() < 1e-9);
                }
            }
            for i in 0..k {
                for j in 0..k {
                    assert_eq!(m.op.matrix[(i, j)], m.op.matrix[(j, i)]);
                }
            }
        }
    }
}

#[test]
fn psi_hecke_examples() {
    let sys = dinf();
    let spec = LengthSpec::standard(2);
    let p = HeckeParams::uniform(&sys, q(4, 1)).unwrap();
    let e = GroupElement::identity();
    let mut expect = HeckeElement::zero();
    expect.add_term(e.clone(), &Surd::from_integer(-2));
    expect.add_term(g(0), &Surd::rational(q(-3, 2)));
    assert_eq!(psi_hecke(&sys, &p, &spec, 0, 0, &e).unwrap(), expect);
    assert_eq!(psi_hecke_defining(&sys, &p, &spec, 0, 0, &e).unwrap(), expect);
    let tr = HeckeParams::trivial(2);
    let mut expect = HeckeElement::zero();
    expect.add_term(e.clone(), &Surd::from_integer(-2));
    assert_eq!(psi_hecke(&sys, &tr, &spec, 0, 0, &e).unwrap(), expect);
    // uv ≠ vw
    assert!(psi_hecke(&sys, &p, &spec, 0, 1, &el(&sys, &[1, 0])).unwrap().is_zero());
    assert!(psi_hecke(&sys, &p, &spec, 0, 0, &el(&sys, &[1, 0])).unwrap().is_zero());
}

#[test]
fn simplified_formula_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for sys in rank3().into_iter().chain([dinf()]) {
        let n = sys.rank();
        let ball = Ball::new(&sys, 8).unwrap();
        let elems: Vec<GroupElement> = (0..ball.shell(4).end).map(|x| ball.element(x)).collect();
        for _ in 0..2 {
            let p = random_params(&sys, &mut rng);
            let mut w = vec![Q::zero(); n];
            for class in coxsp_length::odd_components(&sys) {
                let v = q(rng.gen_range(0..4), rng.gen_range(1..3));
                for i in class {
                    w[i] = v.clone();
                }
            }
            for spec in [LengthSpec::standard(n), LengthSpec::weighted(w)] {
                for u in 0..n {
                    for ww in 0..n {
                        for v in &elems {
                            let a = psi_hecke(&ball, &p, &spec, u, ww, v).unwrap();
                            let b = psi_hecke_defining(&ball, &p, &spec, u, ww, v).unwrap();
                            assert_eq!(a, b, "u={u} w={ww} v={v}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn s2_examples() {
    let sys = dinf();
    let spec = LengthSpec::standard(2);
    let p = HeckeParams::uniform(&sys, q(4, 1)).unwrap();
    let r = hecke_s2_norm(&sys, &p, &spec, 0, 0, 6, CAP).unwrap();
    assert_eq!(r.exact, q(25, 2));
    assert_eq!(r.bound, q(25, 2));
    assert!(r.holds() && r.support_complete && !r.positivity_assumed);
    let r = hecke_s2_norm(&sys, &HeckeParams::trivial(2), &spec, 0, 0, 6, CAP).unwrap();
    assert_eq!(r.exact, q(8, 1));
    // ψ_{S∖I} with I = {s2, s3} a clique of the path system
    let pth = path();
    let spec = LengthSpec::indicator(4, &[0, 3]);
    let p = HeckeParams::uniform(&pth, q(3, 1)).unwrap();
    let r = hecke_s2_norm(&pth, &p, &spec, 1, 1, 8, CAP).unwrap();
    assert!(r.holds());
    let t = gamma_table(&pth, &spec, &g(1), &g(1), 8, CAP).unwrap();
    assert!(t.support_complete);
}

#[test]
fn s2_matches_matrix_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for sys in rank3().into_iter().chain([dinf()]) {
        let n = sys.rank();
        for _ in 0..3 {
            let p = random_params(&sys, &mut rng);
            let spec = LengthSpec::standard(n);
            let (u, w) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let m = psi_hecke_matrix(&sys, &p, &spec, u, w, 6, CAP).unwrap();
            let r = hecke_s2_norm(&sys, &p, &spec, u, w, m.op.interior_radius, CAP).unwrap();
            assert!(r.holds());
            let s2 = schatten_norm_matrix(&m.op.interior_matrix(), 2.0);
            let exact = r.exact.to_f64().unwrap();
            assert!((s2 * s2 - exact).abs() <= 1e-8 * exact.max(1.0), "{s2} {exact}");
        }
    }
}
