use coxsp_core::{CoxeterSystem, Label};
use coxsp_diagram::*;

use Label::{Finite, Infinite};

fn fig_a() -> CoxeterSystem {
    CoxeterSystem::from_edges(
        6,
        Infinite,
        &[(0, 1, Finite(5)), (0, 4, Finite(13)), (0, 5, Finite(3)), (1, 2, Finite(6)), (2, 3, Finite(9))],
    )
    .unwrap()
}

fn fig_b() -> CoxeterSystem {
    fig_a().with_label(3, 4, Finite(4)).unwrap()
}

fn fig_c() -> CoxeterSystem {
    fig_a().with_label(4, 5, Finite(5)).unwrap()
}

fn path() -> CoxeterSystem {
    CoxeterSystem::right_angled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

fn four_cycle() -> CoxeterSystem {
    CoxeterSystem::right_angled(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
}

fn one_based(p: &[usize]) -> Vec<usize> {
    p.iter().map(|i| i - 1).collect()
}

#[test]
fn validator_examples() {
    let b = one_based(&[3, 2, 3, 4, 4, 5, 4, 3]);
    assert!(is_parity_path(&fig_b(), &b).unwrap());
    assert!(is_cyclic_parity_path(&fig_b(), &b).unwrap());
    let c = one_based(&[1, 5, 5, 6, 6, 1]);
    assert!(is_cyclic_parity_path(&fig_c(), &c).unwrap());
    let dinf = CoxeterSystem::dihedral(Infinite);
    assert_eq!(
        check_parity_path(&dinf, &[1, 0]).unwrap(),
        Err(ParityViolation { step: 0, kind: Violation::InfiniteLabel })
    );
    assert_eq!(check_parity_path(&dinf, &[1]), Err(DiagramError::OddLength(1)));
    // the caption's path is not cyclic in the unmodified system
    assert!(!is_cyclic_parity_path(&fig_a(), &b).unwrap());
    assert_eq!(
        check_parity_path(&fig_a(), &b).unwrap(),
        Err(ParityViolation { step: 2, kind: Violation::InfiniteLabel })
    );
}

#[test]
fn blocks() {
    let sys = fig_a();
    let bl = block(&sys, 1, 2).unwrap();
    assert_eq!((bl.a, bl.b, bl.c, bl.d, bl.k), (1, 1, 2, 2, 3));
    assert_eq!(bl.r, vec![1, 2, 1, 2, 1]);
    let bl = block(&sys, 0, 5).unwrap();
    assert_eq!((bl.b, bl.d), (5, 0));
    assert_eq!(bl.r, vec![0, 5]);
    assert!(block(&sys, 0, 2).is_none());
}

#[test]
fn six_generator_systems() {
    assert!(has_cyclic_parity_path(&fig_a()).is_none());
    for sys in [fig_b(), fig_c()] {
        let w = has_cyclic_parity_path(&sys).expect("cyclic path");
        assert!(is_cyclic_parity_path(&sys, &w.path.0).unwrap(), "{}", w.path);
    }
    let w = has_cyclic_parity_path(&fig_c()).unwrap();
    assert_eq!(w.obstruction, Obstruction::OddCycle(vec![0, 4, 5]));
    assert_eq!(w.path.0, one_based(&[1, 5, 5, 6, 6, 1]));
}

#[test]
fn verdicts() {
    let dinf = CoxeterSystem::dihedral(Infinite);
    assert_eq!(decide_gradient_sp(&dinf).verdict, Verdict::Yes);
    let p = decide_gradient_sp(&path());
    assert_eq!(p.verdict, Verdict::No);
    assert_eq!(p.reason, Reason::CommutingTriple { r: 1, s: 0, t: 2 });
    let a = decide_gradient_sp(&fig_a());
    assert_eq!(a.verdict, Verdict::Yes);
    assert_eq!(a.reason, Reason::NoCyclicParityPath);
    for sys in [dinf, path(), fig_a(), fig_b(), fig_c()] {
        assert_eq!(is_small_at_infinity(&sys).verdict, decide_gradient_sp(&sys).verdict);
    }
    // odd cycle avoiding 2 labels
    assert_eq!(decide_gradient_sp(&fig_c()).verdict, Verdict::No);
    match decide_gradient_sp(&fig_b()).reason {
        Reason::CyclicAvoidingTwo(p) => assert!(is_cyclic_parity_path(&fig_b(), &p.0).unwrap()),
        r => panic!("{r:?}"),
    }
    // A1 x A1 x A2: the only cyclic paths run through labels 2
    let mixed = CoxeterSystem::from_edges(3, Finite(2), &[(1, 2, Finite(3))]).unwrap();
    let d = decide_gradient_sp(&mixed);
    assert_eq!(d.verdict, Verdict::Unknown);
    match d.reason {
        Reason::CyclicOnlyThroughTwo(p) => assert!(is_cyclic_parity_path(&mixed, &p.0).unwrap()),
        r => panic!("{r:?}"),
    }
}

#[test]
fn hyperbolicity() {
    assert_eq!(is_hyperbolic_right_angled(&four_cycle()).unwrap(), Some([0, 2, 1, 3]));
    assert_eq!(is_hyperbolic_right_angled(&path()).unwrap(), None);
    let clique = CoxeterSystem::from_edges(4, Finite(2), &[]).unwrap();
    assert_eq!(is_hyperbolic_right_angled(&clique).unwrap(), None);
    assert_eq!(is_hyperbolic_right_angled(&fig_a()), Err(DiagramError::NotRightAngled));
}

#[test]
fn clique_lists() {
    let dinf = CoxeterSystem::dihedral(Infinite);
    assert_eq!(cliques(&dinf, false).unwrap(), vec![vec![], vec![0], vec![1]]);
    let c = cliques(&path(), false).unwrap();
    for e in [vec![0, 1], vec![1, 2], vec![2, 3]] {
        assert!(c.contains(&e));
    }
    assert!(!c.contains(&vec![0, 2]));
    assert_eq!(
        cliques(&four_cycle(), true).unwrap(),
        vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
    );
    assert!(cliques(&fig_a(), false).is_err());
}

#[test]
fn interface_sets() {
    assert_eq!(hecke_interface_set(&path()), InterfaceSet { members: vec![1, 2], is_clique: true });
    let line = CoxeterSystem::right_angled(4, &[(0, 2), (1, 3)]).unwrap();
    assert_eq!(hecke_interface_set(&line), InterfaceSet { members: vec![], is_clique: true });
    assert_eq!(
        hecke_interface_set(&four_cycle()),
        InterfaceSet { members: vec![0, 1, 2, 3], is_clique: false }
    );
}

#[test]
fn dot_output() {
    let d = to_dot(&fig_b());
    assert_eq!(d.matches(" -- ").count(), 15);
    assert_eq!(d.matches("[label=\"s").count(), 6);
    assert!(d.contains("n1 -- n2 [label=\"5\", color=blue]"));
    assert!(d.contains("n4 -- n5 [label=\"4\", color=orange]"));
    assert!(d.contains("n1 -- n3 [label=\"inf\", color=black, style=dashed]"));
    assert_eq!(d, to_dot(&fig_b()));
}

/// Exhaustive search over parity paths of at most `max_pairs` pairs, straight
/// from the definition. Paths are extended one pair at a time; the set of
/// reachable last pairs per start is tracked so every path is covered.
pub fn brute_force_cyclic(sys: &CoxeterSystem, max_pairs: usize) -> bool {
    let n = sys.rank();
    let d = |j: usize, i: usize| match sys.label(i, j) {
        Finite(m) if m % 2 == 0 => j,
        _ => i,
    };
    let ok = |j: usize, i: usize| i != j && sys.label(i, j).is_finite();
    let step = |(j, i): (usize, usize), (j2, i2): (usize, usize)| {
        ok(j2, i2) && j2 == d(j, i) && i2 != i && i2 != j
    };
    let states: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..n).map(move |i| (j, i))).filter(|&(j, i)| ok(j, i)).collect();
    for &start in &states {
        let mut ends = vec![start];
        for _ in 0..max_pairs {
            if ends.iter().any(|&e| step(e, start)) {
                return true;
            }
            let mut next: Vec<(usize, usize)> =
                ends.iter().flat_map(|&e| states.iter().copied().filter(move |&s| step(e, s))).collect();
            next.sort_unstable();
            next.dedup();
            ends = next;
        }
    }
    false
}

fn all_systems(rank: usize, labels: &[Label], mut f: impl FnMut(CoxeterSystem)) {
    let pairs: Vec<(usize, usize)> = (0..rank).flat_map(|i| (i + 1..rank).map(move |j| (i, j))).collect();
    let total = labels.len().pow(pairs.len() as u32);
    for code in 0..total {
        let mut c = code;
        let edges: Vec<_> = pairs
            .iter()
            .map(|&(i, j)| {
                let l = labels[c % labels.len()];
                c /= labels.len();
                (i, j, l)
            })
            .collect();
        f(CoxeterSystem::from_edges(rank, Infinite, &edges).unwrap());
    }
}

#[test]
fn characterization_matches_brute_force_small_ranks() {
    let labels = [Finite(2), Finite(3), Finite(4), Infinite];
    for rank in 1..=3 {
        all_systems(rank, &labels, |sys| {
            let structural = has_cyclic_parity_path(&sys);
            assert_eq!(structural.is_some(), brute_force_cyclic(&sys, 2 * rank * rank));
            assert_eq!(structural.is_some(), find_cyclic_path(&sys, false).is_some());
            if let Some(w) = structural {
                assert!(is_cyclic_parity_path(&sys, &w.path.0).unwrap());
            }
        });
    }
}

#[test]
fn characterization_on_sampled_rank_five() {
    let labels = [Finite(2), Finite(3), Finite(4), Infinite, Finite(5), Finite(6)];
    let mut state = 0x9e3779b97f4a7c15u64;
    for _ in 0..400 {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                edges.push((i, j, labels[(state % labels.len() as u64) as usize]));
            }
        }
        let sys = CoxeterSystem::from_edges(5, Infinite, &edges).unwrap();
        let structural = has_cyclic_parity_path(&sys);
        assert_eq!(structural.is_some(), brute_force_cyclic(&sys, 50));
        if let Some(w) = &structural {
            assert!(is_cyclic_parity_path(&sys, &w.path.0).unwrap());
        }
        let d = decide_gradient_sp(&sys);
        if let Reason::CyclicAvoidingTwo(p) = &d.reason {
            assert!(is_cyclic_parity_path(&sys, &p.0).unwrap());
        }
        assert_eq!(d.verdict == Verdict::Yes, structural.is_none() || sys.is_right_angled() && commuting_triple(&sys).is_none());
    }
}

#[test]
fn triple_criterion_agrees_where_parity_route_is_conclusive() {
    for rank in 2..=4 {
        all_systems(rank, &[Finite(2), Infinite], |sys| {
            if has_cyclic_parity_path(&sys).is_none() {
                assert!(commuting_triple(&sys).is_none());
                assert_eq!(decide_gradient_sp(&sys).verdict, Verdict::Yes);
            }
        });
    }
}
